//! Representations of quivers over `F_p` and single filtration steps.

use std::fmt;
use std::sync::Arc;

use crate::error::RepError;
use crate::fp::Prime;
use crate::matrix::{quotient_action, Matrix, Vector};
use crate::quiver::{Quiver, QuiverKind, SimpleId};

/// Per-vertex dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut d = vec![0; n];
        d[i] = 1;
        DimVector(d)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All dimension vectors of `n` entries with total at most `max_total`, ordered
    /// by total, then lexicographically descending from the first vertex.
    pub fn all_up_to(n: usize, max_total: usize) -> Vec<DimVector> {
        let mut out = Vec::new();
        for total in 0..=max_total {
            let mut cur = Vec::with_capacity(n);
            compositions(n, total, &mut cur, &mut out);
        }
        out
    }
}

fn compositions(n: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<DimVector>) {
    if cur.len() + 1 == n {
        cur.push(remaining);
        out.push(DimVector(cur.clone()));
        cur.pop();
        return;
    }
    if n == 0 {
        if remaining == 0 {
            out.push(DimVector(Vec::new()));
        }
        return;
    }
    for first in (0..=remaining).rev() {
        cur.push(first);
        compositions(n, remaining - first, cur, out);
        cur.pop();
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// A representation: for every arrow `a: i → j` a matrix of shape `α_j × α_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    quiver: Arc<Quiver>,
    p: Prime,
    dim: DimVector,
    maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        quiver: Arc<Quiver>,
        p: Prime,
        dim: DimVector,
        maps: Vec<Matrix>,
    ) -> Result<Self, RepError> {
        if dim.0.len() != quiver.vertex_count() {
            return Err(RepError::DimLength {
                expected: quiver.vertex_count(),
                found: dim.0.len(),
            });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(RepError::Mismatch);
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            let (rows, cols) = (dim.0[a.target], dim.0[a.source]);
            if m.rows() != rows || m.cols() != cols {
                return Err(RepError::Shape {
                    arrow: a.id.clone(),
                    rows,
                    cols,
                    found_rows: m.rows(),
                    found_cols: m.cols(),
                });
            }
            if m.modulus() != p {
                return Err(RepError::Modulus(a.id.clone()));
            }
        }
        Ok(Representation {
            quiver,
            p,
            dim,
            maps,
        })
    }

    /// All arrow maps zero.
    pub fn zero_maps(quiver: Arc<Quiver>, p: Prime, dim: DimVector) -> Result<Self, RepError> {
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| {
                Matrix::zeros(
                    p,
                    *dim.0.get(a.target).unwrap_or(&0),
                    *dim.0.get(a.source).unwrap_or(&0),
                )
            })
            .collect();
        Representation::new(quiver, p, dim, maps)
    }

    /// The simple `S`: `S_i` at a vertex, or the loop acting by `λ`.
    pub fn simple(quiver: Arc<Quiver>, p: Prime, s: SimpleId) -> Result<Self, RepError> {
        if s.0 >= quiver.simple_count(p) {
            return Err(RepError::UnknownSimple(s.0));
        }
        match quiver.kind() {
            QuiverKind::Acyclic => {
                let dim = DimVector::unit(quiver.vertex_count(), s.0);
                Representation::zero_maps(quiver, p, dim)
            }
            QuiverKind::OneLoop => {
                let m = Matrix::new(p, 1, 1, vec![s.0 as u32])?;
                Representation::new(quiver, p, DimVector(vec![1]), vec![m])
            }
        }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn dim(&self) -> &DimVector {
        &self.dim
    }

    pub fn total_dim(&self) -> usize {
        self.dim.total()
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    /// Number of free matrix entries in `rep_α Q`.
    pub fn entry_count(quiver: &Quiver, dim: &DimVector) -> usize {
        quiver
            .arrows()
            .iter()
            .map(|a| dim.0[a.source] * dim.0[a.target])
            .sum()
    }

    fn same_space(&self, other: &Representation) -> bool {
        self.p == other.p && self.quiver == other.quiver
    }

    /// Transposed maps on the opposite quiver (the dual representation).
    pub fn dual(&self) -> Representation {
        Representation {
            quiver: Arc::new(self.quiver.opposite()),
            p: self.p,
            dim: self.dim.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Canonical basis of the embeddings of `s` into `self`, inside the coordinate
    /// space of the supporting vertex. Empty means `s` is not a subrepresentation.
    pub fn simple_sub_space(&self, s: SimpleId) -> Result<Vec<Vector>, RepError> {
        if s.0 >= self.quiver.simple_count(self.p) {
            return Err(RepError::UnknownSimple(s.0));
        }
        match self.quiver.kind() {
            QuiverKind::Acyclic => {
                let v = s.0;
                let n = self.dim.0[v];
                let leaving: Vec<&Matrix> = self
                    .quiver
                    .arrows()
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.source == v)
                    .map(|(i, _)| &self.maps[i])
                    .collect();
                Ok(Matrix::vstack(self.p, n, &leaving).kernel_basis())
            }
            QuiverKind::OneLoop => Ok(self.maps[0].shift_diagonal(s.0 as u32).kernel_basis()),
        }
    }

    fn is_simple_line(&self, s: SimpleId, line: &[u32]) -> bool {
        let v = self.quiver.simple_vertex(s);
        if line.len() != self.dim.0[v] || line.iter().all(|&x| x == 0) {
            return false;
        }
        match self.quiver.kind() {
            QuiverKind::Acyclic => self
                .quiver
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.source == v)
                .all(|(i, _)| self.maps[i].mul_vec(line).iter().all(|&x| x == 0)),
            QuiverKind::OneLoop => self.maps[0]
                .shift_diagonal(s.0 as u32)
                .mul_vec(line)
                .iter()
                .all(|&x| x == 0),
        }
    }

    /// The quotient of `self` by the copy of `s` spanned by `line`.
    pub fn quotient_by_simple_line(
        &self,
        s: SimpleId,
        line: &[u32],
    ) -> Result<Representation, RepError> {
        if s.0 >= self.quiver.simple_count(self.p) {
            return Err(RepError::UnknownSimple(s.0));
        }
        if !self.is_simple_line(s, line) {
            return Err(RepError::NotEmbedding);
        }
        let v = self.quiver.simple_vertex(s);
        let line = vec![line.to_vec()];
        let none: Vec<Vector> = Vec::new();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (a, m) in self.quiver.arrows().iter().zip(&self.maps) {
            let src = if a.source == v { &line } else { &none };
            let tgt = if a.target == v { &line } else { &none };
            maps.push(quotient_action(m, src, tgt)?);
        }
        let mut dim = self.dim.clone();
        dim.0[v] -= 1;
        Representation::new(self.quiver.clone(), self.p, dim, maps)
    }

    /// Lines (normalized: first nonzero coefficient 1) of the span of `basis`.
    pub fn lines(p: Prime, basis: &[Vector]) -> Vec<Vector> {
        let d = basis.len();
        if d == 0 {
            return Vec::new();
        }
        let n = basis[0].len();
        let mut out = Vec::new();
        let mut coeffs = vec![0u32; d];
        // coefficient vectors whose leading entry is 1
        for lead in 0..d {
            let tail = d - lead - 1;
            let count = p.checked_pow(tail).expect("small dimension");
            for idx in 0..count {
                coeffs.iter_mut().for_each(|c| *c = 0);
                coeffs[lead] = 1;
                let mut rest = idx;
                for c in coeffs[lead + 1..].iter_mut() {
                    *c = (rest % p.get() as u64) as u32;
                    rest /= p.get() as u64;
                }
                let mut v = vec![0u32; n];
                for (c, b) in coeffs.iter().zip(basis) {
                    if *c == 0 {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = p.add(*x, p.mul(*c, *y));
                    }
                }
                out.push(v);
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, RepError> {
        if !self.same_space(other) {
            return Err(RepError::Mismatch);
        }
        Ok(Representation {
            quiver: self.quiver.clone(),
            p: self.p,
            dim: self.dim.add(&other.dim),
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.block_diag(b))
                .collect(),
        })
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}", self.dim)?;
        for (a, m) in self.quiver.arrows().iter().zip(&self.maps) {
            write!(f, " {}={}", a.id, m)?;
        }
        Ok(())
    }
}
