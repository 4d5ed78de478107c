//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! library's filtration search or orbit enumeration.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use nctop_core::quiver::QuiverKind;
use nctop_core::{
    iso_test, quotient_action, DimVector, Matrix, Prime, Quiver, Representation, SimpleId,
};

pub type Vecs = BTreeSet<Vec<u32>>;

/// Every vector of `F_p^n`.
pub fn all_vectors(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every subspace of `F_p^n`, as its full set of vectors.
pub fn all_subspaces(p: u32, n: usize) -> Vec<Vecs> {
    let vs = all_vectors(p, n);
    let mut out: BTreeSet<Vecs> = BTreeSet::new();
    let mut frontier: Vec<Vecs> = vec![BTreeSet::from([vec![0; n]])];
    while let Some(s) = frontier.pop() {
        if !out.insert(s.clone()) {
            continue;
        }
        for v in &vs {
            if !s.contains(v) {
                frontier.push(close(p, &s, v));
            }
        }
    }
    out.into_iter().collect()
}

fn close(p: u32, s: &Vecs, v: &[u32]) -> Vecs {
    let mut out = BTreeSet::new();
    for x in s {
        for c in 0..p {
            out.insert(x.iter().zip(v).map(|(a, b)| (a + c * b) % p).collect());
        }
    }
    out
}

pub fn apply(m: &Matrix, v: &[u32], p: u32) -> Vec<u32> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.raw(r, c) * v[c]).sum::<u32>() % p)
        .collect()
}

/// Arrow-stable tuples of subspaces, one per vertex.
pub fn subreps(m: &Representation) -> Vec<Vec<Vecs>> {
    let p = m.modulus().get();
    let q = m.quiver();
    let per_vertex: Vec<Vec<Vecs>> = m.dim().0.iter().map(|&n| all_subspaces(p, n)).collect();
    let mut tuples: Vec<Vec<Vecs>> = vec![Vec::new()];
    for choices in &per_vertex {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                choices.iter().map(move |c| {
                    let mut t = t.clone();
                    t.push(c.clone());
                    t
                })
            })
            .collect();
    }
    tuples
        .into_iter()
        .filter(|t| {
            q.arrows().iter().enumerate().all(|(k, a)| {
                t[a.source]
                    .iter()
                    .all(|v| t[a.target].contains(&apply(m.map(k), v, p)))
            })
        })
        .collect()
}

fn size(t: &[Vecs]) -> usize {
    t.iter().map(|s| s.len()).product()
}

fn subset(a: &[Vecs], b: &[Vecs]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.is_subset(y))
}

/// Label of the one-dimensional quotient `big / small`, or `None` if it is not simple.
fn factor(m: &Representation, small: &[Vecs], big: &[Vecs]) -> Option<usize> {
    let p = m.modulus().get();
    if size(big) != size(small) * p as usize {
        return None;
    }
    let v = (0..big.len()).find(|&i| big[i].len() > small[i].len())?;
    match m.quiver().kind() {
        QuiverKind::Acyclic => Some(v),
        QuiverKind::OneLoop => {
            let x = big[0].iter().find(|x| !small[0].contains(*x))?;
            let lx = apply(m.map(0), x, p);
            (0..p)
                .find(|&lam| {
                    let d: Vec<u32> = lx
                        .iter()
                        .zip(x)
                        .map(|(a, b)| (a + p * p - lam * b) % p)
                        .collect();
                    small[0].contains(&d)
                })
                .map(|l| l as usize)
        }
    }
}

/// Factor sequences of all maximal chains of subrepresentations with simple quotients.
pub fn chain_sequences(m: &Representation) -> BTreeSet<Vec<usize>> {
    let subs = subreps(m);
    let zero = subs.iter().position(|t| size(t) == 1).unwrap();
    let p = m.modulus().get() as usize;
    let full = subs
        .iter()
        .position(|t| {
            t.iter()
                .zip(&m.dim().0)
                .all(|(s, &n)| s.len() == p.pow(n as u32))
        })
        .unwrap();
    let mut out = BTreeSet::new();
    let mut stack = vec![(zero, Vec::new())];
    while let Some((at, seq)) = stack.pop() {
        if at == full {
            out.insert(seq);
            continue;
        }
        for (j, t) in subs.iter().enumerate() {
            if subset(&subs[at], t) {
                if let Some(f) = factor(m, &subs[at], t) {
                    let mut s = seq.clone();
                    s.push(f);
                    stack.push((j, s));
                }
            }
        }
    }
    out
}

/// Every representation (not just classes) of the given dimension vector.
pub fn all_reps(q: &Arc<Quiver>, p: Prime, dim: &DimVector) -> Vec<Representation> {
    let shapes: Vec<(usize, usize)> = q
        .arrows()
        .iter()
        .map(|a| (dim.0[a.target], dim.0[a.source]))
        .collect();
    let total: usize = shapes.iter().map(|(r, c)| r * c).sum();
    all_vectors(p.get(), total)
        .into_iter()
        .map(|entries| {
            let mut at = 0;
            let maps = shapes
                .iter()
                .map(|&(r, c)| {
                    let m = Matrix::new(p, r, c, entries[at..at + r * c].to_vec()).unwrap();
                    at += r * c;
                    m
                })
                .collect();
            Representation::new(q.clone(), p, dim.clone(), maps).unwrap()
        })
        .collect()
}

fn basis_of(p: u32, s: &Vecs) -> Vec<Vec<u32>> {
    let mut basis: Vec<Vec<u32>> = Vec::new();
    let mut span: Vecs = BTreeSet::from([vec![0; s.iter().next().map_or(0, |v| v.len())]]);
    for v in s {
        if !span.contains(v) {
            span = close(p, &span, v);
            basis.push(v.clone());
        }
    }
    basis
}

/// Coordinates of `v` in `basis`, by search.
fn coords(p: u32, basis: &[Vec<u32>], v: &[u32]) -> Vec<u32> {
    all_vectors(p, basis.len())
        .into_iter()
        .find(|c| {
            let mut w = vec![0; v.len()];
            for (ci, b) in c.iter().zip(basis) {
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi = (*wi + ci * bi) % p;
                }
            }
            w == v
        })
        .expect("vector in span")
}

/// The subrepresentation on a stable tuple and the matching quotient.
pub fn sub_and_quotient(m: &Representation, t: &[Vecs]) -> (Representation, Representation) {
    let p = m.modulus();
    let pp = p.get();
    let bases: Vec<Vec<Vec<u32>>> = t.iter().map(|s| basis_of(pp, s)).collect();
    let q = m.quiver();
    let sub_dim = DimVector(bases.iter().map(|b| b.len()).collect());
    let sub_maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let cols: Vec<Vec<u32>> = bases[a.source]
                .iter()
                .map(|b| coords(pp, &bases[a.target], &apply(m.map(k), b, pp)))
                .collect();
            Matrix::from_columns(p, bases[a.target].len(), &cols)
        })
        .collect();
    let sub = Representation::new(q.clone(), p, sub_dim, sub_maps).unwrap();
    let quot_maps: Vec<Matrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| quotient_action(m.map(k), &bases[a.source], &bases[a.target]).unwrap())
        .collect();
    let quot_dim = DimVector(
        m.dim()
            .0
            .iter()
            .zip(&bases)
            .map(|(n, b)| n - b.len())
            .collect(),
    );
    let quot = Representation::new(q.clone(), p, quot_dim, quot_maps).unwrap();
    (sub, quot)
}

/// `dim Ext¹(s, t)` as `log_p |Z| / |B|`: `Z` counts representations on `t ⊕ s` (split
/// per vertex) in which the `t` part is a subrepresentation isomorphic to `t` with
/// quotient isomorphic to `s`; `B` counts those conjugate to `t ⊕ s` by a unipotent
/// base change.
pub fn ext_by_counting(q: &Arc<Quiver>, p: Prime, s: SimpleId, t: SimpleId) -> usize {
    let st = Representation::simple(q.clone(), p, s).unwrap();
    let tt = Representation::simple(q.clone(), p, t).unwrap();
    let sum = tt.direct_sum(&st).unwrap();
    let dim = sum.dim().clone();
    let t_dim = tt.dim().clone();

    let mut z = 0usize;
    let mut boundaries = BTreeSet::new();
    for x in all_reps(q, p, &dim) {
        // the t part is the first t_dim coordinates at each vertex
        let t_part: Vec<Vecs> = dim
            .0
            .iter()
            .zip(&t_dim.0)
            .map(|(&n, &k)| {
                all_vectors(p.get(), n)
                    .into_iter()
                    .filter(|v| v[k..].iter().all(|&c| c == 0))
                    .collect()
            })
            .collect();
        let stable = q.arrows().iter().enumerate().all(|(a, arr)| {
            t_part[arr.source]
                .iter()
                .all(|v| t_part[arr.target].contains(&apply(x.map(a), v, p.get())))
        });
        if !stable {
            continue;
        }
        let (sub, quot) = sub_and_quotient(&x, &t_part);
        if iso_test(&sub, &tt).unwrap() && iso_test(&quot, &st).unwrap() {
            z += 1;
        }
    }
    // unipotent conjugates of t ⊕ s: g_v = [[I, h_v], [0, I]]
    let blocks: Vec<usize> = dim
        .0
        .iter()
        .zip(&t_dim.0)
        .map(|(&n, &k)| k * (n - k))
        .collect();
    let total: usize = blocks.iter().sum();
    for hs in all_vectors(p.get(), total) {
        let mut at = 0;
        let gs: Vec<Matrix> = dim
            .0
            .iter()
            .zip(&t_dim.0)
            .map(|(&n, &k)| {
                let mut g = Matrix::identity(p, n);
                for r in 0..k {
                    for c in k..n {
                        g.set(r, c, hs[at]);
                        at += 1;
                    }
                }
                g
            })
            .collect();
        let maps: Vec<Vec<Vec<u32>>> = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                gs[arr.target]
                    .mul(sum.map(a))
                    .unwrap()
                    .mul(&gs[arr.source].inverse().unwrap())
                    .unwrap()
                    .to_rows()
            })
            .collect();
        boundaries.insert(maps);
    }
    let ratio = z / boundaries.len();
    assert_eq!(z % boundaries.len(), 0);
    let mut d = 0;
    let mut r = 1;
    while r < ratio {
        r *= p.get() as usize;
        d += 1;
    }
    assert_eq!(r, ratio);
    d
}
