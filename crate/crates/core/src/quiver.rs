//! Finite quivers: acyclic ones and the single one-loop quiver.

use std::collections::HashSet;
use std::fmt;

use crate::error::QuiverError;
use crate::fp::Prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuiverKind {
    Acyclic,
    /// One vertex carrying one loop; the desk model of `k[x]`.
    OneLoop,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// Unvalidated description of a quiver, by vertex names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QuiverSpec {
    pub name: String,
    pub vertices: Vec<String>,
    /// `(from, to, id)`
    pub arrows: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    name: String,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    kind: QuiverKind,
}

/// Index of a simple representation.
///
/// For acyclic quivers this is the vertex index of `S_i`; for the one-loop quiver it
/// is the eigenvalue `λ ∈ F_p` by which the loop acts on `S_λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleId(pub usize);

pub fn build_quiver(spec: &QuiverSpec) -> Result<Quiver, QuiverError> {
    let mut seen = HashSet::new();
    for v in &spec.vertices {
        if !seen.insert(v.as_str()) {
            return Err(QuiverError::DuplicateId(v.clone()));
        }
    }
    let index = |name: &str| {
        spec.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| QuiverError::UnknownVertex(name.to_string()))
    };
    let mut arrow_ids = HashSet::new();
    let mut arrows = Vec::with_capacity(spec.arrows.len());
    for (from, to, id) in &spec.arrows {
        if !arrow_ids.insert(id.as_str()) {
            return Err(QuiverError::DuplicateId(id.clone()));
        }
        arrows.push(Arrow {
            id: id.clone(),
            source: index(from)?,
            target: index(to)?,
        });
    }

    let loops = arrows.iter().filter(|a| a.source == a.target).count();
    let kind = if loops > 0 {
        if spec.vertices.len() == 1 && arrows.len() == 1 {
            QuiverKind::OneLoop
        } else {
            return Err(QuiverError::UnsupportedShape(
                "loops are only supported on the single one-loop quiver".into(),
            ));
        }
    } else {
        if let Some(v) = find_cycle(spec.vertices.len(), &arrows) {
            return Err(QuiverError::CycleError(spec.vertices[v].clone()));
        }
        QuiverKind::Acyclic
    };

    Ok(Quiver {
        name: spec.name.clone(),
        vertices: spec.vertices.clone(),
        arrows,
        kind,
    })
}

/// Kahn's algorithm; returns a vertex left over on a cycle.
fn find_cycle(n: usize, arrows: &[Arrow]) -> Option<usize> {
    let mut indeg = vec![0usize; n];
    for a in arrows {
        indeg[a.target] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = stack.pop() {
        removed += 1;
        for a in arrows.iter().filter(|a| a.source == v) {
            indeg[a.target] -= 1;
            if indeg[a.target] == 0 {
                stack.push(a.target);
            }
        }
    }
    if removed == n {
        None
    } else {
        (0..n).find(|&v| indeg[v] > 0)
    }
}

impl Quiver {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> QuiverKind {
        self.kind
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Number of arrows `from → to`.
    pub fn arrow_count(&self, from: usize, to: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.source == from && a.target == to)
            .count()
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            name: format!("{}^op", self.name),
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    id: a.id.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
            kind: self.kind,
        }
    }

    /// Simples in canonical order: vertex order, or increasing eigenvalue.
    pub fn simples(&self, p: Prime) -> Vec<SimpleId> {
        match self.kind {
            QuiverKind::Acyclic => (0..self.vertices.len()).map(SimpleId).collect(),
            QuiverKind::OneLoop => (0..p.get() as usize).map(SimpleId).collect(),
        }
    }

    pub fn simple_count(&self, p: Prime) -> usize {
        match self.kind {
            QuiverKind::Acyclic => self.vertices.len(),
            QuiverKind::OneLoop => p.get() as usize,
        }
    }

    /// Vertex supporting the simple.
    pub fn simple_vertex(&self, s: SimpleId) -> usize {
        match self.kind {
            QuiverKind::Acyclic => s.0,
            QuiverKind::OneLoop => 0,
        }
    }

    /// `S<vertex name>` or `S<λ>`.
    pub fn simple_label(&self, s: SimpleId) -> String {
        match self.kind {
            QuiverKind::Acyclic => format!("S{}", self.vertices[s.0]),
            QuiverKind::OneLoop => format!("S{}", s.0),
        }
    }

    /// Inverse of [`Quiver::simple_label`].
    pub fn parse_simple(&self, label: &str, p: Prime) -> Option<SimpleId> {
        let rest = label.strip_prefix('S')?;
        match self.kind {
            QuiverKind::Acyclic => self.vertex_index(rest).map(SimpleId),
            QuiverKind::OneLoop => rest
                .parse::<usize>()
                .ok()
                .filter(|&l| l < p.get() as usize)
                .map(SimpleId),
        }
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (", self.name)?;
        for (i, a) in self.arrows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{}:{}->{}",
                a.id, self.vertices[a.source], self.vertices[a.target]
            )?;
        }
        write!(f, ")")
    }
}

/// Small fixtures used throughout tests, examples and the CLI.
pub mod fixtures {
    use super::*;

    fn spec(name: &str, vertices: &[&str], arrows: &[(&str, &str, &str)]) -> QuiverSpec {
        QuiverSpec {
            name: name.into(),
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|(f, t, i)| (f.to_string(), t.to_string(), i.to_string()))
                .collect(),
        }
    }

    /// `1 → 2`
    pub fn a2() -> Quiver {
        build_quiver(&spec("A2", &["1", "2"], &[("1", "2", "a")])).unwrap()
    }

    /// Kronecker quiver, two arrows `1 → 2`.
    pub fn kronecker() -> Quiver {
        build_quiver(&spec(
            "K2",
            &["1", "2"],
            &[("1", "2", "a"), ("1", "2", "b")],
        ))
        .unwrap()
    }

    /// `n` vertices, no arrows.
    pub fn discrete(n: usize) -> Quiver {
        let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        build_quiver(&spec(&format!("D{n}"), &refs, &[])).unwrap()
    }

    pub fn one_loop() -> Quiver {
        build_quiver(&spec("L1", &["1"], &[("1", "1", "x")])).unwrap()
    }
}
