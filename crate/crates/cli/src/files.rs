//! JSON quiver and representation files (`format: 1`).

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use nctop_core::quiver::fixtures;
use nctop_core::{build_quiver, DimVector, Matrix, Prime, Quiver, QuiverSpec, Representation};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const FORMAT: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowEntry {
    pub from: String,
    pub to: String,
    pub id: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverFile {
    pub format: u32,
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
}

impl QuiverFile {
    pub fn from_quiver(q: &Quiver) -> Self {
        QuiverFile {
            format: FORMAT,
            name: q.name().to_string(),
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowEntry {
                    from: q.vertices()[a.source].clone(),
                    to: q.vertices()[a.target].clone(),
                    id: a.id.clone(),
                })
                .collect(),
        }
    }

    pub fn to_quiver(&self) -> Result<Quiver, CliError> {
        check_format(self.format)?;
        let spec = QuiverSpec {
            name: self.name.clone(),
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| (a.from.clone(), a.to.clone(), a.id.clone()))
                .collect(),
        };
        Ok(build_quiver(&spec)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepFile {
    pub format: u32,
    pub quiver: String,
    pub p: u32,
    pub dim: Vec<usize>,
    /// Matrices by arrow id, as rows of residues.
    pub maps: BTreeMap<String, Vec<Vec<u32>>>,
}

impl RepFile {
    pub fn from_rep(m: &Representation) -> Self {
        let q = m.quiver();
        RepFile {
            format: FORMAT,
            quiver: q.name().to_string(),
            p: m.modulus().get(),
            dim: m.dim().0.clone(),
            maps: q
                .arrows()
                .iter()
                .zip(m.maps())
                .map(|(a, mat)| (a.id.clone(), mat.to_rows()))
                .collect(),
        }
    }

    pub fn to_rep(&self, q: &Arc<Quiver>) -> Result<Representation, CliError> {
        check_format(self.format)?;
        if self.quiver != q.name() {
            return Err(CliError::Usage(format!(
                "representation is over quiver {:?}, not {:?}",
                self.quiver,
                q.name()
            )));
        }
        let p = Prime::new(self.p)?;
        if let Some(id) = self.maps.keys().find(|id| q.arrow_index(id).is_none()) {
            return Err(CliError::Usage(format!("unknown arrow {id:?}")));
        }
        let mut maps = Vec::with_capacity(q.arrows().len());
        for a in q.arrows() {
            let rows = self
                .maps
                .get(&a.id)
                .ok_or_else(|| CliError::Usage(format!("missing matrix for arrow {:?}", a.id)))?;
            let cols = match rows.first() {
                Some(r) => r.len(),
                None => self.dim.get(a.source).copied().unwrap_or(0),
            };
            if rows.iter().any(|r| r.len() != cols) {
                return Err(CliError::Usage(format!(
                    "ragged matrix for arrow {:?}",
                    a.id
                )));
            }
            let data = rows.iter().flatten().copied().collect();
            maps.push(Matrix::new(p, rows.len(), cols, data)?);
        }
        Ok(Representation::new(
            q.clone(),
            p,
            DimVector(self.dim.clone()),
            maps,
        )?)
    }
}

fn check_format(found: u32) -> Result<(), CliError> {
    if found == FORMAT {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "unsupported format {found}, expected {FORMAT}"
        )))
    }
}

/// Built-in quivers by name: `A2`, `K2`, `D<n>`, `L1`.
pub fn builtin(name: &str) -> Option<Quiver> {
    match name {
        "A2" => Some(fixtures::a2()),
        "K2" => Some(fixtures::kronecker()),
        "L1" => Some(fixtures::one_loop()),
        _ => name
            .strip_prefix('D')
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| (1..=8).contains(&n))
            .map(fixtures::discrete),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|source| CliError::Json {
        path: path.display().to_string(),
        source,
    })
}

/// A quiver file path, or a built-in name when no such file exists.
pub fn load_quiver(arg: &str) -> Result<Arc<Quiver>, CliError> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(q) = builtin(arg) {
            return Ok(Arc::new(q));
        }
    }
    let file: QuiverFile = parse(path, &read(path)?)?;
    Ok(Arc::new(file.to_quiver()?))
}

pub fn load_rep(q: &Arc<Quiver>, arg: &str) -> Result<Representation, CliError> {
    let path = Path::new(arg);
    let file: RepFile = parse(path, &read(path)?)?;
    file.to_rep(q)
}
