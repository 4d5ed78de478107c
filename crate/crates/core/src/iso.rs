//! Isomorphism testing and enumeration of isomorphism classes over `F_p`.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::RepError;
use crate::fp::Prime;
use crate::matrix::Matrix;
use crate::quiver::Quiver;
use crate::rep::{DimVector, Representation};

pub const DEFAULT_GROUP_BUDGET: u64 = 10_000_000;

/// Basis of `Hom(m, n)`: tuples of per-vertex matrices `f_v` with
/// `f_target · m_a = n_a · f_source` for every arrow.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Vec<Matrix>>, RepError> {
    if m.quiver() != n.quiver() || m.modulus() != n.modulus() {
        return Err(RepError::Mismatch);
    }
    let p = m.modulus();
    let q = m.quiver();
    let (da, db) = (&m.dim().0, &n.dim().0);
    // unknown offsets: f_v is db[v] x da[v], row-major
    let mut offset = Vec::with_capacity(da.len());
    let mut total = 0;
    for v in 0..da.len() {
        offset.push(total);
        total += db[v] * da[v];
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * da[v] + c;

    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (ma, na) = (m.map(ai), n.map(ai));
        // (f_j · m_a - n_a · f_i)[r][c] = 0, shape db[j] x da[i]
        for r in 0..db[j] {
            for c in 0..da[i] {
                let mut eq = vec![0u32; total];
                for k in 0..da[j] {
                    let x = var(j, r, k);
                    eq[x] = p.add(eq[x], ma.raw(k, c));
                }
                for k in 0..db[i] {
                    let x = var(i, k, c);
                    eq[x] = p.sub(eq[x], na.raw(r, k));
                }
                rows.push(eq);
            }
        }
    }
    let system = Matrix::from_rows(p, total, &rows)?;
    Ok(system
        .kernel_basis()
        .into_iter()
        .map(|vec| {
            (0..da.len())
                .map(|v| {
                    let data = vec[offset[v]..offset[v] + db[v] * da[v]].to_vec();
                    Matrix::new(p, db[v], da[v], data).expect("shape")
                })
                .collect()
        })
        .collect())
}

/// True iff an invertible intertwiner exists.
///
/// Searches the whole of `Hom(m, n)`; fails when that space exceeds `budget` elements.
pub fn iso_test_with_budget(
    m: &Representation,
    n: &Representation,
    budget: u64,
) -> Result<bool, RepError> {
    if m.quiver() != n.quiver() || m.modulus() != n.modulus() {
        return Err(RepError::Mismatch);
    }
    if m.dim() != n.dim() {
        return Ok(false);
    }
    if m == n {
        return Ok(true);
    }
    let p = m.modulus();
    let basis = hom_basis(m, n)?;
    let size = p.checked_pow(basis.len()).unwrap_or(u64::MAX);
    if size > budget {
        return Err(RepError::BudgetExceeded {
            what: "intertwiner search",
            needed: size,
            limit: budget,
        });
    }
    let dims = &m.dim().0;
    for idx in 1..size {
        let mut coeffs = Vec::with_capacity(basis.len());
        let mut rest = idx;
        for _ in 0..basis.len() {
            coeffs.push((rest % p.get() as u64) as u32);
            rest /= p.get() as u64;
        }
        let invertible = (0..dims.len()).all(|v| {
            let mut f = Matrix::zeros(p, dims[v], dims[v]);
            for (c, b) in coeffs.iter().zip(&basis) {
                if *c == 0 {
                    continue;
                }
                for r in 0..dims[v] {
                    for k in 0..dims[v] {
                        let val = p.add(f.raw(r, k), p.mul(*c, b[v].raw(r, k)));
                        f.set(r, k, val);
                    }
                }
            }
            f.is_invertible()
        });
        if invertible {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn iso_test(m: &Representation, n: &Representation) -> Result<bool, RepError> {
    iso_test_with_budget(m, n, DEFAULT_GROUP_BUDGET)
}

/// `GL_n(F_p)` as `(g, g⁻¹)` pairs, in lexicographic order of entries.
pub fn general_linear(p: Prime, n: usize, budget: u64) -> Result<Vec<(Matrix, Matrix)>, RepError> {
    let count = p.checked_pow(n * n).unwrap_or(u64::MAX);
    if count > budget {
        return Err(RepError::BudgetExceeded {
            what: "general linear group enumeration",
            needed: count,
            limit: budget,
        });
    }
    let mut out = Vec::new();
    for idx in 0..count {
        let m = Matrix::new(p, n, n, digits(idx, n * n, p)).expect("shape");
        if let Some(inv) = m.inverse() {
            out.push((m, inv));
        }
    }
    Ok(out)
}

/// Base-`p` digits of `idx`, most significant first.
fn digits(mut idx: u64, len: usize, p: Prime) -> Vec<u32> {
    let mut d = vec![0u32; len];
    for slot in d.iter_mut().rev() {
        *slot = (idx % p.get() as u64) as u32;
        idx /= p.get() as u64;
    }
    d
}

fn encode(maps: &[Matrix], p: Prime) -> u64 {
    maps.iter()
        .flat_map(|m| m.data().iter())
        .fold(0u64, |acc, &x| acc * p.get() as u64 + x as u64)
}

fn decode(q: &Arc<Quiver>, p: Prime, dim: &DimVector, idx: u64, entries: usize) -> Vec<Matrix> {
    let all = digits(idx, entries, p);
    let mut at = 0;
    q.arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dim.0[a.target], dim.0[a.source]);
            let m = Matrix::new(p, r, c, all[at..at + r * c].to_vec()).expect("shape");
            at += r * c;
            m
        })
        .collect()
}

/// One isomorphism class: its lexicographically least member and its orbit size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClass {
    pub rep: Representation,
    pub orbit_size: u64,
}

/// All isomorphism classes in `rep_α Q(F_p)` by orbit sweeping under `GL(α)`.
pub fn enumerate_slice(
    q: &Arc<Quiver>,
    p: Prime,
    dim: &DimVector,
    budget: u64,
) -> Result<Vec<IsoClass>, RepError> {
    let entries = Representation::entry_count(q, dim);
    let space = p.checked_pow(entries).unwrap_or(u64::MAX);
    if space > budget {
        return Err(RepError::BudgetExceeded {
            what: "representation space",
            needed: space,
            limit: budget,
        });
    }
    let groups: Vec<Vec<(Matrix, Matrix)>> = dim
        .0
        .iter()
        .map(|&n| general_linear(p, n, budget))
        .collect::<Result<_, _>>()?;
    let group_order: u64 = groups
        .iter()
        .try_fold(1u64, |acc, g| acc.checked_mul(g.len() as u64))
        .unwrap_or(u64::MAX);
    if group_order > budget {
        return Err(RepError::BudgetExceeded {
            what: "base-change group",
            needed: group_order,
            limit: budget,
        });
    }

    let mut seen = vec![false; space as usize];
    let mut classes = Vec::new();
    let mut work = 0u64;
    for idx in 0..space {
        if seen[idx as usize] {
            continue;
        }
        let maps = decode(q, p, dim, idx, entries);
        let rep = Representation::new(q.clone(), p, dim.clone(), maps)?;
        let mut orbit = HashSet::new();
        let mut choice = vec![0usize; groups.len()];
        loop {
            let moved: Vec<Matrix> = q
                .arrows()
                .iter()
                .zip(rep.maps())
                .map(|(a, m)| {
                    let gt = &groups[a.target][choice[a.target]].0;
                    let gs_inv = &groups[a.source][choice[a.source]].1;
                    gt.mul(m).and_then(|x| x.mul(gs_inv)).expect("shapes")
                })
                .collect();
            let code = encode(&moved, p);
            seen[code as usize] = true;
            orbit.insert(code);
            work += 1;
            if !advance(&mut choice, &groups) {
                break;
            }
        }
        if work > budget.saturating_mul(4) {
            return Err(RepError::BudgetExceeded {
                what: "orbit sweep",
                needed: work,
                limit: budget,
            });
        }
        classes.push(IsoClass {
            rep,
            orbit_size: orbit.len() as u64,
        });
    }
    Ok(classes)
}

fn advance(choice: &mut [usize], groups: &[Vec<(Matrix, Matrix)>]) -> bool {
    for (c, g) in choice.iter_mut().zip(groups) {
        *c += 1;
        if *c < g.len() {
            return true;
        }
        *c = 0;
    }
    false
}

/// One representative per isomorphism class for every `α` with `|α| ≤ max_total_dim`.
pub fn enumerate_universe(
    q: &Arc<Quiver>,
    p: Prime,
    max_total_dim: usize,
) -> Result<Vec<Representation>, RepError> {
    enumerate_universe_with_budget(q, p, max_total_dim, DEFAULT_GROUP_BUDGET)
}

pub fn enumerate_universe_with_budget(
    q: &Arc<Quiver>,
    p: Prime,
    max_total_dim: usize,
    budget: u64,
) -> Result<Vec<Representation>, RepError> {
    let mut out = Vec::new();
    for dim in DimVector::all_up_to(q.vertex_count(), max_total_dim) {
        out.extend(
            enumerate_slice(q, p, &dim, budget)?
                .into_iter()
                .map(|c| c.rep),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::fixtures;
    use crate::quiver::SimpleId;

    fn f2() -> Prime {
        Prime::TWO
    }

    fn x_ind() -> Representation {
        Representation::new(
            Arc::new(fixtures::a2()),
            f2(),
            DimVector(vec![1, 1]),
            vec![Matrix::identity(f2(), 1)],
        )
        .unwrap()
    }

    #[test]
    fn iso_examples() {
        let x = x_ind();
        assert!(iso_test(&x, &x).unwrap());
        let zero =
            Representation::zero_maps(x.quiver().clone(), f2(), DimVector(vec![1, 1])).unwrap();
        assert!(!iso_test(&x, &zero).unwrap());

        let q = Arc::new(fixtures::discrete(2));
        let s1 = Representation::simple(q.clone(), f2(), SimpleId(0)).unwrap();
        let s2 = Representation::simple(q, f2(), SimpleId(1)).unwrap();
        assert!(iso_test(&s1.direct_sum(&s2).unwrap(), &s2.direct_sum(&s1).unwrap()).unwrap());
    }

    #[test]
    fn conjugate_jordan_blocks_are_isomorphic() {
        let q = Arc::new(fixtures::one_loop());
        let p = Prime::new(3).unwrap();
        let j = Matrix::from_rows(p, 2, &[vec![1, 1], vec![0, 1]]).unwrap();
        let g = Matrix::from_rows(p, 2, &[vec![1, 2], vec![0, 1]]).unwrap();
        let conj = g.mul(&j).unwrap().mul(&g.inverse().unwrap()).unwrap();
        let a = Representation::new(q.clone(), p, DimVector(vec![2]), vec![j]).unwrap();
        let b = Representation::new(q.clone(), p, DimVector(vec![2]), vec![conj]).unwrap();
        assert!(iso_test(&a, &b).unwrap());
        let id =
            Representation::new(q, p, DimVector(vec![2]), vec![Matrix::identity(p, 2)]).unwrap();
        assert!(!iso_test(&a, &id).unwrap());
    }

    #[test]
    fn slice_counts() {
        let a2 = Arc::new(fixtures::a2());
        let classes =
            enumerate_slice(&a2, f2(), &DimVector(vec![1, 1]), DEFAULT_GROUP_BUDGET).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes[0].rep.map(0).is_zero());

        let d1 = Arc::new(fixtures::discrete(1));
        assert_eq!(
            enumerate_slice(&d1, f2(), &DimVector(vec![1]), DEFAULT_GROUP_BUDGET)
                .unwrap()
                .len(),
            1
        );

        // F_2 has a single unit, so all four matrix pairs are distinct classes
        let k2 = Arc::new(fixtures::kronecker());
        assert_eq!(
            enumerate_slice(&k2, f2(), &DimVector(vec![1, 1]), DEFAULT_GROUP_BUDGET)
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn gl_orders() {
        assert_eq!(general_linear(f2(), 2, 1000).unwrap().len(), 6);
        assert_eq!(general_linear(f2(), 3, 1000).unwrap().len(), 168);
        assert_eq!(
            general_linear(Prime::new(3).unwrap(), 2, 1000)
                .unwrap()
                .len(),
            48
        );
        assert_eq!(general_linear(f2(), 0, 1).unwrap().len(), 1);
    }

    #[test]
    fn budget_exceeded() {
        let k2 = Arc::new(fixtures::kronecker());
        assert!(matches!(
            enumerate_slice(&k2, f2(), &DimVector(vec![2, 2]), 100),
            Err(RepError::BudgetExceeded { .. })
        ));
    }
}
