//! Jordan-Hölder factor sequences and first extension groups between simples.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::RepError;
use crate::fp::Prime;
use crate::quiver::{Quiver, QuiverKind, SimpleId};
use crate::rep::Representation;

/// Bottom-to-top list of composition factors of one filtration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorSequence(pub Vec<SimpleId>);

impl FactorSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, q: &Quiver) -> String {
        self.0
            .iter()
            .map(|&s| q.simple_label(s))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for FactorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", s.0)?;
        }
        write!(f, ")")
    }
}

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

type SeqSet = Arc<BTreeSet<Vec<SimpleId>>>;

struct Search {
    memo: HashMap<Representation, SeqSet>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn run(&mut self, m: &Representation) -> Result<SeqSet, RepError> {
        if let Some(hit) = self.memo.get(m) {
            return Ok(hit.clone());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(RepError::BudgetExceeded {
                what: "filtration search nodes",
                needed: self.nodes,
                limit: self.budget,
            });
        }
        let mut out = BTreeSet::new();
        if m.total_dim() == 0 {
            out.insert(Vec::new());
        } else {
            for s in m.quiver().simples(m.modulus()) {
                let basis = m.simple_sub_space(s)?;
                for line in Representation::lines(m.modulus(), &basis) {
                    let quotient = m.quotient_by_simple_line(s, &line)?;
                    for tail in self.run(&quotient)?.iter() {
                        let mut seq = Vec::with_capacity(tail.len() + 1);
                        seq.push(s);
                        seq.extend_from_slice(tail);
                        out.insert(seq);
                    }
                }
            }
            if out.is_empty() {
                return Err(RepError::NonSplitFactor { dim: m.total_dim() });
            }
        }
        let out = Arc::new(out);
        self.memo.insert(m.clone(), out.clone());
        Ok(out)
    }
}

/// Every bottom-to-top factor order realized by some Jordan-Hölder filtration.
pub fn jh_sequences(m: &Representation) -> Result<BTreeSet<FactorSequence>, RepError> {
    jh_sequences_with_budget(m, DEFAULT_NODE_BUDGET)
}

pub fn jh_sequences_with_budget(
    m: &Representation,
    budget: u64,
) -> Result<BTreeSet<FactorSequence>, RepError> {
    let mut search = Search {
        memo: HashMap::new(),
        nodes: 0,
        budget,
    };
    let set = search.run(m)?;
    Ok(set.iter().cloned().map(FactorSequence).collect())
}

/// Composition factors in the order of one greedy filtration.
pub fn composition_factors(m: &Representation) -> Result<Vec<SimpleId>, RepError> {
    let mut cur = m.clone();
    let mut out = Vec::with_capacity(m.total_dim());
    'outer: while cur.total_dim() > 0 {
        for s in cur.quiver().simples(cur.modulus()) {
            if let Some(line) = cur.simple_sub_space(s)?.into_iter().next() {
                cur = cur.quotient_by_simple_line(s, &line)?;
                out.push(s);
                continue 'outer;
            }
        }
        return Err(RepError::NonSplitFactor {
            dim: cur.total_dim(),
        });
    }
    Ok(out)
}

/// Number of independent non-split extensions `0 → t → X → s → 0`.
///
/// Acyclic quivers: the number of arrows from the vertex of `s` to the vertex of `t`.
/// One-loop quiver: one self-extension per eigenvalue.
pub fn ext1_dim(q: &Quiver, s: SimpleId, t: SimpleId, p: Prime) -> Result<usize, RepError> {
    let n = q.simple_count(p);
    for x in [s, t] {
        if x.0 >= n {
            return Err(RepError::UnknownSimple(x.0));
        }
    }
    Ok(match q.kind() {
        QuiverKind::Acyclic => q.arrow_count(s.0, t.0),
        QuiverKind::OneLoop => usize::from(s == t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::quiver::fixtures;
    use crate::rep::DimVector;

    fn seqs(m: &Representation) -> Vec<Vec<usize>> {
        jh_sequences(m)
            .unwrap()
            .into_iter()
            .map(|s| s.0.into_iter().map(|x| x.0).collect())
            .collect()
    }

    #[test]
    fn a2_examples() {
        let q = Arc::new(fixtures::a2());
        let p = Prime::TWO;
        let x = Representation::new(
            q.clone(),
            p,
            DimVector(vec![1, 1]),
            vec![Matrix::identity(p, 1)],
        )
        .unwrap();
        assert_eq!(seqs(&x), vec![vec![1, 0]]);
        let sum = Representation::zero_maps(q, p, DimVector(vec![1, 1])).unwrap();
        assert_eq!(seqs(&sum), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn jordan_block() {
        let q = Arc::new(fixtures::one_loop());
        let p = Prime::TWO;
        let j2 = Matrix::from_rows(p, 2, &[vec![0, 1], vec![0, 0]]).unwrap();
        let m = Representation::new(q, p, DimVector(vec![2]), vec![j2]).unwrap();
        assert_eq!(seqs(&m), vec![vec![0, 0]]);
    }

    #[test]
    fn zero_dim_has_empty_sequence() {
        let q = Arc::new(fixtures::a2());
        let z = Representation::zero_maps(q, Prime::TWO, DimVector::zero(2)).unwrap();
        assert_eq!(seqs(&z), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn non_split_reported() {
        // x^2 + x + 1 is irreducible over F_2
        let q = Arc::new(fixtures::one_loop());
        let p = Prime::TWO;
        let c = Matrix::from_rows(p, 2, &[vec![0, 1], vec![1, 1]]).unwrap();
        let m = Representation::new(q, p, DimVector(vec![2]), vec![c]).unwrap();
        assert_eq!(jh_sequences(&m), Err(RepError::NonSplitFactor { dim: 2 }));
        assert_eq!(
            composition_factors(&m),
            Err(RepError::NonSplitFactor { dim: 2 })
        );
    }

    #[test]
    fn budget_guard() {
        let q = Arc::new(fixtures::discrete(2));
        let m = Representation::zero_maps(q, Prime::TWO, DimVector(vec![2, 2])).unwrap();
        assert!(matches!(
            jh_sequences_with_budget(&m, 3),
            Err(RepError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn ext_convention() {
        let p = Prime::TWO;
        let a2 = fixtures::a2();
        assert_eq!(ext1_dim(&a2, SimpleId(0), SimpleId(1), p).unwrap(), 1);
        assert_eq!(ext1_dim(&a2, SimpleId(1), SimpleId(0), p).unwrap(), 0);
        let l = fixtures::one_loop();
        assert_eq!(ext1_dim(&l, SimpleId(0), SimpleId(0), p).unwrap(), 1);
        assert_eq!(ext1_dim(&l, SimpleId(0), SimpleId(1), p).unwrap(), 0);
        assert_eq!(
            ext1_dim(&fixtures::kronecker(), SimpleId(0), SimpleId(1), p).unwrap(),
            2
        );
    }
}
