//! The composition monoid of an acyclic quiver as a word-rewriting system.
//!
//! A word `R_{i_1} ⋯ R_{i_u}` stands for the representations having a filtration with
//! bottom-to-top factors `S_{i_1}, …, S_{i_u}`. The relations read off the quiver
//! preserve length and letter multiset, so every class is a finite set of anagrams and
//! the word problem is decided by breadth-first search, applying relations in both
//! directions.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::MonoidError;
use crate::fp::Prime;
use crate::iso::{enumerate_slice, DEFAULT_GROUP_BUDGET};
use crate::jh::jh_sequences;
use crate::opens::{Flavor, Universe, Word};
use crate::quiver::{Quiver, QuiverKind, SimpleId};
use crate::rep::{DimVector, Representation};

/// Generators by vertex index, bottom factor leftmost.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidWord(pub Vec<usize>);

impl MonoidWord {
    /// Parses `R2R2R1` (vertex names after each `R`).
    pub fn parse(q: &Quiver, s: &str) -> Result<Self, MonoidError> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(MonoidWord(Vec::new()));
        }
        let Some(body) = s.strip_prefix('R') else {
            return Err(MonoidError::Parse(s.into()));
        };
        body.split('R')
            .map(|name| {
                q.vertex_index(name.trim())
                    .ok_or_else(|| MonoidError::Parse(s.into()))
            })
            .collect::<Result<_, _>>()
            .map(MonoidWord)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, q: &Quiver) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&v| format!("R{}", q.vertices()[v]))
            .collect()
    }

    /// `Σ δ_i` over the letters.
    pub fn dim(&self, vertex_count: usize) -> DimVector {
        let mut d = vec![0; vertex_count];
        for &v in &self.0 {
            d[v] += 1;
        }
        DimVector(d)
    }

    fn counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &v in &self.0 {
            *m.entry(v).or_insert(0) += 1;
        }
        m
    }

    pub fn simples(&self) -> Vec<SimpleId> {
        self.0.iter().copied().map(SimpleId).collect()
    }
}

/// Vertex positions, 1-based; [`MonoidWord::label`] uses the quiver's names.
impl fmt::Display for MonoidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for v in &self.0 {
            write!(f, "R{}", v + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Relation {
    pub lhs: MonoidWord,
    pub rhs: MonoidWord,
}

impl Relation {
    pub fn label(&self, q: &Quiver) -> String {
        format!("{} = {}", self.lhs.label(q), self.rhs.label(q))
    }
}

/// Unoriented relations; each one preserves length and letter multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    relations: Vec<Relation>,
}

impl RelationSet {
    pub fn new(relations: Vec<Relation>) -> Result<Self, MonoidError> {
        for r in &relations {
            if r.lhs.counts() != r.rhs.counts() {
                return Err(MonoidError::Unbalanced(format!("{} = {}", r.lhs, r.rhs)));
            }
        }
        Ok(RelationSet { relations })
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }
}

/// For every ordered pair `(i, j)` with no arrow `i → j` and `n` arrows `j → i`:
/// `R_i^{n+1} R_j = R_i^n R_j R_i` and `R_i R_j^{n+1} = R_j R_i R_j^n`. With `n = 0`
/// both collapse to commutation. Duplicates are removed up to orientation.
pub fn relations_from_quiver(q: &Quiver) -> Result<RelationSet, MonoidError> {
    if q.kind() != QuiverKind::Acyclic {
        return Err(MonoidError::UnsupportedShape);
    }
    let rep = |v: usize, k: usize| std::iter::repeat_n(v, k);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |a: Vec<usize>, b: Vec<usize>| {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        if a != b && seen.insert(key) {
            out.push(Relation {
                lhs: MonoidWord(a),
                rhs: MonoidWord(b),
            });
        }
    };
    let n_vert = q.vertex_count();
    for i in 0..n_vert {
        for j in 0..n_vert {
            if i == j || q.arrow_count(i, j) != 0 {
                continue;
            }
            let n = q.arrow_count(j, i);
            push(
                rep(i, n + 1).chain([j]).collect(),
                rep(i, n).chain([j, i]).collect(),
            );
            push(
                [i].into_iter().chain(rep(j, n + 1)).collect(),
                [j, i].into_iter().chain(rep(j, n)).collect(),
            );
        }
    }
    RelationSet::new(out)
}

fn neighbours(w: &[usize], r: &RelationSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for rel in &r.relations {
        for (from, to) in [(&rel.lhs.0, &rel.rhs.0), (&rel.rhs.0, &rel.lhs.0)] {
            let k = from.len();
            if k == 0 || k > w.len() {
                continue;
            }
            for pos in 0..=w.len() - k {
                if &w[pos..pos + k] == from.as_slice() {
                    let mut next = w.to_vec();
                    next[pos..pos + k].copy_from_slice(to);
                    out.push(next);
                }
            }
        }
    }
    out
}

/// All words equal to `v` under the relations.
pub fn word_class(v: &MonoidWord, r: &RelationSet) -> BTreeSet<MonoidWord> {
    let mut seen = BTreeSet::from([v.0.clone()]);
    let mut queue = VecDeque::from([v.0.clone()]);
    while let Some(w) = queue.pop_front() {
        for n in neighbours(&w, r) {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    seen.into_iter().map(MonoidWord).collect()
}

pub fn monoid_eq(v: &MonoidWord, v2: &MonoidWord, r: &RelationSet) -> bool {
    v.counts() == v2.counts() && word_class(v, r).contains(v2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RewriteSide {
    /// `v = prefix ∗ v″`
    Left,
    /// `v = v″ ∗ prefix`
    Right,
}

impl TryFrom<Flavor> for RewriteSide {
    type Error = MonoidError;

    fn try_from(f: Flavor) -> Result<Self, MonoidError> {
        match f {
            Flavor::Left => Ok(RewriteSide::Left),
            Flavor::Right => Ok(RewriteSide::Right),
            Flavor::Scattered => Err(MonoidError::ScatteredFlavor),
        }
    }
}

fn has_affix(w: &[usize], affix: &[usize], side: RewriteSide) -> bool {
    match side {
        RewriteSide::Left => w.starts_with(affix),
        RewriteSide::Right => w.ends_with(affix),
    }
}

/// Can `v` be rewritten to start (or end) with `prefix`?
pub fn exists_prefix_rewrite(
    v: &MonoidWord,
    prefix: &MonoidWord,
    r: &RelationSet,
    side: RewriteSide,
) -> bool {
    prefix.len() <= v.len()
        && word_class(v, r)
            .iter()
            .any(|w| has_affix(&w.0, &prefix.0, side))
}

/// The `F_p`-points of a word: iso classes of dimension `Σ δ` having a filtration with
/// the word's factor sequence.
#[derive(Debug, Clone)]
pub struct SemanticSet {
    pub dim: DimVector,
    pub reps: Vec<Representation>,
    /// Positions of `reps` inside the enumerated slice for `dim`.
    pub indices: Vec<usize>,
}

pub const POINTS_CAVEAT: &str =
    "points over F_p of iso classes, not closed subvarieties over an algebraically closed field";

pub fn semantic_set(v: &MonoidWord, q: &Arc<Quiver>, p: Prime) -> Result<SemanticSet, MonoidError> {
    semantic_set_with_budget(v, q, p, DEFAULT_GROUP_BUDGET)
}

pub fn semantic_set_with_budget(
    v: &MonoidWord,
    q: &Arc<Quiver>,
    p: Prime,
    budget: u64,
) -> Result<SemanticSet, MonoidError> {
    if q.kind() != QuiverKind::Acyclic {
        return Err(MonoidError::UnsupportedShape);
    }
    if let Some(&bad) = v.0.iter().find(|&&x| x >= q.vertex_count()) {
        return Err(MonoidError::UnknownVertex(bad));
    }
    let dim = v.dim(q.vertex_count());
    let target = v.simples();
    let mut reps = Vec::new();
    let mut indices = Vec::new();
    for (i, class) in enumerate_slice(q, p, &dim, budget)?.into_iter().enumerate() {
        if jh_sequences(&class.rep)?.iter().any(|s| s.0 == target) {
            reps.push(class.rep);
            indices.push(i);
        }
    }
    Ok(SemanticSet { dim, reps, indices })
}

#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub relation: Relation,
    pub lhs_size: usize,
    pub rhs_size: usize,
    /// A class in exactly one of the two sets.
    pub witness: Option<Representation>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct SemanticsReport {
    pub checks: Vec<RelationCheck>,
    pub caveats: Vec<String>,
}

impl SemanticsReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(RelationCheck::passed)
    }
}

/// Compares the point sets of both sides of every relation.
pub fn check_relation_semantics(
    r: &RelationSet,
    q: &Arc<Quiver>,
    p: Prime,
) -> Result<SemanticsReport, MonoidError> {
    let mut checks = Vec::new();
    for rel in r.relations() {
        let a = semantic_set(&rel.lhs, q, p)?;
        let b = semantic_set(&rel.rhs, q, p)?;
        let witness = if a.indices == b.indices {
            None
        } else {
            let only_a = a.indices.iter().position(|i| !b.indices.contains(i));
            Some(match only_a {
                Some(k) => a.reps[k].clone(),
                None => {
                    let k = b
                        .indices
                        .iter()
                        .position(|i| !a.indices.contains(i))
                        .unwrap();
                    b.reps[k].clone()
                }
            })
        };
        checks.push(RelationCheck {
            relation: rel.clone(),
            lhs_size: a.reps.len(),
            rhs_size: b.reps.len(),
            witness,
        });
    }
    Ok(SemanticsReport {
        checks,
        caveats: vec![POINTS_CAVEAT.into()],
    })
}

fn singleton_vertices(w: &Word) -> Result<MonoidWord, MonoidError> {
    w.letters
        .iter()
        .map(|l| {
            let mut it = l.simples();
            match (it.next(), it.next()) {
                (Some(s), None) => Ok(s.0),
                _ => Err(MonoidError::NotSingleton),
            }
        })
        .collect::<Result<_, _>>()
        .map(MonoidWord)
}

fn acyclic_universe(u: &Universe) -> Result<(), MonoidError> {
    if u.model().quiver().kind() == QuiverKind::Acyclic {
        Ok(())
    } else {
        Err(MonoidError::UnsupportedShape)
    }
}

#[derive(Debug, Clone)]
pub struct PrefixReport {
    pub checked: usize,
    /// Universe indices where membership and prefix rewritability disagree.
    pub disagreements: Vec<usize>,
    pub caveats: Vec<String>,
}

impl PrefixReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Membership in a one-sided basic open against "some factor sequence of `m`,
/// read as a monoid word, rewrites to start (end) with `w`".
pub fn check_prefix_membership(
    w: &Word,
    u: &Universe,
    r: &RelationSet,
) -> Result<PrefixReport, MonoidError> {
    acyclic_universe(u)?;
    let side = RewriteSide::try_from(w.flavor)?;
    let target = singleton_vertices(w)?;
    let elem = crate::opens::LatticeElement::from(w.clone());
    let mut disagreements = Vec::new();
    for i in 0..u.len() {
        let by_member = u.member_at(i, &elem);
        let by_monoid = u.sequences(i).iter().any(|s| {
            let v = MonoidWord(s.iter().map(|x| x.0).collect());
            exists_prefix_rewrite(&v, &target, r, side)
        });
        if by_member != by_monoid {
            disagreements.push(i);
        }
    }
    Ok(PrefixReport {
        checked: u.len(),
        disagreements,
        caveats: vec![format!(
            "complement words bounded by universe total dimension {}",
            u.max_dim()
        )],
    })
}

#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub monoid_level: bool,
    /// A word rewritable to exactly one of the two prefixes.
    pub monoid_witness: Option<MonoidWord>,
    pub words_scanned: usize,
    pub universe_level: bool,
    /// Universe index of a qualifying class in exactly one of the two opens.
    pub universe_witness: Option<usize>,
    pub star_len_bound: usize,
    pub caveats: Vec<String>,
}

impl EquivalenceReport {
    pub fn agrees(&self) -> bool {
        self.monoid_level == self.universe_level
    }
}

/// All words over `0..n` with lengths in `lo..=hi`.
fn all_words(n: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer = vec![Vec::new()];
    for len in 0..=hi {
        if len >= lo {
            out.extend(layer.iter().cloned());
        }
        if len == hi {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..n).map(move |v| {
                    let mut x = w.clone();
                    x.push(v);
                    x
                })
            })
            .collect();
    }
    out
}

/// Monoid-level equivalence: every word of length `≤ star_len_bound` containing the
/// letters of `w ∪ w′` is rewritable to `w` iff it is rewritable to `w′`. Compared with
/// `≈` on the universe.
pub fn check_monoid_equivalence(
    w: &Word,
    w2: &Word,
    u: &Universe,
    r: &RelationSet,
    star_len_bound: usize,
) -> Result<EquivalenceReport, MonoidError> {
    acyclic_universe(u)?;
    if w.flavor != w2.flavor {
        return Err(crate::error::OpenError::FlavorMismatch(
            w.flavor.to_string(),
            w2.flavor.to_string(),
        )
        .into());
    }
    let side = RewriteSide::try_from(w.flavor)?;
    let (a, b) = (singleton_vertices(w)?, singleton_vertices(w2)?);
    let mut need = a.counts();
    for (v, c) in b.counts() {
        let e = need.entry(v).or_insert(0);
        *e = (*e).max(c);
    }
    let min_len = need.values().sum::<usize>();
    let n = u.model().quiver().vertex_count();

    let mut scanned = 0;
    let mut monoid_witness = None;
    for v in all_words(n, min_len, star_len_bound) {
        let v = MonoidWord(v);
        let counts = v.counts();
        if need
            .iter()
            .any(|(k, &c)| counts.get(k).copied().unwrap_or(0) < c)
        {
            continue;
        }
        scanned += 1;
        let class = word_class(&v, r);
        let ra = class.iter().any(|x| has_affix(&x.0, &a.0, side));
        let rb = class.iter().any(|x| has_affix(&x.0, &b.0, side));
        if ra != rb {
            monoid_witness = Some(v);
            break;
        }
    }

    let (x, y) = (
        crate::opens::LatticeElement::from(w.clone()),
        crate::opens::LatticeElement::from(w2.clone()),
    );
    let universe_witness = u.leq_witness(&x, &y).or_else(|| u.leq_witness(&y, &x));
    Ok(EquivalenceReport {
        monoid_level: monoid_witness.is_none(),
        monoid_witness,
        words_scanned: scanned,
        universe_level: universe_witness.is_none(),
        universe_witness,
        star_len_bound,
        caveats: vec![
            "monoid level is relative to the listed relations".into(),
            format!("universe total dimension ≤ {}", u.max_dim()),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::fixtures;

    fn mw(q: &Quiver, s: &str) -> MonoidWord {
        MonoidWord::parse(q, s).unwrap()
    }

    #[test]
    fn relation_families() {
        let d = fixtures::discrete(2);
        let r = relations_from_quiver(&d).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.relations()[0].label(&d), "R1R2 = R2R1");

        let a2 = fixtures::a2();
        let r = relations_from_quiver(&a2).unwrap();
        let labels: Vec<String> = r.relations().iter().map(|x| x.label(&a2)).collect();
        assert_eq!(labels, vec!["R2R2R1 = R2R1R2", "R2R1R1 = R1R2R1"]);

        let k2 = fixtures::kronecker();
        let r = relations_from_quiver(&k2).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.relations().iter().all(|x| x.lhs.len() == 4));

        assert_eq!(
            relations_from_quiver(&fixtures::one_loop()),
            Err(MonoidError::UnsupportedShape)
        );
    }

    #[test]
    fn unbalanced_rejected() {
        let bad = Relation {
            lhs: MonoidWord(vec![0, 1]),
            rhs: MonoidWord(vec![0, 0]),
        };
        assert!(matches!(
            RelationSet::new(vec![bad]),
            Err(MonoidError::Unbalanced(_))
        ));
    }

    #[test]
    fn word_problem() {
        let a2 = fixtures::a2();
        let r = relations_from_quiver(&a2).unwrap();
        assert!(monoid_eq(&mw(&a2, "R2R2R1"), &mw(&a2, "R2R1R2"), &r));
        assert!(!monoid_eq(&mw(&a2, "R1R2"), &mw(&a2, "R2R1"), &r));
        let d = fixtures::discrete(2);
        let rd = relations_from_quiver(&d).unwrap();
        assert!(monoid_eq(&mw(&d, "R1R2"), &mw(&d, "R2R1"), &rd));
    }

    #[test]
    fn prefix_rewrites() {
        let a2 = fixtures::a2();
        let r = relations_from_quiver(&a2).unwrap();
        let l = RewriteSide::Left;
        assert!(exists_prefix_rewrite(
            &mw(&a2, "R2R1"),
            &mw(&a2, "R2"),
            &r,
            l
        ));
        assert!(!exists_prefix_rewrite(
            &mw(&a2, "R2R1"),
            &mw(&a2, "R1"),
            &r,
            l
        ));
        assert!(exists_prefix_rewrite(
            &mw(&a2, "R2R2R1"),
            &mw(&a2, "R2R1"),
            &r,
            l
        ));
        assert!(exists_prefix_rewrite(
            &mw(&a2, "R2R1"),
            &mw(&a2, "R1"),
            &r,
            RewriteSide::Right
        ));
    }

    #[test]
    fn parse_and_label() {
        let a2 = fixtures::a2();
        assert_eq!(mw(&a2, "R2R1").0, vec![1, 0]);
        assert_eq!(mw(&a2, "R2R1").label(&a2), "R2R1");
        assert!(MonoidWord::parse(&a2, "R3").is_err());
        assert!(MonoidWord::parse(&a2, "X1").is_err());
        assert!(mw(&a2, "1").is_empty());
    }

    #[test]
    fn semantic_sets_on_a2() {
        let q = Arc::new(fixtures::a2());
        let p = Prime::TWO;
        let s21 = semantic_set(&mw(&q, "R2R1"), &q, p).unwrap();
        let s12 = semantic_set(&mw(&q, "R1R2"), &q, p).unwrap();
        assert_eq!(s21.reps.len(), 2);
        assert_eq!(s12.reps.len(), 1);
        assert!(s12.reps[0].maps()[0].is_zero());
        let s1 = semantic_set(&mw(&q, "R1"), &q, p).unwrap();
        assert_eq!(s1.reps.len(), 1);
    }
}
