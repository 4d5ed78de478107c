//! Basic open sets of representations defined by words of letters.
//!
//! A letter is a set of simples. A word `V_1 … V_k` with flavor
//!
//! * `Left` contains `M` iff some factor sequence of `M` starts with factors in
//!   `V_1, …, V_k` (prescribed bottom),
//! * `Right` iff some factor sequence ends with factors in `V_1, …, V_k` (prescribed top),
//! * `Scattered` iff some factor sequence has a subsequence with factors in
//!   `V_1, …, V_k`.
//!
//! Comparisons are only meaningful on representations that have enough factors to
//! fill both words, so `≤` and `≈` are decided on the members of a finite
//! [`Universe`] whose factor multiset contains the per-letter maximum of the two
//! words. Wedge is concatenation, vee is union; neither normalizes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{OpenError, RepError};
use crate::fp::Prime;
use crate::iso::enumerate_universe_with_budget;
use crate::jh::{composition_factors, jh_sequences, FactorSequence};
use crate::kernel::NcLattice;
use crate::matching::saturates_left;
use crate::quiver::{Quiver, QuiverKind, SimpleId};
use crate::rep::Representation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Left,
    Right,
    Scattered,
}

impl Flavor {
    pub fn tag(self) -> &'static str {
        match self {
            Flavor::Left => "l",
            Flavor::Right => "r",
            Flavor::Scattered => "o",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Flavor> {
        match tag {
            "l" => Some(Flavor::Left),
            "r" => Some(Flavor::Right),
            "o" => Some(Flavor::Scattered),
            _ => None,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A set of simples, as a bitmask over simple indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u64);

impl Letter {
    pub const EMPTY: Letter = Letter(0);

    pub fn from_simples<I: IntoIterator<Item = SimpleId>>(simples: I) -> Letter {
        Letter(simples.into_iter().fold(0, |acc, s| acc | (1u64 << s.0)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, s: SimpleId) -> bool {
        s.0 < 64 && self.0 >> s.0 & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Letter) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn simples(self) -> impl Iterator<Item = SimpleId> {
        (0..64usize)
            .filter(move |&i| self.0 >> i & 1 == 1)
            .map(SimpleId)
    }
}

/// The simples of one quiver over one prime field: the letters' ambient set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    quiver: Arc<Quiver>,
    p: Prime,
}

impl Model {
    pub fn new(quiver: Arc<Quiver>, p: Prime) -> Result<Self, OpenError> {
        let n = quiver.simple_count(p);
        if n > 63 {
            return Err(OpenError::TooManySimples(n));
        }
        Ok(Model { quiver, p })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn simples(&self) -> Vec<SimpleId> {
        self.quiver.simples(self.p)
    }

    /// The letter of all simples.
    pub fn full_letter(&self) -> Letter {
        Letter((1u64 << self.quiver.simple_count(self.p)) - 1)
    }

    /// Every subset of the simples, ordered by bitmask.
    pub fn all_letters(&self) -> Vec<Letter> {
        (0..=self.full_letter().0).map(Letter).collect()
    }

    pub fn letter(&self, simples: &[SimpleId]) -> Result<Letter, OpenError> {
        let n = self.quiver.simple_count(self.p);
        if let Some(s) = simples.iter().find(|s| s.0 >= n) {
            return Err(OpenError::UnknownSimple(s.0));
        }
        Ok(Letter::from_simples(simples.iter().copied()))
    }

    /// Complement of `excluded`. Only the one-loop model has cofinite opens; with
    /// finitely many split simples the result is an explicit set.
    pub fn cofinite(&self, excluded: &[SimpleId]) -> Result<Letter, OpenError> {
        if self.quiver.kind() != QuiverKind::OneLoop {
            return Err(OpenError::CofiniteNotAllowed);
        }
        let ex = self.letter(excluded)?;
        Ok(Letter(self.full_letter().0 & !ex.0))
    }

    pub fn word(&self, flavor: Flavor, letters: &[Letter]) -> Word {
        Word {
            flavor,
            letters: letters.to_vec(),
        }
    }

    /// `1`: the single full letter.
    pub fn one(&self, flavor: Flavor) -> LatticeElement {
        LatticeElement::from(self.word(flavor, &[self.full_letter()]))
    }

    /// `0`: the single empty letter.
    pub fn zero(&self, flavor: Flavor) -> LatticeElement {
        LatticeElement::from(self.word(flavor, &[Letter::EMPTY]))
    }

    pub fn letter_label(&self, l: Letter) -> String {
        if l == self.full_letter() && !l.is_empty() {
            return "*".into();
        }
        let inner: Vec<String> = l.simples().map(|s| self.quiver.simple_label(s)).collect();
        format!("{{{}}}", inner.join(","))
    }

    pub fn letters_label(&self, letters: &[Letter]) -> String {
        letters.iter().map(|&l| self.letter_label(l)).collect()
    }

    pub fn word_label(&self, w: &Word) -> String {
        if w.letters.is_empty() {
            return w.flavor.tag().to_string();
        }
        format!("{} {}", w.flavor, self.letters_label(&w.letters))
    }

    pub fn element_label(&self, x: &LatticeElement) -> String {
        x.words
            .iter()
            .map(|w| {
                if w.is_empty() {
                    x.flavor.tag().to_string()
                } else {
                    format!("{} {}", x.flavor, self.letters_label(w))
                }
            })
            .collect::<Vec<_>>()
            .join(" ∨ ")
    }

    /// Every word of length `1..=max_len` over `alphabet`, shortest first.
    pub fn words_up_to(&self, flavor: Flavor, alphabet: &[Letter], max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for prefix in &layer {
                for &l in alphabet {
                    let mut w = prefix.clone();
                    w.push(l);
                    next.push(w);
                }
            }
            out.extend(next.iter().map(|letters| Word {
                flavor,
                letters: letters.clone(),
            }));
            layer = next;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub flavor: Flavor,
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiset(&self) -> LetterMultiset {
        let mut m = BTreeMap::new();
        for &l in &self.letters {
            *m.entry(l).or_insert(0) += 1;
        }
        LetterMultiset(m)
    }
}

/// Letters with multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LetterMultiset(pub BTreeMap<Letter, usize>);

impl LetterMultiset {
    /// Per-letter maximum of the multiplicities.
    pub fn max_with(mut self, other: &LetterMultiset) -> LetterMultiset {
        for (&l, &c) in &other.0 {
            let e = self.0.entry(l).or_insert(0);
            *e = (*e).max(c);
        }
        self
    }

    pub fn size(&self) -> usize {
        self.0.values().sum()
    }

    /// Letter instances, one entry per unit of multiplicity.
    pub fn instances(&self) -> Vec<Letter> {
        self.0
            .iter()
            .flat_map(|(&l, &c)| std::iter::repeat_n(l, c))
            .collect()
    }

    fn without_empty(mut self) -> LetterMultiset {
        self.0.remove(&Letter::EMPTY);
        self
    }
}

/// `w ∪ w′`: each letter as often as its larger count in either word.
pub fn multiset_union(w: &Word, w2: &Word) -> LetterMultiset {
    w.multiset().max_with(&w2.multiset())
}

/// Does the factor list contain the multiset, each factor used once and lying in its
/// letter?
pub fn factors_contain(factors: &[SimpleId], ms: &LetterMultiset) -> bool {
    let inst = ms.instances();
    let adj: Vec<Vec<usize>> = inst
        .iter()
        .map(|l| {
            factors
                .iter()
                .enumerate()
                .filter(|(_, &s)| l.contains(s))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    saturates_left(&adj, factors.len())
}

pub fn rep_has_multiset(m: &Representation, ms: &LetterMultiset) -> Result<bool, OpenError> {
    Ok(factors_contain(&composition_factors(m)?, ms))
}

/// Does one factor sequence realize the word?
pub fn sequence_matches(seq: &[SimpleId], flavor: Flavor, letters: &[Letter]) -> bool {
    let (u, k) = (seq.len(), letters.len());
    if k > u {
        return false;
    }
    match flavor {
        Flavor::Left => seq.iter().zip(letters).all(|(&s, l)| l.contains(s)),
        Flavor::Right => seq[u - k..]
            .iter()
            .zip(letters)
            .all(|(&s, l)| l.contains(s)),
        Flavor::Scattered => {
            // leftmost greedy embedding is optimal for subsequences
            let mut it = seq.iter();
            letters.iter().all(|l| it.any(|&s| l.contains(s)))
        }
    }
}

/// A sequence realizing `w` on `m`, if any.
pub fn member_witness(m: &Representation, w: &Word) -> Result<Option<FactorSequence>, OpenError> {
    Ok(jh_sequences(m)?
        .into_iter()
        .find(|s| sequence_matches(&s.0, w.flavor, &w.letters)))
}

pub fn member(m: &Representation, w: &Word) -> Result<bool, OpenError> {
    Ok(member_witness(m, w)?.is_some())
}

/// A formal join of basic opens of one flavor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeElement {
    flavor: Flavor,
    words: BTreeSet<Vec<Letter>>,
}

impl From<Word> for LatticeElement {
    fn from(w: Word) -> Self {
        LatticeElement {
            flavor: w.flavor,
            words: BTreeSet::from([w.letters]),
        }
    }
}

impl LatticeElement {
    pub fn new(flavor: Flavor, words: impl IntoIterator<Item = Vec<Letter>>) -> Option<Self> {
        let words: BTreeSet<_> = words.into_iter().collect();
        (!words.is_empty()).then_some(LatticeElement { flavor, words })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        self.words.iter().map(|l| Word {
            flavor: self.flavor,
            letters: l.clone(),
        })
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    /// Per-letter maximum over all words.
    pub fn multiset(&self) -> LetterMultiset {
        self.words().fold(LetterMultiset::default(), |acc, w| {
            acc.max_with(&w.multiset())
        })
    }

    pub fn matches(&self, seq: &[SimpleId]) -> bool {
        self.words
            .iter()
            .any(|w| sequence_matches(seq, self.flavor, w))
    }

    fn check_flavor(&self, other: &LatticeElement) -> Result<(), OpenError> {
        if self.flavor == other.flavor {
            Ok(())
        } else {
            Err(OpenError::FlavorMismatch(
                self.flavor.to_string(),
                other.flavor.to_string(),
            ))
        }
    }
}

/// Pairwise concatenation, distributed over both joins.
pub fn wedge(x: &LatticeElement, y: &LatticeElement) -> Result<LatticeElement, OpenError> {
    x.check_flavor(y)?;
    let mut words = BTreeSet::new();
    for a in &x.words {
        for b in &y.words {
            let mut w = a.clone();
            w.extend_from_slice(b);
            words.insert(w);
        }
    }
    Ok(LatticeElement {
        flavor: x.flavor,
        words,
    })
}

pub fn vee(x: &LatticeElement, y: &LatticeElement) -> Result<LatticeElement, OpenError> {
    x.check_flavor(y)?;
    Ok(LatticeElement {
        flavor: x.flavor,
        words: x.words.union(&y.words).cloned().collect(),
    })
}

/// Isomorphism classes up to a total dimension, with their factor sequences cached.
#[derive(Debug, Clone)]
pub struct Universe {
    model: Model,
    max_dim: usize,
    reps: Vec<Representation>,
    seqs: Vec<Vec<Vec<SimpleId>>>,
    factors: Vec<Vec<SimpleId>>,
    skipped_non_split: usize,
}

impl Universe {
    /// All classes with `|α| ≤ max_dim`. Classes with a composition factor that does
    /// not split over `F_p` (one-loop model only) are left out and counted.
    pub fn build(quiver: Arc<Quiver>, p: Prime, max_dim: usize) -> Result<Self, OpenError> {
        Self::build_with_budget(quiver, p, max_dim, crate::iso::DEFAULT_GROUP_BUDGET)
    }

    pub fn build_with_budget(
        quiver: Arc<Quiver>,
        p: Prime,
        max_dim: usize,
        budget: u64,
    ) -> Result<Self, OpenError> {
        let reps = enumerate_universe_with_budget(&quiver, p, max_dim, budget)?;
        Self::from_reps(Model::new(quiver, p)?, max_dim, reps)
    }

    pub fn from_reps(
        model: Model,
        max_dim: usize,
        reps: Vec<Representation>,
    ) -> Result<Self, OpenError> {
        let mut u = Universe {
            model,
            max_dim,
            reps: Vec::new(),
            seqs: Vec::new(),
            factors: Vec::new(),
            skipped_non_split: 0,
        };
        for m in reps {
            match jh_sequences(&m) {
                Ok(s) => {
                    let seqs: Vec<Vec<SimpleId>> = s.into_iter().map(|f| f.0).collect();
                    let mut factors = seqs.first().cloned().unwrap_or_default();
                    factors.sort();
                    u.seqs.push(seqs);
                    u.factors.push(factors);
                    u.reps.push(m);
                }
                Err(RepError::NonSplitFactor { .. }) => u.skipped_non_split += 1,
                Err(e) => return Err(e.into()),
            }
        }
        Ok(u)
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn reps(&self) -> &[Representation] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn sequences(&self, i: usize) -> &[Vec<SimpleId>] {
        &self.seqs[i]
    }

    pub fn factors(&self, i: usize) -> &[SimpleId] {
        &self.factors[i]
    }

    pub fn skipped_non_split(&self) -> usize {
        self.skipped_non_split
    }

    pub fn member_at(&self, i: usize, x: &LatticeElement) -> bool {
        self.seqs[i].iter().any(|s| x.matches(s))
    }

    pub fn has_multiset_at(&self, i: usize, ms: &LetterMultiset) -> bool {
        factors_contain(&self.factors[i], ms)
    }

    /// Indices of the members of `x`.
    pub fn members(&self, x: &LatticeElement) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.member_at(i, x)).collect()
    }

    /// Qualifying multiset for comparing `x` and `y`: the per-letter maximum over all
    /// of their words. The empty letter is dropped, since no factor can fill it and
    /// keeping it would make every comparison with `0` vacuous.
    pub fn qualifying(x: &LatticeElement, y: &LatticeElement) -> LetterMultiset {
        x.multiset().max_with(&y.multiset()).without_empty()
    }

    /// A qualifying class in `x` but not in `y`.
    pub fn leq_witness(&self, x: &LatticeElement, y: &LatticeElement) -> Option<usize> {
        let ms = Self::qualifying(x, y);
        (0..self.len()).find(|&i| {
            self.has_multiset_at(i, &ms) && self.member_at(i, x) && !self.member_at(i, y)
        })
    }

    pub fn leq(&self, x: &LatticeElement, y: &LatticeElement) -> bool {
        self.leq_witness(x, y).is_none()
    }

    pub fn equiv(&self, x: &LatticeElement, y: &LatticeElement) -> bool {
        self.leq(x, y) && self.leq(y, x)
    }
}

pub fn leq(x: &LatticeElement, y: &LatticeElement, universe: &Universe) -> bool {
    universe.leq(x, y)
}

pub fn equiv(x: &LatticeElement, y: &LatticeElement, universe: &Universe) -> bool {
    universe.equiv(x, y)
}

/// The basic opens of one flavor over a universe, as a carrier for the axiom checker.
#[derive(Debug, Clone)]
pub struct OpenLattice<'u> {
    universe: &'u Universe,
    flavor: Flavor,
    alphabet: Vec<Letter>,
}

pub fn as_lattice(universe: &Universe, flavor: Flavor, alphabet: Vec<Letter>) -> OpenLattice<'_> {
    OpenLattice {
        universe,
        flavor,
        alphabet,
    }
}

impl<'u> OpenLattice<'u> {
    pub fn universe(&self) -> &Universe {
        self.universe
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    /// Every single-word element of length `1..=max_len` over the alphabet.
    pub fn sample(&self, max_len: usize) -> Vec<LatticeElement> {
        self.universe
            .model()
            .words_up_to(self.flavor, &self.alphabet, max_len)
            .into_iter()
            .map(LatticeElement::from)
            .collect()
    }

    /// Subsets of `sample` with at most `max_size` members whose join is `≈ 1`.
    pub fn covers(&self, sample: &[LatticeElement], max_size: usize) -> Vec<Vec<LatticeElement>> {
        let mut out = Vec::new();
        let mut stack: Vec<(usize, Vec<LatticeElement>)> = vec![(0, Vec::new())];
        while let Some((from, chosen)) = stack.pop() {
            if !chosen.is_empty() && crate::kernel::is_global_cover(self, &chosen) {
                out.push(chosen.clone());
            }
            if chosen.len() == max_size {
                continue;
            }
            for i in (from..sample.len()).rev() {
                let mut next = chosen.clone();
                next.push(sample[i].clone());
                stack.push((i + 1, next));
            }
        }
        out
    }

    pub fn element(&self, letters: &[Letter]) -> LatticeElement {
        LatticeElement::from(Word {
            flavor: self.flavor,
            letters: letters.to_vec(),
        })
    }
}

impl NcLattice for OpenLattice<'_> {
    type Elem = LatticeElement;

    fn zero(&self) -> LatticeElement {
        self.universe.model().zero(self.flavor)
    }

    fn one(&self) -> LatticeElement {
        self.universe.model().one(self.flavor)
    }

    fn wedge(&self, x: &LatticeElement, y: &LatticeElement) -> LatticeElement {
        wedge(x, y).expect("one flavor per lattice")
    }

    fn vee(&self, x: &LatticeElement, y: &LatticeElement) -> LatticeElement {
        vee(x, y).expect("one flavor per lattice")
    }

    fn leq(&self, x: &LatticeElement, y: &LatticeElement) -> bool {
        self.universe.leq(x, y)
    }

    fn describe(&self, x: &LatticeElement) -> String {
        self.universe.model().element_label(x)
    }

    fn leq_witness(&self, x: &LatticeElement, y: &LatticeElement) -> Option<String> {
        self.universe.leq_witness(x, y).map(|i| {
            let q = self.universe.model().quiver();
            let seqs: Vec<String> = self.universe.seqs[i]
                .iter()
                .map(|s| FactorSequence(s.clone()).label(q))
                .collect();
            format!(
                "{} [sequences: {}]",
                self.universe.reps[i],
                seqs.join(" | ")
            )
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::quiver::fixtures;
    use crate::rep::DimVector;

    const S1: SimpleId = SimpleId(0);
    const S2: SimpleId = SimpleId(1);

    fn l(s: &[SimpleId]) -> Letter {
        Letter::from_simples(s.iter().copied())
    }

    fn x_ind() -> Representation {
        Representation::new(
            Arc::new(fixtures::a2()),
            Prime::TWO,
            DimVector(vec![1, 1]),
            vec![Matrix::identity(Prime::TWO, 1)],
        )
        .unwrap()
    }

    fn w(flavor: Flavor, letters: &[Letter]) -> Word {
        Word {
            flavor,
            letters: letters.to_vec(),
        }
    }

    #[test]
    fn membership_examples() {
        let x = x_ind();
        assert!(member(&x, &w(Flavor::Left, &[l(&[S2]), l(&[S1])])).unwrap());
        assert!(!member(&x, &w(Flavor::Left, &[l(&[S1]), l(&[S2])])).unwrap());
        assert!(member(&x, &w(Flavor::Right, &[l(&[S1])])).unwrap());
        assert!(member(&x, &w(Flavor::Scattered, &[l(&[S1])])).unwrap());
        let full = l(&[S1, S2]);
        for f in [Flavor::Left, Flavor::Right, Flavor::Scattered] {
            assert!(!member(&x, &w(f, &[full, full, full])).unwrap());
        }
        assert_eq!(
            member_witness(&x, &w(Flavor::Left, &[l(&[S2])])).unwrap(),
            Some(FactorSequence(vec![S2, S1]))
        );
    }

    #[test]
    fn multiset_union_examples() {
        let (a, b) = (l(&[S1]), l(&[S2]));
        let u = multiset_union(&w(Flavor::Left, &[a]), &w(Flavor::Left, &[a]));
        assert_eq!(u.0, BTreeMap::from([(a, 1)]));
        let u = multiset_union(&w(Flavor::Left, &[a, a]), &w(Flavor::Left, &[a, b]));
        assert_eq!(u.0, BTreeMap::from([(a, 2), (b, 1)]));
        let full = l(&[S1, S2]);
        let u = multiset_union(&w(Flavor::Left, &[b, a]), &w(Flavor::Left, &[full]));
        assert_eq!(u.0, BTreeMap::from([(a, 1), (b, 1), (full, 1)]));
    }

    #[test]
    fn rep_has_multiset_examples() {
        let x = x_ind();
        let ms = |pairs: &[(Letter, usize)]| LetterMultiset(pairs.iter().copied().collect());
        assert!(rep_has_multiset(&x, &ms(&[(l(&[S1]), 1), (l(&[S1, S2]), 1)])).unwrap());
        assert!(!rep_has_multiset(&x, &ms(&[(l(&[S1]), 2)])).unwrap());
        assert!(rep_has_multiset(&x, &ms(&[])).unwrap());
    }

    #[test]
    fn wedge_and_vee() {
        let (a, b) = (l(&[S1]), l(&[S2]));
        let e = |ls: &[Letter]| LatticeElement::from(w(Flavor::Left, ls));
        assert_eq!(wedge(&e(&[b]), &e(&[a])).unwrap(), e(&[b, a]));
        let ab = vee(&e(&[a]), &e(&[b])).unwrap();
        assert_eq!(ab.word_count(), 2);
        assert_eq!(vee(&ab, &ab).unwrap(), ab);
        let c = l(&[S1, S2]);
        let d = wedge(&ab, &e(&[c])).unwrap();
        assert_eq!(d, vee(&e(&[a, c]), &e(&[b, c])).unwrap());
        let r = LatticeElement::from(w(Flavor::Right, &[a]));
        assert!(matches!(
            wedge(&e(&[a]), &r),
            Err(OpenError::FlavorMismatch(..))
        ));
    }

    #[test]
    fn order_and_equivalence_on_a2() {
        let q = Arc::new(fixtures::a2());
        let u = Universe::build(q, Prime::TWO, 3).unwrap();
        let m = u.model().clone();
        let e = |ls: &[Letter]| LatticeElement::from(w(Flavor::Left, ls));
        let (s1, s2) = (l(&[S1]), l(&[S2]));

        assert!(u.leq(&e(&[s2, s1]), &e(&[s2])));
        let x1 = wedge(&e(&[s2]), &m.one(Flavor::Left)).unwrap();
        assert!(u.equiv(&x1, &e(&[s2])));
        assert!(!u.leq(&e(&[s2, s1]), &e(&[s1, s2])));
        assert!(!u.equiv(&e(&[s1, s2]), &e(&[s2, s1])));
        assert!(u.equiv(&e(&[s1, s2]), &e(&[s1, s2])));
        assert!(u.equiv(&vee(&m.zero(Flavor::Left), &e(&[s1])).unwrap(), &e(&[s1])));
    }

    #[test]
    fn labels() {
        let m = Model::new(Arc::new(fixtures::a2()), Prime::TWO).unwrap();
        let word = w(Flavor::Left, &[l(&[S2]), Letter::EMPTY, m.full_letter()]);
        assert_eq!(m.word_label(&word), "l {S2}{}*");
        let lp = Model::new(Arc::new(fixtures::one_loop()), Prime::TWO).unwrap();
        assert_eq!(lp.cofinite(&[SimpleId(0)]).unwrap(), l(&[SimpleId(1)]));
        assert_eq!(m.cofinite(&[S1]), Err(OpenError::CofiniteNotAllowed));
    }

    #[test]
    fn word_sampler_counts() {
        let m = Model::new(Arc::new(fixtures::a2()), Prime::TWO).unwrap();
        let words = m.words_up_to(Flavor::Left, &m.all_letters(), 2);
        assert_eq!(words.len(), 4 + 16);
    }
}
