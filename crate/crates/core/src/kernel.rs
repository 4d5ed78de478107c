//! Checker for the (A1)–(A10) axiom table of (one-sided) non-commutative topologies.
//!
//! A carrier is anything implementing [`NcLattice`]. Axioms are instantiated over an
//! explicit finite sample, so a passing [`AxiomReport`] means "no counterexample at
//! this scale" and always carries the number of instances it checked.
//!
//! The table has three columns. Left topologies use the left and middle columns,
//! right topologies the middle and right ones; only (A3) and (A7) have a middle entry.

use std::fmt;

use crate::error::KernelError;

pub trait NcLattice {
    type Elem: Clone + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn wedge(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn vee(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool;

    fn eq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.leq(x, y) && self.leq(y, x)
    }

    fn describe(&self, x: &Self::Elem) -> String {
        format!("{x:?}")
    }

    /// Why `x ≤ y` fails, if the carrier can name a point.
    fn leq_witness(&self, _x: &Self::Elem, _y: &Self::Elem) -> Option<String> {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A9,
    A10,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::A1,
        Family::A2,
        Family::A3,
        Family::A4,
        Family::A5,
        Family::A6,
        Family::A7,
        Family::A8,
        Family::A9,
        Family::A10,
    ];

    fn is_middle(self) -> bool {
        matches!(self, Family::A3 | Family::A7)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Middle,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Middle => "middle",
            Side::Right => "right",
        })
    }
}

/// A cell of the axiom table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxiomId {
    family: Family,
    side: Side,
}

impl AxiomId {
    pub fn new(family: Family, side: Side) -> Result<Self, KernelError> {
        if family.is_middle() != (side == Side::Middle) {
            return Err(KernelError::InvalidAxiom(
                family.to_string(),
                side.to_string(),
            ));
        }
        Ok(AxiomId { family, side })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn side(self) -> Side {
        self.side
    }

    /// Every valid cell, in table order.
    pub fn all() -> Vec<AxiomId> {
        Self::columns(&[Side::Left, Side::Middle, Side::Right])
    }

    /// Cells of the given columns, in table order.
    pub fn columns(sides: &[Side]) -> Vec<AxiomId> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for &side in &[Side::Left, Side::Middle, Side::Right] {
                if sides.contains(&side) {
                    if let Ok(id) = AxiomId::new(family, side) {
                        out.push(id);
                    }
                }
            }
        }
        out
    }

    pub fn statement(self) -> &'static str {
        use Family::*;
        use Side::*;
        match (self.family, self.side) {
            (A1, Left) => "x ∧ y ≤ x",
            (A1, _) => "x ∧ y ≤ y",
            (A2, Left) => "x ∧ 1 = x, x ∧ 0 = 0",
            (A2, _) => "1 ∧ x = x, 0 ∧ x = 0",
            (A3, _) => "(x ∧ y) ∧ z = x ∧ (y ∧ z)",
            (A4, Left) => "x ≤ y ⇒ z ∧ x ≤ z ∧ y",
            (A4, _) => "x ≤ y ⇒ x ∧ z ≤ y ∧ z",
            (A5, Left) => "x ≤ x ∨ y",
            (A5, _) => "y ≤ x ∨ y",
            (A6, Left) => "x ∨ 1 = 1, x ∨ 0 = x",
            (A6, _) => "1 ∨ x = 1, 0 ∨ x = x",
            (A7, _) => "(x ∨ y) ∨ z = x ∨ (y ∨ z)",
            (A8, Left) => "x ≤ y ⇒ x ∨ z ≤ y ∨ z",
            (A8, _) => "x ≤ y ⇒ z ∨ x ≤ z ∨ y",
            (A9, Left) => "a ∨ (a ∧ b) ≤ (a ∨ a) ∧ b",
            (A9, _) => "a ∨ (b ∧ a) ≤ (a ∨ b) ∧ a",
            (A10, Left) => "x = (x ∧ λ1) ∨ … ∨ (x ∧ λn)",
            (A10, _) => "x = (λ1 ∧ x) ∨ … ∨ (λn ∧ x)",
        }
    }

    fn arity(self) -> usize {
        use Family::*;
        match self.family {
            A2 | A6 | A10 => 1,
            A1 | A5 | A9 => 2,
            A3 | A4 | A7 | A8 => 3,
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.family, self.side)
    }
}

/// A failed instance: the bound variables, the cover (A10 only) and what broke.
#[derive(Debug, Clone)]
pub struct Witness<E> {
    pub vars: Vec<(&'static str, E)>,
    pub cover: Vec<E>,
    pub failed: String,
}

#[derive(Debug, Clone)]
pub struct AxiomReport<E> {
    pub axiom: AxiomId,
    pub checked: usize,
    pub violations: Vec<Witness<E>>,
    /// Set when the quantifier domain was empty on this sample (A9 without
    /// idempotent pairs, A10 without covers).
    pub note: Option<String>,
}

impl<E> AxiomReport<E> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Combines two reports for the same axiom; associative and order-independent up
    /// to the order of violations.
    pub fn merge(mut self, other: AxiomReport<E>) -> AxiomReport<E> {
        debug_assert_eq!(self.axiom, other.axiom);
        self.checked += other.checked;
        self.violations.extend(other.violations);
        self.note = match (self.note, other.note) {
            (Some(a), Some(_)) => Some(a),
            _ => None,
        };
        self
    }
}

fn leq_or<L: NcLattice>(l: &L, x: &L::Elem, y: &L::Elem, what: &str) -> Result<(), String> {
    if l.leq(x, y) {
        Ok(())
    } else {
        Err(match l.leq_witness(x, y) {
            Some(w) => format!("{what} fails: {w}"),
            None => format!("{what} fails"),
        })
    }
}

fn eq_or<L: NcLattice>(
    l: &L,
    x: &L::Elem,
    y: &L::Elem,
    lhs: &str,
    rhs: &str,
) -> Result<(), String> {
    leq_or(l, x, y, &format!("{lhs} ≤ {rhs}"))?;
    leq_or(l, y, x, &format!("{rhs} ≤ {lhs}"))
}

/// Evaluates one instance. `Ok` when it holds (or its hypothesis is false).
fn instance<L: NcLattice>(
    l: &L,
    axiom: AxiomId,
    args: &[L::Elem],
    cover: &[L::Elem],
) -> Result<(), String> {
    use Family::*;
    let left = axiom.side == Side::Left;
    let (one, zero) = (l.one(), l.zero());
    match axiom.family {
        A1 => {
            let (x, y) = (&args[0], &args[1]);
            let xy = l.wedge(x, y);
            if left {
                leq_or(l, &xy, x, "x ∧ y ≤ x")
            } else {
                leq_or(l, &xy, y, "x ∧ y ≤ y")
            }
        }
        A2 => {
            let x = &args[0];
            if left {
                eq_or(l, &l.wedge(x, &one), x, "x ∧ 1", "x")?;
                eq_or(l, &l.wedge(x, &zero), &zero, "x ∧ 0", "0")
            } else {
                eq_or(l, &l.wedge(&one, x), x, "1 ∧ x", "x")?;
                eq_or(l, &l.wedge(&zero, x), &zero, "0 ∧ x", "0")
            }
        }
        A3 => {
            let (x, y, z) = (&args[0], &args[1], &args[2]);
            let a = l.wedge(&l.wedge(x, y), z);
            let b = l.wedge(x, &l.wedge(y, z));
            eq_or(l, &a, &b, "(x ∧ y) ∧ z", "x ∧ (y ∧ z)")
        }
        A4 => {
            let (x, y, z) = (&args[0], &args[1], &args[2]);
            if !l.leq(x, y) {
                return Ok(());
            }
            if left {
                leq_or(l, &l.wedge(z, x), &l.wedge(z, y), "z ∧ x ≤ z ∧ y")
            } else {
                leq_or(l, &l.wedge(x, z), &l.wedge(y, z), "x ∧ z ≤ y ∧ z")
            }
        }
        A5 => {
            let (x, y) = (&args[0], &args[1]);
            let j = l.vee(x, y);
            if left {
                leq_or(l, x, &j, "x ≤ x ∨ y")
            } else {
                leq_or(l, y, &j, "y ≤ x ∨ y")
            }
        }
        A6 => {
            let x = &args[0];
            if left {
                eq_or(l, &l.vee(x, &one), &one, "x ∨ 1", "1")?;
                eq_or(l, &l.vee(x, &zero), x, "x ∨ 0", "x")
            } else {
                eq_or(l, &l.vee(&one, x), &one, "1 ∨ x", "1")?;
                eq_or(l, &l.vee(&zero, x), x, "0 ∨ x", "x")
            }
        }
        A7 => {
            let (x, y, z) = (&args[0], &args[1], &args[2]);
            let a = l.vee(&l.vee(x, y), z);
            let b = l.vee(x, &l.vee(y, z));
            eq_or(l, &a, &b, "(x ∨ y) ∨ z", "x ∨ (y ∨ z)")
        }
        A8 => {
            let (x, y, z) = (&args[0], &args[1], &args[2]);
            if !l.leq(x, y) {
                return Ok(());
            }
            if left {
                leq_or(l, &l.vee(x, z), &l.vee(y, z), "x ∨ z ≤ y ∨ z")
            } else {
                leq_or(l, &l.vee(z, x), &l.vee(z, y), "z ∨ x ≤ z ∨ y")
            }
        }
        A9 => {
            let (a, b) = (&args[0], &args[1]);
            if left {
                let lhs = l.vee(a, &l.wedge(a, b));
                let rhs = l.wedge(&l.vee(a, a), b);
                leq_or(l, &lhs, &rhs, "a ∨ (a ∧ b) ≤ (a ∨ a) ∧ b")
            } else {
                let lhs = l.vee(a, &l.wedge(b, a));
                let rhs = l.wedge(&l.vee(a, b), a);
                leq_or(l, &lhs, &rhs, "a ∨ (b ∧ a) ≤ (a ∨ b) ∧ a")
            }
        }
        A10 => {
            let x = &args[0];
            let mut parts = cover.iter().map(|lam| {
                if left {
                    l.wedge(x, lam)
                } else {
                    l.wedge(lam, x)
                }
            });
            let first = parts.next().expect("nonempty cover");
            let joined = parts.fold(first, |acc, p| l.vee(&acc, &p));
            if left {
                eq_or(l, x, &joined, "x", "∨(x ∧ λi)")
            } else {
                eq_or(l, x, &joined, "x", "∨(λi ∧ x)")
            }
        }
    }
}

fn var_names(arity: usize, family: Family) -> &'static [&'static str] {
    match (family, arity) {
        (Family::A9, _) => &["a", "b"],
        (_, 1) => &["x"],
        (_, 2) => &["x", "y"],
        _ => &["x", "y", "z"],
    }
}

/// Checks that `∨ cover ≈ 1`.
pub fn is_global_cover<L: NcLattice>(l: &L, cover: &[L::Elem]) -> bool {
    let Some(first) = cover.first() else {
        return false;
    };
    let joined = cover[1..]
        .iter()
        .fold(first.clone(), |acc, c| l.vee(&acc, c));
    l.eq(&joined, &l.one())
}

/// Instantiates `axiom` over all tuples from `sample` (A9: idempotent pairs `a ≤ b`;
/// A10: every element against every supplied cover).
pub fn check_axiom<L: NcLattice>(
    l: &L,
    axiom: AxiomId,
    sample: &[L::Elem],
    covers: &[Vec<L::Elem>],
) -> Result<AxiomReport<L::Elem>, KernelError> {
    let mut report = AxiomReport {
        axiom,
        checked: 0,
        violations: Vec::new(),
        note: None,
    };
    let names = var_names(axiom.arity(), axiom.family);
    let record = |args: Vec<L::Elem>, cover: &[L::Elem], report: &mut AxiomReport<L::Elem>| {
        report.checked += 1;
        if let Err(failed) = instance(l, axiom, &args, cover) {
            report.violations.push(Witness {
                vars: names.iter().copied().zip(args).collect(),
                cover: cover.to_vec(),
                failed,
            });
        }
    };

    match axiom.family {
        Family::A10 => {
            for (i, c) in covers.iter().enumerate() {
                if !is_global_cover(l, c) {
                    return Err(KernelError::InvalidCover(i));
                }
            }
            for x in sample {
                for c in covers {
                    record(vec![x.clone()], c, &mut report);
                }
            }
            if covers.is_empty() {
                report.note = Some("no finite global covers supplied".into());
            }
        }
        Family::A9 => {
            let idem: Vec<&L::Elem> = sample.iter().filter(|a| is_idempotent(l, a)).collect();
            for a in &idem {
                for b in &idem {
                    if l.leq(a, b) {
                        record(vec![(*a).clone(), (*b).clone()], &[], &mut report);
                    }
                }
            }
            if report.checked == 0 {
                report.note = Some("no idempotent pairs a ≤ b in the sample".into());
            }
        }
        _ => match axiom.arity() {
            1 => {
                for x in sample {
                    record(vec![x.clone()], &[], &mut report);
                }
            }
            2 => {
                for x in sample {
                    for y in sample {
                        record(vec![x.clone(), y.clone()], &[], &mut report);
                    }
                }
            }
            _ => {
                for x in sample {
                    for y in sample {
                        for z in sample {
                            record(vec![x.clone(), y.clone(), z.clone()], &[], &mut report);
                        }
                    }
                }
            }
        },
    }
    Ok(report)
}

/// Re-evaluates a single reported instance; `true` when the failure reproduces.
pub fn replay<L: NcLattice>(l: &L, axiom: AxiomId, witness: &Witness<L::Elem>) -> bool {
    let args: Vec<L::Elem> = witness.vars.iter().map(|(_, e)| e.clone()).collect();
    instance(l, axiom, &args, &witness.cover).is_err()
}

/// `x ∧ x = x`.
pub fn is_idempotent<L: NcLattice>(l: &L, x: &L::Elem) -> bool {
    l.eq(&l.wedge(x, x), x)
}

/// Contraction identity `x = (x ∧ λ1) ∨ (x ∧ λ2)` for every sampled pair with
/// `x ≤ λ1 ∨ λ2`. Relative to the sample.
pub fn is_contractible<L: NcLattice>(
    l: &L,
    x: &L::Elem,
    pairs: &[(L::Elem, L::Elem)],
) -> Result<bool, KernelError> {
    if !is_idempotent(l, x) {
        return Err(KernelError::NotIdempotent);
    }
    Ok(pairs
        .iter()
        .all(|(a, b)| !l.leq(x, &l.vee(a, b)) || l.eq(x, &l.vee(&l.wedge(x, a), &l.wedge(x, b)))))
}

/// A finite (∧, ∨)-expression over carrier elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpWord<E> {
    Leaf(E),
    Wedge(Box<OpWord<E>>, Box<OpWord<E>>),
    Vee(Box<OpWord<E>>, Box<OpWord<E>>),
}

impl<E> OpWord<E> {
    pub fn wedge(a: OpWord<E>, b: OpWord<E>) -> Self {
        OpWord::Wedge(Box::new(a), Box::new(b))
    }

    pub fn vee(a: OpWord<E>, b: OpWord<E>) -> Self {
        OpWord::Vee(Box::new(a), Box::new(b))
    }
}

pub fn eval_op_word<L: NcLattice>(l: &L, w: &OpWord<L::Elem>) -> L::Elem {
    match w {
        OpWord::Leaf(e) => e.clone(),
        OpWord::Wedge(a, b) => l.wedge(&eval_op_word(l, a), &eval_op_word(l, b)),
        OpWord::Vee(a, b) => l.vee(&eval_op_word(l, a), &eval_op_word(l, b)),
    }
}

/// Subsets of `{0, …, n-1}` as bitmasks under ∩ and ∪: an ordinary topology.
#[derive(Debug, Clone, Copy)]
pub struct PowersetLattice {
    pub n: u32,
}

impl PowersetLattice {
    pub fn elements(&self) -> Vec<u32> {
        (0..(1u32 << self.n)).collect()
    }
}

impl NcLattice for PowersetLattice {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    fn wedge(&self, x: &u32, y: &u32) -> u32 {
        x & y
    }

    fn vee(&self, x: &u32, y: &u32) -> u32 {
        x | y
    }

    fn leq(&self, x: &u32, y: &u32) -> bool {
        x & !y == 0
    }
}
