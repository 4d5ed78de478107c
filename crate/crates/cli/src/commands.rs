//! One function per subcommand. Each returns a [`Report`]; printing and exit codes
//! are left to the binary.

use std::fmt::Write as _;
use std::sync::Arc;

use nctop_core::jh::jh_sequences_with_budget;
use nctop_core::kernel::{check_axiom, is_idempotent, AxiomId, AxiomReport, NcLattice, Side};
use nctop_core::monoid::{
    check_monoid_equivalence, check_prefix_membership, check_relation_semantics,
    exists_prefix_rewrite, monoid_eq, relations_from_quiver, semantic_set_with_budget, word_class,
    MonoidWord, RewriteSide, POINTS_CAVEAT,
};
use nctop_core::opens::{
    as_lattice, member_witness, Flavor, LatticeElement, OpenLattice, Universe,
};
use nctop_core::{Prime, Quiver, QuiverKind, Representation};

use crate::report::{Report, Scale, Verdict};
use crate::syntax::{parse_element, parse_word};
use crate::CliError;

pub const FINITE_FIELD: &str = "finite-field: verdicts are about F_p-points";
pub const SAMPLE_BOUNDED: &str = "sample-bounded: a pass means no counterexample at this scale";

#[derive(Debug, Clone, Copy)]
pub struct Params {
    pub p: Prime,
    pub max_dim: usize,
    pub max_word_len: usize,
    pub budget: u64,
}

impl Params {
    pub fn new(p: Prime) -> Self {
        Params {
            p,
            max_dim: 3,
            max_word_len: 2,
            budget: crate::DEFAULT_BUDGET,
        }
    }

    fn scale(&self) -> Scale {
        Scale {
            p: self.p.get(),
            budget: self.budget,
            ..Scale::default()
        }
    }

    fn universe_scale(&self) -> Scale {
        Scale {
            max_dim: Some(self.max_dim),
            max_word_len: Some(self.max_word_len),
            ..self.scale()
        }
    }

    pub fn universe(&self, q: &Arc<Quiver>) -> Result<Universe, CliError> {
        Ok(Universe::build_with_budget(
            q.clone(),
            self.p,
            self.max_dim,
            self.budget,
        )?)
    }
}

fn universe_caveats(r: &mut Report, u: &Universe) {
    r.caveat(FINITE_FIELD);
    r.caveat(SAMPLE_BOUNDED);
    if u.skipped_non_split() > 0 {
        r.caveat(format!(
            "{} classes with a non-split factor left out of the universe",
            u.skipped_non_split()
        ));
    }
}

pub fn cmd_jh(m: &Representation, budget: u64) -> Result<Report, CliError> {
    let q = m.quiver();
    let scale = Scale {
        p: m.modulus().get(),
        budget,
        ..Scale::default()
    };
    let mut r = Report::new("jh", q.name(), scale);
    let seqs = jh_sequences_with_budget(m, budget)?;
    r.line(format!("{} sequence(s), bottom to top", seqs.len()));
    for s in &seqs {
        r.line(s.label(q));
    }
    Ok(r)
}

pub fn cmd_member(m: &Representation, word: &str, budget: u64) -> Result<Report, CliError> {
    let q = m.quiver();
    let model = nctop_core::opens::Model::new(q.clone(), m.modulus())?;
    let w = parse_word(&model, word)?;
    let scale = Scale {
        p: m.modulus().get(),
        budget,
        ..Scale::default()
    };
    let mut r = Report::new(format!("member {}", model.word_label(&w)), q.name(), scale);
    match member_witness(m, &w)? {
        Some(seq) => {
            r.line("true");
            r.witness(seq.label(q));
        }
        None => {
            r.line("false");
            r.verdict = Verdict::Fail;
        }
    }
    Ok(r)
}

/// Main columns checked for a flavor, plus the columns probed for expected failures.
pub fn columns(flavor: Flavor) -> (Vec<AxiomId>, Vec<AxiomId>) {
    match flavor {
        Flavor::Left => (
            AxiomId::columns(&[Side::Left, Side::Middle]),
            AxiomId::columns(&[Side::Right]),
        ),
        Flavor::Right => (
            AxiomId::columns(&[Side::Middle, Side::Right]),
            AxiomId::columns(&[Side::Left]),
        ),
        Flavor::Scattered => (AxiomId::all(), Vec::new()),
    }
}

pub struct AxiomRun {
    pub main: Vec<AxiomReport<LatticeElement>>,
    pub probes: Vec<AxiomReport<LatticeElement>>,
    pub sample_size: usize,
    pub cover_count: usize,
}

impl AxiomRun {
    pub fn passed(&self) -> bool {
        self.main.iter().all(AxiomReport::passed)
    }
}

/// Every axiom cell of the flavor's columns over all words of length `1..=max_len`
/// in all letters, with covers of at most two sample words.
pub fn run_axioms(u: &Universe, flavor: Flavor, max_len: usize) -> Result<AxiomRun, CliError> {
    let l = as_lattice(u, flavor, u.model().all_letters());
    let sample = l.sample(max_len);
    let covers = l.covers(&sample, 2);
    let (main, probe) = columns(flavor);
    let run = |ids: Vec<AxiomId>| -> Result<Vec<_>, CliError> {
        ids.into_iter()
            .map(|ax| Ok(check_axiom(&l, ax, &sample, &covers)?))
            .collect()
    };
    Ok(AxiomRun {
        main: run(main)?,
        probes: run(probe)?,
        sample_size: sample.len(),
        cover_count: covers.len(),
    })
}

fn describe_witness(l: &OpenLattice<'_>, rep: &AxiomReport<LatticeElement>) -> Option<String> {
    let w = rep.violations.first()?;
    let mut s = format!("{}:", rep.axiom);
    for (name, e) in &w.vars {
        let _ = write!(s, " {name}={}", l.describe(e));
    }
    if !w.cover.is_empty() {
        let c: Vec<String> = w.cover.iter().map(|e| l.describe(e)).collect();
        let _ = write!(s, " cover=[{}]", c.join(", "));
    }
    let _ = write!(s, "; {}", w.failed);
    Some(s)
}

fn cell_line(rep: &AxiomReport<LatticeElement>, tag: &str) -> String {
    let mut s = format!(
        "{:<10} {:<5} {} instance(s), {} violation(s)",
        rep.axiom.to_string(),
        tag,
        rep.checked,
        rep.violations.len()
    );
    if let Some(n) = &rep.note {
        let _ = write!(s, " ({n})");
    }
    s
}

pub fn cmd_axioms(q: &Arc<Quiver>, flavor: Flavor, params: &Params) -> Result<Report, CliError> {
    let u = params.universe(q)?;
    let run = run_axioms(&u, flavor, params.max_word_len)?;
    let l = as_lattice(&u, flavor, u.model().all_letters());
    let mut r = Report::new(
        format!("axioms {}", flavor.tag()),
        q.name(),
        params.universe_scale(),
    );
    r.line(format!(
        "universe: {} classes; sample: {} words; covers: {}",
        u.len(),
        run.sample_size,
        run.cover_count
    ));
    for rep in &run.main {
        r.line(cell_line(rep, if rep.passed() { "pass" } else { "FAIL" }));
        if let Some(w) = describe_witness(&l, rep) {
            r.witness(w);
        }
    }
    for rep in &run.probes {
        let tag = if rep.passed() { "holds" } else { "fails" };
        r.line(format!("probe {}", cell_line(rep, tag)));
        if let Some(w) = describe_witness(&l, rep) {
            r.witness(format!("probe {w}"));
        }
    }
    if !run.probes.is_empty() {
        r.caveat("opposite-column probes are informational and do not affect the verdict");
    }
    r.fail_if(!run.passed());
    universe_caveats(&mut r, &u);
    Ok(r)
}

fn acyclic(q: &Quiver) -> Result<(), CliError> {
    if q.kind() == QuiverKind::Acyclic {
        Ok(())
    } else {
        Err(CliError::Monoid(nctop_core::MonoidError::UnsupportedShape))
    }
}

#[derive(Debug, Clone)]
pub enum MonoidCmd {
    Relations,
    Eq(String, String),
    Prefix {
        word: String,
        prefix: String,
        side: Flavor,
    },
    Semcheck,
    Points(String),
}

pub fn cmd_monoid(q: &Arc<Quiver>, sub: &MonoidCmd, params: &Params) -> Result<Report, CliError> {
    acyclic(q)?;
    let rels = relations_from_quiver(q)?;
    let parse = |s: &str| MonoidWord::parse(q, s);
    let mut r;
    match sub {
        MonoidCmd::Relations => {
            r = Report::new("monoid relations", q.name(), params.scale());
            for rel in rels.relations() {
                r.line(rel.label(q));
            }
            r.caveat("listed relation families only; not a full presentation");
        }
        MonoidCmd::Eq(a, b) => {
            let (a, b) = (parse(a)?, parse(b)?);
            r = Report::new(
                format!("monoid eq {} {}", a.label(q), b.label(q)),
                q.name(),
                params.scale(),
            );
            let eq = monoid_eq(&a, &b, &rels);
            r.line(eq.to_string());
            r.line(format!(
                "class of {} has {} word(s)",
                a.label(q),
                word_class(&a, &rels).len()
            ));
            r.fail_if(!eq);
        }
        MonoidCmd::Prefix { word, prefix, side } => {
            let (v, pre) = (parse(word)?, parse(prefix)?);
            let side = RewriteSide::try_from(*side)?;
            r = Report::new(
                format!("monoid prefix {} {} {:?}", v.label(q), pre.label(q), side),
                q.name(),
                params.scale(),
            );
            let ok = exists_prefix_rewrite(&v, &pre, &rels, side);
            r.line(ok.to_string());
            if ok {
                let hit = word_class(&v, &rels).into_iter().find(|w| match side {
                    RewriteSide::Left => w.0.starts_with(&pre.0),
                    RewriteSide::Right => w.0.ends_with(&pre.0),
                });
                if let Some(h) = hit {
                    r.witness(h.label(q));
                }
            }
            r.fail_if(!ok);
        }
        MonoidCmd::Semcheck => {
            r = Report::new("monoid semcheck", q.name(), params.scale());
            let rep = check_relation_semantics(&rels, q, params.p)?;
            for c in &rep.checks {
                r.line(format!(
                    "{}: {} vs {} point(s), {}",
                    c.relation.label(q),
                    c.lhs_size,
                    c.rhs_size,
                    if c.passed() { "pass" } else { "FAIL" }
                ));
                if let Some(w) = &c.witness {
                    r.witness(format!("{}: {w}", c.relation.label(q)));
                }
            }
            for c in &rep.caveats {
                r.caveat(c.as_str());
            }
            r.fail_if(!rep.passed());
        }
        MonoidCmd::Points(v) => {
            let v = parse(v)?;
            r = Report::new(
                format!("monoid points {}", v.label(q)),
                q.name(),
                params.scale(),
            );
            let s = semantic_set_with_budget(&v, q, params.p, params.budget)?;
            r.line(format!(
                "{} point(s) of dimension {:?}",
                s.reps.len(),
                s.dim.0
            ));
            for m in &s.reps {
                r.line(m.to_string());
            }
            r.caveat(POINTS_CAVEAT);
        }
    }
    r.caveat(FINITE_FIELD);
    Ok(r)
}

#[derive(Debug, Clone)]
pub enum CheckCmd {
    /// Basic-open membership against prefix rewriting in the monoid.
    Prefix(String),
    /// Monoid-level against universe-level equivalence of two words.
    MonoidEquiv {
        a: String,
        b: String,
        star_len_bound: usize,
    },
    /// `UV ≈ VU` for all letter pairs and idempotency of every basic open.
    Commute,
    Equiv(String, String),
    Leq(String, String),
}

pub fn cmd_check(q: &Arc<Quiver>, sub: &CheckCmd, params: &Params) -> Result<Report, CliError> {
    let u = params.universe(q)?;
    let model = u.model();
    let mut r;
    match sub {
        CheckCmd::Prefix(w) => {
            let w = parse_word(model, w)?;
            r = Report::new(
                format!("check prefix {}", model.word_label(&w)),
                q.name(),
                params.universe_scale(),
            );
            let rels = relations_from_quiver(q)?;
            let rep = check_prefix_membership(&w, &u, &rels)?;
            r.line(format!(
                "{} class(es) checked, {} disagreement(s)",
                rep.checked,
                rep.disagreements.len()
            ));
            for &i in &rep.disagreements {
                r.witness(u.reps()[i].to_string());
            }
            for c in &rep.caveats {
                r.caveat(c.as_str());
            }
            r.fail_if(!rep.agrees());
        }
        CheckCmd::MonoidEquiv {
            a,
            b,
            star_len_bound,
        } => {
            let (a, b) = (parse_word(model, a)?, parse_word(model, b)?);
            let mut scale = params.universe_scale();
            scale.star_len_bound = Some(*star_len_bound);
            r = Report::new(
                format!(
                    "check monoid-equiv {} {}",
                    model.word_label(&a),
                    model.word_label(&b)
                ),
                q.name(),
                scale,
            );
            let rels = relations_from_quiver(q)?;
            let rep = check_monoid_equivalence(&a, &b, &u, &rels, *star_len_bound)?;
            r.line(format!(
                "monoid level: {} ({} word(s) scanned)",
                rep.monoid_level, rep.words_scanned
            ));
            r.line(format!("universe level: {}", rep.universe_level));
            if let Some(v) = &rep.monoid_witness {
                r.witness(format!("monoid: {}", v.label(q)));
            }
            if let Some(i) = rep.universe_witness {
                r.witness(format!("universe: {}", u.reps()[i]));
            }
            for c in &rep.caveats {
                r.caveat(c.as_str());
            }
            r.fail_if(!rep.agrees());
        }
        CheckCmd::Commute => {
            r = Report::new("check commute", q.name(), params.universe_scale());
            let sweep = commute_sweep(&u, params.max_word_len);
            r.line(format!(
                "{} letter pair(s) per flavor, {} non-commuting",
                sweep.pairs,
                sweep.non_commuting.len()
            ));
            r.line(format!(
                "{} basic open(s) per flavor, {} not idempotent",
                sweep.opens,
                sweep.not_idempotent.len()
            ));
            for w in sweep.non_commuting.iter().chain(&sweep.not_idempotent) {
                r.witness(w.clone());
            }
            r.fail_if(!sweep.passed());
        }
        CheckCmd::Equiv(a, b) | CheckCmd::Leq(a, b) => {
            let is_leq = matches!(sub, CheckCmd::Leq(..));
            let (x, y) = (parse_element(model, a)?, parse_element(model, b)?);
            if x.flavor() != y.flavor() {
                return Err(CliError::Syntax("both sides need the same flavor".into()));
            }
            let op = if is_leq { "leq" } else { "equiv" };
            r = Report::new(
                format!(
                    "check {op} {} {}",
                    model.element_label(&x),
                    model.element_label(&y)
                ),
                q.name(),
                params.universe_scale(),
            );
            let w =
                u.leq_witness(&x, &y)
                    .or_else(|| if is_leq { None } else { u.leq_witness(&y, &x) });
            r.line(w.is_none().to_string());
            if let Some(i) = w {
                let seqs: Vec<String> = u
                    .sequences(i)
                    .iter()
                    .map(|s| nctop_core::FactorSequence(s.clone()).label(q))
                    .collect();
                r.witness(format!("{} [sequences: {}]", u.reps()[i], seqs.join(" | ")));
            }
            r.fail_if(w.is_some());
        }
    }
    universe_caveats(&mut r, &u);
    Ok(r)
}

pub struct CommuteSweep {
    pub pairs: usize,
    pub opens: usize,
    pub non_commuting: Vec<String>,
    pub not_idempotent: Vec<String>,
}

impl CommuteSweep {
    pub fn passed(&self) -> bool {
        self.non_commuting.is_empty() && self.not_idempotent.is_empty()
    }
}

/// For both one-sided flavors: `UV ≈ VU` over all letters, and `x ∧ x ≈ x` for every
/// basic open with words of length `1..=max_len`.
pub fn commute_sweep(u: &Universe, max_len: usize) -> CommuteSweep {
    let model = u.model();
    let letters = model.all_letters();
    let mut out = CommuteSweep {
        pairs: letters.len() * letters.len(),
        opens: 0,
        non_commuting: Vec::new(),
        not_idempotent: Vec::new(),
    };
    for flavor in [Flavor::Left, Flavor::Right] {
        for &a in &letters {
            for &b in &letters {
                let ab = LatticeElement::from(model.word(flavor, &[a, b]));
                let ba = LatticeElement::from(model.word(flavor, &[b, a]));
                if !u.equiv(&ab, &ba) {
                    out.non_commuting.push(format!(
                        "{} vs {}",
                        model.element_label(&ab),
                        model.element_label(&ba)
                    ));
                }
            }
        }
        let l = as_lattice(u, flavor, letters.clone());
        let sample = l.sample(max_len);
        out.opens = sample.len();
        for x in &sample {
            if !is_idempotent(&l, x) {
                out.not_idempotent
                    .push(format!("not idempotent: {}", l.describe(x)));
            }
        }
    }
    out
}

/// DOT digraph of the strict order `x < y` between all words of length `0..=max_len`.
pub fn cmd_dot(q: &Arc<Quiver>, flavor: Flavor, params: &Params) -> Result<String, CliError> {
    let u = params.universe(q)?;
    let model = u.model();
    let mut words = vec![LatticeElement::from(model.word(flavor, &[]))];
    words.extend(as_lattice(&u, flavor, model.all_letters()).sample(params.max_word_len));
    let mut out = String::new();
    let _ = writeln!(
        out,
        "digraph \"{} {} p={} dim<={}\" {{",
        q.name(),
        flavor.tag(),
        params.p,
        params.max_dim
    );
    for (i, w) in words.iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{i} [label=\"{}\"];",
            model.element_label(w).replace('"', "\\\"")
        );
    }
    for (i, x) in words.iter().enumerate() {
        for (j, y) in words.iter().enumerate() {
            if i != j && u.leq(x, y) && !u.leq(y, x) {
                let _ = writeln!(out, "  n{i} -> n{j};");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
