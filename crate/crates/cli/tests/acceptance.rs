//! Acceptance suite. Prints one line per criterion and fails only when a result
//! differs from its recorded expectation, so known-red criteria stay visible
//! without breaking the build.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use nctop::commands::{commute_sweep, run_axioms};
use nctop_core::jh::jh_sequences;
use nctop_core::kernel::{check_axiom, AxiomId, Family, PowersetLattice};
use nctop_core::monoid::{
    check_monoid_equivalence, check_prefix_membership, check_relation_semantics, monoid_eq,
    relations_from_quiver, semantic_set, MonoidWord,
};
use nctop_core::opens::{as_lattice, wedge, Flavor, LatticeElement, Letter, Universe};
use nctop_core::quiver::fixtures;
use nctop_core::{
    ext1_dim, iso_test, DimVector, Matrix, Prime, Quiver, RepError, Representation, SimpleId,
};

const P: Prime = Prime::TWO;
const S1: SimpleId = SimpleId(0);
const S2: SimpleId = SimpleId(1);

type Criterion = (&'static str, fn() -> Outcome, bool);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn a2() -> Arc<Quiver> {
    Arc::new(fixtures::a2())
}

fn x_ind() -> Representation {
    Representation::new(a2(), P, DimVector(vec![1, 1]), vec![Matrix::identity(P, 1)]).unwrap()
}

fn is_x_ind(m: &Representation) -> bool {
    m.quiver().name() == "A2" && m.dim() == x_ind().dim() && iso_test(m, &x_ind()).unwrap()
}

fn letter(s: SimpleId) -> Letter {
    Letter::from_simples([s])
}

fn universe(q: Arc<Quiver>) -> Universe {
    Universe::build(q, P, 3).unwrap()
}

fn fixtures4() -> Vec<Arc<Quiver>> {
    vec![
        a2(),
        Arc::new(fixtures::kronecker()),
        Arc::new(fixtures::discrete(2)),
        Arc::new(fixtures::one_loop()),
    ]
}

fn axiom_columns() -> Outcome {
    let mut red = Vec::new();
    let mut times = Vec::new();
    for q in fixtures4() {
        let t = Instant::now();
        let u = universe(q.clone());
        for flavor in [Flavor::Left, Flavor::Right] {
            let run = run_axioms(&u, flavor, 2).unwrap();
            for rep in run.main.iter().filter(|r| !r.passed()) {
                red.push(format!("{} {}", q.name(), rep.axiom));
            }
        }
        times.push(format!("{} {:.1}s", q.name(), t.elapsed().as_secs_f64()));
    }
    let detail = format!(
        "[{}] violations: {}",
        times.join(", "),
        if red.is_empty() {
            "none".into()
        } else {
            red.join(", ")
        }
    );
    outcome(red.is_empty(), detail)
}

fn unit_proper_inclusion() -> Outcome {
    let u = universe(a2());
    let model = u.model();
    let w = LatticeElement::from(model.word(Flavor::Left, &[letter(S2), letter(S1)]));
    let w1 = wedge(&w, &model.one(Flavor::Left)).unwrap();
    let slice = DimVector(vec![1, 1]);
    let on_slice = |x: &LatticeElement| -> BTreeSet<usize> {
        u.members(x)
            .into_iter()
            .filter(|&i| u.reps()[i].dim() == &slice)
            .collect()
    };
    let (small, big) = (on_slice(&w1), on_slice(&w));
    let proper = small.is_subset(&big) && small.len() < big.len();
    let witness = big
        .difference(&small)
        .find(|&&i| u.reps()[i].total_dim() == 2 && is_x_ind(&u.reps()[i]));
    let eq = u.equiv(&w1, &w);
    outcome(
        proper && witness.is_some() && eq,
        format!(
            "slice (1,1): {} of {} classes, X_ind witness {}, equiv {eq}",
            small.len(),
            big.len(),
            witness.is_some()
        ),
    )
}

fn ext_noncommutativity() -> Outcome {
    let q = a2();
    let (e21, e12) = (
        ext1_dim(&q, S2, S1, P).unwrap(),
        ext1_dim(&q, S1, S2, P).unwrap(),
    );
    let u = universe(q);
    let model = u.model();
    let x = LatticeElement::from(model.word(Flavor::Left, &[letter(S2), letter(S1)]));
    let y = LatticeElement::from(model.word(Flavor::Left, &[letter(S1), letter(S2)]));
    let w = u.leq_witness(&x, &y).or_else(|| u.leq_witness(&y, &x));
    let by_x_ind = w.is_some_and(|i| is_x_ind(&u.reps()[i]));
    outcome(
        e21 == 0 && e12 > 0 && !u.equiv(&x, &y) && by_x_ind,
        format!(
            "ext(S2,S1)={e21} ext(S1,S2)={e12}, equiv {}, X_ind witness {by_x_ind}",
            u.equiv(&x, &y)
        ),
    )
}

fn scattered_unit_failure() -> Outcome {
    let u = universe(a2());
    let l = as_lattice(&u, Flavor::Scattered, u.model().all_letters());
    let sample = l.sample(2);
    let mut found = Vec::new();
    for ax in AxiomId::all()
        .into_iter()
        .filter(|a| a.family() == Family::A2)
    {
        let rep = check_axiom(&l, ax, &sample, &[]).unwrap();
        for v in &rep.violations {
            let x = &v.vars[0].1;
            let x1 = wedge(x, &u.model().one(Flavor::Scattered)).unwrap();
            if u.leq_witness(x, &x1)
                .is_some_and(|i| is_x_ind(&u.reps()[i]))
            {
                found.push(format!("{ax} at {}", u.model().element_label(x)));
            }
        }
    }
    found.sort();
    found.dedup();
    outcome(
        !found.is_empty(),
        format!(
            "x ∧ 1 ≈ x broken with X_ind: {}",
            found.first().map_or("none", String::as_str)
        ),
    )
}

fn relation_semantics() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for q in [a2(), Arc::new(fixtures::kronecker())] {
        let r = relations_from_quiver(&q).unwrap();
        let rep = check_relation_semantics(&r, &q, P).unwrap();
        ok &= rep.passed();
        parts.push(format!(
            "{} {}/{}",
            q.name(),
            rep.checks.iter().filter(|c| c.passed()).count(),
            rep.checks.len()
        ));
    }
    let q = a2();
    let r = relations_from_quiver(&q).unwrap();
    let (v12, v21) = (MonoidWord(vec![0, 1]), MonoidWord(vec![1, 0]));
    let distinct = !monoid_eq(&v12, &v21, &r);
    let (a, b) = (
        semantic_set(&v12, &q, P).unwrap(),
        semantic_set(&v21, &q, P).unwrap(),
    );
    let sup = a.indices.iter().all(|i| b.indices.contains(i)) && b.indices.len() > a.indices.len();
    let x_only = b.reps.iter().any(is_x_ind) && !a.reps.iter().any(is_x_ind);
    ok &= distinct && sup && x_only;
    outcome(
        ok,
        format!(
            "relations {}; R1R2 = R2R1 in monoid: {}; points {} ⊋ {} with X_ind: {}",
            parts.join(", "),
            !distinct,
            b.reps.len(),
            a.reps.len(),
            x_only
        ),
    )
}

fn singleton_words(u: &Universe, f: Flavor) -> Vec<nctop_core::opens::Word> {
    let singles: Vec<Letter> = u.model().simples().into_iter().map(letter).collect();
    u.model().words_up_to(f, &singles, 2)
}

fn prefix_rewriting() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for q in [a2(), Arc::new(fixtures::discrete(2))] {
        let r = relations_from_quiver(&q).unwrap();
        let u = universe(q.clone());
        for f in [Flavor::Left, Flavor::Right] {
            for w in singleton_words(&u, f) {
                checked += 1;
                if !check_prefix_membership(&w, &u, &r).unwrap().agrees() {
                    bad.push(format!("{} {}", q.name(), u.model().word_label(&w)));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} words, {} disagreeing", bad.len()),
    )
}

fn equivalence_via_monoid() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for q in [a2(), Arc::new(fixtures::discrete(2))] {
        let r = relations_from_quiver(&q).unwrap();
        let u = universe(q.clone());
        for f in [Flavor::Left, Flavor::Right] {
            let ws = singleton_words(&u, f);
            for a in &ws {
                for b in &ws {
                    checked += 1;
                    let rep = check_monoid_equivalence(a, b, &u, &r, 4).unwrap();
                    if !rep.agrees() {
                        bad.push(format!(
                            "{} {} vs {}",
                            q.name(),
                            u.model().word_label(a),
                            u.model().word_label(b)
                        ));
                    }
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{checked} pairs, {} disagreeing{}",
            bad.len(),
            bad.first()
                .map(|b| format!(", e.g. {b}"))
                .unwrap_or_default()
        ),
    )
}

fn commutative_sweep() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for q in [
        Arc::new(fixtures::discrete(2)),
        Arc::new(fixtures::one_loop()),
    ] {
        let s = commute_sweep(&universe(q.clone()), 2);
        ok &= s.passed();
        parts.push(format!(
            "{}: {} pairs, {} non-commuting, {} opens, {} not idempotent",
            q.name(),
            s.pairs,
            s.non_commuting.len(),
            s.opens,
            s.not_idempotent.len()
        ));
    }
    outcome(ok, parts.join("; "))
}

fn oracle_crosscheck() -> Outcome {
    let mut reps = 0;
    let mut bad = 0;
    for q in [a2(), Arc::new(fixtures::one_loop())] {
        for dim in DimVector::all_up_to(q.vertex_count(), 3) {
            for m in support::all_reps(&q, P, &dim) {
                reps += 1;
                let lib: BTreeSet<Vec<usize>> = match jh_sequences(&m) {
                    Ok(s) => s
                        .into_iter()
                        .map(|f| f.0.into_iter().map(|x| x.0).collect())
                        .collect(),
                    Err(RepError::NonSplitFactor { .. }) => BTreeSet::new(),
                    Err(e) => panic!("{e}"),
                };
                if lib != support::chain_sequences(&m) {
                    bad += 1;
                }
            }
        }
    }
    let mut pairs = 0;
    let mut ext_bad = 0;
    for q in fixtures4() {
        for s in q.simples(P) {
            for t in q.simples(P) {
                pairs += 1;
                if ext1_dim(&q, s, t, P).unwrap() != support::ext_by_counting(&q, P, s, t) {
                    ext_bad += 1;
                }
            }
        }
    }
    outcome(
        bad == 0 && ext_bad == 0,
        format!("{reps} reps ({bad} mismatches), {pairs} ext pairs ({ext_bad} mismatches)"),
    )
}

fn powerset_kernel() -> Outcome {
    let l = PowersetLattice { n: 3 };
    let sample = l.elements();
    let covers: Vec<Vec<u32>> = sample
        .iter()
        .flat_map(|&a| sample.iter().map(move |&b| vec![a, b]))
        .filter(|c| c[0] | c[1] == 7)
        .collect();
    let mut bad = Vec::new();
    let mut checked = 0;
    for ax in AxiomId::all() {
        let r = check_axiom(&l, ax, &sample, &covers).unwrap();
        checked += r.checked;
        if !r.passed() {
            bad.push(ax.to_string());
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} cells, {checked} instances, failing: {}",
            AxiomId::all().len(),
            if bad.is_empty() {
                "none".into()
            } else {
                bad.join(", ")
            }
        ),
    )
}

fn main() {
    // (id, check, expected verdict)
    let criteria: [Criterion; 10] = [
        ("axiom-columns", axiom_columns, false),
        ("unit-proper-inclusion", unit_proper_inclusion, true),
        ("ext-noncommutativity", ext_noncommutativity, true),
        ("scattered-unit-failure", scattered_unit_failure, true),
        ("relation-semantics", relation_semantics, true),
        ("prefix-rewriting", prefix_rewriting, true),
        ("equivalence-via-monoid", equivalence_via_monoid, false),
        ("commutative-sweep", commutative_sweep, true),
        ("oracle-crosscheck", oracle_crosscheck, true),
        ("powerset-kernel", powerset_kernel, true),
    ];
    let start = Instant::now();
    let mut surprises = Vec::new();
    let mut passed = 0;
    for (id, check, expected) in criteria {
        let t = Instant::now();
        let o = check();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let known = if !o.pass && !expected {
            " (known red)"
        } else {
            ""
        };
        println!(
            "{verdict} {id:<24} {:>6.1}s  {}{known}",
            t.elapsed().as_secs_f64(),
            o.detail
        );
        passed += o.pass as usize;
        if o.pass != expected {
            surprises.push(id);
        }
    }
    println!(
        "acceptance: {passed}/{} pass in {:.1}s",
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if !surprises.is_empty() {
        eprintln!("unexpected verdicts: {}", surprises.join(", "));
        std::process::exit(1);
    }
}
