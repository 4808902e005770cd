//! Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use common::{naive_rank, Raw};
use hopfcert::cosemisimple::{dual_algebra, is_semisimple, trace_form, Semisimplicity};
use hopfcert::cqg::{verify_cqg_star, CqgContext};
use hopfcert::exactlinalg::matrix::unit_vector;
use hopfcert::exactlinalg::CycloScalar as S;
use hopfcert::hopfcore::FinHopfAlgebra;
use hopfcert::instances::{builtin, list_builtins, GroupTable};
use hopfcert::reflection::{
    check_exact_sequence, expectation, free_basis_witness, is_conormal, right_reflection,
    verify_expectation,
};
use hopfcert::report::Status;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion(n: u32, title: &str, budget: Duration, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let mut result = body();
    let elapsed = start.elapsed();
    if result.is_ok() && elapsed > budget {
        result = Err(format!("took {elapsed:.2?}, budget {budget:?}"));
    }
    match &result {
        Ok(summary) => println!("criterion {n} ({title}): PASS in {elapsed:.2?}; {summary}"),
        Err(why) => println!("criterion {n} ({title}): FAIL: {why}"),
    }
    assert!(result.is_ok(), "criterion {n} failed: {:?}", result.err());
}

fn hopf(name: &str) -> FinHopfAlgebra {
    (*builtin(name).unwrap().hopf).clone()
}

struct Mutation {
    label: &'static str,
    instance: &'static str,
    apply: fn(&mut FinHopfAlgebra),
}

fn set_mult(h: &mut FinHopfAlgebra, i: usize, j: usize, k: usize, c: i64) {
    h.algebra_mut().basis_product_mut(i, j)[k] = S::from_int(c);
}

fn set_comult(h: &mut FinHopfAlgebra, i: usize, a: usize, b: usize, c: i64) {
    h.coalgebra_mut().basis_comult_mut(i)[(a, b)] = S::from_int(c);
}

fn mutations() -> Vec<Mutation> {
    vec![
        Mutation {
            label: "s*s = 2e",
            instance: "kC2",
            apply: |h| set_mult(h, 1, 1, 0, 2),
        },
        Mutation {
            label: "(12)(12) = 2e",
            instance: "kS3",
            apply: |h| set_mult(h, 1, 1, 0, 2),
        },
        Mutation {
            label: "g*g^2 gains a g term",
            instance: "kC3",
            apply: |h| set_mult(h, 1, 2, 1, 1),
        },
        Mutation {
            label: "i*i gains a 1 term",
            instance: "kQ8",
            apply: |h| set_mult(h, 2, 2, 0, 1),
        },
        Mutation {
            label: "d_e^2 = 2 d_e",
            instance: "fun_S3",
            apply: |h| set_mult(h, 0, 0, 0, 2),
        },
        Mutation {
            label: "unit = 2e",
            instance: "kS3",
            apply: |h| h.algebra_mut().unit_mut()[0] = S::from_int(2),
        },
        Mutation {
            label: "unit loses d_e",
            instance: "fun_C4",
            apply: |h| h.algebra_mut().unit_mut()[0] = S::zero(),
        },
        Mutation {
            label: "D(s) gains e(x)e",
            instance: "kC2",
            apply: |h| set_comult(h, 1, 0, 0, 1),
        },
        Mutation {
            label: "D((12)) doubled",
            instance: "kS3",
            apply: |h| set_comult(h, 1, 1, 1, 2),
        },
        Mutation {
            label: "D(d_e) loses d_e(x)d_e",
            instance: "fun_S3",
            apply: |h| set_comult(h, 0, 0, 0, 0),
        },
        Mutation {
            label: "D(x) has 2 g(x)x",
            instance: "taft4",
            apply: |h| set_comult(h, 2, 1, 2, 2),
        },
        Mutation {
            label: "eps(g) = 2",
            instance: "kC4",
            apply: |h| h.coalgebra_mut().counit_mut()[1] = S::from_int(2),
        },
        Mutation {
            label: "eps(d_e) = 0",
            instance: "fun_D4",
            apply: |h| h.coalgebra_mut().counit_mut()[0] = S::zero(),
        },
        Mutation {
            label: "eps(x) = 1",
            instance: "taft4",
            apply: |h| h.coalgebra_mut().counit_mut()[2] = S::one(),
        },
        Mutation {
            label: "S((123)) gains (123)",
            instance: "kS3",
            apply: |h| h.antipode_matrix_mut()[(4, 4)] = S::one(),
        },
        Mutation {
            label: "S(e) = 2e",
            instance: "kD4",
            apply: |h| h.antipode_matrix_mut()[(0, 0)] = S::from_int(2),
        },
        Mutation {
            label: "S(x) = gx",
            instance: "taft4",
            apply: |h| h.antipode_matrix_mut()[(3, 2)] = S::one(),
        },
        Mutation {
            label: "s* = -s",
            instance: "kC2",
            apply: |h| h.star_matrix_mut().unwrap()[(1, 1)] = S::from_int(-1),
        },
        Mutation {
            label: "s* = e + s",
            instance: "kC2",
            apply: |h| h.star_matrix_mut().unwrap()[(0, 1)] = S::one(),
        },
        Mutation {
            label: "i* gains i",
            instance: "kQ8",
            apply: |h| h.star_matrix_mut().unwrap()[(2, 2)] = S::one(),
        },
    ]
}

#[test]
fn criterion_1_axiom_gauntlet() {
    criterion(1, "axiom gauntlet", Duration::from_secs(10), || {
        let mut starred = 0;
        let catalog = list_builtins();
        for entry in &catalog {
            let h = hopf(entry.name);
            let r = h.verify_axioms();
            ensure(
                r.all_pass(),
                format!("{} fails {:?}", entry.name, r.failures().next()),
            )?;
            if h.has_star() {
                let r = verify_cqg_star(&h);
                ensure(
                    r.all_pass(),
                    format!("{} star: {:?}", entry.name, r.failures().next()),
                )?;
                starred += 1;
            }
        }
        let muts = mutations();
        ensure(muts.len() == 20, "twenty mutation fixtures")?;
        for m in &muts {
            let mut h = hopf(m.instance);
            (m.apply)(&mut h);
            let mut r = h.verify_axioms();
            r.extend(h.verify_star_axioms());
            let raw = Raw::of(&h);
            let fails: Vec<_> = r.failures().collect();
            ensure(
                !fails.is_empty(),
                format!("mutation '{}' on {} not detected", m.label, m.instance),
            )?;
            for c in fails {
                let w = c.witness.clone().unwrap_or_default();
                ensure(
                    raw.violated(&c.name, &w),
                    format!(
                        "mutation '{}': witness {:?} for {} is not a counterexample",
                        m.label, w, c.name
                    ),
                )?;
            }
        }
        Ok(format!(
            "{} instances ({starred} starred), {} mutations caught with oracle-validated witnesses",
            catalog.len(),
            muts.len()
        ))
    });
}

#[test]
fn criterion_2_expectation_mechanism() {
    criterion(
        2,
        "expectation onto kC2 in kS3",
        Duration::from_secs(5),
        || {
            let inst = builtin("kS3").unwrap();
            let a = inst.subalgebra("kC2_12").unwrap();
            let e = expectation(a).map_err(|e| e.to_string())?;
            let r = verify_expectation(&e);
            for name in ["retraction", "bimodule", "comodule", "adjoint_equivariance"] {
                ensure(
                    r.get(name).is_some_and(|c| c.passed()),
                    format!("{name} fails"),
                )?;
            }
            // p(g) = g on C2 = {e, (12)}, 0 elsewhere
            for g in 0..6 {
                let expected = if g < 2 {
                    unit_vector(6, g)
                } else {
                    vec![S::zero(); 6]
                };
                ensure(e.apply(&unit_vector(6, g)) == expected, format!("p(g_{g})"))?;
            }
            let w = free_basis_witness(a).map_err(|e| e.to_string())?;
            ensure(w.vectors.len() == 3, "witness size 3")?;
            ensure(!w.determinant.is_zero(), "nonzero determinant")?;
            // oracle: the products a·h_k are the six group elements
            let g = GroupTable::symmetric3();
            let reps: Vec<usize> = w
                .vectors
                .iter()
                .map(|v| v.iter().position(|x| x.is_one()).unwrap())
                .collect();
            let mut seen: Vec<usize> = reps
                .iter()
                .flat_map(|&r| [g.mul(0, r), g.mul(1, r)])
                .collect();
            seen.sort_unstable();
            ensure(
                seen == (0..6).collect::<Vec<_>>(),
                "products cover S3 exactly once",
            )?;
            Ok(format!(
                "4/4 checks, free basis size 3, determinant {}",
                w.determinant
            ))
        },
    );
}

#[test]
fn criterion_3_galois_connection() {
    criterion(
        3,
        "Galois connection and exactness",
        Duration::from_secs(5),
        || {
            let inst = builtin("kS3").unwrap();
            for (name, index) in [("kC2_12", 3), ("kA3", 2)] {
                let a = inst.subalgebra(name).unwrap();
                let c = right_reflection(a).map_err(|e| e.to_string())?;
                ensure(c.dim() == index, format!("dim C for {name}"))?;
                let r = check_exact_sequence(a, &c).map_err(|e| e.to_string())?;
                ensure(
                    r.all_pass(),
                    format!("{name} not exact: {:?}", r.failures().next()),
                )?;
            }
            let c2 = is_conormal(inst.subalgebra("kC2_12").unwrap()).map_err(|e| e.to_string())?;
            let a3 = is_conormal(inst.subalgebra("kA3").unwrap()).map_err(|e| e.to_string())?;
            ensure(!c2.conormal, "kC2 must not be conormal")?;
            ensure(
                a3.conormal && a3.report.all_pass(),
                "kA3 conormal with Hopf quotient",
            )?;
            Ok("both sequences exact; conormal(kC2) = false, conormal(kA3) = true".into())
        },
    );
}

#[test]
fn criterion_4_quotients_cosemisimple() {
    criterion(
        4,
        "quotients are cosemisimple",
        Duration::from_secs(10),
        || {
            let mut pairs = 0;
            for entry in list_builtins() {
                if entry.name == "taft4" {
                    continue;
                }
                let inst = builtin(entry.name).unwrap();
                for s in &inst.subalgebras {
                    let c = right_reflection(&s.subalgebra).map_err(|e| e.to_string())?;
                    match is_semisimple(&dual_algebra(c.coalgebra())) {
                        Semisimplicity::Semisimple { determinant } => {
                            ensure(!determinant.is_zero(), "certificate is nonzero")?
                        }
                        Semisimplicity::NotSemisimple { .. } => {
                            return Err(format!(
                                "{}/{} quotient not cosemisimple",
                                entry.name, s.name
                            ))
                        }
                    }
                    pairs += 1;
                }
            }
            let t = hopf("taft4");
            let dual = dual_algebra(t.coalgebra());
            match is_semisimple(&dual) {
                Semisimplicity::NotSemisimple { radical_witness } => {
                    ensure(
                        radical_witness.iter().any(|x| !x.is_zero()),
                        "nonzero witness",
                    )?;
                    let gram = trace_form(&dual);
                    ensure(
                        gram.apply(&radical_witness).iter().all(S::is_zero),
                        "witness in trace-form kernel",
                    )?;
                }
                Semisimplicity::Semisimple { .. } => {
                    return Err("Taft dual reported semisimple".into())
                }
            }
            Ok(format!(
                "{pairs} pairs certified; Taft dual has a radical witness"
            ))
        },
    );
}

#[test]
fn criterion_5_taft_free_basis() {
    criterion(
        5,
        "Taft free over its coradical",
        Duration::from_secs(1),
        || {
            let inst = builtin("taft4").unwrap();
            let w = free_basis_witness(inst.subalgebra("coradical").unwrap())
                .map_err(|e| e.to_string())?;
            ensure(w.vectors.len() == 2, "size 2")?;
            ensure(!w.determinant.is_zero(), "certified")?;
            Ok(format!("basis {{1, x}}, determinant {}", w.determinant))
        },
    );
}

fn context(inst: &str, sub: &str) -> Result<CqgContext, String> {
    let i = builtin(inst).map_err(|e| e.to_string())?;
    CqgContext::new(i.subalgebra(sub).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

#[test]
fn criterion_6_relative_haar_element() {
    criterion(6, "relative Haar element", Duration::from_secs(5), || {
        let cases = [
            ("kS3", "trivial", vec![S::one(); 6]),
            ("kS3", "kC2_12", vec![S::one(); 3]),
            ("kS3", "full", vec![S::one()]),
        ];
        for (inst, sub, expected) in &cases {
            let c = context(inst, sub)?;
            ensure(&c.theta == expected, format!("theta for {inst}/{sub}"))?;
            let r = c.verify_theta(&c.theta).map_err(|e| e.to_string())?;
            ensure(
                r.all_pass(),
                format!("{inst}/{sub}: {:?}", r.failures().next()),
            )?;
            let r = c.verify_theta_block_form().map_err(|e| e.to_string())?;
            ensure(r.all_pass(), format!("{inst}/{sub} block form"))?;
        }
        // matrix block: functions on S3, where theta = sum over irreducibles of dim * character
        let c = context("fun_S3", "trivial")?;
        let g = GroupTable::symmetric3();
        let chi2: Vec<S> = (0..6)
            .map(|x| {
                S::from_int(match g.element_order(x) {
                    1 => 2,
                    2 => 0,
                    _ => -1,
                })
            })
            .collect();
        let big = c
            .decomposition
            .blocks
            .iter()
            .position(|b| b.dim() == 4)
            .ok_or("no 4-dimensional block")?;
        let two_chi: Vec<S> = chi2.iter().map(|x| x * &S::from_int(2)).collect();
        ensure(
            c.block_component(&c.theta, big) == two_chi,
            "matrix block component is 2 tr",
        )?;
        ensure(c.theta == vec_e(6, 6), "theta = 6 d_e")?;
        let r = c.verify_theta(&c.theta).map_err(|e| e.to_string())?;
        ensure(r.all_pass(), format!("fun_S3: {:?}", r.failures().next()))?;
        let r = c.verify_theta_block_form().map_err(|e| e.to_string())?;
        ensure(r.all_pass(), "fun_S3 block form with Q = id")?;
        Ok("(a), (b), (c), S^2-invariance on 4 quotients; matrix block equals 2 tr".into())
    });
}

fn vec_e(n: usize, scale: i64) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[0] = S::from_int(scale);
    v
}

const CQG_PAIRS: [(&str, &str); 4] = [
    ("kS3", "kC2_12"),
    ("kS3", "trivial"),
    ("kS3", "kA3"),
    ("fun_S3", "pullback_C2"),
];

#[test]
fn criterion_7_fourier_and_plancherel() {
    criterion(
        7,
        "Fourier identities and Plancherel",
        Duration::from_secs(60),
        || {
            let g = GroupTable::symmetric3();
            let a3 = [0usize, 4, 5];
            for (inst, sub) in CQG_PAIRS {
                let c = context(inst, sub)?;
                for r in [
                    c.verify_fourier_identities().map_err(|e| e.to_string())?,
                    c.verify_plancherel().map_err(|e| e.to_string())?,
                    c.verify_phi().map_err(|e| e.to_string())?,
                ] {
                    ensure(
                        r.all_pass(),
                        format!("{inst}/{sub}: {:?}", r.failures().next()),
                    )?;
                }
                // phi oracle from group data
                let expected: Vec<S> = (0..6)
                    .map(|x| match (inst, sub) {
                        ("kS3", "kC2_12") => S::from_int(i64::from(x < 2)),
                        ("kS3", "trivial") => S::from_int(i64::from(x == g.identity())),
                        ("kS3", "kA3") => S::from_int(i64::from(a3.contains(&x))),
                        _ => S::from_ratio(i64::from(a3.contains(&x)), 3),
                    })
                    .collect();
                ensure(c.phi == expected, format!("phi oracle for {inst}/{sub}"))?;
            }
            Ok("5 identities + Plancherel + phi cross-oracle on 4 pairs, all basis pairs".into())
        },
    );
}

#[test]
fn criterion_8_positivity() {
    criterion(
        8,
        "positivity of the expectation",
        Duration::from_secs(10),
        || {
            for (inst, sub) in CQG_PAIRS {
                let c = context(inst, sub)?;
                let r = c.gram_positivity();
                ensure(
                    r.all_pass(),
                    format!("{inst}/{sub}: {:?}", r.failures().next()),
                )?;
                ensure(
                    r.checks.iter().all(|c| c.status == Status::Pass),
                    "no skipped checks",
                )?;
            }
            let haar = context("kS3", "trivial")?.gram_matrix();
            ensure(
                haar == hopfcert::exactlinalg::Matrix::identity(6),
                "Haar Gram is the identity",
            )?;
            let gram = context("kS3", "kC2_12")?.gram_matrix();
            let g = GroupTable::symmetric3();
            for x in 0..6 {
                for y in 0..6 {
                    let inside = g.mul(g.inv(x), y) < 2;
                    ensure(
                        gram[(x, y)] == S::from_int(i64::from(inside)),
                        format!("G[{x}][{y}]"),
                    )?;
                }
            }
            let rows: Vec<Vec<S>> = (0..6).map(|i| gram.row_vec(i)).collect();
            ensure(naive_rank(&rows) == 3 && gram.rank() == 3, "rank 3")?;
            Ok("4 Gram matrices PSD; Haar Gram = I; coset Gram rank 3".into())
        },
    );
}

#[test]
fn criterion_9_determinism() {
    criterion(
        9,
        "deterministic structured reports",
        Duration::from_secs(30),
        || {
            let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
            let mut canon = Vec::new();
            for run in 0..2 {
                let out = dir.path().join(format!("run{run}.json"));
                let status = Command::new(env!("CARGO_BIN_EXE_hopfcert"))
                    .args([
                        "verify",
                        "kS3",
                        "--suite",
                        "all",
                        "--subalgebra",
                        "kC2_12",
                        "--format",
                        "structured",
                        "--out",
                    ])
                    .arg(&out)
                    .status()
                    .map_err(|e| e.to_string())?;
                ensure(status.code() == Some(0), format!("exit code {status}"))?;
                let text = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
                let cut = text
                    .find("\"non_canonical\"")
                    .ok_or("no non_canonical section")?;
                canon.push(text[..cut].to_string());
            }
            ensure(canon[0] == canon[1], "canonical sections differ")?;
            Ok(format!(
                "canonical sections identical ({} bytes)",
                canon[0].len()
            ))
        },
    );
}
