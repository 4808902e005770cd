//! Verification suites run by the command line tool.

use std::time::{Duration, Instant};

use clap::ValueEnum;
use serde::Serialize;

use crate::cosemisimple::{
    dual_algebra, haar_integral, is_semisimple, simple_comodule, simple_subcoalgebras,
    Semisimplicity,
};
use crate::cqg::{verify_cqg_star, CqgContext};
use crate::error::{Error, Result};
use crate::exactlinalg::matrix::dot;
use crate::exactlinalg::CycloScalar;
use crate::hopfcore::{CoidealSubalgebra, FinHopfAlgebra};
use crate::reflection::{
    check_exact_sequence, expectation, free_basis_witness, is_conormal, right_reflection,
    verify_expectation,
};
use crate::report::{Check, Report, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    Decomposition,
    Reflection,
    Flatness,
    Cqg,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Axioms,
        Suite::Decomposition,
        Suite::Reflection,
        Suite::Flatness,
        Suite::Cqg,
    ];

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::EACH.to_vec(),
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Decomposition => "decomposition",
            Suite::Reflection => "reflection",
            Suite::Flatness => "flatness",
            Suite::Cqg => "cqg",
            Suite::All => "all",
        }
    }
}

/// Result of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// How a suite ended when it could not produce checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Ran,
    /// A required capability is missing (star, cosemisimplicity, subalgebra).
    Precondition(String),
}

/// Errors that mean "this suite does not apply" rather than "a check failed".
pub fn is_precondition(e: &Error) -> bool {
    matches!(
        e,
        Error::Precondition(_)
            | Error::BlockPrecondition(_)
            | Error::SplittingFailure { .. }
            | Error::NotSemisimple
            | Error::Descent { .. }
    )
}

fn prefixed(prefix: &str, r: Report) -> impl Iterator<Item = Check> + '_ {
    r.checks.into_iter().map(move |mut c| {
        c.name = format!("{prefix}.{}", c.name);
        c
    })
}

fn need_sub(sub: Option<&CoidealSubalgebra>) -> Result<&CoidealSubalgebra> {
    sub.ok_or_else(|| Error::Precondition("suite needs --subalgebra".into()))
}

fn cosemisimple(h: &FinHopfAlgebra) -> Result<()> {
    match is_semisimple(&dual_algebra(h.coalgebra())) {
        Semisimplicity::Semisimple { .. } => Ok(()),
        Semisimplicity::NotSemisimple { radical_witness } => Err(Error::Precondition(format!(
            "{} is not cosemisimple (radical witness {})",
            h.name(),
            fmt_vector(&radical_witness)
        ))),
    }
}

pub fn fmt_vector(v: &[CycloScalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn axioms(h: &FinHopfAlgebra) -> Result<Vec<Check>> {
    let mut r = h.verify_axioms();
    r.extend(h.verify_star_axioms());
    Ok(r.checks)
}

fn decomposition(h: &FinHopfAlgebra) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    match is_semisimple(&dual_algebra(h.coalgebra())) {
        Semisimplicity::Semisimple { determinant } => out.push(
            Check::pass("dual_semisimple")
                .with_detail(format!("trace form determinant {determinant}")),
        ),
        Semisimplicity::NotSemisimple { .. } => return cosemisimple(h).map(|_| out),
    }
    let dec = simple_subcoalgebras(h.coalgebra(), h.conductor(), Some(h.one()))?;
    let dims: Vec<String> = dec.block_dims().iter().map(ToString::to_string).collect();
    out.push(
        Check::pass("simple_subcoalgebras")
            .with_detail(format!("block dimensions {}", dims.join(" + "))),
    );
    let haar = haar_integral(h.coalgebra(), &dec, h.one())?;
    out.push(
        Check::from_bool("haar_unital", dot(&haar, h.one()).is_one())
            .with_detail(format!("haar {}", fmt_vector(&haar))),
    );
    let mut bad = None;
    for alpha in 0..dec.blocks.len() {
        let v = simple_comodule(h, &dec, alpha)?;
        if v.dim() * v.dim() != dec.blocks[alpha].dim() {
            bad = Some(vec![alpha]);
            break;
        }
    }
    out.push(Check::from_witness("simple_comodules", bad));
    Ok(out)
}

fn reflection(h: &FinHopfAlgebra, sub: Option<&CoidealSubalgebra>) -> Result<Vec<Check>> {
    let a = need_sub(sub)?;
    let c = right_reflection(a)?;
    let mut out: Vec<Check> = c.verify().checks;
    out.push(Check::pass("right_reflection").with_detail(format!("dim C = {}", c.dim())));
    out.extend(prefixed("exact", check_exact_sequence(a, &c)?));
    if cosemisimple(h).is_ok() {
        out.push(Check::from_bool(
            "quotient_cosemisimple",
            is_semisimple(&dual_algebra(c.coalgebra())).is_semisimple(),
        ));
    }
    if a.is_hopf() {
        let conormal = is_conormal(a)?;
        out.push(
            Check::pass("conormality").with_detail(if conormal.conormal {
                "conormal"
            } else {
                "not conormal"
            }),
        );
        out.extend(prefixed("quotient_hopf", conormal.report));
    }
    Ok(out)
}

fn flatness(h: &FinHopfAlgebra, sub: Option<&CoidealSubalgebra>) -> Result<Vec<Check>> {
    let a = need_sub(sub)?;
    let mut out = Vec::new();
    match cosemisimple(h) {
        Ok(()) => {
            let e = expectation(a)?;
            out.push(Check::pass("block_dichotomy"));
            out.extend(prefixed("expectation", verify_expectation(&e)));
        }
        Err(Error::Precondition(reason)) => {
            out.push(Check::skipped("expectation", reason));
        }
        Err(e) => return Err(e),
    }
    let w = free_basis_witness(a)?;
    let vectors: Vec<String> = w.vectors.iter().map(|v| fmt_vector(v)).collect();
    out.push(
        Check::from_bool("free_basis", !w.determinant.is_zero()).with_detail(format!(
            "size {}, determinant {}, basis {}",
            w.vectors.len(),
            w.determinant,
            vectors.join(" ")
        )),
    );
    Ok(out)
}

fn cqg(h: &FinHopfAlgebra, sub: Option<&CoidealSubalgebra>) -> Result<Vec<Check>> {
    if !h.has_star() {
        return Err(Error::Precondition(format!(
            "{} has no star structure",
            h.name()
        )));
    }
    let a = need_sub(sub)?;
    let mut out = verify_cqg_star(h).checks;
    let ctx = CqgContext::new(a)?;
    out.extend(ctx.verify_phi()?.checks);
    out.extend(ctx.verify_theta(&ctx.theta)?.checks);
    out.extend(ctx.verify_theta_block_form()?.checks);
    out.extend(ctx.verify_fourier_identities()?.checks);
    out.extend(ctx.verify_plancherel()?.checks);
    out.extend(ctx.gram_positivity().checks);
    Ok(out)
}

/// Runs one suite. Precondition errors become `Outcome::Precondition`; other
/// errors become a failed check.
pub fn run_suite(
    suite: Suite,
    h: &FinHopfAlgebra,
    sub: Option<&CoidealSubalgebra>,
) -> (SuiteReport, Outcome) {
    let start = Instant::now();
    let result = match suite {
        Suite::Axioms => axioms(h),
        Suite::Decomposition => decomposition(h),
        Suite::Reflection => reflection(h, sub),
        Suite::Flatness => flatness(h, sub),
        Suite::Cqg => cqg(h, sub),
        Suite::All => unreachable!("expanded before running"),
    };
    let (checks, reason, outcome) = match result {
        Ok(checks) => (checks, None, Outcome::Ran),
        Err(e) if is_precondition(&e) => {
            let reason = e.to_string();
            (
                Vec::new(),
                Some(reason.clone()),
                Outcome::Precondition(reason),
            )
        }
        Err(e) => (
            vec![Check::fail("error", Vec::new()).with_detail(e.to_string())],
            None,
            Outcome::Ran,
        ),
    };
    let status = if reason.is_some() {
        Status::Skipped
    } else if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    };
    (
        SuiteReport {
            suite,
            status,
            reason,
            checks,
            elapsed: start.elapsed(),
        },
        outcome,
    )
}
