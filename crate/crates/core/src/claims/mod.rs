//! Registry of published identities, each checked exactly over a parameter
//! grid by comparing a formula side against an oracle side.

mod definitions;
mod grid;
mod report;

use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::value::{Value, Variant};

pub use definitions::{registry, IDENTITIES};
pub use grid::{tuples, Grid};
pub use report::{report, ClaimSummary, Counterexample, VerdictReport};

/// Which readings of an identity a claim evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variants {
    /// Only the printed formula, with index typos repaired.
    AsStated,
    /// The printed formula and a repaired one; the repaired one is required.
    Both,
}

impl Variants {
    pub fn list(self) -> &'static [Variant] {
        match self {
            Variants::AsStated => &[Variant::AsStated],
            Variants::Both => &[Variant::AsStated, Variant::Corrected],
        }
    }

    /// The reading that must pass for verification to succeed.
    pub fn required(self) -> Variant {
        match self {
            Variants::AsStated => Variant::AsStated,
            Variants::Both => Variant::Corrected,
        }
    }
}

/// One side-by-side comparison: `(part label, lhs, rhs)`.
pub type Outcome = (String, Value, Value);

type Evaluator = Box<dyn Fn(Variant) -> Result<Vec<Outcome>> + Send + Sync>;

/// A single grid point of a claim. Evaluating it may yield several labelled
/// parts (special cases come in (i)/(ii)/… pieces).
pub struct Check {
    pub point: String,
    eval: Evaluator,
}

impl Check {
    pub fn new(
        point: impl Into<String>,
        eval: impl Fn(Variant) -> Result<Vec<Outcome>> + Send + Sync + 'static,
    ) -> Self {
        Check {
            point: point.into(),
            eval: Box::new(eval),
        }
    }

    /// A check with one unlabelled comparison.
    pub fn single(
        point: impl Into<String>,
        eval: impl Fn(Variant) -> Result<(Value, Value)> + Send + Sync + 'static,
    ) -> Self {
        Check::new(point, move |v| {
            eval(v).map(|(lhs, rhs)| vec![(String::new(), lhs, rhs)])
        })
    }
}

pub struct Claim {
    pub id: &'static str,
    pub location: &'static str,
    /// Identity keys from [`IDENTITIES`] this claim is responsible for.
    pub covers: &'static [&'static str],
    pub variants: Variants,
    build: fn(&Grid) -> Vec<Check>,
}

impl Claim {
    pub fn checks(&self, grid: &Grid) -> Vec<Check> {
        (self.build)(grid)
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("variants", &self.variants)
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim_id: &'static str,
    pub location: &'static str,
    pub point: String,
    pub variant: Variant,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub verdict: Verdict,
}

/// Evaluates every grid point of `claim` under each of its variants, in grid
/// order. Domain errors at a point become skipped results.
pub fn run_claim(claim: &Claim, grid: &Grid, exec: Execution) -> Vec<ClaimResult> {
    let checks = claim.checks(grid);
    let mut out = Vec::new();
    for &variant in claim.variants.list() {
        let per_point = exec.map(&checks, |check| evaluate(claim, check, variant));
        out.extend(per_point.into_iter().flatten());
    }
    out
}

fn evaluate(claim: &Claim, check: &Check, variant: Variant) -> Vec<ClaimResult> {
    let result = |point: String, lhs, rhs, verdict| ClaimResult {
        claim_id: claim.id,
        location: claim.location,
        point,
        variant,
        lhs,
        rhs,
        verdict,
    };
    match (check.eval)(variant) {
        Ok(outcomes) => outcomes
            .into_iter()
            .map(|(part, lhs, rhs)| {
                let point = if part.is_empty() {
                    check.point.clone()
                } else {
                    format!("{} part={part}", check.point)
                };
                let verdict = if lhs == rhs { Verdict::Pass } else { Verdict::Fail };
                result(point, Some(lhs), Some(rhs), verdict)
            })
            .collect(),
        Err(e) => vec![result(
            check.point.clone(),
            None,
            None,
            Verdict::Skip(e.to_string()),
        )],
    }
}

pub fn find(id: &str) -> Result<&'static Claim> {
    registry()
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Resolves `"all"` or a list of ids to claims, in registry order.
pub fn select(ids: &[String]) -> Result<Vec<&'static Claim>> {
    if ids.is_empty() || ids.iter().any(|id| id.eq_ignore_ascii_case("all")) {
        return Ok(registry().iter().collect());
    }
    let mut chosen: Vec<&'static Claim> = Vec::new();
    for id in ids {
        let claim = find(id)?;
        if !chosen.iter().any(|c| c.id == claim.id) {
            chosen.push(claim);
        }
    }
    chosen.sort_by_key(|c| registry().iter().position(|r| r.id == c.id));
    Ok(chosen)
}

pub fn run_claims(claims: &[&Claim], grid: &Grid, exec: Execution) -> Vec<ClaimResult> {
    claims
        .iter()
        .flat_map(|c| run_claim(c, grid, exec))
        .collect()
}

/// True when every claim's required variant has no failures and no skips.
pub fn required_passed(claims: &[&Claim], report: &VerdictReport) -> bool {
    claims.iter().all(|claim| {
        let required = claim.variants.required();
        report
            .claims
            .iter()
            .filter(|s| s.id == claim.id && s.variant == required)
            .all(|s| s.fail == 0 && s.skip == 0)
    })
}
