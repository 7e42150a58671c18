use std::fmt::Write as _;

use serde::Serialize;

use super::{ClaimResult, Verdict};
use crate::value::{Value, Variant};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub point: String,
    pub lhs: Value,
    pub rhs: Value,
}

/// Counts for one claim under one variant. Field order is the serialized order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimSummary {
    pub id: &'static str,
    pub location: &'static str,
    pub variant: Variant,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub claims: Vec<ClaimSummary>,
}

/// Aggregates results per `(claim, variant)` in order of first appearance,
/// keeping the first failing point as the counterexample.
pub fn report(results: &[ClaimResult]) -> VerdictReport {
    let mut claims: Vec<ClaimSummary> = Vec::new();
    for r in results {
        let idx = match claims
            .iter()
            .position(|s| s.id == r.claim_id && s.variant == r.variant)
        {
            Some(i) => i,
            None => {
                claims.push(ClaimSummary {
                    id: r.claim_id,
                    location: r.location,
                    variant: r.variant,
                    pass: 0,
                    fail: 0,
                    skip: 0,
                    counterexample: None,
                });
                claims.len() - 1
            }
        };
        let summary = &mut claims[idx];
        match &r.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Skip(_) => summary.skip += 1,
            Verdict::Fail => {
                summary.fail += 1;
                if summary.counterexample.is_none() {
                    if let (Some(lhs), Some(rhs)) = (&r.lhs, &r.rhs) {
                        summary.counterexample = Some(Counterexample {
                            point: r.point.clone(),
                            lhs: lhs.clone(),
                            rhs: rhs.clone(),
                        });
                    }
                }
            }
        }
    }
    VerdictReport { claims }
}

impl VerdictReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is always serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<5} {:<10} {:>7} {:>7} {:>5}  location",
            "id", "variant", "pass", "fail", "skip"
        );
        for c in &self.claims {
            let _ = writeln!(
                out,
                "{:<5} {:<10} {:>7} {:>7} {:>5}  {}",
                c.id,
                c.variant.to_string(),
                c.pass,
                c.fail,
                c.skip,
                c.location
            );
            if let Some(ce) = &c.counterexample {
                let _ = writeln!(out, "      first failure at {}", ce.point);
                let _ = writeln!(out, "        lhs = {}", ce.lhs);
                let _ = writeln!(out, "        rhs = {}", ce.rhs);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    fn result(variant: Variant, point: &str, lhs: i64, rhs: i64) -> ClaimResult {
        ClaimResult {
            claim_id: "C0",
            location: "test",
            point: point.to_string(),
            variant,
            lhs: Some(int(lhs).into()),
            rhs: Some(int(rhs).into()),
            verdict: if lhs == rhs { Verdict::Pass } else { Verdict::Fail },
        }
    }

    #[test]
    fn empty_results() {
        let r = report(&[]);
        assert!(r.claims.is_empty());
        assert_eq!(r.to_json(), "{\n  \"claims\": []\n}\n");
    }

    #[test]
    fn first_failure_is_kept() {
        let results = vec![
            result(Variant::AsStated, "a", 1, 1),
            result(Variant::AsStated, "b", 1, 2),
            result(Variant::AsStated, "c", 3, 4),
            result(Variant::Corrected, "a", 1, 1),
        ];
        let r = report(&results);
        assert_eq!(r.claims.len(), 2);
        let stated = &r.claims[0];
        assert_eq!((stated.pass, stated.fail, stated.skip), (1, 2, 0));
        assert_eq!(stated.counterexample.as_ref().unwrap().point, "b");
        assert!(r.claims[1].counterexample.is_none());
        assert_eq!(r.claims[1].fail, 0);
    }

    #[test]
    fn json_field_order() {
        let r = report(&[result(Variant::Corrected, "p", 1, 2)]);
        let json = r.to_json();
        let keys = ["\"id\"", "\"location\"", "\"variant\"", "\"pass\"", "\"fail\"", "\"skip\"", "\"counterexample\""];
        let positions: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert!(json.contains("\"variant\": \"corrected\""));
    }
}
