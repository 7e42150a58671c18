use std::sync::Arc;

use num_traits::Zero;

use super::{Check, Claim, Grid, Outcome, Variants};
use crate::classical::{self, s2};
use crate::oracle;
use crate::poly::falling_factorial;
use crate::daehee::{self, CaseInputs, DaeheeQuery, Kind, SecondKindTheorem, Section};
use crate::error::Result;
use crate::params::ParamVector;
use crate::polycauchy::{self, PolyCauchyQuery};
use crate::rat::{self, Rat};
use crate::series;
use crate::value::{Form, Value, Variant};

/// Ranges for the classical sequence identities.
const CLASSICAL_N: usize = 8;
const CLASSICAL_K: u32 = 3;
const EXPLICIT_N: usize = 10;
const EXPLICIT_K: u32 = 4;

/// Every published identity the registry is responsible for. Each key must be
/// covered by exactly one claim.
pub const IDENTITIES: &[&str] = &[
    "daehee-poly-gf",
    "daehee-volkenborn-moment",
    "daehee-higher-sum-integral",
    "daehee-higher-gf",
    "daehee-poly-higher-sum-integral",
    "bernoulli-higher-gf",
    "daehee-poly-stirling1-expansion",
    "bernoulli-poly-stirling2-expansion",
    "daehee-higher-explicit",
    "cauchy-first",
    "cauchy-second",
    "gen-daehee-first-def",
    "gen-daehee-first-daehee-sum",
    "comtet-first-def",
    "gen-daehee-first-moment-derivation",
    "gen-daehee-first-closed-sum",
    "gen-daehee-first-integral-sum",
    "poly-cauchy-first-def",
    "poly-cauchy-first-sum",
    "poly-cauchy-first-moment-derivation",
    "gen-daehee-plain-def",
    "gen-daehee-first-falling-basis",
    "gen-daehee-first-falling-basis-derivation",
    "gen-daehee-poly-first-def",
    "gen-daehee-plain-poly-def",
    "gen-daehee-poly-first-falling-basis",
    "first-kind-case-1",
    "first-kind-case-2",
    "first-kind-case-3",
    "first-kind-case-4",
    "first-kind-case-5",
    "first-kind-case-6",
    "first-kind-case-7",
    "first-kind-case-8",
    "shifted-product-identity",
    "gen-daehee-second-def",
    "gen-daehee-second-lah",
    "gen-daehee-second-lah-derivation",
    "poly-cauchy-second-def",
    "poly-cauchy-second-lah",
    "gen-daehee-poly-second-def",
    "gen-daehee-poly-second-lah",
    "gen-daehee-plain-poly-second-def",
    "gen-daehee-poly-second-signed-stirling",
    "second-kind-case-1",
    "second-kind-case-2",
    "second-kind-case-3",
    "second-kind-case-4",
    "second-kind-case-5",
    "second-kind-case-6",
    "second-kind-case-7",
    "second-kind-case-8",
];

static REGISTRY: [Claim; 16] = [
    Claim {
        id: "C1",
        location: "higher-order Daehee polynomials as a signed Stirling transform of Bernoulli polynomials of order k",
        covers: &["daehee-poly-gf", "daehee-poly-higher-sum-integral", "daehee-poly-stirling1-expansion"],
        variants: Variants::AsStated,
        build: stirling1_expansion,
    },
    Claim {
        id: "C2",
        location: "Bernoulli polynomials of order k as a Stirling second-kind transform of Daehee polynomials",
        covers: &["bernoulli-higher-gf", "bernoulli-poly-stirling2-expansion"],
        variants: Variants::AsStated,
        build: stirling2_expansion,
    },
    Claim {
        id: "C3",
        location: "explicit higher-order Daehee numbers s(n+k,k)/binom(n+k,k)",
        covers: &["daehee-volkenborn-moment", "daehee-higher-sum-integral", "daehee-higher-gf", "daehee-higher-explicit"],
        variants: Variants::AsStated,
        build: explicit_daehee,
    },
    Claim {
        id: "C4",
        location: "generalized Daehee numbers (first kind) via Comtet numbers and Daehee numbers",
        covers: &["gen-daehee-first-def", "gen-daehee-first-daehee-sum", "comtet-first-def", "gen-daehee-first-moment-derivation"],
        variants: Variants::AsStated,
        build: comtet_daehee_sum,
    },
    Claim {
        id: "C5",
        location: "generalized Daehee numbers (first kind) via closed-form Daehee weights",
        covers: &["gen-daehee-first-closed-sum"],
        variants: Variants::AsStated,
        build: comtet_closed_sum,
    },
    Claim {
        id: "C6",
        location: "k-fold integral of the shifted product as an explicit k-fold Stirling sum",
        covers: &["gen-daehee-first-integral-sum"],
        variants: Variants::AsStated,
        build: comtet_nested_sum,
    },
    Claim {
        id: "C7",
        location: "multiparameter poly-Cauchy numbers (first kind) as a Comtet sum of box moments",
        covers: &["cauchy-first", "poly-cauchy-first-def", "poly-cauchy-first-sum", "poly-cauchy-first-moment-derivation"],
        variants: Variants::AsStated,
        build: poly_cauchy_first,
    },
    Claim {
        id: "C8",
        location: "generalized Daehee numbers (first kind) in the falling-factorial basis",
        covers: &["gen-daehee-plain-def", "gen-daehee-first-falling-basis", "gen-daehee-first-falling-basis-derivation"],
        variants: Variants::AsStated,
        build: falling_basis_numbers,
    },
    Claim {
        id: "C9",
        location: "generalized Daehee polynomials (first kind) in the falling-factorial basis",
        covers: &["gen-daehee-poly-first-def", "gen-daehee-plain-poly-def", "gen-daehee-poly-first-falling-basis"],
        variants: Variants::AsStated,
        build: falling_basis_polys,
    },
    Claim {
        id: "C10",
        location: "first-kind special cases 1-8",
        covers: &["first-kind-case-1", "first-kind-case-2", "first-kind-case-3", "first-kind-case-4", "first-kind-case-5", "first-kind-case-6", "first-kind-case-7", "first-kind-case-8"],
        variants: Variants::Both,
        build: first_kind_cases,
    },
    Claim {
        id: "C11",
        location: "one-variable shifted product integral in the falling-factorial basis",
        covers: &["shifted-product-identity"],
        variants: Variants::Both,
        build: shifted_product,
    },
    Claim {
        id: "C12",
        location: "generalized Daehee numbers (second kind) via Lah numbers",
        covers: &["gen-daehee-second-def", "gen-daehee-second-lah", "gen-daehee-second-lah-derivation"],
        variants: Variants::Both,
        build: second_kind_lah_numbers,
    },
    Claim {
        id: "C13",
        location: "multiparameter poly-Cauchy numbers (second kind) via Lah numbers",
        covers: &["cauchy-second", "poly-cauchy-second-def", "poly-cauchy-second-lah"],
        variants: Variants::Both,
        build: poly_cauchy_second,
    },
    Claim {
        id: "C14",
        location: "generalized Daehee polynomials (second kind) via Lah numbers",
        covers: &["gen-daehee-poly-second-def", "gen-daehee-poly-second-lah"],
        variants: Variants::Both,
        build: second_kind_lah_polys,
    },
    Claim {
        id: "C15",
        location: "generalized Daehee polynomials (second kind) via signed non-central Stirling numbers",
        covers: &["gen-daehee-plain-poly-second-def", "gen-daehee-poly-second-signed-stirling"],
        variants: Variants::Both,
        build: second_kind_signed_stirling,
    },
    Claim {
        id: "C16",
        location: "second-kind special cases 1-8",
        covers: &["second-kind-case-1", "second-kind-case-2", "second-kind-case-3", "second-kind-case-4", "second-kind-case-5", "second-kind-case-6", "second-kind-case-7", "second-kind-case-8"],
        variants: Variants::Both,
        build: second_kind_cases,
    },
];

pub fn registry() -> &'static [Claim] {
    &REGISTRY
}

fn pair(lhs: impl Into<Value>, rhs: impl Into<Value>) -> Result<(Value, Value)> {
    Ok((lhs.into(), rhs.into()))
}

fn stirling1_expansion(g: &Grid) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=CLASSICAL_N {
        for k in 1..=CLASSICAL_K {
            for x in &g.xs {
                let x = x.clone();
                out.push(Check::new(format!("n={n} k={k} x={x}"), move |_| {
                    let gf = Value::from(classical::daehee_poly_from_gf(n, k, &x));
                    let integral = oracle::eval_sum_functional(&falling_factorial(n), k, &x);
                    Ok(vec![
                        ("stirling1".into(), gf.clone(), classical::daehee_poly_higher(n, k, &x).into()),
                        ("sum-integral".into(), integral.into(), gf),
                    ])
                }));
            }
        }
    }
    out
}

fn stirling2_expansion(g: &Grid) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=CLASSICAL_N {
        for k in 1..=CLASSICAL_K {
            for x in &g.xs {
                let x = x.clone();
                out.push(Check::single(format!("n={n} k={k} x={x}"), move |_| {
                    let rhs = (0..=n).fold(Rat::zero(), |acc, l| {
                        acc + s2(n, l) * classical::daehee_poly_from_gf(l, k, &x)
                    });
                    pair(classical::bernoulli_higher(n, k, &x), rhs)
                }));
            }
        }
    }
    out
}

fn explicit_daehee(_: &Grid) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=EXPLICIT_N {
        for k in 1..=EXPLICIT_K {
            out.push(Check::new(format!("n={n} k={k}"), move |_| {
                let explicit = Value::from(classical::daehee_higher(n, k)?);
                let integral = oracle::eval_sum_functional(&falling_factorial(n), k, &Rat::zero());
                Ok(vec![
                    ("gf".into(), explicit.clone(), classical::daehee_higher_from_gf(n, k).into()),
                    ("sum-integral".into(), integral.into(), explicit),
                ])
            }));
        }
    }
    out
}

/// `(label, query)` for every parameter vector and order in the grid.
fn queries(g: &Grid, kind: Kind) -> Vec<(String, DaeheeQuery)> {
    let mut out = Vec::new();
    for params in g.params() {
        for k in g.orders() {
            let label = format!("k={k} {params}");
            let q = DaeheeQuery::new(k, params.clone(), kind).expect("grid orders are positive");
            out.push((label, q));
        }
    }
    out
}

fn max_degree(g: &Grid) -> usize {
    g.n_max * g.multiplicities.iter().copied().max().unwrap_or(1) as usize
}

fn comtet_daehee_sum(g: &Grid) -> Vec<Check> {
    // D_ℓ read off log(1+t)/t rather than from the closed form
    let d: Arc<Vec<Rat>> = Arc::new(series::log1p_over_t(max_degree(g)).egf_values());
    queries(g, Kind::First)
        .into_iter()
        .map(|(label, q)| {
            let d = Arc::clone(&d);
            Check::single(label, move |_| {
                let rhs = daehee::gen_daehee_number_from_daehee(&q, |l| d[l].clone())?;
                pair(daehee::gen_daehee_number(&q), rhs)
            })
        })
        .collect()
}

fn comtet_closed_sum(g: &Grid) -> Vec<Check> {
    queries(g, Kind::First)
        .into_iter()
        .map(|(label, q)| {
            Check::single(label, move |_| {
                pair(
                    daehee::gen_daehee_number(&q),
                    daehee::gen_daehee_number_via_thm(&q)?,
                )
            })
        })
        .collect()
}

fn comtet_nested_sum(g: &Grid) -> Vec<Check> {
    queries(g, Kind::First)
        .into_iter()
        .map(|(label, q)| {
            Check::single(label, move |_| {
                pair(
                    daehee::gen_daehee_number(&q),
                    daehee::gen_daehee_number_nested(&q)?,
                )
            })
        })
        .collect()
}

fn cauchy_queries(g: &Grid, kind: Kind) -> Vec<(String, PolyCauchyQuery)> {
    let mut out = Vec::new();
    let limits = g.limit_tuples();
    for params in g.params() {
        for l in &limits {
            let shown: Vec<String> = l.iter().map(|v| v.to_string()).collect();
            let label = format!("{params} limits=({})", shown.join(","));
            let q = PolyCauchyQuery::new(params.clone(), l.clone(), kind).expect("limits are nonempty");
            out.push((label, q));
        }
    }
    out
}

fn classical_cauchy(kind: Kind) -> Vec<Check> {
    let gf = Arc::new(match kind {
        Kind::First => classical::cauchy_gf(1, CLASSICAL_N).egf_values(),
        Kind::Second => classical::cauchy2_gf(CLASSICAL_N).egf_values(),
    });
    (0..=CLASSICAL_N)
        .map(|n| {
            let gf = Arc::clone(&gf);
            Check::single(format!("classical n={n}"), move |_| {
                let q = PolyCauchyQuery::new(
                    ParamVector::consecutive(n, &Rat::zero(), 1),
                    vec![rat::int(1)],
                    kind,
                )?;
                pair(polycauchy::poly_cauchy(&q), gf[n].clone())
            })
        })
        .collect()
}

fn poly_cauchy_first(g: &Grid) -> Vec<Check> {
    let mut out = classical_cauchy(Kind::First);
    out.extend(cauchy_queries(g, Kind::First).into_iter().map(|(label, q)| {
        Check::single(label, move |_| {
            pair(
                polycauchy::poly_cauchy(&q),
                polycauchy::poly_cauchy_via_thm(&q, Variant::AsStated),
            )
        })
    }));
    out
}

fn poly_cauchy_second(g: &Grid) -> Vec<Check> {
    let mut out = classical_cauchy(Kind::Second);
    out.extend(cauchy_queries(g, Kind::Second).into_iter().map(|(label, q)| {
        Check::single(label, move |v| {
            pair(
                polycauchy::poly_cauchy(&q),
                polycauchy::poly_cauchy_via_thm(&q, v),
            )
        })
    }));
    out
}

fn falling_basis(g: &Grid, form: Form) -> Vec<Check> {
    queries(g, Kind::First)
        .into_iter()
        .map(|(label, q)| {
            Check::single(label, move |_| {
                Ok((
                    daehee::gen_daehee(&q, form),
                    daehee::falling_basis_rhs(&q, form)?,
                ))
            })
        })
        .collect()
}

fn falling_basis_numbers(g: &Grid) -> Vec<Check> {
    falling_basis(g, Form::Number)
}

fn falling_basis_polys(g: &Grid) -> Vec<Check> {
    falling_basis(g, Form::Polynomial)
}

fn shifted_product(g: &Grid) -> Vec<Check> {
    g.simple_params()
        .into_iter()
        .map(|params| {
            let alphas = params.alphas().to_vec();
            let label = format!("alpha=({})", join(&alphas));
            Check::single(label, move |v| {
                pair(
                    daehee::shifted_product_lhs(&alphas),
                    daehee::shifted_product_rhs(&alphas, v),
                )
            })
        })
        .collect()
}

fn second_kind(g: &Grid, theorem: SecondKindTheorem) -> Vec<Check> {
    queries(g, Kind::Second)
        .into_iter()
        .map(|(label, q)| {
            Check::single(label, move |v| {
                Ok((
                    daehee::gen_daehee(&q, theorem.form()),
                    daehee::theorem_second_kind_rhs(&q, theorem, v)?,
                ))
            })
        })
        .collect()
}

fn second_kind_lah_numbers(g: &Grid) -> Vec<Check> {
    second_kind(g, SecondKindTheorem::LahNumbers)
}

fn second_kind_lah_polys(g: &Grid) -> Vec<Check> {
    second_kind(g, SecondKindTheorem::LahPolynomials)
}

fn second_kind_signed_stirling(g: &Grid) -> Vec<Check> {
    second_kind(g, SecondKindTheorem::SignedStirling)
}

fn join(values: &[Rat]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn case_check(case_id: u8, section: Section, label: String, inputs: CaseInputs) -> Check {
    Check::new(format!("case={case_id} {label}"), move |v| {
        let parts = daehee::special_case(case_id, section, &inputs)?;
        Ok(parts
            .into_iter()
            .map(|c| {
                let rhs = c.rhs(v).clone();
                (c.part.to_string(), c.lhs, rhs)
            })
            .collect::<Vec<Outcome>>())
    })
}

fn special_cases(g: &Grid, section: Section) -> Vec<Check> {
    let mut out = Vec::new();
    let zero = [Rat::zero()];
    for case_id in 1..=8u8 {
        match case_id {
            1..=5 => {
                let multiplicities: &[u32] = if case_id <= 2 { &g.multiplicities } else { &[1] };
                let alphas: &[Rat] = match case_id {
                    2 | 3 => &g.alphas,
                    _ => &zero,
                };
                for n in 0..=g.n_max {
                    for k in g.orders() {
                        for &r in multiplicities {
                            for alpha in alphas {
                                let mut label = format!("n={n} k={k}");
                                if case_id <= 2 {
                                    label.push_str(&format!(" r={r}"));
                                }
                                if matches!(case_id, 2 | 3) {
                                    label.push_str(&format!(" alpha={alpha}"));
                                }
                                let inputs = CaseInputs::scalar(n, k, r, alpha.clone());
                                out.push(case_check(case_id, section, label, inputs));
                            }
                        }
                    }
                }
            }
            6 => {
                for params in g.params() {
                    let inputs = CaseInputs::general(params.clone(), vec![rat::int(1)]);
                    out.push(case_check(case_id, section, params.to_string(), inputs));
                }
            }
            7 => {
                for params in g.simple_params() {
                    let label = format!("alpha=({})", join(params.alphas()));
                    let inputs = CaseInputs::general(params, vec![rat::int(1)]);
                    out.push(case_check(case_id, section, label, inputs));
                }
            }
            _ => {
                let limits = g.limit_tuples();
                for params in g.params() {
                    for l in &limits {
                        let label = format!("{params} limits=({})", join(l));
                        let inputs = CaseInputs::general(params.clone(), l.clone());
                        out.push(case_check(case_id, section, label, inputs));
                    }
                }
            }
        }
    }
    out
}

fn first_kind_cases(g: &Grid) -> Vec<Check> {
    special_cases(g, Section::FirstKind)
}

fn second_kind_cases(g: &Grid) -> Vec<Check> {
    special_cases(g, Section::SecondKind)
}
