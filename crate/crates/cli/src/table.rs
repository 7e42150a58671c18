use std::ops::RangeInclusive;

use clap::ValueEnum;
use daehee_core::classical;
use daehee_core::comtet::{comtet_first, gen_stirling2, gen_stirling2_signed};
use daehee_core::daehee::{self, DaeheeQuery, Kind};
use daehee_core::polycauchy::{poly_cauchy, PolyCauchyQuery};
use daehee_core::series;
use daehee_core::{rat, ParamVector, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// D_n
    Daehee,
    /// D_n^(k)
    DaeheeHigher,
    /// D_n^(k)(x)
    DaeheePoly,
    /// B_n
    Bernoulli,
    /// B_n^(k)(x)
    BernoulliHigher,
    /// signed s(n,m)
    Stirling1,
    /// S(n,m)
    Stirling2,
    /// unsigned L(n,m)
    Lah,
    /// C_n
    Cauchy1,
    /// Ĉ_n
    Cauchy2,
    /// s_α(m) for --alpha/--r
    Comtet,
    /// S(l; α, r), signed when --kind second
    GenStirling2,
    /// generalized Daehee numbers for --alpha/--r over k
    GenDaehee,
    /// generalized Daehee polynomials for --alpha/--r over k, x
    GenDaeheePoly,
    /// D_{n;i,1}^(k) (first kind) or its second-kind counterpart
    GenDaeheePlain,
    /// multiparameter poly-Cauchy number for --alpha/--r/--limits
    PolyCauchy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generating {
    Daehee,
    Bernoulli,
    Cauchy,
}

/// Fully parsed parameter bindings.
#[derive(Clone, Debug)]
pub struct Bindings {
    pub n: RangeInclusive<usize>,
    pub k: RangeInclusive<u32>,
    pub m: Option<RangeInclusive<usize>>,
    pub xs: Vec<Rat>,
    pub alphas: Vec<Rat>,
    pub rs: Option<Vec<u32>>,
    pub limits: Vec<Rat>,
    pub kind: Kind,
}

impl Bindings {
    fn params(&self) -> Result<ParamVector, String> {
        let rs = self
            .rs
            .clone()
            .unwrap_or_else(|| vec![1; self.alphas.len()]);
        ParamVector::new(self.alphas.clone(), rs).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.to_string(), serde_json::Value::String(v.clone())))
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&rows).expect("strings serialize");
        s.push('\n');
        s
    }
}

fn domain(e: daehee_core::Error) -> String {
    e.to_string()
}

fn orders(b: &Bindings, family: &str) -> Result<RangeInclusive<u32>, String> {
    if *b.k.start() == 0 {
        return Err(format!("{family} needs k >= 1"));
    }
    Ok(b.k.clone())
}

fn column_range(b: &Bindings, n: usize) -> RangeInclusive<usize> {
    match &b.m {
        Some(m) => *m.start()..=(*m.end()).min(n),
        None => 0..=n,
    }
}

/// Rows in lexicographic order of the listed columns.
pub fn build(family: Family, b: &Bindings) -> Result<Table, String> {
    let s = |r: Rat| r.to_string();
    let mut t;
    match family {
        Family::Daehee => {
            t = Table::new(&["n", "value"]);
            for n in b.n.clone() {
                t.push(vec![n.to_string(), s(classical::daehee(n))]);
            }
        }
        Family::DaeheeHigher => {
            t = Table::new(&["n", "k", "value"]);
            for n in b.n.clone() {
                for k in b.k.clone() {
                    let v = classical::daehee_higher(n, k).map_err(domain)?;
                    t.push(vec![n.to_string(), k.to_string(), s(v)]);
                }
            }
        }
        Family::DaeheePoly | Family::BernoulliHigher => {
            t = Table::new(&["n", "k", "x", "value"]);
            let ks = orders(b, "this family")?;
            for n in b.n.clone() {
                for k in ks.clone() {
                    for x in &b.xs {
                        let v = if family == Family::DaeheePoly {
                            classical::daehee_poly_higher(n, k, x)
                        } else {
                            classical::bernoulli_higher(n, k, x)
                        };
                        t.push(vec![n.to_string(), k.to_string(), x.to_string(), s(v)]);
                    }
                }
            }
        }
        Family::Bernoulli => {
            t = Table::new(&["n", "value"]);
            for n in b.n.clone() {
                t.push(vec![n.to_string(), s(classical::bernoulli(n))]);
            }
        }
        Family::Stirling1 | Family::Stirling2 | Family::Lah => {
            t = Table::new(&["n", "m", "value"]);
            for n in b.n.clone() {
                for m in column_range(b, n) {
                    let v = match family {
                        Family::Stirling1 => classical::stirling1(n, m),
                        Family::Stirling2 => classical::stirling2(n, m),
                        _ => classical::lah(n, m),
                    }
                    .map_err(domain)?;
                    t.push(vec![n.to_string(), m.to_string(), s(v)]);
                }
            }
        }
        Family::Cauchy1 | Family::Cauchy2 => {
            t = Table::new(&["n", "value"]);
            for n in b.n.clone() {
                let v = if family == Family::Cauchy1 {
                    classical::cauchy1(n)
                } else {
                    classical::cauchy2(n)
                };
                t.push(vec![n.to_string(), s(v)]);
            }
        }
        Family::Comtet => {
            t = Table::new(&["m", "value"]);
            let params = b.params()?;
            let row = comtet_first(&params);
            for m in column_range(b, params.total_weight()) {
                t.push(vec![m.to_string(), s(row.get(m))]);
            }
        }
        Family::GenStirling2 => {
            t = Table::new(&["l", "value"]);
            let params = b.params()?;
            for l in column_range(b, params.total_weight()) {
                let v = match b.kind {
                    Kind::First => gen_stirling2(&params, l),
                    Kind::Second => gen_stirling2_signed(&params, l),
                }
                .map_err(domain)?;
                t.push(vec![l.to_string(), s(v)]);
            }
        }
        Family::GenDaehee => {
            t = Table::new(&["k", "value"]);
            let params = b.params()?;
            for k in orders(b, "gen-daehee")? {
                let q = DaeheeQuery::new(k, params.clone(), b.kind).map_err(domain)?;
                t.push(vec![k.to_string(), s(daehee::gen_daehee_number(&q))]);
            }
        }
        Family::GenDaeheePoly => {
            t = Table::new(&["k", "x", "value"]);
            let params = b.params()?;
            for k in orders(b, "gen-daehee-poly")? {
                let q = DaeheeQuery::new(k, params.clone(), b.kind).map_err(domain)?;
                let p = daehee::gen_daehee_polynomial(&q);
                for x in &b.xs {
                    t.push(vec![k.to_string(), x.to_string(), s(p.eval(x))]);
                }
            }
        }
        Family::GenDaeheePlain => {
            t = Table::new(&["n", "k", "value"]);
            let ks = orders(b, "gen-daehee-plain")?;
            for n in b.n.clone() {
                for k in ks.clone() {
                    let v = daehee::gen_daehee_plain(n, k, b.kind);
                    t.push(vec![n.to_string(), k.to_string(), s(v)]);
                }
            }
        }
        Family::PolyCauchy => {
            t = Table::new(&["value"]);
            let q = PolyCauchyQuery::new(b.params()?, b.limits.clone(), b.kind).map_err(domain)?;
            t.push(vec![s(poly_cauchy(&q))]);
        }
    }
    Ok(t)
}

/// `n!`-scaled coefficients of a generating function, `n = 0..=order`.
pub fn generating(which: Generating, k: u32, order: usize, x: &Rat) -> Table {
    let gf = match which {
        Generating::Daehee => {
            &series::log1p_over_t(order).pow(k) * &series::binomial_series(x, order)
        }
        Generating::Bernoulli => series::bernoulli_gf(order).pow(k).exp_xt_times(x, order),
        Generating::Cauchy => classical::cauchy_gf(k, order),
    };
    let mut t = Table::new(&["n", "value"]);
    for (n, v) in gf.egf_values().into_iter().enumerate() {
        t.push(vec![n.to_string(), v.to_string()]);
    }
    t
}

/// `a`, `a..b` or `a..=b`, both ends inclusive.
pub fn parse_range<T>(input: &str) -> Result<RangeInclusive<T>, String>
where
    T: std::str::FromStr + PartialOrd + Copy,
{
    let one = |s: &str| {
        s.trim()
            .parse::<T>()
            .map_err(|_| format!("invalid bound {s:?} in range {input:?}"))
    };
    let (lo, hi) = match input.split_once("..") {
        Some((lo, hi)) => (one(lo)?, one(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = one(input)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {input:?}"));
    }
    Ok(lo..=hi)
}

pub fn parse_rats(input: &str) -> Result<Vec<Rat>, String> {
    if input.trim().is_empty() {
        return Ok(Vec::new());
    }
    input
        .split(',')
        .map(|s| rat::parse(s.trim()).map_err(|e| e.to_string()))
        .collect()
}

pub fn parse_u32s(input: &str) -> Result<Vec<u32>, String> {
    if input.trim().is_empty() {
        return Ok(Vec::new());
    }
    input
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid multiplicity {s:?}"))
        })
        .collect()
}
