//! Generalized higher-order Daehee numbers and polynomials of both kinds.
//!
//! Every member is a `k`-fold Volkenborn integral of a polynomial in the
//! product `u = x_1⋯x_k` (first kind) or in `−u` (second kind), optionally
//! multiplied by a free variable `x`. The reference value always comes from
//! [`crate::oracle`]; the connection-coefficient formulas here are the
//! alternative routes that the claims registry compares against it.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::classical::{self, lah_unchecked, s2};
use crate::comtet::{comtet_first, ComtetRow};
use crate::error::{Error, Result};
use crate::oracle::{self, IntegralKind};
use crate::params::ParamVector;
use crate::polycauchy::{self, PolyCauchyQuery};
use crate::poly::{self, Poly};
use crate::rat::{self, Rat};
use crate::value::{Form, Value, Variant};

/// First kind integrates a function of `u`, second kind the same function of `−u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    First,
    Second,
}

impl Kind {
    /// Applies `u ↦ −u` for the second kind.
    pub fn orient(self, p: Poly) -> Poly {
        match self {
            Kind::First => p,
            Kind::Second => oracle::reflect(&p),
        }
    }
}

/// One member of the generalized family: order `k` with shifts and
/// multiplicities `(ᾱ, r̄)`. The index `n` is the length of `ᾱ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaeheeQuery {
    k: u32,
    params: ParamVector,
    kind: Kind,
}

impl DaeheeQuery {
    pub fn new(k: u32, params: ParamVector, kind: Kind) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("gen_daehee", "order k must be at least 1"));
        }
        Ok(DaeheeQuery { k, params, kind })
    }

    pub fn n(&self) -> usize {
        self.params.len()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn params(&self) -> &ParamVector {
        &self.params
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// `∏ (±u − α_i)^{r_i}` as a polynomial in `u`.
    pub fn integrand(&self) -> Poly {
        self.kind.orient(self.params.expand())
    }

    fn measure(&self) -> IntegralKind {
        IntegralKind::Volkenborn(self.k)
    }

    fn require(&self, kind: Kind, what: &'static str) -> Result<()> {
        if self.kind != kind {
            return Err(Error::domain(
                what,
                format!("defined for the {kind:?} kind only"),
            ));
        }
        Ok(())
    }
}

/// Reference value of the number.
pub fn gen_daehee_number(q: &DaeheeQuery) -> Rat {
    oracle::eval_product_functional(&q.integrand(), &q.measure())
}

/// Reference value of the polynomial in `x`.
pub fn gen_daehee_polynomial(q: &DaeheeQuery) -> Poly {
    oracle::eval_product_functional_poly(&q.integrand(), &q.measure())
}

pub fn gen_daehee(q: &DaeheeQuery, form: Form) -> Value {
    match form {
        Form::Number => gen_daehee_number(q).into(),
        Form::Polynomial => gen_daehee_polynomial(q).into(),
    }
}

/// `Σ_m s_ᾱ(n,m;r̄) (Σ_ℓ S(m,ℓ) D_ℓ)^k` with `D_ℓ` supplied by the caller.
pub fn gen_daehee_number_from_daehee(
    q: &DaeheeQuery,
    daehee: impl Fn(usize) -> Rat,
) -> Result<Rat> {
    q.require(Kind::First, "gen_daehee_number_via_thm")?;
    let row = comtet_first(&q.params);
    let d: Vec<Rat> = (0..row.coeffs().len()).map(daehee).collect();
    Ok(row
        .coeffs()
        .iter()
        .enumerate()
        .fold(Rat::zero(), |acc, (m, s)| {
            if s.is_zero() {
                return acc;
            }
            let inner = (0..=m).fold(Rat::zero(), |a, l| a + s2(m, l) * &d[l]);
            acc + s * rat::pow(&inner, q.k as usize)
        }))
}

/// Connection-coefficient route to the first-kind number, with
/// `D_ℓ = (−1)^ℓ ℓ!/(ℓ+1)`.
pub fn gen_daehee_number_via_thm(q: &DaeheeQuery) -> Result<Rat> {
    gen_daehee_number_from_daehee(q, classical::daehee)
}

/// The same sum with the `k` inner factors expanded as an explicit `k`-fold
/// sum over `(ℓ_1, …, ℓ_k) ∈ [0, m]^k`.
///
/// The weights `(−1)^ℓ ℓ! S(m,ℓ)/(ℓ+1)` are cleared to integers over
/// `lcm(1, …, m+1)` so the inner loop runs on big integers.
pub fn gen_daehee_number_nested(q: &DaeheeQuery) -> Result<Rat> {
    q.require(Kind::First, "gen_daehee_number_nested")?;
    let row = comtet_first(&q.params);
    let k = q.k as usize;
    let mut total = Rat::zero();
    for (m, s) in row.coeffs().iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        let denom = (1..=m + 1).fold(BigInt::one(), |acc, d| acc.lcm(&BigInt::from(d)));
        let weights: Vec<BigInt> = (0..=m)
            .map(|l| {
                let w = rat::sign(l) * rat::from_bigint(rat::factorial(l)) * s2(m, l)
                    / rat::int(l as i64 + 1)
                    * rat::from_bigint(denom.clone());
                debug_assert!(w.is_integer());
                w.to_integer()
            })
            .collect();
        let mut index = vec![0usize; k];
        let mut inner = BigInt::zero();
        loop {
            inner += index
                .iter()
                .fold(BigInt::one(), |acc, &l| acc * &weights[l]);
            // odometer over [0, m]^k
            let mut pos = 0;
            while pos < k && index[pos] == m {
                index[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
            index[pos] += 1;
        }
        total += s * Rat::new(inner, num_traits::pow(denom, k));
    }
    Ok(total)
}

/// `Ď_n^{(k)}` (first kind) or its second-kind analog: the oracle applied to
/// `(±u)_n`.
pub fn gen_daehee_plain(n: usize, k: u32, kind: Kind) -> Rat {
    oracle::eval_product_functional(
        &kind.orient(poly::falling_factorial(n)),
        &IntegralKind::Volkenborn(k),
    )
}

/// `Ď_n^{(k)}(x)`: the oracle applied to `(±ux)_n`.
pub fn gen_daehee_plain_poly(n: usize, k: u32, kind: Kind) -> Poly {
    oracle::eval_product_functional_poly(
        &kind.orient(poly::falling_factorial(n)),
        &IntegralKind::Volkenborn(k),
    )
}

/// Memoized; the connection-coefficient sums hit the same few members over
/// and over.
pub fn gen_daehee_plain_value(n: usize, k: u32, kind: Kind, form: Form) -> Value {
    type Key = (usize, u32, Kind, Form);
    static CACHE: OnceLock<RwLock<HashMap<Key, Value>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (n, k, kind, form);
    if let Some(v) = cache.read().expect("plain cache poisoned").get(&key) {
        return v.clone();
    }
    let value = match form {
        Form::Number => gen_daehee_plain(n, k, kind).into(),
        Form::Polynomial => gen_daehee_plain_poly(n, k, kind).into(),
    };
    cache
        .write()
        .expect("plain cache poisoned")
        .entry(key)
        .or_insert(value)
        .clone()
}

/// `∫ (±ux − α)_ℓ`: the plain family with every factor shifted by `α`.
pub fn gen_daehee_shifted(l: usize, alpha: &Rat, k: u32, kind: Kind, form: Form) -> Value {
    let q = DaeheeQuery {
        k,
        params: ParamVector::consecutive(l, alpha, 1),
        kind,
    };
    gen_daehee(&q, form)
}

fn falling_basis_sum(
    coeff: impl Fn(usize) -> Rat,
    top: usize,
    k: u32,
    kind: Kind,
    form: Form,
) -> Value {
    let mut acc = Value::zero(form);
    for l in 0..=top {
        let c = coeff(l);
        if !c.is_zero() {
            acc.add_scaled(&c, &gen_daehee_plain_value(l, k, kind, form));
        }
    }
    acc
}

/// `Σ_ℓ S(n,ℓ;ᾱ,r̄) Ď_ℓ^{(k)}` in the requested form.
pub fn falling_basis_rhs(q: &DaeheeQuery, form: Form) -> Result<Value> {
    q.require(Kind::First, "falling-basis expansion")?;
    let row = comtet_first(&q.params);
    let top = q.params.total_weight();
    Ok(falling_basis_sum(
        |l| row.stirling2(l).expect("l within |r|"),
        top,
        q.k,
        Kind::First,
        form,
    ))
}

/// Number identity `Σ_ℓ S(n,ℓ;ᾱ,r̄) Ď_ℓ^{(k)}`.
pub fn falling_basis_number_rhs(q: &DaeheeQuery) -> Result<Rat> {
    falling_basis_rhs(q, Form::Number)
        .map(|v| v.as_number().cloned().expect("number form"))
}

/// Polynomial identity `Σ_ℓ S(n,ℓ;ᾱ,r̄) Ď_ℓ^{(k)}(x)`.
pub fn falling_basis_poly_rhs(q: &DaeheeQuery) -> Result<Poly> {
    falling_basis_rhs(q, Form::Polynomial)
        .map(|v| v.as_poly().cloned().expect("polynomial form"))
}

/// The three second-kind connection formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SecondKindTheorem {
    /// Lah-number expansion of the numbers.
    LahNumbers,
    /// Lah-number expansion of the polynomials.
    LahPolynomials,
    /// Signed non-central Stirling expansion of the polynomials.
    SignedStirling,
}

impl SecondKindTheorem {
    pub fn form(self) -> Form {
        match self {
            SecondKindTheorem::LahNumbers => Form::Number,
            SecondKindTheorem::LahPolynomials | SecondKindTheorem::SignedStirling => {
                Form::Polynomial
            }
        }
    }
}

fn lah_row_sum(m: usize) -> Rat {
    (0..=m).fold(Rat::zero(), |acc, l| acc + lah_unchecked(m, l))
}

/// Right-hand side of a second-kind identity.
///
/// `AsStated` keeps the printed structure. The Lah forms read `L(m, n)` as
/// `L(m, ℓ)` with `ℓ` the summation index and take `k` factors in the inner
/// product; their `S_ᾱ(n,m;r̄)` is the falling-basis coefficient
/// `S(n,m;ᾱ,r̄)`. `Corrected` uses `(−u)_m = (−1)^m Σ_ℓ L(m,ℓ)(u)_ℓ` for the
/// Lah forms and the signed coefficients `Σ_m (−1)^m s_ᾱ(n,m;r̄) S(m,ℓ)` for
/// the Stirling form.
pub fn theorem_second_kind_rhs(
    q: &DaeheeQuery,
    theorem: SecondKindTheorem,
    variant: Variant,
) -> Result<Value> {
    q.require(Kind::Second, "second-kind expansion")?;
    let row = comtet_first(&q.params);
    let top = q.params.total_weight();
    let form = theorem.form();
    let value = match (theorem, variant) {
        (SecondKindTheorem::SignedStirling, Variant::Corrected) => falling_basis_sum(
            |l| row.stirling2_signed(l).expect("l within |r|"),
            top,
            q.k,
            Kind::First,
            form,
        ),
        (SecondKindTheorem::SignedStirling, Variant::AsStated) => falling_basis_sum(
            |l| rat::sign(l) * row.stirling2(l).expect("l within |r|"),
            top,
            q.k,
            Kind::First,
            form,
        ),
        (_, Variant::Corrected) => lah_corrected(&row, top, q.k, form),
        (SecondKindTheorem::LahNumbers, Variant::AsStated) => lah_as_stated_number(&row, top, q.k),
        (SecondKindTheorem::LahPolynomials, Variant::AsStated) => {
            lah_as_stated_poly(&row, top, q.k)
        }
    };
    Ok(value)
}

fn lah_corrected(row: &ComtetRow, top: usize, k: u32, form: Form) -> Value {
    let mut acc = Value::zero(form);
    for m in 0..=top {
        let outer = row.stirling2(m).expect("m within |r|");
        if outer.is_zero() {
            continue;
        }
        let inner = falling_basis_sum(|l| lah_unchecked(m, l), m, k, Kind::First, form);
        acc.add_scaled(&(rat::sign(m) * outer), &inner);
    }
    acc
}

fn lah_as_stated_number(row: &ComtetRow, top: usize, k: u32) -> Value {
    let mut acc = Rat::zero();
    for m in 0..=top {
        let outer = row.stirling2(m).expect("m within |r|");
        if outer.is_zero() {
            continue;
        }
        let factor = (0..=m).fold(Rat::zero(), |a, l| a + s2(m, l) * classical::daehee(l));
        acc += outer * lah_row_sum(m) * rat::pow(&factor, k as usize);
    }
    acc.into()
}

fn lah_as_stated_poly(row: &ComtetRow, top: usize, k: u32) -> Value {
    let mut acc = Poly::zero();
    for m in 0..=top {
        let outer = row.stirling2(m).expect("m within |r|");
        if outer.is_zero() {
            continue;
        }
        // the printed factor carries no order, so each uses the one-variable member
        let factor = (0..=m).fold(Poly::zero(), |a, l| {
            let plain = gen_daehee_plain_value(l, 1, Kind::First, Form::Polynomial);
            &a + &plain.as_poly().expect("polynomial form").scale(&s2(m, l))
        });
        acc = &acc + &factor.pow(k).scale(&(outer * lah_row_sum(m)));
    }
    acc.into()
}

/// Left side of the one-variable shifted-product identity:
/// `∫ (x − α_0)⋯(x − α_{n−1}) dμ_0(x)`.
pub fn shifted_product_lhs(alphas: &[Rat]) -> Rat {
    gen_daehee_number(&DaeheeQuery {
        k: 1,
        params: ParamVector::simple(alphas.to_vec()),
        kind: Kind::First,
    })
}

/// Right side `Σ_i S(n,i;ᾱ)·w_i`, where `w_i = s(n+i,i)/binom(n+i,i)` as
/// printed or `w_i = D_i` when corrected.
pub fn shifted_product_rhs(alphas: &[Rat], variant: Variant) -> Rat {
    let params = ParamVector::simple(alphas.to_vec());
    let row = comtet_first(&params);
    let n = alphas.len();
    (0..=n).fold(Rat::zero(), |acc, i| {
        let c = row.stirling2(i).expect("i within n");
        if c.is_zero() {
            return acc;
        }
        let weight = match variant {
            Variant::AsStated => {
                classical::s1(n + i, i) / rat::from_bigint(rat::binomial(n + i, i))
            }
            Variant::Corrected => classical::daehee(i),
        };
        acc + c * weight
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Section {
    FirstKind,
    SecondKind,
}

impl Section {
    pub fn kind(self) -> Kind {
        match self {
            Section::FirstKind => Kind::First,
            Section::SecondKind => Kind::Second,
        }
    }
}

/// Free parameters of a special-case reduction. Cases 1–5 read `n`, `k`,
/// `r` and `alpha`; cases 6–7 read `params`; case 8 reads `params` and
/// `limits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseInputs {
    pub n: usize,
    pub k: u32,
    pub r: u32,
    pub alpha: Rat,
    pub params: ParamVector,
    pub limits: Vec<Rat>,
}

impl CaseInputs {
    pub fn scalar(n: usize, k: u32, r: u32, alpha: Rat) -> Self {
        CaseInputs {
            n,
            k,
            r,
            alpha,
            params: ParamVector::empty(),
            limits: vec![Rat::one()],
        }
    }

    pub fn general(params: ParamVector, limits: Vec<Rat>) -> Self {
        CaseInputs {
            n: params.len(),
            k: limits.len().max(1) as u32,
            r: 1,
            alpha: Rat::zero(),
            params,
            limits,
        }
    }
}

/// Both sides of one part of a special-case reduction. `stated` is the
/// right side as printed; `corrected` is the oracle-consistent right side and
/// equals `stated` wherever the printed reduction is already exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReduction {
    pub part: &'static str,
    pub lhs: Value,
    pub stated: Value,
    pub corrected: Value,
}

impl CaseReduction {
    fn exact(part: &'static str, lhs: Value, rhs: Value) -> Self {
        CaseReduction {
            part,
            lhs,
            stated: rhs.clone(),
            corrected: rhs,
        }
    }

    pub fn rhs(&self, variant: Variant) -> &Value {
        match variant {
            Variant::AsStated => &self.stated,
            Variant::Corrected => &self.corrected,
        }
    }
}

const FORMS: [Form; 2] = [Form::Polynomial, Form::Number];
const PARTS: [&str; 2] = ["i", "ii"];

/// Builds both sides of special case `case_id` (1..=8) of the given section.
pub fn special_case(case_id: u8, section: Section, inputs: &CaseInputs) -> Result<Vec<CaseReduction>> {
    let kind = section.kind();
    let CaseInputs { n, k, r, .. } = *inputs;
    let query = |params: ParamVector, k: u32| DaeheeQuery::new(k, params, kind);
    let mut out = Vec::new();
    match case_id {
        // ∏ (u − i)^r against the plain member at index n·r
        1 => {
            let q = query(ParamVector::consecutive(n, &Rat::zero(), r), k)?;
            for (form, part) in FORMS.into_iter().zip(PARTS) {
                let lhs = gen_daehee(&q, form);
                let stated = gen_daehee_plain_value(n * r as usize, k, kind, form);
                let corrected = match kind {
                    Kind::First => falling_basis_rhs(&q, form)?,
                    Kind::Second => signed_stirling_value(&q, form),
                };
                out.push(CaseReduction {
                    part,
                    lhs,
                    stated,
                    corrected,
                });
            }
        }
        // (u − α)^{nr} = Σ S(nr,ℓ)(u − α)_ℓ, then again at α = 0
        2 => {
            let nr = n * r as usize;
            for (alpha, parts) in [(inputs.alpha.clone(), ["i", "ii"]), (Rat::zero(), ["iii", "iv"])] {
                let q = query(ParamVector::uniform(n, &alpha, r), k)?;
                for (form, part) in FORMS.into_iter().zip(parts) {
                    let lhs = gen_daehee(&q, form);
                    let rhs = stirling2_expansion(nr, &alpha, k, kind, form);
                    out.push(CaseReduction::exact(part, lhs, rhs));
                }
            }
        }
        // r = 1 with a common shift α, then with α = 1
        3 => {
            for (alpha, parts) in [(inputs.alpha.clone(), ["i", "ii"]), (Rat::one(), ["iii", "iv"])] {
                let q = query(ParamVector::uniform(n, &alpha, 1), k)?;
                for (form, part) in FORMS.into_iter().zip(parts) {
                    let lhs = gen_daehee(&q, form);
                    let rhs = stirling2_expansion(n, &alpha, k, kind, form);
                    out.push(CaseReduction::exact(part, lhs, rhs));
                }
            }
        }
        // r = 1, α = 0: (±u)^n = Σ S(n,ℓ)(±u)_ℓ
        4 => {
            let q = query(ParamVector::uniform(n, &Rat::zero(), 1), k)?;
            for (form, part) in FORMS.into_iter().zip(PARTS) {
                let lhs = gen_daehee(&q, form);
                let corrected = stirling2_expansion(n, &Rat::zero(), k, kind, form);
                // the printed number form of the second kind expands in the first-kind family
                let stated = if kind == Kind::Second && form == Form::Number {
                    stirling2_expansion(n, &Rat::zero(), k, Kind::First, form)
                } else {
                    corrected.clone()
                };
                out.push(CaseReduction {
                    part,
                    lhs,
                    stated,
                    corrected,
                });
            }
        }
        // α_i = i, r = 1 gives the plain family
        5 => {
            let q = query(ParamVector::consecutive(n, &Rat::zero(), 1), k)?;
            for (form, part) in FORMS.into_iter().zip(PARTS) {
                let lhs = gen_daehee(&q, form);
                let rhs = gen_daehee_plain_value(n, k, kind, form);
                out.push(CaseReduction::exact(part, lhs, rhs));
            }
            if kind == Kind::First {
                // identification with the sum-argument higher-order Daehee numbers
                let lhs = gen_daehee_number(&q);
                out.push(CaseReduction {
                    part: "ii-sum-order",
                    lhs: lhs.into(),
                    stated: classical::daehee_higher(n, k)?.into(),
                    corrected: gen_daehee_plain(n, k, Kind::First).into(),
                });
            }
        }
        // k collapsed to one variable; 7 additionally forces r_i = 1
        6 | 7 => {
            let params = if case_id == 6 {
                inputs.params.clone()
            } else {
                ParamVector::simple(inputs.params.alphas().to_vec())
            };
            let q = query(params.clone(), 1)?;
            let lhs = gen_daehee_number(&q);
            let row = comtet_first(&params);
            let moment_sum = |signed: bool| {
                row.coeffs()
                    .iter()
                    .enumerate()
                    .fold(Rat::zero(), |acc, (m, s)| {
                        let sign = if signed { rat::sign(m) } else { Rat::one() };
                        acc + sign * s * classical::bernoulli(m)
                    })
            };
            let reduction = match kind {
                Kind::First => CaseReduction::exact("i", lhs.into(), moment_sum(false).into()),
                Kind::Second => CaseReduction {
                    part: "i",
                    lhs: lhs.into(),
                    stated: (-moment_sum(false)).into(),
                    corrected: moment_sum(true).into(),
                },
            };
            out.push(reduction);
        }
        // Volkenborn measure replaced by the box [0,ℓ_1]×⋯×[0,ℓ_k]
        8 => {
            let measure = IntegralKind::boxed(inputs.limits.clone())?;
            let lhs = oracle::eval_product_functional(
                &kind.orient(inputs.params.expand()),
                &measure,
            );
            let pq = PolyCauchyQuery::new(inputs.params.clone(), inputs.limits.clone(), kind)?;
            let rhs = polycauchy::poly_cauchy_via_thm(&pq, Variant::Corrected);
            out.push(CaseReduction::exact("i", lhs.into(), rhs.into()));
        }
        other => return Err(Error::UnknownCase(other)),
    }
    Ok(out)
}

/// `Σ_{ℓ ≤ top} S(top, ℓ)·∫(±ux − α)_ℓ`
fn stirling2_expansion(top: usize, alpha: &Rat, k: u32, kind: Kind, form: Form) -> Value {
    let mut acc = Value::zero(form);
    for l in 0..=top {
        let c = s2(top, l);
        if !c.is_zero() {
            acc.add_scaled(&c, &gen_daehee_shifted(l, alpha, k, kind, form));
        }
    }
    acc
}

fn signed_stirling_value(q: &DaeheeQuery, form: Form) -> Value {
    let row = comtet_first(&q.params);
    falling_basis_sum(
        |l| row.stirling2_signed(l).expect("l within |r|"),
        q.params.total_weight(),
        q.k,
        Kind::First,
        form,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn q(alphas: &[Rat], rs: &[u32], k: u32, kind: Kind) -> DaeheeQuery {
        DaeheeQuery::new(k, ParamVector::new(alphas.to_vec(), rs.to_vec()).unwrap(), kind).unwrap()
    }

    #[test]
    fn empty_products() {
        for kind in [Kind::First, Kind::Second] {
            let e = q(&[], &[], 3, kind);
            assert_eq!(gen_daehee_number(&e), int(1));
            assert_eq!(gen_daehee_polynomial(&e), Poly::one());
            let zero_weights = q(&[int(5)], &[0], 2, kind);
            assert_eq!(gen_daehee_number(&zero_weights), int(1));
        }
    }

    #[test]
    fn single_factor_numbers() {
        assert_eq!(gen_daehee_number(&q(&[int(0)], &[1], 1, Kind::First)), frac(-1, 2));
        assert_eq!(gen_daehee_number(&q(&[int(0)], &[2], 2, Kind::First)), frac(1, 36));
        assert_eq!(
            gen_daehee_number_via_thm(&q(&[int(0)], &[1], 1, Kind::First)).unwrap(),
            frac(-1, 2)
        );
        assert_eq!(
            gen_daehee_number_via_thm(&q(&[int(0)], &[2], 2, Kind::First)).unwrap(),
            frac(1, 36)
        );
        assert_eq!(
            gen_daehee_number_via_thm(&q(&[int(0), int(1)], &[1, 1], 1, Kind::First)).unwrap(),
            frac(2, 3)
        );
        assert!(gen_daehee_number_via_thm(&q(&[int(0)], &[1], 1, Kind::Second)).is_err());
    }

    #[test]
    fn single_factor_polynomials() {
        assert_eq!(
            gen_daehee_polynomial(&q(&[int(0)], &[1], 1, Kind::First)),
            Poly::new(vec![int(0), frac(-1, 2)])
        );
        assert_eq!(
            gen_daehee_polynomial(&q(&[int(0)], &[1], 1, Kind::Second)),
            Poly::new(vec![int(0), frac(1, 2)])
        );
    }

    #[test]
    fn plain_members() {
        for k in 1..=3 {
            assert_eq!(gen_daehee_plain(0, k, Kind::First), int(1));
        }
        assert_eq!(gen_daehee_plain(1, 2, Kind::First), frac(1, 4));
        // u² − u under two variables: B_2² − B_1²
        assert_eq!(gen_daehee_plain(2, 2, Kind::First), frac(-2, 9));
        for n in 0..=6 {
            assert_eq!(gen_daehee_plain(n, 1, Kind::First), classical::daehee(n));
        }
    }

    #[test]
    fn falling_basis_theorems() {
        let single = q(&[int(0)], &[1], 1, Kind::First);
        assert_eq!(falling_basis_number_rhs(&single).unwrap(), frac(-1, 2));
        let ff = q(&[int(0), int(1)], &[1, 1], 1, Kind::First);
        assert_eq!(falling_basis_number_rhs(&ff).unwrap(), frac(2, 3));
        assert_eq!(falling_basis_number_rhs(&q(&[], &[], 2, Kind::First)).unwrap(), int(1));
        let p = q(&[frac(1, 2), int(-1)], &[2, 1], 3, Kind::First);
        assert_eq!(falling_basis_poly_rhs(&p).unwrap(), gen_daehee_polynomial(&p));
    }

    #[test]
    fn second_kind_corrected_single_factor() {
        let s = q(&[int(0)], &[1], 1, Kind::Second);
        let expected: Value = Poly::new(vec![int(0), frac(1, 2)]).into();
        for thm in [SecondKindTheorem::SignedStirling, SecondKindTheorem::LahPolynomials] {
            assert_eq!(theorem_second_kind_rhs(&s, thm, Variant::Corrected).unwrap(), expected);
        }
        let empty = q(&[], &[], 2, Kind::Second);
        for thm in [
            SecondKindTheorem::LahNumbers,
            SecondKindTheorem::LahPolynomials,
            SecondKindTheorem::SignedStirling,
        ] {
            for variant in [Variant::AsStated, Variant::Corrected] {
                let v = theorem_second_kind_rhs(&empty, thm, variant).unwrap();
                assert_eq!(v, gen_daehee(&empty, thm.form()));
            }
        }
    }

    #[test]
    fn shifted_product_identity() {
        assert_eq!(shifted_product_lhs(&[int(0)]), frac(-1, 2));
        assert_eq!(shifted_product_rhs(&[int(0)], Variant::Corrected), frac(-1, 2));
        assert_eq!(shifted_product_rhs(&[], Variant::Corrected), int(1));
        assert_eq!(shifted_product_rhs(&[], Variant::AsStated), int(1));
        let ff = [int(0), int(1)];
        assert_eq!(shifted_product_lhs(&ff), frac(2, 3));
        assert_eq!(shifted_product_rhs(&ff, Variant::Corrected), frac(2, 3));
        // printed weight at i = 2 is s(4,2)/binom(4,2) = 11/6
        assert_eq!(shifted_product_rhs(&ff, Variant::AsStated), frac(11, 6));
    }

    #[test]
    fn case_four_single_step() {
        let cases = special_case(4, Section::FirstKind, &CaseInputs::scalar(1, 2, 1, int(0))).unwrap();
        for c in &cases {
            assert_eq!(c.lhs, c.corrected);
            assert_eq!(c.lhs, c.stated);
        }
        assert_eq!(cases[1].lhs, gen_daehee_plain(1, 2, Kind::First).into());
    }

    #[test]
    fn case_one_literal_index_fails_for_repeated_roots() {
        let cases = special_case(1, Section::FirstKind, &CaseInputs::scalar(1, 1, 2, int(0))).unwrap();
        let number = &cases[1];
        // ∫ u² dμ_0 = 1/6 but ∫ (u)_2 dμ_0 = 2/3
        assert_eq!(number.lhs, frac(1, 6).into());
        assert_eq!(number.stated, frac(2, 3).into());
        assert_eq!(number.corrected, number.lhs);
    }

    #[test]
    fn unknown_case() {
        let inputs = CaseInputs::scalar(1, 1, 1, int(0));
        assert_eq!(
            special_case(9, Section::FirstKind, &inputs),
            Err(Error::UnknownCase(9))
        );
    }
}
