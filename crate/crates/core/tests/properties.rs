use daehee_core::classical::{self, stirling1, stirling2};
use daehee_core::claims::{self, registry, Grid, IDENTITIES};
use daehee_core::comtet::comtet_first;
use daehee_core::daehee::{gen_daehee_polynomial, DaeheeQuery, Kind};
use daehee_core::exec::Execution;
use daehee_core::oracle::{eval_product_functional, reflect, IntegralKind};
use daehee_core::poly::{falling_factorial, integrate_0_to};
use daehee_core::polycauchy::{poly_cauchy, PolyCauchyQuery};
use daehee_core::{rat, ParamVector, Poly, Rat, Series};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat::frac(p, q))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..=max_len).prop_map(Poly::new)
}

fn params(max_len: usize) -> impl Strategy<Value = ParamVector> {
    prop::collection::vec((small_rat(), 1u32..=2), 0..=max_len).prop_map(|v| {
        let (alphas, rs) = v.into_iter().unzip();
        ParamVector::new(alphas, rs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_mul_commutes_and_associates(a in poly(4), b in poly(4), c in poly(3)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn poly_eval_is_a_ring_map(a in poly(4), b in poly(4), x in small_rat()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn series_product_commutes_with_truncation(
        a in prop::collection::vec(small_rat(), 1..8),
        b in prop::collection::vec(small_rat(), 1..8),
        order in 0usize..6,
    ) {
        let sa = Series::new(7, a);
        let sb = Series::new(7, b);
        prop_assert_eq!((&sa * &sb).truncate(order), &sa.truncate(order) * &sb.truncate(order));
    }

    #[test]
    fn series_inverse_is_an_inverse(tail in prop::collection::vec(small_rat(), 0..6), c in 1i64..4) {
        let mut coeffs = vec![rat::int(c)];
        coeffs.extend(tail);
        let s = Series::new(6, coeffs);
        let inv = s.inverse().unwrap();
        prop_assert_eq!(&s * &inv, Series::one(6));
    }

    #[test]
    fn stirling_triangles_are_inverse(n in 0usize..12, m in 0usize..12) {
        // both factors vanish outside m <= l <= n
        let sum = (m..=n).fold(Rat::zero(), |acc, l| {
            acc + stirling1(n, l).unwrap() * stirling2(l, m).unwrap()
        });
        prop_assert_eq!(sum, if n == m { Rat::one() } else { Rat::zero() });
    }

    #[test]
    fn daehee_bernoulli_round_trip(n in 0usize..=8, k in 1u32..=3, x in small_rat()) {
        // B -> D through s(n,l), then back through S(n,l)
        let d: Vec<Rat> = (0..=n)
            .map(|l| (0..=l).fold(Rat::zero(), |acc, j| {
                acc + stirling1(l, j).unwrap() * classical::bernoulli_higher(j, k, &x)
            }))
            .collect();
        prop_assert_eq!(&d[n], &classical::daehee_poly_from_gf(n, k, &x));
        let back = (0..=n).fold(Rat::zero(), |acc, l| acc + stirling2(n, l).unwrap() * &d[l]);
        prop_assert_eq!(back, classical::bernoulli_higher(n, k, &x));
    }

    #[test]
    fn comtet_row_shifts_with_parameters(p in params(3), c in small_rat()) {
        let shifted = comtet_first(&p.shifted(&c)).to_poly();
        prop_assert_eq!(shifted, p.expand().compose_shift(&-c));
    }

    #[test]
    fn comtet_row_evaluates_the_product(p in params(3), x in small_rat()) {
        let direct = p.alphas().iter().zip(p.multiplicities()).fold(Rat::one(), |acc, (a, &r)| {
            acc * rat::pow(&(&x - a), r as usize)
        });
        prop_assert_eq!(comtet_first(&p).to_poly().eval(&x), direct);
    }

    #[test]
    fn oracle_is_linear(a in poly(5), b in poly(5), c in small_rat(), k in 1u32..=3) {
        let kind = IntegralKind::volkenborn(k).unwrap();
        let combined = &a.scale(&c) + &b;
        prop_assert_eq!(
            eval_product_functional(&combined, &kind),
            c * eval_product_functional(&a, &kind) + eval_product_functional(&b, &kind)
        );
    }

    #[test]
    fn volkenborn_factors_over_coordinates(m in 0usize..10, k in 1u32..=3) {
        let kind = IntegralKind::volkenborn(k).unwrap();
        let monomial = Poly::monomial(Rat::one(), m);
        prop_assert_eq!(
            eval_product_functional(&monomial, &kind),
            rat::pow(&classical::bernoulli(m), k as usize)
        );
    }

    #[test]
    fn one_dimensional_box_is_ordinary_integration(p in poly(6), upper in small_rat()) {
        let kind = IntegralKind::boxed(vec![upper.clone()]).unwrap();
        prop_assert_eq!(eval_product_functional(&p, &kind), integrate_0_to(&p, &upper));
    }

    #[test]
    fn poly_cauchy_rescales_its_limit(p in params(3), l in small_rat()) {
        prop_assume!(!l.is_zero());
        // ∫_0^ℓ f(u) du = ℓ ∫_0^1 f(ℓu) du
        let q = PolyCauchyQuery::new(p.clone(), vec![l.clone()], Kind::First).unwrap();
        let rescaled = p.expand().map_terms(|m, c| c * rat::pow(&l, m));
        let unit = IntegralKind::boxed(vec![Rat::one()]).unwrap();
        prop_assert_eq!(poly_cauchy(&q), l * eval_product_functional(&rescaled, &unit));
    }

    #[test]
    fn reflection_is_an_involution(p in poly(6)) {
        prop_assert_eq!(reflect(&reflect(&p)), p);
    }

    #[test]
    fn second_kind_is_first_kind_with_negated_shifts(p in params(3), k in 1u32..=3) {
        // ∏(−u − α)^r = (−1)^{|r|} ∏(u + α)^r
        let second = DaeheeQuery::new(k, p.clone(), Kind::Second).unwrap();
        let negated = ParamVector::new(
            p.alphas().iter().map(|a| -a).collect(),
            p.multiplicities().to_vec(),
        ).unwrap();
        let first = DaeheeQuery::new(k, negated, Kind::First).unwrap();
        let sign = rat::sign(p.total_weight());
        prop_assert_eq!(gen_daehee_polynomial(&second), gen_daehee_polynomial(&first).scale(&sign));
    }

    #[test]
    fn falling_factorial_roots(n in 0usize..10, j in 0i64..10) {
        let v = falling_factorial(n).eval(&rat::int(j));
        prop_assert_eq!(v.is_zero(), (j as usize) < n);
    }
}

#[test]
fn every_identity_is_covered_exactly_once() {
    for key in IDENTITIES {
        let owners: Vec<&str> = registry()
            .iter()
            .filter(|c| c.covers.contains(key))
            .map(|c| c.id)
            .collect();
        assert_eq!(owners.len(), 1, "{key} covered by {owners:?}");
    }
    for claim in registry() {
        for key in claim.covers {
            assert!(IDENTITIES.contains(key), "{} covers unknown {key}", claim.id);
        }
    }
}

#[test]
fn claim_ids_are_unique_and_resolvable() {
    for (i, claim) in registry().iter().enumerate() {
        assert_eq!(claim.id, format!("C{}", i + 1));
        assert_eq!(claims::find(&claim.id.to_lowercase()).unwrap().id, claim.id);
    }
    assert!(claims::find("C999").is_err());
    let picked = claims::select(&["C3".into(), "C1".into(), "c3".into()]).unwrap();
    let ids: Vec<&str> = picked.iter().map(|c| c.id).collect();
    assert_eq!(ids, ["C1", "C3"]);
}

#[test]
fn small_grid_reports_are_deterministic_across_executors() {
    let grid = Grid::small();
    let all = claims::select(&[]).unwrap();
    let seq = claims::report(&claims::run_claims(&all, &grid, Execution::Sequential)).to_json();
    let par = claims::report(&claims::run_claims(&all, &grid, Execution::Parallel)).to_json();
    let again = claims::report(&claims::run_claims(&all, &grid, Execution::Parallel)).to_json();
    assert_eq!(seq, par);
    assert_eq!(par, again);
}
