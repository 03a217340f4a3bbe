//! Randomized invariants for the polynomial ring and the q-series layer.

use dentedhex::poly::{LaurentPoly, Monomial};
use dentedhex::qseries::{q_pochhammer, step_weight, weight_run};
use dentedhex::rational::Rational;
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-50i128..=50, 1i128..=8).prop_map(|(n, d)| Rational::ratio(n, d))
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    (0u32..4, 0u32..4, -6i64..=6).prop_map(|(x, y, q)| Monomial::new(x, y, q))
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((arb_monomial(), arb_rational()), 0..6)
        .prop_map(LaurentPoly::from_terms)
}

fn arb_nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    arb_poly().prop_filter("nonzero", |f| !f.is_zero())
}

fn arb_point() -> impl Strategy<Value = (Rational, Rational, Rational)> {
    (
        arb_rational().prop_filter("q0 != 0", |q| !q.is_zero()),
        arb_rational(),
        arb_rational(),
    )
}

/// Rationals whose numerators span the machine-word boundary, so both the
/// inline representation and the bignum spill get exercised.
fn arb_wide_rational() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1i64..=1000, 0u32..=80).prop_map(|(n, d, shift)| {
        Rational::new(BigInt::from(n) << shift, BigInt::from(d))
    })
}

proptest! {
    #[test]
    fn rational_matches_bignum_reference(
        a in arb_wide_rational(),
        b in arb_wide_rational(),
    ) {
        let (ab, bb) = (a.to_big(), b.to_big());
        prop_assert_eq!((&a + &b).to_big(), &ab + &bb);
        prop_assert_eq!((&a - &b).to_big(), &ab - &bb);
        prop_assert_eq!((&a * &b).to_big(), &ab * &bb);
        if !b.is_zero() {
            prop_assert_eq!((&a / &b).to_big(), &ab / &bb);
        }
        // Equal values must compare equal regardless of which representation
        // each side happens to use.
        prop_assert_eq!(Rational::new(ab.numer().clone(), ab.denom().clone()), a);
    }

    #[test]
    fn add_commutes(f in arb_poly(), g in arb_poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
    }

    #[test]
    fn add_associates(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
    }

    #[test]
    fn mul_commutes(f in arb_poly(), g in arb_poly()) {
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn mul_associates(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn mul_distributes(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn subtraction_cancels(f in arb_poly()) {
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn exact_div_inverts_mul(f in arb_poly(), g in arb_nonzero_poly()) {
        let prod = &f * &g;
        prop_assert_eq!(prod.exact_div(&g).unwrap(), f);
    }

    #[test]
    fn evaluate_is_a_ring_homomorphism(
        f in arb_poly(),
        g in arb_poly(),
        (q0, x0, y0) in arb_point(),
    ) {
        let ef = f.evaluate(&q0, &x0, &y0).unwrap();
        let eg = g.evaluate(&q0, &x0, &y0).unwrap();
        let sum = (&f + &g).evaluate(&q0, &x0, &y0).unwrap();
        let prod = (&f * &g).evaluate(&q0, &x0, &y0).unwrap();
        prop_assert_eq!(sum, &ef + &eg);
        prop_assert_eq!(prod, &ef * &eg);
    }

    #[test]
    fn format_parse_is_identity(f in arb_poly()) {
        let text = f.to_string();
        let back: LaurentPoly = text.parse().unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn step_weight_involution(i in -20i64..=20) {
        let w = step_weight(i);
        prop_assert_eq!(w.swap_xy_invert_q(), w);
    }

    #[test]
    fn weight_run_is_homogeneous(lo in -6i64..=6, len in 0i64..=5) {
        let hi = lo + len - 1;
        let run = weight_run(lo, hi);
        let want = len.max(0) as u32;
        for (m, _) in run.terms() {
            prop_assert_eq!(m.xy_degree(), want);
        }
    }

    #[test]
    fn pochhammer_recurrence(
        base in arb_monomial(),
        ratio in arb_monomial(),
        n in 0u32..=10,
    ) {
        let shorter = q_pochhammer(base, ratio, n);
        let longer = q_pochhammer(base, ratio, n + 1);
        let last = LaurentPoly::one() - LaurentPoly::monomial(base.mul(&ratio.pow(n)));
        prop_assert_eq!(longer, &shorter * &last);
    }
}
