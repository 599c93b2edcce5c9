//! Algebraic identities and round trips for homogeneous ternary forms.

use defect::forms::{monomial_count, monomial_index, parse_form, Form, MonomialBasis};
use defect::scalar;
use defect::Scalar;
use proptest::prelude::*;

fn x() -> Form {
    Form::monomial(1, 0, 0, scalar::from_int(1))
}
fn y() -> Form {
    Form::monomial(0, 1, 0, scalar::from_int(1))
}
fn z() -> Form {
    Form::monomial(0, 0, 1, scalar::from_int(1))
}

/// A random homogeneous form of the given degree with small rational
/// coefficients, not identically zero.
fn form_strategy(degree: usize) -> impl Strategy<Value = Form> {
    let n = monomial_count(degree);
    prop::collection::vec((-6i64..=6, 1i64..=3), n).prop_filter_map("zero form", move |pairs| {
        if pairs.iter().all(|&(p, _)| p == 0) {
            return None;
        }
        let coeffs: Vec<Scalar> = pairs.iter().map(|&(p, q)| scalar::ratio(p, q)).collect();
        Some(Form::from_coeffs(degree, coeffs))
    })
}

/// Same, but with integer coefficients, so the rendering is parseable.
fn int_form_strategy(degree: usize) -> impl Strategy<Value = Form> {
    let n = monomial_count(degree);
    prop::collection::vec(-9i64..=9, n).prop_filter_map("zero form", move |ints| {
        if ints.iter().all(|&v| v == 0) {
            return None;
        }
        let coeffs: Vec<Scalar> = ints.iter().map(|&v| scalar::from_int(v)).collect();
        Some(Form::from_coeffs(degree, coeffs))
    })
}

fn point_strategy() -> impl Strategy<Value = [Scalar; 3]> {
    ((-5i64..=5), (-5i64..=5), (-5i64..=5))
        .prop_map(|(a, b, c)| [scalar::from_int(a), scalar::from_int(b), scalar::from_int(c)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// x·∂f/∂x + y·∂f/∂y + z·∂f/∂z = deg(f)·f for homogeneous f.
    #[test]
    fn euler_relation(f in (1usize..=5).prop_flat_map(form_strategy)) {
        let (fx, fy, fz) = f.partials().unwrap();
        let lhs = x()
            .multiply(&fx)
            .add(&y().multiply(&fy))
            .add(&z().multiply(&fz));
        let rhs = f.scale(&scalar::from_int(f.degree() as i64));
        prop_assert_eq!(lhs, rhs);
    }

    /// ∂(fg) = f·∂g + g·∂f componentwise.
    #[test]
    fn product_rule(f in form_strategy(2), g in form_strategy(3)) {
        let prod = f.multiply(&g);
        let (px, py, pz) = prod.partials().unwrap();
        let (fx, fy, fz) = f.partials().unwrap();
        let (gx, gy, gz) = g.partials().unwrap();
        prop_assert_eq!(px, f.multiply(&gx).add(&g.multiply(&fx)));
        prop_assert_eq!(py, f.multiply(&gy).add(&g.multiply(&fy)));
        prop_assert_eq!(pz, f.multiply(&gz).add(&g.multiply(&fz)));
    }

    /// Rendering an integer-coefficient form then parsing it reproduces
    /// the form exactly.
    #[test]
    fn render_parse_round_trip(f in (1usize..=5).prop_flat_map(int_form_strategy)) {
        let text = f.render();
        let back = parse_form(&text).unwrap();
        prop_assert_eq!(back, f);
    }

    /// Evaluation is a ring homomorphism.
    #[test]
    fn evaluation_respects_ring_ops(
        f in form_strategy(2),
        g in form_strategy(2),
        p in point_strategy(),
    ) {
        let prod = f.multiply(&g);
        prop_assert_eq!(prod.evaluate(&p), f.evaluate(&p) * g.evaluate(&p));
        let sum = f.add(&g);
        prop_assert_eq!(sum.evaluate(&p), f.evaluate(&p) + g.evaluate(&p));
    }

    /// Substituting x→x^k, y→y^k, z→z^k agrees with evaluating at powered
    /// points.
    #[test]
    fn power_substitution_matches_evaluation(
        f in form_strategy(2),
        p in point_strategy(),
        k in 1usize..=3,
    ) {
        let powered = f.substitute_powers(k);
        prop_assert_eq!(powered.degree(), 2 * k);
        let pk = [
            num_traits::pow(p[0].clone(), k),
            num_traits::pow(p[1].clone(), k),
            num_traits::pow(p[2].clone(), k),
        ];
        prop_assert_eq!(powered.evaluate(&p), f.evaluate(&pk));
    }

    /// Substituting linear forms for the variables agrees with evaluating
    /// those linear forms at the point first.
    #[test]
    fn linear_substitution_matches_evaluation(
        f in form_strategy(3),
        p in point_strategy(),
        rows in prop::collection::vec((-3i64..=3, -3i64..=3, -3i64..=3), 3),
    ) {
        let u = Form::linear(rows[0].0, rows[0].1, rows[0].2);
        let v = Form::linear(rows[1].0, rows[1].1, rows[1].2);
        let w = Form::linear(rows[2].0, rows[2].1, rows[2].2);
        if u.is_zero() || v.is_zero() || w.is_zero() {
            return Ok(());
        }
        let sub = f.substitute_linear(&u, &v, &w);
        let q = [u.evaluate(&p), v.evaluate(&p), w.evaluate(&p)];
        prop_assert_eq!(sub.evaluate(&p), f.evaluate(&q));
    }
}

#[test]
fn monomial_indexing_is_a_bijection() {
    for d in 0..=8 {
        let basis = MonomialBasis::new(d);
        assert_eq!(basis.len(), monomial_count(d));
        assert_eq!(basis.len(), (d + 1) * (d + 2) / 2);
        for (idx, &(a, b, c)) in basis.entries().iter().enumerate() {
            assert_eq!(a + b + c, d);
            assert_eq!(monomial_index(d, a, b), idx);
        }
    }
}

#[test]
fn parser_handles_products_and_signs() {
    let f = parse_form("x^3 - 2*y^3 + x*y*z - 4*z^3").unwrap();
    assert_eq!(f.degree(), 3);
    assert_eq!(f.coeff_at(3, 0, 0), &scalar::from_int(1));
    assert_eq!(f.coeff_at(0, 3, 0), &scalar::from_int(-2));
    assert_eq!(f.coeff_at(1, 1, 1), &scalar::from_int(1));
    assert_eq!(f.coeff_at(0, 0, 3), &scalar::from_int(-4));
    let g = parse_form("(x+y)^2 - x^2 - 2*x*y").unwrap();
    assert_eq!(g, Form::monomial(0, 2, 0, scalar::from_int(1)));
}

#[test]
fn parser_rejects_bad_input() {
    assert!(parse_form("x^2 + y").is_err(), "inhomogeneous");
    assert!(parse_form("x^2 + )").is_err(), "syntax");
    assert!(parse_form("w^2").is_err(), "unknown variable");
    assert!(parse_form("").is_err(), "empty input");
    assert!(parse_form("2x").is_err(), "juxtaposition");
    assert!(parse_form("0.5*x^2").is_err(), "decimal literal");
}

#[test]
fn cancellation_to_zero_is_accepted() {
    let zero = parse_form("x^2 - x^2").unwrap();
    assert!(zero.is_zero());
}

#[test]
fn partials_of_power_sums() {
    let f = parse_form("x^3 + y^3 + z^3").unwrap();
    let (fx, fy, fz) = f.partials().unwrap();
    assert_eq!(fx, Form::monomial(2, 0, 0, scalar::from_int(3)));
    assert_eq!(fy, Form::monomial(0, 2, 0, scalar::from_int(3)));
    assert_eq!(fz, Form::monomial(0, 0, 2, scalar::from_int(3)));
}

#[test]
fn primitive_integer_coefficients_clear_denominators() {
    let f = Form::monomial(2, 0, 0, scalar::ratio(1, 6))
        .add(&Form::monomial(0, 2, 0, scalar::ratio(1, 4)))
        .add(&Form::monomial(0, 0, 2, scalar::from_int(1)));
    let ints = f.primitive_integer_coeffs();
    let mut nonzero: Vec<i64> = ints
        .iter()
        .filter(|v| **v != num_bigint::BigInt::from(0))
        .map(|v| i64::try_from(v).unwrap())
        .collect();
    nonzero.sort_unstable();
    assert_eq!(nonzero, vec![2, 3, 12]);
}
