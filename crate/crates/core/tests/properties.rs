mod common;

use fours::chains::{build_vtable, chain_action, is_consistent, minimal_chains, ChainOp};
use fours::coeff_ring::{Field, Klein, LaurentPoly, Scalar, Var};
use fours::dihedral::{decompose, length, length_alg, lift, Length, Letter, Quotient};
use fours::gamma::{AlgebraElement, GroupAutomorphism, GroupElement};
use fours::matrix_rep::{det4, eta, is_unit, try_invert};
use fours::parse::parse_element;
use fours::random::RandomSpec;
use fours::splitting::{coeff_gcd, word_coefficients};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{aff_mul, affine, det_leibniz};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(3)), Just(Field::Prime(5))]
}

fn group_element() -> impl Strategy<Value = GroupElement> {
    ([-4i64..=4, -4i64..=4, -4i64..=4], 0usize..4).prop_map(|(e, t)| GroupElement::new(e, Klein::from_index(t)))
}

/// Random elements are drawn from a seeded generator so shrinking works on the seed.
fn sample<T>(f: Field, seed: u64, bound: i64, terms: usize, gen: impl Fn(&RandomSpec, &mut ChaCha8Rng) -> T) -> T {
    let spec = RandomSpec::new(f, bound, terms);
    gen(&spec, &mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_product_matches_affine_action(g in group_element(), h in group_element()) {
        prop_assert_eq!(affine(&(g * h)), aff_mul(&affine(&g), &affine(&h)));
        prop_assert_eq!(affine(&(g * g.inv())), affine(&GroupElement::identity()));
    }

    #[test]
    fn multiplication_is_associative(f in field(), seed: u64) {
        let (a, b, c) = sample(f, seed, 2, 2, |s, r| (s.algebra(r), s.algebra(r), s.algebra(r)));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn star_is_an_anti_involution(f in field(), seed: u64) {
        let (a, b) = sample(f, seed, 2, 2, |s, r| (s.algebra(r), s.algebra(r)));
        prop_assert_eq!((&a * &b).star(), &b.star() * &a.star());
        prop_assert_eq!(a.star().star(), a);
    }

    #[test]
    fn conjugation_is_an_automorphism(f in field(), seed: u64, g in group_element()) {
        let (a, b) = sample(f, seed, 2, 2, |s, r| (s.algebra(r), s.algebra(r)));
        let by_mult = &(&AlgebraElement::group(f, g) * &a) * &AlgebraElement::group(f, g.inv());
        prop_assert_eq!(a.conjugate_by(&g), by_mult);
        prop_assert_eq!((&a * &b).conjugate_by(&g), &a.conjugate_by(&g) * &b.conjugate_by(&g));
    }

    #[test]
    fn coefficient_conjugation_is_an_involution(f in field(), seed: u64, t in 0usize..4) {
        let (p, q) = sample(f, seed, 3, 4, |s, r| (s.kh(r), s.kh(r)));
        let t = Klein::from_index(t);
        prop_assert_eq!(p.conj(t).conj(t), p.clone());
        prop_assert_eq!((&p * &q).conj(t), &p.conj(t) * &q.conj(t));
    }

    #[test]
    fn automorphisms_are_multiplicative(f in field(), seed: u64) {
        let (a, b) = sample(f, seed, 2, 2, |s, r| (s.algebra(r), s.algebra(r)));
        for phi in [GroupAutomorphism::psi(), GroupAutomorphism::swap_xy()] {
            prop_assert_eq!((&a * &b).apply_automorphism(&phi), &a.apply_automorphism(&phi) * &b.apply_automorphism(&phi));
        }
    }

    #[test]
    fn determinant_is_multiplicative(f in field(), seed: u64) {
        let (a, b) = sample(f, seed, 1, 2, |s, r| (s.algebra(r), s.algebra(r)));
        let (da, db) = (det4(&eta(&a)), det4(&eta(&b)));
        prop_assert_eq!(det4(&eta(&(&a * &b))), &da * &db);
        prop_assert_eq!(det_leibniz(&eta(&a)), da);
    }

    #[test]
    fn units_invert_twice(f in field(), seed: u64) {
        let u = sample(f, seed, 3, 1, |s, r| {
            let (g, h) = (s.trivial_unit(r), s.trivial_unit(r));
            &g * &h
        });
        let inv = try_invert(&u).unwrap();
        prop_assert!((&u * &inv).is_one());
        prop_assert_eq!(try_invert(&inv).unwrap(), u);
    }

    #[test]
    fn non_units_are_rejected(f in field(), seed: u64) {
        let a = sample(f, seed, 2, 2, |s, r| s.nonzero_algebra(r));
        let v = is_unit(&a);
        prop_assert_eq!(v.is_unit, v.det.as_scalar().is_some_and(|s| !s.is_zero()));
        prop_assert_eq!(v.is_unit, try_invert(&a).is_ok());
    }

    #[test]
    fn printing_round_trips(f in field(), seed: u64) {
        let a = sample(f, seed, 3, 3, |s, r| s.algebra(r));
        let text = a.to_string();
        prop_assert_eq!(parse_element(&text, f).unwrap(), a);
        prop_assert_eq!(parse_element(&text, f).unwrap().to_string(), text);
    }

    #[test]
    fn gcd_divides_every_word_coefficient(f in field(), seed: u64) {
        let a = sample(f, seed, 2, 3, |s, r| s.nonzero_algebra(r));
        let g = coeff_gcd(&a).unwrap();
        for p in word_coefficients(&a).values() {
            prop_assert!(g.divides(p).unwrap(), "{} does not divide {}", g, p);
        }
    }

    #[test]
    fn specialization_is_a_ring_map(f in field(), seed: u64, v in 1i64..=4, var in 0usize..3) {
        let (p, q) = sample(f, seed, 2, 4, |s, r| (s.kh(r), s.kh(r)));
        let s = Scalar::from_i64(f, v);
        prop_assume!(!s.is_zero());
        let var = [Var::A, Var::B, Var::C][var];
        let sp = |x: &LaurentPoly| x.specialize(var, &s).unwrap();
        prop_assert_eq!(sp(&(&p * &q)), &sp(&p) * &sp(&q));
        prop_assert_eq!(sp(&(&p + &q)), &sp(&p) + &sp(&q));
    }

    #[test]
    fn decomposition_recovers_the_element(g in group_element(), q in 0usize..3) {
        let q = Quotient::ALL[q];
        let (n, w) = decompose(&g, q);
        prop_assert!(q.contains(&n));
        prop_assert_eq!(n * lift(&w, q), g);
        prop_assert_eq!(w.len(), length(&g, q));
    }

    #[test]
    fn lengths_transport_between_quotients(g in group_element(), q in 0usize..3) {
        let q = Quotient::ALL[q];
        prop_assert_eq!(length(&q.transport().apply(&g), q), length(&g, Quotient::N1));
        prop_assert_eq!(length(&g.inv(), q), length(&g, q));
    }

    #[test]
    fn length_is_subadditive(f in field(), seed: u64, q in 0usize..3) {
        let q = Quotient::ALL[q];
        let (a, b) = sample(f, seed, 2, 2, |s, r| (s.nonzero_algebra(r), s.nonzero_algebra(r)));
        let (Length::Finite(la), Length::Finite(lb)) = (length_alg(&a, q), length_alg(&b, q)) else {
            unreachable!("nonzero elements have finite length")
        };
        match length_alg(&(&a * &b), q) {
            Length::Finite(l) => prop_assert!(l <= la + lb),
            Length::NegInf => prop_assert!(false, "product of nonzero elements vanished"),
        }
    }
}

#[test]
fn zero_has_length_minus_infinity() {
    assert_eq!(length_alg(&AlgebraElement::zero(Field::Rational), Quotient::N1), Length::NegInf);
}

#[test]
fn swap_exchanges_the_two_start_letters() {
    for n in 3..=6 {
        let mx = minimal_chains(&build_vtable(n, Letter::X).unwrap(), n).unwrap();
        let my = minimal_chains(&build_vtable(n, Letter::Y).unwrap(), n).unwrap();
        let swapped: std::collections::BTreeSet<_> = mx
            .iter()
            .map(|c| {
                let (img, side) = chain_action(c, n, Letter::X, ChainOp::SwapXy);
                assert_eq!(side, Letter::Y);
                img
            })
            .collect();
        assert_eq!(swapped, my, "n={n}");
        for c in &mx {
            let act = |c: &_, op| chain_action(c, n, Letter::X, op).0;
            assert_eq!(act(&act(c, ChainOp::Cx), ChainOp::Cx), *c);
            assert_eq!(act(&act(c, ChainOp::Cx), ChainOp::Cy), act(&act(c, ChainOp::Cy), ChainOp::Cx));
        }
    }
}

#[test]
fn star_is_an_involution_on_chains() {
    for n in 3..=6 {
        for start in [Letter::X, Letter::Y] {
            let v = build_vtable(n, start).unwrap();
            for c in minimal_chains(&v, n).unwrap() {
                let (s, side) = chain_action(&c, n, start, ChainOp::Star);
                let (back, side_back) = chain_action(&s, n, side, ChainOp::Star);
                assert_eq!((back, side_back), (c.clone(), start));
                assert!(is_consistent(&c, &v));
            }
        }
    }
}
