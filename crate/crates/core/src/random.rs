//! Random elements for property tests and examples.

use rand::Rng;

use crate::coeff_ring::{Field, Klein, LaurentPoly, Scalar};
use crate::gamma::{AlgebraElement, GroupElement};

/// Shape of random elements: exponents drawn from `-exp_bound..=exp_bound`,
/// at most `max_terms` terms per component.
#[derive(Debug, Clone, Copy)]
pub struct RandomSpec {
    pub field: Field,
    pub exp_bound: i64,
    pub max_terms: usize,
}

impl RandomSpec {
    pub fn new(field: Field, exp_bound: i64, max_terms: usize) -> Self {
        RandomSpec {
            field,
            exp_bound,
            max_terms,
        }
    }

    /// A scalar, possibly zero. Rationals are small integers or halves.
    pub fn scalar<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self.field {
            Field::Rational => {
                let n = rng.gen_range(-3i64..=3);
                if rng.gen_bool(0.2) {
                    Scalar::from_i64(self.field, n) * Scalar::from_i64(self.field, 2).inv().unwrap()
                } else {
                    Scalar::from_i64(self.field, n)
                }
            }
            Field::Prime(p) => Scalar::from_i64(self.field, rng.gen_range(0..p as i64)),
        }
    }

    pub fn nonzero_scalar<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.scalar(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }

    fn exponent<R: Rng + ?Sized>(&self, rng: &mut R) -> i64 {
        rng.gen_range(-self.exp_bound..=self.exp_bound)
    }

    /// Element of KH, possibly zero.
    pub fn kh<R: Rng + ?Sized>(&self, rng: &mut R) -> LaurentPoly {
        self.poly(rng, true)
    }

    /// Element of KN, possibly zero.
    pub fn kn<R: Rng + ?Sized>(&self, rng: &mut R) -> LaurentPoly {
        self.poly(rng, false)
    }

    pub fn nonzero_kn<R: Rng + ?Sized>(&self, rng: &mut R) -> LaurentPoly {
        loop {
            let p = self.kn(rng);
            if !p.is_zero() {
                return p;
            }
        }
    }

    fn poly<R: Rng + ?Sized>(&self, rng: &mut R, with_c: bool) -> LaurentPoly {
        let n = rng.gen_range(0..=self.max_terms);
        let mut p = LaurentPoly::zero(self.field);
        for _ in 0..n {
            let k = if with_c { self.exponent(rng) } else { 0 };
            let e = [self.exponent(rng), self.exponent(rng), k];
            p = &p + &LaurentPoly::monomial(self.nonzero_scalar(rng), e);
        }
        p
    }

    pub fn group_element<R: Rng + ?Sized>(&self, rng: &mut R) -> GroupElement {
        let e = [self.exponent(rng), self.exponent(rng), self.exponent(rng)];
        GroupElement::new(e, Klein::from_index(rng.gen_range(0..4)))
    }

    pub fn trivial_unit<R: Rng + ?Sized>(&self, rng: &mut R) -> AlgebraElement {
        AlgebraElement::from_group(self.group_element(rng), self.nonzero_scalar(rng))
    }

    pub fn algebra<R: Rng + ?Sized>(&self, rng: &mut R) -> AlgebraElement {
        AlgebraElement::from_components(self.kh(rng), self.kh(rng), self.kh(rng), self.kh(rng))
            .expect("components share a field")
    }

    pub fn nonzero_algebra<R: Rng + ?Sized>(&self, rng: &mut R) -> AlgebraElement {
        loop {
            let a = self.algebra(rng);
            if !a.is_zero() {
                return a;
            }
        }
    }
}
