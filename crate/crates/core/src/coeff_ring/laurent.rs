//! Sparse Laurent polynomials in a, b, c over K, i.e. the group algebra KH of H = ⟨a,b,c⟩ ≅ ℤ³.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::bivariate;
use super::{Field, Klein, Scalar};
use crate::error::{Error, Result};

/// Exponents of a^i b^j c^k.
pub type Exponent = [i64; 3];

/// One of the three commuting variables of KH.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    A,
    B,
    C,
}

impl Var {
    pub fn slot(self) -> usize {
        match self {
            Var::A => 0,
            Var::B => 1,
            Var::C => 2,
        }
    }

    pub fn name(self) -> char {
        ['a', 'b', 'c'][self.slot()]
    }
}

/// Finitely supported map ℤ³ → K with no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    field: Field,
    terms: BTreeMap<Exponent, Scalar>,
}

impl LaurentPoly {
    pub fn zero(field: Field) -> Self {
        LaurentPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(Scalar::one(field))
    }

    pub fn constant(s: Scalar) -> Self {
        Self::monomial(s, [0, 0, 0])
    }

    pub fn from_i64(field: Field, n: i64) -> Self {
        Self::constant(Scalar::from_i64(field, n))
    }

    pub fn monomial(coeff: Scalar, exp: Exponent) -> Self {
        let mut p = Self::zero(coeff.field());
        if !coeff.is_zero() {
            p.terms.insert(exp, coeff);
        }
        p
    }

    /// The unit monomial a^i b^j c^k.
    pub fn unit_monomial(field: Field, exp: Exponent) -> Self {
        Self::monomial(Scalar::one(field), exp)
    }

    pub fn var(field: Field, v: Var) -> Self {
        let mut e = [0; 3];
        e[v.slot()] = 1;
        Self::unit_monomial(field, e)
    }

    /// Collects terms, merging repeated exponents and dropping zeros.
    pub fn from_terms<I>(field: Field, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Scalar)>,
    {
        let mut p = Self::zero(field);
        for (e, s) in terms {
            if s.field() != field {
                return Err(Error::FieldMismatch(field, s.field()));
            }
            p.add_term(e, &s);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(s.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + s;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exponent) -> Scalar {
        self.terms
            .get(exp)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// Term with the lexicographically largest exponent.
    pub fn leading_term(&self) -> Option<(&Exponent, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Lies in KN = K[a±1, b±1], i.e. no term involves c.
    pub fn in_kn(&self) -> bool {
        self.terms.keys().all(|e| e[2] == 0)
    }

    pub(crate) fn require_kn(&self) -> Result<()> {
        if self.in_kn() {
            Ok(())
        } else {
            Err(Error::NotInKn(self.to_string()))
        }
    }

    /// A unit of KH: a single nonzero monomial λ a^i b^j c^k.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// A nonzero element of K.
    pub fn is_scalar(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains_key(&[0, 0, 0])
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero(self.field));
        }
        self.is_scalar().then(|| self.terms[&[0, 0, 0]].clone())
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let mut out = self.clone();
        for (e, s) in &other.terms {
            out.add_term(*e, s);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let mut out = Self::zero(self.field);
        for (e1, s1) in &self.terms {
            for (e2, s2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                out.add_term(e, &(s1 * s2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.field);
        }
        LaurentPoly {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Multiplication by the unit monomial a^i b^j c^k.
    pub fn shift(&self, by: Exponent) -> Self {
        LaurentPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] + by[0], e[1] + by[1], e[2] + by[2]], c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.field);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The conjugate p^g = g p g⁻¹ for g ∈ {1, x, y, z}.
    pub fn conj(&self, g: Klein) -> Self {
        if g == Klein::E {
            return self.clone();
        }
        let s = g.exponent_signs();
        LaurentPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([s[0] * e[0], s[1] * e[1], s[2] * e[2]], c.clone()))
                .collect(),
        }
    }

    /// Substitutes a nonzero field element for one variable.
    pub fn specialize(&self, var: Var, value: &Scalar) -> Result<Self> {
        if value.field() != self.field {
            return Err(Error::FieldMismatch(self.field, value.field()));
        }
        if value.is_zero() {
            return Err(Error::ZeroSpecialization);
        }
        let slot = var.slot();
        let mut out = Self::zero(self.field);
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[slot] = 0;
            out.add_term(e2, &(c * &value.pow(e[slot])?));
        }
        Ok(out)
    }

    /// Minimum exponent of each variable over the support (zero vector for 0).
    pub fn min_exponents(&self) -> Exponent {
        let mut m = [i64::MAX; 3];
        for e in self.terms.keys() {
            for i in 0..3 {
                m[i] = m[i].min(e[i]);
            }
        }
        if self.is_zero() {
            [0; 3]
        } else {
            m
        }
    }

    /// Whether `self` divides `other` in KN.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(bivariate::div_exact(other, self)?.is_some())
    }

    /// `other / self` in KN when the division is exact.
    pub fn exact_quotient(&self, other: &Self) -> Result<Option<Self>> {
        bivariate::div_exact(other, self)
    }

    /// Canonical gcd in KN: see [`LaurentPoly::canonical_kn`].
    pub fn gcd_kn(&self, other: &Self) -> Result<Self> {
        bivariate::gcd(self, other)
    }

    /// Representative of `self` up to unit monomials and scalars: minimum exponents
    /// shifted to 0 and the lexicographically leading coefficient made 1.
    pub fn canonical_kn(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let m = self.min_exponents();
        let shifted = self.shift([-m[0], -m[1], -m[2]]);
        let lead = shifted.leading_term().unwrap().1.inv().unwrap();
        shifted.scale(&lead)
    }

    /// Whether `self` and `other` agree up to a unit of KH.
    pub fn associate(&self, other: &Self) -> bool {
        self.canonical_kn() == other.canonical_kn()
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

/// Writes `a^i*b^j*c^k` (exponent 1 printed bare); returns false for the empty monomial.
pub(crate) fn write_monomial(f: &mut impl fmt::Write, e: &Exponent) -> std::result::Result<bool, fmt::Error> {
    let mut first = true;
    for (i, name) in ['a', 'b', 'c'].iter().enumerate() {
        if e[i] == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        if e[i] == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{}", e[i])?;
        }
    }
    Ok(!first)
}

/// Writes one signed term `λ*m*basis`; `basis` may be empty.
pub(crate) fn write_term(
    f: &mut impl fmt::Write,
    first: bool,
    coeff: &Scalar,
    e: &Exponent,
    basis: &str,
) -> fmt::Result {
    let (neg, mag) = if coeff.is_negative() {
        (true, -coeff)
    } else {
        (false, coeff.clone())
    };
    match (first, neg) {
        (true, true) => f.write_char('-')?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let has_rest = *e != [0, 0, 0] || !basis.is_empty();
    if !mag.is_one() || !has_rest {
        write!(f, "{mag}")?;
        if has_rest {
            f.write_char('*')?;
        }
    }
    let wrote = write_monomial(f, e)?;
    if !basis.is_empty() {
        if wrote {
            f.write_char('*')?;
        }
        f.write_str(basis)?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            write_term(f, n == 0, c, e, "")?;
        }
        Ok(())
    }
}
