use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{GroupAutomorphism, GroupElement, TransversalTable, STANDARD_TABLE};
use crate::coeff_ring::{write_term, Field, Klein, LaurentPoly, Scalar};
use crate::error::{Error, Result};

/// An element α = Ax + By + C + Dz of KΓ with A, B, C, D ∈ KH.
///
/// Components are stored in basis order (1, x, y, z), i.e. (C, A, B, D).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    field: Field,
    comps: [LaurentPoly; 4],
}

impl AlgebraElement {
    pub fn zero(field: Field) -> Self {
        let z = LaurentPoly::zero(field);
        AlgebraElement {
            field,
            comps: [z.clone(), z.clone(), z.clone(), z],
        }
    }

    pub fn one(field: Field) -> Self {
        Self::from_poly(LaurentPoly::one(field))
    }

    /// Builds Ax + By + C + Dz from (C, A, B, D).
    pub fn from_components(c: LaurentPoly, a: LaurentPoly, b: LaurentPoly, d: LaurentPoly) -> Result<Self> {
        let field = c.field();
        for p in [&a, &b, &d] {
            if p.field() != field {
                return Err(Error::FieldMismatch(field, p.field()));
            }
        }
        Ok(AlgebraElement {
            field,
            comps: [c, a, b, d],
        })
    }

    /// The element p·1 for p ∈ KH.
    pub fn from_poly(p: LaurentPoly) -> Self {
        let mut out = Self::zero(p.field());
        out.comps[0] = p;
        out
    }

    /// p · t for p ∈ KH and a transversal letter t.
    pub fn from_poly_times(p: LaurentPoly, t: Klein) -> Self {
        let mut out = Self::zero(p.field());
        out.comps[t.index()] = p;
        out
    }

    /// The trivial unit λg (or zero if λ = 0).
    pub fn from_group(g: GroupElement, coeff: Scalar) -> Self {
        Self::from_poly_times(LaurentPoly::monomial(coeff, g.exp), g.t)
    }

    pub fn group(field: Field, g: GroupElement) -> Self {
        Self::from_group(g, Scalar::one(field))
    }

    /// Sum of the elements of a finite set with coefficient 1.
    pub fn sum_of<'a>(field: Field, set: impl IntoIterator<Item = &'a GroupElement>) -> Self {
        set.into_iter()
            .fold(Self::zero(field), |acc, g| acc + Self::group(field, *g))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The KH-coefficient of the transversal letter `t`.
    pub fn component(&self, t: Klein) -> &LaurentPoly {
        &self.comps[t.index()]
    }

    pub fn components(&self) -> &[LaurentPoly; 4] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(LaurentPoly::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.field)
    }

    /// Nonzero terms λg, ordered by transversal letter and then exponent.
    pub fn terms(&self) -> impl Iterator<Item = (GroupElement, &Scalar)> + '_ {
        Klein::ALL.into_iter().flat_map(move |t| {
            self.comps[t.index()]
                .terms()
                .map(move |(e, s)| (GroupElement::new(*e, t), s))
        })
    }

    pub fn coeff(&self, g: &GroupElement) -> Scalar {
        self.comps[g.t.index()].coeff(&g.exp)
    }

    pub fn support(&self) -> BTreeSet<GroupElement> {
        self.terms().map(|(g, _)| g).collect()
    }

    pub fn support_size(&self) -> usize {
        self.comps.iter().map(LaurentPoly::num_terms).sum()
    }

    /// λg with λ ≠ 0.
    pub fn is_trivial_unit(&self) -> bool {
        self.support_size() == 1
    }

    /// Whether the element lies in KN (support inside N = ⟨a, b⟩).
    pub fn in_kn(&self) -> bool {
        self.comps[1..].iter().all(LaurentPoly::is_zero) && self.comps[0].in_kn()
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
        for i in 0..4 {
            out.comps[i] = &out.comps[i] + &other.comps[i];
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.mul_with(other, &STANDARD_TABLE)
    }

    /// Bilinear extension of the group product defined by `table`.
    pub fn mul_with(&self, other: &Self, table: &TransversalTable) -> Result<Self> {
        self.same_field(other)?;
        let mut out = Self::zero(self.field);
        for t1 in Klein::ALL {
            let p1 = &self.comps[t1.index()];
            if p1.is_zero() {
                continue;
            }
            for t2 in Klein::ALL {
                let p2 = &other.comps[t2.index()];
                if p2.is_zero() {
                    continue;
                }
                // (p1 t1)(p2 t2) = p1 · p2^{t1} · h · t3
                let (h, t3) = table.product(t1, t2);
                let term = (p1 * &p2.conj(t1)).shift(h);
                out.comps[t3.index()] = &out.comps[t3.index()] + &term;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        AlgebraElement {
            field: self.field,
            comps: self.comps.clone().map(|p| p.scale(s)),
        }
    }

    /// Left multiplication by p ∈ KH.
    pub fn left_mul_poly(&self, p: &LaurentPoly) -> Self {
        AlgebraElement {
            field: self.field,
            comps: self.comps.clone().map(|c| p * &c),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.field), |acc, _| &acc * self)
    }

    /// The coefficient-preserving anti-automorphism g ↦ g⁻¹.
    pub fn star(&self) -> Self {
        self.map_support(|g| g.inv())
    }

    /// Extends a group automorphism to a ring automorphism of KΓ.
    pub fn apply_automorphism(&self, phi: &GroupAutomorphism) -> Self {
        self.map_support(|g| phi.apply(g))
    }

    /// `g α g⁻¹`.
    pub fn conjugate_by(&self, g: &GroupElement) -> Self {
        let ge = Self::group(self.field, *g);
        let gi = Self::group(self.field, g.inv());
        &(&ge * self) * &gi
    }

    fn map_support(&self, f: impl Fn(&GroupElement) -> GroupElement) -> Self {
        let mut out = Self::zero(self.field);
        for (g, s) in self.terms() {
            let h = f(&g);
            out.comps[h.t.index()].add_term(h.exp, s);
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            field: self.field,
            comps: self.comps.clone().map(|p| -p),
        }
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

macro_rules! alg_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&AlgebraElement> for &AlgebraElement {
            type Output = AlgebraElement;
            fn $method(self, rhs: &AlgebraElement) -> AlgebraElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;
            fn $method(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;
            fn $method(self, rhs: &AlgebraElement) -> AlgebraElement {
                (&self).$method(rhs)
            }
        }
    };
}

alg_binop!(Add, add, checked_add);
alg_binop!(Sub, sub, checked_sub);
alg_binop!(Mul, mul, checked_mul);

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (g, s)) in self.terms().enumerate() {
            let basis = if g.t == Klein::E { "" } else { g.t.as_str() };
            write_term(f, n == 0, s, &g.exp, basis)?;
        }
        Ok(())
    }
}
