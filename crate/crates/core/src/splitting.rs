//! Split forms: products of linear factors (α + βγ) with α, β ∈ KN and γ ∈ {x, y}.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff_ring::{Field, Klein, LaurentPoly};
use crate::dihedral::{decompose, DihedralWord, Letter, Quotient};
use crate::error::{Error, Result};
use crate::gamma::AlgebraElement;

/// The factor α + βγ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFactor {
    alpha: LaurentPoly,
    beta: LaurentPoly,
    gamma: Letter,
}

impl LinearFactor {
    pub fn new(alpha: LaurentPoly, beta: LaurentPoly, gamma: Letter) -> Result<Self> {
        if alpha.field() != beta.field() {
            return Err(Error::FieldMismatch(alpha.field(), beta.field()));
        }
        alpha.require_kn()?;
        beta.require_kn()?;
        if alpha.is_zero() && beta.is_zero() {
            return Err(Error::InvalidFactor("α and β are both zero".into()));
        }
        Ok(LinearFactor { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> &LaurentPoly {
        &self.alpha
    }

    pub fn beta(&self) -> &LaurentPoly {
        &self.beta
    }

    pub fn gamma(&self) -> Letter {
        self.gamma
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }

    pub fn to_algebra(&self) -> AlgebraElement {
        AlgebraElement::from_poly(self.alpha.clone())
            + AlgebraElement::from_poly_times(self.beta.clone(), self.gamma.klein())
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.alpha, self.beta, self.gamma)
    }
}

/// `scale · f_n ⋯ f_1`, factors stored left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitForm {
    factors: Vec<LinearFactor>,
    scale: LaurentPoly,
}

impl SplitForm {
    pub fn new(factors: Vec<LinearFactor>) -> Result<Self> {
        let field = factors
            .first()
            .map(LinearFactor::field)
            .ok_or_else(|| Error::InvalidFactor("a split form needs at least one factor".into()))?;
        Self::with_scale(factors, LaurentPoly::one(field))
    }

    pub fn with_scale(factors: Vec<LinearFactor>, scale: LaurentPoly) -> Result<Self> {
        scale.require_kn()?;
        for f in &factors {
            if f.field() != scale.field() {
                return Err(Error::FieldMismatch(scale.field(), f.field()));
            }
        }
        if factors.windows(2).any(|w| w[0].gamma == w[1].gamma) {
            return Err(Error::NotAlternating);
        }
        Ok(SplitForm { factors, scale })
    }

    pub fn factors(&self) -> &[LinearFactor] {
        &self.factors
    }

    pub fn scale(&self) -> &LaurentPoly {
        &self.scale
    }

    pub fn field(&self) -> Field {
        self.scale.field()
    }
}

pub fn expand(s: &SplitForm) -> AlgebraElement {
    s.factors
        .iter()
        .fold(AlgebraElement::from_poly(s.scale.clone()), |acc, f| &acc * &f.to_algebra())
}

/// The KN-coefficients a_w of α = Σ a_w·w over transversal words w.
pub fn word_coefficients(alpha: &AlgebraElement) -> BTreeMap<DihedralWord, LaurentPoly> {
    let mut out: BTreeMap<DihedralWord, LaurentPoly> = BTreeMap::new();
    for (g, s) in alpha.terms() {
        let (n, w) = decompose(&g, Quotient::N1);
        let term = LaurentPoly::monomial(s.clone(), n.exp);
        let slot = out
            .entry(w)
            .or_insert_with(|| LaurentPoly::zero(alpha.field()));
        *slot = &*slot + &term;
    }
    out.retain(|_, p| !p.is_zero());
    out
}

pub fn coefficient_table(s: &SplitForm) -> BTreeMap<DihedralWord, LaurentPoly> {
    word_coefficients(&expand(s))
}

/// The two factors of det η(α + βγ).
pub fn det_linear(f: &LinearFactor) -> (LaurentPoly, LaurentPoly) {
    let (a, b) = (&f.alpha, &f.beta);
    let (g, h, sq) = match f.gamma {
        Letter::X => (Klein::X, Klein::Y, [1, 0, 0]),
        Letter::Y => (Klein::Y, Klein::X, [0, 1, 0]),
    };
    let inv_sq = sq.map(|e: i64| -e);
    let first = a * &a.conj(g) - (b * &b.conj(g)).shift(sq);
    let second = a.conj(h) * a.conj(Klein::Z) - (b.conj(h) * b.conj(Klein::Z)).shift(inv_sq);
    (first, second)
}

/// (α^γ − βγ), so that f · partner(f) = αα^γ − ββ^γ γ².
pub fn partner(f: &LinearFactor) -> LinearFactor {
    LinearFactor {
        alpha: f.alpha.conj(f.gamma.klein()),
        beta: -&f.beta,
        gamma: f.gamma,
    }
}

/// ν ν^x ν^y ν^z, a central element of KΓ.
pub fn symmetrized_product(nu: &LaurentPoly) -> LaurentPoly {
    [Klein::X, Klein::Y, Klein::Z]
        .iter()
        .fold(nu.clone(), |acc, g| &acc * &nu.conj(*g))
}

/// Canonical gcd of all word coefficients.
pub fn coeff_gcd(alpha: &AlgebraElement) -> Result<LaurentPoly> {
    let coeffs = word_coefficients(alpha);
    let mut it = coeffs.values();
    let first = it.next().ok_or(Error::GcdOfZeros)?;
    it.try_fold(first.canonical_kn(), |g, c| g.gcd_kn(c))
}
