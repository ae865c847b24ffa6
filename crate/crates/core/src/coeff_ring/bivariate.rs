//! Exact division and gcd in KN = K[a±1, b±1].
//!
//! Laurent inputs are shifted to ordinary polynomials in K[a, b] (monomials are units of KN).
//! Division uses the single-divisor division algorithm in lex order; gcd uses the
//! content / primitive-part recursion over K[a][b].

use super::{Field, LaurentPoly, Scalar};
use crate::error::{Error, Result};

/// `num / den` in KN if it is exact.
pub(crate) fn div_exact(num: &LaurentPoly, den: &LaurentPoly) -> Result<Option<LaurentPoly>> {
    num.require_kn()?;
    den.require_kn()?;
    if num.field() != den.field() {
        return Err(Error::FieldMismatch(num.field(), den.field()));
    }
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(Some(num.clone()));
    }
    let field = num.field();
    let mn = num.min_exponents();
    let md = den.min_exponents();
    let mut rem = num.shift([-mn[0], -mn[1], 0]);
    let d = den.shift([-md[0], -md[1], 0]);
    let (de, dc) = d.leading_term().map(|(e, c)| (*e, c.clone())).unwrap();
    let dc_inv = dc.inv()?;
    let mut quot = LaurentPoly::zero(field);
    while let Some((re, rc)) = rem.leading_term().map(|(e, c)| (*e, c.clone())) {
        if re[0] < de[0] || re[1] < de[1] {
            return Ok(None);
        }
        let t = LaurentPoly::monomial(&rc * &dc_inv, [re[0] - de[0], re[1] - de[1], 0]);
        rem = &rem - &(&t * &d);
        quot = &quot + &t;
    }
    Ok(Some(quot.shift([mn[0] - md[0], mn[1] - md[1], 0])))
}

/// Canonical gcd in KN; `gcd(0, 0)` is an error.
pub(crate) fn gcd(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly> {
    p.require_kn()?;
    q.require_kn()?;
    if p.field() != q.field() {
        return Err(Error::FieldMismatch(p.field(), q.field()));
    }
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Err(Error::GcdOfZeros),
        (true, false) => return Ok(q.canonical_kn()),
        (false, true) => return Ok(p.canonical_kn()),
        _ => {}
    }
    let field = p.field();
    let f = BiPoly::from_laurent(p);
    let g = BiPoly::from_laurent(q);
    Ok(f.gcd(&g).to_laurent(field).canonical_kn())
}

/// Dense univariate polynomial over K, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
struct UPoly {
    field: Field,
    c: Vec<Scalar>,
}

impl UPoly {
    fn new(field: Field, mut c: Vec<Scalar>) -> Self {
        while c.last().is_some_and(Scalar::is_zero) {
            c.pop();
        }
        UPoly { field, c }
    }

    fn zero(field: Field) -> Self {
        UPoly { field, c: vec![] }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn lead(&self) -> &Scalar {
        self.c.last().expect("nonzero polynomial")
    }

    fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(self.field);
        }
        let mut c = vec![Scalar::zero(self.field); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            for (j, y) in o.c.iter().enumerate() {
                c[i + j] += &(x * y);
            }
        }
        UPoly::new(self.field, c)
    }

    fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let z = Scalar::zero(self.field);
        let c = (0..n)
            .map(|i| self.c.get(i).unwrap_or(&z) - o.c.get(i).unwrap_or(&z))
            .collect();
        UPoly::new(self.field, c)
    }

    fn scale(&self, s: &Scalar) -> UPoly {
        UPoly::new(self.field, self.c.iter().map(|x| x * s).collect())
    }

    fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let inv = d.lead().inv().expect("nonzero divisor");
        let mut r = self.clone();
        let mut q = vec![Scalar::zero(self.field); self.c.len().saturating_sub(d.deg())];
        while !r.is_zero() && r.deg() >= d.deg() {
            let shift = r.deg() - d.deg();
            let t = r.lead() * &inv;
            for (i, dc) in d.c.iter().enumerate() {
                r.c[i + shift] -= &(&t * dc);
            }
            q[shift] = t;
            r = UPoly::new(self.field, r.c);
        }
        (UPoly::new(self.field, q), r)
    }

    fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv().unwrap())
    }

    fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Polynomial in b with coefficients in K[a], lowest b-degree first.
#[derive(Debug, Clone, PartialEq)]
struct BiPoly {
    field: Field,
    c: Vec<UPoly>,
}

impl BiPoly {
    fn new(field: Field, mut c: Vec<UPoly>) -> Self {
        while c.last().is_some_and(UPoly::is_zero) {
            c.pop();
        }
        BiPoly { field, c }
    }

    fn from_laurent(p: &LaurentPoly) -> Self {
        let field = p.field();
        let m = p.min_exponents();
        let mut rows: Vec<Vec<Scalar>> = vec![];
        for (e, s) in p.terms() {
            let i = (e[0] - m[0]) as usize;
            let j = (e[1] - m[1]) as usize;
            if rows.len() <= j {
                rows.resize(j + 1, vec![]);
            }
            if rows[j].len() <= i {
                rows[j].resize(i + 1, Scalar::zero(field));
            }
            rows[j][i] = s.clone();
        }
        BiPoly::new(field, rows.into_iter().map(|r| UPoly::new(field, r)).collect())
    }

    fn to_laurent(&self, field: Field) -> LaurentPoly {
        let terms = self.c.iter().enumerate().flat_map(|(j, row)| {
            row.c
                .iter()
                .enumerate()
                .map(move |(i, s)| ([i as i64, j as i64, 0], s.clone()))
        });
        LaurentPoly::from_terms(field, terms).expect("same field")
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn lead(&self) -> &UPoly {
        self.c.last().expect("nonzero polynomial")
    }

    fn content(&self) -> UPoly {
        self.c
            .iter()
            .fold(UPoly::zero(self.field), |g, x| g.gcd(x))
    }

    fn div_coeffs(&self, d: &UPoly) -> BiPoly {
        BiPoly::new(
            self.field,
            self.c
                .iter()
                .map(|x| {
                    let (q, r) = x.divrem(d);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }

    fn primitive_part(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.div_coeffs(&self.content())
    }

    /// Pseudo-remainder of `self` by `d` with respect to b.
    fn prem(&self, d: &BiPoly) -> BiPoly {
        let lc = d.lead().clone();
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= d.deg() {
            let shift = r.deg() - d.deg();
            let rl = r.lead().clone();
            let mut c: Vec<UPoly> = r.c.iter().map(|x| x.mul(&lc)).collect();
            for (i, dc) in d.c.iter().enumerate() {
                c[i + shift] = c[i + shift].sub(&dc.mul(&rl));
            }
            r = BiPoly::new(self.field, c);
        }
        r
    }

    fn gcd(&self, o: &BiPoly) -> BiPoly {
        let cont = self.content().gcd(&o.content());
        let (mut f, mut g) = (self.primitive_part(), o.primitive_part());
        if f.deg() < g.deg() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = f.prem(&g);
            f = g;
            g = r.primitive_part();
        }
        let pp = if f.deg() == 0 {
            BiPoly::new(self.field, vec![UPoly::new(self.field, vec![Scalar::one(self.field)])])
        } else {
            f.primitive_part()
        };
        BiPoly::new(self.field, pp.c.iter().map(|x| x.mul(&cont)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff_ring::Var;

    fn q() -> Field {
        Field::Rational
    }
    fn a() -> LaurentPoly {
        LaurentPoly::var(q(), Var::A)
    }
    fn b() -> LaurentPoly {
        LaurentPoly::var(q(), Var::B)
    }
    fn one() -> LaurentPoly {
        LaurentPoly::one(q())
    }

    #[test]
    fn monomials_divide_everything() {
        let m = LaurentPoly::unit_monomial(q(), [-2, 5, 0]);
        let p = one() + a() * a() - b();
        assert!(m.divides(&p).unwrap());
    }

    #[test]
    fn a_minus_one_does_not_divide_b_minus_one() {
        assert!(!(a() - one()).divides(&(b() - one())).unwrap());
    }

    #[test]
    fn exact_quotient_recovers_factor() {
        let f = a() - b() + one();
        let g = a() * b() + b().shift([0, -1, 0]) * a();
        let prod = &f * &g;
        assert_eq!(f.exact_quotient(&prod).unwrap().unwrap(), g);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(a().gcd_kn(&b()).unwrap(), one());
        let g = (a() - one()).gcd_kn(&((a() - one()) * b())).unwrap();
        assert_eq!(g, a() - one());
        let p = (a() - one()) * (b() + a());
        assert_eq!(LaurentPoly::zero(q()).gcd_kn(&p).unwrap(), p.canonical_kn());
        assert_eq!(
            LaurentPoly::zero(q()).gcd_kn(&LaurentPoly::zero(q())),
            Err(Error::GcdOfZeros)
        );
    }

    #[test]
    fn gcd_with_shared_b_factor_and_content() {
        // (a+1)(ab - 1) and (a+1)(ab - 1)(b + 2)·a^-3 share (a+1)(ab-1).
        let common = (a() + one()) * (a() * b() - one());
        let p = &common * &(a() - b());
        let r = (&common * &(b() + LaurentPoly::from_i64(q(), 2))).shift([-3, 0, 0]);
        assert_eq!(p.gcd_kn(&r).unwrap(), common.canonical_kn());
    }

    #[test]
    fn gcd_over_f2() {
        let f = Field::Prime(2);
        let a = LaurentPoly::var(f, Var::A);
        let b = LaurentPoly::var(f, Var::B);
        let one = LaurentPoly::one(f);
        // (a + 1)^2 = a^2 + 1 in characteristic 2
        let p = &a * &a + one.clone();
        let r = (&a + &one) * (&b + &one);
        assert_eq!(p.gcd_kn(&r).unwrap(), a + one);
    }

    #[test]
    fn rejects_c() {
        let c = LaurentPoly::var(q(), Var::C);
        assert!(matches!(c.gcd_kn(&a()), Err(Error::NotInKn(_))));
        assert!(matches!(a().divides(&c), Err(Error::NotInKn(_))));
    }
}
