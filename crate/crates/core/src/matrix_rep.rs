//! The embedding η: KΓ → M₄(KH) and the determinant unit criterion.
//!
//! Rows and columns are indexed by the basis (1, x, y, xy) of KΓ as a left KH-module.

use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

use crate::coeff_ring::{Field, Klein, LaurentPoly};
use crate::error::{Error, Result};
use crate::gamma::AlgebraElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix4 {
    field: Field,
    m: [[LaurentPoly; 4]; 4],
}

impl Matrix4 {
    pub fn zero(field: Field) -> Self {
        Matrix4 {
            field,
            m: std::array::from_fn(|_| std::array::from_fn(|_| LaurentPoly::zero(field))),
        }
    }

    pub fn identity(field: Field) -> Self {
        let mut out = Self::zero(field);
        for i in 0..4 {
            out.m[i][i] = LaurentPoly::one(field);
        }
        out
    }

    pub fn from_rows(rows: [[LaurentPoly; 4]; 4]) -> Result<Self> {
        let field = rows[0][0].field();
        for p in rows.iter().flatten() {
            if p.field() != field {
                return Err(Error::FieldMismatch(field, p.field()));
            }
        }
        Ok(Matrix4 { field, m: rows })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.m[row][col]
    }

    pub fn rows(&self) -> &[[LaurentPoly; 4]; 4] {
        &self.m
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let mut out = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] = &self.m[i][j] + &other.m[i][j];
            }
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let mut out = Self::zero(self.field);
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = LaurentPoly::zero(self.field);
                for k in 0..4 {
                    if !self.m[i][k].is_zero() && !other.m[k][j].is_zero() {
                        acc = &acc + &(&self.m[i][k] * &other.m[k][j]);
                    }
                }
                out.m[i][j] = acc;
            }
        }
        Ok(out)
    }

    /// Generalized Laplace expansion along the first two rows.
    pub fn det(&self) -> LaurentPoly {
        let m = &self.m;
        let minor2 = |r: usize, c1: usize, c2: usize| {
            &m[r][c1] * &m[r + 1][c2] - &m[r][c2] * &m[r + 1][c1]
        };
        let mut acc = LaurentPoly::zero(self.field);
        for c1 in 0..4 {
            for c2 in c1 + 1..4 {
                let top = minor2(0, c1, c2);
                if top.is_zero() {
                    continue;
                }
                let mut rest = (0..4).filter(|c| *c != c1 && *c != c2);
                let (d1, d2) = (rest.next().unwrap(), rest.next().unwrap());
                let bottom = minor2(2, d1, d2);
                let term = &top * &bottom;
                acc = if (c1 + c2) % 2 == 1 { &acc + &term } else { &acc - &term };
            }
        }
        acc
    }

    /// Determinant of the 3×3 submatrix avoiding `row` and `col`.
    fn minor3(&self, row: usize, col: usize) -> LaurentPoly {
        let rs: Vec<usize> = (0..4).filter(|r| *r != row).collect();
        let cs: Vec<usize> = (0..4).filter(|c| *c != col).collect();
        let e = |i: usize, j: usize| &self.m[rs[i]][cs[j]];
        let mut acc = LaurentPoly::zero(self.field);
        for (j, sign) in [(0, true), (1, false), (2, true)] {
            let (k, l) = match j {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let sub = e(1, k) * e(2, l) - e(1, l) * e(2, k);
            let term = e(0, j) * &sub;
            acc = if sign { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Row `i` of the adjugate matrix.
    pub fn adjugate_row(&self, i: usize) -> [LaurentPoly; 4] {
        std::array::from_fn(|j| {
            let m = self.minor3(j, i);
            if (i + j).is_multiple_of(2) {
                m
            } else {
                -m
            }
        })
    }
}

impl Add for &Matrix4 {
    type Output = Matrix4;
    fn add(self, rhs: &Matrix4) -> Matrix4 {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: &Matrix4) -> Matrix4 {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.m {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[ {} ]", cells.join(" | "))?;
        }
        Ok(())
    }
}

/// The matrix of left multiplication by α = Ax + By + C + Dz.
pub fn eta(alpha: &AlgebraElement) -> Matrix4 {
    let c = alpha.component(Klein::E);
    let a = alpha.component(Klein::X);
    let b = alpha.component(Klein::Y);
    let d = alpha.component(Klein::Z);
    let (x, y, z) = (Klein::X, Klein::Y, Klein::Z);
    Matrix4 {
        field: alpha.field(),
        m: [
            [c.clone(), a.clone(), b.clone(), d.clone()],
            [a.conj(x).shift([1, 0, 0]), c.conj(x), d.conj(x).shift([1, 0, 0]), b.conj(x)],
            [b.conj(y).shift([0, 1, 0]), d.conj(y).shift([-1, 0, -1]), c.conj(y), a.conj(y).shift([-1, 1, -1])],
            [d.conj(z).shift([0, 0, 1]), b.conj(z).shift([0, -1, 0]), a.conj(z).shift([0, -1, 1]), c.conj(z)],
        ],
    }
}

pub fn det4(m: &Matrix4) -> LaurentPoly {
    m.det()
}

/// Outcome of the determinant test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitVerdict {
    pub is_unit: bool,
    #[serde(serialize_with = "crate::matrix_rep::ser_display")]
    pub det: LaurentPoly,
}

pub(crate) fn ser_display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// α is a unit iff det η(α) is a nonzero scalar.
pub fn is_unit(alpha: &AlgebraElement) -> UnitVerdict {
    let det = det4(&eta(alpha));
    UnitVerdict {
        is_unit: det.is_scalar(),
        det,
    }
}

/// Inverts a unit by reading the first row of η(α)⁻¹ = adj/det, then checks α·α⁻¹ = 1.
pub fn try_invert(alpha: &AlgebraElement) -> Result<AlgebraElement> {
    let m = eta(alpha);
    let det = m.det();
    let lambda = match det.as_scalar() {
        Some(s) if !s.is_zero() => s,
        _ => return Err(Error::NotAUnit { det: det.to_string() }),
    };
    let inv = lambda.inv()?;
    let [c, a, b, d] = m.adjugate_row(0).map(|p| p.scale(&inv));
    let candidate = AlgebraElement::from_components(c, a, b, d)?;
    let product = alpha.checked_mul(&candidate)?;
    if !product.is_one() {
        return Err(Error::InverseCheckFailed {
            product: product.to_string(),
        });
    }
    Ok(candidate)
}
