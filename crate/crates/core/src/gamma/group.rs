use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::coeff_ring::{write_monomial, Exponent, Klein};

/// Products of transversal letters: `t1 · t2 = a^i b^j c^k · t3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalTable {
    entries: [[(Exponent, Klein); 4]; 4],
}

impl TransversalTable {
    /// The table derived from the defining relations with z = xy, a = x², b = y², c = z².
    pub const fn standard() -> Self {
        use Klein::*;
        TransversalTable {
            entries: [
                [([0, 0, 0], E), ([0, 0, 0], X), ([0, 0, 0], Y), ([0, 0, 0], Z)],
                [([0, 0, 0], X), ([1, 0, 0], E), ([0, 0, 0], Z), ([1, 0, 0], Y)],
                [([0, 0, 0], Y), ([-1, 1, -1], Z), ([0, 1, 0], E), ([-1, 0, -1], X)],
                [([0, 0, 0], Z), ([0, -1, 1], Y), ([0, -1, 0], X), ([0, 0, 1], E)],
            ],
        }
    }

    pub fn product(&self, t1: Klein, t2: Klein) -> (Exponent, Klein) {
        self.entries[t1.index()][t2.index()]
    }

    /// Overwrites one entry; used for fault-injection checks of the self-test.
    pub fn with_entry(mut self, t1: Klein, t2: Klein, value: (Exponent, Klein)) -> Self {
        self.entries[t1.index()][t2.index()] = value;
        self
    }
}

impl Default for TransversalTable {
    fn default() -> Self {
        Self::standard()
    }
}

pub static STANDARD_TABLE: TransversalTable = TransversalTable::standard();

/// A generator or inverse generator of Γ, for building elements from words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    X,
    XInv,
    Y,
    YInv,
}

/// Normal form a^i b^j c^k · t of an element of Γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub exp: Exponent,
    pub t: Klein,
}

impl GroupElement {
    pub const fn new(exp: Exponent, t: Klein) -> Self {
        GroupElement { exp, t }
    }

    pub const fn identity() -> Self {
        Self::new([0, 0, 0], Klein::E)
    }

    pub const fn x() -> Self {
        Self::new([0, 0, 0], Klein::X)
    }

    pub const fn y() -> Self {
        Self::new([0, 0, 0], Klein::Y)
    }

    pub const fn z() -> Self {
        Self::new([0, 0, 0], Klein::Z)
    }

    /// The element a^i b^j c^k of H.
    pub const fn h(exp: Exponent) -> Self {
        Self::new(exp, Klein::E)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn in_h(&self) -> bool {
        self.t == Klein::E
    }

    /// Membership in N = ⟨a, b⟩.
    pub fn in_n(&self) -> bool {
        self.t == Klein::E && self.exp[2] == 0
    }

    pub fn mul_with(&self, rhs: &GroupElement, table: &TransversalTable) -> GroupElement {
        let s = self.t.exponent_signs();
        let (h, t) = table.product(self.t, rhs.t);
        let mut exp = [0; 3];
        for i in 0..3 {
            exp[i] = self.exp[i] + s[i] * rhs.exp[i] + h[i];
        }
        GroupElement { exp, t }
    }

    pub fn inv_with(&self, table: &TransversalTable) -> GroupElement {
        // (h t)⁻¹ = t⁻¹ h⁻¹ with t⁻¹ = (t²)⁻¹ t.
        let (sq, _) = table.product(self.t, self.t);
        let t_inv = GroupElement::new([-sq[0], -sq[1], -sq[2]], self.t);
        let h_inv = GroupElement::h([-self.exp[0], -self.exp[1], -self.exp[2]]);
        t_inv.mul_with(&h_inv, table)
    }

    pub fn inv(&self) -> GroupElement {
        self.inv_with(&STANDARD_TABLE)
    }

    pub fn pow(&self, n: i64) -> GroupElement {
        let base = if n < 0 { self.inv() } else { *self };
        (0..n.unsigned_abs()).fold(Self::identity(), |acc, _| acc * base)
    }

    /// Left-to-right product of generators.
    pub fn from_word(letters: &[Generator]) -> GroupElement {
        letters.iter().fold(Self::identity(), |acc, g| {
            let e = match g {
                Generator::X => Self::x(),
                Generator::XInv => Self::x().inv(),
                Generator::Y => Self::y(),
                Generator::YInv => Self::y().inv(),
            };
            acc * e
        })
    }

    /// `self · g · self⁻¹`.
    pub fn conjugate(&self, g: &GroupElement) -> GroupElement {
        *self * *g * self.inv()
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        self.mul_with(&rhs, &STANDARD_TABLE)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrote = write_monomial(f, &self.exp)?;
        match (wrote, self.t) {
            (false, Klein::E) => f.write_str("1"),
            (true, Klein::E) => Ok(()),
            (true, t) => write!(f, "*{t}"),
            (false, t) => write!(f, "{t}"),
        }
    }
}
