use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

/// An element of Γ/H ≅ C₂ × C₂, identified with its coset representative 1, x, y or z = xy.
///
/// Doubles as the transversal letter of a group element's normal form and as the
/// conjugation label on coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Klein {
    E,
    X,
    Y,
    Z,
}

impl Klein {
    pub const ALL: [Klein; 4] = [Klein::E, Klein::X, Klein::Y, Klein::Z];

    fn bits(self) -> u8 {
        match self {
            Klein::E => 0b00,
            Klein::X => 0b01,
            Klein::Y => 0b10,
            Klein::Z => 0b11,
        }
    }

    fn from_bits(bits: u8) -> Self {
        match bits & 0b11 {
            0b00 => Klein::E,
            0b01 => Klein::X,
            0b10 => Klein::Y,
            _ => Klein::Z,
        }
    }

    /// Position in the basis order (1, x, y, z) used by η.
    pub fn index(self) -> usize {
        self.bits() as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::from_bits(i as u8)
    }

    /// Sign pattern of the conjugation action on exponents of (a, b, c).
    ///
    /// x: (i,j,k) ↦ (i,−j,−k); y: (−i,j,−k); z: (−i,−j,k).
    pub fn exponent_signs(self) -> [i64; 3] {
        match self {
            Klein::E => [1, 1, 1],
            Klein::X => [1, -1, -1],
            Klein::Y => [-1, 1, -1],
            Klein::Z => [-1, -1, 1],
        }
    }

    /// The automorphism of C₂×C₂ swapping x and y.
    pub fn swap_xy(self) -> Self {
        match self {
            Klein::X => Klein::Y,
            Klein::Y => Klein::X,
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Klein::E => "1",
            Klein::X => "x",
            Klein::Y => "y",
            Klein::Z => "z",
        }
    }
}

impl Mul for Klein {
    type Output = Klein;
    // The group is (ℤ/2)², so multiplication is XOR of the bit pairs.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Klein) -> Klein {
        Klein::from_bits(self.bits() ^ rhs.bits())
    }
}

impl fmt::Display for Klein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
