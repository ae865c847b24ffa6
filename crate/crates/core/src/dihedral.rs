//! Projection of Γ onto Γ/N ≅ D∞, alternating-word transversals and the length function.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::coeff_ring::Klein;
use crate::error::{Error, Result};
use crate::gamma::{AlgebraElement, GroupAutomorphism, GroupElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn other(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn klein(self) -> Klein {
        match self {
            Letter::X => Klein::X,
            Letter::Y => Klein::Y,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" => Ok(Letter::X),
            "y" => Ok(Letter::Y),
            _ => Err(Error::Usage(format!("expected x or y, got {s:?}"))),
        }
    }
}

/// A reduced word in D∞ = ⟨x, y | x², y²⟩: the alternating word of length `len`
/// starting with `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DihedralWord {
    start: Option<Letter>,
    len: usize,
}

impl DihedralWord {
    pub const EMPTY: DihedralWord = DihedralWord { start: None, len: 0 };

    pub fn new(start: Letter, len: usize) -> Self {
        if len == 0 {
            Self::EMPTY
        } else {
            DihedralWord {
                start: Some(start),
                len,
            }
        }
    }

    /// Free reduction of an arbitrary letter sequence, cancelling xx and yy.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last() == Some(&l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        match stack.first() {
            Some(&s) => Self::new(s, stack.len()),
            None => Self::EMPTY,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn start(&self) -> Option<Letter> {
        self.start
    }

    pub fn end(&self) -> Option<Letter> {
        self.start
            .map(|s| if self.len % 2 == 1 { s } else { s.other() })
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        let (start, len) = (self.start, self.len);
        (0..len).map(move |i| {
            let s = start.expect("nonempty word has a start");
            if i % 2 == 0 {
                s
            } else {
                s.other()
            }
        })
    }

    /// Product in D∞.
    pub fn concat(&self, other: &DihedralWord) -> DihedralWord {
        Self::reduce(self.letters().chain(other.letters()))
    }

    pub fn reverse(&self) -> DihedralWord {
        match self.end() {
            Some(e) => Self::new(e, self.len),
            None => Self::EMPTY,
        }
    }

    /// Image in Γ/H, the Klein four group.
    pub fn klein(&self) -> Klein {
        self.letters().fold(Klein::E, |acc, l| acc * l.klein())
    }

    /// The element of Γ spelled by the word in x and y.
    pub fn lift(&self) -> GroupElement {
        self.letters().fold(GroupElement::identity(), |acc, l| {
            acc * match l {
                Letter::X => GroupElement::x(),
                Letter::Y => GroupElement::y(),
            }
        })
    }

    /// All alternating words of length at most `max_len`, shortest first.
    pub fn all_up_to(max_len: usize) -> Vec<DihedralWord> {
        let mut out = vec![Self::EMPTY];
        for len in 1..=max_len {
            out.push(Self::new(Letter::X, len));
            out.push(Self::new(Letter::Y, len));
        }
        out
    }
}

impl PartialOrd for DihedralWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortlex with x before y.
impl Ord for DihedralWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len, self.start).cmp(&(other.len, other.start))
    }
}

impl fmt::Display for DihedralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for DihedralWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Self::EMPTY);
        }
        let mut letters = Vec::new();
        for (pos, ch) in s.char_indices() {
            match ch {
                'x' => letters.push(Letter::X),
                'y' => letters.push(Letter::Y),
                _ => {
                    return Err(Error::UnknownSymbol {
                        pos,
                        symbol: ch,
                    })
                }
            }
        }
        Ok(Self::reduce(letters))
    }
}

/// One of the three normal subgroups N₁ = ⟨a,b⟩, N₂ = ⟨a,c⟩, N₃ = ⟨b,c⟩ with
/// infinite dihedral quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Quotient {
    #[default]
    N1,
    N2,
    N3,
}

impl Quotient {
    pub const ALL: [Quotient; 3] = [Quotient::N1, Quotient::N2, Quotient::N3];

    fn maps(self) -> &'static (GroupAutomorphism, GroupAutomorphism) {
        static MAPS: OnceLock<[(GroupAutomorphism, GroupAutomorphism); 3]> = OnceLock::new();
        let maps = MAPS.get_or_init(|| {
            let (x, y, z) = (GroupElement::x(), GroupElement::y(), GroupElement::z());
            let auto = |u, v| GroupAutomorphism::new(u, v).expect("valid generator pair");
            [
                (GroupAutomorphism::identity(), GroupAutomorphism::identity()),
                // x ↦ x, y ↦ xy; inverse y ↦ x⁻¹y
                (auto(x, z), auto(x, x.inv() * y)),
                // x ↦ xy, y ↦ y; inverse x ↦ xy⁻¹
                (auto(z, y), auto(x * y.inv(), y)),
            ]
        });
        &maps[self.index()]
    }

    /// The automorphism carrying N₁ onto this subgroup; its images of x and y are
    /// the generator pair spelling the transversal words.
    pub fn transport(self) -> &'static GroupAutomorphism {
        &self.maps().0
    }

    fn transport_inv(self) -> &'static GroupAutomorphism {
        &self.maps().1
    }

    pub fn index(self) -> usize {
        match self {
            Quotient::N1 => 0,
            Quotient::N2 => 1,
            Quotient::N3 => 2,
        }
    }

    /// Membership of `g` in this normal subgroup.
    pub fn contains(self, g: &GroupElement) -> bool {
        g.t == Klein::E
            && match self {
                Quotient::N1 => g.exp[2] == 0,
                Quotient::N2 => g.exp[1] == 0,
                Quotient::N3 => g.exp[0] == 0,
            }
    }
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index() + 1)
    }
}

impl FromStr for Quotient {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "N1" => Ok(Quotient::N1),
            "2" | "N2" => Ok(Quotient::N2),
            "3" | "N3" => Ok(Quotient::N3),
            other => Err(Error::Usage(format!("quotient must be 1, 2 or 3, got {other:?}"))),
        }
    }
}

/// Length of an algebra element: −∞ for zero, otherwise a word length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Length {
    NegInf,
    Finite(usize),
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::NegInf => f.write_str("-inf"),
            Length::Finite(n) => write!(f, "{n}"),
        }
    }
}

/// The N₁-transversal word of c^k·t.
fn project_n1(k: i64, t: Klein) -> DihedralWord {
    let m = 4 * k.unsigned_abs() as usize;
    let (len, start) = match t {
        Klein::E => (m, if k > 0 { Letter::X } else { Letter::Y }),
        Klein::X if k >= 0 => (m + 1, Letter::X),
        Klein::X => (m - 1, Letter::Y),
        Klein::Y if k > 0 => (m - 1, Letter::X),
        Klein::Y => (m + 1, Letter::Y),
        Klein::Z if k >= 0 => (m + 2, Letter::X),
        Klein::Z => (m - 2, Letter::Y),
    };
    DihedralWord::new(start, len)
}

/// The transversal word w with g ∈ N_q·w, read in the generator pair of `q`.
pub fn project(g: &GroupElement, q: Quotient) -> DihedralWord {
    let h = q.transport_inv().apply(g);
    project_n1(h.exp[2], h.t)
}

pub fn length(g: &GroupElement, q: Quotient) -> usize {
    project(g, q).len()
}

/// Maximum length over the support; −∞ for zero.
pub fn length_alg(alpha: &AlgebraElement, q: Quotient) -> Length {
    alpha
        .terms()
        .map(|(g, _)| Length::Finite(length(&g, q)))
        .max()
        .unwrap_or(Length::NegInf)
}

/// The element of Γ spelled by `w` in the generator pair of `q`.
pub fn lift(w: &DihedralWord, q: Quotient) -> GroupElement {
    q.transport().apply(&w.lift())
}

/// Writes g = n·w with n ∈ N_q and w a transversal word.
pub fn decompose(g: &GroupElement, q: Quotient) -> (GroupElement, DihedralWord) {
    let w = project(g, q);
    let n = *g * lift(&w, q).inv();
    debug_assert!(q.contains(&n));
    (n, w)
}

pub fn starts_ends(w: &DihedralWord) -> (Option<Letter>, Option<Letter>) {
    (w.start(), w.end())
}

/// No cancellation occurs in the product w1·w2.
pub fn non_overlapping(w1: &DihedralWord, w2: &DihedralWord) -> bool {
    match (w1.end(), w2.start()) {
        (Some(e), Some(s)) => e != s,
        _ => true,
    }
}
