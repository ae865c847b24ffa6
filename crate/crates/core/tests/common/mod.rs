//! Oracles that share no code with the library's multiplication, lengths or determinants.
#![allow(dead_code)]

use fours::coeff_ring::{Klein, LaurentPoly};
use fours::gamma::GroupElement;
use fours::matrix_rep::Matrix4;

/// Affine map v ↦ Av + t of ℤ³ in doubled coordinates, as a 4×4 integer matrix.
pub type Aff = [[i64; 4]; 4];

pub fn aff_mul(p: &Aff, q: &Aff) -> Aff {
    let mut r = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            r[i][j] = (0..4).map(|k| p[i][k] * q[k][j]).sum();
        }
    }
    r
}

pub fn aff_inv(p: &Aff) -> Aff {
    // Linear parts are signed permutation matrices, so A⁻¹ = Aᵀ.
    let mut r = [[0; 4]; 4];
    for i in 0..3 {
        for j in 0..3 {
            r[i][j] = p[j][i];
        }
    }
    for row in r.iter_mut().take(3) {
        row[3] = -(0..3).map(|k| row[k] * p[k][3]).sum::<i64>();
    }
    r[3][3] = 1;
    r
}

fn aff_pow(p: &Aff, n: i64) -> Aff {
    let base = if n < 0 { aff_inv(p) } else { *p };
    let mut r = ID;
    for _ in 0..n.unsigned_abs() {
        r = aff_mul(&r, &base);
    }
    r
}

const ID: Aff = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
/// x: (u, v, w) ↦ (u + ½, −v + ½, −w).
pub const X: Aff = [[1, 0, 0, 1], [0, -1, 0, 1], [0, 0, -1, 0], [0, 0, 0, 1]];
/// y: (u, v, w) ↦ (−u, v + ½, −w + ½).
pub const Y: Aff = [[-1, 0, 0, 0], [0, 1, 0, 1], [0, 0, -1, 1], [0, 0, 0, 1]];

/// The faithful action of Γ on ℝ³ as a crystallographic group, evaluated on a^i b^j c^k·t.
pub fn affine(g: &GroupElement) -> Aff {
    let a = aff_mul(&X, &X);
    let b = aff_mul(&Y, &Y);
    let xy = aff_mul(&X, &Y);
    let c = aff_mul(&xy, &xy);
    let t = match g.t {
        Klein::E => ID,
        Klein::X => X,
        Klein::Y => Y,
        Klein::Z => xy,
    };
    let [i, j, k] = g.exp;
    let h = aff_mul(&aff_mul(&aff_pow(&a, i), &aff_pow(&b, j)), &aff_pow(&c, k));
    aff_mul(&h, &t)
}

/// Length in Γ/⟨a,b⟩ ≅ D∞: spell a^i b^j c^k t in x, y (inverses map to the same letter in
/// the quotient) and cancel adjacent equal letters.
pub fn dihedral_length(g: &GroupElement) -> usize {
    let [i, j, k] = g.exp;
    let mut word = String::new();
    word.push_str(&"xx".repeat(i.unsigned_abs() as usize));
    word.push_str(&"yy".repeat(j.unsigned_abs() as usize));
    word.push_str(&if k >= 0 { "xyxy" } else { "yxyx" }.repeat(k.unsigned_abs() as usize));
    word.push_str(match g.t {
        Klein::E => "",
        Klein::X => "x",
        Klein::Y => "y",
        Klein::Z => "xy",
    });
    let mut stack = Vec::new();
    for ch in word.chars() {
        if stack.last() == Some(&ch) {
            stack.pop();
        } else {
            stack.push(ch);
        }
    }
    stack.len()
}

/// Class in Γ/H of a word in x and y.
pub fn klein_of_word(w: &str) -> Klein {
    let xs = w.chars().filter(|c| *c == 'x').count() % 2;
    let ys = w.chars().filter(|c| *c == 'y').count() % 2;
    match (xs, ys) {
        (0, 0) => Klein::E,
        (1, 0) => Klein::X,
        (0, 1) => Klein::Y,
        _ => Klein::Z,
    }
}

/// Leibniz expansion over all 24 permutations.
pub fn det_leibniz(m: &Matrix4) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(m.field());
    let mut perm = [0usize, 1, 2, 3];
    permutations(&mut perm, 0, &mut |p| {
        let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut term = LaurentPoly::one(m.field());
        for (row, col) in p.iter().enumerate() {
            term = &term * m.entry(row, *col);
        }
        acc = if inversions % 2 == 0 { &acc + &term } else { &acc - &term };
    });
    acc
}

fn permutations(p: &mut [usize; 4], k: usize, f: &mut impl FnMut(&[usize; 4])) {
    if k == 4 {
        f(p);
        return;
    }
    for i in k..4 {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}
