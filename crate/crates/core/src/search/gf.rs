//! Small finite fields GF(p^k) with log/exp tables, used to evaluate determinants at points.

use crate::error::{Error, Result};

/// GF(q), q = p^k. Elements are encoded as integers in base p (the coefficient vector of a
/// polynomial over 𝔽_p), so the prime subfield is {0, …, p − 1}.
#[derive(Debug, Clone)]
pub struct Gf {
    p: u32,
    k: u32,
    q: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Gf {
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !crate::coeff_ring::is_prime(p as u64) || k == 0 {
            return Err(Error::InvalidSearchSpace(format!("GF({p}^{k}) is not a field size")));
        }
        let q = p
            .checked_pow(k)
            .filter(|q| *q <= 1 << 16)
            .ok_or_else(|| Error::InvalidSearchSpace(format!("GF({p}^{k}) is too large")))?;
        let digits = |mut v: u32| -> Vec<u32> {
            (0..k)
                .map(|_| {
                    let d = v % p;
                    v /= p;
                    d
                })
                .collect()
        };
        // Monic f = X^k + low; find one for which X generates the multiplicative group.
        for low in 0..q {
            let f = digits(low);
            if f[0] == 0 {
                continue;
            }
            let mut exp = Vec::with_capacity(q as usize);
            let mut cur = 1u32;
            let mut ok = true;
            for i in 0..q - 1 {
                if i > 0 && cur == 1 {
                    ok = false;
                    break;
                }
                exp.push(cur);
                cur = times_x(cur, &f, p, k);
            }
            if ok && cur == 1 {
                let mut log = vec![0; q as usize];
                for (i, v) in exp.iter().enumerate() {
                    log[*v as usize] = i as u32;
                }
                return Ok(Gf { p, k, q, exp, log });
            }
        }
        Err(Error::InvalidSearchSpace(format!("no primitive polynomial for GF({p}^{k})")))
    }

    /// The largest field of characteristic p with at most `max_q` elements.
    pub fn largest(p: u32, max_q: u32) -> Result<Self> {
        let mut k = 1;
        while (p as u64).pow(k + 1) <= max_q as u64 {
            k += 1;
        }
        Self::new(p, k)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn in_prime_field(&self, v: u32) -> bool {
        v < self.p
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        self.digitwise(a, b, |x, y| (x + self.p - y) % self.p)
    }

    fn digitwise(&self, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.k {
            out += op(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(s % (self.q - 1)) as usize]
    }

    /// g^e for the primitive element g.
    pub fn gen_pow(&self, e: i64) -> u32 {
        self.exp[e.rem_euclid(self.q as i64 - 1) as usize]
    }

    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// 4×4 determinant by Laplace expansion along the first two rows.
    pub fn det4(&self, m: &[[u32; 4]; 4]) -> u32 {
        let minor = |r: usize, c1: usize, c2: usize| {
            self.sub(self.mul(m[r][c1], m[r + 1][c2]), self.mul(m[r][c2], m[r + 1][c1]))
        };
        const PAIRS: [(usize, usize, usize, usize); 6] =
            [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2), (1, 2, 0, 3), (1, 3, 0, 2), (2, 3, 0, 1)];
        let mut acc = 0;
        for (c1, c2, d1, d2) in PAIRS {
            let t = self.mul(minor(0, c1, c2), minor(2, d1, d2));
            acc = if (c1 + c2) % 2 == 1 { self.add(acc, t) } else { self.sub(acc, t) };
        }
        acc
    }
}

/// Multiplies the residue `v` by X modulo X^k + low.
fn times_x(v: u32, low: &[u32], p: u32, k: u32) -> u32 {
    let mut d: Vec<u32> = (0..k).map(|i| v / p.pow(i) % p).collect();
    let top = d[k as usize - 1];
    for i in (1..k as usize).rev() {
        d[i] = d[i - 1];
    }
    d[0] = 0;
    for i in 0..k as usize {
        d[i] = (d[i] + (p - low[i]) * top) % p;
    }
    d.iter().rev().fold(0, |acc, x| acc * p + x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for (p, k) in [(2, 1), (2, 4), (3, 2), (5, 1), (7, 2)] {
            let f = Gf::new(p, k).unwrap();
            let q = f.order();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.sub(0, a)), 0);
                if a != 0 {
                    let inv = f.gen_pow(-(f.log(a).unwrap() as i64));
                    assert_eq!(f.mul(a, inv), 1);
                }
                for b in 0..q {
                    for c in [0, 1, q - 1] {
                        let lhs = f.mul(a, f.add(b, c));
                        assert_eq!(lhs, f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn det_of_permutation() {
        let f = Gf::new(3, 1).unwrap();
        let m = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        assert_eq!(f.det4(&m), 2);
        let id = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        assert_eq!(f.det4(&id), 1);
    }

    #[test]
    fn largest_fits() {
        assert_eq!(Gf::largest(2, 4096).unwrap().order(), 4096);
        assert_eq!(Gf::largest(3, 4096).unwrap().order(), 2187);
        assert!(Gf::new(4, 1).is_err());
    }
}
