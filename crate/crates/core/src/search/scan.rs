use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use super::gf::Gf;
use crate::coeff_ring::{Field, Scalar};
use crate::dihedral::{length_alg, DihedralWord, Quotient};
use crate::error::{Error, Result};
use crate::gamma::{AlgebraElement, GroupElement};
use crate::matrix_rep::{eta, is_unit, try_invert};

/// Finite family of candidates: every nonzero 𝔽_p-combination of the basis elements
/// a^i b^j·w (w a listed word, i and j in `exp_range`) with at most `support_cap` terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSpace {
    pub field: Field,
    pub words: Vec<DihedralWord>,
    pub exp_range: (i64, i64),
    pub support_cap: Option<usize>,
    pub budget: u128,
    /// Evaluation points used by the determinant filter.
    pub points: usize,
    /// Upper bound on the size of the extension field holding the points.
    pub max_field_size: u32,
    pub seed: u64,
}

impl SearchSpace {
    pub const DEFAULT_BUDGET: u128 = 1 << 30;

    pub fn new(field: Field, words: Vec<DihedralWord>, exp_range: (i64, i64)) -> Self {
        SearchSpace {
            field,
            words,
            exp_range,
            support_cap: None,
            budget: Self::DEFAULT_BUDGET,
            points: 3,
            max_field_size: 4096,
            seed: 0x5eed,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.support_cap = Some(cap);
        self
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    /// All alternating words of length at most `max_len`.
    pub fn words_up_to(field: Field, max_len: usize, exp_range: (i64, i64)) -> Self {
        Self::new(field, DihedralWord::all_up_to(max_len), exp_range)
    }

    pub fn basis(&self) -> Vec<GroupElement> {
        self.basis_with_offsets().into_iter().map(|(g, _)| g).collect()
    }

    /// Basis elements a^i b^j·w together with (i, j).
    fn basis_with_offsets(&self) -> Vec<(GroupElement, (i64, i64))> {
        let (lo, hi) = self.exp_range;
        let mut out = Vec::new();
        for w in &self.words {
            let lift = w.lift();
            for i in lo..=hi {
                for j in lo..=hi {
                    out.push((GroupElement::h([i, j, 0]) * lift, (i, j)));
                }
            }
        }
        out
    }

    fn cap(&self) -> usize {
        let b = self.basis().len();
        self.support_cap.map_or(b, |c| c.min(b))
    }

    /// Number of candidates with leading coefficient 1, before translation dedup.
    pub fn candidate_count(&self) -> u128 {
        let b = self.basis().len() as u128;
        let units = match self.field {
            Field::Prime(p) => p as u128 - 1,
            Field::Rational => return u128::MAX,
        };
        let mut total: u128 = 0;
        let mut binom: u128 = 1;
        let mut scalars: u128 = 1;
        for s in 1..=self.cap() as u128 {
            binom = binom.saturating_mul(b - s + 1) / s;
            total = total.saturating_add(binom.saturating_mul(scalars));
            scalars = scalars.saturating_mul(units);
        }
        total
    }

    fn validate(&self) -> Result<u32> {
        let p = match self.field {
            Field::Prime(p) if p < 1 << 16 => p as u32,
            Field::Prime(p) => return Err(Error::InvalidSearchSpace(format!("prime {p} is too large"))),
            Field::Rational => {
                return Err(Error::InvalidSearchSpace("search needs a finite field".into()))
            }
        };
        if self.words.is_empty() || self.exp_range.0 > self.exp_range.1 {
            return Err(Error::InvalidSearchSpace("empty word set or exponent range".into()));
        }
        if self.points == 0 {
            return Err(Error::InvalidSearchSpace("need at least one evaluation point".into()));
        }
        let mut words = self.words.clone();
        words.sort();
        words.dedup();
        if words.len() != self.words.len() {
            return Err(Error::InvalidSearchSpace("repeated word".into()));
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub basis_size: usize,
    pub candidate_count: u128,
    /// Candidates whose support is translation-normalized, i.e. actually tested.
    pub tested: u64,
    /// Candidates passing the evaluation filter.
    pub filter_survivors: u64,
    #[serde(serialize_with = "ser_elements")]
    pub units: Vec<AlgebraElement>,
    #[serde(serialize_with = "ser_elements")]
    pub nontrivial_units: Vec<AlgebraElement>,
    /// Every unit u found satisfies L(u) = L(u⁻¹) for all three quotients.
    pub length_symmetry: bool,
}

fn ser_elements<S: serde::Serializer>(v: &[AlgebraElement], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|e| e.to_string()))
}

impl ScanReport {
    pub fn only_trivial_units(&self) -> bool {
        self.nontrivial_units.is_empty() && self.units.iter().all(AlgebraElement::is_trivial_unit)
    }
}

type Mat = [[u32; 4]; 4];

/// Nonzero entries of η(g) evaluated at each point.
type Sparse = [(usize, usize, u32); 4];

struct Ctx {
    gf: Gf,
    p: u32,
    cap: usize,
    lo: i64,
    field: Field,
    basis: Vec<GroupElement>,
    exps: Vec<(i64, i64)>,
    sparse: Vec<Vec<Sparse>>,
}

#[derive(Default)]
struct TaskResult {
    tested: u64,
    survivors: u64,
    units: Vec<AlgebraElement>,
}

impl Ctx {
    fn add_scaled(&self, mats: &mut [Mat], idx: usize, lambda: u32) {
        for (m, sp) in mats.iter_mut().zip(&self.sparse) {
            for &(r, c, v) in &sp[idx] {
                m[r][c] = self.gf.add(m[r][c], self.gf.mul(lambda, v));
            }
        }
    }

    fn sub_scaled(&self, mats: &mut [Mat], idx: usize, lambda: u32) {
        for (m, sp) in mats.iter_mut().zip(&self.sparse) {
            for &(r, c, v) in &sp[idx] {
                m[r][c] = self.gf.sub(m[r][c], self.gf.mul(lambda, v));
            }
        }
    }

    fn test(&self, mats: &[Mat], chosen: &[(usize, u32)], out: &mut TaskResult) {
        out.tested += 1;
        let d0 = self.gf.det4(&mats[0]);
        if d0 == 0 || !self.gf.in_prime_field(d0) {
            return;
        }
        if mats[1..].iter().any(|m| self.gf.det4(m) != d0) {
            return;
        }
        out.survivors += 1;
        let alpha = chosen.iter().fold(AlgebraElement::zero(self.field), |acc, (i, l)| {
            acc + AlgebraElement::from_group(self.basis[*i], Scalar::from_i64(self.field, *l as i64))
        });
        if is_unit(&alpha).is_unit {
            out.units.push(alpha);
        }
    }

    fn dfs(&self, mats: &mut [Mat], chosen: &mut Vec<(usize, u32)>, mins: (i64, i64), out: &mut TaskResult) {
        if mins == (self.lo, self.lo) {
            self.test(mats, chosen, out);
        }
        if chosen.len() == self.cap {
            return;
        }
        let next = chosen.last().map_or(0, |(i, _)| i + 1);
        for idx in next..self.basis.len() {
            let m = (mins.0.min(self.exps[idx].0), mins.1.min(self.exps[idx].1));
            for lambda in 1..self.p {
                self.add_scaled(mats, idx, lambda);
                chosen.push((idx, lambda));
                self.dfs(mats, chosen, m, out);
                chosen.pop();
                self.sub_scaled(mats, idx, lambda);
            }
        }
    }
}

/// Enumerates the search space and returns every unit in it, up to left multiplication
/// by elements of N and scalars.
///
/// A candidate is a unit iff det η is a nonzero constant; that constant lies in 𝔽_p, so
/// evaluating the determinant at points of an extension field discards non-units without
/// ever discarding a unit. Survivors are decided exactly.
pub fn unit_scan(space: &SearchSpace) -> Result<ScanReport> {
    let p = space.validate()?;
    let count = space.candidate_count();
    if count > space.budget {
        return Err(Error::BudgetExceeded {
            count,
            budget: space.budget,
        });
    }
    let gf = Gf::largest(p, space.max_field_size.max(p))?;
    let mut rng = StdRng::seed_from_u64(space.seed);
    let n = gf.order() as i64 - 1;
    let points: Vec<[i64; 3]> = (0..space.points)
        .map(|_| [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)])
        .collect();
    let (basis, exps): (Vec<GroupElement>, Vec<(i64, i64)>) = space.basis_with_offsets().into_iter().unzip();
    let sparse = points
        .iter()
        .map(|logs| basis.iter().map(|g| evaluate_eta(&gf, space.field, g, logs)).collect())
        .collect();
    let ctx = Ctx {
        gf,
        p,
        cap: space.cap(),
        lo: space.exp_range.0,
        field: space.field,
        basis,
        exps,
        sparse,
    };
    let results: Vec<TaskResult> = (0..ctx.basis.len())
        .into_par_iter()
        .map(|first| {
            let mut out = TaskResult::default();
            let mut mats = vec![[[0u32; 4]; 4]; points.len()];
            ctx.add_scaled(&mut mats, first, 1);
            let mut chosen = vec![(first, 1)];
            ctx.dfs(&mut mats, &mut chosen, ctx.exps[first], &mut out);
            out
        })
        .collect();
    let mut report = ScanReport {
        basis_size: ctx.basis.len(),
        candidate_count: count,
        tested: 0,
        filter_survivors: 0,
        units: Vec::new(),
        nontrivial_units: Vec::new(),
        length_symmetry: true,
    };
    for r in results {
        report.tested += r.tested;
        report.filter_survivors += r.survivors;
        report.units.extend(r.units);
    }
    for u in &report.units {
        let inv = try_invert(u)?;
        for q in Quotient::ALL {
            if length_alg(u, q) != length_alg(&inv, q) {
                report.length_symmetry = false;
            }
        }
        if !u.is_trivial_unit() {
            report.nontrivial_units.push(u.clone());
        }
    }
    Ok(report)
}

/// η(g) at the point with discrete logs `logs` for (a, b, c).
fn evaluate_eta(gf: &Gf, field: Field, g: &GroupElement, logs: &[i64; 3]) -> Sparse {
    let m = eta(&AlgebraElement::group(field, *g));
    let mut out = [(0, 0, 0); 4];
    let mut k = 0;
    for r in 0..4 {
        for c in 0..4 {
            for (e, s) in m.entry(r, c).terms() {
                let coeff = match s {
                    Scalar::Residue { value, .. } => gf.from_int(*value as i64),
                    Scalar::Rational(_) => unreachable!("search runs over a prime field"),
                };
                let log: i64 = (0..3).map(|i| e[i] * logs[i]).sum();
                out[k] = (r, c, gf.mul(coeff, gf.gen_pow(log)));
                k += 1;
            }
        }
    }
    debug_assert_eq!(k, 4, "η of a group element is a monomial matrix");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::Prime(2)
    }

    #[test]
    fn counts() {
        let s = SearchSpace::new(f2(), vec![DihedralWord::EMPTY], (0, 0));
        assert_eq!(s.basis().len(), 1);
        assert_eq!(s.candidate_count(), 1);
        let s = SearchSpace::words_up_to(Field::Prime(3), 1, (0, 1)).with_cap(2);
        // 12 basis elements: 12 singletons, C(12,2)·2 pairs
        assert_eq!(s.candidate_count(), 12 + 66 * 2);
    }

    #[test]
    fn tiny_scan_finds_trivial_units() {
        let s = SearchSpace::new(f2(), vec![DihedralWord::EMPTY, "x".parse().unwrap()], (0, 1));
        let r = unit_scan(&s).unwrap();
        assert!(r.only_trivial_units());
        assert!(!r.units.is_empty());
        assert!(r.length_symmetry);
    }

    #[test]
    fn odd_characteristic() {
        let s = SearchSpace::words_up_to(Field::Prime(3), 1, (0, 0));
        let r = unit_scan(&s).unwrap();
        assert!(r.only_trivial_units());
        // 1 and x and y, each with leading coefficient 1
        assert_eq!(r.units.len(), 3);
    }

    #[test]
    fn budget_and_validation() {
        let s = SearchSpace::words_up_to(f2(), 3, (-1, 1)).with_budget(1000);
        assert!(matches!(unit_scan(&s), Err(Error::BudgetExceeded { .. })));
        let q = SearchSpace::words_up_to(Field::Rational, 1, (0, 0));
        assert!(matches!(unit_scan(&q), Err(Error::InvalidSearchSpace(_))));
    }
}
