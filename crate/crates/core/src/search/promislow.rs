use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::coeff_ring::{Exponent, Klein};
use crate::dihedral::{length, Quotient};
use crate::gamma::{GroupAutomorphism, GroupElement};

fn coset(exps: &[Exponent], t: Klein) -> impl Iterator<Item = GroupElement> + '_ {
    exps.iter().map(move |e| GroupElement::new(*e, t))
}

/// 𝒜 = {1, a⁻¹, a⁻¹b, b, a⁻¹c⁻¹, c}.
pub const SET_A: [Exponent; 6] = [[0, 0, 0], [-1, 0, 0], [-1, 1, 0], [0, 1, 0], [-1, 0, -1], [0, 0, 1]];
/// ℬ = {1, a, b⁻¹, b⁻¹c, c, ab⁻¹c}.
pub const SET_B: [Exponent; 6] = [[0, 0, 0], [1, 0, 0], [0, -1, 0], [0, -1, 1], [0, 0, 1], [1, -1, 1]];
/// 𝒞 = {c, c⁻¹}.
pub const SET_C: [Exponent; 2] = [[0, 0, 1], [0, 0, -1]];
/// ℬ′ = {1, c, b⁻¹, b⁻¹a, a, cb⁻¹a}.
pub const SET_B_PRIME: [Exponent; 6] = [[0, 0, 0], [0, 0, 1], [0, -1, 0], [1, -1, 0], [1, 0, 0], [1, -1, 1]];
/// 𝒞′ = {a, a⁻¹}.
pub const SET_C_PRIME: [Exponent; 2] = [[1, 0, 0], [-1, 0, 0]];
/// 𝒟′ = {1, c⁻¹, c⁻¹b, b, c⁻¹a⁻¹, a}.
pub const SET_D_PRIME: [Exponent; 6] = [[0, 0, 0], [0, 0, -1], [0, 1, -1], [0, 1, 0], [-1, 0, -1], [1, 0, 0]];

/// The Promislow set 𝒫 = 𝒜x ∪ ℬy ∪ 𝒞.
pub fn promislow_set() -> BTreeSet<GroupElement> {
    coset(&SET_A, Klein::X)
        .chain(coset(&SET_B, Klein::Y))
        .chain(coset(&SET_C, Klein::E))
        .collect()
}

/// 𝒫′ = ℬ′y ∪ 𝒞′ ∪ 𝒟′xy as listed, independently of ψ.
pub fn expected_image() -> BTreeSet<GroupElement> {
    coset(&SET_B_PRIME, Klein::Y)
        .chain(coset(&SET_C_PRIME, Klein::E))
        .chain(coset(&SET_D_PRIME, Klein::Z))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PromislowEntry {
    pub element: GroupElement,
    pub image: GroupElement,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PromislowReport {
    pub entries: Vec<PromislowEntry>,
    /// ψ(𝒫) equals ℬ′y ∪ 𝒞′ ∪ 𝒟′xy.
    pub image_matches: bool,
    pub max_length: usize,
    /// The images of length 3: exactly those of the form n·c·y with n ∈ N.
    pub length_three_are_cy: bool,
    /// Every image of length above 2 involves c.
    pub others_at_most_two: bool,
}

impl PromislowReport {
    pub fn passed(&self) -> bool {
        self.image_matches && self.max_length == 3 && self.length_three_are_cy && self.others_at_most_two
    }
}

/// Applies ψ = (x ↦ xy, y ↦ y) to 𝒫 and records N₁-lengths of the images.
pub fn promislow_check() -> PromislowReport {
    let psi = GroupAutomorphism::psi();
    let entries: Vec<PromislowEntry> = promislow_set()
        .into_iter()
        .map(|g| {
            let image = psi.apply(&g);
            PromislowEntry {
                element: g,
                image,
                length: length(&image, Quotient::N1),
            }
        })
        .collect();
    let image: BTreeSet<GroupElement> = entries.iter().map(|e| e.image).collect();
    let max_length = entries.iter().map(|e| e.length).max().unwrap_or(0);
    let is_cy = |g: &GroupElement| g.t == Klein::Y && g.exp[2] == 1;
    let length_three_are_cy = entries.iter().all(|e| (e.length == 3) == is_cy(&e.image));
    let others_at_most_two = entries
        .iter()
        .all(|e| e.image.exp[2] != 0 || e.length <= 2);
    PromislowReport {
        entries,
        image_matches: image == expected_image(),
        max_length,
        length_three_are_cy,
        others_at_most_two,
    }
}

/// A product g = xy with a unique representation, if one exists; ties broken by the
/// smallest g.
pub fn unique_product_check(
    xs: &BTreeSet<GroupElement>,
    ys: &BTreeSet<GroupElement>,
) -> Option<(GroupElement, GroupElement, GroupElement)> {
    let mut counts: BTreeMap<GroupElement, (usize, GroupElement, GroupElement)> = BTreeMap::new();
    for x in xs {
        for y in ys {
            counts
                .entry(*x * *y)
                .and_modify(|e| e.0 += 1)
                .or_insert((1, *x, *y));
        }
    }
    counts
        .into_iter()
        .find(|(_, (n, _, _))| *n == 1)
        .map(|(g, (_, x, y))| (x, y, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_has_fourteen_elements() {
        let p = promislow_set();
        assert_eq!(p.len(), 14);
        assert!(p.contains(&GroupElement::h([0, 0, 1])));
        assert!(p.contains(&GroupElement::h([0, 0, -1])));
        assert!(p.contains(&GroupElement::new([-1, 0, -1], Klein::X)));
    }

    #[test]
    fn check_passes() {
        let r = promislow_check();
        assert!(r.image_matches);
        assert_eq!(r.max_length, 3);
        assert!(r.passed());
    }

    #[test]
    fn unique_products() {
        let p = promislow_set();
        assert_eq!(unique_product_check(&p, &p), None);
        let g = BTreeSet::from([GroupElement::x()]);
        let h = BTreeSet::from([GroupElement::y()]);
        assert_eq!(unique_product_check(&g, &h), Some((GroupElement::x(), GroupElement::y(), GroupElement::z())));
        let xs = BTreeSet::from([GroupElement::identity(), GroupElement::x()]);
        let ys = BTreeSet::from([GroupElement::identity(), GroupElement::y()]);
        assert!(unique_product_check(&xs, &ys).is_some());
    }
}
