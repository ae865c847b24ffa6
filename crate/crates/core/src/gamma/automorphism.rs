use std::fmt;

use super::GroupElement;
use crate::coeff_ring::{Exponent, Klein};
use crate::error::{Error, Result};

/// An automorphism of Γ given by the images of x and y.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupAutomorphism {
    x_image: GroupElement,
    y_image: GroupElement,
    // images of a, b, c; all lie in H
    h_images: [Exponent; 3],
}

impl GroupAutomorphism {
    /// Validates that the images satisfy both defining relations and induce
    /// bijections on H ≅ ℤ³ and on Γ/H.
    pub fn new(x_image: GroupElement, y_image: GroupElement) -> Result<Self> {
        let (u, v) = (x_image, y_image);
        let u2 = u * u;
        let v2 = v * v;
        let relations = v.inv() * u2 * v == u2.inv() && u.inv() * v2 * u == v2.inv();
        let w = u * v;
        let images = [u2.exp, v2.exp, (w * w).exp];
        let klein_ok = u.t != Klein::E && v.t != Klein::E && u.t != v.t;
        if !relations || !klein_ok || det3(&images).abs() != 1 {
            return Err(Error::InvalidAutomorphism {
                x: u.to_string(),
                y: v.to_string(),
            });
        }
        Ok(GroupAutomorphism {
            x_image,
            y_image,
            h_images: images,
        })
    }

    pub fn identity() -> Self {
        Self::new(GroupElement::x(), GroupElement::y()).unwrap()
    }

    /// φ: x ↦ y, y ↦ x.
    pub fn swap_xy() -> Self {
        Self::new(GroupElement::y(), GroupElement::x()).unwrap()
    }

    /// ψ: x ↦ xy, y ↦ y; swaps a and c, fixes b.
    pub fn psi() -> Self {
        Self::new(GroupElement::z(), GroupElement::y()).unwrap()
    }

    /// Conjugation by `g`: h ↦ g h g⁻¹.
    pub fn inner(g: GroupElement) -> Self {
        Self::new(g.conjugate(&GroupElement::x()), g.conjugate(&GroupElement::y())).unwrap()
    }

    pub fn x_image(&self) -> GroupElement {
        self.x_image
    }

    pub fn y_image(&self) -> GroupElement {
        self.y_image
    }

    pub fn apply(&self, g: &GroupElement) -> GroupElement {
        let mut exp = [0; 3];
        for (slot, image) in self.h_images.iter().enumerate() {
            for i in 0..3 {
                exp[i] += g.exp[slot] * image[i];
            }
        }
        let t = match g.t {
            Klein::E => GroupElement::identity(),
            Klein::X => self.x_image,
            Klein::Y => self.y_image,
            Klein::Z => self.x_image * self.y_image,
        };
        GroupElement::h(exp) * t
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        Self::new(self.apply(&other.x_image), self.apply(&other.y_image))
            .expect("composition of automorphisms")
    }
}

impl fmt::Display for GroupAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x ↦ {}, y ↦ {})", self.x_image, self.y_image)
    }
}

fn det3(m: &[Exponent; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_swaps_a_and_c() {
        let psi = GroupAutomorphism::psi();
        assert_eq!(psi.apply(&GroupElement::h([1, 0, 0])), GroupElement::h([0, 0, 1]));
        assert_eq!(psi.apply(&GroupElement::h([0, 0, 1])), GroupElement::h([1, 0, 0]));
        assert_eq!(psi.apply(&GroupElement::h([0, 1, 0])), GroupElement::h([0, 1, 0]));
    }

    #[test]
    fn swap_sends_a_to_b() {
        let phi = GroupAutomorphism::swap_xy();
        assert_eq!(phi.apply(&GroupElement::h([1, 0, 0])), GroupElement::h([0, 1, 0]));
    }

    #[test]
    fn any_ordered_pair_of_distinct_letters_works() {
        let letters = [GroupElement::x(), GroupElement::y(), GroupElement::z()];
        for u in letters {
            for v in letters {
                assert_eq!(GroupAutomorphism::new(u, v).is_ok(), u != v);
            }
        }
    }

    #[test]
    fn apply_is_a_homomorphism() {
        let phis = [
            GroupAutomorphism::psi(),
            GroupAutomorphism::swap_xy(),
            GroupAutomorphism::inner(GroupElement::new([1, -2, 1], Klein::Y)),
        ];
        let gs = [
            GroupElement::new([1, 2, -1], Klein::X),
            GroupElement::new([0, -1, 3], Klein::Z),
            GroupElement::new([-2, 0, 1], Klein::Y),
        ];
        for phi in phis {
            for g in gs {
                for h in gs {
                    assert_eq!(phi.apply(&(g * h)), phi.apply(&g) * phi.apply(&h));
                }
            }
        }
    }

    #[test]
    fn inner_matches_conjugation() {
        let g = GroupElement::new([2, 1, -1], Klein::Z);
        let cg = GroupAutomorphism::inner(g);
        let h = GroupElement::new([1, -3, 2], Klein::X);
        assert_eq!(cg.apply(&h), g.conjugate(&h));
    }

    #[test]
    fn rejects_bad_images() {
        assert!(GroupAutomorphism::new(GroupElement::x(), GroupElement::x()).is_err());
        assert!(GroupAutomorphism::new(GroupElement::x(), GroupElement::identity()).is_err());
        // (a·x, y) satisfies the relations but sends a ↦ a³, so it is not onto.
        assert!(GroupAutomorphism::new(GroupElement::new([1, 0, 0], Klein::X), GroupElement::y()).is_err());
    }
}
