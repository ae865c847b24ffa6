//! The fours group Γ = ⟨x, y | y⁻¹x²y = x⁻², x⁻¹y²x = y⁻²⟩ and its group algebra KΓ.
//!
//! Every group element has a unique normal form a^i b^j c^k · t with a = x², b = y²,
//! c = (xy)² and t ∈ {1, x, y, z = xy}. Conjugation uses the convention α^g = g α g⁻¹.

mod algebra;
mod automorphism;
mod group;

pub use algebra::AlgebraElement;
pub use automorphism::GroupAutomorphism;
pub use group::{Generator, GroupElement, TransversalTable, STANDARD_TABLE};
