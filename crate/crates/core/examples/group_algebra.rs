//! Arithmetic in KΓ: parsing, products, the involution, automorphisms and conjugation.

use fours::coeff_ring::Field;
use fours::gamma::{GroupAutomorphism, GroupElement};
use fours::parse::{parse_element, parse_group_element};

fn main() -> fours::Result<()> {
    let q = Field::Rational;
    let alpha = parse_element("1 + x", q)?;
    let beta = parse_element("2 - a*y", q)?;
    println!("α = {alpha}");
    println!("β = {beta}");
    println!("αβ = {}", &alpha * &beta);
    println!("βα = {}", &beta * &alpha);
    println!("(αβ)* = {}", (&alpha * &beta).star());
    println!("β*α* = {}", &beta.star() * &alpha.star());

    // Defining relations: y⁻¹x²y = x⁻² and x⁻¹y²x = y⁻².
    let (x, y) = (GroupElement::x(), GroupElement::y());
    println!("y⁻¹x²y = {}, x⁻² = {}", y.inv() * x.pow(2) * y, x.pow(-2));
    println!("x⁻¹y²x = {}, y⁻² = {}", x.inv() * y.pow(2) * x, y.pow(-2));
    println!("xyxy = {}", parse_group_element("xyxy")?);

    let psi = GroupAutomorphism::psi();
    println!("ψ(α) = {}", alpha.apply_automorphism(&psi));
    println!("β^x = {}", beta.conjugate_by(&x));

    let f2 = Field::Prime(2);
    let s = parse_element("1 + x + y", f2)?;
    println!("over 𝔽₂: (1 + x + y)² = {}", s.pow(2));
    Ok(())
}
