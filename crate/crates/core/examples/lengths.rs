//! Dihedral lengths and N_i-decompositions of group and algebra elements.

use fours::coeff_ring::Field;
use fours::dihedral::{decompose, length, length_alg, Quotient};
use fours::parse::{parse_element, parse_group_element};

fn main() -> fours::Result<()> {
    for text in ["1", "x", "xy", "c*y", "a^-1*c^2*z", "xyxyx"] {
        let g = parse_group_element(text)?;
        let row: Vec<String> = Quotient::ALL
            .iter()
            .map(|q| {
                let (n, w) = decompose(&g, *q);
                format!("N{q}: {n} | {w} (L = {})", length(&g, *q))
            })
            .collect();
        println!("{:<14} {}", g.to_string(), row.join("   "));
    }

    let alpha = parse_element("1 + a*xyx - 2*b*y", Field::Rational)?;
    println!("\nα = {alpha}");
    for q in Quotient::ALL {
        println!("  L_N{q}(α) = {}, L_N{q}(α*) = {}", length_alg(&alpha, q), length_alg(&alpha.star(), q));
    }
    println!("  L(0) = {}", length_alg(&parse_element("0", Field::Rational)?, Quotient::N1));
    Ok(())
}
