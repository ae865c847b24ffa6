//! The 4×4 embedding η, determinants, and inversion of units.

use fours::coeff_ring::Field;
use fours::matrix_rep::{det4, eta, is_unit, try_invert};
use fours::parse::parse_element;

fn main() -> fours::Result<()> {
    let q = Field::Rational;
    let x = parse_element("x", q)?;
    println!("η(x) =\n{}", eta(&x));
    println!("det η(x) = {}\n", det4(&eta(&x)));

    for text in ["-3*a*b^-1*z", "1 + x", "1 - a*x", "x + y"] {
        let alpha = parse_element(text, q)?;
        let v = is_unit(&alpha);
        println!("{text}: det = {}, unit = {}", v.det, v.is_unit);
        if let Ok(inv) = try_invert(&alpha) {
            println!("  inverse {inv}, check {}", &alpha * &inv);
        }
    }

    // In characteristic 2 the determinant of 1 + x collapses to two terms.
    let f2 = Field::Prime(2);
    let s = parse_element("1 + x", f2)?;
    println!("\nover 𝔽₂: det η(1 + x) = {}", is_unit(&s).det);
    Ok(())
}
