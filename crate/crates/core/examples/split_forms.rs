//! Products of linear factors α + βγ, their word coefficients, and the partner identity.

use fours::coeff_ring::{Field, LaurentPoly};
use fours::matrix_rep::{det4, eta};
use fours::parse::{parse_factors, parse_poly};
use fours::splitting::{coeff_gcd, coefficient_table, det_linear, expand, partner, symmetrized_product, SplitForm};

fn main() -> fours::Result<()> {
    let q = Field::Rational;
    let form = SplitForm::new(parse_factors("(1; 1; x) (1; 1-a; y) (1; -a; x)", q)?)?;
    let product = expand(&form);
    println!("(1 + x)(1 + (1 - a)y)(1 - ax) = {product}");
    let mut table: Vec<_> = coefficient_table(&form).into_iter().collect();
    table.sort_by(|(u, _), (v, _)| v.cmp(u));
    for (w, c) in table {
        println!("  {w:>4}: {c}");
    }
    println!("gcd of coefficients: {}", coeff_gcd(&product)?);

    let f = &form.factors()[1];
    let (d1, d2) = det_linear(f);
    println!("\nfactor {}: det = ({d1})·({d2})", f.to_algebra());
    println!("  det4∘η agrees: {}", &d1 * &d2 == det4(&eta(&f.to_algebra())));
    let g = partner(f);
    println!("  partner {} with product {}", g.to_algebra(), &f.to_algebra() * &g.to_algebra());

    let nu = parse_poly("1 + a - 2*b*c", q)?;
    let s = symmetrized_product(&nu);
    println!("\nν = {nu}\nν·ν^x·ν^y·ν^z = {s}");
    println!("symmetrized product of a: {}", symmetrized_product(&LaurentPoly::var(q, fours::coeff_ring::Var::A)));
    Ok(())
}
