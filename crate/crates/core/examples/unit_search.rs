//! Bounded searches for units over 𝔽₂ using the determinant criterion.
//!
//! Usage: `cargo run --release --example unit_search [a|b|c]` (default `a`).

use std::time::Instant;

use fours::coeff_ring::Field;
use fours::dihedral::DihedralWord;
use fours::search::{unit_scan, SearchSpace};

fn main() -> fours::Result<()> {
    let f2 = Field::Prime(2);
    let which = std::env::args().nth(1).unwrap_or_else(|| "a".into());
    let space = match which.as_str() {
        "a" => SearchSpace::new(f2, vec![DihedralWord::EMPTY, "x".parse()?], (-1, 1)),
        "b" => SearchSpace::words_up_to(f2, 2, (-1, 1)).with_cap(8),
        "c" => SearchSpace::words_up_to(f2, 3, (0, 1)),
        other => return Err(fours::Error::Usage(format!("unknown scan {other:?}"))),
    };
    let start = Instant::now();
    let report = unit_scan(&space)?;
    println!(
        "basis {} | candidates {} | tested {} | filter survivors {} | units {} | nontrivial {} | {:.1?}",
        report.basis_size,
        report.candidate_count,
        report.tested,
        report.filter_survivors,
        report.units.len(),
        report.nontrivial_units.len(),
        start.elapsed()
    );
    for u in report.units.iter().take(5) {
        println!("  unit: {u}");
    }
    println!("only trivial units: {}", report.only_trivial_units());
    Ok(())
}
