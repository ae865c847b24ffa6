//! Minimal consistent chains: brute force against the recursive rule, and their orbits.

use std::collections::BTreeSet;

use fours::chains::{build_vtable, chain_orbits, minimal_chains, recursive_candidates, recursive_minimal_chains};
use fours::dihedral::Letter;

fn main() -> fours::Result<()> {
    print!("{}", build_vtable(3, Letter::X)?);
    for n in 3..=5 {
        let v = build_vtable(n, Letter::X)?;
        let brute = minimal_chains(&v, n)?;
        let rec = recursive_minimal_chains(n, Letter::X)?;
        let literal = recursive_candidates(n, Letter::X)?;
        println!(
            "n={n}: {} minimal chains, recursive rule agrees: {}, literal rule gives {}",
            brute.len(),
            brute == rec,
            literal.len()
        );
        if n == 4 {
            for c in &brute {
                println!("  {c}");
            }
        }
    }
    let mut m4: BTreeSet<_> = minimal_chains(&build_vtable(4, Letter::X)?, 4)?;
    m4.extend(minimal_chains(&build_vtable(4, Letter::Y)?, 4)?);
    for (i, orbit) in chain_orbits(&m4, 4).iter().enumerate() {
        let names: Vec<String> = orbit.iter().map(|c| c.to_string()).collect();
        println!("orbit {}: {}", i + 1, names.join(" "));
    }
    Ok(())
}
