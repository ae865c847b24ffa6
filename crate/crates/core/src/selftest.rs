//! Golden checks against known values, runnable from the command line.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use crate::chains::{build_vtable, minimal_chains, Chain, Token};
use crate::coeff_ring::{Field, LaurentPoly};
use crate::dihedral::Letter;
use crate::gamma::{AlgebraElement, GroupElement, TransversalTable, STANDARD_TABLE};
use crate::matrix_rep::{det4, eta, is_unit};
use crate::parse::parse_element;
use crate::random::RandomSpec;
use crate::search::{promislow_check, promislow_set, unique_product_check};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestItem {
    pub name: String,
    pub field: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub items: Vec<SelftestItem>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn item(&self, name: &str, field: Field) -> Option<&SelftestItem> {
        let f = field.to_string();
        self.items.iter().find(|i| i.name == name && i.field == f)
    }
}

pub const EXAMPLE_FACTORS: [&str; 3] = ["1 + x", "1 + (1 - a)*y", "1 - a*x"];
/// The expansion of the three factors. The constant term is 1·1 + x·(−ax) = 1 − a².
pub const EXAMPLE_PRODUCT: &str = "(a - 1)*(a^-1*xyx + a^-1*yx - xy - y - x - (1 + a))";

pub fn selftest() -> SelftestReport {
    selftest_with(&STANDARD_TABLE)
}

/// Runs the golden suite with group multiplication taken from `table`.
pub fn selftest_with(table: &TransversalTable) -> SelftestReport {
    let mut items = Vec::new();
    for field in [Field::Rational, Field::Prime(2)] {
        let mut push = |name: &str, passed: bool, detail: String| {
            items.push(SelftestItem {
                name: name.into(),
                field: field.to_string(),
                passed,
                detail,
            })
        };
        let (ok, detail) = eta_multiplicative(field, table);
        push("eta-multiplicative", ok, detail);
        let x = AlgebraElement::group(field, GroupElement::x());
        let m = eta(&x);
        let mono = |e| LaurentPoly::unit_monomial(field, e);
        let ok = *m.entry(0, 1) == LaurentPoly::one(field)
            && *m.entry(1, 0) == mono([1, 0, 0])
            && *m.entry(2, 3) == mono([-1, 1, -1])
            && *m.entry(3, 2) == mono([0, -1, 1])
            && det4(&m) == LaurentPoly::one(field);
        push("eta-of-x", ok, format!("det = {}", det4(&m)));
        let (ok, detail) = example_expansion(field, table);
        push("example-expansion", ok, detail);
        let p = AlgebraElement::sum_of(field, &promislow_set());
        let verdict = is_unit(&p);
        push(
            "promislow-sum-not-unit",
            !verdict.is_unit,
            format!("det has {} terms", verdict.det.num_terms()),
        );
    }
    let r = promislow_check();
    items.push(SelftestItem {
        name: "promislow-lengths".into(),
        field: "-".into(),
        passed: r.passed(),
        detail: format!("max length {}", r.max_length),
    });
    let p = promislow_set();
    let none = unique_product_check(&p, &p).is_none();
    items.push(SelftestItem {
        name: "promislow-no-unique-product".into(),
        field: "-".into(),
        passed: none,
        detail: format!("{} products", p.len() * p.len()),
    });
    let (ok, detail) = table_rows();
    items.push(SelftestItem {
        name: "vtable-n3".into(),
        field: "-".into(),
        passed: ok,
        detail,
    });
    let (ok, detail) = chain_lists();
    items.push(SelftestItem {
        name: "minimal-chains-n3-n4".into(),
        field: "-".into(),
        passed: ok,
        detail,
    });
    SelftestReport { items }
}

fn eta_multiplicative(field: Field, table: &TransversalTable) -> (bool, String) {
    let spec = RandomSpec::new(field, 2, 2);
    let mut rng = StdRng::seed_from_u64(7);
    for k in 0..20 {
        let a = spec.algebra(&mut rng);
        let b = spec.algebra(&mut rng);
        let ab = a.mul_with(&b, table).expect("same field");
        if eta(&ab) != &eta(&a) * &eta(&b) {
            return (false, format!("pair {k}: η(αβ) ≠ η(α)η(β) for α = {a}, β = {b}"));
        }
    }
    (true, "20 random pairs".into())
}

fn example_expansion(field: Field, table: &TransversalTable) -> (bool, String) {
    let factors: Vec<AlgebraElement> = EXAMPLE_FACTORS
        .iter()
        .map(|s| parse_element(s, field).expect("valid literal"))
        .collect();
    let product = factors
        .iter()
        .skip(1)
        .fold(factors[0].clone(), |acc, f| acc.mul_with(f, table).expect("same field"));
    let expected = parse_element(EXAMPLE_PRODUCT, field).expect("valid literal");
    let not_unit = !is_unit(&product).is_unit;
    (product == expected && not_unit, format!("{product}"))
}

fn table_rows() -> (bool, String) {
    let v = build_vtable(3, Letter::X).expect("n = 3");
    let t = |s: &str| s.parse::<Token>().expect("valid token");
    let rows: [(&str, &[&[&str]]); 6] = [
        ("xyx", &[&["b3", "b2^x", "b1^z"]]),
        ("yx", &[&["a3", "b2", "b1^y"]]),
        ("xy", &[&["b3", "b2^x", "a1^z"]]),
        ("y", &[&["a3", "b2", "a1^y"]]),
        ("x", &[&["a3", "a2", "b1"], &["b3", "a2^x", "a1^x"]]),
        ("1", &[&["a3", "a2", "a1"], &["b3", "a2^x", "b1^x"]]),
    ];
    for (word, monos) in rows {
        let expected: BTreeSet<Vec<Token>> = monos.iter().map(|m| m.iter().map(|s| t(s)).collect()).collect();
        let got: BTreeSet<Vec<Token>> = v
            .coefficient(&word.parse().expect("word"))
            .unwrap_or_default()
            .iter()
            .cloned()
            .collect();
        if got != expected {
            return (false, format!("row {word} differs"));
        }
    }
    (v.entries().len() == 6, "6 rows".into())
}

fn chain_lists() -> (bool, String) {
    let parse = |list: &[&str]| -> BTreeSet<Chain> { list.iter().map(|s| s.parse().expect("chain")).collect() };
    let m3 = minimal_chains(&build_vtable(3, Letter::X).expect("n = 3"), 3).expect("search");
    let m4 = minimal_chains(&build_vtable(4, Letter::X).expect("n = 4"), 4).expect("search");
    let want3 = parse(&["{b2, b2^x}"]);
    let want4 = parse(&[
        "{b3, b3^x}",
        "{b3, b2^z}",
        "{b2^y, b3^x}",
        "{b2^y, b2^z}",
        "{b4, b2, b2^y}",
        "{a4, b2^x, b2^z}",
    ]);
    (
        m3 == want3 && m4 == want4,
        format!("{} and {} chains", m3.len(), m4.len()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff_ring::Klein;

    #[test]
    fn passes_on_fresh_build() {
        let r = selftest();
        for i in &r.items {
            assert!(i.passed, "{} [{}]: {}", i.name, i.field, i.detail);
        }
    }

    #[test]
    fn corrupted_table_is_caught() {
        let bad = TransversalTable::standard().with_entry(Klein::Y, Klein::X, ([0, 0, 0], Klein::Z));
        let r = selftest_with(&bad);
        assert!(!r.passed());
        assert!(!r.item("eta-multiplicative", Field::Rational).unwrap().passed);
        assert!(!r.item("eta-multiplicative", Field::Prime(2)).unwrap().passed);
    }
}
