//! Runs the golden checks that `fours selftest` runs and prints the report.

fn main() {
    let r = fours::selftest::selftest();
    for i in &r.items {
        println!("{} {:<28} [{}] {}", if i.passed { "pass" } else { "FAIL" }, i.name, i.field, i.detail);
    }
    println!("all passed: {}", r.passed());
}
