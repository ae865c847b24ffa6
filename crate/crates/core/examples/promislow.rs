//! The Promislow set: its image under ψ, lengths, and the absence of unique products.

use fours::search::{expected_image, promislow_check, promislow_set, unique_product_check};

fn main() {
    let r = promislow_check();
    for e in &r.entries {
        println!("{:>16} ↦ {:<16} L = {}", e.element.to_string(), e.image.to_string(), e.length);
    }
    println!("image equals the listed set: {}", r.image_matches);
    println!("{} elements in the expected image", expected_image().len());
    println!("max length {}; length 3 exactly on the c·y coset: {}", r.max_length, r.length_three_are_cy);
    let p = promislow_set();
    match unique_product_check(&p, &p) {
        None => println!("no unique product among {} pairs", p.len() * p.len()),
        Some((x, y, g)) => println!("unique product {x}·{y} = {g}"),
    }
}
