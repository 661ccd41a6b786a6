//! The closed-form lower bounds side by side.
//!
//!     cargo run --example bounds_table

use pathshare::bounds::{bound_chen, bound_gutierrez, bound_hippchen, bound_main, bound_submain};

fn main() {
    println!("{:>3} {:>4} {:>8} {:>5} {:>9} {:>8}", "k", "n", "hippchen", "main", "gutierrez", "chen");
    for k in [3, 5, 8] {
        for n in [k + 1, 3 * k + 2, 5 * k - 2, 8 * k] {
            println!(
                "{k:>3} {n:>4} {:>8} {:>5} {:>9} {:>8.3}",
                bound_hippchen(k),
                bound_main(k, n),
                bound_gutierrez(k, n),
                bound_chen(k)
            );
        }
    }
    println!("min{{4k-l-3, k}} at k=5, l=12: {}", bound_submain(5, 12).unwrap());
}
