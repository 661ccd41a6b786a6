//! The seven classes of orderings in which a second path can visit four
//! shared vertices, up to swapping the paths and reversing the first.
//!
//!     cargo run --example sigma_classes

use pathshare::machinery::sigma::canonical_sigma_with_moves;
use pathshare::machinery::{Permutation, SigmaClass};

fn main() {
    for class in SigmaClass::all() {
        let members: Vec<String> = class.members().iter().map(ToString::to_string).collect();
        println!("{class:<14} {{{}}}", members.join(", "));
    }
    let sigma: Permutation = "(1342)".parse().unwrap();
    let (class, moves) = canonical_sigma_with_moves(sigma);
    println!("{sigma} -> {} via {moves:?}", class.representative);
}
