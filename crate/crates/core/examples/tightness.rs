//! The K_{k,2k+2} family: k-connected, yet two longest paths share only the
//! k vertices of the small side.
//!
//!     cargo run --release --example tightness

use std::time::Instant;

use pathshare::generators::tightness_witness;
use pathshare::longest::DEFAULT_BUDGET;
use pathshare::{check_graph, Result};

fn main() -> Result<()> {
    println!("{:>2} {:>4} {:>6} {:>8} {:>3} {:>9}", "k", "n", "kappa", "paths", "L", "time");
    for k in 1..=3 {
        let start = Instant::now();
        let report = check_graph(&tightness_witness(k)?, DEFAULT_BUDGET);
        println!(
            "{k:>2} {:>4} {:>6} {:>8} {:>3} {:>8.2?}",
            report.n,
            report.kappa,
            report.path_count,
            report.min_shared.unwrap(),
            start.elapsed()
        );
        assert_eq!(report.hippchen_tight(), Some(true));
    }
    Ok(())
}
