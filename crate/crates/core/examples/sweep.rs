//! A seeded batch of random 3-connected graphs through the sweep driver,
//! writing CSV rows and printing the summary.
//!
//!     cargo run --release --example sweep

use std::io;

use pathshare::cli::{run_sweep, InputSource, OutputFormat, SweepConfig};
use pathshare::Result;

fn main() -> Result<()> {
    let spec = "gnp-kconn:n=10,p=0.5,k=3,count=8,seed=1".parse()?;
    let config = SweepConfig {
        format: OutputFormat::Csv,
        workers: 2,
        ..SweepConfig::new(InputSource::Generator(spec))
    };
    let summary = run_sweep(&config, &mut io::stdout().lock())?;
    eprintln!("{summary}");
    Ok(())
}
