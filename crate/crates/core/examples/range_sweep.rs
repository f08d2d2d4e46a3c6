//! Degree across range sizes, as the CSV the `sweep` command writes.
//!
//! ```bash
//! cargo run -p symdeg --example range_sweep
//! ```

use symdeg::degreelp::{sweep, sweep_csv};
use symdeg::oracle::verify_range_invariance;
use symdeg::rational::ratio;
use symdeg::Property;

fn main() -> symdeg::Result<()> {
    let eps = ratio(1, 3);
    print!("{}", sweep_csv(&sweep(&Property::ElementDistinctness, 4, 4..=7, &eps)?)?);
    let report = verify_range_invariance(&Property::Collision, 4, 7, &eps)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
