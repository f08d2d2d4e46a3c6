//! Exact approximate degrees of the built-in properties for small domains.
//!
//! ```bash
//! cargo run -p symdeg --example degree_table
//! ```

use std::time::Instant;

use symdeg::degreelp::approx_degree;
use symdeg::rational::{ratio, to_text};
use symdeg::Property;

fn main() -> symdeg::Result<()> {
    let eps = ratio(1, 3);
    let props = [
        (Property::ElementDistinctness, 2..=6),
        (Property::Collision, 2..=6),
        (Property::ModifiedElementDistinctness, 3..=6),
    ];
    println!("{:<32} {:>2} {:>2} {:>3} {:>4}  eps_min by degree", "property", "n", "m", "d*", "T>=");
    for (prop, ns) in props {
        for n in ns {
            let start = Instant::now();
            let cert = approx_degree(&prop, n, n, &eps)?;
            let table: Vec<String> = cert.records.iter().map(|r| to_text(&r.eps_min)).collect();
            println!(
                "{:<32} {:>2} {:>2} {:>3} {:>4}  [{}]  ({:.2?})",
                prop.name(),
                n,
                n,
                cert.degree,
                cert.query_lower_bound(),
                table.join(", "),
                start.elapsed()
            );
        }
    }
    Ok(())
}
