//! A property given as labelled frequency classes, read from JSON.
//!
//! ```bash
//! cargo run -p symdeg --example custom_property
//! ```

use symdeg::degreelp::approx_degree;
use symdeg::oracle::{verify_approximation, Approximant};
use symdeg::properties::{enumerate_classes, CustomProperty};
use symdeg::rational::ratio;
use symdeg::symmetrize::desymmetrize;
use symdeg::{Budget, Property};

// "some value is hit by at least half the domain" vs one-to-one
const SPEC: &str = r#"{
  "name": "heavy_hitter",
  "n": 4,
  "classes": [
    {"partition": [1, 1, 1, 1], "label": "Zero"},
    {"partition": [4], "label": "One"},
    {"partition": [3, 1], "label": "One"},
    {"partition": [2, 2], "label": "One"},
    {"partition": [2, 1, 1], "label": "One"}
  ]
}"#;

fn main() -> symdeg::Result<()> {
    let prop = Property::Custom(serde_json::from_str::<CustomProperty>(SPEC)?);
    let eps = ratio(1, 3);
    for (class, label) in enumerate_classes(&prop, 4, 5)? {
        println!("{class}: {label}");
    }
    for m in 2..=5 {
        let cert = approx_degree(&prop, 4, m, &eps)?;
        let p = desymmetrize(cert.polynomial(), 4, m)?;
        let report = verify_approximation(Approximant::Y(&p), &prop, 4, m, &eps, Budget::default())?;
        println!("m={m}: degree {} (verified over all functions: {})", cert.degree, report.pass);
    }
    Ok(())
}
