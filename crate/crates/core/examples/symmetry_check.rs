//! Optimal error over all indicator polynomials against optimal error over
//! symmetric frequency polynomials, degree by degree.
//!
//! ```bash
//! cargo run -p symdeg --example symmetry_check
//! ```

use symdeg::degreelp::{build_lp, solve_lp};
use symdeg::oracle::full_basis_eps_min;
use symdeg::{Budget, Property};

fn main() -> symdeg::Result<()> {
    for prop in [Property::ElementDistinctness, Property::Collision] {
        for (n, m) in [(2, 2), (2, 3), (3, 3)] {
            for d in 0..=2 {
                let symmetric = solve_lp(&build_lp(&prop, n, m, d)?)?.eps_min;
                let full = full_basis_eps_min(&prop, n, m, d, Budget::default())?;
                println!(
                    "{:<22} n={n} m={m} d={d}: symmetric {symmetric:<5} full {full:<5}",
                    prop.name()
                );
                assert_eq!(symmetric, full);
            }
        }
    }
    Ok(())
}
