//! Take an optimal approximator at range N, lift it to larger ranges and
//! confirm by enumerating every function that it still approximates.
//!
//! ```bash
//! cargo run -p symdeg --example range_transfer
//! ```

use symdeg::degreelp::approx_degree;
use symdeg::rangexfer::{extend, restrict, transfer_approximation, Verification};
use symdeg::rational::ratio;
use symdeg::symmetrize::desymmetrize;
use symdeg::{Budget, Property};

fn main() -> symdeg::Result<()> {
    let eps = ratio(1, 3);
    let n = 3;
    let prop = Property::ElementDistinctness;
    let cert = approx_degree(&prop, n, n, &eps)?;
    let q = cert.polynomial();
    println!("{} at n=m={n}: degree {} via Q = {q}", prop.name(), cert.degree);

    let p = desymmetrize(q, n, n)?;
    println!("as an indicator polynomial: {} terms, degree {}", p.terms().len(), p.degree());

    for target in n..=n + 2 {
        let wide = extend(q, target)?;
        assert_eq!(&restrict(&wide, n)?, q);
        let moved = transfer_approximation(&p, &prop, target, &eps, Budget::default())?;
        let status = match &moved.verification {
            Verification::Verified(r) if r.pass => "verified on every function".to_string(),
            Verification::Verified(r) => format!("{} violations", r.violations.len()),
            Verification::Unverified { functions } => format!("unverified ({functions} functions)"),
        };
        println!(
            "m={target}: degree {} with {} terms, {status}",
            moved.polynomial.degree(),
            moved.polynomial.terms().len()
        );
    }
    Ok(())
}
