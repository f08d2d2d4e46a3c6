//! Closed-form expectation of indicator monomials versus brute-force
//! averaging over every function with the same preimage sizes.
//!
//! ```bash
//! cargo run -p symdeg --example symmetrize_monomials
//! ```

use symdeg::oracle::functions_with_counts;
use symdeg::rational::int;
use symdeg::symmetrize::{average_oracle, monomial_expectation, symmetrize_monomial};
use symdeg::{Budget, FrequencyVector, YMonomial, YPolynomial};

fn main() -> symdeg::Result<()> {
    let (n, m) = (3, 2);
    let monomials = [
        YMonomial::new([(1, 1)]),
        YMonomial::new([(1, 1), (2, 1)]),
        YMonomial::new([(1, 1), (2, 2)]),
        YMonomial::new([(1, 2), (2, 1), (3, 1)]),
    ];
    for mono in &monomials {
        let expectation = monomial_expectation(mono, n, m)?;
        println!("E[{mono}] over {n}x{m}:");
        let p = YPolynomial::from_terms(n, m, [(mono.clone(), int(1))])?;
        for z1 in 0..=n {
            let z = [z1, n - z1];
            let closed = expectation.eval(&z)?;
            let brute = average_oracle(&p, &z, Budget::default())?;
            let count = functions_with_counts(m, &z).count();
            println!("  z={z:?}  formula={closed:<6} enumeration={brute:<6} ({count} functions)");
            assert_eq!(closed, brute);
        }
        let sym = symmetrize_monomial(mono, n, m)?;
        println!("  symmetrized: {sym}");
        for class in [[3u32, 0], [2, 1]] {
            let z = FrequencyVector::new(m, &class)?;
            println!("    class {z}: {}", sym.eval(&z)?);
        }
    }
    Ok(())
}
