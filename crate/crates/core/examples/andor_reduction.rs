//! Substituting an AND-OR polynomial into element-distinctness variables,
//! and the degree lower bound that results.
//!
//! ```bash
//! cargo run -p symdeg --example andor_reduction
//! ```

use symdeg::andor::{andor_value, degree_chain, f_to_assignment, substitute, XPolynomial};
use symdeg::oracle::enumerate_functions;
use symdeg::rational::{int, ratio};
use symdeg::Budget;

fn main() -> symdeg::Result<()> {
    let n = 2;
    // exact multilinear form of AND(OR(x1,x2), OR(x3,x4))
    let or1 = [(vec![1], int(1)), (vec![2], int(1)), (vec![1, 2], int(-1))];
    let or2 = [(vec![3], int(1)), (vec![4], int(1)), (vec![3, 4], int(-1))];
    let mut terms = Vec::new();
    for (a, ca) in &or1 {
        for (b, cb) in &or2 {
            terms.push(([a.clone(), b.clone()].concat(), ca * cb));
        }
    }
    let g = XPolynomial::from_terms(n, terms)?;
    let y = substitute(&g)?;
    println!("AND-OR polynomial: degree {}, {} terms", g.degree(), g.terms().len());
    println!("after substitution: {y}");

    for f in enumerate_functions(n, n, Budget::default())? {
        let x = f_to_assignment(&f)?;
        let via_y = y.eval(&f)?;
        println!(
            "f={:?}  g(x)={}  P(x)={}  P'(f)={via_y}",
            f.values(),
            andor_value(&x) as u8,
            g.eval(&x)?
        );
        assert_eq!(via_y, g.eval(&x)?);
    }

    for n in 2..=6 {
        let chain = degree_chain(n, &ratio(1, 3))?;
        println!(
            "N={n}: approximate degree of AND-OR on {} bits >= {}",
            chain.variables, chain.andor_degree_lower_bound
        );
    }
    Ok(())
}
