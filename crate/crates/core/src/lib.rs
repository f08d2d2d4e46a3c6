//! Exact approximate-degree computations for symmetric properties of
//! functions `f: [N] -> [M]`.
//!
//! A function is described either by `N*M` indicator variables
//! `y_ij = [f(i) = j]` ([`YPolynomial`]) or by `M` frequency variables
//! `z_j = |f^{-1}(j)|` ([`SymPolynomial`], in the monomial symmetric basis).
//! The crate converts between the two ([`symmetrize`](symmetrize::symmetrize),
//! [`desymmetrize`](symmetrize::desymmetrize)), moves symmetric
//! approximators between range sizes ([`rangexfer`]), reduces the two-level
//! AND-OR tree to element distinctness ([`andor`]) and computes exact
//! minimum degrees by rational linear programming ([`degreelp`]).
//! Everything is checked against brute-force enumeration in [`oracle`].
//!
//! All arithmetic is exact: coefficients are [`Rational`]s and the LP
//! solver never rounds.

pub mod andor;
pub mod degreelp;
pub mod error;
pub mod format;
pub mod lp;
pub mod oracle;
pub mod polycore;
pub mod properties;
pub mod rangexfer;
pub mod rational;
pub mod symmetrize;
pub mod sympoly;

pub use error::{Error, Result};
pub use polycore::{Degree, FunctionTable, YMonomial, YPolynomial};
pub use properties::{Label, Property};
pub use rational::Rational;
pub use sympoly::{FrequencyVector, Partition, SymPolynomial, ZPolynomial};

/// Default cap on the number of function tables any enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "SYMDEG_BUDGET";

/// Upper bound on brute-force enumeration work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    /// Reads `SYMDEG_BUDGET`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(s) => s
                .trim()
                .parse::<u64>()
                .map(Budget)
                .map_err(|_| Error::InvalidArgument(format!("{BUDGET_ENV}={s:?} is not a count"))),
            Err(_) => Ok(Budget::default()),
        }
    }

    /// Fails with the exact count when `needed` exceeds the budget.
    pub fn check(&self, needed: u128) -> Result<()> {
        if needed > self.0 as u128 {
            Err(Error::BudgetExceeded {
                needed,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}
