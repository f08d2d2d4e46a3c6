//! Moving approximators between range sizes.
//!
//! A function `[N] -> [M]` hits at most `N` values, so a symmetric
//! polynomial in `N` variables determines one in any `M >= N` variables
//! with the same monomial-symmetric coefficients, and the two agree on every
//! frequency class. Restriction is the reverse: drop the basis elements
//! that need more variables than remain.

use crate::error::{Error, Result};
use crate::oracle::{function_count, verify_approximation, Approximant, Report};
use crate::polycore::YPolynomial;
use crate::properties::Property;
use crate::rational::Rational;
use crate::symmetrize::{desymmetrize, symmetrize};
use crate::sympoly::SymPolynomial;
use crate::Budget;

/// `Q(z_1, ..., z_target, 0, ..., 0)` as a polynomial in `target` variables.
pub fn restrict(q: &SymPolynomial, target: u32) -> Result<SymPolynomial> {
    if target == 0 {
        return Err(Error::InvalidArgument("restriction target must be >= 1".into()));
    }
    if target > q.m() {
        return Err(Error::InvalidArgument(format!(
            "cannot restrict {} variables to {target}",
            q.m()
        )));
    }
    Ok(q.reinterpret(target))
}

/// Same coefficients over `target >= m` variables.
pub fn extend(q: &SymPolynomial, target: u32) -> Result<SymPolynomial> {
    if target < q.m() {
        return Err(Error::InvalidArgument(format!(
            "cannot extend {} variables to {target}",
            q.m()
        )));
    }
    Ok(q.reinterpret(target))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verification {
    Verified(Report),
    /// Instance too large to enumerate; constructed but not checked.
    Unverified { functions: u128 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Transferred {
    pub polynomial: YPolynomial,
    pub verification: Verification,
}

/// Symmetrize an `n x n` approximator, extend it to `target` variables and
/// expand back to indicator variables over `n x target`. The result is
/// checked against `prop` when the enumeration fits the budget.
pub fn transfer_approximation(
    p: &YPolynomial,
    prop: &Property,
    target: u32,
    eps: &Rational,
    budget: Budget,
) -> Result<Transferred> {
    let (n, m) = p.dims();
    if n != m {
        return Err(Error::DimensionMismatch {
            expected: format!("{n}x{n}"),
            got: format!("{n}x{m}"),
        });
    }
    let q = symmetrize(p)?;
    let wide = extend(&q, target)?;
    let polynomial = desymmetrize(&wide, n, target)?;
    let functions = function_count(n, target);
    let verification = if budget.check(functions).is_ok() {
        Verification::Verified(verify_approximation(
            Approximant::Y(&polynomial),
            prop,
            n,
            target,
            eps,
            budget,
        )?)
    } else {
        Verification::Unverified { functions }
    };
    Ok(Transferred {
        polynomial,
        verification,
    })
}
