//! Conversion between indicator polynomials and frequency polynomials.
//!
//! For a normalized monomial `y_{i_1 j_1} ... y_{i_k j_k}` and a function
//! drawn uniformly among those with preimage sizes `z`, the probability that
//! all factors fire is
//!
//! ```text
//!   Π_{l=1..k} (z_{j_l} - s_l) / (N - l + 1),   s_l = #{l' < l : j_l' = j_l}
//! ```
//!
//! since after fixing `l - 1` rows there are `N - l + 1` free rows left, of
//! which `z_{j_l} - s_l` still map to `j_l`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::{functions_with_counts, multinomial};
use crate::polycore::{YMonomial, YPolynomial};
use crate::rational::{int, Rational};
use crate::sympoly::{FrequencyVector, Partition, SymPolynomial, ZPolynomial};
use crate::Budget;

/// Expected value of a normalized monomial as a polynomial in the named
/// variables `z_1..z_m`. Exact on every ordered `z` with `Σ z = n`.
pub fn monomial_expectation(mono: &YMonomial, n: u32, m: u32) -> Result<ZPolynomial> {
    if !mono.is_normal() {
        return Err(Error::NotNormalized(mono.to_string()));
    }
    check_factors(mono, n, m)?;
    let mut out = ZPolynomial::constant(m, Rational::one());
    for (l, &(_, j)) in mono.factors().iter().enumerate() {
        let seen = mono.factors()[..l].iter().filter(|&&(_, jj)| jj == j).count();
        let free_rows = int(n as i64 - l as i64);
        let factor = ZPolynomial::linear(
            m,
            j,
            Rational::one() / &free_rows,
            int(-(seen as i64)) / &free_rows,
        )?;
        out = out.mul(&factor);
    }
    Ok(out)
}

/// Monomial expectation averaged over relabelings of the range, in the
/// monomial symmetric basis.
pub fn symmetrize_monomial(mono: &YMonomial, n: u32, m: u32) -> Result<SymPolynomial> {
    Ok(monomial_expectation(mono, n, m)?.symmetrize_over_variables())
}

/// Symmetric `Q` with `Q(z)` equal to the average of `P` over every function
/// in the frequency class `z`. The input is normalized first.
pub fn symmetrize(p: &YPolynomial) -> Result<SymPolynomial> {
    let (n, m) = p.dims();
    let mut out = SymPolynomial::zero(m);
    for (mono, c) in p.normalized().terms() {
        out = out.add(&symmetrize_monomial(mono, n, m)?.scale(c))?;
    }
    Ok(out)
}

/// Substitutes `z_j = y_1j + ... + y_nj` and normalizes.
pub fn desymmetrize(q: &SymPolynomial, n: u32, m: u32) -> Result<YPolynomial> {
    if q.m() != m {
        return Err(Error::DimensionMismatch {
            expected: format!("{m} variables"),
            got: format!("{} variables", q.m()),
        });
    }
    let max_exp = q.coeffs().keys().map(Partition::largest).max().unwrap_or(0);
    // column_powers[j][c] = (Σ_i y_ij)^c
    let mut column_powers = Vec::with_capacity(m as usize);
    for j in 1..=m {
        let col = YPolynomial::from_terms(
            n,
            m,
            (1..=n).map(|i| (YMonomial::new([(i, j)]), Rational::one())),
        )?;
        let mut pows = vec![YPolynomial::constant(n, m, Rational::one())];
        for c in 1..=max_exp as usize {
            let next = pows[c - 1].mul(&col)?;
            pows.push(next);
        }
        column_powers.push(pows);
    }
    let mut out = YPolynomial::zero(n, m);
    for (lambda, c) in q.coeffs() {
        for exps in distinct_placements(lambda, m) {
            let mut term = YPolynomial::constant(n, m, c.clone());
            for (j, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&column_powers[j][e as usize])?;
                }
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term)?;
        }
    }
    Ok(out)
}

/// Every distinct exponent vector of length `m` whose nonzero entries are
/// the parts of `lambda`.
pub(crate) fn distinct_placements(lambda: &Partition, m: u32) -> BTreeSet<Vec<u32>> {
    fn go(parts: &[u32], cur: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        let Some((&p, rest)) = parts.split_first() else {
            out.insert(cur.clone());
            return;
        };
        for k in 0..cur.len() {
            if cur[k] == 0 {
                cur[k] = p;
                go(rest, cur, out);
                cur[k] = 0;
            }
        }
    }
    let mut out = BTreeSet::new();
    if lambda.len() <= m as usize {
        go(lambda.parts(), &mut vec![0; m as usize], &mut out);
    }
    out
}

/// Exact average of `P` over all functions whose preimage sizes are exactly
/// the ordered vector `z`, by enumeration.
pub fn average_oracle(p: &YPolynomial, z: &[u32], budget: Budget) -> Result<Rational> {
    let (n, m) = p.dims();
    if z.len() != m as usize {
        return Err(Error::DimensionMismatch {
            expected: format!("{m} coordinates"),
            got: format!("{}", z.len()),
        });
    }
    let weight: u32 = z.iter().sum();
    if weight != n {
        return Err(Error::WeightMismatch {
            expected: n,
            got: weight,
        });
    }
    budget.check(multinomial(z))?;
    let mut total = Rational::zero();
    let mut count = 0u64;
    for f in functions_with_counts(m, z) {
        total += p.eval(&f)?;
        count += 1;
    }
    Ok(total / Rational::from_integer(BigInt::from(count)))
}

/// Exact average of `P` over every function in the frequency class `z`
/// (all orderings of the class).
pub fn class_average_oracle(p: &YPolynomial, z: &FrequencyVector, budget: Budget) -> Result<Rational> {
    let (n, m) = p.dims();
    if z.m() != m {
        return Err(Error::DimensionMismatch {
            expected: format!("{m} variables"),
            got: format!("{} variables", z.m()),
        });
    }
    if z.weight() != n {
        return Err(Error::WeightMismatch {
            expected: n,
            got: z.weight(),
        });
    }
    let orderings = distinct_placements(z.nonzero(), m);
    let per_ordering = multinomial(&z.padded());
    budget.check(per_ordering * orderings.len() as u128)?;
    // every ordering has the same number of functions, so averaging the
    // per-ordering averages is the class average
    let mut total = Rational::zero();
    for counts in &orderings {
        total += average_oracle(p, counts, budget)?;
    }
    Ok(total / int(orderings.len() as i64))
}

fn check_factors(mono: &YMonomial, n: u32, m: u32) -> Result<()> {
    for &(i, j) in mono.factors() {
        if i == 0 || i > n || j == 0 || j > m {
            return Err(Error::IndexOutOfRange(format!("y_({i},{j}) outside {n}x{m}")));
        }
    }
    Ok(())
}
