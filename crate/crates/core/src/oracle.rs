//! Brute-force ground truth: enumeration of functions, direct verification
//! of approximators, and cross-checks of the degree LP.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::degreelp::{approx_degree, approximation_program};
use crate::error::{Error, Result};
use crate::lp::LpOutcome;
use crate::polycore::{FunctionTable, YMonomial, YPolynomial};
use crate::properties::{enumerate_classes, Label, Property};
use crate::rational::{self, Rational};
use crate::sympoly::{FrequencyVector, SymPolynomial};
use crate::Budget;

/// All `m^n` functions `[n] -> [m]` in lexicographic order of their value
/// tables.
pub fn enumerate_functions(n: u32, m: u32, budget: Budget) -> Result<Functions> {
    budget.check(function_count(n, m))?;
    Ok(Functions {
        m,
        next: if m == 0 && n > 0 { None } else { Some(vec![1; n as usize]) },
    })
}

pub fn function_count(n: u32, m: u32) -> u128 {
    (m as u128).checked_pow(n).unwrap_or(u128::MAX)
}

pub struct Functions {
    m: u32,
    next: Option<Vec<u32>>,
}

impl Iterator for Functions {
    type Item = FunctionTable;

    fn next(&mut self) -> Option<FunctionTable> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut k = succ.len();
        self.next = loop {
            if k == 0 {
                break None;
            }
            k -= 1;
            if succ[k] < self.m {
                succ[k] += 1;
                break Some(succ);
            }
            succ[k] = 1;
        };
        Some(FunctionTable::new(self.m, cur).expect("values within range"))
    }
}

/// `(Σ c)! / Π c!`, the number of functions with these exact preimage sizes.
pub fn multinomial(counts: &[u32]) -> u128 {
    let mut total: u128 = 1;
    let mut placed: u128 = 0;
    for &c in counts {
        // running product of binomials stays integral
        for k in 1..=c as u128 {
            placed += 1;
            total = total.saturating_mul(placed) / k;
        }
    }
    total
}

/// Functions whose preimage sizes are exactly `counts` (ordered), in
/// lexicographic order.
pub fn functions_with_counts(m: u32, counts: &[u32]) -> impl Iterator<Item = FunctionTable> {
    fn go(left: &mut [u32], cur: &mut Vec<u32>, n: usize, m: u32, out: &mut Vec<FunctionTable>) {
        if cur.len() == n {
            out.push(FunctionTable::new(m, cur.clone()).expect("values within range"));
            return;
        }
        for j in 0..left.len() {
            if left[j] > 0 {
                left[j] -= 1;
                cur.push(j as u32 + 1);
                go(left, cur, n, m, out);
                cur.pop();
                left[j] += 1;
            }
        }
    }
    let n = counts.iter().sum::<u32>() as usize;
    let mut out = Vec::new();
    go(&mut counts.to_vec(), &mut Vec::with_capacity(n), n, m, &mut out);
    out.into_iter()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InputKind {
    Class,
    Function,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub kind: InputKind,
    /// Class partition, or the function's value table.
    pub input: Vec<u32>,
    pub label: Label,
    #[serde(serialize_with = "rational::serialize")]
    pub value: Rational,
    pub bound: Bound,
    #[serde(serialize_with = "rational::serialize")]
    pub limit: Rational,
}

/// Range of values taken on one frequency class.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassSummary {
    pub class: Vec<u32>,
    pub label: Label,
    #[serde(serialize_with = "rational::serialize")]
    pub min: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub max: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub pass: bool,
    pub violations: Vec<Violation>,
    pub table: Vec<ClassSummary>,
}

/// Polynomial in either representation.
#[derive(Debug, Clone, Copy)]
pub enum Approximant<'a> {
    Sym(&'a SymPolynomial),
    Y(&'a YPolynomial),
}

/// Allowed interval for a value with this label.
pub fn label_bounds(label: Label, eps: &Rational) -> (Rational, Rational) {
    match label {
        Label::One => (Rational::one() - eps, Rational::one()),
        Label::Zero => (Rational::zero(), eps.clone()),
        Label::Undefined => (Rational::zero(), Rational::one()),
    }
}

fn check(kind: InputKind, input: Vec<u32>, label: Label, value: &Rational, eps: &Rational) -> Option<Violation> {
    let (lo, hi) = label_bounds(label, eps);
    let (bound, limit) = if *value < lo {
        (Bound::Lower, lo)
    } else if *value > hi {
        (Bound::Upper, hi)
    } else {
        return None;
    };
    Some(Violation {
        kind,
        input,
        label,
        value: value.clone(),
        bound,
        limit,
    })
}

/// Checks every input against its label's interval. Symmetric polynomials
/// are checked per frequency class; indicator polynomials per function
/// (assignments that are not functions are unconstrained).
pub fn verify_approximation(
    poly: Approximant<'_>,
    prop: &Property,
    n: u32,
    m: u32,
    eps: &Rational,
    budget: Budget,
) -> Result<Report> {
    let classes = enumerate_classes(prop, n, m)?;
    let mut violations = Vec::new();
    let mut table = Vec::new();
    match poly {
        Approximant::Sym(q) => {
            if q.m() != m {
                return Err(Error::DimensionMismatch {
                    expected: format!("{m} variables"),
                    got: format!("{} variables", q.m()),
                });
            }
            for (class, label) in classes {
                let value = q.eval(&FrequencyVector::from_partition(m, &class)?)?;
                violations.extend(check(InputKind::Class, class.parts().to_vec(), label, &value, eps));
                table.push(ClassSummary {
                    class: class.parts().to_vec(),
                    label,
                    min: value.clone(),
                    max: value,
                });
            }
        }
        Approximant::Y(p) => {
            if p.dims() != (n, m) {
                return Err(Error::DimensionMismatch {
                    expected: format!("{n}x{m}"),
                    got: format!("{}x{}", p.dims().0, p.dims().1),
                });
            }
            let mut ranges: Vec<Option<(Rational, Rational)>> = vec![None; classes.len()];
            for f in enumerate_functions(n, m, budget)? {
                let z = f.freq();
                let label = prop.classify(n, &z)?;
                let value = p.eval(&f)?;
                violations.extend(check(InputKind::Function, f.values().to_vec(), label, &value, eps));
                let k = classes
                    .iter()
                    .position(|(c, _)| c == z.nonzero())
                    .expect("every function lies in an enumerated class");
                ranges[k] = Some(match ranges[k].take() {
                    None => (value.clone(), value),
                    Some((lo, hi)) => (lo.min(value.clone()), hi.max(value)),
                });
            }
            for ((class, label), range) in classes.into_iter().zip(ranges) {
                let (min, max) = range.expect("classes are non-empty");
                table.push(ClassSummary {
                    class: class.parts().to_vec(),
                    label,
                    min,
                    max,
                });
            }
        }
    }
    Ok(Report {
        pass: violations.is_empty(),
        violations,
        table,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RangeRow {
    pub m: u32,
    pub degree: u32,
    #[serde(serialize_with = "serialize_rationals")]
    pub eps_min: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RangeViolation {
    pub m: u32,
    pub degree: u32,
    pub expected: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RangeReport {
    pub pass: bool,
    pub violations: Vec<RangeViolation>,
    pub table: Vec<RangeRow>,
}

fn serialize_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational::to_text))
}

/// Approximate degree at every range size `n..=m_max`; passes iff all
/// agree with the value at `m = n`.
pub fn verify_range_invariance(prop: &Property, n: u32, m_max: u32, eps: &Rational) -> Result<RangeReport> {
    if m_max < n {
        return Err(Error::InvalidArgument(format!("empty range {n}..={m_max}")));
    }
    let mut table = Vec::new();
    for m in n..=m_max {
        let cert = approx_degree(prop, n, m, eps)?;
        table.push(RangeRow {
            m,
            degree: cert.degree,
            eps_min: cert.records.into_iter().map(|r| r.eps_min).collect(),
        });
    }
    let expected = table[0].degree;
    let violations: Vec<_> = table
        .iter()
        .filter(|r| r.degree != expected)
        .map(|r| RangeViolation {
            m: r.m,
            degree: r.degree,
            expected,
        })
        .collect();
    Ok(RangeReport {
        pass: violations.is_empty(),
        violations,
        table,
    })
}

/// Every normalized indicator monomial of degree `<= d` on an `n x m` grid:
/// choose distinct rows, then a column for each.
pub fn normalized_monomials(n: u32, m: u32, d: u32) -> Vec<YMonomial> {
    fn go(next_row: u32, n: u32, m: u32, left: u32, cur: &mut Vec<(u32, u32)>, out: &mut Vec<YMonomial>) {
        out.push(YMonomial::new(cur.iter().copied()));
        if left == 0 {
            return;
        }
        for i in next_row..=n {
            for j in 1..=m {
                cur.push((i, j));
                go(i + 1, n, m, left - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(1, n, m, d, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Optimal error over ALL indicator polynomials of degree `<= d` (not just
/// symmetric ones), with one constraint pair per function. Independent of
/// the frequency representation.
pub fn full_basis_eps_min(prop: &Property, n: u32, m: u32, d: u32, budget: Budget) -> Result<Rational> {
    let monomials = normalized_monomials(n, m, d);
    let mut rows = Vec::new();
    for f in enumerate_functions(n, m, budget)? {
        let label = prop.classify(n, &f.freq())?;
        let values: Vec<Rational> = monomials
            .iter()
            .map(|mono| {
                if mono.is_satisfied_by(&f) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        rows.push((label, values));
    }
    let lp = approximation_program(monomials.len(), rows.iter().map(|(l, v)| (*l, v.as_slice())));
    match lp.solve() {
        LpOutcome::Optimal { value, .. } => Ok(value),
        other => Err(Error::Inconsistent(format!("full-basis LP is {other:?}"))),
    }
}
