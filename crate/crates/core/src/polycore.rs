//! Multilinear polynomials over the indicator variables `y_ij = [f(i) = j]`.
//!
//! Rows `i` range over `1..=n` and columns `j` over `1..=m`. On any
//! assignment coming from a function, `y_ij^2 = y_ij` and
//! `y_ij * y_ij' = 0` for `j != j'`; [`YMonomial::normalize`] applies both.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::sympoly::FrequencyVector;

/// Degree of a polynomial. The zero polynomial has no degree and orders
/// below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Degree {
    NoDegree,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NoDegree => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub(crate) fn of_terms<I: IntoIterator<Item = usize>>(degrees: I) -> Degree {
        degrees
            .into_iter()
            .map(Degree::Finite)
            .max()
            .unwrap_or(Degree::NoDegree)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NoDegree => f.write_str("none"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Product of indicator variables, stored as `(row, column)` pairs in
/// row-major order. May contain repeats or row conflicts until normalized.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct YMonomial {
    factors: Vec<(u32, u32)>,
}

impl YMonomial {
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(factors: I) -> Self {
        let mut factors: Vec<_> = factors.into_iter().collect();
        factors.sort_unstable();
        YMonomial { factors }
    }

    /// The empty product.
    pub fn one() -> Self {
        YMonomial::default()
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    /// Number of factors, counting repeats.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `true` when every row occurs at most once.
    pub fn is_normal(&self) -> bool {
        self.factors.windows(2).all(|w| w[0].0 != w[1].0)
    }

    /// Applies `y^2 = y` and `y_ij * y_ij' = 0`. Returns `None` when the
    /// monomial vanishes on every function.
    pub fn normalize(&self) -> Option<YMonomial> {
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(self.factors.len());
        for &(i, j) in &self.factors {
            match out.last() {
                Some(&(pi, pj)) if pi == i => {
                    if pj != j {
                        return None;
                    }
                }
                _ => out.push((i, j)),
            }
        }
        Some(YMonomial { factors: out })
    }

    /// Raw product (factor concatenation); normalize afterwards.
    pub fn mul(&self, other: &YMonomial) -> YMonomial {
        YMonomial::new(self.factors.iter().chain(&other.factors).copied())
    }

    pub fn is_satisfied_by(&self, f: &FunctionTable) -> bool {
        self.factors
            .iter()
            .all(|&(i, j)| f.values[(i - 1) as usize] == j)
    }

    fn check_dims(&self, n: u32, m: u32) -> Result<()> {
        for &(i, j) in &self.factors {
            if i == 0 || i > n || j == 0 || j > m {
                return Err(Error::IndexOutOfRange(format!(
                    "y_({i},{j}) outside {n}x{m}"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(i, j)| format!("y{i}_{j}"))
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Sparse polynomial in `y_11..y_nm` with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "YPolyRepr", try_from = "YPolyRepr")]
pub struct YPolynomial {
    n: u32,
    m: u32,
    terms: BTreeMap<YMonomial, Rational>,
}

impl YPolynomial {
    pub fn zero(n: u32, m: u32) -> Self {
        YPolynomial {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: u32, m: u32, c: Rational) -> Self {
        let mut p = YPolynomial::zero(n, m);
        p.add_term(YMonomial::one(), c);
        p
    }

    /// Builds a polynomial from raw terms, merging equal monomials. The
    /// monomials are kept as given; call [`normalized`](Self::normalized)
    /// to apply the reduction rules.
    pub fn from_terms<I>(n: u32, m: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (YMonomial, Rational)>,
    {
        let mut p = YPolynomial::zero(n, m);
        for (mono, c) in terms {
            mono.check_dims(n, m)?;
            p.add_term(mono, c);
        }
        Ok(p)
    }

    pub fn dims(&self) -> (u32, u32) {
        (self.n, self.m)
    }

    pub fn terms(&self) -> &BTreeMap<YMonomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, mono: YMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.terms.keys().all(YMonomial::is_normal)
    }

    /// Applies the reduction rules to every term and merges the results.
    pub fn normalized(&self) -> YPolynomial {
        let mut out = YPolynomial::zero(self.n, self.m);
        for (mono, c) in &self.terms {
            if let Some(norm) = mono.normalize() {
                out.add_term(norm, c.clone());
            }
        }
        out
    }

    /// Largest factor count over stored terms.
    pub fn degree(&self) -> Degree {
        Degree::of_terms(self.terms.keys().map(YMonomial::len))
    }

    pub fn eval(&self, f: &FunctionTable) -> Result<Rational> {
        if (f.n, f.m) != (self.n, self.m) {
            return Err(Error::DimensionMismatch {
                expected: format!("{}x{}", self.n, self.m),
                got: format!("{}x{}", f.n, f.m),
            });
        }
        Ok(self
            .terms
            .iter()
            .filter(|(mono, _)| mono.is_satisfied_by(f))
            .map(|(_, c)| c)
            .sum())
    }

    pub fn add(&self, other: &YPolynomial) -> Result<YPolynomial> {
        self.same_dims(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> YPolynomial {
        let mut out = YPolynomial::zero(self.n, self.m);
        for (mono, c) in &self.terms {
            out.add_term(mono.clone(), c * k);
        }
        out
    }

    /// Product with normalization applied to every resulting monomial.
    pub fn mul(&self, other: &YPolynomial) -> Result<YPolynomial> {
        self.same_dims(other)?;
        let mut out = YPolynomial::zero(self.n, self.m);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(mono) = a.mul(b).normalize() {
                    out.add_term(mono, ca * cb);
                }
            }
        }
        Ok(out)
    }

    fn same_dims(&self, other: &YPolynomial) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch {
                expected: format!("{}x{}", self.n, self.m),
                got: format!("{}x{}", other.n, other.m),
            });
        }
        Ok(())
    }
}

impl fmt::Display for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(mono, c)| {
                if mono.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    mono.to_string()
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct YTermRepr {
    vars: Vec<[u32; 2]>,
    #[serde(with = "rational")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct YPolyRepr {
    n: u32,
    m: u32,
    terms: Vec<YTermRepr>,
}

impl From<YPolynomial> for YPolyRepr {
    fn from(p: YPolynomial) -> Self {
        YPolyRepr {
            n: p.n,
            m: p.m,
            terms: p
                .terms
                .into_iter()
                .map(|(mono, coeff)| YTermRepr {
                    vars: mono.factors.iter().map(|&(i, j)| [i, j]).collect(),
                    coeff,
                })
                .collect(),
        }
    }
}

impl TryFrom<YPolyRepr> for YPolynomial {
    type Error = Error;

    fn try_from(r: YPolyRepr) -> Result<Self> {
        YPolynomial::from_terms(
            r.n,
            r.m,
            r.terms.into_iter().map(|t| {
                (
                    YMonomial::new(t.vars.into_iter().map(|[i, j]| (i, j))),
                    t.coeff,
                )
            }),
        )
    }
}

/// A function `f: [n] -> [m]` given by its value table (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FunctionTable {
    n: u32,
    m: u32,
    values: Vec<u32>,
}

impl FunctionTable {
    pub fn new(m: u32, values: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|&&v| v == 0 || v > m) {
            return Err(Error::IndexOutOfRange(format!(
                "function value {bad} outside 1..={m}"
            )));
        }
        Ok(FunctionTable {
            n: values.len() as u32,
            m,
            values,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Value of `y_ij` under this function.
    pub fn indicator(&self, i: u32, j: u32) -> bool {
        self.values[(i - 1) as usize] == j
    }

    /// Preimage sizes `|f^{-1}(j)|` in column order.
    pub fn counts(&self) -> Vec<u32> {
        let mut z = vec![0u32; self.m as usize];
        for &v in &self.values {
            z[(v - 1) as usize] += 1;
        }
        z
    }

    /// Canonical (sorted) frequency vector.
    pub fn freq(&self) -> FrequencyVector {
        FrequencyVector::from_counts(self.m, &self.counts())
    }

    pub fn is_one_to_one(&self) -> bool {
        self.counts().iter().all(|&c| c <= 1)
    }

    pub fn is_two_to_one(&self) -> bool {
        self.counts().iter().all(|&c| c == 0 || c == 2)
    }
}
