//! Two-level AND-OR tree on `N^2` bits and its reduction to element
//! distinctness.
//!
//! Bits are grouped as `x_{(i-1)N+1} .. x_{iN}` for `i = 1..N`; the tree is
//! the AND over groups of the OR within each group. Renaming
//! `x_{(i-1)N+j} -> y_{ji}` turns group `i` into column `i` of the indicator
//! grid, and on function inputs "every column has a one" is exactly
//! "f is onto", i.e. one-to-one when `M = N`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::degreelp::approx_degree;
use crate::error::{Error, Result};
use crate::polycore::{Degree, FunctionTable, YMonomial, YPolynomial};
use crate::properties::Property;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoolAssignment {
    n: u32,
    bits: Vec<bool>,
}

impl BoolAssignment {
    pub fn new(n: u32, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != (n * n) as usize {
            return Err(Error::DimensionMismatch {
                expected: format!("{} bits", n * n),
                got: format!("{} bits", bits.len()),
            });
        }
        Ok(BoolAssignment { n, bits })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `x_k`, 1-based.
    pub fn get(&self, k: u32) -> bool {
        self.bits[(k - 1) as usize]
    }
}

pub fn andor_value(x: &BoolAssignment) -> bool {
    let n = x.n as usize;
    x.bits.chunks(n.max(1)).all(|group| group.iter().any(|&b| b))
}

/// Multilinear polynomial in `x_1..x_{N^2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "XPolyRepr", try_from = "XPolyRepr")]
pub struct XPolynomial {
    n: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl XPolynomial {
    /// Repeated variables collapse (`x^2 = x`); indices must lie in `1..=n^2`.
    pub fn from_terms<I>(n: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut out = XPolynomial {
            n,
            terms: BTreeMap::new(),
        };
        for (mut vars, c) in terms {
            if let Some(&bad) = vars.iter().find(|&&k| k == 0 || k > n * n) {
                return Err(Error::IndexOutOfRange(format!("x_{bad} with N={n}")));
            }
            vars.sort_unstable();
            vars.dedup();
            if c.is_zero() {
                continue;
            }
            match out.terms.entry(vars) {
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
        Ok(out)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn degree(&self) -> Degree {
        Degree::of_terms(self.terms.keys().map(Vec::len))
    }

    pub fn eval(&self, x: &BoolAssignment) -> Result<Rational> {
        if x.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: format!("N={}", self.n),
                got: format!("N={}", x.n),
            });
        }
        Ok(self
            .terms
            .iter()
            .filter(|(vars, _)| vars.iter().all(|&k| x.get(k)))
            .map(|(_, c)| c)
            .sum())
    }
}

#[derive(Serialize, Deserialize)]
struct XTermRepr {
    vars: Vec<u32>,
    #[serde(with = "rational")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct XPolyRepr {
    n: u32,
    terms: Vec<XTermRepr>,
}

impl From<XPolynomial> for XPolyRepr {
    fn from(p: XPolynomial) -> Self {
        XPolyRepr {
            n: p.n,
            terms: p
                .terms
                .into_iter()
                .map(|(vars, coeff)| XTermRepr { vars, coeff })
                .collect(),
        }
    }
}

impl TryFrom<XPolyRepr> for XPolynomial {
    type Error = Error;

    fn try_from(r: XPolyRepr) -> Result<Self> {
        XPolynomial::from_terms(r.n, r.terms.into_iter().map(|t| (t.vars, t.coeff)))
    }
}

/// Indicator variable replacing `x_k`: `x_{(i-1)N+j} -> y_{ji}`.
pub fn x_to_y(n: u32, k: u32) -> (u32, u32) {
    let group = (k - 1) / n + 1;
    let within = (k - 1) % n + 1;
    (within, group)
}

/// Renames every `x` to its indicator variable over the `N x N` grid and
/// normalizes.
pub fn substitute(p: &XPolynomial) -> Result<YPolynomial> {
    let n = p.n;
    let renamed = YPolynomial::from_terms(
        n,
        n,
        p.terms
            .iter()
            .map(|(vars, c)| (YMonomial::new(vars.iter().map(|&k| x_to_y(n, k))), c.clone())),
    )?;
    Ok(renamed.normalized())
}

/// `x_{(i-1)N+j} = [f(j) = i]`.
pub fn f_to_assignment(f: &FunctionTable) -> Result<BoolAssignment> {
    if f.n() != f.m() {
        return Err(Error::InvalidArgument(format!(
            "AND-OR reduction needs m = n (got n={}, m={})",
            f.n(),
            f.m()
        )));
    }
    let n = f.n();
    let bits = (1..=n * n)
        .map(|k| {
            let (j, i) = x_to_y(n, k);
            f.indicator(j, i)
        })
        .collect();
    BoolAssignment::new(n, bits)
}

/// Lower bound on the approximate degree of AND-OR on `N^2` bits implied by
/// the exact element-distinctness degree at `(N, N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeChain {
    pub n: u32,
    pub variables: u32,
    #[serde(serialize_with = "rational::serialize")]
    pub epsilon: Rational,
    pub element_distinctness_degree: u32,
    pub andor_degree_lower_bound: u32,
}

pub fn degree_chain(n: u32, eps: &Rational) -> Result<DegreeChain> {
    let cert = approx_degree(&Property::ElementDistinctness, n, n, eps)?;
    Ok(DegreeChain {
        n,
        variables: n * n,
        epsilon: eps.clone(),
        element_distinctness_degree: cert.degree,
        andor_degree_lower_bound: cert.degree,
    })
}
