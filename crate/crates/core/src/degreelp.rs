//! Minimum approximation error of degree-`d` symmetric polynomials, and the
//! resulting approximate degree.
//!
//! Restricting to symmetric polynomials loses nothing: averaging an
//! approximator over relabelings keeps it an approximator without raising its
//! degree. A symmetric polynomial is a vector of coefficients over partitions
//! of weight `<= d`, and its value on a frequency class is linear in those
//! coefficients, so the best `ε` is a small exact LP.

use std::ops::RangeInclusive;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::properties::{enumerate_classes, Label, Property};
use crate::rational::{self, Rational};
use crate::sympoly::{eval_msym, partitions_up_to, FrequencyVector, Partition, SymPolynomial};

/// One frequency class and the values of every basis element on it.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassRow {
    pub class: Partition,
    pub label: Label,
    pub basis_values: Vec<Rational>,
}

/// LP variables are `ε` (index 0, non-negative) followed by one free
/// coefficient per basis partition. Each class contributes a lower and an
/// upper bound on `Q(class)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpInstance {
    pub property: String,
    pub n: u32,
    pub m: u32,
    pub degree: u32,
    pub basis: Vec<Partition>,
    pub rows: Vec<ClassRow>,
}

impl LpInstance {
    /// Coefficient variables, not counting `ε`.
    pub fn num_coefficients(&self) -> usize {
        self.basis.len()
    }

    /// Inequality rows, two per class (`ε >= 0` not included).
    pub fn num_constraints(&self) -> usize {
        2 * self.rows.len()
    }

    pub fn to_linear_program(&self) -> LinearProgram {
        approximation_program(
            self.basis.len(),
            self.rows.iter().map(|r| (r.label, r.basis_values.as_slice())),
        )
    }
}

/// `min ε` subject to the label bounds on each row's value
/// `Σ_k values[k] * c_k`. Variable 0 is `ε >= 0`; the coefficients are free.
pub(crate) fn approximation_program<'a, I>(num_coefficients: usize, rows: I) -> LinearProgram
where
    I: IntoIterator<Item = (Label, &'a [Rational])>,
{
    let width = 1 + num_coefficients;
    let mut lp = LinearProgram::new(width);
    lp.set_nonneg(0);
    let mut objective = vec![Rational::zero(); width];
    objective[0] = Rational::one();
    lp.set_objective(objective);
    for (label, values) in rows {
        let mut q = Vec::with_capacity(width);
        q.push(Rational::zero());
        q.extend(values.iter().cloned());
        let with_eps = |e: i64| {
            let mut v = q.clone();
            v[0] = rational::int(e);
            v
        };
        match label {
            Label::One => {
                lp.add_constraint(with_eps(1), Relation::Ge, Rational::one());
                lp.add_constraint(q.clone(), Relation::Le, Rational::one());
            }
            Label::Zero => {
                lp.add_constraint(q.clone(), Relation::Ge, Rational::zero());
                lp.add_constraint(with_eps(-1), Relation::Le, Rational::zero());
            }
            Label::Undefined => {
                lp.add_constraint(q.clone(), Relation::Ge, Rational::zero());
                lp.add_constraint(q, Relation::Le, Rational::one());
            }
        }
    }
    lp
}

pub fn build_lp(prop: &Property, n: u32, m: u32, d: u32) -> Result<LpInstance> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!("need n, m >= 1 (got n={n}, m={m})")));
    }
    let basis = partitions_up_to(d, n.min(m) as usize);
    let rows = enumerate_classes(prop, n, m)?
        .into_iter()
        .map(|(class, label)| {
            let z = FrequencyVector::from_partition(m, &class)?;
            let basis_values = basis.iter().map(|l| eval_msym(l, &z)).collect();
            Ok(ClassRow {
                class,
                label,
                basis_values,
            })
        })
        .collect::<Result<_>>()?;
    Ok(LpInstance {
        property: prop.name().to_string(),
        n,
        m,
        degree: d,
        basis,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub eps_min: Rational,
    pub polynomial: SymPolynomial,
}

pub fn solve_lp(inst: &LpInstance) -> Result<LpSolution> {
    match inst.to_linear_program().solve() {
        LpOutcome::Optimal { value, x } => Ok(LpSolution {
            eps_min: value,
            polynomial: SymPolynomial::from_terms(
                inst.m,
                inst.basis.iter().cloned().zip(x.into_iter().skip(1)),
            ),
        }),
        other => Err(Error::Inconsistent(format!(
            "degree LP for {} at n={}, m={}, d={} is {other:?}",
            inst.property, inst.n, inst.m, inst.degree
        ))),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeRecord {
    pub degree: u32,
    pub eps_min: Rational,
    pub polynomial: SymPolynomial,
}

/// Per-degree optimal errors up to the first degree meeting the target.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeCertificate {
    pub property: String,
    pub n: u32,
    pub m: u32,
    pub epsilon: Rational,
    pub records: Vec<DegreeRecord>,
    pub degree: u32,
}

impl DegreeCertificate {
    /// A `T`-query algorithm yields an approximator of degree `<= 2T`.
    pub fn query_lower_bound(&self) -> u32 {
        self.degree.div_ceil(2)
    }

    /// Optimal polynomial at the certified degree.
    pub fn polynomial(&self) -> &SymPolynomial {
        &self.records.last().expect("at least one record").polynomial
    }

    pub fn eps_min(&self, d: u32) -> Option<&Rational> {
        self.records.get(d as usize).map(|r| &r.eps_min)
    }
}

#[derive(Serialize)]
struct TableEntry {
    degree: u32,
    #[serde(serialize_with = "rational::serialize")]
    eps_min: Rational,
}

#[derive(Serialize)]
struct CertificateRepr<'a> {
    property: &'a str,
    n: u32,
    m: u32,
    #[serde(serialize_with = "rational::serialize")]
    epsilon: &'a Rational,
    degree: u32,
    query_lower_bound: u32,
    table: Vec<TableEntry>,
    polynomial: &'a SymPolynomial,
}

impl Serialize for DegreeCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateRepr {
            property: &self.property,
            n: self.n,
            m: self.m,
            epsilon: &self.epsilon,
            degree: self.degree,
            query_lower_bound: self.query_lower_bound(),
            table: self
                .records
                .iter()
                .map(|r| TableEntry {
                    degree: r.degree,
                    eps_min: r.eps_min.clone(),
                })
                .collect(),
            polynomial: self.polynomial(),
        }
        .serialize(s)
    }
}

/// Smallest `d` whose optimal error is at most `eps`, with every
/// intermediate optimum recorded.
pub fn approx_degree(prop: &Property, n: u32, m: u32, eps: &Rational) -> Result<DegreeCertificate> {
    let half = rational::ratio(1, 2);
    if eps < &Rational::zero() || eps >= &half {
        return Err(Error::InvalidArgument(format!(
            "epsilon must lie in [0, 1/2), got {}",
            rational::to_text(eps)
        )));
    }
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!("need n, m >= 1 (got n={n}, m={m})")));
    }
    if prop.requires_m_at_least_n() && m < n {
        return Err(Error::InvalidArgument(format!(
            "{} needs m >= n (got n={n}, m={m})",
            prop.name()
        )));
    }
    let classes = enumerate_classes(prop, n, m)?.len() as u32;
    // degree n always interpolates any class labelling exactly
    let cap = n.max(classes);
    let mut records: Vec<DegreeRecord> = Vec::new();
    for d in 0..=cap {
        let sol = solve_lp(&build_lp(prop, n, m, d)?)?;
        if let Some(prev) = records.last() {
            if sol.eps_min > prev.eps_min {
                return Err(Error::Inconsistent(format!(
                    "eps_min rose from {} at d={} to {} at d={d}",
                    prev.eps_min,
                    d - 1,
                    sol.eps_min
                )));
            }
        }
        let done = &sol.eps_min <= eps;
        records.push(DegreeRecord {
            degree: d,
            eps_min: sol.eps_min,
            polynomial: sol.polynomial,
        });
        if done {
            return Ok(DegreeCertificate {
                property: prop.name().to_string(),
                n,
                m,
                epsilon: eps.clone(),
                records,
                degree: d,
            });
        }
    }
    Err(Error::Inconsistent(format!(
        "no degree <= {cap} reaches eps={} for {} at n={n}, m={m}",
        rational::to_text(eps),
        prop.name()
    )))
}

/// Certificates for every range size in `ms`, ordered by `m`.
pub fn sweep(prop: &Property, n: u32, ms: RangeInclusive<u32>, eps: &Rational) -> Result<Vec<DegreeCertificate>> {
    if ms.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "empty range {}..{}",
            ms.start(),
            ms.end()
        )));
    }
    ms.map(|m| approx_degree(prop, n, m, eps)).collect()
}

/// Columns: `m,degree,query_lower_bound,eps_min_d0,...,eps_min_dK` where
/// `K` is the largest certified degree; cells past a row's own degree are
/// empty.
pub fn sweep_csv(certs: &[DegreeCertificate]) -> Result<String> {
    let width = certs.iter().map(|c| c.degree).max().unwrap_or(0);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["m".to_string(), "degree".to_string(), "query_lower_bound".to_string()];
    header.extend((0..=width).map(|d| format!("eps_min_d{d}")));
    w.write_record(&header).map_err(csv_error)?;
    for c in certs {
        let mut row = vec![c.m.to_string(), c.degree.to_string(), c.query_lower_bound().to_string()];
        row.extend((0..=width).map(|d| c.eps_min(d).map(rational::to_text).unwrap_or_default()));
        w.write_record(&row).map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}
