//! Symmetric polynomials in the frequency variables `z_1..z_m`, stored in
//! the monomial symmetric basis.
//!
//! `m_λ` is the sum of every distinct monomial `z_{i_1}^{λ_1} ... z_{i_l}^{λ_l}`
//! with pairwise distinct indices. Because the basis is indexed by
//! partitions only, the same coefficient map can be read over any number of
//! variables, which is what range extension and restriction rely on.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::Degree;
use crate::rational::{self, Rational};

/// Integer partition with parts in non-increasing order.
///
/// Ordered by weight first, then reverse-lexicographically within a weight,
/// so maps keyed by partitions iterate as `∅, (1), (2), (1,1), (3), (2,1), ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "partition {parts:?} has a zero part"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The empty partition, indexing the constant basis element.
    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Product of `k!` over the multiplicity `k` of each distinct part.
    fn automorphisms(&self) -> BigInt {
        let mut out = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let run = self.parts[i..]
                .iter()
                .take_while(|&&p| p == self.parts[i])
                .count();
            out *= factorial(run as u32);
            i += run;
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Partitions of `n` with at most `max_parts` parts, reverse-lexicographic:
/// `(3), (2,1), (1,1,1)`.
pub fn partitions_of(n: u32, max_parts: usize) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight `<= max_weight` with at most `max_parts` parts,
/// in [`Partition`] order.
pub fn partitions_up_to(max_weight: u32, max_parts: usize) -> Vec<Partition> {
    (0..=max_weight)
        .flat_map(|w| partitions_of(w, max_parts))
        .collect()
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Multiset of preimage sizes of a function into `[m]`, kept canonically as
/// the partition of its nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrequencyVector {
    m: u32,
    nonzero: Partition,
}

impl FrequencyVector {
    /// From a full or partial count vector; zeros are implicit padding.
    pub fn new(m: u32, counts: &[u32]) -> Result<Self> {
        let nonzero = counts.iter().filter(|&&c| c > 0).count();
        if counts.len() > m as usize || nonzero > m as usize {
            return Err(Error::DimensionMismatch {
                expected: format!("at most {m} coordinates"),
                got: format!("{counts:?}"),
            });
        }
        Ok(Self::from_counts(m, counts))
    }

    pub(crate) fn from_counts(m: u32, counts: &[u32]) -> Self {
        let parts = counts.iter().copied().filter(|&c| c > 0).collect();
        FrequencyVector {
            m,
            nonzero: Partition::new(parts).expect("zeros filtered"),
        }
    }

    pub fn from_partition(m: u32, class: &Partition) -> Result<Self> {
        if class.len() > m as usize {
            return Err(Error::DimensionMismatch {
                expected: format!("at most {m} parts"),
                got: class.to_string(),
            });
        }
        Ok(FrequencyVector {
            m,
            nonzero: class.clone(),
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `Σ z_j`, the domain size of any function in this class.
    pub fn weight(&self) -> u32 {
        self.nonzero.weight()
    }

    pub fn nonzero(&self) -> &Partition {
        &self.nonzero
    }

    pub fn max(&self) -> u32 {
        self.nonzero.largest()
    }

    /// Sorted, zero-padded to length `m`.
    pub fn padded(&self) -> Vec<u32> {
        let mut v = self.nonzero.parts.clone();
        v.resize(self.m as usize, 0);
        v
    }
}

impl fmt::Display for FrequencyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.padded().iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Value of `m_λ` at `z`. Zero when `λ` has more parts than `z` has
/// coordinates (or nonzero coordinates).
pub fn eval_msym(lambda: &Partition, z: &FrequencyVector) -> Rational {
    let coords = z.nonzero.parts();
    if lambda.len() > z.m as usize || lambda.len() > coords.len() {
        return Rational::zero();
    }
    // ordered sum over injective placements of the parts onto nonzero
    // coordinates; each distinct monomial is hit once per automorphism
    fn go(parts: &[u32], coords: &[u32], used: &mut [bool]) -> BigInt {
        let Some((&p, rest)) = parts.split_first() else {
            return BigInt::one();
        };
        let mut total = BigInt::zero();
        for k in 0..coords.len() {
            if used[k] {
                continue;
            }
            used[k] = true;
            total += BigInt::from(coords[k]).pow(p) * go(rest, coords, used);
            used[k] = false;
        }
        total
    }
    let ordered = go(lambda.parts(), coords, &mut vec![false; coords.len()]);
    Rational::new(ordered, lambda.automorphisms())
}

/// Symmetric polynomial `Σ c_λ m_λ` in `m` variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SymPolyRepr", try_from = "SymPolyRepr")]
pub struct SymPolynomial {
    m: u32,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymPolynomial {
    pub fn zero(m: u32) -> Self {
        SymPolynomial {
            m,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(m: u32, c: Rational) -> Self {
        let mut q = SymPolynomial::zero(m);
        q.add_term(Partition::empty(), c);
        q
    }

    /// Single basis element `m_λ`.
    pub fn basis(m: u32, lambda: Partition) -> Self {
        let mut q = SymPolynomial::zero(m);
        q.add_term(lambda, Rational::one());
        q
    }

    /// Keys with more than `m` parts denote the zero basis element and are
    /// discarded.
    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(m: u32, terms: I) -> Self {
        let mut q = SymPolynomial::zero(m);
        for (lambda, c) in terms {
            q.add_term(lambda, c);
        }
        q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() || lambda.len() > self.m as usize {
            return;
        }
        match self.coeffs.entry(lambda) {
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

    /// Largest partition weight among stored keys.
    pub fn degree(&self) -> Degree {
        Degree::of_terms(self.coeffs.keys().map(|l| l.weight() as usize))
    }

    pub fn eval(&self, z: &FrequencyVector) -> Result<Rational> {
        if z.m != self.m {
            return Err(Error::DimensionMismatch {
                expected: format!("{} variables", self.m),
                got: format!("{} variables", z.m),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .map(|(lambda, c)| c * eval_msym(lambda, z))
            .sum())
    }

    pub fn add(&self, other: &SymPolynomial) -> Result<SymPolynomial> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                expected: format!("{} variables", self.m),
                got: format!("{} variables", other.m),
            });
        }
        let mut out = self.clone();
        for (lambda, c) in &other.coeffs {
            out.add_term(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> SymPolynomial {
        SymPolynomial::from_terms(self.m, self.coeffs.iter().map(|(l, c)| (l.clone(), c * k)))
    }

    /// Same coefficient map over `m` variables; keys longer than `m` drop.
    pub(crate) fn reinterpret(&self, m: u32) -> SymPolynomial {
        SymPolynomial::from_terms(m, self.coeffs.iter().map(|(l, c)| (l.clone(), c.clone())))
    }
}

impl fmt::Display for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(l, c)| {
                if l.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*m{l}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct SymTermRepr {
    partition: Partition,
    #[serde(with = "rational")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct SymPolyRepr {
    m: u32,
    terms: Vec<SymTermRepr>,
}

impl From<SymPolynomial> for SymPolyRepr {
    fn from(q: SymPolynomial) -> Self {
        SymPolyRepr {
            m: q.m,
            terms: q
                .coeffs
                .into_iter()
                .map(|(partition, coeff)| SymTermRepr { partition, coeff })
                .collect(),
        }
    }
}

impl TryFrom<SymPolyRepr> for SymPolynomial {
    type Error = Error;

    fn try_from(r: SymPolyRepr) -> Result<Self> {
        if let Some(t) = r.terms.iter().find(|t| t.partition.len() > r.m as usize) {
            return Err(Error::DimensionMismatch {
                expected: format!("at most {} parts", r.m),
                got: t.partition.to_string(),
            });
        }
        Ok(SymPolynomial::from_terms(
            r.m,
            r.terms.into_iter().map(|t| (t.partition, t.coeff)),
        ))
    }
}

/// General polynomial in named variables `z_1..z_m`, keyed by exponent
/// vectors. Used for intermediate expansions that are not yet symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPolynomial {
    m: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl ZPolynomial {
    pub fn zero(m: u32) -> Self {
        ZPolynomial {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: u32, c: Rational) -> Self {
        let mut p = ZPolynomial::zero(m);
        p.add_term(vec![0; m as usize], c);
        p
    }

    /// `a * z_j + b`.
    pub fn linear(m: u32, j: u32, a: Rational, b: Rational) -> Result<Self> {
        if j == 0 || j > m {
            return Err(Error::IndexOutOfRange(format!("z_{j} with {m} variables")));
        }
        let mut p = ZPolynomial::constant(m, b);
        let mut e = vec![0; m as usize];
        e[(j - 1) as usize] = 1;
        p.add_term(e, a);
        Ok(p)
    }

    /// From `(exponent vector, coefficient)` pairs; every vector must have
    /// length `m`.
    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rational)>>(m: u32, terms: I) -> Result<Self> {
        let mut p = ZPolynomial::zero(m);
        for (e, c) in terms {
            if e.len() != m as usize {
                return Err(Error::DimensionMismatch {
                    expected: format!("{m} exponents"),
                    got: format!("{e:?}"),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    pub fn degree(&self) -> Degree {
        Degree::of_terms(self.terms.keys().map(|e| e.iter().sum::<u32>() as usize))
    }

    pub fn mul(&self, other: &ZPolynomial) -> ZPolynomial {
        let mut out = ZPolynomial::zero(self.m);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn add(&self, other: &ZPolynomial) -> ZPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> ZPolynomial {
        let mut out = ZPolynomial::zero(self.m);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    /// Evaluates at an ordered point `(z_1, ..., z_m)`.
    pub fn eval(&self, z: &[u32]) -> Result<Rational> {
        if z.len() != self.m as usize {
            return Err(Error::DimensionMismatch {
                expected: format!("{} coordinates", self.m),
                got: format!("{}", z.len()),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                let v: BigInt = e
                    .iter()
                    .zip(z)
                    .map(|(&k, &x)| BigInt::from(x).pow(k))
                    .product();
                c * Rational::from_integer(v)
            })
            .sum())
    }

    /// Average over all permutations of the variables, in the monomial
    /// symmetric basis. A monomial with exponent vector `α` averages to
    /// `m_λ / |orbit(α)|`.
    pub fn symmetrize_over_variables(&self) -> SymPolynomial {
        let mut out = SymPolynomial::zero(self.m);
        let m_fact = factorial(self.m);
        for (e, c) in &self.terms {
            let mut sorted = e.clone();
            sorted.sort_unstable();
            let mut stabilizer = BigInt::one();
            let mut i = 0;
            while i < sorted.len() {
                let run = sorted[i..].iter().take_while(|&&x| x == sorted[i]).count();
                stabilizer *= factorial(run as u32);
                i += run;
            }
            let orbit = &m_fact / stabilizer;
            let lambda = Partition::new(e.iter().copied().filter(|&x| x > 0).collect())
                .expect("zeros filtered");
            out.add_term(lambda, c / Rational::from_integer(orbit));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn fv(m: u32, z: &[u32]) -> FrequencyVector {
        FrequencyVector::new(m, z).unwrap()
    }

    fn permutations(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(k - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }

    // every distinct monomial of shape λ over m ordered coordinates
    fn msym_by_expansion(lambda: &Partition, z: &[u32]) -> Rational {
        let m = z.len();
        if lambda.len() > m {
            return int(0);
        }
        let mut padded = lambda.parts().to_vec();
        padded.resize(m, 0);
        let exps: BTreeSet<Vec<u32>> = permutations(m)
            .into_iter()
            .map(|p| p.iter().map(|&k| padded[k]).collect())
            .collect();
        exps.iter()
            .map(|e| {
                let v: i64 = e.iter().zip(z).map(|(&k, &x)| (x as i64).pow(k)).product();
                int(v)
            })
            .sum()
    }

    #[test]
    fn partition_order_and_enumeration() {
        let ps = partitions_of(3, 3);
        assert_eq!(ps, vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        assert_eq!(partitions_of(3, 2), vec![part(&[3]), part(&[2, 1])]);
        assert_eq!(partitions_of(0, 0), vec![Partition::empty()]);
        let up: Vec<_> = partitions_up_to(2, 2);
        assert_eq!(up, vec![Partition::empty(), part(&[1]), part(&[2]), part(&[1, 1])]);
        let mut sorted = partitions_up_to(5, 5);
        sorted.sort();
        assert_eq!(sorted, partitions_up_to(5, 5));
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n, n as usize).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(part(&[1, 3, 2]).parts(), &[3, 2, 1]);
    }

    #[test]
    fn eval_msym_examples() {
        assert_eq!(eval_msym(&part(&[1, 1]), &fv(3, &[1, 1, 0])), int(1));
        assert_eq!(eval_msym(&part(&[2]), &fv(2, &[2, 0])), int(4));
        assert_eq!(eval_msym(&part(&[1]), &fv(2, &[3, 1])), int(4));
        assert_eq!(eval_msym(&part(&[1, 1, 1]), &fv(2, &[1, 1])), int(0));
        assert_eq!(eval_msym(&Partition::empty(), &fv(2, &[1, 1])), int(1));
    }

    #[test]
    fn eval_sym_examples() {
        let q = SymPolynomial::basis(2, part(&[1, 1]));
        assert_eq!(q.eval(&fv(2, &[1, 1])).unwrap(), int(1));
        assert_eq!(q.eval(&fv(2, &[2, 0])).unwrap(), int(0));
        let q = SymPolynomial::from_terms(3, [(part(&[1]), ratio(1, 2)), (Partition::empty(), int(3))]);
        assert_eq!(q.eval(&fv(3, &[2, 1, 1])).unwrap(), int(5));
        assert!(q.eval(&fv(2, &[1, 1])).is_err());
    }

    #[test]
    fn symmetrize_over_variables_examples() {
        let z1sq = ZPolynomial::from_terms(2, [(vec![2, 0], int(1))]).unwrap();
        assert_eq!(
            z1sq.symmetrize_over_variables(),
            SymPolynomial::from_terms(2, [(part(&[2]), ratio(1, 2))])
        );
        let z1z2 = ZPolynomial::from_terms(2, [(vec![1, 1], int(1))]).unwrap();
        assert_eq!(z1z2.symmetrize_over_variables(), SymPolynomial::basis(2, part(&[1, 1])));
        let z1 = ZPolynomial::linear(3, 1, int(1), int(0)).unwrap();
        assert_eq!(
            z1.symmetrize_over_variables(),
            SymPolynomial::from_terms(3, [(part(&[1]), ratio(1, 3))])
        );
    }

    #[test]
    fn overlong_keys_are_zero() {
        let q = SymPolynomial::from_terms(2, [(part(&[1, 1, 1]), int(4))]);
        assert!(q.is_zero());
        let bad = r#"{"m":1,"terms":[{"partition":[1,1],"coeff":"1/1"}]}"#;
        assert!(serde_json::from_str::<SymPolynomial>(bad).is_err());
    }

    #[test]
    fn json_form() {
        let q = SymPolynomial::from_terms(3, [(part(&[1, 1]), ratio(1, 2)), (Partition::empty(), int(-3))]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(
            s,
            r#"{"m":3,"terms":[{"partition":[],"coeff":"-3/1"},{"partition":[1,1],"coeff":"1/2"}]}"#
        );
        assert_eq!(serde_json::from_str::<SymPolynomial>(&s).unwrap(), q);
    }

    fn arb_lambda() -> impl Strategy<Value = Partition> {
        (0u32..=4).prop_flat_map(|w| {
            let ps = partitions_of(w, w as usize);
            (0..ps.len()).prop_map(move |k| ps[k].clone())
        })
    }

    proptest! {
        #[test]
        fn msym_matches_expansion(lambda in arb_lambda(),
                                  z in prop::collection::vec(0u32..=4, 1..=5)) {
            let m = z.len() as u32;
            let canon = FrequencyVector::new(m, &z).unwrap();
            prop_assert_eq!(eval_msym(&lambda, &canon), msym_by_expansion(&lambda, &z));
        }

        #[test]
        fn msym_ignores_coordinate_order(lambda in arb_lambda(),
                                         z in prop::collection::vec(0u32..=4, 1..=5),
                                         seed in any::<u64>()) {
            let m = z.len();
            let mut shuffled = z.clone();
            let perms = permutations(m);
            let p = &perms[(seed % perms.len() as u64) as usize];
            for (k, &src) in p.iter().enumerate() {
                shuffled[k] = z[src];
            }
            prop_assert_eq!(
                msym_by_expansion(&lambda, &z),
                msym_by_expansion(&lambda, &shuffled)
            );
            prop_assert_eq!(
                eval_msym(&lambda, &FrequencyVector::new(m as u32, &z).unwrap()),
                eval_msym(&lambda, &FrequencyVector::new(m as u32, &shuffled).unwrap())
            );
        }

        #[test]
        fn symmetrization_is_permutation_average(
            (m, terms) in (1u32..=4).prop_flat_map(|m| {
                let term = (prop::collection::vec(0u32..=2, m as usize), -4i64..=4);
                (Just(m), prop::collection::vec(term, 0..5))
            }),
            z in prop::collection::vec(0u32..=3, 4),
        ) {
            let raw = ZPolynomial::from_terms(m, terms.into_iter().map(|(e, c)| (e, int(c)))).unwrap();
            let z = &z[..m as usize];
            let sym = raw.symmetrize_over_variables();
            prop_assert!(sym.degree() <= raw.degree());
            let perms = permutations(m as usize);
            let total: Rational = perms
                .iter()
                .map(|p| {
                    let zp: Vec<u32> = p.iter().map(|&k| z[k]).collect();
                    raw.eval(&zp).unwrap()
                })
                .sum();
            let avg = total / int(perms.len() as i64);
            prop_assert_eq!(sym.eval(&FrequencyVector::new(m, z).unwrap()).unwrap(), avg);
        }

        #[test]
        fn msym_sanity_bound(lambda in arb_lambda(), z in prop::collection::vec(0u32..=3, 1..=5)) {
            let m = z.len() as u32;
            let n: u32 = z.iter().sum();
            let v = eval_msym(&lambda, &FrequencyVector::new(m, &z).unwrap());
            let choose = if lambda.len() > m as usize { 0 } else {
                (0..lambda.len() as u64).fold(1u64, |acc, k| acc * (m as u64 - k) / (k + 1))
            };
            let bound = (n as u64).pow(lambda.weight()) * choose;
            prop_assert!(v <= int(bound as i64));
        }
    }
}
