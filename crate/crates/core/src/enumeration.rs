//! Counting formulas: degrees of moduli spaces of generic, pencil and
//! d-coned generic arrangements, and characteristic numbers of generic
//! arrangements of three and four lines.
//!
//! Every count is an exact nonnegative integer. Labeled counts are divided
//! by the number of labelings with [`BigCount::exact_div`], which fails
//! loudly rather than rounding.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{RingSpec, TruncatedPolynomial};
use crate::schubert::{schubert_degree, GrassmannianSpec};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, by: &BigCount) -> Result<BigCount> {
        if by.0.is_zero() {
            return Err(Error::InexactDivision {
                numerator: self.to_string(),
                denominator: "0".into(),
            });
        }
        let (q, r) = self.0.div_rem(&by.0);
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                numerator: self.to_string(),
                denominator: by.to_string(),
            });
        }
        Ok(BigCount(q))
    }

    /// Converts a signed integer that must be nonnegative.
    pub fn from_signed(v: &BigInt) -> Result<Self> {
        v.to_biguint()
            .map(BigCount)
            .ok_or_else(|| Error::InexactDivision {
                numerator: v.to_string(),
                denominator: "1 (negative count)".into(),
            })
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(v.into())
    }
}

impl From<u32> for BigCount {
    fn from(v: u32) -> Self {
        BigCount(v.into())
    }
}

impl std::str::FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<BigUint>()
            .map(BigCount)
            .map_err(|_| Error::InvalidInput(format!("not a nonnegative integer: `{s}`")))
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for BigCount {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl std::ops::Add for &BigCount {
    type Output = BigCount;

    fn add(self, rhs: Self) -> BigCount {
        BigCount(&self.0 + &rhs.0)
    }
}

impl std::ops::Mul for &BigCount {
    type Output = BigCount;

    fn mul(self, rhs: Self) -> BigCount {
        BigCount(&self.0 * &rhs.0)
    }
}

impl std::iter::Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        BigCount(iter.map(|c| c.0).sum())
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // each prefix product is itself a binomial coefficient, so the division is exact
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `d! / prod (value!)^multiplicity`: ways to pick `multiplicity` labeled
/// groups of `value` objects for each pair. Groups of equal size are ordered.
pub fn multinomial(d: u64, parts: &[(u64, u64)]) -> Result<BigCount> {
    let total: u64 = parts.iter().map(|&(v, m)| v * m).sum();
    if total != d {
        return Err(Error::MultinomialSum {
            expected: d,
            found: total,
        });
    }
    let denominator = parts.iter().fold(BigUint::one(), |acc, &(v, m)| {
        acc * factorial(v).pow(m as u32)
    });
    BigCount(factorial(d)).exact_div(&BigCount(denominator))
}

fn factorial_count(n: u64) -> BigCount {
    BigCount(factorial(n))
}

pub fn dim_generic(k: u64, n: u64) -> Result<u64> {
    check_generic(k, n)?;
    Ok(k * n)
}

fn check_generic(k: u64, n: u64) -> Result<()> {
    if n < 1 || k <= n {
        return Err(Error::OutOfRange(format!(
            "generic arrangement needs k > n >= 1, got k = {k}, n = {n}"
        )));
    }
    Ok(())
}

/// Degree of the moduli space of generic arrangements: `(kn)! / (k! (n!)^k)`.
pub fn count_generic(k: u64, n: u64) -> Result<BigCount> {
    check_generic(k, n)?;
    let labeled = multinomial(k * n, &[(n, k)])?;
    labeled.exact_div(&factorial_count(k))
}

/// `(sum of the named variables)^D`: the class of `D` general point conditions.
pub fn point_condition_class<S: AsRef<str>>(
    ring: &Arc<RingSpec>,
    hyperplane_vars: &[S],
    d: u32,
) -> Result<TruncatedPolynomial> {
    Ok(TruncatedPolynomial::sum_of_variables(ring, hyperplane_vars)?.pow(d))
}

/// Names of the line classes `x_i` and marked-point classes `y_ij` (i < j).
pub fn incidence_variables(k: usize) -> (Vec<String>, Vec<String>) {
    let xs = (1..=k).map(|i| format!("x{i}")).collect();
    let ys = (1..=k)
        .flat_map(|i| (i + 1..=k).map(move |j| format!("y{i}{j}")))
        .collect();
    (xs, ys)
}

fn build_incidence_class(k: usize) -> (Arc<RingSpec>, TruncatedPolynomial) {
    let (xs, ys) = incidence_variables(k);
    let names: Vec<&String> = xs.iter().chain(&ys).collect();
    let ring = RingSpec::new(&names, &vec![2; names.len()]).expect("valid incidence ring");
    let var = |name: &str| TruncatedPolynomial::variable(&ring, name).expect("known variable");
    let mut class = TruncatedPolynomial::one(&ring);
    for i in 1..=k {
        for j in i + 1..=k {
            let y = var(&format!("y{i}{j}"));
            class = &class * &(&var(&format!("x{i}")) + &y);
            class = &class * &(&var(&format!("x{j}")) + &y);
        }
    }
    (ring, class)
}

/// Class of the incidence variety `{(l_i, p_ij) : p_ij in l_i and l_j}` in
/// `A((P^2*)^k x (P^2)^C(k,2))`: `prod_{i<j} (x_i + y_ij)(x_j + y_ij)`.
/// Only `k = 3, 4` are supported; beyond four lines the product no longer
/// equals the class of the generic locus plus a point-dimensional correction.
pub fn incidence_class(k: usize) -> Result<(Arc<RingSpec>, TruncatedPolynomial)> {
    static THREE: OnceLock<(Arc<RingSpec>, TruncatedPolynomial)> = OnceLock::new();
    static FOUR: OnceLock<(Arc<RingSpec>, TruncatedPolynomial)> = OnceLock::new();
    let cell = match k {
        3 => &THREE,
        4 => &FOUR,
        _ => {
            return Err(Error::OutOfRange(format!(
                "incidence class is available for k = 3 or 4, got {k}"
            )))
        }
    };
    Ok(cell.get_or_init(|| build_incidence_class(k)).clone())
}

/// `deg([M_k] (sum x)^p (sum y)^(2k-p))`: labeled arrangements through `p`
/// points and tangent to `2k - p` lines, including degenerate contributions.
pub fn labeled_char_degree(k: usize, p: usize) -> Result<BigInt> {
    if p > 2 * k {
        return Err(Error::OutOfRange(format!(
            "p must be in 0..={}, got {p}",
            2 * k
        )));
    }
    let (ring, class) = incidence_class(k)?;
    let (xs, ys) = incidence_variables(k);
    let points = point_condition_class(&ring, &xs, p as u32)?;
    let tangents = TruncatedPolynomial::sum_of_variables(&ring, &ys)?.pow((2 * k - p) as u32);
    class.degree_of_product(&(&points * &tangents))
}

/// Configurations of four coincident lines counted by the `k = 4` degree,
/// nonzero only for `p <= 2`.
///
/// The common line is spanned by the `p` given points together with
/// `2 - p` crossings of pairs of the `8 - p` tangent lines; it then meets the
/// tangent lines in exactly six points, which carry the six labels `p_ij`.
pub fn quadruple_line_correction(p: usize) -> Result<BigCount> {
    let labelings = factorial_count(6);
    let lines = match p {
        // two disjoint pairs out of eight lines, unordered
        0 => multinomial(8, &[(2, 2), (4, 1)])?.exact_div(&BigCount::from(2u32))?,
        // one pair out of seven lines
        1 => multinomial(7, &[(2, 1), (5, 1)])?,
        2 => BigCount::from(1u32),
        _ => BigCount::zero(),
    };
    Ok(&lines * &labelings)
}

/// `N_k(p, 2k - p)` for generic arrangements of `k in {3, 4}` lines.
pub fn char_number_generic_lines(k: usize, p: usize) -> Result<BigCount> {
    if !(3..=4).contains(&k) {
        return Err(Error::OutOfRange(format!(
            "characteristic numbers are available for k = 3 or 4 lines, got {k}"
        )));
    }
    let labeled = BigCount::from_signed(&labeled_char_degree(k, p)?)?;
    let labeled = if k == 4 {
        let correction = quadruple_line_correction(p)?;
        if correction > labeled {
            return Err(Error::InexactDivision {
                numerator: labeled.to_string(),
                denominator: format!("correction {correction} exceeds degree"),
            });
        }
        BigCount(labeled.0 - correction.0)
    } else {
        labeled
    };
    labeled.exact_div(&factorial_count(k as u64))
}

/// Braid arrangement: dual to four generic lines, so `N(p, 8-p) = N_4(8-p, p)`.
pub fn braid_char_number(p: usize) -> Result<BigCount> {
    if p > 8 {
        return Err(Error::OutOfRange(format!("p must be in 0..=8, got {p}")));
    }
    char_number_generic_lines(4, 8 - p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", content = "k", rename_all = "kebab-case")]
pub enum Family {
    GenericLines(usize),
    Pencil(usize),
    Braid,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::GenericLines(k) => write!(f, "generic-{k}-lines"),
            Family::Pencil(k) => write!(f, "pencil-{k}"),
            Family::Braid => write!(f, "braid"),
        }
    }
}

/// `p -> N(p, D - p)` for one family, `p = 0..=D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharNumberTable {
    family: Family,
    dim: usize,
    entries: Vec<BigCount>,
}

impl CharNumberTable {
    pub fn new(family: Family, entries: Vec<BigCount>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput(
                "empty characteristic number table".into(),
            ));
        }
        Ok(CharNumberTable {
            family,
            dim: entries.len() - 1,
            entries,
        })
    }

    pub fn for_family(family: Family) -> Result<Self> {
        match family {
            Family::GenericLines(k) => Self::new(
                family,
                (0..=2 * k)
                    .map(|p| char_number_generic_lines(k, p))
                    .collect::<Result<_>>()?,
            ),
            Family::Braid => Self::new(
                family,
                (0..=8).map(braid_char_number).collect::<Result<_>>()?,
            ),
            Family::Pencil(k) => pencil_char_numbers(k),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[BigCount] {
        &self.entries
    }

    pub fn entry(&self, p: usize) -> Result<&BigCount> {
        self.entries
            .get(p)
            .ok_or_else(|| Error::OutOfRange(format!("p must be in 0..={}, got {p}", self.dim)))
    }
}

/// One `p: N(p, D-p)` pair per line.
impl fmt::Display for CharNumberTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, n) in self.entries.iter().enumerate() {
            writeln!(f, "{p}: {n}")?;
        }
        Ok(())
    }
}

/// Pencil of `k` lines in `P^2`: `D = k + 2`, nonzero entries
/// `N(k+2, 0) = 3 C(k+2, 4)`, `N(k+1, 1) = C(k+1, 2)`, `N(k, 2) = 1`.
pub fn pencil_char_numbers(k: usize) -> Result<CharNumberTable> {
    if k < 3 {
        return Err(Error::OutOfRange(format!(
            "a pencil needs k >= 3 lines, got {k}"
        )));
    }
    let kk = k as u64;
    let mut entries = vec![BigCount::zero(); k + 3];
    entries[k + 2] = BigCount(binomial(kk + 2, 4) * 3u32);
    entries[k + 1] = BigCount(binomial(kk + 1, 2));
    entries[k] = BigCount::from(1u32);
    CharNumberTable::new(Family::Pencil(k), entries)
}

/// A smooth plane curve by degree and class. A point condition is the curve
/// of degree 0 and class 1; tangency to a line is degree 1, class 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveSpec {
    degree: u64,
    class: u64,
}

impl CurveSpec {
    pub fn new(degree: u64, class: u64) -> Result<Self> {
        if degree == 0 && class == 0 {
            return Err(Error::InvalidInput(
                "curve degree and class are both zero".into(),
            ));
        }
        Ok(CurveSpec { degree, class })
    }

    pub fn point() -> Self {
        CurveSpec {
            degree: 0,
            class: 1,
        }
    }

    pub fn line() -> Self {
        CurveSpec {
            degree: 1,
            class: 0,
        }
    }

    /// Smooth curve of degree `d`; its class is `d(d - 1)`.
    pub fn smooth(d: u64) -> Result<Self> {
        Self::new(d, d * d.saturating_sub(1))
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn class(&self) -> u64 {
        self.class
    }
}

impl std::str::FromStr for CurveSpec {
    type Err = Error;

    /// `degree:class`
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("expected `degree:class`, found `{s}`"));
        let (d, c) = s.split_once(':').ok_or_else(bad)?;
        let d = d.trim().parse().map_err(|_| bad())?;
        let c = c.trim().parse().map_err(|_| bad())?;
        CurveSpec::new(d, c)
    }
}

/// Expands `mu^p prod (class_i mu + degree_i nu)` and replaces each
/// `mu^j nu^(D-j)` by `N(j, D-j)`.
pub fn zeuthen_transfer(
    table: &CharNumberTable,
    p: usize,
    curves: &[CurveSpec],
) -> Result<BigCount> {
    if p + curves.len() != table.dim() {
        return Err(Error::ArityMismatch {
            expected: table.dim(),
            found: p + curves.len(),
        });
    }
    // coefficients indexed by the power of mu
    let mut poly = vec![BigUint::zero(); table.dim() + 1];
    poly[p] = BigUint::one();
    for curve in curves {
        let mut next = vec![BigUint::zero(); poly.len()];
        for (j, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[j] += c * curve.degree;
            if j + 1 < next.len() {
                next[j + 1] += c * curve.class;
            }
        }
        poly = next;
    }
    Ok(poly
        .iter()
        .zip(table.entries())
        .map(|(c, n)| BigCount(c * &n.0))
        .sum())
}

fn check_dconed(d: u64, k: u64, n: u64) -> Result<()> {
    if n < 2 || d > n - 2 || k <= n {
        return Err(Error::OutOfRange(format!(
            "d-coned generic arrangement needs 0 <= d <= n - 2 and k > n, got d = {d}, k = {k}, n = {n}"
        )));
    }
    Ok(())
}

/// `(d+1)(n-d) + k(n-d-1)`: a d-plane in `G(d, n)` plus `k` points of `P^(n-d-1)`.
pub fn dconed_dim(d: u64, k: u64, n: u64) -> Result<u64> {
    check_dconed(d, k, n)?;
    Ok((d + 1) * (n - d) + k * (n - d - 1))
}

/// Pencils (0-coned generic arrangements) of `k >= n` hyperplanes:
/// `(kn+n-k)! / ((n!)^(n+1) (k-n)! ((n-1)!)^(k-n))`.
pub fn count_0coned(k: u64, n: u64) -> Result<BigCount> {
    if n < 2 || k < n {
        return Err(Error::OutOfRange(format!(
            "0-coned count needs k >= n >= 2, got k = {k}, n = {n}"
        )));
    }
    let top = factorial_count(k * n + n - k);
    let bottom = BigCount(
        factorial(n).pow((n + 1) as u32) * factorial(k - n) * factorial(n - 1).pow((k - n) as u32),
    );
    top.exact_div(&bottom)
}

/// All `(s_0, ..., s_{d+1})` with `sum s_i = k` and `sum i s_i = (d+1)(n-d)`,
/// in descending lexicographic order.
pub fn gamma_tuples(d: u64, k: u64, n: u64) -> Result<Vec<Vec<usize>>> {
    check_dconed(d, k, n)?;
    let len = (d + 2) as usize;
    let weight = ((d + 1) * (n - d)) as usize;
    let mut out = Vec::new();
    let mut current = vec![0usize; len];
    fill_gamma(len - 1, weight, k as usize, &mut current, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

fn fill_gamma(
    i: usize,
    weight: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if i == 0 {
        if weight == 0 {
            current[0] = remaining;
            out.push(current.clone());
        }
        return;
    }
    for s in 0..=remaining.min(weight / i) {
        current[i] = s;
        fill_gamma(i - 1, weight - i * s, remaining - s, current, out);
    }
    current[i] = 0;
}

/// One summand of the d-coned count, before division by `k!`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DconedTerm {
    pub s: Vec<usize>,
    pub schubert_degree: BigCount,
    pub labelings: BigCount,
    pub point_distributions: BigCount,
}

impl DconedTerm {
    pub fn value(&self) -> BigCount {
        &(&self.schubert_degree * &self.labelings) * &self.point_distributions
    }
}

/// The Γ-indexed summands of the d-coned count.
pub fn dconed_terms(d: u64, k: u64, n: u64) -> Result<Vec<DconedTerm>> {
    let dim = dconed_dim(d, k, n)?;
    let g = GrassmannianSpec::new(d as usize, n as usize)?;
    gamma_tuples(d, k, n)?
        .into_iter()
        .map(|s| {
            let degree = schubert_degree(g, &s)?;
            let k_parts: Vec<(u64, u64)> = s.iter().map(|&si| (si as u64, 1)).collect();
            // a hyperplane counted by s_i passes through n - d - 1 + i points
            let point_parts: Vec<(u64, u64)> = s
                .iter()
                .enumerate()
                .map(|(i, &si)| (n - d - 1 + i as u64, si as u64))
                .collect();
            Ok(DconedTerm {
                schubert_degree: degree,
                labelings: multinomial(k, &k_parts)?,
                point_distributions: multinomial(dim, &point_parts)?,
                s,
            })
        })
        .collect()
}

/// Degree of the moduli space of d-coned generic arrangements of `k`
/// hyperplanes in `P^n`.
pub fn count_dconed(d: u64, k: u64, n: u64) -> Result<BigCount> {
    let total: BigCount = dconed_terms(d, k, n)?.iter().map(DconedTerm::value).sum();
    total.exact_div(&factorial_count(k))
}

/// The count obtained by assuming `n - d` hyperplanes each contain `n` of
/// the points and the remaining ones `n - d - 1`. Agrees with
/// [`count_dconed`] for `d = 0` and undercounts for `d >= 1`.
pub fn naive_dconed_count(d: u64, k: u64, n: u64) -> Result<BigCount> {
    let dim = dconed_dim(d, k, n)?;
    let full = n - d;
    let labeled =
        &BigCount(binomial(k, full)) * &multinomial(dim, &[(n, full), (n - d - 1, k - full)])?;
    labeled.exact_div(&factorial_count(k))
}
