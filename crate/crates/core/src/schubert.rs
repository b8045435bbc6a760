//! Schubert calculus on the Grassmannian `G(d, n)` of projective `d`-planes
//! in `P^n`, restricted to products of the special classes `sigma_{1^m}`.
//!
//! Classes are indexed by partitions in a `(d+1) x (n-d)` box; multiplying by
//! `sigma_{1^m}` adds a vertical strip of `m` boxes (dual Pieri rule).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::enumeration::{binomial, BigCount};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannianSpec {
    d: usize,
    n: usize,
}

impl GrassmannianSpec {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if d >= n {
            return Err(Error::OutOfRange(format!(
                "G(d, n) needs 0 <= d < n, got d = {d}, n = {n}"
            )));
        }
        Ok(GrassmannianSpec { d, n })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.d + 1
    }

    pub fn cols(&self) -> usize {
        self.n - self.d
    }

    pub fn dim(&self) -> usize {
        self.rows() * self.cols()
    }

    pub fn identity(&self) -> Partition {
        Partition(vec![0; self.rows()])
    }

    pub fn point_class(&self) -> Partition {
        Partition(vec![self.cols(); self.rows()])
    }

    fn check(&self, p: &Partition) -> Result<()> {
        if p.0.len() != self.rows() || p.0.first().is_some_and(|&a| a > self.cols()) {
            return Err(Error::PartitionOutsideBox(format!(
                "{p} in {}x{}",
                self.rows(),
                self.cols()
            )));
        }
        Ok(())
    }
}

/// Nonincreasing parts `(a_0, ..., a_d)`, trailing zeros kept explicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "partition parts must be nonincreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// `1^m` padded with zeros to `len` parts.
    pub fn column(m: usize, len: usize) -> Self {
        Partition((0..len).map(|i| usize::from(i < m)).collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad partition part `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Linear combination of Schubert classes with positive coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertExpansion {
    grassmannian: GrassmannianSpec,
    terms: BTreeMap<Partition, BigUint>,
}

impl SchubertExpansion {
    pub fn single(g: GrassmannianSpec, p: Partition) -> Result<Self> {
        g.check(&p)?;
        Ok(SchubertExpansion {
            grassmannian: g,
            terms: BTreeMap::from([(p, BigUint::one())]),
        })
    }

    pub fn grassmannian(&self) -> GrassmannianSpec {
        self.grassmannian
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Partition) -> BigUint {
        self.terms.get(p).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Multiplies every term by `sigma_{1^m}`.
    pub fn times_special(&self, m: usize) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (lambda, c) in &self.terms {
            for mu in vertical_strips(self.grassmannian, lambda, m) {
                *terms.entry(mu).or_insert_with(BigUint::zero) += c;
            }
        }
        Ok(SchubertExpansion {
            grassmannian: self.grassmannian,
            terms,
        })
    }
}

impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}*sigma({p})")?;
        }
        Ok(())
    }
}

/// Partitions `mu` in the box with `mu / lambda` a vertical strip of size `m`.
fn vertical_strips(g: GrassmannianSpec, lambda: &Partition, m: usize) -> Vec<Partition> {
    let rows = g.rows();
    let cols = g.cols();
    let mut out = Vec::new();
    // Choose the rows receiving a box: combinations of m out of `rows`.
    let mut chosen: Vec<usize> = (0..m).collect();
    if m > rows {
        return out;
    }
    loop {
        let mut mu = lambda.0.clone();
        for &r in &chosen {
            mu[r] += 1;
        }
        if mu[0] <= cols && mu.windows(2).all(|w| w[0] >= w[1]) {
            out.push(Partition(mu));
        }
        // next combination
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if chosen[i] < rows - m + i {
                chosen[i] += 1;
                for j in i + 1..m {
                    chosen[j] = chosen[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn pieri_vertical(
    g: GrassmannianSpec,
    lambda: &Partition,
    m: usize,
) -> Result<SchubertExpansion> {
    if m > g.rows() {
        return Err(Error::OutOfRange(format!(
            "sigma_(1^{m}) needs m <= {} on G({}, {})",
            g.rows(),
            g.d,
            g.n
        )));
    }
    SchubertExpansion::single(g, lambda.clone())?.times_special(m)
}

/// Degree of `sigma_0^{s_0} sigma_1^{s_1} sigma_{1^2}^{s_2} ... sigma_{1^{d+1}}^{s_{d+1}}`.
pub fn schubert_degree(g: GrassmannianSpec, s: &[usize]) -> Result<BigCount> {
    if s.len() != g.rows() + 1 {
        return Err(Error::ArityMismatch {
            expected: g.rows() + 1,
            found: s.len(),
        });
    }
    let weight: usize = s.iter().enumerate().map(|(i, &si)| i * si).sum();
    if weight != g.dim() {
        return Err(Error::DegreeMismatch {
            expected: g.dim() as u64,
            found: weight as u64,
        });
    }
    let mut acc = SchubertExpansion::single(g, g.identity())?;
    for (m, &count) in s.iter().enumerate().skip(1) {
        for _ in 0..count {
            acc = acc.times_special(m)?;
        }
    }
    Ok(BigCount::from(acc.coefficient(&g.point_class())))
}

/// Shifted Catalan number `C_N = binom(2N-2, N-1) / N`, so `C_1 = 1, C_3 = 2`.
pub fn catalan(n: u64) -> Result<BigCount> {
    if n < 1 {
        return Err(Error::OutOfRange("catalan index must be >= 1".into()));
    }
    let b = binomial(2 * n - 2, n - 1);
    BigCount::from(b).exact_div(&BigCount::from(n))
}

/// The partition `r((n-d)^{d+1} - alpha)` pairing with `alpha` to the point class.
pub fn duality_partner(g: GrassmannianSpec, alpha: &Partition) -> Result<Partition> {
    g.check(alpha)?;
    Ok(Partition(
        alpha.0.iter().rev().map(|&a| g.cols() - a).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn pieri_examples() {
        let g = GrassmannianSpec::new(1, 3).unwrap();
        let e = pieri_vertical(g, &p(&[0, 0]), 1).unwrap();
        assert_eq!(e.to_string(), "1*sigma(1,0)");
        let e = pieri_vertical(g, &p(&[1, 0]), 1).unwrap();
        assert_eq!(e.to_string(), "1*sigma(2,0)+1*sigma(1,1)");
        assert!(pieri_vertical(g, &p(&[2, 2]), 1).unwrap().is_empty());
        assert!(pieri_vertical(g, &p(&[0, 0]), 3).is_err());
        assert!(pieri_vertical(g, &p(&[3, 0]), 1).is_err());
        assert_eq!(
            pieri_vertical(g, &p(&[0, 0]), 2).unwrap().to_string(),
            "1*sigma(1,1)"
        );
    }

    #[test]
    fn degrees() {
        let g = GrassmannianSpec::new(1, 3).unwrap();
        assert_eq!(schubert_degree(g, &[0, 4, 0]).unwrap().to_string(), "2");
        for n in 1..6 {
            let g = GrassmannianSpec::new(0, n).unwrap();
            assert_eq!(schubert_degree(g, &[2, n]).unwrap().to_string(), "1");
        }
        let g = GrassmannianSpec::new(1, 5).unwrap();
        assert_eq!(schubert_degree(g, &[1, 8, 0]).unwrap().to_string(), "14");
        assert_eq!(schubert_degree(g, &[2, 6, 1]).unwrap().to_string(), "5");
        assert_eq!(schubert_degree(g, &[3, 4, 2]).unwrap().to_string(), "2");
        assert!(matches!(
            schubert_degree(g, &[0, 7, 0]),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            schubert_degree(g, &[0, 8]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn top_column_power_is_one() {
        for n in 2..6 {
            for d in 0..n {
                let g = GrassmannianSpec::new(d, n).unwrap();
                let mut s = vec![0; d + 2];
                s[d + 1] = n - d;
                assert_eq!(schubert_degree(g, &s).unwrap(), BigCount::from(1u32));
            }
        }
    }

    #[test]
    fn catalan_values() {
        let vals: Vec<String> = (1..=6).map(|n| catalan(n).unwrap().to_string()).collect();
        assert_eq!(vals, ["1", "1", "2", "5", "14", "42"]);
        assert!(catalan(0).is_err());
    }

    #[test]
    fn duality() {
        let g = GrassmannianSpec::new(1, 3).unwrap();
        assert_eq!(duality_partner(g, &p(&[0, 0])).unwrap(), p(&[2, 2]));
        assert_eq!(duality_partner(g, &p(&[2, 1])).unwrap(), p(&[1, 0]));
        let g = GrassmannianSpec::new(2, 4).unwrap();
        assert_eq!(duality_partner(g, &p(&[2, 2, 2])).unwrap(), p(&[0, 0, 0]));
        assert!(duality_partner(g, &p(&[1, 0])).is_err());
    }

    #[test]
    fn column_partner_pairs_to_point() {
        // When the partner of alpha is a column 1^j, sigma_alpha * sigma_{1^j} is the point class.
        let g = GrassmannianSpec::new(2, 4).unwrap();
        for alpha in [p(&[2, 2, 1]), p(&[2, 1, 1]), p(&[1, 1, 1]), p(&[2, 2, 2])] {
            let partner = duality_partner(g, &alpha).unwrap();
            let j = partner.weight();
            assert_eq!(partner, Partition::column(j, 3));
            let e = pieri_vertical(g, &alpha, j).unwrap();
            assert_eq!(e.coefficient(&g.point_class()), BigUint::one());
            assert_eq!(e.terms().count(), 1);
        }
    }

    #[test]
    fn partition_text() {
        let q: Partition = "3,1,0".parse().unwrap();
        assert_eq!(q.to_string(), "3,1,0");
        assert!("1,2".parse::<Partition>().is_err());
    }
}
