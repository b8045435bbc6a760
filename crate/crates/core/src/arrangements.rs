//! Hyperplane arrangements over the rationals, their intersection lattices,
//! and the multivariate Tutte polynomial.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::rational_rank;
use crate::textio::{end_of_input, format_rational, token_lines};

/// Largest arrangement accepted by the subset scan.
pub const MAX_LATTICE_HYPERPLANES: usize = 12;

/// `k` hyperplanes in `P^n`, each given by `n + 1` projective coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneArrangement {
    dim: usize,
    hyperplanes: Vec<Vec<BigRational>>,
}

impl HyperplaneArrangement {
    pub fn new(dim: usize, hyperplanes: Vec<Vec<BigRational>>) -> Result<Self> {
        if hyperplanes.is_empty() {
            return Err(Error::InvalidInput("arrangement has no hyperplanes".into()));
        }
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.len() != dim + 1 {
                return Err(Error::WrongCoordinateCount {
                    what: format!("hyperplane {i}"),
                    expected: dim + 1,
                    found: h.len(),
                });
            }
            if h.iter().all(Zero::is_zero) {
                return Err(Error::ZeroVector {
                    what: format!("hyperplane {i}"),
                });
            }
        }
        Ok(HyperplaneArrangement { dim, hyperplanes })
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_integers(dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            dim,
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| BigRational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Parses the arrangement file format: the ambient dimension `n` on the
    /// first line, then one hyperplane per line as `n + 1` rationals.
    pub fn parse(input: &str) -> Result<Self> {
        let lines = token_lines(input);
        let mut iter = lines.iter();
        let header = iter.next().ok_or_else(|| end_of_input(input))?;
        if header.len() != 1 {
            return Err(header[1]
                .error("expected the ambient dimension alone")
                .into());
        }
        let dim = header[0].parse_usize()?;
        let mut hyperplanes = Vec::new();
        for line in iter {
            if line.len() != dim + 1 {
                let tok = line.get(dim + 1).unwrap_or(&line[line.len() - 1]);
                return Err(tok
                    .error(format!(
                        "expected {} coefficients, found {}",
                        dim + 1,
                        line.len()
                    ))
                    .into());
            }
            let row = line
                .iter()
                .map(|t| t.parse_rational())
                .collect::<Result<Vec<_>, _>>()?;
            if row.iter().all(Zero::is_zero) {
                return Err(line[0].error("hyperplane coefficients are all zero").into());
            }
            hyperplanes.push(row);
        }
        Self::new(dim, hyperplanes)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Vec<BigRational>] {
        &self.hyperplanes
    }

    fn rank_of_mask(&self, mask: u32) -> usize {
        let rows: Vec<Vec<BigRational>> = (0..self.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.hyperplanes[i].clone())
            .collect();
        rational_rank(&rows)
    }
}

impl fmt::Display for HyperplaneArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.dim)?;
        for h in &self.hyperplanes {
            let row: Vec<String> = h.iter().map(format_rational).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A nonempty intersection, labeled by every hyperplane containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    pub hyperplanes: Vec<usize>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionLattice {
    ambient_dim: usize,
    hyperplane_count: usize,
    flats: Vec<Flat>,
}

impl IntersectionLattice {
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn hyperplane_count(&self) -> usize {
        self.hyperplane_count
    }

    pub fn flats_of_rank(&self, rank: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |f| f.rank == rank)
    }

    /// Codimension of the intersection of `subset`: the rank of its closure,
    /// or `n + 1` when the hyperplanes share no point.
    pub fn rank_of(&self, subset: &[usize]) -> usize {
        self.flats
            .iter()
            .filter(|f| subset.iter().all(|i| f.hyperplanes.contains(i)))
            .map(|f| f.rank)
            .min()
            .unwrap_or(self.ambient_dim + 1)
    }

    fn rank_of_mask(&self, mask: u32) -> usize {
        let members: Vec<usize> = (0..self.hyperplane_count)
            .filter(|i| mask >> i & 1 == 1)
            .collect();
        self.rank_of(&members)
    }
}

pub fn lattice_from_arrangement(a: &HyperplaneArrangement) -> Result<IntersectionLattice> {
    let k = a.len();
    if k > MAX_LATTICE_HYPERPLANES {
        return Err(Error::OutOfRange(format!(
            "lattice construction supports at most {MAX_LATTICE_HYPERPLANES} hyperplanes, got {k}"
        )));
    }
    let ranks: Vec<usize> = (0u32..1 << k).map(|mask| a.rank_of_mask(mask)).collect();
    let mut flats = Vec::new();
    for mask in 0u32..1 << k {
        let r = ranks[mask as usize];
        if r > a.dim() {
            continue;
        }
        // closed: adding any other hyperplane raises the rank
        let closed = (0..k)
            .filter(|i| mask >> i & 1 == 0)
            .all(|i| ranks[(mask | 1 << i) as usize] > r);
        if closed {
            flats.push(Flat {
                hyperplanes: (0..k).filter(|i| mask >> i & 1 == 1).collect(),
                rank: r,
            });
        }
    }
    flats.sort_by(|x, y| {
        x.rank
            .cmp(&y.rank)
            .then_with(|| x.hyperplanes.cmp(&y.hyperplanes))
    });
    Ok(IntersectionLattice {
        ambient_dim: a.dim(),
        hyperplane_count: k,
        flats,
    })
}

/// `k > n` and every `n + 1` of the coefficient vectors are independent.
pub fn is_generic(a: &HyperplaneArrangement) -> bool {
    let n = a.dim();
    let k = a.len();
    if k <= n {
        return false;
    }
    let mut chosen: Vec<usize> = (0..=n).collect();
    loop {
        let mask = chosen.iter().fold(0u64, |m, &i| m | 1 << i);
        let rows: Vec<Vec<BigRational>> = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| a.hyperplanes()[i].clone())
            .collect();
        if rational_rank(&rows) != n + 1 {
            return false;
        }
        let m = n + 1;
        let mut i = m;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if chosen[i] < k - m + i {
                chosen[i] += 1;
                for j in i + 1..m {
                    chosen[j] = chosen[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `Z(q, x) = sum over subsets B of q^{-rk(B)} prod_{j in B} x_j`, with
/// `rk(B)` the codimension of the intersection (`n + 1` if it is empty).
pub fn tutte_eval(
    l: &IntersectionLattice,
    q: &BigRational,
    xs: &[BigRational],
) -> Result<BigRational> {
    let k = l.hyperplane_count();
    if xs.len() != k {
        return Err(Error::ArityMismatch {
            expected: k,
            found: xs.len(),
        });
    }
    if q.is_zero() && k > 0 {
        return Err(Error::TuttePole);
    }
    let inv_q = if q.is_zero() {
        BigRational::one()
    } else {
        q.recip()
    };
    let max_rank = l.ambient_dim() + 1;
    let inv_q_powers: Vec<BigRational> =
        std::iter::successors(Some(BigRational::one()), |p| Some(p * &inv_q))
            .take(max_rank + 1)
            .collect();
    let mut total = BigRational::zero();
    for mask in 0u32..1 << k {
        let weight = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .fold(BigRational::one(), |acc, i| acc * &xs[i]);
        if weight.is_zero() {
            continue;
        }
        total += weight * &inv_q_powers[l.rank_of_mask(mask)];
    }
    Ok(total)
}
