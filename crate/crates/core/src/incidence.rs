//! Dimension of the point/hyperplane incidence correspondence.
//!
//! The virtual dimension assumes every incidence condition cuts the
//! parameter space `(P^n*)^l x (P^n)^k` once; the actual local dimension at
//! a realization comes from the rank of the differentials of the bilinear
//! conditions `<P_i, H_j> = 0`. The two disagree exactly when the conditions
//! are dependent, as for the Pappus configuration.
//!
//! The tangent-space rank gives the dimension of the correspondence at a
//! smooth point; at a singular point the estimate is only an upper bound.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::rational_rank;
use crate::textio::{end_of_input, format_rational, token_lines, Token};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceSpec {
    dim: usize,
    line_count: usize,
    point_count: usize,
    /// `(point, hyperplane)` pairs.
    incidences: BTreeSet<(usize, usize)>,
}

impl IncidenceSpec {
    pub fn new(
        dim: usize,
        line_count: usize,
        point_count: usize,
        incidences: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (p, h) in incidences {
            if p >= point_count || h >= line_count {
                return Err(Error::OutOfRange(format!(
                    "incidence ({p}, {h}) outside {point_count} points and {line_count} hyperplanes"
                )));
            }
            if !set.insert((p, h)) {
                return Err(Error::InvalidInput(format!(
                    "duplicate incidence ({p}, {h})"
                )));
            }
        }
        Ok(IncidenceSpec {
            dim,
            line_count,
            point_count,
            incidences: set,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn line_count(&self) -> usize {
        self.line_count
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn incidences(&self) -> &BTreeSet<(usize, usize)> {
        &self.incidences
    }

    /// Parses `n N`, `lines L`, `points K`, then one `point hyperplane` pair per line.
    pub fn parse(input: &str) -> Result<Self> {
        let lines = token_lines(input);
        let mut iter = lines.iter();
        let mut header = |key: &str| -> Result<usize> {
            let line = iter.next().ok_or_else(|| end_of_input(input))?;
            if line.len() != 2 || line[0].text != key {
                return Err(line[0].error(format!("expected `{key} <count>`")).into());
            }
            Ok(line[1].parse_usize()?)
        };
        let dim = header("n")?;
        let line_count = header("lines")?;
        let point_count = header("points")?;
        let mut incidences = BTreeSet::new();
        for line in iter {
            if line.len() != 2 {
                return Err(line[0].error("expected `point hyperplane`").into());
            }
            let p = line[0].parse_usize()?;
            let h = line[1].parse_usize()?;
            if p >= point_count {
                return Err(line[0]
                    .error(format!("point index {p} out of range"))
                    .into());
            }
            if h >= line_count {
                return Err(line[1]
                    .error(format!("hyperplane index {h} out of range"))
                    .into());
            }
            if !incidences.insert((p, h)) {
                return Err(line[0].error("duplicate incidence").into());
            }
        }
        Ok(IncidenceSpec {
            dim,
            line_count,
            point_count,
            incidences,
        })
    }
}

impl fmt::Display for IncidenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.dim)?;
        writeln!(f, "lines {}", self.line_count)?;
        writeln!(f, "points {}", self.point_count)?;
        for (p, h) in &self.incidences {
            writeln!(f, "{p} {h}")?;
        }
        Ok(())
    }
}

/// Exact coordinates for every hyperplane and point of an [`IncidenceSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub hyperplanes: Vec<Vec<BigRational>>,
    pub points: Vec<Vec<BigRational>>,
}

impl Realization {
    /// Parses lines of the form `hyperplane c0 .. cn` and `point c0 .. cn`,
    /// each group in index order.
    pub fn parse(input: &str) -> Result<Self> {
        let mut hyperplanes = Vec::new();
        let mut points = Vec::new();
        for line in token_lines(input) {
            let coords = line[1..]
                .iter()
                .map(Token::parse_rational)
                .collect::<Result<Vec<_>, _>>()?;
            match line[0].text {
                "hyperplane" => hyperplanes.push(coords),
                "point" => points.push(coords),
                other => {
                    return Err(line[0]
                        .error(format!("expected `hyperplane` or `point`, found `{other}`"))
                        .into())
                }
            }
        }
        Ok(Realization {
            hyperplanes,
            points,
        })
    }

    /// Multiplies one vector by a nonzero scalar; the projective point is unchanged.
    pub fn rescaled(
        &self,
        hyperplane: Option<usize>,
        point: Option<usize>,
        by: &BigRational,
    ) -> Self {
        let mut out = self.clone();
        if let Some(j) = hyperplane {
            out.hyperplanes[j].iter_mut().for_each(|c| *c *= by);
        }
        if let Some(i) = point {
            out.points[i].iter_mut().for_each(|c| *c *= by);
        }
        out
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (kind, vectors) in [("hyperplane", &self.hyperplanes), ("point", &self.points)] {
            for v in vectors {
                let coords: Vec<String> = v.iter().map(format_rational).collect();
                writeln!(f, "{kind} {}", coords.join(" "))?;
            }
        }
        Ok(())
    }
}

/// `n (k + l) - |incidences|`.
pub fn virtual_dimension(spec: &IncidenceSpec) -> i64 {
    (spec.dim * (spec.point_count + spec.line_count)) as i64 - spec.incidences.len() as i64
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dehomogenizes at the largest-magnitude coordinate (first one on ties).
fn affine_chart(v: &[BigRational]) -> (Vec<BigRational>, usize) {
    let mut best = 0;
    for (i, c) in v.iter().enumerate() {
        if c.abs() > v[best].abs() {
            best = i;
        }
    }
    let pivot = v[best].clone();
    (v.iter().map(|c| c / &pivot).collect(), best)
}

fn validate(spec: &IncidenceSpec, r: &Realization) -> Result<()> {
    let width = spec.dim + 1;
    for (what, vectors, expected) in [
        ("hyperplane", &r.hyperplanes, spec.line_count),
        ("point", &r.points, spec.point_count),
    ] {
        if vectors.len() != expected {
            return Err(Error::ArityMismatch {
                expected,
                found: vectors.len(),
            });
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != width {
                return Err(Error::WrongCoordinateCount {
                    what: format!("{what} {i}"),
                    expected: width,
                    found: v.len(),
                });
            }
            if v.iter().all(Zero::is_zero) {
                return Err(Error::ZeroVector {
                    what: format!("{what} {i}"),
                });
            }
        }
    }
    for &(p, h) in &spec.incidences {
        if !dot(&r.points[p], &r.hyperplanes[h]).is_zero() {
            return Err(Error::IncidenceViolated {
                point: p,
                hyperplane: h,
            });
        }
    }
    Ok(())
}

/// Rank of the Jacobian of all incidence conditions in affine-chart coordinates.
pub fn jacobian_rank(spec: &IncidenceSpec, r: &Realization) -> Result<usize> {
    validate(spec, r)?;
    let n = spec.dim;
    let hyper: Vec<_> = r.hyperplanes.iter().map(|v| affine_chart(v)).collect();
    let points: Vec<_> = r.points.iter().map(|v| affine_chart(v)).collect();
    let columns = n * (spec.line_count + spec.point_count);
    let point_offset = n * spec.line_count;

    // column index of free coordinate t of a vector whose chart fixes `fixed`
    let free_index = |t: usize, fixed: usize| if t < fixed { t } else { t - 1 };

    let mut rows = Vec::with_capacity(spec.incidences.len());
    for &(i, j) in &spec.incidences {
        let mut row = vec![BigRational::zero(); columns];
        let (h, h_fixed) = &hyper[j];
        let (p, p_fixed) = &points[i];
        for t in (0..=n).filter(|t| t != h_fixed) {
            row[j * n + free_index(t, *h_fixed)] = p[t].clone();
        }
        for t in (0..=n).filter(|t| t != p_fixed) {
            row[point_offset + i * n + free_index(t, *p_fixed)] = h[t].clone();
        }
        rows.push(row);
    }
    Ok(rational_rank(&rows))
}

/// `n (k + l) - jacobian_rank`: the local dimension of the correspondence
/// at `r` when `r` is a smooth point.
pub fn moduli_dimension_estimate(spec: &IncidenceSpec, r: &Realization) -> Result<i64> {
    let rank = jacobian_rank(spec, r)?;
    Ok((spec.dim * (spec.point_count + spec.line_count)) as i64 - rank as i64)
}

fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    let v = [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ];
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        v
    } else {
        v.map(|x| x / &g)
    }
}

fn along(base: [i64; 3], dir: [i64; 3], t: i64) -> [BigInt; 3] {
    [0, 1, 2].map(|i| BigInt::from(base[i] + t * dir[i]))
}

/// The Pappus configuration: 9 lines, 9 points, 27 incidences.
///
/// Points `A_0..A_2` lie on a line `g` and `B_0..B_2` on a line `h`;
/// `C_ij = A_iB_j ∩ A_jB_i` for `i < j` are collinear. Point indices:
/// `0..3` = A, `3..6` = B, `6..9` = C_01, C_02, C_12. Line indices:
/// `0` = g, `1` = h, `2..8` = A_iB_j for (0,1),(0,2),(1,0),(1,2),(2,0),(2,1),
/// `8` = the line through the C points.
pub fn pappus_realization() -> (IncidenceSpec, Realization) {
    let a: Vec<_> = [1, 3, -2]
        .iter()
        .map(|&t| along([1, 0, 2], [0, 1, -1], t))
        .collect();
    let b: Vec<_> = [2, -1, 5]
        .iter()
        .map(|&t| along([2, 1, 0], [1, -1, 3], t))
        .collect();
    let pairs = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
    let joins: Vec<[BigInt; 3]> = pairs.iter().map(|&(i, j)| cross(&a[i], &b[j])).collect();
    let join = |i: usize, j: usize| &joins[pairs.iter().position(|&p| p == (i, j)).unwrap()];
    let c: Vec<[BigInt; 3]> = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| cross(join(i, j), join(j, i)))
        .collect();

    let mut lines = vec![cross(&a[0], &a[1]), cross(&b[0], &b[1])];
    lines.extend(joins.iter().cloned());
    lines.push(cross(&c[0], &c[1]));

    let mut incidences = Vec::new();
    for i in 0..3 {
        incidences.push((i, 0));
        incidences.push((3 + i, 1));
    }
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        incidences.push((i, 2 + idx));
        incidences.push((3 + j, 2 + idx));
    }
    for (ci, &(i, j)) in [(0, 1), (0, 2), (1, 2)].iter().enumerate() {
        let pos = |p: (usize, usize)| 2 + pairs.iter().position(|&q| q == p).unwrap();
        incidences.push((6 + ci, pos((i, j))));
        incidences.push((6 + ci, pos((j, i))));
        incidences.push((6 + ci, 8));
    }

    let to_q = |v: &[BigInt; 3]| {
        v.iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect()
    };
    let realization = Realization {
        hyperplanes: lines.iter().map(to_q).collect(),
        points: a.iter().chain(&b).chain(&c).map(to_q).collect(),
    };
    let spec = IncidenceSpec::new(2, 9, 9, incidences).expect("Pappus incidences are valid");
    (spec, realization)
}
