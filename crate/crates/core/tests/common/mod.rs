//! Independent oracles used by the integration tests. Nothing here calls the
//! code path it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |a, i| a * i)
}

/// Standard Young tableaux of a `rows x cols` rectangle by the hook-length formula.
pub fn syt_rectangle(rows: usize, cols: usize) -> BigUint {
    let mut hooks = BigUint::one();
    for i in 0..rows {
        for j in 0..cols {
            hooks *= ((rows - i - 1) + (cols - j - 1) + 1) as u64;
        }
    }
    factorial((rows * cols) as u64) / hooks
}

/// Shifted Catalan `binom(2N-2, N-1) / N` from factorials.
pub fn catalan(n: u64) -> BigUint {
    factorial(2 * n - 2) / (factorial(n - 1) * factorial(n - 1)) / n
}

pub fn double_factorial_odd(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |a, i| a * (2 * i - 1))
}

/// All partitions with at most `rows` parts, each at most `cols`.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == rows {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max {
            cur.push(v);
            go(rows, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Partitions obtained from `lambda` by adding a single box, inside the box.
pub fn add_one_box(lambda: &[usize], cols: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for r in 0..lambda.len() {
        let mut mu = lambda.to_vec();
        mu[r] += 1;
        let shape_ok = mu[r] <= cols && (r == 0 || mu[r - 1] >= mu[r]);
        if shape_ok {
            out.insert(mu);
        }
    }
    out
}

/// Plain Gauss-Jordan rank over the rationals (no fraction-free tricks).
pub fn gauss_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        let prow: Vec<BigRational> = m[rank].iter().map(|x| x / &pivot).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        m[rank] = prow;
        rank += 1;
    }
    rank
}

/// Dense truncated polynomial: coefficients indexed by mixed-radix exponent vectors.
#[derive(Debug, Clone)]
pub struct Dense {
    pub caps: Vec<u32>,
    pub coeffs: Vec<BigInt>,
}

impl Dense {
    pub fn zero(caps: &[u32]) -> Self {
        let size = caps.iter().map(|&c| c as usize + 1).product();
        Dense {
            caps: caps.to_vec(),
            coeffs: vec![BigInt::zero(); size],
        }
    }

    pub fn index(&self, exps: &[u32]) -> usize {
        let mut idx = 0;
        for (e, c) in exps.iter().zip(&self.caps) {
            idx = idx * (*c as usize + 1) + *e as usize;
        }
        idx
    }

    pub fn exps(&self, mut idx: usize) -> Vec<u32> {
        let mut out = vec![0; self.caps.len()];
        for i in (0..self.caps.len()).rev() {
            let base = self.caps[i] as usize + 1;
            out[i] = (idx % base) as u32;
            idx /= base;
        }
        out
    }

    pub fn from_terms(caps: &[u32], terms: &[(Vec<u32>, i64)]) -> Self {
        let mut d = Dense::zero(caps);
        for (e, c) in terms {
            let i = d.index(e);
            d.coeffs[i] += *c;
        }
        d
    }

    pub fn mul(&self, other: &Dense) -> Dense {
        let mut out = Dense::zero(&self.caps);
        for i in 0..self.coeffs.len() {
            if self.coeffs[i].is_zero() {
                continue;
            }
            let a = self.exps(i);
            for j in 0..other.coeffs.len() {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let b = other.exps(j);
                let sum: Vec<u32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                if sum.iter().zip(&self.caps).all(|(s, c)| s <= c) {
                    let k = out.index(&sum);
                    out.coeffs[k] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        out
    }
}

/// Variable order of the three-line incidence ring: x1 x2 x3 y12 y13 y23.
pub const X: [usize; 3] = [0, 1, 2];

fn y(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 3,
        (0, 2) => 4,
        (1, 2) => 5,
        _ => unreachable!(),
    }
}

pub type Mono = [u32; 6];

fn mono(factors: &[(usize, u32)]) -> Mono {
    let mut m = [0; 6];
    for &(v, e) in factors {
        m[v] += e;
    }
    m
}

/// Relabels lines by `perm` (acting on x_i and y_ij together).
fn permute(m: &Mono, perm: &[usize; 3]) -> Mono {
    let mut out = [0; 6];
    for i in 0..3 {
        out[perm[i]] = m[i];
        for j in i + 1..3 {
            out[y(perm[i], perm[j])] = m[y(i, j)];
        }
    }
    out
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn orbit(seeds: &[Mono]) -> BTreeSet<Mono> {
    seeds
        .iter()
        .flat_map(|m| PERMS.iter().map(move |p| permute(m, p)))
        .collect()
}

/// Degree-`deg` monomials (exponents <= 2) in the given variables.
fn monomials_in(vars: &[usize], deg: u32) -> Vec<Mono> {
    fn go(vars: &[usize], deg: u32, cur: &mut Mono, out: &mut Vec<Mono>) {
        match vars.split_first() {
            None => {
                if deg == 0 {
                    out.push(*cur);
                }
            }
            Some((&v, rest)) => {
                for e in 0..=deg.min(2) {
                    cur[v] = e;
                    go(rest, deg - e, cur, out);
                }
                cur[v] = 0;
            }
        }
    }
    let mut out = Vec::new();
    go(vars, deg, &mut [0; 6], &mut out);
    out
}

fn times(a: &Mono, b: &Mono) -> Mono {
    let mut m = [0; 6];
    for i in 0..6 {
        m[i] = a[i] + b[i];
    }
    m
}

fn others(excluded: &[usize]) -> Vec<usize> {
    (0..6).filter(|v| !excluded.contains(v)).collect()
}

/// The zero-coefficient families T1..T4 of the three-line incidence class.
pub fn t_types() -> Vec<BTreeSet<Mono>> {
    let (x1, x2) = (X[0], X[1]);
    let y12 = y(0, 1);
    let y13 = y(0, 2);
    let y23 = y(1, 2);
    let t1: Vec<Mono> = monomials_in(&others(&[x1, y12]), 2)
        .iter()
        .map(|p| times(&mono(&[(x1, 2), (y12, 2)]), p))
        .collect();
    let t2: Vec<Mono> = monomials_in(&others(&[x1, x2, y12]), 1)
        .iter()
        .map(|p| times(&mono(&[(x1, 2), (x2, 2), (y12, 1)]), p))
        .collect();
    let t3: Vec<Mono> = monomials_in(&others(&[x1, y12, y13]), 1)
        .iter()
        .map(|p| times(&mono(&[(x1, 1), (y12, 2), (y13, 2)]), p))
        .collect();
    let t4 = vec![mono(&[(x1, 2), (y23, 2), (x2, 1), (y12, 1)])];
    vec![orbit(&t1), orbit(&t2), orbit(&t3), orbit(&t4)]
}

/// The coefficient-one families S1..S15, each the orbit of one representative.
pub fn s_types() -> Vec<BTreeSet<Mono>> {
    let (x1, x2, x3) = (X[0], X[1], X[2]);
    let (y12, y13, y23) = (y(0, 1), y(0, 2), y(1, 2));
    let reps: Vec<Mono> = vec![
        mono(&[(x1, 2), (x2, 2), (x3, 2)]),
        mono(&[(x1, 2), (x2, 2), (x3, 1), (y13, 1)]),
        mono(&[(x1, 2), (x2, 2), (y13, 1), (y23, 1)]),
        mono(&[(x1, 2), (x2, 1), (x3, 1), (y23, 2)]),
        mono(&[(x1, 2), (x2, 1), (x3, 1), (y12, 1), (y13, 1)]),
        mono(&[(x1, 2), (x2, 1), (x3, 1), (y12, 1), (y23, 1)]),
        mono(&[(x1, 2), (x2, 1), (y13, 1), (y23, 2)]),
        mono(&[(x1, 2), (x2, 1), (y12, 1), (y13, 1), (y23, 1)]),
        mono(&[(x1, 2), (y23, 2), (y12, 1), (y13, 1)]),
        mono(&[(x1, 1), (x2, 1), (x3, 1), (y12, 2), (y13, 1)]),
        mono(&[(x1, 1), (x2, 1), (y12, 2), (y13, 1), (y23, 1)]),
        mono(&[(x1, 1), (x2, 1), (y12, 1), (y13, 2), (y23, 1)]),
        mono(&[(x1, 1), (x2, 1), (y13, 2), (y23, 2)]),
        mono(&[(x1, 1), (y12, 2), (y13, 1), (y23, 2)]),
        mono(&[(y12, 2), (y13, 2), (y23, 2)]),
    ];
    reps.iter().map(|r| orbit(&[*r])).collect()
}

pub fn z3() -> Mono {
    [1; 6]
}

/// Every degree-6 monomial of the three-line ring (caps 2).
pub fn all_degree_six() -> BTreeSet<Mono> {
    monomials_in(&[0, 1, 2, 3, 4, 5], 6).into_iter().collect()
}

pub fn mono_text(m: &Mono) -> String {
    const NAMES: [&str; 6] = ["x1", "x2", "x3", "y12", "y13", "y23"];
    let parts: Vec<String> = m
        .iter()
        .zip(NAMES)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| {
            if *e == 1 {
                n.to_string()
            } else {
                format!("{n}^{e}")
            }
        })
        .collect();
    parts.join("*")
}

/// Term-by-term evaluation of the d = 1 coned count using Catalan numbers for
/// the Schubert degrees (lines in P^(n - s2) meeting s1 codim-2 planes).
pub fn dconed_d1_oracle(k: u64, n: u64) -> BigUint {
    let dim = 2 * (n - 1) + k * (n - 2);
    let weight = 2 * (n - 1);
    let mut total = BigUint::zero();
    for s2 in 0..=k {
        if 2 * s2 > weight {
            break;
        }
        let s1 = weight - 2 * s2;
        if s1 + s2 > k {
            continue;
        }
        let s0 = k - s1 - s2;
        let sigma = catalan(n - s2);
        let labelings = factorial(k) / (factorial(s0) * factorial(s1) * factorial(s2));
        let points = factorial(dim)
            / (factorial(n - 2).pow(s0 as u32)
                * factorial(n - 1).pow(s1 as u32)
                * factorial(n).pow(s2 as u32));
        total += sigma * labelings * points;
    }
    total / factorial(k)
}

pub type Terms = Vec<(Vec<u32>, i64)>;

/// Random truncated ring (1 to 4 variables, caps up to 3) with three
/// sparse polynomials over it.
pub fn ring_case() -> impl proptest::strategy::Strategy<Value = (Vec<u32>, [Terms; 3])> {
    use proptest::prelude::*;
    prop::collection::vec(0u32..=3, 1..=4).prop_flat_map(|caps| {
        let exps: Vec<std::ops::RangeInclusive<u32>> = caps.iter().map(|&c| 0..=c).collect();
        let terms = prop::collection::vec((exps, -5i64..=5), 0..=6);
        (Just(caps), [terms.clone(), terms.clone(), terms])
    })
}
