//! Sparse polynomials in `Z[v_1..v_m] / (v_1^(c_1+1), ..., v_m^(c_m+1))`,
//! the Chow ring of a product of projective spaces `P^c_1 x ... x P^c_m`.
//!
//! Monomials that overflow a cap are dropped as soon as they are produced,
//! so stored terms always lie inside the box `[0, c_1] x ... x [0, c_m]`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    variables: Vec<String>,
    caps: Vec<u32>,
}

impl RingSpec {
    pub fn new<S: AsRef<str>>(variables: &[S], caps: &[i64]) -> Result<Arc<RingSpec>> {
        if variables.len() != caps.len() {
            return Err(Error::LengthMismatch {
                variables: variables.len(),
                caps: caps.len(),
            });
        }
        if variables.is_empty() {
            return Err(Error::EmptyRing);
        }
        let mut names: Vec<String> = Vec::with_capacity(variables.len());
        let mut checked_caps = Vec::with_capacity(caps.len());
        for (name, &cap) in variables.iter().zip(caps) {
            let name = name.as_ref();
            if names.iter().any(|n| n == name) {
                return Err(Error::DuplicateVariable(name.to_string()));
            }
            if cap < 0 || cap > u32::MAX as i64 {
                return Err(Error::NegativeCap {
                    variable: name.to_string(),
                    cap,
                });
            }
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidInput(format!(
                    "variable identifier `{name}` must be nonempty alphanumeric"
                )));
            }
            names.push(name.to_string());
            checked_caps.push(cap as u32);
        }
        Ok(Arc::new(RingSpec {
            variables: names,
            caps: checked_caps,
        }))
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn len(&self) -> usize {
        self.variables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variables.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Sum of the caps: the degree of the point class.
    pub fn top_degree(&self) -> u64 {
        self.caps.iter().map(|&c| c as u64).sum()
    }

    /// The monomial with every exponent at its cap (class of a point).
    pub fn top_monomial(&self) -> Monomial {
        Monomial(self.caps.clone())
    }

    fn check(&self, m: &Monomial) -> Result<()> {
        if m.0.len() != self.len() {
            return Err(Error::MonomialArity {
                expected: self.len(),
                found: m.0.len(),
            });
        }
        for ((&e, &cap), name) in m.0.iter().zip(&self.caps).zip(&self.variables) {
            if e > cap {
                return Err(Error::ExponentExceedsCap {
                    variable: name.clone(),
                    exponent: e,
                    cap,
                });
            }
        }
        Ok(())
    }

    /// Parses `x1^2*y12` (or `1` for the unit monomial) against this ring.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let mut exps = vec![0u32; self.len()];
        let text = text.trim();
        if text != "1" {
            for factor in text.split('*') {
                let factor = factor.trim();
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let e = e.trim().parse::<u32>().map_err(|_| {
                            Error::InvalidInput(format!("bad exponent in `{factor}`"))
                        })?;
                        (n.trim(), e)
                    }
                    None => (factor, 1),
                };
                let idx = self.index_of(name)?;
                exps[idx] += exp;
            }
        }
        let m = Monomial(exps);
        self.check(&m)?;
        Ok(m)
    }
}

/// Exponent vector, one entry per ring variable. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn unit(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn times(&self, other: &Monomial, caps: &[u32]) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for ((&a, &b), &cap) in self.0.iter().zip(&other.0).zip(caps) {
            let e = a + b;
            if e > cap {
                return None;
            }
            out.push(e);
        }
        Some(Monomial(out))
    }

    /// The unique monomial `c` with `self * c` equal to the top monomial.
    fn complement(&self, caps: &[u32]) -> Monomial {
        Monomial(self.0.iter().zip(caps).map(|(&e, &c)| c - e).collect())
    }

    fn write(&self, ring: &RingSpec, f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (e, name) in self.0.iter().zip(&ring.variables) {
            match *e {
                0 => continue,
                1 => write!(f, "{}{name}", if first { "" } else { "*" })?,
                e => write!(f, "{}{name}^{e}", if first { "" } else { "*" })?,
            }
            first = false;
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }

    pub fn display<'a>(&'a self, ring: &'a RingSpec) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Monomial, &'a RingSpec);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.write(self.1, f)
            }
        }
        D(self, ring)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    ring: Arc<RingSpec>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncatedPolynomial {
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        TruncatedPolynomial {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        Self::constant(ring, BigInt::one())
    }

    pub fn constant(ring: &Arc<RingSpec>, c: BigInt) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(ring.len()), c);
        }
        p
    }

    pub fn variable(ring: &Arc<RingSpec>, name: &str) -> Result<Self> {
        let idx = ring.index_of(name)?;
        let mut exps = vec![0; ring.len()];
        exps[idx] = 1;
        Ok(Self::monomial(ring, Monomial(exps), BigInt::one()))
    }

    /// `coeff * m`; zero if `m` overflows a cap. Panics on arity mismatch.
    pub fn monomial(ring: &Arc<RingSpec>, m: Monomial, coeff: BigInt) -> Self {
        assert_eq!(m.0.len(), ring.len(), "monomial arity does not match ring");
        let mut p = Self::zero(ring);
        if !coeff.is_zero() && m.0.iter().zip(&ring.caps).all(|(e, c)| e <= c) {
            p.terms.insert(m, coeff);
        }
        p
    }

    /// Sum of the named variables.
    pub fn sum_of_variables<S: AsRef<str>>(ring: &Arc<RingSpec>, names: &[S]) -> Result<Self> {
        let mut p = Self::zero(ring);
        for name in names {
            p = p.try_add(&Self::variable(ring, name.as_ref())?)?;
        }
        Ok(p)
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m, c);
        }
        Ok(TruncatedPolynomial {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let caps = &self.ring.caps;
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some(m) = ma.times(mb, caps) {
                    *acc.entry(m).or_insert_with(BigInt::zero) += ca * cb;
                }
            }
        }
        Ok(TruncatedPolynomial {
            ring: Arc::clone(&self.ring),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Result<BigInt> {
        self.ring.check(m)?;
        Ok(self.terms.get(m).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Coefficient of the point class (every exponent at its cap).
    pub fn chow_degree(&self) -> BigInt {
        self.terms
            .get(&self.ring.top_monomial())
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// `chow_degree(self * other)` without materializing the product.
    pub fn degree_of_product(&self, other: &Self) -> Result<BigInt> {
        self.same_ring(other)?;
        let caps = &self.ring.caps;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut total = BigInt::zero();
        for (m, c) in &small.terms {
            if let Some(d) = large.terms.get(&m.complement(caps)) {
                total += c * d;
            }
        }
        Ok(total)
    }

    /// Inverse of the `Display` form, e.g. `2*x1*x2+-1*y12^2+3`.
    pub fn parse(ring: &Arc<RingSpec>, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut p = Self::zero(ring);
        if text == "0" {
            return Ok(p);
        }
        let mut column = 1;
        for term in text.split('+') {
            let err = |msg: String| Error::Parse(ParseError::new(1, column, msg));
            let term_trim = term.trim();
            if term_trim.is_empty() {
                return Err(err("empty term".into()));
            }
            let (coeff, rest) = match term_trim.split_once('*') {
                Some((c, r)) if c.trim().parse::<BigInt>().is_ok() => (c.trim(), r),
                _ if term_trim.parse::<BigInt>().is_ok() => (term_trim, "1"),
                _ => ("1", term_trim),
            };
            let coeff: BigInt = coeff
                .parse()
                .map_err(|_| err(format!("bad coefficient in `{term_trim}`")))?;
            let m = ring.parse_monomial(rest)?;
            accumulate(&mut p.terms, &m, &coeff);
            column += term.len() + 1;
        }
        Ok(p)
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, BigInt>, m: &Monomial, c: &BigInt) {
    let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        terms.remove(m);
    }
}

/// Terms in descending lexicographic order, joined by `+`; `0` when empty.
impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}")?;
            if m.degree() > 0 {
                write!(f, "*")?;
                m.write(&self.ring, f)?;
            }
        }
        Ok(())
    }
}

impl Neg for &TruncatedPolynomial {
    type Output = TruncatedPolynomial;

    fn neg(self) -> TruncatedPolynomial {
        TruncatedPolynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

// Operator forms panic on ring mismatch; use the `try_*` methods when the
// operands may come from different rings.
impl Add for &TruncatedPolynomial {
    type Output = TruncatedPolynomial;

    fn add(self, rhs: Self) -> TruncatedPolynomial {
        self.try_add(rhs)
            .expect("ring mismatch in polynomial addition")
    }
}

impl Sub for &TruncatedPolynomial {
    type Output = TruncatedPolynomial;

    fn sub(self, rhs: Self) -> TruncatedPolynomial {
        self.try_sub(rhs)
            .expect("ring mismatch in polynomial subtraction")
    }
}

impl Mul for &TruncatedPolynomial {
    type Output = TruncatedPolynomial;

    fn mul(self, rhs: Self) -> TruncatedPolynomial {
        self.try_mul(rhs)
            .expect("ring mismatch in polynomial multiplication")
    }
}
