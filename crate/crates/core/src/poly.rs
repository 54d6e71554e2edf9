//! Exact sparse polynomials in the variables `X(i,j)`, `i < j`, of a generic
//! skew-symmetric matrix.
//!
//! Monomials are ordered lexicographically with the variable precedence
//! `X(i,j) > X(k,l)` iff `i < k`, or `i == k` and `j > l`. Under this order the
//! initial monomial of every Pfaffian is its main anti-diagonal, so it is an
//! anti-diagonal term order. The `Ord` impl of [`Monomial`] *is* the term
//! order, which lets [`Polynomial`] keep its terms in a `BTreeMap` whose last
//! entry is always the initial term.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A position `(row, col)` of the strictly upper triangular grid, naming the
/// variable `X(row,col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    row: u32,
    col: u32,
}

impl LatticePoint {
    pub fn new(row: u32, col: u32) -> Result<Self> {
        if row == 0 || row >= col {
            return Err(Error::InvalidPoint { row, col });
        }
        Ok(Self { row, col })
    }

    /// Caller guarantees `1 <= row < col`.
    pub(crate) const fn new_unchecked(row: u32, col: u32) -> Self {
        Self { row, col }
    }

    /// The variable `X(min,max)` for an unordered pair of distinct labels.
    pub fn from_pair(u: u32, v: u32) -> Result<Self> {
        Self::new(u.min(v), u.max(v))
    }

    pub fn row(self) -> u32 {
        self.row
    }

    pub fn col(self) -> u32 {
        self.col
    }

    /// True when `self` is a strictly larger variable than `other`.
    pub fn outranks(self, other: LatticePoint) -> bool {
        self.row < other.row || (self.row == other.row && self.col > other.col)
    }

    /// Sort key realizing the variable precedence, largest variable first.
    fn rank(self) -> (u32, std::cmp::Reverse<u32>) {
        (self.row, std::cmp::Reverse(self.col))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X({},{})", self.row, self.col)
    }
}

/// A monomial `prod X(p)^e`, stored with the largest variable first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(LatticePoint, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(p: LatticePoint) -> Self {
        Self { factors: vec![(p, 1)] }
    }

    /// Builds a monomial from arbitrary `(point, exponent)` pairs; repeated
    /// points are merged and zero exponents dropped.
    pub fn from_factors<I: IntoIterator<Item = (LatticePoint, u32)>>(factors: I) -> Self {
        let mut map: BTreeMap<(u32, std::cmp::Reverse<u32>), (LatticePoint, u32)> = BTreeMap::new();
        for (p, e) in factors {
            if e == 0 {
                continue;
            }
            map.entry(p.rank()).or_insert((p, 0)).1 += e;
        }
        Self {
            factors: map.into_values().collect(),
        }
    }

    /// Squarefree monomial supported on the given points.
    pub fn from_points<I: IntoIterator<Item = LatticePoint>>(points: I) -> Self {
        Self::from_factors(points.into_iter().map(|p| (p, 1)))
    }

    /// Factors with the largest variable first.
    pub fn factors(&self) -> &[(LatticePoint, u32)] {
        &self.factors
    }

    pub fn support(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn exponent(&self, p: LatticePoint) -> u32 {
        self.factors.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }

    fn merge_with(&self, other: &Monomial, combine: impl Fn(u32, u32) -> u32) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            let next = match (self.factors.get(i), other.factors.get(j)) {
                (Some(&(p, e)), Some(&(q, f))) => match p.rank().cmp(&q.rank()) {
                    Ordering::Less => {
                        i += 1;
                        (p, combine(e, 0))
                    }
                    Ordering::Greater => {
                        j += 1;
                        (q, combine(0, f))
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (p, combine(e, f))
                    }
                },
                (Some(&(p, e)), None) => {
                    i += 1;
                    (p, combine(e, 0))
                }
                (None, Some(&(q, f))) => {
                    j += 1;
                    (q, combine(0, f))
                }
                (None, None) => unreachable!(),
            };
            if next.1 > 0 {
                out.push(next);
            }
        }
        Monomial { factors: out }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, |e, f| e + f)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            factors: if k == 0 {
                Vec::new()
            } else {
                self.factors.iter().map(|&(p, e)| (p, e * k)).collect()
            },
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::max)
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(p, e) in &self.factors {
            loop {
                match other.factors.get(j) {
                    None => return false,
                    Some(&(q, f)) => match p.rank().cmp(&q.rank()) {
                        Ordering::Greater => j += 1,
                        Ordering::Equal => {
                            if f < e {
                                return false;
                            }
                            j += 1;
                            break;
                        }
                        Ordering::Less => return false,
                    },
                }
            }
        }
        true
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(other.merge_with(self, |e, f| e - f))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        !self
            .factors
            .iter()
            .any(|&(p, _)| other.factors.iter().any(|&(q, _)| p == q))
    }
}

/// The anti-diagonal term order: lexicographic under the variable precedence.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.factors.iter();
        let mut b = other.factors.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(p, e)), Some(&(q, f))) => {
                    if p == q {
                        match e.cmp(&f) {
                            Ordering::Equal => continue,
                            o => return o,
                        }
                    }
                    return if p.outranks(q) {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (idx, &(p, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            write!(f, "{p}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Compares two monomials under the anti-diagonal term order.
pub fn term_cmp(m1: &Monomial, m2: &Monomial) -> Ordering {
    m1.cmp(m2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub monomial: Monomial,
}

/// A polynomial over the rationals in canonical form: no zero coefficients,
/// terms keyed by monomial in term order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_term(c, Monomial::one())
    }

    pub fn var(p: LatticePoint) -> Self {
        Self::from_term(BigRational::one(), Monomial::var(p))
    }

    pub fn from_term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (BigRational, Monomial)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
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

    /// Terms from the initial term downwards.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn initial_term(&self) -> Result<Term> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| Term {
                coeff: c.clone(),
                monomial: m.clone(),
            })
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, c: BigRational, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled(&mut self, c: &BigRational, m: &Monomial, other: &Polynomial) {
        if c.is_zero() {
            return;
        }
        for (om, oc) in &other.terms {
            self.add_term(c * oc, m.mul(om));
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&BigRational::one(), &Monomial::one(), rhs);
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&-BigRational::one(), &Monomial::one(), rhs);
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_scaled(c, m, rhs);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Formats a rational as `"p/q"`, with `q = 1` for integers.
pub fn format_rational(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}
