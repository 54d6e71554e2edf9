//! Index tuples, the Pfaffian poset, and Pfaffian expansion.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{LatticePoint, Monomial, Polynomial};

/// A strictly increasing, even-length tuple `[a1,...,a2t]` of 1-based
/// row/column labels, naming the Pfaffian of that principal submatrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(Vec<u32>);

impl IndexTuple {
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        if indices.is_empty() || indices.len() % 2 != 0 || indices[0] == 0 || !increasing {
            return Err(Error::InvalidTuple(indices));
        }
        Ok(Self(indices))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Number of indices, `2t`.
    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// Half the size, `t`.
    pub fn half(&self) -> usize {
        self.0.len() / 2
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    pub fn last(&self) -> u32 {
        self.0[self.0.len() - 1]
    }

    /// 1-based access, matching the usual `a_i` indexing.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn check_range(&self, n: u32) -> Result<()> {
        match self.0.iter().find(|&&a| a > n) {
            Some(&index) => Err(Error::IndexOutOfRange { index, n }),
            None => Ok(()),
        }
    }

    /// The main anti-diagonal `X(a1,a2t) X(a2,a2t-1) ... X(at,at+1)`.
    pub fn adiag(&self) -> Monomial {
        let s = &self.0;
        let m = s.len();
        Monomial::from_points((0..m / 2).map(|i| LatticePoint::new_unchecked(s[i], s[m - 1 - i])))
    }

    /// Sub-tuple with positions `i` and `j` (0-based) removed.
    fn without(s: &[u32], i: usize, j: usize) -> Vec<u32> {
        s.iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, &a)| a)
            .collect()
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for IndexTuple {
    type Err = Error;

    /// Accepts `1,2,4,5` or `[1,2,4,5]`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let indices = body
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad index tuple {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IndexTuple::new(indices)
    }
}

impl TryFrom<Vec<u32>> for IndexTuple {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        IndexTuple::new(v)
    }
}

/// The poset order on Pfaffians: `alpha <= beta` iff `alpha` is at least as
/// long as `beta` and `alpha_i <= beta_i` on the length of `beta`.
pub fn poset_leq(alpha: &IndexTuple, beta: &IndexTuple) -> bool {
    alpha.size() >= beta.size() && alpha.as_slice().iter().zip(beta.as_slice()).all(|(a, b)| a <= b)
}

pub fn adiag(indices: &IndexTuple) -> Monomial {
    indices.adiag()
}

/// Memoizing Pfaffian expander. Expansion is always along the first row of
/// the submatrix; sub-Pfaffians are cached by their index set.
#[derive(Debug, Default)]
pub struct PfaffianExpander {
    cache: HashMap<Vec<u32>, Polynomial>,
}

impl PfaffianExpander {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pfaffian(&mut self, indices: &IndexTuple) -> Polynomial {
        self.expand(indices.as_slice())
    }

    fn expand(&mut self, s: &[u32]) -> Polynomial {
        if s.is_empty() {
            return Polynomial::one();
        }
        if s.len() == 2 {
            return Polynomial::var(LatticePoint::new_unchecked(s[0], s[1]));
        }
        if let Some(p) = self.cache.get(s) {
            return p.clone();
        }
        // Row 1 of the submatrix: Pf = sum_{j>=2} (-1)^j X(s1,sj) Pf(s \ {s1,sj}).
        let mut out = Polynomial::zero();
        let one = BigRational::one();
        for j in 1..s.len() {
            let minor = self.expand(&IndexTuple::without(s, 0, j));
            let sign = if j % 2 == 1 { one.clone() } else { -one.clone() };
            let var = Monomial::var(LatticePoint::new_unchecked(s[0], s[j]));
            out.add_scaled(&sign, &var, &minor);
        }
        self.cache.insert(s.to_vec(), out.clone());
        out
    }
}

/// The Pfaffian of the skew-symmetric submatrix of the generic `n x n` matrix
/// on rows and columns `indices`.
pub fn pfaffian_polynomial(indices: &IndexTuple, n: u32) -> Result<Polynomial> {
    indices.check_range(n)?;
    Ok(PfaffianExpander::new().pfaffian(indices))
}

/// All index tuples of the given even size over `{1..n}`, in lexicographic order.
pub fn tuples_of_size(n: u32, size: usize) -> Vec<IndexTuple> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(start: u32, n: u32, size: usize, cur: &mut Vec<u32>, out: &mut Vec<IndexTuple>) {
        if cur.len() == size {
            out.push(IndexTuple(cur.clone()));
            return;
        }
        let need = (size - cur.len()) as u32;
        let mut a = start;
        while a + need - 1 <= n {
            cur.push(a);
            rec(a + 1, n, size, cur, out);
            cur.pop();
            a += 1;
        }
    }
    if size > 0 && size % 2 == 0 {
        rec(1, n, size, &mut cur, &mut out);
    }
    out
}

/// All index tuples over `{1..n}` of every even size up to `max_size`, by size then lexicographically.
pub fn all_tuples(n: u32, max_size: usize) -> Vec<IndexTuple> {
    (2..=max_size).step_by(2).flat_map(|s| tuples_of_size(n, s)).collect()
}
