//! Multiplicity of a G-Pfaffian cogenerated quotient as a weighted sum of
//! lattice-path determinants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideals::{reduce_cogenerator, CogeneratorSpec, RegionMap};
use crate::poly::LatticePoint;

/// `C(top, bottom)`, zero unless `0 <= bottom <= top`.
pub fn binomial(top: i64, bottom: i64) -> BigInt {
    if bottom < 0 || top < 0 || bottom > top {
        return BigInt::zero();
    }
    let bottom = bottom.min(top - bottom);
    let mut acc = BigInt::one();
    for i in 0..bottom {
        acc = acc * BigInt::from(top - i) / BigInt::from(i + 1);
    }
    acc
}

fn coords(p: LatticePoint) -> (i64, i64) {
    (p.row() as i64, p.col() as i64)
}

/// Monotone unit-step paths from `q` to `p`, ignoring the triangle.
pub fn path_count(q: LatticePoint, p: LatticePoint) -> BigInt {
    let ((xq, yq), (xp, yp)) = (coords(q), coords(p));
    if xp < xq || yp < yq {
        return BigInt::zero();
    }
    binomial(xp + yp - xq - yq, xp - xq)
}

/// Monotone paths from `q` to `p` that keep `row < col` throughout, by
/// reflection in the diagonal.
pub fn constrained_path_count(q: LatticePoint, p: LatticePoint) -> BigInt {
    let ((xq, yq), (xp, yp)) = (coords(q), coords(p));
    if xp < xq || yp < yq {
        return BigInt::zero();
    }
    let top = xp + yp - xq - yq;
    binomial(top, xp - xq) - binomial(top, xp - yq)
}

/// The `t x t` matrix of constrained path counts from the sources
/// `Q_1..Q_t` to the sinks `P_1..P_t` for one `(h,k)` label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LgvMatrix {
    pub h: u32,
    pub k: u32,
    pub sources: Vec<LatticePoint>,
    pub sinks: Vec<LatticePoint>,
    pub entries: Vec<Vec<BigInt>>,
}

impl LgvMatrix {
    /// Sources `Q_i = (a, a+2i-1)` for `i <= t-2`, `Q_{t-1} = (a,k)`,
    /// `Q_t = (h,b)`; sinks `P_j = (n-2j+1, n)`.
    pub fn new(map: &RegionMap, h: u32, k: u32) -> Self {
        let (n, a, b, t) = (map.n, map.a, map.b, map.t as u32);
        let pt = LatticePoint::new_unchecked;
        let mut sources: Vec<LatticePoint> = (1..t.saturating_sub(1)).map(|i| pt(a, a + 2 * i - 1)).collect();
        if t >= 2 {
            sources.push(pt(a, k));
        }
        sources.push(pt(h, b));
        let sinks: Vec<LatticePoint> = (1..=t).map(|j| pt(n - 2 * j + 1, n)).collect();
        let entries = sources
            .iter()
            .map(|&q| sinks.iter().map(|&p| constrained_path_count(q, p)).collect())
            .collect();
        Self {
            h,
            k,
            sources,
            sinks,
            entries,
        }
    }

    pub fn determinant(&self) -> BigInt {
        determinant(&self.entries)
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let m = matrix.len();
    if m == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for col in 0..m {
        let Some(pivot) = (col..m).find(|&r| !a[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            sign = -sign;
        }
        for r in col + 1..m {
            for c in col + 1..m {
                let v = &a[r][c] * &a[col][col] - &a[r][col] * &a[col][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    sign * &a[m - 1][m - 1]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTerm {
    pub h: u32,
    pub k: u32,
    /// Paths from `(1,a)` to `(h,k)`.
    pub corner_paths: BigInt,
    pub determinant: BigInt,
}

impl MultiplicityTerm {
    pub fn value(&self) -> BigInt {
        &self.corner_paths * &self.determinant
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub multiplicity: BigInt,
    pub reduced: CogeneratorSpec,
    pub terms: Vec<MultiplicityTerm>,
}

/// `e = Σ_{h,k} C(h+k-a-1, h-1) det A_hk` over `h in 1..a-1`,
/// `k in a+2t-3..b-1`, computed on the reduced cogenerator. For `t = 1`
/// the sum collapses to the number of paths `(1,b) -> (n-1,n)`.
pub fn multiplicity(spec: &CogeneratorSpec) -> Result<MultiplicityReport> {
    if !spec.is_g_pfaffian() {
        return Err(Error::Precondition(format!(
            "multiplicity formula needs a G-Pfaffian, got {}",
            spec.alpha()
        )));
    }
    let reduced = reduce_cogenerator(spec);
    if (reduced.n() as usize) < 2 * reduced.t() {
        return Err(Error::Precondition("need n >= 2t".into()));
    }
    let map = RegionMap::new(&reduced)?;
    let pt = LatticePoint::new_unchecked;
    let terms: Vec<MultiplicityTerm> = if map.t == 1 {
        let lgv = LgvMatrix::new(&map, 1, map.b - 1);
        vec![MultiplicityTerm {
            h: 1,
            k: map.b - 1,
            corner_paths: BigInt::one(),
            determinant: lgv.determinant(),
        }]
    } else {
        let lo = map.a + 2 * map.t as u32 - 3;
        (1..map.a)
            .flat_map(|h| (lo..map.b).map(move |k| (h, k)))
            .map(|(h, k)| MultiplicityTerm {
                h,
                k,
                corner_paths: path_count(pt(1, map.a), pt(h, k)),
                determinant: LgvMatrix::new(&map, h, k).determinant(),
            })
            .collect()
    };
    let multiplicity = terms.iter().map(MultiplicityTerm::value).sum();
    Ok(MultiplicityReport {
        multiplicity,
        reduced,
        terms,
    })
}
