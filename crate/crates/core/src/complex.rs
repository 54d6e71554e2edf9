//! The simplicial complex whose Stanley-Reisner ideal is the initial ideal of
//! a reduced G-Pfaffian cogenerated ideal. Faces are sets of points of the
//! strict upper triangle; facets are unions of non-intersecting lattice paths.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::{initial_ideal_generators, CogeneratorSpec, Region, RegionMap};
use crate::poly::{LatticePoint, Monomial};

/// Default bound on the number of facets [`enumerate_facets`] will emit.
pub const DEFAULT_FACET_CAP: usize = 1_000_000;

/// Largest facet list [`shelling_order`] accepts; the partial order is
/// compared pairwise.
pub const SHELLING_CAP: usize = 5_000;

/// A finite set of points of the strict upper triangle.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(BTreeSet<LatticePoint>);

impl Face {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_points<I: IntoIterator<Item = LatticePoint>>(points: I) -> Self {
        Self(points.into_iter().collect())
    }

    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.0.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<LatticePoint> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.0.contains(&p)
    }

    pub fn insert(&mut self, p: LatticePoint) -> bool {
        self.0.insert(p)
    }

    pub fn remove(&mut self, p: LatticePoint) -> bool {
        self.0.remove(&p)
    }

    /// The squarefree monomial with this support.
    pub fn to_monomial(&self) -> Monomial {
        Monomial::from_points(self.points())
    }

    pub fn check_range(&self, n: u32) -> Result<()> {
        match self.0.iter().find(|p| p.col() > n) {
            Some(p) => Err(Error::IndexOutOfRange { index: p.col(), n }),
            None => Ok(()),
        }
    }

    fn difference(&self, other: &Face) -> Vec<LatticePoint> {
        self.0.difference(&other.0).copied().collect()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", p.row(), p.col())?;
        }
        write!(f, "}}")
    }
}

/// Points of `z` with no point of `z` strictly lower-left (larger row,
/// smaller column).
pub fn delta(z: &BTreeSet<LatticePoint>) -> BTreeSet<LatticePoint> {
    z.iter()
        .filter(|p| !z.iter().any(|q| q.row() > p.row() && q.col() < p.col()))
        .copied()
        .collect()
}

/// Points of `z` with no point of `z` strictly upper-right (smaller row,
/// larger column).
pub fn delta_prime(z: &BTreeSet<LatticePoint>) -> BTreeSet<LatticePoint> {
    z.iter()
        .filter(|p| !z.iter().any(|q| q.row() < p.row() && q.col() > p.col()))
        .copied()
        .collect()
}

/// `Z = Z'_1 ⊔ Z_1 ⊔ ... ⊔ Z_r` with `Z'_1 = δ'(Z)` and `Z_h` the successive
/// `δ`-layers of `Z ∖ Z'_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowDecomposition {
    pub moon_first: Face,
    pub sun_chains: Vec<Face>,
}

impl ShadowDecomposition {
    pub fn r(&self) -> usize {
        self.sun_chains.len()
    }

    /// The sun chains followed by the moon component.
    pub fn chains(&self) -> Vec<&Face> {
        self.sun_chains
            .iter()
            .chain(std::iter::once(&self.moon_first))
            .collect()
    }
}

pub fn shadow_decompose(z: &Face) -> ShadowDecomposition {
    let moon = delta_prime(&z.0);
    let mut rest: BTreeSet<LatticePoint> = z.0.difference(&moon).copied().collect();
    let mut sun_chains = Vec::new();
    while !rest.is_empty() {
        let layer = delta(&rest);
        rest = rest.difference(&layer).copied().collect();
        sun_chains.push(Face(layer));
    }
    ShadowDecomposition {
        moon_first: Face(moon),
        sun_chains,
    }
}

/// Face test by the region conditions: `Z` avoids `A`; everything outside
/// the moon component lies in `D ∪ E`; at most `t-1` sun layers; and when
/// there are exactly `t-1` layers, no moon point in `B ∪ D` has column
/// larger than the smallest column of the last layer.
pub fn is_face(z: &Face, spec: &CogeneratorSpec) -> Result<bool> {
    let map = RegionMap::new(spec)?;
    z.check_range(spec.n())?;
    Ok(is_face_in(z, &map))
}

fn is_face_in(z: &Face, map: &RegionMap) -> bool {
    use Region::*;
    if z.points().any(|p| map.classify(p) == A) {
        return false;
    }
    let dec = shadow_decompose(z);
    let outside_moon_ok = dec
        .sun_chains
        .iter()
        .flat_map(Face::points)
        .all(|p| map.in_any(p, &[D, E]));
    if !outside_moon_ok || dec.r() + 1 > map.t {
        return false;
    }
    if dec.r() + 1 == map.t && map.t >= 2 {
        let last = &dec.sun_chains[map.t - 2];
        let min_col = last.points().map(LatticePoint::col).min().expect("layers are nonempty");
        if dec
            .moon_first
            .points()
            .any(|p| map.in_any(p, &[B, D]) && p.col() > min_col)
        {
            return false;
        }
    }
    true
}

/// The direct face test: `Z` is a face iff no initial-ideal generator
/// divides its squarefree monomial. Uses bitmasks, so `n <= 16`.
#[derive(Clone, Debug)]
pub struct ForbiddenAdiagOracle {
    n: u32,
    generators: Vec<u128>,
}

impl ForbiddenAdiagOracle {
    pub fn new(spec: &CogeneratorSpec) -> Result<Self> {
        if spec.n() > 16 {
            return Err(Error::Precondition(format!(
                "face oracle supports n <= 16, got {}",
                spec.n()
            )));
        }
        let n = spec.n();
        let generators = initial_ideal_generators(spec, true)?
            .iter()
            .map(|m| m.support().fold(0u128, |acc, p| acc | bit(n, p)))
            .collect();
        Ok(Self { n, generators })
    }

    pub fn mask(&self, z: &Face) -> u128 {
        z.points().fold(0, |acc, p| acc | bit(self.n, p))
    }

    pub fn is_face_mask(&self, mask: u128) -> bool {
        !self.generators.iter().any(|&g| g & mask == g)
    }

    pub fn is_face(&self, z: &Face) -> bool {
        self.is_face_mask(self.mask(z))
    }

    /// All points of the triangle, in the bit order used by [`Self::mask`].
    pub fn points(&self) -> Vec<LatticePoint> {
        triangle(self.n)
    }
}

/// Points `(i,j)`, `1 <= i < j <= n`, row by row.
pub fn triangle(n: u32) -> Vec<LatticePoint> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| LatticePoint::new_unchecked(i, j)))
        .collect()
}

fn bit(n: u32, p: LatticePoint) -> u128 {
    // row-major position in the strict upper triangle
    let (i, j) = (p.row() as u64, p.col() as u64);
    let n = n as u64;
    let before = (i - 1) * n - (i - 1) * i / 2;
    1u128 << (before + (j - i - 1))
}

/// A facet given by its `(h,k)` label and its non-intersecting paths. Paths
/// are listed as `(1,a)->(h,k)`, `(h,b)->P_t`, then `Q_i->P_i` for
/// `i = 1..t-1`, with `P_j = (n-2j+1, n)`, `Q_i = (a, a+2i-1)` for
/// `i <= t-2` and `Q_{t-1} = (a,k)`. For `t = 1` there is one path
/// `(1,b)->(n-1,n)` and the label is `(1, b-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetSpec {
    pub h: u32,
    pub k: u32,
    pub paths: Vec<Vec<LatticePoint>>,
    points: Face,
}

impl FacetSpec {
    pub fn points(&self) -> &Face {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn check_facet_spec(spec: &CogeneratorSpec) -> Result<RegionMap> {
    let map = RegionMap::new(spec)?;
    if (spec.n() as usize) < 2 * spec.t() {
        return Err(Error::Precondition("need n >= 2t".into()));
    }
    Ok(map)
}

fn pt(i: u32, j: u32) -> LatticePoint {
    LatticePoint::new_unchecked(i, j)
}

/// Path endpoints for the label `(h,k)`, in the order of [`FacetSpec::paths`].
pub fn facet_endpoints(map: &RegionMap, h: u32, k: u32) -> Vec<(LatticePoint, LatticePoint)> {
    let (n, a, b, t) = (map.n, map.a, map.b, map.t as u32);
    let p = |j: u32| pt(n - 2 * j + 1, n);
    if t == 1 {
        return vec![(pt(1, b), p(1))];
    }
    let mut ends = vec![(pt(1, a), pt(h, k)), (pt(h, b), p(t))];
    ends.extend((1..t - 1).map(|i| (pt(a, a + 2 * i - 1), p(i))));
    ends.push((pt(a, k), p(t - 1)));
    ends
}

/// The `(h,k)` labels: `h in 1..a-1`, `k in a+2t-3..b-1`; `{(1,b-1)}` for `t = 1`.
pub fn facet_labels(map: &RegionMap) -> Vec<(u32, u32)> {
    if map.t == 1 {
        return vec![(1, map.b - 1)];
    }
    let lo = map.a + 2 * map.t as u32 - 3;
    (1..map.a).flat_map(|h| (lo..map.b).map(move |k| (h, k))).collect()
}

struct PathSearch<'a> {
    n: u32,
    ends: &'a [(LatticePoint, LatticePoint)],
    used: Vec<bool>,
    current: Vec<Vec<LatticePoint>>,
    out: Vec<Vec<Vec<LatticePoint>>>,
    cap: usize,
    overflow: bool,
}

impl PathSearch<'_> {
    fn slot(&self, p: LatticePoint) -> usize {
        ((p.row() - 1) * self.n + (p.col() - 1)) as usize
    }

    fn family(&mut self, idx: usize) {
        if self.overflow {
            return;
        }
        if idx == self.ends.len() {
            if self.out.len() >= self.cap {
                self.overflow = true;
            } else {
                self.out.push(self.current.clone());
            }
            return;
        }
        let (q, p) = self.ends[idx];
        if q.row() > p.row() || q.col() > p.col() || p.col() > self.n {
            return;
        }
        self.current.push(Vec::new());
        self.step(idx, q, p);
        self.current.pop();
    }

    fn step(&mut self, idx: usize, at: LatticePoint, target: LatticePoint) {
        let s = self.slot(at);
        if self.used[s] {
            return;
        }
        self.used[s] = true;
        self.current[idx].push(at);
        if at == target {
            self.family(idx + 1);
        } else {
            if at.row() < target.row() && at.row() + 1 < at.col() {
                self.step(idx, pt(at.row() + 1, at.col()), target);
            }
            if at.col() < target.col() {
                self.step(idx, pt(at.row(), at.col() + 1), target);
            }
        }
        self.current[idx].pop();
        self.used[s] = false;
    }
}

/// Every facet, sorted by `(h, k)` and then by point set.
pub fn enumerate_facets(spec: &CogeneratorSpec) -> Result<Vec<FacetSpec>> {
    enumerate_facets_capped(spec, DEFAULT_FACET_CAP)
}

pub fn enumerate_facets_capped(spec: &CogeneratorSpec, cap: usize) -> Result<Vec<FacetSpec>> {
    let map = check_facet_spec(spec)?;
    let mut facets = Vec::new();
    for (h, k) in facet_labels(&map) {
        let ends = facet_endpoints(&map, h, k);
        let mut search = PathSearch {
            n: map.n,
            ends: &ends,
            used: vec![false; (map.n * map.n) as usize],
            current: Vec::new(),
            out: Vec::new(),
            cap: cap - facets.len(),
            overflow: false,
        };
        search.family(0);
        if search.overflow {
            return Err(Error::LimitExceeded {
                what: "facet enumeration",
                count: (cap + 1) as u128,
                cap: cap as u128,
            });
        }
        let mut cell: Vec<FacetSpec> = search
            .out
            .into_iter()
            .map(|paths| FacetSpec {
                h,
                k,
                points: Face::from_points(paths.iter().flatten().copied()),
                paths,
            })
            .collect();
        cell.sort_by(|x, y| x.points.cmp(&y.points));
        facets.extend(cell);
    }
    Ok(facets)
}

/// `d = 2nt - 1 - b - 2(t-1)a - (2t-3)(t-1)`, the common facet size.
pub fn facet_size_formula(spec: &CogeneratorSpec) -> Result<i64> {
    let map = check_facet_spec(spec)?;
    let (n, a, b, t) = (map.n as i64, map.a as i64, map.b as i64, map.t as i64);
    Ok(2 * n * t - 1 - b - 2 * (t - 1) * a - (2 * t - 3) * (t - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PurityReport {
    pub pure: bool,
    /// `d - 1`
    pub dimension: i64,
    pub facet_count: usize,
    /// Sizes seen that differ from `d`, if any.
    pub first_exception: Option<usize>,
}

pub fn verify_pure_and_dimension(spec: &CogeneratorSpec) -> Result<PurityReport> {
    let d = facet_size_formula(spec)?;
    let facets = enumerate_facets(spec)?;
    let first_exception = facets.iter().map(FacetSpec::len).find(|&s| s as i64 != d);
    Ok(PurityReport {
        pure: first_exception.is_none(),
        dimension: d - 1,
        facet_count: facets.len(),
        first_exception,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallReport {
    pub ridges: usize,
    pub boundary_ridges: usize,
    /// A ridge in three or more facets, if one exists.
    pub overfull_ridge: Option<Face>,
}

impl BallReport {
    pub fn holds(&self) -> bool {
        self.overfull_ridge.is_none() && self.boundary_ridges > 0
    }
}

/// Counts, for each codimension-one face, the facets containing it.
pub fn ridge_report(facets: &[FacetSpec]) -> BallReport {
    let mut counts: HashMap<Vec<LatticePoint>, u32> = HashMap::new();
    for f in facets {
        let pts: Vec<LatticePoint> = f.points.points().collect();
        for skip in 0..pts.len() {
            let mut ridge = pts.clone();
            ridge.remove(skip);
            *counts.entry(ridge).or_default() += 1;
        }
    }
    let overfull_ridge = counts
        .iter()
        .filter(|(_, &c)| c > 2)
        .map(|(r, _)| r)
        .min()
        .map(|r| Face::from_points(r.iter().copied()));
    BallReport {
        ridges: counts.len(),
        boundary_ridges: counts.values().filter(|&&c| c == 1).count(),
        overfull_ridge,
    }
}

/// Every ridge lies in at most two facets and some ridge lies in exactly one.
pub fn ball_certificate(facets: &[FacetSpec]) -> bool {
    ridge_report(facets).holds()
}

fn in_right_shadow(p: LatticePoint, of: &Face) -> bool {
    of.points().any(|x| p.row() <= x.row() && p.col() >= x.col())
}

/// `F ⪰ G`: each chain of `F` (sun chains, then the moon component) lies in
/// the closed right shadow of the matching chain of `G`.
pub fn dominates(f: &FacetSpec, g: &FacetSpec) -> bool {
    let df = shadow_decompose(&f.points);
    let dg = shadow_decompose(&g.points);
    let (cf, cg) = (df.chains(), dg.chains());
    cf.len() == cg.len()
        && cf
            .iter()
            .zip(&cg)
            .all(|(zf, zg)| zf.points().all(|p| in_right_shadow(p, zg)))
}

/// A linear extension of `⪰` listing larger facets first; among facets
/// that are free at the same time the smallest point set goes first.
pub fn shelling_order(facets: &[FacetSpec]) -> Result<Vec<FacetSpec>> {
    let m = facets.len();
    if m > SHELLING_CAP {
        return Err(Error::LimitExceeded {
            what: "shelling order",
            count: m as u128,
            cap: SHELLING_CAP as u128,
        });
    }
    let decs: Vec<ShadowDecomposition> = facets.iter().map(|f| shadow_decompose(&f.points)).collect();
    let geq = |i: usize, j: usize| {
        let (ci, cj) = (decs[i].chains(), decs[j].chains());
        ci.len() == cj.len()
            && ci
                .iter()
                .zip(&cj)
                .all(|(zi, zj)| zi.points().all(|p| in_right_shadow(p, zj)))
    };
    let rel: Vec<Vec<bool>> = (0..m).map(|i| (0..m).map(|j| i != j && geq(i, j)).collect()).collect();
    let mut successors: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut indegree = vec![0usize; m];
    for i in 0..m {
        for j in 0..m {
            if rel[i][j] && !rel[j][i] {
                successors[i].push(j);
                indegree[j] += 1;
            }
        }
    }
    let mut ready: BTreeMap<(&Face, usize), usize> = BTreeMap::new();
    for i in (0..m).filter(|&i| indegree[i] == 0) {
        ready.insert((&facets[i].points, i), i);
    }
    let mut order = Vec::with_capacity(m);
    while let Some((_, i)) = ready.pop_first() {
        order.push(facets[i].clone());
        for &j in &successors[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.insert((&facets[j].points, j), j);
            }
        }
    }
    if order.len() != m {
        return Err(Error::Violation("the facet relation has a cycle".into()));
    }
    Ok(order)
}

/// The first `(j, i)`, `i < j`, for which no `x ∈ F_j ∖ F_i` has
/// `F_j ∖ F_l = {x}` for some `l < j`.
pub fn shelling_violation(order: &[FacetSpec]) -> Option<(usize, usize)> {
    for j in 1..order.len() {
        let fj = &order[j].points;
        let singletons: BTreeSet<LatticePoint> = order[..j]
            .iter()
            .filter_map(|fl| match fj.difference(&fl.points).as_slice() {
                [x] => Some(*x),
                _ => None,
            })
            .collect();
        for (i, fi) in order[..j].iter().enumerate() {
            if !fj.difference(&fi.points).iter().any(|x| singletons.contains(x)) {
                return Some((j, i));
            }
        }
    }
    None
}

pub fn verify_shelling(order: &[FacetSpec]) -> bool {
    shelling_violation(order).is_none()
}

/// Wraps a bare point set as an unlabelled facet, for hand-built complexes.
pub fn facet_from_points<I: IntoIterator<Item = LatticePoint>>(points: I) -> FacetSpec {
    let points = Face::from_points(points);
    FacetSpec {
        h: 0,
        k: 0,
        paths: vec![points.points().collect()],
        points,
    }
}
