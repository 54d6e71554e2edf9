//! Brute-force oracles shared by the integration tests. Each one follows a
//! definition directly and shares no code with the library routine it checks.
#![allow(dead_code)]

use std::collections::BTreeSet;

use pfaffian_ideals::ideals::{all_g_specs, CogeneratorSpec};
use pfaffian_ideals::pfaffian::{all_tuples, poset_leq, IndexTuple};
use pfaffian_ideals::poly::LatticePoint;

pub fn spec(alpha: &[u32], n: u32) -> CogeneratorSpec {
    CogeneratorSpec::new(IndexTuple::new(alpha.to_vec()).unwrap(), n).unwrap()
}

pub fn pt(i: u32, j: u32) -> LatticePoint {
    LatticePoint::new(i, j).unwrap()
}

/// All reduced G-Pfaffian specs with `min_n <= n <= max_n`.
pub fn reduced_g_specs(min_n: u32, max_n: u32) -> Vec<CogeneratorSpec> {
    all_g_specs(max_n)
        .into_iter()
        .filter(|s| s.is_reduced() && s.n() >= min_n)
        .collect()
}

pub fn triangle(n: u32) -> Vec<LatticePoint> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| pt(i, j))).collect()
}

/// Forbidden point sets: the main anti-diagonals of every Pfaffian that is
/// not `>= alpha`, as bitmasks over `triangle(n)`.
pub fn forbidden_masks(spec: &CogeneratorSpec) -> Vec<u128> {
    let pts = triangle(spec.n());
    let idx = |i: u32, j: u32| pts.iter().position(|p| p.row() == i && p.col() == j).unwrap();
    all_tuples(spec.n(), spec.n() as usize)
        .into_iter()
        .filter(|b| !poset_leq(spec.alpha(), b))
        .map(|b| {
            let s = b.as_slice();
            let m = s.len();
            (0..m / 2).fold(0u128, |acc, i| acc | 1u128 << idx(s[i], s[m - 1 - i]))
        })
        .collect()
}

pub fn avoids(mask: u128, forbidden: &[u128]) -> bool {
    !forbidden.iter().any(|&g| g & mask == g)
}

/// Maximal faces of the complex cut out by `forbidden`, by a set-enumeration
/// search over the downward-closed family of faces.
pub fn maximal_faces(spec: &CogeneratorSpec) -> BTreeSet<BTreeSet<LatticePoint>> {
    let pts = triangle(spec.n());
    let forbidden = forbidden_masks(spec);
    let total = pts.len();
    let mut out = BTreeSet::new();
    fn rec(
        start: usize,
        mask: u128,
        total: usize,
        forbidden: &[u128],
        pts: &[LatticePoint],
        out: &mut BTreeSet<BTreeSet<LatticePoint>>,
    ) {
        let mut extended = false;
        for k in start..total {
            let next = mask | 1u128 << k;
            if avoids(next, forbidden) {
                extended = true;
                rec(k + 1, next, total, forbidden, pts, out);
            }
        }
        if !extended {
            let maximal = (0..total).all(|k| mask >> k & 1 == 1 || !avoids(mask | 1u128 << k, forbidden));
            if maximal {
                out.insert((0..total).filter(|&k| mask >> k & 1 == 1).map(|k| pts[k]).collect());
            }
        }
    }
    rec(0, 0, total, &forbidden, &pts, &mut out);
    out
}

/// Every monotone unit-step path from `q` to `p` inside `row < col`.
pub fn dfs_paths(q: LatticePoint, p: LatticePoint) -> Vec<Vec<LatticePoint>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(at: (u32, u32), p: (u32, u32), cur: &mut Vec<LatticePoint>, out: &mut Vec<Vec<LatticePoint>>) {
        if at.0 >= at.1 || at.0 > p.0 || at.1 > p.1 {
            return;
        }
        cur.push(LatticePoint::new(at.0, at.1).unwrap());
        if at == p {
            out.push(cur.clone());
        } else {
            rec((at.0 + 1, at.1), p, cur, out);
            rec((at.0, at.1 + 1), p, cur, out);
        }
        cur.pop();
    }
    rec((q.row(), q.col()), (p.row(), p.col()), &mut cur, &mut out);
    out
}

/// Number of families of pairwise vertex-disjoint paths `ends[i].0 -> ends[i].1`.
pub fn disjoint_families(ends: &[(LatticePoint, LatticePoint)]) -> u64 {
    let options: Vec<Vec<Vec<LatticePoint>>> = ends.iter().map(|&(q, p)| dfs_paths(q, p)).collect();
    fn rec(i: usize, used: &mut BTreeSet<LatticePoint>, options: &[Vec<Vec<LatticePoint>>]) -> u64 {
        if i == options.len() {
            return 1;
        }
        let mut total = 0;
        for path in &options[i] {
            if path.iter().all(|x| !used.contains(x)) {
                used.extend(path.iter().copied());
                total += rec(i + 1, used, options);
                for x in path {
                    used.remove(x);
                }
            }
        }
        total
    }
    rec(0, &mut BTreeSet::new(), &options)
}
