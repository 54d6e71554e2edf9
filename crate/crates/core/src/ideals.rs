//! Cogenerated Pfaffian ideals: natural generators, the reduction to a
//! cogenerator starting at 1, the G-Pfaffian predicate, the region partition
//! of the triangular grid, explicit initial-ideal generators, and the
//! counterexample element for cogenerators that are not G-Pfaffian.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::pfaffian::{all_tuples, poset_leq, tuples_of_size, IndexTuple, PfaffianExpander};
use crate::poly::{LatticePoint, Monomial, Polynomial};

/// Default upper bound on the number of tuples an enumeration may scan.
pub const DEFAULT_GENERATOR_CAP: u128 = 200_000;

/// A cogenerator `alpha` together with the size `n` of the ambient matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CogeneratorSpec {
    alpha: IndexTuple,
    n: u32,
}

impl CogeneratorSpec {
    pub fn new(alpha: IndexTuple, n: u32) -> Result<Self> {
        alpha.check_range(n)?;
        Ok(Self { alpha, n })
    }

    pub fn alpha(&self) -> &IndexTuple {
        &self.alpha
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Half the size of the cogenerator.
    pub fn t(&self) -> usize {
        self.alpha.half()
    }

    pub fn is_reduced(&self) -> bool {
        self.alpha.first() == 1
    }

    pub fn is_g_pfaffian(&self) -> bool {
        is_g_pfaffian(&self.alpha)
    }
}

impl fmt::Display for CogeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}x{}", self.alpha, self.n, self.n)
    }
}

/// Shifts the cogenerator so that it starts at 1, shrinking the matrix by the
/// same amount. The quotient rings of the two specs are isomorphic.
pub fn reduce_cogenerator(spec: &CogeneratorSpec) -> CogeneratorSpec {
    let shift = spec.alpha.first() - 1;
    let alpha = IndexTuple::new(spec.alpha.as_slice().iter().map(|a| a - shift).collect())
        .expect("shifting preserves validity");
    CogeneratorSpec {
        alpha,
        n: spec.n - shift,
    }
}

/// True when the middle entries `a2 < a3 < ... < a_{2t-1}` are consecutive.
pub fn is_g_pfaffian(alpha: &IndexTuple) -> bool {
    let a = alpha.as_slice();
    let m = a.len();
    (3..m).all(|i| a[i - 1] == a[i - 2] + 1)
}

/// `min { k >= 2 : a_k + 1 < a_{k+1} }` (1-based), reading `a_{2t+1}` as
/// infinity, so the result is at most `2t`. For `t = 1` this is 2.
pub fn first_gap_index(alpha: &IndexTuple) -> usize {
    let a = alpha.as_slice();
    let m = a.len();
    (2..m).find(|&k| a[k - 1] + 1 < a[k]).unwrap_or(m)
}

/// Every spec with `2 <= n <= max_n`, ordered by `n` and then by cogenerator.
pub fn all_specs(max_n: u32) -> Vec<CogeneratorSpec> {
    (2..=max_n)
        .flat_map(|n| {
            all_tuples(n, n as usize)
                .into_iter()
                .map(move |alpha| CogeneratorSpec { alpha, n })
        })
        .collect()
}

pub fn all_g_specs(max_n: u32) -> Vec<CogeneratorSpec> {
    all_specs(max_n)
        .into_iter()
        .filter(CogeneratorSpec::is_g_pfaffian)
        .collect()
}

/// `min(2t + 2, largest even size <= n)`.
pub fn default_max_size(spec: &CogeneratorSpec) -> usize {
    (2 * spec.t() + 2).min((spec.n - spec.n % 2) as usize)
}

fn binomial_u128(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All index tuples over `{1..n}` of size at most `max_size` that are not
/// `>= alpha`, sorted by size and then lexicographically.
pub fn natural_generators(spec: &CogeneratorSpec, max_size: usize, cap: u128) -> Result<Vec<IndexTuple>> {
    if max_size < 2 || max_size % 2 != 0 || max_size > spec.n as usize {
        return Err(Error::Precondition(format!(
            "max_size must be even with 2 <= max_size <= n = {}, got {max_size}",
            spec.n
        )));
    }
    let scanned: u128 = (2..=max_size).step_by(2).map(|s| binomial_u128(spec.n, s as u32)).sum();
    if scanned > cap {
        return Err(Error::LimitExceeded {
            what: "natural generator enumeration",
            count: scanned,
            cap,
        });
    }
    Ok(all_tuples(spec.n, max_size)
        .into_iter()
        .filter(|beta| !poset_leq(&spec.alpha, beta))
        .collect())
}

/// The five blocks of the triangular grid determined by a reduced G-Pfaffian
/// `[1, a, a+1, ..., a+2t-3, b]`. For `t = 1` we take `a = b`, which empties
/// `B` and `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    A,
    B,
    C,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegionMap {
    pub a: u32,
    pub b: u32,
    pub t: usize,
    pub n: u32,
}

impl RegionMap {
    pub fn new(spec: &CogeneratorSpec) -> Result<Self> {
        if !spec.is_reduced() || !spec.is_g_pfaffian() {
            return Err(Error::Precondition(format!(
                "regions are defined for reduced G-Pfaffian cogenerators, got {}",
                spec.alpha
            )));
        }
        let alpha = spec.alpha.as_slice();
        let b = *alpha.last().expect("nonempty");
        let a = if alpha.len() == 2 { b } else { alpha[1] };
        Ok(Self {
            a,
            b,
            t: spec.t(),
            n: spec.n,
        })
    }

    pub fn classify(&self, p: LatticePoint) -> Region {
        let (i, j) = (p.row(), p.col());
        if j < self.a {
            Region::A
        } else if i < self.a {
            if j < self.b {
                Region::B
            } else {
                Region::C
            }
        } else if j < self.b {
            Region::D
        } else {
            Region::E
        }
    }

    pub fn in_any(&self, p: LatticePoint, regions: &[Region]) -> bool {
        regions.contains(&self.classify(p))
    }
}

/// Every `k`-adiag `X(i1,j1)...X(ik,jk)`, `i1 < ... < ik < jk < ... < j1`,
/// in `{1..n}`, as the adiag of the corresponding `2k`-tuple.
pub fn adiags(n: u32, k: usize) -> impl Iterator<Item = Monomial> {
    tuples_of_size(n, 2 * k).into_iter().map(|t| t.adiag())
}

fn count_in(m: &Monomial, map: &RegionMap, regions: &[Region]) -> usize {
    m.support().filter(|&p| map.in_any(p, regions)).count()
}

/// Generators of the initial ideal of a reduced G-Pfaffian cogenerated ideal.
///
/// Non-minimal: (i) the variables of `A`; (ii) 2-adiags in the first `a-1`
/// rows; (iii) `t`-adiags in the first `b-1` columns; (iv) all
/// `(t+1)`-adiags. Minimal: (i) variables of `A`; (ii) 2-adiags in `B ∪ C`;
/// (iii) `t`-adiags in `B ∪ D` with at most one point in `B`; (iv)
/// `(t+1)`-adiags avoiding `A` with at most one point in `B ∪ C` and at most
/// `t-1` points in `B ∪ D`.
///
/// The output is deduplicated and sorted by term order.
pub fn initial_ideal_generators(spec: &CogeneratorSpec, minimal: bool) -> Result<Vec<Monomial>> {
    if !spec.is_g_pfaffian() {
        return Err(Error::Precondition(
            "initial-ideal description applies only to G-Pfaffians".into(),
        ));
    }
    if !spec.is_reduced() {
        return Err(Error::Precondition(format!(
            "initial-ideal description needs a reduced cogenerator (a1 = 1), got {}",
            spec.alpha
        )));
    }
    use Region::*;
    let map = RegionMap::new(spec)?;
    let n = spec.n;
    let t = spec.t();
    let mut out: BTreeSet<Monomial> = BTreeSet::new();
    let within = |m: &Monomial, regions: &[Region]| count_in(m, &map, regions) == m.degree() as usize;

    out.extend(adiags(n, 1).filter(|m| within(m, &[A])));
    if minimal {
        out.extend(adiags(n, 2).filter(|m| within(m, &[B, C])));
        out.extend(adiags(n, t).filter(|m| within(m, &[B, D]) && count_in(m, &map, &[B]) <= 1));
        out.extend(adiags(n, t + 1).filter(|m| {
            count_in(m, &map, &[A]) == 0 && count_in(m, &map, &[B, C]) <= 1 && count_in(m, &map, &[B, D]) < t
        }));
    } else {
        out.extend(adiags(n, 2).filter(|m| within(m, &[A, B, C])));
        out.extend(adiags(n, t).filter(|m| within(m, &[A, B, D])));
        out.extend(adiags(n, t + 1));
    }
    Ok(out.into_iter().collect())
}

/// Initial-ideal generators for any G-Pfaffian spec: the variables in the
/// first `a1 - 1` rows, plus the generators of the reduced spec shifted back.
pub fn initial_ideal_generators_lifted(spec: &CogeneratorSpec, minimal: bool) -> Result<Vec<Monomial>> {
    let reduced = reduce_cogenerator(spec);
    let shift = spec.alpha.first() - 1;
    let mut out: BTreeSet<Monomial> = BTreeSet::new();
    for i in 1..=shift {
        for j in i + 1..=spec.n {
            out.insert(Monomial::var(LatticePoint::new_unchecked(i, j)));
        }
    }
    for m in initial_ideal_generators(&reduced, minimal)? {
        out.insert(Monomial::from_factors(m.factors().iter().map(|&(p, e)| {
            (LatticePoint::new_unchecked(p.row() + shift, p.col() + shift), e)
        })));
    }
    Ok(out.into_iter().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GapParity {
    Even,
    Odd,
}

/// An element of `I_alpha` whose initial monomial escapes every natural
/// generator's initial monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub gap_index: usize,
    pub parity: GapParity,
    pub beta1: IndexTuple,
    pub gamma1: IndexTuple,
    pub beta2: IndexTuple,
    pub gamma2: IndexTuple,
    /// `beta1 * gamma1 - beta2 * gamma2`
    pub element: Polynomial,
    pub witness: Monomial,
}

/// Builds `beta1*gamma1 - beta2*gamma2` for a cogenerator that is not
/// G-Pfaffian. With `i` the first gap index:
///
/// * `i` even: `beta1 = [a1..ai, ai+1, a(i+1)]`, `gamma1 = [a1, a(i+2)]`,
///   `beta2 = [a1..ai, ai+1, a(i+2)]`, `gamma2 = [a1, a(i+1)]`;
/// * `i` odd: `beta1 = [a1..ai, ai+1, a(i+1), a(i+3)]`, `gamma1 = [a2, a(i+2)]`,
///   `beta2 = [a1..ai, ai+1, a(i+2), a(i+3)]`, `gamma2 = [a2, a(i+1)]`.
pub fn counterexample_witness(spec: &CogeneratorSpec) -> Result<Counterexample> {
    let alpha = &spec.alpha;
    if is_g_pfaffian(alpha) {
        return Err(Error::Precondition(format!(
            "{alpha} is a G-Pfaffian; its natural generators are a Groebner basis"
        )));
    }
    let i = first_gap_index(alpha);
    if i + 1 >= alpha.size() {
        return Err(Error::Precondition("construction precondition violated".into()));
    }
    let a = |k: usize| alpha.at(k);
    let head: Vec<u32> = (1..=i).map(a).collect();
    let with = |tail: &[u32]| -> IndexTuple {
        let mut v = head.clone();
        v.push(a(i) + 1);
        v.extend_from_slice(tail);
        IndexTuple::new(v).expect("gap keeps the tuple increasing")
    };
    let pair = |x: u32, y: u32| IndexTuple::new(vec![x, y]).expect("increasing pair");
    let (parity, beta1, gamma1, beta2, gamma2) = if i % 2 == 0 {
        (
            GapParity::Even,
            with(&[a(i + 1)]),
            pair(a(1), a(i + 2)),
            with(&[a(i + 2)]),
            pair(a(1), a(i + 1)),
        )
    } else {
        (
            GapParity::Odd,
            with(&[a(i + 1), a(i + 3)]),
            pair(a(2), a(i + 2)),
            with(&[a(i + 2), a(i + 3)]),
            pair(a(2), a(i + 1)),
        )
    };
    let mut pf = PfaffianExpander::new();
    let element = &(&pf.pfaffian(&beta1) * &pf.pfaffian(&gamma1)) - &(&pf.pfaffian(&beta2) * &pf.pfaffian(&gamma2));
    let witness = element.initial_term()?.monomial;
    Ok(Counterexample {
        gap_index: i,
        parity,
        beta1,
        gamma1,
        beta2,
        gamma2,
        element,
        witness,
    })
}
