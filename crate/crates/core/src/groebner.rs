//! A small Buchberger engine over exact rationals, plus monomial-ideal
//! helpers. This is the independent oracle for Gröbner-basis claims, so it
//! favours plain, checkable code over speed.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

/// Remainder of `f` on division by `basis`. Each step reduces the largest
/// remaining term by the first basis element (in listed order) whose
/// initial monomial divides it; terms nobody divides go to the remainder.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let heads: Vec<(Monomial, BigRational)> = basis
        .iter()
        .filter_map(|g| Some((g.leading_monomial()?.clone(), g.leading_coeff()?.clone())))
        .collect();
    normal_form_with_heads(f, basis, &heads)
}

fn normal_form_with_heads(f: &Polynomial, basis: &[Polynomial], heads: &[(Monomial, BigRational)]) -> Polynomial {
    let mut p = f.clone();
    let mut rem = Polynomial::zero();
    while let Some(m) = p.leading_monomial().cloned() {
        let c = p.coeff(&m);
        let hit = heads.iter().position(|(lm, _)| lm.divides(&m));
        match hit {
            Some(k) => {
                let (lm, lc) = &heads[k];
                let q = lm.quotient_of(&m).expect("divides");
                p.add_scaled(&(-(c / lc)), &q, &basis[k]);
            }
            None => {
                p.add_term(-c.clone(), m.clone());
                rem.add_term(c, m);
            }
        }
    }
    rem
}

/// `lcm/in(f) * f / lc(f) - lcm/in(g) * g / lc(g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let tf = f.initial_term()?;
    let tg = g.initial_term()?;
    let l = tf.monomial.lcm(&tg.monomial);
    let mut s = Polynomial::zero();
    s.add_scaled(
        &(BigRational::one() / &tf.coeff),
        &tf.monomial.quotient_of(&l).expect("lcm"),
        f,
    );
    s.add_scaled(
        &(-BigRational::one() / &tg.coeff),
        &tg.monomial.quotient_of(&l).expect("lcm"),
        g,
    );
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerConfig {
    pub max_generators: usize,
    pub max_pairs: usize,
    /// Skip S-pairs whose lcm has larger degree. For homogeneous input the
    /// result is then a Gröbner basis up to that degree.
    pub max_degree: Option<u32>,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        Self {
            max_generators: 200,
            max_pairs: 50_000,
            max_degree: None,
        }
    }
}

/// Where a basis element came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Index into the input generators.
    Input(usize),
    /// Reduced S-polynomial of basis elements `i` and `j`.
    SPair(usize, usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PairStats {
    pub created: usize,
    pub pruned_coprime: usize,
    pub pruned_degree: usize,
    pub processed: usize,
    pub reduced_to_zero: usize,
    pub pending: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisComputation {
    pub generators: Vec<Polynomial>,
    pub computed_basis: Vec<Polynomial>,
    pub origins: Vec<Origin>,
    pub stats: PairStats,
}

impl BasisComputation {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.computed_basis
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    /// True when `f` reduces to zero modulo the basis.
    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, &self.computed_basis).is_zero()
    }

    /// Exhaustive self-check: every S-polynomial and every input generator
    /// reduces to zero. Returns the first offending pair or generator.
    pub fn certify(&self) -> std::result::Result<(), GbasisViolation> {
        let basis = &self.computed_basis;
        for (k, f) in self.generators.iter().enumerate() {
            let r = normal_form(f, basis);
            if !r.is_zero() {
                return Err(GbasisViolation::GeneratorNotReduced { index: k, remainder: r });
            }
        }
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let s = s_polynomial(&basis[i], &basis[j]).expect("basis elements are nonzero");
                let r = normal_form(&s, basis);
                if !r.is_zero() {
                    return Err(GbasisViolation::SPairNotReduced { i, j, remainder: r });
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GbasisViolation {
    GeneratorNotReduced { index: usize, remainder: Polynomial },
    SPairNotReduced { i: usize, j: usize, remainder: Polynomial },
}

type PairKey = (u32, Monomial, usize, usize);

/// Resumable Buchberger state. [`Buchberger::run`] stops with
/// [`Error::BudgetExceeded`] when the pair budget is spent; raise the budget
/// with [`Buchberger::extend_budget`] and call `run` again to continue.
#[derive(Clone, Debug)]
pub struct Buchberger {
    config: BuchbergerConfig,
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
    heads: Vec<(Monomial, BigRational)>,
    origins: Vec<Origin>,
    queue: BTreeSet<PairKey>,
    stats: PairStats,
}

impl Buchberger {
    pub fn new(gens: &[Polynomial], config: BuchbergerConfig) -> Result<Self> {
        if gens.len() > config.max_generators {
            return Err(Error::LimitExceeded {
                what: "Buchberger input",
                count: gens.len() as u128,
                cap: config.max_generators as u128,
            });
        }
        if gens.iter().any(Polynomial::is_zero) {
            return Err(Error::ZeroPolynomial);
        }
        let mut engine = Self {
            config,
            generators: gens.to_vec(),
            basis: Vec::new(),
            heads: Vec::new(),
            origins: Vec::new(),
            queue: BTreeSet::new(),
            stats: PairStats::default(),
        };
        for (k, g) in gens.iter().enumerate() {
            engine.push(g.monic(), Origin::Input(k));
        }
        Ok(engine)
    }

    fn push(&mut self, g: Polynomial, origin: Origin) {
        let lm = g.leading_monomial().expect("nonzero").clone();
        let j = self.basis.len();
        for (i, (li, _)) in self.heads.iter().enumerate() {
            self.stats.created += 1;
            if li.is_coprime(&lm) {
                self.stats.pruned_coprime += 1;
                continue;
            }
            let l = li.lcm(&lm);
            let d = l.degree();
            if self.config.max_degree.is_some_and(|cap| d > cap) {
                self.stats.pruned_degree += 1;
                continue;
            }
            self.queue.insert((d, l, i, j));
        }
        self.heads.push((lm, g.leading_coeff().expect("nonzero").clone()));
        self.basis.push(g);
        self.origins.push(origin);
    }

    pub fn run(&mut self) -> Result<()> {
        while let Some((_, _, i, j)) = self.queue.first().cloned() {
            if self.stats.processed >= self.config.max_pairs {
                return Err(Error::BudgetExceeded {
                    pairs_processed: self.stats.processed,
                    pairs_pending: self.queue.len(),
                    basis_len: self.basis.len(),
                });
            }
            self.queue.pop_first();
            self.stats.processed += 1;
            let s = s_polynomial(&self.basis[i], &self.basis[j])?;
            let r = normal_form_with_heads(&s, &self.basis, &self.heads);
            if r.is_zero() {
                self.stats.reduced_to_zero += 1;
            } else {
                self.push(r.monic(), Origin::SPair(i, j));
            }
        }
        Ok(())
    }

    pub fn extend_budget(&mut self, extra_pairs: usize) {
        self.config.max_pairs = self.config.max_pairs.saturating_add(extra_pairs);
    }

    pub fn is_done(&self) -> bool {
        self.queue.is_empty()
    }

    pub fn stats(&self) -> PairStats {
        PairStats {
            pending: self.queue.len(),
            ..self.stats
        }
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn into_computation(self) -> BasisComputation {
        let stats = self.stats();
        BasisComputation {
            generators: self.generators,
            computed_basis: self.basis,
            origins: self.origins,
            stats,
        }
    }
}

/// Gröbner basis of `gens` under the default budget.
pub fn buchberger(gens: &[Polynomial]) -> Result<BasisComputation> {
    buchberger_with(gens, BuchbergerConfig::default())
}

pub fn buchberger_with(gens: &[Polynomial], config: BuchbergerConfig) -> Result<BasisComputation> {
    let mut engine = Buchberger::new(gens, config)?;
    engine.run()?;
    Ok(engine.into_computation())
}

pub fn in_monomial_ideal(m: &Monomial, gens: &[Monomial]) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// True iff the two lists generate the same monomial ideal.
pub fn monomial_span_equal(g1: &[Monomial], g2: &[Monomial]) -> bool {
    g1.iter().all(|m| in_monomial_ideal(m, g2)) && g2.iter().all(|m| in_monomial_ideal(m, g1))
}

/// The minimal generators of the monomial ideal, sorted by term order.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let uniq: BTreeSet<&Monomial> = gens.iter().collect();
    let mut by_degree: Vec<&Monomial> = uniq.into_iter().collect();
    by_degree.sort_by_key(|m| m.degree());
    let mut kept: Vec<Monomial> = Vec::new();
    for m in by_degree {
        if !in_monomial_ideal(m, &kept) {
            kept.push(m.clone());
        }
    }
    kept.sort();
    kept
}

/// A monomial of `first` that is not in the ideal spanned by `second`, if any.
pub fn span_difference(first: &[Monomial], second: &[Monomial]) -> Option<Monomial> {
    first.iter().find(|m| !in_monomial_ideal(m, second)).cloned()
}
