//! Acceptance suite. Runs every criterion in sequence, prints one PASS/FAIL
//! line each, and exits non-zero if any criterion fails.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{forbidden_masks, maximal_faces, pt, reduced_g_specs, spec, triangle};
use num_bigint::BigInt;
use pfaffian_ideals::complex::{
    ball_certificate, enumerate_facets, facet_size_formula, is_face, shelling_order, verify_shelling, Face,
    ForbiddenAdiagOracle,
};
use pfaffian_ideals::groebner::{buchberger, in_monomial_ideal, monomial_span_equal, normal_form};
use pfaffian_ideals::ideals::{
    all_specs, counterexample_witness, default_max_size, first_gap_index, initial_ideal_generators_lifted,
    natural_generators, CogeneratorSpec, DEFAULT_GENERATOR_CAP,
};
use pfaffian_ideals::multiplicity::multiplicity;
use pfaffian_ideals::pfaffian::{all_tuples, poset_leq, IndexTuple, PfaffianExpander};
use pfaffian_ideals::poly::{LatticePoint, Monomial, Polynomial};
use pfaffian_ideals::tableaux::width;
use pfaffian_ideals::tableaux::{bkrs, bkrs_inverse, krs, standard_d_tableaux, Tableau, TwoLinedArray};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

fn x(i: u32, j: u32) -> Monomial {
    Monomial::var(pt(i, j))
}

fn within(elapsed: Duration, budget: Duration, summary: String) -> Verdict {
    if elapsed < budget {
        Ok(format!("{summary} in {:.2}s", elapsed.as_secs_f64()))
    } else {
        Err(format!(
            "{summary} but took {:.2}s (budget {}s)",
            elapsed.as_secs_f64(),
            budget.as_secs()
        ))
    }
}

fn natural(s: &CogeneratorSpec) -> (Vec<Polynomial>, Vec<Monomial>) {
    let tuples = natural_generators(s, default_max_size(s), DEFAULT_GENERATOR_CAP).unwrap();
    let mut pf = PfaffianExpander::new();
    (
        tuples.iter().map(|t| pf.pfaffian(t)).collect(),
        tuples.iter().map(IndexTuple::adiag).collect(),
    )
}

fn tableau_corpus() -> Vec<Tableau> {
    standard_d_tableaux(6, Some(8), None)
}

fn c1_multiplicity() -> Verdict {
    let start = Instant::now();
    let e = multiplicity(&spec(&[4, 8, 9, 12], 15))
        .map_err(|e| e.to_string())?
        .multiplicity;
    let elapsed = start.elapsed();
    if e != BigInt::from(50752) {
        return Err(format!("e([4,8,9,12],15) = {e}"));
    }
    within(elapsed, Duration::from_secs(1), "e([4,8,9,12],15) = 50752".into())
}

fn c2_bkrs_example() -> Verdict {
    let t = Tableau::from_columns(vec![vec![1, 3, 4, 5], vec![2, 3], vec![2, 5]]).unwrap();
    let g = bkrs(&t).unwrap().to_monomial().unwrap();
    let f = krs(&t, &t).unwrap().to_monomial().unwrap();
    let want_g = x(2, 5).pow(2).mul(&x(3, 4)).mul(&x(1, 3));
    let want_f = x(2, 5).pow(4).mul(&x(3, 4).pow(2)).mul(&x(1, 3).pow(2));
    if g == want_g && f == want_f {
        Ok(format!("bkrs = {g}, krs(T,T) = {f}"))
    } else {
        Err(format!("bkrs = {g}, krs(T,T) = {f}"))
    }
}

fn c3_square_and_width() -> Verdict {
    let start = Instant::now();
    let corpus = tableau_corpus();
    let mut bad = 0;
    for t in &corpus {
        let a = bkrs(t).unwrap();
        if krs(t, t).unwrap().to_monomial().unwrap() != a.to_monomial().unwrap().pow(2) {
            bad += 1;
        }
        if width(&a) * 2 != t.length() {
            bad += 1;
        }
    }
    let summary = format!("{} tableaux, {bad} violations", corpus.len());
    if bad > 0 {
        return Err(summary);
    }
    within(start.elapsed(), Duration::from_secs(120), summary)
}

fn c4_roundtrip() -> Verdict {
    let corpus = tableau_corpus();
    let mut seen: HashMap<TwoLinedArray, &Tableau> = HashMap::new();
    let mut bad = 0;
    for t in &corpus {
        let a = bkrs(t).unwrap();
        if bkrs_inverse(&a).as_ref() != Ok(t) {
            bad += 1;
        }
        if seen.insert(a, t).is_some() {
            bad += 1;
        }
    }
    let summary = format!(
        "{} tableaux, {} distinct images, {bad} violations",
        corpus.len(),
        seen.len()
    );
    if bad == 0 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn c5_positive_direction() -> Verdict {
    let start = Instant::now();
    let specs: Vec<CogeneratorSpec> = all_specs(7)
        .into_iter()
        .filter(CogeneratorSpec::is_g_pfaffian)
        .collect();
    let mut failures = Vec::new();
    let mut computed = 0;
    for s in &specs {
        let (polys, adiags) = natural(s);
        if polys.is_empty() {
            // zero ideal: no generators on any side
            if !initial_ideal_generators_lifted(s, true).unwrap().is_empty() {
                failures.push(s.to_string());
            }
            continue;
        }
        computed += 1;
        let lms = buchberger(&polys).unwrap().leading_monomials();
        let ok = monomial_span_equal(&adiags, &lms)
            && [true, false]
                .iter()
                .all(|&m| monomial_span_equal(&initial_ideal_generators_lifted(s, m).unwrap(), &lms));
        if !ok {
            failures.push(s.to_string());
        }
    }
    let summary = format!(
        "{} G-Pfaffian specs with n <= 7 ({computed} nonzero ideals), {} mismatches",
        specs.len(),
        failures.len()
    );
    if !failures.is_empty() {
        return Err(format!("{summary}: {}", failures.join("; ")));
    }
    within(start.elapsed(), Duration::from_secs(600), summary)
}

fn c6_negative_direction() -> Verdict {
    let specs: Vec<CogeneratorSpec> = all_specs(7)
        .into_iter()
        .filter(|s| !s.is_g_pfaffian() && first_gap_index(s.alpha()) + 1 < s.alpha().size())
        .collect();
    let mut failures = Vec::new();
    for s in &specs {
        let (polys, adiags) = natural(s);
        let c = counterexample_witness(s).unwrap();
        let gb = buchberger(&polys).unwrap();
        let in_ideal = normal_form(&c.element, &gb.computed_basis).is_zero();
        let outside = !in_monomial_ideal(&c.witness, &adiags);
        let lead = c.element.leading_monomial() == Some(&c.witness);
        if !(in_ideal && outside && lead) {
            failures.push(s.to_string());
        }
    }
    let witness = counterexample_witness(&spec(&[1, 2, 4, 5], 6)).unwrap().witness;
    let want = x(1, 5).mul(&x(2, 4)).mul(&x(1, 3));
    let summary = format!(
        "{} non-G specs with n <= 7, {} failures; [1,2,4,5],6 witness {witness}",
        specs.len(),
        failures.len()
    );
    if failures.is_empty() && witness == want && !specs.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary} {}", failures.join("; ")))
    }
}

/// Compares the region face test with two independent oracles: the
/// natural-generator anti-diagonals and the explicit initial-ideal families.
struct FaceComparison {
    spec: CogeneratorSpec,
    pts: Vec<LatticePoint>,
    forbidden: Vec<u128>,
    families: ForbiddenAdiagOracle,
}

impl FaceComparison {
    fn new(s: CogeneratorSpec) -> Self {
        Self {
            pts: triangle(s.n()),
            forbidden: forbidden_masks(&s),
            families: ForbiddenAdiagOracle::new(&s).unwrap(),
            spec: s,
        }
    }

    fn disagrees(&self, mask: u128) -> bool {
        let z = Face::from_points((0..self.pts.len()).filter(|&k| mask >> k & 1 == 1).map(|k| self.pts[k]));
        let ours = is_face(&z, &self.spec).unwrap();
        ours != common::avoids(mask, &self.forbidden) || ours != self.families.is_face_mask(mask)
    }
}

fn c7_face_oracle() -> Verdict {
    let exhaustive = FaceComparison::new(spec(&[1, 3, 4, 6], 6));
    let total = 1u128 << exhaustive.pts.len();
    let mut bad = (0..total).filter(|&m| exhaustive.disagrees(m)).count();
    let mut parts = vec![format!("[1,3,4,6],6 exhaustive {total}")];

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let samples = 100_000;
    for s in [spec(&[1, 3, 4, 7], 8), spec(&[1, 4, 5, 6, 7, 9], 9)] {
        let cmp = FaceComparison::new(s.clone());
        let mut order: Vec<usize> = (0..cmp.pts.len()).collect();
        let mut faces = 0;
        for _ in 0..samples {
            let size = rng.random_range(0..=16);
            order.shuffle(&mut rng);
            let mask = order[..size].iter().fold(0u128, |acc, &k| acc | 1u128 << k);
            if !cmp.disagrees(mask) && common::avoids(mask, &cmp.forbidden) {
                faces += 1;
            }
            bad += cmp.disagrees(mask) as usize;
        }
        parts.push(format!("{s} random {samples} (seed 0, {faces} faces)"));
    }
    let summary = format!("{}; {bad} disagreements", parts.join(", "));
    if bad == 0 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn c8_concordance() -> Verdict {
    let named: [(&[u32], u32); 6] = [
        (&[1, 3, 4, 6], 6),
        (&[1, 2, 3, 5], 6),
        (&[1, 3], 5),
        (&[1, 4, 5, 6], 6),
        (&[1, 3, 4, 7], 7),
        (&[1, 3, 4, 5, 6, 8], 8),
    ];
    let mut parts = Vec::new();
    let mut bad = 0;
    for (alpha, n) in named {
        let s = spec(alpha, n);
        let facets = enumerate_facets(&s).unwrap().len();
        let e = multiplicity(&s).unwrap().multiplicity;
        let brute = if n <= 7 { Some(maximal_faces(&s).len()) } else { None };
        if BigInt::from(facets) != e || brute.is_some_and(|b| b != facets) {
            bad += 1;
        }
        parts.push(match brute {
            Some(b) => format!("{s}: {facets} facets, e = {e}, {b} maximal faces"),
            None => format!("{s}: {facets} facets, e = {e}"),
        });
    }
    let sweep = reduced_g_specs(2, 8);
    for s in &sweep {
        if BigInt::from(enumerate_facets(s).unwrap().len()) != multiplicity(s).unwrap().multiplicity {
            bad += 1;
        }
    }
    let first = enumerate_facets(&spec(&[1, 3, 4, 6], 6)).unwrap().len();
    let summary = format!(
        "{}; sweep of {} reduced G-Pfaffians n <= 8; {bad} mismatches",
        parts.join("; "),
        sweep.len()
    );
    if bad == 0 && first == 7 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn c9_purity() -> Verdict {
    let mut specs = reduced_g_specs(2, 8);
    specs.push(spec(&[1, 5, 6, 9], 12));
    let mut exceptions = 0;
    let mut facets_seen = 0;
    for s in &specs {
        let d = facet_size_formula(s).unwrap();
        for f in enumerate_facets(s).unwrap() {
            facets_seen += 1;
            if f.len() as i64 != d {
                exceptions += 1;
            }
        }
    }
    let summary = format!(
        "{} instances, {facets_seen} facets, {exceptions} exceptions ([1,5,6,9],12: d = 27)",
        specs.len()
    );
    if exceptions == 0 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn c10_shelling_and_ball() -> Verdict {
    let specs = reduced_g_specs(2, 8);
    let mut bad = Vec::new();
    for s in &specs {
        let facets = enumerate_facets(s).unwrap();
        let shelled = shelling_order(&facets).map(|o| verify_shelling(&o)).unwrap_or(false);
        if !shelled || !ball_certificate(&facets) {
            bad.push(s.to_string());
        }
    }
    let summary = format!("{} instances, {} failures", specs.len(), bad.len());
    if bad.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}: {}", bad.join("; ")))
    }
}

fn c11_adiag() -> Verdict {
    let tuples = all_tuples(8, 8);
    let mut pf = PfaffianExpander::new();
    let bad = tuples
        .iter()
        .filter(|t| pf.pfaffian(t).initial_term().unwrap().monomial != t.adiag())
        .count();
    let summary = format!("{} index tuples with entries <= 8, {bad} exceptions", tuples.len());
    if bad == 0 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

/// Which way the first column `beta` fails to dominate `alpha`.
fn first_column_case(alpha: &IndexTuple, beta: &IndexTuple) -> usize {
    let (a, b) = (alpha.as_slice(), beta.as_slice());
    let first_drop = (0..a.len().min(b.len())).find(|&i| b[i] < a[i]);
    match first_drop {
        Some(0) => 0,
        Some(i) if i + 1 < a.len() => 1,
        Some(_) if b.len() == a.len() => 2,
        _ => 3,
    }
}

fn c12_first_column_divisibility() -> Verdict {
    let mut case_counts = [0usize; 4];
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for n in 2..=7u32 {
        let tableaux = standard_d_tableaux(n, None, Some(3));
        let specs: Vec<CogeneratorSpec> = all_specs(n)
            .into_iter()
            .filter(|s| s.n() == n && s.is_g_pfaffian())
            .collect();
        for s in &specs {
            let gens: Vec<IndexTuple> = all_tuples(n, n as usize)
                .into_iter()
                .filter(|b| !poset_leq(s.alpha(), b))
                .collect();
            let gen_set: BTreeSet<&IndexTuple> = gens.iter().collect();
            let adiags: Vec<Monomial> = gens.iter().map(IndexTuple::adiag).collect();
            for t in tableaux.iter().filter(|t| !t.is_empty()) {
                let first = IndexTuple::new(t.columns()[0].clone()).unwrap();
                if !gen_set.contains(&first) {
                    continue;
                }
                checked += 1;
                case_counts[first_column_case(s.alpha(), &first)] += 1;
                let m = bkrs(t).unwrap().to_monomial().unwrap();
                if !in_monomial_ideal(&m, &adiags) && bad.len() < 3 {
                    bad.push(format!("{s}: {t}"));
                }
            }
        }
    }
    let summary = format!(
        "{checked} tableaux; cases b1<a1: {}, b2<a2: {}, s=t with b2t<a2t: {}, s>t: {}; {} violations",
        case_counts[0],
        case_counts[1],
        case_counts[2],
        case_counts[3],
        bad.len()
    );
    if bad.is_empty() && case_counts.iter().all(|&c| c > 0) {
        Ok(summary)
    } else {
        Err(format!("{summary} {}", bad.join("; ")))
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 12] = [
        ("multiplicity reproduction", c1_multiplicity),
        ("BKRS and KRS worked example", c2_bkrs_example),
        ("squaring and width laws", c3_square_and_width),
        ("BKRS bijection roundtrip", c4_roundtrip),
        ("Groebner basis, G-Pfaffians", c5_positive_direction),
        ("Groebner basis fails off G-Pfaffians", c6_negative_direction),
        ("face test oracle equivalence", c7_face_oracle),
        ("facet count equals multiplicity", c8_concordance),
        ("purity and dimension", c9_purity),
        ("shellability and ball", c10_shelling_and_ball),
        ("anti-diagonal initial terms", c11_adiag),
        ("first-column divisibility", c12_first_column_divisibility),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let verdict = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(msg) => println!("PASS {:>2} {name}: {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
