use std::time::Instant;

use pfaffian_ideals::groebner::{buchberger, monomial_span_equal, normal_form};
use pfaffian_ideals::ideals::{
    all_specs, counterexample_witness, default_max_size, initial_ideal_generators_lifted, natural_generators,
    CogeneratorSpec, DEFAULT_GENERATOR_CAP,
};
use pfaffian_ideals::pfaffian::PfaffianExpander;
use pfaffian_ideals::poly::{Monomial, Polynomial};

fn specs(max_n: u32, g: bool) -> Vec<CogeneratorSpec> {
    all_specs(max_n)
        .into_iter()
        .filter(|s| s.is_g_pfaffian() == g)
        .collect()
}

fn natural(spec: &CogeneratorSpec) -> (Vec<Polynomial>, Vec<Monomial>) {
    let tuples = natural_generators(spec, default_max_size(spec), DEFAULT_GENERATOR_CAP).unwrap();
    let mut pf = PfaffianExpander::new();
    (
        tuples.iter().map(|t| pf.pfaffian(t)).collect(),
        tuples.iter().map(|t| t.adiag()).collect(),
    )
}

#[test]
fn g_pfaffians_up_to_n7() {
    let start = Instant::now();
    let all = specs(7, true);
    for spec in &all {
        let (polys, adiags) = natural(spec);
        if polys.is_empty() {
            continue;
        }
        let gb = buchberger(&polys).unwrap();
        let lms = gb.leading_monomials();
        assert!(monomial_span_equal(&adiags, &lms), "{spec}");
        for minimal in [true, false] {
            let ii = initial_ideal_generators_lifted(spec, minimal).unwrap();
            assert!(monomial_span_equal(&ii, &lms), "{spec} minimal={minimal}");
        }
    }
    eprintln!("{} specs in {:?}", all.len(), start.elapsed());
}

#[test]
fn non_g_counterexamples_up_to_n7() {
    let start = Instant::now();
    let all = specs(7, false);
    for spec in &all {
        let (polys, adiags) = natural(spec);
        let c = counterexample_witness(spec).unwrap();
        let gb = buchberger(&polys).unwrap();
        assert!(gb.contains(&c.element), "{spec}");
        assert!(!normal_form(&c.element, &polys).is_zero(), "{spec}");
        assert!(!adiags.iter().any(|m| m.divides(&c.witness)), "{spec}");
    }
    eprintln!("{} specs in {:?}", all.len(), start.elapsed());
}
