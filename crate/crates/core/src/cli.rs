//! The `pfideal` command line: argument parsing, dispatch, and reports.
//!
//! Exit status is 0 on success, 1 on invalid input, and 2 when a `verify`
//! check finds a violation (the JSON report then carries a certificate).

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::complex::{
    enumerate_facets_capped, is_face, ridge_report, shelling_order, shelling_violation, verify_pure_and_dimension,
    Face, ForbiddenAdiagOracle, DEFAULT_FACET_CAP,
};
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger_with, in_monomial_ideal, monomial_span_equal, span_difference, BuchbergerConfig, Origin,
};
use crate::ideals::{
    all_g_specs, counterexample_witness, default_max_size, initial_ideal_generators_lifted, natural_generators,
    reduce_cogenerator, CogeneratorSpec, GapParity, DEFAULT_GENERATOR_CAP,
};
use crate::json;
use crate::multiplicity::multiplicity;
use crate::pfaffian::{all_tuples, IndexTuple, PfaffianExpander};
use crate::tableaux::{bkrs, bkrs_inverse, krs, standard_d_tableaux, width};

#[derive(Debug, Parser)]
#[command(
    name = "pfideal",
    version,
    about = "Pfaffian ideals, their initial ideals, and the associated complexes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output mode.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    /// Cogenerator, comma separated (e.g. 1,3,4,6).
    #[arg(long)]
    pub alpha: IndexTuple,
    /// Size of the ambient matrix.
    #[arg(long)]
    pub n: u32,
}

impl SpecArgs {
    fn spec(&self) -> Result<CogeneratorSpec> {
        CogeneratorSpec::new(self.alpha.clone(), self.n)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand the Pfaffian of a principal submatrix.
    Pfaffian {
        #[arg(long)]
        indices: IndexTuple,
        #[arg(long)]
        n: u32,
    },
    /// Natural generators of the cogenerated ideal.
    Generators {
        #[command(flatten)]
        spec: SpecArgs,
        /// Largest Pfaffian size to list (default min(2t+2, n)).
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
        cap: u128,
    },
    /// Generators of the initial ideal (G-Pfaffian cogenerators only).
    InitialIdeal {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        minimal: bool,
    },
    /// KRS of a pair of tableaux of equal shape.
    Krs {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// BKRS of a standard d-tableau given as {"columns":[...]}.
    Bkrs {
        #[arg(long)]
        tableau: String,
    },
    /// Invert BKRS on an array given as {"pairs":[[u,v],...]}.
    BkrsInverse {
        #[arg(long)]
        array: String,
    },
    /// Facets of the complex of the initial ideal.
    Facets {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value_t = DEFAULT_FACET_CAP)]
        cap: usize,
    },
    /// Multiplicity of the quotient ring.
    Multiplicity {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Element showing the natural generators are not a Gröbner basis.
    Counterexample {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Gbasis,
    Purity,
    Ball,
    Shelling,
    FaceOracle,
    KrsSquare,
    Width,
    Roundtrip,
    Adiag,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Gbasis => "gbasis",
            Check::Purity => "purity",
            Check::Ball => "ball",
            Check::Shelling => "shelling",
            Check::FaceOracle => "face-oracle",
            Check::KrsSquare => "krs-square",
            Check::Width => "width",
            Check::Roundtrip => "roundtrip",
            Check::Adiag => "adiag",
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub check: Check,
    /// Cogenerator; when omitted, cogenerator checks sweep every reduced
    /// G-Pfaffian with n <= --max-n.
    #[arg(long, requires = "n")]
    pub alpha: Option<IndexTuple>,
    #[arg(long, requires = "alpha")]
    pub n: Option<u32>,
    /// Sweep bound (default 7; 8 for adiag).
    #[arg(long)]
    pub max_n: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random subsets for face-oracle when exhaustive search is too large.
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    /// Face-oracle is exhaustive when the triangle has at most this many points.
    #[arg(long, default_value_t = 20)]
    pub exhaustive_points: usize,
    /// Tableau corpus: largest entry.
    #[arg(long, default_value_t = 6)]
    pub max_entry: u32,
    /// Tableau corpus: most cells.
    #[arg(long, default_value_t = 8)]
    pub max_cells: usize,
    #[arg(long, default_value_t = 50_000)]
    pub max_pairs: usize,
}

/// A finished command: JSON value, a one-line text rendering, and whether a
/// violation was found.
#[derive(Debug, Clone)]
pub struct Report {
    pub value: Value,
    pub text: String,
    pub violation: bool,
}

impl Report {
    fn ok(value: Value, text: impl Into<String>) -> Self {
        Self {
            value,
            text: text.into(),
            violation: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if status == 0 {
                (rendered, String::new())
            } else {
                (String::new(), rendered)
            };
            return Outcome { status, stdout, stderr };
        }
    };
    match execute(&cli.command) {
        Ok(report) => Outcome {
            status: if report.violation { 2 } else { 0 },
            stdout: match cli.format {
                Format::Json => json::render(&report.value),
                Format::Text => format!("{}\n", report.text),
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            status: if matches!(e, Error::Violation(_)) { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Pfaffian { indices, n } => {
            indices.check_range(*n)?;
            let p = PfaffianExpander::new().pfaffian(indices);
            let lead = p.initial_term()?.monomial;
            Ok(Report::ok(
                json!({
                    "indices": json::tuple(indices),
                    "n": n,
                    "initial_monomial": json::monomial(&lead),
                    "polynomial": json::polynomial(&p),
                }),
                p.to_string(),
            ))
        }
        Command::Generators { spec, max_size, cap } => {
            let s = spec.spec()?;
            let size = max_size.unwrap_or_else(|| default_max_size(&s));
            let gens = natural_generators(&s, size, *cap)?;
            let text = gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ");
            Ok(Report::ok(
                json!({
                    "alpha": json::tuple(s.alpha()),
                    "n": s.n(),
                    "max_size": size,
                    "count": gens.len(),
                    "generators": gens.iter().map(|g| json!({"indices": json::tuple(g), "adiag": json::monomial(&g.adiag())})).collect::<Vec<_>>(),
                }),
                text,
            ))
        }
        Command::InitialIdeal { spec, minimal } => {
            let s = spec.spec()?;
            let gens = initial_ideal_generators_lifted(&s, *minimal)?;
            let text = gens.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ");
            Ok(Report::ok(
                json!({
                    "alpha": json::tuple(s.alpha()),
                    "n": s.n(),
                    "minimal": minimal,
                    "count": gens.len(),
                    "generators": json::monomials(&gens),
                }),
                text,
            ))
        }
        Command::Krs { left, right } => {
            let a = krs(&json::parse_tableau(left)?, &json::parse_tableau(right)?)?;
            let m = a.to_monomial()?;
            Ok(Report::ok(
                json!({"array": json::two_lined(&a), "monomial": json::monomial(&m)}),
                m.to_string(),
            ))
        }
        Command::Bkrs { tableau } => {
            let a = bkrs(&json::parse_tableau(tableau)?)?;
            let m = a.to_monomial()?;
            Ok(Report::ok(
                json!({"array": json::two_lined(&a), "monomial": json::monomial(&m)}),
                m.to_string(),
            ))
        }
        Command::BkrsInverse { array } => {
            let t = bkrs_inverse(&json::parse_two_lined(array)?)?;
            Ok(Report::ok(json!({"tableau": json::tableau(&t)}), t.to_string()))
        }
        Command::Facets { spec, count_only, cap } => {
            let s = spec.spec()?;
            let reduced = reduce_cogenerator(&s);
            let facets = enumerate_facets_capped(&reduced, *cap)?;
            let mut value = json!({
                "alpha": json::tuple(s.alpha()),
                "n": s.n(),
                "reduced_alpha": json::tuple(reduced.alpha()),
                "reduced_n": reduced.n(),
                "count": facets.len(),
            });
            if !count_only {
                value["facets"] = Value::Array(facets.iter().map(json::facet).collect());
            }
            Ok(Report::ok(value, format!("{} facets", facets.len())))
        }
        Command::Multiplicity { spec } => {
            let r = multiplicity(&spec.spec()?)?;
            Ok(Report::ok(
                json!({
                    "multiplicity": r.multiplicity.to_string(),
                    "reduced_alpha": json::tuple(r.reduced.alpha()),
                    "reduced_n": r.reduced.n(),
                    "terms": r.terms.iter().map(|t| json!({
                        "h": t.h,
                        "k": t.k,
                        "corner_paths": t.corner_paths.to_string(),
                        "determinant": t.determinant.to_string(),
                        "value": t.value().to_string(),
                    })).collect::<Vec<_>>(),
                }),
                r.multiplicity.to_string(),
            ))
        }
        Command::Counterexample { spec } => {
            let s = spec.spec()?;
            let c = counterexample_witness(&s)?;
            Ok(Report::ok(
                json!({
                    "alpha": json::tuple(s.alpha()),
                    "n": s.n(),
                    "counterexample": counterexample_json(&c),
                }),
                format!("{} witness {}", c.element, c.witness),
            ))
        }
        Command::Verify(args) => verify(args),
    }
}

fn counterexample_json(c: &crate::ideals::Counterexample) -> Value {
    json!({
        "gap_index": c.gap_index,
        "parity": match c.parity { GapParity::Even => "even", GapParity::Odd => "odd" },
        "beta1": json::tuple(&c.beta1),
        "gamma1": json::tuple(&c.gamma1),
        "beta2": json::tuple(&c.beta2),
        "gamma2": json::tuple(&c.gamma2),
        "element": json::polynomial(&c.element),
        "witness": json::monomial(&c.witness),
    })
}

/// Outcome of one check on one instance; `Err` carries the certificate.
type CheckResult = std::result::Result<Value, Value>;

fn verify(args: &VerifyArgs) -> Result<Report> {
    let name = args.check.name();
    let (corpus_size, failure, details) = match args.check {
        Check::KrsSquare | Check::Width | Check::Roundtrip => tableau_check(args)?,
        Check::Adiag => adiag_check(args.max_n.unwrap_or(8)),
        _ => {
            let specs = match (&args.alpha, args.n) {
                (Some(alpha), Some(n)) => vec![CogeneratorSpec::new(alpha.clone(), n)?],
                _ => all_g_specs(args.max_n.unwrap_or(7))
                    .into_iter()
                    .filter(CogeneratorSpec::is_reduced)
                    .collect(),
            };
            let mut details = Vec::new();
            let mut failure = None;
            for s in &specs {
                match spec_check(args, s)? {
                    Ok(v) => details.push(v),
                    Err(cert) => {
                        failure = Some(cert);
                        break;
                    }
                }
            }
            (specs.len(), failure, Value::Array(details))
        }
    };
    let verdict = if failure.is_some() { "fail" } else { "pass" };
    let mut value = json!({
        "check": name,
        "verdict": verdict,
        "corpus_size": corpus_size,
        "seed": args.seed,
        "details": details,
    });
    if let Some(cert) = &failure {
        value["certificate"] = cert.clone();
    }
    Ok(Report {
        text: format!("check {name}: {verdict} (corpus {corpus_size}, seed {})", args.seed),
        violation: failure.is_some(),
        value,
    })
}

fn spec_header(s: &CogeneratorSpec) -> Value {
    json!({"alpha": json::tuple(s.alpha()), "n": s.n()})
}

fn with_header(s: &CogeneratorSpec, extra: Value) -> Value {
    let mut v = spec_header(s);
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    v
}

fn spec_check(args: &VerifyArgs, s: &CogeneratorSpec) -> Result<CheckResult> {
    let wrap = |r: CheckResult| -> CheckResult {
        match r {
            Ok(v) => Ok(with_header(s, v)),
            Err(v) => Err(with_header(s, v)),
        }
    };
    let reduced = reduce_cogenerator(s);
    Ok(wrap(match args.check {
        Check::Gbasis => gbasis_check(&reduced, args.max_pairs)?,
        Check::Purity => {
            let r = verify_pure_and_dimension(&reduced)?;
            let body = json!({"facet_count": r.facet_count, "dimension": r.dimension});
            match r.first_exception {
                None => Ok(body),
                Some(size) => Err(json!({"facet_count": r.facet_count, "dimension": r.dimension, "facet_size": size})),
            }
        }
        Check::Ball => {
            let facets = enumerate_facets_capped(&reduced, DEFAULT_FACET_CAP)?;
            let r = ridge_report(&facets);
            let body = json!({"facet_count": facets.len(), "ridges": r.ridges, "boundary_ridges": r.boundary_ridges});
            match (&r.overfull_ridge, r.holds()) {
                (_, true) => Ok(body),
                (Some(ridge), false) => Err(json!({"overfull_ridge": json::face(ridge)})),
                (None, false) => Err(json!({"boundary_ridges": 0})),
            }
        }
        Check::Shelling => {
            let facets = enumerate_facets_capped(&reduced, DEFAULT_FACET_CAP)?;
            let order = shelling_order(&facets)?;
            match shelling_violation(&order) {
                None => Ok(json!({"facet_count": order.len()})),
                Some((j, i)) => Err(json!({
                    "position": j,
                    "earlier": i,
                    "facet": json::facet(&order[j]),
                    "earlier_facet": json::facet(&order[i]),
                })),
            }
        }
        Check::FaceOracle => face_oracle_check(&reduced, args)?,
        _ => unreachable!("tableau and adiag checks take no spec"),
    }))
}

fn gbasis_check(s: &CogeneratorSpec, max_pairs: usize) -> Result<CheckResult> {
    let tuples = natural_generators(s, default_max_size(s), DEFAULT_GENERATOR_CAP)?;
    let header = json!({"reduced_alpha": json::tuple(s.alpha()), "reduced_n": s.n()});
    if tuples.is_empty() {
        return Ok(Ok(merge(json!({"basis_size": 0, "generators": 0}), header)));
    }
    let mut pf = PfaffianExpander::new();
    let polys: Vec<_> = tuples.iter().map(|t| pf.pfaffian(t)).collect();
    let adiags: Vec<_> = tuples.iter().map(IndexTuple::adiag).collect();
    let config = BuchbergerConfig {
        max_pairs,
        ..Default::default()
    };
    let gb = buchberger_with(&polys, config)?;
    if let Err(v) = gb.certify() {
        return Ok(Err(merge(json!({"engine_self_check": format!("{v:?}")}), header)));
    }
    let lms = gb.leading_monomials();
    let stats = json!({
        "basis_size": gb.computed_basis.len(),
        "generators": polys.len(),
        "pairs_processed": gb.stats.processed,
        "pairs_pruned_coprime": gb.stats.pruned_coprime,
    });
    if monomial_span_equal(&adiags, &lms) {
        return Ok(Ok(merge(stats, header)));
    }
    let new_lm = span_difference(&lms, &adiags).expect("adiags lie in the initial ideal");
    let k = lms.iter().position(|m| *m == new_lm).expect("taken from lms");
    let origin = match gb.origins[k] {
        Origin::Input(i) => json!({"input": i}),
        Origin::SPair(i, j) => json!({"s_pair": [i, j]}),
    };
    let mut cert = json!({
        "new_leading_monomial": json::monomial(&new_lm),
        "basis_element": json::polynomial(&gb.computed_basis[k]),
        "origin": origin,
    });
    if let Ok(c) = counterexample_witness(s) {
        cert["standard_monomial"] = json::monomial(&c.witness);
        cert["counterexample"] = counterexample_json(&c);
        cert["element_in_ideal"] = json!(gb.contains(&c.element));
        cert["witness_in_initial_ideal"] = json!(in_monomial_ideal(&c.witness, &lms));
        cert["witness_outside_adiag_span"] = json!(!in_monomial_ideal(&c.witness, &adiags));
    }
    Ok(Err(merge(merge(stats, cert), header)))
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(m), Value::Object(e)) = (&mut a, b) {
        m.extend(e);
    }
    a
}

fn face_oracle_check(s: &CogeneratorSpec, args: &VerifyArgs) -> Result<CheckResult> {
    let oracle = ForbiddenAdiagOracle::new(s)?;
    let pts = oracle.points();
    let mut tested = 0usize;
    let mut compare = |z: &Face| -> Result<Option<Value>> {
        tested += 1;
        let ours = is_face(z, s)?;
        let theirs = oracle.is_face(z);
        Ok((ours != theirs).then(|| json!({"face": json::face(z), "is_face": ours, "oracle": theirs})))
    };
    let exhaustive = pts.len() <= args.exhaustive_points;
    let mut bad = None;
    if exhaustive {
        for mask in 0u128..1 << pts.len() {
            let z = Face::from_points((0..pts.len()).filter(|&k| mask >> k & 1 == 1).map(|k| pts[k]));
            if let Some(c) = compare(&z)? {
                bad = Some(c);
                break;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let mut pool = pts.clone();
        for _ in 0..args.samples {
            let size = rng.random_range(0..=pts.len() / 2);
            pool.shuffle(&mut rng);
            let z = Face::from_points(pool[..size].iter().copied());
            if let Some(c) = compare(&z)? {
                bad = Some(c);
                break;
            }
        }
    }
    let body = json!({"subsets_tested": tested, "exhaustive": exhaustive});
    Ok(match bad {
        None => Ok(body),
        Some(c) => Err(merge(body, c)),
    })
}

fn tableau_check(args: &VerifyArgs) -> Result<(usize, Option<Value>, Value)> {
    let corpus = standard_d_tableaux(args.max_entry, Some(args.max_cells), None);
    let mut seen = std::collections::HashMap::new();
    for t in &corpus {
        let a = bkrs(t)?;
        let broken = match args.check {
            Check::KrsSquare => krs(t, t)?.to_monomial()? != a.to_monomial()?.pow(2),
            Check::Width => width(&a) * 2 != t.length(),
            _ => {
                let back = bkrs_inverse(&a).ok();
                back.as_ref() != Some(t) || seen.insert(a.clone(), t.clone()).is_some()
            }
        };
        if broken {
            let cert = json!({"tableau": json::tableau(t), "bkrs": json::two_lined(&a)});
            return Ok((corpus.len(), Some(cert), json!([])));
        }
    }
    let details = json!([{"max_entry": args.max_entry, "max_cells": args.max_cells}]);
    Ok((corpus.len(), None, details))
}

fn adiag_check(max_n: u32) -> (usize, Option<Value>, Value) {
    let tuples = all_tuples(max_n, max_n as usize);
    let mut pf = PfaffianExpander::new();
    for t in &tuples {
        let lead = pf.pfaffian(t).initial_term().expect("Pfaffians are nonzero").monomial;
        if lead != t.adiag() {
            let cert = json!({"indices": json::tuple(t), "initial_monomial": json::monomial(&lead), "adiag": json::monomial(&t.adiag())});
            return (tuples.len(), Some(cert), json!([]));
        }
    }
    (tuples.len(), None, json!([{"max_n": max_n}]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("pfideal").chain(args.iter().copied()))
    }

    fn value(o: &Outcome) -> Value {
        serde_json::from_str(&o.stdout).unwrap()
    }

    #[test]
    fn multiplicity_command() {
        let o = go(&["multiplicity", "--alpha", "4,8,9,12", "--n", "15"]);
        assert_eq!(o.status, 0);
        let v = value(&o);
        assert_eq!(v["multiplicity"], "50752");
        assert_eq!(v["reduced_alpha"], json!([1, 5, 6, 9]));
        assert_eq!(v["reduced_n"], 12);
    }

    #[test]
    fn bkrs_command() {
        let o = go(&["bkrs", "--tableau", r#"{"columns":[[1,3,4,5],[2,3],[2,5]]}"#]);
        assert_eq!(o.status, 0);
        assert_eq!(value(&o)["monomial"], json!([[[1, 3], 1], [[2, 5], 2], [[3, 4], 1]]));
    }

    #[test]
    fn gbasis_violation_has_certificate() {
        let o = go(&["verify", "--check", "gbasis", "--alpha", "1,2,4,5", "--n", "6"]);
        assert_eq!(o.status, 2);
        let v = value(&o);
        assert_eq!(v["verdict"], "fail");
        let cert = &v["certificate"];
        assert_eq!(
            cert["standard_monomial"],
            json!([[[1, 3], 1], [[1, 5], 1], [[2, 4], 1]])
        );
        assert_eq!(cert["element_in_ideal"], true);
        assert_eq!(cert["witness_outside_adiag_span"], true);
    }

    #[test]
    fn invalid_input_exits_one() {
        assert_eq!(go(&["multiplicity", "--alpha", "1,2,3", "--n", "6"]).status, 1);
        assert_eq!(go(&["multiplicity", "--alpha", "1,2,4,5", "--n", "6"]).status, 1);
        assert_eq!(go(&["frobnicate"]).status, 1);
        assert_eq!(go(&["bkrs", "--tableau", "nope"]).status, 1);
    }

    #[test]
    fn output_is_deterministic() {
        let args = ["facets", "--alpha", "1,3,4,6", "--n", "6"];
        let a = go(&args);
        assert_eq!(a, go(&args));
        assert_eq!(value(&a)["count"], 7);
    }

    #[test]
    fn text_mode() {
        let o = go(&["--format", "text", "multiplicity", "--alpha", "1,3,4,6", "--n", "6"]);
        assert_eq!(o.stdout, "7\n");
    }
}
