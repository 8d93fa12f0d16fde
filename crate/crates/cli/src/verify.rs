use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use macforge_core::gw::{chi_a1_davis, chi_a1_rebuilt_from_table, chi_a1_splitting_from_table};
use macforge_core::io::ComplexInput;
use macforge_core::motivic::{
    a1_betti_from_table, cellular_from_summands, cellular_from_table, classical_bigraded_betti,
};
use macforge_core::oracles::{
    cubical_complex_real_mac, cubical_euler_characteristic, koszul_tor_ranks, Coefficients, MAX_CUBICAL_VERTICES,
};
use macforge_core::splitting::{rzk_homology_from_table, SubcomplexTable};
use macforge_core::{GradedHomology, HomologyGroup, SimplicialComplex};

use crate::report::{Check, Report};

pub const CUBICAL_VS_SPLITTING: &str = "cubical model of RZ_K matches the real splitting";
pub const KOSZUL_VS_A1: &str = "Koszul Tor ranks over Q match the A1-Betti table";
pub const KOSZUL_VS_HOCHSTER: &str = "Koszul Tor ranks over Q match the Hochster table";
pub const CUBICAL_EULER: &str = "cubical Euler characteristic equals the signature of chi_A1";
pub const EULER_TRIPLE: &str = "Davis, splitting and rebuilt chi_A1 agree";
pub const CELLULAR_RULES: &str = "cellular A1-homology matches the smash/suspension rules";

const NAMES: [&str; 6] =
    [CUBICAL_VS_SPLITTING, KOSZUL_VS_A1, KOSZUL_VS_HOCHSTER, CUBICAL_EULER, EULER_TRIPLE, CELLULAR_RULES];

/// Outcome of one named check across the corpus.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub total: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<ComplexInput>,
}

/// Reduced homology of the cubical model, obtained by removing one `Z` from degree 0.
fn cubical_reduced(k: &SimplicialComplex) -> GradedHomology {
    let h = cubical_complex_real_mac(k).expect("caller checks the size limit").homology();
    let top = h.max_degree().unwrap_or(0).max(0);
    let groups = (0..=top)
        .map(|n| {
            let g = h.get(n);
            if n == 0 {
                HomologyGroup::new(g.free_rank().saturating_sub(1), g.torsion().to_vec())
            } else {
                g
            }
        })
        .collect();
    GradedHomology::new(0, groups)
}

fn same_graded(a: &GradedHomology, b: &GradedHomology) -> bool {
    let top = a.max_degree().unwrap_or(0).max(b.max_degree().unwrap_or(0));
    (-1..=top).all(|n| a.get(n) == b.get(n))
}

/// Results of every applicable check on one complex, indexed like `NAMES`.
fn check_complex(k: &SimplicialComplex) -> [Option<bool>; 6] {
    let table = SubcomplexTable::new(k);
    let ghost_free = !k.has_ghosts();
    let koszul = koszul_tor_ranks(k, Coefficients::Rational).expect("rational coefficients are always valid");
    let cubical_ok = k.m() <= MAX_CUBICAL_VERTICES;
    let cubical =
        (cubical_ok && ghost_free).then(|| same_graded(&cubical_reduced(k), &rzk_homology_from_table(&table)));
    let cubical_euler = cubical_ok.then(|| {
        let chi = cubical_euler_characteristic(k).expect("size checked");
        chi_a1_davis(k).signature() == chi.into()
    });
    let triple = ghost_free.then(|| {
        let davis = chi_a1_davis(k);
        davis == chi_a1_splitting_from_table(&table) && davis == chi_a1_rebuilt_from_table(&table)
    });
    let cellular = ghost_free.then(|| cellular_from_table(&table) == cellular_from_summands(&table));
    [
        cubical,
        ghost_free.then(|| koszul == a1_betti_from_table(&table)),
        Some(koszul == classical_bigraded_betti(k)),
        cubical_euler,
        triple,
        cellular,
    ]
}

pub fn run_suites(complexes: &[SimplicialComplex]) -> Vec<SuiteResult> {
    let outcomes: Vec<[Option<bool>; 6]> = complexes.par_iter().map(check_complex).collect();
    NAMES
        .iter()
        .enumerate()
        .map(|(c, name)| {
            let mut total = 0;
            let mut failures = 0;
            let mut counterexample = None;
            for (k, row) in complexes.iter().zip(&outcomes) {
                let Some(ok) = row[c] else { continue };
                total += 1;
                if !ok {
                    failures += 1;
                    counterexample.get_or_insert_with(|| ComplexInput::from_complex(k));
                }
            }
            SuiteResult { name: name.to_string(), passed: failures == 0, total, failures, counterexample }
        })
        .collect()
}

pub fn oracle_report(complexes: &[SimplicialComplex], options: serde_json::Value, mut report: Report) -> Report {
    let suites = run_suites(complexes);
    report.options = options;
    report.checks = suites
        .iter()
        .map(|s| Check::with_detail(&s.name, s.passed, format!("{} of {} failed", s.failures, s.total)))
        .collect();
    if complexes.iter().any(SimplicialComplex::has_ghosts) {
        report.warnings.push("checks that need a ghost-free complex were skipped for ghost inputs".into());
    }
    if complexes.iter().any(|k| k.m() > MAX_CUBICAL_VERTICES) {
        report.warnings.push(format!("cubical checks skipped for m > {MAX_CUBICAL_VERTICES}"));
    }
    let mut md = format!("{} complexes\n\n| check | checked | failed |\n|---|---|---|\n", complexes.len());
    for s in &suites {
        md.push_str(&format!("| {} | {} | {} |\n", s.name, s.total, s.failures));
    }
    for s in suites.iter().filter(|s| !s.passed) {
        if let Some(c) = &s.counterexample {
            md.push_str(&format!("\nCounterexample for \"{}\": `{}`\n", s.name, c.to_json()));
        }
    }
    report.payload = json!({ "complexes": complexes.len(), "suites": suites });
    report.markdown = md;
    report
}
