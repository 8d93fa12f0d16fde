use std::fmt::Write as _;

use serde_json::{json, Value};

use macforge_core::affine::{
    cellular_filtration_report, complement_ideal, jouanolou_presentation, sr_cover_presentation, RingPresentation,
};
use macforge_core::gw::{
    chi_a1_davis, chi_a1_davis_collapsed, chi_a1_from_filtration, chi_a1_rebuilt_from_table,
    chi_a1_splitting_from_table, chi_classical_polyhedral, GwField,
};
use macforge_core::homology::{betti_numbers, reduced_homology, reduced_simplicial_chain_complex};
use macforge_core::motivic::{
    a1_betti_from_table, cellular_from_summands, cellular_from_table, classical_bigraded_betti, motivic_from_table,
    ModuleFormStatus,
};
use macforge_core::oracles::{koszul_tor_ranks, Coefficients};
use macforge_core::splitting::{
    rzk_homology_from_table, splitting_from_table, zk_cohomology_from_table, zk_homology_from_table, Flavor,
    SubcomplexTable,
};
use macforge_core::{AffineError, GradedHomology, SimplicialComplex};

use crate::report::{Check, InputEcho, Report};
use crate::CliError;

fn ghost_warning(k: &SimplicialComplex, table: &SubcomplexTable) -> Option<String> {
    k.has_ghosts().then(|| {
        format!(
            "ghost vertices {:?}: {} non-faces containing them were left out of every decomposition sum",
            k.ghost_vertices().to_vec(),
            table.skipped
        )
    })
}

fn report(command: &str, k: &SimplicialComplex, options: Value) -> Report {
    Report {
        command: command.to_string(),
        input: Some(InputEcho::of(k)),
        options,
        payload: Value::Null,
        checks: Vec::new(),
        warnings: Vec::new(),
        markdown: String::new(),
    }
}

fn graded_lines(h: &GradedHomology, symbol: &str) -> String {
    if h.is_zero() {
        return format!("- all {symbol} vanish\n");
    }
    h.nonzero().map(|(n, g)| format!("- {symbol}{n} = {g}\n")).collect()
}

/// Cellular A¹-homology, Betti table, Euler characteristics and a splitting summary.
pub fn invariants(k: &SimplicialComplex, field: GwField) -> Report {
    let mut r = report("invariants", k, json!({ "field": field }));
    let table = SubcomplexTable::new(k);
    r.warnings.extend(ghost_warning(k, &table));
    let betti = a1_betti_from_table(&table);
    let davis = chi_a1_davis(k);
    let classical_rank = chi_classical_polyhedral(1, 0, k);
    let classical_signature = chi_classical_polyhedral(1, 2, k);
    r.checks.push(Check::new("rank of chi_A1 equals complex Euler characteristic", davis.rank() == classical_rank));
    r.checks.push(Check::new(
        "signature of chi_A1 equals real Euler characteristic",
        davis.signature() == classical_signature,
    ));
    r.checks.push(Check::new("A1-Betti table equals Hochster table", betti == classical_bigraded_betti(k)));
    let motivic = motivic_from_table(&table);
    let split = splitting_from_table(&table, Flavor::Motivic);
    let mut payload = serde_json::Map::new();
    let mut md = String::new();
    if k.has_ghosts() {
        r.warnings
            .push("cellular homology and the splitting Euler characteristic need a ghost-free complex; omitted".into());
    } else {
        let cellular = cellular_from_table(&table);
        let splitting = chi_a1_splitting_from_table(&table);
        let rebuilt = chi_a1_rebuilt_from_table(&table);
        r.checks.push(Check::new(
            "cellular homology agrees with smash/suspension rules",
            cellular == cellular_from_summands(&table),
        ));
        r.checks.push(Check::new("chi_A1 Davis equals splitting formula", davis == splitting));
        r.checks.push(Check::new("chi_A1 Davis equals summand-rebuilt value", davis == rebuilt));
        md.push_str("## Cellular A¹-homology\n\n");
        for (i, e) in cellular.degrees().iter().enumerate() {
            let _ = writeln!(md, "- H_{i} = {e}");
        }
        payload.insert("cellular_a1_homology".into(), serde_json::to_value(&cellular).unwrap());
        payload.insert(
            "euler_characteristic".into(),
            json!({
                "davis": davis,
                "splitting": splitting,
                "rebuilt": rebuilt,
                "rendered": davis.to_string(),
                "field_value": davis.specialize(field),
            }),
        );
    }
    if k.has_ghosts() {
        payload.insert(
            "euler_characteristic".into(),
            json!({ "davis": davis, "rendered": davis.to_string(), "field_value": davis.specialize(field) }),
        );
    }
    payload.insert("a1_betti".into(), serde_json::to_value(&betti).unwrap());
    payload.insert("motivic_cohomology".into(), serde_json::to_value(&motivic).unwrap());
    payload.insert(
        "splitting".into(),
        json!({
            "non_faces": split.summands.len(),
            "nontrivial": split.nontrivial().count(),
            "summands": split.nontrivial().collect::<Vec<_>>(),
        }),
    );
    let _ = write!(md, "\n## A¹-Euler characteristic\n\n{} ({})\n", davis, davis.specialize(field));
    let _ = write!(md, "\n## A¹-Betti numbers\n\n{}", betti.to_markdown());
    let status = serde_json::to_value(motivic.status).unwrap();
    let _ = write!(
        md,
        "\n## Motivic cohomology\n\n{}\n\nstatus: {}\n",
        motivic.render(),
        status.as_str().unwrap_or_default()
    );
    if motivic.status == ModuleFormStatus::TorsionFreeOnly {
        r.warnings
            .push("module form assumes each Σ|K_I| is a wedge of spheres; only torsion-freeness was verified".into());
    }
    let _ = write!(
        md,
        "\n## Splitting\n\n{} non-faces, {} with nonzero homology\n",
        split.summands.len(),
        split.nontrivial().count()
    );
    r.payload = Value::Object(payload);
    r.markdown = md;
    r
}

pub fn splitting(k: &SimplicialComplex, flavor: Flavor) -> Report {
    let mut r = report("splitting", k, json!({ "flavor": flavor }));
    let table = SubcomplexTable::new(k);
    r.warnings.extend(ghost_warning(k, &table));
    let split = splitting_from_table(&table, flavor);
    let mut payload = serde_json::Map::new();
    payload.insert("summands".into(), serde_json::to_value(&split.summands).unwrap());
    let mut md = String::from("| I | shift | homology of K_I |\n|---|---|---|\n");
    for s in &split.summands {
        let _ = writeln!(md, "| {} | ({}, {}) | {} |", s.subset, s.shift.0, s.shift.1, s.homology);
    }
    match flavor {
        Flavor::Complex => {
            let h = zk_cohomology_from_table(&table);
            let _ = write!(md, "\n## Cohomology of Z_K\n\n{}", graded_lines(&h, "H^"));
            payload.insert("zk_cohomology".into(), serde_json::to_value(&h).unwrap());
        }
        Flavor::Real => {
            let h = rzk_homology_from_table(&table);
            let _ = write!(md, "\n## Reduced homology of ℝZ_K\n\n{}", graded_lines(&h, "H̃_"));
            payload.insert("rzk_reduced_homology".into(), serde_json::to_value(&h).unwrap());
        }
        Flavor::Motivic => {
            let h = cellular_from_table(&table);
            payload.insert("cellular_a1_homology".into(), serde_json::to_value(&h).unwrap());
        }
    }
    r.payload = Value::Object(payload);
    r.markdown = md;
    r
}

pub fn homology(k: &SimplicialComplex, dump_matrices: bool) -> Report {
    let mut r = report("homology", k, json!({ "dump_matrices": dump_matrices }));
    let table = SubcomplexTable::new(k);
    r.warnings.extend(ghost_warning(k, &table));
    let reduced = reduced_homology(k);
    let zk = zk_homology_from_table(&table);
    let zk_co = zk_cohomology_from_table(&table);
    let rzk = rzk_homology_from_table(&table);
    let mut payload = json!({
        "reduced_homology": reduced,
        "betti_numbers": betti_numbers(k),
        "torsion_free": reduced.is_torsion_free(),
        "zk_homology": zk,
        "zk_cohomology": zk_co,
        "rzk_reduced_homology": rzk,
    });
    let mut md = format!("## Reduced homology of K\n\n{}", graded_lines(&reduced, "H̃_"));
    let _ = write!(md, "\n## Homology of Z_K\n\n{}", graded_lines(&zk, "H_"));
    let _ = write!(md, "\n## Cohomology of Z_K\n\n{}", graded_lines(&zk_co, "H^"));
    let _ = write!(md, "\n## Reduced homology of ℝZ_K\n\n{}", graded_lines(&rzk, "H̃_"));
    if dump_matrices {
        let dump = reduced_simplicial_chain_complex(k).dump();
        let _ = write!(md, "\n## Boundary matrices\n\n```\n{dump}```\n");
        payload["boundary_shapes"] = json!(dump.lines().collect::<Vec<_>>());
    }
    r.checks.push(Check::new(
        "cohomology and homology of Z_K have equal ranks",
        zk.ranks_from_zero() == zk_co.ranks_from_zero(),
    ));
    r.payload = payload;
    r.markdown = md;
    r
}

pub fn euler(k: &SimplicialComplex, field: GwField) -> Report {
    let mut r = report("euler", k, json!({ "field": field }));
    let table = SubcomplexTable::new(k);
    r.warnings.extend(ghost_warning(k, &table));
    let davis = chi_a1_davis(k);
    let filtration = chi_a1_from_filtration(&cellular_filtration_report(k));
    let collapsed = chi_a1_davis_collapsed(k);
    let complex = chi_classical_polyhedral(1, 0, k);
    let real = chi_classical_polyhedral(1, 2, k);
    let mut payload = serde_json::Map::new();
    payload.insert("davis".into(), serde_json::to_value(&davis).unwrap());
    payload.insert("rendered".into(), json!(davis.to_string()));
    payload.insert("field_value".into(), serde_json::to_value(davis.specialize(field)).unwrap());
    payload.insert("collapsed_form".into(), serde_json::to_value(&collapsed).unwrap());
    payload.insert("filtration".into(), serde_json::to_value(&filtration).unwrap());
    payload.insert("classical".into(), json!({ "complex": complex.to_string(), "real": real.to_string() }));
    r.checks.push(Check::new("filtration recomputation equals Davis formula", filtration == davis));
    r.checks.push(Check::new("rank equals complex Euler characteristic", davis.rank() == complex));
    r.checks.push(Check::new("signature equals real Euler characteristic", davis.signature() == real));
    if let Some(c) = &collapsed {
        r.checks.push(Check::new("collapsed expression equals Davis formula", *c == davis));
    } else {
        r.warnings.push("collapsed expression is undefined for the full simplex (top face would need 2^-1)".into());
    }
    let mut md = format!("- Davis: {davis}\n- field value: {}\n", davis.specialize(field));
    if k.has_ghosts() {
        r.warnings.push("splitting formula needs a ghost-free complex; omitted".into());
    } else {
        let splitting = chi_a1_splitting_from_table(&table);
        let rebuilt = chi_a1_rebuilt_from_table(&table);
        payload.insert("splitting".into(), serde_json::to_value(&splitting).unwrap());
        payload.insert("rebuilt".into(), serde_json::to_value(&rebuilt).unwrap());
        r.checks.push(Check::new("Davis equals splitting formula", davis == splitting));
        r.checks.push(Check::new("Davis equals summand-rebuilt value", davis == rebuilt));
        let _ = write!(md, "- splitting formula: {splitting}\n- rebuilt from summands: {rebuilt}\n");
    }
    let _ = write!(md, "- complex realization: {complex}\n- real realization: {real}\n");
    r.payload = Value::Object(payload);
    r.markdown = md;
    r
}

pub fn betti(k: &SimplicialComplex, prime: Option<u64>) -> Result<Report, CliError> {
    let mut r = report("betti", k, json!({ "prime": prime }));
    let table = SubcomplexTable::new(k);
    r.warnings.extend(ghost_warning(k, &table));
    let a1 = a1_betti_from_table(&table);
    let classical = classical_bigraded_betti(k);
    let koszul = koszul_tor_ranks(k, Coefficients::Rational).map_err(CliError::Oracle)?;
    r.checks.push(Check::new("A1-Betti table equals Hochster table", a1 == classical));
    r.checks.push(Check::new("A1-Betti table equals Koszul Tor ranks over Q", a1 == koszul));
    let mut payload = json!({ "a1_betti": a1, "koszul_rational": koszul });
    let mut md = format!("## A¹-Betti numbers\n\n{}", a1.to_markdown());
    if let Some(p) = prime {
        let modp = koszul_tor_ranks(k, Coefficients::Prime(p)).map_err(CliError::Oracle)?;
        if modp != koszul {
            r.warnings.push(format!("Tor ranks over F_{p} differ from Q: the full subcomplexes carry {p}-torsion"));
        }
        let _ = write!(md, "\n## Koszul Tor ranks over F_{p}\n\n{}", modp.to_markdown());
        payload["koszul_mod_p"] = serde_json::to_value(&modp).unwrap();
    }
    r.payload = payload;
    r.markdown = md;
    Ok(r)
}

/// Which affine model to emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Torsor over the complement of the dual Stanley–Reisner ideal.
    Dual,
    /// One torsor relation per Stanley–Reisner generator.
    Sr,
    /// The monomial ideal whose zero set is removed.
    Complement,
}

pub fn affine(k: &SimplicialComplex, model: Model) -> Report {
    let mut r = report("affine", k, json!({ "model": model }));
    let ideal = complement_ideal(k);
    let presentation = |p: &RingPresentation| json!({ "rendered": p.to_string(), "ring": p });
    let (payload, rendered) = match model {
        Model::Complement => {
            let dual_ok = k.alexander_dual().map(|d| d.complex.minimal_non_faces() == ideal).unwrap_or(ideal.is_unit());
            r.checks.push(Check::new("complement ideal equals Stanley–Reisner ideal of the dual", dual_ok));
            (json!({ "rendered": ideal.to_string(), "generators": ideal.generators_lex() }), ideal.to_string())
        }
        Model::Dual => match jouanolou_presentation(&ideal) {
            Ok(p) => {
                if ideal.is_unit() {
                    r.warnings.push("full simplex: nothing is removed and the model is affine space".into());
                }
                (presentation(&p), p.to_string())
            }
            Err(AffineError::EmptyIdeal) => {
                r.warnings.push(AffineError::EmptyIdeal.to_string());
                (Value::Null, String::new())
            }
        },
        Model::Sr => {
            let p = sr_cover_presentation(k);
            (presentation(&p), p.to_string())
        }
    };
    let filtration = cellular_filtration_report(k);
    r.payload = json!({ "model": payload, "filtration": filtration });
    let strata: String = filtration.render().lines().map(|l| format!("- {l}\n")).collect();
    r.markdown = format!("```\n{rendered}\n```\n\n## Cellular filtration\n\n{strata}");
    r
}
