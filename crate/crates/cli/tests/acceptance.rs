//! Acceptance suite: one PASS/FAIL line per criterion with its runtime budget.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde_json::Value;

use macforge_cli::verify::{
    run_suites, CUBICAL_EULER, CUBICAL_VS_SPLITTING, EULER_TRIPLE, KOSZUL_VS_A1, KOSZUL_VS_HOCHSTER,
};
use macforge_core::affine::complement_ideal;
use macforge_core::generate::{all_complexes, seeded_random_complexes};
use macforge_core::gw::{chi_a1_davis, chi_classical_polyhedral};
use macforge_core::motivic::{a1_betti_numbers, cellular_a1_homology, BigradedTable};
use macforge_core::oracles::{koszul_tor_ranks, Coefficients};
use macforge_core::splitting::{zk_cohomology_groups, zk_homology_groups};
use macforge_core::{examples, SimplicialComplex};

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).to_str().unwrap().to_string()
}

fn macforge_json(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_macforge")).args(args).output().map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(format!("{args:?} exited with {:?}", out.status.code()));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn exhaustive(max_m: usize) -> Vec<SimplicialComplex> {
    (1..=max_m).flat_map(all_complexes).collect()
}

fn rp2_torsion() -> Outcome {
    let r = macforge_json(&["invariants", &data("rp2.json")])?;
    let h = r["payload"]["cellular_a1_homology"].as_array().ok_or("missing cellular homology")?;
    let rendered: Vec<&str> = h.iter().map(|d| d["rendered"].as_str().unwrap_or("?")).collect();
    let expected = ["Z", "0", "KMW(3)^10 ⊕ KMW(4)^15 ⊕ KMW(5)^6 ⊕ (Z/2 ⊗ KMW(6))"];
    ensure(rendered == expected, || format!("got {rendered:?}"))
}

fn sphere_families() -> Outcome {
    for m in 2..=8usize {
        let start = Instant::now();
        let k = SimplicialComplex::simplex_boundary(m).map_err(|e| e.to_string())?;
        let h = cellular_a1_homology(&k).map_err(|e| e.to_string())?;
        let mut expected = vec!["0".to_string(); m];
        expected[0] = "Z".into();
        expected[m - 1] = format!("KMW({m})");
        let got: Vec<String> = h.degrees().iter().map(|e| e.to_string()).collect();
        ensure(got == expected, || format!("m = {m}: cellular homology {got:?}"))?;
        let mut table = BigradedTable::new();
        table.add(0, 0, 1);
        table.add(2 * m as i64 - 1, m as i64, 1);
        let koszul = koszul_tor_ranks(&k, Coefficients::Rational).map_err(|e| e.to_string())?;
        ensure(koszul == table, || format!("m = {m}: Koszul table {koszul}"))?;
        ensure(a1_betti_numbers(&k) == koszul, || format!("m = {m}: A1-Betti table differs from Koszul"))?;
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(1), || format!("m = {m} took {elapsed:?}"))?;
    }
    Ok(())
}

fn suite_passes(results: &[macforge_cli::verify::SuiteResult], names: &[&str]) -> Outcome {
    for name in names {
        let s = results.iter().find(|s| s.name == *name).ok_or_else(|| format!("missing suite {name}"))?;
        ensure(s.passed && s.total > 0, || {
            format!("{name}: {} of {} failed, e.g. {:?}", s.failures, s.total, s.counterexample)
        })?;
    }
    Ok(())
}

fn euler_triple() -> Outcome {
    let mut corpus = exhaustive(4);
    let small = corpus.len();
    corpus.extend(seeded_random_complexes(100, &[5, 6, 7], 31));
    suite_passes(&run_suites(&corpus), &[EULER_TRIPLE, CUBICAL_EULER])?;
    for k in &corpus {
        let davis = chi_a1_davis(k);
        ensure(davis.rank() == chi_classical_polyhedral(1, 0, k), || format!("rank of {k:?}"))?;
        let expected_rank = if k.is_full_simplex() { BigInt::from(1) } else { BigInt::from(0) };
        ensure(davis.rank() == expected_rank, || format!("rank {} for {k:?}", davis.rank()))?;
    }
    let square = chi_a1_davis(&examples::square());
    ensure(square.is_zero(), || format!("square gives {square}"))?;
    ensure(small == 126, || format!("{small} complexes on at most 4 vertices"))
}

fn oracle_equivalence() -> Outcome {
    let mut corpus = exhaustive(4);
    corpus.extend(seeded_random_complexes(50, &[5, 6], 2024));
    suite_passes(&run_suites(&corpus), &[CUBICAL_VS_SPLITTING, KOSZUL_VS_A1, KOSZUL_VS_HOCHSTER])
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn classical_shadows() -> Outcome {
    let ranks = zk_cohomology_groups(&examples::square()).ranks_from_zero();
    ensure(ranks == [1, 0, 0, 2, 0, 0, 1], || format!("square cohomology ranks {ranks:?}"))?;
    for m in 2..=7 {
        let h = zk_homology_groups(&SimplicialComplex::disjoint_points(m).map_err(|e| e.to_string())?);
        for l in 2..=m {
            let rank = h.get(l as isize + 1).free_rank();
            ensure(rank == (l - 1) * binomial(m, l), || format!("m = {m}, l = {l}: rank {rank}"))?;
        }
        ensure(h.is_torsion_free(), || format!("m = {m}: torsion"))?;
    }
    Ok(())
}

fn affine_models() -> Outcome {
    for k in exhaustive(5) {
        let ideal = complement_ideal(&k);
        let ok = match k.alexander_dual() {
            Ok(dual) => dual.complex.minimal_non_faces() == ideal,
            Err(_) => k.is_full_simplex() && ideal.is_unit(),
        };
        ensure(ok, || format!("complement ideal of {k:?}"))?;
    }
    let golden = |name: &str| {
        std::fs::read(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap_or_default()
    };
    for (args, input, file) in [
        (["affine", "--model", "dual"], "points2.json", "sl2.txt"),
        (["affine", "--model", "dual"], "square.json", "square_dual.txt"),
        (["affine", "--model", "sr"], "square.json", "square_sr.txt"),
    ] {
        let path = data(input);
        let mut args = args.to_vec();
        args.push(&path);
        let r = macforge_json(&args)?;
        let line = format!("{}\n", r["payload"]["model"]["rendered"].as_str().unwrap_or_default());
        ensure(line.as_bytes() == golden(file), || format!("{file}: got {line:?}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("1 RP2 torsion example", Duration::from_secs(1), rp2_torsion),
        ("2 sphere families m = 2..8", Duration::from_secs(7), sphere_families),
        ("3 Euler characteristic triple agreement", Duration::from_secs(30), euler_triple),
        ("4 oracle equivalence", Duration::from_secs(120), oracle_equivalence),
        ("5 classical homotopy-type shadows", Duration::from_secs(5), classical_shadows),
        ("6 affine-model consistency", Duration::from_secs(60), affine_models),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(()) if elapsed <= limit => Ok(()),
            Ok(()) => Err(format!("too slow: {elapsed:.2?} > {limit:?}")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(()) => println!("PASS criterion {name} ({elapsed:.2?}, limit {limit:?})"),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name} ({elapsed:.2?}, limit {limit:?}): {e}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
