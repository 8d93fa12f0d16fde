mod common;

use macforge_core::motivic::{
    a1_betti_from_table, cellular_a1_homology, cellular_from_summands, cellular_from_table, SheafExpression,
};
use macforge_core::splitting::{rzk_homology_from_table, SubcomplexTable};
use macforge_core::{HomologyGroup, SimplicialComplex};

#[test]
fn degree_zero_is_exactly_z() {
    for k in common::exhaustive(5) {
        let h = cellular_a1_homology(&k).unwrap();
        assert_eq!(h.get(0), SheafExpression::integers(), "{k:?}");
    }
}

#[test]
fn weight_ranks_match_betti_table() {
    for k in common::exhaustive(5) {
        let table = SubcomplexTable::new(&k);
        let cell = cellular_from_table(&table);
        let betti = a1_betti_from_table(&table);
        for d in 1..=cell.top_degree() {
            for (j, g) in cell.get(d).terms() {
                assert_eq!(g.free_rank() as u64, betti.get(d as i64 + j as i64, j as i64), "{k:?} d={d} j={j}");
            }
        }
        for ((i, j), r) in betti.entries().filter(|&(ij, _)| ij != (0, 0)) {
            let d = (i - j) as usize;
            assert_eq!(cell.get(d).weight(j as u32).free_rank() as u64, r);
        }
    }
}

#[test]
fn realization_shadow_matches_real_splitting() {
    for k in common::exhaustive(5) {
        let table = SubcomplexTable::new(&k);
        let cell = cellular_from_table(&table);
        let real = rzk_homology_from_table(&table);
        let alternating: i64 = (1..=cell.top_degree())
            .map(|i| {
                let r = cell.get(i).total_free_rank() as i64;
                if i % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum();
        assert_eq!(alternating, real.euler_characteristic(), "{k:?}");
    }
}

#[test]
fn rewrite_rules_reproduce_the_formula() {
    for k in common::exhaustive(4).into_iter().chain(common::random(40, &[5, 6, 7], 17)) {
        let table = SubcomplexTable::new(&k);
        assert_eq!(cellular_from_table(&table), cellular_from_summands(&table), "{k:?}");
    }
}

#[test]
fn sphere_boundaries() {
    for m in 2..=8 {
        let h = cellular_a1_homology(&SimplicialComplex::simplex_boundary(m).unwrap()).unwrap();
        assert_eq!(h.top_degree(), m - 1);
        assert_eq!(h.get(m - 1), SheafExpression::term(HomologyGroup::free(1), m as u32));
        assert!((1..m - 1).all(|i| h.get(i).is_zero()));
    }
}
