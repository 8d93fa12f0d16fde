mod common;

use macforge_core::gw::chi_classical_polyhedral;
use macforge_core::splitting::{
    stable_splitting, zk_cohomology_from_table, zk_cohomology_groups, Flavor, SubcomplexTable,
};
use macforge_core::{HomologyGroup, SimplicialComplex};
use num_bigint::BigInt;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn summand_count_is_number_of_non_faces() {
    for k in common::exhaustive(4).into_iter().chain(common::random(30, &[5, 6, 7], 5)) {
        for flavor in [Flavor::Motivic, Flavor::Complex, Flavor::Real] {
            let r = stable_splitting(&k, flavor);
            assert_eq!(r.summands.len(), (1 << k.m()) - k.num_faces());
            assert!(r.summands.windows(2).all(|w| w[0].subset < w[1].subset));
            for s in &r.summands {
                assert!(!k.contains(s.subset));
                let size = s.subset.len();
                let expected = match flavor {
                    Flavor::Motivic => (size + 2, size),
                    Flavor::Complex => (size + 2, 0),
                    Flavor::Real => (2, 0),
                };
                assert_eq!(s.shift, expected);
            }
        }
    }
}

#[test]
fn cohomology_alternating_sum_is_davis() {
    for k in common::exhaustive(5) {
        let h = zk_cohomology_from_table(&SubcomplexTable::new(&k));
        assert_eq!(BigInt::from(h.euler_characteristic()), chi_classical_polyhedral(1, 0, &k), "{k:?}");
    }
}

#[test]
fn kunneth_for_joins() {
    let pool = common::random(12, &[2, 3], 99);
    for a in &pool {
        for b in pool.iter().take(6) {
            let (ha, hb) = (zk_cohomology_groups(a), zk_cohomology_groups(b));
            if !ha.is_torsion_free() || !hb.is_torsion_free() {
                continue;
            }
            let hj = zk_cohomology_groups(&a.join(b).unwrap());
            let (ra, rb) = (ha.ranks_from_zero(), hb.ranks_from_zero());
            let mut conv = vec![0usize; ra.len() + rb.len() - 1];
            for (i, x) in ra.iter().enumerate() {
                for (j, y) in rb.iter().enumerate() {
                    conv[i + j] += x * y;
                }
            }
            while conv.last() == Some(&0) {
                conv.pop();
            }
            assert_eq!(hj.ranks_from_zero(), conv, "{a:?} * {b:?}");
        }
    }
}

#[test]
fn disjoint_points_are_wedges_of_spheres() {
    for m in 2..=7 {
        let k = SimplicialComplex::disjoint_points(m).unwrap();
        let h = zk_cohomology_groups(&k);
        for l in 2..=m {
            let expected = (l - 1) * binomial(m, l);
            assert_eq!(h.get(l as isize + 1), HomologyGroup::free(expected), "m={m} l={l}");
        }
    }
}

#[test]
fn square_summands() {
    let r = stable_splitting(&macforge_core::examples::square(), Flavor::Motivic);
    let nontrivial: Vec<(Vec<usize>, (usize, usize))> = r.nontrivial().map(|s| (s.subset.to_vec(), s.shift)).collect();
    assert_eq!(nontrivial, vec![(vec![1, 2], (4, 2)), (vec![3, 4], (4, 2)), (vec![1, 2, 3, 4], (6, 4))]);
    assert_eq!(r.summands.iter().filter(|s| s.trivial).count(), 4);
}
