#![allow(dead_code)]

use macforge_core::generate::{all_complexes, seeded_random_complexes};
use macforge_core::SimplicialComplex;

/// Every ghost-free complex on 1..=max_m vertices.
pub fn exhaustive(max_m: usize) -> Vec<SimplicialComplex> {
    (1..=max_m).flat_map(all_complexes).collect()
}

pub fn random(count: usize, ms: &[usize], seed: u64) -> Vec<SimplicialComplex> {
    seeded_random_complexes(count, ms, seed)
}

/// Brute-force face count of `K_I`: distinct intersections `σ ∩ I`.
pub fn restricted_face_count(k: &SimplicialComplex, i: macforge_core::VertexSet) -> usize {
    let mut seen: Vec<u32> = k.faces().iter().map(|f| f.intersection(i).bits()).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}
