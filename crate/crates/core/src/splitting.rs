//! Wedge summands of the suspended moment-angle complexes and the (co)homology
//! decompositions they induce, one summand per non-face `I`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::homology::{reduced_cohomology, reduced_homology, GradedHomology, HomologyGroup};
use crate::simplicial::{SimplicialComplex, VertexSet};

/// Which polyhedral product is being split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// `(A¹, G_m)^K`, summands `|K_I| ∧ S^{|I|+2,|I|}`.
    Motivic,
    /// `(D², S¹)^K`, summands `Σ^{|I|+2}|K_I|`.
    Complex,
    /// `(D¹, S⁰)^K`, summands `Σ²|K_I|`.
    Real,
}

impl Flavor {
    /// Bidegree `(p, q)` of the sphere smashed onto `|K_I|`; `q = 0` for the topological flavors.
    pub fn shift(self, size: usize) -> (usize, usize) {
        match self {
            Flavor::Motivic => (size + 2, size),
            Flavor::Complex => (size + 2, 0),
            Flavor::Real => (2, 0),
        }
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "motivic" => Ok(Flavor::Motivic),
            "complex" => Ok(Flavor::Complex),
            "real" => Ok(Flavor::Real),
            other => Err(format!("unknown flavor `{other}` (expected motivic, complex or real)")),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Motivic => "motivic",
            Flavor::Complex => "complex",
            Flavor::Real => "real",
        })
    }
}

/// Homological data of one full subcomplex `K_I`.
#[derive(Clone, Debug)]
pub struct SubcomplexEntry {
    pub subset: VertexSet,
    pub homology: GradedHomology,
    pub cohomology: GradedHomology,
    pub euler: i64,
}

/// Reduced (co)homology of `K_I` for every non-face `I`, in bitmask order.
///
/// Non-faces containing a ghost vertex are skipped; `skipped` counts them.
#[derive(Clone, Debug)]
pub struct SubcomplexTable {
    pub entries: Vec<SubcomplexEntry>,
    pub skipped: usize,
}

impl SubcomplexTable {
    pub fn new(k: &SimplicialComplex) -> Self {
        let ghosts = k.ghost_vertices();
        let (kept, skipped): (Vec<VertexSet>, Vec<VertexSet>) =
            k.non_faces().partition(|i| i.intersection(ghosts).is_empty());
        let entries = kept
            .par_iter()
            .map(|&subset| {
                let sub = k.full_subcomplex(subset).complex;
                SubcomplexEntry {
                    subset,
                    homology: reduced_homology(&sub),
                    cohomology: reduced_cohomology(&sub),
                    euler: sub.euler_characteristic(),
                }
            })
            .collect();
        SubcomplexTable { entries, skipped: skipped.len() }
    }
}

/// One wedge summand `|K_I|` shifted by the flavor's sphere.
#[derive(Clone, Debug)]
pub struct Summand {
    pub subset: VertexSet,
    pub homology: GradedHomology,
    pub shift: (usize, usize),
    pub trivial: bool,
}

impl Serialize for Summand {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Summand", 4)?;
        s.serialize_field("I", &self.subset)?;
        s.serialize_field("shift", &[self.shift.0, self.shift.1])?;
        s.serialize_field("homology", &self.homology)?;
        s.serialize_field("trivial", &self.trivial)?;
        s.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub flavor: Flavor,
    pub summands: Vec<Summand>,
    /// Non-faces left out because they contain a ghost vertex.
    pub skipped_ghost_subsets: usize,
}

impl DecompositionReport {
    pub fn nontrivial(&self) -> impl Iterator<Item = &Summand> {
        self.summands.iter().filter(|s| !s.trivial)
    }
}

pub fn stable_splitting(k: &SimplicialComplex, flavor: Flavor) -> DecompositionReport {
    splitting_from_table(&SubcomplexTable::new(k), flavor)
}

pub fn splitting_from_table(table: &SubcomplexTable, flavor: Flavor) -> DecompositionReport {
    let summands = table
        .entries
        .iter()
        .map(|e| Summand {
            subset: e.subset,
            homology: e.homology.clone(),
            shift: flavor.shift(e.subset.len()),
            trivial: e.homology.is_zero(),
        })
        .collect();
    DecompositionReport { flavor, summands, skipped_ghost_subsets: table.skipped }
}

/// `H^i(Z_K)`: `Z` in degree 0 and `⊕_{I∉K} H̃^{i-|I|-1}(K_I)` above it.
pub fn zk_cohomology_groups(k: &SimplicialComplex) -> GradedHomology {
    zk_cohomology_from_table(&SubcomplexTable::new(k))
}

pub fn zk_cohomology_from_table(table: &SubcomplexTable) -> GradedHomology {
    let mut out = GradedHomology::zero();
    out.add_to(0, &HomologyGroup::free(1));
    for e in &table.entries {
        for (n, g) in e.cohomology.nonzero() {
            out.add_to(n + e.subset.len() as isize + 1, g);
        }
    }
    out
}

/// `H_i(Z_K)`: `Z` in degree 0 and `⊕_{I∉K} H̃_{i-|I|-1}(K_I)` above it.
pub fn zk_homology_groups(k: &SimplicialComplex) -> GradedHomology {
    zk_homology_from_table(&SubcomplexTable::new(k))
}

pub fn zk_homology_from_table(table: &SubcomplexTable) -> GradedHomology {
    let mut out = GradedHomology::zero();
    out.add_to(0, &HomologyGroup::free(1));
    for e in &table.entries {
        for (n, g) in e.homology.nonzero() {
            out.add_to(n + e.subset.len() as isize + 1, g);
        }
    }
    out
}

/// Reduced `H̃_i(ℝZ_K) = ⊕_{I∉K} H̃_{i-1}(K_I)`.
pub fn rzk_homology_groups(k: &SimplicialComplex) -> GradedHomology {
    rzk_homology_from_table(&SubcomplexTable::new(k))
}

pub fn rzk_homology_from_table(table: &SubcomplexTable) -> GradedHomology {
    let mut out = GradedHomology::zero();
    for e in &table.entries {
        for (n, g) in e.homology.nonzero() {
            out.add_to(n + 1, g);
        }
    }
    out
}
