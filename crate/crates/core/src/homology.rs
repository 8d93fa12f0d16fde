//! Exact integer chain complexes and reduced simplicial (co)homology.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::HomologyError;
use crate::matrix::IntegerMatrix;
use crate::simplicial::SimplicialComplex;
use crate::snf::{invariant_chain, smith_normal_form, SmithForm};

/// A finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `d_1 | ... | d_k`, all `d_i > 1`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct HomologyGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// `Z/k`; `k = 0` gives `Z`, `k = 1` the zero group.
    pub fn cyclic(k: u64) -> Self {
        match k {
            0 => Self::free(1),
            _ => Self::new(0, vec![BigInt::from(k)]),
        }
    }

    /// Normalizes an arbitrary list of torsion orders into invariant factors.
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        assert!(torsion.iter().all(|t| *t > BigInt::zero()), "torsion orders must be positive");
        let torsion = invariant_chain(torsion).into_iter().filter(|d| !d.is_one()).collect();
        HomologyGroup { free_rank, torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &HomologyGroup) -> HomologyGroup {
        let torsion = self.torsion.iter().chain(&other.torsion).cloned().collect();
        HomologyGroup::new(self.free_rank + other.free_rank, torsion)
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Serializes an integer as a JSON number when it fits in 64 bits, else as a decimal string.
pub(crate) struct BigNumber<'a>(pub &'a BigInt);

impl Serialize for BigNumber<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

struct BigList<'a>(&'a [BigInt]);

impl Serialize for BigList<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for v in self.0 {
            seq.serialize_element(&BigNumber(v))?;
        }
        seq.end()
    }
}

impl Serialize for HomologyGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HomologyGroup", 2)?;
        s.serialize_field("rank", &self.free_rank)?;
        s.serialize_field("torsion", &BigList(&self.torsion))?;
        s.end()
    }
}

/// Homology groups indexed by degree, starting at `min_degree`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedHomology {
    min_degree: isize,
    groups: Vec<HomologyGroup>,
}

impl GradedHomology {
    pub fn new(min_degree: isize, groups: Vec<HomologyGroup>) -> Self {
        let mut g = GradedHomology { min_degree, groups };
        g.trim();
        g
    }

    pub fn zero() -> Self {
        Self::default()
    }

    fn trim(&mut self) {
        while self.groups.last().is_some_and(HomologyGroup::is_zero) {
            self.groups.pop();
        }
        if self.groups.is_empty() {
            self.min_degree = 0;
        }
    }

    /// The group in degree `n` (zero outside the stored range).
    pub fn get(&self, n: isize) -> HomologyGroup {
        let k = n - self.min_degree;
        if k < 0 {
            return HomologyGroup::zero();
        }
        self.groups.get(k as usize).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_torsion_free)
    }

    /// Largest degree with a nonzero group.
    pub fn max_degree(&self) -> Option<isize> {
        self.groups.iter().rposition(|g| !g.is_zero()).map(|k| k as isize + self.min_degree)
    }

    /// `(degree, group)` pairs for the nonzero groups, ascending.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, &HomologyGroup)> {
        self.groups
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(move |(k, g)| (k as isize + self.min_degree, g))
    }

    /// Free ranks for degrees `0..=max_degree` (empty when zero).
    pub fn ranks_from_zero(&self) -> Vec<usize> {
        match self.max_degree() {
            Some(top) if top >= 0 => (0..=top).map(|n| self.get(n).free_rank()).collect(),
            _ => Vec::new(),
        }
    }

    /// Adds `group` into degree `n`.
    pub fn add_to(&mut self, n: isize, group: &HomologyGroup) {
        if group.is_zero() {
            return;
        }
        if self.groups.is_empty() {
            self.min_degree = n;
        }
        if n < self.min_degree {
            let pad = (self.min_degree - n) as usize;
            let mut groups = vec![HomologyGroup::zero(); pad];
            groups.append(&mut self.groups);
            self.groups = groups;
            self.min_degree = n;
        }
        let k = (n - self.min_degree) as usize;
        if self.groups.len() <= k {
            self.groups.resize(k + 1, HomologyGroup::zero());
        }
        self.groups[k] = self.groups[k].direct_sum(group);
    }

    /// Alternating sum of free ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero().map(|(n, g)| if n % 2 == 0 { g.free_rank() as i64 } else { -(g.free_rank() as i64) }).sum()
    }
}

#[derive(Serialize)]
struct DegreeEntry<'a> {
    deg: isize,
    rank: usize,
    torsion: BigList<'a>,
}

impl Serialize for GradedHomology {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.nonzero().map(|(deg, g)| DegreeEntry {
            deg,
            rank: g.free_rank,
            torsion: BigList(&g.torsion),
        }))
    }
}

impl fmt::Display for GradedHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.nonzero().map(|(n, g)| format!("H{n} = {g}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// A bounded chain complex of free abelian groups `C_n`, `min_degree <= n <= max_degree`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    min_degree: isize,
    ranks: Vec<usize>,
    /// `boundaries[k]` is `∂_{min_degree + k + 1}: C_{min+k+1} -> C_{min+k}`.
    boundaries: Vec<IntegerMatrix>,
    labels: Option<Vec<Vec<String>>>,
}

impl ChainComplex {
    /// Checks shapes and `∂∘∂ = 0`.
    pub fn new(min_degree: isize, ranks: Vec<usize>, boundaries: Vec<IntegerMatrix>) -> Result<Self, HomologyError> {
        assert_eq!(boundaries.len() + 1, ranks.len().max(1), "need one boundary per adjacent pair of degrees");
        for (k, d) in boundaries.iter().enumerate() {
            let (expected_rows, expected_cols) = (ranks[k], ranks[k + 1]);
            if d.rows() != expected_rows || d.cols() != expected_cols {
                return Err(HomologyError::ShapeMismatch {
                    degree: min_degree + k as isize + 1,
                    rows: d.rows(),
                    cols: d.cols(),
                    expected_rows,
                    expected_cols,
                });
            }
        }
        for (k, pair) in boundaries.windows(2).enumerate() {
            if !pair[0].mul(&pair[1]).is_zero() {
                return Err(HomologyError::NotAComplex { degree: min_degree + k as isize + 2 });
            }
        }
        Ok(ChainComplex { min_degree, ranks, boundaries, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> Self {
        assert_eq!(labels.len(), self.ranks.len());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self, n: isize) -> Option<&[String]> {
        let k = n - self.min_degree;
        self.labels.as_ref().and_then(|l| l.get(usize::try_from(k).ok()?)).map(Vec::as_slice)
    }

    pub fn min_degree(&self) -> isize {
        self.min_degree
    }

    pub fn max_degree(&self) -> isize {
        self.min_degree + self.ranks.len() as isize - 1
    }

    pub fn rank(&self, n: isize) -> usize {
        let k = n - self.min_degree;
        if k < 0 {
            0
        } else {
            self.ranks.get(k as usize).copied().unwrap_or(0)
        }
    }

    /// `∂_n: C_n -> C_{n-1}` if both groups are in range.
    pub fn boundary(&self, n: isize) -> Option<&IntegerMatrix> {
        let k = n - self.min_degree - 1;
        if k < 0 {
            None
        } else {
            self.boundaries.get(k as usize)
        }
    }

    /// `Σ (-1)^n rank C_n`.
    pub fn euler_characteristic(&self) -> i64 {
        (self.min_degree..=self.max_degree())
            .map(|n| if n.rem_euclid(2) == 0 { self.rank(n) as i64 } else { -(self.rank(n) as i64) })
            .sum()
    }

    fn smith_forms(&self, transposed: bool) -> Vec<SmithForm> {
        self.boundaries
            .par_iter()
            .map(|d| if transposed { smith_normal_form(&d.transpose()) } else { smith_normal_form(d) })
            .collect()
    }

    /// `H_n = ker ∂_n / im ∂_{n+1}` for every degree.
    pub fn homology(&self) -> GradedHomology {
        let forms = self.smith_forms(false);
        // forms[k] belongs to ∂_{min+k+1}
        let rank_of = |n: isize| -> usize {
            let k = n - self.min_degree - 1;
            if k < 0 {
                0
            } else {
                forms.get(k as usize).map_or(0, SmithForm::rank)
            }
        };
        let groups = (self.min_degree..=self.max_degree())
            .map(|n| {
                let free = self.rank(n) - rank_of(n) - rank_of(n + 1);
                let k = n - self.min_degree;
                let torsion = forms.get(k as usize).map(|f| f.torsion().cloned().collect()).unwrap_or_default();
                HomologyGroup::new(free, torsion)
            })
            .collect();
        GradedHomology::new(self.min_degree, groups)
    }

    /// `H^n = ker δ^n / im δ^{n-1}` with `δ^n = ∂_{n+1}^T`, computed from the transposed matrices.
    pub fn cohomology(&self) -> GradedHomology {
        let forms = self.smith_forms(true);
        // forms[k] is δ^{min+k}: C^{min+k} -> C^{min+k+1}
        let rank_of = |n: isize| -> usize {
            let k = n - self.min_degree;
            if k < 0 {
                0
            } else {
                forms.get(k as usize).map_or(0, SmithForm::rank)
            }
        };
        let groups = (self.min_degree..=self.max_degree())
            .map(|n| {
                let free = self.rank(n) - rank_of(n) - rank_of(n - 1);
                let k = n - self.min_degree - 1;
                let torsion = if k < 0 {
                    Vec::new()
                } else {
                    forms.get(k as usize).map(|f| f.torsion().cloned().collect()).unwrap_or_default()
                };
                HomologyGroup::new(free, torsion)
            })
            .collect();
        GradedHomology::new(self.min_degree, groups)
    }

    /// Plain-text shape dump, one `degree: rows x cols` line per boundary map.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (k, d) in self.boundaries.iter().enumerate() {
            out.push_str(&format!("{}: {} x {}\n", self.min_degree + k as isize + 1, d.rows(), d.cols()));
        }
        out
    }
}

/// Augmented simplicial chain complex of `K`: `C_{-1} = Z` on the empty face,
/// bases ordered by bitmask, boundary signs `(-1)^position`.
pub fn reduced_simplicial_chain_complex(k: &SimplicialComplex) -> ChainComplex {
    let top = k.dimension();
    let mut bases: Vec<Vec<u32>> = vec![Vec::new(); (top + 2) as usize];
    for f in k.faces() {
        bases[f.len()].push(f.bits());
    }
    let index: Vec<HashMap<u32, usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, &f)| (f, i)).collect()).collect();
    let ranks: Vec<usize> = bases.iter().map(Vec::len).collect();
    let mut boundaries = Vec::with_capacity(ranks.len().saturating_sub(1));
    for size in 1..bases.len() {
        let mut d = IntegerMatrix::zeros(ranks[size - 1], ranks[size]);
        for (col, &face) in bases[size].iter().enumerate() {
            let mut bits = face;
            let mut position = 0;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                let row = index[size - 1][&(face & !low)];
                let sign = if position % 2 == 0 { 1 } else { -1 };
                d.set(row, col, BigInt::from(sign));
                bits &= bits - 1;
                position += 1;
            }
        }
        boundaries.push(d);
    }
    let labels = bases
        .iter()
        .map(|b| b.iter().map(|&f| crate::simplicial::VertexSet::from_bits(f).to_string()).collect())
        .collect();
    ChainComplex::new(-1, ranks, boundaries).expect("simplicial boundary squares to zero").with_labels(labels)
}

/// Reduced homology `H̃_n(|K|)` for `n >= 0`. `{∅}` has zero reduced homology by convention.
pub fn reduced_homology(k: &SimplicialComplex) -> GradedHomology {
    drop_negative(reduced_simplicial_chain_complex(k).homology())
}

/// Reduced cohomology `H̃^n(|K|; Z)` for `n >= 0`, from the transposed boundary matrices.
pub fn reduced_cohomology(k: &SimplicialComplex) -> GradedHomology {
    drop_negative(reduced_simplicial_chain_complex(k).cohomology())
}

fn drop_negative(h: GradedHomology) -> GradedHomology {
    let groups = (0..=h.max_degree().unwrap_or(-1).max(-1)).map(|n| h.get(n)).collect();
    GradedHomology::new(0, groups)
}

/// Ranks of `H̃_n(|K|)` for `n = 0..=dim K`.
pub fn betti_numbers(k: &SimplicialComplex) -> Vec<usize> {
    let h = reduced_homology(k);
    (0..=k.dimension().max(0)).map(|n| h.get(n).free_rank()).collect()
}

/// Whether every reduced homology group of `|K|` is free.
pub fn torsion_free(k: &SimplicialComplex) -> bool {
    reduced_homology(k).is_torsion_free()
}
