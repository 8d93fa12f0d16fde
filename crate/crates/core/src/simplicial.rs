//! Abstract simplicial complexes on the vertex set `[m] = {1, ..., m}`.
//!
//! Faces are stored as bitmasks ([`VertexSet`]); vertex `i` occupies bit `i - 1`.
//! Every iterator in this module yields subsets in increasing bitmask order.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ComplexError;

/// Largest supported vertex count. Decomposition formulas sum over all `2^m`
/// subsets, so this is a hard cap.
pub const MAX_VERTICES: usize = 24;

/// A subset of `[m]` encoded as a bitmask (vertex `i` is bit `i - 1`).
///
/// The derived ordering is the bitmask order used for every deterministic
/// enumeration in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The whole vertex set `[m]`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_VERTICES, "m = {m} exceeds {MAX_VERTICES}");
        VertexSet(((1u64 << m) - 1) as u32)
    }

    /// `{v}` for a 1-based vertex `v`.
    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        VertexSet(1 << (v - 1))
    }

    /// Builds a subset of `[m]` from 1-based vertex labels.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(m: usize, vertices: I) -> Result<Self, ComplexError> {
        if m > MAX_VERTICES {
            return Err(ComplexError::MTooLarge { m });
        }
        let mut bits = 0u32;
        for v in vertices {
            if v == 0 || v > m {
                return Err(ComplexError::VertexOutOfRange { vertex: v, m });
            }
            bits |= 1 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=32).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> VertexSet {
        self.union(VertexSet::singleton(v))
    }

    pub fn without(self, v: usize) -> VertexSet {
        self.difference(VertexSet::singleton(v))
    }

    /// `[m] \ self`.
    pub fn complement(self, m: usize) -> VertexSet {
        VertexSet::full(m).difference(self)
    }

    /// Vertices in increasing order, 1-based.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let low = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(low + 1)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// Re-indexes `self ∩ onto` so that the k-th smallest vertex of `onto`
    /// becomes vertex `k + 1`.
    pub fn compress(self, onto: VertexSet) -> VertexSet {
        let mut out = 0u32;
        for (k, v) in onto.vertices().enumerate() {
            if self.contains(v) {
                out |= 1 << k;
            }
        }
        VertexSet(out)
    }

    /// Inverse of [`VertexSet::compress`].
    pub fn expand(self, onto: VertexSet) -> VertexSet {
        let mut out = 0u32;
        for (k, v) in onto.vertices().enumerate() {
            if self.0 & (1 << k) != 0 {
                out |= 1 << (v - 1);
            }
        }
        VertexSet(out)
    }

    /// Shifts every vertex label up by `offset`.
    pub fn shifted(self, offset: usize) -> VertexSet {
        VertexSet(self.0 << offset)
    }

    /// Position of `v` among the vertices of `self` (0-based), if present.
    pub fn position(self, v: usize) -> Option<usize> {
        if self.contains(v) {
            Some((self.0 & ((1u32 << (v - 1)) - 1)).count_ones() as usize)
        } else {
            None
        }
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            // standard "next submask in increasing order" step
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(VertexSet(cur))
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.vertices())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let vertices = Vec::<usize>::deserialize(deserializer)?;
        VertexSet::from_vertices(MAX_VERTICES, vertices).map_err(serde::de::Error::custom)
    }
}

/// Membership bitmap over all `2^m` subsets.
#[derive(Clone, PartialEq, Eq)]
struct FaceBitmap {
    words: Vec<u64>,
}

impl FaceBitmap {
    fn new(m: usize) -> Self {
        let n = 1usize << m;
        FaceBitmap { words: vec![0; n.div_ceil(64)] }
    }

    fn get(&self, s: VertexSet) -> bool {
        let i = s.bits() as usize;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Sets the bit; returns whether it was previously unset.
    fn insert(&mut self, s: VertexSet) -> bool {
        let i = s.bits() as usize;
        let word = &mut self.words[i / 64];
        let mask = 1u64 << (i % 64);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }
}

/// A finite abstract simplicial complex on `[m]`, always containing the empty face.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: usize,
    faces: Vec<VertexSet>,
    facets: Vec<VertexSet>,
    members: FaceBitmap,
    ghosts: VertexSet,
}

/// A full subcomplex `K_I`, re-indexed onto `[|I|]`.
#[derive(Clone, Debug)]
pub struct FullSubcomplex {
    pub complex: SimplicialComplex,
    /// `vertices[k]` is the original label of new vertex `k + 1`.
    pub vertices: Vec<usize>,
    pub subset: VertexSet,
}

/// The Alexander dual together with the ghost vertices it acquired.
#[derive(Clone, Debug)]
pub struct AlexanderDual {
    pub complex: SimplicialComplex,
    /// Vertices `i` with `{i}` not a face of the dual, i.e. `[m] \ {i}` is a face of `K`.
    pub ghost_vertices: VertexSet,
}

impl AlexanderDual {
    pub fn is_valid(&self) -> bool {
        self.ghost_vertices.is_empty()
    }
}

impl SimplicialComplex {
    /// Builds the downward closure of the given facets, rejecting ghost vertices.
    pub fn from_facets(m: usize, facets: &[Vec<usize>]) -> Result<Self, ComplexError> {
        Self::from_facets_with(m, facets, false)
    }

    /// Like [`SimplicialComplex::from_facets`] but keeps vertices that lie in no facet.
    pub fn from_facets_allowing_ghosts(m: usize, facets: &[Vec<usize>]) -> Result<Self, ComplexError> {
        Self::from_facets_with(m, facets, true)
    }

    fn from_facets_with(m: usize, facets: &[Vec<usize>], allow_ghost: bool) -> Result<Self, ComplexError> {
        if m == 0 {
            return Err(ComplexError::NoVertices);
        }
        if m > MAX_VERTICES {
            return Err(ComplexError::MTooLarge { m });
        }
        let sets =
            facets.iter().map(|f| VertexSet::from_vertices(m, f.iter().copied())).collect::<Result<Vec<_>, _>>()?;
        Self::from_facet_sets(m, &sets, allow_ghost)
    }

    pub fn from_facet_sets(m: usize, facets: &[VertexSet], allow_ghost: bool) -> Result<Self, ComplexError> {
        if m > MAX_VERTICES {
            return Err(ComplexError::MTooLarge { m });
        }
        if m >= 1 && facets.iter().all(|f| f.is_empty()) {
            return Err(ComplexError::NoFacets);
        }
        let full = VertexSet::full(m);
        if let Some(bad) = facets.iter().find(|f| !f.is_subset_of(full)) {
            let vertex = bad.difference(full).vertices().next().unwrap_or(0);
            return Err(ComplexError::VertexOutOfRange { vertex, m });
        }
        let k = Self::from_generating_sets(m, facets);
        if !allow_ghost {
            if let Some(vertex) = k.ghosts.vertices().next() {
                return Err(ComplexError::GhostVertex { vertex });
            }
        }
        Ok(k)
    }

    /// Downward closure of `generators`; records ghosts instead of rejecting them.
    fn from_generating_sets(m: usize, generators: &[VertexSet]) -> Self {
        let mut members = FaceBitmap::new(m);
        let mut faces = Vec::new();
        members.insert(VertexSet::EMPTY);
        faces.push(VertexSet::EMPTY);
        for &g in generators {
            if members.get(g) {
                continue;
            }
            for s in g.subsets() {
                if members.insert(s) {
                    faces.push(s);
                }
            }
        }
        faces.sort_unstable();
        let mut k = SimplicialComplex { m, faces, facets: Vec::new(), members, ghosts: VertexSet::EMPTY };
        k.finish();
        k
    }

    /// Builds from an already downward-closed face list (must contain ∅).
    fn from_closed_faces(m: usize, mut faces: Vec<VertexSet>) -> Self {
        let mut members = FaceBitmap::new(m);
        faces.sort_unstable();
        faces.dedup();
        for &f in &faces {
            members.insert(f);
        }
        debug_assert!(members.get(VertexSet::EMPTY));
        let mut k = SimplicialComplex { m, faces, facets: Vec::new(), members, ghosts: VertexSet::EMPTY };
        k.finish();
        k
    }

    fn finish(&mut self) {
        let full = VertexSet::full(self.m);
        self.facets = self
            .faces
            .iter()
            .copied()
            .filter(|&f| full.difference(f).vertices().all(|v| !self.members.get(f.with(v))))
            .collect();
        let covered = self.facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f));
        self.ghosts = full.difference(covered);
    }

    /// The complex `{∅}` on zero vertices (unit for the join).
    pub fn empty_face_only() -> Self {
        Self::from_generating_sets(0, &[])
    }

    /// The full simplex `Δ^{m-1}` on `[m]`.
    pub fn simplex(m: usize) -> Result<Self, ComplexError> {
        if m == 0 {
            return Err(ComplexError::NoVertices);
        }
        if m > MAX_VERTICES {
            return Err(ComplexError::MTooLarge { m });
        }
        Self::from_facet_sets(m, &[VertexSet::full(m)], false)
    }

    /// The boundary `∂Δ^{m-1}`: every proper subset of `[m]` (m ≥ 2).
    pub fn simplex_boundary(m: usize) -> Result<Self, ComplexError> {
        if m == 0 {
            return Err(ComplexError::NoVertices);
        }
        if m > MAX_VERTICES {
            return Err(ComplexError::MTooLarge { m });
        }
        let full = VertexSet::full(m);
        let facets: Vec<_> = full.vertices().map(|v| full.without(v)).collect();
        Self::from_facet_sets(m, &facets, false)
    }

    /// `m` disjoint points.
    pub fn disjoint_points(m: usize) -> Result<Self, ComplexError> {
        if m == 0 {
            return Err(ComplexError::NoVertices);
        }
        if m > MAX_VERTICES {
            return Err(ComplexError::MTooLarge { m });
        }
        let facets: Vec<_> = (1..=m).map(VertexSet::singleton).collect();
        Self::from_facet_sets(m, &facets, false)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// All faces including ∅, in bitmask order.
    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    /// Inclusion-maximal faces, in bitmask order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn ghost_vertices(&self) -> VertexSet {
        self.ghosts
    }

    pub fn has_ghosts(&self) -> bool {
        !self.ghosts.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        s.is_subset_of(VertexSet::full(self.m)) && self.members.get(s)
    }

    /// Dimension of the largest face; `-1` for `{∅}`.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// `f[k]` = number of faces with `k` vertices, `k = 0..=dim+1` (so `f[0] = 1` for ∅).
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dimension() + 2) as usize];
        for f in &self.faces {
            counts[f.len()] += 1;
        }
        counts
    }

    pub fn is_full_simplex(&self) -> bool {
        self.m > 0 && self.contains(VertexSet::full(self.m))
    }

    /// Flag (clique) complex: every minimal non-face has exactly two vertices.
    pub fn is_flag(&self) -> bool {
        self.minimal_non_faces().generators().iter().all(|g| g.len() == 2)
    }

    /// Facets as sorted 1-based vertex lists.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }

    /// The full subcomplex `K_I = {σ ∩ I : σ ∈ K}`, re-indexed onto `[|I|]`.
    pub fn full_subcomplex(&self, subset: VertexSet) -> FullSubcomplex {
        let subset = subset.intersection(VertexSet::full(self.m));
        let generators: Vec<_> = self.facets.iter().map(|f| f.intersection(subset).compress(subset)).collect();
        FullSubcomplex {
            complex: Self::from_generating_sets(subset.len(), &generators),
            vertices: subset.to_vec(),
            subset,
        }
    }

    /// `K^∨ = {σ ⊆ [m] : [m] \ σ ∉ K}`.
    pub fn alexander_dual(&self) -> Result<AlexanderDual, ComplexError> {
        let m = self.m;
        let faces: Vec<_> = VertexSet::full(m).subsets().filter(|s| !self.contains(s.complement(m))).collect();
        if faces.is_empty() {
            return Err(ComplexError::VoidDual);
        }
        let complex = Self::from_closed_faces(m, faces);
        let ghost_vertices = complex.ghosts;
        Ok(AlexanderDual { complex, ghost_vertices })
    }

    /// The join `K ⋆ L` on `m + m'` vertices; vertices of `L` are shifted by `m`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        let m = self.m + other.m;
        if m > MAX_VERTICES {
            return Err(ComplexError::MTooLarge { m });
        }
        let facets: Vec<_> =
            self.facets.iter().flat_map(|&a| other.facets.iter().map(move |&b| a.union(b.shifted(self.m)))).collect();
        Ok(Self::from_generating_sets(m, &facets))
    }

    /// Faces with at most `i + 1` vertices.
    pub fn skeleton(&self, i: usize) -> SimplicialComplex {
        let faces = self.faces.iter().copied().filter(|f| f.len() <= i + 1).collect();
        Self::from_closed_faces(self.m, faces)
    }

    /// Every `I ⊆ [m]` with `I ∉ K`, in increasing bitmask order.
    pub fn non_faces(&self) -> impl Iterator<Item = VertexSet> + '_ {
        VertexSet::full(self.m).subsets().filter(move |&s| !self.members.get(s))
    }

    /// Minimal generators of the Stanley–Reisner ideal `I_K`.
    pub fn minimal_non_faces(&self) -> MonomialIdeal {
        let generators = self.non_faces().filter(|&s| s.vertices().all(|v| self.members.get(s.without(v)))).collect();
        MonomialIdeal { m: self.m, generators }
    }

    /// `χ(K) = Σ_{σ ≠ ∅} (-1)^{|σ|-1}`; `χ({∅}) = 0`.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces.iter().filter(|f| !f.is_empty()).map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(m={}, facets={:?})", self.m, self.facets)
    }
}

/// A squarefree monomial ideal; generator `S` encodes `∏_{i ∈ S} x_i`.
///
/// The empty generator is the monomial `1` (unit ideal). Generators are kept
/// minimal and in bitmask order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MonomialIdeal {
    m: usize,
    generators: Vec<VertexSet>,
}

impl MonomialIdeal {
    /// Minimalizes `generators` (drops any monomial divisible by another).
    pub fn new(m: usize, mut generators: Vec<VertexSet>) -> Self {
        generators.sort_unstable_by_key(|g| (g.len(), g.bits()));
        generators.dedup();
        let mut kept: Vec<VertexSet> = Vec::new();
        for g in generators {
            if !kept.iter().any(|k| k.is_subset_of(g)) {
                kept.push(g);
            }
        }
        kept.sort_unstable();
        MonomialIdeal { m, generators: kept }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.first() == Some(&VertexSet::EMPTY)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Generators sorted lexicographically by their vertex lists.
    pub fn generators_lex(&self) -> Vec<VertexSet> {
        let mut gens = self.generators.clone();
        gens.sort_by_key(|g| g.to_vec());
        gens
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.generators_lex().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if g.is_empty() {
                f.write_str("1")?;
            }
            for v in g.vertices() {
                write!(f, "x{v}")?;
            }
        }
        f.write_str(")")
    }
}
