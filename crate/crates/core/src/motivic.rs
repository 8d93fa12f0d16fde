//! Cellular A¹-homology as formal Milnor–Witt sheaf expressions, A¹-Betti numbers
//! and the motivic cohomology decomposition.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::InvariantError;
use crate::homology::{GradedHomology, HomologyGroup};
use crate::simplicial::{SimplicialComplex, VertexSet};
use crate::splitting::SubcomplexTable;

/// A formal sum `⊕_n G_n ⊗ K^MW_n` with one abelian group per weight.
///
/// Weight 0 stands for plain abelian groups (`K^MW_0 ⊗ Z` is written `Z`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SheafExpression {
    terms: BTreeMap<u32, HomologyGroup>,
}

impl SheafExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `group ⊗ K^MW_weight`.
    pub fn term(group: HomologyGroup, weight: u32) -> Self {
        let mut e = Self::zero();
        e.add_term(group, weight);
        e
    }

    /// The constant sheaf `Z`.
    pub fn integers() -> Self {
        Self::term(HomologyGroup::free(1), 0)
    }

    pub fn add_term(&mut self, group: HomologyGroup, weight: u32) {
        if group.is_zero() {
            return;
        }
        let slot = self.terms.entry(weight).or_default();
        *slot = slot.direct_sum(&group);
    }

    pub fn direct_sum(&self, other: &SheafExpression) -> SheafExpression {
        let mut out = self.clone();
        for (&w, g) in &other.terms {
            out.add_term(g.clone(), w);
        }
        out
    }

    /// Applies `K^MW_i ⊗ K^MW_n = K^MW_{i+n}` to every term.
    pub fn tensor_kmw(&self, n: u32) -> SheafExpression {
        SheafExpression { terms: self.terms.iter().map(|(&w, g)| (w + n, g.clone())).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(weight, group)` pairs, weights ascending.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &HomologyGroup)> {
        self.terms.iter().map(|(&w, g)| (w, g))
    }

    pub fn weight(&self, w: u32) -> HomologyGroup {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    /// Sum of the free ranks over all weights.
    pub fn total_free_rank(&self) -> usize {
        self.terms.values().map(HomologyGroup::free_rank).sum()
    }

    /// Removes one copy of `Z` at weight 0 (the basepoint class); panics if there is none.
    fn without_basepoint(&self) -> SheafExpression {
        let mut out = self.clone();
        let g = out.terms.remove(&0).expect("degree 0 contains Z");
        assert!(g.free_rank() >= 1, "degree 0 contains Z");
        out.add_term(HomologyGroup::new(g.free_rank() - 1, g.torsion().to_vec()), 0);
        out
    }
}

fn power(base: String, count: usize) -> String {
    if count == 1 {
        base
    } else {
        format!("{base}^{count}")
    }
}

impl fmt::Display for SheafExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (&w, g) in &self.terms {
            if g.free_rank() > 0 {
                let base = if w == 0 { "Z".to_string() } else { format!("KMW({w})") };
                parts.push(power(base, g.free_rank()));
            }
            let mut torsion: Vec<(&BigInt, usize)> = Vec::new();
            for d in g.torsion() {
                match torsion.last_mut() {
                    Some((prev, c)) if *prev == d => *c += 1,
                    _ => torsion.push((d, 1)),
                }
            }
            for (d, c) in torsion {
                let base = if w == 0 { format!("Z/{d}") } else { format!("(Z/{d} ⊗ KMW({w}))") };
                parts.push(power(base, c));
            }
        }
        f.write_str(&parts.join(" ⊕ "))
    }
}

impl Serialize for SheafExpression {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            weight: u32,
            group: &'a HomologyGroup,
        }
        serializer.collect_seq(self.terms.iter().map(|(&weight, group)| Term { weight, group }))
    }
}

/// Cellular homology of a pointed cellular space, unreduced: degree 0 contains the basepoint `Z`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CellularHomology {
    degrees: Vec<SheafExpression>,
}

impl CellularHomology {
    pub fn new(mut degrees: Vec<SheafExpression>) -> Self {
        while degrees.len() > 1 && degrees.last().is_some_and(SheafExpression::is_zero) {
            degrees.pop();
        }
        CellularHomology { degrees }
    }

    /// The homology of a point.
    pub fn point() -> Self {
        Self::new(vec![SheafExpression::integers()])
    }

    /// Constant sheaves of an ordinary space, from its reduced homology.
    pub fn from_reduced(h: &GradedHomology) -> Self {
        let top = h.max_degree().unwrap_or(0).max(0) as usize;
        let degrees = (0..=top)
            .map(|n| {
                let mut e = SheafExpression::term(h.get(n as isize), 0);
                if n == 0 {
                    e.add_term(HomologyGroup::free(1), 0);
                }
                e
            })
            .collect();
        Self::new(degrees)
    }

    pub fn get(&self, i: usize) -> SheafExpression {
        self.degrees.get(i).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> &[SheafExpression] {
        &self.degrees
    }

    /// Highest degree with nonzero homology.
    pub fn top_degree(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    /// Homology of `X ∧ G_m^{∧n}`: degree 0 becomes `Z ⊕ (H̃_0 ⊗ K^MW_n)`, degree `i > 0` becomes `H_i ⊗ K^MW_n`.
    pub fn smash_gm(&self, n: u32) -> Self {
        let degrees = self
            .degrees
            .iter()
            .enumerate()
            .map(|(i, e)| {
                if i == 0 {
                    SheafExpression::integers().direct_sum(&e.without_basepoint().tensor_kmw(n))
                } else {
                    e.tensor_kmw(n)
                }
            })
            .collect();
        Self::new(degrees)
    }

    /// Homology of the simplicial suspension `S¹ ∧ X`: `Z` in degree 0, `H̃_{i-1}` in degree `i`.
    pub fn suspend(&self) -> Self {
        let mut degrees = vec![SheafExpression::integers()];
        degrees.extend(
            self.degrees.iter().enumerate().map(|(i, e)| if i == 0 { e.without_basepoint() } else { e.clone() }),
        );
        Self::new(degrees)
    }

    /// Inverse of [`CellularHomology::suspend`] on a suspension (degree 1 becomes the reduced degree 0).
    pub fn desuspend(&self) -> Self {
        let mut degrees = vec![SheafExpression::integers().direct_sum(&self.get(1))];
        degrees.extend(self.degrees.iter().skip(2).cloned());
        Self::new(degrees)
    }

    /// Homology of `S^{p,q} ∧ X` with `S^{p,q} = S^{p-q} ∧ G_m^{∧q}`.
    pub fn smash_sphere(&self, p: u32, q: u32) -> Self {
        assert!(p >= q, "S^(p,q) needs p >= q");
        (0..p - q).fold(self.smash_gm(q), |acc, _| acc.suspend())
    }

    /// Homology of a wedge: reduced parts add.
    pub fn wedge(parts: &[CellularHomology]) -> Self {
        let top = parts.iter().map(|h| h.degrees.len()).max().unwrap_or(1).max(1);
        let degrees = (0..top)
            .map(|i| {
                let init = if i == 0 { SheafExpression::integers() } else { SheafExpression::zero() };
                parts.iter().fold(init, |acc, h| {
                    let e = if i == 0 { h.get(0).without_basepoint() } else { h.get(i) };
                    acc.direct_sum(&e)
                })
            })
            .collect();
        Self::new(degrees)
    }
}

impl Serialize for CellularHomology {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Degree<'a> {
            degree: usize,
            rendered: String,
            terms: &'a SheafExpression,
        }
        let mut seq = serializer.serialize_seq(Some(self.degrees.len()))?;
        for (degree, e) in self.degrees.iter().enumerate() {
            seq.serialize_element(&Degree { degree, rendered: e.to_string(), terms: e })?;
        }
        seq.end()
    }
}

impl fmt::Display for CellularHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.degrees.iter().enumerate() {
            writeln!(f, "H_{i} = {e}")?;
        }
        Ok(())
    }
}

fn require_no_ghosts(k: &SimplicialComplex) -> Result<(), InvariantError> {
    if k.has_ghosts() {
        return Err(InvariantError::GhostVertex { vertices: k.ghost_vertices().to_vec() });
    }
    Ok(())
}

/// `H_0 = Z` and `H_i = ⊕_{I∉K} H̃_{i-1}(K_I) ⊗ K^MW_{|I|}` for `i > 0`.
pub fn cellular_a1_homology(k: &SimplicialComplex) -> Result<CellularHomology, InvariantError> {
    require_no_ghosts(k)?;
    Ok(cellular_from_table(&SubcomplexTable::new(k)))
}

pub fn cellular_from_table(table: &SubcomplexTable) -> CellularHomology {
    let mut degrees = vec![SheafExpression::integers()];
    for e in &table.entries {
        let w = e.subset.len() as u32;
        for (n, g) in e.homology.nonzero() {
            let i = (n + 1) as usize;
            if degrees.len() <= i {
                degrees.resize(i + 1, SheafExpression::zero());
            }
            degrees[i].add_term(g.clone(), w);
        }
    }
    CellularHomology::new(degrees)
}

/// The same groups rebuilt from the wedge summands `|K_I| ∧ S^{|I|+2,|I|}` of `ΣZ_K`
/// using only the smash, suspension and wedge rules, then desuspended.
pub fn cellular_from_summands(table: &SubcomplexTable) -> CellularHomology {
    let summands: Vec<CellularHomology> = table
        .entries
        .iter()
        .map(|e| {
            let w = e.subset.len() as u32;
            CellularHomology::from_reduced(&e.homology).smash_sphere(w + 2, w)
        })
        .collect();
    CellularHomology::wedge(&summands).desuspend()
}

/// Finitely supported table `(i, j) -> rank`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigradedTable {
    entries: BTreeMap<(i64, i64), u64>,
}

impl BigradedTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: i64, j: i64, rank: u64) {
        if rank > 0 {
            *self.entries.entry((i, j)).or_default() += rank;
        }
    }

    pub fn get(&self, i: i64, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Markdown grid with rows `j` and columns `i`.
    pub fn to_markdown(&self) -> String {
        let is: Vec<i64> = {
            let mut v: Vec<i64> = self.entries.keys().map(|k| k.0).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let js: Vec<i64> = {
            let mut v: Vec<i64> = self.entries.keys().map(|k| k.1).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let mut out = String::from("| j \\ i |");
        for i in &is {
            out.push_str(&format!(" {i} |"));
        }
        out.push_str("\n|---|");
        out.push_str(&"---|".repeat(is.len()));
        out.push('\n');
        for j in &js {
            out.push_str(&format!("| {j} |"));
            for i in &is {
                match self.get(*i, *j) {
                    0 => out.push_str(" . |"),
                    r => out.push_str(&format!(" {r} |")),
                }
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for BigradedTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: i64,
            j: i64,
            rank: u64,
        }
        serializer.collect_seq(self.entries.iter().map(|(&(i, j), &rank)| Entry { i, j, rank }))
    }
}

impl fmt::Display for BigradedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|((i, j), r)| format!("({i},{j}):{r}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `b^{i,j} = Σ_{I∉K, |I|=j} rank H̃^{i-j-1}(K_I)`, plus `1` at `(0,0)`.
pub fn a1_betti_numbers(k: &SimplicialComplex) -> BigradedTable {
    a1_betti_from_table(&SubcomplexTable::new(k))
}

pub fn a1_betti_from_table(table: &SubcomplexTable) -> BigradedTable {
    let mut t = BigradedTable::new();
    t.add(0, 0, 1);
    for e in &table.entries {
        let j = e.subset.len() as i64;
        for (d, g) in e.cohomology.nonzero() {
            t.add(d as i64 + j + 1, j, g.free_rank() as u64);
        }
    }
    t
}

/// Classical bigraded Betti numbers `b^{-t,2s}(Z_K) = Σ_{|I|=s} rank H̃^{s-t-1}(K_I)`,
/// reindexed by `(i, j) = (2s - t, s)`.
pub fn classical_bigraded_betti(k: &SimplicialComplex) -> BigradedTable {
    let table = SubcomplexTable::new(k);
    let mut t = BigradedTable::new();
    t.add(0, 0, 1);
    for e in &table.entries {
        let s = e.subset.len() as i64;
        for tor in 0..=s {
            let rank = e.cohomology.get((s - tor - 1) as isize).free_rank() as u64;
            t.add(2 * s - tor, s, rank);
        }
    }
    t
}

/// How far the A-module form of the motivic cohomology can be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleFormStatus {
    /// Every `K_I` has free homology in at most one degree, so each `Σ|K_I|` is a wedge of spheres.
    Certified,
    /// Torsion-free homology only; `Σ|K_I|` need not be a wedge of spheres.
    TorsionFreeOnly,
    /// Some `K_I` has torsion.
    Unavailable,
}

/// `A[p,q]^multiplicity` with `A` the (opaque) motivic cohomology ring of the base field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleTerm {
    pub shift: (i64, i64),
    pub multiplicity: u64,
}

/// `H̃^{*,*}(|K_I|)` placed at bidegree shift `(j + 1, j)`, `j = |I|`.
#[derive(Clone, Debug, Serialize)]
pub struct GroupTerm {
    #[serde(rename = "I")]
    pub subset: VertexSet,
    pub shift: (i64, i64),
    pub cohomology: GradedHomology,
}

#[derive(Clone, Debug)]
pub struct MotivicDecomposition {
    pub status: ModuleFormStatus,
    pub module_terms: Vec<ModuleTerm>,
    pub group_terms: Vec<GroupTerm>,
}

impl MotivicDecomposition {
    /// `A[3,2]^2 ⊕ A[6,4]`, `0` when empty, `unavailable` without a module form.
    pub fn render(&self) -> String {
        if self.status == ModuleFormStatus::Unavailable {
            return "unavailable".to_string();
        }
        if self.module_terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .module_terms
            .iter()
            .map(|t| power(format!("A[{},{}]", t.shift.0, t.shift.1), t.multiplicity as usize))
            .collect();
        parts.join(" ⊕ ")
    }
}

impl Serialize for MotivicDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("MotivicDecomposition", 4)?;
        s.serialize_field("module_form", &self.status)?;
        s.serialize_field("rendered", &self.render())?;
        if self.status == ModuleFormStatus::Unavailable {
            s.serialize_field("group_terms", &self.group_terms)?;
        } else {
            s.serialize_field("module_terms", &self.module_terms)?;
        }
        s.end()
    }
}

/// Reduced motivic cohomology of `Z_K^{A¹}` as a sum of shifted copies of `A`.
///
/// A class in `H̃^d(K_I)` with `|I| = j` contributes `A[d + j + 1, j]`.
pub fn motivic_cohomology_decomposition(k: &SimplicialComplex) -> MotivicDecomposition {
    motivic_from_table(&SubcomplexTable::new(k))
}

pub fn motivic_from_table(table: &SubcomplexTable) -> MotivicDecomposition {
    let torsion = table.entries.iter().any(|e| !e.homology.is_torsion_free());
    let single_degree = table.entries.iter().all(|e| e.homology.nonzero().count() <= 1);
    let status = match (torsion, single_degree) {
        (true, _) => ModuleFormStatus::Unavailable,
        (false, true) => ModuleFormStatus::Certified,
        (false, false) => ModuleFormStatus::TorsionFreeOnly,
    };
    let mut shifts: BTreeMap<(i64, i64), u64> = BTreeMap::new();
    let mut group_terms = Vec::new();
    for e in &table.entries {
        let j = e.subset.len() as i64;
        for (d, g) in e.cohomology.nonzero() {
            *shifts.entry((d as i64 + j + 1, j)).or_default() += g.free_rank() as u64;
        }
        if !e.cohomology.is_zero() {
            group_terms.push(GroupTerm { subset: e.subset, shift: (j + 1, j), cohomology: e.cohomology.clone() });
        }
    }
    let module_terms = if status == ModuleFormStatus::Unavailable {
        Vec::new()
    } else {
        shifts
            .into_iter()
            .filter(|&(_, r)| r > 0)
            .map(|(shift, multiplicity)| ModuleTerm { shift, multiplicity })
            .collect()
    };
    MotivicDecomposition { status, module_terms, group_terms }
}
