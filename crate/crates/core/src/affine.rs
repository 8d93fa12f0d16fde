//! Scheme-theoretic models of `Z_K^{A¹}`: the monomial ideal of its complement, the two
//! affine torsor presentations, and the strata of its cellular filtration.

use std::fmt;

use serde::Serialize;

use crate::error::AffineError;
use crate::simplicial::{MonomialIdeal, SimplicialComplex, VertexSet};

/// `Z_K^{A¹} = A^m ∖ V(J)` with `J` generated by `∏_{i∉σ} x_i` over the facets `σ`.
pub fn complement_ideal(k: &SimplicialComplex) -> MonomialIdeal {
    let full = VertexSet::full(k.m());
    MonomialIdeal::new(k.m(), k.facets().iter().map(|f| full.difference(*f)).collect())
}

/// `coefficient · ∏ factors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coefficient: i64,
    pub factors: Vec<String>,
}

/// A polynomial as a list of terms, rendered in the given order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polynomial {
    pub terms: Vec<Term>,
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, t) in self.terms.iter().enumerate() {
            let magnitude = t.coefficient.unsigned_abs();
            let body = match (magnitude, t.factors.is_empty()) {
                (_, true) => magnitude.to_string(),
                (1, false) => t.factors.concat(),
                (_, false) => format!("{magnitude}{}", t.factors.concat()),
            };
            match (n, t.coefficient < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// `k[variables] / (relations)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingPresentation {
    pub variables: Vec<String>,
    pub relations: Vec<Polynomial>,
}

impl RingPresentation {
    pub fn polynomial_ring(m: usize) -> Self {
        RingPresentation { variables: x_names(m), relations: Vec::new() }
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k[{}]", self.variables.join(","))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(Polynomial::to_string).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

fn x_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("x{i}")).collect()
}

fn x_factors(s: VertexSet) -> Vec<String> {
    s.vertices().map(|i| format!("x{i}")).collect()
}

/// `k[x_1..x_m, y_1..y_n] / (f_1 y_1 + ... + f_n y_n - 1)`, generators in lexicographic order.
///
/// The `y` attached to the generator `x_a x_b ...` is named `f` followed by its indices
/// (`f13`), separated by underscores when some index has two digits (`f1_12`).
/// The unit ideal cuts out nothing and gives the polynomial ring.
pub fn jouanolou_presentation(ideal: &MonomialIdeal) -> Result<RingPresentation, AffineError> {
    if ideal.is_zero() {
        return Err(AffineError::EmptyIdeal);
    }
    if ideal.is_unit() {
        return Ok(RingPresentation::polynomial_ring(ideal.m()));
    }
    let generators = ideal.generators_lex();
    let separator = if ideal.m() >= 10 { "_" } else { "" };
    let mut variables = x_names(ideal.m());
    let mut terms = Vec::new();
    for g in &generators {
        let indices: Vec<String> = g.vertices().map(|i| i.to_string()).collect();
        let y = format!("f{}", indices.join(separator));
        let mut factors = x_factors(*g);
        factors.push(y.clone());
        variables.push(y);
        terms.push(Term { coefficient: 1, factors });
    }
    terms.push(Term { coefficient: -1, factors: Vec::new() });
    Ok(RingPresentation { variables, relations: vec![Polynomial { terms }] })
}

/// `k[x_1..x_m, y_ij] / (Σ_{i∈f_j} x_i y_ij - 1 : j)` over the minimal generators `f_j`
/// of the Stanley–Reisner ideal, in lexicographic order.
///
/// `y_ij` is named `f{i}` when `i` divides a single generator, else `f{i}_{j}`.
pub fn sr_cover_presentation(k: &SimplicialComplex) -> RingPresentation {
    let ideal = k.minimal_non_faces();
    let generators = ideal.generators_lex();
    if generators.is_empty() {
        return RingPresentation::polynomial_ring(k.m());
    }
    let mut variables = x_names(k.m());
    let mut relations = Vec::new();
    for (j, g) in generators.iter().enumerate() {
        let mut terms = Vec::new();
        for i in g.vertices() {
            let shared = generators.iter().filter(|h| h.contains(i)).count() > 1;
            let y = if shared { format!("f{i}_{}", j + 1) } else { format!("f{i}") };
            terms.push(Term { coefficient: 1, factors: vec![format!("x{i}"), y.clone()] });
            variables.push(y);
        }
        terms.push(Term { coefficient: -1, factors: Vec::new() });
        relations.push(Polynomial { terms });
    }
    RingPresentation { variables, relations }
}

/// One stratum family of the cellular filtration: the `face_count` tori indexed by faces of size `face_size`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub face_size: usize,
    pub face_count: usize,
    /// `m - |σ|`: each face contributes `A^{|σ|} × G_m^{m-|σ|}`, which retracts onto this torus.
    pub torus_dim: usize,
    pub codimension: usize,
    /// Skeleton index `|σ| - 1` at which these strata appear (`-1` for the open torus).
    pub skeleton_level: isize,
    /// Torus dimension when the displayed stratum formula is read with the skeleton index in place of `|σ|`.
    pub skeleton_index_torus_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub m: usize,
    pub strata: Vec<Stratum>,
}

impl FiltrationReport {
    pub fn face_counts(&self) -> Vec<usize> {
        self.strata.iter().map(|s| s.face_count).collect()
    }

    pub fn render(&self) -> String {
        let lines: Vec<String> = self
            .strata
            .iter()
            .map(|s| format!("|σ| = {}: {} × G_m^{}", s.face_size, s.face_count, s.torus_dim))
            .collect();
        lines.join("\n")
    }
}

pub fn cellular_filtration_report(k: &SimplicialComplex) -> FiltrationReport {
    let m = k.m();
    let strata = k
        .face_counts()
        .into_iter()
        .enumerate()
        .map(|(s, face_count)| Stratum {
            face_size: s,
            face_count,
            torus_dim: m - s,
            codimension: s,
            skeleton_level: s as isize - 1,
            skeleton_index_torus_dim: (m + 1).saturating_sub(s).min(m),
        })
        .collect();
    FiltrationReport { m, strata }
}
