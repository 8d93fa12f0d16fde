//! The subring `Z⟨1⟩ + Z⟨-1⟩ ≅ Z[t]/(t² - 1)` of the Grothendieck–Witt ring and the
//! A¹-Euler characteristics of moment-angle complexes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::affine::FiltrationReport;
use crate::error::InvariantError;
use crate::homology::BigNumber as Big;
use crate::simplicial::SimplicialComplex;
use crate::splitting::SubcomplexTable;

/// `a⟨1⟩ + b⟨-1⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GwElement {
    pub a: BigInt,
    pub b: BigInt,
}

impl GwElement {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GwElement { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `⟨1⟩`.
    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// `⟨-1⟩`.
    pub fn t() -> Self {
        Self::new(0, 1)
    }

    /// The hyperbolic-type element `⟨1⟩ - ⟨-1⟩`.
    pub fn h() -> Self {
        Self::new(1, -1)
    }

    /// `n⟨1⟩`.
    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self::new(n, 0)
    }

    pub fn rank(&self) -> BigInt {
        &self.a + &self.b
    }

    pub fn signature(&self) -> BigInt {
        &self.a - &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn pow(&self, n: u32) -> GwElement {
        let mut result = GwElement::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// `⟨-1⟩^n`.
    pub fn t_pow(n: usize) -> GwElement {
        if n.is_multiple_of(2) {
            GwElement::one()
        } else {
            GwElement::t()
        }
    }

    pub fn specialize(&self, field: GwField) -> FieldValue {
        match field {
            GwField::Complex => FieldValue::Complex { rank: self.rank() },
            GwField::Real => FieldValue::Real { rank: self.rank(), signature: self.signature() },
            GwField::Generic => FieldValue::Generic(self.clone()),
        }
    }
}

impl Add for &GwElement {
    type Output = GwElement;
    fn add(self, o: &GwElement) -> GwElement {
        GwElement { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &GwElement {
    type Output = GwElement;
    fn sub(self, o: &GwElement) -> GwElement {
        GwElement { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Mul for &GwElement {
    type Output = GwElement;
    fn mul(self, o: &GwElement) -> GwElement {
        GwElement { a: &self.a * &o.a + &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a }
    }
}

impl Neg for &GwElement {
    type Output = GwElement;
    fn neg(self) -> GwElement {
        GwElement { a: -&self.a, b: -&self.b }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GwElement {
            type Output = GwElement;
            fn $m(self, o: GwElement) -> GwElement {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for GwElement {
    type Output = GwElement;
    fn neg(self) -> GwElement {
        -&self
    }
}

fn coefficient(c: &BigInt, symbol: &str) -> String {
    if c.is_one() {
        symbol.to_string()
    } else {
        format!("{c}{symbol}")
    }
}

/// `0`, `<1>`, `2<1> - 3<-1>`, `-<-1>`.
impl fmt::Display for GwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => f.write_str(&signed_leading(&self.a, "<1>")),
            (true, false) => f.write_str(&signed_leading(&self.b, "<-1>")),
            (false, false) => {
                let op = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "{} {op} {}", signed_leading(&self.a, "<1>"), coefficient(&self.b.abs(), "<-1>"))
            }
        }
    }
}

fn signed_leading(c: &BigInt, symbol: &str) -> String {
    if c.is_negative() {
        format!("-{}", coefficient(&c.abs(), symbol))
    } else {
        coefficient(c, symbol)
    }
}

impl Serialize for GwElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("GwElement", 4)?;
        s.serialize_field("a", &Big(&self.a))?;
        s.serialize_field("b", &Big(&self.b))?;
        s.serialize_field("rank", &Big(&self.rank()))?;
        s.serialize_field("signature", &Big(&self.signature()))?;
        s.end()
    }
}

/// Base-field collapse used for output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GwField {
    /// `⟨-1⟩ = ⟨1⟩`, only the rank survives.
    #[serde(rename = "C")]
    Complex,
    /// Rank and signature.
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "generic")]
    Generic,
}

impl FromStr for GwField {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "C" | "c" => Ok(GwField::Complex),
            "R" | "r" => Ok(GwField::Real),
            "generic" => Ok(GwField::Generic),
            other => Err(format!("unknown field `{other}` (expected C, R or generic)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldValue {
    Complex { rank: BigInt },
    Real { rank: BigInt, signature: BigInt },
    Generic(GwElement),
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Complex { rank } => write!(f, "{}", GwElement::integer(rank.clone())),
            FieldValue::Real { rank, signature } => write!(f, "rank {rank}, signature {signature}"),
            FieldValue::Generic(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for FieldValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            FieldValue::Generic(x) => x.serialize(serializer),
            FieldValue::Complex { rank } => {
                let mut s = serializer.serialize_struct("FieldValue", 1)?;
                s.serialize_field("rank", &Big(rank))?;
                s.end()
            }
            FieldValue::Real { rank, signature } => {
                let mut s = serializer.serialize_struct("FieldValue", 2)?;
                s.serialize_field("rank", &Big(rank))?;
                s.serialize_field("signature", &Big(signature))?;
                s.end()
            }
        }
    }
}

/// `χ((X, A)^K) = Σ_{σ∈K} (χX - χA)^{|σ|} χA^{m-|σ|}`, empty face included, `0^0 = 1`.
pub fn chi_classical_polyhedral(chi_x: i64, chi_a: i64, k: &SimplicialComplex) -> BigInt {
    let m = k.m();
    let d = BigInt::from(chi_x - chi_a);
    let a = BigInt::from(chi_a);
    k.face_counts()
        .iter()
        .enumerate()
        .map(|(s, &count)| BigInt::from(count) * d.pow(s as u32) * a.pow((m - s) as u32))
        .sum()
}

/// `χ_{A¹}(Z_K^{A¹}) = Σ_{σ∈K} ⟨-1⟩^{|σ|} (⟨1⟩ - ⟨-1⟩)^{m-|σ|}`, empty face included.
pub fn chi_a1_davis(k: &SimplicialComplex) -> GwElement {
    let m = k.m();
    k.faces().iter().fold(GwElement::zero(), |acc, s| {
        let term = &GwElement::t_pow(s.len()) * &GwElement::h().pow((m - s.len()) as u32);
        &acc + &term
    })
}

/// `Σ_{σ∈K} (-1)^{|σ|} 2^{m-|σ|-1} (⟨1⟩ - ⟨-1⟩)`; `None` for the full simplex, where the
/// top face would need the exponent `-1`.
pub fn chi_a1_davis_collapsed(k: &SimplicialComplex) -> Option<GwElement> {
    if k.is_full_simplex() {
        return None;
    }
    let m = k.m();
    let coefficient: BigInt = k
        .face_counts()
        .iter()
        .enumerate()
        .map(|(s, &count)| {
            let c = BigInt::from(count) << (m - s - 1);
            if s % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .sum();
    Some(&GwElement::integer(coefficient) * &GwElement::h())
}

fn require_no_ghosts(k: &SimplicialComplex) -> Result<(), InvariantError> {
    if k.has_ghosts() {
        return Err(InvariantError::GhostVertex { vertices: k.ghost_vertices().to_vec() });
    }
    Ok(())
}

/// `⟨1⟩ - Σ_{I∉K} (-1)^{|I|} (χ(K_I) - 1) ⟨-1⟩^{|I|}`.
pub fn chi_a1_splitting(k: &SimplicialComplex) -> Result<GwElement, InvariantError> {
    require_no_ghosts(k)?;
    Ok(chi_a1_splitting_from_table(&SubcomplexTable::new(k)))
}

pub fn chi_a1_splitting_from_table(table: &SubcomplexTable) -> GwElement {
    table.entries.iter().fold(GwElement::one(), |acc, e| {
        let size = e.subset.len();
        let sign = if size % 2 == 0 { 1 } else { -1 };
        let term = &GwElement::integer(sign * (e.euler - 1)) * &GwElement::t_pow(size);
        &acc - &term
    })
}

/// `χ(X_1 ∨ ... ∨ X_n) = ⟨1⟩ + Σ (χ(X_i) - ⟨1⟩)`.
pub fn gw_wedge_rule(xs: &[GwElement]) -> GwElement {
    let one = GwElement::one();
    xs.iter().fold(one.clone(), |acc, x| &acc + &(x - &one))
}

/// `χ(S^{p,q} ∧ X) = ⟨1⟩ + (-1)^p ⟨-1⟩^q (χ(X) - ⟨1⟩)`.
pub fn gw_smash_shift(x: &GwElement, p: usize, q: usize) -> GwElement {
    let one = GwElement::one();
    let reduced = x - &one;
    let sign = if p.is_multiple_of(2) { GwElement::one() } else { -GwElement::one() };
    &one + &(&(&sign * &GwElement::t_pow(q)) * &reduced)
}

/// Rebuilds `χ_{A¹}(Z_K^{A¹})` from the summands `|K_I| ∧ S^{|I|+2,|I|}` of `ΣZ_K^{A¹}`,
/// then undoes the suspension (`S^{1,0}` smashing is an involution on χ).
pub fn chi_a1_rebuilt(k: &SimplicialComplex) -> Result<GwElement, InvariantError> {
    require_no_ghosts(k)?;
    Ok(chi_a1_rebuilt_from_table(&SubcomplexTable::new(k)))
}

pub fn chi_a1_rebuilt_from_table(table: &SubcomplexTable) -> GwElement {
    let summands: Vec<GwElement> = table
        .entries
        .iter()
        .map(|e| {
            let size = e.subset.len();
            gw_smash_shift(&GwElement::integer(e.euler), size + 2, size)
        })
        .collect();
    gw_smash_shift(&gw_wedge_rule(&summands), 1, 0)
}

/// Recomputes the Davis value from the cellular strata: a stratum `A^{|σ|} × G_m^{m-|σ|}`
/// contributes `⟨-1⟩^{|σ|} (⟨1⟩ - ⟨-1⟩)^{m-|σ|}`.
pub fn chi_a1_from_filtration(report: &FiltrationReport) -> GwElement {
    report.strata.iter().fold(GwElement::zero(), |acc, s| {
        let cell = &GwElement::t_pow(s.face_size) * &GwElement::h().pow(s.torus_dim as u32);
        &acc + &(&GwElement::integer(s.face_count) * &cell)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn ring_identities() {
        assert_eq!(GwElement::h().pow(2), GwElement::new(2, -2));
        assert_eq!(GwElement::t().pow(4), GwElement::one());
        assert_eq!(GwElement::t().pow(5), GwElement::t());
        assert_eq!(GwElement::h().rank(), BigInt::zero());
        assert_eq!(GwElement::h().signature(), BigInt::from(2));
        assert_eq!(&GwElement::h() * &GwElement::h(), &GwElement::integer(2) * &GwElement::h());
    }

    #[test]
    fn rendering() {
        assert_eq!(GwElement::zero().to_string(), "0");
        assert_eq!(GwElement::one().to_string(), "<1>");
        assert_eq!(GwElement::h().to_string(), "<1> - <-1>");
        assert_eq!(GwElement::new(2, 3).to_string(), "2<1> + 3<-1>");
        assert_eq!(GwElement::new(0, -1).to_string(), "-<-1>");
        assert_eq!(GwElement::new(-4, -2).to_string(), "-4<1> - 2<-1>");
        assert_eq!(serde_json::to_string(&GwElement::h()).unwrap(), r#"{"a":1,"b":-1,"rank":0,"signature":2}"#);
    }

    #[test]
    fn field_collapse() {
        let x = GwElement::new(3, -1);
        assert_eq!(x.specialize(GwField::Complex).to_string(), "2<1>");
        assert_eq!(x.specialize(GwField::Real).to_string(), "rank 2, signature 4");
        assert_eq!("generic".parse::<GwField>().unwrap(), GwField::Generic);
    }

    #[test]
    fn classical_polyhedral() {
        let pts = SimplicialComplex::disjoint_points(3).unwrap();
        assert_eq!(chi_classical_polyhedral(1, 2, &pts), BigInt::from(-4));
        assert_eq!(chi_classical_polyhedral(1, 0, &examples::square()), BigInt::zero());
        // χA = 1 leaves Σ (χX - 1)^{|σ|}
        assert_eq!(chi_classical_polyhedral(3, 1, &examples::square()), BigInt::from(1 + 4 * 2 + 4 * 4));
        assert_eq!(chi_classical_polyhedral(1, 0, &SimplicialComplex::simplex(2).unwrap()), BigInt::one());
    }

    #[test]
    fn davis_examples() {
        assert_eq!(chi_a1_davis(&examples::square()), GwElement::zero());
        let rp2 = examples::rp2();
        assert_eq!(chi_a1_from_filtration(&crate::affine::cellular_filtration_report(&rp2)), chi_a1_davis(&rp2));
        for n in 2..7 {
            let k = SimplicialComplex::simplex_boundary(n).unwrap();
            assert_eq!(chi_a1_davis(&k), &GwElement::one() - &GwElement::t_pow(n));
        }
        assert_eq!(chi_a1_davis(&SimplicialComplex::simplex(4).unwrap()), GwElement::one());
        assert_eq!(chi_a1_davis_collapsed(&examples::square()), Some(GwElement::zero()));
        assert_eq!(chi_a1_davis_collapsed(&SimplicialComplex::simplex(2).unwrap()), None);
    }

    #[test]
    fn splitting_and_rebuilt() {
        let sq = examples::square();
        assert_eq!(chi_a1_splitting(&sq).unwrap(), GwElement::zero());
        assert_eq!(chi_a1_rebuilt(&sq).unwrap(), GwElement::zero());
        for m in 2..6 {
            let k = SimplicialComplex::simplex_boundary(m).unwrap();
            assert_eq!(chi_a1_splitting(&k).unwrap(), &GwElement::one() - &GwElement::t_pow(m));
        }
        assert_eq!(chi_a1_splitting(&SimplicialComplex::simplex(3).unwrap()).unwrap(), GwElement::one());
    }

    #[test]
    fn wedge_and_shift_rules() {
        assert_eq!(gw_wedge_rule(&[GwElement::one(), GwElement::one()]), GwElement::one());
        let c = GwElement::new(2, 5);
        let x = &GwElement::one() + &c;
        assert_eq!(gw_smash_shift(&x, 1, 0), &GwElement::one() - &c);
    }
}
