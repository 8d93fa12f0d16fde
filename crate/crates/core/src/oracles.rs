//! Brute-force models used to check the closed-form decompositions: a cubical cell
//! complex for `ℝZ_K = (D¹, S⁰)^K` and the squarefree strands of the Koszul complex of
//! the Stanley–Reisner ring.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::OracleError;
use crate::homology::ChainComplex;
use crate::matrix::IntegerMatrix;
use crate::motivic::BigradedTable;
use crate::simplicial::{SimplicialComplex, VertexSet};

/// Largest vertex count accepted by the cubical model (it has up to `3^m` cells).
pub const MAX_CUBICAL_VERTICES: usize = 14;

/// A cube face: interval coordinates on `support`, the other coordinates fixed to the bits of `ends`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubicalCell {
    pub support: VertexSet,
    pub ends: VertexSet,
}

impl CubicalCell {
    pub fn dimension(&self) -> usize {
        self.support.len()
    }
}

fn check_size(k: &SimplicialComplex) -> Result<(), OracleError> {
    if k.m() > MAX_CUBICAL_VERTICES {
        return Err(OracleError::TooLarge { m: k.m() });
    }
    Ok(())
}

/// Cells of `ℝZ_K` grouped by dimension, each group ordered by `(support, ends)` bitmasks.
pub fn cubical_cells(k: &SimplicialComplex) -> Result<Vec<Vec<CubicalCell>>, OracleError> {
    check_size(k)?;
    let full = VertexSet::full(k.m());
    let mut cells = vec![Vec::new(); (k.dimension() + 2) as usize];
    for &support in k.faces() {
        let free = full.difference(support);
        for ends in free.subsets() {
            cells[support.len()].push(CubicalCell { support, ends });
        }
    }
    for group in &mut cells {
        group.sort_unstable();
    }
    Ok(cells)
}

/// Cellular chain complex of `ℝZ_K` inside the cube `[0,1]^m`, degrees `0..=dim K + 1`.
///
/// The interval at `v` contributes `(-1)^k (end_1 - end_0)`, `k` the number of interval
/// coordinates before `v`.
pub fn cubical_complex_real_mac(k: &SimplicialComplex) -> Result<ChainComplex, OracleError> {
    let cells = cubical_cells(k)?;
    let index: Vec<HashMap<CubicalCell, usize>> =
        cells.iter().map(|g| g.iter().enumerate().map(|(i, &c)| (c, i)).collect()).collect();
    let ranks: Vec<usize> = cells.iter().map(Vec::len).collect();
    let boundaries: Vec<IntegerMatrix> = (1..cells.len())
        .into_par_iter()
        .map(|d| {
            let mut matrix = IntegerMatrix::zeros(ranks[d - 1], ranks[d]);
            for (col, cell) in cells[d].iter().enumerate() {
                for (position, v) in cell.support.vertices().enumerate() {
                    let sign: i64 = if position % 2 == 0 { 1 } else { -1 };
                    let support = cell.support.without(v);
                    let one = CubicalCell { support, ends: cell.ends.with(v) };
                    let zero = CubicalCell { support, ends: cell.ends };
                    matrix.set(index[d - 1][&one], col, BigInt::from(sign));
                    matrix.set(index[d - 1][&zero], col, BigInt::from(-sign));
                }
            }
            matrix
        })
        .collect();
    let chain = ChainComplex::new(0, ranks, boundaries).expect("cubical boundary squares to zero");
    Ok(chain)
}

/// `Σ (-1)^{#intervals}` over the `3^m` labelings `{0, 1, interval}` whose intervals span a face.
pub fn cubical_euler_characteristic(k: &SimplicialComplex) -> Result<i64, OracleError> {
    check_size(k)?;
    let m = k.m();
    let total = 3u64.pow(m as u32);
    let chi = (0..total)
        .into_par_iter()
        .map(|mut code| {
            let mut support = VertexSet::EMPTY;
            for v in 1..=m {
                if code % 3 == 2 {
                    support = support.with(v);
                }
                code /= 3;
            }
            match (k.contains(support), support.len() % 2) {
                (false, _) => 0,
                (true, 0) => 1,
                (true, _) => -1,
            }
        })
        .sum();
    Ok(chi)
}

/// Coefficients for the Koszul oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Rational,
    Prime(u64),
}

/// The multidegree-`I` strand of `K(x_1..x_m) ⊗ k[K]`.
///
/// Degree `t` has basis `u_J x^{I∖J}` with `|J| = t` and `I∖J ∈ K`;
/// `differentials[t - 1]` maps degree `t` to degree `t - 1`.
#[derive(Clone, Debug)]
pub struct KoszulStrand {
    pub subset: VertexSet,
    pub bases: Vec<Vec<VertexSet>>,
    pub differentials: Vec<IntegerMatrix>,
}

impl KoszulStrand {
    pub fn new(k: &SimplicialComplex, subset: VertexSet) -> Self {
        let size = subset.len();
        let mut bases: Vec<Vec<VertexSet>> = vec![Vec::new(); size + 1];
        for j in subset.subsets() {
            if k.contains(subset.difference(j)) {
                bases[j.len()].push(j);
            }
        }
        let index: Vec<HashMap<VertexSet, usize>> =
            bases.iter().map(|b| b.iter().enumerate().map(|(i, &j)| (j, i)).collect()).collect();
        let differentials = (1..=size)
            .map(|t| {
                let mut d = IntegerMatrix::zeros(bases[t - 1].len(), bases[t].len());
                for (col, &j) in bases[t].iter().enumerate() {
                    for (position, i) in j.vertices().enumerate() {
                        if let Some(&row) = index[t - 1].get(&j.without(i)) {
                            d.set(row, col, BigInt::from(if position % 2 == 0 { 1 } else { -1 }));
                        }
                    }
                }
                d
            })
            .collect();
        KoszulStrand { subset, bases, differentials }
    }

    /// Whether consecutive differentials compose to zero.
    pub fn squares_to_zero(&self) -> bool {
        self.differentials.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    /// Dimension of `Tor_t` in this multidegree for `t = 0..=|I|`.
    pub fn tor_dimensions(&self, coefficients: Coefficients) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(|d| matrix_rank(d, coefficients)).collect();
        let rank_of = |t: usize| if t == 0 { 0 } else { ranks.get(t - 1).copied().unwrap_or(0) };
        (0..self.bases.len()).map(|t| self.bases[t].len() - rank_of(t) - rank_of(t + 1)).collect()
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn matrix_rank(d: &IntegerMatrix, coefficients: Coefficients) -> usize {
    match coefficients {
        Coefficients::Rational => rational_rank(d),
        Coefficients::Prime(p) => modular_rank(d, p),
    }
}

/// Rank over `Q` by fraction-free elimination.
fn rational_rank(d: &IntegerMatrix) -> usize {
    let (rows, cols) = (d.rows(), d.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|r| (0..cols).map(|c| d.get(r, c).clone()).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                continue;
            }
            let g = a[rank][c].gcd(&a[r][c]);
            let (f_pivot, f_row) = (&a[r][c] / &g, &a[rank][c] / &g);
            let (head, tail) = a.split_at_mut(r);
            for (x, y) in tail[0][c..].iter_mut().zip(&head[rank][c..]) {
                *x = &*x * &f_row - y * &f_pivot;
            }
            let content = a[r][c..].iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if content > BigInt::from(1) {
                for x in &mut a[r][c..] {
                    *x = &*x / &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over `F_p`.
fn modular_rank(d: &IntegerMatrix, p: u64) -> usize {
    let reduce = |x: &BigInt| -> u64 {
        let r = x.mod_floor(&BigInt::from(p));
        u64::try_from(r.abs()).expect("residue fits")
    };
    let (rows, cols) = (d.rows(), d.cols());
    let mut a: Vec<Vec<u64>> = (0..rows).map(|r| (0..cols).map(|c| reduce(d.get(r, c))).collect()).collect();
    let inverse = |x: u64| -> u64 {
        let (mut base, mut e, mut acc) = (x as u128, p - 2, 1u128);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u128;
            }
            base = base * base % p as u128;
            e >>= 1;
        }
        acc as u64
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let inv = inverse(a[rank][c]);
        for r in rank + 1..rows {
            let f = (a[r][c] as u128 * inv as u128 % p as u128) as u64;
            if f == 0 {
                continue;
            }
            let (head, tail) = a.split_at_mut(r);
            for (x, &y) in tail[0][c..].iter_mut().zip(&head[rank][c..]) {
                let sub = (f as u128 * y as u128 % p as u128) as u64;
                *x = (*x + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Squarefree Tor ranks of the Stanley–Reisner ring, `Tor_t` in multidegree `I`
/// placed at `(2|I| - t, |I|)`.
pub fn koszul_tor_ranks(k: &SimplicialComplex, coefficients: Coefficients) -> Result<BigradedTable, OracleError> {
    if let Coefficients::Prime(p) = coefficients {
        if !is_prime(p) {
            return Err(OracleError::NotPrime { p });
        }
    }
    let full = VertexSet::full(k.m());
    let subsets: Vec<VertexSet> = full.subsets().collect();
    let strands: Vec<(VertexSet, Vec<usize>)> =
        subsets.par_iter().map(|&i| (i, KoszulStrand::new(k, i).tor_dimensions(coefficients))).collect();
    let mut table = BigradedTable::new();
    for (i, dims) in strands {
        let size = i.len() as i64;
        for (t, &r) in dims.iter().enumerate() {
            table.add(2 * size - t as i64, size, r as u64);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::homology::HomologyGroup;

    #[test]
    fn two_points_is_a_circle() {
        let k = SimplicialComplex::disjoint_points(2).unwrap();
        let c = cubical_complex_real_mac(&k).unwrap();
        assert_eq!((c.rank(0), c.rank(1)), (4, 4));
        let h = c.homology();
        assert_eq!(h.get(0), HomologyGroup::free(1));
        assert_eq!(h.get(1), HomologyGroup::free(1));
    }

    #[test]
    fn square_is_a_torus_and_triangle_a_sphere() {
        let h = cubical_complex_real_mac(&examples::square()).unwrap().homology();
        assert_eq!(h.ranks_from_zero(), vec![1, 2, 1]);
        let s = cubical_complex_real_mac(&SimplicialComplex::simplex_boundary(3).unwrap()).unwrap().homology();
        assert_eq!(s.ranks_from_zero(), vec![1, 0, 1]);
    }

    #[test]
    fn cubical_euler() {
        assert_eq!(cubical_euler_characteristic(&SimplicialComplex::disjoint_points(3).unwrap()).unwrap(), -4);
        assert_eq!(cubical_euler_characteristic(&SimplicialComplex::simplex(5).unwrap()).unwrap(), 1);
        assert_eq!(cubical_euler_characteristic(&examples::square()).unwrap(), 0);
        let big = SimplicialComplex::disjoint_points(15).unwrap();
        assert_eq!(cubical_euler_characteristic(&big), Err(OracleError::TooLarge { m: 15 }));
    }

    #[test]
    fn koszul_square_and_simplex() {
        let t = koszul_tor_ranks(&examples::square(), Coefficients::Rational).unwrap();
        assert_eq!(t.to_string(), "{(0,0):1, (3,2):2, (6,4):1}");
        let s = koszul_tor_ranks(&SimplicialComplex::simplex(4).unwrap(), Coefficients::Rational).unwrap();
        assert_eq!(s.to_string(), "{(0,0):1}");
        assert_eq!(koszul_tor_ranks(&examples::square(), Coefficients::Prime(4)), Err(OracleError::NotPrime { p: 4 }));
    }

    #[test]
    fn koszul_detects_two_torsion() {
        let k = examples::rp2();
        let strand = KoszulStrand::new(&k, VertexSet::full(6));
        assert!(strand.squares_to_zero());
        let q = strand.tor_dimensions(Coefficients::Rational);
        let f2 = strand.tor_dimensions(Coefficients::Prime(2));
        let f3 = strand.tor_dimensions(Coefficients::Prime(3));
        assert_eq!(q, f3);
        let diff: Vec<i64> = f2.iter().zip(&q).map(|(a, b)| *a as i64 - *b as i64).collect();
        assert_eq!(diff, vec![0, 0, 0, 1, 1, 0, 0]);
    }

    #[test]
    fn ranks_agree_on_small_matrices() {
        let m = IntegerMatrix::from_rows(&[vec![2, 4], vec![1, 2]]);
        assert_eq!(rational_rank(&m), 1);
        let n = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(rational_rank(&n), 2);
        assert_eq!(modular_rank(&n, 2), 1);
        assert_eq!(modular_rank(&n, 3), 1);
        assert_eq!(modular_rank(&n, 5), 2);
    }
}
