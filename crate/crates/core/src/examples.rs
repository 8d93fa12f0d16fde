//! Named complexes used across tests, docs and the CLI.

use crate::simplicial::SimplicialComplex;

/// The 4-cycle on vertices 1,3,2,4: facets {1,3},{2,3},{1,4},{2,4}.
pub fn square() -> SimplicialComplex {
    SimplicialComplex::from_facets(4, &[vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4]]).expect("valid")
}

/// A 6-vertex triangulation of the real projective plane.
pub fn rp2() -> SimplicialComplex {
    let facets =
        [[1, 2, 4], [1, 3, 4], [2, 3, 5], [2, 4, 5], [4, 5, 6], [3, 4, 6], [2, 3, 6], [1, 3, 5], [1, 5, 6], [1, 2, 6]];
    let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_facets(6, &facets).expect("valid")
}

/// The pentagon, boundary of a 5-gon.
pub fn pentagon() -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = (1..=5).map(|i| vec![i, i % 5 + 1]).collect();
    SimplicialComplex::from_facets(5, &facets).expect("valid")
}

/// Two triangles glued along an edge: facets {1,2,3},{2,3,4}.
pub fn two_triangles() -> SimplicialComplex {
    SimplicialComplex::from_facets(4, &[vec![1, 2, 3], vec![2, 3, 4]]).expect("valid")
}

/// Complex looked up by CLI name.
pub fn by_name(name: &str) -> Option<SimplicialComplex> {
    match name {
        "square" => Some(square()),
        "rp2" => Some(rp2()),
        "pentagon" => Some(pentagon()),
        "two-triangles" => Some(two_triangles()),
        _ => None,
    }
}
