use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::PlaneGraph;
use crate::radial::radial;

/// The tetrahedron with faces (0,1,2), (0,2,3), (0,3,1), (1,3,2).
pub fn tetrahedron() -> PlaneGraph {
    PlaneGraph::build(vec![
        vec![1, 3, 2],
        vec![0, 2, 3],
        vec![1, 0, 3],
        vec![2, 0, 1],
    ])
    .expect("tetrahedron embedding is valid")
}

/// The wheel graph W_p on p vertices: hub 0 joined to the rim cycle
/// 1, ..., p-1. wheel(4) is the tetrahedron, wheel(5) the square pyramid.
pub fn wheel(p: usize) -> Result<PlaneGraph> {
    if p < 4 {
        return Err(Error::TooSmall { p });
    }
    let rim = p - 1;
    let mut rotations = vec![Vec::new(); p];
    rotations[0] = (1..p).collect();
    for i in 1..p {
        let next = if i == rim { 1 } else { i + 1 };
        let prev = if i == 1 { rim } else { i - 1 };
        rotations[i] = vec![next, 0, prev];
    }
    PlaneGraph::build(rotations)
}

/// The pseudo double wheel PDW_{2p}, built as the radial graph of the wheel
/// W_p. PDW_8 is the cube; the dual of PDW_{2p} is the (p-1)-gonal antiprism.
pub fn pseudo_double_wheel(two_p: usize) -> Result<PlaneGraph> {
    if two_p < 8 || two_p % 2 != 0 {
        return Err(Error::BadArity { got: two_p });
    }
    let w = wheel(two_p / 2)?;
    Ok(radial(&w)?.into_graph())
}

/// The unique minimal polyhedron with a vertex of degree i and an i-gonal
/// face for each i in 3..=5, on 7 vertices, labeled v1..v7. Its faces are
/// the triangles (v1,v2,v4), (v1,v4,v6), (v1,v6,v5), (v1,v5,v7), (v3,v5,v7),
/// the quadrilateral (v1,v7,v3,v2) and the pentagon (v2,v4,v6,v5,v3); it is
/// self-dual, and the v1v5 diagonal pattern drives the H_n construction.
pub fn h5_seed() -> PlaneGraph {
    let rotations = vec![
        vec![1, 6, 4, 5, 3], // v1
        vec![0, 3, 2],       // v2
        vec![1, 4, 6],       // v3
        vec![1, 0, 5],       // v4
        vec![5, 0, 6, 2],    // v5
        vec![3, 0, 4],       // v6
        vec![4, 0, 2],       // v7
    ];
    let labels: BTreeMap<usize, String> =
        (0..7).map(|i| (i, format!("v{}", i + 1))).collect();
    PlaneGraph::build_labeled(rotations, labels).expect("H5 embedding is valid")
}

/// Reference embeddings used by the test suites.
#[doc(hidden)]
pub mod test_fixtures {
    use super::*;

    /// Cube: outer square 0,1,2,3 and inner square 4,5,6,7, spokes i-(i+4).
    pub fn cube() -> PlaneGraph {
        PlaneGraph::build(vec![
            vec![1, 4, 3],
            vec![2, 5, 0],
            vec![3, 6, 1],
            vec![2, 0, 7],
            vec![5, 7, 0],
            vec![6, 4, 1],
            vec![2, 7, 5],
            vec![6, 3, 4],
        ])
        .expect("cube embedding is valid")
    }

    /// Octahedron: poles 0 and 5, equator cycle 1,2,3,4.
    pub fn octahedron() -> PlaneGraph {
        PlaneGraph::build(vec![
            vec![1, 2, 3, 4],
            vec![5, 2, 0, 4],
            vec![5, 3, 0, 1],
            vec![0, 2, 5, 4],
            vec![1, 0, 3, 5],
            vec![1, 4, 3, 2],
        ])
        .expect("octahedron embedding is valid")
    }

    /// K(2,4) embedded as a quadrangulation: poles 0, 1 and pages 2..=5.
    /// 2-connected but not 3-connected; has two separating 4-cycles.
    pub fn k24_quadrangulation() -> PlaneGraph {
        PlaneGraph::build(vec![
            vec![2, 5, 4, 3],
            vec![2, 3, 4, 5],
            vec![0, 1],
            vec![0, 1],
            vec![0, 1],
            vec![0, 1],
        ])
        .expect("K(2,4) embedding is valid")
    }

    /// The n-gonal antiprism: top cycle 0..n, bottom cycle n..2n.
    pub fn antiprism(n: usize) -> PlaneGraph {
        assert!(n >= 3);
        let mut rotations = Vec::with_capacity(2 * n);
        for i in 0..n {
            let prev = (i + n - 1) % n;
            let next = (i + 1) % n;
            rotations.push(vec![prev, n + i, n + next, next]);
        }
        for j in 0..n {
            let prev = (j + n - 1) % n;
            let next = (j + 1) % n;
            rotations.push(vec![n + next, j, prev, n + prev]);
        }
        PlaneGraph::build(rotations).expect("antiprism embedding is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::connectivity::is_3connected;
    use crate::dual::dual;
    use crate::verify::{is_self_dual, satisfies_sn};

    #[test]
    fn tetrahedron_is_self_dual_and_minimal() {
        let t = tetrahedron();
        assert_eq!(t.degree_sequence(), vec![3, 3, 3, 3]);
        assert!(is_isomorphic(&t, &dual(&t).unwrap()));
        assert_eq!(crate::algorithms::minimal_order(3).unwrap(), 4);
    }

    #[test]
    fn wheel_shapes() {
        assert!(is_isomorphic(&wheel(4).unwrap(), &tetrahedron()));
        assert_eq!(wheel(5).unwrap().degree_sequence(), vec![4, 3, 3, 3, 3]);
        assert_eq!(
            wheel(7).unwrap().degree_sequence(),
            vec![6, 3, 3, 3, 3, 3, 3]
        );
        assert_eq!(wheel(3).unwrap_err(), Error::TooSmall { p: 3 });
    }

    #[test]
    fn pdw8_is_the_cube() {
        let pdw = pseudo_double_wheel(8).unwrap();
        assert!(is_isomorphic(&pdw, &test_fixtures::cube()));
        assert_eq!(pseudo_double_wheel(7).unwrap_err(), Error::BadArity { got: 7 });
        assert_eq!(pseudo_double_wheel(6).unwrap_err(), Error::BadArity { got: 6 });
    }

    #[test]
    fn pdw10_is_radial_of_the_square_pyramid() {
        let pdw = pseudo_double_wheel(10).unwrap();
        let r = radial(&wheel(5).unwrap()).unwrap();
        assert!(is_isomorphic(&pdw, r.graph()));
        let (a, b) = crate::quad::bipartition(&pdw).unwrap();
        assert_eq!((a.len(), b.len()), (5, 5));
    }

    #[test]
    fn pdw12_dual_is_the_pentagonal_antiprism() {
        let pdw = pseudo_double_wheel(12).unwrap();
        let anti = test_fixtures::antiprism(5);
        assert!(is_isomorphic(&dual(&pdw).unwrap(), &anti));
    }

    #[test]
    fn h5_seed_matches_its_description() {
        let h5 = h5_seed();
        assert_eq!(h5.vertex_count(), 7);
        assert_eq!(h5.edge_count(), 12);
        assert_eq!(h5.degree_sequence(), vec![5, 4, 3, 3, 3, 3, 3]);
        assert_eq!(h5.face_vector(), h5.degree_sequence());
        assert!(is_3connected(&h5).unwrap());
        assert!(satisfies_sn(&h5, 5).unwrap());
        assert!(is_self_dual(&h5).unwrap());
        // order matches (n^2 - 5n + 14)/2 at n = 5
        assert_eq!(h5.vertex_count(), crate::algorithms::minimal_order(5).unwrap());
    }

    #[test]
    fn h5_faces_are_the_stated_walks() {
        use crate::graph::canonical_cycle;
        let h5 = h5_seed();
        let got = h5.faces().canonical_walks();
        let mut want: Vec<Vec<usize>> = [
            vec![0, 1, 3],       // v1 v2 v4
            vec![0, 3, 5],       // v1 v4 v6
            vec![0, 5, 4],       // v1 v6 v5
            vec![0, 4, 6],       // v1 v5 v7
            vec![2, 4, 6],       // v3 v5 v7
            vec![0, 6, 2, 1],    // v1 v7 v3 v2
            vec![1, 3, 5, 4, 2], // v2 v4 v6 v5 v3
        ]
        .iter()
        .map(|w| canonical_cycle(w))
        .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn h5_labels_name_the_pinned_vertices() {
        let h5 = h5_seed();
        assert_eq!(h5.label(0), Some("v1"));
        assert_eq!(h5.vertex_by_label("v5"), Some(4));
    }
}
