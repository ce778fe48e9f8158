use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::PlaneGraph;

/// The dual plane graph: one vertex per face, adjacent when the faces share
/// an edge, with rotations induced by the face walks. Rejects inputs whose
/// dual would need a loop or multi-edge (faces sharing more than one edge),
/// which signals the input was not 3-connected.
pub fn dual(g: &PlaneGraph) -> Result<PlaneGraph> {
    let faces = g.faces();
    let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(faces.len());
    for (idx, walk) in faces.iter().enumerate() {
        let n = walk.len();
        let mut rot = Vec::with_capacity(n);
        for i in 0..n {
            let (u, v) = (walk[i], walk[(i + 1) % n]);
            let other = faces.face_of_dart(v, u).expect("reverse dart has a face");
            if other == idx {
                return Err(Error::MultiEdgeInDual { f1: idx, f2: other });
            }
            rot.push(other);
        }
        for i in 0..n {
            for j in 0..i {
                if rot[i] == rot[j] {
                    return Err(Error::MultiEdgeInDual { f1: idx, f2: rot[i] });
                }
            }
        }
        rotations.push(rot);
    }
    PlaneGraph::from_parts(rotations, BTreeMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::seeds;

    #[test]
    fn dual_of_cube_is_octahedron() {
        let cube = seeds::test_fixtures::cube();
        let octa = seeds::test_fixtures::octahedron();
        assert!(is_isomorphic(&dual(&cube).unwrap(), &octa));
    }

    #[test]
    fn dual_is_an_involution_on_polyhedra() {
        for g in [
            seeds::tetrahedron(),
            seeds::wheel(6).unwrap(),
            seeds::h5_seed(),
            seeds::test_fixtures::cube(),
        ] {
            let dd = dual(&dual(&g).unwrap()).unwrap();
            assert!(is_isomorphic(&dd, &g));
        }
    }

    #[test]
    fn dual_degrees_match_face_vector() {
        for g in [seeds::h5_seed(), seeds::wheel(7).unwrap()] {
            assert_eq!(dual(&g).unwrap().degree_sequence(), g.face_vector());
        }
    }

    #[test]
    fn dual_of_two_connected_non_three_connected_input_is_rejected() {
        // 4-cycle: the two faces share every edge pairwise -> multi-edge
        let c4 = PlaneGraph::build(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap();
        assert!(matches!(dual(&c4).unwrap_err(), Error::MultiEdgeInDual { .. }));
    }
}
