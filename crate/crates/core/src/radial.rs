use std::collections::BTreeMap;

use crate::connectivity::{is_2connected, is_3connected};
use crate::error::{Error, Result};
use crate::graph::PlaneGraph;
use crate::quad::{separating_4cycles, QuadGraph};

/// The radial (vertex-face) graph: vertices of g keep their identifiers,
/// face i becomes vertex p + i, and each incidence of a vertex with a face
/// becomes an edge. For a 2-connected g the result is a quadrangulation of
/// the sphere whose quadrilaterals correspond to the edges of g; part 0
/// holds g's vertices, part 1 the face vertices.
pub fn radial(g: &PlaneGraph) -> Result<QuadGraph> {
    if !is_2connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let p = g.vertex_count();
    let faces = g.faces();
    let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(p + faces.len());
    for u in 0..p {
        let rot = g
            .rotation(u)
            .iter()
            .map(|&x| p + faces.face_of_dart(u, x).expect("dart has a face"))
            .collect();
        rotations.push(rot);
    }
    // the reversed boundary walk keeps the combined rotation system genus 0
    for walk in faces.iter() {
        rotations.push(walk.iter().rev().copied().collect());
    }
    let labels: BTreeMap<usize, String> =
        g.labels().iter().map(|(&v, l)| (v, l.clone())).collect();
    let graph = PlaneGraph::from_parts(rotations, labels)?;
    let side = (0..graph.vertex_count()).map(|v| u8::from(v >= p)).collect();
    QuadGraph::with_sides(graph, side)
}

/// Extracts the part-`which` graph from a quadrangulation: one vertex per
/// part member, one edge per quadrilateral (joining its two same-part
/// vertices), embedding induced by the cyclic order of faces around each
/// vertex. For a radial graph this recovers the base graph (part 0) and its
/// dual (part 1).
pub fn primal(r: &QuadGraph, which: u8) -> Result<PlaneGraph> {
    let g = r.graph();
    let faces = g.faces();
    let members = r.part(which);
    let mut new_id = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in members.iter().enumerate() {
        new_id[v] = i;
    }
    let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(members.len());
    for &v in &members {
        let mut rot = Vec::with_capacity(g.degree(v));
        for &x in g.rotation(v) {
            let f = faces.face_of_dart(v, x).expect("dart has a face");
            let walk = faces.walk(f);
            if walk.len() != 4 {
                return Err(Error::NotQuadrangulation);
            }
            let pos = walk.iter().position(|&w| w == v).expect("v on its face");
            let opposite = walk[(pos + 2) % 4];
            rot.push(new_id[opposite]);
        }
        rotations.push(rot);
    }
    let labels = members
        .iter()
        .enumerate()
        .filter_map(|(i, &v)| g.label(v).map(|l| (i, l.to_string())))
        .collect();
    PlaneGraph::from_parts(rotations, labels)
}

/// A quadrangulation is the radial graph of a polyhedron exactly when it is
/// 3-connected and has no separating 4-cycles.
pub fn is_radial_of_polyhedron(r: &QuadGraph) -> Result<bool> {
    Ok(is_3connected(r.graph())? && separating_4cycles(r.graph()).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::dual::dual;
    use crate::seeds;

    #[test]
    fn radial_of_tetrahedron_is_the_cube() {
        let r = radial(&seeds::tetrahedron()).unwrap();
        assert!(is_isomorphic(r.graph(), &seeds::test_fixtures::cube()));
    }

    #[test]
    fn radial_sizes_double_for_self_duals() {
        let g = seeds::h5_seed();
        let r = radial(&g).unwrap();
        assert_eq!(r.graph().vertex_count(), 2 * g.vertex_count());
        assert_eq!(r.graph().edge_count(), 2 * g.edge_count());
    }

    #[test]
    fn primal_round_trips() {
        for g in [
            seeds::tetrahedron(),
            seeds::wheel(6).unwrap(),
            seeds::h5_seed(),
        ] {
            let r = radial(&g).unwrap();
            let back = primal(&r, 0).unwrap();
            assert!(is_isomorphic(&back, &g));
            let co = primal(&r, 1).unwrap();
            assert!(is_isomorphic(&co, &dual(&g).unwrap()));
        }
    }

    #[test]
    fn cube_parts_both_give_the_tetrahedron() {
        let q = QuadGraph::new(seeds::test_fixtures::cube()).unwrap();
        assert!(is_isomorphic(&primal(&q, 0).unwrap(), &seeds::tetrahedron()));
        assert!(is_isomorphic(&primal(&q, 1).unwrap(), &seeds::tetrahedron()));
    }

    #[test]
    fn pdw12_parts_are_dual_to_each_other() {
        let pdw = QuadGraph::new(seeds::pseudo_double_wheel(12).unwrap()).unwrap();
        let a = primal(&pdw, 0).unwrap();
        let b = primal(&pdw, 1).unwrap();
        assert!(is_isomorphic(&a, &dual(&b).unwrap()));
    }

    #[test]
    fn radial_detects_polyhedral_bases() {
        let q = QuadGraph::new(seeds::test_fixtures::cube()).unwrap();
        assert!(is_radial_of_polyhedron(&q).unwrap());
        let k24 = QuadGraph::new(seeds::test_fixtures::k24_quadrangulation()).unwrap();
        assert!(!is_radial_of_polyhedron(&k24).unwrap());
    }

    #[test]
    fn k24_primal_extraction_hits_a_multi_edge() {
        let k24 = QuadGraph::new(seeds::test_fixtures::k24_quadrangulation()).unwrap();
        assert!(matches!(
            primal(&k24, 0).unwrap_err(),
            Error::DuplicateEdge { .. }
        ));
    }

    #[test]
    fn radial_needs_two_connected_input() {
        let path = PlaneGraph::build(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        assert_eq!(radial(&path).unwrap_err(), Error::NotTwoConnected);
    }
}
