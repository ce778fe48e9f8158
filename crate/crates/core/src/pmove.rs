use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::graph::PlaneGraph;
use crate::quad::QuadGraph;
use crate::radial::radial;
use crate::split::{edge_split, triple_direction, triple_faces, SplitTriple};

/// A place to apply the quadrangulation transformation: an edge (b, B) with
/// b on the primal side and B on the dual side, plus the face index of the
/// incident quadrilateral that plays the role of quad-1. Quad-1 supplies the
/// roles a and C (its other primal and dual vertices), the opposite
/// quadrilateral supplies c and A.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PPosition {
    pub b: usize,
    pub big_b: usize,
    pub quad1: usize,
}

/// The role vertices of a position, read off the two quadrilaterals.
#[derive(Debug, Clone, Copy)]
struct Roles {
    a: usize,
    c: usize,
    big_a: usize,
    big_c: usize,
    /// quad-1 contains the dart (b, B) rather than (B, b)
    forward: bool,
}

fn read_roles(r: &QuadGraph, pos: PPosition) -> Result<Roles> {
    let g = r.graph();
    let p = g.vertex_count();
    if pos.b >= p || pos.big_b >= p {
        return Err(Error::InvalidPosition("vertex out of range"));
    }
    if r.side(pos.b) != 0 || r.side(pos.big_b) != 1 {
        return Err(Error::InvalidPosition("edge must run primal -> dual"));
    }
    if !g.has_edge(pos.b, pos.big_b) {
        return Err(Error::InvalidPosition("edge missing"));
    }
    let faces = g.faces();
    let f_fwd = faces.face_of_dart(pos.b, pos.big_b).expect("dart has a face");
    let f_rev = faces.face_of_dart(pos.big_b, pos.b).expect("dart has a face");
    if f_fwd == f_rev {
        return Err(Error::InvalidPosition("edge does not separate two faces"));
    }
    let (forward, quad2) = if pos.quad1 == f_fwd {
        (true, f_rev)
    } else if pos.quad1 == f_rev {
        (false, f_fwd)
    } else {
        return Err(Error::InvalidPosition("quad1 is not a face of the edge"));
    };
    let normalize = |idx: usize| -> Vec<usize> {
        let walk = faces.walk(idx);
        let s = walk.iter().position(|&v| v == pos.b).expect("b on its quad");
        (0..4).map(|i| walk[(s + i) % 4]).collect()
    };
    let w1 = normalize(pos.quad1);
    let w2 = normalize(quad2);
    // with the walk started at b, the dual neighbours sit at odd offsets
    let (a, c) = (w1[2], w2[2]);
    let big_c = if forward { w1[3] } else { w1[1] };
    let big_a = if forward { w2[1] } else { w2[3] };
    if a == c || big_a == big_c {
        return Err(Error::InvalidPosition("quads share more than the edge"));
    }
    Ok(Roles { a, c, big_a, big_c, forward })
}

/// The transformation on quadrangulations that mirrors simultaneous edge
/// splitting on the primal graph and its dual: the edge b-B is deleted, a
/// primal vertex d and a dual vertex D are added, with edges d-B, d-A, d-D,
/// a-D, b-D. The four local faces become (a,C,b,D), (a,B,d,D), (b,A,d,D),
/// (d,B,c,A). Degrees of a and A rise by one, d and D have degree 3, and
/// the output is again a quadrangulation with its bipartition extended.
pub fn p_move(r: &QuadGraph, pos: PPosition) -> Result<QuadGraph> {
    let roles = read_roles(r, pos)?;
    let g = r.graph();
    let (b, big_b) = (pos.b, pos.big_b);
    let Roles { a, c, big_a, big_c, forward } = roles;

    let d = g.vertex_count();
    let big_d = d + 1;
    let mut rotations = g.rotations().to_vec();
    let replace = |rot: &mut Vec<usize>, from: usize, to: usize| {
        let i = rot.iter().position(|&x| x == from).expect("neighbour present");
        rot[i] = to;
    };
    // b swaps B for D, B swaps b for d; a picks up D in its B-C corner and
    // A picks up d in its b-c corner
    replace(&mut rotations[b], big_b, big_d);
    replace(&mut rotations[big_b], b, d);
    insert_between(&mut rotations[a], big_b, big_c, big_d)?;
    insert_between(&mut rotations[big_a], b, c, d)?;
    if forward {
        rotations.push(vec![big_d, big_b, big_a]); // d
        rotations.push(vec![b, a, d]); // D
    } else {
        rotations.push(vec![big_d, big_a, big_b]); // d
        rotations.push(vec![a, b, d]); // D
    }
    let graph = PlaneGraph::assemble(rotations, g.labels().clone());
    let mut side = r.sides().to_vec();
    side.push(0);
    side.push(1);
    debug_assert_eq!(graph.vertex_count(), g.vertex_count() + 2);
    debug_assert_eq!(graph.edge_count(), g.edge_count() + 4);
    debug_assert_eq!(graph.degree(a), g.degree(a) + 1);
    debug_assert_eq!(graph.degree(big_a), g.degree(big_a) + 1);
    let out = if cfg!(debug_assertions) {
        let out = QuadGraph::with_sides(graph, side)?;
        debug_assert!(local_faces_hold(&out, b, big_b, a, c, big_a, big_c, d, big_d));
        out
    } else {
        QuadGraph::with_sides_unchecked(graph, side)
    };
    Ok(out)
}

fn insert_between(rot: &mut Vec<usize>, x: usize, y: usize, v: usize) -> Result<()> {
    let i = rot
        .iter()
        .position(|&n| n == x)
        .ok_or(Error::InvalidPosition("expected neighbour missing"))?;
    let n = rot.len();
    if rot[(i + 1) % n] == y {
        rot.insert(i + 1, v);
        Ok(())
    } else if rot[(i + n - 1) % n] == y {
        rot.insert(i, v);
        Ok(())
    } else {
        Err(Error::InvalidPosition("corner vertices not adjacent in rotation"))
    }
}

fn local_faces_hold(
    out: &QuadGraph,
    b: usize,
    big_b: usize,
    a: usize,
    c: usize,
    big_a: usize,
    big_c: usize,
    d: usize,
    big_d: usize,
) -> bool {
    use crate::graph::canonical_cycle;
    let walks = out.graph().faces().canonical_walks();
    [
        [a, big_c, b, big_d],
        [a, big_b, d, big_d],
        [b, big_a, d, big_d],
        [d, big_b, c, big_a],
    ]
    .iter()
    .all(|quad| walks.contains(&canonical_cycle(quad)))
}

/// Every position of a quadrangulation: each primal -> dual edge combined
/// with each of its two incident quadrilaterals.
pub fn all_positions(r: &QuadGraph) -> Vec<PPosition> {
    let g = r.graph();
    let faces = g.faces();
    let mut out = Vec::with_capacity(4 * g.edge_count() / 2);
    for (u, v) in g.edges() {
        let (b, big_b) = if r.side(u) == 0 { (u, v) } else { (v, u) };
        for quad1 in [
            faces.face_of_dart(b, big_b).expect("dart has a face"),
            faces.face_of_dart(big_b, b).expect("dart has a face"),
        ] {
            out.push(PPosition { b, big_b, quad1 });
        }
    }
    out
}

/// The radial position corresponding to a primal split triple: b is u2, B is
/// the face on which the triple lies, and quad-1 is the radial quadrilateral
/// of the edge u1u2.
pub fn corresponding_position(g: &PlaneGraph, t: SplitTriple) -> Result<PPosition> {
    let dir = triple_direction(g, t)?;
    let (f_walk, _) = triple_faces(g, t, dir);
    let faces = g.faces();
    let start = f_walk[0];
    let f_idx = faces
        .face_of_dart(start, f_walk[1])
        .expect("triple face exists");
    let p = g.vertex_count();
    let r = radial(g)?;
    let rf = r.graph().faces();
    let quad1 = (0..rf.len())
        .find(|&i| {
            let w = rf.walk(i);
            w.contains(&t.u1) && w.contains(&t.u2)
        })
        .ok_or(Error::InvalidPosition("no radial quad for edge u1u2"))?;
    Ok(PPosition { b: t.u2, big_b: p + f_idx, quad1 })
}

/// The bridge between the primal and radial formulations: splitting an edge
/// in g and then taking the radial graph agrees with applying the
/// quadrangulation move at the corresponding position of radial(g).
pub fn p_equiv_check(g: &PlaneGraph, t: SplitTriple) -> Result<bool> {
    let pos = corresponding_position(g, t)?;
    let (split, _) = edge_split(g, t)?;
    let lhs = radial(&split)?;
    let rhs = p_move(&radial(g)?, pos)?;
    Ok(is_isomorphic(lhs.graph(), rhs.graph()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::is_quadrangulation;
    use crate::radial::primal;
    use crate::seeds;

    fn cube_quad() -> QuadGraph {
        radial(&seeds::tetrahedron()).unwrap()
    }

    #[test]
    fn every_cube_position_gives_pdw10() {
        let cube = cube_quad();
        let pdw10 = seeds::pseudo_double_wheel(10).unwrap();
        let positions = all_positions(&cube);
        assert_eq!(positions.len(), 24);
        for pos in positions {
            let out = p_move(&cube, pos).unwrap();
            assert_eq!(out.graph().vertex_count(), 10);
            assert!(is_quadrangulation(out.graph()));
            assert!(is_isomorphic(out.graph(), &pdw10));
            let base = primal(&out, 0).unwrap();
            assert!(is_isomorphic(&base, &seeds::wheel(5).unwrap()));
        }
    }

    #[test]
    fn p_move_preserves_bipartition_and_quadrangulation() {
        let cube = cube_quad();
        let pos = all_positions(&cube)[0];
        let out = p_move(&cube, pos).unwrap();
        for (u, v) in out.graph().edges() {
            assert_ne!(out.side(u), out.side(v));
        }
        assert!(is_quadrangulation(out.graph()));
    }

    #[test]
    fn invalid_positions_are_rejected() {
        let cube = cube_quad();
        // dual -> primal orientation is refused
        assert!(matches!(
            p_move(&cube, PPosition { b: 4, big_b: 0, quad1: 0 }).unwrap_err(),
            Error::InvalidPosition(_)
        ));
        // a face not on the edge is refused
        let good = all_positions(&cube)[0];
        let faces = cube.graph().faces();
        let bad_face = (0..faces.len())
            .find(|&i| {
                !faces.walk(i).contains(&good.b) || !faces.walk(i).contains(&good.big_b)
            })
            .unwrap();
        assert!(matches!(
            p_move(&cube, PPosition { quad1: bad_face, ..good }).unwrap_err(),
            Error::InvalidPosition(_)
        ));
    }

    #[test]
    fn equivalence_bridge_holds_on_seeds() {
        assert!(p_equiv_check(&seeds::tetrahedron(), SplitTriple::new(0, 1, 2)).unwrap());
        // (v1, v4, v6) on the H5 seed
        assert!(p_equiv_check(&seeds::h5_seed(), SplitTriple::new(0, 3, 5)).unwrap());
        assert!(p_equiv_check(&seeds::h5_seed(), SplitTriple::new(4, 0, 6)).unwrap());
    }
}
