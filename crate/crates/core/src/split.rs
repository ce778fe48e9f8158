use crate::error::{Error, Result};
use crate::graph::PlaneGraph;

/// An ordered vertex triple (u1, u2, u3) marking where edge splitting
/// applies: edges u1u2 and u2u3 must lie consecutively on a common face, in
/// either traversal direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplitTriple {
    pub u1: usize,
    pub u2: usize,
    pub u3: usize,
}

impl SplitTriple {
    pub fn new(u1: usize, u2: usize, u3: usize) -> SplitTriple {
        SplitTriple { u1, u2, u3 }
    }
}

impl std::fmt::Display for SplitTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.u1, self.u2, self.u3)
    }
}

fn invalid(t: SplitTriple, reason: &'static str) -> Error {
    Error::InvalidTriple { u1: t.u1, u2: t.u2, u3: t.u3, reason }
}

/// Where the triple sits on its face: `Forward` when the face walk contains
/// the darts (u1,u2),(u2,u3), `Reverse` when it contains (u3,u2),(u2,u1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TripleDir {
    Forward,
    Reverse,
}

/// Validates the triple and reports its direction on the common face.
pub(crate) fn triple_direction(g: &PlaneGraph, t: SplitTriple) -> Result<TripleDir> {
    let SplitTriple { u1, u2, u3 } = t;
    let p = g.vertex_count();
    for v in [u1, u2, u3] {
        if v >= p {
            return Err(Error::VertexOutOfRange { v, p });
        }
    }
    if u1 == u2 || u2 == u3 || u1 == u3 {
        return Err(invalid(t, "vertices not distinct"));
    }
    if !g.has_edge(u1, u2) || !g.has_edge(u2, u3) {
        return Err(invalid(t, "edges missing"));
    }
    if g.rot_next(u2, u1) == u3 {
        Ok(TripleDir::Forward)
    } else if g.rot_next(u2, u3) == u1 {
        Ok(TripleDir::Reverse)
    } else {
        Err(invalid(t, "not consecutive on a face"))
    }
}

/// The face walk of the triple (starting at u1), and the walk of the face
/// across edge u2u3 (the one with u2, u3 but not u1).
pub(crate) fn triple_faces(
    g: &PlaneGraph,
    t: SplitTriple,
    dir: TripleDir,
) -> (Vec<usize>, Vec<usize>) {
    match dir {
        TripleDir::Forward => (g.face_walk(t.u1, t.u2), g.face_walk(t.u3, t.u2)),
        TripleDir::Reverse => (g.face_walk(t.u3, t.u2), g.face_walk(t.u2, t.u3)),
    }
}

/// Edge splitting at (u1, u2, u3): the edge u2u3 is deleted and a new vertex
/// u4 is joined to u1, u2, u3. A new triangular face (u1, u2, u4) appears,
/// the triple's face keeps its length with u2 swapped for u4, and the face
/// across u2u3 grows by one. deg(u1) rises by one, u4 has degree 3, all
/// other degrees are unchanged; p, q, f grow by 1, 2, 1.
///
/// Returns the new graph and the identifier of u4 (the old vertex count).
pub fn edge_split(g: &PlaneGraph, t: SplitTriple) -> Result<(PlaneGraph, usize)> {
    let dir = triple_direction(g, t)?;
    let SplitTriple { u1, u2, u3 } = t;
    let (f_walk, x_walk) = triple_faces(g, t, dir);
    if x_walk.contains(&u1) {
        return Err(Error::AcrossFaceContainsU1 { u1, u2, u3 });
    }

    let u4 = g.vertex_count();
    let mut rotations = g.rotations().to_vec();
    let replace = |rot: &mut Vec<usize>, from: usize, to: usize| {
        let i = rot.iter().position(|&x| x == from).expect("neighbour present");
        rot[i] = to;
    };
    replace(&mut rotations[u2], u3, u4);
    replace(&mut rotations[u3], u2, u4);
    let i2 = rotations[u1].iter().position(|&x| x == u2).expect("u2 adjacent to u1");
    match dir {
        TripleDir::Forward => {
            rotations[u1].insert(i2, u4);
            rotations.push(vec![u2, u1, u3]);
        }
        TripleDir::Reverse => {
            rotations[u1].insert(i2 + 1, u4);
            rotations.push(vec![u1, u2, u3]);
        }
    }
    let out = PlaneGraph::assemble(rotations, g.labels().clone());
    debug_assert!(split_postconditions_hold(g, &out, t, &f_walk, &x_walk, u4));
    Ok((out, u4))
}

/// The three faces the split is supposed to leave around u4: the triangle
/// (u1, u2, u4), the triple's face with u2 swapped for u4, and the across
/// face with u4 inserted between u2 and u3.
pub(crate) fn expected_new_walks(
    t: SplitTriple,
    f_walk: &[usize],
    x_walk: &[usize],
    u4: usize,
) -> [Vec<usize>; 3] {
    let f_new: Vec<usize> = f_walk
        .iter()
        .map(|&v| if v == t.u2 { u4 } else { v })
        .collect();
    let mut x_new = Vec::with_capacity(x_walk.len() + 1);
    for i in 0..x_walk.len() {
        x_new.push(x_walk[i]);
        let next = x_walk[(i + 1) % x_walk.len()];
        let pair = (x_walk[i], next);
        if pair == (t.u2, t.u3) || pair == (t.u3, t.u2) {
            x_new.push(u4);
        }
    }
    [vec![t.u1, t.u2, u4], f_new, x_new]
}

/// Per-call postcondition, checked in test builds: p, q, deg(u1) deltas,
/// deg(u4) = 3, and the face-multiset law. The law is checked through its
/// local form -- every face the surgery can change passes through u4, and
/// u4 has exactly three corners, so faces(after) = faces(before) - {F, X} +
/// {triangle, F', X'} holds exactly when the three walks around u4 are the
/// expected ones. `tests::face_multiset_law_matches_local_form` pins the
/// global statement against this reduction over whole construction runs.
fn split_postconditions_hold(
    before: &PlaneGraph,
    after: &PlaneGraph,
    t: SplitTriple,
    f_walk: &[usize],
    x_walk: &[usize],
    u4: usize,
) -> bool {
    use crate::graph::canonical_cycle;
    if after.vertex_count() != before.vertex_count() + 1
        || after.edge_count() != before.edge_count() + 2
        || after.degree(t.u1) != before.degree(t.u1) + 1
        || after.degree(u4) != 3
    {
        return false;
    }
    let mut got: Vec<Vec<usize>> = after
        .rotation(u4)
        .iter()
        .map(|&x| canonical_cycle(&after.face_walk(u4, x)))
        .collect();
    got.sort();
    let mut want: Vec<Vec<usize>> = expected_new_walks(t, f_walk, x_walk, u4)
        .iter()
        .map(|w| canonical_cycle(w))
        .collect();
    want.sort();
    got == want
}

/// The face-multiset law in its literal global form; used by tests to
/// validate the local per-call check above.
#[cfg(test)]
pub(crate) fn face_multiset_law_holds(
    before: &PlaneGraph,
    after: &PlaneGraph,
    t: SplitTriple,
    u4: usize,
) -> bool {
    use crate::graph::canonical_cycle;
    let dir = match triple_direction(before, t) {
        Ok(dir) => dir,
        Err(_) => return false,
    };
    let (f_walk, x_walk) = triple_faces(before, t, dir);
    let mut expected = before.faces().canonical_walks();
    for gone in [canonical_cycle(&f_walk), canonical_cycle(&x_walk)] {
        let i = match expected.iter().position(|w| *w == gone) {
            Some(i) => i,
            None => return false,
        };
        expected.remove(i);
    }
    for walk in expected_new_walks(t, &f_walk, &x_walk, u4) {
        expected.push(canonical_cycle(&walk));
    }
    expected.sort();
    expected == after.faces().canonical_walks()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::connectivity::is_3connected;
    use crate::graph::canonical_cycle;
    use crate::seeds;

    #[test]
    fn splitting_the_tetrahedron_gives_the_square_pyramid() {
        let t = seeds::tetrahedron();
        let (g, u4) = edge_split(&t, SplitTriple::new(0, 1, 2)).unwrap();
        assert_eq!(u4, 4);
        assert_eq!(g.degree_sequence(), vec![4, 3, 3, 3, 3]);
        assert!(is_isomorphic(&g, &seeds::wheel(5).unwrap()));
        // the grown face is the quadrilateral (1,3,2,4)
        let quads: Vec<_> = g.faces().iter().filter(|w| w.len() == 4).cloned().collect();
        assert_eq!(quads.len(), 1);
        assert_eq!(canonical_cycle(&quads[0]), canonical_cycle(&[1, 3, 2, 4]));
    }

    #[test]
    fn missing_edge_is_an_invalid_triple() {
        let (pyramid, _) = edge_split(&seeds::tetrahedron(), SplitTriple::new(0, 1, 2)).unwrap();
        // rim is (1,3,2,4): edge 4-3 is absent
        assert!(matches!(
            edge_split(&pyramid, SplitTriple::new(1, 4, 3)).unwrap_err(),
            Error::InvalidTriple { .. }
        ));
    }

    #[test]
    fn non_consecutive_triple_is_rejected() {
        // in the tetrahedron every pair of edges at a vertex is consecutive
        // on some face, so use the square pyramid's apex
        let (pyramid, _) = edge_split(&seeds::tetrahedron(), SplitTriple::new(0, 1, 2)).unwrap();
        // apex 0 is adjacent to all of 1, 2, 3, 4; rim (1,3,2,4): 1 and 2 are
        // not rotation-adjacent around 0
        assert!(matches!(
            edge_split(&pyramid, SplitTriple::new(1, 0, 2)).unwrap_err(),
            Error::InvalidTriple { .. }
        ));
    }

    #[test]
    fn split_bookkeeping_and_3connectivity_are_preserved() {
        let mut g = seeds::h5_seed();
        for t in [
            SplitTriple::new(0, 3, 5),
            SplitTriple::new(4, 0, 6),
            SplitTriple::new(5, 0, 4),
        ] {
            let (p, q, f) = (g.vertex_count(), g.edge_count(), g.faces().len());
            let (next, _) = edge_split(&g, t).unwrap();
            assert_eq!(next.vertex_count(), p + 1);
            assert_eq!(next.edge_count(), q + 2);
            assert_eq!(next.faces().len(), f + 1);
            assert!(is_3connected(&next).unwrap());
            g = next;
        }
    }

    #[test]
    fn face_multiset_law_matches_local_form() {
        // the literal global law over whole construction runs, pinning the
        // per-call local reduction
        let tuple = crate::algorithms::DegreeTuple::new(vec![6, 4, 5]).unwrap();
        let (_, splits) = crate::algorithms::algorithm2_splits(&tuple).unwrap();
        assert!(!splits.is_empty());
        for (g, t) in splits {
            let (out, u4) = edge_split(&g, t).unwrap();
            assert!(face_multiset_law_holds(&g, &out, t, u4));
        }
        let mut g = seeds::h5_seed();
        for t in [SplitTriple::new(0, 3, 5), SplitTriple::new(4, 0, 6)] {
            let (out, u4) = edge_split(&g, t).unwrap();
            assert!(face_multiset_law_holds(&g, &out, t, u4));
            g = out;
        }
    }

    #[test]
    fn both_traversal_directions_are_accepted() {
        let h5 = seeds::h5_seed();
        // (v5, v1, v7) = (4, 0, 6) sits on the triangle (v1,v5,v7) in reverse
        assert_eq!(triple_direction(&h5, SplitTriple::new(4, 0, 6)).unwrap(), TripleDir::Reverse);
        // (v1, v4, v6) = (0, 3, 5) runs forward on (v1,v4,v6)
        assert_eq!(triple_direction(&h5, SplitTriple::new(0, 3, 5)).unwrap(), TripleDir::Forward);
    }
}
