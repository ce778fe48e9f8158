use std::collections::BTreeMap;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::pmove::{all_positions, p_move};
use crate::quad::QuadGraph;
use crate::radial::{is_radial_of_polyhedron, primal, radial};
use crate::seeds::tetrahedron;

/// One level of the closure of {cube} under the quadrangulation move: all
/// members whose underlying primal size is `size_g` (so 2 * size_g radial
/// edges), keyed and deduplicated by canonical code. The stored
/// representative is the decoded canonical graph, so member lists do not
/// depend on expansion order.
#[derive(Debug, Clone)]
pub struct ClosureLevel {
    pub size_g: usize,
    pub members: Vec<(CanonicalCode, QuadGraph)>,
    pub truncated: bool,
}

/// Reference values shipped from the literature: for each even size q the
/// total number of self-dual polyhedra of size q. Never recomputed here.
pub const REFERENCE_TOTAL_SELF_DUALS: [(usize, usize); 9] = [
    (6, 1),
    (8, 1),
    (10, 2),
    (12, 6),
    (14, 16),
    (16, 50),
    (18, 165),
    (20, 554),
    (22, 1908),
];

/// Breadth-first closure of {cube} under the move, level by level up to
/// primal size `max_q`. Every member of a level is expanded at every
/// position (each edge with both quadrilateral orientations); children are
/// deduplicated by canonical code. A `limit` caps the member count per level
/// and marks the level truncated instead of failing.
pub fn closure_with_limit(max_q: usize, limit: Option<usize>) -> Result<Vec<ClosureLevel>> {
    if max_q < 6 {
        return Err(Error::BadN { n: max_q, min: 6 });
    }
    let cube = radial(&tetrahedron())?;
    let mut level = ClosureLevel {
        size_g: 6,
        members: vec![(canonical_code(cube.graph()), cube)],
        truncated: false,
    };
    let mut out = Vec::new();
    while level.size_g + 2 <= max_q {
        let mut seen: BTreeMap<CanonicalCode, ()> = BTreeMap::new();
        for (_, member) in &level.members {
            for pos in all_positions(member) {
                let child = p_move(member, pos)?;
                seen.entry(canonical_code(child.graph())).or_insert(());
            }
        }
        let size_g = level.size_g + 2;
        let mut truncated = false;
        let mut members = Vec::with_capacity(seen.len());
        for code in seen.into_keys() {
            if limit.is_some_and(|cap| members.len() >= cap) {
                truncated = true;
                break;
            }
            let rep = QuadGraph::new(code.to_plane_graph())?;
            members.push((code, rep));
        }
        out.push(std::mem::replace(
            &mut level,
            ClosureLevel { size_g, members, truncated },
        ));
    }
    out.push(level);
    Ok(out)
}

pub fn closure(max_q: usize) -> Result<Vec<ClosureLevel>> {
    closure_with_limit(max_q, None)
}

/// One row of the reproduction table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountRow {
    pub size_g: usize,
    /// members of the closure level that are radials of self-dual polyhedra
    pub closure_self_dual: usize,
    /// shipped literature value for all self-duals of this size
    pub reference_total: usize,
}

#[derive(Debug, Clone)]
pub struct CountsTable {
    pub rows: Vec<CountRow>,
}

/// Is this closure member the radial graph of a self-dual polyhedron?
pub fn is_self_dual_radial(member: &QuadGraph) -> Result<bool> {
    if !is_radial_of_polyhedron(member)? {
        return Ok(false);
    }
    let a = primal(member, 0)?;
    let b = primal(member, 1)?;
    Ok(canonical_code(&a) == canonical_code(&b))
}

/// Counts, per level of the closure, the members that are radial graphs of
/// self-dual polyhedra, next to the shipped totals. Reference data is only
/// available for q up to 22.
pub fn table1(max_q: usize) -> Result<CountsTable> {
    if !(6..=22).contains(&max_q) {
        return Err(Error::BadN { n: max_q, min: 6 });
    }
    let reference: BTreeMap<usize, usize> = REFERENCE_TOTAL_SELF_DUALS.into_iter().collect();
    let mut rows = Vec::new();
    for level in closure(max_q)? {
        let mut count = 0;
        for (_, member) in &level.members {
            if is_self_dual_radial(member)? {
                count += 1;
            }
        }
        rows.push(CountRow {
            size_g: level.size_g,
            closure_self_dual: count,
            reference_total: reference[&level.size_g],
        });
    }
    Ok(CountsTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::quad::is_quadrangulation;
    use crate::seeds;

    #[test]
    fn level_six_is_the_cube() {
        let levels = closure(6).unwrap();
        assert_eq!(levels.len(), 1);
        assert_eq!(levels[0].size_g, 6);
        assert_eq!(levels[0].members.len(), 1);
        assert!(is_isomorphic(
            levels[0].members[0].1.graph(),
            &seeds::test_fixtures::cube()
        ));
    }

    #[test]
    fn level_eight_is_pdw10_alone() {
        let levels = closure(8).unwrap();
        let l8 = &levels[1];
        assert_eq!(l8.members.len(), 1);
        assert!(is_isomorphic(
            l8.members[0].1.graph(),
            &seeds::pseudo_double_wheel(10).unwrap()
        ));
    }

    #[test]
    fn members_stay_quadrangulations_with_matching_size() {
        for level in closure(12).unwrap() {
            for (code, member) in &level.members {
                assert!(is_quadrangulation(member.graph()));
                assert_eq!(member.graph().edge_count(), 2 * level.size_g);
                assert_eq!(&canonical_code(member.graph()), code);
            }
        }
    }

    #[test]
    fn counted_members_have_matching_primal_order() {
        for level in closure(10).unwrap() {
            for (_, member) in &level.members {
                if is_self_dual_radial(member).unwrap() {
                    let g = primal(member, 0).unwrap();
                    assert_eq!(g.vertex_count(), level.size_g / 2 + 1);
                }
            }
        }
    }

    #[test]
    fn table_up_to_twelve() {
        let t = table1(12).unwrap();
        let got: Vec<(usize, usize, usize)> = t
            .rows
            .iter()
            .map(|r| (r.size_g, r.closure_self_dual, r.reference_total))
            .collect();
        assert_eq!(got, vec![(6, 1, 1), (8, 1, 1), (10, 2, 2), (12, 5, 6)]);
    }

    #[test]
    fn closure_is_deterministic() {
        let a = closure(10).unwrap();
        let b = closure(10).unwrap();
        for (la, lb) in a.iter().zip(&b) {
            let ca: Vec<_> = la.members.iter().map(|(c, _)| c.clone()).collect();
            let cb: Vec<_> = lb.members.iter().map(|(c, _)| c.clone()).collect();
            assert_eq!(ca, cb);
        }
    }

    #[test]
    fn limit_marks_truncation() {
        let levels = closure_with_limit(10, Some(1)).unwrap();
        assert!(levels.iter().any(|l| l.truncated));
    }
}
