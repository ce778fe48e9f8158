use crate::canon::canonical_code;
use crate::connectivity::is_3connected;
use crate::dual::dual;
use crate::error::{Error, Result};
use crate::graph::PlaneGraph;

/// Polyhedral = simple plane graph on at least 4 vertices that is
/// 3-connected. Simplicity and embedding validity are already guaranteed by
/// construction.
pub fn is_polyhedral(g: &PlaneGraph) -> bool {
    g.vertex_count() >= 4 && is_3connected(g).unwrap_or(false)
}

/// Property S_n: for every 3 <= i <= n the graph has a vertex of degree i
/// and a face of length i.
pub fn satisfies_sn(g: &PlaneGraph, n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::BadN { n, min: 3 });
    }
    if !is_polyhedral(g) {
        return Err(Error::NotPolyhedral);
    }
    Ok(covers(&g.degree_sequence(), n) && covers(&g.face_vector(), n))
}

fn covers(sorted_desc: &[usize], n: usize) -> bool {
    (3..=n).all(|i| sorted_desc.contains(&i))
}

/// Self-duality via canonical codes: the graph and its dual have equal
/// codes. Implies q = 2p - 2.
pub fn is_self_dual(g: &PlaneGraph) -> Result<bool> {
    if !is_polyhedral(g) {
        return Err(Error::NotPolyhedral);
    }
    let d = dual(g)?;
    Ok(canonical_code(g) == canonical_code(&d))
}

/// Outcome of one conditional bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundCheck {
    /// The coverage hypothesis is absent; the bound does not apply.
    NotApplicable,
    Holds { lhs: i64, rhs: i64, equality: bool },
    Violated { lhs: i64, rhs: i64 },
}

impl BoundCheck {
    pub fn passed(&self) -> bool {
        !matches!(self, BoundCheck::Violated { .. })
    }

    fn le(lhs: i64, rhs: i64) -> BoundCheck {
        if lhs <= rhs {
            BoundCheck::Holds { lhs, rhs, equality: lhs == rhs }
        } else {
            BoundCheck::Violated { lhs, rhs }
        }
    }
}

/// The conditional size and order bounds at level n:
/// 2q >= (n-2)(n-3)/2 + 3p when the degrees cover 3..n,
/// 2q <= 6p - 12 - (n-3)(n-2) when the face lengths cover 3..n,
/// p >= (n^2 - 5n + 14)/2 when both do.
#[derive(Debug, Clone, Copy)]
pub struct BoundsReport {
    pub edge_lower: BoundCheck,
    pub edge_upper: BoundCheck,
    pub order: BoundCheck,
}

impl BoundsReport {
    pub fn all_pass(&self) -> bool {
        self.edge_lower.passed() && self.edge_upper.passed() && self.order.passed()
    }
}

pub fn check_bounds(g: &PlaneGraph, n: usize) -> Result<BoundsReport> {
    if n < 3 {
        return Err(Error::BadN { n, min: 3 });
    }
    if !is_polyhedral(g) {
        return Err(Error::NotPolyhedral);
    }
    let p = g.vertex_count() as i64;
    let q = g.edge_count() as i64;
    let ni = n as i64;
    let degrees_cover = covers(&g.degree_sequence(), n);
    let faces_cover = covers(&g.face_vector(), n);
    let edge_lower = if degrees_cover {
        // lower bound written as rhs <= lhs so `le` keeps one shape
        let bound = (ni - 2) * (ni - 3) / 2 + 3 * p;
        BoundCheck::le(bound, 2 * q)
    } else {
        BoundCheck::NotApplicable
    };
    let edge_upper = if faces_cover {
        BoundCheck::le(2 * q, 6 * p - 12 - (ni - 3) * (ni - 2))
    } else {
        BoundCheck::NotApplicable
    };
    let order = if degrees_cover && faces_cover {
        BoundCheck::le((ni * ni - 5 * ni + 14) / 2, p)
    } else {
        BoundCheck::NotApplicable
    };
    Ok(BoundsReport { edge_lower, edge_upper, order })
}
