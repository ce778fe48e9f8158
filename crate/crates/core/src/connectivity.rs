use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::PlaneGraph;

/// Flat adjacency (CSR layout) for the connectivity scans.
struct Csr {
    offsets: Vec<u32>,
    heads: Vec<u32>,
}

impl Csr {
    fn new(g: &PlaneGraph) -> Csr {
        let p = g.vertex_count();
        let mut offsets = Vec::with_capacity(p + 1);
        let mut heads = Vec::with_capacity(2 * g.edge_count());
        offsets.push(0);
        for v in 0..p {
            heads.extend(g.rotation(v).iter().map(|&x| x as u32));
            offsets.push(heads.len() as u32);
        }
        Csr { offsets, heads }
    }

    fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }
}

/// Per-thread scratch: epoch-stamped visit marks and an explicit stack.
struct Scratch {
    stamp: Vec<u32>,
    epoch: u32,
    stack: Vec<u32>,
}

impl Scratch {
    fn new(p: usize) -> Scratch {
        Scratch { stamp: vec![0; p], epoch: 0, stack: Vec::with_capacity(p) }
    }
}

/// Does the graph stay connected after removing `skip1` and `skip2`?
fn connected_avoiding(csr: &Csr, scr: &mut Scratch, skip1: u32, skip2: u32) -> bool {
    let p = csr.vertex_count() as u32;
    scr.epoch += 1;
    let epoch = scr.epoch;
    scr.stamp[skip1 as usize] = epoch;
    scr.stamp[skip2 as usize] = epoch;
    let start = match (0..p).find(|&v| scr.stamp[v as usize] != epoch) {
        Some(v) => v,
        None => return true,
    };
    scr.stack.clear();
    scr.stack.push(start);
    scr.stamp[start as usize] = epoch;
    let mut count = 1;
    while let Some(u) = scr.stack.pop() {
        let (lo, hi) = (csr.offsets[u as usize], csr.offsets[u as usize + 1]);
        for &v in &csr.heads[lo as usize..hi as usize] {
            if scr.stamp[v as usize] != epoch {
                scr.stamp[v as usize] = epoch;
                count += 1;
                scr.stack.push(v);
            }
        }
    }
    let removed = if skip1 == skip2 { 1 } else { 2 };
    count == p - removed
}

/// 2-connectivity: no cutvertex. Requires p >= 3.
pub fn is_2connected(g: &PlaneGraph) -> bool {
    let p = g.vertex_count();
    if p < 3 {
        return false;
    }
    let csr = Csr::new(g);
    let mut scr = Scratch::new(p);
    (0..p as u32).all(|u| connected_avoiding(&csr, &mut scr, u, u))
}

/// 3-connectivity by brute force over vertex pairs: removing any two
/// vertices must leave the graph connected. Adequate at the graph sizes this
/// crate handles; pairs are scanned in parallel.
pub fn is_3connected(g: &PlaneGraph) -> Result<bool> {
    let p = g.vertex_count();
    if p < 4 {
        return Err(Error::TooSmall { p });
    }
    if g.rotations().iter().any(|r| r.len() < 3) {
        return Ok(false);
    }
    let csr = Csr::new(g);
    let ok = (0..p as u32)
        .into_par_iter()
        .map_init(
            || Scratch::new(p),
            |scr, u| (u + 1..p as u32).all(|v| connected_avoiding(&csr, scr, u, v)),
        )
        .all(|ok| ok);
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PlaneGraph;
    use crate::seeds;

    #[test]
    fn wheel_is_3connected() {
        assert!(is_3connected(&seeds::wheel(5).unwrap()).unwrap());
        assert!(is_3connected(&seeds::tetrahedron()).unwrap());
    }

    #[test]
    fn k24_is_not_3connected() {
        let g = seeds::test_fixtures::k24_quadrangulation();
        assert!(!is_3connected(&g).unwrap());
        assert!(is_2connected(&g));
    }

    #[test]
    fn too_small_is_an_error() {
        let tri = PlaneGraph::build(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(is_3connected(&tri).unwrap_err(), Error::TooSmall { p: 3 });
    }

    #[test]
    fn path_is_not_2connected() {
        let path = PlaneGraph::build(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        assert!(!is_2connected(&path));
    }

    #[test]
    fn losing_a_rim_edge_breaks_3connectivity() {
        // wheel(6) with one rim edge removed has a 2-cut
        let w = seeds::wheel(6).unwrap();
        let mut rot = w.rotations().to_vec();
        rot[1].retain(|&x| x != 2);
        rot[2].retain(|&x| x != 1);
        let g = PlaneGraph::build(rot).unwrap();
        assert!(!is_3connected(&g).unwrap());
    }
}
