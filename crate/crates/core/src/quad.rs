use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::{canonical_cycle, PlaneGraph};

/// A plane graph verified to be a bipartite quadrangulation of the sphere,
/// with its two parts tagged: part 0 is the primal side, part 1 the dual
/// side. For radial graphs part 0 holds the base graph's vertices.
#[derive(Debug, Clone)]
pub struct QuadGraph {
    graph: PlaneGraph,
    side: Vec<u8>,
}

impl QuadGraph {
    /// Verifies the quadrangulation and bipartiteness predicates and tags the
    /// parts, with part 0 the part containing vertex 0.
    pub fn new(graph: PlaneGraph) -> Result<QuadGraph> {
        if !is_quadrangulation(&graph) {
            return Err(Error::NotQuadrangulation);
        }
        let (a, b) = bipartition(&graph)?;
        let mut side = vec![0u8; graph.vertex_count()];
        for &v in &b {
            side[v] = 1;
        }
        let _ = a;
        Ok(QuadGraph { graph, side })
    }

    /// Wraps a graph whose quadrangulation and part invariants the caller
    /// has already maintained.
    pub(crate) fn with_sides_unchecked(graph: PlaneGraph, side: Vec<u8>) -> QuadGraph {
        QuadGraph { graph, side }
    }

    /// Wraps a graph with an explicit part assignment (side[v] in {0, 1}).
    pub fn with_sides(graph: PlaneGraph, side: Vec<u8>) -> Result<QuadGraph> {
        if !is_quadrangulation(&graph) {
            return Err(Error::NotQuadrangulation);
        }
        if side.len() != graph.vertex_count() {
            return Err(Error::NotBipartite);
        }
        for (u, v) in graph.edges() {
            if side[u] == side[v] {
                return Err(Error::NotBipartite);
            }
        }
        Ok(QuadGraph { graph, side })
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn into_graph(self) -> PlaneGraph {
        self.graph
    }

    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }

    /// Vertices of the requested part, ascending.
    pub fn part(&self, which: u8) -> Vec<usize> {
        (0..self.graph.vertex_count()).filter(|&v| self.side[v] == which).collect()
    }
}

/// True when every face walk has length 4.
pub fn is_quadrangulation(g: &PlaneGraph) -> bool {
    g.vertex_count() >= 4 && g.faces().iter().all(|w| w.len() == 4)
}

/// The two colour classes of a bipartite graph, the class of vertex 0 first.
pub fn bipartition(g: &PlaneGraph) -> Result<(Vec<usize>, Vec<usize>)> {
    let p = g.vertex_count();
    let mut colour = vec![u8::MAX; p];
    colour[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &v in g.rotation(u) {
            if colour[v] == u8::MAX {
                colour[v] = 1 - colour[u];
                queue.push_back(v);
            } else if colour[v] == colour[u] {
                return Err(Error::NotBipartite);
            }
        }
    }
    let a = (0..p).filter(|&v| colour[v] == 0).collect();
    let b = (0..p).filter(|&v| colour[v] == 1).collect();
    Ok((a, b))
}

/// All 4-cycles that do not bound a face, as canonical cyclic sequences,
/// sorted. Radial graphs of polyhedra have none.
pub fn separating_4cycles(g: &PlaneGraph) -> Vec<Vec<usize>> {
    // paths u - x - w indexed by the endpoint pair
    let mut via: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for x in 0..g.vertex_count() {
        let rot = g.rotation(x);
        for i in 0..rot.len() {
            for j in 0..i {
                let (u, w) = (rot[i].min(rot[j]), rot[i].max(rot[j]));
                via.entry((u, w)).or_default().push(x);
            }
        }
    }
    let face_cycles: BTreeSet<Vec<usize>> = g
        .faces()
        .iter()
        .filter(|w| w.len() == 4)
        .map(|w| canonical_cycle(w))
        .collect();
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for ((u, w), mids) in via {
        for i in 0..mids.len() {
            for j in 0..i {
                let cycle = canonical_cycle(&[u, mids[i], w, mids[j]]);
                if !face_cycles.contains(&cycle) {
                    out.insert(cycle);
                }
            }
        }
    }
    out.into_iter().collect()
}
