use crate::graph::PlaneGraph;

/// An orientation- and relabeling-invariant code for a plane graph: the
/// lexicographic minimum, over every starting dart and both orientations, of
/// the breadth-first traversal code. Two plane graphs get equal codes exactly
/// when one can be turned into the other by relabeling combined with an
/// optional reflection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    syms: Vec<u32>,
}

impl CanonicalCode {
    pub fn symbols(&self) -> &[u32] {
        &self.syms
    }

    /// Byte encoding: a width marker followed by big-endian symbols. Width is
    /// 1 while every symbol fits a byte, which covers all desk-scale graphs.
    pub fn bytes(&self) -> Vec<u8> {
        let wide = self.syms.iter().any(|&s| s > 0xff);
        let mut out = Vec::with_capacity(1 + self.syms.len() * if wide { 4 } else { 1 });
        if wide {
            out.push(4);
            for &s in &self.syms {
                out.extend_from_slice(&s.to_be_bytes());
            }
        } else {
            out.push(1);
            out.extend(self.syms.iter().map(|&s| s as u8));
        }
        out
    }

    pub fn hex(&self) -> String {
        self.bytes().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Rebuilds the canonical representative graph encoded by this code. The
    /// result is embedding-equivalent to every graph that produces the code,
    /// and re-encoding it reproduces the code bit for bit.
    pub fn to_plane_graph(&self) -> PlaneGraph {
        let mut rotations: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < self.syms.len() {
            let deg = self.syms[i] as usize;
            let rot = self.syms[i + 1..i + 1 + deg].iter().map(|&s| s as usize).collect();
            rotations.push(rot);
            i += 1 + deg;
        }
        if rotations.is_empty() {
            rotations.push(Vec::new());
        }
        PlaneGraph::build(rotations).expect("canonical code decodes to a valid plane graph")
    }
}

/// Per-start traversal state, reused across starts via epoch stamping.
struct Coder {
    epoch: u32,
    stamp: Vec<u32>,
    label: Vec<u32>,
    order: Vec<usize>,
    ref_nbr: Vec<usize>,
}

impl Coder {
    fn new(p: usize) -> Coder {
        Coder {
            epoch: 0,
            stamp: vec![0; p],
            label: vec![0; p],
            order: Vec::with_capacity(p),
            ref_nbr: vec![0; p],
        }
    }

    /// Emits the BFS code for the start dart (root, ref) under the given
    /// orientation, comparing against `best` as it goes. Returns None as soon
    /// as the candidate exceeds `best`; otherwise the full candidate.
    fn run(
        &mut self,
        g: &PlaneGraph,
        root: usize,
        first: usize,
        reversed: bool,
        best: Option<&[u32]>,
    ) -> Option<Vec<u32>> {
        self.epoch += 1;
        self.order.clear();
        let mut out: Vec<u32> = Vec::with_capacity(best.map_or(16, |b| b.len()));
        let mut better = false;

        macro_rules! emit {
            ($s:expr) => {{
                let s: u32 = $s;
                if !better {
                    if let Some(b) = best {
                        match s.cmp(&b[out.len()]) {
                            std::cmp::Ordering::Greater => return None,
                            std::cmp::Ordering::Less => better = true,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
                out.push(s);
            }};
        }

        let mut next_label = 0u32;
        self.stamp[root] = self.epoch;
        self.label[root] = next_label;
        next_label += 1;
        self.order.push(root);
        self.ref_nbr[root] = first;

        let mut qi = 0;
        while qi < self.order.len() {
            let w = self.order[qi];
            qi += 1;
            let rot = g.rotation(w);
            let d = rot.len();
            emit!(d as u32);
            let start = rot
                .iter()
                .position(|&x| x == self.ref_nbr[w])
                .expect("reference neighbour present");
            for k in 0..d {
                let x = if reversed {
                    rot[(start + d - k % d) % d]
                } else {
                    rot[(start + k) % d]
                };
                if self.stamp[x] != self.epoch {
                    self.stamp[x] = self.epoch;
                    self.label[x] = next_label;
                    next_label += 1;
                    self.order.push(x);
                    self.ref_nbr[x] = w;
                }
                emit!(self.label[x]);
            }
        }
        // shorter code wins only against a longer prefix-equal best; lengths
        // are equal for connected graphs of the same size, so this is moot,
        // but keep the comparison total.
        if !better {
            if let Some(b) = best {
                if out.len() >= b.len() {
                    return None;
                }
            }
        }
        Some(out)
    }
}

/// Computes the canonical code of `g`.
pub fn canonical_code(g: &PlaneGraph) -> CanonicalCode {
    let p = g.vertex_count();
    if p == 1 {
        return CanonicalCode { syms: vec![0] };
    }
    let mut coder = Coder::new(p);
    let mut best: Option<Vec<u32>> = None;
    for reversed in [false, true] {
        for u in 0..p {
            for &v in g.rotation(u) {
                if let Some(cand) = coder.run(g, u, v, reversed, best.as_deref()) {
                    best = Some(cand);
                }
            }
        }
    }
    CanonicalCode { syms: best.expect("connected graph has at least one dart") }
}

/// Embedding-equivalence test, reflections included. For 3-connected plane
/// graphs this coincides with abstract graph isomorphism.
pub fn is_isomorphic(g: &PlaneGraph, h: &PlaneGraph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_code(g) == canonical_code(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::dual;
    use crate::seeds;

    #[test]
    fn code_is_invariant_under_relabeling() {
        let g = seeds::tetrahedron();
        let shuffled = g.relabeled(&[2, 0, 3, 1]);
        assert_eq!(canonical_code(&g), canonical_code(&shuffled));
    }

    #[test]
    fn code_is_invariant_under_reflection() {
        let g = seeds::h5_seed();
        assert_eq!(canonical_code(&g), canonical_code(&g.mirrored()));
    }

    #[test]
    fn cube_and_octahedron_differ() {
        let cube = seeds::test_fixtures::cube();
        let octa = seeds::test_fixtures::octahedron();
        assert_ne!(canonical_code(&cube), canonical_code(&octa));
        assert!(!is_isomorphic(&cube, &octa));
    }

    #[test]
    fn tetrahedron_is_isomorphic_to_its_dual() {
        let g = seeds::tetrahedron();
        let d = dual(&g).unwrap();
        assert!(is_isomorphic(&g, &d));
    }

    #[test]
    fn wheel_and_cube_differ_in_order() {
        let w5 = seeds::wheel(5).unwrap();
        let cube = seeds::test_fixtures::cube();
        assert!(!is_isomorphic(&w5, &cube));
    }

    #[test]
    fn decode_round_trips() {
        for g in [seeds::tetrahedron(), seeds::h5_seed(), seeds::wheel(7).unwrap()] {
            let code = canonical_code(&g);
            let rep = code.to_plane_graph();
            assert_eq!(canonical_code(&rep), code);
            assert!(is_isomorphic(&rep, &g));
        }
    }
}
