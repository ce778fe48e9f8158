use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

/// A connected simple plane graph stored as a rotation system: for every
/// vertex, the cyclic sequence of its neighbours in counterclockwise order.
/// Face walks are traced with the face on the left of each dart, so the
/// rotation system determines the sphere embedding completely.
///
/// Vertex identifiers are dense, `0..p`. Values are immutable after
/// construction; every operation returns a new graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotations: Vec<Vec<usize>>,
    labels: BTreeMap<usize, String>,
}

/// The face walks of a plane graph together with a dart -> face index map.
/// A walk lists the tail of each dart along the face; vertices may repeat
/// when the graph is not 2-connected. Darts are indexed by (tail, position
/// in the tail's rotation), so lookups are array scans instead of hashing.
#[derive(Debug, Clone)]
pub struct FaceSet {
    faces: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    dart_heads: Vec<usize>,
    dart_face: Vec<u32>,
}

impl PlaneGraph {
    /// Validates a rotation system and wraps it. Checks simplicity, symmetry
    /// of adjacency, connectedness and Euler's relation p - q + f = 2.
    pub fn build(rotations: Vec<Vec<usize>>) -> Result<PlaneGraph> {
        PlaneGraph::build_labeled(rotations, BTreeMap::new())
    }

    pub fn build_labeled(
        rotations: Vec<Vec<usize>>,
        labels: BTreeMap<usize, String>,
    ) -> Result<PlaneGraph> {
        let p = rotations.len();
        for (u, rot) in rotations.iter().enumerate() {
            let mut seen = vec![false; p];
            for &v in rot {
                if v >= p {
                    return Err(Error::VertexOutOfRange { v, p });
                }
                if v == u {
                    return Err(Error::SelfLoop { v });
                }
                if seen[v] {
                    return Err(Error::DuplicateEdge { u, v });
                }
                seen[v] = true;
            }
        }
        for (u, rot) in rotations.iter().enumerate() {
            for &v in rot {
                if !rotations[v].contains(&u) {
                    return Err(Error::NonSymmetricAdjacency { u, v });
                }
            }
        }
        let g = PlaneGraph { rotations, labels };
        if !g.is_connected() {
            return Err(Error::NotConnected);
        }
        let (p, q, f) = (g.vertex_count(), g.edge_count(), g.faces().len());
        // A single vertex has one face but no darts to trace it from.
        let f = if p == 1 { 1 } else { f };
        if p + f != q + 2 {
            return Err(Error::NotGenusZero { p, q, f });
        }
        Ok(g)
    }

    /// Wraps rotations that an operation has maintained itself, skipping
    /// validation. Callers must uphold the invariants of `build`; the
    /// surgical operations certify theirs through postcondition asserts in
    /// debug builds.
    pub(crate) fn assemble(
        rotations: Vec<Vec<usize>>,
        labels: BTreeMap<usize, String>,
    ) -> PlaneGraph {
        PlaneGraph { rotations, labels }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotations.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(|s| s.as_str())
    }

    /// Vertex carrying the given label, if any.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().find(|(_, l)| l.as_str() == label).map(|(&v, _)| v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rotations[u].contains(&v)
    }

    /// All edges as ordered pairs (u, v) with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, rot) in self.rotations.iter().enumerate() {
            for &v in rot {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Successor of `u` in the cyclic rotation at `v`. Panics if `u` is not a
    /// neighbour of `v`.
    pub fn rot_next(&self, v: usize, u: usize) -> usize {
        let rot = &self.rotations[v];
        let i = rot.iter().position(|&x| x == u).expect("rot_next: not a neighbour");
        rot[(i + 1) % rot.len()]
    }

    /// Predecessor of `u` in the cyclic rotation at `v`.
    pub fn rot_prev(&self, v: usize, u: usize) -> usize {
        let rot = &self.rotations[v];
        let i = rot.iter().position(|&x| x == u).expect("rot_prev: not a neighbour");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// The dart following (u, v) on its face walk: (v, rot_next(v, u)).
    pub fn next_dart(&self, u: usize, v: usize) -> (usize, usize) {
        (v, self.rot_next(v, u))
    }

    /// Walks the face containing the dart (u, v); returns the tails of its
    /// darts in walk order, starting at u.
    pub fn face_walk(&self, u: usize, v: usize) -> Vec<usize> {
        let mut walk = Vec::new();
        let (mut a, mut b) = (u, v);
        loop {
            walk.push(a);
            let (na, nb) = self.next_dart(a, b);
            a = na;
            b = nb;
            if (a, b) == (u, v) {
                break;
            }
        }
        walk
    }

    /// Traces every face walk. Darts are scanned in vertex/rotation order, so
    /// face indices are deterministic.
    pub fn faces(&self) -> FaceSet {
        let p = self.rotations.len();
        let mut offsets = Vec::with_capacity(p + 1);
        let mut total = 0;
        for rot in &self.rotations {
            offsets.push(total);
            total += rot.len();
        }
        offsets.push(total);
        let mut dart_heads = Vec::with_capacity(total);
        for rot in &self.rotations {
            dart_heads.extend_from_slice(rot);
        }
        let mut dart_face = vec![u32::MAX; total];
        let mut faces = Vec::new();
        for u in 0..p {
            for i in offsets[u]..offsets[u + 1] {
                if dart_face[i] != u32::MAX {
                    continue;
                }
                let idx = faces.len() as u32;
                let mut walk = Vec::new();
                let mut d = i;
                let mut a = u;
                loop {
                    dart_face[d] = idx;
                    walk.push(a);
                    // next dart: enter b along (a -> b), leave after a in b's rotation
                    let b = dart_heads[d];
                    let (lo, hi) = (offsets[b], offsets[b + 1]);
                    let pos = (lo..hi)
                        .find(|&e| dart_heads[e] == a)
                        .expect("symmetric adjacency");
                    d = if pos + 1 == hi { lo } else { pos + 1 };
                    a = b;
                    if d == i {
                        break;
                    }
                }
                faces.push(walk);
            }
        }
        FaceSet { faces, offsets, dart_heads, dart_face }
    }

    /// Vertex degrees, sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.rotations.iter().map(|r| r.len()).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Face lengths, sorted descending.
    pub fn face_vector(&self) -> Vec<usize> {
        let mut f: Vec<usize> = self.faces().iter().map(|w| w.len()).collect();
        f.sort_unstable_by(|a, b| b.cmp(a));
        f
    }

    fn is_connected(&self) -> bool {
        let p = self.vertex_count();
        if p == 0 {
            return false;
        }
        let mut seen = vec![false; p];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.rotations[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == p
    }

    /// Applies a permutation `perm` (new id of old vertex i is perm[i]) to
    /// vertices, rotations and labels.
    pub fn relabeled(&self, perm: &[usize]) -> PlaneGraph {
        let p = self.vertex_count();
        assert_eq!(perm.len(), p);
        let mut rotations = vec![Vec::new(); p];
        for (u, rot) in self.rotations.iter().enumerate() {
            rotations[perm[u]] = rot.iter().map(|&v| perm[v]).collect();
        }
        let labels = self.labels.iter().map(|(&v, l)| (perm[v], l.clone())).collect();
        PlaneGraph { rotations, labels }
    }

    /// Returns the same graph with one more label attached.
    pub fn with_label(mut self, v: usize, label: String) -> PlaneGraph {
        self.labels.insert(v, label);
        self
    }

    /// The mirror image: every rotation reversed.
    pub fn mirrored(&self) -> PlaneGraph {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlaneGraph { rotations, labels: self.labels.clone() }
    }

    /// Internal constructor for operations that have already maintained the
    /// invariants; still validates in debug builds.
    pub(crate) fn from_parts(
        rotations: Vec<Vec<usize>>,
        labels: BTreeMap<usize, String>,
    ) -> Result<PlaneGraph> {
        PlaneGraph::build_labeled(rotations, labels)
    }
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn walk(&self, idx: usize) -> &[usize] {
        &self.faces[idx]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter()
    }

    /// Index of the face on the left of dart (u, v).
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        if u + 1 >= self.offsets.len() {
            return None;
        }
        (self.offsets[u]..self.offsets[u + 1])
            .find(|&d| self.dart_heads[d] == v)
            .map(|d| self.dart_face[d] as usize)
    }

    /// Indices of the (at most two) faces bordering edge {u, v}.
    pub fn faces_of_edge(&self, u: usize, v: usize) -> (Option<usize>, Option<usize>) {
        (self.face_of_dart(u, v), self.face_of_dart(v, u))
    }

    /// Face walks as canonical cyclic sequences (minimum rotation in the
    /// lexicographically smaller direction), sorted. Used to compare face
    /// multisets regardless of trace order.
    pub fn canonical_walks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.faces.iter().map(|w| canonical_cycle(w)).collect();
        out.sort();
        out
    }
}

/// Canonical form of a cyclic sequence: among all rotations of both
/// directions, the lexicographically least (Booth's algorithm per direction).
pub fn canonical_cycle(walk: &[usize]) -> Vec<usize> {
    if walk.is_empty() {
        return Vec::new();
    }
    let n = walk.len();
    let forward = {
        let k = least_rotation(walk);
        (0..n).map(|i| walk[(k + i) % n]).collect::<Vec<_>>()
    };
    let rev: Vec<usize> = walk.iter().rev().copied().collect();
    let backward = {
        let k = least_rotation(&rev);
        (0..n).map(|i| rev[(k + i) % n]).collect::<Vec<_>>()
    };
    forward.min(backward)
}

/// Index of the lexicographically least rotation of `s` (Booth).
fn least_rotation(s: &[usize]) -> usize {
    let n = s.len();
    let at = |i: usize| s[i % n];
    let mut f = vec![usize::MAX; 2 * n];
    let mut k = 0;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[j - k - 1];
        while i != usize::MAX && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = f[i];
        }
        if i == usize::MAX && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            f[j - k] = usize::MAX;
        } else if i == usize::MAX {
            f[j - k] = 0;
        } else {
            f[j - k] = i + 1;
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds;

    #[test]
    fn tetrahedron_builds_with_four_triangles() {
        let g = seeds::tetrahedron();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        let faces = g.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|w| w.len() == 3));
    }

    #[test]
    fn asymmetric_adjacency_is_rejected() {
        // 0 lists 1 but 1 does not list 0
        let rot = vec![vec![1], vec![2], vec![1]];
        assert_eq!(
            PlaneGraph::build(rot).unwrap_err(),
            Error::NonSymmetricAdjacency { u: 0, v: 1 }
        );
    }

    #[test]
    fn disconnected_input_is_rejected() {
        // two disjoint triangles
        let rot = vec![
            vec![1, 2],
            vec![2, 0],
            vec![0, 1],
            vec![4, 5],
            vec![5, 3],
            vec![3, 4],
        ];
        assert_eq!(PlaneGraph::build(rot).unwrap_err(), Error::NotConnected);
    }

    #[test]
    fn self_loop_and_duplicate_edge_are_rejected() {
        assert_eq!(
            PlaneGraph::build(vec![vec![0, 1], vec![0]]).unwrap_err(),
            Error::SelfLoop { v: 0 }
        );
        assert_eq!(
            PlaneGraph::build(vec![vec![1, 1], vec![0, 0]]).unwrap_err(),
            Error::DuplicateEdge { u: 0, v: 1 }
        );
    }

    #[test]
    fn non_planar_rotation_fails_euler_check() {
        // K5 cannot satisfy p - q + f = 2 whatever the rotations say.
        let rot: Vec<Vec<usize>> = (0..5)
            .map(|u| (0..5).filter(|&v| v != u).collect())
            .collect();
        assert!(matches!(
            PlaneGraph::build(rot).unwrap_err(),
            Error::NotGenusZero { .. }
        ));
    }

    #[test]
    fn square_pyramid_faces() {
        let g = seeds::wheel(5).unwrap();
        let mut fv = g.face_vector();
        fv.sort_unstable();
        assert_eq!(fv, vec![3, 3, 3, 3, 4]);
        assert_eq!(g.degree_sequence(), vec![4, 3, 3, 3, 3]);
    }

    #[test]
    fn trees_trace_a_single_face() {
        // path on 3 vertices: one face of length 4
        let g = PlaneGraph::build(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        let faces = g.faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces.walk(0).len(), 4);
    }

    #[test]
    fn face_multiset_sums_to_twice_edges() {
        let g = seeds::h5_seed();
        let total: usize = g.faces().iter().map(|w| w.len()).sum();
        assert_eq!(total, 2 * g.edge_count());
    }
}
