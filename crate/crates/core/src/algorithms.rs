use crate::error::{Error, Result};
use crate::graph::PlaneGraph;
use crate::pmove::{p_move, PPosition};
use crate::quad::QuadGraph;
use crate::radial::radial;
use crate::seeds::{h5_seed, tetrahedron};
use crate::split::{edge_split, SplitTriple};

/// Input tuple T = (t1, ..., tk) of the self-dual construction; every entry
/// is at least 4. The induced degree sequence is f(T) = (t1, ..., tk, 3^m)
/// with m = 4 + sum(ti - 4).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTuple {
    entries: Vec<usize>,
}

impl DegreeTuple {
    pub fn new(entries: Vec<usize>) -> Result<DegreeTuple> {
        if let Some(&entry) = entries.iter().find(|&&t| t < 4) {
            return Err(Error::EntryBelowFour { entry });
        }
        Ok(DegreeTuple { entries })
    }

    /// The tuple (4, 5, ..., n); empty for n = 3.
    pub fn ascending(n: usize) -> Result<DegreeTuple> {
        if n < 3 {
            return Err(Error::BadN { n, min: 3 });
        }
        DegreeTuple::new((4..=n).collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// m = 4 + sum(ti - 4): the number of degree-3 vertices in f(T).
    pub fn three_count(&self) -> usize {
        4 + self.entries.iter().map(|&t| t - 4).sum::<usize>()
    }
}

/// Minimal order of a polyhedron with a vertex of degree i and an i-gonal
/// face for each 3 <= i <= n: (n^2 - 5n + 14) / 2.
pub fn minimal_order(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::BadN { n, min: 3 });
    }
    Ok((n * n + 14 - 5 * n) / 2)
}

/// The degree sequence f(T), sorted descending.
pub fn admissible_sequence(t: &DegreeTuple) -> Vec<usize> {
    let mut seq = t.entries.clone();
    seq.extend(std::iter::repeat(3).take(t.three_count()));
    seq.sort_unstable_by(|a, b| b.cmp(a));
    seq
}

/// Snapshot of the H_n construction after one step: the labeled graph H_n
/// and the triple list as it stands ready for the next step (each processed
/// triple (a,b,c) replaced by (a,b,new), plus the freshly appended one).
#[derive(Debug, Clone)]
pub struct Alg1State {
    pub graph: PlaneGraph,
    pub triples: Vec<SplitTriple>,
    pub n: usize,
}

/// Grows the non-self-dual family H_6, ..., H_N from the H_5 seed by edge
/// splitting along the maintained triple list: each step processes the
/// triples in order, labels the new vertices sequentially, replaces each
/// processed triple on the fresh triangle, and appends (v_{p'+1}, v1, a')
/// where a' is the first vertex of the last triple.
///
/// Replacement entry order: the first triple becomes (a, b, v), every other
/// one (a, v, c). The first shape keeps the appended triple on a live face;
/// the second steers later rounds away from the edges at v1 that sibling
/// splits delete, and keeps every stored triple on a triangular face.
pub fn algorithm1_states(max_n: usize) -> Result<Vec<Alg1State>> {
    if max_n < 6 {
        return Err(Error::BadN { n: max_n, min: 6 });
    }
    let mut g = h5_seed();
    // (v1,v4,v6), (v5,v1,v7), (v6,v1,v5)
    let mut triples = vec![
        SplitTriple::new(0, 3, 5),
        SplitTriple::new(4, 0, 6),
        SplitTriple::new(5, 0, 4),
    ];
    let mut states = Vec::with_capacity(max_n - 5);
    for n in 6..=max_n {
        let p_before = g.vertex_count();
        for (i, triple) in triples.iter_mut().enumerate() {
            let (next, v_new) = edge_split(&g, *triple)?;
            g = next.with_label(v_new, format!("v{}", v_new + 1));
            *triple = if i == 0 {
                SplitTriple::new(triple.u1, triple.u2, v_new)
            } else {
                SplitTriple::new(triple.u1, v_new, triple.u3)
            };
        }
        let a_prime = triples.last().expect("triple list non-empty").u1;
        triples.push(SplitTriple::new(p_before, 0, a_prime));
        debug_assert_eq!(triples.len(), n - 2);
        states.push(Alg1State { graph: g.clone(), triples: triples.clone(), n });
    }
    Ok(states)
}

/// The graphs H_6, ..., H_N of `algorithm1_states`.
pub fn algorithm1(max_n: usize) -> Result<Vec<PlaneGraph>> {
    Ok(algorithm1_states(max_n)?.into_iter().map(|s| s.graph).collect())
}

/// Core of the self-dual construction: starting from the tetrahedron with
/// working triple (a,b,c) = (0,1,2) spanning a triangular face, each entry t
/// performs t-3 edge splits at the working triple. Between splits of one
/// step the triple moves by (a,b,c) -> (a,c,d); after the step's last split
/// it moves by (a,b,c) -> (c,a,d), where d is the vertex the split created.
fn run_algorithm2(
    tuple: &DegreeTuple,
    mut on_split: impl FnMut(&PlaneGraph, SplitTriple, &PlaneGraph),
) -> Result<PlaneGraph> {
    let mut g = tetrahedron();
    let (mut a, mut b, mut c) = (0usize, 1usize, 2usize);
    for &t in tuple.entries() {
        let degree_before = g.degree(a);
        debug_assert_eq!(degree_before, 3);
        let k = t - 3;
        for j in 0..k {
            let triple = SplitTriple::new(a, b, c);
            debug_assert!(spans_triangle(&g, triple));
            let (next, d) = edge_split(&g, triple)?;
            on_split(&g, triple, &next);
            g = next;
            if j + 1 < k {
                b = c;
                c = d;
            } else {
                let pivot_done = a;
                debug_assert_eq!(g.degree(pivot_done), t);
                a = c;
                b = pivot_done;
                c = d;
            }
        }
    }
    Ok(g)
}

fn spans_triangle(g: &PlaneGraph, t: SplitTriple) -> bool {
    use crate::split::triple_direction;
    match triple_direction(g, t) {
        Ok(dir) => crate::split::triple_faces(g, t, dir).0.len() == 3,
        Err(_) => false,
    }
}

/// A self-dual polyhedron with degree sequence f(T).
pub fn algorithm2(tuple: &DegreeTuple) -> Result<PlaneGraph> {
    run_algorithm2(tuple, |_, _, _| {})
}

/// Like `algorithm2`, returning every (graph before split, triple) pair.
pub fn algorithm2_splits(tuple: &DegreeTuple) -> Result<(PlaneGraph, Vec<(PlaneGraph, SplitTriple)>)> {
    let mut splits = Vec::new();
    let g = run_algorithm2(tuple, |before, t, _| splits.push((before.clone(), t)))?;
    Ok((g, splits))
}

/// Like `algorithm2`, returning the graph after every split (the last entry
/// is the final output).
pub fn algorithm2_trace(tuple: &DegreeTuple) -> Result<Vec<PlaneGraph>> {
    let mut trace = Vec::new();
    let _ = run_algorithm2(tuple, |_, _, after| trace.push(after.clone()))?;
    if trace.is_empty() {
        trace.push(tetrahedron());
    }
    Ok(trace)
}

/// The same construction run on the radial side: starting from the cube
/// (radial of the tetrahedron) the working triple is carried along, and
/// every split is executed as a quadrangulation move at the corresponding
/// position (b = u2, B = the working triangle's face vertex, quad-1 = the
/// radial quadrilateral of the edge u1u2). An independent code path from
/// `algorithm2`, used to cross-check it.
pub fn algorithm2_radial(tuple: &DegreeTuple) -> Result<QuadGraph> {
    let mut r = radial(&tetrahedron())?;
    let (mut a, mut b, mut c) = (0usize, 1usize, 2usize);
    // the tetrahedron's face (0,1,2) is traced first, so its radial vertex
    // is the first face vertex; the working triangle keeps this identifier
    // through every move
    let big_b = 4usize;
    for &t in tuple.entries() {
        let k = t - 3;
        for j in 0..k {
            let faces = r.graph().faces();
            let quad1 = (0..faces.len())
                .find(|&i| {
                    let w = faces.walk(i);
                    w.contains(&a) && w.contains(&b)
                })
                .ok_or(Error::InvalidPosition("no radial quad for the working edge"))?;
            let d = r.graph().vertex_count();
            r = p_move(&r, PPosition { b, big_b, quad1 })?;
            if j + 1 < k {
                b = c;
                c = d;
            } else {
                let pivot_done = a;
                a = c;
                b = pivot_done;
                c = d;
            }
        }
    }
    Ok(r)
}

/// Direct edge-list construction of G_n (self-dual, minimal order, property
/// S_n): each step deletes the edge bc of the working triangle (a,b,c) and
/// fans n-3 new vertices out of a inside it, chained so that the two faces
/// merged across bc grow into the required n-gon. Kept as an independent
/// cross-check for `algorithm2` on ascending tuples.
pub fn algorithm3_oracle(max_n: usize) -> Result<PlaneGraph> {
    if max_n < 3 {
        return Err(Error::BadN { n: max_n, min: 3 });
    }
    let mut g = tetrahedron();
    // tetrahedron labeled v1..v4, (a,b,c) = (v1,v3,v4)
    let (mut a, mut b, mut c) = (0usize, 2usize, 3usize);
    for n in 4..=max_n {
        let p_old = g.vertex_count();
        let m = n - 3;
        let spokes = spoke_order(p_old, m);
        let mut rotations = g.rotations().to_vec();

        // orientation of the working triangle's walk
        let forward = g.rot_next(b, a) == c;
        if !forward {
            debug_assert_eq!(g.rot_next(b, c), a);
        }

        let replace = |rot: &mut Vec<usize>, from: usize, to: usize| {
            let i = rot.iter().position(|&x| x == from).expect("neighbour present");
            rot[i] = to;
        };
        replace(&mut rotations[b], c, spokes[0]);
        replace(&mut rotations[c], b, spokes[m - 1]);
        if forward {
            let at = rotations[a].iter().position(|&x| x == b).expect("b adjacent to a");
            for (k, &s) in spokes.iter().rev().enumerate() {
                rotations[a].insert(at + k, s);
            }
        } else {
            let at = rotations[a].iter().position(|&x| x == c).expect("c adjacent to a");
            for (k, &s) in spokes.iter().enumerate() {
                rotations[a].insert(at + k, s);
            }
        }
        let mut spoke_rots = vec![Vec::new(); m];
        for (j, &s) in spokes.iter().enumerate() {
            let prev = if j == 0 { b } else { spokes[j - 1] };
            let next = if j == m - 1 { c } else { spokes[j + 1] };
            spoke_rots[s - p_old] = if forward {
                vec![prev, a, next]
            } else {
                vec![next, a, prev]
            };
        }
        rotations.extend(spoke_rots);
        g = PlaneGraph::from_parts(rotations, g.labels().clone())?;

        let old_c = c;
        c = p_old + m - 1;
        let new_a = if m >= 2 { p_old + m - 2 } else { old_c };
        b = a;
        a = new_a;
    }
    Ok(g)
}

/// New vertices ordered along the chain from b to c: odd fan positions
/// ascending, then even positions descending, so that consecutive chain
/// vertices are exactly the construction's skip edges plus the closing pair.
fn spoke_order(p_old: usize, m: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..m).step_by(2).collect();
    let evens: Vec<usize> = (1..m).step_by(2).collect();
    order.extend(evens.into_iter().rev());
    order.into_iter().map(|i| p_old + i).collect()
}

/// Searches tuples with at most `max_k` entries, each between 4 and
/// `max_entry`, for a pair of permutations of the same tuple whose outputs
/// are not isomorphic. Tuples and permutations are scanned in lexicographic
/// order, so the first witness is deterministic.
pub fn permutation_witness(
    max_k: usize,
    max_entry: usize,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    use crate::canon::canonical_code;
    for k in 2..=max_k {
        let mut tuple = vec![4usize; k];
        loop {
            let base = DegreeTuple::new(tuple.clone())?;
            let base_code = canonical_code(&algorithm2(&base)?);
            let mut perm = tuple.clone();
            perm.sort_unstable();
            // scan permutations in lexicographic order
            loop {
                if perm != tuple {
                    let other = DegreeTuple::new(perm.clone())?;
                    if canonical_code(&algorithm2(&other)?) != base_code {
                        return Ok(Some((tuple, perm)));
                    }
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
            if !next_tuple(&mut tuple, max_entry) {
                break;
            }
        }
    }
    Ok(None)
}

fn next_tuple(tuple: &mut [usize], max_entry: usize) -> bool {
    for i in (0..tuple.len()).rev() {
        if tuple[i] < max_entry {
            tuple[i] += 1;
            for j in i + 1..tuple.len() {
                tuple[j] = 4;
            }
            return true;
        }
    }
    false
}

fn next_permutation(seq: &mut [usize]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}
