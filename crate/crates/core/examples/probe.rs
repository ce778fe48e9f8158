use polyhedral::*;
use std::time::Instant;

fn main() {
    // G_n scale check
    let t0 = Instant::now();
    for n in 3..=40 {
        let g = algorithm2(&DegreeTuple::ascending(n).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), minimal_order(n).unwrap(), "n={n}");
    }
    println!("G_3..G_40 constructed in {:?}", t0.elapsed());

    // H_n scale check
    let t0 = Instant::now();
    let hs = algorithm1(40).unwrap();
    for (g, n) in hs.iter().zip(6usize..) {
        assert_eq!(g.vertex_count(), minimal_order(n).unwrap(), "H_{n}");
        assert_eq!(g.degree(0), n);
        assert_eq!(g.degree(4), n - 1);
        assert!(!g.has_edge(0, 4));
    }
    println!("H_6..H_40 constructed in {:?}", t0.elapsed());

    // self-duality + S_n on the biggest
    let t0 = Instant::now();
    let g40 = algorithm2(&DegreeTuple::ascending(40).unwrap()).unwrap();
    assert!(is_self_dual(&g40).unwrap());
    assert!(satisfies_sn(&g40, 40).unwrap());
    println!("G_40 self-dual + S_40 checks in {:?}", t0.elapsed());

    let t0 = Instant::now();
    let h40 = hs.last().unwrap();
    assert!(!is_self_dual(h40).unwrap());
    assert!(satisfies_sn(h40, 40).unwrap());
    println!("H_40 checks in {:?}", t0.elapsed());

    // permutation witness search
    let t0 = Instant::now();
    let w = permutation_witness(4, 7).unwrap();
    println!("witness over k<=4, t<=7: {:?} in {:?}", w, t0.elapsed());

    // oracle agreement at 12
    for n in 3..=12 {
        let a = algorithm3_oracle(n).unwrap();
        let b = algorithm2(&DegreeTuple::ascending(n).unwrap()).unwrap();
        assert!(is_isomorphic(&a, &b), "oracle mismatch n={n}");
    }
    println!("oracle agrees 3..12");

    // radial of G_40 has no separating 4-cycles
    let t0 = Instant::now();
    let r = radial(&g40).unwrap();
    assert_eq!(r.graph().vertex_count(), 2 * g40.vertex_count());
    assert!(separating_4cycles(r.graph()).is_empty());
    println!("radial(G_40) sep-4-cycles empty in {:?}", t0.elapsed());
}
