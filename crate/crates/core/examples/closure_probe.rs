use polyhedral::*;
use std::time::Instant;

fn main() {
    let max_q: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(18);
    let t0 = Instant::now();
    let levels = closure(max_q).unwrap();
    println!("closure({max_q}) in {:?}", t0.elapsed());
    for level in &levels {
        let t1 = Instant::now();
        let selfdual = level
            .members
            .iter()
            .filter(|(_, m)| is_self_dual_radial(m).unwrap())
            .count();
        println!(
            "q={:2}  members={:6}  selfdual_radials={:5}  (count in {:?})",
            level.size_g,
            level.members.len(),
            selfdual,
            t1.elapsed()
        );
    }
    println!("total {:?}", t0.elapsed());
}
