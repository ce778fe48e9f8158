use polyhedral::*;
use std::time::Instant;

fn main() {
    let g40 = algorithm2(&DegreeTuple::ascending(40).unwrap()).unwrap();
    let t = Instant::now(); let c3 = is_3connected(&g40).unwrap(); println!("3conn: {:?} -> {c3}", t.elapsed());
    let t = Instant::now(); let f = g40.faces().len(); println!("faces: {:?} -> {f}", t.elapsed());
    let t = Instant::now(); let code = canonical_code(&g40); println!("canon: {:?} -> len {}", t.elapsed(), code.symbols().len());
    let t = Instant::now(); let d = dual(&g40).unwrap(); println!("dual: {:?} -> p {}", t.elapsed(), d.vertex_count());
    let t = Instant::now(); let cd = canonical_code(&d); println!("canon(dual): {:?} -> eq {}", t.elapsed(), cd == code);
}
