use meanders::classify::*;
fn main() {
    for (n, c, expect) in [(6usize, 3usize, 1u64), (8, 3, 2), (10, 3, 12)] {
        let t = std::time::Instant::now();
        let row = census_multicomponent(n, c).unwrap();
        println!("({n},{c}): got {} expect {expect} in {:?}", row.type_count, t.elapsed());
    }
}
