use meanders::algebra::*;
fn main() {
    for n in [5usize, 7, 9] {
        let t = std::time::Instant::now();
        let table = meander_level_table(n);
        println!("meander level {n}: {} types in {:?}", table.len(), t.elapsed());
    }
    for n in [6usize, 8] {
        let t = std::time::Instant::now();
        let table = semi_meander_level_table(n);
        println!("ogc level {n}: {} types in {:?}", table.len(), t.elapsed());
    }
}
