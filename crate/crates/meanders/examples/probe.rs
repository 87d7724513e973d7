use meanders::diagram::close_open_meander;
use meanders::meander::enumerate_open_meanders;
fn main() {
    for n in [5usize, 7, 9, 11] {
        let mut reduced_composite = 0;
        let mut nonreduced = 0;
        let mut total = 0;
        for m in enumerate_open_meanders(n) {
            let d = close_open_meander(&m);
            let f = d.analyze();
            total += 1;
            if !f.reduced { nonreduced += 1; }
            if f.reduced && !f.prime { reduced_composite += 1; }
        }
        println!("n={n}: total={total} nonreduced={nonreduced} reduced_composite={reduced_composite}");
    }
}
