use meanders::diagram::*;
use meanders::invariants::*;
use std::collections::HashSet;

fn main() {
    for (n, c) in [(8usize, 3usize), (10, 3)] {
        let mut all: HashSet<Fingerprint> = HashSet::new();
        meanders::classify::debug_multi_shadows(n, c, |code| {
            if let Ok(d) = realize_gauss_code(code) {
                let f = d.analyze();
                if f.reduced && f.prime && f.components_simple && f.alternating {
                    all.insert(fingerprint(&d));
                }
            }
        });
        println!("canonical enumerator ({n},{c}): unfiltered-prime-alt={}", all.len());
    }
}
