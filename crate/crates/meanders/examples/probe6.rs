use meanders::diagram::*;
use meanders::invariants::*;

fn main() {
    // Hand-built 6-crossing 3-component necklace shadow:
    // A = [1,2,3,4], B = [1,2,5,6], C = [3,4,5,6] with various orders.
    let candidates = [
        "{{-1,2,-3,4},{1,-2,5,-6},{3,-4,6,-5}}",
        "{{-1,2,-3,4},{1,-2,5,-6},{3,-4,-5,6}}",
        "{{-1,2,-3,4},{1,-2,-5,6},{3,-4,5,-6}}",
        "{{-1,2,-3,4},{1,-2,5,-6},{-3,4,6,-5}}",
        "{{-1,2,-3,4},{1,-2,-6,5},{3,-4,-5,6}}",
    ];
    for c in candidates {
        let code = GaussCode::parse(c).unwrap();
        match realize_gauss_code(&code) {
            Ok(d) => {
                let f = d.analyze();
                println!("{c}: realized, alt={} reduced={} prime={} lk={:?}",
                    f.alternating, f.reduced, f.prime, linking_matrix(&d).unwrap());
            }
            Err(e) => println!("{c}: {e}"),
        }
    }
}
