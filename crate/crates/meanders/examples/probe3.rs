use meanders::diagram::*;
use meanders::invariants::*;

fn main() {
    // D1: the (2,4)-torus meander link closure code.
    let d1code = GaussCode::parse("{{-1,2,-3,4},{1,-2,3,-4}}").unwrap();
    // The same code re-based: axis from c2, curve reversed from +3.
    let d2code = GaussCode::parse("{{2,-3,4,-1},{3,-2,1,-4}}").unwrap();
    // And the dt_to_gauss output with its own labels.
    let d3code = GaussCode::parse("{{1,-3,2,-4},{3,-1,4,-2}}").unwrap();
    for (tag, code) in [("D1", &d1code), ("D2", &d2code), ("D3", &d3code)] {
        let d = realize_gauss_code(code).unwrap();
        let fp = fingerprint(&d);
        println!("{tag}: w={} det={} bracket={}", d.writhe(), determinant(&d), fp.bracket);
        // cross-check with the state sum on the SAME embedding
        let ss = bracket_state_sum(&d);
        let sw = kauffman_bracket(&d);
        if ss != sw { println!("   !!! sweep {sw} vs state sum {ss}"); }
        println!("   signs={:?}", d.signs());
    }
}
