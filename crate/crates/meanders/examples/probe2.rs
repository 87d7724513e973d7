use meanders::diagram::*;
use meanders::invariants::*;

fn main() {
    // 4_1^2 row: dt {{2,2},{6,8,2,4}}, short [1,-2,3,-4]
    let code = link_code_from_short(&[1, -2, 3, -4]).unwrap();
    println!("short full code: {code}");
    let dt_of_short = gauss_to_dt(&code).unwrap();
    println!("gauss_to_dt(short) = {dt_of_short}   (paper prints {{{{2,2}},{{6,8,2,4}}}})");
    let d1 = realize_gauss_code(&code).unwrap();
    println!("fp(short): span4={} comps={} w={}", fingerprint(&d1).span4, d1.n_components(), d1.writhe());
    let dt = DTCode::parse("{{2,2},{6,8,2,4}}").unwrap();
    let code2 = dt_to_gauss(&dt).unwrap();
    println!("dt_to_gauss = {code2}");
    let d2 = realize_gauss_code(&code2).unwrap();
    println!("fp(dt): span4={} comps={} w={}", fingerprint(&d2).span4, d2.n_components(), d2.writhe());
    println!("brackets: short={} dt={}", kauffman_bracket(&d1), kauffman_bracket(&d2));
    println!("lk short={:?} dt={:?}", linking_matrix(&d1).unwrap(), linking_matrix(&d2).unwrap());

    // K11n14 knot case
    let e_short = [3, -6, 7, -8, 9, 2, -1, -10, 5, -4, 11];
    let kc = knot_code_from_short(&e_short).unwrap();
    let kdt = gauss_to_dt(&kc).unwrap();
    println!("K11n14: gauss_to_dt(short) = {kdt}");
    println!("        paper dt           = {{{{11}},{{6,10,-16,-22,4,-18,-20,-2,-8,-12,-14}}}}");
    let kd1 = realize_gauss_code(&kc).unwrap();
    let kd2 = realize_gauss_code(&dt_to_gauss(&DTCode::parse("{{11},{6,10,-16,-22,4,-18,-20,-2,-8,-12,-14}}").unwrap()).unwrap()).unwrap();
    println!("fp short = {:?}", fingerprint(&kd1).bracket.terms());
    println!("fp dt    = {:?}", fingerprint(&kd2).bracket.terms());
    println!("det short={} dt={}", determinant(&kd1), determinant(&kd2));
}
