use meanders::diagram::*;

fn main() {
    let cases: Vec<(&str, Vec<i32>, &str)> = vec![
        ("K11n14", vec![3,-6,7,-8,9,2,-1,-10,5,-4,11], "{{11},{6,10,-16,-22,4,-18,-20,-2,-8,-12,-14}}"),
        ("K11n15", vec![3,6,-7,8,-9,2,-1,10,5,-4,11], "{{11},{6,10,-16,-22,4,18,20,-2,8,12,14}}"),
        ("K11n19", vec![-3,6,-7,8,-9,2,-1,-10,5,-4,11], "{{11},{6,10,-16,-22,4,18,20,2,-8,12,14}}"),
        ("K11n37", vec![-5,-8,9,2,-3,4,-1,-10,7,-6,-11], "{{11},{6,-10,-18,-2,-16,20,22,4,-8,14,12}}"),
        ("K11n38", vec![-3,2,-1,-8,7,-4,-11,10,5,-6,-9], "{{11},{8,-12,16,20,-2,18,-22,6,4,10,-14}}"),
        ("K11n51", vec![5,-8,9,2,-3,4,-1,-10,7,-6,11], "{{11},{6,-10,-18,-2,-16,20,22,-4,-8,14,12}}"),
        ("K11n58", vec![5,-8,9,2,-3,4,-1,10,7,-6,-11], "{{11},{6,-10,18,-2,-16,20,22,4,-8,14,12}}"),
        ("K11n62", vec![5,-8,9,4,-3,2,-1,10,7,-6,-11], "{{11},{6,-10,18,-2,-16,22,20,4,-8,14,12}}"),
        ("K11n66", vec![-1,2,-3,-6,9,-10,5,-4,11,-8,7], "{{11},{8,-12,16,18,-22,-4,-20,-2,6,-10,-14}}"),
        ("K11n68", vec![5,-8,9,4,-3,2,-1,-10,7,-6,11], "{{11},{6,-10,-18,-2,-16,22,20,-4,-8,14,12}}"),
        ("K11n82", vec![-1,-8,7,2,-3,4,-11,10,5,-6,9], "{{11},{6,12,16,-22,18,4,-20,-2,8,10,-14}}"),
    ];
    for (name, short, dt) in cases {
        let code = knot_code_from_short(&short).unwrap();
        let own = gauss_to_dt(&code).unwrap().to_string();
        let mir = gauss_to_dt(&code.mirrored()).unwrap().to_string();
        let status = if own == dt { "own" } else if mir == dt { "MIRROR" } else { "NEITHER" };
        println!("{name}: {status}");
        if status == "NEITHER" {
            println!("   paper:  {dt}");
            println!("   own:    {own}");
            println!("   mirror: {mir}");
        }
    }
}
