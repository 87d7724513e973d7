use meanders::diagram::*;

/// All DT strings over every basepoint/orientation (and the mirror).
fn all_dt_strings(code: &GaussCode) -> std::collections::HashSet<String> {
    // brute force: rotate/reverse the single component, compute dt of each
    // *fixed* numbering by replicating the pairing logic via gauss_to_dt on
    // the rotated code is wrong (it canonicalizes). Instead enumerate by hand.
    let mut out = std::collections::HashSet::new();
    for base in [code.clone(), code.mirrored()] {
        let seq = &base.components[0];
        let len = seq.len();
        let n = len / 2;
        for start in 0..len {
            for dir in [true, false] {
                let word: Vec<i32> = (0..len)
                    .map(|i| {
                        let idx = if dir { (start + i) % len } else { (start + len - i) % len };
                        seq[idx]
                    })
                    .collect();
                let mut first = vec![0usize; n + 1];
                let mut second = vec![0usize; n + 1];
                let mut over_at = vec![false; 2 * n + 1];
                for (p, &e) in word.iter().enumerate() {
                    let l = e.unsigned_abs() as usize;
                    over_at[p + 1] = e > 0;
                    if first[l] == 0 { first[l] = p + 1 } else { second[l] = p + 1 }
                }
                if (1..=n).any(|l| (first[l] + second[l]) % 2 == 0) { continue; }
                let mut entries = Vec::new();
                let mut ok = true;
                for p in (1..=2 * n).step_by(2) {
                    let l = word[p - 1].unsigned_abs() as usize;
                    let partner = if first[l] == p { second[l] } else { first[l] };
                    if partner % 2 != 0 { ok = false; break; }
                    let neg = over_at[partner];
                    entries.push(if neg { -(partner as i64) } else { partner as i64 });
                }
                if ok {
                    out.insert(format!("{}", DTCode { component_sizes: vec![n], pairing: entries }));
                }
            }
        }
    }
    out
}

fn main() {
    let cases: Vec<(&str, Vec<i32>, &str)> = vec![
        ("K11n14", vec![3,-6,7,-8,9,2,-1,-10,5,-4,11], "{{11},{6,10,-16,-22,4,-18,-20,-2,-8,-12,-14}}"),
        ("K11n51", vec![5,-8,9,2,-3,4,-1,-10,7,-6,11], "{{11},{6,-10,-18,-2,-16,20,22,-4,-8,14,12}}"),
        ("K11n66", vec![-1,2,-3,-6,9,-10,5,-4,11,-8,7], "{{11},{8,-12,16,18,-22,-4,-20,-2,6,-10,-14}}"),
        ("K11n82", vec![-1,-8,7,2,-3,4,-11,10,5,-6,9], "{{11},{6,12,16,-22,18,4,-20,-2,8,10,-14}}"),
    ];
    for (name, short, dt) in cases {
        let code = knot_code_from_short(&short).unwrap();
        let set = all_dt_strings(&code);
        println!("{name}: paper DT in candidate set: {}", set.contains(dt));
    }
}
