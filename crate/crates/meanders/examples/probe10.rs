use meanders::classify::*;
use meanders::diagram::*;
use meanders::invariants::*;
use std::collections::{HashMap, HashSet};

// Re-run the (10,3) census but record excluded candidates and why.
fn main() {
    let n = 10usize;
    let c = 3usize;
    let aml: HashSet<Fingerprint> = {
        let mut s = HashSet::new();
        for m in (2..=n - 2).step_by(2) {
            for r in census_meander_links(m).unwrap().representatives {
                s.insert(r.fingerprint);
            }
        }
        s
    };
    println!("AML fps up to {}: {}", n - 2, aml.len());
    let mut passed: HashMap<Fingerprint, String> = HashMap::new();
    let mut excluded_pairwise: HashMap<Fingerprint, (String, Vec<Option<(u32, bool)>>)> = HashMap::new();
    meanders::classify::debug_multi_shadows(n, c, |code| {
        let d = match realize_gauss_code(code) {
            Ok(d) => d,
            Err(_) => return,
        };
        let f = d.analyze();
        if !(f.reduced && f.prime && f.components_simple && f.alternating) {
            return;
        }
        let fp = fingerprint(&d);
        let mut ok = true;
        let mut pairinfo = Vec::new();
        for i in 0..c {
            for j in i + 1..c {
                match pair_subdiagram(&d, i, j) {
                    None => {
                        ok = false;
                        pairinfo.push(None);
                    }
                    Some(sub) => {
                        let sfp = fingerprint(&sub);
                        let inset = aml.contains(&sfp);
                        if !inset {
                            ok = false;
                        }
                        pairinfo.push(Some((sfp.span4, inset)));
                    }
                }
            }
        }
        if ok {
            passed.insert(fp, code.to_string());
        } else {
            excluded_pairwise.entry(fp).or_insert((code.to_string(), pairinfo));
        }
    });
    println!("passed: {} types", passed.len());
    // excluded types that never passed via any diagram
    let mut only_excluded = 0;
    for (fp, (code, info)) in &excluded_pairwise {
        if !passed.contains_key(fp) {
            only_excluded += 1;
            if only_excluded <= 12 {
                println!("excluded type (span4={}): {code} pairs={info:?}", fp.span4);
            }
        }
    }
    println!("types seen only among excluded: {only_excluded}");
}
