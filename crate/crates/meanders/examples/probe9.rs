use meanders::catalog::catalog;
use meanders::diagram::*;
use meanders::invariants::*;

fn all_ordered_forms(code: &GaussCode) -> Vec<GaussCode> {
    let seq = &code.components[0];
    let len = seq.len();
    let n = len / 2;
    let mut out = Vec::new();
    for start in 0..len {
        for dir in [true, false] {
            let rot: Vec<i32> = (0..len)
                .map(|i| if dir { seq[(start + i) % len] } else { seq[(start + len - i) % len] })
                .collect();
            let mut map = vec![0usize; n + 1];
            let mut ok = true;
            for (i, e) in rot.iter().take(n).enumerate() {
                let a = e.unsigned_abs() as usize;
                if map[a] != 0 { ok = false; break; }
                map[a] = i + 1;
            }
            if !ok { continue; }
            out.push(GaussCode::knot(rot).relabeled(&map));
        }
    }
    out.sort(); out.dedup();
    out
}

fn main() {
    let c = catalog();
    let g = GaussCode::knot(c.special.ordered_codes["9_2"].clone());
    let unknot = Fingerprint::unknot();
    let gm_codes = all_ordered_forms(&g.mirrored());
    println!("{} ordered forms of mirror(9_2)", gm_codes.len());
    for m in &gm_codes {
        if let Ok(d) = meanders::algebra::ogc_product_knots(&g, m) {
            let fp = fingerprint(&d);
            let tag = if fp == unknot { "UNKNOT" } else { &format!("span4={}", fp.span4) };
            println!("  G'2={:?} -> {tag}", &m.components[0][9..]);
        }
    }
}
