use meanders::diagram::*;
use meanders::invariants::*;
use std::collections::HashMap;

fn main() {
    let n = 8usize;
    let c = 3usize;
    let mut canonical: HashMap<Fingerprint, String> = HashMap::new();
    meanders::classify::debug_multi_shadows(n, c, |code| {
        if let Ok(d) = realize_gauss_code(code) {
            let f = d.analyze();
            if f.reduced && f.prime && f.components_simple && f.alternating {
                canonical.entry(fingerprint(&d)).or_insert_with(|| code.to_string());
            }
        }
    });
    // The brute force from probe8, inline, collecting codes per type.
    let mut brute: HashMap<Fingerprint, String> = HashMap::new();
    let mut comps: Vec<Vec<u16>> = vec![Vec::new(); c];
    for a in (2..=2 * n).step_by(2) {
        for b in (2..=2 * n).step_by(2) {
            if 2 * n < a + b + 2 { continue; }
            let d = 2 * n - a - b;
            if d < 2 || d % 2 != 0 { continue; }
            let sz = vec![a, b, d];
            comps.iter_mut().for_each(|v| v.clear());
            rec(n, &sz, 0, 0, &mut vec![0u8; n + 1], &mut vec![usize::MAX; n + 1], &mut comps, &mut 1, &mut |shadow: &Vec<Vec<u16>>| {
                if let Some(code) = alt_code(shadow, n) {
                    if let Ok(di) = realize_gauss_code(&code) {
                        let f = di.analyze();
                        if f.reduced && f.prime && f.components_simple && f.alternating {
                            brute.entry(fingerprint(&di)).or_insert_with(|| code.to_string());
                        }
                    }
                }
            });
        }
    }
    println!("canonical {} brute {}", canonical.len(), brute.len());
    for (fp, code) in &brute {
        if !canonical.contains_key(fp) {
            println!("MISSING from canonical: {code} (span4={})", fp.span4);
        }
    }
}

fn alt_code(shadow: &Vec<Vec<u16>>, n: usize) -> Option<GaussCode> {
    let c = shadow.len();
    let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
    for (ci, comp) in shadow.iter().enumerate() {
        for (pi, &l) in comp.iter().enumerate() {
            occ[l as usize].push((ci, pi));
        }
    }
    let mut phase = vec![u8::MAX; c];
    phase[0] = 0;
    loop {
        let mut prog = false;
        for l in 1..=n {
            if occ[l].len() != 2 { return None; }
            let [(c1, p1), (c2, p2)] = [occ[l][0], occ[l][1]];
            for ((x, px), (y, py)) in [((c1, p1), (c2, p2)), ((c2, p2), (c1, p1))] {
                if phase[x] != u8::MAX && phase[y] == u8::MAX {
                    phase[y] = 1 ^ ((px % 2) as u8 ^ (py % 2) as u8 ^ phase[x]);
                    prog = true;
                } else if phase[x] != u8::MAX && phase[y] != u8::MAX && phase[y] != 1 ^ ((px % 2) as u8 ^ (py % 2) as u8 ^ phase[x]) {
                    return None;
                }
            }
        }
        if !prog { break; }
    }
    if phase.iter().any(|&p| p == u8::MAX) { return None; }
    Some(GaussCode {
        components: shadow.iter().enumerate().map(|(ci, comp)| comp.iter().enumerate().map(|(pi, &l)| {
            if ((pi % 2) as u8 ^ phase[ci]) == 1 { l as i32 } else { -(l as i32) }
        }).collect()).collect(),
    })
}

#[allow(clippy::too_many_arguments)]
fn rec(n: usize, sz: &[usize], comp: usize, pos: usize, used: &mut Vec<u8>, intro: &mut Vec<usize>,
       comps: &mut Vec<Vec<u16>>, next_new: &mut usize, f: &mut dyn FnMut(&Vec<Vec<u16>>)) {
    let c = sz.len();
    if comp == c {
        if *next_new == n + 1 && used[1..=n].iter().all(|&u| u == 2) { f(comps); }
        return;
    }
    if pos == sz[comp] {
        rec(n, sz, comp + 1, 0, used, intro, comps, next_new, f);
        return;
    }
    for l in 1..=n {
        if used[l] == 1 && intro[l] < comp && !comps[comp].contains(&(l as u16)) {
            used[l] = 2;
            comps[comp].push(l as u16);
            rec(n, sz, comp, pos + 1, used, intro, comps, next_new, f);
            comps[comp].pop();
            used[l] = 1;
        }
    }
    if *next_new <= n && comp + 1 < c {
        let l = *next_new;
        used[l] = 1;
        intro[l] = comp;
        comps[comp].push(l as u16);
        *next_new += 1;
        rec(n, sz, comp, pos + 1, used, intro, comps, next_new, f);
        *next_new -= 1;
        comps[comp].pop();
        intro[l] = usize::MAX;
        used[l] = 0;
    }
}
