// Independent brute-force at (8,3) and (10,3): enumerate ALL component
// structures without canonicalization, realize, apply filters, count types.
use meanders::diagram::*;
use meanders::invariants::*;
use std::collections::HashSet;

fn main() {
    for (n, c) in [(8usize, 3usize), (10, 3)] {
        let t = std::time::Instant::now();
        let mut types: HashSet<Fingerprint> = HashSet::new();
        let mut types_nofilter: HashSet<Fingerprint> = HashSet::new();
        // crude enumeration: distribute 2n visits into c cyclic sequences
        // (sizes any even >= 2), each label twice on different comps.
        let mut comps: Vec<Vec<u16>> = vec![Vec::new(); c];
        let mut remaining: Vec<usize> = Vec::new();
        // sizes
        fn sizes(n: usize, c: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let total = 2 * n;
            for a in (2..=total).step_by(2) {
                for b in (2..=total).step_by(2) {
                    if total >= a + b + 2 {
                        let d = total - a - b;
                        if d >= 2 && d % 2 == 0 {
                            out.push(vec![a, b, d]);
                        }
                    }
                }
            }
            out
        }
        let aml: HashSet<Fingerprint> = {
            let mut s = HashSet::new();
            for m in (2..n).step_by(2) {
                for r in meanders::classify::census_meander_links(m).unwrap().representatives {
                    s.insert(r.fingerprint);
                }
            }
            s
        };
        for sz in sizes(n, c) {
            comps.iter_mut().for_each(|v| v.clear());
            remaining.clear();
            rec(n, &sz, 0, 0, &mut vec![0u8; n + 1], &mut vec![usize::MAX; n + 1], &mut comps, &mut 1,
                &mut |shadow: &Vec<Vec<u16>>| {
                // alternating code: find phases by propagation, or skip
                let code = alt_code(shadow, n);
                let code = match code { Some(cd) => cd, None => return };
                let d = match realize_gauss_code(&code) { Ok(d) => d, Err(_) => return };
                let f = d.analyze();
                if !(f.reduced && f.prime && f.components_simple && f.alternating) { return; }
                let fp = fingerprint(&d);
                types_nofilter.insert(fp.clone());
                for i in 0..c {
                    for j in i + 1..c {
                        match pair_sub(&d, i, j) {
                            None => return,
                            Some(sub) => { if !aml.contains(&fingerprint(&sub)) { return; } }
                        }
                    }
                }
                types.insert(fp);
            });
        }
        println!("({n},{c}): filtered={} unfiltered-prime-alt={} in {:?}", types.len(), types_nofilter.len(), t.elapsed());
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
            let [(c1, p1), (c2, p2)] = [occ[l][0], occ[l][1]];
            for ((x, px), (y, py)) in [((c1, p1), (c2, p2)), ((c2, p2), (c1, p1))] {
                if phase[x] != u8::MAX && phase[y] == u8::MAX {
                    phase[y] = 1 ^ ((px % 2) as u8 ^ (py % 2) as u8 ^ phase[x]);
                    prog = true;
                } else if phase[x] != u8::MAX && phase[y] != u8::MAX {
                    if phase[y] != 1 ^ ((px % 2) as u8 ^ (py % 2) as u8 ^ phase[x]) { return None; }
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

fn pair_sub(d: &Diagram, i: usize, j: usize) -> Option<Diagram> {
    return meanders::classify::pair_subdiagram(d, i, j);
}
#[allow(dead_code)]
fn pair_sub_unused(d: &Diagram, i: usize, j: usize) -> Option<Diagram> {
    let comps = &d.code().components;
    let n = d.n_crossings();
    let mut comp_of = vec![[usize::MAX; 2]; n + 1];
    for (ci, comp) in comps.iter().enumerate() {
        for &e in comp {
            let l = e.unsigned_abs() as usize;
            if comp_of[l][0] == usize::MAX { comp_of[l][0] = ci } else { comp_of[l][1] = ci }
        }
    }
    let keep = |l: usize| { let [a, b] = comp_of[l]; (a == i || a == j) && (b == i || b == j) };
    let labels: Vec<usize> = (1..=n).filter(|&l| keep(l)).collect();
    if labels.is_empty() { return None; }
    let mut map = vec![0usize; n + 1];
    for (k, &l) in labels.iter().enumerate() { map[l] = k + 1; }
    let sub: Vec<Vec<i32>> = [i, j].iter().map(|&ci| comps[ci].iter().filter(|e| keep(e.unsigned_abs() as usize))
        .map(|&e| { let m = map[e.unsigned_abs() as usize] as i32; if e > 0 { m } else { -m } }).collect()).collect();
    let signs: Vec<i8> = labels.iter().map(|&l| d.signs()[l - 1]).collect();
    let _ = (sub, signs);
    None
}

#[allow(clippy::too_many_arguments)]
fn rec(
    n: usize, sz: &[usize], comp: usize, pos: usize,
    used: &mut Vec<u8>, intro: &mut Vec<usize>, comps: &mut Vec<Vec<u16>>, next_new: &mut usize,
    f: &mut dyn FnMut(&Vec<Vec<u16>>),
) {
    let c = sz.len();
    if comp == c {
        if *next_new == n + 1 && used[1..=n].iter().all(|&u| u == 2) { f(comps); }
        return;
    }
    if pos == sz[comp] {
        rec(n, sz, comp + 1, 0, used, intro, comps, next_new, f);
        return;
    }
    // close any open label from an earlier comp
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
