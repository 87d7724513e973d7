//! Reidemeister move generators on Gauss codes, used by the invariance test
//! harness. Every generated move keeps the diagram realizable and the link
//! type fixed.

use crate::diagram::{realize_gauss_code, GaussCode};

/// Deterministic splitmix64 stream; the harness needs reproducible walks,
/// not statistical quality.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.wrapping_add(0x9E3779B97F4A7C15))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n.max(1) as u64) as usize
    }
}

fn renumber(code: &GaussCode) -> GaussCode {
    // Compact labels to 1..n preserving signs.
    let mut labels: Vec<u32> = code
        .components
        .iter()
        .flatten()
        .map(|e| e.unsigned_abs())
        .collect();
    labels.sort_unstable();
    labels.dedup();
    let max = *labels.last().unwrap_or(&0) as usize;
    let mut map = vec![0usize; max + 1];
    for (i, &l) in labels.iter().enumerate() {
        map[l as usize] = i + 1;
    }
    GaussCode {
        components: code
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&e| {
                        let m = map[e.unsigned_abs() as usize] as i32;
                        if e > 0 {
                            m
                        } else {
                            -m
                        }
                    })
                    .collect()
            })
            .collect(),
    }
}

/// Insert a curl: a new crossing visited twice in a row.
pub fn r1_insert(code: &GaussCode, comp: usize, gap: usize, over_first: bool) -> GaussCode {
    let mut out = code.clone();
    let x = code.n_crossings() as i32 + 1;
    let pair = if over_first { [x, -x] } else { [-x, x] };
    let c = &mut out.components[comp];
    let gap = gap % (c.len() + 1).max(1);
    c.splice(gap..gap, pair);
    out
}

/// Remove a curl if one exists at the hinted position; returns None when the
/// component has no curl.
pub fn r1_remove(code: &GaussCode, comp: usize, hint: usize) -> Option<GaussCode> {
    let c = &code.components[comp];
    let len = c.len();
    if len < 2 {
        return None;
    }
    for off in 0..len {
        let i = (hint + off) % len;
        let j = (i + 1) % len;
        if c[i] == -c[j] && c[i].unsigned_abs() == c[j].unsigned_abs() {
            let mut out = code.clone();
            let cc = &mut out.components[comp];
            if j > i {
                cc.remove(j);
                cc.remove(i);
            } else {
                cc.remove(i);
                cc.remove(j);
            }
            return Some(renumber(&out));
        }
    }
    None
}

/// Try an R2 poke: insert `[a, b]` into one gap and `[-b, -a]` (or the other
/// order) into another; accept the first realizable candidate. For connected
/// diagrams a realizable insertion of this sign pattern always creates an
/// empty bigon, so it is a genuine second Reidemeister move.
pub fn r2_insert(code: &GaussCode, rng: &mut Rng) -> Option<GaussCode> {
    let n = code.n_crossings() as i32;
    let (a, b) = (n + 1, n + 2);
    let k = code.components.len();
    for _ in 0..40 {
        let c1 = rng.below(k);
        let c2 = rng.below(k);
        let g1 = rng.below(code.components[c1].len() + 1);
        let g2 = rng.below(code.components[c2].len() + 1);
        if c1 == c2 && g1 == g2 {
            continue;
        }
        for order in [[-b, -a], [-a, -b]] {
            let mut out = code.clone();
            // Insert the later gap first so indices stay valid.
            let ins = |out: &mut GaussCode, comp: usize, gap: usize, vals: [i32; 2]| {
                out.components[comp].splice(gap..gap, vals);
            };
            if c1 == c2 {
                let (first, second, v1, v2) = if g1 > g2 {
                    (g1, g2, [a, b], order)
                } else {
                    (g2, g1, order, [a, b])
                };
                ins(&mut out, c1, first, v1);
                ins(&mut out, c1, second, v2);
            } else {
                ins(&mut out, c1, g1, [a, b]);
                ins(&mut out, c2, g2, order);
            }
            if realize_gauss_code(&out).is_ok() {
                return Some(out);
            }
        }
    }
    None
}

/// Undo an R2 bigon: two crossings adjacent on both strands with one strand
/// over at both.
pub fn r2_remove(code: &GaussCode, rng: &mut Rng) -> Option<GaussCode> {
    // Collect adjacent pairs per component.
    let mut candidates = Vec::new();
    for (ci, c) in code.components.iter().enumerate() {
        let len = c.len();
        for i in 0..len {
            let j = (i + 1) % len;
            let (x, y) = (c[i], c[j]);
            if x > 0 && y > 0 {
                candidates.push((ci, i, x as u32, y as u32));
            }
        }
    }
    if candidates.is_empty() {
        return None;
    }
    let start = rng.below(candidates.len());
    for off in 0..candidates.len() {
        let (ci, i, x, y) = candidates[(start + off) % candidates.len()];
        // Look for [-y, -x] adjacent somewhere.
        for (cj, c) in code.components.iter().enumerate() {
            let len = c.len();
            for p in 0..len {
                let q = (p + 1) % len;
                if c[p] == -(y as i32) && c[q] == -(x as i32) {
                    if cj == ci {
                        // Avoid overlapping occurrences.
                        let used = [i, (i + 1) % len];
                        if used.contains(&p) || used.contains(&q) {
                            continue;
                        }
                    }
                    let mut out = code.clone();
                    for comp in &mut out.components {
                        comp.retain(|e| {
                            let l = e.unsigned_abs();
                            l != x && l != y
                        });
                    }
                    return Some(renumber(&out));
                }
            }
        }
    }
    None
}

/// Apply a third Reidemeister move: three crossings pairwise adjacent in the
/// code (a triangle) with one strand passing over or under both others; the
/// move swaps each adjacent pair.
pub fn r3(code: &GaussCode, rng: &mut Rng) -> Option<GaussCode> {
    // Adjacent pairs indexed by unordered label pair.
    #[derive(Clone, Copy)]
    struct Adj {
        comp: usize,
        pos: usize, // pair (pos, pos+1 mod len)
        e1: i32,
        e2: i32,
    }
    let mut pairs: Vec<Adj> = Vec::new();
    for (ci, c) in code.components.iter().enumerate() {
        let len = c.len();
        for i in 0..len {
            let j = (i + 1) % len;
            if c[i].unsigned_abs() != c[j].unsigned_abs() {
                pairs.push(Adj { comp: ci, pos: i, e1: c[i], e2: c[j] });
            }
        }
    }
    let m = pairs.len();
    if m < 3 {
        return None;
    }
    let start = rng.below(m);
    for o1 in 0..m {
        let p1 = pairs[(start + o1) % m];
        let (x, y) = (p1.e1.unsigned_abs(), p1.e2.unsigned_abs());
        for p2 in &pairs {
            let (a, b) = (p2.e1.unsigned_abs(), p2.e2.unsigned_abs());
            if !(a == y || b == y) || (a == x || b == x) || (p2.comp == p1.comp && p2.pos == p1.pos) {
                continue;
            }
            let z = if a == y { b } else { a };
            if z == x {
                continue;
            }
            for p3 in &pairs {
                let (c1, c2) = (p3.e1.unsigned_abs(), p3.e2.unsigned_abs());
                let covers = (c1 == z && c2 == x) || (c1 == x && c2 == z);
                if !covers {
                    continue;
                }
                // Distinct visit slots: the 6 entries must be the 6 distinct
                // visits of x, y, z.
                let ids = [
                    (p1.comp, p1.pos),
                    (p2.comp, p2.pos),
                    (p3.comp, p3.pos),
                ];
                if ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2] {
                    continue;
                }
                let entries = [p1.e1, p1.e2, p2.e1, p2.e2, p3.e1, p3.e2];
                let mut seen = std::collections::HashSet::new();
                let all_distinct = entries.iter().all(|e| seen.insert(*e));
                if !all_distinct {
                    continue;
                }
                // One strand must be over both or under both its crossings.
                let strands = [&p1, p2, p3];
                let movable = strands
                    .iter()
                    .any(|s| (s.e1 > 0 && s.e2 > 0) || (s.e1 < 0 && s.e2 < 0));
                if !movable {
                    continue;
                }
                let mut out = code.clone();
                for s in strands {
                    let len = out.components[s.comp].len();
                    let i = s.pos;
                    let j = (i + 1) % len;
                    out.components[s.comp].swap(i, j);
                }
                if realize_gauss_code(&out).is_ok() {
                    return Some(out);
                }
            }
        }
    }
    None
}
