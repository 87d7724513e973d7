//! Gauss and Dowker-Thistlethwaite codes: the textual diagram formats.
//!
//! Gauss codes are brace-enclosed signed integer lists per component, e.g.
//! `{-1,2,-3,1,-2,3}` or `{{1,-2},{-1,2}}`; a negative entry marks an
//! undercrossing at that visit. DT codes are printed `{{sizes},{evens}}`,
//! with negative even entries marking crossings switched away from the
//! alternating assignment.

use crate::{Error, Result};
use std::fmt;

/// A signed Gauss code: one visit sequence per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussCode {
    pub components: Vec<Vec<i32>>,
}

impl GaussCode {
    pub fn knot(entries: Vec<i32>) -> Self {
        GaussCode { components: vec![entries] }
    }

    pub fn n_crossings(&self) -> usize {
        self.components.iter().map(|c| c.len()).sum::<usize>() / 2
    }

    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    /// Check that each label `1..=n` appears exactly twice, once positive and
    /// once negative.
    pub fn validate(&self) -> Result<()> {
        let total: usize = self.components.iter().map(|c| c.len()).sum();
        if total == 0 {
            return Ok(());
        }
        if total % 2 != 0 {
            return Err(Error::malformed("odd number of visits"));
        }
        let n = total / 2;
        let mut pos = vec![0u8; n + 1];
        let mut neg = vec![0u8; n + 1];
        for comp in &self.components {
            for &e in comp {
                let a = e.unsigned_abs() as usize;
                if e == 0 || a > n {
                    return Err(Error::malformed(format!("label {e} out of range 1..={n}")));
                }
                if e > 0 {
                    pos[a] += 1;
                } else {
                    neg[a] += 1;
                }
            }
        }
        for l in 1..=n {
            if pos[l] != 1 || neg[l] != 1 {
                return Err(Error::malformed(format!(
                    "label {l} appears {} times positive and {} negative",
                    pos[l], neg[l]
                )));
            }
        }
        Ok(())
    }

    /// Positions of the two visits of each label: `(over, under)` as
    /// (component, index), where over is the positive entry.
    pub fn visit_positions(&self) -> Vec<((usize, usize), (usize, usize))> {
        let n = self.n_crossings();
        let mut over = vec![(usize::MAX, usize::MAX); n + 1];
        let mut under = vec![(usize::MAX, usize::MAX); n + 1];
        for (ci, comp) in self.components.iter().enumerate() {
            for (pi, &e) in comp.iter().enumerate() {
                let a = e.unsigned_abs() as usize;
                if e > 0 {
                    over[a] = (ci, pi);
                } else {
                    under[a] = (ci, pi);
                }
            }
        }
        (1..=n).map(|l| (over[l], under[l])).collect()
    }

    /// Flip all over/under assignments (the mirror image's code).
    pub fn mirrored(&self) -> Self {
        GaussCode {
            components: self
                .components
                .iter()
                .map(|c| c.iter().map(|&e| -e).collect())
                .collect(),
        }
    }

    /// Relabel crossings: `map[old] = new` (1-based), preserving signs.
    pub fn relabeled(&self, map: &[usize]) -> Self {
        GaussCode {
            components: self
                .components
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|&e| {
                            let a = e.unsigned_abs() as usize;
                            let m = map[a] as i32;
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

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if !t.starts_with('{') || !t.ends_with('}') {
            return Err(Error::malformed("gauss code must be brace-enclosed"));
        }
        let inner = &t[1..t.len() - 1];
        let mut components = Vec::new();
        if inner.trim_start().starts_with('{') {
            let mut depth = 0usize;
            let mut cur = String::new();
            for ch in inner.chars() {
                match ch {
                    '{' => {
                        depth += 1;
                        cur.clear();
                    }
                    '}' => {
                        if depth == 0 {
                            return Err(Error::malformed("unbalanced braces"));
                        }
                        depth -= 1;
                        components.push(parse_int_list(&cur)?);
                    }
                    _ if depth > 0 => cur.push(ch),
                    _ => {}
                }
            }
        } else {
            components.push(parse_int_list(inner)?);
        }
        let code = GaussCode { components };
        code.validate()?;
        Ok(code)
    }
}

fn parse_int_list(s: &str) -> Result<Vec<i32>> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim().replace('\u{2212}', "-");
        if part.is_empty() {
            continue;
        }
        let v: i32 = part
            .parse()
            .map_err(|_| Error::malformed(format!("bad integer {part:?}")))?;
        out.push(v);
    }
    Ok(out)
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_comp = |c: &[i32]| {
            let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        };
        if self.components.len() == 1 {
            write!(f, "{}", fmt_comp(&self.components[0]))
        } else {
            let inner: Vec<String> = self.components.iter().map(|c| fmt_comp(c)).collect();
            write!(f, "{{{}}}", inner.join(","))
        }
    }
}

/// Reconstruct a full knot Gauss code from a short code (the meander part):
/// the omitted first half visits crossings `1..n` in order, each with the
/// sign opposite to the same label in the short part.
pub fn knot_code_from_short(short: &[i32]) -> Result<GaussCode> {
    let n = short.len();
    let mut first = vec![0i32; n];
    for &e in short {
        let a = e.unsigned_abs() as usize;
        if a == 0 || a > n || first[a - 1] != 0 {
            return Err(Error::malformed("short code is not a signed permutation"));
        }
        first[a - 1] = if e > 0 { -(a as i32) } else { a as i32 };
    }
    let mut entries = first;
    entries.extend_from_slice(short);
    let code = GaussCode::knot(entries);
    code.validate()?;
    Ok(code)
}

/// Reconstruct a 2-component link code from a short code: the axis component
/// `(-1)^i i` is prepended as its own component.
pub fn link_code_from_short(short: &[i32]) -> Result<GaussCode> {
    let n = short.len();
    let axis: Vec<i32> = (1..=n as i32).map(|i| if i % 2 == 1 { -i } else { i }).collect();
    let code = GaussCode { components: vec![axis, short.to_vec()] };
    code.validate()?;
    Ok(code)
}

// ---------------------------------------------------------------------------
// DT codes
// ---------------------------------------------------------------------------

/// A Dowker-Thistlethwaite code: per-component entry counts plus the even
/// pairing sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DTCode {
    pub component_sizes: Vec<usize>,
    pub pairing: Vec<i64>,
}

impl DTCode {
    pub fn n_crossings(&self) -> usize {
        self.pairing.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.pairing.len();
        if self.component_sizes.iter().sum::<usize>() != n {
            return Err(Error::malformed("component sizes do not sum to the entry count"));
        }
        let mut seen = vec![false; n + 1];
        for &e in &self.pairing {
            let a = e.unsigned_abs();
            if a == 0 || a % 2 != 0 || a > 2 * n as u64 {
                return Err(Error::malformed(format!("DT entry {e} is not an even value in range")));
            }
            let idx = (a / 2) as usize;
            if seen[idx] {
                return Err(Error::malformed(format!("DT entry {e} repeated")));
            }
            seen[idx] = true;
        }
        Ok(())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.replace('\u{2212}', "-");
        // Accept {{9},{4,...}} and {9},{4,...}.
        let groups = brace_groups(&t)?;
        if groups.len() != 2 {
            return Err(Error::malformed("DT code needs a sizes group and an entries group"));
        }
        let sizes: Vec<usize> = parse_int_list(&groups[0])?
            .into_iter()
            .map(|v| v as usize)
            .collect();
        let pairing: Vec<i64> = parse_int_list(&groups[1])?.into_iter().map(|v| v as i64).collect();
        let dt = DTCode { component_sizes: sizes, pairing };
        dt.validate()?;
        Ok(dt)
    }
}

fn brace_groups(s: &str) -> Result<Vec<String>> {
    let mut groups = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '{' => {
                depth += 1;
                if depth >= 1 {
                    cur.clear();
                }
            }
            '}' => {
                if depth == 0 {
                    return Err(Error::malformed("unbalanced braces in DT code"));
                }
                depth -= 1;
                if !cur.is_empty() || depth == 0 {
                    if !cur.trim().is_empty() {
                        groups.push(cur.clone());
                    }
                    cur.clear();
                }
            }
            _ if depth >= 1 => cur.push(ch),
            _ => {}
        }
    }
    Ok(groups)
}

impl fmt::Display for DTCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.component_sizes.iter().map(|x| x.to_string()).collect();
        let entries: Vec<String> = self.pairing.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{{{}}},{{{}}}}}", sizes.join(","), entries.join(","))
    }
}

/// Convert a Gauss code to its canonical DT code: the lexicographically
/// smallest candidate (by absolute entries, then by signs with `+` before
/// `-`) over all basepoints, orientations, and component orders.
pub fn gauss_to_dt(code: &GaussCode) -> Result<DTCode> {
    code.validate()?;
    let n = code.n_crossings();
    if n == 0 {
        return Err(Error::domain("DT code of a crossingless diagram"));
    }
    let comps = &code.components;
    let c = comps.len();
    let mut best: Option<(Vec<u64>, Vec<bool>, DTCode)> = None;

    // Enumerate component orders (small c), then per-component basepoint and
    // direction.
    let mut order: Vec<usize> = (0..c).collect();
    let mut consider = |order: &[usize], starts: &[usize], dirs: &[bool]| {
        // Build the visit word: (label, over?) numbered 1..2n.
        let mut word: Vec<(usize, bool)> = Vec::with_capacity(2 * n);
        let mut sizes = Vec::with_capacity(c);
        for (k, &ci) in order.iter().enumerate() {
            let comp = &comps[ci];
            let len = comp.len();
            sizes.push(len / 2);
            for t in 0..len {
                let idx = if dirs[k] {
                    (starts[k] + t) % len
                } else {
                    (starts[k] + len - t) % len
                };
                let e = comp[idx];
                word.push((e.unsigned_abs() as usize, e > 0));
            }
        }
        // Positions (1-based) of each label.
        let mut first = vec![0usize; n + 1];
        let mut second = vec![0usize; n + 1];
        for (p, &(l, _)) in word.iter().enumerate() {
            if first[l] == 0 {
                first[l] = p + 1;
            } else {
                second[l] = p + 1;
            }
        }
        // Every label must pair an odd with an even position.
        for l in 1..=n {
            if second[l] == 0 || (first[l] + second[l]) % 2 == 0 {
                return;
            }
        }
        let mut abs = Vec::with_capacity(n);
        let mut negs = Vec::with_capacity(n);
        for p in (1..=2 * n).step_by(2) {
            let (l, over) = word[p - 1];
            let partner = if first[l] == p { second[l] } else { first[l] };
            abs.push(partner as u64);
            // Negative iff the even-position visit is the overpass.
            let even_over = if partner % 2 == 0 {
                // partner is the even visit
                if first[l] == partner { word[first[l] - 1].1 } else { word[second[l] - 1].1 }
            } else {
                unreachable!()
            };
            let _ = over;
            negs.push(even_over);
        }
        let key = (abs.clone(), negs.clone());
        let better = match &best {
            None => true,
            Some((babs, bnegs, _)) => (&key.0, &key.1) < (&babs.clone(), &bnegs.clone()),
        };
        if better {
            let pairing: Vec<i64> = abs
                .iter()
                .zip(&negs)
                .map(|(&a, &neg)| if neg { -(a as i64) } else { a as i64 })
                .collect();
            best = Some((key.0, key.1, DTCode { component_sizes: sizes, pairing }));
        }
    };

    // Iterate over permutations of components (Heap's algorithm for small c).
    let mut perms: Vec<Vec<usize>> = Vec::new();
    fn heap(k: usize, arr: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(arr.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, arr, out);
            if k % 2 == 0 {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    heap(c, &mut order, &mut perms);

    for ord in &perms {
        let lens: Vec<usize> = ord.iter().map(|&ci| comps[ci].len()).collect();
        // Iterate basepoints and directions per component.
        let mut starts = vec![0usize; c];
        let mut dirs = vec![true; c];
        fn iter_rec(
            k: usize,
            c: usize,
            lens: &[usize],
            starts: &mut Vec<usize>,
            dirs: &mut Vec<bool>,
            f: &mut dyn FnMut(&[usize], &[bool]),
        ) {
            if k == c {
                f(starts, dirs);
                return;
            }
            for s in 0..lens[k] {
                starts[k] = s;
                for d in [true, false] {
                    dirs[k] = d;
                    iter_rec(k + 1, c, lens, starts, dirs, f);
                }
            }
        }
        iter_rec(0, c, &lens, &mut starts, &mut dirs, &mut |st, dr| consider(ord, st, dr));
    }

    best.map(|(_, _, dt)| dt)
        .ok_or_else(|| Error::domain("no valid odd/even visit numbering exists"))
}

/// Rebuild a Gauss code from a DT code. Positive entries follow the
/// alternating assignment (odd visits over); negative entries switch that
/// crossing.
pub fn dt_to_gauss(dt: &DTCode) -> Result<GaussCode> {
    dt.validate()?;
    let n = dt.n_crossings();
    let total = 2 * n;
    // crossing i is visited at positions 2i-1 and |pairing[i-1]|.
    let mut label_at = vec![0usize; total + 1];
    let mut switched = vec![false; n + 1];
    for (i, &e) in dt.pairing.iter().enumerate() {
        let odd = 2 * i + 1;
        let even = e.unsigned_abs() as usize;
        if label_at[odd] != 0 || label_at[even] != 0 {
            return Err(Error::malformed("DT pairing reuses a visit position"));
        }
        label_at[odd] = i + 1;
        label_at[even] = i + 1;
        switched[i + 1] = e < 0;
    }
    if label_at[1..].iter().any(|&l| l == 0) {
        return Err(Error::malformed("DT pairing does not cover all visits"));
    }
    let mut components = Vec::new();
    let mut pos = 1usize;
    for &sz in &dt.component_sizes {
        let mut comp = Vec::with_capacity(2 * sz);
        for p in pos..pos + 2 * sz {
            let l = label_at[p] as i32;
            let odd = p % 2 == 1;
            // Odd visits are over unless the crossing is switched.
            let over = odd != switched[l as usize];
            comp.push(if over { l } else { -l });
        }
        components.push(comp);
        pos += 2 * sz;
    }
    let code = GaussCode { components };
    code.validate()?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_roundtrip() {
        let c = GaussCode::parse("{-1, 2, -3, 1, -2, 3}").unwrap();
        assert_eq!(c.to_string(), "{-1,2,-3,1,-2,3}");
        let l = GaussCode::parse("{{1,-2},{-1,2}}").unwrap();
        assert_eq!(l.n_components(), 2);
        assert_eq!(l.to_string(), "{{1,-2},{-1,2}}");
        assert!(GaussCode::parse("{1,2,-1}").is_err());
    }

    #[test]
    fn short_code_reconstruction() {
        // Figure-eight: short {3,-2,1,4,-5} -> full {-1,2,-3,-4,5,3,-2,1,4,-5}.
        let full = knot_code_from_short(&[3, -2, 1, 4, -5]).unwrap();
        assert_eq!(full.components[0], vec![-1, 2, -3, -4, 5, 3, -2, 1, 4, -5]);
        // Hopf link: short {1,-2} -> axis {-1,2} plus the short part.
        let link = link_code_from_short(&[1, -2]).unwrap();
        assert_eq!(link.components, vec![vec![-1, 2], vec![1, -2]]);
    }

    #[test]
    fn dt_parse_roundtrip() {
        let dt = DTCode::parse("{{9},{4,12,16,18,14,2,10,8,6}}").unwrap();
        assert_eq!(dt.component_sizes, vec![9]);
        assert_eq!(dt.to_string(), "{{9},{4,12,16,18,14,2,10,8,6}}");
        let dt2 = DTCode::parse("{5}, {4, -8, 10, -2, 6}").unwrap();
        assert_eq!(dt2.pairing, vec![4, -8, 10, -2, 6]);
    }

    #[test]
    fn paper_9_7_dt_codes() {
        // The three minimal diagrams of 9_7. The first and third DT codes
        // match the printed table exactly; the table prints the second row
        // identical to the first even while calling the diagrams
        // non-isomorphic, and no basepoint/orientation of the second code
        // yields that sequence, so the middle row is pinned to the computed
        // canonical value instead.
        let cases = [
            (
                vec![1, -8, 5, -6, 7, -4, 3, -2, 9],
                "{{9},{4,12,16,18,14,2,10,8,6}}",
            ),
            (
                vec![1, -8, 7, -6, 5, -2, 3, -4, 9],
                "{{9},{4,12,18,16,14,2,8,10,6}}",
            ),
            (
                vec![1, -8, 7, -4, 5, -6, 3, -2, 9],
                "{{9},{4,12,18,16,14,2,10,6,8}}",
            ),
        ];
        for (short, expected) in cases {
            let code = knot_code_from_short(&short).unwrap();
            let dt = gauss_to_dt(&code).unwrap();
            assert_eq!(dt.to_string(), expected, "for short code {short:?}");
        }
        // All three are the same knot.
        let fps: std::collections::HashSet<_> = cases_fps();
        assert_eq!(fps.len(), 1);

        fn cases_fps() -> std::collections::HashSet<crate::invariants::Fingerprint> {
            [
                vec![1, -8, 5, -6, 7, -4, 3, -2, 9],
                vec![1, -8, 7, -6, 5, -2, 3, -4, 9],
                vec![1, -8, 7, -4, 5, -6, 3, -2, 9],
            ]
            .iter()
            .map(|s| {
                let code = knot_code_from_short(s).unwrap();
                let d = crate::diagram::realize_gauss_code(&code).unwrap();
                crate::invariants::fingerprint(&d)
            })
            .collect()
        }
    }

    #[test]
    fn paper_4_1_meander_dt() {
        let code = knot_code_from_short(&[3, -2, 1, 4, -5]).unwrap();
        let dt = gauss_to_dt(&code).unwrap();
        assert_eq!(dt.to_string(), "{{5},{4,-8,10,-2,6}}");
    }

    #[test]
    fn hopf_link_dt() {
        let code = link_code_from_short(&[1, -2]).unwrap();
        let dt = gauss_to_dt(&code).unwrap();
        assert_eq!(dt.to_string(), "{{1,1},{4,2}}");
    }

    #[test]
    fn dt_gauss_roundtrip() {
        for dt_str in ["{{3},{4,6,2}}", "{{5},{4,-8,10,-2,6}}", "{{1,1},{4,2}}", "{{3,3},{8,10,12,2,6,4}}"] {
            let dt = DTCode::parse(dt_str).unwrap();
            let code = dt_to_gauss(&dt).unwrap();
            let dt2 = gauss_to_dt(&code).unwrap();
            assert_eq!(dt.to_string(), dt2.to_string(), "roundtrip of {dt_str}");
        }
    }
}
