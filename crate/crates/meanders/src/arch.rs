//! Arch configurations: noncrossing systems of semicircular arcs on one side
//! of the axis, together with their decorated Dyck-word encoding. These are
//! the building blocks of meanders: an open meander is determined by its
//! upper and lower arch configuration.

use crate::{Error, Result};
use std::fmt;

/// Symbol of a decorated Dyck word. The ordering `Loose < Open < Close`
/// defines the canonical enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DyckSymbol {
    /// Position of a loose end, printed as `1`.
    Loose,
    /// Left foot of an arc, printed as `(`.
    Open,
    /// Right foot of an arc, printed as `)`.
    Close,
}

/// A Dyck word over `{ (, ), 1 }`: removing the `1`s leaves balanced
/// parentheses.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedDyckWord {
    pub symbols: Vec<DyckSymbol>,
}

impl DecoratedDyckWord {
    pub fn parse(s: &str) -> Result<Self> {
        let mut symbols = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '(' => symbols.push(DyckSymbol::Open),
                ')' => symbols.push(DyckSymbol::Close),
                '1' => symbols.push(DyckSymbol::Loose),
                c if c.is_whitespace() => {}
                c => return Err(Error::malformed(format!("unexpected character {c:?} in Dyck word"))),
            }
        }
        Ok(DecoratedDyckWord { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn loose_count(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == DyckSymbol::Loose).count()
    }
}

impl fmt::Display for DecoratedDyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            let c = match s {
                DyckSymbol::Open => '(',
                DyckSymbol::Close => ')',
                DyckSymbol::Loose => '1',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A noncrossing matching (possibly with loose ends) on axis points `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArchConfiguration {
    /// Number of feet on the axis.
    pub n_points: usize,
    /// Arcs as pairs `(i, j)` with `i < j`, sorted by left foot.
    pub arcs: Vec<(usize, usize)>,
    /// Unmatched feet in ascending order (0, 1, or 2 of them).
    pub loose_ends: Vec<usize>,
}

impl ArchConfiguration {
    pub fn new(n_points: usize, mut arcs: Vec<(usize, usize)>, mut loose_ends: Vec<usize>) -> Result<Self> {
        arcs.sort_unstable();
        loose_ends.sort_unstable();
        let a = ArchConfiguration { n_points, arcs, loose_ends };
        a.check()?;
        Ok(a)
    }

    fn check(&self) -> Result<()> {
        if self.loose_ends.len() > 2 {
            return Err(Error::malformed("more than two loose ends"));
        }
        let mut seen = vec![false; self.n_points + 1];
        let mut mark = |i: usize| -> Result<()> {
            if i == 0 || i > self.n_points {
                return Err(Error::malformed(format!("foot {i} out of range")));
            }
            if seen[i] {
                return Err(Error::malformed(format!("foot {i} used twice")));
            }
            seen[i] = true;
            Ok(())
        };
        for &(i, j) in &self.arcs {
            if i >= j {
                return Err(Error::malformed("arc with non-increasing feet"));
            }
            mark(i)?;
            mark(j)?;
        }
        for &i in &self.loose_ends {
            mark(i)?;
        }
        if seen[1..=self.n_points].iter().any(|&s| !s) {
            return Err(Error::malformed("foot neither matched nor loose"));
        }
        for (k, &(i, j)) in self.arcs.iter().enumerate() {
            for &(p, q) in &self.arcs[k + 1..] {
                if i < p && p < j && j < q {
                    return Err(Error::malformed(format!("arcs ({i},{j}) and ({p},{q}) cross")));
                }
            }
        }
        Ok(())
    }

    pub fn is_closed(&self) -> bool {
        self.loose_ends.is_empty()
    }

    /// Partner foot across this configuration, if `foot` is matched.
    pub fn partner(&self, foot: usize) -> Option<usize> {
        for &(i, j) in &self.arcs {
            if i == foot {
                return Some(j);
            }
            if j == foot {
                return Some(i);
            }
        }
        None
    }

    /// Maximal nesting depth of the arcs.
    pub fn nesting_depth(&self) -> usize {
        let mut depth = 0usize;
        let mut max = 0usize;
        for s in self.to_word().symbols {
            match s {
                DyckSymbol::Open => {
                    depth += 1;
                    max = max.max(depth);
                }
                DyckSymbol::Close => depth -= 1,
                DyckSymbol::Loose => {}
            }
        }
        max
    }

    pub fn to_word(&self) -> DecoratedDyckWord {
        dyck_encode(self)
    }
}

/// Leftmost foot of an arc becomes `(`, rightmost `)`, loose ends `1`.
pub fn dyck_encode(a: &ArchConfiguration) -> DecoratedDyckWord {
    let mut symbols = vec![DyckSymbol::Loose; a.n_points];
    for &(i, j) in &a.arcs {
        symbols[i - 1] = DyckSymbol::Open;
        symbols[j - 1] = DyckSymbol::Close;
    }
    DecoratedDyckWord { symbols }
}

/// Inverse of [`dyck_encode`]: arcs are matched by parenthesis pairing,
/// ignoring loose symbols.
pub fn dyck_decode(w: &DecoratedDyckWord) -> Result<ArchConfiguration> {
    let mut stack = Vec::new();
    let mut arcs = Vec::new();
    let mut loose = Vec::new();
    for (idx, &s) in w.symbols.iter().enumerate() {
        let foot = idx + 1;
        match s {
            DyckSymbol::Open => stack.push(foot),
            DyckSymbol::Close => {
                let i = stack
                    .pop()
                    .ok_or_else(|| Error::malformed("unbalanced Dyck word: unmatched ')'"))?;
                arcs.push((i, foot));
            }
            DyckSymbol::Loose => loose.push(foot),
        }
    }
    if !stack.is_empty() {
        return Err(Error::malformed("unbalanced Dyck word: unmatched '('"));
    }
    ArchConfiguration::new(w.symbols.len(), arcs, loose)
}

/// All arch configurations with `n_arcs` arcs and `loose` loose ends, in
/// lexicographic order of their decorated Dyck words (`1 < ( < )`).
pub fn enumerate_arch_configurations(n_arcs: usize, loose: usize) -> Vec<ArchConfiguration> {
    assert!(loose <= 2, "at most two loose ends");
    let mut out = Vec::new();
    let len = 2 * n_arcs + loose;
    let mut symbols = Vec::with_capacity(len);
    fn rec(
        symbols: &mut Vec<DyckSymbol>,
        len: usize,
        depth: usize,
        opens_left: usize,
        loose_left: usize,
        out: &mut Vec<ArchConfiguration>,
    ) {
        if symbols.len() == len {
            if depth == 0 {
                let w = DecoratedDyckWord { symbols: symbols.clone() };
                out.push(dyck_decode(&w).expect("generated word is valid"));
            }
            return;
        }
        if loose_left > 0 {
            symbols.push(DyckSymbol::Loose);
            rec(symbols, len, depth, opens_left, loose_left - 1, out);
            symbols.pop();
        }
        if opens_left > 0 {
            symbols.push(DyckSymbol::Open);
            rec(symbols, len, depth + 1, opens_left - 1, loose_left, out);
            symbols.pop();
        }
        if depth > 0 {
            symbols.push(DyckSymbol::Close);
            rec(symbols, len, depth - 1, opens_left, loose_left, out);
            symbols.pop();
        }
    }
    rec(&mut symbols, len, 0, n_arcs, loose, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalan(n: usize) -> u64 {
        // C(n) = (2n)! / (n! (n+1)!)
        let mut c = 1u64;
        for i in 0..n as u64 {
            c = c * 2 * (2 * i + 1) / (i + 2);
        }
        c
    }

    /// Independent oracle: enumerate all perfect matchings of 2n points and
    /// filter by the noncrossing predicate.
    fn brute_force_noncrossing_matchings(n_arcs: usize) -> u64 {
        fn rec(unmatched: &mut Vec<usize>, arcs: &mut Vec<(usize, usize)>, count: &mut u64) {
            if unmatched.is_empty() {
                *count += 1;
                return;
            }
            let i = unmatched[0];
            for k in 1..unmatched.len() {
                let j = unmatched[k];
                let crossing = arcs
                    .iter()
                    .any(|&(p, q)| (p < i && i < q && q < j) || (i < p && p < j && j < q));
                if crossing {
                    continue;
                }
                let mut rest: Vec<usize> = unmatched[1..].to_vec();
                rest.remove(k - 1);
                arcs.push((i, j));
                let saved = std::mem::replace(unmatched, rest);
                rec(unmatched, arcs, count);
                *unmatched = saved;
                arcs.pop();
            }
        }
        let mut unmatched: Vec<usize> = (1..=2 * n_arcs).collect();
        let mut count = 0;
        rec(&mut unmatched, &mut Vec::new(), &mut count);
        count
    }

    #[test]
    fn closed_counts_match_catalan_and_brute_force() {
        for n in 0..=8 {
            let enumerated = enumerate_arch_configurations(n, 0).len() as u64;
            assert_eq!(enumerated, catalan(n), "catalan mismatch at n={n}");
            assert_eq!(enumerated, brute_force_noncrossing_matchings(n), "brute force mismatch at n={n}");
        }
    }

    #[test]
    fn empty_case() {
        let v = enumerate_arch_configurations(0, 0);
        assert_eq!(v.len(), 1);
        assert!(v[0].arcs.is_empty());
    }

    #[test]
    fn enumeration_order_is_word_lex() {
        let words: Vec<String> = enumerate_arch_configurations(3, 0)
            .iter()
            .map(|a| a.to_word().to_string())
            .collect();
        assert_eq!(words, vec!["((()))", "(()())", "(())()", "()(())", "()()()"]);
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        for (arcs, loose) in [(4, 0), (3, 1), (3, 2)] {
            let v = enumerate_arch_configurations(arcs, loose);
            let set: std::collections::HashSet<_> = v.iter().map(|a| a.to_word().to_string()).collect();
            assert_eq!(set.len(), v.len());
        }
    }

    #[test]
    fn encode_examples() {
        let single = ArchConfiguration::new(2, vec![(1, 2)], vec![]).unwrap();
        assert_eq!(dyck_encode(&single).to_string(), "()");
        let nested = ArchConfiguration::new(4, vec![(1, 4), (2, 3)], vec![]).unwrap();
        assert_eq!(dyck_encode(&nested).to_string(), "(())");
    }

    #[test]
    fn decode_examples() {
        let w = DecoratedDyckWord::parse("()").unwrap();
        assert_eq!(dyck_decode(&w).unwrap().arcs, vec![(1, 2)]);
        let w = DecoratedDyckWord::parse("()()").unwrap();
        assert_eq!(dyck_decode(&w).unwrap().arcs, vec![(1, 2), (3, 4)]);
        let w = DecoratedDyckWord::parse(")(").unwrap();
        assert!(dyck_decode(&w).is_err());
    }

    #[test]
    fn roundtrip_on_enumerated() {
        for (arcs, loose) in [(0, 0), (2, 1), (3, 0), (3, 2), (4, 0)] {
            for a in enumerate_arch_configurations(arcs, loose) {
                let w = dyck_encode(&a);
                assert_eq!(dyck_decode(&w).unwrap(), a);
            }
        }
    }
}
