//! Exact polynomial invariants: the Kauffman bracket (via a transfer-matrix
//! sweep for axis-aligned layouts and a brute-force state sum for arbitrary
//! diagrams), the writhe-normalized fingerprint used as the knot/link-type
//! key, determinants, and linking matrices.

pub mod sweep {
    //! Transfer-matrix evaluation of the Kauffman bracket.
    //!
    //! A diagram with an axis-aligned layout compiles into a sequence of
    //! events on a vertical cut. The executor maintains a superposition of
    //! noncrossing matchings of the cut points with Laurent-polynomial
    //! weights; a crossing splits each state into the identity smoothing and
    //! the cap/cup smoothing with weights `A` and `A^-1` (which one gets `A`
    //! depends on whether the over strand ascends or descends through the
    //! crossing).

    use crate::poly::LaurentPolynomial;

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub enum SweepEvent {
        /// Insert a matched pair of cut points at `pos`.
        Cup { pos: usize },
        /// Join cut points `pos` and `pos+1`.
        Cap { pos: usize },
        /// Cross strands `pos` (descending in) and `pos+1` (ascending in).
        /// `crossing` is the label-1 index used to look up the over strand;
        /// `ascending_is_axis` records which strand belongs to the axis.
        Cross { pos: usize, crossing: usize, ascending_is_axis: bool },
    }

    #[derive(Debug, Clone)]
    pub struct SweepPlan {
        /// Partner indices of the initial cut points.
        pub initial_partners: Vec<usize>,
        pub events: Vec<SweepEvent>,
    }

    type Matching = Vec<u8>;

    fn cup(m: &Matching, pos: usize) -> Matching {
        let mut out = Vec::with_capacity(m.len() + 2);
        let bump = |x: u8| if x as usize >= pos { x + 2 } else { x };
        for (i, &p) in m.iter().enumerate() {
            if i == pos {
                out.push(pos as u8 + 1);
                out.push(pos as u8);
            }
            out.push(bump(p));
        }
        if pos == m.len() {
            out.push(pos as u8 + 1);
            out.push(pos as u8);
        }
        out
    }

    /// Join `pos` and `pos+1`; returns the new matching and whether a loop
    /// closed.
    fn cap(m: &Matching, pos: usize) -> (Matching, bool) {
        let i = pos;
        let j = pos + 1;
        let a = m[i] as usize;
        let closed = a == j;
        let mut out = m.clone();
        if !closed {
            let b = m[j] as usize;
            out[a] = b as u8;
            out[b] = a as u8;
        }
        out.remove(j);
        out.remove(i);
        for p in out.iter_mut() {
            if *p as usize > j {
                *p -= 2;
            }
        }
        (out, closed)
    }

    /// Run the sweep. `axis_over[c]` states whether the axis strand passes
    /// over at crossing `c+1`. Returns the Kauffman bracket (normalized so
    /// that the unknot evaluates to 1).
    pub fn run_sweep(plan: &SweepPlan, axis_over: &[bool]) -> LaurentPolynomial {
        let d = LaurentPolynomial::loop_value();
        let mut states: Vec<(Matching, LaurentPolynomial)> = vec![(
            plan.initial_partners.iter().map(|&p| p as u8).collect(),
            LaurentPolynomial::one(),
        )];
        let mut scratch: Vec<(Matching, LaurentPolynomial)> = Vec::new();

        fn push(buf: &mut Vec<(Matching, LaurentPolynomial)>, m: Matching, p: LaurentPolynomial) {
            if p.is_zero() {
                return;
            }
            for (em, ep) in buf.iter_mut() {
                if *em == m {
                    ep.add_assign(&p);
                    return;
                }
            }
            buf.push((m, p));
        }

        for ev in &plan.events {
            scratch.clear();
            match *ev {
                SweepEvent::Cup { pos } => {
                    for (m, p) in states.drain(..) {
                        scratch.push((cup(&m, pos), p));
                    }
                }
                SweepEvent::Cap { pos } => {
                    for (m, p) in states.drain(..) {
                        let (nm, closed) = cap(&m, pos);
                        let np = if closed { p.mul(&d) } else { p };
                        push(&mut scratch, nm, np);
                    }
                }
                SweepEvent::Cross { pos, crossing, ascending_is_axis } => {
                    let over_ascending = axis_over[crossing] == ascending_is_axis;
                    let (w_id, w_e) = if over_ascending { (-1, 1) } else { (1, -1) };
                    for (m, p) in states.drain(..) {
                        // Identity smoothing: matching unchanged.
                        let mut pid = p.clone();
                        pid.mul_monomial(w_id, 1);
                        push(&mut scratch, m.clone(), pid);
                        // Cap + cup smoothing.
                        let (nm, closed) = cap(&m, pos);
                        let nm = cup(&nm, pos);
                        let mut pe = p;
                        pe.mul_monomial(w_e, 1);
                        if closed {
                            pe = pe.mul(&d);
                        }
                        push(&mut scratch, nm, pe);
                    }
                }
            }
            std::mem::swap(&mut states, &mut scratch);
        }
        let mut total = LaurentPolynomial::zero();
        for (m, p) in states {
            assert!(m.is_empty(), "sweep finished with open strands");
            total.add_assign(&p);
        }
        total.div_exact(&d)
    }
}

use crate::diagram::{Diagram, GaussCode};
use crate::poly::LaurentPolynomial;
use crate::{Error, Result};

/// Brute-force Kauffman bracket: sum over all `2^n` smoothing states with a
/// union-find loop count. Exponential; the independent oracle for the sweep
/// and the general-position engine for small diagrams.
pub fn bracket_state_sum(d: &Diagram) -> LaurentPolynomial {
    bracket_state_sum_code(d.code(), d.signs())
}

pub(crate) fn bracket_state_sum_code(code: &GaussCode, signs: &[i8]) -> LaurentPolynomial {
    let n = signs.len();
    let loop_poly = LaurentPolynomial::loop_value();
    if n == 0 {
        let mut p = LaurentPolynomial::one();
        for _ in 1..code.components.len() {
            p = p.mul(&loop_poly);
        }
        return p;
    }
    assert!(n <= 24, "state sum limited to 24 crossings");

    #[derive(Clone, Copy, Default)]
    struct Inc {
        u_in: u32,
        u_out: u32,
        o_in: u32,
        o_out: u32,
    }
    let mut inc = vec![Inc::default(); n];
    let mut edge_id = 0u32;
    for comp in &code.components {
        let len = comp.len();
        let base = edge_id;
        for (pos, &e) in comp.iter().enumerate() {
            let l = e.unsigned_abs() as usize - 1;
            let arrive = base + ((pos + len - 1) % len) as u32;
            let depart = base + pos as u32;
            if e > 0 {
                inc[l].o_in = arrive;
                inc[l].o_out = depart;
            } else {
                inc[l].u_in = arrive;
                inc[l].u_out = depart;
            }
        }
        edge_id += len as u32;
    }
    let n_edges = edge_id;

    // Per crossing: the edge pairs joined by the A- and B-smoothings. With
    // the under-in slot normalized to position 0, the A-smoothing joins the
    // under-in end with the over end sitting counterclockwise-next, which is
    // over-out for positive crossings and over-in for negative ones.
    let mut a_pairs = Vec::with_capacity(n);
    let mut b_pairs = Vec::with_capacity(n);
    for c in 0..n {
        let i = inc[c];
        if signs[c] > 0 {
            a_pairs.push(((i.u_in, i.o_out), (i.u_out, i.o_in)));
            b_pairs.push(((i.u_in, i.o_in), (i.u_out, i.o_out)));
        } else {
            a_pairs.push(((i.u_in, i.o_in), (i.u_out, i.o_out)));
            b_pairs.push(((i.u_in, i.o_out), (i.u_out, i.o_in)));
        }
    }

    let mut parent: Vec<u32> = Vec::with_capacity(n_edges as usize);
    fn find(parent: &mut [u32], x: u32) -> u32 {
        let mut x = x;
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }

    let mut counts: std::collections::HashMap<(i32, u32), i64> = std::collections::HashMap::new();
    for state in 0u32..(1 << n) {
        parent.clear();
        parent.extend(0..n_edges);
        let mut merges = 0u32;
        for c in 0..n {
            let ((p1, q1), (p2, q2)) = if state & (1 << c) == 0 { a_pairs[c] } else { b_pairs[c] };
            for (p, q) in [(p1, q1), (p2, q2)] {
                let rp = find(&mut parent, p);
                let rq = find(&mut parent, q);
                if rp != rq {
                    parent[rp as usize] = rq;
                    merges += 1;
                }
            }
        }
        let loops = n_edges - merges;
        let a_minus_b = n as i32 - 2 * state.count_ones() as i32;
        *counts.entry((a_minus_b, loops)).or_insert(0) += 1;
    }
    let mut total = LaurentPolynomial::zero();
    let max_loops = counts.keys().map(|&(_, l)| l).max().unwrap_or(0) as usize;
    let mut d_pows: Vec<LaurentPolynomial> = vec![LaurentPolynomial::one()];
    for _ in 0..max_loops {
        let next = d_pows.last().unwrap().mul(&loop_poly);
        d_pows.push(next);
    }
    for ((e, loops), mult) in counts {
        let mut term = d_pows[loops as usize].clone();
        term.mul_monomial(e, mult);
        total.add_assign(&term);
    }
    total.div_exact(&loop_poly)
}

/// The Kauffman bracket of a diagram: transfer-matrix sweep when a layout is
/// attached, state sum otherwise.
pub fn kauffman_bracket(d: &Diagram) -> LaurentPolynomial {
    if let Some(sd) = d.sweep_data() {
        sweep::run_sweep(&sd.plan, &sd.axis_over)
    } else {
        bracket_state_sum(d)
    }
}

/// Mirror-normalized invariant bundle used as the knot/link-type key.
///
/// The `bracket` field is the writhe-normalized Kauffman bracket,
/// canonicalized under exponent negation so mirrors collapse; `span4` is a
/// quarter of its exponent span, which equals the crossing number of any
/// connected reduced alternating diagram of the type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub components: u32,
    pub span4: u32,
    pub bracket: LaurentPolynomial,
}

impl Fingerprint {
    /// The reduced crossing count implied by the bracket span (exact for
    /// non-split alternating types).
    pub fn reduced_crossings(&self) -> u32 {
        self.span4
    }

    pub fn unknot() -> Fingerprint {
        fingerprint(&Diagram::unlink(1))
    }

    pub fn unlink(n: usize) -> Fingerprint {
        fingerprint(&Diagram::unlink(n))
    }
}

/// Writhe-normalize a raw bracket: multiply by `(-A^3)^(-w)`.
pub fn normalize_bracket(raw: &LaurentPolynomial, writhe: i64) -> LaurentPolynomial {
    let mut f = raw.clone();
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    f.mul_monomial((-3 * writhe) as i32, sign);
    f
}

pub fn fingerprint(d: &Diagram) -> Fingerprint {
    let raw = kauffman_bracket(d);
    let components = d.n_components();
    if components < 2 {
        return fingerprint_from_bracket(&raw, d.writhe(), components);
    }
    let lk = linking_matrix(d).expect("multi-component diagram");
    fingerprint_unoriented(&raw, d.writhe(), &lk)
}

/// Fingerprint of a knot diagram (or of a link with fixed orientations).
pub fn fingerprint_from_bracket(raw: &LaurentPolynomial, writhe: i64, components: usize) -> Fingerprint {
    let f = normalize_bracket(raw, writhe);
    let m = f.negate_exponents();
    let bracket = if m < f { m } else { f };
    let span4 = (bracket.span() / 4) as u32;
    Fingerprint { components: components as u32, span4, bracket }
}

/// Fingerprint of a link as an unoriented type: reversing a set `S` of
/// components changes the writhe by `-4 lk(S, complement)` while the raw
/// bracket is orientation-free, so the normalized bracket is canonicalized
/// over all component-orientation choices (and the mirror).
pub fn fingerprint_unoriented(raw: &LaurentPolynomial, writhe: i64, lk: &[Vec<i64>]) -> Fingerprint {
    let k = lk.len();
    let mut best: Option<LaurentPolynomial> = None;
    // Component 0 stays fixed: reversing everything reverses nothing.
    for mask in 0u32..(1 << (k - 1)) {
        let in_s = |i: usize| i > 0 && mask & (1 << (i - 1)) != 0;
        let mut delta = 0i64;
        for i in 0..k {
            for j in 0..k {
                if in_s(i) && !in_s(j) {
                    delta += lk[i][j];
                }
            }
        }
        let w = writhe - 4 * delta;
        let f = normalize_bracket(raw, w);
        let m = f.negate_exponents();
        for cand in [f, m] {
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    let bracket = best.unwrap();
    let span4 = (bracket.span() / 4) as u32;
    Fingerprint { components: k as u32, span4, bracket }
}

/// `|V(-1)|`: the determinant of the knot/link, computed exactly from the
/// normalized bracket evaluated at a primitive 8th root of unity.
pub fn determinant(d: &Diagram) -> u64 {
    let f = normalize_bracket(&kauffman_bracket(d), d.writhe());
    let (re, im) = f.eval_zeta8();
    debug_assert!(re == 0 || im == 0, "determinant evaluation not rectilinear");
    re.unsigned_abs().max(im.unsigned_abs())
}

/// Pairwise linking numbers: half the signed count of inter-component
/// crossings.
pub fn linking_matrix(d: &Diagram) -> Result<Vec<Vec<i64>>> {
    let k = d.n_components();
    if k < 2 {
        return Err(Error::domain("linking matrix needs at least two components"));
    }
    let n = d.n_crossings();
    let mut comp_of = vec![[usize::MAX; 2]; n + 1];
    for (ci, comp) in d.code().components.iter().enumerate() {
        for &e in comp {
            let l = e.unsigned_abs() as usize;
            if comp_of[l][0] == usize::MAX {
                comp_of[l][0] = ci;
            } else {
                comp_of[l][1] = ci;
            }
        }
    }
    let mut m = vec![vec![0i64; k]; k];
    for l in 1..=n {
        let [a, b] = comp_of[l];
        if a != b {
            let s = d.signs()[l - 1] as i64;
            m[a][b] += s;
            m[b][a] += s;
        }
    }
    for row in &mut m {
        for v in row.iter_mut() {
            debug_assert!(*v % 2 == 0);
            *v /= 2;
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::close_open_meander;
    use crate::meander::{enumerate_open_meanders, OpenMeander};

    #[test]
    fn unknot_bracket_is_one() {
        assert_eq!(bracket_state_sum(&Diagram::unlink(1)), LaurentPolynomial::one());
        assert_eq!(bracket_state_sum(&Diagram::unlink(2)), LaurentPolynomial::loop_value());
    }

    #[test]
    fn trefoil_bracket_by_hand() {
        // Independent 8-state hand count for the standard trefoil code: by
        // numbers of B-smoothings the loop counts are 2 / 1,1,1 / 2,2,2 / 3,
        // giving <D> = -A^5 - A^-3 + A^-7 up to mirror.
        let m = OpenMeander::from_permutation(vec![1, 2, 3]).unwrap();
        let d = close_open_meander(&m);
        let b = bracket_state_sum(&d);
        let expected = LaurentPolynomial::from_terms(&[(5, -1), (-3, -1), (-7, 1)]);
        let mirrored = expected.negate_exponents();
        assert!(b == expected || b == mirrored, "got {b}");
        assert_eq!(b.num_terms(), 3);
        assert_eq!(b.span(), 12);
    }

    #[test]
    fn hopf_bracket() {
        let m = OpenMeander::from_permutation(vec![1, 2]).unwrap();
        let d = close_open_meander(&m);
        let b = bracket_state_sum(&d);
        let expected = LaurentPolynomial::from_terms(&[(4, -1), (-4, -1)]);
        assert_eq!(b, expected);
    }

    #[test]
    fn sweep_equals_state_sum_small() {
        for n in 1..=8 {
            for m in enumerate_open_meanders(n) {
                let d = close_open_meander(&m);
                let via_sweep = kauffman_bracket(&d);
                let via_sum = bracket_state_sum(&d);
                assert_eq!(via_sweep, via_sum, "bracket mismatch for {:?}", m.permutation());
            }
        }
    }

    #[test]
    fn determinants() {
        let trefoil = close_open_meander(&OpenMeander::from_permutation(vec![1, 2, 3]).unwrap());
        assert_eq!(determinant(&trefoil), 3);
        assert_eq!(determinant(&Diagram::unlink(1)), 1);
    }

    #[test]
    fn fingerprint_collapses_mirrors() {
        let trefoil = close_open_meander(&OpenMeander::from_permutation(vec![1, 2, 3]).unwrap());
        assert_eq!(fingerprint(&trefoil), fingerprint(&trefoil.mirror()));
        assert_eq!(fingerprint(&trefoil).reduced_crossings(), 3);
    }

    #[test]
    fn bracket_of_mirror_negates_exponents() {
        let m = OpenMeander::from_permutation(vec![1, 4, 3, 2, 5]).unwrap();
        let d = close_open_meander(&m);
        assert_eq!(kauffman_bracket(&d.mirror()), kauffman_bracket(&d).negate_exponents());
    }

    #[test]
    fn hopf_linking_matrix() {
        let d = close_open_meander(&OpenMeander::from_permutation(vec![1, 2]).unwrap());
        let m = linking_matrix(&d).unwrap();
        assert_eq!(m[0][1].abs(), 1);
        // The 4-crossing (2,4)-torus link has pairwise linking number 2.
        let d4 = close_open_meander(&OpenMeander::from_permutation(vec![1, 2, 3, 4]).unwrap());
        let m4 = linking_matrix(&d4).unwrap();
        assert_eq!(m4[0][1].abs(), 2);
    }
}
