//! Operations on meanders and Gauss codes: sum/concatenation of meanders,
//! products of ordered Gauss codes, chord diagrams, and the searches for
//! meander / ordered-code diagrams of a given knot over all crossing
//! assignments.

use crate::arch::{dyck_decode, dyck_encode, DecoratedDyckWord, DyckSymbol};
use crate::diagram::{
    close_meander_with, find_ordered_form, gauss_to_dt, realize_gauss_code, DTCode, Diagram, GaussCode,
};
use crate::invariants::{fingerprint, fingerprint_from_bracket, sweep::run_sweep, Fingerprint};
use crate::meander::{meander_from_words, process_open_meanders, OpenMeander};
use crate::{par, Error, Result};
use std::collections::HashMap;
use std::sync::Mutex;

// ---------------------------------------------------------------------------
// Sum of meanders
// ---------------------------------------------------------------------------

/// Concatenate two meanders: feet of `b` continue east of `a`, the end ray of
/// `a` joins the start ray of `b`. When `a` has odd order the joint lies
/// above the axis and `b` enters from above, so `b`'s words swap sides.
fn concatenate_meanders(a: &OpenMeander, b: &OpenMeander) -> Result<OpenMeander> {
    let m = a.order();
    let (ua, la) = a.words();
    let (ub, lb) = b.words();
    let pa = a.permutation();
    let pb = b.permutation();
    let mut upper = ua.symbols.clone();
    let mut lower = la.symbols.clone();
    // Replace a's end loose marker by an arc opening.
    let end_foot = pa[m - 1] as usize - 1;
    if m % 2 == 1 {
        upper[end_foot] = DyckSymbol::Open;
    } else {
        lower[end_foot] = DyckSymbol::Open;
    }
    // Append b's words: when a ends above the axis, b hangs reflected.
    let (mut b_up, mut b_low) = if m % 2 == 1 { (lb.symbols, ub.symbols) } else { (ub.symbols, lb.symbols) };
    // Replace b's start loose marker by the closing foot of the joint arc.
    let b_start = pb[0] as usize - 1;
    if m % 2 == 1 {
        b_up[b_start] = DyckSymbol::Close;
    } else {
        b_low[b_start] = DyckSymbol::Close;
    }
    upper.extend(b_up);
    lower.extend(b_low);
    meander_from_words(&DecoratedDyckWord { symbols: upper }, &DecoratedDyckWord { symbols: lower })
}

/// Sum of two meander diagrams: concatenate the underlying meanders and keep
/// each operand's over/under assignment on its own crossings. Parity:
/// knot + knot gives a 2-component link, knot + link (either order) a knot,
/// link + link a link.
pub fn meander_sum(a: &Diagram, b: &Diagram) -> Result<Diagram> {
    let ma = a
        .meander()
        .ok_or_else(|| Error::domain("sum operands must be meander closures"))?;
    let mb = b
        .meander()
        .ok_or_else(|| Error::domain("sum operands must be meander closures"))?;
    let m = ma.order();
    let sum = concatenate_meanders(ma, mb)?;
    // Assignment transfer: axis_over per crossing from each operand's code.
    let mut axis_over = vec![false; sum.order()];
    let a_over = axis_over_of(a);
    let b_over = axis_over_of(b);
    axis_over[..m].copy_from_slice(&a_over);
    axis_over[m..].copy_from_slice(&b_over);
    Ok(close_meander_with(&sum, &axis_over))
}

/// The left-right reflection of a meander closure: feet renumbered east to
/// west and the traversal reversed, with each crossing keeping its over/under
/// state. As a type this is the mirror image, and the paper's mirror-sum law
/// is about exactly this diagram: summing a meander diagram with its
/// reflected copy cancels to the unlink.
pub fn reflected_meander_diagram(d: &Diagram) -> Result<Diagram> {
    let m = d
        .meander()
        .ok_or_else(|| Error::domain("reflection needs a meander closure"))?;
    let n = m.order();
    let perm: Vec<u16> = m
        .permutation()
        .iter()
        .rev()
        .map(|&x| (n as u16 + 1) - x)
        .collect();
    let refl = OpenMeander::from_permutation(perm)
        .map_err(|_| Error::domain("reflected permutation is not a meander"))?;
    let over = axis_over_of(d);
    let refl_over: Vec<bool> = (0..n).map(|c| over[n - 1 - c]).collect();
    Ok(close_meander_with(&refl, &refl_over))
}

fn axis_over_of(d: &Diagram) -> Vec<bool> {
    if let Some(sd) = d.sweep_data() {
        return sd.axis_over.clone();
    }
    // Fall back to the code: the axis visit of crossing c is positive when
    // the axis passes over there.
    let n = d.n_crossings();
    let mut over = vec![false; n];
    let axis = &d.code().components[0];
    for (i, &e) in axis.iter().take(n).enumerate() {
        let _ = i;
        over[e.unsigned_abs() as usize - 1] = e > 0;
    }
    over
}

// ---------------------------------------------------------------------------
// Ordered Gauss code products
// ---------------------------------------------------------------------------

fn ordered_halves(code: &GaussCode) -> Result<(Vec<i32>, Vec<i32>)> {
    if code.components.len() != 1 {
        return Err(Error::domain("ordered Gauss codes are single-component"));
    }
    let seq = &code.components[0];
    let n = seq.len() / 2;
    for (i, e) in seq.iter().take(n).enumerate() {
        if e.unsigned_abs() as usize != i + 1 {
            return Err(Error::domain("code is not ordered (first half must visit 1..n in order)"));
        }
    }
    Ok((seq[..n].to_vec(), seq[n..].to_vec()))
}

/// The mirror-image operand of the product law: the ordered code whose path
/// half visits the crossings of `code` in reversed order with each crossing's
/// over/under state kept. Concatenating a code with (the negation of) this
/// operand telescopes crossing by crossing, which is the reflected-copy
/// cancellation behind the mirror-product law. Note that every ordered code
/// of the mirror *diagram* itself is sign-incompatible or produces a
/// torus-family product instead; the cancellation needs the reflected path.
pub fn mirror_product_operand(code: &GaussCode) -> Result<GaussCode> {
    let (_, s) = ordered_halves(code)?;
    let reversed_path: Vec<i32> = s.iter().rev().copied().collect();
    crate::diagram::knot_code_from_short(&reversed_path)
}

/// Product of two ordered Gauss codes of the same odd order: the
/// concatenation of the second halves, with the second negated.
pub fn ogc_product_knots(g1: &GaussCode, g2: &GaussCode) -> Result<Diagram> {
    let (f1, s1) = ordered_halves(g1)?;
    let n = f1.len();
    let (_, _) = ordered_halves(g2)?;
    if g2.n_crossings() != n {
        return Err(Error::domain("product operands must have the same crossing number"));
    }
    if n % 2 == 0 {
        return Err(Error::domain(
            "the knot product needs an odd crossing number (even orders give non-realizable codes)",
        ));
    }
    // Sign compatibility: the concatenation must leave each label with one
    // positive and one negative visit; if not, re-base the second operand.
    let build = |s2: &[i32]| -> Result<GaussCode> {
        let mut entries = s1.clone();
        entries.extend(s2.iter().map(|e| -e));
        let code = GaussCode::knot(entries);
        code.validate()?;
        Ok(code)
    };
    let (_, s2) = ordered_halves(g2)?;
    let code = build(&s2).map_err(|_| {
        Error::domain(
            "sign-incompatible ordered codes (for a mirror operand use its reversal-based ordered form)",
        )
    })?;
    realize_gauss_code(&code)
}

/// Product of two ordered Gauss codes of the same even order: the
/// 2-component code of the second halves, with the second negated.
pub fn ogc_product_links(g1: &GaussCode, g2: &GaussCode) -> Result<Diagram> {
    let (f1, s1) = ordered_halves(g1)?;
    let n = f1.len();
    ordered_halves(g2)?;
    if g2.n_crossings() != n {
        return Err(Error::domain("product operands must have the same crossing number"));
    }
    if n % 2 == 1 {
        return Err(Error::domain("the link product needs an even crossing number"));
    }
    let build = |s2: &[i32]| -> Result<GaussCode> {
        let code = GaussCode {
            components: vec![s1.clone(), s2.iter().map(|e| -e).collect()],
        };
        code.validate()?;
        Ok(code)
    };
    let (_, s2) = ordered_halves(g2)?;
    let code = build(&s2).map_err(|_| {
        Error::domain(
            "sign-incompatible ordered codes (for a mirror operand use its reversal-based ordered form)",
        )
    })?;
    realize_gauss_code(&code)
}

// ---------------------------------------------------------------------------
// Chord diagrams
// ---------------------------------------------------------------------------

/// A chord diagram: the Gauss sequence around a circle with a chord per
/// crossing, oriented toward the undercrossing endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordDiagram {
    pub n: usize,
    /// The circle: the signed Gauss sequence.
    pub circle: Vec<i32>,
    /// Chords as (over position, under position) index pairs into `circle`.
    pub chords: Vec<(usize, usize)>,
}

pub fn chord_diagram(code: &GaussCode) -> Result<ChordDiagram> {
    if code.components.len() != 1 {
        return Err(Error::domain("chord diagrams are drawn for knots"));
    }
    code.validate()?;
    let circle = code.components[0].clone();
    let n = circle.len() / 2;
    let mut over = vec![usize::MAX; n + 1];
    let mut under = vec![usize::MAX; n + 1];
    for (i, &e) in circle.iter().enumerate() {
        let l = e.unsigned_abs() as usize;
        if e > 0 {
            over[l] = i;
        } else {
            under[l] = i;
        }
    }
    let chords = (1..=n).map(|l| (over[l], under[l])).collect();
    Ok(ChordDiagram { n, circle, chords })
}

/// Model the knot product on chord diagrams: take the second halves of both
/// circles (the second negated) and join them into one circle. This is the
/// same sequence the code-level product produces.
pub fn chord_product_circle(g1: &GaussCode, g2: &GaussCode) -> Result<Vec<i32>> {
    let (_, s1) = ordered_halves(g1)?;
    let (_, s2) = ordered_halves(g2)?;
    let mut out = s1;
    out.extend(s2.iter().map(|e| -e));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Searches over meander and semi-meander shadows
// ---------------------------------------------------------------------------

/// Fingerprint table of one search level: every knot/link type realized by
/// some shadow of order `n` under some over/under assignment, with the
/// lexicographically smallest DT witness.
pub type LevelTable = HashMap<Fingerprint, DTCode>;

fn merge_tables(mut a: LevelTable, b: LevelTable) -> LevelTable {
    for (fp, dt) in b {
        match a.entry(fp) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                if dt < *e.get() {
                    e.insert(dt);
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(dt);
            }
        }
    }
    a
}

/// All knot types (components == 1) or 2-component link types realized by
/// meander diagrams with `n` crossings, over every crossing assignment.
pub fn meander_level_table(n: usize) -> LevelTable {
    process_open_meanders(
        n,
        LevelTable::new,
        |acc, m| {
            scan_assignments_of_meander(m, acc);
        },
        merge_tables,
    )
}

fn scan_assignments_of_meander(m: &OpenMeander, acc: &mut LevelTable) {
    let n = m.order();
    // Assignments up to global mirror: fix the first crossing's state.
    let base = close_meander_with(m, &vec![false; n]);
    let plan = base.sweep_data().expect("closures carry sweep plans").plan.clone();
    let components = base.n_components();
    let mut axis_over = vec![false; n];
    for mask in 0u64..(1u64 << (n - 1)) {
        for c in 1..n {
            axis_over[c] = mask & (1 << (c - 1)) != 0;
        }
        let d = close_meander_with(m, &axis_over);
        let raw = run_sweep(&plan, &axis_over);
        let fp = if components == 1 {
            fingerprint_from_bracket(&raw, d.writhe(), 1)
        } else {
            fingerprint(&d)
        };
        let dt = gauss_to_dt(d.code()).expect("closure has a DT code");
        match acc.entry(fp) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                if dt < *e.get() {
                    e.insert(dt);
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(dt);
            }
        }
    }
}

fn level_cache() -> &'static Mutex<HashMap<(bool, usize), &'static LevelTable>> {
    static CACHE: once_cell::sync::OnceCell<Mutex<HashMap<(bool, usize), &'static LevelTable>>> =
        once_cell::sync::OnceCell::new();
    CACHE.get_or_init(Default::default)
}

fn cached_level(ogc: bool, n: usize) -> &'static LevelTable {
    {
        let guard = level_cache().lock().unwrap();
        if let Some(t) = guard.get(&(ogc, n)) {
            return t;
        }
    }
    let table = if ogc { semi_meander_level_table(n) } else { meander_level_table(n) };
    let leaked: &'static LevelTable = Box::leak(Box::new(table));
    level_cache().lock().unwrap().insert((ogc, n), leaked);
    leaked
}

/// Search ascending orders for a meander diagram of the target type; the
/// returned order is minimal within the enumerated shadow set because every
/// smaller level is scanned exhaustively first.
pub fn search_meander_diagram(target: &Fingerprint, max_n: usize) -> Result<Option<(Diagram, usize)>> {
    let parity = match target.components {
        1 => 1usize,
        2 => 0usize,
        _ => return Err(Error::domain("meander diagram search supports knots and 2-component links")),
    };
    let mut n = if parity == 1 { 1 } else { 2 };
    while n <= max_n {
        let table = cached_level(false, n);
        if let Some(dt) = table.get(target) {
            let d = realize_gauss_code(&crate::diagram::dt_to_gauss(dt)?)?;
            return Ok(Some((d, n)));
        }
        n += 2;
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Semi-meander (ordered shadow) enumeration
// ---------------------------------------------------------------------------
//
// The shadow of an ordered Gauss code [1..n | s] is a straight strand
// visiting crossings 1..n plus a closing path whose arcs live in the disk
// complement of the strand. Each arc is a chord of the boundary circle
// T1..Tn, EAST, Bn..B1, WEST; realizable shadows are exactly the noncrossing
// chord systems, which the enumerator generates directly.

#[derive(Clone)]
pub(crate) struct SemiMeanderShadow {
    /// Visit order of the closing path (a permutation of 1..n).
    pub order: Vec<u16>,
    /// Entry side (true = top) per visit index.
    pub entry_top: Vec<bool>,
}

fn circle_coord(n: usize, foot: usize, top: bool) -> usize {
    // T1..Tn -> 1..n, EAST -> n+1, Bn..B1 -> n+2..2n+1, WEST -> 2n+2.
    if top {
        foot
    } else {
        2 * n + 2 - foot
    }
}

fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a1, a2) = (a.0.min(a.1), a.0.max(a.1));
    let (b1, b2) = (b.0.min(b.1), b.0.max(b.1));
    (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)
}

/// Enumerate semi-meander shadows of order `n`: each realizable ordered
/// shadow is emitted once (the first chord-side witness per visit order).
pub(crate) fn for_each_semi_meander_shadow<F: FnMut(&SemiMeanderShadow)>(n: usize, mut f: F) {
    let east = n + 1;
    let west = 2 * n + 2;
    let mut chords: Vec<(usize, usize)> = Vec::new();
    let mut order: Vec<u16> = Vec::new();
    let mut entry_top: Vec<bool> = Vec::new();
    let mut used = vec![false; n + 1];
    let mut last_emitted: Option<Vec<u16>> = None;

    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(&SemiMeanderShadow)>(
        n: usize,
        east: usize,
        west: usize,
        order: &mut Vec<u16>,
        entry_top: &mut Vec<bool>,
        used: &mut Vec<bool>,
        chords: &mut Vec<(usize, usize)>,
        last: &mut Option<Vec<u16>>,
        f: &mut F,
    ) {
        if order.len() == n {
            // Closing chord: exit of the last visit to WEST.
            let foot = order[n - 1] as usize;
            let exit_top = !entry_top[n - 1];
            let chord = (circle_coord(n, foot, exit_top), west);
            if chords.iter().any(|&c| chords_cross(c, chord)) {
                return;
            }
            if last.as_deref() != Some(order.as_slice()) {
                *last = Some(order.clone());
                f(&SemiMeanderShadow { order: order.clone(), entry_top: entry_top.clone() });
            }
            return;
        }
        let j = order.len();
        for foot in 1..=n {
            if used[foot] {
                continue;
            }
            for top in [true, false] {
                // Chord from the previous exit (or EAST) to this entry.
                let from = if j == 0 {
                    east
                } else {
                    let pf = order[j - 1] as usize;
                    circle_coord(n, pf, !entry_top[j - 1])
                };
                let to = circle_coord(n, foot, top);
                let chord = (from, to);
                if chords.iter().any(|&c| chords_cross(c, chord)) {
                    continue;
                }
                chords.push(chord);
                order.push(foot as u16);
                entry_top.push(top);
                used[foot] = true;
                rec(n, east, west, order, entry_top, used, chords, last, f);
                used[foot] = false;
                entry_top.pop();
                order.pop();
                chords.pop();
            }
        }
    }
    rec(n, east, west, &mut order, &mut entry_top, &mut used, &mut chords, &mut last_emitted, &mut f);
}

/// The ordered shadow code [1..n | order] with an over/under assignment:
/// `straight_over[c]` says whether the straight strand passes over at
/// crossing `c+1`.
fn ordered_code_with(shadow_order: &[u16], straight_over: &[bool]) -> GaussCode {
    let n = shadow_order.len();
    let mut entries: Vec<i32> = (1..=n as i32)
        .map(|i| if straight_over[i as usize - 1] { i } else { -i })
        .collect();
    entries.extend(shadow_order.iter().map(|&c| {
        let c = c as i32;
        if straight_over[c as usize - 1] {
            -c
        } else {
            c
        }
    }));
    GaussCode::knot(entries)
}

/// All knot types realized by ordered-code (semi-meander) diagrams with `n`
/// crossings, over every crossing assignment.
pub fn semi_meander_level_table(n: usize) -> LevelTable {
    let mut shadows: Vec<SemiMeanderShadow> = Vec::new();
    for_each_semi_meander_shadow(n, |s| shadows.push(s.clone()));
    par::map_merge(
        shadows,
        LevelTable::new,
        |s| {
            let mut acc = LevelTable::new();
            let plan = semi_meander_plan(&s);
            let mut straight_over = vec![false; n];
            for mask in 0u64..(1u64 << (n - 1)) {
                for c in 1..n {
                    straight_over[c] = mask & (1 << (c - 1)) != 0;
                }
                let code = ordered_code_with(&s.order, &straight_over);
                let raw = run_sweep(&plan, &straight_over);
                let writhe = semi_meander_writhe(&s, &straight_over);
                let fp = fingerprint_from_bracket(&raw, writhe, 1);
                let dt = gauss_to_dt(&code).expect("ordered code has a DT");
                match acc.entry(fp) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        if dt < *e.get() {
                            e.insert(dt);
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(dt);
                    }
                }
            }
            acc
        },
        merge_tables,
    )
}

/// Search ascending orders for an ordered-code diagram of the target knot.
pub fn search_ogc_diagram(target: &Fingerprint, max_n: usize) -> Result<Option<(Diagram, usize)>> {
    if target.components != 1 {
        return Err(Error::domain("ordered-code search supports knots"));
    }
    for n in 1..=max_n {
        let table = cached_level(true, n);
        if let Some(dt) = table.get(target) {
            let d = realize_gauss_code(&crate::diagram::dt_to_gauss(dt)?)?;
            return Ok(Some((d, n)));
        }
    }
    Ok(None)
}

// Sweep plan and writhe for a semi-meander shadow. The layout: straight
// strand on the axis; top-top chords as upper arcs, bottom-bottom as lower
// arcs, mixed chords as nested domes around the east end; the chords at the
// caps attach to the strand tips.
use crate::invariants::sweep::{SweepEvent, SweepPlan};

fn semi_meander_plan(s: &SemiMeanderShadow) -> SweepPlan {
    let n = s.order.len();
    // Per foot and side: what happens there. Chords:
    // c0: EAST tip -> (order[0], entry[0]); c_j: exit of j-1 -> entry of j;
    // c_n: exit of last -> WEST tip.
    #[derive(Clone, Copy, PartialEq)]
    enum End {
        ArcOpen,
        ArcClose,
        DomeOpen(usize),
        TipWest, // chord to the west tip: present in the initial cut
        TipEast, // chord to the east tip: opened here, capped at the end
    }
    let mut upper: Vec<Option<End>> = vec![None; n + 1];
    let mut lower: Vec<Option<End>> = vec![None; n + 1];
    let mut set = |foot: usize, top: bool, v: End, upper: &mut Vec<Option<End>>, lower: &mut Vec<Option<End>>| {
        let slot = if top { &mut upper[foot] } else { &mut lower[foot] };
        assert!(slot.is_none());
        *slot = Some(v);
    };
    let mut domes = 0usize;
    let mut dome_order: Vec<(usize, usize)> = Vec::new(); // (top foot, bottom foot)
    // interior chords
    for j in 0..n {
        let (to_foot, to_top) = (s.order[j] as usize, s.entry_top[j]);
        if j == 0 {
            set(to_foot, to_top, End::TipEast, &mut upper, &mut lower);
        } else {
            let (from_foot, from_top) = (s.order[j - 1] as usize, !s.entry_top[j - 1]);
            if from_top == to_top {
                let (a, b) = (from_foot.min(to_foot), from_foot.max(to_foot));
                set(a, from_top, End::ArcOpen, &mut upper, &mut lower);
                set(b, from_top, End::ArcClose, &mut upper, &mut lower);
            } else {
                let id = domes;
                domes += 1;
                let (tf, bf) = if from_top { (from_foot, to_foot) } else { (to_foot, from_foot) };
                dome_order.push((tf, bf));
                set(tf, true, End::DomeOpen(id), &mut upper, &mut lower);
                set(bf, false, End::DomeOpen(id), &mut upper, &mut lower);
            }
        }
    }
    let last_foot = s.order[n - 1] as usize;
    let last_exit_top = !s.entry_top[n - 1];
    set(last_foot, last_exit_top, End::TipWest, &mut upper, &mut lower);

    // Build events tracking the symbolic cut.
    #[derive(Clone, Copy, PartialEq, Debug)]
    enum Slot {
        Axis,
        Arc,
        DomeTop(usize),
        DomeBot(usize),
        East,
        West,
    }
    let west_is_top = last_exit_top;
    let mut cut: Vec<Slot> = if west_is_top {
        vec![Slot::West, Slot::Axis]
    } else {
        vec![Slot::Axis, Slot::West]
    };
    let mut initial: Vec<usize> = vec![1, 0];
    let mut events: Vec<SweepEvent> = Vec::new();
    for foot in 1..=n {
        let axis = cut.iter().position(|&s| s == Slot::Axis).unwrap();
        let u = upper[foot].expect("every foot has an upper end");
        let l = lower[foot].expect("every foot has a lower end");
        let u_close = matches!(u, End::ArcClose | End::TipWest);
        let l_close = matches!(l, End::ArcClose | End::TipWest);
        let mk = |e: End, dome_id_top: bool| -> Slot {
            match e {
                End::ArcOpen => Slot::Arc,
                End::DomeOpen(id) => {
                    if dome_id_top {
                        Slot::DomeTop(id)
                    } else {
                        Slot::DomeBot(id)
                    }
                }
                End::TipEast => Slot::East,
                _ => unreachable!(),
            }
        };
        match (u_close, l_close) {
            (true, false) => {
                events.push(SweepEvent::Cross { pos: axis - 1, crossing: foot - 1, ascending_is_axis: true });
                cut.remove(axis - 1);
                cut.insert(axis, mk(l, false));
            }
            (false, true) => {
                events.push(SweepEvent::Cross { pos: axis, crossing: foot - 1, ascending_is_axis: false });
                cut.remove(axis + 1);
                cut.insert(axis, mk(u, true));
            }
            (true, true) => {
                events.push(SweepEvent::Cross { pos: axis - 1, crossing: foot - 1, ascending_is_axis: true });
                events.push(SweepEvent::Cap { pos: axis });
                cut.remove(axis + 1);
                cut.remove(axis - 1);
            }
            (false, false) => {
                events.push(SweepEvent::Cup { pos: axis });
                events.push(SweepEvent::Cross { pos: axis + 1, crossing: foot - 1, ascending_is_axis: true });
                cut.insert(axis, mk(u, true));
                cut.insert(axis + 2, mk(l, false));
            }
        }
    }
    // Final caps at the east tip: axis joins the EAST chord, then domes close
    // from the inside out.
    loop {
        if cut.len() == 2 && matches!((cut[0], cut[1]), (Slot::Axis, Slot::East) | (Slot::East, Slot::Axis)) {
            events.push(SweepEvent::Cap { pos: 0 });
            cut.clear();
            break;
        }
        // Find an adjacent pair to cap.
        let mut capped = false;
        for i in 0..cut.len().saturating_sub(1) {
            let pair_ok = match (cut[i], cut[i + 1]) {
                (Slot::Axis, Slot::East) | (Slot::East, Slot::Axis) => true,
                (Slot::DomeTop(a), Slot::DomeBot(b)) if a == b => true,
                (Slot::DomeTop(a), Slot::Axis) if false => a == a,
                _ => false,
            };
            if pair_ok {
                events.push(SweepEvent::Cap { pos: i });
                cut.remove(i + 1);
                cut.remove(i);
                capped = true;
                break;
            }
        }
        assert!(capped, "semi-meander final cut does not close: {cut:?}");
        if cut.is_empty() {
            break;
        }
    }
    let _ = &mut initial;
    SweepPlan { initial_partners: initial, events }
}

fn semi_meander_writhe(s: &SemiMeanderShadow, straight_over: &[bool]) -> i64 {
    // The closing path moves upward through crossing c when it enters from
    // below (entry side bottom) -- the sign convention matches the meander
    // closure: sign = +1 iff the straight strand is over exactly when the
    // path moves upward.
    let n = s.order.len();
    let mut w = 0i64;
    for j in 0..n {
        let c = s.order[j] as usize;
        let up = !s.entry_top[j];
        w += if straight_over[c - 1] == up { 1 } else { -1 };
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::diagram::close_open_meander;
    use crate::meander::enumerate_open_meanders;

    fn meander_knot_diagram(perm: Vec<u16>) -> Diagram {
        close_open_meander(&OpenMeander::from_permutation(perm).unwrap())
    }

    #[test]
    fn sum_parity_contract() {
        let k = meander_knot_diagram(vec![1, 2, 3]); // knot (odd)
        let l = meander_knot_diagram(vec![1, 2]); // link (even)
        assert_eq!(meander_sum(&k, &k).unwrap().n_components(), 2);
        assert_eq!(meander_sum(&k, &l).unwrap().n_components(), 1);
        assert_eq!(meander_sum(&l, &k).unwrap().n_components(), 1);
        assert_eq!(meander_sum(&l, &l).unwrap().n_components(), 2);
    }

    #[test]
    fn sum_with_mirror_is_unlink() {
        for n in [3usize, 5] {
            for m in enumerate_open_meanders(n) {
                let d = close_open_meander(&m);
                let mirror = reflected_meander_diagram(&d).unwrap();
                // The reflected diagram is the mirror-image type.
                assert_eq!(fingerprint(&mirror), fingerprint(&d.mirror()));
                let s = meander_sum(&d, &mirror).unwrap();
                assert_eq!(fingerprint(&s), Fingerprint::unlink(2), "at {:?}", m.permutation());
            }
        }
    }

    #[test]
    fn product_9_2_times_9_4_is_9_6() {
        let c = catalog();
        let g1 = GaussCode::knot(c.special.ordered_codes["9_2"].clone());
        let g2 = GaussCode::knot(c.special.ordered_codes["9_4"].clone());
        // The concatenated code matches the printed product.
        let expected: Vec<i32> = c.special.product_examples["product_9_2_9_4"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_i64().unwrap() as i32)
            .collect();
        assert_eq!(chord_product_circle(&g1, &g2).unwrap(), expected);
        let d = ogc_product_knots(&g1, &g2).unwrap();
        assert_eq!(c.lookup_name(&d), Some("9_6".to_string()));
    }

    #[test]
    fn self_product_is_torus_knot() {
        // K * K for the order-3 meander code is the trefoil.
        let g = GaussCode::knot(vec![-1, 2, -3, 1, -2, 3]);
        let d = ogc_product_knots(&g, &g).unwrap();
        assert_eq!(catalog().lookup_name(&d), Some("3_1".to_string()));
    }

    #[test]
    fn product_with_mirror_is_unknot() {
        let g = GaussCode::knot(catalog().special.ordered_codes["9_2"].clone());
        let gm = mirror_product_operand(&g).unwrap();
        let d = ogc_product_knots(&g, &gm).unwrap();
        assert_eq!(fingerprint(&d), Fingerprint::unknot());
        // The naive entrywise mirror is sign-incompatible.
        assert!(matches!(ogc_product_knots(&g, &g.mirrored()), Err(Error::Domain(_))));
    }

    #[test]
    fn even_product_parity_errors() {
        let g8 = GaussCode::knot(catalog().special.ordered_codes["8_1"].clone());
        assert!(matches!(ogc_product_knots(&g8, &g8), Err(Error::Domain(_))));
        let g9 = GaussCode::knot(catalog().special.ordered_codes["9_2"].clone());
        assert!(matches!(ogc_product_links(&g9, &g9), Err(Error::Domain(_))));
        // mismatched n
        assert!(matches!(ogc_product_knots(&g9, &GaussCode::knot(vec![-1, 2, -3, 1, -2, 3])), Err(Error::Domain(_))));
    }

    #[test]
    fn link_product_8_1_x_8_3() {
        let c = catalog();
        let g1 = GaussCode::knot(c.special.ordered_codes["8_1"].clone());
        let g2 = GaussCode::knot(c.special.ordered_codes["8_3"].clone());
        let d = ogc_product_links(&g1, &g2).unwrap();
        assert_eq!(c.lookup_name(&d), Some("8_1^2".to_string()));
    }

    #[test]
    fn chord_diagram_figure_eight() {
        let code = GaussCode::knot(vec![1, -2, 3, -4, 2, -1, 4, -3]);
        let cd = chord_diagram(&code).unwrap();
        assert_eq!(cd.n, 4);
        assert_eq!(cd.chords, vec![(0, 5), (4, 1), (2, 7), (6, 3)]);
        // 1-crossing curl
        let curl = chord_diagram(&GaussCode::knot(vec![1, -1])).unwrap();
        assert_eq!(cd.circle.len(), 8);
        assert_eq!(curl.chords, vec![(0, 1)]);
    }

    #[test]
    fn meander_search_finds_4_1_at_5() {
        let target = catalog().fingerprint_of("4_1").unwrap();
        let (d, n) = search_meander_diagram(&target, 7).unwrap().unwrap();
        assert_eq!(n, 5);
        assert_eq!(fingerprint(&d), target);
    }

    #[test]
    fn semi_meander_shadows_small() {
        // Order 1 and 2 ordered shadows: curl and the 2-crossing shadow(s).
        let mut c1 = 0;
        for_each_semi_meander_shadow(1, |_| c1 += 1);
        assert_eq!(c1, 1);
        let mut shadows3 = Vec::new();
        for_each_semi_meander_shadow(3, |s| shadows3.push(s.order.clone()));
        // Every emitted shadow realizes as an ordered code.
        for order in &shadows3 {
            let code = ordered_code_with(order, &vec![false; 3]);
            realize_gauss_code(&code).unwrap();
        }
        assert!(!shadows3.is_empty());
    }

    #[test]
    fn semi_meander_sweep_matches_state_sum() {
        for n in 1..=6 {
            let mut shadows = Vec::new();
            for_each_semi_meander_shadow(n, |s| shadows.push(s.clone()));
            for s in &shadows {
                let plan = semi_meander_plan(s);
                for mask in 0..(1u32 << n) {
                    let over: Vec<bool> = (0..n).map(|c| mask & (1 << c) != 0).collect();
                    let code = ordered_code_with(&s.order, &over);
                    let d = realize_gauss_code(&code).unwrap();
                    let via_sum = crate::invariants::bracket_state_sum(&d);
                    let via_sweep = run_sweep(&plan, &over);
                    // A Gauss code pins the diagram only up to reflection,
                    // and for non-prime diagrams not even that (curls and
                    // connected summands flip independently), so compare
                    // against the realized diagram on prime reduced shadows
                    // where the realization is faithful.
                    let flags = d.analyze();
                    if flags.reduced && flags.prime {
                        assert!(
                            via_sweep == via_sum || via_sweep == via_sum.negate_exponents(),
                            "shadow {:?} mask {mask}: sweep {via_sweep} vs sum {via_sum}",
                            s.order
                        );
                        let w = semi_meander_writhe(s, &over);
                        assert_eq!(
                            fingerprint_from_bracket(&via_sweep, w, 1),
                            fingerprint(&d),
                            "fingerprint for {:?} mask {mask}",
                            s.order
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ogc_search_finds_4_1_at_4() {
        let target = catalog().fingerprint_of("4_1").unwrap();
        let (_, n) = search_ogc_diagram(&target, 6).unwrap().unwrap();
        assert_eq!(n, 4);
    }
}
