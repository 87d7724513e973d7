//! Knot/link diagrams: closures of meanders and meandric systems, planar
//! realization of Gauss codes, diagram flags, faces, mirroring, and ordered
//! Gauss code search.
//!
//! A diagram is a signed Gauss code plus per-crossing embedding data. At a
//! crossing the four edge-ends sit in counterclockwise order
//! `[under-in, x, under-out, y]` where `{x, y}` is the over strand; the
//! crossing sign is `+1` exactly when the over strand enters at `y` (the slot
//! counterclockwise-previous to `under-in`), so the sign doubles as the local
//! chirality bit of the embedding.

pub mod codes;
pub mod realize;
pub mod shadows;

pub use codes::{dt_to_gauss, gauss_to_dt, knot_code_from_short, link_code_from_short, DTCode, GaussCode};
pub use realize::realize_gauss_code;

use crate::invariants::sweep::{SweepEvent, SweepPlan};
use crate::meander::{Foot, MeandricSystem, OpenMeander};
use crate::{Error, Result};
use std::sync::Arc;

/// Per-diagram bracket sweep data: a layout-derived event plan plus the
/// over/under assignment along the axis strand.
#[derive(Debug, Clone)]
pub struct SweepData {
    pub plan: Arc<SweepPlan>,
    pub axis_over: Vec<bool>,
}

/// A realized knot/link diagram.
#[derive(Debug, Clone)]
pub struct Diagram {
    code: GaussCode,
    /// Crossing signs indexed by label-1; equals the chirality bit of the
    /// local embedding (`+1` = over strand enters counterclockwise-previous
    /// to the under-in end).
    signs: Vec<i8>,
    sweep: Option<SweepData>,
    meander: Option<OpenMeander>,
}

impl Diagram {
    pub fn code(&self) -> &GaussCode {
        &self.code
    }

    pub fn n_crossings(&self) -> usize {
        self.signs.len()
    }

    pub fn n_components(&self) -> usize {
        self.code.components.len()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    pub fn sweep_data(&self) -> Option<&SweepData> {
        self.sweep.as_ref()
    }

    /// The open meander this diagram closed from, when built that way.
    pub fn meander(&self) -> Option<&OpenMeander> {
        self.meander.as_ref()
    }

    /// A crossingless diagram with `n` disjoint unknotted components.
    pub fn unlink(n: usize) -> Diagram {
        Diagram {
            code: GaussCode { components: vec![Vec::new(); n] },
            signs: Vec::new(),
            sweep: None,
            meander: None,
        }
    }

    pub(crate) fn from_parts(
        code: GaussCode,
        signs: Vec<i8>,
        sweep: Option<SweepData>,
        meander: Option<OpenMeander>,
    ) -> Diagram {
        Diagram { code, signs, sweep, meander }
    }

    /// All over/under assignments flipped.
    pub fn mirror(&self) -> Diagram {
        Diagram {
            code: self.code.mirrored(),
            signs: self.signs.iter().map(|&s| -s).collect(),
            sweep: self.sweep.as_ref().map(|sd| SweepData {
                plan: sd.plan.clone(),
                axis_over: sd.axis_over.iter().map(|&b| !b).collect(),
            }),
            meander: self.meander.clone(),
        }
    }
}

// ---------------------------------------------------------------------------
// Closures of meanders and meandric systems
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Conn {
    Open,
    Close,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum ClosureKind {
    /// Odd order, meander part appended in traversal order: closure arcs wrap
    /// around north and south.
    OddAsIs,
    /// Odd order, meander part appended reversed: closure arcs join locally
    /// east and west.
    OddReversed,
    /// Even order: axis closed through the north, curve closed through the
    /// south.
    EvenMeander,
    /// The axis is a closed circle (meandric systems, axis-form codes).
    Circle,
}

/// Compile an axis-aligned layout into a bracket sweep plan. `conns[i]` are
/// the upper and lower connections at foot `i+1`; `labels[i]` is the crossing
/// label there.
pub(crate) fn compile_axis_plan(conns: &[(Conn, Conn)], labels: &[usize], kind: ClosureKind) -> SweepPlan {
    let mut events = Vec::new();
    let (initial, mut axis, mut upper, mut lower) = match kind {
        ClosureKind::OddAsIs | ClosureKind::EvenMeander => (vec![1usize, 0, 3, 2], 1usize, 0usize, 0usize),
        ClosureKind::OddReversed => (vec![1usize, 0], 0usize, 0, 0),
        ClosureKind::Circle => (vec![1usize, 0], 1usize, 0, 0),
    };
    let mut start_ray = kind != ClosureKind::Circle;
    for (i, &(u, l)) in conns.iter().enumerate() {
        let crossing = labels[i] - 1;
        match (u, l) {
            (Conn::Close, Conn::Open) => {
                assert!(upper > 0, "no upper strand to close at foot {}", i + 1);
                events.push(SweepEvent::Cross { pos: axis - 1, crossing, ascending_is_axis: true });
                axis -= 1;
                upper -= 1;
                lower += 1;
            }
            (Conn::Open, Conn::Close) => {
                if lower == 0 {
                    assert!(start_ray, "no lower strand to close at foot {}", i + 1);
                    start_ray = false;
                } else {
                    lower -= 1;
                }
                events.push(SweepEvent::Cross { pos: axis, crossing, ascending_is_axis: false });
                axis += 1;
                upper += 1;
            }
            (Conn::Close, Conn::Close) => {
                assert!(upper > 0);
                events.push(SweepEvent::Cross { pos: axis - 1, crossing, ascending_is_axis: true });
                events.push(SweepEvent::Cap { pos: axis });
                axis -= 1;
                upper -= 1;
                if lower == 0 {
                    assert!(start_ray, "no lower strand to close at foot {}", i + 1);
                    start_ray = false;
                } else {
                    lower -= 1;
                }
            }
            (Conn::Open, Conn::Open) => {
                events.push(SweepEvent::Cup { pos: axis });
                events.push(SweepEvent::Cross { pos: axis + 1, crossing, ascending_is_axis: true });
                axis += 1;
                upper += 1;
                lower += 1;
            }
        }
    }
    match kind {
        ClosureKind::OddAsIs => {
            assert!(upper == 1 && lower == 0 && !start_ray);
            events.push(SweepEvent::Cap { pos: 0 }); // north closure with end ray
            events.push(SweepEvent::Cap { pos: 0 }); // axis with south closure
        }
        ClosureKind::OddReversed => {
            assert!(upper == 1 && lower == 0 && !start_ray);
            events.push(SweepEvent::Cap { pos: 0 });
        }
        ClosureKind::EvenMeander => {
            assert!(upper == 0 && lower == 1 && !start_ray);
            events.push(SweepEvent::Cap { pos: 0 }); // north closure with axis
            events.push(SweepEvent::Cap { pos: 0 }); // end ray with south closure
        }
        ClosureKind::Circle => {
            assert!(upper == 0 && lower == 0);
            events.push(SweepEvent::Cap { pos: 0 });
        }
    }
    SweepPlan { initial_partners: initial, events }
}

/// Foot connection table of an open meander: for each foot, whether the
/// upper/lower side opens or closes a strand there. The start ray counts as
/// closing the initial lower strand; the end ray stays open.
fn meander_conns(m: &OpenMeander) -> Vec<(Conn, Conn)> {
    let n = m.order();
    let mut upper = vec![Conn::Open; n];
    let mut lower = vec![Conn::Open; n];
    for &(a, b) in &m.upper().arcs {
        let _ = a;
        upper[b - 1] = Conn::Close;
    }
    for &(a, b) in &m.lower().arcs {
        let _ = a;
        lower[b - 1] = Conn::Close;
    }
    let p = m.permutation();
    lower[p[0] as usize - 1] = Conn::Close;
    upper.into_iter().zip(lower).collect()
}

/// Close an open meander into a diagram with the given over/under assignment
/// along the axis (`axis_over[c-1]` = the axis strand passes over at
/// crossing `c`). Of the two possible closures the one without a junction
/// monogon is chosen.
pub fn close_meander_with(m: &OpenMeander, axis_over: &[bool]) -> Diagram {
    let n = m.order();
    assert_eq!(axis_over.len(), n);
    let p = m.permutation();
    let (traversal, kind): (Vec<Foot>, ClosureKind) = if n % 2 == 1 {
        let as_is_monogon = p[0] as usize == n || p[n - 1] == 1;
        if as_is_monogon && n > 1 {
            (p.iter().rev().copied().collect(), ClosureKind::OddReversed)
        } else {
            (p.to_vec(), ClosureKind::OddAsIs)
        }
    } else {
        (p.to_vec(), ClosureKind::EvenMeander)
    };
    // Direction of the curve at each crossing: upward iff the traversal visit
    // index is odd when the curve starts below the axis (even otherwise).
    let mut curve_up = vec![false; n];
    let starts_below = kind != ClosureKind::OddReversed;
    for (j, &c) in traversal.iter().enumerate() {
        let odd_visit = j % 2 == 0;
        curve_up[c as usize - 1] = odd_visit == starts_below;
    }
    let signs: Vec<i8> = (0..n)
        .map(|c| if axis_over[c] == curve_up[c] { 1 } else { -1 })
        .collect();
    let axis_entries: Vec<i32> = (1..=n as i32)
        .map(|i| if axis_over[i as usize - 1] { i } else { -i })
        .collect();
    let curve_entries: Vec<i32> = traversal
        .iter()
        .map(|&c| {
            let c = c as i32;
            if axis_over[c as usize - 1] {
                -c
            } else {
                c
            }
        })
        .collect();
    let code = if n % 2 == 1 {
        let mut e = axis_entries;
        e.extend(curve_entries);
        GaussCode::knot(e)
    } else {
        GaussCode { components: vec![axis_entries, curve_entries] }
    };
    let labels: Vec<usize> = (1..=n).collect();
    let plan = compile_axis_plan(&meander_conns(m), &labels, kind);
    Diagram {
        code,
        signs,
        sweep: Some(SweepData { plan: Arc::new(plan), axis_over: axis_over.to_vec() }),
        meander: Some(m.clone()),
    }
}

/// Close an open meander into an alternating diagram (axis strand passes
/// under at odd crossings, matching the `(-1)^i i` Gauss code convention).
pub fn close_open_meander(m: &OpenMeander) -> Diagram {
    let axis_over: Vec<bool> = (1..=m.order()).map(|i| i % 2 == 0).collect();
    close_meander_with(m, &axis_over)
}

/// Close a meandric system: the axis becomes a circle, yielding a
/// `(k+1)`-component alternating diagram.
pub fn close_meandric_system(s: &MeandricSystem) -> Diagram {
    let n = s.order;
    let axis_over: Vec<bool> = (1..=n).map(|i| i % 2 == 0).collect();
    let mut curve_up = vec![false; n];
    let mut curve_comps: Vec<Vec<i32>> = Vec::new();
    for lp in &s.loops {
        let mut comp = Vec::with_capacity(lp.len());
        for (j, &c) in lp.iter().enumerate() {
            curve_up[c as usize - 1] = j % 2 == 0;
            let c = c as i32;
            comp.push(if axis_over[c as usize - 1] { -c } else { c });
        }
        curve_comps.push(comp);
    }
    let signs: Vec<i8> = (0..n)
        .map(|c| if axis_over[c] == curve_up[c] { 1 } else { -1 })
        .collect();
    let axis_entries: Vec<i32> = (1..=n as i32)
        .map(|i| if i % 2 == 0 { i } else { -i })
        .collect();
    let mut components = vec![axis_entries];
    components.extend(curve_comps);
    let mut upper = vec![Conn::Open; n];
    let mut lower = vec![Conn::Open; n];
    for &(_, b) in &s.upper.arcs {
        upper[b - 1] = Conn::Close;
    }
    for &(_, b) in &s.lower.arcs {
        lower[b - 1] = Conn::Close;
    }
    let conns: Vec<(Conn, Conn)> = upper.into_iter().zip(lower).collect();
    let labels: Vec<usize> = (1..=n).collect();
    let plan = compile_axis_plan(&conns, &labels, ClosureKind::Circle);
    Diagram {
        code: GaussCode { components },
        signs,
        sweep: Some(SweepData { plan: Arc::new(plan), axis_over }),
        meander: None,
    }
}

// ---------------------------------------------------------------------------
// Faces and checkerboard coloring
// ---------------------------------------------------------------------------

/// A half-edge end: (crossing label - 1, slot in counterclockwise order).
pub type Dart = (usize, u8);

pub struct Embedding {
    /// For each crossing, the edge id incident at each of the 4 slots.
    pub slot_edge: Vec<[usize; 4]>,
    /// For each edge id, its two (crossing, slot) ends in traversal order.
    pub edge_ends: Vec<(Dart, Dart)>,
}

impl Diagram {
    /// Build the slot/edge incidence structure of the embedding.
    pub fn embedding(&self) -> Embedding {
        let code = &self.code;
        let n = self.n_crossings();
        let slot_in = |label: usize, over: bool| -> u8 {
            if over {
                if self.signs[label - 1] > 0 {
                    3
                } else {
                    1
                }
            } else {
                0
            }
        };
        let slot_out = |label: usize, over: bool| -> u8 { (slot_in(label, over) + 2) % 4 };

        let mut slot_edge = vec![[usize::MAX; 4]; n];
        let mut edge_ends = Vec::new();
        for comp in &code.components {
            let len = comp.len();
            for pos in 0..len {
                let e_from = comp[pos];
                let e_to = comp[(pos + 1) % len];
                let (lf, of) = (e_from.unsigned_abs() as usize, e_from > 0);
                let (lt, ot) = (e_to.unsigned_abs() as usize, e_to > 0);
                let d_from: Dart = (lf - 1, slot_out(lf, of));
                let d_to: Dart = (lt - 1, slot_in(lt, ot));
                let id = edge_ends.len();
                edge_ends.push((d_from, d_to));
                slot_edge[d_from.0][d_from.1 as usize] = id;
                slot_edge[d_to.0][d_to.1 as usize] = id;
            }
        }
        Embedding { slot_edge, edge_ends }
    }

    /// Faces of the embedding as dart orbits, plus a proper 2-coloring of the
    /// faces (adjacent faces across an edge get different colors).
    pub fn checkerboard_faces(&self) -> (Vec<Vec<Dart>>, Vec<u8>) {
        let n = self.n_crossings();
        if n == 0 {
            return (vec![Vec::new(), Vec::new()], vec![0, 1]);
        }
        let emb = self.embedding();
        let other_end = |d: Dart| -> Dart {
            let e = emb.slot_edge[d.0][d.1 as usize];
            let (a, b) = emb.edge_ends[e];
            if a == d {
                b
            } else {
                a
            }
        };
        let mut face_of = vec![usize::MAX; 4 * n];
        let mut faces: Vec<Vec<Dart>> = Vec::new();
        for c in 0..n {
            for s in 0..4u8 {
                let start: Dart = (c, s);
                if face_of[4 * c + s as usize] != usize::MAX {
                    continue;
                }
                let fid = faces.len();
                let mut orbit = Vec::new();
                let mut d = start;
                loop {
                    face_of[4 * d.0 + d.1 as usize] = fid;
                    orbit.push(d);
                    let e = other_end(d);
                    d = (e.0, (e.1 + 1) % 4);
                    if d == start {
                        break;
                    }
                }
                faces.push(orbit);
            }
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); faces.len()];
        for &((c1, s1), (c2, s2)) in &emb.edge_ends {
            let f1 = face_of[4 * c1 + ((s1 + 1) % 4) as usize];
            let f2 = face_of[4 * c2 + ((s2 + 1) % 4) as usize];
            adj[f1].push(f2);
            adj[f2].push(f1);
        }
        let mut colors = vec![u8::MAX; faces.len()];
        for f0 in 0..faces.len() {
            if colors[f0] != u8::MAX {
                continue;
            }
            colors[f0] = 0;
            let mut queue = std::collections::VecDeque::from([f0]);
            while let Some(f) = queue.pop_front() {
                for &g in &adj[f] {
                    if colors[g] == u8::MAX {
                        colors[g] = 1 - colors[f];
                        queue.push_back(g);
                    } else {
                        debug_assert_ne!(colors[g], colors[f], "checkerboard coloring failed");
                    }
                }
            }
        }
        (faces, colors)
    }

    pub fn face_count(&self) -> usize {
        self.checkerboard_faces().0.len()
    }
}

// ---------------------------------------------------------------------------
// Diagram flags
// ---------------------------------------------------------------------------

/// Recomputable structural properties of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramFlags {
    pub reduced: bool,
    pub prime: bool,
    pub split: bool,
    pub alternating: bool,
    pub positive: bool,
    pub components_simple: bool,
}

impl Diagram {
    pub fn analyze(&self) -> DiagramFlags {
        let code = &self.code;
        let n = self.n_crossings();
        let comps = &code.components;

        let components_simple = comps.iter().all(|c| {
            let mut seen = std::collections::HashSet::new();
            c.iter().all(|e| seen.insert(e.unsigned_abs()))
        });

        let alternating = comps.iter().all(|c| {
            if c.len() < 2 {
                return true;
            }
            (0..c.len()).all(|i| (c[i] > 0) != (c[(i + 1) % c.len()] > 0))
        });

        let positive = n == 0 || self.signs.iter().all(|&s| s == self.signs[0]);

        let split = {
            let k = comps.len();
            if k <= 1 {
                false
            } else {
                let mut comp_of_label = vec![usize::MAX; n + 1];
                let mut parent: Vec<usize> = (0..k).collect();
                fn find(parent: &mut Vec<usize>, x: usize) -> usize {
                    if parent[x] != x {
                        let r = find(parent, parent[x]);
                        parent[x] = r;
                    }
                    parent[x]
                }
                for (ci, c) in comps.iter().enumerate() {
                    for e in c {
                        let l = e.unsigned_abs() as usize;
                        if comp_of_label[l] == usize::MAX {
                            comp_of_label[l] = ci;
                        } else {
                            let a = find(&mut parent, comp_of_label[l]);
                            let b = find(&mut parent, ci);
                            parent[a] = b;
                        }
                    }
                }
                let r0 = find(&mut parent, 0);
                (1..k).any(|i| find(&mut parent, i) != r0)
            }
        };

        let reduced = n > 0 && !self.has_nugatory();
        let prime = reduced && !split && !self.has_two_edge_cut();

        DiagramFlags { reduced, prime, split, alternating, positive, components_simple }
    }

    /// A crossing is nugatory when the strand segment between its two passes
    /// (necessarily on one component) closes up without meeting the rest of
    /// the diagram.
    fn has_nugatory(&self) -> bool {
        for comp in &self.code.components {
            let mut first = std::collections::HashMap::new();
            for (i, e) in comp.iter().enumerate() {
                let l = e.unsigned_abs();
                if let Some(&p) = first.get(&l) {
                    let mut counts = std::collections::HashMap::new();
                    for x in &comp[p + 1..i] {
                        *counts.entry(x.unsigned_abs()).or_insert(0u32) += 1;
                    }
                    if counts.values().all(|&c| c == 2) {
                        return true;
                    }
                } else {
                    first.insert(l, i);
                }
            }
        }
        false
    }

    /// Detect a 2-edge cut separating crossings (a composite diagram). Both
    /// cut edges necessarily lie on one component.
    fn has_two_edge_cut(&self) -> bool {
        let comps = &self.code.components;
        let n = self.n_crossings();
        for (ci, comp) in comps.iter().enumerate() {
            let len = comp.len();
            if len < 4 {
                continue;
            }
            for p in 0..len {
                'cut: for q in p + 1..len {
                    // Paths P1 = positions [p, q), P2 = the rest.
                    let mut side = vec![0u8; n + 1];
                    for (idx, e) in comp.iter().enumerate() {
                        let l = e.unsigned_abs() as usize;
                        let s = if idx >= p && idx < q { 1 } else { 2 };
                        if side[l] == 0 {
                            side[l] = s;
                        } else if side[l] != s {
                            continue 'cut;
                        }
                    }
                    if !(side.iter().any(|&s| s == 1) && side.iter().any(|&s| s == 2)) {
                        continue;
                    }
                    // Other components must attach wholly to one side.
                    let mut progress = true;
                    while progress {
                        progress = false;
                        for (cj, other) in comps.iter().enumerate() {
                            if cj == ci {
                                continue;
                            }
                            let mut s_seen = 0u8;
                            for e in other {
                                let l = e.unsigned_abs() as usize;
                                if side[l] != 0 {
                                    if s_seen == 0 {
                                        s_seen = side[l];
                                    } else if s_seen != side[l] {
                                        continue 'cut;
                                    }
                                }
                            }
                            if s_seen != 0 {
                                for e in other {
                                    let l = e.unsigned_abs() as usize;
                                    if side[l] == 0 {
                                        side[l] = s_seen;
                                        progress = true;
                                    }
                                }
                            }
                        }
                    }
                    if side[1..].iter().all(|&s| s != 0) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// Ordered Gauss codes
// ---------------------------------------------------------------------------

/// Search all rotations and reversals of a single-component code for an
/// ordered form (first half visits crossings `1..n` in order after
/// relabeling). Returns the lexicographically smallest ordered code found.
pub fn find_ordered_form(code: &GaussCode) -> Option<GaussCode> {
    if code.components.len() != 1 {
        return None;
    }
    let seq = &code.components[0];
    let len = seq.len();
    let n = len / 2;
    if n == 0 {
        return None;
    }
    let mut best: Option<Vec<i32>> = None;
    let mut consider = |rot: Vec<i32>| {
        let mut map = vec![0usize; n + 1];
        let mut next = 1usize;
        for e in rot.iter().take(n) {
            let a = e.unsigned_abs() as usize;
            if map[a] != 0 {
                return;
            }
            map[a] = next;
            next += 1;
        }
        let relabeled: Vec<i32> = rot
            .iter()
            .map(|&e| {
                let m = map[e.unsigned_abs() as usize] as i32;
                if e > 0 {
                    m
                } else {
                    -m
                }
            })
            .collect();
        if best.as_ref().map_or(true, |b| relabeled < *b) {
            best = Some(relabeled);
        }
    };
    for start in 0..len {
        let fwd: Vec<i32> = (0..len).map(|i| seq[(start + i) % len]).collect();
        consider(fwd);
        let rev: Vec<i32> = (0..len).map(|i| seq[(start + len - i) % len]).collect();
        consider(rev);
    }
    best.map(GaussCode::knot)
}

/// Relabel a multi-component code so that component `axis` reads `1..n` in
/// order (possible when that component visits every crossing exactly once).
pub fn ordered_link_form(code: &GaussCode, axis: usize) -> Result<GaussCode> {
    let n = code.n_crossings();
    let comp = code
        .components
        .get(axis)
        .ok_or_else(|| Error::domain("component index out of range"))?;
    if comp.len() != n {
        return Err(Error::domain("axis component must visit every crossing once"));
    }
    let mut map = vec![0usize; n + 1];
    for (i, e) in comp.iter().enumerate() {
        map[e.unsigned_abs() as usize] = i + 1;
    }
    let mut relabeled = code.relabeled(&map);
    relabeled.components.swap(0, axis);
    Ok(relabeled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::meander::OpenMeander;

    #[test]
    fn closure_gauss_code_matches_paper() {
        let m = OpenMeander::from_permutation(vec![1, 8, 5, 6, 7, 4, 3, 2, 9]).unwrap();
        let d = close_open_meander(&m);
        assert_eq!(
            d.code().components[0],
            vec![-1, 2, -3, 4, -5, 6, -7, 8, -9, 1, -8, 5, -6, 7, -4, 3, -2, 9]
        );
        let f = d.analyze();
        assert!(f.reduced && f.prime && f.alternating && f.positive);
    }

    #[test]
    fn hopf_closure() {
        let m = OpenMeander::from_permutation(vec![1, 2]).unwrap();
        let d = close_open_meander(&m);
        assert_eq!(d.n_components(), 2);
        assert_eq!(d.code().components[0], vec![-1, 2]);
        assert_eq!(d.code().components[1], vec![1, -2]);
        assert_eq!(d.face_count(), 4); // V - E + F = 2  =>  F = n + 2
    }

    #[test]
    fn single_crossing_closure_not_reduced() {
        let m = OpenMeander::from_permutation(vec![1]).unwrap();
        let d = close_open_meander(&m);
        assert_eq!(d.n_components(), 1);
        assert!(!d.analyze().reduced);
        assert_eq!(d.face_count(), 3);
    }

    #[test]
    fn faces_euler_small_meanders() {
        for n in 1..=7 {
            for m in crate::meander::enumerate_open_meanders(n) {
                let d = close_open_meander(&m);
                assert_eq!(d.face_count(), n + 2, "euler check for {:?}", m.permutation());
            }
        }
    }

    #[test]
    fn trefoil_faces() {
        let m = OpenMeander::from_permutation(vec![1, 2, 3]).unwrap();
        let d = close_open_meander(&m);
        assert_eq!(d.face_count(), 5);
    }

    #[test]
    fn positivity_of_alternating_closures() {
        for n in [3usize, 5, 7] {
            for m in crate::meander::enumerate_open_meanders(n) {
                let d = close_open_meander(&m);
                let f = d.analyze();
                assert!(f.alternating && f.positive, "at {:?}", m.permutation());
            }
        }
    }

    #[test]
    fn simple_components_of_even_closures() {
        for m in crate::meander::enumerate_open_meanders(6) {
            let d = close_open_meander(&m);
            assert!(d.analyze().components_simple);
        }
    }

    #[test]
    fn mirror_is_involution() {
        let m = OpenMeander::from_permutation(vec![1, 8, 5, 6, 7, 4, 3, 2, 9]).unwrap();
        let d = close_open_meander(&m);
        let dd = d.mirror().mirror();
        assert_eq!(d.code(), dd.code());
        assert_eq!(d.signs(), dd.signs());
    }

    #[test]
    fn ordered_form_examples() {
        // 7_6's ordered code, fed in from a rotated starting point.
        let code = GaussCode::knot(vec![5, -6, 7, -5, 4, -1, 2, -7, 6, -3, 1, -2, 3, -4]);
        assert!(find_ordered_form(&code).is_some());
        // Any meander closure has an ordered form (its own code is ordered).
        for n in [3usize, 5] {
            for m in crate::meander::enumerate_open_meanders(n) {
                let d = close_open_meander(&m);
                assert!(find_ordered_form(d.code()).is_some());
            }
        }
    }

    #[test]
    fn meandric_closure_hopf() {
        let systems = crate::meander::enumerate_meandric_systems(2, 1);
        let d = close_meandric_system(&systems[0]);
        assert_eq!(d.n_components(), 2);
        assert_eq!(d.face_count(), 4);
    }

    #[test]
    fn composite_closure_detected() {
        // Meander closures are positive diagrams, so the smallest composite
        // reduced closure is the triple-trefoil shape at order 9 (orders 5
        // and 7 have none). Cross-check against the bracket product law for
        // connected sums: f(K1 # K2) = f(K1) * f(K2).
        for n in [5usize, 7] {
            for m in crate::meander::enumerate_open_meanders(n) {
                let f = close_open_meander(&m).analyze();
                assert!(!(f.reduced && !f.prime), "unexpected composite at order {n}");
            }
        }
        let trefoil =
            crate::invariants::fingerprint(&close_open_meander(&OpenMeander::from_permutation(vec![1, 2, 3]).unwrap()));
        let cube = trefoil.bracket.mul(&trefoil.bracket).mul(&trefoil.bracket);
        let mut found = false;
        for m in crate::meander::enumerate_open_meanders(9) {
            let d = close_open_meander(&m);
            let f = d.analyze();
            if f.reduced && !f.prime {
                found = true;
                let fp = crate::invariants::fingerprint(&d);
                let candidates = [cube.clone(), cube.negate_exponents()];
                assert!(
                    candidates.contains(&fp.bracket),
                    "composite closure does not factor as trefoil^3"
                );
            }
        }
        assert!(found, "expected a composite reduced closure at order 9");
    }
}
