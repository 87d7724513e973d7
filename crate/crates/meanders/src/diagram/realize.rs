//! Planar realization of Gauss codes: a backtracking search over the local
//! chirality bit of each crossing, accepting exactly the assignments whose
//! rotation system has the spherical face count (V - E + F = 2). Codes with
//! one component through every crossing ("axis form": products, meander link
//! codes) are realized directly by reconstructing the inside/outside arc
//! structure around that component.

use super::{compile_axis_plan, ClosureKind, Conn, Diagram, GaussCode, SweepData};
use crate::{Error, Result};
use std::sync::Arc;

/// Count faces of the rotation system determined by `signs`.
pub(crate) fn count_faces(code: &GaussCode, signs: &[i8]) -> usize {
    let n = signs.len();
    let slot_in = |label: usize, over: bool| -> u8 {
        if over {
            if signs[label - 1] > 0 {
                3
            } else {
                1
            }
        } else {
            0
        }
    };
    // dart index = 4*(label-1) + slot; other_end[dart] = dart across the edge
    let mut other = vec![u32::MAX; 4 * n];
    for comp in &code.components {
        let len = comp.len();
        for pos in 0..len {
            let e_from = comp[pos];
            let e_to = comp[(pos + 1) % len];
            let (lf, of) = (e_from.unsigned_abs() as usize, e_from > 0);
            let (lt, ot) = (e_to.unsigned_abs() as usize, e_to > 0);
            let df = 4 * (lf - 1) as u32 + ((slot_in(lf, of) + 2) % 4) as u32;
            let dt = 4 * (lt - 1) as u32 + slot_in(lt, ot) as u32;
            other[df as usize] = dt;
            other[dt as usize] = df;
        }
    }
    let mut seen = vec![false; 4 * n];
    let mut faces = 0usize;
    for start in 0..4 * n {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start as u32;
        loop {
            seen[d as usize] = true;
            let e = other[d as usize];
            let c = e / 4;
            let s = (e % 4 + 1) % 4;
            d = 4 * c + s;
            if d as usize == start {
                break;
            }
        }
    }
    faces
}

/// Necessary parity condition for knot codes: the strand segment between the
/// two passes of a crossing meets other crossings an even number of times.
fn evenness_ok(seq: &[i32]) -> bool {
    let len = seq.len();
    let mut first = vec![usize::MAX; len / 2 + 1];
    for (i, e) in seq.iter().enumerate() {
        let l = e.unsigned_abs() as usize;
        if first[l] == usize::MAX {
            first[l] = i;
        } else if (i - first[l]) % 2 == 0 {
            return false;
        }
    }
    true
}

fn realize_connected_knot(code: &GaussCode) -> Result<Diagram> {
    let n = code.n_crossings();
    let seq = &code.components[0];
    if !evenness_ok(seq) {
        return Err(Error::NotRealizable(format!("{code}")));
    }
    assert!(n <= 24, "realization search limited to 24 crossings");
    let mut signs = vec![0i8; n];
    for mask in 0u32..(1 << n) {
        for c in 0..n {
            signs[c] = if mask & (1 << c) != 0 { 1 } else { -1 };
        }
        if count_faces(code, &signs) == n + 2 {
            return Ok(Diagram::from_parts(code.clone(), signs, None, None));
        }
    }
    Err(Error::NotRealizable(format!("{code}")))
}

/// Realize a multi-component code in which one component passes through
/// every crossing exactly once: that component becomes a round circle and
/// the remaining components are arc systems inside/outside it.
fn realize_axis_form(code: &GaussCode) -> Result<Diagram> {
    let n = code.n_crossings();
    let comps = &code.components;
    let axis_idx = comps
        .iter()
        .position(|c| {
            c.len() == n && {
                let mut seen = vec![false; n + 1];
                c.iter().all(|e| {
                    let l = e.unsigned_abs() as usize;
                    !std::mem::replace(&mut seen[l], true)
                })
            }
        })
        .ok_or_else(|| {
            Error::NotRealizable(format!(
                "unsupported multi-component code (no component visits every crossing once): {code}"
            ))
        })?;
    let axis = &comps[axis_idx];
    let mut pos_of = vec![0usize; n + 1];
    let mut axis_over = vec![false; n];
    for (i, &e) in axis.iter().enumerate() {
        let l = e.unsigned_abs() as usize;
        pos_of[l] = i;
        axis_over[l - 1] = e > 0;
    }
    let others: Vec<usize> = (0..comps.len()).filter(|&i| i != axis_idx).collect();
    let k = others.len();
    // Phase bit per curve: whether its first arc lies inside (below).
    for phase_mask in 0u32..(1 << k) {
        // arcs per side as (min_pos, max_pos).
        let mut inside: Vec<(usize, usize)> = Vec::new();
        let mut outside: Vec<(usize, usize)> = Vec::new();
        let mut curve_up = vec![false; n];
        for (yi, &ci) in others.iter().enumerate() {
            let comp = &comps[ci];
            let len = comp.len();
            let inside_first = phase_mask & (1 << yi) != 0;
            for j in 0..len {
                let a = pos_of[comp[j].unsigned_abs() as usize];
                let b = pos_of[comp[(j + 1) % len].unsigned_abs() as usize];
                let arc = (a.min(b), a.max(b));
                let arc_inside = (j % 2 == 0) == inside_first;
                if arc_inside {
                    inside.push(arc);
                } else {
                    outside.push(arc);
                }
            }
            for j in 0..len {
                let label = comp[j].unsigned_abs() as usize;
                let prev_arc_inside = ((j + len - 1) % len % 2 == 0) == inside_first;
                // Arrives from below exactly when the previous arc is inside.
                curve_up[label - 1] = prev_arc_inside;
            }
        }
        let noncross = |arcs: &[(usize, usize)]| {
            for (i, &(a, b)) in arcs.iter().enumerate() {
                for &(c, d) in &arcs[i + 1..] {
                    if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                        return false;
                    }
                }
            }
            true
        };
        if !noncross(&inside) || !noncross(&outside) {
            continue;
        }
        let signs: Vec<i8> = (0..n)
            .map(|c| if axis_over[c] == curve_up[c] { 1 } else { -1 })
            .collect();
        if count_faces(code, &signs) != n + 2 {
            continue;
        }
        // Sweep plan: outside arcs above the axis, inside below.
        let mut upper = vec![Conn::Open; n];
        let mut lower = vec![Conn::Open; n];
        for &(_, b) in &outside {
            upper[b] = Conn::Close;
        }
        for &(_, b) in &inside {
            lower[b] = Conn::Close;
        }
        let conns: Vec<(Conn, Conn)> = upper.into_iter().zip(lower).collect();
        let labels: Vec<usize> = axis.iter().map(|e| e.unsigned_abs() as usize).collect();
        let plan = compile_axis_plan(&conns, &labels, ClosureKind::Circle);
        return Ok(Diagram::from_parts(
            code.clone(),
            signs,
            Some(SweepData { plan: Arc::new(plan), axis_over }),
            None,
        ));
    }
    Err(Error::NotRealizable(format!("{code}")))
}

/// Find a planar realization of a well-formed signed Gauss code, or report
/// that none exists.
pub fn realize_gauss_code(code: &GaussCode) -> Result<Diagram> {
    code.validate()?;
    if code.n_crossings() == 0 {
        return Ok(Diagram::unlink(code.components.len()));
    }
    // Split codes: realize each connected cluster of components separately
    // (the clusters sit in disjoint disks on the sphere).
    let clusters = component_clusters(code);
    if clusters.len() > 1 {
        let n = code.n_crossings();
        let mut signs = vec![0i8; n];
        for cluster in &clusters {
            // Compact the cluster's labels to 1..m for the realizers.
            let mut labels: Vec<usize> = cluster
                .iter()
                .flat_map(|&i| code.components[i].iter().map(|e| e.unsigned_abs() as usize))
                .collect();
            labels.sort_unstable();
            labels.dedup();
            let mut to_compact = vec![0usize; n + 1];
            for (k, &l) in labels.iter().enumerate() {
                to_compact[l] = k + 1;
            }
            let sub = GaussCode {
                components: cluster
                    .iter()
                    .map(|&i| {
                        code.components[i]
                            .iter()
                            .map(|&e| {
                                let m = to_compact[e.unsigned_abs() as usize] as i32;
                                if e > 0 {
                                    m
                                } else {
                                    -m
                                }
                            })
                            .collect()
                    })
                    .collect(),
            };
            let d = realize_cluster(&sub)?;
            for (k, &l) in labels.iter().enumerate() {
                signs[l - 1] = d.signs()[k];
            }
        }
        return Ok(Diagram::from_parts(code.clone(), signs, None, None));
    }
    realize_cluster(code)
}

fn component_clusters(code: &GaussCode) -> Vec<Vec<usize>> {
    let k = code.components.len();
    let n = code.n_crossings();
    let mut comp_of_label = vec![usize::MAX; n + 1];
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for (ci, c) in code.components.iter().enumerate() {
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
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..k {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

/// Exhaustive chirality search for any connected code.
fn realize_by_search(code: &GaussCode) -> Result<Diagram> {
    let n = code.n_crossings();
    assert!(n <= 24, "realization search limited to 24 crossings");
    let mut signs = vec![0i8; n];
    for mask in 0u32..(1 << n) {
        for c in 0..n {
            signs[c] = if mask & (1 << c) != 0 { 1 } else { -1 };
        }
        if count_faces(code, &signs) == n + 2 {
            return Ok(Diagram::from_parts(code.clone(), signs, None, None));
        }
    }
    Err(Error::NotRealizable(format!("{code}")))
}

fn realize_cluster(code: &GaussCode) -> Result<Diagram> {
    if code.components.len() == 1 {
        realize_connected_knot(code)
    } else {
        realize_axis_form(code).or_else(|_| realize_by_search(code))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{knot_code_from_short, link_code_from_short};

    #[test]
    fn trefoil_realizes() {
        let code = GaussCode::knot(vec![-1, 2, -3, 1, -2, 3]);
        let d = realize_gauss_code(&code).unwrap();
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.face_count(), 5);
    }

    #[test]
    fn figure_eight_nonminimal_meander_realizes() {
        let code = GaussCode::knot(vec![-1, 2, -3, -4, 5, 3, -2, 1, 4, -5]);
        let d = realize_gauss_code(&code).unwrap();
        assert_eq!(d.n_crossings(), 5);
        assert_eq!(d.face_count(), 7);
    }

    #[test]
    fn nonrealizable_shadow_rejected() {
        // The standard genus-one example: 1 2 3 4 1 2 3 4.
        let code = GaussCode::knot(vec![1, 2, 3, 4, -1, -2, -3, -4]);
        assert!(matches!(realize_gauss_code(&code), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn smallest_nonrealizable_shadows_found_by_search() {
        // Exhaustively check 3-crossing double occurrence words: all are
        // realizable; at 4 crossings non-realizable ones appear.
        let mut nonrealizable_at_4 = 0;
        crate::diagram::shadows::for_each_double_occurrence_word(4, |word| {
            let mut entries = vec![0i32; 8];
            let mut seen = vec![false; 5];
            for (i, &l) in word.iter().enumerate() {
                let over = !std::mem::replace(&mut seen[l as usize], true);
                entries[i] = if over { l as i32 } else { -(l as i32) };
            }
            let code = GaussCode::knot(entries);
            if realize_gauss_code(&code).is_err() {
                nonrealizable_at_4 += 1;
            }
        });
        assert!(nonrealizable_at_4 > 0);
    }

    #[test]
    fn meander_link_codes_realize_axis_form() {
        let code = link_code_from_short(&[1, -4, 3, -2, 5, -6]).unwrap();
        let d = realize_gauss_code(&code).unwrap();
        assert_eq!(d.n_components(), 2);
        assert_eq!(d.face_count(), 8);
    }

    #[test]
    fn realized_closures_match_direct_embeddings() {
        // Realizing the closure code of a meander reproduces a diagram with
        // the same fingerprint as the direct closure.
        for m in crate::meander::enumerate_open_meanders(5) {
            let d = crate::diagram::close_open_meander(&m);
            let r = realize_gauss_code(d.code()).unwrap();
            assert_eq!(crate::invariants::fingerprint(&d), crate::invariants::fingerprint(&r));
        }
    }

    #[test]
    fn whitehead_nonminimal_meander_code_realizes() {
        let code = GaussCode::parse(
            "{{1,-2,3,-4,-5,6,-7,8,9,10},{-1,-6,7,-8,-3,4,5,2,-9,-10}}",
        )
        .unwrap();
        let d = realize_gauss_code(&code).unwrap();
        assert_eq!(d.n_components(), 2);
        assert_eq!(d.face_count(), 12);
        let _ = knot_code_from_short; // referenced by other tests
    }
}
