//! Censuses: group closures into knot/link types by fingerprint, apply the
//! census filters, and produce count tables and listings.

use crate::catalog::{catalog, Counts};
use crate::diagram::{close_open_meander, gauss_to_dt, DTCode, Diagram, GaussCode};
use crate::invariants::{fingerprint, Fingerprint};
use crate::meander::process_open_meanders;
use crate::{par, Error, Result};
use once_cell::sync::OnceCell;
use std::collections::{HashMap, HashSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CensusKind {
    Knot,
    TwoLink,
    MultiLink,
}

impl CensusKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CensusKind::Knot => "knot",
            CensusKind::TwoLink => "2-link",
            CensusKind::MultiLink => "multi-link",
        }
    }
}

/// One knot/link type of a census: the lexicographically minimal DT code
/// among the diagrams encountered, a Gauss code witness, and the resolved
/// name when the type is in the embedded catalog.
#[derive(Debug, Clone)]
pub struct Representative {
    pub fingerprint: Fingerprint,
    pub dt: DTCode,
    pub code: GaussCode,
    pub name: Option<String>,
    pub diagrams: u64,
}

/// A fingerprint class that matched more than one catalog name; fingerprints
/// are not injective in principle, so these are surfaced rather than decided.
#[derive(Debug, Clone)]
pub struct Collision {
    pub fingerprint: Fingerprint,
    pub names: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct CensusRow {
    pub n: usize,
    pub kind: CensusKind,
    pub c: usize,
    pub type_count: usize,
    pub representatives: Vec<Representative>,
    pub collisions: Vec<Collision>,
}

type ClassMap = HashMap<Fingerprint, (DTCode, GaussCode, u64)>;

fn merge_class_maps(mut a: ClassMap, b: ClassMap) -> ClassMap {
    for (fp, (dt, code, cnt)) in b {
        match a.entry(fp) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let v = e.get_mut();
                v.2 += cnt;
                if dt < v.0 {
                    v.0 = dt;
                    v.1 = code;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert((dt, code, cnt));
            }
        }
    }
    a
}

fn finish_row(n: usize, kind: CensusKind, c: usize, classes: ClassMap) -> CensusRow {
    let cat = catalog();
    let mut reps: Vec<Representative> = classes
        .into_iter()
        .map(|(fp, (dt, code, diagrams))| {
            let name = cat.lookup_fingerprint(&fp);
            Representative { fingerprint: fp, dt, code, name, diagrams }
        })
        .collect();
    reps.sort_by(|a, b| a.dt.cmp(&b.dt));
    // Collision report: classes matching two or more distinct catalog names.
    let mut collisions = Vec::new();
    for r in &reps {
        let mut names: Vec<String> = Vec::new();
        for (e, efp) in cat.entries.iter().zip(cat.fingerprints()) {
            if efp.as_ref() == Some(&r.fingerprint) {
                if let Some(nm) = &e.name {
                    if !names.contains(nm) {
                        names.push(nm.clone());
                    }
                }
            }
        }
        if names.len() > 1 {
            collisions.push(Collision { fingerprint: r.fingerprint.clone(), names });
        }
    }
    CensusRow { n, kind, c, type_count: reps.len(), representatives: reps, collisions }
}

/// Census of alternating meander knots with `n` crossings: close every open
/// meander of odd order `n`, keep reduced prime diagrams, deduplicate by
/// fingerprint.
pub fn census_meander_knots(n: usize) -> Result<CensusRow> {
    if n % 2 == 0 {
        return Err(Error::domain("meander knots need odd order"));
    }
    if n == 1 {
        // The single order-1 closure is a curl diagram of the unknot; the
        // table counts it even though it is not reduced.
        let d = close_open_meander(&crate::meander::enumerate_open_meanders(1)[0]);
        let mut classes = ClassMap::new();
        merge_into(
            &mut classes,
            fingerprint(&d),
            gauss_to_dt(d.code()).expect("one-crossing DT"),
            d.code().clone(),
        );
        return Ok(finish_row(1, CensusKind::Knot, 1, classes));
    }
    let classes = process_open_meanders(
        n,
        ClassMap::new,
        |acc, m| {
            let d = close_open_meander(m);
            let flags = d.analyze();
            if !(flags.reduced && flags.prime) {
                return;
            }
            let fp = fingerprint(&d);
            let dt = gauss_to_dt(d.code()).expect("closure has a DT code");
            merge_into(acc, fp, dt, d.code().clone());
        },
        merge_class_maps,
    );
    Ok(finish_row(n, CensusKind::Knot, 1, classes))
}

fn merge_into(acc: &mut ClassMap, fp: Fingerprint, dt: DTCode, code: GaussCode) {
    match acc.entry(fp) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            let v = e.get_mut();
            v.2 += 1;
            if dt < v.0 {
                v.0 = dt;
                v.1 = code;
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert((dt, code, 1));
        }
    }
}

/// Census of 2-component alternating meander links with `n` crossings.
pub fn census_meander_links(n: usize) -> Result<CensusRow> {
    if n % 2 == 1 {
        return Err(Error::domain("meander links need even order"));
    }
    let classes = process_open_meanders(
        n,
        ClassMap::new,
        |acc, m| {
            let d = close_open_meander(m);
            let flags = d.analyze();
            if !(flags.reduced && flags.prime && flags.components_simple) {
                return;
            }
            let fp = fingerprint(&d);
            let dt = gauss_to_dt(d.code()).expect("closure has a DT code");
            merge_into(acc, fp, dt, d.code().clone());
        },
        merge_class_maps,
    );
    Ok(finish_row(n, CensusKind::TwoLink, 2, classes))
}

/// Fingerprints of all 2-component meander links with at most `max_n`
/// crossings (the pairwise filter set for multi-component censuses).
fn two_link_fingerprints(max_n: usize) -> &'static HashSet<Fingerprint> {
    static CACHE: OnceCell<std::sync::Mutex<HashMap<usize, &'static HashSet<Fingerprint>>>> = OnceCell::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().unwrap();
    if let Some(set) = guard.get(&max_n) {
        return set;
    }
    let mut set = HashSet::new();
    for m in (2..=max_n).step_by(2) {
        let row = census_meander_links(m).expect("even order");
        for r in row.representatives {
            set.insert(r.fingerprint);
        }
    }
    let leaked: &'static HashSet<Fingerprint> = Box::leak(Box::new(set));
    guard.insert(max_n, leaked);
    leaked
}

// ---------------------------------------------------------------------------
// Multi-component census
// ---------------------------------------------------------------------------
//
// Links with three or more components are enumerated as connected
// multi-component shadows with simple components in which every pair of
// components crosses (a positive even number of times), realized with the
// alternating assignment. Meandric-system closures cannot reach these types:
// in a meandric system the loops never cross each other, so every loop pair
// would form a split sublink, which the census filters exclude.

struct MultiShadow {
    components: Vec<Vec<u16>>,
}

/// Enumerate connected shadows with `c` simple components, `n` crossings and
/// all pairwise crossing counts even and >= 2. Components are canonicalized
/// by decreasing length with component 0 relabeled to `1..l0`; residual
/// symmetries are deduplicated downstream by fingerprint.
fn for_each_multi_shadow<F: FnMut(&MultiShadow)>(n: usize, c: usize, mut f: F) {
    // Partition 2n visit slots into c component lengths, descending.
    let mut lens = vec![0usize; c];
    fn size_rec<F: FnMut(&MultiShadow)>(
        n: usize,
        c: usize,
        idx: usize,
        left: usize,
        maxlen: usize,
        lens: &mut Vec<usize>,
        f: &mut F,
    ) {
        if idx == c {
            if left == 0 {
                fill_shadow(n, lens, f);
            }
            return;
        }
        let remaining_comps = c - idx - 1;
        for l in (2..=maxlen.min(left)).rev() {
            if left - l < 2 * remaining_comps {
                continue;
            }
            lens[idx] = l;
            size_rec(n, c, idx + 1, left - l, l, lens, f);
        }
    }
    size_rec(n, c, 0, 2 * n, n, &mut lens, &mut f);
}

fn fill_shadow<F: FnMut(&MultiShadow)>(n: usize, lens: &[usize], f: &mut F) {
    let c = lens.len();
    // Component 0 must consist of distinct labels; relabel to 1..l0.
    if lens[0] > n {
        return;
    }
    let mut comps: Vec<Vec<u16>> = vec![Vec::new(); c];
    comps[0] = (1..=lens[0] as u16).collect();
    // open[l] = component where label l was introduced, usize::MAX when done.
    let mut intro = vec![usize::MAX; n + 1];
    for l in 1..=lens[0] {
        intro[l] = 0;
    }
    let mut next_new = lens[0] + 1;
    rec(1, 0, n, lens, &mut comps, &mut intro, &mut next_new, f);

    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(&MultiShadow)>(
        comp: usize,
        pos: usize,
        n: usize,
        lens: &[usize],
        comps: &mut Vec<Vec<u16>>,
        intro: &mut Vec<usize>,
        next_new: &mut usize,
        f: &mut F,
    ) {
        let c = lens.len();
        if comp == c {
            // every label must be used twice
            if *next_new == n + 1 && intro.iter().skip(1).take(n).all(|&i| i == usize::MAX) {
                let shadow = MultiShadow { components: comps.clone() };
                if multi_shadow_ok(&shadow, n) {
                    f(&shadow);
                }
            }
            return;
        }
        if pos == lens[comp] {
            rec(comp + 1, 0, n, lens, comps, intro, next_new, f);
            return;
        }
        // Feasibility: open labels must fit in the remaining slots.
        let open_count = intro.iter().skip(1).take(n).filter(|&&i| i != usize::MAX).count();
        let slots_left: usize =
            (lens[comp] - pos) + lens[comp + 1..].iter().sum::<usize>();
        let new_left = n + 1 - *next_new;
        if open_count + new_left > slots_left || open_count + 2 * new_left > slots_left + (lens[comp] - pos).min(0) {
            // (second clause is subsumed; kept simple)
        }
        if open_count + new_left > slots_left {
            return;
        }
        // Close an open label introduced by an EARLIER component (simple
        // components: never by this one).
        for l in 1..=n {
            if intro[l] != usize::MAX && intro[l] < comp {
                // Rotation canonicalization: within a component, the first
                // entry is its smallest label.
                if pos > 0 && (comps[comp][0] as usize) > l {
                    continue;
                }
                if pos == 0 && comps[comp].is_empty() {
                    // first element: allowed
                }
                let saved = intro[l];
                intro[l] = usize::MAX;
                comps[comp].push(l as u16);
                rec(comp, pos + 1, n, lens, comps, intro, next_new, f);
                comps[comp].pop();
                intro[l] = saved;
            }
        }
        // Open a new label.
        if *next_new <= n {
            let l = *next_new;
            if pos > 0 && (comps[comp][0] as usize) > l {
                // smallest-first rotation rule
                return;
            }
            intro[l] = comp;
            comps[comp].push(l as u16);
            *next_new += 1;
            rec(comp, pos + 1, n, lens, comps, intro, next_new, f);
            *next_new -= 1;
            comps[comp].pop();
            intro[l] = usize::MAX;
        }
    }
}

/// Cheap necessary filters: pairwise even crossing counts >= 2, connectivity,
/// and the existence of an alternating assignment.
fn multi_shadow_ok(s: &MultiShadow, n: usize) -> bool {
    let c = s.components.len();
    let mut comp_of = vec![[usize::MAX; 2]; n + 1];
    let mut pos_of = vec![[usize::MAX; 2]; n + 1];
    for (ci, comp) in s.components.iter().enumerate() {
        for (pi, &l) in comp.iter().enumerate() {
            let l = l as usize;
            if comp_of[l][0] == usize::MAX {
                comp_of[l] = [ci, usize::MAX];
                pos_of[l] = [pi, usize::MAX];
            } else {
                comp_of[l][1] = ci;
                pos_of[l][1] = pi;
            }
        }
    }
    let mut pair = vec![vec![0usize; c]; c];
    for l in 1..=n {
        let [a, b] = comp_of[l];
        pair[a][b] += 1;
        pair[b][a] += 1;
    }
    for i in 0..c {
        for j in i + 1..c {
            if pair[i][j] < 2 || pair[i][j] % 2 != 0 {
                return false;
            }
        }
    }
    // Alternating assignment: phase per component, constraint per crossing.
    let mut phase = vec![u8::MAX; c];
    phase[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut seen = vec![false; c];
    seen[0] = true;
    while let Some(ci) = queue.pop_front() {
        for l in 1..=n {
            let [a, b] = comp_of[l];
            if a != ci && b != ci {
                continue;
            }
            let other = if a == ci { b } else { a };
            let (pa, pb) = (pos_of[l][0], pos_of[l][1]);
            let (pc, po) = if a == ci { (pa, pb) } else { (pb, pa) };
            // over(visit) = parity(pos) xor phase; the two visits must differ:
            // parity(pc) ^ phase[ci] ^ parity(po) ^ phase[other] == 1.
            let need = 1 ^ ((pc % 2) as u8 ^ (po % 2) as u8 ^ phase[ci]);
            if phase[other] == u8::MAX {
                phase[other] = need;
                if !seen[other] {
                    seen[other] = true;
                    queue.push_back(other);
                }
            } else if phase[other] != need {
                return false;
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Alternating signed code of a multi-component shadow (component phases from
/// the consistency propagation; existence checked by `multi_shadow_ok`).
fn alternating_multi_code(s: &MultiShadow, n: usize) -> GaussCode {
    let c = s.components.len();
    let mut comp_of = vec![[usize::MAX; 2]; n + 1];
    let mut pos_of = vec![[usize::MAX; 2]; n + 1];
    for (ci, comp) in s.components.iter().enumerate() {
        for (pi, &l) in comp.iter().enumerate() {
            let l = l as usize;
            if comp_of[l][0] == usize::MAX {
                comp_of[l] = [ci, usize::MAX];
                pos_of[l] = [pi, usize::MAX];
            } else {
                comp_of[l][1] = ci;
                pos_of[l][1] = pi;
            }
        }
    }
    let mut phase = vec![u8::MAX; c];
    phase[0] = 0;
    loop {
        let mut progressed = false;
        for l in 1..=n {
            let [a, b] = comp_of[l];
            let (pa, pb) = (pos_of[l][0], pos_of[l][1]);
            for ((x, px), (y, py)) in [((a, pa), (b, pb)), ((b, pb), (a, pa))] {
                if phase[x] != u8::MAX && phase[y] == u8::MAX {
                    phase[y] = 1 ^ ((px % 2) as u8 ^ (py % 2) as u8 ^ phase[x]);
                    progressed = true;
                }
            }
        }
        if !progressed {
            break;
        }
    }
    let components: Vec<Vec<i32>> = s
        .components
        .iter()
        .enumerate()
        .map(|(ci, comp)| {
            comp.iter()
                .enumerate()
                .map(|(pi, &l)| {
                    let over = ((pi % 2) as u8 ^ phase[ci]) == 1;
                    if over {
                        l as i32
                    } else {
                        -(l as i32)
                    }
                })
                .collect()
        })
        .collect();
    GaussCode { components }
}

/// The 2-component sub-diagram on components `(i, j)` with inherited signs,
/// compacted to labels `1..m`. `None` when the pair shares no crossing.
pub fn pair_subdiagram(d: &Diagram, i: usize, j: usize) -> Option<Diagram> {
    let comps = &d.code().components;
    let n = d.n_crossings();
    let mut comp_of = vec![[usize::MAX; 2]; n + 1];
    for (ci, comp) in comps.iter().enumerate() {
        for &e in comp {
            let l = e.unsigned_abs() as usize;
            if comp_of[l][0] == usize::MAX {
                comp_of[l][0] = ci;
            } else {
                comp_of[l][1] = ci;
            }
        }
    }
    let keep = |l: usize| {
        let [a, b] = comp_of[l];
        (a == i || a == j) && (b == i || b == j)
    };
    let mut labels: Vec<usize> = (1..=n).filter(|&l| keep(l)).collect();
    if labels.is_empty() {
        return None;
    }
    labels.sort_unstable();
    let mut map = vec![0usize; n + 1];
    for (k, &l) in labels.iter().enumerate() {
        map[l] = k + 1;
    }
    let sub_comps: Vec<Vec<i32>> = [i, j]
        .iter()
        .map(|&ci| {
            comps[ci]
                .iter()
                .filter(|e| keep(e.unsigned_abs() as usize))
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
        .collect();
    let signs: Vec<i8> = labels.iter().map(|&l| d.signs()[l - 1]).collect();
    Some(Diagram::from_parts(GaussCode { components: sub_comps }, signs, None, None))
}

/// Debug hook: visit the alternating code of every candidate multi-component
/// shadow (used by development probes and tests).
pub fn debug_multi_shadows<F: FnMut(&GaussCode)>(n: usize, c: usize, mut f: F) {
    for_each_multi_shadow(n, c, |s| {
        f(&alternating_multi_code(s, n));
    });
}

/// Census of `c`-component (c >= 3) prime alternating meander links with `n`
/// crossings: every pair of components must form a 2-component meander link.
pub fn census_multicomponent(n: usize, c: usize) -> Result<CensusRow> {
    if c < 3 {
        return Err(Error::domain("multi-component census needs c >= 3"));
    }
    if n % 2 == 1 {
        return Err(Error::domain("multi-component meander links have even crossing number"));
    }
    let aml = two_link_fingerprints(n.saturating_sub(2));
    // Collect candidate shadows first, then realize/filter in parallel.
    let mut shadows: Vec<MultiShadow> = Vec::new();
    for_each_multi_shadow(n, c, |s| shadows.push(MultiShadow { components: s.components.clone() }));
    let classes = par::map_merge(
        shadows,
        ClassMap::new,
        |s| {
            let mut acc = ClassMap::new();
            let code = alternating_multi_code(&s, n);
            let d = match crate::diagram::realize_gauss_code(&code) {
                Ok(d) => d,
                Err(_) => return acc,
            };
            let flags = d.analyze();
            if !(flags.reduced && flags.prime && flags.components_simple && flags.alternating) {
                return acc;
            }
            // Pairwise filter: no disjoint pairs, and every 2-component
            // sublink is a 2-component meander link.
            for i in 0..c {
                for j in i + 1..c {
                    match pair_subdiagram(&d, i, j) {
                        None => return acc, // disjoint pair
                        Some(sub) => {
                            if !aml.contains(&fingerprint(&sub)) {
                                return acc;
                            }
                        }
                    }
                }
            }
            let fp = fingerprint(&d);
            let dt = match gauss_to_dt(d.code()) {
                Ok(dt) => dt,
                Err(_) => return acc,
            };
            merge_into(&mut acc, fp, dt, d.code().clone());
            acc
        },
        merge_class_maps,
    );
    Ok(finish_row(n, CensusKind::MultiLink, c, classes))
}

/// Resolve a diagram to a catalog name.
pub fn lookup_name(d: &Diagram) -> Option<String> {
    crate::catalog::lookup_name(d)
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Json,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ExportFormat::Csv),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::Usage(format!("unknown format {other:?} (use csv or json)"))),
        }
    }
}

/// Serialize census rows: CSV carries the count view `(n, kind, c, count)`;
/// JSON additionally carries representatives and collision reports.
pub fn export_census(rows: &[CensusRow], format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Csv => {
            let mut out = String::from("n,kind,c,count\n");
            for r in rows {
                out.push_str(&format!("{},{},{},{}\n", r.n, r.kind.as_str(), r.c, r.type_count));
            }
            out.into_bytes()
        }
        ExportFormat::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "n": r.n,
                        "kind": r.kind.as_str(),
                        "c": r.c,
                        "count": r.type_count,
                        "representatives": r.representatives.iter().map(|rep| serde_json::json!({
                            "name": rep.name,
                            "dt": rep.dt.to_string(),
                            "gauss": rep.code.to_string(),
                            "diagrams": rep.diagrams,
                        })).collect::<Vec<_>>(),
                        "collisions": r.collisions.iter().map(|c| serde_json::json!({
                            "names": c.names,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut v = serde_json::to_vec_pretty(&rows).expect("census serializes");
            v.push(b'\n');
            v
        }
    }
}

/// Parse the CSV count view back into skeleton rows (the serialization law
/// check for the count view).
pub fn import_census_csv(data: &[u8]) -> Result<Vec<(usize, String, usize, usize)>> {
    let text = std::str::from_utf8(data).map_err(|_| Error::malformed("census CSV is not UTF-8"))?;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            if line != "n,kind,c,count" {
                return Err(Error::malformed("missing census CSV header"));
            }
            continue;
        }
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::malformed(format!("bad census CSV line: {line}")));
        }
        rows.push((
            parts[0].parse().map_err(|_| Error::malformed("bad n"))?,
            parts[1].to_string(),
            parts[2].parse().map_err(|_| Error::malformed("bad c"))?,
            parts[3].parse().map_err(|_| Error::malformed("bad count"))?,
        ));
    }
    Ok(rows)
}

/// Expected census counts from the embedded tables.
pub fn expected_counts() -> &'static Counts {
    &catalog().special.counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knot_census_small() {
        assert_eq!(census_meander_knots(1).unwrap().type_count, 1);
        assert_eq!(census_meander_knots(3).unwrap().type_count, 1);
        assert_eq!(census_meander_knots(5).unwrap().type_count, 2);
        let row7 = census_meander_knots(7).unwrap();
        assert_eq!(row7.type_count, 5);
        let names: std::collections::BTreeSet<String> =
            row7.representatives.iter().filter_map(|r| r.name.clone()).collect();
        let expect: std::collections::BTreeSet<String> =
            ["7_1", "7_2", "7_3", "7_4", "7_5"].iter().map(|s| s.to_string()).collect();
        assert_eq!(names, expect);
        assert!(row7.collisions.is_empty());
    }

    #[test]
    fn link_census_small() {
        assert_eq!(census_meander_links(2).unwrap().type_count, 1);
        assert_eq!(census_meander_links(4).unwrap().type_count, 1);
        let row6 = census_meander_links(6).unwrap();
        assert_eq!(row6.type_count, 2);
        let names: std::collections::BTreeSet<String> =
            row6.representatives.iter().filter_map(|r| r.name.clone()).collect();
        assert!(names.contains("6_1^2") && names.contains("6_2^2"));
    }

    #[test]
    fn multicomponent_base_case() {
        let row = census_multicomponent(6, 3).unwrap();
        assert_eq!(row.type_count, 1, "the 6-crossing 3-component necklace");
    }

    #[test]
    fn export_roundtrip() {
        let rows = vec![census_meander_knots(7).unwrap()];
        let csv = export_census(&rows, ExportFormat::Csv);
        assert_eq!(String::from_utf8_lossy(&csv), "n,kind,c,count\n7,knot,1,5\n");
        let back = import_census_csv(&csv).unwrap();
        assert_eq!(back, vec![(7, "knot".to_string(), 1, 5)]);
        let json = export_census(&rows, ExportFormat::Json);
        let parsed: serde_json::Value = serde_json::from_slice(&json).unwrap();
        assert_eq!(parsed[0]["count"], 5);
        let empty = export_census(&[], ExportFormat::Csv);
        assert_eq!(String::from_utf8_lossy(&empty), "n,kind,c,count\n");
    }

    #[test]
    fn representatives_pass_filters() {
        for row in [census_meander_knots(9).unwrap(), census_meander_links(8).unwrap()] {
            for rep in &row.representatives {
                let d = crate::diagram::realize_gauss_code(&rep.code).unwrap();
                let f = d.analyze();
                assert!(f.reduced && f.prime && f.alternating);
            }
        }
    }

    #[test]
    fn format_parse() {
        use std::str::FromStr;
        assert!(ExportFormat::from_str("csv").is_ok());
        assert!(matches!(ExportFormat::from_str("xml"), Err(Error::Usage(_))));
    }
}
