//! Embedded reference data: the knot/link tables transcribed verbatim as
//! machine-readable fixtures, plus accessors that realize entries into
//! diagrams and fingerprints.
//!
//! Fixture schema (JSON): each table file holds
//! `{"table": <id>, "entries": [{name, conway, dt, short, verified, note,
//! meander_number?}]}` where `dt` is the printed Dowker-Thistlethwaite code,
//! `short` the printed short Gauss code (the meander / second half part), and
//! `verified: false` marks rows whose printed data has transcription defects
//! (the note says which column). Fixtures are transcriptions, never
//! corrections. `special.json` holds prose-level codes and the count tables.
//!
//! The `MEANDERS_FIXTURE_DIR` environment variable overrides the embedded
//! fixtures with files from a directory.

use crate::diagram::{
    dt_to_gauss, knot_code_from_short, link_code_from_short, realize_gauss_code, Diagram, DTCode,
    GaussCode,
};
use crate::invariants::{fingerprint, Fingerprint};
use crate::{par, Error, Result};
use once_cell::sync::OnceCell;
use serde::Deserialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    Knot,
    Link,
}

/// Which paper table an entry was transcribed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    AlternatingKnots,
    NonAlternatingMinimalKnots,
    MeanderNumbers,
    Links,
    OgcAlternating,
    OgcNonAlternating,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: Option<String>,
    pub conway: String,
    pub dt_text: String,
    pub short_gauss: Vec<i32>,
    pub kind: EntryKind,
    pub table: Table,
    pub meander_number: Option<u32>,
    pub verified: bool,
    pub note: Option<String>,
}

impl CatalogEntry {
    pub fn dt(&self) -> Result<DTCode> {
        DTCode::parse(&self.dt_text)
    }

    /// Reconstruct the full Gauss code from the short code.
    pub fn full_code(&self) -> Result<GaussCode> {
        match self.kind {
            EntryKind::Knot => knot_code_from_short(&self.short_gauss),
            EntryKind::Link => link_code_from_short(&self.short_gauss),
        }
    }

    /// Realize the entry, preferring the short Gauss code and falling back to
    /// the DT column when the short code is defective.
    pub fn realize(&self) -> Result<Diagram> {
        let via_gauss = self.full_code().and_then(|c| realize_gauss_code(&c));
        match via_gauss {
            Ok(d) => Ok(d),
            Err(_) => {
                let code = dt_to_gauss(&self.dt()?)?;
                realize_gauss_code(&code)
            }
        }
    }

    pub fn fingerprint(&self) -> Result<Fingerprint> {
        Ok(fingerprint(&self.realize()?))
    }

    /// Crossing number of the printed diagram.
    pub fn diagram_crossings(&self) -> usize {
        self.short_gauss.len().max(self.dt().map(|d| d.n_crossings()).unwrap_or(0))
    }
}

#[derive(Deserialize)]
struct RawEntry {
    name: Option<String>,
    conway: String,
    dt: String,
    short: Vec<i32>,
    #[serde(default)]
    meander_number: Option<u32>,
    verified: bool,
    note: Option<String>,
}

#[derive(Deserialize)]
struct RawTable {
    table: String,
    entries: Vec<RawEntry>,
}

/// Count tables and prose-level codes.
#[derive(Debug, Clone, Deserialize)]
pub struct SpecialData {
    pub counts: Counts,
    pub ordered_codes: BTreeMap<String, Vec<i32>>,
    pub ogc_shorts: BTreeMap<String, Vec<i32>>,
    pub product_examples: BTreeMap<String, serde_json::Value>,
    pub other_codes: BTreeMap<String, serde_json::Value>,
    pub ogc_missing: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Counts {
    pub open_meanders_odd: BTreeMap<String, u64>,
    pub open_meanders_even: BTreeMap<String, u64>,
    pub alternating_meander_knots: BTreeMap<String, u64>,
    pub alternating_meander_links: BTreeMap<String, u64>,
    pub multi_component_c3: BTreeMap<String, u64>,
    pub multi_component_c4: BTreeMap<String, u64>,
}

impl Counts {
    pub fn get(map: &BTreeMap<String, u64>, n: usize) -> Option<u64> {
        map.get(&n.to_string()).copied()
    }
}

pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub special: SpecialData,
    fingerprints: OnceCell<Vec<Option<Fingerprint>>>,
}

const FIXTURES: &[(&str, &str, Table, EntryKind)] = &[
    (
        "alternating_knots.json",
        include_str!("../fixtures/alternating_knots.json"),
        Table::AlternatingKnots,
        EntryKind::Knot,
    ),
    (
        "nonalternating_minimal_knots.json",
        include_str!("../fixtures/nonalternating_minimal_knots.json"),
        Table::NonAlternatingMinimalKnots,
        EntryKind::Knot,
    ),
    (
        "meander_numbers.json",
        include_str!("../fixtures/meander_numbers.json"),
        Table::MeanderNumbers,
        EntryKind::Knot,
    ),
    ("links.json", include_str!("../fixtures/links.json"), Table::Links, EntryKind::Link),
    (
        "ogc_alternating.json",
        include_str!("../fixtures/ogc_alternating.json"),
        Table::OgcAlternating,
        EntryKind::Knot,
    ),
    (
        "ogc_nonalternating.json",
        include_str!("../fixtures/ogc_nonalternating.json"),
        Table::OgcNonAlternating,
        EntryKind::Knot,
    ),
];

fn read_fixture(dir: Option<&std::path::Path>, name: &str, embedded: &str) -> Result<String> {
    if let Some(dir) = dir {
        let path = dir.join(name);
        return std::fs::read_to_string(&path)
            .map_err(|e| Error::Catalog(format!("cannot read {}: {e}", path.display())));
    }
    Ok(embedded.to_string())
}

/// Load the embedded catalog (or the `MEANDERS_FIXTURE_DIR` override).
pub fn load_catalog() -> Result<Catalog> {
    let dir = std::env::var_os("MEANDERS_FIXTURE_DIR").map(std::path::PathBuf::from);
    load_catalog_from(dir.as_deref())
}

/// Load the catalog from a fixture directory, or the embedded fixtures when
/// `dir` is `None`.
pub fn load_catalog_from(dir: Option<&std::path::Path>) -> Result<Catalog> {
    let mut entries = Vec::new();
    for &(name, embedded, table, kind) in FIXTURES {
        let text = read_fixture(dir, name, embedded)?;
        let raw: RawTable = serde_json::from_str(&text)
            .map_err(|e| Error::Catalog(format!("fixture {name} is corrupted: {e}")))?;
        let _ = &raw.table;
        for r in raw.entries {
            entries.push(CatalogEntry {
                name: r.name,
                conway: r.conway,
                dt_text: r.dt,
                short_gauss: r.short,
                kind,
                table,
                meander_number: r.meander_number,
                verified: r.verified,
                note: r.note,
            });
        }
    }
    let special_text = read_fixture(dir, "special.json", include_str!("../fixtures/special.json"))?;
    let special: SpecialData = serde_json::from_str(&special_text)
        .map_err(|e| Error::Catalog(format!("special.json is corrupted: {e}")))?;
    Ok(Catalog { entries, special, fingerprints: OnceCell::new() })
}

/// Cached global catalog.
pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceCell<Catalog> = OnceCell::new();
    CATALOG.get_or_init(|| load_catalog().expect("embedded catalog loads"))
}

impl Catalog {
    pub fn table(&self, t: Table) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.table == t)
    }

    /// Fingerprints of all entries (computed once, in parallel); `None` for
    /// rows that realize from neither column.
    pub fn fingerprints(&self) -> &[Option<Fingerprint>] {
        self.fingerprints.get_or_init(|| {
            let items: Vec<usize> = (0..self.entries.len()).collect();
            par::map(items, |i| self.entries[i].fingerprint().ok())
        })
    }

    /// Look up an entry by name; prefers tables in declaration order.
    pub fn by_name(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name.as_deref() == Some(name))
    }

    /// Resolve a diagram to a catalog name by fingerprint.
    pub fn lookup_name(&self, d: &Diagram) -> Option<String> {
        let fp = fingerprint(d);
        self.lookup_fingerprint(&fp)
    }

    pub fn lookup_fingerprint(&self, fp: &Fingerprint) -> Option<String> {
        let fps = self.fingerprints();
        for (e, efp) in self.entries.iter().zip(fps) {
            if efp.as_ref() == Some(fp) {
                if let Some(n) = &e.name {
                    return Some(n.clone());
                }
            }
        }
        None
    }

    /// The fingerprint of a named knot/link, realized from its row.
    pub fn fingerprint_of(&self, name: &str) -> Result<Fingerprint> {
        let idx = self
            .entries
            .iter()
            .position(|e| e.name.as_deref() == Some(name))
            .ok_or_else(|| Error::Catalog(format!("no catalog entry named {name}")))?;
        self.fingerprints()[idx]
            .clone()
            .ok_or_else(|| Error::Catalog(format!("entry {name} does not realize")))
    }
}

/// Resolve a diagram's name against the embedded catalog.
pub fn lookup_name(d: &Diagram) -> Option<String> {
    catalog().lookup_name(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_loads() {
        let c = load_catalog().unwrap();
        assert!(c.entries.len() > 200);
        let t31 = c.by_name("3_1").unwrap();
        assert_eq!(t31.dt_text, "{{3},{4,6,2}}");
        assert_eq!(t31.short_gauss, vec![1, -2, 3]);
        let hopf = c.by_name("2_1^2").unwrap();
        assert_eq!(hopf.dt_text, "{{1,1},{4,2}}");
        let k913 = c.by_name("9_13").unwrap();
        assert!(!k913.verified);
    }

    #[test]
    fn corrupted_fixture_reports_error() {
        let dir = std::env::temp_dir().join("meanders-bad-fixtures");
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("alternating_knots.json"), "{not json").unwrap();
        let r = load_catalog_from(Some(&dir));
        assert!(matches!(r, Err(Error::Catalog(_))));
    }

    #[test]
    fn alternating_table_has_the_census_counts() {
        let c = load_catalog().unwrap();
        let mut by_n: std::collections::HashMap<usize, std::collections::HashSet<String>> = Default::default();
        for e in c.table(Table::AlternatingKnots) {
            by_n.entry(e.short_gauss.len()).or_default().insert(e.name.clone().unwrap());
        }
        assert_eq!(by_n[&3].len(), 1);
        assert_eq!(by_n[&5].len(), 2);
        assert_eq!(by_n[&7].len(), 5);
        assert_eq!(by_n[&9].len(), 15);
        assert_eq!(by_n[&11].len(), 52);
    }

    #[test]
    fn verified_rows_realize_consistently() {
        // For every verified row both columns realize and agree on the
        // fingerprint. Runs on a sample here; the full check is part of the
        // acceptance suite.
        let c = load_catalog().unwrap();
        for name in ["3_1", "9_7", "4_1", "2_1^2", "6_2^2", "9_46", "8_19", "10_99"] {
            let e = match c.by_name(name) {
                Some(e) => e,
                None => continue,
            };
            let via_gauss = fingerprint(&realize_gauss_code(&e.full_code().unwrap()).unwrap());
            let via_dt = fingerprint(&realize_gauss_code(&dt_to_gauss(&e.dt().unwrap()).unwrap()).unwrap());
            assert_eq!(via_gauss, via_dt, "row {name} columns disagree");
        }
    }

    #[test]
    fn lookup_examples() {
        let c = catalog();
        let m = crate::meander::OpenMeander::from_permutation(vec![1, 8, 5, 6, 7, 4, 3, 2, 9]).unwrap();
        let d = crate::diagram::close_open_meander(&m);
        assert_eq!(c.lookup_name(&d), Some("9_7".to_string()));
        let hopf = crate::diagram::close_open_meander(
            &crate::meander::OpenMeander::from_permutation(vec![1, 2]).unwrap(),
        );
        assert_eq!(c.lookup_name(&hopf), Some("2_1^2".to_string()));
    }
}
