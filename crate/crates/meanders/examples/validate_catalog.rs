//! Development check: realize every fixture row from both columns and report
//! disagreements, so the verified flags can be audited.
use meanders::catalog::{load_catalog, EntryKind};
use meanders::diagram::{dt_to_gauss, realize_gauss_code};
use meanders::invariants::fingerprint;

fn main() {
    let c = load_catalog().unwrap();
    let mut bad = 0;
    for e in &c.entries {
        let name = e.name.clone().unwrap_or_else(|| format!("<{}>", e.conway));
        let gauss = e
            .full_code()
            .and_then(|code| realize_gauss_code(&code))
            .map(|d| fingerprint(&d));
        let dt = e
            .dt()
            .and_then(|dt| dt_to_gauss(&dt))
            .and_then(|code| realize_gauss_code(&code))
            .map(|d| fingerprint(&d));
        let status = match (&gauss, &dt) {
            (Ok(a), Ok(b)) if a == b => "ok".to_string(),
            (Ok(_), Ok(_)) => "MISMATCH".to_string(),
            (Err(e1), Ok(_)) => format!("GAUSS-FAIL: {e1}"),
            (Ok(_), Err(e2)) => format!("DT-FAIL: {e2}"),
            (Err(e1), Err(e2)) => format!("BOTH-FAIL: {e1} / {e2}"),
        };
        if status != "ok" {
            bad += 1;
            println!("{:?}/{name} [verified={}]: {status}", e.table, e.verified);
        }
    }
    println!("--- {bad} problem rows of {} total", c.entries.len());
}
