//! Scan every order-arithmetic claim over the default grid and compare the
//! satisfying set with the exceptional set the argument asserts.
use gfact::orderarith::{audit_claim, ScanRange, CLAIMS};

fn main() -> gfact::Result<()> {
    for claim in CLAIMS {
        let r = audit_claim(claim, ScanRange::default())?;
        let verdict = if r.exact_match() {
            "exact"
        } else if r.contained() {
            "contained"
        } else {
            "differs"
        };
        println!("{claim:>14}: {} tuples scanned, satisfying {:?} ({verdict})", r.rows.len(), r.satisfying);
    }
    Ok(())
}
