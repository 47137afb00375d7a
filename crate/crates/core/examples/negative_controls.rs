//! Run the pair explorer on groups outside the table and check that they
//! have no factorizing pairs (Sym(7) has only the transposition/7-cycle pair).

use gfact::normfact::Caps;
use gfact::table1::lines::{negative_control, torus_spot_check, NEGATIVE_CONTROLS};

fn main() -> gfact::Result<()> {
    for name in NEGATIVE_CONTROLS {
        let t = std::time::Instant::now();
        let (ex, check) = negative_control(name, Caps::default(), 1)?;
        println!(
            "{} {:12} |G| = {:>8}, {} prime classes, {} ({:.1}s)",
            if check.ok { "ok  " } else { "FAIL" },
            name,
            ex.order,
            ex.classes.len(),
            check.detail,
            t.elapsed().as_secs_f64()
        );
    }
    let c = torus_spot_check(1)?;
    println!("{} {} ({})", if c.ok { "ok  " } else { "FAIL" }, c.name, c.detail);
    Ok(())
}
