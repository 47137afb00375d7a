//! Orbits of the spin-embedded Ω₈⁻(2) on anisotropic 2-spaces of Ω₈⁺(4)'s module.
//! Usage: section2 [q] (q = 4 computes; q = 16 is recorded as out of scale)
use gfact::table1::section2::verify_section2;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let r = verify_section2(q, 1)?;
    println!("q = {q}: {:?}, expected domain {}", r.status, r.expected_domain);
    for c in &r.checks {
        println!("  [{}] {} {}", if c.ok { "ok" } else { "FAIL" }, c.name, c.detail);
    }
    println!("domain: {}", r.domain_size);
    println!("{}", r.witness);
    println!("{}", r.augmented);
    if let Some((a, b)) = &r.untwisted {
        println!("{a}");
        println!("{b}");
    }
    println!("{:.1}s, overall {}", r.seconds, if r.ok() { "ok" } else { "not established" });
    Ok(())
}
