//! Primitive prime divisors of q^n - 1 for small q and n.
use gfact::orderarith::{prime_powers_upto, zsigmondy};

fn main() -> gfact::Result<()> {
    for (q, _, _) in prime_powers_upto(16) {
        let row: Vec<String> = (2..=8).map(|n| zsigmondy(q, n).map(|r| r.to_string())).collect::<gfact::Result<_>>()?;
        println!("q={q:>2}  {}", row.join(" | "));
    }
    Ok(())
}
