//! Verify one line of the table: `cargo run --release --example verify_line -- 6 4 3`.

use gfact::table1::{lines::default_params, verify_line, Params, RunOptions};

fn main() -> gfact::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let line: u32 = args.first().and_then(|s| s.parse().ok()).unwrap_or(6);
    let mut p = default_params(line)?;
    if let (Some(n), Some(q)) = (args.get(1), args.get(2)) {
        p = Params { n: n.parse().unwrap_or(p.n), q: q.parse().unwrap_or(p.q) };
    }
    let t = std::time::Instant::now();
    let r = verify_line(line, p, &RunOptions::default())?;
    for c in &r.checks {
        println!("{} {} {}", if c.ok { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
    for (name, rep) in [("N(<x>)N(<y>)", &r.normalizer), ("C(x)C(y)", &r.centralizer)] {
        if let Some(rep) = rep {
            println!("G = {name}: {:?} via {:?} (|X| = {}, |Y| = {})", rep.verdict, rep.strategy, rep.orders.x, rep.orders.y);
        }
    }
    println!("line {} (n={}, q={}) {}: {:.1}s", r.line, p.n, p.q, if r.ok { "matches" } else { "MISMATCH" }, t.elapsed().as_secs_f64());
    Ok(())
}
