//! Parse a scenario config and run it.
use gfact::table1::{verify_line, Params, RunOptions, ScenarioConfig};
use gfact::normfact::Caps;

const SCENARIO: &str = "
# Line 9 at its smallest parameters
line = 9
n = 4
q = 2
strategy = auto
element_cap = 2_000_000
seed = 7
";

fn main() -> gfact::Result<()> {
    let cfg: ScenarioConfig = SCENARIO.parse()?;
    println!("{cfg:?}");
    let line: u32 = cfg.line.parse().map_err(|_| gfact::Error::Parse(cfg.line.clone()))?;
    let opts = RunOptions {
        seed: cfg.seed,
        strategy: cfg.strategy,
        caps: Caps { elements: cfg.element_cap, orbit: cfg.orbit_cap },
        ..Default::default()
    };
    let r = verify_line(line, Params { n: cfg.n.unwrap_or(4), q: cfg.q.unwrap_or(2) }, &opts)?;
    println!("{}", serde_json::to_string_pretty(&r)?);
    Ok(())
}
