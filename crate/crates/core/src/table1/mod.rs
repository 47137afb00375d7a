//! Scenario registry: one entry per line of the table of triples (G, x, y),
//! plus the spin-module factorization of Ω₈⁺(4) and the negative controls.

pub mod lines;
pub mod section2;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::normfact::{Caps, FactorizationReport, Strategy, Verdict};

pub use lines::{default_params, instantiate, named_group, negative_control, torus_spot_check, verify_line, Instance, NEGATIVE_CONTROLS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Feasibility {
    Exhaustive,
    Witness,
    OrderConsistencyOnly,
}

/// Static description of a line: the table columns and how it is verified.
#[derive(Clone, Debug, Serialize)]
pub struct LineDef {
    pub id: u32,
    pub group: &'static str,
    pub x: &'static str,
    pub y: &'static str,
    pub remarks: &'static str,
    /// G = C(x)C(y) as well
    pub sqrt: bool,
    pub feasibility: Feasibility,
    /// smallest admissible parameters (n, q); n or q is 0 when unused
    pub defaults: &'static [(usize, u64)],
}

pub fn registry() -> Vec<LineDef> {
    use Feasibility::*;
    vec![
        LineDef { id: 1, group: "Sym(n)", x: "transposition", y: "n-cycle", remarks: "n prime", sqrt: false, feasibility: Exhaustive, defaults: &[(5, 0), (7, 0)] },
        LineDef { id: 2, group: "Sym(5)", x: "|x| in {3,6}", y: "5-cycle", remarks: "", sqrt: false, feasibility: Exhaustive, defaults: &[(5, 0)] },
        LineDef { id: 3, group: "PGL_2(r)", x: "|x| = r", y: "no 1-dim. eigenspace", remarks: "", sqrt: false, feasibility: Exhaustive, defaults: &[(2, 5), (2, 7)] },
        LineDef { id: 4, group: "PSL_2(r)", x: "|x| = r", y: "no 1-dim. eigenspace", remarks: "r = 3 (mod 4)", sqrt: false, feasibility: Exhaustive, defaults: &[(2, 7), (2, 11)] },
        LineDef { id: 5, group: "PGammaL_2(16)", x: "field aut. of order 2", y: "|y| = 17", remarks: "", sqrt: false, feasibility: Exhaustive, defaults: &[(2, 16)] },
        LineDef { id: 6, group: "PSL_n(q) <| G", x: "graph aut. of order 2, C_PGL(x) = PGSp_n(q)", y: "|y| | q-1, (n-1)-dim. eigenspace", remarks: "n >= 4 even, G contains a graph aut.", sqrt: true, feasibility: Exhaustive, defaults: &[(4, 3)] },
        LineDef { id: 7, group: "PSL_n(4) <| G", x: "|x| = 5, no eigenvalue in F_q", y: "|y| = 3, (n-1)-dim. eigenspace", remarks: "n >= 4 even, G not in PGL_n(4)<tau>", sqrt: false, feasibility: Exhaustive, defaults: &[(4, 4)] },
        LineDef { id: 8, group: "PSU_n(4) <| G", x: "|x| = 3, no eigenvalue in F_q", y: "|y| = 5, (n-1)-dim. eigenspace", remarks: "n even, 4 divides |G:L|", sqrt: false, feasibility: Exhaustive, defaults: &[(4, 4)] },
        LineDef { id: 9, group: "PSU_n(q) <| G", x: "|x| = 2, in PGammaU minus PGU", y: "|y| | q+1, (n-1)-dim. eigenspace", remarks: "n >= 4 even, 2 divides |G:L|", sqrt: true, feasibility: Exhaustive, defaults: &[(4, 2)] },
        LineDef { id: 10, group: "PSp_n(q) <| G", x: "|x| = 2, in PGSp minus PSp", y: "transvection", remarks: "q odd, n/2 even, PGSp_n(q) <= G", sqrt: true, feasibility: Exhaustive, defaults: &[(4, 3)] },
        LineDef { id: 11, group: "POmega^-_n(q) <| G", x: "graph aut. of order 2", y: "|y| | q+1, no eigenvalue in F_q", remarks: "n/2 odd, G contains a graph aut.", sqrt: true, feasibility: Witness, defaults: &[(10, 2)] },
        LineDef { id: 12, group: "Aut(Omega^-_n(4))", x: "|x| = 3, (n-2)-dim. eigenspace", y: "|y| = 5, no eigenvalue in F_q", remarks: "5 divides n, n/2 odd", sqrt: false, feasibility: OrderConsistencyOnly, defaults: &[(10, 4)] },
        LineDef { id: 13, group: "POmega^-_n(q) <| G", x: "involution in SO minus Omega, C_L(x) = Sp_{n-2}(q)", y: "|y| | q^2+1 scalar of GU_{n/4}(q^2)", remarks: "n = 4 (mod 8), q in {2,4}", sqrt: false, feasibility: Witness, defaults: &[(12, 2)] },
        LineDef { id: 14, group: "POmega_n(q) <| G", x: "involution, minus-point reflection", y: "unipotent, C_L(y) = E:Sp_m(q)", remarks: "n = 1 (mod 4), q odd, SO_n(q) <= G", sqrt: true, feasibility: Witness, defaults: &[(9, 3)] },
    ]
}

pub fn line_def(id: u32) -> Result<LineDef> {
    registry().into_iter().find(|l| l.id == id).ok_or_else(|| Error::Parse(format!("no line {id}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub q: u64,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub seed: u64,
    pub caps: Caps,
    pub strategy: Strategy,
    /// also re-run the normalizer test with a random conjugate of y
    pub conjugation_check: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 1, caps: Caps::default(), strategy: Strategy::Auto, conjugation_check: true }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), ok, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LineReport {
    pub line: String,
    pub params: Params,
    pub group: String,
    pub feasibility: Feasibility,
    pub normalizer: Option<FactorizationReport>,
    pub centralizer: Option<FactorizationReport>,
    pub expected_sqrt: bool,
    pub checks: Vec<Check>,
    /// caveats that do not affect the verdict
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// verdicts match the table and all checks hold
    pub ok: bool,
}

impl LineReport {
    pub fn finalize(mut self) -> Self {
        let norm_ok = self.normalizer.as_ref().map_or(true, |r| r.verdict == Verdict::Factorizes);
        let want = if self.expected_sqrt { Verdict::Factorizes } else { Verdict::Fails };
        let cent_ok = self.centralizer.as_ref().map_or(true, |r| r.verdict == want);
        self.ok = norm_ok && cent_ok && self.checks.iter().all(|c| c.ok);
        self
    }

    pub fn inconclusive(&self) -> bool {
        [&self.normalizer, &self.centralizer].iter().any(|r| r.as_ref().is_some_and(|r| r.verdict == Verdict::InconclusiveCap))
    }
}

/// Side conditions of each line (the remarks column plus exclusions of small
/// isomorphisms).
pub fn side_condition(line: u32, p: Params) -> Result<()> {
    let fail = |why: &str| Err(Error::SideCondition(format!("line {line} (n={}, q={}): {why}", p.n, p.q)));
    let prime = |k: u64| crate::orderarith::is_prime_u64(k);
    let pp = crate::ff::prime_power(p.q);
    match line {
        1 => {
            if !prime(p.n as u64) {
                return fail("n prime");
            }
            if p.n < 5 {
                return fail("n >= 5");
            }
        }
        2 => {
            if p.n != 5 {
                return fail("n = 5");
            }
        }
        3 | 4 => {
            if p.n != 2 {
                return fail("n = 2");
            }
            if !prime(p.q) {
                return fail("r prime");
            }
            if p.q < 5 {
                return fail("r >= 5");
            }
            if line == 4 && p.q % 4 != 3 {
                return fail("r = 3 (mod 4)");
            }
            if line == 4 && p.q == 5 {
                return fail("PSL_2(5) = Alt(5): lines 1-2");
            }
        }
        5 => {
            if (p.n, p.q) != (2, 16) {
                return fail("n = 2, q = 16");
            }
        }
        6 => {
            if p.n < 4 || p.n % 2 == 1 {
                return fail("n >= 4 even");
            }
            if pp.is_none() {
                return fail("q a prime power");
            }
            if p.q == 2 {
                return fail("q > 2 (y nontrivial)");
            }
        }
        7 => {
            if p.n < 4 || p.n % 2 == 1 {
                return fail("n >= 4 even");
            }
            if p.q != 4 {
                return fail("q = 4");
            }
        }
        8 => {
            if p.n < 4 || p.n % 2 == 1 {
                return fail("n even");
            }
            if p.q != 4 {
                return fail("q = 4");
            }
        }
        9 => {
            if p.n < 4 || p.n % 2 == 1 {
                return fail("n >= 4 even");
            }
            if pp.is_none() {
                return fail("q a prime power");
            }
        }
        10 => {
            if p.q % 2 == 0 || pp.is_none() {
                return fail("q odd");
            }
            if p.n % 4 != 0 {
                return fail("n/2 even");
            }
        }
        11 => {
            if p.n % 2 == 1 || (p.n / 2) % 2 == 0 {
                return fail("n/2 odd");
            }
            if pp.is_none() {
                return fail("q a prime power");
            }
        }
        12 => {
            if p.q != 4 {
                return fail("q = 4");
            }
            if p.n % 5 != 0 || p.n % 2 == 1 || (p.n / 2) % 2 == 0 {
                return fail("5 divides n, n/2 odd");
            }
        }
        13 => {
            if p.n % 8 != 4 {
                return fail("n = 4 (mod 8)");
            }
            if p.q != 2 && p.q != 4 {
                return fail("q in {2,4}");
            }
        }
        14 => {
            if p.n % 4 != 1 || p.n < 9 {
                return fail("n = 1 (mod 4), n >= 9");
            }
            if p.q % 2 == 0 || pp.is_none() {
                return fail("q odd");
            }
        }
        _ => return Err(Error::Parse(format!("no line {line}"))),
    }
    Ok(())
}

/// Scenario config file: `key = value` lines (`#` comments).
#[derive(Clone, Debug, PartialEq)]
pub struct ScenarioConfig {
    pub line: String,
    pub n: Option<usize>,
    pub q: Option<u64>,
    pub extensions: Vec<String>,
    pub strategy: Strategy,
    pub element_cap: u64,
    pub orbit_cap: u64,
    pub seed: u64,
}

impl FromStr for ScenarioConfig {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let mut kv = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let l = raw.split('#').next().unwrap_or("").trim();
            if l.is_empty() {
                continue;
            }
            let (k, v) = l.split_once('=').ok_or_else(|| Error::Parse(format!("config line {}: expected key = value", i + 1)))?;
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
        let get = |k: &str| kv.get(k).cloned();
        let num = |k: &str| -> Result<Option<u64>> {
            get(k).map(|v| v.replace('_', "").parse::<u64>().map_err(|_| Error::Parse(format!("{k} = {v}")))).transpose()
        };
        let line = get("line").ok_or_else(|| Error::Parse("config needs `line`".into()))?;
        let caps = Caps::default();
        let cfg = ScenarioConfig {
            line,
            n: num("n")?.map(|v| v as usize),
            q: num("q")?,
            extensions: get("extensions").map(|v| v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()).unwrap_or_default(),
            strategy: get("strategy").map(|s| s.parse()).transpose()?.unwrap_or(Strategy::Auto),
            element_cap: num("element_cap")?.unwrap_or(caps.elements),
            orbit_cap: num("orbit_cap")?.unwrap_or(caps.orbit),
            seed: num("seed")?.unwrap_or(1),
        };
        if cfg.element_cap == 0 || cfg.orbit_cap == 0 {
            return Err(Error::Parse("caps must be positive".into()));
        }
        for k in kv.keys() {
            if !["line", "n", "q", "extensions", "strategy", "element_cap", "orbit_cap", "seed"].contains(&k.as_str()) {
                return Err(Error::Parse(format!("unknown config key {k}")));
            }
        }
        Ok(cfg)
    }
}

fn verdict_mark(r: &Option<FactorizationReport>) -> &'static str {
    match r.as_ref().map(|r| r.verdict) {
        Some(Verdict::Factorizes) => "yes",
        Some(Verdict::Fails) => "no",
        Some(Verdict::InconclusiveCap) => "cap",
        None => "-",
    }
}

/// Markdown table with the table columns plus the computed verdicts.
pub fn markdown_summary(reports: &[LineReport]) -> String {
    let defs = registry();
    let mut s = String::new();
    s.push_str("| Line | Group | element x | element y | Remarks | √ | params | G=N(x)N(y) | G=C(x)C(y) | status |\n");
    s.push_str("|---|---|---|---|---|---|---|---|---|---|\n");
    for r in reports {
        let d = defs.iter().find(|d| d.id.to_string() == r.line);
        let (g, x, y, rem) = d.map_or((r.group.as_str(), "", "", ""), |d| (d.group, d.x, d.y, d.remarks));
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | n={}, q={} | {} | {} | {} |",
            r.line,
            g,
            x,
            y,
            rem,
            if r.expected_sqrt { "√" } else { "" },
            r.params.n,
            r.params.q,
            verdict_mark(&r.normalizer),
            verdict_mark(&r.centralizer),
            if r.ok { "ok" } else if r.inconclusive() { "inconclusive" } else { "MISMATCH" }
        );
    }
    s
}
