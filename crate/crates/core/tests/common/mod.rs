//! Checks shared by the acceptance harness and the property suites.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use gfact::grpgen::{classical_group, domain_for, GroupSpec, PointDomain};
use gfact::normfact::{index_divides_totient, normalizer_cyclic, PermGroup};
use gfact::permgrp::{is_semiregular, is_transitive, symmetric_gens, Bsgs, BsgsOptions, Perm};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Outcome = (bool, String);

/// Specs whose order formula is compared with an unconstrained Schreier–Sims run.
pub const ORDER_SPECS: &[&str] = &[
    "SL:2:7", "SL:2:8", "SL:3:3", "SL:3:4", "GL:3:4", "SL:4:2", "Sp:4:3", "Sp:6:2", "SU:3:3", "SU:4:2", "OmegaPlus:6:2",
    "OmegaMinus:6:2", "OmegaMinus:8:2", "OmegaOdd:7:3", "Sp:4:4",
];

pub fn perm_image(spec: &str, seed: u64) -> gfact::Result<(gfact::grpgen::MatrixGroup, Vec<Perm>, usize)> {
    let spec: GroupSpec = spec.parse()?;
    let g = classical_group(&spec, seed)?;
    let dom = PointDomain::new(&g.field, g.n, domain_for(&spec), g.form.as_ref())?;
    let perms = dom.perms(&g.field, &g.gens)?;
    Ok((g, perms, dom.len()))
}

/// Every generator of every spec preserves its form.
pub fn form_preservation() -> Outcome {
    let mut bad = Vec::new();
    for s in ORDER_SPECS {
        let spec: GroupSpec = s.parse().unwrap();
        for seed in 1..=3 {
            let g = classical_group(&spec, seed).unwrap();
            if g.check_forms(false).is_err() {
                bad.push(format!("{s}/{seed}"));
            }
        }
    }
    (bad.is_empty(), format!("{} specs × 3 seeds; failures {bad:?}", ORDER_SPECS.len()))
}

/// Formula order equals a Schreier-verified BSGS order (no known-order shortcut).
pub fn order_vs_bsgs() -> Outcome {
    let mut agree = 0;
    let mut bad = Vec::new();
    for s in ORDER_SPECS {
        let mut hit = false;
        for seed in 1..=4 {
            let (g, perms, n) = perm_image(s, seed).unwrap();
            let b = Bsgs::new(n, &perms, &BsgsOptions { seed, ..Default::default() }).unwrap();
            if Some(b.order()) == g.claimed_order {
                hit = true;
                break;
            }
            // a random generating set may fall short, but never overshoots
            if Some(b.order()) > g.claimed_order {
                break;
            }
        }
        if hit {
            agree += 1;
        } else {
            bad.push(s.to_string());
        }
    }
    (bad.is_empty() && agree >= 10, format!("{agree} groups agree; mismatches {bad:?}"))
}

fn sym(n: usize) -> PermGroup {
    PermGroup::new(format!("Sym({n})"), n, symmetric_gens(n), None, 1).unwrap()
}

/// C(x) ≤ N(⟨x⟩) and |N : C| divides φ(|x|) for every element class of Sym(n).
pub fn containment_and_totient(n: usize) -> Outcome {
    let g = sym(n);
    let mut seen = BTreeSet::new();
    let mut bad = 0;
    let mut classes = 0;
    for x in g.bsgs.elements(1 << 16).unwrap() {
        if x.is_identity() || !seen.insert(x.cycle_lengths()) {
            continue;
        }
        classes += 1;
        let nx = normalizer_cyclic(&g, &x, 1).unwrap();
        let nb = nx.normalizer.bsgs(n, 1).unwrap();
        let contained = nx.centralizer.gens.iter().all(|c| nb.contains(c) && c.mul(&x) == x.mul(c));
        let normal = nx.normalizer.gens.iter().all(|h| {
            let c = x.conj(h);
            (1..=x.order()).any(|k| x.pow(k as i64) == c)
        });
        if !(contained && normal && index_divides_totient(&nx)) {
            bad += 1;
        }
    }
    (bad == 0, format!("Sym({n}): {classes} classes, {bad} violations"))
}

/// If N_Sym(n)(⟨g⟩) is transitive then g is semiregular, for every g ≠ 1
/// (normalizers computed once per cycle type, which determines the class).
pub fn semiregular_exhaustive(nmax: usize) -> Outcome {
    let mut checked = 0u64;
    let mut transitive = 0;
    for n in 2..=nmax {
        let g = sym(n);
        let mut cache: std::collections::HashMap<Vec<usize>, bool> = Default::default();
        for x in g.bsgs.elements(1 << 16).unwrap() {
            if x.is_identity() {
                continue;
            }
            let key = x.cycle_lengths();
            let t = *cache.entry(key).or_insert_with(|| {
                let nx = normalizer_cyclic(&g, &x, 1).unwrap();
                is_transitive(&nx.normalizer.gens, n)
            });
            checked += 1;
            if t {
                transitive += 1;
                if !is_semiregular(&x) {
                    return (false, format!("counterexample {} in Sym({n})", x.cycles_string()));
                }
            }
        }
    }
    (true, format!("{checked} elements of Sym(2..={nmax}); {transitive} with transitive normalizer"))
}

fn closure(n: usize, gens: &[Perm]) -> HashSet<Perm> {
    if gens.is_empty() {
        return [Perm::identity(n)].into_iter().collect();
    }
    let b = Bsgs::new(n, gens, &BsgsOptions::default()).unwrap();
    b.elements(1 << 16).unwrap().into_iter().collect()
}

fn random_elt(rng: &mut impl Rng, pool: &[Perm]) -> Perm {
    pool.choose(rng).unwrap().clone()
}

/// With G = MN and T ≤ N: G = MT iff N = (M∩N)T, on random triples in Sym(6).
/// Returns (agree, triples tested, triples with G = MT).
pub fn restriction_triples(seed: u64, triples: usize) -> (bool, usize, usize) {
    let n = 6;
    let mut rng = gfact::permgrp::seeded_rng(seed);
    let all: Vec<Perm> = sym(n).bsgs.elements(1000).unwrap();
    let go = all.len();
    let (mut tested, mut positive) = (0, 0);
    let mut attempts = 0;
    while tested < triples && attempts < 10_000 {
        attempts += 1;
        let k = rng.gen_range(1..=2);
        let m = closure(n, &(0..k).map(|_| random_elt(&mut rng, &all)).collect::<Vec<_>>());
        let nn = closure(n, &(0..2).map(|_| random_elt(&mut rng, &all)).collect::<Vec<_>>());
        let mn = m.intersection(&nn).count();
        if m.len() * nn.len() != go * mn {
            continue;
        }
        let npool: Vec<Perm> = nn.iter().cloned().collect();
        let kt = rng.gen_range(0..=2);
        let t = closure(n, &(0..kt).map(|_| random_elt(&mut rng, &npool)).collect::<Vec<_>>());
        let mt = m.intersection(&t).count();
        let g_eq = m.len() * t.len() == go * mt;
        let m_cap_n: HashSet<Perm> = m.intersection(&nn).cloned().collect();
        let mnt = m_cap_n.intersection(&t).count();
        let n_eq = m_cap_n.len() * t.len() == nn.len() * mnt;
        if g_eq != n_eq {
            return (false, tested, positive);
        }
        tested += 1;
        positive += g_eq as usize;
    }
    (tested == triples, tested, positive)
}

pub fn big(x: u64) -> BigUint {
    BigUint::from(x)
}
