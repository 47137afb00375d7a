//! Centralizers and normalizers of cyclic subgroups, factorization tests and
//! the exhaustive pair explorer.
//!
//! Centralizers are computed exactly by a backtrack search over a base adapted
//! to the cycles of x: once the image of a point is chosen, the images of the
//! rest of its x-cycle are forced, so the search tree stays small.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgrp::{orbit, Bsgs, BsgsOptions, Certificate, Perm};

pub const DEFAULT_ELEMENT_CAP: u64 = 1 << 21;
pub const DEFAULT_ORBIT_CAP: u64 = 1 << 22;
/// Search nodes allowed in one backtrack before giving up.
pub const DEFAULT_NODE_CAP: u64 = 50_000_000;

/// A permutation group with a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    pub label: String,
    pub n: usize,
    pub gens: Vec<Perm>,
    pub bsgs: Bsgs,
}

impl PermGroup {
    pub fn new(label: impl Into<String>, n: usize, gens: Vec<Perm>, known_order: Option<BigUint>, seed: u64) -> Result<Self> {
        let opts = BsgsOptions { seed, known_order, ..Default::default() };
        let bsgs = Bsgs::new(n, &gens, &opts)?;
        Ok(PermGroup { label: label.into(), n, gens, bsgs })
    }

    pub fn order(&self) -> BigUint {
        self.bsgs.order()
    }

    pub fn certificate(&self) -> Certificate {
        self.bsgs.certificate
    }

    /// A copy of the BSGS rebuilt on a base starting with `prefix`.
    fn rebased(&self, prefix: Vec<u32>, seed: u64) -> Result<Bsgs> {
        let opts = BsgsOptions { seed, known_order: Some(self.order()), base_prefix: prefix, ..Default::default() };
        Bsgs::new(self.n, &self.gens, &opts)
    }
}

/// A subgroup given by generators with an exact (or witness) order.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub gens: Vec<Perm>,
    pub order: BigUint,
    /// false when the subgroup only under-approximates the intended one
    pub exact: bool,
}

impl Subgroup {
    pub fn bsgs(&self, n: usize, seed: u64) -> Result<Bsgs> {
        let opts = BsgsOptions { seed, known_order: Some(self.order.clone()), ..Default::default() };
        Bsgs::new(n, &self.gens, &opts)
    }

    /// Subgroup generated by witnesses; order by Schreier–Sims.
    pub fn witness(n: usize, gens: Vec<Perm>, seed: u64) -> Result<Subgroup> {
        let b = Bsgs::new(n, &gens, &BsgsOptions { seed, ..Default::default() })?;
        Ok(Subgroup { gens, order: b.order(), exact: false })
    }
}

fn cycle_lengths_by_point(p: &Perm) -> Vec<u32> {
    let n = p.degree();
    let mut len = vec![0u32; n];
    for i in 0..n {
        if len[i] != 0 {
            continue;
        }
        let mut cyc = vec![i as u32];
        let mut j = p.img(i as u32);
        while j != i as u32 {
            cyc.push(j);
            j = p.img(j);
        }
        for &c in &cyc {
            len[c as usize] = cyc.len() as u32;
        }
    }
    len
}

/// Backtrack search for elements g of G with g⁻¹·x·g = z.
struct ConjSearch<'a> {
    bsgs: Bsgs,
    base: Vec<u32>,
    /// level of x⁻¹(b_j) when that point is an earlier base point
    pred: Vec<Option<usize>>,
    x: &'a Perm,
    z: &'a Perm,
    clx: Vec<u32>,
    clz: Vec<u32>,
    nodes: u64,
    node_cap: u64,
}

impl<'a> ConjSearch<'a> {
    fn new(g: &PermGroup, x: &'a Perm, z: &'a Perm, seed: u64, node_cap: u64) -> Result<Self> {
        let n = g.n;
        // base prefix: whole x-cycles, enough of them to cover a few base lengths
        let want = (3 * g.bsgs.depth()).max(4).min(n);
        let mut prefix = Vec::new();
        let mut covered = vec![false; n];
        // prefer long cycles first: their images are most constrained
        let clx = cycle_lengths_by_point(x);
        let mut starts: Vec<u32> = (0..n as u32).collect();
        starts.sort_by_key(|&p| (std::cmp::Reverse(clx[p as usize]), p));
        for &s in &starts {
            if prefix.len() >= want {
                break;
            }
            if covered[s as usize] {
                continue;
            }
            let mut p = s;
            loop {
                covered[p as usize] = true;
                prefix.push(p);
                p = x.img(p);
                if p == s {
                    break;
                }
            }
        }
        let bsgs = g.rebased(prefix, seed)?;
        let base = bsgs.base();
        let mut pos = HashMap::new();
        for (i, &b) in base.iter().enumerate() {
            pos.insert(b, i);
        }
        let xinv = x.inv();
        let pred = base
            .iter()
            .enumerate()
            .map(|(j, &b)| pos.get(&xinv.img(b)).copied().filter(|&s| s < j))
            .collect();
        Ok(ConjSearch { bsgs, base, pred, x, z, clx, clz: cycle_lengths_by_point(z), nodes: 0, node_cap })
    }

    /// Candidate image allowed for the base point at level j, given the partial element.
    fn forced(&self, j: usize, p: &Perm) -> Option<u32> {
        self.pred[j].map(|s| self.z.img(p.img(self.base[s])))
    }

    fn dfs(&mut self, j: usize, p: &Perm, pinv: &Perm) -> Result<Option<Perm>> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return Err(Error::Cap(format!("backtrack exceeded {} nodes", self.node_cap)));
        }
        if j == self.base.len() {
            return Ok((self.x.conj(p) == *self.z).then(|| p.clone()));
        }
        let b = self.base[j];
        if let Some(d) = self.forced(j, p) {
            let o = pinv.img(d);
            if !self.bsgs.in_level_orbit(j, o) {
                return Ok(None);
            }
            return self.step(j, o, p, pinv);
        }
        let want = self.clx[b as usize];
        let orbit: Vec<u32> = self.bsgs.level_orbit(j).to_vec();
        for o in orbit {
            if self.clz[p.img(o) as usize] != want {
                continue;
            }
            if let Some(g) = self.step(j, o, p, pinv)? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    fn step(&mut self, j: usize, o: u32, p: &Perm, pinv: &Perm) -> Result<Option<Perm>> {
        let u = self.bsgs.transversal(j, o);
        let np = u.mul(p);
        let npinv = pinv.mul(&u.inv());
        self.dfs(j + 1, &np, &npinv)
    }

    /// An element of the i-th stabilizer mapping b_i to `o` (with the constraint).
    fn search_at(&mut self, i: usize, o: u32) -> Result<Option<Perm>> {
        let id = Perm::identity(self.bsgs.n);
        if let Some(d) = self.forced(i, &id) {
            if d != o {
                return Ok(None);
            }
        } else if self.clz[o as usize] != self.clx[self.base[i] as usize] {
            return Ok(None);
        }
        self.step(i, o, &id, &id)
    }
}

/// Exact centralizer of x in G.
pub fn centralizer(g: &PermGroup, x: &Perm, seed: u64) -> Result<Subgroup> {
    centralizer_capped(g, x, seed, DEFAULT_NODE_CAP)
}

pub fn centralizer_capped(g: &PermGroup, x: &Perm, seed: u64, node_cap: u64) -> Result<Subgroup> {
    let mut s = ConjSearch::new(g, x, x, seed, node_cap)?;
    let depth = s.base.len();
    let n = g.n;
    let mut found: Vec<Perm> = Vec::new();
    let mut order = BigUint::one();
    for i in (0..depth).rev() {
        let b = s.base[i];
        let mut reached = vec![false; n];
        for p in orbit(&found, b) {
            reached[p as usize] = true;
        }
        let mut failed = vec![false; n];
        let candidates: Vec<u32> = s.bsgs.level_orbit(i).to_vec();
        for p in candidates {
            if reached[p as usize] || failed[p as usize] {
                continue;
            }
            match s.search_at(i, p)? {
                Some(h) => {
                    found.push(h);
                    for q in orbit(&found, b) {
                        reached[q as usize] = true;
                    }
                }
                None => {
                    for q in orbit(&found, p) {
                        failed[q as usize] = true;
                    }
                }
            }
        }
        order *= reached.iter().filter(|&&r| r).count() as u64;
    }
    if found.is_empty() {
        found.push(Perm::identity(n));
    }
    Ok(Subgroup { gens: found, order, exact: true })
}

/// Some g ∈ G with g⁻¹·x·g = z, if one exists.
pub fn conjugating_element(g: &PermGroup, x: &Perm, z: &Perm, seed: u64) -> Result<Option<Perm>> {
    if x.cycle_lengths() != z.cycle_lengths() {
        return Ok(None);
    }
    let mut s = ConjSearch::new(g, x, z, seed, DEFAULT_NODE_CAP)?;
    let id = Perm::identity(g.n);
    s.dfs(0, &id, &id)
}

/// Normalizer of ⟨x⟩ with its centralizer and the exponents k for which x^k ~ x.
#[derive(Clone, Debug)]
pub struct CyclicNormalizer {
    pub centralizer: Subgroup,
    pub normalizer: Subgroup,
    /// units k mod |x| such that some element conjugates x to x^k
    pub exponents: Vec<u64>,
    pub x_order: u64,
}

impl CyclicNormalizer {
    /// |N : C|
    pub fn index(&self) -> u64 {
        self.exponents.len() as u64
    }
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

pub fn normalizer_cyclic(g: &PermGroup, x: &Perm, seed: u64) -> Result<CyclicNormalizer> {
    let c = centralizer(g, x, seed)?;
    let o = x.order();
    let mut have: Vec<u64> = vec![1 % o.max(1)];
    let mut missing: HashSet<u64> = HashSet::new();
    let mut gens = c.gens.clone();
    let close = |ks: &[u64]| -> Vec<u64> {
        let mut set: Vec<u64> = ks.to_vec();
        let mut i = 0;
        while i < set.len() {
            for &k in ks {
                let v = set[i] * k % o;
                if !set.contains(&v) {
                    set.push(v);
                }
            }
            i += 1;
        }
        set
    };
    for k in 2..o {
        if k.gcd(&o) != 1 || have.contains(&k) || missing.contains(&k) {
            continue;
        }
        let z = x.pow(k as i64);
        match conjugating_element(g, x, &z, seed)? {
            Some(h) => {
                debug_assert_eq!(x.conj(&h), z);
                gens.push(h);
                have.push(k);
                have = close(&have);
            }
            None => {
                for &h in &have {
                    missing.insert(k * h % o);
                }
            }
        }
    }
    have.sort_unstable();
    let order = &c.order * have.len() as u64;
    Ok(CyclicNormalizer {
        normalizer: Subgroup { gens, order, exact: true },
        centralizer: c,
        exponents: have,
        x_order: o,
    })
}

/// Does every generator send x to a power of x?
pub fn normalizes(gens: &[Perm], x: &Perm) -> bool {
    let powers: HashSet<Perm> = (1..=x.order()).map(|k| x.pow(k as i64)).collect();
    gens.iter().all(|g| powers.contains(&x.conj(g)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    EnumerateIntersection,
    GeometricTransitivity,
    Auto,
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enumerate" | "enumerate-intersection" => Ok(Strategy::EnumerateIntersection),
            "geometric" | "geometric-transitivity" => Ok(Strategy::GeometricTransitivity),
            "auto" => Ok(Strategy::Auto),
            _ => Err(Error::Parse(format!("strategy {s}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Factorizes,
    Fails,
    InconclusiveCap,
}

#[derive(Clone, Debug, Serialize)]
pub struct Orders {
    #[serde(rename = "G")]
    pub g: String,
    #[serde(rename = "X")]
    pub x: String,
    #[serde(rename = "Y")]
    pub y: String,
    #[serde(rename = "XcapY", skip_serializing_if = "Option::is_none")]
    pub xcapy: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DomainInfo {
    pub kind: String,
    pub size: u64,
    pub orbit_lengths: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    pub group: String,
    pub line: String,
    pub params: serde_json::Value,
    pub strategy: Strategy,
    pub orders: Orders,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domain: Option<DomainInfo>,
    pub verdict: Verdict,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl FactorizationReport {
    fn new(group: &str, strategy: Strategy, g: &BigUint, x: &Subgroup, y: &Subgroup, seed: u64) -> Self {
        FactorizationReport {
            group: group.to_string(),
            line: String::new(),
            params: serde_json::Value::Null,
            strategy,
            orders: Orders { g: g.to_string(), x: x.order.to_string(), y: y.order.to_string(), xcapy: None },
            domain: None,
            verdict: Verdict::InconclusiveCap,
            seed,
            elapsed_ms: 0,
        }
    }
}

/// |X ∩ Y| by enumerating the smaller group and sifting into the larger.
pub fn intersection_order(n: usize, x: &Subgroup, y: &Subgroup, cap: u64, seed: u64) -> Result<u64> {
    let (small, large) = if x.order <= y.order { (x, y) } else { (y, x) };
    if small.order > BigUint::from(cap) {
        return Err(Error::Cap(format!("factor of order {} exceeds enumeration cap {cap}", small.order)));
    }
    let sb = small.bsgs(n, seed)?;
    let lb = large.bsgs(n, seed)?;
    let mut count = 0u64;
    sb.for_each_element(cap, |e| {
        if lb.contains(e) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Size of the union of the conjugation orbits of `seeds` under ⟨gens⟩ (capped).
pub fn conjugation_orbit_size(gens: &[Perm], seeds: &[Perm], cap: u64) -> Result<u64> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue: Vec<Perm> = Vec::new();
    for s in seeds {
        if seen.insert(s.clone()) {
            queue.push(s.clone());
        }
    }
    let mut i = 0;
    while i < queue.len() {
        let e = queue[i].clone();
        for g in gens {
            let c = e.conj(g);
            if !seen.contains(&c) {
                if seen.len() as u64 >= cap {
                    return Err(Error::Cap(format!("conjugation orbit exceeds {cap}")));
                }
                seen.insert(c.clone());
                queue.push(c);
            }
        }
        i += 1;
    }
    Ok(seen.len() as u64)
}

/// Data describing the right-hand factor for a transitivity test: Y is the
/// normalizer (or centralizer) of ⟨y⟩, so G/Y is the class of ⟨y⟩ (or y).
#[derive(Clone, Debug)]
pub struct ClassTarget {
    /// y^k for the exponents k with y^k ~ y (just y for a centralizer)
    pub seeds: Vec<Perm>,
    /// |G : C_G(y)|
    pub class_size: BigUint,
}

impl ClassTarget {
    pub fn normalizer(g: &BigUint, y: &Perm, ny: &CyclicNormalizer) -> Self {
        ClassTarget { seeds: ny.exponents.iter().map(|&k| y.pow(k as i64)).collect(), class_size: g / &ny.centralizer.order }
    }
    pub fn centralizer(g: &BigUint, y: &Perm, cy: &Subgroup) -> Self {
        ClassTarget { seeds: vec![y.clone()], class_size: g / &cy.order }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub elements: u64,
    pub orbit: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { elements: DEFAULT_ELEMENT_CAP, orbit: DEFAULT_ORBIT_CAP }
    }
}

/// Test G = X·Y. `target` describes Y as the stabilizer of ⟨y⟩ (or y) in
/// the conjugation action, enabling the transitivity strategy.
pub fn test_factorization(
    g: &PermGroup,
    x: &Subgroup,
    y: &Subgroup,
    target: Option<&ClassTarget>,
    strategy: Strategy,
    caps: Caps,
    seed: u64,
) -> Result<FactorizationReport> {
    let t0 = Instant::now();
    let go = g.order();
    let small_enough = |s: &Subgroup| s.order <= BigUint::from(caps.elements);
    let orbit_ok = target.is_some_and(|t| t.class_size <= BigUint::from(caps.orbit));
    let chosen = match strategy {
        Strategy::Auto => {
            if orbit_ok {
                Strategy::GeometricTransitivity
            } else {
                Strategy::EnumerateIntersection
            }
        }
        s => s,
    };
    let mut rep = FactorizationReport::new(&g.label, chosen, &go, x, y, seed);
    // necessary condition |X||Y| ≥ |G|
    let product = &x.order * &y.order;
    if product < go {
        rep.verdict = if x.exact && y.exact { Verdict::Fails } else { Verdict::InconclusiveCap };
    } else {
        match chosen {
            Strategy::EnumerateIntersection => {
                if small_enough(x) || small_enough(y) {
                    let i = intersection_order(g.n, x, y, caps.elements, seed)?;
                    rep.orders.xcapy = Some(i.to_string());
                    let ok = product == &go * i;
                    rep.verdict = verdict(ok, x.exact && y.exact);
                }
            }
            Strategy::GeometricTransitivity => {
                if let (Some(t), true) = (target, orbit_ok) {
                    match conjugation_orbit_size(&x.gens, &t.seeds, caps.orbit) {
                        Ok(sz) => {
                            let want = t.class_size.to_u64().unwrap_or(u64::MAX);
                            rep.domain = Some(DomainInfo {
                                kind: "conjugacy-class".into(),
                                size: want,
                                orbit_lengths: vec![sz],
                            });
                            // y itself exact is required for the target size
                            rep.verdict = verdict(sz == want, x.exact);
                        }
                        Err(Error::Cap(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
            Strategy::Auto => unreachable!(),
        }
    }
    rep.elapsed_ms = t0.elapsed().as_millis() as u64;
    Ok(rep)
}

fn verdict(ok: bool, exact: bool) -> Verdict {
    match (ok, exact) {
        (true, _) => Verdict::Factorizes,
        (false, true) => Verdict::Fails,
        (false, false) => Verdict::InconclusiveCap,
    }
}

/// Geometric test on an explicit domain: X is the stabilizer of a point ω of
/// a G-orbit `domain_gens` acts on; G = X·Y iff Y is transitive on that orbit.
pub fn test_point_transitivity(
    group: &str,
    g_order: &BigUint,
    x: &Subgroup,
    y: &Subgroup,
    y_on_domain: &[Perm],
    domain_kind: &str,
    domain_size: usize,
    seed: u64,
) -> FactorizationReport {
    let t0 = Instant::now();
    let mut rep = FactorizationReport::new(group, Strategy::GeometricTransitivity, g_order, x, y, seed);
    let lens = crate::permgrp::orbit_lengths(y_on_domain, domain_size);
    let transitive = lens.len() == 1;
    rep.domain = Some(DomainInfo { kind: domain_kind.into(), size: domain_size as u64, orbit_lengths: lens });
    rep.verdict = verdict(transitive, y.exact);
    rep.elapsed_ms = t0.elapsed().as_millis() as u64;
    rep
}

/// Centralizer version of the factorization test (both centralizers exact).
pub fn test_centralizer_factorization(g: &PermGroup, x: &Perm, y: &Perm, caps: Caps, seed: u64) -> Result<FactorizationReport> {
    let cx = centralizer(g, x, seed)?;
    let cy = centralizer(g, y, seed)?;
    let go = g.order();
    // orbit on the smaller class
    let (a, cb, b) = if &go / &cy.order <= &go / &cx.order { (&cx, &cy, y) } else { (&cy, &cx, x) };
    let t = ClassTarget::centralizer(&go, b, cb);
    test_factorization(g, a, cb, Some(&t), Strategy::Auto, caps, seed)
}

/// Normalizer factorization test for elements x, y.
pub fn test_normalizer_factorization(
    g: &PermGroup,
    x: &Perm,
    y: &Perm,
    strategy: Strategy,
    caps: Caps,
    seed: u64,
) -> Result<FactorizationReport> {
    let nx = normalizer_cyclic(g, x, seed)?;
    let ny = normalizer_cyclic(g, y, seed)?;
    test_normalizers(g, x, &nx, y, &ny, strategy, caps, seed)
}

#[allow(clippy::too_many_arguments)]
pub fn test_normalizers(
    g: &PermGroup,
    x: &Perm,
    nx: &CyclicNormalizer,
    y: &Perm,
    ny: &CyclicNormalizer,
    strategy: Strategy,
    caps: Caps,
    seed: u64,
) -> Result<FactorizationReport> {
    let go = g.order();
    let cls_x = &go / &nx.centralizer.order;
    let cls_y = &go / &ny.centralizer.order;
    if cls_y <= cls_x {
        let t = ClassTarget::normalizer(&go, y, ny);
        test_factorization(g, &nx.normalizer, &ny.normalizer, Some(&t), strategy, caps, seed)
    } else {
        let t = ClassTarget::normalizer(&go, x, nx);
        let mut r = test_factorization(g, &ny.normalizer, &nx.normalizer, Some(&t), strategy, caps, seed)?;
        std::mem::swap(&mut r.orders.x, &mut r.orders.y);
        Ok(r)
    }
}

/// A representative of a conjugacy class of cyclic subgroups.
#[derive(Clone, Debug, Serialize)]
pub struct CyclicClassRep {
    #[serde(skip)]
    pub rep: Perm,
    pub order: u64,
    /// number of conjugates of ⟨x⟩
    pub subgroup_class_size: u64,
    pub class_id: usize,
    pub cycles: String,
    pub normalizer_order: u64,
    pub centralizer_order: u64,
    #[serde(skip)]
    pub normalizer: Option<CyclicNormalizer>,
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime_small(n: u64) -> bool {
    n >= 2 && prime_factors(n) == vec![n]
}

/// Representatives of the conjugacy classes of nontrivial cyclic subgroups
/// (prime order only when `prime_only`), by full element enumeration.
pub fn cyclic_class_reps(g: &PermGroup, prime_only: bool, cap: u64, seed: u64) -> Result<Vec<CyclicClassRep>> {
    if g.order() > BigUint::from(cap) {
        return Err(Error::Cap(format!("group of order {} exceeds the explorer cap {cap}", g.order())));
    }
    let mut elems = g.bsgs.elements(cap)?;
    elems.retain(|e| !e.is_identity());
    let mut keyed: Vec<(u64, u128, Perm)> = elems.into_iter().map(|e| (e.order(), e.fingerprint(), e)).collect();
    keyed.retain(|(o, _, _)| !prime_only || is_prime_small(*o));
    keyed.sort_by(|a, b| (a.0, a.1, &a.2 .0).cmp(&(b.0, b.1, &b.2 .0)));
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut reps = Vec::new();
    let mut count_by_order: HashMap<u64, u64> = HashMap::new();
    for (o, _, _) in &keyed {
        *count_by_order.entry(*o).or_default() += 1;
    }
    let mut covered_by_order: HashMap<u64, u64> = HashMap::new();
    for (o, _, e) in &keyed {
        if seen.contains(e) {
            continue;
        }
        // all generators of all conjugates of ⟨e⟩
        let gens_of: Vec<Perm> = (1..*o).filter(|k| k.gcd(o) == 1).map(|k| e.pow(k as i64)).collect();
        let mut cls: Vec<Perm> = gens_of.clone();
        let mut set: HashSet<Perm> = cls.iter().cloned().collect();
        let mut i = 0;
        while i < cls.len() {
            let c = cls[i].clone();
            for s in &g.gens {
                let d = c.conj(s);
                if set.insert(d.clone()) {
                    cls.push(d);
                }
            }
            i += 1;
        }
        *covered_by_order.entry(*o).or_default() += cls.len() as u64;
        let nz = normalizer_cyclic(g, e, seed)?;
        let subgroup_class_size = (g.order() / &nz.normalizer.order).to_u64().unwrap_or(0);
        debug_assert_eq!(subgroup_class_size * euler_phi(*o), cls.len() as u64);
        seen.extend(cls);
        reps.push(CyclicClassRep {
            rep: e.clone(),
            order: *o,
            subgroup_class_size,
            class_id: reps.len(),
            cycles: e.cycles_string(),
            normalizer_order: nz.normalizer.order.to_u64().unwrap_or(0),
            centralizer_order: nz.centralizer.order.to_u64().unwrap_or(0),
            normalizer: Some(nz),
        });
    }
    // completeness: every element of each order is a generator of some listed subgroup
    for (o, c) in &count_by_order {
        if covered_by_order.get(o) != Some(c) {
            return Err(Error::Unknown(format!("class enumeration incomplete for order {o}")));
        }
    }
    Ok(reps)
}

#[derive(Clone, Debug, Serialize)]
pub struct PairResult {
    pub i: usize,
    pub j: usize,
    pub x_order: u64,
    pub y_order: u64,
    pub x_cycles: String,
    pub y_cycles: String,
    pub report: FactorizationReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct Exploration {
    pub group: String,
    pub order: String,
    pub classes: Vec<CyclicClassRep>,
    /// factorizing pairs of prime-order class representatives
    pub pairs: Vec<PairResult>,
    /// factorizing pairs with at least one composite order (follow-up)
    pub composite_pairs: Vec<PairResult>,
    pub max_normalizer_order: u64,
}

fn pair_test(g: &PermGroup, a: &CyclicClassRep, b: &CyclicClassRep, caps: Caps, seed: u64) -> Result<PairResult> {
    let na = a.normalizer.as_ref().expect("normalizer");
    let nb = b.normalizer.as_ref().expect("normalizer");
    let report = test_normalizers(g, &a.rep, na, &b.rep, nb, Strategy::Auto, caps, seed)?;
    Ok(PairResult {
        i: a.class_id,
        j: b.class_id,
        x_order: a.order,
        y_order: b.order,
        x_cycles: a.cycles.clone(),
        y_cycles: b.cycles.clone(),
        report,
    })
}

/// Test every unordered pair of prime-order cyclic classes; with `composite`,
/// also test pairs involving composite orders whose prime-power derived pairs
/// all factorize.
pub fn explore_all_pairs(g: &PermGroup, composite: bool, caps: Caps, seed: u64) -> Result<Exploration> {
    let all = cyclic_class_reps(g, false, 1 << 26, seed)?;
    let prime: Vec<&CyclicClassRep> = all.iter().filter(|c| is_prime_small(c.order)).collect();
    let mut pairs = Vec::new();
    let mut good: HashSet<(usize, usize)> = HashSet::new();
    for (a_i, a) in prime.iter().enumerate() {
        for b in prime.iter().skip(a_i) {
            let r = pair_test(g, a, b, caps, seed)?;
            if r.report.verdict == Verdict::Factorizes {
                good.insert((a.class_id, b.class_id));
                good.insert((b.class_id, a.class_id));
                pairs.push(r);
            }
        }
    }
    let mut composite_pairs = Vec::new();
    if composite {
        // class id of the subgroup generated by e
        let class_of = |e: &Perm| -> Result<usize> {
            let o = e.order();
            for c in all.iter().filter(|c| c.order == o) {
                for k in (1..o.max(2)).filter(|k| k.gcd(&o) == 1) {
                    if conjugating_element(g, &c.rep.pow(k as i64), e, seed)?.is_some() {
                        return Ok(c.class_id);
                    }
                }
            }
            Err(Error::Unknown("element outside enumerated classes".into()))
        };
        let prime_parts = |c: &CyclicClassRep| -> Result<Vec<usize>> {
            prime_factors(c.order).into_iter().map(|p| class_of(&c.rep.pow((c.order / p) as i64))).collect()
        };
        let parts: Vec<Vec<usize>> = all.iter().map(prime_parts).collect::<Result<_>>()?;
        for (a_i, a) in all.iter().enumerate() {
            for (b_i, b) in all.iter().enumerate().skip(a_i) {
                if is_prime_small(a.order) && is_prime_small(b.order) {
                    continue;
                }
                let admissible = parts[a_i].iter().all(|&p| parts[b_i].iter().all(|&q| good.contains(&(p, q))));
                if !admissible {
                    continue;
                }
                let r = pair_test(g, a, b, caps, seed)?;
                if r.report.verdict == Verdict::Factorizes {
                    composite_pairs.push(r);
                }
            }
        }
    }
    let max_normalizer_order = all.iter().map(|c| c.normalizer_order).max().unwrap_or(0);
    Ok(Exploration {
        group: g.label.clone(),
        order: g.order().to_string(),
        classes: all.into_iter().filter(|c| is_prime_small(c.order)).collect(),
        pairs,
        composite_pairs,
        max_normalizer_order,
    })
}

/// Orders of all subgroups in a list are consistent: |N : C| divides φ(|x|).
pub fn index_divides_totient(n: &CyclicNormalizer) -> bool {
    let phi = euler_phi(n.x_order);
    let nc = &n.normalizer.order / &n.centralizer.order;
    (&n.normalizer.order % &n.centralizer.order).is_zero() && (BigUint::from(phi) % nc).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::{alternating_gens, m11_gens, symmetric_gens};

    fn sym(n: usize) -> PermGroup {
        PermGroup::new(format!("Sym({n})"), n, symmetric_gens(n), None, 1).unwrap()
    }

    #[test]
    fn centralizer_of_transposition() {
        let g = sym(5);
        let t = Perm::from_cycles(5, &[&[1, 2]]);
        let c = centralizer(&g, &t, 1).unwrap();
        assert_eq!(c.order, BigUint::from(12u32));
        let cy = Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]);
        let n = normalizer_cyclic(&g, &cy, 1).unwrap();
        assert_eq!(n.normalizer.order, BigUint::from(20u32));
        assert!(normalizes(&n.normalizer.gens, &cy));
        assert!(index_divides_totient(&n));
    }

    #[test]
    fn centralizer_matches_brute_force_in_sym6() {
        let g = sym(6);
        let elems = g.bsgs.elements(1000).unwrap();
        for x in elems.iter().step_by(37) {
            let brute = elems.iter().filter(|h| x.conj(h) == *x).count();
            let c = centralizer(&g, x, 3).unwrap();
            assert_eq!(c.order, BigUint::from(brute), "{}", x.cycles_string());
        }
    }

    #[test]
    fn sym5_classes_and_pairs() {
        let g = sym(5);
        let reps = cyclic_class_reps(&g, true, 1 << 20, 1).unwrap();
        assert_eq!(reps.len(), 4);
        let ex = explore_all_pairs(&g, true, Caps::default(), 1).unwrap();
        let mut orders: Vec<(u64, u64)> = ex.pairs.iter().map(|p| (p.x_order, p.y_order)).collect();
        orders.sort();
        assert_eq!(orders, vec![(2, 5), (3, 5)]);
        assert!(ex.composite_pairs.iter().any(|p| (p.x_order, p.y_order) == (5, 6) || (p.x_order, p.y_order) == (6, 5)));
    }

    #[test]
    fn m11_and_alt7_have_no_pairs() {
        let m = PermGroup::new("M11", 11, m11_gens(), None, 1).unwrap();
        let ex = explore_all_pairs(&m, false, Caps::default(), 1).unwrap();
        assert!(ex.pairs.is_empty());
        assert_eq!(ex.max_normalizer_order, 55);
        let a = PermGroup::new("Alt(7)", 7, alternating_gens(7), None, 1).unwrap();
        assert!(explore_all_pairs(&a, false, Caps::default(), 1).unwrap().pairs.is_empty());
    }

    #[test]
    fn strategies_agree_on_sym5() {
        let g = sym(5);
        let x = Perm::from_cycles(5, &[&[1, 2]]);
        let y = Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]);
        let a = test_normalizer_factorization(&g, &x, &y, Strategy::EnumerateIntersection, Caps::default(), 1).unwrap();
        let b = test_normalizer_factorization(&g, &x, &y, Strategy::GeometricTransitivity, Caps::default(), 1).unwrap();
        assert_eq!(a.verdict, Verdict::Factorizes);
        assert_eq!(b.verdict, Verdict::Factorizes);
        let c = test_centralizer_factorization(&g, &x, &y, Caps::default(), 1).unwrap();
        assert_eq!(c.verdict, Verdict::Fails);
    }
}
