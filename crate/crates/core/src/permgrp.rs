//! Permutation groups: permutations, orbits, a randomized Schreier–Sims with a
//! verification pass, stabilizers, element enumeration and interned domains.
//!
//! Composition is left to right: `(p * q)[i] = q[p[i]]`, i.e. apply `p` first.

use std::collections::HashMap;
use std::hash::Hash;
use std::io::{Read, Write};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

/// Default cap on the number of objects in a domain (overridable via `GFACT_MEMORY_CAP`).
pub const DEFAULT_DOMAIN_CAP: u64 = 1 << 24;

pub fn domain_cap() -> u64 {
    std::env::var("GFACT_MEMORY_CAP").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_DOMAIN_CAP)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm(pub Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i as usize >= n || seen[i as usize] {
                return Err(Error::NotStable("image array is not a bijection".into()));
            }
            seen[i as usize] = true;
        }
        Ok(Perm(images))
    }

    /// From 1-based cycles on {1..n}.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Perm {
        let mut p: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for k in 0..c.len() {
                p[(c[k] - 1) as usize] = c[(k + 1) % c.len()] - 1;
            }
        }
        Perm(p)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn img(&self, i: u32) -> u32 {
        self.0[i as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `o`.
    pub fn mul(&self, o: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| o.0[i as usize]).collect())
    }

    pub fn mul_into(&self, o: &Perm, out: &mut Perm) {
        for (d, &i) in out.0.iter_mut().zip(&self.0) {
            *d = o.0[i as usize];
        }
    }

    pub fn inv(&self) -> Perm {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u32;
        }
        Perm(out)
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// g⁻¹ · self · g
    pub fn conj(&self, g: &Perm) -> Perm {
        // (g⁻¹ s g)[g[i]] = g[s[i]]
        let mut out = vec![0; self.0.len()];
        for i in 0..self.0.len() {
            out[g.0[i] as usize] = g.0[self.0[i] as usize];
        }
        Perm(out)
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1u64, |a, l| num_integer::lcm(a, l as u64))
    }

    pub fn support(&self) -> usize {
        self.0.iter().enumerate().filter(|(i, &x)| *i as u32 != x).count()
    }

    pub fn first_moved(&self) -> Option<u32> {
        self.0.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i as u32)
    }

    /// 1-based cycle notation, fixed points omitted.
    pub fn cycles_string(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut s = String::new();
        for i in 0..n {
            if seen[i] || self.0[i] as usize == i {
                continue;
            }
            let mut c = Vec::new();
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                c.push((j + 1).to_string());
                j = self.0[j] as usize;
            }
            s.push('(');
            s.push_str(&c.join(" "));
            s.push(')');
        }
        if s.is_empty() {
            "()".into()
        } else {
            s
        }
    }

    /// 128-bit fingerprint (two independent FNV-style streams).
    pub fn fingerprint(&self) -> u128 {
        let (mut a, mut b) = (0xcbf29ce484222325u64, 0x84222325cbf29ce4u64);
        for &x in &self.0 {
            a = (a ^ x as u64).wrapping_mul(0x100000001b3);
            b = (b ^ (x as u64).rotate_left(17)).wrapping_mul(0x9E3779B97F4A7C15);
        }
        ((a as u128) << 64) | b as u128
    }
}

/// True iff all cycles of `p` have the same length.
pub fn is_semiregular(p: &Perm) -> bool {
    let c = p.cycle_lengths();
    c.windows(2).all(|w| w[0] == w[1])
}

/// Sorted orbit of `seed` (breadth-first closure).
pub fn orbit(gens: &[Perm], seed: u32) -> Vec<u32> {
    let n = gens.first().map_or(seed as usize + 1, |g| g.degree());
    let mut seen = vec![false; n];
    seen[seed as usize] = true;
    let mut out = vec![seed];
    let mut i = 0;
    while i < out.len() {
        let p = out[i];
        for g in gens {
            let q = g.img(p);
            if !seen[q as usize] {
                seen[q as usize] = true;
                out.push(q);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Union-find orbit partition; returns the orbit id of every point (ids are
/// the minimal point of each orbit) — memory is one u32 per point.
pub fn orbit_partition(gens: &[Perm], n: usize) -> Vec<u32> {
    let mut parent: Vec<u32> = (0..n as u32).collect();
    fn find(p: &mut [u32], mut x: u32) -> u32 {
        while p[x as usize] != x {
            let nx = p[p[x as usize] as usize];
            p[x as usize] = nx;
            x = nx;
        }
        x
    }
    for g in gens {
        for i in 0..n as u32 {
            let (a, b) = (find(&mut parent, i), find(&mut parent, g.img(i)));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    for i in 0..n as u32 {
        let r = find(&mut parent, i);
        parent[i as usize] = r;
    }
    parent
}

/// Sorted multiset of orbit lengths.
pub fn orbit_lengths(gens: &[Perm], n: usize) -> Vec<u64> {
    let part = orbit_partition(gens, n);
    let mut counts: HashMap<u32, u64> = HashMap::new();
    for r in part {
        *counts.entry(r).or_default() += 1;
    }
    let mut v: Vec<u64> = counts.into_values().collect();
    v.sort_unstable();
    v
}

pub fn is_transitive(gens: &[Perm], n: usize) -> bool {
    n <= 1 || orbit(gens, 0).len() == n
}

const NONE: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Clone, Debug)]
struct Level {
    point: u32,
    gens: Vec<usize>,
    orbit: Vec<u32>,
    /// Schreier vector: generator index used to reach a point, ROOT, or NONE.
    sv: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct BsgsOptions {
    pub seed: u64,
    /// Upper bound for the group order (e.g. from a formula for an overgroup).
    /// Reaching it certifies completeness.
    pub known_order: Option<BigUint>,
    /// Consecutive trivial sifts before attempting verification.
    pub quiet_rounds: usize,
    /// Maximum work (Schreier generators × degree) for the deterministic pass.
    pub verify_budget: u64,
    /// Initial base prefix.
    pub base_prefix: Vec<u32>,
}

impl Default for BsgsOptions {
    fn default() -> Self {
        BsgsOptions { seed: 1, known_order: None, quiet_rounds: 40, verify_budget: 4_000_000_000, base_prefix: Vec::new() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Certificate {
    /// every Schreier generator sifted to the identity
    SchreierVerified,
    /// order reached a known upper bound
    KnownOrder,
    /// randomized construction only
    Randomized,
}

/// Base and strong generating set.
#[derive(Clone, Debug)]
pub struct Bsgs {
    pub n: usize,
    pub gens: Vec<Perm>,
    gens_inv: Vec<Perm>,
    levels: Vec<Level>,
    pub certificate: Certificate,
}

/// Product replacement random element generator.
pub struct ProductReplacement {
    slots: Vec<Perm>,
    acc: Perm,
}

impl ProductReplacement {
    pub fn new(gens: &[Perm], rng: &mut impl Rng) -> ProductReplacement {
        let n = gens[0].degree();
        let mut slots: Vec<Perm> = gens.to_vec();
        while slots.len() < 10 {
            let k = slots.len() % gens.len();
            slots.push(gens[k].clone());
        }
        let mut pr = ProductReplacement { slots, acc: Perm::identity(n) };
        for _ in 0..50 {
            pr.next(rng);
        }
        pr
    }

    pub fn next(&mut self, rng: &mut impl Rng) -> Perm {
        let k = self.slots.len();
        let i = rng.gen_range(0..k);
        let mut j = rng.gen_range(0..k - 1);
        if j >= i {
            j += 1;
        }
        self.slots[i] = if rng.gen_bool(0.5) { self.slots[i].mul(&self.slots[j]) } else { self.slots[j].mul(&self.slots[i]) };
        self.acc = self.acc.mul(&self.slots[i]);
        self.acc.clone()
    }
}

impl Bsgs {
    pub fn new(n: usize, gens: &[Perm], opts: &BsgsOptions) -> Result<Bsgs> {
        let mut b = Bsgs { n, gens: Vec::new(), gens_inv: Vec::new(), levels: Vec::new(), certificate: Certificate::Randomized };
        for &p in &opts.base_prefix {
            b.push_level(p);
        }
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            b.certificate = Certificate::SchreierVerified;
            return Ok(b);
        }
        for g in &gens {
            b.absorb(g);
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(opts.seed);
        let mut pr = ProductReplacement::new(&gens, &mut rng);
        let mut quiet = 0;
        loop {
            if let Some(k) = &opts.known_order {
                let o = b.order();
                if &o == k {
                    b.certificate = Certificate::KnownOrder;
                    return Ok(b);
                }
                if &o > k {
                    return Err(Error::Form(format!("group order {o} exceeds the claimed bound {k}")));
                }
            }
            let g = pr.next(&mut rng);
            if b.absorb(&g) {
                quiet = 0;
            } else {
                quiet += 1;
            }
            if quiet >= opts.quiet_rounds {
                // with a bound, keep sampling until it is met (bail out eventually)
                if opts.known_order.is_some() && quiet < opts.quiet_rounds * 50 {
                    continue;
                }
                break;
            }
        }
        if b.verify_cost() <= opts.verify_budget {
            b.verify();
            b.certificate = Certificate::SchreierVerified;
        }
        Ok(b)
    }

    /// Convenience constructor with default options.
    pub fn from_gens(n: usize, gens: &[Perm]) -> Bsgs {
        Bsgs::new(n, gens, &BsgsOptions::default()).expect("no bound given")
    }

    fn push_level(&mut self, point: u32) {
        let mut sv = vec![NONE; self.n];
        sv[point as usize] = ROOT;
        self.levels.push(Level { point, gens: Vec::new(), orbit: vec![point], sv });
    }

    /// Sift `g`; if a nontrivial residue remains, add it as a strong generator.
    fn absorb(&mut self, g: &Perm) -> bool {
        let (h, lvl) = self.strip(g, 0);
        if lvl == self.levels.len() && h.is_identity() {
            return false;
        }
        self.add_strong(h, lvl);
        true
    }

    fn add_strong(&mut self, h: Perm, lvl: usize) {
        let idx = self.gens.len();
        self.gens_inv.push(h.inv());
        if lvl == self.levels.len() {
            let p = h.first_moved().expect("nontrivial residue");
            self.push_level(p);
        }
        self.gens.push(h);
        for i in 0..=lvl {
            self.levels[i].gens.push(idx);
            self.extend_orbit(i, idx);
        }
    }

    fn extend_orbit(&mut self, i: usize, new_gen: usize) {
        let gens = &self.gens;
        let lv = &mut self.levels[i];
        let old = lv.orbit.len();
        for k in 0..old {
            let p = lv.orbit[k];
            let q = gens[new_gen].img(p);
            if lv.sv[q as usize] == NONE {
                lv.sv[q as usize] = new_gen as u32;
                lv.orbit.push(q);
            }
        }
        let mut k = old;
        while k < lv.orbit.len() {
            let p = lv.orbit[k];
            for &s in &lv.gens {
                let q = gens[s].img(p);
                if lv.sv[q as usize] == NONE {
                    lv.sv[q as usize] = s as u32;
                    lv.orbit.push(q);
                }
            }
            k += 1;
        }
    }

    /// Strip `g` from level `from`; returns the residue and the level reached.
    pub fn strip(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        let mut tmp = Perm::identity(self.n);
        for (i, lv) in self.levels.iter().enumerate().skip(from) {
            let mut p = h.img(lv.point);
            if lv.sv[p as usize] == NONE {
                return (h, i);
            }
            while lv.sv[p as usize] != ROOT {
                let s = lv.sv[p as usize] as usize;
                h.mul_into(&self.gens_inv[s], &mut tmp);
                std::mem::swap(&mut h, &mut tmp);
                p = self.gens_inv[s].img(p);
            }
        }
        (h, self.levels.len())
    }

    /// Coset representative u at level `i` with point^u = p.
    pub fn transversal(&self, i: usize, p: u32) -> Perm {
        let lv = &self.levels[i];
        let mut word = Vec::new();
        let mut q = p;
        while lv.sv[q as usize] != ROOT {
            let s = lv.sv[q as usize] as usize;
            word.push(s);
            q = self.gens_inv[s].img(q);
        }
        let mut u = Perm::identity(self.n);
        for &s in word.iter().rev() {
            u = u.mul(&self.gens[s]);
        }
        u
    }

    fn verify_cost(&self) -> u64 {
        let s: u64 = self.levels.iter().map(|l| (l.orbit.len() * l.gens.len()) as u64).sum();
        s.saturating_mul(self.n as u64).saturating_mul(self.levels.len() as u64 + 1)
    }

    /// Deterministic Schreier–Sims test; adds any missing strong generators.
    fn verify(&mut self) {
        'restart: loop {
            for i in (0..self.levels.len()).rev() {
                let orbit = self.levels[i].orbit.clone();
                let gens = self.levels[i].gens.clone();
                let trans: HashMap<u32, Perm> = orbit.iter().map(|&p| (p, self.transversal(i, p))).collect();
                for &p in &orbit {
                    for &s in &gens {
                        let q = self.gens[s].img(p);
                        let sg = trans[&p].mul(&self.gens[s]).mul(&trans[&q].inv());
                        let (h, lvl) = self.strip(&sg, i + 1);
                        if !(lvl == self.levels.len() && h.is_identity()) {
                            self.add_strong(h, lvl);
                            continue 'restart;
                        }
                    }
                }
            }
            return;
        }
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Orbit of the i-th base point under the i-th stabilizer.
    pub fn level_orbit(&self, i: usize) -> &[u32] {
        &self.levels[i].orbit
    }

    pub fn in_level_orbit(&self, i: usize, p: u32) -> bool {
        self.levels[i].sv[p as usize] != NONE
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |a, l| a * BigUint::from(l.orbit.len()))
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.n {
            return false;
        }
        let (h, lvl) = self.strip(g, 0);
        lvl == self.levels.len() && h.is_identity()
    }

    /// Uniformly random element.
    pub fn random_element(&self, rng: &mut impl Rng) -> Perm {
        let mut g = Perm::identity(self.n);
        for i in (0..self.levels.len()).rev() {
            let lv = &self.levels[i];
            let p = lv.orbit[rng.gen_range(0..lv.orbit.len())];
            g = g.mul(&self.transversal(i, p));
        }
        g
    }

    /// Strong generators fixing the first `k` base points.
    pub fn stabilizer_gens(&self, k: usize) -> Vec<Perm> {
        if k >= self.levels.len() {
            return Vec::new();
        }
        self.levels[k].gens.iter().map(|&s| self.gens[s].clone()).collect()
    }

    /// Images of the base points: determines an element uniquely.
    pub fn base_image(&self, g: &Perm) -> Vec<u32> {
        self.levels.iter().map(|l| g.img(l.point)).collect()
    }

    /// Call `f` on every element (product of transversal elements).
    pub fn for_each_element(&self, cap: u64, mut f: impl FnMut(&Perm)) -> Result<()> {
        let ord = self.order();
        if ord > BigUint::from(cap) {
            return Err(Error::Cap(format!("group of order {ord} exceeds enumeration cap {cap}")));
        }
        let trans: Vec<Vec<Perm>> =
            (0..self.levels.len()).map(|i| self.levels[i].orbit.iter().map(|&p| self.transversal(i, p)).collect()).collect();
        fn rec(trans: &[Vec<Perm>], level: usize, prefix: &Perm, f: &mut dyn FnMut(&Perm)) {
            if level == 0 {
                f(prefix);
                return;
            }
            for u in &trans[level - 1] {
                let next = prefix.mul(u);
                rec(trans, level - 1, &next, f);
            }
        }
        rec(&trans, self.levels.len(), &Perm::identity(self.n), &mut f);
        Ok(())
    }

    /// All elements (only for small groups).
    pub fn elements(&self, cap: u64) -> Result<Vec<Perm>> {
        let mut v = Vec::new();
        self.for_each_element(cap, |g| v.push(g.clone()))?;
        Ok(v)
    }
}

pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// Derive an independent seed for a named task.
pub fn task_seed(seed: u64, task: &str) -> u64 {
    let mut h = seed ^ 0x9E3779B97F4A7C15;
    for b in task.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x100000001b3);
        h ^= h >> 29;
    }
    h
}

/// Stabilizer of `point`: generators and (for a complete BSGS) order.
pub fn stabilizer(n: usize, gens: &[Perm], point: u32, seed: u64) -> (Vec<Perm>, BigUint) {
    let opts = BsgsOptions { seed, base_prefix: vec![point], ..Default::default() };
    let b = Bsgs::new(n, gens, &opts).expect("no bound given");
    let stab = b.stabilizer_gens(1);
    let ord = b.order() / BigUint::from(b.orbit_lengths()[0]);
    (stab, ord)
}

/// A domain of canonical objects interned to dense ids.
#[derive(Clone, Debug)]
pub struct Domain<K: Hash + Eq + Clone> {
    pub items: Vec<K>,
    index: HashMap<K, u32>,
}

impl<K: Hash + Eq + Clone> Domain<K> {
    pub fn new() -> Self {
        Domain { items: Vec::new(), index: HashMap::new() }
    }

    pub fn from_items(items: Vec<K>) -> Result<Self> {
        let cap = domain_cap();
        if items.len() as u64 > cap {
            return Err(Error::DomainOverflow { size: items.len() as u64, cap });
        }
        let index = items.iter().enumerate().map(|(i, k)| (k.clone(), i as u32)).collect();
        Ok(Domain { items, index })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn id(&self, k: &K) -> Option<u32> {
        self.index.get(k).copied()
    }

    pub fn intern(&mut self, k: K) -> u32 {
        if let Some(&i) = self.index.get(&k) {
            return i;
        }
        let i = self.items.len() as u32;
        self.items.push(k.clone());
        self.index.insert(k, i);
        i
    }

    /// The permutation induced by a map on objects; errors if the map leaves the domain.
    pub fn induced(&self, act: impl Fn(&K) -> K) -> Result<Perm> {
        let mut img = Vec::with_capacity(self.items.len());
        for (i, k) in self.items.iter().enumerate() {
            let j = self.id(&act(k)).ok_or_else(|| Error::NotStable(format!("object {i} maps outside the domain")))?;
            img.push(j);
        }
        Perm::from_images(img)
    }

    /// Orbit closure of `seeds` under maps, interning new objects.
    pub fn closure(seeds: Vec<K>, maps: &[&dyn Fn(&K) -> K]) -> Result<Self> {
        let cap = domain_cap();
        let mut d = Domain::new();
        for s in seeds {
            d.intern(s);
        }
        let mut i = 0;
        while i < d.items.len() {
            let k = d.items[i].clone();
            for m in maps {
                d.intern(m(&k));
            }
            if d.items.len() as u64 > cap {
                return Err(Error::DomainOverflow { size: d.items.len() as u64, cap });
            }
            i += 1;
        }
        Ok(d)
    }
}

impl<K: Hash + Eq + Clone> Default for Domain<K> {
    fn default() -> Self {
        Self::new()
    }
}

const DUMP_MAGIC: u32 = 0x4746_4f44; // "GFOD"
const DUMP_VERSION: u32 = 1;

/// Write a sorted id array with a 16-byte header (magic, version, N, count).
pub fn write_orbit_dump(w: &mut impl Write, n: u32, ids: &[u32]) -> Result<()> {
    let mut sorted = ids.to_vec();
    sorted.sort_unstable();
    w.write_all(&DUMP_MAGIC.to_le_bytes())?;
    w.write_all(&DUMP_VERSION.to_le_bytes())?;
    w.write_all(&n.to_le_bytes())?;
    w.write_all(&(sorted.len() as u32).to_le_bytes())?;
    for x in sorted {
        w.write_all(&x.to_le_bytes())?;
    }
    Ok(())
}

pub fn read_orbit_dump(r: &mut impl Read) -> Result<(u32, Vec<u32>)> {
    let mut h = [0u8; 16];
    r.read_exact(&mut h)?;
    let word = |i: usize| u32::from_le_bytes(h[4 * i..4 * i + 4].try_into().unwrap());
    if word(0) != DUMP_MAGIC || word(1) != DUMP_VERSION {
        return Err(Error::Parse("not an orbit dump".into()));
    }
    let (n, count) = (word(2), word(3) as usize);
    let mut buf = vec![0u8; 4 * count];
    r.read_exact(&mut buf)?;
    let ids = buf.chunks(4).map(|c| u32::from_le_bytes(c.try_into().unwrap())).collect();
    Ok((n, ids))
}

/// Generators of Sym(n), Alt(n) and M11 on {0..n-1}.
pub fn symmetric_gens(n: usize) -> Vec<Perm> {
    if n < 2 {
        return vec![Perm::identity(n.max(1))];
    }
    let cycle: Vec<u32> = (1..=n as u32).collect();
    vec![Perm::from_cycles(n, &[&[1, 2]]), Perm::from_cycles(n, &[&cycle])]
}

pub fn alternating_gens(n: usize) -> Vec<Perm> {
    if n < 3 {
        return vec![Perm::identity(n.max(1))];
    }
    // 3-cycles (1 2 k) generate Alt(n)
    (3..=n as u32).map(|k| Perm::from_cycles(n, &[&[1, 2, k]])).collect()
}

pub fn m11_gens() -> Vec<Perm> {
    let a: Vec<u32> = (1..=11).collect();
    vec![Perm::from_cycles(11, &[&a]), Perm::from_cycles(11, &[&[3, 7, 11, 8], &[4, 10, 5, 6]])]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_basics() {
        let p = Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]);
        assert_eq!(p.order(), 5);
        assert!(p.pow(5).is_identity());
        assert!(p.mul(&p.inv()).is_identity());
        let t = Perm::from_cycles(5, &[&[1, 2]]);
        // left-to-right composition: 1 -t-> 2 -p-> 3
        assert_eq!(t.mul(&p).img(0), 2);
        assert_eq!(t.conj(&p), Perm::from_cycles(5, &[&[2, 3]]));
        assert_eq!(p.cycles_string(), "(1 2 3 4 5)");
    }

    #[test]
    fn semiregular_examples() {
        assert!(is_semiregular(&Perm::from_cycles(7, &[&[1, 2, 3, 4, 5, 6, 7]])));
        assert!(!is_semiregular(&Perm::from_cycles(3, &[&[1, 2]])));
        assert!(is_semiregular(&Perm::from_cycles(4, &[&[1, 2], &[3, 4]])));
    }

    #[test]
    fn small_orders() {
        assert_eq!(Bsgs::from_gens(5, &symmetric_gens(5)).order_u64(), Some(120));
        assert_eq!(Bsgs::from_gens(7, &alternating_gens(7)).order_u64(), Some(2520));
        let m11 = Bsgs::from_gens(11, &m11_gens());
        assert_eq!(m11.order_u64(), Some(7920));
        assert_eq!(m11.certificate, Certificate::SchreierVerified);
        assert!(!m11.contains(&Perm::from_cycles(11, &[&[1, 2]])));
    }

    #[test]
    fn stabilizer_orbit_product() {
        let (gens, ord) = stabilizer(5, &symmetric_gens(5), 2, 3);
        assert_eq!(ord, BigUint::from(24u32));
        assert!(gens.iter().all(|g| g.img(2) == 2));
    }

    #[test]
    fn enumeration_matches_order() {
        let b = Bsgs::from_gens(6, &symmetric_gens(6));
        let els = b.elements(1 << 21).unwrap();
        assert_eq!(els.len(), 720);
        let set: std::collections::HashSet<_> = els.iter().collect();
        assert_eq!(set.len(), 720);
        let c = Bsgs::from_gens(5, &[Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]])]);
        assert_eq!(c.elements(100).unwrap().len(), 5);
    }

    #[test]
    fn dump_roundtrip() {
        let mut buf = Vec::new();
        write_orbit_dump(&mut buf, 10, &[5, 1, 3]).unwrap();
        assert_eq!(buf.len(), 16 + 12);
        let (n, ids) = read_orbit_dump(&mut buf.as_slice()).unwrap();
        assert_eq!((n, ids), (10, vec![1, 3, 5]));
    }

    #[test]
    fn orbit_partition_lengths() {
        let g = Perm::from_cycles(6, &[&[1, 2, 3], &[4, 5]]);
        assert_eq!(orbit_lengths(&[g], 6), vec![1, 2, 3]);
    }
}
