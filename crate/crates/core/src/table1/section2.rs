//! Spin-module factorization of Ω₈⁺(4).
//!
//! Ω₈⁻(2) is built on its natural module V₂ = F₂⁸, lifted to the even
//! half-spin module S⁺ of the plus-type space V₂ ⊗ F₄, and its orbits on
//! the anisotropic 2-subspaces of S⁺ are counted — once as-is, once together
//! with a semilinear ψ that realizes the outer reflection automorphism.

use std::time::Instant;

use num_bigint::BigUint;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::{El, Field};
use crate::grpgen::{Elt, PointDomain, PointKind};
use crate::linalg::{dickson_invariant, reflection, ClassicalForm, FormKind, Mat, Semi};
use crate::normfact::PermGroup;
use crate::orderarith::{group_order, Family, Variant};
use crate::permgrp::{orbit_lengths, seeded_rng, task_seed, Perm};

use super::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Section2Status {
    Computed,
    /// domain far beyond desk scale; only the order arithmetic is recorded
    InconclusiveScale,
}

/// Orbit-length multiset as (length, multiplicity) pairs.
#[derive(Clone, Debug, Default, Serialize)]
pub struct OrbitSummary {
    pub group: String,
    pub lengths: Vec<(u64, u64)>,
}

impl OrbitSummary {
    fn new(group: &str, lens: &[u64]) -> OrbitSummary {
        let mut out: Vec<(u64, u64)> = Vec::new();
        for &l in lens {
            match out.last_mut() {
                Some((x, c)) if *x == l => *c += 1,
                _ => out.push((l, 1)),
            }
        }
        OrbitSummary { group: group.into(), lengths: out }
    }

    pub fn count(&self) -> u64 {
        self.lengths.iter().map(|p| p.1).sum()
    }

    pub fn total(&self) -> u64 {
        self.lengths.iter().map(|p| p.0 * p.1).sum()
    }
}

impl std::fmt::Display for OrbitSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .lengths
            .iter()
            .map(|(l, c)| if *c == 1 { l.to_string() } else { format!("{l}^{c}") })
            .collect();
        write!(f, "{}: [{}]", self.group, parts.join(", "))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Section2Report {
    pub q: u64,
    pub status: Section2Status,
    /// minus-type 2-subspaces predicted by the order quotient
    pub expected_domain: String,
    pub domain_size: u64,
    pub witness: OrbitSummary,
    pub augmented: OrbitSummary,
    /// Ω₈⁻(2) and ⟨Ω₈⁻(2), φ⟩ on the natural module, for contrast
    pub untwisted: Option<(OrbitSummary, OrbitSummary)>,
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl Section2Report {
    /// Both orbit claims hold and every auxiliary check passed.
    pub fn ok(&self) -> bool {
        self.status == Section2Status::Computed
            && self.witness.count() == 2
            && self.augmented.count() == 1
            && self.checks.iter().all(|c| c.ok)
    }
}

/// Number of minus-type 2-subspaces of the plus-type 8-space over F_q (q even).
pub fn minus_two_spaces(q: u64) -> Result<BigUint> {
    let o8 = group_order(Family::OmegaPlus, 8, q, Variant::Linear)?;
    let o6 = group_order(Family::OmegaMinus, 6, q, Variant::Linear)?;
    let o2 = group_order(Family::OmegaMinus, 2, q, Variant::Linear)?;
    Ok(o8 / (o6 * o2 * 2u32))
}

pub fn verify_section2(q: u64, seed: u64) -> Result<Section2Report> {
    let start = Instant::now();
    let expected = minus_two_spaces(q)?;
    match q {
        4 => {}
        16 => {
            return Ok(Section2Report {
                q,
                status: Section2Status::InconclusiveScale,
                expected_domain: expected.to_string(),
                domain_size: 0,
                witness: OrbitSummary::default(),
                augmented: OrbitSummary::default(),
                untwisted: None,
                checks: vec![Check::new("domain enumeration", false, format!("{expected} subspaces exceed desk scale"))],
                seconds: start.elapsed().as_secs_f64(),
            })
        }
        _ => return Err(Error::SideCondition(format!("spin reproduction needs q ∈ {{4, 16}}, got {q}"))),
    }
    let cap = crate::permgrp::domain_cap();
    if expected > BigUint::from(cap) {
        return Err(Error::DomainOverflow { size: expected.to_u64_digits().first().copied().unwrap_or(u64::MAX), cap });
    }
    let setup = SpinSetup::new(seed)?;
    let mut checks = setup.checks.clone();
    let f4 = &setup.f4;

    let dom = AnisoDomain::new(f4, &setup.qs);
    let n = dom.len();
    checks.push(Check::new("domain = order quotient", BigUint::from(n) == expected, format!("{n} vs {expected}")));

    let wit: Vec<Perm> = setup.spin.iter().map(|m| dom.perm(&Semi::linear(m.clone()))).collect::<Result<_>>()?;
    let psi = dom.perm(&setup.psi)?;
    let witness = OrbitSummary::new("Ω₈⁻(2) on S⁺", &orbit_lengths(&wit, n));
    let mut aug = wit.clone();
    aug.push(psi);
    let augmented = OrbitSummary::new("⟨Ω₈⁻(2), ψ⟩ on S⁺", &orbit_lengths(&aug, n));
    drop(aug);
    drop(wit);
    checks.push(Check::new("witness orbits sum to domain", witness.total() == n as u64, ""));

    // natural module: same group, same form coefficients, entrywise Frobenius
    let emb = f4.embedding(&setup.f2)?;
    let nat_form = ClassicalForm::from_quadratic(f4, FormKind::QuadPlus, setup.v2.quad.as_ref().expect("quadratic").map(|a| emb[a as usize]));
    let ndom = AnisoDomain::new(f4, &nat_form);
    let nat: Vec<Perm> =
        setup.natural.iter().map(|m| ndom.perm(&Semi::linear(m.map(|a| emb[a as usize])))).collect::<Result<_>>()?;
    let nw = OrbitSummary::new("Ω₈⁻(2) on V⊗F₄", &orbit_lengths(&nat, ndom.len()));
    let mut nat_aug = nat;
    nat_aug.push(ndom.perm(&Semi::frobenius(8, 1))?);
    let na = OrbitSummary::new("⟨Ω₈⁻(2), φ⟩ on V⊗F₄", &orbit_lengths(&nat_aug, ndom.len()));
    checks.push(Check::new("natural domain size", ndom.len() == n, format!("{}", ndom.len())));

    Ok(Section2Report {
        q,
        status: Section2Status::Computed,
        expected_domain: expected.to_string(),
        domain_size: n as u64,
        witness,
        augmented,
        untwisted: Some((nw, na)),
        checks,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Ω₈⁻(2) generators on V₂ and S⁺, the invariant form on S⁺ and ψ.
pub struct SpinSetup {
    pub f2: Field,
    pub f4: Field,
    pub v2: ClassicalForm,
    pub natural: Vec<Mat>,
    /// 8×8 over F₄, on the even subsets of {1,2,3,4}
    pub spin: Vec<Mat>,
    pub qs: ClassicalForm,
    pub psi: Semi,
    pub checks: Vec<Check>,
}

/// Subsets of {0,1,2,3} of even size, indexing the basis of S⁺.
const EVEN: [usize; 8] = [0b0000, 0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100, 0b1111];

impl SpinSetup {
    pub fn new(seed: u64) -> Result<SpinSetup> {
        let f2 = Field::from_order(2)?;
        let f4 = Field::from_order(4)?;
        let emb = f4.embedding(&f2)?;
        let v2 = ClassicalForm::quadratic(&f2, FormKind::QuadMinus, 8, 0);
        let nonsing: Vec<Vec<El>> = crate::linalg::all_vectors(2, 8).filter(|v| v2.quad_value(&f2, v) != 0).collect();
        let want = group_order(Family::OmegaMinus, 8, 2, Variant::Linear)?;
        let nd = PointDomain::new(&f2, 8, PointKind::Singular, Some(&v2))?;
        let mut checks = Vec::new();
        // random reflection pairs until the natural image has the full order
        let mut found = None;
        for attempt in 0..8u64 {
            let mut rng = seeded_rng(task_seed(seed.wrapping_add(attempt), "section2"));
            let pairs: Vec<(Vec<El>, Vec<El>)> = (0..4)
                .map(|_| {
                    let a = nonsing[rng.gen_range(0..nonsing.len())].clone();
                    let b = nonsing[rng.gen_range(0..nonsing.len())].clone();
                    (a, b)
                })
                .collect();
            let natural: Vec<Mat> =
                pairs.iter().map(|(a, b)| reflection(&f2, &v2, b).mul(&f2, &reflection(&f2, &v2, a))).collect();
            let np = nd.perms(&f2, &natural.iter().cloned().map(Elt::mat).collect::<Vec<_>>())?;
            let ng = PermGroup::new("Ω₈⁻(2)", nd.len(), np, Some(want.clone()), seed)?;
            if ng.order() == want {
                found = Some((pairs, natural));
                break;
            }
        }
        let (pairs, natural) = found.ok_or_else(|| Error::Form("no generating reflection pairs for Ω₈⁻(2)".into()))?;
        checks.push(Check::new(format!("|Ω₈⁻(2)| = {want} on V₂"), true, format!("{} singular points", nd.len())));
        checks.push(Check::new(
            "natural generators preserve Q",
            natural.iter().all(|m| v2.is_isometry_mat(&f2, m) && dickson_invariant(&f2, m) == 0),
            "",
        ));
        let spin: Vec<Mat> = pairs.iter().map(|(a, b)| spin_pair(&f4, &emb, a, b)).collect();
        let qs = invariant_quadratic(&f4, &spin)?;
        checks.push(Check::new("S⁺ form is plus type", classify_plus(&f4, &qs), ""));

        // the spin image is faithful: same order on the singular points of S⁺
        let sd = PointDomain::new(&f4, 8, PointKind::Singular, Some(&qs))?;
        let sp = sd.perms(&f4, &spin.iter().cloned().map(Elt::mat).collect::<Vec<_>>())?;
        let sg = PermGroup::new("Ω₈⁻(2) on S⁺", sd.len(), sp, Some(want.clone()), seed)?;
        checks.push(Check::new(
            format!("spin image order on {} singular points", sd.len()),
            sg.order() == want,
            format!("{}", sg.order()),
        ));

        let w: Vec<El> = (0..8).map(|i| (i == 6) as El).collect();
        let rw = reflection(&f2, &v2, &w);
        let twisted: Vec<Mat> = pairs
            .iter()
            .map(|(a, b)| spin_pair(&f4, &emb, &crate::linalg::vec_mat(&f2, a, &rw), &crate::linalg::vec_mat(&f2, b, &rw)))
            .collect();
        let m = frobenius_intertwiner(&f4, &spin, &twisted)?;
        // scale so that ψ is a semi-isometry of Q_S
        let lam = qs
            .similarity_factor(&f4, &Semi { e: 0, m: m.clone() })
            .ok_or_else(|| Error::Form("ψ is not a similitude of the spin form".into()))?;
        let mu = f4.sqrt(f4.inv(lam)).expect("characteristic 2: every element is a square");
        let m = m.scale(&f4, mu);
        let psi = Semi { e: 1, m: m.clone() };
        checks.push(Check::new("ψ preserves Q_S", qs.similarity_factor(&f4, &Semi { e: 0, m: m.clone() }) == Some(1), ""));
        checks.push(Check::new("ψ ∈ Ω·φ (Dickson invariant 0)", dickson_invariant(&f4, &m) == 0, ""));
        // ψ normalizes the spin image
        let pp = sd.perm(&f4, &Elt::semi(psi.clone()))?;
        let norm = sg.gens.iter().all(|g| sg.bsgs.contains(&g.conj(&pp)));
        checks.push(Check::new("ψ normalizes the spin image", norm, ""));
        let in_x = sg.bsgs.contains(&pp);
        checks.push(Check::new("ψ acts outside the spin image", !in_x, ""));

        Ok(SpinSetup { f2, f4, v2, natural, spin, qs, psi, checks })
    }
}

/// Coordinates of v ∈ V₂ in the F₄ hyperbolic basis e₁,e₂,e₃,u | f₁,f₂,f₃,u'
/// where u = w₁ + ωw₂ and u' = w₁ + ω²w₂.
fn hyperbolic(f4: &Field, emb: &[El], v: &[El]) -> ([El; 4], [El; 4]) {
    let w = f4.gen();
    let w2 = f4.mul(w, w);
    let (a, b) = (emb[v[6] as usize], emb[v[7] as usize]);
    let mut x = [0; 4];
    let mut y = [0; 4];
    for i in 0..3 {
        x[i] = emb[v[i] as usize];
        y[i] = emb[v[3 + i] as usize];
    }
    x[3] = f4.add(f4.mul(a, w2), b);
    y[3] = f4.add(f4.mul(a, w), b);
    (x, y)
}

/// Row-convention matrix of Clifford multiplication by v on Λ(W), 16×16:
/// W acts by wedge, W' by contraction (signs vanish in characteristic 2).
pub fn clifford(f4: &Field, emb: &[El], v: &[El]) -> Mat {
    let (x, y) = hyperbolic(f4, emb, v);
    let mut m = Mat::zero(16, 16);
    for s in 0..16usize {
        for i in 0..4 {
            let bit = 1 << i;
            if s & bit == 0 {
                m.set(s, s | bit, f4.add(m.at(s, s | bit), x[i]));
            } else {
                m.set(s, s ^ bit, f4.add(m.at(s, s ^ bit), y[i]));
            }
        }
    }
    m
}

/// Spin image of r_a ∘ r_b restricted to the even half-spin module.
fn spin_pair(f4: &Field, emb: &[El], a: &[El], b: &[El]) -> Mat {
    let full = clifford(f4, emb, b).mul(f4, &clifford(f4, emb, a));
    let mut m = Mat::zero(8, 8);
    for (i, &s) in EVEN.iter().enumerate() {
        for (j, &t) in EVEN.iter().enumerate() {
            m.set(i, j, full.at(s, t));
        }
    }
    m
}

/// The unique (up to scalar) quadratic form invariant under all gens.
fn invariant_quadratic(f: &Field, gens: &[Mat]) -> Result<ClassicalForm> {
    let n = 8;
    let idx: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let k = idx.len();
    let reduce = |c: &Mat| -> Vec<El> {
        idx.iter().map(|&(i, j)| if i == j { c.at(i, i) } else { f.add(c.at(i, j), c.at(j, i)) }).collect()
    };
    let mut rows: Vec<Vec<El>> = Vec::new();
    for g in gens {
        // column u: reduce(g C_u gᵀ) - C_u
        let mut cols = Vec::with_capacity(k);
        for (u, &(i, j)) in idx.iter().enumerate() {
            let mut c = Mat::zero(n, n);
            c.set(i, j, 1);
            let mut col = reduce(&g.mul(f, &c).mul(f, &g.transpose()));
            col[u] = f.sub(col[u], 1);
            cols.push(col);
        }
        for r in 0..k {
            rows.push((0..k).map(|u| cols[u][r]).collect());
        }
    }
    let ns = Mat::from_rows(&rows).nullspace(f);
    if ns.rows != 1 {
        return Err(Error::Form(format!("invariant quadratic forms span dimension {}", ns.rows)));
    }
    let mut c = Mat::zero(n, n);
    for (u, &(i, j)) in idx.iter().enumerate() {
        c.set(i, j, ns.at(0, u));
    }
    Ok(ClassicalForm::from_quadratic(f, FormKind::QuadPlus, c))
}

/// Nondegenerate with a totally singular 4-space: count singular points.
fn classify_plus(f: &Field, form: &ClassicalForm) -> bool {
    let q = f.order() as u64;
    let sing = crate::linalg::projective_points(f, 8).iter().filter(|v| form.quad_value(f, v) == 0).count() as u64;
    // (q⁴ - 1)(q³ + 1)/(q - 1) singular points for plus type
    form.gram.rank(f) == 8 && sing == (q.pow(4) - 1) * (q.pow(3) + 1) / (q - 1)
}

/// Solve φ(Aᵢ)·M = M·Bᵢ for all i; the solution space must be 1-dimensional.
fn frobenius_intertwiner(f: &Field, a: &[Mat], b: &[Mat]) -> Result<Mat> {
    let n = 8;
    let mut rows = Vec::new();
    for (ai, bi) in a.iter().zip(b) {
        let fa = ai.frob(f, 1);
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![0 as El; n * n];
                for k in 0..n {
                    row[k * n + j] = f.add(row[k * n + j], fa.at(i, k));
                    row[i * n + k] = f.sub(row[i * n + k], bi.at(k, j));
                }
                rows.push(row);
            }
        }
    }
    let ns = Mat::from_rows(&rows).nullspace(f);
    if ns.rows != 1 {
        return Err(Error::Form(format!("ψ solution space has dimension {}", ns.rows)));
    }
    let m = Mat::from_rows(&(0..n).map(|i| ns.row(0)[i * n..(i + 1) * n].to_vec()).collect::<Vec<_>>());
    m.inverse(f)?;
    Ok(m)
}

/// Anisotropic 2-subspaces of F₄⁸ under a quadratic form, keyed by their
/// reduced echelon basis packed two bits per entry.
pub struct AnisoDomain {
    keys: Vec<u32>,
    add: [[u8; 4]; 4],
    mul: [[u8; 4]; 4],
}

impl AnisoDomain {
    pub fn new(f: &Field, form: &ClassicalForm) -> AnisoDomain {
        assert_eq!(f.order(), 4);
        let mut add = [[0u8; 4]; 4];
        let mut mul = [[0u8; 4]; 4];
        for a in 0..4 {
            for b in 0..4 {
                add[a][b] = f.add(a as El, b as El) as u8;
                mul[a][b] = f.mul(a as El, b as El) as u8;
            }
        }
        let quad = form.quad.as_ref().expect("quadratic form");
        let c: Vec<u8> = quad.d.iter().map(|&x| x as u8).collect();
        let g: Vec<u8> = form.gram.d.iter().map(|&x| x as u8).collect();
        let qv = |v: &[u8; 8]| {
            let mut s = 0u8;
            for i in 0..8 {
                if v[i] == 0 {
                    continue;
                }
                for j in i..8 {
                    let t = c[i * 8 + j];
                    if t != 0 && v[j] != 0 {
                        s ^= mul[mul[t as usize][v[i] as usize] as usize][v[j] as usize];
                    }
                }
            }
            s
        };
        let bil = |u: &[u8; 8], v: &[u8; 8]| {
            let mut s = 0u8;
            for i in 0..8 {
                if u[i] == 0 {
                    continue;
                }
                for j in 0..8 {
                    let t = g[i * 8 + j];
                    if t != 0 && v[j] != 0 {
                        s ^= mul[mul[t as usize][u[i] as usize] as usize][v[j] as usize];
                    }
                }
            }
            s
        };
        debug_assert!((0..4).all(|a| (0..4).all(|b| add[a][b] as usize == a ^ b)));
        let mut keys = Vec::new();
        for p1 in 0..8 {
            for p2 in p1 + 1..8 {
                let free1: Vec<usize> = (p1 + 1..8).filter(|&j| j != p2).collect();
                let free2: Vec<usize> = (p2 + 1..8).collect();
                for c1 in 0..1u32 << (2 * free1.len()) {
                    let mut u = [0u8; 8];
                    u[p1] = 1;
                    for (k, &j) in free1.iter().enumerate() {
                        u[j] = ((c1 >> (2 * k)) & 3) as u8;
                    }
                    let qu = qv(&u);
                    if qu == 0 {
                        continue;
                    }
                    for c2 in 0..1u32 << (2 * free2.len()) {
                        let mut v = [0u8; 8];
                        v[p2] = 1;
                        for (k, &j) in free2.iter().enumerate() {
                            v[j] = ((c2 >> (2 * k)) & 3) as u8;
                        }
                        let qw = qv(&v);
                        if qw == 0 {
                            continue;
                        }
                        let b = bil(&u, &v);
                        // Q(v + t·u) = Q(v) + t·B(u,v) + t²·Q(u)
                        let aniso = (1..4usize).all(|t| qw ^ mul[t][b as usize] ^ mul[mul[t][t] as usize][qu as usize] != 0);
                        if aniso {
                            keys.push(pack(&u, &v));
                        }
                    }
                }
            }
        }
        keys.sort_unstable();
        AnisoDomain { keys, add, mul }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Permutation induced by a semilinear map v ↦ φ^e(v)·M.
    pub fn perm(&self, s: &Semi) -> Result<Perm> {
        let m: Vec<u8> = s.m.d.iter().map(|&x| x as u8).collect();
        let frob = |a: u8| -> u8 {
            let mut x = a;
            for _ in 0..s.e % 2 {
                x = self.mul[x as usize][x as usize];
            }
            x
        };
        let mut img = Vec::with_capacity(self.keys.len());
        for &k in &self.keys {
            let (u, v) = unpack(k);
            let mut ru = [0u8; 8];
            let mut rv = [0u8; 8];
            for i in 0..8 {
                let (a, b) = (frob(u[i]), frob(v[i]));
                for j in 0..8 {
                    let t = m[i * 8 + j] as usize;
                    ru[j] = self.add[ru[j] as usize][self.mul[a as usize][t] as usize];
                    rv[j] = self.add[rv[j] as usize][self.mul[b as usize][t] as usize];
                }
            }
            let key = self.echelon(ru, rv);
            let id = self.keys.binary_search(&key).map_err(|_| Error::NotStable("anisotropic 2-space".into()))?;
            img.push(id as u32);
        }
        Perm::from_images(img)
    }

    fn echelon(&self, mut u: [u8; 8], mut v: [u8; 8]) -> u32 {
        let inv_of = |a: u8| (1..4u8).find(|&b| self.mul[a as usize][b as usize] == 1).unwrap_or(0);
        let p1 = (0..8).find(|&j| u[j] != 0 || v[j] != 0).expect("rank 2");
        if u[p1] == 0 {
            std::mem::swap(&mut u, &mut v);
        }
        let s = inv_of(u[p1]);
        u = u.map(|a| self.mul[a as usize][s as usize]);
        let t = v[p1];
        for j in 0..8 {
            v[j] ^= self.mul[t as usize][u[j] as usize];
        }
        let p2 = (0..8).find(|&j| v[j] != 0).expect("rank 2");
        let s = inv_of(v[p2]);
        v = v.map(|a| self.mul[a as usize][s as usize]);
        let t = u[p2];
        for j in 0..8 {
            u[j] ^= self.mul[t as usize][v[j] as usize];
        }
        pack(&u, &v)
    }
}

fn pack(u: &[u8; 8], v: &[u8; 8]) -> u32 {
    let mut k = 0u32;
    for j in 0..8 {
        k |= (u[j] as u32) << (2 * j);
        k |= (v[j] as u32) << (16 + 2 * j);
    }
    k
}

fn unpack(k: u32) -> ([u8; 8], [u8; 8]) {
    let mut u = [0u8; 8];
    let mut v = [0u8; 8];
    for j in 0..8 {
        u[j] = ((k >> (2 * j)) & 3) as u8;
        v[j] = ((k >> (16 + 2 * j)) & 3) as u8;
    }
    (u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_squares_to_quadratic_value() {
        let f2 = Field::from_order(2).unwrap();
        let f4 = Field::from_order(4).unwrap();
        let emb = f4.embedding(&f2).unwrap();
        let v2 = ClassicalForm::quadratic(&f2, FormKind::QuadMinus, 8, 0);
        for v in crate::linalg::all_vectors(2, 8) {
            let r = clifford(&f4, &emb, &v);
            let qv = emb[v2.quad_value(&f2, &v) as usize];
            assert_eq!(r.mul(&f4, &r), Mat::identity(16).scale(&f4, qv));
        }
    }

    #[test]
    fn pack_roundtrip() {
        let u = [1, 0, 2, 3, 0, 0, 1, 2];
        let v = [0, 1, 3, 3, 2, 1, 0, 0];
        assert_eq!(unpack(pack(&u, &v)), (u, v));
    }

    #[test]
    fn quotient_count_matches_known_value() {
        assert_eq!(minus_two_spaces(4).unwrap(), BigUint::from(6_580_224u32));
    }

    #[test]
    fn sixteen_is_inconclusive_by_scale() {
        let r = verify_section2(16, 1).unwrap();
        assert_eq!(r.status, Section2Status::InconclusiveScale);
        assert!(!r.ok());
    }
}
