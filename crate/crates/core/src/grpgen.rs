//! Generators for classical groups and their extensions, the special elements
//! the scenarios need, projective action domains, and subgroup embeddings.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::error::{Error, Result};
use crate::ff::{El, Field};
use crate::linalg::{
    normalize, projective_points, reflection, vec_mat, ClassicalForm, FormKind, Mat, ScalarRestriction, Semi,
};
use crate::orderarith::{group_order, Family, Variant};
use crate::permgrp::{domain_cap, seeded_rng, Bsgs, BsgsOptions, Certificate, Perm};

/// A semilinear map, optionally composed with the point/hyperplane swap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Elt {
    pub s: Semi,
    pub dual: bool,
}

impl Elt {
    pub fn mat(m: Mat) -> Elt {
        Elt { s: Semi::linear(m), dual: false }
    }
    pub fn semi(s: Semi) -> Elt {
        Elt { s, dual: false }
    }
    /// The correlation point ⟨v⟩ ↦ hyperplane with normal φ^e(v)·M.
    pub fn correlation(s: Semi) -> Elt {
        Elt { s, dual: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ext {
    Diagonal,
    Field(u32),
    Graph,
}

/// "family:n:q[:ext,…]" e.g. "OmegaMinus:10:2:graph" or "SL:4:3:graph,field1".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
    pub q: u64,
    pub ext: Vec<Ext>,
}

impl FromStr for GroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() < 2 {
            return Err(Error::Parse(format!("group spec {s:?}")));
        }
        let family: Family = parts[0].parse()?;
        let n = parts[1].parse().map_err(|_| Error::Parse(s.into()))?;
        let q = if parts.len() > 2 { parts[2].parse().map_err(|_| Error::Parse(s.into()))? } else { 0 };
        let mut ext = Vec::new();
        if parts.len() > 3 {
            for e in parts[3].split(',').filter(|e| !e.is_empty()) {
                ext.push(match e {
                    "diagonal" => Ext::Diagonal,
                    "graph" => Ext::Graph,
                    "field" => Ext::Field(1),
                    _ if e.starts_with("field") => {
                        Ext::Field(e[5..].parse().map_err(|_| Error::Parse(format!("extension {e}")))?)
                    }
                    _ => return Err(Error::Parse(format!("extension {e}"))),
                });
            }
        }
        Ok(GroupSpec { family, n, q, ext })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.family, self.n, self.q)?;
        if !self.ext.is_empty() {
            let e: Vec<String> = self
                .ext
                .iter()
                .map(|e| match e {
                    Ext::Diagonal => "diagonal".to_string(),
                    Ext::Graph => "graph".to_string(),
                    Ext::Field(k) => format!("field{k}"),
                })
                .collect();
            write!(f, ":{}", e.join(","))?;
        }
        Ok(())
    }
}

/// A group generated by semilinear maps (and correlations) on GF(q₀)^n.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub label: String,
    pub field: Field,
    pub n: usize,
    pub form: Option<ClassicalForm>,
    pub gens: Vec<Elt>,
    /// Order of the group induced on projective points (or points ∪ hyperplanes).
    pub claimed_order: Option<BigUint>,
}

impl MatrixGroup {
    /// Assert every generator preserves the attached form (up to the field
    /// automorphism and, for similitudes, a scalar when `similitudes` is set).
    pub fn check_forms(&self, similitudes: bool) -> Result<()> {
        let Some(form) = &self.form else { return Ok(()) };
        for (i, g) in self.gens.iter().enumerate() {
            if g.dual {
                continue;
            }
            let ok = match form.similarity_factor(&self.field, &g.s) {
                Some(1) => true,
                Some(_) => similitudes,
                None => false,
            };
            if !ok {
                return Err(Error::Form(format!("{}: generator {i} does not preserve the form", self.label)));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointKind {
    All,
    /// points followed by hyperplanes (normals)
    PointsAndHyperplanes,
    /// singular (quadratic) or isotropic (hermitian) points
    Singular,
    Nonsingular,
    /// nonsingular points ⟨v⟩ with Q(v) in the square class of `value`
    NonsingularClass(El),
}

/// Projective points of GF(q)^n (optionally with hyperplanes) with O(1) lookup.
#[derive(Clone, Debug)]
pub struct PointDomain {
    pub kind: PointKind,
    pub n: usize,
    pub q: u32,
    pub points: Vec<Vec<El>>,
    lookup: Vec<u32>,
    /// number of point objects (hyperplanes follow in the dual domain)
    pub npoints: usize,
}

const NONE: u32 = u32::MAX;

pub fn pack(q: u32, v: &[El]) -> u64 {
    v.iter().rev().fold(0u64, |a, &x| a * q as u64 + x as u64)
}

impl PointDomain {
    pub fn new(f: &Field, n: usize, kind: PointKind, form: Option<&ClassicalForm>) -> Result<PointDomain> {
        let q = f.order();
        let total = (q as u64).pow(n as u32);
        if total > 1 << 28 {
            return Err(Error::DomainOverflow { size: total, cap: 1 << 28 });
        }
        let need_form = || form.ok_or_else(|| Error::Form("domain needs a form".into()));
        let all = projective_points(f, n);
        let points: Vec<Vec<El>> = match &kind {
            PointKind::All | PointKind::PointsAndHyperplanes => all,
            PointKind::Singular => {
                let fm = need_form()?;
                all.into_iter().filter(|v| fm.is_singular(f, v)).collect()
            }
            PointKind::Nonsingular => {
                let fm = need_form()?;
                all.into_iter().filter(|v| !fm.is_singular(f, v)).collect()
            }
            PointKind::NonsingularClass(c) => {
                let fm = need_form()?;
                let want = f.is_square(*c);
                all.into_iter()
                    .filter(|v| {
                        let x = fm.quad_value(f, v);
                        x != 0 && f.is_square(x) == want
                    })
                    .collect()
            }
        };
        let npoints = points.len();
        let size = if kind == PointKind::PointsAndHyperplanes { 2 * npoints } else { npoints } as u64;
        if size > domain_cap() {
            return Err(Error::DomainOverflow { size, cap: domain_cap() });
        }
        let mut lookup = vec![NONE; total as usize];
        for (i, v) in points.iter().enumerate() {
            lookup[pack(q, v) as usize] = i as u32;
        }
        Ok(PointDomain { kind, n, q, points, lookup, npoints })
    }

    pub fn len(&self) -> usize {
        if self.kind == PointKind::PointsAndHyperplanes {
            2 * self.npoints
        } else {
            self.npoints
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Id of the point spanned by `v` (normalized internally).
    pub fn id(&self, f: &Field, v: &[El]) -> Option<u32> {
        let mut w = v.to_vec();
        if !normalize(f, &mut w) {
            return None;
        }
        let i = self.lookup[pack(self.q, &w) as usize];
        (i != NONE).then_some(i)
    }

    pub fn hyperplane_id(&self, f: &Field, normal: &[El]) -> Option<u32> {
        self.id(f, normal).map(|i| i + self.npoints as u32)
    }

    /// Permutation induced by an element.
    pub fn perm(&self, f: &Field, g: &Elt) -> Result<Perm> {
        let dual_domain = self.kind == PointKind::PointsAndHyperplanes;
        if g.dual && !dual_domain {
            return Err(Error::NotStable("correlation on a point-only domain".into()));
        }
        let np = self.npoints as u32;
        let mut img = vec![0u32; self.len()];
        let m = &g.s.m;
        let frob = |v: &[El]| -> Vec<El> {
            if g.s.e == 0 {
                v.to_vec()
            } else {
                v.iter().map(|&a| f.frob(a, g.s.e)).collect()
            }
        };
        for (i, v) in self.points.iter().enumerate() {
            let w = vec_mat(f, &frob(v), m);
            let j = self.id(f, &w).ok_or_else(|| Error::NotStable(format!("point {i} leaves the domain")))?;
            img[i] = if g.dual { j + np } else { j };
        }
        if dual_domain {
            let mit = m.inverse(f)?.transpose();
            for (i, h) in self.points.iter().enumerate() {
                let w = vec_mat(f, &frob(h), &mit);
                let j = self.id(f, &w).ok_or_else(|| Error::NotStable(format!("hyperplane {i} leaves the domain")))?;
                img[i + self.npoints] = if g.dual { j } else { j + np };
            }
        }
        Perm::from_images(img)
    }

    pub fn perms(&self, f: &Field, gens: &[Elt]) -> Result<Vec<Perm>> {
        gens.iter().map(|g| self.perm(f, g)).collect()
    }
}

/// Matrix of a linear map given by its values on the standard basis.
pub fn mat_from_fn(n: usize, f: impl Fn(&[El]) -> Vec<El>) -> Mat {
    let rows: Vec<Vec<El>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            f(&e)
        })
        .collect();
    Mat::from_rows(&rows)
}

/// x ↦ x + c·B(x, v)·v for the alternating form.
pub fn symplectic_transvection(f: &Field, form: &ClassicalForm, v: &[El], c: El) -> Mat {
    mat_from_fn(form.n, |x| {
        let s = f.mul(c, form.bilinear(f, x, v));
        x.iter().zip(v).map(|(&a, &b)| f.add(a, f.mul(s, b))).collect()
    })
}

/// Elementary transvection I + t·E_ij (row convention: e_i ↦ e_i + t e_j).
pub fn elementary(n: usize, i: usize, j: usize, t: El) -> Mat {
    let mut m = Mat::identity(n);
    m.set(i, j, t);
    m
}

/// Unitary quasi-reflection x ↦ x + (ν − 1)·h(x,v)/h(v,v)·v.
pub fn quasi_reflection(f: &Field, form: &ClassicalForm, v: &[El], nu: El) -> Result<Mat> {
    let hv = form.bilinear(f, v, v);
    if hv == 0 {
        return Err(Error::Form("quasi-reflection needs a non-isotropic vector".into()));
    }
    let c = f.div(f.sub(nu, 1), hv);
    Ok(mat_from_fn(form.n, |x| {
        let s = f.mul(c, form.bilinear(f, x, v));
        x.iter().zip(v).map(|(&a, &b)| f.add(a, f.mul(s, b))).collect()
    }))
}

/// Unitary transvection x ↦ x + c·h(x,v)·v, v isotropic, c + σ(c) = 0.
pub fn unitary_transvection(f: &Field, form: &ClassicalForm, v: &[El], c: El) -> Mat {
    mat_from_fn(form.n, |x| {
        let s = f.mul(c, form.bilinear(f, x, v));
        x.iter().zip(v).map(|(&a, &b)| f.add(a, f.mul(s, b))).collect()
    })
}

/// Companion matrix of the monic polynomial with low coefficients `c`
/// (row convention: e_i ↦ e_{i+1}, e_{n-1} ↦ −Σ c_j e_j).
pub fn companion(f: &Field, c: &[El]) -> Mat {
    let n = c.len();
    let mut m = Mat::zero(n, n);
    for i in 0..n - 1 {
        m.set(i, i + 1, 1);
    }
    for (j, &cj) in c.iter().enumerate() {
        m.set(n - 1, j, f.neg(cj));
    }
    m
}

/// Singer cycle: companion matrix of the least primitive polynomial of degree n.
pub fn singer_element(f: &Field, n: usize) -> Mat {
    let q = f.order() as u64;
    let target = q.pow(n as u32) - 1;
    for code in 0..q.pow(n as u32) {
        let c: Vec<El> = (0..n).map(|i| ((code / q.pow(i as u32)) % q) as El).collect();
        if c[0] == 0 {
            continue;
        }
        let m = companion(f, &c);
        if m.order(f, target) == Some(target) {
            return m;
        }
    }
    unreachable!("primitive polynomials exist")
}

fn norm_one_elements(f: &Field) -> Vec<El> {
    // ν^(q+1) = 1 where q² = |f|
    let q0 = f.char().pow(f.degree() / 2) as i64;
    f.elements().filter(|&a| a != 0 && f.pow(a, q0 + 1) == 1).collect()
}

fn trace_zero_elements(f: &Field) -> Vec<El> {
    let h = f.degree() / 2;
    f.elements().filter(|&a| a != 0 && f.add(a, f.frob(a, h)) == 0).collect()
}

fn random_vector(f: &Field, n: usize, rng: &mut impl Rng) -> Vec<El> {
    (0..n).map(|_| rng.gen_range(0..f.order()) as El).collect()
}

/// Generators of SL_n(q) (GL_n(q) when `general`).
pub fn sl_gens(f: &Field, n: usize, general: bool) -> Vec<Mat> {
    let a = f.gen();
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(elementary(n, 0, 1, 1));
        let mut d = vec![1; n];
        d[0] = a;
        d[1] = f.inv(a);
        gens.push(Mat::diag(&d));
        // signed n-cycle e_i ↦ e_{i+1}, e_{n-1} ↦ ±e_0 with determinant 1
        let mut c = Mat::zero(n, n);
        for i in 0..n - 1 {
            c.set(i, i + 1, 1);
        }
        c.set(n - 1, 0, if n % 2 == 0 { f.neg(1) } else { 1 });
        gens.push(c);
    }
    if general || n == 1 {
        let mut d = vec![1; n];
        d[0] = a;
        gens.push(Mat::diag(&d));
    }
    gens.retain(|g| !g.is_identity());
    gens
}

/// Generators of Sp_{2m}(q) for the standard alternating form.
pub fn sp_gens(f: &Field, n: usize) -> Vec<Mat> {
    let m = n / 2;
    let form = ClassicalForm::symplectic(f, n);
    let mut gens = Vec::new();
    for a in sl_gens(f, m, true) {
        let ait = a.inverse(f).expect("invertible").transpose();
        gens.push(Mat::block_diag(&[&a, &ait]));
    }
    let mut e1 = vec![0; n];
    e1[0] = 1;
    gens.push(symplectic_transvection(f, &form, &e1, 1));
    let mut w = Mat::identity(n);
    w.set(0, 0, 0);
    w.set(m, m, 0);
    w.set(0, m, 1);
    w.set(m, 0, f.neg(1));
    gens.push(w);
    gens.retain(|g| !g.is_identity());
    gens
}

/// Similitude of the standard alternating form with multiplier α.
pub fn sp_similitude(n: usize, mult: El) -> Mat {
    let m = n / 2;
    let mut d = vec![1; n];
    for x in d.iter_mut().skip(m) {
        *x = mult;
    }
    Mat::diag(&d)
}

/// Random products of reflection pairs inside Ω (or SO / GO) of a quadratic form.
pub fn orthogonal_gens(f: &Field, form: &ClassicalForm, which: OrthoVariant, k: usize, rng: &mut impl Rng) -> Vec<Mat> {
    let n = form.n;
    let odd = f.char() != 2;
    let mut gens = Vec::new();
    let nonsing = |rng: &mut dyn rand::RngCore, want_square: Option<bool>| loop {
        let v: Vec<El> = (0..n).map(|_| (rng.next_u32() % f.order()) as El).collect();
        let qv = form.quad_value(f, &v);
        if qv == 0 {
            continue;
        }
        if let Some(s) = want_square {
            if odd && f.is_square(qv) != s {
                continue;
            }
        }
        return v;
    };
    for i in 0..k {
        // alternate square/nonsquare classes so the generated group is not
        // trapped in a proper subgroup
        let cls = if odd { Some(i % 2 == 0) } else { None };
        let a = nonsing(rng, cls);
        let b = nonsing(rng, cls);
        gens.push(reflection(f, form, &b).mul(f, &reflection(f, form, &a)));
    }
    match which {
        OrthoVariant::Omega => {}
        OrthoVariant::SO => {
            if odd {
                let a = nonsing(rng, Some(true));
                let b = nonsing(rng, Some(false));
                gens.push(reflection(f, form, &b).mul(f, &reflection(f, form, &a)));
            }
        }
        OrthoVariant::GO => {
            let a = nonsing(rng, Some(true));
            gens.push(reflection(f, form, &a));
        }
    }
    gens
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthoVariant {
    Omega,
    SO,
    GO,
}

/// Random unitary transvections (SU) plus, for GU, one quasi-reflection.
pub fn unitary_gens(f: &Field, form: &ClassicalForm, general: bool, k: usize, rng: &mut impl Rng) -> Vec<Mat> {
    let n = form.n;
    let tz = trace_zero_elements(f);
    let mut gens = Vec::new();
    while gens.len() < k {
        let v = random_vector(f, n, rng);
        if v.iter().all(|&x| x == 0) || form.bilinear(f, &v, &v) != 0 {
            continue;
        }
        let c = tz[rng.gen_range(0..tz.len())];
        gens.push(unitary_transvection(f, form, &v, c));
    }
    if n <= 3 {
        // SU_3 needs more than transvection conjugates in a few small cases;
        // add determinant-one products of quasi-reflections
        let nus = norm_one_elements(f);
        let nu = nus.iter().copied().find(|&x| x != 1).unwrap_or(1);
        for _ in 0..2 {
            let (a, b) = loop {
                let a = random_vector(f, n, rng);
                let b = random_vector(f, n, rng);
                if form.bilinear(f, &a, &a) != 0 && form.bilinear(f, &b, &b) != 0 {
                    break (a, b);
                }
            };
            let ra = quasi_reflection(f, form, &a, nu).expect("nonisotropic");
            let rb = quasi_reflection(f, form, &b, f.inv(nu)).expect("nonisotropic");
            gens.push(ra.mul(f, &rb));
        }
    }
    if general {
        let nus = norm_one_elements(f);
        let nu = *nus.iter().max_by_key(|&&x| f.elem_order(x)).expect("norm one elements");
        let v = loop {
            let v = random_vector(f, n, rng);
            if form.bilinear(f, &v, &v) != 0 {
                break v;
            }
        };
        gens.push(quasi_reflection(f, form, &v, nu).expect("nonisotropic"));
    }
    gens
}

/// Field of definition for a family: GF(q²) for unitary groups.
pub fn family_field(family: Family, q: u64) -> Result<Field> {
    match family {
        Family::SU | Family::GU => Field::from_order(q * q),
        _ => Field::from_order(q),
    }
}

/// Minimal natural domain kind for a family.
pub fn natural_domain(family: Family) -> PointKind {
    match family {
        Family::SL | Family::GL | Family::Sp => PointKind::All,
        _ => PointKind::Singular,
    }
}

/// Build a classical group with its form and the order of its projective image.
pub fn classical_group(spec: &GroupSpec, seed: u64) -> Result<MatrixGroup> {
    use Family::*;
    let (fam, n, q) = (spec.family, spec.n, spec.q);
    if matches!(fam, Sym | Alt | M11) {
        return Err(Error::Unsupported("permutation families are built in permgrp".into()));
    }
    match fam {
        SL | GL if n < 2 => return Err(Error::Unsupported("linear groups need n ≥ 2".into())),
        SU | GU if n < 2 => return Err(Error::Unsupported("unitary groups need n ≥ 2".into())),
        Sp if n % 2 == 1 || n < 2 => return Err(Error::Unsupported("symplectic groups need even n".into())),
        OmegaPlus | OmegaMinus if n % 2 == 1 => {
            return Err(Error::Unsupported("use OmegaOdd for odd dimension".into()))
        }
        OmegaOdd | GO | SO if n % 2 == 1 && q % 2 == 0 => {
            return Err(Error::Unsupported("odd-dimensional orthogonal groups need odd q".into()))
        }
        _ => {}
    }
    let f = family_field(fam, q)?;
    let mut rng = seeded_rng(seed);
    let (form, mats, variant, fam_for_order): (Option<ClassicalForm>, Vec<Mat>, Variant, Family) = match fam {
        SL => (None, sl_gens(&f, n, false), Variant::Simple, SL),
        GL => (None, sl_gens(&f, n, true), Variant::Projective, GL),
        Sp => {
            let form = ClassicalForm::symplectic(&f, n);
            (Some(form), sp_gens(&f, n), Variant::Simple, Sp)
        }
        SU | GU => {
            let form = ClassicalForm::hermitian(&f, n);
            let g = unitary_gens(&f, &form, fam == GU, 5, &mut rng);
            (Some(form), g, if fam == GU { Variant::Projective } else { Variant::Simple }, fam)
        }
        OmegaPlus | OmegaMinus | GO | SO => {
            // GO and SO: minus type in even dimension, parabolic in odd
            let kind = match (fam, n % 2) {
                (_, 1) => FormKind::QuadOdd,
                (OmegaPlus, _) => FormKind::QuadPlus,
                _ => FormKind::QuadMinus,
            };
            let form = ClassicalForm::quadratic(&f, kind, n, 1);
            let which = match fam {
                GO => OrthoVariant::GO,
                SO => OrthoVariant::SO,
                _ => OrthoVariant::Omega,
            };
            // over GF(2) four random reflection pairs often stay in a proper subgroup
            let k = if q == 2 { 8 } else { 4 };
            let g = orthogonal_gens(&f, &form, which, k, &mut rng);
            let base = if n % 2 == 1 { OmegaOdd } else if fam == OmegaPlus { OmegaPlus } else { OmegaMinus };
            (Some(form), g, Variant::Simple, base)
        }
        OmegaOdd => {
            let form = ClassicalForm::quadratic(&f, FormKind::QuadOdd, n, 1);
            let g = orthogonal_gens(&f, &form, OrthoVariant::Omega, 4, &mut rng);
            (Some(form), g, Variant::Simple, OmegaOdd)
        }
        _ => unreachable!(),
    };
    let mut order = group_order(fam_for_order, n as u64, q, variant)?;
    match fam {
        // projective images: GO/⟨−1⟩, and SO/(SO ∩ ⟨−1⟩) with −1 ∈ SO iff n even
        GO => order = group_order(fam_for_order, n as u64, q, Variant::Projective)?,
        SO if q % 2 == 1 => {
            let go = group_order(fam_for_order, n as u64, q, Variant::Conformal)?;
            order = if n % 2 == 0 { go / 4u32 } else { go / 2u32 };
        }
        _ => {}
    }
    let mut gens: Vec<Elt> = mats.into_iter().map(Elt::mat).collect();
    let mut ext_factor = 1u32;
    for e in &spec.ext {
        match e {
            Ext::Field(k) => {
                gens.push(Elt::semi(Semi::frobenius(n, *k)));
                let deg = f.degree();
                ext_factor *= deg / num_integer::gcd(deg, *k);
            }
            Ext::Graph => match fam {
                SL | GL => {
                    gens.push(Elt::correlation(Semi::linear(Mat::identity(n))));
                    ext_factor *= 2;
                }
                OmegaPlus | OmegaMinus => {
                    let form = form.as_ref().expect("form");
                    let v = (0..)
                        .map(|_| random_vector(&f, n, &mut rng))
                        .find(|v| form.quad_value(&f, v) != 0)
                        .expect("nonsingular vector");
                    gens.push(Elt::mat(reflection(&f, form, &v)));
                    ext_factor *= 2;
                }
                _ => return Err(Error::Unsupported(format!("graph extension of {fam}"))),
            },
            Ext::Diagonal => match fam {
                SL => {
                    let mut d = vec![1; n];
                    d[0] = f.gen();
                    gens.push(Elt::mat(Mat::diag(&d)));
                    ext_factor *= num_integer::gcd(n as u64, q - 1) as u32;
                }
                Sp => {
                    gens.push(Elt::mat(sp_similitude(n, f.gen())));
                    ext_factor *= num_integer::gcd(2, q - 1) as u32;
                }
                SU => {
                    let form = form.as_ref().expect("form");
                    gens.extend(unitary_gens(&f, form, true, 0, &mut rng).into_iter().map(Elt::mat));
                    ext_factor *= num_integer::gcd(n as u64, q + 1) as u32;
                }
                _ => return Err(Error::Unsupported(format!("diagonal extension of {fam}"))),
            },
        }
    }
    Ok(MatrixGroup {
        label: spec.to_string(),
        field: f,
        n,
        form,
        gens,
        claimed_order: Some(order * ext_factor),
    })
}

/// Domain kind for a spec (points ∪ hyperplanes when a correlation is present).
pub fn domain_for(spec: &GroupSpec) -> PointKind {
    if spec.ext.contains(&Ext::Graph) && matches!(spec.family, Family::SL | Family::GL) {
        PointKind::PointsAndHyperplanes
    } else {
        natural_domain(spec.family)
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct OrderCheck {
    pub claimed: String,
    pub computed: String,
    pub certificate: Certificate,
    pub domain_size: usize,
}

/// Build the action and check the claimed order by Schreier–Sims when the
/// domain and order are within the verification caps (10⁵ points, 10¹⁵).
pub fn verify_order(g: &MatrixGroup, kind: PointKind, seed: u64) -> Result<Option<OrderCheck>> {
    let dom = PointDomain::new(&g.field, g.n, kind, g.form.as_ref())?;
    let claimed = g.claimed_order.clone().ok_or_else(|| Error::Unknown("no claimed order".into()))?;
    if dom.len() > 100_000 || claimed > BigUint::from(10u64.pow(15)) {
        return Ok(None);
    }
    let perms = dom.perms(&g.field, &g.gens)?;
    let opts = BsgsOptions { seed, known_order: Some(claimed.clone()), ..Default::default() };
    let b = Bsgs::new(dom.len(), &perms, &opts)?;
    Ok(Some(OrderCheck {
        claimed: claimed.to_string(),
        computed: b.order().to_string(),
        certificate: b.certificate,
        domain_size: dom.len(),
    }))
}

/// Build a classical group and, if its order falls short, retry with a larger
/// random generating set (seeds derived from `seed`).
pub fn classical_group_verified(spec: &GroupSpec, seed: u64) -> Result<(MatrixGroup, Option<OrderCheck>)> {
    let kind = domain_for(spec);
    let mut last = None;
    for attempt in 0..4u64 {
        let g = classical_group(spec, seed.wrapping_add(attempt * 7919))?;
        g.check_forms(spec.ext.contains(&Ext::Diagonal))?;
        match verify_order(&g, kind.clone(), seed)? {
            Some(c) if c.claimed == c.computed => return Ok((g, Some(c))),
            None => return Ok((g, None)),
            Some(c) => last = Some(c),
        }
    }
    Err(Error::Form(format!("{spec}: generated order {} below claimed", last.map(|c| c.computed).unwrap_or_default())))
}

/// Entrywise reinterpretation of a matrix over a subfield.
pub fn subfield_reinterpret(big: &Field, small: &Field, m: &Mat) -> Result<Mat> {
    let emb = big.embedding(small)?;
    Ok(m.map(|a| emb[a as usize]))
}

/// Restriction of scalars of a hermitian space GF(q²)^m → GF(q)^{2m} with
/// Q(x) = h(x,x) (or the trace of it down to GF(r^k) when `small` is smaller
/// than GF(q)). Returns the restriction data and the quadratic form.
pub fn restrict_hermitian(big: &Field, small: &Field, herm: &ClassicalForm) -> Result<(ScalarRestriction, ClassicalForm)> {
    let rs = ScalarRestriction::new(big, small)?;
    let q_deg = big.degree() / 2;
    let k = small.degree();
    if q_deg % k != 0 {
        return Err(Error::FieldMismatch);
    }
    let n = herm.n * rs.d;
    let qf = |x: &[El]| -> El {
        let v = rs.lift(big, x);
        let h = herm.bilinear(big, &v, &v); // lies in GF(q)
        // trace GF(q) → GF(r^k): Σ_{i < q_deg/k} h^(r^{k i})
        let mut t = 0;
        for i in 0..q_deg / k {
            t = big.add(t, big.frob(h, k * i));
        }
        rs.unembed[t as usize].expect("trace lies in the small field")
    };
    let probe = ClassicalForm::from_quadratic_fn(small, FormKind::QuadPlus, n, qf);
    let kind = match crate::linalg::standardize_quadratic(small, &probe) {
        Ok((_, std)) => std.kind,
        Err(e) => return Err(e),
    };
    let mut form = probe;
    form.kind = kind;
    Ok((rs, form))
}

/// Change of basis taking an orthogonal space to standard coordinates:
/// returns P and its inverse so that g ↦ P g P⁻¹ carries isometries of `form`
/// to isometries of the standard form.
pub struct Standardizer {
    pub p: Mat,
    pub p_inv: Mat,
    pub std: ClassicalForm,
}

impl Standardizer {
    pub fn new(f: &Field, form: &ClassicalForm) -> Result<Standardizer> {
        let (p, std) = crate::linalg::standardize_quadratic(f, form)?;
        let p_inv = p.inverse(f)?;
        Ok(Standardizer { p, p_inv, std })
    }
    pub fn apply(&self, f: &Field, g: &Mat) -> Mat {
        self.p.mul(f, g).mul(f, &self.p_inv)
    }
    /// Vector in original coordinates → standard coordinates.
    pub fn vec(&self, f: &Field, v: &[El]) -> Vec<El> {
        vec_mat(f, v, &self.p_inv)
    }
}

/// Order of the projective image of a linear element, by powering (up to `cap`).
pub fn projective_order(f: &Field, m: &Mat, cap: u64) -> Option<u64> {
    m.projective_order(f, cap)
}

/// Generators of the permutation families.
pub fn permutation_group(family: Family, n: usize) -> Result<(usize, Vec<Perm>, BigUint)> {
    use crate::permgrp::{alternating_gens, m11_gens, symmetric_gens};
    Ok(match family {
        Family::Sym => (n, symmetric_gens(n), group_order(Family::Sym, n as u64, 0, Variant::Simple)?),
        Family::Alt => (n, alternating_gens(n), group_order(Family::Alt, n as u64, 0, Variant::Simple)?),
        Family::M11 => (11, m11_gens(), BigUint::from(7920u32)),
        _ => return Err(Error::Unsupported(format!("{family} is not a permutation family"))),
    })
}

pub fn biguint_to_u64(b: &BigUint) -> Option<u64> {
    b.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn spec_parsing_roundtrip() {
        let s = spec("OmegaMinus:10:2:graph");
        assert_eq!(s.family, Family::OmegaMinus);
        assert_eq!(s.ext, vec![Ext::Graph]);
        assert_eq!(s.to_string(), "OmegaMinus:10:2:graph");
        assert!("Foo:2:2".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn small_classical_orders_match_formulas() {
        for (s, want) in [
            ("SL:2:7", 168u64),
            ("GL:2:5", 120),
            ("Sp:4:3", 25_920),
            ("SU:3:3", 6048),
            ("GU:4:2", 25_920),
            ("OmegaMinus:8:2", 197_406_720),
            ("OmegaOdd:5:3", 25_920),
            ("SL:4:3:graph", 12_130_560),
        ] {
            let (g, chk) = classical_group_verified(&spec(s), 11).unwrap();
            let chk = chk.unwrap();
            assert_eq!(chk.computed, want.to_string(), "{s}");
            g.check_forms(false).unwrap();
        }
    }

    #[test]
    fn singer_has_no_eigenvalue() {
        let f = Field::from_order(7).unwrap();
        let s = singer_element(&f, 2);
        assert_eq!(s.order(&f, 100), Some(48));
        assert_eq!(s.projective_order(&f, 100), Some(8));
        for l in f.elements() {
            assert_eq!(crate::linalg::eigenspace_dim(&f, &s, l), 0);
        }
    }

    #[test]
    fn hermitian_restriction_types() {
        // GU_5(2) ↪ O_10^-(2), GU_3(4) ↪ O_12^-(2), GU_2(2) ↪ O_4^+(2)
        for (qq, m, small, kind) in
            [(4u64, 5usize, 2u64, FormKind::QuadMinus), (16, 3, 2, FormKind::QuadMinus), (4, 2, 2, FormKind::QuadPlus)]
        {
            let big = Field::from_order(qq).unwrap();
            let sm = Field::from_order(small).unwrap();
            let herm = ClassicalForm::hermitian(&big, m);
            let (rs, form) = restrict_hermitian(&big, &sm, &herm).unwrap();
            assert_eq!(form.kind, kind);
            let mut rng = seeded_rng(3);
            for g in unitary_gens(&big, &herm, true, 3, &mut rng) {
                let r = rs.restrict_mat(&big, &g);
                assert!(form.is_isometry_mat(&sm, &r));
            }
        }
    }

    #[test]
    fn minus_scalar_extension_is_plus() {
        let f2 = Field::from_order(2).unwrap();
        let f4 = Field::from_order(4).unwrap();
        let form2 = ClassicalForm::quadratic(&f2, FormKind::QuadMinus, 8, 0);
        let mut rng = seeded_rng(5);
        let gens = orthogonal_gens(&f2, &form2, OrthoVariant::Omega, 4, &mut rng);
        let c4 = subfield_reinterpret(&f4, &f2, form2.quad.as_ref().unwrap()).unwrap();
        let form4 = ClassicalForm::from_quadratic(&f4, FormKind::QuadPlus, c4);
        for g in &gens {
            let g4 = subfield_reinterpret(&f4, &f2, g).unwrap();
            assert!(form4.is_isometry_mat(&f4, &g4));
        }
        let (_, std) = crate::linalg::standardize_quadratic(&f4, &form4).unwrap();
        assert_eq!(std.kind, FormKind::QuadPlus);
    }

    #[test]
    fn graph_correlation_squares_to_identity() {
        let f = Field::from_order(3).unwrap();
        let dom = PointDomain::new(&f, 4, PointKind::PointsAndHyperplanes, None).unwrap();
        let tau = dom.perm(&f, &Elt::correlation(Semi::linear(Mat::identity(4)))).unwrap();
        assert!(!tau.is_identity());
        assert!(tau.mul(&tau).is_identity());
        let phi_dom = PointDomain::new(&Field::from_order(16).unwrap(), 2, PointKind::All, None).unwrap();
        let f16 = Field::from_order(16).unwrap();
        let phi = phi_dom.perm(&f16, &Elt::semi(Semi::frobenius(2, 1))).unwrap();
        assert_eq!(phi.order(), 4);
    }
}
