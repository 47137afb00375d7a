//! Dense matrices, subspaces, classical forms, semilinear maps and
//! restriction of scalars over small finite fields.
//!
//! Vectors are rows; a matrix `M` acts by `v ↦ v·M`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::ff::{El, Field};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub d: Vec<El>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, d: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.d[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<El>]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut d = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            d.extend_from_slice(r);
        }
        Mat { rows: rows.len(), cols, d }
    }

    pub fn diag(entries: &[El]) -> Mat {
        let n = entries.len();
        let mut m = Mat::zero(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.d[i * n + i] = e;
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> El {
        self.d[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: El) {
        self.d[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[El] {
        &self.d[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<El>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.rows)
    }

    pub fn mul(&self, f: &Field, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out = Mat::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                let orow = o.row(k);
                let base = i * o.cols;
                for j in 0..o.cols {
                    let b = orow[j];
                    if b != 0 {
                        out.d[base + j] = f.add(out.d[base + j], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, f: &Field, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, d: self.d.iter().zip(&o.d).map(|(&a, &b)| f.add(a, b)).collect() }
    }

    pub fn sub(&self, f: &Field, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, d: self.d.iter().zip(&o.d).map(|(&a, &b)| f.sub(a, b)).collect() }
    }

    pub fn scale(&self, f: &Field, s: El) -> Mat {
        Mat { rows: self.rows, cols: self.cols, d: self.d.iter().map(|&a| f.mul(a, s)).collect() }
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.d[j * self.rows + i] = self.at(i, j);
            }
        }
        out
    }

    /// Entrywise t ↦ t^(r^k).
    pub fn frob(&self, f: &Field, k: u32) -> Mat {
        if k % f.degree() == 0 {
            return self.clone();
        }
        Mat { rows: self.rows, cols: self.cols, d: self.d.iter().map(|&a| f.frob(a, k)).collect() }
    }

    pub fn map(&self, g: impl Fn(El) -> El) -> Mat {
        Mat { rows: self.rows, cols: self.cols, d: self.d.iter().map(|&a| g(a)).collect() }
    }

    pub fn pow(&self, f: &Field, mut k: u64) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            base = base.mul(f, &base);
            k >>= 1;
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, f: &Field) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.at(i, c) != 0) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.d.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.at(r, c));
            for j in 0..m.cols {
                m.d[r * m.cols + j] = f.mul(m.d[r * m.cols + j], inv);
            }
            for i in 0..m.rows {
                if i != r {
                    let s = m.at(i, c);
                    if s != 0 {
                        for j in 0..m.cols {
                            let t = f.mul(s, m.d[r * m.cols + j]);
                            m.d[i * m.cols + j] = f.sub(m.d[i * m.cols + j], t);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1.len()
    }

    pub fn det(&self, f: &Field) -> El {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det: El = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| m.at(i, c) != 0) else { return 0 };
            if p != c {
                for j in 0..n {
                    m.d.swap(p * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let piv = m.at(c, c);
            det = f.mul(det, piv);
            let inv = f.inv(piv);
            for i in c + 1..n {
                let s = f.mul(m.at(i, c), inv);
                if s != 0 {
                    for j in c..n {
                        let t = f.mul(s, m.at(c, j));
                        m.d[i * n + j] = f.sub(m.d[i * n + j], t);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &Field) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, piv) = aug.rref(f);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut out = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.at(i, n + j));
            }
        }
        Ok(out)
    }

    /// Basis of the left null space {v : v·M = 0}, as rows.
    pub fn left_nullspace(&self, f: &Field) -> Mat {
        self.transpose().nullspace(f)
    }

    /// Basis of the right null space {x : M·xᵀ = 0}, as rows.
    pub fn nullspace(&self, f: &Field) -> Mat {
        let (r, piv) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        let mut out = Mat::zero(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (i, &pc) in piv.iter().enumerate() {
                out.set(k, pc, f.neg(r.at(i, fc)));
            }
        }
        out
    }

    /// Block matrix from a grid of equally sized blocks.
    pub fn blocks(grid: &[Vec<Mat>]) -> Mat {
        let br = grid.len();
        let bc = grid[0].len();
        let (h, w) = (grid[0][0].rows, grid[0][0].cols);
        let mut out = Mat::zero(br * h, bc * w);
        for (bi, row) in grid.iter().enumerate() {
            for (bj, b) in row.iter().enumerate() {
                for i in 0..h {
                    for j in 0..w {
                        out.set(bi * h + i, bj * w + j, b.at(i, j));
                    }
                }
            }
        }
        out
    }

    /// Block diagonal matrix with arbitrary square blocks.
    pub fn block_diag(blocks: &[&Mat]) -> Mat {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Mat::zero(n, n);
        let mut o = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(o + i, o + j, b.at(i, j));
                }
            }
            o += b.rows;
        }
        out
    }

    /// Multiplicative order of an invertible matrix (up to `cap`).
    pub fn order(&self, f: &Field, cap: u64) -> Option<u64> {
        let id = Mat::identity(self.rows);
        let mut p = self.clone();
        for k in 1..=cap {
            if p == id {
                return Some(k);
            }
            p = p.mul(f, self);
        }
        None
    }

    /// Order modulo scalars (projective order), up to `cap`.
    pub fn projective_order(&self, f: &Field, cap: u64) -> Option<u64> {
        let mut p = self.clone();
        for k in 1..=cap {
            if is_scalar(&p) {
                return Some(k);
            }
            p = p.mul(f, self);
        }
        None
    }

    pub fn parse(text: &str) -> Result<(Field, Mat)> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let head = lines.next().ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let w: Vec<&str> = head.split_whitespace().collect();
        if w.len() != 3 || w[0] != "field" {
            return Err(Error::Parse(format!("bad header {head:?}")));
        }
        let r = w[1].parse().map_err(|_| Error::Parse(head.into()))?;
        let fd = w[2].parse().map_err(|_| Error::Parse(head.into()))?;
        let field = Field::new(r, fd)?;
        let mut rows = Vec::new();
        for l in lines {
            let row: std::result::Result<Vec<El>, _> = l.split_whitespace().map(|t| t.parse::<El>()).collect();
            let row = row.map_err(|_| Error::Parse(l.into()))?;
            for &x in &row {
                field.elem(x)?;
            }
            rows.push(row);
        }
        if rows.iter().any(|r| r.len() != rows.len()) {
            return Err(Error::Parse("matrix must be square".into()));
        }
        Ok((field, Mat::from_rows(&rows)))
    }

    pub fn to_text(&self, f: &Field) -> String {
        let mut s = format!("field {} {}\n", f.char(), f.degree());
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            s.push_str(&r.join(" "));
            s.push('\n');
        }
        s
    }
}

pub fn is_scalar(m: &Mat) -> bool {
    let s = m.at(0, 0);
    s != 0 && (0..m.rows).all(|i| (0..m.cols).all(|j| m.at(i, j) == if i == j { s } else { 0 }))
}

pub fn vec_mat(f: &Field, v: &[El], m: &Mat) -> Vec<El> {
    let mut out = vec![0; m.cols];
    vec_mat_into(f, v, m, &mut out);
    out
}

#[inline]
pub fn vec_mat_into(f: &Field, v: &[El], m: &Mat, out: &mut [El]) {
    out.iter_mut().for_each(|x| *x = 0);
    for (i, &a) in v.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let row = m.row(i);
        for j in 0..m.cols {
            if row[j] != 0 {
                out[j] = f.add(out[j], f.mul(a, row[j]));
            }
        }
    }
}

pub fn dot(f: &Field, a: &[El], b: &[El]) -> El {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

pub fn vadd(f: &Field, a: &[El], b: &[El]) -> Vec<El> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn vsub(f: &Field, a: &[El], b: &[El]) -> Vec<El> {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

pub fn vscale(f: &Field, a: &[El], s: El) -> Vec<El> {
    a.iter().map(|&x| f.mul(x, s)).collect()
}

/// Scale so the first nonzero entry is 1; returns false for the zero vector.
#[inline]
pub fn normalize(f: &Field, v: &mut [El]) -> bool {
    let Some(&lead) = v.iter().find(|&&x| x != 0) else { return false };
    if lead != 1 {
        let inv = f.inv(lead);
        v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
    }
    true
}

/// Iterate all vectors of F^n in literal order (little-endian counter).
pub fn all_vectors(q: u32, n: usize) -> impl Iterator<Item = Vec<El>> {
    let total = (q as u64).pow(n as u32);
    (0..total).map(move |mut k| {
        (0..n)
            .map(|_| {
                let d = (k % q as u64) as El;
                k /= q as u64;
                d
            })
            .collect()
    })
}

/// Normalized representatives of the points of PG(n-1, q).
pub fn projective_points(f: &Field, n: usize) -> Vec<Vec<El>> {
    let q = f.order();
    let mut out = Vec::new();
    // leading 1 at position i, zeros before, anything after
    for i in 0..n {
        for tail in all_vectors(q, n - i - 1) {
            let mut v = vec![0; n];
            v[i] = 1;
            v[i + 1..].copy_from_slice(&tail);
            out.push(v);
        }
    }
    out
}

/// A subspace in reduced row echelon form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Subspace {
    pub n: usize,
    pub k: usize,
    pub rows: Vec<El>,
}

impl Subspace {
    pub fn basis(&self) -> Vec<Vec<El>> {
        self.rows.chunks(self.n.max(1)).take(self.k).map(|r| r.to_vec()).collect()
    }
    pub fn as_mat(&self) -> Mat {
        Mat { rows: self.k, cols: self.n, d: self.rows.clone() }
    }
}

pub fn canonical_subspace(f: &Field, n: usize, vectors: &[Vec<El>]) -> Subspace {
    if vectors.is_empty() {
        return Subspace { n, k: 0, rows: Vec::new() };
    }
    let m = Mat::from_rows(vectors);
    let (r, piv) = m.rref(f);
    let k = piv.len();
    Subspace { n, k, rows: r.d[..k * n].to_vec() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum FormKind {
    Symplectic,
    QuadPlus,
    QuadMinus,
    QuadOdd,
    Hermitian,
    SymBilinear,
}

impl FormKind {
    pub fn is_quadratic(self) -> bool {
        matches!(self, FormKind::QuadPlus | FormKind::QuadMinus | FormKind::QuadOdd)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum TypeLabel {
    TotallySingular,
    NondegPlus,
    NondegMinus,
    NondegOdd,
    /// nondegenerate alternating or hermitian space
    Nondegenerate,
    Anisotropic,
    Degenerate,
    NonsingularPoint,
}

/// A classical form. For quadratic kinds `quad` holds the upper triangular
/// coefficient matrix C with Q(v) = Σ_{i≤j} c_ij v_i v_j; `gram` is the
/// polarization. For hermitian forms `sigma` is the involutory field
/// automorphism exponent (t ↦ t^(r^sigma)).
#[derive(Clone, Debug)]
pub struct ClassicalForm {
    pub kind: FormKind,
    pub n: usize,
    pub gram: Mat,
    pub quad: Option<Mat>,
    pub sigma: u32,
}

/// Least ζ with t² + t + ζ irreducible over the field.
pub fn anisotropic_constant(f: &Field) -> El {
    f.elements()
        .find(|&z| f.elements().all(|t| f.add(f.add(f.mul(t, t), t), z) != 0))
        .expect("irreducible quadratic exists")
}

impl ClassicalForm {
    /// Alternating form with Gram [[0, I], [-I, 0]] on e_1..e_m, f_1..f_m.
    pub fn symplectic(f: &Field, n: usize) -> ClassicalForm {
        assert!(n % 2 == 0);
        let m = n / 2;
        let mut g = Mat::zero(n, n);
        for i in 0..m {
            g.set(i, m + i, 1);
            g.set(m + i, i, f.neg(1));
        }
        ClassicalForm { kind: FormKind::Symplectic, n, gram: g, quad: None, sigma: 0 }
    }

    /// Standard quadratic forms:
    /// plus: Σ x_i y_i on e_1..e_m, f_1..f_m;
    /// minus: Σ_{i<m} x_i y_i + a² + ab + ζ b² on e_1..e_{m-1}, f_1..f_{m-1}, w_1, w_2;
    /// odd: Σ x_i y_i + c z² on e_1..e_m, f_1..f_m, w.
    pub fn quadratic(f: &Field, kind: FormKind, n: usize, c: El) -> ClassicalForm {
        let mut quad = Mat::zero(n, n);
        match kind {
            FormKind::QuadPlus => {
                assert!(n % 2 == 0);
                let m = n / 2;
                for i in 0..m {
                    quad.set(i, m + i, 1);
                }
            }
            FormKind::QuadMinus => {
                assert!(n % 2 == 0 && n >= 2);
                let h = n / 2 - 1;
                for i in 0..h {
                    quad.set(i, h + i, 1);
                }
                let (a, b) = (2 * h, 2 * h + 1);
                quad.set(a, a, 1);
                quad.set(a, b, 1);
                quad.set(b, b, anisotropic_constant(f));
            }
            FormKind::QuadOdd => {
                assert!(n % 2 == 1);
                let m = n / 2;
                for i in 0..m {
                    quad.set(i, m + i, 1);
                }
                quad.set(n - 1, n - 1, c);
            }
            _ => panic!("not a quadratic kind"),
        }
        ClassicalForm::from_quadratic(f, kind, quad)
    }

    pub fn from_quadratic(f: &Field, kind: FormKind, quad: Mat) -> ClassicalForm {
        let n = quad.rows;
        let mut g = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    g.set(i, i, f.add(quad.at(i, i), quad.at(i, i)));
                } else if i < j {
                    g.set(i, j, quad.at(i, j));
                    g.set(j, i, quad.at(i, j));
                }
            }
        }
        ClassicalForm { kind, n, gram: g, quad: Some(quad), sigma: 0 }
    }

    /// Quadratic form determined by a function Q on vectors (polarized on the basis).
    pub fn from_quadratic_fn(f: &Field, kind: FormKind, n: usize, q: impl Fn(&[El]) -> El) -> ClassicalForm {
        let mut c = Mat::zero(n, n);
        let unit = |i: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        };
        for i in 0..n {
            c.set(i, i, q(&unit(i)));
            for j in i + 1..n {
                let mut v = unit(i);
                v[j] = 1;
                let b = f.sub(f.sub(q(&v), q(&unit(i))), q(&unit(j)));
                c.set(i, j, b);
            }
        }
        ClassicalForm::from_quadratic(f, kind, c)
    }

    /// Hermitian form over GF(q²) with Gram [[0, I], [I, 0]] (plus a unit vector when n is odd).
    pub fn hermitian(f: &Field, n: usize) -> ClassicalForm {
        assert!(f.degree() % 2 == 0, "hermitian forms need an even degree field");
        let m = n / 2;
        let mut g = Mat::zero(n, n);
        for i in 0..m {
            g.set(i, m + i, 1);
            g.set(m + i, i, 1);
        }
        if n % 2 == 1 {
            g.set(n - 1, n - 1, 1);
        }
        ClassicalForm { kind: FormKind::Hermitian, n, gram: g, quad: None, sigma: f.degree() / 2 }
    }

    pub fn hermitian_from_gram(f: &Field, gram: Mat) -> ClassicalForm {
        ClassicalForm { kind: FormKind::Hermitian, n: gram.rows, gram, quad: None, sigma: f.degree() / 2 }
    }

    pub fn alternating_from_gram(gram: Mat) -> ClassicalForm {
        ClassicalForm { kind: FormKind::Symplectic, n: gram.rows, gram, quad: None, sigma: 0 }
    }

    #[inline]
    pub fn conj(&self, f: &Field, a: El) -> El {
        if self.sigma == 0 {
            a
        } else {
            f.frob(a, self.sigma)
        }
    }

    /// B(u, v) = u G σ(v)ᵀ
    pub fn bilinear(&self, f: &Field, u: &[El], v: &[El]) -> El {
        let mut acc = 0;
        for i in 0..self.n {
            if u[i] == 0 {
                continue;
            }
            let row = self.gram.row(i);
            let mut s = 0;
            for j in 0..self.n {
                if row[j] != 0 && v[j] != 0 {
                    s = f.add(s, f.mul(row[j], self.conj(f, v[j])));
                }
            }
            acc = f.add(acc, f.mul(u[i], s));
        }
        acc
    }

    /// Q(v) for quadratic kinds; B(v,v) otherwise.
    pub fn quad_value(&self, f: &Field, v: &[El]) -> El {
        match &self.quad {
            Some(c) => {
                let mut acc = 0;
                for i in 0..self.n {
                    if v[i] == 0 {
                        continue;
                    }
                    let row = c.row(i);
                    let mut s = 0;
                    for j in i..self.n {
                        if row[j] != 0 && v[j] != 0 {
                            s = f.add(s, f.mul(row[j], v[j]));
                        }
                    }
                    acc = f.add(acc, f.mul(v[i], s));
                }
                acc
            }
            None => self.bilinear(f, v, v),
        }
    }

    /// Whether `v` is singular (quadratic) / isotropic (hermitian, alternating).
    pub fn is_singular(&self, f: &Field, v: &[El]) -> bool {
        self.quad_value(f, v) == 0
    }

    /// M G σ(M)ᵀ = λ φ^e(G) and (for quadratic forms) Q∘M = λ φ^e(Q); returns λ.
    pub fn similarity_factor(&self, f: &Field, s: &Semi) -> Option<El> {
        let m = &s.m;
        let lhs = m.mul(f, &self.gram).mul(f, &m.map(|a| self.conj(f, a)).transpose());
        let rhs = self.gram.frob(f, s.e);
        // find λ from the first nonzero entry of rhs
        let idx = rhs.d.iter().position(|&x| x != 0)?;
        let lam = f.div(lhs.d[idx], rhs.d[idx]);
        if lam == 0 || lhs != rhs.scale(f, lam) {
            return None;
        }
        if let Some(c) = &self.quad {
            let mcm = m.mul(f, c).mul(f, &m.transpose());
            let target = c.frob(f, s.e).scale(f, lam);
            for i in 0..self.n {
                if mcm.at(i, i) != target.at(i, i) {
                    return None;
                }
                for j in i + 1..self.n {
                    if f.add(mcm.at(i, j), mcm.at(j, i)) != target.at(i, j) {
                        return None;
                    }
                }
            }
        }
        Some(lam)
    }

    pub fn is_isometry(&self, f: &Field, s: &Semi) -> bool {
        s.m.rows == self.n && self.similarity_factor(f, s) == Some(1)
    }

    pub fn is_isometry_mat(&self, f: &Field, m: &Mat) -> bool {
        self.is_isometry(f, &Semi::linear(m.clone()))
    }

    /// The form restricted to the span of the given rows.
    pub fn restrict(&self, f: &Field, basis: &[Vec<El>]) -> ClassicalForm {
        let k = basis.len();
        if let Some(_) = &self.quad {
            let qv = |coeffs: &[El]| {
                let mut v = vec![0; self.n];
                for (c, b) in coeffs.iter().zip(basis) {
                    for j in 0..self.n {
                        v[j] = f.add(v[j], f.mul(*c, b[j]));
                    }
                }
                self.quad_value(f, &v)
            };
            let mut c = ClassicalForm::from_quadratic_fn(f, self.kind, k, qv);
            c.sigma = self.sigma;
            c
        } else {
            let mut g = Mat::zero(k, k);
            for i in 0..k {
                for j in 0..k {
                    g.set(i, j, self.bilinear(f, &basis[i], &basis[j]));
                }
            }
            ClassicalForm { kind: self.kind, n: k, gram: g, quad: None, sigma: self.sigma }
        }
    }
}

/// Classify a subspace by exhaustive vector counting (dimension ≤ `cap`).
pub fn classify_subspace(f: &Field, form: &ClassicalForm, s: &Subspace, cap: usize) -> Result<TypeLabel> {
    if s.k > cap {
        return Err(Error::DimensionCap(s.k));
    }
    let r = form.restrict(f, &s.basis());
    Ok(classify_restricted(f, &r))
}

/// Classify a form on its whole (small) space.
pub fn classify_restricted(f: &Field, r: &ClassicalForm) -> TypeLabel {
    let k = r.n;
    if k == 0 {
        return TypeLabel::TotallySingular;
    }
    let q = f.order() as u64;
    let mut singular = 0u64;
    let mut rad_singular = 0u64; // nonzero radical vectors that are singular
    let mut rad = 0u64;
    for v in all_vectors(q as u32, k).skip(1) {
        let sing = r.is_singular(f, &v);
        if sing {
            singular += 1;
        }
        let in_rad = (0..k).all(|i| {
            let mut e = vec![0; k];
            e[i] = 1;
            r.bilinear(f, &v, &e) == 0
        });
        if in_rad {
            rad += 1;
            if sing {
                rad_singular += 1;
            }
        }
    }
    let total = q.pow(k as u32) - 1;
    if singular == total {
        return TypeLabel::TotallySingular;
    }
    if r.kind.is_quadratic() {
        if rad_singular > 0 {
            return TypeLabel::Degenerate;
        }
        if k == 1 {
            return TypeLabel::NonsingularPoint;
        }
        if k % 2 == 1 {
            return TypeLabel::NondegOdd;
        }
        if rad > 0 {
            return TypeLabel::Degenerate;
        }
        if singular == 0 {
            return TypeLabel::Anisotropic;
        }
        let h = k as u32 / 2;
        let plus = (q.pow(h) - 1) * (q.pow(h - 1) + 1);
        let minus = (q.pow(h) + 1) * (q.pow(h - 1) - 1);
        // counts are of vectors; the (q-1) scalar multiples are included above
        if singular == plus {
            TypeLabel::NondegPlus
        } else if singular == minus {
            TypeLabel::NondegMinus
        } else {
            TypeLabel::Degenerate
        }
    } else {
        if rad > 0 {
            return TypeLabel::Degenerate;
        }
        if k == 1 {
            return TypeLabel::NonsingularPoint;
        }
        TypeLabel::Nondegenerate
    }
}

/// Semilinear map v ↦ φ^e(v)·M.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Semi {
    pub e: u32,
    pub m: Mat,
}

impl Semi {
    pub fn linear(m: Mat) -> Semi {
        Semi { e: 0, m }
    }

    pub fn frobenius(n: usize, e: u32) -> Semi {
        Semi { e, m: Mat::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.m.rows
    }

    /// `self` followed by `o`.
    pub fn then(&self, f: &Field, o: &Semi) -> Semi {
        Semi { e: (self.e + o.e) % f.degree(), m: self.m.frob(f, o.e).mul(f, &o.m) }
    }

    pub fn inverse(&self, f: &Field) -> Result<Semi> {
        let d = f.degree();
        let back = (d - self.e % d) % d;
        Ok(Semi { e: back, m: self.m.inverse(f)?.frob(f, back) })
    }

    pub fn apply(&self, f: &Field, v: &[El]) -> Vec<El> {
        if self.e == 0 {
            vec_mat(f, v, &self.m)
        } else {
            let w: Vec<El> = v.iter().map(|&a| f.frob(a, self.e)).collect();
            vec_mat(f, &w, &self.m)
        }
    }

    pub fn is_identity(&self) -> bool {
        self.e == 0 && self.m.is_identity()
    }

    pub fn pow(&self, f: &Field, k: u64) -> Semi {
        let mut acc = Semi::linear(Mat::identity(self.n()));
        for _ in 0..k {
            acc = acc.then(f, self);
        }
        acc
    }

    /// Map induced on hyperplane normals: h ↦ φ^e(h)·M^{-T}.
    pub fn dual(&self, f: &Field) -> Result<Semi> {
        Ok(Semi { e: self.e, m: self.m.inverse(f)?.transpose() })
    }
}

pub fn eigenspace_dim(f: &Field, m: &Mat, lambda: El) -> usize {
    let d = m.sub(f, &Mat::identity(m.rows).scale(f, lambda));
    m.rows - d.rank(f)
}

/// Dickson invariant (characteristic 2): rank(g - 1) mod 2.
pub fn dickson_invariant(f: &Field, g: &Mat) -> u32 {
    (g.sub(f, &Mat::identity(g.rows)).rank(f) % 2) as u32
}

/// Reflection (orthogonal transvection in characteristic 2) in a nonsingular vector.
pub fn reflection(f: &Field, form: &ClassicalForm, w: &[El]) -> Mat {
    let n = form.n;
    let qw = form.quad_value(f, w);
    assert!(qw != 0, "reflection in a singular vector");
    let inv = f.inv(qw);
    let mut m = Mat::identity(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        let c = f.mul(form.bilinear(f, &e, w), inv);
        for j in 0..n {
            m.set(i, j, f.sub(m.at(i, j), f.mul(c, w[j])));
        }
    }
    m
}

/// Spinor norm of an isometry (odd characteristic), as "is a square" of the
/// product of Q(w_i) over a reflection factorization g = r_{w_1} ⋯ r_{w_k}.
/// Returns (number of reflections, spinor norm is trivial).
pub fn spinor_norm(f: &Field, form: &ClassicalForm, g: &Mat, rng: &mut impl Rng) -> (usize, bool) {
    let n = form.n;
    let q = f.order();
    let fixed_dim = |h: &Mat| eigenspace_dim(f, h, 1);
    let mut h = g.clone();
    let mut prod: El = 1;
    let mut count = 0usize;
    let rand_vec = |rng: &mut dyn rand::RngCore| -> Vec<El> { (0..n).map(|_| (rng.next_u32() % q) as El).collect() };
    let mut guard = 0;
    while !h.is_identity() {
        guard += 1;
        assert!(guard < 10_000, "reflection factorization did not converge");
        let cur = fixed_dim(&h);
        let mut progressed = false;
        for _ in 0..200 {
            let v = rand_vec(rng);
            let u = vec_mat(f, &v, &h);
            let w = vsub(f, &u, &v);
            let qw = form.quad_value(f, &w);
            if qw == 0 {
                continue;
            }
            let r = reflection(f, form, &w);
            let h2 = h.mul(f, &r);
            if fixed_dim(&h2) > cur {
                h = h2;
                prod = f.mul(prod, qw);
                count += 1;
                progressed = true;
                break;
            }
        }
        if !progressed {
            // perturb by a random reflection and keep going
            loop {
                let z = rand_vec(rng);
                let qz = form.quad_value(f, &z);
                if qz != 0 {
                    h = h.mul(f, &reflection(f, form, &z));
                    prod = f.mul(prod, qz);
                    count += 1;
                    break;
                }
            }
        }
    }
    // g = (r_k ⋯ r_1)^{-1} = r_1 ⋯ r_k; reflections are involutions
    (count, f.is_square(prod))
}

/// A basis (rows) in which the nondegenerate quadratic form becomes the
/// standard form of its type (see [`ClassicalForm::quadratic`]); returns the
/// change of basis P (rows are the new basis vectors) and the standard form.
pub fn standardize_quadratic(f: &Field, form: &ClassicalForm) -> Result<(Mat, ClassicalForm)> {
    let n = form.n;
    let q = f.order();
    let mut es = Vec::new();
    let mut fs = Vec::new();
    // basis of the remaining space
    let mut w: Vec<Vec<El>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let combine = |coeffs: &[El], basis: &[Vec<El>]| {
        let mut v = vec![0; n];
        for (c, b) in coeffs.iter().zip(basis) {
            if *c != 0 {
                for j in 0..n {
                    v[j] = f.add(v[j], f.mul(*c, b[j]));
                }
            }
        }
        v
    };
    loop {
        let k = w.len();
        if k <= 2 {
            // stop when no singular vector is left (anisotropic remainder)
            let has = all_vectors(q, k).skip(1).any(|c| form.is_singular(f, &combine(&c, &w)));
            if !has {
                break;
            }
        }
        // singular e that is not in the radical of B on w
        let mut found = None;
        for c in all_vectors(q, k).skip(1) {
            let e = combine(&c, &w);
            if !form.is_singular(f, &e) {
                continue;
            }
            if let Some(u) = w.iter().find(|b| form.bilinear(f, &e, b) != 0) {
                found = Some((e, u.clone()));
                break;
            }
        }
        let Some((e, u)) = found else { return Err(Error::Form("degenerate quadratic form".into())) };
        let fp = vscale(f, &u, f.inv(form.bilinear(f, &e, &u)));
        let c = form.quad_value(f, &fp);
        let fv = vsub(f, &fp, &vscale(f, &e, c));
        // complement ⟨e, f⟩^⊥ within w
        let mut cons = Mat::zero(w.len(), 2);
        for (i, b) in w.iter().enumerate() {
            cons.set(i, 0, form.bilinear(f, b, &e));
            cons.set(i, 1, form.bilinear(f, b, &fv));
        }
        let ns = cons.left_nullspace(f);
        w = ns.row_vecs().iter().map(|c| combine(c, &w)).collect();
        es.push(e);
        fs.push(fv);
    }
    let m = es.len();
    let (kind, tail): (FormKind, Vec<Vec<El>>) = match w.len() {
        0 => (FormKind::QuadPlus, vec![]),
        1 => (FormKind::QuadOdd, vec![w[0].clone()]),
        2 => {
            // find w1, w2 with Q(w1)=1, B(w1,w2)=1, Q(w2)=ζ
            let zeta = anisotropic_constant(f);
            let vecs: Vec<Vec<El>> = all_vectors(q, 2).skip(1).map(|c| combine(&c, &w)).collect();
            let mut pair = None;
            'o: for a in &vecs {
                if form.quad_value(f, a) != 1 {
                    continue;
                }
                for b in &vecs {
                    if form.bilinear(f, a, b) == 1 && form.quad_value(f, b) == zeta {
                        pair = Some((a.clone(), b.clone()));
                        break 'o;
                    }
                }
            }
            let (a, b) = pair.ok_or_else(|| Error::Form("anisotropic plane not standard".into()))?;
            (FormKind::QuadMinus, vec![a, b])
        }
        _ => return Err(Error::Form("unexpected anisotropic remainder".into())),
    };
    let mut rows = es.clone();
    rows.extend(fs.iter().cloned());
    rows.extend(tail.iter().cloned());
    let p = Mat::from_rows(&rows);
    let c = if kind == FormKind::QuadOdd { form.quad_value(f, &tail[0]) } else { 0 };
    let std = ClassicalForm::quadratic(f, kind, n, c);
    debug_assert_eq!(m * 2 + tail.len(), n);
    Ok((p, std))
}

/// Symplectic basis for a nondegenerate alternating Gram matrix: rows
/// e_1..e_m, f_1..f_m with B(e_i, f_j) = δ_ij.
pub fn symplectic_basis(f: &Field, gram: &Mat) -> Result<Mat> {
    let n = gram.rows;
    let form = ClassicalForm::alternating_from_gram(gram.clone());
    let mut w: Vec<Vec<El>> = Mat::identity(n).row_vecs();
    let (mut es, mut fs) = (Vec::new(), Vec::new());
    while !w.is_empty() {
        let e = w[0].clone();
        let u = w.iter().find(|b| form.bilinear(f, &e, b) != 0).cloned().ok_or(Error::Singular)?;
        let fv = vscale(f, &u, f.inv(form.bilinear(f, &e, &u)));
        let mut cons = Mat::zero(w.len(), 2);
        for (i, b) in w.iter().enumerate() {
            cons.set(i, 0, form.bilinear(f, b, &e));
            cons.set(i, 1, form.bilinear(f, b, &fv));
        }
        let ns = cons.left_nullspace(f);
        w = ns
            .row_vecs()
            .iter()
            .map(|c| {
                let mut v = vec![0; n];
                for (ci, b) in c.iter().zip(&w) {
                    for j in 0..n {
                        v[j] = f.add(v[j], f.mul(*ci, b[j]));
                    }
                }
                v
            })
            .collect();
        es.push(e);
        fs.push(fv);
    }
    let mut rows = es;
    rows.extend(fs);
    Ok(Mat::from_rows(&rows))
}

/// Restriction of scalars from GF(r^{fd}) (`big`) to GF(r^{f}) (`small`), using
/// the power basis 1, α, …, α^{d-1} of the primitive root α of `big`.
#[derive(Clone)]
pub struct ScalarRestriction {
    pub d: usize,
    /// coordinates of each big element (indexed by literal), length d each
    coords: Vec<Vec<El>>,
    /// small literal -> big literal
    pub embed: Vec<El>,
    /// big literal -> small literal (for elements of the subfield)
    pub unembed: Vec<Option<El>>,
}

impl ScalarRestriction {
    pub fn new(big: &Field, small: &Field) -> Result<ScalarRestriction> {
        if big.char() != small.char() || big.degree() % small.degree() != 0 {
            return Err(Error::FieldMismatch);
        }
        let d = (big.degree() / small.degree()) as usize;
        let embed = big.embedding(small)?;
        let mut unembed = vec![None; big.order() as usize];
        for (s, &b) in embed.iter().enumerate() {
            unembed[b as usize] = Some(s as El);
        }
        let alpha = big.gen();
        let powers: Vec<El> = (0..d).map(|i| big.pow(alpha, i as i64)).collect();
        let mut coords = vec![Vec::new(); big.order() as usize];
        for c in all_vectors(small.order(), d) {
            let mut t = 0;
            for (ci, &p) in c.iter().zip(&powers) {
                t = big.add(t, big.mul(embed[*ci as usize], p));
            }
            coords[t as usize] = c;
        }
        if coords.iter().any(|c| c.len() != d) {
            return Err(Error::FieldMismatch);
        }
        Ok(ScalarRestriction { d, coords, embed, unembed })
    }

    pub fn coords(&self, t: El) -> &[El] {
        &self.coords[t as usize]
    }

    /// Matrix of v ↦ v·λ on the power basis (rows: coords(α^i λ)).
    pub fn mult_matrix(&self, big: &Field, lambda: El) -> Mat {
        let alpha = big.gen();
        let rows: Vec<Vec<El>> = (0..self.d).map(|i| self.coords(big.mul(big.pow(alpha, i as i64), lambda)).to_vec()).collect();
        Mat::from_rows(&rows)
    }

    pub fn restrict_mat(&self, big: &Field, m: &Mat) -> Mat {
        let grid: Vec<Vec<Mat>> = (0..m.rows).map(|i| (0..m.cols).map(|j| self.mult_matrix(big, m.at(i, j))).collect()).collect();
        Mat::blocks(&grid)
    }

    /// Semilinear map over `big` with exponent e (a power of the prime Frobenius)
    /// as a semilinear map over `small` with the same exponent.
    pub fn restrict_semi(&self, big: &Field, small: &Field, s: &Semi) -> Semi {
        let rm = self.restrict_mat(big, &s.m);
        if s.e % big.degree() == 0 {
            return Semi::linear(rm);
        }
        let alpha = big.gen();
        let phi_rows: Vec<Vec<El>> = (0..self.d).map(|i| self.coords(big.frob(big.pow(alpha, i as i64), s.e)).to_vec()).collect();
        let phi = Mat::from_rows(&phi_rows);
        let blocks: Vec<&Mat> = (0..s.m.rows).map(|_| &phi).collect();
        let bd = Mat::block_diag(&blocks);
        Semi { e: s.e % small.degree(), m: bd.mul(small, &rm) }
    }

    /// Flattened vector over `small` back to a vector over `big`.
    pub fn lift(&self, big: &Field, v: &[El]) -> Vec<El> {
        let alpha = big.gen();
        v.chunks(self.d)
            .map(|c| {
                let mut t = 0;
                for (i, &ci) in c.iter().enumerate() {
                    t = big.add(t, big.mul(self.embed[ci as usize], big.pow(alpha, i as i64)));
                }
                t
            })
            .collect()
    }

    pub fn flatten(&self, v: &[El]) -> Vec<El> {
        v.iter().flat_map(|&t| self.coords(t).to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn gf(q: u64) -> Field {
        Field::from_order(q).unwrap()
    }

    #[test]
    fn canonical_subspace_examples() {
        let f = gf(2);
        let s = canonical_subspace(&f, 2, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(s.rows, vec![1, 0, 0, 1]);
        let s = canonical_subspace(&f, 3, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(s.k, 2);
        assert_eq!(s.basis(), vec![vec![1, 0, 1], vec![0, 1, 1]]);
        let f5 = gf(5);
        let s = canonical_subspace(&f5, 3, &[vec![0, 3, 2]]);
        assert_eq!(s.rows, vec![0, 1, f5.div(2, 3)]);
    }

    #[test]
    fn inverse_det_nullspace() {
        let f = gf(7);
        let m = Mat::from_rows(&[vec![1, 2, 3], vec![0, 1, 4], vec![5, 6, 0]]);
        let inv = m.inverse(&f).unwrap();
        assert!(m.mul(&f, &inv).is_identity());
        assert_ne!(m.det(&f), 0);
        let sing = Mat::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(sing.det(&f), 0);
        let ns = sing.nullspace(&f);
        assert_eq!(ns.rows, 1);
        assert_eq!(vec_mat(&f, ns.row(0), &sing.transpose()), vec![0, 0]);
    }

    #[test]
    fn transvection_is_symplectic() {
        let f = gf(3);
        let form = ClassicalForm::symplectic(&f, 4);
        let v = vec![1, 2, 0, 1];
        // t_v : x ↦ x + B(x, v) v
        let mut t = Mat::identity(4);
        for i in 0..4 {
            let mut e = vec![0; 4];
            e[i] = 1;
            let c = form.bilinear(&f, &e, &v);
            for j in 0..4 {
                t.set(i, j, f.add(t.at(i, j), f.mul(c, v[j])));
            }
        }
        assert!(form.is_isometry_mat(&f, &Mat::identity(4)));
        assert!(form.is_isometry_mat(&f, &t));
        assert_eq!(eigenspace_dim(&f, &t, 1), 3);
    }

    #[test]
    fn non_norm_diagonal_is_not_unitary() {
        let f = gf(4);
        let form = ClassicalForm::hermitian(&f, 2);
        let g = f.gen(); // norm g^{q+1} = g^3 = 1 over GF(4)/GF(2)... choose via the norm
        // every nonzero element of GF(4) has norm t^3 = 1, so use GF(16)/GF(4)
        let _ = g;
        let f16 = gf(16);
        let form16 = ClassicalForm::hermitian(&f16, 2);
        let a = f16.gen();
        let d = Mat::diag(&[a, 1]);
        assert!(!form16.is_isometry_mat(&f16, &d));
        let norm1 = f16.pow(a, 3); // order 5 = q+1
        let d = Mat::diag(&[norm1, f16.inv(f16.frob(norm1, 2))]);
        assert!(form16.is_isometry_mat(&f16, &d));
        assert!(form.is_isometry_mat(&f, &Mat::identity(2)));
    }

    #[test]
    fn scalar_extension_of_minus_form_is_plus() {
        let f2 = gf(2);
        let f4 = gf(4);
        let minus = ClassicalForm::quadratic(&f2, FormKind::QuadMinus, 8, 0);
        let c4 = minus.quad.clone().unwrap();
        let ext = ClassicalForm::from_quadratic(&f4, FormKind::QuadPlus, c4);
        // Witt index 4 witness: a totally singular 4-space
        let (p, std) = standardize_quadratic(&f4, &ext).unwrap();
        assert_eq!(std.kind, FormKind::QuadPlus);
        let ts = canonical_subspace(&f4, 8, &p.row_vecs()[..4]);
        assert_eq!(classify_subspace(&f4, &ext, &ts, 4).unwrap(), TypeLabel::TotallySingular);
        // over GF(2) it stays minus
        let (_, s2) = standardize_quadratic(&f2, &minus).unwrap();
        assert_eq!(s2.kind, FormKind::QuadMinus);
    }

    #[test]
    fn hyperbolic_pair_is_plus_and_anisotropic_plane() {
        for q in [2u64, 3, 4, 5] {
            let f = gf(q);
            let form = ClassicalForm::quadratic(&f, FormKind::QuadPlus, 4, 0);
            let hp = canonical_subspace(&f, 4, &[vec![1, 0, 0, 0], vec![0, 0, 1, 0]]);
            assert_eq!(classify_subspace(&f, &form, &hp, 4).unwrap(), TypeLabel::NondegPlus);
            let mform = ClassicalForm::quadratic(&f, FormKind::QuadMinus, 4, 0);
            let an = canonical_subspace(&f, 4, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
            assert_eq!(classify_subspace(&f, &mform, &an, 4).unwrap(), TypeLabel::Anisotropic);
            assert_eq!(classify_restricted(&f, &mform), TypeLabel::NondegMinus);
        }
    }

    #[test]
    fn restriction_of_scalars() {
        let f2 = gf(2);
        let f4 = gf(4);
        let rs = ScalarRestriction::new(&f4, &f2).unwrap();
        let m = rs.mult_matrix(&f4, f4.gen());
        // companion matrix of x² + x + 1: 1 ↦ α, α ↦ α² = α + 1
        assert_eq!(m, Mat::from_rows(&[vec![0, 1], vec![1, 1]]));
        let f16 = gf(16);
        let rs16 = ScalarRestriction::new(&f16, &f2).unwrap();
        assert!(rs16.restrict_mat(&f16, &Mat::identity(3)).is_identity());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let a = Mat { rows: 3, cols: 3, d: (0..9).map(|_| rng.gen_range(0..16)).collect() };
            let Ok(ai) = a.inverse(&f16) else { continue };
            let prod = rs16.restrict_mat(&f16, &a).mul(&f2, &rs16.restrict_mat(&f16, &ai));
            assert!(prod.is_identity());
            let b = Mat { rows: 3, cols: 3, d: (0..9).map(|_| rng.gen_range(0..16)).collect() };
            assert_eq!(
                rs16.restrict_mat(&f16, &a.mul(&f16, &b)),
                rs16.restrict_mat(&f16, &a).mul(&f2, &rs16.restrict_mat(&f16, &b))
            );
            // semilinear maps restrict compatibly with application
            let s = Semi { e: 1, m: a.clone() };
            let rsm = rs16.restrict_semi(&f16, &f2, &s);
            let v: Vec<El> = (0..3).map(|_| rng.gen_range(0..16)).collect();
            assert_eq!(rs16.flatten(&s.apply(&f16, &v)), rsm.apply(&f2, &rs16.flatten(&v)));
        }
    }

    #[test]
    fn spinor_norm_of_reflection_products() {
        let f = gf(3);
        let form = ClassicalForm::quadratic(&f, FormKind::QuadOdd, 5, 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let u = vec![0, 0, 0, 0, 1]; // Q = 1
        let v = vec![1, 0, 1, 0, 0]; // Q = 1 (e1 + f1)
        let w = vec![1, 0, 2, 0, 0]; // Q = 2 (nonsquare)
        let ru = reflection(&f, &form, &u);
        let rv = reflection(&f, &form, &v);
        let rw = reflection(&f, &form, &w);
        assert!(form.is_isometry_mat(&f, &ru));
        let (_, sq) = spinor_norm(&f, &form, &ru.mul(&f, &rv), &mut rng);
        assert!(sq);
        let (_, sq) = spinor_norm(&f, &form, &ru.mul(&f, &rw), &mut rng);
        assert!(!sq);
    }

    #[test]
    fn dickson_of_transvection_is_one() {
        let f = gf(4);
        let form = ClassicalForm::quadratic(&f, FormKind::QuadPlus, 4, 0);
        let r = reflection(&f, &form, &[1, 0, 1, 0]);
        assert!(form.is_isometry_mat(&f, &r));
        assert_eq!(dickson_invariant(&f, &r), 1);
        assert_eq!(dickson_invariant(&f, &r.mul(&f, &reflection(&f, &form, &[0, 1, 0, 1]))), 0);
    }
}
