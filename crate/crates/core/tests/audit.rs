//! Order-arithmetic audits against a floating-point re-evaluation of each
//! inequality (rows within 1e-9 of equality are skipped).

use gfact::orderarith::{audit_claim, ScanRange};

fn p_part(mut x: u64, p: u64) -> f64 {
    let mut out = 1.0;
    while x % p == 0 {
        x /= p;
        out *= p as f64;
    }
    out
}

/// (r, f) with q = r^f
fn split(q: u64) -> (u64, u64) {
    let r = (2..=q).find(|d| q % d == 0).unwrap();
    let mut f = 0;
    let mut x = q;
    while x > 1 {
        x /= r;
        f += 1;
    }
    (r, f)
}

fn divisors(n: u64) -> Vec<u64> {
    (2..=n).filter(|d| n % d == 0).collect()
}

/// Compare every row with `oracle(tuple) -> Option<(lhs, rhs)>` in log scale.
fn check(claim: &str, oracle: impl Fn(&[u64]) -> (f64, f64)) -> usize {
    let r = audit_claim(claim, ScanRange::default()).unwrap();
    let mut compared = 0;
    for row in &r.rows {
        let (lhs, rhs) = oracle(&row.tuple);
        if (lhs - rhs).abs() < 1e-9 {
            continue;
        }
        assert_eq!(row.satisfied, lhs <= rhs, "{claim} {:?}: {lhs} vs {rhs}", row.tuple);
        compared += 1;
    }
    compared
}

#[test]
fn kappa_gt1_rows_match_float_oracle() {
    let r = audit_claim("psl-kappa-gt1", ScanRange::default()).unwrap();
    let mut compared = 0;
    for row in &r.rows {
        let (n, q) = (row.tuple[0], row.tuple[1]);
        let (p, f) = split(q);
        let lq = (q as f64).ln();
        let nf = n as f64;
        let mut best = f64::NEG_INFINITY;
        let mut lhs = 0.0;
        for l in divisors(n) {
            for k in divisors(n - 1) {
                let a = p_part(2 * f, p) * p_part(l * k, p);
                lhs = nf * (nf - 1.0) / 2.0 * lq;
                let rhs = a.ln()
                    + (nf / 2.0) * (nf / l as f64 - 1.0) * lq
                    + ((nf - 1.0) / 2.0) * ((nf - 1.0) / k as f64 - 1.0) * lq;
                best = best.max(rhs);
            }
        }
        if best == f64::NEG_INFINITY || (lhs - best).abs() < 1e-9 {
            continue;
        }
        assert_eq!(row.satisfied, lhs <= best, "{:?}", row.tuple);
        compared += 1;
    }
    assert!(compared > 600);
    assert!(r.satisfying.is_empty());
}

#[test]
fn kappa_eq1_and_unitary_rows_match_float_oracle() {
    for claim in ["psl-kappa-eq1", "psu-ell"] {
        let c = check(claim, |t| {
            let (n, q, l) = (t[0] as f64, t[1], t[2]);
            let (p, f) = split(q);
            let lq = (q as f64).ln();
            let lhs = n * (n - 1.0) / 2.0 * lq;
            let rhs = p_part(2 * f * t[2], p).ln()
                + (n / 2.0) * (n / l as f64 - 1.0) * lq
                + (n - 1.0) * (n - 2.0) / 2.0 * lq
                - ((n - l as f64) / 2.0) * (n / l as f64 - 2.0) * lq;
            (lhs, rhs)
        });
        assert!(c > 1000, "{claim}: {c}");
    }
    let eq1 = audit_claim("psl-kappa-eq1", ScanRange::default()).unwrap();
    let got: Vec<Vec<u64>> = eq1.satisfying.into_iter().collect();
    assert_eq!(got, vec![vec![2, 2], vec![2, 4], vec![4, 2], vec![16, 2]]);
}

#[test]
fn sp_never_rows_match_float_oracle() {
    let c = check("psl-sp-never", |t| {
        let (n, q, l) = (t[0] as f64, t[1], t[2] as f64);
        let (p, f) = split(q);
        let lhs = (n * n / 4.0 + n / 2.0 - 0.25 - n * n / (2.0 * l)) * (q as f64).ln();
        (lhs, p_part(2 * t[2] * f, p).ln())
    });
    assert!(c > 400);
}

#[test]
fn borel_claim_uses_minimal_degrees() {
    let r = audit_claim("psp-borel", ScanRange::default()).unwrap();
    for row in &r.rows {
        let q = row.tuple[0];
        let (_, f) = split(q);
        // Sp4(2) ≅ Sym(6) on 6 points, PSp4(3) on 27, otherwise the points of PG(3, q)
        let m = match q {
            2 => 6,
            3 => 27,
            _ => (q.pow(4) - 1) / (q - 1),
        };
        assert_eq!(row.satisfied, m <= 4 * f * (q * q + 1), "q = {q}");
    }
}

#[test]
fn orthogonal_indices_all_hold() {
    let r = audit_claim("po-indices", ScanRange::default()).unwrap();
    assert!(r.exact_match() && r.rows.iter().all(|x| x.satisfied));
}

#[test]
fn unknown_claim_is_an_error() {
    assert!(audit_claim("no-such-claim", ScanRange::default()).is_err());
}
