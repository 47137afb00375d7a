mod common;

use gfact::ff::{El, Field};
use gfact::grpgen::{classical_group, GroupSpec};
use gfact::linalg::{canonical_subspace, classify_subspace, vec_mat, ClassicalForm, FormKind, Mat};
use gfact::normfact::{
    cyclic_class_reps, explore_all_pairs, normalizer_cyclic, test_normalizer_factorization, Caps, PermGroup, Strategy, Verdict,
};
use gfact::orderarith::{centre_order, group_order, p_part, zsigmondy, Family, Variant};
use gfact::permgrp::{orbit, orbit_lengths, stabilizer, symmetric_gens, Perm};
use gfact::table1::ScenarioConfig;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

const FIELDS: &[u64] = &[2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 121, 125, 128, 256];

fn field(i: usize) -> Field {
    Field::from_order(FIELDS[i % FIELDS.len()]).unwrap()
}

fn random_perm(n: usize, seed: u64) -> Perm {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<u32> = (0..n as u32).collect();
    v.shuffle(&mut rng);
    Perm::from_images(v).unwrap()
}

fn sym(n: usize) -> PermGroup {
    PermGroup::new(format!("Sym({n})"), n, symmetric_gens(n), None, 1).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_ring_laws(i in 0usize..17, a in any::<u16>(), b in any::<u16>(), c in any::<u16>()) {
        let f = field(i);
        let q = f.order() as u16;
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        prop_assert_eq!(f.frob(a, f.degree()), a);
    }

    #[test]
    fn perm_group_laws(n in 1usize..40, s1 in any::<u64>(), s2 in any::<u64>()) {
        let (p, q) = (random_perm(n, s1), random_perm(n, s2));
        prop_assert_eq!(p.mul(&q).inv(), q.inv().mul(&p.inv()));
        prop_assert_eq!(p.conj(&q).order(), p.order());
        prop_assert_eq!(p.pow(p.order() as i64), Perm::identity(n));
    }

    #[test]
    fn orbit_stabilizer(n in 2usize..9, s1 in any::<u64>(), s2 in any::<u64>(), pt in any::<u32>()) {
        let gens = vec![random_perm(n, s1), random_perm(n, s2)];
        let g = PermGroup::new("G", n, gens.clone(), None, 1).unwrap();
        let lens = orbit_lengths(&gens, n);
        prop_assert_eq!(lens.iter().sum::<u64>(), n as u64);
        for l in &lens {
            prop_assert!((g.order() % BigUint::from(*l)) == BigUint::from(0u32));
        }
        let pt = pt % n as u32;
        let (_, stab) = stabilizer(n, &gens, pt, 1);
        prop_assert_eq!(stab * BigUint::from(orbit(&gens, pt).len()), g.order());
    }

    #[test]
    fn canonical_subspace_ignores_basis(i in 0usize..6, seed in any::<u64>()) {
        let f = field(i);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        use rand::Rng;
        let n = 5;
        let rows: Vec<Vec<El>> = (0..3).map(|_| (0..n).map(|_| rng.gen_range(0..f.order()) as El).collect()).collect();
        let s = canonical_subspace(&f, n, &rows);
        let mix: Vec<Vec<El>> = (0..3).map(|_| (0..3).map(|_| rng.gen_range(0..f.order()) as El).collect()).collect();
        let mm = Mat::from_rows(&mix);
        prop_assume!(mm.det(&f) != 0);
        let new_rows = mm.mul(&f, &Mat::from_rows(&rows)).row_vecs();
        prop_assert_eq!(canonical_subspace(&f, n, &new_rows), s);
    }

    #[test]
    fn isometries_preserve_subspace_type(q in prop::sample::select(vec![2u64, 3, 4, 5]), seed in 1u64..1000, vseed in any::<u64>()) {
        let spec: GroupSpec = format!("OmegaMinus:6:{q}").parse().unwrap();
        let g = classical_group(&spec, seed).unwrap();
        let form = g.form.clone().unwrap();
        let f = &g.field;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(vseed);
        use rand::Rng;
        let rows: Vec<Vec<El>> = (0..2).map(|_| (0..6).map(|_| rng.gen_range(0..f.order()) as El).collect()).collect();
        let s = canonical_subspace(f, 6, &rows);
        let t = classify_subspace(f, &form, &s, 6).unwrap();
        for e in &g.gens {
            let img: Vec<Vec<El>> = s.basis().iter().map(|v| vec_mat(f, v, &e.s.m)).collect();
            let s2 = canonical_subspace(f, 6, &img);
            prop_assert_eq!(classify_subspace(f, &form, &s2, 6).unwrap(), t);
        }
    }

    #[test]
    fn generators_preserve_forms(idx in 0usize..15, seed in 1u64..10_000) {
        let spec: GroupSpec = common::ORDER_SPECS[idx].parse().unwrap();
        let g = classical_group(&spec, seed).unwrap();
        prop_assert!(g.check_forms(false).is_ok());
    }

    #[test]
    fn p_part_is_multiplicative(a in 1u64..1_000_000, b in 1u64..1_000_000, p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
        let (a, b) = (BigUint::from(a), BigUint::from(b));
        prop_assert_eq!(p_part(&(&a * &b), p), p_part(&a, p) * p_part(&b, p));
    }

    #[test]
    fn simple_times_centre_is_linear(n in 2u64..=8, q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9])) {
        for fam in [Family::SL, Family::SU] {
            let s = group_order(fam, n, q, Variant::Simple).unwrap();
            let l = group_order(fam, n, q, Variant::Linear).unwrap();
            prop_assert_eq!(s * BigUint::from(centre_order(fam, n, q)), l);
        }
        if n % 2 == 0 {
            let s = group_order(Family::Sp, n, q, Variant::Simple).unwrap();
            let l = group_order(Family::Sp, n, q, Variant::Linear).unwrap();
            prop_assert_eq!(s * BigUint::from(centre_order(Family::Sp, n, q)), l);
        }
    }

    #[test]
    fn ppds_are_primitive(q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32]), n in 2u64..=12) {
        let r = zsigmondy(q, n).unwrap();
        for &t in &r.ppds {
            prop_assert_eq!((t - 1) % n as u128, 0);
            prop_assert_eq!(((q as u128).pow(n as u32) - 1) % t, 0);
            for k in 1..n {
                prop_assert_ne!(((q as u128).pow(k as u32) - 1) % t, 0);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// Replacing x and y by random conjugates never changes the verdict.
    #[test]
    fn verdicts_are_conjugation_invariant(s1 in any::<u64>(), s2 in any::<u64>(), which in 0usize..3) {
        let (n, x, y) = [
            (5, Perm::from_cycles(5, &[&[1, 2]]), Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]])),
            (5, Perm::from_cycles(5, &[&[1, 2], &[3, 4]]), Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]])),
            (6, Perm::from_cycles(6, &[&[1, 2]]), Perm::from_cycles(6, &[&[1, 2, 3, 4, 5, 6]])),
        ][which].clone();
        let g = sym(n);
        let base = test_normalizer_factorization(&g, &x, &y, Strategy::Auto, Caps::default(), 1).unwrap().verdict;
        let (a, b) = (random_perm(n, s1), random_perm(n, s2));
        let v = test_normalizer_factorization(&g, &x.conj(&a), &y.conj(&b), Strategy::Auto, Caps::default(), 1).unwrap().verdict;
        prop_assert_eq!(v, base);
    }

    /// Both strategies agree whenever both decide.
    #[test]
    fn strategies_agree(n in 4usize..=6, s1 in any::<u64>(), s2 in any::<u64>()) {
        let g = sym(n);
        let (x, y) = (random_perm(n, s1), random_perm(n, s2));
        prop_assume!(!x.is_identity() && !y.is_identity());
        let e = test_normalizer_factorization(&g, &x, &y, Strategy::EnumerateIntersection, Caps::default(), 1).unwrap().verdict;
        let t = test_normalizer_factorization(&g, &x, &y, Strategy::GeometricTransitivity, Caps::default(), 1).unwrap().verdict;
        prop_assume!(e != Verdict::InconclusiveCap && t != Verdict::InconclusiveCap);
        prop_assert_eq!(e, t);
    }

    #[test]
    fn centralizer_in_normalizer(n in 3usize..=7, s in any::<u64>()) {
        let g = sym(n);
        let x = random_perm(n, s);
        prop_assume!(!x.is_identity());
        let nx = normalizer_cyclic(&g, &x, 1).unwrap();
        let nb = nx.normalizer.bsgs(n, 1).unwrap();
        prop_assert!(nx.centralizer.gens.iter().all(|c| nb.contains(c)));
        prop_assert_eq!(gfact::normfact::euler_phi(x.order()) % nx.index(), 0);
        prop_assert_eq!(&nx.normalizer.order / &nx.centralizer.order, BigUint::from(nx.index()));
    }

    #[test]
    fn restriction_lemma(seed in any::<u64>()) {
        let (agree, _, _) = common::restriction_triples(seed, 5);
        prop_assert!(agree);
    }

    #[test]
    fn config_rejects_zero_caps_and_unknown_keys(line in 1u32..=14, cap in 0u64..3) {
        let ok = format!("line = {line}\nelement_cap = {cap}\n").parse::<ScenarioConfig>();
        prop_assert_eq!(ok.is_ok(), cap > 0);
        let bad = format!("line = {line}\ncolour = red\n");
        prop_assert!(bad.parse::<ScenarioConfig>().is_err());
    }
}

/// A factorizing composite pair implies its derived prime-order pairs factorize.
#[test]
fn prime_order_monotonicity() {
    for n in [5, 6] {
        let g = sym(n);
        let ex = explore_all_pairs(&g, true, Caps::default(), 1).unwrap();
        let all = cyclic_class_reps(&g, false, 1 << 20, 1).unwrap();
        for p in &ex.composite_pairs {
            let reps: Vec<_> = all.iter().filter(|c| c.class_id == p.i || c.class_id == p.j).collect();
            let x = &reps.iter().find(|c| c.class_id == p.i).unwrap().rep;
            let y = &reps.iter().find(|c| c.class_id == p.j).unwrap().rep;
            for px in gfact::ff::prime_divisors(x.order()) {
                for py in gfact::ff::prime_divisors(y.order()) {
                    let xp = x.pow((x.order() / px) as i64);
                    let yp = y.pow((y.order() / py) as i64);
                    let v = test_normalizer_factorization(&g, &xp, &yp, Strategy::Auto, Caps::default(), 1).unwrap().verdict;
                    assert_eq!(v, Verdict::Factorizes, "Sym({n}) composite pair {} / {}", p.x_cycles, p.y_cycles);
                }
            }
        }
    }
}

#[test]
fn exhaustive_semiregularity_small_n() {
    let (ok, detail) = common::semiregular_exhaustive(7);
    assert!(ok, "{detail}");
}

#[test]
fn order_formula_matches_schreier_sims() {
    let (ok, detail) = common::order_vs_bsgs();
    assert!(ok, "{detail}");
}

#[test]
fn minus_form_over_gf4_is_plus_after_extension() {
    let f2 = Field::from_order(2).unwrap();
    let f4 = Field::from_order(4).unwrap();
    let emb = f4.embedding(&f2).unwrap();
    let v2 = ClassicalForm::quadratic(&f2, FormKind::QuadMinus, 8, 0);
    let ext = ClassicalForm::from_quadratic(&f4, FormKind::QuadPlus, v2.quad.unwrap().map(|a| emb[a as usize]));
    // plus type: (q⁴ - 1)(q³ + 1)/(q - 1) singular points
    let sing = gfact::linalg::projective_points(&f4, 8).iter().filter(|v| ext.quad_value(&f4, v) == 0).count();
    assert_eq!(sing, 255 * 65 / 3);
}
