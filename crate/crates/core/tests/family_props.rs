mod common;

use cmwild::family::{self, FamilySpec};
use cmwild::intertwine::{indecomposability_test, iso_test_matrices, Indecomposability, IsoOutcome};
use cmwild::linalg::Matrix;
use cmwild::resolution::{betti_table, in_submodule, resolve_module};
use cmwild::PrimeField;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn conj(s: &Matrix, a: &Matrix, f: PrimeField) -> Matrix {
    s.mul(a, f).mul(&s.inverse(f).unwrap(), f)
}

/// Some idempotent other than `0` and `I` commutes with every matrix.
fn brute_force_decomposable(mats: &[Matrix], n: usize, f: PrimeField) -> bool {
    let id = Matrix::identity(n);
    common::all_matrices(n, f.char())
        .into_iter()
        .any(|e| !e.is_zero() && e != id && e.mul(&e, f) == e && mats.iter().all(|m| m.mul(&e, f) == e.mul(m, f)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Conjugate parameters give isomorphic members whose syzygy modules
    /// have identical Hilbert series and Betti tables.
    #[test]
    fn conjugate_members_have_equal_invariants(seed in any::<u64>(), n in 1usize..=2) {
        let frame = common::quartic_frame();
        let f = frame.0.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_spec(&mut rng, &frame, n);
        let s = common::random_invertible(&mut rng, n, f);
        let b = a.with_matrices(conj(&s, &a.ax, f), a.ay.as_ref().map(|m| conj(&s, m, f))).unwrap();
        let cert = family::iso_test(&a, &b, 0).unwrap();
        let sigma = cert.sigma().unwrap();
        for (x, y) in a.matrices().into_iter().zip(b.matrices()) {
            prop_assert_eq!(sigma.mul(x, f), y.mul(&sigma, f));
        }
        let (ma, mb) = (family::mcm_module(&a).unwrap(), family::mcm_module(&b).unwrap());
        prop_assert!(ma.mcm_verified && mb.mcm_verified);
        prop_assert_eq!(ma.omega.hilbert_series().unwrap(), mb.omega.hilbert_series().unwrap());
        prop_assert_eq!(betti_table(&ma.resolution), betti_table(&mb.resolution));
        let (ra, rb) = (resolve_module(&ma.omega, 1).unwrap(), resolve_module(&mb.omega, 1).unwrap());
        prop_assert_eq!(betti_table(&ra), betti_table(&rb));
    }

    #[test]
    fn random_members_pass_structural_checks(seed in any::<u64>(), quartic in any::<bool>(), n in 1usize..=3) {
        let frame = if quartic { common::quartic_frame() } else { common::binary_frame() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = common::random_spec(&mut rng, &frame, n);
        let mcm = family::mcm_module(&spec).unwrap();
        prop_assert!(mcm.mcm_verified);
        let l23 = family::verify_lemma23_with(&spec, &mcm).unwrap();
        prop_assert!(l23.pass, "{:?}", l23.table);
        prop_assert_eq!(l23.generators, n);
        let l25 = family::verify_lemma25_with(&spec, &mcm.resolution).unwrap();
        prop_assert!(l25.pass);
        for st in &l25.steps {
            prop_assert!(st.complement_degrees.iter().all(|&e| e >= spec.c + st.i as i32 - 1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn iso_matches_brute_force(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3]), n in 1usize..=2, two in any::<bool>()) {
        let f = PrimeField::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = if two { 2 } else { 1 };
        let a: Vec<Matrix> = (0..k).map(|_| common::random_matrix(&mut rng, n, p)).collect();
        // half the time a conjugate pair, otherwise independent
        let b: Vec<Matrix> = if rng.gen_bool(0.5) {
            let s = common::random_invertible(&mut rng, n, f);
            a.iter().map(|m| conj(&s, m, f)).collect()
        } else {
            (0..k).map(|_| common::random_matrix(&mut rng, n, p)).collect()
        };
        let ar: Vec<&Matrix> = a.iter().collect();
        let br: Vec<&Matrix> = b.iter().collect();
        let cert = iso_test_matrices(&ar, &br, n, f, seed).unwrap();
        let oracle = common::brute_force_conjugate(&a, &b, n, f);
        match &cert.outcome {
            IsoOutcome::Isomorphic { .. } => {
                prop_assert!(oracle);
                let s = cert.sigma().unwrap();
                prop_assert!(s.is_invertible(f));
                for (x, y) in a.iter().zip(&b) {
                    prop_assert_eq!(s.mul(x, f), y.mul(&s, f));
                }
            }
            IsoOutcome::NotIsomorphic { .. } => prop_assert!(!oracle),
            IsoOutcome::Undecided { .. } => prop_assert!(false, "undecided at n <= 2 over a small field"),
        }
    }

    #[test]
    fn indecomposability_matches_brute_force(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 5]), n in 1usize..=2) {
        let f = PrimeField::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mats: Vec<Matrix> = (0..2).map(|_| common::random_matrix(&mut rng, n, p)).collect();
        let refs: Vec<&Matrix> = mats.iter().collect();
        let got = indecomposability_test(&refs, n, f, seed).unwrap();
        let oracle = brute_force_decomposable(&mats, n, f);
        match got {
            Indecomposability::Decomposable { idempotent } => {
                prop_assert!(oracle);
                let e = Matrix::from_rows(&idempotent).unwrap();
                prop_assert_eq!(e.mul(&e, f), e.clone());
                for m in &mats {
                    prop_assert_eq!(m.mul(&e, f), e.mul(m, f));
                }
            }
            Indecomposability::Indecomposable { .. } => prop_assert!(!oracle),
            Indecomposability::Undecided { .. } => prop_assert!(false, "undecided on a tiny commutant"),
        }
    }
}

/// Indecomposability over a large field, where only the structural
/// arguments are available, against block-diagonal constructions.
#[test]
fn indecomposability_large_field() {
    let f = PrimeField::new(32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let n1 = rng.gen_range(1..=2);
        let n2 = rng.gen_range(1..=2);
        let n = n1 + n2;
        let mut mats = Vec::new();
        for _ in 0..2 {
            let (a, b) = (common::random_matrix(&mut rng, n1, 32003), common::random_matrix(&mut rng, n2, 32003));
            let mut m = Matrix::zeros(n, n);
            for i in 0..n1 {
                for j in 0..n1 {
                    m.set(i, j, a.get(i, j));
                }
            }
            for i in 0..n2 {
                for j in 0..n2 {
                    m.set(n1 + i, n1 + j, b.get(i, j));
                }
            }
            mats.push(m);
        }
        let s = common::random_invertible(&mut rng, n, f);
        let mats: Vec<Matrix> = mats.iter().map(|m| conj(&s, m, f)).collect();
        let refs: Vec<&Matrix> = mats.iter().collect();
        let got = indecomposability_test(&refs, n, f, 0).unwrap();
        assert!(matches!(got, Indecomposability::Decomposable { .. }), "{got:?}");
    }
    // a single nilpotent Jordan block of size 3 commutes only with polynomials in it
    let j = Matrix::from_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]).unwrap();
    let z = Matrix::zeros(3, 3);
    let got = indecomposability_test(&[&j, &z], 3, f, 0).unwrap();
    assert!(matches!(got, Indecomposability::Indecomposable { .. }));
}

/// At `n = 1`, distinct parameters `(a, b)` give non-isomorphic members,
/// and the relation of one member is not a relation of the other.
#[test]
fn distinct_scalars_are_not_isomorphic() {
    let (r, y, c) = common::quartic_frame();
    let basis = FamilySpec::default_basis(&r, &y, c, 3).unwrap();
    let scalar = |v: u32| Matrix::from_rows(&[vec![v]]).unwrap();
    let make = |a: u32, b: u32| FamilySpec::new(r.clone(), y.clone(), c, basis.clone(), scalar(a), Some(scalar(b))).unwrap();
    let params = [(0, 0), (1, 0), (0, 1), (2, 5), (5, 2), (32002, 7)];
    for &(a, b) in &params {
        for &(a2, b2) in &params {
            let (s, t) = (make(a, b), make(a2, b2));
            let cert = family::iso_test(&s, &t, 0).unwrap();
            assert_eq!(cert.is_isomorphic(), (a, b) == (a2, b2));
            let m = family::build_family_member(&s).unwrap();
            let other = family::family_columns(&t);
            let contained = in_submodule(&r, &m.ambient, &m.relations, &other[0]).unwrap();
            assert_eq!(contained, (a, b) == (a2, b2));
        }
    }
}

#[test]
fn member_with_zero_matrices_splits_into_copies() {
    let (r, y, c) = common::quartic_frame();
    let basis = FamilySpec::default_basis(&r, &y, c, 3).unwrap();
    let spec = FamilySpec::new(r, y, c, basis, Matrix::zeros(2, 2), Some(Matrix::zeros(2, 2))).unwrap();
    let got = family::indecomposability_test(&spec, 0).unwrap();
    assert!(matches!(got, Indecomposability::Decomposable { .. }));
    let one = family::mcm_module(&spec.with_matrices(Matrix::zeros(1, 1), Some(Matrix::zeros(1, 1))).unwrap()).unwrap();
    let two = family::mcm_module(&spec).unwrap();
    let h1 = one.omega.hilbert_series().unwrap();
    assert_eq!(two.omega.hilbert_series().unwrap(), h1.add(&h1));
}
