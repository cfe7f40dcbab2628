mod common;

use cmwild::family;
use cmwild::groebner::GradedFreeModule;
use cmwild::module::ModulePresentation;
use cmwild::resolution::{betti_table, koszul_complex, resolve_module, Resolution};
use cmwild::wildness::RegularSequence;
use cmwild::{ModuleElem, Monomial, Polynomial, QuotientRingSpec};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_form(rng: &mut ChaCha8Rng, r: &QuotientRingSpec, deg: i32) -> Polynomial {
    if deg < 0 {
        return r.zero();
    }
    let monos = Monomial::all_of_degree(r.nvars(), deg as u32);
    let p = r.field().char();
    let mut terms = Vec::new();
    for m in monos {
        if rng.gen_bool(0.5) {
            terms.push((m, rng.gen_range(1..p)));
        }
    }
    Polynomial::from_terms(r.nvars(), r.field(), terms)
}

/// Cokernel of a random homogeneous matrix.
fn random_module(seed: u64, r: &QuotientRingSpec) -> ModulePresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = rng.gen_range(1..=2);
    let degrees: Vec<i32> = (0..rank).map(|_| rng.gen_range(0..=1)).collect();
    let cols = rng.gen_range(1..=3);
    let rels: Vec<ModuleElem> = (0..cols)
        .map(|_| {
            let d = rng.gen_range(2..=3);
            degrees.iter().map(|&e| random_form(&mut rng, r, d - e)).collect()
        })
        .collect();
    ModulePresentation::quotient(r, GradedFreeModule::new(degrees), rels).unwrap()
}

fn check_complex(res: &Resolution) {
    let ring = &res.ring;
    for w in res.maps.windows(2) {
        for col in &w[1].columns {
            let image = w[0].apply(col, ring);
            assert!(image.iter().all(|p| ring.reduce(p).is_zero()), "d∘d != 0");
        }
    }
    for (i, m) in res.maps.iter().enumerate() {
        for col in &m.columns {
            for e in col {
                assert_eq!(ring.reduce(e).constant_coeff(), 0, "unit entry in δ_{}", i + 1);
            }
        }
        assert!(m.is_minimal(ring));
    }
}

fn rings() -> Vec<QuotientRingSpec> {
    vec![
        common::ring(&["x", "y", "z"], &[], 32003),
        common::fermat_quartic(32003),
        common::binary_quartic(32003),
        common::ring(&["x", "y", "z"], &["x*y", "z^2"], 32003),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resolutions_are_minimal_exact_complexes(seed in any::<u64>(), which in 0usize..4) {
        let r = &rings()[which];
        let m = random_module(seed, r);
        let k = 3;
        let res = resolve_module(&m, k).unwrap();
        check_complex(&res);
        prop_assert!(res.is_complex().unwrap());
        for i in 1..k {
            prop_assert!(res.is_exact_at(i).unwrap(), "not exact at {}", i);
        }
        // the resolved module is the one we started with
        let aug = res.augmentation().unwrap();
        prop_assert_eq!(aug.hilbert_series().unwrap(), m.hilbert_series().unwrap());
    }

    /// Over a polynomial ring the resolution is finite and its Euler
    /// characteristic recovers the Hilbert function of the module.
    #[test]
    fn euler_characteristic_over_polynomial_ring(seed in any::<u64>()) {
        let r = &rings()[0];
        let m = random_module(seed, r);
        let res = resolve_module(&m, 4).unwrap();
        prop_assert_eq!(res.free_module(4).rank(), 0);
        for t in 0..=12 {
            let mut chi = 0i64;
            for i in 0..=3 {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                for d in res.free_module(i).degrees {
                    chi += sign * r.hilbert_dim(t - d) as i64;
                }
            }
            prop_assert_eq!(chi, m.hilbert_function(t).unwrap(), "t = {}", t);
        }
    }

    #[test]
    fn koszul_matches_minimal_for_random_linear_forms(seed in any::<u64>()) {
        let r = common::fermat_quartic(32003);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ys: Vec<Polynomial> = (0..2).map(|_| random_form(&mut rng, &r, 1)).collect();
        let y = RegularSequence::unverified(ys);
        prop_assume!(y.is_ok());
        let y = y.unwrap().verify(&r);
        prop_assume!(y.is_ok());
        let y = y.unwrap();
        let kos = koszul_complex(&r, &y.elements).unwrap();
        check_complex(&kos);
        let rows = y.elements.iter().map(|p| vec![p.clone()]).collect();
        let rbar = ModulePresentation::quotient(&r, GradedFreeModule::new(vec![0]), rows).unwrap();
        let min = resolve_module(&rbar, 2).unwrap();
        prop_assert_eq!(betti_table(&kos).to_json().betti, betti_table(&min).to_json().betti);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    /// `β_{i,j}(M) >= n β^K_{i,j}`, with equality below degree `c + i - 1`.
    #[test]
    fn koszul_part_of_family_resolution(seed in any::<u64>(), quartic in any::<bool>(), n in 1usize..=3) {
        let frame = if quartic { common::quartic_frame() } else { common::binary_frame() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = common::random_spec(&mut rng, &frame, n);
        let res = family::family_resolution(&spec).unwrap();
        check_complex(&res);
        let kos = betti_table(&koszul_complex(&spec.ring, &spec.y.elements).unwrap());
        let b = betti_table(&res);
        for i in 0..=spec.d() {
            for j in 0..=(spec.c + 2 * spec.d() as i32 + 4) {
                let (bm, bk) = (b.get(i, j), n * kos.get(i, j));
                prop_assert!(bm >= bk, "β_{{{},{}}} = {} < {}", i, j, bm, bk);
                if j < spec.c + i as i32 - 1 {
                    prop_assert_eq!(bm, bk, "i = {}, j = {}", i, j);
                }
            }
        }
    }
}

#[test]
fn residue_field_over_polynomial_ring_is_koszul() {
    let r = common::ring(&["x", "y", "z"], &[], 32003);
    let vars: Vec<ModuleElem> = (0..3).map(|i| vec![r.var(i)]).collect();
    let k = ModulePresentation::quotient(&r, GradedFreeModule::new(vec![0]), vars).unwrap();
    let res = resolve_module(&k, 4).unwrap();
    let b = betti_table(&res);
    for (i, rank) in [1, 3, 3, 1, 0].into_iter().enumerate() {
        assert_eq!(b.get(i, i as i32), rank);
        assert_eq!(b.rank(i), rank);
    }
}
