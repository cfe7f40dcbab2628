#![allow(dead_code)]

use cmwild::family::FamilySpec;
use cmwild::linalg::Matrix;
use cmwild::wildness::RegularSequence;
use cmwild::{Monomial, Polynomial, PrimeField, QuotientRingSpec};
use rand::Rng;

pub fn ring(vars: &[&str], rels: &[&str], p: u32) -> QuotientRingSpec {
    QuotientRingSpec::parse(vars, rels, p).unwrap()
}

pub fn fermat_quartic(p: u32) -> QuotientRingSpec {
    ring(&["x", "y", "z"], &["x^4+y^4+z^4"], p)
}

pub fn binary_quartic(p: u32) -> QuotientRingSpec {
    ring(&["x", "y"], &["x^4+y^4"], p)
}

pub fn sequence(r: &QuotientRingSpec, items: &[&str]) -> RegularSequence {
    let ys = items.iter().map(|s| r.parse_poly(s).unwrap()).collect();
    RegularSequence::unverified(ys).unwrap().verify(r).unwrap()
}

/// Rank by plain Gaussian elimination, kept separate from the library.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let c = rows[r][col];
                let pivot = rows[rank].clone();
                for (v, &w) in rows[r].iter_mut().zip(&pivot) {
                    *v = (*v + p * p - c * w % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, p: u32) -> Matrix {
    let rows: Vec<Vec<u32>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
    Matrix::from_rows(&rows).unwrap()
}

pub fn random_invertible<R: Rng>(rng: &mut R, n: usize, f: PrimeField) -> Matrix {
    loop {
        let m = random_matrix(rng, n, f.char());
        if m.is_invertible(f) {
            return m;
        }
    }
}

/// Every `n x n` matrix over `F_p`, by enumeration.
pub fn all_matrices(n: usize, p: u32) -> Vec<Matrix> {
    let total = (p as usize).pow((n * n) as u32);
    (0..total)
        .map(|mut k| {
            let mut data = vec![0u32; n * n];
            for v in data.iter_mut() {
                *v = (k % p as usize) as u32;
                k /= p as usize;
            }
            Matrix { rows: n, cols: n, data }
        })
        .collect()
}

/// Whether some invertible `s` has `s A_k = B_k s` for every `k`.
pub fn brute_force_conjugate(a: &[Matrix], b: &[Matrix], n: usize, f: PrimeField) -> bool {
    all_matrices(n, f.char()).into_iter().filter(|s| s.is_invertible(f)).any(|s| a.iter().zip(b).all(|(x, y)| s.mul(x, f) == y.mul(&s, f)))
}

pub fn quartic_frame() -> (QuotientRingSpec, RegularSequence, i32) {
    let r = fermat_quartic(32003);
    let y = sequence(&r, &["x^2", "y^2"]);
    (r, y, 4)
}

pub fn binary_frame() -> (QuotientRingSpec, RegularSequence, i32) {
    let r = binary_quartic(32003);
    let y = sequence(&r, &["x^2"]);
    (r, y, 3)
}

/// Random member over a base frame; two-parameter when `R̄_c` allows it.
pub fn random_spec<R: Rng>(rng: &mut R, frame: &(QuotientRingSpec, RegularSequence, i32), n: usize) -> FamilySpec {
    let (r, y, c) = frame;
    let p = r.field().char();
    let two = r.with_relations(&y.elements).unwrap().hilbert_dim(*c) >= 3;
    let count = if two { 3 } else { 2 };
    let basis = FamilySpec::default_basis(r, y, *c, count).unwrap();
    let ax = random_matrix(rng, n, p);
    let ay = two.then(|| random_matrix(rng, n, p));
    FamilySpec::new(r.clone(), y.clone(), *c, basis, ax, ay).unwrap()
}

/// `dim (S/I)_t` as the corank of the span of all `m * g` in degree `t`.
pub fn hilbert_oracle(gens: &[Polynomial], nvars: usize, t: u32) -> usize {
    let monos = Monomial::all_of_degree(nvars, t);
    let index = |m: &Monomial| monos.iter().position(|x| x == m).unwrap();
    let mut rows = Vec::new();
    for g in gens {
        let Some(dg) = g.homogeneous_degree() else { continue };
        if dg > t {
            continue;
        }
        for m in Monomial::all_of_degree(nvars, t - dg) {
            let mut row = vec![0u64; monos.len()];
            for (mono, c) in g.mul_term(&m, 1).terms() {
                row[index(mono)] = *c as u64;
            }
            rows.push(row);
        }
    }
    let p = gens.first().map_or(2, |g| g.field().char()) as u64;
    monos.len() - rank_mod_p(rows, p)
}
