//! Dense univariate polynomials over `Z/p`, coefficients low to high.
//! Enough factoring to split a polynomial into coprime parts.

use rand::Rng;

use crate::field::PrimeField;
use crate::linalg::Matrix;

pub type UPoly = Vec<u32>;

fn trim(mut a: UPoly) -> UPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(a: &[u32], b: &[u32], f: PrimeField) -> UPoly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
}

pub fn sub(a: &[u32], b: &[u32], f: PrimeField) -> UPoly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
}

pub fn mul(a: &[u32], b: &[u32], f: PrimeField) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

pub fn monic(a: &[u32], f: PrimeField) -> UPoly {
    let a = trim(a.to_vec());
    match a.last() {
        None => a,
        Some(&lc) => {
            let inv = f.inv(lc).unwrap();
            a.iter().map(|&c| f.mul(c, inv)).collect()
        }
    }
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &[u32], b: &[u32], f: PrimeField) -> (UPoly, UPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let inv = f.inv(b[db]).unwrap();
    let mut r = trim(a.to_vec());
    let mut q = vec![0u32; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], inv);
        q[dr - db] = c;
        for i in 0..=db {
            r[dr - db + i] = f.sub(r[dr - db + i], f.mul(c, b[i]));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(a: &[u32], b: &[u32], f: PrimeField) -> UPoly {
    divrem(a, b, f).1
}

/// Monic gcd.
pub fn gcd(a: &[u32], b: &[u32], f: PrimeField) -> UPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, f);
        a = b;
        b = r;
    }
    monic(&a, f)
}

/// `(g, s, t)` with `s a + t b = g` monic.
pub fn xgcd(a: &[u32], b: &[u32], f: PrimeField) -> (UPoly, UPoly, UPoly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1): (UPoly, UPoly) = (vec![1], vec![]);
    let (mut t0, mut t1): (UPoly, UPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, f);
        r0 = std::mem::replace(&mut r1, r);
        let s = sub(&s0, &mul(&q, &s1, f), f);
        s0 = std::mem::replace(&mut s1, s);
        let t = sub(&t0, &mul(&q, &t1, f), f);
        t0 = std::mem::replace(&mut t1, t);
    }
    let lc = *r0.last().unwrap_or(&1);
    let inv = f.inv(lc).unwrap();
    let sc = |v: &UPoly| -> UPoly { trim(v.iter().map(|&c| f.mul(c, inv)).collect()) };
    (sc(&r0), sc(&s0), sc(&t0))
}

pub fn derivative(a: &[u32], f: PrimeField) -> UPoly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, f.reduce_i64(i as i64))).collect())
}

/// `base^e mod m`.
pub fn powmod(base: &[u32], mut e: u64, m: &[u32], f: PrimeField) -> UPoly {
    let mut result = rem(&[1], m, f);
    let mut b = rem(base, m, f);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &b, f), m, f);
        }
        b = rem(&mul(&b, &b, f), m, f);
        e >>= 1;
    }
    result
}

/// A nonconstant squarefree divisor of `a` (deg a >= 1).
fn squarefree_divisor(a: &[u32], f: PrimeField) -> UPoly {
    let p = f.char() as usize;
    let mut g = monic(a, f);
    loop {
        let d = derivative(&g, f);
        if d.is_empty() {
            // g is a p-th power: take the p-th root coefficientwise
            g = g.iter().step_by(p).copied().collect();
            continue;
        }
        let h = gcd(&g, &d, f);
        return monic(&divrem(&g, &h, f).0, f);
    }
}

/// One irreducible factor of a squarefree `a`, found by distinct-degree
/// and equal-degree splitting.
fn irreducible_factor<R: Rng>(a: &[u32], f: PrimeField, rng: &mut R) -> UPoly {
    let p = f.char() as u64;
    let x: UPoly = vec![0, 1];
    let rest = monic(a, f);
    let n = degree(&rest).unwrap_or(0);
    let mut xp = x.clone();
    for i in 1..=n / 2 {
        xp = powmod(&xp, p, &rest, f);
        let g = gcd(&rest, &sub(&xp, &x, f), f);
        if degree(&g).unwrap_or(0) > 0 {
            return equal_degree_factor(&g, i, f, rng);
        }
    }
    rest
}

fn equal_degree_factor<R: Rng>(g: &[u32], i: usize, f: PrimeField, rng: &mut R) -> UPoly {
    let p = f.char() as u64;
    let mut g = monic(g, f);
    while degree(&g).unwrap() > i {
        let n = degree(&g).unwrap();
        let a: UPoly = trim((0..n).map(|_| rng.gen_range(0..f.char())).collect());
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(i-1))
            let mut t = a.clone();
            let mut cur = a.clone();
            for _ in 1..i {
                cur = rem(&mul(&cur, &cur, f), &g, f);
                t = add(&t, &cur, f);
            }
            t
        } else {
            // a^((p^i - 1)/2) = prod_j (a^((p-1)/2))^(p^j)
            let h = powmod(&a, (p - 1) / 2, &g, f);
            let mut acc = h.clone();
            let mut cur = h;
            for _ in 1..i {
                cur = powmod(&cur, p, &g, f);
                acc = rem(&mul(&acc, &cur, f), &g, f);
            }
            sub(&acc, &[1], f)
        };
        let d = gcd(&g, &b, f);
        let dd = degree(&d).unwrap_or(0);
        if dd > 0 && dd < n {
            g = if dd <= n - dd { d } else { monic(&divrem(&g, &d, f).0, f) };
        }
    }
    g
}

/// Splits `a = g * h` with `gcd(g, h) = 1` and both nonconstant, or returns
/// `None` when `a` is a power of one irreducible.
pub fn coprime_split<R: Rng>(a: &[u32], f: PrimeField, rng: &mut R) -> Option<(UPoly, UPoly)> {
    let a = monic(a, f);
    if degree(&a).unwrap_or(0) == 0 {
        return None;
    }
    let q = irreducible_factor(&squarefree_divisor(&a, f), f, rng);
    let mut g = vec![1u32];
    let mut h = a;
    loop {
        let (quo, r) = divrem(&h, &q, f);
        if !r.is_empty() {
            break;
        }
        h = quo;
        g = mul(&g, &q, f);
    }
    if degree(&h).unwrap_or(0) == 0 {
        None
    } else {
        Some((g, monic(&h, f)))
    }
}

/// `a(X)` by Horner's rule.
pub fn eval_matrix(a: &[u32], x: &Matrix, f: PrimeField) -> Matrix {
    let n = x.rows;
    let mut acc = Matrix::zeros(n, n);
    for &c in a.iter().rev() {
        acc = acc.mul(x, f).add(&Matrix::identity(n).scale(c, f), f);
    }
    acc
}

/// Minimal polynomial of a square matrix via the first linear dependence
/// among `I, X, X^2, ...`.
pub fn minimal_polynomial(x: &Matrix, f: PrimeField) -> UPoly {
    let n = x.rows;
    let mut powers = vec![Matrix::identity(n).vectorize()];
    let mut cur = Matrix::identity(n);
    loop {
        cur = cur.mul(x, f);
        let target = cur.vectorize();
        let k = powers.len();
        let mut a = Matrix::zeros(n * n, k);
        for (j, v) in powers.iter().enumerate() {
            for (i, &c) in v.iter().enumerate() {
                a.set(i, j, c);
            }
        }
        if let Some(sol) = a.solve(&target, f) {
            let mut mp: UPoly = sol.iter().map(|&c| f.neg(c)).collect();
            mp.push(1);
            return mp;
        }
        powers.push(target);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gcd_and_xgcd() {
        let f = PrimeField::new(7).unwrap();
        // (x-1)(x-2) and (x-1)(x-3)
        let a = mul(&[6, 1], &[5, 1], f);
        let b = mul(&[6, 1], &[4, 1], f);
        assert_eq!(gcd(&a, &b, f), vec![6, 1]);
        let (g, s, t) = xgcd(&a, &b, f);
        assert_eq!(add(&mul(&s, &a, f), &mul(&t, &b, f), f), g);
    }

    #[test]
    fn splits_and_prime_powers() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for p in [2u32, 3, 5, 32003] {
            let f = PrimeField::new(p).unwrap();
            // x^2 + 1 squared times x
            let q = vec![1, 0, 1];
            let a = mul(&mul(&q, &q, f), &[0, 1], f);
            let (g, h) = coprime_split(&a, f, &mut rng).unwrap();
            assert_eq!(mul(&g, &h, f), monic(&a, f));
            assert_eq!(degree(&gcd(&g, &h, f)), Some(0));
            // a pure power of x^2+x+1 over F_2 never splits
        }
        let f2 = PrimeField::new(2).unwrap();
        let q = vec![1, 1, 1];
        assert!(coprime_split(&mul(&q, &mul(&q, &q, f2), f2), f2, &mut rng).is_none());
        let f5 = PrimeField::new(5).unwrap();
        // x^2 - 2 is irreducible mod 5; its fifth power is a p-th power
        let q = vec![3, 0, 1];
        let mut a = vec![1];
        for _ in 0..5 {
            a = mul(&a, &q, f5);
        }
        assert!(coprime_split(&a, f5, &mut rng).is_none());
    }

    #[test]
    fn minimal_polynomial_of_jordan_block() {
        let f = PrimeField::new(101).unwrap();
        let j = Matrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(minimal_polynomial(&j, f), vec![0, 0, 1]);
        assert_eq!(minimal_polynomial(&Matrix::identity(3), f), vec![100, 1]);
        assert!(eval_matrix(&minimal_polynomial(&j, f), &j, f).is_zero());
    }
}
