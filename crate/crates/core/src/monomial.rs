//! Monomials and the graded reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exps = SmallVec<[u16; 8]>;

/// A power product `x_1^a_1 ... x_n^a_n` with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
}

/// Supported monomial orders. Only grevlex is used on ring variables;
/// free modules extend it position-over-term (see [`crate::groebner`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: SmallVec::from_slice(exps), degree }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// All monomials of total degree `deg` in `nvars` variables, grevlex descending.
    pub fn all_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        if nvars == 0 {
            if deg == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        let mut cur = vec![0u16; nvars];
        fill_degree(&mut cur, 0, deg, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

fn fill_degree(cur: &mut Vec<u16>, idx: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if idx + 1 == cur.len() {
        cur[idx] = remaining as u16;
        out.push(Monomial::from_exps(cur));
        return;
    }
    for e in 0..=remaining {
        cur[idx] = e as u16;
        fill_degree(cur, idx + 1, remaining - e, out);
    }
    cur[idx] = 0;
}

/// Grevlex: higher total degree wins; on ties the monomial with the smaller
/// exponent at the last differing variable is the larger one.
pub fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

pub fn monomial_compare(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Ordering {
    match order {
        MonomialOrder::Grevlex => grevlex(a, b),
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}
