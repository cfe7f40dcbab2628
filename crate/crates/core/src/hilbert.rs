//! Hilbert functions and series of graded quotients `S^r / N`, read off the
//! leading-term module of a Gröbner basis of `N`.

use std::fmt;

use crate::groebner::{GradedFreeModule, GroebnerBasis};
use crate::monomial::Monomial;

/// A rational Hilbert series `t^shift * (c_0 + c_1 t + ...) / (1 - t)^nvars`.
#[derive(Clone, Debug)]
pub struct HilbertSeries {
    pub nvars: usize,
    pub shift: i32,
    pub numerator: Vec<i64>,
}

impl HilbertSeries {
    pub fn zero(nvars: usize) -> Self {
        HilbertSeries { nvars, shift: 0, numerator: Vec::new() }
    }

    fn normalized(&self) -> (i32, Vec<i64>) {
        let mut c = self.numerator.clone();
        while c.last() == Some(&0) {
            c.pop();
        }
        let lead = c.iter().take_while(|&&x| x == 0).count();
        if lead == c.len() {
            return (0, Vec::new());
        }
        (self.shift + lead as i32, c[lead..].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.normalized().1.is_empty()
    }

    fn combine(&self, other: &HilbertSeries, sign: i64) -> HilbertSeries {
        assert_eq!(self.nvars, other.nvars);
        if self.numerator.is_empty() {
            let mut o = other.clone();
            o.numerator.iter_mut().for_each(|c| *c *= sign);
            return o;
        }
        if other.numerator.is_empty() {
            return self.clone();
        }
        let lo = self.shift.min(other.shift);
        let hi = (self.shift + self.numerator.len() as i32).max(other.shift + other.numerator.len() as i32);
        let mut c = vec![0i64; (hi - lo) as usize];
        for (i, v) in self.numerator.iter().enumerate() {
            c[(self.shift - lo) as usize + i] += v;
        }
        for (i, v) in other.numerator.iter().enumerate() {
            c[(other.shift - lo) as usize + i] += sign * v;
        }
        HilbertSeries { nvars: self.nvars, shift: lo, numerator: c }
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, -1)
    }

    pub fn shifted(&self, by: i32) -> HilbertSeries {
        HilbertSeries { nvars: self.nvars, shift: self.shift + by, numerator: self.numerator.clone() }
    }

    /// Multiplies by `1 - t^e`.
    pub fn times_one_minus_t_pow(&self, e: u32) -> HilbertSeries {
        self.sub(&self.shifted(e as i32))
    }

    /// Dimension of the degree-`t` piece.
    pub fn coefficient(&self, t: i32) -> i64 {
        let n = self.nvars as i64;
        if n == 0 {
            let k = t - self.shift;
            return if k < 0 { 0 } else { self.numerator.get(k as usize).copied().unwrap_or(0) };
        }
        let mut sum = 0i64;
        for (i, c) in self.numerator.iter().enumerate() {
            let k = t as i64 - self.shift as i64 - i as i64;
            if k < 0 || *c == 0 {
                continue;
            }
            sum += c * binom(k + n - 1, n - 1);
        }
        sum
    }

    /// Krull dimension of the module: the pole order at `t = 1`, or -1 for zero.
    pub fn dimension(&self) -> i64 {
        let (_, mut c) = self.normalized();
        if c.is_empty() {
            return -1;
        }
        let mut k = 0usize;
        // divide by (1 - t) while the numerator vanishes at 1
        while c.iter().sum::<i64>() == 0 {
            c = divide_by_one_minus_t(&c);
            k += 1;
        }
        self.nvars as i64 - k as i64
    }

    /// For finite-length modules, the Hilbert polynomial `sum h_t t^t` as
    /// `(first degree, values)`.
    pub fn finite_part(&self) -> Option<(i32, Vec<i64>)> {
        if self.dimension() > 0 {
            return None;
        }
        let (shift, mut c) = self.normalized();
        if c.is_empty() {
            return Some((0, Vec::new()));
        }
        for _ in 0..self.nvars {
            c = divide_by_one_minus_t(&c);
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Some((shift, c))
    }

    /// Largest degree with a nonzero component, for finite-length modules.
    pub fn top_degree(&self) -> Option<i32> {
        let (s, c) = self.finite_part()?;
        if c.is_empty() {
            None
        } else {
            Some(s + c.len() as i32 - 1)
        }
    }
}

impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.normalized() == other.normalized()
    }
}

impl Eq for HilbertSeries {}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, c) = self.normalized();
        let mut num = String::new();
        for (i, &v) in c.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let e = s + i as i32;
            let sign = if v < 0 {
                "-"
            } else if num.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = v.unsigned_abs();
            let body = match (mag, e) {
                (_, 0) => mag.to_string(),
                (1, 1) => "t".into(),
                (1, _) => format!("t^{e}"),
                (_, 1) => format!("{mag}*t"),
                _ => format!("{mag}*t^{e}"),
            };
            if !num.is_empty() {
                num.push(' ');
                num.push_str(sign);
                num.push(' ');
            } else {
                num.push_str(sign);
            }
            num.push_str(&body);
        }
        if num.is_empty() {
            num.push('0');
        }
        write!(f, "({num}) / (1-t)^{}", self.nvars)
    }
}

fn divide_by_one_minus_t(c: &[i64]) -> Vec<i64> {
    // q(t) (1 - t) = c(t) with c(1) = 0 ; q_i = sum_{j<=i} c_j
    let mut q = Vec::with_capacity(c.len().saturating_sub(1));
    let mut acc = 0i64;
    for v in &c[..c.len().saturating_sub(1)] {
        acc += v;
        q.push(acc);
    }
    if q.is_empty() {
        q.push(0);
    }
    q
}

pub(crate) fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return if k == 0 && n == -1 { 1 } else { 0 };
    }
    let k = k.min(n - k);
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut g: Vec<Monomial> = gens.to_vec();
    g.sort();
    g.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    // ascending degree: a generator is kept unless an earlier kept one divides it
    g.sort_by_key(|m| m.degree());
    for m in g {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, v) in b.iter().enumerate() {
        a[i + shift] += v;
    }
}

/// Numerator `N` with `HS(S/J) = N(t) / (1-t)^n` for a monomial ideal `J`.
pub fn monomial_ideal_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    let g = minimalize(gens);
    if g.is_empty() {
        return vec![1];
    }
    if g.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // pairwise coprime generators: product of (1 - t^deg)
    let coprime = g.iter().enumerate().all(|(i, a)| g[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut acc = vec![1i64];
        for m in &g {
            let mut f = vec![0i64; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // pivot on the variable occurring in the most non-pure-power generators
    let mut counts = vec![0usize; nvars];
    for m in &g {
        if m.support().count() > 1 {
            for v in m.support() {
                counts[v] += 1;
            }
        }
    }
    let var = (0..nvars).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let xv = Monomial::var(nvars, var);
    // HS(S/J) = HS(S/(J + x)) + t * HS(S/(J : x))
    let mut plus: Vec<Monomial> = g.iter().filter(|m| m.exps()[var] == 0).cloned().collect();
    plus.push(xv.clone());
    let colon: Vec<Monomial> = g
        .iter()
        .map(|m| {
            let mut e = m.exps().to_vec();
            if e[var] > 0 {
                e[var] -= 1;
            }
            Monomial::from_exps(&e)
        })
        .collect();
    let mut out = monomial_ideal_numerator(&plus, nvars);
    let c = monomial_ideal_numerator(&colon, nvars);
    poly_add_shifted(&mut out, &c, 1);
    out
}

/// Krull dimension of `S / J` by the independent-set characterization:
/// the largest set of variables containing the support of no generator.
pub fn monomial_ideal_dimension(gens: &[Monomial], nvars: usize) -> i64 {
    let g = minimalize(gens);
    if g.iter().any(|m| m.is_one()) {
        return -1;
    }
    let supports: Vec<u64> = g.iter().map(|m| m.support().fold(0u64, |acc, v| acc | (1 << v))).collect();
    let mut best = 0i64;
    for set in 0u64..(1u64 << nvars) {
        let size = set.count_ones() as i64;
        if size > best && supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    best
}

/// Standard-monomial view of `S^r / N` for a Gröbner basis of `N`.
#[derive(Clone, Debug)]
pub struct Staircase {
    nvars: usize,
    module: GradedFreeModule,
    leads: Vec<Vec<Monomial>>,
}

impl Staircase {
    pub fn from_basis(gb: &GroebnerBasis) -> Self {
        Staircase {
            nvars: gb.nvars(),
            module: gb.module().clone(),
            leads: gb.leading_monomials_by_position().into_iter().map(|l| minimalize(&l)).collect(),
        }
    }

    pub fn from_leads(nvars: usize, module: GradedFreeModule, leads: Vec<Vec<Monomial>>) -> Self {
        Staircase { nvars, module, leads: leads.into_iter().map(|l| minimalize(&l)).collect() }
    }

    pub fn is_standard(&self, pos: usize, m: &Monomial) -> bool {
        !self.leads[pos].iter().any(|l| l.divides(m))
    }

    /// Standard `(position, monomial)` pairs of degree `t`, in descending
    /// module order (positions in index order, grevlex descending within).
    pub fn basis_in_degree(&self, t: i32) -> Vec<(usize, Monomial)> {
        let mut out = Vec::new();
        for (pos, &d) in self.module.degrees.iter().enumerate() {
            let e = t - d;
            if e < 0 {
                continue;
            }
            for m in Monomial::all_of_degree(self.nvars, e as u32) {
                if self.is_standard(pos, &m) {
                    out.push((pos, m));
                }
            }
        }
        out
    }

    pub fn dim_in_degree(&self, t: i32) -> usize {
        self.basis_in_degree(t).len()
    }

    pub fn series(&self) -> HilbertSeries {
        let mut hs = HilbertSeries::zero(self.nvars);
        for (pos, &d) in self.module.degrees.iter().enumerate() {
            let num = monomial_ideal_numerator(&self.leads[pos], self.nvars);
            hs = hs.add(&HilbertSeries { nvars: self.nvars, shift: d, numerator: num });
        }
        hs
    }

    pub fn dimension(&self) -> i64 {
        self.leads.iter().map(|l| monomial_ideal_dimension(l, self.nvars)).max().unwrap_or(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn pure_power_numerator() {
        // (x^2, y^2) in k[x,y]: (1-t^2)^2
        assert_eq!(monomial_ideal_numerator(&[m(&[2, 0]), m(&[0, 2])], 2), vec![1, 0, -2, 0, 1]);
    }

    #[test]
    fn numerator_matches_enumeration() {
        let gens = vec![m(&[2, 1, 0]), m(&[0, 2, 2]), m(&[1, 0, 3]), m(&[0, 0, 4]), m(&[3, 0, 0])];
        let st = Staircase::from_leads(3, GradedFreeModule::new(vec![0]), vec![gens]);
        let hs = st.series();
        for t in 0..12 {
            assert_eq!(hs.coefficient(t), st.dim_in_degree(t) as i64, "degree {t}");
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(monomial_ideal_dimension(&[], 2), 2);
        assert_eq!(monomial_ideal_dimension(&[m(&[4, 0, 0])], 3), 2);
        assert_eq!(monomial_ideal_dimension(&[m(&[2, 0, 0]), m(&[0, 2, 0]), m(&[0, 0, 4])], 3), 0);
        assert_eq!(monomial_ideal_dimension(&[m(&[0, 0])], 2), -1);
        assert_eq!(monomial_ideal_dimension(&[m(&[1, 0, 1])], 3), 2);
    }

    #[test]
    fn series_dimension_agrees_with_combinatorics() {
        let cases =
            vec![vec![m(&[1, 1, 0])], vec![m(&[2, 0, 0]), m(&[0, 1, 1])], vec![m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])], vec![]];
        for g in cases {
            let st = Staircase::from_leads(3, GradedFreeModule::new(vec![0]), vec![g.clone()]);
            assert_eq!(st.series().dimension(), monomial_ideal_dimension(&g, 3));
        }
    }

    #[test]
    fn finite_part_and_top_degree() {
        let st = Staircase::from_leads(3, GradedFreeModule::new(vec![0]), vec![vec![m(&[2, 0, 0]), m(&[0, 2, 0]), m(&[0, 0, 4])]]);
        let (s, vals) = st.series().finite_part().unwrap();
        assert_eq!(s, 0);
        assert_eq!(vals, vec![1, 3, 4, 4, 3, 1]);
        assert_eq!(st.series().top_degree(), Some(5));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(3, 0), 1);
        assert_eq!(binom(-1, 0), 1);
        assert_eq!(binom(2, 3), 0);
    }
}
