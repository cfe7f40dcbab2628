//! Buchberger's algorithm for homogeneous ideals and submodules of graded
//! free modules.
//!
//! Module elements use a position-over-term extension of grevlex. Positions
//! are ranked by a priority list (rank 0 is the largest position); the
//! default ranks positions by ascending generator degree, then index.
//! Internally every vector is stored with positions already replaced by
//! their rank, so comparisons never consult the priority table.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// A graded free module `⊕ R(-d_i)`: generator `e_i` has degree `degrees[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GradedFreeModule {
    pub degrees: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(degrees: Vec<i32>) -> Self {
        GradedFreeModule { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// Twists in `R(t)` notation: the negated generator degrees.
    pub fn twists(&self) -> Vec<i32> {
        self.degrees.iter().map(|d| -d).collect()
    }

    pub fn direct_sum(&self, other: &GradedFreeModule) -> GradedFreeModule {
        GradedFreeModule { degrees: self.degrees.iter().chain(&other.degrees).copied().collect() }
    }

    /// Default position priority: ascending degree, then index.
    pub fn default_priority(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.rank()).collect();
        idx.sort_by_key(|&i| (self.degrees[i], i));
        idx
    }
}

/// A module element as one polynomial per position.
pub type ModuleElem = Vec<Polynomial>;

/// Degree of a homogeneous module element, `None` for zero or inhomogeneous.
pub fn elem_degree(v: &[Polynomial], module: &GradedFreeModule) -> Option<i32> {
    let mut deg = None;
    for (k, p) in v.iter().enumerate() {
        for (m, _) in p.terms() {
            let d = m.degree() as i32 + module.degrees[k];
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
    }
    deg
}

pub fn elem_is_zero(v: &[Polynomial]) -> bool {
    v.iter().all(Polynomial::is_zero)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct VTerm {
    pub pos: u32,
    pub mono: Monomial,
    pub coeff: u32,
}

fn term_cmp(a_pos: u32, a: &Monomial, b_pos: u32, b: &Monomial) -> Ordering {
    b_pos.cmp(&a_pos).then_with(|| a.cmp(b))
}

/// Sparse module vector, terms strictly descending.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Vector {
    pub terms: Vec<VTerm>,
}

impl Vector {
    fn lead(&self) -> &VTerm {
        &self.terms[0]
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self[from..] + c * mono * other`.
    fn add_scaled_tail(&self, from: usize, c: u32, mono: &Monomial, other: &Vector, f: PrimeField) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() - from + other.terms.len());
        let mut a = self.terms[from..].iter().peekable();
        let mut b = other.terms.iter().map(|t| VTerm { pos: t.pos, mono: t.mono.mul(mono), coeff: f.mul(t.coeff, c) }).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match term_cmp(x.pos, &x.mono, y.pos, &y.mono) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = f.add(x.coeff, y.coeff);
                        if s != 0 {
                            out.push(VTerm { pos: x.pos, mono: x.mono.clone(), coeff: s });
                        }
                    }
                },
            }
        }
        Vector { terms: out }
    }

    fn scale(&mut self, c: u32, f: PrimeField) {
        for t in &mut self.terms {
            t.coeff = f.mul(t.coeff, c);
        }
    }

    fn make_monic(&mut self, f: PrimeField) {
        if let Some(t) = self.terms.first() {
            let inv = f.inv(t.coeff).expect("nonzero");
            self.scale(inv, f);
        }
    }
}

/// Core engine state: vectors whose positions are priority ranks.
struct Engine<'a> {
    field: PrimeField,
    rank_degree: &'a [i32],
    basis: Vec<Vector>,
    by_pos: HashMap<u32, Vec<usize>>,
}

impl Engine<'_> {
    fn vec_degree(&self, v: &Vector) -> i32 {
        let t = v.lead();
        t.mono.degree() as i32 + self.rank_degree[t.pos as usize]
    }

    fn find_divisor(&self, pos: u32, mono: &Monomial, skip: Option<usize>) -> Option<usize> {
        self.by_pos.get(&pos)?.iter().copied().find(|&i| Some(i) != skip && self.basis[i].lead().mono.divides(mono))
    }

    /// Full reduction against the current basis.
    fn reduce(&self, v: &Vector, skip: Option<usize>) -> Vector {
        let f = self.field;
        let mut done: Vec<VTerm> = Vec::new();
        let mut cur = v.clone();
        let mut head = 0;
        while head < cur.terms.len() {
            let t = &cur.terms[head];
            match self.find_divisor(t.pos, &t.mono, skip) {
                Some(i) => {
                    let g = &self.basis[i];
                    let q = g.lead().mono.quotient_of(&t.mono).unwrap();
                    // g is monic
                    let c = f.neg(t.coeff);
                    cur = cur.add_scaled_tail(head, c, &q, g, f);
                    head = 0;
                }
                None => {
                    done.push(t.clone());
                    head += 1;
                }
            }
        }
        Vector { terms: done }
    }

    fn push(&mut self, v: Vector) -> usize {
        let idx = self.basis.len();
        self.by_pos.entry(v.lead().pos).or_default().push(idx);
        self.basis.push(v);
        idx
    }
}

fn s_vector(a: &Vector, b: &Vector, f: PrimeField) -> Vector {
    let la = &a.lead().mono;
    let lb = &b.lead().mono;
    let l = la.lcm(lb);
    let qa = la.quotient_of(&l).unwrap();
    let qb = lb.quotient_of(&l).unwrap();
    let left = Vector::default().add_scaled_tail(0, 1, &qa, a, f);
    left.add_scaled_tail(0, f.neg(1), &qb, b, f)
}

/// Runs Buchberger (normal selection strategy, product and chain criteria)
/// and returns the reduced basis sorted by descending leading term.
fn buchberger_ranked(field: PrimeField, rank_degree: &[i32], gens: Vec<Vector>, ideal_case: bool) -> Vec<Vector> {
    let mut eng = Engine { field, rank_degree, basis: Vec::new(), by_pos: HashMap::new() };
    let mut inputs: Vec<Vector> = gens.into_iter().filter(|v| !v.is_zero()).collect();
    inputs.sort_by_key(|v| eng.vec_degree(v));
    let mut next_input = 0;
    // (degree, i, j)
    let mut queue: BTreeSet<(i32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut lcms: HashMap<(usize, usize), Monomial> = HashMap::new();

    loop {
        let next_pair = queue.iter().next().copied();
        let input_deg = inputs.get(next_input).map(|v| eng.vec_degree(v));
        let candidate = match (input_deg, next_pair) {
            (None, None) => break,
            (Some(d), Some((pd, _, _))) if d <= pd => {
                next_input += 1;
                inputs[next_input - 1].clone()
            }
            (Some(_), None) => {
                next_input += 1;
                inputs[next_input - 1].clone()
            }
            (_, Some(key)) => {
                queue.remove(&key);
                let (_, i, j) = key;
                pending.remove(&(i, j));
                let l = lcms.remove(&(i, j)).unwrap();
                let (a, b) = (&eng.basis[i], &eng.basis[j]);
                if ideal_case && a.lead().mono.is_coprime(&b.lead().mono) {
                    continue;
                }
                let pos = a.lead().pos;
                let chain = eng.by_pos[&pos].iter().any(|&k| {
                    k != i
                        && k != j
                        && eng.basis[k].lead().mono.divides(&l)
                        && !pending.contains(&(i.min(k), i.max(k)))
                        && !pending.contains(&(j.min(k), j.max(k)))
                });
                if chain {
                    continue;
                }
                s_vector(a, b, field)
            }
        };
        let mut r = eng.reduce(&candidate, None);
        if r.is_zero() {
            continue;
        }
        r.make_monic(field);
        let pos = r.lead().pos;
        let k = eng.push(r);
        let peers: Vec<usize> = eng.by_pos[&pos].iter().copied().filter(|&i| i != k).collect();
        for i in peers {
            let l = eng.basis[i].lead().mono.lcm(&eng.basis[k].lead().mono);
            let deg = l.degree() as i32 + rank_degree[pos as usize];
            queue.insert((deg, i, k));
            pending.insert((i, k));
            lcms.insert((i, k), l);
        }
    }

    // interreduce
    let n = eng.basis.len();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..n {
        let li = eng.basis[i].lead();
        let redundant = (0..n).any(|j| {
            if j == i {
                return false;
            }
            let lj = eng.basis[j].lead();
            lj.pos == li.pos && lj.mono.divides(&li.mono) && (lj.mono != li.mono || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let mut reduced_eng = Engine { field, rank_degree, basis: Vec::new(), by_pos: HashMap::new() };
    for &i in &keep {
        reduced_eng.push(eng.basis[i].clone());
    }
    let mut out = Vec::with_capacity(keep.len());
    for idx in 0..reduced_eng.basis.len() {
        let v = &reduced_eng.basis[idx];
        let mut r = reduced_eng.reduce(v, Some(idx));
        r.make_monic(field);
        out.push(r);
    }
    out.sort_by(|a, b| {
        let (x, y) = (a.lead(), b.lead());
        term_cmp(y.pos, &y.mono, x.pos, &x.mono)
    });
    out
}

/// Reduced Gröbner basis of a homogeneous submodule of a graded free module
/// over a polynomial ring.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    field: PrimeField,
    module: GradedFreeModule,
    /// `order[r]` is the original position with rank `r`.
    order: Vec<usize>,
    rank_of: Vec<u32>,
    rank_degree: Vec<i32>,
    elems: Vec<Vector>,
}

impl GroebnerBasis {
    /// Computes the basis using the default position priority.
    pub fn new(nvars: usize, field: PrimeField, module: &GradedFreeModule, gens: &[ModuleElem]) -> Result<Self> {
        Self::with_priority(nvars, field, module, gens, module.default_priority())
    }

    /// `priority[0]` is the largest position.
    pub fn with_priority(
        nvars: usize,
        field: PrimeField,
        module: &GradedFreeModule,
        gens: &[ModuleElem],
        priority: Vec<usize>,
    ) -> Result<Self> {
        let r = module.rank();
        if priority.len() != r || {
            let mut s = priority.clone();
            s.sort_unstable();
            s != (0..r).collect::<Vec<_>>()
        } {
            return Err(Error::Structure("position priority must be a permutation".into()));
        }
        let mut rank_of = vec![0u32; r];
        for (rk, &p) in priority.iter().enumerate() {
            rank_of[p] = rk as u32;
        }
        let rank_degree: Vec<i32> = priority.iter().map(|&p| module.degrees[p]).collect();
        let mut gb = GroebnerBasis { nvars, field, module: module.clone(), order: priority, rank_of, rank_degree, elems: Vec::new() };
        let mut vecs = Vec::with_capacity(gens.len());
        for g in gens {
            if g.len() != r {
                return Err(Error::Structure(format!("module element has {} components, expected {r}", g.len())));
            }
            if !elem_is_zero(g) && elem_degree(g, module).is_none() {
                return Err(Error::Input("generator is not homogeneous".into()));
            }
            vecs.push(gb.to_vector(g)?);
        }
        let ideal_case = r == 1;
        gb.elems = buchberger_ranked(field, &gb.rank_degree, vecs, ideal_case);
        Ok(gb)
    }

    pub(crate) fn to_vector(&self, v: &[Polynomial]) -> Result<Vector> {
        let mut terms = Vec::new();
        for (k, p) in v.iter().enumerate() {
            if !p.is_zero() && (p.nvars() != self.nvars || p.field() != self.field) {
                return Err(Error::Structure("component lives in a different ring".into()));
            }
            for (m, c) in p.terms() {
                terms.push(VTerm { pos: self.rank_of[k], mono: m.clone(), coeff: *c });
            }
        }
        terms.sort_by(|a, b| term_cmp(b.pos, &b.mono, a.pos, &a.mono));
        Ok(Vector { terms })
    }

    pub(crate) fn to_elem(&self, v: &Vector) -> ModuleElem {
        let r = self.module.rank();
        let mut comps: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); r];
        for t in &v.terms {
            comps[self.order[t.pos as usize]].push((t.mono.clone(), t.coeff));
        }
        comps.into_iter().map(|ts| Polynomial::from_sorted(self.nvars, self.field, ts)).collect()
    }

    pub fn module(&self) -> &GradedFreeModule {
        &self.module
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> Vec<ModuleElem> {
        self.elems.iter().map(|v| self.to_elem(v)).collect()
    }

    /// Leading (original position, monomial) of each element, in basis order.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elems.iter().map(|v| (self.order[v.lead().pos as usize], v.lead().mono.clone())).collect()
    }

    /// Leading monomials grouped by original position.
    pub fn leading_monomials_by_position(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.module.rank()];
        for (k, m) in self.leading_terms() {
            out[k].push(m);
        }
        out
    }

    fn engine(&self) -> Engine<'_> {
        let mut eng = Engine { field: self.field, rank_degree: &self.rank_degree, basis: Vec::new(), by_pos: HashMap::new() };
        for v in &self.elems {
            eng.push(v.clone());
        }
        eng
    }

    pub fn normal_form(&self, v: &[Polynomial]) -> Result<ModuleElem> {
        let vec = self.to_vector(v)?;
        Ok(self.to_elem(&self.engine().reduce(&vec, None)))
    }

    /// Normal forms of many elements, sharing the reducer set-up.
    pub fn normal_forms(&self, vs: &[ModuleElem]) -> Result<Vec<ModuleElem>> {
        let eng = self.engine();
        vs.iter().map(|v| Ok(self.to_elem(&eng.reduce(&self.to_vector(v)?, None)))).collect()
    }

    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        Ok(elem_is_zero(&self.normal_form(v)?))
    }

    /// Every S-vector of the basis reduces to zero.
    pub fn satisfies_s_pair_criterion(&self) -> bool {
        let eng = self.engine();
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                if self.elems[i].lead().pos != self.elems[j].lead().pos {
                    continue;
                }
                let s = s_vector(&self.elems[i], &self.elems[j], self.field);
                if !eng.reduce(&s, None).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of a homogeneous ideal.
pub fn buchberger(gens: &[Polynomial], nvars: usize, field: PrimeField) -> Result<Vec<Polynomial>> {
    let module = GradedFreeModule::new(vec![0]);
    let elems: Vec<ModuleElem> = gens.iter().map(|g| vec![g.clone()]).collect();
    let gb = GroebnerBasis::new(nvars, field, &module, &elems)?;
    Ok(gb.elements().into_iter().map(|mut v| v.remove(0)).collect())
}

/// Normal form of a polynomial against a Gröbner basis of an ideal.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let field = f.field();
    let mut done: Vec<(Monomial, u32)> = Vec::new();
    let mut cur = f.clone();
    while let Some((m, c)) = cur.leading().cloned() {
        match basis.iter().find(|g| g.leading().is_some_and(|(lm, _)| lm.divides(&m))) {
            Some(g) => {
                let (lm, lc) = g.leading().unwrap();
                let q = lm.quotient_of(&m).unwrap();
                let k = field.mul(field.neg(c), field.inv(*lc).unwrap());
                cur = cur.add_scaled(k, &q, g);
            }
            None => {
                done.push((m.clone(), c));
                let rest = cur.terms()[1..].to_vec();
                cur = Polynomial::from_sorted(f.nvars(), field, rest);
            }
        }
    }
    Polynomial::from_sorted(f.nvars(), field, done)
}
