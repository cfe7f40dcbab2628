//! Finitely generated graded modules over a quotient ring, presented as
//! subquotients `(G + Q + I F) / (Q + I F)` of a graded free module `F`
//! over the ambient polynomial ring.
//!
//! A plain quotient `F / Q` has `generators = None`. Syzygy modules are
//! submodules `G` of a free module (`relations` empty), and reductions such
//! as `Ω / yΩ` add `y G` to the relations.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::{elem_degree, elem_is_zero, GradedFreeModule, GroebnerBasis, ModuleElem};
use crate::hilbert::{HilbertSeries, Staircase};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::QuotientRingSpec;

/// Generators `g e_k` of `I F` for every Gröbner element `g` of the ring ideal.
pub fn ideal_times_free(ring: &QuotientRingSpec, module: &GradedFreeModule) -> Vec<ModuleElem> {
    let mut out = Vec::new();
    for k in 0..module.rank() {
        for g in ring.groebner() {
            let mut v = vec![ring.zero(); module.rank()];
            v[k] = g.clone();
            out.push(v);
        }
    }
    out
}

/// Gröbner basis over the ambient ring of `gens + I F`.
pub fn submodule_basis(ring: &QuotientRingSpec, module: &GradedFreeModule, gens: &[ModuleElem]) -> Result<GroebnerBasis> {
    let mut all: Vec<ModuleElem> = gens.to_vec();
    all.extend(ideal_times_free(ring, module));
    GroebnerBasis::new(ring.nvars(), ring.field(), module, &all)
}

pub fn basis_vector(ring: &QuotientRingSpec, rank: usize, k: usize) -> ModuleElem {
    let mut v = vec![ring.zero(); rank];
    v[k] = ring.one();
    v
}

pub fn scale_elem(v: &[Polynomial], c: &Polynomial) -> ModuleElem {
    v.iter().map(|p| p.mul(c).expect("same ring")).collect()
}

pub fn add_elems(a: &[Polynomial], b: &[Polynomial]) -> ModuleElem {
    a.iter().zip(b).map(|(x, y)| x.add(y).expect("same ring")).collect()
}

pub fn mul_term_elem(v: &[Polynomial], m: &Monomial, c: u32) -> ModuleElem {
    v.iter().map(|p| p.mul_term(m, c)).collect()
}

pub fn reduce_elem(ring: &QuotientRingSpec, v: &[Polynomial]) -> ModuleElem {
    v.iter().map(|p| ring.reduce(p)).collect()
}

#[derive(Clone, Debug)]
pub struct ModulePresentation {
    pub ring: QuotientRingSpec,
    pub ambient: GradedFreeModule,
    /// `None` means the whole ambient module.
    pub generators: Option<Vec<ModuleElem>>,
    pub relations: Vec<ModuleElem>,
    series: OnceLock<HilbertSeries>,
}

impl ModulePresentation {
    fn build(
        ring: &QuotientRingSpec,
        ambient: GradedFreeModule,
        generators: Option<Vec<ModuleElem>>,
        relations: Vec<ModuleElem>,
    ) -> Result<Self> {
        let check = |v: &ModuleElem| -> Result<()> {
            if v.len() != ambient.rank() {
                return Err(Error::Structure(format!("element has {} components, module rank {}", v.len(), ambient.rank())));
            }
            if !elem_is_zero(v) && elem_degree(v, &ambient).is_none() {
                return Err(Error::Input("module element is not homogeneous".into()));
            }
            Ok(())
        };
        for v in generators.iter().flatten().chain(&relations) {
            check(v)?;
        }
        Ok(ModulePresentation { ring: ring.clone(), ambient, generators, relations, series: OnceLock::new() })
    }

    /// `F / ⟨relations⟩` over the ring.
    pub fn quotient(ring: &QuotientRingSpec, ambient: GradedFreeModule, relations: Vec<ModuleElem>) -> Result<Self> {
        Self::build(ring, ambient, None, relations)
    }

    /// The submodule of `F` generated by `generators`.
    pub fn submodule(ring: &QuotientRingSpec, ambient: GradedFreeModule, generators: Vec<ModuleElem>) -> Result<Self> {
        Self::build(ring, ambient, Some(generators), Vec::new())
    }

    pub fn subquotient(
        ring: &QuotientRingSpec,
        ambient: GradedFreeModule,
        generators: Vec<ModuleElem>,
        relations: Vec<ModuleElem>,
    ) -> Result<Self> {
        Self::build(ring, ambient, Some(generators), relations)
    }

    /// Generators of the module (basis vectors for quotient modules).
    pub fn generator_list(&self) -> Vec<ModuleElem> {
        match &self.generators {
            Some(g) => g.clone(),
            None => (0..self.ambient.rank()).map(|k| basis_vector(&self.ring, self.ambient.rank(), k)).collect(),
        }
    }

    pub fn relation_basis(&self) -> Result<GroebnerBasis> {
        submodule_basis(&self.ring, &self.ambient, &self.relations)
    }

    /// Hilbert series of the module, exact as a rational function.
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        if let Some(hs) = self.series.get() {
            return Ok(hs.clone());
        }
        let lower = Staircase::from_basis(&self.relation_basis()?).series();
        let hs = match &self.generators {
            None => lower,
            Some(g) => {
                let mut all = g.clone();
                all.extend(self.relations.iter().cloned());
                let upper = Staircase::from_basis(&submodule_basis(&self.ring, &self.ambient, &all)?).series();
                lower.sub(&upper)
            }
        };
        let _ = self.series.set(hs.clone());
        Ok(hs)
    }

    pub fn hilbert_function(&self, t: i32) -> Result<i64> {
        Ok(self.hilbert_series()?.coefficient(t))
    }

    /// Krull dimension of the module (-1 for the zero module).
    pub fn dimension(&self) -> Result<i64> {
        Ok(self.hilbert_series()?.dimension())
    }

    /// `M / (y_1..y_r) M`, still presented over the same ring.
    pub fn quotient_by_elements(&self, ys: &[Polynomial]) -> Result<Self> {
        let gens = self.generator_list();
        let mut rels = self.relations.clone();
        for y in ys {
            for g in &gens {
                rels.push(scale_elem(g, y));
            }
        }
        Self::build(&self.ring, self.ambient.clone(), self.generators.clone(), rels)
    }

    /// A basis of the degree-`t` component, as elements of the ambient module
    /// that are independent modulo the relations.
    pub fn component(&self, t: i32) -> Result<Vec<ModuleElem>> {
        let rel_gb = self.relation_basis()?;
        let nv = self.ring.nvars();
        let mut candidates = Vec::new();
        for g in self.generator_list() {
            let Some(a) = elem_degree(&g, &self.ambient) else { continue };
            if a > t {
                continue;
            }
            for u in Monomial::all_of_degree(nv, (t - a) as u32) {
                candidates.push(mul_term_elem(&g, &u, 1));
            }
        }
        let nfs = rel_gb.normal_forms(&candidates)?;
        let keep = independent_subset(&self.ring, &nfs);
        Ok(keep.into_iter().map(|i| candidates[i].clone()).collect())
    }

    /// Submodule generated by the degree-`t` component, same relations.
    pub fn generated_in_degree(&self, t: i32) -> Result<Self> {
        let gens = self.component(t)?;
        Self::build(&self.ring, self.ambient.clone(), Some(gens), self.relations.clone())
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.hilbert_series()?.is_zero())
    }
}

/// Incremental echelon form over sparse vectors keyed by `(position, monomial)`.
#[derive(Default)]
pub(crate) struct Echelon {
    rows: Vec<Vec<((usize, Monomial), u32)>>,
}

impl Echelon {
    fn to_sparse(v: &[Polynomial]) -> Vec<((usize, Monomial), u32)> {
        let mut out = Vec::new();
        for (k, p) in v.iter().enumerate() {
            for (m, c) in p.terms() {
                out.push(((k, m.clone()), *c));
            }
        }
        // descending: position ascending, monomial descending
        out.sort_by(|a, b| a.0 .0.cmp(&b.0 .0).then_with(|| b.0 .1.cmp(&a.0 .1)));
        out
    }

    /// Reduces `v` by the stored rows; stores it and returns true when the
    /// remainder is nonzero.
    pub(crate) fn insert(&mut self, ring: &QuotientRingSpec, v: &[Polynomial]) -> bool {
        let f = ring.field();
        let mut cur: std::collections::BTreeMap<(usize, std::cmp::Reverse<Monomial>), u32> =
            Self::to_sparse(v).into_iter().map(|((k, m), c)| ((k, std::cmp::Reverse(m)), c)).collect();
        for row in &self.rows {
            let (key, lc) = &row[0];
            let k2 = (key.0, std::cmp::Reverse(key.1.clone()));
            let Some(&c) = cur.get(&k2) else { continue };
            let factor = f.mul(c, f.inv(*lc).unwrap());
            for (rk, rc) in row {
                let kk = (rk.0, std::cmp::Reverse(rk.1.clone()));
                let e = cur.entry(kk.clone()).or_insert(0);
                *e = f.sub(*e, f.mul(factor, *rc));
                if *e == 0 {
                    cur.remove(&kk);
                }
            }
        }
        if cur.is_empty() {
            return false;
        }
        let row: Vec<((usize, Monomial), u32)> = cur.into_iter().map(|((k, m), c)| ((k, m.0), c)).collect();
        // keep rows sorted by pivot so later reductions see earlier pivots first
        let pos =
            self.rows.partition_point(|r| (r[0].0 .0, std::cmp::Reverse(&r[0].0 .1)) < (row[0].0 .0, std::cmp::Reverse(&row[0].0 .1)));
        self.rows.insert(pos, row);
        true
    }
}

/// Indices of a maximal linearly independent prefix-greedy subset.
pub(crate) fn independent_subset(ring: &QuotientRingSpec, vs: &[ModuleElem]) -> Vec<usize> {
    let mut ech = Echelon::default();
    let mut keep = Vec::new();
    for (i, v) in vs.iter().enumerate() {
        if ech.insert(ring, v) {
            keep.push(i);
        }
    }
    keep
}
