//! Graded free resolutions over quotient rings: syzygies, minimal
//! resolutions, Koszul complexes, Betti tables and comparison maps.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{elem_degree, elem_is_zero, GradedFreeModule, GroebnerBasis, ModuleElem};
use crate::linalg::Matrix;
use crate::module::{
    add_elems, basis_vector, ideal_times_free, mul_term_elem, reduce_elem, scale_elem, submodule_basis, Echelon, ModulePresentation,
};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::QuotientRingSpec;

/// A homogeneous map of graded free modules `source -> target`, stored by
/// columns: `columns[j]` is the image of the `j`-th source generator.
#[derive(Clone, Debug)]
pub struct FreeMap {
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    pub columns: Vec<ModuleElem>,
}

impl FreeMap {
    /// Checks shapes and that every nonzero column has the source degree.
    pub fn new(source: GradedFreeModule, target: GradedFreeModule, columns: Vec<ModuleElem>) -> Result<Self> {
        if columns.len() != source.rank() {
            return Err(Error::Structure(format!("{} columns for a source of rank {}", columns.len(), source.rank())));
        }
        for (j, c) in columns.iter().enumerate() {
            if c.len() != target.rank() {
                return Err(Error::Structure(format!("column {j} has {} entries, target rank {}", c.len(), target.rank())));
            }
            if elem_is_zero(c) {
                continue;
            }
            if elem_degree(c, &target) != Some(source.degrees[j]) {
                return Err(Error::Input(format!("column {j} is not homogeneous of degree {}", source.degrees[j])));
            }
        }
        Ok(FreeMap { source, target, columns })
    }

    /// Builds a map whose source degrees are read off the columns.
    pub fn from_columns(ring: &QuotientRingSpec, target: GradedFreeModule, columns: Vec<ModuleElem>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(columns.len());
        let mut kept = Vec::with_capacity(columns.len());
        for c in columns {
            let c = reduce_elem(ring, &c);
            if elem_is_zero(&c) {
                continue;
            }
            let d = elem_degree(&c, &target).ok_or_else(|| Error::Input("column is not homogeneous".into()))?;
            degrees.push(d);
            kept.push(c);
        }
        Self::new(GradedFreeModule::new(degrees), target, kept)
    }

    pub fn zero(source: GradedFreeModule, target: GradedFreeModule, ring: &QuotientRingSpec) -> Self {
        let columns = vec![vec![ring.zero(); target.rank()]; source.rank()];
        FreeMap { source, target, columns }
    }

    pub fn identity(module: GradedFreeModule, ring: &QuotientRingSpec) -> Self {
        let r = module.rank();
        let columns = (0..r).map(|k| basis_vector(ring, r, k)).collect();
        FreeMap { source: module.clone(), target: module, columns }
    }

    /// Entry in row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.columns[j][i]
    }

    pub fn apply(&self, v: &[Polynomial], ring: &QuotientRingSpec) -> ModuleElem {
        let mut out = vec![ring.zero(); self.target.rank()];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = add_elems(&out, &scale_elem(&self.columns[j], c));
        }
        reduce_elem(ring, &out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeMap, ring: &QuotientRingSpec) -> Result<FreeMap> {
        if other.target != self.source {
            return Err(Error::Structure("composition of maps with mismatched modules".into()));
        }
        let columns = other.columns.iter().map(|c| self.apply(c, ring)).collect();
        Ok(FreeMap { source: other.source.clone(), target: self.target.clone(), columns })
    }

    pub fn is_zero_mod(&self, ring: &QuotientRingSpec) -> bool {
        self.columns.iter().all(|c| elem_is_zero(&reduce_elem(ring, c)))
    }

    /// Every entry lies in the homogeneous maximal ideal modulo the relations.
    pub fn is_minimal(&self, ring: &QuotientRingSpec) -> bool {
        self.columns.iter().flatten().all(|p| ring.reduce(p).constant_coeff() == 0)
    }

    /// Matrix of constant coefficients (the map modulo the maximal ideal).
    pub fn constant_part(&self) -> Matrix {
        let mut m = Matrix::zeros(self.target.rank(), self.source.rank());
        for (j, c) in self.columns.iter().enumerate() {
            for (i, p) in c.iter().enumerate() {
                m.set(i, j, p.constant_coeff());
            }
        }
        m
    }

    pub fn reduced(&self, ring: &QuotientRingSpec) -> FreeMap {
        FreeMap {
            source: self.source.clone(),
            target: self.target.clone(),
            columns: self.columns.iter().map(|c| reduce_elem(ring, c)).collect(),
        }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &FreeMap, ring: &QuotientRingSpec) -> FreeMap {
        let (r1, r2) = (self.target.rank(), other.target.rank());
        let mut columns = Vec::new();
        for c in &self.columns {
            let mut v = c.clone();
            v.extend(std::iter::repeat_n(ring.zero(), r2));
            columns.push(v);
        }
        for c in &other.columns {
            let mut v = vec![ring.zero(); r1];
            v.extend(c.iter().cloned());
            columns.push(v);
        }
        FreeMap { source: self.source.direct_sum(&other.source), target: self.target.direct_sum(&other.target), columns }
    }

    pub fn fmt_with(&self, ring: &QuotientRingSpec) -> String {
        let mut s = String::new();
        for i in 0..self.target.rank() {
            let row: Vec<String> = (0..self.source.rank()).map(|j| ring.fmt_poly(self.entry(i, j))).collect();
            s.push_str(&format!("[{}]\n", row.join(", ")));
        }
        s
    }
}

/// Kernel generators of `phi` over the ring, not necessarily minimal.
///
/// Uses a Gröbner basis of the graph `(phi(e_j), e_j)` together with the
/// relation vectors, with the target positions ranked above the source ones.
pub fn syzygies_raw(ring: &QuotientRingSpec, phi: &FreeMap) -> Result<Vec<ModuleElem>> {
    let r = phi.target.rank();
    let s = phi.source.rank();
    if s == 0 {
        return Ok(Vec::new());
    }
    let big = phi.target.direct_sum(&phi.source);
    let mut gens = Vec::new();
    for (j, c) in phi.columns.iter().enumerate() {
        let mut v = reduce_elem(ring, c);
        let mut tail = vec![ring.zero(); s];
        tail[j] = ring.one();
        v.extend(tail);
        gens.push(v);
    }
    for g in ideal_times_free(ring, &phi.target) {
        let mut v = g;
        v.extend(std::iter::repeat_n(ring.zero(), s));
        gens.push(v);
    }
    let mut priority = phi.target.default_priority();
    priority.extend(phi.source.default_priority().into_iter().map(|k| k + r));
    let gb = GroebnerBasis::with_priority(ring.nvars(), ring.field(), &big, &gens, priority)?;
    let mut out = Vec::new();
    for e in gb.elements() {
        if e[..r].iter().all(Polynomial::is_zero) {
            let v = reduce_elem(ring, &e[r..]);
            if !elem_is_zero(&v) {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// A minimal generating subset of the submodule generated by `gens`
/// (modulo the relations), in ascending degree order.
pub fn minimize_generators(ring: &QuotientRingSpec, module: &GradedFreeModule, gens: &[ModuleElem]) -> Result<Vec<ModuleElem>> {
    let mut cands: Vec<(i32, usize, ModuleElem)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let g = reduce_elem(ring, g);
        if elem_is_zero(&g) {
            continue;
        }
        let d = elem_degree(&g, module).ok_or_else(|| Error::Input("generator is not homogeneous".into()))?;
        cands.push((d, i, g));
    }
    cands.sort_by_key(|c| (c.0, c.1));
    let mut kept: Vec<ModuleElem> = Vec::new();
    let mut idx = 0;
    while idx < cands.len() {
        let d = cands[idx].0;
        let end = idx + cands[idx..].iter().take_while(|c| c.0 == d).count();
        let gb = submodule_basis(ring, module, &kept)?;
        let group: Vec<ModuleElem> = cands[idx..end].iter().map(|c| c.2.clone()).collect();
        let nfs = gb.normal_forms(&group)?;
        let mut ech = Echelon::default();
        for (g, nf) in group.into_iter().zip(&nfs) {
            if ech.insert(ring, nf) {
                kept.push(g);
            }
        }
        idx = end;
    }
    Ok(kept)
}

/// Minimal generators of `ker phi`, as a map `F -> source(phi)`.
pub fn syzygies(ring: &QuotientRingSpec, phi: &FreeMap) -> Result<FreeMap> {
    let raw = syzygies_raw(ring, phi)?;
    let min = minimize_generators(ring, &phi.source, &raw)?;
    FreeMap::from_columns(ring, phi.source.clone(), min)
}

/// Removes generator/relation pairs joined by a unit entry, so that the
/// presentation matrix has no nonzero constants left.
pub fn prune_presentation(ring: &QuotientRingSpec, pres: &FreeMap) -> FreeMap {
    let f = ring.field();
    let mut target = pres.target.degrees.clone();
    let mut cols: Vec<ModuleElem> = pres.columns.iter().map(|c| reduce_elem(ring, c)).collect();
    loop {
        let mut unit = None;
        'search: for i in 0..target.len() {
            for (j, c) in cols.iter().enumerate() {
                let p = &c[i];
                if !p.is_zero() && p.constant_coeff() != 0 {
                    unit = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = unit else { break };
        let pivot = cols.remove(j);
        let cinv = f.inv(pivot[i].constant_coeff()).unwrap();
        for c in cols.iter_mut() {
            if c[i].is_zero() {
                continue;
            }
            let factor = c[i].scale(f.neg(cinv));
            *c = reduce_elem(ring, &add_elems(c, &scale_elem(&pivot, &factor)));
        }
        for c in cols.iter_mut() {
            c.remove(i);
        }
        target.remove(i);
    }
    let target = GradedFreeModule::new(target);
    cols.retain(|c| !elem_is_zero(c));
    let degrees = cols.iter().map(|c| elem_degree(c, &target).expect("homogeneous")).collect();
    FreeMap { source: GradedFreeModule::new(degrees), target, columns: cols }
}

/// A finite piece `F_k -> ... -> F_1 -> F_0` of a free resolution of
/// `coker(maps[0])`; `maps[i-1]` is `δ_i : F_i -> F_{i-1}`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub ring: QuotientRingSpec,
    pub f0: GradedFreeModule,
    pub maps: Vec<FreeMap>,
    pub minimal: bool,
}

impl Resolution {
    pub fn free_module(&self, i: usize) -> GradedFreeModule {
        if i == 0 {
            self.f0.clone()
        } else {
            self.maps.get(i - 1).map(|m| m.source.clone()).unwrap_or_default()
        }
    }

    pub fn differential(&self, i: usize) -> Option<&FreeMap> {
        if i == 0 {
            None
        } else {
            self.maps.get(i - 1)
        }
    }

    /// Index of the last nonzero free module that was computed.
    pub fn length(&self) -> usize {
        self.maps.iter().rposition(|m| m.source.rank() > 0).map_or(0, |i| i + 1)
    }

    /// The resolved module `coker δ_1`.
    pub fn augmentation(&self) -> Result<ModulePresentation> {
        let rels = self.maps.first().map(|m| m.columns.clone()).unwrap_or_default();
        ModulePresentation::quotient(&self.ring, self.f0.clone(), rels)
    }

    /// The syzygy module `Ω^i = Im δ_i ⊂ F_{i-1}`.
    pub fn syzygy_module(&self, i: usize) -> Result<ModulePresentation> {
        if i == 0 {
            return self.augmentation();
        }
        let (target, gens) = match self.differential(i) {
            Some(m) => (m.target.clone(), m.columns.clone()),
            None => (self.free_module(i - 1), Vec::new()),
        };
        ModulePresentation::submodule(&self.ring, target, gens)
    }

    pub fn betti(&self) -> BettiTable {
        let mut t = BettiTable::default();
        for i in 0..=self.maps.len() {
            for d in self.free_module(i).degrees {
                *t.entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        t.minimal = self.minimal;
        t
    }

    /// `δ_{i} ∘ δ_{i+1} = 0` for every computed pair.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].compose(&w[1], &self.ring)?.is_zero_mod(&self.ring) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Im δ_{i+1} = ker δ_i`, checked by double inclusion of submodules.
    pub fn is_exact_at(&self, i: usize) -> Result<bool> {
        let Some(di) = self.differential(i) else { return Ok(true) };
        let image: Vec<ModuleElem> = self.differential(i + 1).map(|m| m.columns.clone()).unwrap_or_default();
        let kernel = syzygies_raw(&self.ring, di)?;
        let gb_im = submodule_basis(&self.ring, &di.source, &image)?;
        let gb_ker = submodule_basis(&self.ring, &di.source, &kernel)?;
        for k in &kernel {
            if !gb_im.contains(k)? {
                return Ok(false);
            }
        }
        for v in &image {
            if !gb_ker.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Graded Betti numbers `β_{i,j}`: generators of degree `j` in `F_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i32), usize>,
    pub minimal: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i32,
    pub rank: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BettiJson {
    pub betti: Vec<BettiEntry>,
    pub minimal: bool,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, r)| r).sum()
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson { betti: self.entries.iter().map(|(&(i, j), &rank)| BettiEntry { i, j, rank }).collect(), minimal: self.minimal }
    }

    /// Macaulay2-style table: rows are `j - i`, columns are `i`.
    pub fn to_text(&self) -> String {
        if self.entries.is_empty() {
            return "0\n".into();
        }
        let maxi = self.entries.keys().map(|k| k.0).max().unwrap();
        let rows: Vec<i32> = {
            let mut r: Vec<i32> = self.entries.keys().map(|&(i, j)| j - i as i32).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let mut s = String::from("      ");
        for i in 0..=maxi {
            s.push_str(&format!("{i:>5}"));
        }
        s.push('\n');
        for r in rows {
            s.push_str(&format!("{r:>5}:"));
            for i in 0..=maxi {
                let v = self.get(i, r + i as i32);
                if v == 0 {
                    s.push_str("    .");
                } else {
                    s.push_str(&format!("{v:>5}"));
                }
            }
            s.push('\n');
        }
        s
    }
}

pub fn betti_table(res: &Resolution) -> BettiTable {
    res.betti()
}

/// Minimal free resolution up to homological degree `k` of `coker(pres)`.
pub fn minimal_resolution(ring: &QuotientRingSpec, pres: &FreeMap, k: usize) -> Result<Resolution> {
    let pruned = prune_presentation(ring, pres);
    let f0 = pruned.target.clone();
    let mut maps = Vec::new();
    if k >= 1 {
        let gens = minimize_generators(ring, &f0, &pruned.columns)?;
        let mut cur = FreeMap::from_columns(ring, f0.clone(), gens)?;
        for i in 1..=k {
            let done = cur.source.rank() == 0;
            let next = if i < k && !done { Some(syzygies(ring, &cur)?) } else { None };
            if !done {
                maps.push(cur);
            }
            match next {
                Some(n) => cur = n,
                None => break,
            }
        }
    }
    Ok(Resolution { ring: ring.clone(), f0, maps, minimal: true })
}

/// Free resolution of a quotient module `M = F/Q` from its presentation.
pub fn resolve_module(m: &ModulePresentation, k: usize) -> Result<Resolution> {
    if m.generators.is_some() {
        let pres = presentation_of(m)?;
        return minimal_resolution(&m.ring, &pres, k);
    }
    let pres = FreeMap::from_columns(&m.ring, m.ambient.clone(), m.relations.clone())?;
    minimal_resolution(&m.ring, &pres, k)
}

/// A presentation matrix of a subquotient `(G + Q)/Q`: relations among the
/// generators `G` modulo `Q + I F`.
pub fn presentation_of(m: &ModulePresentation) -> Result<FreeMap> {
    let gens = m.generator_list();
    let ng = gens.len();
    let mut cols = gens;
    cols.extend(m.relations.iter().filter(|r| !elem_is_zero(r)).cloned());
    let degs: Vec<i32> = cols
        .iter()
        .map(|g| elem_degree(g, &m.ambient).ok_or_else(|| Error::Input("generator must be nonzero and homogeneous".into())))
        .collect::<Result<_>>()?;
    let g_mod = GradedFreeModule::new(degs[..ng].to_vec());
    let map = FreeMap::new(GradedFreeModule::new(degs), m.ambient.clone(), cols)?;
    let proj: Vec<ModuleElem> = syzygies_raw(&m.ring, &map)?.into_iter().map(|v| v[..ng].to_vec()).collect();
    FreeMap::from_columns(&m.ring, g_mod, proj)
}

/// Koszul complex on `y` over the ring, with the augmentation onto `R/(y)`.
pub fn koszul_complex(ring: &QuotientRingSpec, y: &[Polynomial]) -> Result<Resolution> {
    koszul_complex_n(ring, y, 1)
}

fn subsets(d: usize, i: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, d: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == i {
            out.push(cur.clone());
            return;
        }
        for a in start..d {
            cur.push(a);
            go(a + 1, d, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, d, i, &mut Vec::new(), &mut out);
    out
}

/// Direct sum of `n` copies of the Koszul complex on `y`, ordered copy-major
/// in each homological degree.
pub fn koszul_complex_n(ring: &QuotientRingSpec, y: &[Polynomial], n: usize) -> Result<Resolution> {
    let d = y.len();
    let mut ydeg = Vec::with_capacity(d);
    for p in y {
        match p.homogeneous_degree() {
            Some(e) if e > 0 && !p.is_zero() => ydeg.push(e as i32),
            _ => return Err(Error::Input("Koszul elements must be nonzero homogeneous of positive degree".into())),
        }
    }
    let single_module =
        |i: usize| -> GradedFreeModule { GradedFreeModule::new(subsets(d, i).iter().map(|s| s.iter().map(|&a| ydeg[a]).sum()).collect()) };
    let nfold =
        |m: &GradedFreeModule| -> GradedFreeModule { GradedFreeModule::new((0..n).flat_map(|_| m.degrees.iter().copied()).collect()) };
    let mut maps = Vec::new();
    for i in 1..=d {
        let src = subsets(d, i);
        let tgt = subsets(d, i - 1);
        let index: HashMap<Vec<usize>, usize> = tgt.iter().cloned().enumerate().map(|(k, s)| (s, k)).collect();
        let mut single_cols = Vec::new();
        for s in &src {
            let mut col = vec![ring.zero(); tgt.len()];
            for (pos, &a) in s.iter().enumerate() {
                let mut t = s.clone();
                t.remove(pos);
                let sign = if pos % 2 == 0 { 1 } else { ring.field().neg(1) };
                col[index[&t]] = y[a].scale(sign);
            }
            single_cols.push(col);
        }
        let single = FreeMap::new(single_module(i), single_module(i - 1), single_cols)?;
        let mut map = FreeMap::zero(GradedFreeModule::default(), GradedFreeModule::default(), ring);
        for _ in 0..n {
            map = map.direct_sum(&single, ring);
        }
        debug_assert_eq!(map.source, nfold(&single_module(i)));
        maps.push(map.reduced(ring));
    }
    let all_minimal = maps.iter().all(|m| m.is_minimal(ring));
    Ok(Resolution { ring: ring.clone(), f0: nfold(&single_module(0)), maps, minimal: all_minimal })
}

/// `M ⊗ R/(y)` presented over the same ring.
pub fn reduce_mod(m: &ModulePresentation, y: &[Polynomial]) -> Result<ModulePresentation> {
    m.quotient_by_elements(y)
}

/// Solves `phi(u) = v` modulo the ring relations, degree by degree.
pub fn lift(ring: &QuotientRingSpec, phi: &FreeMap, v: &[Polynomial]) -> Result<Option<ModuleElem>> {
    let v = reduce_elem(ring, v);
    let s = phi.source.rank();
    if elem_is_zero(&v) {
        return Ok(Some(vec![ring.zero(); s]));
    }
    let deg = elem_degree(&v, &phi.target).ok_or_else(|| Error::Input("element to lift is not homogeneous".into()))?;
    let nv = ring.nvars();
    let f = ring.field();
    // unknowns: u * e_j (source), u * g * e_k (relations in target)
    let mut unknowns: Vec<ModuleElem> = Vec::new();
    let mut source_of: Vec<Option<(usize, Monomial)>> = Vec::new();
    for (j, &a) in phi.source.degrees.iter().enumerate() {
        if a > deg {
            continue;
        }
        for u in Monomial::all_of_degree(nv, (deg - a) as u32) {
            unknowns.push(mul_term_elem(&phi.columns[j], &u, 1));
            source_of.push(Some((j, u)));
        }
    }
    for (k, &b) in phi.target.degrees.iter().enumerate() {
        for g in ring.groebner() {
            let gd = g.homogeneous_degree().unwrap() as i32;
            if gd + b > deg {
                continue;
            }
            for u in Monomial::all_of_degree(nv, (deg - b - gd) as u32) {
                let mut e = vec![ring.zero(); phi.target.rank()];
                e[k] = g.mul_term(&u, 1);
                unknowns.push(e);
                source_of.push(None);
            }
        }
    }
    let mut rows: HashMap<(usize, Monomial), usize> = HashMap::new();
    let key = |k: usize, m: &Monomial, rows: &mut HashMap<(usize, Monomial), usize>| -> usize {
        let n = rows.len();
        *rows.entry((k, m.clone())).or_insert(n)
    };
    let mut entries: Vec<(usize, usize, u32)> = Vec::new();
    for (col, e) in unknowns.iter().enumerate() {
        for (k, p) in e.iter().enumerate() {
            for (m, c) in p.terms() {
                let r = key(k, m, &mut rows);
                entries.push((r, col, *c));
            }
        }
    }
    let mut rhs_entries = Vec::new();
    for (k, p) in v.iter().enumerate() {
        for (m, c) in p.terms() {
            rhs_entries.push((key(k, m, &mut rows), *c));
        }
    }
    let mut a = Matrix::zeros(rows.len(), unknowns.len());
    for (r, c, x) in entries {
        a.set(r, c, f.add(a.get(r, c), x));
    }
    let mut b = vec![0u32; rows.len()];
    for (r, x) in rhs_entries {
        b[r] = f.add(b[r], x);
    }
    let Some(sol) = a.solve(&b, f) else { return Ok(None) };
    let mut out = vec![ring.zero(); s];
    for (x, src) in sol.iter().zip(&source_of) {
        if *x == 0 {
            continue;
        }
        if let Some((j, u)) = src {
            out[*j] = out[*j].add(&Polynomial::term(u.clone(), *x, f))?;
        }
    }
    Ok(Some(reduce_elem(ring, &out)))
}

/// Chain map `φ_i : K_i -> F_i` between two complexes, with `φ_0` given.
#[derive(Clone, Debug)]
pub struct ComparisonMap {
    pub maps: Vec<FreeMap>,
}

impl ComparisonMap {
    /// `δ_i φ_i = φ_{i-1} ∂_i` for every computed `i`.
    pub fn is_chain_map(&self, source: &Resolution, target: &Resolution) -> Result<bool> {
        let ring = &source.ring;
        for i in 1..self.maps.len() {
            let lhs = match target.differential(i) {
                Some(d) => d.compose(&self.maps[i], ring)?,
                None => FreeMap::zero(self.maps[i].source.clone(), target.free_module(i - 1), ring),
            };
            let rhs = match source.differential(i) {
                Some(d) => self.maps[i - 1].compose(d, ring)?,
                None => FreeMap::zero(self.maps[i].source.clone(), target.free_module(i - 1), ring),
            };
            let diff: Vec<ModuleElem> = lhs
                .columns
                .iter()
                .zip(&rhs.columns)
                .map(|(a, b)| reduce_elem(ring, &add_elems(a, &scale_elem(b, &ring.one().neg()))))
                .collect();
            if !diff.iter().all(|c| elem_is_zero(c)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Lifts `phi0 : K_0 -> F_0` to a chain map up to homological degree `k`.
pub fn comparison_map(source: &Resolution, target: &Resolution, phi0: &FreeMap, k: usize) -> Result<ComparisonMap> {
    let ring = &source.ring;
    if phi0.source != source.f0 || phi0.target != target.f0 {
        return Err(Error::Structure("φ_0 does not match the degree-0 free modules".into()));
    }
    let mut maps = vec![phi0.clone()];
    for i in 1..=k {
        let src = source.free_module(i);
        let tgt = target.free_module(i);
        let mut cols = Vec::with_capacity(src.rank());
        let di = source.differential(i);
        for j in 0..src.rank() {
            let image = maps[i - 1].apply(&di.unwrap().columns[j], ring);
            let col = match target.differential(i) {
                Some(d) => lift(ring, d, &image)?,
                None if elem_is_zero(&image) => Some(Vec::new()),
                None => None,
            };
            let col = col.ok_or_else(|| Error::Internal(format!("cannot lift the comparison map at step {i}")))?;
            cols.push(col);
        }
        maps.push(FreeMap::new(src, tgt, cols)?);
    }
    Ok(ComparisonMap { maps })
}

/// The image of `v` in `F/(gens + I F)` is zero.
pub fn in_submodule(ring: &QuotientRingSpec, module: &GradedFreeModule, gens: &[ModuleElem], v: &[Polynomial]) -> Result<bool> {
    submodule_basis(ring, module, gens)?.contains(v)
}
