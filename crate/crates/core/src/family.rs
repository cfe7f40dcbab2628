//! Matrix-parameterized families `M = nR̄/⟨W⟩`, where `W` is spanned by the
//! columns of `I e_1 + A_x e_2 + A_y e_3`, their syzygy modules `Ω^d(M)`,
//! and checks of the structural properties those syzygies must satisfy.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{elem_degree, GradedFreeModule, ModuleElem};
use crate::hilbert::HilbertSeries;
use crate::intertwine::{indecomposability_test as matrix_indecomposability, iso_test_matrices, Indecomposability, IsoCertificate};
use crate::linalg::Matrix;
use crate::module::{independent_subset, ModulePresentation};
use crate::poly::Polynomial;
use crate::resolution::{comparison_map, koszul_complex_n, minimal_resolution, reduce_mod, FreeMap, Resolution};
use crate::ring::QuotientRingSpec;
use crate::wildness::{artinian_reduction, verify_regular_element, RegularSequence};

#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub ring: QuotientRingSpec,
    pub y: RegularSequence,
    pub c: i32,
    /// `e_1, e_2` and, for two-parameter families, `e_3`.
    pub basis: Vec<Polynomial>,
    pub n: usize,
    pub ax: Matrix,
    pub ay: Option<Matrix>,
    /// Non-fatal remarks produced while validating.
    pub warnings: Vec<String>,
}

impl FamilySpec {
    pub fn new(ring: QuotientRingSpec, y: RegularSequence, c: i32, basis: Vec<Polynomial>, ax: Matrix, ay: Option<Matrix>) -> Result<Self> {
        let y = if y.verified { y } else { y.verify(&ring)? };
        let d = ring.krull_dimension().max(0) as usize;
        if y.len() != d {
            return Err(Error::NotSystemOfParameters);
        }
        if c <= y.m() - d as i32 + 1 {
            return Err(Error::Input(format!("c = {c} must exceed m - d + 1 = {}", y.m() - d as i32 + 1)));
        }
        let n = ax.rows;
        if n == 0 || !ax.is_square() || ay.as_ref().is_some_and(|m| m.rows != n || m.cols != n) {
            return Err(Error::Input("A_x and A_y must be square of the same size n >= 1".into()));
        }
        let want = if ay.is_some() { 3 } else { 2 };
        if basis.len() != want {
            return Err(Error::Input(format!("expected {want} basis elements of R̄_{c}, got {}", basis.len())));
        }
        let rbar = artinian_reduction(&ring, &y)?;
        let mut reduced = Vec::new();
        for e in &basis {
            if e.homogeneous_degree() != Some(c as u32) || e.is_zero() {
                return Err(Error::Input(format!("basis element {} is not homogeneous of degree {c}", ring.fmt_poly(e))));
            }
            reduced.push(vec![rbar.reduce(e)]);
        }
        if independent_subset(&rbar, &reduced).len() != basis.len() {
            return Err(Error::Input(format!("basis elements are linearly dependent in R̄_{c}")));
        }
        let mut warnings = Vec::new();
        if let Some(ay) = &ay {
            let f = ring.field();
            if ax.mul(ay, f) != ay.mul(&ax, f) {
                warnings.push("A_x and A_y do not commute; the construction is still valid".into());
            }
        }
        Ok(FamilySpec { ring, y, c, basis, n, ax, ay, warnings })
    }

    /// The first `count` standard monomials of `R̄_c`.
    pub fn default_basis(ring: &QuotientRingSpec, y: &RegularSequence, c: i32, count: usize) -> Result<Vec<Polynomial>> {
        let rbar = artinian_reduction(ring, y)?;
        let mons = rbar.component_basis(c);
        if mons.len() < count {
            return Err(Error::Input(format!("dim R̄_{c} = {} is smaller than {count}", mons.len())));
        }
        Ok(mons.into_iter().take(count).map(|m| Polynomial::term(m, 1, ring.field())).collect())
    }

    pub fn d(&self) -> usize {
        self.y.len()
    }

    /// Same ring, sequence, degree and basis, other matrices.
    pub fn with_matrices(&self, ax: Matrix, ay: Option<Matrix>) -> Result<Self> {
        Self::new(self.ring.clone(), self.y.clone(), self.c, self.basis.clone(), ax, ay)
    }

    pub fn same_frame(&self, other: &FamilySpec) -> bool {
        self.ring.vars() == other.ring.vars()
            && self.ring.groebner() == other.ring.groebner()
            && self.ring.field() == other.ring.field()
            && self.y.elements == other.y.elements
            && self.c == other.c
            && self.basis == other.basis
            && self.n == other.n
            && self.ay.is_some() == other.ay.is_some()
    }

    pub fn matrices(&self) -> Vec<&Matrix> {
        std::iter::once(&self.ax).chain(self.ay.as_ref()).collect()
    }
}

/// The relation columns `W`: column `j` has entry `δ_ij e_1 + A_x[i][j] e_2 + A_y[i][j] e_3` in row `i`.
pub fn family_columns(spec: &FamilySpec) -> Vec<ModuleElem> {
    let n = spec.n;
    let mats = spec.matrices();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let mut p = if i == j { spec.basis[0].clone() } else { spec.ring.zero() };
                    for (k, m) in mats.iter().enumerate() {
                        let c = m.get(i, j);
                        if c != 0 {
                            p = p.add(&spec.basis[k + 1].scale(c)).expect("same ring");
                        }
                    }
                    p
                })
                .collect()
        })
        .collect()
}

/// Presentation of `M` over `R`: for each copy `k`, the relations
/// `y_1 e_k, .., y_d e_k`, followed by the columns of `W`.
pub fn build_family_member(spec: &FamilySpec) -> Result<ModulePresentation> {
    let n = spec.n;
    let mut rels = Vec::new();
    for k in 0..n {
        for y in &spec.y.elements {
            let mut v = vec![spec.ring.zero(); n];
            v[k] = y.clone();
            rels.push(v);
        }
    }
    rels.extend(family_columns(spec));
    ModulePresentation::quotient(&spec.ring, GradedFreeModule::new(vec![0; n]), rels)
}

/// Presentation matrix of `M` with the column order of `build_family_member`.
pub fn family_presentation(spec: &FamilySpec) -> Result<FreeMap> {
    let m = build_family_member(spec)?;
    let degs = m.relations.iter().map(|r| elem_degree(r, &m.ambient).unwrap_or(0)).collect();
    FreeMap::new(GradedFreeModule::new(degs), m.ambient.clone(), m.relations.clone())
}

/// Minimal resolution of `M` over `R` up to homological degree `d`.
pub fn family_resolution(spec: &FamilySpec) -> Result<Resolution> {
    minimal_resolution(&spec.ring, &family_presentation(spec)?, spec.d())
}

/// `y_1..y_d` is a regular sequence on the module.
pub fn is_mcm(module: &ModulePresentation, y: &RegularSequence) -> Result<bool> {
    if module.is_zero()? {
        return Ok(false);
    }
    let mut cur = module.clone();
    for yi in &y.elements {
        if !verify_regular_element(yi, &cur)? {
            return Ok(false);
        }
        cur = cur.quotient_by_elements(std::slice::from_ref(yi))?;
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct McmModule {
    pub omega: ModulePresentation,
    pub mcm_verified: bool,
    pub resolution: Resolution,
}

/// `Ω^d(M) = Im δ_d` together with its MCM check.
pub fn mcm_module(spec: &FamilySpec) -> Result<McmModule> {
    if spec.d() == 0 {
        return Err(Error::Input("the ring is Artinian; Ω^0(M) = M".into()));
    }
    let resolution = family_resolution(spec)?;
    let omega = resolution.syzygy_module(spec.d())?;
    let mcm_verified = is_mcm(&omega, &spec.y)?;
    Ok(McmModule { omega, mcm_verified, resolution })
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma23Report {
    pub pass: bool,
    pub m: i32,
    /// `(t, HF_t(sub), HF_{t-m}(M))`.
    pub table: Vec<(i32, i64, i64)>,
    pub generators: usize,
}

/// The degree-`m` part of `Ω^d(M)/yΩ^d(M)` generates a copy of `M(-m)`:
/// compares Hilbert series exactly.
pub fn verify_lemma23(spec: &FamilySpec) -> Result<Lemma23Report> {
    let mcm = mcm_module(spec)?;
    verify_lemma23_with(spec, &mcm)
}

pub fn verify_lemma23_with(spec: &FamilySpec, mcm: &McmModule) -> Result<Lemma23Report> {
    let m = spec.y.m();
    let bar = reduce_mod(&mcm.omega, &spec.y.elements)?;
    let gens = bar.component(m)?;
    let generators = gens.len();
    let sub = ModulePresentation::subquotient(&bar.ring, bar.ambient.clone(), gens, bar.relations.clone())?;
    let hs_sub = sub.hilbert_series()?;
    let hs_m: HilbertSeries = build_family_member(spec)?.hilbert_series()?;
    let shifted = hs_m.shifted(m);
    let top = shifted.top_degree().unwrap_or(m).max(hs_sub.top_degree().unwrap_or(m));
    let table = (m..=top).map(|t| (t, hs_sub.coefficient(t), hs_m.coefficient(t - m))).collect();
    let pass = hs_sub == shifted && generators == spec.n;
    Ok(Lemma23Report { pass, m, table, generators })
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma25Step {
    pub i: usize,
    pub koszul_degrees: Vec<i32>,
    pub resolution_degrees: Vec<i32>,
    pub complement_degrees: Vec<i32>,
    pub split_mono: bool,
    pub degree_bound: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma25Report {
    pub pass: bool,
    pub steps: Vec<Lemma25Step>,
}

/// The comparison map from `n` copies of the Koszul complex into the minimal
/// resolution of `M` is split injective, with complement generated in
/// degrees `>= c + i - 1`.
pub fn verify_lemma25(spec: &FamilySpec) -> Result<Lemma25Report> {
    let res = family_resolution(spec)?;
    verify_lemma25_with(spec, &res)
}

pub fn verify_lemma25_with(spec: &FamilySpec, res: &Resolution) -> Result<Lemma25Report> {
    let ring = &spec.ring;
    let d = spec.d();
    let kos = koszul_complex_n(ring, &spec.y.elements, spec.n)?;
    if res.f0 != kos.f0 {
        return Err(Error::Internal("F_0 differs from n copies of R".into()));
    }
    let phi = comparison_map(&kos, res, &FreeMap::identity(kos.f0.clone(), ring), d)?;
    if !phi.is_chain_map(&kos, res)? {
        return Err(Error::Internal("comparison map is not a chain map".into()));
    }
    let f = ring.field();
    let mut steps = Vec::new();
    for i in 1..=d {
        let kd = kos.free_module(i).degrees;
        let fd = res.free_module(i).degrees;
        let split_mono = phi.maps[i].constant_part().rank(f) == kd.len();
        let mut rest = fd.clone();
        let mut contained = true;
        for k in &kd {
            match rest.iter().position(|x| x == k) {
                Some(pos) => {
                    rest.remove(pos);
                }
                None => contained = false,
            }
        }
        rest.sort_unstable();
        let degree_bound = contained && rest.iter().all(|&e| e >= spec.c + i as i32 - 1);
        steps.push(Lemma25Step { i, koszul_degrees: kd, resolution_degrees: fd, complement_degrees: rest, split_mono, degree_bound });
    }
    let pass = steps.iter().all(|s| s.split_mono && s.degree_bound);
    Ok(Lemma25Report { pass, steps })
}

/// Graded isomorphism of two family members, decided on the matrices.
pub fn iso_test(a: &FamilySpec, b: &FamilySpec, seed: u64) -> Result<IsoCertificate> {
    if !a.same_frame(b) {
        return Err(Error::Input("family members do not share ring, sequence, degree, basis and size".into()));
    }
    iso_test_matrices(&a.matrices(), &b.matrices(), a.n, a.ring.field(), seed).map_err(Error::Input)
}

pub fn indecomposability_test(spec: &FamilySpec, seed: u64) -> Result<Indecomposability> {
    matrix_indecomposability(&spec.matrices(), spec.n, spec.ring.field(), seed).map_err(Error::Input)
}
