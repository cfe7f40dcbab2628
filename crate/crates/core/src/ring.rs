//! Standard graded quotient rings `R = k[x_1..x_n] / I`.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{buchberger, normal_form, GradedFreeModule};
use crate::hilbert::{HilbertSeries, Staircase};
use crate::monomial::Monomial;
use crate::poly::{parse_poly, Polynomial};

/// Ambient variables, homogeneous defining relations and the reduced
/// Gröbner basis of the ideal they generate (computed once, at construction).
#[derive(Clone, Debug)]
pub struct QuotientRingSpec {
    vars: Vec<String>,
    field: PrimeField,
    relations: Vec<Polynomial>,
    groebner: Vec<Polynomial>,
}

impl QuotientRingSpec {
    pub fn new(vars: Vec<String>, relations: Vec<Polynomial>, field: PrimeField) -> Result<Self> {
        let n = vars.len();
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || !v.chars().next().unwrap().is_ascii_alphabetic() && !v.starts_with('_') {
                return Err(Error::Input(format!("invalid variable name '{v}'")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Input(format!("duplicate variable '{v}'")));
            }
        }
        for r in &relations {
            if r.nvars() != n || r.field() != field {
                return Err(Error::Structure("relation lives in a different ring".into()));
            }
            if r.is_zero() {
                continue;
            }
            match r.homogeneous_degree() {
                Some(d) if d > 0 => {}
                Some(_) => return Err(Error::Input(format!("relation {} has degree 0", r.fmt_with(&vars)))),
                None => return Err(Error::Input(format!("relation {} is not homogeneous", r.fmt_with(&vars)))),
            }
        }
        let relations: Vec<Polynomial> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        let groebner = buchberger(&relations, n, field)?;
        Ok(QuotientRingSpec { vars, field, relations, groebner })
    }

    /// Parses relation strings over the given variables.
    pub fn parse(vars: &[&str], relations: &[&str], p: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let rels = relations.iter().map(|r| parse_poly(r, &names, field)).collect::<Result<Vec<_>>>()?;
        Self::new(names, rels, field)
    }

    pub fn polynomial_ring(vars: Vec<String>, field: PrimeField) -> Self {
        QuotientRingSpec { vars, field, relations: Vec::new(), groebner: Vec::new() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    /// Reduced Gröbner basis of the defining ideal (grevlex).
    pub fn groebner(&self) -> &[Polynomial] {
        &self.groebner
    }

    /// The same ring with extra relations adjoined.
    pub fn with_relations(&self, extra: &[Polynomial]) -> Result<Self> {
        let mut rels = self.relations.clone();
        rels.extend(extra.iter().cloned());
        Self::new(self.vars.clone(), rels, self.field)
    }

    /// The ambient polynomial ring.
    pub fn ambient(&self) -> Self {
        Self::polynomial_ring(self.vars.clone(), self.field)
    }

    pub fn parse_poly(&self, text: &str) -> Result<Polynomial> {
        parse_poly(text, &self.vars, self.field)
    }

    pub fn fmt_poly(&self, p: &Polynomial) -> String {
        p.fmt_with(&self.vars)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.nvars(), self.field, i)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars(), self.field)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self.nvars(), self.field, 1)
    }

    /// Canonical representative modulo the defining ideal.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.groebner)
    }

    pub fn is_zero_ring(&self) -> bool {
        self.groebner.iter().any(|g| g.leading().is_some_and(|(m, _)| m.is_one()))
    }

    pub(crate) fn staircase(&self) -> Staircase {
        let leads = self.groebner.iter().map(|g| g.leading().unwrap().0.clone()).collect();
        Staircase::from_leads(self.nvars(), GradedFreeModule::new(vec![0]), vec![leads])
    }

    /// `dim_k R_t`.
    pub fn hilbert_dim(&self, t: i32) -> usize {
        if t < 0 {
            return 0;
        }
        self.staircase().dim_in_degree(t)
    }

    /// Standard monomials of degree `t`, grevlex descending.
    pub fn component_basis(&self, t: i32) -> Vec<Monomial> {
        if t < 0 {
            return Vec::new();
        }
        self.staircase().basis_in_degree(t).into_iter().map(|(_, m)| m).collect()
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        self.staircase().series()
    }

    /// Krull dimension from the leading-term ideal; -1 for the zero ring.
    pub fn krull_dimension(&self) -> i64 {
        let d = self.staircase().dimension();
        if d < 0 {
            eprintln!("warning: the zero ring has no Krull dimension; reporting -1");
        }
        d
    }

    /// Top nonzero degree of an Artinian ring, `None` otherwise.
    pub fn top_degree(&self) -> Option<i32> {
        self.hilbert_series().top_degree()
    }
}

/// `dim_k R_t` (free function form).
pub fn hilbert_dim(ring: &QuotientRingSpec, t: i32) -> usize {
    ring.hilbert_dim(t)
}

pub fn component_basis(ring: &QuotientRingSpec, t: i32) -> Vec<Monomial> {
    ring.component_basis(t)
}

pub fn krull_dimension(ring: &QuotientRingSpec) -> i64 {
    ring.krull_dimension()
}
