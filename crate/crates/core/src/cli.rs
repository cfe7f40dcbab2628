//! Command-line front end.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{self, FamilySpec};
use crate::groebner::GradedFreeModule;
use crate::intertwine::{Indecomposability, IsoOutcome};
use crate::io::{self, BettiReportJson, HilbertJson, IsoJson, ReportJson, SCHEMA};
use crate::module::ModulePresentation;
use crate::resolution::{resolve_module, Resolution};
use crate::ring::QuotientRingSpec;
use crate::wildness::{complete_intersection_report, hypersurface_report, wildness_certificate, WildnessReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Parser, Debug, Clone)]
#[command(name = "cmwild", version, about = "Certify strict CM-infiniteness and CM-wildness of graded rings")]
pub struct JobConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Characteristic of the base field (overrides the ring file).
    #[arg(long = "field-char", global = true)]
    pub field_char: Option<u32>,
    /// Seed for every randomized choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Run the wildness criterion on a ring.
    Check {
        #[arg(long)]
        ring: PathBuf,
        /// Comma-separated regular sequence, e.g. "x^2,y^2".
        #[arg(long)]
        sequence: Option<String>,
        /// Degrees to scan, e.g. 3..8.
        #[arg(long = "c-window")]
        c_window: Option<String>,
    },
    /// Hypersurface recipe; the ring file must have one relation.
    Hypersurface {
        #[arg(long)]
        ring: PathBuf,
    },
    /// Complete-intersection recipe; relations must form a regular sequence.
    Ci {
        #[arg(long)]
        ring: PathBuf,
    },
    /// Build a family member and its MCM syzygy module.
    Family {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Decide graded isomorphism of two family members.
    Iso {
        #[arg(long, num_args = 1)]
        instance: Vec<PathBuf>,
    },
    /// Minimal free resolution and Betti table.
    Resolve {
        #[arg(long, conflicts_with = "instance")]
        ring: Option<PathBuf>,
        /// Resolve R/(sequence); without it, the residue field.
        #[arg(long)]
        sequence: Option<String>,
        /// Resolve the family member of an instance file.
        #[arg(long)]
        instance: Option<PathBuf>,
        /// Homological length (default: Krull dimension, at least 1).
        #[arg(long)]
        length: Option<usize>,
    },
    /// Hilbert function, series and Krull dimension.
    Hilbert {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long, default_value = "0..10")]
        degrees: String,
    },
    /// Check the structural lemmas and the MCM property on an instance.
    Verify {
        #[arg(long)]
        instance: PathBuf,
    },
}

/// Report text and exit status of one job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub exit: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoRegularSequence(_) => EXIT_BUDGET,
        Error::Internal(_) => 1,
        _ => EXIT_INPUT,
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

fn load_ring(cfg: &JobConfig, path: &Path) -> Result<QuotientRingSpec> {
    io::ring_from_file(&io::read_json(path)?, cfg.field_char)
}

fn load_spec(cfg: &JobConfig, path: &Path) -> Result<FamilySpec> {
    io::spec_from_instance(&io::read_json(path)?, cfg.field_char)
}

fn report_output(cfg: &JobConfig, r: &WildnessReport) -> String {
    match cfg.format {
        Format::Json => to_json(&ReportJson::from_report(r, cfg.seed)),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "verdict:  {}", r.verdict);
            let _ = writeln!(s, "field:    F_{} (seed {})", r.p, cfg.seed);
            let _ = writeln!(s, "sequence: ({}), m = {}, d = {}", r.sequence_text.join(", "), r.m(), r.d);
            if let Some((c, dim)) = r.witness {
                let _ = writeln!(s, "witness:  c = {c}, dim R̄_c = {dim}");
            }
            let scan: Vec<String> = r.scanned.iter().map(|(c, d)| format!("{c}:{d}")).collect();
            let _ = writeln!(s, "scanned:  {}", scan.join(" "));
            let _ = writeln!(s, "{}", r.narrative);
            s
        }
    }
}

fn betti_output(cfg: &JobConfig, res: &Resolution) -> String {
    let b = res.betti();
    match cfg.format {
        Format::Json => {
            let j = b.to_json();
            to_json(&BettiReportJson {
                schema: SCHEMA.into(),
                p: res.ring.field().char(),
                seed: cfg.seed,
                betti: j.betti,
                minimal: j.minimal,
            })
        }
        Format::Text => b.to_text(),
    }
}

#[derive(Serialize)]
struct FamilyJson {
    schema: String,
    p: u32,
    seed: u64,
    relations: Vec<Vec<String>>,
    hilbert_m: Vec<(i32, i64)>,
    betti: Vec<crate::resolution::BettiEntry>,
    omega_generators: usize,
    mcm_verified: bool,
    indecomposability: Indecomposability,
    warnings: Vec<String>,
    note: String,
}

#[derive(Serialize)]
struct VerifyJson {
    schema: String,
    p: u32,
    seed: u64,
    mcm_verified: bool,
    lemma23: family::Lemma23Report,
    lemma25: family::Lemma25Report,
    pass: bool,
}

fn finite_table(m: &ModulePresentation) -> Result<Vec<(i32, i64)>> {
    let hs = m.hilbert_series()?;
    Ok(match hs.finite_part() {
        Some((s, vals)) => vals.iter().enumerate().map(|(i, v)| (s + i as i32, *v)).collect(),
        None => (0..=10).map(|t| (t, hs.coefficient(t))).collect(),
    })
}

/// Runs one job. Errors carry the exit code through [`exit_code`].
pub fn run(cfg: &JobConfig) -> Result<Output> {
    let ok = |stdout: String| Ok(Output { stdout, exit: EXIT_OK });
    match &cfg.command {
        Command::Check { ring, sequence, c_window } => {
            let r = load_ring(cfg, ring)?;
            let y = match sequence {
                Some(s) => Some(io::parse_sequence(&r, &io::split_list(s))?),
                None => None,
            };
            let window = c_window.as_deref().map(io::parse_window).transpose()?;
            ok(report_output(cfg, &wildness_certificate(&r, y, window, cfg.seed)?))
        }
        Command::Hypersurface { ring } => {
            let r = load_ring(cfg, ring)?;
            if r.relations().len() != 1 {
                return Err(Error::Input(format!("a hypersurface needs exactly one relation, found {}", r.relations().len())));
            }
            ok(report_output(cfg, &hypersurface_report(&r.relations()[0], r.vars(), cfg.seed)?))
        }
        Command::Ci { ring } => {
            let r = load_ring(cfg, ring)?;
            ok(report_output(cfg, &complete_intersection_report(r.relations(), r.vars(), cfg.seed)?))
        }
        Command::Family { instance } => {
            let spec = load_spec(cfg, instance)?;
            let m = family::build_family_member(&spec)?;
            let mcm = family::mcm_module(&spec)?;
            let ind = family::indecomposability_test(&spec, cfg.seed)?;
            let note = match &ind {
                Indecomposability::Indecomposable { .. } => "L is indecomposable, hence so are M and its syzygy module Ω^d(M).".to_string(),
                Indecomposability::Decomposable { .. } => "L decomposes, and M and Ω^d(M) decompose accordingly.".into(),
                Indecomposability::Undecided { .. } => "Indecomposability of L was not decided.".into(),
            };
            let out = FamilyJson {
                schema: SCHEMA.into(),
                p: spec.ring.field().char(),
                seed: cfg.seed,
                relations: family::family_columns(&spec).iter().map(|c| c.iter().map(|p| spec.ring.fmt_poly(p)).collect()).collect(),
                hilbert_m: finite_table(&m)?,
                betti: mcm.resolution.betti().to_json().betti,
                omega_generators: mcm.omega.generator_list().len(),
                mcm_verified: mcm.mcm_verified,
                indecomposability: ind,
                warnings: spec.warnings.clone(),
                note,
            };
            match cfg.format {
                Format::Json => ok(to_json(&out)),
                Format::Text => {
                    let mut s = String::new();
                    for (j, c) in out.relations.iter().enumerate() {
                        let _ = writeln!(s, "W column {}: ({})", j + 1, c.join(", "));
                    }
                    let _ = writeln!(s, "Betti table of M:\n{}", mcm.resolution.betti().to_text());
                    let _ = writeln!(s, "Ω^d(M) maximal Cohen-Macaulay: {}", out.mcm_verified);
                    let _ = writeln!(s, "{}", out.note);
                    for w in &out.warnings {
                        let _ = writeln!(s, "warning: {w}");
                    }
                    ok(s)
                }
            }
        }
        Command::Iso { instance } => {
            if instance.len() != 2 {
                return Err(Error::Input("iso needs exactly two --instance files".into()));
            }
            let a = load_spec(cfg, &instance[0])?;
            let b = load_spec(cfg, &instance[1])?;
            let cert = family::iso_test(&a, &b, cfg.seed)?;
            let exit = if matches!(cert.outcome, IsoOutcome::Undecided { .. }) { EXIT_BUDGET } else { EXIT_OK };
            let out = IsoJson {
                schema: SCHEMA.into(),
                p: a.ring.field().char(),
                seed: cfg.seed,
                certificate: cert,
                note: "graded isomorphism only".into(),
            };
            let stdout = match cfg.format {
                Format::Json => to_json(&out),
                Format::Text => {
                    let mut s = match &out.certificate.outcome {
                        IsoOutcome::Isomorphic { sigma } => format!("Isomorphic, sigma = {sigma:?}\n"),
                        IsoOutcome::NotIsomorphic { reason } => format!("NotIsomorphic: {reason}\n"),
                        IsoOutcome::Undecided { reason } => format!("Undecided: {reason}\n"),
                    };
                    let _ = writeln!(s, "intertwiner space dimension {}", out.certificate.solution_space_dim);
                    s
                }
            };
            Ok(Output { stdout, exit })
        }
        Command::Resolve { ring, sequence, instance, length } => {
            let (module, d) = match (instance, ring) {
                (Some(path), _) => {
                    let spec = load_spec(cfg, path)?;
                    let d = spec.d();
                    (family::build_family_member(&spec)?, d)
                }
                (None, Some(path)) => {
                    let r = load_ring(cfg, path)?;
                    let gens = match sequence {
                        Some(s) => io::parse_sequence(&r, &io::split_list(s))?.elements,
                        None => (0..r.nvars()).map(|i| r.var(i)).collect(),
                    };
                    let rels = gens.into_iter().map(|g| vec![g]).collect();
                    let d = r.krull_dimension().max(0) as usize;
                    (ModulePresentation::quotient(&r, GradedFreeModule::new(vec![0]), rels)?, d)
                }
                (None, None) => return Err(Error::Input("resolve needs --ring or --instance".into())),
            };
            let k = length.unwrap_or(d).max(1);
            ok(betti_output(cfg, &resolve_module(&module, k)?))
        }
        Command::Hilbert { ring, degrees } => {
            let r = load_ring(cfg, ring)?;
            let w = io::parse_window(degrees)?;
            let out = HilbertJson {
                schema: SCHEMA.into(),
                p: r.field().char(),
                seed: cfg.seed,
                krull_dimension: r.hilbert_series().dimension(),
                series: r.hilbert_series().to_string(),
                values: w.map(|t| (t, r.hilbert_dim(t))).collect(),
            };
            match cfg.format {
                Format::Json => ok(to_json(&out)),
                Format::Text => {
                    let mut s = format!("HS = {}\nKrull dimension {}\n", out.series, out.krull_dimension);
                    for (t, v) in &out.values {
                        let _ = writeln!(s, "{t:>4} {v}");
                    }
                    ok(s)
                }
            }
        }
        Command::Verify { instance } => {
            let spec = load_spec(cfg, instance)?;
            let mcm = family::mcm_module(&spec)?;
            let l23 = family::verify_lemma23_with(&spec, &mcm)?;
            let l25 = family::verify_lemma25_with(&spec, &mcm.resolution)?;
            let pass = mcm.mcm_verified && l23.pass && l25.pass;
            let out = VerifyJson {
                schema: SCHEMA.into(),
                p: spec.ring.field().char(),
                seed: cfg.seed,
                mcm_verified: mcm.mcm_verified,
                lemma23: l23,
                lemma25: l25,
                pass,
            };
            match cfg.format {
                Format::Json => ok(to_json(&out)),
                Format::Text => {
                    let mut s = String::new();
                    let _ = writeln!(s, "MCM: {}", out.mcm_verified);
                    let _ = writeln!(s, "degree-m part of the reduced syzygy generates M(-{}): {}", out.lemma23.m, out.lemma23.pass);
                    for (t, a, b) in &out.lemma23.table {
                        let _ = writeln!(s, "  t={t:<3} sub={a:<4} M(-m)={b}");
                    }
                    let _ = writeln!(s, "Koszul part splits off with degree bound: {}", out.lemma25.pass);
                    for st in &out.lemma25.steps {
                        let _ = writeln!(s, "  i={} complement degrees {:?}", st.i, st.complement_degrees);
                    }
                    ok(s)
                }
            }
        }
    }
}

/// Entry point for the binary: parses arguments, runs, prints.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match JobConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(&cfg) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.exit
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
