//! Subcommands of the `lieball` binary. Every command renders into a string
//! and an exit status; `main` only decides where the bytes go.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lieball_core::blattner::bounds_for_max_l;
use lieball_core::harmonic::{certify_row, laplacian_power, so_invariance_check, RowCertificate};
use lieball_core::kostant::Kostant;
use lieball_core::repdata::{
    ehw_first_reduction_point, ehw_last_reduction_point, ehw_lowest_weight, ehw_unitarizable, inf_char,
    is_regular_d, knapp_stein_residue_degree, range_verdict,
};
use lieball_core::verify::{verify, verma_sweep, VerifyReport};
use lieball_core::weyl::{enumerate_coset_reps, ENUMERATION_MAX_RANK};
use lieball_core::Weight;
use num_rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{exit, CliError};
use crate::formats::{self, csv_finish, polynomial_from_json, polynomial_to_json, Format};
use crate::parallel::{ktype_table_parallel, pool, thread_cap};

#[derive(Debug, Parser)]
#[command(name = "lieball", version, about = "Exact K-type tables and checks for the Laplacian on the Lie ball")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Rank of SO(2m); the Lie ball has dimension n = 2m.
    #[arg(long)]
    pub m: usize,
    /// Parameter of the cohomologically induced module [default: m - 1].
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<i64>,
    /// Largest harmonic degree covered.
    #[arg(long = "max-l", default_value_t = 4)]
    pub max_l: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized checks; echoed in the output.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file [default: standard output].
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn lambda(&self) -> i64 {
        self.lambda.unwrap_or(self.m as i64 - 1)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.m < 2 {
            return Err(CliError::Usage(format!("--m {} must be at least 2", self.m)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Args)]
pub struct LaplaceArgs {
    /// Polynomial JSON file.
    #[arg(long)]
    pub input: PathBuf,
    /// Number of times the Laplacian is applied.
    #[arg(long, default_value_t = 1)]
    pub power: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// K-type table of the cohomologically induced module.
    Ktypes(RunConfig),
    /// Harmonic K-types with kernel-rank certificates.
    Harmonic {
        #[command(flatten)]
        cfg: RunConfig,
        /// Random polynomials for the rotation-invariance check.
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// Compare both K-type tables and run the consistency checks.
    Verify(RunConfig),
    /// Minimal coset representatives of W(D_m) modulo W(gl(m)).
    Weyl(RunConfig),
    /// Weakly fair / good verdicts and the infinitesimal character.
    Ranges(RunConfig),
    /// Verma homomorphism pairs and their infinitesimal characters.
    Verma(RunConfig),
    /// Unitarizability along the scalar line and Knapp–Stein residues.
    Ehw(RunConfig),
    /// Apply a power of the Laplacian to a polynomial read from JSON.
    Laplace(LaplaceArgs),
}

impl Command {
    pub fn out(&self) -> Option<&PathBuf> {
        match self {
            Command::Ktypes(c)
            | Command::Harmonic { cfg: c, .. }
            | Command::Verify(c)
            | Command::Weyl(c)
            | Command::Ranges(c)
            | Command::Verma(c)
            | Command::Ehw(c) => c.out.as_ref(),
            Command::Laplace(a) => a.out.as_ref(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub body: String,
}

impl Outcome {
    fn pass(body: String) -> Self {
        Outcome { code: exit::PASS, body }
    }

    fn verdict(ok: bool, body: String) -> Self {
        Outcome {
            code: if ok { exit::PASS } else { exit::VERIFICATION_FAILED },
            body,
        }
    }
}

pub fn run(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Ktypes(cfg) => cmd_ktypes(cfg),
        Command::Harmonic { cfg, trials } => cmd_harmonic(cfg, *trials),
        Command::Verify(cfg) => cmd_verify(cfg),
        Command::Weyl(cfg) => cmd_weyl(cfg),
        Command::Ranges(cfg) => cmd_ranges(cfg),
        Command::Verma(cfg) => cmd_verma(cfg),
        Command::Ehw(cfg) => cmd_ehw(cfg),
        Command::Laplace(args) => cmd_laplace(args),
    }
}

fn json<T: Serialize>(v: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn csv_rows(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    csv_finish(w)
}

fn rat(r: Rational64) -> String {
    r.to_string()
}

fn weight_strings(w: &Weight) -> Vec<String> {
    w.coords().iter().map(ToString::to_string).collect()
}

/// `e1+e2`, `e0-e3`, indices shifted by `first`.
pub fn root_label(root: &Weight, first: usize) -> String {
    let mut s = String::new();
    for (i, c) in root.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.signum() < 0 { "-" } else if s.is_empty() { "" } else { "+" };
        let _ = write!(s, "{sign}e{}", i + first);
    }
    s
}

pub fn cmd_ktypes(cfg: &RunConfig) -> Result<Outcome, CliError> {
    cfg.validate()?;
    let lambda = cfg.lambda();
    let kostant = Kostant::new(cfg.m)?;
    let table = ktype_table_parallel(&kostant, lambda, bounds_for_max_l(cfg.m, lambda, cfg.max_l), thread_cap()?)?;
    let body = match cfg.format {
        Format::Json => formats::table_to_json(&table)?,
        Format::Csv => formats::table_to_csv(&table)?,
        Format::Text => formats::table_to_text(&table),
    };
    Ok(Outcome::pass(body))
}

#[derive(Debug, Serialize)]
struct HarmonicRowDoc {
    l: u64,
    mu0: i64,
    mu: Vec<i64>,
    kernel_dim: u64,
    weyl_dim: u64,
    closed_form: u64,
    certified: bool,
}

#[derive(Debug, Serialize)]
struct HarmonicDoc {
    m: usize,
    n: usize,
    max_l: u64,
    seed: u64,
    trials: usize,
    rotation_invariance: bool,
    rows: Vec<HarmonicRowDoc>,
}

pub fn cmd_harmonic(cfg: &RunConfig, trials: usize) -> Result<Outcome, CliError> {
    cfg.validate()?;
    let m = cfg.m;
    let rows: Vec<RowCertificate> = pool(thread_cap()?)?.install(|| {
        (0..=cfg.max_l)
            .into_par_iter()
            .map(|l| certify_row(m, l))
            .collect::<Result<_, _>>()
    })?;
    let invariant = so_invariance_check(2 * m, trials, cfg.seed)?;
    let certified = rows.iter().all(RowCertificate::passes);
    let doc = HarmonicDoc {
        m,
        n: 2 * m,
        max_l: cfg.max_l,
        seed: cfg.seed,
        trials,
        rotation_invariance: invariant,
        rows: rows
            .iter()
            .map(|r| HarmonicRowDoc {
                l: r.l,
                mu0: r.ktype.mu0(),
                mu: r.ktype.mu().to_vec(),
                kernel_dim: r.kernel_dim,
                weyl_dim: r.weyl_dim,
                closed_form: r.closed_form,
                certified: r.passes(),
            })
            .collect(),
    };
    let body = match cfg.format {
        Format::Json => json(&doc)?,
        Format::Csv => {
            let mut header = vec!["l".to_string()];
            header.extend(formats::table_csv_header(m));
            header.extend(["kernel_dim", "weyl_dim", "closed_form", "certified"].map(String::from));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv_rows(
                &header,
                doc.rows.iter().map(|r| {
                    let mut v = vec![r.l.to_string(), r.mu0.to_string()];
                    v.extend(r.mu.iter().map(ToString::to_string));
                    v.extend([
                        r.kernel_dim.to_string(),
                        r.weyl_dim.to_string(),
                        r.closed_form.to_string(),
                        r.certified.to_string(),
                    ]);
                    v
                }),
            )?
        }
        Format::Text => {
            let mut s = format!("harmonic polynomials on C^{} up to degree {}\n", 2 * m, cfg.max_l);
            for r in &rows {
                let _ = writeln!(
                    s,
                    "l={} {} kernel={} weyl={} closed_form={} {}",
                    r.l,
                    r.ktype,
                    r.kernel_dim,
                    r.weyl_dim,
                    r.closed_form,
                    if r.passes() { "certified" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(
                s,
                "rotation invariance: {} (seed {}, {} trials)",
                if invariant { "PASS" } else { "FAIL" },
                cfg.seed,
                trials
            );
            s
        }
    };
    let code = if !certified {
        exit::CERTIFICATION_FAILED
    } else if !invariant {
        exit::VERIFICATION_FAILED
    } else {
        exit::PASS
    };
    Ok(Outcome { code, body })
}

#[derive(Debug, Serialize)]
struct DiffDoc {
    mu0: i64,
    mu: Vec<i64>,
    blattner: i64,
    harmonic: i64,
}

#[derive(Debug, Serialize)]
struct VerifyDoc {
    m: usize,
    lambda: i64,
    max_l: u64,
    pass: bool,
    tables_agree: bool,
    blattner_entries: usize,
    harmonic_entries: usize,
    first_diff: Option<DiffDoc>,
    lemma_holds: bool,
    lemma_cases: u64,
    lemma_counterexamples: usize,
    weakly_fair: bool,
    good: bool,
    verma_ok: bool,
    verma_pairs: usize,
    verma_spurious: usize,
}

/// Renders a verification report; exit status 1 unless every check passes.
pub fn render_verify(r: &VerifyReport, format: Format) -> Result<Outcome, CliError> {
    let body = match format {
        Format::Json => json(&VerifyDoc {
            m: r.m,
            lambda: r.m as i64 - 1,
            max_l: r.max_l,
            pass: r.passes(),
            tables_agree: r.tables_agree(),
            blattner_entries: r.blattner.entries.len(),
            harmonic_entries: r.harmonic.entries.len(),
            first_diff: r.first_diff.as_ref().map(|d| DiffDoc {
                mu0: d.ktype.mu0(),
                mu: d.ktype.mu().to_vec(),
                blattner: d.blattner,
                harmonic: d.harmonic,
            }),
            lemma_holds: r.lemma.holds(),
            lemma_cases: r.lemma.cases,
            lemma_counterexamples: r.lemma.counterexamples.len(),
            weakly_fair: r.range.weakly_fair,
            good: r.range.good,
            verma_ok: r.verma_ok(),
            verma_pairs: r.verma.len(),
            verma_spurious: r.verma_spurious.len(),
        })?,
        Format::Csv => {
            let status = |ok: bool| if ok { "PASS" } else { "FAIL" }.to_string();
            let diff = r
                .first_diff
                .as_ref()
                .map(|d| format!("{} blattner={} harmonic={}", d.ktype, d.blattner, d.harmonic))
                .unwrap_or_default();
            csv_rows(
                &["check", "status", "detail"],
                [
                    vec!["tables".into(), status(r.tables_agree()), diff],
                    vec!["lemma".into(), status(r.lemma.holds()), format!("{} cases", r.lemma.cases)],
                    vec![
                        "range".into(),
                        status(r.range_ok()),
                        format!("weakly_fair={} good={}", r.range.weakly_fair, r.range.good),
                    ],
                    vec!["verma".into(), status(r.verma_ok()), format!("{} pairs", r.verma.len())],
                    vec!["overall".into(), status(r.passes()), String::new()],
                ],
            )?
        }
        Format::Text => format!("{r}\n"),
    };
    Ok(Outcome::verdict(r.passes(), body))
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    cfg.validate()?;
    if cfg.lambda() != cfg.m as i64 - 1 {
        return Err(CliError::Usage(format!(
            "verify compares at lambda = m - 1 = {}, got --lambda {}",
            cfg.m as i64 - 1,
            cfg.lambda()
        )));
    }
    render_verify(&verify(cfg.m, cfg.max_l)?, cfg.format)
}

#[derive(Debug, Serialize)]
struct WeylElementDoc {
    index: usize,
    length: usize,
    element: String,
    inversions: Vec<String>,
}

#[derive(Debug, Serialize)]
struct WeylDoc {
    m: usize,
    cardinality: usize,
    elements: Vec<WeylElementDoc>,
}

pub fn cmd_weyl(cfg: &RunConfig) -> Result<Outcome, CliError> {
    cfg.validate()?;
    if cfg.m > ENUMERATION_MAX_RANK {
        return Err(CliError::Usage(format!(
            "--m {} exceeds the enumeration bound {ENUMERATION_MAX_RANK}",
            cfg.m
        )));
    }
    let reps = enumerate_coset_reps(cfg.m)?;
    let doc = WeylDoc {
        m: cfg.m,
        cardinality: reps.len(),
        elements: reps
            .iter()
            .enumerate()
            .map(|(index, w)| WeylElementDoc {
                index,
                length: w.length(),
                element: w.to_string(),
                inversions: w.inversion_set().roots().iter().map(|r| root_label(r, 1)).collect(),
            })
            .collect(),
    };
    let body = match cfg.format {
        Format::Json => json(&doc)?,
        Format::Csv => csv_rows(
            &["index", "length", "element", "inversions"],
            doc.elements.iter().map(|e| {
                vec![
                    e.index.to_string(),
                    e.length.to_string(),
                    e.element.clone(),
                    e.inversions.join(" "),
                ]
            }),
        )?,
        Format::Text => {
            let mut s = format!("coset representatives of W(D_{}) / W(gl({}))\n", cfg.m, cfg.m);
            for e in &doc.elements {
                let _ = writeln!(
                    s,
                    "{:>4}  len {}  {}  {{{}}}",
                    e.index,
                    e.length,
                    e.element,
                    e.inversions.join(", ")
                );
            }
            let _ = writeln!(s, "cardinality {} = 2^{}", doc.cardinality, cfg.m - 1);
            s
        }
    };
    Ok(Outcome::pass(body))
}

#[derive(Debug, Serialize)]
struct WitnessDoc {
    root: String,
    pairing: String,
}

#[derive(Debug, Serialize)]
struct RangesDoc {
    m: usize,
    lambda: i64,
    weakly_fair: bool,
    good: bool,
    fair_weight: Vec<String>,
    good_weight: Vec<String>,
    fair_witnesses: Vec<WitnessDoc>,
    good_witnesses: Vec<WitnessDoc>,
    infinitesimal_character: Vec<String>,
    regular: bool,
}

pub fn cmd_ranges(cfg: &RunConfig) -> Result<Outcome, CliError> {
    cfg.validate()?;
    let lambda = cfg.lambda();
    let v = range_verdict(cfg.m, lambda)?;
    let ic = inf_char(cfg.m, lambda);
    let witnesses = |ws: &[(Weight, Rational64)]| {
        ws.iter()
            .map(|(r, p)| WitnessDoc {
                root: root_label(r, 0),
                pairing: rat(*p),
            })
            .collect::<Vec<_>>()
    };
    let doc = RangesDoc {
        m: cfg.m,
        lambda,
        weakly_fair: v.weakly_fair,
        good: v.good,
        fair_weight: weight_strings(&v.fair_weight),
        good_weight: weight_strings(&v.good_weight),
        fair_witnesses: witnesses(&v.fair_witnesses),
        good_witnesses: witnesses(&v.good_witnesses),
        infinitesimal_character: weight_strings(&ic),
        regular: is_regular_d(&ic),
    };
    let body = match cfg.format {
        Format::Json => json(&doc)?,
        Format::Csv => csv_rows(
            &["condition", "holds", "root", "pairing"],
            [("weakly_fair", doc.weakly_fair, &doc.fair_witnesses), ("good", doc.good, &doc.good_witnesses)]
                .into_iter()
                .flat_map(|(name, holds, ws)| {
                    let head = vec![name.to_string(), holds.to_string(), String::new(), String::new()];
                    std::iter::once(head).chain(ws.iter().map(move |w| {
                        vec![name.to_string(), holds.to_string(), w.root.clone(), w.pairing.clone()]
                    }))
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut s = format!("m={} lambda={}\n", cfg.m, lambda);
            let _ = writeln!(s, "lambda - rho(u)          = {}", v.fair_weight);
            let _ = writeln!(s, "weakly fair: {}", doc.weakly_fair);
            for w in &doc.fair_witnesses {
                let _ = writeln!(s, "  <., {}> = {}", w.root, w.pairing);
            }
            let _ = writeln!(s, "lambda - rho(u) + rho_l  = {}", v.good_weight);
            let _ = writeln!(s, "good: {}", doc.good);
            for w in &doc.good_witnesses {
                let _ = writeln!(s, "  <., {}> = {}", w.root, w.pairing);
            }
            let _ = writeln!(
                s,
                "infinitesimal character {} is {}",
                ic,
                if doc.regular { "regular" } else { "singular" }
            );
            s
        }
    };
    Ok(Outcome::pass(body))
}

#[derive(Debug, Serialize)]
struct VermaPairDoc {
    l: u64,
    lambda: i64,
    nu: i64,
    accepted: bool,
    hc_lambda: Vec<String>,
    hc_nu: Vec<String>,
    orbit_equal: bool,
    knapp_stein_degree: Option<u64>,
}

#[derive(Debug, Serialize)]
struct VermaDoc {
    m: usize,
    max_l: u64,
    spurious: Vec<(i64, i64)>,
    pairs: Vec<VermaPairDoc>,
}

pub fn cmd_verma(cfg: &RunConfig) -> Result<Outcome, CliError> {
    cfg.validate()?;
    let m = cfg.m as i64;
    let (checks, spurious) = verma_sweep(cfg.m, cfg.max_l)?;
    let mut pairs = Vec::new();
    for c in &checks {
        let (lambda, nu) = (m - c.l as i64, m + c.l as i64);
        pairs.push(VermaPairDoc {
            l: c.l,
            lambda,
            nu,
            accepted: c.accepted,
            hc_lambda: weight_strings(&lieball_core::repdata::verma_hc_parameter(cfg.m, lambda)?),
            hc_nu: weight_strings(&lieball_core::repdata::verma_hc_parameter(cfg.m, nu)?),
            orbit_equal: c.orbit_equal,
            knapp_stein_degree: knapp_stein_residue_degree(2 * cfg.m as u64, Rational64::from_integer(lambda))?,
        });
    }
    let ok = spurious.is_empty()
        && pairs
            .iter()
            .all(|p| p.accepted && p.orbit_equal && p.knapp_stein_degree == Some(p.l));
    let doc = VermaDoc {
        m: cfg.m,
        max_l: cfg.max_l,
        spurious,
        pairs,
    };
    let body = match cfg.format {
        Format::Json => json(&doc)?,
        Format::Csv => csv_rows(
            &["l", "lambda", "nu", "accepted", "hc_lambda", "hc_nu", "orbit_equal", "knapp_stein_degree"],
            doc.pairs.iter().map(|p| {
                vec![
                    p.l.to_string(),
                    p.lambda.to_string(),
                    p.nu.to_string(),
                    p.accepted.to_string(),
                    p.hc_lambda.join(" "),
                    p.hc_nu.join(" "),
                    p.orbit_equal.to_string(),
                    p.knapp_stein_degree.map(|d| d.to_string()).unwrap_or_default(),
                ]
            }),
        )?,
        Format::Text => {
            let mut s = format!("Verma pairs (m - l, m + l) for m={} up to l={}\n", cfg.m, cfg.max_l);
            for p in &doc.pairs {
                let _ = writeln!(
                    s,
                    "l={} ({}, {}) accepted={} ({}) ~ ({}) orbit_equal={} residue={}",
                    p.l,
                    p.lambda,
                    p.nu,
                    p.accepted,
                    p.hc_lambda.join(", "),
                    p.hc_nu.join(", "),
                    p.orbit_equal,
                    p.knapp_stein_degree.map(|d| d.to_string()).unwrap_or_else(|| "-".into())
                );
            }
            let _ = writeln!(s, "spurious pairs: {}", doc.spurious.len());
            let _ = writeln!(s, "{}", if ok { "PASS" } else { "FAIL" });
            s
        }
    };
    Ok(Outcome::verdict(ok, body))
}

#[derive(Debug, Serialize)]
struct EhwPointDoc {
    z: String,
    lowest_weight: String,
    unitarizable: bool,
}

#[derive(Debug, Serialize)]
struct EhwDoc {
    n: u64,
    first_reduction_point: String,
    last_reduction_point: String,
    lambda: i64,
    knapp_stein_degree: Option<u64>,
    points: Vec<EhwPointDoc>,
}

pub fn cmd_ehw(cfg: &RunConfig) -> Result<Outcome, CliError> {
    cfg.validate()?;
    let n = 2 * cfg.m as u64;
    let lambda = cfg.lambda();
    // z over the half-integers in [-1, n]
    let points = (-2..=2 * n as i64)
        .map(|k| {
            let z = Rational64::new(k, 2);
            Ok(EhwPointDoc {
                z: rat(z),
                lowest_weight: rat(ehw_lowest_weight(n, z)),
                unitarizable: ehw_unitarizable(n, z)?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let doc = EhwDoc {
        n,
        first_reduction_point: rat(ehw_first_reduction_point(n)),
        last_reduction_point: rat(ehw_last_reduction_point(n)),
        lambda,
        knapp_stein_degree: knapp_stein_residue_degree(n, Rational64::from_integer(lambda))?,
        points,
    };
    let body = match cfg.format {
        Format::Json => json(&doc)?,
        Format::Csv => csv_rows(
            &["z", "lowest_weight", "unitarizable"],
            doc.points
                .iter()
                .map(|p| vec![p.z.clone(), p.lowest_weight.clone(), p.unitarizable.to_string()]),
        )?,
        Format::Text => {
            let mut s = format!(
                "n={} A={} B={}\n",
                n, doc.first_reduction_point, doc.last_reduction_point
            );
            let _ = writeln!(
                s,
                "Knapp-Stein residue at lambda={}: {}",
                lambda,
                doc.knapp_stein_degree
                    .map(|d| format!("Delta^{d}"))
                    .unwrap_or_else(|| "none".into())
            );
            for p in &doc.points {
                let _ = writeln!(
                    s,
                    "z={:>5}  lowest weight {:>5} e0  {}",
                    p.z,
                    p.lowest_weight,
                    if p.unitarizable { "unitarizable" } else { "-" }
                );
            }
            s
        }
    };
    Ok(Outcome::pass(body))
}

pub fn cmd_laplace(args: &LaplaceArgs) -> Result<Outcome, CliError> {
    let text = std::fs::read_to_string(&args.input)?;
    let p = polynomial_from_json(&text)?;
    let image = laplacian_power(&p, args.power);
    let body = match args.format {
        Format::Json => polynomial_to_json(&image)?,
        Format::Text => format!("{image}\n"),
        Format::Csv => {
            let doc = formats::PolynomialDoc::from(&image);
            let mut header: Vec<String> = (1..=image.nvars()).map(|i| format!("z{i}")).collect();
            header.extend(["num".into(), "den".into()]);
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv_rows(
                &header,
                doc.terms.iter().map(|t| {
                    let int = |d: &formats::IntDoc| match d {
                        formats::IntDoc::Small(v) => v.to_string(),
                        formats::IntDoc::Big(s) => s.clone(),
                    };
                    let mut row: Vec<String> = t.exp.iter().map(ToString::to_string).collect();
                    row.extend([int(&t.num), int(&t.den)]);
                    row
                }),
            )?
        }
    };
    Ok(Outcome::pass(body))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(m: usize, max_l: u64) -> RunConfig {
        RunConfig {
            m,
            lambda: None,
            max_l,
            format: Format::Text,
            seed: 0,
            out: None,
        }
    }

    #[test]
    fn root_labels() {
        assert_eq!(root_label(&Weight::from_ints(&[1, 0, -1]), 0), "e0-e2");
        assert_eq!(root_label(&Weight::from_ints(&[0, 1, 1]), 1), "e2+e3");
        assert_eq!(root_label(&Weight::from_ints(&[-1, -1]), 1), "-e1-e2");
    }

    #[test]
    fn rank_one_is_a_usage_error() {
        let err = cmd_ktypes(&cfg(1, 2)).unwrap_err();
        assert_eq!(err.exit_code(), exit::USAGE);
    }

    #[test]
    fn verify_rejects_other_lambdas() {
        let mut c = cfg(2, 2);
        c.lambda = Some(0);
        assert_eq!(cmd_verify(&c).unwrap_err().exit_code(), exit::USAGE);
    }
}
