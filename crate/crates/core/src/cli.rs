//! Command-line front end.
//!
//! Every subcommand renders to a string so the binary stays a thin wrapper
//! and the output can be checked directly in tests. Human output uses six
//! decimals; CSV and JSON use shortest round-trip formatting and are
//! byte-stable for identical inputs. Exit codes: 0 success, 1 audit found
//! violations, 2 usage or domain error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::bounds::{self, BoundError, BoundQuery};
use crate::constants::constants;
use crate::cusp::{horoball_orbit, write_horoball_csv, Horoball};
use crate::moebius::{IsometryClass, MoebiusMap};
use crate::spectrum::{self, SpectrumError, SpectrumFormat};
use crate::tolerance;
use crate::witness::{self, WitnessError, WitnessParams};

/// Version tag carried by JSON objects.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Human,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "geodesic-bounds",
    version,
    about = "Length bounds for closed geodesics in hyperbolic link complements"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Upper bound on the n-th shortest closed geodesic length.
    Bound {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Volume of the filled manifold (0 if it is not hyperbolic).
        #[arg(long, value_parser = parse_volume)]
        volume: f64,
    },
    /// Crossing volume, trace bound and length bound for n = 1..=n-max.
    Table {
        #[arg(long = "n-max", value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, value_parser = parse_volume)]
        volume: f64,
    },
    /// Construct a loxodromic witness and compare it with its bound.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
    /// Tetrahedron volume, cusp density constant and minimal cusp area.
    Constants,
    /// Audit a length spectrum file (CSV or JSON) against the bounds.
    Audit {
        #[arg(long)]
        file: PathBuf,
        /// Filled volume; required for CSV input.
        #[arg(long, value_parser = parse_volume)]
        volume: Option<f64>,
    },
    /// Horoball diagram: images of H_inf under short words in beta, gamma.
    Horoballs {
        #[arg(long)]
        l: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        a: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        c: Complex64,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum WitnessKind {
    /// beta^{+-n} gamma for gamma = [[a, -1/c], [c, 0]].
    Lemma31 {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        a: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        c: Complex64,
        #[arg(long)]
        l: f64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Cusp area, needed for the bound when |a| > 2.
        #[arg(long)]
        vc: Option<f64>,
    },
    /// (beta^-1)^n gamma with gamma = [[1, 0], [il, 1]].
    Perp {
        #[arg(long)]
        l: f64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// (beta^-1)^n gamma with gamma = [[1, 0], [omega, 1]].
    General {
        #[arg(long)]
        l: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        omega: Complex64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
}

/// Parses `re,im` or a plain real number.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| format!("invalid number `{t}`"))
    };
    match s.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse(re)?, parse(im)?)),
        None => Ok(Complex64::new(parse(s)?, 0.0)),
    }
}

fn parse_volume(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("invalid volume `{s}`"))?;
    if !v.is_finite() || v < 0.0 {
        return Err(format!("volume must be finite and nonnegative, got {s}"));
    }
    Ok(v)
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

/// Rendered output and the exit status to report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub stdout: String,
    pub exit_code: i32,
}

impl Rendered {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            exit_code: EXIT_OK,
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Rendered, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Bound { n, volume } => cmd_bound(*n, *volume, format),
        Command::Table { n_max, volume } => cmd_table(*n_max, *volume, format),
        Command::Witness { kind } => cmd_witness(kind, format),
        Command::Constants => Ok(cmd_constants(format)),
        Command::Audit { file, volume } => cmd_audit(file, *volume, format),
        Command::Horoballs { l, a, c, depth } => cmd_horoballs(*l, *a, *c, *depth, format),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "n/a".to_string(), |v| format!("{v:.6}"))
}

fn csv_opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(String::new, |v| v.to_string())
}

pub fn cmd_bound(n: u32, volume: f64, format: OutputFormat) -> Result<Rendered, CliError> {
    let query = BoundQuery::new(n, volume)?;
    let bound = bounds::geodesic_length_bound(&query);
    let out = match format {
        OutputFormat::Human => format!("{bound:.6}\n"),
        OutputFormat::Csv => format!("n,volume,length_bound\n{n},{volume},{bound}\n"),
        OutputFormat::Json => to_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "n": n,
            "volume": volume,
            "length_bound": bound,
        })),
    };
    Ok(Rendered::ok(out))
}

pub fn cmd_table(n_max: u32, volume: f64, format: OutputFormat) -> Result<Rendered, CliError> {
    let rows = bounds::bound_table(n_max, volume)?;
    let out = match format {
        OutputFormat::Human => {
            let mut s = format!(
                "{:>6}  {:>16}  {:>16}  {:>12}\n",
                "n", "crossing_x", "trace_bound", "length_bound"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>6}  {:>16.6}  {:>16.6}  {:>12.6}",
                    r.n, r.crossing_x, r.trace_bound, r.length_bound
                );
            }
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,crossing_x,trace_bound,length_bound\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    r.n, r.crossing_x, r.trace_bound, r.length_bound
                );
            }
            s
        }
        OutputFormat::Json => to_json(&rows),
    };
    Ok(Rendered::ok(out))
}

/// Everything reported about one constructed witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessReport {
    pub kind: &'static str,
    /// `[a, b, c, d]` as `[re, im]` pairs.
    pub matrix: [[f64; 2]; 4],
    pub trace: [f64; 2],
    pub trace_modulus: f64,
    pub class: IsometryClass,
    pub translation_length: Option<f64>,
    pub trace_bound: Option<f64>,
    pub length_bound: Option<f64>,
    pub satisfied: Option<bool>,
    /// Raw traces of `β^{n}γ` and `β^{-n}γ` for the translate family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_traces: Option<[[f64; 2]; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chosen: Option<witness::Sign>,
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

impl WitnessReport {
    fn new(
        kind: &'static str,
        map: &MoebiusMap,
        trace: Complex64,
        trace_bound: Option<f64>,
    ) -> Self {
        let translation_length = map.translation_length().ok();
        let trace_modulus = trace.norm();
        let length_bound = trace_bound.map(bounds::translation_length_upper);
        let satisfied = trace_bound.map(|b| {
            let trace_ok = trace_modulus <= b * (1.0 + tolerance::ALGEBRA);
            let length_ok = match (translation_length, length_bound) {
                (Some(len), Some(lb)) => len <= lb,
                _ => true,
            };
            trace_ok && length_ok
        });
        Self {
            kind,
            matrix: map.entries().map(pair),
            trace: pair(trace),
            trace_modulus,
            class: map.class(),
            translation_length,
            trace_bound,
            length_bound,
            satisfied,
            pair_traces: None,
            chosen: None,
        }
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                to_json(&json!({ "schema_version": SCHEMA_VERSION, "witness": self }))
            }
            OutputFormat::Csv => {
                let m = &self.matrix;
                let mut s = String::from("field,value\n");
                let mut row = |k: &str, v: String| {
                    let _ = writeln!(s, "{k},{v}");
                };
                row("kind", self.kind.to_string());
                for (name, z) in ["a", "b", "c", "d"].iter().zip(m.iter()) {
                    row(&format!("{name}_re"), z[0].to_string());
                    row(&format!("{name}_im"), z[1].to_string());
                }
                row("trace_re", self.trace[0].to_string());
                row("trace_im", self.trace[1].to_string());
                row("trace_modulus", self.trace_modulus.to_string());
                row("class", self.class.to_string());
                row("translation_length", csv_opt(self.translation_length));
                row("trace_bound", csv_opt(self.trace_bound));
                row("length_bound", csv_opt(self.length_bound));
                row("satisfied", csv_opt(self.satisfied));
                if let Some([p, q]) = self.pair_traces {
                    row("plus_trace_re", p[0].to_string());
                    row("plus_trace_im", p[1].to_string());
                    row("minus_trace_re", q[0].to_string());
                    row("minus_trace_im", q[1].to_string());
                }
                if let Some(sign) = self.chosen {
                    row("chosen", format!("{sign:?}").to_lowercase());
                }
                s
            }
            OutputFormat::Human => {
                let c = |z: &[f64; 2]| format!("{:.6}{:+.6}i", z[0], z[1]);
                let m = &self.matrix;
                let mut s = String::new();
                let _ = writeln!(s, "witness: {}", self.kind);
                let _ = writeln!(
                    s,
                    "matrix: [[{}, {}], [{}, {}]]",
                    c(&m[0]),
                    c(&m[1]),
                    c(&m[2]),
                    c(&m[3])
                );
                if let Some([p, q]) = self.pair_traces {
                    let _ = writeln!(s, "trace(beta^n gamma): {}", c(&p));
                    let _ = writeln!(s, "trace(beta^-n gamma): {}", c(&q));
                }
                if let Some(sign) = self.chosen {
                    let _ = writeln!(s, "chosen: {}", format!("{sign:?}").to_lowercase());
                }
                let _ = writeln!(s, "trace: {}", c(&self.trace));
                let _ = writeln!(s, "|trace|: {:.6}", self.trace_modulus);
                let _ = writeln!(s, "class: {}", self.class);
                let _ = writeln!(
                    s,
                    "translation length: {}",
                    fmt_opt(self.translation_length)
                );
                let _ = writeln!(s, "trace bound: {}", fmt_opt(self.trace_bound));
                let _ = writeln!(s, "length bound: {}", fmt_opt(self.length_bound));
                let sat = self.satisfied.map_or("n/a".to_string(), |b| b.to_string());
                let _ = writeln!(s, "bound satisfied: {sat}");
                s
            }
        }
    }
}

/// Builds the report for one witness subcommand.
pub fn witness_report(kind: &WitnessKind) -> Result<WitnessReport, CliError> {
    match *kind {
        WitnessKind::Lemma31 { a, c, l, n, vc } => {
            let params = WitnessParams::new(l, a, c, n)?;
            let pair = witness::translate_pair(&params)?;
            let check = witness::check_translate_witness(&params, &pair, vc)?;
            let chosen = pair.chosen();
            let mut report = WitnessReport::new("lemma31", &chosen.map, chosen.trace, check.bound);
            report.pair_traces = Some([self::pair(pair.plus.trace), self::pair(pair.minus.trace)]);
            report.chosen = Some(pair.chosen);
            Ok(report)
        }
        WitnessKind::Perp { l, n } => {
            let (map, _) = witness::perpendicular_witness(l, n)?;
            let bound = bounds::perpendicular_trace_bound(l, n)?;
            Ok(WitnessReport::new(
                "perp",
                &map,
                map.raw_trace(),
                Some(bound),
            ))
        }
        WitnessKind::General { l, omega, n } => {
            let (map, trace) = witness::product_witness(l, omega, n)?;
            // no closed-form bound for general shear; use the trace itself
            let bound = (map.class() == IsometryClass::Loxodromic).then(|| trace.norm());
            Ok(WitnessReport::new("general", &map, trace, bound))
        }
    }
}

pub fn cmd_witness(kind: &WitnessKind, format: OutputFormat) -> Result<Rendered, CliError> {
    Ok(Rendered::ok(witness_report(kind)?.render(format)))
}

pub fn cmd_constants(format: OutputFormat) -> Rendered {
    let k = constants();
    let out = match format {
        OutputFormat::Human => format!(
            "v0 = {:.6}\nC0 = {:.6}\npi^2*sqrt(3) = {:.6}\n",
            k.v0, k.c0, k.vc_min
        ),
        OutputFormat::Csv => format!(
            "name,value\nv0,{}\nC0,{}\nvc_min,{}\n",
            k.v0, k.c0, k.vc_min
        ),
        OutputFormat::Json => to_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "v0": k.v0,
            "C0": k.c0,
            "vc_min": k.vc_min,
        })),
    };
    Rendered::ok(out)
}

fn spectrum_format(path: &Path, volume: Option<f64>) -> Result<SpectrumFormat, CliError> {
    let is_json = path
        .extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    if is_json {
        if volume.is_some() {
            return Err(CliError::Usage(
                "--volume applies to CSV input; JSON carries filled_volume".into(),
            ));
        }
        return Ok(SpectrumFormat::Json);
    }
    let filled_volume =
        volume.ok_or_else(|| CliError::Usage("--volume is required for CSV input".into()))?;
    let name = path.file_stem().map_or_else(
        || "spectrum".to_string(),
        |s| s.to_string_lossy().into_owned(),
    );
    Ok(SpectrumFormat::Csv {
        name,
        filled_volume,
    })
}

pub fn cmd_audit(
    path: &Path,
    volume: Option<f64>,
    format: OutputFormat,
) -> Result<Rendered, CliError> {
    let fmt = spectrum_format(path, volume)?;
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let record = spectrum::load_spectrum(&bytes, fmt)?;
    let report = spectrum::audit(&record);
    let out = match format {
        OutputFormat::Human => {
            let mut s = format!(
                "spectrum: {}\nfilled volume: {:.6}\n",
                report.name, report.filled_volume
            );
            let _ = writeln!(
                s,
                "{:>6}  {:>12}  {:>12}  {:>12}  result",
                "n", "length", "bound", "margin"
            );
            for e in &report.entries {
                let verdict = if e.pass { "pass" } else { "VIOLATION" };
                let _ = writeln!(
                    s,
                    "{:>6}  {:>12.6}  {:>12.6}  {:>12.6}  {verdict}",
                    e.n, e.length, e.bound, e.margin
                );
            }
            let _ = writeln!(
                s,
                "{} checked, {} violations",
                report.entries.len(),
                report.violations
            );
            if report.violations > 0 {
                let _ = writeln!(s, "{}", spectrum::VIOLATION_NOTE);
            }
            let _ = writeln!(s, "{}", spectrum::HYPOTHESES_DISCLAIMER);
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,length,bound,margin,pass\n");
            for e in &report.entries {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    e.n, e.length, e.bound, e.margin, e.pass
                );
            }
            s
        }
        OutputFormat::Json => to_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "report": report,
            "disclaimer": spectrum::HYPOTHESES_DISCLAIMER,
            "violation_note": (report.violations > 0).then_some(spectrum::VIOLATION_NOTE),
        })),
    };
    let exit_code = if report.violations > 0 {
        EXIT_VIOLATIONS
    } else {
        EXIT_OK
    };
    Ok(Rendered {
        stdout: out,
        exit_code,
    })
}

pub fn cmd_horoballs(
    l: f64,
    a: Complex64,
    c: Complex64,
    depth: usize,
    format: OutputFormat,
) -> Result<Rendered, CliError> {
    if depth > 8 {
        return Err(CliError::Usage(format!(
            "depth {depth} is too large (at most 8)"
        )));
    }
    let beta = witness::parabolic_translation(l)?;
    let gamma = witness::full_sized_gamma(a, c)?;
    let balls = horoball_orbit(&[beta, gamma], depth);
    let out = match format {
        OutputFormat::Json => {
            let rows: Vec<_> = balls
                .iter()
                .map(|b| match b {
                    Horoball::Finite { center, diameter } => {
                        json!({ "center_re": center.re, "center_im": center.im, "diameter": diameter })
                    }
                    Horoball::AtInfinity { height } => {
                        json!({ "center_re": "inf", "center_im": "inf", "diameter": height })
                    }
                })
                .collect();
            to_json(&rows)
        }
        OutputFormat::Human | OutputFormat::Csv => {
            let mut buf = Vec::new();
            write_horoball_csv(&mut buf, &balls).map_err(|e| CliError::Usage(e.to_string()))?;
            String::from_utf8(buf).expect("csv output is UTF-8")
        }
    };
    Ok(Rendered::ok(out))
}

/// Parses arguments, runs the command and returns the process exit code.
/// Usage errors are printed by clap and exit with status 2.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(rendered) => {
            print!("{}", rendered.stdout);
            rendered.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
