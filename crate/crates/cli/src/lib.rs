//! Command implementations behind the `triprep` binary.

pub mod input;
pub mod output;

use clap::{Parser, Subcommand, ValueEnum};
use input::{parse_input, parse_perm, permute, InputSpec};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use triprep::analysis::{classify, schmidt2};
use triprep::catalog::{list, lookup, realize, to_json};
use triprep::random::{class_amplitudes, random_class_params, random_state, RngStream, StateKind};
use triprep::sim::{fidelity, metrics, simulate, SynthReport};
use triprep::synth::{
    compile, prep1, prep2, prep3, simplify, synth_r1, synth_r2, synth_r3, synth_r4, Circuit,
};
use triprep::{Complex64, Error, Tolerances64};

/// Fidelity threshold for `verify` and `bench`.
pub const VERIFY_THRESHOLD: f64 = 1.0 - 1e-9;

/// Overrides the zero threshold of every command.
pub const EPS_ENV: &str = "TRIPREP_EPS";

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Normalization(String),
    Unsupported(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Parse(_) => 2,
            Self::Normalization(_) => 3,
            Self::Unsupported(_) => 4,
            Self::Internal(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Parse(m) | Self::Normalization(m) | Self::Unsupported(m) | Self::Internal(m) => {
                f.write_str(m)
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let m = e.to_string();
        match e {
            Error::MalformedCircuit(_)
            | Error::UnknownName { .. }
            | Error::InvalidParameters(_) => Self::Parse(m),
            Error::DimensionMismatch { .. } | Error::IndexOutOfRange { .. } => Self::Parse(m),
            Error::NotNormalized { .. } => Self::Normalization(m),
            Error::UnsupportedClassRequest(_) => Self::Unsupported(m),
            _ => Self::Internal(m),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "triprep",
    version,
    about = "Exact three-qubit state preparation circuits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report the entanglement type and Schmidt data of a state.
    Classify {
        /// Amplitude file, or `-` for standard input.
        input: PathBuf,
    },
    /// Emit a preparation circuit for a state.
    Synth {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ClassArg::Auto)]
        class: ClassArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Keep the unmerged template gates.
        #[arg(long)]
        no_simplify: bool,
        /// Qubit permutation such as `CAB`; entry k names the input qubit placed at position k.
        #[arg(long)]
        relabel: Option<String>,
    },
    /// Simulate a circuit file and compare it with a state.
    Verify { input: PathBuf, circuit: PathBuf },
    /// List registered named states, or realize one.
    Catalog {
        name: Option<String>,
        #[arg(long, value_enum, default_value_t = CatalogFormat::Json)]
        format: CatalogFormat,
    },
    /// Resource statistics over random typed states.
    Bench {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = BenchFormat::Text)]
        format: BenchFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Auto,
    R1,
    R2,
    R3,
    R4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Qasm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CatalogFormat {
    Json,
    Qasm,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchFormat {
    Text,
    Json,
}

/// Standard tolerances with the zero threshold taken from the environment when set.
pub fn tolerances(env: Option<&str>) -> Result<Tolerances64, CliError> {
    let tol = Tolerances64::standard();
    match env {
        None => Ok(tol),
        Some(s) => match s.trim().parse::<f64>() {
            Ok(e) if e.is_finite() && e > 0.0 => Ok(tol.with_zero(e)),
            _ => Err(CliError::Parse(format!(
                "{EPS_ENV} must be a positive number, got `{s}`"
            ))),
        },
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }
}

/// Parsed input with the relabeling applied; `relabel` overrides any permutation in the file.
fn load_state(
    path: &Path,
    relabel: Option<&str>,
    err: &mut dyn Write,
) -> Result<Vec<Complex64>, CliError> {
    let mut spec: InputSpec = parse_input(&read_text(path)?)?;
    if let Some(p) = relabel {
        spec.relabel = Some(parse_perm(p, spec.qubits())?);
    }
    if spec.renormalized {
        let _ = writeln!(err, "warning: {} renormalized to unit norm", path.display());
    }
    Ok(match &spec.relabel {
        Some(p) => permute(&spec.amplitudes, p),
        None => spec.amplitudes,
    })
}

fn arr<const N: usize>(v: &[Complex64]) -> [Complex64; N] {
    std::array::from_fn(|k| v[k])
}

fn cmd_classify(
    path: &Path,
    tol: &Tolerances64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let s = load_state(path, None, err)?;
    let report = match s.len() {
        8 => {
            let s = arr::<8>(&s);
            output::classify_report(&classify(&s, tol)?, &s)
        }
        4 => {
            let d = arr::<4>(&s);
            output::classify_report2(&d, schmidt2(&d, tol)?.tau, tol.zero)
        }
        _ => json!({ "type": "SingleQubit" }),
    };
    emit(out, &format!("{}\n", pretty(&report)))?;
    Ok(0)
}

fn class_kind(c: ClassArg) -> Option<StateKind> {
    match c {
        ClassArg::Auto => None,
        ClassArg::R1 => Some(StateKind::R1),
        ClassArg::R2 => Some(StateKind::R2),
        ClassArg::R3 => Some(StateKind::R3),
        ClassArg::R4 => Some(StateKind::R4),
    }
}

/// Class whose support equals the set of amplitudes above the zero threshold.
pub fn detect_class(s: &[Complex64; 8], zero: f64) -> Option<StateKind> {
    let nz: Vec<usize> = (0..8).filter(|&j| s[j].norm() > zero).collect();
    StateKind::CLASSES
        .into_iter()
        .find(|k| k.support() == Some(nz.as_slice()))
}

fn synth_class(
    kind: StateKind,
    s: &[Complex64; 8],
    tol: &Tolerances64,
) -> Result<Circuit<f64>, CliError> {
    let sup = kind.support().expect("restricted class");
    let r: Vec<f64> = sup.iter().map(|&j| s[j].norm()).collect();
    let p: Vec<f64> = sup.iter().map(|&j| s[j].arg()).collect();
    let built = match kind {
        StateKind::R1 => synth_r1([r[0], r[1]], [p[0], p[1]], tol),
        StateKind::R2 => synth_r2([r[0], r[1], r[2]], [p[0], p[1], p[2]], tol),
        StateKind::R3 => synth_r3([r[0], r[1], r[2]], [p[0], p[1], p[2]], tol),
        _ => synth_r4([r[0], r[1], r[2], r[3]], [p[0], p[1], p[2], p[3]], tol),
    };
    built.map_err(|e| CliError::Unsupported(format!("{} parameters rejected: {e}", kind.name())))
}

/// Circuit for a 1-, 2- or 3-qubit state.
pub fn synthesize(
    s: &[Complex64],
    class: ClassArg,
    simplify_gates: bool,
    tol: &Tolerances64,
) -> Result<Circuit<f64>, CliError> {
    if class != ClassArg::Auto && s.len() != 8 {
        return Err(CliError::Unsupported(
            "class paths need a three-qubit state".into(),
        ));
    }
    let raw = match s.len() {
        2 => prep1(&arr::<2>(s), tol)?,
        4 => {
            let d = arr::<4>(s);
            prep2(&d, &schmidt2(&d, tol)?, tol)?
        }
        _ => {
            let s = arr::<8>(s);
            let detected = detect_class(&s, tol.zero);
            match (class_kind(class), detected) {
                (Some(k), Some(d)) if k == d => synth_class(k, &s, tol)?,
                (Some(k), _) => {
                    return Err(CliError::Unsupported(format!(
                        "amplitudes do not lie on the {} support {:?}",
                        k.name(),
                        k.support().unwrap_or(&[])
                    )))
                }
                (None, Some(d)) => synth_class(d, &s, tol)?,
                (None, None) if simplify_gates => return Ok(compile(&s, tol)?.1),
                (None, None) => prep3(&classify(&s, tol)?, &s, tol)?,
            }
        }
    };
    Ok(if simplify_gates {
        simplify(&raw, tol)
    } else {
        raw
    })
}

struct SynthOptions<'a> {
    class: ClassArg,
    format: Format,
    simplify: bool,
    relabel: Option<&'a str>,
}

fn cmd_synth(
    path: &Path,
    opts: SynthOptions<'_>,
    tol: &Tolerances64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let s = load_state(path, opts.relabel, err)?;
    let c = synthesize(&s, opts.class, opts.simplify, tol)?;
    let format = opts.format;
    let text = match format {
        Format::Json => c.to_json(),
        Format::Qasm => output::to_qasm(&c),
    };
    emit(out, &text)?;
    Ok(0)
}

fn cmd_verify(
    input: &Path,
    circuit: &Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let s = load_state(input, None, err)?;
    let c = Circuit::<f64>::from_json(&read_text(circuit)?)?;
    if 1usize << c.qubits != s.len() {
        return Err(CliError::Parse(format!(
            "circuit has {} qubits but the state has {} amplitudes",
            c.qubits,
            s.len()
        )));
    }
    let f = fidelity(&simulate(&c)?, &s)?;
    let report: SynthReport = metrics(&c);
    let pass = f >= VERIFY_THRESHOLD;
    let v = json!({
        "fidelity": f,
        "pass": pass,
        "report": report,
        "total": report.total(),
    });
    emit(out, &format!("{}\n", pretty(&v)))?;
    Ok(if pass { 0 } else { 5 })
}

fn cmd_catalog(
    name: Option<&str>,
    format: CatalogFormat,
    tol: &Tolerances64,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let Some(name) = name else {
        let entries = list();
        let text = match format {
            CatalogFormat::Text => entries
                .iter()
                .map(|e| {
                    format!(
                        "{:<26} {}  {:?}  {}\n",
                        e.name, e.class, e.post_lu, e.citation_note
                    )
                })
                .collect(),
            _ => format!("{}\n", to_json(&entries)),
        };
        emit(out, &text)?;
        return Ok(0);
    };
    let e = lookup(name)?;
    let (target, c) = realize(&e, tol)?;
    let text = match format {
        CatalogFormat::Qasm => output::to_qasm(&c),
        CatalogFormat::Text => format!(
            "{} ({}), post LU {:?}\n{}",
            e.name,
            e.class,
            e.post_lu,
            target
                .iter()
                .enumerate()
                .map(|(j, a)| format!("  |{j:03b}> {} {}\n", a.re, a.im))
                .collect::<String>()
        ),
        CatalogFormat::Json => {
            let entry: Value =
                serde_json::from_str(&to_json(std::slice::from_ref(&e))).map_err(internal)?;
            let v = json!({
                "entry": entry[0],
                "amplitudes": output::cvec(&target),
                "circuit": null,
            });
            // Spliced as text to keep the 17-digit angles.
            let circuit = c.to_json().trim_end().replace('\n', "\n  ");
            format!(
                "{}\n",
                pretty(&v).replacen("\"circuit\": null", &format!("\"circuit\": {circuit}"), 1)
            )
        }
    };
    emit(out, &text)?;
    Ok(0)
}

/// One bench row: maxima of (RotY, RotZ, CNot, total), mean total, max depth, min fidelity.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct BenchRow {
    pub name: String,
    pub samples: u64,
    pub max_ry: usize,
    pub max_rz: usize,
    pub max_cnot: usize,
    pub max_total: usize,
    pub mean_total: f64,
    pub max_depth: usize,
    pub min_fidelity: f64,
}

/// Constants of the generic fixed-depth template, printed for comparison.
pub const FIXED_TEMPLATE: (usize, usize, usize, usize, usize) = (8, 7, 6, 21, 14);

pub fn bench(samples: u64, seed: u64, tol: &Tolerances64) -> Result<Vec<BenchRow>, CliError> {
    let root = RngStream::new(seed);
    let kinds = StateKind::TYPED.into_iter().chain(StateKind::CLASSES);
    let mut rows = Vec::new();
    for (id, kind) in kinds.enumerate() {
        let mut rng = root.split(id as u64);
        let mut row = BenchRow {
            name: kind.name().to_string(),
            samples,
            max_ry: 0,
            max_rz: 0,
            max_cnot: 0,
            max_total: 0,
            mean_total: 0.0,
            max_depth: 0,
            min_fidelity: 1.0,
        };
        let mut sum = 0usize;
        for _ in 0..samples {
            let (target, c) = if kind.support().is_some() {
                let (r, p) = random_class_params::<f64>(kind, &mut rng);
                let s = class_amplitudes(kind, &r, &p);
                (s, synthesize(&s, ClassArg::Auto, true, tol)?)
            } else {
                let s = random_state::<f64>(kind, &mut rng);
                (s, compile(&s, tol)?.1)
            };
            let m = metrics(&c);
            row.max_ry = row.max_ry.max(m.n_ry);
            row.max_rz = row.max_rz.max(m.n_rz);
            row.max_cnot = row.max_cnot.max(m.n_cnot);
            row.max_total = row.max_total.max(m.total());
            row.max_depth = row.max_depth.max(m.depth);
            sum += m.total();
            row.min_fidelity = row.min_fidelity.min(fidelity(&simulate(&c)?, &target)?);
        }
        row.mean_total = sum as f64 / samples as f64;
        rows.push(row);
    }
    Ok(rows)
}

fn cmd_bench(
    samples: u64,
    seed: u64,
    format: BenchFormat,
    tol: &Tolerances64,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let rows = bench(samples, seed, tol)?;
    let (ry, rz, cx, total, depth) = FIXED_TEMPLATE;
    let text = match format {
        BenchFormat::Json => {
            let v = json!({
                "seed": seed,
                "rows": rows,
                "fixed_template": { "ry": ry, "rz": rz, "cnot": cx, "total": total, "depth": depth },
            });
            format!("{}\n", pretty(&v))
        }
        BenchFormat::Text => {
            let mut t = format!(
                "{:<16} {:>7} {:>4} {:>4} {:>4} {:>5} {:>8} {:>5} {:>14}\n",
                "type", "samples", "ry", "rz", "cx", "total", "mean", "depth", "1-min_fid"
            );
            for r in &rows {
                t.push_str(&format!(
                    "{:<16} {:>7} {:>4} {:>4} {:>4} {:>5} {:>8.3} {:>5} {:>14.3e}\n",
                    r.name,
                    r.samples,
                    r.max_ry,
                    r.max_rz,
                    r.max_cnot,
                    r.max_total,
                    r.mean_total,
                    r.max_depth,
                    1.0 - r.min_fidelity
                ));
            }
            t.push_str(&format!(
                "{:<16} {:>7} {:>4} {:>4} {:>4} {:>5} {:>8} {:>5} {:>14}\n",
                "fixed template", "-", ry, rz, cx, total, "-", depth, "-"
            ));
            t
        }
    };
    emit(out, &text)?;
    Ok(0)
}

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

fn pretty(v: &Value) -> String {
    let mut s = String::new();
    output::render(v, 0, &mut s);
    s
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(internal)
}

/// Runs one command line and returns the process exit code.
pub fn run<I, A>(args: I, env_eps: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    let result = tolerances(env_eps).and_then(|tol| match &cli.command {
        Command::Classify { input } => cmd_classify(input, &tol, out, err),
        Command::Synth {
            input,
            class,
            format,
            no_simplify,
            relabel,
        } => cmd_synth(
            input,
            SynthOptions {
                class: *class,
                format: *format,
                simplify: !*no_simplify,
                relabel: relabel.as_deref(),
            },
            &tol,
            out,
            err,
        ),
        Command::Verify { input, circuit } => cmd_verify(input, circuit, out, err),
        Command::Catalog { name, format } => cmd_catalog(name.as_deref(), *format, &tol, out),
        Command::Bench {
            samples,
            seed,
            format,
        } => cmd_bench(*samples, *seed, *format, &tol, out),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
