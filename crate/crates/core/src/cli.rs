//! The `braidforge` command line.
//!
//! Exit codes: 0 when every check passed, 1 when a mathematical check
//! failed (including `eq` answering `false`), 2 for usage or parameter
//! errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::conjugacy::{
    certify_all, csv_row, family_params, verify_conjugacy, ConjugacyCertificate, FamilyParams,
    CSV_HEADER,
};
use crate::error::{BraidError, Result};
use crate::garside::{equal, normal_form};
use crate::invariants::{alexander, surface_slope};
use crate::rewrite::lemma_suite;
use crate::ttk::{fiberedness_certificate_with, ttk_braid, FiberednessCertificate, TTKParams};
use crate::word::BraidWord;

pub const CONFIG_ENV: &str = "BRAIDFORGE_CONFIG";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "braidforge", version, about = "Exact braid word computation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct KnotArgs {
    #[arg(short, long)]
    p: usize,
    #[arg(short, long)]
    q: usize,
    #[arg(short, long)]
    r: usize,
    /// Signed number of full twists.
    #[arg(short, long, allow_negative_numbers = true)]
    n: i64,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(short, long)]
    k: usize,
    #[arg(short, long)]
    q: usize,
    #[arg(short, long)]
    m: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the braid word of K(p,q,r,n)
    Build(KnotArgs),
    /// Print the Garside normal form of a word
    Nf { word: String },
    /// Decide whether two words are equal in B_n
    Eq { left: String, right: String },
    /// Fiberedness certificate for K(p,q,r,n)
    Fibered {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        json: bool,
        /// Re-check equality after every rewriting step
        #[arg(long)]
        verify_steps: bool,
    },
    /// Normalised Alexander polynomial of the closure of a word
    Alexander { word: String },
    /// Surface slope k q^2 + m q - m^2
    Slope(FamilyArgs),
    /// Conjugacy certificate for the pair K(kq+m,q,m,-1), K(kq+q-m,q,q-m,-1)
    Conjugacy {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        json: bool,
    },
    /// Certify every admissible (k,q,m) and write a CSV
    Sweep {
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long)]
        qmax: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory for one JSON certificate per tuple
        #[arg(long)]
        cert_dir: Option<PathBuf>,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Stop after this many tuples and leave a resume cursor
        #[arg(long)]
        limit: Option<usize>,
        /// Continue from the cursor left by a limited run
        #[arg(long)]
        resume: bool,
    },
    /// Check every instance of rules A, B and C up to s = smax
    Lemmas {
        #[arg(long, default_value_t = 7)]
        smax: usize,
    },
}

/// `key = value` settings; `#` starts a comment.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub kmax: Option<usize>,
    pub qmax: Option<usize>,
    pub out: Option<PathBuf>,
    pub out_dir: Option<PathBuf>,
    pub jobs: Option<usize>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config> {
        let mut cfg = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| BraidError::param(format!("config line {}: {msg}", lineno + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected key = value"))?;
            let (key, value) = (key.trim(), value.trim());
            let number = || {
                value
                    .parse::<usize>()
                    .map_err(|_| bad("expected an integer"))
            };
            match key {
                "kmax" => cfg.kmax = Some(number()?),
                "qmax" => cfg.qmax = Some(number()?),
                "jobs" => cfg.jobs = Some(number()?),
                "out" => cfg.out = Some(PathBuf::from(value)),
                "out_dir" => cfg.out_dir = Some(PathBuf::from(value)),
                _ => return Err(bad(&format!("unknown key {key:?}"))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = fs::read_to_string(path).map_err(|e| {
            BraidError::param(format!("cannot read config {}: {e}", path.display()))
        })?;
        Config::parse(&text)
    }

    fn from_env() -> Result<Config> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) => Config::load(Path::new(&path)),
            None => Ok(Config::default()),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Reads the config file named by `BRAIDFORGE_CONFIG`, if set.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = Config::from_env().and_then(|cfg| execute(cli.command, &cfg, out));
    match outcome {
        Ok(code) => code,
        Err(BraidError::Io(msg)) if msg == BROKEN_PIPE => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Message of the error raised when stdout is closed early.
const BROKEN_PIPE: &str = "broken pipe";

fn io_err(e: std::io::Error) -> BraidError {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        BraidError::Io(BROKEN_PIPE.to_string())
    } else {
        BraidError::Io(e.to_string())
    }
}

fn parse_word(text: &str) -> Result<BraidWord> {
    text.parse()
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| BraidError::Internal(format!("JSON encoding failed: {e}")))?;
    writeln!(out, "{text}").map_err(io_err)
}

fn code_for(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn execute(command: Command, cfg: &Config, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Build(k) => {
            let params = TTKParams::new(k.p, k.q, k.r, k.n)?;
            writeln!(out, "{}", ttk_braid(&params)?).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Nf { word } => {
            writeln!(out, "{}", normal_form(&parse_word(&word)?)).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Eq { left, right } => {
            let same = equal(&parse_word(&left)?, &parse_word(&right)?)?;
            writeln!(out, "{same}").map_err(io_err)?;
            Ok(code_for(same))
        }
        Command::Fibered {
            knot,
            json,
            verify_steps,
        } => {
            let params = TTKParams::new(knot.p, knot.q, knot.r, knot.n)?;
            let cert = fiberedness_certificate_with(&params, verify_steps)?;
            if json {
                emit_json(out, &cert)?;
            } else {
                write_fibered(out, &cert).map_err(io_err)?;
            }
            Ok(code_for(cert.all_checks_pass()))
        }
        Command::Alexander { word } => {
            let result = alexander(&parse_word(&word)?)?;
            writeln!(out, "{}", result.poly).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Slope(f) => {
            writeln!(
                out,
                "{}",
                surface_slope(f.k as i64, f.q as i64, f.m as i64)?
            )
            .map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Conjugacy { family, json } => {
            let fam = FamilyParams::new(family.k, family.q, family.m)?;
            let cert = verify_conjugacy(&fam)?;
            if json {
                emit_json(out, &cert)?;
            } else {
                write_conjugacy(out, &cert).map_err(io_err)?;
            }
            Ok(code_for(cert.is_valid()))
        }
        Command::Sweep {
            kmax,
            qmax,
            out: csv,
            cert_dir,
            jobs,
            limit,
            resume,
        } => {
            let opts = SweepOptions {
                k_max: kmax.or(cfg.kmax).ok_or_else(|| missing("kmax"))?,
                q_max: qmax.or(cfg.qmax).ok_or_else(|| missing("qmax"))?,
                csv: csv
                    .or_else(|| cfg.out.clone())
                    .ok_or_else(|| missing("out"))?,
                cert_dir: cert_dir.or_else(|| cfg.out_dir.clone()),
                jobs: jobs.or(cfg.jobs),
                limit,
                resume,
            };
            run_sweep(&opts, out)
        }
        Command::Lemmas { smax } => {
            let report = lemma_suite(smax)?;
            if report.passed() {
                writeln!(
                    out,
                    "lemmas: {} rule instances up to s={smax}, all sides equal",
                    report.checked
                )
                .map_err(io_err)?;
            } else {
                writeln!(
                    out,
                    "lemmas: {} of {} rule instances FAILED: {}",
                    report.failures.len(),
                    report.checked,
                    report.failures.join(", ")
                )
                .map_err(io_err)?;
            }
            Ok(code_for(report.passed()))
        }
    }
}

fn missing(key: &str) -> BraidError {
    BraidError::param(format!("--{key} not given and not set in the config file"))
}

fn write_checks(out: &mut dyn Write, checks: &BTreeMap<String, bool>) -> std::io::Result<()> {
    for (name, ok) in checks {
        writeln!(out, "check {name}: {ok}")?;
    }
    Ok(())
}

fn write_fibered(out: &mut dyn Write, cert: &FiberednessCertificate) -> std::io::Result<()> {
    writeln!(out, "{}: {}", cert.params, cert.status)?;
    if let Some(w) = &cert.witness {
        writeln!(out, "witness: {w}")?;
    }
    if let Some(a) = &cert.alexander {
        writeln!(out, "alexander: {a}")?;
    }
    write_checks(out, &cert.checks)?;
    writeln!(out, "transcript: {} steps", cert.transcript.len())?;
    if let Some(first) = cert.transcript.first() {
        writeln!(out, "  {first}")?;
    }
    Ok(())
}

fn write_conjugacy(out: &mut dyn Write, cert: &ConjugacyCertificate) -> std::io::Result<()> {
    writeln!(out, "family {}: {}", cert.family, cert.status)?;
    writeln!(out, "beta1: {}", cert.beta1)?;
    writeln!(out, "beta2: {}", cert.beta2)?;
    writeln!(out, "gamma: {}", cert.gamma)?;
    writeln!(out, "nf(beta1 gamma): {}", cert.nf_left)?;
    writeln!(out, "nf(gamma beta2): {}", cert.nf_right)?;
    writeln!(out, "slope: {}", cert.slope)?;
    let [k, m, qm] = cert.seifert_data;
    writeln!(out, "seifert data: [{k}, {m}, {qm}]")?;
    writeln!(out, "alexander: {}", cert.alexander)?;
    write_checks(out, &cert.checks)?;
    if !cert.failed.is_empty() {
        writeln!(out, "failed: {}", cert.failed.join(", "))?;
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub k_max: usize,
    pub q_max: usize,
    pub csv: PathBuf,
    pub cert_dir: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub limit: Option<usize>,
    pub resume: bool,
}

fn cursor_path(csv: &Path) -> PathBuf {
    let mut name = csv.as_os_str().to_owned();
    name.push(".cursor");
    PathBuf::from(name)
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so readers never see a partial file.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

fn read_cursor(path: &Path) -> Result<usize> {
    match fs::read_to_string(path) {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| BraidError::param(format!("corrupt cursor file {}", path.display()))),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(0),
        Err(e) => Err(io_err(e)),
    }
}

fn run_sweep(opts: &SweepOptions, out: &mut dyn Write) -> Result<i32> {
    if opts.k_max < 2 || opts.q_max < 2 {
        return Err(BraidError::param(format!(
            "sweep bounds must be at least 2 (got kmax={}, qmax={})",
            opts.k_max, opts.q_max
        )));
    }
    let all = family_params(opts.k_max, opts.q_max);
    let cursor_file = cursor_path(&opts.csv);
    let start = if opts.resume {
        read_cursor(&cursor_file)?
    } else {
        0
    };
    if start > all.len() {
        return Err(BraidError::param(format!(
            "cursor {start} is past the {} tuples of this sweep",
            all.len()
        )));
    }
    let end = match opts.limit {
        Some(limit) => (start + limit).min(all.len()),
        None => all.len(),
    };
    let batch = &all[start..end];

    let certs = match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| BraidError::param(format!("cannot start {jobs} workers: {e}")))?
            .install(|| certify_all(batch))?,
        None => certify_all(batch)?,
    };

    if let Some(dir) = &opts.cert_dir {
        fs::create_dir_all(dir).map_err(io_err)?;
        for cert in &certs {
            let FamilyParams { k, q, m } = cert.family;
            let text = serde_json::to_string_pretty(cert)
                .map_err(|e| BraidError::Internal(format!("JSON encoding failed: {e}")))?;
            write_atomic(&dir.join(format!("k{k}_q{q}_m{m}.json")), &(text + "\n"))?;
        }
    }

    let mut csv = if start == 0 {
        format!("{CSV_HEADER}\n")
    } else {
        fs::read_to_string(&opts.csv).map_err(io_err)?
    };
    for cert in &certs {
        csv.push_str(&csv_row(cert));
        csv.push('\n');
    }
    write_atomic(&opts.csv, &csv)?;

    let invalid: Vec<String> = certs
        .iter()
        .filter(|c| !c.is_valid())
        .map(|c| format!("{} ({})", c.family, c.failed.join(", ")))
        .collect();
    let summary = if invalid.is_empty() {
        "all valid".to_string()
    } else {
        format!("{} FAILED: {}", invalid.len(), invalid.join("; "))
    };
    if end < all.len() {
        write_atomic(&cursor_file, &format!("{end}\n"))?;
        writeln!(
            out,
            "sweep: tuples {start}..{end} of {} written to {}; {summary}; staged, rerun with --resume",
            all.len(),
            opts.csv.display()
        )
        .map_err(io_err)?;
    } else {
        if cursor_file.exists() {
            fs::remove_file(&cursor_file).map_err(io_err)?;
        }
        writeln!(
            out,
            "sweep: tuples {start}..{end} of {} written to {}; {summary}",
            all.len(),
            opts.csv.display()
        )
        .map_err(io_err)?;
    }
    Ok(code_for(invalid.is_empty()))
}
