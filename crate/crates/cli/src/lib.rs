//! Command-line front end for `dnacodes`.
//!
//! [`run`] parses arguments, dispatches to the library and writes results to
//! the supplied writers. Exit codes: 0 success, 1 a verification failure or a
//! relation that does not hold, 2 usage, parse or I/O errors.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use dnacodes::bounds::{self, JohnsonVariant};
use dnacodes::gau::{self, RmSpec};
use dnacodes::nho::{self, BlockPair};
use dnacodes::quinary;
use dnacodes::verify::{self, ComputedDistances, DnaOp};
use dnacodes::{Alphabet, Codebook, DnaString, Format, RingElement, RingVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the worker-thread count (0 or unset = automatic).
pub const THREADS_ENV: &str = "DNACODES_THREADS";

#[derive(Parser, Debug)]
#[command(name = "dnacodes", version, about = "Construct, verify and bound DNA codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code and write it out.
    #[command(subcommand)]
    Construct(Construct),
    /// Check a codebook against a list of constraints and print JSON reports.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated `kind[:param]` tokens, e.g. `hamming:3,rc:3,gc,tandem:2`.
        #[arg(long)]
        constraints: String,
        #[command(flatten)]
        read: ReadOpts,
    },
    /// Distance between two words.
    #[command(subcommand)]
    Distance(DistanceCmd),
    /// Evaluate a size bound, or check a relation between code sizes.
    Bounds(BoundsArgs),
    /// Summarize a codebook: length, size, distances and GC profile.
    Info {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        read: ReadOpts,
        /// Estimate the minimum Hamming distance from this many random pairs
        /// instead of scanning all pairs.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct WriteOpts {
    /// Output file; standard output when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// codebook, fasta or csv.
    #[arg(long, default_value = "codebook")]
    format: Format,
}

#[derive(Args, Debug)]
struct ReadOpts {
    /// Input format; inferred from the file extension when omitted.
    #[arg(long = "input-format")]
    input_format: Option<Format>,
    /// Alphabet of FASTA and CSV input (DNA, binary, ringR, quinary).
    #[arg(long)]
    alphabet: Option<Alphabet>,
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Reed-Muller type code over Z4 + uZ4 mapped to DNA by the Gau map.
    GauRm {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        /// Nonzero ring element, e.g. `2u` or `1+3u`.
        #[arg(long)]
        z: RingElement,
        /// Write the ring code instead of its DNA image.
        #[arg(long)]
        ring: bool,
        #[command(flatten)]
        write: WriteOpts,
    },
    /// The quinary family of length 2^(2k-1) and size 5^k.
    Quinary {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        write: WriteOpts,
    },
    /// A binary code mapped to DNA by the non-homopolymer map.
    Nho {
        /// Built-in code name (repetition4, hamming_7_4, golay_23_12) or a binary codebook file.
        #[arg(long)]
        code: String,
        #[arg(long)]
        x: DnaString,
        #[arg(long)]
        y: DnaString,
        #[command(flatten)]
        write: WriteOpts,
    },
}

#[derive(Subcommand, Debug)]
enum DistanceCmd {
    /// Gau distance between two ring vectors such as "1 0 3" and "u 0 3u".
    Gau { x: RingVector, y: RingVector },
    /// Non-homopolymer distance between two binary words.
    Nho {
        a: String,
        b: String,
        #[arg(long, short)]
        l: usize,
    },
    /// Hamming distance between two strings.
    Hamming { x: String, y: String },
}

#[derive(Args, Debug)]
struct BoundsArgs {
    /// A bound name or a relation name; `list` prints both.
    name: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    w: Option<usize>,
    /// Previous-length bound for `johnson_gc`.
    #[arg(long = "a-prev")]
    a_prev: Option<u64>,
    /// `w-1` or `w`, for `johnson_gc`.
    #[arg(long, default_value = "w-1")]
    variant: JohnsonVariant,
    /// Inputs of a relation as `key=value,...`.
    #[arg(long, alias = "salt-values")]
    values: Option<String>,
}

/// Failure of a command, mapped to an exit code by [`run`].
#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(dnacodes::Error),
}

impl From<dnacodes::Error> for CliError {
    fn from(e: dnacodes::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Lib(e.into())
    }
}

type CliResult = Result<i32, CliError>;

/// Runs the command line `args` (program name first).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    configure_threads();
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn configure_threads() {
    let threads = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()).unwrap_or(0);
    // The global pool can only be set once per process; later calls keep the first setting.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Construct(c) => construct(c, out),
        Command::Verify { input, constraints, read } => {
            let code = read_codebook(&input, &read)?;
            let specs = verify::parse_constraints(&constraints)?;
            if specs.is_empty() {
                return Err(CliError::Usage("no constraints given".into()));
            }
            let reports = verify::verify(&code, &specs)?;
            write_json(out, &serde_json::to_value(&reports).expect("reports serialize"))?;
            Ok(if reports.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Distance(d) => distance(d, out),
        Command::Bounds(b) => bounds_cmd(b, out),
        Command::Info { input, read, sample, seed } => info(&read_codebook(&input, &read)?, sample, seed, out),
    }
}

fn construct(c: Construct, out: &mut dyn Write) -> CliResult {
    let (code, extra, write) = match c {
        Construct::GauRm { r, m, z, ring, write } => {
            let spec = RmSpec::new(r, m, z)?;
            let code = if ring { gau::rm_code(spec)? } else { gau::rm_dna_code(spec)? };
            (code, Vec::new(), write)
        }
        Construct::Quinary { k, write } => (quinary::quinary_dna_code(k)?, Vec::new(), write),
        Construct::Nho { code, x, y, write } => {
            let pair = BlockPair::new(x, y)?;
            let binary = if nho::BUILTIN_CODES.contains(&code.as_str()) {
                nho::builtin_binary_code(&code)?
            } else {
                nho::load_binary_code(&code)?
            };
            let report = nho::admissibility(&pair, binary.n());
            let extra = vec![format!(
                "# source={} l={} rrc_admissible={} tandem_admissible={} predicted_gc={}",
                code.rsplit('/').next().unwrap_or(&code).split_whitespace().collect::<String>(),
                pair.l(),
                report.rrc_admissible,
                report.tandem_admissible,
                report.predicted_gc
            )];
            (nho::build_dna_code(&binary, &pair)?, extra, write)
        }
    };
    let mut buf = Vec::new();
    code.write_to(&mut buf, write.format)?;
    if write.format == Format::Codebook && !extra.is_empty() {
        let text = String::from_utf8(buf).expect("codebook text is ASCII");
        let (header, body) = text.split_once('\n').unwrap_or((&text, ""));
        buf = format!("{header}\n{}\n{body}", extra.join("\n")).into_bytes();
    }
    match write.output {
        Some(path) => fs::write(&path, &buf)?,
        None => out.write_all(&buf)?,
    }
    Ok(EXIT_OK)
}

fn distance(d: DistanceCmd, out: &mut dyn Write) -> CliResult {
    let value = match d {
        DistanceCmd::Gau { x, y } => gau::gau_distance_vector(&x, &y)?,
        DistanceCmd::Nho { a, b, l } => {
            let a: dnacodes::BinaryString = a.parse()?;
            let b: dnacodes::BinaryString = b.parse()?;
            nho::d_nho(a.bits(), b.bits(), l)?
        }
        DistanceCmd::Hamming { x, y } => {
            let x: Vec<char> = x.chars().collect();
            let y: Vec<char> = y.chars().collect();
            dnacodes::hamming(&x, &y)?
        }
    };
    writeln!(out, "{value}")?;
    Ok(EXIT_OK)
}

fn bounds_cmd(b: BoundsArgs, out: &mut dyn Write) -> CliResult {
    if b.name == "list" {
        for name in bounds::BOUND_NAMES.iter().chain(std::iter::once(&"johnson_gc")) {
            writeln!(out, "bound    {name}")?;
        }
        for rel in bounds::RELATIONS {
            writeln!(out, "relation {}  [{}]  {}", rel.name, rel.keys.join(", "), rel.statement)?;
        }
        return Ok(EXIT_OK);
    }
    if bounds::RELATIONS.iter().any(|r| r.name == b.name) {
        let values = parse_values(b.values.as_deref().unwrap_or(""))?;
        let holds = bounds::relation_check(&b.name, &values)?;
        write_json(out, &json!({ "relation": b.name, "holds": holds }))?;
        return Ok(if holds { EXIT_OK } else { EXIT_FAIL });
    }
    let n = b.n.ok_or_else(|| CliError::Usage("--n is required".into()))?;
    let d = b.d.ok_or_else(|| CliError::Usage("--d is required".into()))?;
    let result = if b.name == "johnson_gc" {
        let w = b.w.ok_or_else(|| CliError::Usage("--w is required".into()))?;
        let a_prev = b.a_prev.ok_or_else(|| CliError::Usage("--a-prev is required".into()))?;
        bounds::johnson_gc_step(n, d, w, a_prev, b.variant)?
    } else {
        bounds::evaluate(&b.name, n, d, b.w)?
    };
    write_json(out, &result.to_json())?;
    Ok(EXIT_OK)
}

fn parse_values(s: &str) -> Result<BTreeMap<String, i128>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (k, v) = t.split_once('=').ok_or_else(|| CliError::Usage(format!("expected key=value, got {t:?}")))?;
            let v = v.trim().parse::<i128>().map_err(|_| CliError::Usage(format!("{k}: not an integer: {v:?}")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn info(code: &Codebook, sample: Option<usize>, seed: u64, out: &mut dyn Write) -> CliResult {
    let mut report = json!({
        "alphabet": code.alphabet().to_string(),
        "n": code.n(),
        "M": code.len(),
    });
    match sample {
        Some(pairs) if code.len() >= 2 => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let words = code.words();
            let mut best: Option<usize> = None;
            for _ in 0..pairs {
                let i = rng.gen_range(0..words.len());
                let mut j = rng.gen_range(0..words.len() - 1);
                if j >= i {
                    j += 1;
                }
                let d = dnacodes::hamming(&words[i], &words[j])?;
                best = Some(best.map_or(d, |b: usize| b.min(d)));
            }
            report["min_hamming_sampled"] = json!(best);
            report["sample_pairs"] = json!(pairs);
            report["seed"] = json!(seed);
            if code.alphabet() == Alphabet::Dna {
                let op = |op| verify::min_op_distance(code, op, true).map(|p| p.map(|p| p.distance));
                report["min_reverse"] = json!(op(DnaOp::Reverse)?);
                report["min_reverse_complement"] = json!(op(DnaOp::ReverseComplement)?);
            }
        }
        _ => {
            let computed = ComputedDistances::measure(code)?;
            report["min_hamming"] = json!(computed.min_hamming);
            report["min_reverse"] = json!(computed.min_reverse);
            report["min_reverse_complement"] = json!(computed.min_reverse_complement);
        }
    }
    if code.alphabet() == Alphabet::Dna {
        let mut profile: BTreeMap<usize, usize> = BTreeMap::new();
        for w in code.dna_words()? {
            *profile.entry(w.gc_weight()).or_default() += 1;
        }
        let profile: serde_json::Map<String, Value> =
            profile.into_iter().map(|(w, count)| (w.to_string(), json!(count))).collect();
        report["gc_profile"] = Value::Object(profile);
    }
    write_json(out, &report)?;
    Ok(EXIT_OK)
}

fn read_codebook(path: &Path, opts: &ReadOpts) -> Result<Codebook, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let format = opts.input_format.unwrap_or_else(|| infer_format(path));
    let alphabet = match (format, opts.alphabet) {
        (Format::Codebook, a) => a,
        (_, Some(a)) => Some(a),
        (_, None) => Some(Alphabet::Dna),
    };
    Ok(Codebook::read_from(&text, format, alphabet)?)
}

fn infer_format(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
        Some("fa" | "fasta") => Format::Fasta,
        Some("csv") => Format::Csv,
        _ => Format::Codebook,
    }
}

fn write_json(out: &mut dyn Write, value: &Value) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}
