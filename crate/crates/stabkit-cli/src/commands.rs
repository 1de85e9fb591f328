//! Command dispatch. `run` never exits the process; it returns the exit code
//! and the rendered output so tests can drive the CLI in memory.
//!
//! Exit codes: 0 success, 1 verification failure (or any computation the
//! inputs make impossible), 2 usage error, 3 capacity (desk-scale guard).

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use stabkit::clifford::compute_codewords;
use stabkit::cssea;
use stabkit::search::SearchSpec;
use stabkit::stabilizer::{
    builtin_code, distance, single_and_pair_products, verify_correction, BuiltinCode,
    QuantumCode, Scope, Verdict,
};
use stabkit::synthesis::{symplectic_gram_schmidt, synthesize_encoder};
use stabkit::Error;

use crate::formats;
use crate::parallel;
use crate::report::{self, CodeDoc, SCHEMA};

#[derive(Parser)]
#[command(
    name = "stabkit",
    about = "Stabilizer quantum error-correction toolkit",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit a JSON report instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one of the built-in codes as a code file.
    Builtin {
        /// six_qubit_degenerate, six_qubit_subsystem, ea_613, or steane
        name: String,
        /// Write the code file here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Validate a code and check single-error correction.
    Verify {
        /// Code file ("-" for stdin).
        code_file: String,
        /// Check errors on every column, the receiver's included.
        #[arg(long)]
        global: bool,
    },
    /// Brute-force code distance.
    Distance {
        code_file: String,
        /// Largest weight to try (default: all scoped columns).
        #[arg(long)]
        max_weight: Option<usize>,
        /// Search over every column, the receiver's included.
        #[arg(long)]
        global: bool,
    },
    /// Logical basis states of a code without gauge freedom.
    Codewords { code_file: String },
    /// Synthesize an encoder circuit for a code.
    Synth {
        code_file: String,
        /// Write the encoder circuit file here.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the full reduction script (gates plus row operations).
        #[arg(long)]
        script: Option<PathBuf>,
    },
    /// Pair anticommuting generators; the pair count is the ebit cost.
    GramSchmidt {
        /// Generator list, one Pauli row per line.
        gens_file: String,
    },
    /// Stack Z rows from one parity matrix over X rows from another.
    CssBuild {
        hx_file: String,
        hz_file: String,
    },
    /// Extend a generator list into a valid entanglement-assisted code.
    EaBuild {
        gens_file: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Elect one qubit as the receiver's half of an ebit.
    ReduceEbit {
        code_file: String,
        /// 1-based qubit to hand to the receiver.
        #[arg(long)]
        qubit: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply the generator-level Steane equivalence to a 7-column code.
    SteaneEquiv {
        code_file: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive searches.
    Search {
        #[command(subcommand)]
        what: SearchCommand,
    },
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Enumerate CSS stabilizers in canonical subspace form.
    Css {
        /// Sender qubits.
        #[arg(long)]
        n: usize,
        /// Logical qubits.
        #[arg(long)]
        k: usize,
        /// Required distance.
        #[arg(long)]
        d: usize,
        /// Ebits (0 or 1).
        #[arg(long, default_value_t = 0)]
        ebits: usize,
        /// Worker threads (default: QEC_JOBS or 1).
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here as well.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// What a command run produced: the process exit code and the full text
/// written to standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub output: String,
}

struct Rendered {
    exit_code: i32,
    human: String,
    json: Value,
}

enum CliError {
    Core(Error),
    Parse(formats::ParseError),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<formats::ParseError> for CliError {
    fn from(e: formats::ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Usage(_)) => 2,
            CliError::Core(Error::Capacity { .. }) => 3,
            CliError::Core(_) => 1,
            CliError::Parse(_) | CliError::Io(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Parse(e) => e.to_string(),
            CliError::Io(e) => e.clone(),
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{path}: {e}")))
    }
}

fn write_output(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_code(path: &str) -> Result<QuantumCode, CliError> {
    Ok(formats::parse_code(&read_input(path)?)?)
}

/// Run the CLI on the given argument vector (program name included) and
/// return the outcome instead of exiting.
pub fn run<I, S>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error.
            let code = if e.use_stderr() { 2 } else { 0 };
            return CommandOutcome {
                exit_code: code,
                output: e.render().to_string(),
            };
        }
    };
    let json = cli.json;
    match dispatch(cli.command) {
        Ok(r) => CommandOutcome {
            exit_code: r.exit_code,
            output: if json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&r.json).expect("report serializes")
                )
            } else {
                r.human
            },
        },
        Err(e) => {
            let code = e.exit_code();
            let output = if json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({
                        "schema": SCHEMA,
                        "error": e.message(),
                        "exit_code": code,
                    }))
                    .expect("error report serializes")
                )
            } else {
                format!("error: {}\n", e.message())
            };
            CommandOutcome {
                exit_code: code,
                output,
            }
        }
    }
}

fn dispatch(command: Command) -> Result<Rendered, CliError> {
    match command {
        Command::Builtin { name, output } => builtin_cmd(&name, output.as_deref()),
        Command::Verify { code_file, global } => verify_cmd(&code_file, global),
        Command::Distance {
            code_file,
            max_weight,
            global,
        } => distance_cmd(&code_file, max_weight, global),
        Command::Codewords { code_file } => codewords_cmd(&code_file),
        Command::Synth {
            code_file,
            output,
            script,
        } => synth_cmd(&code_file, output.as_deref(), script.as_deref()),
        Command::GramSchmidt { gens_file } => gram_schmidt_cmd(&gens_file),
        Command::CssBuild { hx_file, hz_file } => css_build_cmd(&hx_file, &hz_file),
        Command::EaBuild { gens_file, output } => ea_build_cmd(&gens_file, output.as_deref()),
        Command::ReduceEbit {
            code_file,
            qubit,
            output,
        } => reduce_ebit_cmd(&code_file, qubit, output.as_deref()),
        Command::SteaneEquiv { code_file, output } => {
            steane_equiv_cmd(&code_file, output.as_deref())
        }
        Command::Search { what } => match what {
            SearchCommand::Css {
                n,
                k,
                d,
                ebits,
                jobs,
                report,
            } => search_cmd(n, k, d, ebits, jobs, report.as_deref()),
        },
    }
}

fn emit_code_file(
    command: &str,
    code: &QuantumCode,
    output: Option<&Path>,
    extra_human: String,
) -> Result<Rendered, CliError> {
    let text = formats::emit_code(code);
    let human = match output {
        Some(path) => {
            write_output(path, &text)?;
            format!("{extra_human}wrote code file to {}\n", path.display())
        }
        None => format!("{extra_human}{text}"),
    };
    Ok(Rendered {
        exit_code: 0,
        human,
        json: json!({
            "schema": SCHEMA,
            "command": command,
            "code": CodeDoc::new(code),
        }),
    })
}

fn builtin_cmd(name: &str, output: Option<&Path>) -> Result<Rendered, CliError> {
    let which: BuiltinCode = name.parse().map_err(CliError::Core)?;
    let code = builtin_code(which);
    emit_code_file("builtin", &code, output, String::new())
}

fn verify_cmd(code_file: &str, global: bool) -> Result<Rendered, CliError> {
    let code = load_code(code_file)?;
    let mut human = format!(
        "code: n={} k={} ebits={} gauge_qubits={}\n",
        code.n(),
        code.k(),
        code.ebits(),
        code.gauge_qubits()
    );
    if let Err(defect) = code.validate() {
        human.push_str(&format!("validation: FAILED ({defect})\n"));
        return Ok(Rendered {
            exit_code: 1,
            human,
            json: json!({
                "schema": SCHEMA,
                "command": "verify",
                "code": CodeDoc::new(&code),
                "valid": false,
                "defect": defect.to_string(),
            }),
        });
    }
    human.push_str("validation: ok\n");
    let cols = if global {
        (0..code.n()).collect::<Vec<_>>()
    } else {
        code.alice_columns()
    };
    let errors = single_and_pair_products(code.n(), &cols)?;
    let report = verify_correction(&code, &errors)?;
    let corrected = report
        .verdicts
        .iter()
        .filter(|(_, v)| *v != Verdict::Fail)
        .count();
    human.push_str(&format!(
        "correction: {corrected}/{} error products corrected\n",
        report.checked_pairs
    ));
    for (e, v) in report.failures() {
        human.push_str(&format!("  FAIL {e} ({v})\n"));
    }
    let ok = report.all_corrected();
    Ok(Rendered {
        exit_code: if ok { 0 } else { 1 },
        human,
        json: json!({
            "schema": SCHEMA,
            "command": "verify",
            "code": CodeDoc::new(&code),
            "valid": true,
            "scope": if global { "global" } else { "alice" },
            "checked_pairs": report.checked_pairs,
            "corrected": corrected,
            "all_corrected": ok,
            "verdicts": report::verdict_docs(&report),
        }),
    })
}

fn distance_cmd(
    code_file: &str,
    max_weight: Option<usize>,
    global: bool,
) -> Result<Rendered, CliError> {
    let code = load_code(code_file)?;
    let scope = if global { Scope::Global } else { Scope::Alice };
    let cols = match scope {
        Scope::Global => code.n(),
        Scope::Alice => code.alice_columns().len(),
    };
    let max_weight = max_weight.unwrap_or(cols);
    let found = distance(&code, max_weight, scope)?;
    let human = match found {
        Some(d) => format!("distance: {d}\n"),
        None => format!("no logical operator up to weight {max_weight}\n"),
    };
    Ok(Rendered {
        exit_code: 0,
        human,
        json: json!({
            "schema": SCHEMA,
            "command": "distance",
            "scope": if global { "global" } else { "alice" },
            "max_weight": max_weight,
            "distance": found,
        }),
    })
}

// Amplitudes print as signed multiples of 1/sqrt(m) when the squared
// magnitude is an exact unit fraction, else as 12-place decimals.
fn amplitude_text(a: stabkit::clifford::Amplitude) -> String {
    if a.im.abs() < 1e-12 {
        let s = a.re * a.re;
        if s > 1e-12 {
            let m = (1.0 / s).round();
            if m >= 1.0 && (1.0 / m - s).abs() < 1e-9 {
                let sign = if a.re >= 0.0 { "+" } else { "-" };
                if (m - 1.0).abs() < 0.5 {
                    return format!("{sign}1");
                }
                return format!("{sign}1/sqrt({m:.0})");
            }
        }
        return format!("{:+.12}", a.re);
    }
    format!("{:+.12}{:+.12}i", a.re, a.im)
}

fn codewords_cmd(code_file: &str) -> Result<Rendered, CliError> {
    let code = load_code(code_file)?;
    let words = compute_codewords(&code)?;
    let n = code.n();
    let mut human = String::new();
    let mut docs = Vec::new();
    for (label, w) in words.iter().enumerate() {
        human.push_str(&format!("|{label:0width$b}>_L =\n", width = code.k().max(1)));
        let mut terms = Vec::new();
        for (idx, amp) in w.amplitudes().iter().enumerate() {
            if amp.norm_sqr() > 1e-24 {
                let basis = format!("{idx:0n$b}");
                human.push_str(&format!("  {} |{}>\n", amplitude_text(*amp), basis));
                terms.push(json!({
                    "basis": basis,
                    "amplitude": amplitude_text(*amp),
                    "re": amp.re,
                    "im": amp.im,
                }));
            }
        }
        docs.push(json!({
            "logical": format!("{label:0width$b}", width = code.k().max(1)),
            "terms": terms,
        }));
    }
    Ok(Rendered {
        exit_code: 0,
        human,
        json: json!({
            "schema": SCHEMA,
            "command": "codewords",
            "code": CodeDoc::new(&code),
            "codewords": docs,
        }),
    })
}

fn synth_cmd(
    code_file: &str,
    output: Option<&Path>,
    script_out: Option<&Path>,
) -> Result<Rendered, CliError> {
    let code = load_code(code_file)?;
    let result = synthesize_encoder(&code)?;
    let alice = code.alice_columns();
    let n_a = alice.len();
    let start = code.stabilizer().extract_columns(&alice)?;
    let chain = report::script_hash_chain(&start, &result.script)?;

    let circuit_text = formats::emit_circuit(&result.circuit);
    let script_text = formats::emit_script(n_a, &result.script);
    let mut human = format!(
        "ebits: {}\nencoder gates: {}\nreduction steps: {}\ncanonical rows:\n",
        result.ebits,
        result.circuit.len(),
        result.script.len()
    );
    for row in result.canonical.iter() {
        human.push_str(&format!("  {row}\n"));
    }
    if let Some(path) = output {
        write_output(path, &circuit_text)?;
        human.push_str(&format!("wrote encoder circuit to {}\n", path.display()));
    } else {
        human.push_str("encoder circuit:\n");
        for g in result.circuit.gates() {
            human.push_str(&format!("  {g}\n"));
        }
    }
    if let Some(path) = script_out {
        write_output(path, &script_text)?;
        human.push_str(&format!("wrote reduction script to {}\n", path.display()));
    }
    Ok(Rendered {
        exit_code: 0,
        human,
        json: json!({
            "schema": SCHEMA,
            "command": "synth",
            "code": CodeDoc::new(&code),
            "ebits": result.ebits,
            "encoder": result.circuit.gates().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "script": result.script.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "canonical": report::rows(&result.canonical),
            "canonical_full": report::rows(&result.canonical_full),
            "hash_chain": chain,
        }),
    })
}

fn gram_schmidt_cmd(gens_file: &str) -> Result<Rendered, CliError> {
    let gens = formats::parse_generators(&read_input(gens_file)?)?;
    let out = symplectic_gram_schmidt(&gens)?;
    let mut human = format!("ebits: {}\n", out.ebits);
    for (i, (a, b)) in out.pairs.iter().enumerate() {
        human.push_str(&format!("pair {}: {a} | {b}\n", i + 1));
    }
    if !out.isotropic.is_empty() {
        human.push_str("isotropic rows:\n");
        for r in out.isotropic.iter() {
            human.push_str(&format!("  {r}\n"));
        }
    }
    Ok(Rendered {
        exit_code: 0,
        human,
        json: json!({
            "schema": SCHEMA,
            "command": "gram-schmidt",
            "ebits": out.ebits,
            "pairs": out.pairs.iter()
                .map(|(a, b)| json!({"z": a.to_string(), "x": b.to_string()}))
                .collect::<Vec<_>>(),
            "isotropic": report::rows(&out.isotropic),
        }),
    })
}

fn css_build_cmd(hx_file: &str, hz_file: &str) -> Result<Rendered, CliError> {
    let hx = cssea::ClassicalParityCheck::new(formats::parse_matrix(&read_input(hx_file)?)?);
    let hz = cssea::ClassicalParityCheck::new(formats::parse_matrix(&read_input(hz_file)?)?);
    let gens = cssea::css_generators(&hx, &hz)?;
    let commuting = gens.first_anticommuting_pair().is_none();
    // The rank formula applies to the single-matrix construction; the
    // pairing count covers the general case.
    let rank_formula = (hx.matrix() == hz.matrix())
        .then(|| stabkit::synthesis::min_ebits_css(hx.matrix()));
    let ebits = gens
        .is_independent()
        .then(|| symplectic_gram_schmidt(&gens).map(|o| o.ebits))
        .transpose()?;
    let mut human = String::new();
    for r in gens.iter() {
        human.push_str(&format!("{r}\n"));
    }
    human.push_str(&format!("commuting: {commuting}\n"));
    if let Some(m) = rank_formula {
        human.push_str(&format!("minimum ebits (rank of H Ht): {m}\n"));
    }
    if let Some(e) = ebits {
        human.push_str(&format!("ebits required: {e}\n"));
    }
    Ok(Rendered {
        exit_code: 0,
        human,
        json: json!({
            "schema": SCHEMA,
            "command": "css-build",
            "generators": report::rows(&gens),
            "commuting": commuting,
            "min_ebits_rank_formula": rank_formula,
            "ebits": ebits,
        }),
    })
}

fn ea_build_cmd(gens_file: &str, output: Option<&Path>) -> Result<Rendered, CliError> {
    let gens = formats::parse_generators(&read_input(gens_file)?)?;
    let code = cssea::build_ea_code(&gens)?;
    let extra = format!("ebits: {}\n", code.ebits());
    emit_code_file("ea-build", &code, output, extra)
}

fn reduce_ebit_cmd(
    code_file: &str,
    qubit: usize,
    output: Option<&Path>,
) -> Result<Rendered, CliError> {
    if qubit == 0 {
        return Err(CliError::Core(Error::Usage(
            "qubit labels are 1-based".into(),
        )));
    }
    let code = load_code(code_file)?;
    let reduced = cssea::reduce_to_ebit(&code, qubit - 1)?;
    emit_code_file("reduce-ebit", &reduced, output, String::new())
}

fn steane_equiv_cmd(code_file: &str, output: Option<&Path>) -> Result<Rendered, CliError> {
    let code = load_code(code_file)?;
    let transformed = cssea::steane_equivalence_transform(&code)?;
    emit_code_file("steane-equiv", &transformed, output, String::new())
}

fn search_cmd(
    n: usize,
    k: usize,
    d: usize,
    ebits: usize,
    jobs: Option<usize>,
    report_path: Option<&Path>,
) -> Result<Rendered, CliError> {
    let jobs = jobs.unwrap_or_else(parallel::default_jobs);
    let spec = SearchSpec {
        alice_qubits: n,
        logical_qubits: k,
        required_distance: d,
        ebits,
    };
    let result = parallel::run_search(&spec, jobs)?;
    let doc = report::search_doc(n, k, d, ebits, jobs, &result);
    let mut human = format!("search css n={n} k={k} d={d} ebits={ebits} jobs={jobs}\n");
    human.push_str("  dx dz   enumerated    commuting  passed\n");
    for ((dx, dz), c) in &result.census {
        human.push_str(&format!(
            "  {dx:>2} {dz:>2} {:>12} {:>12} {:>7}\n",
            c.enumerated, c.commuting, c.passed_distance
        ));
    }
    human.push_str(&format!("survivors: {}\n", result.total_survivors()));
    for s in &result.survivors {
        human.push_str(&format!("  split ({}, {}):\n", s.dx, s.dz));
        for row in s.generators.iter() {
            human.push_str(&format!("    {row}\n"));
        }
    }
    if let Some(ms) = result.wall_time_ms {
        human.push_str(&format!("wall time: {ms} ms\n"));
    }
    let json_doc = serde_json::to_value(&doc).expect("search report serializes");
    if let Some(path) = report_path {
        write_output(
            path,
            &format!(
                "{}\n",
                serde_json::to_string_pretty(&json_doc).expect("serializes")
            ),
        )?;
        human.push_str(&format!("wrote report to {}\n", path.display()));
    }
    Ok(Rendered {
        exit_code: 0,
        human,
        json: json_doc,
    })
}
