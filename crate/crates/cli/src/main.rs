use std::fs;
use std::io::Write;
use std::ops::Deref;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use quiver_schubert::quiver::{
    giambelli_i, giambelli_ii, monomial_coefficient, quiver_coefficients, quiver_coefficients_skew,
    split_double_schubert, split_single, stanley_product,
};
use quiver_schubert::schubert::{
    double_schubert, single_schubert, stanley_schur_expansion, universal_double, universal_single,
};
use quiver_schubert::verify::{run_suite, Suite, DEFAULT_SEED};
use quiver_schubert::{Permutation, SchurSeqExpansion};

/// Bumped whenever an output format changes so stale cache entries miss.
const CACHE_FORMAT: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "qschub", version, about = "Schubert polynomials, Stanley functions and quiver coefficients")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Directory for cached results.
    #[arg(long, global = true, value_name = "PATH", env = "QSCHUB_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All reduced words of W.
    ReducedWords { w: Permutation },
    /// The Schubert polynomial of W.
    Schubert {
        w: Permutation,
        /// Double Schubert polynomial in x and y.
        #[arg(long)]
        double: bool,
        /// Ambient symmetric group (defaults to the smallest one containing W).
        #[arg(long)]
        n: Option<usize>,
    },
    /// The universal Schubert polynomial of W in the c (and d) variables.
    Universal {
        w: Permutation,
        #[arg(long)]
        double: bool,
    },
    /// The Stanley symmetric function of W.
    Stanley {
        w: Permutation,
        /// Evaluate in x_1..x_K.
        #[arg(long, value_name = "K", conflicts_with = "schur")]
        vars: Option<u16>,
        /// Expansion in Schur functions (the default).
        #[arg(long)]
        schur: bool,
    },
    /// Quiver coefficients of W on a sequence of 2N-1 positions.
    QuiverCoeffs {
        w: Permutation,
        #[arg(long)]
        n: usize,
        /// Count sequences of skew tableaux instead.
        #[arg(long, conflicts_with = "stanley_product")]
        skew: bool,
        /// Sum of products of Stanley coefficients over factorizations.
        #[arg(long)]
        stanley_product: bool,
    },
    /// Split the (double) Schubert polynomial of W along a and b.
    Split {
        w: Permutation,
        #[arg(long, value_name = "LIST")]
        a: List,
        #[arg(long, value_name = "LIST")]
        b: Option<List>,
    },
    /// Coefficient of x^u y^v in the double Schubert polynomial of W.
    MonomialCoeff {
        w: Permutation,
        #[arg(long, value_name = "LIST")]
        x: List,
        #[arg(long, value_name = "LIST")]
        y: Option<List>,
    },
    /// The class of W on the partial flag variety of type a in S_N.
    Giambelli {
        w: Permutation,
        #[arg(long, value_name = "LIST")]
        a: List,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        form: Form,
    },
    /// Run an oracle suite; exits 1 if any check fails.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Form {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
}

/// A comma-separated list of nonnegative integers; the empty string is the
/// empty list.
#[derive(Clone, Debug, Default)]
struct List(Vec<u32>);

impl FromStr for List {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim().is_empty() {
            return Ok(List(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| format!("bad list entry {t:?}")))
            .collect::<Result<_, _>>()
            .map(List)
    }
}

impl Deref for List {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

/// A computed result in both renderings.
struct Output {
    text: String,
    json: Value,
}

type Computed = Result<Output, quiver_schubert::Error>;

fn table_entries(t: &SchurSeqExpansion, w: &Permutation) -> Value {
    t.to_json(w, w.size())["entries"].clone()
}

fn integer_json(text: String) -> Value {
    match text.parse::<i64>() {
        Ok(v) => json!(v),
        Err(_) => json!(text),
    }
}

fn word_text(word: &[u32]) -> String {
    if word.is_empty() {
        "()".to_string()
    } else {
        word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn table_text(t: &SchurSeqExpansion) -> String {
    let s = t.to_string();
    if s.is_empty() {
        "0\n".to_string()
    } else {
        s
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::ReducedWords { .. } => "reduced-words",
            Command::Schubert { .. } => "schubert",
            Command::Universal { .. } => "universal",
            Command::Stanley { .. } => "stanley",
            Command::QuiverCoeffs { .. } => "quiver-coeffs",
            Command::Split { .. } => "split",
            Command::MonomialCoeff { .. } => "monomial-coeff",
            Command::Giambelli { .. } => "giambelli",
            Command::Verify { .. } => "verify",
        }
    }

    /// Arguments with defaults filled in and permutations in one-line form.
    fn canonical_args(&self) -> Value {
        match self {
            Command::ReducedWords { w } => json!({ "w": w.to_string() }),
            Command::Schubert { w, double, n } => {
                json!({ "w": w.to_string(), "double": double, "n": n.unwrap_or(w.size()) })
            }
            Command::Universal { w, double } => json!({ "w": w.to_string(), "double": double }),
            Command::Stanley { w, vars, .. } => json!({ "w": w.to_string(), "vars": vars }),
            Command::QuiverCoeffs { w, n, skew, stanley_product } => json!({
                "w": w.to_string(), "n": n, "skew": skew, "stanley_product": stanley_product
            }),
            Command::Split { w, a, b } => json!({ "w": w.to_string(), "a": a.0, "b": b.as_ref().map(|b| &b.0) }),
            Command::MonomialCoeff { w, x, y } => {
                json!({ "w": w.to_string(), "x": x.0, "y": y.clone().unwrap_or_default().0 })
            }
            Command::Giambelli { w, a, n, form } => {
                json!({ "w": w.to_string(), "a": a.0, "n": n, "form": format!("{form:?}") })
            }
            Command::Verify { suite, seed } => json!({ "suite": suite.to_string(), "seed": seed }),
        }
    }

    fn compute(&self) -> Computed {
        match self {
            Command::ReducedWords { w } => {
                let words = w.reduced_words();
                let text = words.iter().map(|word| word_text(word) + "\n").collect();
                Ok(Output { text, json: json!({ "w": w.to_string(), "reduced_words": words }) })
            }
            Command::Schubert { w, double, n } => {
                let n = n.unwrap_or(w.size());
                w.require_in_group(n)?;
                let f = if *double { double_schubert(w, n)? } else { single_schubert(w) };
                Ok(Output {
                    text: format!("{f}\n"),
                    json: json!({ "w": w.to_string(), "n": n, "double": double, "polynomial": f.to_json() }),
                })
            }
            Command::Universal { w, double } => {
                let f = if *double { universal_double(w) } else { universal_single(w) };
                Ok(Output {
                    text: format!("{f}\n"),
                    json: json!({ "w": w.to_string(), "double": double, "polynomial": f.to_json() }),
                })
            }
            Command::Stanley { w, vars, .. } => {
                let expansion = stanley_schur_expansion(w);
                if let Some(k) = vars {
                    let f = expansion.evaluate(*k);
                    return Ok(Output {
                        text: format!("{f}\n"),
                        json: json!({ "w": w.to_string(), "vars": k, "polynomial": f.to_json() }),
                    });
                }
                let terms: Vec<String> = expansion
                    .iter()
                    .map(|(l, c)| {
                        let s = if l.is_empty() { "1".to_string() } else { format!("s_{l}") };
                        if c == 1 {
                            s
                        } else {
                            format!("{c} {s}")
                        }
                    })
                    .collect();
                let schur: Vec<Value> =
                    expansion.iter().map(|(l, c)| json!({ "partition": l.parts(), "coeff": c })).collect();
                Ok(Output { text: terms.join(" + ") + "\n", json: json!({ "w": w.to_string(), "schur": schur }) })
            }
            Command::QuiverCoeffs { w, n, skew, stanley_product: product } => {
                let table = if *skew {
                    quiver_coefficients_skew(w, *n)?
                } else if *product {
                    stanley_product(w, *n)?
                } else {
                    quiver_coefficients(w, *n)?
                };
                Ok(Output { text: table_text(&table), json: table.to_json(w, *n) })
            }
            Command::Split { w, a, b } => {
                let result = match b {
                    Some(b) => split_double_schubert(w, a, b)?,
                    None => split_single(w, a)?,
                };
                let text = format!(
                    "{}polynomial: {}\n({} sequences, {} with nonvanishing factors)\n",
                    table_text(&result.table),
                    result.polynomial,
                    result.raw.total(),
                    result.table.total()
                );
                let json = json!({
                    "w": w.to_string(),
                    "a": a.0,
                    "b": b.as_ref().map(|b| &b.0),
                    "raw": table_entries(&result.raw, w),
                    "table": table_entries(&result.table, w),
                    "polynomial": result.polynomial.to_json(),
                });
                Ok(Output { text, json })
            }
            Command::MonomialCoeff { w, x, y } => {
                let y = y.clone().unwrap_or_default();
                let c = monomial_coefficient(w, x, &y).to_string();
                Ok(Output {
                    text: format!("{c}\n"),
                    json: json!({ "w": w.to_string(), "x": x.0, "y": y.0, "coeff": integer_json(c) }),
                })
            }
            Command::Giambelli { w, a, n, form } => {
                let e = match form {
                    Form::I => giambelli_i(w, a, *n)?,
                    Form::II => giambelli_ii(w, a, *n)?,
                };
                let mut json = e.to_json();
                json["w"] = json!(w.to_string());
                json["form"] = json!(format!("{form:?}"));
                Ok(Output { text: format!("{e}\n"), json })
            }
            Command::Verify { .. } => unreachable!("verify is handled separately"),
        }
    }
}

fn cache_path(dir: &Path, request: &str) -> PathBuf {
    let digest = Sha256::digest(request.as_bytes());
    dir.join(format!("{}.json", hex::encode(digest)))
}

fn cache_read(path: &Path, request: &Value) -> Option<String> {
    let stored: Value = serde_json::from_str(&fs::read_to_string(path).ok()?).ok()?;
    if stored.get("request")? != request {
        return None;
    }
    stored.get("output")?.as_str().map(str::to_string)
}

fn cache_write(dir: &Path, path: &Path, request: &Value, output: &str) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    let body = json!({ "request": request, "output": output });
    tmp.write_all(serde_json::to_string(&body)?.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn render(out: &Output, as_json: bool) -> String {
    if as_json {
        serde_json::to_string_pretty(&out.json).expect("serializable") + "\n"
    } else {
        out.text.clone()
    }
}

fn run_verify(suite: Suite, seed: u64, as_json: bool) -> ExitCode {
    let checks = run_suite(suite, seed);
    let passed = checks.iter().all(|c| c.passed());
    if as_json {
        let list: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "name": c.name, "cases": c.cases, "failures": c.failures, "passed": c.passed() }))
            .collect();
        let body = json!({ "suite": suite.to_string(), "seed": seed, "checks": list, "passed": passed });
        println!("{}", serde_json::to_string_pretty(&body).expect("serializable"));
    } else {
        for c in &checks {
            if c.passed() {
                println!("[PASS] {} ({} cases)", c.name, c.cases);
            } else {
                println!("[FAIL] {} ({} of {} cases): {}", c.name, c.failures.len(), c.cases, c.failures[0]);
            }
        }
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let line = rendered.lines().find(|l| l.starts_with("error:")).map(str::to_string);
            return match line {
                Some(line) => {
                    eprintln!("{line}");
                    ExitCode::from(2)
                }
                None => usage_error(format!("{} (see --help)", e.kind())),
            };
        }
    };

    if let Command::Verify { suite, seed } = cli.command {
        return run_verify(suite, seed, cli.json);
    }

    let request = json!({
        "format": CACHE_FORMAT,
        "command": cli.command.name(),
        "args": cli.command.canonical_args(),
        "json": cli.json,
    });
    let cached = cli.cache_dir.as_deref().map(|dir| {
        let path = cache_path(dir, &request.to_string());
        (dir, path)
    });
    if let Some((_, path)) = &cached {
        if let Some(hit) = cache_read(path, &request) {
            print!("{hit}");
            return ExitCode::SUCCESS;
        }
    }

    let out = match cli.command.compute() {
        Ok(out) => out,
        Err(e) => return usage_error(e),
    };
    let rendered = render(&out, cli.json);
    if let Some((dir, path)) = &cached {
        if let Err(e) = cache_write(dir, path, &request, &rendered) {
            eprintln!("warning: could not write cache entry: {e}");
        }
    }
    print!("{rendered}");
    ExitCode::SUCCESS
}
