//! `cluster-poset`: enumerate cluster tilting objects, export their posets and
//! run the flip-flop, BGP-square, lemma and invariant checks on quiver files.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use cluster_poset::poset::find_isomorphism;
use cluster_poset::verify::{self, CheckReport};
use cluster_poset::{tamari, Classification, ClusterCategory, FinitePoset, Quiver};

#[derive(Parser, Debug)]
#[command(name = "cluster-poset", version, about = "Cluster tilting posets of Dynkin quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every cluster tilting object.
    Enumerate(Common),
    /// Export the poset of cluster tilting objects.
    Poset(Common),
    /// Run a family of checks and report pass/fail.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        check: Check,
    },
    /// Coxeter polynomials of the tilting posets of several quivers.
    Invariants(Common),
    /// Compare the tilting poset with an independent model.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "tamari")]
        oracle: Oracle,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Quiver file; `invariants` accepts the flag repeatedly.
    #[arg(long, required = true)]
    quiver: Vec<PathBuf>,
    /// Vertex label (sink for `verify --check flipflop|square`).
    #[arg(long)]
    vertex: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Flipflop,
    Square,
    Lemmas,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Oracle {
    Tamari,
}

/// A failure to produce a result at all, as opposed to a failed check.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

struct Input {
    path: PathBuf,
    sha256: String,
    quiver: Quiver,
}

fn load(path: &Path) -> Result<Input, InputError> {
    let bytes = fs::read(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let quiver = Quiver::parse(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(Input { path: path.to_path_buf(), sha256: hex::encode(Sha256::digest(&bytes)), quiver })
}

fn single(common: &Common) -> Result<Input, InputError> {
    match common.quiver.as_slice() {
        [p] => load(p),
        _ => Err(InputError("this command takes exactly one --quiver".into())),
    }
}

fn meta(inputs: &[&Input]) -> Value {
    json!({
        "tool": "cluster-poset",
        "version": env!("CARGO_PKG_VERSION"),
        "inputs": inputs.iter().map(|i| json!({ "path": i.path.display().to_string(), "sha256": i.sha256 })).collect::<Vec<_>>(),
    })
}

fn classification(q: &Quiver) -> String {
    match q.classify_dynkin() {
        Classification::Dynkin(t) => t.to_string(),
        Classification::DynkinUnion(parts) => parts.iter().map(ToString::to_string).collect::<Vec<_>>().join("+"),
        Classification::NotRepresentationFinite => "not representation-finite".into(),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn vertex_arg(common: &Common, q: &Quiver) -> Result<usize, InputError> {
    let label = common.vertex.as_deref().ok_or_else(|| InputError("--vertex is required for this check".into()))?;
    Ok(q.vertex(label)?)
}

fn reject_format(common: &Common, allowed: &[Format]) -> Result<(), InputError> {
    if allowed.contains(&common.format) {
        Ok(())
    } else {
        Err(InputError(format!("format {:?} is not available for this command", common.format).to_lowercase()))
    }
}

fn cmd_enumerate(common: &Common) -> Result<Output, InputError> {
    reject_format(common, &[Format::Json, Format::Csv])?;
    let input = single(common)?;
    let cat = ClusterCategory::new(&input.quiver)?;
    let objects = cat.enumerate()?;
    if common.format == Format::Csv {
        let mut s = String::from("index,object\n");
        for (i, t) in objects.iter().enumerate() {
            s.push_str(&format!("{i},{}\n", csv_field(&t.to_string())));
        }
        return Ok(Output::ok(s));
    }
    Ok(Output::ok(pretty(&json!({
        "meta": meta(&[&input]),
        "quiver": input.quiver.to_file(),
        "type": classification(&input.quiver),
        "count": objects.len(),
        "objects": objects.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
    }))))
}

fn cmd_poset(common: &Common) -> Result<Output, InputError> {
    let input = single(common)?;
    let cat = ClusterCategory::new(&input.quiver)?;
    let poset = cat.tilting_poset()?;
    let covers = poset.hasse();
    let text = match common.format {
        Format::Dot => poset.to_dot("tilting", |t| t.to_string()),
        Format::Csv => {
            let mut s = String::from("lower,upper\n");
            for &(a, b) in &covers {
                s.push_str(&format!(
                    "{},{}\n",
                    csv_field(&poset.element(a).to_string()),
                    csv_field(&poset.element(b).to_string())
                ));
            }
            s
        }
        Format::Json => {
            let relations: Vec<(usize, usize)> = (0..poset.len())
                .flat_map(|a| (0..poset.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| poset.lt(a, b))
                .collect();
            pretty(&json!({
                "meta": meta(&[&input]),
                "type": classification(&input.quiver),
                "elements": poset.elements().iter().map(|t| t.to_json()).collect::<Vec<_>>(),
                "covers": covers,
                "relations": relations,
                "minimum": poset.minimal_elements(),
                "maximum": poset.maximal_elements(),
            }))
        }
    };
    Ok(Output::ok(text))
}

fn cmd_verify(common: &Common, check: Check) -> Result<Output, InputError> {
    reject_format(common, &[Format::Json])?;
    let input = single(common)?;
    let q = &input.quiver;
    let (vertex, reports): (Option<String>, Vec<CheckReport>) = match check {
        Check::Flipflop | Check::Square => {
            let x = vertex_arg(common, q)?;
            if !q.is_sink(x) {
                return Err(InputError(format!("vertex {} is not a sink", q.label(x))));
            }
            let reports =
                if check == Check::Flipflop { verify::verify_flip_flop(q, x)? } else { verify::verify_square(q, x)? };
            (Some(q.label(x).to_string()), reports)
        }
        Check::Lemmas => (None, verify::lemma_suite(q)?),
    };
    let passed = verify::all_passed(&reports);
    let text = pretty(&json!({
        "meta": meta(&[&input]),
        "check": format!("{check:?}").to_lowercase(),
        "vertex": vertex,
        "status": if passed { "pass" } else { "fail" },
        "reports": reports,
    }));
    Ok(Output { text, passed })
}

fn cmd_invariants(common: &Common) -> Result<Output, InputError> {
    reject_format(common, &[Format::Json, Format::Csv])?;
    let inputs = common.quiver.iter().map(|p| load(p)).collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    for input in &inputs {
        let poset = ClusterCategory::new(&input.quiver)?.tilting_poset()?;
        let poly = poset.coxeter_polynomial()?;
        rows.push((input, classification(&input.quiver), poset.len(), poly));
    }
    let equal = rows.windows(2).all(|w| w[0].3 == w[1].3);
    let text = if common.format == Format::Csv {
        let mut s = String::from("path,sha256,type,elements,coxeter_polynomial,equal\n");
        for (input, ty, size, poly) in &rows {
            s.push_str(&format!(
                "{},{},{},{size},{},{equal}\n",
                csv_field(&input.path.display().to_string()),
                input.sha256,
                csv_field(ty),
                csv_field(&poly.to_string())
            ));
        }
        s
    } else {
        let refs: Vec<&Input> = inputs.iter().collect();
        pretty(&json!({
            "meta": meta(&refs),
            "rows": rows.iter().map(|(input, ty, size, poly)| json!({
                "path": input.path.display().to_string(),
                "type": ty,
                "elements": size,
                "coxeter_polynomial": poly.to_string(),
                "coefficients": poly,
            })).collect::<Vec<_>>(),
            "equal": equal,
        }))
    };
    Ok(Output { text, passed: equal })
}

/// Linear orientation of `A_n`: a single directed path through all vertices.
fn is_linear(q: &Quiver) -> bool {
    let n = q.vertex_count();
    if q.arrows().len() + 1 != n {
        return false;
    }
    let mut out = vec![0; n];
    let mut inn = vec![0; n];
    for &(s, t) in q.arrows() {
        out[s] += 1;
        inn[t] += 1;
    }
    // n - 1 arrows, in/out degree at most one and no cycles: a path iff one source
    out.iter().chain(&inn).all(|&d| d <= 1) && q.sources().len() == 1
}

fn cmd_oracle(common: &Common, _oracle: Oracle) -> Result<Output, InputError> {
    reject_format(common, &[Format::Json])?;
    let input = single(common)?;
    let q = &input.quiver;
    if !is_linear(q) {
        return Err(InputError("the Tamari oracle applies only to linearly oriented A_n".into()));
    }
    let n = q.vertex_count();
    let poset = ClusterCategory::new(q)?.tilting_poset()?;
    let model = tamari(n);
    let witness = find_isomorphism(&poset, &model);
    let passed = witness.is_some();
    let text = pretty(&json!({
        "meta": meta(&[&input]),
        "oracle": "tamari",
        "n": n,
        "tilting_elements": poset.len(),
        "tamari_elements": model.len(),
        "status": if passed { "pass" } else { "fail" },
        "isomorphism": witness.map(|w| matching(&poset, &model, &w)),
    }));
    Ok(Output { text, passed })
}

fn matching<A: ToString, B: ToString>(p: &FinitePoset<A>, q: &FinitePoset<B>, w: &[usize]) -> Value {
    Value::Array(
        w.iter().enumerate().map(|(a, &b)| json!([p.element(a).to_string(), q.element(b).to_string()])).collect(),
    )
}

fn run(cli: &Cli) -> Result<(Output, Option<&Path>), InputError> {
    let (output, common) = match &cli.command {
        Command::Enumerate(c) => (cmd_enumerate(c)?, c),
        Command::Poset(c) => (cmd_poset(c)?, c),
        Command::Verify { common, check } => (cmd_verify(common, *check)?, common),
        Command::Invariants(c) => (cmd_invariants(c)?, c),
        Command::Oracle { common, oracle } => (cmd_oracle(common, *oracle)?, common),
    };
    Ok((output, common.out.as_deref()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, out)) => {
            if let Some(path) = out {
                if let Err(e) = fs::write(path, &output.text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", output.text);
            }
            if output.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
