//! Command-line front end. `run` returns the process exit code: 0 on success
//! (audit FAIL verdicts included), 1 on usage errors, 2 on computation or
//! input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chars::{Character, CharacterTable, Cyclotomic};
use crate::exact::IntMatrix;
use crate::green::{h_depth_via_q, module_coalgebra_bound_check, module_depth, quotient_module_character};
use crate::hopf::HopfData;
use crate::perm::{parse_subgroup, DEFAULT_ORDER_CAP};
use crate::pipelines::{audit_json, battery, claims_markdown, theta_instance, to_dot, Limits, Pipeline, Scenario};
use crate::tensor::{theta, DEFAULT_TENSOR_BUDGET};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Debug, Parser)]
#[command(name = "subdepth", version, about = "Exact depth of subalgebras, subgroups and Hopf extensions")]
pub struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Re-run the computation recorded in a previously emitted JSON report
    #[arg(long, value_name = "FILE")]
    from_report: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    #[arg(long, default_value_t = DEFAULT_ORDER_CAP, value_parser = positive, global = true)]
    max_group_order: usize,

    #[arg(long, default_value_t = DEFAULT_TENSOR_BUDGET, value_parser = positive, global = true)]
    max_tensor_budget: usize,

    /// Prime used by the character table computation
    #[arg(long, global = true)]
    prime_override: Option<u64>,

    /// Write the Bratteli graph of the inclusion matrix as DOT
    #[arg(long, value_name = "PATH", global = true)]
    emit_dot: Option<PathBuf>,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Depth invariants of an inclusion
    #[command(subcommand)]
    Depth(DepthCmd),
    /// Module depth of a kG-module given by its character
    Moduledepth(ModuleDepthArgs),
    /// Axiom checks
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Run a battery of scenarios and audit the attached claims
    Audit {
        #[arg(long, default_value = "default")]
        battery: String,
    },
    /// Character table of a group
    Table {
        #[arg(long)]
        group: String,
    },
}

#[derive(Debug, Subcommand)]
enum DepthCmd {
    /// Induction matrix from a JSON file
    Matrix { file: PathBuf },
    /// Subgroup pair H ≤ G
    Pair {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
    },
    /// S_n ⊆ S_{n+1} by Young's rule
    Sym { n: usize },
    /// H* ⊆ H # H* for H = kG
    Heisenberg {
        #[arg(long)]
        group: String,
    },
    /// kG ⊆ D(kG)
    Drinfeld {
        #[arg(long)]
        group: String,
    },
    /// kG ⊆ Q*op # kG for Q = kG/(kH)⁺kG
    Gensmash {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
    },
}

#[derive(Debug, Args)]
struct ModuleDepthArgs {
    #[arg(long)]
    group: String,
    /// Class values as a JSON integer list, `regular`, `trivial` or `irr:K`
    #[arg(long, required_unless_present = "cosets", conflicts_with = "cosets")]
    character: Option<String>,
    /// Permutation module on the cosets of this subgroup
    #[arg(long)]
    cosets: Option<String>,
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// Hopf algebra axioms for structure constants in a JSON file
    Hopf { file: PathBuf },
    /// θ_n and its inverse on a factorization algebra
    Theta {
        /// flip, heisenberg or smash
        #[arg(long)]
        scenario: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "C2")]
        group: String,
    },
}

struct Output {
    json: Value,
    markdown: String,
    dot: Option<String>,
}

impl Cli {
    fn limits(&self) -> Limits {
        Limits {
            max_group_order: self.max_group_order,
            max_tensor_budget: self.max_tensor_budget,
            prime_override: self.prime_override,
        }
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    Ok(serde_json::from_str(&text)?)
}

/// Accepts `{"entries": [[..]]}`-style matrix files or a bare list of rows.
fn read_matrix(path: &Path) -> Result<IntMatrix> {
    let v = read_json(path)?;
    match &v {
        Value::Object(o) if o.contains_key("scenario") => match Scenario::from_json(&o["scenario"])? {
            Scenario::Matrix { matrix, .. } => Ok(matrix),
            _ => Err(Error::Parse("report does not hold a matrix scenario".into())),
        },
        _ => IntMatrix::from_json(&v),
    }
}

fn depth_output(pipe: &Pipeline, s: &Scenario) -> Result<Output> {
    let r = pipe.run(s)?;
    let mut json = r.to_json();
    json["request"] = json!(["depth"]);
    Ok(Output { markdown: r.to_markdown(), dot: Some(to_dot(&r.induction)), json })
}

fn scenario_of(cmd: &DepthCmd) -> Result<Scenario> {
    Ok(match cmd {
        DepthCmd::Matrix { file } => {
            Scenario::Matrix { matrix: read_matrix(file)?, source: Some(file.display().to_string()) }
        }
        DepthCmd::Pair { group, subgroup } => Scenario::pair(group, subgroup),
        DepthCmd::Sym { n } => Scenario::Sym { n: *n },
        DepthCmd::Heisenberg { group } => Scenario::Heisenberg { group: group.clone() },
        DepthCmd::Drinfeld { group } => Scenario::Drinfeld { group: group.clone() },
        DepthCmd::Gensmash { group, subgroup } => {
            Scenario::GenSmash { group: group.clone(), subgroup: subgroup.clone() }
        }
    })
}

fn parse_character(spec: &str, table: &CharacterTable) -> Result<Character> {
    let s = spec.trim();
    match s {
        "regular" => return Ok(table.regular()),
        "trivial" => return Ok(table.trivial()),
        _ => {}
    }
    if let Some(k) = s.strip_prefix("irr:") {
        let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad irreducible index `{k}`")))?;
        return table
            .irreducibles()
            .get(k.wrapping_sub(1))
            .cloned()
            .ok_or_else(|| Error::Parse(format!("irreducible {k} out of range 1..={}", table.len())));
    }
    let values: Vec<i64> = serde_json::from_str(s).map_err(|e| Error::Parse(format!("character values: {e}")))?;
    if values.len() != table.class_count() {
        return Err(Error::DimensionMismatch(format!("{} values for {} classes", values.len(), table.class_count())));
    }
    Ok(Character::new(values.into_iter().map(|v| Cyclotomic::from_int(1, v)).collect()))
}

fn moduledepth_output(pipe: &Pipeline, a: &ModuleDepthArgs) -> Result<Output> {
    let g = pipe.group(&a.group)?;
    let table = pipe.table(&g)?;
    let (w, mut extra) = match (&a.character, &a.cosets) {
        (Some(spec), _) => (parse_character(spec, &table)?, json!({})),
        (None, Some(h)) => {
            let sub = parse_subgroup(h, &g)?;
            let bridge = h_depth_via_q(&*pipe.table(&sub)?, &table)?;
            let w = quotient_module_character(&table, &sub)?;
            (w, json!({ "h_depth_via_q": bridge.via_q, "h_depth": bridge.via_matrix, "agrees": bridge.agrees() }))
        }
        (None, None) => return Err(Error::Parse("one of --character, --cosets is required".into())),
    };
    let md = module_depth(&table, &w)?;
    let bound = module_coalgebra_bound_check(&table, &w)?;
    let mut json = md.to_json();
    json["group"] = json!(a.group);
    json["character"] = json!(w.values().iter().map(|v| v.to_string()).collect::<Vec<_>>());
    json["multiplicities"] = json!(table.decompose(&w)?.iter().map(|m| m.to_string()).collect::<Vec<_>>());
    json["pure_power_stabilization"] = json!(bound.pure_power_stabilization);
    if let Value::Object(o) = &mut extra {
        for (k, v) in std::mem::take(o) {
            json[k] = v;
        }
    }
    let mut request = vec![json!("moduledepth"), json!("--group"), json!(a.group)];
    match (&a.character, &a.cosets) {
        (Some(c), _) => request.extend([json!("--character"), json!(c)]),
        (_, Some(h)) => request.extend([json!("--cosets"), json!(h)]),
        _ => {}
    }
    json["request"] = Value::Array(request);
    let markdown = format!(
        "# Module depth over {}\n\n- character: {}\n- module depth: {}\n- stabilization: {}\n",
        a.group, json["character"], md.depth, md.stabilization
    );
    Ok(Output { json, markdown, dot: None })
}

fn verify_output(pipe: &Pipeline, cmd: &VerifyCmd) -> Result<Output> {
    match cmd {
        VerifyCmd::Hopf { file } => {
            let h = HopfData::from_json(&read_json(file)?)?;
            let report = h.verify();
            let mut json = report.to_json();
            json["dim"] = json!(h.dim());
            json["request"] = json!(["verify", "hopf", file.display().to_string()]);
            let mut markdown = format!("# Hopf axioms ({}-dimensional)\n\n", h.dim());
            for c in &report.checks {
                match &c.witness {
                    None => markdown.push_str(&format!("- {}: holds\n", c.axiom)),
                    Some(w) => markdown.push_str(&format!("- {}: FAILS at {:?}\n", c.axiom, w)),
                }
            }
            Ok(Output { json, markdown, dot: None })
        }
        VerifyCmd::Theta { scenario, n, group } => {
            let g = pipe.group(group)?;
            let s = theta_instance(scenario, &g)?;
            let r = theta(&s, *n, pipe.limits.max_tensor_budget)?;
            let mut json = r.to_json();
            json["scenario"] = json!(scenario);
            json["group"] = json!(group);
            json["request"] =
                json!(["verify", "theta", "--scenario", scenario, "--n", n.to_string(), "--group", group]);
            let markdown = format!(
                "# theta_{n} on {scenario}({group})\n\n- relative dimension: {}\n- target dimension: {}\n- mutually inverse and bilinear: {}\n",
                r.relative_dim,
                r.target_dim,
                r.theta_ok()
            );
            Ok(Output { json, markdown, dot: None })
        }
    }
}

fn table_output(pipe: &Pipeline, group: &str) -> Result<Output> {
    let g = pipe.group(group)?;
    let t = pipe.table(&g)?;
    let mut json = t.to_json();
    json["request"] = json!(["table", "--group", group]);
    let mut markdown = format!("# Character table of {group}\n\n| |");
    for (c, &r) in t.classes().reps.iter().enumerate() {
        markdown.push_str(&format!(" {:?} ({}) |", g.element(r).cycles(), t.classes().sizes[c]));
    }
    markdown.push_str(&format!("\n|---|{}\n", "---|".repeat(t.class_count())));
    for (i, chi) in t.irreducibles().iter().enumerate() {
        markdown.push_str(&format!("| χ{} |", i + 1));
        for v in chi.values() {
            markdown.push_str(&format!(" {v} |"));
        }
        markdown.push('\n');
    }
    Ok(Output { json, markdown, dot: None })
}

fn audit_output(pipe: &Pipeline, name: &str) -> Result<Output> {
    let claims = pipe.audit(&battery(name)?)?;
    let mut json = audit_json(name, &claims);
    json["request"] = json!(["audit", "--battery", name]);
    Ok(Output { json, markdown: format!("# Audit: {name}\n\n{}", claims_markdown(&claims)), dot: None })
}

fn replay(pipe: &Pipeline, path: &Path) -> Result<Output> {
    let v = read_json(path)?;
    let request: Vec<String> = v
        .get("request")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("report has no `request` field".into()))?
        .iter()
        .map(|x| x.as_str().map(str::to_string).ok_or_else(|| Error::Parse("request entries must be strings".into())))
        .collect::<Result<_>>()?;
    if request.first().map(String::as_str) == Some("depth") {
        let s = Scenario::from_json(v.get("scenario").ok_or_else(|| Error::Parse("report has no `scenario`".into()))?)?;
        return depth_output(pipe, &s);
    }
    let cli = Cli::try_parse_from(std::iter::once("subdepth".to_string()).chain(request))
        .map_err(|e| Error::Parse(format!("recorded request: {e}")))?;
    match &cli.command {
        Some(cmd) => dispatch(pipe, cmd),
        None => Err(Error::Parse("recorded request has no command".into())),
    }
}

fn dispatch(pipe: &Pipeline, cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Depth(d) => depth_output(pipe, &scenario_of(d)?),
        Command::Moduledepth(a) => moduledepth_output(pipe, a),
        Command::Verify(v) => verify_output(pipe, v),
        Command::Audit { battery } => audit_output(pipe, battery),
        Command::Table { group } => table_output(pipe, group),
    }
}

/// Parses `argv` (program name first) and runs it, writing the report to
/// `out` and diagnostics to `err`.
pub fn run_with_io<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    let pipe = Pipeline::new(cli.limits());
    let result = match (&cli.command, &cli.from_report) {
        (Some(_), Some(_)) => {
            let _ = writeln!(err, "error: --from-report cannot be combined with a subcommand");
            return 1;
        }
        (Some(cmd), None) => dispatch(&pipe, cmd),
        (None, Some(path)) => replay(&pipe, path),
        (None, None) => {
            let _ = writeln!(err, "error: a subcommand or --from-report is required");
            return 1;
        }
    };
    let output = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    if let Some(path) = &cli.emit_dot {
        match &output.dot {
            Some(dot) => {
                if let Err(e) = std::fs::write(path, dot) {
                    let _ = writeln!(err, "error: writing {}: {e}", path.display());
                    return 2;
                }
            }
            None => {
                let _ = writeln!(err, "warning: --emit-dot ignored, this command has no inclusion matrix");
            }
        }
    }
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&output.json).expect("json") + "\n",
        Format::Md => output.markdown,
    };
    if out.write_all(text.as_bytes()).is_err() {
        return 2;
    }
    0
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(argv, &mut stdout.lock(), &mut stderr.lock())
}
