use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use supermixed::involution::{dimension_report, diss_dim};
use supermixed::local::{local_mixed_setting, FactorKind, SemisimpleDecomposition};
use supermixed::oracle::{verify_existence, Strategy, Verification};
use supermixed::simples::{
    all_simples_orthogonal, has_general_simples, has_orthogonal_simples,
    has_simples_recursive, has_symplectic_simples_report,
};
use supermixed::{ArrowKind, Sign, SimplesReport, SupermixedSetting, VertexKind};
use thiserror::Error;

use crate::document::{parse, ParseError, SettingDocument};

const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "smq", version, about = "Queries on supermixed quiver settings")]
pub struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 when a boolean query answers false.
    #[arg(long, global = true)]
    strict_exit: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the setting against M1 to M3, strictness and parity.
    Validate { file: PathBuf },
    /// Print the strict form of the setting.
    Normalize { file: PathBuf },
    /// dim iss, DRep, DGL and Diss.
    Dims { file: PathBuf },
    /// Local mixed quiver setting of the decomposition in the file (or in --decomposition).
    Local {
        file: PathBuf,
        #[arg(long)]
        decomposition: Option<PathBuf>,
    },
    /// Existence of simples of the given kind.
    Simples {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: SimplesKind,
        /// Print the reduction trace.
        #[arg(long)]
        trace: bool,
    },
    /// Search for explicit ε-simples by exact sampling.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Only this kind; all three when omitted.
        #[arg(long, value_enum)]
        kind: Option<OracleKind>,
    },
    /// Graphviz rendering; dashed for ε = -1 vertices and σ = -1 arrows.
    ExportDot { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SimplesKind {
    Ordinary,
    Orthogonal,
    Symplectic,
    General,
    AllOrthogonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Orthogonal,
    Symplectic,
    General,
}

impl From<OracleKind> for FactorKind {
    fn from(k: OracleKind) -> Self {
        match k {
            OracleKind::Orthogonal => FactorKind::Orthogonal,
            OracleKind::Symplectic => FactorKind::Symplectic,
            OracleKind::General => FactorKind::General,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Library(#[from] supermixed::Error),
    #[error("{0}")]
    Usage(String),
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// What a command produced: text, JSON, and a truth value for boolean queries.
struct Answer {
    text: String,
    json: Value,
    boolean: Option<bool>,
}

/// Run `smq` with `args` (including the program name). `stdin` backs the
/// file name `-`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Output { stdout, stderr, code };
        }
    };
    match execute(&cli, stdin) {
        Ok(a) => {
            let mut stdout = if cli.json {
                serde_json::to_string_pretty(&a.json).expect("json values serialize")
            } else {
                a.text
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            let code = if cli.strict_exit && a.boolean == Some(false) { 1 } else { 0 };
            Output { stdout, stderr: String::new(), code }
        }
        Err(e) => {
            let stdout = if cli.json {
                let v = json!({"schema": SCHEMA, "error": e.to_string()});
                serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
            } else {
                String::new()
            };
            Output { stdout, stderr: format!("error: {e}\n"), code: 2 }
        }
    }
}

fn read_source(path: &PathBuf, stdin: &mut dyn Read) -> Result<String, CliError> {
    let name = path.display().to_string();
    let io = |source| CliError::Io { path: name.clone(), source };
    if name == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn load(path: &PathBuf, stdin: &mut dyn Read) -> Result<(SettingDocument, SupermixedSetting), CliError> {
    let text = read_source(path, stdin)?;
    let doc = parse(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })?;
    let s = doc.setting()?;
    Ok((doc, s))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Answer, CliError> {
    match &cli.command {
        Command::Validate { file } => {
            let (_, s) = load(file, stdin)?;
            Ok(Answer {
                text: format!("valid: {}", s.summary()),
                json: json!({"schema": SCHEMA, "command": "validate", "valid": true, "summary": s.summary()}),
                boolean: None,
            })
        }
        Command::Normalize { file } => {
            let (doc, _) = load(file, stdin)?;
            let text = doc.print();
            Ok(Answer {
                json: json!({"schema": SCHEMA, "command": "normalize", "document": text}),
                text,
                boolean: None,
            })
        }
        Command::Dims { file } => {
            let (_, s) = load(file, stdin)?;
            dims(&s)
        }
        Command::Local { file, decomposition } => {
            let (doc, s) = load(file, stdin)?;
            let d = match decomposition {
                Some(p) => {
                    let text = read_source(p, stdin)?;
                    let extra = parse(&format!("{}{}", doc.print(), strip_header(&text)))
                        .map_err(|source| CliError::Parse { path: p.display().to_string(), source })?;
                    extra.decomposition()
                }
                None => doc.decomposition(),
            };
            if d.factors.is_empty() {
                return Err(CliError::Usage("no 'factor' lines: local needs a decomposition".into()));
            }
            local(&s, &d)
        }
        Command::Simples { file, kind, trace } => {
            let (_, s) = load(file, stdin)?;
            simples(&s, *kind, *trace)
        }
        Command::Oracle { file, samples, seed, kind } => {
            let (_, s) = load(file, stdin)?;
            oracle(&s, *samples, *seed, *kind)
        }
        Command::ExportDot { file } => {
            let (doc, _) = load(file, stdin)?;
            let text = export_dot(&doc);
            Ok(Answer {
                json: json!({"schema": SCHEMA, "command": "export-dot", "dot": text}),
                text,
                boolean: None,
            })
        }
    }
}

fn strip_header(text: &str) -> String {
    let mut seen = false;
    text.lines()
        .filter(|l| {
            let t = l.split('#').next().unwrap_or("").trim();
            if !seen && t == "supermixed" {
                seen = true;
                return false;
            }
            true
        })
        .map(|l| format!("{l}\n"))
        .collect()
}

fn dims(s: &SupermixedSetting) -> Result<Answer, CliError> {
    let r = dimension_report(s)?;
    let diss = diss_dim(s).ok();
    let show = |x: Option<i64>, none: &str| x.map_or(none.to_string(), |v| v.to_string());
    Ok(Answer {
        text: format!(
            "iss {}, drep {}, dgl {}, diss {}",
            show(r.iss, "none"),
            r.drep,
            r.dgl,
            show(diss, "undefined")
        ),
        json: json!({
            "schema": SCHEMA,
            "command": "dims",
            "iss": r.iss,
            "rep": r.rep,
            "drep": r.drep,
            "dgl": r.dgl,
            "diss": diss,
        }),
        boolean: None,
    })
}

fn kind_word(k: VertexKind) -> &'static str {
    match k {
        VertexKind::Orthogonal => "orthogonal",
        VertexKind::Symplectic => "symplectic",
        VertexKind::General => "general",
    }
}

fn local(s: &SupermixedSetting, d: &SemisimpleDecomposition) -> Result<Answer, CliError> {
    let l = local_mixed_setting(s, d)?;
    let smq = l.smq();
    let vnames: Vec<String> = (0..l.vertex_count()).map(|v| format!("X{v}")).collect();
    let anames: Vec<String> = (0..l.arrow_count()).map(|a| format!("c{a}")).collect();
    let mut text = String::from("local vertices:");
    let mut vertices = Vec::new();
    for v in 0..l.vertex_count() {
        let kind = kind_word(smq.vertex_kind(v));
        let _ = write!(text, " {} {kind} dim {} dual {};", vnames[v], l.dim(v), vnames[smq.phi_v(v)]);
        vertices.push(json!({"name": vnames[v], "kind": kind, "dim": l.dim(v), "dual": vnames[smq.phi_v(v)]}));
    }
    text.pop();
    text.push('\n');
    let mut blocks = Vec::new();
    for t in 0..l.vertex_count() {
        for h in 0..l.vertex_count() {
            let (mut sym, mut anti, mut gen) = (0, 0, 0);
            for a in (0..l.arrow_count()).filter(|&a| smq.tail(a) == t && smq.head(a) == h) {
                match smq.arrow_kind(a) {
                    ArrowKind::Symmetric => sym += 1,
                    ArrowKind::Antisymmetric => anti += 1,
                    ArrowKind::General => gen += 1,
                }
            }
            if sym + anti + gen == 0 {
                continue;
            }
            let _ = writeln!(
                text,
                "{} -> {}: {} arrows ({sym} symmetric, {anti} antisymmetric, {gen} general)",
                vnames[t],
                vnames[h],
                sym + anti + gen
            );
            blocks.push(json!({
                "tail": vnames[t], "head": vnames[h],
                "symmetric": sym, "antisymmetric": anti, "general": gen,
            }));
        }
    }
    let doc = SettingDocument::from_setting(&l, &vnames, &anames).print();
    text.push_str(&doc);
    Ok(Answer {
        text,
        json: json!({
            "schema": SCHEMA,
            "command": "local",
            "vertices": vertices,
            "arrows": blocks,
            "document": doc,
        }),
        boolean: None,
    })
}

fn simples(s: &SupermixedSetting, kind: SimplesKind, trace: bool) -> Result<Answer, CliError> {
    let report: SimplesReport = match kind {
        SimplesKind::Ordinary => has_simples_recursive(s.quiver(), s.gamma_bar())?,
        SimplesKind::Orthogonal => has_orthogonal_simples(s)?,
        SimplesKind::Symplectic => has_symplectic_simples_report(s)?,
        SimplesKind::General => SimplesReport { answer: has_general_simples(s)?, trace: Vec::new() },
        SimplesKind::AllOrthogonal => SimplesReport { answer: all_simples_orthogonal(s)?, trace: Vec::new() },
    };
    let mut text = String::new();
    if trace {
        for t in &report.trace {
            let _ = writeln!(text, "{t}");
        }
    }
    let _ = write!(text, "{}", report.answer);
    let kind_name = kind.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut json = json!({"schema": SCHEMA, "command": "simples", "kind": kind_name, "answer": report.answer});
    if trace {
        json["trace"] = serde_json::to_value(&report.trace).expect("trace serializes");
    }
    Ok(Answer { text, json, boolean: Some(report.answer) })
}

fn strategy_name(s: &Strategy) -> String {
    match s {
        Strategy::Generic => "generic".into(),
        Strategy::Tensor => "tensor".into(),
        Strategy::Hyperbolic(alpha) => format!("hyperbolic {alpha}"),
    }
}

fn oracle(s: &SupermixedSetting, samples: usize, seed: u64, kind: Option<OracleKind>) -> Result<Answer, CliError> {
    let kinds: Vec<OracleKind> = match kind {
        Some(k) => vec![k],
        None => vec![OracleKind::Orthogonal, OracleKind::Symplectic, OracleKind::General],
    };
    let mut lines = Vec::new();
    let mut results = Vec::new();
    let mut all_found = true;
    for k in kinds {
        let fk = FactorKind::from(k);
        let word = fk.to_string().to_lowercase();
        match verify_existence(s, fk, samples, seed)? {
            Verification::ConfirmedYes { sample, strategy, .. } => {
                lines.push(format!("{word}: witness at sample {sample} ({})", strategy_name(&strategy)));
                results.push(json!({"kind": word, "found": true, "sample": sample, "strategy": strategy_name(&strategy)}));
            }
            Verification::NoWitnessFound { samples } => {
                all_found = false;
                lines.push(format!("{word}: no witness in {samples} samples"));
                results.push(json!({"kind": word, "found": false, "samples": samples}));
            }
        }
    }
    Ok(Answer {
        text: lines.join("\n"),
        json: json!({"schema": SCHEMA, "command": "oracle", "seed": seed, "results": results}),
        boolean: kind.map(|_| all_found),
    })
}

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Deterministic DOT text: vertices and arrows sorted by name.
pub fn export_dot(doc: &SettingDocument) -> String {
    let mut vertices: Vec<_> = doc.vertices.iter().collect();
    vertices.sort_by(|a, b| a.name.cmp(&b.name));
    let mut arrows: Vec<_> = doc.arrows.iter().collect();
    arrows.sort_by(|a, b| a.name.cmp(&b.name));
    let mut out = String::from("digraph supermixed {\n");
    for v in vertices {
        let style = if v.eps == Sign::Minus { "dashed" } else { "solid" };
        let _ = writeln!(
            out,
            "  {} [label={}, style={style}];",
            quote(&v.name),
            quote(&format!("{} ({})", v.name, v.dim))
        );
    }
    for a in arrows {
        let style = if a.sigma == Sign::Minus { "dashed" } else { "solid" };
        let label = if a.dual == a.name { a.name.clone() } else { format!("{} / {}", a.name, a.dual) };
        let _ = writeln!(
            out,
            "  {} -> {} [label={}, style={style}];",
            quote(&a.tail),
            quote(&a.head),
            quote(&label)
        );
    }
    out.push_str("}\n");
    out
}
