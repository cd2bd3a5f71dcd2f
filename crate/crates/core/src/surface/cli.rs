//! The command implementations behind the `hyperset` binary.
//!
//! Each command takes its inputs as text and returns what it prints, so the
//! binary only reads files and maps errors to exit codes: 0 on success, 1
//! for domain and I/O errors, 2 for usage and parse errors.

use std::fmt;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use super::{
    builtins, eval_setexpr, graph_to_dot, network_to_dot, parse_graph_file, parse_network,
    parse_opexpr, parse_system, set_to_dot, ParseError, SurfaceError,
};
use crate::decoration::{decorate as plain_decorate, decorate_labeled};
use crate::neural::{mz_decorate, run};
use crate::operators::{check_k_axioms, small_corpus};

/// Named input text; the name prefixes error positions.
#[derive(Clone, Copy, Debug)]
pub struct Source<'a> {
    pub name: &'a str,
    pub text: &'a str,
}

impl<'a> Source<'a> {
    pub fn new(name: &'a str, text: &'a str) -> Self {
        Source { name, text }
    }
}

#[derive(Debug)]
pub enum CliError {
    Parse { origin: String, error: ParseError },
    Usage(String),
    Domain(crate::Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }

    fn lift(origin: &str) -> impl Fn(SurfaceError) -> CliError + '_ {
        move |e| match e {
            SurfaceError::Parse(error) => CliError::Parse {
                origin: origin.to_string(),
                error,
            },
            SurfaceError::Eval(e) => CliError::Domain(e),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { origin, error } => write!(
                f,
                "{origin}:{}:{}: {}",
                error.pos.line, error.pos.col, error.message
            ),
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(e) => write!(f, "error: {e}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Domain(e)
    }
}

pub type CliResult = Result<String, CliError>;

/// What an input file holds, judged from its content.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    System,
    Graph,
    Network,
}

impl FileKind {
    /// Network files have a `neurons:` section, graph files use `->`;
    /// anything else is a system.
    pub fn detect(text: &str) -> FileKind {
        let code: String = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join("\n");
        if code.contains("neurons:") || code.contains("neurons :") {
            FileKind::Network
        } else if code.contains("->") || code.contains('→') {
            FileKind::Graph
        } else {
            FileKind::System
        }
    }
}

/// Evaluates a set expression; names from `system` are in scope.
pub fn eval(expr: &str, system: Option<Source<'_>>) -> CliResult {
    let mut env = builtins();
    if let Some(src) = system {
        let s = parse_system(src.text).map_err(CliError::lift(src.name))?;
        for (b, v) in s.equations.iter().zip(&s.values) {
            env.insert(b.name.clone(), v.clone());
        }
    }
    let v = eval_setexpr(expr, &env).map_err(CliError::lift("<expr>"))?;
    Ok(format!("{v}\n"))
}

/// Prints `name = set` for every equation, node or neuron.
pub fn decorate(src: Source<'_>, labeled: bool) -> CliResult {
    let mut out = String::new();
    match FileKind::detect(src.text) {
        FileKind::System => {
            let s = parse_system(src.text).map_err(CliError::lift(src.name))?;
            for (b, v) in s.equations.iter().zip(&s.values) {
                writeln!(out, "{} = {v}", b.name).unwrap();
            }
            if s.point_name.is_none() {
                writeln!(out, "point = {}", s.point).unwrap();
            }
        }
        FileKind::Graph => {
            let g = parse_graph_file(src.text).map_err(CliError::lift(src.name))?;
            let d = if labeled {
                decorate_labeled(&g.graph, &g.labeling)?
            } else {
                plain_decorate(&g.graph)
            };
            for (name, v) in g.names.iter().zip(d.values()) {
                writeln!(out, "{name} = {v}").unwrap();
            }
        }
        FileKind::Network => {
            let spec = parse_network(src.text).map_err(|e| CliError::lift(src.name)(e.into()))?;
            let (net, state) = spec.build()?;
            let d = if labeled {
                mz_decorate(&net, &state)?
            } else {
                plain_decorate(net.graph())
            };
            for (name, v) in net.names().iter().zip(d.values()) {
                writeln!(out, "{name} = {v}").unwrap();
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Thema,
    Full,
}

impl FromStr for Emit {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "thema" => Ok(Emit::Thema),
            "full" => Ok(Emit::Full),
            _ => Err(format!("unknown emit mode `{s}` (expected thema or full)")),
        }
    }
}

/// Runs a network for `steps` updates, printing one block per time.
pub fn simulate(src: Source<'_>, steps: usize, emit: Emit, dot_dir: Option<&Path>) -> CliResult {
    let spec = parse_network(src.text).map_err(|e| CliError::lift(src.name)(e.into()))?;
    let (net, state) = spec.build()?;
    let traj = run(&net, &state, steps, emit == Emit::Full)?;
    if let Some(dir) = dot_dir {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        for entry in &traj.entries {
            let path = dir.join(format!("t{:04}.dot", entry.time));
            std::fs::write(&path, network_to_dot(&net, Some(&entry.state)))
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        }
    }
    let mut out = String::new();
    for entry in &traj.entries {
        writeln!(out, "t={}: {}", entry.time, entry.thema).unwrap();
        if let Some(d) = &entry.decoration {
            for v in net.graph().nodes() {
                writeln!(
                    out,
                    "  {} v={} d={}",
                    net.name(v),
                    u8::from(entry.state.voltage(v)),
                    d[v]
                )
                .unwrap();
            }
            for (i, &(a, b)) in net.edges().iter().enumerate() {
                writeln!(
                    out,
                    "  {} -> {} w={}",
                    net.name(a),
                    net.name(b),
                    entry.state.weights[i]
                )
                .unwrap();
            }
        }
    }
    Ok(out)
}

/// The canonical form of a system's point.
pub fn canon(src: Source<'_>) -> CliResult {
    if FileKind::detect(src.text) != FileKind::System {
        return Err(CliError::Usage(format!("{}: canon expects a system of equations", src.name)));
    }
    let s = parse_system(src.text).map_err(CliError::lift(src.name))?;
    Ok(format!("{}\n", s.point))
}

/// The corpus for `axioms`.
#[derive(Clone, Copy, Debug)]
pub enum Corpus<'a> {
    /// Every set with a picture of at most four nodes, plus named examples.
    Small,
    /// One set expression per non-blank line; `#` starts a comment.
    File(Source<'a>),
}

/// Checks the four consciousness axioms for an operator expression.
pub fn axioms(op: &str, corpus: Corpus<'_>) -> CliResult {
    let op = parse_opexpr(op).map_err(CliError::lift("<operator>"))?;
    let sets = match corpus {
        Corpus::Small => small_corpus(),
        Corpus::File(src) => {
            let env = builtins();
            let mut sets = Vec::new();
            for (i, line) in src.text.lines().enumerate() {
                let code = line.split('#').next().unwrap_or("");
                if code.trim().is_empty() {
                    continue;
                }
                let v = eval_setexpr(code, &env).map_err(|e| match e {
                    SurfaceError::Parse(mut error) => {
                        error.pos.line += i;
                        CliError::Parse {
                            origin: src.name.to_string(),
                            error,
                        }
                    }
                    SurfaceError::Eval(e) => CliError::Domain(e),
                })?;
                sets.push(v);
            }
            sets
        }
    };
    Ok(check_k_axioms(&op, &sets)?.to_string())
}

/// DOT text for a system's point, a graph file or a network state.
pub fn dot(src: Source<'_>) -> CliResult {
    match FileKind::detect(src.text) {
        FileKind::System => {
            let s = parse_system(src.text).map_err(CliError::lift(src.name))?;
            Ok(set_to_dot(&s.point))
        }
        FileKind::Graph => {
            let g = parse_graph_file(src.text).map_err(CliError::lift(src.name))?;
            Ok(graph_to_dot(&g.graph, Some(&g.names)))
        }
        FileKind::Network => {
            let spec = parse_network(src.text).map_err(|e| CliError::lift(src.name)(e.into()))?;
            let (net, state) = spec.build()?;
            Ok(network_to_dot(&net, Some(&state)))
        }
    }
}
