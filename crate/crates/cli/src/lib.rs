//! Command-line front end for `roughconn`.
//!
//! [`run`] does all the work and returns the exit status together with what
//! would be written to standard output and standard error, so the binary is a
//! thin wrapper and tests can drive the CLI in-process.
//!
//! Exit status: `0` on success, `1` on a negative answer from a predicate
//! subcommand or when well-formed input fails a semantic requirement (isolated
//! vertices, axiom violations, ...), `2` on usage and parse errors.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use roughconn::format::{
    parse_covering, parse_graph, parse_incidence, parse_matroid, write_covering, write_graph, write_incidence,
    write_matroid,
};
use roughconn::oracle::{is_connected_exhaustive, outer_definable_exhaustive, path_exists, EXHAUSTIVE_LIMIT};
use roughconn::{
    cycle_matroid, graph_from_incidence, uniform_matroid, validate_circuits, CircuitFamily, CircuitValidation,
    Covering, Error, Graph, Method, Partition, StepVerdict, Subset, Universe,
};

#[derive(Parser, Debug)]
#[command(name = "roughconn", version, about = "Graph and matroid connectedness via covering approximation operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Answer with the brute-force reference route where one exists.
    #[arg(long, global = true)]
    oracle: bool,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graph operations on `vertices:` / `edge u v` files.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Covering approximations on `universe:` / `block:` files.
    #[command(subcommand)]
    Approx(ApproxCommand),
    /// Matroid operations on `ground:` / `circuit:` files.
    #[command(subcommand)]
    Matroid(MatroidCommand),
    /// Fixture generators; print a matroid file.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Args, Debug)]
struct FileArg {
    /// Input file, or `-` for standard input.
    file: String,
}

#[derive(Args, Debug)]
struct SetArg {
    #[command(flatten)]
    input: FileArg,
    /// Comma-separated labels; empty for the empty set.
    #[arg(long, allow_hyphen_values = true)]
    set: String,
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    /// Connectedness via the induced covering.
    Connected(FileArg),
    /// Connected components.
    Components(FileArg),
    /// Print the covering induced by the edges.
    InduceCovering(FileArg),
    /// Print the vertex-edge incidence matrix.
    Incidence(FileArg),
    /// Rebuild a graph from an incidence matrix file.
    FromIncidence(FileArg),
    /// Chain of edge blocks joining two vertices.
    Witness {
        #[command(flatten)]
        input: FileArg,
        u: String,
        v: String,
    },
    /// Subgraph induced by a vertex set.
    Subgraph(SetArg),
}

#[derive(Subcommand, Debug)]
enum ApproxCommand {
    /// Upper approximation of a set.
    Upper(SetArg),
    /// Lower approximation of a set.
    Lower(SetArg),
    /// Smallest outer definable superset.
    Closure(SetArg),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Gamma,
    InducedGraph,
    CircuitCovering,
}

#[derive(Subcommand, Debug)]
enum MatroidCommand {
    /// Check the circuit axioms.
    Validate(FileArg),
    /// Connectedness by the chosen method.
    Connected {
        #[command(flatten)]
        input: FileArg,
        #[arg(long, value_enum, default_value_t = MethodArg::CircuitCovering)]
        method: MethodArg,
    },
    /// Print the graph induced by the circuits.
    InduceGraph(FileArg),
    /// Connected components of the induced graph.
    Components(FileArg),
    /// List loops.
    Loops(FileArg),
    /// Whether the circuits cover the ground set.
    Covers(FileArg),
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Cycle matroid of the graph in FILE.
    CycleMatroid(FileArg),
    /// Uniform matroid U(k, n).
    Uniform {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Unreadable input or malformed syntax.
    Input(String),
    /// Well-formed input that fails a requirement of the operation.
    Semantic(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::DuplicateLabel(_) | Error::UnknownLabel(_) | Error::BadParams(_) => {
                Failure::Input(e.to_string())
            }
            other => Failure::Semantic(other.to_string()),
        }
    }
}

/// Answer of one subcommand, rendered either as text or as `key=<json>` lines.
struct Report {
    command: &'static str,
    negative: bool,
    text: String,
    fields: Vec<(&'static str, Value)>,
    notes: Vec<String>,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            negative: false,
            text: String::new(),
            fields: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) -> &mut Self {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
        self
    }

    fn field(&mut self, key: &'static str, value: Value) -> &mut Self {
        self.fields.push((key, value));
        self
    }

    fn verdict(&mut self, key: &'static str, value: bool) -> &mut Self {
        self.negative = !value;
        self.field(key, Value::Bool(value))
    }

    fn no_oracle(&mut self, oracle: bool) {
        if oracle {
            self.notes.push("note: no oracle route for this subcommand; answered directly".into());
        }
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text.clone(),
            OutputFormat::Structured => {
                let mut out = format!("command={}\n", json!(self.command));
                for (k, v) in &self.fields {
                    writeln!(out, "{k}={v}").unwrap();
                }
                out
            }
        }
    }
}

/// Runs the CLI on `args` (including the program name). `stdin` is read when
/// the input file is `-`.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };

    match dispatch(&cli, stdin) {
        Ok(report) => Outcome {
            code: i32::from(report.negative),
            stdout: report.render(cli.format),
            stderr: report.notes.iter().map(|n| format!("{n}\n")).collect(),
        },
        Err(Failure::Input(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Semantic(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn read_input(arg: &FileArg, stdin: &mut dyn Read) -> Result<String, Failure> {
    if arg.file == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(&arg.file).map_err(|e| Failure::Input(format!("cannot read {}: {e}", arg.file)))
    }
}

fn label_list(u: &Universe, s: &Subset) -> Value {
    json!(u.labels_of(s).collect::<Vec<_>>())
}

fn set_list(u: &Universe, sets: &[Subset]) -> Value {
    Value::Array(sets.iter().map(|s| label_list(u, s)).collect())
}

fn graph_fields(r: &mut Report, g: &Graph) {
    r.field("vertices", json!(g.vertices().labels()));
    r.field("edges", json!(g.edge_labels().map(|(u, v)| [u, v]).collect::<Vec<_>>()));
}

fn matroid_fields(r: &mut Report, m: &CircuitFamily) {
    r.field("ground", json!(m.ground().labels()));
    r.field("circuits", set_list(m.ground(), m.circuits()));
}

fn partition_report(r: &mut Report, p: &Partition) {
    let u = p.universe();
    r.line(format!("components: {}", p.block_count()));
    for b in p.blocks() {
        r.line(u.format(b));
    }
    r.field("components", json!(p.block_count()));
    r.field("blocks", set_list(u, p.blocks()));
}

fn vertex(g: &Graph, label: &str) -> Result<usize, Failure> {
    g.vertices()
        .index_of(label)
        .ok_or_else(|| Failure::Input(format!("unknown vertex `{label}`")))
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Report, Failure> {
    match &cli.command {
        Command::Graph(cmd) => graph_command(cmd, cli.oracle, stdin),
        Command::Approx(cmd) => approx_command(cmd, cli.oracle, stdin),
        Command::Matroid(cmd) => matroid_command(cmd, cli.oracle, stdin),
        Command::Gen(cmd) => gen_command(cmd, cli.oracle, stdin),
    }
}

fn graph_command(cmd: &GraphCommand, oracle: bool, stdin: &mut dyn Read) -> Result<Report, Failure> {
    match cmd {
        GraphCommand::Connected(input) => {
            let g = parse_graph(&read_input(input, stdin)?)?;
            graph_connected(&g, oracle)
        }
        GraphCommand::Components(input) => {
            let g = parse_graph(&read_input(input, stdin)?)?;
            let mut r = Report::new("graph components");
            let partition = if oracle {
                r.field("method", json!("oracle path search"));
                components_by_paths(&g)?
            } else {
                r.field("method", json!("traversal"));
                g.connected_components_bfs()
            };
            partition_report(&mut r, &partition);
            Ok(r)
        }
        GraphCommand::InduceCovering(input) => {
            let g = parse_graph(&read_input(input, stdin)?)?;
            let c = g
                .induce_covering()
                .map_err(|e| Failure::Semantic(format!("F(G) is not a covering: {e}")))?;
            let mut r = Report::new("graph induce-covering");
            r.no_oracle(oracle);
            r.text = write_covering(&c);
            r.field("universe", json!(c.universe().labels()));
            r.field("blocks", set_list(c.universe(), c.blocks()));
            Ok(r)
        }
        GraphCommand::Incidence(input) => {
            let g = parse_graph(&read_input(input, stdin)?)?;
            let m = g.incidence_matrix();
            let mut r = Report::new("graph incidence");
            r.no_oracle(oracle);
            r.text = write_incidence(&m, g.vertices().labels());
            r.field("rows", json!(m.rows()));
            r.field("cols", json!(m.cols()));
            r.field("matrix", json!(m.entries()));
            r.field("labels", json!(g.vertices().labels()));
            Ok(r)
        }
        GraphCommand::FromIncidence(input) => {
            let (m, labels) = parse_incidence(&read_input(input, stdin)?)?;
            let g = graph_from_incidence(&m, &labels)?;
            let mut r = Report::new("graph from-incidence");
            r.no_oracle(oracle);
            r.text = write_graph(&g);
            graph_fields(&mut r, &g);
            Ok(r)
        }
        GraphCommand::Witness { input, u, v } => {
            let g = parse_graph(&read_input(input, stdin)?)?;
            let (ui, vi) = (vertex(&g, u)?, vertex(&g, v)?);
            let mut r = Report::new("graph witness");
            if oracle {
                let found = path_exists(&g, ui, vi)?;
                r.verdict("connected", found);
                r.field("method", json!("oracle path search"));
                r.line(format!("connected: {found} (oracle: path search from {u} to {v})"));
                return Ok(r);
            }
            match g.connection_witness(ui, vi)? {
                Some(chain) => {
                    let shown: Vec<String> = chain.iter().map(|b| g.vertices().format(b)).collect();
                    r.verdict("connected", true);
                    r.field("chain", set_list(g.vertices(), &chain));
                    r.line(format!("witness: [{}]", shown.join(", ")));
                }
                None => {
                    r.verdict("connected", false);
                    r.field("chain", Value::Null);
                    r.line(format!("witness: none ({u} is not connected to {v})"));
                }
            }
            Ok(r)
        }
        GraphCommand::Subgraph(arg) => {
            let g = parse_graph(&read_input(&arg.input, stdin)?)?;
            let k = g.vertices().parse_subset(&arg.set)?;
            let sub = g.vertex_induced_subgraph(&k)?;
            let mut r = Report::new("graph subgraph");
            r.no_oracle(oracle);
            r.text = write_graph(&sub);
            graph_fields(&mut r, &sub);
            Ok(r)
        }
    }
}

fn components_by_paths(g: &Graph) -> Result<Partition, Failure> {
    let n = g.vertex_count();
    let mut blocks: Vec<Subset> = Vec::new();
    for v in 0..n {
        let mut placed = false;
        for block in &mut blocks {
            let rep = block.first().expect("blocks are nonempty");
            if path_exists(g, rep, v)? {
                block.insert(v);
                placed = true;
                break;
            }
        }
        if !placed {
            blocks.push(Subset::singleton(n, v));
        }
    }
    Ok(Partition::new(g.vertices().clone(), blocks)?)
}

fn graph_connected(g: &Graph, oracle: bool) -> Result<Report, Failure> {
    let mut r = Report::new("graph connected");
    let u = g.vertices();
    let applicable = g.vertex_count() >= 2 && g.isolated_vertices().is_empty();

    if !applicable {
        let connected = g.connected_components_bfs().block_count() == 1;
        let reason = match g.is_connected_covering() {
            Err(Error::Inapplicable(reason)) => reason,
            Err(e) => return Err(e.into()),
            Ok(_) => unreachable!("covering method applies"),
        };
        r.verdict("connected", connected);
        r.field("method", json!("traversal"));
        r.field("note", json!(format!("covering method inapplicable: {reason}")));
        r.line(format!(
            "connected: {connected} (covering method inapplicable: {reason}; oracle used)"
        ));
        return Ok(r);
    }

    if oracle {
        if g.vertex_count() <= EXHAUSTIVE_LIMIT {
            let connected = is_connected_exhaustive(g)?;
            let sets = outer_definable_exhaustive(&g.induce_covering()?)?;
            r.verdict("connected", connected);
            r.field("method", json!("oracle exhaustive"));
            r.field("outer_definable", set_list(u, &sets));
            if connected {
                r.line("connected: true (oracle: exhaustive; outer definable sets: ∅, V)");
            } else {
                r.line(format!(
                    "connected: false (oracle: exhaustive; {} outer definable sets)",
                    sets.len()
                ));
            }
        } else {
            let connected = g.connected_components_bfs().block_count() == 1;
            r.verdict("connected", connected);
            r.field("method", json!("traversal"));
            r.line(format!("connected: {connected} (oracle: traversal; too large for exhaustive check)"));
        }
        return Ok(r);
    }

    let witness = g.outer_definable_witness()?;
    r.verdict("connected", witness.is_none());
    r.field("method", json!("covering"));
    match witness {
        None => {
            r.field("outer_definable_witness", Value::Null);
            r.line("connected: true (outer definable sets: ∅, V)");
        }
        Some(w) => {
            r.field("outer_definable_witness", label_list(u, &w));
            r.line(format!(
                "connected: false (outer definable set {} is nonempty and proper)",
                u.format(&w)
            ));
        }
    }
    Ok(r)
}

fn approx_command(cmd: &ApproxCommand, oracle: bool, stdin: &mut dyn Read) -> Result<Report, Failure> {
    let (arg, name, command) = match cmd {
        ApproxCommand::Upper(a) => (a, "upper", "approx upper"),
        ApproxCommand::Lower(a) => (a, "lower", "approx lower"),
        ApproxCommand::Closure(a) => (a, "closure", "approx closure"),
    };
    let c: Covering = parse_covering(&read_input(&arg.input, stdin)?)?;
    let u = c.universe();
    let x = u.parse_subset(&arg.set)?;
    let mut r = Report::new(command);
    let mut suffix = String::new();
    let result = match cmd {
        ApproxCommand::Upper(_) => {
            r.no_oracle(oracle);
            c.upper(&x)?
        }
        ApproxCommand::Lower(_) => {
            r.no_oracle(oracle);
            c.lower(&x)?
        }
        ApproxCommand::Closure(_) if oracle => {
            // least outer definable superset
            let sets = outer_definable_exhaustive(&c)?;
            suffix = " (oracle: exhaustive)".into();
            sets.into_iter()
                .filter(|s| x.is_subset(s))
                .min_by_key(Subset::len)
                .expect("the universe is outer definable")
        }
        ApproxCommand::Closure(_) => c.closure_upper(&x)?,
    };
    r.field("input", label_list(u, &x));
    r.field("result", label_list(u, &result));
    r.field("outer_definable", json!(c.is_outer_definable(&result)?));
    r.line(format!("{name}({}) = {}{suffix}", u.format(&x), u.format(&result)));
    Ok(r)
}

fn load_matroid(input: &FileArg, stdin: &mut dyn Read) -> Result<(Universe, CircuitValidation), Failure> {
    let (ground, circuits) = parse_matroid(&read_input(input, stdin)?)?;
    let validation = validate_circuits(ground.clone(), circuits)?;
    Ok((ground, validation))
}

fn validated(input: &FileArg, stdin: &mut dyn Read) -> Result<CircuitFamily, Failure> {
    let (ground, validation) = load_matroid(input, stdin)?;
    if validation.is_ok() {
        return Ok(validation.family().expect("validated"));
    }
    let mut msg = String::from("not a circuit family");
    for v in validation.violations() {
        write!(msg, "\n  {}", v.describe(&ground)).unwrap();
    }
    Err(Failure::Semantic(msg))
}

fn matroid_command(cmd: &MatroidCommand, oracle: bool, stdin: &mut dyn Read) -> Result<Report, Failure> {
    match cmd {
        MatroidCommand::Validate(input) => {
            let (ground, validation) = load_matroid(input, stdin)?;
            let mut r = Report::new("matroid validate");
            r.line(validation.summary());
            for v in validation.violations() {
                r.line(v.describe(&ground));
            }
            r.verdict("valid", validation.is_ok());
            r.field(
                "violations",
                json!(validation.violations().iter().map(|v| v.describe(&ground)).collect::<Vec<_>>()),
            );
            if oracle {
                if let Some(m) = validation.family() {
                    let strong = m.check_strong_elimination();
                    r.line(format!("strong elimination: {}", if strong { "ok" } else { "violated" }));
                    r.field("strong_elimination", json!(strong));
                    if !strong {
                        r.negative = true;
                    }
                }
            }
            Ok(r)
        }
        MatroidCommand::Connected { input, method } => {
            let m = validated(input, stdin)?;
            matroid_connected(&m, *method, oracle)
        }
        MatroidCommand::InduceGraph(input) => {
            let m = validated(input, stdin)?;
            let g = m.induce_graph();
            let mut r = Report::new("matroid induce-graph");
            r.no_oracle(oracle);
            r.text = write_graph(&g);
            graph_fields(&mut r, &g);
            Ok(r)
        }
        MatroidCommand::Components(input) => {
            let m = validated(input, stdin)?;
            let mut r = Report::new("matroid components");
            let partition = if oracle {
                r.field("method", json!("oracle components of G(M)"));
                m.induce_graph().connected_components_bfs()
            } else {
                r.field("method", json!("gamma"));
                m.gamma_components()
            };
            partition_report(&mut r, &partition);
            Ok(r)
        }
        MatroidCommand::Loops(input) => {
            let m = validated(input, stdin)?;
            let loops = m.loops();
            let mut r = Report::new("matroid loops");
            r.no_oracle(oracle);
            r.line(format!("loops: {}", m.ground().format(&loops)));
            r.field("loops", label_list(m.ground(), &loops));
            Ok(r)
        }
        MatroidCommand::Covers(input) => {
            let m = validated(input, stdin)?;
            let mut r = Report::new("matroid covers");
            let covers = if oracle {
                (0..m.ground().len()).all(|e| m.circuits().iter().any(|c| c.contains(e))) && !m.ground().is_empty()
            } else {
                m.circuits_cover()
            };
            let uncovered = m.circuit_union().complement();
            r.verdict("covers", covers);
            r.field("uncovered", label_list(m.ground(), &uncovered));
            if covers {
                r.line("covers: true");
            } else {
                r.line(format!("covers: false ({} uncovered)", m.ground().format(&uncovered)));
            }
            Ok(r)
        }
    }
}

fn matroid_connected(m: &CircuitFamily, method: MethodArg, oracle: bool) -> Result<Report, Failure> {
    let mut r = Report::new("matroid connected");
    let ground = m.ground();
    if oracle {
        let classes = m.gamma_components();
        let connected = m.is_connected(Method::Gamma)?;
        r.verdict("connected", connected);
        r.field("method", json!("oracle gamma"));
        r.field("classes", set_list(ground, classes.blocks()));
        r.line(format!("connected: {connected} (oracle: {} γ classes)", classes.block_count()));
        return Ok(r);
    }
    match method {
        MethodArg::Gamma => {
            let classes = m.gamma_components();
            let connected = m.is_connected(Method::Gamma)?;
            r.verdict("connected", connected);
            r.field("method", json!("gamma"));
            r.field("classes", set_list(ground, classes.blocks()));
            r.line(format!("connected: {connected} ({} γ classes)", classes.block_count()));
        }
        MethodArg::InducedGraph => {
            let connected = m.is_connected(Method::InducedGraph)?;
            let g = m.induce_graph();
            let isolated = Subset::from_indices(ground.len(), g.isolated_vertices());
            r.verdict("connected", connected);
            r.field("method", json!("induced graph"));
            r.field("isolated", label_list(ground, &isolated));
            let detail = if ground.len() == 1 {
                "single element".to_string()
            } else if !isolated.is_empty() {
                format!("G(M) has isolated vertices {}", ground.format(&isolated))
            } else if connected {
                "G(M) is connected".to_string()
            } else {
                "G(M) is disconnected".to_string()
            };
            r.line(format!("connected: {connected} ({detail})"));
        }
        MethodArg::CircuitCovering => {
            let step = m.three_step()?;
            let connected = step.connected();
            r.verdict("connected", connected);
            r.field("method", json!("circuit covering"));
            let detail = match &step {
                StepVerdict::SingleElement => {
                    r.field("step", json!(0));
                    "single element".to_string()
                }
                StepVerdict::Loops(loops) => {
                    r.field("step", json!(1));
                    r.field("loops", label_list(ground, loops));
                    let noun = if loops.len() == 1 { "loop" } else { "loops" };
                    format!("step 1: {noun} {}", ground.format(loops))
                }
                StepVerdict::Uncovered(missing) => {
                    r.field("step", json!(2));
                    r.field("uncovered", label_list(ground, missing));
                    format!("step 2: {} in no circuit", ground.format(missing))
                }
                StepVerdict::Closure { element, closure } => {
                    r.field("step", json!(3));
                    r.field("upper", label_list(ground, closure));
                    let lhs = format!("upper({{{}}})", ground.label(*element));
                    if closure.is_full() {
                        format!("step 3: {lhs} = U(M)")
                    } else {
                        format!("step 3: {lhs} = {}", ground.format(closure))
                    }
                }
            };
            r.line(format!("connected: {connected} ({detail})"));
        }
    }
    Ok(r)
}

fn gen_command(cmd: &GenCommand, oracle: bool, stdin: &mut dyn Read) -> Result<Report, Failure> {
    let (command, m) = match cmd {
        GenCommand::CycleMatroid(input) => {
            let g = parse_graph(&read_input(input, stdin)?)?;
            ("gen cycle-matroid", cycle_matroid(&g)?)
        }
        GenCommand::Uniform { k, n } => ("gen uniform", uniform_matroid(*k, *n)?),
    };
    let mut r = Report::new(command);
    r.no_oracle(oracle);
    r.text = write_matroid(&m);
    matroid_fields(&mut r, &m);
    Ok(r)
}
