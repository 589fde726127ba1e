//! The `rees` command line: parse an input file, run one computation, and
//! emit a single JSON report (command, options, canonical input, results,
//! certificates, budget use).
//!
//! Exit codes: 0 success, 1 internal inconsistency, 2 bad input or violated
//! precondition, 3 budget or degree cap exhausted (report marked partial).

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::arith::format_rat;
use crate::budget::{Budget, DEFAULT_CYCLES, DEFAULT_POINTS, DEFAULT_SUBSPACES};
use crate::clutter::Graph;
use crate::closure::{closure_report, is_normal, Failure, Method};
use crate::codes::{gmd_and_vasconcelos, v_number_monomial, v_number_points, weight_report, w2_test, PointSetOverFq};
use crate::error::{Error, Result};
use crate::graphs;
use crate::invariants;
use crate::io::{graph_to_text, parse_graph, parse_ideal, parse_point_set, point_set_to_text};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::symbolic;

#[derive(Parser, Debug)]
#[command(name = "rees", version, about = "Exact computations on monomial ideals, edge rings and evaluation codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, default_value_t = DEFAULT_POINTS, help = "Lattice points and candidate monomials")]
    budget_points: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_CYCLES, help = "Induced cycles enumerated")]
    budget_cycles: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSPACES, help = "Codewords and subcodes visited")]
    budget_subspaces: u64,
    #[arg(long, global = true, help = "Largest power or degree examined (command-specific default)")]
    degree_cap: Option<u32>,
    #[arg(long, global = true, default_value = "both", value_parser = ["hilbert", "powers", "both"])]
    method: String,
    #[arg(long, global = true, help = "Write the JSON report here and a summary to stdout")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normality of a monomial ideal.
    Normality { input: PathBuf },
    /// Integral closures of powers and the normalization index.
    Closure { input: PathBuf },
    /// Symbolic powers, Simis test and symbolic Rees algebra generators.
    Symbolic { input: PathBuf },
    /// ic-resurgence of a squarefree ideal with its vertex pair.
    Resurgence { input: PathBuf },
    /// Containment table f(r) = min{n : I^(n) ⊆ I^r}.
    Containment {
        input: PathBuf,
        /// Inclusive range a..b or a single value.
        #[arg(long, default_value = "1..6")]
        r: String,
    },
    /// Cycles, normality, Ehrhart criterion, CM and W₂ tests of a graph.
    GraphAnalyze {
        input: PathBuf,
        /// Accept loops, read as odd cycles of length one.
        #[arg(long)]
        multigraph: bool,
    },
    /// Multiplicity and subring regularity where they apply.
    Invariants { input: PathBuf },
    /// m-fullness of a zero-dimensional ideal in two variables.
    Mfull { input: PathBuf },
    /// Whether the generators define a monomial Cremona map.
    Cremona { input: PathBuf },
    /// Weights of the evaluation codes on a point set.
    CodeWeights {
        input: PathBuf,
        /// Largest r for δ_X(d, r).
        #[arg(long, default_value_t = 2)]
        max_r: usize,
    },
    /// v-number of a monomial ideal, or of I(X) with --points.
    Vnumber {
        input: PathBuf,
        #[arg(long)]
        points: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Normality { .. } => "normality",
            Command::Closure { .. } => "closure",
            Command::Symbolic { .. } => "symbolic",
            Command::Resurgence { .. } => "resurgence",
            Command::Containment { .. } => "containment",
            Command::GraphAnalyze { .. } => "graph-analyze",
            Command::Invariants { .. } => "invariants",
            Command::Mfull { .. } => "mfull",
            Command::Cremona { .. } => "cremona",
            Command::CodeWeights { .. } => "code-weights",
            Command::Vnumber { .. } => "vnumber",
        }
    }

    fn input(&self) -> &PathBuf {
        match self {
            Command::Normality { input }
            | Command::Closure { input }
            | Command::Symbolic { input }
            | Command::Resurgence { input }
            | Command::Containment { input, .. }
            | Command::GraphAnalyze { input, .. }
            | Command::Invariants { input }
            | Command::Mfull { input }
            | Command::Cremona { input }
            | Command::CodeWeights { input, .. }
            | Command::Vnumber { input, .. } => input,
        }
    }
}

/// What a run produced; `main` prints the two streams and exits with `code`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Default)]
struct Report {
    results: Map<String, Value>,
    certificates: Map<String, Value>,
    skipped: Map<String, Value>,
}

impl Report {
    fn result(&mut self, key: &str, v: impl Into<Value>) {
        self.results.insert(key.to_string(), v.into());
    }

    fn certificate(&mut self, key: &str, v: impl Into<Value>) {
        self.certificates.insert(key.to_string(), v.into());
    }

    /// Runs an optional step; a violated precondition is recorded as a skip.
    fn optional<T>(&mut self, key: &str, step: impl FnOnce() -> Result<T>) -> Result<Option<T>> {
        match step() {
            Ok(v) => Ok(Some(v)),
            Err(Error::Precondition(m)) => {
                self.skipped.insert(key.to_string(), Value::String(m));
                Ok(None)
            }
            Err(Error::NotSquarefree) => {
                self.skipped.insert(key.to_string(), Value::String("the ideal is not squarefree".into()));
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }
}

fn vector(a: &ExponentVector) -> Value {
    Value::String(a.to_string())
}

fn generators(i: &MonomialIdeal) -> Value {
    Value::Array(i.generators().iter().map(vector).collect())
}

fn graded(list: &[(ExponentVector, u32)]) -> Value {
    Value::Array(list.iter().map(|(a, n)| json!({"exponents": a.to_string(), "degree": n})).collect())
}

fn failure(f: &Option<Failure>) -> Value {
    match f {
        None => Value::Null,
        Some(f) => json!({"power": f.power, "witness": f.witness.to_string()}),
    }
}

fn one_based(vs: &[usize]) -> Value {
    Value::Array(vs.iter().map(|v| json!(v + 1)).collect())
}

fn parse_range(text: &str) -> Result<(u32, u32)> {
    let bad = || Error::Precondition(format!("--r expects a..b or a single value, got {text:?}"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (text.trim(), text.trim()),
    };
    let a: u32 = a.parse().map_err(|_| bad())?;
    let b: u32 = b.parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

enum Input {
    Ideal(MonomialIdeal),
    Graph(Graph),
    Points(PointSetOverFq),
}

impl Input {
    fn canonical(&self) -> Value {
        match self {
            Input::Ideal(i) => json!({"format": "ideal", "text": i.to_text()}),
            Input::Graph(g) => json!({"format": "graph", "multigraph": g.is_multigraph(), "text": graph_to_text(g)}),
            Input::Points(x) => json!({
                "format": "points",
                "text": point_set_to_text(x),
                "rescaled_points": x.rescaled(),
            }),
        }
    }

    fn ideal(&self) -> &MonomialIdeal {
        match self {
            Input::Ideal(i) => i,
            _ => unreachable!("ideal commands read ideals"),
        }
    }
}

fn read_input(cmd: &Command) -> Result<Input> {
    let path = cmd.input();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    Ok(match cmd {
        Command::GraphAnalyze { multigraph, .. } => Input::Graph(parse_graph(&text, *multigraph)?),
        Command::CodeWeights { .. } | Command::Vnumber { points: true, .. } => Input::Points(parse_point_set(&text)?),
        _ => Input::Ideal(parse_ideal(&text)?),
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } | Error::CapExceeded(_) => 3,
        Error::Inconsistent(_) | Error::Unbounded | Error::Infeasible => 1,
        _ => 2,
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let input = match read_input(&cli.command) {
        Ok(i) => i,
        Err(e) => return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let budget = Budget::new(cli.budget_points, cli.budget_cycles, cli.budget_subspaces);
    let mut report = Report::default();
    let status = dispatch(&cli, &input, &budget, &mut report);
    let (code, error) = match &status {
        Ok(()) => (0, None),
        Err(e) => (exit_code(e), Some(e.to_string())),
    };
    if code == 1 || code == 2 {
        return Outcome { code, stdout: String::new(), stderr: format!("error: {}\n", error.unwrap_or_default()) };
    }
    let doc = json!({
        "command": cli.command.name(),
        "options": options(&cli),
        "input": input.canonical(),
        "results": Value::Object(report.results.clone()),
        "certificates": Value::Object(report.certificates),
        "skipped": Value::Object(report.skipped),
        "budgets": {
            "points": {"limit": budget.points, "used": budget.used_points()},
            "cycles": {"limit": budget.cycles, "used": budget.used_cycles()},
            "subspaces": {"limit": budget.subspaces, "used": budget.used_subspaces()},
        },
        "partial": code == 3,
        "error": error,
    });
    let text = serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n";
    let summary = summarize(cli.command.name(), &report.results, code == 3);
    match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { code, stdout: summary, stderr: String::new() },
            Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: cannot write {}: {e}\n", path.display()) },
        },
        None => Outcome { code, stdout: text, stderr: summary },
    }
}

fn options(cli: &Cli) -> Value {
    let mut o = json!({
        "budget_points": cli.budget_points,
        "budget_cycles": cli.budget_cycles,
        "budget_subspaces": cli.budget_subspaces,
        "degree_cap": cli.degree_cap,
        "method": cli.method,
    });
    let extra = match &cli.command {
        Command::Containment { r, .. } => Some(("r", json!(r))),
        Command::GraphAnalyze { multigraph, .. } => Some(("multigraph", json!(multigraph))),
        Command::CodeWeights { max_r, .. } => Some(("max_r", json!(max_r))),
        Command::Vnumber { points, .. } => Some(("points", json!(points))),
        _ => None,
    };
    if let Some((k, v)) = extra {
        o[k] = v;
    }
    o
}

fn summarize(name: &str, results: &Map<String, Value>, partial: bool) -> String {
    let mut out = format!("{name}{}\n", if partial { " (partial)" } else { "" });
    for (k, v) in results {
        match v {
            Value::Bool(_) | Value::Number(_) | Value::String(_) | Value::Null => {
                out.push_str(&format!("  {k}: {v}\n"));
            }
            _ => {}
        }
    }
    out
}

fn dispatch(cli: &Cli, input: &Input, budget: &Budget, rep: &mut Report) -> Result<()> {
    let method: Method = cli.method.parse()?;
    match &cli.command {
        Command::Normality { .. } => normality(input.ideal(), method, budget, rep),
        Command::Closure { .. } => closure(input.ideal(), cli.degree_cap, method, budget, rep),
        Command::Symbolic { .. } => symbolic_cmd(input.ideal(), cli.degree_cap, budget, rep),
        Command::Resurgence { .. } => resurgence(input.ideal(), budget, rep),
        Command::Containment { r, .. } => containment(input.ideal(), r, budget, rep),
        Command::GraphAnalyze { .. } => match input {
            Input::Graph(g) => graph_analyze(g, budget, rep),
            _ => unreachable!(),
        },
        Command::Invariants { .. } => invariants_cmd(input.ideal(), cli.degree_cap, budget, rep),
        Command::Mfull { .. } => {
            let i = input.ideal();
            rep.result("m_full", invariants::is_m_full_2var(i)?);
            let (a, b) = invariants::staircase_sequences(i)?;
            rep.certificate("a", json!(a));
            rep.certificate("b", json!(b));
            Ok(())
        }
        Command::Cremona { .. } => {
            let i = input.ideal();
            rep.result("cremona", invariants::is_cremona_monomial(i.generators())?);
            rep.result("degree", i.generators()[0].degree());
            Ok(())
        }
        Command::CodeWeights { max_r, .. } => match input {
            Input::Points(x) => code_weights(x, *max_r, budget, rep),
            _ => unreachable!(),
        },
        Command::Vnumber { .. } => match input {
            Input::Points(x) => {
                let v = v_number_points(x)?;
                rep.result("v_number", v.v);
                rep.certificate("separated_point", v.point + 1);
                Ok(())
            }
            Input::Ideal(i) => {
                let cap = cli.degree_cap.unwrap_or_else(|| i.max_exponents().iter().sum());
                let v = v_number_monomial(i, cap, budget)?;
                rep.result("v_number", v.v);
                rep.certificate("witness", vector(&v.witness));
                rep.certificate("prime", one_based(&v.prime));
                Ok(())
            }
            Input::Graph(_) => unreachable!(),
        },
    }
}

fn normality(i: &MonomialIdeal, method: Method, budget: &Budget, rep: &mut Report) -> Result<()> {
    let v = is_normal(i, method, budget)?;
    rep.result("normal", v.normal);
    rep.result("method", serde_json::to_value(v.method).expect("enum"));
    rep.result("timed_out", serde_json::to_value(v.timed_out).expect("enum"));
    rep.certificate("failure", failure(&v.failure));
    rep.certificate("extra_hilbert_basis", graded(&v.extra_hilbert_basis));
    Ok(())
}

fn closure(i: &MonomialIdeal, cap: Option<u32>, method: Method, budget: &Budget, rep: &mut Report) -> Result<()> {
    let top = cap.unwrap_or((i.nvars() as u32).saturating_sub(1).max(1));
    let r = closure_report(i, top, method, budget)?;
    let mut rows = Vec::new();
    for (n, c) in &r.closures {
        let power = i.power(*n)?;
        rows.push(json!({"n": n, "generators": generators(c), "equals_power": &power == c}));
    }
    rep.result("normal", r.verdict.normal);
    rep.result("normalization_index", r.normalization.index);
    rep.result("dimension_bound", r.normalization.dimension_bound);
    rep.result("hyperplane_bound", r.normalization.hyperplane_bound);
    rep.result("closures", rows);
    rep.certificate("failure", failure(&r.verdict.failure));
    rep.certificate("extra_hilbert_basis", graded(&r.verdict.extra_hilbert_basis));
    Ok(())
}

fn symbolic_cmd(i: &MonomialIdeal, cap: Option<u32>, budget: &Budget, rep: &mut Report) -> Result<()> {
    let top = cap.unwrap_or(3);
    let mut cache = symbolic::SymbolicPowerCache::new(i, budget)?;
    let mut rows = Vec::new();
    for n in 1..=top {
        let sym = cache.get(n, budget)?.clone();
        let power = i.power(n)?;
        rows.push(json!({"n": n, "generators": generators(&sym), "equals_power": sym == power}));
        rep.result("symbolic_powers", rows.clone());
    }
    rep.result("q_integral", symbolic::covering_polyhedron_integral(i)?);
    rep.result("simis", symbolic::is_simis(i, budget)?);
    rep.certificate("symbolic_rees_generators", graded(&symbolic::symbolic_rees_generators(i, budget)?));
    Ok(())
}

fn resurgence(i: &MonomialIdeal, budget: &Budget, rep: &mut Report) -> Result<()> {
    let r = symbolic::ic_resurgence(i, budget)?;
    rep.result("rho_ic", format_rat(&r.rho_ic));
    rep.result("ceiling", r.ceiling);
    rep.result("q_integral", r.q_integral);
    rep.result("dual_q_integral", r.dual_q_integral);
    let pair = serde_json::to_value(&r).expect("report serializes");
    rep.certificate("u", pair["u"].clone());
    rep.certificate("v", pair["v"].clone());
    Ok(())
}

fn containment(i: &MonomialIdeal, range: &str, budget: &Budget, rep: &mut Report) -> Result<()> {
    let (a, b) = parse_range(range)?;
    let mut table = Vec::new();
    for r in a..=b {
        let f = symbolic::containment_function(i, r, budget)?;
        table.push(json!({"r": r, "f": f}));
        rep.result("table", table.clone());
    }
    rep.result("resurgence_one", symbolic::resurgence_one_test(i, budget)?);
    Ok(())
}

fn cycle_json(c: &graphs::CycleRecord) -> Value {
    one_based(&c.vertices)
}

fn graph_analyze(g: &Graph, budget: &Budget, rep: &mut Report) -> Result<()> {
    rep.result("vertices", g.nvars());
    rep.result("edges", g.edges().len());
    rep.result("connected", g.is_connected());
    rep.result("bipartite", g.is_bipartite());
    rep.result("odd_girth", graphs::odd_girth(g));
    rep.result("simis_failure_degree", graphs::simis_failure_degree(g));
    let cycles = graphs::induced_odd_cycles(g, budget)?;
    rep.result("induced_odd_cycles", cycles.len());
    rep.certificate("induced_odd_cycles", Value::Array(cycles.iter().map(cycle_json).collect()));
    let hochster = graphs::hochster_configurations(g, budget)?;
    rep.result("edge_ideal_normal", hochster.is_empty());
    rep.certificate(
        "hochster_configurations",
        Value::Array(
            hochster
                .iter()
                .map(|h| {
                    let (m, z) = h.monomial(g.nvars());
                    json!({"first": cycle_json(&h.first), "second": cycle_json(&h.second),
                           "exponents": m.to_string(), "degree": z})
                })
                .collect(),
        ),
    );
    if let Some(normal) = rep.optional("edge_subring_normal", || graphs::edge_subring_normal(g, budget))? {
        rep.result("edge_subring_normal", normal);
        let bows = graphs::bowties(g, budget)?;
        rep.certificate(
            "bowties",
            Value::Array(
                bows.iter()
                    .map(|b| {
                        json!({"first": cycle_json(&b.first), "second": cycle_json(&b.second),
                               "path": one_based(&b.path), "exponents": b.monomial(g.nvars()).to_string()})
                    })
                    .collect(),
            ),
        );
    }
    if let Some(c) = rep.optional("ehrhart_criterion", || graphs::ehrhart_normality_criterion(g, budget))? {
        rep.result("ehrhart_ring_equal", c.ehrhart_ring_equal);
        rep.certificate("ehrhart_criterion", serde_json::to_value(&c).expect("report serializes"));
    }
    if let Some(cm) = rep.optional("cohen_macaulay", || graphs::cm_bipartite(g, budget))? {
        rep.result("unmixed", graphs::unmixed_bipartite_check(g, budget)?);
        rep.result("cohen_macaulay", cm);
    }
    if let Some(w) = rep.optional("w2", || w2_test(g, budget))? {
        rep.result("w2", w.in_w2);
        rep.result("v_number", w.v_number.v);
        rep.certificate("v_number_witness", vector(&w.v_number.witness));
        rep.certificate("v_number_prime", one_based(&w.v_number.prime));
    }
    Ok(())
}

fn invariants_cmd(i: &MonomialIdeal, cap: Option<u32>, budget: &Budget, rep: &mut Report) -> Result<()> {
    let mut ran = false;
    if let Some(region) = rep.optional("multiplicity", || invariants::multiplicity_region(i))? {
        let e = invariants::multiplicity(i, budget)?;
        rep.result("multiplicity", e.to_string());
        rep.certificate("multiplicity_region", serde_json::to_value(&region).expect("report serializes"));
        let top = cap.unwrap_or(3);
        let hf: Vec<u64> = (0..=top)
            .map(|n| invariants::normalization_hilbert_function(i, n, budget))
            .collect::<Result<_>>()?;
        rep.result("normalization_hilbert_function", hf);
        ran = true;
    }
    if let Some(r) = rep.optional("subring_regularity", || invariants::subring_regularity(i, budget))? {
        rep.result("subring_regularity", r.regularity);
        rep.result("a_invariant", r.a_invariant);
        rep.result("subring_dimension", r.dimension);
        rep.certificate("h_vector", serde_json::to_value(&r).expect("report serializes")["h_vector"].clone());
        ran = true;
    }
    if !ran {
        return Err(Error::Precondition("no invariant applies to this ideal".into()));
    }
    Ok(())
}

fn code_weights(x: &PointSetOverFq, max_r: usize, budget: &Budget, rep: &mut Report) -> Result<()> {
    let w = weight_report(x, max_r, budget)?;
    rep.result("length", w.length);
    rep.result("v_number", w.v_number);
    rep.result("regularity_threshold", w.regularity_threshold);
    let mut rows = Vec::new();
    for d in &w.degrees {
        let mut gmd = Vec::new();
        for (k, &weight) in d.weights.iter().enumerate() {
            // Form enumeration is attempted on a fresh counter and reported as
            // not run when it would exceed the subspace budget.
            match budget.scoped(|b| gmd_and_vasconcelos(x, d.degree, k + 1, b)) {
                Ok(g) => {
                    if g.gmd != weight || g.vasconcelos != weight {
                        return Err(Error::Inconsistent(format!(
                            "degree {} r {}: weight {weight}, δ_I {}, ϑ_I {}",
                            d.degree,
                            k + 1,
                            g.gmd,
                            g.vasconcelos
                        )));
                    }
                    gmd.push(json!({"r": k + 1, "gmd": g.gmd, "vasconcelos": g.vasconcelos}));
                }
                Err(Error::Budget { .. }) => gmd.push(json!({"r": k + 1, "gmd": null, "vasconcelos": null})),
                Err(e) => return Err(e),
            }
        }
        rows.push(json!({"degree": d.degree, "dimension": d.dimension, "weights": d.weights, "forms": gmd}));
    }
    rep.result("degrees", rows);
    let v = v_number_points(x)?;
    rep.certificate("separated_point", v.point + 1);
    Ok(())
}
