use std::path::Path;

use sepdp::classes::{self, ArcModel};
use sepdp::decomposition::enumerate_pmcs;
use sepdp::dp_connected::{
    solve_connected_on, solve_max_induced_tw_connected, ConnectedOptions, GraphClass,
};
use sepdp::dp_treewidth::fill_table;
use sepdp::minsep::{enumerate_minimal_separators_capped, verify_odd_power_separators};
use sepdp::oracle::{self, PmcMethod, Problem};
use sepdp::reductions::{
    correspondence_at, correspondence_optima, distance_d_independent_set, red_blue_to_cvc,
    verify_reduction_separator_bound, CORRESPONDENCE_LIMIT,
};
use sepdp::{Budget, Decomposition, Error, Graph, VertexSet};

use crate::error::CliError;
use crate::input::{self, LabelledGraph};
use crate::report::RunReport;
use crate::{ClassArg, Cli, Command, GenCommand, OracleProblem, SolveCommand, VerifyCommand};

pub enum Output {
    Report(RunReport),
    /// Generated artefacts go to stdout verbatim.
    Raw(String),
}

struct Input {
    bytes: Vec<u8>,
    text: String,
}

fn read(path: &Path) -> Result<Input, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Input(format!("{} is not UTF-8", path.display())))?;
    Ok(Input { bytes, text })
}

/// An edge list, or an arc-model JSON file (vertices named by arc index).
fn load_graph(input: &Input) -> Result<(LabelledGraph, Option<ArcModel>), CliError> {
    if input::looks_like_json(&input.text) {
        let model = input::parse_arc_model(&input.text)?;
        let graph = classes::graph_from_arc_model(&model)?;
        Ok((LabelledGraph::numbered(graph), Some(model)))
    } else {
        Ok((input::parse_edge_list(&input.text)?, None))
    }
}

fn input_error(e: Error) -> CliError {
    match e {
        Error::InvalidParameter(msg) | Error::InvalidArcModel(msg) => CliError::Input(msg),
        other => CliError::Solver(other),
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let budget = Budget {
        max_separators: cli.opts.max_seps,
        max_pmcs: cli.opts.max_pmcs,
    };
    let threads = cli.opts.threads.max(1);
    match &cli.command {
        Command::Seps { file, list } => enumerate(file, *list, false, &budget),
        Command::Pmcs { file, list } => enumerate(file, *list, true, &budget),
        Command::Solve(cmd) => solve(cmd, &budget, threads),
        Command::Verify(VerifyCommand::Theorem1 { k, file }) => verify_power(file, *k, &budget),
        Command::Verify(VerifyCommand::AppendixLemma { file }) => verify_reduction(file, &budget),
        Command::Gen(cmd) => generate(cmd),
        Command::Oracle {
            problem,
            file,
            t,
            d,
        } => run_oracle(*problem, file, *t, *d),
    }
    .map(|o| match o {
        Output::Report(mut r) => {
            if cli.opts.max_seps.is_some() || cli.opts.max_pmcs.is_some() {
                r.param("max_seps", fmt_opt(cli.opts.max_seps));
                r.param("max_pmcs", fmt_opt(cli.opts.max_pmcs));
            }
            Output::Report(r)
        }
        raw => raw,
    })
}

fn fmt_opt(v: Option<usize>) -> String {
    v.map_or_else(|| "default".into(), |v| v.to_string())
}

fn listing(g: &LabelledGraph, sets: &[VertexSet]) -> Vec<Vec<String>> {
    sets.iter().map(|s| g.names(s)).collect()
}

fn enumerate(file: &Path, list: bool, pmcs: bool, budget: &Budget) -> Result<Output, CliError> {
    let input = read(file)?;
    let (g, _) = load_graph(&input)?;
    let seps = enumerate_minimal_separators_capped(&g.graph, budget.separators(g.graph.n()))?;
    let mut report = RunReport::new(if pmcs { "pmcs" } else { "seps" }, Some(&input.bytes));
    report.counts.separators = Some(seps.len());
    if pmcs {
        let found = enumerate_pmcs(&g.graph, &seps, budget)?;
        report.counts.pmcs = Some(found.len());
        report.result_size = Some(found.len());
        if list {
            report.sets = listing(&g, &found);
        }
    } else {
        report.result_size = Some(seps.len());
        if list {
            report.sets = listing(&g, seps.as_slice());
        }
    }
    Ok(Output::Report(report))
}

fn is_forest(g: &Graph, set: &VertexSet) -> bool {
    let (h, _) = g.induced(set);
    h.edge_count() + h.components(&VertexSet::new()).len() == h.n()
}

fn check_treewidth(report: &mut RunReport, g: &Graph, t: usize, set: &VertexSet) {
    match t {
        0 => report.check("independent", g.is_independent(set), ""),
        1 => report.check("induced forest", is_forest(g, set), ""),
        _ => match oracle::treewidth(g, set) {
            Ok(tw) => report.check("treewidth", tw <= t, format!("treewidth {tw}")),
            Err(_) => report.check(
                "treewidth",
                true,
                "skipped: witness too large for exact check",
            ),
        },
    };
}

fn solve(cmd: &SolveCommand, budget: &Budget, threads: usize) -> Result<Output, CliError> {
    match cmd {
        SolveCommand::TwSubgraph { t, file } => {
            solve_tw("solve tw-subgraph", file, *t, budget, threads)
        }
        SolveCommand::Mis { file } => solve_tw("solve mis", file, 0, budget, threads),
        SolveCommand::Mif { file } => solve_tw("solve mif", file, 1, budget, threads),
        SolveCommand::Cvc { class, file } => {
            solve_cover("solve cvc", file, *class, 0, budget, threads)
        }
        SolveCommand::Cfvs { class, file } => {
            solve_cover("solve cfvs", file, *class, 1, budget, threads)
        }
        SolveCommand::DistIs { d, file } => solve_distance(file, *d, budget),
    }
}

fn solve_tw(
    command: &str,
    file: &Path,
    t: usize,
    budget: &Budget,
    threads: usize,
) -> Result<Output, CliError> {
    let input = read(file)?;
    let (g, _) = load_graph(&input)?;
    let mut report = RunReport::new(command, Some(&input.bytes));
    report.param("t", t).param("threads", threads);
    let dec = Decomposition::build(&g.graph, budget)?;
    let table = fill_table(&dec, t, threads)?;
    let size = table.optimum();
    let set = table.reconstruct();
    report.counts.separators = Some(dec.separators.len());
    report.counts.pmcs = Some(dec.pmcs.len());
    report.counts.table_entries = Some(table.len());
    report.result_size = Some(size);
    report.witness = Some(g.names(&set));
    report.check(
        "witness size",
        set.len() == size,
        format!("{} vertices", set.len()),
    );
    check_treewidth(&mut report, &g.graph, t, &set);
    Ok(Output::Report(report))
}

fn solve_cover(
    command: &str,
    file: &Path,
    class: ClassArg,
    t: usize,
    budget: &Budget,
    threads: usize,
) -> Result<Output, CliError> {
    let input = read(file)?;
    let (g, model) = load_graph(&input)?;
    let graph = &g.graph;
    let class = match (class, model) {
        (ClassArg::Chordal, _) => GraphClass::Chordal,
        (ClassArg::CircularArc, Some(model)) => GraphClass::CircularArc(model),
        (ClassArg::CircularArc, None) => {
            return Err(CliError::Input(
                "--class circular-arc needs an arc-model JSON file".into(),
            ))
        }
    };
    let mut report = RunReport::new(command, Some(&input.bytes));
    let class_name = match class {
        GraphClass::Chordal => "chordal",
        _ => "circular-arc",
    };
    report.param("class", class_name).param("threads", threads);
    let opts = ConnectedOptions {
        threads,
        ..ConnectedOptions::default()
    };
    let dec = Decomposition::build(graph, budget)?;
    report.counts.separators = Some(dec.separators.len());
    report.counts.pmcs = Some(dec.pmcs.len());
    let solved = if graph.is_connected() {
        let partitions = class.partitions(graph, &dec).map_err(input_error)?;
        solve_connected_on(graph, &dec, t, &partitions, &opts)
    } else {
        solve_max_induced_tw_connected(graph, t, &class, budget, &opts)
    };
    let solution = match solved {
        Ok(s) => s,
        Err(Error::Infeasible) => {
            report.fact("summary", "infeasible: no connected solution exists");
            return Ok(Output::Report(report));
        }
        Err(e) => return Err(input_error(e)),
    };
    report.counts.table_entries = Some(solution.stats.alpha_entries);
    let cover = graph.vertices() - solution.set;
    report.result_size = Some(cover.len());
    report.witness = Some(g.names(&cover));
    report.fact(
        "max separator characteristics",
        solution.stats.max_separator_characteristics,
    );
    report.fact(
        "max PMC characteristics",
        solution.stats.max_pmc_characteristics,
    );
    report.check("connected", graph.is_connected_set(&cover), "");
    if t == 0 {
        let covers = graph
            .edges()
            .all(|(u, v)| cover.contains(u) || cover.contains(v));
        report.check("vertex cover", covers, "");
    } else {
        report.check("feedback vertex set", is_forest(graph, &solution.set), "");
    }
    Ok(Output::Report(report))
}

fn solve_distance(file: &Path, d: usize, budget: &Budget) -> Result<Output, CliError> {
    let input = read(file)?;
    let (g, _) = load_graph(&input)?;
    let mut report = RunReport::new("solve dist-is", Some(&input.bytes));
    report.param("d", d);
    let s = distance_d_independent_set(&g.graph, d, budget).map_err(input_error)?;
    report.result_size = Some(s.size);
    report.witness = Some(g.names(&s.set));
    let dist = g.graph.distance_matrix();
    let members: Vec<usize> = s.set.iter().collect();
    let far = members.iter().all(|&u| {
        members
            .iter()
            .all(|&v| u == v || dist[u][v] as u64 >= d as u64)
    });
    report.check("pairwise distance", far, format!(">= {d}"));
    Ok(Output::Report(report))
}

fn verify_power(file: &Path, k: usize, budget: &Budget) -> Result<Output, CliError> {
    let input = read(file)?;
    let (g, _) = load_graph(&input)?;
    if k % 2 == 0 {
        return Err(CliError::Input(format!("k = {k} must be odd")));
    }
    let r = verify_odd_power_separators(&g.graph, k, budget.separators(g.graph.n()))?;
    let mut report = RunReport::new("verify theorem1", Some(&input.bytes));
    report.param("k", k);
    report.counts.separators = Some(r.separators_of_graph);
    report.result_size = Some(r.separators_of_power);
    let mapped = if r.failures.is_empty() {
        "all mapped".to_string()
    } else {
        format!("{} not mapped", r.failures.len())
    };
    report.fact(
        "summary",
        format!(
            "{} ≤ {}, {mapped}",
            r.separators_of_power, r.separators_of_graph
        ),
    );
    report.fact("separators of G", r.separators_of_graph);
    report.fact(&format!("separators of G^{k}"), r.separators_of_power);
    report.check(
        "count",
        r.separators_of_power <= r.separators_of_graph,
        format!("{} <= {}", r.separators_of_power, r.separators_of_graph),
    );
    let detail = r
        .failures
        .iter()
        .map(|(s, why)| format!("{:?}: {why}", g.names(s)))
        .collect::<Vec<_>>()
        .join("; ");
    report.check("lifting", r.failures.is_empty(), detail);
    report.check("injective", r.injective, "");
    report.check(
        "lifts are separators of G",
        r.lifted_into_graph_separators,
        "",
    );
    Ok(Output::Report(report))
}

fn verify_reduction(file: &Path, budget: &Budget) -> Result<Output, CliError> {
    let input = read(file)?;
    let b = input::parse_bipartite(&input.text)?;
    let reduced_n = red_blue_to_cvc(&b)?.graph.n();
    let limit = budget.separators(reduced_n);
    let r = verify_reduction_separator_bound(&b, limit)?;
    let mut report = RunReport::new("verify appendix-lemma", Some(&input.bytes));
    report.counts.separators = Some(r.separators_original);
    report.result_size = Some(r.separators_reduced);
    report.fact(
        "summary",
        format!(
            "{} ≤ {} + {}",
            r.separators_reduced, r.separators_original, r.vertices_reduced
        ),
    );
    report.fact("separators of G", r.separators_original);
    report.fact("separators of G'", r.separators_reduced);
    report.fact("vertices of G'", r.vertices_reduced);
    report.check("separator growth", r.holds(), "");
    if reduced_n <= CORRESPONDENCE_LIMIT {
        let (reduced, opt) = correspondence_optima(&b)?;
        let blues = b.blues.len();
        let bad: Vec<usize> = (0..=blues + 1)
            .filter(|&k| !correspondence_at(&reduced, &opt, k))
            .collect();
        report.fact("min dominating set", fmt_opt(opt.dominating_set));
        report.fact("min connected cover of G'", fmt_opt(opt.connected_cover));
        report.check(
            "solution correspondence",
            bad.is_empty(),
            format!("k in 0..={}, failing {bad:?}", blues + 1),
        );
    } else {
        report.check(
            "solution correspondence",
            true,
            format!("skipped: |V(G')| = {reduced_n} > {CORRESPONDENCE_LIMIT}"),
        );
    }
    Ok(Output::Report(report))
}

fn generate(cmd: &GenCommand) -> Result<Output, CliError> {
    match *cmd {
        GenCommand::Chordal { n, seed, density } => {
            let g = classes::random_chordal(n, density, seed).map_err(input_error)?;
            Ok(Output::Raw(input::write_edge_list(&g)))
        }
        GenCommand::Arcs { n, seed, coverage } => {
            let m = classes::random_arc_model(n, coverage, seed).map_err(input_error)?;
            Ok(Output::Raw(
                serde_json::to_string(&m).expect("model serialises") + "\n",
            ))
        }
    }
}

fn run_oracle(
    problem: OracleProblem,
    file: &Path,
    t: Option<usize>,
    d: Option<usize>,
) -> Result<Output, CliError> {
    let input = read(file)?;
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| CliError::Input(format!("this oracle problem needs --{flag}")))
    };
    let mut report = RunReport::new("oracle", Some(&input.bytes));
    report.param("problem", format!("{problem:?}").to_lowercase());
    let (g, labels) = if problem == OracleProblem::RedBlue {
        let b = input::parse_bipartite(&input.text)?;
        let problem = Problem::RedBlueDominatingSet {
            reds: b.reds,
            blues: b.blues,
        };
        report.result_size = oracle::brute_solve(&b.graph, problem).map_err(too_large)?;
        return finish_oracle(report);
    } else {
        let (g, _) = load_graph(&input)?;
        (g.graph.clone(), g)
    };
    let problem = match problem {
        OracleProblem::Seps => {
            let seps = oracle::brute_minimal_separators(&g).map_err(too_large)?;
            report.result_size = Some(seps.len());
            report.sets = listing(&labels, seps.as_slice());
            return finish_oracle(report);
        }
        OracleProblem::Pmcs => {
            let pmcs = oracle::brute_pmcs(&g, PmcMethod::SubsetFilter).map_err(too_large)?;
            report.result_size = Some(pmcs.len());
            report.sets = listing(&labels, &pmcs);
            return finish_oracle(report);
        }
        OracleProblem::Mis => Problem::MaxIndependentSet,
        OracleProblem::Mif => Problem::MaxInducedForest,
        OracleProblem::Tw => {
            let t = need(t, "t")?;
            report.param("t", t);
            Problem::MaxInducedTreewidth(t)
        }
        OracleProblem::Cvc => Problem::ConnectedVertexCover,
        OracleProblem::Cfvs => Problem::ConnectedFeedbackVertexSet,
        OracleProblem::DistIs => {
            let d = need(d, "d")?;
            report.param("d", d);
            Problem::DistanceIndependentSet(d)
        }
        OracleProblem::RedBlue => unreachable!("handled above"),
    };
    report.result_size = oracle::brute_solve(&g, problem).map_err(too_large)?;
    finish_oracle(report)
}

fn too_large(e: Error) -> CliError {
    match e {
        Error::TooLargeForOracle(msg) => CliError::Input(msg),
        other => CliError::Solver(other),
    }
}

fn finish_oracle(mut report: RunReport) -> Result<Output, CliError> {
    if report.result_size.is_none() {
        report.fact("summary", "infeasible");
    }
    Ok(Output::Report(report))
}
