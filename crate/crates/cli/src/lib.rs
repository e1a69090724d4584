//! Batch driver over graph6 streams.
//!
//! Each input line is an independent job: parse, filter, run one
//! subcommand, and produce a [`Record`] holding a JSON certificate and the
//! fixed CSV summary fields. Jobs run on a rayon pool and are collected in
//! input order, so reports do not depend on the worker count.

use std::fmt;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use critlab_core::coloring::{chromatic_index, ChiVerdict};
use critlab_core::criticality::{is_k_critical, CriticalityReport};
use critlab_core::even_factor::{
    find_barrier, find_even_factor, is_even_factor, normalize_barrier, DEFAULT_BARRIER_BUDGET,
    DEFAULT_FACTOR_BUDGET,
};
use critlab_core::lemma::{
    find_lemma1_configs, lemma1_bound_check, lemma1_trace, lemma2_check,
    theorem1_audit_with_report, AuditBudgets, Lemma1Options,
};
use critlab_core::{coloring::DEFAULT_COLOR_BUDGET, parse_graph6, Error, Graph, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Color,
    Chi,
    Critical,
    Evenfactor,
    Barrier,
    Normalize,
    Lemma1,
    Lemma2,
    Audit,
    Theorem2Xcheck,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Command::Color => "color",
            Command::Chi => "chi",
            Command::Critical => "critical",
            Command::Evenfactor => "evenfactor",
            Command::Barrier => "barrier",
            Command::Normalize => "normalize",
            Command::Lemma1 => "lemma1",
            Command::Lemma2 => "lemma2",
            Command::Audit => "audit",
            Command::Theorem2Xcheck => "theorem2-xcheck",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub color: u64,
    pub factor: u64,
    pub barrier: u64,
    /// Candidate vertex sets examined by the configuration search.
    pub subsets: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            color: DEFAULT_COLOR_BUDGET,
            factor: DEFAULT_FACTOR_BUDGET,
            barrier: DEFAULT_BARRIER_BUDGET,
            subsets: Lemma1Options::default().max_subsets,
        }
    }
}

impl Budgets {
    /// Multiplies every budget by `factor`, rounding and keeping each ≥ 1.
    pub fn scaled(self, factor: f64) -> Budgets {
        let s = |b: u64| ((b as f64 * factor).round() as u64).max(1);
        Budgets {
            color: s(self.color),
            factor: s(self.factor),
            barrier: s(self.barrier),
            subsets: s(self.subsets),
        }
    }

    fn audit(&self) -> AuditBudgets {
        AuditBudgets {
            color: self.color,
            factor: self.factor,
            barrier: self.barrier,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filters {
    pub n_min: Option<usize>,
    pub n_max: Option<usize>,
    pub delta_min: Option<usize>,
    pub delta_max: Option<usize>,
    pub class2_only: bool,
    pub critical_only: bool,
}

#[derive(Debug, Clone)]
pub enum Input {
    File(PathBuf),
    Stdin,
    Lines(Vec<String>),
}

#[derive(Debug, Clone)]
pub struct JobSpec {
    pub input: Input,
    pub command: Command,
    pub filters: Filters,
    pub budgets: Budgets,
    /// Worker threads; 1 runs everything on one thread.
    pub jobs: usize,
    pub json_out: Option<PathBuf>,
    pub csv_out: Option<PathBuf>,
    /// Directory receiving one file per falsification event.
    pub bundle_dir: Option<PathBuf>,
}

impl JobSpec {
    pub fn new(command: Command, input: Input) -> Self {
        JobSpec {
            input,
            command,
            filters: Filters::default(),
            budgets: Budgets::default(),
            jobs: 1,
            json_out: None,
            csv_out: None,
            bundle_dir: None,
        }
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        let b = &self.budgets;
        if b.color == 0 || b.factor == 0 || b.barrier == 0 || b.subsets == 0 {
            bail!("budgets must be positive");
        }
        if self.jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        let f = &self.filters;
        if let (Some(lo), Some(hi)) = (f.n_min, f.n_max) {
            if lo > hi {
                bail!("n filter {lo}..{hi} is empty");
            }
        }
        if let (Some(lo), Some(hi)) = (f.delta_min, f.delta_max) {
            if lo > hi {
                bail!("Δ filter {lo}..{hi} is empty");
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Ok,
    /// A precondition of the subcommand does not hold for this graph.
    Skipped,
    Budget,
    Falsified,
    Error,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Outcome::Ok => "ok",
            Outcome::Skipped => "skipped",
            Outcome::Budget => "budget",
            Outcome::Falsified => "falsified",
            Outcome::Error => "error",
        };
        f.write_str(s)
    }
}

/// One processed graph. The optional fields are the CSV summary columns
/// and stay empty when the subcommand does not compute them.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub chi: Option<usize>,
    pub critical: Option<bool>,
    pub divalent_count: usize,
    pub hypothesis_met: Option<bool>,
    pub even_factor: Option<bool>,
    pub barrier_size: Option<usize>,
    pub verdict: Outcome,
    /// Why the graph was skipped or failed.
    pub message: Option<String>,
    pub certificate: Value,
}

impl Record {
    fn new(line: usize, graph6: &str, g: &Graph) -> Self {
        Record {
            line,
            graph6: graph6.to_owned(),
            n: g.n(),
            m: g.m(),
            delta: g.max_degree(),
            chi: None,
            critical: None,
            divalent_count: g.divalent_vertices().len(),
            hypothesis_met: None,
            even_factor: None,
            barrier_size: None,
            verdict: Outcome::Ok,
            message: None,
            certificate: Value::Null,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LineError {
    pub line: usize,
    pub error: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Falsification {
    pub command: Command,
    pub line: usize,
    pub graph6: String,
    pub detail: Value,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub read: usize,
    pub malformed: usize,
    pub filtered_out: usize,
    pub processed: usize,
    pub critical: usize,
    pub with_even_factor: usize,
    pub without_even_factor: usize,
    pub skipped: usize,
    pub budget_exhausted: usize,
    pub falsifications: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Command,
    pub summary: Summary,
    pub records: Vec<Record>,
    pub malformed: Vec<LineError>,
    /// graph6 strings of graphs whose verdict is unknown, including those
    /// whose filter could not be decided.
    pub budget_exhausted: Vec<String>,
    pub falsifications: Vec<Falsification>,
}

impl RunReport {
    /// 0 clean, 1 falsification, 3 errors or malformed lines, 2 budget only.
    pub fn exit_code(&self) -> i32 {
        if !self.falsifications.is_empty() {
            1
        } else if self.summary.errors > 0 || self.summary.malformed > 0 {
            3
        } else if !self.budget_exhausted.is_empty() {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn write_csv<W: Write>(&self, w: W) -> anyhow::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(CSV_HEADER)?;
        let opt = |v: Option<String>| v.unwrap_or_default();
        for r in &self.records {
            out.write_record([
                r.graph6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.delta.to_string(),
                opt(r.chi.map(|c| c.to_string())),
                opt(r.critical.map(|c| c.to_string())),
                r.divalent_count.to_string(),
                opt(r.hypothesis_met.map(|c| c.to_string())),
                opt(r.even_factor.map(|c| c.to_string())),
                opt(r.barrier_size.map(|c| c.to_string())),
                r.verdict.to_string(),
            ])?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory csv");
        String::from_utf8(buf).expect("csv is utf-8")
    }
}

pub const CSV_HEADER: [&str; 11] = [
    "graph6",
    "n",
    "m",
    "delta",
    "chi",
    "critical",
    "divalent_count",
    "hypothesis_met",
    "even_factor",
    "barrier_size",
    "verdict",
];

/// Reads all lines of the input. Blank lines are kept so line numbers
/// match the source; they are skipped during processing.
pub fn read_input(input: &Input) -> anyhow::Result<Vec<String>> {
    let reader: Box<dyn BufRead> = match input {
        Input::Lines(lines) => return Ok(lines.clone()),
        Input::Stdin => Box::new(std::io::stdin().lock()),
        Input::File(p) => Box::new(std::io::BufReader::new(
            std::fs::File::open(p).with_context(|| format!("cannot open {}", p.display()))?,
        )),
    };
    reader
        .lines()
        .collect::<std::io::Result<Vec<_>>>()
        .context("cannot read input")
}

enum Job {
    Blank,
    Malformed(LineError),
    Filtered { undecided: Option<String> },
    Done(Box<Record>, Option<Falsification>),
}

/// Whether `g` passes the filters: `Some(bool)`, or `None` when a class or
/// criticality filter could not be decided within budget.
pub fn passes(filters: &Filters, budgets: &Budgets, g: &Graph) -> Option<bool> {
    let n = g.n();
    let d = g.max_degree();
    let in_range = |v: usize, lo: Option<usize>, hi: Option<usize>| {
        lo.is_none_or(|lo| v >= lo) && hi.is_none_or(|hi| v <= hi)
    };
    if !in_range(n, filters.n_min, filters.n_max)
        || !in_range(d, filters.delta_min, filters.delta_max)
    {
        return Some(false);
    }
    if filters.critical_only {
        if g.m() == 0 || !g.is_connected() {
            return Some(false);
        }
        return is_k_critical(g, budgets.color).ok()?.is_k_critical;
    }
    if filters.class2_only {
        return chromatic_index(g, budgets.color).is_class_two();
    }
    Some(true)
}

/// Order-preserving filter. Graphs whose membership is undecided are
/// dropped.
pub fn filter_stream(filters: &Filters, budgets: &Budgets, graphs: Vec<Graph>) -> Vec<Graph> {
    graphs
        .into_iter()
        .filter(|g| passes(filters, budgets, g) == Some(true))
        .collect()
}

pub fn run(spec: &JobSpec) -> anyhow::Result<RunReport> {
    spec.validate()?;
    let lines = read_input(&spec.input)?;
    let report = run_lines(spec, &lines)?;
    if let Some(p) = &spec.json_out {
        write_atomic(p, report.to_json().as_bytes())?;
    }
    if let Some(p) = &spec.csv_out {
        write_atomic(p, report.csv_string().as_bytes())?;
    }
    if let Some(dir) = &spec.bundle_dir {
        for f in &report.falsifications {
            write_bundle(dir, f)?;
        }
    }
    Ok(report)
}

/// Processes already-read lines; line numbers start at 1.
pub fn run_lines(spec: &JobSpec, lines: &[String]) -> anyhow::Result<RunReport> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()?;
    let jobs: Vec<Job> = pool.install(|| {
        lines
            .par_iter()
            .enumerate()
            .map(|(i, line)| process_line(spec, i + 1, line))
            .collect()
    });

    let mut report = RunReport {
        command: spec.command,
        summary: Summary::default(),
        records: Vec::new(),
        malformed: Vec::new(),
        budget_exhausted: Vec::new(),
        falsifications: Vec::new(),
    };
    for job in jobs {
        let s = &mut report.summary;
        match job {
            Job::Blank => {}
            Job::Malformed(e) => {
                s.read += 1;
                s.malformed += 1;
                report.malformed.push(e);
            }
            Job::Filtered { undecided } => {
                s.read += 1;
                s.filtered_out += 1;
                if let Some(g6) = undecided {
                    report.budget_exhausted.push(g6);
                }
            }
            Job::Done(rec, fals) => {
                s.read += 1;
                s.processed += 1;
                if rec.critical == Some(true) {
                    s.critical += 1;
                }
                match rec.even_factor {
                    Some(true) => s.with_even_factor += 1,
                    Some(false) => s.without_even_factor += 1,
                    None => {}
                }
                match rec.verdict {
                    Outcome::Ok => {}
                    Outcome::Skipped => s.skipped += 1,
                    Outcome::Budget => {
                        s.budget_exhausted += 1;
                        report.budget_exhausted.push(rec.graph6.clone());
                    }
                    Outcome::Falsified => s.falsifications += 1,
                    Outcome::Error => s.errors += 1,
                }
                if let Some(f) = fals {
                    report.falsifications.push(f);
                }
                report.records.push(*rec);
            }
        }
    }
    Ok(report)
}

fn process_line(spec: &JobSpec, line: usize, raw: &str) -> Job {
    let text = raw.trim();
    if text.is_empty() {
        return Job::Blank;
    }
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => {
            return Job::Malformed(LineError {
                line,
                error: e.to_string(),
            })
        }
    };
    match passes(&spec.filters, &spec.budgets, &g) {
        Some(true) => {}
        Some(false) => return Job::Filtered { undecided: None },
        None => {
            return Job::Filtered {
                undecided: Some(text.to_owned()),
            }
        }
    }
    let mut rec = Record::new(line, text, &g);
    let detail = match dispatch(spec.command, &spec.budgets, &g, &mut rec) {
        Ok(d) => d,
        Err(e) => {
            rec.verdict = match e {
                Error::Precondition(_) | Error::Usage(_) | Error::Hypothesis(_) => Outcome::Skipped,
                _ => Outcome::Error,
            };
            rec.message = Some(e.to_string());
            None
        }
    };
    let fals = (rec.verdict == Outcome::Falsified).then(|| Falsification {
        command: spec.command,
        line,
        graph6: text.to_owned(),
        detail: detail.unwrap_or_else(|| rec.certificate.clone()),
    });
    Job::Done(Box::new(rec), fals)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("certificate serialises")
}

fn record_chi(rec: &mut Record, chi: &ChiVerdict) {
    rec.chi = chi.chi;
    if chi.chi.is_none() {
        rec.verdict = Outcome::Budget;
    }
}

fn record_criticality(rec: &mut Record, report: &CriticalityReport) {
    record_chi(rec, &report.chi);
    rec.critical = report.is_k_critical;
    if report.is_k_critical.is_none() {
        rec.verdict = Outcome::Budget;
    }
}

/// Runs one subcommand, filling `rec`. The returned value, when present,
/// is the falsification bundle detail.
fn dispatch(
    cmd: Command,
    b: &Budgets,
    g: &Graph,
    rec: &mut Record,
) -> critlab_core::Result<Option<Value>> {
    match cmd {
        Command::Color => {
            let chi = chromatic_index(g, b.color);
            record_chi(rec, &chi);
            rec.certificate = match &chi.coloring {
                Some(c) => to_value(c),
                None => json!({ "k": null, "edges": null }),
            };
        }
        Command::Chi => {
            let chi = chromatic_index(g, b.color);
            record_chi(rec, &chi);
            rec.certificate = json!({ "chi": chi.chi, "delta": chi.delta, "nodes": chi.nodes });
        }
        Command::Critical => {
            if g.m() == 0 || !g.is_connected() {
                return Err(Error::Precondition(
                    "criticality needs a connected graph with at least one edge".into(),
                ));
            }
            let report = is_k_critical(g, b.color)?;
            record_criticality(rec, &report);
            rec.certificate = to_value(&report);
        }
        Command::Evenfactor => {
            let search = find_even_factor(g, b.factor);
            match search.verdict {
                Verdict::Found(f) => {
                    rec.even_factor = Some(true);
                    rec.certificate = json!({ "even_factor": f.edges });
                }
                Verdict::Refuted => {
                    rec.even_factor = Some(false);
                    rec.certificate = match find_barrier(g, b.barrier).verdict {
                        Verdict::Found(bar) => {
                            rec.barrier_size = Some(bar.x.len());
                            json!({ "barrier": barrier_json(&bar) })
                        }
                        _ => json!({ "barrier": null }),
                    };
                }
                Verdict::BudgetExceeded => {
                    rec.verdict = Outcome::Budget;
                    rec.certificate = json!({ "even_factor": null, "nodes": search.nodes });
                }
            }
        }
        Command::Barrier => {
            let search = find_barrier(g, b.barrier);
            match search.verdict {
                Verdict::Found(bar) => {
                    rec.even_factor = Some(false);
                    rec.barrier_size = Some(bar.x.len());
                    rec.certificate = json!({ "barrier": barrier_json(&bar) });
                }
                Verdict::Refuted => {
                    rec.certificate = json!({ "barrier": null, "subsets": search.subsets });
                }
                Verdict::BudgetExceeded => {
                    rec.verdict = Outcome::Budget;
                    rec.certificate = json!({ "barrier": null, "subsets": search.subsets });
                }
            }
        }
        Command::Normalize => match find_barrier(g, b.barrier).verdict {
            Verdict::Found(bar) => {
                let norm = normalize_barrier(g, &bar.x)?;
                rec.even_factor = Some(false);
                rec.barrier_size = Some(norm.barrier.x.len());
                if !norm.properties.all() {
                    rec.verdict = Outcome::Falsified;
                }
                rec.certificate = json!({
                    "barrier": barrier_json(&norm.barrier),
                    "found": bar.x,
                    "removed": norm.removed,
                    "properties": norm.properties,
                });
            }
            Verdict::Refuted => rec.certificate = json!({ "barrier": null }),
            Verdict::BudgetExceeded => {
                rec.verdict = Outcome::Budget;
                rec.certificate = json!({ "barrier": null });
            }
        },
        Command::Lemma1 => {
            let opts = Lemma1Options {
                size_cap: None,
                max_subsets: b.subsets,
                color_budget: b.color,
            };
            let search = find_lemma1_configs(g, &opts)?;
            rec.chi = Some(g.max_degree() + 1);
            let mut traces = Vec::new();
            let mut failed = Vec::new();
            for cfg in &search.configs {
                let t = lemma1_trace(g, cfg, b.color)?;
                let bound = lemma1_bound_check(g, cfg)?;
                if t.falsified || !bound {
                    failed.push(to_value(&t));
                }
                traces.push(t);
            }
            if !search.complete {
                rec.verdict = Outcome::Budget;
            }
            if !failed.is_empty() {
                rec.verdict = Outcome::Falsified;
            }
            rec.certificate = json!({
                "configs_found": search.configs.len(),
                "complete": search.complete,
                "subsets_examined": search.subsets_examined,
                "undecided_edges": search.undecided_edges,
                "traces": traces,
            });
            if !failed.is_empty() {
                return Ok(Some(
                    json!({ "graph6": rec.graph6, "failed_traces": failed }),
                ));
            }
        }
        Command::Lemma2 => {
            let report = lemma2_check(g, b.color)?;
            rec.chi = Some(report.k + 1);
            if !report.complete {
                rec.verdict = Outcome::Budget;
            }
            if !report.violations.is_empty() {
                rec.verdict = Outcome::Falsified;
            }
            rec.certificate = to_value(&report);
        }
        Command::Audit => {
            if g.max_degree() < 3 {
                return Err(Error::Usage(format!(
                    "theorem stated for k ≥ 3, got k = {}",
                    g.max_degree()
                )));
            }
            if g.m() == 0 || !g.is_connected() {
                return Err(Error::Precondition("audit needs a connected graph".into()));
            }
            let report = is_k_critical(g, b.color)?;
            record_criticality(rec, &report);
            if report.is_k_critical != Some(true) {
                rec.certificate = json!({ "critical": report.is_k_critical });
                if report.is_k_critical == Some(false) {
                    return Err(Error::Usage(format!("input is not {}-critical", report.k)));
                }
                return Ok(None);
            }
            let v = theorem1_audit_with_report(g, &report, b.audit())?;
            rec.hypothesis_met = Some(v.hypothesis_met);
            rec.even_factor = if v.even_factor.is_some() {
                Some(true)
            } else if v.barrier.is_some() {
                Some(false)
            } else {
                None
            };
            rec.barrier_size = v.barrier.as_ref().map(|n| n.barrier.x.len());
            if !v.conclusive {
                rec.verdict = Outcome::Budget;
            }
            if v.falsification {
                rec.verdict = Outcome::Falsified;
            }
            rec.certificate = to_value(&v);
        }
        Command::Theorem2Xcheck => {
            if g.n() == 1 {
                return Err(Error::Precondition(
                    "K1 has no even factor and no proper subset X of V(G) as barrier".into(),
                ));
            }
            let factor = find_even_factor(g, b.factor);
            let barrier = find_barrier(g, b.barrier);
            let label = |found: bool, refuted: bool| {
                if found {
                    "found"
                } else if refuted {
                    "refuted"
                } else {
                    "budget"
                }
            };
            let f_state = label(
                factor.verdict.found().is_some(),
                factor.verdict.is_refuted(),
            );
            let b_state = label(
                barrier.verdict.found().is_some(),
                barrier.verdict.is_refuted(),
            );
            let decided = f_state != "budget" && b_state != "budget";
            let mismatch = decided && (b_state == "found") != (f_state == "refuted");
            let mut cert =
                json!({ "factor": f_state, "barrier_search": b_state, "mismatch": mismatch });
            if let Some(f) = factor.verdict.found() {
                rec.even_factor = Some(is_even_factor(g, &f.edges));
                cert["even_factor"] = to_value(&f.edges);
            } else if factor.verdict.is_refuted() {
                rec.even_factor = Some(false);
            }
            if let Some(bar) = barrier.verdict.found() {
                rec.barrier_size = Some(bar.x.len());
                cert["barrier"] = barrier_json(bar);
            }
            rec.certificate = cert;
            if !decided {
                rec.verdict = Outcome::Budget;
            }
            if mismatch {
                rec.verdict = Outcome::Falsified;
            }
        }
    }
    Ok(None)
}

fn barrier_json(b: &critlab_core::even_factor::Barrier) -> Value {
    json!({ "X": b.x, "components": b.components, "q": b.q, "deficiency": b.deficiency })
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot create a temporary file in {}", dir.display()))?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path)
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

/// One JSON file per event, named after the subcommand and input line.
pub fn write_bundle(dir: &Path, f: &Falsification) -> anyhow::Result<PathBuf> {
    std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let path = dir.join(format!("falsification-{}-line{}.json", f.command, f.line));
    let body = serde_json::to_string_pretty(f)? + "\n";
    write_atomic(&path, body.as_bytes())?;
    Ok(path)
}
