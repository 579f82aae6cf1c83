//! Command implementations for the `coxperc` binary. Every command
//! returns its rendered output and an exit code: 0 for a pass or a found
//! witness, 1 for a verified negative, 2 for errors and guards.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxperc::audit::axiom_audit;
use coxperc::catalog::{self, CatalogRow};
use coxperc::extremal::{balanced_exponent, inclusion_graph_stats};
use coxperc::homdensity::{self, check_cut_involution_inequality, random_fold_trials, Host};
use coxperc::incidence::IncidenceGraph;
use coxperc::percolation::{build_percolating_sequence, build_strong_percolating_sequence};
use coxperc::search::{self, Part, SearchOutcome, StrongSearchResult};
use coxperc::{CoxeterGroup, CoxeterSystem, Error, GenSet, Result, DEFAULT_CAP};

#[derive(Debug, Parser)]
#[command(
    name = "coxperc",
    version,
    about = "Finite Coxeter groups, reflection graphs and percolating sequences"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Built-in system name, e.g. A3, F4, I2(7), A2xI2(2).
    #[arg(long, global = true)]
    pub system: Option<String>,
    /// JSON document {"name", "generators", "matrix"}.
    #[arg(long, global = true)]
    pub matrix_file: Option<PathBuf>,
    /// Maximum coset count; defaults to COXPERC_CAP or 1000000.
    #[arg(long, global = true, env = "COXPERC_CAP")]
    pub coset_cap: Option<usize>,
    #[arg(long, global = true, default_value_t = search::DEFAULT_STATE_CAP)]
    pub state_cap: u64,
    #[arg(long, global = true, default_value_t = homdensity::DEFAULT_BUDGET)]
    pub hom_budget: u128,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    #[value(alias = "reflectionsOnly")]
    Reflections,
    #[value(alias = "allCutInvolutions")]
    Cut,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, reflection count and quotient sizes.
    Group {
        #[arg(long = "I")]
        i: Option<String>,
    },
    /// Incidence graph export and shape predicates.
    Graph(PartsArgs),
    /// Percolating sequence from the identity coset.
    Percolate {
        #[arg(long = "I")]
        i: String,
    },
    /// Strong percolating sequences for a codimension-one subset.
    Strong {
        #[arg(long = "I")]
        i: String,
        /// Start coset as a word such as s1.s2, or a coset index.
        #[arg(long)]
        start: Option<String>,
        #[arg(long)]
        all_starts: bool,
    },
    /// Exhaustive search for strong percolating sequences.
    Search {
        #[arg(long = "I")]
        i: String,
        /// Second part, required in cut mode.
        #[arg(long = "J")]
        j: Option<String>,
        #[arg(long, value_enum, default_value_t = Mode::Reflections)]
        mode: Mode,
        /// Start pair of coset indices `a,b`; default sweeps `{0, w}`.
        #[arg(long)]
        start: Option<String>,
        #[arg(long, default_value_t = search::DEFAULT_AUTOMORPHISM_BUDGET)]
        automorphism_budget: usize,
    },
    /// Extremal exponent report.
    Exponent {
        #[arg(long = "I")]
        i: Option<String>,
        #[arg(long = "J")]
        j: Option<String>,
        /// Inclusion graph `m,a,b`.
        #[arg(long)]
        inclusion: Option<String>,
        /// Balanced formula `v,r`.
        #[arg(long)]
        balanced: Option<String>,
    },
    /// Consistency audit of the group engine.
    Audit {
        #[arg(long, default_value_t = 10_000_000)]
        sample_budget: u64,
    },
    /// Cut-involution and fold inequalities on a small host.
    Homcheck {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
        /// Host as `n:a-b,c-d`; default is the path on 3 vertices.
        #[arg(long, default_value = "3:0-1,1-2")]
        host: String,
        /// Seeded random fold trials on hosts with at most 4 vertices.
        #[arg(long, default_value_t = 0)]
        trials: usize,
    },
    /// Extremal rows and strong status over built-in systems.
    Catalog {
        /// Comma-separated system names; default is the built-in sweep.
        #[arg(long)]
        systems: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct PartsArgs {
    #[arg(long = "I")]
    pub i: Option<String>,
    #[arg(long = "J")]
    pub j: Option<String>,
    /// Semicolon-separated subsets for r >= 3, e.g. "s1;s2;s3".
    #[arg(long)]
    pub parts: Option<String>,
}

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn new(text: String, code: u8) -> Self {
        Output { text, code }
    }
}

impl Common {
    pub fn cap(&self) -> usize {
        self.coset_cap.unwrap_or(DEFAULT_CAP)
    }

    pub fn load_system(&self) -> Result<CoxeterSystem> {
        match (&self.system, &self.matrix_file) {
            (Some(name), None) => CoxeterSystem::builtin(name),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                CoxeterSystem::from_json(&text)
            }
            _ => Err(Error::BadInput(
                "give exactly one of --system and --matrix-file".into(),
            )),
        }
    }

    pub fn load_group(&self) -> Result<CoxeterGroup> {
        CoxeterGroup::with_cap(self.load_system()?, self.cap())
    }
}

fn json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn unsupported(format: Format, command: &str) -> Error {
    Error::BadInput(format!("format {format:?} is not available for {command}"))
}

fn parse_pair(text: &str) -> Result<(usize, usize)> {
    let nums: Vec<usize> = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad index {p:?}")))
        })
        .collect::<Result<_>>()?;
    match nums[..] {
        [a, b] => Ok((a, b)),
        _ => Err(Error::Parse(format!("expected a,b got {text:?}"))),
    }
}

fn parse_host(text: &str) -> Result<Host> {
    let (n, edges) = text.split_once(':').unwrap_or((text, ""));
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad host size in {text:?}")))?;
    let mut list = Vec::new();
    for e in edges.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (a, b) = e
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("bad edge {e:?}")))?;
        let a: usize = a
            .parse()
            .map_err(|_| Error::Parse(format!("bad edge {e:?}")))?;
        let b: usize = b
            .parse()
            .map_err(|_| Error::Parse(format!("bad edge {e:?}")))?;
        if a >= n || b >= n || a == b {
            return Err(Error::BadInput(format!("edge {e} on {n} vertices")));
        }
        list.push((a, b));
    }
    Ok(Host::from_edges(n, &list))
}

/// Coset of a start given as an index or a dot-separated word.
fn parse_start(system: &CoxeterSystem, table: &coxperc::CosetTable, text: &str) -> Result<usize> {
    if let Ok(i) = text.parse::<usize>() {
        return if i < table.len() {
            Ok(i)
        } else {
            Err(Error::BadIndex(i))
        };
    }
    let word: Vec<usize> = text
        .split('.')
        .filter(|p| !p.is_empty() && *p != "e")
        .map(|p| system.index_of(p.trim()))
        .collect::<Result<_>>()?;
    Ok(table.act_word(0, &word))
}

pub fn run(cli: &Cli) -> Result<Output> {
    let c = &cli.common;
    match &cli.command {
        Command::Group { i } => cmd_group(c, i.as_deref()),
        Command::Graph(parts) => cmd_graph(c, parts),
        Command::Percolate { i } => cmd_percolate(c, i),
        Command::Strong {
            i,
            start,
            all_starts,
        } => cmd_strong(c, i, start.as_deref(), *all_starts),
        Command::Search {
            i,
            j,
            mode,
            start,
            automorphism_budget,
        } => cmd_search(
            c,
            i,
            j.as_deref(),
            *mode,
            start.as_deref(),
            *automorphism_budget,
        ),
        Command::Exponent {
            i,
            j,
            inclusion,
            balanced,
        } => cmd_exponent(
            c,
            i.as_deref(),
            j.as_deref(),
            inclusion.as_deref(),
            balanced.as_deref(),
        ),
        Command::Audit { sample_budget } => cmd_audit(c, *sample_budget),
        Command::Homcheck { i, j, host, trials } => cmd_homcheck(c, i, j, host, *trials),
        Command::Catalog { systems } => cmd_catalog(c, systems.as_deref()),
    }
}

fn cmd_group(c: &Common, i: Option<&str>) -> Result<Output> {
    let group = c.load_group()?;
    let system = group.system();
    let subsets: Vec<GenSet> = match i {
        Some(text) => vec![system.parse_subset(text)?],
        None => (0..system.rank())
            .map(|k| system.all().difference(GenSet::single(k)))
            .collect(),
    };
    let mut quotients = Vec::new();
    for s in subsets {
        quotients.push((system.subset_labels(s).join(","), group.quotient(s)?.len()));
    }
    let reflections = group.reflections().len();
    let text = match c.format {
        Format::Json => json(&serde_json::json!({
            "system": system.name(),
            "rank": system.rank(),
            "order": group.order(),
            "reflections": reflections,
            "quotients": quotients.iter().map(|(k, n)| serde_json::json!({"I": k, "size": n})).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = format!(
                "system {}\nrank {}\norder {}\nreflections {}\n",
                system.name(),
                system.rank(),
                group.order(),
                reflections
            );
            for (k, n) in &quotients {
                let _ = writeln!(s, "quotient I={{{k}}} size {n}");
            }
            s
        }
        f => return Err(unsupported(f, "group")),
    };
    Ok(Output::new(text, 0))
}

fn graph_subsets(system: &CoxeterSystem, parts: &PartsArgs) -> Result<Vec<GenSet>> {
    match (&parts.parts, &parts.i, &parts.j) {
        (Some(list), None, None) => list.split(';').map(|p| system.parse_subset(p)).collect(),
        (None, Some(i), Some(j)) => Ok(vec![system.parse_subset(i)?, system.parse_subset(j)?]),
        _ => Err(Error::BadInput("give --I and --J, or --parts".into())),
    }
}

fn cmd_graph(c: &Common, parts: &PartsArgs) -> Result<Output> {
    let group = c.load_group()?;
    let system = group.system();
    let graph = IncidenceGraph::build(&group, &graph_subsets(system, parts)?)?;
    let shape = graph.shape(system);
    let text = match c.format {
        Format::Json => {
            let mut v = graph.to_json(system);
            v["shape"] = serde_json::to_value(&shape).expect("serializable");
            json(&v)
        }
        Format::Dot => graph.to_dot(system)?,
        Format::Text => {
            let mut s = format!("parts {:?}\nedges {}\n", shape.part_sizes, shape.edge_count);
            let _ = writeln!(s, "degrees {:?}", shape.degrees);
            let _ = writeln!(
                s,
                "connected {}\nhas_cycle {}",
                shape.connected, shape.has_cycle
            );
            s
        }
        f => return Err(unsupported(f, "graph")),
    };
    Ok(Output::new(text, 0))
}

fn certificate_text(group: &CoxeterGroup, cert: &coxperc::PercolationCertificate) -> String {
    let system = group.system();
    let steps: Vec<String> = cert
        .steps
        .iter()
        .map(|s| {
            format!(
                "({},{})",
                system.format_word(s.reflection.word()),
                s.direction.symbol()
            )
        })
        .collect();
    let verdict = match cert.verdict.failure {
        None => "pass".to_string(),
        Some(f) => format!("fail {f} at step {}", cert.verdict.step.unwrap_or(0)),
    };
    format!(
        "{} start {:?} steps [{}] {}\n",
        cert.kind,
        cert.start,
        steps.join(" "),
        verdict
    )
}

fn cmd_percolate(c: &Common, i: &str) -> Result<Output> {
    let group = c.load_group()?;
    let table = group.quotient(group.system().parse_subset(i)?)?;
    let cert = build_percolating_sequence(&group, &table);
    let text = match c.format {
        Format::Json => json(&cert.to_json(&group)),
        Format::Text => certificate_text(&group, &cert),
        f => return Err(unsupported(f, "percolate")),
    };
    Ok(Output::new(text, if cert.verdict.passed() { 0 } else { 1 }))
}

fn cmd_strong(c: &Common, i: &str, start: Option<&str>, all: bool) -> Result<Output> {
    let group = c.load_group()?;
    let system = group.system();
    let table = group.quotient(system.parse_subset(i)?)?;
    let starts: Vec<usize> = match (start, all) {
        (Some(s), false) => vec![parse_start(system, &table, s)?],
        (None, _) => (1..table.len()).collect(),
        (Some(_), true) => {
            return Err(Error::BadInput(
                "--start and --all-starts are exclusive".into(),
            ))
        }
    };
    let mut certs = Vec::new();
    for w in starts {
        certs.push(build_strong_percolating_sequence(&group, &table, w)?);
    }
    let passed = certs.iter().filter(|c| c.verdict.passed()).count();
    let text = match c.format {
        Format::Json => json(&serde_json::Value::Array(
            certs.iter().map(|c| c.to_json(&group)).collect(),
        )),
        Format::Text => {
            let mut s: String = certs.iter().map(|c| certificate_text(&group, c)).collect();
            let _ = writeln!(s, "verified {passed} of {}", certs.len());
            s
        }
        f => return Err(unsupported(f, "strong")),
    };
    Ok(Output::new(text, if passed == certs.len() { 0 } else { 1 }))
}

fn cmd_search(
    c: &Common,
    i: &str,
    j: Option<&str>,
    mode: Mode,
    start: Option<&str>,
    automorphism_budget: usize,
) -> Result<Output> {
    let group = c.load_group()?;
    let system = group.system();
    let subset = system.parse_subset(i)?;
    let table = group.quotient(subset)?;
    let n = table.len();
    let pairs: Vec<(usize, usize)> = match start {
        Some(s) => vec![parse_pair(s)?],
        None => (1..n).map(|w| (0, w)).collect(),
    };
    if pairs.iter().any(|&(a, b)| a == b || a.max(b) >= n) {
        return Err(Error::BadStart(format!(
            "start pairs must be distinct cosets below {n}"
        )));
    }
    let mut results = Vec::new();
    match mode {
        Mode::Reflections => {
            for &pair in &pairs {
                let r = search::strong_search_reflections(&group, &table, pair, c.state_cap)?;
                let witness = match &r {
                    StrongSearchResult::Found(cert) => Some(cert.to_json(&group)),
                    StrongSearchResult::NotFound { .. } => None,
                };
                results.push((pair, r.is_found(), witness));
            }
        }
        Mode::Cut => {
            let j = j.ok_or_else(|| Error::BadInput("cut mode needs --J".into()))?;
            let graph = IncidenceGraph::build(&group, &[subset, system.parse_subset(j)?])?
                .to_bipartite()?;
            let moves = search::cut_involution_moves(&graph, Part::Left, automorphism_budget)?;
            for &pair in &pairs {
                let outcome = search::search(n, &moves, &[pair.0, pair.1], c.state_cap)?;
                let witness = match &outcome {
                    SearchOutcome::Found(path) => Some(serde_json::json!(path
                        .iter()
                        .map(|&(m, d)| serde_json::json!({
                            "perm": moves[m].perm,
                            "sides": moves[m].sides,
                            "dir": d.symbol(),
                        }))
                        .collect::<Vec<_>>())),
                    SearchOutcome::NotFound { .. } => None,
                };
                results.push((pair, outcome.is_found(), witness));
            }
        }
    }
    let all_found = results.iter().all(|r| r.1);
    let verdict = if all_found { "FOUND" } else { "NOT_FOUND" };
    let text = match c.format {
        Format::Json => json(&serde_json::json!({
            "system": system.name(),
            "I": system.subset_labels(subset),
            "mode": format!("{mode:?}").to_lowercase(),
            "result": verdict,
            "pairs": results.iter().map(|(p, found, w)| serde_json::json!({
                "start": [p.0, p.1],
                "result": if *found { "FOUND" } else { "NOT_FOUND" },
                "witness": w,
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = String::new();
            for (p, found, _) in &results {
                let _ = writeln!(
                    s,
                    "start {{{},{}}} {}",
                    p.0,
                    p.1,
                    if *found { "FOUND" } else { "NOT_FOUND" }
                );
            }
            let _ = writeln!(s, "{verdict}");
            s
        }
        f => return Err(unsupported(f, "search")),
    };
    Ok(Output::new(text, if all_found { 0 } else { 1 }))
}

fn csv_text(rows: &[CatalogRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(catalog::HEADER).map_err(io)?;
    for r in rows {
        w.write_record(r.fields()).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn parse_numbers(text: &str, k: usize) -> Result<Vec<u64>> {
    let v: Vec<u64> = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad number in {text:?}")))
        })
        .collect::<Result<_>>()?;
    if v.len() != k {
        return Err(Error::Parse(format!("expected {k} numbers, got {text:?}")));
    }
    Ok(v)
}

fn cmd_exponent(
    c: &Common,
    i: Option<&str>,
    j: Option<&str>,
    inclusion: Option<&str>,
    balanced: Option<&str>,
) -> Result<Output> {
    if let Some(text) = inclusion {
        let v = parse_numbers(text, 3)?;
        let stats = inclusion_graph_stats(v[0], v[1], v[2])?;
        let out = match c.format {
            Format::Json => json(&serde_json::to_value(&stats).expect("serializable")),
            Format::Text => format!(
                "parts {} {}\nedges {}\nc {}\ncase {:?} complemented {}\ncriterion {} < {} {}\n",
                stats.part_a,
                stats.part_b,
                stats.edges,
                stats.c,
                stats.case,
                stats.complemented,
                stats.lhs,
                stats.rhs,
                if stats.improves { "holds" } else { "fails" }
            ),
            f => return Err(unsupported(f, "exponent --inclusion")),
        };
        return Ok(Output::new(out, if stats.improves { 0 } else { 1 }));
    }
    if let Some(text) = balanced {
        let v = parse_numbers(text, 2)?;
        let b = balanced_exponent(v[0], v[1])?;
        let out = match c.format {
            Format::Json => json(&serde_json::to_value(&b).expect("serializable")),
            Format::Text => format!("c {}\ngap {}\n", b.c, b.gap),
            f => return Err(unsupported(f, "exponent --balanced")),
        };
        return Ok(Output::new(out, 0));
    }
    let (i, j) = match (i, j) {
        (Some(i), Some(j)) => (i, j),
        _ => {
            return Err(Error::BadInput(
                "give --I and --J, --inclusion or --balanced".into(),
            ))
        }
    };
    let group = c.load_group()?;
    let system = group.system();
    let row = catalog::pair_row(
        &group,
        system.parse_subset(i)?,
        system.parse_subset(j)?,
        (String::new(), String::new()),
    );
    let report = row
        .report
        .clone()
        .ok_or_else(|| Error::BadInput(row.note.clone()))?;
    let out = match c.format {
        Format::Csv => csv_text(std::slice::from_ref(&row))?,
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("serializable");
            if !row.note.is_empty() {
                v["note"] = serde_json::json!(row.note);
            }
            json(&v)
        }
        Format::Text => {
            let mut s = format!(
                "v {} e {} t {}\nc {}\nexponent {}\nfuredi {} (r = {})\nbeats_furedi {}\nverdict {:?}\n",
                report.v,
                report.e,
                report.t_max,
                report.c,
                report.exponent,
                report.furedi_exponent,
                report.furedi_r,
                report.beats_furedi,
                report.conjecture_verdict
            );
            if !row.note.is_empty() {
                let _ = writeln!(s, "note {}", row.note);
            }
            s
        }
        f => return Err(unsupported(f, "exponent")),
    };
    Ok(Output::new(out, 0))
}

fn cmd_audit(c: &Common, budget: u64) -> Result<Output> {
    let group = c.load_group()?;
    let report = axiom_audit(&group, budget, c.seed)?;
    let text = match c.format {
        Format::Json => json(&serde_json::to_value(&report).expect("serializable")),
        Format::Text => {
            let mut s = format!(
                "system {} {}\n",
                report.system,
                if report.exhaustive {
                    "exhaustive"
                } else {
                    "sampled"
                }
            );
            for l in &report.laws {
                let _ = writeln!(
                    s,
                    "{:<26} checked {:>8} failures {} {}",
                    l.law,
                    l.checked,
                    l.failures,
                    if l.passed() { "PASS" } else { "FAIL" }
                );
            }
            s
        }
        f => return Err(unsupported(f, "audit")),
    };
    Ok(Output::new(text, if report.passed() { 0 } else { 1 }))
}

fn cmd_homcheck(c: &Common, i: &str, j: &str, host: &str, trials: usize) -> Result<Output> {
    let group = c.load_group()?;
    let system = group.system();
    let graph = IncidenceGraph::build(&group, &[system.parse_subset(i)?, system.parse_subset(j)?])?;
    let host = parse_host(host)?;
    let mut lines = Vec::new();
    let mut ok = true;
    for t in group.reflections() {
        let v = check_cut_involution_inequality(&graph, &t, &host, c.hom_budget)?;
        ok &= v.holds;
        lines.push(serde_json::json!({
            "t": system.word_labels(t.word()),
            "larger": v.larger.to_string(),
            "smaller": v.smaller.to_string(),
            "holds": v.holds,
        }));
    }
    let fold = if trials > 0 {
        let summary = random_fold_trials(&group, &graph, trials, 4, c.seed, c.hom_budget)?;
        ok &= summary.violations == 0;
        Some(summary)
    } else {
        None
    };
    let text = match c.format {
        Format::Json => json(&serde_json::json!({
            "cutInvolution": lines,
            "foldTrials": fold,
        })),
        Format::Text => {
            let mut s = String::new();
            for l in &lines {
                let _ = writeln!(
                    s,
                    "t={} {} >= {} {}",
                    l["t"]
                        .as_array()
                        .map(|a| a
                            .iter()
                            .filter_map(|x| x.as_str())
                            .collect::<Vec<_>>()
                            .join("."))
                        .unwrap_or_default(),
                    l["larger"].as_str().unwrap_or(""),
                    l["smaller"].as_str().unwrap_or(""),
                    if l["holds"].as_bool() == Some(true) {
                        "holds"
                    } else {
                        "FAILS"
                    }
                );
            }
            if let Some(f) = &fold {
                let _ = writeln!(s, "fold trials {} violations {}", f.trials, f.violations);
            }
            s
        }
        f => return Err(unsupported(f, "homcheck")),
    };
    Ok(Output::new(text, if ok { 0 } else { 1 }))
}

fn cmd_catalog(c: &Common, systems: Option<&str>) -> Result<Output> {
    let list: Vec<CoxeterSystem> = match systems {
        Some(text) => text
            .split(',')
            .map(|n| CoxeterSystem::builtin(n.trim()))
            .collect::<Result<_>>()?,
        None => catalog::default_systems(),
    };
    let rows = catalog::catalog(&list, c.cap());
    let text = match c.format {
        Format::Csv | Format::Text => csv_text(&rows)?,
        Format::Json => json(&serde_json::to_value(&rows).expect("serializable")),
        f => return Err(unsupported(f, "catalog")),
    };
    Ok(Output::new(text, 0))
}

/// Runs a parsed command line, writing output and returning the exit code.
pub fn execute(cli: &Cli) -> u8 {
    match run(cli) {
        Ok(out) => {
            let written = match &cli.common.out {
                Some(path) => std::fs::write(path, &out.text).map_err(|e| e.to_string()),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => out.code,
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
