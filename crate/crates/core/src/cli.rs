//! Command-line front end. [`run`] parses arguments and returns the exit
//! code with the text destined for stdout and stderr, so the binary is a thin
//! wrapper and the commands can be driven from tests.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::charclass::{rank_two_chern, RankTwoData};
use crate::chow::{sigma, ChowClass, GrassmannRing};
use crate::error::Error;
use crate::hrr::{chi_p3, RiemannRoch};
use crate::partitions::Partition;
use crate::pipeline::{
    enumerate_candidates, fano_splitting_types, replay_proof, verify_step1, BundleType,
    CandidateRecord, ClassificationReport, Rule, Status,
};
use crate::rational::{render, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "schubert",
    version,
    about = "Exact intersection theory on Grassmannians"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degree of a product of Schubert classes on G(k,n).
    Intersect {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Partitions separated by `;`, parts by `,`, e.g. "2,1;3".
        partitions: String,
    },
    /// χ(E(twist)) on G(1,4) for rank-two Chern data (e, a, b).
    Chi {
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        twist: i64,
    },
    /// χ on P3 of the rank-two bundle with c1 = e, c2 = a, twisted.
    ChiP3 {
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        twist: i64,
    },
    /// Candidate table after the Chern class filters.
    Filter {
        /// Emit every scanned candidate, not only the integrality survivors.
        #[arg(long)]
        all: bool,
    },
    /// Replay the classification and print the full report.
    Replay,
    /// Splitting types allowed on a line for first Chern class e on G(1,n).
    SplittingTypes {
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        let mut stderr = stderr.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotWeaklyDecreasing(_) | Error::InvalidAmbient(_) | Error::NotNormalized(_) => {
            EXIT_USAGE
        }
        Error::ReplayMismatch { .. } => EXIT_MISMATCH,
        _ => EXIT_DOMAIN,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    let format = cli.format;
    match cli.command {
        Command::Intersect { k, n, partitions } => cmd_intersect(k, n, &partitions, format),
        Command::Chi { e, a, b, twist } => cmd_chi(e, a, b, twist, format),
        Command::ChiP3 { e, a, twist } => cmd_chi_p3(e, a, twist, format),
        Command::Filter { all } => cmd_filter(all, format),
        Command::Replay => cmd_replay(format),
        Command::SplittingTypes { e, n } => cmd_splitting_types(e, n, format),
    }
}

/// Parses `"2,1;3"` into partitions. An empty factor or `0` is the empty
/// partition.
pub fn parse_partition_list(text: &str) -> Result<Vec<Partition>, String> {
    text.split(';')
        .map(|factor| {
            let factor = factor.trim();
            if factor.is_empty() {
                return Ok(Partition::empty());
            }
            let parts = factor
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| format!("malformed part {:?} in {:?}", p.trim(), factor))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Partition::new(parts).map_err(|e| e.to_string())
        })
        .collect()
}

fn cmd_intersect(k: usize, n: usize, text: &str, format: OutputFormat) -> Outcome {
    let factors = match parse_partition_list(text) {
        Ok(f) => f,
        Err(msg) => return Outcome::fail(EXIT_USAGE, msg),
    };
    let ring = match GrassmannRing::new(k, n) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(exit_code(&e), e.to_string()),
    };
    let mut product = ChowClass::one(&ring);
    for lambda in &factors {
        match sigma(&ring, lambda) {
            Ok(s) => product = &product * &s,
            Err(e) => return Outcome::fail(exit_code(&e), e.to_string()),
        }
    }
    Outcome::ok(Document::scalar(Cell::Rat(product.integrate())).render(format))
}

fn cmd_chi(e: i64, a: i64, b: i64, twist: i64, format: OutputFormat) -> Outcome {
    let ring = GrassmannRing::new(1, 4).expect("G(1,4)");
    let v = rank_two_chern(&ring, RankTwoData::new(e, a, b)).expect("ring is G(1,4)");
    let chi = RiemannRoch::new(&ring)
        .twisted_euler_characteristic(&v, twist)
        .expect("same ring");
    Outcome::ok(Document::scalar(Cell::Rat(chi)).render(format))
}

fn cmd_chi_p3(e: i64, a: i64, twist: i64, format: OutputFormat) -> Outcome {
    Outcome::ok(Document::scalar(Cell::Rat(chi_p3(e, a, twist))).render(format))
}

fn cmd_filter(all: bool, format: OutputFormat) -> Outcome {
    let records = enumerate_candidates();
    let checked = verify_step1(&records);
    let shown: Vec<CandidateRecord> = match (&checked, all) {
        (_, true) => records.clone(),
        (Ok(step1), false) => step1.clone(),
        (Err(_), false) => crate::pipeline::step1_table(&records),
    };
    let doc = Document::new(vec![candidate_section("candidates", &shown)]);
    let mut out = Outcome::ok(doc.render(format));
    if let Err(e) = checked {
        out.code = EXIT_MISMATCH;
        out.stderr = format!("{e}\n");
    }
    out
}

fn cmd_replay(format: OutputFormat) -> Outcome {
    match replay_proof() {
        Ok(report) => Outcome::ok(report_document(&report).render(format)),
        Err(e) => Outcome::fail(exit_code(&e), e.to_string()),
    }
}

fn cmd_splitting_types(e: i64, n: i64, format: OutputFormat) -> Outcome {
    let types = match fano_splitting_types(e, n) {
        Ok(t) => t,
        Err(err) => return Outcome::fail(exit_code(&err), err.to_string()),
    };
    let mut doc = Document::new(vec![Section {
        name: "splitting_types",
        columns: vec!["p", "q"],
        rows: types
            .iter()
            .map(|t| vec![Cell::Int(t.p), Cell::Int(t.q)])
            .collect(),
    }]);
    doc.plain = Some(
        types
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    Outcome::ok(doc.render(format))
}

/// One table cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Int(i64),
    Rat(Rational),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Rat(r) => render(r),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => json!(i),
            Cell::Rat(r) => json!({"num": r.numer().to_string(), "den": r.denom().to_string()}),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::Empty => Value::Null,
        }
    }
}

fn text(s: impl Into<String>) -> Cell {
    Cell::Text(s.into())
}

#[derive(Clone, Debug)]
pub struct Section {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

/// Output of a command as named tables. Plain output is aligned tables unless
/// a command supplies its own line; csv emits one block per table, each
/// preceded by a `[name]` record when there are several; json is an object
/// mapping table names to arrays of row objects.
#[derive(Clone, Debug)]
pub struct Document {
    pub sections: Vec<Section>,
    pub plain: Option<String>,
}

impl Document {
    fn new(sections: Vec<Section>) -> Self {
        Document {
            sections,
            plain: None,
        }
    }

    fn scalar(value: Cell) -> Self {
        let plain = value.text();
        Document {
            sections: vec![Section {
                name: "result",
                columns: vec!["value"],
                rows: vec![vec![value]],
            }],
            plain: Some(plain),
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Plain => self.render_plain(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
        }
    }

    fn render_plain(&self) -> String {
        if let Some(line) = &self.plain {
            return format!("{line}\n");
        }
        let mut out = String::new();
        for (i, section) in self.sections.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            if self.sections.len() > 1 {
                let _ = writeln!(out, "== {} ==", section.name);
            }
            let cells: Vec<Vec<String>> = section
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| match c {
                            Cell::Empty => "-".to_string(),
                            c => c.text(),
                        })
                        .collect()
                })
                .collect();
            let widths: Vec<usize> = section
                .columns
                .iter()
                .enumerate()
                .map(|(j, h)| {
                    cells
                        .iter()
                        .map(|r| r[j].chars().count())
                        .chain([h.len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |fields: Vec<&str>| {
                let padded: Vec<String> = fields
                    .iter()
                    .zip(&widths)
                    .map(|(f, w)| format!("{f:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(section.columns.clone()));
            for row in &cells {
                let _ = writeln!(out, "{}", line(row.iter().map(String::as_str).collect()));
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = Vec::new();
        for (i, section) in self.sections.iter().enumerate() {
            if i > 0 {
                out.push(b'\n');
            }
            let mut writer = csv::WriterBuilder::new()
                .flexible(true)
                .from_writer(Vec::new());
            if self.sections.len() > 1 {
                writer
                    .write_record([format!("[{}]", section.name)])
                    .expect("in-memory write");
            }
            writer
                .write_record(&section.columns)
                .expect("in-memory write");
            for row in &section.rows {
                writer
                    .write_record(row.iter().map(Cell::text))
                    .expect("in-memory write");
            }
            out.extend(writer.into_inner().expect("in-memory flush"));
        }
        String::from_utf8(out).expect("csv output is utf-8")
    }

    fn render_json(&self) -> String {
        let mut doc = Map::new();
        for section in &self.sections {
            let rows: Vec<Value> = section
                .rows
                .iter()
                .map(|row| {
                    let mut obj = Map::new();
                    for (col, cell) in section.columns.iter().zip(row) {
                        obj.insert((*col).to_string(), cell.json());
                    }
                    Value::Object(obj)
                })
                .collect();
            doc.insert(section.name.to_string(), Value::Array(rows));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json value");
        s.push('\n');
        s
    }
}

fn status_cells(status: &Status) -> [Cell; 2] {
    match status {
        Status::Surviving => [text("surviving"), Cell::Empty],
        Status::Eliminated { rule } => [text("eliminated"), text(rule.name())],
        Status::Classified { description } => [text("classified"), text(description.clone())],
    }
}

fn witness_cell(record: &CandidateRecord, rule: Rule, label: &str) -> Cell {
    record
        .verdict(rule)
        .and_then(|v| v.witness(label))
        .map_or(Cell::Empty, |w| Cell::Rat(w.clone()))
}

const CANDIDATE_COLUMNS: [&str; 17] = [
    "e",
    "a",
    "b",
    "status",
    "rule",
    "c2_p3",
    "c2_p2",
    "s3_sigma3",
    "s3_sigma21",
    "schur_strict",
    "chi_0",
    "chi_1",
    "chi_2",
    "chi_3",
    "chi_4",
    "chi_5",
    "chi_6",
];

fn candidate_section(name: &'static str, records: &[CandidateRecord]) -> Section {
    let rows = records
        .iter()
        .map(|r| {
            let [status, rule] = status_cells(&r.status);
            let mut row = vec![
                Cell::Int(r.data.e),
                Cell::Int(r.data.a),
                Cell::Int(r.data.b),
            ];
            row.extend([status, rule]);
            row.push(witness_cell(r, Rule::Positivity, "c2(E(m))|P3"));
            row.push(witness_cell(r, Rule::Positivity, "c2(E(m))|P2"));
            row.push(witness_cell(r, Rule::SchurPositivity, "s3(E(m)).sigma_3"));
            row.push(witness_cell(r, Rule::SchurPositivity, "s3(E(m)).sigma_21"));
            row.push(match r.verdict(Rule::SchurPositivity) {
                Some(v) => Cell::Bool(
                    v.witnesses
                        .iter()
                        .all(|w| crate::rational::is_positive(&w.value)),
                ),
                None => Cell::Empty,
            });
            for k in 0..=6 {
                row.push(witness_cell(
                    r,
                    Rule::Schwarzenberger,
                    &format!("chi(E({k}))"),
                ));
            }
            row
        })
        .collect();
    Section {
        name,
        columns: CANDIDATE_COLUMNS.to_vec(),
        rows,
    }
}

fn report_document(report: &ClassificationReport) -> Document {
    let mut sections = Vec::new();

    sections.push(Section {
        name: "preflight",
        columns: vec!["check", "passed"],
        rows: report
            .preflight
            .iter()
            .map(|c| vec![text(c.name), Cell::Bool(c.passed)])
            .collect(),
    });

    let counts = &report.step1_counts;
    sections.push(Section {
        name: "step1_counts",
        columns: vec!["stage", "remaining"],
        rows: [
            ("scanned", counts.scanned),
            ("positivity", counts.after_positivity),
            ("schur_positivity", counts.after_schur),
            ("schwarzenberger", counts.after_schwarzenberger),
            ("griffiths", counts.after_griffiths),
        ]
        .into_iter()
        .map(|(s, n)| vec![text(s), Cell::Int(n as i64)])
        .collect(),
    });

    let mut step1 = candidate_section("step1_table", &report.step1_table);
    step1.columns.push("chi_5_griffiths");
    for (row, r) in step1.rows.iter_mut().zip(&report.step1_table) {
        row.push(witness_cell(r, Rule::Griffiths, "chi(E(5))"));
    }
    sections.push(step1);

    sections.push(Section {
        name: "step2_results",
        columns: vec!["e", "a", "b", "chi_minus_2", "va", "vb", "status", "result"],
        rows: report
            .step2_results
            .iter()
            .map(|r| {
                let [status, result] = status_cells(&r.status);
                vec![
                    Cell::Int(r.data.e),
                    Cell::Int(r.data.a),
                    Cell::Int(r.data.b),
                    witness_cell(r, Rule::LePotier, "chi(E(-2))"),
                    witness_cell(r, Rule::SectionZeroLocus, "a+j(e+j), j=2"),
                    witness_cell(r, Rule::SectionZeroLocus, "b+j(e+j), j=2"),
                    status,
                    result,
                ]
            })
            .collect(),
    });

    sections.push(Section {
        name: "step3_table",
        columns: vec!["e", "a", "b", "chi_p3_minus_1", "status", "result"],
        rows: report
            .step3_table
            .iter()
            .map(|row| {
                let [status, result] = status_cells(&row.record.status);
                vec![
                    Cell::Int(row.data.e),
                    Cell::Int(row.data.a),
                    Cell::Int(row.data.b),
                    Cell::Rat(row.chi_p3_minus_one.clone()),
                    status,
                    result,
                ]
            })
            .collect(),
    });

    sections.push(Section {
        name: "step4_results",
        columns: vec!["e", "a", "b", "chi_p3", "k", "r", "status", "result"],
        rows: report
            .step4_results
            .iter()
            .map(|row| {
                let [status, result] = status_cells(&row.record.status);
                vec![
                    Cell::Int(row.data.e),
                    Cell::Int(row.data.a),
                    Cell::Int(row.data.b),
                    Cell::Rat(row.chi_p3.clone()),
                    Cell::Int(row.p3_splitting.p),
                    Cell::Int(row.p3_splitting.q),
                    status,
                    result,
                ]
            })
            .collect(),
    });

    sections.push(Section {
        name: "rules",
        columns: vec!["rule", "status", "citation"],
        rows: RULES
            .iter()
            .map(|rule| {
                vec![
                    text(rule.name()),
                    text(if rule.is_cited() {
                        "cited, not verified"
                    } else {
                        "computed"
                    }),
                    text(rule.citation()),
                ]
            })
            .collect(),
    });

    sections.push(Section {
        name: "final_list",
        columns: vec!["e", "a", "b", "kind", "p", "q", "bundle"],
        rows: report
            .final_list
            .iter()
            .map(|entry| {
                let d = entry.data;
                let (kind, p, q) = match &entry.bundle {
                    BundleType::Split { splitting, .. } => {
                        ("split", Cell::Int(splitting.p), Cell::Int(splitting.q))
                    }
                    BundleType::NonSplit { .. } => ("non_split", Cell::Empty, Cell::Empty),
                };
                vec![
                    Cell::Int(d.e),
                    Cell::Int(d.a),
                    Cell::Int(d.b),
                    text(kind),
                    p,
                    q,
                    text(entry.description()),
                ]
            })
            .collect(),
    });

    Document::new(sections)
}

const RULES: [Rule; 11] = [
    Rule::Positivity,
    Rule::SchurPositivity,
    Rule::Schwarzenberger,
    Rule::Griffiths,
    Rule::LePotier,
    Rule::SectionZeroLocus,
    Rule::MinusTwoSections,
    Rule::P3Restriction,
    Rule::SectionBound,
    Rule::NoLowSections,
    Rule::UniformClassification,
];
