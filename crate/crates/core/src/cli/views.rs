//! Renderable results of the four commands. Each view prints as an aligned
//! table, CSV or versioned JSON; all orderings are fixed so equal inputs
//! give byte-identical CSV and JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::gf2n::FieldSpec;
use crate::pencil::{AlphaBetaPencil, PencilParameter, VerificationReport, VerifyMode};
use crate::pg2::{self, ClassificationRecord, Conic, VerdictKind};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldView {
    pub n: u32,
    pub modulus: String,
}

impl From<&FieldSpec> for FieldView {
    fn from(f: &FieldSpec) -> Self {
        FieldView {
            n: f.degree(),
            modulus: format!("0x{:x}", f.modulus()),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("views serialize infallibly");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRow {
    pub w: String,
    pub trace: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceTableView {
    pub schema_version: u32,
    pub field: FieldView,
    pub rows: Vec<TraceRow>,
    pub trace0: u64,
    pub trace1: u64,
}

impl TraceTableView {
    pub fn new(field: &FieldSpec) -> Self {
        let rows: Vec<TraceRow> = field
            .elements()
            .map(|w| TraceRow {
                w: w.to_string(),
                trace: w.trace_bit(),
            })
            .collect();
        let trace1 = rows.iter().filter(|r| r.trace == 1).count() as u64;
        TraceTableView {
            schema_version: SCHEMA_VERSION,
            field: field.into(),
            trace0: rows.len() as u64 - trace1,
            trace1,
            rows,
        }
    }

    /// Both trace classes have `2^(n-1)` elements.
    pub fn balanced(&self) -> bool {
        let half = 1u64 << (self.field.n - 1);
        self.trace0 == half && self.trace1 == half
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = String::new();
        match format {
            Format::Table => {
                let width = self.rows.last().map_or(1, |r| r.w.len()).max(1);
                writeln!(s, "# GF(2^{}) mod {}", self.field.n, self.field.modulus).unwrap();
                writeln!(s, "{:<width$}  D(w)", "w").unwrap();
                for r in &self.rows {
                    writeln!(s, "{:<width$}  {}", r.w, r.trace).unwrap();
                }
                writeln!(s, "trace-0: {}", self.trace0).unwrap();
                writeln!(s, "trace-1: {}", self.trace1).unwrap();
            }
            Format::Csv => {
                s.push_str("w,trace\n");
                for r in &self.rows {
                    writeln!(s, "{},{}", r.w, r.trace).unwrap();
                }
            }
            Format::Json => s = to_json(self),
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyView {
    pub schema_version: u32,
    pub field: FieldView,
    pub conic: Conic,
    #[serde(flatten)]
    pub record: ClassificationRecord,
}

impl ClassifyView {
    pub fn new(conic: &Conic) -> Self {
        ClassifyView {
            schema_version: SCHEMA_VERSION,
            field: (&conic.field()).into(),
            conic: *conic,
            record: pg2::classify(conic),
        }
    }

    pub fn parse(field: &FieldSpec, coeffs: &str) -> Result<Self> {
        Ok(Self::new(&Conic::parse(field, coeffs)?))
    }

    fn lines_joined(&self, sep: &str) -> String {
        self.record
            .lines()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = String::new();
        let r = &self.record;
        match format {
            Format::Table => {
                writeln!(s, "conic: {}", self.conic).unwrap();
                writeln!(s, "verdict: {}", r.kind()).unwrap();
                writeln!(s, "points: {}", r.point_count).unwrap();
                match r.kind() {
                    VerdictKind::RealLinePair => {
                        writeln!(s, "lines: {}", self.lines_joined(" and ")).unwrap()
                    }
                    VerdictKind::RepeatedLine => {
                        writeln!(s, "line: {}", self.lines_joined("")).unwrap()
                    }
                    VerdictKind::ImaginaryLinePair => {
                        writeln!(s, "vertex: {}", r.vertex().expect("vertex")).unwrap()
                    }
                    VerdictKind::Nondegenerate => {}
                }
            }
            Format::Csv => {
                s.push_str("verdict,point_count,lines,vertex\n");
                let vertex = r.vertex().map(|v| v.to_string()).unwrap_or_default();
                writeln!(
                    s,
                    "{},{},{},{}",
                    r.kind(),
                    r.point_count,
                    self.lines_joined(";"),
                    vertex
                )
                .unwrap();
            }
            Format::Json => s = to_json(self),
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PencilRow {
    pub param: PencilParameter,
    pub conic: Conic,
    pub verdict: VerdictKind,
    pub point_count: u64,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PencilScanView {
    pub schema_version: u32,
    pub field: FieldView,
    pub alpha: String,
    pub beta: String,
    pub admissible: bool,
    pub c3_parameter: PencilParameter,
    pub gamma: String,
    pub rows: Vec<PencilRow>,
    pub degenerate_count: usize,
}

impl PencilScanView {
    pub fn new(pencil: &AlphaBetaPencil) -> Self {
        let rows: Vec<PencilRow> = pencil
            .pencil()
            .scan()
            .into_iter()
            .map(|(param, conic, record)| PencilRow {
                param,
                conic,
                verdict: record.kind(),
                point_count: record.point_count,
                degenerate: record.verdict.is_degenerate(),
            })
            .collect();
        PencilScanView {
            schema_version: SCHEMA_VERSION,
            field: (&pencil.field()).into(),
            alpha: pencil.alpha().to_string(),
            beta: pencil.beta().to_string(),
            admissible: pencil.is_admissible(),
            c3_parameter: pencil.c3_parameter(),
            gamma: pencil.gamma().to_string(),
            degenerate_count: rows.iter().filter(|r| r.degenerate).count(),
            rows,
        }
    }

    pub fn parse(field: &FieldSpec, alpha: &str, beta: &str) -> Result<Self> {
        let pencil = AlphaBetaPencil::new(field.parse_element(alpha)?, field.parse_element(beta)?)?;
        Ok(Self::new(&pencil))
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = String::new();
        match format {
            Format::Table => {
                writeln!(
                    s,
                    "# pencil alpha={} beta={} over GF(2^{}) mod {} ({})",
                    self.alpha,
                    self.beta,
                    self.field.n,
                    self.field.modulus,
                    if self.admissible {
                        "admissible"
                    } else {
                        "not admissible"
                    }
                )
                .unwrap();
                let pw = self
                    .rows
                    .iter()
                    .map(|r| r.param.to_string().len())
                    .max()
                    .unwrap_or(5)
                    .max(5);
                let cw = self
                    .rows
                    .iter()
                    .map(|r| r.conic.to_string().len())
                    .max()
                    .unwrap_or(5)
                    .max(5);
                writeln!(
                    s,
                    "{:<pw$}  {:<cw$}  {:<17}  {:>6}  degenerate",
                    "param", "conic", "verdict", "points"
                )
                .unwrap();
                for r in &self.rows {
                    writeln!(
                        s,
                        "{:<pw$}  {:<cw$}  {:<17}  {:>6}  {}",
                        r.param.to_string(),
                        r.conic.to_string(),
                        r.verdict.name(),
                        r.point_count,
                        if r.degenerate { "*" } else { "" }
                    )
                    .unwrap();
                }
                writeln!(s, "degenerate members: {}", self.degenerate_count).unwrap();
                writeln!(
                    s,
                    "third member parameter (beta^2:alpha^2): {}",
                    self.c3_parameter
                )
                .unwrap();
            }
            Format::Csv => {
                s.push_str("param,a_xx,a_yy,a_zz,a_xy,a_xz,a_yz,verdict,point_count,degenerate\n");
                for r in &self.rows {
                    writeln!(
                        s,
                        "{},{},{},{},{}",
                        r.param, r.conic, r.verdict, r.point_count, r.degenerate
                    )
                    .unwrap();
                }
            }
            Format::Json => s = to_json(self),
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyView {
    pub schema_version: u32,
    pub field: FieldView,
    pub mode: VerifyMode,
    pub geometry: bool,
    pub ordered_pairs: u64,
    pub unordered_pairs: u64,
    pub trace_zero: u64,
    pub histogram: BTreeMap<VerdictKind, u64>,
    pub falsifier_count: u64,
    pub hypothesis_violations: u64,
    pub failures: u64,
    pub vacuous: bool,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<crate::pencil::verify::Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<crate::pencil::PairRow>,
    #[serde(skip)]
    elapsed_display: f64,
}

impl VerifyView {
    /// `timing` controls whether elapsed time enters CSV and JSON output.
    pub fn new(report: &VerificationReport, timing: bool) -> Self {
        let ms = report.elapsed.as_secs_f64() * 1e3;
        VerifyView {
            schema_version: SCHEMA_VERSION,
            field: (&report.field).into(),
            mode: report.mode,
            geometry: report.geometry,
            ordered_pairs: report.ordered_pairs,
            unordered_pairs: report.unordered_pairs,
            trace_zero: report.trace_zero,
            histogram: if report.geometry {
                VerdictKind::ALL
                    .iter()
                    .map(|&k| (k, report.histogram_count(k)))
                    .collect()
            } else {
                BTreeMap::new()
            },
            falsifier_count: report.falsifier_count,
            hypothesis_violations: report.hypothesis_violations,
            failures: report.failures,
            vacuous: report.is_vacuous(),
            passed: report.passed(),
            first_counterexample: report.first_counterexample.clone(),
            elapsed_ms: timing.then_some(ms),
            rows: report.rows.clone(),
            elapsed_display: ms,
        }
    }

    fn mode_text(&self) -> String {
        match self.mode {
            VerifyMode::Exhaustive => "exhaustive".into(),
            VerifyMode::Sample { count, seed } => format!("sample({count}) seed={seed}"),
        }
    }

    fn status(&self) -> &'static str {
        match (self.passed, self.vacuous) {
            (true, true) => "PASS (vacuous pass: no admissible pairs)",
            (true, false) => "PASS",
            (false, _) => "FAIL",
        }
    }

    fn hist(&self, kind: VerdictKind) -> u64 {
        self.histogram.get(&kind).copied().unwrap_or(0)
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = String::new();
        match format {
            Format::Table => {
                writeln!(
                    s,
                    "field: GF(2^{}) mod {}",
                    self.field.n, self.field.modulus
                )
                .unwrap();
                writeln!(s, "mode: {}", self.mode_text()).unwrap();
                writeln!(s, "ordered pairs: {}", self.ordered_pairs).unwrap();
                writeln!(s, "unordered pairs: {}", self.unordered_pairs).unwrap();
                writeln!(s, "D(1/gamma^2) = 0: {}", self.trace_zero).unwrap();
                if self.geometry {
                    let hist: Vec<String> = self
                        .histogram
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect();
                    writeln!(s, "C3 verdicts: {}", hist.join(" ")).unwrap();
                    writeln!(
                        s,
                        "falsifier count (C3 imaginary): {}",
                        self.falsifier_count
                    )
                    .unwrap();
                    writeln!(s, "hypothesis violations: {}", self.hypothesis_violations).unwrap();
                } else {
                    writeln!(s, "geometry: skipped").unwrap();
                }
                if let Some(c) = &self.first_counterexample {
                    writeln!(
                        s,
                        "first counterexample: alpha={} beta={} ({})",
                        c.alpha, c.beta, c.reason
                    )
                    .unwrap();
                }
                writeln!(s, "elapsed: {:.3} ms", self.elapsed_display).unwrap();
                writeln!(s, "status: {}", self.status()).unwrap();
                if !self.rows.is_empty() {
                    writeln!(s, "alpha,beta,gamma,trace,verdict,point_count").unwrap();
                    self.write_rows(&mut s);
                }
            }
            Format::Csv if !self.rows.is_empty() => {
                s.push_str("alpha,beta,gamma,trace,verdict,point_count\n");
                self.write_rows(&mut s);
            }
            Format::Csv => {
                s.push_str(
                    "n,modulus,mode,ordered_pairs,unordered_pairs,trace_zero,\
                     nondegenerate,real_line_pair,repeated_line,imaginary_line_pair,\
                     falsifier_count,hypothesis_violations,failures,status",
                );
                if self.elapsed_ms.is_some() {
                    s.push_str(",elapsed_ms");
                }
                s.push('\n');
                write!(
                    s,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                    self.field.n,
                    self.field.modulus,
                    self.mode_text(),
                    self.ordered_pairs,
                    self.unordered_pairs,
                    self.trace_zero,
                    self.hist(VerdictKind::Nondegenerate),
                    self.hist(VerdictKind::RealLinePair),
                    self.hist(VerdictKind::RepeatedLine),
                    self.hist(VerdictKind::ImaginaryLinePair),
                    self.falsifier_count,
                    self.hypothesis_violations,
                    self.failures,
                    if self.passed { "pass" } else { "fail" }
                )
                .unwrap();
                if let Some(ms) = self.elapsed_ms {
                    write!(s, ",{ms:.3}").unwrap();
                }
                s.push('\n');
            }
            Format::Json => s = to_json(self),
        }
        s
    }

    fn write_rows(&self, s: &mut String) {
        for r in &self.rows {
            writeln!(
                s,
                "{},{},{},{},{},{}",
                r.alpha,
                r.beta,
                r.gamma,
                r.trace,
                r.verdict.map(|v| v.name()).unwrap_or(""),
                r.point_count.map(|c| c.to_string()).unwrap_or_default()
            )
            .unwrap();
        }
    }
}
