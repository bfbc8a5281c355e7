//! Regenerated tables and their Markdown, CSV and JSON forms.
//!
//! Every cell is computed from the catalog. Cells where the published text
//! disagrees with the metric-consistent value keep the computed value and
//! carry the published text as a footnote. All three formats round-trip.

use serde::{Deserialize, Serialize};

use crate::catalog::{enumerate_cases, expected_dirac_coeffs, known_discrepancies, AlgebraCase, AlgebraKind};
use crate::error::{Error, Result};
use crate::gauge::example_matrices;
use crate::qdirac::SIGNS;
use crate::symbolic::SymbolicCoeff;

const AXES: [&str; 4] = ["0", "x", "y", "z"];
const DERIVS: [&str; 4] = ["d_t", "d_x", "d_y", "d_z"];
const METRIC_TUPLE: &str = "(g^00, g^11, g^22, g^33)";
const GAUGE_EQ: &str = "q-gauge Dirac equation";
const DIRAC_OP: &str = "Dirac operator";
const DIAG: [&str; 4] = ["g^00", "g^11", "g^22", "g^33"];
const OFF: [&str; 3] = ["g^01", "g^02", "g^03"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Footnote {
    /// Zero-based row.
    pub row: usize,
    pub column: String,
    pub published: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub id: String,
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub footnotes: Vec<Footnote>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

impl TableFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "markdown" | "md" => Some(Self::Markdown),
            "csv" => Some(Self::Csv),
            "json" => Some(Self::Json),
            _ => None,
        }
    }

    pub fn extension(&self) -> &'static str {
        match self {
            Self::Markdown => "md",
            Self::Csv => "csv",
            Self::Json => "json",
        }
    }
}

/// `γ^0 q_0 ∂_t − γ^x q_x ∂_x − …` over the active directions.
pub fn operator_text(coeffs: &[SymbolicCoeff; 4]) -> String {
    signed_terms(coeffs, "")
}

/// The gauged equation `(i γ^0 q_0 ∂_t − … − e γ^μ A_μ − m) ψ = 0`.
pub fn gauge_equation_text(coeffs: &[SymbolicCoeff; 4]) -> String {
    format!("({} - e*gamma^mu*A_mu - m)psi = 0", signed_terms(coeffs, "i*"))
}

fn signed_terms(coeffs: &[SymbolicCoeff; 4], prefix: &str) -> String {
    let mut out = String::new();
    for mu in 0..4 {
        let c = &coeffs[mu];
        if c.is_zero() {
            continue;
        }
        let mut term = format!("{prefix}gamma^{}", AXES[mu]);
        if let Some(m) = c.magnitude_text() {
            term.push('*');
            term.push_str(&m);
        }
        term.push('*');
        term.push_str(DERIVS[mu]);
        let negative = (SIGNS[mu] < 0.0) != c.is_negative();
        match (out.is_empty(), negative) {
            (true, false) => out.push_str(&term),
            (true, true) => out.push_str(&format!("-{term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    out
}

/// `|g^00| d_t^2 − Σ_i |g^ii| d_i^2`.
pub fn box_text(metric: &[SymbolicCoeff; 4]) -> String {
    let mut out = String::new();
    for mu in 0..4 {
        let g = metric[mu].abs();
        if g.is_zero() {
            continue;
        }
        let term = match g.magnitude_text() {
            Some(m) => format!("{m}*{}^2", DERIVS[mu]),
            None => format!("{}^2", DERIVS[mu]),
        };
        match (out.is_empty(), SIGNS[mu] < 0.0) {
            (true, false) => out.push_str(&term),
            (true, true) => out.push_str(&format!("-{term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    out
}

pub fn metric_tuple(metric: &[SymbolicCoeff; 4]) -> String {
    format!("({})", metric.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

const TABLES: [(&str, &str); 18] = [
    ("new1", "Metric components and q-gauge Dirac equation, first relation of the new q-Heisenberg algebra"),
    ("new2.m1", "Metric components and q-gauge Dirac equation, second relation of the new q-Heisenberg algebra, M1"),
    ("new2.m2", "Metric components and q-gauge Dirac equation, second relation of the new q-Heisenberg algebra, M2"),
    ("qgen", "Metric components and q-gauge Dirac equation, q-generalized Heisenberg algebra"),
    ("qhbar", "Metric components and q-gauge Dirac equation, q-hbar Heisenberg algebra"),
    ("examples44", "Deformed field strength for constant backgrounds: entries of F^(q)_{mu nu}"),
    ("app.qhbar", "Metric components g^{mu nu}, q-hbar Heisenberg algebra"),
    ("app.new1", "Metric components, first relation of the new q-Heisenberg algebra"),
    ("app.new2.m1", "Metric components, second relation of the new q-Heisenberg algebra in M1"),
    ("app.new2.m2", "Metric components, second relation of the new q-Heisenberg algebra in M2"),
    ("app.new3", "Metric components, third relation of the new q-Heisenberg algebra"),
    ("app.dirac.new1", "Dirac operators, first relation of the new q-Heisenberg algebra"),
    ("app.dirac.new2.m1", "Dirac operators, second relation of the new q-Heisenberg algebra in M1"),
    ("app.dirac.new2.m2", "Dirac operators, second relation of the new q-Heisenberg algebra in M2"),
    ("app.dirac.new3", "Dirac operators, third relation of the new q-Heisenberg algebra"),
    ("app.dirac.qgen", "Dirac operator, q-generalized Heisenberg algebra"),
    ("app.dirac.qhbar", "Dirac operators, q-hbar Heisenberg algebra"),
    ("app.simple", "Dirac operator and deformed d'Alembertian, simple distinguished case"),
];

pub fn table_ids() -> Vec<&'static str> {
    TABLES.iter().map(|(id, _)| *id).collect()
}

fn cases_of(kind: AlgebraKind) -> Vec<AlgebraCase> {
    enumerate_cases().into_iter().filter(|c| c.algebra == kind).collect()
}

fn index_cells(case: &AlgebraCase) -> Vec<String> {
    let (a, b) = case.indices.pair().expect("indexed case");
    vec![a.to_string(), b.to_string()]
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn diag_cells(case: &AlgebraCase) -> Vec<String> {
    case.metric_coeffs.iter().map(ToString::to_string).collect()
}

/// Rows, headers and cells for one table.
pub fn build_table(id: &str) -> Result<TableDocument> {
    let title = TABLES
        .iter()
        .find(|(t, _)| *t == id)
        .map(|(_, title)| title.to_string())
        .ok_or_else(|| Error::UnknownTable(id.to_string()))?;
    let eq_row = |c: &AlgebraCase| {
        let mut r = index_cells(c);
        r.push(metric_tuple(&c.metric_coeffs));
        r.push(gauge_equation_text(&expected_dirac_coeffs(c)));
        r
    };
    let dirac_row = |c: &AlgebraCase| {
        let mut r = index_cells(c);
        r.extend(diag_cells(c));
        r.push(operator_text(&expected_dirac_coeffs(c)));
        r
    };
    let metric_row = |c: &AlgebraCase| {
        let mut r = index_cells(c);
        r.extend(diag_cells(c));
        r
    };
    let with_variant = |c: &AlgebraCase, mut r: Vec<String>| {
        r.insert(0, c.variant.expect("variant").to_string());
        r
    };
    let (headers, rows): (Vec<String>, Vec<Vec<String>>) = match id {
        "new1" => (
            strings(&["Algebra", "alpha", "beta", METRIC_TUPLE, GAUGE_EQ]),
            cases_of(AlgebraKind::NewQRel1)
                .iter()
                .filter(|c| !c.appendix_only)
                .map(|c| with_variant(c, eq_row(c)))
                .collect(),
        ),
        "new2.m1" | "new2.m2" => {
            let kind = if id == "new2.m1" { AlgebraKind::NewQRel2M1 } else { AlgebraKind::NewQRel2M2 };
            (strings(&["alpha", "lambda", METRIC_TUPLE, GAUGE_EQ]), cases_of(kind).iter().map(eq_row).collect())
        }
        "qgen" => {
            let c = &cases_of(AlgebraKind::QGeneralized)[0];
            (
                strings(&[METRIC_TUPLE, GAUGE_EQ]),
                vec![vec![metric_tuple(&c.metric_coeffs), gauge_equation_text(&expected_dirac_coeffs(c))]],
            )
        }
        "qhbar" => (
            strings(&["j", "k", METRIC_TUPLE, GAUGE_EQ]),
            cases_of(AlgebraKind::QHbar).iter().filter(|c| c.is_supported()).map(eq_row).collect(),
        ),
        "examples44" => {
            let mut rows = Vec::new();
            for ex in example_matrices() {
                for mu in 0..4 {
                    let mut r = vec![ex.label.clone(), ["t", "x", "y", "z"][mu].to_string()];
                    r.extend((0..4).map(|nu| ex.entry(mu, nu)));
                    rows.push(r);
                }
            }
            (strings(&["example", "row", "t", "x", "y", "z"]), rows)
        }
        "app.qhbar" => {
            let mut h = strings(&["j", "k"]);
            h.extend(strings(&DIAG));
            h.extend(strings(&OFF));
            let rows = cases_of(AlgebraKind::QHbar)
                .iter()
                .map(|c| {
                    let mut r = metric_row(c);
                    r.extend(c.off_diagonal.iter().map(ToString::to_string));
                    r
                })
                .collect();
            (h, rows)
        }
        "app.new1" => {
            let mut h = strings(&["Algebra", "alpha", "beta"]);
            h.extend(strings(&DIAG));
            h.extend(strings(&OFF));
            let rows = cases_of(AlgebraKind::NewQRel1)
                .iter()
                .map(|c| {
                    let mut r = with_variant(c, metric_row(c));
                    r.extend(c.off_diagonal.iter().map(ToString::to_string));
                    r
                })
                .collect();
            (h, rows)
        }
        "app.new2.m1" | "app.new2.m2" | "app.new3" => {
            let (kind, idx) = match id {
                "app.new2.m1" => (AlgebraKind::NewQRel2M1, ["alpha", "lambda"]),
                "app.new2.m2" => (AlgebraKind::NewQRel2M2, ["alpha", "lambda"]),
                _ => (AlgebraKind::NewQRel3, ["lambda", "beta"]),
            };
            let mut h = strings(&idx);
            h.extend(strings(&DIAG));
            (h, cases_of(kind).iter().map(metric_row).collect())
        }
        "app.dirac.new1" | "app.dirac.new2.m1" | "app.dirac.new2.m2" | "app.dirac.new3" | "app.dirac.qhbar" => {
            let (kind, idx) = match id {
                "app.dirac.new1" => (AlgebraKind::NewQRel1, ["alpha", "beta"]),
                "app.dirac.new2.m1" => (AlgebraKind::NewQRel2M1, ["alpha", "lambda"]),
                "app.dirac.new2.m2" => (AlgebraKind::NewQRel2M2, ["alpha", "lambda"]),
                "app.dirac.new3" => (AlgebraKind::NewQRel3, ["lambda", "beta"]),
                _ => (AlgebraKind::QHbar, ["j", "k"]),
            };
            let mut h = strings(&idx);
            h.extend(strings(&DIAG));
            h.push(DIRAC_OP.to_string());
            (h, cases_of(kind).iter().filter(|c| c.is_supported()).map(dirac_row).collect())
        }
        "app.dirac.qgen" => {
            let c = &cases_of(AlgebraKind::QGeneralized)[0];
            (
                strings(&[METRIC_TUPLE, DIRAC_OP]),
                vec![vec![metric_tuple(&c.metric_coeffs), operator_text(&expected_dirac_coeffs(c))]],
            )
        }
        "app.simple" => {
            let c = &cases_of(AlgebraKind::SimpleDistinguished)[0];
            (
                strings(&[METRIC_TUPLE, DIRAC_OP, "Box_q"]),
                vec![vec![
                    metric_tuple(&c.metric_coeffs),
                    operator_text(&expected_dirac_coeffs(c)),
                    box_text(&c.metric_coeffs),
                ]],
            )
        }
        _ => unreachable!("id checked above"),
    };
    let footnotes = known_discrepancies()
        .into_iter()
        .filter(|d| d.table == id)
        .map(|d| Footnote {
            row: d.row,
            column: d.column.to_string(),
            published: d.published.to_string(),
            note: d.note.to_string(),
        })
        .collect();
    Ok(TableDocument { id: id.to_string(), title, headers, rows, footnotes })
}

pub fn build_all() -> Vec<TableDocument> {
    table_ids().into_iter().map(|id| build_table(id).expect("known id")).collect()
}

fn needs_code(cell: &str) -> bool {
    cell.contains(['*', '^', '_'])
}

fn strip_code(cell: &str) -> &str {
    cell.strip_prefix('`').and_then(|c| c.strip_suffix('`')).unwrap_or(cell)
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl TableDocument {
    pub fn column(&self, name: &str) -> Option<usize> {
        self.headers.iter().position(|h| h == name)
    }

    pub fn cell(&self, row: usize, column: &str) -> Option<&str> {
        Some(self.rows.get(row)?.get(self.column(column)?)?.as_str())
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Markdown => self.to_markdown(),
            TableFormat::Csv => self.to_csv(),
            TableFormat::Json => self.to_json(),
        }
    }

    pub fn parse(format: TableFormat, text: &str) -> Result<Self> {
        match format {
            TableFormat::Markdown => Self::from_markdown(text),
            TableFormat::Csv => Self::from_csv(text),
            TableFormat::Json => Self::from_json(text),
        }
    }

    pub fn to_markdown(&self) -> String {
        let fmt_row = |cells: &[String]| {
            let body: Vec<String> =
                cells.iter().map(|c| if needs_code(c) { format!("`{c}`") } else { c.clone() }).collect();
            format!("| {} |\n", body.join(" | "))
        };
        let mut out = format!("## {}: {}\n\n", self.id, self.title);
        out.push_str(&fmt_row(&self.headers));
        out.push_str(&format!("|{}\n", "---|".repeat(self.headers.len())));
        for r in &self.rows {
            out.push_str(&fmt_row(r));
        }
        if !self.footnotes.is_empty() {
            out.push_str("\nNotes:\n");
            for f in &self.footnotes {
                out.push_str(&format!("- row {}, {}: published `{}`; {}\n", f.row + 1, f.column, f.published, f.note));
            }
        }
        out
    }

    pub fn from_markdown(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let head = lines.next().ok_or_else(|| parse_err("empty table"))?;
        let (id, title) = head
            .strip_prefix("## ")
            .and_then(|h| h.split_once(": "))
            .ok_or_else(|| parse_err(format!("bad table heading `{head}`")))?;
        let split = |line: &str| -> Result<Vec<String>> {
            let inner = line
                .strip_prefix("| ")
                .and_then(|l| l.strip_suffix(" |"))
                .ok_or_else(|| parse_err(format!("bad table row `{line}`")))?;
            Ok(inner.split(" | ").map(|c| strip_code(c).to_string()).collect())
        };
        let mut body = lines.skip_while(|l| l.is_empty());
        let headers = split(body.next().ok_or_else(|| parse_err("missing header row"))?)?;
        body.next().ok_or_else(|| parse_err("missing separator row"))?;
        let mut rows = Vec::new();
        let mut footnotes = Vec::new();
        let mut in_notes = false;
        for line in body {
            if line.is_empty() {
                continue;
            }
            if line == "Notes:" {
                in_notes = true;
            } else if in_notes {
                footnotes.push(parse_note(line)?);
            } else {
                let r = split(line)?;
                if r.len() != headers.len() {
                    return Err(parse_err(format!("row has {} cells, expected {}", r.len(), headers.len())));
                }
                rows.push(r);
            }
        }
        Ok(Self { id: id.to_string(), title: title.to_string(), headers, rows, footnotes })
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("# id: {}\n# title: {}\n", self.id, self.title);
        for f in &self.footnotes {
            let fields = [(f.row + 1).to_string(), f.column.clone(), f.published.clone(), f.note.clone()];
            out.push_str(&format!("# note: {}", csv_line(&fields)));
        }
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf-8"));
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut id = None;
        let mut title = None;
        let mut footnotes = Vec::new();
        let mut body = String::new();
        for line in text.lines() {
            if let Some(v) = line.strip_prefix("# id: ") {
                id = Some(v.to_string());
            } else if let Some(v) = line.strip_prefix("# title: ") {
                title = Some(v.to_string());
            } else if let Some(v) = line.strip_prefix("# note: ") {
                let f = parse_csv_record(v)?;
                if f.len() != 4 {
                    return Err(parse_err("note needs row, column, published text and remark"));
                }
                let row: usize = f[0].parse().map_err(|_| parse_err("bad note row"))?;
                footnotes.push(Footnote {
                    row: row.checked_sub(1).ok_or_else(|| parse_err("note rows start at 1"))?,
                    column: f[1].clone(),
                    published: f[2].clone(),
                    note: f[3].clone(),
                });
            } else {
                body.push_str(line);
                body.push('\n');
            }
        }
        let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(body.as_bytes());
        let headers = reader.headers().map_err(|e| parse_err(e.to_string()))?.iter().map(String::from).collect();
        let rows = reader
            .records()
            .map(|r| r.map(|r| r.iter().map(String::from).collect()).map_err(|e| parse_err(e.to_string())))
            .collect::<Result<Vec<Vec<String>>>>()?;
        Ok(Self {
            id: id.ok_or_else(|| parse_err("missing `# id:` line"))?,
            title: title.ok_or_else(|| parse_err("missing `# title:` line"))?,
            headers,
            rows,
            footnotes,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))
    }
}

fn csv_line(fields: &[String]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(fields).expect("in-memory write");
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn parse_csv_record(line: &str) -> Result<Vec<String>> {
    let mut r = csv::ReaderBuilder::new().has_headers(false).from_reader(line.as_bytes());
    let rec = r.records().next().ok_or_else(|| parse_err("empty note"))?.map_err(|e| parse_err(e.to_string()))?;
    Ok(rec.iter().map(String::from).collect())
}

fn parse_note(line: &str) -> Result<Footnote> {
    let bad = || parse_err(format!("bad note `{line}`"));
    let rest = line.strip_prefix("- row ").ok_or_else(bad)?;
    let (row, rest) = rest.split_once(", ").ok_or_else(bad)?;
    let (column, rest) = rest.split_once(": published `").ok_or_else(bad)?;
    let (published, note) = rest.split_once("`; ").ok_or_else(bad)?;
    let row: usize = row.parse().map_err(|_| bad())?;
    Ok(Footnote {
        row: row.checked_sub(1).ok_or_else(bad)?,
        column: column.to_string(),
        published: published.to_string(),
        note: note.to_string(),
    })
}
