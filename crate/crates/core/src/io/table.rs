use serde::{Deserialize, Serialize};

use super::text::render_columns;
use super::{TableFormat, DECIMAL_PLACES};
use crate::explain::ExplanationReport;
use crate::rank::DecisionTable;

/// Wire shape of one decision-table row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionRowRecord {
    pub rank: usize,
    pub tie_group: usize,
    pub alternative: String,
    pub dom: u64,
    pub sub: u64,
    pub equity: u64,
    /// exact `p/q`
    pub gamma1: String,
    pub gamma1_decimal: String,
    pub gamma2: i64,
    pub gamma3: String,
    pub gamma3_decimal: String,
}

/// Wire shape of a decision table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionTableRecord {
    pub measure: String,
    pub source_digest: String,
    pub rows: Vec<DecisionRowRecord>,
}

impl From<&DecisionTable> for DecisionTableRecord {
    fn from(table: &DecisionTable) -> Self {
        DecisionTableRecord {
            measure: table.measure.to_string(),
            source_digest: table.source_digest.clone(),
            rows: table
                .rows
                .iter()
                .map(|r| DecisionRowRecord {
                    rank: r.rank,
                    tie_group: r.tie_group,
                    alternative: r.alternative.clone(),
                    dom: r.scores.dom,
                    sub: r.scores.sub,
                    equity: r.scores.equity,
                    gamma1: r.values.gamma1.to_string(),
                    gamma1_decimal: r.values.gamma1.to_decimal(DECIMAL_PLACES),
                    gamma2: r.values.gamma2,
                    gamma3: r.values.gamma3.to_string(),
                    gamma3_decimal: r.values.gamma3.to_decimal(DECIMAL_PLACES),
                })
                .collect(),
        }
    }
}

const TABLE_COLUMNS: [&str; 11] = [
    "rank",
    "tie_group",
    "alternative",
    "dom",
    "sub",
    "equity",
    "gamma1",
    "gamma1_decimal",
    "gamma2",
    "gamma3",
    "gamma3_decimal",
];

fn row_cells(r: &DecisionRowRecord) -> Vec<String> {
    vec![
        r.rank.to_string(),
        r.tie_group.to_string(),
        r.alternative.clone(),
        r.dom.to_string(),
        r.sub.to_string(),
        r.equity.to_string(),
        r.gamma1.clone(),
        r.gamma1_decimal.clone(),
        r.gamma2.to_string(),
        r.gamma3.clone(),
        r.gamma3_decimal.clone(),
    ]
}

fn write_csv(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> Vec<u8> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    writer.write_record(header).expect("write to memory");
    for row in rows {
        writer.write_record(&row).expect("write to memory");
    }
    writer.into_inner().expect("flush to memory")
}

fn pretty_json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("record serializes");
    out.push(b'\n');
    out
}

/// Serializes a decision table. Rows appear in rank order; output bytes depend
/// only on the table.
pub fn emit_decision_table(table: &DecisionTable, format: TableFormat) -> Vec<u8> {
    let record = DecisionTableRecord::from(table);
    match format {
        TableFormat::Json => pretty_json(&record),
        TableFormat::Csv => write_csv(&TABLE_COLUMNS, record.rows.iter().map(row_cells)),
        TableFormat::Text => {
            let header = [
                "rank", "tie", "alternative", "dom", "sub", "equity", "gamma1", "", "gamma2", "gamma3", "",
            ];
            let rows: Vec<Vec<String>> = record
                .rows
                .iter()
                .map(|r| {
                    let mut cells = row_cells(r);
                    cells[7] = format!("({})", cells[7]);
                    cells[10] = format!("({})", cells[10]);
                    cells
                })
                .collect();
            let mut out = format!("measure: {}  source: {}\n", record.measure, &record.source_digest[..12]);
            out.push_str(&render_columns(&header, &rows));
            out.into_bytes()
        }
    }
}

pub fn parse_decision_table_json(bytes: &[u8]) -> Result<DecisionTableRecord, serde_json::Error> {
    serde_json::from_slice(bytes)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpponentRecord {
    pub opponent: String,
    pub rho: Vec<String>,
    pub chi: Vec<String>,
    pub eq: Vec<String>,
}

/// Wire shape of an explanation report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplanationRecord {
    pub alternative: String,
    /// attribute id → label, for attributes that carry one
    pub labels: std::collections::BTreeMap<String, String>,
    pub opponents: Vec<OpponentRecord>,
    pub dom: u64,
    pub sub: u64,
    pub equity: u64,
    pub gamma1: String,
    pub gamma1_decimal: String,
    pub gamma2: i64,
    pub gamma3: String,
    pub gamma3_decimal: String,
}

impl From<&ExplanationReport> for ExplanationRecord {
    fn from(r: &ExplanationReport) -> Self {
        ExplanationRecord {
            alternative: r.alternative.clone(),
            labels: r
                .attributes
                .iter()
                .filter_map(|a| a.label.clone().map(|l| (a.id.clone(), l)))
                .collect(),
            opponents: r
                .opponents
                .iter()
                .map(|o| OpponentRecord {
                    opponent: o.opponent.clone(),
                    rho: o.rho.clone(),
                    chi: o.chi.clone(),
                    eq: o.eq.clone(),
                })
                .collect(),
            dom: r.scores.dom,
            sub: r.scores.sub,
            equity: r.scores.equity,
            gamma1: r.values.gamma1.to_string(),
            gamma1_decimal: r.values.gamma1.to_decimal(DECIMAL_PLACES),
            gamma2: r.values.gamma2,
            gamma3: r.values.gamma3.to_string(),
            gamma3_decimal: r.values.gamma3.to_decimal(DECIMAL_PLACES),
        }
    }
}

fn set_text(ids: &[String]) -> String {
    format!("{{{}}}", ids.join(","))
}

pub fn emit_explanation(report: &ExplanationReport, format: TableFormat) -> Vec<u8> {
    let record = ExplanationRecord::from(report);
    match format {
        TableFormat::Json => pretty_json(&record),
        TableFormat::Csv => write_csv(
            &["alternative", "opponent", "rho", "chi", "eq"],
            record.opponents.iter().map(|o| {
                vec![
                    record.alternative.clone(),
                    o.opponent.clone(),
                    o.rho.join(" "),
                    o.chi.join(" "),
                    o.eq.join(" "),
                ]
            }),
        ),
        TableFormat::Text => {
            let mut out = format!("alternative: {}\n", record.alternative);
            if record.opponents.is_empty() {
                out.push_str("no opponents\n");
            } else {
                let rows: Vec<Vec<String>> = record
                    .opponents
                    .iter()
                    .map(|o| vec![o.opponent.clone(), set_text(&o.rho), set_text(&o.chi), set_text(&o.eq)])
                    .collect();
                out.push_str(&render_columns(&["opponent", "rho", "chi", "eq"], &rows));
            }
            out.push_str(&format!(
                "dom={} sub={} equity={}\ngamma1={} ({})  gamma2={}  gamma3={} ({})\n",
                record.dom,
                record.sub,
                record.equity,
                record.gamma1,
                record.gamma1_decimal,
                record.gamma2,
                record.gamma3,
                record.gamma3_decimal
            ));
            if !record.labels.is_empty() {
                out.push_str("attributes:\n");
                for a in &report.attributes {
                    if let Some(label) = &a.label {
                        out.push_str(&format!("  {} = {}\n", a.id, label));
                    }
                }
            }
            out.into_bytes()
        }
    }
}
