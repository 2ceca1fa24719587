use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{alternative_ids, SimulationConfig};
use crate::measure::Measure;

/// How `tie_count` is defined; echoed into every report.
pub const TIE_COUNT_RULE: &str = "unordered pairs of alternatives with exactly equal measure value, over all ranks, summed over scenarios";

const BAR_WIDTH: u64 = 50;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureReport {
    pub measure: Measure,
    /// indexed by alternative; every argmax-tied alternative is credited
    pub top_frequency: Vec<u64>,
    pub tie_count: u64,
    /// scenarios whose maximum was shared by two or more alternatives
    pub top_tie_scenarios: u64,
}

impl MeasureReport {
    pub fn total_credits(&self) -> u64 {
        self.top_frequency.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub config: SimulationConfig,
    pub tie_count_rule: String,
    pub measures: Vec<MeasureReport>,
}

impl SimulationReport {
    pub fn new(config: SimulationConfig, measures: Vec<MeasureReport>) -> Self {
        SimulationReport {
            config,
            tie_count_rule: TIE_COUNT_RULE.to_string(),
            measures,
        }
    }

    pub fn measure(&self, measure: Measure) -> Option<&MeasureReport> {
        self.measures.iter().find(|m| m.measure == measure)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    /// per-alternative bars scaled to the largest count
    TextHistogram,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "text" | "histogram" | "table" => Ok(ReportFormat::TextHistogram),
            _ => Err(format!("unknown report format {s:?} (expected csv, json or text)")),
        }
    }
}

pub fn emit_report(report: &SimulationReport, format: ReportFormat) -> Vec<u8> {
    let ids = alternative_ids(report.config.n_alternatives);
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(report).expect("report serializes");
            out.push(b'\n');
            out
        }
        ReportFormat::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            let header = ["measure", "scenarios", "seed", "tie_count", "top_tie_scenarios"]
                .into_iter()
                .map(String::from)
                .chain(ids.iter().cloned());
            writer.write_record(header).expect("write to memory");
            for m in &report.measures {
                let row = [
                    m.measure.to_string(),
                    report.config.scenarios.to_string(),
                    report.config.seed.to_string(),
                    m.tie_count.to_string(),
                    m.top_tie_scenarios.to_string(),
                ]
                .into_iter()
                .chain(m.top_frequency.iter().map(u64::to_string));
                writer.write_record(row).expect("write to memory");
            }
            writer.into_inner().expect("flush to memory")
        }
        ReportFormat::TextHistogram => {
            let c = &report.config;
            let mut out = format!(
                "scenarios={} alternatives={} attributes={} grid_step={} seed={}\n",
                c.scenarios, c.n_alternatives, c.n_attributes, c.grid_step, c.seed
            );
            let id_width = ids.iter().map(|s| s.chars().count()).max().unwrap_or(0);
            for m in &report.measures {
                let max = m.top_frequency.iter().copied().max().unwrap_or(0);
                let count_width = max.to_string().len();
                let _ = writeln!(
                    out,
                    "\n{}  ties={}  most-probable credits={}  scenarios with a shared top={}",
                    m.measure,
                    m.tie_count,
                    m.total_credits(),
                    m.top_tie_scenarios
                );
                for (id, &count) in ids.iter().zip(&m.top_frequency) {
                    let bar = (count * BAR_WIDTH + max / 2).checked_div(max).unwrap_or(0);
                    let line = format!(
                        "  {id:<id_width$}  {count:>count_width$}  {}",
                        "#".repeat(bar as usize)
                    );
                    out.push_str(line.trim_end());
                    out.push('\n');
                }
            }
            out.into_bytes()
        }
    }
}

pub fn parse_report_json(bytes: &[u8]) -> Result<SimulationReport, serde_json::Error> {
    serde_json::from_slice(bytes)
}
