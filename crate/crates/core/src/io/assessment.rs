use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Format, IoError, Location};
use crate::error::FssError;
use crate::fss::{Attribute, FuzzySoftSet};
use crate::grade::Grade;

/// A fuzzy soft set together with free-form document metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssessmentDocument {
    pub fss: FuzzySoftSet,
    pub metadata: BTreeMap<String, String>,
}

impl From<FuzzySoftSet> for AssessmentDocument {
    fn from(fss: FuzzySoftSet) -> Self {
        AssessmentDocument {
            fss,
            metadata: BTreeMap::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AttributeRecord {
    Id(String),
    Full {
        id: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
}

/// A grade cell as it appears in JSON; numbers are accepted but strings are emitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GradeCell {
    Text(String),
    Number(serde_json::Number),
}

impl GradeCell {
    fn text(&self) -> String {
        match self {
            GradeCell::Text(s) => s.clone(),
            // serde_json renders the shortest round-trip form, e.g. 0.7 -> "0.7"
            GradeCell::Number(n) => n.to_string(),
        }
    }
}

/// JSON shape of an assessment document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocumentRecord {
    pub alternatives: Vec<String>,
    pub attributes: Vec<AttributeRecord>,
    pub grades: Vec<Vec<GradeCell>>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl From<&AssessmentDocument> for DocumentRecord {
    fn from(doc: &AssessmentDocument) -> Self {
        let fss = &doc.fss;
        DocumentRecord {
            alternatives: fss.alternatives().to_vec(),
            attributes: fss
                .attributes()
                .iter()
                .map(|a| AttributeRecord::Full {
                    id: a.id.clone(),
                    label: a.label.clone(),
                })
                .collect(),
            grades: fss
                .rows()
                .map(|row| row.iter().map(|g| GradeCell::Text(g.to_string())).collect())
                .collect(),
            metadata: doc.metadata.clone(),
        }
    }
}

impl DocumentRecord {
    /// Validates the record, attaching row/column locations to grade errors.
    pub fn into_document(self) -> Result<AssessmentDocument, IoError> {
        let attributes: Vec<Attribute> = self
            .attributes
            .into_iter()
            .map(|a| match a {
                AttributeRecord::Id(id) => Attribute::new(id),
                AttributeRecord::Full { id, label } => Attribute { id, label },
            })
            .collect();
        let mut grades = Vec::with_capacity(self.grades.len());
        for (r, row) in self.grades.iter().enumerate() {
            let mut parsed = Vec::with_capacity(row.len());
            for (c, cell) in row.iter().enumerate() {
                let grade: Grade = cell.text().parse().map_err(|source| IoError::Invalid {
                    location: Location {
                        line: None,
                        row: Some(self.alternatives.get(r).cloned().unwrap_or_else(|| format!("#{}", r + 1))),
                        column: Some(attributes.get(c).map(|a| a.id.clone()).unwrap_or_else(|| format!("#{}", c + 1))),
                    },
                    source,
                })?;
                parsed.push(grade);
            }
            grades.push(parsed);
        }
        let fss = FuzzySoftSet::new(self.alternatives, attributes, grades).map_err(|source| IoError::Invalid {
            location: Location::default(),
            source,
        })?;
        Ok(AssessmentDocument {
            fss,
            metadata: self.metadata,
        })
    }
}

fn syntax(line: Option<u64>, row: Option<String>, column: Option<String>, message: impl Into<String>) -> IoError {
    IoError::Syntax {
        location: Location { line, row, column },
        message: message.into(),
    }
}

fn parse_csv(text: &[u8]) -> Result<AssessmentDocument, IoError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text);
    let mut records = reader.records();
    let header = match records.next() {
        Some(Ok(h)) => h,
        Some(Err(e)) => return Err(csv_error(&e)),
        None => return Err(syntax(Some(1), None, None, "empty document")),
    };
    if header.get(0).is_some_and(|c| !c.is_empty()) {
        return Err(syntax(Some(1), None, Some("1".into()), "first header cell must be empty"));
    }
    let attributes: Vec<String> = header.iter().skip(1).map(String::from).collect();

    let mut alternatives = Vec::new();
    let mut grades = Vec::new();
    for record in records {
        let record = record.map_err(|e| csv_error(&e))?;
        let line = record.position().map(|p| p.line());
        if record.len() == 1 && record.get(0) == Some("") {
            // blank line
            continue;
        }
        let alt = record.get(0).unwrap_or_default().to_string();
        let label = if alt.is_empty() { format!("line {}", line.unwrap_or(0)) } else { alt.clone() };
        if record.len() > attributes.len() + 1 {
            return Err(syntax(
                line,
                Some(label),
                Some(format!("{}", attributes.len() + 2)),
                format!("{} cells, header declares {}", record.len(), attributes.len() + 1),
            ));
        }
        let mut row = Vec::with_capacity(attributes.len());
        for (c, attr) in attributes.iter().enumerate() {
            let cell = record.get(c + 1).unwrap_or_default();
            if cell.is_empty() {
                return Err(syntax(line, Some(label), Some(attr.clone()), "missing grade"));
            }
            let grade: Grade = cell.parse().map_err(|source: FssError| IoError::Invalid {
                location: Location {
                    line,
                    row: Some(label.clone()),
                    column: Some(attr.clone()),
                },
                source,
            })?;
            row.push(grade);
        }
        alternatives.push(alt);
        grades.push(row);
    }
    let fss = FuzzySoftSet::new(alternatives, attributes, grades).map_err(|source| IoError::Invalid {
        location: Location::default(),
        source,
    })?;
    Ok(fss.into())
}

fn csv_error(e: &csv::Error) -> IoError {
    let line = e.position().map(|p| p.line());
    syntax(line, None, None, e.to_string())
}

fn parse_json(text: &[u8]) -> Result<AssessmentDocument, IoError> {
    let record: DocumentRecord = serde_json::from_slice(text).map_err(|e| IoError::Syntax {
        location: Location {
            line: Some(e.line() as u64),
            row: None,
            column: Some(e.column().to_string()),
        },
        message: e.to_string(),
    })?;
    record.into_document()
}

/// Parses an assessment document including labels and metadata.
pub fn parse_document(text: &[u8], format: Format) -> Result<AssessmentDocument, IoError> {
    let text = text.strip_prefix(b"\xEF\xBB\xBF").unwrap_or(text);
    match format {
        Format::Csv => parse_csv(text),
        Format::Json => parse_json(text),
    }
}

/// Parses an assessment matrix into a validated fuzzy soft set.
pub fn parse_assessment(text: &[u8], format: Format) -> Result<FuzzySoftSet, IoError> {
    parse_document(text, format).map(|doc| doc.fss)
}

/// Serializes a document. CSV carries ids and grades only.
pub fn emit_document(doc: &AssessmentDocument, format: Format) -> Vec<u8> {
    match format {
        Format::Csv => emit_csv(&doc.fss),
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(&DocumentRecord::from(doc)).expect("document serializes");
            out.push(b'\n');
            out
        }
    }
}

pub fn emit_assessment(fss: &FuzzySoftSet, format: Format) -> Vec<u8> {
    emit_document(&AssessmentDocument::from(fss.clone()), format)
}

fn emit_csv(fss: &FuzzySoftSet) -> Vec<u8> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let header = std::iter::once("").chain(fss.attributes().iter().map(|a| a.id.as_str()));
    writer.write_record(header).expect("write to memory");
    for (alt, row) in fss.alternatives().iter().zip(fss.rows()) {
        let cells = std::iter::once(alt.clone()).chain(row.iter().map(Grade::to_string));
        writer.write_record(cells).expect("write to memory");
    }
    writer.into_inner().expect("flush to memory")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::example;

    const EXAMPLE_CSV: &str = ",ε1,ε2,ε3,ε4,ε5,ε6,ε7,ε8,ε9,ε10
ψ1,0.7,1.0,0.6,0.2,0.4,0.6,0.5,0.1,0.8,0.5
ψ2,1.0,0.2,0.2,0.4,0.8,0.3,0.9,1.0,0.2,0.8
ψ3,1.0,0.9,0.1,0.6,0.7,0.7,0.3,0.3,0.5,0.3
ψ4,0.8,1.0,0.3,0.1,0.1,0.3,0.5,0.5,1.0,1.0
ψ5,1.0,0.2,0.8,0.4,0.2,0.9,0.5,0.9,0.7,0.4
";

    fn unlabeled(fss: &FuzzySoftSet) -> FuzzySoftSet {
        FuzzySoftSet::new(
            fss.alternatives().to_vec(),
            fss.attributes().iter().map(|a| a.id.clone()).collect(),
            fss.rows().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn example_csv_parses_to_the_fixture() {
        let fss = parse_assessment(EXAMPLE_CSV.as_bytes(), Format::Csv).unwrap();
        assert_eq!(fss, unlabeled(&example::fuzzy_soft_set()));
    }

    #[test]
    fn csv_emission_is_canonical() {
        let fss = example::fuzzy_soft_set();
        assert_eq!(String::from_utf8(emit_assessment(&fss, Format::Csv)).unwrap(), EXAMPLE_CSV);
    }

    #[test]
    fn json_round_trip_keeps_labels_and_metadata() {
        let mut doc = AssessmentDocument::from(example::fuzzy_soft_set());
        doc.metadata.insert("source".into(), "expert committee".into());
        let bytes = emit_document(&doc, Format::Json);
        assert_eq!(parse_document(&bytes, Format::Json).unwrap(), doc);
    }

    #[test]
    fn missing_cell_names_row_and_column() {
        let text = ",a,b,c\nx,0.1,0.2,0.3\ny,0.1,,0.3\n";
        let err = parse_assessment(text.as_bytes(), Format::Csv).unwrap_err();
        assert_eq!(err.code(), "SyntaxError");
        let loc = err.location();
        assert_eq!(loc.row.as_deref(), Some("y"));
        assert_eq!(loc.column.as_deref(), Some("b"));
        assert_eq!(loc.line, Some(3));

        let short = ",a,b,c\nx,0.1,0.2\n";
        let err = parse_assessment(short.as_bytes(), Format::Csv).unwrap_err();
        assert_eq!(err.location().column.as_deref(), Some("c"));
        assert!(err.to_string().contains("row x"), "{err}");
    }

    #[test]
    fn extra_cells_are_rejected() {
        let text = ",a\nx,0.1,0.2\n";
        let err = parse_assessment(text.as_bytes(), Format::Csv).unwrap_err();
        assert_eq!(err.code(), "SyntaxError");
    }

    #[test]
    fn out_of_range_grade_is_located() {
        let text = ",a,b\nx,0.1,1.2\n";
        let err = parse_assessment(text.as_bytes(), Format::Csv).unwrap_err();
        assert_eq!(err.code(), "GradeOutOfRange");
        assert_eq!(err.location().column.as_deref(), Some("b"));

        let json = r#"{"alternatives":["x"],"attributes":["a","b"],"grades":[["0.1","1.2"]]}"#;
        let err = parse_assessment(json.as_bytes(), Format::Json).unwrap_err();
        assert_eq!(err.code(), "GradeOutOfRange");
        assert_eq!(err.location().row.as_deref(), Some("x"));
        assert_eq!(err.location().column.as_deref(), Some("b"));
    }

    #[test]
    fn json_validation_errors() {
        let empty = r#"{"alternatives":["x"],"attributes":[],"grades":[[]]}"#;
        let err = parse_assessment(empty.as_bytes(), Format::Json).unwrap_err();
        assert_eq!(err.validation(), Some(&FssError::EmptyAttributeSet));

        let broken = r#"{"alternatives":["x"],"#;
        assert_eq!(parse_assessment(broken.as_bytes(), Format::Json).unwrap_err().code(), "SyntaxError");

        let unknown_field = r#"{"alternatives":["x"],"attributes":["a"],"grades":[["1"]],"extra":1}"#;
        assert_eq!(
            parse_assessment(unknown_field.as_bytes(), Format::Json).unwrap_err().code(),
            "SyntaxError"
        );
    }

    #[test]
    fn json_numbers_are_read_exactly() {
        let json = r#"{"alternatives":["x"],"attributes":[{"id":"a"}],"grades":[[0.7]]}"#;
        let fss = parse_assessment(json.as_bytes(), Format::Json).unwrap();
        assert_eq!(fss.grade(0, 0).units(), 7000);
    }

    #[test]
    fn header_must_start_empty() {
        let text = "id,a\nx,0.1\n";
        assert_eq!(parse_assessment(text.as_bytes(), Format::Csv).unwrap_err().code(), "SyntaxError");
        assert_eq!(parse_assessment(b"", Format::Csv).unwrap_err().code(), "SyntaxError");
    }

    #[test]
    fn csv_tolerates_crlf_bom_and_blank_lines() {
        let text = "\u{feff},a,b\r\nx,0.1,0.2\r\n\r\ny,1,0\r\n";
        let fss = parse_assessment(text.as_bytes(), Format::Csv).unwrap();
        assert_eq!(fss.alternatives(), ["x", "y"]);
    }

    #[test]
    fn quoted_ids_survive_round_trip() {
        let fss = FuzzySoftSet::new(vec!["a, b".into()], vec!["c\"d"], vec![vec!["0.25"]]).unwrap();
        let bytes = emit_assessment(&fss, Format::Csv);
        assert_eq!(parse_assessment(&bytes, Format::Csv).unwrap(), fss);
    }
}
