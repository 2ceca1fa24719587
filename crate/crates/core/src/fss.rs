//! Fuzzy soft sets over a finite universe of alternatives.

use std::collections::HashSet;

use sha2::{Digest, Sha256};

use crate::error::{FssError, Result};
use crate::grade::Grade;

/// A criterion column: stable id plus optional human-readable label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Attribute {
    pub id: String,
    pub label: Option<String>,
}

impl Attribute {
    pub fn new(id: impl Into<String>) -> Self {
        Attribute {
            id: id.into(),
            label: None,
        }
    }

    pub fn with_label(id: impl Into<String>, label: impl Into<String>) -> Self {
        Attribute {
            id: id.into(),
            label: Some(label.into()),
        }
    }

    /// Label if present, otherwise the id.
    pub fn display_name(&self) -> &str {
        self.label.as_deref().unwrap_or(&self.id)
    }
}

impl From<&str> for Attribute {
    fn from(id: &str) -> Self {
        Attribute::new(id)
    }
}

impl From<String> for Attribute {
    fn from(id: String) -> Self {
        Attribute::new(id)
    }
}

/// Alternatives × attributes matrix of membership grades.
///
/// Cell `(i, e)` is the grade of alternative `i` in the fuzzy set assigned to
/// attribute `e`. The matrix is always complete; missing information is
/// modelled by dropping whole attributes with [`FuzzySoftSet::restrict_attributes`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuzzySoftSet {
    alternatives: Vec<String>,
    attributes: Vec<Attribute>,
    // row-major, alternatives.len() * attributes.len()
    grades: Vec<Grade>,
}

fn check_ids<'a>(kind: &'static str, ids: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = HashSet::new();
    for id in ids {
        if id.is_empty() {
            return Err(FssError::EmptyId { kind });
        }
        if !seen.insert(id) {
            return Err(FssError::DuplicateId {
                kind,
                id: id.to_string(),
            });
        }
    }
    Ok(())
}

impl FuzzySoftSet {
    /// Validates and builds a fuzzy soft set from a row-per-alternative grade matrix.
    pub fn new<A, T>(alternatives: Vec<String>, attributes: Vec<A>, grades: Vec<Vec<T>>) -> Result<Self>
    where
        A: Into<Attribute>,
        T: GradeInput,
    {
        let attributes: Vec<Attribute> = attributes.into_iter().map(Into::into).collect();
        if alternatives.is_empty() {
            return Err(FssError::EmptyUniverse);
        }
        if attributes.is_empty() {
            return Err(FssError::EmptyAttributeSet);
        }
        check_ids("alternative", alternatives.iter().map(String::as_str))?;
        check_ids("attribute", attributes.iter().map(|a| a.id.as_str()))?;
        if grades.len() != alternatives.len() {
            return Err(FssError::DimensionMismatch(format!(
                "{} alternatives but {} grade rows",
                alternatives.len(),
                grades.len()
            )));
        }
        let m = attributes.len();
        let mut flat = Vec::with_capacity(alternatives.len() * m);
        for (row, alt) in grades.into_iter().zip(&alternatives) {
            if row.len() != m {
                return Err(FssError::DimensionMismatch(format!(
                    "row {alt:?} has {} grades, expected {m}",
                    row.len()
                )));
            }
            for cell in row {
                flat.push(cell.into_grade()?);
            }
        }
        Ok(FuzzySoftSet {
            alternatives,
            attributes,
            grades: flat,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn attributes(&self) -> &[Attribute] {
        &self.attributes
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn n_attributes(&self) -> usize {
        self.attributes.len()
    }

    pub fn grade(&self, alternative: usize, attribute: usize) -> Grade {
        self.grades[alternative * self.attributes.len() + attribute]
    }

    /// Grade row of one alternative.
    pub fn row(&self, alternative: usize) -> &[Grade] {
        let m = self.attributes.len();
        &self.grades[alternative * m..(alternative + 1) * m]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Grade]> {
        self.grades.chunks_exact(self.attributes.len())
    }

    pub fn alternative_index(&self, id: &str) -> Result<usize> {
        self.alternatives
            .iter()
            .position(|a| a == id)
            .ok_or_else(|| FssError::UnknownAlternative(id.to_string()))
    }

    pub fn attribute_index(&self, id: &str) -> Result<usize> {
        self.attributes
            .iter()
            .position(|a| a.id == id)
            .ok_or_else(|| FssError::UnknownAttribute(id.to_string()))
    }

    /// Keeps only the named attribute columns, in their original order.
    pub fn restrict_attributes<S: AsRef<str>>(&self, keep: &[S]) -> Result<Self> {
        if keep.is_empty() {
            return Err(FssError::EmptyAttributeSet);
        }
        let mut keep_mask = vec![false; self.attributes.len()];
        for id in keep {
            keep_mask[self.attribute_index(id.as_ref())?] = true;
        }
        let columns: Vec<usize> = (0..self.attributes.len()).filter(|&e| keep_mask[e]).collect();
        let attributes = columns.iter().map(|&e| self.attributes[e].clone()).collect();
        let grades = self
            .rows()
            .flat_map(|row| columns.iter().map(move |&e| row[e]))
            .collect();
        Ok(FuzzySoftSet {
            alternatives: self.alternatives.clone(),
            attributes,
            grades,
        })
    }

    /// Removes the named attribute columns.
    pub fn eliminate_attributes<S: AsRef<str>>(&self, drop: &[S]) -> Result<Self> {
        let mut drop_mask = vec![false; self.attributes.len()];
        for id in drop {
            drop_mask[self.attribute_index(id.as_ref())?] = true;
        }
        let keep: Vec<&str> = self
            .attributes
            .iter()
            .zip(&drop_mask)
            .filter(|(_, dropped)| !**dropped)
            .map(|(a, _)| a.id.as_str())
            .collect();
        self.restrict_attributes(&keep)
    }

    /// Returns a copy with one grade replaced.
    pub fn with_grade(&self, alternative: &str, attribute: &str, grade: Grade) -> Result<Self> {
        let i = self.alternative_index(alternative)?;
        let e = self.attribute_index(attribute)?;
        let mut next = self.clone();
        let m = next.attributes.len();
        next.grades[i * m + e] = grade;
        Ok(next)
    }

    /// Returns a copy with the alternatives reordered; `order[k]` is the old index
    /// placed at position `k`.
    pub fn permute_alternatives(&self, order: &[usize]) -> Result<Self> {
        let n = self.alternatives.len();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
            return Err(FssError::DimensionMismatch(format!(
                "{order:?} is not a permutation of 0..{n}"
            )));
        }
        Ok(FuzzySoftSet {
            alternatives: order.iter().map(|&i| self.alternatives[i].clone()).collect(),
            attributes: self.attributes.clone(),
            grades: order.iter().flat_map(|&i| self.row(i).iter().copied()).collect(),
        })
    }

    /// Hex SHA-256 over ids and grades (labels excluded).
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        let mut field = |bytes: &[u8]| {
            hasher.update((bytes.len() as u64).to_le_bytes());
            hasher.update(bytes);
        };
        field(b"fss/v1");
        field(&(self.alternatives.len() as u64).to_le_bytes());
        for a in &self.alternatives {
            field(a.as_bytes());
        }
        field(&(self.attributes.len() as u64).to_le_bytes());
        for a in &self.attributes {
            field(a.id.as_bytes());
        }
        let grade_bytes: Vec<u8> = self.grades.iter().flat_map(|g| g.units().to_le_bytes()).collect();
        field(&grade_bytes);
        hex::encode(hasher.finalize())
    }
}

/// Anything that can be turned into a validated [`Grade`]: decimal text or a grade.
pub trait GradeInput {
    fn into_grade(self) -> Result<Grade>;
}

impl GradeInput for Grade {
    fn into_grade(self) -> Result<Grade> {
        Ok(self)
    }
}

impl GradeInput for &str {
    fn into_grade(self) -> Result<Grade> {
        self.parse()
    }
}

impl GradeInput for String {
    fn into_grade(self) -> Result<Grade> {
        self.parse()
    }
}

impl GradeInput for &String {
    fn into_grade(self) -> Result<Grade> {
        self.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::example;

    fn ids(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|k| format!("{prefix}{k}")).collect()
    }

    #[test]
    fn worked_example_is_valid() {
        let fss = example::fuzzy_soft_set();
        assert_eq!(fss.n_alternatives(), 5);
        assert_eq!(fss.n_attributes(), 10);
        let first: Vec<String> = fss.row(0).iter().map(Grade::to_string).collect();
        assert_eq!(
            first,
            ["0.7", "1.0", "0.6", "0.2", "0.4", "0.6", "0.5", "0.1", "0.8", "0.5"]
        );
    }

    #[test]
    fn minimal_instance() {
        let fss = FuzzySoftSet::new(ids("a", 1), ids("e", 1), vec![vec!["0.0"]]).unwrap();
        assert_eq!(fss.grade(0, 0), Grade::ZERO);
    }

    #[test]
    fn construction_errors() {
        let err = FuzzySoftSet::new(ids("a", 2), ids("e", 2), vec![vec!["0.1", "1.2"], vec!["0", "0"]]);
        assert!(matches!(err, Err(FssError::GradeOutOfRange { .. })));

        let err = FuzzySoftSet::new(ids("a", 2), ids("e", 2), vec![vec!["0.1", "0.2"]]);
        assert!(matches!(err, Err(FssError::DimensionMismatch(_))));

        let err = FuzzySoftSet::new(ids("a", 1), ids("e", 2), vec![vec!["0.1"]]);
        assert!(matches!(err, Err(FssError::DimensionMismatch(_))));

        let err = FuzzySoftSet::new(
            vec!["x".into(), "x".into()],
            ids("e", 1),
            vec![vec!["0.1"], vec!["0.2"]],
        );
        assert!(matches!(err, Err(FssError::DuplicateId { kind: "alternative", .. })));

        let err = FuzzySoftSet::new(ids("a", 1), vec!["e", "e"], vec![vec!["0.1", "0.2"]]);
        assert!(matches!(err, Err(FssError::DuplicateId { kind: "attribute", .. })));

        let err = FuzzySoftSet::new(vec!["".into()], ids("e", 1), vec![vec!["0.1"]]);
        assert!(matches!(err, Err(FssError::EmptyId { .. })));

        let err = FuzzySoftSet::new::<String, &str>(vec![], ids("e", 1), vec![]);
        assert_eq!(err, Err(FssError::EmptyUniverse));

        let err = FuzzySoftSet::new::<String, &str>(ids("a", 1), vec![], vec![vec![]]);
        assert_eq!(err, Err(FssError::EmptyAttributeSet));
    }

    #[test]
    fn restrict_identity() {
        let fss = example::fuzzy_soft_set();
        let all: Vec<&str> = fss.attributes().iter().map(|a| a.id.as_str()).collect();
        assert_eq!(fss.restrict_attributes(&all).unwrap(), fss);
    }

    #[test]
    fn restrict_single_column() {
        let fss = example::fuzzy_soft_set();
        let one = fss.restrict_attributes(&["ε1"]).unwrap();
        assert_eq!(one.n_attributes(), 1);
        assert_eq!(one.n_alternatives(), 5);
        let col: Vec<String> = one.rows().map(|r| r[0].to_string()).collect();
        assert_eq!(col, ["0.7", "1.0", "1.0", "0.8", "1.0"]);
    }

    #[test]
    fn restrict_errors() {
        let fss = example::fuzzy_soft_set();
        assert_eq!(
            fss.restrict_attributes::<&str>(&[]),
            Err(FssError::EmptyAttributeSet)
        );
        assert_eq!(
            fss.restrict_attributes(&["ε99"]),
            Err(FssError::UnknownAttribute("ε99".into()))
        );
    }

    #[test]
    fn restrict_preserves_source_order() {
        let fss = example::fuzzy_soft_set();
        let r = fss.restrict_attributes(&["ε9", "ε2"]).unwrap();
        let ids: Vec<&str> = r.attributes().iter().map(|a| a.id.as_str()).collect();
        assert_eq!(ids, ["ε2", "ε9"]);
        assert_eq!(r.row(0)[1].to_string(), "0.8");
    }

    #[test]
    fn eliminate_everything_fails() {
        let fss = example::fuzzy_soft_set();
        let all: Vec<String> = fss.attributes().iter().map(|a| a.id.clone()).collect();
        assert_eq!(fss.eliminate_attributes(&all), Err(FssError::EmptyAttributeSet));
        let nine = fss.eliminate_attributes(&["ε5"]).unwrap();
        assert_eq!(nine.n_attributes(), 9);
        assert!(nine.attribute_index("ε5").is_err());
    }

    #[test]
    fn digest_tracks_content_not_labels() {
        let fss = example::fuzzy_soft_set();
        let unlabeled = FuzzySoftSet::new(
            fss.alternatives().to_vec(),
            fss.attributes().iter().map(|a| a.id.clone()).collect(),
            fss.rows().map(|r| r.to_vec()).collect(),
        )
        .unwrap();
        assert_eq!(fss.digest(), unlabeled.digest());
        let edited = fss.with_grade("ψ1", "ε1", Grade::ONE).unwrap();
        assert_ne!(fss.digest(), edited.digest());
        assert_eq!(fss.digest().len(), 64);
    }

    #[test]
    fn permutation_validation() {
        let fss = example::fuzzy_soft_set();
        assert!(fss.permute_alternatives(&[0, 0, 1, 2, 3]).is_err());
        assert!(fss.permute_alternatives(&[0, 1]).is_err());
        let p = fss.permute_alternatives(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(p.alternatives()[0], "ψ5");
        assert_eq!(p.row(0), fss.row(4));
    }
}
