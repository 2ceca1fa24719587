//! Fixed-point membership grades.

use std::fmt;
use std::str::FromStr;

use crate::error::FssError;

/// Number of fractional decimal digits a grade may carry.
pub const GRADE_DIGITS: u32 = 4;

/// Denominator of the fixed-point representation.
pub const GRADE_SCALE: u16 = 10_000;

/// A membership grade in `[0, 1]`, stored as `units / 10_000`.
///
/// Equality and ordering are exact integer comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Grade(u16);

impl Grade {
    pub const ZERO: Grade = Grade(0);
    pub const ONE: Grade = Grade(GRADE_SCALE);

    /// Builds a grade from its fixed-point numerator.
    pub fn from_units(units: u16) -> Result<Self, FssError> {
        if units > GRADE_SCALE {
            return Err(FssError::GradeOutOfRange {
                value: format_units(units as u64),
            });
        }
        Ok(Grade(units))
    }

    pub fn units(self) -> u16 {
        self.0
    }

    /// Lossy conversion for display and plotting only.
    pub fn to_f64(self) -> f64 {
        f64::from(self.0) / f64::from(GRADE_SCALE)
    }
}

fn format_units(units: u64) -> String {
    let scale = u64::from(GRADE_SCALE);
    let int = units / scale;
    let frac = units % scale;
    let mut digits = format!("{:04}", frac);
    while digits.len() > 1 && digits.ends_with('0') {
        digits.pop();
    }
    format!("{int}.{digits}")
}

impl fmt::Display for Grade {
    /// Shortest form with at least one fractional digit: `0.7`, `1.0`, `0.125`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_units(u64::from(self.0)))
    }
}

impl FromStr for Grade {
    type Err = FssError;

    /// Parses plain decimal text (`1`, `0.7`, `.25`, `0.1250`) without going
    /// through binary floating point.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let invalid = || FssError::InvalidGrade {
            value: s.to_string(),
            max_digits: GRADE_DIGITS,
        };
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(invalid());
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(invalid());
        }
        if frac_part.len() > GRADE_DIGITS as usize {
            return Err(invalid());
        }
        let int_digits = int_part.trim_start_matches('0');
        // Anything with more than one significant integer digit is out of range.
        if int_digits.len() > 1 {
            return Err(FssError::GradeOutOfRange {
                value: s.to_string(),
            });
        }
        let int: u64 = if int_digits.is_empty() {
            0
        } else {
            int_digits.parse().map_err(|_| invalid())?
        };
        let mut frac: u64 = 0;
        for (pos, b) in frac_part.bytes().enumerate() {
            frac += u64::from(b - b'0') * 10u64.pow(GRADE_DIGITS - 1 - pos as u32);
        }
        let units = int * u64::from(GRADE_SCALE) + frac;
        if (negative && units != 0) || units > u64::from(GRADE_SCALE) {
            return Err(FssError::GradeOutOfRange {
                value: s.to_string(),
            });
        }
        Ok(Grade(units as u16))
    }
}

impl serde::Serialize for Grade {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Grade {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
