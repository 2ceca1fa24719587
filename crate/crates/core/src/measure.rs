//! Decision measures Γ1, Γ2, Γ3 in exact arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{FssError, Result};
use crate::scores::CumulativeScores;

/// Exact reduced rational with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(Ratio::new(numer, denom))
    }

    pub fn from_integer(v: i64) -> Self {
        Rational(Ratio::from_integer(v))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// Decimal text rounded half away from zero to `places` digits.
    pub fn to_decimal(&self, places: u32) -> String {
        let scale = 10i128.pow(places);
        let numer = i128::from(self.numer());
        let denom = i128::from(self.denom());
        let (q, r) = (numer.abs() * scale).div_rem(&denom);
        let rounded = if 2 * r >= denom { q + 1 } else { q };
        let sign = if numer < 0 && rounded != 0 { "-" } else { "" };
        let int = rounded / scale;
        let frac = rounded % scale;
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac:0width$}", width = places as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl fmt::Display for Rational {
    /// Always `p/q`, including `q = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || format!("invalid rational {s:?}");
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Ok(Rational::new(p, q))
    }
}

/// Which decision measure orders a decision table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    G1,
    G2,
    G3,
}

impl Measure {
    pub const ALL: [Measure; 3] = [Measure::G1, Measure::G2, Measure::G3];

    pub fn as_str(self) -> &'static str {
        match self {
            Measure::G1 => "g1",
            Measure::G2 => "g2",
            Measure::G3 => "g3",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "g1" | "gamma1" => Ok(Measure::G1),
            "g2" | "gamma2" => Ok(Measure::G2),
            "g3" | "gamma3" => Ok(Measure::G3),
            _ => Err(format!("unknown measure {s:?} (expected g1, g2 or g3)")),
        }
    }
}

impl serde::Serialize for Measure {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> serde::Deserialize<'de> for Measure {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// All three measure values of one alternative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MeasureValues {
    /// dom · equity / sub
    pub gamma1: Rational,
    /// dom − sub
    pub gamma2: i64,
    /// (dom + sub) / equity
    pub gamma3: Rational,
}

impl MeasureValues {
    /// Exact comparison under the selected measure.
    pub fn cmp_by(&self, other: &MeasureValues, measure: Measure) -> Ordering {
        match measure {
            Measure::G1 => self.gamma1.cmp(&other.gamma1),
            Measure::G2 => self.gamma2.cmp(&other.gamma2),
            Measure::G3 => self.gamma3.cmp(&other.gamma3),
        }
    }

    pub fn get(&self, measure: Measure) -> Rational {
        match measure {
            Measure::G1 => self.gamma1,
            Measure::G2 => Rational::from_integer(self.gamma2),
            Measure::G3 => self.gamma3,
        }
    }
}

fn to_i64(v: u64) -> i64 {
    i64::try_from(v).expect("cumulative score exceeds i64")
}

/// Computes Γ1, Γ2 and Γ3 from cumulative scores.
pub fn decision_measures(scores: &CumulativeScores) -> Result<MeasureValues> {
    if scores.sub == 0 || scores.equity == 0 {
        return Err(FssError::DegenerateScores {
            sub: scores.sub,
            equity: scores.equity,
        });
    }
    let (dom, sub, equity) = (to_i64(scores.dom), to_i64(scores.sub), to_i64(scores.equity));
    Ok(MeasureValues {
        gamma1: Rational::new(dom.checked_mul(equity).expect("Γ1 numerator overflow"), sub),
        gamma2: dom - sub,
        gamma3: Rational::new(dom + sub, equity),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scores(dom: u64, sub: u64, equity: u64) -> CumulativeScores {
        CumulativeScores {
            alternative: 0,
            dom,
            sub,
            equity,
        }
    }

    #[test]
    fn top_alternative_of_worked_example() {
        let v = decision_measures(&scores(36, 30, 16)).unwrap();
        assert_eq!(v.gamma1, Rational::new(96, 5));
        assert_eq!(v.gamma1.to_decimal(4), "19.2000");
        assert_eq!(v.gamma2, 6);
        assert_eq!(v.gamma3, Rational::new(33, 8));
        assert_eq!(v.gamma3.to_decimal(4), "4.1250");
    }

    #[test]
    fn first_alternative_of_worked_example() {
        let v = decision_measures(&scores(30, 33, 13)).unwrap();
        assert_eq!(v.gamma1, Rational::new(130, 11));
        assert_eq!(v.gamma2, -3);
        assert_eq!(v.gamma3, Rational::new(63, 13));
        assert_eq!(v.gamma1.to_decimal(1), "11.8");
        assert_eq!(v.gamma3.to_decimal(1), "4.8");
    }

    #[test]
    fn single_alternative() {
        for m in 1..6 {
            let v = decision_measures(&scores(m, m, m)).unwrap();
            assert_eq!(v.gamma1, Rational::from_integer(m as i64));
            assert_eq!(v.gamma2, 0);
            assert_eq!(v.gamma3, Rational::from_integer(2));
        }
    }

    #[test]
    fn degenerate_scores_are_rejected() {
        assert_eq!(
            decision_measures(&scores(3, 0, 1)),
            Err(FssError::DegenerateScores { sub: 0, equity: 1 })
        );
        assert!(decision_measures(&scores(3, 1, 0)).is_err());
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(Rational::new(1, 3).to_decimal(4), "0.3333");
        assert_eq!(Rational::new(2, 3).to_decimal(4), "0.6667");
        assert_eq!(Rational::new(-2, 3).to_decimal(4), "-0.6667");
        assert_eq!(Rational::new(1, 20000).to_decimal(4), "0.0001");
        assert_eq!(Rational::new(-1, 30000).to_decimal(4), "0.0000");
        assert_eq!(Rational::new(-7, 1).to_decimal(2), "-7.00");
        assert_eq!(Rational::new(5, 2).to_decimal(0), "3");
    }

    #[test]
    fn rational_text() {
        assert_eq!(Rational::new(12, 4).to_string(), "3/1");
        assert_eq!("96/5".parse::<Rational>().unwrap(), Rational::new(96, 5));
        assert_eq!("-6".parse::<Rational>().unwrap(), Rational::from_integer(-6));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn measure_names() {
        assert_eq!("G2".parse::<Measure>().unwrap(), Measure::G2);
        assert!("g9".parse::<Measure>().is_err());
        assert_eq!(Measure::G3.to_string(), "g3");
    }
}
