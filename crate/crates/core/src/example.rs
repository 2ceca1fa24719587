//! Five-city, ten-factor expert assessment used as the reference fixture.

use crate::fss::{Attribute, FuzzySoftSet};

pub const ALTERNATIVES: [&str; 5] = ["ψ1", "ψ2", "ψ3", "ψ4", "ψ5"];

pub const ATTRIBUTES: [(&str, &str); 10] = [
    ("ε1", "High count of casualties"),
    ("ε2", "Damage to infrastructure"),
    ("ε3", "Economic damage"),
    ("ε4", "Media coverage"),
    ("ε5", "Distance from terrorist strongholds"),
    ("ε6", "Cultural proximity to terrorists' ethnicity"),
    ("ε7", "Pre attack hiding"),
    ("ε8", "Post attack hiding"),
    ("ε9", "Physical security"),
    ("ε10", "Psychological impact"),
];

pub const GRADES: [[&str; 10]; 5] = [
    ["0.7", "1.0", "0.6", "0.2", "0.4", "0.6", "0.5", "0.1", "0.8", "0.5"],
    ["1.0", "0.2", "0.2", "0.4", "0.8", "0.3", "0.9", "1.0", "0.2", "0.8"],
    ["1.0", "0.9", "0.1", "0.6", "0.7", "0.7", "0.3", "0.3", "0.5", "0.3"],
    ["0.8", "1.0", "0.3", "0.1", "0.1", "0.3", "0.5", "0.5", "1.0", "1.0"],
    ["1.0", "0.2", "0.8", "0.4", "0.2", "0.9", "0.5", "0.9", "0.7", "0.4"],
];

/// The reference assessment with attribute labels.
pub fn fuzzy_soft_set() -> FuzzySoftSet {
    FuzzySoftSet::new(
        ALTERNATIVES.iter().map(|s| s.to_string()).collect(),
        ATTRIBUTES
            .iter()
            .map(|(id, label)| Attribute::with_label(*id, *label))
            .collect(),
        GRADES.iter().map(|row| row.to_vec()).collect(),
    )
    .expect("reference fixture is valid")
}
