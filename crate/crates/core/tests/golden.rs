//! Reference assessment: fixture files against hand-transcribed tables.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use fsp_core::io::{emit_decision_table, parse_assessment, parse_document, Format, TableFormat};
use fsp_core::{comparison_matrix, cumulative_scores, example, rank, Measure, Rational};
use serde::Deserialize;

#[derive(Deserialize)]
struct Tables {
    rho: BTreeMap<String, BTreeMap<String, Vec<String>>>,
    chi: BTreeMap<String, BTreeMap<String, Vec<String>>>,
    scores: BTreeMap<String, [u64; 3]>,
    g1_order: Vec<String>,
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn tables() -> Tables {
    serde_json::from_slice(&std::fs::read(fixture("example.tables.json")).unwrap()).unwrap()
}

fn set(ids: &[String]) -> BTreeSet<String> {
    ids.iter().cloned().collect()
}

#[test]
fn csv_fixture_matches_builtin_example() {
    let fss = parse_assessment(&std::fs::read(fixture("example.csv")).unwrap(), Format::Csv).unwrap();
    let json = parse_document(&std::fs::read(fixture("example.json")).unwrap(), Format::Json).unwrap();
    assert_eq!(json.fss, example::fuzzy_soft_set());
    assert_eq!(fss.digest(), json.fss.digest());
}

#[test]
fn domination_and_subjection_tables() {
    let fss = example::fuzzy_soft_set();
    let t = tables();
    let matrix = comparison_matrix(&fss);
    let mut checked = 0;
    for (i, row_id) in fss.alternatives().iter().enumerate() {
        for (j, col_id) in fss.alternatives().iter().enumerate() {
            if i == j {
                continue;
            }
            let cell = &matrix[i][j];
            let rho: BTreeSet<String> = cell.rho.ids(&fss).into_iter().map(String::from).collect();
            let chi: BTreeSet<String> = cell.chi.ids(&fss).into_iter().map(String::from).collect();
            assert_eq!(rho, set(&t.rho[row_id][col_id]), "rho({row_id},{col_id})");
            assert_eq!(chi, set(&t.chi[row_id][col_id]), "chi({row_id},{col_id})");
            checked += 1;
        }
    }
    assert_eq!(checked, 20);
}

#[test]
fn cumulative_totals() {
    let fss = example::fuzzy_soft_set();
    let t = tables();
    for s in cumulative_scores(&fss) {
        let id = &fss.alternatives()[s.alternative];
        assert_eq!([s.dom, s.sub, s.equity], t.scores[id], "{id}");
    }
    let oracle: Vec<[u64; 3]> = common::oracle_scores(&fss).into_iter().map(|(d, s, q)| [d, s, q]).collect();
    let expected: Vec<[u64; 3]> = fss.alternatives().iter().map(|a| t.scores[a]).collect();
    assert_eq!(oracle, expected);
}

#[test]
fn exact_measures_and_order() {
    let fss = example::fuzzy_soft_set();
    let table = rank(&fss, Measure::G1).unwrap();
    assert_eq!(table.order(), tables().g1_order);
    let expected = [
        ("ψ1", (130, 11), -3, (63, 13)),
        ("ψ2", (35, 2), 5, (13, 3)),
        ("ψ3", (168, 17), -6, (31, 6)),
        ("ψ4", (434, 33), -2, (32, 7)),
        ("ψ5", (96, 5), 6, (33, 8)),
    ];
    for (id, g1, g2, g3) in expected {
        let row = table.row(id).unwrap();
        assert_eq!(row.values.gamma1, Rational::new(g1.0, g1.1), "{id}");
        assert_eq!(row.values.gamma2, g2, "{id}");
        assert_eq!(row.values.gamma3, Rational::new(g3.0, g3.1), "{id}");
    }
}

#[test]
fn emitted_g1_table_leads_with_top_city() {
    let table = rank(&example::fuzzy_soft_set(), Measure::G1).unwrap();
    let csv = String::from_utf8(emit_decision_table(&table, TableFormat::Csv)).unwrap();
    let first: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(first[2], "ψ5");
    assert_eq!(first[7], "19.2000");
    assert_eq!(first[8], "6");
    assert_eq!(first[10], "4.1250");
}

#[test]
fn g2_column_in_row_order() {
    let table = rank(&example::fuzzy_soft_set(), Measure::G2).unwrap();
    let g2: Vec<i64> = table.rows.iter().map(|r| r.values.gamma2).collect();
    assert_eq!(g2, [6, 5, -2, -3, -6]);
}
