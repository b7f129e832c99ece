//! Built-in survey of published experiments, embedded at compile time and
//! parsed once on first use.

use super::{parse::parse_records, ExperimentRecord};
use std::sync::OnceLock;

const TABLE1: &str = include_str!("../data/table1.rec");
const TABLE2: &str = include_str!("../data/table2.rec");

fn parsed(
    cell: &'static OnceLock<Vec<ExperimentRecord>>,
    text: &str,
) -> &'static [ExperimentRecord] {
    cell.get_or_init(|| parse_records(text).expect("embedded record table must parse"))
}

/// Matter-wave interference experiments.
pub fn builtin_table1() -> &'static [ExperimentRecord] {
    static CELL: OnceLock<Vec<ExperimentRecord>> = OnceLock::new();
    parsed(&CELL, TABLE1)
}

/// Ramsey interferometry experiments.
pub fn builtin_table2() -> &'static [ExperimentRecord] {
    static CELL: OnceLock<Vec<ExperimentRecord>> = OnceLock::new();
    parsed(&CELL, TABLE2)
}

/// Both built-in tables, in order.
pub fn builtin_all() -> Vec<ExperimentRecord> {
    builtin_table1()
        .iter()
        .chain(builtin_table2())
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::RecordKind;

    #[test]
    fn builtin_tables_have_expected_shape() {
        let table1 = builtin_table1();
        let table2 = builtin_table2();
        assert_eq!(table1.len(), 14);
        assert_eq!(table2.len(), 14);
        assert!(table1
            .iter()
            .all(|r| matches!(r.kind, RecordKind::MatterWave(_))));
        assert!(table2
            .iter()
            .all(|r| matches!(r.kind, RecordKind::Ramsey(_))));
        assert_eq!(builtin_all().len(), 28);
    }

    #[test]
    fn every_builtin_row_carries_a_published_beta() {
        for record in builtin_all() {
            let has_published = match &record.kind {
                RecordKind::MatterWave(mw) => mw.published_beta.is_some(),
                RecordKind::Ramsey(r) => r.published_beta.is_some(),
                RecordKind::Trap(_) => false,
            };
            assert!(
                has_published,
                "{} lacks a published beta",
                record.identifier()
            );
        }
    }
}
