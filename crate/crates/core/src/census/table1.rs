//! Published census of connected domination numbers, embedded as data.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::CensusRow;

/// One published table cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cell {
    Exact(u64),
    /// Reported only as nonzero.
    Positive,
    /// Not reported.
    Unknown,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Exact(x) => write!(f, "{x}"),
            Cell::Positive => write!(f, ">0"),
            Cell::Unknown => write!(f, "-"),
        }
    }
}

impl Cell {
    /// `Some(true)` / `Some(false)` when the cell decides the value, `None`
    /// when it is unknown.
    pub fn accepts(self, value: u64) -> Option<bool> {
        match self {
            Cell::Exact(x) => Some(x == value),
            Cell::Positive => Some(value > 0),
            Cell::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleRow {
    pub n: usize,
    pub total: u64,
    /// Columns `γ_c = 1..=5`.
    pub by_gamma_c: [Cell; 5],
}

use Cell::{Exact as E, Positive, Unknown as U};

pub const TABLE1: [OracleRow; 11] = [
    OracleRow { n: 5, total: 1, by_gamma_c: [E(1), E(0), E(0), E(0), E(0)] },
    OracleRow { n: 6, total: 2, by_gamma_c: [E(1), E(1), E(0), E(0), E(0)] },
    OracleRow { n: 7, total: 5, by_gamma_c: [E(3), E(2), E(0), E(0), E(0)] },
    OracleRow { n: 8, total: 14, by_gamma_c: [E(3), E(11), E(0), E(0), E(0)] },
    OracleRow { n: 9, total: 50, by_gamma_c: [E(12), E(37), E(1), E(0), E(0)] },
    OracleRow { n: 10, total: 233, by_gamma_c: [E(27), E(193), E(13), E(0), E(0)] },
    OracleRow { n: 11, total: 1_249, by_gamma_c: [E(82), E(995), E(172), E(0), E(0)] },
    OracleRow { n: 12, total: 7_595, by_gamma_c: [E(226), E(5_191), E(2_173), E(5), E(0)] },
    OracleRow { n: 13, total: 49_566, by_gamma_c: [E(733), E(25_760), E(22_920), E(153), E(0)] },
    OracleRow { n: 14, total: 339_722, by_gamma_c: [E(2_282), U, U, U, E(0)] },
    OracleRow { n: 15, total: 2_406_841, by_gamma_c: [E(7_528), U, U, U, Positive] },
];

pub fn oracle_row(n: usize) -> Option<&'static OracleRow> {
    TABLE1.iter().find(|r| r.n == n)
}

/// A cell where the census and the table disagree. `column` is `None` for
/// the total, otherwise the `γ_c` value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDiff {
    pub n: usize,
    pub column: Option<usize>,
    pub expected: Cell,
    pub found: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Diff {
    pub mismatches: Vec<CellDiff>,
    /// Orders the table has no row for.
    pub no_oracle: Vec<usize>,
    /// Rows compared against a table row.
    pub compared: Vec<usize>,
    /// `(n, γ_c)` cells left unchecked because the table does not give them.
    pub unknown_cells: Vec<(usize, usize)>,
}

impl Table1Diff {
    pub fn is_empty(&self) -> bool {
        self.mismatches.is_empty() && self.no_oracle.is_empty()
    }
}

/// Cell-by-cell comparison of census rows with the table. Values of `γ_c`
/// beyond the table's columns must be zero.
pub fn compare_table1(rows: &[CensusRow]) -> Table1Diff {
    let mut diff = Table1Diff::default();
    for row in rows {
        let Some(oracle) = oracle_row(row.n) else {
            diff.no_oracle.push(row.n);
            continue;
        };
        diff.compared.push(row.n);
        if row.total != oracle.total {
            diff.mismatches.push(CellDiff {
                n: row.n,
                column: None,
                expected: Cell::Exact(oracle.total),
                found: row.total,
            });
        }
        let widest = row.counts_by_gamma_c.keys().copied().max().unwrap_or(0).max(5);
        for value in 1..=widest {
            let expected = oracle.by_gamma_c.get(value - 1).copied().unwrap_or(Cell::Exact(0));
            let found = row.count(value);
            match expected.accepts(found) {
                Some(true) => {}
                Some(false) => diff.mismatches.push(CellDiff {
                    n: row.n,
                    column: Some(value),
                    expected,
                    found,
                }),
                None => diff.unknown_cells.push((row.n, value)),
            }
        }
    }
    diff
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn row_from_oracle(o: &OracleRow) -> CensusRow {
        let counts: BTreeMap<usize, u64> = o
            .by_gamma_c
            .iter()
            .enumerate()
            .filter_map(|(i, c)| match c {
                Cell::Exact(x) if *x > 0 => Some((i + 1, *x)),
                _ => None,
            })
            .collect();
        CensusRow {
            n: o.n,
            total: o.total,
            counts_by_gamma_c: counts,
            wall_time: 0.0,
            partial: false,
        }
    }

    #[test]
    fn table_rows_add_up() {
        for o in &TABLE1[..9] {
            let s: u64 = o
                .by_gamma_c
                .iter()
                .map(|c| match c {
                    Cell::Exact(x) => *x,
                    _ => unreachable!(),
                })
                .sum();
            assert_eq!(s, o.total, "n = {}", o.n);
        }
    }

    #[test]
    fn exact_rows_give_empty_diff() {
        let rows: Vec<CensusRow> = TABLE1[..9].iter().map(row_from_oracle).collect();
        let d = compare_table1(&rows);
        assert!(d.is_empty(), "{d:?}");
        assert_eq!(d.compared, (5..=13).collect::<Vec<_>>());
    }

    #[test]
    fn perturbed_cell_is_reported_once() {
        let mut row = row_from_oracle(oracle_row(10).unwrap());
        *row.counts_by_gamma_c.get_mut(&3).unwrap() += 1;
        row.total += 1;
        let d = compare_table1(&[row.clone()]);
        assert_eq!(d.mismatches.len(), 2);
        // Keep the published total: only the cell differs.
        row.total -= 1;
        let d = compare_table1(&[row]);
        assert_eq!(
            d.mismatches,
            vec![CellDiff { n: 10, column: Some(3), expected: Cell::Exact(13), found: 14 }]
        );
    }

    #[test]
    fn rows_outside_table_flagged() {
        let row = CensusRow {
            n: 4,
            total: 1,
            counts_by_gamma_c: BTreeMap::from([(1, 1)]),
            wall_time: 0.0,
            partial: false,
        };
        let d = compare_table1(&[row]);
        assert_eq!(d.no_oracle, vec![4]);
        assert!(!d.is_empty());
    }

    #[test]
    fn unknown_cells_are_not_asserted() {
        let row = CensusRow {
            n: 14,
            total: 339_722,
            counts_by_gamma_c: BTreeMap::from([(1, 2_282), (2, 1), (3, 339_722 - 2_283)]),
            wall_time: 0.0,
            partial: false,
        };
        let d = compare_table1(&[row]);
        assert!(d.mismatches.is_empty());
        assert_eq!(d.unknown_cells, vec![(14, 2), (14, 3), (14, 4)]);
    }
}
