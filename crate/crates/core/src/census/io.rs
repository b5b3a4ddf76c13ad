//! CSV and JSON persistence for census rows and extremal records.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::{CensusRow, ExtremalRecord};
use crate::error::{Error, Result};

/// Fixed CSV column order; `gamma_c_k` counts graphs with `γ_c = k`.
pub const CSV_HEADER: [&str; 9] = [
    "n",
    "total",
    "gamma_c_1",
    "gamma_c_2",
    "gamma_c_3",
    "gamma_c_4",
    "gamma_c_5",
    "wall_time",
    "partial",
];

const COLUMNS: usize = 5;

pub fn write_rows_csv<W: Write>(rows: &[CensusRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        if let Some(&k) = r.counts_by_gamma_c.keys().find(|&&k| k == 0 || k > COLUMNS) {
            return Err(Error::Format(format!("γ_c = {k} has no CSV column")));
        }
        let mut rec = vec![r.n.to_string(), r.total.to_string()];
        rec.extend((1..=COLUMNS).map(|k| r.count(k).to_string()));
        rec.push(r.wall_time.to_string());
        rec.push(r.partial.to_string());
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_rows_csv<R: Read>(input: R) -> Result<Vec<CensusRow>> {
    let mut r = csv::Reader::from_reader(input);
    if r.headers()?.iter().ne(CSV_HEADER) {
        return Err(Error::Format(format!("unexpected CSV header {:?}", r.headers()?)));
    }
    let field = |rec: &csv::StringRecord, i: usize| -> Result<String> {
        rec.get(i)
            .map(str::to_owned)
            .ok_or_else(|| Error::Format(format!("missing column {}", CSV_HEADER[i])))
    };
    let parse_err = |i: usize, e: &dyn std::fmt::Display| Error::Format(format!("column {}: {e}", CSV_HEADER[i]));
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let int = |i: usize| -> Result<u64> { field(&rec, i)?.parse().map_err(|e| parse_err(i, &e)) };
        let mut counts = BTreeMap::new();
        for k in 1..=COLUMNS {
            let c = int(1 + k)?;
            if c > 0 {
                counts.insert(k, c);
            }
        }
        rows.push(CensusRow {
            n: int(0)? as usize,
            total: int(1)?,
            counts_by_gamma_c: counts,
            wall_time: field(&rec, 7)?.parse().map_err(|e| parse_err(7, &e))?,
            partial: field(&rec, 8)?.parse().map_err(|e| parse_err(8, &e))?,
        });
    }
    Ok(rows)
}

/// Everything one census run produces.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ResultsFile {
    pub rows: Vec<CensusRow>,
    pub records: Vec<ExtremalRecord>,
}

pub fn write_json<W: Write>(results: &ResultsFile, out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, results)?;
    Ok(())
}

pub fn read_json<R: Read>(input: R) -> Result<ResultsFile> {
    Ok(serde_json::from_reader(input)?)
}
