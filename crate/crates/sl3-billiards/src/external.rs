//! Import of externally computed coefficient tables and comparison with `ζ_i`.
//!
//! A table is UTF-8 CSV with header `i,y,minDeg,coeffs`. `y` is a reduced
//! word in the digits `0`, `1`, `2` (`id` or empty for the identity) and
//! `coeffs` lists the coefficients from `v^minDeg` upwards, separated by
//! spaces.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{Read, Write};

use sl3_billiards_core::hecke::{CanonicalBasis, DescentChoice};
use sl3_billiards_core::zeta::zeta;
use sl3_billiards_core::{AffineElement, LaurentPoly, PointMultiset};

use crate::error::{IoError, Result};

const HEADER: [&str; 4] = ["i", "y", "minDeg", "coeffs"];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExternalTable {
    pub rows: BTreeMap<(u32, AffineElement), LaurentPoly>,
}

fn parse_err(row: usize, column: &str, message: impl Into<String>) -> IoError {
    IoError::Parse {
        row,
        column: column.to_string(),
        message: message.into(),
    }
}

impl ExternalTable {
    /// Rows are numbered from 1 for the first data line.
    pub fn read<R: Read>(input: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
        let header = rdr.headers()?.clone();
        if header.iter().collect::<Vec<_>>() != HEADER {
            return Err(parse_err(0, "header", format!("expected {}", HEADER.join(","))));
        }
        let mut table = ExternalTable::default();
        for (idx, rec) in rdr.records().enumerate() {
            let row = idx + 1;
            let rec = rec?;
            let field = |c: usize| rec.get(c).unwrap_or("");
            let i: u32 = field(0)
                .parse()
                .map_err(|e| parse_err(row, "i", format!("{e}")))?;
            let y: AffineElement = field(1)
                .parse()
                .map_err(|c| parse_err(row, "y", format!("unexpected character {c:?}")))?;
            if !y.is_minimal() {
                return Err(parse_err(row, "y", format!("{} is not minimal", field(1))));
            }
            let min_deg: i32 = field(2)
                .parse()
                .map_err(|e| parse_err(row, "minDeg", format!("{e}")))?;
            let coeffs = field(3)
                .split_whitespace()
                .map(|t| t.parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| parse_err(row, "coeffs", format!("{e}")))?;
            let poly = LaurentPoly::from_coeffs(min_deg, &coeffs);
            if table.rows.insert((i, y), poly).is_some() {
                return Err(parse_err(row, "y", format!("duplicate row for i = {i}")));
            }
        }
        Ok(table)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::read(text.as_bytes())
    }

    pub fn write<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(HEADER)?;
        for ((i, y), p) in &self.rows {
            let (lo, cs) = p.to_coeffs();
            let cs: Vec<String> = cs.iter().map(i64::to_string).collect();
            w.write_record([i.to_string(), y.word_string(), lo.to_string(), cs.join(" ")])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    pub fn indices(&self) -> BTreeSet<u32> {
        self.rows.keys().map(|(i, _)| *i).collect()
    }

    /// Drops every negative power.
    pub fn truncated(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|(k, p)| (*k, p.truncate_nonneg()))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        ExternalTable { rows }
    }
}

/// The standard-basis coefficients of `ζ_i` for `i ≤ max_i`.
pub fn zeta_table(
    p: i64,
    max_i: u32,
    ztilde: &PointMultiset,
    complete_to: u32,
    choice: DescentChoice,
) -> Result<ExternalTable> {
    let mut basis = CanonicalBasis::new(choice);
    let mut table = ExternalTable::default();
    for i in 0..=max_i {
        let z = basis.to_standard(&zeta(p, i, ztilde, complete_to)?)?;
        for (x, c) in z.iter() {
            table.rows.insert((i, *x), c.clone());
        }
    }
    Ok(table)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DiffMode {
    #[default]
    Full,
    /// Compare only non-negative powers.
    Truncated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMismatch {
    pub i: u32,
    pub y: AffineElement,
    pub predicted: LaurentPoly,
    pub external: LaurentPoly,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffReport {
    pub indices: usize,
    pub compared: usize,
    pub mismatches: Vec<CoefficientMismatch>,
}

impl DiffReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares every `(i, y)` for each index `i` present in `table`; absent
/// entries count as zero. Fails if the table mentions an index beyond the
/// predictions.
pub fn diff_external(table: &ExternalTable, predicted: &ExternalTable, max_i: u32, mode: DiffMode) -> Result<DiffReport> {
    let (table, predicted) = match mode {
        DiffMode::Full => (table.clone(), predicted.clone()),
        DiffMode::Truncated => (table.truncated(), predicted.truncated()),
    };
    let indices = table.indices();
    if let Some(&i) = indices.iter().find(|&&i| i > max_i) {
        return Err(IoError::Invalid(format!("table index {i} exceeds predicted range {max_i}")));
    }
    let keys: BTreeSet<(u32, AffineElement)> = table
        .rows
        .keys()
        .chain(predicted.rows.keys().filter(|(i, _)| indices.contains(i)))
        .copied()
        .collect();
    let mut report = DiffReport {
        indices: indices.len(),
        ..DiffReport::default()
    };
    for key in keys {
        let ext = table.rows.get(&key).cloned().unwrap_or_default();
        let pred = predicted.rows.get(&key).cloned().unwrap_or_default();
        report.compared += 1;
        if ext != pred {
            report.mismatches.push(CoefficientMismatch {
                i: key.0,
                y: key.1,
                predicted: pred,
                external: ext,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sl3_billiards_core::billiards::build_ztilde;

    #[test]
    fn identity_and_s0_rows() {
        // n̲_id = n_id and n̲_{s0} = n_{s0} + v·n_id
        let z = build_ztilde(5, 1).unwrap();
        let pred = zeta_table(5, 1, &z, 1, DescentChoice::Smallest).unwrap();
        let t = ExternalTable::parse("i,y,minDeg,coeffs\n0,id,0,1\n1,0,0,1\n1,,1,1\n").unwrap();
        assert!(diff_external(&t, &pred, 1, DiffMode::Full).unwrap().is_clean());
    }

    #[test]
    fn round_trip() {
        let z = build_ztilde(5, 20).unwrap();
        let pred = zeta_table(5, 20, &z, 20, DescentChoice::Smallest).unwrap();
        let back = ExternalTable::parse(&pred.to_csv()).unwrap();
        assert_eq!(back, pred);
    }

    #[test]
    fn parse_errors_carry_location() {
        let err = ExternalTable::parse("i,y,minDeg,coeffs\n0,id,0,1\n1,01x,0,1\n").unwrap_err();
        match err {
            IoError::Parse { row, column, .. } => assert_eq!((row, column.as_str()), (2, "y")),
            e => panic!("{e}"),
        }
        let err = ExternalTable::parse("i,y,minDeg,coeffs\n3,1,0,1\n").unwrap_err();
        assert!(matches!(err, IoError::Parse { row: 1, .. }), "{err}");
        let err = ExternalTable::parse("i,y,minDeg,coeffs\n3,0,0,1\n3,0,0,1\n").unwrap_err();
        assert!(matches!(err, IoError::Parse { row: 2, .. }), "{err}");
        let err = ExternalTable::parse("i,y,minDeg,coeffs\n3,0,a,1\n").unwrap_err();
        assert!(matches!(err, IoError::Parse { row: 1, ref column, .. } if column == "minDeg"));
    }

    #[test]
    fn truncated_mode_ignores_negative_powers() {
        let z = build_ztilde(5, 14).unwrap();
        let pred = zeta_table(5, 14, &z, 14, DescentChoice::Smallest).unwrap();
        let mut t = pred.clone();
        let key = *t.rows.keys().last().unwrap();
        t.rows.get_mut(&key).unwrap().add_term(7, -3);
        assert_eq!(diff_external(&t, &pred, 14, DiffMode::Full).unwrap().mismatches.len(), 1);
        assert!(diff_external(&t, &pred, 14, DiffMode::Truncated).unwrap().is_clean());
    }
}
