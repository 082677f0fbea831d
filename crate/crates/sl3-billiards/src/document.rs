//! The JSON and CSV forms of a labelled-point multiset.

use std::io::Write;

use serde::{Deserialize, Serialize};
use sl3_billiards_core::{Label, LabelledPoint, PointMultiset, Weight};

use crate::error::{IoError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointEntry {
    pub mu: [i64; 2],
    pub n: u32,
    pub k: i32,
    pub mult: u64,
}

impl PointEntry {
    fn sort_key(&self) -> (u32, i32, i64, i64) {
        (self.n, self.k, self.mu[0], self.mu[1])
    }

    pub fn point(&self) -> LabelledPoint {
        LabelledPoint::new(Weight::new(self.mu[0], self.mu[1]), Label::new(self.n, self.k))
    }
}

/// A multiset together with the parameters that produced it. Entries are kept
/// sorted by `(n, k, a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PatternDocument {
    pub ell: i64,
    pub max_label: u32,
    pub points: Vec<PointEntry>,
}

impl PatternDocument {
    pub fn new(ell: i64, max_label: u32, points: &PointMultiset) -> Self {
        let mut entries: Vec<PointEntry> = points
            .iter()
            .map(|(p, m)| PointEntry {
                mu: [p.mu.a, p.mu.b],
                n: p.label.n,
                k: p.label.k,
                mult: m,
            })
            .collect();
        entries.sort_by_key(PointEntry::sort_key);
        PatternDocument {
            ell,
            max_label,
            points: entries,
        }
    }

    pub fn multiset(&self) -> PointMultiset {
        self.points.iter().map(|e| (e.point(), e.mult)).collect()
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    /// Parses and re-sorts; rejects zero multiplicities and duplicates.
    pub fn from_json(text: &str) -> Result<Self> {
        let mut doc: PatternDocument = serde_json::from_str(text)?;
        doc.points.sort_by_key(PointEntry::sort_key);
        for (i, e) in doc.points.iter().enumerate() {
            if e.mult == 0 {
                return Err(IoError::Invalid(format!("entry {i} has multiplicity 0")));
            }
            if i > 0 && doc.points[i - 1].sort_key() == e.sort_key() {
                return Err(IoError::Invalid(format!("entry {i} is a duplicate")));
            }
        }
        Ok(doc)
    }

    /// CSV with header `a,b,n,k,mult`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["a", "b", "n", "k", "mult"])?;
        for e in &self.points {
            w.write_record([
                e.mu[0].to_string(),
                e.mu[1].to_string(),
                e.n.to_string(),
                e.k.to_string(),
                e.mult.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }
}
