//! Graded Betti tables.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Whether a table describes the ideal `I` or the quotient `R/I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Ideal,
    Quotient,
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::Ideal => "ideal",
            TableKind::Quotient => "quotient",
        })
    }
}

/// Sparse `(i, j) -> β_{i,j}`; zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    kind: TableKind,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    i: usize,
    j: usize,
    value: u64,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    kind: TableKind,
    entries: Vec<Entry>,
}

impl BettiTable {
    pub fn new(kind: TableKind) -> Self {
        BettiTable {
            kind,
            entries: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `get` that treats negative indices as zero entries.
    pub fn get_signed(&self, i: i64, j: i64) -> u64 {
        if i < 0 || j < 0 {
            0
        } else {
            self.get(i as usize, j as usize)
        }
    }

    pub fn add(&mut self, i: usize, j: usize, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        if v == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn pdim(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Largest `j - i` over nonzero entries.
    pub fn reg(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j.saturating_sub(i)).max()
    }

    /// Sum of `β_{i,j}` over `j`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(a, _), _)| a == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Reindexes between `β_{i,j}(I)` and `β_{i+1,j}(R/I)`.
    pub fn shift_kind(&self, to: TableKind) -> BettiTable {
        if to == self.kind {
            return self.clone();
        }
        let mut out = BettiTable::new(to);
        match to {
            TableKind::Ideal => {
                for (i, j, v) in self.entries() {
                    if i > 0 {
                        out.add(i - 1, j, v);
                    }
                }
            }
            TableKind::Quotient => {
                out.add(0, 0, 1);
                for (i, j, v) in self.entries() {
                    out.add(i + 1, j, v);
                }
            }
        }
        out
    }

    /// Entries where two tables differ, as `(i, j, self, other)`.
    pub fn diff(&self, other: &BettiTable) -> Vec<(usize, usize, u64, u64)> {
        let other = other.shift_kind(self.kind);
        let mut keys: Vec<(usize, usize)> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(i, j)| {
                let (a, b) = (self.get(i, j), other.get(i, j));
                (a != b).then_some((i, j, a, b))
            })
            .collect()
    }

    fn raw(&self) -> TableJson {
        TableJson {
            kind: self.kind,
            entries: self
                .entries()
                .map(|(i, j, value)| Entry { i, j, value })
                .collect(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.raw()).expect("table serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.raw()).expect("table serializes")
    }

    pub fn from_json(s: &str) -> Result<BettiTable> {
        let raw: TableJson = serde_json::from_str(s)?;
        let mut t = BettiTable::new(raw.kind);
        for e in raw.entries {
            t.add(e.i, e.j, e.value);
        }
        Ok(t)
    }

    /// Betti triangle: columns are homological degrees `i`, rows are `j - i`.
    pub fn render(&self) -> String {
        if self.entries.is_empty() {
            return format!("({}) zero table\n", self.kind);
        }
        let max_i = self.pdim().unwrap();
        let max_row = self.reg().unwrap();
        let min_row = self
            .entries
            .keys()
            .map(|&(i, j)| j.saturating_sub(i))
            .min()
            .unwrap();
        let cell = |v: u64| {
            if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            }
        };
        let mut width = 1;
        for i in 0..=max_i {
            width = width.max(self.total(i).to_string().len());
        }
        let label_w = "total:".len().max(format!("{max_row}:").len());
        let mut out = String::new();
        let _ = write!(out, "{:>label_w$}", "");
        for i in 0..=max_i {
            let _ = write!(out, " {:>width$}", i);
        }
        out.push('\n');
        let _ = write!(out, "{:>label_w$}", "total:");
        for i in 0..=max_i {
            let _ = write!(out, " {:>width$}", self.total(i));
        }
        out.push('\n');
        for row in min_row..=max_row {
            let _ = write!(out, "{:>label_w$}", format!("{row}:"));
            for i in 0..=max_i {
                let _ = write!(out, " {:>width$}", cell(self.get(i, i + row)));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3_quotient() -> BettiTable {
        let mut t = BettiTable::new(TableKind::Quotient);
        t.add(0, 0, 1);
        t.add(1, 2, 2);
        t.add(2, 3, 1);
        t
    }

    #[test]
    fn shift_round_trip() {
        let q = p3_quotient();
        let i = q.shift_kind(TableKind::Ideal);
        assert_eq!(i.get(0, 2), 2);
        assert_eq!(i.get(1, 3), 1);
        assert_eq!(i.entries().count(), 2);
        assert_eq!(i.shift_kind(TableKind::Quotient), q);
        let empty = BettiTable::new(TableKind::Ideal).shift_kind(TableKind::Quotient);
        assert_eq!(empty.entries().collect::<Vec<_>>(), vec![(0, 0, 1)]);
    }

    #[test]
    fn invariants() {
        let q = p3_quotient();
        assert_eq!(q.pdim(), Some(2));
        assert_eq!(q.reg(), Some(1));
    }

    #[test]
    fn json_round_trip() {
        let q = p3_quotient();
        let s = q.to_json();
        assert!(s.starts_with(r#"{"kind":"quotient","entries":[{"i":0,"j":0,"value":1}"#));
        assert_eq!(BettiTable::from_json(&s).unwrap(), q);
    }

    #[test]
    fn triangle() {
        let text = p3_quotient().render();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines[0].split_whitespace().collect::<Vec<_>>(),
            ["0", "1", "2"]
        );
        assert_eq!(
            lines[1].split_whitespace().collect::<Vec<_>>(),
            ["total:", "1", "2", "1"]
        );
        assert_eq!(
            lines[2].split_whitespace().collect::<Vec<_>>(),
            ["0:", "1", ".", "."]
        );
        assert_eq!(
            lines[3].split_whitespace().collect::<Vec<_>>(),
            ["1:", ".", "2", "1"]
        );
    }
}
