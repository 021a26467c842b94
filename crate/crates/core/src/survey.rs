//! Batch survey over all free trees up to a size, written as JSON lines.

use std::collections::HashSet;
use std::fs::OpenOptions;
use std::io::{Read, Write};
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bm::satisfies_sufficient_condition;
use crate::error::{Error, Result};
use crate::graphs::{
    canonical_code, enumerate_trees, independence_number_tree, matching_number_tree, Graph,
};
use crate::homology::betti_table_homology;
use crate::tree_bm::{max_critical_set, TreeBm};

pub const SURVEY_MAX_N: usize = 10;
pub const SURVEY_BIG_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub id: String,
    pub n: usize,
    pub alpha: usize,
    pub matching: usize,
    pub pdim_from_critical: usize,
    pub reg_from_critical: usize,
    pub max_critical_size: usize,
    pub bridge_friendly: bool,
    pub sufficient_condition: bool,
    pub betti_digest: String,
    /// Absent when no oracle was requested.
    pub oracle_agree: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl SurveyRecord {
    /// pdim = α, reg = matching number, and the constructed critical set
    /// has size α.
    pub fn theorems_hold(&self) -> bool {
        self.pdim_from_critical == self.alpha
            && self.reg_from_critical == self.matching
            && self.max_critical_size == self.alpha
            && self.bridge_friendly
            && self.oracle_agree != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveySummary {
    pub max_n: usize,
    pub records: usize,
    pub written: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a SurveySummary,
}

#[derive(Debug, Clone, Default)]
pub struct SurveyOptions {
    pub primes: Vec<u64>,
    pub timings: bool,
    pub big: bool,
}

pub fn survey_tree(g: &Graph, opts: &SurveyOptions) -> Result<SurveyRecord> {
    let start = Instant::now();
    let ctx = TreeBm::new(g, 0)?;
    let tables = ctx.tables()?;
    let betti = tables.betti(&ctx.order);
    let mut oracle_agree = None;
    for &p in &opts.primes {
        let h = betti_table_homology(&ctx.ni.ideal, p)?;
        let ok = betti.diff(&h).is_empty();
        oracle_agree = Some(oracle_agree.unwrap_or(true) && ok);
    }
    let max_critical_size = if g.n() >= 2 {
        max_critical_set(&ctx)?.v_sigma.len()
    } else {
        1
    };
    let digest = Sha256::digest(betti.to_json().as_bytes());
    Ok(SurveyRecord {
        id: canonical_code(g)?,
        n: g.n(),
        alpha: independence_number_tree(g),
        matching: matching_number_tree(g),
        pdim_from_critical: betti.pdim().unwrap_or(0),
        reg_from_critical: betti.reg().unwrap_or(0),
        max_critical_size,
        bridge_friendly: tables.is_bridge_friendly(&ctx.order),
        sufficient_condition: satisfies_sufficient_condition(&ctx.ni.ideal, &ctx.order)?,
        betti_digest: hex::encode(digest),
        oracle_agree,
        millis: opts.timings.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Ids already present in `path`, and whether the file ends mid-line.
fn existing(path: &Path) -> Result<(HashSet<String>, bool)> {
    let mut text = String::new();
    match std::fs::File::open(path) {
        Ok(mut f) => {
            f.read_to_string(&mut text)?;
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok((HashSet::new(), false)),
        Err(e) => return Err(e.into()),
    }
    let ids = text
        .lines()
        .filter_map(|l| serde_json::from_str::<SurveyRecord>(l).ok())
        .map(|r| r.id)
        .collect();
    Ok((ids, !text.is_empty() && !text.ends_with('\n')))
}

/// Appends one record per tree with `n <= max_n` not already in `path`,
/// then a summary line.
pub fn run_survey(max_n: usize, path: &Path, opts: &SurveyOptions) -> Result<SurveySummary> {
    let cap = if opts.big {
        SURVEY_BIG_MAX_N
    } else {
        SURVEY_MAX_N
    };
    if max_n > cap {
        return Err(Error::TooLarge {
            what: "survey tree size",
            size: max_n,
            cap,
        });
    }
    let (seen, partial) = existing(path)?;
    let mut out = OpenOptions::new().create(true).append(true).open(path)?;
    if partial {
        out.write_all(b"\n")?;
    }
    let mut summary = SurveySummary {
        max_n,
        records: 0,
        written: 0,
        skipped: 0,
        failures: Vec::new(),
    };
    for n in 1..=max_n {
        for g in enumerate_trees(n)? {
            summary.records += 1;
            let id = canonical_code(&g)?;
            if seen.contains(&id) {
                summary.skipped += 1;
                continue;
            }
            let rec = survey_tree(&g, opts)?;
            if !rec.theorems_hold() {
                summary.failures.push(rec.id.clone());
            }
            let mut line = serde_json::to_string(&rec)?;
            line.push('\n');
            out.write_all(line.as_bytes())?;
            summary.written += 1;
        }
    }
    let mut line = serde_json::to_string(&SummaryLine { summary: &summary })?;
    line.push('\n');
    out.write_all(line.as_bytes())?;
    out.flush()?;
    Ok(summary)
}
