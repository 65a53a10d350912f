//! Benchmark harness: one CSV row per (knot, color).

use std::io::Write;
use std::time::Instant;

use serde::Serialize;
use statrs::statistics::{Data, OrderStatistics, RankTieBreaker, Statistics};

use crate::burau::walk_count;
use crate::cjp::{colored_jones, simple_walk_count, CjpOptions};
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::par;
use crate::table::KnotRecord;

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub name: String,
    pub crossings: u32,
    pub strands: usize,
    pub simple_walks: usize,
    pub simple_walks_mirror: usize,
    pub walks_no_drl: Option<u128>,
    #[serde(rename = "N")]
    pub n: u32,
    pub heights: usize,
    pub time_ms: f64,
    pub terms: usize,
    #[serde(skip)]
    pub polynomial: LaurentPolynomial,
}

impl BenchRow {
    /// Simple walks of the orientation the engine runs on.
    pub fn chosen_walks(&self) -> usize {
        self.simple_walks.min(self.simple_walks_mirror)
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub colors: Vec<u32>,
    pub with_no_drl: bool,
    /// Run different knots concurrently. Rows stay in table order either way.
    pub knots_in_parallel: bool,
    /// Each computation is repeated this often; the fastest run is reported.
    pub repeats: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            colors: vec![2],
            with_no_drl: false,
            knots_in_parallel: true,
            repeats: 1,
        }
    }
}

fn bench_one(record: &KnotRecord, n: u32, config: &BenchConfig) -> Result<BenchRow> {
    let braid = record.braid_word()?;
    let simple_walks = simple_walk_count(&braid)?;
    let simple_walks_mirror = simple_walk_count(&braid.mirror())?;
    let walks_no_drl = if config.with_no_drl {
        Some(walk_count(&braid)?)
    } else {
        None
    };
    let mut best = f64::INFINITY;
    let mut result = None;
    for _ in 0..config.repeats.max(1) {
        let start = Instant::now();
        let r = colored_jones(&braid, n, CjpOptions::default())?;
        best = best.min(start.elapsed().as_secs_f64() * 1e3);
        result = Some(r);
    }
    let result = result.expect("at least one run");
    let time_ms = (best * 1e3).round() / 1e3;
    Ok(BenchRow {
        name: record.name.clone(),
        crossings: record.crossings,
        strands: braid.strands(),
        simple_walks,
        simple_walks_mirror,
        walks_no_drl,
        n,
        heights: result.heights_summed,
        time_ms,
        terms: result.polynomial.len(),
        polynomial: result.polynomial,
    })
}

pub fn run_bench(records: &[&KnotRecord], config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let jobs: Vec<(&KnotRecord, u32)> = records
        .iter()
        .flat_map(|r| config.colors.iter().map(move |&n| (*r, n)))
        .collect();
    let run = |&(r, n): &(&KnotRecord, u32)| bench_one(r, n, config);
    let rows = if config.knots_in_parallel {
        par::map(&jobs, run)
    } else {
        jobs.iter().map(run).collect()
    };
    rows.into_iter().collect()
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Table(e.to_string());
    if rows.is_empty() {
        writer
            .write_record([
                "name",
                "crossings",
                "strands",
                "simple_walks",
                "simple_walks_mirror",
                "walks_no_drl",
                "N",
                "heights",
                "time_ms",
                "terms",
            ])
            .map_err(io)?;
    }
    for row in rows {
        writer.serialize(row).map_err(io)?;
    }
    writer.flush().map_err(|e| Error::Table(e.to_string()))
}

/// Spearman rank correlation (average ranks for ties).
pub fn spearman(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let rx = Data::new(x.to_vec()).ranks(RankTieBreaker::Average);
    let ry = Data::new(y.to_vec()).ranks(RankTieBreaker::Average);
    let cov = rx.iter().covariance(ry.iter());
    cov / (rx.iter().std_dev() * ry.iter().std_dev())
}
