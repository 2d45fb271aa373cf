//! Timing runs of the tree engine over growing inputs, emitted as CSV.

use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{corona, gen_path, random_tree, Graph};
use crate::tree_count::TreeCounter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Path,
    Caterpillar,
    RandomTree,
    /// `P_n ∘ K_1`; `n` is the order of the base path.
    CoronaPath,
}

impl Family {
    pub fn build(self, n: usize, seed: u64) -> Result<Graph> {
        match self {
            Family::Path => gen_path(n),
            Family::Caterpillar => caterpillar(n),
            Family::RandomTree => random_tree(n, seed),
            Family::CoronaPath => corona(&gen_path(n)?, 1),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        <Family as clap::ValueEnum>::from_str(s, false).map_err(Error::InvalidArgument)
    }
}

/// Spine `0..s` with `s = ceil(n/2)`; the other `n - s` vertices hang as
/// single leaves off spine vertices `0, 1, ..`.
pub fn caterpillar(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::arg("caterpillar order must be at least 1"));
    }
    let spine = n.div_ceil(2);
    let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
    edges.extend((0..n - spine).map(|i| (i, spine + i)));
    Graph::from_edges(n, &edges)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub engine: &'static str,
    pub millis: f64,
    pub count: BigUint,
}

/// Runs the tree engine with a fresh memo on each input size.
pub fn bench_rows(family: Family, sizes: &[usize], seed: u64) -> Result<Vec<BenchRow>> {
    sizes
        .iter()
        .map(|&n| {
            let graph = family.build(n, seed)?;
            let start = Instant::now();
            let count = TreeCounter::default().w2(&graph)?;
            Ok(BenchRow {
                n,
                engine: "tree",
                millis: start.elapsed().as_secs_f64() * 1e3,
                count,
            })
        })
        .collect()
}

/// CSV with header `n,engine,ms,count`. Without timing the `ms` field is left
/// empty so output is reproducible byte for byte.
pub fn write_csv(rows: &[BenchRow], timing: bool, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "n,engine,ms,count")?;
    for row in rows {
        let ms = if timing {
            format!("{:.3}", row.millis)
        } else {
            String::new()
        };
        writeln!(out, "{},{},{},{}", row.n, row.engine, ms, row.count)?;
    }
    Ok(())
}

/// Least-squares slope of `ln(ms)` against `ln(n)`.
pub fn log_log_slope(rows: &[BenchRow]) -> Option<f64> {
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.millis > 0.0)
        .map(|r| ((r.n as f64).ln(), r.millis.ln()))
        .collect();
    if points.len() < 2 {
        return None;
    }
    let k = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
