//! Parallel K-type scans. Work is split over the scan grid and gathered back
//! in grid order, so output does not depend on the number of threads.

use std::collections::BTreeMap;

use lieball_core::blattner::{multiplicity_with, scan_grid, table_semantics, KTypeTable, ScanBounds};
use lieball_core::kostant::Kostant;
use rayon::prelude::*;

use crate::error::CliError;

pub const THREADS_ENV: &str = "LIEBALL_THREADS";

/// Thread cap from `LIEBALL_THREADS`; `None` leaves the choice to rayon.
pub fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(CliError::Usage(format!(
                "{THREADS_ENV}={v:?} must be a positive integer"
            ))),
            Ok(n) => Ok(Some(n)),
        },
    }
}

pub fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        b = b.num_threads(n);
    }
    Ok(b.build()?)
}

pub fn ktype_table_parallel(
    kostant: &Kostant,
    lambda: i64,
    bounds: ScanBounds,
    threads: Option<usize>,
) -> Result<KTypeTable, CliError> {
    let m = kostant.m();
    let grid = scan_grid(m, bounds);
    let mults = pool(threads)?.install(|| {
        grid.par_iter()
            .map(|pi| multiplicity_with(kostant, lambda, pi))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let entries: BTreeMap<_, _> = grid
        .into_iter()
        .zip(mults)
        .filter(|(_, v)| *v != 0)
        .collect();
    Ok(KTypeTable {
        m,
        lambda,
        entries,
        bounds,
        semantics: table_semantics(m, lambda)?,
    })
}
