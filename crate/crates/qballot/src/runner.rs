//! Fans suite items out over a thread pool and merges the results in item
//! order, so output does not depend on scheduling.

use rayon::prelude::*;

use qballot_core::analysis::{run_suite_item, Suite, SuiteOptions, SuiteReport};
use qballot_core::report::CheckResult;

use crate::error::{FormatError, Result};
use crate::shared::SharedBallotTable;

/// `jobs = None` uses rayon's default thread count.
pub fn run_parallel(
    suite: Suite,
    max_n: u32,
    opts: SuiteOptions,
    jobs: Option<usize>,
    cache: &SharedBallotTable,
) -> Result<SuiteReport> {
    let items = suite.items(max_n);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| FormatError::malformed("thread pool", e.to_string()))?;
    let per_item: Vec<qballot_core::Result<Vec<CheckResult>>> = pool.install(|| {
        items
            .par_iter()
            .map(|&item| run_suite_item(suite, item, max_n, opts, &mut cache.clone()))
            .collect()
    });
    let mut results = Vec::new();
    for r in per_item {
        results.extend(r?);
    }
    Ok(SuiteReport::new(suite, results))
}
