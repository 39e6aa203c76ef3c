//! End-to-end translation of set-theoretic sentences into the P-language.

use std::time::{Duration, Instant};

use crate::error::BuildError;
use crate::pipeline::homo::h;
use crate::pipeline::reduce::reduce_f;
use crate::syntax::Formula;

/// Size and timing report of one translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationReport {
    pub input: Formula,
    pub output: Formula,
    /// Distinct nodes of the output DAG.
    pub nodes_shared: usize,
    /// Nodes of the unshared tree expansion, saturating at `u64::MAX`.
    pub nodes_tree: u64,
    pub depth: usize,
    pub elapsed: Duration,
}

/// Translate a first-order sentence over membership and equality: reduce to
/// the three-variable membership language, then guard-translate into the
/// P-language. Open formulas are universally closed by the reduction step.
pub fn tr(f: Formula) -> Result<(Formula, TranslationReport), BuildError> {
    let start = Instant::now();
    let reduced = reduce_f(f)?;
    let output = h(reduced)?;
    let elapsed = start.elapsed();
    let report = TranslationReport {
        input: f,
        output,
        nodes_shared: output.node_count_shared(),
        nodes_tree: output.node_count_tree(),
        depth: output.depth(),
        elapsed,
    };
    Ok((output, report))
}
