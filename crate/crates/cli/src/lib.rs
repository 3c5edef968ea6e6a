//! Front end for the `lapmult` binary: config loading, the subcommands and
//! their CSV/JSON artifacts.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for config or IO errors.

pub mod commands;
pub mod config;
pub mod output;

pub use commands::{Failure, Report};
pub use config::ExperimentConfig;

use anyhow::Context;
use std::path::Path;

/// Writes `<command>.json` and, when present, `<command>.csv` into `dir`.
pub fn write_report(report: &Report, dir: &Path) -> anyhow::Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let json = serde_json::to_string_pretty(&report.summary)? + "\n";
    let jp = dir.join(format!("{}.json", report.command));
    std::fs::write(&jp, json).with_context(|| format!("cannot write {}", jp.display()))?;
    if let Some(csv) = &report.csv {
        let cp = dir.join(format!("{}.csv", report.command));
        std::fs::write(&cp, csv.render()).with_context(|| format!("cannot write {}", cp.display()))?;
    }
    Ok(())
}
