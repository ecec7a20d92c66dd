//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//! Run with `--nocapture` to see the lines.

use std::time::{Duration, Instant};

use liejordan_cli::suite::{self, NAMES};

/// Wall-clock budgets; criteria without an entry get a generous default.
fn budget(name: &str) -> Duration {
    let secs = match name {
        "counterexample" => 1,
        "jordan-existence" => 120,
        "semisimple-parts" => 300,
        "nonclosedness" => 600,
        _ => 600,
    };
    Duration::from_secs(secs)
}

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for (i, name) in NAMES.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let result = suite::run(name);
        let elapsed = start.elapsed();
        let within = elapsed <= budget(name);
        let line = match &result {
            Ok((true, _)) if within => format!("PASS [{n}] {name} ({} ms)", elapsed.as_millis()),
            Ok((true, _)) => format!("FAIL [{n}] {name}: took {} ms, budget {} s", elapsed.as_millis(), budget(name).as_secs()),
            Ok((false, detail)) => format!("FAIL [{n}] {name}: {detail}"),
            Err(e) => format!("FAIL [{n}] {name}: error: {e}"),
        };
        println!("{line}");
        if !line.starts_with("PASS") {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
