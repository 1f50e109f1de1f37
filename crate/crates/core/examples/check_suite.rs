//! Running a randomized property suite from code.

use valuix::cli::suites::{run_suite, Knobs};

fn main() -> valuix::Result<()> {
    let knobs = Knobs {
        instances: Some(5),
        samples: Some(10),
        ..Knobs::default()
    };
    for suite in ["izumi", "homotopy", "ma-identity"] {
        let r = run_suite(suite, 42, &knobs)?;
        println!(
            "{suite}: passed {}, {} instances, {} checks",
            r.passed, r.instances, r.checks
        );
    }
    Ok(())
}
