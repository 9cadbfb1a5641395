//! Correlation measure of order k with a lag cap and a work budget.

use autoseq::complexity::{correlation_measure, correlation_measure_capped};
use autoseq::{prefix, Error, SequenceSpec};

fn main() -> autoseq::Result<()> {
    let n = 1024;
    for (name, spec) in [
        ("T", SequenceSpec::thue_morse()),
        ("T'", SequenceSpec::thue_morse_squares()),
    ] {
        let s = prefix(&spec, n)?;
        let c = correlation_measure(&s, n, 2, 64)?;
        println!(
            "C_2({name}, {n}) >= {} at lags {:?}, window {}",
            c.value, c.lags, c.window
        );
    }

    let t = prefix(&SequenceSpec::thue_morse(), n)?;
    match correlation_measure_capped(&t, n, 3, n - 1, 1_000_000) {
        Err(Error::BudgetExceeded { work, partial }) => {
            println!("order 3 over all lags stopped after {work} steps, best so far {partial}")
        }
        other => println!("{other:?}"),
    }
    Ok(())
}
