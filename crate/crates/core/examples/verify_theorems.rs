//! Runs the identity checks behind the lower bounds and the bounds
//! themselves, then shows that a perturbed identity is caught.

use autoseq::verification::{
    check_sk_with, check_theorem1, check_theorem2, check_ti, run_suite, Control, SuiteConfig,
};

fn main() -> autoseq::Result<()> {
    println!("{}", check_ti(10)?);
    println!("{}", check_sk_with(3, 4, Control::Faithful)?);
    println!("{}", check_sk_with(3, 4, Control::Mutated)?);
    println!("{}", check_theorem1(21..=20_000)?);
    println!("{}", check_theorem2(3, 256..=16_384)?);

    let cfg = SuiteConfig {
        lmax: 6,
        kmax: 3,
        sk_lmax: 4,
        theorem1_nmax: 2000,
        theorem2_nmax: 2000,
        suwi_nmax: 2000,
        oracle_samples: 50,
        ..SuiteConfig::default()
    };
    let records = run_suite(&cfg, |_| {})?;
    let failed = records.iter().filter(|r| !r.holds()).count();
    println!("small suite: {} checks, {failed} failed", records.len());
    Ok(())
}
