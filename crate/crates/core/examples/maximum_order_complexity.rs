//! Maximum order complexity: brute force, suffix automaton and witnesses.

use autoseq::complexity::{moc_fast, moc_naive, moc_profile, MocTracker};
use autoseq::{prefix, BitSeq, SequenceSpec};

fn main() -> autoseq::Result<()> {
    let t: BitSeq = "01101001".parse()?;
    let naive = moc_naive(&t, 8)?;
    let fast = moc_fast(&t, 8)?;
    println!("M(01101001) = {} (naive) = {} (automaton)", naive.value, fast.value);
    if let Some(w) = fast.witness {
        println!(
            "  window of length {} at {} and {} is followed by different bits",
            w.window, w.first, w.second
        );
    }

    let tsq = prefix(&SequenceSpec::thue_morse_squares(), 10_000)?;
    let profile = moc_profile(&tsq, 10_000)?;
    for n in [100, 1000, 10_000] {
        let m = profile.value_at(n).unwrap();
        println!(
            "M(T', {n:>5}) = {m:>3}   sqrt(2N/5) = {:.2}",
            (2.0 * n as f64 / 5.0).sqrt()
        );
    }

    // the tracker is online: feed bits one at a time
    let mut tracker = MocTracker::new();
    for bit in "0001000".chars().map(|c| c == '1') {
        tracker.push(bit);
        print!("{} ", tracker.result().value);
    }
    println!();
    Ok(())
}
