//! Linear complexity and the shortest LFSR via Berlekamp-Massey.

use autoseq::complexity::{berlekamp_massey, linear_complexity_profile, moc_profile};
use autoseq::{prefix, BitSeq, SequenceSpec};

fn main() -> autoseq::Result<()> {
    let s: BitSeq = "001101110101000".parse()?;
    let lfsr = berlekamp_massey(&s, s.len())?;
    println!("L = {}, connection polynomial bits {}", lfsr.length, lfsr.connection);
    println!("regenerates the input: {}", lfsr.generates(&s, s.len()));

    let tsq = prefix(&SequenceSpec::thue_morse_squares(), 2000)?;
    let l = linear_complexity_profile(&tsq, 2000)?;
    let m = moc_profile(&tsq, 2000)?;
    for n in [10, 100, 1000, 2000] {
        println!(
            "N = {n:>4}: L = {:>4}, M = {:>3}",
            l.value_at(n).unwrap(),
            m.value_at(n).unwrap()
        );
    }
    Ok(())
}
