use autoseq::complexity::{block_frequencies, subword_complexity};
use autoseq::{prefix, SequenceSpec};

fn main() -> autoseq::Result<()> {
    let n = 1 << 18;
    let t = prefix(&SequenceSpec::thue_morse(), n)?;
    let tsq = prefix(&SequenceSpec::thue_morse_squares(), n)?;
    println!(" n   p_T(n)  p_T'(n)");
    for len in 1..=10 {
        println!(
            "{len:>2} {:>8} {:>8}",
            subword_complexity(&t, len)?,
            subword_complexity(&tsq, len)?
        );
    }

    let f = block_frequencies(&tsq, 2)?;
    for block in ["00", "01", "10", "11"] {
        println!("freq({block}) in T' = {:.4}", f.frequency(block).unwrap());
    }
    Ok(())
}
