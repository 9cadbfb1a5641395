//! Prefixes of Thue-Morse and pattern sequences along polynomial indices.
//!
//! Run with `cargo run --example generate_sequences`.

use autoseq::{prefix, term, BigIndex, Family, IndexPoly, SequenceSpec};

fn main() -> autoseq::Result<()> {
    let specs = [
        ("Thue-Morse", SequenceSpec::thue_morse()),
        ("Thue-Morse along squares", SequenceSpec::thue_morse_squares()),
        ("Rudin-Shapiro", SequenceSpec::pattern(2)?),
        ("Rudin-Shapiro along squares", SequenceSpec::pattern_squares(2)?),
        (
            "pattern 3 along 1 + i + i^3",
            SequenceSpec::new(Family::Pattern(3), "1,1,0,1".parse::<IndexPoly>()?)?,
        ),
    ];
    for (name, spec) in &specs {
        println!("{name:<30} {}", prefix(spec, 48)?);
    }

    // single terms at indices far beyond any prefix
    let huge = BigIndex::pow2(100) + BigIndex::from(7u64);
    let t2 = SequenceSpec::thue_morse_squares();
    println!("t((2^100 + 7)^2) = {}", term(&t2, &huge)? as u8);
    Ok(())
}
