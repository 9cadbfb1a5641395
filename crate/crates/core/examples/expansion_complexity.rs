//! Expansion complexity and the annihilating polynomial it finds.

use autoseq::complexity::{default_dmax, expansion_complexity};
use autoseq::f2algebra::F2Series;
use autoseq::verification::thue_morse_annihilator;
use autoseq::{prefix, SequenceSpec};

fn main() -> autoseq::Result<()> {
    let t = prefix(&SequenceSpec::thue_morse(), 1 << 14)?;
    for n in [16, 64, 256] {
        let r = expansion_complexity(&t, n, default_dmax(n))?.expect("within the default bound");
        let h = r.annihilator.expect("nonzero prefix");
        println!("E(T, {n}) = {}  via  {h}", r.value);
    }

    let h = thue_morse_annihilator();
    let g = F2Series::from_bitseq(&t, 1 << 14)?;
    println!("{h} vanishes at G_T mod x^16384: {}", h.eval(&g)?.is_zero());

    let tsq = prefix(&SequenceSpec::thue_morse_squares(), 512)?;
    for n in [64, 256, 512] {
        let r = expansion_complexity(&tsq, n, default_dmax(n))?.unwrap();
        println!("E(T', {n}) = {:>2}   sqrt(2N) = {:.2}", r.value, (2.0 * n as f64).sqrt());
    }
    Ok(())
}
