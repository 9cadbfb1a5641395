use autoseq::sequences::{ones_count, pattern_count, pattern_count_u128};
use autoseq::{prefix, term, BigIndex, BitSeq, Family, IndexPoly, SequenceSpec};
use num_bigint::BigUint;
use proptest::prelude::*;

fn spec_strategy() -> impl Strategy<Value = SequenceSpec> {
    let family = prop_oneof![Just(Family::ThueMorse), (1u32..=5).prop_map(Family::Pattern)];
    let poly = prop_oneof![
        Just(IndexPoly::identity()),
        Just(IndexPoly::squares()),
        (1usize..=4).prop_map(|d| IndexPoly::monomial(d).unwrap()),
        prop::collection::vec(0u64..5, 2..4)
            .prop_filter("nonconstant", |c| c[1..].iter().any(|&x| x != 0))
            .prop_map(|c| IndexPoly::new(c).unwrap()),
    ];
    (family, poly).prop_map(|(f, p)| SequenceSpec::new(f, p).unwrap())
}

/// Occurrences of k consecutive ones in the binary expansion, by scanning
/// the digit string.
fn count_by_scan(n: u128, k: u32) -> u32 {
    let digits = format!("{n:b}");
    let bytes = digits.as_bytes();
    (0..bytes.len())
        .filter(|&i| i + k as usize <= bytes.len() && bytes[i..i + k as usize].iter().all(|&b| b == b'1'))
        .count() as u32
}

proptest! {
    #[test]
    fn prefixes_are_consistent(spec in spec_strategy(), n in 0usize..300, m in 0usize..300) {
        let (short, long) = (n.min(m), n.max(m));
        let a = prefix(&spec, long).unwrap();
        let b = prefix(&spec, short).unwrap();
        prop_assert_eq!(a.prefix(short).unwrap(), b);
    }

    #[test]
    fn prefix_matches_pointwise_terms(spec in spec_strategy(), n in 1usize..200) {
        let s = prefix(&spec, n).unwrap();
        for i in 0..n {
            prop_assert_eq!(s.get(i), term(&spec, &BigIndex::from(i as u64)).unwrap());
        }
    }

    #[test]
    fn pattern_count_agrees_with_scan(n in any::<u128>(), k in 1u32..8) {
        prop_assert_eq!(pattern_count_u128(n, k), count_by_scan(n, k));
        prop_assert_eq!(pattern_count(&BigIndex::from(n), k) as u32, count_by_scan(n, k));
    }

    #[test]
    fn disjoint_supports_add(a in any::<u64>(), b in any::<u64>(), gap in 0u32..4) {
        // a sits strictly above b: s_1 adds over disjoint supports
        let low = BigIndex::from(b);
        let high = BigIndex::from(BigUint::from(a) << (64 + gap));
        let sum = high.clone() + low.clone();
        prop_assert_eq!(ones_count(&sum), ones_count(&high) + ones_count(&low));
    }
}

#[test]
fn thue_morse_recurrence_along_big_indices() {
    let spec = SequenceSpec::thue_morse();
    let big = BigIndex::pow2(200) + BigIndex::from(12345u64);
    let twice = big.clone() + big.clone();
    let plus_one = twice.clone() + BigIndex::from(1u64);
    assert_eq!(term(&spec, &twice).unwrap(), term(&spec, &big).unwrap());
    assert_eq!(term(&spec, &plus_one).unwrap(), !term(&spec, &big).unwrap());
}

#[test]
fn explicit_family_reads_bits_as_given() {
    let bits: BitSeq = "0110100110010110".parse().unwrap();
    let spec = SequenceSpec::explicit(bits.clone());
    assert_eq!(prefix(&spec, 16).unwrap(), bits);
    assert!(prefix(&spec, 17).is_err());
}
