use autoseq::f2algebra::{F2Bivariate, F2Matrix, F2Series};
use autoseq::BitSeq;
use proptest::prelude::*;

fn series(n: usize) -> impl Strategy<Value = F2Series> {
    prop::collection::vec(any::<bool>(), n)
        .prop_map(move |v| F2Series::from_bitseq(&v.into_iter().collect(), n).unwrap())
}

fn series_triple() -> impl Strategy<Value = (F2Series, F2Series, F2Series)> {
    (1usize..=64).prop_flat_map(|n| (series(n), series(n), series(n)))
}

fn bivariate() -> impl Strategy<Value = F2Bivariate> {
    prop::collection::vec((0u32..6, 0u32..6), 0..10).prop_map(|m| m.into_iter().collect())
}

/// Rank by elimination on `Vec<Vec<bool>>`, kept apart from the packed
/// implementation under test.
fn plain_rank(rows: &[Vec<bool>]) -> usize {
    let mut rows = rows.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let pivot = rows[rank].clone();
                for (a, b) in rows[r].iter_mut().zip(pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #[test]
    fn multiplication_is_commutative_and_associative((a, b, c) in series_triple()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes((a, b, c) in series_triple()) {
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn frobenius(a in (1usize..=128).prop_flat_map(series)) {
        // G(x)^2 = G(x^2) in characteristic two
        let n = a.truncation();
        let squared = a.mul(&a).unwrap();
        let spread: BitSeq = (0..n).map(|i| i % 2 == 0 && a.coeff(i / 2)).collect();
        prop_assert_eq!(squared.coeffs(), &spread);
    }

    #[test]
    fn kernel_vector_iff_rank_deficient(
        rows in (1usize..12, 1usize..12).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(any::<bool>(), c), r)
        })
    ) {
        let packed: Vec<BitSeq> = rows.iter().map(|r| r.iter().copied().collect()).collect();
        let m = F2Matrix::from_rows(&packed).unwrap();
        let rank = plain_rank(&rows);
        prop_assert_eq!(m.rank(), rank);
        match m.kernel_vector() {
            None => prop_assert_eq!(rank, rows.len()),
            Some(v) => {
                prop_assert!(rank < rows.len());
                prop_assert!(!v.is_zero());
                prop_assert!(m.left_mul(&v).is_zero());
            }
        }
    }

    #[test]
    fn evaluation_is_additive(h1 in bivariate(), h2 in bivariate(), g in (1usize..=64).prop_flat_map(series)) {
        let sum = &h1 + &h2;
        let left = sum.eval(&g).unwrap();
        let right = h1.eval(&g).unwrap().add(&h2.eval(&g).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn evaluation_is_multiplicative(h1 in bivariate(), h2 in bivariate(), g in (1usize..=64).prop_flat_map(series)) {
        let product = &h1 * &h2;
        let left = product.eval(&g).unwrap();
        let right = h1.eval(&g).unwrap().mul(&h2.eval(&g).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn mismatched_truncations_are_rejected() {
    let a = F2Series::one(4);
    let b = F2Series::one(5);
    assert!(a.mul(&b).is_err());
    assert!(a.add(&b).is_err());
}
