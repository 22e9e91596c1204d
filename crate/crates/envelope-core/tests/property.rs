//! Randomized property tests: straightening confluence against the
//! independent reduction oracle, exp/log inversion, and the antisymmetry
//! of the truncated Baker-Campbell-Hausdorff bracket.

use proptest::collection::vec;
use proptest::prelude::*;

use envelope_core::corpus;
use envelope_core::pbw::{self, PbwElement};
use envelope_core::scalar::ratio;
use envelope_core::trunc::GradedTruncation;
use envelope_core::verify::free_reduce;
use envelope_core::Rat;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Straightening is confluent: the leftmost-descent strategy and the
    /// oracle's rightmost-descent strategy give the same normal form.
    #[test]
    fn straighten_confluent_heisenberg(word in vec(0usize..3, 0..7)) {
        let l = corpus::heisenberg();
        prop_assert_eq!(pbw::straighten(&l, &word), free_reduce(&l, &word));
    }

    #[test]
    fn straighten_confluent_sl2(word in vec(0usize..3, 0..6)) {
        let l = corpus::sl2();
        prop_assert_eq!(pbw::straighten(&l, &word), free_reduce(&l, &word));
    }

    /// Splitting a word anywhere and multiplying the straightened halves
    /// gives the straightening of the whole word.
    #[test]
    fn straighten_respects_concatenation(
        word in vec(0usize..3, 0..6),
        cut in 0usize..6,
    ) {
        let l = corpus::sl2();
        let cut = cut.min(word.len());
        let left = pbw::straighten(&l, &word[..cut]);
        let right = pbw::straighten(&l, &word[cut..]);
        prop_assert_eq!(pbw::mul(&l, &left, &right), pbw::straighten(&l, &word));
    }

    /// log(exp a) = a for truncated elements with zero constant term.
    #[test]
    fn exp_log_roundtrip(coeffs in vec(small_rat(), 3)) {
        let l = corpus::heisenberg();
        let t = GradedTruncation::from_weighted(&l, 5).unwrap();
        let a = t.truncate(&PbwElement::from_vector(&coeffs));
        let e = t.exp(&a).unwrap();
        prop_assert_eq!(t.log(&e).unwrap(), a);
    }

}

proptest! {
    // the class-4 model at cutoff 5 is the most expensive fixture; a
    // dozen cases keep the runtime reasonable without losing coverage
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// bch(a, b) = -bch(-b, -a) on the free nilpotent class-4 model.
    #[test]
    fn bch_antisymmetry(xs in vec(small_rat(), 2), ys in vec(small_rat(), 2)) {
        let l = corpus::free_nilpotent_class4();
        let t = GradedTruncation::from_weighted(&l, 5).unwrap();
        let pad = |v: &[Rat]| {
            let mut full = v.to_vec();
            full.resize(l.dim(), Rat::default());
            PbwElement::from_vector(&full)
        };
        let (a, b) = (pad(&xs), pad(&ys));
        let lhs = t.bch(&a, &b).unwrap();
        let rhs = t.bch(&b.neg(), &a.neg()).unwrap().neg();
        prop_assert_eq!(lhs, rhs);
    }
}
