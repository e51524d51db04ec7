//! Property tests over the public API.

use proptest::prelude::*;

use inv2w::latency::{build_program, schedule, CostModel};
use inv2w::modring::{OddResidue, Residue, Width};
use inv2w::{invert, AlgoKind, SeedKind};

/// Arbitrary width from 1 to 256 bits plus a couple of big outliers, biased
/// toward the interesting small/machine range.
fn width_strategy() -> impl Strategy<Value = Width> {
    prop_oneof![
        (1u32..=130).prop_map(|b| Width::new(b).unwrap()),
        Just(Width::new(1000).unwrap()),
        Just(Width::new(4096).unwrap()),
    ]
}

fn residue_strategy() -> impl Strategy<Value = Residue> {
    (width_strategy(), proptest::collection::vec(any::<u8>(), 1..=64))
        .prop_map(|(w, bytes)| Residue::from_le_bytes(&bytes, w))
}

fn residue_pair() -> impl Strategy<Value = (Residue, Residue)> {
    (
        width_strategy(),
        proptest::collection::vec(any::<u8>(), 1..=64),
        proptest::collection::vec(any::<u8>(), 1..=64),
    )
        .prop_map(|(w, ab, bb)| {
            (
                Residue::from_le_bytes(&ab, w),
                Residue::from_le_bytes(&bb, w),
            )
        })
}

proptest! {
    /// sub(add(a, b), b) = a at every width.
    #[test]
    fn add_sub_roundtrip((a, b) in residue_pair()) {
        prop_assert_eq!(a.add(&b).sub(&b), a);
    }

    /// a - b = -(b - a).
    #[test]
    fn sub_antisymmetry((a, b) in residue_pair()) {
        prop_assert_eq!(a.sub(&b), b.sub(&a).neg());
    }

    /// Multiplication distributes over addition modulo 2^w.
    #[test]
    fn mul_distributes_over_add(
        (a, b) in residue_pair(),
        extra in proptest::collection::vec(any::<u8>(), 1..=64),
    ) {
        let c = Residue::from_le_bytes(&extra, a.width());
        prop_assert_eq!(
            a.mul(&b.add(&c)),
            a.mul(&b).add(&a.mul(&c))
        );
    }

    /// All four algorithms agree and invert, at arbitrary widths.
    #[test]
    fn algorithms_agree(r in residue_strategy()) {
        let width = r.width();
        let a = OddResidue::new(r.or(&Residue::one(width))).unwrap();
        let kind = SeedKind::default_for(width);
        let reference = invert(AlgoKind::Euclid, &a, kind).unwrap();
        prop_assert!(a.residue().mul(&reference).is_one());
        for algo in [AlgoKind::Improved, AlgoKind::Newton, AlgoKind::DumasOriginal] {
            prop_assert_eq!(&invert(algo, &a, kind).unwrap(), &reference);
        }
    }

    /// Raising any single latency never lowers any program's total.
    #[test]
    fn schedule_total_is_monotone(
        mul in 1u32..6, add in 1u32..4, xor in 1u32..4, mul3 in 1u32..4,
        bump in 1u32..4, which in 0usize..4,
    ) {
        let base = CostModel { mul, add, xor, mul3 };
        let mut bumped = base;
        match which {
            0 => bumped.mul += bump,
            1 => bumped.add += bump,
            2 => bumped.xor += bump,
            _ => bumped.mul3 += bump,
        }
        for algo in [AlgoKind::Improved, AlgoKind::Newton, AlgoKind::DumasOriginal] {
            let prog = build_program(algo, Width::W64, SeedKind::K4Mont).unwrap();
            let before = schedule(&prog, &base).unwrap().total_latency;
            let after = schedule(&prog, &bumped).unwrap().total_latency;
            prop_assert!(after >= before);
        }
    }
}
