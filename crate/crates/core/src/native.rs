//! Branch-free inversion on native machine words.
//!
//! These are the loops a hand-written implementation would unroll for a
//! fixed width: no width dispatch, no allocation, wrapping ops only. The
//! benchmark command uses them so that wall-clock numbers reflect the
//! algorithms rather than dynamic-width bookkeeping. All three use the same
//! iteration counts as the [`crate::inverse`] versions and are tested for
//! equality against them.

use crate::modring::Word;

/// `(3a) ^ 2`, the 4-bit (in fact 5-bit) seed.
#[inline]
fn seed_k4<W: Word>(a: W) -> W {
    a.wrapping_mul(&W::from_u128_lossy(3)) ^ W::from_u128_lossy(2)
}

/// Residual-squaring inverse with the 4-bit seed; `log2(BITS/4)` multiply
/// rounds.
#[inline]
pub fn invert_improved<W: Word>(a: W) -> W {
    debug_assert!(a & W::one() == W::one(), "even values are not invertible");
    let p = (W::BITS / 4).trailing_zeros();
    let mut x = seed_k4(a);
    let mut y = W::one().wrapping_sub(&a.wrapping_mul(&x));
    for _ in 1..p {
        x = x.wrapping_mul(&W::one().wrapping_add(&y));
        y = y.wrapping_mul(&y);
    }
    x.wrapping_mul(&W::one().wrapping_add(&y))
}

/// Newton/Hensel inverse with the 4-bit seed; one serial chain.
#[inline]
pub fn invert_newton<W: Word>(a: W) -> W {
    debug_assert!(a & W::one() == W::one(), "even values are not invertible");
    let p = (W::BITS / 4).trailing_zeros();
    let two = W::from_u128_lossy(2);
    let mut x = seed_k4(a);
    for _ in 0..p {
        x = x.wrapping_mul(&two.wrapping_sub(&a.wrapping_mul(&x)));
    }
    x
}

/// The fixed k=1 form: `y = a - 1`, `u = 2 - a`, square-then-multiply
/// `log2(BITS) - 1` times.
#[inline]
pub fn invert_dumas_original<W: Word>(a: W) -> W {
    debug_assert!(a & W::one() == W::one(), "even values are not invertible");
    let rounds = W::BITS.trailing_zeros() - 1;
    let mut y = a.wrapping_sub(&W::one());
    let mut u = W::from_u128_lossy(2).wrapping_sub(&a);
    for _ in 0..rounds {
        y = y.wrapping_mul(&y);
        u = u.wrapping_mul(&W::one().wrapping_add(&y));
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inverse;
    use crate::modring::{OddResidue, Residue, Width};
    use crate::seeds::SeedKind;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn known_values_u64() {
        assert_eq!(invert_improved(1u64), 1);
        assert_eq!(invert_improved(3u64), 0xaaaa_aaaa_aaaa_aaab);
        assert_eq!(invert_newton(3u64), 0xaaaa_aaaa_aaaa_aaab);
        assert_eq!(invert_dumas_original(3u64), 0xaaaa_aaaa_aaaa_aaab);
        assert_eq!(invert_improved(u64::MAX), u64::MAX);
    }

    #[test]
    fn exhaustive_u8() {
        for a in (1..=u8::MAX).step_by(2) {
            assert_eq!(invert_improved(a).wrapping_mul(a), 1);
            assert_eq!(invert_newton(a).wrapping_mul(a), 1);
            assert_eq!(invert_dumas_original(a).wrapping_mul(a), 1);
        }
    }

    fn check_against_residue_path<W: Word>(rng: &mut StdRng)
    where
        rand::distributions::Standard: rand::distributions::Distribution<W>,
    {
        let width = Width::new(W::BITS).unwrap();
        for _ in 0..200 {
            let a: W = rng.gen::<W>() | W::one();
            let odd = OddResidue::new(Residue::reduce(a.as_u128(), width)).unwrap();
            let want = inverse::invert_improved(&odd, SeedKind::default_for(width)).unwrap();
            assert_eq!(invert_improved(a).as_u128(), want.to_u128().unwrap());
            assert_eq!(invert_newton(a).as_u128(), want.to_u128().unwrap());
            assert_eq!(invert_dumas_original(a).as_u128(), want.to_u128().unwrap());
        }
    }

    #[test]
    fn matches_residue_path_at_every_machine_width() {
        let mut rng = StdRng::seed_from_u64(2024);
        check_against_residue_path::<u8>(&mut rng);
        check_against_residue_path::<u16>(&mut rng);
        check_against_residue_path::<u32>(&mut rng);
        check_against_residue_path::<u64>(&mut rng);
        check_against_residue_path::<u128>(&mut rng);
    }
}
