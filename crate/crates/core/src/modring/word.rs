use num_traits::{PrimInt, WrappingAdd, WrappingMul, WrappingNeg, WrappingSub};

/// A fixed-width unsigned machine word.
///
/// Wrapping arithmetic on a `Word` is inherently arithmetic modulo
/// `2^Self::BITS`, which is what makes the native widths the fast path for
/// everything in this crate. Implemented for `u8`, `u16`, `u32`, `u64` and
/// `u128`.
pub trait Word:
    PrimInt + WrappingAdd + WrappingSub + WrappingMul + WrappingNeg + 'static
{
    const BITS: u32;

    /// Truncating conversion from `u128`.
    fn from_u128_lossy(v: u128) -> Self;

    /// Widening conversion to `u128`.
    fn as_u128(self) -> u128;
}

macro_rules! impl_word {
    ($($t:ty),* $(,)?) => {$(
        impl Word for $t {
            const BITS: u32 = <$t>::BITS;

            #[inline]
            fn from_u128_lossy(v: u128) -> Self {
                v as $t
            }

            #[inline]
            fn as_u128(self) -> u128 {
                self as u128
            }
        }
    )*};
}

impl_word!(u8, u16, u32, u64, u128);

#[inline]
pub(crate) fn add<W: Word>(a: W, b: W) -> W {
    a.wrapping_add(&b)
}

#[inline]
pub(crate) fn sub<W: Word>(a: W, b: W) -> W {
    a.wrapping_sub(&b)
}

#[inline]
pub(crate) fn mul<W: Word>(a: W, b: W) -> W {
    a.wrapping_mul(&b)
}

#[inline]
pub(crate) fn xor<W: Word>(a: W, b: W) -> W {
    a ^ b
}

#[inline]
pub(crate) fn and<W: Word>(a: W, b: W) -> W {
    a & b
}

#[inline]
pub(crate) fn or<W: Word>(a: W, b: W) -> W {
    a | b
}
