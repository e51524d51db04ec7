//! Wrapping arithmetic modulo `2^w`.
//!
//! [`Residue`] is an integer stored fully reduced modulo `2^w` for a runtime
//! [`Width`] `w`. The machine widths 8/16/32/64/128 are computed with native
//! wrapping arithmetic through the [`Word`] trait; every other width uses a
//! `u64`-limb representation. The two paths are bit-identical wherever both
//! apply.
//!
//! All residues are kept fully reduced, so equality is structural. Binary
//! operations require both operands to share a width and panic otherwise;
//! a width mismatch is a caller bug, not a runtime condition.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

pub(crate) mod wide;
mod word;

pub use word::Word;

/// A bit width `w` for arithmetic modulo `2^w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Width(u32);

impl Width {
    /// Upper bound accepted by [`Width::new`]. The bound keeps exhaustive
    /// testing tractable; nothing in the representation depends on it.
    pub const MAX_BITS: u32 = 4096;

    pub const W8: Width = Width(8);
    pub const W16: Width = Width(16);
    pub const W32: Width = Width(32);
    pub const W64: Width = Width(64);
    pub const W128: Width = Width(128);

    pub fn new(bits: u32) -> Result<Width> {
        if bits == 0 || bits > Self::MAX_BITS {
            return Err(Error::InvalidWidth(bits));
        }
        Ok(Width(bits))
    }

    /// Internal constructor without the `MAX_BITS` cap, for transient widened
    /// computations (e.g. a width-4096 inverse through a k=5 seed widens to
    /// 5120 bits internally).
    pub(crate) fn internal(bits: u32) -> Width {
        debug_assert!(bits > 0);
        Width(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// True when a native integer type of exactly this width exists.
    pub fn is_machine(self) -> bool {
        matches!(self.0, 8 | 16 | 32 | 64 | 128)
    }
}

impl fmt::Display for Width {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    U8(u8),
    U16(u16),
    U32(u32),
    U64(u64),
    U128(u128),
    Wide(Vec<u64>),
}

/// An integer reduced modulo `2^w`, tagged with its width.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    width: Width,
    repr: Repr,
}

macro_rules! dispatch_binop {
    ($lhs:expr, $rhs:expr, $wordfn:ident, $widefn:ident) => {
        match (&$lhs.repr, &$rhs.repr) {
            (Repr::U8(a), Repr::U8(b)) => Repr::U8(word::$wordfn(*a, *b)),
            (Repr::U16(a), Repr::U16(b)) => Repr::U16(word::$wordfn(*a, *b)),
            (Repr::U32(a), Repr::U32(b)) => Repr::U32(word::$wordfn(*a, *b)),
            (Repr::U64(a), Repr::U64(b)) => Repr::U64(word::$wordfn(*a, *b)),
            (Repr::U128(a), Repr::U128(b)) => Repr::U128(word::$wordfn(*a, *b)),
            (Repr::Wide(a), Repr::Wide(b)) => {
                Repr::Wide(wide::$widefn(a, b, $lhs.width.bits()))
            }
            _ => unreachable!("equal widths imply equal representations"),
        }
    };
}

impl Residue {
    /// Reduce an arbitrary `u128` value modulo `2^w`.
    pub fn reduce(value: u128, width: Width) -> Residue {
        Residue::from_limbs(vec![value as u64, (value >> 64) as u64], width)
    }

    pub fn zero(width: Width) -> Residue {
        Residue::reduce(0, width)
    }

    pub fn one(width: Width) -> Residue {
        Residue::reduce(1, width)
    }

    /// Build a residue from little-endian bytes, reducing modulo `2^w`.
    pub fn from_le_bytes(bytes: &[u8], width: Width) -> Residue {
        let mut limbs = vec![0u64; bytes.len().div_ceil(8)];
        for (i, &b) in bytes.iter().enumerate() {
            limbs[i / 8] |= (b as u64) << (8 * (i % 8));
        }
        Residue::from_limbs(limbs, width)
    }

    /// Parse a decimal or hexadecimal string, reducing modulo `2^w`.
    /// Reduction is exact for inputs of any length because the digit loop
    /// itself runs modulo `2^w`.
    pub fn from_str_radix(text: &str, radix: u32, width: Width) -> Result<Residue> {
        assert!(radix == 10 || radix == 16, "unsupported radix {radix}");
        if text.is_empty() {
            return Err(Error::InvalidNumber("empty string".to_string()));
        }
        let base = Residue::reduce(radix as u128, width);
        let mut acc = Residue::zero(width);
        for c in text.chars() {
            let d = c
                .to_digit(radix)
                .ok_or_else(|| Error::InvalidNumber(format!("bad digit {c:?} in {text:?}")))?;
            acc = acc.mul(&base).add(&Residue::reduce(d as u128, width));
        }
        Ok(acc)
    }

    /// Parse decimal or `0x`-prefixed hexadecimal.
    pub fn parse(text: &str, width: Width) -> Result<Residue> {
        let t = text.trim();
        match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
            Some(hex) => Residue::from_str_radix(hex, 16, width),
            None => Residue::from_str_radix(t, 10, width),
        }
    }

    pub fn width(&self) -> Width {
        self.width
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::U8(v) => *v == 0,
            Repr::U16(v) => *v == 0,
            Repr::U32(v) => *v == 0,
            Repr::U64(v) => *v == 0,
            Repr::U128(v) => *v == 0,
            Repr::Wide(l) => wide::is_zero(l),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Residue::one(self.width)
    }

    pub fn is_odd(&self) -> bool {
        match &self.repr {
            Repr::U8(v) => v & 1 == 1,
            Repr::U16(v) => v & 1 == 1,
            Repr::U32(v) => v & 1 == 1,
            Repr::U64(v) => v & 1 == 1,
            Repr::U128(v) => v & 1 == 1,
            Repr::Wide(l) => l[0] & 1 == 1,
        }
    }

    /// The value if it fits in a `u128`.
    pub fn to_u128(&self) -> Option<u128> {
        match &self.repr {
            Repr::U8(v) => Some(*v as u128),
            Repr::U16(v) => Some(*v as u128),
            Repr::U32(v) => Some(*v as u128),
            Repr::U64(v) => Some(*v as u128),
            Repr::U128(v) => Some(*v),
            Repr::Wide(l) => {
                if l.iter().skip(2).any(|&x| x != 0) {
                    None
                } else {
                    let lo = l.first().copied().unwrap_or(0) as u128;
                    let hi = l.get(1).copied().unwrap_or(0) as u128;
                    Some(lo | hi << 64)
                }
            }
        }
    }

    /// Number of trailing zero bits of the value; the all-zero residue
    /// reports the full width.
    pub fn trailing_zeros(&self) -> u32 {
        let bits = self.width.bits();
        match &self.repr {
            Repr::U8(v) => v.trailing_zeros().min(bits),
            Repr::U16(v) => v.trailing_zeros().min(bits),
            Repr::U32(v) => v.trailing_zeros().min(bits),
            Repr::U64(v) => v.trailing_zeros().min(bits),
            Repr::U128(v) => v.trailing_zeros().min(bits),
            Repr::Wide(l) => wide::trailing_zeros(l, bits),
        }
    }

    fn assert_same_width(&self, rhs: &Residue, op: &str) {
        assert_eq!(
            self.width, rhs.width,
            "residue width mismatch in {op}: {} vs {}",
            self.width, rhs.width
        );
    }

    pub fn add(&self, rhs: &Residue) -> Residue {
        self.assert_same_width(rhs, "add");
        Residue {
            width: self.width,
            repr: dispatch_binop!(self, rhs, add, add),
        }
    }

    pub fn sub(&self, rhs: &Residue) -> Residue {
        self.assert_same_width(rhs, "sub");
        Residue {
            width: self.width,
            repr: dispatch_binop!(self, rhs, sub, sub),
        }
    }

    pub fn mul(&self, rhs: &Residue) -> Residue {
        self.assert_same_width(rhs, "mul");
        Residue {
            width: self.width,
            repr: dispatch_binop!(self, rhs, mul, mul),
        }
    }

    pub fn xor(&self, rhs: &Residue) -> Residue {
        self.assert_same_width(rhs, "xor");
        Residue {
            width: self.width,
            repr: dispatch_binop!(self, rhs, xor, xor),
        }
    }

    pub fn and(&self, rhs: &Residue) -> Residue {
        self.assert_same_width(rhs, "and");
        Residue {
            width: self.width,
            repr: dispatch_binop!(self, rhs, and, and),
        }
    }

    pub fn or(&self, rhs: &Residue) -> Residue {
        self.assert_same_width(rhs, "or");
        Residue {
            width: self.width,
            repr: dispatch_binop!(self, rhs, or, or),
        }
    }

    pub fn neg(&self) -> Residue {
        let repr = match &self.repr {
            Repr::U8(v) => Repr::U8(v.wrapping_neg()),
            Repr::U16(v) => Repr::U16(v.wrapping_neg()),
            Repr::U32(v) => Repr::U32(v.wrapping_neg()),
            Repr::U64(v) => Repr::U64(v.wrapping_neg()),
            Repr::U128(v) => Repr::U128(v.wrapping_neg()),
            Repr::Wide(l) => Repr::Wide(wide::neg(l, self.width.bits())),
        };
        Residue {
            width: self.width,
            repr,
        }
    }

    /// Left shift modulo `2^w`; shifts of `w` or more yield zero.
    pub fn shl(&self, shift: u32) -> Residue {
        let bits = self.width.bits();
        if shift >= bits {
            return Residue::zero(self.width);
        }
        let repr = match &self.repr {
            Repr::U8(v) => Repr::U8(v << shift),
            Repr::U16(v) => Repr::U16(v << shift),
            Repr::U32(v) => Repr::U32(v << shift),
            Repr::U64(v) => Repr::U64(v << shift),
            Repr::U128(v) => Repr::U128(v << shift),
            Repr::Wide(l) => Repr::Wide(wide::shl(l, shift, bits)),
        };
        Residue {
            width: self.width,
            repr,
        }
    }

    /// Unsigned integer comparison of the values. Panics on width mismatch.
    pub fn value_cmp(&self, rhs: &Residue) -> Ordering {
        self.assert_same_width(rhs, "value_cmp");
        wide::cmp(&self.to_limbs(), &rhs.to_limbs())
    }

    /// Re-interpret the value at a different width, reducing modulo the new
    /// `2^w` when narrowing.
    pub fn resize(&self, width: Width) -> Residue {
        Residue::from_limbs(self.to_limbs(), width)
    }

    pub(crate) fn to_limbs(&self) -> Vec<u64> {
        match &self.repr {
            Repr::U8(v) => vec![*v as u64],
            Repr::U16(v) => vec![*v as u64],
            Repr::U32(v) => vec![*v as u64],
            Repr::U64(v) => vec![*v],
            Repr::U128(v) => vec![*v as u64, (*v >> 64) as u64],
            Repr::Wide(l) => l.clone(),
        }
    }

    pub(crate) fn from_limbs(mut limbs: Vec<u64>, width: Width) -> Residue {
        wide::mask_in_place(&mut limbs, width.bits());
        let repr = match width.bits() {
            8 => Repr::U8(limbs[0] as u8),
            16 => Repr::U16(limbs[0] as u16),
            32 => Repr::U32(limbs[0] as u32),
            64 => Repr::U64(limbs[0]),
            128 => Repr::U128(limbs[0] as u128 | (limbs[1] as u128) << 64),
            _ => Repr::Wide(limbs),
        };
        Residue { width, repr }
    }

    /// The value as an arbitrary-precision integer.
    pub fn to_biguint(&self) -> BigUint {
        let limbs = self.to_limbs();
        let mut bytes = Vec::with_capacity(limbs.len() * 8);
        for l in &limbs {
            bytes.extend_from_slice(&l.to_le_bytes());
        }
        BigUint::from_bytes_le(&bytes)
    }

    /// Reduce an arbitrary-precision integer modulo `2^w`.
    pub fn from_biguint(v: &BigUint, width: Width) -> Residue {
        let bytes = v.to_bytes_le();
        Residue::from_le_bytes(&bytes, width)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::U8(v) => write!(f, "{v}"),
            Repr::U16(v) => write!(f, "{v}"),
            Repr::U32(v) => write!(f, "{v}"),
            Repr::U64(v) => write!(f, "{v}"),
            Repr::U128(v) => write!(f, "{v}"),
            Repr::Wide(l) => {
                // Chunks of 10^19 digits, largest power of ten in a u64.
                const CHUNK: u64 = 10_000_000_000_000_000_000;
                let mut rest = l.clone();
                let mut chunks = Vec::new();
                loop {
                    let (q, r) = wide::divmod_small(&rest, CHUNK);
                    chunks.push(r);
                    if wide::is_zero(&q) {
                        break;
                    }
                    rest = q;
                }
                write!(f, "{}", chunks.pop().unwrap())?;
                for c in chunks.iter().rev() {
                    write!(f, "{c:019}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::LowerHex for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::U8(v) => write!(f, "{v:x}"),
            Repr::U16(v) => write!(f, "{v:x}"),
            Repr::U32(v) => write!(f, "{v:x}"),
            Repr::U64(v) => write!(f, "{v:x}"),
            Repr::U128(v) => write!(f, "{v:x}"),
            Repr::Wide(l) => {
                let mut significant = false;
                for &limb in l.iter().rev() {
                    if significant {
                        write!(f, "{limb:016x}")?;
                    } else if limb != 0 {
                        write!(f, "{limb:x}")?;
                        significant = true;
                    }
                }
                if !significant {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

/// A [`Residue`] whose value is odd, i.e. one that is invertible modulo
/// `2^w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OddResidue(Residue);

impl OddResidue {
    /// Fails with [`Error::InverseDoesNotExist`] for even values.
    pub fn new(r: Residue) -> Result<OddResidue> {
        if r.is_odd() {
            Ok(OddResidue(r))
        } else {
            Err(Error::InverseDoesNotExist)
        }
    }

    pub fn residue(&self) -> &Residue {
        &self.0
    }

    pub fn into_residue(self) -> Residue {
        self.0
    }

    pub fn width(&self) -> Width {
        self.0.width()
    }

    /// Same value at a wider width; oddness is preserved.
    pub(crate) fn resize_up(&self, width: Width) -> OddResidue {
        debug_assert!(width.bits() >= self.width().bits());
        OddResidue(self.0.resize(width))
    }
}

impl fmt::Display for OddResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
