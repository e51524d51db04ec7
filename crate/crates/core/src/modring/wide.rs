//! Limb arithmetic for widths with no native integer type.
//!
//! Values are little-endian `u64` limb vectors. Functions taking a `bits`
//! argument keep the result reduced modulo `2^bits`: exactly `nlimbs(bits)`
//! limbs with the unused high bits of the top limb cleared. The `*_full`
//! helpers operate on untruncated integers and are used where full products
//! are needed (REDC, exactness checks).

use std::cmp::Ordering;

pub(crate) fn nlimbs(bits: u32) -> usize {
    (bits as usize).div_ceil(64)
}

/// Reduce `limbs` modulo `2^bits` in place, resizing to `nlimbs(bits)`.
pub(crate) fn mask_in_place(limbs: &mut Vec<u64>, bits: u32) {
    limbs.resize(nlimbs(bits), 0);
    let rem = bits % 64;
    if rem != 0 {
        let last = limbs.len() - 1;
        limbs[last] &= (1u64 << rem) - 1;
    }
}

pub(crate) fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|&l| l == 0)
}

pub(crate) fn add(a: &[u64], b: &[u64], bits: u32) -> Vec<u64> {
    debug_assert_eq!(a.len(), b.len());
    let mut out = Vec::with_capacity(a.len());
    let mut carry = 0u64;
    for (&x, &y) in a.iter().zip(b) {
        let (s1, c1) = x.overflowing_add(y);
        let (s2, c2) = s1.overflowing_add(carry);
        out.push(s2);
        carry = (c1 | c2) as u64;
    }
    mask_in_place(&mut out, bits);
    out
}

pub(crate) fn sub(a: &[u64], b: &[u64], bits: u32) -> Vec<u64> {
    debug_assert_eq!(a.len(), b.len());
    let mut out = Vec::with_capacity(a.len());
    let mut borrow = 0u64;
    for (&x, &y) in a.iter().zip(b) {
        let (d1, b1) = x.overflowing_sub(y);
        let (d2, b2) = d1.overflowing_sub(borrow);
        out.push(d2);
        borrow = (b1 | b2) as u64;
    }
    mask_in_place(&mut out, bits);
    out
}

pub(crate) fn neg(a: &[u64], bits: u32) -> Vec<u64> {
    let zero = vec![0u64; a.len()];
    sub(&zero, a, bits)
}

pub(crate) fn xor(a: &[u64], b: &[u64], _bits: u32) -> Vec<u64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x ^ y).collect()
}

pub(crate) fn and(a: &[u64], b: &[u64], _bits: u32) -> Vec<u64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x & y).collect()
}

pub(crate) fn or(a: &[u64], b: &[u64], _bits: u32) -> Vec<u64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x | y).collect()
}

/// Schoolbook multiply, keeping only the limbs below `2^bits`.
pub(crate) fn mul(a: &[u64], b: &[u64], bits: u32) -> Vec<u64> {
    let n = nlimbs(bits);
    let mut acc = vec![0u64; n];
    for (i, &x) in a.iter().enumerate() {
        if i >= n || x == 0 {
            continue;
        }
        let mut carry = 0u128;
        for (j, &y) in b.iter().enumerate() {
            let k = i + j;
            if k >= n {
                break;
            }
            let t = (x as u128) * (y as u128) + (acc[k] as u128) + carry;
            acc[k] = t as u64;
            carry = t >> 64;
        }
    }
    mask_in_place(&mut acc, bits);
    acc
}

/// Full (untruncated) schoolbook product, `a.len() + b.len()` limbs.
pub(crate) fn mul_full(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut acc = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let mut carry = 0u128;
        for (j, &y) in b.iter().enumerate() {
            let t = (x as u128) * (y as u128) + (acc[i + j] as u128) + carry;
            acc[i + j] = t as u64;
            carry = t >> 64;
        }
        let mut k = i + b.len();
        while carry > 0 {
            let t = acc[k] as u128 + carry;
            acc[k] = t as u64;
            carry = t >> 64;
            k += 1;
        }
    }
    acc
}

/// Full (untruncated) sum; result has `max(len) + 1` limbs.
pub(crate) fn add_full(a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n + 1);
    let mut carry = 0u64;
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        let (s1, c1) = x.overflowing_add(y);
        let (s2, c2) = s1.overflowing_add(carry);
        out.push(s2);
        carry = (c1 | c2) as u64;
    }
    out.push(carry);
    out
}

/// `a - b` where the caller guarantees `a >= b`; result has `a.len()` limbs.
pub(crate) fn sub_assuming_ge(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len());
    let mut borrow = 0u64;
    for (i, &x) in a.iter().enumerate() {
        let y = b.get(i).copied().unwrap_or(0);
        let (d1, b1) = x.overflowing_sub(y);
        let (d2, b2) = d1.overflowing_sub(borrow);
        out.push(d2);
        borrow = (b1 | b2) as u64;
    }
    debug_assert_eq!(borrow, 0, "sub_assuming_ge called with a < b");
    out
}

/// Integer comparison; unequal lengths are fine (missing limbs read as 0).
pub(crate) fn cmp(a: &[u64], b: &[u64]) -> Ordering {
    let n = a.len().max(b.len());
    for i in (0..n).rev() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// Left shift modulo `2^bits`. The caller guarantees `shift < bits`.
pub(crate) fn shl(a: &[u64], shift: u32, bits: u32) -> Vec<u64> {
    debug_assert!(shift < bits);
    let n = nlimbs(bits);
    let limb_off = (shift / 64) as usize;
    let bit_off = shift % 64;
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().enumerate() {
        if i < limb_off {
            continue;
        }
        let src = i - limb_off;
        let mut v = a.get(src).copied().unwrap_or(0) << bit_off;
        if bit_off > 0 && src > 0 {
            v |= a[src - 1] >> (64 - bit_off);
        }
        *slot = v;
    }
    mask_in_place(&mut out, bits);
    out
}

/// Logical right shift of the full value.
pub(crate) fn shr(a: &[u64], shift: u32) -> Vec<u64> {
    let limb_off = (shift / 64) as usize;
    let bit_off = shift % 64;
    let out_len = a.len().saturating_sub(limb_off);
    let mut out = vec![0u64; out_len.max(1)];
    for (i, slot) in out.iter_mut().enumerate().take(out_len) {
        let src = i + limb_off;
        let mut v = a[src] >> bit_off;
        if bit_off > 0 && src + 1 < a.len() {
            v |= a[src + 1] << (64 - bit_off);
        }
        *slot = v;
    }
    out
}

pub(crate) fn trailing_zeros(a: &[u64], bits: u32) -> u32 {
    for (i, &l) in a.iter().enumerate() {
        if l != 0 {
            return ((i as u32) * 64 + l.trailing_zeros()).min(bits);
        }
    }
    bits
}

/// Divide by a single nonzero limb, returning (quotient, remainder).
pub(crate) fn divmod_small(a: &[u64], d: u64) -> (Vec<u64>, u64) {
    debug_assert!(d != 0);
    let mut q = vec![0u64; a.len()];
    let mut rem = 0u64;
    for i in (0..a.len()).rev() {
        let cur = ((rem as u128) << 64) | a[i] as u128;
        q[i] = (cur / d as u128) as u64;
        rem = (cur % d as u128) as u64;
    }
    (q, rem)
}
