//! Montgomery REDC, the classic consumer of inverses modulo `2^w`.
//!
//! For an odd modulus `n` of width `w` and `R = 2^w`, REDC maps a
//! double-width `t < n*R` to `t * R^{-1} mod n` using only multiplies,
//! adds and shifts. The precomputed constant is the negated inverse
//! `n' = -n^{-1} mod 2^w`, which this crate obtains from
//! [`crate::inverse::invert_improved`].

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::inverse::invert_improved;
use crate::modring::{wide, OddResidue, Residue, Width};
use crate::seeds::SeedKind;

/// Precomputed state for REDC at a fixed odd modulus.
///
/// Immutable after construction and freely shareable across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MontgomeryContext {
    modulus: OddResidue,
    neg_inv: Residue,
}

impl MontgomeryContext {
    /// Precompute `n' = -n^{-1} mod 2^w`. The modulus must be odd (enforced
    /// by the type) and greater than 1.
    pub fn new(modulus: OddResidue) -> Result<MontgomeryContext> {
        if modulus.residue().is_one() {
            return Err(Error::InvalidModulus);
        }
        let inv = invert_improved(&modulus, SeedKind::default_for(modulus.width()))
            .expect("default seed is valid at every width");
        let neg_inv = inv.neg();
        // n * n' ≡ -1 (mod 2^w)
        debug_assert!(modulus
            .residue()
            .mul(&neg_inv)
            .add(&Residue::one(modulus.width()))
            .is_zero());
        Ok(MontgomeryContext { modulus, neg_inv })
    }

    pub fn modulus(&self) -> &OddResidue {
        &self.modulus
    }

    /// The negated inverse `n'`, satisfying `n * n' ≡ 2^w - 1 (mod 2^w)`.
    pub fn neg_inv(&self) -> &Residue {
        &self.neg_inv
    }

    pub fn width(&self) -> Width {
        self.modulus.width()
    }

    /// Montgomery reduction: for `t < n * 2^w` given at width `2w`, returns
    /// `t * 2^{-w} mod n`, fully reduced below `n`.
    pub fn redc(&self, t: &Residue) -> Result<Residue> {
        let w = self.width();
        let wbits = w.bits();
        let expected = 2 * wbits;
        if t.width().bits() != expected {
            return Err(Error::RedcWidthMismatch {
                expected,
                got: t.width().bits(),
            });
        }
        let t_limbs = t.to_limbs();
        let n_limbs = self.modulus.residue().to_limbs();
        // t < n * 2^w  <=>  floor(t / 2^w) < n
        let t_hi = wide::shr(&t_limbs, wbits);
        if wide::cmp(&t_hi, &n_limbs) != Ordering::Less {
            return Err(Error::RedcOperandTooLarge);
        }

        // m = (t mod 2^w) * n' mod 2^w, so that t + m*n ≡ 0 (mod 2^w).
        let mut t_lo = t_limbs.clone();
        wide::mask_in_place(&mut t_lo, wbits);
        let m = wide::mul(&t_lo, &self.neg_inv.to_limbs(), wbits);
        let sum = wide::add_full(&t_limbs, &wide::mul_full(&m, &n_limbs));
        debug_assert!(wide::trailing_zeros(&sum, expected + 1) >= wbits);
        let mut u = wide::shr(&sum, wbits);
        // u < 2n; one conditional subtraction normalizes.
        if wide::cmp(&u, &n_limbs) != Ordering::Less {
            u = wide::sub_assuming_ge(&u, &n_limbs);
        }
        Ok(Residue::from_limbs(u, w))
    }
}
