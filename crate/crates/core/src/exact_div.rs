//! Exact division by an odd constant.
//!
//! When an odd `d` divides `numerator` exactly as ordinary integers, the
//! quotient equals `numerator * d^{-1} mod 2^w` — a multiply instead of a
//! divide. If `d` does not divide the numerator the product is still
//! well-defined modulo `2^w` but is not the integer quotient; the checked
//! variant detects that case.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::inverse::invert_improved;
use crate::modring::{wide, OddResidue, Residue};
use crate::seeds::SeedKind;

/// `numerator * d^{-1} mod 2^w`. Equals the integer quotient whenever `d`
/// divides `numerator` exactly.
pub fn exact_divide(numerator: &Residue, divisor: &OddResidue) -> Residue {
    assert_eq!(
        numerator.width(),
        divisor.width(),
        "numerator and divisor widths must match"
    );
    let inv = invert_improved(divisor, SeedKind::default_for(divisor.width()))
        .expect("default seed is valid at every width");
    numerator.mul(&inv)
}

/// [`exact_divide`] plus verification that the division really was exact:
/// the full (untruncated) product `q * d` must equal the numerator.
pub fn exact_divide_checked(numerator: &Residue, divisor: &OddResidue) -> Result<Residue> {
    let q = exact_divide(numerator, divisor);
    let full = wide::mul_full(&q.to_limbs(), &divisor.residue().to_limbs());
    if wide::cmp(&full, &numerator.to_limbs()) == Ordering::Equal {
        Ok(q)
    } else {
        Err(Error::InexactDivision)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modring::Width;

    fn res8(v: u128) -> Residue {
        Residue::reduce(v, Width::W8)
    }

    fn odd8(v: u128) -> OddResidue {
        OddResidue::new(res8(v)).unwrap()
    }

    #[test]
    fn small_examples() {
        // 9 * invert(3) = 9 * 171 = 1539 ≡ 3 (mod 256)
        assert_eq!(exact_divide(&res8(9), &odd8(3)).to_u128(), Some(3));
        assert_eq!(exact_divide(&res8(0), &odd8(77)).to_u128(), Some(0));
        assert_eq!(exact_divide(&res8(255), &odd8(255)).to_u128(), Some(1));
    }

    #[test]
    fn checked_flags_inexact_division() {
        assert!(exact_divide_checked(&res8(10), &odd8(3)).is_err());
        assert_eq!(
            exact_divide_checked(&res8(9), &odd8(3)).unwrap().to_u128(),
            Some(3)
        );
    }

    /// Exhaustive at width 8: every exact quotient is recovered.
    #[test]
    fn exhaustive_w8() {
        for d in (1u128..256).step_by(2) {
            let divisor = odd8(d);
            let mut q = 0u128;
            while d * q < 256 {
                let got = exact_divide_checked(&res8(d * q), &divisor).unwrap();
                assert_eq!(got.to_u128(), Some(q), "{d} * {q}");
                q += 1;
            }
        }
    }

    #[test]
    fn wide_width_quotients() {
        let w = Width::new(200).unwrap();
        let d = OddResidue::new(Residue::reduce(1_000_003, w)).unwrap();
        let q = Residue::parse("123456789012345678901234567890", w).unwrap();
        let product = q.mul(d.residue());
        assert_eq!(exact_divide_checked(&product, &d).unwrap(), q);
    }
}
