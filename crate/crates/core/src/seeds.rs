//! Direct formulas for a starting value `x0` with `a*x0 ≡ 1 (mod 2^k)`.
//!
//! The iterative inversion algorithms double the number of correct low bits
//! per step, so a seed that is already correct to `k` bits saves `log2(k)`
//! iterations. Formulas exist for `k` up to 5:
//!
//! * `K1`: `x0 = 1`, correct to 1 bit for any odd `a`.
//! * `K2`, `K3`: `x0 = a`, correct to 2 (in fact 3) bits; `a*a mod 8 = 1`
//!   for every odd `a`.
//! * `K4_MONT`, `K5`: `x0 = (3a) XOR 2`, Peter Montgomery's formula, correct
//!   to 4 (in fact 5) bits. Needs `w >= 4` (`w >= 5` for the 5-bit claim).
//! * `K4_ALT`: `x0 = (a XOR 2) - 2a`, correct to 4 bits, found by brute
//!   force over two-operation expressions (see [`crate::seed_search`]).
//!   Usually costs one more instruction than `K4_MONT` on scalar hardware.

use crate::error::{Error, Result};
use crate::modring::{OddResidue, Residue, Width};

/// Which starting-value formula to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeedKind {
    K1,
    K2,
    K3,
    K4Mont,
    K4Alt,
    K5,
}

impl SeedKind {
    pub const ALL: [SeedKind; 6] = [
        SeedKind::K1,
        SeedKind::K2,
        SeedKind::K3,
        SeedKind::K4Mont,
        SeedKind::K4Alt,
        SeedKind::K5,
    ];

    /// Number of low bits the seed is guaranteed correct to.
    pub fn correct_bits(self) -> u32 {
        match self {
            SeedKind::K1 => 1,
            SeedKind::K2 => 2,
            SeedKind::K3 => 3,
            SeedKind::K4Mont | SeedKind::K4Alt => 4,
            SeedKind::K5 => 5,
        }
    }

    /// Smallest width the formula is valid at.
    pub fn min_width(self) -> u32 {
        match self {
            SeedKind::K1 | SeedKind::K2 | SeedKind::K3 => 1,
            SeedKind::K4Mont | SeedKind::K4Alt => 4,
            SeedKind::K5 => 5,
        }
    }

    /// The default choice: the 4-bit Montgomery formula wherever it is
    /// valid, `x0 = 1` below that.
    pub fn default_for(width: Width) -> SeedKind {
        if width.bits() >= 4 {
            SeedKind::K4Mont
        } else {
            SeedKind::K1
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeedKind::K1 => "k1",
            SeedKind::K2 => "k2",
            SeedKind::K3 => "k3",
            SeedKind::K4Mont => "k4",
            SeedKind::K4Alt => "k4alt",
            SeedKind::K5 => "k5",
        }
    }
}

/// Compute the starting value `x0` for `a` under the chosen formula, with
/// `a * x0 ≡ 1 (mod 2^k)` for `k = kind.correct_bits()`.
pub fn seed_x0(a: &OddResidue, kind: SeedKind) -> Result<Residue> {
    let width = a.width();
    let min = kind.min_width();
    if width.bits() < min {
        return Err(Error::SeedWidthTooSmall {
            kind,
            width: width.bits(),
            min,
        });
    }
    let a = a.residue();
    Ok(match kind {
        SeedKind::K1 => Residue::one(width),
        SeedKind::K2 | SeedKind::K3 => a.clone(),
        SeedKind::K4Mont | SeedKind::K5 => {
            let three_a = a.mul(&Residue::reduce(3, width));
            three_a.xor(&Residue::reduce(2, width))
        }
        SeedKind::K4Alt => {
            let lhs = a.xor(&Residue::reduce(2, width));
            lhs.sub(&a.add(a))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modring::Width;

    fn odd(v: u128, bits: u32) -> OddResidue {
        OddResidue::new(Residue::reduce(v, Width::new(bits).unwrap())).unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(seed_x0(&odd(7, 8), SeedKind::K1).unwrap().to_u128(), Some(1));
        assert_eq!(seed_x0(&odd(3, 8), SeedKind::K2).unwrap().to_u128(), Some(3));
        // (3*7) ^ 2 = 21 ^ 2 = 23; 7*23 = 161 ≡ 1 (mod 16)
        assert_eq!(
            seed_x0(&odd(7, 8), SeedKind::K4Mont).unwrap().to_u128(),
            Some(23)
        );
        // (7 ^ 2) - 14 = 5 - 14 ≡ 247 (mod 256); 7*247 = 1729 ≡ 1 (mod 16)
        assert_eq!(
            seed_x0(&odd(7, 8), SeedKind::K4Alt).unwrap().to_u128(),
            Some(247)
        );
    }

    #[test]
    fn width_preconditions() {
        for kind in [SeedKind::K4Mont, SeedKind::K4Alt] {
            assert_eq!(
                seed_x0(&odd(1, 3), kind),
                Err(Error::SeedWidthTooSmall {
                    kind,
                    width: 3,
                    min: 4
                })
            );
        }
        assert!(seed_x0(&odd(1, 4), SeedKind::K5).is_err());
        assert!(seed_x0(&odd(1, 5), SeedKind::K5).is_ok());
        assert!(seed_x0(&odd(1, 1), SeedKind::K1).is_ok());
        assert!(seed_x0(&odd(1, 1), SeedKind::K3).is_ok());
    }

    /// Every formula satisfies its congruence for every odd residue class,
    /// at its minimum width and at larger ones.
    #[test]
    fn exhaustive_congruence_over_odd_residues() {
        for kind in SeedKind::ALL {
            let k = kind.correct_bits();
            for bits in [kind.min_width().max(k), 8, 11, 16, 64] {
                if bits < kind.min_width() {
                    continue;
                }
                let w = Width::new(bits).unwrap();
                let span = 1u128 << k.max(4);
                for r in (1..span).step_by(2) {
                    let a = OddResidue::new(Residue::reduce(r, w)).unwrap();
                    let x0 = seed_x0(&a, kind).unwrap();
                    let prod = a.residue().mul(&x0);
                    let kw = Width::new(k).unwrap();
                    assert!(
                        prod.resize(kw).is_one(),
                        "kind {kind:?} failed at a={r}, w={bits}"
                    );
                }
            }
        }
    }

    /// Both 4-bit formulas satisfy the same congruence even though their raw
    /// values differ.
    #[test]
    fn k4_variants_agree_modulo_16() {
        let w = Width::W8;
        let sixteen = Width::new(4).unwrap();
        for r in (1u128..256).step_by(2) {
            let a = OddResidue::new(Residue::reduce(r, w)).unwrap();
            let mont = seed_x0(&a, SeedKind::K4Mont).unwrap();
            let alt = seed_x0(&a, SeedKind::K4Alt).unwrap();
            assert_eq!(
                a.residue().mul(&mont).resize(sixteen),
                a.residue().mul(&alt).resize(sixteen)
            );
        }
    }
}
