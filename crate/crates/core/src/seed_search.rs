//! Brute-force search for two-operation seed formulas.
//!
//! Enumerates candidate expressions `x0 = (r op1 c1) op2 (r op3 c2)` over
//! the operators XOR, AND, OR, add, subtract and left-shift, keeping every
//! candidate that satisfies `r * x0 ≡ 1 (mod 2^k)` for all odd `r` below
//! `2^k`. At `k = 4` this space contains `(a XOR 2) - (a << 1)`, the
//! alternate 4-bit seed formula.

use crate::modring::{Residue, Width};

/// Operators admitted in candidate formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchOp {
    Xor,
    And,
    Or,
    Add,
    Sub,
    Shl,
}

impl SearchOp {
    pub const ALL: [SearchOp; 6] = [
        SearchOp::Xor,
        SearchOp::And,
        SearchOp::Or,
        SearchOp::Add,
        SearchOp::Sub,
        SearchOp::Shl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SearchOp::Xor => "XOR",
            SearchOp::And => "AND",
            SearchOp::Or => "OR",
            SearchOp::Add => "ADD",
            SearchOp::Sub => "SUB",
            SearchOp::Shl => "SHL",
        }
    }
}

/// A candidate `x0(r) = (r op1 c1) op2 (r op3 c2)`, evaluated with wrapping
/// arithmetic at the search width.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeedCandidate {
    pub op1: SearchOp,
    pub c1: u32,
    pub op2: SearchOp,
    pub op3: SearchOp,
    pub c2: u32,
}

impl std::fmt::Display for SeedCandidate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(a {} {}) {} (a {} {})",
            self.op1.name(),
            self.c1,
            self.op2.name(),
            self.op3.name(),
            self.c2
        )
    }
}

/// Formula 4 for k=4: `(a XOR 2) - (a SHL 1)`.
pub const K4_ALT_CANDIDATE: SeedCandidate = SeedCandidate {
    op1: SearchOp::Xor,
    c1: 2,
    op2: SearchOp::Sub,
    op3: SearchOp::Shl,
    c2: 1,
};

fn apply_const(r: &Residue, op: SearchOp, c: u32) -> Residue {
    let width = r.width();
    match op {
        SearchOp::Shl => r.shl(c),
        _ => {
            let cv = Residue::reduce(c as u128, width);
            match op {
                SearchOp::Xor => r.xor(&cv),
                SearchOp::And => r.and(&cv),
                SearchOp::Or => r.or(&cv),
                SearchOp::Add => r.add(&cv),
                SearchOp::Sub => r.sub(&cv),
                SearchOp::Shl => unreachable!(),
            }
        }
    }
}

fn combine(lhs: &Residue, op: SearchOp, rhs: &Residue) -> Residue {
    match op {
        SearchOp::Xor => lhs.xor(rhs),
        SearchOp::And => lhs.and(rhs),
        SearchOp::Or => lhs.or(rhs),
        SearchOp::Add => lhs.add(rhs),
        SearchOp::Sub => lhs.sub(rhs),
        // Shift amount is the right-hand value; anything at or past the
        // width shifts everything out.
        SearchOp::Shl => match rhs.to_u128() {
            Some(n) if n < lhs.width().bits() as u128 => lhs.shl(n as u32),
            _ => Residue::zero(lhs.width()),
        },
    }
}

/// Evaluate a candidate at `r` under wrapping arithmetic at `r`'s width.
pub fn evaluate_candidate(c: &SeedCandidate, r: &Residue) -> Residue {
    let lhs = apply_const(r, c.op1, c.c1);
    let rhs = apply_const(r, c.op3, c.c2);
    combine(&lhs, c.op2, &rhs)
}

/// Does `r * x0(r) ≡ 1 (mod 2^k)` hold for every odd `r` in `[1, 2^k)`,
/// with candidates evaluated at `width`?
pub fn candidate_holds(c: &SeedCandidate, k: u32, width: Width) -> bool {
    debug_assert!(k >= 1 && k <= width.bits());
    assert!(k < 128, "odd-r enumeration requires k < 128");
    let kw = Width::internal(k);
    for r in (1..1u128 << k).step_by(2) {
        let rv = Residue::reduce(r, width);
        let x0 = evaluate_candidate(c, &rv);
        if !rv.mul(&x0).resize(kw).is_one() {
            return false;
        }
    }
    true
}

/// Enumerate every candidate with constants in `0..=const_max` (left-shift
/// amounts additionally capped at `width - 1`) that satisfies the odd-`r`
/// congruence modulo `2^k`. The result order is the lexicographic
/// enumeration order over `(op1, c1, op2, op3, c2)` and is fully
/// deterministic.
pub fn search(k: u32, width: Width, const_max: u32) -> Vec<SeedCandidate> {
    assert!(k >= 1 && k <= width.bits(), "need 1 <= k <= width");
    let cap = |op: SearchOp| -> u32 {
        match op {
            SearchOp::Shl => const_max.min(width.bits() - 1),
            _ => const_max,
        }
    };
    let mut found = Vec::new();
    for op1 in SearchOp::ALL {
        for c1 in 0..=cap(op1) {
            for op2 in SearchOp::ALL {
                for op3 in SearchOp::ALL {
                    for c2 in 0..=cap(op3) {
                        let cand = SeedCandidate {
                            op1,
                            c1,
                            op2,
                            op3,
                            c2,
                        };
                        if candidate_holds(&cand, k, width) {
                            found.push(cand);
                        }
                    }
                }
            }
        }
    }
    found
}
