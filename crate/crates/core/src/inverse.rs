//! The inversion algorithms.
//!
//! For odd `a` the inverse modulo `2^w` can be computed by lifting a seed
//! `x0` that is correct to `k` low bits, doubling the number of correct bits
//! each iteration:
//!
//! * [`invert_improved`]: with `y = 1 - a*x0`, iterate
//!   `x_{n+1} = x_n * (1 + y^(2^n))`, squaring `y` as a side chain. The two
//!   chains are independent, which is what makes this the lowest-latency
//!   variant on superscalar hardware.
//! * [`invert_newton`]: iterate `x_{n+1} = x_n * (2 - a*x_n)` (Hensel
//!   lifting). One serial dependency chain.
//! * [`invert_dumas_original`]: the fixed k=1 form, `y = a - 1`,
//!   `u0 = 2 - a`, squaring `y` once before the first multiply.
//! * [`invert_euclid`]: the extended Euclidean algorithm, used as an
//!   independent oracle for the other three.
//!
//! The iteration count is `p = ceil(log2(w/k))`. When `w/k` is not a power
//! of two the computation widens internally to `w' = k * 2^p` and the result
//! is reduced back to `w`; the congruence modulo `2^w'` implies the one
//! modulo `2^w`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::modring::{OddResidue, Residue, Width};
use crate::seeds::{seed_x0, SeedKind};

/// The inversion algorithms implemented by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgoKind {
    Improved,
    Newton,
    DumasOriginal,
    Euclid,
}

impl AlgoKind {
    pub const ALL: [AlgoKind; 4] = [
        AlgoKind::Improved,
        AlgoKind::Newton,
        AlgoKind::DumasOriginal,
        AlgoKind::Euclid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgoKind::Improved => "improved",
            AlgoKind::Newton => "newton",
            AlgoKind::DumasOriginal => "dumas",
            AlgoKind::Euclid => "euclid",
        }
    }
}

/// One row of an [`IterationTrace`]: the state after `n` iterations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub n: u32,
    /// `x_n`, correct to at least `min(w, k * 2^n)` low bits.
    pub x: Residue,
    /// `y_n = y_0^(2^n)`, equal to the residual `1 - a*x_n` at every step.
    pub y: Residue,
}

/// The per-iteration states of a lifting run, reduced to the caller's width.
///
/// There are exactly `iterations + 1` steps, `n = 0..=iterations`, and
/// consecutive steps satisfy `y_{n+1} = y_n^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationTrace {
    /// Correct low bits of the seed (`k`).
    pub seed_bits: u32,
    /// Iteration count (`p`).
    pub iterations: u32,
    pub steps: Vec<TraceStep>,
}

/// Iteration count and internal width for inverting at `width` from a
/// `seed_bits`-bit seed: the smallest `p >= 0` with `seed_bits * 2^p >=
/// width`, widening to exactly that product.
pub(crate) fn iteration_plan(width: u32, seed_bits: u32) -> (u32, u32) {
    let mut p = 0u32;
    let mut widened = seed_bits;
    while widened < width {
        widened *= 2;
        p += 1;
    }
    (p, widened)
}

struct TraceBuilder {
    want: bool,
    caller_width: Width,
    steps: Vec<TraceStep>,
}

impl TraceBuilder {
    fn new(want: bool, caller_width: Width) -> Self {
        TraceBuilder {
            want,
            caller_width,
            steps: Vec::new(),
        }
    }

    fn push(&mut self, n: u32, x: &Residue, y: &Residue) {
        if self.want {
            self.steps.push(TraceStep {
                n,
                x: x.resize(self.caller_width),
                y: y.resize(self.caller_width),
            });
        }
    }

    fn finish(self, seed_bits: u32, iterations: u32) -> Option<IterationTrace> {
        self.want.then_some(IterationTrace {
            seed_bits,
            iterations,
            steps: self.steps,
        })
    }
}

fn improved_impl(
    a: &OddResidue,
    kind: SeedKind,
    want_trace: bool,
) -> Result<(Residue, Option<IterationTrace>)> {
    let width = a.width();
    let k = kind.correct_bits();
    let (p, widened_bits) = iteration_plan(width.bits(), k);
    let wide = Width::internal(widened_bits.max(width.bits()));
    let aw = a.resize_up(wide);

    let x0 = seed_x0(&aw, kind)?;
    let one = Residue::one(wide);
    let mut x = x0;
    let mut y = one.sub(&aw.residue().mul(&x));
    let mut trace = TraceBuilder::new(want_trace, width);
    trace.push(0, &x, &y);
    for n in 0..p {
        x = x.mul(&one.add(&y));
        // The final y is only needed to fill the trace.
        if want_trace || n + 1 < p {
            y = y.mul(&y);
        }
        trace.push(n + 1, &x, &y);
    }
    Ok((x.resize(width), trace.finish(k, p)))
}

/// Invert via the residual-squaring recurrence `x_{n+1} = x_n(1 + y^(2^n))`.
pub fn invert_improved(a: &OddResidue, kind: SeedKind) -> Result<Residue> {
    improved_impl(a, kind, false).map(|(x, _)| x)
}

/// [`invert_improved`] with the full iteration trace.
pub fn invert_improved_traced(
    a: &OddResidue,
    kind: SeedKind,
) -> Result<(Residue, IterationTrace)> {
    improved_impl(a, kind, true).map(|(x, t)| (x, t.expect("trace requested")))
}

fn newton_impl(
    a: &OddResidue,
    kind: SeedKind,
    want_trace: bool,
) -> Result<(Residue, Option<IterationTrace>)> {
    let width = a.width();
    let k = kind.correct_bits();
    let (p, widened_bits) = iteration_plan(width.bits(), k);
    let wide = Width::internal(widened_bits.max(width.bits()));
    let aw = a.resize_up(wide);

    let mut x = seed_x0(&aw, kind)?;
    let one = Residue::one(wide);
    let two = Residue::reduce(2, wide);
    let mut trace = TraceBuilder::new(want_trace, width);
    if want_trace {
        trace.push(0, &x, &one.sub(&aw.residue().mul(&x)));
    }
    for n in 0..p {
        x = x.mul(&two.sub(&aw.residue().mul(&x)));
        if want_trace {
            trace.push(n + 1, &x, &one.sub(&aw.residue().mul(&x)));
        }
    }
    Ok((x.resize(width), trace.finish(k, p)))
}

/// Invert via Newton's recurrence `x_{n+1} = x_n(2 - a*x_n)`.
pub fn invert_newton(a: &OddResidue, kind: SeedKind) -> Result<Residue> {
    newton_impl(a, kind, false).map(|(x, _)| x)
}

/// [`invert_newton`] with a trace; the `y` column holds the residual
/// `1 - a*x_n`, which squares each step exactly like the improved variant's.
pub fn invert_newton_traced(a: &OddResidue, kind: SeedKind) -> Result<(Residue, IterationTrace)> {
    newton_impl(a, kind, true).map(|(x, t)| (x, t.expect("trace requested")))
}

fn dumas_impl(a: &OddResidue, want_trace: bool) -> Result<(Residue, Option<IterationTrace>)> {
    let width = a.width();
    let (p, widened_bits) = iteration_plan(width.bits(), 1);
    let wide = Width::internal(widened_bits.max(width.bits()));
    let aw = a.resize_up(wide);
    let av = aw.residue();

    let one = Residue::one(wide);
    let two = Residue::reduce(2, wide);
    let mut trace = TraceBuilder::new(want_trace, width);
    // Conceptually x0 = 1, y0 = 1 - a; the first iteration is folded into
    // the two subtractions below, with the first squaring of y pulled ahead
    // of the first multiply.
    trace.push(0, &one, &one.sub(av));
    if p == 0 {
        return Ok((one.resize(width), trace.finish(1, 0)));
    }
    let mut y = av.sub(&one); // a - 1; same square as 1 - a
    let mut u = two.sub(av); // x1
    if want_trace || p > 1 {
        y = y.mul(&y);
    }
    trace.push(1, &u, &y);
    for n in 1..p {
        u = u.mul(&one.add(&y));
        if want_trace || n + 1 < p {
            y = y.mul(&y);
        }
        trace.push(n + 1, &u, &y);
    }
    Ok((u.resize(width), trace.finish(1, p)))
}

/// Invert via the fixed k=1 residual-squaring form: `y = a - 1`,
/// `u0 = 2 - a`, square `y` first, then `p - 1` multiply rounds.
pub fn invert_dumas_original(a: &OddResidue) -> Result<Residue> {
    dumas_impl(a, false).map(|(x, _)| x)
}

/// [`invert_dumas_original`] with the full iteration trace (seeded at k=1,
/// so step 0 is `x0 = 1, y0 = 1 - a`).
pub fn invert_dumas_original_traced(a: &OddResidue) -> Result<(Residue, IterationTrace)> {
    dumas_impl(a, true).map(|(x, t)| (x, t.expect("trace requested")))
}

/// Invert via the extended Euclidean algorithm on `(a, 2^w)`.
///
/// Runs on arbitrary-precision integers and shares no arithmetic with the
/// lifting implementations, which is what makes it a usable oracle for them.
pub fn invert_euclid(a: &OddResidue) -> Result<Residue> {
    let width = a.width();
    let modulus: BigInt = BigInt::one() << width.bits();
    let mut old_r = BigInt::from(a.residue().to_biguint());
    let mut r = modulus.clone();
    let mut old_s = BigInt::one();
    let mut s = BigInt::zero();
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
    }
    debug_assert!(old_r.is_one(), "odd a is coprime to 2^w");
    let mut inv = old_s % &modulus;
    if inv.is_negative() {
        inv += &modulus;
    }
    Ok(Residue::from_biguint(
        &inv.to_biguint().expect("non-negative"),
        width,
    ))
}

/// Dispatch by algorithm. `kind` selects the seed for the lifting
/// algorithms; the Dumas form and the Euclidean oracle ignore it.
pub fn invert(algo: AlgoKind, a: &OddResidue, kind: SeedKind) -> Result<Residue> {
    match algo {
        AlgoKind::Improved => invert_improved(a, kind),
        AlgoKind::Newton => invert_newton(a, kind),
        AlgoKind::DumasOriginal => invert_dumas_original(a),
        AlgoKind::Euclid => invert_euclid(a),
    }
}

/// The residual `1 - a*x (mod 2^w)`. Its trailing zero count is the number
/// of low bits of `x` that match the inverse of `a`.
pub fn residual(a: &OddResidue, x: &Residue) -> Residue {
    Residue::one(x.width()).sub(&a.residue().mul(x))
}
