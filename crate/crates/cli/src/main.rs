//! `inv2w` — multiplicative inverses modulo 2^w from the command line.
//!
//! Exit codes: 0 on success, 1 when a requested check fails (or an inverse
//! does not exist), 2 for usage errors.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use inv2w::latency::{build_program, render_timeline, schedule, CostModel};
use inv2w::modring::{OddResidue, Residue, Width, Word};
use inv2w::{
    invert, invert_dumas_original_traced, invert_improved_traced, invert_newton_traced, native,
    AlgoKind, IterationTrace, SeedKind,
};

#[derive(Parser)]
#[command(
    name = "inv2w",
    version,
    about = "Integer multiplicative inverses modulo 2^w",
    long_about = "Computes, verifies and models the multiplicative inverse of odd integers \
                  modulo 2^w. Supports widths 1..=4096; the inverse exists exactly for odd a."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the inverse of an odd integer modulo 2^w.
    Invert {
        /// The value to invert, decimal or 0x-prefixed hex; reduced mod 2^w.
        #[arg(long)]
        a: String,
        /// Bit width w (1..=4096).
        #[arg(long, default_value_t = 64)]
        width: u32,
        /// Algorithm to run.
        #[arg(long, value_enum, default_value_t = AlgoArg::Improved)]
        algo: AlgoArg,
        /// Seed formula for improved/newton (default: k4 where valid, else
        /// k1). Ignored by dumas (fixed k1 seed) and euclid.
        #[arg(long, value_enum)]
        seed: Option<SeedArg>,
        /// Print each iteration's (n, x_n, y_n) and the residual's
        /// trailing-zero count. Not available for euclid.
        #[arg(long)]
        trace: bool,
    },
    /// Check the iterative algorithms against the extended-Euclid oracle.
    Verify {
        /// Bit width w (1..=4096).
        #[arg(long, default_value_t = 64)]
        width: u32,
        /// Check every odd value below 2^w (allowed for width <= 24).
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        /// Check N pseudo-random odd values (deterministic per width).
        #[arg(long)]
        samples: Option<u64>,
        /// Comma-separated algorithms to check (default: improved,newton,dumas).
        #[arg(long, value_enum, value_delimiter = ',')]
        algos: Vec<AlgoArg>,
    },
    /// Brute-force search for two-operation seed formulas
    /// x0 = (a op1 c1) op2 (a op3 c2) with a*x0 = 1 (mod 2^k) for all odd a.
    SearchSeed {
        /// Congruence bits k.
        #[arg(long, default_value_t = 4)]
        k: u32,
        /// Width the candidates are evaluated at.
        #[arg(long, default_value_t = 8)]
        width: u32,
        /// Largest constant to enumerate (shift amounts cap at width-1).
        #[arg(long, default_value_t = 15)]
        const_max: u32,
    },
    /// Print the per-cycle issue timeline of an unrolled inverse and its
    /// total latency under the cost model.
    Latency {
        /// Which program: fig1 = improved (k4 seed), fig2 = newton (k4
        /// seed), fig3 = original dumas (k1 seed).
        #[arg(long, value_enum, default_value_t = ProgramArg::Fig1)]
        program: ProgramArg,
        /// Bit width w.
        #[arg(long, default_value_t = 64)]
        width: u32,
        /// Multiply latency in cycles (overrides --model).
        #[arg(long)]
        mul: Option<u32>,
        /// Add/subtract latency in cycles (overrides --model).
        #[arg(long)]
        add: Option<u32>,
        /// Cost-model file with lines mul=3, add=1, xor=1, mul3=1.
        #[arg(long)]
        model: Option<std::path::PathBuf>,
    },
    /// Measure wall-clock nanoseconds per inverse over a serial dependency
    /// chain (each output feeds the next input, so latency is what shows).
    Bench {
        /// Bit width w.
        #[arg(long, default_value_t = 64)]
        width: u32,
        /// Chain length.
        #[arg(long, default_value_t = 1_000_000)]
        iters: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Improved,
    Newton,
    Dumas,
    Euclid,
}

impl From<AlgoArg> for AlgoKind {
    fn from(a: AlgoArg) -> AlgoKind {
        match a {
            AlgoArg::Improved => AlgoKind::Improved,
            AlgoArg::Newton => AlgoKind::Newton,
            AlgoArg::Dumas => AlgoKind::DumasOriginal,
            AlgoArg::Euclid => AlgoKind::Euclid,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeedArg {
    K1,
    K2,
    K3,
    K4,
    K4alt,
    K5,
}

impl From<SeedArg> for SeedKind {
    fn from(s: SeedArg) -> SeedKind {
        match s {
            SeedArg::K1 => SeedKind::K1,
            SeedArg::K2 => SeedKind::K2,
            SeedArg::K3 => SeedKind::K3,
            SeedArg::K4 => SeedKind::K4Mont,
            SeedArg::K4alt => SeedKind::K4Alt,
            SeedArg::K5 => SeedKind::K5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProgramArg {
    Fig1,
    Fig2,
    Fig3,
}

enum CliError {
    /// A requested check failed, or the requested value does not exist.
    Check(String),
    /// Bad arguments beyond what clap validates itself.
    Usage(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_width(bits: u32) -> Result<Width, CliError> {
    Width::new(bits).map_err(|e| usage(e.to_string()))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Invert {
            a,
            width,
            algo,
            seed,
            trace,
        } => cmd_invert(&a, width, algo, seed, trace),
        Command::Verify {
            width,
            exhaustive,
            samples,
            algos,
        } => cmd_verify(width, exhaustive, samples, &algos),
        Command::SearchSeed { k, width, const_max } => cmd_search_seed(k, width, const_max),
        Command::Latency {
            program,
            width,
            mul,
            add,
            model,
        } => cmd_latency(program, width, mul, add, model.as_deref()),
        Command::Bench { width, iters } => cmd_bench(width, iters),
    }
}

fn print_trace(trace: &IterationTrace) {
    println!(
        "trace: seed bits k={}, iterations p={}",
        trace.seed_bits, trace.iterations
    );
    for step in &trace.steps {
        println!(
            "n={}  x={} (0x{:x})  y={} (0x{:x})  residual_trailing_zeros={}",
            step.n,
            step.x,
            step.x,
            step.y,
            step.y,
            step.y.trailing_zeros()
        );
    }
}

fn cmd_invert(
    a: &str,
    width_bits: u32,
    algo: AlgoArg,
    seed: Option<SeedArg>,
    trace: bool,
) -> Result<(), CliError> {
    let width = parse_width(width_bits)?;
    let value = Residue::parse(a, width).map_err(|e| usage(e.to_string()))?;
    let odd = OddResidue::new(value)
        .map_err(|_| CliError::Check("inverse does not exist for even a".into()))?;
    let kind = seed
        .map(SeedKind::from)
        .unwrap_or_else(|| SeedKind::default_for(width));
    let algo_kind = AlgoKind::from(algo);

    println!(
        "a = {} (0x{:x})  width = {}  algo = {}  seed = {}",
        odd.residue(),
        odd.residue(),
        width,
        algo_kind.name(),
        kind.name()
    );

    let inverse = if trace {
        let (x, t) = match algo_kind {
            AlgoKind::Improved => invert_improved_traced(&odd, kind),
            AlgoKind::Newton => invert_newton_traced(&odd, kind),
            AlgoKind::DumasOriginal => invert_dumas_original_traced(&odd),
            AlgoKind::Euclid => {
                return Err(usage("--trace is not available for the euclid algorithm"))
            }
        }
        .map_err(|e| usage(e.to_string()))?;
        print_trace(&t);
        x
    } else {
        invert(algo_kind, &odd, kind).map_err(|e| usage(e.to_string()))?
    };

    println!("inverse = {inverse} (0x{inverse:x})");
    println!("RESULT: inverse={inverse} hex=0x{inverse:x}");
    Ok(())
}

fn cmd_verify(
    width_bits: u32,
    exhaustive: bool,
    samples: Option<u64>,
    algo_args: &[AlgoArg],
) -> Result<(), CliError> {
    let width = parse_width(width_bits)?;
    if exhaustive && width_bits > 24 {
        return Err(usage(format!(
            "exhaustive verification is limited to --width <= 24 (got {width_bits}); \
             use --samples N instead"
        )));
    }
    let algos: Vec<AlgoKind> = if algo_args.is_empty() {
        vec![AlgoKind::Improved, AlgoKind::Newton, AlgoKind::DumasOriginal]
    } else {
        algo_args.iter().map(|&a| AlgoKind::from(a)).collect()
    };
    let kind = SeedKind::default_for(width);

    let mode;
    let mut checked = 0u64;
    let mut mismatches = 0u64;
    let mut check_one = |a: &OddResidue| {
        let reference = inv2w::invert_euclid(a).expect("odd by construction");
        if !a.residue().mul(&reference).is_one() {
            mismatches += 1;
            eprintln!("oracle failed the defining congruence at a = {}", a.residue());
            return;
        }
        for &algo in &algos {
            let got = invert(algo, a, kind).expect("odd, valid width");
            if got != reference {
                mismatches += 1;
                eprintln!(
                    "mismatch: {} a={} got={} expected={}",
                    algo.name(),
                    a.residue(),
                    got,
                    reference
                );
            }
        }
        checked += 1;
    };

    if exhaustive {
        mode = "exhaustive".to_string();
        for value in (1..1u128 << width_bits).step_by(2) {
            check_one(&OddResidue::new(Residue::reduce(value, width)).unwrap());
        }
    } else {
        let n = samples.unwrap_or(10_000);
        if n == 0 {
            return Err(usage("--samples must be at least 1"));
        }
        mode = format!("samples={n}");
        // Seeded per width so identical flags reproduce identical output.
        let mut rng = StdRng::seed_from_u64(0x1e57_0000 ^ width_bits as u64);
        let nbytes = (width_bits as usize).div_ceil(8);
        for _ in 0..n {
            let bytes: Vec<u8> = (0..nbytes).map(|_| rng.gen()).collect();
            let r = Residue::from_le_bytes(&bytes, width).or(&Residue::one(width));
            check_one(&OddResidue::new(r).unwrap());
        }
    }

    let names: Vec<&str> = algos.iter().map(|a| a.name()).collect();
    println!("verify width={width} mode={mode} algos={}", names.join(","));
    if mismatches == 0 {
        println!("{checked} odd values OK");
        println!("RESULT: pass checked={checked}");
        Ok(())
    } else {
        println!("RESULT: fail mismatches={mismatches} checked={checked}");
        Err(CliError::Check(format!(
            "{mismatches} mismatches in {checked} values"
        )))
    }
}

fn cmd_search_seed(k: u32, width_bits: u32, const_max: u32) -> Result<(), CliError> {
    let width = parse_width(width_bits)?;
    if k == 0 || k > width_bits {
        return Err(usage(format!("need 1 <= k <= width, got k={k}")));
    }
    if k > 24 {
        return Err(usage("k larger than 24 makes the odd-value scan impractical"));
    }
    let found = inv2w::seed_search::search(k, width, const_max);
    for cand in &found {
        println!("{cand}");
    }
    println!("found {} candidates", found.len());
    println!(
        "RESULT: count={} k={k} width={width} const_max={const_max}",
        found.len()
    );
    Ok(())
}

fn cmd_latency(
    program: ProgramArg,
    width_bits: u32,
    mul: Option<u32>,
    add: Option<u32>,
    model_path: Option<&std::path::Path>,
) -> Result<(), CliError> {
    let width = parse_width(width_bits)?;
    let mut model = match model_path {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            CostModel::parse(&text).map_err(|e| usage(e.to_string()))?
        }
        None => CostModel::default(),
    };
    if let Some(m) = mul {
        if m == 0 {
            return Err(usage("latencies must be >= 1"));
        }
        model.mul = m;
    }
    if let Some(a) = add {
        if a == 0 {
            return Err(usage("latencies must be >= 1"));
        }
        model.add = a;
    }

    let (algo, kind, label) = match program {
        ProgramArg::Fig1 => (AlgoKind::Improved, SeedKind::K4Mont, "improved"),
        ProgramArg::Fig2 => (AlgoKind::Newton, SeedKind::K4Mont, "newton"),
        ProgramArg::Fig3 => (AlgoKind::DumasOriginal, SeedKind::K1, "dumas"),
    };
    if width.bits() < kind.min_width() {
        return Err(usage(format!(
            "program {label} needs width >= {}",
            kind.min_width()
        )));
    }
    let prog = build_program(algo, width, kind).map_err(|e| usage(e.to_string()))?;
    let sched = schedule(&prog, &model).map_err(|e| usage(e.to_string()))?;
    println!(
        "program = {label}  width = {width}  model: mul={} add={} xor={} mul3={}",
        model.mul, model.add, model.xor, model.mul3
    );
    print!("{}", render_timeline(&sched, &prog));
    println!("total latency: {} cycles", sched.total_latency);
    println!("RESULT: total={}", sched.total_latency);
    Ok(())
}

fn bench_native_width<W: Word>(iters: u64) -> Vec<(&'static str, f64)> {
    let run = |f: fn(W) -> W| {
        let mut x = W::from_u128_lossy(0x1234_5678_9abc_def1_0213_4465u128);
        let t0 = Instant::now();
        for _ in 0..iters {
            x = f(std::hint::black_box(x | W::one()));
        }
        std::hint::black_box(x);
        t0.elapsed().as_nanos() as f64 / iters as f64
    };
    vec![
        ("improved", run(native::invert_improved::<W>)),
        ("newton", run(native::invert_newton::<W>)),
        ("dumas", run(native::invert_dumas_original::<W>)),
    ]
}

fn bench_residue_width(width: Width, iters: u64) -> Vec<(&'static str, f64)> {
    let one = Residue::one(width);
    let run = |f: &dyn Fn(&OddResidue) -> Residue| {
        let mut x = Residue::reduce(0x1234_5678_9abc_def1u128, width);
        let t0 = Instant::now();
        for _ in 0..iters {
            let a = OddResidue::new(std::hint::black_box(x.or(&one))).unwrap();
            x = f(&a);
        }
        std::hint::black_box(&x);
        t0.elapsed().as_nanos() as f64 / iters as f64
    };
    let kind = SeedKind::default_for(width);
    vec![
        ("improved", run(&|a| inv2w::invert_improved(a, kind).unwrap())),
        ("newton", run(&|a| inv2w::invert_newton(a, kind).unwrap())),
        ("dumas", run(&|a| inv2w::invert_dumas_original(a).unwrap())),
    ]
}

fn cmd_bench(width_bits: u32, iters: u64) -> Result<(), CliError> {
    let width = parse_width(width_bits)?;
    if iters == 0 {
        return Err(usage("--iters must be at least 1"));
    }
    println!("bench width={width} iters={iters} (serial dependency chain)");
    let rows = match width_bits {
        8 => bench_native_width::<u8>(iters),
        16 => bench_native_width::<u16>(iters),
        32 => bench_native_width::<u32>(iters),
        64 => bench_native_width::<u64>(iters),
        128 => bench_native_width::<u128>(iters),
        _ => bench_residue_width(width, iters),
    };
    for (name, ns) in &rows {
        println!("{name}: {ns:.2} ns/op");
    }
    println!(
        "note: wall-clock timings are hardware-dependent and may differ from the \
         abstract cycle model; see the latency command for the model's counts."
    );
    println!("RESULT: ok");
    Ok(())
}
