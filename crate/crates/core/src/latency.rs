//! Dataflow latency model for the inversion algorithms.
//!
//! Programs are DAGs of arithmetic instructions. Under the cost model an
//! instruction issues as soon as all of its operands are ready and its
//! result becomes ready `latency` cycles later; issue width is unbounded
//! and multiplies are fully pipelined. Total latency is therefore the
//! latency-weighted critical path to the output.
//!
//! The default model charges 3 cycles for a multiply, 1 for add/sub/xor,
//! and 1 for `3*a` (an add-with-shift or LEA). Under it, at 64 bits:
//! Newton's method needs 30 cycles (one serial chain), the original Dumas
//! form 20 (two chains, but a k=1 seed), and the improved form 19.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::inverse::{iteration_plan, AlgoKind};
use crate::modring::Width;
use crate::seeds::SeedKind;

/// Per-class instruction latencies, in cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostModel {
    pub mul: u32,
    pub add: u32,
    pub xor: u32,
    pub mul3: u32,
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel {
            mul: 3,
            add: 1,
            xor: 1,
            mul3: 1,
        }
    }
}

impl CostModel {
    pub fn latency(&self, kind: InstrKind) -> u32 {
        match kind {
            InstrKind::Mul => self.mul,
            InstrKind::Add | InstrKind::Sub => self.add,
            InstrKind::Xor => self.xor,
            InstrKind::Mul3 => self.mul3,
            InstrKind::Const | InstrKind::Input => 0,
        }
    }

    /// Parse a `key=value` description. Keys are `mul`, `add`, `xor`,
    /// `mul3`; unset keys keep their defaults. Blank lines and `#` comments
    /// are ignored.
    pub fn parse(text: &str) -> Result<CostModel> {
        let mut model = CostModel::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidCostModel(format!("line {}: expected key=value", lineno + 1))
            })?;
            let cycles: u32 = value.trim().parse().map_err(|_| {
                Error::InvalidCostModel(format!("line {}: bad cycle count {value:?}", lineno + 1))
            })?;
            if cycles == 0 {
                return Err(Error::InvalidCostModel(format!(
                    "line {}: latencies must be >= 1",
                    lineno + 1
                )));
            }
            match key.trim() {
                "mul" => model.mul = cycles,
                "add" => model.add = cycles,
                "xor" => model.xor = cycles,
                "mul3" => model.mul3 = cycles,
                other => {
                    return Err(Error::InvalidCostModel(format!(
                        "line {}: unknown key {other:?}",
                        lineno + 1
                    )))
                }
            }
        }
        Ok(model)
    }
}

/// Instruction classes the model distinguishes. `Const` and `Input` carry no
/// latency; their results are ready at cycle 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstrKind {
    Mul,
    Add,
    Sub,
    Xor,
    Mul3,
    Const,
    Input,
}

impl InstrKind {
    pub fn is_value(self) -> bool {
        matches!(self, InstrKind::Const | InstrKind::Input)
    }
}

/// One node of the dataflow graph. Operands refer to earlier instructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instr {
    pub id: usize,
    pub kind: InstrKind,
    pub operands: Vec<usize>,
    /// Name of the value this instruction produces ("tmp", "y", "x1", ...).
    pub var: String,
    /// Rendered form for timeline output ("x1 = x0 * tmp").
    pub text: String,
}

/// A straight-line dataflow program with a designated output.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Program {
    pub instrs: Vec<Instr>,
    pub output: Option<usize>,
}

impl Program {
    pub fn empty() -> Program {
        Program::default()
    }

    fn push(&mut self, kind: InstrKind, operands: Vec<usize>, var: &str, text: String) -> usize {
        let id = self.instrs.len();
        self.instrs.push(Instr {
            id,
            kind,
            operands,
            var: var.to_string(),
            text,
        });
        id
    }

    fn input(&mut self, name: &str) -> usize {
        self.push(InstrKind::Input, Vec::new(), name, name.to_string())
    }

    fn constant(&mut self, value: u32) -> usize {
        let s = value.to_string();
        self.push(InstrKind::Const, Vec::new(), &s, s.clone())
    }
}

/// Issue and ready cycles per instruction, plus the critical-path total.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Schedule {
    pub issue: Vec<u32>,
    pub ready: Vec<u32>,
    pub total_latency: u32,
}

/// Emit the seed computation, returning the id of `x0`.
fn emit_seed(prog: &mut Program, a: usize, kind: SeedKind) -> usize {
    match kind {
        SeedKind::K1 => prog.constant(1),
        SeedKind::K2 | SeedKind::K3 => a,
        SeedKind::K4Mont | SeedKind::K5 => {
            let t = prog.push(InstrKind::Mul3, vec![a], "tmp", "tmp = 3*a".into());
            prog.push(InstrKind::Xor, vec![t], "x0", "x0 = tmp ^ 2".into())
        }
        SeedKind::K4Alt => {
            let t1 = prog.push(InstrKind::Xor, vec![a], "t1", "t1 = a ^ 2".into());
            let t2 = prog.push(InstrKind::Add, vec![a, a], "t2", "t2 = a + a".into());
            prog.push(
                InstrKind::Sub,
                vec![t1, t2],
                "x0",
                "x0 = t1 - t2".into(),
            )
        }
    }
}

fn is_const_one(prog: &Program, id: usize) -> bool {
    let i = &prog.instrs[id];
    i.kind == InstrKind::Const && i.var == "1"
}

fn build_improved(width: Width, kind: SeedKind) -> Program {
    let (p, _) = iteration_plan(width.bits(), kind.correct_bits());
    let mut prog = Program::empty();
    let a = prog.input("a");
    let x0 = emit_seed(&mut prog, a, kind);
    if p == 0 {
        // The seed alone already has enough correct bits.
        prog.output = Some(x0);
        return prog;
    }

    // y = 1 - a*x0; with the constant-1 seed the multiply vanishes.
    let y = if is_const_one(&prog, x0) {
        prog.push(InstrKind::Sub, vec![a], "y", "y = 1 - a".into())
    } else {
        let t = prog.push(
            InstrKind::Mul,
            vec![a, x0],
            "tmp",
            format!("tmp = a*{}", prog.instrs[x0].var.clone()),
        );
        prog.push(InstrKind::Sub, vec![t], "y", "y = 1 - tmp".into())
    };

    let mut x = x0;
    let mut ycur = y;
    for n in 0..p {
        let inc = prog.push(
            InstrKind::Add,
            vec![ycur],
            "tmp",
            "tmp = (1 + y)".into(),
        );
        let xvar = format!("x{}", n + 1);
        x = if is_const_one(&prog, x) {
            // x1 = 1 * (1 + y) is just the increment itself.
            let i = &mut prog.instrs[inc];
            i.var = xvar.clone();
            i.text = format!("{xvar} = (1 + y)");
            inc
        } else {
            let text = format!("{xvar} = {} * tmp", prog.instrs[x].var.clone());
            prog.push(InstrKind::Mul, vec![x, inc], &xvar, text)
        };
        if n + 1 < p {
            ycur = prog.push(InstrKind::Mul, vec![ycur, ycur], "y", "y *= y".into());
        }
    }
    prog.output = Some(x);
    prog
}

fn build_newton(width: Width, kind: SeedKind) -> Program {
    let (p, _) = iteration_plan(width.bits(), kind.correct_bits());
    let mut prog = Program::empty();
    let a = prog.input("a");
    let mut x = emit_seed(&mut prog, a, kind);
    for n in 0..p {
        let xvar = format!("x{}", n + 1);
        if is_const_one(&prog, x) {
            // x1 = 1 * (2 - a*1) collapses to a single subtraction.
            x = prog.push(
                InstrKind::Sub,
                vec![a],
                &xvar,
                format!("{xvar} = 2 - a"),
            );
        } else {
            let t1 = prog.push(
                InstrKind::Mul,
                vec![a, x],
                "tmp",
                format!("tmp = a*{}", prog.instrs[x].var.clone()),
            );
            let t2 = prog.push(InstrKind::Sub, vec![t1], "tmp", "tmp = 2 - tmp".into());
            let text = format!("{xvar} = {} * tmp", prog.instrs[x].var.clone());
            x = prog.push(InstrKind::Mul, vec![x, t2], &xvar, text);
        }
    }
    prog.output = Some(x);
    prog
}

fn build_dumas(width: Width) -> Program {
    let (p, _) = iteration_plan(width.bits(), 1);
    let mut prog = Program::empty();
    let a = prog.input("a");
    if p == 0 {
        // Width 1: the inverse of the only odd value is the constant 1.
        let out = prog.constant(1);
        prog.output = Some(out);
        return prog;
    }
    let mut y = prog.push(InstrKind::Sub, vec![a], "y", "y = a - 1".into());
    let mut u = prog.push(InstrKind::Sub, vec![a], "u0", "u0 = 2 - a".into());
    for n in 1..p {
        y = prog.push(InstrKind::Mul, vec![y, y], "y", "y *= y".into());
        let inc = prog.push(InstrKind::Add, vec![y], "tmp", "tmp = (1 + y)".into());
        let uvar = format!("u{n}");
        let text = format!("{uvar} = u{} * tmp", n - 1);
        u = prog.push(InstrKind::Mul, vec![u, inc], &uvar, text);
    }
    prog.output = Some(u);
    prog
}

/// Build the dataflow program an unrolled implementation of `algo` would
/// execute at the given width. `kind` picks the seed for the lifting
/// algorithms and is ignored by the Dumas form (fixed k=1 seed). The
/// Euclidean algorithm has data-dependent control flow and cannot be
/// expressed as a straight-line program.
pub fn build_program(algo: AlgoKind, width: Width, kind: SeedKind) -> Result<Program> {
    match algo {
        AlgoKind::Improved => Ok(build_improved(width, kind)),
        AlgoKind::Newton => Ok(build_newton(width, kind)),
        AlgoKind::DumasOriginal => Ok(build_dumas(width)),
        AlgoKind::Euclid => Err(Error::InvalidProgram(
            "euclid has data-dependent control flow and no fixed dataflow graph",
        )),
    }
}

/// Earliest-issue dataflow schedule: each instruction issues at the maximum
/// ready cycle of its operands and is ready `latency` cycles later.
pub fn schedule(prog: &Program, model: &CostModel) -> Result<Schedule> {
    let n = prog.instrs.len();
    let mut issue = vec![0u32; n];
    let mut ready = vec![0u32; n];
    for instr in &prog.instrs {
        let mut at = 0u32;
        for &op in &instr.operands {
            if op >= instr.id {
                return Err(Error::InvalidProgram(
                    "operands must refer to earlier instructions",
                ));
            }
            at = at.max(ready[op]);
        }
        issue[instr.id] = at;
        ready[instr.id] = at + model.latency(instr.kind);
    }
    let total_latency = match prog.output {
        Some(out) if out < n => ready[out],
        Some(_) => return Err(Error::InvalidProgram("output id out of range")),
        None => 0,
    };
    Ok(Schedule {
        issue,
        ready,
        total_latency,
    })
}

/// Render the per-cycle issue table. Instructions issuing on the same cycle
/// share a row; cycles where nothing can issue because an operand is still
/// in flight are annotated with the blocking value.
pub fn render_timeline(sched: &Schedule, prog: &Program) -> String {
    let mut rows: BTreeMap<u32, Vec<&Instr>> = BTreeMap::new();
    for instr in &prog.instrs {
        if instr.kind.is_value() {
            continue;
        }
        rows.entry(sched.issue[instr.id]).or_default().push(instr);
    }
    let output = match prog.output {
        Some(id) => id,
        None => return String::new(),
    };
    if rows.is_empty() {
        // Degenerate programs whose output is an input or constant.
        return format!("0: return {}\n", prog.instrs[output].var);
    }

    let mut out = String::new();
    let total = sched.total_latency;
    for cycle in 0..total {
        if let Some(instrs) = rows.get(&cycle) {
            let texts: Vec<&str> = instrs.iter().map(|i| i.text.as_str()).collect();
            let _ = writeln!(out, "{cycle}: {}", texts.join(", "));
        } else if let Some(blocker) = blocking_var(sched, prog, cycle) {
            let _ = writeln!(out, "{cycle}: (no instruction possible, waiting on {blocker})");
        } else {
            let _ = writeln!(out, "{cycle}:");
        }
    }
    let _ = writeln!(out, "{total}: return {}", prog.instrs[output].var);
    out
}

/// For a stalled cycle, the variable the next-issuing instruction is
/// waiting on.
fn blocking_var<'p>(sched: &Schedule, prog: &'p Program, cycle: u32) -> Option<&'p str> {
    let next = prog
        .instrs
        .iter()
        .filter(|i| !i.kind.is_value() && sched.issue[i.id] > cycle)
        .min_by_key(|i| (sched.issue[i.id], i.id))?;
    let blocker = next
        .operands
        .iter()
        .copied()
        .filter(|&op| sched.ready[op] > cycle)
        .max_by_key(|&op| sched.ready[op])?;
    Some(&prog.instrs[blocker].var)
}
