//! End-to-end tests that spawn the built binary.

use std::io::Write;
use std::process::{Command, Output};

fn inv2w(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inv2w"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn invert_basic() {
    let out = inv2w(&["invert", "--a", "3", "--width", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("inverse = 171 (0xab)"), "{text}");
    assert!(text.contains("RESULT: inverse=171 hex=0xab"), "{text}");
}

#[test]
fn invert_accepts_hex_input() {
    let out = inv2w(&["invert", "--a", "0xFFFFFFFFFFFFFFFF", "--width", "64"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("RESULT: inverse=18446744073709551615"));
}

#[test]
fn invert_even_input_fails_with_message() {
    let out = inv2w(&["invert", "--a", "4", "--width", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("inverse does not exist for even a"));
}

#[test]
fn invert_trace_has_p_plus_one_rows() {
    let out = inv2w(&["invert", "--a", "3", "--width", "8", "--seed", "k1", "--trace"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("n=")).collect();
    assert_eq!(rows.len(), 4, "{text}");
    assert!(rows[3].contains("x=171"), "{text}");
    assert!(rows[0].contains("y=254"), "{text}");
}

#[test]
fn invert_trace_rejected_for_euclid() {
    let out = inv2w(&["invert", "--a", "3", "--algo", "euclid", "--trace"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invert_all_algorithms_agree_via_cli() {
    let mut results = Vec::new();
    for algo in ["improved", "newton", "dumas", "euclid"] {
        let out = inv2w(&["invert", "--a", "0x123456789", "--width", "40", "--algo", algo]);
        assert!(out.status.success(), "{algo}");
        let text = stdout(&out);
        let line = text
            .lines()
            .find(|l| l.starts_with("RESULT:"))
            .unwrap()
            .to_string();
        results.push(line);
    }
    assert!(results.windows(2).all(|w| w[0] == w[1]), "{results:?}");
}

#[test]
fn verify_exhaustive_w16() {
    let out = inv2w(&["verify", "--width", "16", "--exhaustive"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("32768 odd values OK"), "{text}");
    assert!(text.contains("RESULT: pass checked=32768"), "{text}");
}

#[test]
fn verify_single_algorithm() {
    let out = inv2w(&["verify", "--width", "8", "--exhaustive", "--algos", "newton"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("algos=newton"), "{text}");
    assert!(text.contains("128 odd values OK"), "{text}");
}

#[test]
fn verify_sampled_wide_width() {
    let out = inv2w(&["verify", "--width", "96", "--samples", "500"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("RESULT: pass checked=500"));
}

#[test]
fn verify_refuses_large_exhaustive() {
    let out = inv2w(&["verify", "--width", "25", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--samples"));
}

#[test]
fn verify_sampled_output_is_reproducible() {
    let a = inv2w(&["verify", "--width", "64", "--samples", "200"]);
    let b = inv2w(&["verify", "--width", "64", "--samples", "200"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn search_seed_finds_known_formula() {
    let out = inv2w(&["search-seed", "--k", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(a XOR 2) SUB (a SHL 1)"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("RESULT: count=")), "{text}");
}

#[test]
fn search_seed_k1_nonzero_and_deterministic() {
    let a = inv2w(&["search-seed", "--k", "1", "--const-max", "1"]);
    assert!(a.status.success());
    assert!(!stdout(&a).contains("RESULT: count=0"));
    let b = inv2w(&["search-seed", "--k", "1", "--const-max", "1"]);
    assert_eq!(a.stdout, b.stdout, "byte-identical across runs");
}

#[test]
fn search_seed_determinism_at_k4() {
    let a = inv2w(&["search-seed", "--k", "4", "--const-max", "2"]);
    let b = inv2w(&["search-seed", "--k", "4", "--const-max", "2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn latency_golden_totals() {
    for (program, total) in [("fig1", 19), ("fig2", 30), ("fig3", 20)] {
        let out = inv2w(&["latency", "--program", program]);
        assert!(out.status.success(), "{program}");
        let text = stdout(&out);
        assert!(
            text.contains(&format!("total latency: {total} cycles")),
            "{program}: {text}"
        );
        assert!(text.contains(&format!("RESULT: total={total}")), "{text}");
    }
}

#[test]
fn latency_timeline_shows_rows_and_stalls() {
    let out = inv2w(&["latency", "--program", "fig1"]);
    let text = stdout(&out);
    assert!(text.contains("0: tmp = 3*a"), "{text}");
    assert!(text.contains("6: tmp = (1 + y), y *= y"), "{text}");
    let out = inv2w(&["latency", "--program", "fig3"]);
    let text = stdout(&out);
    assert!(
        text.contains("2: (no instruction possible, waiting on y)"),
        "{text}"
    );
}

#[test]
fn latency_flag_overrides() {
    // A 1-cycle multiply collapses fig2 to 2 seed cycles + 4*(1+1+1).
    let out = inv2w(&["latency", "--program", "fig2", "--mul", "1"]);
    assert!(stdout(&out).contains("RESULT: total=14"));
}

#[test]
fn latency_model_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("slowmul.model");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# slower multiplier").unwrap();
    writeln!(f, "mul=5").unwrap();
    writeln!(f, "add=1").unwrap();
    writeln!(f, "xor=1").unwrap();
    writeln!(f, "mul3=1").unwrap();
    drop(f);
    let out = inv2w(&["latency", "--program", "fig2", "--model", path.to_str().unwrap()]);
    assert!(out.status.success());
    // Seed 2 cycles, then 4 iterations of (5 + 1 + 5).
    assert!(stdout(&out).contains("RESULT: total=46"), "{}", stdout(&out));

    let bad = dir.path().join("bad.model");
    std::fs::write(&bad, "mul=fast\n").unwrap();
    let out = inv2w(&["latency", "--model", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn latency_unknown_program_is_usage_error() {
    let out = inv2w(&["latency", "--program", "fig9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_reports_three_lines_and_disclaimer() {
    let out = inv2w(&["bench", "--width", "64", "--iters", "10000"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in ["improved:", "newton:", "dumas:"] {
        assert_eq!(
            text.lines().filter(|l| l.starts_with(name)).count(),
            1,
            "{text}"
        );
    }
    assert!(text.contains("hardware-dependent"), "{text}");
    assert!(text.contains("RESULT: ok"), "{text}");
}

#[test]
fn bench_zero_iters_is_usage_error() {
    let out = inv2w(&["bench", "--iters", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_wide_width_works() {
    let out = inv2w(&["bench", "--width", "96", "--iters", "2000"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("RESULT: ok"));
}

#[test]
fn invalid_width_is_usage_error() {
    let out = inv2w(&["invert", "--a", "3", "--width", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = inv2w(&["invert", "--a", "3", "--width", "5000"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wide_width_invert_roundtrips() {
    // 4096-bit inverse, checked by feeding the inverse back in.
    let out = inv2w(&["invert", "--a", "0xabcdef0123456789", "--width", "4096"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let hex = text
        .lines()
        .find(|l| l.starts_with("RESULT:"))
        .and_then(|l| l.split("hex=").nth(1))
        .unwrap()
        .to_string();
    let out = inv2w(&["invert", "--a", &hex, "--width", "4096"]);
    assert!(out.status.success());
    assert!(
        stdout(&out).contains("RESULT: inverse=12379813738877118345 hex=0xabcdef0123456789"),
        "{}",
        stdout(&out)
    );
}
