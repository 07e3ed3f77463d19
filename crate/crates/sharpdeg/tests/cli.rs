mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sharpdeg::cli::{render_diagram, Format};
use sharpdeg::constructions::{faran_cubics, whitney};
use sharpdeg::diagram::{NewtonDiagram, Sign};
use sharpdeg::poly::{divide_by_s, homogenize_and_flip};
use sharpdeg::Polynomial;

fn sharpdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sharpdeg")).args(args).output().unwrap()
}

fn sharpdeg_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sharpdeg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn diagram_of(p: &Polynomial) -> NewtonDiagram {
    let q = divide_by_s(&homogenize_and_flip(p).unwrap()).unwrap();
    NewtonDiagram::of(&q, p.degree().unwrap()).unwrap()
}

fn panels(svg: &str) -> Vec<&str> {
    svg.split("<g class=\"panel\"").skip(1).collect()
}

#[test]
fn exit_codes() {
    assert_eq!(sharpdeg(&["analyze", "x1^3 + 3 x1 x2 + x2^3"]).status.code(), Some(0));
    let bad = sharpdeg(&["analyze", "x1 + + x2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("offset 5"));
    assert_eq!(sharpdeg(&["generate", "filledsharp", "6"]).status.code(), Some(3));
    assert_eq!(sharpdeg(&["generate", "dkr", "4"]).status.code(), Some(2));
    assert_eq!(sharpdeg(&["render", "/nonexistent/diagram.json"]).status.code(), Some(2));
    assert_eq!(sharpdeg(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(sharpdeg(&["verify-bounds", "x1^2 + x2"]).status.code(), Some(2));
}

#[test]
fn json_everywhere() {
    for args in [
        vec!["--json", "analyze", "x1 + x2 x3 + x3^2 + x2"],
        vec!["--json", "generate", "faran3"],
        vec!["--json", "verify-bounds", "x1^3 + 3 x1 x2 + x2^3"],
        vec!["--json", "enumerate", "T3.4", "--dmax", "3"],
        vec!["--json", "convert", "x1^3 + 3 x1 x2 + x2^3"],
        vec!["--json", "analyze", "x1 + + x2"],
    ] {
        let o = sharpdeg(&args);
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert!(v.is_object() || v.is_array());
    }
}

#[test]
fn trace_emits_receipts() {
    let o = sharpdeg(&["--json", "--trace", "analyze", "x1 x3^2 + x2 x3^2 + x3^3 + x1 x3 + x2 x3 + x1 + x2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let receipts = v["receipts"].as_array().unwrap();
    assert!(!receipts.is_empty());
    for r in receipts {
        assert!(r["op"].as_str().unwrap().starts_with("reduce_3d_step"));
    }
}

#[test]
fn generate_then_convert_round_trip() {
    let w = stdout(&sharpdeg(&["generate", "whitney", "3", "3", "--choices", "x1,x1 x2"]));
    let w = w.trim();
    let map = stdout(&sharpdeg(&["convert", w]));
    let back = stdout(&sharpdeg(&["convert", map.trim()]));
    assert!(back.contains(&format!("affine polynomial: {w}")), "{back}");
    assert!(back.contains("vanishes on the source form: true"));
}

#[test]
fn enumerate_reports_minima() {
    let o = sharpdeg(&["--json", "enumerate", "T5.2", "--dmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mins: Vec<u64> = v["levels"].as_array().unwrap().iter().map(|l| l["min_nodes"].as_u64().unwrap()).collect();
    assert_eq!(mins, vec![4, 6]);
    let o = Command::new(env!("CARGO_BIN_EXE_sharpdeg")).args(["enumerate", "T3.4", "--dmax", "3"]).env("RAYON_NUM_THREADS", "1").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn figure_one_markers() {
    let (f2, _) = faran_cubics();
    let svg = render_diagram(&diagram_of(&f2), Format::Svg).unwrap();
    assert_eq!(svg.matches("class=\"marker ").count(), 6);
    assert_eq!(svg.matches("class=\"marker P\"").count(), 3);
    assert_eq!(svg.matches("class=\"marker N\"").count(), 3);
    let ascii = render_diagram(&diagram_of(&f2), Format::Ascii).unwrap();
    assert_eq!(ascii, "P N P\n N N\n  P\n");
}

#[test]
fn single_point_marker_at_origin() {
    let diag = NewtonDiagram::from_signs(2, 1, [(vec![0, 0], Sign::P)]).unwrap();
    let svg = render_diagram(&diag, Format::Svg).unwrap();
    assert_eq!(svg.matches("class=\"marker ").count(), 1);
    assert!(svg.contains("class=\"marker P\" cx=\"0.000\" cy=\"0.000\""));
}

#[test]
fn whitney_three_variables_renders_a_path() {
    let diag = diagram_of(&whitney(3, 3, None).unwrap());
    let svg = render_diagram(&diag, Format::Svg).unwrap();
    let ps = panels(&svg);
    for panel in &ps[..3] {
        assert_eq!(panel.matches("class=\"marker ").count(), 3);
        assert_eq!(panel.matches("class=\"edge\"").count(), 2);
    }
}

#[test]
fn render_reads_files_and_stdin() {
    let (f2, _) = faran_cubics();
    let json = serde_json::to_string(&diagram_of(&f2).to_json()).unwrap();
    let path = std::env::temp_dir().join(format!("sharpdeg-fig1-{}.json", std::process::id()));
    std::fs::write(&path, &json).unwrap();
    let a = sharpdeg(&["render", path.to_str().unwrap(), "--format", "svg"]);
    let b = sharpdeg_stdin(&["render", "-", "--format", "svg"], &json);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a).matches("class=\"marker ").count(), 6);
    let bad = sharpdeg_stdin(&["render", "-"], "{\"n\": 5}");
    assert_eq!(bad.status.code(), Some(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn svg_is_deterministic(n in 2usize..=3, d in 1u32..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let diag = common::random_diagram(n, d, 0.5, &mut rng);
        let a = render_diagram(&diag, Format::Svg).unwrap();
        let rebuilt = NewtonDiagram::from_json(&diag.to_json()).unwrap();
        let b = render_diagram(&rebuilt, Format::Svg).unwrap();
        prop_assert_eq!(a.as_bytes(), b.as_bytes());
        let markers = if n == 2 { diag.len() } else { a.matches("class=\"marker ").count() };
        prop_assert_eq!(a.matches("class=\"marker ").count(), markers);
    }
}

#[test]
fn unsupported_dimension() {
    let diag = NewtonDiagram::from_signs(4, 1, [(vec![0, 0, 0, 0], Sign::P)]).unwrap();
    assert!(matches!(render_diagram(&diag, Format::Ascii), Err(sharpdeg::Error::Dimension(4))));
}
