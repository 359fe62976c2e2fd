//! End-to-end tests of the binary: exit-code contract and deterministic
//! output.

use std::process::{Command, Output};

fn gbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbraid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn analyze_k3_reports_exact_type() {
    let out = gbraid(&["analyze", "--graph", "n=3;1-2;1-3;2-3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"triangle_count\": 1"));
    assert!(text.contains("(F_2)^1 x Z^1"));
}

#[test]
fn word_eq_commuting_generators_on_a_path() {
    let out = gbraid(&[
        "word-eq",
        "a_1_2 a_2_3",
        "a_2_3 a_1_2",
        "--graph",
        "n=3;1-2;2-3",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("\"trivial\""));
}

#[test]
fn word_triv_single_generator_is_nontrivial() {
    let out = gbraid(&["word-triv", "a_1_2", "--graph", "n=3;1-2;2-3"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("\"nontrivial\""));
    assert!(text.contains("\"witness\""));
}

#[test]
fn word_triv_outside_knowledge_base_is_unknown() {
    // K7 minus the non-adjacent edges {4,5} and {1,6}; the commutator of a
    // transverse pair projects trivially everywhere but has no certificate
    let mut parts = vec!["n=7".to_string()];
    for i in 1..=7usize {
        for j in (i + 1)..=7 {
            if (i, j) != (4, 5) && (i, j) != (1, 6) {
                parts.push(format!("{i}-{j}"));
            }
        }
    }
    let inline = parts.join(";");
    let out = gbraid(&[
        "word-triv",
        "a_1_4^-1 a_5_6^-1 a_1_4 a_5_6",
        "--graph",
        &inline,
    ]);
    assert_eq!(out.status.code(), Some(2), "{}", stdout(&out));
    assert!(stdout(&out).contains("\"unknown\""));
}

#[test]
fn cliques_of_the_six_vertex_example() {
    let mut parts = vec!["n=6".to_string()];
    for i in 1..=6usize {
        for j in (i + 1)..=6 {
            if (i, j) != (4, 5) && (i, j) != (1, 6) {
                parts.push(format!("{i}-{j}"));
            }
        }
    }
    let out = gbraid(&["cliques", "--text", "--graph", &parts.join(";")]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 2 3 4\n1 2 3 5\n2 3 4 6\n2 3 5 6\n");
}

#[test]
fn parse_errors_exit_64() {
    let out = gbraid(&["cliques", "--graph", "n=2;2-3"]);
    assert_eq!(out.status.code(), Some(64));
    let out = gbraid(&["cliques", "--graph", "nonsense"]);
    assert_eq!(out.status.code(), Some(64));
    let out = gbraid(&["definitely-not-a-verb"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn resource_guard_exits_69() {
    let out = gbraid(&[
        "word-triv",
        "a_1_3^-1 a_2_3^-1 a_1_3 a_2_3",
        "--graph",
        "n=3;1-2;1-3;2-3",
        "--word-limit",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(69), "{}", stdout(&out));
    assert!(stdout(&out).contains("word-length limit"));
}

#[test]
fn aut_bound_is_enforced_and_overridable() {
    let mut parts = vec!["n=11".to_string()];
    for i in 1..=11usize {
        for j in (i + 1)..=11 {
            parts.push(format!("{i}-{j}"));
        }
    }
    let inline = parts.join(";");
    let out = gbraid(&["bgamma", "--graph", &inline]);
    assert_eq!(out.status.code(), Some(64));
    // analyze degrades gracefully instead of failing
    let out = gbraid(&["analyze", "--graph", &inline]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("bgamma_note"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["analyze", "--graph", "n=5;1-2;1-3;2-3;3-4;3-5;4-5"];
    let first = stdout(&gbraid(&args));
    let second = stdout(&gbraid(&args));
    assert_eq!(first, second);
    assert!(!first.is_empty());
}

#[test]
fn example6_verb() {
    let out = gbraid(&["example6"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"nontrivial\": true"));
}

#[test]
fn discriminantal_kernel_of_deleted_k5() {
    let mut parts = vec!["n=5".to_string()];
    for i in 1..=5usize {
        for j in (i + 1)..=5 {
            if (i, j) != (4, 5) {
                parts.push(format!("{i}-{j}"));
            }
        }
    }
    let out = gbraid(&[
        "discriminantal",
        "--clique",
        "1,2,3,4",
        "--graph",
        &parts.join(";"),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("x_5 = 1"));
    assert!(text.contains("x_5 = 3"));
    assert!(!text.contains("x_5 = 4"));
}

#[test]
fn incidence_summary_of_octahedron() {
    let mut parts = vec!["n=6".to_string()];
    for i in 1..=6usize {
        for j in (i + 1)..=6 {
            if j != i + 3 {
                parts.push(format!("{i}-{j}"));
            }
        }
    }
    let out = gbraid(&["incidence", "--graph", &parts.join(";")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"betti1\": 5"));
    assert!(text.contains("\"has_isthmus\": false"));
}

#[test]
fn dot_format_is_accepted() {
    let dir = std::env::temp_dir().join("gbraid-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tri.dot");
    std::fs::write(&path, "graph t { 1 -- 2; 2 -- 3; 1 -- 3; }\n").unwrap();
    let out = gbraid(&["cliques", "--text", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 2 3\n");
    let out = gbraid(&["cliques", "--text", "--format", "dot", path.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn present_text_listing() {
    let out = gbraid(&["present", "--text", "--graph", "n=3;1-2;2-3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "gen a_1_2\ngen a_2_3\nrel a_1_2^-1 a_2_3^-1 a_1_2 a_2_3\n"
    );
}

#[test]
fn rho_projects_and_relabels() {
    let out = gbraid(&[
        "rho",
        "a_1_2 a_3_4",
        "--vertices",
        "3,4",
        "--graph",
        "n=4;1-2;2-3;3-4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"image\": \"a_3_4\""));
    assert!(text.contains("\"relabelled\": \"a_1_2\""));
}
