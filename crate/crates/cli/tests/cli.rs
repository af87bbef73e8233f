// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! End-to-end runs of the `retic` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn retic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_retic")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("retic-cli-{}-{name}", std::process::id()))
}

#[test]
fn reticulate_tags_named_lattices() {
    for (fixture, want) in [
        ("n5x", "L(N) ≅ L2×L2"),
        ("c8", "L(C8) ≅ L1"),
        ("u5", "L(U) ≅ L1"),
        ("lattice-p", "L(P) ≅ L2⊕L2×L2"),
        ("chain-4", "L(L4) ≅ L2×L2×L2"),
    ] {
        let o = retic(&["reticulate", fixture]);
        assert_eq!(o.status.code(), Some(0), "{fixture}");
        assert_eq!(stdout(&o).lines().next().unwrap(), want);
    }
}

#[test]
fn every_fixture_analyzes() {
    for fixture in ["c8", "s3", "m5", "n5x", "u5", "lattice-e", "lattice-p", "lattice-d", "chain-2", "chain-3", "chain-4"] {
        let o = retic(&["analyze", fixture]);
        assert_eq!(o.status.code(), Some(0), "{fixture}");
        assert!(stdout(&o).contains("battery:"), "{fixture}");
    }
}

#[test]
fn output_is_byte_stable() {
    let a = retic(&["analyze", "n5x", "--json"]);
    let b = retic(&["analyze", "n5x", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("{\n  \"name\": \"N\""));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(retic(&["verify", "lattice-p"]).status.code(), Some(0));
    assert_eq!(retic(&["verify", "u5"]).status.code(), Some(0));
    // C8 refutes three iterated-join laws, which the battery reports.
    let o = retic(&["verify", "c8"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(stdout(&o).matches("FAIL").count(), 3);
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(retic(&[]).status.code(), Some(1));
    assert_eq!(retic(&["frobnicate", "c8"]).status.code(), Some(1));
    assert_eq!(retic(&["analyze", "no-such-fixture"]).status.code(), Some(1));
    let bad = scratch("bad.alg");
    std::fs::write(&bad, "kind: algebra\nname: X\nelements: a b\nop f/1:\na q\n").unwrap();
    let o = retic(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 5") && err.contains("`q`"), "{err}");
    std::fs::remove_file(bad).unwrap();
}

#[test]
fn cap_refusal() {
    assert_eq!(retic(&["reticulate", "chain-4", "--max-lattice", "4"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_retic"))
        .args(["reticulate", "chain-4"])
        .env("RETIC_MAX_LATTICE", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn dot_output() {
    let o = retic(&["dot", "c8"]);
    let text = stdout(&o);
    assert_eq!(text.matches("digraph").count(), 2);
    assert!(text.contains("digraph \"Con(C8)\""));
    let path = scratch("c8.dot");
    let o = retic(&["spectrum", "c8", "--dot-out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn spectrum_of_n() {
    let text = stdout(&retic(&["spectrum", "n5x"]));
    assert!(text.starts_with("Spec(N) = {{a,b}{c}{x,y}, {a}{b,c}{x,y}}"), "{text}");
}

#[test]
fn file_input_matches_fixture() {
    let path = scratch("n.alg");
    std::fs::write(&path, retic_core::fixtures::source("n5x").unwrap()).unwrap();
    let a = retic(&["commutators", path.to_str().unwrap(), "--json"]);
    let b = retic(&["commutators", "n5x", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    std::fs::remove_file(path).unwrap();
}
