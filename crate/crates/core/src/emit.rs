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

//! DOT and JSON output.

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram of `l` as a DOT digraph: one edge per cover, pointing up,
/// and one `rank=same` group per height with the bottom at rank 0.
pub fn emit_dot(name: &str, l: &FiniteLattice) -> String {
    let heights = l.heights();
    let top_rank = heights.iter().copied().max().unwrap_or(0);
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n  node [shape=plaintext];\n", quoted(name));
    for x in 0..l.size() {
        out += &format!("  n{x} [label={}];\n", quoted(l.label(x)));
    }
    for rank in 0..=top_rank {
        let nodes: Vec<String> = (0..l.size())
            .filter(|&x| heights[x] == rank)
            .map(|x| format!("n{x};"))
            .collect();
        out += &format!("  {{ rank=same; {} }}\n", nodes.join(" "));
    }
    for (a, b) in l.cover_pairs() {
        out += &format!("  n{a} -> n{b};\n");
    }
    out += "}\n";
    out
}

/// Pretty JSON. Keys follow struct field order, so output is byte-stable.
pub fn emit_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))
}

pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn one_point_lattice_is_a_single_node() {
        let dot = emit_dot("L1", &FiniteLattice::chain(1));
        assert_eq!(dot.matches("[label=").count(), 1);
        assert!(!dot.contains("->"));
    }

    #[test]
    fn c8_congruences() {
        let cs = fixtures::structure("c8").unwrap();
        let dot = emit_dot("Con(C8)", cs.lattice());
        assert_eq!(dot.matches("[label=").count(), 6);
        // 1 < <-1> < <i>, <j>, <k> < C8 has seven covers.
        assert_eq!(dot.matches("->").count(), 7);
        let bottom = cs.lattice().bottom();
        assert!(dot.contains(&format!("{{ rank=same; n{bottom}; }}")));
    }

    #[test]
    fn labels_are_escaped() {
        let l = FiniteLattice::chain(2).relabel(vec!["a\"b".into(), "c".into()]);
        assert!(emit_dot("x", &l).contains(r#"[label="a\"b"]"#));
    }

    #[test]
    fn json_errors_carry_positions() {
        let e = parse_json::<Vec<u32>>("[1,\n 2,,]").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }
}
