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

//! Built-in fixture library.

use crate::algebra::FiniteAlgebra;
use crate::commutator::CommutatorStructure;
use crate::error::{Error, Result};
use crate::format::{parse, AlgebraDocument};

const SOURCES: &[(&str, &str)] = &[
    ("c8", include_str!("../fixtures/c8.alg")),
    ("s3", include_str!("../fixtures/s3.alg")),
    ("m5", include_str!("../fixtures/m5.alg")),
    ("n5x", include_str!("../fixtures/n5x.alg")),
    ("u5", include_str!("../fixtures/u5.cs")),
    ("lattice-e", include_str!("../fixtures/lattice-e.alg")),
    ("lattice-p", include_str!("../fixtures/lattice-p.alg")),
    ("lattice-d", include_str!("../fixtures/lattice-d.alg")),
    ("chain-2", include_str!("../fixtures/chain-2.alg")),
    ("chain-3", include_str!("../fixtures/chain-3.alg")),
    ("chain-4", include_str!("../fixtures/chain-4.alg")),
];

/// Names of every built-in fixture, in library order.
pub fn names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

/// Raw text of a fixture.
pub fn source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn document(name: &str) -> Result<AlgebraDocument> {
    let text = source(name)
        .ok_or_else(|| Error::InvalidArgument(format!("no built-in fixture named `{name}`")))?;
    parse(text)
}

pub fn algebra(name: &str) -> Result<FiniteAlgebra> {
    document(name)?.to_algebra()
}

/// The commutator structure of a fixture, computed from its algebra when
/// it has one.
pub fn structure(name: &str) -> Result<CommutatorStructure> {
    document(name)?.to_structure()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses() {
        for name in names() {
            let d = document(name).unwrap();
            assert!(!d.elements.is_empty(), "{name}");
        }
        assert!(document("nope").is_err());
    }

    #[test]
    fn kinds() {
        assert_eq!(document("u5").unwrap().kind(), "commutator-structure");
        assert!(algebra("u5").is_err());
        assert_eq!(algebra("m5").unwrap().size(), 5);
        assert_eq!(algebra("c8").unwrap().size(), 8);
    }

    #[test]
    fn quaternion_products() {
        let c8 = algebra("c8").unwrap();
        assert_eq!(c8.evaluate_labels("*", &["i", "j"]).unwrap(), "k");
        assert_eq!(c8.evaluate_labels("*", &["j", "i"]).unwrap(), "-k");
        assert_eq!(c8.evaluate_labels("*", &["i", "i"]).unwrap(), "-1");
        assert_eq!(c8.evaluate_labels("inv", &["j"]).unwrap(), "-j");
        assert_eq!(c8.evaluate_labels("e", &[]).unwrap(), "1");
    }

    #[test]
    fn chain_join() {
        let l4 = algebra("chain-4").unwrap();
        assert_eq!(l4.evaluate_labels("join", &["x", "y"]).unwrap(), "y");
    }
}
