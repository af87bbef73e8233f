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

//! The full analysis of one structure, as a serializable record.

use serde::{Deserialize, Serialize};

use crate::commutator::{
    classify, omega_diagnostic, Classification, CommutatorStructure, LawFlags, OmegaCell,
};
use crate::error::{Error, Result};
use crate::functor::hyperarchimedean_conditions;
use crate::iso::identify;
use crate::lattice::FiniteLattice;
use crate::reticulation::build_reticulation;
use crate::spectrum::{spectrum_report, SpectrumReport};
use crate::verify::{battery, Battery};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub size: usize,
    pub elements: Vec<String>,
    /// Cover pairs `(lower, upper)`.
    pub covers: Vec<(String, String)>,
    pub distributive: bool,
    pub boolean: bool,
    /// Matching names from the small-lattice catalog.
    pub names: Vec<String>,
}

impl LatticeSummary {
    pub fn of(l: &FiniteLattice) -> Self {
        LatticeSummary {
            size: l.size(),
            elements: l.labels().to_vec(),
            covers: l
                .cover_pairs()
                .into_iter()
                .map(|(a, b)| (l.label(a).to_string(), l.label(b).to_string()))
                .collect(),
            distributive: l.is_distributive(),
            boolean: l.is_boolean(),
            names: identify(l).into_iter().map(String::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReticClass {
    /// The representative congruence naming the class.
    pub label: String,
    pub members: Vec<String>,
    pub radical: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReticulationSummary {
    pub classes: Vec<ReticClass>,
    pub lattice: LatticeSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub name: String,
    /// `algebra` or `commutator-structure`.
    pub source: String,
    pub modular_variety: bool,
    pub semi_degenerate: bool,
    pub congruences: LatticeSummary,
    /// Row α, column β holds `[α,β]`, all by label.
    pub commutators: Vec<Vec<String>>,
    pub flags: LawFlags,
    pub classification: Classification,
    pub spectrum: SpectrumReport,
    pub reticulation: Option<ReticulationSummary>,
    /// Why the reticulation was refused, if it was.
    pub refusal: Option<String>,
    /// The six hyperarchimedean conditions, when they could be evaluated.
    pub hyperarchimedean_conditions: Option<[Option<bool>; 6]>,
    /// Cells of the bounded `(A,Ω)` search, `Ω` = all congruences, that
    /// found no `k`. Undecided, not refuted.
    pub omega_undecided: Vec<OmegaCell>,
    pub battery: Battery,
}

pub fn analyze(cs: &CommutatorStructure) -> Result<AnalysisReport> {
    let m = cs.size();
    let lab = |a: usize| cs.label(a).to_string();
    let (reticulation, refusal) = match build_reticulation(cs) {
        Ok(r) => {
            let classes = (0..r.size())
                .map(|c| ReticClass {
                    label: lab(r.representative(c)),
                    members: r.classes()[c].iter().map(|&a| lab(a)).collect(),
                    radical: lab(r.class_radical(c)),
                })
                .collect();
            let summary = ReticulationSummary {
                classes,
                lattice: LatticeSummary::of(r.lattice()),
            };
            (Some(summary), None)
        }
        Err(Error::Hypothesis(why)) => (None, Some(why)),
        Err(e) => return Err(e),
    };
    let conditions = match hyperarchimedean_conditions(cs) {
        Ok(c) => Some(c),
        Err(Error::Hypothesis(_)) => None,
        Err(e) => return Err(e),
    };
    let all: Vec<usize> = (0..m).collect();
    let omega = omega_diagnostic(cs, &all, m)?;
    Ok(AnalysisReport {
        name: cs.name().to_string(),
        source: if cs.algebra().is_some() { "algebra" } else { "commutator-structure" }.into(),
        modular_variety: cs.modular_variety(),
        semi_degenerate: cs.semi_degenerate(),
        congruences: LatticeSummary::of(cs.lattice()),
        commutators: (0..m).map(|a| (0..m).map(|b| lab(cs.comm(a, b))).collect()).collect(),
        flags: cs.flags(),
        classification: classify(cs),
        spectrum: spectrum_report(cs)?,
        reticulation,
        refusal,
        hyperarchimedean_conditions: conditions,
        omega_undecided: omega.undecided().cloned().collect(),
        battery: battery(cs)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::emit::{emit_json, parse_json};
    use crate::fixtures;

    #[test]
    fn json_round_trip_on_every_fixture() {
        for name in fixtures::names() {
            let report = analyze(&fixtures::structure(name).unwrap()).unwrap();
            let text = emit_json(&report).unwrap();
            let back: AnalysisReport = parse_json(&text).unwrap();
            assert_eq!(back, report, "{name}");
            assert_eq!(emit_json(&back).unwrap(), text, "{name}");
        }
    }

    #[test]
    fn n_reticulates_to_a_square() {
        let report = analyze(&fixtures::structure("n5x").unwrap()).unwrap();
        let r = report.reticulation.unwrap();
        assert_eq!(r.lattice.names, vec!["L2^2"]);
        assert_eq!(report.source, "algebra");
    }
}
