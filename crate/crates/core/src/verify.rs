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

//! The invariant battery: every check that applies to one structure,
//! collected into reports without stopping at the first failure.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::commutator::{check_quotient_commutators, law_checks, CommutatorStructure};
use crate::error::{Error, Result};
use crate::functor::{
    verify_functoriality, verify_hyperarchimedean_equivalences, verify_quotient_preservation,
    verify_semiprime_reduction,
};
use crate::report::{Check, Report, Status};
use crate::reticulation::{
    annihilator_checks, boolean_checks, build_reticulation, galois_checks, lattice_checks,
    verify_spec_homeomorphism,
};
use crate::spectrum::{boolean_center_checks, spectrum_checks};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Battery {
    pub subject: String,
    pub reports: Vec<Report>,
}

impl Battery {
    /// Checks that failed outright, with their report subjects.
    pub fn failures(&self) -> Vec<(&str, &Check)> {
        self.reports
            .iter()
            .flat_map(|r| r.failures().into_iter().map(move |c| (r.subject.as_str(), c)))
            .collect()
    }

    /// No unconditional check failed.
    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    pub fn count(&self, pred: impl Fn(&Status) -> bool + Copy) -> usize {
        self.reports.iter().map(|r| r.count(pred)).sum()
    }
}

/// A refusal becomes a skipped entry; anything else is a real error.
fn entry(subject: &str, result: Result<Report>) -> Result<Report> {
    match result {
        Err(Error::Hypothesis(why)) => {
            let mut r = Report::new(subject);
            r.skip(subject, why);
            Ok(r)
        }
        other => other,
    }
}

/// Runs every applicable check on `cs`. Quotient-level checks need an
/// algebra and are left out for table fixtures. Report order is fixed.
pub fn battery(cs: &CommutatorStructure) -> Result<Battery> {
    let mut reports = vec![
        law_checks(cs),
        spectrum_checks(cs)?,
        boolean_center_checks(cs),
    ];
    match build_reticulation(cs) {
        Ok(r) => {
            reports.push(verify_spec_homeomorphism(&r)?);
            reports.push(galois_checks(&r)?);
            reports.push(lattice_checks(&r)?);
            reports.push(annihilator_checks(&r)?);
            reports.push(boolean_checks(&r));
        }
        Err(e @ Error::Hypothesis(_)) => reports.push(entry("reticulation", Err(e))?),
        Err(e) => return Err(e),
    }
    reports.push(entry("semiprime reduction", verify_semiprime_reduction(cs))?);
    reports.push(entry(
        "hyperarchimedean conditions",
        verify_hyperarchimedean_equivalences(cs),
    )?);
    if cs.algebra().is_some() {
        let m = cs.size();
        let l = cs.lattice();
        let per_theta: Vec<Vec<Report>> = (0..m)
            .into_par_iter()
            .map(|t| {
                let mut out = vec![
                    check_quotient_commutators(cs, t)?,
                    entry("quotient preservation", verify_quotient_preservation(cs, t))?,
                ];
                for z in (0..m).filter(|&z| l.leq(t, z)) {
                    out.push(entry("functoriality", verify_functoriality(cs, t, z))?);
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        reports.extend(per_theta.into_iter().flatten());
    }
    Ok(Battery {
        subject: cs.name().to_string(),
        reports,
    })
}
