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

//! Congruence lattices, term-condition commutators, prime spectra and
//! reticulations of finite algebras.

pub mod algebra;
pub mod analysis;
pub mod commutator;
pub mod congruence;
pub mod emit;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod functor;
pub mod ideals;
pub mod iso;
pub mod lattice;
pub mod report;
pub mod reticulation;
pub mod spectrum;
pub mod subpower;
pub mod verify;

pub use analysis::{analyze, AnalysisReport};
pub use algebra::{direct_product, quotient_algebra, FiniteAlgebra, Signature, SurjectiveMorphism};
pub use commutator::{classify, CommutatorStructure, IterMode, LawFlags};
pub use congruence::{cg_generate, enumerate_congruences, Congruence, CongruenceLattice};
pub use error::{Error, Result};
pub use lattice::FiniteLattice;
pub use report::{Check, Report, Status};
