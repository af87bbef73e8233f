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

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown operation `{0}`")]
    UnknownOperation(String),
    #[error("operation `{op}` has arity {expected}, got {got} arguments")]
    ArityMismatch {
        op: String,
        expected: usize,
        got: usize,
    },
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("element index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("signatures differ: {0}")]
    SignatureMismatch(String),
    #[error("partition is not compatible with `{op}`: {witness}")]
    NotCompatible { op: String, witness: String },
    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("map is not onto the target carrier")]
    NotSurjective,
    #[error("carrier size mismatch: expected {expected}, got {got}")]
    CarrierMismatch { expected: usize, got: usize },
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("invalid commutator table: {0}")]
    InvalidCommutator(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("lattice has {size} elements, above the enumeration cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
