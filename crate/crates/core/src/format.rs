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

//! Line-oriented text format for algebras and commutator structures.
//!
//! ```text
//! kind: algebra
//! name: L2
//! elements: 0 1
//! variety: congruence-modular
//!
//! op join/2:
//! 0 1
//! 1 1
//!
//! op zero/0:
//! 0
//! ```
//!
//! An operation of arity `k` has `n^(k-1)` rows of `n` labels (one row for
//! `k <= 1`). A commutator structure instead has a `leq:` section of
//! `a < b` lines generating the order, a `comm:` section with one row per
//! element, and an optional `principal:` header listing the principal
//! congruences. Lines starting with `#` are comments.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::algebra::FiniteAlgebra;
use crate::commutator::CommutatorStructure;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperationSpec {
    pub name: String,
    pub arity: usize,
    /// Row-major table of labels.
    pub table: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DocumentBody {
    Algebra {
        operations: Vec<OperationSpec>,
    },
    CommutatorStructure {
        leq: Vec<(String, String)>,
        comm: Vec<Vec<String>>,
        principal: Option<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub elements: Vec<String>,
    /// Declares that the algebra lies in a congruence-modular variety.
    pub modular_variety: bool,
    pub body: DocumentBody,
}

/// What a document builds into.
#[derive(Clone, Debug)]
pub enum Loaded {
    Algebra(FiniteAlgebra),
    Structure(CommutatorStructure),
}

impl AlgebraDocument {
    pub fn kind(&self) -> &'static str {
        match self.body {
            DocumentBody::Algebra { .. } => "algebra",
            DocumentBody::CommutatorStructure { .. } => "commutator-structure",
        }
    }

    pub fn from_algebra(alg: &FiniteAlgebra, modular_variety: bool) -> Self {
        let operations = alg
            .operations()
            .iter()
            .map(|op| OperationSpec {
                name: op.name().to_string(),
                arity: op.arity(),
                table: op.table().iter().map(|&x| alg.label(x as usize).to_string()).collect(),
            })
            .collect();
        AlgebraDocument {
            name: alg.name().to_string(),
            elements: alg.labels().to_vec(),
            modular_variety,
            body: DocumentBody::Algebra { operations },
        }
    }

    /// Records the cover relation and the table of `cs`.
    pub fn from_structure(cs: &CommutatorStructure) -> Self {
        let l = cs.lattice();
        let lab = |a: usize| l.label(a).to_string();
        let m = cs.size();
        AlgebraDocument {
            name: cs.name().to_string(),
            elements: l.labels().to_vec(),
            modular_variety: cs.modular_variety(),
            body: DocumentBody::CommutatorStructure {
                leq: l.cover_pairs().into_iter().map(|(a, b)| (lab(a), lab(b))).collect(),
                comm: (0..m).map(|a| (0..m).map(|b| lab(cs.comm(a, b))).collect()).collect(),
                principal: cs.principal().map(|p| {
                    (0..m).filter(|&a| p[a]).map(lab).collect()
                }),
            },
        }
    }

    fn indices(&self) -> HashMap<&str, usize> {
        self.elements.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
    }

    pub fn to_algebra(&self) -> Result<FiniteAlgebra> {
        let DocumentBody::Algebra { operations } = &self.body else {
            return Err(Error::InvalidArgument(format!(
                "{} is a commutator structure, not an algebra",
                self.name
            )));
        };
        let idx = self.indices();
        let ops = operations
            .iter()
            .map(|op| {
                let table = op
                    .table
                    .iter()
                    .map(|l| idx.get(l.as_str()).copied().ok_or_else(|| Error::UnknownLabel(l.clone())))
                    .collect::<Result<Vec<_>>>()?;
                Ok((op.name.clone(), op.arity, table))
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteAlgebra::new(self.name.clone(), self.elements.clone(), ops)
    }

    /// The commutator structure: computed for algebras, read off the table
    /// for commutator-structure documents.
    pub fn to_structure(&self) -> Result<CommutatorStructure> {
        let cs = match &self.body {
            DocumentBody::Algebra { .. } => CommutatorStructure::from_algebra(&self.to_algebra()?),
            DocumentBody::CommutatorStructure {
                leq,
                comm,
                principal,
            } => {
                let idx = self.indices();
                let get = |l: &str| idx.get(l).copied().ok_or_else(|| Error::UnknownLabel(l.to_string()));
                let pairs = leq
                    .iter()
                    .map(|(a, b)| Ok((get(a)?, get(b)?)))
                    .collect::<Result<Vec<_>>>()?;
                let lattice = FiniteLattice::from_relation(self.elements.clone(), &pairs)?;
                let m = self.elements.len();
                if comm.len() != m || comm.iter().any(|r| r.len() != m) {
                    return Err(Error::InvalidCommutator(format!("table must be {m} x {m}")));
                }
                let table = comm
                    .iter()
                    .flatten()
                    .map(|l| get(l))
                    .collect::<Result<Vec<_>>>()?;
                let principal = match principal {
                    Some(ps) => {
                        let mut marks = vec![false; m];
                        for p in ps {
                            marks[get(p)?] = true;
                        }
                        Some(marks)
                    }
                    None => None,
                };
                CommutatorStructure::from_table(self.name.clone(), lattice, table, principal)?
            }
        };
        Ok(cs.assume_modular_variety(self.modular_variety))
    }

    pub fn load(&self) -> Result<Loaded> {
        match self.body {
            DocumentBody::Algebra { .. } => Ok(Loaded::Algebra(self.to_algebra()?)),
            DocumentBody::CommutatorStructure { .. } => Ok(Loaded::Structure(self.to_structure()?)),
        }
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into whitespace-separated tokens with 1-based columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
        .map(|(byte, t)| (text[..byte].chars().count() + 1, t))
        .collect()
}

enum Section {
    Header,
    Op(usize),
    Leq,
    Comm,
}

struct Line<'a> {
    no: usize,
    text: &'a str,
}

/// Parses and validates a document.
pub fn parse(text: &str) -> Result<AlgebraDocument> {
    let mut kind: Option<(usize, String)> = None;
    let mut name: Option<String> = None;
    let mut elements: Option<(usize, Vec<(usize, String)>)> = None;
    let mut modular_variety = false;
    let mut principal: Option<(usize, Vec<(usize, String)>)> = None;
    // (line, name, arity, rows)
    let mut ops: Vec<(usize, String, usize, Vec<Line>)> = Vec::new();
    let mut leq: Vec<Line> = Vec::new();
    let mut comm: Vec<Line> = Vec::new();
    let mut section = Section::Header;
    let mut seen_leq = None;
    let mut seen_comm = None;

    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let trimmed = raw.trim();
        if trimmed.starts_with('#') {
            continue;
        }
        if trimmed.is_empty() {
            section = Section::Header;
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("op ") {
            let col = raw.find("op ").unwrap() + 1;
            let Some(spec) = rest.trim().strip_suffix(':') else {
                return Err(err(no, col, "operation header must end with `:`"));
            };
            let Some((sym, ar)) = spec.rsplit_once('/') else {
                return Err(err(no, col, "expected `op <name>/<arity>:`"));
            };
            let sym = sym.trim();
            if sym.is_empty() || sym.contains(char::is_whitespace) {
                return Err(err(no, col + 3, "operation name must be a single token"));
            }
            let arity: usize = ar
                .trim()
                .parse()
                .map_err(|_| err(no, col, format!("arity `{}` is not a number", ar.trim())))?;
            if ops.iter().any(|o| o.1 == sym) {
                return Err(err(no, col + 3, format!("operation `{sym}` declared twice")));
            }
            ops.push((no, sym.to_string(), arity, Vec::new()));
            section = Section::Op(ops.len() - 1);
            continue;
        }
        if trimmed == "leq:" {
            if seen_leq.replace(no).is_some() {
                return Err(err(no, 1, "second `leq:` section"));
            }
            section = Section::Leq;
            continue;
        }
        if trimmed == "comm:" {
            if seen_comm.replace(no).is_some() {
                return Err(err(no, 1, "second `comm:` section"));
            }
            section = Section::Comm;
            continue;
        }
        match section {
            Section::Op(k) => {
                ops[k].3.push(Line { no, text: raw });
                continue;
            }
            Section::Leq => {
                leq.push(Line { no, text: raw });
                continue;
            }
            Section::Comm => {
                comm.push(Line { no, text: raw });
                continue;
            }
            Section::Header => {}
        }
        let Some((key, value)) = raw.split_once(':') else {
            return Err(err(no, 1, format!("unexpected line `{trimmed}`")));
        };
        let value_col = key.chars().count() + 2;
        let toks = || -> Vec<(usize, String)> {
            tokens(value)
                .into_iter()
                .map(|(c, t)| (c + value_col - 1, t.to_string()))
                .collect()
        };
        match key.trim() {
            "kind" => kind = Some((no, value.trim().to_string())),
            "name" => name = Some(value.trim().to_string()),
            "elements" => elements = Some((no, toks())),
            "principal" => principal = Some((no, toks())),
            "variety" => match value.trim() {
                "congruence-modular" => modular_variety = true,
                other => {
                    return Err(err(no, value_col, format!("unknown variety `{other}`")));
                }
            },
            other => return Err(err(no, 1, format!("unknown header `{other}`"))),
        }
    }

    let Some((kind_line, kind)) = kind else {
        return Err(err(1, 1, "missing `kind:` header"));
    };
    let name = name.unwrap_or_default();
    let Some((el_line, el_toks)) = elements else {
        return Err(err(1, 1, "missing `elements:` header"));
    };
    if el_toks.is_empty() {
        return Err(err(el_line, 1, "carrier must be nonempty"));
    }
    let mut index: HashMap<String, usize> = HashMap::new();
    for (i, (col, l)) in el_toks.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(err(el_line, *col, format!("label `{l}` repeated")));
        }
    }
    let n = el_toks.len();
    let elements: Vec<String> = el_toks.into_iter().map(|(_, l)| l).collect();
    let label_at = |line: usize, col: usize, l: &str| -> Result<String> {
        if index.contains_key(l) {
            Ok(l.to_string())
        } else {
            Err(err(line, col, format!("unknown label `{l}`")))
        }
    };

    let body = match kind.as_str() {
        "algebra" => {
            if let Some(l) = seen_leq.or(seen_comm) {
                return Err(err(l, 1, "`leq:`/`comm:` sections belong to commutator structures"));
            }
            if let Some((l, _)) = principal {
                return Err(err(l, 1, "`principal:` belongs to commutator structures"));
            }
            let mut operations = Vec::new();
            for (line, sym, arity, rows) in ops {
                let (want_rows, width) = match arity {
                    0 => (1, 1),
                    k => (n.pow(k as u32 - 1), n),
                };
                if rows.len() != want_rows {
                    let at = rows.last().map_or(line, |r| r.no);
                    return Err(err(
                        at,
                        1,
                        format!("operation `{sym}` needs {want_rows} rows, found {}", rows.len()),
                    ));
                }
                let mut table = Vec::with_capacity(want_rows * width);
                for r in &rows {
                    let toks = tokens(r.text);
                    if toks.len() != width {
                        let col = toks.get(width).map_or(r.text.len() + 1, |t| t.0);
                        return Err(err(
                            r.no,
                            col,
                            format!("row needs {width} entries, found {}", toks.len()),
                        ));
                    }
                    for (col, t) in toks {
                        table.push(label_at(r.no, col, t)?);
                    }
                }
                operations.push(OperationSpec {
                    name: sym,
                    arity,
                    table,
                });
            }
            DocumentBody::Algebra { operations }
        }
        "commutator-structure" => {
            if let Some((line, ..)) = ops.first() {
                return Err(err(*line, 1, "operations belong to algebra documents"));
            }
            let mut pairs = Vec::new();
            for r in &leq {
                let toks = tokens(r.text);
                // a < b < c ...
                if toks.len() < 3 || toks.len().is_multiple_of(2) {
                    return Err(err(r.no, 1, "expected `a < b`"));
                }
                for w in toks.iter().skip(1).step_by(2) {
                    if w.1 != "<" {
                        return Err(err(r.no, w.0, format!("expected `<`, found `{}`", w.1)));
                    }
                }
                let labs: Vec<(usize, &str)> = toks.iter().step_by(2).copied().collect();
                for pair in labs.windows(2) {
                    pairs.push((
                        label_at(r.no, pair[0].0, pair[0].1)?,
                        label_at(r.no, pair[1].0, pair[1].1)?,
                    ));
                }
            }
            let Some(comm_line) = seen_comm else {
                return Err(err(kind_line, 1, "missing `comm:` section"));
            };
            if comm.len() != n {
                return Err(err(
                    comm.last().map_or(comm_line, |r| r.no),
                    1,
                    format!("`comm:` needs {n} rows, found {}", comm.len()),
                ));
            }
            let mut rows = Vec::new();
            for r in &comm {
                let toks = tokens(r.text);
                if toks.len() != n {
                    return Err(err(r.no, 1, format!("row needs {n} entries, found {}", toks.len())));
                }
                rows.push(
                    toks.into_iter()
                        .map(|(c, t)| label_at(r.no, c, t))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            let principal = match principal {
                Some((line, toks)) => Some(
                    toks.into_iter()
                        .map(|(c, t)| label_at(line, c, &t))
                        .collect::<Result<Vec<_>>>()?,
                ),
                None => None,
            };
            DocumentBody::CommutatorStructure {
                leq: pairs,
                comm: rows,
                principal,
            }
        }
        other => {
            return Err(err(kind_line, 7, format!("unknown kind `{other}`")));
        }
    };
    let doc = AlgebraDocument {
        name,
        elements,
        modular_variety,
        body,
    };
    // semantic validation: lattice axioms and table laws
    if let DocumentBody::CommutatorStructure { .. } = doc.body {
        doc.to_structure().map_err(|e| err(seen_comm.unwrap_or(kind_line), 1, e.to_string()))?;
    }
    Ok(doc)
}

/// Writes a document in the format read by [`parse`].
pub fn write(doc: &AlgebraDocument) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "kind: {}", doc.kind());
    let _ = writeln!(s, "name: {}", doc.name);
    let _ = writeln!(s, "elements: {}", doc.elements.join(" "));
    if doc.modular_variety {
        let _ = writeln!(s, "variety: congruence-modular");
    }
    let n = doc.elements.len();
    match &doc.body {
        DocumentBody::Algebra { operations } => {
            for op in operations {
                let _ = writeln!(s, "\nop {}/{}:", op.name, op.arity);
                let width = if op.arity == 0 { 1 } else { n };
                for row in op.table.chunks(width) {
                    let _ = writeln!(s, "{}", row.join(" "));
                }
            }
        }
        DocumentBody::CommutatorStructure {
            leq,
            comm,
            principal,
        } => {
            if let Some(p) = principal {
                let _ = writeln!(s, "principal: {}", p.join(" "));
            }
            if !leq.is_empty() {
                let _ = writeln!(s, "\nleq:");
                for (a, b) in leq {
                    let _ = writeln!(s, "{a} < {b}");
                }
            }
            let _ = writeln!(s, "\ncomm:");
            for row in comm {
                let _ = writeln!(s, "{}", row.join(" "));
            }
        }
    }
    s
}
