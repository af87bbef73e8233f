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

//! `retic`: congruences, commutators, spectra and reticulations of finite
//! algebras from the command line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use retic_core::analysis::{LatticeSummary, ReticulationSummary};
use retic_core::emit::{emit_dot, emit_json};
use retic_core::format::parse;
use retic_core::reticulation::build_reticulation;
use retic_core::spectrum::spectrum_report;
use retic_core::verify::battery;
use retic_core::{analyze, classify, fixtures, CommutatorStructure, Error, Status};

const USAGE: u8 = 1;
const PARSE: u8 = 2;
const REFUSED: u8 = 3;
const VERIFY_FAILED: u8 = 4;

#[derive(Parser)]
#[command(name = "retic", version, about = "Commutators, prime spectra and reticulations of finite algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis report.
    Analyze(Common),
    /// Congruence lattice and commutator table.
    Commutators(Common),
    /// Prime and maximal congruences, radicals, Boolean center.
    Spectrum(Common),
    /// The reticulation, tagged against small named lattices.
    Reticulate(Common),
    /// Run the invariant battery; exits 4 if an unconditional check fails.
    Verify(Common),
    /// Hasse diagrams of Con(A) and L(A) in DOT.
    Dot(Common),
}

#[derive(Args)]
struct Common {
    /// A document path or a built-in fixture name.
    input: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the DOT diagrams to this path.
    #[arg(long, value_name = "PATH")]
    dot_out: Option<PathBuf>,
    /// Cap on lattice size for ideal enumeration (overrides RETIC_MAX_LATTICE).
    #[arg(long, value_name = "N")]
    max_lattice: Option<usize>,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Hypothesis(_) | Error::CapExceeded { .. } => REFUSED,
            _ => VERIFY_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn load(input: &str) -> Result<CommutatorStructure, Failure> {
    let path = PathBuf::from(input);
    let text = if path.is_file() {
        std::fs::read_to_string(&path).map_err(|e| Failure {
            code: USAGE,
            message: format!("cannot read {input}: {e}"),
        })?
    } else if let Some(text) = fixtures::source(input) {
        text.to_string()
    } else {
        return Err(Failure {
            code: USAGE,
            message: format!(
                "{input} is neither a file nor a fixture (fixtures: {})",
                fixtures::names().join(", ")
            ),
        });
    };
    let parsed = parse(&text).and_then(|doc| doc.to_structure());
    parsed.map_err(|e| Failure {
        code: PARSE,
        message: format!("{input}: {e}"),
    })
}

/// `L2^2` becomes `L2×L2`, `L2+L2^2` becomes `L2⊕L2×L2`.
fn pretty(name: &str) -> String {
    name.split('+')
        .map(|part| match part.split_once('^') {
            Some((base, k)) => vec![base; k.parse().unwrap_or(1)].join("×"),
            None => part.to_string(),
        })
        .collect::<Vec<_>>()
        .join("⊕")
}

fn tag(subject: &str, l: &LatticeSummary) -> String {
    if l.names.is_empty() {
        let covers: Vec<String> = l.covers.iter().map(|(a, b)| format!("{a} < {b}")).collect();
        format!("{subject}: {} elements, covers {}", l.size, covers.join(", "))
    } else {
        let names: Vec<String> = l.names.iter().map(|n| pretty(n)).collect();
        format!("{subject} ≅ {}", names.join(" ≅ "))
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn set(xs: &[String]) -> String {
    format!("{{{}}}", xs.join(", "))
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    Ok(emit_json(v)? + "\n")
}

fn dot_text(cs: &CommutatorStructure) -> Result<String, Failure> {
    let mut out = emit_dot(&format!("Con({})", cs.name()), cs.lattice());
    match build_reticulation(cs) {
        Ok(r) => out += &emit_dot(&format!("L({})", cs.name()), r.lattice()),
        Err(Error::Hypothesis(why)) => eprintln!("L({}) not drawn: {why}", cs.name()),
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

fn commutators(cs: &CommutatorStructure, as_json: bool) -> Result<String, Failure> {
    let m = cs.size();
    let rows: Vec<Vec<String>> = (0..m)
        .map(|a| (0..m).map(|b| cs.label(cs.comm(a, b)).to_string()).collect())
        .collect();
    if as_json {
        #[derive(serde::Serialize)]
        struct Table<'a> {
            congruences: LatticeSummary,
            commutators: &'a [Vec<String>],
            flags: retic_core::LawFlags,
            classification: retic_core::commutator::Classification,
        }
        return json(&Table {
            congruences: LatticeSummary::of(cs.lattice()),
            commutators: &rows,
            flags: cs.flags(),
            classification: classify(cs),
        });
    }
    let labels: Vec<&str> = (0..m).map(|a| cs.label(a)).collect();
    let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1);
    let mut out = format!("Con({}): {} congruences\n", cs.name(), m);
    for (a, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:<width$}")).collect();
        writeln!(out, "[{:<width$}, -] = {}", labels[a], cells.join(" | ").trim_end()).unwrap();
    }
    let f = cs.flags();
    writeln!(
        out,
        "commutative {}, join-distributive {}, equals meet {}, associative {}, [a,nabla] = a {}",
        yes(f.commutative),
        yes(f.join_distributive),
        yes(f.equals_meet),
        yes(f.associative),
        yes(f.nabla_neutral)
    )
    .unwrap();
    let k = classify(cs);
    writeln!(out, "abelian {}, solvable {}, nilpotent {}", yes(k.abelian), yes(k.solvable), yes(k.nilpotent)).unwrap();
    Ok(out)
}

fn spectrum(cs: &CommutatorStructure, as_json: bool) -> Result<String, Failure> {
    let s = spectrum_report(cs)?;
    if as_json {
        return json(&s);
    }
    let mut out = format!("Spec({}) = {}\nMax({}) = {}\n", cs.name(), set(&s.spec), cs.name(), set(&s.max));
    for (t, r) in &s.radical_map {
        writeln!(out, "rho({t}) = {r}").unwrap();
    }
    writeln!(out, "semiprime: {}", yes(s.semiprime_algebra)).unwrap();
    writeln!(out, "Boolean center: {}", set(&s.boolean_center)).unwrap();
    let h = s.hyperarchimedean.map_or("unknown", yes);
    writeln!(out, "hyperarchimedean: {h}").unwrap();
    Ok(out)
}

fn reticulate(cs: &CommutatorStructure, as_json: bool) -> Result<String, Failure> {
    let report = analyze(cs)?;
    let Some(r) = report.reticulation else {
        return Err(Failure {
            code: REFUSED,
            message: format!("no reticulation: {}", report.refusal.unwrap_or_default()),
        });
    };
    if as_json {
        return json::<ReticulationSummary>(&r);
    }
    let mut out = tag(&format!("L({})", cs.name()), &r.lattice) + "\n";
    for c in &r.classes {
        writeln!(out, "  {}: {} (radical {})", c.label, set(&c.members), c.radical).unwrap();
    }
    Ok(out)
}

fn analyze_text(cs: &CommutatorStructure, as_json: bool) -> Result<String, Failure> {
    let a = analyze(cs)?;
    if as_json {
        return json(&a);
    }
    let mut out = format!("{} ({}), modular variety declared: {}\n", a.name, a.source, yes(a.modular_variety));
    out += &(tag(&format!("Con({})", a.name), &a.congruences) + "\n");
    out += &commutators(cs, false)?;
    out += &spectrum(cs, false)?;
    match (&a.reticulation, &a.refusal) {
        (Some(r), _) => out += &(tag(&format!("L({})", a.name), &r.lattice) + "\n"),
        (None, Some(why)) => writeln!(out, "no reticulation: {why}").unwrap(),
        (None, None) => {}
    }
    if !a.omega_undecided.is_empty() {
        writeln!(out, "(A,Omega): {} cells without k <= 6", a.omega_undecided.len()).unwrap();
    }
    out += &summary(&a.battery);
    Ok(out)
}

fn summary(b: &retic_core::verify::Battery) -> String {
    format!(
        "battery: {} pass, {} fail, {} conditional, {} skipped\n",
        b.count(|s| matches!(s, Status::Pass)),
        b.count(|s| matches!(s, Status::Fail)),
        b.count(|s| matches!(s, Status::Conditional { .. })),
        b.count(|s| matches!(s, Status::Skipped { .. })),
    )
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let (Command::Analyze(c)
    | Command::Commutators(c)
    | Command::Spectrum(c)
    | Command::Reticulate(c)
    | Command::Verify(c)
    | Command::Dot(c)) = &cli.command;
    if let Some(cap) = c.max_lattice {
        // Set before any worker thread starts.
        std::env::set_var("RETIC_MAX_LATTICE", cap.to_string());
    }
    let cs = load(&c.input)?;
    let mut code = 0;
    let out = match &cli.command {
        Command::Analyze(_) => analyze_text(&cs, c.json)?,
        Command::Commutators(_) => commutators(&cs, c.json)?,
        Command::Spectrum(_) => spectrum(&cs, c.json)?,
        Command::Reticulate(_) => reticulate(&cs, c.json)?,
        Command::Verify(_) => {
            let b = battery(&cs)?;
            if !b.passed() {
                code = VERIFY_FAILED;
            }
            if c.json {
                json(&b)?
            } else {
                let mut out = String::new();
                for r in &b.reports {
                    out += &r.to_string();
                }
                out + &summary(&b)
            }
        }
        Command::Dot(_) => dot_text(&cs)?,
    };
    if let Some(path) = &c.dot_out {
        std::fs::write(path, dot_text(&cs)?).map_err(|e| Failure {
            code: USAGE,
            message: format!("cannot write {}: {e}", path.display()),
        })?;
    }
    Ok((out, code))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("retic: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
