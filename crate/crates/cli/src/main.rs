//! Command-line front end: parse matrices and tuples, run the library
//! operations, and drive randomized verification campaigns.
//!
//! One subcommand per invocation; the result is a single JSON document on
//! standard output, diagnostics go to standard error. Exit codes: 0
//! success, 1 property failure (roundtrip), 2 parse/usage error, 3
//! semantic precondition failure, 4 internal self-check failure.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand};
use serde::Serialize;

use gamma3::corpus::{compose_gamma3_word, gamma3_word, seeded_rng, ElementaryMove};
use gamma3::decompose::{
    classify_cell, decompose_left, decompose_right, CellTag, LeftDecomposition,
    RightDecomposition,
};
use gamma3::eisenstein::EisensteinInt;
use gamma3::gamma::{
    in_gamma3, in_gamma_inf3, invariants, same_orbit, Condition, InvariantTuple,
};
use gamma3::matrix::{Mat2, Mat3};
use gamma3::represent::{case_of, representative, CaseTag};
use gamma3::Error;

#[derive(Parser)]
#[command(
    name = "gamma3",
    about = "Invariants, decompositions, and orbit representatives for the level-3 congruence group over the Eisenstein integers",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the six-element invariant tuple of a group member.
    Invariants {
        /// JSON file holding a 3x3 matrix of ring elements
        matrix: PathBuf,
    },
    /// Factor a determinant-1 matrix into canonical pieces.
    Decompose {
        /// Which side the congruence factor lands on
        #[arg(long, value_parser = ["left", "right"], default_value = "left")]
        side: String,
        /// JSON file holding a 3x3 matrix of ring elements
        matrix: PathBuf,
    },
    /// Build a group member realizing a prescribed invariant tuple.
    Represent {
        /// The six tuple entries A1 B1 C1 A2 B2 C2
        #[arg(long, num_args = 6, allow_hyphen_values = true,
              value_names = ["A1", "B1", "C1", "A2", "B2", "C2"])]
        tuple: Vec<String>,
    },
    /// Report every membership and condition predicate for an input.
    #[command(group(ArgGroup::new("input").required(true).args(["matrix", "tuple"])))]
    Verify {
        /// JSON file holding a 3x3 matrix of ring elements
        matrix: Option<PathBuf>,
        /// The six tuple entries A1 B1 C1 A2 B2 C2
        #[arg(long, num_args = 6, allow_hyphen_values = true,
              value_names = ["A1", "B1", "C1", "A2", "B2", "C2"])]
        tuple: Option<Vec<String>>,
    },
    /// Run seeded random members through every library property.
    Roundtrip {
        /// How many random members to test
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// PRNG seed; identical seeds reproduce identical reports
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum length of the generator words
        #[arg(long, default_value_t = 12)]
        length: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Invariants { matrix } => cmd_invariants(&matrix),
        Command::Decompose { side, matrix } => cmd_decompose(&side, &matrix),
        Command::Represent { tuple } => cmd_represent(&tuple),
        Command::Verify { matrix, tuple } => cmd_verify(matrix.as_deref(), tuple.as_deref()),
        Command::Roundtrip {
            samples,
            seed,
            length,
        } => return cmd_roundtrip(samples, seed, length),
    };
    match outcome {
        Ok(json) => {
            println!("{json}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_) => 2,
        Error::Internal(_) => 4,
        _ => 3,
    }
}

fn read_matrix(path: &std::path::Path) -> Result<Mat3, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("invalid matrix in {}: {e}", path.display())))
}

fn parse_tuple(entries: &[String]) -> Result<InvariantTuple, Error> {
    let parsed: Result<Vec<EisensteinInt>, Error> =
        entries.iter().map(|s| EisensteinInt::from_str(s)).collect();
    let parsed = parsed?;
    let [a1, b1, c1, a2, b2, c2]: [EisensteinInt; 6] = parsed
        .try_into()
        .map_err(|_| Error::Parse("expected exactly six tuple entries".into()))?;
    Ok(InvariantTuple::new(a1, b1, c1, a2, b2, c2))
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serialization cannot fail")
}

// ---- invariants ----

#[derive(Serialize)]
struct InvariantsOut {
    invariants: InvariantTuple,
    satisfied: Vec<String>,
}

fn cmd_invariants(path: &std::path::Path) -> Result<String, Error> {
    let m = read_matrix(path)?;
    let t = invariants(&m)?;
    let violated = t.check_conditions();
    let satisfied = [Condition::I1, Condition::I2, Condition::I3, Condition::I4]
        .iter()
        .filter(|c| !violated.contains(c))
        .map(|c| c.to_string())
        .collect();
    Ok(pretty(&InvariantsOut {
        invariants: t,
        satisfied,
    }))
}

// ---- decompose ----

#[derive(Serialize)]
struct LeftOut {
    cell: CellTag,
    #[serde(rename = "C")]
    c: Mat3,
    u: Mat3,
    d: Mat3,
    y3: Mat2,
    y2: Mat2,
    y1: Mat2,
    recomposes: bool,
}

#[derive(Serialize)]
struct RightOut {
    cell: CellTag,
    y1: Mat2,
    y2: Mat2,
    y3: Mat2,
    d: Mat3,
    u: Mat3,
    #[serde(rename = "C")]
    c: Mat3,
    recomposes: bool,
}

fn left_out(dec: &LeftDecomposition, recomposes: bool) -> LeftOut {
    LeftOut {
        cell: dec.cell,
        c: dec.c.clone(),
        u: dec.u.to_mat3(),
        d: dec.d.to_mat3(),
        y3: dec.y3.matrix().clone(),
        y2: dec.y2.matrix().clone(),
        y1: dec.y1.matrix().clone(),
        recomposes,
    }
}

fn cmd_decompose(side: &str, path: &std::path::Path) -> Result<String, Error> {
    let m = read_matrix(path)?;
    match side {
        "right" => {
            let dec = decompose_right(&m)?;
            let recomposes = dec.recompose() == m;
            if !recomposes {
                return Err(Error::Internal("decomposition failed its recomposition self-check"));
            }
            Ok(pretty(&RightOut {
                cell: dec.cell,
                y1: dec.y1.matrix().clone(),
                y2: dec.y2.matrix().clone(),
                y3: dec.y3.matrix().clone(),
                d: dec.d.to_mat3(),
                u: dec.u.to_mat3(),
                c: dec.c.clone(),
                recomposes,
            }))
        }
        _ => {
            let dec = decompose_left(&m)?;
            let recomposes = dec.recompose() == m;
            if !recomposes {
                return Err(Error::Internal("decomposition failed its recomposition self-check"));
            }
            Ok(pretty(&left_out(&dec, recomposes)))
        }
    }
}

// ---- represent ----

fn cmd_represent(entries: &[String]) -> Result<String, Error> {
    let t = parse_tuple(entries)?;
    let rep = representative(&t)?;
    // self-check before printing
    if invariants(&rep.matrix)? != t {
        return Err(Error::Internal("representative failed its invariants self-check"));
    }
    Ok(pretty(&rep))
}

// ---- verify ----

#[derive(Serialize)]
struct VerifyMatrixOut {
    kind: &'static str,
    det_is_one: bool,
    in_gamma3: bool,
    in_gamma_inf3: bool,
    cell: Option<CellTag>,
}

#[derive(Serialize)]
struct ConditionsOut {
    #[serde(rename = "I1")]
    i1: bool,
    #[serde(rename = "I2")]
    i2: bool,
    #[serde(rename = "I3")]
    i3: bool,
    #[serde(rename = "I4")]
    i4: bool,
}

#[derive(Serialize)]
struct VerifyTupleOut {
    kind: &'static str,
    conditions: ConditionsOut,
    valid: bool,
    case: Option<CaseTag>,
}

fn cmd_verify(
    matrix: Option<&std::path::Path>,
    tuple: Option<&[String]>,
) -> Result<String, Error> {
    if let Some(path) = matrix {
        let m = read_matrix(path)?;
        let det_is_one = m.det().is_one();
        Ok(pretty(&VerifyMatrixOut {
            kind: "matrix",
            det_is_one,
            in_gamma3: in_gamma3(&m),
            in_gamma_inf3: in_gamma_inf3(&m),
            cell: classify_cell(&m).ok(),
        }))
    } else {
        let t = parse_tuple(tuple.expect("clap enforces one input"))?;
        let violated = t.check_conditions();
        let holds = |c: Condition| !violated.contains(&c);
        let valid = violated.is_empty();
        Ok(pretty(&VerifyTupleOut {
            kind: "tuple",
            conditions: ConditionsOut {
                i1: holds(Condition::I1),
                i2: holds(Condition::I2),
                i3: holds(Condition::I3),
                i4: holds(Condition::I4),
            },
            valid,
            case: case_of(&t).ok(),
        }))
    }
}

// ---- roundtrip ----

#[derive(Serialize, Default)]
struct Stat {
    pass: u64,
    fail: u64,
}

#[derive(Serialize, Default)]
struct Properties {
    invariants_conditions: Stat,
    representative_invariants: Stat,
    representative_orbit: Stat,
    decompose_right_roundtrip: Stat,
    decompose_left_roundtrip: Stat,
    cell_consistency: Stat,
}

#[derive(Serialize)]
struct MoveOut {
    row: usize,
    col: usize,
    scale: EisensteinInt,
}

#[derive(Serialize)]
struct Counterexample {
    sample_index: u64,
    word: Vec<MoveOut>,
    matrix: Mat3,
    property: &'static str,
}

#[derive(Serialize)]
struct Report {
    samples: u64,
    seed: u64,
    max_word_length: usize,
    properties: Properties,
    all_passed: bool,
    counterexample: Option<Counterexample>,
}

fn cmd_roundtrip(samples: u64, seed: u64, length: usize) -> ExitCode {
    let mut rng = seeded_rng(seed);
    let mut props = Properties::default();
    let mut counterexample: Option<Counterexample> = None;

    for index in 0..samples {
        let word = gamma3_word(&mut rng, length);
        let m = compose_gamma3_word(&word);
        let results = evaluate_sample(&m);
        let stats = [
            (&mut props.invariants_conditions, results[0], "invariants_conditions"),
            (&mut props.representative_invariants, results[1], "representative_invariants"),
            (&mut props.representative_orbit, results[2], "representative_orbit"),
            (&mut props.decompose_right_roundtrip, results[3], "decompose_right_roundtrip"),
            (&mut props.decompose_left_roundtrip, results[4], "decompose_left_roundtrip"),
            (&mut props.cell_consistency, results[5], "cell_consistency"),
        ];
        for (stat, ok, name) in stats {
            if ok {
                stat.pass += 1;
            } else {
                stat.fail += 1;
                if counterexample.is_none() {
                    counterexample = Some(Counterexample {
                        sample_index: index,
                        word: word
                            .iter()
                            .map(|mv: &ElementaryMove| MoveOut {
                                row: mv.row,
                                col: mv.col,
                                scale: mv.scale.clone(),
                            })
                            .collect(),
                        matrix: m.clone(),
                        property: name,
                    });
                }
            }
        }
    }

    let all_passed = counterexample.is_none();
    let report = Report {
        samples,
        seed,
        max_word_length: length,
        properties: props,
        all_passed,
        counterexample,
    };
    println!("{}", pretty(&report));
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// The six per-sample property outcomes, in report order.
fn evaluate_sample(m: &Mat3) -> [bool; 6] {
    let tuple = invariants(m).ok();
    let conditions_ok = tuple
        .as_ref()
        .map(|t| t.check_conditions().is_empty())
        .unwrap_or(false);

    let rep = tuple.as_ref().and_then(|t| representative(t).ok());
    let rep_invariants_ok = match (&tuple, &rep) {
        (Some(t), Some(r)) => invariants(&r.matrix).map(|ti| ti == *t).unwrap_or(false),
        _ => false,
    };
    let rep_orbit_ok = rep
        .as_ref()
        .map(|r| same_orbit(&r.matrix, m).unwrap_or(false))
        .unwrap_or(false);

    let right: Option<RightDecomposition> = decompose_right(m).ok();
    let right_ok = right.as_ref().map(|d| &d.recompose() == m).unwrap_or(false);
    let left: Option<LeftDecomposition> = decompose_left(m).ok();
    let left_ok = left.as_ref().map(|d| &d.recompose() == m).unwrap_or(false);

    let cell_ok = match (&right, &left) {
        (Some(r), Some(l)) => {
            r.shape_matches_cell()
                && l.shape_matches_cell()
                && classify_cell(m).map(|c| c == r.cell).unwrap_or(false)
                && classify_cell(&m.upsilon1()).map(|c| c == l.cell).unwrap_or(false)
        }
        _ => false,
    };

    [
        conditions_ok,
        rep_invariants_ok,
        rep_orbit_ok,
        right_ok,
        left_ok,
        cell_ok,
    ]
}
