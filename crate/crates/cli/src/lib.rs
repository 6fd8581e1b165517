//! The `csl` command line: every core operation behind a subcommand that reads
//! JSON and writes a single-line JSON `CommandResult`.

pub mod codec;

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use csl_core::verify::{run_suites, Suite, DEFAULT_SEED};
use csl_core::{
    class_mul, class_order, clear_denominators, enumerate_soc_z2, eta_checked,
    eta_of_direction, find_split_prime, gauss_factor, gauss_gcd, gauss_norm, hnf,
    index_of_sublattice, is_commensurate, is_in_kernel, lattice_intersection,
    lattice_intersection_quad, quad_arith, rat_inverse, snf, soc_factorize, soc_matrix,
    sos_decompose, sos_square_to_soc, Error, QuadExt, QuadOp, SimilarityMap, SocFactorization,
};
use serde_json::{json, Value};

use crate::codec::*;

#[derive(Debug, Parser)]
#[command(name = "csl", version, about = "Exact coincidence and similarity rotations of lattices")]
pub struct Cli {
    /// Emit JSON (the only output format; accepted for explicitness)
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for the verification suites, in hex
    #[arg(long, global = true, value_parser = parse_seed)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Default)]
pub struct Input {
    /// Input file; standard input when omitted
    pub path: Option<PathBuf>,

    /// Input text given directly on the command line
    #[arg(long, conflicts_with = "path", allow_hyphen_values = true)]
    pub inline: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lattices given by Gram matrices
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Similarity maps in lattice coordinates
    #[command(subcommand)]
    Map(MapCmd),
    /// Coincidence rotations of the square lattice
    #[command(subcommand)]
    Soc(SocCmd),
    /// Similarity rotations of the square lattice
    #[command(subcommand)]
    Sos(SosCmd),
    /// Integer and rational matrices, sublattices
    #[command(subcommand)]
    Matrix(MatrixCmd),
    /// Arithmetic in a real quadratic field
    #[command(subcommand)]
    Quad(QuadCmd),
    /// Gaussian integers
    #[command(subcommand)]
    Gauss(GaussCmd),
    /// Square classes of multipliers
    #[command(subcommand)]
    Eta(EtaCmd),
    /// Run a seeded property suite
    Verify {
        /// commensurate, scal, eta, square_closure, z2 or all
        suite: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum LatticeCmd {
    /// Check a Gram matrix: `{"dim": d, "gram": [[...]]}`
    Validate(Input),
}

#[derive(Debug, Subcommand)]
pub enum MapCmd {
    /// Validate `{"lattice": ..., "T": [[...]]}` and report m, η, Σ
    Check(Input),
    /// Product `T1·T2` of `{"lattice": ..., "T1": ..., "T2": ...}`
    Compose(Input),
    /// Inverse map
    Invert(Input),
    /// Divide out the scale when m is a rational square
    Normalize(Input),
}

#[derive(Debug, Subcommand)]
pub enum SocCmd {
    /// Factor a rotation `(a+bi)/c` of modulus one
    Factorize(Input),
    /// Matrix and indices of a rotation `(a+bi)/c`
    Matrix(Input),
    /// Rotation from `{"unit_exp": k, "factors": {...}}`
    Reconstruct(Input),
    /// All rotations with Σ up to a bound
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_index: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SosCmd {
    /// Direction of a nonzero Gaussian integer
    Decompose(Input),
    /// Coincidence rotation obtained by squaring the direction
    Square(Input),
}

#[derive(Debug, Subcommand)]
pub enum MatrixCmd {
    /// Hermite normal form `{"matrix": [[...]], "allow_rank_deficient": false}`
    Hnf(Input),
    /// Smith normal form of a square integer matrix
    Snf(Input),
    /// Exact inverse of a rational matrix
    Inverse(Input),
    /// Least t with t·M integral
    ClearDenominators(Input),
    /// Intersection of `{"b1": ..., "b2": ...}` (entries may use sqrt(n))
    Intersect(Input),
    /// Index of `{"c": ...}` in `{"b": ...}`
    Index(Input),
    /// Commensurateness of `{"b1": ..., "b2": ...}` over Q(sqrt(n))
    Commensurate(Input),
}

#[derive(Debug, Subcommand)]
pub enum QuadCmd {
    /// `{"x": "a+b*sqrt(n)", "y": ..., "op": "+"}`
    Arith(Input),
}

#[derive(Debug, Subcommand)]
pub enum GaussCmd {
    /// Norm of `a+bi`
    Norm(Input),
    /// Greatest common divisor of `{"z": ..., "w": ...}`
    Gcd(Input),
    /// Prime factorization of a nonzero Gaussian integer
    Factor(Input),
    /// Canonical ω with N(ω) = p for a prime p ≡ 1 mod 4
    SplitPrime(Input),
}

#[derive(Debug, Subcommand)]
pub enum EtaCmd {
    /// Product of `{"c1": .., "c2": ..}`
    Mul(Input),
    /// Order of `{"class": c}`, optionally checked against `"dim"`
    Order(Input),
}

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let t = s.trim();
    let digits = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")).unwrap_or(t);
    u64::from_str_radix(digits, 16).map_err(|e| format!("invalid hex seed {s:?}: {e}"))
}

/// Outcome of one command: a payload, or an error code with a message.
#[derive(Debug, Clone, PartialEq)]
pub enum CommandResult {
    Ok(Value),
    Error { code: String, message: String },
}

/// Exit status for each error code; 0 is reserved for success.
pub const EXIT_CODES: &[(&str, i32)] = &[
    ("UsageError", 2),
    ("ParseError", 3),
    ("IoError", 4),
    ("SuiteFailed", 5),
    ("RankDeficient", 10),
    ("Singular", 11),
    ("NotCommensurate", 12),
    ("NotSublattice", 13),
    ("DivisionByZero", 14),
    ("MixedField", 15),
    ("InvalidRadicand", 16),
    ("DimensionMismatch", 17),
    ("NotSymmetric", 18),
    ("NotPositiveDefinite", 19),
    ("NotSimilarity", 20),
    ("OrientationReversing", 21),
    ("LatticeMismatch", 22),
    ("NotCoincidence", 23),
    ("BothZero", 24),
    ("NotSplitPrime", 25),
    ("ZeroInput", 26),
    ("NotUnitModulus", 27),
    ("DimensionViolation", 28),
    ("TooLarge", 29),
];

impl CommandResult {
    fn error(code: &str, message: impl Into<String>) -> Self {
        CommandResult::Error { code: code.into(), message: message.into() }
    }

    pub fn is_ok(&self) -> bool {
        matches!(self, CommandResult::Ok(_))
    }

    pub fn to_json(&self) -> Value {
        match self {
            CommandResult::Ok(payload) => json!({ "status": "ok", "payload": payload }),
            CommandResult::Error { code, message } => {
                json!({ "status": "error", "error_code": code, "message": message })
            }
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CommandResult::Ok(_) => 0,
            CommandResult::Error { code, .. } => EXIT_CODES
                .iter()
                .find(|(c, _)| c == code)
                .map_or(1, |&(_, e)| e),
        }
    }
}

impl From<Error> for CommandResult {
    fn from(e: Error) -> Self {
        CommandResult::error(e.code(), e.to_string())
    }
}

/// One row of the command table: a command path and the core operations it
/// exercises, with an input that makes it succeed.
pub struct CommandSpec {
    pub path: &'static [&'static str],
    pub ops: &'static [&'static str],
    pub sample: Option<&'static str>,
}

pub const COMMAND_TABLE: &[CommandSpec] = &[
    CommandSpec {
        path: &["lattice", "validate"],
        ops: &["make_lattice", "cmd_lattice_validate"],
        sample: Some(r#"{"dim": 2, "gram": [["2","1"],["1","2"]]}"#),
    },
    CommandSpec {
        path: &["map", "check"],
        ops: &[
            "validate_similarity",
            "coincidence_index",
            "eta_of",
            "is_in_kernel",
            "cmd_simmap_check",
        ],
        sample: Some(r#"{"lattice": "Z2", "T": [["1","-1"],["1","1"]]}"#),
    },
    CommandSpec {
        path: &["map", "compose"],
        ops: &["compose"],
        sample: Some(r#"{"lattice": "Z2", "T1": [[1,-1],[1,1]], "T2": [[1,-1],[1,1]]}"#),
    },
    CommandSpec {
        path: &["map", "invert"],
        ops: &["invert"],
        sample: Some(r#"{"lattice": "hexagonal", "T": [[0,-1],[1,1]]}"#),
    },
    CommandSpec {
        path: &["map", "normalize"],
        ops: &["normalize_to_coincidence"],
        sample: Some(r#"{"lattice": "Z2", "T": [[0,-2],[2,0]]}"#),
    },
    CommandSpec {
        path: &["soc", "factorize"],
        ops: &["soc_factorize", "coincidence_index_z2", "cmd_soc_factorize"],
        sample: Some("(3+4i)/5"),
    },
    CommandSpec { path: &["soc", "matrix"], ops: &["soc_matrix"], sample: Some("(3+4i)/5") },
    CommandSpec {
        path: &["soc", "reconstruct"],
        ops: &[],
        sample: Some(r#"{"unit_exp": 1, "factors": {"5": 1, "13": -1}}"#),
    },
    CommandSpec {
        path: &["soc", "enumerate", "--max-index", "5"],
        ops: &["enumerate_soc_z2", "cmd_soc_enumerate"],
        sample: None,
    },
    CommandSpec {
        path: &["sos", "decompose"],
        ops: &["sos_decompose", "eta_of_direction", "cmd_sos_decompose"],
        sample: Some("1+i"),
    },
    CommandSpec { path: &["sos", "square"], ops: &["sos_square_to_soc"], sample: Some("2+i") },
    CommandSpec {
        path: &["matrix", "hnf"],
        ops: &["hnf"],
        sample: Some(r#"{"matrix": [[2,4],[6,8]]}"#),
    },
    CommandSpec { path: &["matrix", "snf"], ops: &["snf"], sample: Some("[[2,4],[6,8]]") },
    CommandSpec {
        path: &["matrix", "inverse"],
        ops: &["rat_inverse"],
        sample: Some(r#"[["1/2","1"],["0","3"]]"#),
    },
    CommandSpec {
        path: &["matrix", "clear-denominators"],
        ops: &["clear_denominators"],
        sample: Some(r#"[["1/2","1/3"],["0","1"]]"#),
    },
    CommandSpec {
        path: &["matrix", "intersect"],
        ops: &["lattice_intersection"],
        sample: Some(r#"{"b1": [[1,0],[0,1]], "b2": [["3/5","-4/5"],["4/5","3/5"]]}"#),
    },
    CommandSpec {
        path: &["matrix", "index"],
        ops: &["index_of_sublattice"],
        sample: Some(r#"{"b": [[1,0],[0,1]], "c": [[3,-4],[4,3]]}"#),
    },
    CommandSpec {
        path: &["matrix", "commensurate"],
        ops: &["is_commensurate"],
        sample: Some(r#"{"b1": [[1,0],[0,1]], "b2": [["sqrt(2)","0"],["0","sqrt(2)"]]}"#),
    },
    CommandSpec {
        path: &["quad", "arith"],
        ops: &["quad_arith"],
        sample: Some(r#"{"x": "1+1*sqrt(2)", "y": "1-sqrt(2)", "op": "*"}"#),
    },
    CommandSpec { path: &["gauss", "norm"], ops: &["gauss_norm"], sample: Some("3+4i") },
    CommandSpec {
        path: &["gauss", "gcd"],
        ops: &["gauss_gcd"],
        sample: Some(r#"{"z": "5", "w": "2+i"}"#),
    },
    CommandSpec { path: &["gauss", "factor"], ops: &["gauss_factor"], sample: Some("-15+20i") },
    CommandSpec { path: &["gauss", "split-prime"], ops: &["find_split_prime"], sample: Some("17") },
    CommandSpec {
        path: &["eta", "mul"],
        ops: &["class_mul"],
        sample: Some(r#"{"c1": 6, "c2": 10}"#),
    },
    CommandSpec {
        path: &["eta", "order"],
        ops: &["class_order"],
        sample: Some(r#"{"class": 30, "dim": 2}"#),
    },
    CommandSpec { path: &["verify", "z2"], ops: &["cmd_verify"], sample: None },
];

fn read_input(input: &Input, stdin: &mut dyn Read) -> std::result::Result<Value, CommandResult> {
    let text = match (&input.inline, &input.path) {
        (Some(t), _) => t.clone(),
        (None, Some(p)) => fs::read_to_string(p)
            .map_err(|e| CommandResult::error("IoError", format!("{}: {e}", p.display())))?,
        (None, None) => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CommandResult::error("IoError", format!("stdin: {e}")))?;
            s
        }
    };
    Ok(read_value(&text))
}

type Outcome = csl_core::Result<Value>;

fn map_input(v: &Value, key: &[&str]) -> csl_core::Result<SimilarityMap> {
    let lat = lattice(field(v, &["lattice"])?)?;
    SimilarityMap::new(&lat, rat_matrix(field(v, key)?)?)
}

fn map_json(s: &SimilarityMap) -> Value {
    json!({ "T": rat_matrix_json(s.matrix()), "m": rational_json(s.multiplier()) })
}

fn lattice_validate(v: &Value) -> Outcome {
    let lat = lattice(v)?;
    Ok(json!({ "dim": lat.dim(), "gram": rat_matrix_json(lat.gram()) }))
}

fn map_check(v: &Value) -> Outcome {
    let s = map_input(v, &["T", "t"])?;
    let sigma = s.coincidence_index()?;
    let (eta, _) = eta_checked(&s)?;
    Ok(json!({
        "m": rational_json(s.multiplier()),
        "eta": uint_json(eta.squarefree_part()),
        "sigma": [int_json(&sigma.sigma1), int_json(&sigma.sigma2)],
        "in_soc": is_in_kernel(&s),
    }))
}

fn map_compose(v: &Value) -> Outcome {
    let a = map_input(v, &["T1", "t1"])?;
    let b = map_input(v, &["T2", "t2"])?;
    Ok(map_json(&csl_core::compose(&a, &b)?))
}

fn map_invert(v: &Value) -> Outcome {
    Ok(map_json(&csl_core::invert(&map_input(v, &["T", "t"])?)))
}

fn map_normalize(v: &Value) -> Outcome {
    let s = map_input(v, &["T", "t"])?;
    let c = csl_core::normalize_to_coincidence(&s)?;
    Ok(map_json(c.as_similarity()))
}

fn soc_factorize_cmd(v: &Value) -> Outcome {
    let q = gauss_rational(field_or_self(v, &["q"]))?;
    Ok(soc_json(&soc_factorize(&q)?))
}

fn soc_matrix_cmd(v: &Value) -> Outcome {
    let q = gauss_rational(field_or_self(v, &["q"]))?;
    let c = soc_matrix(&q)?;
    let f = soc_factorize(&q)?;
    Ok(json!({ "T": rat_matrix_json(c.matrix()), "sigma": int_json(&csl_core::coincidence_index_z2(&f)) }))
}

fn soc_reconstruct(v: &Value) -> Outcome {
    let unit = integer(field(v, &["unit_exp"])?)?;
    let unit = num_traits::ToPrimitive::to_i64(&unit).ok_or_else(|| Error::Parse("unit_exp".into()))?;
    let f = SocFactorization::new(unit, exponent_map(field(v, &["factors"])?)?)?;
    Ok(json!({ "q": f.reconstruct().to_string(), "sigma": int_json(&f.index()) }))
}

fn soc_enumerate(max_index: u64) -> Outcome {
    let elements: Vec<Value> = enumerate_soc_z2(max_index)
        .iter()
        .map(|f| {
            let q = f.reconstruct();
            let t = soc_matrix(&q).expect("enumerated rotations are coincidences");
            let mut e = soc_json(f);
            e["q"] = Value::String(q.to_string());
            e["matrix"] = rat_matrix_json(t.matrix());
            e
        })
        .collect();
    Ok(json!({ "max_index": max_index, "count": elements.len(), "elements": elements }))
}

fn sos_decompose_cmd(v: &Value) -> Outcome {
    let s = sos_decompose(&gauss(field_or_self(v, &["z"]))?)?;
    Ok(sos_json(&s, &eta_of_direction(&s)))
}

fn sos_square(v: &Value) -> Outcome {
    let s = sos_decompose(&gauss(field_or_self(v, &["z"]))?)?;
    Ok(soc_json(&sos_square_to_soc(&s)))
}

fn matrix_hnf(v: &Value) -> Outcome {
    let m = int_matrix(field_or_self(v, &["matrix"]))?;
    let allow = v.get("allow_rank_deficient").and_then(Value::as_bool).unwrap_or(false);
    let r = hnf(&m, allow)?;
    Ok(json!({ "H": int_matrix_json(&r.h), "U": int_matrix_json(&r.u) }))
}

fn matrix_snf(v: &Value) -> Outcome {
    let m = int_matrix(field_or_self(v, &["matrix"]))?;
    let r = snf(&m)?;
    let diag: Vec<Value> = r.diagonal().iter().map(int_json).collect();
    Ok(json!({
        "D": int_matrix_json(&r.d),
        "U": int_matrix_json(&r.u),
        "V": int_matrix_json(&r.v),
        "diagonal": diag,
    }))
}

fn matrix_inverse(v: &Value) -> Outcome {
    let m = rat_matrix(field_or_self(v, &["matrix"]))?;
    Ok(json!({ "inverse": rat_matrix_json(&rat_inverse(&m)?) }))
}

fn matrix_clear(v: &Value) -> Outcome {
    let m = rat_matrix(field_or_self(v, &["matrix"]))?;
    let (t, n) = clear_denominators(&m);
    Ok(json!({ "t": int_json(&t), "N": int_matrix_json(&n) }))
}

fn matrix_intersect(v: &Value) -> Outcome {
    let (b1, b2) = (field(v, &["b1"])?, field(v, &["b2"])?);
    if mentions_sqrt(&[b1, b2]) {
        let m = quad_matrices(&[b1, b2], 2)?;
        Ok(json!({ "basis": quad_matrix_json(&lattice_intersection_quad(&m[0], &m[1])?) }))
    } else {
        Ok(json!({ "basis": rat_matrix_json(&lattice_intersection(&rat_matrix(b1)?, &rat_matrix(b2)?)?) }))
    }
}

fn matrix_index(v: &Value) -> Outcome {
    let b = rat_matrix(field(v, &["b"])?)?;
    let c = rat_matrix(field(v, &["c"])?)?;
    Ok(json!({ "index": int_json(&index_of_sublattice(&b, &c)?) }))
}

fn matrix_commensurate(v: &Value) -> Outcome {
    let m = quad_matrices(&[field(v, &["b1"])?, field(v, &["b2"])?], 2)?;
    Ok(json!({ "commensurate": is_commensurate(&m[0], &m[1])? }))
}

fn quad_arith_cmd(v: &Value) -> Outcome {
    let text = |k| -> csl_core::Result<&str> {
        field(v, &[k])?.as_str().ok_or_else(|| Error::Parse(format!("{k} must be a string")))
    };
    let (xs, ys) = (text("x")?, text("y")?);
    // the field comes from whichever operand names it, else from "n"
    let n = match (xs.contains("sqrt"), ys.contains("sqrt"), v.get("n")) {
        (true, _, _) => QuadExt::parse(xs, None)?.radicand(),
        (false, true, _) => QuadExt::parse(ys, None)?.radicand(),
        (false, false, Some(n)) => u64_of(n)?,
        (false, false, None) => 2,
    };
    let x = QuadExt::parse(xs, Some(n))?;
    let y = QuadExt::parse(ys, Some(n))?;
    let op = QuadOp::parse(text("op")?)?;
    Ok(json!({ "result": quad_arith(&x, &y, op)?.to_string() }))
}

fn gauss_norm_cmd(v: &Value) -> Outcome {
    Ok(json!({ "norm": int_json(&gauss_norm(&gauss(field_or_self(v, &["z"]))?)) }))
}

fn gauss_gcd_cmd(v: &Value) -> Outcome {
    let g = gauss_gcd(&gauss(field(v, &["z"])?)?, &gauss(field(v, &["w"])?)?)?;
    Ok(json!({ "gcd": gauss_json(&g) }))
}

fn gauss_factor_cmd(v: &Value) -> Outcome {
    Ok(gauss_factorization_json(&gauss_factor(&gauss(field_or_self(v, &["z"]))?)?))
}

fn gauss_split_prime(v: &Value) -> Outcome {
    let p = u64_of(field_or_self(v, &["p"]))?;
    Ok(json!({ "omega": gauss_json(&find_split_prime(p)?) }))
}

fn eta_mul(v: &Value) -> Outcome {
    let c = class_mul(&eta_class(field(v, &["c1"])?)?, &eta_class(field(v, &["c2"])?)?);
    Ok(json!({ "class": uint_json(c.squarefree_part()) }))
}

fn eta_order(v: &Value) -> Outcome {
    let c = eta_class(v)?;
    let order = match v.get("dim") {
        Some(d) => c.order_in_dim(u64_of(d)? as usize)?,
        None => class_order(&c),
    };
    Ok(json!({ "class": uint_json(c.squarefree_part()), "order": order }))
}

fn verify(suite: &str, seed: u64) -> CommandResult {
    let Some(suites) = Suite::parse(suite) else {
        return CommandResult::error("ParseError", format!("unknown suite {suite:?}"));
    };
    let reports = run_suites(&suites, seed);
    if let Some(bad) = reports.iter().find(|r| !r.ok()) {
        let lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
        return CommandResult::error(
            "SuiteFailed",
            format!("suite {} failed with seed {seed:#x}: {}", bad.name, lines.join("; ")),
        );
    }
    let suites: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "passed": r.passed,
                "failed": r.failed,
                "first_counterexample": r.first_counterexample,
            })
        })
        .collect();
    CommandResult::Ok(json!({ "seed": format!("{seed:#x}"), "suites": suites }))
}

fn with_input(input: &Input, stdin: &mut dyn Read, f: fn(&Value) -> Outcome) -> CommandResult {
    match read_input(input, stdin) {
        Ok(v) => f(&v).map_or_else(CommandResult::from, CommandResult::Ok),
        Err(e) => e,
    }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> CommandResult {
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let (input, f): (&Input, fn(&Value) -> Outcome) = match &cli.command {
        Command::Lattice(LatticeCmd::Validate(i)) => (i, lattice_validate),
        Command::Map(MapCmd::Check(i)) => (i, map_check),
        Command::Map(MapCmd::Compose(i)) => (i, map_compose),
        Command::Map(MapCmd::Invert(i)) => (i, map_invert),
        Command::Map(MapCmd::Normalize(i)) => (i, map_normalize),
        Command::Soc(SocCmd::Factorize(i)) => (i, soc_factorize_cmd),
        Command::Soc(SocCmd::Matrix(i)) => (i, soc_matrix_cmd),
        Command::Soc(SocCmd::Reconstruct(i)) => (i, soc_reconstruct),
        Command::Soc(SocCmd::Enumerate { max_index }) => {
            return soc_enumerate(*max_index).map_or_else(CommandResult::from, CommandResult::Ok)
        }
        Command::Sos(SosCmd::Decompose(i)) => (i, sos_decompose_cmd),
        Command::Sos(SosCmd::Square(i)) => (i, sos_square),
        Command::Matrix(MatrixCmd::Hnf(i)) => (i, matrix_hnf),
        Command::Matrix(MatrixCmd::Snf(i)) => (i, matrix_snf),
        Command::Matrix(MatrixCmd::Inverse(i)) => (i, matrix_inverse),
        Command::Matrix(MatrixCmd::ClearDenominators(i)) => (i, matrix_clear),
        Command::Matrix(MatrixCmd::Intersect(i)) => (i, matrix_intersect),
        Command::Matrix(MatrixCmd::Index(i)) => (i, matrix_index),
        Command::Matrix(MatrixCmd::Commensurate(i)) => (i, matrix_commensurate),
        Command::Quad(QuadCmd::Arith(i)) => (i, quad_arith_cmd),
        Command::Gauss(GaussCmd::Norm(i)) => (i, gauss_norm_cmd),
        Command::Gauss(GaussCmd::Gcd(i)) => (i, gauss_gcd_cmd),
        Command::Gauss(GaussCmd::Factor(i)) => (i, gauss_factor_cmd),
        Command::Gauss(GaussCmd::SplitPrime(i)) => (i, gauss_split_prime),
        Command::Eta(EtaCmd::Mul(i)) => (i, eta_mul),
        Command::Eta(EtaCmd::Order(i)) => (i, eta_order),
        Command::Verify { suite } => return verify(suite, seed),
    };
    with_input(input, stdin, f)
}

/// Full invocation: argument parsing, execution and rendering. Returns the
/// exit code and the text for standard output.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string());
            }
            let r = CommandResult::error("UsageError", e.render().to_string().trim_end());
            return (r.exit_code(), format!("{}\n", r.to_json()));
        }
    };
    let r = execute(&cli, stdin);
    (r.exit_code(), format!("{}\n", r.to_json()))
}
