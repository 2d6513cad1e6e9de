//! JSON task files: `{"command": ..., "payload": {...}, "seed": n}`.
//!
//! [`parse_request`] checks the whole document, including every polynomial
//! string, before anything runs. [`execute`] returns the answer with a
//! `verification` block and an exit code: 0 on success, 1 on a domain error,
//! 2 on a malformed request.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::bundle::{
    birkhoff_factorize, bundle_constructions, cohomology_dims, euler_witness_over, h0_dimension, hn_filtration,
    splitting_type, validate_morphism, BundleMorphism, Construction, SplittingType, TransitionBundle,
};
use crate::error::Error;
use crate::field::Field;
use crate::matrix::LaurentMatrix;
use crate::sample::DEFAULT_SEED;
use crate::selftest::run_selftest;
use crate::torsor::{
    classify_bundle_for, cocharacter_pushout, double_coset_witnesses, pgl_lift, Cocharacter, GroupFamily, GroupTag,
};
use crate::wire::{matrix_text, parse_matrix, BundleRecord, DoubleCosetRecord, MatrixText, WitnessRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    SplittingType,
    Factorize,
    Cohomology,
    Hn,
    Construct,
    Classify,
    Pushout,
    PglLift,
    DoubleCoset,
    EulerWitness,
    Selftest,
}

impl Command {
    pub const ALL: [Command; 11] = [
        Command::SplittingType,
        Command::Factorize,
        Command::Cohomology,
        Command::Hn,
        Command::Construct,
        Command::Classify,
        Command::Pushout,
        Command::PglLift,
        Command::DoubleCoset,
        Command::EulerWitness,
        Command::Selftest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::SplittingType => "splitting-type",
            Command::Factorize => "factorize",
            Command::Cohomology => "cohomology",
            Command::Hn => "hn",
            Command::Construct => "construct",
            Command::Classify => "classify",
            Command::Pushout => "pushout",
            Command::PglLift => "pgl-lift",
            Command::DoubleCoset => "double-coset",
            Command::EulerWitness => "euler-witness",
            Command::Selftest => "selftest",
        }
    }

    pub fn from_name(name: &str) -> Option<Command> {
        Command::ALL.into_iter().find(|c| c.name() == name)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A payload after schema checking, with all polynomials parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Bundle(LaurentMatrix),
    Classify { transition: LaurentMatrix, group: GroupFamily },
    Construct { kind: Construction, bundle: LaurentMatrix, other: Option<LaurentMatrix> },
    Cocharacter { group: GroupTag, weights: Vec<i64>, field: Field },
    DoubleCoset(LaurentMatrix),
    EulerWitness { field: Field },
    Selftest { trials: usize, workers: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaskRequest {
    pub command: Command,
    pub payload: Payload,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TaskError {
    Parse(String),
    UnknownCommand(String),
    Domain(Error),
}

impl TaskError {
    pub fn kind(&self) -> &'static str {
        match self {
            TaskError::Parse(_) => "ParseError",
            TaskError::UnknownCommand(_) => "UnknownCommand",
            TaskError::Domain(e) => e.kind(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            TaskError::Domain(e) if !matches!(e, Error::Parse(_)) => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}

impl fmt::Display for TaskError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TaskError::Parse(m) => write!(f, "{m}"),
            TaskError::UnknownCommand(c) => {
                let known: Vec<_> = Command::ALL.iter().map(|c| c.name()).collect();
                write!(f, "unknown command {c:?}; expected one of {}", known.join(", "))
            }
            TaskError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TaskError {}

impl From<Error> for TaskError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => TaskError::Parse(m),
            other => TaskError::Domain(other),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassifyPayload {
    field: Field,
    rank: usize,
    transition: MatrixText,
    #[serde(default)]
    group: Option<GroupFamily>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstructPayload {
    kind: Construction,
    bundle: BundleRecord,
    #[serde(default)]
    other: Option<BundleRecord>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CocharacterPayload {
    group: GroupFamily,
    n: usize,
    weights: Vec<i64>,
    #[serde(default)]
    field: Option<Field>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DoubleCosetPayload {
    field: Field,
    matrix: MatrixText,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldPayload {
    #[serde(default)]
    field: Option<Field>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SelftestPayload {
    #[serde(default)]
    trials: Option<usize>,
    #[serde(default)]
    workers: Option<usize>,
}

pub const DEFAULT_TRIALS: usize = 20;
pub const DEFAULT_WORKERS: usize = 4;

fn typed<T: for<'de> Deserialize<'de>>(payload: Value) -> Result<T, TaskError> {
    serde_json::from_value(payload).map_err(|e| TaskError::Parse(format!("payload: {e}")))
}

/// Parses and validates a request document.
pub fn parse_request(text: &str) -> Result<TaskRequest, TaskError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| TaskError::Parse(format!("invalid JSON: {e}")))?;
    let Value::Object(mut obj) = doc else {
        return Err(TaskError::Parse("request must be a JSON object".into()));
    };
    let command = match obj.remove("command") {
        Some(Value::String(s)) => Command::from_name(&s).ok_or(TaskError::UnknownCommand(s))?,
        Some(other) => return Err(TaskError::Parse(format!("command: expected a string, found {other}"))),
        None => return Err(TaskError::Parse("missing field `command`".into())),
    };
    let seed = match obj.remove("seed") {
        None | Some(Value::Null) => None,
        Some(v) => Some(
            v.as_u64().ok_or_else(|| TaskError::Parse(format!("seed: expected a non-negative integer, found {v}")))?,
        ),
    };
    let payload = obj.remove("payload").unwrap_or_else(|| Value::Object(Map::new()));
    if let Some(key) = obj.keys().next() {
        return Err(TaskError::Parse(format!("unknown field `{key}`, expected `command`, `payload` or `seed`")));
    }
    Ok(TaskRequest { command, payload: parse_payload(command, payload)?, seed })
}

/// Checks `payload` against the schema of `command`.
pub fn parse_payload(command: Command, payload: Value) -> Result<Payload, TaskError> {
    Ok(match command {
        Command::SplittingType | Command::Factorize | Command::Cohomology | Command::Hn => {
            Payload::Bundle(typed::<BundleRecord>(payload)?.matrix("payload")?)
        }
        Command::Classify => {
            let p: ClassifyPayload = typed(payload)?;
            let rec = BundleRecord { field: p.field, rank: p.rank, transition: p.transition };
            Payload::Classify { transition: rec.matrix("payload")?, group: p.group.unwrap_or(GroupFamily::GL) }
        }
        Command::Construct => {
            let p: ConstructPayload = typed(payload)?;
            let other = p.other.map(|o| o.matrix("payload.other")).transpose()?;
            Payload::Construct { kind: p.kind, bundle: p.bundle.matrix("payload.bundle")?, other }
        }
        Command::Pushout | Command::PglLift => {
            let p: CocharacterPayload = typed(payload)?;
            Payload::Cocharacter {
                group: GroupTag { family: p.group, n: p.n },
                weights: p.weights,
                field: p.field.unwrap_or(Field::Rationals),
            }
        }
        Command::DoubleCoset => {
            let p: DoubleCosetPayload = typed(payload)?;
            Payload::DoubleCoset(parse_matrix(p.field, &p.matrix, "payload.matrix")?)
        }
        Command::EulerWitness => {
            let p: FieldPayload = typed(payload)?;
            Payload::EulerWitness { field: p.field.unwrap_or(Field::Rationals) }
        }
        Command::Selftest => {
            let p: SelftestPayload = typed(payload)?;
            Payload::Selftest {
                trials: p.trials.unwrap_or(DEFAULT_TRIALS),
                workers: p.workers.unwrap_or(DEFAULT_WORKERS).max(1),
            }
        }
    })
}

fn bundle_json(m: &LaurentMatrix) -> Value {
    json!({ "field": m.field(), "rank": m.rows(), "transition": matrix_text(m) })
}

impl Payload {
    /// The canonical JSON form; [`parse_payload`] maps it back to `self`.
    pub fn to_json(&self) -> Value {
        match self {
            Payload::Bundle(m) => bundle_json(m),
            Payload::Classify { transition, group } => {
                let mut v = bundle_json(transition);
                v["group"] = json!(group);
                v
            }
            Payload::Construct { kind, bundle, other } => {
                let mut v = json!({ "kind": kind, "bundle": bundle_json(bundle) });
                if let Some(o) = other {
                    v["other"] = bundle_json(o);
                }
                v
            }
            Payload::Cocharacter { group, weights, field } => {
                json!({ "group": group.family, "n": group.n, "weights": weights, "field": field })
            }
            Payload::DoubleCoset(m) => json!({ "field": m.field(), "matrix": matrix_text(m) }),
            Payload::EulerWitness { field } => json!({ "field": field }),
            Payload::Selftest { trials, workers } => json!({ "trials": trials, "workers": workers }),
        }
    }
}

impl TaskRequest {
    pub fn to_json(&self) -> Value {
        let mut v = json!({ "command": self.command, "payload": self.payload.to_json() });
        if let Some(s) = self.seed {
            v["seed"] = json!(s);
        }
        v
    }
}

/// The result document and the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub body: Value,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(body: Value) -> Self {
        Outcome { body, exit_code: 0 }
    }

    fn failed(e: &TaskError) -> Self {
        Outcome { body: e.to_json(), exit_code: e.exit_code() }
    }
}

/// Parses and runs a request document in one step.
pub fn run(text: &str) -> Outcome {
    match parse_request(text) {
        Ok(req) => execute(&req),
        Err(e) => Outcome::failed(&e),
    }
}

pub fn execute(req: &TaskRequest) -> Outcome {
    match dispatch(req) {
        Ok(o) => o,
        Err(e) => Outcome::failed(&e),
    }
}

fn bundle(m: &LaurentMatrix) -> Result<TransitionBundle, TaskError> {
    Ok(TransitionBundle::new(m.clone())?)
}

fn mismatch(command: Command) -> TaskError {
    TaskError::Parse(format!("payload does not belong to command {command}"))
}

fn morphism_json(f: &BundleMorphism) -> Value {
    json!({ "chart0": matrix_text(&f.chart0), "chart1": matrix_text(&f.chart1) })
}

/// `h0(E(m))` predicted by a splitting type against a direct count, at the
/// twists where the prediction changes.
fn section_checks(e: &TransitionBundle, ty: &SplittingType) -> Value {
    let mut twists: Vec<i64> = ty.exponents().iter().flat_map(|a| [-a - 1, -a]).collect();
    twists.sort_unstable();
    twists.dedup();
    let rows: Vec<Value> = twists
        .iter()
        .map(|&m| json!({ "twist": m, "predicted": ty.h0_of_twist(m), "counted": h0_dimension(&e.twist(m)) }))
        .collect();
    let agree = rows.iter().all(|r| r["predicted"] == r["counted"]);
    json!({ "twists": rows, "agree": agree })
}

fn dispatch(req: &TaskRequest) -> Result<Outcome, TaskError> {
    let cmd = req.command;
    let body = match (&req.payload, cmd) {
        (Payload::Bundle(m), Command::SplittingType) => {
            let e = bundle(m)?;
            let ty = splitting_type(&e);
            json!({
                "splitting": ty,
                "rank": e.rank(),
                "degree": e.degree(),
                "verification": { "sectionCounts": section_checks(&e, &ty), "degreeMatches": ty.degree() == e.degree() },
            })
        }
        (Payload::Bundle(m), Command::Factorize) => {
            let e = bundle(m)?;
            let w = birkhoff_factorize(&e)?;
            json!({ "witness": WitnessRecord::from_witness(&w), "verification": w.check(e.transition()) })
        }
        (Payload::Bundle(m), Command::Cohomology) => {
            let e = bundle(m)?;
            let c = cohomology_dims(&e);
            let euler = c.h0 as i64 - c.h1 as i64;
            json!({
                "h0": c.h0,
                "h1": c.h1,
                "verification": {
                    "sectionCount": h0_dimension(&e),
                    "riemannRoch": euler == e.degree() + e.rank() as i64,
                },
            })
        }
        (Payload::Bundle(m), Command::Hn) => {
            let e = bundle(m)?;
            let hn = hn_filtration(&e)?;
            let (p, q) = hn.basis_change.clone();
            let w = crate::bundle::BirkhoffWitness { p, splitting: splitting_type(&e), q };
            json!({
                "steps": hn.steps,
                "cumulativeRanks": hn.cumulative_ranks(),
                "frame": WitnessRecord::from_witness(&w),
                "verification": w.check(e.transition()),
            })
        }
        (Payload::Classify { transition, group }, Command::Classify) => {
            let e = bundle(transition)?;
            let chi = classify_bundle_for(&e, *group)?;
            let gl = classify_bundle_for(&e, GroupFamily::GL)?;
            let back = splitting_type(&cocharacter_pushout(&gl, e.field())?);
            let ty = splitting_type(&e);
            json!({
                "cocharacter": chi,
                "splitting": ty,
                "verification": { "pushoutSplitting": back, "matches": back == ty },
            })
        }
        (Payload::Construct { kind, bundle: b, other }, Command::Construct) => {
            let e = bundle(b)?;
            let f = other.as_ref().map(bundle).transpose()?;
            let out = bundle_constructions(*kind, &e, f.as_ref())?;
            let ty = splitting_type(&out);
            let (te, tf) = (splitting_type(&e), f.as_ref().map(splitting_type));
            let expected = match (kind, &tf) {
                (Construction::Dual, _) => te.dual(),
                (Construction::Exterior2, _) => te.exterior2(),
                (Construction::Sym2, _) => te.sym2(),
                (Construction::Tensor, Some(tf)) => te.tensor(tf),
                (Construction::DirectSum, Some(tf)) => te.direct_sum(tf),
                _ => unreachable!("binary constructions require a second bundle"),
            };
            json!({
                "kind": kind,
                "bundle": BundleRecord::from_bundle(&out),
                "splitting": ty,
                "verification": { "expectedSplitting": expected, "matches": expected == ty },
            })
        }
        (Payload::Cocharacter { group, weights, field }, Command::Pushout) => {
            let chi = Cocharacter::new(*group, weights.clone())?;
            let e = cocharacter_pushout(&chi, *field)?;
            let back = classify_bundle_for(&e, GroupFamily::GL)?;
            json!({
                "bundle": BundleRecord::from_bundle(&e),
                "verification": { "classifiedAs": back, "matchesDominant": back == chi.dominantize() },
            })
        }
        (Payload::Cocharacter { group, weights, .. }, Command::PglLift) => {
            let chi = Cocharacter::new(*group, weights.clone())?;
            let lift = pgl_lift(&chi)?;
            json!({
                "lift": lift,
                "verification": {
                    "projectsBack": lift.project_to_pgl() == chi,
                    "dominantIfInputDominant": !chi.is_dominant() || lift.is_dominant(),
                },
            })
        }
        (Payload::DoubleCoset(g), Command::DoubleCoset) => {
            let w = double_coset_witnesses(g)?;
            json!({
                "lambda": w.lambda.weights(),
                "witness": DoubleCosetRecord::from_witness(&w),
                "verification": w.check(g),
            })
        }
        (Payload::EulerWitness { field }, Command::EulerWitness) => {
            let w = euler_witness_over(*field);
            json!({
                "sub": BundleRecord::from_bundle(&w.sub),
                "mid": BundleRecord::from_bundle(&w.mid),
                "quot": BundleRecord::from_bundle(&w.quot),
                "inclusion": morphism_json(&w.inclusion),
                "projection": morphism_json(&w.projection),
                "grMismatch": w.gr_mismatch,
                "verification": {
                    "inclusion": validate_morphism(&w.inclusion),
                    "projection": validate_morphism(&w.projection),
                },
            })
        }
        (Payload::Selftest { trials, workers }, Command::Selftest) => {
            let report = run_selftest(req.seed.unwrap_or(DEFAULT_SEED), *trials, *workers);
            let code = if report.failed == 0 { 0 } else { 1 };
            return Ok(Outcome { body: serde_json::to_value(report).expect("plain data"), exit_code: code });
        }
        _ => return Err(mismatch(cmd)),
    };
    Ok(Outcome::ok(body))
}
