//! Registry of operations shared by the subcommands and batch mode.
//!
//! Every operation takes a JSON object and returns a JSON value, a short
//! human-readable rendering, and provenance notes for any literature
//! constants that went into the result.

use std::fmt::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use super::json as enc;
use crate::cusp::CuspCycle;
use crate::cyclic_quotient::{enumerate_class_t, CyclicQuotient};
use crate::donaldson::{self, tautological, RationalPairing};
use crate::elliptic::SimpleElliptic;
use crate::error::Error;
use crate::hypersurface::{self, CohomologyTable};
use crate::pinkham::TriplePQR;
use crate::plumbing::{GraphData, PlumbingGraph};
use crate::quotient_cusp::{ExponentTuple, QuotientCuspSpec};
use crate::report::{DiscrepancyReport, QUOTED_ORDER, QUOTED_TWOS};

pub const OPERATIONS: &[&str] = &[
    "cusp.canonical",
    "cusp.monodromy",
    "cusp.dual",
    "cusp.ci",
    "cusp.torsion",
    "cusp.lci-cover",
    "plumbing.matrix",
    "plumbing.disc",
    "plumbing.negdef",
    "qcusp.bmatrix",
    "qcusp.order",
    "qcusp.equations",
    "qcusp.cover-cycle",
    "qcusp.smoothing",
    "pinkham.dual",
    "pinkham.order",
    "pinkham.smoothing",
    "classt.check",
    "classt.enumerate",
    "elliptic",
    "hypersurface",
    "vd",
    "donaldson.fan",
    "donaldson.invariants",
    "donaldson.two-forms",
    "donaldson.tautological",
    "donaldson.cm-exponents",
    "report.discrepancy",
];

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub output: Value,
    pub text: String,
    pub provenance: Vec<String>,
}

impl Outcome {
    fn new(output: Value, text: impl Into<String>) -> Self {
        Outcome { output, text: text.into(), provenance: Vec::new() }
    }

    fn with_provenance(mut self, notes: &[&str]) -> Self {
        self.provenance.extend(notes.iter().map(|s| s.to_string()));
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureKind {
    /// The request was well formed but the mathematics rejected it.
    Domain,
    /// The request itself was malformed.
    Usage,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub kind: FailureKind,
    pub code: String,
    pub message: String,
}

impl Failure {
    pub fn usage(code: &str, message: impl Into<String>) -> Self {
        Failure { kind: FailureKind::Usage, code: code.into(), message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { kind: FailureKind::Domain, code: e.code().into(), message: e.to_string() }
    }
}

type OpResult = std::result::Result<Outcome, Failure>;

fn parse<T: DeserializeOwned>(input: &Value) -> std::result::Result<T, Failure> {
    T::deserialize(input).map_err(|e| Failure::usage("InvalidInput", e.to_string()))
}

const SEXTIC_PAIRINGS: [&str; 3] = [
    "sextic example: <-c1(L_Ob), D_II> = -1/4 (literature constant)",
    "sextic example: <c1(lambda2), D_II> = 12 (literature constant)",
    "sextic example: <c1(lambda2)^2, [M]> = 288 (literature constant)",
];
const SEXTIC_H1: &str = "sextic example: dim H^1(S, T_S)^G = 2 (literature constant)";
const SEXTIC_FAN: &str = "sextic example: GIT fan rays (2,0), (0,1), (-2,-1); inserted rays (4,-1), (2,1) \
                          (literature construction)";
const DISCREPANCY: &str = "cusp (6,2,2,3,3,2,2,4): quoted discriminant order 651 and cover with 648 (-2)-curves \
                           (literature values)";

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CycleInput {
    cycle: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QcuspInput {
    e: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QcuspSmoothingInput {
    e: Vec<u64>,
    tuple: [u64; 4],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TripleInput {
    p: u64,
    q: u64,
    r: u64,
}

/// `1/m(1, q)`, `1/m(p, q)` as weights, or with `inverse_pair` the pair
/// `(p, q)` with `p q ≡ 1 (mod m)` standing for `1/m(1, p)`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassTInput {
    m: i64,
    q: i64,
    #[serde(default)]
    p: Option<i64>,
    #[serde(default)]
    inverse_pair: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EnumerateInput {
    max_m: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DegreeInput {
    degree: i64,
    #[serde(default)]
    cohomology: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VdInput {
    k2: i64,
    chi: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Empty {}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TautologicalInput {
    #[serde(default)]
    ob: Option<Value>,
    #[serde(default)]
    l2: Option<Value>,
    #[serde(default)]
    l2sq: Option<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MuInput {
    mu: Value,
}

/// Accepts `"-1/4"`, `"12"` or a JSON integer.
fn rational_value(v: &Value) -> std::result::Result<BigRational, Failure> {
    let bad = || Failure::usage("InvalidInput", format!("{v} is not a rational number"));
    match v {
        Value::String(s) => BigRational::from_str(s.trim()).map_err(|_| bad()),
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(BigInt::from(i)))
            .ok_or_else(bad),
        _ => Err(bad()),
    }
}

fn cycle_of(input: &Value) -> std::result::Result<CuspCycle, Failure> {
    let c: CycleInput = parse(input)?;
    Ok(CuspCycle::new(c.cycle)?)
}

fn qcusp_of(input: &Value) -> std::result::Result<QuotientCuspSpec, Failure> {
    let q: QcuspInput = parse(input)?;
    Ok(QuotientCuspSpec::new(q.e)?)
}

fn triple_of(input: &Value) -> std::result::Result<TriplePQR, Failure> {
    let t: TripleInput = parse(input)?;
    Ok(TriplePQR::new(t.p, t.q, t.r)?)
}

fn graph_of(input: &Value) -> std::result::Result<PlumbingGraph, Failure> {
    let g: GraphData = parse(input)?;
    Ok(PlumbingGraph::try_from(g)?)
}

fn table_json(t: &CohomologyTable) -> Value {
    json!({ "sheaf": t.sheaf, "h": t.dims })
}

fn table_text(t: &CohomologyTable) -> String {
    let cells: Vec<String> = t.dims.iter().enumerate().map(|(q, h)| format!("h{q}={h}")).collect();
    format!("{:<10} {}", t.sheaf, cells.join(" "))
}

/// Runs the operation named `op` on `input`.
pub fn execute(op: &str, input: &Value) -> OpResult {
    let input = if input.is_null() { &json!({}) } else { input };
    match op {
        "cusp.canonical" => {
            let c = cycle_of(input)?.canonicalize();
            Ok(Outcome::new(json!({ "cycle": enc::cycle(&c) }), c.to_string()))
        }
        "cusp.monodromy" => {
            let c = cycle_of(input)?;
            let a = c.monodromy();
            Ok(Outcome::new(
                json!({ "matrix": enc::mat2(&a), "trace": enc::int(&a.trace()), "det": enc::int(&a.det()) }),
                a.to_string(),
            ))
        }
        "cusp.dual" => {
            let c = cycle_of(input)?;
            let d = c.dual();
            let self_dual = d == c;
            // a self-dual cycle is echoed in the orientation it was given
            let text = if self_dual { c.to_string() } else { d.to_string() };
            Ok(Outcome::new(json!({ "cycle": enc::cycle(&d), "length": d.len(), "self_dual": self_dual }), text))
        }
        "cusp.ci" => {
            let c = cycle_of(input)?;
            let ci = c.is_complete_intersection();
            Ok(Outcome::new(
                json!({ "complete_intersection": ci, "excess": c.excess() }),
                format!("{ci} (excess {})", c.excess()),
            ))
        }
        "cusp.torsion" => {
            let c = cycle_of(input)?;
            let h = c.link_homology();
            Ok(Outcome::new(
                json!({ "link_homology": enc::group(&h), "torsion_order": enc::int(&h.torsion_order()) }),
                format!("H1 = {h}, torsion order {}", h.torsion_order()),
            ))
        }
        "cusp.lci-cover" => {
            let c = cycle_of(input)?;
            let cover = c.lci_discriminant_cover()?;
            let twos = cover.cover.len() - 1;
            Ok(Outcome::new(
                json!({
                    "trace": cover.trace,
                    "cover": enc::cycle(&cover.cover),
                    "length": cover.cover.len(),
                    "block": format!("(3, 2^{twos})"),
                }),
                format!("trace {}, cover (3, 2^{twos}), length {}", cover.trace, cover.cover.len()),
            ))
        }
        "plumbing.matrix" => {
            let m = graph_of(input)?.intersection_matrix()?.matrix;
            Ok(Outcome::new(json!({ "matrix": enc::matrix(&m) }), m.to_string()))
        }
        "plumbing.disc" => {
            let g = graph_of(input)?.discriminant_group()?;
            Ok(Outcome::new(
                json!({ "group": enc::group(&g), "order": enc::int(&g.torsion_order()) }),
                format!("{g} (order {})", g.torsion_order()),
            ))
        }
        "plumbing.negdef" => {
            let f = graph_of(input)?.intersection_matrix()?;
            let nd = f.is_negative_definite();
            let minors: Vec<Value> = f.matrix.leading_minors().iter().map(enc::int).collect();
            Ok(Outcome::new(json!({ "negative_definite": nd, "leading_minors": minors }), nd.to_string()))
        }
        "qcusp.bmatrix" => {
            let b = qcusp_of(input)?.b_matrix();
            Ok(Outcome::new(json!({ "matrix": enc::mat2(&b) }), b.to_string()))
        }
        "qcusp.order" => {
            let n = qcusp_of(input)?.cover_group_order();
            Ok(Outcome::new(json!({ "order": enc::int(&n) }), n.to_string()))
        }
        "qcusp.equations" => {
            let data = qcusp_of(input)?.cover_equations()?;
            let tuples: Vec<Value> = data
                .tuples
                .iter()
                .map(|t| json!({ "tuple": [t.alpha, t.beta, t.gamma, t.delta], "equations": t.equations() }))
                .collect();
            let mut text = format!("B = {}, |D| = {}\n", data.b, data.group_order);
            for t in &data.tuples {
                let [e1, e2] = t.equations();
                let _ = writeln!(text, "{t}: {e1}; {e2}");
            }
            Ok(Outcome::new(
                json!({
                    "b_matrix": enc::mat2(&data.b),
                    "group_order": enc::int(&data.group_order),
                    "templates": ["x^2 + y^2 = u^alpha * v^beta", "u^2 + v^2 = x^gamma * y^delta"],
                    "tuples": tuples,
                }),
                text.trim_end(),
            ))
        }
        "qcusp.cover-cycle" => {
            let s = qcusp_of(input)?;
            let c = s.cover_resolution_cycle()?;
            let dual = c.dual();
            Ok(Outcome::new(
                json!({
                    "cycle": enc::cycle(&c),
                    "dual": enc::cycle(&dual),
                    "complete_intersection": c.is_complete_intersection(),
                }),
                format!("{c} (dual {dual})"),
            ))
        }
        "qcusp.smoothing" => {
            let q: QcuspSmoothingInput = parse(input)?;
            let [a, b, c, d] = q.tuple;
            let f = QuotientCuspSpec::new(q.e)?.smoothing_family(ExponentTuple::new(a, b, c, d))?;
            Ok(Outcome::new(
                json!({
                    "equations": f.equations,
                    "parameter": f.parameter,
                    "parameter_invariant": f.parameter_invariant,
                    "tuple": q.tuple,
                    "group_order": enc::int(&f.group_order),
                }),
                f.equations.join("\n"),
            ))
        }
        "pinkham.dual" => {
            let c = triple_of(input)?.dual_cycle()?;
            Ok(Outcome::new(json!({ "cycle": enc::cycle(&c) }), c.to_string()))
        }
        "pinkham.order" => {
            let t = triple_of(input)?;
            let g = t.link_group();
            Ok(Outcome::new(
                json!({ "order": enc::int(&g.torsion_order()), "group": enc::group(&g) }),
                format!("{} ({g})", g.torsion_order()),
            ))
        }
        "pinkham.smoothing" => {
            let r = triple_of(input)?.smoothing_record();
            Ok(Outcome::new(
                json!({
                    "equation": r.equation,
                    "exponents": [r.exponents.0, r.exponents.1, r.exponents.2],
                    "parameter": r.parameter,
                    "parameter_invariant": r.parameter_invariant,
                }),
                r.equation.clone(),
            ))
        }
        "classt.check" => {
            let c: ClassTInput = parse(input)?;
            let (quotient, reading) = match (c.p, c.inverse_pair) {
                (Some(p), true) => (CyclicQuotient::from_inverse_pair(c.m, p, c.q)?, "inverse pair"),
                (Some(p), false) => (CyclicQuotient::normalize(c.m, c.q, Some(p))?, "weights"),
                (None, _) => (CyclicQuotient::new(c.m, c.q)?, "1/m(1,q)"),
            };
            let t = quotient.classify()?;
            let witness = t.witness.map(|w| json!({ "d": w.d, "n": w.n, "a": w.a }));
            let kind = match (t.witness, t.is_wahl) {
                (None, _) => "rational double point",
                (Some(_), true) => "Wahl",
                (Some(_), false) => "class T",
            };
            Ok(Outcome::new(
                json!({
                    "singularity": { "m": quotient.m, "q": quotient.q },
                    "reading": reading,
                    "witness": witness,
                    "kind": kind,
                    "is_wahl": t.is_wahl,
                    "index": t.index,
                    "cover": { "m": t.cover.m, "q": t.cover.q, "a_type": t.cover_a_type() },
                }),
                format!("{quotient}: {kind}, index {}, index-one cover A{}", t.index, t.cover_a_type()),
            ))
        }
        "classt.enumerate" => {
            let e: EnumerateInput = parse(input)?;
            let list = enumerate_class_t(e.max_m);
            let mut text = String::new();
            let items: Vec<Value> = list
                .iter()
                .map(|(c, w)| {
                    let _ = writeln!(text, "{c}  d={} n={} a={}", w.d, w.n, w.a);
                    json!({ "m": c.m, "q": c.q, "d": w.d, "n": w.n, "a": w.a, "is_wahl": w.d == 1 })
                })
                .collect();
            Ok(Outcome::new(json!({ "count": items.len(), "singularities": items }), text.trim_end()))
        }
        "elliptic" => {
            let d: DegreeInput = parse(input)?;
            let s = u64::try_from(d.degree)
                .ok()
                .and_then(SimpleElliptic::new)
                .ok_or(Error::InvalidDegree(d.degree))?
                .summary();
            Ok(Outcome::new(
                serde_json::to_value(s).expect("plain struct"),
                format!(
                    "degree {}: embedded dimension {}, lci {}, smoothable {}, lci smoothing lifting {}",
                    s.degree, s.embedded_dimension, s.is_lci, s.is_smoothable, s.has_lci_smoothing_lifting
                ),
            ))
        }
        "hypersurface" => {
            let d: DegreeInput = parse(input)?;
            let inv = hypersurface::surface_invariants(d.degree as i128).ok_or(Error::InvalidDegree(d.degree))?;
            let vd = hypersurface::virtual_dimension(inv.k2, inv.chi);
            let mut text = format!(
                "K^2 = {}, e = {}, chi = {}, pg = {}, q = {}, 10 chi - 2 K^2 = {vd}",
                inv.k2, inv.e, inv.chi, inv.pg, inv.q
            );
            let mut out = json!({ "invariants": inv, "virtual_dimension": vd });
            if d.cohomology {
                let c = hypersurface::tangent_computation(d.degree as i128)?;
                for t in [&c.normal, &c.restricted_tangent, &c.tangent] {
                    let _ = write!(text, "\n{}", table_text(t));
                }
                out["cohomology"] = json!({
                    "normal": table_json(&c.normal),
                    "restricted_tangent": table_json(&c.restricted_tangent),
                    "tangent": table_json(&c.tangent),
                });
            }
            Ok(Outcome::new(out, text))
        }
        "vd" => {
            let v: VdInput = parse(input)?;
            let vd = hypersurface::virtual_dimension(v.k2 as i128, v.chi as i128);
            Ok(Outcome::new(json!({ "virtual_dimension": vd }), vd.to_string()))
        }
        "donaldson.fan" => {
            parse::<Empty>(input)?;
            let s = donaldson::ksba_surgery();
            let mut text = String::new();
            for (name, f) in [
                ("GIT fan", &s.initial),
                ("after inserting (4,-1)", &s.after_first_insertion),
                ("after inserting (2,1)", &s.after_second_insertion),
                ("KSBA fan (collapse (2,0))", &s.result),
            ] {
                let _ = writeln!(text, "{name}:");
                for c in f.cones() {
                    let _ = writeln!(text, "  {c}");
                }
            }
            let _ = write!(text, "complete: {}", s.result.is_complete());
            let fan_json = |f: &donaldson::StackyFan| {
                json!({
                    "rays": f.rays(),
                    "cones": f.cones(),
                    "complete": f.is_complete(),
                })
            };
            Ok(Outcome::new(
                json!({
                    "initial": fan_json(&s.initial),
                    "after_first_insertion": fan_json(&s.after_first_insertion),
                    "after_second_insertion": fan_json(&s.after_second_insertion),
                    "ksba": fan_json(&s.result),
                }),
                text,
            )
            .with_provenance(&[SEXTIC_FAN]))
        }
        "donaldson.invariants" => {
            parse::<Empty>(input)?;
            let s = donaldson::invariant_sextic_basis();
            let text = format!(
                "|G| = {}, invariant sextics: dimension {} of {}\nspanned by {}",
                s.group_order,
                s.dimension,
                s.ambient_dimension,
                s.named_basis.join(", ")
            );
            Ok(Outcome::new(serde_json::to_value(s).expect("plain struct"), text))
        }
        "donaldson.two-forms" => {
            parse::<Empty>(input)?;
            let t = donaldson::invariant_two_forms();
            let tw = donaldson::twist_invariant_two_forms();
            let vd = donaldson::equivariant_vd();
            let text = format!(
                "G-invariant two-forms: dimension {} ({})\ninvariant under the twists only: dimension {}\n\
                 equivariant vd = h1 - h2 = {} - {} = {}",
                t.dimension,
                t.basis.join(", "),
                tw.dimension,
                vd.h1,
                vd.h2,
                vd.vd
            );
            Ok(Outcome::new(
                json!({ "invariant": t, "twists_only": tw, "equivariant_vd": vd }),
                text,
            )
            .with_provenance(&[SEXTIC_H1]))
        }
        "donaldson.tautological" => {
            let t: TautologicalInput = parse(input)?;
            let defaults = RationalPairing::sextic();
            let defaulted: Vec<&str> = [&t.ob, &t.l2, &t.l2sq]
                .iter()
                .zip(SEXTIC_PAIRINGS)
                .filter(|(v, _)| v.is_none())
                .map(|(_, note)| note)
                .collect();
            let pick = |v: &Option<Value>, d: BigRational| v.as_ref().map_or(Ok(d), rational_value);
            let p = RationalPairing {
                ob_dii: pick(&t.ob, defaults.ob_dii)?,
                l2_dii: pick(&t.l2, defaults.l2_dii)?,
                l2_sq: pick(&t.l2sq, defaults.l2_sq)?,
            };
            let r = tautological::tautological_invariant(&p)?;
            let out = Outcome::new(
                json!({
                    "inputs": {
                        "ob": enc::rational(&p.ob_dii),
                        "l2": enc::rational(&p.l2_dii),
                        "l2sq": enc::rational(&p.l2_sq),
                    },
                    "ratio": enc::rational(&r.ratio),
                    "l2_vir": enc::rational(&r.l2_vir),
                    "i_cm": enc::rational(&r.i_cm),
                }),
                format!(
                    "c1(L_Ob) = {} c1(lambda2)\n<c1(lambda2), [M]^vir> = {}\nI_CM = {}",
                    r.ratio, r.l2_vir, r.i_cm
                ),
            );
            Ok(out.with_provenance(&defaulted))
        }
        "donaldson.cm-exponents" => {
            let m: MuInput = parse(input)?;
            let mu = rational_value(&m.mu)?;
            let (a3, a2) = tautological::cm_exponents(&mu);
            Ok(Outcome::new(
                json!({ "lambda3": enc::rational(&a3), "lambda2": enc::rational(&a2) }),
                format!("lambda_CM = lambda3^{a3} * lambda2^{a2}"),
            ))
        }
        "report.discrepancy" => {
            parse::<Empty>(input)?;
            let r = DiscrepancyReport::compute();
            Ok(Outcome::new(
                json!({
                    "cycle": enc::cycle(&r.cycle),
                    "trace": r.trace,
                    "det_a_minus_i": enc::int(&r.det_a_minus_i),
                    "torsion_order": enc::int(&r.torsion_order),
                    "cover_length": r.cover_length,
                    "cover_twos": r.cover_twos,
                    "quoted_order": QUOTED_ORDER,
                    "quoted_twos": QUOTED_TWOS,
                    "consistent": r.is_consistent(),
                }),
                r.render().trim_end(),
            )
            .with_provenance(&[DISCREPANCY]))
        }
        other => Err(Failure::usage("UnknownOp", format!("unknown operation {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_registered_op_is_dispatched() {
        for op in OPERATIONS {
            if let Err(f) = execute(op, &json!({})) {
                assert_ne!(f.code, "UnknownOp", "{op}");
            }
        }
        assert_eq!(execute("nope", &json!({})).unwrap_err().code, "UnknownOp");
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let f = execute("cusp.dual", &json!({ "cycle": [3, 3], "extra": 1 })).unwrap_err();
        assert_eq!((f.kind, f.code.as_str()), (FailureKind::Usage, "InvalidInput"));
    }

    #[test]
    fn domain_errors_keep_their_codes() {
        let f = execute("cusp.dual", &json!({ "cycle": [2] })).unwrap_err();
        assert_eq!((f.kind, f.code.as_str()), (FailureKind::Domain, "InvalidCycle"));
        let f = execute("hypersurface", &json!({ "degree": 4, "cohomology": true })).unwrap_err();
        assert_eq!(f.code, "DegreeTooSmall");
        let f = execute("elliptic", &json!({ "degree": 0 })).unwrap_err();
        assert_eq!(f.code, "InvalidDegree");
    }

    #[test]
    fn tautological_defaults_and_overrides() {
        let o = execute("donaldson.tautological", &json!({})).unwrap();
        assert_eq!(o.output["ratio"], json!("1/48"));
        assert_eq!(o.output["l2_vir"], json!("6"));
        assert_eq!(o.output["i_cm"], json!("12"));
        assert_eq!(o.provenance.len(), 3);
        let o = execute("donaldson.tautological", &json!({ "ob": "-1/2", "l2": 12, "l2sq": "288" })).unwrap();
        assert_eq!(o.output["i_cm"], json!("24"));
        assert!(o.provenance.is_empty());
        let o = execute("donaldson.tautological", &json!({ "ob": "-1/2" })).unwrap();
        assert_eq!(o.provenance.len(), 2);
        let f = execute("donaldson.tautological", &json!({ "l2": "0" })).unwrap_err();
        assert_eq!(f.code, "ZeroPairing");
        let f = execute("donaldson.tautological", &json!({ "ob": "x" })).unwrap_err();
        assert_eq!(f.code, "InvalidInput");
    }

    #[test]
    fn classt_readings() {
        let o = execute("classt.check", &json!({ "m": 9, "p": 2, "q": 5, "inverse_pair": true })).unwrap();
        assert_eq!(o.output["kind"], json!("Wahl"));
        let f = execute("classt.check", &json!({ "m": 9, "p": 2, "q": 5 })).unwrap_err();
        assert_eq!(f.code, "NotClassT");
        let o = execute("classt.check", &json!({ "m": 4, "q": 1 })).unwrap();
        assert_eq!(o.output["index"], json!(2));
        assert_eq!(o.output["cover"]["a_type"], json!(1));
    }
}
