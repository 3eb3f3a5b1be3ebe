//! Newline-delimited JSON requests in, one response per line out.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::json::canonical;
use super::ops::{execute, Failure};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub op: String,
    #[serde(default)]
    pub input: Value,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Response {
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
    pub provenance: Vec<String>,
}

impl Response {
    pub fn failure(f: Failure) -> Self {
        Response {
            ok: false,
            output: None,
            error: Some(ErrorBody { code: f.code, message: f.message }),
            provenance: Vec::new(),
        }
    }

    pub fn to_line(&self) -> String {
        canonical(&serde_json::to_value(self).expect("responses serialize"))
    }
}

pub fn respond(request: &Request) -> Response {
    if request.version != SCHEMA_VERSION {
        return Response::failure(Failure::usage(
            "UnsupportedVersion",
            format!("schema version {:?} is not supported; use \"{SCHEMA_VERSION}\"", request.version),
        ));
    }
    match execute(&request.op, &request.input) {
        Ok(o) => Response { ok: true, output: Some(o.output), error: None, provenance: o.provenance },
        Err(f) => Response::failure(f),
    }
}

pub fn respond_line(line: &str) -> Response {
    match serde_json::from_str::<Request>(line) {
        Ok(req) => respond(&req),
        Err(e) => Response::failure(Failure::usage("MalformedRequest", e.to_string())),
    }
}

/// Evaluates every non-blank line in parallel; the result keeps input order.
pub fn run_batch(input: &str) -> Vec<Response> {
    let lines: Vec<&str> = input.lines().filter(|l| !l.trim().is_empty()).collect();
    lines.par_iter().map(|l| respond_line(l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_errors() {
        let input = concat!(
            r#"{"op":"cusp.dual","input":{"cycle":[2,4,2,2,5]},"version":"1"}"#,
            "\n",
            "{not json\n",
            r#"{"op":"vd","input":{"k2":24,"chi":11},"version":"1"}"#,
            "\n"
        );
        let r = run_batch(input);
        assert_eq!(r.iter().map(|x| x.ok).collect::<Vec<_>>(), vec![true, false, true]);
        assert_eq!(r[1].error.as_ref().unwrap().code, "MalformedRequest");
        assert_eq!(r[2].output.as_ref().unwrap()["virtual_dimension"], 62);
    }

    #[test]
    fn empty_input() {
        assert!(run_batch("").is_empty());
        assert!(run_batch("\n\n").is_empty());
    }

    #[test]
    fn request_validation() {
        let r = respond_line(r#"{"op":"vd","input":{"k2":1,"chi":1},"version":"2"}"#);
        assert_eq!(r.error.unwrap().code, "UnsupportedVersion");
        let r = respond_line(r#"{"op":"vd","input":{"k2":1,"chi":1},"version":"1","x":0}"#);
        assert_eq!(r.error.unwrap().code, "MalformedRequest");
        let r = respond_line(r#"{"op":"donaldson.fan","version":"1"}"#);
        assert!(r.ok);
    }
}
