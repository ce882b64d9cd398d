//! Pass/fail records shared by every verification routine.

use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;
use std::fmt::Display;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked instance of an identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

const WITNESS_LIMIT: usize = 600;

fn clip(s: String) -> String {
    if s.len() <= WITNESS_LIMIT {
        return s;
    }
    let mut cut = WITNESS_LIMIT;
    while !s.is_char_boundary(cut) {
        cut -= 1;
    }
    format!("{} ...", &s[..cut])
}

impl Check {
    pub fn new(name: impl Into<String>, params: &[(&str, i64)], ok: bool, witness: impl FnOnce() -> String) -> Check {
        Check {
            name: name.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), Value::from(*v))).collect(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: if ok { None } else { Some(clip(witness())) },
        }
    }

    /// Passes when `residual` is zero; otherwise records it.
    pub fn vanishing<T: Display>(name: impl Into<String>, params: &[(&str, i64)], residual: &T, is_zero: bool) -> Check {
        Check::new(name, params, is_zero, || format!("residual {residual}"))
    }

    pub fn error(name: impl Into<String>, params: &[(&str, i64)], err: &crate::Error) -> Check {
        Check::new(name, params, false, || format!("error: {err}"))
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_param(mut self, key: &str, v: impl Into<Value>) -> Check {
        self.params.insert(key.to_string(), v.into());
        self
    }
}

/// Orders checks by name, then parameters, so reports do not depend on
/// scheduling.
pub fn sort_checks(checks: &mut [Check]) {
    checks.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| cmp_params(&a.params, &b.params)));
}

fn cmp_params(a: &BTreeMap<String, Value>, b: &BTreeMap<String, Value>) -> std::cmp::Ordering {
    let key = |v: &Value| (v.as_i64(), v.to_string());
    a.iter().map(|(k, v)| (k, key(v))).cmp(b.iter().map(|(k, v)| (k, key(v))))
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}
