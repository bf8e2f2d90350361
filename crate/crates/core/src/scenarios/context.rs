use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use super::registry::ScenarioDef;
use super::{Caps, Report, Status, Witness};
use crate::algebra::AlgebraError;
use crate::constructors::ConstructError;
use crate::perm::{Perm, PermError, PermGroup};
use crate::pronormal::PronormError;

/// Why a scenario body stopped early.
#[derive(Debug)]
pub(crate) enum Stop {
    Truncated(String),
    Error(String),
}

pub(crate) type Outcome = Result<(), Stop>;

impl From<PermError> for Stop {
    fn from(e: PermError) -> Self {
        match e {
            PermError::CapExceeded { .. } => Stop::Truncated(e.to_string()),
            other => Stop::Error(other.to_string()),
        }
    }
}

impl From<PronormError> for Stop {
    fn from(e: PronormError) -> Self {
        match e {
            PronormError::Perm(p) => p.into(),
            other => Stop::Error(other.to_string()),
        }
    }
}

impl From<ConstructError> for Stop {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::Perm(p) => p.into(),
            other => Stop::Error(other.to_string()),
        }
    }
}

impl From<AlgebraError> for Stop {
    fn from(e: AlgebraError) -> Self {
        Stop::Error(e.to_string())
    }
}

fn json(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("scenario values serialize")
}

/// Collects measurements, expectations and witnesses for one run.
pub(crate) struct Ctx {
    pub caps: Caps,
    measured: BTreeMap<String, Value>,
    expected: BTreeMap<String, Value>,
    mismatches: Vec<String>,
    witnesses: Vec<Witness>,
    truncated: Vec<String>,
    unreachable: bool,
}

impl Ctx {
    pub fn new(caps: Caps) -> Self {
        Ctx {
            caps,
            measured: BTreeMap::new(),
            expected: BTreeMap::new(),
            mismatches: Vec::new(),
            witnesses: Vec::new(),
            truncated: Vec::new(),
            unreachable: false,
        }
    }

    pub fn cap(&self) -> u64 {
        self.caps.elements
    }

    pub fn max_subgroups(&self) -> usize {
        self.caps.elements.try_into().unwrap_or(usize::MAX)
    }

    /// Refuses to work in groups above the order cap.
    pub fn admit(&self, g: &PermGroup) -> Outcome {
        if g.order() > self.caps.order {
            return Err(PermError::CapExceeded { what: "group order", needed: g.order(), cap: self.caps.order }.into());
        }
        Ok(())
    }

    pub fn measure(&mut self, key: &str, value: impl Serialize) {
        self.measured.insert(key.to_string(), json(value));
    }

    /// Records a measurement with its expected value; a difference is a mismatch.
    pub fn expect<T: Serialize>(&mut self, key: &str, measured: T, expected: T) {
        let (m, e) = (json(measured), json(expected));
        if m != e {
            self.mismatches.push(format!("{key}: measured {m}, expected {e}"));
        }
        self.measured.insert(key.to_string(), m);
        self.expected.insert(key.to_string(), e);
    }

    pub fn witness(&mut self, role: &str, x: &Perm) {
        self.witnesses.push(Witness { role: role.to_string(), degree: x.degree(), cycles: x.to_cycle_string() });
    }

    pub fn generators(&mut self, role: &str, g: &PermGroup) {
        for (i, x) in g.gens().iter().enumerate() {
            self.witness(&format!("{role}[{i}]"), x);
        }
    }

    pub fn truncate(&mut self, note: impl Into<String>) {
        self.truncated.push(note.into());
    }

    pub fn mark_unreachable(&mut self, note: impl Into<String>) {
        self.unreachable = true;
        self.truncated.push(note.into());
    }

    pub fn stop(&mut self, stop: Stop) {
        match stop {
            Stop::Truncated(note) => self.truncated.push(note),
            Stop::Error(msg) => self.mismatches.push(format!("error: {msg}")),
        }
    }

    pub fn finish(self, def: &ScenarioDef, wall_time_ms: u64) -> Report {
        let status = if self.unreachable {
            Status::Unreachable
        } else if !self.mismatches.is_empty() {
            Status::Fail
        } else if !self.truncated.is_empty() {
            Status::Truncated
        } else {
            Status::Pass
        };
        Report {
            id: def.id.clone(),
            claim: def.claim.to_string(),
            exploratory: def.exploratory,
            status,
            caps: self.caps,
            measured: self.measured,
            expected: self.expected,
            mismatches: self.mismatches,
            witnesses: self.witnesses,
            truncated: self.truncated,
            wall_time_ms,
        }
    }
}
