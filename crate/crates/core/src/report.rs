//! Structured outcomes of the checks, one JSON object per report.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// Machine-readable skip reasons.
pub mod reason {
    pub const CAP_EXCEEDED: &str = "cap-exceeded";
    pub const NO_EDGES: &str = "no-edges";
    pub const NON_BIPARTITE: &str = "non-bipartite";
    pub const NOT_CAMERON_WALKER: &str = "not-cameron-walker";
    pub const PRECONDITION: &str = "precondition-unmet";
    pub const NO_POWER_IN_RANGE: &str = "no-power-in-range";
    pub const THEOREM_VIOLATION: &str = "theorem-violation";
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    /// `reg(I^[s]) ≤ match + s`.
    Dagger,
    /// `reg(I^[s]) ≤ s + ⌊n/2⌋`.
    DoubleDagger,
    /// `reg(I^[s]) ≤ min(|X|, |Y|) + s` on bipartite graphs.
    Bipartite,
    /// Cameron-Walker equality `reg(I^[s]) = match + s` and linearity at the top power.
    CameronWalker,
    /// `reg(I^[s]) ≥ ind-match + s`.
    LowerBound,
    /// `(I^[s] : xy) = I(G \ {x, y})^[s-1]` for pendant triangles.
    PendantTriangle,
    /// Colons `(I^[s+1] : u)` are generated in degree two.
    ColonDegree,
    /// The regularity recursion through colon ideals.
    RegCol,
    /// Existence of an admissible generator ordering.
    Order,
    /// Colon graph versus the brute-force colon ideal.
    ColonGraph,
    /// `reg(I^[match]) = 2 match`.
    TopLinear,
    /// `match = min(|X|, |Y|)` on bipartite Cameron-Walker graphs.
    CwMatching,
    /// Pseudo-check attached to unparsable input lines.
    Parse,
}

impl CheckId {
    pub const ALL: [CheckId; 12] = [
        CheckId::Dagger,
        CheckId::DoubleDagger,
        CheckId::Bipartite,
        CheckId::CameronWalker,
        CheckId::LowerBound,
        CheckId::PendantTriangle,
        CheckId::ColonDegree,
        CheckId::RegCol,
        CheckId::Order,
        CheckId::ColonGraph,
        CheckId::TopLinear,
        CheckId::CwMatching,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Dagger => "dagger",
            CheckId::DoubleDagger => "ddagger",
            CheckId::Bipartite => "bipartite",
            CheckId::CameronWalker => "cw",
            CheckId::LowerBound => "lower",
            CheckId::PendantTriangle => "pendant",
            CheckId::ColonDegree => "colon-degree",
            CheckId::RegCol => "regcol",
            CheckId::Order => "order",
            CheckId::ColonGraph => "colon-graph",
            CheckId::TopLinear => "top-linear",
            CheckId::CwMatching => "cw-matching",
            CheckId::Parse => "parse",
        }
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(text: &str) -> Result<Vec<CheckId>, String> {
        let mut out = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item == "all" {
                out.extend(CheckId::ALL);
            } else {
                out.push(item.parse()?);
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
    Error(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped(_) => "skipped",
            Verdict::Error(_) => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub graph_id: String,
    pub check: CheckId,
    pub s: Option<usize>,
    pub computed: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub witness: Option<Value>,
}

impl Report {
    pub fn new(graph_id: &str, check: CheckId, s: Option<usize>) -> Self {
        Self {
            graph_id: graph_id.to_string(),
            check,
            s,
            computed: BTreeMap::new(),
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.computed.insert(key.to_string(), value.into());
        self
    }

    /// Pass when `holds`, otherwise fail.
    pub fn holds(mut self, holds: bool) -> Self {
        self.verdict = if holds { Verdict::Pass } else { Verdict::Fail };
        self
    }

    pub fn skipped(mut self, reason: &str) -> Self {
        self.verdict = Verdict::Skipped(reason.to_string());
        self
    }

    pub fn error(mut self, message: impl Into<String>) -> Self {
        self.verdict = Verdict::Error(message.into());
        self
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("schema", &SCHEMA_VERSION)?;
        map.serialize_entry("graph_id", &self.graph_id)?;
        map.serialize_entry("check", self.check.as_str())?;
        if let Some(s) = self.s {
            map.serialize_entry("s", &s)?;
        }
        map.serialize_entry("verdict", self.verdict.label())?;
        match &self.verdict {
            Verdict::Skipped(why) | Verdict::Error(why) => map.serialize_entry("reason", why)?,
            Verdict::Pass | Verdict::Fail => {}
        }
        map.serialize_entry("computed", &self.computed)?;
        if let Some(w) = &self.witness {
            map.serialize_entry("witness", w)?;
        }
        map.end()
    }
}

/// Verdict counts over a batch of reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub error: usize,
}

impl Summary {
    pub fn record(&mut self, report: &Report) {
        match report.verdict {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Skipped(_) => self.skipped += 1,
            Verdict::Error(_) => self.error += 1,
        }
    }

    pub fn all_clear(&self) -> bool {
        self.fail == 0 && self.error == 0
    }

    pub fn to_json_line(&self) -> String {
        format!("{{\"summary\":{}}}", serde_json::to_string(self).expect("summary serializes"))
    }
}
