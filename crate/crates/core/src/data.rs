//! Published invariant values shipped with the crate.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupSpec;

const BUNDLED: &str = include_str!("../data/known_values.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    /// `D(G)`; the parameter is unused.
    Davenport,
    /// `s_{≤k}(G)` with parameter `k`.
    SLeq,
    /// `s_{k·exp(G)}(G)` with parameter `k`.
    SKexp,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::Davenport => "davenport",
            Invariant::SLeq => "s_leq",
            Invariant::SKexp => "s_kexp",
        })
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "davenport" => Ok(Invariant::Davenport),
            "s_leq" => Ok(Invariant::SLeq),
            "s_kexp" => Ok(Invariant::SKexp),
            other => Err(Error::Parse(format!("unknown invariant {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownRow {
    pub group: GroupSpec,
    pub invariant: Invariant,
    pub param: u64,
    pub value: u64,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownValues {
    pub version: u32,
    pub rows: Vec<KnownRow>,
}

impl KnownValues {
    /// The table compiled into the crate.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled table parses")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Rows are `group; invariant; param; value; source`. A `# version: N`
    /// comment is required; other `#` lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut version = None;
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(v) = comment.trim().strip_prefix("version:") {
                    let v = v
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("line {}: bad version", lineno + 1)))?;
                    version = Some(v);
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(';').map(str::trim).collect();
            let bad = |what: &str| Error::Parse(format!("line {}: {what}", lineno + 1));
            let [group, invariant, param, value, source] = fields[..] else {
                return Err(bad("expected 5 fields"));
            };
            rows.push(KnownRow {
                group: group.parse()?,
                invariant: invariant.parse()?,
                param: param.parse().map_err(|_| bad("bad param"))?,
                value: value.parse().map_err(|_| bad("bad value"))?,
                source: source.to_string(),
            });
        }
        let version = version.ok_or_else(|| Error::Parse("missing version header".into()))?;
        Ok(Self { version, rows })
    }

    pub fn lookup(&self, group: &GroupSpec, invariant: Invariant, param: u64) -> Option<&KnownRow> {
        self.rows.iter().find(|r| {
            &r.group == group
                && r.invariant == invariant
                && (invariant == Invariant::Davenport || r.param == param)
        })
    }

    pub fn value(&self, group: &GroupSpec, invariant: Invariant, param: u64) -> Option<u64> {
        self.lookup(group, invariant, param).map(|r| r.value)
    }
}
