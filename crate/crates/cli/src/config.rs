//! Run configuration, inputs and their validation.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use leinster_core::leinster::{from_dg_algebra, TableMonoid};
use leinster_core::{DgAlgebra, LeinsterMonoid, SharedMonoid};
use serde::Serialize;
use thiserror::Error;

use crate::catalog;

pub const MAX_WEIGHT_CAP: usize = 7;
pub const MAX_ARITY_CAP: usize = 5;
pub const MAX_LENGTH_CAP: usize = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown catalog entry {0:?} (try `catalog`)")]
    UnknownCatalog(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl CliError {
    /// Input and configuration problems share exit code 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Where the object under test comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum InputSource {
    Catalog(String),
    Json(PathBuf),
}

/// A check suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Delta0,
    Monoid,
    Sharp,
    Bar,
    Contraction,
    Em,
    EmLeibniz,
    Bialgebra,
    Ln,
    Counit,
    BInfinity,
    AInfinity,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Delta0,
        Suite::Monoid,
        Suite::Sharp,
        Suite::Bar,
        Suite::Contraction,
        Suite::Em,
        Suite::EmLeibniz,
        Suite::Bialgebra,
        Suite::Ln,
        Suite::Counit,
        Suite::BInfinity,
        Suite::AInfinity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Delta0 => "delta0",
            Suite::Monoid => "monoid",
            Suite::Sharp => "sharp",
            Suite::Bar => "bar",
            Suite::Contraction => "contraction",
            Suite::Em => "em",
            Suite::EmLeibniz => "em-leibniz",
            Suite::Bialgebra => "bialgebra",
            Suite::Ln => "ln",
            Suite::Counit => "counit",
            Suite::BInfinity => "b-infinity",
            Suite::AInfinity => "a-infinity",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `all` or a single suite, as accepted by `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    All,
    One(Suite),
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(Target::All);
        }
        Suite::ALL
            .iter()
            .find(|x| x.name() == s)
            .map(|&x| Target::One(x))
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite {s:?}; expected all or one of {}", names.join(", "))
            })
    }
}

/// Deliberately broken variants that must make their suites fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum NegativeControl {
    /// Plain permutation signs in the shuffle map.
    StandardSigns,
    /// Face signs `a_1 + … + a_{i-1} + i - 1` in the bar differential.
    ShiftedFaces,
    /// The monoid with `D_0` on `X_1` deleted.
    DropDegeneracy,
    /// A dg algebra whose differential is not a derivation.
    BrokenLeibniz,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub input: InputSource,
    pub max_weight: usize,
    pub max_arity: usize,
    pub max_length: usize,
    pub suites: Vec<Suite>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negative_control: Option<NegativeControl>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub jobs: Option<usize>,
}

impl RunConfig {
    pub fn new(input: InputSource, targets: &[Target]) -> Self {
        let mut suites: Vec<Suite> = if targets.contains(&Target::All) {
            Suite::ALL.to_vec()
        } else {
            targets
                .iter()
                .filter_map(|t| match t {
                    Target::One(s) => Some(*s),
                    Target::All => None,
                })
                .collect()
        };
        suites.sort();
        suites.dedup();
        Self {
            input,
            max_weight: 4,
            max_arity: 4,
            max_length: 3,
            suites,
            negative_control: None,
            out: None,
            jobs: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bound = |name: &str, v: usize, cap: usize| {
            if v == 0 || v > cap {
                Err(CliError::Config(format!("{name} = {v} is outside 1..={cap}")))
            } else {
                Ok(())
            }
        };
        bound("max-weight", self.max_weight, MAX_WEIGHT_CAP)?;
        bound("max-arity", self.max_arity, MAX_ARITY_CAP)?;
        bound("max-length", self.max_length, MAX_LENGTH_CAP)?;
        if self.jobs == Some(0) {
            return Err(CliError::Config("jobs must be at least 1".into()));
        }
        if self.suites.is_empty() {
            return Err(CliError::Config("no suite selected".into()));
        }
        Ok(())
    }
}

/// The loaded object under test.
#[derive(Clone, Debug)]
pub enum Subject {
    Algebra {
        name: String,
        algebra: DgAlgebra,
        expected_homology: Option<BTreeMap<i64, usize>>,
    },
    Monoid {
        name: String,
        monoid: TableMonoid,
    },
}

impl Subject {
    pub fn load(input: &InputSource) -> Result<Self, CliError> {
        match input {
            InputSource::Catalog(name) => {
                let e = catalog::find(name).ok_or_else(|| CliError::UnknownCatalog(name.clone()))?;
                Ok(Subject::Algebra {
                    name: e.name.to_string(),
                    algebra: e.algebra(),
                    expected_homology: Some(e.expected_homology),
                })
            }
            InputSource::Json(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                Self::from_json(&text, &path.display().to_string())
            }
        }
    }

    /// A document with `components` is a hand-built monoid; anything else
    /// is read as a dg algebra.
    pub fn from_json(text: &str, name: &str) -> Result<Self, CliError> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
        if value.get("components").is_some() {
            let monoid = TableMonoid::from_json(text).map_err(|e| CliError::Input(e.to_string()))?;
            Ok(Subject::Monoid {
                name: name.to_string(),
                monoid,
            })
        } else {
            let algebra = DgAlgebra::from_json(text).map_err(|e| CliError::Input(e.to_string()))?;
            let name = value.get("name").and_then(|v| v.as_str()).unwrap_or(name).to_string();
            Ok(Subject::Algebra {
                name,
                algebra,
                expected_homology: None,
            })
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Subject::Algebra { name, .. } | Subject::Monoid { name, .. } => name,
        }
    }

    pub fn algebra(&self) -> Option<&DgAlgebra> {
        match self {
            Subject::Algebra { algebra, .. } => Some(algebra),
            Subject::Monoid { .. } => None,
        }
    }

    pub fn expected_homology(&self) -> Option<&BTreeMap<i64, usize>> {
        match self {
            Subject::Algebra { expected_homology, .. } => expected_homology.as_ref(),
            Subject::Monoid { .. } => None,
        }
    }

    /// The Leinster monoid truncated at `max_weight`.
    pub fn monoid(&self, max_weight: usize) -> Result<SharedMonoid, CliError> {
        match self {
            Subject::Algebra { algebra, .. } => Ok(Arc::new(
                from_dg_algebra(algebra.clone(), max_weight).map_err(|e| CliError::Input(e.to_string()))?,
            )),
            Subject::Monoid { monoid, .. } => {
                if monoid.max_weight() < max_weight {
                    return Err(CliError::Config(format!(
                        "max-weight {max_weight} exceeds the monoid's truncation {}",
                        monoid.max_weight()
                    )));
                }
                Ok(Arc::new(monoid.clone()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets_parse() {
        assert_eq!("all".parse::<Target>().unwrap(), Target::All);
        assert_eq!("em-leibniz".parse::<Target>().unwrap(), Target::One(Suite::EmLeibniz));
        assert!("bogus".parse::<Target>().is_err());
    }

    #[test]
    fn caps_are_enforced() {
        let mut c = RunConfig::new(InputSource::Catalog("k".into()), &[Target::All]);
        assert!(c.validate().is_ok());
        c.max_weight = 8;
        assert!(c.validate().is_err());
        c.max_weight = 7;
        c.max_length = 0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn suites_are_sorted_and_unique() {
        let c = RunConfig::new(
            InputSource::Catalog("k".into()),
            &[Target::One(Suite::Em), Target::One(Suite::Bar), Target::One(Suite::Em)],
        );
        assert_eq!(c.suites, vec![Suite::Bar, Suite::Em]);
    }
}
