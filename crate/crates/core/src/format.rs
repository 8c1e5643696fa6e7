//! JSON input formats for arrangements and local systems.
//!
//! ```json
//! { "lines": [ {"homog": ["1", "-1", "0"]},
//!              {"affine": {"slope": "1/2", "intercept": "3/2"}},
//!              {"vertical": "0"},
//!              "infinity" ] }
//! ```
//!
//! ```json
//! { "classes": [ {"re": "1/2", "im": "0"}, ... ] }
//! ```
//!
//! Rationals are strings `"p/q"` (bare integers are accepted too).

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, ProjLine};
use crate::error::{ArrangementError, LocalSystemError, ParseError};
use crate::exact::Rational;
use crate::local_system::LocalSystem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LineSpec {
    /// `a·x + b·y + c·z = 0`
    Homog([Rational; 3]),
    /// `y = slope·x + intercept`
    Affine { slope: Rational, intercept: Rational },
    /// `x = c`
    Vertical(Rational),
    /// `z = 0`
    Infinity,
}

impl LineSpec {
    pub fn to_line(&self) -> Result<ProjLine, ArrangementError> {
        match self {
            LineSpec::Homog([a, b, c]) => ProjLine::new(a.clone(), b.clone(), c.clone()),
            LineSpec::Affine { slope, intercept } => {
                Ok(ProjLine::affine(slope.clone(), intercept.clone()))
            }
            LineSpec::Vertical(c) => Ok(ProjLine::vertical(c.clone())),
            LineSpec::Infinity => Ok(ProjLine::infinity()),
        }
    }

    pub fn affine(slope: Rational, intercept: Rational) -> Self {
        LineSpec::Affine { slope, intercept }
    }

    pub fn homog(a: i64, b: i64, c: i64) -> Self {
        LineSpec::Homog([a.into(), b.into(), c.into()])
    }
}

impl From<&ProjLine> for LineSpec {
    fn from(l: &ProjLine) -> Self {
        LineSpec::Homog(l.coeffs().clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub lines: Vec<LineSpec>,
}

impl ArrangementFile {
    pub fn build(&self) -> Result<Arrangement, ArrangementError> {
        let lines = self
            .lines
            .iter()
            .map(LineSpec::to_line)
            .collect::<Result<Vec<_>, _>>()?;
        Arrangement::build(lines)
    }

    pub fn from_arrangement(arr: &Arrangement) -> Self {
        ArrangementFile {
            lines: arr.lines().iter().map(LineSpec::from).collect(),
        }
    }
}

/// Deserializes JSON, reporting the failing field path and position.
pub fn from_json<T: DeserializeOwned>(context: &str, text: &str) -> Result<T, ParseError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        ParseError::Json {
            context: if path == "." {
                context.to_string()
            } else {
                format!("{context} at `{path}`")
            },
            message: inner.to_string(),
        }
    })
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum InputError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    LocalSystem(#[from] LocalSystemError),
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement, InputError> {
    let file: ArrangementFile = from_json("arrangement", text)?;
    Ok(file.build()?)
}

/// Parses a local system; the classes must multiply to one.
pub fn parse_local_system(text: &str) -> Result<LocalSystem, InputError> {
    Ok(from_json("local system", text)?)
}
