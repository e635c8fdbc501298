//! Flat `key = value` suite configuration.
//!
//! ```text
//! # comment
//! fields  = GF(2), GF(3), Q
//! types   = orthogonal, symplectic
//! degrees = 2, 4
//! seed    = 7
//! suites  = cap2-form, prop-neat
//! budget.search = 100000
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use neatalg::field::FieldSpec;
use serde::{Deserialize, Serialize};

use crate::error::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TypeName {
    Orthogonal,
    Symplectic,
    /// M_d(K) with a hermitian form, K a quadratic field extension.
    Unitary,
    /// The switch model A₀ × A₀^op.
    UnitaryInner,
}

impl TypeName {
    pub const ALL: [TypeName; 4] = [
        TypeName::Orthogonal,
        TypeName::Symplectic,
        TypeName::Unitary,
        TypeName::UnitaryInner,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TypeName::Orthogonal => "orthogonal",
            TypeName::Symplectic => "symplectic",
            TypeName::Unitary => "unitary",
            TypeName::UnitaryInner => "unitary-inner",
        }
    }

    pub fn realizable(self, degree: usize) -> bool {
        degree > 0 && (self != TypeName::Symplectic || degree.is_multiple_of(2))
    }
}

impl fmt::Display for TypeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TypeName {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TypeName::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| HarnessError::Config(format!("unknown involution type `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SuiteName {
    #[serde(rename = "prop-neat")]
    PropNeat,
    #[serde(rename = "lem-PC")]
    LemPc,
    #[serde(rename = "keepstype")]
    KeepsType,
    #[serde(rename = "capmaxdim")]
    CapMaxDim,
    #[serde(rename = "cap2-form")]
    Cap2Form,
    #[serde(rename = "neat-ext")]
    NeatExt,
    #[serde(rename = "neatquad")]
    NeatQuad,
    #[serde(rename = "biquadratic")]
    Biquadratic,
    #[serde(rename = "albert-rowen")]
    AlbertRowen,
    #[serde(rename = "springer")]
    Springer,
}

impl SuiteName {
    pub const ALL: [SuiteName; 10] = [
        SuiteName::PropNeat,
        SuiteName::LemPc,
        SuiteName::KeepsType,
        SuiteName::CapMaxDim,
        SuiteName::Cap2Form,
        SuiteName::NeatExt,
        SuiteName::NeatQuad,
        SuiteName::Biquadratic,
        SuiteName::AlbertRowen,
        SuiteName::Springer,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::PropNeat => "prop-neat",
            SuiteName::LemPc => "lem-PC",
            SuiteName::KeepsType => "keepstype",
            SuiteName::CapMaxDim => "capmaxdim",
            SuiteName::Cap2Form => "cap2-form",
            SuiteName::NeatExt => "neat-ext",
            SuiteName::NeatQuad => "neatquad",
            SuiteName::Biquadratic => "biquadratic",
            SuiteName::AlbertRowen => "albert-rowen",
            SuiteName::Springer => "springer",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteName::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| HarnessError::Config(format!("unknown suite `{s}`")))
    }
}

/// Per-operation sample counts and search budgets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Samples for random searches over spaces too large to enumerate.
    pub search: u64,
    /// Random elements per instance for the doubling identities.
    pub pc: u64,
    /// Random Symd(s) elements per instance for the determinant identity.
    pub det: u64,
    /// Random subalgebras per instance in prop-neat and neat-ext.
    pub subalgebras: u64,
    /// Planted cubics per field.
    pub springer: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            search: neatalg::search::DEFAULT_BUDGET,
            pc: 20,
            det: 200,
            subalgebras: 5,
            springer: 100,
        }
    }
}

impl Budgets {
    fn set(&mut self, key: &str, v: u64) -> Result<(), HarnessError> {
        let slot = match key {
            "search" => &mut self.search,
            "pc" => &mut self.pc,
            "det" => &mut self.det,
            "subalgebras" => &mut self.subalgebras,
            "springer" => &mut self.springer,
            _ => return Err(HarnessError::Config(format!("unknown budget `{key}`"))),
        };
        *slot = v;
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub fields: Vec<FieldSpec>,
    pub types: Vec<TypeName>,
    pub degrees: Vec<usize>,
    pub seed: u64,
    pub budgets: Budgets,
    pub suites: Vec<SuiteName>,
}

fn list(v: &str) -> impl Iterator<Item = &str> {
    v.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn number<T: FromStr>(key: &str, v: &str) -> Result<T, HarnessError> {
    v.trim()
        .parse()
        .map_err(|_| HarnessError::Config(format!("`{key}`: cannot parse `{}`", v.trim())))
}

impl SuiteConfig {
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        let mut cfg = SuiteConfig::default();
        let mut seen = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| HarnessError::Config(format!("line {}: expected `key = value`", n + 1)))?;
            let key = key.trim();
            if seen.insert(key.to_string(), n + 1).is_some() {
                return Err(HarnessError::Config(format!("line {}: duplicate key `{key}`", n + 1)));
            }
            match key {
                "fields" => {
                    cfg.fields = list(value)
                        .map(|s| FieldSpec::parse(s).map_err(|e| HarnessError::Config(e.to_string())))
                        .collect::<Result<_, _>>()?
                }
                "types" => cfg.types = list(value).map(str::parse).collect::<Result<_, _>>()?,
                "degrees" => cfg.degrees = list(value).map(|s| number(key, s)).collect::<Result<_, _>>()?,
                "seed" => cfg.seed = number(key, value)?,
                "suites" => cfg.suites = list(value).map(str::parse).collect::<Result<_, _>>()?,
                _ => match key.strip_prefix("budget.") {
                    Some(b) => cfg.budgets.set(b, number(key, value)?)?,
                    None => return Err(HarnessError::Config(format!("line {}: unknown key `{key}`", n + 1))),
                },
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Rejects unrealizable (type, degree) pairs.
    pub fn validate(&self) -> Result<(), HarnessError> {
        for &t in &self.types {
            for &d in &self.degrees {
                if !t.realizable(d) {
                    return Err(HarnessError::Config(format!("type {t} is not realizable in degree {d}")));
                }
            }
        }
        Ok(())
    }

    /// The instance grid in field-major order.
    pub fn grid(&self) -> Vec<GridPoint> {
        let mut out = Vec::new();
        for field in &self.fields {
            for &ty in &self.types {
                for &degree in &self.degrees {
                    out.push(GridPoint {
                        field: field.clone(),
                        ty,
                        degree,
                    });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPoint {
    pub field: FieldSpec,
    #[serde(rename = "type")]
    pub ty: TypeName,
    pub degree: usize,
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.field.short_name(), self.ty, self.degree)
    }
}
