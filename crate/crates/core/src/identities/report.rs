use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Named integer parameters of one check, ordered by name.
pub type Params = BTreeMap<String, i64>;

/// Build a [`Params`] map from `(name, value)` pairs.
pub fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::Skipped => "SKIPPED",
        })
    }
}

/// Outcome of one identity instance.
///
/// `variant` is set when the displayed form fails and a corrected reading
/// was checked instead; `status` then refers to the variant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub identity: String,
    pub params: Params,
    pub status: CheckStatus,
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
}

impl CheckReport {
    pub fn pass(identity: impl Into<String>, params: Params) -> Self {
        Self { identity: identity.into(), params, status: CheckStatus::Pass, residual: None, variant: None }
    }

    pub fn fail(identity: impl Into<String>, params: Params, residual: impl Into<String>) -> Self {
        Self {
            identity: identity.into(),
            params,
            status: CheckStatus::Fail,
            residual: Some(residual.into()),
            variant: None,
        }
    }

    /// PASS when `residual` is `None`, FAIL with its rendering otherwise.
    pub fn from_residual(identity: impl Into<String>, params: Params, residual: Option<String>) -> Self {
        match residual {
            None => Self::pass(identity, params),
            Some(r) => Self::fail(identity, params, r),
        }
    }

    pub fn with_variant(mut self, variant: impl Into<String>) -> Self {
        self.variant = Some(variant.into());
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{:<16} {:<28} {}", self.identity, ps.join(","), self.status)?;
        if let Some(v) = &self.variant {
            write!(f, " [{v}]")?;
        }
        if let Some(r) = &self.residual {
            write!(f, " residual: {r}")?;
        }
        Ok(())
    }
}
