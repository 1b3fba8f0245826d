//! Exact verification of the polynomial, number and Laurent identities the
//! closed forms rest on.
//!
//! Every check builds both sides in exact arithmetic and reports the
//! residual; PASS means it is identically zero.

mod common;
mod generating;
mod laurent;
mod numbers;
mod reduction;
mod report;
mod suite;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use generating::check_generating_identity;
pub use laurent::check_laurent_lemma;
pub use numbers::check_number_identity;
pub use reduction::check_reduction_lemma;
pub use report::{params, CheckReport, CheckStatus, Params};
pub use suite::{default_sweep, run_suite, SuiteLimits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("{identity}: parameter {name} = {value} out of range ({range})")]
    ParamOutOfRange { identity: &'static str, name: &'static str, value: i64, range: String },
    #[error("{identity}: missing parameter {name}")]
    MissingParam { identity: &'static str, name: &'static str },
}

impl IdentityError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::UnknownIdentity(_) => "UNKNOWN_IDENTITY",
            Self::ParamOutOfRange { .. } | Self::MissingParam { .. } => "PARAM_OUT_OF_RANGE",
        }
    }
}

/// Which checker handles an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityGroup {
    Generating,
    Number,
    Reduction,
    Laurent,
}

macro_rules! identity_ids {
    ($($v:ident => $tag:literal, $g:ident;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($v,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$v,)*];

            pub fn tag(&self) -> &'static str {
                match self {
                    $(IdentityId::$v => $tag,)*
                }
            }

            pub fn group(&self) -> IdentityGroup {
                match self {
                    $(IdentityId::$v => IdentityGroup::$g,)*
                }
            }
        }
    };
}

identity_ids! {
    SumShift => "SUM_SHIFT", Generating;
    Reflection => "REFLECTION", Generating;
    OrderDrop => "ORDER_DROP", Generating;
    OddZero => "ODD_ZERO", Generating;
    AlphaLower => "ALPHA_LOWER", Generating;
    BinomSumZero => "BINOM_SUM_ZERO", Generating;
    ProdZeros => "PROD_ZEROS", Generating;
    Dprod => "DPROD", Generating;
    Deriv => "DERIV", Generating;
    Bidentity => "BIDENTITY", Number;
    StirlingRel => "STIRLING_REL", Number;
    TanBernoulli => "TAN_BERNOULLI", Number;
    SinhGenb => "SINH_GENB", Number;
    EulerAtZero => "EULER_AT_ZERO", Number;
    EulerExplicit => "EULER_EXPLICIT", Number;
    Reduced1 => "REDUCED_1", Reduction;
    Reduced2 => "REDUCED_2", Reduction;
    Reduced3 => "REDUCED_3", Reduction;
    Coeffx => "COEFFX", Reduction;
    Stir => "STIR", Reduction;
    XmSquared => "XM_SQUARED", Reduction;
    Prepprep => "PREPPREP", Laurent;
    Middletermprep => "MIDDLETERMPREP", Laurent;
    Firstterm => "FIRSTTERM", Laurent;
    Lastterm => "LASTTERM", Laurent;
    Middleterm => "MIDDLETERM", Laurent;
    Oddeven => "ODDEVEN", Laurent;
    Lastprop => "LASTPROP", Laurent;
    BridgeEvenOdd => "BRIDGE_EVEN_ODD", Laurent;
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .iter()
            .copied()
            .find(|id| id.tag() == s)
            .ok_or_else(|| IdentityError::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Run one identity instance through the checker for its group.
pub fn check(id: IdentityId, p: &Params) -> Result<CheckReport, IdentityError> {
    match id.group() {
        IdentityGroup::Generating => check_generating_identity(id, p),
        IdentityGroup::Number => check_number_identity(id, p),
        IdentityGroup::Reduction => check_reduction_lemma(id, p),
        IdentityGroup::Laurent => check_laurent_lemma(id, p),
    }
}
