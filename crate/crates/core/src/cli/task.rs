//! Task documents: the JSON inputs accepted by `hypcert`.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::engine::{LinearSubspace, Sampler};
use crate::kernel::rat::{fmt_rat, parse_rat};
use crate::kernel::{BinaryForm, MPoly, Rat};
use crate::{Error, Result};

/// A rational written either as a JSON integer or as text such as `"-7/2"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatText(pub Rat);

impl Serialize for RatText {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            if let Ok(n) = self.0.to_integer().to_string().parse::<i64>() {
                return s.serialize_i64(n);
            }
        }
        s.serialize_str(&fmt_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RatText;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a rational string like \"-7/2\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RatText, E> {
                Ok(RatText(crate::kernel::rat::int(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RatText, E> {
                i64::try_from(v).map(|v| RatText(crate::kernel::rat::int(v))).map_err(E::custom)
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RatText, E> {
                parse_rat(v).map(RatText).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

pub fn rats(v: &[RatText]) -> Vec<Rat> {
    v.iter().map(|r| r.0.clone()).collect()
}

/// A linear subspace given by spanning points or by defining linear forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceSpec {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<Vec<RatText>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub forms: Vec<Vec<RatText>>,
}

impl SubspaceSpec {
    pub fn build(&self, nvars: usize) -> Result<LinearSubspace> {
        let rows = |m: &[Vec<RatText>]| m.iter().map(|r| rats(r)).collect::<Vec<_>>();
        match (self.points.is_empty(), self.forms.is_empty()) {
            (false, true) => LinearSubspace::from_points(nvars, &rows(&self.points)),
            (true, false) => LinearSubspace::from_forms(nvars, &rows(&self.forms)),
            _ => Err(Error::Task("a subspace needs exactly one of `points` or `forms`".into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RestrictionSpec {
    pub center: SubspaceSpec,
    /// Each point `p` gives the section by `E' = E + p`.
    pub through: Vec<Vec<RatText>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SocleSpec {
    /// All points of `Spec A`, in affine coordinates.
    pub points: Vec<Vec<RatText>>,
    /// An element of the radical that is not in the ideal.
    pub f: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CheckerSpec {
    Hypersurface {
        e: Vec<RatText>,
        #[serde(default)]
        sampler: Sampler,
    },
    Curve {
        /// `param[i][k]`: the form of coordinate `i` multiplying `t^k`.
        param: Vec<Vec<String>>,
        degree: usize,
        center: SubspaceSpec,
    },
    Variety {
        center: SubspaceSpec,
        degree: usize,
        #[serde(default)]
        sampler: Sampler,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlotValues {
    pub var: usize,
    pub values: Vec<RatText>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Task {
    CheckHypersurface {
        poly: String,
        nvars: usize,
        e: Vec<RatText>,
        #[serde(default)]
        sampler: Sampler,
    },
    CheckCurve {
        /// One binary form in `x0 = s`, `x1 = t` per coordinate.
        forms: Vec<String>,
        degree: usize,
        center: SubspaceSpec,
    },
    Quadric {
        poly: String,
        nvars: usize,
        e: Vec<RatText>,
    },
    Bezout {
        p: String,
        q: String,
        degree: usize,
    },
    Hermite {
        /// A univariate polynomial in `x0`.
        poly: String,
    },
    Nuij {
        poly: String,
        nvars: usize,
        e: Vec<RatText>,
        s: RatText,
        #[serde(default)]
        sampler: Sampler,
    },
    Distract {
        ideal: String,
        nvars: usize,
        k: usize,
        /// Explicit `t_{ij}`; drawn from `seed` when absent.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        assignment: Option<Vec<SlotValues>>,
        #[serde(default)]
        seed: u64,
    },
    Tighten {
        /// Components separated by `;`, e.g. `"(x2 - x0, x3); (x2, x3 - x0)"`.
        fan: String,
        nvars: usize,
        k: usize,
        #[serde(default = "default_budget")]
        mu_budget: usize,
    },
    Nstar {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        fan: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ideal: Option<String>,
        nvars: usize,
        #[serde(default)]
        k: usize,
    },
    DeformCheck {
        nvars: usize,
        generators: Vec<String>,
        /// Explicit images `φ(g_i)`, one list per deformation.
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        deformations: Vec<Vec<String>>,
        /// Families `g_i(t)`; `families[f][i][k]` multiplies `t^k` and `φ` is the `t^1` part.
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        families: Vec<Vec<Vec<String>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        restriction: Option<RestrictionSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        socle: Option<SocleSpec>,
        /// Parameters at which each univariate family fiber gets a Sturm count.
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        fiber_sturm: Vec<RatText>,
    },
    FamilyScan {
        nvars: usize,
        /// `generators[i][k]` multiplies `t^k`.
        generators: Vec<Vec<String>>,
        checker: CheckerSpec,
        t: Vec<RatText>,
    },
    /// Reference data that has no computational content here.
    Metadata {
        summary: String,
    },
    Suite {
        tasks: Vec<TaskDocument>,
    },
}

fn default_budget() -> usize {
    crate::fanlab::DEFAULT_MU_BUDGET
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    /// Marks corpus items that are only sampled, never certified.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub extended: bool,
    pub task: Task,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

impl TaskDocument {
    pub fn new(task: Task) -> Self {
        TaskDocument { name: None, description: None, extended: false, task, output: None }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Task(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("task documents serialize")
    }
}

impl Task {
    pub fn kind(&self) -> &'static str {
        match self {
            Task::CheckHypersurface { .. } => "check_hypersurface",
            Task::CheckCurve { .. } => "check_curve",
            Task::Quadric { .. } => "quadric",
            Task::Bezout { .. } => "bezout",
            Task::Hermite { .. } => "hermite",
            Task::Nuij { .. } => "nuij",
            Task::Distract { .. } => "distract",
            Task::Tighten { .. } => "tighten",
            Task::Nstar { .. } => "nstar",
            Task::DeformCheck { .. } => "deform_check",
            Task::FamilyScan { .. } => "family_scan",
            Task::Metadata { .. } => "metadata",
            Task::Suite { .. } => "suite",
        }
    }

    /// The sampler seed, when the task draws random samples.
    pub fn seed(&self) -> Option<u64> {
        match self {
            Task::CheckHypersurface { sampler, .. } | Task::Nuij { sampler, .. } => Some(sampler.seed),
            Task::Distract { assignment: None, seed, .. } => Some(*seed),
            Task::FamilyScan { checker: CheckerSpec::Hypersurface { sampler, .. } | CheckerSpec::Variety { sampler, .. }, .. } => {
                Some(sampler.seed)
            }
            _ => None,
        }
    }
}

pub fn poly(s: &str, nvars: usize) -> Result<MPoly> {
    MPoly::parse(s, nvars)
}

pub fn polys(v: &[String], nvars: usize) -> Result<Vec<MPoly>> {
    v.iter().map(|s| poly(s, nvars)).collect()
}

pub fn binary(s: &str, degree: usize) -> Result<BinaryForm> {
    BinaryForm::parse(s, degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_fields_rejected() {
        let ok = r#"{"task": {"kind": "quadric", "poly": "x0^2 - x1^2", "nvars": 2, "e": [1, 0]}}"#;
        assert!(TaskDocument::from_json(ok).is_ok());
        let extra_inner = r#"{"task": {"kind": "quadric", "poly": "x0^2", "nvars": 2, "e": [1, 0], "colour": 1}}"#;
        assert!(TaskDocument::from_json(extra_inner).is_err());
        let extra_outer = r#"{"task": {"kind": "quadric", "poly": "x0^2", "nvars": 2, "e": [1, 0]}, "x": 0}"#;
        assert!(TaskDocument::from_json(extra_outer).is_err());
        let sampler = r#"{"task": {"kind": "check_hypersurface", "poly": "x0^2", "nvars": 2, "e": [1, 0],
            "sampler": {"kind": "random", "count": 5, "seed": 1, "extra": 2}}}"#;
        assert!(TaskDocument::from_json(sampler).is_err());
    }

    #[test]
    fn round_trip() {
        let text = r#"{"name": "n", "task": {"kind": "nuij", "poly": "x0^2 - x1^2", "nvars": 2, "e": [1, "1/2"], "s": "1/4"}}"#;
        let doc = TaskDocument::from_json(text).unwrap();
        assert_eq!(TaskDocument::from_json(&doc.to_json()).unwrap(), doc);
        assert_eq!(doc.task.seed(), Some(0));
    }
}
