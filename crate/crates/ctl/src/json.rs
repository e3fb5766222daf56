//! Versioned JSON schemas. Rationals travel as `"p/q"` strings.

use std::collections::BTreeMap;

use ctl_core::classify::ThresholdReport;
use ctl_core::fractional::{FractionalResult, KneserLabeling, Projection};
use ctl_core::rational::{parse, to_pq};
use ctl_core::stability::{Bound, Certificate, Clause, ClauseStatus, Measurement, Partition, PartitionKind};
use ctl_core::vcdim::VcDimension;
use ctl_core::Rational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::formats::to_graph6;

pub const SCHEMA: &str = "ctl/1";

fn schema() -> String {
    SCHEMA.into()
}

/// Exact rational as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_pq(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map(Q).map_err(serde::de::Error::custom)
    }
}

impl From<&Rational> for Q {
    fn from(r: &Rational) -> Self {
        Q(r.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSidecar {
    #[serde(default = "schema")]
    pub schema: String,
    pub family: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub n: usize,
    pub edges: usize,
    pub graph6: String,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub removed: Vec<Vec<usize>>,
    pub forest: Vec<usize>,
    pub independent: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdJson {
    #[serde(default = "schema")]
    pub schema: String,
    pub chi: usize,
    pub delta_chi: Q,
    pub delta_chi_f: Q,
    pub delta_chi_vc: Option<Q>,
    pub has_forest_in_m: bool,
    pub is_r_near_acyclic: bool,
    pub near_acyclic_witness: Option<WitnessJson>,
    pub decomposition_family_graph6: Vec<String>,
}

impl From<&ThresholdReport> for ThresholdJson {
    fn from(r: &ThresholdReport) -> Self {
        ThresholdJson {
            schema: schema(),
            chi: r.chi,
            delta_chi: (&r.delta_chi).into(),
            delta_chi_f: (&r.delta_chi_f).into(),
            delta_chi_vc: r.delta_chi_vc.as_ref().map(Q::from),
            has_forest_in_m: r.has_forest_in_m,
            is_r_near_acyclic: r.is_r_near_acyclic,
            near_acyclic_witness: r.near_acyclic_witness.as_ref().map(|w| WitnessJson {
                removed: w.removed.clone(),
                forest: w.remainder.forest.clone(),
                independent: w.remainder.independent.clone(),
            }),
            decomposition_family_graph6: r.decomposition_family.iter().map(to_graph6).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedSet {
    pub set: Vec<usize>,
    pub weight: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalJson {
    #[serde(default = "schema")]
    pub schema: String,
    pub value: Q,
    pub primal: Vec<WeightedSet>,
    pub dual: Vec<Q>,
}

impl From<&FractionalResult> for FractionalJson {
    fn from(f: &FractionalResult) -> Self {
        FractionalJson {
            schema: schema(),
            value: (&f.value).into(),
            primal: f
                .primal
                .iter()
                .map(|(s, w)| WeightedSet {
                    set: s.clone(),
                    weight: w.into(),
                })
                .collect(),
            dual: f.dual.iter().map(Q::from).collect(),
        }
    }
}

impl FractionalJson {
    pub fn to_core(&self) -> FractionalResult {
        FractionalResult {
            value: self.value.0.clone(),
            primal: self.primal.iter().map(|w| (w.set.clone(), w.weight.0.clone())).collect(),
            dual: self.dual.iter().map(|q| q.0.clone()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingJson {
    #[serde(default = "schema")]
    pub schema: String,
    pub a: usize,
    pub b: usize,
    pub assignment: BTreeMap<usize, Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub draws: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub replication: Option<usize>,
}

impl From<&KneserLabeling> for LabelingJson {
    fn from(l: &KneserLabeling) -> Self {
        LabelingJson {
            schema: schema(),
            a: l.a,
            b: l.b,
            assignment: l.assignment.iter().cloned().enumerate().collect(),
            draws: None,
            replication: None,
        }
    }
}

impl From<&Projection> for LabelingJson {
    fn from(p: &Projection) -> Self {
        LabelingJson {
            draws: Some(p.draws),
            replication: Some(p.replication),
            ..LabelingJson::from(&p.labeling)
        }
    }
}

impl LabelingJson {
    /// Vertices must be exactly `0..len`.
    pub fn to_core(&self) -> Result<KneserLabeling, String> {
        if let Some((i, (&v, _))) = self.assignment.iter().enumerate().find(|(i, (&v, _))| *i != v) {
            return Err(format!("assignment skips vertex {i} (next listed is {v})"));
        }
        Ok(KneserLabeling {
            a: self.a,
            b: self.b,
            assignment: self.assignment.values().cloned().collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    #[serde(default = "schema")]
    pub schema: String,
    pub kind: String,
    pub r: usize,
    pub beta: Q,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<usize>>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Vec<usize>>>,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub remainder: Option<Vec<usize>>,
    #[serde(default)]
    pub residue: Vec<usize>,
}

impl From<&Partition> for PartitionJson {
    fn from(p: &Partition) -> Self {
        let theta = p.kind == PartitionKind::ThetaStability;
        PartitionJson {
            schema: schema(),
            kind: p.kind.name().into(),
            r: p.r,
            beta: (&p.beta).into(),
            a: (!theta).then(|| p.special.clone()),
            b: (!theta).then(|| p.classes.clone()),
            s: theta.then(|| p.special.clone()),
            remainder: theta.then(|| p.classes.concat()),
            residue: p.residue.clone(),
        }
    }
}

impl PartitionJson {
    pub fn to_core(&self) -> Result<Partition, String> {
        let kind = PartitionKind::parse(&self.kind).ok_or_else(|| format!("unknown partition kind {:?}", self.kind))?;
        let (special, classes) = match kind {
            PartitionKind::ThetaStability => (
                self.s.clone().ok_or("theta partition needs \"S\"")?,
                vec![self.remainder.clone().unwrap_or_default()],
            ),
            _ => (
                self.a.clone().ok_or("partition needs \"A\"")?,
                self.b.clone().ok_or("partition needs \"B\"")?,
            ),
        };
        let mut p = Partition::new(kind, self.r, self.beta.0.clone(), special, classes);
        p.residue = self.residue.clone();
        p.residue.sort_unstable();
        Ok(p)
    }
}

/// `true`, `false` or the string `"unknown"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict(pub ClauseStatus);

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            ClauseStatus::Pass => s.serialize_bool(true),
            ClauseStatus::Fail => s.serialize_bool(false),
            ClauseStatus::Unknown => s.serialize_str("unknown"),
        }
    }
}

impl<'de> Deserialize<'de> for Verdict {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Bool(true) => Ok(Verdict(ClauseStatus::Pass)),
            serde_json::Value::Bool(false) => Ok(Verdict(ClauseStatus::Fail)),
            serde_json::Value::String(s) if s == "unknown" => Ok(Verdict(ClauseStatus::Unknown)),
            other => Err(serde::de::Error::custom(format!("bad verdict {other}"))),
        }
    }
}

/// A clause bound is `bound + bound_sqrt_beta_coef·√β`; the second key is
/// omitted when the bound is rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseJson {
    pub name: String,
    pub pass: Verdict,
    pub measured: Option<Q>,
    pub bound: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_sqrt_beta_coef: Option<Q>,
    pub detail: Option<String>,
}

impl From<&Clause> for ClauseJson {
    fn from(c: &Clause) -> Self {
        ClauseJson {
            name: c.name.clone(),
            pass: Verdict(c.status),
            measured: c.measured.as_ref().map(Q::from),
            bound: c.bound.as_ref().map(|b| Q::from(&b.offset)),
            bound_sqrt_beta_coef: c
                .bound
                .as_ref()
                .filter(|b| !b.sqrt_beta_coef.is_zero())
                .map(|b| Q::from(&b.sqrt_beta_coef)),
            detail: c.detail.clone(),
        }
    }
}

impl ClauseJson {
    pub fn to_core(&self) -> Clause {
        Clause {
            name: self.name.clone(),
            status: self.pass.0,
            measured: self.measured.as_ref().map(|q| q.0.clone()),
            bound: self.bound.as_ref().map(|b| Bound {
                offset: b.0.clone(),
                sqrt_beta_coef: self.bound_sqrt_beta_coef.as_ref().map_or_else(Rational::zero, |q| q.0.clone()),
            }),
            detail: self.detail.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasurementJson {
    pub name: String,
    pub value: Option<Q>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    #[serde(default = "schema")]
    pub schema: String,
    pub kind: String,
    pub r: usize,
    pub beta: Q,
    pub clauses: Vec<ClauseJson>,
    pub measurements: Vec<MeasurementJson>,
    pub notes: Vec<String>,
    pub overall: bool,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            schema: schema(),
            kind: c.kind.name().into(),
            r: c.r,
            beta: (&c.beta).into(),
            clauses: c.clauses.iter().map(ClauseJson::from).collect(),
            measurements: c
                .measurements
                .iter()
                .map(|m| MeasurementJson {
                    name: m.name.clone(),
                    value: m.value.as_ref().map(Q::from),
                    detail: m.detail.clone(),
                })
                .collect(),
            notes: c.notes.clone(),
            overall: c.overall,
        }
    }
}

impl CertificateJson {
    pub fn to_core(&self) -> Result<Certificate, String> {
        Ok(Certificate {
            kind: PartitionKind::parse(&self.kind).ok_or_else(|| format!("unknown kind {:?}", self.kind))?,
            r: self.r,
            beta: self.beta.0.clone(),
            clauses: self.clauses.iter().map(ClauseJson::to_core).collect(),
            measurements: self
                .measurements
                .iter()
                .map(|m| Measurement {
                    name: m.name.clone(),
                    value: m.value.as_ref().map(|q| q.0.clone()),
                    detail: m.detail.clone(),
                })
                .collect(),
            notes: self.notes.clone(),
            overall: self.overall,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VcJson {
    #[serde(default = "schema")]
    pub schema: String,
    pub dimension: usize,
    pub witness: Vec<usize>,
    pub complete: bool,
}

impl From<&VcDimension> for VcJson {
    fn from(v: &VcDimension) -> Self {
        VcJson {
            schema: schema(),
            dimension: v.dimension,
            witness: v.witness.clone(),
            complete: v.complete,
        }
    }
}

/// Output of `invariant`: the value plus invariant-specific detail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantJson {
    #[serde(default = "schema")]
    pub schema: String,
    pub invariant: String,
    pub value: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

/// Compact JSON with a trailing newline.
pub fn emit<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("schemas serialize infallibly");
    s.push('\n');
    s
}
