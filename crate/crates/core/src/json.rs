//! JSON interchange formats.
//!
//! Polynomials:
//! `{"m": 3, "vars": ["x0", .., "y3"], "terms": [{"exps": [..], "coef": {"e12": "3/2"}}]}`
//! with terms in ascending graded-lex order. Axial functions:
//! `{"terms": [{"a": 0, "b": 2, "c": 0, "d": 0, "coef": "-1"}]}`. Job
//! descriptors and results are documented on [`JobSpec`] and [`ResultDoc`].

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::axial::{
    quadruple_from_separable, quadruple_from_two_variable, AxialFunction, HolomorphicQuadruple,
};
use crate::clifford::{AlgebraContext, Blade, Multivector, Scalar};
use crate::error::{Error, Result};
use crate::fueter::{FueterJob, FueterResult};
use crate::generators::{biregular_poly, default_indices, BiregularPoly};
use crate::mvpoly::{CliffPoly, Monomial, VarId};

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

/// `"p/q"`, or `"p"` when the denominator is 1.
pub fn scalar_to_string(q: &Scalar) -> String {
    q.to_string()
}

pub fn scalar_from_str(s: &str) -> Result<Scalar> {
    if s.contains(['.', 'e', 'E']) {
        return Err(Error::Parse(format!(
            "rational {s:?} must not be in decimal form"
        )));
    }
    Scalar::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

pub fn var_names(m: usize) -> Vec<String> {
    (0..=m)
        .map(|i| VarId::x(i).name())
        .chain((0..=m).map(|i| VarId::y(i).name()))
        .collect()
}

pub fn multivector_to_map(a: &Multivector) -> BTreeMap<String, String> {
    a.terms()
        .map(|(b, q)| (b.key(), scalar_to_string(q)))
        .collect()
}

pub fn multivector_from_map(
    ctx: AlgebraContext,
    map: &BTreeMap<String, String>,
) -> Result<Multivector> {
    let terms = map
        .iter()
        .map(|(k, v)| Ok((Blade::parse_key(k)?, scalar_from_str(v)?)))
        .collect::<Result<Vec<_>>>()?;
    Multivector::from_terms(ctx, terms).map_err(parse_err)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyTermDoc {
    pub exps: Vec<u32>,
    pub coef: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDoc {
    pub m: usize,
    pub vars: Vec<String>,
    pub terms: Vec<PolyTermDoc>,
}

impl PolyDoc {
    pub fn from_poly(p: &CliffPoly) -> Self {
        let nvars = p.nvars();
        Self {
            m: p.m(),
            vars: var_names(p.m()),
            terms: p
                .terms()
                .map(|(mono, c)| PolyTermDoc {
                    exps: mono.exponents(nvars).iter().map(|e| *e as u32).collect(),
                    coef: multivector_to_map(c),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<CliffPoly> {
        let ctx = AlgebraContext::new(self.m).map_err(parse_err)?;
        if self.vars != var_names(self.m) {
            return Err(Error::Parse(format!(
                "vars must be {:?}",
                var_names(self.m)
            )));
        }
        let nvars = 2 * (self.m + 1);
        let terms = self
            .terms
            .iter()
            .map(|t| {
                if t.exps.len() != nvars {
                    return Err(Error::Parse(format!(
                        "exps has length {}, expected {nvars}",
                        t.exps.len()
                    )));
                }
                Ok((
                    Monomial::from_exponents(&t.exps)?,
                    multivector_from_map(ctx, &t.coef)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        CliffPoly::from_terms(ctx, terms).map_err(parse_err)
    }
}

pub fn poly_to_value(p: &CliffPoly) -> Value {
    serde_json::to_value(PolyDoc::from_poly(p)).expect("serializable")
}

pub fn poly_to_string(p: &CliffPoly) -> String {
    serde_json::to_string_pretty(&PolyDoc::from_poly(p)).expect("serializable")
}

pub fn poly_from_str(s: &str) -> Result<CliffPoly> {
    let doc: PolyDoc = serde_json::from_str(s).map_err(parse_err)?;
    doc.to_poly()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxialTermDoc {
    pub a: i32,
    pub b: i32,
    pub c: i32,
    pub d: i32,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxialDoc {
    pub terms: Vec<AxialTermDoc>,
}

impl AxialDoc {
    pub fn from_axial(f: &AxialFunction) -> Self {
        Self {
            terms: f
                .terms()
                .map(|(e, q)| AxialTermDoc {
                    a: e[0],
                    b: e[1],
                    c: e[2],
                    d: e[3],
                    coef: scalar_to_string(q),
                })
                .collect(),
        }
    }

    pub fn to_axial(&self) -> Result<AxialFunction> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(([t.a, t.b, t.c, t.d], scalar_from_str(&t.coef)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(AxialFunction::from_terms(terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadrupleDoc {
    pub u1: AxialDoc,
    pub v1: AxialDoc,
    pub u2: AxialDoc,
    pub v2: AxialDoc,
    pub parity_ok: bool,
}

impl QuadrupleDoc {
    pub fn from_quadruple(q: &HolomorphicQuadruple) -> Self {
        Self {
            u1: AxialDoc::from_axial(q.u1()),
            v1: AxialDoc::from_axial(q.v1()),
            u2: AxialDoc::from_axial(q.u2()),
            v2: AxialDoc::from_axial(q.v2()),
            parity_ok: q.parity_ok(),
        }
    }

    /// Re-certifies the CR systems; `parity_ok` is recomputed, not trusted.
    pub fn to_quadruple(&self) -> Result<HolomorphicQuadruple> {
        HolomorphicQuadruple::new(
            self.u1.to_axial()?,
            self.v1.to_axial()?,
            self.u2.to_axial()?,
            self.v2.to_axial()?,
        )
    }
}

/// `{"left": [j, ..], "right": [j, ..]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl GeneratorDoc {
    pub fn build(&self, m: usize) -> Result<BiregularPoly> {
        biregular_poly(&self.left, &self.right, m)
    }

    pub fn default_for(k: usize, l: usize, m: usize) -> Self {
        Self {
            left: default_indices(k, m),
            right: default_indices(l, m),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeparableDoc {
    pub n: u32,
    pub p: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoVariableDoc {
    pub u: AxialDoc,
    pub v: AxialDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitDoc {
    pub u1: AxialDoc,
    pub v1: AxialDoc,
    pub u2: AxialDoc,
    pub v2: AxialDoc,
}

/// `{"separable": {"n", "p"}}`, `{"two_variable": {"u", "v"}}` or
/// `{"explicit": {"u1", "v1", "u2", "v2"}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum QuadSpec {
    Separable(SeparableDoc),
    TwoVariable(TwoVariableDoc),
    Explicit(ExplicitDoc),
}

impl QuadSpec {
    pub fn build(&self) -> Result<HolomorphicQuadruple> {
        match self {
            QuadSpec::Separable(s) => Ok(quadruple_from_separable(s.n, s.p)),
            QuadSpec::TwoVariable(t) => {
                quadruple_from_two_variable(&t.u.to_axial()?, &t.v.to_axial()?)
            }
            QuadSpec::Explicit(e) => HolomorphicQuadruple::new(
                e.u1.to_axial()?,
                e.v1.to_axial()?,
                e.u2.to_axial()?,
                e.v2.to_axial()?,
            ),
        }
    }
}

/// `{"m": 3, "k": 1, "l": 0, "quad": {...}, "P": {"left": [2], "right": []}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub m: usize,
    pub k: usize,
    pub l: usize,
    pub quad: QuadSpec,
    #[serde(rename = "P")]
    pub p: GeneratorDoc,
}

impl JobSpec {
    /// Key `m{m}_k{k}_l{l}_...` identifying the job in reports and file names.
    pub fn key(&self) -> String {
        let quad = match &self.quad {
            QuadSpec::Separable(s) => format!("n{}_p{}", s.n, s.p),
            QuadSpec::TwoVariable(_) => "two_variable".to_owned(),
            QuadSpec::Explicit(_) => "explicit".to_owned(),
        };
        format!("m{}_k{}_l{}_{quad}", self.m, self.k, self.l)
    }

    pub fn build(&self) -> Result<FueterJob> {
        if self.p.left.len() != self.k || self.p.right.len() != self.l {
            return Err(Error::BidegreeMismatch(format!(
                "P has bidegree ({}, {}) but the job says (k, l) = ({}, {})",
                self.p.left.len(),
                self.p.right.len(),
                self.k,
                self.l
            )));
        }
        crate::axial::fueter_orders(self.k, self.l, self.m)?;
        FueterJob::new(self.m, self.quad.build()?, self.p.build(self.m)?)
    }
}

/// `{"m": [..], "k": [..], "l": [..], "n": [..], "p": [..], "P": {...}}`.
/// Without `"P"` each `(k, l)` uses [`GeneratorDoc::default_for`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub m: Vec<usize>,
    pub k: Vec<usize>,
    pub l: Vec<usize>,
    pub n: Vec<u32>,
    pub p: Vec<u32>,
    #[serde(rename = "P", default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorDoc>,
}

impl GridSpec {
    /// Every job of the grid in `(m, k, l, n, p)` order.
    pub fn jobs(&self) -> Vec<JobSpec> {
        let mut out = Vec::new();
        for &m in &self.m {
            for &k in &self.k {
                for &l in &self.l {
                    for &n in &self.n {
                        for &p in &self.p {
                            out.push(JobSpec {
                                m,
                                k,
                                l,
                                quad: QuadSpec::Separable(SeparableDoc { n, p }),
                                p: self
                                    .generator
                                    .clone()
                                    .unwrap_or_else(|| GeneratorDoc::default_for(k, l, m)),
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JobFile {
    Single(JobSpec),
    Grid(GridSpec),
}

impl JobFile {
    pub fn parse(s: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(s).map_err(parse_err)?;
        let is_grid = value.get("m").is_some_and(Value::is_array);
        if is_grid {
            Ok(JobFile::Grid(
                serde_json::from_value(value).map_err(parse_err)?,
            ))
        } else {
            Ok(JobFile::Single(
                serde_json::from_value(value).map_err(parse_err)?,
            ))
        }
    }

    pub fn jobs(&self) -> Vec<JobSpec> {
        match self {
            JobFile::Single(j) => vec![j.clone()],
            JobFile::Grid(g) => g.jobs(),
        }
    }
}

/// Certified output of one job.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDoc {
    pub m: usize,
    pub k: usize,
    pub l: usize,
    pub quad: QuadSpec,
    #[serde(rename = "P")]
    pub p: GeneratorDoc,
    pub constant: String,
    pub direct: PolyDoc,
    pub closed_form: PolyDoc,
    pub biregular: bool,
}

impl ResultDoc {
    pub fn new(spec: &JobSpec, result: &FueterResult) -> Self {
        Self {
            m: spec.m,
            k: spec.k,
            l: spec.l,
            quad: spec.quad.clone(),
            p: spec.p.clone(),
            constant: result.constant.to_string(),
            direct: PolyDoc::from_poly(&result.direct),
            closed_form: PolyDoc::from_poly(&result.closed_form),
            biregular: result.is_biregular(),
        }
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
