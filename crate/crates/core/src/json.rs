//! JSON descriptions of spaces, paths, categories, planes, w-spaces and
//! quadratic irrationals.
//!
//! Weights and coordinates are exact strings: `"3"`, `"2/3"`, `"inf"`.
//! Parse failures name the offending field as a path such as `holes[0][2]`.

use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Map, Value};

use crate::dmetric::{FiniteDeltaSpace, PointRelation};
use crate::error::{Error, ParseError, Result};
use crate::fundcat::{Cover, HoledPlane, Rect};
use crate::paths::{AnalyticModel, BaseModel, ChainPath, PLPath};
use crate::rotation::{Generator, QuadraticIrrational};
use crate::wcat::{FiniteWeightedCategory, Morphism};
use crate::weight::{format_rational, parse_rational, ExtWeight, Rational};
use crate::wspace::{wspace_product, wspace_quotient, wspace_sum, wspace_tensor, sp_of, ChainWSpace, WalkWeight};

/// Values with a JSON description that re-parses to an equal value.
pub trait Json: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

/// Parses JSON text into a value.
pub fn parse<T: Json>(text: &str) -> Result<T> {
    let v: Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    T::from_json(&v)
}

/// A JSON node together with its path from the root, for error messages.
#[derive(Clone, Copy)]
struct At<'a> {
    v: &'a Value,
    path: &'a str,
}

struct Owned<'a> {
    v: &'a Value,
    path: String,
}

impl<'a> Owned<'a> {
    fn at(&self) -> At<'_> {
        At { v: self.v, path: &self.path }
    }
}

impl<'a> At<'a> {
    fn root(v: &'a Value) -> Self {
        At { v, path: "" }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let field = if self.path.is_empty() { "(root)".to_string() } else { self.path.to_string() };
        ParseError::field(field, message).into()
    }

    fn child(&self, name: &str) -> String {
        if self.path.is_empty() {
            name.to_string()
        } else {
            format!("{}.{name}", self.path)
        }
    }

    fn get(&self, name: &str) -> Result<Owned<'a>> {
        self.opt(name).ok_or_else(|| {
            let path = self.child(name);
            ParseError::field(path, "missing").into()
        })
    }

    fn opt(&self, name: &str) -> Option<Owned<'a>> {
        let v = self.v.as_object()?.get(name)?;
        if v.is_null() {
            return None;
        }
        Some(Owned { v, path: self.child(name) })
    }

    fn items(&self) -> Result<Vec<Owned<'a>>> {
        let arr = self.v.as_array().ok_or_else(|| self.err("expected an array"))?;
        Ok(arr.iter().enumerate().map(|(i, v)| Owned { v, path: format!("{}[{i}]", self.path) }).collect())
    }

    fn str(&self) -> Result<&'a str> {
        self.v.as_str().ok_or_else(|| self.err("expected a string"))
    }

    fn strings(&self) -> Result<Vec<String>> {
        self.items()?.iter().map(|x| x.at().str().map(str::to_string)).collect()
    }

    fn rational(&self) -> Result<Rational> {
        match self.v {
            Value::String(s) => parse_rational(s).map_err(|e| self.err(e.to_string())),
            Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().expect("i64").into())),
            _ => Err(self.err("expected an exact rational string")),
        }
    }

    fn rationals(&self) -> Result<Vec<Rational>> {
        self.items()?.iter().map(|x| x.at().rational()).collect()
    }

    fn weight(&self) -> Result<ExtWeight> {
        match self.v {
            Value::String(s) => s.parse().map_err(|e: ParseError| self.err(e.to_string())),
            Value::Number(_) => ExtWeight::finite(self.rational()?).ok_or_else(|| self.err("weights must be nonnegative")),
            _ => Err(self.err("expected a weight string")),
        }
    }

    fn int(&self) -> Result<i64> {
        self.v.as_i64().ok_or_else(|| self.err("expected an integer"))
    }

    fn usize(&self) -> Result<usize> {
        self.v.as_u64().and_then(|n| usize::try_from(n).ok()).ok_or_else(|| self.err("expected a nonnegative integer"))
    }

    fn bool(&self) -> Result<bool> {
        self.v.as_bool().ok_or_else(|| self.err("expected true or false"))
    }

    fn index_in(&self, labels: &[String]) -> Result<usize> {
        let s = self.str()?;
        labels.iter().position(|l| l == s).ok_or_else(|| self.err(format!("unknown label `{s}`")))
    }
}

fn rat(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn weight(w: &ExtWeight) -> Value {
    Value::String(w.to_string())
}

fn rect_json(r: &Rect) -> Value {
    json!([rat(&r.x0), rat(&r.y0), rat(&r.x1), rat(&r.y1)])
}

fn rect_from(a: At) -> Result<Rect> {
    let c = a.rationals()?;
    if c.len() != 4 {
        return Err(a.err("a rectangle is [x0, y0, x1, y1]"));
    }
    let [x0, y0, x1, y1]: [Rational; 4] = c.try_into().expect("length 4");
    Rect::new(x0, y0, x1, y1).map_err(|e| a.err(e.to_string()))
}

fn label_pairs(a: At, labels: &[String]) -> Result<Vec<(usize, usize)>> {
    a.items()?
        .iter()
        .map(|p| {
            let ends = p.at().items()?;
            if ends.len() != 2 {
                return Err(p.at().err("expected a pair"));
            }
            Ok((ends[0].at().index_in(labels)?, ends[1].at().index_in(labels)?))
        })
        .collect()
}

impl Json for FiniteDeltaSpace {
    fn to_json(&self) -> Value {
        let matrix: Vec<Vec<Value>> = self.matrix().iter().map(|row| row.iter().map(weight).collect()).collect();
        json!({"type": "finite_delta", "points": self.points(), "matrix": matrix})
    }

    fn from_json(v: &Value) -> Result<Self> {
        let a = At::root(v);
        if let Some(t) = a.opt("type") {
            if t.at().str()? != "finite_delta" {
                return Err(t.at().err("expected \"finite_delta\""));
            }
        }
        let points = a.get("points")?.at().strings()?;
        let matrix = a
            .get("matrix")?
            .at()
            .items()?
            .iter()
            .map(|row| row.at().items()?.iter().map(|x| x.at().weight()).collect())
            .collect::<Result<Vec<Vec<ExtWeight>>>>()?;
        FiniteDeltaSpace::new(points, matrix)
    }
}

impl Json for PointRelation {
    fn to_json(&self) -> Value {
        json!({"pairs": self.pairs.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>()})
    }

    fn from_json(v: &Value) -> Result<Self> {
        let a = At::root(v);
        let mut pairs = Vec::new();
        for p in a.get("pairs")?.at().items()? {
            let s = p.at().strings()?;
            if s.len() != 2 {
                return Err(p.at().err("expected a pair of labels"));
            }
            pairs.push((s[0].clone(), s[1].clone()));
        }
        Ok(PointRelation { pairs })
    }
}

/// A path description: piecewise-affine in a standard model, or a chain in a
/// finite δ-metric space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathDescription {
    PL(PLPath),
    Chain(ChainPath),
}

fn model_json(m: &AnalyticModel) -> Map<String, Value> {
    let mut o = Map::new();
    let name = match &m.base {
        BaseModel::DeltaLine => "delta_line",
        BaseModel::DeltaInterval { lo, hi } => {
            o.insert("interval".into(), json!([rat(lo), rat(hi)]));
            "delta_interval"
        }
        BaseModel::DeltaCircle => "delta_circle",
    };
    o.insert("model".into(), json!(name));
    if m.dim != 1 {
        o.insert("dim".into(), json!(m.dim));
    }
    if m.opposite {
        o.insert("opposite".into(), json!(true));
    }
    o
}

impl Json for PLPath {
    fn to_json(&self) -> Value {
        let mut o = model_json(self.model());
        o.insert("times".into(), Value::Array(self.times().iter().map(rat).collect()));
        let values = self
            .values()
            .iter()
            .map(|x| if self.model().dim == 1 { rat(&x[0]) } else { Value::Array(x.iter().map(rat).collect()) })
            .collect();
        o.insert("values".into(), Value::Array(values));
        Value::Object(o)
    }

    fn from_json(v: &Value) -> Result<Self> {
        let a = At::root(v);
        let model_field = a.get("model")?;
        let mut model = match model_field.at().str()? {
            "delta_line" => AnalyticModel::delta_line(),
            "delta_circle" => AnalyticModel::delta_circle(),
            "delta_interval" => match a.opt("interval") {
                Some(iv) => {
                    let ends = iv.at().rationals()?;
                    if ends.len() != 2 {
                        return Err(iv.at().err("expected [lo, hi]"));
                    }
                    AnalyticModel::delta_interval(ends[0].clone(), ends[1].clone()).map_err(|e| iv.at().err(e.to_string()))?
                }
                None => AnalyticModel::unit_interval(),
            },
            other => return Err(model_field.at().err(format!("unknown model `{other}`"))),
        };
        if let Some(d) = a.opt("dim") {
            let n = d.at().usize()?;
            model = model.tensor_power(n).map_err(|e| d.at().err(e.to_string()))?;
        }
        if let Some(op) = a.opt("opposite") {
            if op.at().bool()? {
                model = model.opposite();
            }
        }
        let times = a.get("times")?.at().rationals()?;
        let values = a
            .get("values")?
            .at()
            .items()?
            .iter()
            .map(|x| if x.v.is_array() { x.at().rationals() } else { Ok(vec![x.at().rational()?]) })
            .collect::<Result<Vec<_>>>()?;
        PLPath::new(model, times, values)
    }
}

impl Json for ChainPath {
    fn to_json(&self) -> Value {
        let labels: Vec<&str> = self.vertices().iter().map(|&i| self.space().label(i)).collect();
        json!({"model": "chain", "space": self.space().to_json(), "vertices": labels})
    }

    fn from_json(v: &Value) -> Result<Self> {
        let a = At::root(v);
        let space = FiniteDeltaSpace::from_json(a.get("space")?.v)?;
        let vf = a.get("vertices")?;
        let labels = vf.at().strings()?;
        let idx = labels.iter().map(|l| space.index_of(l)).collect::<Result<Vec<_>>>()?;
        ChainPath::from_indices(space, idx)
    }
}

impl Json for PathDescription {
    fn to_json(&self) -> Value {
        match self {
            PathDescription::PL(p) => p.to_json(),
            PathDescription::Chain(c) => c.to_json(),
        }
    }

    fn from_json(v: &Value) -> Result<Self> {
        let a = At::root(v);
        if a.get("model")?.at().str()? == "chain" {
            Ok(PathDescription::Chain(ChainPath::from_json(v)?))
        } else {
            Ok(PathDescription::PL(PLPath::from_json(v)?))
        }
    }
}

impl Json for FiniteWeightedCategory {
    fn to_json(&self) -> Value {
        let ms = self.morphisms();
        let objects = self.objects();
        let morphisms: Vec<Value> = ms
            .iter()
            .map(|m| json!({"name": m.name, "source": objects[m.source], "target": objects[m.target], "weight": weight(&m.weight)}))
            .collect();
        let identities: Vec<&str> = self.identities().iter().map(|&i| ms[i].name.as_str()).collect();
        let table: BTreeMap<(usize, usize), usize> = self.composition_table().iter().map(|(&k, &v)| (k, v)).collect();
        let compose: Vec<Value> = table
            .iter()
            .filter(|((a, b), _)| !self.is_identity(*a) && !self.is_identity(*b))
            .map(|(&(a, b), &c)| json!([ms[a].name, ms[b].name, ms[c].name]))
            .collect();
        json!({"objects": objects, "morphisms": morphisms, "identities": identities, "compose": compose})
    }

    /// Composites with an identity may be omitted from `compose`.
    fn from_json(v: &Value) -> Result<Self> {
        let a = At::root(v);
        let objects = a.get("objects")?.at().strings()?;
        let mut morphisms = Vec::new();
        for m in a.get("morphisms")?.at().items()? {
            let m = m.at();
            morphisms.push(Morphism {
                name: m.get("name")?.at().str()?.to_string(),
                source: m.get("source")?.at().index_in(&objects)?,
                target: m.get("target")?.at().index_in(&objects)?,
                weight: m.get("weight")?.at().weight()?,
            });
        }
        let names: Vec<String> = morphisms.iter().map(|m| m.name.clone()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateLabel(n.clone()));
            }
        }
        let ids_field = a.get("identities")?;
        let identities = ids_field.at().items()?.iter().map(|x| x.at().index_in(&names)).collect::<Result<Vec<_>>>()?;
        if identities.len() != objects.len() {
            return Err(ids_field.at().err(format!("{} identities for {} objects", identities.len(), objects.len())));
        }
        let mut compose = HashMap::new();
        for (k, m) in morphisms.iter().enumerate() {
            compose.insert((identities[m.source], k), k);
            compose.insert((k, identities[m.target]), k);
        }
        if let Some(c) = a.opt("compose") {
            for entry in c.at().items()? {
                let t = entry.at().items()?;
                if t.len() != 3 {
                    return Err(entry.at().err("expected [first, second, composite]"));
                }
                let f = t[0].at().index_in(&names)?;
                let g = t[1].at().index_in(&names)?;
                let h = t[2].at().index_in(&names)?;
                compose.insert((f, g), h);
            }
        }
        FiniteWeightedCategory::new(objects, morphisms, identities, compose)
    }
}

impl Json for HoledPlane {
    fn to_json(&self) -> Value {
        let marked: Vec<Value> = self.marked().iter().map(|(x, y)| json!([rat(x), rat(y)])).collect();
        json!({
            "bounds": [rat(self.width()), rat(self.height())],
            "holes": self.holes().iter().map(rect_json).collect::<Vec<_>>(),
            "marked": marked,
            "labels": self.labels(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let a = At::root(v);
        let bf = a.get("bounds")?;
        let bounds = bf.at().rationals()?;
        if bounds.len() != 2 {
            return Err(bf.at().err("expected [width, height]"));
        }
        let holes = match a.opt("holes") {
            Some(h) => h.at().items()?.iter().map(|r| rect_from(r.at())).collect::<Result<Vec<_>>>()?,
            None => Vec::new(),
        };
        let mut marked = Vec::new();
        for p in a.get("marked")?.at().items()? {
            let c = p.at().rationals()?;
            if c.len() != 2 {
                return Err(p.at().err("a point is [x, y]"));
            }
            marked.push((c[0].clone(), c[1].clone()));
        }
        let [w, h]: [Rational; 2] = bounds.try_into().expect("length 2");
        match a.opt("labels") {
            Some(l) => HoledPlane::with_labels(w, h, holes, marked, l.at().strings()?),
            None => HoledPlane::new(w, h, holes, marked),
        }
    }
}

impl Json for Cover {
    fn to_json(&self) -> Value {
        json!({
            "first": self.first.iter().map(rect_json).collect::<Vec<_>>(),
            "second": self.second.iter().map(rect_json).collect::<Vec<_>>(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let a = At::root(v);
        let piece = |name: &str| -> Result<Vec<Rect>> {
            a.get(name)?.at().items()?.iter().map(|r| rect_from(r.at())).collect()
        };
        Ok(Cover { first: piece("first")?, second: piece("second")? })
    }
}

fn edge_key(k: &[usize]) -> String {
    k.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl Json for ChainWSpace {
    fn to_json(&self) -> Value {
        let vs = self.vertices();
        let edges: Vec<Value> = self.edges().iter().map(|&(a, b)| json!([vs[a], vs[b]])).collect();
        let weights = match self.weight_rule() {
            WalkWeight::Linear(w) => json!({"mode": "linear", "edge_weights": w.iter().map(weight).collect::<Vec<_>>()}),
            WalkWeight::Span(m) => {
                let matrix: Vec<Vec<Value>> = m.iter().map(|row| row.iter().map(weight).collect()).collect();
                json!({"mode": "span", "matrix": matrix})
            }
            WalkWeight::Tabled { bound, table } => {
                let sorted: BTreeMap<&Vec<usize>, &ExtWeight> = table.iter().collect();
                let mut t = Map::new();
                for (k, w) in sorted {
                    t.insert(edge_key(k), weight(w));
                }
                json!({"mode": "tabled", "bound": bound, "table": t})
            }
            WalkWeight::Pair { left, right, tensor, .. } => {
                json!({"mode": if *tensor { "tensor" } else { "product" }, "left": left.to_json(), "right": right.to_json()})
            }
            WalkWeight::Sum { parts, .. } => json!({"mode": "sum", "parts": parts.iter().map(Json::to_json).collect::<Vec<_>>()}),
            WalkWeight::Quotient { source, relation } => {
                json!({"mode": "quotient", "source": source.to_json(), "relation": relation.to_json()})
            }
        };
        json!({"vertices": vs, "edges": edges, "weights": weights})
    }

    fn from_json(v: &Value) -> Result<Self> {
        let a = At::root(v);
        let wf = a.get("weights")?;
        let w = wf.at();
        let mode_field = w.get("mode")?;
        let mode = mode_field.at().str()?;
        let derived = match mode {
            "product" | "tensor" => {
                let l = ChainWSpace::from_json(w.get("left")?.v)?;
                let r = ChainWSpace::from_json(w.get("right")?.v)?;
                Some(if mode == "tensor" { wspace_tensor(&l, &r) } else { wspace_product(&l, &r) })
            }
            "sum" => {
                let parts = w.get("parts")?.at().items()?.iter().map(|p| ChainWSpace::from_json(p.v)).collect::<Result<Vec<_>>>()?;
                Some(wspace_sum(&parts))
            }
            "quotient" => {
                let source = ChainWSpace::from_json(w.get("source")?.v)?;
                let relation = PointRelation::from_json(w.get("relation")?.v)?;
                Some(wspace_quotient(&source, &relation)?)
            }
            _ => None,
        };
        if let Some(x) = derived {
            // vertices and edges are determined by the construction; any listed must agree
            if let Some(vf) = a.opt("vertices") {
                if vf.at().strings()? != x.vertices() {
                    return Err(vf.at().err("vertices differ from the constructed space"));
                }
            }
            return Ok(x);
        }
        let vertices = a.get("vertices")?.at().strings()?;
        let edges = label_pairs(a.get("edges")?.at(), &vertices)?;
        match mode {
            "linear" => {
                let weights = w.get("edge_weights")?.at().items()?.iter().map(|x| x.at().weight()).collect::<Result<Vec<_>>>()?;
                ChainWSpace::linear(vertices, edges, weights)
            }
            "span" => {
                let matrix = w
                    .get("matrix")?
                    .at()
                    .items()?
                    .iter()
                    .map(|row| row.at().items()?.iter().map(|x| x.at().weight()).collect())
                    .collect::<Result<Vec<Vec<ExtWeight>>>>()?;
                let y = FiniteDeltaSpace::new(vertices, matrix)?;
                sp_of(&y, &edges)
            }
            "tabled" => {
                let bound = w.get("bound")?.at().usize()?;
                let tf = w.get("table")?;
                let obj = tf.v.as_object().ok_or_else(|| tf.at().err("expected an object keyed by edge sequences"))?;
                let mut table = HashMap::new();
                for (k, val) in obj {
                    let path = format!("{}.{k}", tf.path);
                    let entry = At { v: val, path: &path };
                    let key = k
                        .split(',')
                        .map(|s| s.trim().parse::<usize>().map_err(|_| entry.err(format!("`{k}` is not a list of edge indices"))))
                        .collect::<Result<Vec<_>>>()?;
                    table.insert(key, entry.weight()?);
                }
                ChainWSpace::tabled(vertices, edges, bound, table)
            }
            other => Err(mode_field.at().err(format!("unknown mode `{other}`"))),
        }
    }
}

impl Json for QuadraticIrrational {
    fn to_json(&self) -> Value {
        let (p, q, r) = self.value().integer_form();
        let n = |x: num_bigint::BigInt| -> Value {
            use num_traits::ToPrimitive;
            x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
        };
        json!({"theta": {"p": n(p), "q": n(q), "r": n(r), "d": self.radicand()}})
    }

    /// Accepts `{"theta": {...}}` or the bare `{"p", "q", "r", "d"}` object.
    fn from_json(v: &Value) -> Result<Self> {
        let root = At::root(v);
        let inner = root.opt("theta");
        let a = inner.as_ref().map_or(root, |o| o.at());
        let p = a.get("p")?.at().int()?;
        let q = a.get("q")?.at().int()?;
        let r = match a.opt("r") {
            Some(r) => r.at().int()?,
            None => 1,
        };
        let df = a.get("d")?;
        let d = df.at().int()?;
        let d = u64::try_from(d).map_err(|_| df.at().err("d must be positive"))?;
        QuadraticIrrational::new(p, q, r, d)
    }
}

impl Json for Vec<Generator> {
    fn to_json(&self) -> Value {
        Value::Array(self.iter().map(|g| Value::String(g.to_string())).collect())
    }

    fn from_json(v: &Value) -> Result<Self> {
        At::root(v).items()?.iter().map(|g| Generator::parse(g.at().str()?).map_err(|e| g.at().err(e.to_string()))).collect()
    }
}
