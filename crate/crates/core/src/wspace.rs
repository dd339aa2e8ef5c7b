//! Chain models of spaces with weighted paths.
//!
//! Paths are replaced by finite directed walks in a multigraph. The weight of
//! a walk vanishes on empty walks, is subadditive under concatenation and
//! dominates the weight of every contiguous subwalk. Reparameterization has
//! no counterpart for walks.

use std::collections::HashMap;
use std::fmt;

use crate::dmetric::{shortest_paths, FiniteDeltaSpace, PointRelation};
use crate::error::{Error, Result};
use crate::weight::{least_scale, ExtWeight};

/// Default bound on the number of walks enumerated by a single operation.
pub const DEFAULT_WALK_CAP: u64 = 1_000_000;

/// A directed walk: a start vertex followed by composable edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    pub start: usize,
    pub edges: Vec<usize>,
}

impl Walk {
    pub fn empty(start: usize) -> Self {
        Walk { start, edges: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// How the weight of a walk is computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WalkWeight {
    /// Sum of per-edge weights.
    Linear(Vec<ExtWeight>),
    /// Largest distance from an earlier to a later vertex of the walk.
    Span(Vec<Vec<ExtWeight>>),
    /// Explicit weights on walks of length at most `bound`, keyed by edge
    /// sequences, extended to all walks as the largest subadditive weight
    /// below the table.
    Tabled { bound: usize, table: HashMap<Vec<usize>, ExtWeight> },
    /// Weight of the two projections, combined by `max` (product) or `+`
    /// (tensor). Edge `k` projects to `proj[k]`; `None` stands still.
    Pair {
        left: Box<ChainWSpace>,
        right: Box<ChainWSpace>,
        proj: Vec<(Option<usize>, Option<usize>)>,
        tensor: bool,
    },
    /// Disjoint union; edge `k` is edge `local[k].1` of part `local[k].0`.
    Sum { parts: Vec<ChainWSpace>, local: Vec<(usize, usize)> },
    /// Least total weight of a decomposition into images of source walks.
    /// Edges are those of the source.
    Quotient { source: Box<ChainWSpace>, relation: PointRelation },
}

/// A finite multigraph with a weight on its walks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWSpace {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    weight: WalkWeight,
}

fn out_of_range(what: &str, k: usize) -> Error {
    Error::InvalidWSpace(format!("{what} {k} is out of range"))
}

impl ChainWSpace {
    pub fn linear(vertices: Vec<String>, edges: Vec<(usize, usize)>, weights: Vec<ExtWeight>) -> Result<Self> {
        if weights.len() != edges.len() {
            return Err(Error::Shape(format!("{} edge weights for {} edges", weights.len(), edges.len())));
        }
        Self::checked(vertices, edges, WalkWeight::Linear(weights))
    }

    /// Walk weights given on walks of length at most `bound`. Every edge must
    /// be listed; other walks default to the subadditive extension.
    pub fn tabled(
        vertices: Vec<String>,
        edges: Vec<(usize, usize)>,
        bound: usize,
        table: HashMap<Vec<usize>, ExtWeight>,
    ) -> Result<Self> {
        let x = Self::checked(vertices, edges, WalkWeight::Tabled { bound, table })?;
        let WalkWeight::Tabled { table, .. } = &x.weight else { unreachable!() };
        for k in 0..x.edges.len() {
            if !table.contains_key(&vec![k]) {
                return Err(Error::InvalidWSpace(format!("edge {k} has no weight")));
            }
        }
        for key in table.keys() {
            if key.is_empty() || key.len() > bound {
                return Err(Error::InvalidWSpace(format!("tabled walk {key:?} has length outside 1..={bound}")));
            }
            let walk = x.walk_from_edges(key)?;
            let w = x.weight(&walk);
            if &w != table.get(key).expect("key") {
                return Err(Error::InvalidWSpace(format!("weight of walk {key:?} exceeds a split sum")));
            }
            for i in 0..key.len() {
                for j in i + 1..=key.len() {
                    if j - i < key.len() && x.weight(&x.walk_from_edges(&key[i..j])?) > w {
                        return Err(Error::InvalidWSpace(format!(
                            "subwalk {:?} outweighs walk {key:?}",
                            &key[i..j]
                        )));
                    }
                }
            }
        }
        Ok(x)
    }

    fn checked(vertices: Vec<String>, edges: Vec<(usize, usize)>, weight: WalkWeight) -> Result<Self> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        for (k, &(a, b)) in edges.iter().enumerate() {
            if a >= vertices.len() || b >= vertices.len() {
                return Err(out_of_range("endpoint of edge", k));
            }
        }
        Ok(ChainWSpace { vertices, edges, weight })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weight_rule(&self) -> &WalkWeight {
        &self.weight
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Walk length up to which the axioms are checked by default.
    pub fn default_bound(&self) -> usize {
        match &self.weight {
            WalkWeight::Tabled { bound, .. } => *bound.max(&(2 * self.vertices.len())),
            _ => 2 * self.vertices.len(),
        }
    }

    /// The walk with the given edges, starting at the source of the first.
    pub fn walk_from_edges(&self, edges: &[usize]) -> Result<Walk> {
        let first = *edges.first().ok_or_else(|| Error::InvalidWSpace("empty edge sequence".into()))?;
        let start = self.edges.get(first).ok_or_else(|| out_of_range("edge", first))?.0;
        self.walk(start, edges.to_vec())
    }

    pub fn walk(&self, start: usize, edges: Vec<usize>) -> Result<Walk> {
        if start >= self.vertices.len() {
            return Err(out_of_range("vertex", start));
        }
        let mut at = start;
        for &e in &edges {
            let &(a, b) = self.edges.get(e).ok_or_else(|| out_of_range("edge", e))?;
            if a != at {
                return Err(Error::InvalidWSpace(format!("edge {e} does not continue the walk")));
            }
            at = b;
        }
        Ok(Walk { start, edges })
    }

    /// Vertices visited by a walk, in order.
    pub fn visits(&self, w: &Walk) -> Vec<usize> {
        let mut out = vec![w.start];
        out.extend(w.edges.iter().map(|&e| self.edges[e].1));
        out
    }

    pub fn end(&self, w: &Walk) -> usize {
        w.edges.last().map_or(w.start, |&e| self.edges[e].1)
    }

    pub fn weight(&self, w: &Walk) -> ExtWeight {
        if w.edges.is_empty() {
            return ExtWeight::zero();
        }
        match &self.weight {
            WalkWeight::Linear(ws) => w.edges.iter().map(|&e| &ws[e]).sum(),
            WalkWeight::Span(d) => {
                let v = self.visits(w);
                let mut best = ExtWeight::zero();
                for i in 0..v.len() {
                    for j in i + 1..v.len() {
                        if d[v[i]][v[j]] > best {
                            best = d[v[i]][v[j]].clone();
                        }
                    }
                }
                best
            }
            WalkWeight::Tabled { table, .. } => {
                let n = w.edges.len();
                // best[i][j] for the subwalk of edges i..j
                let mut best = vec![vec![ExtWeight::inf(); n + 1]; n + 1];
                for len in 1..=n {
                    for i in 0..=n - len {
                        let j = i + len;
                        let mut b = table.get(&w.edges[i..j]).cloned().unwrap_or(ExtWeight::inf());
                        for k in i + 1..j {
                            let s = &best[i][k] + &best[k][j];
                            if s < b {
                                b = s;
                            }
                        }
                        best[i][j] = b;
                    }
                }
                best[0][n].clone()
            }
            WalkWeight::Pair { left, right, proj, tensor } => {
                let nr = right.vertices.len();
                let (mut l, mut r) = (Walk::empty(w.start / nr), Walk::empty(w.start % nr));
                for &e in &w.edges {
                    let (a, b) = proj[e];
                    l.edges.extend(a);
                    r.edges.extend(b);
                }
                let (wl, wr) = (left.weight(&l), right.weight(&r));
                if *tensor {
                    wl + wr
                } else {
                    wl.max(wr)
                }
            }
            WalkWeight::Sum { parts, local } => {
                let p = local[w.edges[0]].0;
                let edges: Vec<usize> = w.edges.iter().map(|&e| local[e].1).collect();
                let start = parts[p].edges[edges[0]].0;
                parts[p].weight(&Walk { start, edges })
            }
            WalkWeight::Quotient { source, .. } => {
                let n = w.edges.len();
                let mut best = vec![ExtWeight::inf(); n + 1];
                best[0] = ExtWeight::zero();
                for j in 1..=n {
                    for i in (0..j).rev() {
                        if i + 1 < j && source.edges[w.edges[i]].1 != source.edges[w.edges[i + 1]].0 {
                            break;
                        }
                        let piece = Walk { start: source.edges[w.edges[i]].0, edges: w.edges[i..j].to_vec() };
                        let s = &best[i] + &source.weight(&piece);
                        if s < best[j] {
                            best[j] = s;
                        }
                    }
                }
                best[n].clone()
            }
        }
    }

    /// Calls `f` on every walk of length at most `max_len`, shortest first.
    pub fn for_each_walk<F: FnMut(&Walk)>(&self, max_len: usize, cap: u64, mut f: F) -> Result<()> {
        let mut out_edges = vec![Vec::new(); self.vertices.len()];
        for (k, &(a, _)) in self.edges.iter().enumerate() {
            out_edges[a].push(k);
        }
        let mut layer: Vec<(Walk, usize)> = (0..self.vertices.len()).map(|v| (Walk::empty(v), v)).collect();
        let mut count = 0u64;
        for len in 0..=max_len {
            for (w, _) in &layer {
                count += 1;
                if count > cap {
                    return Err(Error::SizeLimitExceeded { what: "walks", limit: cap });
                }
                f(w);
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for (w, end) in &layer {
                for &e in &out_edges[*end] {
                    let mut edges = w.edges.clone();
                    edges.push(e);
                    next.push((Walk { start: w.start, edges }, self.edges[e].1));
                }
            }
            layer = next;
        }
        Ok(())
    }

    pub fn walks(&self, max_len: usize, cap: u64) -> Result<Vec<Walk>> {
        let mut out = Vec::new();
        self.for_each_walk(max_len, cap, |w| out.push(w.clone()))?;
        Ok(out)
    }

    /// Checks zero weight on empty walks, subadditivity and monotonicity on
    /// all splittings of walks of length at most `max_len`.
    pub fn check_axioms(&self, max_len: usize, cap: u64) -> Result<()> {
        let mut failure = None;
        self.for_each_walk(max_len, cap, |w| {
            if failure.is_some() {
                return;
            }
            let total = self.weight(w);
            if w.is_empty() && !total.is_zero() {
                failure = Some(format!("empty walk at {} has nonzero weight", self.vertices[w.start]));
                return;
            }
            for k in 1..w.len() {
                let at = self.edges[w.edges[k - 1]].1;
                let u = Walk { start: w.start, edges: w.edges[..k].to_vec() };
                let v = Walk { start: at, edges: w.edges[k..].to_vec() };
                let (wu, wv) = (self.weight(&u), self.weight(&v));
                if total > &wu + &wv {
                    failure = Some(format!("subadditivity fails on walk {:?} split at {k}", w.edges));
                } else if wu > total || wv > total {
                    failure = Some(format!("monotonicity fails on walk {:?} split at {k}", w.edges));
                }
            }
        })?;
        match failure {
            Some(m) => Err(Error::InvalidWSpace(m)),
            None => Ok(()),
        }
    }

    /// Whether removing a closed subwalk never increases the weight; true for
    /// everything built without tables.
    fn cycles_removable(&self) -> bool {
        match &self.weight {
            WalkWeight::Linear(_) | WalkWeight::Span(_) => true,
            WalkWeight::Tabled { .. } => false,
            WalkWeight::Pair { left, right, .. } => left.cycles_removable() && right.cycles_removable(),
            WalkWeight::Sum { parts, .. } => parts.iter().all(ChainWSpace::cycles_removable),
            WalkWeight::Quotient { source, .. } => source.cycles_removable(),
        }
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.start)?;
        let parts: Vec<String> = self.edges.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn pair(x: &ChainWSpace, y: &ChainWSpace, tensor: bool) -> ChainWSpace {
    let ny = y.vertices.len();
    let mut vertices = Vec::new();
    for a in &x.vertices {
        for b in &y.vertices {
            vertices.push(format!("({a},{b})"));
        }
    }
    let mut edges = Vec::new();
    let mut proj = Vec::new();
    for (e, &(a, b)) in x.edges.iter().enumerate() {
        for (f, &(c, d)) in y.edges.iter().enumerate() {
            edges.push((a * ny + c, b * ny + d));
            proj.push((Some(e), Some(f)));
        }
        for v in 0..ny {
            edges.push((a * ny + v, b * ny + v));
            proj.push((Some(e), None));
        }
    }
    for u in 0..x.vertices.len() {
        for (f, &(c, d)) in y.edges.iter().enumerate() {
            edges.push((u * ny + c, u * ny + d));
            proj.push((None, Some(f)));
        }
    }
    let weight = WalkWeight::Pair { left: Box::new(x.clone()), right: Box::new(y.clone()), proj, tensor };
    ChainWSpace { vertices, edges, weight }
}

/// Walks move in either factor or in both at once; weighted by the larger
/// of the projected weights. Vertex `(x, y)` has index `x·|Y| + y`.
pub fn wspace_product(x: &ChainWSpace, y: &ChainWSpace) -> ChainWSpace {
    pair(x, y, false)
}

/// As [`wspace_product`], weighted by the sum of the projected weights.
pub fn wspace_tensor(x: &ChainWSpace, y: &ChainWSpace) -> ChainWSpace {
    pair(x, y, true)
}

/// Disjoint union; labels are prefixed by the summand index.
pub fn wspace_sum(parts: &[ChainWSpace]) -> ChainWSpace {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut local = Vec::new();
    for (p, x) in parts.iter().enumerate() {
        let offset = vertices.len();
        vertices.extend(x.vertices.iter().map(|v| format!("{p}:{v}")));
        for (k, &(a, b)) in x.edges.iter().enumerate() {
            edges.push((offset + a, offset + b));
            local.push((p, k));
        }
    }
    ChainWSpace { vertices, edges, weight: WalkWeight::Sum { parts: parts.to_vec(), local } }
}

/// Identifies related vertices. Each edge survives with the same index; a
/// walk is weighted by the cheapest way of cutting it into images of walks
/// of `x`.
pub fn wspace_quotient(x: &ChainWSpace, relation: &PointRelation) -> Result<ChainWSpace> {
    let labels = FiniteDeltaSpace::new_unchecked(x.vertices.clone(), vec![vec![ExtWeight::zero(); x.vertices.len()]; x.vertices.len()]);
    let class = relation.classes(&labels)?;
    let n = class.iter().max().map_or(0, |m| m + 1);
    let mut members: Vec<Vec<&str>> = vec![Vec::new(); n];
    for (v, &c) in class.iter().enumerate() {
        members[c].push(&x.vertices[v]);
    }
    let vertices = members
        .iter()
        .map(|m| if m.len() == 1 { m[0].to_string() } else { format!("[{}]", m.join("~")) })
        .collect();
    let edges = x.edges.iter().map(|&(a, b)| (class[a], class[b])).collect();
    Ok(ChainWSpace { vertices, edges, weight: WalkWeight::Quotient { source: Box::new(x.clone()), relation: relation.clone() } })
}

/// The least linear weight above `x`: the largest sum of weights over
/// decompositions of a walk, which by subadditivity is the sum over its edges.
pub fn linearize(x: &ChainWSpace) -> ChainWSpace {
    let weights = (0..x.edges.len()).map(|e| x.weight(&Walk { start: x.edges[e].0, edges: vec![e] })).collect();
    ChainWSpace { vertices: x.vertices.clone(), edges: x.edges.clone(), weight: WalkWeight::Linear(weights) }
}

/// `δ(x, x') = inf w(a)` over walks `a` from `x` to `x'`.
///
/// Linear weights use shortest paths. Other weights without tables are
/// minimized over walks without repeated vertices; tabled weights over all
/// walks of length at most [`ChainWSpace::default_bound`].
pub fn delta_of(x: &ChainWSpace, cap: u64) -> Result<FiniteDeltaSpace> {
    let n = x.vertices.len();
    if let WalkWeight::Linear(ws) = &x.weight {
        let mut arcs = vec![vec![ExtWeight::inf(); n]; n];
        for (k, &(a, b)) in x.edges.iter().enumerate() {
            if ws[k] < arcs[a][b] {
                arcs[a][b] = ws[k].clone();
            }
        }
        return Ok(FiniteDeltaSpace::new_unchecked(x.vertices.clone(), shortest_paths(&arcs)));
    }
    let mut d = vec![vec![ExtWeight::inf(); n]; n];
    let mut consider = |w: &Walk| {
        let (a, b) = (w.start, x.end(w));
        let wt = x.weight(w);
        if wt < d[a][b] {
            d[a][b] = wt;
        }
    };
    if x.cycles_removable() {
        let mut out_edges = vec![Vec::new(); n];
        for (k, &(a, _)) in x.edges.iter().enumerate() {
            out_edges[a].push(k);
        }
        let mut count = 0u64;
        for s in 0..n {
            let mut stack = vec![(Walk::empty(s), vec![s])];
            while let Some((w, seen)) = stack.pop() {
                count += 1;
                if count > cap {
                    return Err(Error::SizeLimitExceeded { what: "simple walks", limit: cap });
                }
                consider(&w);
                let end = *seen.last().expect("nonempty");
                for &e in &out_edges[end] {
                    let t = x.edges[e].1;
                    if !seen.contains(&t) {
                        let mut w2 = w.clone();
                        w2.edges.push(e);
                        let mut s2 = seen.clone();
                        s2.push(t);
                        stack.push((w2, s2));
                    }
                }
            }
        }
    } else {
        x.for_each_walk(x.default_bound(), cap, consider)?;
    }
    Ok(FiniteDeltaSpace::new_unchecked(x.vertices.clone(), d))
}

fn check_admissible(y: &FiniteDeltaSpace, admissible: &[(usize, usize)]) -> Result<()> {
    for &(a, b) in admissible {
        if a >= y.len() || b >= y.len() {
            return Err(Error::EdgeOffSpace(format!("({a}, {b})")));
        }
    }
    Ok(())
}

/// `sp Y` on the admissible edges: a walk weighs the largest distance from an
/// earlier to a later vertex.
pub fn sp_of(y: &FiniteDeltaSpace, admissible: &[(usize, usize)]) -> Result<ChainWSpace> {
    check_admissible(y, admissible)?;
    Ok(ChainWSpace {
        vertices: y.points().to_vec(),
        edges: admissible.to_vec(),
        weight: WalkWeight::Span(y.matrix().to_vec()),
    })
}

/// `L Y` on the admissible edges: a walk weighs the sum of the distances
/// between consecutive vertices.
pub fn l_of(y: &FiniteDeltaSpace, admissible: &[(usize, usize)]) -> Result<ChainWSpace> {
    check_admissible(y, admissible)?;
    let weights = admissible.iter().map(|&(a, b)| y.dist(a, b).clone()).collect();
    Ok(ChainWSpace { vertices: y.points().to_vec(), edges: admissible.to_vec(), weight: WalkWeight::Linear(weights) })
}

/// Compares two weights on the same multigraph over all walks up to `max_len`.
fn compare_walkwise(a: &ChainWSpace, b: &ChainWSpace, max_len: usize, cap: u64) -> Result<(bool, bool)> {
    let (mut ge, mut eq) = (true, true);
    a.for_each_walk(max_len, cap, |w| {
        let (wa, wb) = (a.weight(w), b.weight(w));
        ge &= wa >= wb;
        eq &= wa == wb;
    })?;
    Ok((ge, eq))
}

fn entrywise_ge(a: &FiniteDeltaSpace, b: &FiniteDeltaSpace) -> bool {
    b.le(a)
}

/// Unit and counit inequalities and idempotency of `δ ⊣ sp` and `δ ⊣ L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisReport {
    /// `X ≥ sp(δX)` on walks.
    pub unit_sp: bool,
    /// `δ(sp δX) = δX`.
    pub delta_sp_delta: bool,
    /// `sp δ sp δX = sp δX` on walks.
    pub sp_delta_sp: bool,
    /// `X ≥ L(δX)`; only asserted for linear `X`.
    pub unit_l: Option<bool>,
    /// `δ(L δX) = δX`; only asserted for linear `X`.
    pub delta_l_delta: Option<bool>,
    pub l_delta_l: bool,
}

impl GaloisReport {
    pub fn all_hold(&self) -> bool {
        self.unit_sp
            && self.delta_sp_delta
            && self.sp_delta_sp
            && self.unit_l.unwrap_or(true)
            && self.delta_l_delta.unwrap_or(true)
            && self.l_delta_l
    }
}

pub fn galois_check(x: &ChainWSpace, max_len: usize, cap: u64) -> Result<GaloisReport> {
    let dx = delta_of(x, cap)?;
    let sp = sp_of(&dx, &x.edges)?;
    let (unit_sp, _) = compare_walkwise(x, &sp, max_len, cap)?;
    let dsp = delta_of(&sp, cap)?;
    let delta_sp_delta = dsp == dx;
    let (_, sp_delta_sp) = compare_walkwise(&sp_of(&dsp, &x.edges)?, &sp, max_len, cap)?;
    let l = l_of(&dx, &x.edges)?;
    let dl = delta_of(&l, cap)?;
    let (_, l_delta_l) = compare_walkwise(&l_of(&dl, &x.edges)?, &l, max_len, cap)?;
    let (unit_l, delta_l_delta) = if is_linear(x, max_len, cap)? {
        (Some(compare_walkwise(x, &l, max_len, cap)?.0), Some(dl == dx))
    } else {
        (None, None)
    };
    Ok(GaloisReport { unit_sp, delta_sp_delta, sp_delta_sp, unit_l, delta_l_delta, l_delta_l })
}

/// The same laws seen from a δ-metric space with admissible edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGaloisReport {
    /// `δ(sp Y) ≥ Y`.
    pub counit_sp: bool,
    /// `δ(L Y) ≥ Y`.
    pub counit_l: bool,
    /// `δ(sp Y) ≤ δ(L Y)`.
    pub sp_below_l: bool,
    /// `δ sp δ sp Y = δ sp Y`.
    pub delta_sp_idempotent: bool,
    /// `δ L δ L Y = δ L Y`.
    pub delta_l_idempotent: bool,
}

impl DualGaloisReport {
    pub fn all_hold(&self) -> bool {
        self.counit_sp && self.counit_l && self.sp_below_l && self.delta_sp_idempotent && self.delta_l_idempotent
    }
}

pub fn galois_check_dual(y: &FiniteDeltaSpace, admissible: &[(usize, usize)], cap: u64) -> Result<DualGaloisReport> {
    let dsp = delta_of(&sp_of(y, admissible)?, cap)?;
    let dl = delta_of(&l_of(y, admissible)?, cap)?;
    Ok(DualGaloisReport {
        counit_sp: entrywise_ge(&dsp, y),
        counit_l: entrywise_ge(&dl, y),
        sp_below_l: entrywise_ge(&dl, &dsp),
        delta_sp_idempotent: delta_of(&sp_of(&dsp, admissible)?, cap)? == dsp,
        delta_l_idempotent: delta_of(&l_of(&dl, admissible)?, cap)? == dl,
    })
}

fn is_linear(x: &ChainWSpace, max_len: usize, cap: u64) -> Result<bool> {
    Ok(compare_walkwise(x, &linearize(x), max_len, cap)?.1)
}

/// Metrizability of a chain w-space, decided on walks up to a length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WSpaceFlags {
    pub linear: bool,
    /// `X = sp(δX)`.
    pub span_metrizable: bool,
    /// `X = L(δX)`.
    pub length_metrizable: bool,
}

pub fn classify(x: &ChainWSpace, max_len: usize, cap: u64) -> Result<WSpaceFlags> {
    let dx = delta_of(x, cap)?;
    Ok(WSpaceFlags {
        linear: is_linear(x, max_len, cap)?,
        span_metrizable: compare_walkwise(x, &sp_of(&dx, &x.edges)?, max_len, cap)?.1,
        length_metrizable: compare_walkwise(x, &l_of(&dx, &x.edges)?, max_len, cap)?.1,
    })
}

/// Geodesy of a δ-metric space with respect to admissible edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeltaFlags {
    /// `Y = δ(sp Y)`.
    pub geodetic: bool,
    /// `Y = δ(L Y)`.
    pub linearly_geodetic: bool,
}

pub fn classify_delta(y: &FiniteDeltaSpace, admissible: &[(usize, usize)], cap: u64) -> Result<DeltaFlags> {
    Ok(DeltaFlags {
        geodetic: &delta_of(&sp_of(y, admissible)?, cap)? == y,
        linearly_geodetic: &delta_of(&l_of(y, admissible)?, cap)? == y,
    })
}

/// A map of chain w-spaces: vertices to vertices and edges to walks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    pub vertices: Vec<usize>,
    pub edges: Vec<Walk>,
}

impl VertexMap {
    pub fn new(source: &ChainWSpace, target: &ChainWSpace, vertices: Vec<usize>, edges: Vec<Walk>) -> Result<Self> {
        if vertices.len() != source.vertices.len() || edges.len() != source.edges.len() {
            return Err(Error::Shape("vertex map has the wrong arity".into()));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= target.vertices.len()) {
            return Err(out_of_range("target vertex", v));
        }
        for (k, w) in edges.iter().enumerate() {
            target.walk(w.start, w.edges.clone())?;
            let (a, b) = source.edges[k];
            if w.start != vertices[a] || target.end(w) != vertices[b] {
                return Err(Error::InvalidWSpace(format!("image of edge {k} has the wrong endpoints")));
            }
        }
        Ok(VertexMap { vertices, edges })
    }

    pub fn apply(&self, w: &Walk) -> Walk {
        let mut out = Walk::empty(self.vertices[w.start]);
        for &e in &w.edges {
            out.edges.extend_from_slice(&self.edges[e].edges);
        }
        out
    }

    /// Least `λ` with `w(f∘a) ≤ λ·w(a)` over walks of length at most `max_len`.
    pub fn lipschitz_weight(&self, source: &ChainWSpace, target: &ChainWSpace, max_len: usize, cap: u64) -> Result<ExtWeight> {
        let mut pairs = Vec::new();
        source.for_each_walk(max_len, cap, |w| pairs.push((source.weight(w), target.weight(&self.apply(w)))))?;
        Ok(least_scale(pairs))
    }
}
