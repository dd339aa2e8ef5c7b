//! Span, length and Lipschitz weight of paths.
//!
//! Two kinds of paths are supported:
//!
//! - [`PLPath`]: piecewise-affine paths `[0,1] → X` with rational breakpoints,
//!   where `X` is the δ-line, a δ-interval, a tensor power of these, or the
//!   δ-circle (each possibly with the opposite δ-metric). Every supremum is
//!   evaluated in closed form.
//! - [`ChainPath`]: finite vertex sequences in a [`FiniteDeltaSpace`].
//!
//! [`interval_lattice_check`] verifies the lattice structure of the δ-interval
//! (faces, degeneracy, connections, interchange, reflection) on a rational grid.

use num_traits::{One, Signed, Zero};

use crate::dmetric::FiniteDeltaSpace;
use crate::error::{Error, Result};
use crate::weight::{format_rational, int, ratio, ExtWeight, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseModel {
    /// `d(x,y) = y − x` if `x ≤ y`, else `∞`.
    DeltaLine,
    /// The restriction of the δ-line to `[lo, hi]`.
    DeltaInterval { lo: Rational, hi: Rational },
    /// `d(x,y) = (y − x) mod 1`, the length of the forward arc.
    DeltaCircle,
}

/// A standard model, its tensor powers and their opposites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyticModel {
    pub base: BaseModel,
    pub dim: usize,
    pub opposite: bool,
}

fn frac(r: &Rational) -> Rational {
    r - r.floor()
}

impl AnalyticModel {
    pub fn delta_line() -> Self {
        AnalyticModel { base: BaseModel::DeltaLine, dim: 1, opposite: false }
    }

    pub fn delta_interval(lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidPath(format!("interval needs lo < hi, got [{lo}, {hi}]")));
        }
        Ok(AnalyticModel { base: BaseModel::DeltaInterval { lo, hi }, dim: 1, opposite: false })
    }

    /// The standard δ-interval `δ[0,1]`.
    pub fn unit_interval() -> Self {
        Self::delta_interval(int(0), int(1)).expect("0 < 1")
    }

    pub fn delta_circle() -> Self {
        AnalyticModel { base: BaseModel::DeltaCircle, dim: 1, opposite: false }
    }

    /// `n`-fold tensor power. The circle is only available in dimension one.
    pub fn tensor_power(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPath("tensor power needs n ≥ 1".into()));
        }
        if self.base == BaseModel::DeltaCircle && self.dim * n > 1 {
            return Err(Error::InvalidPath("tensor powers of the δ-circle are not supported".into()));
        }
        Ok(AnalyticModel { dim: self.dim * n, ..self.clone() })
    }

    pub fn opposite(&self) -> Self {
        AnalyticModel { opposite: !self.opposite, ..self.clone() }
    }

    pub fn is_circle(&self) -> bool {
        self.base == BaseModel::DeltaCircle
    }

    fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.dim
            && match &self.base {
                BaseModel::DeltaInterval { lo, hi } => x.iter().all(|c| lo <= c && c <= hi),
                _ => true,
            }
    }

    /// Distance between two points. Circle points may be given by any lift.
    pub fn distance(&self, x: &[Rational], y: &[Rational]) -> ExtWeight {
        let (x, y) = if self.opposite { (y, x) } else { (x, y) };
        if self.is_circle() {
            return ExtWeight::Finite(frac(&(&y[0] - &x[0])));
        }
        x.iter()
            .zip(y)
            .map(|(a, b)| if a <= b { ExtWeight::Finite(b - a) } else { ExtWeight::Infinite })
            .sum()
    }

    /// Forward displacement of a coordinate increment (negated in the opposite model).
    fn oriented(&self, delta: Rational) -> Rational {
        if self.opposite {
            -delta
        } else {
            delta
        }
    }
}

/// Piecewise-affine path with breakpoints `0 = t₀ < … < t_p = 1`.
///
/// In the circle model `values` are lifts to the real line, so a segment's
/// direction and winding are part of the data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLPath {
    model: AnalyticModel,
    times: Vec<Rational>,
    values: Vec<Vec<Rational>>,
}

impl PLPath {
    pub fn new(model: AnalyticModel, times: Vec<Rational>, values: Vec<Vec<Rational>>) -> Result<Self> {
        if times.len() < 2 {
            return Err(Error::InvalidPath("needs at least the breakpoints 0 and 1".into()));
        }
        if !times[0].is_zero() || !times[times.len() - 1].is_one() {
            return Err(Error::InvalidPath("breakpoints must start at 0 and end at 1".into()));
        }
        if times.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPath("breakpoints must be strictly increasing".into()));
        }
        if values.len() != times.len() {
            return Err(Error::InvalidPath(format!(
                "{} values for {} breakpoints",
                values.len(),
                times.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !model.contains(v)) {
            return Err(Error::InvalidPath(format!("value {} outside the model", fmt_point(v))));
        }
        Ok(PLPath { model, times, values })
    }

    /// One-dimensional path from scalar values.
    pub fn scalar(model: AnalyticModel, times: Vec<Rational>, values: Vec<Rational>) -> Result<Self> {
        Self::new(model, times, values.into_iter().map(|v| vec![v]).collect())
    }

    /// Circle path through points of `[0,1)`, each step taking the forward arc
    /// of the model (so the path is locally forward by construction).
    pub fn circle_through(model: AnalyticModel, times: Vec<Rational>, points: Vec<Rational>) -> Result<Self> {
        if !model.is_circle() {
            return Err(Error::InvalidPath("circle_through needs the circle model".into()));
        }
        if let Some(p) = points.iter().find(|p| p.is_negative() || **p >= int(1)) {
            return Err(Error::InvalidPath(format!("circle point {p} is not in [0,1)")));
        }
        let mut lifts: Vec<Rational> = Vec::with_capacity(points.len());
        for p in &points {
            let next = match lifts.last() {
                None => p.clone(),
                Some(prev) => {
                    let arc = if model.opposite { -frac(&(prev - p)) } else { frac(&(p - prev)) };
                    prev + arc
                }
            };
            lifts.push(next);
        }
        Self::scalar(model, times, lifts)
    }

    pub fn constant(model: AnalyticModel, point: Vec<Rational>) -> Result<Self> {
        Self::new(model, vec![int(0), int(1)], vec![point.clone(), point])
    }

    pub fn model(&self) -> &AnalyticModel {
        &self.model
    }

    pub fn times(&self) -> &[Rational] {
        &self.times
    }

    pub fn values(&self) -> &[Vec<Rational>] {
        &self.values
    }

    pub fn start(&self) -> &[Rational] {
        &self.values[0]
    }

    pub fn end(&self) -> &[Rational] {
        &self.values[self.values.len() - 1]
    }

    /// Oriented increments per segment and coordinate.
    fn increments(&self) -> impl Iterator<Item = Vec<Rational>> + '_ {
        self.values.windows(2).map(|w| {
            w[0].iter().zip(&w[1]).map(|(a, b)| self.model.oriented(b - a)).collect()
        })
    }

    fn is_locally_forward(&self) -> bool {
        self.increments().all(|inc| inc.iter().all(|d| !d.is_negative()))
    }

    /// Total forward displacement, summed over coordinates.
    fn displacement(&self) -> Rational {
        self.increments().flatten().sum()
    }

    /// `L(a)`: the displacement if every coordinate moves forward, else `∞`.
    pub fn length(&self) -> ExtWeight {
        if self.is_locally_forward() {
            ExtWeight::Finite(self.displacement())
        } else {
            ExtWeight::Infinite
        }
    }

    /// `sp(a)`: the supremum of `d(a(t₀), a(t₁))` over `t₀ < t₁`.
    pub fn span(&self) -> ExtWeight {
        if !self.model.is_circle() {
            return self.length();
        }
        // circle distances stay below 1 and approach 1 along any backward
        // segment or once the path has wound a full turn
        if !self.is_locally_forward() {
            return ExtWeight::one();
        }
        let m = self.displacement();
        if m < int(1) {
            ExtWeight::Finite(m)
        } else {
            ExtWeight::one()
        }
    }

    /// `‖a‖`: the fastest segment velocity, `∞` if some segment moves backward.
    pub fn lipschitz_weight(&self) -> ExtWeight {
        let mut best = Rational::zero();
        for (inc, dt) in self.increments().zip(self.times.windows(2).map(|w| &w[1] - &w[0])) {
            if inc.iter().any(Signed::is_negative) {
                return ExtWeight::Infinite;
            }
            let v = inc.iter().sum::<Rational>() / dt;
            if v > best {
                best = v;
            }
        }
        ExtWeight::Finite(best)
    }

    /// The point `a(t)` for `t ∈ [0,1]`.
    pub fn eval(&self, t: &Rational) -> Vec<Rational> {
        let k = match self.times.iter().position(|s| s >= t) {
            Some(0) | None => return self.values[0].clone(),
            Some(k) => k,
        };
        let (t0, t1) = (&self.times[k - 1], &self.times[k]);
        let u = (t - t0) / (t1 - t0);
        self.values[k - 1].iter().zip(&self.values[k]).map(|(a, b)| a + (b - a) * &u).collect()
    }

    /// The partition sum `L_t(a) = Σ d(a(t_{i−1}), a(t_i))`.
    pub fn partition_sum(&self, partition: &[Rational]) -> ExtWeight {
        partition
            .windows(2)
            .map(|w| self.model.distance(&self.eval(&w[0]), &self.eval(&w[1])))
            .sum()
    }

    /// `a + b`: `a` on `[0, 1/2]`, `b` on `[1/2, 1]`.
    pub fn concatenate(&self, other: &PLPath) -> Result<PLPath> {
        if self.model != other.model {
            return Err(Error::InvalidPath("paths live in different models".into()));
        }
        let (end, start) = (self.end(), other.start());
        let shift: Vec<Rational> = if self.model.is_circle() {
            if frac(&(&end[0] - &start[0])) != Rational::zero() {
                return Err(Error::EndpointMismatch { end: fmt_point(end), start: fmt_point(start) });
            }
            vec![&end[0] - &start[0]]
        } else {
            if end != start {
                return Err(Error::EndpointMismatch { end: fmt_point(end), start: fmt_point(start) });
            }
            vec![Rational::zero(); end.len()]
        };
        let half = ratio(1, 2);
        let mut times: Vec<Rational> = self.times.iter().map(|t| t * &half).collect();
        let mut values = self.values.clone();
        for (t, v) in other.times.iter().zip(&other.values).skip(1) {
            times.push(&half + t * &half);
            values.push(v.iter().zip(&shift).map(|(a, s)| a + s).collect());
        }
        PLPath::new(self.model.clone(), times, values)
    }

    /// `a^op = a ∘ r` with `r(t) = 1 − t`, a path in the opposite model.
    pub fn reflect(&self) -> PLPath {
        let one = int(1);
        PLPath {
            model: self.model.opposite(),
            times: self.times.iter().rev().map(|t| &one - t).collect(),
            values: self.values.iter().rev().cloned().collect(),
        }
    }

    /// `a ∘ ρ` for a weakly increasing piecewise-affine `ρ: [0,1] → [0,1]`.
    pub fn reparameterize(&self, rho: &PLPath) -> Result<PLPath> {
        let in_unit = rho.model.dim == 1
            && !rho.model.is_circle()
            && !rho.model.opposite
            && rho.values.iter().all(|v| !v[0].is_negative() && v[0] <= int(1));
        if !in_unit || !rho.is_locally_forward() {
            return Err(Error::InvalidPath("reparameterization must be weakly increasing into [0,1]".into()));
        }
        let mut ts: Vec<Rational> = rho.times.clone();
        for (w, r) in rho.times.windows(2).zip(rho.values.windows(2)) {
            let (s0, s1, r0, r1) = (&w[0], &w[1], &r[0][0], &r[1][0]);
            if r0 == r1 {
                continue;
            }
            for tau in self.times.iter().filter(|tau| r0 < *tau && *tau < r1) {
                ts.push(s0 + (tau - r0) * (s1 - s0) / (r1 - r0));
            }
        }
        ts.sort();
        ts.dedup();
        let values = ts.iter().map(|s| self.eval(&rho.eval(s)[0])).collect();
        PLPath::new(self.model.clone(), ts, values)
    }

    /// `f ∘ a` for the dilation `f(x) = λx` of a line or interval model, whose
    /// Lipschitz weight is `λ`.
    pub fn dilate(&self, lambda: &Rational) -> Result<PLPath> {
        if !lambda.is_positive() {
            return Err(Error::InvalidPath("dilation factor must be positive".into()));
        }
        let base = match &self.model.base {
            BaseModel::DeltaLine => BaseModel::DeltaLine,
            BaseModel::DeltaInterval { lo, hi } => BaseModel::DeltaInterval { lo: lo * lambda, hi: hi * lambda },
            BaseModel::DeltaCircle => return Err(Error::InvalidPath("cannot dilate the δ-circle".into())),
        };
        let model = AnalyticModel { base, ..self.model.clone() };
        let values = self.values.iter().map(|v| v.iter().map(|c| c * lambda).collect()).collect();
        PLPath::new(model, self.times.clone(), values)
    }

    /// The path `(a, b)` in the tensor product of the two models.
    pub fn pair(&self, other: &PLPath) -> Result<PLPath> {
        if self.model.base != other.model.base || self.model.opposite != other.model.opposite {
            return Err(Error::InvalidPath("pairing needs the same base model".into()));
        }
        let model = AnalyticModel { dim: self.model.dim + other.model.dim, ..self.model.clone() };
        if model.is_circle() {
            return Err(Error::InvalidPath("tensor powers of the δ-circle are not supported".into()));
        }
        let mut ts: Vec<Rational> = self.times.iter().chain(&other.times).cloned().collect();
        ts.sort();
        ts.dedup();
        let values = ts
            .iter()
            .map(|t| {
                let mut v = self.eval(t);
                v.extend(other.eval(t));
                v
            })
            .collect();
        PLPath::new(model, ts, values)
    }
}

fn fmt_point(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

/// A path in a finite δ-metric space given by its successive vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainPath {
    space: FiniteDeltaSpace,
    vertices: Vec<usize>,
}

impl ChainPath {
    pub fn new<S: AsRef<str>>(space: FiniteDeltaSpace, labels: &[S]) -> Result<Self> {
        let vertices = labels.iter().map(|l| space.index_of(l.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::from_indices(space, vertices)
    }

    pub fn from_indices(space: FiniteDeltaSpace, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Empty("a chain path needs a vertex"));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= space.len()) {
            return Err(Error::UnknownLabel(v.to_string()));
        }
        Ok(ChainPath { space, vertices })
    }

    pub fn space(&self) -> &FiniteDeltaSpace {
        &self.space
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// `max_{i<j} d(x_i, x_j)`, zero for a single vertex.
    pub fn span(&self) -> ExtWeight {
        let v = &self.vertices;
        (0..v.len())
            .flat_map(|i| (i + 1..v.len()).map(move |j| (i, j)))
            .map(|(i, j)| self.space.dist(v[i], v[j]).clone())
            .max()
            .unwrap_or_default()
    }

    /// `Σ d(x_{i−1}, x_i)`.
    pub fn length(&self) -> ExtWeight {
        self.vertices.windows(2).map(|w| self.space.dist(w[0], w[1])).sum()
    }

    /// Concatenation at a shared vertex.
    pub fn concatenate(&self, other: &ChainPath) -> Result<ChainPath> {
        if self.space != other.space {
            return Err(Error::InvalidPath("chains live in different spaces".into()));
        }
        let (end, start) = (self.vertices[self.vertices.len() - 1], other.vertices[0]);
        if end != start {
            return Err(Error::EndpointMismatch {
                end: self.space.label(end).to_string(),
                start: self.space.label(start).to_string(),
            });
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Ok(ChainPath { space: self.space.clone(), vertices })
    }

    /// `a ∘ ρ` for a weakly increasing index map `ρ`.
    pub fn reparameterize(&self, rho: &[usize]) -> Result<ChainPath> {
        if rho.is_empty() || rho.windows(2).any(|w| w[0] > w[1]) || rho.iter().any(|&i| i >= self.vertices.len()) {
            return Err(Error::InvalidPath("index map must be weakly increasing and in range".into()));
        }
        Ok(ChainPath { space: self.space.clone(), vertices: rho.iter().map(|&i| self.vertices[i]).collect() })
    }

    /// The image under a point map given as an assignment into `target`.
    pub fn map(&self, target: &FiniteDeltaSpace, f: &[usize]) -> Result<ChainPath> {
        ChainPath::from_indices(target.clone(), self.vertices.iter().map(|&v| f[v]).collect())
    }

    /// The same vertices in the opposite space, in reverse order.
    pub fn reflect(&self) -> ChainPath {
        ChainPath { space: self.space.opposite(), vertices: self.vertices.iter().rev().copied().collect() }
    }
}

/// One identity of the interval lattice, with a counterexample if it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCheck {
    pub name: &'static str,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeReport {
    pub grid: u32,
    pub checks: Vec<LatticeCheck>,
}

impl LatticeReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &LatticeCheck> {
        self.checks.iter().filter(|c| c.witness.is_some())
    }
}

type Pt = Vec<Rational>;

fn g_minus(t: &Rational, u: &Rational) -> Rational {
    t.max(u).clone()
}

fn g_plus(t: &Rational, u: &Rational) -> Rational {
    t.min(u).clone()
}

fn check<F>(name: &'static str, points: &[Pt], lhs_eq_rhs: F) -> LatticeCheck
where
    F: Fn(&Pt) -> (Pt, Pt),
{
    let witness = points.iter().find_map(|p| {
        let (l, r) = lhs_eq_rhs(p);
        (l != r).then(|| format!("at {}: {} vs {}", fmt_point(p), fmt_point(&l), fmt_point(&r)))
    });
    LatticeCheck { name, witness }
}

/// 1-Lipschitz check of a map between tensor powers of `δI` on all grid pairs.
fn contraction<F>(name: &'static str, points: &[Pt], f: F) -> LatticeCheck
where
    F: Fn(&Pt) -> Pt,
{
    let di = AnalyticModel::unit_interval();
    let images: Vec<Pt> = points.iter().map(&f).collect();
    let (src, tgt) = (di.tensor_power(points[0].len()).unwrap(), di.tensor_power(images[0].len()).unwrap());
    let witness = (0..points.len()).flat_map(|i| (0..points.len()).map(move |j| (i, j))).find_map(|(i, j)| {
        (tgt.distance(&images[i], &images[j]) > src.distance(&points[i], &points[j]))
            .then(|| format!("d({}, {}) increases", fmt_point(&points[i]), fmt_point(&points[j])))
    });
    LatticeCheck { name, witness }
}

/// Verifies the interval-lattice identities on the grid `{k/n}` of `I`, `I²`, `I³`.
///
/// Natural transformations of the cylinder `I(X) = X ⊗ δI` are checked through
/// their components on the point, i.e. as maps between powers of `δI`; the
/// coordinate added by `I` is the last one. All maps involved are
/// piecewise-affine with breakpoints on the diagonals of the grid cells, so
/// agreement on the grid implies agreement everywhere.
pub fn interval_lattice_check_on(n: u32) -> LatticeReport {
    let grid: Vec<Rational> = (0..=n as i64).map(|k| ratio(k, n as i64)).collect();
    let i1: Vec<Pt> = grid.iter().map(|t| vec![t.clone()]).collect();
    let i2: Vec<Pt> = grid.iter().flat_map(|t| grid.iter().map(move |u| vec![t.clone(), u.clone()])).collect();
    let i3: Vec<Pt> = i2
        .iter()
        .flat_map(|p| grid.iter().map(move |u| vec![p[0].clone(), p[1].clone(), u.clone()]))
        .collect();
    let point: Vec<Pt> = vec![vec![]];
    let (zero, one) = (int(0), int(1));
    let mut checks = Vec::new();

    for (alpha, name_suffix) in [(&zero, "-"), (&one, "+")] {
        let g = if alpha.is_zero() { g_minus } else { g_plus };
        let g_other = if alpha.is_zero() { g_plus } else { g_minus };
        let nm = |s: &'static str, t: &'static str| if name_suffix == "-" { s } else { t };
        checks.push(check(nm("e.d- = 1", "e.d+ = 1"), &point, |_| (vec![], vec![])));
        checks.push(check(nm("e.g- = e.Ie", "e.g+ = e.Ie"), &i2, |_| (vec![], vec![])));
        checks.push(check(nm("g-.Ig- = g-.g-I", "g+.Ig+ = g+.g+I"), &i3, |p| {
            (vec![g(&g(&p[0], &p[1]), &p[2])], vec![g(&p[0], &g(&p[1], &p[2]))])
        }));
        checks.push(check(nm("g-.Id- = 1", "g+.Id+ = 1"), &i1, |p| (vec![g(alpha, &p[0])], p.clone())));
        checks.push(check(nm("g-.d-I = 1", "g+.d+I = 1"), &i1, |p| (vec![g(&p[0], alpha)], p.clone())));
        checks.push(check(nm("g+.Id- = d-.e", "g-.Id+ = d+.e"), &i1, |p| {
            (vec![g_other(alpha, &p[0])], vec![alpha.clone()])
        }));
        checks.push(check(nm("g+.d-I = d-.e", "g-.d+I = d+.e"), &i1, |p| {
            (vec![g_other(&p[0], alpha)], vec![alpha.clone()])
        }));
        checks.push(check(nm("s.Id- = d-I", "s.Id+ = d+I"), &i1, |p| {
            (vec![p[0].clone(), alpha.clone()], vec![p[0].clone(), alpha.clone()])
        }));
        checks.push(check(nm("g-.s = g-", "g+.s = g+"), &i2, |p| (vec![g(&p[1], &p[0])], vec![g(&p[0], &p[1])])));
    }
    checks.push(check("s.s = 1", &i2, |p| (vec![p[0].clone(), p[1].clone()], p.clone())));
    checks.push(check("Ie.s = eI", &i2, |p| {
        let swapped = [p[1].clone(), p[0].clone()];
        (vec![swapped[1].clone()], vec![p[0].clone()])
    }));

    let r = |t: &Rational| &one - t;
    checks.push(check("RrR.r = id", &i1, |p| (vec![r(&r(&p[0]))], p.clone())));
    checks.push(check("R.e.r = eR", &i1, |_| (vec![], vec![])));
    checks.push(check("r.d-R = Rd+", &point, |_| (vec![r(&zero)], vec![one.clone()])));
    checks.push(check("r.g-R = Rg+.r2", &i2, |p| {
        (vec![r(&g_minus(&p[0], &p[1]))], vec![g_plus(&r(&p[0]), &r(&p[1]))])
    }));
    checks.push(check("R.s.r2 = r2.sR", &i2, |p| {
        (vec![r(&p[1]), r(&p[0])], vec![r(&p[1]), r(&p[0])])
    }));

    checks.push(contraction("g- is 1-Lipschitz", &i2, |p| vec![g_minus(&p[0], &p[1])]));
    checks.push(contraction("g+ is 1-Lipschitz", &i2, |p| vec![g_plus(&p[0], &p[1])]));
    checks.push(contraction("s is 1-Lipschitz", &i2, |p| vec![p[1].clone(), p[0].clone()]));
    let di = AnalyticModel::unit_interval();
    let dop = di.opposite();
    let witness = i1.iter().flat_map(|x| i1.iter().map(move |y| (x, y))).find_map(|(x, y)| {
        (dop.distance(x, y) != di.distance(&[r(&x[0])], &[r(&y[0])]))
            .then(|| format!("d^op({}, {})", fmt_point(x), fmt_point(y)))
    });
    checks.push(LatticeCheck { name: "r is an isometry δI^op → δI", witness });

    LatticeReport { grid: n, checks }
}

/// [`interval_lattice_check_on`] with the grid `{k/16}`.
pub fn interval_lattice_check() -> LatticeReport {
    interval_lattice_check_on(16)
}
