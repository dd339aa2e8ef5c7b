//! The fundamental weighted category of a directed plane with open
//! rectangular holes, under the l1 (tensor) metric.
//!
//! Directed paths are monotone staircases on a grid refined by the bounds,
//! every hole corner and every marked point. Two staircases are 2-homotopic
//! when they are related by swaps `UR ↔ RU` across grid cells that avoid all
//! holes. Each class has a unique lowest staircase, used as its normal form.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::paths::{AnalyticModel, PLPath};
use crate::wcat::{pushout_wcat, FiniteWeightedCategory, Morphism, WFunctor, DEFAULT_WORD_CAP};
use crate::weight::{format_rational, int, ratio, ExtWeight, Rational};

/// Default bound on the number of classes enumerated per hom-set.
pub const DEFAULT_PATH_CAP: u64 = 1_000_000;

/// A closed axis-parallel rectangle `[x0,x1] × [y0,y1]`, possibly degenerate.
/// As a hole it stands for its interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rect {
    pub x0: Rational,
    pub y0: Rational,
    pub x1: Rational,
    pub y1: Rational,
}

impl Rect {
    pub fn new(x0: Rational, y0: Rational, x1: Rational, y1: Rational) -> Result<Self> {
        if x0 > x1 || y0 > y1 {
            return Err(Error::InvalidPlane(format!("rectangle with corners ({x0},{y0}) and ({x1},{y1}) is reversed")));
        }
        Ok(Rect { x0, y0, x1, y1 })
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        &self.x0 <= x && x <= &self.x1 && &self.y0 <= y && y <= &self.y1
    }

    pub fn interior_contains(&self, x: &Rational, y: &Rational) -> bool {
        &self.x0 < x && x < &self.x1 && &self.y0 < y && y < &self.y1
    }

    pub fn is_degenerate(&self) -> bool {
        self.x0 == self.x1 || self.y0 == self.y1
    }

    fn closures_meet(&self, other: &Rect) -> bool {
        self.x0 <= other.x1 && other.x0 <= self.x1 && self.y0 <= other.y1 && other.y0 <= self.y1
    }

    fn intersection(&self, other: &Rect) -> Option<Rect> {
        if !self.closures_meet(other) {
            return None;
        }
        Some(Rect {
            x0: self.x0.clone().max(other.x0.clone()),
            y0: self.y0.clone().max(other.y0.clone()),
            x1: self.x1.clone().min(other.x1.clone()),
            y1: self.y1.clone().min(other.y1.clone()),
        })
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{}]x[{},{}]",
            format_rational(&self.x0),
            format_rational(&self.x1),
            format_rational(&self.y0),
            format_rational(&self.y1)
        )
    }
}

pub type Point = (Rational, Rational);

fn format_point(p: &Point) -> String {
    format!("({},{})", format_rational(&p.0), format_rational(&p.1))
}

/// The rectangle `[0,A] × [0,B]` with open rectangular holes removed, and a
/// list of marked points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoledPlane {
    width: Rational,
    height: Rational,
    holes: Vec<Rect>,
    marked: Vec<Point>,
    labels: Vec<String>,
}

impl HoledPlane {
    /// Marked points are labelled by their coordinates.
    pub fn new(width: Rational, height: Rational, holes: Vec<Rect>, marked: Vec<Point>) -> Result<Self> {
        let labels = marked.iter().map(format_point).collect();
        Self::with_labels(width, height, holes, marked, labels)
    }

    pub fn with_labels(
        width: Rational,
        height: Rational,
        holes: Vec<Rect>,
        marked: Vec<Point>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if width <= Rational::zero() || height <= Rational::zero() {
            return Err(Error::InvalidPlane("bounds must be positive".into()));
        }
        let bounds = Rect::new(Rational::zero(), Rational::zero(), width.clone(), height.clone())?;
        for h in &holes {
            if h.is_degenerate() {
                return Err(Error::InvalidPlane(format!("hole {h} has empty interior")));
            }
            if !bounds.contains(&h.x0, &h.y0) || !bounds.contains(&h.x1, &h.y1) {
                return Err(Error::InvalidPlane(format!("hole {h} leaves the bounds")));
            }
        }
        for (i, a) in holes.iter().enumerate() {
            for b in &holes[i + 1..] {
                if a.closures_meet(b) {
                    return Err(Error::InvalidPlane(format!("holes {a} and {b} touch")));
                }
            }
        }
        for p in &marked {
            if !bounds.contains(&p.0, &p.1) {
                return Err(Error::InvalidPlane(format!("marked point {} is outside the bounds", format_point(p))));
            }
            if let Some(h) = holes.iter().find(|h| h.interior_contains(&p.0, &p.1)) {
                return Err(Error::InvalidPlane(format!("marked point {} lies in hole {h}", format_point(p))));
            }
        }
        for (i, p) in marked.iter().enumerate() {
            if marked[..i].contains(p) {
                return Err(Error::InvalidPlane(format!("marked point {} is repeated", format_point(p))));
            }
        }
        if labels.len() != marked.len() {
            return Err(Error::Shape(format!("{} labels for {} marked points", labels.len(), marked.len())));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(HoledPlane { width, height, holes, marked, labels })
    }

    /// `[0,1]²` minus `(1/3,2/3)²`, marked at `0`, `p = (1/3,1/3)`,
    /// `q = (2/3,2/3)` and `1`.
    pub fn square_annulus() -> Self {
        let (a, b) = (ratio(1, 3), ratio(2, 3));
        let hole = Rect::new(a.clone(), a.clone(), b.clone(), b.clone()).expect("ordered");
        let marked = vec![(int(0), int(0)), (a.clone(), a), (b.clone(), b), (int(1), int(1))];
        let labels = ["0", "p", "q", "1"].map(String::from).to_vec();
        Self::with_labels(int(1), int(1), vec![hole], marked, labels).expect("valid annulus")
    }

    pub fn width(&self) -> &Rational {
        &self.width
    }

    pub fn height(&self) -> &Rational {
        &self.height
    }

    pub fn holes(&self) -> &[Rect] {
        &self.holes
    }

    pub fn marked(&self) -> &[Point] {
        &self.marked
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mark_index(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Whether the point lies in the plane, i.e. in the bounds and outside every hole.
    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        let zero = Rational::zero();
        &zero <= x && x <= &self.width && &zero <= y && y <= &self.height && !self.in_hole(x, y)
    }

    pub fn in_hole(&self, x: &Rational, y: &Rational) -> bool {
        self.holes.iter().any(|h| h.interior_contains(x, y))
    }

    /// The same plane with additional marked points, labelled by coordinates.
    /// Points already marked are skipped.
    pub fn with_marks(&self, points: &[Point]) -> Result<Self> {
        let mut marked = self.marked.clone();
        let mut labels = self.labels.clone();
        for p in points {
            if !marked.contains(p) {
                marked.push(p.clone());
                labels.push(format_point(p));
            }
        }
        Self::with_labels(self.width.clone(), self.height.clone(), self.holes.clone(), marked, labels)
    }

    /// The same plane with the `k`-th hole filled in.
    pub fn without_hole(&self, k: usize) -> Self {
        let mut p = self.clone();
        p.holes.remove(k);
        p
    }

    /// The image under the half turn `(x, y) ↦ (A − x, B − y)`, which reverses
    /// the direction of all paths. Labels are kept.
    pub fn rotate_half_turn(&self) -> Self {
        let (w, h) = (&self.width, &self.height);
        let holes = self
            .holes
            .iter()
            .map(|r| Rect { x0: w - &r.x1, y0: h - &r.y1, x1: w - &r.x0, y1: h - &r.y0 })
            .collect();
        let marked = self.marked.iter().map(|(x, y)| (w - x, h - y)).collect();
        HoledPlane { width: w.clone(), height: h.clone(), holes, marked, labels: self.labels.clone() }
    }
}

/// Sorted grid coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub xs: Vec<Rational>,
    pub ys: Vec<Rational>,
}

impl Grid {
    /// The grid refined by extra coordinates.
    pub fn refine(&self, xs: impl IntoIterator<Item = Rational>, ys: impl IntoIterator<Item = Rational>) -> Grid {
        let xs: BTreeSet<Rational> = self.xs.iter().cloned().chain(xs).collect();
        let ys: BTreeSet<Rational> = self.ys.iter().cloned().chain(ys).collect();
        Grid { xs: xs.into_iter().collect(), ys: ys.into_iter().collect() }
    }

    fn refine_by_rects(&self, rects: &[Rect]) -> Grid {
        self.refine(
            rects.iter().flat_map(|r| [r.x0.clone(), r.x1.clone()]),
            rects.iter().flat_map(|r| [r.y0.clone(), r.y1.clone()]),
        )
    }

    fn node_of(&self, p: &Point) -> Option<(usize, usize)> {
        Some((self.xs.binary_search(&p.0).ok()?, self.ys.binary_search(&p.1).ok()?))
    }
}

/// Bounds, hole corners and marked point coordinates.
pub fn refine_grid(plane: &HoledPlane) -> Grid {
    let zero = Rational::zero();
    let base = Grid { xs: vec![zero.clone(), plane.width.clone()], ys: vec![zero, plane.height.clone()] };
    base.refine_by_rects(&plane.holes).refine(
        plane.marked.iter().map(|p| p.0.clone()),
        plane.marked.iter().map(|p| p.1.clone()),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Right,
    Up,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Step::Right => "R",
            Step::Up => "U",
        })
    }
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Which nodes, edges and cells of a grid lie in a closed region of the plane.
#[derive(Clone, Debug)]
struct Lattice {
    grid: Grid,
    node: Vec<bool>,
    /// `(i, j) → (i + 1, j)`.
    right: Vec<bool>,
    /// `(i, j) → (i, j + 1)`.
    up: Vec<bool>,
    /// The cell with lower-left corner `(i, j)`.
    cell: Vec<bool>,
}

impl Lattice {
    /// The region `plane ∩ ⋃ pieces`, or the whole plane.
    fn new(plane: &HoledPlane, pieces: Option<&[Rect]>, grid: Grid) -> Self {
        let inside = |x: &Rational, y: &Rational| -> bool {
            plane.contains(x, y) && pieces.is_none_or(|ps| ps.iter().any(|r| r.contains(x, y)))
        };
        let (nx, ny) = (grid.xs.len(), grid.ys.len());
        let mut node = vec![false; nx * ny];
        let mut right = vec![false; nx * ny];
        let mut up = vec![false; nx * ny];
        let mut cell = vec![false; nx * ny];
        for i in 0..nx {
            for j in 0..ny {
                let (x, y) = (&grid.xs[i], &grid.ys[j]);
                let k = i * ny + j;
                node[k] = inside(x, y);
                if i + 1 < nx {
                    right[k] = inside(&half(x, &grid.xs[i + 1]), y);
                }
                if j + 1 < ny {
                    up[k] = inside(x, &half(y, &grid.ys[j + 1]));
                }
                if i + 1 < nx && j + 1 < ny {
                    cell[k] = inside(&half(x, &grid.xs[i + 1]), &half(y, &grid.ys[j + 1]));
                }
            }
        }
        Lattice { grid, node, right, up, cell }
    }

    fn ny(&self) -> usize {
        self.grid.ys.len()
    }

    fn at(&self, v: &[bool], (i, j): (usize, usize)) -> bool {
        v[i * self.ny() + j]
    }

    fn step_ok(&self, (i, j): (usize, usize), s: Step) -> bool {
        match s {
            Step::Right => i + 1 < self.grid.xs.len() && self.at(&self.right, (i, j)),
            Step::Up => j + 1 < self.ny() && self.at(&self.up, (i, j)),
        }
    }

    /// Lowest staircases from `s` to `t`, in lexicographic order (`R < U`).
    fn normal_forms(&self, s: (usize, usize), t: (usize, usize), cap: u64) -> Result<Vec<Vec<Step>>> {
        if t.0 < s.0 || t.1 < s.1 || !self.at(&self.node, s) || !self.at(&self.node, t) {
            return Ok(Vec::new());
        }
        let (w, h) = (t.0 - s.0 + 1, t.1 - s.1 + 1);
        let mut reach = vec![false; w * h];
        for di in (0..w).rev() {
            for dj in (0..h).rev() {
                let p = (s.0 + di, s.1 + dj);
                reach[di * h + dj] = self.at(&self.node, p)
                    && ((di + 1 == w && dj + 1 == h)
                        || (di + 1 < w && self.step_ok(p, Step::Right) && reach[(di + 1) * h + dj])
                        || (dj + 1 < h && self.step_ok(p, Step::Up) && reach[di * h + dj + 1]));
            }
        }
        let reaches = |(i, j): (usize, usize)| i <= t.0 && j <= t.1 && reach[(i - s.0) * h + (j - s.1)];
        if !reaches(s) {
            return Ok(Vec::new());
        }
        let budget = cap.saturating_mul((w + h) as u64);
        let mut visited = 0u64;
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.extend(s, t, &reaches, &mut path, &mut out, cap, budget, &mut visited)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        p: (usize, usize),
        t: (usize, usize),
        reaches: &dyn Fn((usize, usize)) -> bool,
        path: &mut Vec<Step>,
        out: &mut Vec<Vec<Step>>,
        cap: u64,
        budget: u64,
        visited: &mut u64,
    ) -> Result<()> {
        *visited += 1;
        if *visited > budget {
            return Err(Error::SizeLimitExceeded { what: "lattice path search", limit: budget });
        }
        if p == t {
            out.push(path.clone());
            if out.len() as u64 > cap {
                return Err(Error::SizeLimitExceeded { what: "path classes", limit: cap });
            }
            return Ok(());
        }
        let after_up = path.last() == Some(&Step::Up);
        if self.step_ok(p, Step::Right) && reaches((p.0 + 1, p.1)) && !(after_up && self.at(&self.cell, (p.0, p.1 - 1))) {
            path.push(Step::Right);
            self.extend((p.0 + 1, p.1), t, reaches, path, out, cap, budget, visited)?;
            path.pop();
        }
        if self.step_ok(p, Step::Up) && reaches((p.0, p.1 + 1)) {
            path.push(Step::Up);
            self.extend((p.0, p.1 + 1), t, reaches, path, out, cap, budget, visited)?;
            path.pop();
        }
        Ok(())
    }

    /// Lowers a staircase by swapping `UR` to `RU` wherever the cell below-right is free.
    fn normalize(&self, s: (usize, usize), mut steps: Vec<Step>) -> Vec<Step> {
        loop {
            let mut changed = false;
            let mut p = s;
            let mut k = 0;
            while k < steps.len() {
                if k + 1 < steps.len() && steps[k] == Step::Up && steps[k + 1] == Step::Right && self.at(&self.cell, p) {
                    steps.swap(k, k + 1);
                    changed = true;
                }
                match steps[k] {
                    Step::Right => p.0 += 1,
                    Step::Up => p.1 += 1,
                }
                k += 1;
            }
            if !changed {
                return steps;
            }
        }
    }

    fn corners(&self, s: (usize, usize), steps: &[Step]) -> Vec<Point> {
        let point = |(i, j): (usize, usize)| (self.grid.xs[i].clone(), self.grid.ys[j].clone());
        let mut out = vec![point(s)];
        let mut p = s;
        for (k, st) in steps.iter().enumerate() {
            match st {
                Step::Right => p.0 += 1,
                Step::Up => p.1 += 1,
            }
            if k + 1 == steps.len() || steps[k + 1] != *st {
                out.push(point(p));
            }
        }
        out
    }
}

/// A 2-homotopy class of directed paths between marked points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePathClass {
    /// Index of the source among the plane's marked points.
    pub source: usize,
    pub target: usize,
    /// Steps of the lowest staircase on the refined grid.
    pub steps: Vec<Step>,
    /// Corners of the lowest staircase, from source to target.
    pub representative: Vec<Point>,
}

impl LatticePathClass {
    pub fn steps_string(&self) -> String {
        self.steps.iter().map(Step::to_string).collect()
    }
}

/// The infimum of the lengths of the paths in the class. Every monotone path
/// has l1 length equal to the displacement, so the lowest staircase attains it.
pub fn class_weight(class: &LatticePathClass) -> ExtWeight {
    let r = &class.representative;
    if r.len() < 2 {
        return ExtWeight::zero();
    }
    let n = r.len() as i64 - 1;
    let times = (0..=n).map(|k| ratio(k, n)).collect();
    let values = r.iter().map(|(x, y)| vec![x.clone(), y.clone()]).collect();
    let model = AnalyticModel::delta_line().tensor_power(2).expect("planar model");
    PLPath::new(model, times, values).expect("staircase corners are distinct").length()
}

/// The classes of directed paths between two marked points, lowest first.
pub fn enumerate_classes(plane: &HoledPlane, x: usize, y: usize, cap: u64) -> Result<Vec<LatticePathClass>> {
    for m in [x, y] {
        if m >= plane.marked.len() {
            return Err(Error::UnknownObject(format!("marked point {m}")));
        }
    }
    let lattice = Lattice::new(plane, None, refine_grid(plane));
    classes_between(&lattice, plane, x, y, cap)
}

fn classes_between(lattice: &Lattice, plane: &HoledPlane, x: usize, y: usize, cap: u64) -> Result<Vec<LatticePathClass>> {
    let s = lattice.grid.node_of(&plane.marked[x]).expect("marks are grid nodes");
    let t = lattice.grid.node_of(&plane.marked[y]).expect("marks are grid nodes");
    Ok(lattice
        .normal_forms(s, t, cap)?
        .into_iter()
        .map(|steps| LatticePathClass { source: x, target: y, representative: lattice.corners(s, &steps), steps })
        .collect())
}

/// `wΠ₁` of a holed plane (or of a closed region of it) on its marked points.
#[derive(Clone, Debug)]
pub struct FundamentalCategory {
    pub plane: HoledPlane,
    pub grid: Grid,
    /// The marked points serving as objects, as indices into the plane's marks.
    pub marks: Vec<usize>,
    /// `classes[m]` is the class of morphism `m`.
    pub classes: Vec<LatticePathClass>,
    pub category: FiniteWeightedCategory,
}

impl FundamentalCategory {
    pub fn class(&self, m: usize) -> &LatticePathClass {
        &self.classes[m]
    }
}

pub fn fundamental_category(plane: &HoledPlane, cap: u64) -> Result<FundamentalCategory> {
    fundamental_category_on_grid(plane, &refine_grid(plane), cap)
}

/// As [`fundamental_category`], computed on a refinement of the plane's grid.
pub fn fundamental_category_on_grid(plane: &HoledPlane, grid: &Grid, cap: u64) -> Result<FundamentalCategory> {
    let grid = refine_grid(plane).refine(grid.xs.iter().cloned(), grid.ys.iter().cloned());
    build(plane, None, grid, cap)
}

fn build(plane: &HoledPlane, pieces: Option<&[Rect]>, grid: Grid, cap: u64) -> Result<FundamentalCategory> {
    let lattice = Lattice::new(plane, pieces, grid);
    let marks: Vec<usize> = (0..plane.marked.len())
        .filter(|&m| {
            let node = lattice.grid.node_of(&plane.marked[m]).expect("marks are grid nodes");
            lattice.at(&lattice.node, node)
        })
        .collect();
    let n = marks.len();
    let mut classes = Vec::new();
    let mut morphisms = Vec::new();
    let mut identities = vec![0; n];
    let mut index: HashMap<(usize, usize, Vec<Step>), usize> = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            let found = classes_between(&lattice, plane, marks[a], marks[b], cap)?;
            let several = found.len() > 1;
            for (k, c) in found.into_iter().enumerate() {
                let mut name = format!("{}->{}", plane.labels[marks[a]], plane.labels[marks[b]]);
                if several {
                    name.push_str(&format!("#{k}"));
                }
                if a == b && c.steps.is_empty() {
                    identities[a] = morphisms.len();
                    name = format!("1_{}", plane.labels[marks[a]]);
                }
                index.insert((a, b, c.steps.clone()), morphisms.len());
                morphisms.push(Morphism { name, source: a, target: b, weight: class_weight(&c) });
                classes.push(c);
            }
        }
    }
    let object_of: HashMap<usize, usize> = marks.iter().enumerate().map(|(o, &m)| (m, o)).collect();
    let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in classes.iter().enumerate() {
        by_source[object_of[&c.source]].push(i);
    }
    let mut compose = HashMap::new();
    for (i, f) in classes.iter().enumerate() {
        let s = lattice.grid.node_of(&plane.marked[f.source]).expect("grid node");
        for &j in &by_source[object_of[&f.target]] {
            let g = &classes[j];
            let steps = lattice.normalize(s, [f.steps.clone(), g.steps.clone()].concat());
            let k = index[&(object_of[&f.source], object_of[&g.target], steps)];
            compose.insert((i, j), k);
        }
    }
    let objects = marks.iter().map(|&m| plane.labels[m].clone()).collect();
    let category = FiniteWeightedCategory::new(objects, morphisms, identities, compose)?;
    Ok(FundamentalCategory { plane: plane.clone(), grid: lattice.grid, marks, classes, category })
}

/// The functor induced by the inclusion of one region in another. Both must
/// be computed on the same grid, and every object of `sub` must be an object
/// of `sup`.
pub fn inclusion_functor(sub: &FundamentalCategory, sup: &FundamentalCategory) -> Result<WFunctor> {
    if sub.grid != sup.grid {
        return Err(Error::Shape("inclusion needs both categories on the same grid".into()));
    }
    let lattice = Lattice::new(&sup.plane, None, sup.grid.clone());
    let objects = sub
        .marks
        .iter()
        .map(|&m| {
            let p = &sub.plane.marked[m];
            sup.marks
                .iter()
                .position(|&n| &sup.plane.marked[n] == p)
                .ok_or_else(|| Error::UnknownObject(format_point(p)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut index: HashMap<(usize, usize, &[Step]), usize> = HashMap::new();
    for (i, c) in sup.classes.iter().enumerate() {
        index.insert((c.source, c.target, &c.steps), i);
    }
    let mark_in_sup = |m: usize| sup.marks[objects[sub.marks.iter().position(|&k| k == m).expect("object")]];
    let morphisms = sub
        .classes
        .iter()
        .map(|c| {
            let (a, b) = (mark_in_sup(c.source), mark_in_sup(c.target));
            let s = lattice.grid.node_of(&sup.plane.marked[a]).expect("grid node");
            let steps = lattice.normalize(s, c.steps.clone());
            index.get(&(a, b, steps.as_slice())).copied().ok_or_else(|| Error::InvalidPath(c.steps_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let f = WFunctor { objects, morphisms };
    f.validate(&sub.category, &sup.category)?;
    Ok(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    /// Every class contains a path of length equal to its weight.
    pub geodetically_simple: bool,
    /// Every hom-set has at most one element.
    pub one_simple: bool,
}

pub fn simplicity_report(fc: &FundamentalCategory) -> SimplicityReport {
    let c = &fc.category;
    let geodetically_simple = fc.classes.iter().enumerate().all(|(m, class)| {
        let (p, q) = (&fc.plane.marked[class.source], &fc.plane.marked[class.target]);
        let displacement = (&q.0 - &p.0) + (&q.1 - &p.1);
        c.weight(m) == &ExtWeight::Finite(displacement)
    });
    let n = c.objects().len();
    let one_simple = (0..n).all(|x| (0..n).all(|y| c.hom(x, y).len() <= 1));
    SimplicityReport { geodetically_simple, one_simple }
}

/// Two closed pieces, each a union of closed rectangles intersected with the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub first: Vec<Rect>,
    pub second: Vec<Rect>,
}

impl Cover {
    /// `L = [0,c2] × [0,B]` and `L' = [c1,A] × [0,B]`, for `0 ≤ c1 ≤ c2 ≤ A`.
    pub fn vertical_cut(plane: &HoledPlane, c1: Rational, c2: Rational) -> Result<Self> {
        if c1 < Rational::zero() || c1 > c2 || &c2 > plane.width() {
            return Err(Error::InvalidPlane("cut must satisfy 0 <= c1 <= c2 <= width".into()));
        }
        let zero = Rational::zero;
        Ok(Cover {
            first: vec![Rect::new(zero(), zero(), c2, plane.height.clone())?],
            second: vec![Rect::new(c1, zero(), plane.width.clone(), plane.height.clone())?],
        })
    }

    /// Both pieces equal to the whole plane.
    pub fn trivial(plane: &HoledPlane) -> Self {
        let all = Rect { x0: Rational::zero(), y0: Rational::zero(), x1: plane.width.clone(), y1: plane.height.clone() };
        Cover { first: vec![all.clone()], second: vec![all] }
    }

    /// Two hooks covering the square annulus. `L` runs along the bottom and
    /// right sides, `L'` along the left and top sides. They overlap near the
    /// corners `0` and `1`.
    pub fn square_annulus_hooks() -> Self {
        let r = |x0: (i64, i64), y0: (i64, i64), x1: (i64, i64), y1: (i64, i64)| {
            Rect::new(ratio(x0.0, x0.1), ratio(y0.0, y0.1), ratio(x1.0, x1.1), ratio(y1.0, y1.1)).expect("ordered")
        };
        let (z, t, h, tt, o) = ((0, 1), (1, 3), (1, 2), (2, 3), (1, 1));
        Cover {
            first: vec![r(z, z, o, t), r(tt, z, o, o), r(z, z, t, h), r(h, tt, o, o)],
            second: vec![r(z, z, t, o), r(z, tt, o, o)],
        }
    }

    fn rects(&self) -> impl Iterator<Item = &Rect> {
        self.first.iter().chain(&self.second)
    }

    fn intersection(&self) -> Vec<Rect> {
        let mut out = Vec::new();
        for a in &self.first {
            for b in &self.second {
                if let Some(r) = a.intersection(b) {
                    if !out.contains(&r) {
                        out.push(r);
                    }
                }
            }
        }
        out
    }

    /// Checks that the interiors of the pieces relative to the plane cover it.
    pub fn check(&self, plane: &HoledPlane) -> Result<()> {
        let grid = refine_grid(plane).refine_by_rects(&self.first).refine_by_rects(&self.second);
        let x = Lattice::new(plane, None, grid.clone());
        let pieces = [Lattice::new(plane, Some(&self.first), grid.clone()), Lattice::new(plane, Some(&self.second), grid.clone())];
        let (nx, ny) = (grid.xs.len(), grid.ys.len());
        let k = |i: usize, j: usize| i * ny + j;
        // The open star of each node, edge and cell, as (kind, index) pairs:
        // 0 = node, 1 = right edge, 2 = up edge, 3 = cell.
        let mut failures = Vec::new();
        for i in 0..nx {
            for j in 0..ny {
                let mut stars: Vec<(String, Vec<(u8, usize)>)> = Vec::new();
                if x.node[k(i, j)] {
                    let mut star = vec![(0, k(i, j))];
                    for (di, dj) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                        if i >= di && j >= dj {
                            star.push((3, k(i - di, j - dj)));
                        }
                    }
                    if i >= 1 {
                        star.push((1, k(i - 1, j)));
                    }
                    star.push((1, k(i, j)));
                    if j >= 1 {
                        star.push((2, k(i, j - 1)));
                    }
                    star.push((2, k(i, j)));
                    stars.push((format_point(&(grid.xs[i].clone(), grid.ys[j].clone())), star));
                }
                if i + 1 < nx && x.right[k(i, j)] {
                    let mut star = vec![(1, k(i, j)), (3, k(i, j))];
                    if j >= 1 {
                        star.push((3, k(i, j - 1)));
                    }
                    stars.push((format!("edge right of {}", format_point(&(grid.xs[i].clone(), grid.ys[j].clone()))), star));
                }
                if j + 1 < ny && x.up[k(i, j)] {
                    let mut star = vec![(2, k(i, j)), (3, k(i, j))];
                    if i >= 1 {
                        star.push((3, k(i - 1, j)));
                    }
                    stars.push((format!("edge above {}", format_point(&(grid.xs[i].clone(), grid.ys[j].clone()))), star));
                }
                for (what, star) in stars {
                    let in_x: Vec<(u8, usize)> = star.into_iter().filter(|&(kind, idx)| get(&x, kind, idx)).collect();
                    if !pieces.iter().any(|p| in_x.iter().all(|&(kind, idx)| get(p, kind, idx))) {
                        failures.push(what);
                    }
                }
            }
        }
        match failures.first() {
            None => Ok(()),
            Some(w) => Err(Error::CoverViolation(format!("{w} is interior to neither piece"))),
        }
    }
}

fn get(l: &Lattice, kind: u8, idx: usize) -> bool {
    match kind {
        0 => l.node[idx],
        1 => l.right[idx],
        2 => l.up[idx],
        _ => l.cell[idx],
    }
}

#[derive(Clone, Debug)]
pub struct VanKampenReport {
    pub first: FundamentalCategory,
    pub second: FundamentalCategory,
    pub intersection: FundamentalCategory,
    pub whole: FundamentalCategory,
    pub pushout: FiniteWeightedCategory,
    /// The functor from the pushout to `wΠ₁X` induced by the two inclusions.
    pub comparison: WFunctor,
    pub bijective_on_objects: bool,
    pub bijective_on_morphisms: bool,
    pub weights_preserved: bool,
}

impl VanKampenReport {
    pub fn is_isometric_isomorphism(&self) -> bool {
        self.bijective_on_objects && self.bijective_on_morphisms && self.weights_preserved
    }
}

/// Compares the pushout of `wΠ₁L ← wΠ₁(L ∩ L') → wΠ₁L'` with `wΠ₁X` on the
/// marked points.
pub fn van_kampen_check(plane: &HoledPlane, cover: &Cover, cap: u64) -> Result<VanKampenReport> {
    cover.check(plane)?;
    let meet = cover.intersection();
    let grid = refine_grid(plane).refine_by_rects(&cover.rects().cloned().collect::<Vec<_>>());
    let whole = build(plane, None, grid.clone(), cap)?;
    let first = build(plane, Some(&cover.first), grid.clone(), cap)?;
    let second = build(plane, Some(&cover.second), grid.clone(), cap)?;
    let intersection = build(plane, Some(&meet), grid, cap)?;
    let u1 = inclusion_functor(&intersection, &first)?;
    let u2 = inclusion_functor(&intersection, &second)?;
    let k1 = inclusion_functor(&first, &whole)?;
    let k2 = inclusion_functor(&second, &whole)?;
    let po = pushout_wcat(&intersection.category, &first.category, &second.category, &u1, &u2, DEFAULT_WORD_CAP)?;
    let comparison = po.mediate(&k1, &k2, &whole.category)?;

    let is_bijection = |map: &[usize], n: usize| {
        let mut seen = vec![false; n];
        map.len() == n && map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    };
    let bijective_on_objects = is_bijection(&comparison.objects, whole.category.objects().len());
    let bijective_on_morphisms = is_bijection(&comparison.morphisms, whole.category.morphisms().len());
    let weights_preserved = comparison
        .morphisms
        .iter()
        .enumerate()
        .all(|(a, &b)| po.category.weight(a) == whole.category.weight(b));
    Ok(VanKampenReport {
        first,
        second,
        intersection,
        whole,
        pushout: po.category,
        comparison,
        bijective_on_objects,
        bijective_on_morphisms,
        weights_preserved,
    })
}

/// The grid nodes of the plane on the vertical line `x = c`, after refining
/// the grid by `c`.
pub fn nodes_on_vertical(plane: &HoledPlane, c: &Rational) -> Vec<Point> {
    let grid = refine_grid(plane);
    grid.ys.iter().filter(|y| plane.contains(c, y)).map(|y| (c.clone(), y.clone())).collect()
}

/// A random plane with `holes` holes on an integer grid, cut by the vertical
/// strip `[c − 1/2, c + 1/2]`, marked at the grid nodes on `x = c` and at the
/// two corners.
pub fn random_cut_plane<R: rand::Rng>(rng: &mut R, holes: usize) -> (HoledPlane, Cover) {
    loop {
        let w = rng.gen_range(4..=7i64);
        let h = rng.gen_range(4..=7i64);
        let rects: Vec<Rect> = (0..holes)
            .map(|_| {
                let x0 = rng.gen_range(1..w - 1);
                let y0 = rng.gen_range(1..h - 1);
                let x1 = rng.gen_range(x0 + 1..w);
                let y1 = rng.gen_range(y0 + 1..h);
                Rect::new(int(x0), int(y0), int(x1), int(y1)).expect("ordered")
            })
            .collect();
        let Ok(bare) = HoledPlane::new(int(w), int(h), rects, Vec::new()) else { continue };
        let c = int(rng.gen_range(1..w));
        let mut marks = nodes_on_vertical(&bare, &c);
        for corner in [(int(0), int(0)), (int(w), int(h))] {
            if !marks.contains(&corner) {
                marks.push(corner);
            }
        }
        let plane = bare.with_marks(&marks).expect("nodes of the plane");
        let half = ratio(1, 2);
        let cover = Cover::vertical_cut(&plane, &c - &half, &c + &half).expect("inside the bounds");
        return (plane, cover);
    }
}
