//! Finite δ-metric spaces (Lawvere generalized metric spaces) and their
//! limits, colimits, monoidal closed structure, symmetrization and scaling.
//!
//! Distances are exact [`ExtWeight`]s. A [`FiniteDeltaSpace`] can only be
//! built through [`FiniteDeltaSpace::new`], which checks `d(x,x) = 0` and the
//! triangle inequality, so every value of this type is a valid δ-metric space.

use std::collections::HashMap;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::weight::{least_scale, ExtWeight, Rational};

/// Default bound on `|Z|^|Y|` for [`internal_hom`].
pub const DEFAULT_HOM_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDeltaSpace {
    points: Vec<String>,
    d: Vec<Vec<ExtWeight>>,
}

/// Checks both δ-metric axioms, reporting the first violation in index order.
pub fn check_axioms(d: &[Vec<ExtWeight>]) -> Result<()> {
    let n = d.len();
    for (i, row) in d.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Shape(format!("row {i} has {} entries, expected {n}", row.len())));
        }
    }
    for (i, row) in d.iter().enumerate() {
        if !row[i].is_zero() {
            return Err(Error::ReflexivityViolation(i));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if d[i][j].is_infinite() {
                continue;
            }
            for k in 0..n {
                if &d[i][j] + &d[j][k] < d[i][k] {
                    return Err(Error::TriangleViolation(i, j, k));
                }
            }
        }
    }
    Ok(())
}

impl FiniteDeltaSpace {
    /// Validates the matrix and builds the space.
    pub fn new(points: Vec<String>, d: Vec<Vec<ExtWeight>>) -> Result<Self> {
        if points.len() != d.len() {
            return Err(Error::Shape(format!(
                "{} labels for a {}-row matrix",
                points.len(),
                d.len()
            )));
        }
        let mut seen = HashMap::new();
        for p in &points {
            if seen.insert(p.as_str(), ()).is_some() {
                return Err(Error::DuplicateLabel(p.clone()));
            }
        }
        check_axioms(&d)?;
        Ok(FiniteDeltaSpace { points, d })
    }

    /// Builds a space labelled `"0"`, `"1"`, … from a matrix.
    pub fn from_matrix(d: Vec<Vec<ExtWeight>>) -> Result<Self> {
        let points = (0..d.len()).map(|i| i.to_string()).collect();
        Self::new(points, d)
    }

    /// Used by constructions whose output is valid by construction.
    pub(crate) fn new_unchecked(points: Vec<String>, d: Vec<Vec<ExtWeight>>) -> Self {
        FiniteDeltaSpace { points, d }
    }

    /// The one-point space `[[0]]`.
    pub fn terminal() -> Self {
        FiniteDeltaSpace { points: vec!["*".into()], d: vec![vec![ExtWeight::zero()]] }
    }

    /// Sample of the δ-line `d(x,y) = y − x` if `x ≤ y`, else `∞`.
    pub fn delta_line_sample(values: &[Rational]) -> Self {
        let points = values.iter().map(crate::weight::format_rational).collect();
        let d = values
            .iter()
            .map(|x| {
                values
                    .iter()
                    .map(|y| if x <= y { ExtWeight::Finite(y - x) } else { ExtWeight::Infinite })
                    .collect()
            })
            .collect();
        FiniteDeltaSpace::new_unchecked(points, d)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn label(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn dist(&self, i: usize, j: usize) -> &ExtWeight {
        &self.d[i][j]
    }

    pub fn matrix(&self) -> &[Vec<ExtWeight>] {
        &self.d
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|i| (0..i).all(|j| self.d[i][j] == self.d[j][i]))
    }

    /// `self ≤ other`: same size and every distance is at most the other's.
    pub fn le(&self, other: &FiniteDeltaSpace) -> bool {
        self.len() == other.len()
            && self.d.iter().zip(&other.d).all(|(a, b)| a.iter().zip(b).all(|(x, y)| x <= y))
    }

    /// The associated preorder `x ≺ y iff d(x,y) < ∞`.
    pub fn preorder(&self) -> Vec<Vec<bool>> {
        self.d.iter().map(|row| row.iter().map(ExtWeight::is_finite).collect()).collect()
    }

    /// The opposite space, `d^op(x,y) = d(y,x)`.
    pub fn opposite(&self) -> Self {
        let n = self.len();
        let d = (0..n).map(|i| (0..n).map(|j| self.d[j][i].clone()).collect()).collect();
        FiniteDeltaSpace::new_unchecked(self.points.clone(), d)
    }

    /// `λX`: every distance multiplied by `λ ≥ 0`, with `λ·∞ = ∞`.
    pub fn scale(&self, lambda: &Rational) -> Result<Self> {
        if lambda.is_negative() {
            return Err(Error::Shape(format!("negative scale factor {lambda}")));
        }
        let d = self.d.iter().map(|row| row.iter().map(|x| x.scale(lambda)).collect()).collect();
        Ok(FiniteDeltaSpace::new_unchecked(self.points.clone(), d))
    }

    /// The greatest symmetric δ-metric below `d`: shortest chains where each
    /// step costs `min(d(a,b), d(b,a))`.
    pub fn symmetrize(&self) -> Self {
        let n = self.len();
        let arcs: Vec<Vec<ExtWeight>> = (0..n)
            .map(|i| (0..n).map(|j| self.d[i][j].clone().min(self.d[j][i].clone())).collect())
            .collect();
        FiniteDeltaSpace::new_unchecked(self.points.clone(), shortest_paths(&arcs))
    }

    /// Restriction to the listed points, in the given order.
    pub fn subspace<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Empty("subspace needs at least one point"));
        }
        let idx = labels.iter().map(|l| self.index_of(l.as_ref())).collect::<Result<Vec<_>>>()?;
        self.subspace_by_index(&idx)
    }

    pub fn subspace_by_index(&self, idx: &[usize]) -> Result<Self> {
        let points: Vec<String> = idx.iter().map(|&i| self.points[i].clone()).collect();
        let d = idx.iter().map(|&i| idx.iter().map(|&j| self.d[i][j].clone()).collect()).collect();
        // duplicate indices would give duplicate labels
        Self::new(points, d)
    }
}

/// All-pairs shortest paths for nonnegative arc weights (Dijkstra from every source).
pub(crate) fn shortest_paths(arcs: &[Vec<ExtWeight>]) -> Vec<Vec<ExtWeight>> {
    let n = arcs.len();
    let mut out = Vec::with_capacity(n);
    for s in 0..n {
        let mut dist = vec![ExtWeight::Infinite; n];
        let mut done = vec![false; n];
        dist[s] = ExtWeight::zero();
        for _ in 0..n {
            let u = match (0..n).filter(|&v| !done[v] && dist[v].is_finite()).min_by(|&a, &b| dist[a].cmp(&dist[b])) {
                Some(u) => u,
                None => break,
            };
            done[u] = true;
            for v in 0..n {
                if !done[v] {
                    let cand = &dist[u] + &arcs[u][v];
                    if cand < dist[v] {
                        dist[v] = cand;
                    }
                }
            }
        }
        out.push(dist);
    }
    out
}

/// Iterates over tuples in the cartesian product of `0..sizes[i]`, last index fastest.
fn tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = sizes.iter().product();
    let mut out = Vec::with_capacity(total);
    let mut cur = vec![0usize; sizes.len()];
    for _ in 0..total {
        out.push(cur.clone());
        for k in (0..sizes.len()).rev() {
            cur[k] += 1;
            if cur[k] < sizes[k] {
                break;
            }
            cur[k] = 0;
        }
    }
    out
}

fn tuple_label(spaces: &[FiniteDeltaSpace], t: &[usize]) -> String {
    let parts: Vec<&str> = spaces.iter().zip(t).map(|(s, &i)| s.label(i)).collect();
    format!("({})", parts.join(","))
}

fn combine<F>(spaces: &[FiniteDeltaSpace], fold: F) -> Result<FiniteDeltaSpace>
where
    F: Fn(Vec<ExtWeight>) -> ExtWeight,
{
    if spaces.is_empty() {
        return Err(Error::Empty("needs at least one space"));
    }
    let sizes: Vec<usize> = spaces.iter().map(FiniteDeltaSpace::len).collect();
    let ts = tuples(&sizes);
    let points = ts.iter().map(|t| tuple_label(spaces, t)).collect();
    let d = ts
        .iter()
        .map(|x| {
            ts.iter()
                .map(|y| fold(spaces.iter().enumerate().map(|(k, s)| s.d[x[k]][y[k]].clone()).collect()))
                .collect()
        })
        .collect();
    Ok(FiniteDeltaSpace::new_unchecked(points, d))
}

/// Cartesian product with the `l∞` (sup) δ-metric.
pub fn product(spaces: &[FiniteDeltaSpace]) -> Result<FiniteDeltaSpace> {
    combine(spaces, |ws| ws.into_iter().max().unwrap_or_default())
}

/// Tensor product: cartesian product with the `l1` (sum) δ-metric.
pub fn tensor(spaces: &[FiniteDeltaSpace]) -> Result<FiniteDeltaSpace> {
    combine(spaces, |ws| ws.into_iter().sum())
}

/// Disjoint union; points of different summands are at distance `∞`.
pub fn sum(spaces: &[FiniteDeltaSpace]) -> Result<FiniteDeltaSpace> {
    if spaces.is_empty() {
        return Err(Error::Empty("sum needs at least one space"));
    }
    let mut points = Vec::new();
    let mut owner = Vec::new();
    for (k, s) in spaces.iter().enumerate() {
        for i in 0..s.len() {
            points.push(format!("{k}:{}", s.label(i)));
            owner.push((k, i));
        }
    }
    let d = owner
        .iter()
        .map(|&(a, i)| {
            owner
                .iter()
                .map(|&(b, j)| if a == b { spaces[a].d[i][j].clone() } else { ExtWeight::Infinite })
                .collect()
        })
        .collect();
    Ok(FiniteDeltaSpace::new_unchecked(points, d))
}

/// Unordered pairs of points to be identified.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PointRelation {
    pub pairs: Vec<(String, String)>,
}

impl PointRelation {
    pub fn new<S: Into<String>>(pairs: impl IntoIterator<Item = (S, S)>) -> Self {
        PointRelation { pairs: pairs.into_iter().map(|(a, b)| (a.into(), b.into())).collect() }
    }

    /// Class index of every point under the generated equivalence relation,
    /// classes numbered by first occurrence.
    pub fn classes(&self, space: &FiniteDeltaSpace) -> Result<Vec<usize>> {
        let n = space.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for (a, b) in &self.pairs {
            let (i, j) = (space.index_of(a)?, space.index_of(b)?);
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
        let mut class_of_root = HashMap::new();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let r = find(&mut parent, i);
            let next = class_of_root.len();
            out.push(*class_of_root.entry(r).or_insert(next));
        }
        Ok(out)
    }
}

/// A map of underlying sets between two finite δ-metric spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMap {
    pub source: FiniteDeltaSpace,
    pub target: FiniteDeltaSpace,
    pub assignment: Vec<usize>,
}

impl PointMap {
    pub fn new(source: FiniteDeltaSpace, target: FiniteDeltaSpace, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::Shape(format!(
                "assignment has {} entries for {} source points",
                assignment.len(),
                source.len()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&j| j >= target.len()) {
            return Err(Error::UnknownLabel(bad.to_string()));
        }
        Ok(PointMap { source, target, assignment })
    }

    pub fn from_labels<S: AsRef<str>>(
        source: FiniteDeltaSpace,
        target: FiniteDeltaSpace,
        pairs: &[(S, S)],
    ) -> Result<Self> {
        let mut assignment = vec![usize::MAX; source.len()];
        for (a, b) in pairs {
            assignment[source.index_of(a.as_ref())?] = target.index_of(b.as_ref())?;
        }
        if let Some(i) = assignment.iter().position(|&j| j == usize::MAX) {
            return Err(Error::UnknownLabel(format!("no image for `{}`", source.label(i))));
        }
        Self::new(source, target, assignment)
    }

    pub fn identity(space: &FiniteDeltaSpace) -> Self {
        PointMap { source: space.clone(), target: space.clone(), assignment: (0..space.len()).collect() }
    }

    /// The Lipschitz weight `‖f‖`: least `λ` with `d(fx, fx') ≤ λ·d(x, x')`.
    pub fn lipschitz_weight(&self) -> ExtWeight {
        lipschitz_weight(&self.source, &self.target, &self.assignment)
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &PointMap) -> Result<PointMap> {
        if g.source != self.target {
            return Err(Error::Shape("maps are not composable".into()));
        }
        let assignment = self.assignment.iter().map(|&i| g.assignment[i]).collect();
        PointMap::new(self.source.clone(), g.target.clone(), assignment)
    }
}

/// Lipschitz weight of a raw assignment between two spaces.
pub fn lipschitz_weight(source: &FiniteDeltaSpace, target: &FiniteDeltaSpace, f: &[usize]) -> ExtWeight {
    let n = source.len();
    least_scale((0..n).flat_map(|i| {
        (0..n).filter(move |&j| i != j).map(move |j| (source.d[i][j].clone(), target.d[f[i]][f[j]].clone()))
    }))
}

/// True when the assignment does not increase any distance.
pub fn is_contraction(source: &FiniteDeltaSpace, target: &FiniteDeltaSpace, f: &[usize]) -> bool {
    let n = source.len();
    (0..n).all(|i| (0..n).all(|j| target.d[f[i]][f[j]] <= source.d[i][j]))
}

/// Coequalizer of the relation: distances are shortest chains in the digraph of
/// all arcs `x → y` (weight `d(x,y)`) plus zero arcs between related points.
pub fn quotient(space: &FiniteDeltaSpace, relation: &PointRelation) -> Result<(FiniteDeltaSpace, PointMap)> {
    let classes = relation.classes(space)?;
    let n = space.len();
    let mut arcs = space.d.clone();
    for i in 0..n {
        for j in 0..n {
            if classes[i] == classes[j] {
                arcs[i][j] = ExtWeight::zero();
            }
        }
    }
    let closure = shortest_paths(&arcs);
    let k = classes.iter().max().map_or(0, |m| m + 1);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, &c) in classes.iter().enumerate() {
        members[c].push(i);
    }
    let points = members
        .iter()
        .map(|m| {
            if m.len() == 1 {
                space.points[m[0]].clone()
            } else {
                let names: Vec<&str> = m.iter().map(|&i| space.label(i)).collect();
                format!("[{}]", names.join("~"))
            }
        })
        .collect();
    let d = members
        .iter()
        .map(|a| members.iter().map(|b| closure[a[0]][b[0]].clone()).collect())
        .collect();
    let q = FiniteDeltaSpace::new_unchecked(points, d);
    let proj = PointMap { source: space.clone(), target: q.clone(), assignment: classes };
    Ok((q, proj))
}

/// Calls `f` on every map `0..n_src → 0..n_tgt`, failing if there are more than `cap`.
pub(crate) fn for_each_map<F: FnMut(&[usize])>(n_src: usize, n_tgt: usize, cap: u64, mut f: F) -> Result<()> {
    let count = (n_tgt as u128).checked_pow(n_src as u32).unwrap_or(u128::MAX);
    if count > cap as u128 {
        return Err(Error::SizeLimitExceeded { what: "map enumeration", limit: cap });
    }
    if n_tgt == 0 {
        if n_src == 0 {
            f(&[]);
        }
        return Ok(());
    }
    let mut cur = vec![0usize; n_src];
    loop {
        f(&cur);
        let mut k = n_src;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < n_tgt {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// The exponential `Z^Y`: 1-Lipschitz maps `Y → Z` under the sup (uniform
/// convergence) δ-metric.
#[derive(Clone, Debug)]
pub struct InternalHom {
    pub space: FiniteDeltaSpace,
    /// `maps[k][y]` is the image of `y` under the `k`-th point of `space`.
    pub maps: Vec<Vec<usize>>,
}

impl InternalHom {
    pub fn index_of_map(&self, f: &[usize]) -> Option<usize> {
        self.maps.iter().position(|m| m == f)
    }
}

pub fn internal_hom(y: &FiniteDeltaSpace, z: &FiniteDeltaSpace, cap: u64) -> Result<InternalHom> {
    let mut maps = Vec::new();
    for_each_map(y.len(), z.len(), cap, |f| {
        if is_contraction(y, z, f) {
            maps.push(f.to_vec());
        }
    })?;
    let points = maps
        .iter()
        .map(|m| {
            let names: Vec<&str> = m.iter().map(|&j| z.label(j)).collect();
            format!("[{}]", names.join(","))
        })
        .collect();
    let d = maps
        .iter()
        .map(|h| {
            maps.iter()
                .map(|k| (0..y.len()).map(|i| z.d[h[i]][k[i]].clone()).max().unwrap_or_default())
                .collect()
        })
        .collect();
    Ok(InternalHom { space: FiniteDeltaSpace::new_unchecked(points, d), maps })
}

/// Outcome of checking the exponential law `δMtr(X⊗Y, Z) ≅ δMtr(X, Z^Y)` by enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentialLawReport {
    pub tensor_side: usize,
    pub hom_side: usize,
    /// Currying sends every contraction `X⊗Y → Z` to a contraction `X → Z^Y`
    /// and is injective.
    pub currying_is_bijection: bool,
}

pub fn exponential_law(
    x: &FiniteDeltaSpace,
    y: &FiniteDeltaSpace,
    z: &FiniteDeltaSpace,
    cap: u64,
) -> Result<ExponentialLawReport> {
    let xy = tensor(&[x.clone(), y.clone()])?;
    let zy = internal_hom(y, z, cap)?;
    let mut curried = Vec::new();
    let mut ok = true;
    for_each_map(xy.len(), z.len(), cap, |f| {
        if !is_contraction(&xy, z, f) {
            return;
        }
        // tuple (i, j) sits at index i*|Y| + j
        let g: Option<Vec<usize>> =
            (0..x.len()).map(|i| zy.index_of_map(&f[i * y.len()..(i + 1) * y.len()])).collect();
        match g {
            Some(g) if is_contraction(x, &zy.space, &g) => curried.push(g),
            _ => ok = false,
        }
    })?;
    let tensor_side = curried.len();
    let mut hom_side = 0;
    for_each_map(x.len(), zy.space.len(), cap, |g| {
        if is_contraction(x, &zy.space, g) {
            hom_side += 1;
        }
    })?;
    curried.sort();
    curried.dedup();
    Ok(ExponentialLawReport {
        tensor_side,
        hom_side,
        currying_is_bijection: ok && curried.len() == tensor_side && tensor_side == hom_side,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{int, ratio};

    fn m(rows: &[&[&str]]) -> Vec<Vec<ExtWeight>> {
        rows.iter().map(|r| r.iter().map(|s| s.parse().unwrap()).collect()).collect()
    }

    fn arrow() -> FiniteDeltaSpace {
        FiniteDeltaSpace::from_matrix(m(&[&["0", "1"], &["inf", "0"]])).unwrap()
    }

    fn w(s: &str) -> ExtWeight {
        s.parse().unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(FiniteDeltaSpace::from_matrix(m(&[&["0", "1"], &["inf", "0"]])).is_ok());
        assert_eq!(
            FiniteDeltaSpace::from_matrix(m(&[&["0", "1"], &["1", "1"]])),
            Err(Error::ReflexivityViolation(1))
        );
        assert_eq!(
            FiniteDeltaSpace::from_matrix(m(&[&["0", "1", "5"], &["inf", "0", "1"], &["inf", "inf", "0"]])),
            Err(Error::TriangleViolation(0, 1, 2))
        );
        assert!(matches!(FiniteDeltaSpace::from_matrix(m(&[&["0", "1"], &["0"]])), Err(Error::Shape(_))));
    }

    #[test]
    fn product_tensor_sum_examples() {
        let a = arrow();
        let p = product(&[a.clone(), a.clone()]).unwrap();
        let t = tensor(&[a.clone(), a.clone()]).unwrap();
        let (i00, i01, i10, i11) = (
            p.index_of("(0,0)").unwrap(),
            p.index_of("(0,1)").unwrap(),
            p.index_of("(1,0)").unwrap(),
            p.index_of("(1,1)").unwrap(),
        );
        assert_eq!(p.dist(i00, i11), &w("1"));
        assert_eq!(p.dist(i01, i10), &w("inf"));
        assert_eq!(t.dist(i00, i11), &w("2"));
        assert_eq!(t.dist(i01, i10), &w("inf"));
        assert!(p.le(&t));
        assert!(t.le(&p.scale(&int(2)).unwrap()));
        assert_eq!(product(std::slice::from_ref(&a)).unwrap().matrix(), a.matrix());

        let s = sum(&[FiniteDeltaSpace::terminal(), FiniteDeltaSpace::terminal()]).unwrap();
        assert_eq!(s.matrix(), &m(&[&["0", "inf"], &["inf", "0"]])[..]);
        assert_eq!(s.points(), &["0:*".to_string(), "1:*".to_string()]);
        assert!(product(&[]).is_err());
    }

    #[test]
    fn subspace_examples() {
        let s = FiniteDeltaSpace::delta_line_sample(&[int(0), int(1), int(3)]);
        assert_eq!(s.subspace(&["0", "1", "3"]).unwrap(), s);
        assert_eq!(s.subspace(&["1"]).unwrap().matrix(), &[vec![w("0")]]);
        let r = s.subspace(&["0", "3"]).unwrap();
        assert_eq!(r.dist(0, 1), &w("3"));
        assert_eq!(s.subspace(&["7"]), Err(Error::UnknownLabel("7".into())));
    }

    #[test]
    fn quotient_of_sampled_interval() {
        let vals: Vec<_> = (0..=5).map(|k| ratio(k, 5)).collect();
        let s = FiniteDeltaSpace::delta_line_sample(&vals);
        let (q, proj) = quotient(&s, &PointRelation::new([("0", "1")])).unwrap();
        let a = proj.assignment[s.index_of("3/5").unwrap()];
        let b = proj.assignment[s.index_of("1/5").unwrap()];
        assert_eq!(q.dist(a, b), &w("3/5"));
        assert!(check_axioms(q.matrix()).is_ok());
        assert!(proj.lipschitz_weight() <= w("1"));

        let (q0, _) = quotient(&s, &PointRelation::default()).unwrap();
        assert_eq!(q0.matrix(), s.matrix());

        let all = PointRelation::new(s.points().windows(2).map(|p| (p[0].clone(), p[1].clone())));
        let (q1, _) = quotient(&s, &all).unwrap();
        assert_eq!(q1.len(), 1);
    }

    #[test]
    fn symmetrize_examples() {
        let s = FiniteDeltaSpace::delta_line_sample(&[int(0), int(1), int(3)]);
        let sym = s.symmetrize();
        assert_eq!(sym.dist(2, 1), &w("2"));
        assert!(sym.is_symmetric());
        assert_eq!(arrow().symmetrize().matrix(), &m(&[&["0", "1"], &["1", "0"]])[..]);
        assert_eq!(sym.symmetrize(), sym);
    }

    #[test]
    fn opposite_and_scale_examples() {
        let a = arrow();
        assert_eq!(a.opposite().matrix(), &m(&[&["0", "inf"], &["1", "0"]])[..]);
        assert_eq!(a.opposite().opposite(), a);
        assert_eq!(a.scale(&int(0)).unwrap().matrix(), &m(&[&["0", "0"], &["inf", "0"]])[..]);
        assert_eq!(a.scale(&int(1)).unwrap(), a);
        assert_eq!(a.scale(&int(2)).unwrap().dist(0, 1), &w("2"));
    }

    #[test]
    fn lipschitz_weight_examples() {
        let a = arrow();
        assert_eq!(PointMap::identity(&a).lipschitz_weight(), w("1"));
        let doubled = PointMap::new(a.clone(), a.scale(&int(2)).unwrap(), vec![0, 1]).unwrap();
        assert_eq!(doubled.lipschitz_weight(), w("2"));
        let zero_pair = FiniteDeltaSpace::from_matrix(m(&[&["0", "0"], &["0", "0"]])).unwrap();
        let f = PointMap::new(zero_pair, a.clone(), vec![0, 1]).unwrap();
        assert_eq!(f.lipschitz_weight(), w("inf"));
        let constant = PointMap::new(a.clone(), a, vec![1, 1]).unwrap();
        assert_eq!(constant.lipschitz_weight(), w("0"));
    }

    #[test]
    fn internal_hom_examples() {
        let a = arrow();
        let za = internal_hom(&FiniteDeltaSpace::terminal(), &a, DEFAULT_HOM_CAP).unwrap();
        assert_eq!(za.space.matrix(), a.matrix());
        let pt = internal_hom(&a, &FiniteDeltaSpace::terminal(), DEFAULT_HOM_CAP).unwrap();
        assert_eq!(pt.space.matrix(), &[vec![w("0")]]);

        let h = internal_hom(&a, &a, DEFAULT_HOM_CAP).unwrap();
        let mut maps = h.maps.clone();
        maps.sort();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        let c0 = h.index_of_map(&[0, 0]).unwrap();
        let c1 = h.index_of_map(&[1, 1]).unwrap();
        assert_eq!(h.space.dist(c0, c1), &w("1"));
        assert_eq!(h.space.dist(c1, c0), &w("inf"));

        let big = FiniteDeltaSpace::delta_line_sample(&(0..10).map(int).collect::<Vec<_>>());
        assert!(matches!(internal_hom(&big, &big, 1000), Err(Error::SizeLimitExceeded { .. })));
    }

    #[test]
    fn preorder_examples() {
        let s = FiniteDeltaSpace::delta_line_sample(&[int(0), int(1), int(3)]);
        let p = s.preorder();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(p[i][j], i <= j);
            }
        }
        let sym = s.symmetrize().preorder();
        assert!(sym.iter().flatten().all(|&b| b));
        let two = sum(&[FiniteDeltaSpace::terminal(), FiniteDeltaSpace::terminal()]).unwrap().preorder();
        assert_eq!(two, vec![vec![true, false], vec![false, true]]);
    }

    #[test]
    fn exponential_law_on_arrow() {
        let a = arrow();
        let r = exponential_law(&a, &a, &a, DEFAULT_HOM_CAP).unwrap();
        assert!(r.currying_is_bijection);
        assert_eq!(r.tensor_side, r.hom_side);
    }
}
