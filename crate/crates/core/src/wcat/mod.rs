//! Finite additively weighted categories.
//!
//! A [`FiniteWeightedCategory`] is given by a total composition table. Weights
//! vanish on identities and are subadditive on composites. Functors and
//! natural transformations are plain index maps checked against a source and
//! a target category.

mod hom;
mod pushout;
mod spectrum;

use std::collections::HashMap;

use num_traits::Signed;

use crate::dmetric::FiniteDeltaSpace;
use crate::error::{Error, Result, WeightViolation};
use crate::weight::{least_scale, ExtWeight, Rational};

pub use hom::{enumerate_functors, enumerate_nat_trans, exponential_law, hom_wcat, HomCategory};
pub use pushout::{pushout_wcat, Pushout, DEFAULT_WORD_CAP};
pub use spectrum::{
    check_future_equivalence, future_spectrum, future_spectrum_with, past_spectrum, past_spectrum_with, reflector_onto,
    FutureEquivalenceReport, Reflector, RetractKind, Spectrum,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub weight: ExtWeight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteWeightedCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    /// `(a, b) ↦ a + b`, defined when `a` ends where `b` starts.
    compose: HashMap<(usize, usize), usize>,
    hom: Vec<Vec<Vec<usize>>>,
}

fn hom_index(n: usize, morphisms: &[Morphism]) -> Vec<Vec<Vec<usize>>> {
    let mut hom = vec![vec![Vec::new(); n]; n];
    for (i, m) in morphisms.iter().enumerate() {
        hom[m.source][m.target].push(i);
    }
    hom
}

impl FiniteWeightedCategory {
    /// Builds and validates a category. `compose[(a, b)]` is the composite of
    /// `a: x → y` followed by `b: y → z`.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let c = Self::from_parts(objects, morphisms, identities, compose)?;
        c.validate()?;
        Ok(c)
    }

    /// Builds a category whose laws hold by construction; only indices are checked.
    pub(crate) fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let n = objects.len();
        if identities.len() != n {
            return Err(Error::NotACategory(format!("{} identities for {n} objects", identities.len())));
        }
        for m in &morphisms {
            if m.source >= n || m.target >= n {
                return Err(Error::NotACategory(format!("`{}` has an endpoint out of range", m.name)));
            }
        }
        let mut seen = HashMap::new();
        for o in &objects {
            if seen.insert(o.as_str(), ()).is_some() {
                return Err(Error::DuplicateLabel(o.clone()));
            }
        }
        let hom = hom_index(n, &morphisms);
        Ok(FiniteWeightedCategory { objects, morphisms, identities, compose, hom })
    }

    /// Checks the category laws and the weight axioms.
    pub fn validate(&self) -> Result<()> {
        let name = |i: usize| self.morphisms[i].name.clone();
        for (x, &id) in self.identities.iter().enumerate() {
            let m = self.morphisms.get(id).ok_or_else(|| Error::NotACategory(format!("identity {id} missing")))?;
            if m.source != x || m.target != x {
                return Err(Error::NotACategory(format!("identity `{}` is not an endomorphism of `{}`", m.name, self.objects[x])));
            }
        }
        for (&(a, b), &c) in &self.compose {
            let ok = a < self.morphisms.len() && b < self.morphisms.len() && c < self.morphisms.len();
            if !ok || self.morphisms[a].target != self.morphisms[b].source {
                return Err(Error::NotACategory(format!("table entry for non-composable pair ({a}, {b})")));
            }
        }
        for a in 0..self.morphisms.len() {
            for &b in self.outgoing(self.morphisms[a].target) {
                let c = *self
                    .compose
                    .get(&(a, b))
                    .ok_or_else(|| Error::NotACategory(format!("missing composite {} + {}", name(a), name(b))))?;
                if self.morphisms[c].source != self.morphisms[a].source || self.morphisms[c].target != self.morphisms[b].target {
                    return Err(Error::NotACategory(format!("{} + {} has the wrong endpoints", name(a), name(b))));
                }
            }
        }
        for (a, m) in self.morphisms.iter().enumerate() {
            if self.then(self.identities[m.source], a) != a || self.then(a, self.identities[m.target]) != a {
                return Err(Error::NotACategory(format!("unit law fails at `{}`", m.name)));
            }
        }
        for a in 0..self.morphisms.len() {
            for &b in self.outgoing(self.morphisms[a].target) {
                let ab = self.then(a, b);
                for &c in self.outgoing(self.morphisms[b].target) {
                    if self.then(ab, c) != self.then(a, self.then(b, c)) {
                        return Err(Error::NotACategory(format!(
                            "associativity fails at ({}, {}, {})",
                            name(a),
                            name(b),
                            name(c)
                        )));
                    }
                }
            }
        }
        for (x, &id) in self.identities.iter().enumerate() {
            if !self.morphisms[id].weight.is_zero() {
                return Err(Error::WeightAxiomViolation(WeightViolation::NonzeroIdentity {
                    object: self.objects[x].clone(),
                }));
            }
        }
        for a in 0..self.morphisms.len() {
            for &b in self.outgoing(self.morphisms[a].target) {
                let c = self.then(a, b);
                if self.morphisms[c].weight > &self.morphisms[a].weight + &self.morphisms[b].weight {
                    return Err(Error::WeightAxiomViolation(WeightViolation::Subadditivity {
                        first: name(a),
                        second: name(b),
                    }));
                }
            }
        }
        Ok(())
    }

    /// The thin category of a δ-metric space: one arrow `x → y` of weight
    /// `d(x,y)` whenever the distance is finite.
    pub fn from_delta_space(space: &FiniteDeltaSpace) -> Self {
        let n = space.len();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                if let ExtWeight::Finite(r) = space.dist(x, y) {
                    index.insert((x, y), morphisms.len());
                    morphisms.push(Morphism {
                        name: format!("{}->{}", space.label(x), space.label(y)),
                        source: x,
                        target: y,
                        weight: ExtWeight::Finite(r.clone()),
                    });
                }
            }
        }
        let identities = (0..n).map(|x| index[&(x, x)]).collect();
        let mut compose = HashMap::new();
        for (&(x, y), &a) in &index {
            for z in 0..n {
                if let Some(&b) = index.get(&(y, z)) {
                    compose.insert((a, b), index[&(x, z)]);
                }
            }
        }
        Self::from_parts(space.points().to_vec(), morphisms, identities, compose).expect("indices are in range")
    }

    /// The category with no objects.
    pub fn empty() -> Self {
        Self::from_parts(Vec::new(), Vec::new(), Vec::new(), HashMap::new()).expect("valid")
    }

    /// The terminal category: one object, its identity.
    pub fn terminal() -> Self {
        let id = Morphism { name: "1_*".into(), source: 0, target: 0, weight: ExtWeight::zero() };
        let compose = HashMap::from([((0, 0), 0)]);
        Self::from_parts(vec!["*".into()], vec![id], vec![0], compose).expect("valid")
    }

    /// The directed interval `2 = {0 → 1}` with an arrow of the given weight.
    pub fn arrow(weight: ExtWeight) -> Self {
        let morphisms = vec![
            Morphism { name: "1_0".into(), source: 0, target: 0, weight: ExtWeight::zero() },
            Morphism { name: "1_1".into(), source: 1, target: 1, weight: ExtWeight::zero() },
            Morphism { name: "0->1".into(), source: 0, target: 1, weight },
        ];
        let compose = HashMap::from([((0, 0), 0), ((1, 1), 1), ((0, 2), 2), ((2, 1), 2)]);
        Self::from_parts(vec!["0".into(), "1".into()], morphisms, vec![0, 1], compose).expect("valid")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn is_identity(&self, a: usize) -> bool {
        self.identities[self.morphisms[a].source] == a
    }

    pub fn weight(&self, a: usize) -> &ExtWeight {
        &self.morphisms[a].weight
    }

    pub fn object_index(&self, label: &str) -> Result<usize> {
        self.objects.iter().position(|o| o == label).ok_or_else(|| Error::UnknownObject(label.to_string()))
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        &self.hom[x][y]
    }

    /// All morphisms starting at `x`, grouped by target.
    pub fn outgoing(&self, x: usize) -> impl Iterator<Item = &usize> {
        self.hom[x].iter().flatten()
    }

    /// `a + b` (first `a`, then `b`). Panics if the pair is not composable.
    pub fn then(&self, a: usize, b: usize) -> usize {
        self.compose[&(a, b)]
    }

    pub fn try_then(&self, a: usize, b: usize) -> Option<usize> {
        self.compose.get(&(a, b)).copied()
    }

    pub fn composition_table(&self) -> &HashMap<(usize, usize), usize> {
        &self.compose
    }

    /// True when `w(a + b) = w(a) + w(b)` for all composable pairs.
    pub fn is_linear(&self) -> bool {
        self.compose.iter().all(|(&(a, b), &c)| self.morphisms[c].weight == self.weight(a) + self.weight(b))
    }

    /// Same category, reversed arrows, same weights.
    pub fn opposite(&self) -> Self {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism { source: m.target, target: m.source, ..m.clone() })
            .collect();
        let compose = self.compose.iter().map(|(&(a, b), &c)| ((b, a), c)).collect();
        Self::from_parts(self.objects.clone(), morphisms, self.identities.clone(), compose).expect("same indices")
    }

    /// Same category with every weight multiplied by `λ ≥ 0`.
    pub fn scale(&self, lambda: &Rational) -> Result<Self> {
        if lambda.is_negative() {
            return Err(Error::Shape(format!("negative scale factor {lambda}")));
        }
        let morphisms =
            self.morphisms.iter().map(|m| Morphism { weight: m.weight.scale(lambda), ..m.clone() }).collect();
        Self::from_parts(self.objects.clone(), morphisms, self.identities.clone(), self.compose.clone())
    }

    /// The full subcategory on the given objects (in the given order), with its
    /// inclusion functor.
    pub fn full_subcategory(&self, objects: &[usize]) -> Result<(Self, WFunctor)> {
        if objects.is_empty() {
            return Err(Error::Empty("full subcategory needs an object"));
        }
        let mut new_obj = vec![usize::MAX; self.objects.len()];
        for (i, &x) in objects.iter().enumerate() {
            if x >= self.objects.len() {
                return Err(Error::UnknownObject(x.to_string()));
            }
            new_obj[x] = i;
        }
        let mut new_mor = HashMap::new();
        let mut morphisms = Vec::new();
        let mut inclusion = Vec::new();
        for &x in objects {
            for &y in objects {
                for &a in self.hom(x, y) {
                    new_mor.insert(a, morphisms.len());
                    inclusion.push(a);
                    let m = &self.morphisms[a];
                    morphisms.push(Morphism { source: new_obj[x], target: new_obj[y], ..m.clone() });
                }
            }
        }
        let identities = objects.iter().map(|&x| new_mor[&self.identities[x]]).collect();
        let mut compose = HashMap::new();
        for (&a, &na) in &new_mor {
            for (&b, &nb) in &new_mor {
                if let Some(c) = self.try_then(a, b) {
                    compose.insert((na, nb), new_mor[&c]);
                }
            }
        }
        let labels = objects.iter().map(|&x| self.objects[x].clone()).collect();
        let sub = Self::from_parts(labels, morphisms, identities, compose)?;
        Ok((sub, WFunctor { objects: objects.to_vec(), morphisms: inclusion }))
    }

    /// The endomorphism monoid of `x` as a one-object weighted category.
    pub fn homotopy_monoid(&self, x: &str) -> Result<Self> {
        let i = self.object_index(x)?;
        Ok(self.full_subcategory(&[i])?.0)
    }
}

/// A functor given by its object and morphism maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WFunctor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl WFunctor {
    pub fn identity(c: &FiniteWeightedCategory) -> Self {
        WFunctor { objects: (0..c.objects.len()).collect(), morphisms: (0..c.morphisms.len()).collect() }
    }

    /// Checks that the maps are total and preserve endpoints, identities and composition.
    pub fn validate(&self, source: &FiniteWeightedCategory, target: &FiniteWeightedCategory) -> Result<()> {
        if self.objects.len() != source.objects.len() || self.morphisms.len() != source.morphisms.len() {
            return Err(Error::NotAFunctor("maps are not total".into()));
        }
        if self.objects.iter().any(|&y| y >= target.objects.len())
            || self.morphisms.iter().any(|&b| b >= target.morphisms.len())
        {
            return Err(Error::NotAFunctor("image out of range".into()));
        }
        for (a, m) in source.morphisms.iter().enumerate() {
            let fm = &target.morphisms[self.morphisms[a]];
            if fm.source != self.objects[m.source] || fm.target != self.objects[m.target] {
                return Err(Error::NotAFunctor(format!("`{}` is sent to a morphism with other endpoints", m.name)));
            }
        }
        for (x, &id) in source.identities.iter().enumerate() {
            if self.morphisms[id] != target.identities[self.objects[x]] {
                return Err(Error::NotAFunctor(format!("identity of `{}` not preserved", source.objects[x])));
            }
        }
        for (&(a, b), &c) in &source.compose {
            if target.then(self.morphisms[a], self.morphisms[b]) != self.morphisms[c] {
                return Err(Error::NotAFunctor(format!(
                    "composite {} + {} not preserved",
                    source.morphisms[a].name, source.morphisms[b].name
                )));
            }
        }
        Ok(())
    }

    /// `‖f‖`: least `λ` with `w(f(a)) ≤ λ·w(a)` over non-identity morphisms.
    pub fn lipschitz_weight(&self, source: &FiniteWeightedCategory, target: &FiniteWeightedCategory) -> ExtWeight {
        least_scale(
            (0..source.morphisms.len())
                .filter(|&a| !source.is_identity(a))
                .map(|a| (source.weight(a).clone(), target.weight(self.morphisms[a]).clone())),
        )
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &WFunctor) -> WFunctor {
        WFunctor {
            objects: self.objects.iter().map(|&x| g.objects[x]).collect(),
            morphisms: self.morphisms.iter().map(|&a| g.morphisms[a]).collect(),
        }
    }
}

/// A natural transformation `φ: f → g`, one component `φ(x): f(x) → g(x)` per object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WNatTrans {
    pub components: Vec<usize>,
}

impl WNatTrans {
    pub fn identity(f: &WFunctor, target: &FiniteWeightedCategory) -> Self {
        WNatTrans { components: f.objects.iter().map(|&y| target.identity(y)).collect() }
    }

    /// Checks endpoints of the components and every naturality square.
    pub fn validate(
        &self,
        source: &FiniteWeightedCategory,
        target: &FiniteWeightedCategory,
        f: &WFunctor,
        g: &WFunctor,
    ) -> Result<()> {
        if self.components.len() != source.objects.len() {
            return Err(Error::NotNatural("one component per object is required".into()));
        }
        for (x, &c) in self.components.iter().enumerate() {
            let m = target.morphisms.get(c).ok_or_else(|| Error::NotNatural(format!("component {c} out of range")))?;
            if m.source != f.objects[x] || m.target != g.objects[x] {
                return Err(Error::NotNatural(format!("component at `{}` has wrong endpoints", source.objects[x])));
            }
        }
        for (a, m) in source.morphisms.iter().enumerate() {
            let lhs = target.then(f.morphisms[a], self.components[m.target]);
            let rhs = target.then(self.components[m.source], g.morphisms[a]);
            if lhs != rhs {
                return Err(Error::NotNatural(format!("square at `{}` does not commute", m.name)));
            }
        }
        Ok(())
    }

    /// Reduced weight `|φ| = sup_x w(φ(x))`.
    pub fn reduced_weight(&self, target: &FiniteWeightedCategory) -> ExtWeight {
        self.components.iter().map(|&c| target.weight(c).clone()).max().unwrap_or_default()
    }

    /// `(|φ|, ‖φ‖)` with `‖φ‖ = ‖f‖ ∨ ‖g‖ ∨ |φ|`.
    pub fn weights(
        &self,
        source: &FiniteWeightedCategory,
        target: &FiniteWeightedCategory,
        f: &WFunctor,
        g: &WFunctor,
    ) -> (ExtWeight, ExtWeight) {
        let reduced = self.reduced_weight(target);
        let global = reduced.clone().max(f.lipschitz_weight(source, target)).max(g.lipschitz_weight(source, target));
        (reduced, global)
    }
}

/// Product category with the `l1` weight `w(a, b) = w(a) + w(b)`.
pub fn tensor_wcat(x: &FiniteWeightedCategory, y: &FiniteWeightedCategory) -> FiniteWeightedCategory {
    let (nx, ny) = (x.objects.len(), y.objects.len());
    let my = y.morphisms.len();
    let objects = (0..nx * ny).map(|i| format!("({},{})", x.objects[i / ny], y.objects[i % ny])).collect();
    let mut morphisms = Vec::with_capacity(x.morphisms.len() * my);
    for a in &x.morphisms {
        for b in &y.morphisms {
            morphisms.push(Morphism {
                name: format!("({},{})", a.name, b.name),
                source: a.source * ny + b.source,
                target: a.target * ny + b.target,
                weight: &a.weight + &b.weight,
            });
        }
    }
    let identities = (0..nx * ny).map(|i| x.identities[i / ny] * my + y.identities[i % ny]).collect();
    let mut compose = HashMap::new();
    for (&(a, a2), &a3) in &x.compose {
        for (&(b, b2), &b3) in &y.compose {
            compose.insert((a * my + b, a2 * my + b2), a3 * my + b3);
        }
    }
    FiniteWeightedCategory::from_parts(objects, morphisms, identities, compose).expect("valid product")
}

/// Disjoint union of weighted categories.
pub fn sum_wcat(parts: &[FiniteWeightedCategory]) -> Result<FiniteWeightedCategory> {
    if parts.is_empty() {
        return Err(Error::Empty("sum needs a category"));
    }
    let (mut objects, mut morphisms, mut identities, mut compose) = (Vec::new(), Vec::new(), Vec::new(), HashMap::new());
    for (k, c) in parts.iter().enumerate() {
        let (o, m) = (objects.len(), morphisms.len());
        objects.extend(c.objects.iter().map(|x| format!("{k}:{x}")));
        morphisms.extend(c.morphisms.iter().map(|a| Morphism {
            name: format!("{k}:{}", a.name),
            source: a.source + o,
            target: a.target + o,
            weight: a.weight.clone(),
        }));
        identities.extend(c.identities.iter().map(|i| i + m));
        compose.extend(c.compose.iter().map(|(&(a, b), &ab)| ((a + m, b + m), ab + m)));
    }
    FiniteWeightedCategory::from_parts(objects, morphisms, identities, compose)
}

/// Searches for an isomorphism of categories preserving weights exactly,
/// optionally with a prescribed bijection on objects.
pub fn find_isometric_isomorphism(
    a: &FiniteWeightedCategory,
    b: &FiniteWeightedCategory,
    objects: Option<&[usize]>,
) -> Option<WFunctor> {
    if a.objects.len() != b.objects.len() || a.morphisms.len() != b.morphisms.len() {
        return None;
    }
    let candidates: Vec<Vec<usize>> = match objects {
        Some(o) => vec![o.to_vec()],
        None => permutations(a.objects.len()),
    };
    for obj in candidates {
        let mut seen = vec![false; b.objects.len()];
        if obj.len() != a.objects.len() || obj.iter().any(|&y| y >= seen.len() || std::mem::replace(&mut seen[y], true)) {
            continue;
        }
        let sizes_match = (0..a.objects.len())
            .all(|x| (0..a.objects.len()).all(|y| a.hom(x, y).len() == b.hom(obj[x], obj[y]).len()));
        if !sizes_match {
            continue;
        }
        let mut mor = vec![usize::MAX; a.morphisms.len()];
        let mut used = vec![false; b.morphisms.len()];
        for (x, &id) in a.identities.iter().enumerate() {
            mor[id] = b.identities[obj[x]];
            used[mor[id]] = true;
        }
        let order: Vec<usize> = (0..a.morphisms.len()).filter(|&m| !a.is_identity(m)).collect();
        if assign_morphisms(a, b, &obj, &order, 0, &mut mor, &mut used) {
            return Some(WFunctor { objects: obj, morphisms: mor });
        }
    }
    None
}

fn assign_morphisms(
    a: &FiniteWeightedCategory,
    b: &FiniteWeightedCategory,
    obj: &[usize],
    order: &[usize],
    k: usize,
    mor: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let Some(&m) = order.get(k) else {
        return true;
    };
    let am = &a.morphisms[m];
    for &cand in b.hom(obj[am.source], obj[am.target]) {
        if used[cand] || b.weight(cand) != &am.weight {
            continue;
        }
        mor[m] = cand;
        let consistent = a.compose.iter().all(|(&(x, y), &z)| {
            let (fx, fy, fz) = (mor[x], mor[y], mor[z]);
            fx == usize::MAX || fy == usize::MAX || fz == usize::MAX || b.then(fx, fy) == fz
        });
        if consistent {
            used[cand] = true;
            if assign_morphisms(a, b, obj, order, k + 1, mor, used) {
                return true;
            }
            used[cand] = false;
        }
    }
    mor[m] = usize::MAX;
    false
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{int, ratio};

    fn w(s: &str) -> ExtWeight {
        s.parse().unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(FiniteWeightedCategory::arrow(w("1")).validate().is_ok());
        assert!(FiniteWeightedCategory::arrow(w("inf")).validate().is_ok());

        let mut bad = FiniteWeightedCategory::arrow(w("1"));
        bad.morphisms[0].weight = w("1");
        assert!(matches!(
            bad.validate(),
            Err(Error::WeightAxiomViolation(WeightViolation::NonzeroIdentity { .. }))
        ));

        let mut missing = FiniteWeightedCategory::arrow(w("1"));
        missing.compose.remove(&(0, 2));
        assert!(matches!(missing.validate(), Err(Error::NotACategory(_))));
    }

    #[test]
    fn subadditivity_violation_names_the_pair() {
        let s = FiniteDeltaSpace::delta_line_sample(&[int(0), int(1), int(2)]);
        let mut c = FiniteWeightedCategory::from_delta_space(&s);
        let long = c.morphism_index("0->2").unwrap();
        c.morphisms[long].weight = w("3");
        match c.validate() {
            Err(Error::WeightAxiomViolation(WeightViolation::Subadditivity { first, second })) => {
                assert_eq!((first.as_str(), second.as_str()), ("0->1", "1->2"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn functor_weight_examples() {
        let two = FiniteWeightedCategory::arrow(w("1"));
        let id = WFunctor::identity(&two);
        assert_eq!(id.lipschitz_weight(&two, &two), w("1"));
        let doubled = two.scale(&int(2)).unwrap();
        assert_eq!(id.lipschitz_weight(&two, &doubled), w("2"));
        let zero = FiniteWeightedCategory::arrow(w("0"));
        assert_eq!(id.lipschitz_weight(&zero, &two), w("inf"));
    }

    #[test]
    fn tensor_examples() {
        let two = FiniteWeightedCategory::arrow(w("1"));
        let t = tensor_wcat(&two, &two);
        t.validate().unwrap();
        let diag = t.morphism_index("(0->1,0->1)").unwrap();
        assert_eq!(t.weight(diag), &w("2"));
        let side = t.morphism_index("(0->1,1_0)").unwrap();
        assert_eq!(t.weight(side), &w("1"));
        let with_point = tensor_wcat(&two, &FiniteWeightedCategory::terminal());
        let obj: Vec<usize> = (0..2).collect();
        assert!(find_isometric_isomorphism(&with_point, &two, Some(&obj)).is_some());
    }

    #[test]
    fn nat_trans_weights_examples() {
        let s = FiniteDeltaSpace::delta_line_sample(&[int(0), ratio(1, 2), ratio(2, 3), int(1)]);
        let c = FiniteWeightedCategory::from_delta_space(&s);
        let id = WFunctor::identity(&c);
        let phi = WNatTrans::identity(&id, &c);
        phi.validate(&c, &c, &id, &id).unwrap();
        assert_eq!(phi.weights(&c, &c, &id, &id).0, w("0"));

        // a constant functor at the top with components into it
        let top = WFunctor { objects: vec![3; 4], morphisms: vec![c.identity(3); c.morphisms().len()] };
        top.validate(&c, &c).unwrap();
        let comps: Vec<usize> = (0..4).map(|x| c.hom(x, 3)[0]).collect();
        let eta = WNatTrans { components: comps };
        eta.validate(&c, &c, &id, &top).unwrap();
        let (reduced, global) = eta.weights(&c, &c, &id, &top);
        assert_eq!(reduced, w("1"));
        assert!(global >= id.lipschitz_weight(&c, &c) && global >= top.lipschitz_weight(&c, &c));
    }

    #[test]
    fn opposite_and_subcategory() {
        let s = FiniteDeltaSpace::delta_line_sample(&[int(0), int(1), int(2)]);
        let c = FiniteWeightedCategory::from_delta_space(&s);
        c.opposite().validate().unwrap();
        assert_eq!(c.opposite().opposite(), c);
        let (sub, incl) = c.full_subcategory(&[0, 2]).unwrap();
        sub.validate().unwrap();
        incl.validate(&sub, &c).unwrap();
        assert_eq!(sub.hom(0, 1).len(), 1);
        let m = c.homotopy_monoid("1").unwrap();
        assert_eq!(m.morphisms().len(), 1);
        assert_eq!(m.weight(0), &w("0"));
    }

    #[test]
    fn sum_of_categories() {
        let two = FiniteWeightedCategory::arrow(w("1"));
        let s = sum_wcat(&[two.clone(), two]).unwrap();
        s.validate().unwrap();
        assert_eq!(s.objects().len(), 4);
        assert!(s.hom(0, 3).is_empty());
    }
}
