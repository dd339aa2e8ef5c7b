use std::collections::HashMap;

use super::{FiniteWeightedCategory, Morphism, WFunctor, WNatTrans};
use crate::dmetric::{for_each_map, ExponentialLawReport};
use crate::error::{Error, Result};
use crate::weight::ExtWeight;

/// All functors `source → target`, restricted to 1-Lipschitz ones when
/// `lipschitz_only` is set. Fails once the search visits more than `cap` nodes.
pub fn enumerate_functors(
    source: &FiniteWeightedCategory,
    target: &FiniteWeightedCategory,
    lipschitz_only: bool,
    cap: u64,
) -> Result<Vec<WFunctor>> {
    let order: Vec<usize> = (0..source.morphisms.len()).filter(|&a| !source.is_identity(a)).collect();
    let mut triples_of: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); source.morphisms.len()];
    for (&(a, b), &c) in &source.compose {
        for m in [a, b, c] {
            triples_of[m].push((a, b, c));
        }
    }
    let mut out = Vec::new();
    let mut budget = cap;
    let mut failed = false;
    for_each_map(source.objects.len(), target.objects.len(), cap, |obj| {
        if failed {
            return;
        }
        let mut mor = vec![usize::MAX; source.morphisms.len()];
        for (x, &id) in source.identities.iter().enumerate() {
            mor[id] = target.identities[obj[x]];
        }
        let search = FunctorSearch { source, target, obj, order: &order, triples_of: &triples_of, lipschitz_only };
        if search.run(0, &mut mor, &mut budget, &mut out).is_err() {
            failed = true;
        }
    })?;
    if failed {
        return Err(Error::SizeLimitExceeded { what: "functor enumeration", limit: cap });
    }
    Ok(out)
}

struct FunctorSearch<'a> {
    source: &'a FiniteWeightedCategory,
    target: &'a FiniteWeightedCategory,
    obj: &'a [usize],
    order: &'a [usize],
    triples_of: &'a [Vec<(usize, usize, usize)>],
    lipschitz_only: bool,
}

impl FunctorSearch<'_> {
    fn run(&self, k: usize, mor: &mut Vec<usize>, budget: &mut u64, out: &mut Vec<WFunctor>) -> Result<(), ()> {
        if *budget == 0 {
            return Err(());
        }
        *budget -= 1;
        let Some(&a) = self.order.get(k) else {
            out.push(WFunctor { objects: self.obj.to_vec(), morphisms: mor.clone() });
            return Ok(());
        };
        let m = &self.source.morphisms[a];
        for &cand in self.target.hom(self.obj[m.source], self.obj[m.target]) {
            if self.lipschitz_only && self.target.weight(cand) > &m.weight {
                continue;
            }
            mor[a] = cand;
            let ok = self.triples_of[a].iter().all(|&(x, y, z)| {
                let (fx, fy, fz) = (mor[x], mor[y], mor[z]);
                fx == usize::MAX || fy == usize::MAX || fz == usize::MAX || self.target.then(fx, fy) == fz
            });
            if ok {
                self.run(k + 1, mor, budget, out)?;
            }
        }
        mor[a] = usize::MAX;
        Ok(())
    }
}

/// All natural transformations `f → g`.
pub fn enumerate_nat_trans(
    source: &FiniteWeightedCategory,
    target: &FiniteWeightedCategory,
    f: &WFunctor,
    g: &WFunctor,
    cap: u64,
) -> Result<Vec<WNatTrans>> {
    let choices: Vec<&[usize]> =
        (0..source.objects.len()).map(|x| target.hom(f.objects[x], g.objects[x])).collect();
    let total = choices.iter().try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64));
    if total.is_none_or(|t| t > cap) {
        return Err(Error::SizeLimitExceeded { what: "natural transformation enumeration", limit: cap });
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    loop {
        let phi = WNatTrans { components: idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect() };
        if phi.validate(source, target, f, g).is_ok() {
            out.push(phi);
        }
        let mut k = choices.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The exponential `Z^Y`: 1-Lipschitz functors `Y → Z` and all natural
/// transformations between them, weighted by `W(φ) = sup_y w(φ(y))`.
#[derive(Clone, Debug)]
pub struct HomCategory {
    pub category: FiniteWeightedCategory,
    /// Object `i` of `category` is `functors[i]`.
    pub functors: Vec<WFunctor>,
    /// Morphism `i` of `category` is `transformations[i]`.
    pub transformations: Vec<WNatTrans>,
    functor_index: HashMap<WFunctor, usize>,
    trans_index: HashMap<(usize, usize, WNatTrans), usize>,
}

impl HomCategory {
    pub fn functor_index(&self, f: &WFunctor) -> Option<usize> {
        self.functor_index.get(f).copied()
    }

    pub fn transformation_index(&self, f: usize, g: usize, phi: &WNatTrans) -> Option<usize> {
        self.trans_index.get(&(f, g, phi.clone())).copied()
    }
}

pub fn hom_wcat(y: &FiniteWeightedCategory, z: &FiniteWeightedCategory, cap: u64) -> Result<HomCategory> {
    let functors = enumerate_functors(y, z, true, cap)?;
    let functor_index: HashMap<WFunctor, usize> = functors.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let mut morphisms = Vec::new();
    let mut transformations = Vec::new();
    let mut trans_index = HashMap::new();
    let mut by_pair: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); functors.len()]; functors.len()];
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for phi in enumerate_nat_trans(y, z, f, g, cap)? {
                let id = morphisms.len();
                morphisms.push(Morphism {
                    name: format!("phi{id}"),
                    source: i,
                    target: j,
                    weight: phi.reduced_weight(z),
                });
                by_pair[i][j].push(id);
                trans_index.insert((i, j, phi.clone()), id);
                transformations.push(phi);
            }
        }
    }
    if morphisms.len() as u64 > cap {
        return Err(Error::SizeLimitExceeded { what: "hom category", limit: cap });
    }
    let identities: Vec<usize> =
        functors.iter().enumerate().map(|(i, f)| trans_index[&(i, i, WNatTrans::identity(f, z))]).collect();
    let mut compose = HashMap::new();
    for (a, ma) in morphisms.iter().enumerate() {
        for k in 0..functors.len() {
            for &b in &by_pair[ma.target][k] {
                let comps = transformations[a]
                    .components
                    .iter()
                    .zip(&transformations[b].components)
                    .map(|(&p, &q)| z.then(p, q))
                    .collect();
                let c = trans_index[&(ma.source, k, WNatTrans { components: comps })];
                compose.insert((a, b), c);
            }
        }
    }
    let objects = (0..functors.len()).map(|i| format!("F{i}")).collect();
    let category = FiniteWeightedCategory::from_parts(objects, morphisms, identities, compose)?;
    Ok(HomCategory { category, functors, transformations, functor_index, trans_index })
}

/// Checks the exponential law `wCat(X ⊗ Y, Z) ≅ wCat(X, Z^Y)` for 1-Lipschitz
/// functors by enumerating both sides and currying.
pub fn exponential_law(
    x: &FiniteWeightedCategory,
    y: &FiniteWeightedCategory,
    z: &FiniteWeightedCategory,
    cap: u64,
) -> Result<ExponentialLawReport> {
    let xy = super::tensor_wcat(x, y);
    let zy = hom_wcat(y, z, cap)?;
    let lhs = enumerate_functors(&xy, z, true, cap)?;
    let rhs = enumerate_functors(x, &zy.category, true, cap)?;
    let (ny, my) = (y.objects.len(), y.morphisms.len());
    let mut ok = true;
    let mut curried = Vec::new();
    for f in &lhs {
        let partial = |xo: usize| WFunctor {
            objects: (0..ny).map(|yo| f.objects[xo * ny + yo]).collect(),
            morphisms: (0..my).map(|b| f.morphisms[x.identity(xo) * my + b]).collect(),
        };
        let objects: Option<Vec<usize>> = (0..x.objects.len()).map(|xo| zy.functor_index(&partial(xo))).collect();
        let Some(objects) = objects else {
            ok = false;
            continue;
        };
        let morphisms: Option<Vec<usize>> = x
            .morphisms
            .iter()
            .enumerate()
            .map(|(a, m)| {
                let phi = WNatTrans { components: (0..ny).map(|yo| f.morphisms[a * my + y.identity(yo)]).collect() };
                zy.transformation_index(objects[m.source], objects[m.target], &phi)
            })
            .collect();
        let Some(morphisms) = morphisms else {
            ok = false;
            continue;
        };
        let g = WFunctor { objects, morphisms };
        if g.validate(x, &zy.category).is_err() || g.lipschitz_weight(x, &zy.category) > ExtWeight::one() {
            ok = false;
        }
        curried.push(g);
    }
    let tensor_side = lhs.len();
    curried.sort();
    curried.dedup();
    let bijective = ok && curried.len() == tensor_side && tensor_side == rhs.len();
    Ok(ExponentialLawReport { tensor_side, hom_side: rhs.len(), currying_is_bijection: bijective })
}
