//! Random inputs fed to every constructor, with the matching validator run
//! on each output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wtopo::dmetric::{self, FiniteDeltaSpace, PointRelation};
use wtopo::fundcat::{self, DEFAULT_PATH_CAP};
use wtopo::paths::{AnalyticModel, ChainPath, PLPath};
use wtopo::rotation::{self, Generator, QuadraticIrrational};
use wtopo::wcat::{self, FiniteWeightedCategory};
use wtopo::weight::{int, ratio, Rational};
use wtopo::wspace::{self, ChainWSpace, DEFAULT_WALK_CAP};
use wtopo::ExtWeight;

use super::{random_plane, random_rational, random_space, random_wspace};

pub struct FuzzOutcome {
    pub constructor: &'static str,
    pub cases: usize,
    pub violations: usize,
}

type Check = fn(&mut ChaCha8Rng) -> bool;

fn space(rng: &mut ChaCha8Rng, max: usize) -> FiniteDeltaSpace {
    let n = rng.gen_range(1..=max);
    random_space(rng, n)
}

fn ok_space(s: &FiniteDeltaSpace) -> bool {
    dmetric::check_axioms(s.matrix()).is_ok()
}

fn relation(rng: &mut ChaCha8Rng, s: &FiniteDeltaSpace) -> PointRelation {
    let k = rng.gen_range(0..=2);
    PointRelation::new((0..k).map(|_| {
        let (a, b) = (rng.gen_range(0..s.len()), rng.gen_range(0..s.len()));
        (s.label(a).to_string(), s.label(b).to_string())
    }))
}

fn category(rng: &mut ChaCha8Rng, max: usize) -> FiniteWeightedCategory {
    FiniteWeightedCategory::from_delta_space(&space(rng, max))
}

/// A PL path in `δR^{⊗dim}` with up to four pieces.
fn pl_path(rng: &mut ChaCha8Rng, dim: usize) -> PLPath {
    let p = rng.gen_range(2..=5);
    let mut times: Vec<Rational> = (1..p - 1).map(|_| random_rational(rng, 1, 12)).collect();
    times.extend([int(0), int(1)]);
    times.sort();
    times.dedup();
    let values = times.iter().map(|_| (0..dim).map(|_| ratio(rng.gen_range(-8..=8), 4)).collect()).collect();
    let model = AnalyticModel::delta_line().tensor_power(dim).unwrap();
    PLPath::new(model, times, values).unwrap()
}

fn ok_path(a: &PLPath) -> bool {
    a.span() <= a.length() && a.length() <= a.lipschitz_weight()
}

fn theta(rng: &mut ChaCha8Rng) -> QuadraticIrrational {
    let d = [2u64, 3, 5, 7][rng.gen_range(0..4)];
    let q = [-2, -1, 1, 2][rng.gen_range(0..4)];
    QuadraticIrrational::new(rng.gen_range(-6..=6), q, rng.gen_range(1..=4), d).unwrap()
}

fn checks() -> Vec<(&'static str, Check)> {
    vec![
        ("dmetric::product", |r| {
            let (x, y) = (space(r, 3), space(r, 3));
            ok_space(&dmetric::product(&[x, y]).unwrap())
        }),
        ("dmetric::tensor", |r| {
            let (x, y) = (space(r, 3), space(r, 3));
            ok_space(&dmetric::tensor(&[x, y]).unwrap())
        }),
        ("dmetric::sum", |r| {
            let (x, y) = (space(r, 3), space(r, 3));
            ok_space(&dmetric::sum(&[x, y]).unwrap())
        }),
        ("dmetric::quotient", |r| {
            let x = space(r, 5);
            let rel = relation(r, &x);
            let (q, map) = dmetric::quotient(&x, &rel).unwrap();
            ok_space(&q) && map.lipschitz_weight() <= ExtWeight::one()
        }),
        ("FiniteDeltaSpace::symmetrize", |r| ok_space(&space(r, 5).symmetrize())),
        ("FiniteDeltaSpace::opposite", |r| ok_space(&space(r, 5).opposite())),
        ("FiniteDeltaSpace::scale", |r| {
            let lambda = random_rational(r, 3, 4);
            ok_space(&space(r, 5).scale(&lambda).unwrap())
        }),
        ("FiniteDeltaSpace::subspace", |r| {
            let x = space(r, 5);
            let idx: Vec<usize> = (0..x.len()).filter(|_| r.gen_bool(0.6)).collect();
            idx.is_empty() || ok_space(&x.subspace_by_index(&idx).unwrap())
        }),
        ("dmetric::internal_hom", |r| {
            let (y, z) = (space(r, 2), space(r, 3));
            ok_space(&dmetric::internal_hom(&y, &z, 100_000).unwrap().space)
        }),
        ("PLPath::new", |r| {
            let dim = r.gen_range(1..=2);
            ok_path(&pl_path(r, dim))
        }),
        ("PLPath::concatenate", |r| {
            let a = pl_path(r, 1);
            let b0 = pl_path(r, 1);
            let shift = &a.end()[0] - &b0.start()[0];
            let vals = b0.values().iter().map(|v| &v[0] + &shift).collect();
            let b = PLPath::scalar(AnalyticModel::delta_line(), b0.times().to_vec(), vals).unwrap();
            let ab = a.concatenate(&b).unwrap();
            ok_path(&ab) && ab.length() == &a.length() + &b.length() && ab.span() <= &a.span() + &b.span()
        }),
        ("PLPath::pair", |r| {
            let (a, b) = (pl_path(r, 1), pl_path(r, 1));
            ok_path(&a.pair(&b).unwrap())
        }),
        ("PLPath::dilate", |r| {
            let a = pl_path(r, 1);
            let lambda = ratio(r.gen_range(1..=8), 4);
            let f = a.dilate(&lambda).unwrap();
            ok_path(&f) && f.length() <= a.length().scale(&lambda)
        }),
        ("ChainPath::from_indices", |r| {
            let x = space(r, 4);
            let k = r.gen_range(1..=5);
            let vs = (0..k).map(|_| r.gen_range(0..x.len())).collect();
            let a = ChainPath::from_indices(x, vs).unwrap();
            a.span() <= a.length()
        }),
        ("FiniteWeightedCategory::from_delta_space", |r| category(r, 4).validate().is_ok()),
        ("wcat::tensor_wcat", |r| {
            let (x, y) = (category(r, 3), category(r, 3));
            wcat::tensor_wcat(&x, &y).validate().is_ok()
        }),
        ("wcat::sum_wcat", |r| {
            let (x, y) = (category(r, 3), category(r, 3));
            wcat::sum_wcat(&[x, y]).unwrap().validate().is_ok()
        }),
        ("FiniteWeightedCategory::opposite", |r| category(r, 4).opposite().validate().is_ok()),
        ("FiniteWeightedCategory::scale", |r| {
            let lambda = random_rational(r, 3, 4);
            category(r, 4).scale(&lambda).unwrap().validate().is_ok()
        }),
        ("FiniteWeightedCategory::full_subcategory", |r| {
            let c = category(r, 4);
            let n = c.objects().len();
            let objs: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.6)).collect();
            objs.is_empty() || {
                let (s, f) = c.full_subcategory(&objs).unwrap();
                s.validate().is_ok() && f.validate(&s, &c).is_ok()
            }
        }),
        ("wcat::hom_wcat", |r| {
            let (y, z) = (category(r, 2), category(r, 3));
            wcat::hom_wcat(&y, &z, 1_000_000).unwrap().category.validate().is_ok()
        }),
        ("wcat::pushout_wcat", |r| {
            // glue two categories at their first objects
            let (c1, c2) = (category(r, 3), category(r, 3));
            let (c0, u2) = c2.full_subcategory(&[0]).unwrap();
            let (_, u1) = c1.full_subcategory(&[0]).unwrap();
            match wcat::pushout_wcat(&c0, &c1, &c2, &u1, &u2, wcat::DEFAULT_WORD_CAP) {
                Ok(p) => p.category.validate().is_ok() && p.j1.validate(&c1, &p.category).is_ok() && p.j2.validate(&c2, &p.category).is_ok(),
                Err(_) => false,
            }
        }),
        ("fundcat::fundamental_category", |r| {
            let plane = random_plane(r, 2, 5);
            fundcat::fundamental_category(&plane, DEFAULT_PATH_CAP).is_ok_and(|fc| fc.category.validate().is_ok())
        }),
        ("ChainWSpace (linear and span)", |r| random_wspace(r, 4).check_axioms(4, DEFAULT_WALK_CAP).is_ok()),
        ("wspace::wspace_product", |r| {
            let (x, y) = (random_wspace(r, 3), random_wspace(r, 3));
            wspace::wspace_product(&x, &y).check_axioms(3, DEFAULT_WALK_CAP).is_ok()
        }),
        ("wspace::wspace_tensor", |r| {
            let (x, y) = (random_wspace(r, 3), random_wspace(r, 3));
            wspace::wspace_tensor(&x, &y).check_axioms(3, DEFAULT_WALK_CAP).is_ok()
        }),
        ("wspace::wspace_sum", |r| {
            let (x, y) = (random_wspace(r, 3), random_wspace(r, 3));
            wspace::wspace_sum(&[x, y]).check_axioms(4, DEFAULT_WALK_CAP).is_ok()
        }),
        ("wspace::wspace_quotient", |r| {
            let x = random_wspace(r, 4);
            let n = x.vertices().len();
            let (a, b) = (r.gen_range(0..n), r.gen_range(0..n));
            let rel = PointRelation::new([(x.vertices()[a].clone(), x.vertices()[b].clone())]);
            wspace::wspace_quotient(&x, &rel).unwrap().check_axioms(4, DEFAULT_WALK_CAP).is_ok()
        }),
        ("wspace::linearize", |r| wspace::linearize(&random_wspace(r, 4)).check_axioms(4, DEFAULT_WALK_CAP).is_ok()),
        ("wspace::delta_of", |r| ok_space(&wspace::delta_of(&random_wspace(r, 4), DEFAULT_WALK_CAP).unwrap())),
        ("wspace::sp_of / l_of", |r| {
            let y = space(r, 4);
            let n = y.len();
            let adm: Vec<(usize, usize)> = (0..r.gen_range(0..=6)).map(|_| (r.gen_range(0..n), r.gen_range(0..n))).collect();
            let sp: ChainWSpace = wspace::sp_of(&y, &adm).unwrap();
            let l = wspace::l_of(&y, &adm).unwrap();
            sp.check_axioms(4, DEFAULT_WALK_CAP).is_ok() && l.check_axioms(4, DEFAULT_WALK_CAP).is_ok()
        }),
        ("rotation::fundamental_monoid", |r| {
            let m = rotation::fundamental_monoid(&theta(r), &int(2), 4);
            m.weight_is_injective() && m.weight_is_additive()
        }),
        ("rotation::apply_word", |r| {
            let gens = [Generator::R, Generator::T, Generator::TInv];
            let t = theta(r);
            let word: Vec<Generator> = (0..r.gen_range(0..6)).map(|_| gens[r.gen_range(0..3)]).collect();
            let t2 = rotation::apply_word(&word, &t).unwrap();
            t2.radicand() == t.radicand() && rotation::classify_lipschitz(&t, &t2).is_some()
        }),
    ]
}

/// Runs every check `cases` times from a fixed seed.
pub fn run(seed: u64, cases: usize) -> Vec<FuzzOutcome> {
    checks()
        .into_iter()
        .enumerate()
        .map(|(k, (constructor, check))| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed + k as u64);
            let violations = (0..cases).filter(|_| !check(&mut rng)).count();
            FuzzOutcome { constructor, cases, violations }
        })
        .collect()
}
