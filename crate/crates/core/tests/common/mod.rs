//! Random inputs and independent reference computations shared by the
//! integration tests.

#![allow(dead_code)]

pub mod fuzz;
pub mod oracles;
pub mod paths;
pub mod rotation;

use std::collections::HashMap;

use proptest::prelude::*;
use rand::Rng;
use wtopo::dmetric::FiniteDeltaSpace;
use wtopo::fundcat::{HoledPlane, Rect};
use wtopo::wcat::{FiniteWeightedCategory, Morphism};
use wtopo::wspace::{self, ChainWSpace};
use wtopo::weight::{int, ratio, Rational};
use wtopo::ExtWeight;

/// Floyd–Warshall closure of an arc matrix with a zero diagonal.
pub fn floyd(arcs: &[Vec<ExtWeight>]) -> Vec<Vec<ExtWeight>> {
    let n = arcs.len();
    let mut d = arcs.to_vec();
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = ExtWeight::zero();
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = &d[i][k] + &d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

fn arc_weight(code: u8) -> ExtWeight {
    match code {
        0..=1 => ExtWeight::Infinite,
        2 => ExtWeight::zero(),
        c => ExtWeight::from_ratio(i64::from(c - 2), 2),
    }
}

/// A δ-metric space from arc codes: closure of random arcs with weights in
/// `{0, 1/2, …, 4, ∞}`.
pub fn space_from_codes(n: usize, codes: &[u8]) -> FiniteDeltaSpace {
    let arcs: Vec<Vec<ExtWeight>> = (0..n).map(|i| (0..n).map(|j| arc_weight(codes[i * n + j] % 11)).collect()).collect();
    let labels = (0..n).map(|i| format!("x{i}")).collect();
    FiniteDeltaSpace::new(labels, floyd(&arcs)).expect("closure is a δ-metric")
}

pub fn random_space<R: Rng>(rng: &mut R, n: usize) -> FiniteDeltaSpace {
    let codes: Vec<u8> = (0..n * n).map(|_| rng.gen()).collect();
    space_from_codes(n, &codes)
}

pub fn space_strategy(min: usize, max: usize) -> impl Strategy<Value = FiniteDeltaSpace> {
    (min..=max).prop_flat_map(|n| proptest::collection::vec(any::<u8>(), n * n).prop_map(move |c| space_from_codes(n, &c)))
}

pub fn le_entrywise(a: &FiniteDeltaSpace, b: &FiniteDeltaSpace) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| a.dist(i, j) <= b.dist(i, j)))
}

/// Tuples of indices in lexicographic order, last index fastest.
pub fn tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        out = out.into_iter().flat_map(|t| (0..s).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

/// All maps `0..n → 0..m`, as assignment vectors.
pub fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    tuples(&vec![m; n])
}

pub fn is_contraction(x: &FiniteDeltaSpace, y: &FiniteDeltaSpace, f: &[usize]) -> bool {
    (0..x.len()).all(|i| (0..x.len()).all(|j| y.dist(f[i], f[j]) <= x.dist(i, j)))
}

/// A random rational in `[0, bound]` with denominator dividing `den`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64, den: i64) -> Rational {
    ratio(rng.gen_range(0..=bound * den), den)
}

/// Breakpoints `0 = t₀ < … < t_p = 1` from positive integer gaps.
pub fn times_from_gaps(gaps: &[u32]) -> Vec<Rational> {
    let total: u32 = gaps.iter().sum();
    let mut acc = 0;
    let mut out = vec![int(0)];
    for g in gaps {
        acc += g;
        out.push(ratio(i64::from(acc), i64::from(total)));
    }
    out
}

/// A random plane on an integer grid with at most `max_holes` pairwise
/// separated holes and 2–4 marked nodes.
pub fn random_plane<R: Rng>(rng: &mut R, max_holes: usize, size: i64) -> HoledPlane {
    loop {
        let w = rng.gen_range(2..=size);
        let h = rng.gen_range(2..=size);
        let k = rng.gen_range(0..=max_holes);
        let holes: Vec<Rect> = (0..k)
            .map(|_| {
                let x0 = rng.gen_range(0..w);
                let y0 = rng.gen_range(0..h);
                let x1 = rng.gen_range(x0 + 1..=w);
                let y1 = rng.gen_range(y0 + 1..=h);
                Rect::new(int(x0), int(y0), int(x1), int(y1)).unwrap()
            })
            .collect();
        let marks: Vec<(Rational, Rational)> = (0..rng.gen_range(2..=4))
            .map(|_| (int(rng.gen_range(0..=w)), int(rng.gen_range(0..=h))))
            .collect();
        let mut unique: Vec<(Rational, Rational)> = Vec::new();
        for m in marks {
            if !unique.contains(&m) {
                unique.push(m);
            }
        }
        if let Ok(p) = HoledPlane::new(int(w), int(h), holes, unique) {
            return p;
        }
    }
}

/// One-object category on `Z/n`, with `k` weighted `c·min(k, n−k)`.
pub fn cyclic_category(n: usize, c: i64) -> FiniteWeightedCategory {
    let morphisms = (0..n)
        .map(|k| Morphism { name: format!("g{k}"), source: 0, target: 0, weight: ExtWeight::from_int(c * k.min(n - k) as i64) })
        .collect();
    let compose = (0..n).flat_map(|a| (0..n).map(move |b| ((a, b), (a + b) % n))).collect();
    FiniteWeightedCategory::new(vec!["*".into()], morphisms, vec![0], compose).expect("cyclic group")
}

/// One object with an idempotent `e` of weight `c`.
pub fn idempotent_category(c: i64) -> FiniteWeightedCategory {
    let morphisms = vec![
        Morphism { name: "1".into(), source: 0, target: 0, weight: ExtWeight::zero() },
        Morphism { name: "e".into(), source: 0, target: 0, weight: ExtWeight::from_int(c) },
    ];
    let compose = HashMap::from([((0, 0), 0), ((0, 1), 1), ((1, 0), 1), ((1, 1), 1)]);
    FiniteWeightedCategory::new(vec!["*".into()], morphisms, vec![0], compose).expect("idempotent")
}

/// Number of functors `source → target` (1-Lipschitz ones when `lipschitz`):
/// every object map, then morphisms assigned in index order, each composition
/// entry checked once its three morphisms are assigned.
pub fn count_functors(source: &FiniteWeightedCategory, target: &FiniteWeightedCategory, lipschitz: bool) -> usize {
    let n = source.morphisms().len();
    // composition entries keyed by the largest morphism they mention
    let mut due: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    for (&(a, b), &c) in source.composition_table() {
        due[a.max(b).max(c)].push((a, b, c));
    }
    let mut count = 0;
    for obj in all_maps(source.objects().len(), target.objects().len()) {
        let mut mor = vec![0; n];
        count += extend(source, target, lipschitz, &obj, &due, 0, &mut mor);
    }
    count
}

fn extend(
    source: &FiniteWeightedCategory,
    target: &FiniteWeightedCategory,
    lipschitz: bool,
    obj: &[usize],
    due: &[Vec<(usize, usize, usize)>],
    k: usize,
    mor: &mut Vec<usize>,
) -> usize {
    if k == mor.len() {
        return 1;
    }
    let m = &source.morphisms()[k];
    let candidates: Vec<usize> = if source.is_identity(k) {
        vec![target.identity(obj[m.source])]
    } else {
        target.hom(obj[m.source], obj[m.target]).to_vec()
    };
    let mut count = 0;
    for b in candidates {
        if lipschitz && target.weight(b) > &m.weight {
            continue;
        }
        mor[k] = b;
        if due[k].iter().all(|&(x, y, z)| target.then(mor[x], mor[y]) == mor[z]) {
            count += extend(source, target, lipschitz, obj, due, k + 1, mor);
        }
    }
    count
}

/// Random edges between distinct vertices, at most two per ordered pair.
pub fn random_edges<R: Rng>(rng: &mut R, n: usize, m: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    while edges.len() < m && n > 1 {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && edges.iter().filter(|&&e| e == (a, b)).count() < 2 {
            edges.push((a, b));
        }
    }
    edges
}

/// A random chain w-space on 2–`max_n` vertices: linear weights, or the span
/// weight of a random δ-metric.
pub fn random_wspace<R: Rng>(rng: &mut R, max_n: usize) -> ChainWSpace {
    let n = rng.gen_range(2..=max_n);
    let m = rng.gen_range(1..=2 * n);
    let edges = random_edges(rng, n, m);
    if rng.gen_bool(0.5) {
        let weights = edges.iter().map(|_| ExtWeight::Finite(random_rational(rng, 3, 2))).collect();
        ChainWSpace::linear((0..n).map(|i| format!("v{i}")).collect(), edges, weights).unwrap()
    } else {
        wspace::sp_of(&random_space(rng, n), &edges).unwrap()
    }
}
