mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wtopo::dmetric::PointRelation;
use wtopo::wspace::{self, ChainWSpace, Walk, WalkWeight, DEFAULT_WALK_CAP};
use wtopo::ExtWeight;

const MAX_LEN: usize = 4;

/// Every walk of length at most `max_len`, as (start, edges).
fn walks(x: &ChainWSpace, max_len: usize) -> Vec<Walk> {
    let mut out: Vec<Walk> = (0..x.vertices().len()).map(Walk::empty).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            let end = w.edges.last().map_or(w.start, |&e| x.edges()[e].1);
            for (e, &(a, _)) in x.edges().iter().enumerate() {
                if a == end {
                    let mut edges = w.edges.clone();
                    edges.push(e);
                    next.push(Walk { start: w.start, edges });
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Span weight computed from a distance matrix.
fn span_oracle(d: &[Vec<ExtWeight>], x: &ChainWSpace, w: &Walk) -> ExtWeight {
    let mut v = vec![w.start];
    v.extend(w.edges.iter().map(|&e| x.edges()[e].1));
    let mut best = ExtWeight::zero();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            best = best.max(d[v[i]][v[j]].clone());
        }
    }
    best
}

/// Shortest-path distances of a linear w-space.
fn linear_delta_oracle(x: &ChainWSpace, weights: &[ExtWeight]) -> Vec<Vec<ExtWeight>> {
    let n = x.vertices().len();
    let mut arcs = vec![vec![ExtWeight::Infinite; n]; n];
    for (k, &(a, b)) in x.edges().iter().enumerate() {
        arcs[a][b] = arcs[a][b].clone().min(weights[k].clone());
    }
    floyd(&arcs)
}

/// `δ` of a span w-space: the least span over walks without repeated vertices.
fn span_delta_oracle(x: &ChainWSpace, d: &[Vec<ExtWeight>]) -> Vec<Vec<ExtWeight>> {
    let n = x.vertices().len();
    let mut best = vec![vec![ExtWeight::Infinite; n]; n];
    for w in walks(x, n.saturating_sub(1)) {
        let end = w.edges.last().map_or(w.start, |&e| x.edges()[e].1);
        let s = span_oracle(d, x, &w);
        if s < best[w.start][end] {
            best[w.start][end] = s;
        }
    }
    best
}

#[test]
fn delta_matches_the_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..150 {
        let x = random_wspace(&mut rng, 5);
        let expected = match x.weight_rule() {
            WalkWeight::Linear(ws) => linear_delta_oracle(&x, ws),
            WalkWeight::Span(d) => span_delta_oracle(&x, d),
            _ => unreachable!(),
        };
        assert_eq!(wspace::delta_of(&x, DEFAULT_WALK_CAP).unwrap().matrix(), &expected[..]);
    }
}

#[test]
fn galois_laws_on_random_spaces() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..100 {
        let x = random_wspace(&mut rng, 4);
        x.check_axioms(MAX_LEN, DEFAULT_WALK_CAP).unwrap();
        let r = wspace::galois_check(&x, MAX_LEN, DEFAULT_WALK_CAP).unwrap();
        assert!(r.all_hold(), "{r:?} on {x:?}");
        // unit inequalities walk by walk against the oracle
        let dx = linear_or_span_delta(&x);
        for w in walks(&x, MAX_LEN) {
            assert!(x.weight(&w) >= span_oracle(&dx, &x, &w));
        }
    }
}

fn linear_or_span_delta(x: &ChainWSpace) -> Vec<Vec<ExtWeight>> {
    match x.weight_rule() {
        WalkWeight::Linear(ws) => linear_delta_oracle(x, ws),
        WalkWeight::Span(d) => span_delta_oracle(x, d),
        _ => unreachable!(),
    }
}

#[test]
fn dual_laws_on_random_delta_spaces() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let n = rng.gen_range(2..=4);
        let y = random_space(&mut rng, n);
        let m = rng.gen_range(1..=2 * n);
        let adm = random_edges(&mut rng, n, m);
        let r = wspace::galois_check_dual(&y, &adm, DEFAULT_WALK_CAP).unwrap();
        assert!(r.all_hold(), "{r:?}");
        // δ(LY) is the shortest-path closure of the admissible distances
        let l = wspace::l_of(&y, &adm).unwrap();
        let weights: Vec<ExtWeight> = adm.iter().map(|&(a, b)| y.dist(a, b).clone()).collect();
        assert_eq!(wspace::delta_of(&l, DEFAULT_WALK_CAP).unwrap().matrix(), &linear_delta_oracle(&l, &weights)[..]);
    }
}

#[test]
fn linearization_is_a_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..100 {
        let x = random_wspace(&mut rng, 4);
        let lx = wspace::linearize(&x);
        let llx = wspace::linearize(&lx);
        assert_eq!(lx.weight_rule(), llx.weight_rule());
        for w in walks(&x, MAX_LEN) {
            let edge_sum: ExtWeight = w
                .edges
                .iter()
                .map(|&e| x.weight(&Walk { start: x.edges()[e].0, edges: vec![e] }))
                .sum();
            assert_eq!(lx.weight(&w), edge_sum);
            assert!(lx.weight(&w) >= x.weight(&w));
        }
        assert!(wspace::classify(&lx, MAX_LEN, DEFAULT_WALK_CAP).unwrap().linear);
    }
}

/// Least total weight of a cut of the walk into pieces that are walks of `source`.
fn quotient_oracle(source: &ChainWSpace, w: &Walk) -> ExtWeight {
    let n = w.edges.len();
    let mut best = vec![ExtWeight::Infinite; n + 1];
    best[0] = ExtWeight::zero();
    for j in 1..=n {
        for i in 0..j {
            let piece = &w.edges[i..j];
            let lifts = piece.windows(2).all(|p| source.edges()[p[0]].1 == source.edges()[p[1]].0);
            if lifts {
                let cost = &best[i] + &source.weight(&Walk { start: source.edges()[piece[0]].0, edges: piece.to_vec() });
                best[j] = best[j].clone().min(cost);
            }
        }
    }
    best[n].clone()
}

#[test]
fn quotients_match_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..100 {
        let x = random_wspace(&mut rng, 4);
        let n = x.vertices().len();
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let relation = PointRelation::new([(x.vertices()[a].clone(), x.vertices()[b].clone())]);
        let q = wspace::wspace_quotient(&x, &relation).unwrap();
        q.check_axioms(MAX_LEN, DEFAULT_WALK_CAP).unwrap();
        for w in walks(&q, MAX_LEN) {
            let expected = if w.edges.is_empty() { ExtWeight::zero() } else { quotient_oracle(&x, &w) };
            assert_eq!(q.weight(&w), expected);
        }
        // the projection does not increase weights
        for w in walks(&x, MAX_LEN).into_iter().filter(|w| !w.edges.is_empty()) {
            let image = Walk { start: q.edges()[w.edges[0]].0, edges: w.edges.clone() };
            assert!(q.weight(&image) <= x.weight(&w));
        }
    }
}

#[test]
fn constructions_satisfy_the_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..40 {
        let x = random_wspace(&mut rng, 3);
        let y = random_wspace(&mut rng, 3);
        for z in [
            wspace::wspace_product(&x, &y),
            wspace::wspace_tensor(&x, &y),
            wspace::wspace_sum(&[x.clone(), y.clone()]),
            wspace::linearize(&x),
        ] {
            z.check_axioms(3, DEFAULT_WALK_CAP).unwrap();
        }
        // tensor weights dominate product weights walk by walk
        let (p, t) = (wspace::wspace_product(&x, &y), wspace::wspace_tensor(&x, &y));
        for w in walks(&p, 3) {
            assert!(p.weight(&w) <= t.weight(&w));
        }
    }
}
