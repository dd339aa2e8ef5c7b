//! Random piecewise-linear paths and reparameterizations.

use proptest::prelude::*;
use rand::Rng;
use wtopo::paths::{AnalyticModel, PLPath};
use wtopo::weight::{int, ratio};
use wtopo::ExtWeight;

use super::times_from_gaps;

#[derive(Clone, Debug)]
pub struct Spec {
    pub kind: u8,
    pub dim: usize,
    pub gaps: Vec<u32>,
    pub codes: Vec<i64>,
    pub forward: bool,
}

pub fn spec() -> impl Strategy<Value = Spec> {
    (0u8..3, 1usize..=2, proptest::collection::vec(1u32..5, 1..5), any::<bool>()).prop_flat_map(|(kind, dim, gaps, forward)| {
        let dim = if kind == 0 { dim } else { 1 };
        let n = (gaps.len() + 1) * dim;
        proptest::collection::vec(-8i64..=8, n).prop_map(move |codes| Spec { kind, dim, gaps: gaps.clone(), codes, forward })
    })
}

/// The same distribution as [`spec`], drawn from a plain generator.
pub fn random_spec<R: Rng>(rng: &mut R) -> Spec {
    let kind = rng.gen_range(0u8..3);
    let dim = if kind == 0 { rng.gen_range(1usize..=2) } else { 1 };
    let gaps: Vec<u32> = (0..rng.gen_range(1..5)).map(|_| rng.gen_range(1u32..5)).collect();
    let codes = (0..(gaps.len() + 1) * dim).map(|_| rng.gen_range(-8i64..=8)).collect();
    Spec { kind, dim, gaps, codes, forward: rng.gen_bool(0.5) }
}

pub fn build(s: &Spec) -> PLPath {
    let times = times_from_gaps(&s.gaps);
    let p = times.len();
    let model = match s.kind {
        0 => AnalyticModel::delta_line().tensor_power(s.dim).unwrap(),
        1 => AnalyticModel::unit_interval(),
        _ => AnalyticModel::delta_circle(),
    };
    let mut values = vec![vec![int(0); s.dim]; p];
    for c in 0..s.dim {
        let mut col: Vec<i64> = (0..p).map(|k| s.codes[k * s.dim + c]).collect();
        if s.kind == 1 {
            col = col.iter().map(|v| v.rem_euclid(9)).collect();
        }
        if s.forward {
            col.sort();
        }
        for k in 0..p {
            values[k][c] = if s.kind == 1 { ratio(col[k], 8) } else { ratio(col[k], 4) };
        }
    }
    PLPath::new(model, times, values).unwrap()
}

/// Length in `δR^{⊗n}`: total displacement if every coordinate is weakly
/// increasing along the breakpoints, else `∞`.
pub fn line_length_oracle(a: &PLPath) -> ExtWeight {
    let v = a.values();
    let dim = v[0].len();
    let forward = v.windows(2).all(|w| (0..dim).all(|c| w[0][c] <= w[1][c]));
    if !forward {
        return ExtWeight::Infinite;
    }
    ExtWeight::Finite((0..dim).map(|c| &v[v.len() - 1][c] - &v[0][c]).sum())
}

pub fn rho_from(gaps: &[u32], codes: &[u8], homeo: bool) -> PLPath {
    let times = times_from_gaps(gaps);
    let p = times.len();
    let mut vals: Vec<i64> = codes.iter().take(p).map(|&c| i64::from(c % 17)).collect();
    vals.resize(p, 16);
    vals.sort();
    if homeo {
        // strictly increasing from 0 to 1
        vals = (0..p as i64).map(|k| k * 16 / (p as i64 - 1)).collect();
        if let Some(mid) = codes.first() {
            if p > 2 {
                vals[1] = (1 + i64::from(*mid) % (vals[2] - 1).max(1)).min(vals[2] - 1);
            }
        }
    }
    PLPath::scalar(AnalyticModel::unit_interval(), times, vals.iter().map(|&v| ratio(v, 16)).collect()).unwrap()
}

/// Piecewise-affine interpolation of `√t` at `t = (k/N)²`.
pub fn sqrt_approximant(n: i64) -> PLPath {
    let times = (0..=n).map(|k| ratio(k * k, n * n)).collect();
    let values = (0..=n).map(|k| ratio(k, n)).collect();
    PLPath::scalar(AnalyticModel::delta_line(), times, values).unwrap()
}
