//! Reference computations for δ-metric constructions.

use wtopo::dmetric::FiniteDeltaSpace;
use wtopo::ExtWeight;

use super::{all_maps, floyd, is_contraction, tuples};

pub type Matrix = Vec<Vec<ExtWeight>>;

pub fn sym_oracle(x: &FiniteDeltaSpace) -> Matrix {
    let n = x.len();
    let arcs: Matrix = (0..n).map(|i| (0..n).map(|j| x.dist(i, j).clone().min(x.dist(j, i).clone())).collect()).collect();
    floyd(&arcs)
}

pub fn combine_oracle(ms: &[Matrix], sum: bool) -> Matrix {
    let ts = tuples(&ms.iter().map(Vec::len).collect::<Vec<_>>());
    ts.iter()
        .map(|x| {
            ts.iter()
                .map(|y| {
                    let parts = ms.iter().enumerate().map(|(k, m)| m[x[k]][y[k]].clone());
                    if sum {
                        parts.sum()
                    } else {
                        parts.max().unwrap()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn le(a: &Matrix, b: &Matrix) -> bool {
    a.iter().zip(b).all(|(r, s)| r.iter().zip(s).all(|(x, y)| x <= y))
}

pub fn matrix(x: &FiniteDeltaSpace) -> Matrix {
    x.matrix().to_vec()
}

/// `Z^Y` built directly: contractions `Y → Z` with the sup distance.
pub fn hom_oracle(y: &FiniteDeltaSpace, z: &FiniteDeltaSpace) -> (Vec<Vec<usize>>, Matrix) {
    let maps: Vec<Vec<usize>> = all_maps(y.len(), z.len()).into_iter().filter(|f| is_contraction(y, z, f)).collect();
    let d = maps
        .iter()
        .map(|f| maps.iter().map(|g| (0..y.len()).map(|i| z.dist(f[i], g[i]).clone()).max().unwrap_or_default()).collect())
        .collect();
    (maps, d)
}

/// Number of contractions `X⊗Y → Z` and of contractions `X → Z^Y`.
pub fn exponential_counts(x: &FiniteDeltaSpace, y: &FiniteDeltaSpace, z: &FiniteDeltaSpace) -> (usize, usize) {
    let xy = FiniteDeltaSpace::new(
        (0..x.len() * y.len()).map(|k| k.to_string()).collect(),
        combine_oracle(&[matrix(x), matrix(y)], true),
    )
    .unwrap();
    let left = all_maps(xy.len(), z.len()).iter().filter(|f| is_contraction(&xy, z, f)).count();
    let (maps, d) = hom_oracle(y, z);
    let zy = FiniteDeltaSpace::new((0..maps.len()).map(|k| k.to_string()).collect(), d).unwrap();
    let right = all_maps(x.len(), zy.len()).iter().filter(|g| is_contraction(x, &zy, g)).count();
    (left, right)
}

