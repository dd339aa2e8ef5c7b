//! Integer and exact-arithmetic references for the rotation module.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use wtopo::rotation::{GElement, Generator, QuadraticIrrational};
use wtopo::weight::Rational;

/// `θ = (p + q√d)/r` as machine integers with `r > 0`.
pub fn parts(theta: &QuadraticIrrational) -> (i128, i128, i128, i128) {
    let (p, q, r) = theta.value().integer_form();
    let f = |x: BigInt| x.to_i128().unwrap();
    (f(p), f(q), f(r), i128::from(theta.radicand()))
}

/// Sign of `a + b√d` using integers only.
pub fn sign(a: i128, b: i128, d: i128) -> Ordering {
    match (a.signum(), b.signum()) {
        (x, y) if x >= 0 && y >= 0 => (x + y).cmp(&0),
        (x, y) if x <= 0 && y <= 0 => 0.cmp(&-(x + y)),
        (x, _) => {
            // opposite signs: compare a² with b²d
            let ord = (a * a).cmp(&(b * b * d));
            if x > 0 {
                ord
            } else {
                ord.reverse()
            }
        }
    }
}

/// `r·(m + nθ) = (mr + np) + nq√d`.
pub fn scaled(e: &GElement, t: (i128, i128, i128, i128)) -> (i128, i128) {
    let (p, q, r, _) = t;
    (i128::from(e.m) * r + i128::from(e.n) * p, i128::from(e.n) * q)
}

pub fn g_plus_oracle(theta: &QuadraticIrrational, count: usize, height: i64) -> Vec<GElement> {
    let t = parts(theta);
    let mut all: Vec<GElement> = Vec::new();
    for m in -height..=height {
        for n in -height..=height {
            let e = GElement::new(m, n);
            let (a, b) = scaled(&e, t);
            if sign(a, b, t.3) != Ordering::Less {
                all.push(e);
            }
        }
    }
    all.sort_by(|x, y| {
        let ((a1, b1), (a2, b2)) = (scaled(x, t), scaled(y, t));
        sign(a1 - a2, b1 - b2, t.3)
    });
    all.truncate(count);
    all
}

pub type Quad = (Rational, Rational);

pub fn quad(theta: &QuadraticIrrational) -> Quad {
    let (p, q, r) = theta.value().integer_form();
    (Rational::new(p, r.clone()), Rational::new(q, r))
}

pub fn qmul(x: &Quad, y: &Quad, d: &Rational) -> Quad {
    (&x.0 * &y.0 + &x.1 * &y.1 * d, &x.0 * &y.1 + &x.1 * &y.0)
}

pub fn matmul(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// The word's matrix carries `θ` to `θ'`: `aθ + b = θ'(cθ + d)` with `ad − bc = ±1`.
pub fn certifies(word: &[Generator], theta: &QuadraticIrrational, theta2: &QuadraticIrrational) -> bool {
    // first letter first: M = M_k ⋯ M_1
    let m = word.iter().fold([[1, 0], [0, 1]], |acc, g| matmul(g.matrix(), acc));
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let d = Rational::from_integer(theta.radicand().into());
    let (t, t2) = (quad(theta), quad(theta2));
    let int = |k: i64| Rational::from_integer(k.into());
    let lhs = (&t.0 * int(m[0][0]) + int(m[0][1]), &t.1 * int(m[0][0]));
    let den = (&t.0 * int(m[1][0]) + int(m[1][1]), &t.1 * int(m[1][0]));
    det.abs() == 1 && theta.radicand() == theta2.radicand() && lhs == qmul(&t2, &den, &d)
}
