mod common;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use common::rotation::*;
use wtopo::rotation::{self, GElement, Generator, QuadraticIrrational};
use wtopo::weight::Rational;

fn samples() -> Vec<QuadraticIrrational> {
    vec![
        QuadraticIrrational::sqrt(2).unwrap(),
        QuadraticIrrational::sqrt(3).unwrap(),
        QuadraticIrrational::golden_ratio(),
        QuadraticIrrational::new(2, 1, 2, 2).unwrap(),
        QuadraticIrrational::new(-1, 1, 2, 5).unwrap(),
        QuadraticIrrational::new(3, -2, 7, 11).unwrap(),
        QuadraticIrrational::new(0, 1, 3, 7).unwrap(),
    ]
}

fn random_theta<R: Rng>(rng: &mut R) -> QuadraticIrrational {
    let d = [2u64, 3, 5, 6, 7, 10, 13][rng.gen_range(0..7)];
    let q = loop {
        let q = rng.gen_range(-3..=3);
        if q != 0 {
            break q;
        }
    };
    QuadraticIrrational::new(rng.gen_range(-9..=9), q, rng.gen_range(1..=6), d).unwrap()
}

#[test]
fn enumeration_matches_the_integer_oracle() {
    for theta in samples() {
        for height in [2, 5, 9] {
            assert_eq!(rotation::enumerate_g_plus(&theta, 25, height), g_plus_oracle(&theta, 25, height), "{theta}");
        }
    }
}

#[test]
fn monoid_weights_are_injective_and_additive() {
    for theta in samples() {
        let m = rotation::fundamental_monoid(&theta, &Rational::from_integer(3.into()), 6);
        assert!(m.weight_is_injective());
        assert!(m.weight_is_additive());
        assert_eq!(m.elements, g_plus_oracle(&theta, m.elements.len(), 6));
        let t = parts(&theta);
        // every listed element is at most the cap
        for e in &m.elements {
            let (a, b) = scaled(e, t);
            assert_ne!(sign(a - 3 * t.2, b, t.3), Ordering::Greater);
        }
    }
}

#[test]
fn dividing_by_theta_swaps_the_coordinates() {
    for theta in samples().into_iter().filter(|t| t.value().signum() == Ordering::Greater) {
        let inv = QuadraticIrrational::from_number(theta.value().recip().unwrap()).unwrap();
        for e in rotation::enumerate_g_plus(&theta, 30, 6) {
            let x = e.value(&theta).div(theta.value()).unwrap();
            let swapped = GElement::new(e.n, e.m);
            assert_eq!(x, swapped.value(&inv));
            assert_ne!(x.signum(), Ordering::Less);
        }
    }
}

fn floor_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

/// Regular continued fraction by the integer recurrence on `(P + √D)/Q`.
fn cf_oracle(theta: &QuadraticIrrational) -> (Vec<i128>, Vec<i128>) {
    let (p, q, r, d) = parts(theta);
    let (mut pp, mut dd, mut qq) = if q > 0 { (p, q * q * d, r) } else { (-p, q * q * d, -r) };
    if (dd - pp * pp) % qq != 0 {
        pp *= qq.abs();
        dd *= qq * qq;
        qq *= qq.abs();
    }
    let s = dd.sqrt();
    let mut seen: Vec<(i128, i128)> = Vec::new();
    let mut terms = Vec::new();
    loop {
        if let Some(i) = seen.iter().position(|&x| x == (pp, qq)) {
            return (terms[..i].to_vec(), terms[i..].to_vec());
        }
        seen.push((pp, qq));
        let a = if qq > 0 { floor_div(pp + s, qq) } else { floor_div(pp + s + 1, qq) };
        terms.push(a);
        pp = a * qq - pp;
        qq = (dd - pp * pp) / qq;
    }
}

#[test]
fn continued_fractions_match_the_integer_recurrence() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut thetas = samples();
    thetas.extend((0..200).map(|_| random_theta(&mut rng)));
    for theta in thetas {
        let (pre, per) = rotation::cf_expansion(&theta);
        let as_i = |v: Vec<BigInt>| v.into_iter().map(|x| x.to_i128().unwrap()).collect::<Vec<_>>();
        assert_eq!((as_i(pre), as_i(per)), cf_oracle(&theta), "{theta}");
    }
}

/// Periods that are cyclic rotations of one another.
fn same_cycle(a: &[i128], b: &[i128]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|k| a[k..].iter().chain(&a[..k]).eq(b.iter()))
}

#[test]
fn lipschitz_certificates_are_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let gens = [Generator::R, Generator::T, Generator::TInv];
    for _ in 0..200 {
        let theta = random_theta(&mut rng);
        let len = rng.gen_range(0..8);
        let word: Vec<Generator> = (0..len).map(|_| gens[rng.gen_range(0..3)]).collect();
        let theta2 = rotation::apply_word(&word, &theta).unwrap();
        assert!(certifies(&word, &theta, &theta2));
        let found = rotation::classify_lipschitz(&theta, &theta2).expect("equivalent by construction");
        assert!(certifies(&found, &theta, &theta2), "{theta} -> {theta2}");
    }
}

#[test]
fn lipschitz_verdicts_match_periods() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..300 {
        let (a, b) = (random_theta(&mut rng), random_theta(&mut rng));
        let found = rotation::classify_lipschitz(&a, &b);
        let expected = a.radicand() == b.radicand() && same_cycle(&cf_oracle(&a).1, &cf_oracle(&b).1);
        assert_eq!(found.is_some(), expected, "{a} vs {b}");
        if let Some(w) = found {
            assert!(certifies(&w, &a, &b));
        }
    }
}

#[test]
fn isometric_certificates_are_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..200 {
        let theta = random_theta(&mut rng);
        let n: i64 = rng.gen_range(-5..=5);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let (p, q, r, d) = parts(&theta);
        let theta2 = QuadraticIrrational::new(
            (i128::from(n) * r + i128::from(sign) * p) as i64,
            (i128::from(sign) * q) as i64,
            r as i64,
            d as u64,
        )
        .unwrap();
        let c = rotation::classify_isometric(&theta, &theta2).expect("translate or reflection");
        // θ' = n + sign·θ, checked on the integer forms
        let (p2, q2, r2, _) = parts(&theta2);
        let cn = c.n.to_i128().unwrap();
        let s = i128::from(c.sign);
        assert_eq!((p2 * r, q2 * r), ((cn * r + s * p) * r2, s * q * r2));
        // an isometric pair is also Lipschitz equivalent
        assert!(rotation::classify_lipschitz(&theta, &theta2).is_some());
    }
    let (a, b) = (QuadraticIrrational::sqrt(2).unwrap(), QuadraticIrrational::sqrt(3).unwrap());
    assert!(rotation::classify_isometric(&a, &b).is_none());
}
