//! The irrational rotation w-space `W_θ = wR / G_θ` for quadratic
//! irrationals `θ`, with exact arithmetic in `Q(√d)`.
//!
//! `G_θ = Z + θZ` has nonnegative part `G_θ⁺`, the fundamental weighted monoid
//! of `W_θ` under the weight `w(x) = x`. `G_θ⁺` is dense in `[0, ∞)`, so the
//! enumerations here are bounded by the height `max(|m|, |n|)` of `m + nθ`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::weight::Rational;

/// `a + b√d` with rational `a`, `b`. Rationals have `b = 0` and `d = 0`, and
/// combine with any field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadNumber {
    a: Rational,
    b: Rational,
    d: u64,
}

fn is_squarefree(d: u64) -> bool {
    let mut k = 2u64;
    while k * k <= d {
        if d.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

impl QuadNumber {
    pub fn rational(a: Rational) -> Self {
        QuadNumber { a, b: Rational::zero(), d: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rational::from_integer(n.into()))
    }

    /// `a + b√d` for a squarefree `d > 1`.
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self> {
        if d < 2 || !is_squarefree(d) {
            return Err(Error::InvalidQuadratic(format!("{d} is not a squarefree integer greater than 1")));
        }
        Ok(Self::normalized(a, b, d))
    }

    fn normalized(a: Rational, b: Rational, d: u64) -> Self {
        if b.is_zero() {
            QuadNumber { a, b, d: 0 }
        } else {
            QuadNumber { a, b, d }
        }
    }

    pub fn sqrt(d: u64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    /// The squarefree radicand, or 0 for a rational.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn field(&self, other: &QuadNumber) -> Result<u64> {
        match (self.d, other.d) {
            (0, e) | (e, 0) => Ok(e),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(Error::IncompatibleField(d, e)),
        }
    }

    pub fn add(&self, o: &QuadNumber) -> Result<QuadNumber> {
        let d = self.field(o)?;
        Ok(Self::normalized(&self.a + &o.a, &self.b + &o.b, d))
    }

    pub fn sub(&self, o: &QuadNumber) -> Result<QuadNumber> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> QuadNumber {
        QuadNumber { a: -&self.a, b: -&self.b, d: self.d }
    }

    pub fn mul(&self, o: &QuadNumber) -> Result<QuadNumber> {
        let d = self.field(o)?;
        let dd = Rational::from_integer(d.into());
        let a = &self.a * &o.a + &self.b * &o.b * dd;
        let b = &self.a * &o.b + &self.b * &o.a;
        Ok(Self::normalized(a, b, d))
    }

    pub fn recip(&self) -> Result<QuadNumber> {
        let dd = Rational::from_integer(self.d.into());
        let norm = &self.a * &self.a - &self.b * &self.b * dd;
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.a / &norm, -&self.b / &norm, self.d))
    }

    pub fn div(&self, o: &QuadNumber) -> Result<QuadNumber> {
        self.field(o)?;
        self.mul(&o.recip()?)
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == sb || sa == Ordering::Equal {
            return sb;
        }
        // opposite signs: compare a² with b²d
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(self.d.into());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Exact comparison; `IncompatibleField` if the fields differ.
    pub fn compare(&self, o: &QuadNumber) -> Result<Ordering> {
        Ok(self.sub(o)?.signum())
    }

    pub fn floor(&self) -> BigInt {
        // estimate from the integer square root of b²d, then correct
        let (bn, bd) = (self.b.numer().clone(), self.b.denom().clone());
        let s = (&bn * &bn * BigInt::from(self.d)).sqrt();
        let surd = if bn.is_negative() { -Rational::new(s, bd) } else { Rational::new(s, bd) };
        let mut f = (&self.a + surd).floor().to_integer();
        let le = |k: &BigInt, x: &QuadNumber| QuadNumber::rational(Rational::from_integer(k.clone())).sub(x).expect("rational").signum() != Ordering::Greater;
        while !le(&f, self) {
            f -= 1;
        }
        while le(&(&f + 1), self) {
            f += 1;
        }
        f
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * (self.d as f64).sqrt()
    }

    /// Integers `(p, q, r)` with value `(p + q√d)/r`, `r > 0`, `gcd(p, q, r) = 1`.
    pub fn integer_form(&self) -> (BigInt, BigInt, BigInt) {
        use num_integer::Integer;
        let r = self.a.denom().lcm(self.b.denom());
        let p = (&self.a * Rational::from_integer(r.clone())).to_integer();
        let q = (&self.b * Rational::from_integer(r.clone())).to_integer();
        let g = p.gcd(&q).gcd(&r);
        (p / &g, q / &g, r / &g)
    }
}

impl PartialOrd for QuadNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compare(other).ok()
    }
}

impl fmt::Display for QuadNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q, r) = self.integer_form();
        let mut num = String::new();
        if !p.is_zero() || q.is_zero() {
            num.push_str(&p.to_string());
        }
        if !q.is_zero() {
            let mag = q.abs();
            let coeff = if mag.is_one() { String::new() } else { mag.to_string() };
            if q.is_negative() {
                num.push('-');
            } else if !p.is_zero() {
                num.push('+');
            }
            num.push_str(&format!("{coeff}√{}", self.d));
        }
        if r.is_one() {
            f.write_str(&num)
        } else if !p.is_zero() && !q.is_zero() {
            write!(f, "({num})/{r}")
        } else {
            write!(f, "{num}/{r}")
        }
    }
}

/// An irrational element of `Q(√d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational(QuadNumber);

impl QuadraticIrrational {
    /// `(p + q√d)/r`.
    pub fn new(p: i64, q: i64, r: i64, d: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidQuadratic("q must be nonzero".into()));
        }
        if r == 0 {
            return Err(Error::InvalidQuadratic("r must be nonzero".into()));
        }
        let r = Rational::from_integer(r.into());
        let x = QuadNumber::new(Rational::from_integer(p.into()) / &r, Rational::from_integer(q.into()) / &r, d)?;
        Ok(QuadraticIrrational(x))
    }

    pub fn from_number(x: QuadNumber) -> Result<Self> {
        if x.is_rational() {
            return Err(Error::InvalidQuadratic(format!("{x} is rational")));
        }
        Ok(QuadraticIrrational(x))
    }

    pub fn sqrt(d: u64) -> Result<Self> {
        Self::new(0, 1, 1, d)
    }

    /// `(1 + √5)/2`.
    pub fn golden_ratio() -> Self {
        Self::new(1, 1, 2, 5).expect("valid")
    }

    pub fn value(&self) -> &QuadNumber {
        &self.0
    }

    pub fn radicand(&self) -> u64 {
        self.0.d
    }

    pub fn abs(&self) -> QuadraticIrrational {
        if self.0.signum() == Ordering::Less {
            QuadraticIrrational(self.0.neg())
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A weight in `Q(√d)⁺ ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadWeight {
    Finite(QuadNumber),
    Infinite,
}

impl fmt::Display for QuadWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadWeight::Finite(x) => x.fmt(f),
            QuadWeight::Infinite => f.write_str("inf"),
        }
    }
}

/// `m + nθ ∈ G_θ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GElement {
    pub m: i64,
    pub n: i64,
}

impl GElement {
    pub fn new(m: i64, n: i64) -> Self {
        GElement { m, n }
    }

    pub fn value(&self, theta: &QuadraticIrrational) -> QuadNumber {
        let nt = theta.0.mul(&QuadNumber::from_int(self.n)).expect("rational factor");
        nt.add(&QuadNumber::from_int(self.m)).expect("rational summand")
    }

    pub fn add(&self, o: &GElement) -> GElement {
        GElement { m: self.m + o.m, n: self.n + o.n }
    }

    pub fn height(&self) -> i64 {
        self.m.abs().max(self.n.abs())
    }
}

/// `w(x) = x` for `x ≥ 0` and `∞` otherwise.
pub fn g_weight(e: &GElement, theta: &QuadraticIrrational) -> QuadWeight {
    let v = e.value(theta);
    if v.signum() == Ordering::Less {
        QuadWeight::Infinite
    } else {
        QuadWeight::Finite(v)
    }
}

/// Nonnegative elements of height at most `height`, by increasing weight,
/// truncated to `count`.
pub fn enumerate_g_plus(theta: &QuadraticIrrational, count: usize, height: i64) -> Vec<GElement> {
    let mut out: Vec<(QuadNumber, GElement)> = Vec::new();
    for m in -height..=height {
        for n in -height..=height {
            let e = GElement::new(m, n);
            let v = e.value(theta);
            if v.signum() != Ordering::Less {
                out.push((v, e));
            }
        }
    }
    out.sort_by(|x, y| x.0.compare(&y.0).expect("same field"));
    out.into_iter().take(count).map(|(_, e)| e).collect()
}

/// A feasible path of `W_θ`, given by the forward displacements of its
/// increasing segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectedPath {
    pub theta: QuadraticIrrational,
    pub increments: Vec<QuadNumber>,
}

impl ProjectedPath {
    pub fn new(theta: QuadraticIrrational, increments: Vec<QuadNumber>) -> Result<Self> {
        for x in &increments {
            theta.0.field(x)?;
            if x.signum() == Ordering::Less {
                return Err(Error::InvalidPath(format!("negative increment {x}")));
            }
        }
        Ok(ProjectedPath { theta, increments })
    }
}

/// The unique increasing lift of a projected path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub endpoint: QuadNumber,
    pub weight: QuadNumber,
    /// Set when the path closes up in `W_θ`, to the element of `G_θ⁺` it winds by.
    pub loop_class: Option<GElement>,
}

/// `x` written as `m + nθ`, if it lies in `G_θ`.
pub fn as_g_element(x: &QuadNumber, theta: &QuadraticIrrational) -> Option<GElement> {
    theta.0.field(x).ok()?;
    let n = &x.b / &theta.0.b;
    let m = &x.a - &n * &theta.0.a;
    if !n.is_integer() || !m.is_integer() {
        return None;
    }
    Some(GElement::new(m.to_integer().to_i64()?, n.to_integer().to_i64()?))
}

pub fn lift_path(path: &ProjectedPath, basepoint: &QuadNumber) -> Result<Lift> {
    let mut weight = QuadNumber::from_int(0);
    for x in &path.increments {
        weight = weight.add(x)?;
    }
    let endpoint = basepoint.add(&weight)?;
    let loop_class = as_g_element(&weight, &path.theta);
    Ok(Lift { endpoint, weight, loop_class })
}

/// Loop classes of `W_θ` of weight at most `cap` and height at most `height`,
/// by increasing weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationMonoid {
    pub theta: QuadraticIrrational,
    pub elements: Vec<GElement>,
    pub weights: Vec<QuadNumber>,
}

impl RotationMonoid {
    /// Index of the sum of two classes, if it is within the bounds.
    pub fn compose(&self, i: usize, j: usize) -> Option<usize> {
        let s = self.elements[i].add(&self.elements[j]);
        self.elements.iter().position(|e| *e == s)
    }

    /// No two classes share a weight.
    pub fn weight_is_injective(&self) -> bool {
        self.weights.windows(2).all(|w| w[0].compare(&w[1]) == Ok(Ordering::Less))
    }

    /// `w(u + v) = w(u) + w(v)` whenever `u + v` is listed.
    pub fn weight_is_additive(&self) -> bool {
        (0..self.elements.len()).all(|i| {
            (0..self.elements.len()).all(|j| match self.compose(i, j) {
                Some(k) => self.weights[i].add(&self.weights[j]).ok().as_ref() == Some(&self.weights[k]),
                None => true,
            })
        })
    }
}

pub fn fundamental_monoid(theta: &QuadraticIrrational, cap: &Rational, height: i64) -> RotationMonoid {
    let cap = QuadNumber::rational(cap.clone());
    let all = enumerate_g_plus(theta, usize::MAX, height);
    let mut elements = Vec::new();
    let mut weights = Vec::new();
    for e in all {
        let v = e.value(theta);
        if v.compare(&cap).expect("rational cap") == Ordering::Greater {
            break;
        }
        elements.push(e);
        weights.push(v);
    }
    RotationMonoid { theta: theta.clone(), elements, weights }
}

/// `θ' = n + θ` (sign `+1`) or `θ' = n − θ` (sign `−1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometricCertificate {
    pub sign: i8,
    pub n: BigInt,
}

pub fn classify_isometric(theta: &QuadraticIrrational, theta2: &QuadraticIrrational) -> Option<IsometricCertificate> {
    if theta.radicand() != theta2.radicand() {
        return None;
    }
    for sign in [1i8, -1] {
        let s = if sign == 1 { theta2.0.sub(&theta.0) } else { theta2.0.add(&theta.0) }.expect("same field");
        if s.is_rational() && s.a.is_integer() {
            return Some(IsometricCertificate { sign, n: s.a.to_integer() });
        }
    }
    None
}

/// Regular continued fraction of a quadratic irrational, as the shortest
/// preperiod followed by the shortest period.
pub fn cf_expansion(theta: &QuadraticIrrational) -> (Vec<BigInt>, Vec<BigInt>) {
    let (terms, start) = complete_quotients(theta);
    let quotients: Vec<BigInt> = terms.iter().map(|(a, _)| a.clone()).collect();
    (quotients[..start].to_vec(), quotients[start..].to_vec())
}

/// `(a_k, x_k)` with `x_0 = θ`, `a_k = ⌊x_k⌋`, `x_{k+1} = 1/(x_k − a_k)`, up to
/// the first repetition; returns also the index where the cycle starts.
fn complete_quotients(theta: &QuadraticIrrational) -> (Vec<(BigInt, QuadNumber)>, usize) {
    let mut seen: HashMap<QuadNumber, usize> = HashMap::new();
    let mut out = Vec::new();
    let mut x = theta.0.clone();
    loop {
        if let Some(&i) = seen.get(&x) {
            return (out, i);
        }
        seen.insert(x.clone(), out.len());
        let a = x.floor();
        let frac = x.sub(&QuadNumber::rational(Rational::from_integer(a.clone()))).expect("rational");
        out.push((a, x));
        x = frac.recip().expect("irrational");
    }
}

/// Generators of the fractional action of `GL(2, Z)`: `R(t) = 1/t`, `T(t) = t + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    R,
    T,
    TInv,
}

impl Generator {
    pub fn matrix(self) -> [[i64; 2]; 2] {
        match self {
            Generator::R => [[0, 1], [1, 0]],
            Generator::T => [[1, 1], [0, 1]],
            Generator::TInv => [[1, -1], [0, 1]],
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "R" => Ok(Generator::R),
            "T" => Ok(Generator::T),
            "T^-1" => Ok(Generator::TInv),
            _ => Err(Error::InvalidQuadratic(format!("unknown generator `{s}`"))),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::R => "R",
            Generator::T => "T",
            Generator::TInv => "T^-1",
        })
    }
}

/// `t ↦ (at + b)/(ct + d)` for an integer matrix of determinant `±1`.
pub fn gl2z_apply(m: [[i64; 2]; 2], theta: &QuadraticIrrational) -> Result<QuadraticIrrational> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if det.abs() != 1 {
        return Err(Error::NotUnimodular(format!("{m:?} has determinant {det}")));
    }
    let t = &theta.0;
    let lin = |a: i64, b: i64| -> QuadNumber {
        t.mul(&QuadNumber::from_int(a)).expect("rational").add(&QuadNumber::from_int(b)).expect("rational")
    };
    let x = lin(m[0][0], m[0][1]).div(&lin(m[1][0], m[1][1]))?;
    QuadraticIrrational::from_number(x)
}

/// Applies a word of generators, first letter first.
pub fn apply_word(word: &[Generator], theta: &QuadraticIrrational) -> Result<QuadraticIrrational> {
    word.iter().try_fold(theta.clone(), |t, g| gl2z_apply(g.matrix(), &t))
}

fn shift_word(a: &BigInt, forward: bool) -> Vec<Generator> {
    let k = a.abs().to_usize().expect("small partial quotient");
    let g = if a.is_negative() == forward { Generator::T } else { Generator::TInv };
    vec![g; k]
}

/// A word of generators carrying `θ` to `θ'`, when the two continued
/// fractions share a tail.
pub fn classify_lipschitz(theta: &QuadraticIrrational, theta2: &QuadraticIrrational) -> Option<Vec<Generator>> {
    if theta.radicand() != theta2.radicand() {
        return None;
    }
    let (xs, i) = complete_quotients(theta);
    let (ys, _) = complete_quotients(theta2);
    let target = &xs[i].1;
    let k = ys.iter().position(|(_, y)| y == target)?;
    // θ → x_i: subtract a_j, then invert
    let mut word = Vec::new();
    for (a, _) in &xs[..i] {
        word.extend(shift_word(a, true));
        word.push(Generator::R);
    }
    // y_k → θ': invert, then add a_j
    for (a, _) in ys[..k].iter().rev() {
        word.push(Generator::R);
        word.extend(shift_word(a, false));
    }
    Some(reduce(word))
}

/// Cancels adjacent `R R`, `T T^-1` and `T^-1 T`.
fn reduce(word: Vec<Generator>) -> Vec<Generator> {
    let mut out: Vec<Generator> = Vec::with_capacity(word.len());
    for g in word {
        let cancels = matches!(
            (out.last(), g),
            (Some(Generator::R), Generator::R) | (Some(Generator::T), Generator::TInv) | (Some(Generator::TInv), Generator::T)
        );
        if cancels {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}
