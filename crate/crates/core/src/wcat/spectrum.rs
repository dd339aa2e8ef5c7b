use super::{FiniteWeightedCategory, WFunctor, WNatTrans};
use crate::error::{Error, Result};
use crate::weight::ExtWeight;

/// Outcome of [`check_future_equivalence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FutureEquivalenceReport {
    pub f_weight: ExtWeight,
    pub g_weight: ExtWeight,
    pub phi_weight: ExtWeight,
    pub psi_weight: ExtWeight,
    pub violations: Vec<String>,
}

impl FutureEquivalenceReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Valid with both functors and both units 1-Lipschitz.
    pub fn is_elementary(&self) -> bool {
        let one = ExtWeight::one();
        self.is_valid()
            && [&self.f_weight, &self.g_weight, &self.phi_weight, &self.psi_weight].iter().all(|w| **w <= one)
    }
}

/// Checks `f: C ⇄ D :g` with units `φ: 1 → gf`, `ψ: 1 → fg` for naturality,
/// finite weights and the coherence laws `fφ = ψf`, `φg = gψ`.
pub fn check_future_equivalence(
    c: &FiniteWeightedCategory,
    d: &FiniteWeightedCategory,
    f: &WFunctor,
    g: &WFunctor,
    phi: &WNatTrans,
    psi: &WNatTrans,
) -> FutureEquivalenceReport {
    let mut violations = Vec::new();
    let mut note = |r: Result<()>, what: &str| {
        if let Err(e) = r {
            violations.push(format!("{what}: {e}"));
        }
    };
    note(f.validate(c, d), "f");
    note(g.validate(d, c), "g");
    let functors_ok = violations.is_empty();
    let (f_weight, g_weight) = if functors_ok {
        (f.lipschitz_weight(c, d), g.lipschitz_weight(d, c))
    } else {
        (ExtWeight::Infinite, ExtWeight::Infinite)
    };
    let mut phi_weight = ExtWeight::Infinite;
    let mut psi_weight = ExtWeight::Infinite;
    if functors_ok {
        let gf = f.then(g);
        let fg = g.then(f);
        let phi_ok = phi.validate(c, c, &WFunctor::identity(c), &gf);
        let psi_ok = psi.validate(d, d, &WFunctor::identity(d), &fg);
        let both = phi_ok.is_ok() && psi_ok.is_ok();
        if let Err(e) = phi_ok {
            violations.push(format!("phi: {e}"));
        }
        if let Err(e) = psi_ok {
            violations.push(format!("psi: {e}"));
        }
        if both {
            phi_weight = phi.reduced_weight(c);
            psi_weight = psi.reduced_weight(d);
            for (x, &px) in phi.components.iter().enumerate() {
                if f.morphisms[px] != psi.components[f.objects[x]] {
                    violations.push(format!("coherence f.phi = psi.f fails at `{}`", c.objects[x]));
                }
            }
            for (y, &py) in psi.components.iter().enumerate() {
                if phi.components[g.objects[y]] != g.morphisms[py] {
                    violations.push(format!("coherence phi.g = g.psi fails at `{}`", d.objects[y]));
                }
            }
        }
    }
    for (name, w) in [("f", &f_weight), ("g", &g_weight), ("phi", &phi_weight), ("psi", &psi_weight)] {
        if w.is_infinite() && functors_ok {
            violations.push(format!("{name} has infinite weight"));
        }
    }
    FutureEquivalenceReport { f_weight, g_weight, phi_weight, psi_weight, violations }
}

/// Which future retracts qualify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RetractKind {
    /// Reflector and unit of finite weight.
    Lipschitz,
    /// 1-Lipschitz reflector and unit components of weight at most 1.
    Elementary,
}

/// A future retract: a reflector onto a full subcategory with trivial counit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflector {
    /// Objects of the full subcategory, increasing.
    pub objects: Vec<usize>,
    /// `ip: C → C`, landing in the subcategory and fixing it.
    pub endofunctor: WFunctor,
    /// `η: 1 → ip`; identities on the subcategory.
    pub unit: WNatTrans,
    /// Lipschitz weight of the reflector.
    pub reflector_weight: ExtWeight,
    /// Reduced weight of the unit.
    pub unit_weight: ExtWeight,
}

impl Reflector {
    pub fn is_elementary(&self) -> bool {
        let one = ExtWeight::one();
        self.reflector_weight <= one && self.unit_weight <= one
    }
}

/// Looks for a future retract of the given kind onto the full subcategory on
/// `objects`.
///
/// Every `x` outside the subcategory needs a universal arrow `η_x: x → r(x)`:
/// composition with `η_x` must be a bijection `hom(r(x), z) → hom(x, z)` for
/// every `z` in the subcategory. Among all choices of universal arrows
/// allowed by `kind`, the first one whose induced reflector qualifies is
/// returned. Fails if more than `cap` choices would be tried.
pub fn reflector_onto(c: &FiniteWeightedCategory, objects: &[usize], kind: RetractKind, cap: u64) -> Result<Option<Reflector>> {
    let n = c.objects.len();
    let mut inside = vec![false; n];
    for &x in objects {
        inside[x] = true;
    }
    let one = ExtWeight::one();
    let unit_ok = |w: &ExtWeight| match kind {
        RetractKind::Lipschitz => w.is_finite(),
        RetractKind::Elementary => w <= &one,
    };
    let mut options: Vec<Vec<(usize, usize)>> = Vec::with_capacity(n);
    for x in 0..n {
        if inside[x] {
            options.push(vec![(x, c.identity(x))]);
            continue;
        }
        let mut opts = Vec::new();
        for &r in objects {
            for &eta in c.hom(x, r) {
                if unit_ok(c.weight(eta)) && is_universal(c, objects, x, r, eta) {
                    opts.push((r, eta));
                }
            }
        }
        if opts.is_empty() {
            return Ok(None);
        }
        options.push(opts);
    }
    let total = options.iter().try_fold(1u64, |acc, o| acc.checked_mul(o.len() as u64));
    if total.is_none_or(|t| t > cap) {
        return Err(Error::SizeLimitExceeded { what: "reflector choices", limit: cap });
    }
    let mut idx = vec![0usize; n];
    loop {
        let choice: Vec<(usize, usize)> = idx.iter().zip(&options).map(|(&i, o)| o[i]).collect();
        if let Some(r) = induced_reflector(c, objects, &choice) {
            let qualifies = match kind {
                RetractKind::Lipschitz => r.reflector_weight.is_finite(),
                RetractKind::Elementary => r.is_elementary(),
            };
            if qualifies {
                return Ok(Some(r));
            }
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < options[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn is_universal(c: &FiniteWeightedCategory, objects: &[usize], x: usize, r: usize, eta: usize) -> bool {
    objects.iter().all(|&z| {
        let from_r = c.hom(r, z);
        if from_r.len() != c.hom(x, z).len() {
            return false;
        }
        let mut images: Vec<usize> = from_r.iter().map(|&m| c.then(eta, m)).collect();
        images.sort_unstable();
        images.dedup();
        images.len() == from_r.len()
    })
}

fn induced_reflector(c: &FiniteWeightedCategory, objects: &[usize], choice: &[(usize, usize)]) -> Option<Reflector> {
    let mut morphisms = Vec::with_capacity(c.morphisms.len());
    for (a, m) in c.morphisms.iter().enumerate() {
        let (rx, ex) = choice[m.source];
        let (ry, ey) = choice[m.target];
        let goal = c.then(a, ey);
        morphisms.push(*c.hom(rx, ry).iter().find(|&&k| c.then(ex, k) == goal)?);
    }
    let endofunctor = WFunctor { objects: choice.iter().map(|&(r, _)| r).collect(), morphisms };
    let unit = WNatTrans { components: choice.iter().map(|&(_, e)| e).collect() };
    debug_assert!(endofunctor.validate(c, c).is_ok());
    debug_assert!(unit.validate(c, c, &WFunctor::identity(c), &endofunctor).is_ok());
    let reflector_weight = endofunctor.lipschitz_weight(c, c);
    let unit_weight = unit.reduced_weight(c);
    Some(Reflector { objects: objects.to_vec(), endofunctor, unit, reflector_weight, unit_weight })
}

/// A minimum-cardinality future retract.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub objects: Vec<usize>,
    pub labels: Vec<String>,
    /// Another subset of the same size also qualifies.
    pub multiple: bool,
    pub reflector: Reflector,
}

/// Object subsets of `0..n` of size `k` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The future spectrum: the lexicographically first among the smallest object
/// subsets admitting a Lipschitz future retract.
pub fn future_spectrum(c: &FiniteWeightedCategory, cap: u64) -> Result<Spectrum> {
    future_spectrum_with(c, RetractKind::Lipschitz, cap)
}

/// As [`future_spectrum`], for the given kind of retract.
pub fn future_spectrum_with(c: &FiniteWeightedCategory, kind: RetractKind, cap: u64) -> Result<Spectrum> {
    let n = c.objects.len();
    for k in 1..=n {
        let mut found: Option<Spectrum> = None;
        for s in subsets(n, k) {
            if let Some(reflector) = reflector_onto(c, &s, kind, cap)? {
                match &mut found {
                    Some(sp) => {
                        sp.multiple = true;
                        break;
                    }
                    None => {
                        let labels = s.iter().map(|&x| c.objects[x].clone()).collect();
                        found = Some(Spectrum { objects: s, labels, multiple: false, reflector });
                    }
                }
            }
        }
        if let Some(sp) = found {
            return Ok(sp);
        }
    }
    Err(Error::NoRetractFound)
}

/// The past spectrum, computed as the future spectrum of the opposite category.
/// The reflector data is expressed in the opposite category.
pub fn past_spectrum(c: &FiniteWeightedCategory, cap: u64) -> Result<Spectrum> {
    future_spectrum(&c.opposite(), cap)
}

/// As [`past_spectrum`], for the given kind of retract.
pub fn past_spectrum_with(c: &FiniteWeightedCategory, kind: RetractKind, cap: u64) -> Result<Spectrum> {
    future_spectrum_with(&c.opposite(), kind, cap)
}
