use std::collections::HashMap;

use super::{FiniteWeightedCategory, Morphism, WFunctor};
use crate::error::{Error, Result};
use crate::weight::ExtWeight;

/// Default bound on the number of words considered by [`pushout_wcat`].
pub const DEFAULT_WORD_CAP: u64 = 200_000;

/// The pushout category with its two injections.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub category: FiniteWeightedCategory,
    pub j1: WFunctor,
    pub j2: WFunctor,
    /// Longest word length needed before the word congruence stabilised.
    pub word_length: usize,
    /// A shortest word for each morphism: `(piece, morphism)` with piece 0 or 1.
    pub words: Vec<Vec<(u8, usize)>>,
}

impl Pushout {
    /// The functor out of the pushout induced by a cocone `k1: C1 → T`,
    /// `k2: C2 → T`, obtained by composing the images of representative words.
    pub fn mediate(&self, k1: &WFunctor, k2: &WFunctor, target: &FiniteWeightedCategory) -> Result<WFunctor> {
        let mut objects = vec![usize::MAX; self.category.objects().len()];
        for (k, j) in [(k1, &self.j1), (k2, &self.j2)] {
            for (x, &px) in j.objects.iter().enumerate() {
                let y = k.objects[x];
                if objects[px] != usize::MAX && objects[px] != y {
                    return Err(Error::NotAFunctor("cocone legs disagree on objects".into()));
                }
                objects[px] = y;
            }
        }
        let morphisms = self
            .words
            .iter()
            .enumerate()
            .map(|(m, w)| {
                let start = target.identity(objects[self.category.morphisms()[m].source]);
                w.iter().fold(start, |acc, &(piece, a)| {
                    let image = if piece == 0 { k1.morphisms[a] } else { k2.morphisms[a] };
                    target.then(acc, image)
                })
            })
            .collect();
        let f = WFunctor { objects, morphisms };
        f.validate(&self.category, target)?;
        Ok(f)
    }
}

/// A letter is a non-identity morphism of one of the two pieces.
type Letter = (u8, usize);

struct Pieces<'a> {
    c: [&'a FiniteWeightedCategory; 2],
    /// Letters identified along `C0`: `(piece, m)` ↦ the images in the other
    /// piece, `None` standing for an identity.
    across: HashMap<Letter, Vec<Option<Letter>>>,
    /// Object maps of the two pieces into the pushout.
    obj: [Vec<usize>; 2],
}

impl Pieces<'_> {
    fn cat(&self, l: Letter) -> &FiniteWeightedCategory {
        self.c[l.0 as usize]
    }

    fn ends(&self, l: Letter) -> (usize, usize) {
        let m = &self.cat(l).morphisms[l.1];
        (self.obj[l.0 as usize][m.source], self.obj[l.0 as usize][m.target])
    }

    fn weight(&self, l: Letter) -> &ExtWeight {
        self.cat(l).weight(l.1)
    }

    fn letter(&self, piece: u8, m: usize) -> Option<Letter> {
        (!self.c[piece as usize].is_identity(m)).then_some((piece, m))
    }

    /// Words related to `word` by one generating relation at position `k`:
    /// composing letters `k` and `k + 1` inside a piece, or moving letter `k`
    /// across `C0`.
    fn neighbours(&self, word: &[Letter], k: usize) -> Vec<Vec<Letter>> {
        let splice = |with: Option<Letter>, len: usize| {
            let mut w = word[..k].to_vec();
            w.extend(with);
            w.extend_from_slice(&word[k + len..]);
            w
        };
        let mut out = Vec::new();
        if let Some(images) = self.across.get(&word[k]) {
            out.extend(images.iter().map(|&l| splice(l, 1)));
        }
        if k + 1 < word.len() && word[k].0 == word[k + 1].0 {
            let piece = word[k].0;
            if let Some(ab) = self.c[piece as usize].try_then(word[k].1, word[k + 1].1) {
                out.push(splice(self.letter(piece, ab), 2));
            }
        }
        out
    }
}

struct Words {
    words: Vec<Vec<Letter>>,
    ends: Vec<(usize, usize)>,
    /// Keyed by start object, since the empty words of different objects differ.
    index: HashMap<(usize, Vec<Letter>), usize>,
    parent: Vec<usize>,
}

impl Words {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn build_words(p: &Pieces, n_objects: usize, letters: &[Letter], max_len: usize, cap: u64) -> Result<Words> {
    let mut from: Vec<Vec<Letter>> = vec![Vec::new(); n_objects];
    for &l in letters {
        from[p.ends(l).0].push(l);
    }
    let mut words: Vec<Vec<Letter>> = Vec::new();
    let mut ends = Vec::new();
    let mut frontier: Vec<usize> = Vec::new();
    for x in 0..n_objects {
        frontier.push(words.len());
        words.push(Vec::new());
        ends.push((x, x));
    }
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &wi in &frontier {
            let (s, t) = ends[wi];
            for &l in &from[t] {
                let mut w = words[wi].clone();
                w.push(l);
                next.push(words.len());
                words.push(w);
                ends.push((s, p.ends(l).1));
                if words.len() as u64 > cap {
                    return Err(Error::SizeLimitExceeded { what: "pushout words", limit: cap });
                }
            }
        }
        frontier = next;
    }
    let index = words.iter().cloned().enumerate().map(|(i, w)| ((ends[i].0, w), i)).collect();
    let parent = (0..words.len()).collect();
    let mut ws = Words { words, ends, index, parent };
    for i in 0..ws.words.len() {
        let w = ws.words[i].clone();
        let start = ws.ends[i].0;
        for k in 0..w.len() {
            for other in p.neighbours(&w, k) {
                if let Some(&j) = ws.index.get(&(start, other)) {
                    ws.union(i, j);
                }
            }
        }
    }
    Ok(ws)
}

fn find_root(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Pushout of `C1 ← C0 → C2` in weighted categories, computed by word
/// saturation.
///
/// Objects are glued along `C0`. Morphisms are classes of composable words of
/// non-identity morphisms of `C1` and `C2`, modulo composition inside either
/// piece and `u1(a) = u2(a)` for morphisms `a` of `C0`. Words of increasing
/// length are considered until every word of length `K + 1` is equivalent to
/// a shorter one and no two classes of shorter words merge. A class is
/// weighted by the least total weight of its words.
pub fn pushout_wcat(
    c0: &FiniteWeightedCategory,
    c1: &FiniteWeightedCategory,
    c2: &FiniteWeightedCategory,
    u1: &WFunctor,
    u2: &WFunctor,
    cap: u64,
) -> Result<Pushout> {
    u1.validate(c0, c1)?;
    u2.validate(c0, c2)?;

    let n1 = c1.objects().len();
    let mut parent: Vec<usize> = (0..n1 + c2.objects().len()).collect();
    for x in 0..c0.objects().len() {
        let (a, b) = (find_root(&mut parent, u1.objects[x]), find_root(&mut parent, n1 + u2.objects[x]));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut objects: Vec<String> = Vec::new();
    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    let mut obj_all = Vec::with_capacity(parent.len());
    for v in 0..parent.len() {
        let r = find_root(&mut parent, v);
        let o = *class_of_root.entry(r).or_insert_with(|| {
            let label = if v < n1 { &c1.objects()[v] } else { &c2.objects()[v - n1] };
            objects.push(if objects.contains(label) { format!("2:{label}") } else { label.clone() });
            objects.len() - 1
        });
        obj_all.push(o);
    }
    let n = objects.len();
    let obj = [obj_all[..n1].to_vec(), obj_all[n1..].to_vec()];

    let mut across: HashMap<Letter, Vec<Option<Letter>>> = HashMap::new();
    let opt = |c: &FiniteWeightedCategory, piece: u8, m: usize| (!c.is_identity(m)).then_some((piece, m));
    for a in 0..c0.morphisms().len() {
        let (l1, l2) = (opt(c1, 0, u1.morphisms[a]), opt(c2, 1, u2.morphisms[a]));
        for (from, to) in [(l1, l2), (l2, l1)] {
            if let Some(f) = from {
                let images = across.entry(f).or_default();
                if !images.contains(&to) {
                    images.push(to);
                }
            }
        }
    }
    let p = Pieces { c: [c1, c2], across, obj };

    let mut letters: Vec<Letter> = Vec::new();
    for (piece, c) in [(0u8, c1), (1u8, c2)] {
        letters.extend((0..c.morphisms().len()).filter_map(|m| p.letter(piece, m)));
    }

    let mut k = 1;
    let mut prev = build_words(&p, n, &letters, k, cap)?;
    let ws = loop {
        let mut next = build_words(&p, n, &letters, k + 1, cap)?;
        let mut short_class = vec![false; next.words.len()];
        for i in 0..next.words.len() {
            if next.words[i].len() <= k {
                let r = next.find(i);
                short_class[r] = true;
            }
        }
        let covered = (0..next.words.len()).all(|i| {
            let r = next.find(i);
            short_class[r]
        });
        let classes = |w: &mut Words, len: usize| {
            let short: Vec<usize> = (0..w.words.len()).filter(|&i| w.words[i].len() <= len).collect();
            let mut roots: Vec<usize> = short.into_iter().map(|i| w.find(i)).collect();
            roots.sort_unstable();
            roots.dedup();
            roots.len()
        };
        if covered && classes(&mut next, k) == classes(&mut prev, k) {
            break next;
        }
        prev = next;
        k += 1;
    };
    let mut ws = ws;

    // classes, numbered by their shortest (then first) word
    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    let mut reps: Vec<usize> = Vec::new();
    let mut weights: Vec<ExtWeight> = Vec::new();
    let mut class = vec![0usize; ws.words.len()];
    for i in 0..ws.words.len() {
        let r = ws.find(i);
        let c = *class_of_root.entry(r).or_insert_with(|| {
            reps.push(i);
            weights.push(ExtWeight::Infinite);
            reps.len() - 1
        });
        class[i] = c;
        let w: ExtWeight = ws.words[i].iter().map(|&l| p.weight(l)).sum();
        if w < weights[c] {
            weights[c] = w;
        }
    }
    let name = |w: &[Letter]| -> String {
        let parts: Vec<&str> = w.iter().map(|&l| p.cat(l).morphisms()[l.1].name.as_str()).collect();
        parts.join(" + ")
    };
    let morphisms: Vec<Morphism> = reps
        .iter()
        .enumerate()
        .map(|(c, &i)| {
            let (s, t) = ws.ends[i];
            let label = if ws.words[i].is_empty() { format!("1_{}", objects[s]) } else { name(&ws.words[i]) };
            Morphism { name: label, source: s, target: t, weight: weights[c].clone() }
        })
        .collect();
    let identities: Vec<usize> = (0..n).map(|x| class[x]).collect();

    let lookup = |ws: &Words, mut w: Vec<Letter>, start: usize| -> usize {
        while w.len() > k + 1 {
            let head = ws.index[&(start, w[..k + 1].to_vec())];
            let mut shorter = ws.words[reps[class[head]]].clone();
            shorter.extend_from_slice(&w[k + 1..]);
            w = shorter;
        }
        if w.is_empty() {
            identities[start]
        } else {
            class[ws.index[&(start, w)]]
        }
    };
    let mut compose = HashMap::new();
    for (a, ma) in morphisms.iter().enumerate() {
        for (b, mb) in morphisms.iter().enumerate() {
            if ma.target != mb.source {
                continue;
            }
            let mut w = ws.words[reps[a]].clone();
            w.extend_from_slice(&ws.words[reps[b]]);
            compose.insert((a, b), lookup(&ws, w, ma.source));
        }
    }
    let category = FiniteWeightedCategory::from_parts(objects, morphisms, identities.clone(), compose)?;

    let inject = |piece: u8, c: &FiniteWeightedCategory| WFunctor {
        objects: p.obj[piece as usize].clone(),
        morphisms: (0..c.morphisms().len())
            .map(|m| {
                match p.letter(piece, m) {
                    None => identities[p.obj[piece as usize][c.morphisms()[m].source]],
                    Some(l) => class[ws.index[&(p.ends(l).0, vec![l])]],
                }
            })
            .collect(),
    };
    let j1 = inject(0, c1);
    let j2 = inject(1, c2);
    let words = reps.iter().map(|&i| ws.words[i].clone()).collect();
    Ok(Pushout { category, j1, j2, word_length: k, words })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dmetric::FiniteDeltaSpace;
    use crate::wcat::{find_isometric_isomorphism, sum_wcat};
    use crate::weight::{int, ExtWeight};

    #[test]
    fn pushout_along_identities() {
        let s = FiniteDeltaSpace::delta_line_sample(&[int(0), int(1), int(3)]);
        let c = FiniteWeightedCategory::from_delta_space(&s);
        let id = WFunctor::identity(&c);
        let po = pushout_wcat(&c, &c, &c, &id, &id, DEFAULT_WORD_CAP).unwrap();
        po.category.validate().unwrap();
        assert!(find_isometric_isomorphism(&po.category, &c, Some(&[0, 1, 2])).is_some());
        po.j1.validate(&c, &po.category).unwrap();
    }

    #[test]
    fn pushout_over_a_point_glues_two_intervals() {
        let a = FiniteDeltaSpace::delta_line_sample(&[int(0), int(1)]);
        let c = FiniteWeightedCategory::from_delta_space(&a);
        let (point, incl_top) = c.full_subcategory(&[1]).unwrap();
        let (_, incl_bottom) = c.full_subcategory(&[0]).unwrap();
        let po = pushout_wcat(&point, &c, &c, &incl_top, &incl_bottom, DEFAULT_WORD_CAP).unwrap();
        po.category.validate().unwrap();
        let line = FiniteDeltaSpace::delta_line_sample(&[int(0), int(1), int(2)]);
        let expected = FiniteWeightedCategory::from_delta_space(&line);
        assert!(find_isometric_isomorphism(&po.category, &expected, Some(&[0, 1, 2])).is_some());
    }

    #[test]
    fn pushout_over_the_empty_category_is_a_sum() {
        let a = FiniteDeltaSpace::delta_line_sample(&[int(0), int(1)]);
        let c = FiniteWeightedCategory::from_delta_space(&a);
        let empty = FiniteWeightedCategory::empty();
        let u = WFunctor { objects: vec![], morphisms: vec![] };
        let po = pushout_wcat(&empty, &c, &c, &u, &u, DEFAULT_WORD_CAP).unwrap();
        po.category.validate().unwrap();
        let expected = sum_wcat(&[c.clone(), c]).unwrap();
        assert!(find_isometric_isomorphism(&po.category, &expected, None).is_some());
    }

    #[test]
    fn gluing_two_arrows_at_both_ends_gives_parallel_arrows() {
        let discrete = FiniteWeightedCategory::from_delta_space(&FiniteDeltaSpace::from_matrix(vec![
            vec![ExtWeight::zero(), ExtWeight::inf()],
            vec![ExtWeight::inf(), ExtWeight::zero()],
        ])
        .unwrap());
        let a = FiniteWeightedCategory::arrow(ExtWeight::from_int(1));
        let b = FiniteWeightedCategory::arrow(ExtWeight::from_int(2));
        let u = WFunctor { objects: vec![0, 1], morphisms: vec![0, 1] };
        let po = pushout_wcat(&discrete, &a, &b, &u, &u, DEFAULT_WORD_CAP).unwrap();
        po.category.validate().unwrap();
        assert_eq!(po.category.objects().len(), 2);
        let mut ws: Vec<ExtWeight> = po.category.hom(0, 1).iter().map(|&m| po.category.weight(m).clone()).collect();
        ws.sort();
        assert_eq!(ws, vec![ExtWeight::from_int(1), ExtWeight::from_int(2)]);
        let id = WFunctor::identity(&a);
        let collapse = WFunctor { objects: vec![0, 1], morphisms: vec![0, 1, 2] };
        let m = po.mediate(&id, &collapse, &a).unwrap();
        assert_eq!(m.objects, vec![0, 1]);
    }
}
