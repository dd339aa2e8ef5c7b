//! Table and JSON renderings of results.

use std::fmt::Write;

use serde_json::{json, Value};

use wtopo::dmetric::FiniteDeltaSpace;
use wtopo::fundcat::{Cover, FundamentalCategory, HoledPlane, VanKampenReport};
use wtopo::json::{Json, PathDescription};
use wtopo::rotation::{cf_expansion, Generator, IsometricCertificate, QuadraticIrrational, RotationMonoid};
use wtopo::wcat::{FiniteWeightedCategory, Spectrum};
use wtopo::wspace::{ChainWSpace, DeltaFlags, DualGaloisReport, GaloisReport, WSpaceFlags};
use wtopo::ExtWeight;

pub struct Report {
    pub table: String,
    pub json: Value,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn matrix_table(labels: &[String], cell: impl Fn(usize, usize) -> String) -> String {
    let n = labels.len();
    let mut cells = vec![vec![String::new(); n + 1]; n + 1];
    for i in 0..n {
        cells[0][i + 1] = labels[i].clone();
        cells[i + 1][0] = labels[i].clone();
        for j in 0..n {
            cells[i + 1][j + 1] = cell(i, j);
        }
    }
    let widths: Vec<usize> = (0..=n).map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
    }
    out
}

pub fn delta_space(x: &FiniteDeltaSpace) -> Report {
    let table = matrix_table(x.points(), |i, j| x.dist(i, j).to_string());
    Report { table, json: x.to_json() }
}

pub fn path(p: &PathDescription) -> Report {
    let (span, length, lip) = match p {
        PathDescription::PL(p) => (p.span(), p.length(), Some(p.lipschitz_weight())),
        PathDescription::Chain(c) => (c.span(), c.length(), None),
    };
    let mut table = format!("span: {span}\nlength: {length}\n");
    let mut j = json!({"path": p.to_json(), "span": span.to_string(), "length": length.to_string()});
    if let Some(l) = lip {
        writeln!(table, "lipschitz weight: {l}").unwrap();
        j["lipschitz_weight"] = json!(l.to_string());
    }
    Report { table, json: j }
}

/// Non-identity morphisms that are not composites of two non-identities.
fn generators(c: &FiniteWeightedCategory) -> Vec<usize> {
    let mut composite = vec![false; c.morphisms().len()];
    for (&(a, b), &m) in c.composition_table() {
        if !c.is_identity(a) && !c.is_identity(b) {
            composite[m] = true;
        }
    }
    (0..c.morphisms().len()).filter(|&m| !c.is_identity(m) && !composite[m]).collect()
}

fn weight_summary(ws: &[&ExtWeight]) -> String {
    match ws {
        [] => String::new(),
        [w] => format!("weight {w}"),
        [w, rest @ ..] if rest.iter().all(|x| x == w) => format!("weight {w} each"),
        _ => format!("weights {}", ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")),
    }
}

pub fn fundamental_category(fc: &FundamentalCategory) -> Report {
    let c = &fc.category;
    let objs = c.objects();
    let mut table = format!("objects: {}\n", objs.join(", "));
    let mut homs = Vec::new();
    for x in 0..objs.len() {
        for y in 0..objs.len() {
            let ms: Vec<usize> = c.hom(x, y).iter().copied().filter(|&m| !c.is_identity(m)).collect();
            if ms.is_empty() {
                continue;
            }
            let ws: Vec<&ExtWeight> = ms.iter().map(|&m| c.weight(m)).collect();
            let noun = if ms.len() == 1 { "class" } else { "classes" };
            writeln!(table, "hom({},{}): {} {noun}, {}", objs[x], objs[y], ms.len(), weight_summary(&ws)).unwrap();
            let classes: Vec<Value> = ms
                .iter()
                .map(|&m| json!({"name": c.morphisms()[m].name, "weight": c.weight(m).to_string(), "steps": fc.class(m).steps_string()}))
                .collect();
            homs.push(json!({"source": objs[x], "target": objs[y], "classes": classes}));
        }
    }
    let gens = generators(c);
    let ws: Vec<&ExtWeight> = gens.iter().map(|&m| c.weight(m)).collect();
    match ws.first() {
        Some(w) if ws.iter().all(|x| x == w) => writeln!(table, "generators weight {w} ({} arrows)", gens.len()).unwrap(),
        _ => {
            let list: Vec<String> = gens.iter().map(|&m| format!("{} {}", c.morphisms()[m].name, c.weight(m))).collect();
            writeln!(table, "generators: {}", list.join(", ")).unwrap();
        }
    }
    let mut j = c.to_json();
    j["homs"] = Value::Array(homs);
    j["generators"] = json!(gens.iter().map(|&m| c.morphisms()[m].name.clone()).collect::<Vec<_>>());
    Report { table, json: j }
}

fn spectrum_json(s: &Spectrum) -> Value {
    json!({
        "objects": s.labels,
        "multiple": s.multiple,
        "reflector_weight": s.reflector.reflector_weight.to_string(),
        "unit_weight": s.reflector.unit_weight.to_string(),
    })
}

pub fn spectra(future: &Spectrum, past: &Spectrum) -> Report {
    let table = format!("sp+ = {{{}}}; sp- = {{{}}}\n", future.labels.join(", "), past.labels.join(", "));
    Report { table, json: json!({"future": spectrum_json(future), "past": spectrum_json(past)}) }
}

pub fn wspace(x: &ChainWSpace) -> Report {
    let vs = x.vertices();
    let mut table = format!("vertices: {}\n", vs.join(", "));
    for (k, &(a, b)) in x.edges().iter().enumerate() {
        let w = x.weight(&x.walk_from_edges(&[k]).expect("edge"));
        writeln!(table, "edge {k}: {} -> {}, weight {w}", vs[a], vs[b]).unwrap();
    }
    Report { table, json: x.to_json() }
}

pub fn wspace_flags(f: &WSpaceFlags) -> Report {
    let table = format!(
        "linear: {}; span-metrizable: {}; length-metrizable: {}\n",
        yes(f.linear),
        yes(f.span_metrizable),
        yes(f.length_metrizable)
    );
    let j = json!({"linear": f.linear, "span_metrizable": f.span_metrizable, "length_metrizable": f.length_metrizable});
    Report { table, json: j }
}

pub fn galois(r: &GaloisReport) -> Report {
    let opt = |b: Option<bool>| b.map_or("n/a (not linear)", yes);
    let table = format!(
        "X >= sp(dX): {}\nd(sp dX) = dX: {}\nsp d sp dX = sp dX: {}\nX >= L(dX): {}\nd(L dX) = dX: {}\nL d L dX = L dX: {}\nall hold: {}\n",
        yes(r.unit_sp),
        yes(r.delta_sp_delta),
        yes(r.sp_delta_sp),
        opt(r.unit_l),
        opt(r.delta_l_delta),
        yes(r.l_delta_l),
        yes(r.all_hold())
    );
    let j = json!({
        "unit_sp": r.unit_sp,
        "delta_sp_delta": r.delta_sp_delta,
        "sp_delta_sp": r.sp_delta_sp,
        "unit_l": r.unit_l,
        "delta_l_delta": r.delta_l_delta,
        "l_delta_l": r.l_delta_l,
        "all_hold": r.all_hold(),
    });
    Report { table, json: j }
}

pub fn geodesy(f: &DeltaFlags, r: &DualGaloisReport) -> Report {
    let table = format!(
        "geodetic: {}; linearly geodetic: {}\nGalois laws hold: {}\n",
        yes(f.geodetic),
        yes(f.linearly_geodetic),
        yes(r.all_hold())
    );
    let j = json!({"geodetic": f.geodetic, "linearly_geodetic": f.linearly_geodetic, "galois_laws": r.all_hold()});
    Report { table, json: j }
}

fn cf_string(t: &QuadraticIrrational) -> String {
    let (pre, period) = cf_expansion(t);
    let join = |v: &[num_bigint::BigInt]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ");
    if pre.is_empty() {
        format!("[({})]", join(&period))
    } else {
        format!("[{}; ({})]", join(&pre), join(&period))
    }
}

pub fn rotation_classification(
    a: &QuadraticIrrational,
    b: &QuadraticIrrational,
    iso: Option<IsometricCertificate>,
    lip: Option<Vec<Generator>>,
) -> Report {
    let iso_text = match &iso {
        None => "no".to_string(),
        Some(c) if c.sign > 0 => format!("yes (theta' = theta + {})", c.n),
        Some(c) => format!("yes (theta' = {} - theta)", c.n),
    };
    let lip_text = match &lip {
        None => "no".to_string(),
        Some(w) if w.is_empty() => "yes (word: identity)".to_string(),
        Some(w) => format!("yes (word: {})", w.iter().map(Generator::to_string).collect::<Vec<_>>().join(" ")),
    };
    let table = format!("isometric: {iso_text}; lipschitz: {lip_text}\n");
    let j = json!({
        "theta": a.to_json()["theta"],
        "theta_prime": b.to_json()["theta"],
        "isometric": iso.map(|c| json!({"sign": c.sign, "n": c.n.to_string()})),
        "lipschitz": lip.map(|w| w.to_json()),
    });
    Report { table, json: j }
}

pub fn rotation_monoid(m: &RotationMonoid, height: i64) -> Report {
    let mut table = format!("theta = {} = {}\n", m.theta, cf_string(&m.theta));
    writeln!(table, "elements m + n*theta with |m|, |n| <= {height}, by weight:").unwrap();
    let rows: Vec<[String; 4]> = m
        .elements
        .iter()
        .zip(&m.weights)
        .map(|(e, w)| [e.m.to_string(), e.n.to_string(), w.to_string(), format!("(≈ {:.6})", w.to_f64())])
        .collect();
    let widths: Vec<usize> = (0..4).map(|k| rows.iter().map(|r| r[k].chars().count()).max().unwrap_or(0)).collect();
    for r in &rows {
        writeln!(table, "  {:>w0$}  {:>w1$}  {:<w2$}  {}", r[0], r[1], r[2], r[3], w0 = widths[0], w1 = widths[1], w2 = widths[2]).unwrap();
    }
    let (inj, add) = (m.weight_is_injective(), m.weight_is_additive());
    writeln!(table, "weights injective: {}; additive on listed pairs: {}", yes(inj), yes(add)).unwrap();
    let elements: Vec<Value> = m
        .elements
        .iter()
        .zip(&m.weights)
        .map(|(e, w)| json!({"m": e.m, "n": e.n, "weight": w.to_string()}))
        .collect();
    let j = json!({
        "theta": m.theta.to_json()["theta"],
        "height": height,
        "elements": elements,
        "injective": inj,
        "additive": add,
    });
    Report { table, json: j }
}

fn size(c: &FiniteWeightedCategory) -> String {
    format!("{} objects, {} morphisms", c.objects().len(), c.morphisms().len())
}

pub fn van_kampen(plane: &HoledPlane, cover: &Cover, r: &VanKampenReport) -> Report {
    let rects = |v: &[wtopo::fundcat::Rect]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" u ");
    let mut table = String::new();
    writeln!(table, "L = {}", rects(&cover.first)).unwrap();
    writeln!(table, "L' = {}", rects(&cover.second)).unwrap();
    writeln!(table, "wP1(L): {}", size(&r.first.category)).unwrap();
    writeln!(table, "wP1(L'): {}", size(&r.second.category)).unwrap();
    writeln!(table, "wP1(L n L'): {}", size(&r.intersection.category)).unwrap();
    writeln!(table, "pushout: {}", size(&r.pushout)).unwrap();
    writeln!(table, "wP1(X): {}", size(&r.whole.category)).unwrap();
    writeln!(table, "isometric isomorphism: {}", yes(r.is_isometric_isomorphism())).unwrap();
    let j = json!({
        "plane": plane.to_json(),
        "cover": cover.to_json(),
        "bijective_on_objects": r.bijective_on_objects,
        "bijective_on_morphisms": r.bijective_on_morphisms,
        "weights_preserved": r.weights_preserved,
        "isometric_isomorphism": r.is_isometric_isomorphism(),
    });
    Report { table, json: j }
}
