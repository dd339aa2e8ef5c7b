//! `wtopo`: batch front end for the wtopo library.
//!
//! Reads JSON descriptions, runs one operation, and prints a table or JSON.
//! Exit status is 2 for unreadable or invalid input and 1 when a size cap is hit.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use wtopo::dmetric::{self, FiniteDeltaSpace, PointRelation};
use wtopo::fundcat::{self, Cover, HoledPlane};
use wtopo::json::{Json, PathDescription};
use wtopo::rotation::{self, QuadraticIrrational};
use wtopo::wcat::{self, FiniteWeightedCategory, RetractKind};
use wtopo::weight::{parse_rational, Rational};
use wtopo::wspace::{self, ChainWSpace};
use wtopo::{Error, ParseError};

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "wtopo", version, about = "Exact computations for weighted directed topology")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Size cap for enumerations (maps, paths, walks, functors).
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Seed for randomly generated inputs.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Height bound for rotation enumerations.
    #[arg(long, default_value_t = 10, global = true)]
    height: i64,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Parse and validate a description of any supported kind.
    Validate { file: PathBuf },
    /// Operations on finite δ-metric spaces.
    DmetricOp {
        #[arg(value_enum)]
        op: DmetricOp,
        files: Vec<PathBuf>,
        /// Scale factor for `scale`.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Span, length and Lipschitz weight of a path, or path operations.
    PathsOp {
        #[arg(value_enum)]
        op: PathsOp,
        files: Vec<PathBuf>,
    },
    /// The weighted fundamental category of a holed plane.
    Fundcat { file: PathBuf },
    /// Future and past spectra of a weighted category or holed plane.
    Spectrum {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Lipschitz)]
        kind: Kind,
    },
    /// Operations on chain w-spaces.
    WspaceOp {
        #[arg(value_enum)]
        op: WspaceOp,
        files: Vec<PathBuf>,
        /// Longest walk compared in `classify` and `galois`.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Isometric and Lipschitz classification of two rotation w-spaces.
    RotationClassify { first: PathBuf, second: PathBuf },
    /// Elements of the fundamental monoid of a rotation w-space.
    RotationMonoid {
        file: PathBuf,
        /// Number of elements to list.
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// List all elements up to this weight instead.
        #[arg(long)]
        weight_cap: Option<String>,
    },
    /// Compares a pushout of fundamental categories with the whole plane.
    Vankampen {
        /// Plane description; a random plane is generated from `--seed` if absent.
        file: Option<PathBuf>,
        /// Vertical strip `c1,c2` shared by the two pieces.
        #[arg(long)]
        cut: Option<String>,
        /// Cover description with `first` and `second` rectangle lists.
        #[arg(long)]
        cover: Option<PathBuf>,
        /// Number of holes of a random plane.
        #[arg(long, default_value_t = 1)]
        holes: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DmetricOp {
    Show,
    Product,
    Tensor,
    Sum,
    Quotient,
    Symmetrize,
    Opposite,
    Scale,
    Hom,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PathsOp {
    Weights,
    Concat,
    Reflect,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Lipschitz,
    Elementary,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum WspaceOp {
    Show,
    Delta,
    Linearize,
    Classify,
    Galois,
    /// Geodesy of a δ-metric space with an `admissible` edge list.
    Geodesy,
    Product,
    Tensor,
    Sum,
    Quotient,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            match cli.format {
                Format::Table => print!("{}", r.table),
                Format::Json => println!("{}", serde_json::to_string_pretty(&r.json).expect("serializable")),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SizeLimitExceeded { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read_value(path: &Path) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ParseError::field(path.display().to_string(), e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| ParseError::Json(format!("{}: {e}", path.display())).into())
}

fn read<T: Json>(path: &Path) -> Result<T, Error> {
    T::from_json(&read_value(path)?)
}

fn args<const N: usize>(files: &[PathBuf], what: &str) -> Result<[PathBuf; N], Error> {
    files
        .to_vec()
        .try_into()
        .map_err(|_| ParseError::field("files", format!("{what} takes {N} input file(s)")).into())
}

fn rational_arg(name: &str, s: &str) -> Result<Rational, Error> {
    parse_rational(s).map_err(|e| ParseError::field(name, e.to_string()).into())
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.verb {
        Verb::Validate { file } => validate(&read_value(file)?),
        Verb::DmetricOp { op, files, lambda } => dmetric_op(*op, files, lambda.as_deref(), cli.cap.unwrap_or(dmetric::DEFAULT_HOM_CAP)),
        Verb::PathsOp { op, files } => paths_op(*op, files),
        Verb::Fundcat { file } => {
            let plane: HoledPlane = read(file)?;
            let fc = fundcat::fundamental_category(&plane, cli.cap.unwrap_or(fundcat::DEFAULT_PATH_CAP))?;
            Ok(report::fundamental_category(&fc))
        }
        Verb::Spectrum { file, kind } => {
            let c = category_or_plane(&read_value(file)?, cli.cap.unwrap_or(fundcat::DEFAULT_PATH_CAP))?;
            let kind = match kind {
                Kind::Lipschitz => RetractKind::Lipschitz,
                Kind::Elementary => RetractKind::Elementary,
            };
            let cap = cli.cap.unwrap_or(dmetric::DEFAULT_HOM_CAP);
            let future = wcat::future_spectrum_with(&c, kind, cap)?;
            let past = wcat::past_spectrum_with(&c, kind, cap)?;
            Ok(report::spectra(&future, &past))
        }
        Verb::WspaceOp { op, files, max_len } => wspace_op(*op, files, *max_len, cli.cap.unwrap_or(wspace::DEFAULT_WALK_CAP)),
        Verb::RotationClassify { first, second } => {
            let a: QuadraticIrrational = read(first)?;
            let b: QuadraticIrrational = read(second)?;
            Ok(report::rotation_classification(&a, &b, rotation::classify_isometric(&a, &b), rotation::classify_lipschitz(&a, &b)))
        }
        Verb::RotationMonoid { file, count, weight_cap } => {
            let theta: QuadraticIrrational = read(file)?;
            let monoid = match weight_cap {
                Some(w) => rotation::fundamental_monoid(&theta, &rational_arg("weight-cap", w)?, cli.height),
                None => {
                    let elements = rotation::enumerate_g_plus(&theta, *count, cli.height);
                    let weights = elements.iter().map(|e| e.value(&theta)).collect();
                    rotation::RotationMonoid { theta: theta.clone(), elements, weights }
                }
            };
            Ok(report::rotation_monoid(&monoid, cli.height))
        }
        Verb::Vankampen { file, cut, cover, holes } => {
            let cap = cli.cap.unwrap_or(fundcat::DEFAULT_PATH_CAP);
            let (plane, random_cover) = match file {
                Some(f) => (read::<HoledPlane>(f)?, None),
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    let (p, c) = fundcat::random_cut_plane(&mut rng, *holes);
                    (p, Some(c))
                }
            };
            let cover = match (cut, cover) {
                (Some(s), _) => {
                    let parts: Vec<&str> = s.split(',').collect();
                    if parts.len() != 2 {
                        return Err(ParseError::field("cut", "expected c1,c2").into());
                    }
                    Cover::vertical_cut(&plane, rational_arg("cut", parts[0])?, rational_arg("cut", parts[1])?)?
                }
                (None, Some(f)) => read(f)?,
                (None, None) => random_cover.ok_or_else(|| ParseError::field("cover", "give --cut or --cover"))?,
            };
            let r = fundcat::van_kampen_check(&plane, &cover, cap)?;
            Ok(report::van_kampen(&plane, &cover, &r))
        }
    }
}

fn category_or_plane(v: &Value, cap: u64) -> Result<FiniteWeightedCategory, Error> {
    if v.get("bounds").is_some() {
        let plane = HoledPlane::from_json(v)?;
        Ok(fundcat::fundamental_category(&plane, cap)?.category)
    } else {
        FiniteWeightedCategory::from_json(v)
    }
}

fn validate(v: &Value) -> Result<Report, Error> {
    let has = |k: &str| v.get(k).is_some();
    let (kind, summary) = if has("bounds") {
        let p = HoledPlane::from_json(v)?;
        ("plane", format!("{} holes, {} marked points", p.holes().len(), p.marked().len()))
    } else if has("morphisms") {
        let c = FiniteWeightedCategory::from_json(v)?;
        ("category", format!("{} objects, {} morphisms", c.objects().len(), c.morphisms().len()))
    } else if has("weights") {
        let x = ChainWSpace::from_json(v)?;
        ("w-space", format!("{} vertices, {} edges", x.vertices().len(), x.edges().len()))
    } else if has("matrix") {
        let x = FiniteDeltaSpace::from_json(v)?;
        ("delta-space", format!("{} points", x.len()))
    } else if has("model") {
        PathDescription::from_json(v)?;
        ("path", String::new())
    } else if has("theta") || has("d") {
        let t = QuadraticIrrational::from_json(v)?;
        ("quadratic irrational", t.to_string())
    } else if has("pairs") {
        let r = PointRelation::from_json(v)?;
        ("relation", format!("{} pairs", r.pairs.len()))
    } else if has("first") {
        let c = Cover::from_json(v)?;
        ("cover", format!("{} + {} rectangles", c.first.len(), c.second.len()))
    } else {
        return Err(ParseError::field("(root)", "unrecognized description").into());
    };
    let line = if summary.is_empty() { format!("valid {kind}\n") } else { format!("valid {kind}: {summary}\n") };
    Ok(Report { table: line, json: json!({"valid": true, "kind": kind, "summary": summary}) })
}

fn dmetric_op(op: DmetricOp, files: &[PathBuf], lambda: Option<&str>, cap: u64) -> Result<Report, Error> {
    let spaces = || files.iter().map(|f| read::<FiniteDeltaSpace>(f)).collect::<Result<Vec<_>, _>>();
    let out = match op {
        DmetricOp::Show => read(&args::<1>(files, "show")?[0])?,
        DmetricOp::Product => dmetric::product(&spaces()?)?,
        DmetricOp::Tensor => dmetric::tensor(&spaces()?)?,
        DmetricOp::Sum => dmetric::sum(&spaces()?)?,
        DmetricOp::Quotient => {
            let [x, r] = args::<2>(files, "quotient")?;
            dmetric::quotient(&read(&x)?, &read(&r)?)?.0
        }
        DmetricOp::Symmetrize => read::<FiniteDeltaSpace>(&args::<1>(files, "symmetrize")?[0])?.symmetrize(),
        DmetricOp::Opposite => read::<FiniteDeltaSpace>(&args::<1>(files, "opposite")?[0])?.opposite(),
        DmetricOp::Scale => {
            let l = lambda.ok_or_else(|| ParseError::field("lambda", "scale needs --lambda"))?;
            read::<FiniteDeltaSpace>(&args::<1>(files, "scale")?[0])?.scale(&rational_arg("lambda", l)?)?
        }
        DmetricOp::Hom => {
            let [y, z] = args::<2>(files, "hom")?;
            dmetric::internal_hom(&read(&y)?, &read(&z)?, cap)?.space
        }
    };
    Ok(report::delta_space(&out))
}

fn paths_op(op: PathsOp, files: &[PathBuf]) -> Result<Report, Error> {
    let path = match op {
        PathsOp::Weights => read(&args::<1>(files, "weights")?[0])?,
        PathsOp::Reflect => match read(&args::<1>(files, "reflect")?[0])? {
            PathDescription::PL(p) => PathDescription::PL(p.reflect()),
            PathDescription::Chain(c) => PathDescription::Chain(c.reflect()),
        },
        PathsOp::Concat => {
            let [a, b] = args::<2>(files, "concat")?;
            match (read(&a)?, read(&b)?) {
                (PathDescription::PL(p), PathDescription::PL(q)) => PathDescription::PL(p.concatenate(&q)?),
                (PathDescription::Chain(p), PathDescription::Chain(q)) => PathDescription::Chain(p.concatenate(&q)?),
                _ => return Err(ParseError::field("files", "cannot concatenate a chain path with a piecewise-affine path").into()),
            }
        }
    };
    Ok(report::path(&path))
}

fn wspace_op(op: WspaceOp, files: &[PathBuf], max_len: usize, cap: u64) -> Result<Report, Error> {
    let spaces = || files.iter().map(|f| read::<ChainWSpace>(f)).collect::<Result<Vec<_>, _>>();
    let one = |what: &str| -> Result<ChainWSpace, Error> { read(&args::<1>(files, what)?[0]) };
    let binary = |what: &str| -> Result<(ChainWSpace, ChainWSpace), Error> {
        let [a, b] = args::<2>(files, what)?;
        Ok((read(&a)?, read(&b)?))
    };
    match op {
        WspaceOp::Show => Ok(report::wspace(&one("show")?)),
        WspaceOp::Delta => Ok(report::delta_space(&wspace::delta_of(&one("delta")?, cap)?)),
        WspaceOp::Linearize => Ok(report::wspace(&wspace::linearize(&one("linearize")?))),
        WspaceOp::Classify => Ok(report::wspace_flags(&wspace::classify(&one("classify")?, max_len, cap)?)),
        WspaceOp::Galois => Ok(report::galois(&wspace::galois_check(&one("galois")?, max_len, cap)?)),
        WspaceOp::Geodesy => {
            let v = read_value(&args::<1>(files, "geodesy")?[0])?;
            let y = FiniteDeltaSpace::from_json(&v)?;
            let adm = admissible(&v, &y)?;
            Ok(report::geodesy(&wspace::classify_delta(&y, &adm, cap)?, &wspace::galois_check_dual(&y, &adm, cap)?))
        }
        WspaceOp::Product => binary("product").map(|(a, b)| report::wspace(&wspace::wspace_product(&a, &b))),
        WspaceOp::Tensor => binary("tensor").map(|(a, b)| report::wspace(&wspace::wspace_tensor(&a, &b))),
        WspaceOp::Sum => Ok(report::wspace(&wspace::wspace_sum(&spaces()?))),
        WspaceOp::Quotient => {
            let [x, r] = args::<2>(files, "quotient")?;
            Ok(report::wspace(&wspace::wspace_quotient(&read(&x)?, &read(&r)?)?))
        }
    }
}

fn admissible(v: &Value, y: &FiniteDeltaSpace) -> Result<Vec<(usize, usize)>, Error> {
    let field = |i: usize, msg: &str| -> Error { ParseError::field(format!("admissible[{i}]"), msg).into() };
    let list = v
        .get("admissible")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::field("admissible", "expected a list of [from, to] labels"))?;
    list.iter()
        .enumerate()
        .map(|(i, e)| {
            let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| field(i, "expected a pair"))?;
            let end = |x: &Value| -> Result<usize, Error> {
                let s = x.as_str().ok_or_else(|| field(i, "expected a label"))?;
                y.index_of(s).map_err(|_| field(i, &format!("unknown label `{s}`")))
            };
            Ok((end(&pair[0])?, end(&pair[1])?))
        })
        .collect()
}
