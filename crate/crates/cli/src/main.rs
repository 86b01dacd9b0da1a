mod cache;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use knotbound::bounds::{kr_report_with, mfw_report_with, BoundsError};
use knotbound::braid::closure_key;
use knotbound::checks::{verify_section_with, Claim};
use knotbound::khovanov::{poincare_polynomial, PlanarDiagram};
use knotbound::seifert::{alexander, determinant_invariant, signature, SeifertError};
use knotbound::{
    braid_to_pd, family_word, reduced_khovanov, AQPolynomial, BigradedRanks, BraidWord, FamilySpec, HomflyEngine,
    KStarLabel,
};

use cache::{Cache, InvariantRecord};

#[derive(Parser)]
#[command(name = "knotbound", version, about = "Knot invariants of braid closures and braid-index bounds")]
struct Cli {
    /// Directory of the invariant cache.
    #[arg(long, global = true, env = "KNOTBOUND_CACHE")]
    cache_dir: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of the closure of a braid word.
    Invariants {
        /// Whitespace-separated letters, `i` for σ_i and `-i` for its inverse.
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        strands: usize,
        #[command(flatten)]
        select: Select,
    },
    /// Words, invariants or bounds of the built-in braid families.
    Family {
        name: FamilyName,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long, value_enum, default_value = "word")]
        emit: Emit,
        #[command(flatten)]
        delta: Delta,
    },
    /// MFW and KR-MFW bounds of a braid word.
    Bounds {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        strands: usize,
        #[command(flatten)]
        delta: Delta,
    },
    /// Recompute the claims registry.
    VerifyPaper {
        #[arg(long, default_value = "all")]
        section: Section,
    },
    /// Inspect or clear the cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
    /// Planar diagram of a braid closure, or reduced Khovanov homology of a PD file.
    Pd {
        #[arg(allow_hyphen_values = true)]
        word: Option<String>,
        #[arg(long)]
        strands: Option<usize>,
        /// PD text with `X a b c d ±` lines.
        #[arg(long, conflicts_with = "word")]
        file: Option<PathBuf>,
    },
}

#[derive(Args, Clone, Copy)]
struct Select {
    #[arg(long)]
    homfly: bool,
    #[arg(long)]
    khovanov: bool,
    #[arg(long)]
    seifert: bool,
    #[arg(long)]
    all: bool,
}

impl Select {
    fn resolve(self) -> (bool, bool, bool) {
        if self.all {
            return (true, true, true);
        }
        if !(self.homfly || self.khovanov || self.seifert) {
            return (true, false, false);
        }
        (self.homfly, self.khovanov, self.seifert)
    }
}

#[derive(Args)]
struct FamilyParams {
    #[arg(long)]
    k: Option<i32>,
    #[arg(long)]
    x: Option<i32>,
    #[arg(long)]
    y: Option<i32>,
    #[arg(long)]
    z: Option<i32>,
    #[arg(long)]
    w: Option<i32>,
    #[arg(long)]
    q: Option<i32>,
    /// Resolution node of K*: +, -, 0, 0-, 00, 0--, 0-0.
    #[arg(long, allow_hyphen_values = true)]
    label: Option<String>,
}

#[derive(Args)]
struct Delta {
    #[arg(long, allow_hyphen_values = true, requires = "delta_plus")]
    delta_minus: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "delta_minus")]
    delta_plus: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    ElrifaiK,
    ElrifaiL,
    Bm,
    Torus2,
    Kstar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Word,
    Invariants,
    Bounds,
}

#[derive(Clone, Copy, ValueEnum)]
enum Section {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    #[value(name = "4")]
    Four,
    All,
}

#[derive(Subcommand)]
enum CacheAction {
    /// Print the cache file location.
    Path,
    /// Print every record.
    List,
    /// Print the record of a word's closure, if any.
    Get {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        strands: usize,
    },
    Clear,
}

/// Error with its exit code: 1 failed claim, 2 usage, 3 precondition.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Self {
        Self { code: 2, message: e.to_string() }
    }

    fn precondition(e: impl std::fmt::Display) -> Self {
        Self { code: 3, message: e.to_string() }
    }
}

type Outcome = Result<(), Failure>;

struct Context {
    json: bool,
    cache: Option<Cache>,
    engine: HomflyEngine,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = cli.cache_dir.as_deref().and_then(|d| match Cache::open(d) {
        Ok(c) => Some(c),
        Err(e) => {
            eprintln!("warning: cache disabled: {e}");
            None
        }
    });
    let ctx = Context { json: cli.json, cache, engine: HomflyEngine::new() };
    let result = match cli.command {
        Command::Invariants { word, strands, select } => parse_word(&word, strands).and_then(|w| invariants(&ctx, &w, select)),
        Command::Family { name, params, emit, delta } => family(&ctx, name, &params, emit, &delta),
        Command::Bounds { word, strands, delta } => parse_word(&word, strands).and_then(|w| bounds(&ctx, &w, &delta)),
        Command::VerifyPaper { section } => verify(&ctx, section),
        Command::Cache { action } => cache_cmd(&ctx, action),
        Command::Pd { word, strands, file } => pd(&ctx, word, strands, file),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn parse_word(text: &str, strands: usize) -> Result<BraidWord, Failure> {
    BraidWord::parse(text, strands).map_err(Failure::usage)
}

fn print_table(rows: &[(&str, String)]) {
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    for (k, v) in rows {
        println!("{k:<width$}  {v}");
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json renders"));
}

fn invariants(ctx: &Context, w: &BraidWord, select: Select) -> Outcome {
    let (want_homfly, want_kh, want_seifert) = select.resolve();
    let key = closure_key(w).to_text();
    let cached = ctx.cache.as_ref().and_then(|c| c.load(&key));
    let mut rec = cached.clone().unwrap_or_else(|| InvariantRecord::new(key.clone(), w.strands(), w.writhe(), w.closure_components()));

    let homfly = want_homfly.then(|| {
        rec.homfly.as_ref().and_then(AQPolynomial::from_json).unwrap_or_else(|| {
            let p = ctx.engine.homfly(w).to_aq();
            rec.homfly = Some(p.to_json());
            p
        })
    });
    // the reduced theory of a link depends on the marked component, so only knots are cached
    let kh = want_kh.then(|| {
        let hit = rec.khovanov.as_ref().filter(|_| w.is_knot()).and_then(BigradedRanks::from_json);
        hit.unwrap_or_else(|| {
            let r = reduced_khovanov(&braid_to_pd(w));
            if w.is_knot() {
                rec.khovanov = Some(r.to_json());
            }
            r
        })
    });
    let mut precondition = None;
    let mut seifert = None;
    if want_seifert {
        let computed = match (rec.signature, rec.determinant) {
            (Some(s), Some(d)) => Ok((s, d)),
            _ => signature(w).and_then(|s| Ok((s, determinant_invariant(w)?))).map(|(s, d)| {
                let d = d.to_i64().expect("determinant fits in i64");
                rec.signature = Some(s);
                rec.determinant = Some(d);
                (s, d)
            }),
        };
        match computed {
            Ok(v) => seifert = Some(v),
            Err(e) => precondition = Some(e),
        }
    }
    let alex = match (want_seifert && precondition.is_none(), w.is_knot()) {
        (true, true) => alexander(w).ok(),
        _ => None,
    };
    if let Some(c) = &ctx.cache {
        if cached.as_ref() != Some(&rec) {
            if let Err(e) = c.store(&rec) {
                eprintln!("warning: cache write failed: {e}");
            }
        }
    }

    if ctx.json {
        let mut out = json!({
            "word": w.to_text(),
            "strands": w.strands(),
            "writhe": w.writhe(),
            "components": w.closure_components(),
            "canonical_key": key,
        });
        let o = out.as_object_mut().expect("object");
        if let Some(p) = &homfly {
            o.insert("homfly".into(), p.to_json());
        }
        if let Some(r) = &kh {
            o.insert("khovanov".into(), r.to_json());
        }
        if let Some((s, d)) = seifert {
            o.insert("signature".into(), s.into());
            o.insert("determinant".into(), d.into());
        }
        if let Some(a) = &alex {
            o.insert("alexander".into(), a.render("t").into());
        }
        print_json(&out);
    } else {
        let mut rows = vec![
            ("word", w.to_text()),
            ("strands", w.strands().to_string()),
            ("writhe", w.writhe().to_string()),
            ("components", w.closure_components().to_string()),
            ("closure key", key),
        ];
        if let Some(p) = &homfly {
            rows.push(("HOMFLYPT", p.to_string()));
        }
        if let Some(r) = &kh {
            rows.push(("Khovanov", poincare_polynomial(r)));
        }
        if let Some((s, d)) = seifert {
            rows.push(("signature", s.to_string()));
            rows.push(("determinant", d.to_string()));
        }
        if let Some(a) = &alex {
            rows.push(("Alexander", a.render("t")));
        }
        print_table(&rows);
    }
    match precondition {
        Some(e @ SeifertError::DisconnectedSurface(_)) | Some(e @ SeifertError::NotAKnot(_)) => Err(Failure::precondition(e)),
        None => Ok(()),
    }
}

fn family_spec(name: FamilyName, p: &FamilyParams) -> Result<FamilySpec, Failure> {
    let need = |v: Option<i32>, flag: &str| v.ok_or_else(|| Failure::usage(format!("--{flag} is required")));
    Ok(match name {
        FamilyName::ElrifaiK => FamilySpec::ElrifaiK(need(p.k, "k")?),
        FamilyName::ElrifaiL => FamilySpec::ElrifaiL(need(p.k, "k")?),
        FamilyName::Bm => FamilySpec::BM(need(p.x, "x")?, need(p.y, "y")?, need(p.z, "z")?, need(p.w, "w")?),
        FamilyName::Torus2 => FamilySpec::Torus2(need(p.q, "q")?),
        FamilyName::Kstar => {
            let label = p.label.as_deref().unwrap_or("+");
            FamilySpec::KStarResolution(label.parse::<KStarLabel>().map_err(Failure::usage)?)
        }
    })
}

fn family(ctx: &Context, name: FamilyName, p: &FamilyParams, emit: Emit, delta: &Delta) -> Outcome {
    let spec = family_spec(name, p)?;
    let w = family_word(spec).map_err(Failure::usage)?;
    match emit {
        Emit::Word if ctx.json => {
            print_json(&json!({ "family": spec.to_string(), "strands": w.strands(), "word": w.to_text() }));
            Ok(())
        }
        Emit::Word => {
            println!("{}", w.to_text());
            Ok(())
        }
        Emit::Invariants => invariants(ctx, &w, Select { homfly: false, khovanov: false, seifert: false, all: true }),
        Emit::Bounds => bounds(ctx, &w, delta),
    }
}

fn bounds(ctx: &Context, w: &BraidWord, delta: &Delta) -> Outcome {
    let report = match (delta.delta_minus, delta.delta_plus) {
        (Some(a), Some(b)) => kr_report_with(&ctx.engine, w, a, b),
        _ => mfw_report_with(&ctx.engine, w),
    };
    let report = report.map_err(|e: BoundsError| Failure::precondition(e))?;
    if ctx.json {
        print_json(&report.to_json());
    } else {
        println!("{report}");
    }
    Ok(())
}

fn verify(ctx: &Context, section: Section) -> Outcome {
    let sections: Vec<u8> = match section {
        Section::One => vec![1],
        Section::Two => vec![2],
        Section::Three => vec![3],
        Section::Four => vec![4],
        Section::All => vec![1, 2, 3, 4],
    };
    let claims: Vec<Claim> = sections.iter().flat_map(|&s| verify_section_with(&ctx.engine, s)).collect();
    let failed = claims.iter().filter(|c| !c.passed).count();
    if ctx.json {
        print_json(&json!({ "claims": claims, "passed": claims.len() - failed, "failed": failed }));
    } else {
        for c in &claims {
            println!("{}", c.line());
        }
        println!("{} of {} claims pass", claims.len() - failed, claims.len());
    }
    if failed > 0 {
        return Err(Failure { code: 1, message: format!("{failed} claim(s) failed") });
    }
    Ok(())
}

fn cache_cmd(ctx: &Context, action: CacheAction) -> Outcome {
    let cache = ctx.cache.as_ref().ok_or_else(|| Failure::precondition("no cache configured: pass --cache-dir or set KNOTBOUND_CACHE"))?;
    match action {
        CacheAction::Path => println!("{}", cache.path().display()),
        CacheAction::List => {
            for r in cache.records() {
                println!("{}", serde_json::to_string(&r).expect("record serializes"));
            }
        }
        CacheAction::Get { word, strands } => {
            let w = parse_word(&word, strands)?;
            match cache.load(&closure_key(&w).to_text()) {
                Some(r) => print_json(&serde_json::to_value(&r).expect("record serializes")),
                None => return Err(Failure { code: 1, message: "cache miss".into() }),
            }
        }
        CacheAction::Clear => cache.clear().map_err(Failure::precondition)?,
    }
    Ok(())
}

fn pd(ctx: &Context, word: Option<String>, strands: Option<usize>, file: Option<PathBuf>) -> Outcome {
    if let Some(path) = file {
        let text = std::fs::read_to_string(&path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        let diagram = PlanarDiagram::parse(&text).map_err(Failure::usage)?;
        let kh = reduced_khovanov(&diagram);
        if ctx.json {
            print_json(&json!({ "crossings": diagram.crossings.len(), "khovanov": kh.to_json() }));
        } else {
            print_table(&[("crossings", diagram.crossings.len().to_string()), ("Khovanov", poincare_polynomial(&kh))]);
        }
        return Ok(());
    }
    let word = word.ok_or_else(|| Failure::usage("pass a braid word or --file"))?;
    let strands = strands.ok_or_else(|| Failure::usage("--strands is required with a word"))?;
    let diagram = braid_to_pd(&parse_word(&word, strands)?);
    if ctx.json {
        print_json(&serde_json::to_value(&diagram).expect("diagram serializes"));
    } else {
        println!("{diagram}");
    }
    Ok(())
}
