//! Command-line front end: theorem verification reports, Galois-point
//! enumeration, the subgroup-pair search, and small inspection utilities.
//!
//! Exit codes: 0 all checks passed; 1 a claim verified false; 2 invalid
//! parameters; 3 some claim undecided; 4 refused up front by the point
//! budget; 5 a search was truncated by its budget.

use clap::{Args, Parser, Subcommand, ValueEnum};
use galois_points::curve::{ramification_profile, CurveLabel, CurveMap, P2Point};
use galois_points::galois::{
    enumerate_galois_points, problem_pair_search_bounded, theorem_report, CurveSpec, Decision,
    EnumOptions, GaloisError, PointKind, VerifyOptions, DEFAULT_LADDER,
};
use galois_points::gf::FieldCtx;
use galois_points::pgl2::deck_group;
use galois_points::polyrat::P1Point;
use galois_points::report::Report;
use std::collections::BTreeMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "galois-points",
    about = "Exact verification of Galois points on four families of plane rational curves"
)]
struct Cli {
    /// Number of worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Zero out timing fields so output is byte-stable across runs.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Wall-clock budget; work crossing it stops early with the truncation
    /// flag set (exit code 5).
    #[arg(long, global = true)]
    budget_seconds: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Inner,
    Outer,
}

#[derive(Args)]
struct FieldArgs {
    /// Base field order, as a prime power: `5`, `9`, or `3^2`.
    #[arg(long)]
    q: String,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full checklist for one theorem (1..=4).
    Verify {
        #[arg(long)]
        theorem: u32,
        #[command(flatten)]
        field: FieldArgs,
        /// Curve parameter, as a canonical F_q element index. When omitted,
        /// parametrized curves are checked for every admissible value.
        #[arg(long)]
        gamma: Option<u64>,
        /// Skip the desk-scale "exactly two" enumeration claims.
        #[arg(long)]
        no_enumeration: bool,
        /// Deck-search extension ladder.
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_LADDER)]
        ladder: Vec<u32>,
        #[arg(long, default_value_t = 100_000)]
        budget_points: usize,
    },
    /// Scan rational candidate points of one kind and report a verdict each.
    Enumerate {
        #[arg(long)]
        curve: CurveLabel,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        gamma: Option<u64>,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Scan candidates rational over F_(q^ext).
        #[arg(long, default_value_t = 1)]
        ext: u32,
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_LADDER)]
        ladder: Vec<u32>,
        #[arg(long, default_value_t = 100_000)]
        budget_points: usize,
    },
    /// Search PGL(2, F_q) for pairs of subgroups sharing the two-Galois-point
    /// configuration.
    SearchPairs {
        #[command(flatten)]
        field: FieldArgs,
        /// Largest subgroup order generated during the search.
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        /// Maximum number of (group pair, point pair) combinations examined.
        #[arg(long, default_value_t = 200_000)]
        budget_pairs: usize,
    },
    /// One-off views of a single curve.
    Inspect {
        #[command(subcommand)]
        what: Inspect,
    },
    /// Describe a field tower F_p ⊂ F_q ⊂ F_(q^m).
    FieldInfo {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 1)]
        ext: u32,
    },
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long)]
    curve: CurveLabel,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    gamma: Option<u64>,
    /// Work over the degree-`ext` extension of the base field.
    #[arg(long, default_value_t = 1)]
    ext: u32,
}

#[derive(Subcommand)]
enum Inspect {
    /// Flex points located by the parametric Hessian.
    Flexes(CurveArgs),
    /// Ramification of the projection from a point (default: the image of
    /// (1:0)).
    Ram {
        #[command(flatten)]
        curve: CurveArgs,
        /// Projection center as canonical element indices `x:y:z`.
        #[arg(long)]
        point: Option<String>,
    },
    /// Deck group of the projection from a point.
    Deck {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        point: Option<String>,
        /// Extension over which deck transformations are searched.
        #[arg(long, default_value_t = 2)]
        deck_ext: u32,
    },
    /// The projection from a point as a reduced rational map.
    Project {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        point: String,
    },
    /// Multiplicity of the curve at a point.
    Multiplicity {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        point: String,
    },
}

fn parse_q(s: &str) -> Result<(u64, u32), String> {
    let (p, n) = if let Some((base, exp)) = s.split_once('^') {
        let p: u64 = base.trim().parse().map_err(|_| format!("bad prime: {base}"))?;
        let n: u32 = exp.trim().parse().map_err(|_| format!("bad exponent: {exp}"))?;
        (p, n)
    } else {
        let q: u64 = s.trim().parse().map_err(|_| format!("bad field order: {s}"))?;
        if q < 2 {
            return Err(format!("bad field order: {q}"));
        }
        let p = (2..=q).find(|d| q % d == 0).expect("q >= 2 has a divisor");
        let mut n = 0;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            n += 1;
        }
        if rest != 1 {
            return Err(format!("{q} is not a prime power"));
        }
        (p, n)
    };
    if p < 3 || (3..p).any(|d| p % d == 0) || p % 2 == 0 {
        return Err(format!("{p} is not an odd prime"));
    }
    Ok((p, n))
}

fn parse_point(ctx: &FieldCtx, s: &str) -> Result<P2Point, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected x:y:z, got {s}"));
    }
    let mut coords = [ctx.zero(); 3];
    for (slot, part) in coords.iter_mut().zip(&parts) {
        let idx: u64 = part.trim().parse().map_err(|_| format!("bad index: {part}"))?;
        if idx >= ctx.size() {
            return Err(format!("index {idx} outside the field (size {})", ctx.size()));
        }
        *slot = ctx.elem(idx);
    }
    P2Point::new(ctx, coords[0], coords[1], coords[2]).map_err(|e| e.to_string())
}

fn build_curve(args: &CurveArgs) -> Result<(CurveSpec, FieldCtx, CurveMap), String> {
    let (p, n) = parse_q(&args.field.q)?;
    let spec = CurveSpec { label: args.curve, p, n, gamma: args.gamma };
    let (ctx, curve) = spec.build(args.ext).map_err(|e| e.to_string())?;
    Ok((spec, ctx, curve))
}

fn emit(cli: &Cli, mut report: Report) -> ExitCode {
    if cli.deterministic {
        report.strip_timings();
    }
    let body = match cli.format {
        Format::Text => report.render_text(),
        Format::Json => {
            let mut s = report.render_json();
            s.push('\n');
            s
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &body) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{body}");
    }
    ExitCode::from(u8::try_from(report.exit_code()).expect("small exit code"))
}

fn deadline_from(budget_seconds: Option<u64>) -> Option<std::time::Instant> {
    budget_seconds.map(|s| std::time::Instant::now() + std::time::Duration::from_secs(s))
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn error_code(e: &GaloisError) -> u8 {
    match e {
        GaloisError::BudgetRefused { .. } => 4,
        _ => 2,
    }
}

fn run(cli: &Cli) -> ExitCode {
    match &cli.command {
        Command::Verify {
            theorem,
            field,
            gamma,
            no_enumeration,
            ladder,
            budget_points,
        } => {
            let (p, n) = match parse_q(&field.q) {
                Ok(pn) => pn,
                Err(e) => return fail(2, e),
            };
            let opts = VerifyOptions {
                enumeration: !no_enumeration,
                ladder: ladder.clone(),
                budget_points: *budget_points,
                deadline: deadline_from(cli.budget_seconds),
                ..VerifyOptions::default()
            };
            match theorem_report(*theorem, p, n, *gamma, &opts) {
                Ok(report) => emit(cli, report),
                Err(e) => fail(error_code(&e), e),
            }
        }
        Command::Enumerate {
            curve,
            field,
            gamma,
            kind,
            ext,
            ladder,
            budget_points,
        } => {
            let (p, n) = match parse_q(&field.q) {
                Ok(pn) => pn,
                Err(e) => return fail(2, e),
            };
            let spec = CurveSpec { label: *curve, p, n, gamma: *gamma };
            let kind = match kind {
                KindArg::Inner => PointKind::Inner,
                KindArg::Outer => PointKind::Outer,
            };
            let opts = EnumOptions {
                scan_ext: *ext,
                ladder: ladder.clone(),
                budget_points: *budget_points,
                deadline: deadline_from(cli.budget_seconds),
            };
            let outcome = match enumerate_galois_points(&spec, kind, &opts) {
                Ok(v) => v,
                Err(e) => return fail(error_code(&e), e),
            };
            let verdicts = outcome.verdicts;
            let ctx = match FieldCtx::new(p, n, *ext) {
                Ok(c) => c,
                Err(e) => return fail(2, e),
            };
            let mut config = BTreeMap::new();
            config.insert("curve".into(), curve.to_string());
            config.insert("q".into(), ctx.q().to_string());
            config.insert("ext".into(), ext.to_string());
            config.insert("kind".into(), kind.to_string());
            let mut report = Report::new(config);
            for v in &verdicts {
                let id = format!("point.{}", v.point.display(&ctx));
                let statement = format!("{} candidate verdict", kind);
                match v.decision {
                    Decision::Undecided => report.undecided(&id, &statement, v.display(&ctx)),
                    _ => report.pass(&id, &statement, v.display(&ctx)),
                }
            }
            let galois = verdicts.iter().filter(|v| v.is_galois()).count();
            report.pass(
                "enumerate.count",
                "number of Galois points among the scanned candidates",
                format!("{galois} of {}", verdicts.len()),
            );
            if outcome.truncated {
                report.mark_truncated();
            }
            emit(cli, report)
        }
        Command::SearchPairs { field, max_order, budget_pairs } => {
            let (p, n) = match parse_q(&field.q) {
                Ok(pn) => pn,
                Err(e) => return fail(2, e),
            };
            let ctx = match FieldCtx::new(p, n, 1) {
                Ok(c) => c,
                Err(e) => return fail(2, e),
            };
            let outcome = match problem_pair_search_bounded(
                &ctx,
                *max_order,
                *budget_pairs,
                deadline_from(cli.budget_seconds),
            ) {
                Ok(o) => o,
                Err(e) => return fail(error_code(&e), e),
            };
            let mut config = BTreeMap::new();
            config.insert("q".into(), ctx.q().to_string());
            config.insert("max_order".into(), max_order.to_string());
            config.insert("subgroups".into(), outcome.subgroups_considered.to_string());
            config.insert("pairs_scanned".into(), outcome.pairs_scanned.to_string());
            let mut report = Report::new(config);
            for (i, cert) in outcome.certificates.iter().enumerate() {
                report.pass(
                    &format!("pair.{i}"),
                    "subgroup pair satisfying both conditions",
                    match cli.format {
                        Format::Text => cert.display(),
                        Format::Json => cert.to_json().to_string(),
                    },
                );
            }
            report.pass(
                "search.count",
                "number of passing certificates",
                outcome.certificates.len().to_string(),
            );
            if outcome.truncated {
                report.mark_truncated();
            }
            emit(cli, report)
        }
        Command::Inspect { what } => run_inspect(cli, what),
        Command::FieldInfo { field, ext } => {
            let (p, n) = match parse_q(&field.q) {
                Ok(pn) => pn,
                Err(e) => return fail(2, e),
            };
            let ctx = match FieldCtx::new(p, n, *ext) {
                Ok(c) => c,
                Err(e) => return fail(2, e),
            };
            let mut config = BTreeMap::new();
            config.insert("p".into(), p.to_string());
            config.insert("n".into(), n.to_string());
            config.insert("m".into(), ext.to_string());
            config.insert("q".into(), ctx.q().to_string());
            config.insert("size".into(), ctx.size().to_string());
            let mut report = Report::new(config);
            report.pass(
                "field.modulus",
                "coefficients of the lex-first irreducible modulus of F_q over F_p",
                format!("{:?}", ctx.subfield_modulus()),
            );
            let alpha = ctx.primitive_subfield_element();
            report.pass(
                "field.primitive",
                "deterministic primitive element of F_q",
                format!(
                    "{} (order {})",
                    ctx.display(alpha),
                    ctx.multiplicative_order(alpha).expect("nonzero")
                ),
            );
            emit(cli, report)
        }
    }
}

fn run_inspect(cli: &Cli, what: &Inspect) -> ExitCode {
    let args = match what {
        Inspect::Flexes(c) => c,
        Inspect::Ram { curve, .. }
        | Inspect::Deck { curve, .. }
        | Inspect::Project { curve, .. }
        | Inspect::Multiplicity { curve, .. } => curve,
    };
    let (_, ctx, curve) = match build_curve(args) {
        Ok(t) => t,
        Err(e) => return fail(2, e),
    };
    let mut config = BTreeMap::new();
    config.insert("curve".into(), args.curve.to_string());
    config.insert("q".into(), ctx.q().to_string());
    config.insert("ext".into(), args.ext.to_string());
    let mut report = Report::new(config);
    let center = |spec: &Option<String>| -> Result<P2Point, String> {
        match spec {
            Some(s) => parse_point(&ctx, s),
            None => curve
                .evaluate(&P1Point::infinity(&ctx))
                .map_err(|e| e.to_string()),
        }
    };
    let outcome: Result<(), String> = (|| {
        match what {
            Inspect::Flexes(_) => {
                let flexes = curve.hessian_flexes(args.ext).map_err(|e| e.to_string())?;
                for (src, img) in &flexes {
                    report.pass(
                        &format!("flex.{}", src.display(&ctx)),
                        "flex located by the parametric Hessian",
                        format!("image {}", img.display(&ctx)),
                    );
                }
                report.pass("flex.count", "number of flexes", flexes.len().to_string());
            }
            Inspect::Ram { point, .. } => {
                let r = center(point)?;
                let f = curve.project(&r).map_err(|e| e.to_string())?;
                let profile = ramification_profile(&f, args.ext).map_err(|e| e.to_string())?;
                report.pass(
                    "ram.center",
                    "projection center and degree",
                    format!("{} degree {}", r.display(&ctx), f.degree()),
                );
                for (p, e) in profile {
                    report.pass(
                        &format!("ram.{}", p.display(&ctx)),
                        "ramification point with its index",
                        e.to_string(),
                    );
                }
            }
            Inspect::Deck { point, deck_ext, .. } => {
                let r = center(point)?;
                let (dctx, dcurve) = CurveSpec {
                    label: args.curve,
                    p: ctx.p(),
                    n: ctx.n(),
                    gamma: args.gamma,
                }
                .build(*deck_ext)
                .map_err(|e| e.to_string())?;
                let lifted = parse_point(
                    &dctx,
                    &format!(
                        "{}:{}:{}",
                        dctx.embed_subfield(ctx.restrict_subfield(r.x).ok_or("point must be F_q-rational for deck inspection")?).map_err(|e| e.to_string())?.index(),
                        dctx.embed_subfield(ctx.restrict_subfield(r.y).ok_or("point must be F_q-rational for deck inspection")?).map_err(|e| e.to_string())?.index(),
                        dctx.embed_subfield(ctx.restrict_subfield(r.z).ok_or("point must be F_q-rational for deck inspection")?).map_err(|e| e.to_string())?.index(),
                    ),
                )?;
                let f = dcurve.project(&lifted).map_err(|e| e.to_string())?;
                let deck = deck_group(&f, f.degree()).map_err(|e| e.to_string())?;
                report.pass(
                    "deck.group",
                    "deck group of the projection",
                    format!("order {} structure {}", deck.order(), deck.structure()),
                );
                for m in deck.elements() {
                    report.pass(
                        &format!("deck.elem.{}", m.display(&dctx)),
                        "deck transformation",
                        format!("order {}", m.order(&dctx)),
                    );
                }
            }
            Inspect::Project { point, .. } => {
                let r = parse_point(&ctx, point)?;
                let f = curve.project(&r).map_err(|e| e.to_string())?;
                report.pass(
                    "project.map",
                    "reduced projection map",
                    format!("degree {}: {}", f.degree(), f.display()),
                );
            }
            Inspect::Multiplicity { point, .. } => {
                let r = parse_point(&ctx, point)?;
                let m = curve.multiplicity_at(&r).map_err(|e| e.to_string())?;
                report.pass(
                    "multiplicity",
                    "multiplicity of the curve at the point",
                    m.to_string(),
                );
            }
        }
        Ok(())
    })();
    match outcome {
        Ok(()) => emit(cli, report),
        Err(e) => fail(2, e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
        {
            return fail(2, e);
        }
    }
    run(&cli)
}
