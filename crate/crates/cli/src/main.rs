use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbow_core::constructions::{
    build_no_rainbow_quad_set, build_upper_bound_set, lemma4_gadget, lower_bound_formula, lower_bound_witnesses,
    upper_bound_value, verify_no_empty_rainbow_quad, verify_theorem1_upper,
};
use rainbow_core::enumeration::{
    empty_quadrilaterals, empty_triangles_filtered, Budget, ColorFilter, DEFAULT_BUDGET,
};
use rainbow_core::horton::{empty_triangle_triples, generate_horton, is_horton, visible_edges};
use rainbow_core::io::{point_set_to_string, read_point_set, witnesses_from_json, witnesses_to_json, write_point_set};
use rainbow_core::plot::render_svg;
use rainbow_core::random::random_colored_set;
use rainbow_core::{ColoredPointSet, Error, PolygonWitness};

#[derive(Parser)]
#[command(name = "rainbow", version, about = "Empty rainbow polygons in colored point sets")]
struct Cli {
    /// Cap on elementary predicate calls per enumeration.
    #[arg(long, global = true, env = "RAINBOW_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a point set.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Count empty triangles or quadrilaterals in a point set file.
    Count {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ShapeArg::Triangle)]
        shape: ShapeArg,
        #[arg(long, value_enum, default_value_t = FilterArg::Any)]
        filter: FilterArg,
        /// Write the witness list as JSON to this path ("-" for stdout).
        #[arg(long)]
        witnesses: Option<PathBuf>,
        /// Print a single JSON object instead of key/value lines.
        #[arg(long)]
        json: bool,
    },
    /// Check one of the bounds on a file or a generated set.
    Verify {
        #[command(subcommand)]
        check: Check,
        #[arg(long, global = true)]
        json: bool,
    },
    /// Render a point set as SVG.
    Plot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Witness JSON (as written by `count --witnesses`) to overlay.
        #[arg(long)]
        highlight: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OutArgs {
    /// Output file; `.csv` selects CSV, anything else JSON. Stdout if omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// CSV on stdout.
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand)]
enum GenKind {
    Horton {
        #[arg(long)]
        n: usize,
    },
    Upper {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    Noquad {
        #[arg(long)]
        k: usize,
    },
    Gadget,
    Random {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Side of the integer grid points are drawn from.
        #[arg(long)]
        grid: Option<i64>,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Empty rainbow triangles of a balanced file against the cubic lower bound.
    LowerBound {
        #[arg(long)]
        input: PathBuf,
    },
    /// Builds the blocker construction and checks the sandwich.
    Theorem1Upper {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// Builds the k-colored set and checks it has no empty rainbow quadrilateral.
    Theorem2 {
        #[arg(long)]
        k: usize,
    },
    /// Horton property of a file, or of a generated set with `--n`.
    Horton {
        #[arg(long, conflicts_with = "n")]
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
    },
    VisibleEdges {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Triangle,
    Quad,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    Any,
    Rainbow,
    Mono,
}

impl From<FilterArg> for ColorFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::Any => ColorFilter::Any,
            FilterArg::Rainbow => ColorFilter::Rainbow,
            FilterArg::Mono => ColorFilter::Mono,
        }
    }
}

/// Key/value lines, or one JSON object.
struct Report {
    fields: Vec<(&'static str, serde_json::Value)>,
}

impl Report {
    fn new() -> Self {
        Report { fields: Vec::new() }
    }

    fn add(&mut self, key: &'static str, v: impl Into<serde_json::Value>) -> &mut Self {
        self.fields.push((key, v.into()));
        self
    }

    fn print(&self, json: bool) {
        if json {
            let obj: serde_json::Map<String, serde_json::Value> =
                self.fields.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            println!("{}", serde_json::Value::Object(obj));
            return;
        }
        let mut s = String::new();
        for (k, v) in &self.fields {
            match v {
                serde_json::Value::String(t) => writeln!(s, "{k}: {t}"),
                other => writeln!(s, "{k}: {other}"),
            }
            .unwrap();
        }
        print!("{s}");
    }
}

fn horton_set(n: usize) -> Result<ColoredPointSet> {
    Ok(ColoredPointSet::uncolored(generate_horton(n)?.into_points())?)
}

fn emit(set: &ColoredPointSet, out: &OutArgs) -> Result<()> {
    match &out.out {
        Some(path) => write_point_set(path, set).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{}", point_set_to_string(set, out.csv));
            Ok(())
        }
    }
}

fn read_input(path: &Path) -> Result<ColoredPointSet> {
    read_point_set(path).with_context(|| format!("reading {}", path.display()))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    if path == Path::new("-") {
        print!("{text}");
        return Ok(());
    }
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn witness_value(w: &PolygonWitness) -> serde_json::Value {
    serde_json::to_value(w).expect("witness serializes")
}

fn gen(kind: &GenKind, out: &OutArgs) -> Result<bool> {
    let set = match *kind {
        GenKind::Horton { n } => horton_set(n)?,
        GenKind::Upper { k, m } => build_upper_bound_set(k, m)?.0,
        GenKind::Noquad { k } => build_no_rainbow_quad_set(k)?.set,
        GenKind::Gadget => lemma4_gadget(),
        GenKind::Random { k, m, seed, grid } => random_colored_set(k, m, seed, grid)?,
    };
    emit(&set, out)?;
    Ok(true)
}

fn count(
    input: &Path,
    shape: ShapeArg,
    filter: FilterArg,
    witnesses: Option<&Path>,
    json: bool,
    budget: &Budget,
) -> Result<bool> {
    let set = read_input(input)?;
    let mut rep = Report::new();
    rep.add("n", set.len()).add("k", set.k());
    let found = match shape {
        ShapeArg::Triangle => {
            let ts = empty_triangles_filtered(&set, filter.into(), budget)?;
            rep.add("shape", "triangle").add("count", ts.len());
            ts
        }
        ShapeArg::Quad => {
            let q = empty_quadrilaterals(&set, filter.into(), budget)?;
            rep.add("shape", "quad").add("count", q.convex.len()).add("nonconvex", q.nonconvex.len());
            q.convex
        }
    };
    rep.add(
        "filter",
        match filter {
            FilterArg::Any => "any",
            FilterArg::Rainbow => "rainbow",
            FilterArg::Mono => "mono",
        },
    );
    rep.print(json);
    if let Some(path) = witnesses {
        write_text(path, &witnesses_to_json(&found))?;
    }
    Ok(true)
}

fn verify(check: &Check, json: bool, budget: &Budget) -> Result<bool> {
    let mut rep = Report::new();
    let pass = match *check {
        Check::LowerBound { ref input } => {
            let set = read_input(input)?;
            let Some(m) = set.m() else {
                bail!("lower bound needs equal class sizes, got {:?}", set.class_sizes());
            };
            let bound = lower_bound_formula(set.k(), m)?;
            let count = empty_triangles_filtered(&set, ColorFilter::Rainbow, budget)?.len();
            let witnesses = lower_bound_witnesses(&set)?;
            let ok = count as u128 >= bound && witnesses.len() as u128 >= bound;
            rep.add("check", "lower-bound")
                .add("k", set.k())
                .add("m", m)
                .add("bound", bound.to_string())
                .add("count", count)
                .add("witnesses", witnesses.len());
            ok
        }
        Check::Theorem1Upper { k, m } => {
            let r = verify_theorem1_upper(k, m, budget)?;
            rep.add("check", "theorem1-upper")
                .add("k", k)
                .add("m", m)
                .add("n", r.n)
                .add("lower_bound", r.lower_bound.to_string())
                .add("count", r.count)
                .add("bound", upper_bound_value(k, m).to_string())
                .add("blocking_checks", r.blocking_checks);
            if json {
                rep.add("layers", serde_json::to_value(&r.layers)?);
            } else {
                for l in &r.layers {
                    eprintln!(
                        "layer {}: horton {} rainbow {} multiplicity {} within {}",
                        l.layer, l.horton_triangles, l.rainbow_triangles, l.multiplicity, l.within
                    );
                }
            }
            r.pass
        }
        Check::Theorem2 { k } => {
            let c = build_no_rainbow_quad_set(k)?;
            c.check_guards()?;
            let r = verify_no_empty_rainbow_quad(&c.set, budget)?;
            rep.add("check", "theorem2")
                .add("k", k)
                .add("m", c.m)
                .add("n", r.n)
                .add("bound", 0)
                .add("count", r.convex)
                .add("nonconvex", r.nonconvex);
            if let Some(w) = &r.counterexample {
                rep.add("counterexample", witness_value(w));
            }
            r.pass
        }
        Check::Horton { ref input, n } => {
            let set = match (input, n) {
                (Some(path), _) => read_input(path)?,
                (None, Some(n)) => horton_set(n)?,
                (None, None) => bail!("give --input or --n"),
            };
            let n = set.len();
            let ok = is_horton(set.points())?;
            rep.add("check", "horton").add("n", n).add("horton", ok);
            if ok {
                let h = rainbow_core::HortonSet::from_points(set.points().to_vec())?;
                let t = empty_triangle_triples(&h).len();
                rep.add("bound", 2 * n * n).add("count", t);
                t <= 2 * n * n
            } else {
                false
            }
        }
        Check::VisibleEdges { n } => {
            let e = visible_edges(&generate_horton(n)?).len();
            rep.add("check", "visible-edges").add("n", n).add("bound", 2 * n).add("count", e);
            e < 2 * n
        }
    };
    rep.add("result", if pass { "pass" } else { "fail" });
    rep.print(json);
    Ok(pass)
}

fn plot(input: &Path, out: &Path, highlight: Option<&Path>) -> Result<bool> {
    let set = read_input(input)?;
    let ws = match highlight {
        Some(p) => witnesses_from_json(&std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?)?,
        None => Vec::new(),
    };
    for w in &ws {
        if w.vertices.iter().any(|&v| v >= set.len()) {
            bail!("highlight witness {:?} refers to a missing point", w.vertices);
        }
    }
    write_text(out, &render_svg(&set, &ws)?)?;
    Ok(true)
}

fn run(cli: &Cli) -> Result<bool> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    let budget = Budget::new(cli.budget);
    match &cli.cmd {
        Command::Gen { kind, out } => gen(kind, out),
        Command::Count { input, shape, filter, witnesses, json } => {
            count(input, *shape, *filter, witnesses.as_deref(), *json, &budget)
        }
        Command::Verify { check, json } => verify(check, *json, &budget),
        Command::Plot { input, out, highlight } => plot(input, out, highlight.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::BudgetExceeded { .. }) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
