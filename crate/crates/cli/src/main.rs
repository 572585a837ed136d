mod input;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gammahom::catalog::generate;
use gammahom::class::ClassKind;
use gammahom::gamma_verify::{
    check_gamma_leq, check_hom_dominance, check_strict_dominance, lovasz_distinguish,
    lovasz_distinguish_escalating, DominanceReport, LovaszReport,
};
use gammahom::hom::is_homomorphism;
use gammahom::quotient::{quotient_of, theta_class, theta_class_sizes};
use gammahom::rearrange::{RearrangeMode, Rearrangement};
use gammahom::{count_homs, ClassSpec, Digraph, Error, HomMode};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "gammahom", version, about = "Homomorphism counts, strict dominance, and rearrangements of small digraphs")]
struct Cli {
    /// Output format.
    #[arg(long, short, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, short, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountMode {
    All,
    Strict,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    StrictDominance,
    GammaLeq,
    HomDominance,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapMode {
    All,
    Strict,
}

impl From<MapMode> for HomMode {
    fn from(m: MapMode) -> Self {
        match m {
            MapMode::All => HomMode::All,
            MapMode::Strict => HomMode::Strict,
        }
    }
}

#[derive(clap::Args)]
struct ClassArgs {
    /// Class kind: digraphs, ta, posets, strict-posets, undirected, odd-cycle-free.
    #[arg(long, default_value = "posets", value_parser = parse_kind)]
    class: ClassKind,
    /// Largest number of vertices in the test catalog.
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Largest number of arcs in the test catalog.
    #[arg(long)]
    max_arcs: Option<usize>,
}

impl ClassArgs {
    fn spec(&self) -> ClassSpec {
        class_spec(self.class, self.max_n, self.max_arcs)
    }
}

fn parse_kind(s: &str) -> Result<ClassKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn class_spec(kind: ClassKind, n: usize, max_arcs: Option<usize>) -> ClassSpec {
    let c = ClassSpec::new(kind, n);
    match max_arcs {
        Some(a) => c.with_max_arcs(a),
        None => c,
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count homomorphisms from G to H.
    Count {
        g: String,
        h: String,
        #[arg(long, value_enum, default_value_t = CountMode::Both)]
        mode: CountMode,
    },
    /// Compare R and S over a finite class.
    Verify {
        r: String,
        s: String,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum, default_value_t = VerifyMode::StrictDominance)]
        mode: VerifyMode,
        /// Include the per-digraph count table.
        #[arg(long)]
        table: bool,
    },
    /// Build S (and T) from a rearrangement spec.
    Rearrange {
        spec: String,
        /// Require a poset R with the convexity and walk conditions; emits T.
        #[arg(long)]
        poset: bool,
        /// Like --poset, and include T in the output.
        #[arg(long = "emit-T", alias = "emit-t")]
        emit_t: bool,
        /// Require a symmetric R and move edges.
        #[arg(long, conflicts_with_all = ["poset", "emit_t"])]
        undirected: bool,
        /// Check strict dominance of R by each output over the catalog up to this size.
        #[arg(long)]
        verify_bound: Option<usize>,
    },
    /// List isomorphism-class representatives.
    Catalog {
        #[arg(value_parser = parse_kind)]
        kind: ClassKind,
        max_n: usize,
        #[arg(long)]
        max_arcs: Option<usize>,
    },
    /// Check that count vectors separate every pair of objects.
    Lovasz {
        #[arg(value_parser = parse_kind)]
        objects: ClassKind,
        object_n: usize,
        #[arg(value_parser = parse_kind)]
        tests: ClassKind,
        test_n: usize,
        #[arg(long, value_enum, default_value_t = MapMode::All)]
        mode: MapMode,
        /// Raise the test bound until every pair is separated.
        #[arg(long)]
        escalate: bool,
    },
    /// The quotient digraph of a homomorphism G -> H.
    Quotient {
        g: String,
        h: String,
        /// Images of the vertices of G, e.g. `0,0,1`.
        #[arg(long)]
        map: String,
    },
    /// Theta-class sizes of maps from G into H2, or one class given a map G -> H.
    Theta {
        g: String,
        h2: String,
        /// Target of --map; the class of that map's quotient is listed.
        #[arg(long, requires = "map")]
        via: Option<String>,
        #[arg(long, requires = "via")]
        map: Option<String>,
    },
}

/// What a successful command produced.
struct Output {
    json: Value,
    table: String,
    dot: Option<String>,
    /// Exit with the verdict code.
    fails: bool,
}

const EXIT_ERROR: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_FAILS: u8 = 4;
const EXIT_SPEC: u8 = 5;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::CatalogImport { .. } => EXIT_PARSE,
        Error::BoundTooLarge { .. } | Error::TooLarge { .. } | Error::TooManyVertices { .. } => EXIT_CAP,
        Error::DominanceFails { .. } => EXIT_FAILS,
        Error::InvalidSpec(_) | Error::NotAPoset | Error::NotSymmetric => EXIT_SPEC,
        _ => EXIT_ERROR,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_ERROR);
        }
    }
    match run(&cli.command) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("values serialize") + "\n",
                Format::Table => out.table,
                Format::Dot => match out.dot {
                    Some(d) => d,
                    None => {
                        eprintln!("error: this command has no dot output");
                        return ExitCode::from(EXIT_PARSE);
                    }
                },
            };
            print!("{text}");
            ExitCode::from(if out.fails { EXIT_FAILS } else { 0 })
        }
        Err(e) => {
            if let (Error::InvalidSpec(v), Format::Json) = (&e, cli.format) {
                let body = json!({ "error": "invalid-spec", "violations": v });
                println!("{}", serde_json::to_string_pretty(&body).expect("values serialize"));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cmd: &Command) -> gammahom::Result<Output> {
    match cmd {
        Command::Count { g, h, mode } => count(&input::digraph(g)?, &input::digraph(h)?, *mode),
        Command::Verify {
            r,
            s,
            class,
            mode,
            table,
        } => verify(&input::digraph(r)?, &input::digraph(s)?, &class.spec(), *mode, *table),
        Command::Rearrange {
            spec,
            poset,
            emit_t,
            undirected,
            verify_bound,
        } => {
            let mode = if *undirected {
                RearrangeMode::Undirected
            } else if *poset || *emit_t {
                RearrangeMode::Poset
            } else {
                RearrangeMode::Digraph
            };
            rearrange(input::spec(spec)?, mode, *emit_t, *verify_bound)
        }
        Command::Catalog { kind, max_n, max_arcs } => catalog(&class_spec(*kind, *max_n, *max_arcs)),
        Command::Lovasz {
            objects,
            object_n,
            tests,
            test_n,
            mode,
            escalate,
        } => lovasz(
            &ClassSpec::new(*objects, *object_n),
            &ClassSpec::new(*tests, *test_n),
            (*mode).into(),
            *escalate,
        ),
        Command::Quotient { g, h, map } => quotient(&input::digraph(g)?, &input::digraph(h)?, map),
        Command::Theta { g, h2, via, map } => {
            let via = match (via, map) {
                (Some(h), Some(m)) => Some((input::digraph(h)?, m.as_str())),
                _ => None,
            };
            theta(&input::digraph(g)?, &input::digraph(h2)?, via)
        }
    }
}

fn dot(g: &Digraph) -> String {
    g.to_dot(true)
}

fn count(g: &Digraph, h: &Digraph, mode: CountMode) -> gammahom::Result<Output> {
    let mut obj = serde_json::Map::new();
    let mut table = String::new();
    if matches!(mode, CountMode::All | CountMode::Both) {
        let c = count_homs(g, h, HomMode::All);
        let _ = writeln!(table, "hom\t{c}");
        obj.insert("hom".into(), serde_json::to_value(c)?);
    }
    if matches!(mode, CountMode::Strict | CountMode::Both) {
        let c = count_homs(g, h, HomMode::Strict);
        let _ = writeln!(table, "strict\t{c}");
        obj.insert("strict".into(), serde_json::to_value(c)?);
    }
    Ok(Output {
        json: Value::Object(obj),
        table,
        dot: None,
        fails: false,
    })
}

fn dominance_table(rep: &DominanceReport) -> String {
    let mut t = String::new();
    let kind = serde_json::to_value(rep.kind).expect("kind serializes");
    let verdict = if rep.holds() { "holds" } else { "fails" };
    let _ = writeln!(
        t,
        "{} {:?} <= {:?} over {}: {verdict} ({} checked)",
        kind.as_str().unwrap_or_default(),
        rep.r,
        rep.s,
        rep.class,
        rep.checked
    );
    if let Some(w) = &rep.witness {
        let _ = write!(t, "witness {:?}", w.g);
        if let Some(xi) = &w.xi {
            let _ = write!(t, " map {:?}", xi.image());
        }
        let _ = writeln!(t, ": {} > {}", w.lhs, w.rhs);
    }
    if let Some(rows) = &rep.table {
        let _ = writeln!(t, "G\tstrict R\tstrict S\thom R\thom S");
        for row in rows {
            let _ = writeln!(
                t,
                "{:?}\t{}\t{}\t{}\t{}",
                row.g, row.strict_r, row.strict_s, row.hom_r, row.hom_s
            );
        }
    }
    t
}

fn verify(r: &Digraph, s: &Digraph, c: &ClassSpec, mode: VerifyMode, table: bool) -> gammahom::Result<Output> {
    let mut rep = match mode {
        VerifyMode::StrictDominance => check_strict_dominance(r, s, c)?,
        VerifyMode::GammaLeq => check_gamma_leq(r, s, c)?,
        VerifyMode::HomDominance => check_hom_dominance(r, s, c)?,
    };
    if table {
        rep = rep.with_table()?;
    }
    Ok(Output {
        json: serde_json::to_value(&rep)?,
        table: dominance_table(&rep),
        dot: None,
        fails: !rep.holds(),
    })
}

fn rearrange(
    spec: gammahom::rearrange::RearrangementSpec,
    mode: RearrangeMode,
    emit_t: bool,
    verify_bound: Option<usize>,
) -> gammahom::Result<Output> {
    let rr = Rearrangement::new(spec, mode)?;
    let mut result = rr.result().clone();
    if !emit_t {
        result.t = None;
    }
    let mut reports = Vec::new();
    if let Some(k) = verify_bound {
        let kind = match mode {
            RearrangeMode::Digraph => ClassKind::Digraphs,
            RearrangeMode::Poset => ClassKind::Posets,
            RearrangeMode::Undirected => ClassKind::Undirected,
        };
        let c = ClassSpec::new(kind, k);
        reports.push(check_strict_dominance(rr.r(), rr.s(), &c)?);
        if let Some(t) = &rr.result().t {
            reports.push(check_strict_dominance(rr.r(), t, &c)?);
        }
    }
    let fails = reports.iter().any(|r| !r.holds());

    let mut table = String::new();
    let _ = writeln!(table, "R\t{:?}", rr.r());
    let _ = writeln!(table, "S\t{:?}", result.s);
    if let Some(t) = &result.t {
        let _ = writeln!(table, "T\t{t:?}");
    }
    let _ = writeln!(table, "A_r\t{:?}", result.a_r);
    let _ = writeln!(table, "A_d\t{:?}", result.a_d);
    let _ = writeln!(table, "A_u\t{:?}", result.a_u);
    for rep in &reports {
        let target = if rep.s == *rr.s() { "S" } else { "T" };
        let verdict = if rep.holds() { "holds" } else { "fails" };
        let _ = writeln!(table, "R <= {target}\t{verdict} <= {}", rep.class.max_vertices);
    }

    let mut dot_out = format!("// S\n{}", dot(&result.s));
    if let Some(t) = &result.t {
        let _ = write!(dot_out, "// T\n{}", dot(t));
    }
    let mut obj = json!({
        "mode": mode,
        "spec": rr.spec(),
        "result": result,
    });
    if verify_bound.is_some() {
        obj["verification"] = serde_json::to_value(&reports)?;
    }
    Ok(Output {
        json: obj,
        table,
        dot: Some(dot_out),
        fails,
    })
}

fn catalog(c: &ClassSpec) -> gammahom::Result<Output> {
    let cat = generate(c)?;
    let mut table = String::new();
    for (i, g) in cat.iter().enumerate() {
        let _ = writeln!(table, "{i}\t{}\t{g:?}", g.n());
    }
    let dot_out = cat
        .iter()
        .enumerate()
        .map(|(i, g)| format!("// {i}\n{}", dot(g)))
        .collect();
    Ok(Output {
        json: json!({ "class": c, "count": cat.len(), "digraphs": cat }),
        table,
        dot: Some(dot_out),
        fails: false,
    })
}

fn lovasz_table(rep: &LovaszReport) -> String {
    let mut t = String::new();
    let undistinguished = rep.pairs.iter().filter(|p| p.distinguished_by.is_none()).count();
    let _ = writeln!(
        t,
        "{} objects ({}) vs {} tests ({}), {:?}: {} pairs, {} undistinguished",
        rep.object_count,
        rep.objects,
        rep.test_count,
        rep.tests,
        rep.mode,
        rep.pairs.len(),
        undistinguished
    );
    t
}

fn lovasz(objects: &ClassSpec, tests: &ClassSpec, mode: HomMode, escalate: bool) -> gammahom::Result<Output> {
    let reports = if escalate {
        lovasz_distinguish_escalating(objects, tests, mode)?
    } else {
        vec![lovasz_distinguish(objects, tests, mode)?]
    };
    let last = reports.last().expect("at least one report");
    let fails = !last.all_distinguished;
    Ok(Output {
        json: json!({ "all_distinguished": last.all_distinguished, "reports": reports }),
        table: reports.iter().map(lovasz_table).collect(),
        dot: None,
        fails,
    })
}

fn quotient(g: &Digraph, h: &Digraph, map: &str) -> gammahom::Result<Output> {
    let xi = input::vertex_map(map, h.n())?;
    if !is_homomorphism(g, h, &xi, HomMode::All)? {
        return Err(Error::NotAHomomorphism);
    }
    let q = quotient_of(g, h, &xi)?;
    let mut table = String::new();
    let _ = writeln!(table, "quotient\t{:?}", q.digraph());
    for (i, b) in q.blocks().iter().enumerate() {
        let _ = writeln!(table, "block {i}\t{:?}\t-> {}", b.iter().collect::<Vec<_>>(), q.iota().get(i));
    }
    Ok(Output {
        json: serde_json::to_value(&q)?,
        table,
        dot: Some(dot(q.digraph())),
        fails: false,
    })
}

fn theta(g: &Digraph, h2: &Digraph, via: Option<(Digraph, &str)>) -> gammahom::Result<Output> {
    if let Some((h, map)) = via {
        let xi = input::vertex_map(map, h.n())?;
        if !is_homomorphism(g, &h, &xi, HomMode::All)? {
            return Err(Error::NotAHomomorphism);
        }
        let q = quotient_of(g, &h, &xi)?;
        let members = theta_class(g, h2, &q);
        let strict = count_homs(q.digraph(), h2, HomMode::Strict);
        let mut table = String::new();
        let _ = writeln!(table, "class size\t{}", members.len());
        let _ = writeln!(table, "strict maps from quotient\t{strict}");
        for m in &members {
            let _ = writeln!(table, "{:?}", m.image());
        }
        return Ok(Output {
            json: json!({
                "partition": q.partition(),
                "size": members.len(),
                "strict_from_quotient": strict,
                "members": members,
            }),
            table,
            dot: None,
            fails: false,
        });
    }
    let sizes = theta_class_sizes(g, h2);
    let total: u64 = sizes.values().sum();
    let mut table = String::new();
    let classes: Vec<Value> = sizes
        .iter()
        .map(|(key, size)| {
            let _ = writeln!(table, "{key:?}\t{size}");
            json!({ "partition": key, "size": size })
        })
        .collect();
    let _ = writeln!(table, "total\t{total}");
    Ok(Output {
        json: json!({ "classes": classes, "total": total }),
        table,
        dot: None,
        fails: false,
    })
}
