use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rchi::bounds::bounds_report;
use rchi::bounds::upper_bound_thm3;
use rchi::canon::{is_vertex_transitive_with_limit, DEFAULT_TRANSITIVITY_LIMIT};
use rchi::cayley::{cayley_graph, ConnectionSet, GroupSpec};
use rchi::census::Census;
use rchi::chromatic::{chromatic_number, invariants};
use rchi::constructions::{CycleUnionSpec, Family};
use rchi::search::{extremal_search, resolve_66, witness_structure, Budget};
use rchi::table::{verify_table, CellStatus, Minimality, TableOptions};
use rchi::{decode_graph6, encode_dot, encode_graph6, Error, Graph};

#[derive(Parser)]
#[command(
    name = "rchi",
    version,
    about = "Regular graphs with prescribed chromatic number"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from one of the named families.
    #[command(long_about = CONSTRUCT_HELP)]
    Construct(ConstructArgs),
    /// Build Cay(Z_m1 x ... x Z_mk, X) from moduli and a connection set.
    #[command(
        long_about = "Build the Cayley graph Cay(G, X) on G = Z_m1 x ... x Z_mk. Vertices are the \
                      group elements in lexicographic order (last coordinate fastest); g ~ h when \
                      h = g + x for some x in X. X must avoid the identity and be closed under \
                      negation. A set that does not generate G gives a disconnected graph; this \
                      is reported, and rejected with --require-generating."
    )]
    Cayley(CayleyArgs),
    /// Exact chromatic number of graph6 input with its certificates.
    #[command(
        long_about = "Exact chromatic number. Prints the colouring found together with the lower \
                      bound witness: either a clique of size chi or a refutation showing chi-1 \
                      colours do not suffice. Reads one graph6 string per line from stdin when no \
                      argument is given."
    )]
    Chi(GraphInput),
    /// Order, degree, chi, clique number, independence number and the Reed value.
    #[command(
        long_about = "Invariants of graph6 input: order, regularity, chi with a colouring, a \
                      maximum clique, a maximum independent set, the maximum degree and the Reed \
                      value ceil((omega + 1 + Delta) / 2). Reads stdin when no argument is given."
    )]
    Invariants(GraphInput),
    /// Lower and upper bounds on n(r|chi).
    #[command(
        long_about = "Bounds on n(r|chi), the least order of an r-regular graph with chromatic \
                      number chi. With r = a(chi-1) + b and 0 <= b < chi-1: the lower bound is \
                      ceil(r chi / (chi-1)), raised to even when r is odd; upper_thm2 = a chi (b+1) \
                      from T(a chi, chi) x K_(b+1); upper_thm3 = min(2 floor(r chi/(chi-1)), \
                      upper_thm2) from two Turán graphs joined by a matching."
    )]
    Bounds(BoundsArgs),
    /// Exhaustive search for n(r|chi).
    #[command(
        long_about = "Enumerate all r-regular graphs up to isomorphism at each order from the \
                      lower bound upwards (skipping orders with n r odd) and stop at the first \
                      order containing a graph with chromatic number chi. Orders outside the \
                      enumeration budget end the search with an open result. Prints a \
                      certificate listing every witness at the minimal order and the orders \
                      exhausted below it."
    )]
    Search(SearchArgs),
    /// Check every cell of the catalogue of extremal (r|chi)-graphs.
    #[command(
        long_about = "Construct each named graph of the catalogue of smallest (r|chi)-graphs for \
                      2 <= r <= 10, 2 <= chi <= 6 and check its order, regularity and exact chi. \
                      Cells inside the enumeration budget are also certified minimal by exhaustive \
                      search. Exits 1 if any cell fails."
    )]
    VerifyTable(TableArgs),
    /// Settle n(6|6), known to lie in {11, 12}.
    #[command(
        long_about = "Enumerate every 6-regular graph on 8 to 11 vertices through its complement \
                      (of degree 1 to 4) and compute chi for each. If no 6-chromatic one exists, \
                      n(6|6) = 12 with witness K6 x K2; otherwise n(6|6) = 11 and the witnesses \
                      are listed with their clique and independence numbers."
    )]
    #[command(name = "resolve-66")]
    Resolve66,
}

const CONSTRUCT_HELP: &str = "Build a graph from a named family and print it.

Families and their parameters:
  turan                   --n --k    complete k-partite graph T(n,k) with near-equal parts
  antihole                --n        complement of the cycle C_n (n >= 4)
  cycle-union-complement  --cycles   complement of a disjoint union of cycles, e.g. --cycles 5,3
  doubled-turan           --n --chi  two copies of T(n,chi) with a matching between the larger parts
  t-star                  --n --chi  T(n,chi) minus a perfect matching between paired parts
  g-act                   --a --c --t  T(at,t) with a c-partite graph replacing one part pair
  t-double-star                      the 9-regular 3-chromatic graph T**(16,3)
  theorem1                --r --chi  T(a chi, chi) x K_(b+1) where r = a(chi-1) + b
  prism                   --k        K_k x K_2

x denotes the Cartesian product. The json format reports order, regularity, \
the exact chromatic number and whether these match the family's claim; \
exit status 1 if they do not.";

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Turan,
    Antihole,
    CycleUnionComplement,
    DoubledTuran,
    TStar,
    GAct,
    TDoubleStar,
    Theorem1,
    Prism,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Graph6,
    Dot,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    family: FamilyName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    chi: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Comma-separated cycle lengths.
    #[arg(long, value_delimiter = ',')]
    cycles: Vec<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct CayleyArgs {
    /// Comma-separated moduli m1,...,mk.
    #[arg(long, value_delimiter = ',', required = true)]
    moduli: Vec<usize>,
    /// Elements separated by ';', coordinates by ',', e.g. "1,0;0,1;0,5".
    #[arg(long)]
    set: String,
    #[arg(long)]
    require_generating: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct GraphInput {
    /// graph6 string; read from stdin when absent.
    graph6: Option<String>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    chi: usize,
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest order the enumeration may visit.
    #[arg(long, default_value_t = Budget::default().max_order)]
    budget_order: usize,
    /// Largest degree enumerated, taken as min(r, n-1-r).
    #[arg(long, default_value_t = Budget::default().max_degree)]
    budget_degree: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_order: self.budget_order,
            max_degree: self.budget_degree,
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    chi: usize,
    /// Highest order to try; defaults to the constructive upper bound.
    #[arg(long)]
    max_order: Option<usize>,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Census directory used to cache enumerations.
    #[arg(long)]
    census: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    census: Option<PathBuf>,
    /// Only check constructions.
    #[arg(long)]
    no_minimality: bool,
    /// Print the full report as JSON instead of one line per cell.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    budget: BudgetArgs,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Census { .. } | Error::Io(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = match &cli.command {
        Command::Search(a) => a.jobs,
        _ => Some(1),
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        pool = pool.num_threads(j);
    }
    let result = match pool.build() {
        Ok(pool) => pool.install(|| run(cli.command)),
        Err(e) => Err(Failure::Usage(e.to_string())),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Construct(a) => construct(a),
        Command::Cayley(a) => cayley(a),
        Command::Chi(a) => each_graph(a, |g| {
            let res = chromatic_number(g);
            Ok(serde_json::to_value(res).expect("serialisable"))
        }),
        Command::Invariants(a) => each_graph(a, |g| {
            Ok(serde_json::to_value(invariants(g)).expect("serialisable"))
        }),
        Command::Bounds(a) => {
            print_json(&serde_json::to_value(bounds_report(a.r, a.chi)?).expect("serialisable"));
            Ok(true)
        }
        Command::Search(a) => search(a),
        Command::VerifyTable(a) => table(a),
        Command::Resolve66 => resolve(),
    }
}

/// Keys come out sorted: serde_json's default map is ordered.
fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serialisable"));
}

fn need(v: Option<usize>, name: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("this family needs --{name}")))
}

fn family(a: &ConstructArgs) -> Result<Family, Failure> {
    Ok(match a.family {
        FamilyName::Turan => Family::Turan {
            n: need(a.n, "n")?,
            k: need(a.k, "k")?,
        },
        FamilyName::Antihole => Family::Antihole { n: need(a.n, "n")? },
        FamilyName::CycleUnionComplement => {
            Family::CycleUnionComplement(CycleUnionSpec::new(a.cycles.clone())?)
        }
        FamilyName::DoubledTuran => Family::DoubledTuran {
            n: need(a.n, "n")?,
            chi: need(a.chi, "chi")?,
        },
        FamilyName::TStar => Family::TStar {
            n: need(a.n, "n")?,
            chi: need(a.chi, "chi")?,
        },
        FamilyName::GAct => Family::GAct {
            a: need(a.a, "a")?,
            c: need(a.c, "c")?,
            t: need(a.t, "t")?,
        },
        FamilyName::TDoubleStar => Family::TDoubleStar,
        FamilyName::Theorem1 => Family::Theorem1 {
            r: need(a.r, "r")?,
            chi: need(a.chi, "chi")?,
        },
        FamilyName::Prism => Family::Prism { k: need(a.k, "k")? },
    })
}

fn emit_graph(g: &Graph, name: &str, format: Format, mut extra: Value) -> bool {
    match format {
        Format::Graph6 => println!("{}", encode_graph6(g)),
        Format::Dot => print!("{}", encode_dot(g, name)),
        Format::Json => {
            let chi = chromatic_number(g).chi;
            extra["order"] = json!(g.order());
            extra["regular"] = json!(g.is_regular());
            extra["chi"] = json!(chi);
            extra["graph6"] = json!(encode_graph6(g));
            let ok = extra.get("claim").is_none_or(|c| {
                c["order"] == json!(g.order())
                    && c["regularity"] == json!(g.is_regular())
                    && c["chi"] == json!(chi)
            });
            if extra.get("claim").is_some() {
                extra["claim_holds"] = json!(ok);
            }
            print_json(&extra);
            return ok;
        }
    }
    true
}

fn construct(a: ConstructArgs) -> Outcome {
    let f = family(&a)?;
    let g = f.build()?;
    let extra = json!({
        "family": f.to_string(),
        "claim": serde_json::to_value(f.claim()).expect("serialisable"),
    });
    Ok(emit_graph(&g, &f.to_string(), a.format, extra))
}

fn parse_set(text: &str) -> Result<Vec<Vec<usize>>, Failure> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|el| {
            el.split(',')
                .map(|c| {
                    c.trim()
                        .parse()
                        .map_err(|_| Failure::Usage(format!("bad group element {el:?}")))
                })
                .collect()
        })
        .collect()
}

fn cayley(a: CayleyArgs) -> Outcome {
    let group = GroupSpec::new(a.moduli)?;
    let x = ConnectionSet::new(&group, parse_set(&a.set)?)?;
    let generates = x.generates(&group);
    if !generates {
        if a.require_generating {
            return Err(Failure::Usage(
                "connection set does not generate the group".into(),
            ));
        }
        eprintln!("warning: connection set does not generate the group; the graph is disconnected");
    }
    let g = cayley_graph(&group, &x);
    let transitive = is_vertex_transitive_with_limit(&g, DEFAULT_TRANSITIVITY_LIMIT).ok();
    let extra = json!({
        "moduli": group.moduli(),
        "connection_set": x.elements(),
        "generates": generates,
        "vertex_transitive": transitive,
    });
    Ok(emit_graph(&g, "cayley", a.format, extra))
}

fn each_graph(input: GraphInput, f: impl Fn(&Graph) -> Result<Value, Failure>) -> Outcome {
    let lines: Vec<String> = match input.graph6 {
        Some(s) => vec![s],
        None => io::stdin()
            .lock()
            .lines()
            .collect::<io::Result<_>>()
            .map_err(|e| Failure::Usage(e.to_string()))?,
    };
    let mut seen = false;
    for line in lines.iter().filter(|l| !l.trim().is_empty()) {
        let g = decode_graph6(line.trim())?;
        print_json(&f(&g)?);
        seen = true;
    }
    if !seen {
        return Err(Failure::Usage("no graph6 input".into()));
    }
    Ok(true)
}

fn search(a: SearchArgs) -> Outcome {
    let max = match a.max_order {
        Some(m) => m,
        None => upper_bound_thm3(a.r, a.chi)?,
    };
    let mut census = a.census.as_ref().map(Census::load).transpose()?;
    let cert = extremal_search(a.r, a.chi, max, a.budget.budget(), census.as_mut())?;
    print_json(&serde_json::to_value(&cert).expect("serialisable"));
    Ok(true)
}

fn table(a: TableArgs) -> Outcome {
    let mut census = a.census.as_ref().map(Census::load).transpose()?;
    let opts = TableOptions {
        minimality: !a.no_minimality,
        budget: a.budget.budget(),
    };
    let report = verify_table(opts, census.as_mut())?;
    if a.json {
        print_json(&serde_json::to_value(&report).expect("serialisable"));
        return Ok(report.all_passed());
    }
    let mut out = io::stdout().lock();
    for cell in &report.cells {
        let names: Vec<&str> = cell.graphs.iter().map(|g| g.name.as_str()).collect();
        let status = match cell.status {
            CellStatus::Verified => "PASS",
            CellStatus::Failed => "FAIL",
            CellStatus::Open => "OPEN",
        };
        let detail = match (&cell.status, &cell.minimality) {
            (CellStatus::Open, _) => "value not known; run resolve-66".to_string(),
            (_, None) => "construction verified".to_string(),
            (
                _,
                Some(Minimality::Certified {
                    exhausted,
                    witnesses,
                }),
            ) => {
                let orders: Vec<String> = exhausted
                    .iter()
                    .map(|o| format!("{}:{}", o.n, o.count))
                    .collect();
                match witnesses {
                    Some(w) => format!("minimal, {w} witnesses; enumerated {}", orders.join(" ")),
                    None => format!("minimal; enumerated {}", orders.join(" ")),
                }
            }
            (_, Some(Minimality::LowerBound)) => "minimal, order meets the lower bound".to_string(),
            (_, Some(Minimality::NotChecked { reason })) => reason.clone(),
            (_, Some(Minimality::Failed { reason })) => format!("minimality failed: {reason}"),
        };
        let order = cell.order.map_or("?".to_string(), |n| n.to_string());
        let _ = writeln!(
            out,
            "{status} ({},{}) n={order} {} | {detail}",
            cell.r,
            cell.chi,
            names.join(", ")
        );
    }
    let _ = writeln!(
        out,
        "{} verified, {} failed, {} open",
        report.verified, report.failed, report.open
    );
    Ok(report.all_passed())
}

fn resolve() -> Outcome {
    let cert = resolve_66()?;
    let mut structure = Vec::new();
    if cert.minimal_order == Some(11) {
        for w in &cert.witnesses {
            structure.push(
                serde_json::to_value(witness_structure(&decode_graph6(w)?)).expect("serialisable"),
            );
        }
    }
    let mut v = serde_json::to_value(&cert).expect("serialisable");
    v["n66"] = json!(cert.minimal_order);
    v["witness_structure"] = Value::Array(structure);
    print_json(&v);
    Ok(true)
}
