use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bmres::bm::{self, generator_symmetries, BmTables};
use bmres::classify::classify;
use bmres::fixtures::run_fixtures;
use bmres::formulas::{collapsed_formula_mismatches, path_table_closed};
use bmres::graphs::{root_and_label, Graph};
use bmres::homology::{betti_table_homology, is_prime};
use bmres::ideals::{closed_neighborhood_ideal, tree_lex_order, GeneratorOrder, MonomialIdeal};
use bmres::io::{ideal_from_json, order_from_json, order_to_json, read_graph};
use bmres::survey::{run_survey, SurveyOptions};
use bmres::tree_bm::{max_critical_set, TreeBm};
use bmres::{BettiTable, Error, TableKind};

#[derive(Parser)]
#[command(
    name = "bmres",
    version,
    about = "Betti tables of monomial ideals from Barile-Macchia critical cells"
)]
struct Cli {
    /// Emit JSON only.
    #[arg(long, global = true)]
    json: bool,
    /// Include long-running checks.
    #[arg(long, global = true)]
    long: bool,
    /// Generator order: tree-lex (trees only), canonical storage order, or --order-file.
    #[arg(long, global = true, value_enum)]
    order: Option<OrderKind>,
    #[arg(long, global = true)]
    order_file: Option<PathBuf>,
    /// Cross-check with Taylor-strand homology, e.g. gf:32003,2.
    #[arg(long, global = true)]
    oracle: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderKind {
    TreeLex,
    File,
    Canonical,
}

#[derive(Args, Clone)]
struct Input {
    /// Graph file (JSON or text); the ideal is its closed neighborhood ideal.
    #[arg(long, conflicts_with = "ideal", required_unless_present = "ideal")]
    graph: Option<PathBuf>,
    /// Ideal file (JSON).
    #[arg(long)]
    ideal: Option<PathBuf>,
    /// Root for the tree-lex order.
    #[arg(long, default_value_t = 0)]
    root: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Betti table from critical sets.
    Betti(Input),
    /// List critical sets.
    Critical(Input),
    /// Test an order for bridge-friendliness, or search for one.
    BridgeFriendly {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        search: bool,
    },
    /// Maximal critical set of a tree.
    Algorithm1 {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Betti table of NI(P_n) from the closed formula.
    PathFormulas {
        #[arg(long)]
        n: usize,
    },
    /// Genericity, linear quotients and the hypertree obstruction.
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Records for all trees up to a size, as JSON lines.
    Survey {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long)]
        out: PathBuf,
        /// Allow sizes up to 12.
        #[arg(long)]
        big: bool,
        /// Record per-tree wall time.
        #[arg(long)]
        timings: bool,
    },
    /// Run the built-in reference checks.
    VerifyPaper,
}

enum Fail {
    Lib(Error),
    Disagree(String),
    Verify,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidGraph(_)
        | Error::InvalidOrder(_)
        | Error::MixedArity(..)
        | Error::NotPrime(_)
        | Error::Io(_) => 2,
        Error::TooLarge { .. } => 3,
        _ => 1,
    }
}

fn parse_oracle(spec: &str) -> Result<Vec<u64>, Error> {
    let body = spec
        .strip_prefix("gf:")
        .ok_or_else(|| Error::Parse(format!("oracle spec `{spec}` should look like gf:p[,p2]")))?;
    body.split(',')
        .map(|p| {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime `{p}`")))?;
            if p > u32::MAX as u64 || !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            Ok(p)
        })
        .collect()
}

struct Loaded {
    graph: Option<Graph>,
    ideal: MonomialIdeal,
    order: GeneratorOrder,
}

fn load(cli: &Cli, input: &Input) -> Result<Loaded, Error> {
    let (graph, ideal) = match (&input.graph, &input.ideal) {
        (Some(p), _) => {
            let g = read_graph(p)?;
            let i = closed_neighborhood_ideal(&g)?.ideal;
            (Some(g), i)
        }
        (None, Some(p)) => (None, ideal_from_json(&std::fs::read_to_string(p)?)?),
        (None, None) => return Err(Error::BadParams("need --graph or --ideal".into())),
    };
    let is_tree = graph.as_ref().is_some_and(Graph::is_tree);
    let kind = match (cli.order, &cli.order_file) {
        (Some(k), _) => k,
        (None, Some(_)) => OrderKind::File,
        (None, None) if is_tree => OrderKind::TreeLex,
        (None, None) => OrderKind::Canonical,
    };
    let order = match kind {
        OrderKind::TreeLex => {
            let g = graph.as_ref().filter(|_| is_tree).ok_or(Error::NotATree)?;
            tree_lex_order(&root_and_label(g, input.root)?, &ideal)?
        }
        OrderKind::Canonical => GeneratorOrder::identity(ideal.len()),
        OrderKind::File => {
            let p = cli
                .order_file
                .as_ref()
                .ok_or_else(|| Error::BadParams("--order file needs --order-file".into()))?;
            order_from_json(&std::fs::read_to_string(p)?)?
        }
    };
    if order.len() != ideal.len() {
        return Err(Error::InvalidOrder(format!(
            "order has {} entries for {} generators",
            order.len(),
            ideal.len()
        )));
    }
    Ok(Loaded {
        graph,
        ideal,
        order,
    })
}

fn subset_names(ideal: &MonomialIdeal, s: bm::GenSubset) -> Vec<String> {
    s.iter().map(|i| ideal.generator(i).to_string()).collect()
}

fn print_table(t: &BettiTable) {
    print!("{}", t.render());
    println!("{}", t.to_json());
}

fn cmd_betti(cli: &Cli, input: &Input) -> Result<(), Fail> {
    let l = load(cli, input)?;
    let tables = BmTables::new(&l.ideal)?;
    let friendly = tables.is_bridge_friendly(&l.order);
    let table = tables.betti(&l.order);
    let mut verdict = None;
    if let Some(spec) = &cli.oracle {
        let mut diffs = Vec::new();
        for p in parse_oracle(spec)? {
            let h = betti_table_homology(&l.ideal, p)?;
            diffs.extend(table.diff(&h).into_iter().map(|d| (p, d)));
        }
        verdict = Some(diffs);
    }
    let agree = verdict.as_ref().map(|d| d.is_empty());
    if cli.json {
        let v = json!({
            "ideal": l.ideal.to_string(),
            "order": l.order.perm(),
            "bridge_friendly": friendly,
            "table": table.to_json_value(),
            "ideal_table": table.shift_kind(TableKind::Ideal).to_json_value(),
            "pdim": table.pdim(),
            "reg": table.reg(),
            "oracle_agree": agree,
        });
        println!("{v}");
    } else {
        println!("ideal: {}", l.ideal);
        if !friendly {
            println!("warning: order is not bridge-friendly; counts may exceed Betti numbers");
        }
        print_table(&table);
        println!("pdim: {}", table.pdim().unwrap_or(0));
        println!("reg: {}", table.reg().unwrap_or(0));
        if let Some(d) = &verdict {
            if d.is_empty() {
                println!("oracle: AGREE");
            } else {
                println!("oracle: DISAGREE");
                for (p, (i, j, a, b)) in d {
                    println!("  p={p} ({i},{j}): critical {a}, homology {b}");
                }
            }
        }
    }
    match verdict {
        Some(d) if !d.is_empty() => Err(Fail::Disagree(format!("{} entries differ", d.len()))),
        _ => Ok(()),
    }
}

fn cmd_critical(cli: &Cli, input: &Input) -> Result<(), Fail> {
    let l = load(cli, input)?;
    let tables = BmTables::new(&l.ideal)?;
    let crit = tables.critical_sets(&l.order);
    if cli.json {
        let sets: Vec<_> = crit
            .iter()
            .map(|&s| json!({"indices": s.to_vec(), "lcm_degree": tables.lcm_degree(s)}))
            .collect();
        println!("{}", json!({ "critical": sets }));
    } else {
        for s in crit {
            println!(
                "{s}  {:?}  deg {}",
                subset_names(&l.ideal, s),
                tables.lcm_degree(s)
            );
        }
    }
    Ok(())
}

fn cmd_bridge_friendly(cli: &Cli, input: &Input, search: bool) -> Result<(), Fail> {
    let l = load(cli, input)?;
    if search {
        let sym = match &l.graph {
            Some(g) => generator_symmetries(g, &l.ideal),
            None => Vec::new(),
        };
        let found = bm::find_bridge_friendly_order(&l.ideal, &sym)?;
        match (&found, cli.json) {
            (Some(o), true) => println!("{}", order_to_json(o)),
            (None, true) => println!("{}", json!({ "order": null })),
            (Some(o), false) => println!("bridge-friendly order: {:?}", o.perm()),
            (None, false) => println!("no bridge-friendly order"),
        }
        return Ok(());
    }
    let tables = BmTables::new(&l.ideal)?;
    let friendly = tables.is_bridge_friendly(&l.order);
    let sufficient = bm::satisfies_sufficient_condition(&l.ideal, &l.order)?;
    if cli.json {
        println!(
            "{}",
            json!({"order": l.order.perm(), "bridge_friendly": friendly, "sufficient_condition": sufficient})
        );
    } else {
        println!("order: {:?}", l.order.perm());
        println!("bridge-friendly: {friendly}");
        println!("sufficient condition: {sufficient}");
    }
    Ok(())
}

fn cmd_algorithm1(cli: &Cli, graph: &Path, root: usize) -> Result<(), Fail> {
    let g = read_graph(graph)?;
    let ctx = TreeBm::new(&g, root)?;
    let w = max_critical_set(&ctx)?;
    if cli.json {
        println!("{}", serde_json::to_string(&w).map_err(Error::from)?);
    } else {
        let sigma: Vec<String> = w
            .sigma
            .iter()
            .map(|&i| ctx.ni.ideal.generator(i).to_string())
            .collect();
        let verts: Vec<String> = w.v_sigma.iter().map(|&v| g.label(v)).collect();
        println!("sigma: {{{}}}", sigma.join(", "));
        println!("V_sigma: {{{}}}", verts.join(", "));
        println!("size: {}", w.v_sigma.len());
    }
    Ok(())
}

fn cmd_path_formulas(cli: &Cli, n: usize) -> Result<(), Fail> {
    if n < 3 {
        return Err(Error::BadParams("path formulas need n >= 3".into()).into());
    }
    let ideal = path_table_closed(n)?;
    let quotient = ideal.shift_kind(TableKind::Quotient);
    let mismatches = collapsed_formula_mismatches(n..=n).len();
    if cli.json {
        let v = json!({
            "n": n,
            "ideal": ideal.to_json_value(),
            "quotient": quotient.to_json_value(),
            "collapsed_formula_mismatches": mismatches,
        });
        println!("{v}");
    } else {
        println!("NI(P_{n}), ideal:");
        print_table(&ideal);
        println!("R/NI(P_{n}), quotient:");
        print_table(&quotient);
        println!("entries where the collapsed closed form differs: {mismatches}");
    }
    Ok(())
}

fn cmd_classify(graph: &Path) -> Result<(), Fail> {
    let g = read_graph(graph)?;
    let r = classify(&g)?;
    println!("{}", serde_json::to_string(&r).map_err(Error::from)?);
    Ok(())
}

fn cmd_survey(cli: &Cli, max_n: usize, out: &Path, big: bool, timings: bool) -> Result<(), Fail> {
    let primes = match &cli.oracle {
        Some(s) => parse_oracle(s)?,
        None => Vec::new(),
    };
    let s = run_survey(
        max_n,
        out,
        &SurveyOptions {
            primes,
            timings,
            big,
        },
    )?;
    println!("{}", serde_json::to_string(&s).map_err(Error::from)?);
    if s.failures.is_empty() {
        Ok(())
    } else {
        Err(Fail::Verify)
    }
}

fn cmd_verify_paper(cli: &Cli) -> Result<(), Fail> {
    let long = cli.long || std::env::var("BMRES_LONG").is_ok_and(|v| v == "1");
    let outcomes = run_fixtures(long);
    let mut failed = false;
    for o in &outcomes {
        match &o.error {
            None => println!("PASS  {}  ({} ms)", o.name, o.millis),
            Some(e) => {
                failed = true;
                println!("FAIL  {}  ({} ms)\n      {e}", o.name, o.millis);
            }
        }
    }
    if !long {
        println!("skip  C_10 non-bridge-friendly (pass --long or set BMRES_LONG=1)");
    }
    if failed {
        Err(Fail::Verify)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Betti(i) => cmd_betti(&cli, i),
        Cmd::Critical(i) => cmd_critical(&cli, i),
        Cmd::BridgeFriendly { input, search } => cmd_bridge_friendly(&cli, input, *search),
        Cmd::Algorithm1 { graph, root } => cmd_algorithm1(&cli, graph, *root),
        Cmd::PathFormulas { n } => cmd_path_formulas(&cli, *n),
        Cmd::Classify { graph } => cmd_classify(graph),
        Cmd::Survey {
            max_n,
            out,
            big,
            timings,
        } => cmd_survey(&cli, *max_n, out, *big, *timings),
        Cmd::VerifyPaper => cmd_verify_paper(&cli),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Fail::Disagree(msg)) => {
            eprintln!("oracle disagreement: {msg}");
            ExitCode::from(4)
        }
        Err(Fail::Verify) => ExitCode::from(1),
    }
}
