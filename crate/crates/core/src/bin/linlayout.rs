//! `linlayout`: generate graphs, build and check layouts, run exact searches
//! and the twist-extraction pipeline from the command line.
//!
//! Exit codes: 0 ok or valid, 1 invalid layout, 2 input error, 3 algorithm
//! not applicable to the input, 4 size limit exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use linear_layouts::counterexample::{counterexample_graph, parameters_for, run_pipeline};
use linear_layouts::exact::{
    bound_formulas, queue_number_exact_with, stack_number_exact_with, vc_stack_upper, ExactOptions,
};
use linear_layouts::families::{
    complete_bipartite_queue_layout, complete_queue_layout, complete_stack_layout,
    hex_strict_queue_layout, k_tree_stack_layout, one_stack_to_two_queue, outerplanar_stack_layout,
    three_stack_subdivision, tree_queue_layout, tree_stack_layout, unicyclic_queue_layout,
    x_tree_layouts,
};
use linear_layouts::graph::random::{
    random_graph, random_k_tree_build, random_permutation, random_polygon_triangulation,
    random_tree, random_unicyclic, seeded,
};
use linear_layouts::graph::{
    cartesian_product, complete, complete_bipartite, cycle, fan, hex_dual, make_k_tree,
    parse_graph, path, star, write_graph, x_tree, KTreeBuild,
};
use linear_layouts::layout::{
    layout_from_json, layout_to_json, max_rainbow, max_twist, min_stacks_fixed_order,
    two_stack_from_hamiltonian, validate, Mode,
};
use linear_layouts::render::render_svg;
use linear_layouts::{Error, Graph, Layout, LinearOrder, Vertex};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "linlayout",
    version,
    about = "Stack and queue layouts of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph file for a named family.
    Gen(GenArgs),
    /// Build a layout of a graph with a named algorithm.
    Layout(LayoutArgs),
    /// Check a layout against a graph.
    Verify(VerifyArgs),
    /// Exact stack or queue number by exhaustive search.
    Exact(ExactArgs),
    /// Largest twist or rainbow under a fixed order.
    Witness(WitnessArgs),
    /// Evaluate a closed-form bound.
    Bounds(BoundsArgs),
    /// Extract a twist from an order of S_a x H_n.
    Pipeline(PipelineArgs),
    /// Draw a layout as an SVG arc diagram.
    Render(RenderArgs),
}

#[derive(Args)]
struct GenArgs {
    /// complete, complete-bipartite, path, cycle, star, fan, xtree, hexdual,
    /// ktree, tree, unicyclic, triangulation, random, product
    family: String,
    params: Vec<usize>,
    /// Left factor of `product`, as family:param[:param]
    #[arg(long)]
    left: Option<String>,
    /// Right factor of `product`
    #[arg(long)]
    right: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LayoutArgs {
    graph: PathBuf,
    /// tree-stack, tree-queue, unicyclic-queue, complete-stack, complete-queue,
    /// complete-bipartite-queue, xtree-stack, xtree-queue, ktree-stack,
    /// outerplanar-stack, one-stack-two-queue, hex-strict-queue, two-stack,
    /// rainbow, greedy-stack, exact-stack-order, vc-stack, subdivision,
    /// exact-stack, exact-queue
    algorithm: String,
    /// Root for tree layouts
    #[arg(long, default_value_t = 0)]
    root: Vertex,
    /// Vertex order (comma separated) for order-based algorithms; defaults to 0..n
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<Vertex>>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where `subdivision` writes the subdivided graph
    #[arg(long)]
    graph_out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    graph: PathBuf,
    layout: PathBuf,
    /// Also enforce the strict queue rule
    #[arg(long)]
    strict: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Stack,
    Queue,
}

#[derive(Args)]
struct ExactArgs {
    graph: PathBuf,
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Largest component to search
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    no_symmetry: bool,
    #[arg(long)]
    no_pruning: bool,
    /// Write the optimal layout here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKindArg {
    Twist,
    Rainbow,
}

#[derive(Args)]
struct WitnessArgs {
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "twist")]
    kind: WitnessKindArg,
    /// Take the order from this layout file
    #[arg(long)]
    layout: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<Vertex>>,
    /// Exact maximum twist instead of a greedy one
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct BoundsArgs {
    name: String,
    params: Vec<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderKind {
    /// Copies of each star vertex together
    Identity,
    /// The order of the 4-queue layout: copies of each grid vertex together
    Layout,
    /// Uniform random order from --seed
    Random,
}

#[derive(Args)]
struct PipelineArgs {
    #[arg(short, long, default_value_t = 6)]
    a: usize,
    #[arg(short, long, default_value_t = 2)]
    n: usize,
    #[arg(short, long, default_value_t = 3)]
    c: usize,
    #[arg(short, long, default_value_t = 3)]
    d: usize,
    #[arg(long, value_enum, default_value = "layout")]
    order: OrderKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the parameters forcing more than S stacks instead of running
    #[arg(long, value_name = "S")]
    params: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    graph: PathBuf,
    layout: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::SizeLimit { .. } => 4,
            Error::NotTwoPageEmbeddable { .. } | Error::NotOuterplanar(..) => 3,
            Error::InvalidLayout(_)
            | Error::TheoremViolation(_)
            | Error::MonotonicityViolation(..)
            | Error::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn fail<T>(code: u8, message: impl Into<String>) -> CliResult<T> {
    Err(Failure {
        code,
        message: message.into(),
    })
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure {
            code: 2,
            message: format!("{}: {e}", p.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    Ok(parse_graph(&read(path)?)?)
}

fn load_layout(path: &Path) -> CliResult<Layout> {
    Ok(layout_from_json(&read(path)?)?)
}

fn param(params: &[usize], i: usize, family: &str) -> CliResult<usize> {
    match params.get(i) {
        Some(&v) => Ok(v),
        None => fail(2, format!("{family} needs {} parameter(s)", i + 1)),
    }
}

fn generate(family: &str, params: &[usize], seed: u64) -> CliResult<Graph> {
    let p = |i| param(params, i, family);
    let mut rng = seeded(seed);
    let g = match family {
        "complete" => complete(p(0)?)?,
        "complete-bipartite" => complete_bipartite(p(0)?, p(1)?)?,
        "path" => path(p(0)?)?,
        "cycle" => cycle(p(0)?)?,
        "star" => star(p(0)?)?,
        "fan" => fan(p(0)?)?,
        "xtree" => x_tree(p(0)?)?,
        "hexdual" => hex_dual(p(0)?)?,
        "ktree" => make_k_tree(&random_k_tree_build(p(0)?, p(1)?, &mut rng)?)?,
        "tree" => random_tree(p(0)?, &mut rng)?,
        "unicyclic" => random_unicyclic(p(0)?, &mut rng)?,
        "triangulation" => {
            // renumber so the outer boundary is 0..n
            let (g, boundary) = random_polygon_triangulation(p(0)?, &mut rng)?;
            let mut perm = vec![0; g.n()];
            for (i, &v) in boundary.iter().enumerate() {
                perm[v] = i;
            }
            g.relabel(&perm)?
        }
        "random" => random_graph(p(0)?, p(1)?, &mut rng)?,
        other => return fail(2, format!("unknown family `{other}`")),
    };
    Ok(g)
}

fn factor(spec: &str, seed: u64) -> CliResult<Graph> {
    let mut parts = spec.split(':');
    let family = parts.next().unwrap_or_default();
    let params: Vec<usize> = parts
        .map(|s| {
            s.parse()
                .map_err(|_| format!("bad parameter `{s}` in `{spec}`"))
        })
        .collect::<Result<_, _>>()
        .or_else(|m| fail(2, m))?;
    generate(family, &params, seed)
}

fn cmd_gen(args: GenArgs) -> CliResult<()> {
    let g = if args.family == "product" {
        let (Some(l), Some(r)) = (&args.left, &args.right) else {
            return fail(2, "product needs --left and --right");
        };
        cartesian_product(&factor(l, args.seed)?, &factor(r, args.seed)?)
    } else {
        generate(&args.family, &args.params, args.seed)?
    };
    emit(args.out.as_deref(), &write_graph(&g))
}

fn same_edges(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edges() == h.edges()
}

fn given_order(g: &Graph, order: Option<Vec<Vertex>>) -> CliResult<LinearOrder> {
    let order = order.unwrap_or_else(|| (0..g.n()).collect());
    if order.len() != g.n() {
        return fail(
            2,
            format!("order lists {} vertices, graph has {}", order.len(), g.n()),
        );
    }
    Ok(LinearOrder::new(order)?)
}

/// The build of a k-tree numbered in build order, if `g` is one.
fn k_tree_build_of(g: &Graph) -> Option<KTreeBuild> {
    let n = g.n();
    let k = (1..=n).find(|&k| k * (k - 1) / 2 + k * (n - k) == g.m())?;
    let attachments = (k..n)
        .map(|v| g.neighbors(v).iter().copied().filter(|&w| w < v).collect())
        .collect();
    let build = KTreeBuild { k, attachments };
    let h = make_k_tree(&build).ok()?;
    same_edges(g, &h).then_some(build)
}

fn inapplicable<T>(algorithm: &str, why: impl std::fmt::Display) -> CliResult<T> {
    fail(3, format!("{algorithm} does not apply: {why}"))
}

fn cmd_layout(args: LayoutArgs) -> CliResult<()> {
    let g = load_graph(&args.graph)?;
    let algo = args.algorithm.as_str();
    let n = g.n();
    // precondition failures of constructions mean the algorithm does not apply
    let applies = |r: linear_layouts::Result<Layout>| r.or_else(|e| inapplicable(algo, e));
    let layout = match algo {
        "tree-stack" => applies(tree_stack_layout(&g, args.root))?,
        "tree-queue" => applies(tree_queue_layout(&g, args.root).map(|x| x.0))?,
        "unicyclic-queue" => applies(unicyclic_queue_layout(&g).map(|x| x.0))?,
        "complete-stack" | "complete-queue" => {
            if n == 0 || !same_edges(&g, &complete(n)?) {
                return inapplicable(algo, "not a complete graph");
            }
            if algo == "complete-stack" {
                complete_stack_layout(n)?
            } else {
                complete_queue_layout(n)?
            }
        }
        "complete-bipartite-queue" => {
            let m = (1..n)
                .find(|&m| same_edges(&g, &complete_bipartite(m, n - m).expect("positive sizes")));
            match m {
                Some(m) => complete_bipartite_queue_layout(m, n - m)?,
                None => return inapplicable(algo, "not K_{m,n} with parts 0..m and m..m+n"),
            }
        }
        "xtree-stack" | "xtree-queue" => {
            let d = (0..20).find(|&d| (1usize << (d + 1)) - 1 == n);
            match d {
                Some(d) if same_edges(&g, &x_tree(d)?) => {
                    let (s, q) = x_tree_layouts(d)?;
                    if algo == "xtree-stack" {
                        s
                    } else {
                        q
                    }
                }
                _ => return inapplicable(algo, "not an X-tree in heap numbering"),
            }
        }
        "hex-strict-queue" => {
            let side = (1..=n).find(|&s| s * s == n);
            match side {
                Some(s) if same_edges(&g, &hex_dual(s)?) => hex_strict_queue_layout(s)?.1,
                _ => return inapplicable(algo, "not a hex grid dual in row-major numbering"),
            }
        }
        "ktree-stack" => match k_tree_build_of(&g) {
            Some(build) => k_tree_stack_layout(&build)?,
            None => return inapplicable(algo, "not a k-tree numbered in build order"),
        },
        "outerplanar-stack" => {
            let order = given_order(&g, args.order)?;
            applies(outerplanar_stack_layout(&g, order.as_slice()))?
        }
        "one-stack-two-queue" => {
            let order = given_order(&g, args.order)?;
            applies(one_stack_to_two_queue(&g, order.as_slice()))?
        }
        "two-stack" => applies(two_stack_from_hamiltonian(
            &g,
            &given_order(&g, args.order)?,
        ))?,
        "rainbow" => max_rainbow(&g, &given_order(&g, args.order)?).layout,
        "greedy-stack" => min_stacks_fixed_order(&g, &given_order(&g, args.order)?, Mode::Greedy)?,
        "exact-stack-order" => {
            min_stacks_fixed_order(&g, &given_order(&g, args.order)?, Mode::Exact)?
        }
        "vc-stack" => vc_stack_upper(&g)?.1,
        "exact-stack" => {
            let opts = ExactOptions {
                threads: args.threads,
                ..ExactOptions::stack()
            };
            stack_number_exact_with(&g, &opts)?.1
        }
        "exact-queue" => {
            let opts = ExactOptions {
                threads: args.threads,
                ..ExactOptions::queue()
            };
            queue_number_exact_with(&g, &opts)?.1
        }
        "subdivision" => {
            let sub = three_stack_subdivision(&g);
            match &args.graph_out {
                Some(p) => emit(Some(p), &write_graph(&sub.graph))?,
                None => return fail(2, "subdivision needs --graph-out for the subdivided graph"),
            }
            sub.layout
        }
        other => return fail(2, format!("unknown algorithm `{other}`")),
    };
    emit(args.out.as_deref(), &layout_to_json(&layout))
}

fn cmd_verify(args: VerifyArgs) -> CliResult<()> {
    let g = load_graph(&args.graph)?;
    let mut layout = load_layout(&args.layout)?;
    if args.strict {
        layout.strict = true;
    }
    let report = validate(&g, &layout)?;
    for v in &report.violations {
        println!("page {}: {} {} {:?}", v.page, v.first, v.second, v.kind);
    }
    if report.valid {
        println!(
            "valid {} layout with {} pages",
            layout.kind,
            layout.pages_used()
        );
        Ok(())
    } else {
        fail(1, format!("{} violations", report.total))
    }
}

fn cmd_exact(args: ExactArgs) -> CliResult<()> {
    let g = load_graph(&args.graph)?;
    let base = match args.kind {
        KindArg::Stack => ExactOptions::stack(),
        KindArg::Queue => ExactOptions::queue(),
    };
    let opts = ExactOptions {
        symmetry: !args.no_symmetry,
        pruning: !args.no_pruning,
        vertex_limit: args.limit.unwrap_or(base.vertex_limit),
        threads: args.threads.max(1),
    };
    let (k, layout) = match args.kind {
        KindArg::Stack => stack_number_exact_with(&g, &opts)?,
        KindArg::Queue => queue_number_exact_with(&g, &opts)?,
    };
    if let Some(p) = &args.out {
        emit(Some(p), &layout_to_json(&layout))?;
    }
    println!("{k}");
    Ok(())
}

fn cmd_witness(args: WitnessArgs) -> CliResult<()> {
    let g = load_graph(&args.graph)?;
    let order = match (&args.layout, args.order) {
        (Some(p), None) => load_layout(p)?.order,
        (None, order) => given_order(&g, order)?,
        (Some(_), Some(_)) => return fail(2, "give either --layout or --order"),
    };
    if order.len() != g.n() {
        return fail(2, "order does not match the graph");
    }
    let witness = match args.kind {
        WitnessKindArg::Rainbow => max_rainbow(&g, &order).witness,
        WitnessKindArg::Twist => {
            let mode = if args.exact {
                Mode::Exact
            } else {
                Mode::Greedy
            };
            max_twist(&g, &order, mode)?
        }
    };
    witness.verify(&order)?;
    let json = serde_json::to_string_pretty(&witness).map_err(Error::from)?;
    println!("{json}");
    Ok(())
}

fn cmd_bounds(args: BoundsArgs) -> CliResult<()> {
    println!("{}", bound_formulas(&args.name, &args.params)?);
    Ok(())
}

fn cmd_pipeline(args: PipelineArgs) -> CliResult<()> {
    let json = if let Some(s) = args.params {
        serde_json::to_string_pretty(&parameters_for(s)?)
    } else {
        let size = (args.a + 1) * args.n * args.n;
        let order = match args.order {
            OrderKind::Identity => LinearOrder::identity(size),
            OrderKind::Layout => counterexample_graph(args.a, args.n)?.1.order,
            OrderKind::Random => {
                LinearOrder::new(random_permutation(size, &mut seeded(args.seed)))?
            }
        };
        let trace = run_pipeline(args.a, args.n, &order, args.c, args.d)?;
        serde_json::to_string_pretty(&trace)
    }
    .map_err(Error::from)?;
    emit(args.out.as_deref(), &(json + "\n"))
}

fn cmd_render(args: RenderArgs) -> CliResult<()> {
    let g = load_graph(&args.graph)?;
    let layout = load_layout(&args.layout)?;
    emit(args.out.as_deref(), &render_svg(&g, &layout)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Layout(a) => cmd_layout(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Exact(a) => cmd_exact(a),
        Command::Witness(a) => cmd_witness(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Pipeline(a) => cmd_pipeline(a),
        Command::Render(a) => cmd_render(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("linlayout: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
