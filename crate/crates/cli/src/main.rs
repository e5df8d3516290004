//! `orthogrid`: campaigns, constructions and checks from the command line.

mod commands;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "orthogrid", version, about = "Orthogonal colourings of clique grids and random geometric graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Options shared by the campaign subcommands.
#[derive(Args, Debug, Clone)]
pub struct CampaignArgs {
    /// TOML or JSON experiment configuration; flags below override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory for `<stem>.csv` and `<stem>.json`.
    #[arg(long, env = "ORTHOGRID_OUTPUT_DIR")]
    pub out_dir: Option<PathBuf>,
    #[arg(long)]
    pub stem: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the explicit colourings of H(m, d, t) over a parameter range.
    #[command(name = "theorem1-suite")]
    TheoremOneSuite {
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long)]
        max_d: Option<usize>,
        #[arg(long)]
        max_t: Option<usize>,
        /// Largest mt for which the exhaustive oracle runs.
        #[arg(long)]
        oracle_max_vertices: Option<usize>,
        #[command(flatten)]
        common: CampaignArgs,
    },
    /// Dense-regime campaign on RG(n, n^-alpha).
    Dense {
        /// Comma-separated point counts.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        /// Exponent, as a number or a fraction such as 1/4.
        #[arg(long)]
        alpha: Option<String>,
        #[command(flatten)]
        common: CampaignArgs,
    },
    /// Equal-count campaign on RG(m²t², c·n^-1/4).
    Optimal {
        /// Comma-separated shapes `MxT`, e.g. `20x5,10x2`.
        #[arg(long, value_delimiter = ',')]
        grid: Vec<String>,
        #[arg(long)]
        c: Option<f64>,
        /// Override the derived clique-grid distance.
        #[arg(long)]
        d: Option<usize>,
        #[command(flatten)]
        common: CampaignArgs,
    },
    /// Sample, colour and draw one instance as SVG.
    Render(RenderArgs),
    /// Check a colouring pair against an edge-list graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        colouring: PathBuf,
    },
    /// Write H(m, d, t) or L(m², d, t²) and its explicit colouring.
    Construct {
        #[arg(value_enum)]
        which: GraphKind,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: usize,
        /// Edge-list output; stdout when omitted.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Colouring JSON output.
        #[arg(long)]
        colouring: Option<PathBuf>,
    },
    /// Sample a point set and write it as CSV, optionally with its graph.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GraphKind {
    H,
    L,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RenderRegime {
    Dense,
    Optimal,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    #[arg(long, value_enum, default_value = "dense")]
    pub regime: RenderRegime,
    /// Point count (dense regime).
    #[arg(long, default_value_t = 500)]
    pub n: usize,
    #[arg(long, default_value = "1/4")]
    pub alpha: String,
    /// Grid shape (optimal regime).
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub c: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub svg: PathBuf,
    /// Also write the coloured instance as JSON.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::TheoremOneSuite {
            max_m,
            max_d,
            max_t,
            oracle_max_vertices,
            common,
        } => commands::theorem_one(max_m, max_d, max_t, oracle_max_vertices, &common),
        Command::Dense { n, alpha, common } => commands::dense(n, alpha, &common),
        Command::Optimal { grid, c, d, common } => commands::optimal(grid, c, d, &common),
        Command::Render(args) => commands::render(&args),
        Command::Verify { graph, colouring } => commands::verify(&graph, &colouring),
        Command::Construct {
            which,
            m,
            d,
            t,
            graph,
            colouring,
        } => commands::construct(which, m, d, t, graph.as_deref(), colouring.as_deref()),
        Command::Sample {
            n,
            r,
            seed,
            out,
            graph,
        } => commands::sample(n, r, seed, &out, graph.as_deref()),
    }
}
