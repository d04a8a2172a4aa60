use std::path::PathBuf;
use std::process::ExitCode;

use bcshift::config::{parse_complex, parse_list, parse_mult, parse_picture, parse_sign};
use bcshift::error::{EXIT_OK, EXIT_USAGE};
use bcshift::output::emit;
use bcshift::{CliError, Command, Format, RunConfig};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bcshift", version, about = "Hypergeometric functions for BC_n, rank-one shift operators and the chi-spherical transform")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Rank n of BC_n.
    #[arg(long, default_value_t = 1)]
    rank: usize,
    /// Multiplicity triple m_s,m_m,m_l.
    #[arg(long, default_value = "2,0,1", allow_hyphen_values = true)]
    mult: String,
    /// Character power l.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    l: i64,
    /// Spectral parameter component as re or re,im; repeat once per coordinate
    /// (or once per transform sample).
    #[arg(long, allow_hyphen_values = true)]
    lambda: Vec<String>,
    /// Point coordinates, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// Series truncation order.
    #[arg(long)]
    order: Option<usize>,
    /// Gauss-Legendre nodes.
    #[arg(long, default_value_t = 200)]
    nodes: usize,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// json or csv.
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate F(lambda, m) or a chi-spherical function.
    Eval {
        #[command(flatten)]
        common: Common,
        /// chamber, frobenius or spherical.
        #[arg(long, default_value = "chamber")]
        route: String,
        /// plus or minus (spherical route).
        #[arg(long, default_value = "plus")]
        sign: String,
        /// compact or noncompact (spherical route).
        #[arg(long, default_value = "compact")]
        picture: String,
    },
    /// The normalized c-function and c(lambda) c(-lambda).
    C {
        #[command(flatten)]
        common: Common,
    },
    /// Harish-Chandra series coefficients up to height --order.
    GammaTable {
        #[command(flatten)]
        common: Common,
    },
    /// Run invariant suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// weyl, shift, sign, adjoint, transform or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Rank-one chi-spherical transform of a standard bump.
    Transform {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0.3)]
        r: f64,
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// direct, shifted or both.
        #[arg(long, default_value = "both")]
        route: String,
        #[arg(long, default_value = "compact")]
        picture: String,
    },
    /// Fitted exponential type of the transform along a ray.
    Growth {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0.3)]
        r: f64,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, default_value_t = 80.0)]
        xi_max: f64,
        #[arg(long, default_value_t = 16)]
        xi_count: usize,
        #[arg(long, default_value = "noncompact")]
        picture: String,
        /// Also write whitespace separated plot data here.
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Residual table for the E- chain against the directly built function.
    ShiftVerify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, default_value_t = 20)]
        points: usize,
    },
}

fn build(cli: Cli) -> Result<RunConfig, CliError> {
    let (common, command) = match cli.cmd {
        Cmd::Eval { common, route, sign, picture } => (
            common,
            Command::Eval {
                route: route.parse()?,
                sign: parse_sign(&sign)?,
                picture: parse_picture(&picture)?,
            },
        ),
        Cmd::C { common } => (common, Command::CFunction),
        Cmd::GammaTable { common } => (common, Command::GammaTable),
        Cmd::Verify { common, suite } => (common, Command::Verify { suite: suite.parse()? }),
        Cmd::Transform { common, r, q, route, picture } => (
            common,
            Command::Transform {
                radius: r,
                q,
                route: route.parse()?,
                picture: parse_picture(&picture)?,
            },
        ),
        Cmd::Growth { common, r, q, xi_max, xi_count, picture, plot } => (
            common,
            Command::Growth {
                radius: r,
                q,
                xi_max,
                xi_count,
                picture: parse_picture(&picture)?,
                plot,
            },
        ),
        Cmd::ShiftVerify { common, q, points } => (common, Command::ShiftVerify { q, points }),
    };
    let mut cfg = RunConfig::new(command);
    cfg.rank = common.rank;
    cfg.mult = parse_mult(&common.mult)?;
    cfg.l = common.l;
    cfg.lambda = common.lambda.iter().map(|s| parse_complex(s)).collect::<Result<_, _>>()?;
    cfg.point = match &common.point {
        Some(p) => parse_list(p, "--point")?,
        None => Vec::new(),
    };
    cfg.order = common.order;
    cfg.nodes = common.nodes;
    cfg.out = common.out;
    cfg.format = common.format.parse::<Format>()?;
    cfg.seed = common.seed;
    Ok(cfg)
}

fn fail(err: &CliError) -> ExitCode {
    eprintln!("bcshift: {err}");
    let json = serde_json::to_string_pretty(&err.report()).unwrap_or_default();
    println!("{json}");
    ExitCode::from(err.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let cfg = match build(cli) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    let rendered = match bcshift::run(&cfg) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let text = match rendered.text(cfg.format) {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };
    if let Err(e) = emit(&text, cfg.out.as_deref()) {
        return fail(&e);
    }
    ExitCode::from(rendered.status as u8)
}
