use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use schurtrails::partitions::parse_int_list;
use schurtrails::schur::Point;
use schurtrails::trails::{count_noncrossing_matchings, render_svg, ChangingTrail, GraphConfig};

mod jobs;

use jobs::{Job, Outcome};

#[derive(Parser, Debug)]
#[command(name = "schurtrails", version, about = "Verify Schur function identities by lattice paths and changing trails")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check one identity.
    Verify {
        #[command(subcommand)]
        identity: Identity,
    },
    /// Exhaustively audit the bijection behind the two-term identity.
    Audit(jobs::AuditArgs),
    /// Close a set of objects under recolouring from selected terminals.
    Orbit(jobs::OrbitArgs),
    /// Draw a two-coloured graph and selected trails as SVG.
    Render(RenderArgs),
    /// Number of noncrossing perfect matchings of 2n points.
    Catalan {
        #[arg(long)]
        points: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Identity {
    General(jobs::GeneralArgs),
    Kirillov(jobs::GeneralArgs),
    Dodgson(jobs::DodgsonArgs),
    Pluecker(jobs::PlueckerArgs),
    Ciucu(jobs::CiucuArgs),
    Kleber(jobs::KleberArgs),
}

#[derive(Args, Debug)]
struct RenderArgs {
    /// Graph JSON `{"blue": [..], "green": [..]}`; `-` reads stdin.
    #[arg(long)]
    graph: String,
    /// Terminal point `x,y` to trace a trail from; repeatable.
    #[arg(long = "trail-from", value_parser = parse_point)]
    trail_from: Vec<Point>,
}

fn parse_point(s: &str) -> Result<Point, String> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    match parse_int_list(t).map_err(|e| e.to_string())?.as_slice() {
        &[x, y] => Ok(Point::new(x, y)),
        _ => Err(format!("expected x,y, got {s:?}")),
    }
}

enum Failure {
    Usage(String),
    Failed,
}

fn emit(cli: &Cli, body: &str) -> Result<(), Failure> {
    let res = match &cli.out {
        Some(path) => fs::write(path, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    };
    res.map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

fn run_job<J: Job>(cli: &Cli, job: &J) -> Result<(), Failure> {
    let points = job.sweep_points().map_err(Failure::Usage)?;
    let outcomes: Vec<Result<Outcome, String>> = points.par_iter().map(|p| p.run().map_err(|e| e.to_string())).collect();
    let mut body = String::new();
    let mut all_ok = true;
    for o in outcomes {
        let o = o.map_err(Failure::Usage)?;
        all_ok &= o.ok;
        match cli.format {
            Format::Json => body.push_str(&o.json.to_string()),
            Format::Text => body.push_str(o.text.trim_end()),
        }
        body.push('\n');
    }
    emit(cli, &body)?;
    if all_ok { Ok(()) } else { Err(Failure::Failed) }
}

fn render(cli: &Cli, args: &RenderArgs) -> Result<(), Failure> {
    let raw = if args.graph == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(e.to_string()))?;
        s
    } else {
        fs::read_to_string(&args.graph).map_err(|e| Failure::Usage(format!("{}: {e}", args.graph)))?
    };
    let config: GraphConfig = serde_json::from_str(&raw).map_err(|e| Failure::Usage(format!("malformed graph: {e}")))?;
    let g = config.build().map_err(|e| Failure::Usage(e.to_string()))?;
    let trails: Vec<ChangingTrail> = args
        .trail_from
        .iter()
        .map(|&p| g.trace_from_point(p))
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    emit(cli, &render_svg(&g, &trails))
}

fn dispatch(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Verify { identity } => match identity {
            Identity::General(a) => run_job(cli, &jobs::General { args: a.clone(), kirillov: false }),
            Identity::Kirillov(a) => run_job(cli, &jobs::General { args: a.clone(), kirillov: true }),
            Identity::Dodgson(a) => run_job(cli, a),
            Identity::Pluecker(a) => run_job(cli, a),
            Identity::Ciucu(a) => run_job(cli, a),
            Identity::Kleber(a) => run_job(cli, a),
        },
        Command::Audit(a) => run_job(cli, a),
        Command::Orbit(a) => run_job(cli, a),
        Command::Render(a) => render(cli, a),
        Command::Catalan { points } => {
            let c = count_noncrossing_matchings(*points).map_err(|e| Failure::Usage(e.to_string()))?;
            emit(cli, &format!("{c}\n"))
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("SCHURTRAILS_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    configure_threads();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
