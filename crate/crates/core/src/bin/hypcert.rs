use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use hypcert::cli::corpus;
use hypcert::cli::task::{RatText, SubspaceSpec, Task, TaskDocument};
use hypcert::cli::{run, summary};
use hypcert::engine::{Sampler, SamplerKind};
use hypcert::kernel::rat::parse_rat;
use hypcert::{Error, Result};

/// Exact hyperbolicity certificates.
#[derive(Parser)]
#[command(name = "hypcert", version)]
struct Cli {
    /// Print a short human-readable summary instead of the JSON certificate.
    #[arg(long, global = true)]
    summary: bool,
    /// Write the certificate to this file.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run any task document.
    Run { file: PathBuf },
    /// Bundled examples.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Scan lines through e for real-rootedness.
    CheckHypersurface(HypersurfaceArgs),
    /// Certify a rational curve through the Bézout matrix of its projection.
    CheckCurve(CurveArgs),
    /// Hyperbolicity of a quadric from its Gram signature.
    Quadric(QuadricArgs),
    /// Bézout matrix and interlacing certificate of two binary forms.
    Bezout(BezoutArgs),
    /// Hermite matrix, signature and Sturm count of a univariate polynomial.
    Hermite(HermiteArgs),
    /// Apply the Nuij sweeps and scan every intermediate polynomial.
    Nuij(NuijArgs),
    /// Canonical distraction of a monomial ideal and its fan.
    Distract(DistractArgs),
    /// Drive a fan of linear spaces to a tight fan.
    Tighten(TightenArgs),
    /// The invariant n_* of a fan or a monomial ideal.
    Nstar(NstarArgs),
    /// First-order strictness of deformations.
    DeformCheck(TaskOnly),
    /// Scan the fibers of a one-parameter family.
    FamilyScan(TaskOnly),
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
    Run { name: String },
    /// Print the task document of an item.
    Show { name: String },
}

#[derive(Args)]
struct TaskOnly {
    #[arg(long)]
    task: PathBuf,
}

#[derive(Args)]
struct SamplerArgs {
    /// Number of sampled lines.
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Use a grid instead of random directions.
    #[arg(long)]
    grid: bool,
}

impl SamplerArgs {
    fn sampler(&self) -> Sampler {
        let kind = if self.grid { SamplerKind::Grid } else { SamplerKind::Random };
        Sampler { kind, count: self.count, seed: self.seed }
    }
}

#[derive(Args)]
struct HypersurfaceArgs {
    #[arg(long, conflicts_with_all = ["poly", "nvars", "e"])]
    task: Option<PathBuf>,
    #[arg(long)]
    poly: Option<String>,
    #[arg(long)]
    nvars: Option<usize>,
    /// Comma-separated coordinates, e.g. `1,0,-1/2`.
    #[arg(long)]
    e: Option<String>,
    #[command(flatten)]
    sampler: SamplerArgs,
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long, conflicts_with_all = ["forms", "degree", "center"])]
    task: Option<PathBuf>,
    /// Coordinate forms in x0 = s, x1 = t, separated by `;`.
    #[arg(long)]
    forms: Option<String>,
    #[arg(long)]
    degree: Option<usize>,
    /// Points spanning the center, separated by `;`.
    #[arg(long)]
    center: Option<String>,
}

#[derive(Args)]
struct QuadricArgs {
    #[arg(long, conflicts_with_all = ["poly", "nvars", "e"])]
    task: Option<PathBuf>,
    #[arg(long)]
    poly: Option<String>,
    #[arg(long)]
    nvars: Option<usize>,
    #[arg(long)]
    e: Option<String>,
}

#[derive(Args)]
struct BezoutArgs {
    #[arg(long, conflicts_with_all = ["p", "q", "degree"])]
    task: Option<PathBuf>,
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    degree: Option<usize>,
}

#[derive(Args)]
struct HermiteArgs {
    #[arg(long, conflicts_with = "poly")]
    task: Option<PathBuf>,
    /// A polynomial in x0.
    #[arg(long)]
    poly: Option<String>,
}

#[derive(Args)]
struct NuijArgs {
    #[arg(long, conflicts_with_all = ["poly", "nvars", "e", "s"])]
    task: Option<PathBuf>,
    #[arg(long)]
    poly: Option<String>,
    #[arg(long)]
    nvars: Option<usize>,
    #[arg(long)]
    e: Option<String>,
    #[arg(long)]
    s: Option<String>,
    #[command(flatten)]
    sampler: SamplerArgs,
}

#[derive(Args)]
struct DistractArgs {
    #[arg(long, conflicts_with_all = ["ideal", "nvars", "k"])]
    task: Option<PathBuf>,
    #[arg(long)]
    ideal: Option<String>,
    #[arg(long)]
    nvars: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct TightenArgs {
    #[arg(long, conflicts_with_all = ["fan", "nvars", "k"])]
    task: Option<PathBuf>,
    /// Components separated by `;`.
    #[arg(long)]
    fan: Option<String>,
    #[arg(long)]
    nvars: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = hypcert::fanlab::DEFAULT_MU_BUDGET)]
    mu_budget: usize,
}

#[derive(Args)]
struct NstarArgs {
    #[arg(long, conflicts_with_all = ["fan", "ideal", "nvars", "k"])]
    task: Option<PathBuf>,
    #[arg(long, conflicts_with = "ideal")]
    fan: Option<String>,
    #[arg(long)]
    ideal: Option<String>,
    #[arg(long)]
    nvars: Option<usize>,
    #[arg(long, default_value_t = 0)]
    k: usize,
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::Task(format!("missing --{flag} (or pass --task FILE)")))
}

fn rat_list(s: &str) -> Result<Vec<RatText>> {
    s.split(',').map(|x| parse_rat(x.trim()).map(RatText)).collect()
}

fn point_list(s: &str) -> Result<Vec<Vec<RatText>>> {
    s.split(';').map(rat_list).collect()
}

fn read_task(path: &Path, kind: &str) -> Result<TaskDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Task(format!("{}: {e}", path.display())))?;
    let doc = TaskDocument::from_json(&text)?;
    if doc.task.kind() != kind {
        return Err(Error::Task(format!("expected a `{kind}` task, found `{}`", doc.task.kind())));
    }
    Ok(doc)
}

fn document(command: Command) -> Result<Option<TaskDocument>> {
    let doc = match command {
        Command::Run { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| Error::Task(format!("{}: {e}", file.display())))?;
            TaskDocument::from_json(&text)?
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                for name in corpus::names() {
                    let doc = corpus::load(name)?;
                    let tag = if doc.extended { " (extended)" } else { "" };
                    println!("{name:32} {}{tag}", doc.task.kind());
                }
                return Ok(None);
            }
            CorpusAction::Show { name } => {
                print!("{}", corpus::source(&name)?);
                return Ok(None);
            }
            CorpusAction::Run { name } => corpus::load(&name)?,
        },
        Command::CheckHypersurface(a) => match a.task {
            Some(p) => read_task(&p, "check_hypersurface")?,
            None => TaskDocument::new(Task::CheckHypersurface {
                poly: need(a.poly, "poly")?,
                nvars: need(a.nvars, "nvars")?,
                e: rat_list(&need(a.e, "e")?)?,
                sampler: a.sampler.sampler(),
            }),
        },
        Command::CheckCurve(a) => match a.task {
            Some(p) => read_task(&p, "check_curve")?,
            None => TaskDocument::new(Task::CheckCurve {
                forms: need(a.forms, "forms")?.split(';').map(|s| s.trim().to_string()).collect(),
                degree: need(a.degree, "degree")?,
                center: SubspaceSpec { points: point_list(&need(a.center, "center")?)?, forms: vec![] },
            }),
        },
        Command::Quadric(a) => match a.task {
            Some(p) => read_task(&p, "quadric")?,
            None => TaskDocument::new(Task::Quadric {
                poly: need(a.poly, "poly")?,
                nvars: need(a.nvars, "nvars")?,
                e: rat_list(&need(a.e, "e")?)?,
            }),
        },
        Command::Bezout(a) => match a.task {
            Some(p) => read_task(&p, "bezout")?,
            None => TaskDocument::new(Task::Bezout {
                p: need(a.p, "p")?,
                q: need(a.q, "q")?,
                degree: need(a.degree, "degree")?,
            }),
        },
        Command::Hermite(a) => match a.task {
            Some(p) => read_task(&p, "hermite")?,
            None => TaskDocument::new(Task::Hermite { poly: need(a.poly, "poly")? }),
        },
        Command::Nuij(a) => match a.task {
            Some(p) => read_task(&p, "nuij")?,
            None => TaskDocument::new(Task::Nuij {
                poly: need(a.poly, "poly")?,
                nvars: need(a.nvars, "nvars")?,
                e: rat_list(&need(a.e, "e")?)?,
                s: RatText(parse_rat(&need(a.s, "s")?)?),
                sampler: a.sampler.sampler(),
            }),
        },
        Command::Distract(a) => match a.task {
            Some(p) => read_task(&p, "distract")?,
            None => TaskDocument::new(Task::Distract {
                ideal: need(a.ideal, "ideal")?,
                nvars: need(a.nvars, "nvars")?,
                k: need(a.k, "k")?,
                assignment: None,
                seed: a.seed,
            }),
        },
        Command::Tighten(a) => match a.task {
            Some(p) => read_task(&p, "tighten")?,
            None => TaskDocument::new(Task::Tighten {
                fan: need(a.fan, "fan")?,
                nvars: need(a.nvars, "nvars")?,
                k: need(a.k, "k")?,
                mu_budget: a.mu_budget,
            }),
        },
        Command::Nstar(a) => match a.task {
            Some(p) => read_task(&p, "nstar")?,
            None => TaskDocument::new(Task::Nstar { fan: a.fan, ideal: a.ideal, nvars: need(a.nvars, "nvars")?, k: a.k }),
        },
        Command::DeformCheck(a) => read_task(&a.task, "deform_check")?,
        Command::FamilyScan(a) => read_task(&a.task, "family_scan")?,
    };
    Ok(Some(doc))
}

fn execute(cli: Cli) -> Result<i32> {
    let Some(doc) = document(cli.command)? else {
        return Ok(0);
    };
    let cert = run(&doc)?;
    let json = cert.to_json();
    let target = cli.output.or_else(|| doc.output.as_ref().map(PathBuf::from));
    if let Some(path) = &target {
        std::fs::write(path, &json).map_err(|e| Error::Task(format!("{}: {e}", path.display())))?;
    }
    if cli.summary {
        print!("{}", summary(&cert));
    } else if target.is_none() {
        print!("{json}");
    }
    Ok(cert.exit_code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match execute(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
