mod eval;
mod generate;
mod io;
mod lemma;

use std::path::PathBuf;
use std::process::ExitCode;

use bireg::json::{
    poly_to_string, GeneratorDoc, GridSpec, JobFile, JobSpec, QuadSpec, SeparableDoc,
};
use bireg::numeric::{FdConfig, FdOrder};
use clap::{Args, Parser, Subcommand};

use crate::io::{read, write_atomic, CliError, CliResult, Status};

/// Build and certify biregular polynomials with Fueter-type maps.
#[derive(Parser, Debug)]
#[command(name = "bireg", version)]
struct Cli {
    /// Maximum number of worker threads.
    #[arg(long, env = "BIREG_THREADS", global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run and certify a job or a grid of jobs.
    Generate {
        /// Job file; omit to describe the job with flags.
        job: Option<PathBuf>,
        #[command(flatten)]
        flags: JobFlags,
        /// Output file for a single job, directory for a grid.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a residual suite for one of the three lemmas.
    Lemma {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random cases per identity (Lemma 1) or points per check (Lemma 2).
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[command(flatten)]
        grid: GridFlags,
        #[command(flatten)]
        fd: FdFlags,
        /// Inject a non-harmonic input; succeed only if the suite fails.
        #[arg(long)]
        expect_fail: bool,
    },
    /// Finite-difference biregularity residuals of a polynomial.
    Eval {
        /// Polynomial file or `generate` result.
        poly: PathBuf,
        /// JSON array of points; defaults to seeded random points in [1, 2].
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[command(flatten)]
        fd: FdFlags,
    },
    /// Rewrite a polynomial or `generate` result as a canonical polynomial file.
    Export {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct JobFlags {
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    l: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    n: Vec<u32>,
    #[arg(long, value_delimiter = ',')]
    p: Vec<u32>,
    /// Indices of the left Fueter variables in P.
    #[arg(long, value_delimiter = ',')]
    left: Option<Vec<usize>>,
    /// Indices of the right Fueter variables in P.
    #[arg(long, value_delimiter = ',')]
    right: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
struct GridFlags {
    #[arg(long, value_delimiter = ',', default_values_t = [3, 5])]
    m: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [0, 1, 2])]
    k: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [0, 1, 2])]
    l: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [0, 1, 2, 3, 4, 5])]
    n: Vec<u32>,
    #[arg(long, value_delimiter = ',', default_values_t = [0, 1, 2, 3, 4, 5])]
    p: Vec<u32>,
}

#[derive(Args, Debug)]
struct FdFlags {
    #[arg(long, default_value_t = 1e-3)]
    fd_step: f64,
    /// Stencil order, 2 or 4.
    #[arg(long, default_value_t = 4)]
    fd_order: u32,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

impl FdFlags {
    fn config(&self) -> CliResult<FdConfig> {
        Ok(FdConfig::new(
            self.fd_step,
            FdOrder::from_int(self.fd_order)?,
            self.tol,
        )?)
    }
}

impl JobFlags {
    fn job_file(&self) -> CliResult<JobFile> {
        let missing: Vec<&str> = [
            ("--m", self.m.is_empty()),
            ("--n", self.n.is_empty()),
            ("--p", self.p.is_empty()),
        ]
        .into_iter()
        .filter_map(|(name, empty)| empty.then_some(name))
        .collect();
        if !missing.is_empty() {
            return Err(CliError::schema(format!(
                "no job file given and missing {}",
                missing.join(", ")
            )));
        }
        let k = if self.k.is_empty() {
            vec![self.left.as_ref().map_or(0, Vec::len)]
        } else {
            self.k.clone()
        };
        let l = if self.l.is_empty() {
            vec![self.right.as_ref().map_or(0, Vec::len)]
        } else {
            self.l.clone()
        };
        let generator = match (&self.left, &self.right) {
            (None, None) => None,
            (left, right) => Some(GeneratorDoc {
                left: left.clone().unwrap_or_default(),
                right: right.clone().unwrap_or_default(),
            }),
        };
        let single = [self.m.len(), k.len(), l.len(), self.n.len(), self.p.len()]
            .iter()
            .all(|&c| c == 1);
        if single {
            let (m, k, l) = (self.m[0], k[0], l[0]);
            Ok(JobFile::Single(JobSpec {
                m,
                k,
                l,
                quad: QuadSpec::Separable(SeparableDoc {
                    n: self.n[0],
                    p: self.p[0],
                }),
                p: generator.unwrap_or_else(|| GeneratorDoc::default_for(k, l, m)),
            }))
        } else {
            Ok(JobFile::Grid(GridSpec {
                m: self.m.clone(),
                k,
                l,
                n: self.n.clone(),
                p: self.p.clone(),
                generator,
            }))
        }
    }
}

fn run(cli: Cli) -> CliResult<Status> {
    match cli.command {
        Command::Generate { job, flags, out } => {
            let file = match job {
                Some(path) => JobFile::parse(&read(&path)?)?,
                None => flags.job_file()?,
            };
            generate::run(&file, out.as_deref())
        }
        Command::Lemma {
            which,
            seed,
            samples,
            max_n,
            grid,
            fd,
            expect_fail,
        } => {
            let cfg = fd.config()?;
            if expect_fail && which != 2 {
                return Err(CliError::schema(
                    "--expect-fail is only supported for lemma 2",
                ));
            }
            if which != 3 {
                eprintln!("lemma {which}: seed = {seed}");
            }
            let grid = lemma::Grid {
                m: grid.m,
                k: grid.k,
                l: grid.l,
                n: grid.n,
                p: grid.p,
            };
            let passed = match which {
                1 => lemma::lemma1(seed, samples, max_n),
                2 => lemma::lemma2(&grid, seed, samples, &cfg, expect_fail),
                _ => lemma::lemma3(&grid),
            };
            if passed == expect_fail {
                if expect_fail {
                    eprintln!("expected a failure, but every check passed");
                }
                Ok(Status::Failure)
            } else {
                if expect_fail {
                    eprintln!("failure detected as expected");
                }
                Ok(Status::Pass)
            }
        }
        Command::Eval {
            poly,
            points,
            seed,
            samples,
            fd,
        } => {
            let cfg = fd.config()?;
            let poly = eval::parse_poly(&read(&poly)?)?;
            let points = match points {
                Some(path) => eval::parse_points(&read(&path)?, poly.m())?,
                None => {
                    eprintln!("eval: {samples} random points, seed = {seed}");
                    eval::random_points(poly.m(), seed, samples)
                }
            };
            Ok(if eval::run(&poly, &points, &cfg) {
                Status::Pass
            } else {
                Status::Failure
            })
        }
        Command::Export { input, out } => {
            let poly = eval::parse_poly(&read(&input)?)?;
            let text = poly_to_string(&poly);
            match out {
                Some(path) => write_atomic(&path, &text)?,
                None => io::emit(&text),
            }
            Ok(Status::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return Status::Schema.code();
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    if let Some(n) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
    match run(cli) {
        Ok(status) => status.code(),
        Err(err) => {
            eprintln!("error: {}", err.message);
            err.status.code()
        }
    }
}
