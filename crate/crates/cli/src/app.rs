use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use linf_snake::coloring::ColorOracle;
use linf_snake::hunt::{self, Region, SearchConfig, Strategy};
use linf_snake::norms::polytope_coloring;
use linf_snake::{theorem_params, Baton, RVector, Rational, SnakeColoring, SnakeParams};

use crate::formats::{self, FacetFile, ParamsFile};
use crate::render::{self, Format, RenderSpec};
use crate::Error;

/// Exact snake two-colorings of the Chebyshev space.
#[derive(Parser, Debug)]
#[command(name = "linf-snake", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the snake parameters a_i, b_i used for R^(n+1).
    Params {
        #[arg(long)]
        n: usize,
    },
    /// Color, layer and shift of a point.
    Color {
        #[command(flatten)]
        space: Space,
        /// Comma-separated rationals, e.g. "0,-1/2".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Render a planar coloring to PPM or SVG.
    Render {
        #[command(flatten)]
        space: Space,
        /// "x0,y0,x1,y1".
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// "WIDTHxHEIGHT".
        #[arg(long, default_value = "400x400")]
        size: String,
        #[arg(long, default_value = "ppm")]
        format: String,
        #[arg(long)]
        output: PathBuf,
    },
    /// Hunt for a monochromatic copy of a baton.
    Search {
        #[command(flatten)]
        space: Space,
        /// Color through the polytope norm in this facet file instead.
        #[arg(long, conflicts_with = "params")]
        facets: Option<PathBuf>,
        /// "Bk" or comma-separated step lengths.
        #[arg(long)]
        baton: String,
        #[arg(long, default_value = "random")]
        strategy: String,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// "lo,hi" for a cube, or "lo:hi,lo:hi,..." per coordinate.
        #[arg(long, default_value = "-20,20", allow_hyphen_values = true)]
        region: String,
        #[arg(long, default_value = "1/2")]
        grid_step: String,
    },
    /// Run a property suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Snake parameter file; defaults to the parameters for n = 2.
        #[arg(long)]
        params: Option<PathBuf>,
    },
    /// Color of a point under the polytope-norm coloring of a facet file.
    EmbedColor {
        #[arg(long)]
        facets: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Args, Debug)]
struct Space {
    /// Dimension of the colored space.
    #[arg(long)]
    dim: Option<usize>,
    /// Snake parameter file (JSON), for custom snakes.
    #[arg(long)]
    params: Option<PathBuf>,
}

/// Runs the CLI on `argv` (without the program name) with the process's
/// standard streams and returns the exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// As [`run`] with explicit output streams.
///
/// Exit codes: 0 on success, found or pass; 1 on not found or fail; 2 on
/// usage and input errors.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = std::iter::once("linf-snake".to_string()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((value, code)) => {
            let _ = writeln!(out, "{value}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    Ok(serde_json::from_str(&text)?)
}

fn rational(text: &str) -> Result<Rational, Error> {
    Ok(text.trim().parse()?)
}

fn point(text: &str) -> Result<RVector, Error> {
    Ok(text.parse()?)
}

impl Space {
    fn coloring(&self) -> Result<SnakeColoring, Error> {
        let params = match &self.params {
            Some(path) => read_json::<ParamsFile>(path)?.to_params()?,
            None => {
                let dim = self.dim.ok_or_else(|| Error::Format("either --dim or --params is required".into()))?;
                if dim == 0 {
                    return Err(linf_snake::Error::ZeroDimension.into());
                }
                theorem_params(dim - 1)
            }
        };
        if let Some(dim) = self.dim {
            if dim != params.ambient_dim() {
                return Err(linf_snake::Error::DimensionMismatch { expected: dim, found: params.ambient_dim() }.into());
            }
        }
        Ok(SnakeColoring::with_params(params))
    }
}

fn parse_region(text: &str, dim: usize) -> Result<Region, Error> {
    let parts: Vec<&str> = text.split(',').collect();
    let bounds = if parts.iter().all(|p| !p.contains(':')) {
        let [lo, hi] = parts[..] else {
            return Err(Error::Format(format!("region {text:?} must be \"lo,hi\" or \"lo:hi,...\"")));
        };
        vec![(rational(lo)?, rational(hi)?); dim]
    } else {
        parts
            .iter()
            .map(|p| {
                let (lo, hi) = p.split_once(':').ok_or_else(|| Error::Format(format!("region bound {p:?} must be \"lo:hi\"")))?;
                Ok((rational(lo)?, rational(hi)?))
            })
            .collect::<Result<Vec<_>, Error>>()?
    };
    Ok(Region::new(bounds)?)
}

fn parse_size(text: &str) -> Result<(u32, u32), Error> {
    let bad = || Error::Format(format!("size {text:?} must be WIDTHxHEIGHT"));
    let (w, h) = text.split_once('x').ok_or_else(bad)?;
    Ok((w.parse().map_err(|_| bad())?, h.parse().map_err(|_| bad())?))
}

fn found_code(found: bool) -> i32 {
    if found {
        0
    } else {
        1
    }
}

fn execute(command: Command) -> Result<(Value, i32), Error> {
    match command {
        Command::Params { n } => Ok((serde_json::to_value(ParamsFile::from_params(&theorem_params(n)))?, 0)),
        Command::Color { space, point: text } => {
            let coloring = space.coloring()?;
            let dec = coloring.decompose(&point(&text)?)?;
            Ok((formats::color_json(&dec), 0))
        }
        Command::Render { space, window, size, format, output } => {
            let coloring = space.coloring()?;
            let corners = point(&window)?.into_coords();
            let window: [Rational; 4] = corners
                .try_into()
                .map_err(|_| Error::Format("window must be \"x0,y0,x1,y1\"".into()))?;
            let (width, height) = parse_size(&size)?;
            let spec = RenderSpec::new(window, width, height)?;
            let format: Format = format.parse()?;
            let bytes = render::render(&coloring, &spec, format)?;
            std::fs::write(&output, &bytes).map_err(|source| Error::Io { path: output.display().to_string(), source })?;
            let value = json!({
                "output": output.display().to_string(),
                "width": width,
                "height": height,
                "bytes": bytes.len(),
            });
            Ok((value, 0))
        }
        Command::Search { space, facets, baton, strategy, budget, seed, workers, region, grid_step } => {
            let b: Baton = baton.parse()?;
            let strategy: Strategy = strategy.parse()?;
            let configure = |dim: usize| -> Result<SearchConfig, Error> {
                let mut cfg = SearchConfig::new(strategy, budget, seed, parse_region(&region, dim)?);
                cfg.workers = workers;
                cfg.grid_step = rational(&grid_step)?;
                Ok(cfg)
            };
            let report = match facets {
                Some(path) => {
                    let coloring = polytope_coloring(read_json::<FacetFile>(&path)?.to_norm()?);
                    let dim = coloring.norm().facet_count();
                    if let Some(d) = space.dim.filter(|&d| d != coloring.dim()) {
                        return Err(linf_snake::Error::DimensionMismatch { expected: d, found: coloring.dim() }.into());
                    }
                    hunt::search_polytope(&coloring, &b, &configure(dim)?)?
                }
                None => {
                    let coloring = space.coloring()?;
                    hunt::search(&coloring, &b, &configure(coloring.dim())?)?
                }
            };
            Ok((formats::report_json(&report), found_code(report.found)))
        }
        Command::Verify { suite, samples, seed, params } => {
            let report = match params {
                Some(path) => {
                    let p: SnakeParams = read_json::<ParamsFile>(&path)?.to_params()?;
                    hunt::verify_suite_with(&suite, &p, samples, seed)?
                }
                None => hunt::verify_suite(&suite, samples, seed)?,
            };
            Ok((formats::suite_json(&report), found_code(report.passed())))
        }
        Command::EmbedColor { facets, point: text } => {
            let coloring = polytope_coloring(read_json::<FacetFile>(&facets)?.to_norm()?);
            let x = point(&text)?;
            let y = coloring.norm().embed(&x)?;
            let mut value = formats::color_json(&coloring.snake().decompose(&y)?);
            value["embedded"] = json!(formats::strings(y.coords()));
            Ok((value, 0))
        }
    }
}
