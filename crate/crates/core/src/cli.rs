//! Command-line front end. [`run`] takes the argument list and output
//! streams so it can be driven in-process; the binary only forwards
//! `std::env::args_os`.
//!
//! Exit codes: `0` success, `2` invalid input, `1` internal failure
//! (arithmetic overflow, I/O, or a check that should always pass).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::converse::{fmt_vec, pirillo_search};
use crate::error::Error;
use crate::export::{to_dot, to_json};
use crate::graph::{flip, verify_flip_translate, window_edges, LegSet, Window};
use crate::lattice::{kernel_basis, kernel_basis_d3, Lattice};
use crate::rational;
use crate::residue::NormalData;
use crate::surface::{in_surface, project_f};
use crate::svg::{self, Style};
use crate::tiling::{christoffel_parallelogram, locate_tile};
use crate::words::{christoffel_word, line_word, Word};

#[derive(Parser, Debug)]
#[command(
    name = "christoffel",
    version,
    about = "Christoffel words and Christoffel graphs in any dimension"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the lower Christoffel word with p letters a and q letters b.
    Word {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
    },
    /// Print the word read along a lattice line (a = edge, b = nonedge).
    Lineword {
        #[arg(short, allow_hyphen_values = true)]
        a: String,
        #[arg(short)]
        w: Option<i64>,
        /// Starting point, comma separated.
        #[arg(short, allow_hyphen_values = true)]
        x: String,
        /// Direction, 1-based.
        #[arg(short)]
        i: usize,
        #[arg(short)]
        n: usize,
    },
    /// Export the edges of a Christoffel graph.
    Graph {
        #[arg(short, allow_hyphen_values = true)]
        a: String,
        #[arg(short)]
        w: Option<i64>,
        /// `domain` (one fundamental domain of the kernel) or `LO..HI`.
        #[arg(long, default_value = "domain", allow_hyphen_values = true)]
        window: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Check that translating by t with residue 1 equals the flip.
    Flipcheck {
        #[arg(short, allow_hyphen_values = true)]
        a: String,
        #[arg(short)]
        w: Option<i64>,
    },
    /// Find every t for which some pattern M satisfies M + t = flip(M).
    Pirillo {
        /// Lattice rows, e.g. "0,4,1;-2,0,3;1,1,1".
        #[arg(short = 'K', allow_hyphen_values = true)]
        k: String,
    },
    /// Print the kernel lattice of the residue map.
    Kernel {
        #[arg(short, allow_hyphen_values = true)]
        a: String,
        #[arg(short)]
        w: Option<i64>,
    },
    /// Locate the tile containing the projection of a point.
    Tile {
        #[arg(short, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Emit the Christoffel parallelogram (d = 3).
    Parallelogram {
        #[arg(short, allow_hyphen_values = true)]
        a: String,
        #[arg(long, value_enum, default_value_t = ParFormat::Text)]
        format: ParFormat,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Write an SVG drawing.
    Render {
        #[arg(value_enum)]
        target: Target,
        #[arg(short, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(short)]
        w: Option<i64>,
        #[arg(short)]
        p: Option<i64>,
        #[arg(short)]
        q: Option<i64>,
        #[arg(long)]
        word: Option<String>,
        /// `LO..HI` on every coordinate.
        #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
        window: String,
        /// Draw flip(H) instead of H.
        #[arg(long)]
        flip: bool,
        #[arg(long, value_enum)]
        arrows: Option<Toggle>,
        #[arg(long, default_value = "red")]
        leg_color: String,
        #[arg(long, default_value = "blue")]
        body_color: String,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Stepped-surface membership and the diagonal projection f.
    Surface {
        #[arg(short, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParFormat {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    HWindow,
    IWindow,
    GQuotient,
    Parallelogram,
    WordPath,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow => Failure::Internal(e.to_string()),
            e => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

pub fn parse_ints(s: &str) -> crate::Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer list: {s:?}")))
        })
        .collect()
}

fn parse_range(s: &str) -> crate::Result<(i64, i64)> {
    let bad = || Error::Parse(format!("expected LO..HI, got {s:?}"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(Error::EmptyWindow);
    }
    Ok((lo, hi))
}

fn normal(a: &str, w: Option<i64>) -> crate::Result<NormalData> {
    NormalData::new(&parse_ints(a)?, w)
}

fn emit(out: &mut dyn Write, path: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Invalid(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Internal(m)) => {
            let _ = writeln!(err, "internal error: {m}");
            1
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    match cmd {
        Command::Word { p, q } => {
            writeln!(out, "{}", christoffel_word(p, q)?)?;
        }
        Command::Lineword { a, w, x, i, n } => {
            let nd = normal(&a, w)?;
            if i == 0 {
                return Err(Error::InvalidDirection {
                    dir: 0,
                    dim: nd.dim(),
                }
                .into());
            }
            writeln!(out, "{}", line_word(&nd, &parse_ints(&x)?, i - 1, n)?)?;
        }
        Command::Graph {
            a,
            w,
            window,
            format,
            o,
        } => {
            let nd = normal(&a, w)?;
            let win = if window == "domain" {
                Window::Domain(kernel_basis(&nd)?)
            } else {
                let (lo, hi) = parse_range(&window)?;
                Window::new_box(vec![lo; nd.dim()], vec![hi; nd.dim()])?
            };
            let set = window_edges(&nd, &win)?;
            let text = match format {
                GraphFormat::Json => to_json(&nd, &set),
                GraphFormat::Dot => to_dot(&nd, &set)?,
            };
            emit(out, &o, &text)?;
        }
        Command::Flipcheck { a, w } => {
            let nd = normal(&a, w)?;
            let (t, ok) = verify_flip_translate(&nd)?;
            writeln!(
                out,
                "t={} {}",
                fmt_vec(&t),
                if ok { "PASS" } else { "FAIL" }
            )?;
            if !ok {
                return Err(Failure::Internal("flip(H) differs from H + t".into()));
            }
        }
        Command::Pirillo { k } => {
            let mut rows = Vec::new();
            for r in k.split(';').filter(|r| !r.trim().is_empty()) {
                rows.push(parse_ints(r)?);
            }
            let d = rows.first().map(|r| r.len()).unwrap_or(0);
            if let Some(r) = rows.iter().find(|r| r.len() != d) {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: r.len(),
                }
                .into());
            }
            let given = Lattice::from_generators(d, &rows);
            rows.push(vec![1; d]);
            let lattice = Lattice::from_generators(d, &rows)?;
            if given.as_ref().map_or(true, |g| *g != lattice) {
                writeln!(err, "warning: (1,...,1) added to K")?;
            }
            for s in pirillo_search(&lattice)? {
                writeln!(out, "t={} {}", fmt_vec(&s.t_short), s.classification)?;
            }
        }
        Command::Kernel { a, w } => {
            let nd = normal(&a, w)?;
            let k = kernel_basis(&nd)?;
            let rows: Vec<String> = k.basis().iter().map(|r| fmt_vec(r)).collect();
            writeln!(out, "index={}", k.index())?;
            writeln!(out, "basis={}", rows.join(";"))?;
            if nd.dim() == 3 && nd.is_standard() {
                let cf = kernel_basis_d3(nd.a())?;
                let gens: Vec<Vec<i64>> = cf.iter().map(|r| r.to_vec()).collect();
                let same = Lattice::from_generators(3, &gens)? == k;
                let rows: Vec<String> = gens.iter().map(|r| fmt_vec(r)).collect();
                writeln!(out, "closed-form={} equal={same}", rows.join(";"))?;
            }
        }
        Command::Tile { a, point } => {
            let nd = normal(&a, None)?;
            let x = rational::parse_vec(&point)?;
            let t = locate_tile(&nd, &x)?;
            let span: Vec<String> = t.spanning().iter().map(|j| (j + 1).to_string()).collect();
            writeln!(
                out,
                "base={} omitted={} spanning={}",
                fmt_vec(&t.base),
                t.omitted + 1,
                span.join(",")
            )?;
        }
        Command::Parallelogram { a, format, o } => {
            let nd = normal(&a, None)?;
            let par = christoffel_parallelogram(&nd)?;
            let text = match format {
                ParFormat::Text => {
                    let mut s = String::new();
                    let [p1, p2] = par.sides;
                    s.push_str(&format!("sides={};{}\n", fmt_vec(&p1), fmt_vec(&p2)));
                    s.push_str(&format!("points={}\n", par.points.len()));
                    for p in &par.points {
                        s.push_str(&format!("  ({},{}) label={}\n", p.m, p.n, p.label));
                    }
                    s.push_str(&format!(
                        "body={} legs={}\n",
                        par.body.len(),
                        par.legs.len()
                    ));
                    s
                }
                ParFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&par)
                        .map_err(|e| Failure::Internal(e.to_string()))?;
                    s.push('\n');
                    s
                }
                ParFormat::Svg => svg::render_parallelogram(&nd, &par, &Style::default()),
            };
            emit(out, &o, &text)?;
        }
        Command::Render {
            target,
            a,
            w,
            p,
            q,
            word,
            window,
            flip: flipped,
            arrows,
            leg_color,
            body_color,
            o,
        } => {
            let style = Style {
                leg_color,
                body_color,
                arrows: arrows.map(|t| matches!(t, Toggle::On)),
            };
            let need_a = || {
                a.as_deref()
                    .ok_or_else(|| Failure::Invalid(format!("{target:?} needs -a")))
            };
            let text = match target {
                Target::HWindow => {
                    let nd = normal(need_a()?, w)?;
                    let (lo, hi) = parse_range(&window)?;
                    let win = Window::new_box(vec![lo; nd.dim()], vec![hi; nd.dim()])?;
                    let mut set = window_edges(&nd, &win)?;
                    if flipped {
                        set = flip(&set, &LegSet::for_normal(&nd)?)?;
                    }
                    svg::render_h_window(&nd, &set, &style)?
                }
                Target::IWindow => {
                    let nd = normal(need_a()?, w)?;
                    let r = parse_range(&window)?;
                    svg::render_i_window(&nd, flipped, r, r, &style)?
                }
                Target::GQuotient => svg::render_quotient(&normal(need_a()?, w)?, &style),
                Target::Parallelogram => {
                    let nd = normal(need_a()?, None)?;
                    svg::render_parallelogram(&nd, &christoffel_parallelogram(&nd)?, &style)
                }
                Target::WordPath => {
                    let wd = match (word, p, q) {
                        (Some(s), _, _) => Word::parse(&s)?,
                        (None, Some(p), Some(q)) => christoffel_word(p, q)?,
                        _ => {
                            return Err(Failure::Invalid(
                                "word-path needs --word or -p and -q".into(),
                            ))
                        }
                    };
                    svg::render_word_path(&wd, &style)
                }
            };
            emit(out, &o, &text)?;
        }
        Command::Surface { a, point } => {
            let nd = normal(&a, None)?;
            let x = rational::parse_vec(&point)?;
            let inside = in_surface(&nd, &x)?;
            let (y, t) = project_f(&nd, &x)?;
            writeln!(out, "in_surface={inside}")?;
            writeln!(out, "f={}", rational::format_vec(&y))?;
            writeln!(out, "t={}", rational::format(&t))?;
        }
    }
    Ok(())
}
