//! `cubicgap`: exact spectral gap certification for cubic graphs.

mod input;

use clap::{ArgGroup, Parser, Subcommand};
use cubicgap::algebra::{count_roots_in, Interval};
use cubicgap::certify::{find_negative_witness, gap_check, lemma_replay};
use cubicgap::enumerate::{enumerate_cubic, verify_classification_with_cap, EnumSpec, DEFAULT_CAP};
use cubicgap::families::{build_xn, Sporadic};
use cubicgap::graph::to_graph6;
use cubicgap::local::girth5_enumeration;
use cubicgap::Rational;
use input::{graphs, parse_rational, InputError};
use num_bigint::BigInt;
use serde::Serialize;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cubicgap", version, about = "Exact eigenvalue gap certification for cubic graphs")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial and eigenvalue counts at integers and in
    /// the open unit intervals between them.
    Spectrum {
        /// graph6 string, file of graph6 lines, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Counts eigenvalues in an interval; exits 0 iff every graph avoids it.
    Gap {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        lo: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        hi: Rational,
        #[arg(long)]
        closed_lo: bool,
        #[arg(long)]
        closed_hi: bool,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Searches for a principal submatrix of `A(A + 2I)` with negative
    /// determinant.
    Witness {
        #[arg(long)]
        max_size: usize,
        /// Also bracket the interval implied by the witness, to this width.
        #[arg(long, value_parser = parse_rational)]
        precision: Option<Rational>,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Prints a named graph or `X(n)` as graph6.
    #[command(group(ArgGroup::new("which").required(true).args(["name", "xn"])))]
    Family {
        #[arg(long, value_parser = ["prism", "k33", "petersen", "dodecahedron", "tutte8"])]
        name: Option<String>,
        #[arg(long)]
        xn: Option<usize>,
    },
    /// The girth-five corona configurations with `M_SS` positive
    /// semidefinite, one per isomorphism class.
    Corona5,
    /// Streams connected cubic graphs as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        min_girth: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Include disconnected graphs.
        #[arg(long)]
        disconnected: bool,
    },
    /// Exhaustive classification check; exits 0 iff it succeeds.
    Verify {
        #[arg(long)]
        upto: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Recomputes the forbidden-configuration determinants; exits 0 iff all
    /// agree.
    Replay,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Core(#[from] cubicgap::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn json_line<T: Serialize>(out: &mut Out, v: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)
}

#[derive(Serialize)]
struct CountRow {
    interval: Interval<BigInt>,
    count: usize,
}

#[derive(Serialize)]
struct SpectrumReport {
    graph6: String,
    char_poly: cubicgap::IntPolynomial,
    counts: Vec<CountRow>,
}

fn spectrum(out: &mut Out, input: &str, json: bool) -> Result<bool, CliError> {
    for g in graphs(input)? {
        let g = g?;
        let p = g.adjacency_matrix::<BigInt>().char_poly();
        let d = g.max_degree() as i64;
        let int = |k: i64| Rational::from_integer(BigInt::from(k));
        let mut counts = Vec::new();
        for k in -d..=d {
            let point = Interval::point(int(k));
            counts.push(CountRow { count: count_roots_in(&p, &point, true)?, interval: point });
            if k < d {
                let open = Interval::open(int(k), int(k + 1))?;
                counts.push(CountRow { count: count_roots_in(&p, &open, true)?, interval: open });
            }
        }
        let report = SpectrumReport { graph6: to_graph6(&g), char_poly: p, counts };
        if json {
            json_line(out, &report)?;
        } else {
            writeln!(out, "{}", report.graph6)?;
            writeln!(out, "  char poly: {}", report.char_poly)?;
            for row in report.counts.iter().filter(|r| r.count > 0) {
                writeln!(out, "  {:<12} {}", row.interval.to_string(), row.count)?;
            }
        }
    }
    Ok(true)
}

fn gap(out: &mut Out, iv: &Interval<BigInt>, input: &str, json: bool) -> Result<bool, CliError> {
    let mut all = true;
    for g in graphs(input)? {
        let v = gap_check(&g?, iv);
        all &= v.has_gap;
        if json {
            json_line(out, &v)?;
        } else {
            let word = if v.has_gap { "gap" } else { "no gap" };
            writeln!(out, "{}  {}  count {}  {}", v.graph_id, v.interval, v.eigenvalue_count_in_interval, word)?;
        }
    }
    Ok(all)
}

fn witness(
    out: &mut Out,
    max_size: usize,
    precision: Option<&Rational>,
    input: &str,
    json: bool,
) -> Result<bool, CliError> {
    if max_size == 0 {
        return Err(cubicgap::Error::InvalidParameter("--max-size must be positive".into()).into());
    }
    for g in graphs(input)? {
        let g = g?;
        let w = match find_negative_witness(&g, max_size.min(g.n()))? {
            Some(w) => Some(match precision {
                Some(eps) => w.with_implied_interval(eps)?,
                None => w,
            }),
            None => None,
        };
        match (&w, json) {
            (None, _) => writeln!(out, "none")?,
            (Some(w), true) => json_line(out, w)?,
            (Some(w), false) => {
                write!(out, "subset {:?}  det {}", w.subset.as_slice(), w.determinant)?;
                if let Some(iv) = &w.implied_interval {
                    write!(out, "  implied {iv}")?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct Corona5Entry {
    graph6: String,
    core_mask: String,
}

#[derive(Serialize)]
struct Corona5Report {
    count: usize,
    survivors: Vec<Corona5Entry>,
}

fn corona5(out: &mut Out, json: bool) -> Result<bool, CliError> {
    let survivors: Vec<_> = girth5_enumeration()
        .survivors
        .iter()
        .map(|m| Corona5Entry { graph6: to_graph6(&m.graph), core_mask: m.core_mask() })
        .collect();
    let report = Corona5Report { count: survivors.len(), survivors };
    if json {
        json_line(out, &report)?;
    } else {
        for s in &report.survivors {
            writeln!(out, "{} {}", s.graph6, s.core_mask)?;
        }
        writeln!(out, "count {}", report.count)?;
    }
    Ok(true)
}

fn verify(out: &mut Out, upto: usize, cap: usize, json: bool) -> Result<bool, CliError> {
    let report = verify_classification_with_cap(upto, cap)?;
    if json {
        json_line(out, &report)?;
    } else {
        writeln!(out, "{:>3} {:>7} {:>9}  tags", "n", "total", "survivors")?;
        for p in &report.per_n {
            let tags: Vec<String> = p.survivors.iter().map(|s| s.tag.to_string()).collect();
            writeln!(out, "{:>3} {:>7} {:>9}  {}", p.n, p.total, p.survivors.len(), tags.join(" "))?;
        }
        for f in &report.failures {
            writeln!(out, "FAIL {f}")?;
        }
        writeln!(out, "{}", if report.ok { "ok" } else { "failed" })?;
    }
    Ok(report.ok)
}

fn replay(out: &mut Out, json: bool) -> Result<bool, CliError> {
    let rows = lemma_replay();
    let ok = rows.iter().all(|r| r.matches());
    if json {
        json_line(out, &rows)?;
    } else {
        writeln!(out, "{:<22} {:>4} {:>6} {:>9} {:>9}  match", "id", "size", "alpha", "expected", "computed")?;
        for r in &rows {
            for c in &r.cases {
                let alpha = c.alpha.map_or("-".to_string(), |a| a.to_string());
                writeln!(
                    out,
                    "{:<22} {:>4} {:>6} {:>9} {:>9}  {}",
                    r.lemma_id, r.size, alpha, c.expected, c.computed, c.matches
                )?;
            }
        }
    }
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let json = cli.json;
    let ok = match cli.command {
        Command::Spectrum { input } => spectrum(&mut out, &input, json)?,
        Command::Gap { lo, hi, closed_lo, closed_hi, input } => {
            let iv = Interval::new(lo, hi, !closed_lo, !closed_hi)?;
            gap(&mut out, &iv, &input, json)?
        }
        Command::Witness { max_size, precision, input } => {
            witness(&mut out, max_size, precision.as_ref(), &input, json)?
        }
        Command::Family { name, xn } => {
            let g = match (name, xn) {
                (Some(name), _) => Sporadic::from_name(&name).expect("validated by clap").graph(),
                (None, Some(n)) => build_xn(n)?,
                (None, None) => unreachable!("clap requires one of --name, --xn"),
            };
            writeln!(out, "{}", to_graph6(&g))?;
            true
        }
        Command::Corona5 => corona5(&mut out, json)?,
        Command::Enumerate { n, min_girth, cap, disconnected } => {
            let spec = EnumSpec::new(n).min_girth(min_girth).cap(cap).connected_only(!disconnected);
            for g in enumerate_cubic(spec)? {
                writeln!(out, "{}", to_graph6(&g))?;
            }
            true
        }
        Command::Verify { upto, cap } => verify(&mut out, upto, cap, json)?,
        Command::Replay => replay(&mut out, json)?,
    };
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
