//! `matricube`: command-line front end to the matricube library.
//!
//! Every command reads JSON from a file or standard input and writes the
//! library's JSON serialization, or a text grid with `--grid`. Rank tables
//! may also be given as two-dimensional grids. Exit status is 0 on success,
//! 1 when the input fails an axiom or a precondition, 2 on malformed input.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use matricube::cryptomorph::PointSet;
use matricube::enumerate::{bruteforce_matricubes, enumerate_matricubes};
use matricube::grid::{parse_grid, render_point_set, render_table};
use matricube::matroid::validate_polymatroid;
use matricube::{
    basis_candidates, circuits_of, coherent_complex_of, contract, delete, direct_sum, dual,
    flats_of, general_position_flags, independents_of, is_coloop, is_loop, is_simple,
    local_matroid, matricube_from_coherent, matricube_from_flag_matroids, matricube_from_flags,
    matricube_from_permarray, minor, natural_matroid, natural_polymatroid,
    permarray_from_matricube, tutte, validate_circuit_axioms, validate_coherent,
    validate_flag_matroid, validate_flat_axioms, validate_independent_axioms, validate_matroid,
    validate_rank_axioms, BasisCandidateKind, CoherentComplex, CubicalMatrix, DotArray,
    EnumOptions, Error, FlagMatroid, Matricube, Matroid, Point, Polymatroid, RankTable, Report,
    Scan, Width,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "matricube",
    version,
    about = "Matricubes: rank functions on hypercuboids"
)]
struct Cli {
    /// Print rank tables and point sets as grids (first axis horizontal,
    /// origin bottom left) instead of JSON.
    #[arg(long, global = true)]
    grid: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Input {
    /// Input file; standard input when absent or `-`.
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Matricube,
    Flats,
    Circuits,
    Independents,
    Matroid,
    Polymatroid,
    FlagMatroid,
    Coherent,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the axioms of a rank table or another presentation.
    Validate {
        #[arg(long = "as", value_enum, default_value_t = Kind::Matricube)]
        kind: Kind,
        #[command(flatten)]
        input: Input,
    },
    /// Width, rank, simpleness, loops and coloops.
    Info(Input),
    Flats(Input),
    Circuits(Input),
    Independents(Input),
    /// One of the candidate notions of basis, `a` to `f`.
    Bases {
        #[arg(long = "def")]
        def: BasisCandidateKind,
        #[command(flatten)]
        input: Input,
    },
    Dual(Input),
    Delete {
        #[arg(long)]
        dir: usize,
        #[command(flatten)]
        input: Input,
    },
    Contract {
        #[arg(long)]
        dir: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Deletions and contractions in order, e.g. `d0,c1`.
    Minor {
        #[arg(long)]
        ops: String,
        #[command(flatten)]
        input: Input,
    },
    /// Direct sum. With one file the first summand is read from standard input.
    Sum {
        #[arg(num_args = 1..=2, required = true)]
        files: Vec<PathBuf>,
    },
    Tutte(Input),
    /// Local matroid at a point given as `x1,...,xd`.
    LocalMatroid {
        #[arg(long)]
        at: String,
        #[command(flatten)]
        input: Input,
    },
    Coherent {
        #[command(subcommand)]
        op: CoherentOp,
    },
    Natural {
        #[command(subcommand)]
        op: NaturalOp,
    },
    /// Matricube of a cubical matrix.
    FromFlags(Input),
    /// Seeded random flags over GF(p) in dimension `r`.
    GeneralPosition {
        #[arg(long)]
        width: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        seed: u64,
    },
    Perm {
        #[command(subcommand)]
        op: PermOp,
    },
    /// Matricube of a JSON list of flag matroids on one ground set.
    UnionFlagMatroids(Input),
    /// Every matricube on a width, one JSON object per line.
    Enumerate {
        #[arg(long)]
        width: String,
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        rank: Option<i64>,
        /// Use the unpruned filter instead of the search.
        #[arg(long)]
        bruteforce: bool,
    },
}

#[derive(Subcommand)]
enum CoherentOp {
    /// Local matroids of a matricube.
    Extract(Input),
    /// CC1 and CC2 on a complex.
    Check(Input),
    /// Matricube summed up from a complex.
    Build(Input),
}

#[derive(Subcommand)]
enum NaturalOp {
    /// Natural polymatroid of a matricube.
    Polymatroid(Input),
    /// Natural matroid of a polymatroid.
    Matroid(Input),
}

#[derive(Subcommand)]
enum PermOp {
    /// Matricube of a permutation array.
    To(Input),
    /// Permutation array of a simple matricube on a hypercube.
    From(Input),
}

enum Failure {
    /// Axiom or precondition failure; exit 1.
    Invalid(String),
    /// Unreadable or ill-formed input; exit 2.
    Malformed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Axioms(report) => Failure::Invalid(report.to_string()),
            Error::NotSimple
            | Error::NotHypercube(_)
            | Error::WrongRank { .. }
            | Error::NotPermutationArray(_)
            | Error::NotGraded(_)
            | Error::PathDependent { .. }
            | Error::RemovalMissing { .. }
            | Error::NotOrderable { .. } => Failure::Invalid(e.to_string()),
            _ => Failure::Malformed(e.to_string()),
        }
    }
}

type Out = Result<String, Failure>;

fn read_text(file: Option<&PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match file {
        Some(p) if p.as_os_str() != "-" => {
            text = fs::read_to_string(p)
                .map_err(|e| Failure::Malformed(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Malformed(e.to_string()))?;
        }
    }
    Ok(text)
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Malformed(e.to_string()))
}

fn read<T: DeserializeOwned>(input: &Input) -> Result<T, Failure> {
    parse(&read_text(input.file.as_ref())?)
}

/// A rank table as JSON, or as a grid when the text does not start with `{`.
fn read_table(file: Option<&PathBuf>) -> Result<RankTable, Failure> {
    let text = read_text(file)?;
    if text.trim_start().starts_with('{') {
        parse(&text)
    } else {
        Ok(parse_grid(&text)?)
    }
}

fn read_matricube(file: Option<&PathBuf>) -> Result<Matricube, Failure> {
    Ok(Matricube::new(read_table(file)?)?)
}

fn json<T: Serialize>(v: &T) -> Out {
    serde_json::to_string(v)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Malformed(e.to_string()))
}

fn show_matricube(m: &Matricube, grid: bool) -> Out {
    if grid {
        Ok(render_table(m.table()))
    } else {
        json(m)
    }
}

fn show_points(s: &PointSet, grid: bool) -> Out {
    if grid {
        Ok(render_point_set(s))
    } else {
        json(s)
    }
}

fn checked(report: Report) -> Out {
    if report.is_ok() {
        Ok("ok\n".into())
    } else {
        Err(Failure::Invalid(report.to_string()))
    }
}

fn validate(kind: Kind, input: &Input) -> Out {
    let report = match kind {
        Kind::Matricube => validate_rank_axioms(&read_table(input.file.as_ref())?, Scan::All),
        Kind::Flats => validate_flat_axioms(&read::<PointSet>(input)?, Scan::All),
        Kind::Circuits => validate_circuit_axioms(&read::<PointSet>(input)?, Scan::All),
        Kind::Independents => validate_independent_axioms(&read::<PointSet>(input)?, Scan::All),
        Kind::Matroid => validate_matroid(&read::<Matroid>(input)?, Scan::All),
        Kind::Polymatroid => validate_polymatroid(&read::<Polymatroid>(input)?, Scan::All),
        Kind::FlagMatroid => validate_flag_matroid(&read::<FlagMatroid>(input)?, Scan::All),
        Kind::Coherent => validate_coherent(&read::<CoherentComplex>(input)?, Scan::All),
    };
    checked(report)
}

#[derive(Serialize)]
struct Info<'a> {
    width: &'a Width,
    rank: i64,
    simple: bool,
    loops: Vec<usize>,
    coloops: Vec<usize>,
}

fn info(m: &Matricube, grid: bool) -> Out {
    let dirs = |f: fn(&Matricube, usize) -> matricube::Result<bool>| -> Vec<usize> {
        (0..m.width().dim())
            .filter(|&i| f(m, i).unwrap_or(false))
            .collect()
    };
    let (loops, coloops) = (dirs(is_loop), dirs(is_coloop));
    if grid {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        return Ok(format!(
            "width {}\nrank {}\nsimple {}\nloops {}\ncoloops {}\n",
            m.width(),
            m.rank_of(),
            is_simple(m),
            list(&loops),
            list(&coloops)
        ));
    }
    json(&Info {
        width: m.width(),
        rank: m.rank_of(),
        simple: is_simple(m),
        loops,
        coloops,
    })
}

fn enumerate(width: &str, opts: EnumOptions, brute: bool, grid: bool) -> Result<(), Failure> {
    let width = Width::parse(width)?;
    let ms = if brute {
        bruteforce_matricubes(&width)?
            .into_iter()
            .filter(|m| {
                (!opts.simple || is_simple(m)) && opts.rank.is_none_or(|r| m.rank_of() == r)
            })
            .collect()
    } else {
        enumerate_matricubes(&width, opts)?
    };
    let mut out = io::BufWriter::new(io::stdout().lock());
    for (k, m) in ms.iter().enumerate() {
        let text = if grid {
            format!(
                "{}{}",
                if k > 0 { "\n" } else { "" },
                render_table(m.table())
            )
        } else {
            json(m)?
        };
        out.write_all(text.as_bytes())
            .map_err(|e| Failure::Malformed(e.to_string()))?;
    }
    out.flush().map_err(|e| Failure::Malformed(e.to_string()))
}

fn run(cli: Cli) -> Out {
    let grid = cli.grid;
    let cube = |i: &Input| read_matricube(i.file.as_ref());
    match cli.cmd {
        Cmd::Validate { kind, input } => validate(kind, &input),
        Cmd::Info(i) => info(&cube(&i)?, grid),
        Cmd::Flats(i) => show_points(&flats_of(&cube(&i)?), grid),
        Cmd::Circuits(i) => show_points(&circuits_of(&cube(&i)?), grid),
        Cmd::Independents(i) => show_points(&independents_of(&cube(&i)?), grid),
        Cmd::Bases { def, input } => show_points(&basis_candidates(&cube(&input)?, def), grid),
        Cmd::Dual(i) => show_matricube(&dual(&cube(&i)?), grid),
        Cmd::Delete { dir, input } => show_matricube(&delete(&cube(&input)?, dir)?, grid),
        Cmd::Contract { dir, input } => show_matricube(&contract(&cube(&input)?, dir)?, grid),
        Cmd::Minor { ops, input } => {
            let ops = matricube::transforms::parse_minor_ops(&ops)?;
            show_matricube(&minor(&cube(&input)?, &ops)?, grid)
        }
        Cmd::Sum { files } => {
            let (a, b) = match files.as_slice() {
                [b] => (read_matricube(None)?, read_matricube(Some(b))?),
                [a, b] => (read_matricube(Some(a))?, read_matricube(Some(b))?),
                _ => unreachable!("clap bounds the count"),
            };
            show_matricube(&direct_sum(&a, &b), grid)
        }
        Cmd::Tutte(i) => {
            let t = tutte(&cube(&i)?);
            if grid {
                Ok(format!("{t}\n"))
            } else {
                json(&t)
            }
        }
        Cmd::LocalMatroid { at, input } => {
            json(&local_matroid(&cube(&input)?, &Point::parse(&at)?)?)
        }
        Cmd::Coherent { op } => match op {
            CoherentOp::Extract(i) => json(&coherent_complex_of(&cube(&i)?)),
            CoherentOp::Check(i) => {
                checked(validate_coherent(&read::<CoherentComplex>(&i)?, Scan::All))
            }
            CoherentOp::Build(i) => show_matricube(&matricube_from_coherent(&read(&i)?)?, grid),
        },
        Cmd::Natural { op } => match op {
            NaturalOp::Polymatroid(i) => json(&natural_polymatroid(&cube(&i)?)?),
            NaturalOp::Matroid(i) => json(&natural_matroid(&read::<Polymatroid>(&i)?)?),
        },
        Cmd::FromFlags(i) => {
            show_matricube(&matricube_from_flags(&read::<CubicalMatrix>(&i)?)?, grid)
        }
        Cmd::GeneralPosition { width, r, p, seed } => {
            json(&general_position_flags(&Width::parse(&width)?, r, p, seed)?)
        }
        Cmd::Perm { op } => match op {
            PermOp::To(i) => {
                show_matricube(&matricube_from_permarray(&read::<DotArray>(&i)?)?, grid)
            }
            PermOp::From(i) => json(&permarray_from_matricube(&cube(&i)?)?),
        },
        Cmd::UnionFlagMatroids(i) => show_matricube(
            &matricube_from_flag_matroids(&read::<Vec<FlagMatroid>>(&i)?)?,
            grid,
        ),
        Cmd::Enumerate {
            width,
            simple,
            rank,
            bruteforce,
        } => enumerate(&width, EnumOptions { simple, rank }, bruteforce, grid)
            .map(|()| String::new()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Malformed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
