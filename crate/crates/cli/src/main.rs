//! Command-line front end for the codec library: every subcommand decodes
//! a decimal number into some structure or encodes the structure read from
//! arguments or standard input back into a number.
//!
//! Exit codes: 0 success, 1 usage (bad flags, malformed input lines),
//! 2 domain error (an encoder precondition failed), 3 resource guard
//! (the result would be too large to materialize).

use std::fmt;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use hfskit::graphcodec::{
    dag_to_dot, digraph_to_nat, from_dag, intensional_dual, nat_to_digraph, nat_to_pairs,
    nat_to_parts, self_duals, to_compact_dag, transpose, Dag, Orientation,
};
use hfskit::hfs::{hfs_show, iterative_hfs_stream, nat_to_hfs};
use hfskit::natset::{
    hypergraph_to_nat, nat_choice_fun, nat_ordinal, nat_powset, nat_to_hypergraph, nat_to_set,
    set_to_nat,
};
use hfskit::numerals::{all_bitstrings, bijbits_to_nat, nat_to_bijbits};
use hfskit::pairing::{
    bitmerge_pair, bitmerge_unpair, cantor_pair, cantor_unpair, kuratowski_pair,
};
use hfskit::Nat;

/// Vertices on `undag` input are indices into an adjacency table, so a
/// sparse huge index would allocate the whole table; cap it.
const MAX_INPUT_VERTEX: usize = 1 << 24;

#[derive(Parser)]
#[command(
    name = "hfskit",
    version,
    about = "Bijective codecs between natural numbers and finite set-like structures"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bijective base-2 digits of N, lowest first (empty for 0)
    Bits { n: Nat },
    /// Number named by a bijective base-2 digit string
    Unbits { bits: Vec<u8> },
    /// Elements of the set coded by N, ascending
    Set { n: Nat },
    /// Code of the set with the given elements (must be strictly increasing)
    Unset { elems: Vec<Nat> },
    /// Tree form of N as a hereditarily finite set
    Hfs {
        n: Nat,
        /// Values below this limit stay atoms instead of unfolding
        #[arg(long, default_value = "0")]
        urelements: Nat,
    },
    /// Brace notation for N as a hereditarily finite set
    Show {
        n: Nat,
        /// Values below this limit stay atoms instead of unfolding
        #[arg(long, default_value = "0")]
        urelements: Nat,
    },
    /// Hyperedges of N, one per line
    Hypergraph { n: Nat },
    /// Read hyperedge lines from stdin, print their code
    Unhypergraph,
    /// Pair X and Y into one number
    Pair { scheme: PairScheme, x: Nat, y: Nat },
    /// Split Z back into the pair it codes
    Unpair { scheme: UnpairScheme, z: Nat },
    /// Code of the powerset of the set coded by N
    Powset { n: Nat },
    /// Code of the von Neumann ordinal N (N <= 5)
    Ordinal { n: Nat },
    /// Code of a choice function for the family coded by N
    Choice { n: Nat },
    /// Membership edges of N's parts, one "a b" line each
    Edges {
        orientation: EdgeOrientation,
        n: Nat,
    },
    /// Compact membership DAG of N as edge lines (vertex 0 is N)
    Dag {
        n: Nat,
        /// Emit DOT with each vertex labelled by the part it stands for
        #[arg(long)]
        dot: bool,
    },
    /// Transposed compact DAG of N
    Ddag {
        n: Nat,
        /// Emit DOT with each vertex labelled by the part it stands for
        #[arg(long)]
        dot: bool,
    },
    /// Read "from to" edge lines from stdin, decorate vertex 0
    Undag,
    /// Intensional dual of N
    Dual { n: Nat },
    /// Numbers in [FROM, TO] equal to their intensional dual
    SelfDuals { from: Nat, to: Nat },
    /// Edges of the digraph coded by N, one "x y" line each
    Digraph { n: Nat },
    /// Read "x y" edge lines from stdin, print the digraph's code
    Undigraph,
    /// Print the first COUNT items of an enumeration, one per line
    Enumerate {
        what: StreamKind,
        #[arg(long)]
        count: u64,
        /// Urelement limit for the hfs stream
        #[arg(long, default_value = "0")]
        urelements: Nat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PairScheme {
    Cantor,
    Bitmerge,
    Kuratowski,
}

#[derive(Clone, Copy, ValueEnum)]
enum UnpairScheme {
    Cantor,
    Bitmerge,
}

#[derive(Clone, Copy, ValueEnum)]
enum EdgeOrientation {
    Member,
    Contains,
}

#[derive(Clone, Copy, ValueEnum)]
enum StreamKind {
    Bits,
    Hfs,
    Hypergraphs,
    Digraphs,
}

enum Failure {
    Usage(String),
    Lib(hfskit::Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Lib(hfskit::Error::TooLarge(_) | hfskit::Error::OrdinalOverflow(_)) => 3,
            Failure::Lib(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => f.write_str(msg),
            Failure::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<hfskit::Error> for Failure {
    fn from(e: hfskit::Error) -> Self {
        Failure::Lib(e)
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write_stdout(&e.to_string());
            std::process::exit(0);
        }
        Err(e) => {
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    if let Err(f) = run(cli.cmd) {
        eprintln!("error: {f}");
        std::process::exit(f.code());
    }
}

/// Write to stdout, treating a closed pipe as the consumer's way of saying
/// "enough": that ends the process quietly with status 0, not a panic.
fn write_stdout(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(Failure::Usage(format!("writing stdout: {e}"))),
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    if let Cmd::Enumerate {
        what,
        count,
        urelements,
    } = cmd
    {
        return enumerate(what, count, &urelements);
    }
    write_stdout(&render(cmd)?)
}

/// Enumerations can be asked for arbitrarily many items, so they stream a
/// line at a time instead of building the whole listing in memory.
fn enumerate(what: StreamKind, count: u64, urelements: &Nat) -> Result<(), Failure> {
    let count = usize::try_from(count).unwrap_or(usize::MAX);
    match what {
        StreamKind::Bits => {
            for bs in all_bitstrings().take(count) {
                write_stdout(&join_line(&bs))?;
            }
        }
        StreamKind::Hfs => {
            for h in iterative_hfs_stream(urelements).take(count) {
                write_stdout(&line(h))?;
            }
        }
        StreamKind::Hypergraphs => {
            let mut n = Nat::from(0u32);
            for _ in 0..count {
                let edges: Vec<String> = nat_to_hypergraph(&n)
                    .iter()
                    .map(|e| format!("{{{}}}", comma_join(e)))
                    .collect();
                write_stdout(&format!("{{{}}}\n", edges.join(",")))?;
                n += 1u32;
            }
        }
        StreamKind::Digraphs => {
            let mut n = Nat::from(0u32);
            for _ in 0..count {
                let edges: Vec<String> = nat_to_digraph(&n)
                    .iter()
                    .map(|(x, y)| format!("({x},{y})"))
                    .collect();
                write_stdout(&format!("{{{}}}\n", edges.join(",")))?;
                n += 1u32;
            }
        }
    }
    Ok(())
}

fn render(cmd: Cmd) -> Result<String, Failure> {
    Ok(match cmd {
        Cmd::Bits { n } => join_line(&nat_to_bijbits(&n)),
        Cmd::Unbits { bits } => line(bijbits_to_nat(&bits)?),
        Cmd::Set { n } => join_line(&nat_to_set(&n)),
        Cmd::Unset { elems } => line(set_to_nat(&elems)?),
        Cmd::Hfs { n, urelements } => line(nat_to_hfs(&urelements, &n)),
        Cmd::Show { n, urelements } => line(hfs_show(&urelements, &n)),
        Cmd::Hypergraph { n } => {
            let mut out = String::new();
            for edge in nat_to_hypergraph(&n) {
                out.push_str(&join_line(&edge));
            }
            out
        }
        Cmd::Unhypergraph => {
            let edges: Vec<Vec<Nat>> = stdin_lines()?
                .iter()
                .enumerate()
                .map(|(i, l)| parse_tokens(i, l))
                .collect::<Result<_, _>>()?;
            line(hypergraph_to_nat(&edges)?)
        }
        Cmd::Pair { scheme, x, y } => line(match scheme {
            PairScheme::Cantor => cantor_pair(&x, &y),
            PairScheme::Bitmerge => bitmerge_pair(&x, &y),
            PairScheme::Kuratowski => kuratowski_pair(&x, &y)?,
        }),
        Cmd::Unpair { scheme, z } => {
            let (x, y) = match scheme {
                UnpairScheme::Cantor => cantor_unpair(&z),
                UnpairScheme::Bitmerge => bitmerge_unpair(&z),
            };
            format!("{x} {y}\n")
        }
        Cmd::Powset { n } => line(nat_powset(&n)?),
        Cmd::Ordinal { n } => line(nat_ordinal(&n)?),
        Cmd::Choice { n } => line(nat_choice_fun(&n)?),
        Cmd::Edges { orientation, n } => {
            let orientation = match orientation {
                EdgeOrientation::Member => Orientation::Member,
                EdgeOrientation::Contains => Orientation::Contains,
            };
            pair_lines(nat_to_pairs(orientation, &n))
        }
        Cmd::Dag { n, dot } => render_dag(to_compact_dag(&n), &n, dot)?,
        Cmd::Ddag { n, dot } => render_dag(transpose(&to_compact_dag(&n)), &n, dot)?,
        Cmd::Undag => {
            let edges: Vec<(usize, usize)> = stdin_lines()?
                .iter()
                .enumerate()
                .map(|(i, l)| parse_edge::<usize>(i, l))
                .collect::<Result<_, _>>()?;
            let hi = edges.iter().flat_map(|&(a, b)| [a, b]).max().unwrap_or(0);
            if hi > MAX_INPUT_VERTEX {
                return Err(
                    hfskit::Error::TooLarge(format!("adjacency table for vertex {hi}")).into(),
                );
            }
            line(from_dag(&Dag::from_edges(hi, &edges)?)?)
        }
        Cmd::Dual { n } => line(intensional_dual(&n)?),
        Cmd::SelfDuals { from, to } => {
            let mut out = String::new();
            for n in self_duals(&from, &to)? {
                out.push_str(&line(n));
            }
            out
        }
        Cmd::Digraph { n } => pair_lines(nat_to_digraph(&n)),
        Cmd::Undigraph => {
            let edges: Vec<(Nat, Nat)> = stdin_lines()?
                .iter()
                .enumerate()
                .map(|(i, l)| parse_edge::<Nat>(i, l))
                .collect::<Result<_, _>>()?;
            line(digraph_to_nat(&edges)?)
        }
        Cmd::Enumerate { .. } => unreachable!("streamed by run"),
    })
}

fn render_dag(g: Dag, n: &Nat, dot: bool) -> Result<String, Failure> {
    if dot {
        let labels: Vec<String> = nat_to_parts(n).iter().rev().map(Nat::to_string).collect();
        Ok(dag_to_dot(&g, Some(&labels))?)
    } else {
        Ok(pair_lines(g.edges()))
    }
}

fn line(item: impl fmt::Display) -> String {
    format!("{item}\n")
}

fn join_line<T: fmt::Display>(items: &[T]) -> String {
    format!("{}\n", comma_free_join(items, " "))
}

fn comma_join<T: fmt::Display>(items: &[T]) -> String {
    comma_free_join(items, ",")
}

fn comma_free_join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn pair_lines<T: fmt::Display>(pairs: Vec<(T, T)>) -> String {
    let mut out = String::new();
    for (a, b) in pairs {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

fn stdin_lines() -> Result<Vec<String>, Failure> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
    Ok(text.lines().map(str::to_owned).collect())
}

fn parse_tokens(i: usize, l: &str) -> Result<Vec<Nat>, Failure> {
    l.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| Failure::Usage(format!("line {}: {tok:?} is not a number", i + 1)))
        })
        .collect()
}

fn parse_edge<T: std::str::FromStr>(i: usize, l: &str) -> Result<(T, T), Failure> {
    let toks: Vec<&str> = l.split_whitespace().collect();
    match toks.as_slice() {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => Ok((a, b)),
            _ => Err(Failure::Usage(format!(
                "line {}: edge endpoints must be numbers, got {l:?}",
                i + 1
            ))),
        },
        _ => Err(Failure::Usage(format!(
            "line {}: expected \"from to\", got {l:?}",
            i + 1
        ))),
    }
}
