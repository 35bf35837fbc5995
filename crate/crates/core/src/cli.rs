//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the computation rejects its input, 2 on
//! usage, parse and I/O errors. Every error is one stderr line of the form
//! `error: <CODE>: <detail>`.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use crate::error::Error;
use crate::multigraph::MultiGraph;
use crate::oracle::{oracle_chromatic, oracle_flow};
use crate::outerplanar::flow_outerplanar;
use crate::polyring::IntPoly;
use crate::vjtree::{chromatic_vjtree, VertexJoinTree};
use crate::wheels::{chromatic_clique_join, chromatic_wheel_telescoped, flow_wheel, phi_dual, PhiString};

#[derive(Parser, Debug)]
#[command(name = "vjpoly", version, about = "Exact chromatic and flow polynomials")]
struct Cli {
    /// Also evaluate the result at these integers.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    eval: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic polynomials.
    #[command(subcommand)]
    Chromatic(ChromaticCmd),
    /// Flow polynomials.
    #[command(subcommand)]
    Flow(FlowCmd),
    /// Dual phi-strings.
    #[command(subcommand)]
    Dual(DualCmd),
    /// Deletion-contraction reference values.
    #[command(subcommand)]
    Oracle(OracleCmd),
}

#[derive(Subcommand, Debug)]
enum ChromaticCmd {
    /// Tree joined to an apex, from a .vjt file.
    Tree { file: PathBuf },
    /// Complete graph K_n joined to an apex.
    Clique {
        #[arg(long)]
        n: usize,
        /// 1-indexed vertices joined to the apex; repeats add parallel edges.
        #[arg(long, value_delimiter = ',')]
        join: Vec<usize>,
    },
    /// Generalized wheel given by its phi-string.
    Wheel {
        #[arg(long, value_delimiter = ',', required = true)]
        phi: Vec<u32>,
    },
}

#[derive(Subcommand, Debug)]
enum FlowCmd {
    /// Outerplanar multigraph, from a .gr file.
    Outerplanar { file: PathBuf },
    /// Generalized wheel given by its phi-string.
    Wheel {
        #[arg(long, value_delimiter = ',', required = true)]
        phi: Vec<u32>,
    },
}

#[derive(Subcommand, Debug)]
enum DualCmd {
    /// Phi-string of the dual wheel.
    Phi {
        #[arg(long, value_delimiter = ',', required = true)]
        phi: Vec<u32>,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    Chromatic { file: PathBuf },
    Flow { file: PathBuf },
}

/// A failed invocation.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(String),
    Io(String),
    Domain(Error),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Domain(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(d) => write!(f, "USAGE: {d}"),
            Failure::Parse(d) => write!(f, "PARSE: {d}"),
            Failure::Io(d) => write!(f, "IO: {d}"),
            Failure::Domain(e) => write!(f, "{}: {e}", e.code()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let msg = e.to_string();
            let detail: Vec<&str> = msg
                .lines()
                .take_while(|l| !l.is_empty() && !l.starts_with("Usage:"))
                .map(|l| l.trim().trim_start_matches("error: "))
                .collect();
            let _ = writeln!(err, "error: USAGE: {}", detail.join(" "));
            return 2;
        }
    };
    match execute(&cli) {
        Ok(lines) => {
            for line in lines {
                let _ = writeln!(out, "{line}");
            }
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<Vec<String>, Failure> {
    let points = cli
        .eval
        .iter()
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| Failure::Usage(format!("invalid evaluation point '{s}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let poly = match &cli.command {
        Command::Dual(DualCmd::Phi { phi }) => {
            let d = phi_dual(&PhiString::new(phi.clone())?)?;
            return Ok(vec![format!("phi {d}")]);
        }
        Command::Chromatic(ChromaticCmd::Tree { file }) => {
            chromatic_vjtree(&parse_vjt(&read(file)?).map_err(|e| at(file, e))?)?
        }
        Command::Chromatic(ChromaticCmd::Clique { n, join }) => {
            let mut mult = vec![0u32; *n];
            for &v in join {
                if v == 0 || v > *n {
                    return Err(Error::InvalidVertex { vertex: v, count: *n }.into());
                }
                mult[v - 1] += 1;
            }
            chromatic_clique_join(*n, &mult)?
        }
        Command::Chromatic(ChromaticCmd::Wheel { phi }) => {
            chromatic_wheel_telescoped(&PhiString::new(phi.clone())?)?
        }
        Command::Flow(FlowCmd::Outerplanar { file }) => {
            flow_outerplanar(&parse_gr(&read(file)?).map_err(|e| at(file, e))?)?
        }
        Command::Flow(FlowCmd::Wheel { phi }) => flow_wheel(&PhiString::new(phi.clone())?)?,
        Command::Oracle(OracleCmd::Chromatic { file }) => {
            oracle_chromatic(&parse_gr(&read(file)?).map_err(|e| at(file, e))?)?
        }
        Command::Oracle(OracleCmd::Flow { file }) => {
            oracle_flow(&parse_gr(&read(file)?).map_err(|e| at(file, e))?)?
        }
    };

    let mut lines = vec![format_poly(&poly)];
    for t in &points {
        lines.push(format!("eval {t} {}", poly.eval(t)));
    }
    Ok(lines)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn at(path: &Path, detail: String) -> Failure {
    Failure::Parse(format!("{}:{detail}", path.display()))
}

/// `poly c0 c1 ... cd`, or `poly 0` for the zero polynomial.
pub fn format_poly(p: &IntPoly) -> String {
    if p.is_zero() {
        return "poly 0".to_string();
    }
    let mut s = String::from("poly");
    for c in p.coeffs() {
        s.push(' ');
        s.push_str(&c.to_string());
    }
    s
}

/// Inverse of [`format_poly`].
pub fn parse_poly_line(line: &str) -> Option<IntPoly> {
    let mut words = line.split_ascii_whitespace();
    if words.next()? != "poly" {
        return None;
    }
    let coeffs = words.map(|w| w.parse::<BigInt>().ok()).collect::<Option<Vec<_>>>()?;
    if coeffs.is_empty() {
        return None;
    }
    Some(IntPoly::from_coeffs(coeffs))
}

/// Content lines with their 1-based numbers; `comment` starts a comment.
fn content_lines<'a>(
    text: &'a str,
    comment: impl Fn(&str) -> bool + 'a,
) -> impl Iterator<Item = (usize, Vec<&'a str>)> + 'a {
    text.lines().enumerate().filter_map(move |(i, line)| {
        let words: Vec<&str> = line.split_ascii_whitespace().collect();
        if words.is_empty() || comment(words[0]) {
            None
        } else {
            Some((i + 1, words))
        }
    })
}

fn number(lineno: usize, word: &str) -> Result<usize, String> {
    word.parse().map_err(|_| format!("{lineno}: expected a nonnegative integer, got '{word}'"))
}

fn vertex(lineno: usize, word: &str, n: usize) -> Result<usize, String> {
    match number(lineno, word)? {
        v if v >= 1 && v <= n => Ok(v - 1),
        v => Err(format!("{lineno}: vertex {v} outside 1..{n}")),
    }
}

/// Parses the `.vjt` format: `vjt <n>`, then `n-1` lines `edge <u> <v>`,
/// then any number of `join <v> <mult>` lines. Vertices are 1-indexed and
/// `#` starts a comment. Errors carry a line-number prefix.
pub fn parse_vjt(text: &str) -> Result<VertexJoinTree, String> {
    let text: String = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join("\n");
    let mut lines = content_lines(&text, |_| false);
    let (hl, header) = lines.next().ok_or_else(|| "1: missing 'vjt <n>' header".to_string())?;
    let n = match header.as_slice() {
        ["vjt", n] => number(hl, n)?,
        _ => return Err(format!("{hl}: expected 'vjt <n>'")),
    };
    if n == 0 {
        return Err(format!("{hl}: tree needs at least one vertex"));
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut mult = vec![0u32; n];
    let mut joins_started = false;
    for (ln, words) in lines {
        match words.as_slice() {
            ["edge", u, v] => {
                if joins_started {
                    return Err(format!("{ln}: edge after join lines"));
                }
                edges.push((vertex(ln, u, n)?, vertex(ln, v, n)?));
            }
            ["join", v, m] => {
                joins_started = true;
                let v = vertex(ln, v, n)?;
                let m = number(ln, m)?;
                if m == 0 {
                    return Err(format!("{ln}: join multiplicity must be at least 1"));
                }
                mult[v] = u32::try_from(m as u64 + mult[v] as u64)
                    .map_err(|_| format!("{ln}: join multiplicity too large"))?;
            }
            _ => return Err(format!("{ln}: expected 'edge <u> <v>' or 'join <v> <mult>'")),
        }
    }
    if edges.len() != n - 1 {
        return Err(format!("{hl}: expected {} edge lines, found {}", n - 1, edges.len()));
    }
    VertexJoinTree::new(n, edges, mult).map_err(|e| format!("{hl}: {e}"))
}

/// Parses the `.gr` format: `p edge <n> <m>`, then `m` lines `e <u> <v>`.
/// Vertices are 1-indexed; lines starting with `c` are comments.
pub fn parse_gr(text: &str) -> Result<MultiGraph, String> {
    let mut lines = content_lines(text, |w| w == "c" || w.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| "1: missing 'p edge <n> <m>' header".to_string())?;
    let (n, m) = match header.as_slice() {
        ["p", "edge", n, m] => (number(hl, n)?, number(hl, m)?),
        _ => return Err(format!("{hl}: expected 'p edge <n> <m>'")),
    };
    let mut edges = Vec::with_capacity(m);
    for (ln, words) in lines {
        match words.as_slice() {
            ["e", u, v] => edges.push((vertex(ln, u, n)?, vertex(ln, v, n)?)),
            _ => return Err(format!("{ln}: expected 'e <u> <v>'")),
        }
    }
    if edges.len() != m {
        return Err(format!("{hl}: header announces {m} edges, found {}", edges.len()));
    }
    MultiGraph::new(n, edges).map_err(|e| format!("{hl}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vjt_grammar() {
        let t = parse_vjt("# star\nvjt 3\nedge 1 2\nedge 1 3 # leaf\n\njoin 2 1\njoin 2 2\njoin 3 1\n").unwrap();
        assert_eq!(t.multiplicities(), &[0, 3, 1]);
        assert_eq!(t.tree_edges(), &[(0, 1), (0, 2)]);
        assert!(parse_vjt("vjt 2\njoin 1 1\nedge 1 2\n").unwrap_err().starts_with("3:"));
        assert!(parse_vjt("vjt 3\nedge 1 2\n").is_err());
        assert!(parse_vjt("vjt 2\nedge 1 3\n").unwrap_err().starts_with("2:"));
        assert!(parse_vjt("vjt 2\nedge 1 2\njoin 1 0\n").is_err());
        assert!(parse_vjt("vjt 3\nedge 1 2\nedge 2 1\n").is_err());
        assert!(parse_vjt("vjt 0\n").is_err());
        assert_eq!(parse_vjt("vjt 1\n").unwrap().vertex_count(), 1);
    }

    #[test]
    fn gr_grammar() {
        let g = parse_gr("c loop and a double edge\np edge 2 3\ne 1 1\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.edges(), &[(0, 0), (0, 1), (1, 0)]);
        assert!(parse_gr("p edge 2 2\ne 1 2\n").is_err());
        assert!(parse_gr("p edge 2 1\ne 1 3\n").unwrap_err().starts_with("2:"));
        assert!(parse_gr("e 1 2\n").is_err());
    }

    #[test]
    fn poly_lines() {
        let p = IntPoly::from_i64s(&[0, -2, 7, -9, 5, -1]);
        assert_eq!(format_poly(&p), "poly 0 -2 7 -9 5 -1");
        assert_eq!(parse_poly_line("poly 0 -2 7 -9 5 -1"), Some(p));
        assert_eq!(format_poly(&IntPoly::zero()), "poly 0");
        assert_eq!(parse_poly_line("poly 0"), Some(IntPoly::zero()));
        assert_eq!(parse_poly_line("poly"), None);
        assert_eq!(parse_poly_line("phi 1,2"), None);
    }
}
