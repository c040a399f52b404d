//! Graph and rational arguments.

use cubicgap::graph::from_graph6;
use cubicgap::{Graph, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: cubicgap::Error },
    #[error("{0}")]
    Io(#[from] io::Error),
}

/// Graph source: `-` for stdin, a path if one exists, otherwise a literal
/// graph6 string.
pub fn graphs(arg: &str) -> io::Result<Graphs> {
    let reader: Box<dyn BufRead> = if arg == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else if Path::new(arg).is_file() {
        Box::new(BufReader::new(File::open(arg)?))
    } else {
        Box::new(io::Cursor::new(arg.to_string().into_bytes()))
    };
    Ok(Graphs { lines: reader.lines(), line: 0 })
}

/// One graph per nonblank line.
pub struct Graphs {
    lines: io::Lines<Box<dyn BufRead>>,
    line: usize,
}

impl Iterator for Graphs {
    type Item = Result<Graph, InputError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let text = match self.lines.next()? {
                Ok(t) => t,
                Err(e) => return Some(Err(e.into())),
            };
            self.line += 1;
            let t = text.trim();
            if t.is_empty() {
                continue;
            }
            let line = self.line;
            return Some(from_graph6(t).map_err(|source| InputError::Graph6 { line, source }));
        }
    }
}

/// Parses `p/q`, an integer, or a finite decimal such as `-2.5617`, exactly.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("not a rational number: {s:?}");
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(p, q));
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits_ok = |d: &str| d.bytes().all(|b| b.is_ascii_digit());
    if (int.is_empty() && frac.is_empty()) || !digits_ok(int) || !digits_ok(frac) {
        return Err(bad());
    }
    let num: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let den = (0..frac.len()).fold(BigInt::one(), |d, _| d * 10);
    let r = Rational::new(num, den);
    Ok(if neg { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-2").unwrap(), q(-2, 1));
        assert_eq!(parse_rational("0").unwrap(), q(0, 1));
        assert_eq!(parse_rational("-2561/1000").unwrap(), q(-2561, 1000));
        assert_eq!(parse_rational("-2.5617").unwrap(), q(-25617, 10000));
        assert_eq!(parse_rational(".5").unwrap(), q(1, 2));
        assert_eq!(parse_rational("3.").unwrap(), q(3, 1));
        for s in ["", "-", ".", "1/0", "1e3", "x", "1.2.3", "- 1"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn literal_and_line_numbers() {
        let gs: Vec<_> = graphs("C~").unwrap().collect();
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].as_ref().unwrap().n(), 4);
        match graphs("C!").unwrap().next().unwrap() {
            Err(InputError::Graph6 { line: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
