//! Line-oriented text format for tensors, vectors and matrices.
//!
//! ```text
//! # comments and blank lines are ignored
//! tensor 4 2
//! 1 1 1 1 1
//! 2 2 2 2 1
//! vec 2
//! 1 0.5
//! 2 1
//! matrix 2
//! 1 2 -1
//! ```
//!
//! A header `tensor r n`, `vec n` or `matrix n` opens a block; each following line holds 1-based
//! indices and a value. Omitted entries are zero. A file may hold several blocks.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::tensor::{Matrix, Tensor};

/// Shortest representation that parses back to the same `f64`.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let a = x.abs();
    if (1e-5..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn format_vector(u: &[f64]) -> String {
    u.iter().map(|&x| format_number(x)).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Block {
    Tensor(Tensor),
    Vector(Vec<f64>),
    Matrix(Matrix),
}

impl Block {
    pub fn kind(&self) -> &'static str {
        match self {
            Block::Tensor(_) => "tensor",
            Block::Vector(_) => "vec",
            Block::Matrix(_) => "matrix",
        }
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

fn parse_usize(tok: (usize, &str), line: usize, what: &str) -> Result<usize> {
    tok.1
        .parse::<usize>()
        .map_err(|_| parse_error(line, tok.0, format!("expected {what}, found {:?}", tok.1)))
}

fn parse_value(tok: (usize, &str), line: usize) -> Result<f64> {
    let v = tok
        .1
        .parse::<f64>()
        .map_err(|_| parse_error(line, tok.0, format!("expected a number, found {:?}", tok.1)))?;
    if !v.is_finite() {
        return Err(parse_error(line, tok.0, format!("non-finite value {:?}", tok.1)));
    }
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Tensor,
    Vector,
    Matrix,
}

struct Pending {
    kind: Kind,
    order: usize,
    dim: usize,
    seen: BTreeSet<Vec<usize>>,
    entries: Vec<(Vec<usize>, f64)>,
}

impl Pending {
    fn finish(self) -> Result<Block> {
        Ok(match self.kind {
            Kind::Tensor => Block::Tensor(Tensor::new(self.order, self.dim, self.entries)?),
            Kind::Vector => {
                let mut u = vec![0.0; self.dim];
                for (t, v) in self.entries {
                    u[t[0] - 1] = v;
                }
                Block::Vector(u)
            }
            Kind::Matrix => {
                let mut m = Matrix::zeros(self.dim);
                for (t, v) in self.entries {
                    m.set(t[0] - 1, t[1] - 1, v);
                }
                Block::Matrix(m)
            }
        })
    }
}

fn parse_header(toks: &[(usize, &str)], line: usize) -> Result<Option<Pending>> {
    let (kind, arity) = match toks[0].1 {
        "tensor" => (Kind::Tensor, 2),
        "vec" => (Kind::Vector, 1),
        "matrix" => (Kind::Matrix, 1),
        _ => return Ok(None),
    };
    if toks.len() != arity + 1 {
        let col = toks.get(arity + 1).map_or(toks[toks.len() - 1].0, |t| t.0);
        return Err(parse_error(
            line,
            col,
            format!("header {:?} takes {arity} size field(s)", toks[0].1),
        ));
    }
    let (order, dim) = match kind {
        Kind::Tensor => {
            let r = parse_usize(toks[1], line, "an order")?;
            if r < 2 {
                return Err(parse_error(line, toks[1].0, "tensor order must be at least 2"));
            }
            (r, parse_usize(toks[2], line, "a dimension")?)
        }
        Kind::Vector => (1, parse_usize(toks[1], line, "a dimension")?),
        Kind::Matrix => (2, parse_usize(toks[1], line, "a dimension")?),
    };
    let dim_col = toks[arity].0;
    if dim == 0 {
        return Err(parse_error(line, dim_col, "dimension must be positive"));
    }
    Ok(Some(Pending {
        kind,
        order,
        dim,
        seen: BTreeSet::new(),
        entries: Vec::new(),
    }))
}

fn parse_entry(p: &mut Pending, toks: &[(usize, &str)], line: usize) -> Result<()> {
    if toks.len() != p.order + 1 {
        let col = toks.get(p.order + 1).map_or(toks[toks.len() - 1].0, |t| t.0);
        return Err(parse_error(
            line,
            col,
            format!("expected {} indices and a value, found {} fields", p.order, toks.len()),
        ));
    }
    let mut tuple = Vec::with_capacity(p.order);
    for &tok in &toks[..p.order] {
        let i = parse_usize(tok, line, "an index")?;
        if i == 0 || i > p.dim {
            return Err(parse_error(
                line,
                tok.0,
                format!("index {i} out of range (dim {})", p.dim),
            ));
        }
        tuple.push(i);
    }
    let value = parse_value(toks[p.order], line)?;
    if !p.seen.insert(tuple.clone()) {
        return Err(parse_error(line, toks[0].0, format!("duplicate tuple {tuple:?}")));
    }
    p.entries.push((tuple, value));
    Ok(())
}

/// Every block in `text`, in file order.
pub fn parse_blocks(text: &str) -> Result<Vec<Block>> {
    let mut blocks = Vec::new();
    let mut current: Option<Pending> = None;
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        if toks.is_empty() {
            continue;
        }
        if let Some(header) = parse_header(&toks, line)? {
            if let Some(p) = current.replace(header) {
                blocks.push(p.finish()?);
            }
            continue;
        }
        match current.as_mut() {
            Some(p) => parse_entry(p, &toks, line)?,
            None => {
                return Err(parse_error(
                    line,
                    toks[0].0,
                    format!("expected a header (tensor, vec or matrix), found {:?}", toks[0].1),
                ))
            }
        }
    }
    if let Some(p) = current {
        blocks.push(p.finish()?);
    }
    Ok(blocks)
}

fn single(text: &str, want: &str) -> Result<Block> {
    let mut blocks = parse_blocks(text)?;
    match blocks.len() {
        1 if blocks[0].kind() == want => Ok(blocks.remove(0)),
        1 => Err(parse_error(1, 1, format!("expected a {want} block, found {}", blocks[0].kind()))),
        0 => Err(parse_error(1, 1, format!("expected a {want} block, found none"))),
        k => Err(parse_error(1, 1, format!("expected one {want} block, found {k} blocks"))),
    }
}

pub fn parse_tensor(text: &str) -> Result<Tensor> {
    match single(text, "tensor")? {
        Block::Tensor(t) => Ok(t),
        _ => unreachable!(),
    }
}

pub fn parse_vector(text: &str) -> Result<Vec<f64>> {
    match single(text, "vec")? {
        Block::Vector(u) => Ok(u),
        _ => unreachable!(),
    }
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    match single(text, "matrix")? {
        Block::Matrix(m) => Ok(m),
        _ => unreachable!(),
    }
}

/// Nonzero entries in lexicographic order.
pub fn write_tensor(m: &Tensor) -> String {
    let mut s = format!("tensor {} {}\n", m.order(), m.dim());
    for (t, v) in m.entries() {
        for i in t {
            let _ = write!(s, "{i} ");
        }
        s.push_str(&format_number(v));
        s.push('\n');
    }
    s
}

/// Every component, zeros included.
pub fn write_vector(u: &[f64]) -> String {
    let mut s = format!("vec {}\n", u.len());
    for (i, &x) in u.iter().enumerate() {
        let _ = writeln!(s, "{} {}", i + 1, format_number(x));
    }
    s
}

/// Nonzero entries, row-major.
pub fn write_matrix(a: &Matrix) -> String {
    let n = a.dim();
    let mut s = format!("matrix {n}\n");
    for i in 0..n {
        for j in 0..n {
            let x = a.get(i, j);
            if x != 0.0 {
                let _ = writeln!(s, "{} {} {}", i + 1, j + 1, format_number(x));
            }
        }
    }
    s
}

pub fn write_block(b: &Block) -> String {
    match b {
        Block::Tensor(t) => write_tensor(t),
        Block::Vector(u) => write_vector(u),
        Block::Matrix(m) => write_matrix(m),
    }
}

/// Parses a whitespace-separated list of numbers such as `"1 -0.5 2"`.
pub fn parse_number_list(text: &str) -> Result<Vec<f64>> {
    tokens(text).into_iter().map(|t| parse_value(t, 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn numbers_round_trip() {
        for x in [1.0, -3.0, 0.1, 1.0 / 3.0, 1e-7, -2.5e20, 123456.789, f64::MIN_POSITIVE, f64::MAX] {
            let s = format_number(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
        assert_eq!(format_number(-3.0), "-3");
        assert_eq!(format_number(0.5), "0.5");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(1e-7), "1e-7");
    }

    #[test]
    fn parses_identity() {
        let t = parse_tensor("tensor 4 2\n1 1 1 1 1\n2 2 2 2 1\n").unwrap();
        assert_eq!(t, Tensor::identity(4, 2).unwrap());
        // the last field is always the value
        let t = parse_tensor("tensor 4 2\n1 1 1 1 1\n2 2 2 2 2\n").unwrap();
        assert_eq!(t, Tensor::diagonal(4, &[1.0, 2.0]).unwrap());
    }

    #[test]
    fn writes_example_two_in_order() {
        let text = write_tensor(&fixtures::example2());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "tensor 4 2");
        assert_eq!(lines.len(), 8);
        let tuples: Vec<Vec<usize>> = lines[1..]
            .iter()
            .map(|l| l.split(' ').take(4).map(|x| x.parse().unwrap()).collect())
            .collect();
        let mut sorted = tuples.clone();
        sorted.sort();
        assert_eq!(tuples, sorted);
        assert_eq!(parse_tensor(&text).unwrap(), fixtures::example2());
    }

    #[test]
    fn reports_out_of_range_with_position() {
        let e = parse_tensor("tensor 4 2\n1 1 1 3 1\n").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 2,
                column: 7,
                message: "index 3 out of range (dim 2)".into()
            }
        );
        assert!(e.to_string().contains("index 3 out of range (dim 2)"));
    }

    #[test]
    fn reports_other_errors() {
        let dup = parse_tensor("tensor 2 2\n1 2 1\n1 2 5\n").unwrap_err();
        assert!(matches!(dup, Error::Parse { line: 3, column: 1, .. }));
        let arity = parse_tensor("tensor 3 2\n1 2 1\n").unwrap_err();
        assert!(matches!(arity, Error::Parse { line: 2, .. }));
        let header = parse_tensor("tensor x 2\n").unwrap_err();
        assert!(matches!(header, Error::Parse { line: 1, column: 8, .. }));
        let orphan = parse_tensor("1 1 1\n").unwrap_err();
        assert!(matches!(orphan, Error::Parse { line: 1, column: 1, .. }));
        let nan = parse_vector("vec 1\n1 nan\n").unwrap_err();
        assert!(matches!(nan, Error::Parse { line: 2, column: 3, .. }));
        assert!(parse_tensor("tensor 1 2\n").is_err());
        assert!(parse_tensor("vec 2\n").is_err());
    }

    #[test]
    fn comments_and_blocks() {
        let text = "# header\n\ntensor 2 2 # a matrix-shaped tensor\n1 2 -1\n\nvec 2\n2 0.5\nmatrix 2\n2 1 3\n";
        let blocks = parse_blocks(text).unwrap();
        assert_eq!(blocks.len(), 3);
        assert_eq!(blocks[1], Block::Vector(vec![0.0, 0.5]));
        let Block::Matrix(m) = &blocks[2] else { panic!() };
        assert_eq!(m.get(1, 0), 3.0);
        let again: String = blocks.iter().map(write_block).collect();
        assert_eq!(parse_blocks(&again).unwrap(), blocks);
    }

    #[test]
    fn vector_and_matrix_round_trip() {
        let u = vec![0.0, -1.5, 1e-9];
        assert_eq!(parse_vector(&write_vector(&u)).unwrap(), u);
        let a = Matrix::from_rows(&[vec![1.0, -1.0], vec![0.0, 2.0]]).unwrap();
        assert_eq!(parse_matrix(&write_matrix(&a)).unwrap(), a);
    }

    #[test]
    fn number_lists() {
        assert_eq!(parse_number_list(" 1  -2.5 ").unwrap(), vec![1.0, -2.5]);
        assert!(matches!(parse_number_list("1 x"), Err(Error::Parse { column: 3, .. })));
    }
}
