//! Text DSL for describing boards.
//!
//! Grammar:
//! ```text
//! spec    := family | product | "file:" path
//! family  := name ":" params
//! product := ("cart" | "strong" | "lex") "(" spec "," spec ")"
//! ```
//! Family names: `path`, `cycle`, `complete`, `star`, `wheel`, `hypercube`,
//! `kpartite` (comma-separated part sizes), `tree` (edge list `u-v;u-v;...`).
//! `render(parse(s))` is the identity on canonical spec strings.

use std::fmt;
use std::path::Path;

use thiserror::Error;

use super::family;
use super::graph::{Graph, GraphError, Vertex};
use super::io::{read_graph, GraphIoError};
use super::product::{product, ProductKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Wheel(usize),
    Hypercube(usize),
    KPartite(Vec<usize>),
    Tree(Vec<(Vertex, Vertex)>),
    Product(ProductKind, Box<GraphSpec>, Box<GraphSpec>),
    File(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown family name `{name}` at byte {offset}")]
    UnknownFamily { offset: usize, name: String },
    #[error("parameter out of range at byte {offset}: {source}")]
    BadParam {
        offset: usize,
        #[source]
        source: GraphError,
    },
}

#[derive(Debug, Error)]
pub enum SpecBuildError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("file reference `{path}`: {source}")]
    File {
        path: String,
        #[source]
        source: GraphIoError,
    },
}

impl GraphSpec {
    /// Builds the described graph. File references resolve relative to the
    /// process working directory.
    pub fn build(&self) -> Result<Graph, SpecBuildError> {
        match self {
            GraphSpec::Path(n) => Ok(family::path(*n)?),
            GraphSpec::Cycle(n) => Ok(family::cycle(*n)?),
            GraphSpec::Complete(n) => Ok(family::complete(*n)?),
            GraphSpec::Star(n) => Ok(family::star(*n)?),
            GraphSpec::Wheel(n) => Ok(family::wheel(*n)?),
            GraphSpec::Hypercube(d) => Ok(family::hypercube(*d)?),
            GraphSpec::KPartite(parts) => Ok(family::complete_multipartite(parts)?),
            GraphSpec::Tree(edges) => Ok(family::tree_from_edges(edges)?),
            GraphSpec::Product(kind, a, b) => Ok(product(&a.build()?, &b.build()?, *kind)?),
            GraphSpec::File(path) => read_graph(Path::new(path)).map_err(|source| {
                SpecBuildError::File {
                    path: path.clone(),
                    source,
                }
            }),
        }
    }

    /// Canonical text form; `parse(render(s)) == s`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::Star(n) => write!(f, "star:{n}"),
            GraphSpec::Wheel(n) => write!(f, "wheel:{n}"),
            GraphSpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            GraphSpec::KPartite(parts) => {
                write!(f, "kpartite:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            GraphSpec::Tree(edges) => {
                write!(f, "tree:")?;
                for (i, (u, v)) in edges.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{u}-{v}")?;
                }
                Ok(())
            }
            GraphSpec::Product(kind, a, b) => write!(f, "{}({},{})", kind.name(), a, b),
            GraphSpec::File(path) => write!(f, "file:{path}"),
        }
    }
}

pub fn parse_graph_spec(text: &str) -> Result<GraphSpec, SpecError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    if p.bytes.is_empty() {
        return Err(p.syntax("empty spec"));
    }
    let spec = p.parse_spec()?;
    if p.pos != p.bytes.len() {
        return Err(p.syntax("trailing input"));
    }
    Ok(spec)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn syntax(&self, message: impl Into<String>) -> SpecError {
        SpecError::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), SpecError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{}`", b as char)))
        }
    }

    fn ident(&mut self) -> (usize, String) {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_alphanumeric() || b == b'_') {
            self.pos += 1;
        }
        (
            start,
            String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned(),
        )
    }

    fn number(&mut self) -> Result<usize, SpecError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| SpecError::Syntax {
                offset: start,
                message: "number too large".into(),
            })
    }

    fn parse_spec(&mut self) -> Result<GraphSpec, SpecError> {
        let (start, name) = self.ident();
        if name.is_empty() {
            return Err(self.syntax("expected a family or product name"));
        }
        match name.as_str() {
            "cart" | "strong" | "lex" => {
                let kind = match name.as_str() {
                    "cart" => ProductKind::Cartesian,
                    "strong" => ProductKind::Strong,
                    _ => ProductKind::Lexicographic,
                };
                self.expect(b'(')?;
                let a = self.parse_spec()?;
                self.expect(b',')?;
                let b = self.parse_spec()?;
                self.expect(b')')?;
                Ok(GraphSpec::Product(kind, Box::new(a), Box::new(b)))
            }
            "file" => {
                self.expect(b':')?;
                // The path runs to the end of the nearest enclosing product
                // argument, i.e. up to `,` or `)`, or to end of input.
                let start = self.pos;
                while matches!(self.peek(), Some(b) if b != b',' && b != b')') {
                    self.pos += 1;
                }
                if self.pos == start {
                    return Err(self.syntax("expected a file path"));
                }
                Ok(GraphSpec::File(
                    String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned(),
                ))
            }
            "tree" => {
                self.expect(b':')?;
                let mut edges = Vec::new();
                loop {
                    let u = self.number()?;
                    self.expect(b'-')?;
                    let v = self.number()?;
                    if u > Vertex::MAX as usize || v > Vertex::MAX as usize {
                        return Err(self.syntax("vertex id too large"));
                    }
                    edges.push((u as Vertex, v as Vertex));
                    if self.peek() == Some(b';') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.validate(start, GraphSpec::Tree(edges))
            }
            "kpartite" => {
                self.expect(b':')?;
                let mut parts = vec![self.number()?];
                while self.peek() == Some(b',') {
                    // A comma may belong to an enclosing product; only consume
                    // it when a digit follows.
                    if matches!(self.bytes.get(self.pos + 1), Some(b) if b.is_ascii_digit()) {
                        self.pos += 1;
                        parts.push(self.number()?);
                    } else {
                        break;
                    }
                }
                self.validate(start, GraphSpec::KPartite(parts))
            }
            "path" | "cycle" | "complete" | "star" | "wheel" | "hypercube" => {
                self.expect(b':')?;
                let n = self.number()?;
                let spec = match name.as_str() {
                    "path" => GraphSpec::Path(n),
                    "cycle" => GraphSpec::Cycle(n),
                    "complete" => GraphSpec::Complete(n),
                    "star" => GraphSpec::Star(n),
                    "wheel" => GraphSpec::Wheel(n),
                    _ => GraphSpec::Hypercube(n),
                };
                self.validate(start, spec)
            }
            _ => Err(SpecError::UnknownFamily {
                offset: start,
                name,
            }),
        }
    }

    /// Family parameters are validated eagerly so diagnostics carry the spec
    /// offset rather than surfacing later at build time.
    fn validate(&self, offset: usize, spec: GraphSpec) -> Result<GraphSpec, SpecError> {
        match spec.build() {
            Ok(_) => Ok(spec),
            Err(SpecBuildError::Graph(source)) => Err(SpecError::BadParam { offset, source }),
            Err(SpecBuildError::File { .. }) => unreachable!("families do not touch files"),
        }
    }
}
