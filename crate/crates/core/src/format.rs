//! Hypergraph input format and decomposition output formats.
//!
//! Input is a list of edge terms `name(v1,...,vn)` separated by commas and
//! ended by a period. `%` starts a comment running to the end of the line.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::HTNode;
use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::set::{EdgeSet, VertexSet};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("missing terminating `.`")]
    MissingTerminator,
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("decomposition still contains placeholder nodes")]
    PlaceholderPresent,
    #[error("malformed decomposition json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Gml,
    Json,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Next significant character, skipping whitespace and comments.
    fn peek(&mut self) -> Option<char> {
        loop {
            match *self.chars.peek()? {
                c if c.is_whitespace() => {
                    self.bump();
                }
                '%' => {
                    while self.chars.peek().is_some_and(|&c| c != '\n') {
                        self.bump();
                    }
                }
                c => return Some(c),
            }
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn name(&mut self) -> Result<String, ParseError> {
        let mut out = String::new();
        match self.peek() {
            Some(c) if is_name_char(c) => {}
            Some(c) => return Err(self.error(format!("expected a name, found `{c}`"))),
            None => return Err(self.error("expected a name, found end of input")),
        }
        while let Some(&c) = self.chars.peek() {
            if !is_name_char(c) {
                break;
            }
            out.push(c);
            self.bump();
        }
        Ok(out)
    }
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == ':'
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lex = Lexer::new(text);
    let mut edges: Vec<(String, Vec<String>)> = Vec::new();

    match lex.peek() {
        None => return Ok(Hypergraph::build(edges)?),
        Some('.') => {
            lex.bump();
        }
        Some(_) => loop {
            let name = lex.name()?;
            lex.expect('(')?;
            let mut vertices = Vec::new();
            if lex.peek() == Some(')') {
                lex.bump();
                return Err(HypergraphError::EmptyEdge(name).into());
            }
            loop {
                vertices.push(lex.name()?);
                match lex.peek() {
                    Some(',') => {
                        lex.bump();
                    }
                    Some(')') => {
                        lex.bump();
                        break;
                    }
                    Some(c) => return Err(lex.error(format!("expected `,` or `)`, found `{c}`"))),
                    None => return Err(lex.error("unclosed edge term")),
                }
            }
            edges.push((name, vertices));
            match lex.peek() {
                Some(',') => {
                    lex.bump();
                }
                Some('.') => {
                    lex.bump();
                    break;
                }
                Some(c) => return Err(lex.error(format!("expected `,` or `.`, found `{c}`"))),
                None => return Err(ParseError::MissingTerminator),
            }
        },
    }

    if let Some(c) = lex.peek() {
        return Err(lex.error(format!("unexpected `{c}` after terminating `.`")));
    }
    Ok(Hypergraph::build(edges)?)
}

fn sorted_edge_names(h: &Hypergraph, edges: &EdgeSet) -> Vec<String> {
    let mut names: Vec<String> = edges.iter().map(|e| h.edge_name(e).to_owned()).collect();
    names.sort();
    names
}

fn sorted_vertex_names(h: &Hypergraph, vertices: &VertexSet) -> Vec<String> {
    let mut names: Vec<String> = vertices.iter().map(|v| h.vertex_name(v).to_owned()).collect();
    names.sort();
    names
}

/// `lambda: {..} chi: {..}` with names sorted.
pub fn node_label(h: &Hypergraph, node: &HTNode) -> String {
    format!(
        "lambda: {{{}}} chi: {{{}}}",
        sorted_edge_names(h, &node.lambda).join(","),
        sorted_vertex_names(h, &node.chi).join(",")
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct JsonNode {
    lambda: Vec<String>,
    chi: Vec<String>,
    children: Vec<JsonNode>,
}

fn to_json_node(h: &Hypergraph, node: &HTNode) -> JsonNode {
    JsonNode {
        lambda: sorted_edge_names(h, &node.lambda),
        chi: sorted_vertex_names(h, &node.chi),
        children: node.children.iter().map(|c| to_json_node(h, c)).collect(),
    }
}

fn write_text(h: &Hypergraph, node: &HTNode, depth: usize, out: &mut String) {
    let _ = writeln!(out, "{}{}", "  ".repeat(depth), node_label(h, node));
    for child in &node.children {
        write_text(h, child, depth + 1, out);
    }
}

fn write_gml(h: &Hypergraph, tree: &HTNode, out: &mut String) {
    out.push_str("graph [\n  directed 1\n");
    let nodes = tree.nodes();
    for (id, node) in nodes.iter().enumerate() {
        let _ = writeln!(out, "  node [\n    id {id}\n    label \"{}\"\n  ]", node_label(h, node));
    }
    // pre-order ids: a node's first child directly follows it
    let mut next_id = 0;
    write_gml_edges(tree, &mut next_id, out);
    out.push_str("]\n");
}

fn write_gml_edges(node: &HTNode, next_id: &mut usize, out: &mut String) {
    let id = *next_id;
    *next_id += 1;
    for child in &node.children {
        let _ = writeln!(out, "  edge [\n    source {id}\n    target {}\n  ]", *next_id);
        write_gml_edges(child, next_id, out);
    }
}

pub fn serialize_decomposition(h: &Hypergraph, tree: &HTNode, format: Format) -> Result<String, FormatError> {
    if tree.placeholder_count() > 0 {
        return Err(FormatError::PlaceholderPresent);
    }
    let mut out = String::new();
    match format {
        Format::Text => write_text(h, tree, 0, &mut out),
        Format::Gml => write_gml(h, tree, &mut out),
        Format::Json => {
            out = serde_json::to_string_pretty(&to_json_node(h, tree))?;
            out.push('\n');
        }
    }
    Ok(out)
}

/// Reads back the json output format against the hypergraph it describes.
pub fn parse_json_decomposition(h: &Hypergraph, text: &str) -> Result<HTNode, FormatError> {
    let root: JsonNode = serde_json::from_str(text)?;
    from_json_node(h, &root)
}

fn from_json_node(h: &Hypergraph, node: &JsonNode) -> Result<HTNode, FormatError> {
    let lambda = node
        .lambda
        .iter()
        .map(|n| h.edge_id(n).ok_or_else(|| FormatError::UnknownEdge(n.clone())))
        .collect::<Result<EdgeSet, _>>()?;
    let chi = node
        .chi
        .iter()
        .map(|n| h.vertex_id(n).ok_or_else(|| FormatError::UnknownVertex(n.clone())))
        .collect::<Result<VertexSet, _>>()?;
    let children = node
        .children
        .iter()
        .map(|c| from_json_node(h, c))
        .collect::<Result<_, _>>()?;
    Ok(HTNode::new(lambda, chi, children))
}
