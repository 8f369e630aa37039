//! Text formats.
//!
//! Edge list: the first line holds the order `n`, every further non-empty
//! line is an arc `u v` (0-indexed, `u u` is a loop). `#` starts a comment.
//! Duplicate arcs are rejected.
//!
//! Blueprint: a line `n`, a line `fplus: a0 a1 …`, a line `vd: i j …`, then
//! any number of `parent u v` lines meaning `u` is the parent of `v` in `𝓗`.

use std::fmt::Write as _;

use crate::construct::ExtremalBlueprint;
use crate::digraph::Digraph;
use crate::error::{ParseError, ParseErrorKind};
use crate::forcing::{forced_report, forcing_arcs};
use crate::vertex_set::{VertexSet, MAX_ORDER};

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_order(line: usize, body: &str) -> Result<usize, ParseError> {
    let n: usize = body
        .parse()
        .map_err(|_| ParseError::new(line, ParseErrorKind::BadOrder(body.to_string())))?;
    if n > MAX_ORDER {
        return Err(ParseError::new(line, ParseErrorKind::OrderTooLarge { order: n, max: MAX_ORDER }));
    }
    Ok(n)
}

fn parse_vertex(line: usize, token: &str, n: usize, whole: &str) -> Result<usize, ParseError> {
    let v: usize = token
        .parse()
        .map_err(|_| ParseError::new(line, ParseErrorKind::MalformedLine(whole.to_string())))?;
    if v >= n {
        return Err(ParseError::new(line, ParseErrorKind::OutOfRange { vertex: v, order: n }));
    }
    Ok(v)
}

pub fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or(ParseError::new(1, ParseErrorKind::MissingOrder))?;
    let n = parse_order(line, first)?;
    let mut d = Digraph::new(n);
    for (line, body) in lines {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return Err(ParseError::new(line, ParseErrorKind::MalformedLine(body.to_string())));
        };
        let u = parse_vertex(line, u, n, body)?;
        let v = parse_vertex(line, v, n, body)?;
        if !d.add_arc(u, v) {
            return Err(ParseError::new(line, ParseErrorKind::DuplicateArc(u, v)));
        }
    }
    Ok(d)
}

pub fn to_edge_list(d: &Digraph) -> String {
    let mut out = format!("{}\n", d.order());
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Single-line edge list, `n: u v, u v, …`, used inside reports.
pub fn to_compact_edge_list(d: &Digraph) -> String {
    let arcs: Vec<String> = d.arcs().map(|(u, v)| format!("{u} {v}")).collect();
    format!("{}: {}", d.order(), arcs.join(", "))
}

pub fn parse_blueprint(text: &str) -> Result<ExtremalBlueprint, ParseError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or(ParseError::new(1, ParseErrorKind::MissingOrder))?;
    let n = parse_order(line, first)?;
    let mut f_plus: Option<Vec<usize>> = None;
    let mut v_d: Option<VertexSet> = None;
    let mut h_parent = vec![None; n];
    for (line, body) in lines {
        let (head, rest) = match body.split_once(':') {
            Some((h, r)) => (h.trim(), r),
            None => body.split_once(char::is_whitespace).unwrap_or((body, "")),
        };
        let values = rest
            .split_whitespace()
            .map(|t| parse_vertex(line, t, n, body))
            .collect::<Result<Vec<usize>, _>>()?;
        match head {
            "fplus" => {
                if f_plus.is_some() {
                    return Err(ParseError::new(line, ParseErrorKind::DuplicateDirective(head.into())));
                }
                if values.len() != n {
                    return Err(ParseError::new(line, ParseErrorKind::WrongLength { expected: n, got: values.len() }));
                }
                f_plus = Some(values);
            }
            "vd" => {
                if v_d.is_some() {
                    return Err(ParseError::new(line, ParseErrorKind::DuplicateDirective(head.into())));
                }
                v_d = Some(values.into_iter().collect());
            }
            "parent" => {
                let [u, v] = values[..] else {
                    return Err(ParseError::new(line, ParseErrorKind::MalformedLine(body.to_string())));
                };
                if h_parent[v].replace(u).is_some() {
                    return Err(ParseError::new(line, ParseErrorKind::DuplicateDirective(format!("parent of {v}"))));
                }
            }
            other => return Err(ParseError::new(line, ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }
    let last = text.lines().count().max(1);
    Ok(ExtremalBlueprint {
        f_plus: f_plus.ok_or(ParseError::new(last, ParseErrorKind::MissingDirective("fplus")))?,
        v_d: v_d.ok_or(ParseError::new(last, ParseErrorKind::MissingDirective("vd")))?,
        h_parent,
    })
}

pub fn to_blueprint_text(b: &ExtremalBlueprint) -> String {
    let join = |it: &mut dyn Iterator<Item = usize>| it.map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    let mut out = format!("{}\n", b.order());
    let _ = writeln!(out, "fplus: {}", join(&mut b.f_plus.iter().copied()));
    let _ = writeln!(out, "vd: {}", join(&mut b.v_d.iter()));
    for (v, p) in b.h_parent.iter().enumerate() {
        if let Some(p) = p {
            let _ = writeln!(out, "parent {p} {v}");
        }
    }
    out
}

/// Styling for DOT output: dashed arcs (forcing), boxed vertices
/// (domination-forced) and bold arcs (used for `𝓗(D)` panels).
#[derive(Debug, Clone, Default)]
pub struct DotStyle {
    pub name: String,
    pub labels: Option<Vec<String>>,
    pub dashed: Vec<(usize, usize)>,
    pub bold: Vec<(usize, usize)>,
    pub boxed: VertexSet,
}

impl DotStyle {
    pub fn named(name: &str) -> Self {
        DotStyle { name: name.to_string(), ..Default::default() }
    }

    /// Dashed forcing arcs and boxed domination-forced vertices of `d`.
    pub fn forcing(name: &str, d: &Digraph) -> Self {
        DotStyle {
            name: name.to_string(),
            dashed: forcing_arcs(d),
            boxed: forced_report(d).domination_forced(),
            ..Default::default()
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }
}

fn dot_id(name: &str) -> String {
    if !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        name.to_string()
    } else {
        format!("\"{}\"", name.replace('"', "\\\""))
    }
}

pub fn to_dot(d: &Digraph, style: &DotStyle) -> String {
    let name = if style.name.is_empty() { "D" } else { &style.name };
    let mut out = format!("digraph {} {{\n  node [shape=circle];\n", dot_id(name));
    for v in d.vertices() {
        let mut attrs = Vec::new();
        if let Some(labels) = &style.labels {
            attrs.push(format!("label={}", dot_id(&labels[v])));
        }
        if style.boxed.contains(v) {
            attrs.push("shape=box".to_string());
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {v};");
        } else {
            let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
        }
    }
    for (u, v) in d.arcs() {
        let mut attrs = Vec::new();
        if style.dashed.contains(&(u, v)) {
            attrs.push("style=dashed");
        } else if style.bold.contains(&(u, v)) {
            attrs.push("style=bold");
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {u} -> {v};");
        } else {
            let _ = writeln!(out, "  {u} -> {v} [{}];", attrs.join(", "));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use proptest::prelude::*;

    #[test]
    fn parse_single_loop() {
        assert_eq!(parse_edge_list("1\n0 0\n").unwrap(), gallery::loop_vertex());
    }

    #[test]
    fn parse_construct_example() {
        let d = parse_edge_list("4\n1 0\n0 2\n2 1\n3 3\n0 1\n0 3\n0 0\n2 0\n").unwrap();
        assert_eq!(d, gallery::construct_example());
    }

    #[test]
    fn duplicate_arc_is_an_error() {
        let e = parse_edge_list("2\n0 1\n0 1\n").unwrap_err();
        assert_eq!(e, ParseError { line: 3, kind: ParseErrorKind::DuplicateArc(0, 1) });
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let e = parse_edge_list("# header\n3\n0 1 # ok\n\n0 5\n").unwrap_err();
        assert_eq!(e.line, 5);
        assert!(matches!(e.kind, ParseErrorKind::OutOfRange { vertex: 5, order: 3 }));
        assert!(matches!(parse_edge_list("3\n0\n").unwrap_err().kind, ParseErrorKind::MalformedLine(_)));
        assert!(matches!(parse_edge_list("x\n").unwrap_err().kind, ParseErrorKind::BadOrder(_)));
        assert!(matches!(parse_edge_list("").unwrap_err().kind, ParseErrorKind::MissingOrder));
        assert!(matches!(parse_edge_list("65\n").unwrap_err().kind, ParseErrorKind::OrderTooLarge { .. }));
    }

    #[test]
    fn blueprint_text_round_trip() {
        let b = gallery::construct_blueprint();
        let text = to_blueprint_text(&b);
        assert_eq!(text, "4\nfplus: 2 0 1 3\nvd: 0\nparent 1 0\nparent 2 1\nparent 2 3\n");
        assert_eq!(parse_blueprint(&text).unwrap(), b);
    }

    #[test]
    fn blueprint_errors() {
        assert!(matches!(
            parse_blueprint("2\nvd: 0\n").unwrap_err().kind,
            ParseErrorKind::MissingDirective("fplus")
        ));
        assert!(matches!(
            parse_blueprint("2\nfplus: 0\n").unwrap_err().kind,
            ParseErrorKind::WrongLength { expected: 2, got: 1 }
        ));
        assert!(matches!(
            parse_blueprint("2\nfplus: 0 1\nvd: 0\nroot 1\n").unwrap_err().kind,
            ParseErrorKind::UnknownDirective(_)
        ));
    }

    #[test]
    fn dot_marks_forcing_structure() {
        let d = gallery::construct_example();
        let dot = to_dot(&d, &DotStyle::forcing("construct", &d));
        assert!(dot.starts_with("digraph construct {"));
        assert!(dot.contains("  0 [shape=box];"));
        assert!(dot.contains("  1;"));
        assert!(dot.contains("  1 -> 0 [style=dashed];"));
        assert!(dot.contains("  3 -> 3 [style=dashed];"));
        assert!(dot.contains("  0 -> 0;"));
    }

    proptest! {
        #[test]
        fn emit_then_parse_is_identity(n in 1usize..=8, bits in proptest::collection::vec(any::<bool>(), 64)) {
            let arcs = (0..n * n).filter(|&i| bits[i]).map(|i| (i / n, i % n));
            let d = Digraph::from_arcs(n, arcs).unwrap();
            prop_assert_eq!(parse_edge_list(&to_edge_list(&d)).unwrap(), d);
        }
    }
}
