//! Line-oriented text format for spaces, plus the set and map literals used
//! on the command line.
//!
//! ```text
//! # tau3
//! points: x y z
//! opens: {} {x} {y} {x y} {x y z}
//! ```
//!
//! The second line may instead be `minbase: x:{x} y:{y} z:{x y z}` or
//! `order: z<x z<y` (each `u<v` declares `u <= v`; the reflexive-transitive
//! closure is taken, and a bare `order:` is the antichain).

use std::fmt;

use thiserror::Error;

use crate::error::Error;
use crate::pointset::{PointSet, MAX_POINTS};
use crate::space::{Preorder, Space};

/// A parse failure with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    /// The input parsed but does not describe a valid space. `message`
    /// names points by label.
    #[error("{message}")]
    Space { error: Error, message: String },
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> SyntaxError {
    SyntaxError {
        line,
        column,
        message: message.into(),
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Character cursor over one line, tracking 1-based columns.
struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    offset: usize,
    names: &'a [String],
}

impl<'a> Cursor<'a> {
    fn new(text: &str, line: usize, offset: usize, names: &'a [String]) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
            offset,
            names,
        }
    }

    fn column(&self) -> usize {
        self.offset + self.pos + 1
    }

    fn err(&self, message: impl Into<String>) -> SyntaxError {
        syntax(self.line, self.column(), message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<String, SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(is_ident_char) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an identifier"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn point(&mut self) -> Result<usize, SyntaxError> {
        self.skip_ws();
        let col = self.column();
        let name = self.ident()?;
        self.names
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| syntax(self.line, col, format!("unknown point `{name}`")))
    }

    fn set(&mut self) -> Result<PointSet, SyntaxError> {
        self.expect('{')?;
        let mut s = PointSet::EMPTY;
        loop {
            self.skip_ws();
            if self.peek() == Some('}') {
                self.pos += 1;
                return Ok(s);
            }
            if self.peek().is_none() {
                return Err(self.err("unterminated set, expected `}`"));
            }
            s.insert(self.point()?);
        }
    }
}

/// Splits content lines, dropping comments and blank lines. Yields
/// `(line number, text)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        (!body.trim().is_empty()).then_some((i + 1, body))
    })
}

/// Splits `key: rest` returning the key, the rest and the column offset of
/// the rest.
fn split_key(line: usize, body: &str) -> Result<(&str, &str, usize), SyntaxError> {
    let lead = body.len() - body.trim_start().len();
    let Some(colon) = body.find(':') else {
        return Err(syntax(line, lead + 1, "expected `key:`"));
    };
    Ok((body[..colon].trim(), &body[colon + 1..], colon + 1))
}

/// Parses a space file.
pub fn parse_space(text: &str) -> Result<Space, FormatError> {
    let mut lines = content_lines(text);
    let Some((ln, body)) = lines.next() else {
        return Err(syntax(1, 1, "empty input, expected `points:`").into());
    };
    let (key, rest, off) = split_key(ln, body)?;
    if key != "points" {
        return Err(syntax(ln, 1, "first line must be `points:`").into());
    }
    let labels = parse_points(ln, rest, off)?;

    let Some((ln2, body2)) = lines.next() else {
        return Err(syntax(ln + 1, 1, "expected `opens:`, `minbase:` or `order:`").into());
    };
    if let Some((ln3, _)) = lines.next() {
        return Err(syntax(ln3, 1, "unexpected content after the topology line").into());
    }
    let (key, rest, off) = split_key(ln2, body2)?;
    let mut cur = Cursor::new(rest, ln2, off, &labels);
    let n = labels.len();
    let space = match key {
        "opens" => {
            let mut opens = Vec::new();
            while !cur.at_end() {
                opens.push(cur.set()?);
            }
            Space::from_opens(labels.clone(), opens)
        }
        "minbase" => {
            let mut assigned: Vec<Option<PointSet>> = vec![None; n];
            while !cur.at_end() {
                let col = cur.column();
                let x = cur.point()?;
                cur.expect(':')?;
                let u = cur.set()?;
                if assigned[x].replace(u).is_some() {
                    return Err(syntax(ln2, col, format!("`{}` assigned twice", labels[x])).into());
                }
            }
            let assignments = assigned
                .iter()
                .enumerate()
                .map(|(x, u)| {
                    u.ok_or_else(|| {
                        syntax(ln2, 1, format!("no neighbourhood given for `{}`", labels[x]))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Space::from_minbase(labels.clone(), &assignments)
        }
        "order" => {
            let mut pairs = Vec::new();
            while !cur.at_end() {
                let u = cur.point()?;
                cur.expect('<')?;
                let v = cur.point()?;
                pairs.push((u, v));
            }
            Preorder::closure_of(n, &pairs).and_then(|o| Space::from_preorder(o, labels.clone()))
        }
        other => {
            return Err(syntax(
                ln2,
                1,
                format!("unknown key `{other}`, expected `opens`, `minbase` or `order`"),
            )
            .into())
        }
    };
    space.map_err(|error| FormatError::Space {
        message: error.describe(&labels),
        error,
    })
}

fn parse_points(line: usize, rest: &str, offset: usize) -> Result<Vec<String>, SyntaxError> {
    let names: Vec<String> = Vec::new();
    let mut cur = Cursor::new(rest, line, offset, &names);
    let mut labels: Vec<String> = Vec::new();
    while !cur.at_end() {
        let col = cur.column();
        let id = cur.ident()?;
        if cur.peek().is_some_and(|c| !c.is_whitespace()) {
            return Err(cur.err("identifiers may contain only letters, digits and `_`"));
        }
        if labels.contains(&id) {
            return Err(syntax(line, col, format!("duplicate point `{id}`")));
        }
        labels.push(id);
    }
    if labels.is_empty() {
        return Err(syntax(line, offset + 1, "no points declared"));
    }
    if labels.len() > MAX_POINTS {
        return Err(syntax(line, 1, format!("{} points, at most 64 supported", labels.len())));
    }
    Ok(labels)
}

/// Which second line [`write_space`] emits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Opens,
    MinBase,
    Order,
}

/// Writes `points:` and one topology line. `Style::Opens` falls back to
/// `minbase:` when the family is too large to list.
pub fn write_space(space: &Space, style: Style) -> String {
    let mut out = format!("points: {}\n", space.labels().join(" "));
    match (style, space.open_family()) {
        (Style::Opens, Some(family)) => {
            let sets: Vec<String> = family.opens().iter().map(|&s| space.format_set(s)).collect();
            out.push_str(&format!("opens: {}\n", sets.join(" ")));
        }
        (Style::Opens | Style::MinBase, _) => {
            let parts: Vec<String> = (0..space.n())
                .map(|x| format!("{}:{}", space.label(x), space.format_set(space.nbhd(x))))
                .collect();
            out.push_str(&format!("minbase: {}\n", parts.join(" ")));
        }
        (Style::Order, _) => {
            let order = space.specialization_order();
            let mut pairs = Vec::new();
            for u in 0..space.n() {
                for v in order.above(u).without(u).iter() {
                    pairs.push(format!("{}<{}", space.label(u), space.label(v)));
                }
            }
            if pairs.is_empty() {
                out.push_str("order:\n");
            } else {
                out.push_str(&format!("order: {}\n", pairs.join(" ")));
            }
        }
    }
    out
}

/// Parses a set literal such as `{y z}` against a space's labels.
pub fn parse_set(space: &Space, text: &str) -> Result<PointSet, SyntaxError> {
    let mut cur = Cursor::new(text, 1, 0, space.labels());
    let s = cur.set()?;
    if !cur.at_end() {
        return Err(cur.err("unexpected text after set"));
    }
    Ok(s)
}

/// Parses `x:x y:z z:y` into an image vector.
pub fn parse_point_map(source: &Space, target: &Space, text: &str) -> Result<Vec<usize>, SyntaxError> {
    parse_map_entries(source, target, text, |cur| cur.point())
}

/// Parses `a:{a b} b:{a}` into a vector of image sets.
pub fn parse_multi_map(
    source: &Space,
    target: &Space,
    text: &str,
) -> Result<Vec<PointSet>, SyntaxError> {
    parse_map_entries(source, target, text, |cur| cur.set())
}

fn parse_map_entries<T: Clone>(
    source: &Space,
    target: &Space,
    text: &str,
    mut value: impl FnMut(&mut Cursor) -> Result<T, SyntaxError>,
) -> Result<Vec<T>, SyntaxError> {
    let mut src = Cursor::new(text, 1, 0, source.labels());
    let mut out: Vec<Option<T>> = vec![None; source.n()];
    while !src.at_end() {
        let col = src.column();
        let x = src.point()?;
        src.expect(':')?;
        let mut dst = Cursor::new("", 1, 0, target.labels());
        dst.chars = src.chars.clone();
        dst.pos = src.pos;
        let v = value(&mut dst)?;
        src.pos = dst.pos;
        if out[x].replace(v).is_some() {
            return Err(syntax(1, col, format!("`{}` mapped twice", source.label(x))));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(x, v)| v.ok_or_else(|| syntax(1, 1, format!("no image given for `{}`", source.label(x)))))
        .collect()
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Style::Opens => "opens",
            Style::MinBase => "minbase",
            Style::Order => "order",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TAU3: &str = "# tau3\npoints: x y z\nopens: {} {x} {y} {x y} {x y z}\n";

    #[test]
    fn parses_all_three_forms_to_the_same_space() {
        let a = parse_space(TAU3).unwrap();
        let b = parse_space("points: x y z\nminbase: x:{x} y:{y} z:{x y z}").unwrap();
        let c = parse_space("points: x y z\n\n  # c\norder: z<x z<y\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.labels(), &["x", "y", "z"]);
    }

    #[test]
    fn bare_order_is_antichain() {
        let s = parse_space("points: a b\norder:").unwrap();
        assert_eq!(s.open_family().unwrap().len(), 4);
    }

    #[test]
    fn write_then_parse_round_trips() {
        let s = parse_space(TAU3).unwrap();
        for style in [Style::Opens, Style::MinBase, Style::Order] {
            assert_eq!(parse_space(&write_space(&s, style)).unwrap(), s, "{style}");
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_space("points: x y\nopens: {} {x} {q} {x y}").unwrap_err();
        assert_eq!(
            e,
            FormatError::Syntax(SyntaxError {
                line: 2,
                column: 16,
                message: "unknown point `q`".into()
            })
        );
        let e = parse_space("points: x x\nopens: {}").unwrap_err();
        assert!(matches!(e, FormatError::Syntax(SyntaxError { line: 1, column: 11, .. })));
        let e = parse_space("opens: {}").unwrap_err();
        assert!(matches!(e, FormatError::Syntax(SyntaxError { line: 1, .. })));
        let e = parse_space("points: x\nopens: {x").unwrap_err();
        assert!(matches!(e, FormatError::Syntax(SyntaxError { line: 2, .. })));
        let e = parse_space("points: x-y\norder:").unwrap_err();
        assert!(matches!(e, FormatError::Syntax(SyntaxError { line: 1, column: 10, .. })));
        let e = parse_space("points: x\norder:\nopens: {}").unwrap_err();
        assert!(matches!(e, FormatError::Syntax(SyntaxError { line: 3, .. })));
    }

    #[test]
    fn domain_errors_pass_through() {
        let e = parse_space("points: a b\nopens: {} {a} {b}").unwrap_err();
        assert!(matches!(e, FormatError::Space { error: Error::MissingEmptyOrFull, .. }));
        let e = parse_space("points: x y z\nminbase: x:{x} y:{y z} z:{x z}").unwrap_err();
        assert!(matches!(e, FormatError::Space { error: Error::InconsistentBase(1, 2), .. }));
        assert_eq!(
            e.to_string(),
            "inconsistent base: z lies in the neighbourhood of y, but its own neighbourhood is not contained in it"
        );
    }

    #[test]
    fn literals() {
        let s = parse_space(TAU3).unwrap();
        assert_eq!(parse_set(&s, "{y z}").unwrap(), PointSet::from_indices([1, 2]));
        assert_eq!(parse_set(&s, " {} ").unwrap(), PointSet::EMPTY);
        assert!(parse_set(&s, "{y z").is_err());
        assert_eq!(parse_point_map(&s, &s, "x:x y:z z:y").unwrap(), vec![0, 2, 1]);
        assert!(parse_point_map(&s, &s, "x:x y:z").is_err());
        assert!(parse_point_map(&s, &s, "x:x y:z z:y x:y").is_err());
        let sier = parse_space("points: a b\nopens: {} {a} {a b}").unwrap();
        assert_eq!(
            parse_multi_map(&sier, &sier, "a:{a b} b:{a}").unwrap(),
            vec![PointSet::from_indices([0, 1]), PointSet::from_indices([0])]
        );
    }
}
