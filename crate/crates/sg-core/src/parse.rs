//! Line-oriented text format for authoring statement graphs.
//!
//! One statement per line: `<id>: <premise> => <claim> @ <weight>`, where
//! the premise is `T` or `lit (& lit)*`, a literal is `atom` or `~atom` and
//! the weight is a decimal in [0, 1]. `#` starts a comment, blank lines are
//! skipped. Parsing collects every error in the input instead of stopping
//! at the first one.

use std::collections::BTreeMap;
use std::fmt;

use crate::model::{
    Literal, ModelError, Premise, Statement, StatementGraph, StatementId, TOP_TOKEN,
};

/// Location of a token or region in the source text. Lines and columns are
/// 1-based; columns count characters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl SourceSpan {
    fn new(line: usize, column: usize, length: usize) -> Self {
        SourceSpan {
            line,
            column,
            length: length.max(1),
        }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParseErrorKind {
    Syntax,
    DuplicateId,
    InconsistentPremise,
    WeightOutOfRange,
    DuplicateStatement,
    UnknownDirective,
    /// Reported after parsing when the derived relations contain a cycle.
    CyclicGraph,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ParseErrorKind::Syntax => "syntax",
            ParseErrorKind::DuplicateId => "duplicate-id",
            ParseErrorKind::InconsistentPremise => "inconsistent-premise",
            ParseErrorKind::WeightOutOfRange => "weight-out-of-range",
            ParseErrorKind::DuplicateStatement => "duplicate-statement",
            ParseErrorKind::UnknownDirective => "unknown-directive",
            ParseErrorKind::CyclicGraph => "cyclic-graph",
        };
        f.write_str(name)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub span: SourceSpan,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl ParseError {
    fn new(span: SourceSpan, kind: ParseErrorKind, message: impl Into<String>) -> Self {
        let message = message.into();
        debug_assert!(!message.is_empty());
        ParseError {
            span,
            kind,
            message,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({})", self.span, self.message, self.kind)
    }
}

impl std::error::Error for ParseError {}

struct Line {
    chars: Vec<char>,
    pos: usize,
    no: usize,
}

impl Line {
    fn new(text: &str, no: usize) -> Self {
        // Comments run to the end of the line.
        let chars = text.chars().take_while(|&c| c != '#').collect();
        Line { chars, pos: 0, no }
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

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn here(&mut self, length: usize) -> SourceSpan {
        self.skip_ws();
        SourceSpan::new(self.no, self.column(), length)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        let end = self.pos + s.chars().count();
        if end <= self.chars.len() && self.chars[self.pos..end].iter().copied().eq(s.chars()) {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn take_word(&mut self) -> Option<(String, SourceSpan)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos];
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            None
        } else {
            let word: String = self.chars[start..self.pos].iter().collect();
            Some((word, SourceSpan::new(self.no, start + 1, self.pos - start)))
        }
    }

    /// Everything up to the next whitespace, for weight tokens.
    fn take_raw(&mut self) -> Option<(String, SourceSpan)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && !self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            let word: String = self.chars[start..self.pos].iter().collect();
            Some((word, SourceSpan::new(self.no, start + 1, self.pos - start)))
        }
    }
}

struct ParsedLine {
    statement: Statement,
    weight: f64,
    id_span: SourceSpan,
    line_no: usize,
}

/// Parses a literal. Returns the literal, its span and whether it was the
/// bare top token.
fn parse_literal(line: &mut Line, errors: &mut Vec<ParseError>) -> Option<(Literal, SourceSpan)> {
    let negated = line.eat('~');
    let neg_col = if negated { line.pos } else { 0 };
    let Some((word, span)) = line.take_word() else {
        errors.push(ParseError::new(
            line.here(1),
            ParseErrorKind::Syntax,
            "expected a literal",
        ));
        return None;
    };
    let span = if negated {
        SourceSpan::new(span.line, neg_col, span.length + 1)
    } else {
        span
    };
    if word == TOP_TOKEN {
        if negated {
            errors.push(ParseError::new(
                span,
                ParseErrorKind::Syntax,
                "the true premise has no negation",
            ));
            return None;
        }
        return Some((Literal::top(), span));
    }
    match Literal::new(&word, negated) {
        Ok(lit) => Some((lit, span)),
        Err(e) => {
            errors.push(ParseError::new(span, ParseErrorKind::Syntax, e.to_string()));
            None
        }
    }
}

fn parse_line(line: &mut Line, errors: &mut Vec<ParseError>) -> Option<ParsedLine> {
    let Some((id_word, id_span)) = line.take_word() else {
        errors.push(ParseError::new(
            line.here(1),
            ParseErrorKind::Syntax,
            "expected a statement id",
        ));
        return None;
    };
    let id = match StatementId::new(&id_word) {
        Ok(id) => id,
        Err(e) => {
            errors.push(ParseError::new(
                id_span,
                ParseErrorKind::Syntax,
                e.to_string(),
            ));
            return None;
        }
    };
    if !line.eat(':') {
        errors.push(ParseError::new(
            line.here(1),
            ParseErrorKind::Syntax,
            "expected ':' after the statement id",
        ));
        return None;
    }

    let premise_start = {
        line.skip_ws();
        line.column()
    };
    let mut literals = Vec::new();
    let (first, mut last_span) = parse_literal(line, errors)?;
    literals.push(first);
    while line.eat('&') {
        let (lit, span) = parse_literal(line, errors)?;
        literals.push(lit);
        last_span = span;
    }
    let premise_span = SourceSpan::new(
        line.no,
        premise_start,
        last_span.column + last_span.length - premise_start,
    );
    let premise = match Premise::from_literals(&literals) {
        Ok(p) => p,
        Err(e) => {
            let kind = match e {
                ModelError::InconsistentPremise { .. } => ParseErrorKind::InconsistentPremise,
                _ => ParseErrorKind::Syntax,
            };
            errors.push(ParseError::new(premise_span, kind, e.to_string()));
            return None;
        }
    };

    if !line.eat_str("=>") {
        errors.push(ParseError::new(
            line.here(1),
            ParseErrorKind::Syntax,
            "expected '=>' between premise and claim",
        ));
        return None;
    }
    let (claim, claim_span) = parse_literal(line, errors)?;
    if claim.is_top() {
        errors.push(ParseError::new(
            claim_span,
            ParseErrorKind::Syntax,
            "the true premise cannot be a claim",
        ));
        return None;
    }

    if !line.eat('@') {
        errors.push(ParseError::new(
            line.here(1),
            ParseErrorKind::Syntax,
            "expected '@' before the weight",
        ));
        return None;
    }
    let Some((weight_word, weight_span)) = line.take_raw() else {
        errors.push(ParseError::new(
            line.here(1),
            ParseErrorKind::Syntax,
            "expected a weight",
        ));
        return None;
    };
    let weight = match weight_word.parse::<f64>() {
        Ok(w) => w,
        Err(_) => {
            errors.push(ParseError::new(
                weight_span,
                ParseErrorKind::Syntax,
                format!("'{weight_word}' is not a number"),
            ));
            return None;
        }
    };
    if !weight.is_finite() || !(0.0..=1.0).contains(&weight) {
        errors.push(ParseError::new(
            weight_span,
            ParseErrorKind::WeightOutOfRange,
            format!("weight {weight_word} is outside [0, 1]"),
        ));
        return None;
    }

    if !line.at_end() {
        errors.push(ParseError::new(
            line.here(1),
            ParseErrorKind::Syntax,
            "unexpected trailing input",
        ));
        return None;
    }

    let statement = match Statement::new(id, premise, claim) {
        Ok(s) => s,
        Err(e) => {
            errors.push(ParseError::new(
                id_span,
                ParseErrorKind::Syntax,
                e.to_string(),
            ));
            return None;
        }
    };
    Some(ParsedLine {
        statement,
        weight,
        id_span,
        line_no: line.no,
    })
}

/// Parses DSL text into a validated statement graph, or every error found.
pub fn parse_sg(text: &str) -> Result<StatementGraph, Vec<ParseError>> {
    let mut errors = Vec::new();
    let mut parsed: Vec<ParsedLine> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let mut line = Line::new(raw, idx + 1);
        if line.at_end() {
            continue;
        }
        if line.peek() == Some('!') {
            line.eat('!');
            let span = match line.take_word() {
                Some((word, span)) => {
                    errors.push(ParseError::new(
                        SourceSpan::new(span.line, span.column - 1, span.length + 1),
                        ParseErrorKind::UnknownDirective,
                        format!("unknown directive '!{word}'"),
                    ));
                    continue;
                }
                None => line.here(1),
            };
            errors.push(ParseError::new(
                span,
                ParseErrorKind::UnknownDirective,
                "unknown directive",
            ));
            continue;
        }
        if let Some(p) = parse_line(&mut line, &mut errors) {
            parsed.push(p);
        }
    }

    // Duplicate ids and structural twins, reported at the later occurrence.
    let mut by_id: BTreeMap<StatementId, usize> = BTreeMap::new();
    let mut by_key: BTreeMap<(Premise, Literal), StatementId> = BTreeMap::new();
    let mut kept: Vec<&ParsedLine> = Vec::new();
    for p in &parsed {
        let id = p.statement.id();
        if by_id.contains_key(id) {
            errors.push(ParseError::new(
                p.id_span,
                ParseErrorKind::DuplicateId,
                format!("statement id '{id}' is already defined"),
            ));
            continue;
        }
        by_id.insert(id.clone(), p.line_no);
        let key = (p.statement.premise().clone(), p.statement.claim().clone());
        if let Some(first) = by_key.get(&key) {
            errors.push(ParseError::new(
                p.id_span,
                ParseErrorKind::DuplicateStatement,
                format!("'{id}' restates '{first}' (same premise and claim)"),
            ));
            continue;
        }
        by_key.insert(key, id.clone());
        kept.push(p);
    }

    if !errors.is_empty() {
        return Err(errors);
    }

    let statements: Vec<Statement> = kept.iter().map(|p| p.statement.clone()).collect();
    let weights = kept.iter().map(|p| (p.statement.id().clone(), p.weight));
    match StatementGraph::build(statements, weights) {
        Ok(g) => Ok(g),
        Err(ModelError::CyclicGraph { cycle }) => {
            let line_no = cycle
                .first()
                .and_then(|id| by_id.get(id).copied())
                .unwrap_or(1);
            let listed = cycle
                .iter()
                .map(|id| id.as_str())
                .collect::<Vec<_>>()
                .join(" -> ");
            Err(vec![ParseError::new(
                SourceSpan::new(line_no, 1, 1),
                ParseErrorKind::CyclicGraph,
                format!("statements form a cycle: {listed}"),
            )])
        }
        Err(other) => Err(vec![ParseError::new(
            SourceSpan::new(1, 1, 1),
            ParseErrorKind::Syntax,
            other.to_string(),
        )]),
    }
}

/// Renders a graph as canonical DSL text: statements sorted by id, literals
/// in canonical order, weights in shortest round-trip form. Parsing the
/// result reproduces the graph exactly.
pub fn serialize_sg(graph: &StatementGraph) -> String {
    let mut out = String::new();
    for st in graph.statements() {
        let weight = graph.weight(st.id()).expect("weight for every statement");
        out.push_str(&format!(
            "{}: {} => {} @ {}\n",
            st.id(),
            st.premise(),
            st.claim(),
            weight
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const FIG_BASIC: &str =
        "a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\na4: d => ~a @ 0.7";

    #[test]
    fn parses_the_running_example() {
        let g = parse_sg(FIG_BASIC).unwrap();
        assert_eq!(g.len(), 4);
        let sid = |s: &str| StatementId::new(s).unwrap();
        assert_eq!(g.supports().len(), 2);
        assert_eq!(g.attacks().len(), 1);
        assert!(g.attacks().contains(&(sid("a4"), sid("a1"))));
        assert_eq!(g.weight(&sid("a3")), Some(0.6));
    }

    #[test]
    fn empty_input_gives_empty_graph() {
        let g = parse_sg("").unwrap();
        assert!(g.is_empty());
        let g = parse_sg("\n  # only a comment\n\n").unwrap();
        assert!(g.is_empty());
    }

    #[test]
    fn inconsistent_premise_is_reported_with_span() {
        let errs = parse_sg("x: a & ~a => b @ 0.5").unwrap_err();
        assert_eq!(errs.len(), 1);
        assert_eq!(errs[0].kind, ParseErrorKind::InconsistentPremise);
        assert_eq!(errs[0].span.line, 1);
        assert_eq!(errs[0].span.column, 4);
        assert_eq!(errs[0].span.length, 6);
    }

    #[test]
    fn all_errors_are_collected() {
        let input = "x: a => b @ 1.5\ny a => b\nz: a & ~a => b @ 0.5";
        let errs = parse_sg(input).unwrap_err();
        assert_eq!(errs.len(), 3);
        assert_eq!(errs[0].kind, ParseErrorKind::WeightOutOfRange);
        assert_eq!(errs[0].span.line, 1);
        assert_eq!(errs[0].span.column, 13);
        assert_eq!(errs[1].kind, ParseErrorKind::Syntax);
        assert_eq!(errs[1].span.line, 2);
        assert_eq!(errs[2].kind, ParseErrorKind::InconsistentPremise);
        assert_eq!(errs[2].span.line, 3);
    }

    #[test]
    fn duplicate_id_and_structural_twin() {
        let errs = parse_sg("x: a => b @ 0.5\nx: c => d @ 0.5").unwrap_err();
        assert_eq!(errs[0].kind, ParseErrorKind::DuplicateId);
        assert_eq!(errs[0].span.line, 2);
        let errs = parse_sg("x: a => b @ 0.5\ny: a => b @ 0.7").unwrap_err();
        assert_eq!(errs[0].kind, ParseErrorKind::DuplicateStatement);
    }

    #[test]
    fn cycles_surface_as_a_dedicated_error() {
        let errs = parse_sg("x: b => a @ 0.5\ny: a => b @ 0.5").unwrap_err();
        assert_eq!(errs.len(), 1);
        assert_eq!(errs[0].kind, ParseErrorKind::CyclicGraph);
        assert!(errs[0].message.contains("x"));
        assert!(errs[0].message.contains("y"));
    }

    #[test]
    fn top_misuses_are_rejected() {
        let errs = parse_sg("x: T & a => b @ 0.5").unwrap_err();
        assert_eq!(errs[0].kind, ParseErrorKind::Syntax);
        let errs = parse_sg("x: a => T @ 0.5").unwrap_err();
        assert_eq!(errs[0].kind, ParseErrorKind::Syntax);
        let errs = parse_sg("x: ~T => b @ 0.5").unwrap_err();
        assert_eq!(errs[0].kind, ParseErrorKind::Syntax);
    }

    #[test]
    fn unknown_directives_are_flagged() {
        let errs = parse_sg("!include other.sg").unwrap_err();
        assert_eq!(errs[0].kind, ParseErrorKind::UnknownDirective);
    }

    #[test]
    fn comments_and_spacing_are_flexible() {
        let g = parse_sg("  x :  a&~b  =>c@0.25  # tail\n").unwrap();
        let st = g
            .statement(&StatementId::new("x").unwrap())
            .unwrap()
            .clone();
        assert_eq!(st.premise().to_string(), "a & ~b");
        assert_eq!(st.claim().to_string(), "c");
    }

    #[test]
    fn serialization_is_canonical() {
        let g = parse_sg("b: ~z & y => w @ 0.5\na: T => y @ 1").unwrap();
        let text = serialize_sg(&g);
        assert_eq!(text, "a: T => y @ 1\nb: y & ~z => w @ 0.5\n");
        assert!(text.contains("@ 0.5"));
        let reparsed = parse_sg(&text).unwrap();
        assert_eq!(reparsed, g);
        assert_eq!(serialize_sg(&StatementGraph::empty()), "");
    }

    #[test]
    fn round_trips_the_running_example() {
        let g = parse_sg(FIG_BASIC).unwrap();
        let again = parse_sg(&serialize_sg(&g)).unwrap();
        assert_eq!(again, g);
    }
}
