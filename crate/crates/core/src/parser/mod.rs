//! Line-oriented text formats for signatures, formulas, sequents, Kripke
//! models and proof scripts, with renderers that parse back to equal values.

mod lexer;
mod render;

use std::collections::BTreeMap;
use std::fmt;

use crate::decision::LogicId;
use crate::domain::{tuples, Connective, Label, LabelSet, Signature, TruthDomain, MAX_DOMAIN, RESERVED};
use crate::formula::{Formula, LabelledFormula, LabelledSet, Sequent};
use crate::proofs::{Derivation, Justification, Scheme, Step};
use crate::semantics::KripkeModel;
use lexer::{lex, Line, Tok, Token};

pub use render::{render_model, render_proof, render_sequents, render_signature};

/// Where an error occurred: 1-based line and column plus byte offsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub start: usize,
    pub end: usize,
}

/// The empty span at the start of the input.
impl Default for SourceSpan {
    fn default() -> Self {
        Self {
            line: 1,
            column: 1,
            start: 0,
            end: 0,
        }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{span}: {message}")]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
    /// The token class the parser was looking for.
    pub expected: String,
}

type PResult<T> = Result<T, ParseError>;

/// Largest table a signature file may declare.
const MAX_TABLE: usize = 1 << 20;

struct Cursor<'a> {
    line: &'a Line,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(line: &'a Line) -> Self {
        Self { line, pos: 0 }
    }

    fn peek(&self) -> Option<&'a Token> {
        self.line.tokens.get(self.pos)
    }

    fn peek_tok(&self) -> Option<&'a Tok> {
        self.peek().map(|t| &t.tok)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.line.tokens.len()
    }

    fn here(&self) -> SourceSpan {
        self.peek().map_or_else(|| self.line.end(), |t| t.span)
    }

    fn error(&self, span: SourceSpan, message: impl Into<String>, expected: &str) -> ParseError {
        ParseError {
            span,
            message: message.into(),
            expected: expected.into(),
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let found = self
            .peek()
            .map_or_else(|| "end of line".to_string(), |t| t.tok.to_string());
        self.error(self.here(), format!("expected {expected}, found {found}"), expected)
    }

    fn next(&mut self) -> Option<&'a Token> {
        let t = self.line.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek_tok() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok, expected: &str) -> PResult<SourceSpan> {
        match self.peek() {
            Some(t) if &t.tok == tok => {
                self.pos += 1;
                Ok(t.span)
            }
            _ => Err(self.unexpected(expected)),
        }
    }

    fn ident(&mut self, expected: &str) -> PResult<(&'a str, SourceSpan)> {
        match self.peek() {
            Some(Token {
                tok: Tok::Ident(s),
                span,
            }) => {
                self.pos += 1;
                Ok((s.as_str(), *span))
            }
            _ => Err(self.unexpected(expected)),
        }
    }

    fn keyword(&mut self, word: &str) -> PResult<SourceSpan> {
        match self.peek() {
            Some(Token {
                tok: Tok::Ident(s),
                span,
            }) if s == word => {
                self.pos += 1;
                Ok(*span)
            }
            _ => Err(self.unexpected(&format!("`{word}`"))),
        }
    }

    fn int(&mut self, expected: &str) -> PResult<(u64, SourceSpan)> {
        match self.peek() {
            Some(Token {
                tok: Tok::Int(k),
                span,
            }) => {
                self.pos += 1;
                Ok((*k, *span))
            }
            _ => Err(self.unexpected(expected)),
        }
    }

    fn label(&mut self, n: Label) -> PResult<Label> {
        let (k, span) = self.int("label")?;
        if k == 0 || k > n as u64 {
            return Err(self.error(span, format!("label {k} outside 1..{n}"), "label"));
        }
        Ok(k as Label)
    }

    fn finish(&self) -> PResult<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("end of line"))
        }
    }

    fn formula(&mut self, sig: &Signature) -> PResult<Formula> {
        let Some(tok) = self.next() else {
            self.pos -= 1;
            return Err(self.unexpected("formula"));
        };
        match &tok.tok {
            Tok::Ident(kw) if kw == "Box" => Ok(self.formula(sig)?.boxed()),
            Tok::Ident(kw) if kw == "Dia" => Ok(self.formula(sig)?.dia()),
            Tok::LParen => {
                let f = self.formula(sig)?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Ident(name) => {
                let conn = sig.get(name);
                if self.eat(&Tok::LParen) {
                    let conn = conn.ok_or_else(|| {
                        self.error(tok.span, format!("unknown connective `{name}`"), "connective")
                    })?;
                    let mut args = Vec::new();
                    if !self.eat(&Tok::RParen) {
                        loop {
                            args.push(self.formula(sig)?);
                            if self.eat(&Tok::RParen) {
                                break;
                            }
                            self.expect(&Tok::Comma, "`,` or `)`")?;
                        }
                    }
                    if args.len() != conn.arity() {
                        return Err(self.error(
                            tok.span,
                            format!(
                                "connective `{name}` takes {} argument(s), got {}",
                                conn.arity(),
                                args.len()
                            ),
                            "argument list",
                        ));
                    }
                    Ok(Formula::Apply(name.clone(), args))
                } else {
                    match conn {
                        Some(c) if c.arity() == 0 => Ok(Formula::Apply(name.clone(), vec![])),
                        Some(c) => Err(self.error(
                            tok.span,
                            format!("connective `{name}` takes {} argument(s)", c.arity()),
                            "`(`",
                        )),
                        None => Ok(Formula::Var(name.clone())),
                    }
                }
            }
            _ => {
                self.pos -= 1;
                Err(self.unexpected("formula"))
            }
        }
    }

    fn labelled(&mut self, sig: &Signature) -> PResult<LabelledFormula> {
        self.expect(&Tok::LParen, "`(`")?;
        let f = self.formula(sig)?;
        self.expect(&Tok::Comma, "`,`")?;
        let k = self.label(sig.n())?;
        self.expect(&Tok::RParen, "`)`")?;
        Ok(LabelledFormula::new(f, k))
    }

    fn side(&mut self, sig: &Signature, stop: &[Tok]) -> PResult<LabelledSet> {
        let mut out = LabelledSet::new();
        if self.at_end() || self.peek_tok().is_some_and(|t| stop.contains(t)) {
            return Ok(out);
        }
        loop {
            out.insert(self.labelled(sig)?);
            if !self.eat(&Tok::Comma) {
                return Ok(out);
            }
        }
    }

    fn sequent(&mut self, sig: &Signature, stop: &[Tok]) -> PResult<Sequent> {
        let antecedent = self.side(sig, &[Tok::Arrow])?;
        self.expect(&Tok::Arrow, "`->`")?;
        let succedent = self.side(sig, stop)?;
        Ok(Sequent {
            antecedent,
            succedent,
        })
    }

    fn label_set(&mut self, n: Label) -> PResult<LabelSet> {
        self.expect(&Tok::LBrace, "`{`")?;
        let mut out = LabelSet::new();
        if self.eat(&Tok::RBrace) {
            return Ok(out);
        }
        loop {
            out.insert(self.label(n)?);
            if self.eat(&Tok::RBrace) {
                return Ok(out);
            }
            self.expect(&Tok::Comma, "`,` or `}`")?;
        }
    }
}

fn single_line(text: &str) -> PResult<Line> {
    let mut lines = lex(text)?;
    match lines.len() {
        0 => Err(ParseError {
            span: SourceSpan::default(),
            message: "empty input".into(),
            expected: "input".into(),
        }),
        1 => Ok(lines.remove(0)),
        _ => Err(ParseError {
            span: lines[1].span,
            message: "expected a single line".into(),
            expected: "end of input".into(),
        }),
    }
}

/// Parses a formula written on one line.
pub fn parse_formula(text: &str, sig: &Signature) -> PResult<Formula> {
    let line = single_line(text)?;
    let mut c = Cursor::new(&line);
    let f = c.formula(sig)?;
    c.finish()?;
    Ok(f)
}

/// Parses comma-separated formulas, possibly spread over several lines.
/// Empty input gives the empty list.
pub fn parse_formula_list(text: &str, sig: &Signature) -> PResult<Vec<Formula>> {
    let mut out = Vec::new();
    for line in lex(text)? {
        let mut c = Cursor::new(&line);
        loop {
            out.push(c.formula(sig)?);
            if c.at_end() {
                break;
            }
            c.expect(&Tok::Comma, "`,`")?;
            if c.at_end() {
                break;
            }
        }
    }
    Ok(out)
}

pub fn parse_labelled_formula(text: &str, sig: &Signature) -> PResult<LabelledFormula> {
    let line = single_line(text)?;
    let mut c = Cursor::new(&line);
    let lf = c.labelled(sig)?;
    c.finish()?;
    Ok(lf)
}

/// Parses `lhs -> rhs` written on one line.
pub fn parse_sequent(text: &str, sig: &Signature) -> PResult<Sequent> {
    let line = single_line(text)?;
    let mut c = Cursor::new(&line);
    let s = c.sequent(sig, &[])?;
    c.finish()?;
    Ok(s)
}

/// Parses one sequent per non-blank line.
pub fn parse_sequents(text: &str, sig: &Signature) -> PResult<Vec<Sequent>> {
    lex(text)?
        .iter()
        .map(|line| {
            let mut c = Cursor::new(line);
            let s = c.sequent(sig, &[])?;
            c.finish()?;
            Ok(s)
        })
        .collect()
}

/// Parses `domain n`, `conn name arity` declarations and table rows
/// `name k1 … kl = k`.
pub fn parse_signature(text: &str) -> PResult<Signature> {
    let lines = lex(text)?;
    let Some((first, rest)) = lines.split_first() else {
        return Err(ParseError {
            span: SourceSpan::default(),
            message: "missing `domain` line".into(),
            expected: "`domain`".into(),
        });
    };
    let mut c = Cursor::new(first);
    c.keyword("domain")?;
    let (n, n_span) = c.int("domain size")?;
    c.finish()?;
    let domain = usize::try_from(n)
        .ok()
        .and_then(|n| TruthDomain::new(n).ok())
        .ok_or_else(|| {
            c.error(n_span, format!("domain size must lie in 2..={MAX_DOMAIN}, got {n}"), "domain size")
        })?;
    let size = domain.size();

    struct Decl {
        arity: usize,
        span: SourceSpan,
        rows: BTreeMap<Vec<Label>, Label>,
    }
    let mut decls: BTreeMap<String, Decl> = BTreeMap::new();
    let mut order = Vec::new();
    for line in rest {
        let mut c = Cursor::new(line);
        let (word, span) = c.ident("`conn` or a table row")?;
        if word == "conn" {
            let (name, name_span) = c.ident("connective name")?;
            let (arity, arity_span) = c.int("arity")?;
            c.finish()?;
            if RESERVED.contains(&name) {
                return Err(c.error(name_span, format!("`{name}` is reserved"), "connective name"));
            }
            if decls.contains_key(name) {
                return Err(c.error(name_span, format!("duplicate connective `{name}`"), "connective name"));
            }
            let too_big = usize::try_from(arity)
                .ok()
                .and_then(|a| (size as usize).checked_pow(a as u32))
                .is_none_or(|len| len > MAX_TABLE);
            if too_big {
                return Err(c.error(arity_span, format!("arity {arity} gives too large a table"), "arity"));
            }
            decls.insert(
                name.to_string(),
                Decl {
                    arity: arity as usize,
                    span: line.span,
                    rows: BTreeMap::new(),
                },
            );
            order.push(name.to_string());
            continue;
        }
        let decl = decls
            .get_mut(word)
            .ok_or_else(|| c.error(span, format!("undeclared connective `{word}`"), "declared connective"))?;
        let mut args = Vec::with_capacity(decl.arity);
        for _ in 0..decl.arity {
            args.push(c.label(size)?);
        }
        c.expect(&Tok::Eq, "`=`")?;
        let value = c.label(size)?;
        c.finish()?;
        if decl.rows.insert(args.clone(), value).is_some() {
            return Err(c.error(line.span, format!("duplicate table row for `{word}` at {args:?}"), "new row"));
        }
    }
    let mut sig = Signature::new(domain);
    for name in order {
        let decl = &decls[&name];
        let mut table = Vec::with_capacity(decl.rows.len());
        for args in tuples(size, decl.arity) {
            match decl.rows.get(&args) {
                Some(&v) => table.push(v),
                None => {
                    return Err(ParseError {
                        span: decl.span,
                        message: format!("connective `{name}` is missing the entry for {args:?}"),
                        expected: "table row".into(),
                    })
                }
            }
        }
        let conn = Connective::from_table(name.clone(), decl.arity, domain, table).map_err(|e| ParseError {
            span: decl.span,
            message: e.to_string(),
            expected: "connective".into(),
        })?;
        sig.add(conn).map_err(|e| ParseError {
            span: decl.span,
            message: e.to_string(),
            expected: "connective".into(),
        })?;
    }
    Ok(sig)
}

/// Parses `worlds N`, `edge u v` and `val u var k` lines. Variables without
/// a `val` line at some world take label 1 there.
pub fn parse_model(text: &str, domain: TruthDomain) -> PResult<KripkeModel> {
    let lines = lex(text)?;
    let Some((first, rest)) = lines.split_first() else {
        return Err(ParseError {
            span: SourceSpan::default(),
            message: "missing `worlds` line".into(),
            expected: "`worlds`".into(),
        });
    };
    let mut c = Cursor::new(first);
    c.keyword("worlds")?;
    let (count, span) = c.int("world count")?;
    c.finish()?;
    if count == 0 || count > u32::MAX as u64 {
        return Err(c.error(span, "a model needs at least one world", "world count"));
    }
    let count = count as usize;
    let mut model = KripkeModel::new(count).expect("nonzero world count");
    let mut seen = BTreeMap::new();
    for line in rest {
        let mut c = Cursor::new(line);
        let world = |c: &mut Cursor<'_>| -> PResult<usize> {
            let (u, span) = c.int("world index")?;
            if u >= count as u64 {
                return Err(c.error(span, format!("world {u} is not declared (worlds 0..{count})"), "world index"));
            }
            Ok(u as usize)
        };
        let (word, span) = c.ident("`edge` or `val`")?;
        match word {
            "edge" => {
                let u = world(&mut c)?;
                let v = world(&mut c)?;
                c.finish()?;
                model.add_edge(u, v).expect("worlds checked");
            }
            "val" => {
                let u = world(&mut c)?;
                let (var, var_span) = c.ident("variable")?;
                if RESERVED.contains(&var) {
                    return Err(c.error(var_span, format!("`{var}` is reserved"), "variable"));
                }
                let k = c.label(domain.size())?;
                c.finish()?;
                if seen.insert((u, var.to_string()), ()).is_some() {
                    return Err(c.error(line.span, format!("duplicate value for `{var}` at world {u}"), "new valuation"));
                }
                model.set_value(u, var, k).expect("world checked");
            }
            _ => return Err(c.error(span, format!("unknown model directive `{word}`"), "`edge` or `val`")),
        }
    }
    Ok(model)
}

fn parse_rule(c: &mut Cursor<'_>, sig: &Signature) -> PResult<Justification> {
    let (name, span) = c.ident("rule name")?;
    let n = sig.n();
    let j = match name {
        "hyp" => {
            let (i, span) = c.int("hypothesis number")?;
            if i == 0 {
                return Err(c.error(span, "hypotheses are numbered from 1", "hypothesis number"));
            }
            Justification::Hypothesis(i as usize - 1)
        }
        "ax-id" => Justification::AxiomIdentity,
        "ax-table" => Justification::AxiomTable,
        "r-box" => Justification::RuleBox,
        "r-dia" => Justification::RuleDiamond,
        "lshift" => Justification::LeftShift(c.labelled(sig)?),
        "lweak" => Justification::LeftWeaken(c.labelled(sig)?),
        "rweak" => Justification::RightWeaken(c.labelled(sig)?),
        "cut" => Justification::Cut(c.labelled(sig)?),
        "rshift" => {
            let lf = c.labelled(sig)?;
            Justification::RightShift {
                formula: lf.formula,
                from: lf.label,
                to: c.label(n)?,
            }
        }
        "resolve" => {
            let lf = c.labelled(sig)?;
            Justification::Resolution {
                formula: lf.formula,
                first: lf.label,
                second: c.label(n)?,
            }
        }
        "mshift" => {
            let formula = c.formula(sig)?;
            let labels = c.label_set(n)?;
            Justification::MultiShift { formula, labels }
        }
        "smshift" => {
            let mut pairs = Vec::new();
            while !c.at_end() && !matches!(c.peek_tok(), Some(Tok::Ident(w)) if w == "from") {
                let formula = c.formula(sig)?;
                pairs.push((formula, c.label_set(n)?));
            }
            if pairs.is_empty() {
                return Err(c.unexpected("formula"));
            }
            Justification::SuperMultiShift(pairs)
        }
        other => {
            let scheme = other
                .strip_prefix("ext-")
                .and_then(|num| num.parse::<u8>().ok())
                .and_then(Scheme::from_number)
                .ok_or_else(|| c.error(span, format!("unknown rule `{other}`"), "rule name"))?;
            let formula = c.formula(sig)?;
            let label = if scheme == Scheme::Seriality {
                None
            } else {
                Some(c.label(n)?)
            };
            Justification::ExtensionAxiom {
                scheme,
                formula,
                label,
            }
        }
    };
    Ok(j)
}

/// Parses a proof script: an optional `logic <name>` line, `hyp: <sequent>`
/// lines, then steps `<i>: <sequent> ; <rule> [args] [from j, …]` numbered
/// consecutively from 1.
pub fn parse_proof(text: &str, sig: &Signature) -> PResult<Derivation> {
    let mut d = Derivation::new(LogicId::K);
    let mut seen_logic = false;
    for line in lex(text)? {
        let mut c = Cursor::new(&line);
        match c.peek_tok() {
            Some(Tok::Ident(w)) if w == "logic" => {
                c.next();
                if seen_logic || !d.hypotheses.is_empty() || !d.steps.is_empty() {
                    return Err(c.error(line.span, "`logic` must come first and only once", "step"));
                }
                let (name, span) = c.ident("logic name")?;
                d.logic = LogicId::from_name(name)
                    .ok_or_else(|| c.error(span, format!("unknown logic `{name}`"), "logic name"))?;
                c.finish()?;
                seen_logic = true;
            }
            Some(Tok::Ident(w)) if w == "hyp" => {
                c.next();
                if !d.steps.is_empty() {
                    return Err(c.error(line.span, "hypotheses must precede the steps", "step"));
                }
                c.expect(&Tok::Colon, "`:`")?;
                d.hypotheses.push(c.sequent(sig, &[])?);
                c.finish()?;
            }
            _ => {
                let (idx, span) = c.int("step number")?;
                let expected = d.steps.len() + 1;
                if idx != expected as u64 {
                    return Err(c.error(span, format!("expected step number {expected}, found {idx}"), "step number"));
                }
                c.expect(&Tok::Colon, "`:`")?;
                let conclusion = c.sequent(sig, &[Tok::Semi])?;
                c.expect(&Tok::Semi, "`;`")?;
                let justification = parse_rule(&mut c, sig)?;
                let mut premises = Vec::new();
                if !c.at_end() {
                    c.keyword("from")?;
                    loop {
                        let (p, span) = c.int("step reference")?;
                        if p == 0 {
                            return Err(c.error(span, "steps are numbered from 1", "step reference"));
                        }
                        if p >= idx {
                            return Err(c.error(span, format!("forward reference to step {p}"), "earlier step"));
                        }
                        premises.push(p as usize - 1);
                        if !c.eat(&Tok::Comma) {
                            break;
                        }
                    }
                }
                c.finish()?;
                d.steps.push(Step {
                    conclusion,
                    justification,
                    premises,
                });
            }
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn luk() -> Signature {
        Signature::lukasiewicz(3).unwrap()
    }

    #[test]
    fn formulas() {
        let sig = luk();
        let f = parse_formula("Box imp(p, Dia q)", &sig).unwrap();
        assert_eq!(
            f,
            Formula::apply("imp", vec![Formula::var("p"), Formula::var("q").dia()]).boxed()
        );
        assert_eq!(parse_formula("((p))", &sig).unwrap(), Formula::var("p"));
        assert!(parse_formula("imp(p)", &sig).is_err());
        assert!(parse_formula("imp", &sig).is_err());
        assert!(parse_formula("foo(p)", &sig).is_err());
        assert!(parse_formula("p q", &sig).is_err());
    }

    #[test]
    fn example_goal_sequent() {
        let sig = luk();
        let s = parse_sequent("(Box p, 3), (Box imp(p,q), 3) -> (Box q, 3)", &sig).unwrap();
        assert_eq!(s.antecedent.len(), 2);
        assert_eq!(s.to_string(), "(Box p, 3), (Box imp(p, q), 3) -> (Box q, 3)");
        let empty = parse_sequent("-> ", &sig).unwrap();
        assert!(empty.antecedent.is_empty() && empty.succedent.is_empty());
        let err = parse_sequent("(Dia p, 4) ->", &sig).unwrap_err();
        assert_eq!(err.span.column, 9);
    }

    #[test]
    fn signature_errors() {
        assert!(parse_signature("domain 2").unwrap().connectives().next().is_none());
        assert!(parse_signature("domain 1").is_err());
        let missing = parse_signature("domain 2\nconn neg 1\nneg 1 = 2\n").unwrap_err();
        assert_eq!(missing.span.line, 2);
        assert!(parse_signature("domain 2\nconn neg 1\nneg 1 = 2\nneg 1 = 1\nneg 2 = 1").is_err());
        assert!(parse_signature("domain 2\nconn neg 1\nneg 1 = 3\nneg 2 = 1").is_err());
        assert!(parse_signature("domain 2\nconn neg 1\nconn neg 1").is_err());
        assert!(parse_signature("domain 2\nconn Box 1").is_err());
    }

    #[test]
    fn signature_round_trip() {
        let sig = luk();
        assert_eq!(parse_signature(&render_signature(&sig)).unwrap(), sig);
    }

    #[test]
    fn models() {
        let d = TruthDomain::new(3).unwrap();
        let m = parse_model("worlds 1", d).unwrap();
        assert_eq!(m.world_count(), 1);
        assert_eq!(m.value(0, "p"), 1);
        let m = parse_model("worlds 2\nedge 0 1\nval 1 p 3", d).unwrap();
        assert_eq!(m.successors(0).unwrap(), &[1]);
        assert_eq!(m.value(1, "p"), 3);
        assert_eq!(parse_model(&render_model(&m), d).unwrap(), m);
        let err = parse_model("worlds 2\nedge 0 5", d).unwrap_err();
        assert_eq!((err.span.line, err.span.column), (2, 8));
        assert!(parse_model("worlds 1\nval 0 p 4", d).is_err());
        assert!(parse_model("worlds 1\nval 0 p 2\nval 0 p 3", d).is_err());
        assert!(parse_model("worlds 0", d).is_err());
    }

    #[test]
    fn proofs() {
        let sig = luk();
        assert_eq!(parse_proof("", &sig).unwrap().steps.len(), 0);
        let text = "logic mv-T\nhyp: (p, 1) ->\n1: (p, 1) -> ; hyp 1\n2: (p, 1) -> (q, 2) ; rweak (q, 2) from 1\n";
        let d = parse_proof(text, &sig).unwrap();
        assert_eq!(d.logic, LogicId::T);
        assert_eq!(d.steps[1].premises, vec![0]);
        assert_eq!(render_proof(&d), text);
        let err = parse_proof("1: (p,1) -> (p,1) ; ax-id\n2: (p,1) -> (p,1) ; rweak (p,1) from 7", &sig).unwrap_err();
        assert!(err.message.contains("forward reference"));
        assert!(parse_proof("1: -> ; frobnicate", &sig).is_err());
        assert!(parse_proof("2: -> ; ax-id", &sig).is_err());
    }
}
