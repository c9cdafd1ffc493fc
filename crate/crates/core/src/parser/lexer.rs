use std::fmt;

use super::{ParseError, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(u64),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Arrow,
    Colon,
    Semi,
    Eq,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(k) => write!(f, "`{k}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Eq => f.write_str("`=`"),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

/// One non-blank source line, comments stripped.
#[derive(Debug, Clone)]
pub(crate) struct Line {
    pub tokens: Vec<Token>,
    /// Span of the whole line, used for end-of-line errors.
    pub span: SourceSpan,
}

impl Line {
    pub fn end(&self) -> SourceSpan {
        SourceSpan {
            start: self.span.end,
            column: self.span.column + (self.span.end - self.span.start),
            ..self.span
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

/// Splits `text` into lines of tokens, skipping blank and comment-only lines.
pub(crate) fn lex(text: &str) -> Result<Vec<Line>, ParseError> {
    let mut lines = Vec::new();
    let mut offset = 0;
    for (lineno, raw) in text.split('\n').enumerate() {
        let line_start = offset;
        offset += raw.len() + 1;
        let content = raw.split('#').next().unwrap_or("");
        let content = content.trim_end_matches('\r');
        let tokens = lex_line(content, lineno + 1, line_start)?;
        if tokens.is_empty() {
            continue;
        }
        let first = tokens[0].span;
        let last = tokens[tokens.len() - 1].span;
        lines.push(Line {
            tokens,
            span: SourceSpan {
                line: lineno + 1,
                column: first.column,
                start: first.start,
                end: last.end,
            },
        });
    }
    Ok(lines)
}

fn lex_line(content: &str, line: usize, base: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = content.char_indices().collect();
    let mut i = 0;
    let span = |from: usize, to: usize| SourceSpan {
        line,
        column: content[..from].chars().count() + 1,
        start: base + from,
        end: base + to,
    };
    let byte_at = |i: usize| chars.get(i).map_or(content.len(), |&(b, _)| b);
    while i < chars.len() {
        let (b, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            ',' => Some(Tok::Comma),
            ':' => Some(Tok::Colon),
            ';' => Some(Tok::Semi),
            '=' => Some(Tok::Eq),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token {
                tok,
                span: span(b, b + 1),
            });
            i += 1;
        } else if c == '-' && chars.get(i + 1).map(|&(_, c)| c) == Some('>') {
            out.push(Token {
                tok: Tok::Arrow,
                span: span(b, b + 2),
            });
            i += 2;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let (from, to) = (b, byte_at(i));
            let value = content[from..to].parse::<u64>().map_err(|_| ParseError {
                span: span(from, to),
                message: "integer literal too large".into(),
                expected: "integer".into(),
            })?;
            out.push(Token {
                tok: Tok::Int(value),
                span: span(from, to),
            });
        } else if is_ident_start(c) {
            while i < chars.len() {
                let c = chars[i].1;
                let dash = c == '-' && chars.get(i + 1).is_some_and(|&(_, d)| d != '>' && (d.is_alphanumeric() || d == '_'));
                if is_ident_continue(c) || dash {
                    i += 1;
                } else {
                    break;
                }
            }
            let (from, to) = (b, byte_at(i));
            out.push(Token {
                tok: Tok::Ident(content[from..to].to_string()),
                span: span(from, to),
            });
        } else {
            return Err(ParseError {
                span: span(b, b + c.len_utf8()),
                message: format!("unexpected character `{c}`"),
                expected: "token".into(),
            });
        }
    }
    Ok(out)
}
