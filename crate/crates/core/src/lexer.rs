//! Lexer for the Python-subset front end.
//!
//! Produces a flat token stream in which every non-whitespace character
//! belongs to exactly one token — comments included — so later stages
//! (clone fingerprinting, cue scanning, window extraction) can reason
//! about raw text through tokens alone.

use crate::error::{Error, Result};
use crate::span::Span;
use serde::{Deserialize, Serialize};

/// Lexical class of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TokenKind {
    Identifier,
    Keyword,
    StringLiteral,
    NumberLiteral,
    Operator,
    Punctuation,
    Comment,
}

/// One lexed token. `lexeme` is the exact source slice, quotes and all.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub span: Span,
}

impl Token {
    pub fn is_keyword(&self, kw: &str) -> bool {
        self.kind == TokenKind::Keyword && self.lexeme == kw
    }

    pub fn is_op(&self, op: &str) -> bool {
        self.kind == TokenKind::Operator && self.lexeme == op
    }

    pub fn is_punct(&self, p: &str) -> bool {
        self.kind == TokenKind::Punctuation && self.lexeme == p
    }

    /// Decoded value of a string literal: quotes stripped, escape
    /// sequences resolved. Unknown escapes keep the backslash, matching
    /// Python's lenient behavior.
    pub fn string_value(&self) -> String {
        debug_assert_eq!(self.kind, TokenKind::StringLiteral);
        let raw = &self.lexeme;
        let body = if raw.len() >= 6 && (raw.starts_with("\"\"\"") || raw.starts_with("'''")) {
            &raw[3..raw.len() - 3]
        } else {
            &raw[1..raw.len() - 1]
        };
        let mut out = String::with_capacity(body.len());
        let mut chars = body.chars();
        while let Some(c) = chars.next() {
            if c != '\\' {
                out.push(c);
                continue;
            }
            match chars.next() {
                Some('n') => out.push('\n'),
                Some('t') => out.push('\t'),
                Some('r') => out.push('\r'),
                Some('\\') => out.push('\\'),
                Some('\'') => out.push('\''),
                Some('"') => out.push('"'),
                Some('0') => out.push('\0'),
                Some(other) => {
                    out.push('\\');
                    out.push(other);
                }
                None => out.push('\\'),
            }
        }
        out
    }
}

/// Token sequence for one source unit.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TokenStream {
    pub unit_id: String,
    pub tokens: Vec<Token>,
}

const KEYWORDS: &[&str] = &[
    "def", "class", "if", "elif", "else", "while", "for", "in", "return", "raise", "import",
    "from", "as", "try", "except", "finally", "pass", "break", "continue", "and", "or", "not",
    "is", "True", "False", "None",
];

/// Multi-character operators, longest first so max-munch works by order.
const MULTI_OPS: &[&str] = &["**", "//", "==", "!=", "<=", ">=", "+=", "-=", "*=", "/=", "%=", "->"];
const SINGLE_OPS: &[char] = &['+', '-', '*', '/', '%', '=', '<', '>'];
const PUNCTUATION: &[char] = &['(', ')', '[', ']', '{', '}', ',', ':', '.', ';'];

/// Lexes `text` (belonging to `unit_id`) into a token stream.
///
/// Errors on characters outside the supported alphabet and on
/// unterminated string literals; whitespace (space, tab, CR, LF) is the
/// only input that produces no token.
pub fn tokenize(unit_id: &str, text: &str) -> Result<TokenStream> {
    let mut lexer = Lexer::new(text);
    let mut tokens = Vec::new();
    while let Some(token) = lexer.next_token()? {
        tokens.push(token);
    }
    Ok(TokenStream { unit_id: unit_id.to_string(), tokens })
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    col: u32,
}

impl Lexer {
    fn new(text: &str) -> Self {
        Lexer { chars: text.chars().collect(), pos: 0, line: 1, col: 1 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    /// Consumes one character, updating the 1-based line/col cursor.
    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn here(&self) -> (u32, u32) {
        (self.line, self.col)
    }

    fn skip_whitespace(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t' | '\r' | '\n')) {
            self.bump();
        }
    }

    fn next_token(&mut self) -> Result<Option<Token>> {
        self.skip_whitespace();
        let Some(c) = self.peek() else { return Ok(None) };
        let (start_line, start_col) = self.here();

        let token = if c == '#' {
            self.lex_comment(start_line, start_col)
        } else if c == '"' || c == '\'' {
            self.lex_string(start_line, start_col)?
        } else if c.is_ascii_digit() {
            self.lex_number(start_line, start_col)
        } else if c.is_ascii_alphabetic() || c == '_' {
            self.lex_word(start_line, start_col)
        } else if let Some(token) = self.lex_operator_or_punct(start_line, start_col) {
            token
        } else {
            return Err(Error::Lex {
                span: Span::point(start_line, start_col),
                message: format!("unsupported character `{c}`"),
            });
        };
        Ok(Some(token))
    }

    fn lex_comment(&mut self, line: u32, col: u32) -> Token {
        let mut lexeme = String::new();
        while let Some(c) = self.peek() {
            if c == '\n' {
                break;
            }
            lexeme.push(c);
            self.bump();
        }
        let end_col = col + lexeme.chars().count() as u32 - 1;
        Token {
            kind: TokenKind::Comment,
            lexeme,
            span: Span::new(line, col, line, end_col),
        }
    }

    fn lex_string(&mut self, start_line: u32, start_col: u32) -> Result<Token> {
        let quote = self.peek().expect("caller checked");
        let triple = self.peek_at(1) == Some(quote) && self.peek_at(2) == Some(quote);
        let mut lexeme = String::new();
        let quote_len = if triple { 3 } else { 1 };
        for _ in 0..quote_len {
            lexeme.push(self.bump().expect("quote present"));
        }
        loop {
            let (line, col) = self.here();
            let Some(c) = self.peek() else {
                return Err(Error::Lex {
                    span: Span::new(start_line, start_col, line, col.max(1)),
                    message: "unterminated string literal".to_string(),
                });
            };
            if !triple && c == '\n' {
                return Err(Error::Lex {
                    span: Span::new(start_line, start_col, line, col.max(1)),
                    message: "newline inside single-quoted string".to_string(),
                });
            }
            if c == '\\' {
                lexeme.push(self.bump().expect("escape"));
                if let Some(esc) = self.bump() {
                    lexeme.push(esc);
                }
                continue;
            }
            if c == quote {
                if triple {
                    if self.peek_at(1) == Some(quote) && self.peek_at(2) == Some(quote) {
                        let mut end = (0, 0);
                        for _ in 0..3 {
                            end = self.here();
                            lexeme.push(self.bump().expect("closing quotes"));
                        }
                        return Ok(Token {
                            kind: TokenKind::StringLiteral,
                            lexeme,
                            span: Span::new(start_line, start_col, end.0, end.1),
                        });
                    }
                } else {
                    let end = self.here();
                    lexeme.push(self.bump().expect("closing quote"));
                    return Ok(Token {
                        kind: TokenKind::StringLiteral,
                        lexeme,
                        span: Span::new(start_line, start_col, end.0, end.1),
                    });
                }
            }
            lexeme.push(self.bump().expect("string body"));
        }
    }

    fn lex_number(&mut self, line: u32, col: u32) -> Token {
        let mut lexeme = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            lexeme.push(self.bump().expect("digit"));
        }
        // A dot only joins the number when digits follow, so `x.y` after a
        // number (e.g. `1 .real`) never swallows the attribute dot.
        if self.peek() == Some('.') && matches!(self.peek_at(1), Some(c) if c.is_ascii_digit()) {
            lexeme.push(self.bump().expect("dot"));
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                lexeme.push(self.bump().expect("digit"));
            }
        }
        let end_col = col + lexeme.chars().count() as u32 - 1;
        Token {
            kind: TokenKind::NumberLiteral,
            lexeme,
            span: Span::new(line, col, line, end_col),
        }
    }

    fn lex_word(&mut self, line: u32, col: u32) -> Token {
        let mut lexeme = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            lexeme.push(self.bump().expect("word char"));
        }
        let kind = if KEYWORDS.contains(&lexeme.as_str()) {
            TokenKind::Keyword
        } else {
            TokenKind::Identifier
        };
        let end_col = col + lexeme.chars().count() as u32 - 1;
        Token { kind, lexeme, span: Span::new(line, col, line, end_col) }
    }

    fn lex_operator_or_punct(&mut self, line: u32, col: u32) -> Option<Token> {
        for op in MULTI_OPS {
            let mut chars = op.chars();
            let (a, b) = (chars.next().unwrap(), chars.next().unwrap());
            if self.peek() == Some(a) && self.peek_at(1) == Some(b) {
                self.bump();
                self.bump();
                return Some(Token {
                    kind: TokenKind::Operator,
                    lexeme: (*op).to_string(),
                    span: Span::new(line, col, line, col + 1),
                });
            }
        }
        let c = self.peek()?;
        if SINGLE_OPS.contains(&c) {
            self.bump();
            return Some(Token {
                kind: TokenKind::Operator,
                lexeme: c.to_string(),
                span: Span::point(line, col),
            });
        }
        if PUNCTUATION.contains(&c) {
            self.bump();
            return Some(Token {
                kind: TokenKind::Punctuation,
                lexeme: c.to_string(),
                span: Span::point(line, col),
            });
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<(TokenKind, String)> {
        tokenize("t.py", text)
            .expect("lexes")
            .tokens
            .into_iter()
            .map(|t| (t.kind, t.lexeme))
            .collect()
    }

    #[test]
    fn classifies_each_token_kind() {
        let got = kinds("def f(x):  # doc\n    return x + 1\n");
        let expect = vec![
            (TokenKind::Keyword, "def".to_string()),
            (TokenKind::Identifier, "f".to_string()),
            (TokenKind::Punctuation, "(".to_string()),
            (TokenKind::Identifier, "x".to_string()),
            (TokenKind::Punctuation, ")".to_string()),
            (TokenKind::Punctuation, ":".to_string()),
            (TokenKind::Comment, "# doc".to_string()),
            (TokenKind::Keyword, "return".to_string()),
            (TokenKind::Identifier, "x".to_string()),
            (TokenKind::Operator, "+".to_string()),
            (TokenKind::NumberLiteral, "1".to_string()),
        ];
        assert_eq!(got, expect);
    }

    #[test]
    fn multi_char_operators_take_precedence() {
        let got = kinds("a **= 2");
        // `**=` is not in the subset; it must still split deterministically.
        assert_eq!(got[1], (TokenKind::Operator, "**".to_string()));
        assert_eq!(got[2], (TokenKind::Operator, "=".to_string()));
        assert_eq!(kinds("a == b")[1].1, "==");
        assert_eq!(kinds("a <= b")[1].1, "<=");
        assert_eq!(kinds("a // b")[1].1, "//");
    }

    #[test]
    fn string_spans_are_inclusive_and_char_based() {
        let stream = tokenize("t.py", "s = 'héllo'\n").expect("lexes");
        let lit = &stream.tokens[2];
        assert_eq!(lit.kind, TokenKind::StringLiteral);
        // 'héllo' starts at col 5 and is 7 chars long including quotes.
        assert_eq!(lit.span, Span::new(1, 5, 1, 11));
        assert_eq!(lit.string_value(), "héllo");
    }

    #[test]
    fn triple_quoted_strings_may_span_lines() {
        let stream = tokenize("t.py", "s = \"\"\"a\nb\"\"\"\n").expect("lexes");
        let lit = &stream.tokens[2];
        assert_eq!(lit.span.start_line, 1);
        assert_eq!(lit.span.end_line, 2);
        assert_eq!(lit.string_value(), "a\nb");
    }

    #[test]
    fn escapes_decode_in_string_value() {
        let stream = tokenize("t.py", r#"s = "a\nb\t\"q\"""#).expect("lexes");
        assert_eq!(stream.tokens[2].string_value(), "a\nb\t\"q\"");
    }

    #[test]
    fn unterminated_string_is_an_error() {
        assert!(tokenize("t.py", "s = 'oops\n").is_err());
        assert!(tokenize("t.py", "s = \"\"\"oops\n").is_err());
    }

    #[test]
    fn unsupported_character_is_an_error() {
        let err = tokenize("t.py", "x = $y\n").unwrap_err();
        assert!(err.to_string().contains('$'), "got: {err}");
    }

    #[test]
    fn float_literals_keep_their_dot() {
        let got = kinds("x = 3.25 + 1");
        assert_eq!(got[2], (TokenKind::NumberLiteral, "3.25".to_string()));
    }
}
