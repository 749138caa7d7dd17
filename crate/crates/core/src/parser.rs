//! Recursive-descent parser for the Python-subset front end.
//!
//! Works in two stages: tokens are first grouped into logical lines
//! (bracket nesting joins physical lines, comments drop out), then the
//! statement grammar runs over those lines using indentation columns to
//! delimit suites. Normalization happens during parsing: `elif` becomes
//! a nested `If`, parentheses used for grouping vanish, and a minus sign
//! in front of a number folds into the literal.

use crate::ast::*;
use crate::error::{Error, Result};
use crate::lexer::{Token, TokenKind, TokenStream};
use crate::span::Span;

/// Parses a token stream into a normalized AST.
pub fn parse(stream: &TokenStream) -> Result<NormalizedAst> {
    let lines = logical_lines(&stream.tokens);
    let mut parser = Parser { lines, pos: 0, next_id: 0 };
    let body = parser.parse_suite(0, true)?;
    if parser.pos < parser.lines.len() {
        let line = &parser.lines[parser.pos];
        return Err(err_at(line.tokens[0].span, "statement at module indentation"));
    }
    let span = match (body.first(), body.last()) {
        (Some(first), Some(last)) => first.span.merge(last.span),
        _ => Span::point(1, 1),
    };
    Ok(NormalizedAst {
        unit_id: stream.unit_id.clone(),
        module: Module { body, span },
    })
}

/// One or more physical lines joined by open brackets, with comments
/// removed. `indent` is the column of the first token minus one.
struct LogicalLine {
    tokens: Vec<Token>,
    indent: u32,
}

fn logical_lines(tokens: &[Token]) -> Vec<LogicalLine> {
    let mut lines: Vec<LogicalLine> = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    let mut depth: i32 = 0;
    let mut last_line = 0u32;

    for token in tokens {
        if token.kind == TokenKind::Comment {
            continue;
        }
        let starts_new_physical_line = token.span.start_line > last_line;
        if starts_new_physical_line && depth == 0 && !current.is_empty() {
            lines.push(finish_line(std::mem::take(&mut current)));
        }
        if token.kind == TokenKind::Punctuation {
            match token.lexeme.as_str() {
                "(" | "[" | "{" => depth += 1,
                ")" | "]" | "}" => depth -= 1,
                _ => {}
            }
        }
        last_line = token.span.end_line;
        current.push(token.clone());
    }
    if !current.is_empty() {
        lines.push(finish_line(current));
    }
    lines
}

fn finish_line(tokens: Vec<Token>) -> LogicalLine {
    let indent = tokens[0].span.start_col - 1;
    LogicalLine { tokens, indent }
}

struct Parser {
    lines: Vec<LogicalLine>,
    pos: usize,
    next_id: u32,
}

impl Parser {
    fn fresh_id(&mut self) -> StmtId {
        let id = StmtId(self.next_id);
        self.next_id += 1;
        id
    }

    fn peek_line(&self) -> Option<&LogicalLine> {
        self.lines.get(self.pos)
    }

    /// Parses statements at one indentation level. At module level
    /// (`at_module`) the indent must be 0; inside a suite the first line
    /// fixes the indent and every following line must match it until the
    /// suite dedents.
    fn parse_suite(&mut self, min_indent: u32, at_module: bool) -> Result<Vec<Stmt>> {
        let mut body = Vec::new();
        let suite_indent = match self.peek_line() {
            Some(line) if at_module => {
                if line.indent != 0 {
                    return Err(err_at(line.tokens[0].span, "top-level statement at column 1"));
                }
                0
            }
            Some(line) => {
                if line.indent < min_indent {
                    return Err(err_at(line.tokens[0].span, "an indented block"));
                }
                line.indent
            }
            None => return Ok(body),
        };
        while let Some(line) = self.peek_line() {
            if line.indent < suite_indent {
                break;
            }
            if line.indent > suite_indent {
                return Err(err_at(line.tokens[0].span, "statement at enclosing indentation"));
            }
            if is_suite_continuation(line) {
                break;
            }
            let mut stmts = self.parse_line(suite_indent)?;
            body.append(&mut stmts);
        }
        Ok(body)
    }

    /// Parses one logical line, which may yield several statements when
    /// simple statements are chained with `;`.
    fn parse_line(&mut self, indent: u32) -> Result<Vec<Stmt>> {
        let line = &self.lines[self.pos];
        let first = &line.tokens[0];
        if first.kind == TokenKind::Keyword {
            match first.lexeme.as_str() {
                "def" => return Ok(vec![self.parse_def(indent)?]),
                "class" => return Ok(vec![self.parse_class(indent)?]),
                "if" => return Ok(vec![self.parse_if(indent)?]),
                "while" => return Ok(vec![self.parse_while(indent)?]),
                "for" => return Ok(vec![self.parse_for(indent)?]),
                "try" => return Ok(vec![self.parse_try(indent)?]),
                "elif" | "else" | "except" | "finally" => {
                    return Err(err_at(first.span, "a statement (dangling suite keyword)"));
                }
                _ => {}
            }
        }
        let line = &self.lines[self.pos];
        let tokens = line.tokens.clone();
        self.pos += 1;
        self.parse_simple_chain(&tokens)
    }

    /// Simple statements separated by `;` on one logical line.
    fn parse_simple_chain(&mut self, tokens: &[Token]) -> Result<Vec<Stmt>> {
        let mut out = Vec::new();
        for group in split_top_level(tokens, ";") {
            if group.is_empty() {
                continue;
            }
            out.push(self.parse_simple(group)?);
        }
        if out.is_empty() {
            return Err(err_at(tokens[0].span, "a statement"));
        }
        Ok(out)
    }

    fn parse_simple(&mut self, tokens: &[Token]) -> Result<Stmt> {
        let id = self.fresh_id();
        let first = &tokens[0];
        let span_all = tokens_span(tokens);
        if first.kind == TokenKind::Keyword {
            match first.lexeme.as_str() {
                "pass" => return self.nullary(id, tokens, StmtKind::Pass),
                "break" => return self.nullary(id, tokens, StmtKind::Break),
                "continue" => return self.nullary(id, tokens, StmtKind::Continue),
                "return" => {
                    let value = if tokens.len() > 1 {
                        Some(parse_expr_tokens(&tokens[1..])?)
                    } else {
                        None
                    };
                    return Ok(Stmt { id, kind: StmtKind::Return { value }, span: span_all });
                }
                "raise" => {
                    let value = if tokens.len() > 1 {
                        Some(parse_expr_tokens(&tokens[1..])?)
                    } else {
                        None
                    };
                    return Ok(Stmt { id, kind: StmtKind::Raise { value }, span: span_all });
                }
                "import" => return parse_plain_import(id, tokens),
                "from" => return parse_from_import(id, tokens),
                _ => return Err(err_at(first.span, "a simple statement")),
            }
        }

        // Assignment, augmented assignment, or bare expression.
        if let Some(eq_pos) = find_top_level_op(tokens, "=") {
            if find_top_level_op(&tokens[eq_pos + 1..], "=").is_some() {
                return Err(err_at(tokens[eq_pos].span, "a single assignment (chaining is not supported)"));
            }
            let target = parse_expr_tokens(&tokens[..eq_pos])?;
            require_assignable(&target)?;
            let value = parse_expr_tokens(&tokens[eq_pos + 1..])?;
            return Ok(Stmt { id, kind: StmtKind::Assign { target, value }, span: span_all });
        }
        for aug in ["+=", "-=", "*=", "/=", "%="] {
            if let Some(pos) = find_top_level_op(tokens, aug) {
                let target = parse_expr_tokens(&tokens[..pos])?;
                require_assignable(&target)?;
                let value = parse_expr_tokens(&tokens[pos + 1..])?;
                let op = aug.trim_end_matches('=').to_string();
                return Ok(Stmt {
                    id,
                    kind: StmtKind::AugAssign { target, op, value },
                    span: span_all,
                });
            }
        }
        let value = parse_expr_tokens(tokens)?;
        Ok(Stmt { id, kind: StmtKind::ExprStmt { value }, span: span_all })
    }

    fn nullary(&mut self, id: StmtId, tokens: &[Token], kind: StmtKind) -> Result<Stmt> {
        if tokens.len() > 1 {
            return Err(err_at(tokens[1].span, "end of statement"));
        }
        Ok(Stmt { id, kind, span: tokens[0].span })
    }

    /// Splits a compound-statement line at the suite colon, returning the
    /// header tokens and any inline-suite tokens after the colon.
    fn split_header(line: &LogicalLine) -> Result<(Vec<Token>, Vec<Token>)> {
        let colon = find_top_level_punct(&line.tokens, ":")
            .ok_or_else(|| err_at(tokens_span(&line.tokens), "`:` introducing a suite"))?;
        Ok((line.tokens[..colon].to_vec(), line.tokens[colon + 1..].to_vec()))
    }

    /// Parses the suite after a compound-statement header: inline simple
    /// statements when tokens follow the colon, an indented block otherwise.
    fn parse_body(&mut self, inline: Vec<Token>, indent: u32) -> Result<Vec<Stmt>> {
        if !inline.is_empty() {
            return self.parse_simple_chain(&inline);
        }
        self.parse_suite(indent + 1, false)
    }

    fn parse_def(&mut self, indent: u32) -> Result<Stmt> {
        let line = &self.lines[self.pos];
        let (header, inline) = Self::split_header(line)?;
        let header_span = tokens_span(&header);
        self.pos += 1;

        // Header shape: def NAME ( params ) [-> ignored names are not supported]
        if header.len() < 4 {
            return Err(err_at(header_span, "a function header `def name(...)`"));
        }
        let name_tok = &header[1];
        if name_tok.kind != TokenKind::Identifier {
            return Err(err_at(name_tok.span, "a function name"));
        }
        if !header[2].is_punct("(") || !header[header.len() - 1].is_punct(")") {
            return Err(err_at(header_span, "a parenthesized parameter list"));
        }
        let id = self.fresh_id();
        let mut params = Vec::new();
        for group in split_top_level(&header[3..header.len() - 1], ",") {
            if group.is_empty() {
                continue;
            }
            if group.len() != 1 || group[0].kind != TokenKind::Identifier {
                return Err(err_at(
                    tokens_span(group),
                    "a plain parameter name (defaults and annotations are not supported)",
                ));
            }
            params.push(Param {
                id: self.fresh_id(),
                name: group[0].lexeme.clone(),
                span: group[0].span,
            });
        }
        let body = self.parse_body(inline, indent)?;
        let span = end_span(header_span, &body);
        Ok(Stmt {
            id,
            kind: StmtKind::FunctionDef { name: name_tok.lexeme.clone(), params, body },
            span,
        })
    }

    fn parse_class(&mut self, indent: u32) -> Result<Stmt> {
        let line = &self.lines[self.pos];
        let (header, inline) = Self::split_header(line)?;
        let header_span = tokens_span(&header);
        self.pos += 1;

        if header.len() < 2 || header[1].kind != TokenKind::Identifier {
            return Err(err_at(header_span, "a class name"));
        }
        let name = header[1].lexeme.clone();
        let mut bases = Vec::new();
        if header.len() > 2 {
            if !header[2].is_punct("(") || !header[header.len() - 1].is_punct(")") {
                return Err(err_at(header_span, "a parenthesized base-class list"));
            }
            for group in split_top_level(&header[3..header.len() - 1], ",") {
                if group.is_empty() {
                    continue;
                }
                let expr = parse_expr_tokens(group)?;
                match expr.dotted_name() {
                    Some(dotted) => bases.push(dotted),
                    None => return Err(err_at(expr.span, "a base-class name")),
                }
            }
        }
        let id = self.fresh_id();
        let body = self.parse_body(inline, indent)?;
        let span = end_span(header_span, &body);
        Ok(Stmt { id, kind: StmtKind::ClassDef { name, bases, body }, span })
    }

    fn parse_if(&mut self, indent: u32) -> Result<Stmt> {
        let line = &self.lines[self.pos];
        let (header, inline) = Self::split_header(line)?;
        let header_span = tokens_span(&header);
        self.pos += 1;

        let id = self.fresh_id();
        let test = parse_expr_tokens(&header[1..])?;
        let body = self.parse_body(inline, indent)?;
        let orelse = self.parse_else_chain(indent)?;
        let mut span = end_span(header_span, &body);
        if let Some(last) = orelse.last() {
            span = span.merge(last.span);
        }
        Ok(Stmt { id, kind: StmtKind::If { test, body, orelse }, span })
    }

    /// Consumes `elif`/`else` clauses at `indent`. An `elif` becomes a
    /// single nested `If` statement in the returned else-suite.
    fn parse_else_chain(&mut self, indent: u32) -> Result<Vec<Stmt>> {
        let Some(line) = self.peek_line() else { return Ok(Vec::new()) };
        if line.indent != indent || line.tokens[0].kind != TokenKind::Keyword {
            return Ok(Vec::new());
        }
        match line.tokens[0].lexeme.as_str() {
            "elif" => {
                let line = &self.lines[self.pos];
                let (header, inline) = Self::split_header(line)?;
                let header_span = tokens_span(&header);
                self.pos += 1;
                let id = self.fresh_id();
                let test = parse_expr_tokens(&header[1..])?;
                let body = self.parse_body(inline, indent)?;
                let orelse = self.parse_else_chain(indent)?;
                let mut span = end_span(header_span, &body);
                if let Some(last) = orelse.last() {
                    span = span.merge(last.span);
                }
                Ok(vec![Stmt { id, kind: StmtKind::If { test, body, orelse }, span }])
            }
            "else" => {
                let line = &self.lines[self.pos];
                let (header, inline) = Self::split_header(line)?;
                if header.len() != 1 {
                    return Err(err_at(tokens_span(&header), "bare `else`"));
                }
                self.pos += 1;
                self.parse_body(inline, indent)
            }
            _ => Ok(Vec::new()),
        }
    }

    fn parse_while(&mut self, indent: u32) -> Result<Stmt> {
        let line = &self.lines[self.pos];
        let (header, inline) = Self::split_header(line)?;
        let header_span = tokens_span(&header);
        self.pos += 1;

        let id = self.fresh_id();
        let test = parse_expr_tokens(&header[1..])?;
        let body = self.parse_body(inline, indent)?;
        let span = end_span(header_span, &body);
        Ok(Stmt { id, kind: StmtKind::While { test, body }, span })
    }

    fn parse_for(&mut self, indent: u32) -> Result<Stmt> {
        let line = &self.lines[self.pos];
        let (header, inline) = Self::split_header(line)?;
        let header_span = tokens_span(&header);
        self.pos += 1;

        let in_pos = header
            .iter()
            .position(|t| t.is_keyword("in"))
            .ok_or_else(|| err_at(header_span, "`in` in a for header"))?;
        let id = self.fresh_id();
        let target = parse_expr_tokens(&header[1..in_pos])?;
        if !matches!(target.kind, ExprKind::Name(_)) {
            return Err(err_at(target.span, "a single loop variable"));
        }
        let iter = parse_expr_tokens(&header[in_pos + 1..])?;
        let body = self.parse_body(inline, indent)?;
        let span = end_span(header_span, &body);
        Ok(Stmt { id, kind: StmtKind::For { target, iter, body }, span })
    }

    fn parse_try(&mut self, indent: u32) -> Result<Stmt> {
        let line = &self.lines[self.pos];
        let (header, inline) = Self::split_header(line)?;
        let header_span = tokens_span(&header);
        if header.len() != 1 {
            return Err(err_at(header_span, "bare `try`"));
        }
        self.pos += 1;

        let id = self.fresh_id();
        let body = self.parse_body(inline, indent)?;
        let mut handlers = Vec::new();
        let mut finalbody = Vec::new();

        while let Some(line) = self.peek_line() {
            if line.indent != indent || !line.tokens[0].is_keyword("except") {
                break;
            }
            let line = &self.lines[self.pos];
            let (header, inline) = Self::split_header(line)?;
            let handler_header_span = tokens_span(&header);
            self.pos += 1;
            let exc_type = match header.len() {
                1 => None,
                2 if header[1].kind == TokenKind::Identifier => Some(header[1].lexeme.clone()),
                _ => {
                    return Err(err_at(
                        handler_header_span,
                        "`except` or `except ExcName` (as-bindings are not supported)",
                    ))
                }
            };
            let hbody = self.parse_body(inline, indent)?;
            let span = end_span(handler_header_span, &hbody);
            handlers.push(Handler { exc_type, body: hbody, span });
        }

        if let Some(line) = self.peek_line() {
            if line.indent == indent && line.tokens[0].is_keyword("finally") {
                let line = &self.lines[self.pos];
                let (header, inline) = Self::split_header(line)?;
                if header.len() != 1 {
                    return Err(err_at(tokens_span(&header), "bare `finally`"));
                }
                self.pos += 1;
                finalbody = self.parse_body(inline, indent)?;
            }
        }

        if handlers.is_empty() && finalbody.is_empty() {
            return Err(err_at(header_span, "an `except` or `finally` clause"));
        }
        let mut span = end_span(header_span, &body);
        if let Some(last) = handlers.last() {
            span = span.merge(last.span);
        }
        if let Some(last) = finalbody.last() {
            span = span.merge(last.span);
        }
        Ok(Stmt { id, kind: StmtKind::Try { body, handlers, finalbody }, span })
    }
}

fn is_suite_continuation(line: &LogicalLine) -> bool {
    line.tokens[0].kind == TokenKind::Keyword
        && matches!(line.tokens[0].lexeme.as_str(), "elif" | "else" | "except" | "finally")
}

fn require_assignable(target: &Expr) -> Result<()> {
    match target.kind {
        ExprKind::Name(_) | ExprKind::Attribute { .. } | ExprKind::Subscript { .. } => Ok(()),
        _ => Err(err_at(target.span, "a name, attribute, or subscript target")),
    }
}

fn parse_plain_import(id: StmtId, tokens: &[Token]) -> Result<Stmt> {
    // import dotted.name [as alias]
    let span = tokens_span(tokens);
    let mut rest = &tokens[1..];
    let mut alias = None;
    if rest.len() >= 2 && rest[rest.len() - 2].is_keyword("as") {
        let alias_tok = &rest[rest.len() - 1];
        if alias_tok.kind != TokenKind::Identifier {
            return Err(err_at(alias_tok.span, "an alias name"));
        }
        alias = Some(alias_tok.lexeme.clone());
        rest = &rest[..rest.len() - 2];
    }
    let module = dotted_from_tokens(rest)?;
    let bound = alias.unwrap_or_else(|| module.split('.').next().unwrap_or("").to_string());
    Ok(Stmt { id, kind: StmtKind::Import { module, names: vec![bound] }, span })
}

fn parse_from_import(id: StmtId, tokens: &[Token]) -> Result<Stmt> {
    // from dotted.name import a, b
    let span = tokens_span(tokens);
    let import_pos = tokens
        .iter()
        .position(|t| t.is_keyword("import"))
        .ok_or_else(|| err_at(span, "`import` after `from <module>`"))?;
    let module = dotted_from_tokens(&tokens[1..import_pos])?;
    let mut names = Vec::new();
    for group in split_top_level(&tokens[import_pos + 1..], ",") {
        if group.len() != 1 || group[0].kind != TokenKind::Identifier {
            return Err(err_at(tokens_span(group), "an imported name"));
        }
        names.push(group[0].lexeme.clone());
    }
    if names.is_empty() {
        return Err(err_at(span, "at least one imported name"));
    }
    Ok(Stmt { id, kind: StmtKind::Import { module, names }, span })
}

fn dotted_from_tokens(tokens: &[Token]) -> Result<String> {
    let span = tokens_span(tokens);
    let mut out = String::new();
    let mut expect_name = true;
    for tok in tokens {
        match (expect_name, tok.kind) {
            (true, TokenKind::Identifier) => {
                out.push_str(&tok.lexeme);
                expect_name = false;
            }
            (false, TokenKind::Punctuation) if tok.lexeme == "." => {
                out.push('.');
                expect_name = true;
            }
            _ => return Err(err_at(tok.span, "a dotted module name")),
        }
    }
    if out.is_empty() || expect_name {
        return Err(err_at(span, "a dotted module name"));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Expression parsing
// ---------------------------------------------------------------------------

/// Parses an expression from a complete token slice; trailing tokens are
/// an error.
pub fn parse_expr_tokens(tokens: &[Token]) -> Result<Expr> {
    if tokens.is_empty() {
        return Err(Error::Parse { span: Span::point(1, 1), expected: "an expression".into() });
    }
    let mut cursor = ExprCursor { tokens, pos: 0 };
    let expr = cursor.parse_or()?;
    if cursor.pos != tokens.len() {
        return Err(err_at(tokens[cursor.pos].span, "end of expression"));
    }
    Ok(expr)
}

struct ExprCursor<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl<'a> ExprCursor<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_punct(&mut self, p: &str) -> Result<&'a Token> {
        match self.peek() {
            Some(t) if t.is_punct(p) => Ok(self.bump().expect("peeked")),
            Some(t) => Err(err_at(t.span, &format!("`{p}`"))),
            None => Err(err_at(self.last_span(), &format!("`{p}`"))),
        }
    }

    fn last_span(&self) -> Span {
        self.tokens.last().map(|t| t.span).unwrap_or_else(|| Span::point(1, 1))
    }

    fn parse_or(&mut self) -> Result<Expr> {
        let mut left = self.parse_and()?;
        while matches!(self.peek(), Some(t) if t.is_keyword("or")) {
            self.bump();
            let right = self.parse_and()?;
            left = bin(left, "or", right);
        }
        Ok(left)
    }

    fn parse_and(&mut self) -> Result<Expr> {
        let mut left = self.parse_comparison()?;
        while matches!(self.peek(), Some(t) if t.is_keyword("and")) {
            self.bump();
            let right = self.parse_comparison()?;
            left = bin(left, "and", right);
        }
        Ok(left)
    }

    fn parse_comparison(&mut self) -> Result<Expr> {
        let left = self.parse_additive()?;
        let op = match self.peek() {
            Some(t) if t.kind == TokenKind::Operator
                && matches!(t.lexeme.as_str(), "==" | "!=" | "<" | ">" | "<=" | ">=") =>
            {
                t.lexeme.clone()
            }
            Some(t) if t.is_keyword("in") || t.is_keyword("is") => t.lexeme.clone(),
            _ => return Ok(left),
        };
        self.bump();
        let right = self.parse_additive()?;
        // A second comparator would make a chained comparison, which the
        // subset rejects rather than silently mis-grouping.
        if let Some(t) = self.peek() {
            let chains = (t.kind == TokenKind::Operator
                && matches!(t.lexeme.as_str(), "==" | "!=" | "<" | ">" | "<=" | ">="))
                || t.is_keyword("in")
                || t.is_keyword("is");
            if chains {
                return Err(err_at(t.span, "a single comparison (chaining is not supported)"));
            }
        }
        let span = left.span.merge(right.span);
        Ok(Expr {
            kind: ExprKind::Compare { left: Box::new(left), op, right: Box::new(right) },
            span,
        })
    }

    fn parse_additive(&mut self) -> Result<Expr> {
        let mut left = self.parse_multiplicative()?;
        while matches!(self.peek(), Some(t) if t.is_op("+") || t.is_op("-")) {
            let op = self.bump().expect("peeked").lexeme.clone();
            let right = self.parse_multiplicative()?;
            left = bin(left, &op, right);
        }
        Ok(left)
    }

    fn parse_multiplicative(&mut self) -> Result<Expr> {
        let mut left = self.parse_power()?;
        while matches!(
            self.peek(),
            Some(t) if t.is_op("*") || t.is_op("/") || t.is_op("//") || t.is_op("%")
        ) {
            let op = self.bump().expect("peeked").lexeme.clone();
            let right = self.parse_power()?;
            left = bin(left, &op, right);
        }
        Ok(left)
    }

    fn parse_power(&mut self) -> Result<Expr> {
        let base = self.parse_unary()?;
        if matches!(self.peek(), Some(t) if t.is_op("**")) {
            self.bump();
            // Right-associative, as in Python.
            let exp = self.parse_power()?;
            return Ok(bin(base, "**", exp));
        }
        Ok(base)
    }

    fn parse_unary(&mut self) -> Result<Expr> {
        if matches!(self.peek(), Some(t) if t.is_op("-")) {
            let minus = self.bump().expect("peeked");
            let next = self.peek().cloned();
            match next {
                Some(t) if t.kind == TokenKind::NumberLiteral => {
                    self.bump();
                    return Ok(Expr {
                        kind: ExprKind::Literal(Literal::Num(format!("-{}", t.lexeme))),
                        span: minus.span.merge(t.span),
                    });
                }
                _ => {
                    return Err(err_at(
                        minus.span,
                        "a number literal after unary minus (general negation is not supported)",
                    ))
                }
            }
        }
        self.parse_postfix()
    }

    fn parse_postfix(&mut self) -> Result<Expr> {
        let mut expr = self.parse_atom()?;
        loop {
            match self.peek() {
                Some(t) if t.is_punct("(") => {
                    self.bump();
                    let mut args = Vec::new();
                    if !matches!(self.peek(), Some(t) if t.is_punct(")")) {
                        loop {
                            args.push(self.parse_or()?);
                            if matches!(self.peek(), Some(t) if t.is_punct(",")) {
                                self.bump();
                                if matches!(self.peek(), Some(t) if t.is_punct(")")) {
                                    break;
                                }
                                continue;
                            }
                            break;
                        }
                    }
                    let close = self.expect_punct(")")?;
                    let span = expr.span.merge(close.span);
                    expr = Expr {
                        kind: ExprKind::Call { func: Box::new(expr), args },
                        span,
                    };
                }
                Some(t) if t.is_punct(".") => {
                    self.bump();
                    let name = match self.bump() {
                        Some(t) if t.kind == TokenKind::Identifier => t,
                        Some(t) => return Err(err_at(t.span, "an attribute name")),
                        None => return Err(err_at(self.last_span(), "an attribute name")),
                    };
                    let span = expr.span.merge(name.span);
                    expr = Expr {
                        kind: ExprKind::Attribute { base: Box::new(expr), attr: name.lexeme.clone() },
                        span,
                    };
                }
                Some(t) if t.is_punct("[") => {
                    self.bump();
                    let index = self.parse_or()?;
                    let close = self.expect_punct("]")?;
                    let span = expr.span.merge(close.span);
                    expr = Expr {
                        kind: ExprKind::Subscript { value: Box::new(expr), index: Box::new(index) },
                        span,
                    };
                }
                _ => break,
            }
        }
        Ok(expr)
    }

    fn parse_atom(&mut self) -> Result<Expr> {
        let Some(tok) = self.bump() else {
            return Err(err_at(self.last_span(), "an expression"));
        };
        match tok.kind {
            TokenKind::Identifier => Ok(Expr {
                kind: ExprKind::Name(tok.lexeme.clone()),
                span: tok.span,
            }),
            TokenKind::NumberLiteral => Ok(Expr {
                kind: ExprKind::Literal(Literal::Num(tok.lexeme.clone())),
                span: tok.span,
            }),
            TokenKind::StringLiteral => Ok(Expr {
                kind: ExprKind::Literal(Literal::Str(tok.string_value())),
                span: tok.span,
            }),
            TokenKind::Keyword => match tok.lexeme.as_str() {
                "True" => Ok(Expr { kind: ExprKind::Literal(Literal::Bool(true)), span: tok.span }),
                "False" => {
                    Ok(Expr { kind: ExprKind::Literal(Literal::Bool(false)), span: tok.span })
                }
                "None" => Ok(Expr { kind: ExprKind::Literal(Literal::None), span: tok.span }),
                other => Err(err_at(tok.span, &format!("an expression, not `{other}`"))),
            },
            TokenKind::Punctuation if tok.lexeme == "(" => {
                // Grouping or tuple display.
                if matches!(self.peek(), Some(t) if t.is_punct(")")) {
                    let close = self.bump().expect("peeked");
                    return Ok(Expr {
                        kind: ExprKind::Tuple(Vec::new()),
                        span: tok.span.merge(close.span),
                    });
                }
                let first = self.parse_or()?;
                let mut elems = vec![first];
                let mut is_tuple = false;
                while matches!(self.peek(), Some(t) if t.is_punct(",")) {
                    self.bump();
                    is_tuple = true;
                    if matches!(self.peek(), Some(t) if t.is_punct(")")) {
                        break;
                    }
                    elems.push(self.parse_or()?);
                }
                let close = self.expect_punct(")")?;
                if is_tuple {
                    Ok(Expr {
                        kind: ExprKind::Tuple(elems),
                        span: tok.span.merge(close.span),
                    })
                } else {
                    // Plain grouping: the parens leave no trace in the tree.
                    Ok(elems.pop().expect("one element"))
                }
            }
            _ => Err(err_at(tok.span, "an expression")),
        }
    }
}

fn bin(left: Expr, op: &str, right: Expr) -> Expr {
    let span = left.span.merge(right.span);
    Expr {
        kind: ExprKind::BinOp { left: Box::new(left), op: op.to_string(), right: Box::new(right) },
        span,
    }
}

// ---------------------------------------------------------------------------
// Token-slice helpers
// ---------------------------------------------------------------------------

fn tokens_span(tokens: &[Token]) -> Span {
    match (tokens.first(), tokens.last()) {
        (Some(a), Some(b)) => a.span.merge(b.span),
        _ => Span::point(1, 1),
    }
}

fn end_span(header: Span, body: &[Stmt]) -> Span {
    match body.last() {
        Some(last) => header.merge(last.span),
        None => header,
    }
}

/// Splits on a punctuation lexeme at bracket depth zero.
fn split_top_level<'a>(tokens: &'a [Token], sep: &str) -> Vec<&'a [Token]> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    for (i, tok) in tokens.iter().enumerate() {
        if tok.kind == TokenKind::Punctuation {
            match tok.lexeme.as_str() {
                "(" | "[" | "{" => depth += 1,
                ")" | "]" | "}" => depth -= 1,
                s if s == sep && depth == 0 => {
                    out.push(&tokens[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
    }
    out.push(&tokens[start..]);
    out
}

fn find_top_level_op(tokens: &[Token], op: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, tok) in tokens.iter().enumerate() {
        match tok.kind {
            TokenKind::Punctuation => match tok.lexeme.as_str() {
                "(" | "[" | "{" => depth += 1,
                ")" | "]" | "}" => depth -= 1,
                _ => {}
            },
            TokenKind::Operator if depth == 0 && tok.lexeme == op => return Some(i),
            _ => {}
        }
    }
    None
}

fn find_top_level_punct(tokens: &[Token], p: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, tok) in tokens.iter().enumerate() {
        if tok.kind == TokenKind::Punctuation {
            match tok.lexeme.as_str() {
                "(" | "[" | "{" => depth += 1,
                ")" | "]" | "}" => depth -= 1,
                s if s == p && depth == 0 => return Some(i),
                _ => {}
            }
        }
    }
    None
}

fn err_at(span: Span, expected: &str) -> Error {
    Error::Parse { span, expected: expected.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexer::tokenize;

    fn parse_text(text: &str) -> NormalizedAst {
        let stream = tokenize("t.py", text).expect("lexes");
        parse(&stream).expect("parses")
    }

    fn parse_err(text: &str) -> Error {
        let stream = tokenize("t.py", text).expect("lexes");
        parse(&stream).expect_err("should not parse")
    }

    #[test]
    fn simple_function_round_trip() {
        let ast = parse_text("def add(a, b):\n    return a + b\n");
        assert_eq!(ast.module.body.len(), 1);
        let StmtKind::FunctionDef { name, params, body } = &ast.module.body[0].kind else {
            panic!("expected function");
        };
        assert_eq!(name, "add");
        assert_eq!(params.len(), 2);
        assert_eq!(body.len(), 1);
        assert!(matches!(body[0].kind, StmtKind::Return { .. }));
    }

    #[test]
    fn statement_ids_are_dense_and_preordered() {
        let ast = parse_text("def f(a):\n    x = a\n    return x\n");
        // FunctionDef=0, param a=1, assign=2, return=3.
        let StmtKind::FunctionDef { params, body, .. } = &ast.module.body[0].kind else {
            panic!("expected function");
        };
        assert_eq!(ast.module.body[0].id, StmtId(0));
        assert_eq!(params[0].id, StmtId(1));
        assert_eq!(body[0].id, StmtId(2));
        assert_eq!(body[1].id, StmtId(3));
    }

    #[test]
    fn elif_normalizes_to_nested_if() {
        let ast = parse_text(
            "if a:\n    x = 1\nelif b:\n    x = 2\nelse:\n    x = 3\n",
        );
        let StmtKind::If { orelse, .. } = &ast.module.body[0].kind else {
            panic!("expected if");
        };
        assert_eq!(orelse.len(), 1);
        let StmtKind::If { orelse: inner_else, .. } = &orelse[0].kind else {
            panic!("expected nested if for elif");
        };
        assert_eq!(inner_else.len(), 1);
    }

    #[test]
    fn child_spans_nest_within_parents() {
        let ast = parse_text(
            "def f(a):\n    if a > 1:\n        return a\n    return 0\n",
        );
        let f = &ast.module.body[0];
        let StmtKind::FunctionDef { body, .. } = &f.kind else { panic!() };
        for child in body {
            assert!(
                f.span.contains(&child.span),
                "{} not within {}",
                child.span,
                f.span
            );
        }
        assert!(ast.module.span.contains(&f.span));
    }

    #[test]
    fn parenthesized_grouping_leaves_no_node() {
        let ast = parse_text("x = (a + b) * c\n");
        let StmtKind::Assign { value, .. } = &ast.module.body[0].kind else { panic!() };
        let ExprKind::BinOp { left, op, .. } = &value.kind else { panic!() };
        assert_eq!(op, "*");
        assert!(matches!(left.kind, ExprKind::BinOp { .. }));
    }

    #[test]
    fn tuple_display_parses() {
        let ast = parse_text("cur.execute(q, (a, b))\n");
        let StmtKind::ExprStmt { value } = &ast.module.body[0].kind else { panic!() };
        let ExprKind::Call { args, .. } = &value.kind else { panic!() };
        assert_eq!(args.len(), 2);
        let ExprKind::Tuple(elems) = &args[1].kind else { panic!("expected tuple") };
        assert_eq!(elems.len(), 2);
    }

    #[test]
    fn negative_number_folds_into_literal() {
        let ast = parse_text("x = -42\n");
        let StmtKind::Assign { value, .. } = &ast.module.body[0].kind else { panic!() };
        assert_eq!(value.kind, ExprKind::Literal(Literal::Num("-42".into())));
    }

    #[test]
    fn multiline_call_joins_logical_line() {
        let ast = parse_text("x = f(a,\n      b,\n      c)\ny = 2\n");
        assert_eq!(ast.module.body.len(), 2);
        let StmtKind::Assign { value, .. } = &ast.module.body[0].kind else { panic!() };
        let ExprKind::Call { args, .. } = &value.kind else { panic!() };
        assert_eq!(args.len(), 3);
    }

    #[test]
    fn inline_suite_and_semicolons() {
        let ast = parse_text("if c: x = 2\nx = 1; y = x\n");
        assert_eq!(ast.module.body.len(), 3);
        let StmtKind::If { body, .. } = &ast.module.body[0].kind else { panic!() };
        assert_eq!(body.len(), 1);
    }

    #[test]
    fn try_except_finally_parses() {
        let ast = parse_text(
            "try:\n    risky()\nexcept ValueError:\n    handle()\nfinally:\n    close()\n",
        );
        let StmtKind::Try { body, handlers, finalbody } = &ast.module.body[0].kind else {
            panic!()
        };
        assert_eq!(body.len(), 1);
        assert_eq!(handlers.len(), 1);
        assert_eq!(handlers[0].exc_type.as_deref(), Some("ValueError"));
        assert_eq!(finalbody.len(), 1);
    }

    #[test]
    fn rejects_unsupported_forms() {
        assert!(matches!(parse_err("x = a if b else c\n"), Error::Parse { .. }));
        assert!(matches!(parse_err("a = b = 1\n"), Error::Parse { .. }));
        assert!(matches!(parse_err("if a < b < c:\n    pass\n"), Error::Parse { .. }));
        assert!(matches!(parse_err("x = not a\n"), Error::Parse { .. }));
        assert!(matches!(parse_err("else:\n    pass\n"), Error::Parse { .. }));
        assert!(matches!(parse_err("def f(a=1):\n    pass\n"), Error::Parse { .. }));
        assert!(matches!(parse_err("try:\n    pass\n"), Error::Parse { .. }));
    }

    #[test]
    fn import_forms() {
        let ast = parse_text("import os\nimport os.path as p\nfrom db import connect, cursor\n");
        let StmtKind::Import { module, names } = &ast.module.body[0].kind else { panic!() };
        assert_eq!((module.as_str(), names.len()), ("os", 1));
        let StmtKind::Import { module, names } = &ast.module.body[1].kind else { panic!() };
        assert_eq!((module.as_str(), names[0].as_str()), ("os.path", "p"));
        let StmtKind::Import { module, names } = &ast.module.body[2].kind else { panic!() };
        assert_eq!((module.as_str(), names.len()), ("db", 2));
    }

    #[test]
    fn class_with_bases() {
        let ast = parse_text("class Repo(Base, mixins.Timed):\n    def get(self):\n        return 1\n");
        let StmtKind::ClassDef { name, bases, body } = &ast.module.body[0].kind else { panic!() };
        assert_eq!(name, "Repo");
        assert_eq!(bases, &vec!["Base".to_string(), "mixins.Timed".to_string()]);
        assert_eq!(body.len(), 1);
    }

    #[test]
    fn power_is_right_associative() {
        let ast = parse_text("x = a ** b ** c\n");
        let StmtKind::Assign { value, .. } = &ast.module.body[0].kind else { panic!() };
        let ExprKind::BinOp { right, .. } = &value.kind else { panic!() };
        assert!(matches!(right.kind, ExprKind::BinOp { .. }));
    }
}
