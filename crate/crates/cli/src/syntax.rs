//! Text syntax for scalars, polynomials, automorphisms and presentations.
//!
//! ```text
//! algebra A over Q(t)
//! generators x1 x2
//! relations {
//!   x1*x1 + x2*x2 + (t)*x1*x2 = 0;
//! }
//! ```
//!
//! `#` starts a comment that runs to the end of the line. Inside
//! expressions, `t` is accepted for `t1` when the field has exactly one
//! transcendental.

use std::fmt;

use fpalg_core::scalars::AffineImage;
use fpalg_core::{FieldAutomorphism, FieldSpec, NCPoly, Presentation, Scalar, Word};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Arrow,
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> PResult<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            Tok::Int(digits.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            i += 2;
            Tok::Arrow
        } else if "+-*/^(){};=,".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(ParseError {
                line: l0,
                column: c0,
                message: format!("unexpected character `{c}`"),
            });
        };
        column += i - start;
        out.push(Spanned {
            tok,
            line: l0,
            column: c0,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

/// Which names an expression may use.
#[derive(Clone, Debug)]
pub struct Scope<'a> {
    /// Number of transcendentals, or `None` to accept any `tN`.
    pub k: Option<usize>,
    pub generators: &'a [String],
}

impl<'a> Scope<'a> {
    pub fn field(k: usize) -> Self {
        Scope {
            k: Some(k),
            generators: &[],
        }
    }

    /// Any `tN`; `t` means `t1`.
    pub fn open() -> Self {
        Scope {
            k: None,
            generators: &[],
        }
    }

    pub fn of(p: &'a Presentation) -> Self {
        Scope {
            k: Some(p.field().k),
            generators: p.generators(),
        }
    }

    fn ngens(&self) -> usize {
        self.generators.len()
    }
}

/// `tN` (1-based) as a 0-based index; bare `t` is index 0.
fn transcendental_index(name: &str) -> Option<usize> {
    if name == "t" {
        return Some(0);
    }
    let rest = name.strip_prefix('t')?;
    if rest.is_empty() || rest.starts_with('0') || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse::<usize>().ok().map(|n| n - 1)
}

struct Parser<'s> {
    toks: Vec<Spanned>,
    pos: usize,
    scope: Scope<'s>,
}

impl<'s> Parser<'s> {
    fn new(text: &str, scope: Scope<'s>) -> PResult<Self> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            scope,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error_here<T>(&self, message: impl Into<String>) -> PResult<T> {
        let s = &self.toks[self.pos];
        Err(ParseError {
            line: s.line,
            column: s.column,
            message: message.into(),
        })
    }

    fn error_at<T>(&self, pos: usize, message: impl Into<String>) -> PResult<T> {
        let s = &self.toks[pos];
        Err(ParseError {
            line: s.line,
            column: s.column,
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.error_here(format!("expected `{c}`, found {}", self.peek()))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            other => self.error_here(format!("expected `{kw}`, found {other}")),
        }
    }

    fn expect_ident(&mut self, what: &str) -> PResult<String> {
        match self.bump() {
            Tok::Ident(s) => Ok(s),
            other => {
                self.pos = self.pos.saturating_sub(usize::from(other != Tok::End));
                self.error_here(format!("expected {what}, found {other}"))
            }
        }
    }

    fn expect_end(&self) -> PResult<()> {
        match self.peek() {
            Tok::End => Ok(()),
            other => self.error_here(format!("unexpected {other}")),
        }
    }

    fn expr(&mut self) -> PResult<NCPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat_sym('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_sym('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<NCPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_sym('*') {
                acc = &acc * &self.unary()?;
            } else if *self.peek() == Tok::Sym('/') {
                let at = self.pos + 1;
                self.pos += 1;
                let d = self.unary()?;
                let c = match constant_of(&d) {
                    Some(c) => c,
                    None => return self.error_at(at, "can only divide by a scalar"),
                };
                if c.is_zero() {
                    return self.error_at(at, "division by zero");
                }
                acc = acc.scale(&c.inv().expect("nonzero"));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> PResult<NCPoly> {
        if self.eat_sym('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat_sym('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> PResult<NCPoly> {
        let base = self.atom()?;
        if !self.eat_sym('^') {
            return Ok(base);
        }
        let e = match self.bump() {
            Tok::Int(n) => n,
            _ => {
                self.pos -= 1;
                return self.error_here("expected a nonnegative integer exponent");
            }
        };
        let e: u32 = match u32::try_from(&e) {
            Ok(e) if e <= 4096 => e,
            _ => return self.error_at(self.pos - 1, "exponent too large"),
        };
        let mut acc = NCPoly::one(base.ngens());
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> PResult<NCPoly> {
        let m = self.scope.ngens();
        let at = self.pos;
        match self.bump() {
            Tok::Int(n) => Ok(NCPoly::constant(m, Scalar::from_bigint(n))),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if let Some(i) = self.scope.generators.iter().position(|g| *g == name) {
                    return Ok(NCPoly::gen(m, i));
                }
                match transcendental_index(&name) {
                    Some(i) => match self.scope.k {
                        Some(k) if name == "t" && k != 1 => {
                            self.error_at(at, format!("`t` is ambiguous over {}", field_text(k)))
                        }
                        Some(k) if i >= k => self.error_at(
                            at,
                            format!("`{name}` is outside the field {}", field_text(k)),
                        ),
                        _ => Ok(NCPoly::constant(m, Scalar::var(i))),
                    },
                    None if m == 0 => self.error_at(at, format!("unknown name `{name}`")),
                    None => self.error_at(at, format!("undeclared generator `{name}`")),
                }
            }
            Tok::End => self.error_at(at, "unexpected end of input"),
            other => self.error_at(at, format!("unexpected {other}")),
        }
    }

    fn fieldspec(&mut self) -> PResult<FieldSpec> {
        self.expect_keyword("Q")?;
        if !self.eat_sym('(') {
            return Ok(FieldSpec::rationals());
        }
        let mut k = 0;
        loop {
            let at = self.pos;
            let name = self.expect_ident("a transcendental `t1`")?;
            let ok =
                (name == "t" && k == 0) || transcendental_index(&name) == Some(k) && name != "t";
            if !ok {
                return self.error_at(at, format!("expected `t{}`, found `{name}`", k + 1));
            }
            k += 1;
            if name == "t" {
                self.expect_sym(')')?;
                return Ok(FieldSpec::new(1));
            }
            if self.eat_sym(')') {
                return Ok(FieldSpec::new(k));
            }
            self.expect_sym(',')?;
        }
    }
}

fn constant_of(p: &NCPoly) -> Option<Scalar> {
    match p.terms() {
        [] => Some(Scalar::zero()),
        [(w, c)] if w.is_empty() => Some(c.clone()),
        _ => None,
    }
}

/// `Q` or `Q(t1,...,tk)`.
pub fn field_text(k: usize) -> String {
    if k == 0 {
        return "Q".to_string();
    }
    let names: Vec<String> = (1..=k).map(|i| format!("t{i}")).collect();
    format!("Q({})", names.join(","))
}

pub fn parse_scalar(text: &str, scope: Scope<'_>) -> PResult<Scalar> {
    let scope = Scope {
        generators: &[],
        ..scope
    };
    let mut p = Parser::new(text, scope)?;
    let e = p.expr()?;
    p.expect_end()?;
    Ok(constant_of(&e).expect("no generators in scope"))
}

pub fn parse_poly(text: &str, scope: Scope<'_>) -> PResult<NCPoly> {
    let mut p = Parser::new(text, scope)?;
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

/// Polynomials separated by `;`.
pub fn parse_poly_list(text: &str, scope: Scope<'_>) -> PResult<Vec<NCPoly>> {
    let mut p = Parser::new(text, scope)?;
    let mut out = vec![p.expr()?];
    while p.eat_sym(';') {
        if *p.peek() == Tok::End {
            break;
        }
        out.push(p.expr()?);
    }
    p.expect_end()?;
    Ok(out)
}

/// One automorphism clause `tI -> a*tJ + b`, as a 0-based source index and
/// its image.
type Clause = (usize, AffineImage);

fn clauses(p: &mut Parser<'_>) -> PResult<Vec<Clause>> {
    let mut out: Vec<Clause> = Vec::new();
    loop {
        let at = p.pos;
        let name = p.expect_ident("a transcendental")?;
        let Some(i) = transcendental_index(&name) else {
            return p.error_at(at, format!("`{name}` is not a transcendental"));
        };
        if let Some(k) = p.scope.k {
            if i >= k || (name == "t" && k != 1) {
                return p.error_at(
                    at,
                    format!("`{name}` is outside the field {}", field_text(k)),
                );
            }
        }
        if out.iter().any(|(j, _)| *j == i) {
            return p.error_at(at, format!("`{name}` is mapped twice"));
        }
        if *p.peek() != Tok::Arrow {
            return p.error_here(format!("expected `->`, found {}", p.peek()));
        }
        p.pos += 1;
        let rhs_at = p.pos;
        let rhs = p.expr()?;
        let image = constant_of(&rhs).expect("scalar scope");
        match affine_image(&image) {
            Some(img) => out.push((i, img)),
            None => {
                return p.error_at(
                    rhs_at,
                    format!("`{image}` is not of the form a*tj + b with rational a != 0"),
                )
            }
        }
        if !p.eat_sym(',') {
            return Ok(out);
        }
    }
}

/// Reads `s` as `a*t_j + b` with rational `a != 0` and `b`.
fn affine_image(s: &Scalar) -> Option<AffineImage> {
    let vars: Vec<usize> = s.variables_in_order().collect();
    let j = *vars.first()?;
    if vars.iter().any(|&v| v != j) {
        return None;
    }
    let shift = FieldAutomorphism::affine(j + 1, j, Scalar::one(), Scalar::one()).ok()?;
    let a = &shift.apply(s).ok()? - s;
    if !a.is_rational() || a.is_zero() {
        return None;
    }
    let b = s - &(&a * &Scalar::var(j));
    AffineImage::new(a, j, b).ok()
}

fn build_automorphism(
    k: usize,
    clauses: Vec<Clause>,
) -> std::result::Result<FieldAutomorphism, String> {
    let mut images: Vec<AffineImage> = (0..k).map(AffineImage::identity).collect();
    for (i, img) in clauses {
        if img.target() >= k {
            return Err(format!(
                "t{} is outside the field {}",
                img.target() + 1,
                field_text(k)
            ));
        }
        images[i] = img;
    }
    FieldAutomorphism::from_images(images).map_err(|e| e.to_string())
}

/// Parses `t1 -> t1 + 1, t2 -> t1`; unlisted generators are fixed.
pub fn parse_automorphism(text: &str, field: FieldSpec) -> PResult<FieldAutomorphism> {
    let mut p = Parser::new(text, Scope::field(field.k))?;
    let cl = clauses(&mut p)?;
    p.expect_end()?;
    build_automorphism(field.k, cl).map_err(|message| ParseError {
        line: 1,
        column: 1,
        message,
    })
}

/// Automorphism clauses read without a fixed field; the caller decides the
/// field width afterwards with [`UnboundAutomorphism::bind`].
#[derive(Clone, Debug)]
pub struct UnboundAutomorphism(Vec<Clause>);

impl UnboundAutomorphism {
    /// Smallest field the clauses make sense over.
    pub fn width(&self) -> usize {
        self.0
            .iter()
            .map(|(i, img)| (i + 1).max(img.target() + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn bind(&self, k: usize) -> std::result::Result<FieldAutomorphism, String> {
        build_automorphism(k, self.0.clone())
    }
}

/// Automorphisms separated by `;`, over any number of transcendentals.
pub fn parse_automorphism_list(text: &str) -> PResult<Vec<UnboundAutomorphism>> {
    let mut p = Parser::new(text, Scope::open())?;
    let mut out = Vec::new();
    loop {
        out.push(UnboundAutomorphism(clauses(&mut p)?));
        if !p.eat_sym(';') || *p.peek() == Tok::End {
            break;
        }
    }
    p.expect_end()?;
    Ok(out)
}

const KEYWORDS: [&str; 5] = ["algebra", "over", "generators", "relations", "Q"];

pub fn parse_presentation(text: &str) -> PResult<Presentation> {
    let mut p = Parser::new(text, Scope::open())?;
    p.expect_keyword("algebra")?;
    let name = p.expect_ident("an algebra name")?;
    p.expect_keyword("over")?;
    let field = p.fieldspec()?;
    p.expect_keyword("generators")?;
    let mut generators: Vec<String> = Vec::new();
    loop {
        let at = p.pos;
        match p.peek().clone() {
            Tok::Ident(s) if s == "relations" => break,
            Tok::Ident(s) => {
                if KEYWORDS.contains(&s.as_str()) || transcendental_index(&s).is_some() {
                    return p.error_here(format!("`{s}` cannot name a generator"));
                }
                if generators.contains(&s) {
                    return p.error_at(at, format!("generator `{s}` declared twice"));
                }
                generators.push(s);
                p.pos += 1;
            }
            other => return p.error_here(format!("expected a generator name, found {other}")),
        }
    }
    p.expect_keyword("relations")?;
    p.expect_sym('{')?;
    let mut relations = Vec::new();
    let gens = generators.clone();
    let mut q = Parser {
        toks: std::mem::take(&mut p.toks),
        pos: p.pos,
        scope: Scope {
            k: Some(field.k),
            generators: &gens,
        },
    };
    while !q.eat_sym('}') {
        let at = q.pos;
        let lhs = q.expr()?;
        q.expect_sym('=')?;
        let rhs = q.expr()?;
        q.expect_sym(';')?;
        let r = &lhs - &rhs;
        if r.is_zero() {
            return q.error_at(at, "relation is identically zero");
        }
        relations.push(r);
    }
    q.expect_end()?;
    Presentation::new(name, field, generators, relations).map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

/// Canonical text; parsing it gives back an equal presentation.
pub fn print_presentation(p: &Presentation) -> String {
    let mut out = format!(
        "algebra {} over {}\ngenerators",
        p.name(),
        field_text(p.field().k)
    );
    for g in p.generators() {
        out.push(' ');
        out.push_str(g);
    }
    out.push_str("\nrelations {\n");
    for r in p.relations() {
        out.push_str("  ");
        out.push_str(&poly_text(r, p.generators()));
        out.push_str(" = 0;\n");
    }
    out.push_str("}\n");
    out
}

pub fn poly_text<N: AsRef<str>>(f: &NCPoly, names: &[N]) -> String {
    let mut s = String::new();
    f.write_with(&mut s, names).expect("writing to a string");
    s
}

pub fn word_text<N: AsRef<str>>(w: &Word, names: &[N]) -> String {
    let mut s = String::new();
    w.write_with(&mut s, names).expect("writing to a string");
    s
}
