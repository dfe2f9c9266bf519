//! Text expression language for elements of the three algebras.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := signed ('*' signed)*
//! signed  := '-' signed | primary
//! primary := INT ['t' ['^' sint]]       integer, optionally times a power of t
//!          | 't' ['^' sint]             power of t (default exponent 1)
//!          | atom
//!          | '(' expr ')'
//! atom    := 'T' '(' sint ',' sint ')'      torus curve class (skein)
//!          | 'P' '(' uint ';' sint ',' sint ')'   parallel copies (skein)
//!          | 'JW' '(' uint ';' sint ',' sint ')'  threaded idempotent (skein)
//!          | 'e' '(' sint ',' sint ')'            noncommutative-torus basis
//!          | 'a' '(' uint ')' | 'A' '(' uint ')'  solid-torus alpha^n
//! sint    := ['-'] INT
//! ```
//!
//! An expression is parsed against a declared element kind (skein,
//! noncommutative torus, or solid torus); atoms of another kind are a
//! parse-time kind error with a 1-based column. Integer and `t^k`
//! literals are kind-neutral scalars: `1` as a skein expression is the
//! empty link, as a solid-torus expression it is `a(0)`, and so on.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::Error;
use crate::jones_wenzl;
use crate::laurent::LaurentPoly;
use crate::nc_torus::NcElement;
use crate::skein::SkeinElement;
use crate::solid_torus::SolidTorusElement;

/// Which algebra an expression denotes an element of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Skein,
    Nc,
    Solid,
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Skein => "skein",
            Kind::Nc => "nc",
            Kind::Solid => "solid",
        }
    }
}

/// A parsed expression. Evaluation happens separately so that callers
/// can inspect the tree (e.g. for the root-of-unity guard on JW atoms)
/// before committing to a value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    TPow(i64),
    Curve { p: i64, q: i64 },
    Parallel { d: u64, p: i64, q: i64 },
    NcBasis { p: i64, q: i64 },
    Jw { n: u64, p: i64, q: i64 },
    AlphaPow(u64),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

/// The result of evaluating an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Skein(SkeinElement),
    Nc(NcElement),
    Solid(SolidTorusElement),
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Skein(_) => Kind::Skein,
            Value::Nc(_) => Kind::Nc,
            Value::Solid(_) => Kind::Solid,
        }
    }
}

/// Parses `text` as an element of the given kind.
pub fn parse(text: &str, kind: Kind) -> Result<Expr, Error> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0, kind };
    let e = p.expr()?;
    let tok = p.peek();
    if tok.kind != Tok::Eof {
        return Err(p.unexpected("end of input"));
    }
    Ok(e)
}

/// Convenience wrapper: parse and evaluate in one step.
pub fn parse_value(text: &str, kind: Kind) -> Result<Value, Error> {
    parse(text, kind)?.eval(kind)
}

impl Expr {
    /// Evaluates the expression to a normal-form element of `kind`
    /// (which must be the kind it was parsed against).
    pub fn eval(&self, kind: Kind) -> Result<Value, Error> {
        match self.eval_node()? {
            EvalVal::Scalar(c) => Ok(promote(&c, kind)),
            EvalVal::Elem(v) => {
                debug_assert_eq!(v.kind(), kind, "expression was kind-checked at parse time");
                Ok(v)
            }
        }
    }

    /// The threading indices n of every `JW(n;p,q)` atom in the tree.
    pub fn jw_indices(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.collect_jw(&mut out);
        out
    }

    fn collect_jw(&self, out: &mut Vec<u64>) {
        match self {
            Expr::Jw { n, .. } => out.push(*n),
            Expr::Neg(a) => a.collect_jw(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect_jw(out);
                b.collect_jw(out);
            }
            _ => {}
        }
    }

    fn eval_node(&self) -> Result<EvalVal, Error> {
        Ok(match self {
            Expr::Int(n) => EvalVal::Scalar(LaurentPoly::term(n.clone(), 0)),
            Expr::TPow(k) => EvalVal::Scalar(LaurentPoly::t_pow(*k)),
            Expr::Curve { p, q } => EvalVal::Elem(Value::Skein(SkeinElement::curve(*p, *q))),
            Expr::Parallel { d, p, q } => {
                EvalVal::Elem(Value::Skein(SkeinElement::parallel_copies(*d, *p, *q)?))
            }
            Expr::NcBasis { p, q } => EvalVal::Elem(Value::Nc(NcElement::basis(*p, *q))),
            Expr::Jw { n, p, q } => {
                EvalVal::Elem(Value::Skein(jones_wenzl::expansion(*n, *p, *q)?))
            }
            Expr::AlphaPow(n) => {
                let n = usize::try_from(*n).expect("exponent fits in usize");
                EvalVal::Elem(Value::Solid(SolidTorusElement::alpha_pow(n)))
            }
            Expr::Neg(a) => match a.eval_node()? {
                EvalVal::Scalar(c) => EvalVal::Scalar(-&c),
                EvalVal::Elem(v) => EvalVal::Elem(negate(v)),
            },
            Expr::Add(a, b) => combine(a.eval_node()?, b.eval_node()?, false)?,
            Expr::Sub(a, b) => combine(a.eval_node()?, b.eval_node()?, true)?,
            Expr::Mul(a, b) => multiply(a.eval_node()?, b.eval_node()?)?,
        })
    }
}

enum EvalVal {
    Scalar(LaurentPoly),
    Elem(Value),
}

fn promote(c: &LaurentPoly, kind: Kind) -> Value {
    match kind {
        Kind::Skein => Value::Skein(SkeinElement::empty_with_coeff(c.clone())),
        Kind::Nc => Value::Nc(NcElement::one().scale(c)),
        Kind::Solid => Value::Solid(SolidTorusElement::constant(c.clone())),
    }
}

fn negate(v: Value) -> Value {
    match v {
        Value::Skein(e) => Value::Skein(-&e),
        Value::Nc(e) => Value::Nc(-&e),
        Value::Solid(e) => Value::Solid(-&e),
    }
}

fn combine(a: EvalVal, b: EvalVal, subtract: bool) -> Result<EvalVal, Error> {
    let (a, b) = match (a, b) {
        (EvalVal::Scalar(x), EvalVal::Scalar(y)) => {
            return Ok(EvalVal::Scalar(if subtract { &x - &y } else { &x + &y }));
        }
        (EvalVal::Scalar(x), EvalVal::Elem(v)) => (promote(&x, v.kind()), v),
        (EvalVal::Elem(v), EvalVal::Scalar(y)) => {
            let w = promote(&y, v.kind());
            (v, w)
        }
        (EvalVal::Elem(v), EvalVal::Elem(w)) => (v, w),
    };
    let out = match (a, b) {
        (Value::Skein(x), Value::Skein(y)) => Value::Skein(if subtract { &x - &y } else { &x + &y }),
        (Value::Nc(x), Value::Nc(y)) => Value::Nc(if subtract { &x - &y } else { &x + &y }),
        (Value::Solid(x), Value::Solid(y)) => {
            Value::Solid(if subtract { &x - &y } else { &x + &y })
        }
        _ => unreachable!("mixed kinds are rejected at parse time"),
    };
    Ok(EvalVal::Elem(out))
}

fn multiply(a: EvalVal, b: EvalVal) -> Result<EvalVal, Error> {
    Ok(match (a, b) {
        (EvalVal::Scalar(x), EvalVal::Scalar(y)) => EvalVal::Scalar(&x * &y),
        (EvalVal::Scalar(x), EvalVal::Elem(v)) | (EvalVal::Elem(v), EvalVal::Scalar(x)) => {
            EvalVal::Elem(match v {
                Value::Skein(e) => Value::Skein(e.scale(&x)),
                Value::Nc(e) => Value::Nc(e.scale(&x)),
                Value::Solid(e) => Value::Solid(e.scale(&x)),
            })
        }
        (EvalVal::Elem(v), EvalVal::Elem(w)) => EvalVal::Elem(match (v, w) {
            (Value::Skein(x), Value::Skein(y)) => Value::Skein(&x * &y),
            (Value::Nc(x), Value::Nc(y)) => Value::Nc(&x * &y),
            (Value::Solid(x), Value::Solid(y)) => Value::Solid(&x * &y),
            _ => unreachable!("mixed kinds are rejected at parse time"),
        }),
    })
}

// ---------------------------------------------------------------------------
// lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Semi,
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    kind: Tok,
    column: usize, // 1-based
}

fn lex(text: &str) -> Result<Vec<Token>, Error> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let kind = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = digits.parse::<BigInt>().expect("digit run parses");
                out.push(Token { kind: Tok::Int(n), column });
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                out.push(Token { kind: Tok::Ident(name), column });
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    column,
                    message: format!("unexpected character '{other}'"),
                });
            }
        };
        out.push(Token { kind, column });
        i += 1;
    }
    out.push(Token { kind: Tok::Eof, column: chars.len() + 1 });
    Ok(out)
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    kind: Kind,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        let tok = self.peek();
        let found = match &tok.kind {
            Tok::Int(n) => format!("'{n}'"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::Eof => "end of input".into(),
        };
        Error::Syntax { column: tok.column, message: format!("expected {wanted}, found {found}") }
    }

    fn expect(&mut self, kind: Tok, wanted: &str) -> Result<(), Error> {
        if self.peek().kind == kind {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn expr(&mut self) -> Result<Expr, Error> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().kind {
                Tok::Plus => {
                    self.next();
                    let rhs = self.term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Tok::Minus => {
                    self.next();
                    let rhs = self.term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, Error> {
        let mut lhs = self.signed()?;
        while self.peek().kind == Tok::Star {
            self.next();
            let rhs = self.signed()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn signed(&mut self) -> Result<Expr, Error> {
        if self.peek().kind == Tok::Minus {
            self.next();
            let inner = self.signed()?;
            Ok(Expr::Neg(Box::new(inner)))
        } else {
            self.primary()
        }
    }

    fn primary(&mut self) -> Result<Expr, Error> {
        let tok = self.peek().clone();
        match tok.kind {
            Tok::Int(n) => {
                self.next();
                // allow a juxtaposed power of t, as in "2t^-1"
                if matches!(&self.peek().kind, Tok::Ident(s) if s == "t") {
                    let tp = self.t_power()?;
                    Ok(Expr::Mul(Box::new(Expr::Int(n)), Box::new(tp)))
                } else {
                    Ok(Expr::Int(n))
                }
            }
            Tok::Ident(name) => match name.as_str() {
                "t" => self.t_power(),
                "T" => {
                    self.require_kind(Kind::Skein, tok.column)?;
                    self.next();
                    let (p, q) = self.index_pair()?;
                    Ok(Expr::Curve { p, q })
                }
                "P" => {
                    self.require_kind(Kind::Skein, tok.column)?;
                    self.next();
                    let (d, p, q) = self.counted_pair()?;
                    Ok(Expr::Parallel { d, p, q })
                }
                "JW" => {
                    self.require_kind(Kind::Skein, tok.column)?;
                    self.next();
                    let (n, p, q) = self.counted_pair()?;
                    Ok(Expr::Jw { n, p, q })
                }
                "e" => {
                    self.require_kind(Kind::Nc, tok.column)?;
                    self.next();
                    let (p, q) = self.index_pair()?;
                    Ok(Expr::NcBasis { p, q })
                }
                "a" | "A" => {
                    self.require_kind(Kind::Solid, tok.column)?;
                    self.next();
                    self.expect(Tok::LParen, "'('")?;
                    let n = self.unsigned_int()?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(Expr::AlphaPow(n))
                }
                _ => Err(Error::Syntax {
                    column: tok.column,
                    message: format!("unknown name '{name}'"),
                }),
            },
            Tok::LParen => {
                self.next();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a term")),
        }
    }

    fn require_kind(&self, atom_kind: Kind, column: usize) -> Result<(), Error> {
        if self.kind == atom_kind {
            Ok(())
        } else {
            Err(Error::KindMismatch { column })
        }
    }

    /// 't' with an optional '^' exponent.
    fn t_power(&mut self) -> Result<Expr, Error> {
        self.next(); // the 't'
        if self.peek().kind == Tok::Caret {
            self.next();
            let k = self.signed_int()?;
            Ok(Expr::TPow(k))
        } else {
            Ok(Expr::TPow(1))
        }
    }

    fn signed_int(&mut self) -> Result<i64, Error> {
        let negative = if self.peek().kind == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        let tok = self.peek().clone();
        match tok.kind {
            Tok::Int(n) => {
                self.next();
                let n = if negative { -n } else { n };
                n.to_i64().ok_or(Error::Syntax {
                    column: tok.column,
                    message: "integer out of range".to_string(),
                })
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    fn unsigned_int(&mut self) -> Result<u64, Error> {
        let tok = self.peek().clone();
        match tok.kind {
            Tok::Int(n) => {
                self.next();
                n.to_u64().ok_or(Error::Syntax {
                    column: tok.column,
                    message: "integer out of range".to_string(),
                })
            }
            _ => Err(self.unexpected("a nonnegative integer")),
        }
    }

    fn index_pair(&mut self) -> Result<(i64, i64), Error> {
        self.expect(Tok::LParen, "'('")?;
        let p = self.signed_int()?;
        self.expect(Tok::Comma, "','")?;
        let q = self.signed_int()?;
        self.expect(Tok::RParen, "')'")?;
        Ok((p, q))
    }

    fn counted_pair(&mut self) -> Result<(u64, i64, i64), Error> {
        self.expect(Tok::LParen, "'('")?;
        let n = self.unsigned_int()?;
        self.expect(Tok::Semi, "';'")?;
        let p = self.signed_int()?;
        self.expect(Tok::Comma, "','")?;
        let q = self.signed_int()?;
        self.expect(Tok::RParen, "')'")?;
        Ok((n, p, q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::curve_term;

    fn skein(text: &str) -> SkeinElement {
        match parse_value(text, Kind::Skein).unwrap() {
            Value::Skein(e) => e,
            _ => panic!("expected a skein value"),
        }
    }

    fn nc(text: &str) -> NcElement {
        match parse_value(text, Kind::Nc).unwrap() {
            Value::Nc(e) => e,
            _ => panic!("expected an nc value"),
        }
    }

    fn solid(text: &str) -> SolidTorusElement {
        match parse_value(text, Kind::Solid).unwrap() {
            Value::Solid(e) => e,
            _ => panic!("expected a solid value"),
        }
    }

    #[test]
    fn product_of_curves() {
        let got = skein("T(1,0) * T(0,1)");
        let expect = &curve_term(1, 1, 1, 1) + &curve_term(1, -1, 1, -1);
        assert_eq!(got, expect);
    }

    #[test]
    fn scalar_literals() {
        assert_eq!(skein("1"), SkeinElement::empty());
        assert_eq!(
            skein("-t^2 - t^-2"),
            SkeinElement::empty_with_coeff(LaurentPoly::loop_value())
        );
        assert_eq!(
            skein("2t^-1 + 3"),
            SkeinElement::empty_with_coeff(LaurentPoly::term(2, -1) + LaurentPoly::constant(3))
        );
        assert_eq!(solid("t"), SolidTorusElement::constant(LaurentPoly::t_pow(1)));
    }

    #[test]
    fn parallel_copies_atom() {
        let got = skein("P(2;1,0)");
        let expect = &SkeinElement::curve(2, 0)
            + &SkeinElement::empty_with_coeff(LaurentPoly::constant(2));
        assert_eq!(got, expect);
    }

    #[test]
    fn jones_wenzl_atom() {
        let got = skein("JW(2;1,1)");
        let expect = &SkeinElement::curve(2, 2) + &SkeinElement::empty();
        assert_eq!(got, expect);
        let e = parse("JW(3;1,0) + JW(5;0,1)", Kind::Skein).unwrap();
        assert_eq!(e.jw_indices(), vec![3, 5]);
    }

    #[test]
    fn nc_expressions() {
        let got = nc("(t^2-1)*e(1,1) + e(0,0)");
        let coeff = LaurentPoly::t_pow(2) - LaurentPoly::one();
        let expect = &NcElement::basis(1, 1).scale(&coeff) + &NcElement::one();
        assert_eq!(got, expect);
    }

    #[test]
    fn solid_expressions() {
        assert_eq!(solid("a(3)"), SolidTorusElement::alpha_pow(3));
        assert_eq!(solid("A(3)"), SolidTorusElement::alpha_pow(3));
        let got = solid("a(2) - 2");
        let expect = &SolidTorusElement::alpha_pow(2)
            - &SolidTorusElement::constant(LaurentPoly::constant(2));
        assert_eq!(got, expect);
    }

    #[test]
    fn precedence_and_grouping() {
        // '*' binds tighter than '+'
        let a = skein("T(1,0) + T(0,1) * T(1,0)");
        let b = &SkeinElement::curve(1, 0) + &(&SkeinElement::curve(0, 1) * &SkeinElement::curve(1, 0));
        assert_eq!(a, b);
        let c = skein("(T(1,0) + T(0,1)) * T(1,0)");
        let d = &(&SkeinElement::curve(1, 0) + &SkeinElement::curve(0, 1)) * &SkeinElement::curve(1, 0);
        assert_eq!(c, d);
        // unary minus
        assert_eq!(skein("-T(1,0)"), -&SkeinElement::curve(1, 0));
        assert_eq!(skein("-2*T(1,0)"), SkeinElement::curve(1, 0).scale(&LaurentPoly::constant(-2)));
    }

    #[test]
    fn kind_mismatch_positions() {
        match parse("T(1,0) + e(0,1)", Kind::Skein) {
            Err(Error::KindMismatch { column }) => assert_eq!(column, 10),
            other => panic!("expected KindMismatch, got {other:?}"),
        }
        match parse("a(1)", Kind::Nc) {
            Err(Error::KindMismatch { column }) => assert_eq!(column, 1),
            other => panic!("expected KindMismatch, got {other:?}"),
        }
        assert!(parse("e(1,0)", Kind::Nc).is_ok());
    }

    #[test]
    fn syntax_error_positions() {
        match parse("T(1,0", Kind::Skein) {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 6),
            other => panic!("expected Syntax, got {other:?}"),
        }
        match parse("T(1.5,0)", Kind::Skein) {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 4),
            other => panic!("expected Syntax, got {other:?}"),
        }
        match parse("", Kind::Skein) {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 1),
            other => panic!("expected Syntax, got {other:?}"),
        }
        match parse("T(1,0) T(0,1)", Kind::Skein) {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 8),
            other => panic!("expected Syntax, got {other:?}"),
        }
        match parse("Q(1,0)", Kind::Skein) {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 1),
            other => panic!("expected Syntax, got {other:?}"),
        }
        match parse("P(-1;1,0)", Kind::Skein) {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 3),
            other => panic!("expected Syntax, got {other:?}"),
        }
    }

    #[test]
    fn domain_errors_surface_at_eval() {
        // P with a non-primitive class parses fine but fails to evaluate
        let e = parse("P(2;2,4)", Kind::Skein).unwrap();
        assert_eq!(e.eval(Kind::Skein), Err(Error::NotPrimitive { p: 2, q: 4 }));
    }

    #[test]
    fn folded_zero_class() {
        // T(0,0) is the boundary of a disk twice over: 2 * empty
        assert_eq!(
            skein("T(0,0)"),
            SkeinElement::empty_with_coeff(LaurentPoly::constant(2))
        );
        assert_eq!(skein("T(-1,0)"), SkeinElement::curve(1, 0));
    }

    #[test]
    fn big_coefficients() {
        let big = "123456789012345678901234567890";
        let got = skein(&format!("{big}*T(1,0)"));
        let coeff = LaurentPoly::term(big.parse::<BigInt>().unwrap(), 0);
        assert_eq!(got, SkeinElement::curve(1, 0).scale(&coeff));
    }
}
