//! Type-transformer codes and the type expressions built from them.
//!
//! A [`Code`] names a transformer `F`; [`TypeExpr`] tracks iterated
//! applications `F(F(..(A)))` over a base atom sort. The textual grammar is
//!
//! ```text
//! code := "tup:" nat | "null" | "lndt(" code ")" | "bush" | alias
//! ```
//!
//! where `alias` is one of the names in [`resolve_alias`].

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The sort of a base element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AtomSort {
    Int,
    Str,
}

impl fmt::Display for AtomSort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomSort::Int => f.write_str("int"),
            AtomSort::Str => f.write_str("str"),
        }
    }
}

/// A type transformer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Code {
    /// Non-empty tuple of `n + 1` slots.
    Tup(usize),
    /// The transformer producing only empty types.
    Null,
    /// The linked nested datatype over an inner transformer.
    Lndt(Box<Code>),
    /// The self-nested transformer `X = Lndt(X)`.
    Bush,
}

impl Code {
    pub fn lndt(inner: Code) -> Code {
        Code::Lndt(Box::new(inner))
    }

    /// Nesting depth of the code tree (`tup:n`, `null`, `bush` have depth 1).
    pub fn depth(&self) -> usize {
        match self {
            Code::Lndt(inner) => 1 + inner.depth(),
            _ => 1,
        }
    }

    /// Apply this code to a type expression once.
    pub fn apply(&self, t: TypeExpr) -> TypeExpr {
        TypeExpr::App(self.clone(), Box::new(t))
    }

    /// `self` applied to the base sort.
    pub fn over(&self, sort: AtomSort) -> TypeExpr {
        self.apply(TypeExpr::Base(sort))
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Code::Tup(n) => write!(f, "tup:{n}"),
            Code::Null => f.write_str("null"),
            Code::Lndt(inner) => write!(f, "lndt({inner})"),
            Code::Bush => f.write_str("bush"),
        }
    }
}

impl std::str::FromStr for Code {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_code(s)
    }
}

/// A base sort or a code applied to a type expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TypeExpr {
    Base(AtomSort),
    App(Code, Box<TypeExpr>),
}

impl TypeExpr {
    /// The base sort at the bottom of the application chain.
    pub fn base_sort(&self) -> AtomSort {
        match self {
            TypeExpr::Base(s) => *s,
            TypeExpr::App(_, inner) => inner.base_sort(),
        }
    }
}

impl fmt::Display for TypeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeExpr::Base(s) => write!(f, "{s}"),
            TypeExpr::App(c, inner) => write!(f, "{c} {{{inner}}}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown alias `{0}`")]
    UnknownAlias(String),
}

/// `app_iter(c, i, t)`: `c` applied `i` times on top of `t`.
pub fn app_iter(c: &Code, i: usize, t: TypeExpr) -> TypeExpr {
    (0..i).fold(t, |acc, _| c.apply(acc))
}

/// Canonical text of a code; aliases are never emitted.
pub fn print_code(c: &Code) -> String {
    c.to_string()
}

/// Named aliases for the standard instances.
///
/// `nperfect:<n>` takes the branching factor `n >= 1`, so it resolves to
/// `lndt(tup:<n-1>)`.
pub fn resolve_alias(name: &str) -> Result<Code, CodeError> {
    let code = match name {
        "list" => Code::lndt(Code::Tup(0)),
        "nest" => Code::lndt(Code::Tup(1)),
        "maybe" => Code::lndt(Code::Null),
        "bush" => Code::Bush,
        "sqlist" => Code::lndt(Code::lndt(Code::Tup(0))),
        _ => {
            let branching = name
                .strip_prefix("nperfect:")
                .filter(|digits| !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|digits| digits.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| CodeError::UnknownAlias(name.to_string()))?;
            Code::lndt(Code::Tup(branching - 1))
        }
    };
    Ok(code)
}

/// Parse a code expression, resolving aliases wherever a code may appear.
pub fn parse_code(text: &str) -> Result<Code, CodeError> {
    let mut parser = CodeParser { src: text, pos: 0 };
    let code = parser.code()?;
    if parser.pos != text.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(code)
}

struct CodeParser<'a> {
    src: &'a str,
    pos: usize,
}

impl CodeParser<'_> {
    fn error(&self, message: &str) -> CodeError {
        CodeError::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn code(&mut self) -> Result<Code, CodeError> {
        let start = self.pos;
        let word_len = self
            .rest()
            .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == ':' || ch == '_'))
            .unwrap_or(self.rest().len());
        if word_len == 0 {
            return Err(self.error("expected a code"));
        }
        let word = &self.src[start..start + word_len];
        self.pos += word_len;

        if word == "lndt" {
            if !self.rest().starts_with('(') {
                return Err(self.error("expected `(` after `lndt`"));
            }
            self.pos += 1;
            let inner = self.code()?;
            if !self.rest().starts_with(')') {
                return Err(self.error("expected `)`"));
            }
            self.pos += 1;
            return Ok(Code::lndt(inner));
        }
        if word == "null" {
            return Ok(Code::Null);
        }
        if let Some(digits) = word.strip_prefix("tup:") {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(CodeError::Syntax {
                    offset: start + 4,
                    message: "expected a natural number after `tup:`".to_string(),
                });
            }
            return digits
                .parse()
                .map(Code::Tup)
                .map_err(|_| CodeError::Syntax { offset: start + 4, message: "tuple index out of range".to_string() });
        }
        resolve_alias(word)
    }
}
