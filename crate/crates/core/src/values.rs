//! Universal values, the well-formedness judgment, and the canonical text format.
//!
//! ```text
//! val := int | '"' chars '"' | '(' val (',' val)* ')' | '[' (val (';' val)*)? ']'
//! ```
//!
//! Printing is canonical: no whitespace, strings escape only `"` and `\`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{AtomSort, Code, TypeExpr};

/// A base element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Int(i64),
    Str(String),
}

impl Atom {
    pub fn sort(&self) -> AtomSort {
        match self {
            Atom::Int(_) => AtomSort::Int,
            Atom::Str(_) => AtomSort::Str,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Atom::Int(n) => Some(*n),
            Atom::Str(_) => None,
        }
    }
}

impl From<i64> for Atom {
    fn from(n: i64) -> Self {
        Atom::Int(n)
    }
}

impl From<&str> for Atom {
    fn from(s: &str) -> Self {
        Atom::Str(s.to_string())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Int(n) => write!(f, "{n}"),
            Atom::Str(s) => {
                f.write_str("\"")?;
                for ch in s.chars() {
                    if ch == '"' || ch == '\\' {
                        f.write_str("\\")?;
                    }
                    write!(f, "{ch}")?;
                }
                f.write_str("\"")
            }
        }
    }
}

/// A raw value tree. Arity and sort discipline is checked by [`wf`], not by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Val {
    Atom(Atom),
    Tup(Vec<Val>),
    Seq(Vec<Val>),
}

impl Val {
    pub fn int(n: i64) -> Val {
        Val::Atom(Atom::Int(n))
    }

    pub fn str(s: &str) -> Val {
        Val::Atom(Atom::Str(s.to_string()))
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match self {
            Val::Atom(a) => Some(a),
            _ => None,
        }
    }

    /// Atoms in depth-first, left-to-right order, by plain tree walk.
    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(v) = stack.pop() {
            match v {
                Val::Atom(a) => out.push(a),
                Val::Tup(cs) | Val::Seq(cs) => stack.extend(cs.iter().rev()),
            }
        }
        out
    }

    /// Sort of the first atom, if any.
    pub fn first_sort(&self) -> Option<AtomSort> {
        match self {
            Val::Atom(a) => Some(a.sort()),
            Val::Tup(cs) | Val::Seq(cs) => cs.iter().find_map(Val::first_sort),
        }
    }

    /// Immediate children, in order.
    pub fn children(&self) -> &[Val] {
        match self {
            Val::Atom(_) => &[],
            Val::Tup(cs) | Val::Seq(cs) => cs,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(f: &mut fmt::Formatter<'_>, items: &[Val], sep: &str) -> fmt::Result {
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{item}")?;
            }
            Ok(())
        }
        match self {
            Val::Atom(a) => write!(f, "{a}"),
            Val::Tup(cs) => {
                f.write_str("(")?;
                join(f, cs, ",")?;
                f.write_str(")")
            }
            Val::Seq(ws) => {
                f.write_str("[")?;
                join(f, ws, ";")?;
                f.write_str("]")
            }
        }
    }
}

impl std::str::FromStr for Val {
    type Err = ValError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_val(s)
    }
}

/// One step of a [`Path`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    /// Into tuple slot `i`.
    Tup(usize),
    /// Into sequence position `i` (`i` times `there`, then `here`).
    Seq(usize),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Tup(i) => write!(f, "tup:{i}"),
            Step::Seq(i) => write!(f, "seq:{i}"),
        }
    }
}

/// Position of a node inside a value, read from the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<Step>);

impl Path {
    pub fn root() -> Path {
        Path(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn child(&self, step: Step) -> Path {
        let mut steps = self.0.clone();
        steps.push(step);
        Path(steps)
    }

    /// `step` followed by `self`.
    pub fn under(mut self, step: Step) -> Path {
        self.0.insert(0, step);
        self
    }
}

impl From<Vec<Step>> for Path {
    fn from(steps: Vec<Step>) -> Self {
        Path(steps)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, step) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{step}")?;
        }
        f.write_str("]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WfReason {
    ArityMismatch,
    NullInhabited,
    SortMismatch,
    ExpectedTuple,
    ExpectedSeq,
    ExpectedAtom,
}

impl fmt::Display for WfReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{reason} at {at}")]
pub struct WfFailure {
    pub at: Path,
    pub reason: WfReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WfReport {
    Ok,
    Fail(WfFailure),
}

impl WfReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, WfReport::Ok)
    }

    pub fn into_result(self) -> Result<(), WfFailure> {
        match self {
            WfReport::Ok => Ok(()),
            WfReport::Fail(failure) => Err(failure),
        }
    }
}

/// Does `v` inhabit `t`?
pub fn wf(t: &TypeExpr, v: &Val) -> WfReport {
    let mut path = Vec::new();
    match check(t, v, &mut path) {
        Ok(()) => WfReport::Ok,
        Err(reason) => WfReport::Fail(WfFailure { at: Path(path), reason }),
    }
}

// On failure `path` is left pointing at the offending node.
fn check(t: &TypeExpr, v: &Val, path: &mut Vec<Step>) -> Result<(), WfReason> {
    let (code, inner) = match t {
        TypeExpr::Base(sort) => {
            return match v {
                Val::Atom(a) if a.sort() == *sort => Ok(()),
                Val::Atom(_) => Err(WfReason::SortMismatch),
                _ => Err(WfReason::ExpectedAtom),
            };
        }
        TypeExpr::App(code, inner) => (code, inner.as_ref()),
    };
    match code {
        Code::Null => Err(WfReason::NullInhabited),
        Code::Tup(n) => {
            let Val::Tup(cs) = v else { return Err(WfReason::ExpectedTuple) };
            if cs.len() != n + 1 {
                return Err(WfReason::ArityMismatch);
            }
            for (i, c) in cs.iter().enumerate() {
                path.push(Step::Tup(i));
                check(inner, c, path)?;
                path.pop();
            }
            Ok(())
        }
        Code::Lndt(g) => check_spine(g, inner, v, path),
        // bush = lndt(bush)
        Code::Bush => check_spine(&Code::Bush, inner, v, path),
    }
}

fn check_spine(g: &Code, t: &TypeExpr, v: &Val, path: &mut Vec<Step>) -> Result<(), WfReason> {
    let Val::Seq(ws) = v else { return Err(WfReason::ExpectedSeq) };
    let mut elem_type = t.clone();
    for (i, w) in ws.iter().enumerate() {
        if i > 0 {
            elem_type = g.apply(elem_type);
        }
        path.push(Step::Seq(i));
        check(&elem_type, w, path)?;
        path.pop();
    }
    Ok(())
}

pub fn print_val(v: &Val) -> String {
    v.to_string()
}

/// Node count: every atom, tuple and sequence node counts one.
pub fn struct_size(v: &Val) -> usize {
    1 + v.children().iter().map(struct_size).sum::<usize>()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path step {step} out of bounds at depth {depth}")]
    OutOfBounds { depth: usize, step: Step },
    #[error("no atom at the end of the path")]
    NotAnAtom,
}

/// The atom reached by following `p` from the root of `v`.
pub fn atom_at<'v>(v: &'v Val, p: &Path) -> Result<&'v Atom, PathError> {
    let mut node = v;
    for (depth, step) in p.0.iter().enumerate() {
        let next = match (node, *step) {
            (Val::Tup(cs), Step::Tup(i)) => cs.get(i),
            (Val::Seq(ws), Step::Seq(i)) => ws.get(i),
            _ => None,
        };
        node = next.ok_or(PathError::OutOfBounds { depth, step: *step })?;
    }
    node.as_atom().ok_or(PathError::NotAnAtom)
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct ValError {
    pub offset: usize,
    pub message: String,
}

pub fn parse_val(text: &str) -> Result<Val, ValError> {
    let mut parser = ValParser { src: text.as_bytes(), text, pos: 0 };
    let v = parser.val()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(v)
}

struct ValParser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
}

impl ValParser<'_> {
    fn error(&self, message: &str) -> ValError {
        ValError { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), ValError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", byte as char)))
        }
    }

    fn val(&mut self) -> Result<Val, ValError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let mut cs = vec![self.val()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    cs.push(self.val()?);
                }
                self.expect(b')')?;
                Ok(Val::Tup(cs))
            }
            Some(b'[') => {
                self.pos += 1;
                let mut ws = Vec::new();
                if self.peek() != Some(b']') {
                    ws.push(self.val()?);
                    while self.peek() == Some(b';') {
                        self.pos += 1;
                        ws.push(self.val()?);
                    }
                }
                self.expect(b']')?;
                Ok(Val::Seq(ws))
            }
            Some(b'"') => self.string().map(|s| Val::Atom(Atom::Str(s))),
            Some(b'-' | b'0'..=b'9') => self.int().map(Val::int),
            Some(_) => Err(self.error("expected a value")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn int(&mut self) -> Result<i64, ValError> {
        let start = self.pos;
        if self.src[self.pos] == b'-' {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(self.error("expected digits"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| ValError { offset: start, message: "integer out of range".to_string() })
    }

    fn string(&mut self) -> Result<String, ValError> {
        // opening quote
        self.pos += 1;
        let mut out = String::new();
        let mut run = self.pos;
        loop {
            match self.src.get(self.pos) {
                None => return Err(self.error("unterminated string")),
                Some(b'"') => {
                    out.push_str(&self.text[run..self.pos]);
                    self.pos += 1;
                    return Ok(out);
                }
                Some(b'\\') => {
                    out.push_str(&self.text[run..self.pos]);
                    match self.src.get(self.pos + 1) {
                        Some(&b) if b == b'"' || b == b'\\' => out.push(b as char),
                        _ => {
                            self.pos += 1;
                            return Err(self.error("invalid escape"));
                        }
                    }
                    self.pos += 2;
                    run = self.pos;
                }
                Some(_) => self.pos += 1,
            }
        }
    }
}
