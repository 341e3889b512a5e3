//! Level-indexed bushes.
//!
//! A bush at level `l >= 1` is either empty or a head at level `l - 1`
//! followed by a tail at level `l + 1`; level 0 holds a single atom. Levels are
//! stored on every node so the discipline can be checked at runtime.

use std::fmt;

use thiserror::Error;

use crate::values::{Atom, Val};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BushN {
    Base(Atom),
    Nil(usize),
    Cons(usize, Box<BushN>, Box<BushN>),
}

impl BushN {
    pub fn level(&self) -> usize {
        match self {
            BushN::Base(_) => 0,
            BushN::Nil(level) | BushN::Cons(level, _, _) => *level,
        }
    }

    /// Atoms in head-before-tail order.
    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(b) = stack.pop() {
            match b {
                BushN::Base(a) => out.push(a),
                BushN::Nil(_) => {}
                BushN::Cons(_, head, tail) => {
                    stack.push(tail);
                    stack.push(head);
                }
            }
        }
        out
    }
}

impl fmt::Display for BushN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BushN::Base(a) => write!(f, "Base({a})"),
            BushN::Nil(level) => write!(f, "NilBN({level})"),
            BushN::Cons(level, head, tail) => write!(f, "ConsBN({level}, {head}, {tail})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BushNError {
    #[error("level must be at least 1")]
    ZeroLevel,
    #[error("expected a sequence at level {0}")]
    ExpectedSeq(usize),
    #[error("expected an atom at level 0")]
    ExpectedAtom,
    #[error("level discipline violated")]
    LevelViolation,
    #[error("a level-0 atom is not a bush")]
    BareAtom,
}

/// Encode a sequence value as a bush at `level`.
pub fn to_bushn(v: &Val, level: usize) -> Result<BushN, BushNError> {
    if level == 0 {
        return Err(BushNError::ZeroLevel);
    }
    let Val::Seq(items) = v else { return Err(BushNError::ExpectedSeq(level)) };
    encode_spine(items, level)
}

fn encode_spine(items: &[Val], level: usize) -> Result<BushN, BushNError> {
    let Some((head, tail)) = items.split_first() else { return Ok(BushN::Nil(level)) };
    let head = match level - 1 {
        0 => BushN::Base(head.as_atom().ok_or(BushNError::ExpectedAtom)?.clone()),
        m => to_bushn(head, m)?,
    };
    let tail = encode_spine(tail, level + 1)?;
    Ok(BushN::Cons(level, Box::new(head), Box::new(tail)))
}

/// Inverse of [`to_bushn`] at the level of `b`.
pub fn from_bushn(b: &BushN) -> Result<Val, BushNError> {
    if !wf_bushn(b) {
        return Err(BushNError::LevelViolation);
    }
    if let BushN::Base(_) = b {
        return Err(BushNError::BareAtom);
    }
    Ok(decode(b))
}

fn decode(b: &BushN) -> Val {
    match b {
        BushN::Base(a) => Val::Atom(a.clone()),
        _ => {
            let mut items = Vec::new();
            let mut node = b;
            while let BushN::Cons(_, head, tail) = node {
                items.push(decode(head));
                node = tail;
            }
            Val::Seq(items)
        }
    }
}

pub fn wf_bushn(b: &BushN) -> bool {
    match b {
        BushN::Base(_) => true,
        BushN::Nil(level) => *level >= 1,
        BushN::Cons(level, head, tail) => {
            *level >= 1 && head.level() == level - 1 && tail.level() == level + 1 && wf_bushn(head) && wf_bushn(tail)
        }
    }
}
