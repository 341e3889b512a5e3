//! The named instances and smart constructors for their canonical shapes.

use thiserror::Error;

use crate::codes::{resolve_alias, Code};
use crate::values::{Atom, Val};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceEntry {
    pub name: &'static str,
    pub code: Code,
    pub doc: &'static str,
}

/// Instance table, in the order used by the CLI help and the README.
pub fn instance_table() -> Vec<InstanceEntry> {
    const ENTRIES: [(&str, &str); 6] = [
        ("list", "lndt(tup:0): element i wrapped in i one-slot tuples"),
        ("nest", "lndt(tup:1): element i is a perfect binary tree of depth i"),
        ("maybe", "lndt(null): empty, or exactly one element"),
        ("bush", "bush = lndt(bush): element i is a bush nested i times"),
        ("sqlist", "lndt(lndt(tup:0)): element i is a list nested i times"),
        ("nperfect:3", "nperfect:<n> = lndt(tup:<n-1>), n-ary perfect trees (n >= 1)"),
    ];
    ENTRIES
        .iter()
        .map(|&(name, doc)| InstanceEntry {
            name,
            code: resolve_alias(name).expect("instance table names are aliases"),
            doc,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("atoms mix sorts")]
    MixedSorts,
    #[error("expected {expected} atoms, got {got}")]
    WrongAtomCount { expected: usize, got: usize },
    #[error("branching factor must be at least 1")]
    ZeroBranching,
}

fn same_sort(atoms: &[Atom]) -> Result<(), InstanceError> {
    match atoms.split_first() {
        Some((first, rest)) if rest.iter().any(|a| a.sort() != first.sort()) => Err(InstanceError::MixedSorts),
        _ => Ok(()),
    }
}

/// Group `layer` bottom-up into `depth` levels of `arity`-slot tuples.
fn perfect_layer(atoms: &[Atom], arity: usize, depth: u32) -> Val {
    let mut nodes: Vec<Val> = atoms.iter().cloned().map(Val::Atom).collect();
    for _ in 0..depth {
        let mut grouped = Vec::with_capacity(nodes.len() / arity);
        let mut it = nodes.into_iter().peekable();
        while it.peek().is_some() {
            grouped.push(Val::Tup(it.by_ref().take(arity).collect()));
        }
        nodes = grouped;
    }
    debug_assert_eq!(nodes.len(), 1);
    nodes.pop().expect("layer holds exactly one tree")
}

/// Σ_{i<depth} n^i, or `None` on overflow.
pub fn perfect_count(n: usize, depth: u32) -> Option<usize> {
    (0..depth).try_fold(0usize, |acc, i| acc.checked_add(n.checked_pow(i)?))
}

/// Full `n`-ary perfect tree with `depth` layers; layer `i` holds `n^i` atoms.
pub fn nperfect_full(n: usize, depth: u32, atoms: &[Atom]) -> Result<Val, InstanceError> {
    if n == 0 {
        return Err(InstanceError::ZeroBranching);
    }
    same_sort(atoms)?;
    let expected = perfect_count(n, depth).unwrap_or(usize::MAX);
    if atoms.len() != expected {
        return Err(InstanceError::WrongAtomCount { expected, got: atoms.len() });
    }
    let mut rest = atoms;
    let mut items = Vec::with_capacity(depth as usize);
    for i in 0..depth {
        let (layer, tail) = rest.split_at(n.pow(i));
        items.push(perfect_layer(layer, n, i));
        rest = tail;
    }
    Ok(Val::Seq(items))
}

pub fn nest_full(layers: u32, atoms: &[Atom]) -> Result<Val, InstanceError> {
    nperfect_full(2, layers, atoms)
}

pub fn list_of(atoms: &[Atom]) -> Result<Val, InstanceError> {
    same_sort(atoms)?;
    let items = atoms
        .iter()
        .enumerate()
        .map(|(i, a)| (0..i).fold(Val::Atom(a.clone()), |acc, _| Val::Tup(vec![acc])))
        .collect();
    Ok(Val::Seq(items))
}

/// `nothing` is `[]`, `just x` is `[x]`.
pub fn maybe_of(x: Option<Atom>) -> Val {
    Val::Seq(x.map(Val::Atom).into_iter().collect())
}
