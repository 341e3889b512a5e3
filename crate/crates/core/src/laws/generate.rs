//! Seeded generation and exhaustive enumeration of well-formed values.
//!
//! Both are budget-driven: the budget bounds `struct_size`, so bushes with
//! arbitrarily many atomless layers cannot stall the search.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::rng::SplitMix64;
use crate::codes::{AtomSort, Code, TypeExpr};
use crate::values::{Atom, Val};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    /// Upper bound on `struct_size` of generated values.
    pub budget: usize,
    pub seed: u64,
    pub atom_domain: Vec<Atom>,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig { budget: 20, seed: 0, atom_domain: (0..10).map(Atom::Int).collect() }
    }
}

impl GenConfig {
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum GenError {
    #[error("budget must be at least 1")]
    ZeroBudget,
    #[error("atom domain is empty")]
    EmptyDomain,
    #[error("type {0} is uninhabited over the atom domain")]
    Uninhabited(String),
    #[error("smallest value of {ty} has size {needed}, budget is {budget}")]
    BudgetTooSmall { ty: String, needed: usize, budget: usize },
}

/// Distinct domain atoms of `sort`, in first-occurrence order.
fn atoms_of(domain: &[Atom], sort: AtomSort) -> Vec<Atom> {
    let mut out: Vec<Atom> = Vec::new();
    for a in domain.iter().filter(|a| a.sort() == sort) {
        if !out.contains(a) {
            out.push(a.clone());
        }
    }
    out
}

/// Size of the smallest inhabitant, `None` when uninhabited.
pub fn min_size(t: &TypeExpr, sorts: &[AtomSort]) -> Option<usize> {
    match t {
        TypeExpr::Base(s) => sorts.contains(s).then_some(1),
        TypeExpr::App(Code::Null, _) => None,
        TypeExpr::App(Code::Tup(n), inner) => min_size(inner, sorts)?.checked_mul(n + 1)?.checked_add(1),
        TypeExpr::App(Code::Lndt(_) | Code::Bush, _) => Some(1),
    }
}

/// The code iterated along the spine of `t`, if `t` is a spine type.
fn spine_code(t: &TypeExpr) -> Option<(&Code, &TypeExpr)> {
    match t {
        TypeExpr::App(Code::Lndt(g), inner) => Some((g, inner)),
        TypeExpr::App(c @ Code::Bush, inner) => Some((c, inner)),
        _ => None,
    }
}

fn domain_sorts(domain: &[Atom]) -> Vec<AtomSort> {
    let mut sorts: Vec<AtomSort> = domain.iter().map(Atom::sort).collect();
    sorts.sort();
    sorts.dedup();
    sorts
}

/// A deterministic well-formed inhabitant of `t` within `cfg.budget`.
pub fn gen_val(t: &TypeExpr, cfg: &GenConfig) -> Result<Val, GenError> {
    if cfg.budget == 0 {
        return Err(GenError::ZeroBudget);
    }
    if cfg.atom_domain.is_empty() {
        return Err(GenError::EmptyDomain);
    }
    let sorts = domain_sorts(&cfg.atom_domain);
    let needed = min_size(t, &sorts).ok_or_else(|| GenError::Uninhabited(t.to_string()))?;
    if needed > cfg.budget {
        return Err(GenError::BudgetTooSmall { ty: t.to_string(), needed, budget: cfg.budget });
    }
    let mut gen = Generator { rng: SplitMix64::new(cfg.seed), domain: &cfg.atom_domain, sorts };
    Ok(gen.val(t, cfg.budget).0)
}

struct Generator<'a> {
    rng: SplitMix64,
    domain: &'a [Atom],
    sorts: Vec<AtomSort>,
}

impl Generator<'_> {
    // Precondition: min_size(t) <= budget. Returns the value and its size.
    fn val(&mut self, t: &TypeExpr, budget: usize) -> (Val, usize) {
        if let Some((g, inner)) = spine_code(t) {
            return self.spine(g, inner, budget);
        }
        match t {
            TypeExpr::Base(s) => {
                let choices = atoms_of(self.domain, *s);
                (Val::Atom(choices[self.rng.below(choices.len())].clone()), 1)
            }
            TypeExpr::App(Code::Tup(n), inner) => {
                let child_min = min_size(inner, &self.sorts).expect("inhabited by precondition");
                let mut spare = budget - 1 - (n + 1) * child_min;
                let mut size = 1;
                let mut children = Vec::with_capacity(n + 1);
                for _ in 0..=*n {
                    let extra = self.rng.below(spare + 1);
                    let (c, used) = self.val(inner, child_min + extra);
                    spare -= used - child_min;
                    size += used;
                    children.push(c);
                }
                (Val::Tup(children), size)
            }
            _ => unreachable!("null is never generated"),
        }
    }

    fn spine(&mut self, g: &Code, base: &TypeExpr, budget: usize) -> (Val, usize) {
        let mut remaining = budget - 1;
        let mut items = Vec::new();
        let mut elem = base.clone();
        while let Some(needed) = min_size(&elem, &self.sorts) {
            // stop with probability 1/4 at every position
            if needed > remaining || self.rng.below(4) == 0 {
                break;
            }
            let sub = needed + self.rng.below(remaining - needed + 1);
            let (w, used) = self.val(&elem, sub);
            remaining -= used;
            items.push(w);
            elem = g.apply(elem);
        }
        (Val::Seq(items), budget - remaining)
    }
}

/// Every well-formed inhabitant of `t` with `struct_size <= max_size` and
/// atoms drawn from `domain`, ordered by size and then canonical text.
pub fn enum_vals(t: &TypeExpr, max_size: usize, domain: &[Atom]) -> Vec<Val> {
    let sorts = domain_sorts(domain);
    let mut sized = enumerate(t, max_size, domain, &sorts);
    sized.sort_by_cached_key(|(v, size)| (*size, v.to_string()));
    sized.into_iter().map(|(v, _)| v).collect()
}

fn enumerate(t: &TypeExpr, max: usize, domain: &[Atom], sorts: &[AtomSort]) -> Vec<(Val, usize)> {
    if max == 0 {
        return Vec::new();
    }
    if let Some((g, inner)) = spine_code(t) {
        return spines(g, inner.clone(), max - 1, domain, sorts)
            .into_iter()
            .map(|(items, size)| (Val::Seq(items), size + 1))
            .collect();
    }
    match t {
        TypeExpr::Base(s) => atoms_of(domain, *s).into_iter().map(|a| (Val::Atom(a), 1)).collect(),
        TypeExpr::App(Code::Null, _) => Vec::new(),
        TypeExpr::App(Code::Tup(n), inner) => {
            let Some(child_min) = min_size(inner, sorts) else { return Vec::new() };
            let Some(rest) = (max - 1).checked_sub(n * child_min) else { return Vec::new() };
            let children = enumerate(inner, rest, domain, sorts);
            let mut rows: Vec<(Vec<Val>, usize)> = vec![(Vec::new(), 0)];
            for slot in 0..=*n {
                // keep room for the slots still to fill
                let reserve = (n - slot) * child_min;
                let mut next = Vec::new();
                for (row, used) in &rows {
                    for (c, size) in &children {
                        if used + size + reserve < max {
                            let mut row = row.clone();
                            row.push(c.clone());
                            next.push((row, used + size));
                        }
                    }
                }
                rows = next;
            }
            rows.into_iter().map(|(cs, size)| (Val::Tup(cs), size + 1)).collect()
        }
        _ => unreachable!("spine types handled above"),
    }
}

/// All item lists for a spine whose current element type is `elem`.
fn spines(g: &Code, elem: TypeExpr, budget: usize, domain: &[Atom], sorts: &[AtomSort]) -> Vec<(Vec<Val>, usize)> {
    let mut out = vec![(Vec::new(), 0)];
    let Some(needed) = min_size(&elem, sorts).filter(|&m| m <= budget) else { return out };
    let heads = enumerate(&elem, budget, domain, sorts);
    let tails = spines(g, g.apply(elem), budget - needed, domain, sorts);
    for (head, head_size) in &heads {
        for (tail, tail_size) in &tails {
            if head_size + tail_size <= budget {
                let mut items = Vec::with_capacity(tail.len() + 1);
                items.push(head.clone());
                items.extend(tail.iter().cloned());
                out.push((items, head_size + tail_size));
            }
        }
    }
    out
}
