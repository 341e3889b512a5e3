//! Executable laws over generated values.
//!
//! Each case draws one value with [`gen_val`] and checks eight laws against it.
//! Cases are independent, so they are evaluated in parallel when the
//! `parallel` feature is enabled; per-case tallies merge associatively, and the
//! report does not depend on the execution strategy.

mod generate;
pub mod rng;

use std::fmt;

use serde::Serialize;

pub use generate::{enum_vals, gen_val, min_size, GenConfig, GenError};
use rng::SplitMix64;

use crate::codes::{print_code, AtomSort, Code};
use crate::spread::{all, any, eq, flatten, foldl, foldr, map, member, show, size};
use crate::values::{atom_at, parse_val, print_val, Atom, Val};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Congruence,
    Composition,
    MapIdentity,
    AnyAllDuality,
    FoldFlatten,
    EqOracle,
    MembershipMap,
    ShowRoundTrip,
}

impl Law {
    pub const ALL: [Law; 8] = [
        Law::Congruence,
        Law::Composition,
        Law::MapIdentity,
        Law::AnyAllDuality,
        Law::FoldFlatten,
        Law::EqOracle,
        Law::MembershipMap,
        Law::ShowRoundTrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Congruence => "congruence",
            Law::Composition => "composition",
            Law::MapIdentity => "map_identity",
            Law::AnyAllDuality => "any_all_duality",
            Law::FoldFlatten => "fold_flatten",
            Law::EqOracle => "eq_oracle",
            Law::MembershipMap => "membership_map",
            Law::ShowRoundTrip => "show_round_trip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The law's precondition does not hold for this input.
    Skipped,
    Fail(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawFailure {
    pub case: usize,
    /// Canonical text of the generated value.
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: Law,
    pub cases: usize,
    pub skipped: usize,
    pub failures: Vec<LawFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub code: String,
    pub laws: Vec<LawResult>,
}

impl LawReport {
    fn empty(c: &Code) -> LawReport {
        LawReport {
            code: print_code(c),
            laws: Law::ALL.iter().map(|&law| LawResult { law, cases: 0, skipped: 0, failures: Vec::new() }).collect(),
        }
    }

    pub fn total_failures(&self) -> usize {
        self.laws.iter().map(|l| l.failures.len()).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.total_failures() == 0
    }

    pub fn get(&self, law: Law) -> &LawResult {
        self.laws.iter().find(|l| l.law == law).expect("every law is reported")
    }

    fn record(&mut self, case: usize, input: &Val, outcomes: [Outcome; 8]) {
        for (result, outcome) in self.laws.iter_mut().zip(outcomes) {
            result.cases += 1;
            match outcome {
                Outcome::Pass => {}
                Outcome::Skipped => result.skipped += 1,
                Outcome::Fail(detail) => result.failures.push(LawFailure { case, input: print_val(input), detail }),
            }
        }
    }

    fn merge(mut self, other: LawReport) -> LawReport {
        for (mine, theirs) in self.laws.iter_mut().zip(other.laws) {
            mine.cases += theirs.cases;
            mine.skipped += theirs.skipped;
            mine.failures.extend(theirs.failures);
        }
        self
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.laws {
            writeln!(f, "{}: cases={} skipped={} failures={}", l.law.name(), l.cases, l.skipped, l.failures.len())?;
            for fail in &l.failures {
                writeln!(f, "  case {} input {}: {}", fail.case, fail.input, fail.detail)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Run all laws on `cases` values generated for `c` over the sort of the
/// first domain atom.
pub fn run_laws(c: &Code, cfg: &GenConfig, cases: usize) -> Result<LawReport, GenError> {
    run_laws_with(c, cfg, cases, Execution::default())
}

pub fn run_laws_with(c: &Code, cfg: &GenConfig, cases: usize, exec: Execution) -> Result<LawReport, GenError> {
    let sort = cfg.atom_domain.first().ok_or(GenError::EmptyDomain)?.sort();
    let t = c.over(sort);
    // surface configuration errors once, before fanning out
    gen_val(&t, cfg)?;

    let case = |k: usize| -> LawReport {
        let mut report = LawReport::empty(c);
        let value_cfg = case_config(cfg, k as u64, 0);
        let other_cfg = case_config(cfg, k as u64, 1);
        let v = gen_val(&t, &value_cfg).expect("configuration checked above");
        let w = gen_val(&t, &other_cfg).expect("configuration checked above");
        report.record(k, &v, check_case(c, sort, &v, &w));
        report
    };

    let report = match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..cases).into_par_iter().map(case).reduce(|| LawReport::empty(c), LawReport::merge)
        }
        _ => (0..cases).map(case).fold(LawReport::empty(c), LawReport::merge),
    };
    Ok(sorted_failures(report))
}

fn sorted_failures(mut report: LawReport) -> LawReport {
    for l in &mut report.laws {
        l.failures.sort_by_key(|f| f.case);
    }
    report
}

fn case_config(cfg: &GenConfig, case: u64, stream: u64) -> GenConfig {
    GenConfig { seed: SplitMix64::case_seed(cfg.seed, case.wrapping_mul(2).wrapping_add(stream)), ..cfg.clone() }
}

type AtomFn = fn(&Atom) -> Atom;
type AtomPred = fn(&Atom) -> bool;

/// Per-sort functions the laws are instantiated with.
struct Vocabulary {
    // extensionally equal, syntactically distinct
    twice_add: AtomFn,
    twice_mul: AtomFn,
    first: AtomFn,
    second: AtomFn,
    preds: &'static [AtomPred],
}

fn int_of(a: &Atom) -> i64 {
    a.as_int().expect("int vocabulary applied to int atoms")
}

fn str_of(a: &Atom) -> &str {
    match a {
        Atom::Str(s) => s,
        Atom::Int(_) => panic!("str vocabulary applied to an int atom"),
    }
}

const INT_VOCAB: Vocabulary = Vocabulary {
    twice_add: |a| Atom::Int(int_of(a).wrapping_add(int_of(a))),
    twice_mul: |a| Atom::Int(int_of(a).wrapping_mul(2)),
    first: |a| Atom::Int(int_of(a).wrapping_add(1)),
    second: |a| Atom::Int(int_of(a).wrapping_mul(3)),
    preds: &[|a| int_of(a) % 2 == 0, |a| int_of(a) > 4, |a| int_of(a) != 0],
};

const STR_VOCAB: Vocabulary = Vocabulary {
    twice_add: |a| Atom::Str(format!("{0}{0}", str_of(a))),
    twice_mul: |a| Atom::Str(str_of(a).repeat(2)),
    first: |a| Atom::Str(format!("{}x", str_of(a))),
    second: |a| Atom::Str(str_of(a).to_uppercase()),
    preds: &[|a| str_of(a).len().is_multiple_of(2), |a| str_of(a).contains('a')],
};

/// Congruence: `f` and `g` agreeing on every atom of `v` yield equal maps.
/// Skipped when they disagree somewhere.
pub fn congruence_case(c: &Code, v: &Val, f: impl Fn(&Atom) -> Atom, g: impl Fn(&Atom) -> Atom) -> Outcome {
    if v.atoms().into_iter().any(|a| f(a) != g(a)) {
        return Outcome::Skipped;
    }
    match (map(c, &f, v), map(c, &g, v)) {
        (Ok(x), Ok(y)) if x == y => Outcome::Pass,
        (Ok(x), Ok(y)) => Outcome::Fail(format!("map f = {x}, map g = {y}")),
        (Err(e), _) | (_, Err(e)) => Outcome::Fail(e.to_string()),
    }
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

fn attempt(law: impl FnOnce() -> Result<Outcome, crate::error::LndtError>) -> Outcome {
    law().unwrap_or_else(|e| Outcome::Fail(e.to_string()))
}

fn check_case(c: &Code, sort: AtomSort, v: &Val, w: &Val) -> [Outcome; 8] {
    let vocab = match sort {
        AtomSort::Int => &INT_VOCAB,
        AtomSort::Str => &STR_VOCAB,
    };
    let walked: Vec<Atom> = v.atoms().into_iter().cloned().collect();

    let congruence = congruence_case(c, v, vocab.twice_add, vocab.twice_mul);

    let composition = attempt(|| {
        let stepwise = map(c, vocab.second, &map(c, vocab.first, v)?)?;
        let fused = map(c, |a| (vocab.second)(&(vocab.first)(a)), v)?;
        Ok(verdict(stepwise == fused, || format!("{stepwise} vs {fused}")))
    });

    let identity = attempt(|| {
        let out = map(c, Atom::clone, v)?;
        Ok(verdict(&out == v, || format!("map id gave {out}")))
    });

    let duality = attempt(|| {
        for p in vocab.preds {
            let holds = all(c, p, v)?;
            let refuted = any(c, |a| !p(a), v)?;
            let agree = match (&holds, &refuted) {
                (crate::spread::AllResult::AllHolds, None) => true,
                (crate::spread::AllResult::Counterexample(x), Some(y)) => x == y,
                _ => false,
            };
            if !agree {
                return Ok(Outcome::Fail(format!("all = {holds:?}, any(not p) = {refuted:?}")));
            }
        }
        Ok(Outcome::Pass)
    });

    let folds = attempt(|| {
        let left = foldl(c, |acc: String, a| format!("<{acc}|{a}>"), String::new(), v)?;
        let left_ref = walked.iter().fold(String::new(), |acc, a| format!("<{acc}|{a}>"));
        let right = foldr(c, |a, acc: String| format!("<{a}|{acc}>"), String::new(), v)?;
        let right_ref = walked.iter().rev().fold(String::new(), |acc, a| format!("<{a}|{acc}>"));
        let flat = flatten(c, v)?;
        let count = size(c, v)?;
        Ok(verdict(left == left_ref && right == right_ref && flat == walked && count == walked.len(), || {
            format!("foldl {left} / {left_ref}, foldr {right} / {right_ref}, flatten {flat:?}, size {count}")
        }))
    });

    let eq_oracle = attempt(|| {
        let shifted = map(c, vocab.first, v)?;
        for other in [v, w, &shifted] {
            let derived = eq(c, v, other)?;
            if derived != (v == other) {
                return Ok(Outcome::Fail(format!("eq against {other} gave {derived}")));
            }
        }
        Ok(Outcome::Pass)
    });

    let membership = attempt(|| {
        let f = vocab.twice_add;
        let image = map(c, f, v)?;
        for a in &walked {
            let target = f(a);
            match member(c, &target, &image)? {
                Some(p) if atom_at(&image, &p).ok() == Some(&target) => {}
                found => return Ok(Outcome::Fail(format!("member({target}) in {image} gave {found:?}"))),
            }
        }
        Ok(Outcome::Pass)
    });

    let round_trip = attempt(|| {
        let text = show(c, v)?;
        let back = parse_val(&text);
        Ok(verdict(text == print_val(v) && back.as_ref() == Ok(v), || format!("show gave {text}")))
    });

    [congruence, composition, identity, duality, folds, eq_oracle, membership, round_trip]
}
