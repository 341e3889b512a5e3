//! Seed bundles and the spread step.
//!
//! A [`Spreadable`] packages, for one transformer `F`, the operations that lift
//! an element-level function to a function over `F` structures: map, both folds,
//! Any/All deciders with evidence paths, equality and rendering. [`spread`]
//! turns the bundle for `F` into the bundle for `lndt(F)` by walking the spine
//! and handing each tail the element function lifted once more through `F`.
//! Nothing in this module inspects the code of a value beyond the layer it is
//! currently processing; all element handling goes through the seeds.
//!
//! The free functions ([`map`], [`foldl`], [`any`], ...) check well-formedness
//! first and then run the derived seed at the base atoms.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::codes::{AtomSort, Code};
use crate::error::{LndtError, SpreadError};
use crate::values::{wf, Atom, Path, Step, Val};

pub type SeedResult<T> = Result<T, SpreadError>;

pub type MapFn<'a> = dyn Fn(&Val) -> SeedResult<Val> + 'a;
pub type FoldlFn<'a, B> = dyn Fn(B, &Val) -> SeedResult<B> + 'a;
pub type FoldrFn<'a, B> = dyn Fn(&Val, B) -> SeedResult<B> + 'a;
pub type AnyFn<'a> = dyn Fn(&Val) -> SeedResult<Option<Path>> + 'a;
pub type AllFn<'a> = dyn Fn(&Val) -> SeedResult<AllResult> + 'a;
pub type EqFn<'a> = dyn Fn(&Val, &Val) -> SeedResult<bool> + 'a;
pub type ShowFn<'a> = dyn Fn(&Val) -> SeedResult<String> + 'a;

/// Outcome of an All decision.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AllResult {
    AllHolds,
    /// Leftmost element failing the predicate.
    Counterexample(Path),
}

impl AllResult {
    pub fn holds(&self) -> bool {
        matches!(self, AllResult::AllHolds)
    }

    fn under(self, step: Step) -> AllResult {
        match self {
            AllResult::AllHolds => AllResult::AllHolds,
            AllResult::Counterexample(p) => AllResult::Counterexample(p.under(step)),
        }
    }
}

static NULL_SEED_CALLS: AtomicU64 = AtomicU64::new(0);

/// How many times any null seed has been invoked in this process.
pub fn null_seed_invocations() -> u64 {
    NULL_SEED_CALLS.load(Ordering::SeqCst)
}

/// The seed operations for one transformer.
#[derive(Clone, Debug)]
pub struct Spreadable(Arc<Seeds>);

#[derive(Debug)]
enum Seeds {
    Tuple(usize),
    Null,
    Spread(Spreadable),
    /// `s = spread(s)`: the spine's element seeds are this bundle itself.
    Knot,
}

/// What a seed call works with once the null case is ruled out.
enum Layer<'a> {
    Tuple(usize),
    Spine(&'a Spreadable),
}

impl Spreadable {
    /// Seeds for `tup:n`, slots visited left to right.
    pub fn tuple(n: usize) -> Spreadable {
        Spreadable(Arc::new(Seeds::Tuple(n)))
    }

    /// Seeds for `null`. Every operation reports [`SpreadError::NullSeedInvoked`].
    pub fn null() -> Spreadable {
        Spreadable(Arc::new(Seeds::Null))
    }

    /// The shared fixpoint bundle for `bush`.
    pub fn bush() -> Spreadable {
        static BUSH: OnceLock<Spreadable> = OnceLock::new();
        BUSH.get_or_init(|| Spreadable(Arc::new(Seeds::Knot))).clone()
    }

    /// The code this bundle was derived for.
    pub fn code(&self) -> Code {
        match &*self.0 {
            Seeds::Tuple(n) => Code::Tup(*n),
            Seeds::Null => Code::Null,
            Seeds::Spread(inner) => Code::lndt(inner.code()),
            Seeds::Knot => Code::Bush,
        }
    }

    fn layer(&self) -> SeedResult<Layer<'_>> {
        match &*self.0 {
            Seeds::Tuple(n) => Ok(Layer::Tuple(*n)),
            Seeds::Null => {
                NULL_SEED_CALLS.fetch_add(1, Ordering::SeqCst);
                Err(SpreadError::NullSeedInvoked)
            }
            Seeds::Spread(inner) => Ok(Layer::Spine(inner)),
            Seeds::Knot => Ok(Layer::Spine(self)),
        }
    }

    pub fn map_seed(&self, f: &MapFn<'_>, v: &Val) -> SeedResult<Val> {
        match self.layer()? {
            Layer::Tuple(n) => {
                let cs = slots(n, v)?;
                cs.iter().map(f).collect::<SeedResult<_>>().map(Val::Tup)
            }
            Layer::Spine(inner) => {
                let items = spine(v)?;
                let mut out = Vec::with_capacity(items.len());
                spine_map(inner, f, items, &mut out)?;
                Ok(Val::Seq(out))
            }
        }
    }

    pub fn foldl_seed<B>(&self, f: &FoldlFn<'_, B>, acc: B, v: &Val) -> SeedResult<B> {
        match self.layer()? {
            Layer::Tuple(n) => slots(n, v)?.iter().try_fold(acc, f),
            Layer::Spine(inner) => spine_foldl(inner, f, acc, spine(v)?),
        }
    }

    pub fn foldr_seed<B>(&self, f: &FoldrFn<'_, B>, v: &Val, acc: B) -> SeedResult<B> {
        match self.layer()? {
            Layer::Tuple(n) => slots(n, v)?.iter().rev().try_fold(acc, |acc, c| f(c, acc)),
            Layer::Spine(inner) => spine_foldr(inner, f, spine(v)?, acc),
        }
    }

    pub fn any_seed(&self, p: &AnyFn<'_>, v: &Val) -> SeedResult<Option<Path>> {
        match self.layer()? {
            Layer::Tuple(n) => {
                for (i, c) in slots(n, v)?.iter().enumerate() {
                    if let Some(path) = p(c)? {
                        return Ok(Some(path.under(Step::Tup(i))));
                    }
                }
                Ok(None)
            }
            Layer::Spine(inner) => spine_any(inner, p, spine(v)?, 0),
        }
    }

    pub fn all_seed(&self, p: &AllFn<'_>, v: &Val) -> SeedResult<AllResult> {
        match self.layer()? {
            Layer::Tuple(n) => {
                for (i, c) in slots(n, v)?.iter().enumerate() {
                    if let AllResult::Counterexample(path) = p(c)? {
                        return Ok(AllResult::Counterexample(path.under(Step::Tup(i))));
                    }
                }
                Ok(AllResult::AllHolds)
            }
            Layer::Spine(inner) => spine_all(inner, p, spine(v)?, 0),
        }
    }

    pub fn eq_seed(&self, e: &EqFn<'_>, v: &Val, w: &Val) -> SeedResult<bool> {
        match self.layer()? {
            Layer::Tuple(n) => {
                for (x, y) in slots(n, v)?.iter().zip(slots(n, w)?) {
                    if !e(x, y)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Layer::Spine(inner) => spine_eq(inner, e, spine(v)?, spine(w)?),
        }
    }

    pub fn show_seed(&self, r: &ShowFn<'_>, v: &Val) -> SeedResult<String> {
        match self.layer()? {
            Layer::Tuple(n) => {
                let parts = slots(n, v)?.iter().map(r).collect::<SeedResult<Vec<_>>>()?;
                Ok(format!("({})", parts.join(",")))
            }
            Layer::Spine(inner) => {
                let mut parts = Vec::new();
                spine_show(inner, r, spine(v)?, &mut parts)?;
                Ok(format!("[{}]", parts.join(";")))
            }
        }
    }
}

fn slots(n: usize, v: &Val) -> SeedResult<&[Val]> {
    match v {
        Val::Tup(cs) if cs.len() == n + 1 => Ok(cs),
        _ => Err(SpreadError::Shape { expected: "tuple of matching arity" }),
    }
}

fn spine(v: &Val) -> SeedResult<&[Val]> {
    match v {
        Val::Seq(ws) => Ok(ws),
        _ => Err(SpreadError::Shape { expected: "sequence" }),
    }
}

fn atom(v: &Val) -> SeedResult<&Atom> {
    v.as_atom().ok_or(SpreadError::Shape { expected: "atom" })
}

// Each spine helper applies the element function to the head and recurses on
// the tail with the element function lifted through the inner seeds.

fn spine_map(inner: &Spreadable, f: &MapFn<'_>, items: &[Val], out: &mut Vec<Val>) -> SeedResult<()> {
    let Some((head, tail)) = items.split_first() else { return Ok(()) };
    out.push(f(head)?);
    let lifted = |w: &Val| inner.map_seed(f, w);
    spine_map(inner, &lifted, tail, out)
}

fn spine_foldl<B>(inner: &Spreadable, f: &FoldlFn<'_, B>, acc: B, items: &[Val]) -> SeedResult<B> {
    let Some((head, tail)) = items.split_first() else { return Ok(acc) };
    let acc = f(acc, head)?;
    let lifted = |b: B, w: &Val| inner.foldl_seed(f, b, w);
    spine_foldl(inner, &lifted, acc, tail)
}

fn spine_foldr<B>(inner: &Spreadable, f: &FoldrFn<'_, B>, items: &[Val], acc: B) -> SeedResult<B> {
    let Some((head, tail)) = items.split_first() else { return Ok(acc) };
    let lifted = |w: &Val, b: B| inner.foldr_seed(f, w, b);
    let rest = spine_foldr(inner, &lifted, tail, acc)?;
    f(head, rest)
}

fn spine_any(inner: &Spreadable, p: &AnyFn<'_>, items: &[Val], index: usize) -> SeedResult<Option<Path>> {
    let Some((head, tail)) = items.split_first() else { return Ok(None) };
    if let Some(path) = p(head)? {
        return Ok(Some(path.under(Step::Seq(index))));
    }
    let lifted = |w: &Val| inner.any_seed(p, w);
    spine_any(inner, &lifted, tail, index + 1)
}

fn spine_all(inner: &Spreadable, p: &AllFn<'_>, items: &[Val], index: usize) -> SeedResult<AllResult> {
    let Some((head, tail)) = items.split_first() else { return Ok(AllResult::AllHolds) };
    let here = p(head)?;
    if !here.holds() {
        return Ok(here.under(Step::Seq(index)));
    }
    let lifted = |w: &Val| inner.all_seed(p, w);
    spine_all(inner, &lifted, tail, index + 1)
}

fn spine_eq(inner: &Spreadable, e: &EqFn<'_>, xs: &[Val], ys: &[Val]) -> SeedResult<bool> {
    match (xs.split_first(), ys.split_first()) {
        (None, None) => Ok(true),
        (Some((x, xt)), Some((y, yt))) => {
            if !e(x, y)? {
                return Ok(false);
            }
            let lifted = |a: &Val, b: &Val| inner.eq_seed(e, a, b);
            spine_eq(inner, &lifted, xt, yt)
        }
        _ => Ok(false),
    }
}

fn spine_show(inner: &Spreadable, r: &ShowFn<'_>, items: &[Val], parts: &mut Vec<String>) -> SeedResult<()> {
    let Some((head, tail)) = items.split_first() else { return Ok(()) };
    parts.push(r(head)?);
    let lifted = |w: &Val| inner.show_seed(r, w);
    spine_show(inner, &lifted, tail, parts)
}

/// `SpreadAble F -> SpreadAble (LNDT F)`.
pub fn spread(s: Spreadable) -> Spreadable {
    Spreadable(Arc::new(Seeds::Spread(s)))
}

/// Derive the seed bundle for a code.
pub fn spreadable_of(c: &Code) -> Spreadable {
    match c {
        Code::Tup(n) => Spreadable::tuple(*n),
        Code::Null => Spreadable::null(),
        Code::Lndt(inner) => spread(spreadable_of(inner)),
        Code::Bush => Spreadable::bush(),
    }
}

/// Check `v` against `c` over the sort of its first atom (int when atomless).
fn checked(c: &Code, v: &Val) -> Result<(Spreadable, AtomSort), LndtError> {
    let sort = v.first_sort().unwrap_or(AtomSort::Int);
    wf(&c.over(sort), v).into_result()?;
    Ok((spreadable_of(c), sort))
}

pub fn map(c: &Code, f: impl Fn(&Atom) -> Atom, v: &Val) -> Result<Val, LndtError> {
    let (s, _) = checked(c, v)?;
    let base = |x: &Val| Ok(Val::Atom(f(atom(x)?)));
    Ok(s.map_seed(&base, v)?)
}

pub fn foldl<B>(c: &Code, step: impl Fn(B, &Atom) -> B, init: B, v: &Val) -> Result<B, LndtError> {
    let (s, _) = checked(c, v)?;
    let base = |acc: B, x: &Val| Ok(step(acc, atom(x)?));
    Ok(s.foldl_seed(&base, init, v)?)
}

pub fn foldr<B>(c: &Code, step: impl Fn(&Atom, B) -> B, init: B, v: &Val) -> Result<B, LndtError> {
    let (s, _) = checked(c, v)?;
    let base = |x: &Val, acc: B| Ok(step(atom(x)?, acc));
    Ok(s.foldr_seed(&base, v, init)?)
}

/// Leftmost atom satisfying `p`, as a path from the root.
pub fn any(c: &Code, p: impl Fn(&Atom) -> bool, v: &Val) -> Result<Option<Path>, LndtError> {
    let (s, _) = checked(c, v)?;
    let base = |x: &Val| Ok(p(atom(x)?).then(Path::root));
    Ok(s.any_seed(&base, v)?)
}

pub fn all(c: &Code, p: impl Fn(&Atom) -> bool, v: &Val) -> Result<AllResult, LndtError> {
    let (s, _) = checked(c, v)?;
    let base = |x: &Val| Ok(if p(atom(x)?) { AllResult::AllHolds } else { AllResult::Counterexample(Path::root()) });
    Ok(s.all_seed(&base, v)?)
}

pub fn eq(c: &Code, v: &Val, w: &Val) -> Result<bool, LndtError> {
    let sort = match (v.first_sort(), w.first_sort()) {
        (Some(a), Some(b)) if a != b => return Err(LndtError::SortMismatch { expected: a, found: b }),
        (a, b) => a.or(b).unwrap_or(AtomSort::Int),
    };
    wf(&c.over(sort), v).into_result()?;
    wf(&c.over(sort), w).into_result()?;
    let base = |x: &Val, y: &Val| Ok(atom(x)? == atom(y)?);
    Ok(spreadable_of(c).eq_seed(&base, v, w)?)
}

pub fn show(c: &Code, v: &Val) -> Result<String, LndtError> {
    let (s, _) = checked(c, v)?;
    let base = |x: &Val| Ok(atom(x)?.to_string());
    Ok(s.show_seed(&base, v)?)
}

/// Number of atoms.
pub fn size(c: &Code, v: &Val) -> Result<usize, LndtError> {
    foldl(c, |n, _| n + 1, 0, v)
}

/// Atoms in left-to-right order.
pub fn flatten(c: &Code, v: &Val) -> Result<Vec<Atom>, LndtError> {
    let reversed = foldr(
        c,
        |a, mut acc: Vec<Atom>| {
            acc.push(a.clone());
            acc
        },
        Vec::new(),
        v,
    )?;
    Ok(reversed.into_iter().rev().collect())
}

pub fn member(c: &Code, a: &Atom, v: &Val) -> Result<Option<Path>, LndtError> {
    if let Some(found) = v.first_sort().filter(|s| *s != a.sort()) {
        return Err(LndtError::SortMismatch { expected: found, found: a.sort() });
    }
    any(c, |x| x == a, v)
}

/// Holds no atoms. A non-empty spine whose elements hold no atoms is empty.
pub fn is_empty(c: &Code, v: &Val) -> Result<bool, LndtError> {
    Ok(size(c, v)? == 0)
}

/// The spine itself is empty (`[]`); stricter than [`is_empty`].
pub fn is_nil(c: &Code, v: &Val) -> Result<bool, LndtError> {
    checked(c, v)?;
    Ok(matches!(v, Val::Seq(ws) if ws.is_empty()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::resolve_alias;
    use crate::values::{atom_at, parse_val, print_val};

    fn v(text: &str) -> Val {
        parse_val(text).unwrap()
    }

    fn code(alias: &str) -> Code {
        resolve_alias(alias).unwrap()
    }

    fn path(steps: &[Step]) -> Path {
        Path(steps.to_vec())
    }

    fn int(a: &Atom) -> i64 {
        a.as_int().unwrap()
    }

    fn succ(a: &Atom) -> Atom {
        Atom::Int(int(a) + 1)
    }

    fn double(a: &Atom) -> Atom {
        Atom::Int(int(a) * 2)
    }

    fn even(a: &Atom) -> bool {
        int(a) % 2 == 0
    }

    // Oracle: rebuild the skeleton by plain recursion.
    fn reference_map(v: &Val, f: &dyn Fn(&Atom) -> Atom) -> Val {
        match v {
            Val::Atom(a) => Val::Atom(f(a)),
            Val::Tup(cs) => Val::Tup(cs.iter().map(|c| reference_map(c, f)).collect()),
            Val::Seq(ws) => Val::Seq(ws.iter().map(|w| reference_map(w, f)).collect()),
        }
    }

    // Oracle: every atom position in depth-first order.
    fn atom_paths(v: &Val, prefix: &Path, out: &mut Vec<Path>) {
        match v {
            Val::Atom(_) => out.push(prefix.clone()),
            Val::Tup(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    atom_paths(c, &prefix.child(Step::Tup(i)), out);
                }
            }
            Val::Seq(ws) => {
                for (i, w) in ws.iter().enumerate() {
                    atom_paths(w, &prefix.child(Step::Seq(i)), out);
                }
            }
        }
    }

    fn scan(v: &Val, p: impl Fn(&Atom) -> bool) -> Option<Path> {
        let mut paths = Vec::new();
        atom_paths(v, &Path::root(), &mut paths);
        paths.into_iter().find(|q| p(atom_at(v, q).unwrap()))
    }

    #[test]
    fn spreadable_of_examples() {
        let base = |x: &Val| Ok(Val::Atom(succ(x.as_atom().unwrap())));
        let list = spreadable_of(&code("list"));
        assert_eq!(list.map_seed(&base, &v("[1;(2)]")).unwrap(), v("[2;(3)]"));

        let bush_in = v("[1;[2;[3]]]");
        let doubled = map(&code("bush"), double, &bush_in).unwrap();
        assert_eq!(doubled, v("[2;[4;[6]]]"));
        assert_eq!(doubled, reference_map(&bush_in, &double));

        assert_eq!(map(&code("maybe"), succ, &v("[]")).unwrap(), v("[]"));
        assert_eq!(map(&code("maybe"), succ, &v("[4]")).unwrap(), v("[5]"));
    }

    #[test]
    fn bundle_reports_its_code() {
        for alias in ["list", "nest", "maybe", "sqlist", "bush", "nperfect:4"] {
            assert_eq!(spreadable_of(&code(alias)).code(), code(alias));
        }
    }

    #[test]
    fn spread_examples() {
        let nest = spread(Spreadable::tuple(1));
        let add = |b: i64, x: &Val| Ok(b + int(x.as_atom().unwrap()));
        assert_eq!(nest.foldl_seed(&add, 0, &v("[1;(2,3)]")).unwrap(), 6);

        let sqlist = spread(spread(Spreadable::tuple(0)));
        let value = v("[1;[2;(3)];[[4];([5;(6)])]]");
        let twice = |x: &Val| Ok(Val::Atom(double(x.as_atom().unwrap())));
        assert_eq!(sqlist.map_seed(&twice, &value).unwrap(), map(&code("sqlist"), double, &value).unwrap());
        assert_eq!(map(&code("sqlist"), double, &value).unwrap(), reference_map(&value, &double));

        let list = spread(Spreadable::tuple(0));
        let sub = |b: i64, x: &Val| Ok(b - int(x.as_atom().unwrap()));
        let subr = |x: &Val, b: i64| Ok(int(x.as_atom().unwrap()) - b);
        // ((0 - 1) - 2) and (1 - (2 - 0))
        assert_eq!(list.foldl_seed(&sub, 0, &v("[1;(2)]")).unwrap(), -3);
        assert_eq!(list.foldr_seed(&subr, &v("[1;(2)]"), 0).unwrap(), -1);
    }

    #[test]
    fn map_examples() {
        assert_eq!(map(&code("list"), succ, &v("[1;(2)]")).unwrap(), v("[2;(3)]"));
        assert_eq!(map(&code("nest"), double, &v("[1;(2,3)]")).unwrap(), v("[2;(4,6)]"));
        assert_eq!(map(&code("bush"), double, &v("[1;[2;[3]]]")).unwrap(), v("[2;[4;[6]]]"));
    }

    #[test]
    fn map_can_change_sort() {
        let out = map(&code("nest"), |a| Atom::Str(a.to_string()), &v("[1;(2,3)]")).unwrap();
        assert_eq!(out, v(r#"["1";("2","3")]"#));
        assert!(wf(&code("nest").over(AtomSort::Str), &out).is_ok());
    }

    #[test]
    fn fold_examples() {
        let add = |b: i64, a: &Atom| b + int(a);
        assert_eq!(foldl(&code("nest"), add, 0, &v("[1;(2,3)]")).unwrap(), 6);
        assert_eq!(foldl(&code("list"), |b: i64, a: &Atom| b - int(a), 0, &v("[1;(2)]")).unwrap(), -3);
        assert_eq!(foldl(&code("maybe"), add, 0, &v("[]")).unwrap(), 0);

        let cons = |a: &Atom, mut acc: Vec<Atom>| {
            acc.insert(0, a.clone());
            acc
        };
        assert_eq!(foldr(&code("list"), cons, Vec::new(), &v("[1;(2)]")).unwrap(), vec![Atom::Int(1), Atom::Int(2)]);
        assert_eq!(foldr(&code("list"), |a: &Atom, b: i64| int(a) - b, 0, &v("[1;(2)]")).unwrap(), -1);
        assert_eq!(foldr(&code("bush"), |a: &Atom, b: i64| int(a) + b, 0, &v("[1;[10]]")).unwrap(), 11);
    }

    #[test]
    fn any_examples() {
        let nest_val = v("[1;(2,3)]");
        let found = any(&code("nest"), even, &nest_val).unwrap();
        assert_eq!(found, Some(path(&[Step::Seq(1), Step::Tup(0)])));
        assert_eq!(found, scan(&nest_val, even));

        let bush_val = v("[1;[10]]");
        let found = any(&code("bush"), |a| int(a) == 10, &bush_val).unwrap();
        assert_eq!(found, Some(path(&[Step::Seq(1), Step::Seq(0)])));
        assert_eq!(found, scan(&bush_val, |a| int(a) == 10));

        assert_eq!(any(&code("maybe"), even, &v("[]")).unwrap(), None);
    }

    #[test]
    fn all_examples() {
        assert_eq!(all(&code("list"), even, &v("[2;(4)]")).unwrap(), AllResult::AllHolds);
        let nest_val = v("[1;(2,3)]");
        assert_eq!(
            all(&code("nest"), even, &nest_val).unwrap(),
            AllResult::Counterexample(scan(&nest_val, |a| !even(a)).unwrap())
        );
        assert_eq!(all(&code("nest"), even, &nest_val).unwrap(), AllResult::Counterexample(path(&[Step::Seq(0)])));
        assert_eq!(all(&code("maybe"), even, &v("[]")).unwrap(), AllResult::AllHolds);
        assert_eq!(
            all(&code("nest"), |a| int(a) < 3, &nest_val).unwrap(),
            AllResult::Counterexample(path(&[Step::Seq(1), Step::Tup(1)]))
        );
    }

    #[test]
    fn eq_examples() {
        assert!(eq(&code("list"), &v("[1;(2)]"), &v("[1;(2)]")).unwrap());
        assert!(!eq(&code("list"), &v("[1;(2)]"), &v("[1;(3)]")).unwrap());
        assert!(!eq(&code("list"), &v("[1;(2)]"), &v("[1]")).unwrap());
        assert!(eq(&code("bush"), &v("[1;[10]]"), &v("[1;[10]]")).unwrap());
        assert!(!eq(&code("bush"), &v("[1;[10]]"), &v("[1;[10;[]]]")).unwrap());
        assert_eq!(
            eq(&code("list"), &v("[1]"), &v("[\"a\"]")),
            Err(LndtError::SortMismatch { expected: AtomSort::Int, found: AtomSort::Str })
        );
        assert!(matches!(eq(&code("list"), &v("[1]"), &v("[1;2]")), Err(LndtError::IllFormed(_))));
    }

    #[test]
    fn show_examples() {
        assert_eq!(show(&code("list"), &v("[]")).unwrap(), "[]");
        assert_eq!(show(&code("nest"), &v("[1;(2,3)]")).unwrap(), "[1;(2,3)]");
        assert_eq!(show(&code("bush"), &v("[1;[10]]")).unwrap(), "[1;[10]]");
        let s = v(r#"["a\"b";("c")]"#);
        assert_eq!(show(&code("list"), &s).unwrap(), print_val(&s));
    }

    #[test]
    fn size_flatten_examples() {
        assert_eq!(size(&code("nest"), &v("[1;(2,3)]")).unwrap(), 3);
        // position 0 of every spine holds a base atom, so `[[]]` is not a squared list
        assert!(matches!(size(&code("sqlist"), &v("[[]]")), Err(LndtError::IllFormed(_))));
        assert_eq!(size(&code("sqlist"), &v("[1;[]]")).unwrap(), 1);
        assert_eq!(size(&code("bush"), &v("[]")).unwrap(), 0);
        assert_eq!(flatten(&code("nest"), &v("[1;(2,3)]")).unwrap(), [1, 2, 3].map(Atom::Int));
        assert_eq!(flatten(&code("maybe"), &v("[5]")).unwrap(), vec![Atom::Int(5)]);
        let bush_val = v("[1;[2;[3]]]");
        let walked: Vec<Atom> = bush_val.atoms().into_iter().cloned().collect();
        assert_eq!(flatten(&code("bush"), &bush_val).unwrap(), walked);
        assert_eq!(walked, [1, 2, 3].map(Atom::Int));
    }

    #[test]
    fn member_and_emptiness() {
        assert_eq!(
            member(&code("bush"), &Atom::Int(10), &v("[1;[10]]")).unwrap(),
            Some(path(&[Step::Seq(1), Step::Seq(0)]))
        );
        assert_eq!(member(&code("list"), &Atom::Int(7), &v("[1;(2)]")).unwrap(), None);
        assert_eq!(member(&code("maybe"), &Atom::Int(5), &v("[5]")).unwrap(), Some(path(&[Step::Seq(0)])));
        assert!(matches!(member(&code("list"), &Atom::from("x"), &v("[1]")), Err(LndtError::SortMismatch { .. })));

        assert!(is_empty(&code("list"), &v("[]")).unwrap());
        assert!(is_empty(&code("sqlist"), &v("[]")).unwrap());
        assert!(is_nil(&code("sqlist"), &v("[]")).unwrap());
        assert!(!is_empty(&code("sqlist"), &v("[1;[]]")).unwrap());
        assert!(matches!(is_empty(&code("sqlist"), &v("[[]]")), Err(LndtError::IllFormed(_))));
        assert!(!is_empty(&code("nest"), &v("[1;(2,3)]")).unwrap());
    }

    #[test]
    fn ill_formed_inputs_are_rejected() {
        let err = map(&code("maybe"), succ, &v("[1;(2)]")).unwrap_err();
        assert_eq!(err.to_string(), "ill-formed value: NullInhabited at [seq:1]");
        assert!(matches!(size(&code("nest"), &v("[1;2]")), Err(LndtError::IllFormed(_))));
        assert!(matches!(size(&Code::Null, &v("1")), Err(LndtError::IllFormed(_))));
    }

    #[test]
    fn bare_tuple_code() {
        let c = Code::Tup(2);
        assert_eq!(flatten(&c, &v("(4,5,6)")).unwrap(), [4, 5, 6].map(Atom::Int));
        assert_eq!(any(&c, |a| int(a) > 4, &v("(4,5,6)")).unwrap(), Some(path(&[Step::Tup(1)])));
    }

    #[test]
    fn seeds_reject_wrong_shapes() {
        let list = spreadable_of(&code("list"));
        let id = |x: &Val| Ok(x.clone());
        assert_eq!(list.map_seed(&id, &v("(1)")), Err(SpreadError::Shape { expected: "sequence" }));
        assert!(list.map_seed(&id, &v("[1;(2,3)]")).is_err());
    }

    #[test]
    fn bush_bundle_is_shared() {
        let a = Spreadable::bush();
        let b = spreadable_of(&Code::Bush);
        assert!(Arc::ptr_eq(&a.0, &b.0));
        let handle = std::thread::spawn(move || {
            let add = |acc: i64, x: &Val| Ok(acc + x.as_atom().unwrap().as_int().unwrap());
            b.foldl_seed(&add, 0, &parse_val("[1;[2;[3]];[[4]]]").unwrap()).unwrap()
        });
        assert_eq!(handle.join().unwrap(), 10);
    }
}
