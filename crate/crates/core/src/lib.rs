//! Linked nested datatypes.
//!
//! A linked nested datatype over a transformer `F` is a spine whose `i`-th
//! element has type `F^i(A)`. List, Nest, Maybe, Bush and their multi-layer
//! compositions are all instances, selected by a [`Code`]. Values of every
//! instance share the universal [`Val`] representation and are checked with
//! [`wf`]. The [`spread`] module derives map, folds, Any/All with evidence
//! paths, equality and rendering for `lndt(F)` from the seeds of `F`.

pub mod bushn;
pub mod codes;
mod error;
pub mod instances;
pub mod laws;
pub mod spread;
pub mod values;

pub use codes::{app_iter, parse_code, print_code, resolve_alias, AtomSort, Code, CodeError, TypeExpr};
pub use error::{LndtError, SpreadError};
pub use spread::{spread, spreadable_of, AllResult, Spreadable};
pub use values::{
    atom_at, parse_val, print_val, struct_size, wf, Atom, Path, PathError, Step, Val, ValError, WfFailure, WfReason,
    WfReport,
};
