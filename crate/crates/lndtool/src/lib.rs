//! `lndtool`: check, transform and query serialized LNDT values.
//!
//! Exit codes: 0 success or positive decision, 1 negative decision,
//! 2 parse or well-formedness error on an input, 3 usage error.

use std::fmt::Display;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use lndt::laws::{enum_vals, gen_val, run_laws, GenConfig};
use lndt::spread::{self, AllResult};
use lndt::{parse_code, parse_val, wf, Atom, AtomSort, Code, Path, Val, WfReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lndtool", version, about = "Linked nested datatype values: check, map, fold, query")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Code or alias (list, nest, maybe, bush, sqlist, nperfect:<n>).
    #[arg(long = "type", global = true, value_name = "CODE")]
    code: Option<String>,

    /// Base atom sort.
    #[arg(long, global = true, value_enum, default_value_t = Base::Int)]
    base: Base,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Base {
    Int,
    Str,
}

impl From<Base> for AtomSort {
    fn from(b: Base) -> Self {
        match b {
            Base::Int => AtomSort::Int,
            Base::Str => AtomSort::Str,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum MapFn {
    Succ,
    Double,
    Square,
    Id,
    ToStr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FoldOp {
    Add,
    Mul,
    Concat,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exit 0 when the value is well-formed, 1 with a diagnostic otherwise.
    Check {
        value: String,
    },
    Map {
        #[arg(long = "fn", value_enum)]
        func: MapFn,
        value: String,
    },
    Foldl(FoldArgs),
    Foldr(FoldArgs),
    /// Path of the leftmost atom satisfying the predicate.
    Any(PredArgs),
    /// Path of the leftmost atom refuting the predicate, if any.
    All(PredArgs),
    /// Like `any`, for `eq:<k>` / `eqs:<s>` predicates.
    Member(PredArgs),
    Eq {
        left: String,
        right: String,
    },
    Size {
        value: String,
    },
    Flatten {
        value: String,
    },
    Show {
        value: String,
    },
    Empty {
        value: String,
    },
    /// Generate one value.
    Gen {
        #[arg(long, default_value_t = 20)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "0,1,2,3,4,5,6,7,8,9")]
        domain: String,
    },
    /// Enumerate every value up to a size bound.
    Enum {
        #[arg(long)]
        max_size: usize,
        #[arg(long, default_value = "0,1")]
        domain: String,
    },
    /// Run the law suite on generated values.
    Laws {
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 20)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "0,1,2,3,4,5,6,7,8,9")]
        domain: String,
    },
}

#[derive(Args, Debug)]
struct FoldArgs {
    #[arg(long, value_enum)]
    op: FoldOp,
    #[arg(long)]
    init: Option<String>,
    value: String,
}

#[derive(Args, Debug)]
struct PredArgs {
    /// even | odd | gt:<k> | eq:<k> | eqs:<s>
    #[arg(long)]
    pred: String,
    value: String,
}

/// A failure carrying its exit code and diagnostic.
struct Exit {
    code: i32,
    message: String,
}

fn usage(message: impl Display) -> Exit {
    Exit { code: EXIT_USAGE, message: message.to_string() }
}

fn input(message: impl Display) -> Exit {
    Exit { code: EXIT_INPUT, message: message.to_string() }
}

/// Run with `argv` (including the program name); returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let mut session = Session { out, format: cli.global.format, base: cli.global.base.into() };
    match session.dispatch(&cli) {
        Ok(code) => code,
        Err(Exit { code, message }) => {
            let _ = writeln!(err, "lndtool: {message}");
            code
        }
    }
}

struct Session<'a> {
    out: &'a mut dyn Write,
    format: Format,
    base: AtomSort,
}

impl Session<'_> {
    fn emit(&mut self, text: impl Display, json: serde_json::Value) -> Result<(), Exit> {
        let res = match self.format {
            Format::Text => writeln!(self.out, "{text}"),
            Format::Json => writeln!(self.out, "{json}"),
        };
        res.map_err(|e| input(format!("write failed: {e}")))
    }

    fn code(&self, cli: &Cli) -> Result<Code, Exit> {
        let text = cli.global.code.as_deref().ok_or_else(|| usage("--type is required"))?;
        parse_code(text).map_err(|e| usage(format!("invalid --type `{text}`: {e}")))
    }

    /// Parse a value argument, reading `@path` from disk.
    fn value(&self, arg: &str) -> Result<Val, Exit> {
        let text = match arg.strip_prefix('@') {
            Some(path) => std::fs::read_to_string(path).map_err(|e| input(format!("cannot read {path}: {e}")))?,
            None => arg.to_string(),
        };
        parse_val(&text).map_err(|e| input(format!("cannot parse value: {e}")))
    }

    /// Parse and check a value against `c` over the base sort.
    fn checked(&self, c: &Code, arg: &str) -> Result<Val, Exit> {
        let v = self.value(arg)?;
        match wf(&c.over(self.base), &v) {
            WfReport::Ok => Ok(v),
            WfReport::Fail(f) => Err(input(format!("ill-formed value: {f}"))),
        }
    }

    fn domain(&self, text: &str) -> Result<Vec<Atom>, Exit> {
        text.split(',')
            .map(str::trim)
            .map(|item| {
                let atom = match parse_val(item) {
                    Ok(Val::Atom(a)) => a,
                    _ if self.base == AtomSort::Str => Atom::Str(item.to_string()),
                    _ => return Err(usage(format!("domain item `{item}` is not an atom"))),
                };
                if atom.sort() != self.base {
                    return Err(usage(format!("domain atom {atom} is not of sort {}", self.base)));
                }
                Ok(atom)
            })
            .collect()
    }

    fn need_int(&self, what: &str) -> Result<(), Exit> {
        if self.base == AtomSort::Int {
            Ok(())
        } else {
            Err(usage(format!("{what} needs --base int")))
        }
    }

    fn predicate(&self, text: &str) -> Result<Predicate, Exit> {
        let int_arg = |k: &str| k.parse::<i64>().map_err(|_| usage(format!("bad integer in predicate `{text}`")));
        let pred = match text {
            "even" => Predicate::Even,
            "odd" => Predicate::Odd,
            _ => match text.split_once(':') {
                Some(("gt", k)) => Predicate::Gt(int_arg(k)?),
                Some(("eq", k)) => Predicate::Eq(Atom::Int(int_arg(k)?)),
                Some(("eqs", s)) => Predicate::Eq(Atom::Str(s.to_string())),
                _ => return Err(usage(format!("unknown predicate `{text}`"))),
            },
        };
        match &pred {
            Predicate::Eq(a) if a.sort() != self.base => {
                Err(usage(format!("predicate `{text}` does not match --base {}", self.base)))
            }
            Predicate::Eq(_) => Ok(pred),
            _ => self.need_int(text).map(|_| pred),
        }
    }

    fn emit_path(&mut self, found: Option<Path>) -> Result<i32, Exit> {
        match found {
            Some(p) => {
                self.emit(&p, json!(p))?;
                Ok(EXIT_OK)
            }
            None => {
                self.emit("none", serde_json::Value::Null)?;
                Ok(EXIT_NEGATIVE)
            }
        }
    }

    fn emit_val(&mut self, v: &Val) -> Result<(), Exit> {
        let text = v.to_string();
        self.emit(&text, json!(text))
    }

    fn dispatch(&mut self, cli: &Cli) -> Result<i32, Exit> {
        let lib = |e: lndt::LndtError| input(e);
        match &cli.command {
            Command::Check { value } => {
                let c = self.code(cli)?;
                let v = self.value(value)?;
                match wf(&c.over(self.base), &v) {
                    WfReport::Ok => {
                        self.emit("ok", json!({ "wf": true }))?;
                        Ok(EXIT_OK)
                    }
                    WfReport::Fail(f) => {
                        let report = json!({ "wf": false, "reason": f.reason, "at": f.at });
                        self.emit(&f, report)?;
                        Ok(EXIT_NEGATIVE)
                    }
                }
            }
            Command::Map { func, value } => {
                let c = self.code(cli)?;
                if *func != MapFn::Id && *func != MapFn::ToStr {
                    self.need_int("this function")?;
                }
                let v = self.checked(&c, value)?;
                let f = |a: &Atom| match (func, a) {
                    (MapFn::Succ, Atom::Int(n)) => Atom::Int(n.wrapping_add(1)),
                    (MapFn::Double, Atom::Int(n)) => Atom::Int(n.wrapping_mul(2)),
                    (MapFn::Square, Atom::Int(n)) => Atom::Int(n.wrapping_mul(*n)),
                    (MapFn::ToStr, Atom::Int(n)) => Atom::Str(n.to_string()),
                    (_, a) => a.clone(),
                };
                let out = spread::map(&c, f, &v).map_err(lib)?;
                self.emit_val(&out)?;
                Ok(EXIT_OK)
            }
            Command::Foldl(args) | Command::Foldr(args) => {
                let c = self.code(cli)?;
                let left = matches!(cli.command, Command::Foldl(_));
                let result = self.fold(&c, args, left)?;
                let json = match &result {
                    Atom::Int(n) => json!(n),
                    Atom::Str(s) => json!(s),
                };
                self.emit(&result, json)?;
                Ok(EXIT_OK)
            }
            Command::Any(args) | Command::Member(args) => {
                let c = self.code(cli)?;
                let pred = self.predicate(&args.pred)?;
                let v = self.checked(&c, &args.value)?;
                let found = match (&cli.command, &pred) {
                    (Command::Member(_), Predicate::Eq(a)) => spread::member(&c, a, &v),
                    (Command::Member(_), _) => return Err(usage("member takes eq:<k> or eqs:<s>")),
                    _ => spread::any(&c, |a| pred.test(a), &v),
                }
                .map_err(lib)?;
                self.emit_path(found)
            }
            Command::All(args) => {
                let c = self.code(cli)?;
                let pred = self.predicate(&args.pred)?;
                let v = self.checked(&c, &args.value)?;
                match spread::all(&c, |a| pred.test(a), &v).map_err(lib)? {
                    AllResult::AllHolds => {
                        self.emit("holds", json!({ "holds": true }))?;
                        Ok(EXIT_OK)
                    }
                    AllResult::Counterexample(p) => {
                        let text = format!("counterexample at {p}");
                        self.emit(text, json!({ "holds": false, "at": p }))?;
                        Ok(EXIT_NEGATIVE)
                    }
                }
            }
            Command::Eq { left, right } => {
                let c = self.code(cli)?;
                let v = self.checked(&c, left)?;
                let w = self.checked(&c, right)?;
                let same = spread::eq(&c, &v, &w).map_err(lib)?;
                self.emit(same, json!(same))?;
                Ok(if same { EXIT_OK } else { EXIT_NEGATIVE })
            }
            Command::Size { value } => {
                let c = self.code(cli)?;
                let v = self.checked(&c, value)?;
                let n = spread::size(&c, &v).map_err(lib)?;
                self.emit(n, json!(n))?;
                Ok(EXIT_OK)
            }
            Command::Flatten { value } => {
                let c = self.code(cli)?;
                let v = self.checked(&c, value)?;
                let atoms = spread::flatten(&c, &v).map_err(lib)?;
                let json: Vec<serde_json::Value> = atoms.iter().map(atom_json).collect();
                let seq = Val::Seq(atoms.into_iter().map(Val::Atom).collect());
                self.emit(seq, json!(json))?;
                Ok(EXIT_OK)
            }
            Command::Show { value } => {
                let c = self.code(cli)?;
                let v = self.checked(&c, value)?;
                let text = spread::show(&c, &v).map_err(lib)?;
                self.emit(&text, json!(text))?;
                Ok(EXIT_OK)
            }
            Command::Empty { value } => {
                let c = self.code(cli)?;
                let v = self.checked(&c, value)?;
                let empty = spread::is_empty(&c, &v).map_err(lib)?;
                self.emit(empty, json!(empty))?;
                Ok(EXIT_OK)
            }
            Command::Gen { budget, seed, domain } => {
                let c = self.code(cli)?;
                let cfg = GenConfig { budget: *budget, seed: *seed, atom_domain: self.domain(domain)? };
                let v = gen_val(&c.over(self.base), &cfg).map_err(usage)?;
                self.emit_val(&v)?;
                Ok(EXIT_OK)
            }
            Command::Enum { max_size, domain } => {
                let c = self.code(cli)?;
                let vals = enum_vals(&c.over(self.base), *max_size, &self.domain(domain)?);
                let texts: Vec<String> = vals.iter().map(Val::to_string).collect();
                self.emit(texts.join("\n"), json!(texts))?;
                Ok(EXIT_OK)
            }
            Command::Laws { cases, budget, seed, domain } => {
                let c = self.code(cli)?;
                let cfg = GenConfig { budget: *budget, seed: *seed, atom_domain: self.domain(domain)? };
                let report = run_laws(&c, &cfg, *cases).map_err(usage)?;
                let clean = report.is_clean();
                let text = report.to_string();
                self.emit(text.trim_end(), to_json(&report))?;
                Ok(if clean { EXIT_OK } else { EXIT_NEGATIVE })
            }
        }
    }

    fn fold(&self, c: &Code, args: &FoldArgs, left: bool) -> Result<Atom, Exit> {
        let v = || self.checked(c, &args.value);
        let lib = |e: lndt::LndtError| input(e);
        match args.op {
            FoldOp::Add | FoldOp::Mul => {
                self.need_int("--op add/mul")?;
                let add = args.op == FoldOp::Add;
                let init = match &args.init {
                    Some(text) => text.parse::<i64>().map_err(|_| usage(format!("bad --init `{text}`")))?,
                    None if add => 0,
                    None => 1,
                };
                let apply = |acc: i64, a: &Atom| {
                    let n = a.as_int().unwrap_or_default();
                    if add {
                        acc.wrapping_add(n)
                    } else {
                        acc.wrapping_mul(n)
                    }
                };
                let v = v()?;
                let n = if left {
                    spread::foldl(c, apply, init, &v)
                } else {
                    spread::foldr(c, |a, acc| apply(acc, a), init, &v)
                }
                .map_err(lib)?;
                Ok(Atom::Int(n))
            }
            FoldOp::Concat => {
                let init = args.init.clone().unwrap_or_default();
                let v = v()?;
                let s = if left {
                    spread::foldl(c, |acc: String, a| acc + &atom_text(a), init, &v)
                } else {
                    spread::foldr(c, |a, acc: String| atom_text(a) + &acc, init, &v)
                }
                .map_err(lib)?;
                Ok(Atom::Str(s))
            }
        }
    }
}

enum Predicate {
    Even,
    Odd,
    Gt(i64),
    Eq(Atom),
}

impl Predicate {
    fn test(&self, a: &Atom) -> bool {
        match (self, a) {
            (Predicate::Even, Atom::Int(n)) => n % 2 == 0,
            (Predicate::Odd, Atom::Int(n)) => n % 2 != 0,
            (Predicate::Gt(k), Atom::Int(n)) => n > k,
            (Predicate::Eq(b), a) => a == b,
            _ => false,
        }
    }
}

/// Atom content without string quoting.
fn atom_text(a: &Atom) -> String {
    match a {
        Atom::Int(n) => n.to_string(),
        Atom::Str(s) => s.clone(),
    }
}

fn atom_json(a: &Atom) -> serde_json::Value {
    match a {
        Atom::Int(n) => json!(n),
        Atom::Str(s) => json!(s),
    }
}

fn to_json(value: &impl Serialize) -> serde_json::Value {
    serde_json::to_value(value).expect("reports serialize")
}
