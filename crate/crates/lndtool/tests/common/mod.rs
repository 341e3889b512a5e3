//! Scripted session shared by the golden test and the acceptance suite.

#![allow(dead_code)]

use std::process::Command;

pub struct Case {
    pub args: &'static [&'static str],
    pub stdout: &'static str,
    pub code: i32,
}

const fn case(args: &'static [&'static str], stdout: &'static str, code: i32) -> Case {
    Case { args, stdout, code }
}

pub const SESSION: &[Case] = &[
    case(&["check", "--type", "maybe", "[7]"], "ok\n", 0),
    case(&["check", "--type", "maybe", "[1;(2)]"], "NullInhabited at [seq:1]\n", 1),
    case(&["check", "--type", "nest", "--format", "json", "[1;(2,3)]"], "{\"wf\":true}\n", 0),
    case(
        &["check", "--type", "maybe", "--format", "json", "[1;(2)]"],
        "{\"wf\":false,\"reason\":\"NullInhabited\",\"at\":[{\"seq\":1}]}\n",
        1,
    ),
    case(&["map", "--type", "list", "--fn", "succ", "[1;(2);((3))]"], "[2;(3);((4))]\n", 0),
    case(&["map", "--type", "nest", "--fn", "square", "[3;(4,5)]"], "[9;(16,25)]\n", 0),
    case(&["map", "--type", "nest", "--fn", "double", "[3;(4,5)]"], "[6;(8,10)]\n", 0),
    case(&["map", "--type", "bush", "--fn", "to_str", "[1;[2]]"], "[\"1\";[\"2\"]]\n", 0),
    case(
        &["map", "--type", "maybe", "--base", "str", "--fn", "id", "--format", "json", "[\"x\"]"],
        "\"[\\\"x\\\"]\"\n",
        0,
    ),
    case(&["foldl", "--type", "nest", "--op", "concat", "[1;(2,3)]"], "\"123\"\n", 0),
    case(&["foldr", "--type", "nest", "--op", "concat", "--init", "!", "[1;(2,3)]"], "\"123!\"\n", 0),
    case(&["foldl", "--type", "sqlist", "--op", "mul", "[2;[3;(4)]]"], "24\n", 0),
    case(&["foldr", "--type", "list", "--op", "add", "--init", "10", "--format", "json", "[1;(2);((3))]"], "16\n", 0),
    case(
        &["any", "--type", "bush", "--pred", "eq:10", "--format", "json", "[1;[10]]"],
        "[{\"seq\":1},{\"seq\":0}]\n",
        0,
    ),
    case(&["any", "--type", "bush", "--pred", "eq:10", "[1;[10]]"], "[seq:1,seq:0]\n", 0),
    case(&["any", "--type", "nest", "--pred", "gt:5", "[1;(2,3)]"], "none\n", 1),
    case(&["any", "--type", "nest", "--pred", "gt:5", "--format", "json", "[1;(2,3)]"], "null\n", 1),
    case(&["all", "--type", "nest", "--pred", "gt:0", "[1;(2,3)]"], "holds\n", 0),
    case(&["all", "--type", "list", "--pred", "odd", "[1;(2)]"], "counterexample at [seq:1,tup:0]\n", 1),
    case(
        &["all", "--type", "list", "--pred", "even", "--format", "json", "[1;(2)]"],
        "{\"holds\":false,\"at\":[{\"seq\":0}]}\n",
        1,
    ),
    case(&["member", "--type", "bush", "--pred", "eq:10", "[1;[2;[10]];[[10]]]"], "[seq:1,seq:1,seq:0]\n", 0),
    case(&["member", "--type", "list", "--base", "str", "--pred", "eqs:b", "[\"a\";(\"b\")]"], "[seq:1,tup:0]\n", 0),
    case(&["member", "--type", "maybe", "--pred", "eq:4", "[]"], "none\n", 1),
    case(&["eq", "--type", "nest", "[1;(2,3)]", "[1;(2,3)]"], "true\n", 0),
    case(&["eq", "--type", "nest", "[1;(2,3)]", "[1;(3,2)]"], "false\n", 1),
    case(&["size", "--type", "nest", "[1;(2,3)]"], "3\n", 0),
    case(&["size", "--type", "bush", "--format", "json", "[1;[2;[]];[[3]]]"], "3\n", 0),
    case(&["flatten", "--type", "sqlist", "[1;[2;(3)]]"], "[1;2;3]\n", 0),
    case(&["flatten", "--type", "list", "--base", "str", "--format", "json", "[\"a\";(\"b\")]"], "[\"a\",\"b\"]\n", 0),
    case(&["show", "--type", "nperfect:3", "[1;(2,3,4)]"], "[1;(2,3,4)]\n", 0),
    case(&["show", "--type", "bush", "--format", "json", "[1;[]]"], "\"[1;[]]\"\n", 0),
    case(&["empty", "--type", "bush", "[1]"], "false\n", 0),
    case(&["empty", "--type", "maybe", "[]"], "true\n", 0),
    case(&["gen", "--type", "nest", "--budget", "15", "--seed", "7"], "[6;(8,5);((4,0),(7,3))]\n", 0),
    case(
        &["gen", "--type", "bush", "--budget", "12", "--seed", "3", "--domain", "0,1"],
        "[1;[0;[];[];[[]];[]];[[1]]]\n",
        0,
    ),
    case(&["enum", "--type", "maybe", "--max-size", "10", "--domain", "0,1"], "[]\n[0]\n[1]\n", 0),
    case(&["enum", "--type", "nest", "--max-size", "3", "--domain", "5", "--format", "json"], "[\"[]\",\"[5]\"]\n", 0),
    case(
        &["laws", "--type", "nest", "--cases", "40"],
        "congruence: cases=40 skipped=0 failures=0\n\
         composition: cases=40 skipped=0 failures=0\n\
         map_identity: cases=40 skipped=0 failures=0\n\
         any_all_duality: cases=40 skipped=0 failures=0\n\
         fold_flatten: cases=40 skipped=0 failures=0\n\
         eq_oracle: cases=40 skipped=0 failures=0\n\
         membership_map: cases=40 skipped=0 failures=0\n\
         show_round_trip: cases=40 skipped=0 failures=0\n",
        0,
    ),
    // input errors
    case(&["size", "--type", "nest", "[1;(2)]"], "", 2),
    case(&["map", "--type", "bush", "--fn", "succ", "[1;[2"], "", 2),
    case(&["eq", "--type", "maybe", "[1]", "[1;(2)]"], "", 2),
    case(&["empty", "--type", "bush", "[[]]"], "", 2),
    // usage errors
    case(&["size", "--type", "frob", "[]"], "", 3),
    case(&["size", "[]"], "", 3),
    case(&["map", "--type", "list", "--base", "str", "--fn", "double", "[\"a\"]"], "", 3),
    case(&["member", "--type", "nest", "--pred", "even", "[1]"], "", 3),
    case(&["any", "--type", "nest", "--pred", "eqs:a", "[1]"], "", 3),
    case(&["gen", "--type", "null"], "", 3),
    case(&["frobnicate"], "", 3),
];

pub struct Outcome {
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
    pub code: i32,
}

pub fn run_binary(args: &[&str]) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_lndtool")).args(args).output().expect("lndtool runs");
    Outcome { stdout: out.stdout, stderr: out.stderr, code: out.status.code().expect("exit code") }
}

pub fn run_in_process(args: &[&str]) -> Outcome {
    let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
    let argv = std::iter::once("lndtool").chain(args.iter().copied());
    let code = lndtool::run(argv, &mut stdout, &mut stderr);
    Outcome { stdout, stderr, code }
}

/// Mismatches between `run` and the recorded session.
pub fn session_mismatches(run: impl Fn(&[&str]) -> Outcome) -> Vec<String> {
    let mut bad = Vec::new();
    for case in SESSION {
        let got = run(case.args);
        let stdout = String::from_utf8_lossy(&got.stdout);
        if got.code != case.code || got.stdout != case.stdout.as_bytes() {
            bad.push(format!("{:?}: exit {} stdout {:?}", case.args, got.code, stdout));
        } else if case.code >= 2 && got.stderr.is_empty() {
            bad.push(format!("{:?}: no diagnostic on stderr", case.args));
        }
    }
    bad
}
