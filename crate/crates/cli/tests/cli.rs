use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blchang"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_examples() {
    for (args, expected) in [
        (&["eval", "LukStd", "uplus(p,q)", "p=1/5", "q=3/10"][..], "1/2"),
        (&["eval", "G(2)", "p -> p", "p=0"][..], "1"),
        (&["eval", "C", "!(p)", "p=a3"][..], "b3"),
        (&["eval", "V", "p & q", "p=pos 1/2", "q=neg 1/4"][..], "neg 1/2"),
        (&["eval", "C ++ LukStd", "p -> q", "p=c1:1/2", "q=c0:a1"][..], "c0:a1"),
    ] {
        let o = run(args);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert_eq!(stdout(&o).trim(), expected, "{args:?}");
    }
}

#[test]
fn eval_errors_exit_2() {
    for args in [
        &["eval", "LukStd", "p &", "p=1/2"][..],
        &["eval", "LukStd", "p & q", "p=1/2"][..],
        &["eval", "LukStd", "p", "p=3/2"][..],
        &["eval", "Nope", "p", "p=1"][..],
        &["eval", "Canc", "p", "p=1/2"][..],
        &["eval", "C", "p", "p"][..],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
}

#[test]
fn check_exit_codes_and_witnesses() {
    let o = run(&["check", "LukStd", "cha", "--denom-bound", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("fails at {x=2/5}: lhs 3/5, rhs 0"),
        "{}",
        stdout(&o)
    );

    let o = run(&["check", "LukStd", "cha"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["check", "C", "cha", "--chang-bound", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds up to chang(50)"));

    let o = run(&["check", "C ++ LukStd", "p0"]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["check", "MV(5)", "x & y = y & x"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds (decided: 25 valuations, exhaustive)"));

    let o = run(&["check", "G(3)", "INV"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("{p=1/2}"));

    assert_eq!(run(&["check", "LukStd", "x = "]).status.code(), Some(2));
}

#[test]
fn machine_records_have_stable_fields() {
    let o = run(&["check", "LukStd", "cha", "--denom-bound", "5", "--machine"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    for field in [
        "claim",
        "algebra",
        "source",
        "verdict",
        "witness",
        "lhs",
        "rhs",
        "elapsed_ms",
    ] {
        assert!(v.get(field).is_some(), "missing {field}");
    }
    assert_eq!(v["verdict"], "fails");
    assert_eq!(v["witness"], "x=2/5");
    assert_eq!(v["lhs"], "3/5");
    assert_eq!(v["rhs"], "0");
    assert!(v["elapsed_ms"].is_null());
}

#[test]
fn counterexample_search() {
    let o = run(&["counterexample", "C ++ LukStd", "cha"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("x=c1:"));
    let o = run(&["counterexample", "V", "cha", "--samples", "500"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn embed_examples() {
    let o = run(&["embed", "C", "a0..a5,b0..b5", "V"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("a5 -> pos 1/32") && out.contains("b0 -> neg 1"), "{out}");

    let o = run(&["embed", "G(2)", "0,1", "C"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("{0 -> b0, 1 -> a0}"));

    let o = run(&["embed", "C", "a0..a2,b0..b2", "V", "--machine", "--ratio", "1/3"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["verdict"], "found");
    assert_eq!(v["map"][0], serde_json::json!(["b0", "neg 1"]));
    assert_eq!(v["map"][2], serde_json::json!(["b2", "neg 1/9"]));

    let o = run(&["embed", "LukStd", "0,1/5,2/5,3/5,4/5,1", "V"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not found up to budget"));

    let o = run(&["embed", "MV(5)", "0,1/4,1/2,3/4,1", "MV(3)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("no embedding exists"));
}

#[test]
fn algebra_listing() {
    let o = run(&["algebra", "list"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("omega*V"));
    let o = run(&["algebra", "describe", "MV(2) ++ MV(3)"]);
    assert!(stdout(&o).contains("size:       4"), "{}", stdout(&o));
}

#[test]
fn suite_is_green_and_reproducible() {
    let a = run(&["suite", "--machine"]);
    let b = run(&["suite", "--machine"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
    for line in stdout(&a).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["passed"], true, "{line}");
    }
}
