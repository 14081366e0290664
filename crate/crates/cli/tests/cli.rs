use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_volkenborn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn numbers() {
    for (args, want) in [
        (["number", "bernoulli", "12"], "-691/2730"),
        (["number", "euler", "0"], "1"),
        (["number", "bernoulli", "7"], "0"),
        (["number", "euler", "7"], "17/8"),
        (["number", "bernoulli", "1"], "-1/2"),
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
    let o = run(&["number", "bernoulli", "twelve"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["number", "euler", "--n-max", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,value\n0,1\n1,-1/2\n2,0\n3,1/4\n");
}

#[test]
fn polynomials_and_power_sums() {
    let o = run(&["polynomial", "bernoulli", "2"]);
    assert_eq!(stdout(&o).trim(), "x^2 - x + 1/6");
    let o = run(&["polynomial", "euler", "1", "--at", "-1/2"]);
    assert_eq!(stdout(&o).trim(), "-1");
    let o = run(&["powersum", "2", "3"]);
    let v = &lines(&o)[0];
    assert_eq!(v["direct"], "14");
    assert_eq!(v["closed"], "14");
    assert_eq!(v["agree"], true);
    let o = run(&["powersum", "2", "3", "--alternating"]);
    let v = &lines(&o)[0];
    assert_eq!(v["direct"], "-6");
    assert!(v.get("closed").is_none());
}

#[test]
fn verify_bernoulli_grid() {
    let o = run(&["verify", "corollary2", "--n-max", "4", "--w-max", "3", "--x", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = lines(&o);
    // n in 0..=4, w1, w2 in 1..=3, one x.
    assert_eq!(out.len(), 5 * 3 * 3 + 1);
    assert!(out[..out.len() - 1].iter().all(|r| r["pass"] == true));
    let summary = &out[out.len() - 1]["summary"];
    assert_eq!(summary["passed"], 45);
    assert_eq!(summary["failed"], 0);
    assert_eq!(out[0]["identity"], "bernoulli_power_sum_symmetry");
    assert_eq!(out[0]["params"]["x"], "0");
}

#[test]
fn verify_euler_grid_is_odd() {
    let o = run(&["verify", "theorem5", "--n-max", "4", "--w-max", "3", "--x", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = lines(&o);
    let reports = &out[..out.len() - 1];
    assert_eq!(reports.len(), 5 * 2 * 2);
    for r in reports {
        assert_eq!(r["params"]["w1"].as_u64().unwrap() % 2, 1);
        assert_eq!(r["params"]["w2"].as_u64().unwrap() % 2, 1);
        assert_eq!(r["pass"], true);
    }

    let o = run(&["verify", "theorem5", "--w-max", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    let o = run(&["verify", "theorem5", "--w-max", "2", "--odd-only"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_is_deterministic_and_ordered() {
    let args = ["verify", "shifted-sum-symmetry", "--n-max", "3", "--w-max", "3", "--x", "3/7", "--x", "-1/2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let out = lines(&a);
    let keys: Vec<(u64, u64, u64)> = out[..out.len() - 1]
        .iter()
        .map(|r| {
            let p = &r["params"];
            (p["n"].as_u64().unwrap(), p["w1"].as_u64().unwrap(), p["w2"].as_u64().unwrap())
        })
        .collect();
    assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    // x values keep command-line order inside each (n, w1, w2).
    assert_eq!(out[0]["params"]["x"], "3/7");
    assert_eq!(out[1]["params"]["x"], "-1/2");
}

#[test]
fn verify_other_identities() {
    for args in [
        vec!["verify", "eq30", "--n-max", "5", "--w-max", "5", "--x", "1/2"],
        vec!["verify", "theorem7", "--n-max", "3", "--w-max", "3"],
        vec!["verify", "corollary6", "--n-max", "6", "--w-max", "5"],
        vec!["verify", "deeba-rodriguez", "--n-max", "6", "--w-max", "3"],
        vec!["verify", "theorem1", "--w-max", "2", "--order", "6", "--x", "1/2"],
        vec!["verify", "bosonic-ratio-series", "--w-max", "3", "--order", "6"],
        vec!["verify", "fermionic-ratio-series", "--w-max", "3", "--order", "6"],
        vec!["verify", "shift-bosonic", "--n-max", "4", "--w-max", "3"],
        vec!["verify", "shift-fermionic", "--n-max", "4", "--w-max", "3"],
        vec!["verify", "bernoulli-multiplication", "--n-max", "4", "--w-max", "4"],
        vec!["verify", "euler-multiplication", "--n-max", "4", "--w-max", "5"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn verify_csv() {
    let o = run(&["verify", "corollary6", "--n-max", "2", "--w-max", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "identity,n,w1,w2,x,lhs,rhs,pass\n\
         euler_from_alternating_sums,1,3,,,-1/2,-1/2,true\n\
         euler_from_alternating_sums,2,3,,,0,0,true\n\
         # euler-from-alternating-sums: 2 total, 2 passed, 0 failed\n"
    );
    let o = run(&["verify", "theorem1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(run(&["verify", "theorem99"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "corollary2", "--x", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "corollary2", "--w-max", "0"]).status.code(), Some(2));
    let o = run(&["verify", "list"]);
    assert!(stdout(&o).contains("power-sum-symmetry (corollary2)"));
}

#[test]
fn padic_convergence() {
    let o = run(&["padic", "volkenborn", "--p", "3", "--n", "1", "--N-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(lines(&o)[0]["valuations"], serde_json::json!([1, 2, 3]));

    let o = run(&["padic", "volkenborn", "--p", "5", "--n", "0", "--N-max", "2"]);
    assert_eq!(lines(&o)[0]["valuations"], serde_json::json!(["inf", "inf"]));

    let o = run(&["padic", "fermionic", "--p", "3", "--n", "1", "--N-max", "2", "--format", "csv"]);
    assert_eq!(stdout(&o), "N,valuation\n1,1\n2,2\n");

    assert_eq!(run(&["padic", "fermionic", "--p", "2", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["padic", "volkenborn", "--p", "4"]).status.code(), Some(2));
}

#[test]
fn padic_carlitz() {
    let o = run(&["padic", "carlitz", "--p", "5", "--q", "1+5", "--m", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &lines(&o)[0];
    assert_eq!(v["value"], "1");
    assert_eq!(v["beta"]["val"], 0);
    assert_eq!(v["beta"]["unit"], "1");

    // beta_1 = -1/(q + 1) = -1/7 at q = 6.
    let o = run(&["padic", "carlitz", "--p", "5", "--q", "1+5^2", "--m", "1", "--m-max", "3", "--with-sums", "--N-max", "2", "--prec", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let out = lines(&o);
    assert_eq!(out.len(), 3);
    assert_eq!(out[0]["sums"].as_array().unwrap().len(), 2);

    for bad in ["2+5", "1+7", "1+5^x", "1+5^0", "q"] {
        let o = run(&["padic", "carlitz", "--p", "5", "--q", bad]);
        assert_eq!(o.status.code(), Some(2), "{bad}");
    }
}

#[test]
fn series_output() {
    let o = run(&["series", "bernoulli", "--order", "4"]);
    let v = &lines(&o)[0];
    assert_eq!(v["egf_coefficients"], serde_json::json!(["1", "-1/2", "1/6", "0", "-1/30"]));
    let o = run(&["series", "euler", "--order", "3"]);
    assert_eq!(lines(&o)[0]["egf_coefficients"], serde_json::json!(["1", "-1/2", "0", "1/4"]));
    let o = run(&["series", "exp", "--order", "2"]);
    assert_eq!(lines(&o)[0]["coefficients"], serde_json::json!(["1", "1", "1/2"]));
}
