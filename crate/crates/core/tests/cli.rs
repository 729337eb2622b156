use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn hompbw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hompbw")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn check_exit_codes() {
    let ok = hompbw(&["check", &path("sl2.json")]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("hom-jacobi: pass"));

    let bad = hompbw(&["check", &path("corrupted_sl2.json")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("hom-jacobi: FAIL  witness (f, h, e)"));

    assert_eq!(hompbw(&["check", &path("malformed.json")]).status.code(), Some(2));
    assert_eq!(hompbw(&["check", &path("does_not_exist.json")]).status.code(), Some(2));
}

#[test]
fn check_json() {
    let out = hompbw(&["check", &path("corrupted_sl2.json"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], false);
    let jac = v["checks"].as_array().unwrap().iter().find(|c| c["axiom"] == "hom-jacobi").unwrap();
    assert_eq!(jac["witness"], serde_json::json!([0, 1, 2]));
}

#[test]
fn invalid_fixture_passes_check() {
    // the untwisted bracket with the Chevalley involution satisfies every axiom
    let out = hompbw(&["check", &path("invalid_sl2.json")]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn adapt_reports() {
    let out = stdout(&hompbw(&["adapt", &path("twisted_sl2.json")]));
    assert!(out.contains("mu = -1"));
    assert!(out.contains("X0 = 2*f"));
    assert!(out.contains("X1 = -2*e"));
    assert!(out.contains("X2 = h"));
    assert!(out.contains("sigma = [1, 0, 2]"));

    let v: serde_json::Value = serde_json::from_slice(&hompbw(&["adapt", &path("abelian_swap.json"), "--json"]).stdout).unwrap();
    assert_eq!(v["mu"], 1);
    assert_eq!(v["sigma"], serde_json::json!([1, 0]));
    assert_eq!(v["x"], serde_json::json!(["2*y1", "2*y2"]));

    let v: serde_json::Value = serde_json::from_slice(&hompbw(&["adapt", &path("sl2.json"), "--json"]).stdout).unwrap();
    assert_eq!(v["x"], serde_json::json!(["f", "h", "e"]));
}

#[test]
fn normal_forms() {
    let nf = |e: &str| stdout(&hompbw(&["nf", &path("sl2.json"), e])).trim().to_string();
    assert_eq!(nf("f*e"), "e⊗f - h");
    assert_eq!(nf("h*f*e"), "e⊗h⊗f + 2*e⊗f - h⊗h");
    assert_eq!(nf("e*e*h*f"), "e⊗e⊗h⊗f");
    assert_eq!(nf("h*e - e*h - 2*e"), "0");
    assert_eq!(nf("-1/2*f⊗e"), "-1/2*e⊗f + 1/2*h");

    let unknown = hompbw(&["nf", &path("sl2.json"), "f*q"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert_eq!(hompbw(&["nf", &path("sl2.json"), "0.5*f"]).status.code(), Some(2));
    // the axiom gate applies to every engine command
    assert_eq!(hompbw(&["nf", &path("corrupted_sl2.json"), "f*e"]).status.code(), Some(1));
}

#[test]
fn nf_output_reparses() {
    for e in ["f*e*h", "e*h*f*f - 3*f*e", "h*h*e*f"] {
        let first = stdout(&hompbw(&["nf", &path("twisted_sl2.json"), e])).trim().to_string();
        let again = stdout(&hompbw(&["nf", &path("twisted_sl2.json"), &first])).trim().to_string();
        assert_eq!(first, again);

        let out = hompbw(&["nf", &path("twisted_sl2.json"), e, "--json"]);
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["normal_form"], first.as_str());
    }
}

#[test]
fn multiplication() {
    let mul = |args: &[&str]| stdout(&hompbw(args)).trim().to_string();
    let file = path("sl2.json");
    assert_eq!(mul(&["mul", &file, "f", "e"]), "e⊗f - h");
    assert_eq!(mul(&["mul", &file, "f", "e", "--product", "tensor"]), "e⊗f - h");

    // on the swap algebra the twisted product differs from concatenation in degree 3;
    // normal words of U are phi-conjugates of decreasing words
    let swap = path("abelian_swap.json");
    assert_eq!(mul(&["mul", &swap, "X0", "X0*X1"]), "X1⊗X1⊗X1");
    assert_eq!(mul(&["mul", &swap, "X0", "X0*X1", "--product", "tensor"]), "X0⊗X0⊗X1");
    assert_eq!(mul(&["mul", &swap, "X0", "X1"]), "X1⊗X0");
}

#[test]
fn verify_prints_counts() {
    let out = hompbw(&["verify", &path("sl2.json"), "--max-degree", "4", "--samples", "30", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("86 + 34 = 120"));

    let out = hompbw(&["verify", &path("twisted_sl2.json"), "--max-degree", "4", "--samples", "30"]);
    assert_eq!(out.status.code(), Some(0));

    let out = hompbw(&["verify", &path("abelian_swap.json"), "--max-degree", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["reports"][0]["ranks"]["j"], 5);
    assert_eq!(v["reports"][0]["counts"]["total"], 14);

    assert_eq!(hompbw(&["verify", &path("sl2.json"), "--max-degree", "1"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", &path("twisted_sl2.json"), "--max-degree", "3", "--samples", "20", "--seed", "9", "--json"];
    let a = hompbw(&args).stdout;
    let b = hompbw(&args).stdout;
    assert_eq!(a, b);
}

#[test]
fn negative_control_flag() {
    // the gate blocks the corrupted bracket unless bypassed
    assert_eq!(hompbw(&["verify", &path("corrupted_sl2.json"), "--max-degree", "3"]).status.code(), Some(1));
    let out = hompbw(&["verify", &path("corrupted_sl2.json"), "--max-degree", "3", "--samples", "10", "--negative-control"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("hom-jacobi: FAIL"));
    assert!(text.contains("direct-sum             FAIL"));

    // the designated invalid fixture goes through with no failure at all
    let out = hompbw(&["verify", &path("invalid_sl2.json"), "--max-degree", "3", "--samples", "10", "--negative-control"]);
    assert_eq!(out.status.code(), Some(0));
}
