use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orbichi")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn chi_of_spindle() {
    let (code, out, _) = run(&["chi", &fixture("spindle3.json")]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "chi_un = 2*T[C3]; chi = 2; chi_ES = 2/3");
}

#[test]
fn chi_of_empty_orbifold() {
    let (code, out, _) = run(&["chi", &fixture("empty.json"), "--hom=un"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "chi_un = 0");
}

#[test]
fn chi_of_mirror_agrees_with_burnside_route() {
    let (code, out, _) = run(&["chi", &fixture("mirror.json"), "--hom", "un,chi,es,orb"]);
    assert_eq!(code, 0);
    assert!(out.contains("chi_un = 2*T[C2] - 1; chi = 1; chi_ES = 0; chi_orb = 3"), "{out}");
    assert!(out.contains("routes agree"));
}

#[test]
fn chi_json_output() {
    let (code, out, _) = run(&["--json", "chi", &fixture("mirror.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["values"]["chi_un"]["polynomial"], "2*T[C2] - 1");
    assert_eq!(v["values"]["chi_ES"], "0");
    assert_eq!(v["global_quotient"]["agree"], true);
}

#[test]
fn ph_pass_and_fail() {
    let (code, out, _) = run(&["ph", &fixture("spindle3_field.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS"));
    let (code, out, _) = run(&["ph", &fixture("spindle3_bad_field.json")]);
    assert_eq!(code, 1);
    assert!(out.starts_with("FAIL"));
    assert!(out.contains("difference = -T[C3]"));
}

#[test]
fn ph_boundary_modes() {
    let f = fixture("interval_field.json");
    assert_eq!(run(&["ph", &f]).0, 0);
    let (code, out, _) = run(&["ph", &f, "--boundary", "inward"]);
    assert_eq!(code, 1);
    assert!(out.contains("difference = 2"));
    let (code, _, err) = run(&["ph", &f, "--boundary", "none"]);
    assert_eq!(code, 3);
    assert!(err.starts_with("error:"));
    assert_eq!(run(&["ph", &f, "--boundary", "sideways"]).0, 2);
}

#[test]
fn index_routes_agree() {
    let (code, out, _) = run(&["index", &fixture("cone_s3.json")]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "ind_un = T[S3] + 2*T[C3] - T[C2]; routes agree");
}

#[test]
fn index_trivial_cases() {
    let (code, out, _) = run(&["index", &fixture("cone_c4.json")]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "ind_un = T[C4]; routes agree");
    let (code, out, _) = run(&["index", &fixture("cone_empty.json")]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "ind_un = 0; routes agree");
}

#[test]
fn ph_off_by_one() {
    let (code, out, _) = run(&["ph", &fixture("sphere_off_by_one.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("difference = -1"), "{out}");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--json", "ph", "spindle3_field.json"],
        vec!["poset", "s3_perm.json"],
        vec!["--json", "chi", "mirror.json", "--hom", "un,orb,k:3"],
    ] {
        let args: Vec<String> =
            args.iter().map(|a| if a.ends_with(".json") { fixture(a) } else { a.to_string() }).collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run(&args), run(&args));
    }
}

#[test]
fn group_queries() {
    let (code, out, _) = run(&["group", "isomorphic", &fixture("c6.json"), &fixture("c2xc3.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("isomorphic: true"));
    let (_, out, _) = run(&["group", "isomorphic", &fixture("c6.json"), &fixture("s3_perm.json")]);
    assert!(out.starts_with("isomorphic: false"));
    let (_, out, _) = run(&["group", "factor", &fixture("c6.json")]);
    assert!(out.starts_with("factors: C2 x C3"));
    let (_, out, _) = run(&["group", "subgroups", &fixture("s3_perm.json")]);
    assert!(out.starts_with("6 subgroups"));
    let (_, out, _) = run(&["group", "subgroups", &fixture("s3_perm.json"), "--up-to-conjugacy"]);
    assert!(out.starts_with("4 subgroups"));
    let (_, out, _) = run(&["group", "classid", &fixture("s3_perm.json")]);
    assert!(out.contains("name: S3"));
}

#[test]
fn gset_and_poset() {
    let (code, out, _) = run(&["gset", &fixture("gset_s3.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("class = T[C2]"));
    let (code, out, _) = run(&["--json", "poset", &fixture("s3_perm.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v.is_object());
}

#[test]
fn exit_codes_for_errors() {
    assert_eq!(run(&["chi", &fixture("does_not_exist.json")]).0, 2);
    assert_eq!(run(&["chi", &fixture("spindle3.json"), "--hom", "k:-2"]).0, 3);
    assert_eq!(run(&["chi", &fixture("spindle3.json"), "--hom", "bogus"]).0, 2);
    let (code, _, err) = run(&["--config", &fixture("tight_caps.json"), "group", "classid", &fixture("s3_perm.json")]);
    assert_eq!(code, 4);
    assert!(err.contains("exceeds"));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, "{{\"strata\": [").unwrap();
    assert_eq!(run(&["chi", bad.path().to_str().unwrap()]).0, 2);

    let mut invalid = tempfile::NamedTempFile::new().unwrap();
    write!(invalid, r#"{{"order": 2, "mul": [[0,1],[0,1]]}}"#).unwrap();
    assert_eq!(run(&["group", "classid", invalid.path().to_str().unwrap()]).0, 3);
}
