use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indexlab")).args(args).env_remove("INDEXLAB_SEED").output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn index_of_named_modules() {
    assert_eq!(json(&["index", "coadjoint:borel-gl4"])["index"], 2);
    assert_eq!(json(&["index", "isotropy:gl5/so5"])["index"], 5);
    assert_eq!(json(&["index", "standard:gl3"])["index"], 0);
    assert_eq!(json(&["--mode", "symbolic", "index", "coadjoint:borel-gl4"])["lower_bound"], 2);
}

#[test]
fn dumped_representation_round_trips() {
    let out = run(&["index", "coadjoint:borel-gl4", "--dump-rep"]);
    assert!(out.status.success());
    let path = std::env::temp_dir().join(format!("indexlab-rep-{}.json", std::process::id()));
    std::fs::write(&path, &out.stdout).unwrap();
    let v = json(&["index", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(v["index"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["pair-check", "gl/so", "--n", "3"]), 0);
    assert_eq!(code(&["pair-check", "gl/so", "--n", "3", "--expect", "GNIB"]), 0);
    assert_eq!(code(&["pair-check", "gl/so", "--n", "3", "--expect", "no-GNIB"]), 1);
    assert_eq!(code(&["pair-check", "gl/glpq", "--p", "4", "--q", "4", "--expect", "no-GNIB"]), 0);
    assert_eq!(code(&["pair-check", "sp/gl", "--n", "0"]), 2);
    assert_eq!(code(&["index", "bogus:x"]), 2);
    assert_eq!(code(&["delta", "gl", "--partition", "2,1"]), 2);
    assert_eq!(code(&["--box", "10", "index", "standard:gl3"]), 2);
    assert_eq!(code(&["reproduce", "no-such-id"]), 2);
}

#[test]
fn sampled_mode_leaves_the_bad_orbit_open() {
    assert_eq!(code(&["--mode", "montecarlo", "pair-check", "gl/glpq", "--p", "3", "--q", "4"]), 3);
    let v = json(&["pair-check", "gl/glpq", "--p", "3", "--q", "4"]);
    assert_eq!(v["overall"], "no-GNIB");
}

#[test]
fn delta_subcommand() {
    let v = json(&["delta", "gl", "--partition", "3,3,1"]);
    assert_eq!(v["record"]["delta"], 1);
    assert_eq!(v["no_gnib"], true);
}

#[test]
fn table_formats() {
    let out = run(&["--format", "csv", "pair-check", "gl/so", "--n", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("orbit,rank,index/bounds,status,mode,ms"));
    assert_eq!(lines.count(), 3);
    let out = run(&["--format", "md", "pair-check", "gl/so", "--n", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("## (gl3, so3)"), "{text}");
}

#[test]
fn seed_flag_and_environment_agree() {
    let a = run(&["--seed", "11", "pair-check", "sp/gl", "--n", "3"]);
    let b = Command::new(env!("CARGO_BIN_EXE_indexlab"))
        .args(["pair-check", "sp/gl", "--n", "3"])
        .env("INDEXLAB_SEED", "11")
        .output()
        .unwrap();
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 11);
}
