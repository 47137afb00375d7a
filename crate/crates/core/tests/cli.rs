use std::process::Command;

fn gfact(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gfact")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn verify_line_ten() {
    let (code, out) = gfact(&["verify", "--line", "10", "--n", "4", "--q", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("N Factorizes / C Factorizes -> ok"));
}

#[test]
fn zsigmondy_exception() {
    let (code, out) = gfact(&["zsigmondy", "--q", "2", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "none (exception (6,2))");
}

#[test]
fn explore_m11_is_empty() {
    let (code, out) = gfact(&["explore", "--group", "M11"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("no factorizing pairs"));
}

#[test]
fn exit_codes() {
    assert_eq!(gfact(&["verify", "--line", "1", "--n", "6"]).0, 2);
    assert_eq!(gfact(&["verify", "--line", "99"]).0, 2);
    assert_eq!(gfact(&["frobnicate"]).0, 2);
    assert_eq!(gfact(&["verify", "--line", "11", "--n", "18", "--q", "2"]).0, 3);
    assert_eq!(gfact(&["section2", "--q", "16"]).0, 3);
    // the audit grid contradicts two stated exceptional sets
    assert_eq!(gfact(&["audit", "--claim", "psu-ell"]).0, 1);
    assert_eq!(gfact(&["audit", "--claim", "psp-borel"]).0, 0);
}

#[test]
fn orders() {
    let (code, out) = gfact(&["orders", "--family", "OmegaMinus", "--n", "8", "--q", "2", "--variant", "linear"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "197406720");
}

#[test]
fn config_file_and_json_are_reproducible() {
    let dir = std::env::temp_dir().join(format!("gfact-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("line3.cfg");
    std::fs::write(&cfg, "line = 3\nn = 2\nq = 7\nseed = 5\n").unwrap();
    let mut outs = Vec::new();
    for i in 0..2 {
        let j = dir.join(format!("r{i}.json"));
        let (code, _) = gfact(&["verify", "--config", cfg.to_str().unwrap(), "--json", j.to_str().unwrap()]);
        assert_eq!(code, 0);
        outs.push(std::fs::read(&j).unwrap());
    }
    assert_eq!(outs[0], outs[1]);
    let v: serde_json::Value = serde_json::from_slice(&outs[0]).unwrap();
    assert_eq!(v[0]["normalizer"]["verdict"], "factorizes");
    assert_eq!(v[0]["normalizer"]["seed"], 5);
    std::fs::write(&cfg, "line = 3\nelement_cap = 0\n").unwrap();
    assert_eq!(gfact(&["verify", "--config", cfg.to_str().unwrap()]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}
