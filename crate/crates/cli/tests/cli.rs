use std::path::Path;
use std::process::{Command, Output};

fn rainbow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow")).args(args).env_remove("RAINBOW_BUDGET").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(o: &Output, key: &str) -> String {
    stdout(o)
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")).map(str::to_owned))
        .unwrap_or_else(|| panic!("no {key} in {}", stdout(o)))
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let o = rainbow(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn generated_files_have_expected_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let h = gen(dir.path(), "h.json", &["horton", "--n", "16"]);
    let o = rainbow(&["verify", "horton", "--input", &h]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&o, "horton"), "true");

    let u = gen(dir.path(), "u.json", &["upper", "--k", "6", "--m", "6"]);
    let o = rainbow(&["count", "--input", &u]);
    assert_eq!(field(&o, "n"), "36");
    assert_eq!(field(&o, "k"), "6");

    let q = gen(dir.path(), "q.json", &["noquad", "--k", "4"]);
    let text = std::fs::read_to_string(&q).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["m"], 6);
    assert_eq!(v["points"].as_array().unwrap().len(), 24);
}

#[test]
fn counts() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("tri.csv");
    std::fs::write(&tri, "x_num,x_den,y_num,y_den,color\n0,1,0,1,1\n3,1,1,1,2\n1,1,4,1,3\n").unwrap();
    let o = rainbow(&["count", "--input", tri.to_str().unwrap(), "--shape", "triangle", "--filter", "rainbow"]);
    assert_eq!(field(&o, "count"), "1");

    let q = gen(dir.path(), "q.json", &["noquad", "--k", "4"]);
    let o = rainbow(&["count", "--input", &q, "--shape", "quad", "--filter", "rainbow"]);
    assert_eq!(field(&o, "count"), "0");

    let h = gen(dir.path(), "h.json", &["horton", "--n", "32"]);
    let o = rainbow(&["count", "--input", &h, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["count"].as_u64().unwrap() <= 2 * 32 * 32);
}

#[test]
fn verify_checks() {
    let dir = tempfile::tempdir().unwrap();
    let r = gen(dir.path(), "random_k4_m3.json", &["random", "--k", "4", "--m", "3", "--seed", "7"]);
    let o = rainbow(&["verify", "lower-bound", "--input", &r]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&o, "bound"), "4");
    assert!(field(&o, "count").parse::<u64>().unwrap() >= 4);

    let o = rainbow(&["verify", "theorem2", "--k", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&o, "count"), "0");

    let o = rainbow(&["verify", "visible-edges", "--n", "1024"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(field(&o, "count").parse::<usize>().unwrap() < 2048);

    let o = rainbow(&["verify", "theorem1-upper", "--k", "4", "--m", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"], "pass");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // The odd points lie below the line through the even ones.
    let not_horton = dir.path().join("grid.csv");
    std::fs::write(&not_horton, "x_num,x_den,y_num,y_den,color\n0,1,0,1,1\n1,1,1,1,1\n2,1,5,1,1\n3,1,2,1,1\n").unwrap();
    assert_eq!(rainbow(&["verify", "horton", "--input", not_horton.to_str().unwrap()]).status.code(), Some(1));

    assert_eq!(rainbow(&["count", "--input", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(rainbow(&["gen", "noquad", "--k", "2"]).status.code(), Some(2));
    assert_eq!(rainbow(&["frobnicate"]).status.code(), Some(2));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"k\": 2, \"points\": [{\"x\": \"1/0\", \"y\": \"0\", \"color\": 1}]}").unwrap();
    assert_eq!(rainbow(&["count", "--input", bad.to_str().unwrap()]).status.code(), Some(2));

    let h = gen(dir.path(), "h.json", &["horton", "--n", "64"]);
    let o = rainbow(&["count", "--input", &h, "--budget", "100"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_rainbow"))
        .args(["count", "--input", &h])
        .env("RAINBOW_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn deterministic_output() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args) in [
        ("u", &["upper", "--k", "5", "--m", "4"][..]),
        ("q", &["noquad", "--k", "5"][..]),
        ("r", &["random", "--k", "3", "--m", "4", "--seed", "99"][..]),
    ] {
        let a = std::fs::read(gen(dir.path(), &format!("{name}1.json"), args)).unwrap();
        let b = std::fs::read(gen(dir.path(), &format!("{name}2.json"), args)).unwrap();
        assert_eq!(a, b, "{name}");
        let c = std::fs::read(gen(dir.path(), &format!("{name}.csv"), args)).unwrap();
        assert!(c.starts_with(b"x_num,x_den,y_num,y_den,color\n"));
    }
}

#[test]
fn plot_with_overlay() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen(dir.path(), "g.json", &["gadget"]);
    let w = dir.path().join("w.json");
    let o = rainbow(&["count", "--input", &g, "--filter", "rainbow", "--witnesses", w.to_str().unwrap()]);
    assert!(o.status.success());
    let mut svgs = Vec::new();
    for name in ["a.svg", "b.svg"] {
        let out = dir.path().join(name);
        let o = rainbow(&["plot", "--input", &g, "--out", out.to_str().unwrap(), "--highlight", w.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        svgs.push(std::fs::read_to_string(out).unwrap());
    }
    assert_eq!(svgs[0], svgs[1]);
    assert!(svgs[0].starts_with("<svg"));
    assert!(svgs[0].contains("<polygon"));
    assert_eq!(svgs[0].matches("<circle").count(), 9);
}
