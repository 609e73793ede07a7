use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_covertower"));
    c.env_remove("COVERTOWER_BUDGET");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Scratch {
        let dir = std::env::temp_dir().join(format!("covertower-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn write(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

/// The cover where `a2` swaps the two sheets.
fn swap_a2(dir: &Scratch) -> String {
    let out = stdout(&run(&["enumerate", "--genus", "2", "--degree", "2"]));
    let line = out.lines().find(|l| l.contains("[[1,2],[1,2],[2,1],[1,2]]")).unwrap();
    dir.write("cover.json", line)
}

#[test]
fn enumerate_is_deterministic_and_complete() {
    let a = run(&["enumerate", "--genus", "2", "--degree", "3"]);
    let b = run(&["enumerate", "--genus", "2", "--degree", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 220);
    for line in stdout(&a).lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["schema"], "covertower/1");
    }
}

#[test]
fn exit_codes() {
    let dir = Scratch::new("codes");
    let bad = dir.write("bad.json", "{bad");
    assert_eq!(run(&["genus", "--cover", &bad]).status.code(), Some(2));
    assert_eq!(run(&["genus", "--cover", "/nonexistent/cover.json"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--genus", "1", "--degree", "2"]).status.code(), Some(2));
    let o = bin().env("COVERTOWER_BUDGET", "10").args(["enumerate", "--genus", "2", "--degree", "3"]).output().unwrap();
    assert_eq!(o.status.code(), Some(3));
    let cover = swap_a2(&dir);
    assert_eq!(run(&["char-refine", "--cover", &cover, "--budget", "10"]).status.code(), Some(3));
}

#[test]
fn genus_of_covers() {
    let dir = Scratch::new("genus");
    let trivial =
        dir.write("trivial.json", r#"{"schema":"covertower/1","genus":2,"degree":1,"perms":[[1],[1],[1],[1]]}"#);
    assert_eq!(stdout(&run(&["genus", "--cover", &trivial])).trim(), "2");
    let cover = swap_a2(&dir);
    assert_eq!(stdout(&run(&["genus", "--cover", &cover])).trim(), "3");
}

#[test]
fn preservation_suite_reports_equal_columns() {
    let o = run(&["verify", "--suite", "theorem3", "--genus", "2", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split('\t').collect();
    let (b, a) =
        (header.iter().position(|h| *h == "before").unwrap(), header.iter().position(|h| *h == "after").unwrap());
    let mut rows = 0;
    for line in lines {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols[b], cols[a], "{line}");
        rows += 1;
    }
    assert!(rows > 0);
}

#[test]
fn vaut_round_trip() {
    let dir = Scratch::new("vaut");
    let cover = swap_a2(&dir);
    let z = stdout(&run(&["lift-cycle", "--cover", &cover, "--class", "1,0,0,0"]));
    let z_path = dir.write("z.json", &z);
    let v = stdout(&run(&["vaut-from-aut", "--name", "handle_swap", "--cover", &cover]));
    let v_path = dir.write("v.json", &v);
    let moved = run(&["vaut-act", "--vaut", &v_path, "--elem", &z_path]);
    assert_eq!(moved.status.code(), Some(0));
    let moved_doc: Value = serde_json::from_slice(&moved.stdout).unwrap();
    // the image lives over the cover where a1 swaps the sheets
    assert_eq!(moved_doc["cover"]["perms"], serde_json::json!([[2, 1], [1, 2], [1, 2], [1, 2]]));
    let other = dir.write("other.json", &moved_doc["cover"].to_string());
    let moved_path = dir.write("moved.json", &stdout(&moved));
    let back_v = dir.write("back.json", &stdout(&run(&["vaut-from-aut", "--name", "handle_swap", "--cover", &other])));
    let back = run(&["vaut-act", "--vaut", &back_v, "--elem", &moved_path]);
    let back_doc: Value = serde_json::from_slice(&back.stdout).unwrap();
    let original: Value = serde_json::from_str(&z).unwrap();
    assert_eq!(back_doc["cover"], original["cover"]);
    assert_eq!(back_doc["edges"], original["edges"]);
}

#[test]
fn char_refine_of_an_index_two_cover() {
    let dir = Scratch::new("char");
    let cover = swap_a2(&dir);
    let o = run(&["char-refine", "--cover", &cover]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["degree"], 16);
    let refined = dir.write("refined.json", &stdout(&o));
    assert_eq!(stdout(&run(&["is-char", "--cover", &refined])).trim(), "true");
    assert_eq!(stdout(&run(&["is-char", "--cover", &cover])).trim(), "false");
}

#[test]
fn orbit_output_is_reproducible() {
    let a = run(&["orbit", "--steps", "2000", "--targets", "64", "--seed", "3"]);
    let b = run(&["orbit", "--steps", "2000", "--targets", "64", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
