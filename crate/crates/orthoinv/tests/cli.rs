use std::process::Command;

fn orthoinv(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_orthoinv")).args(args).output().unwrap()
}

#[test]
fn exit_codes() {
    let ok = orthoinv(&["verify", "--m", "1", "--q", "2", "--suite", "field"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("0 failed"));
    assert_eq!(orthoinv(&["verify", "--m", "1", "--q", "3"]).status.code(), Some(2));
    assert_eq!(orthoinv(&["verify", "--m", "4", "--q", "2"]).status.code(), Some(2));
    assert_eq!(orthoinv(&["verify", "--m", "1", "--q", "2", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(orthoinv(&["verify", "--m", "1"]).status.code(), Some(2));
}

#[test]
fn report_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let path = dir.path().join("report.json");
    let args = [
        "verify", "--m", "2", "--q", "2", "--suite", "generators-e", "--suite", "dickson",
        "--cache-dir", cache.to_str().unwrap(), "--report", path.to_str().unwrap(),
    ];
    let read = || -> serde_json::Value { serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap() };

    assert_eq!(orthoinv(&args).status.code(), Some(0));
    let first = read();
    assert_eq!(first["summary"]["failed"], 0);
    assert_eq!(first["summary"]["cache_hits"], 0);
    assert!(first["summary"]["cache_misses"].as_u64().unwrap() > 0);

    assert_eq!(orthoinv(&args).status.code(), Some(0));
    let second = read();
    assert_eq!(second["summary"]["cache_misses"], 0);
    assert!(second["summary"]["cache_hits"].as_u64().unwrap() > 0);
    let names = |v: &serde_json::Value| -> Vec<(String, String)> {
        v["checks"].as_array().unwrap().iter().map(|c| (c["name"].to_string(), c["status"].to_string())).collect()
    };
    assert_eq!(names(&first), names(&second));
}

#[test]
fn parallel_order_is_deterministic() {
    let run = |jobs: &str| {
        let out = orthoinv(&["verify", "--m", "1", "--q", "4", "--suite", "all", "--jobs", jobs]);
        assert_eq!(out.status.code(), Some(0));
        String::from_utf8_lossy(&out.stdout)
            .lines()
            .filter_map(|l| l.split_whitespace().nth(2).map(str::to_owned))
            .collect::<Vec<_>>()
    };
    assert_eq!(run("1"), run("4"));
}
