use std::path::PathBuf;
use std::process::Command;

/// Every example builds alongside the tests; run each and require success.
#[test]
fn examples_run() {
    let bin = PathBuf::from(env!("CARGO_BIN_EXE_triality"));
    let dir = bin.parent().unwrap().join("examples");
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples");
    let mut names: Vec<String> = std::fs::read_dir(&src)
        .unwrap()
        .filter_map(|e| e.ok()?.path().file_stem()?.to_str().map(String::from))
        .collect();
    names.sort();
    assert!(names.len() >= 8);
    for name in names {
        let exe = dir.join(&name);
        if !exe.exists() {
            eprintln!("skipping {name}: not built in this profile");
            continue;
        }
        let o = Command::new(&exe).output().unwrap();
        assert!(o.status.success(), "{name}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stdout.is_empty(), "{name} printed nothing");
    }
}
