//! Runs the console session in the top-level README against the built binary.

use std::path::Path;
use std::process::Command;

struct Step {
    args: Vec<String>,
    stdout: String,
    code: i32,
}

fn session(readme: &str) -> Vec<Step> {
    let block = readme
        .split("```console\n")
        .nth(1)
        .and_then(|rest| rest.split("```").next())
        .expect("README has a console block");
    let mut steps: Vec<Step> = Vec::new();
    for line in block.lines() {
        if let Some(cmd) = line.strip_prefix("$ reglab ") {
            steps.push(Step {
                args: cmd.split_whitespace().map(String::from).collect(),
                stdout: String::new(),
                code: 0,
            });
        } else if let Some(code) = line.strip_prefix("[exit ").and_then(|c| c.strip_suffix(']')) {
            steps.last_mut().unwrap().code = code.parse().unwrap();
        } else {
            let step = steps.last_mut().expect("output before any command");
            step.stdout.push_str(line);
            step.stdout.push('\n');
        }
    }
    steps
}

#[test]
fn readme_console_session() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let readme = std::fs::read_to_string(root.join("README.md")).unwrap();
    let steps = session(&readme);
    assert!(steps.len() >= 10);
    for step in steps {
        let out = Command::new(env!("CARGO_BIN_EXE_reglab"))
            .args(&step.args)
            .current_dir(&root)
            .env_remove("REGLAB_CACHE")
            .output()
            .unwrap();
        let shown = step.args.join(" ");
        assert_eq!(out.status.code(), Some(step.code), "exit code of `reglab {shown}`");
        assert_eq!(
            String::from_utf8_lossy(&out.stdout),
            step.stdout,
            "stdout of `reglab {shown}`"
        );
    }
}
