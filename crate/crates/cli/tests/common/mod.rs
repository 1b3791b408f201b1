#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

pub fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

/// Runs the `cm` binary from the crate root with a clean `CM_TOL`.
pub fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cm"));
    cmd.current_dir(manifest_dir())
        .args(args)
        .env_remove("CM_TOL");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("cm binary runs")
}

const EX: &str = "tests/fixtures/example.json";

/// Golden reports for every command on the worked example.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("validate", &["validate", "--metric", EX, "--json"]),
    ("validate_text", &["validate", "--metric", EX]),
    (
        "dist",
        &[
            "dist",
            "--metric",
            EX,
            "--points",
            "tests/fixtures/example_points.json",
            "R0",
            "Q",
            "--json",
        ],
    ),
    (
        "dist_vertices",
        &["dist", "--metric", EX, "R0", "R1", "--json"],
    ),
    (
        "localize",
        &["localize", "--metric", EX, "--values", "3,11,3", "--json"],
    ),
    (
        "localize_off_quadric",
        &["localize", "--metric", EX, "--values", "1,9,1", "--json"],
    ),
    (
        "sphere_fit",
        &["sphere-fit", "--metric", EX, "--values", "1,9,1", "--json"],
    ),
    ("cm_matrix", &["cm-matrix", "--metric", EX, "--json"]),
    ("signature", &["signature", "--metric", EX, "--json"]),
    ("embed", &["embed", "--metric", EX, "--json"]),
    (
        "functorial_identity",
        &[
            "functorial",
            "--metric",
            EX,
            "--map",
            "tests/fixtures/identity_map.json",
            "--json",
        ],
    ),
    (
        "functorial_permutation",
        &[
            "functorial",
            "--metric",
            EX,
            "--map",
            "tests/fixtures/permutation_map.json",
            "--json",
        ],
    ),
    (
        "interpolate",
        &[
            "interpolate",
            "--values",
            "tests/fixtures/example_values.json",
            "--json",
        ],
    ),
];

pub struct ExitCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub env: &'static [(&'static str, &'static str)],
    pub code: i32,
}

pub const EXIT_CASES: &[ExitCase] = &[
    ExitCase {
        name: "malformed json",
        args: &["validate", "--metric", "tests/fixtures/malformed.json"],
        env: &[],
        code: 2,
    },
    ExitCase {
        name: "missing file",
        args: &["validate", "--metric", "tests/fixtures/absent.json"],
        env: &[],
        code: 2,
    },
    ExitCase {
        name: "bad number in values",
        args: &["localize", "--metric", EX, "--values", "1,x,2"],
        env: &[],
        code: 2,
    },
    ExitCase {
        name: "invalid CM_TOL",
        args: &["validate", "--metric", EX],
        env: &[("CM_TOL", "abc")],
        code: 2,
    },
    ExitCase {
        name: "asymmetric D",
        args: &["validate", "--metric", "tests/fixtures/asymmetric.json"],
        env: &[],
        code: 3,
    },
    ExitCase {
        name: "n disagrees with D",
        args: &["validate", "--metric", "tests/fixtures/wrong_n.json"],
        env: &[],
        code: 3,
    },
    ExitCase {
        name: "point not a weight",
        args: &[
            "dist",
            "--metric",
            EX,
            "--points",
            "tests/fixtures/bad_points.json",
            "R0",
            "X",
        ],
        env: &[],
        code: 3,
    },
    ExitCase {
        name: "map column sum",
        args: &[
            "functorial",
            "--metric",
            EX,
            "--map",
            "tests/fixtures/bad_column_map.json",
        ],
        env: &[],
        code: 3,
    },
    ExitCase {
        name: "asymmetric S",
        args: &[
            "interpolate",
            "--values",
            "tests/fixtures/asymmetric_values.json",
        ],
        env: &[],
        code: 3,
    },
    ExitCase {
        name: "unknown point",
        args: &["dist", "--metric", EX, "R0", "Z"],
        env: &[],
        code: 4,
    },
    ExitCase {
        name: "wrong value count",
        args: &["localize", "--metric", EX, "--values", "1,2"],
        env: &[],
        code: 4,
    },
    ExitCase {
        name: "map dimension",
        args: &[
            "functorial",
            "--metric",
            EX,
            "--map",
            "tests/fixtures/short_map.json",
        ],
        env: &[],
        code: 4,
    },
    ExitCase {
        name: "singular localize",
        args: &[
            "localize",
            "--metric",
            "tests/fixtures/zero.json",
            "--values",
            "0,0,0",
        ],
        env: &[],
        code: 5,
    },
    ExitCase {
        name: "singular sphere fit",
        args: &[
            "sphere-fit",
            "--metric",
            "tests/fixtures/zero.json",
            "--values",
            "1,2,3",
        ],
        env: &[],
        code: 5,
    },
];

/// Compares a command's stdout with its golden file. Set `CM_BLESS=1` to
/// rewrite the golden files instead.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let out = run(args, &[]);
    if !out.status.success() {
        return Err(format!("{name}: exit {:?}", out.status.code()));
    }
    let ext = if args.contains(&"--json") {
        "json"
    } else {
        "txt"
    };
    let path = manifest_dir()
        .join("tests/golden")
        .join(format!("{name}.{ext}"));
    if std::env::var_os("CM_BLESS").is_some() {
        std::fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read(&path).map_err(|e| format!("{name}: {e}"))?;
    if out.stdout != expected {
        return Err(format!(
            "{name}: output differs from {}\n{}",
            path.display(),
            String::from_utf8_lossy(&out.stdout)
        ));
    }
    let again = run(args, &[]);
    if again.stdout != out.stdout {
        return Err(format!("{name}: two runs differ"));
    }
    Ok(())
}

pub fn check_exit(case: &ExitCase) -> Result<(), String> {
    let out = run(case.args, case.env);
    let code = out.status.code();
    if code != Some(case.code) {
        return Err(format!(
            "{}: expected exit {}, got {code:?}",
            case.name, case.code
        ));
    }
    if out.stderr.is_empty() {
        return Err(format!("{}: no diagnostic on stderr", case.name));
    }
    Ok(())
}
