use std::process::{Command, Output};

fn hardsquare(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hardsquare"))
        .args(args)
        .env_remove("HARDSQUARE_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hardsquare(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    hardsquare(args).status.code().unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(
        stdout(&["count", "--mode", "ivs", "-m", "7", "-n", "7"]),
        "1280128950\n"
    );
    assert_eq!(
        stdout(&["count", "--mode", "ivs", "-m", "1", "-n", "1"]),
        "2\n"
    );
    assert_eq!(
        stdout(&["count", "--mode", "bivs", "-m", "2", "-n", "2"]),
        "35\n"
    );
}

#[test]
fn count_json_and_csv() {
    let json = stdout(&[
        "count", "--mode", "ivs", "-m", "10", "-n", "10", "--format", "json",
    ]);
    assert_eq!(
        json,
        "{\"mode\":\"ivs\",\"m\":10,\"n\":10,\"count\":\"2030049051145980050\"}\n"
    );
    let csv = stdout(&[
        "count", "--mode", "bivs", "-m", "3", "-n", "3", "--format", "csv",
    ]);
    assert_eq!(csv, "mode,m,n,count\nbivs,3,3,2021\n");
}

#[test]
fn genfunc_examples() {
    assert_eq!(
        stdout(&["genfunc", "--mode", "ivs", "-m", "2", "-n", "2"]),
        "1 + 4*z + 2*z^2\n"
    );
    assert_eq!(
        stdout(&["genfunc", "--mode", "bivs", "-m", "1", "-n", "1"]),
        "1 + x + y\n"
    );
    assert_eq!(
        stdout(&["genfunc", "--mode", "ivs", "-m", "1", "-n", "2"]),
        "1 + 2*z\n"
    );
    for mode in ["ivs", "bivs"] {
        let a = stdout(&["genfunc", "--mode", mode, "-m", "3", "-n", "4"]);
        let b = stdout(&[
            "genfunc",
            "--mode",
            mode,
            "-m",
            "3",
            "-n",
            "4",
            "--form",
            "corner-entry",
        ]);
        assert_eq!(a, b);
    }
}

#[test]
fn bounds_examples() {
    let out = stdout(&["bounds", "--mode", "ivs", "-m", "4", "-n", "4"]);
    assert_eq!(out, "count 1234\nlower 1.329391\nupper 1.560297\n");
    let out = stdout(&[
        "bounds",
        "--mode",
        "ivs",
        "-m",
        "1",
        "-n",
        "1",
        "--precision",
        "3",
    ]);
    assert_eq!(out, "count 2\nlower 1.189\nupper 2.000\n");
}

#[test]
fn table_csv_rows() {
    let out = stdout(&["table", "--max-n", "12", "--format", "csv"]);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "n,sigma,root_n2,root_n1sq");
    assert_eq!(lines[1], "1,2,2.000,1.189");
    assert_eq!(lines[8], "8,660647962955,1.530,1.399");
    assert_eq!(lines[12], "12,162481813349792588536582997,1.521,1.429");
    assert_eq!(lines.len(), 13);
}

#[test]
fn verify_reports() {
    let ivs = stdout(&["verify", "--mode", "ivs", "--max-area", "16"]);
    assert!(ivs.lines().all(|l| !l.starts_with("FAIL")));
    assert!(ivs.ends_with(" failed\n") && ivs.contains(", 0 failed"));

    let bivs = stdout(&["verify", "--mode", "bivs", "--max-area", "9"]);
    assert!(bivs.contains("PASS bivs projection Q(z,0)=P(z) 3x3"));

    let fekete = stdout(&["verify", "--mode", "ivs", "--max-area", "8", "--fekete"]);
    assert!(
        fekete.contains("PASS fekete: ivs Rows 1+2: a(3x2) = 17 <= 21 <= 41 = a(4x2)"),
        "{fekete}"
    );
}

#[test]
fn json_round_trips() {
    let cases: [&[&str]; 5] = [
        &[
            "count", "--mode", "bivs", "-m", "5", "-n", "5", "--format", "json",
        ],
        &[
            "genfunc", "--mode", "bivs", "-m", "2", "-n", "3", "--format", "json",
        ],
        &[
            "bounds", "--mode", "ivs", "-m", "6", "-n", "6", "--format", "json",
        ],
        &["table", "--max-n", "9", "--format", "json"],
        &[
            "verify",
            "--mode",
            "ivs",
            "--max-area",
            "4",
            "--format",
            "json",
        ],
    ];
    for args in cases {
        let out = stdout(args);
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            serde_json::to_string(&value).unwrap() + "\n",
            out,
            "{args:?}"
        );
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["count", "--mode", "ivs", "-m", "0", "-n", "3"]), 1);
    assert_eq!(code(&["count", "--mode", "tri", "-m", "3", "-n", "3"]), 1);
    assert_eq!(code(&["count", "--mode", "ivs", "-m", "3"]), 1);
    assert_eq!(code(&["nonsense"]), 1);
    assert_eq!(code(&["count", "--mode", "ivs", "-m", "40", "-n", "2"]), 2);
    assert_eq!(
        code(&["genfunc", "--mode", "bivs", "-m", "12", "-n", "2"]),
        2
    );
    assert_eq!(code(&["table", "--max-n", "40"]), 2);
    assert_eq!(
        code(&[
            "count",
            "--mode",
            "ivs",
            "-m",
            "16",
            "-n",
            "2",
            "--allow-large"
        ]),
        0
    );
    assert_eq!(code(&["--version"]), 0);
}

#[test]
fn thread_count_from_env_and_flag() {
    let args = ["table", "--max-n", "10", "--format", "csv"];
    let base = stdout(&args);
    let env = Command::new(env!("CARGO_BIN_EXE_hardsquare"))
        .args(args)
        .env("HARDSQUARE_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(env.stdout).unwrap(), base);

    // The flag wins over a bad environment value.
    let flag = Command::new(env!("CARGO_BIN_EXE_hardsquare"))
        .args(["--threads", "2"])
        .args(args)
        .env("HARDSQUARE_THREADS", "0")
        .output()
        .unwrap();
    assert!(flag.status.success());
    assert_eq!(String::from_utf8(flag.stdout).unwrap(), base);

    let bad = Command::new(env!("CARGO_BIN_EXE_hardsquare"))
        .args(args)
        .env("HARDSQUARE_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
