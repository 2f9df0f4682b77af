use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

const H4: &str = "27,18,-9,-54\n8,2,-16,-46\n1,-2,-11,-26\n-3,0,0,0\n";

const H7: &str = "\
2,0,0,1,0,1,2
0,2,1,2,0,2,1
1,7,0,6,-4,6,2
1,25,-14,26,-28,24,1
2,106,-107,140,-158,117,2
2,504,-660,799,-861,600,1
1,2568,-3836,4577,-4685,3143,0
";

fn dharm(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dharm"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn dharm");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn error_record(out: &Output) -> serde_json::Value {
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    let line = err.lines().last().expect("error record on stderr");
    serde_json::from_str(line).expect("stderr is a JSON record")
}

fn temp_file(content: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

#[test]
fn check_exit_codes() {
    assert_eq!(code(&dharm(&["check"], H7)), 0);
    let out = dharm(&["check"], "1,0,0\n0,1,0\n0,0,1\n");
    assert_eq!(code(&out), 1);
    assert_eq!(error_record(&out)["code"], "check_failed");
}

#[test]
fn check_reads_file_argument() {
    let f = temp_file(H4);
    let out = dharm(&["check", f.path().to_str().unwrap()], "");
    assert_eq!(code(&out), 0);
}

#[test]
fn parse_errors_carry_location() {
    let out = dharm(&["check"], "1,2\n3\n");
    assert_eq!(code(&out), 2);
    let rec = error_record(&out);
    assert_eq!(rec["code"], "parse_error");
    assert_eq!(rec["location"]["line"], 2);
    assert!(rec["message"].as_str().unwrap().contains("ragged"));

    let out = dharm(&["check"], "1,0.5\n1,1\n");
    assert_eq!(code(&out), 2);
    let out = dharm(&["check"], "1,1/0\n1,1\n");
    assert_eq!(code(&out), 2);
    let out = dharm(&["check"], "1,?\n1,1\n");
    assert_eq!(code(&out), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&dharm(&["nope"], "")), 2);
    assert_eq!(code(&dharm(&[], "")), 2);
    assert_eq!(code(&dharm(&["basis"], "")), 2);
    let out = dharm(&["check", "/nonexistent/matrix.csv"], "");
    assert_eq!(code(&out), 2);
    assert_eq!(error_record(&out)["code"], "io_error");
}

#[test]
fn interpolate_verify_on_worked_matrix() {
    let out = dharm(&["interpolate", "--verify"], H4);
    assert_eq!(code(&out), 0);
    let records: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let degree = records
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["xexp"].as_u64().unwrap() + t["yexp"].as_u64().unwrap())
        .max()
        .unwrap();
    assert_eq!(degree, 6);
    assert_eq!(records[0]["num"], "-3");
    assert_eq!(records[0]["xexp"], 0);
}

#[test]
fn interpolate_then_eval_round_trip() {
    let out = dharm(&["interpolate", "--format", "text"], H7);
    assert_eq!(code(&out), 0);
    let poly = temp_file(&stdout(&out));
    let back = dharm(&["eval", "--size", "7", poly.path().to_str().unwrap()], "");
    assert_eq!(code(&back), 0);
    assert_eq!(stdout(&back), H7);
}

#[test]
fn interpolate_rejects_non_harmonic() {
    let out = dharm(&["interpolate"], "1,0,0\n0,1,0\n0,0,1\n");
    assert_eq!(code(&out), 1);
    assert_eq!(error_record(&out)["code"], "precondition_failed");
}

#[test]
fn bilinear_oracle() {
    let out = dharm(
        &["interpolate", "--oracle", "bilinear", "--format", "text"],
        H4,
    );
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("-3 + 11/2*y^1 + 11/2*x^1"));
    // interpolates, but is not discrete harmonic
    let out = dharm(&["interpolate", "--oracle", "bilinear", "--verify"], H4);
    assert_eq!(code(&out), 1);
    assert_eq!(error_record(&out)["code"], "verify_failed");
}

#[test]
fn complete_fills_interior() {
    let out = dharm(&["complete"], "8,2,-16\n1,?,-11\n-3,0,0\n");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "8,2,-16\n1,-2,-11\n-3,0,0\n");

    let holed: String = H7
        .lines()
        .enumerate()
        .map(|(i, line)| {
            let cells: Vec<&str> = line.split(',').collect();
            let n = cells.len();
            let row: Vec<&str> = cells
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    if i == 0 || j == 0 || i + 1 == n || j + 1 == n {
                        *c
                    } else {
                        "?"
                    }
                })
                .collect();
            row.join(",") + "\n"
        })
        .collect();
    let out = dharm(&["complete"], &holed);
    assert_eq!(stdout(&out), H7);
}

#[test]
fn complete_rejects_border_holes() {
    let out = dharm(&["complete"], "?,0,0\n0,?,0\n0,0,0\n");
    assert_eq!(code(&out), 2);
}

#[test]
fn laplacian_of_matrix_and_poly() {
    let out = dharm(&["laplacian"], H4);
    assert_eq!(stdout(&out), "0,0\n0,0\n");
    let out = dharm(&["laplacian"], "0,0,0\n0,1,0\n0,0,0\n");
    assert_eq!(stdout(&out), "4\n");
    let out = dharm(&["laplacian", "--poly", "--format", "text"], "1*x^2");
    assert_eq!(stdout(&out).trim(), "-2");
    let out = dharm(
        &["laplacian", "--poly", "--format", "text"],
        r#"[{"xexp":4,"yexp":0,"num":"1","den":"1"}]"#,
    );
    assert_eq!(stdout(&out).trim(), "-2 + -12*x^2");
}

#[test]
fn basis_lines() {
    let out = dharm(&["basis", "--degree", "9"], "");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 19);
    let out = dharm(&["basis", "--degree", "2", "--format", "text"], "");
    assert_eq!(stdout(&out), "1\n1*y^1\n1*x^1\n1*x^1*y^1\n-1*y^2 + 1*x^2\n");
}

#[test]
fn sandpile_verify_known_gfs() {
    for gf in ["i", "j", "i2-j2"] {
        let out = dharm(
            &[
                "sandpile-verify",
                "--size",
                "7",
                "--steps",
                "40",
                "--seed",
                "3",
                "--gf",
                gf,
            ],
            "",
        );
        assert_eq!(code(&out), 0, "gf {gf}");
        let text = stdout(&out);
        let phis: Vec<&str> = text
            .lines()
            .skip(1)
            .map(|l| l.rsplit(',').next().unwrap())
            .collect();
        assert_eq!(phis.len(), 41);
        assert!(phis.windows(2).all(|w| w[0] == w[1]));
    }
}

#[test]
fn sandpile_verify_detects_violation() {
    // A point mass at the centre is not conserved once that site topples.
    let mut rows = vec![vec!["0"; 5]; 5];
    rows[2][2] = "1";
    let csv: String = rows.iter().map(|r| r.join(",") + "\n").collect();
    let f = temp_file(&csv);
    let out = dharm(
        &[
            "sandpile-verify",
            "--size",
            "5",
            "--steps",
            "50",
            "--seed",
            "1",
            "--max-height",
            "7",
            "--gf",
            f.path().to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&out), 1);
    let rec = error_record(&out);
    assert_eq!(rec["code"], "check_failed");
    assert!(rec["location"]["step"].as_u64().unwrap() >= 1);
}
