use std::process::{Command, Output};

fn petal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_petal"))
        .args(args)
        .output()
        .expect("the petal binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["radius", "--class", "lemniscate"], 0),
        (
            &["radius", "--class", "janowski", "--c", "1", "--d", "-1"],
            0,
        ),
        (
            &["radius", "--class", "cs-n", "--n", "2", "--alpha", "0.25"],
            0,
        ),
        (&["radius", "--class", "nonsense"], 2),
        (&["radius", "--class", "m-beta"], 2),
        (&["radius", "--class", "m-beta", "--beta", "0.5"], 2),
        (&["radius"], 2),
        (&["boundary", "--curve", "gamma3", "--samples", "16"], 0),
        (&["boundary", "--curve", "gamma9"], 2),
        (&["boundary", "--curve", "gamma0", "--samples", "3"], 2),
        (&["extremal", "--id", "f0", "--coeffs", "4"], 0),
        (&["extremal", "--id", "f0", "--eval", "0.6,0.9"], 2),
        (&["extremal", "--id", "f0"], 2),
        (
            &[
                "extremal", "--id", "cardioid", "--format", "svg", "--eval", "0.1,0",
            ],
            2,
        ),
        (&["verify", "--scope", "inclusions"], 0),
        (&["verify", "--scope", "nope"], 2),
        (&["inclusion-geometry"], 0),
        (&["frobnicate"], 2),
        (&["--tol", "0", "inclusion-geometry"], 2),
        (&["--help"], 0),
    ];
    for (args, code) in cases {
        let out = petal(args);
        assert_eq!(
            out.status.code(),
            Some(*code),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn radius_prints_the_result_record() {
    let out = petal(&["radius", "--class", "booth", "--alpha", "0"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["value"].as_f64().unwrap() - 0.881_374).abs() < 1e-6);
    assert_eq!(v["params"]["alpha"], 0.0);
    assert_eq!(v["sharp"], true);
}

#[test]
fn boundary_csv_and_inner_disk() {
    let out = stdout(&petal(&["boundary", "--curve", "gamma0", "--samples", "4"]));
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "theta_or_param,re,im");
    assert_eq!(rows[1], "0,1.88137358702,0");
    assert!(rows[3].starts_with("3.14159265359,0.11862641298,"));

    let disk = stdout(&petal(&["boundary", "--curve", "gamma6", "--samples", "8"]));
    for row in disk.lines().skip(1) {
        let v: Vec<f64> = row.split(',').map(|x| x.parse().unwrap()).collect();
        let r = ((v[1] - 1.0).powi(2) + v[2].powi(2)).sqrt();
        assert!((r - 0.881_373_587_02).abs() < 1e-10);
    }
}

#[test]
fn extremal_table_function() {
    let out = stdout(&petal(&[
        "extremal",
        "--id",
        "table1-f2",
        "--eval",
        "0.5,0",
    ]));
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[2], "0.55");
    let coeffs = stdout(&petal(&[
        "extremal",
        "--id",
        "exponential",
        "--coeffs",
        "3",
    ]));
    // z exp(Ein z) = z + z^2 + 3z^3/4 + ...
    let values: Vec<f64> = coeffs
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!((values[0] - 1.0).abs() < 1e-12);
    assert!((values[1] - 1.0).abs() < 1e-12);
    assert!((values[2] - 0.75).abs() < 1e-12);
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join(format!("petal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("geometry.csv");
    let p = path.to_str().unwrap();
    let written = petal(&["inclusion-geometry", "--format", "csv", "--out", p]);
    assert_eq!(written.status.code(), Some(0));
    assert!(written.stdout.is_empty());
    let direct = petal(&["inclusion-geometry", "--format", "csv"]);
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_scopes() {
    let radii = stdout(&petal(&["verify", "--scope", "radii"]));
    assert!(radii.lines().count() > 20);
    let lem = radii
        .lines()
        .find(|l| l.starts_with("radius:lemniscate,"))
        .unwrap();
    let diff: f64 = lem.split(',').nth(3).unwrap().parse().unwrap();
    assert!(diff < 1e-4);
    let geo = stdout(&petal(&["verify", "--scope", "geometry"]));
    for claim in ["conjugation_symmetry", "convexity", "outer_disk"] {
        assert!(geo.contains(&format!("geometry:{claim},")), "{claim}");
    }
    assert!(geo.lines().skip(1).all(|l| l.ends_with(",true")));
}
