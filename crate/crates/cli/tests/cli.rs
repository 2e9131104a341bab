use std::path::PathBuf;
use std::process::Command;

use serde_json::{json, Value};
use webcoord::{dispatch, Outcome, Status};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Outcome {
    let argv = std::iter::once("webcoord").chain(args.iter().copied());
    dispatch(argv).expect("not a help request")
}

fn ok_payload(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "{:?}", out.report);
    assert_eq!(out.report.status, Status::Ok);
    out.report.payload
}

#[test]
fn validate_reports_counts() {
    let p = ok_payload(&["validate", &data("torus.json")]);
    assert_eq!(p["triangles"], 2);
    assert_eq!(p["edges"], 3);
    assert_eq!(p["punctures"], 1);
    assert_eq!(p["genus"], 1);
    assert_eq!(p["dimension"], 8);
    assert!(p.get("dots").is_none());

    let p = ok_payload(&["validate", &data("torus.json"), "--dots"]);
    assert_eq!(
        p["dots"],
        json!(["aL", "aR", "bL", "bR", "cL", "cR", "tT0", "tT1"])
    );

    let out = run(&["validate", &data("self_folded.json")]);
    assert_eq!((out.code, out.report.status), (1, Status::Invalid));
    assert_eq!(out.report.payload, json!({}));
}

#[test]
fn coords_with_rhombus_tables() {
    let p = ok_payload(&["coords", &data("torus_loop.json"), "--rhombus"]);
    assert_eq!(p["coordinates"], json!([0, 0, 1, 2, 2, 1, 1, 2]));
    assert_eq!(p["rhombus"]["T0"], json!([1, 0, 0, 0, 0, 0, 0, 0, 0]));
    assert_eq!(p["rhombus"]["T1"], json!([0, 1, 1, 0, 0, 0, 0, 0, 0]));
    assert_eq!(p["nonelliptic"], true);

    let p = ok_payload(&["coords", &data("honeycomb_pair.json")]);
    assert_eq!(p["coordinates"], json!([1, 2, 1, 2, 1, 2, 3, 3]));
    assert!(p.get("rhombus").is_none());

    let out = run(&["coords", &data("incompatible.json")]);
    assert_eq!((out.code, out.report.status), (1, Status::Invalid));
}

#[test]
fn cone_check() {
    let p = ok_payload(&["cone-check", &data("torus.json"), "0,0,0,0,0,0,0,0"]);
    assert_eq!(p, json!({ "in_cone": true, "decomposition": [] }));

    let p = ok_payload(&["cone-check", &data("torus.json"), "1,2,1,2,1,2,3,3"]);
    assert_eq!(
        p["decomposition"],
        json!([
            { "triangle": "T0", "component": "H_out", "count": 1 },
            { "triangle": "T1", "component": "H_in", "count": 1 },
        ])
    );

    let out = run(&["cone-check", &data("torus.json"), "1,0,0,0,0,0,0,0"]);
    assert_eq!((out.code, out.report.status), (2, Status::NotInCone));
    assert_eq!(out.report.payload, json!({}));
    assert_eq!(out.report.diagnostics.len(), 2);

    for bad in ["1,2,3", "a,b", ""] {
        let out = run(&["cone-check", &data("torus.json"), bad]);
        assert_eq!((out.code, out.report.status), (1, Status::Invalid), "{bad}");
    }
}

#[test]
fn reconstruct_writes_web_document() {
    let dir = std::env::temp_dir().join(format!("webcoord-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("out.json");
    let p = ok_payload(&[
        "reconstruct",
        &data("torus.json"),
        "1,2,1,2,1,2,3,3",
        "-o",
        out.to_str().unwrap(),
    ]);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(written, p["web"]);
    assert_eq!(
        written["webs"]["T0"]["honeycomb"],
        json!({ "dir": "out", "n": 1 })
    );
    assert_eq!(written["webs"]["T1"]["honeycomb"], json!({ "dir": "in", "n": 1 }));

    // coords -> reconstruct -> coords is stable.
    let back = ok_payload(&["coords", out.to_str().unwrap()]);
    assert_eq!(back["coordinates"], json!([1, 2, 1, 2, 1, 2, 3, 3]));
    std::fs::remove_dir_all(&dir).unwrap();

    let out = run(&["reconstruct", &data("torus.json"), "1,0,0,0,0,0,0,0"]);
    assert_eq!((out.code, out.report.status), (2, Status::NotInCone));
}

#[test]
fn coords_reconstruct_coords_is_idempotent() {
    let points = ok_payload(&["enumerate", &data("torus.json"), "--max", "4"]);
    for point in points["points"].as_array().unwrap() {
        let v: Vec<String> = point.as_array().unwrap().iter().map(|x| x.to_string()).collect();
        let p = ok_payload(&["reconstruct", &data("torus.json"), &v.join(",")]);
        let dir = std::env::temp_dir().join(format!("webcoord-idem-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let file = dir.join("w.json");
        std::fs::write(&file, p["web"].to_string()).unwrap();
        let back = ok_payload(&["coords", file.to_str().unwrap()]);
        assert_eq!(&back["coordinates"], point);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}

#[test]
fn roundtrip() {
    let p = ok_payload(&["roundtrip", &data("torus_loop.json")]);
    assert_eq!(p["fellow_travelers"], true);
    assert_eq!(p["correspondence"], json!([[0, 0]]));

    let out = run(&["roundtrip", &data("two_loops_crossing.json")]);
    assert_eq!((out.code, out.report.status), (2, Status::Elliptic));
    assert_eq!(out.report.payload, json!({}));
}

#[test]
fn enumerate_is_independent_of_jobs() {
    let one = ok_payload(&["enumerate", &data("torus.json"), "--max", "3"]);
    assert_eq!(one["count"], 13);
    for jobs in ["2", "3", "5"] {
        let many = ok_payload(&["enumerate", &data("torus.json"), "--max", "3", "--jobs", jobs]);
        assert_eq!(many, one);
    }
    let out = run(&["enumerate", &data("torus.json"), "--max", "3", "--jobs", "0"]);
    assert_eq!(out.code, 1);
}

#[test]
fn trace_routes() {
    let p = ok_payload(&["trace", &data("torus_loop.json")]);
    let t = &p["travelers"];
    assert_eq!(t.as_array().unwrap().len(), 1);
    assert_eq!(t[0]["kind"], "loop");
    let edges: Vec<&str> = t[0]["route"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["edge"].as_str().unwrap())
        .collect();
    assert_eq!(edges, ["b", "b", "c", "c"]);

    let p = ok_payload(&["trace", &data("honeycomb_pair.json")]);
    let arcs = p["travelers"].as_array().unwrap();
    assert_eq!(arcs.len(), 3);
    assert!(arcs
        .iter()
        .all(|a| a["kind"] == "arc" && a["route"].as_array().unwrap().len() == 2));

    let p = ok_payload(&["trace", &data("two_loops_crossing.json")]);
    assert_eq!(p["crossings"], 2);
}

#[test]
fn confluence() {
    let p = ok_payload(&["confluence", &data("two_loops_crossing.json")]);
    assert_eq!(p["confluent"], true);
    assert_eq!(p["initial_squares"], 2);
    assert_eq!(p["terminals"], 2);
}

#[test]
fn unknown_subcommand_and_missing_files() {
    let out = run(&["frobnicate"]);
    assert_eq!((out.code, out.report.status), (1, Status::Invalid));
    let out = run(&[]);
    assert_eq!(out.code, 1);
    let out = run(&["validate", &data("missing.json")]);
    assert_eq!(out.code, 1);
    assert!(dispatch(["webcoord", "--help"]).is_err());
}

#[test]
fn binary_exit_codes_and_deterministic_output() {
    let bin = env!("CARGO_BIN_EXE_webcoord");
    let run_bin = |args: &[String]| Command::new(bin).args(args).output().unwrap();
    let args = vec![
        "coords".to_string(),
        data("torus_loop.json"),
        "--rhombus".to_string(),
    ];
    let a = run_bin(&args);
    let b = run_bin(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["status"], "ok");
    assert_eq!(report["diagnostics"], json!([]));

    let c = run_bin(&["cone-check".into(), data("torus.json"), "1,0,0,0,0,0,0,0".into()]);
    assert_eq!(c.status.code(), Some(2));
    let d = run_bin(&["nope".into()]);
    assert_eq!(d.status.code(), Some(1));
    let e = run_bin(&["roundtrip".into(), data("two_loops_crossing.json")]);
    assert_eq!(e.status.code(), Some(2));
    let report: Value = serde_json::from_slice(&e.stdout).unwrap();
    assert_eq!(report["status"], "elliptic");
}
