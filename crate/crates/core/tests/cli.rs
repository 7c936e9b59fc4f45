use std::process::Command;

use serde_json::Value;

fn nok(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nok-width"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let doc = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), doc, stdout)
}

#[test]
fn roots_lists_positive_roots() {
    let (code, doc, _) = nok(&["roots", "--type", "A", "--rank", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["schema"], "nok-width/1");
    assert_eq!(doc["output"]["positive_roots"].as_array().unwrap().len(), 3);
    assert_eq!(doc["output"]["hasse_edges"].as_array().unwrap().len(), 2);

    let (code, doc, _) = nok(&["roots", "--type", "G", "--rank", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["output"]["num_positive_roots"], 6);

    let (code, doc, _) = nok(&["roots", "--type", "D", "--rank", "3"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "invalid-type");
}

#[test]
fn width_command() {
    let (code, doc, _) = nok(&["width", "--type", "A2", "--lambda", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["output"]["width"], "1");
    assert_eq!(doc["output"]["minimizing_roots"].as_array().unwrap().len(), 2);

    let (_, doc, _) = nok(&["width", "--type", "A2", "--lambda", "1/2,1/2"]);
    assert_eq!(doc["output"]["width"], "1/2");
    assert_eq!(doc["output"]["scale"], "2");

    let (_, doc, _) = nok(&["width", "--type", "A", "--rank", "3", "--lambda", "1,2,1"]);
    assert_eq!(doc["output"]["width"], "1");

    // ε = (3, 1, 0) gives λ = (2, 1)
    let (_, doc, _) = nok(&["width", "--type", "A2", "--epsilon", "3,1,0"]);
    assert_eq!(doc["input"]["lambda"], serde_json::json!(["2", "1"]));
    assert_eq!(doc["output"]["width"], "1");

    let (code, doc, _) = nok(&["width", "--type", "A2", "--lambda", "0,0"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "zero-weight");
}

#[test]
fn essential_command() {
    let (code, doc, _) = nok(&["essential", "--type", "A2", "--lambda", "1,1", "--ordering", "good"]);
    assert_eq!(code, 0);
    assert_eq!(doc["output"]["cardinality"], 8);
    assert_eq!(doc["output"]["matches_weyl_dim"], true);

    let (_, doc, _) = nok(&["essential", "--type", "A1", "--lambda", "3"]);
    assert_eq!(doc["output"]["tuples"], serde_json::json!([[0], [1], [2], [3]]));

    let (_, doc, _) = nok(&["essential", "--type", "A2", "--lambda", "1,0"]);
    assert_eq!(doc["output"]["tuples"], serde_json::json!([[0, 0], [1, 0], [0, 1]]));

    let (code, doc, _) = nok(&[
        "essential", "--type", "A2", "--lambda", "1,1", "--ordering", "word", "--word", "1,2,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["output"]["cardinality"], 8);
    assert_eq!(doc["output"]["enumeration"]["provenance"], "word-suffix");

    let (code, _, _) = nok(&["essential", "--type", "A2", "--lambda", "1,1", "--ordering", "word", "--word", "1,2"]);
    assert_eq!(code, 2);
    let (code, _, _) = nok(&["essential", "--type", "A2", "--lambda", "1,1", "--ordering", "word"]);
    assert_eq!(code, 2);
    let (code, doc, _) = nok(&["essential", "--type", "B3", "--lambda", "2,2,2"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "too-large");
}

#[test]
fn gamma_command() {
    let (code, doc, _) = nok(&["gamma", "--type", "A1", "--lambda", "1", "--level", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["output"]["points"], serde_json::json!([[2, [0]], [2, [1]], [2, [2]]]));
    let (_, doc, _) = nok(&["gamma", "--type", "A2", "--lambda", "1,1", "--level", "2"]);
    assert_eq!(doc["output"]["cardinality"], 27);
}

#[test]
fn verify_command() {
    let (code, doc, _) = nok(&["verify", "--type", "A2", "--lambda", "1,1", "--construction", "all"]);
    assert_eq!(code, 0);
    assert_eq!(doc["output"]["reports"].as_array().unwrap().len(), 3);
    assert_eq!(doc["output"]["passed"], true);

    let (code, _, _) = nok(&["verify", "--type", "G2", "--lambda", "1,1", "--construction", "telescope"]);
    assert_eq!(code, 2);
    let (code, _, _) = nok(&["verify", "--type", "B2", "--lambda", "1,0", "--construction", "convex"]);
    assert_eq!(code, 2);

    let (code, doc, _) = nok(&["verify", "--type", "B2", "--lambda", "1,0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["output"]["reports"].as_array().unwrap().len(), 1);
    assert_eq!(doc["output"]["skipped"].as_array().unwrap().len(), 2);

    let (code, doc, _) = nok(&["verify", "--type", "A2", "--lambda", "2,1", "--construction", "convex", "--word", "1,2,1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["output"]["reports"][0]["vertices"][1]["tuple"], serde_json::json!([1, 1, 1]));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["essential", "--type", "B2", "--lambda", "1,1", "--ordering", "telescope"];
    let (_, _, a) = nok(&args);
    let (_, _, b) = nok(&args);
    assert_eq!(a, b);
    let (_, doc, _) = nok(&["--timing", "width", "--type", "A2", "--lambda", "1,1"]);
    assert!(doc["timing"]["elapsed_ms"].is_u64());
}

#[test]
fn pretty_output_parses_to_the_same_document() {
    let (_, compact, _) = nok(&["roots", "--type", "B2"]);
    let (_, pretty, text) = nok(&["--pretty", "roots", "--type", "B2"]);
    assert!(text.contains('\n'));
    assert_eq!(compact, pretty);
}
