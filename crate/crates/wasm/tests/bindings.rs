use rlpart_wasm::{generate, recognize, solve};
use serde_json::Value;

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

const C5X3: &str = "15 15\n0 1\n1 2\n2 3\n3 4\n0 4\n5 6\n6 7\n7 8\n8 9\n5 9\n10 11\n11 12\n12 13\n13 14\n10 14\n";

#[test]
fn solve_modes() {
    let r = json(&solve(C5X3, "vertex", 2, 2, 2, false));
    assert_eq!(r["answer"], "yes");
    assert_eq!(r["size"], 1);
    let r = json(&solve(C5X3, "vertex", 2, 2, 2, true));
    assert!(r["size"].as_u64().unwrap() <= 2);
    let r = json(&solve(C5X3, "vertex", 2, 2, 0, false));
    assert_eq!(r["answer"], "no");
    assert!(json(&solve(C5X3, "edge", 2, 2, 1, false))["error"].is_string());
    assert!(json(&solve(C5X3, "vertex", 1, 1, 1, false))["error"].is_string());
    assert!(json(&solve("2 1\n0 5\n", "vertex", 2, 2, 1, false))["error"].is_string());
}

#[test]
fn recognize_c5() {
    let c5 = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
    assert_eq!(json(&recognize(c5, 2, 1))["answer"], "yes");
    assert_eq!(json(&recognize(c5, 1, 1))["answer"], "no");
}

#[test]
fn generate_then_solve() {
    let g = json(&generate(3, 20, 2, 2, 2, 0.4));
    assert_eq!(g["n"], 22);
    assert_eq!(g["planted_k"], 2);
    assert_eq!(generate(3, 20, 2, 2, 2, 0.4), generate(3, 20, 2, 2, 2, 0.4));
    let r = json(&solve(g["edge_list"].as_str().unwrap(), "vertex", 2, 2, 2, true));
    assert_eq!(r["answer"], "yes");
    assert!(json(&generate(1, 100, 2, 2, 0, 0.5))["error"].is_string());
}
