//! Browser bindings. Every function takes plain values and returns a JSON
//! string; failures come back as `{"error": "..."}`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use rlpart::edge::solve_edge;
use rlpart::gen::{gen_rl_graph, plant_vertex_noise};
use rlpart::recognition::recognize_rl;
use rlpart::report::Report;
use rlpart::vertex::{decide_vertex_22, solve_vertex};
use rlpart::{parse_edge_list, Graph, RLParams};

/// Largest graph the page will try to solve.
pub const MAX_VERTICES: usize = 60;

#[cfg(target_arch = "wasm32")]
fn now_ms() -> f64 {
    js_sys::Date::now()
}

#[cfg(not(target_arch = "wasm32"))]
fn now_ms() -> f64 {
    use std::time::{SystemTime, UNIX_EPOCH};
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0.0, |d| d.as_secs_f64() * 1000.0)
}

#[derive(Serialize)]
struct ErrorJson {
    error: String,
}

fn to_json<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v),
        Err(error) => serde_json::to_string(&ErrorJson { error }),
    }
    .expect("serializable")
}

fn params(r: u32, l: u32) -> Result<RLParams, String> {
    RLParams::new(r as usize, l as usize).map_err(|e| e.to_string())
}

fn graph(edge_list: &str) -> Result<Graph, String> {
    let g = parse_edge_list(edge_list).map_err(|e| e.to_string())?;
    if g.n() > MAX_VERTICES {
        return Err(format!("the demo handles at most {MAX_VERTICES} vertices, got {}", g.n()));
    }
    Ok(g)
}

#[derive(Serialize)]
struct Generated {
    edge_list: String,
    n: usize,
    m: usize,
    planted_k: usize,
}

/// A planted (r,l)-graph on `n` vertices plus `plant` noise vertices.
#[wasm_bindgen]
pub fn generate(seed: u32, n: u32, r: u32, l: u32, plant: u32, p: f64) -> String {
    to_json((|| {
        let params = params(r, l)?;
        if (n + plant) as usize > MAX_VERTICES {
            return Err(format!("at most {MAX_VERTICES} vertices"));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err("p must lie in [0, 1]".into());
        }
        let base = gen_rl_graph(seed as u64, n as usize, params, p);
        let pg = plant_vertex_noise(&base, seed as u64, plant as usize);
        Ok(Generated {
            edge_list: pg.graph.to_edge_list(),
            n: pg.graph.n(),
            m: pg.graph.m(),
            planted_k: pg.planted_k,
        })
    })())
}

/// Deletion to an (r,l)-graph with budget `k`. `mode` is `vertex` or
/// `edge`; `any` asks vertex (2,2) for some solution within budget rather
/// than a minimum one.
#[wasm_bindgen]
pub fn solve(edge_list: &str, mode: &str, r: u32, l: u32, k: u32, any: bool) -> String {
    let g = match graph(edge_list) {
        Ok(g) => g,
        Err(e) => return to_json::<()>(Err(e)),
    };
    let params = match params(r, l) {
        Ok(p) => p,
        Err(e) => return to_json::<()>(Err(e)),
    };
    let k = k as usize;
    let t = now_ms();
    let elapsed = |t: f64| (now_ms() - t).max(0.0) as u64;
    match (mode, params.r, params.l) {
        ("vertex", 2, 2) if any => to_json(Ok(Report::from_result(decide_vertex_22(&g, k).as_ref(), elapsed(t)))),
        ("vertex", 2, 2) | ("vertex", 2, 1) | ("vertex", 1, 2) => to_json(
            solve_vertex(&g, params, k)
                .map(|r| Report::from_result(r.as_ref(), elapsed(t)))
                .map_err(|e| e.to_string()),
        ),
        ("edge", 2, 1) | ("edge", 1, 2) => to_json(
            solve_edge(&g, params, k)
                .map(|r| Report::from_result(r.as_ref(), elapsed(t)))
                .map_err(|e| e.to_string()),
        ),
        ("edge", 2, 2) => to_json::<()>(Err("edge (2,2) is an open problem".into())),
        _ => to_json::<()>(Err(format!("{mode} deletion to {params} is not supported"))),
    }
}

/// Is the graph an (r,l)-graph? Returns a report with an empty deletion.
#[wasm_bindgen]
pub fn recognize(edge_list: &str, r: u32, l: u32) -> String {
    let run = || -> Result<Report<usize>, String> {
        let g = graph(edge_list)?;
        let params = params(r, l)?;
        let t = now_ms();
        let p = recognize_rl(&g, params);
        Ok(Report::from_partition(p.as_ref(), (now_ms() - t).max(0.0) as u64))
    };
    to_json(run())
}
