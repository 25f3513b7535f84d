//! Browser bindings: three operations for the static demo page in `www/`.
//!
//! Each binding is a thin wrapper over a plain function returning
//! `Result<String, String>`, so the logic also builds and tests natively.

use trisquare::polytope::polygon_qr;
use trisquare::realize::{realize, ComponentCache};
use trisquare::sample::{sample_batch, SampleConfig};
use trisquare::svg::{polygon_svg, scatter_svg};
use trisquare::{QPoint, Rat};
use wasm_bindgen::prelude::*;

/// Largest sample batch the page may request.
pub const MAX_SAMPLES: usize = 5_000;

pub fn polygon_figure(r: usize, scaled: bool) -> Result<String, String> {
    polygon_svg(r, scaled).map_err(|e| e.to_string())
}

/// Vertices of `Q^r` as JSON fraction pairs.
pub fn polygon_vertices(r: usize) -> Result<String, String> {
    let poly = polygon_qr(r).map_err(|e| e.to_string())?;
    serde_json::to_string(&poly.vertices).map_err(|e| e.to_string())
}

pub fn sample_figure(r: usize, n: usize, count: usize, seed: u64) -> Result<String, String> {
    if count > MAX_SAMPLES {
        return Err(format!("at most {MAX_SAMPLES} samples"));
    }
    let batch = sample_batch(&SampleConfig {
        r,
        n,
        count,
        seed,
        jobs: 1,
    })
    .map_err(|e| e.to_string())?;
    let points: Vec<QPoint> = batch.records.into_iter().map(|s| s.point).collect();
    scatter_svg(r, &points).map_err(|e| e.to_string())
}

/// Blueprint JSON for the point `(x, y)`, given as fraction strings.
pub fn realize_blueprint(r: usize, x: &str, y: &str) -> Result<String, String> {
    let x: Rat = x.trim().parse().map_err(|e: trisquare::Error| e.to_string())?;
    let y: Rat = y.trim().parse().map_err(|e: trisquare::Error| e.to_string())?;
    let cache = ComponentCache::new();
    let blueprint = realize(r, &QPoint::new(x, y), 0, &cache).map_err(|e| e.to_string())?;
    serde_json::to_string_pretty(&blueprint.to_json()).map_err(|e| e.to_string())
}

fn js(result: Result<String, String>) -> Result<String, JsValue> {
    result.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = polygonSvg)]
pub fn polygon_svg_js(r: usize, scaled: bool) -> Result<String, JsValue> {
    js(polygon_figure(r, scaled))
}

#[wasm_bindgen(js_name = polygonVertices)]
pub fn polygon_vertices_js(r: usize) -> Result<String, JsValue> {
    js(polygon_vertices(r))
}

#[wasm_bindgen(js_name = sampleSvg)]
pub fn sample_svg_js(r: usize, n: usize, count: usize, seed: u32) -> Result<String, JsValue> {
    js(sample_figure(r, n, count, seed as u64))
}

#[wasm_bindgen(js_name = realizePoint)]
pub fn realize_point_js(r: usize, x: &str, y: &str) -> Result<String, JsValue> {
    js(realize_blueprint(r, x, y))
}
