//! WebAssembly bindings for a small in-browser explorer of `Z_n` with the
//! hyperoperation `x o y = {x·a·y : a ∈ A}`.
//!
//! Each export returns a JSON string (or plain text for the theorem table).
//! The `*_json` functions are the same operations without the bindings, so
//! they can be tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use hyperring::analysis::RingAnalysis;
use hyperring::classify::PrimeMode;
use hyperring::construct::{fundamental_ring, GammaReading, DEFAULT_GAMMA_CAP};
use hyperring::harness::{render_table, run_suite, SuiteOptions};
use hyperring::ring::{ordinary_zn, zn_with_a};
use hyperring::HyperRing;

/// Largest modulus the page accepts; hyperideal enumeration is capped at 16.
pub const MAX_N: usize = 16;

fn parse_a(n: usize, text: &str) -> Result<Vec<usize>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i64>()
                .map(|k| k.rem_euclid(n as i64) as usize)
                .map_err(|_| format!("not an integer: {s:?}"))
        })
        .collect()
}

/// `Z_n` with `A` given as a comma-separated list; an empty list gives the
/// ordinary ring.
pub fn build(n: usize, a: &str) -> Result<HyperRing, String> {
    if !(2..=MAX_N).contains(&n) {
        return Err(format!("n must be between 2 and {MAX_N}"));
    }
    let a_set = parse_a(n, a)?;
    let raw = if a_set.is_empty() { ordinary_zn(n) } else { zn_with_a(n, &a_set) };
    HyperRing::validate(&raw).map_err(|e| e.to_string())
}

fn table(ring: &HyperRing) -> Value {
    let n = ring.size();
    let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| ring.add(a, b)).collect()).collect();
    let hmul: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|a| (0..n).map(|b| ring.mul(a, b).to_vec()).collect())
        .collect();
    json!({ "name": ring.name(), "size": n, "add": add, "hmul": hmul })
}

/// Tables, element sets and the classification of every hyperideal.
pub fn explore_json(n: usize, a: &str, strict: bool) -> Result<String, String> {
    let ring = build(n, a)?;
    let analysis = RingAnalysis::new(&ring, MAX_N).map_err(|e| e.to_string())?;
    let mode = if strict { PrimeMode::Strict } else { PrimeMode::Relaxed };
    let out = json!({
        "tables": table(&ring),
        "report": analysis.report(mode),
        "standing": ring.identity().is_some() && analysis.all_c(),
    });
    Ok(out.to_string())
}

/// `R/γ*`: the classes and the tables of the ordinary quotient ring.
pub fn fundamental_json(n: usize, a: &str) -> Result<String, String> {
    let ring = build(n, a)?;
    let image = fundamental_ring(&ring, DEFAULT_GAMMA_CAP.max(MAX_N), GammaReading::Repetition)
        .map_err(|e| e.to_string())?;
    let classes: Vec<Vec<usize>> = image.classes.iter().map(|c| c.to_vec()).collect();
    Ok(json!({ "classes": classes, "projection": image.projection, "ring": table(&image.ring) }).to_string())
}

/// The theorem table for this one ring; `only` is a comma-separated id list
/// (empty for the whole registry).
pub fn theorems_text(n: usize, a: &str, only: &str) -> Result<String, String> {
    let ring = build(n, a)?;
    let ids: Vec<&str> = only.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let report = run_suite(std::slice::from_ref(&ring), &ids, &SuiteOptions::default());
    Ok(render_table(&report))
}

#[wasm_bindgen]
pub fn explore(n: usize, a: &str, strict: bool) -> Result<String, JsValue> {
    explore_json(n, a, strict).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn fundamental(n: usize, a: &str) -> Result<String, JsValue> {
    fundamental_json(n, a).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn theorems(n: usize, a: &str, only: &str) -> Result<String, JsValue> {
    theorems_text(n, a, only).map_err(|e| JsValue::from_str(&e))
}
