//! Browser bindings for the mfalling demo page.
//!
//! Each export takes plain numbers and text and returns a JSON string, so the
//! page needs no generated TypeScript types. Errors come back as `{"error": ...}`.

use mfalling::bijections::{composite_phi_n_traced, stockhofe_keith_traced, Trace};
use mfalling::classes::{class_of_weight, ClassSpec};
use mfalling::{Modulus, Partition, Result};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Debug, Serialize)]
pub struct Frame {
    pub label: String,
    pub parts: Vec<u32>,
    pub ferrers: String,
}

#[derive(Debug, Serialize)]
pub struct MapResult {
    pub input: Vec<u32>,
    pub output: Vec<u32>,
    pub weight: u64,
    pub frames: Vec<Frame>,
}

#[derive(Debug, Serialize)]
pub struct CountRow {
    pub weight: u32,
    pub falling: usize,
    pub lecture_hall: usize,
}

/// Reads `"5,5,4"` or `"5 5 4"` as a partition in nonincreasing order.
pub fn parse_parts(text: &str) -> Result<Partition> {
    let parts = text
        .split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u32>()
                .map_err(|_| mfalling::Error::Usage(format!("not a nonnegative integer: {s:?}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    Partition::new(parts)
}

fn map_result(input: &Partition, output: Partition, trace: Trace, m: Modulus) -> MapResult {
    let frames = trace
        .steps
        .into_iter()
        .map(|s| Frame {
            ferrers: s.partition.render_modular_ferrers(m),
            parts: s.partition.parts().to_vec(),
            label: s.label,
        })
        .collect();
    MapResult {
        input: input.parts().to_vec(),
        weight: output.weight(),
        output: output.parts().to_vec(),
        frames,
    }
}

/// The map from m-regular to m-distinct partitions, frame by frame.
pub fn sk_map(parts: &str, m: u32) -> Result<MapResult> {
    let m = Modulus::new(m)?;
    let lambda = parse_parts(parts)?;
    let (mu, trace) = stockhofe_keith_traced(&lambda, m)?;
    Ok(map_result(&lambda, mu, trace, m))
}

/// The m-falling lecture hall bijection of order `n`, frame by frame.
pub fn falling_map(parts: &str, m: u32, n: u32) -> Result<MapResult> {
    let m = Modulus::new(m)?;
    let lambda = parse_parts(parts)?;
    let (mu, trace) = composite_phi_n_traced(&lambda, m, n, None)?;
    Ok(map_result(&lambda, mu, trace, m))
}

/// Per-weight sizes of the bounded m-falling class and the m-falling lecture hall class.
pub fn count_table(m: u32, n: u32, max_weight: u32) -> Result<Vec<CountRow>> {
    let m = Modulus::new(m)?;
    let falling = ClassSpec::FallingBounded { m, n };
    let lecture_hall = ClassSpec::FallingLectureHall { m, n };
    (0..=max_weight)
        .map(|weight| {
            Ok(CountRow {
                weight,
                falling: class_of_weight(&falling, weight)?.len(),
                lecture_hall: class_of_weight(&lecture_hall, weight)?.len(),
            })
        })
        .collect()
}

fn to_json<T: Serialize>(result: Result<T>) -> String {
    match result {
        Ok(value) => serde_json::to_string(&value).expect("plain data serializes"),
        Err(e) => serde_json::json!({ "error": e.to_string() }).to_string(),
    }
}

#[wasm_bindgen(js_name = skMap)]
pub fn sk_map_json(parts: &str, m: u32) -> String {
    to_json(sk_map(parts, m))
}

#[wasm_bindgen(js_name = fallingMap)]
pub fn falling_map_json(parts: &str, m: u32, n: u32) -> String {
    to_json(falling_map(parts, m, n))
}

#[wasm_bindgen(js_name = countTable)]
pub fn count_table_json(m: u32, n: u32, max_weight: u32) -> String {
    to_json(count_table(m, n, max_weight))
}
