//! Browser bindings: each export takes plain strings and returns a JSON
//! document, so the page needs no generated type definitions.

use burnhom::burning::{burning_map, extremal_path_report, filtration, ExtremalKind};
use burnhom::complex::configuration_space;
use burnhom::format::parse_graph;
use burnhom::graph::classify;
use burnhom::{enumerate_burnings, homology, validate_burning, Coefficients, Graph, SourceSequence};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest graph the page will enumerate.
pub const MAX_VERTICES: usize = 9;

fn load(graph: &str) -> Result<Graph, String> {
    let g = parse_graph(graph).map_err(|e| e.to_string())?;
    if g.vertex_count() > MAX_VERTICES {
        return Err(format!("the demo handles at most {MAX_VERTICES} vertices, got {}", g.vertex_count()));
    }
    Ok(g)
}

fn edges(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().iter().map(|&(u, v)| [u, v]).collect()
}

/// Structure, burning number, configuration space and its homology.
pub fn analyze_graph(graph: &str) -> Result<Value, String> {
    let g = load(graph)?;
    let report = classify(&g);
    let burnings = enumerate_burnings(&g);
    let complex = configuration_space(&g);
    let groups: Vec<String> = homology(&complex, false, Coefficients::Integers).iter().map(ToString::to_string).collect();
    let facets: Vec<&[usize]> = complex.facets().iter().map(|f| f.as_slice()).collect();
    Ok(json!({
        "bipartite": report.bipartite,
        "burning_count": burnings.len(),
        "burning_number": burnings.iter().map(|b| b.end_time()).min(),
        "components": report.components.len(),
        "connected": report.connected,
        "edges": edges(&g),
        "facets": facets,
        "homology": groups,
        "homomorphic_burnings": burnings.iter().filter(|b| burning_map(&g, b).is_homomorphism()).count(),
        "tree": report.tree,
        "vertex_count": g.vertex_count(),
    }))
}

/// Step-by-step burning for a source sequence such as `0,3`.
pub fn burn_sequence(graph: &str, sources: &str) -> Result<Value, String> {
    let g = load(graph)?;
    let s: SourceSequence = sources.parse().map_err(|e| format!("bad source sequence: {e}"))?;
    let steps: Vec<Vec<usize>> =
        filtration(&g, &s).map_err(|e| e.to_string())?.iter().map(|st| st.burned_now.as_slice().to_vec()).collect();
    let base = json!({ "edges": edges(&g), "sources": s.as_slice(), "steps": steps, "vertex_count": g.vertex_count() });
    let mut out = base.as_object().cloned().unwrap_or_default();
    match validate_burning(&g, &s) {
        Ok(b) => {
            out.insert("valid".into(), json!(true));
            out.insert("lambda".into(), json!(b.lambda()));
            out.insert("end_time".into(), json!(b.end_time()));
            out.insert("is_homomorphism".into(), json!(burning_map(&g, &b).is_homomorphism()));
        }
        Err(e) => {
            out.insert("valid".into(), json!(false));
            out.insert("error".into(), json!(e.to_string()));
        }
    }
    Ok(Value::Object(out))
}

/// Extremal path length and witness for a kind such as `max-n-for-T`.
pub fn extremal_witness(kind: &str, param: usize) -> Result<Value, String> {
    let kind: ExtremalKind = kind.parse()?;
    if !(1..=4).contains(&param) {
        return Err("the demo accepts parameters 1 to 4".into());
    }
    let r = extremal_path_report(kind, param).ok_or_else(|| format!("no witness for {kind} at {param}"))?;
    Ok(json!({
        "closed_form": r.closed_form,
        "end_time": r.witness.end_time(),
        "is_homomorphism": r.is_homomorphism,
        "kind": kind.to_string(),
        "lambda": r.witness.lambda(),
        "n": r.n,
        "sources": r.witness.sources().as_slice(),
    }))
}

fn to_js(result: Result<Value, String>) -> Result<String, JsError> {
    result.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn analyze(graph: &str) -> Result<String, JsError> {
    to_js(analyze_graph(graph))
}

#[wasm_bindgen]
pub fn burn(graph: &str, sources: &str) -> Result<String, JsError> {
    to_js(burn_sequence(graph, sources))
}

#[wasm_bindgen]
pub fn witness(kind: &str, param: usize) -> Result<String, JsError> {
    to_js(extremal_witness(kind, param))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyzes_the_five_vertex_path() {
        let v = analyze_graph("path:5").unwrap();
        assert_eq!(v["burning_number"], 3);
        assert_eq!(v["facets"], json!([[0, 2, 4], [0, 3], [1, 3], [1, 4]]));
        assert_eq!(v["homology"], json!(["Z", "Z", "0"]));
        assert_eq!(v["tree"], true);
    }

    #[test]
    fn burns_step_by_step() {
        let v = burn_sequence("path:3", "0,2").unwrap();
        assert_eq!(v["valid"], true);
        assert_eq!(v["lambda"], json!([1, 2, 2]));
        assert_eq!(v["steps"], json!([[0], [0, 1, 2], [0, 1, 2]]));
        let bad = burn_sequence("path:3", "0,1").unwrap();
        assert_eq!(bad["valid"], false);
        assert!(bad["error"].is_string());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(analyze_graph("wheel:4").is_err());
        assert!(analyze_graph("path:10").is_err());
        assert!(burn_sequence("path:3", "0,9").is_err());
        assert!(extremal_witness("max-n-for-T", 0).is_err());
        assert!(extremal_witness("longest", 2).is_err());
    }

    #[test]
    fn witnesses() {
        let v = extremal_witness("max-n-for-T", 3).unwrap();
        assert_eq!(v["n"], 9);
        assert_eq!(v["sources"], json!([2, 6, 8]));
    }
}
