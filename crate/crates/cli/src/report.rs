//! JSON-producing commands: build, analyze, classify. Every command writes a
//! single JSON document (object keys sorted) to standard output; diagnostics
//! go to standard error.

use crate::spec::parse_spec;
use ccs_core::{aut, ccs, io, structure, Bounds, Error, Result};
use serde_json::json;
use std::path::Path;

pub fn build_table(spec_text: &str, bounds: &Bounds) -> Result<ccs_core::GroupTable> {
    let spec = parse_spec(spec_text).map_err(|e| Error::domain(e.to_string()))?;
    spec.build(bounds)
}

pub fn cmd_build(spec_text: &str, out: Option<&Path>, bounds: &Bounds) -> Result<serde_json::Value> {
    let table = build_table(spec_text, bounds)?;
    let doc = io::to_json(&table, None)?;
    if let Some(path) = out {
        io::save(&table, None, path)?;
        Ok(json!({"order": table.order(), "written": path.display().to_string()}))
    } else {
        Ok(doc)
    }
}

pub fn cmd_analyze(spec_text: &str, bounds: &Bounds) -> Result<serde_json::Value> {
    let g = build_table(spec_text, bounds)?;
    if g.order() > bounds.max_order {
        return Err(Error::SizeLimit {
            what: "analyze",
            size: g.order(),
            limit: bounds.max_order,
        });
    }
    let center = structure::center(&g);
    let derived = structure::derived_subgroup(&g);
    let frattini = structure::frattini(&g, bounds)?;
    let fitting = structure::fitting(&g, bounds)?;
    let normals = aut::normal_subgroups(&g, bounds)?;
    let chars = aut::characteristic_subgroups(&g, bounds)?;
    let aut_order = aut::automorphism_count(&g, bounds)?;
    let char_summary: Vec<serde_json::Value> = chars
        .iter()
        .map(|s| {
            json!({
                "order": s.len(),
                "cyclic": structure::is_cyclic_set(&g, s),
            })
        })
        .collect();
    Ok(json!({
        "order": g.order(),
        "exponent": g.exponent(),
        "center_order": center.len(),
        "derived_order": derived.len(),
        "frattini_order": frattini.len(),
        "fitting_order": fitting.len(),
        "nilpotent": structure::is_nilpotent(&g),
        "perfect": structure::is_perfect(&g),
        "supersolvable": structure::is_supersolvable(&g, bounds),
        "normal_count": normals.len(),
        "characteristic_count": chars.len(),
        "characteristic_summary": char_summary,
        "aut_order": aut_order,
    }))
}

pub fn cmd_classify(spec_text: &str, bounds: &Bounds) -> Result<serde_json::Value> {
    let g = build_table(spec_text, bounds)?;
    let report = ccs::classify_ccs(&g, bounds)?;
    Ok(report.to_json())
}
