//! Browser bindings for the modlink toolchain.
//!
//! Three operations back the demo page: tracing a letter word through the
//! triangulated grid (SVG plus winding data), exploring the cutting
//! sequence of a rational slope, and evaluating the volume bounds of a
//! link.  Results cross the boundary as JSON strings; the SVG figure as
//! markup.  The fallible logic lives in plain `Result<_, String>` functions
//! so it also runs (and is tested) on native targets.

use wasm_bindgen::prelude::*;

use modlink::bounds::{
    best_lower_bound, family_bounds, lower_bound_distinct, lower_bound_maximal, VolumeBound,
};
use modlink::codeword::{exponent_sets, letters_from_str, parse_link, Letter};
use modlink::cutting::{
    check_admissible, lr_from_xy, sign_case_for_slope, xy_from_slope, SignCase,
};
use modlink::exponents::link_maximal_sets;
use modlink::subwords::{default_search_bound, find_linear_witness};
use modlink::walker::{
    deck_translation, nonzero_windings, render_svg, trace, RenderOptions, DEFAULT_START,
};

fn letters_string(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.as_char()).collect()
}

fn bound_json(b: &VolumeBound) -> serde_json::Value {
    serde_json::json!({
        "kind": b.kind.as_str(),
        "coefficient": b.coefficient_string(),
        "numeric": b.numeric,
    })
}

fn walk_svg_impl(letters: &str, half_cell_px: u32) -> Result<String, String> {
    let seq = letters_from_str(letters).map_err(|e| e.to_string())?;
    let path = trace(&seq, DEFAULT_START);
    let options = RenderOptions {
        half_cell_px: half_cell_px.max(4) as i64,
        margin_cells: 1,
    };
    Ok(render_svg(&path, &options))
}

fn walk_info_impl(letters: &str) -> Result<String, String> {
    let seq = letters_from_str(letters).map_err(|e| e.to_string())?;
    let path = trace(&seq, DEFAULT_START);
    let deck = deck_translation(&seq);
    let windings: Vec<serde_json::Value> = nonzero_windings(&path)
        .into_iter()
        .map(|((i, j), w)| serde_json::json!({ "center": [i, j], "winding": w }))
        .collect();
    let value = serde_json::json!({
        "letters": letters_string(&seq),
        "crossings": path.crossings.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        "closed": path.is_closed(),
        "deck_translation": deck.as_ref().ok().map(|&(x, y)| vec![x, y]),
        "deck_translation_error": deck.as_ref().err().map(|e| e.to_string()),
        "windings": windings,
    });
    Ok(value.to_string())
}

fn slope_info_impl(p: i64, q: i64) -> Result<String, String> {
    let word = xy_from_slope(p, q).map_err(|e| e.to_string())?;
    let report = check_admissible(&word);
    let case = sign_case_for_slope(p, q);
    let lr = match case {
        SignCase::Axis => vec![Letter::L, Letter::R],
        other => lr_from_xy(&word, other),
    };
    let witness = find_linear_witness(&lr, default_search_bound(lr.len()));
    let value = serde_json::json!({
        "slope": format!("{p}/{q}"),
        "xy_word": word.to_string(),
        "length": word.len(),
        "admissible": report.admissible,
        "isolated_letter": report.isolated_letter.map(|l| l.as_char().to_string()),
        "block_length_k": report.block_length_k,
        "sign_case": case.as_str(),
        "lr_word": letters_string(&lr),
        "linear_witness": witness.map(|w| format!("{}/{} ({})", w.slope.0, w.slope.1, w.case)),
    });
    Ok(value.to_string())
}

fn bounds_info_impl(link: &str) -> Result<String, String> {
    let link = parse_link(link).map_err(|e| e.to_string())?;
    let (a, b) = exponent_sets(&link);
    let (a_tilde, b_tilde) = link_maximal_sets(&link);
    let thm = lower_bound_maximal(a_tilde.cardinality(), b_tilde.cardinality());
    let cor = lower_bound_distinct(a.len(), b.len());
    let best = best_lower_bound(&link);
    let family = if link.component_count() == 1 {
        family_bounds(&link.components()[0]).ok()
    } else {
        None
    };
    let value = serde_json::json!({
        "components": link.components().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "distinct_l_exponents": a.iter().copied().collect::<Vec<_>>(),
        "distinct_r_exponents": b.iter().copied().collect::<Vec<_>>(),
        "max_l_exponent_set": a_tilde.values.iter().copied().collect::<Vec<_>>(),
        "max_r_exponent_set": b_tilde.values.iter().copied().collect::<Vec<_>>(),
        "lower_thm": bound_json(&thm),
        "lower_cor": bound_json(&cor),
        "best_lower": bound_json(&best),
        "family": family.map(|(lo, hi)| serde_json::json!({
            "lower": bound_json(&lo),
            "upper": bound_json(&hi),
        })),
    });
    Ok(value.to_string())
}

/// SVG figure of the path traced by `letters` from the default start edge.
#[wasm_bindgen]
pub fn walk_svg(letters: &str, half_cell_px: u32) -> Result<String, JsError> {
    walk_svg_impl(letters, half_cell_px).map_err(|e| JsError::new(&e))
}

/// Deck translation and winding data of the traced path, as JSON.
#[wasm_bindgen]
pub fn walk_info(letters: &str) -> Result<String, JsError> {
    walk_info_impl(letters).map_err(|e| JsError::new(&e))
}

/// Cutting sequence of slope `p/q`, its admissibility, and its `LR` image,
/// as JSON.
#[wasm_bindgen]
pub fn slope_info(p: i64, q: i64) -> Result<String, JsError> {
    slope_info_impl(p, q).map_err(|e| JsError::new(&e))
}

/// Exponent statistics and volume bounds of a comma-separated link, as
/// JSON.
#[wasm_bindgen]
pub fn bounds_info(link: &str) -> Result<String, JsError> {
    bounds_info_impl(link).map_err(|e| JsError::new(&e))
}
