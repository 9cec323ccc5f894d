//! Browser bindings for the static demo page in `www/`.
//!
//! Each operation takes a graph in the DSL and returns an [`Output`] with a
//! text rendering and an SVG drawing. The `*_output` functions are plain Rust
//! and are what the native tests call.

mod svg;

use std::collections::HashMap;

use wasm_bindgen::prelude::*;

use hopfgraph::io::dsl::{self, NamedGraph};
use hopfgraph::io::emit::{emit_tensor, Format};
use hopfgraph::partition::{enumerate_covering_partitions, is_poset_compatible};
use hopfgraph::{coproduct, cut_coproduct, CoalgebraConfig, CoverVariant, ExternalPolicy, Mode, VertexId};

pub use svg::{graph_svg, tensor_svg, Style};

#[wasm_bindgen]
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    text: String,
    svg: String,
}

#[wasm_bindgen]
impl Output {
    #[wasm_bindgen(getter)]
    pub fn text(&self) -> String {
        self.text.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn svg(&self) -> String {
        self.svg.clone()
    }
}

fn parse(src: &str) -> Result<NamedGraph, String> {
    dsl::parse(src)
        .and_then(|d| d.to_named_graph())
        .map_err(|e| e.to_string())
}

fn variant(name: &str) -> Result<CoverVariant, String> {
    match name {
        "full" => Ok(CoverVariant::Full),
        "1pi" => Ok(CoverVariant::Locally1PI),
        "cf" => Ok(CoverVariant::PosetCompatible),
        "cf1pi" => Ok(CoverVariant::PosetCompatibleLocally1PI),
        other => Err(format!("unknown variant `{other}`")),
    }
}

fn mode(name: &str) -> Result<Mode, String> {
    match name {
        "bi" => Ok(Mode::Bialgebra),
        "hopf" => Ok(Mode::Hopf),
        other => Err(format!("unknown mode `{other}`")),
    }
}

fn externals(name: &str) -> Result<ExternalPolicy, String> {
    match name {
        "keep" => Ok(ExternalPolicy::Keep),
        "discard" => Ok(ExternalPolicy::Discard),
        other => Err(format!("unknown external policy `{other}`")),
    }
}

pub fn render_output(src: &str) -> Result<Output, String> {
    let ng = parse(src)?;
    let names = |v: VertexId| ng.vertex_name(v);
    let style = Style {
        names: Some(&names),
        colour: None,
    };
    Ok(Output {
        text: format!(
            "{} vertices, {} internal edges, {} external legs{}",
            ng.graph.vertex_count(),
            ng.graph.internal_count(),
            ng.graph.external_edges().len(),
            if ng.graph.is_cycle_free() { ", cycle-free" } else { "" }
        ),
        svg: graph_svg(&ng.graph, &style),
    })
}

pub fn coproduct_output(src: &str, variant_name: &str, mode_name: &str, ext: &str) -> Result<Output, String> {
    let ng = parse(src)?;
    let cfg = CoalgebraConfig::new(variant(variant_name)?, mode(mode_name)?, externals(ext)?);
    let t = coproduct(&ng.graph, cfg).map_err(|e| e.to_string())?;
    Ok(Output {
        text: emit_tensor(&t, Format::Latexish),
        svg: tensor_svg(&t),
    })
}

pub fn cut_coproduct_output(src: &str, ext: &str) -> Result<Output, String> {
    let ng = parse(src)?;
    let t = cut_coproduct(&ng.graph, externals(ext)?).map_err(|e| e.to_string())?;
    Ok(Output {
        text: emit_tensor(&t, Format::Latexish),
        svg: tensor_svg(&t),
    })
}

/// Lists the covering partitions; the drawing colours the vertices by the
/// blocks of partition number `index` (wrapping around).
pub fn covers_output(src: &str, variant_name: &str, index: usize) -> Result<Output, String> {
    let ng = parse(src)?;
    let g = &ng.graph;
    let partitions = enumerate_covering_partitions(g, variant(variant_name)?).map_err(|e| e.to_string())?;
    let chosen = if partitions.is_empty() { 0 } else { index % partitions.len() };
    let mut text = String::new();
    for (i, p) in partitions.iter().enumerate() {
        let blocks: Vec<String> = p
            .blocks()
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|&v| ng.vertex_name(v)).collect::<Vec<_>>().join(",")))
            .collect();
        let cf = if g.is_cycle_free() {
            match is_poset_compatible(g, p) {
                Ok(true) => "  poset-compatible",
                _ => "  contraction has a cycle",
            }
        } else {
            ""
        };
        let mark = if i == chosen { '*' } else { ' ' };
        text.push_str(&format!("{mark} {i}: {}{cf}\n", blocks.join(" ")));
    }
    let mut colour = HashMap::new();
    if !partitions.is_empty() {
        for (b, block) in partitions[chosen].blocks().iter().enumerate() {
            for &v in block {
                colour.insert(v, b);
            }
        }
    }
    let names = |v: VertexId| ng.vertex_name(v);
    let style = Style {
        names: Some(&names),
        colour: Some(&colour),
    };
    Ok(Output {
        text,
        svg: graph_svg(g, &style),
    })
}

#[wasm_bindgen]
pub fn render(src: &str) -> Result<Output, JsError> {
    render_output(src).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = coproduct)]
pub fn coproduct_js(src: &str, variant: &str, mode: &str, externals: &str) -> Result<Output, JsError> {
    coproduct_output(src, variant, mode, externals).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = cutCoproduct)]
pub fn cut_coproduct_js(src: &str, externals: &str) -> Result<Output, JsError> {
    cut_coproduct_output(src, externals).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn covers(src: &str, variant: &str, index: usize) -> Result<Output, JsError> {
    covers_output(src, variant, index).map_err(|e| JsError::new(&e))
}
