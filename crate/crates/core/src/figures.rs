//! Regenerates the figure panels as DOT files.
//!
//! Forcing arcs are dashed and domination-forced vertices boxed. The
//! construction panels show the forcing cycles, then `𝓗(D)` in bold over
//! them, then the finished digraph.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::digraph::Digraph;
use crate::forcing::{build_h_digraph, forcing_arcs};
use crate::gallery;
use crate::io::{to_dot, DotStyle};
use crate::trees::enumerate_tree_family;

/// Name and DOT text of every panel, in a fixed order.
pub fn figure_panels() -> Vec<(String, String)> {
    let mut panels = Vec::new();
    for (i, d) in gallery::order_at_most_two_connected_locatable().iter().enumerate() {
        let name = format!("small_{i}");
        panels.push((name.clone(), to_dot(d, &DotStyle::forcing(&name, d))));
    }
    for (name, d) in [
        ("pendant_loop_at_b", gallery::pendant_with_loop_at_b()),
        ("pendant_no_loop_at_b", gallery::pendant_without_loop_at_b()),
    ] {
        let labels = ["a", "b", "c"].map(String::from).to_vec();
        panels.push((name.to_string(), to_dot(&d, &DotStyle::forcing(name, &d).with_labels(labels))));
    }

    let d = gallery::construct_example();
    let labels = gallery::construct_labels();
    let cycles = Digraph::from_arcs(d.order(), forcing_arcs(&d)).expect("arcs of d");
    let name = "construct_forcing";
    panels.push((name.into(), to_dot(&cycles, &DotStyle::forcing(name, &d).with_labels(labels.clone()))));
    let h = build_h_digraph(&d);
    let mut overlay = cycles.clone();
    for &(u, v) in &h.arcs {
        overlay.add_arc(u, v);
    }
    let name = "construct_h";
    let style = DotStyle { bold: h.arcs.clone(), ..DotStyle::forcing(name, &d).with_labels(labels.clone()) };
    panels.push((name.into(), to_dot(&overlay, &style)));
    let name = "construct_final";
    panels.push((name.into(), to_dot(&d, &DotStyle::forcing(name, &d).with_labels(labels))));

    let family = enumerate_tree_family(4).expect("order 4 is under the cap");
    for catalog in &family {
        for (i, m) in catalog.members.iter().enumerate() {
            let name = format!("tree_n{}_{i}", catalog.order);
            panels.push((name.clone(), to_dot(&m.digraph, &DotStyle::forcing(&name, &m.digraph))));
        }
    }
    panels
}

/// Writes every panel to `dir/<name>.dot` and returns the written paths.
pub fn regenerate_figures(dir: &Path) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    figure_panels()
        .into_iter()
        .map(|(name, dot)| {
            let path = dir.join(format!("{name}.dot"));
            fs::write(&path, dot)?;
            Ok(path)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn panel_inventory() {
        let panels = figure_panels();
        let count = |prefix: &str| panels.iter().filter(|(n, _)| n.starts_with(prefix)).count();
        assert_eq!(count("small_"), 4);
        assert_eq!(count("pendant_"), 2);
        assert_eq!(count("construct_"), 3);
        assert_eq!(count("tree_n4_"), 10);
        assert_eq!(count("tree_"), 1 + 3 + 4 + 10);
    }

    #[test]
    fn construction_panels_mark_h_arcs() {
        let panels = figure_panels();
        let h = &panels.iter().find(|(n, _)| n == "construct_h").unwrap().1;
        assert!(h.contains("style=bold"));
        assert!(h.contains("style=dashed"));
        assert!(h.contains("label=1"));
    }
}
