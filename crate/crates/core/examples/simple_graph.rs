//! The simple graph: structure, planarity and export.

use braidforge::graph::{self, GraphFormat, Planarity};

fn main() -> braidforge::Result<()> {
    for n in 2..=7 {
        let g = graph::build_graph(n)?;
        let verdict = match graph::is_planar(&g) {
            Planarity::Planar(_) => "planar".to_string(),
            Planarity::NonPlanar(w) => format!("contains a {} subdivision", w.kind),
        };
        println!(
            "n = {n}: {} vertices, {} edges, levels {:?}, {verdict}",
            g.vertex_count(),
            g.edge_count(),
            g.level_sizes()
        );
    }
    let g7 = graph::build_graph(7)?;
    println!(
        "drawn K3,3 confirmed: {}",
        graph::verify_drawn_k33(&g7)?.holds
    );
    print!(
        "{}",
        graph::export_graph(&graph::build_graph(3)?, GraphFormat::Dot)
    );
    Ok(())
}
