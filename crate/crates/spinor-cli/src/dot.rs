//! Graphviz output for combinatorial types: one undirected graph per type,
//! vertices A, B, C, ... and edges labelled with the intersection dimension,
//! styled like the simplex figures.

use spinor_core::comb::CombinatorialType;

fn vertex_name(i: usize) -> String {
    // A..Z then A1, B1, ...
    let letter = (b'A' + (i % 26) as u8) as char;
    if i < 26 {
        letter.to_string()
    } else {
        format!("{}{}", letter, i / 26)
    }
}

pub fn type_to_dot(ty: &CombinatorialType, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph \"{}\" {{\n", name));
    out.push_str("  layout=circo;\n");
    out.push_str("  node [shape=circle fontsize=12];\n");
    out.push_str("  edge [color=blue penwidth=2 fontsize=11];\n");
    for i in 0..ty.k {
        out.push_str(&format!("  {};\n", vertex_name(i)));
    }
    for (&(a, b), &e) in &ty.edge_labels {
        out.push_str(&format!(
            "  {} -- {} [label=\"{}\"];\n",
            vertex_name(a),
            vertex_name(b),
            e
        ));
    }
    out.push_str("}\n");
    out
}
