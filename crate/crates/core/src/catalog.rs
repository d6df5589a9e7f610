//! Built-in graphs. Each is stored as edge-list text and goes through the
//! ordinary parser on load.

use crate::error::{Error, Result};
use crate::graph::{parse_graph, Graph};

const DATA: &[(&str, &str)] = &[
    ("k4", include_str!("../data/k4.txt")),
    ("k4_minus_e", include_str!("../data/k4_minus_e.txt")),
    ("k9", include_str!("../data/k9.txt")),
    ("k44", include_str!("../data/k44.txt")),
    ("g2_ex12", include_str!("../data/g2_ex12.txt")),
    ("g3_ex13", include_str!("../data/g3_ex13.txt")),
    ("cube", include_str!("../data/cube.txt")),
    ("octahedron", include_str!("../data/octahedron.txt")),
    ("dodecahedron", include_str!("../data/dodecahedron.txt")),
    ("icosahedron", include_str!("../data/icosahedron.txt")),
    ("frucht", include_str!("../data/frucht.txt")),
    ("petersen", include_str!("../data/petersen.txt")),
    ("c10_13", include_str!("../data/c10_13.txt")),
    ("c12_13", include_str!("../data/c12_13.txt")),
    ("c10_12", include_str!("../data/c10_12.txt")),
    ("shrikhande", include_str!("../data/shrikhande.txt")),
    ("rook4", include_str!("../data/rook4.txt")),
];

/// Catalog identifiers in a fixed order.
pub fn catalog_names() -> impl Iterator<Item = &'static str> {
    DATA.iter().map(|&(n, _)| n)
}

pub fn catalog(name: &str) -> Result<Graph> {
    let (_, text) = DATA
        .iter()
        .find(|&&(n, _)| n == name)
        .ok_or_else(|| Error::UnknownGraph(name.to_string()))?;
    Ok(parse_graph(text)?.with_name(name))
}
