use std::collections::BTreeMap;
use std::io::{self, Write};

use coxarr::bruhat;
use coxarr::{CoxeterSystem, ElementId};

use crate::record::element_name;

/// Vertices are ranked by length; covering edges are solid, the others dashed.
pub fn write(sys: &CoxeterSystem, w: ElementId, out: &mut dyn Write) -> io::Result<()> {
    let g = bruhat::bruhat_graph(sys, w);
    let node = |x: ElementId| format!("v{}", x.index());
    writeln!(out, "digraph bruhat {{")?;
    writeln!(out, "  rankdir=BT;")?;
    writeln!(out, "  node [shape=plaintext];")?;
    let mut levels: BTreeMap<usize, Vec<ElementId>> = BTreeMap::new();
    for &x in g.interval().members() {
        writeln!(out, "  {} [label=\"{}\"];", node(x), element_name(sys, x))?;
        levels.entry(sys.length(x)).or_default().push(x);
    }
    for e in g.edges() {
        let style = if g.is_covering(e) {
            ""
        } else {
            " [style=dashed]"
        };
        writeln!(out, "  {} -> {}{style};", node(e.from), node(e.to))?;
    }
    for xs in levels.values().filter(|xs| xs.len() > 1) {
        let names: Vec<String> = xs.iter().map(|&x| node(x)).collect();
        writeln!(out, "  {{ rank=same; {}; }}", names.join("; "))?;
    }
    writeln!(out, "}}")
}
