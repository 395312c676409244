//! Graphviz output for forests.

use std::fmt::Write;

use conesemi_core::Forest;

/// One digraph for the whole forest. Node names are the forest-wide
/// breadth-first ids used by the JSON document. Roots are drawn as double
/// circles; every edge is labelled by the element its child adds.
pub fn render(f: &Forest) -> String {
    let mut out = String::new();
    writeln!(out, "digraph forest {{").unwrap();
    writeln!(out, "  // k = {}, order = {}", f.k(), f.order()).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    let mut offset = 0;
    for t in f.trees() {
        for (i, n) in t.nodes().iter().enumerate() {
            let id = offset + i;
            let g = n.semigroup.genus();
            match n.beta {
                None => writeln!(out, "  n{id} [label=\"g={g}\", shape=doublecircle];").unwrap(),
                Some(b) => writeln!(out, "  n{id} [label=\"g={g}\\nbeta={b}\"];").unwrap(),
            }
        }
        for (i, n) in t.nodes().iter().enumerate() {
            if let (Some(p), Some(b)) = (n.parent, n.beta) {
                writeln!(out, "  n{} -> n{} [label=\"{b}\"];", offset + p, offset + i).unwrap();
            }
        }
        offset += t.len();
    }
    out.push_str("}\n");
    out
}
