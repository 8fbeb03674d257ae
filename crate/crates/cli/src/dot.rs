//! DOT export of Dynkin diagrams: nodes carry their (Bourbaki or affine)
//! index, edges carry `mult` and `arrow` attributes. A multiple edge is
//! directed from the long root to the short one.

use isotropy_core::rootsys::GeneralizedCartanMatrix;

pub fn dynkin_dot(name: &str, gcm: &GeneralizedCartanMatrix, first_label: usize) -> String {
    let n = gcm.rank();
    let mut out = String::new();
    out.push_str(&format!("digraph \"{name}\" {{\n"));
    out.push_str("  layout=neato;\n  node [shape=circle];\n");
    for i in 0..n {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", i, i + first_label));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (gcm.entry(i, j), gcm.entry(j, i));
            if a == 0 {
                continue;
            }
            let mult = a.abs().max(b.abs());
            if mult == 1 {
                out.push_str(&format!(
                    "  n{i} -> n{j} [dir=none, mult=\"1\", arrow=\"none\"];\n"
                ));
            } else if a.abs() == b.abs() {
                // equal lengths across a multiple bond (the rank-one affine
                // diagram): arrows both ways
                out.push_str(&format!(
                    "  n{i} -> n{j} [dir=both, mult=\"{mult}\", arrow=\"both\"];\n"
                ));
            } else {
                // |entry(long, short^∨)| = mult: the arrow points from the
                // longer root to the shorter one
                let (from, to) = if a.abs() > b.abs() { (i, j) } else { (j, i) };
                out.push_str(&format!(
                    "  n{from} -> n{to} [dir=forward, mult=\"{mult}\", arrow=\"forward\"];\n"
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}
