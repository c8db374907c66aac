//! DOT export of the specialization order.

use crate::pointset::PointSet;
use crate::space::Space;

/// Neighbourhood-equivalence classes in order of their smallest member.
pub fn point_classes(space: &Space) -> Vec<PointSet> {
    let order = space.specialization_order();
    let mut seen = PointSet::EMPTY;
    let mut classes = Vec::new();
    for x in 0..space.n() {
        if !seen.contains(x) {
            let c = order.class_of(x);
            seen |= c;
            classes.push(c);
        }
    }
    classes
}

/// Covering pairs `(i, j)` of class indices: class `j` covers class `i`.
pub fn covering_pairs(space: &Space) -> Vec<(usize, usize)> {
    let order = space.specialization_order();
    let classes = point_classes(space);
    let rep: Vec<usize> = classes.iter().map(|c| c.first().unwrap()).collect();
    let gt = |j: usize, i: usize| order.gt(rep[j], rep[i]) && !order.geq(rep[i], rep[j]);
    let k = classes.len();
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if gt(j, i) && !(0..k).any(|w| gt(j, w) && gt(w, i)) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT digraph of the covering relation. An edge `u -> v` means `v` covers
/// `u`; equivalent points share a node labelled `x,y`.
pub fn hasse_dot(space: &Space) -> String {
    let classes = point_classes(space);
    let names: Vec<String> = classes
        .iter()
        .map(|c| {
            let members: Vec<&str> = c.iter().map(|x| space.label(x)).collect();
            quote(&members.join(","))
        })
        .collect();
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for name in &names {
        out.push_str(&format!("  {name};\n"));
    }
    for (i, j) in covering_pairs(space) {
        out.push_str(&format!("  {} -> {};\n", names[i], names[j]));
    }
    out.push_str("}\n");
    out
}
