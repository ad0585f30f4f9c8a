//! DOT emission for the dominance Hasse diagram on valid G-partitions.

use orbit_partitions::{
    enumerate_partitions, is_special, is_valid, Error, GroupKind, GroupType, Partition,
    DEFAULT_ENUMERATION_CAP,
};

fn label(p: &Partition) -> String {
    if p.is_empty() {
        "-".to_string()
    } else {
        p.to_string()
    }
}

/// Hasse diagram of the dominance order in DOT syntax: one node per valid
/// partition, one edge per covering relation (larger to smaller). Special
/// partitions get `shape=box`; if a bound is given, its node gets
/// `peripheries=2` and every node below it `style=filled`.
pub fn dot(group: GroupType, bound: Option<&Partition>) -> Result<String, Error> {
    let size = group.partition_size();
    if let Some(b) = bound {
        if b.size() != size {
            return Err(Error::SizeMismatch {
                expected: size,
                actual: b.size(),
            });
        }
    }
    let nodes: Vec<Partition> = enumerate_partitions(size, DEFAULT_ENUMERATION_CAP)?
        .into_iter()
        .filter(|p| is_valid(p, group).unwrap_or(false))
        .collect();
    let mut out = String::from("digraph dominance {\n");
    for p in &nodes {
        let mut attrs = Vec::new();
        let special = match group.kind() {
            GroupKind::MetaplecticSp => false,
            _ => is_special(p, group)?,
        };
        if special {
            attrs.push("shape=box".to_string());
        }
        if let Some(b) = bound {
            if p == b {
                attrs.push("peripheries=2".to_string());
            }
            if p.dominance_leq(b)? {
                attrs.push("style=filled".to_string());
            }
        }
        if attrs.is_empty() {
            out.push_str(&format!("  \"{}\";\n", label(p)));
        } else {
            out.push_str(&format!("  \"{}\" [{}];\n", label(p), attrs.join(",")));
        }
    }
    // covering edges by transitive reduction of strict dominance
    for p in &nodes {
        for q in &nodes {
            if q == p || !q.dominance_leq(p)? {
                continue;
            }
            let covered = nodes.iter().any(|r| {
                r != p
                    && r != q
                    && q.dominance_leq(r).unwrap_or(false)
                    && r.dominance_leq(p).unwrap_or(false)
            });
            if !covered {
                out.push_str(&format!("  \"{}\" -> \"{}\";\n", label(p), label(q)));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
