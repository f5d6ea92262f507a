//! Checks that a tree is a hypertree decomposition of a hypergraph.
//!
//! Looks only at the hypergraph and the tree, never at engine state.

use std::fmt;

use crate::engine::HTNode;
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// The tree still contains placeholder nodes.
    Structure,
    EdgeCoverage,
    Connectedness,
    ChiSubsetLambda,
    SpecialCondition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    /// Child indices from the root.
    pub path: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} at /", self.condition)?;
        let path: Vec<String> = self.path.iter().map(usize::to_string).collect();
        write!(f, "{}: {}", path.join("/"), self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub edge_coverage_ok: bool,
    pub connectedness_ok: bool,
    pub chi_subset_ok: bool,
    pub special_condition_ok: bool,
    pub width: usize,
    /// `width ≤ k`; not counted among the violations.
    pub width_ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// All four decomposition conditions hold.
    pub fn is_valid(&self) -> bool {
        self.edge_coverage_ok && self.connectedness_ok && self.chi_subset_ok && self.special_condition_ok
    }

    pub fn is_valid_within_width(&self) -> bool {
        self.is_valid() && self.width_ok
    }
}

struct Flat<'t> {
    node: &'t HTNode,
    parent: Option<usize>,
    path: Vec<usize>,
}

// pre-order, so parents precede their children
fn flatten(tree: &HTNode) -> Vec<Flat<'_>> {
    let mut out = vec![Flat {
        node: tree,
        parent: None,
        path: Vec::new(),
    }];
    let mut i = 0;
    while i < out.len() {
        let node = out[i].node;
        for (c, child) in node.children.iter().enumerate() {
            let mut path = out[i].path.clone();
            path.push(c);
            out.push(Flat {
                node: child,
                parent: Some(i),
                path,
            });
        }
        i += 1;
    }
    out
}

fn names(h: &Hypergraph, vs: &VertexSet) -> String {
    let names: Vec<&str> = vs.iter().map(|v| h.vertex_name(v)).collect();
    format!("{{{}}}", names.join(","))
}

pub fn edge_coverage_violations(h: &Hypergraph, tree: &HTNode) -> Vec<Violation> {
    let flat = flatten(tree);
    h.edge_ids()
        .filter(|&e| !flat.iter().any(|f| h.edge(e).is_subset(&f.node.chi)))
        .map(|e| Violation {
            condition: Condition::EdgeCoverage,
            path: Vec::new(),
            detail: format!("edge {} is inside no χ label", h.edge_name(e)),
        })
        .collect()
}

pub fn connectedness_violations(h: &Hypergraph, tree: &HTNode) -> Vec<Violation> {
    let flat = flatten(tree);
    let mut seen_top: Vec<Option<usize>> = vec![None; h.num_vertices()];
    let mut out = Vec::new();
    for (i, f) in flat.iter().enumerate() {
        let parent_chi = f.parent.map(|p| &flat[p].node.chi);
        for v in &f.node.chi {
            if parent_chi.is_some_and(|chi| chi.contains(v)) {
                continue;
            }
            // `i` is the top of a maximal subtree containing v
            let Some(slot) = seen_top.get_mut(v.0 as usize) else {
                continue;
            };
            if let Some(first) = *slot {
                out.push(Violation {
                    condition: Condition::Connectedness,
                    path: f.path.clone(),
                    detail: format!(
                        "vertex {} also occurs in a disconnected part rooted at /{}",
                        h.vertex_name(v),
                        flat[first]
                            .path
                            .iter()
                            .map(usize::to_string)
                            .collect::<Vec<_>>()
                            .join("/")
                    ),
                });
            } else {
                *slot = Some(i);
            }
        }
    }
    out
}

pub fn chi_subset_violations(h: &Hypergraph, tree: &HTNode) -> Vec<Violation> {
    flatten(tree)
        .into_iter()
        .filter_map(|f| {
            let support = h.vertex_union(&f.node.lambda);
            let extra = f.node.chi.difference(&support);
            (!extra.is_empty()).then(|| Violation {
                condition: Condition::ChiSubsetLambda,
                path: f.path,
                detail: format!("χ vertices {} are not in ⋃λ", names(h, &extra)),
            })
        })
        .collect()
}

pub fn special_condition_violations(h: &Hypergraph, tree: &HTNode) -> Vec<Violation> {
    let flat = flatten(tree);
    let mut below: Vec<VertexSet> = flat.iter().map(|f| f.node.chi.clone()).collect();
    for i in (1..flat.len()).rev() {
        let parent = flat[i].parent.expect("non-root has a parent");
        let sub = below[i].clone();
        below[parent].union_with(&sub);
    }
    flat.iter()
        .zip(&below)
        .filter_map(|(f, subtree_chi)| {
            let leaked = h
                .vertex_union(&f.node.lambda)
                .intersection(subtree_chi)
                .difference(&f.node.chi);
            (!leaked.is_empty()).then(|| Violation {
                condition: Condition::SpecialCondition,
                path: f.path.clone(),
                detail: format!(
                    "vertices {} of ⋃λ reappear below but are missing from χ",
                    names(h, &leaked)
                ),
            })
        })
        .collect()
}

pub fn check_edge_coverage(h: &Hypergraph, tree: &HTNode) -> bool {
    edge_coverage_violations(h, tree).is_empty()
}

pub fn check_connectedness(h: &Hypergraph, tree: &HTNode) -> bool {
    connectedness_violations(h, tree).is_empty()
}

pub fn check_chi_subset_lambda(h: &Hypergraph, tree: &HTNode) -> bool {
    chi_subset_violations(h, tree).is_empty()
}

pub fn check_special_condition(h: &Hypergraph, tree: &HTNode) -> bool {
    special_condition_violations(h, tree).is_empty()
}

pub fn validate(h: &Hypergraph, tree: &HTNode, k: usize) -> ValidationReport {
    let width = tree.width();
    let placeholders: Vec<Violation> = flatten(tree)
        .into_iter()
        .filter(|f| f.node.is_placeholder())
        .map(|f| Violation {
            condition: Condition::Structure,
            path: f.path,
            detail: "unexpanded placeholder".to_owned(),
        })
        .collect();
    if !placeholders.is_empty() {
        return ValidationReport {
            edge_coverage_ok: false,
            connectedness_ok: false,
            chi_subset_ok: false,
            special_condition_ok: false,
            width,
            width_ok: width <= k,
            violations: placeholders,
        };
    }

    let coverage = edge_coverage_violations(h, tree);
    let connected = connectedness_violations(h, tree);
    let subset = chi_subset_violations(h, tree);
    let special = special_condition_violations(h, tree);
    ValidationReport {
        edge_coverage_ok: coverage.is_empty(),
        connectedness_ok: connected.is_empty(),
        chi_subset_ok: subset.is_empty(),
        special_condition_ok: special.is_empty(),
        width,
        width_ok: width <= k,
        violations: [coverage, connected, subset, special].concat(),
    }
}
