//! GYO reduction, the α-acyclicity test.
//!
//! Repeatedly drops vertices that occur in a single edge and edges contained
//! in another edge. The hypergraph is α-acyclic iff this empties it, which is
//! exactly the width-1 case of hypertree decomposition.

use crate::hypergraph::Hypergraph;
use crate::set::{Idx, VertexId, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    DropVertex(VertexId),
    DropEdge(usize),
}

/// True iff `h` is α-acyclic.
pub fn gyo_reduce(h: &Hypergraph) -> bool {
    gyo_reduce_with(h, |_| 0)
}

/// GYO reduction where `choose(n)` picks which of the `n` currently
/// applicable reduction steps to apply next. The answer does not depend on
/// the choices made.
pub fn gyo_reduce_with(h: &Hypergraph, mut choose: impl FnMut(usize) -> usize) -> bool {
    let mut edges: Vec<Option<VertexSet>> = h.edge_ids().map(|e| Some(h.edge(e).clone())).collect();
    loop {
        let steps = applicable_steps(&edges, h.num_vertices());
        if steps.is_empty() {
            break;
        }
        match steps[choose(steps.len()) % steps.len()] {
            Step::DropVertex(v) => {
                for edge in edges.iter_mut().flatten() {
                    edge.remove(v);
                }
            }
            Step::DropEdge(i) => edges[i] = None,
        }
    }
    edges.iter().all(Option::is_none)
}

fn applicable_steps(edges: &[Option<VertexSet>], num_vertices: usize) -> Vec<Step> {
    let mut occurrences = vec![0usize; num_vertices];
    for edge in edges.iter().flatten() {
        for v in edge {
            occurrences[v.index()] += 1;
        }
    }
    let mut steps: Vec<Step> = occurrences
        .iter()
        .enumerate()
        .filter(|&(_, &n)| n == 1)
        .map(|(v, _)| Step::DropVertex(VertexId::new(v)))
        .collect();

    for (i, edge) in edges.iter().enumerate() {
        let Some(edge) = edge else { continue };
        let absorbed = edge.is_empty()
            || edges
                .iter()
                .enumerate()
                .any(|(j, other)| j != i && other.as_ref().is_some_and(|o| edge.is_subset(o)));
        if absorbed {
            steps.push(Step::DropEdge(i));
        }
    }
    steps
}
