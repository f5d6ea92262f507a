use std::collections::HashMap;

use thiserror::Error;

use crate::set::{EdgeId, EdgeSet, Idx, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("duplicate edge name `{0}`")]
    DuplicateEdgeName(String),
    #[error("edge `{0}` has no vertices")]
    EmptyEdge(String),
}

/// An immutable hypergraph with interned vertex and edge names.
///
/// Edge indices follow input order. Vertex indices are assigned in order of
/// first occurrence, so vertices exist only through the edges mentioning them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    edges: Vec<VertexSet>,
    edge_names: Vec<String>,
    vertex_names: Vec<String>,
    // per vertex, the edges containing it
    incidence: Vec<EdgeSet>,
}

/// Output of [`Hypergraph::separate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    /// Components in ascending order of their smallest edge.
    pub components: Vec<EdgeSet>,
    /// Non-separator edges lying entirely inside the separator's vertices.
    pub covered: EdgeSet,
}

impl Hypergraph {
    pub fn build<E, V, S>(edge_list: impl IntoIterator<Item = (E, V)>) -> Result<Self, HypergraphError>
    where
        E: Into<String>,
        V: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut edges = Vec::new();
        let mut edge_names: Vec<String> = Vec::new();
        let mut vertex_names: Vec<String> = Vec::new();
        let mut incidence: Vec<EdgeSet> = Vec::new();
        let mut edge_lookup = HashMap::new();
        let mut vertex_lookup: HashMap<String, VertexId> = HashMap::new();

        for (name, vertices) in edge_list {
            let name = name.into();
            let edge = EdgeId::new(edges.len());
            if edge_lookup.insert(name.clone(), edge).is_some() {
                return Err(HypergraphError::DuplicateEdgeName(name));
            }
            let mut members = VertexSet::new();
            for vertex in vertices {
                let vertex = vertex.as_ref();
                let id = match vertex_lookup.get(vertex) {
                    Some(&id) => id,
                    None => {
                        let id = VertexId::new(vertex_names.len());
                        vertex_names.push(vertex.to_owned());
                        vertex_lookup.insert(vertex.to_owned(), id);
                        incidence.push(EdgeSet::new());
                        id
                    }
                };
                members.insert(id);
                incidence[id.index()].insert(edge);
            }
            if members.is_empty() {
                return Err(HypergraphError::EmptyEdge(name));
            }
            edges.push(members);
            edge_names.push(name);
        }

        Ok(Hypergraph {
            edges,
            edge_names,
            vertex_names,
            incidence,
        })
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge(&self, edge: EdgeId) -> &VertexSet {
        &self.edges[edge.index()]
    }

    pub fn edge_name(&self, edge: EdgeId) -> &str {
        &self.edge_names[edge.index()]
    }

    pub fn vertex_name(&self, vertex: VertexId) -> &str {
        &self.vertex_names[vertex.index()]
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        self.edge_names.iter().position(|n| n == name).map(EdgeId::new)
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_names.iter().position(|n| n == name).map(VertexId::new)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId::new)
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_names.len())
    }

    /// Edges containing `vertex`.
    pub fn incident_edges(&self, vertex: VertexId) -> &EdgeSet {
        &self.incidence[vertex.index()]
    }

    pub fn vertex_union(&self, edges: &EdgeSet) -> VertexSet {
        let mut out = VertexSet::new();
        for e in edges {
            out.union_with(self.edge(e));
        }
        out
    }

    /// All edges of the hypergraph meeting `conn`.
    pub fn bound_edges(&self, conn: &VertexSet) -> EdgeSet {
        let mut out = EdgeSet::new();
        for v in conn {
            out.union_with(self.incident_edges(v));
        }
        out
    }

    /// Splits `edges ∖ separator` into the components connected through
    /// vertices outside the separator's vertex union.
    ///
    /// Separator edges need not belong to `edges`; only their vertex union is
    /// consulted.
    pub fn separate(&self, edges: &EdgeSet, separator: &EdgeSet) -> Separation {
        let blocked = self.vertex_union(separator);
        let mut remaining = edges.difference(separator);
        let mut covered = EdgeSet::new();
        for e in &remaining {
            if self.edge(e).is_subset(&blocked) {
                covered.insert(e);
            }
        }
        remaining.difference_with(&covered);

        let mut components = Vec::new();
        while let Some(seed) = remaining.first() {
            let mut component = EdgeSet::singleton(seed);
            remaining.remove(seed);
            let mut visited = blocked.clone();
            let mut frontier = self.edge(seed).difference(&visited);
            while !frontier.is_empty() {
                visited.union_with(&frontier);
                let mut reached = EdgeSet::new();
                for v in &frontier {
                    reached.union_with(self.incident_edges(v));
                }
                reached.intersect_with(&remaining);
                remaining.difference_with(&reached);
                component.union_with(&reached);
                frontier = VertexSet::new();
                for e in &reached {
                    frontier.union_with(self.edge(e));
                }
                frontier.difference_with(&visited);
            }
            components.push(component);
        }

        Separation { components, covered }
    }
}
