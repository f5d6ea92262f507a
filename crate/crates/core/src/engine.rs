//! The det-k-decomp search.
//!
//! A decomposition is grown top-down. Each call receives a set of edges still
//! to be decomposed and the connecting vertices `conn` it shares with its
//! parent. A separator is chosen as a cover of `conn` (plus at most one more
//! edge from the current set), the remaining edges are split into components,
//! and each component is decomposed recursively.
//!
//! Two memo tables are keyed by ⟨separator, component⟩. `fail_seps` records
//! pairs whose component could not be decomposed, letting later attempts skip
//! that separator outright. `succ_seps` records pairs that were decomposed;
//! when one is met again a placeholder node is emitted instead of repeating
//! the work, and [`Decomposer::expand`] fills placeholders in afterwards.

use std::collections::HashSet;
use std::time::Instant;

use thiserror::Error;

use crate::cover::{covers, CoverMode};
use crate::hypergraph::Hypergraph;
use crate::set::{EdgeId, EdgeSet, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("deadline exceeded")]
    Timeout,
    /// A component recorded as decomposable could not be decomposed again.
    /// This indicates a bug in the engine.
    #[error("could not re-derive placeholder for component {component:?}")]
    ExpansionFailure { component: EdgeSet },
}

/// What to do when a separator leaves no components at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EmptyComponents {
    /// Accept the separator; its node already covers every remaining edge.
    #[default]
    Accept,
    /// Reject the separator, treating an empty subtree list as failure.
    Reject,
}

#[derive(Debug, Clone)]
pub struct Config {
    pub k: usize,
    pub use_fail_cache: bool,
    pub use_succ_cache: bool,
    pub cover_mode: CoverMode,
    pub empty_components: EmptyComponents,
    /// Checked on entry to every `decomp_cov` call.
    pub deadline: Option<Instant>,
}

impl Config {
    pub fn new(k: usize) -> Self {
        Config {
            k,
            use_fail_cache: true,
            use_succ_cache: true,
            cover_mode: CoverMode::Irredundant,
            empty_components: EmptyComponents::Accept,
            deadline: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub decomp_cov_calls: u64,
    pub decomp_add_calls: u64,
    pub cover_candidates: u64,
    pub fail_cache_hits: u64,
    pub succ_cache_hits: u64,
    pub placeholders_created: u64,
}

/// Stand-in for a component already known to be decomposable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placeholder {
    pub component: EdgeSet,
    pub conn: VertexSet,
}

/// A node of a hypertree decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HTNode {
    pub lambda: EdgeSet,
    pub chi: VertexSet,
    pub children: Vec<HTNode>,
    pub placeholder: Option<Placeholder>,
}

impl HTNode {
    pub fn new(lambda: EdgeSet, chi: VertexSet, children: Vec<HTNode>) -> Self {
        HTNode {
            lambda,
            chi,
            children,
            placeholder: None,
        }
    }

    pub fn leaf(lambda: EdgeSet, chi: VertexSet) -> Self {
        Self::new(lambda, chi, Vec::new())
    }

    pub fn placeholder(component: EdgeSet, conn: VertexSet) -> Self {
        HTNode {
            lambda: EdgeSet::new(),
            chi: VertexSet::new(),
            children: Vec::new(),
            placeholder: Some(Placeholder { component, conn }),
        }
    }

    pub fn is_placeholder(&self) -> bool {
        self.placeholder.is_some()
    }

    /// Pre-order traversal.
    pub fn nodes(&self) -> Vec<&HTNode> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            out.push(node);
            stack.extend(node.children.iter().rev());
        }
        out
    }

    pub fn node_count(&self) -> usize {
        self.nodes().len()
    }

    pub fn placeholder_count(&self) -> usize {
        self.nodes().iter().filter(|n| n.is_placeholder()).count()
    }

    /// Largest λ label in the tree.
    pub fn width(&self) -> usize {
        self.nodes().iter().map(|n| n.lambda.len()).max().unwrap_or(0)
    }
}

/// Canonical ⟨separator, component⟩ pair used by both memo tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SepCompKey {
    pub separator: Vec<EdgeId>,
    pub component: Vec<EdgeId>,
}

pub fn cache_key(separator: &EdgeSet, component: &EdgeSet) -> SepCompKey {
    SepCompKey {
        separator: separator.to_vec(),
        component: component.to_vec(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubtreesResult {
    Failure,
    Success(Vec<HTNode>),
}

/// One decomposition run over a hypergraph. Holds the memo tables and
/// counters; create a fresh one per run.
pub struct Decomposer<'h> {
    h: &'h Hypergraph,
    config: Config,
    fail_seps: HashSet<SepCompKey>,
    succ_seps: HashSet<SepCompKey>,
    stats: Stats,
}

impl<'h> Decomposer<'h> {
    pub fn new(h: &'h Hypergraph, config: Config) -> Self {
        assert!(config.k >= 1, "width bound must be at least 1");
        Decomposer {
            h,
            config,
            fail_seps: HashSet::new(),
            succ_seps: HashSet::new(),
            stats: Stats::default(),
        }
    }

    pub fn stats(&self) -> &Stats {
        &self.stats
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn fail_seps(&self) -> &HashSet<SepCompKey> {
        &self.fail_seps
    }

    pub fn succ_seps(&self) -> &HashSet<SepCompKey> {
        &self.succ_seps
    }

    /// Decomposes the whole hypergraph and expands any placeholders.
    pub fn run(&mut self) -> Result<Option<HTNode>, EngineError> {
        self.fail_seps.clear();
        self.succ_seps.clear();
        match self.decomp_cov(&self.h.all_edges(), &VertexSet::new())? {
            Some(tree) => self.expand(tree).map(Some),
            None => Ok(None),
        }
    }

    pub fn decomp_cov(&mut self, edges: &EdgeSet, conn: &VertexSet) -> Result<Option<HTNode>, EngineError> {
        if self.config.deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(EngineError::Timeout);
        }
        self.stats.decomp_cov_calls += 1;

        if edges.len() <= self.config.k {
            return Ok(Some(HTNode::leaf(edges.clone(), self.h.vertex_union(edges))));
        }

        let bound = self.h.bound_edges(conn);
        for cov_sep in covers(conn, &bound, self.config.k, self.h, self.config.cover_mode) {
            self.stats.cover_candidates += 1;
            if let Some(tree) = self.decomp_add(edges, conn, &cov_sep)? {
                return Ok(Some(tree));
            }
        }
        Ok(None)
    }

    pub fn decomp_add(
        &mut self,
        edges: &EdgeSet,
        conn: &VertexSet,
        cov_sep: &EdgeSet,
    ) -> Result<Option<HTNode>, EngineError> {
        self.stats.decomp_add_calls += 1;
        let in_cov_sep = cov_sep.intersection(edges);
        if in_cov_sep.is_empty() && cov_sep.len() >= self.config.k {
            return Ok(None);
        }

        // AddSize 1: each edge of `edges` in ascending order; AddSize 0: AddSep = ∅ once
        let add_candidates: Vec<Option<EdgeId>> = if in_cov_sep.is_empty() {
            edges.iter().map(Some).collect()
        } else {
            vec![None]
        };

        for add in add_candidates {
            let add_sep: EdgeSet = add.into_iter().collect();
            let mut separator = cov_sep.clone();
            separator.extend(add);
            let components = self.h.separate(edges, &separator).components;

            if self.config.use_fail_cache
                && components
                    .iter()
                    .any(|comp| self.fail_seps.contains(&cache_key(&separator, comp)))
            {
                self.stats.fail_cache_hits += 1;
                continue;
            }

            debug_assert!(components.iter().all(|c| c.len() < edges.len()));

            let subtrees = match self.decomp_sub(&components, &separator)? {
                SubtreesResult::Failure => continue,
                SubtreesResult::Success(subtrees) => subtrees,
            };
            if subtrees.is_empty() && self.config.empty_components == EmptyComponents::Reject {
                continue;
            }

            let chi = conn.union(&self.h.vertex_union(&in_cov_sep.union(&add_sep)));
            debug_assert!(self
                .h
                .vertex_union(&separator)
                .intersection(&self.h.vertex_union(edges))
                .is_subset(&chi));
            return Ok(Some(HTNode::new(separator, chi, subtrees)));
        }
        Ok(None)
    }

    pub fn decomp_sub(&mut self, components: &[EdgeSet], separator: &EdgeSet) -> Result<SubtreesResult, EngineError> {
        let separator_vertices = self.h.vertex_union(separator);
        let mut subtrees = Vec::with_capacity(components.len());
        for comp in components {
            let child_conn = self.h.vertex_union(comp).intersection(&separator_vertices);
            let key = cache_key(separator, comp);
            if self.config.use_succ_cache && self.succ_seps.contains(&key) {
                self.stats.succ_cache_hits += 1;
                self.stats.placeholders_created += 1;
                subtrees.push(HTNode::placeholder(comp.clone(), child_conn));
                continue;
            }
            match self.decomp_cov(comp, &child_conn)? {
                None => {
                    if self.config.use_fail_cache {
                        debug_assert!(!self.succ_seps.contains(&key));
                        self.fail_seps.insert(key);
                    }
                    return Ok(SubtreesResult::Failure);
                }
                Some(tree) => {
                    if self.config.use_succ_cache {
                        debug_assert!(!self.fail_seps.contains(&key));
                        self.succ_seps.insert(key);
                    }
                    subtrees.push(tree);
                }
            }
        }
        Ok(SubtreesResult::Success(subtrees))
    }

    /// Replaces every placeholder by a freshly derived subtree, repeating
    /// until none remain.
    pub fn expand(&mut self, node: HTNode) -> Result<HTNode, EngineError> {
        if let Some(Placeholder { component, conn }) = node.placeholder {
            let derived = self
                .decomp_cov(&component, &conn)?
                .ok_or(EngineError::ExpansionFailure { component })?;
            return self.expand(derived);
        }
        let children = node
            .children
            .into_iter()
            .map(|child| self.expand(child))
            .collect::<Result<_, _>>()?;
        Ok(HTNode { children, ..node })
    }
}

/// Runs a fresh decomposition of `h` under `config`.
pub fn det_k_decomp(h: &Hypergraph, config: Config) -> Result<(Option<HTNode>, Stats), EngineError> {
    let mut engine = Decomposer::new(h, config);
    let tree = engine.run()?;
    Ok((tree, engine.stats))
}
