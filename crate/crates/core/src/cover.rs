//! Enumeration of candidate cover separators.
//!
//! Yields edge sets `S` drawn from a pool with `|S| ≤ k` whose vertex union
//! contains `conn`, ordered by size and then lexicographically by edge index.
//! By default only irredundant covers are produced: every member covers some
//! vertex of `conn` that no other member covers.

use crate::hypergraph::Hypergraph;
use crate::set::{EdgeId, EdgeSet, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoverMode {
    #[default]
    Irredundant,
    /// Every cover of size at most `k`, redundant ones included.
    All,
}

pub fn covers(conn: &VertexSet, pool: &EdgeSet, k: usize, h: &Hypergraph, mode: CoverMode) -> Covers {
    let pool: Vec<EdgeId> = pool.to_vec();
    let reach = pool.iter().map(|&e| h.edge(e).intersection(conn)).collect();
    Covers {
        conn: conn.clone(),
        pool,
        reach,
        max_size: k,
        mode,
        size: 0,
        chosen: Vec::new(),
        covered: vec![VertexSet::new()],
        next: vec![0],
        done: false,
    }
}

/// Resumable depth-first enumeration; see [`covers`].
#[derive(Debug, Clone)]
pub struct Covers {
    conn: VertexSet,
    pool: Vec<EdgeId>,
    // pool[i] ∩ conn
    reach: Vec<VertexSet>,
    max_size: usize,
    mode: CoverMode,
    size: usize,
    // positions into `pool` of the current prefix
    chosen: Vec<usize>,
    // covered[d]: part of conn covered by chosen[..d]
    covered: Vec<VertexSet>,
    // next[d]: next pool position to try at depth d
    next: Vec<usize>,
    done: bool,
}

impl Covers {
    fn backtrack(&mut self) {
        if self.chosen.pop().is_none() {
            self.next_size();
            return;
        }
        self.covered.pop();
        self.next.pop();
    }

    fn next_size(&mut self) {
        self.size += 1;
        if self.size > self.max_size || self.size > self.pool.len() {
            self.done = true;
            return;
        }
        self.chosen.clear();
        self.covered.truncate(1);
        self.next.clear();
        self.next.push(0);
    }

    fn is_solution(&self) -> bool {
        if !self.conn.is_subset(&self.covered[self.chosen.len()]) {
            return false;
        }
        if self.mode == CoverMode::All {
            return true;
        }
        (0..self.chosen.len()).all(|skip| {
            let mut rest = VertexSet::new();
            for (i, &pos) in self.chosen.iter().enumerate() {
                if i != skip {
                    rest.union_with(&self.reach[pos]);
                }
            }
            !self.conn.is_subset(&rest)
        })
    }
}

impl Iterator for Covers {
    type Item = EdgeSet;

    fn next(&mut self) -> Option<EdgeSet> {
        while !self.done {
            let depth = self.chosen.len();
            if depth == self.size {
                let hit = self
                    .is_solution()
                    .then(|| self.chosen.iter().map(|&pos| self.pool[pos]).collect());
                self.backtrack();
                if hit.is_some() {
                    return hit;
                }
                continue;
            }

            let pos = self.next[depth];
            if pos + (self.size - depth) > self.pool.len() {
                self.backtrack();
                continue;
            }
            self.next[depth] = pos + 1;

            // an edge adding nothing new stays redundant in every extension
            if self.mode == CoverMode::Irredundant && self.reach[pos].is_subset(&self.covered[depth]) {
                continue;
            }
            let covered = self.covered[depth].union(&self.reach[pos]);
            self.chosen.push(pos);
            self.covered.push(covered);
            self.next.push(pos + 1);
        }
        None
    }
}
