#![allow(dead_code)]

use htdecomp::{parse_hypergraph, EdgeId, EdgeSet, Hypergraph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const H_CHAIN: &str = "e1(a,b), e2(b,c), e3(c,d).";
pub const H_TRI: &str = "e1(a,b), e2(b,c), e3(c,a).";
pub const H_CYC4: &str = "e1(a,b), e2(b,c), e3(c,d), e4(d,a).";

/// Triangles t1–t3 and u1–u3 joined by the bridge edge `br`, plus a chord
/// and a pendant edge. The component {u2, w1, u1} with connecting vertices
/// {z, x} is reached under two different parent separators, and inside it
/// the pair ⟨{u3, u2}, {w1}⟩ recurs, so the success cache is hit at k = 2.
pub const BRIDGED_TRIANGLES: &str =
    "t2(b,c), u3(z,x), u2(y,z), t1(a,b), br(a,b,x), w0(z,a), w1(q,y), u1(x,y), t3(c,a).";

pub fn hg(text: &str) -> Hypergraph {
    parse_hypergraph(text).expect("fixture parses")
}

pub fn edges(h: &Hypergraph, names: &[&str]) -> EdgeSet {
    names.iter().map(|n| h.edge_id(n).expect("edge exists")).collect()
}

pub fn verts(h: &Hypergraph, names: &[&str]) -> VertexSet {
    names.iter().map(|n| h.vertex_id(n).expect("vertex exists")).collect()
}

pub fn from_lists(edges: &[Vec<String>]) -> Hypergraph {
    Hypergraph::build(edges.iter().enumerate().map(|(i, vs)| (format!("e{i}"), vs.clone()))).unwrap()
}

pub fn cycle(n: usize) -> Hypergraph {
    from_lists(
        &(0..n)
            .map(|i| vec![format!("v{i}"), format!("v{}", (i + 1) % n)])
            .collect::<Vec<_>>(),
    )
}

pub fn path(n: usize) -> Hypergraph {
    from_lists(
        &(0..n)
            .map(|i| vec![format!("v{i}"), format!("v{}", i + 1)])
            .collect::<Vec<_>>(),
    )
}

/// The 2×n grid graph, one binary edge per grid edge.
pub fn grid_2xn(n: usize) -> Hypergraph {
    let v = |r: usize, c: usize| format!("r{r}c{c}");
    let mut edges = Vec::new();
    for c in 0..n {
        edges.push(vec![v(0, c), v(1, c)]);
        if c + 1 < n {
            edges.push(vec![v(0, c), v(0, c + 1)]);
            edges.push(vec![v(1, c), v(1, c + 1)]);
        }
    }
    from_lists(&edges)
}

/// Up to `max_edges` edges of arity 1..=`max_arity` over `num_vertices` vertices.
pub fn random_hypergraph(rng: &mut impl Rng, max_edges: usize, max_arity: usize, num_vertices: usize) -> Hypergraph {
    let m = rng.gen_range(1..=max_edges);
    let edges: Vec<Vec<String>> = (0..m)
        .map(|_| {
            let arity = rng.gen_range(1..=max_arity);
            (0..arity)
                .map(|_| format!("v{}", rng.gen_range(0..num_vertices)))
                .collect()
        })
        .collect();
    from_lists(&edges)
}

/// The fixed test corpus: named instances.
pub fn corpus() -> Vec<(String, Hypergraph)> {
    let mut out: Vec<(String, Hypergraph)> = vec![
        ("H_chain".into(), hg(H_CHAIN)),
        ("H_tri".into(), hg(H_TRI)),
        ("H_cyc4".into(), hg(H_CYC4)),
    ];
    for n in 3..=10 {
        out.push((format!("C{n}"), cycle(n)));
    }
    for n in 1..=5 {
        out.push((format!("grid2x{n}"), grid_2xn(n)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..10 {
        out.push((format!("random{i}"), random_hypergraph(&mut rng, 8, 4, 8)));
    }
    out.push(("bridged_triangles".into(), hg(BRIDGED_TRIANGLES)));
    out.push(("single_edge".into(), hg("e1(a,b,c).")));
    out.push(("empty".into(), hg("")));
    out.push(("K4".into(), hg("e1(a,b), e2(a,c), e3(a,d), e4(b,c), e5(b,d), e6(c,d).")));
    out.push(("star".into(), hg("hub(a,b,c,d), s1(a,p), s2(b,q), s3(c,r), s4(d,s).")));
    out.push(("covered_triangle".into(), hg("e1(a,b), e2(b,c), e3(c,a), big(a,b,c).")));
    out
}

/// Components of `edges ∖ separator` by union-find over edges, merging two
/// edges whenever they share a vertex outside ⋃separator; also returns the
/// covered edges. Components are sorted by smallest member.
pub fn union_find_separate(h: &Hypergraph, edges: &EdgeSet, separator: &EdgeSet) -> (Vec<EdgeSet>, EdgeSet) {
    let blocked: Vec<u32> = separator.iter().flat_map(|e| h.edge(e).iter().map(|v| v.0)).collect();
    let outside = |e: EdgeId| -> Vec<u32> { h.edge(e).iter().map(|v| v.0).filter(|v| !blocked.contains(v)).collect() };
    let live: Vec<EdgeId> = edges.iter().filter(|e| !separator.contains(*e)).collect();
    let covered: EdgeSet = live.iter().copied().filter(|&e| outside(e).is_empty()).collect();
    let live: Vec<EdgeId> = live.into_iter().filter(|e| !covered.contains(*e)).collect();

    let mut parent: Vec<usize> = (0..live.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..live.len() {
        for j in i + 1..live.len() {
            let (oi, oj) = (outside(live[i]), outside(live[j]));
            if oi.iter().any(|v| oj.contains(v)) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: Vec<(usize, EdgeSet)> = Vec::new();
    for (i, &e) in live.iter().enumerate() {
        let root = find(&mut parent, i);
        match groups.iter_mut().find(|(r, _)| *r == root) {
            Some((_, g)) => {
                g.insert(e);
            }
            None => groups.push((root, EdgeSet::singleton(e))),
        }
    }
    let mut comps: Vec<EdgeSet> = groups.into_iter().map(|(_, g)| g).collect();
    comps.sort_by_key(|c| c.first());
    (comps, covered)
}

/// Every subset of the pool, filtered to irredundant covers of `conn` with at
/// most `k` edges, sorted by size and then lexicographically.
pub fn brute_force_covers(h: &Hypergraph, conn: &VertexSet, pool: &EdgeSet, k: usize) -> Vec<EdgeSet> {
    let pool = pool.to_vec();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pool.len()) {
        let set: EdgeSet = (0..pool.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pool[i])
            .collect();
        if set.len() > k || !conn.is_subset(&h.vertex_union(&set)) {
            continue;
        }
        let irredundant = set.iter().all(|e| {
            let mut rest = set.clone();
            rest.remove(e);
            !conn.is_subset(&h.vertex_union(&rest))
        });
        if irredundant {
            out.push(set);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
    out
}
