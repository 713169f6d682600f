//! Explicit Fibonacci p-cubes: vertex lists, adjacency, per-direction edge
//! sets and BFS distances.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::sequences::PFibTable;
use crate::strings::{enumerate_pstrings_capped, PString};
use crate::Caps;

/// An edge stored once, lower-weight endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    /// Endpoint with a 0 at `direction`.
    pub low: usize,
    /// Endpoint with a 1 at `direction`.
    pub high: usize,
    /// 1-based coordinate the endpoints differ in.
    pub direction: usize,
}

/// The subgraph of `Q_n` induced by the Fibonacci p-strings of length `n`.
#[derive(Debug, Clone)]
pub struct PCubeGraph {
    p: usize,
    n: usize,
    vertices: Vec<PString>,
    index: HashMap<PString, usize>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    /// `edges_by_direction[i - 1]` holds ids into `edges`.
    edges_by_direction: Vec<Vec<usize>>,
}

impl PCubeGraph {
    pub fn build(p: usize, n: usize) -> Result<Self> {
        Self::build_capped(p, n, &Caps::default())
    }

    /// Vertices come from the p-string enumeration; each vertex looks up its
    /// `n` single-bit flips in the index.
    pub fn build_capped(p: usize, n: usize, caps: &Caps) -> Result<Self> {
        if n >= caps.graph {
            return Err(Error::SizeLimit { what: "graph materialization", n, cap: caps.graph });
        }
        let vertices = enumerate_pstrings_capped(p, n, caps)?;
        let index: HashMap<PString, usize> =
            vertices.iter().enumerate().map(|(id, &u)| (u, id)).collect();

        let mut adjacency = vec![Vec::new(); vertices.len()];
        let mut edges = Vec::new();
        let mut edges_by_direction = vec![Vec::new(); n];
        for (id, u) in vertices.iter().enumerate() {
            for i in 1..=n {
                let Some(&other) = index.get(&u.flip(i)) else { continue };
                adjacency[id].push(other);
                if !u.bit(i) {
                    edges_by_direction[i - 1].push(edges.len());
                    edges.push(Edge { low: id, high: other, direction: i });
                }
            }
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(PCubeGraph { p, n, vertices, index, adjacency, edges, edges_by_direction })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[PString] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> PString {
        self.vertices[id]
    }

    pub fn vertex_id(&self, u: &PString) -> Option<usize> {
        self.index.get(u).copied()
    }

    pub fn contains(&self, u: &PString) -> bool {
        self.index.contains_key(u)
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    pub fn degree(&self, id: usize) -> usize {
        self.adjacency[id].len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edges_in_direction(&self, i: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.edges_by_direction[i - 1].iter().map(move |&e| &self.edges[e])
    }

    /// `|E_i|` counted from the materialized edge lists.
    pub fn direction_edge_count(&self, i: usize) -> Result<BigUint> {
        check_direction(self.n, i)?;
        Ok(BigUint::from(self.edges_by_direction[i - 1].len()))
    }

    /// Unweighted shortest-path distances from `source`.
    pub fn bfs_distances(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.order()];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Full distance matrix, one BFS per vertex.
    pub fn distance_matrix(&self) -> Vec<Vec<u32>> {
        (0..self.order()).map(|s| self.bfs_distances(s)).collect()
    }
}

fn check_direction(n: usize, i: usize) -> Result<()> {
    if (1..=n).contains(&i) {
        Ok(())
    } else {
        Err(Error::Domain(format!("direction {i} outside [1, {n}]")))
    }
}

/// `|E_i| = F^p_i F^p_{n-i+1}`.
pub fn direction_edge_count_closed(p: usize, n: usize, i: usize) -> Result<BigUint> {
    check_direction(n, i)?;
    let mut f = PFibTable::new(p);
    Ok(f.get(i).clone() * f.get(n - i + 1))
}

/// `|E(Γ_n^p)| = Σ_i F^p_i F^p_{n-i+1}`.
pub fn total_edges_closed(p: usize, n: usize) -> BigUint {
    let mut f = PFibTable::new(p);
    f.extend_to(n);
    let v = f.values();
    (1..=n).fold(BigUint::zero(), |acc, i| acc + &v[i] * &v[n - i + 1])
}

/// `|V(Γ_n^p)| = F^p_{n+p+1}`.
pub fn order_closed(p: usize, n: usize) -> BigUint {
    PFibTable::new(p).get(n + p + 1).clone()
}
