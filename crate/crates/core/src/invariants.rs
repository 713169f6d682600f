//! Wiener index, Mostar index and irregularity, each as a closed form and as
//! a graph-level oracle, plus the imbalanced-edge machinery behind the
//! irregularity formula.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{direction_edge_count_closed, order_closed, total_edges_closed, Edge, PCubeGraph};
use crate::strings::PString;

/// Sum of BFS distances over unordered vertex pairs.
pub fn wiener_oracle(g: &PCubeGraph) -> BigUint {
    let total: u64 = (0..g.order())
        .map(|s| {
            g.bfs_distances(s)[s + 1..].iter().map(|&d| d as u64).sum::<u64>()
        })
        .sum();
    BigUint::from(total)
}

/// `Σ_{uv ∈ E} |n_{u,v} - n_{v,u}|`, with `n_{u,v}` counted from full BFS
/// distance tables.
pub fn mostar_oracle(g: &PCubeGraph) -> BigUint {
    let dist = g.distance_matrix();
    let total: u64 = g
        .edges()
        .iter()
        .map(|e| {
            let (du, dv) = (&dist[e.low], &dist[e.high]);
            let closer_u = du.iter().zip(dv).filter(|(a, b)| a < b).count() as i64;
            let closer_v = du.iter().zip(dv).filter(|(a, b)| b < a).count() as i64;
            (closer_u - closer_v).unsigned_abs()
        })
        .sum();
    BigUint::from(total)
}

/// `Σ_{uv ∈ E} |deg u - deg v|`.
pub fn irregularity_oracle(g: &PCubeGraph) -> BigUint {
    let total: usize = g.edges().iter().map(|e| g.degree(e.low).abs_diff(g.degree(e.high))).sum();
    BigUint::from(total)
}

/// `Σ_i |E_i|^2` from the closed per-direction counts.
fn sum_squared_directions(p: usize, n: usize) -> BigUint {
    (1..=n)
        .map(|i| {
            let e = direction_edge_count_closed(p, n, i).expect("i in range");
            &e * &e
        })
        .sum()
}

/// `|V||E| - Σ_i |E_i|^2`; zero for `n = 0`.
pub fn wiener_closed(p: usize, n: usize) -> BigUint {
    order_closed(p, n) * total_edges_closed(p, n) - sum_squared_directions(p, n)
}

/// `|V||E| - 2 Σ_i |E_i|^2`.
pub fn mostar_closed(p: usize, n: usize) -> BigUint {
    let v: BigInt = BigInt::from(order_closed(p, n) * total_edges_closed(p, n))
        - BigInt::from(sum_squared_directions(p, n)) * 2;
    v.to_biguint().expect("Mostar index is non-negative")
}

/// `2 Σ_{d=1}^{p} |E(Γ_{n-d}^p)|`; only defined for `n ≥ p`.
pub fn irregularity_closed(p: usize, n: usize) -> Result<BigUint> {
    if n < p {
        return Err(Error::Domain(format!("irregularity formula needs n >= p (n = {n}, p = {p})")));
    }
    let sum: BigUint = (1..=p).map(|d| total_edges_closed(p, n - d)).sum();
    Ok(sum * 2u32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `j = i + d`.
    Right,
    /// `j = i - d`.
    Left,
}

/// An imbalanced edge `e'` for `e`, with its classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ImbalancedPair {
    pub edge: Edge,
    pub imbalanced: Edge,
    pub side: Side,
    pub offset: usize,
}

/// Per-edge imbalance and the full list of its imbalanced edges.
///
/// `edge.high` plays the role of `x` (1 at the edge direction) and
/// `edge.low` that of `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeImbalanceRecord {
    pub edge: Edge,
    pub direction: usize,
    pub imbalance: usize,
    pub imbalanced_edges: Vec<ImbalancedPair>,
}

/// The edge of `g` joining `a` and `b`, oriented by the bit at the
/// differing coordinate.
fn edge_between(g: &PCubeGraph, a: usize, b: usize, direction: usize) -> Edge {
    if g.vertex(a).bit(direction) {
        Edge { low: b, high: a, direction }
    } else {
        Edge { low: a, high: b, direction }
    }
}

pub fn imbalance_census(g: &PCubeGraph) -> Vec<EdgeImbalanceRecord> {
    g.edges()
        .iter()
        .map(|&e| {
            let (x, y) = (g.vertex(e.high), g.vertex(e.low));
            let i = e.direction;
            let imbalanced_edges = (1..=g.n())
                .filter(|&j| j != i)
                .filter_map(|j| {
                    let y_j = g.vertex_id(&y.flip(j))?;
                    if g.contains(&x.flip(j)) {
                        return None;
                    }
                    Some(ImbalancedPair {
                        edge: e,
                        imbalanced: edge_between(g, e.low, y_j, j),
                        side: if j > i { Side::Right } else { Side::Left },
                        offset: j.abs_diff(i),
                    })
                })
                .collect();
            EdgeImbalanceRecord {
                edge: e,
                direction: i,
                imbalance: g.degree(e.high).abs_diff(g.degree(e.low)),
                imbalanced_edges,
            }
        })
        .collect()
}

/// `R_d` (for [`Side::Right`]) or `L_d` (for [`Side::Left`]).
pub fn imbalanced_set(census: &[EdgeImbalanceRecord], side: Side, d: usize) -> Vec<ImbalancedPair> {
    census
        .iter()
        .flat_map(|r| r.imbalanced_edges.iter())
        .filter(|pair| pair.side == side && pair.offset == d)
        .copied()
        .collect()
}

/// An edge given by its endpoint strings; `high` has the 1 at `direction`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringEdge {
    pub high: PString,
    pub low: PString,
    pub direction: usize,
}

impl StringEdge {
    pub fn of(g: &PCubeGraph, e: &Edge) -> Self {
        StringEdge { high: g.vertex(e.high), low: g.vertex(e.low), direction: e.direction }
    }
}

fn is_imbalanced_pair(g: &PCubeGraph, pair: &ImbalancedPair) -> bool {
    let (e, f) = (&pair.edge, &pair.imbalanced);
    let (i, j) = (e.direction, f.direction);
    let ids_ok = [e.low, e.high, f.low, f.high].iter().all(|&v| v < g.order());
    let dirs_ok = (1..=g.n()).contains(&i) && (1..=g.n()).contains(&j);
    if !ids_ok || !dirs_ok || pair.offset == 0 {
        return false;
    }
    let expected_j = match pair.side {
        Side::Right => i.checked_add(pair.offset),
        Side::Left => i.checked_sub(pair.offset),
    };
    let (x, y) = (g.vertex(e.high), g.vertex(e.low));
    let e_ok = x.bit(i) && y == x.flip(i);
    let f_ok = g.vertex_id(&y.flip(j)).is_some_and(|y_j| *f == edge_between(g, e.low, y_j, j));
    expected_j == Some(j) && e_ok && f_ok && !g.contains(&x.flip(j))
}

/// Sends a `d`-right (resp. `d`-left) imbalanced pair to an edge of
/// `Γ_{n-d}^p` by deleting the `d` coordinates strictly between the two
/// directions plus the far one, keeping the bit at the edge direction.
pub fn alpha_map(g: &PCubeGraph, pair: &ImbalancedPair) -> Result<StringEdge> {
    if !is_imbalanced_pair(g, pair) {
        return Err(Error::Precondition(format!("{pair:?} is not an imbalanced pair of the graph")));
    }
    let x = g.vertex(pair.edge.high);
    let (i, d) = (pair.edge.direction, pair.offset);
    let (high, direction) = match pair.side {
        Side::Right => (x.remove_range(i + 1, i + d), i),
        Side::Left => (x.remove_range(i - d, i - 1), i - d),
    };
    Ok(StringEdge { high, low: high.flip(direction), direction })
}

/// Rebuilds the imbalanced pair whose image under [`alpha_map`] is `z`.
pub fn alpha_inverse(g: &PCubeGraph, side: Side, d: usize, z: &StringEdge) -> Result<ImbalancedPair> {
    let well_formed = (1..=z.high.len()).contains(&z.direction)
        && z.high.bit(z.direction)
        && z.low == z.high.flip(z.direction);
    if d == 0 || z.high.len() + d != g.n() || !well_formed {
        return Err(Error::Precondition(format!("{z:?} is not an edge of length n - d")));
    }
    let (x, i, j) = match side {
        Side::Right => (z.high.insert_zeros(z.direction + 1, d), z.direction, z.direction + d),
        Side::Left => (z.high.insert_zeros(z.direction, d), z.direction + d, z.direction),
    };
    let lookup = |s: PString| {
        g.vertex_id(&s)
            .ok_or_else(|| Error::Precondition(format!("{s} is not a vertex of the graph")))
    };
    let x_id = lookup(x)?;
    let y = x.flip(i);
    let y_id = lookup(y)?;
    let y_j = lookup(y.flip(j))?;
    let pair = ImbalancedPair {
        edge: Edge { low: y_id, high: x_id, direction: i },
        imbalanced: edge_between(g, y_id, y_j, j),
        side,
        offset: d,
    };
    if is_imbalanced_pair(g, &pair) {
        Ok(pair)
    } else {
        Err(Error::Precondition(format!("{z:?} does not lift to an imbalanced pair")))
    }
}

/// For every edge `xy` with `x_i = 1` and every `j`: `x + δ_j ∈ V` implies
/// `y + δ_j ∈ V`.
pub fn down_translation_holds(g: &PCubeGraph) -> bool {
    g.edges().iter().all(|e| {
        let (x, y) = (g.vertex(e.high), g.vertex(e.low));
        (1..=g.n()).all(|j| !g.contains(&x.flip(j)) || g.contains(&y.flip(j)))
    })
}

/// For `|i - j| > p`: `x + δ_j ∈ V` iff `y + δ_j ∈ V`.
pub fn far_translation_holds(g: &PCubeGraph) -> bool {
    g.edges().iter().all(|e| {
        let (x, y) = (g.vertex(e.high), g.vertex(e.low));
        (1..=g.n())
            .filter(|&j| j.abs_diff(e.direction) > g.p())
            .all(|j| g.contains(&x.flip(j)) == g.contains(&y.flip(j)))
    })
}

/// Total number of imbalanced pairs recorded in a census.
pub fn imbalanced_pair_count(census: &[EdgeImbalanceRecord]) -> BigUint {
    census.iter().fold(BigUint::zero(), |acc, r| acc + r.imbalanced_edges.len())
}
