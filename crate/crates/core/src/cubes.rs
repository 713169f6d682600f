//! Exhaustive enumeration of induced hypercubes inside a materialized graph.
//!
//! An induced `Q_k` of a subgraph of `Q_n` is determined by its top vertex and
//! the `k` coordinates that vary. Enumeration therefore walks every vertex as
//! a candidate top and every `k`-subset of its 1-coordinates, and keeps the
//! pair when all `2^k` members are vertices of the graph. Membership is
//! checked for every member, including the bottom.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::graph::PCubeGraph;
use crate::strings::PString;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InducedCube {
    pub top: PString,
    pub bottom: PString,
    /// 1-based coordinates where `top` has a 1 and `bottom` a 0.
    pub support: Vec<usize>,
}

impl InducedCube {
    pub fn k(&self) -> usize {
        self.support.len()
    }

    /// All `2^k` members, bottom first.
    pub fn members(&self) -> Vec<PString> {
        let mask = self.top.bits() & !self.bottom.bits();
        submasks(mask)
            .map(|s| PString::from_raw(self.bottom.bits() | s, self.bottom.len()))
            .collect()
    }
}

/// Every submask of `mask`, from 0 upwards.
fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask { None } else { Some(((cur | !mask).wrapping_add(1)) & mask) };
        Some(cur)
    })
}

fn cubes_with_top(g: &PCubeGraph, top: PString, k: Option<usize>) -> impl Iterator<Item = InducedCube> + '_ {
    submasks(top.bits())
        .filter(move |s| k.map_or(true, |k| s.count_ones() as usize == k))
        .filter_map(move |support_mask| {
            let bottom = PString::from_raw(top.bits() & !support_mask, top.len());
            let all_present = submasks(support_mask)
                .all(|s| g.contains(&PString::from_raw(bottom.bits() | s, top.len())));
            if !all_present {
                return None;
            }
            let support = (1..=top.len()).filter(|&i| top.bit(i) && !bottom.bit(i)).collect();
            Some(InducedCube { top, bottom, support })
        })
}

/// All induced `Q_k` of `g`, sorted by `(top, bottom)`.
pub fn enumerate_cubes(g: &PCubeGraph, k: usize) -> Vec<InducedCube> {
    let mut out: Vec<InducedCube> = g
        .vertices()
        .iter()
        .filter(|u| u.weight() >= k)
        .flat_map(|&top| cubes_with_top(g, top, Some(k)))
        .collect();
    out.sort();
    out
}

/// Number of induced `Q_k` whose bottom vertex has weight `d`.
pub fn count_cubes_at_distance(g: &PCubeGraph, k: usize, d: usize) -> BigUint {
    let n = g
        .vertices()
        .iter()
        .filter(|u| u.weight() == k + d)
        .flat_map(|&top| cubes_with_top(g, top, Some(k)))
        .count();
    BigUint::from(n)
}

/// `c_k` for every `k`, from a single pass over all tops.
pub fn cube_counts(g: &PCubeGraph) -> Vec<BigUint> {
    let mut counts: Vec<usize> = vec![0; g.n() + 1];
    for &top in g.vertices() {
        for cube in cubes_with_top(g, top, None) {
            counts[cube.k()] += 1;
        }
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    counts.into_iter().map(BigUint::from).collect()
}

/// `c_{k,d}` keyed by `(k, d)`, zero entries omitted.
pub fn distance_census(g: &PCubeGraph) -> BTreeMap<(usize, usize), BigUint> {
    let mut census: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &top in g.vertices() {
        for cube in cubes_with_top(g, top, None) {
            *census.entry((cube.k(), cube.bottom.weight())).or_default() += 1;
        }
    }
    census.into_iter().map(|(key, v)| (key, BigUint::from(v))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::max_weight;

    fn ps(s: &str) -> PString {
        s.parse().unwrap()
    }

    #[test]
    fn submask_walk() {
        let all: Vec<u64> = submasks(0b1010).collect();
        assert_eq!(all, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn fibonacci_cube_examples() {
        let g = PCubeGraph::build(1, 3).unwrap();
        let squares = enumerate_cubes(&g, 2);
        assert_eq!(squares.len(), 1);
        assert_eq!(squares[0].top, ps("101"));
        assert_eq!(squares[0].bottom, ps("000"));
        assert_eq!(squares[0].support, vec![1, 3]);
        assert_eq!(enumerate_cubes(&g, 0).len(), 5);
        assert_eq!(count_cubes_at_distance(&g, 1, 1), BigUint::from(2u8));
        assert_eq!(count_cubes_at_distance(&g, 0, 2), BigUint::from(1u8));
        assert_eq!(count_cubes_at_distance(&g, 3, 0), BigUint::from(0u8));
    }

    #[test]
    fn p2_examples() {
        let g = PCubeGraph::build(2, 4).unwrap();
        assert_eq!(enumerate_cubes(&g, 2).len(), 1);
        let g = PCubeGraph::build(2, 5).unwrap();
        assert_eq!(enumerate_cubes(&g, 1).len(), 11);
    }

    #[test]
    fn beyond_max_weight_is_empty() {
        for p in 1..=3 {
            for n in 0..=10 {
                let g = PCubeGraph::build(p, n).unwrap();
                assert!(enumerate_cubes(&g, max_weight(p, n) + 1).is_empty());
                assert_eq!(cube_counts(&g).len(), max_weight(p, n) + 1);
            }
        }
    }

    #[test]
    fn cubes_are_induced_hypercubes() {
        for p in 0..=3 {
            for n in 0..=8 {
                let g = PCubeGraph::build(p, n).unwrap();
                for k in 0..=max_weight(p, n) {
                    for cube in enumerate_cubes(&g, k) {
                        assert_eq!(cube.top.hamming(&cube.bottom), k);
                        assert!(cube.bottom.is_below(&cube.top));
                        let members = cube.members();
                        assert_eq!(members.len(), 1 << k);
                        let ids: Vec<usize> =
                            members.iter().map(|m| g.vertex_id(m).expect("member in graph")).collect();
                        let internal = g
                            .edges()
                            .iter()
                            .filter(|e| ids.contains(&e.low) && ids.contains(&e.high))
                            .count();
                        let expected = if k == 0 { 0 } else { k << (k - 1) };
                        assert_eq!(internal, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn census_agrees_with_per_k_enumeration() {
        let g = PCubeGraph::build(2, 9).unwrap();
        let counts = cube_counts(&g);
        for (k, c) in counts.iter().enumerate() {
            assert_eq!(*c, BigUint::from(enumerate_cubes(&g, k).len()));
        }
        for ((k, d), v) in distance_census(&g) {
            assert_eq!(v, count_cubes_at_distance(&g, k, d));
        }
    }
}
