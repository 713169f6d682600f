//! Closed-form-versus-oracle suites over parameter grids.
//!
//! Each identity is checked on every grid point and reported once, with the
//! first counterexample if it fails.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};

use crate::cubes::{cube_counts, distance_census};
use crate::error::{Error, Result};
use crate::graph::{direction_edge_count_closed, order_closed, total_edges_closed, PCubeGraph};
use crate::invariants::{
    alpha_inverse, alpha_map, down_translation_holds, far_translation_holds, imbalance_census,
    imbalanced_set, irregularity_closed, irregularity_oracle, mostar_closed, mostar_oracle,
    wiener_closed, wiener_oracle, Side, StringEdge,
};
use crate::poly::{
    cube_coeff_closed, cube_coeff_convolution, cube_poly_closed, dist_coeff_closed,
    dist_cube_poly_closed, weight_poly, BivarPoly,
};
use crate::series::{check_a_identity, check_ck_gf, check_pfib_gf, check_rational_gf, GfKind};
use crate::strings::max_weight;
use crate::Caps;

/// Inclusive integer range written `a..b`, `a..=b` or a single `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub start: usize,
    pub end: usize,
}

impl IntRange {
    pub fn single(v: usize) -> Self {
        IntRange { start: v, end: v }
    }

    pub fn iter(&self) -> RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl FromStr for IntRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a non-negative integer: {t:?}")))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(Error::Parse(format!("empty range {s:?}")));
        }
        Ok(IntRange { start, end })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}

/// Parameters of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    pub p: IntRange,
    pub n: IntRange,
    /// Truncation order for generating functions.
    pub order: usize,
    pub caps: Caps,
}

impl Grid {
    pub fn new(p: IntRange, n: IntRange) -> Self {
        Grid { p, n, order: 20, caps: Caps::default() }
    }

    fn points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.p.iter().flat_map(move |p| self.n.iter().map(move |n| (p, n)))
    }

    fn graph(&self, p: usize, n: usize) -> Result<PCubeGraph> {
        PCubeGraph::build_capped(p, n, &self.caps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Cubes,
    Gf,
    Indices,
    Irregularity,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cubes" => Ok(Suite::Cubes),
            "gf" => Ok(Suite::Gf),
            "indices" => Ok(Suite::Indices),
            "irregularity" => Ok(Suite::Irregularity),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    /// Nothing in the grid satisfies the identity's hypothesis.
    NotApplicable(String),
}

/// Outcome of one identity over a whole grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub cases: usize,
    pub status: Status,
    /// Extra remarks, e.g. grid points where only the oracle ran.
    pub notes: Vec<String>,
}

impl Check {
    fn new(suite: &'static str, name: impl Into<String>) -> Self {
        Check { suite, name: name.into(), cases: 0, status: Status::Pass, notes: Vec::new() }
    }

    /// Records one case; only the first failure is kept.
    fn case(&mut self, ok: bool, diagnostic: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.status == Status::Pass {
            self.status = Status::Fail(diagnostic());
        }
    }

    fn expect_eq<T: PartialEq + fmt::Display>(&mut self, expected: &T, got: &T, at: impl FnOnce() -> String) {
        self.case(expected == got, || format!("{}: expected {expected}, got {got}", at()));
    }

    fn error(&mut self, at: String, err: Error) {
        self.case(false, || format!("{at}: {err}"));
    }

    pub fn passed(&self) -> bool {
        !matches!(self.status, Status::Fail(_))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "PASS [{}] {} ({} cases)", self.suite, self.name, self.cases)?,
            Status::Fail(d) => write!(f, "FAIL [{}] {}: {d}", self.suite, self.name)?,
            Status::NotApplicable(why) => write!(f, "N/A  [{}] {}: {why}", self.suite, self.name)?,
        }
        for note in &self.notes {
            write!(f, "\n       {note}")?;
        }
        Ok(())
    }
}

pub fn run(suite: Suite, grid: &Grid) -> Vec<Check> {
    match suite {
        Suite::Cubes => cubes_suite(grid),
        Suite::Gf => gf_suite(grid),
        Suite::Indices => indices_suite(grid),
        Suite::Irregularity => irregularity_suite(grid),
        Suite::All => [cubes_suite(grid), gf_suite(grid), indices_suite(grid), irregularity_suite(grid)]
            .into_iter()
            .flatten()
            .collect(),
    }
}

fn at(p: usize, n: usize) -> String {
    format!("p={p} n={n}")
}

/// Orders, sizes, direction counts, distances, cube and distance-cube
/// polynomials.
pub fn cubes_suite(grid: &Grid) -> Vec<Check> {
    const S: &str = "cubes";
    let mut order = Check::new(S, "|V| enumerated = F^p_{n+p+1}");
    let mut size = Check::new(S, "|E| enumerated = sum_i F^p_i F^p_{n-i+1}");
    let mut dirs = Check::new(S, "|E_i| enumerated = F^p_i F^p_{n-i+1}");
    let mut isometric = Check::new(S, "BFS distance = Hamming distance");
    let mut ck_binom = Check::new(S, "c_k oracle = binomial double sum");
    let mut ck_expand = Check::new(S, "c_k oracle = (1+x)^a expansion");
    let mut ck_conv = Check::new(S, "c_k oracle = k-fold convolution");
    let mut degree = Check::new(S, "deg C = floor((n+p)/(p+1))");
    let mut ckd = Check::new(S, "c_{k,d} oracle = binomial product");
    let mut daisy_w = Check::new(S, "D(x,q) = W(x+q)");
    let mut daisy_c = Check::new(S, "D(x,q) = C(x+q-1)");
    let mut symmetric = Check::new(S, "D(x,q) = D(q,x)");

    for (p, n) in grid.points() {
        let g = match grid.graph(p, n) {
            Ok(g) => g,
            Err(e) => {
                order.error(at(p, n), e);
                continue;
            }
        };
        order.expect_eq(&order_closed(p, n), &BigUint::from(g.order()), || at(p, n));
        size.expect_eq(&total_edges_closed(p, n), &BigUint::from(g.size()), || at(p, n));
        for i in 1..=n {
            let closed = direction_edge_count_closed(p, n, i).expect("i in range");
            let counted = g.direction_edge_count(i).expect("i in range");
            dirs.expect_eq(&closed, &counted, || format!("{} i={i}", at(p, n)));
        }
        let mut iso = true;
        for s in 0..g.order() {
            let dist = g.bfs_distances(s);
            iso &= (0..g.order()).all(|t| dist[t] as usize == g.vertex(s).hamming(&g.vertex(t)));
        }
        isometric.case(iso, || at(p, n));

        let oracle = cube_counts(&g);
        let expanded = cube_poly_closed(p, n);
        degree.expect_eq(&max_weight(p, n), &expanded.degree().unwrap_or(0), || at(p, n));
        for k in 0..=n.max(oracle.len()) {
            let brute = oracle.get(k).cloned().unwrap_or_default();
            let where_k = || format!("{} k={k}", at(p, n));
            ck_binom.expect_eq(&cube_coeff_closed(p, n, k), &brute, where_k);
            ck_expand.expect_eq(&expanded.coeff(k), &BigInt::from(brute.clone()), where_k);
            ck_conv.expect_eq(&cube_coeff_convolution(p, n, k), &brute, where_k);
        }

        let census = distance_census(&g);
        for k in 0..=n {
            for d in 0..=n - k {
                let brute = census.get(&(k, d)).cloned().unwrap_or_default();
                ckd.expect_eq(&dist_coeff_closed(p, n, k, d), &brute, || format!("{} k={k} d={d}", at(p, n)));
            }
        }
        let d = dist_cube_poly_closed(p, n);
        daisy_w.expect_eq(&weight_poly(p, n).substitute_x_plus_q(), &d, || at(p, n));
        let shift = &(&BivarPoly::x() + &BivarPoly::q()) - &BivarPoly::one();
        daisy_c.expect_eq(&expanded.compose_bivar(&shift), &d, || at(p, n));
        symmetric.expect_eq(&d.swap_variables(), &d, || at(p, n));
    }
    vec![order, size, dirs, isometric, ck_binom, ck_expand, ck_conv, degree, ckd, daisy_w, daisy_c, symmetric]
}

/// Generating functions to the grid's truncation order. Brute-force cube
/// counts are compared for `n` up to the end of the grid's `n` range.
pub fn gf_suite(grid: &Grid) -> Vec<Check> {
    const S: &str = "gf";
    let order = grid.order;
    let oracle_max = grid.n.end.min(order);
    let mut pfib = Check::new(S, "sum F^p_n t^n = t/(1-t-t^{p+1})");
    let mut kinds = [
        (GfKind::Cube, Check::new(S, "sum C t^n = (1+(1+x)(t+..+t^p))/(1-t-(1+x)t^{p+1})")),
        (GfKind::Weight, Check::new(S, "sum W t^n = (1+x(t+..+t^p))/(1-t-x t^{p+1})")),
        (GfKind::Distance, Check::new(S, "sum D t^n = (1+(q+x)(t+..+t^p))/(1-t-(q+x)t^{p+1})")),
    ];
    let mut a_identity = Check::new(S, "t^p A(y,t) = 1/(1-t-y t^{p+1}) - (1+t+..+t^{p-1})");
    let mut ck = Check::new(S, "sum c_k t^n = t^{kp-p+k}/(1-t-t^{p+1})^{k+1}, k = 0..3");
    let mut hypercube = Check::new(S, "p = 0: C(Q_n) = (2+x)^n, D(Q_n) = (1+x+q)^n");

    for p in grid.p.iter() {
        let where_p = |m: crate::series::Mismatch| format!("p={p} N={order}: {m}");
        let res = check_pfib_gf(p, order);
        pfib.case(res.is_ok(), || where_p(res.clone().unwrap_err()));
        for (kind, check) in kinds.iter_mut() {
            let res = check_rational_gf(p, *kind, order);
            check.case(res.is_ok(), || where_p(res.clone().unwrap_err()));
        }
        let res = check_a_identity(p, order);
        a_identity.case(res.is_ok(), || where_p(res.clone().unwrap_err()));
        for k in 0..=3 {
            let res = check_ck_gf(p, k, order, oracle_max.min(grid.caps.graph.saturating_sub(1)));
            ck.case(res.is_ok(), || format!("k={k} {}", where_p(res.clone().unwrap_err())));
        }
        if p == 0 {
            let cube = crate::series::cube_gf(0, order);
            let dist = crate::series::distance_gf(0, order);
            let base = crate::poly::Polynomial::linear(2);
            let dbase = &(&BivarPoly::x() + &BivarPoly::q()) + &BivarPoly::one();
            for n in 0..=order {
                hypercube.expect_eq(&base.pow(n), cube.coeff(n), || format!("n={n}"));
                hypercube.expect_eq(&dbase.pow(n), dist.coeff(n), || format!("n={n}"));
            }
        }
    }
    let mut out = vec![pfib];
    out.extend(kinds.into_iter().map(|(_, c)| c));
    out.push(a_identity);
    out.push(ck);
    if hypercube.cases == 0 {
        hypercube.status = Status::NotApplicable("p = 0 not in grid".into());
    }
    out.push(hypercube);
    out
}

pub fn indices_suite(grid: &Grid) -> Vec<Check> {
    const S: &str = "indices";
    let mut wiener = Check::new(S, "Wiener closed = BFS oracle");
    let mut mostar = Check::new(S, "Mostar closed = BFS oracle");
    let mut gap = Check::new(S, "Wiener - Mostar = sum_i |E_i|^2");
    for (p, n) in grid.points() {
        let g = match grid.graph(p, n) {
            Ok(g) => g,
            Err(e) => {
                wiener.error(at(p, n), e);
                continue;
            }
        };
        wiener.expect_eq(&wiener_closed(p, n), &wiener_oracle(&g), || at(p, n));
        mostar.expect_eq(&mostar_closed(p, n), &mostar_oracle(&g), || at(p, n));
        let squares: BigUint = (1..=n)
            .map(|i| {
                let e = g.direction_edge_count(i).expect("i in range");
                &e * &e
            })
            .sum();
        gap.expect_eq(&(wiener_closed(p, n) - mostar_closed(p, n)), &squares, || at(p, n));
    }
    vec![wiener, mostar, gap]
}

pub fn irregularity_suite(grid: &Grid) -> Vec<Check> {
    const S: &str = "irregularity";
    let mut irr = Check::new(S, "irr closed = degree oracle (n >= p)");
    let mut imb = Check::new(S, "imb(e) = number of imbalanced edges for e");
    let mut down = Check::new(S, "x + d_j in V implies y + d_j in V");
    let mut far = Check::new(S, "|i - j| > p: x + d_j in V iff y + d_j in V");
    let mut sizes = Check::new(S, "|R_d| = |L_d| = |E(Gamma_{n-d}^p)|");
    let mut alpha = Check::new(S, "alpha: R_d, L_d -> E(Gamma_{n-d}^p) bijective, round-trips");
    let mut oracle_only = Vec::new();

    for (p, n) in grid.points() {
        let g = match grid.graph(p, n) {
            Ok(g) => g,
            Err(e) => {
                irr.error(at(p, n), e);
                continue;
            }
        };
        match irregularity_closed(p, n) {
            Ok(closed) => irr.expect_eq(&closed, &irregularity_oracle(&g), || at(p, n)),
            Err(_) => oracle_only.push(format!("{} (oracle irr = {})", at(p, n), irregularity_oracle(&g))),
        }
        down.case(down_translation_holds(&g), || at(p, n));
        far.case(far_translation_holds(&g), || at(p, n));
        let census = imbalance_census(&g);
        imb.case(census.iter().all(|r| r.imbalance == r.imbalanced_edges.len()), || at(p, n));
        if n < p {
            continue;
        }
        for d in 1..=p {
            let expected = total_edges_closed(p, n - d);
            let target = match grid.graph(p, n - d) {
                Ok(t) => t,
                Err(e) => {
                    alpha.error(at(p, n - d), e);
                    continue;
                }
            };
            let target_edges: std::collections::BTreeSet<StringEdge> =
                target.edges().iter().map(|e| StringEdge::of(&target, e)).collect();
            for side in [Side::Right, Side::Left] {
                let set = imbalanced_set(&census, side, d);
                let where_d = || format!("{} d={d} {side:?}", at(p, n));
                sizes.expect_eq(&expected, &BigUint::from(set.len()), where_d);
                let images: Result<std::collections::BTreeSet<StringEdge>> =
                    set.iter().map(|pair| alpha_map(&g, pair)).collect();
                let ok = match images {
                    Ok(images) => {
                        images.len() == set.len()
                            && images == target_edges
                            && target_edges.iter().all(|z| {
                                alpha_inverse(&g, side, d, z)
                                    .and_then(|pair| alpha_map(&g, &pair))
                                    .is_ok_and(|back| back == *z)
                            })
                    }
                    Err(_) => false,
                };
                alpha.case(ok, where_d);
            }
        }
    }
    if irr.cases == 0 && !oracle_only.is_empty() {
        irr.status = Status::NotApplicable("theorem not applicable (n < p), oracle-only".into());
    }
    irr.notes = oracle_only
        .into_iter()
        .map(|s| format!("theorem not applicable (n < p), oracle-only: {s}"))
        .collect();
    vec![irr, imb, down, far, sizes, alpha]
}
