//! The lambda-massed conditions.
//!
//! (M1) is a single count. For (M2), a violating separation `(A, B)` of
//! order below `|X|` can be shrunk to one whose far side `B \ A` is a single
//! component of `G - S` avoiding `X`: `rho` is additive over components, so
//! a union exceeds `lambda * |B \ A|` only if one of its components does.
//! Separators are enumerated by size, then lexicographically, and the first
//! violating component (by smallest member) is reported. Its separator is
//! then exactly `N(C)`.

use itertools::Itertools;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use super::Separation;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::{Graph, VertexId, VertexSet};

pub type Lambda = Ratio<i64>;

/// Most separators `is_massed` will enumerate before refusing.
pub const SEPARATOR_BUDGET: u128 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MassedReport {
    #[serde(serialize_with = "ratio_str")]
    pub lambda: Lambda,
    pub m1_holds: bool,
    /// `rho(V \ X) - lambda * |V \ X|`.
    #[serde(serialize_with = "ratio_str")]
    pub m1_slack: Lambda,
    pub m2_holds: bool,
    pub m2_violator: Option<Separation>,
    pub separators_checked: u64,
}

impl MassedReport {
    pub fn massed(&self) -> bool {
        self.m1_holds && self.m2_holds
    }
}

fn ratio_str<S: Serializer>(r: &Lambda, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Parses `"N"` or `"N/D"`.
pub fn parse_lambda(text: &str) -> Result<Lambda> {
    let bad = || Error::domain(format!("lambda must be N or N/D, got {text:?}"));
    let (n, d) = match text.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: i64 = n.parse().map_err(|_| bad())?;
    let d: i64 = d.parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(n, d))
}

fn exceeds(rho: usize, lambda: &Lambda, size: usize) -> bool {
    // rho > (n/d) * size  with d > 0 after normalization
    let (n, d) = (*lambda.numer() as i128, *lambda.denom() as i128);
    (rho as i128) * d > n * size as i128
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

pub fn is_massed(g: &Graph, x: &VertexSet, lambda: Lambda) -> Result<MassedReport> {
    is_massed_with(g, x, lambda, Exec::default())
}

pub fn is_massed_with(g: &Graph, x: &VertexSet, lambda: Lambda, exec: Exec) -> Result<MassedReport> {
    g.check_set(x)?;
    if x.is_empty() {
        return Err(Error::domain("the root set must be nonempty"));
    }
    let n = g.vertex_count();
    let budget: u128 = (0..x.len().min(n + 1)).map(|j| binomial(n as u128, j as u128)).sum();
    if budget > SEPARATOR_BUDGET {
        return Err(Error::ResourceGuard(format!(
            "{budget} candidate separators for n = {n}, |X| = {} exceeds {SEPARATOR_BUDGET}",
            x.len()
        )));
    }

    let rest = g.vertex_set().difference(x);
    let m1_slack = Ratio::from_integer(g.rho_unchecked(&rest) as i64) - lambda * rest.len() as i64;
    let m1_holds = m1_slack > Ratio::from_integer(0);

    let ids: Vec<VertexId> = g.vertices().collect();
    let mut chunks: Vec<(usize, Option<usize>)> = vec![(0, None)];
    for size in 1..x.len().min(n + 1) {
        chunks.extend((0..=n - size).map(|first| (size, Some(first))));
    }
    let check = |s: &VertexSet| -> Option<Separation> {
        let outside = g.vertex_set().difference(s);
        g.components_within(&outside)
            .into_iter()
            .filter(|c| c.is_disjoint(x))
            .find(|c| exceeds(g.rho_unchecked(c), &lambda, c.len()))
            .map(|c| Separation::from_side(g, &g.neighborhood_unchecked(&c), &c))
    };
    let scan = |&(size, first): &(usize, Option<usize>)| -> (u64, Option<Separation>) {
        let Some(first) = first else {
            return (1, check(&VertexSet::new()));
        };
        let mut count = 0;
        for tail in ids[first + 1..].iter().combinations(size - 1) {
            let mut s: VertexSet = tail.into_iter().collect();
            s.insert(ids[first]);
            count += 1;
            if let Some(sep) = check(&s) {
                return (count, Some(sep));
            }
        }
        (count, None)
    };
    let results = match exec {
        Exec::Sequential => {
            let mut out = Vec::new();
            for c in &chunks {
                let r = scan(c);
                let stop = r.1.is_some();
                out.push(r);
                if stop {
                    break;
                }
            }
            out
        }
        Exec::Parallel => exec.map(&chunks, scan),
    };
    let mut separators_checked = 0;
    let mut m2_violator = None;
    for (count, sep) in results {
        separators_checked += count;
        if sep.is_some() {
            m2_violator = sep;
            break;
        }
    }
    Ok(MassedReport {
        lambda,
        m1_holds,
        m1_slack,
        m2_holds: m2_violator.is_none(),
        m2_violator,
        separators_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[VertexId]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn complete_seven() {
        let g = Graph::complete(7);
        let r = is_massed(&g, &set(&[0, 1, 2, 3, 4]), Ratio::from_integer(5)).unwrap();
        // the two outside vertices carry 6 + 6 - 1 = 11 edges
        assert_eq!(r.m1_slack, Ratio::from_integer(1));
        assert!(r.m1_holds && r.m2_holds && r.massed());
    }

    #[test]
    fn empty_remainder_fails_m1() {
        let g = Graph::cycle(&[1, 2, 3, 4, 5]).unwrap();
        let r = is_massed(&g, g.vertex_set(), Ratio::from_integer(5)).unwrap();
        assert!(!r.m1_holds);
        assert_eq!(r.m1_slack, Ratio::from_integer(0));
    }

    #[test]
    fn dense_block_behind_cut_vertex_violates_m2() {
        // K6 on 0..6 hanging off vertex 0, roots 6,7 on a path 6-0, 7-0
        let mut g = Graph::complete(6);
        g.add_edge(6, 0).unwrap();
        g.add_edge(7, 0).unwrap();
        let r = is_massed(&g, &set(&[6, 7]), Ratio::from_integer(2)).unwrap();
        assert!(!r.m2_holds);
        let sep = r.m2_violator.unwrap();
        assert_eq!(sep.separator(), set(&[0]));
        assert_eq!(sep.b_only(), set(&[1, 2, 3, 4, 5]));
        sep.check(&g, Some(&set(&[6, 7]))).unwrap();
    }

    #[test]
    fn strategies_agree() {
        let mut g = Graph::complete(6);
        g.add_edge(6, 0).unwrap();
        g.add_edge(7, 1).unwrap();
        g.add_edge(6, 7).unwrap();
        for lambda in ["1", "2", "5/2", "3", "7/2"] {
            let l = parse_lambda(lambda).unwrap();
            let a = is_massed_with(&g, &set(&[6, 7, 2]), l, Exec::Sequential).unwrap();
            let b = is_massed_with(&g, &set(&[6, 7, 2]), l, Exec::Parallel).unwrap();
            assert_eq!(a.m2_violator, b.m2_violator);
            assert_eq!(a.m1_slack, b.m1_slack);
        }
    }

    #[test]
    fn lambda_parsing_and_json() {
        assert_eq!(parse_lambda("10/4").unwrap(), Ratio::new(5, 2));
        assert!(parse_lambda("1/0").is_err());
        assert!(parse_lambda("x").is_err());
        let r = is_massed(&Graph::complete(7), &set(&[0, 1, 2, 3, 4]), Ratio::new(9, 2)).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["lambda"], "9/2");
        assert_eq!(json["m1_slack"], "2");
    }

    #[test]
    fn resource_guard() {
        let g = Graph::empty(128);
        let x: VertexSet = (0..8).collect();
        assert!(matches!(is_massed(&g, &x, Ratio::from_integer(1)), Err(Error::ResourceGuard(_))));
    }
}
