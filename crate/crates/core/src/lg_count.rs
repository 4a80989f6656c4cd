//! Component count `k_LG` of the central fiber of the compactified
//! Landau-Ginzburg model of a complete intersection.
//!
//! Exceptional divisors over `lambda = 0` sit over canonical strata labelled
//! by a distinguished factor `j` and counts `i_1, .., i_k` of vanishing
//! `x_{t,*}` variables, with `i_t <= d_t - 1` for `t != j` and
//! `i_j <= d_j - 2` (and not all zero when `l = 0`). A stratum occurs
//! `prod_t C(d_t, i_t)` times and carries `G(d_j, sum i + l)` divisors.

use serde::{Deserialize, Serialize};

use crate::exactmath::{choose, ExactInt};
use crate::jacobian_ring::{delta_j, hodge_h1, CompleteIntersection};
use crate::resolution::FgTable;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StratumLabel {
    /// Distinguished factor, counted from 1.
    pub j: usize,
    pub ivec: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumContribution {
    pub label: StratumLabel,
    pub multiplicity: ExactInt,
    pub per_stratum_divisors: ExactInt,
}

impl StratumContribution {
    pub fn total(&self) -> ExactInt {
        &self.multiplicity * &self.per_stratum_divisors
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    LZero,
    LPositive,
}

/// Which evaluation of `G` feeds the per-stratum divisor count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GRoute {
    Closed,
    Recursive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlgReport {
    pub dim: u32,
    pub degrees: Vec<u32>,
    pub k_lg: ExactInt,
    pub central_fiber_components: ExactInt,
    pub branch: Branch,
    pub contributions: Vec<StratumContribution>,
}

/// Canonical strata with their multiplicities and `G` values (closed form).
pub fn enumerate_strata(ci: &CompleteIntersection) -> Vec<StratumContribution> {
    enumerate_strata_with(ci, GRoute::Closed)
}

pub fn enumerate_strata_with(ci: &CompleteIntersection, route: GRoute) -> Vec<StratumContribution> {
    let degrees = ci.degrees();
    let k = degrees.len();
    let l = ci.l() as u32;
    let mut table = FgTable::new();
    let mut out = Vec::new();
    for j in 0..k {
        let bounds: Vec<u32> = degrees
            .iter()
            .enumerate()
            .map(|(t, &d)| if t == j { d - 2 } else { d - 1 })
            .collect();
        let mut ivec = vec![0u32; k];
        loop {
            let vanishing: u32 = ivec.iter().sum();
            if l > 0 || vanishing > 0 {
                let multiplicity = degrees
                    .iter()
                    .zip(&ivec)
                    .fold(ExactInt::one(), |acc, (&d, &i)| {
                        acc * choose(d as u64, i as i64)
                    });
                let dj = degrees[j];
                let per_stratum_divisors = match route {
                    GRoute::Closed => choose(dj as u64 - 1, (vanishing + l) as i64),
                    GRoute::Recursive => table.g(dj, vanishing + l),
                };
                out.push(StratumContribution {
                    label: StratumLabel {
                        j: j + 1,
                        ivec: ivec.clone(),
                    },
                    multiplicity,
                    per_stratum_divisors,
                });
            }
            if !step(&mut ivec, &bounds) {
                break;
            }
        }
    }
    out
}

fn step(idx: &mut [u32], bounds: &[u32]) -> bool {
    for (i, &b) in idx.iter_mut().zip(bounds) {
        if *i < b {
            *i += 1;
            return true;
        }
        *i = 0;
    }
    false
}

fn assemble(ci: &CompleteIntersection, contributions: Vec<StratumContribution>) -> KlgReport {
    let strata_sum: ExactInt = contributions.iter().map(StratumContribution::total).sum();
    let (branch, k_lg) = if ci.l() == 0 {
        // the central fiber of the singular model already has k components
        let k = ci.codim() as u64;
        (
            Branch::LZero,
            strata_sum + ExactInt::from(k) - ExactInt::one(),
        )
    } else {
        (Branch::LPositive, strata_sum)
    };
    KlgReport {
        dim: ci.dim(),
        degrees: ci.degrees().to_vec(),
        central_fiber_components: &k_lg + &ExactInt::one(),
        k_lg,
        branch,
        contributions,
    }
}

pub fn k_lg(ci: &CompleteIntersection) -> KlgReport {
    assemble(ci, enumerate_strata(ci))
}

/// Same count with `G` taken from the mutual recursion.
pub fn k_lg_recursive(ci: &CompleteIntersection) -> KlgReport {
    assemble(ci, enumerate_strata_with(ci, GRoute::Recursive))
}

/// Inclusion-exclusion closed form:
/// `sum_j sum_I (-1)^{k-|I|} C(sum_{s in I} d_s + d_j - 1, N + k)`, plus
/// `-(N + 2k) + k - 1` when `l = 0`.
pub fn k_lg_closed(ci: &CompleteIntersection) -> ExactInt {
    let double_sum: ExactInt = (1..=ci.codim())
        .map(|j| delta_j(ci, j).expect("j in range"))
        .sum();
    if ci.l() == 0 {
        let k = ci.codim() as u64;
        let n = ci.dim() as u64;
        double_sum - ExactInt::from(n + 2 * k) + ExactInt::from(k) - ExactInt::one()
    } else {
        double_sum
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub dim: u32,
    pub degrees: Vec<u32>,
    pub index: u64,
    pub holds: bool,
    pub h: ExactInt,
    pub h_pr: ExactInt,
    pub k_lg: ExactInt,
}

/// `h^{1,N-1} = k_LG` for `N > 2`, `h^{1,1} = k_LG + 1` for `N = 2`;
/// equivalently `h_pr = k_LG`. Both forms must agree for `holds`.
pub fn verify_main_theorem(ci: &CompleteIntersection) -> TheoremReport {
    let hodge = hodge_h1(ci);
    let klg = k_lg(ci).k_lg;
    let branchwise = if ci.dim() == 2 {
        hodge.h == &klg + &ExactInt::one()
    } else {
        hodge.h == klg
    };
    let primitive = hodge.h_pr == klg;
    TheoremReport {
        dim: ci.dim(),
        degrees: ci.degrees().to_vec(),
        index: ci.index(),
        holds: branchwise && primitive,
        h: hodge.h,
        h_pr: hodge.h_pr,
        k_lg: klg,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(n: u32, degs: &[u32]) -> CompleteIntersection {
        CompleteIntersection::new(n, degs.to_vec()).unwrap()
    }

    fn summary(c: &[StratumContribution]) -> Vec<(usize, Vec<u32>, i64, i64)> {
        c.iter()
            .map(|s| {
                (
                    s.label.j,
                    s.label.ivec.clone(),
                    s.multiplicity.to_i64().unwrap(),
                    s.per_stratum_divisors.to_i64().unwrap(),
                )
            })
            .collect()
    }

    #[test]
    fn cubic_surface_strata() {
        let strata = enumerate_strata(&ci(2, &[3]));
        assert_eq!(summary(&strata), vec![(1, vec![1], 3, 2)]);
    }

    #[test]
    fn cubic_threefold_strata() {
        let strata = enumerate_strata(&ci(3, &[3]));
        assert_eq!(
            summary(&strata),
            vec![(1, vec![0], 1, 2), (1, vec![1], 3, 1)]
        );
        let total: ExactInt = strata.iter().map(StratumContribution::total).sum();
        assert_eq!(total, 5);
    }

    #[test]
    fn cubic_fourfold_strata() {
        let strata = enumerate_strata(&ci(4, &[3]));
        assert_eq!(
            summary(&strata),
            vec![(1, vec![0], 1, 1), (1, vec![1], 3, 0)]
        );
    }

    #[test]
    fn stratum_bounds() {
        let c = ci(5, &[3, 4]);
        for s in enumerate_strata(&c) {
            for (t, (&i, &d)) in s.label.ivec.iter().zip(c.degrees()).enumerate() {
                let cap = if t + 1 == s.label.j { d - 2 } else { d - 1 };
                assert!(i <= cap);
            }
        }
        // l = 0 excludes the all-zero label
        let x22 = ci(2, &[2, 2]);
        assert_eq!(x22.l(), 0);
        assert!(enumerate_strata(&x22)
            .iter()
            .all(|s| s.label.ivec.iter().any(|&i| i > 0)));
    }

    #[test]
    fn k_lg_examples() {
        let surface = k_lg(&ci(2, &[3]));
        assert_eq!(surface.k_lg, 6);
        assert_eq!(surface.central_fiber_components, 7);
        assert_eq!(surface.branch, Branch::LZero);
        for n in 5..=8 {
            assert_eq!(k_lg(&ci(n, &[3])).k_lg, 0);
        }
        let quartic = k_lg(&ci(3, &[4]));
        assert_eq!(quartic.k_lg, 30);
        assert_eq!(k_lg(&ci(3, &[3])).branch, Branch::LPositive);
        // two quadrics in P^4: l = 0, k = 2 adds one
        assert_eq!(k_lg(&ci(2, &[2, 2])).k_lg, 5);
    }

    #[test]
    fn recursive_route_agrees() {
        for c in crate::jacobian_ring::fano_sweep(2, 6, 3, 5) {
            assert_eq!(k_lg(&c), k_lg_recursive(&c), "{c}");
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(k_lg_closed(&ci(2, &[3])), 6);
        assert_eq!(k_lg_closed(&ci(3, &[3])), 5);
        assert_eq!(k_lg_closed(&ci(3, &[4])), 30);
    }

    #[test]
    fn theorem_examples() {
        let s = verify_main_theorem(&ci(2, &[3]));
        assert!(s.holds);
        assert_eq!((s.h.to_i64(), s.k_lg.to_i64()), (Some(7), Some(6)));
        let t = verify_main_theorem(&ci(3, &[3]));
        assert!(t.holds);
        assert_eq!((t.h.to_i64(), t.k_lg.to_i64()), (Some(5), Some(5)));
        assert!(verify_main_theorem(&ci(4, &[2, 2])).holds);
    }

    #[test]
    fn index_one_hypersurfaces() {
        for n in 2..=10u32 {
            let expected = choose(2 * n as u64 + 1, n as i64 + 1) - ExactInt::from(n as u64 + 2);
            assert_eq!(k_lg(&ci(n, &[n + 1])).k_lg, expected);
        }
    }
}
