//! Dimensions of the bigraded Jacobian-type rings of a complete intersection
//! and the Hodge number `h^{1,N-1}` they compute.
//!
//! For `F = w_1 f_1 + ... + w_k f_k` with `deg z = (0, 1)` and
//! `deg w_j = (1, -d_j)`, the ring `R'` is `S / (f_1, ..., f_k)` and `R` is
//! the full Jacobian quotient. Only the `(1, -i(X))` components matter here.
//! Three routes are provided for `dim R'_{1,-i(X)}`: the inclusion-exclusion
//! binomial sum, a nested sum over the head exponents, and a monomial count.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{advance_odometer, choose, ExactInt};

/// A smooth Fano complete intersection `X` of dimension `N` in `P^{N+k}`,
/// described only by its degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawCompleteIntersection")]
pub struct CompleteIntersection {
    dim: u32,
    degrees: Vec<u32>,
}

#[derive(Deserialize)]
struct RawCompleteIntersection {
    dim: u32,
    degrees: Vec<u32>,
}

impl TryFrom<RawCompleteIntersection> for CompleteIntersection {
    type Error = Error;

    fn try_from(raw: RawCompleteIntersection) -> Result<Self> {
        CompleteIntersection::new(raw.dim, raw.degrees)
    }
}

impl CompleteIntersection {
    /// Validates `k >= 1`, `N >= 2`, `d_t >= 2` and the Fano bound `sum d <= N + k`.
    pub fn new(dim: u32, degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::NoDegrees);
        }
        if dim < 2 {
            return Err(Error::DimensionTooSmall(dim));
        }
        if let Some(&d) = degrees.iter().find(|&&d| d < 2) {
            return Err(Error::DegreeTooSmall(d));
        }
        let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
        let bound = dim as u64 + degrees.len() as u64;
        if sum > bound {
            return Err(Error::NotFano { sum, bound });
        }
        Ok(CompleteIntersection { dim, degrees })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Number of defining equations.
    pub fn codim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree_sum(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum()
    }

    /// Fano index `i(X) = N + k + 1 - sum d_t`, always at least 1.
    pub fn index(&self) -> u64 {
        self.dim as u64 + self.codim() as u64 + 1 - self.degree_sum()
    }

    /// `l = i(X) - 1`, the number of `y` variables of the mirror polynomial.
    pub fn l(&self) -> u64 {
        self.index() - 1
    }

    /// Homogeneous coordinates of the ambient projective space, `N + k + 1`.
    pub fn ambient_vars(&self) -> u64 {
        self.dim as u64 + self.codim() as u64 + 1
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degs: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(
            f,
            "X_({}) in P^{}",
            degs.join(","),
            self.dim as usize + self.codim()
        )
    }
}

/// All Fano complete intersections with `min_dim <= N <= max_dim`,
/// `1 <= k <= max_k` and `2 <= d_t <= max_degree`, degrees non-decreasing.
/// Ordered by `(N, degrees)`.
pub fn fano_sweep(
    min_dim: u32,
    max_dim: u32,
    max_k: usize,
    max_degree: u32,
) -> Vec<CompleteIntersection> {
    let mut out = Vec::new();
    for dim in min_dim.max(2)..=max_dim {
        let mut stack: Vec<Vec<u32>> = (2..=max_degree).map(|d| vec![d]).collect();
        let mut found = Vec::new();
        while let Some(degs) = stack.pop() {
            if let Ok(ci) = CompleteIntersection::new(dim, degs.clone()) {
                found.push(ci);
            }
            if degs.len() < max_k {
                let last = *degs.last().unwrap();
                for d in last..=max_degree {
                    let mut next = degs.clone();
                    next.push(d);
                    // sum d_t - k only grows when appending d >= 2
                    let excess: i64 = next.iter().map(|&x| x as i64 - 1).sum();
                    if excess <= dim as i64 {
                        stack.push(next);
                    }
                }
            }
        }
        found.sort();
        out.extend(found);
    }
    out
}

/// Dimension of the space of degree-`d` forms in `m` variables, zero for `d < 0`.
pub fn poly_space_dim(d: i64, m: i64) -> Result<ExactInt> {
    if m <= 0 {
        return Err(Error::NonPositiveArity(m));
    }
    if d < 0 {
        return Ok(ExactInt::zero());
    }
    Ok(choose((d + m - 1) as u64, m - 1))
}

/// `sum_{I subset {1..k}} (-1)^{k-|I|} C(sum_{s in I} d_s + d_j - 1, N + k)`,
/// for `j` counted from 1.
pub fn delta_j(ci: &CompleteIntersection, j: usize) -> Result<ExactInt> {
    let k = ci.codim();
    if j == 0 || j > k {
        return Err(Error::FactorIndex { index: j, k });
    }
    let dj = ci.degrees[j - 1] as u64;
    let bottom = (ci.dim as usize + k) as i64;
    let mut acc = ExactInt::zero();
    for mask in 0u32..(1 << k) {
        let subset_sum: u64 = (0..k)
            .filter(|t| mask & (1 << t) != 0)
            .map(|t| ci.degrees[t] as u64)
            .sum();
        let term = choose(subset_sum + dj - 1, bottom);
        if (k - mask.count_ones() as usize).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// `dim R'_{1,-i(X)}` as `sum_j delta_j`.
pub fn dim_r_prime_1(ci: &CompleteIntersection) -> ExactInt {
    (1..=ci.codim())
        .map(|j| delta_j(ci, j).expect("j in range"))
        .sum()
}

/// Counts the monomial basis `w_j z^e` of `R'_{1,-i(X)}(z_1^{d_1}, ..., z_k^{d_k})`
/// directly: head exponents `e_t <= d_t - 1` are enumerated, the free tail of
/// `N + 1` variables is counted by stars and bars.
pub fn count_monomials_oracle(ci: &CompleteIntersection) -> ExactInt {
    (1..=ci.codim())
        .map(|j| count_monomials_for_factor(ci, j).expect("j in range"))
        .sum()
}

/// The part of [`count_monomials_oracle`] carrying `w_j` (`j` counted from 1).
pub fn count_monomials_for_factor(ci: &CompleteIntersection, j: usize) -> Result<ExactInt> {
    let k = ci.codim();
    if j == 0 || j > k {
        return Err(Error::FactorIndex { index: j, k });
    }
    let target = ci.degrees[j - 1] as i64 - ci.index() as i64;
    let mut total = ExactInt::zero();
    if target < 0 {
        return Ok(total);
    }
    let tail_vars = ci.dim as i64 + 1;
    let head_bounds: Vec<u64> = ci.degrees.iter().map(|&d| d as u64 - 1).collect();
    let mut head = vec![0u64; k];
    loop {
        let used = head.iter().sum::<u64>() as i64;
        if used <= target {
            total += poly_space_dim(target - used, tail_vars)?;
        }
        if !advance_odometer(&mut head, &head_bounds) {
            break;
        }
    }
    Ok(total)
}

/// `dim R_{1,-i(X)}`: equal to `dim R'` for index at least 2, and smaller by
/// `N + k + 1` (the independent `dF/dz_s`) for index 1.
pub fn dim_r_1(ci: &CompleteIntersection) -> ExactInt {
    let prime = dim_r_prime_1(ci);
    if ci.index() == 1 {
        prime - ExactInt::from(ci.ambient_vars())
    } else {
        prime
    }
}

/// The nested-sum form
/// `sum_j sum_{0 <= i_t <= d_t - 1} C(sum_t (d_t - i_t) + d_j - k - 1, N)`
/// with the same index-1 correction as [`dim_r_1`].
///
/// Each summand counts degree-`(d_j - i(X) - sum i_t)` forms in the `N + 1`
/// tail variables, so a negative degree contributes zero.
pub fn alt_dim_formula(ci: &CompleteIntersection) -> ExactInt {
    let n = ci.dim as i64;
    let k = ci.codim() as i64;
    let bounds: Vec<u64> = ci.degrees.iter().map(|&d| d as u64 - 1).collect();
    let degree_sum = ci.degree_sum() as i64;
    let mut total = ExactInt::zero();
    for &dj in &ci.degrees {
        let mut idx = vec![0u64; bounds.len()];
        loop {
            let top = degree_sum - idx.iter().sum::<u64>() as i64 + dj as i64 - k - 1;
            if top >= n {
                total += choose(top as u64, n);
            }
            if !advance_odometer(&mut idx, &bounds) {
                break;
            }
        }
    }
    if ci.index() == 1 {
        total - ExactInt::from(ci.ambient_vars())
    } else {
        total
    }
}

/// Hodge data in the `(1, N-1)` slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeReport {
    pub dim: u32,
    pub degrees: Vec<u32>,
    pub index: u64,
    pub h_pr: ExactInt,
    pub h: ExactInt,
    pub dim_r_prime: ExactInt,
    pub dim_r: ExactInt,
}

/// `h_pr^{1,N-1} = dim R_{1,-i(X)}`; the hyperplane class adds one when `N = 2`.
pub fn hodge_h1(ci: &CompleteIntersection) -> HodgeReport {
    let dim_r_prime = dim_r_prime_1(ci);
    let dim_r = dim_r_1(ci);
    let h_pr = dim_r.clone();
    let h = if ci.dim == 2 {
        &h_pr + &ExactInt::one()
    } else {
        h_pr.clone()
    };
    HodgeReport {
        dim: ci.dim,
        degrees: ci.degrees.clone(),
        index: ci.index(),
        h_pr,
        h,
        dim_r_prime,
        dim_r,
    }
}

/// Closed form of `h_pr^{1,N-1}` for a hypersurface of degree `d` in `P^{N+1}`:
/// `C(2d-1, N+1)` when `d <= N`, `C(2N+1, N+1) - N - 2` when `d = N + 1`.
pub fn hypersurface_corollary(n: u32, d: u32) -> Result<ExactInt> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    if d < 2 || d > n + 1 {
        return Err(Error::HypersurfaceDegree { n, d, max: n + 1 });
    }
    let bottom = n as i64 + 1;
    if d <= n {
        Ok(choose(2 * d as u64 - 1, bottom))
    } else {
        Ok(choose(2 * n as u64 + 1, bottom) - ExactInt::from(n as u64 + 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(n: u32, degs: &[u32]) -> CompleteIntersection {
        CompleteIntersection::new(n, degs.to_vec()).unwrap()
    }

    #[test]
    fn validation_names_the_constraint() {
        assert_eq!(CompleteIntersection::new(3, vec![]), Err(Error::NoDegrees));
        assert_eq!(
            CompleteIntersection::new(1, vec![2]),
            Err(Error::DimensionTooSmall(1))
        );
        assert_eq!(
            CompleteIntersection::new(3, vec![1, 3]),
            Err(Error::DegreeTooSmall(1))
        );
        assert_eq!(
            CompleteIntersection::new(3, vec![5]),
            Err(Error::NotFano { sum: 5, bound: 4 })
        );
        assert!(CompleteIntersection::new(3, vec![4]).is_ok());
    }

    #[test]
    fn index_and_l() {
        let cubic3 = ci(3, &[3]);
        assert_eq!(cubic3.index(), 2);
        assert_eq!(cubic3.l(), 1);
        assert_eq!(ci(4, &[2, 2]).index(), 3);
        assert_eq!(ci(3, &[4]).index(), 1);
    }

    #[test]
    fn serde_rejects_invalid_input() {
        let ok: CompleteIntersection = serde_json::from_str(r#"{"dim":3,"degrees":[3]}"#).unwrap();
        assert_eq!(ok, ci(3, &[3]));
        assert!(
            serde_json::from_str::<CompleteIntersection>(r#"{"dim":3,"degrees":[5]}"#).is_err()
        );
    }

    #[test]
    fn poly_space_dim_examples() {
        assert_eq!(poly_space_dim(2, 3).unwrap(), 6);
        assert_eq!(poly_space_dim(-1, 5).unwrap(), 0);
        assert_eq!(poly_space_dim(0, 4).unwrap(), 1);
        assert_eq!(poly_space_dim(3, 0), Err(Error::NonPositiveArity(0)));
    }

    #[test]
    fn delta_j_examples() {
        assert_eq!(delta_j(&ci(2, &[3]), 1).unwrap(), 10);
        assert_eq!(delta_j(&ci(3, &[2]), 1).unwrap(), 0);
        let x22 = ci(4, &[2, 2]);
        assert_eq!(
            delta_j(&x22, 1).unwrap(),
            count_monomials_for_factor(&x22, 1).unwrap()
        );
        let x23 = ci(3, &[2, 3]);
        assert_eq!(delta_j(&x23, 1).unwrap(), 6);
        assert_eq!(delta_j(&x23, 2).unwrap(), 20);
        for j in 1..=2 {
            assert_eq!(
                delta_j(&x23, j).unwrap(),
                count_monomials_for_factor(&x23, j).unwrap()
            );
        }
        assert_eq!(delta_j(&x22, 3), Err(Error::FactorIndex { index: 3, k: 2 }));
        assert_eq!(delta_j(&x22, 0), Err(Error::FactorIndex { index: 0, k: 2 }));
    }

    #[test]
    fn dim_r_prime_examples() {
        // index-1 quartic threefold: every cubic monomial in 5 variables, C(7,4)
        assert_eq!(dim_r_prime_1(&ci(3, &[4])), 35);
        assert_eq!(dim_r_prime_1(&ci(2, &[3])), 10);
        // all d_j < i(X)
        assert_eq!(dim_r_prime_1(&ci(5, &[2])), 0);
        assert_eq!(dim_r_prime_1(&ci(6, &[2, 3])), 0);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(count_monomials_oracle(&ci(2, &[3])), 10);
        assert_eq!(
            count_monomials_oracle(&ci(3, &[2, 2])),
            dim_r_prime_1(&ci(3, &[2, 2]))
        );
        assert_eq!(count_monomials_oracle(&ci(6, &[2, 2])), 0);
    }

    #[test]
    fn dim_r_examples() {
        assert_eq!(dim_r_1(&ci(2, &[3])), 6);
        assert_eq!(dim_r_1(&ci(3, &[4])), 30);
        assert_eq!(dim_r_1(&ci(3, &[3])), 5);
    }

    #[test]
    fn alt_formula_examples() {
        assert_eq!(alt_dim_formula(&ci(2, &[3])), 6);
        assert_eq!(alt_dim_formula(&ci(4, &[3])), 1);
        assert_eq!(alt_dim_formula(&ci(3, &[2, 3])), 20);
    }

    #[test]
    fn inclusive_upper_limit_overcounts_when_degrees_differ() {
        // Letting i_t reach d_t adds monomials divisible by z_t^{d_t}, which vanish in R'.
        let x23 = ci(3, &[2, 3]);
        let n = x23.dim() as i64;
        let k = x23.codim() as i64;
        let bounds: Vec<u64> = x23.degrees().iter().map(|&d| d as u64).collect();
        let mut inclusive = ExactInt::zero();
        for &dj in x23.degrees() {
            let mut idx = vec![0u64; 2];
            loop {
                let top = 5 - idx.iter().sum::<u64>() as i64 + dj as i64 - k - 1;
                if top >= n {
                    inclusive += choose(top as u64, n);
                }
                if !advance_odometer(&mut idx, &bounds) {
                    break;
                }
            }
        }
        inclusive -= ExactInt::from(x23.ambient_vars());
        assert_eq!(inclusive, 21);
        assert_eq!(dim_r_1(&x23), 20);
        assert_eq!(count_monomials_oracle(&x23), 26);
    }

    #[test]
    fn hodge_examples() {
        assert_eq!(hodge_h1(&ci(2, &[3])).h, 7);
        assert_eq!(hodge_h1(&ci(2, &[3])).h_pr, 6);
        assert_eq!(hodge_h1(&ci(3, &[3])).h, 5);
        for n in 5..=8 {
            assert_eq!(hodge_h1(&ci(n, &[3])).h, 0);
        }
        // classical threefolds: X_{2,3} in P^5 and X_{2,2} in P^5
        assert_eq!(hodge_h1(&ci(3, &[2, 3])).h, 20);
        assert_eq!(hodge_h1(&ci(3, &[2, 2])).h, 2);
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(hypersurface_corollary(3, 3).unwrap(), 5);
        assert_eq!(hypersurface_corollary(3, 4).unwrap(), 30);
        assert_eq!(hypersurface_corollary(5, 2).unwrap(), 0);
        assert!(matches!(
            hypersurface_corollary(3, 5),
            Err(Error::HypersurfaceDegree { .. })
        ));
        assert!(matches!(
            hypersurface_corollary(3, 1),
            Err(Error::HypersurfaceDegree { .. })
        ));
    }

    #[test]
    fn sweep_is_ordered_and_fano() {
        let sweep = fano_sweep(2, 4, 3, 6);
        assert!(sweep.windows(2).all(|w| w[0] < w[1]));
        assert!(sweep
            .iter()
            .all(|c| c.degree_sum() <= c.dim() as u64 + c.codim() as u64));
        assert!(sweep.contains(&ci(2, &[3])));
        assert!(sweep.contains(&ci(4, &[2, 2, 2])));
        assert!(!sweep
            .iter()
            .any(|c| c.degrees().windows(2).any(|w| w[0] > w[1])));
        // N=2: [2],[3],[2,2]
        assert_eq!(fano_sweep(2, 2, 3, 6).len(), 3);
    }
}
