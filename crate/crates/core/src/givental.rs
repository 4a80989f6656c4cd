//! Givental's Laurent polynomial for a complete intersection, its constant
//! term series, and the closed hypergeometric I-series it should reproduce.
//!
//! The mirror polynomial lives in `N` variables ordered as
//! `x_{1,1}, .., x_{1,d_1-1}, x_{2,1}, .., x_{k,d_k-1}, y_1, .., y_l`:
//!
//! ```text
//! f_X = prod_i (x_{i,1} + .. + x_{i,d_i-1} + 1)^{d_i} / (prod x_{i,j} prod y_j) + y_1 + .. + y_l
//! ```
//!
//! The denominator is a single monomial, so it is applied as an exponent shift.

use serde::{Deserialize, Serialize};

use crate::exactmath::{factorial, multinomial, ExactInt};
use crate::jacobian_ring::CompleteIntersection;
use crate::laurent::LaurentPolynomial;

/// A power series in `t` truncated at `t^M`, stored as its `M + 1` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSeries {
    pub coefficients: Vec<ExactInt>,
    /// Exponent of the `e^{-alpha t}` regularisation factor carried by the
    /// I-series: `d_1! .. d_k!` for index 1, zero otherwise. Not used in the
    /// coefficients; `None` for series that do not carry it.
    pub alpha: Option<ExactInt>,
}

impl PowerSeries {
    pub fn truncation_order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, i: usize) -> Option<&ExactInt> {
        self.coefficients.get(i)
    }
}

/// Compositions `a` of length `m` with `|a| <= total`, in lexicographic order.
fn bounded_compositions(m: usize, total: u64) -> Vec<Vec<u64>> {
    fn go(m: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur.push(a);
            go(m, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, total, &mut Vec::with_capacity(m), &mut out);
    out
}

/// Builds `f_X` in exactly `N` variables.
pub fn build_fx(ci: &CompleteIntersection) -> LaurentPolynomial {
    let arity = ci.dim() as usize;
    let l = ci.l() as usize;
    let mut numerator = LaurentPolynomial::one(arity);
    let mut offset = 0usize;
    for &d in ci.degrees() {
        let m = d as usize - 1;
        let mut factor = LaurentPolynomial::zero(arity);
        for parts in bounded_compositions(m, d as u64) {
            let coeff = multinomial(d as u64, &parts).expect("parts bounded by d");
            let mut exp = vec![0i32; arity];
            for (slot, &a) in exp[offset..offset + m].iter_mut().zip(&parts) {
                *slot = a as i32;
            }
            factor.add_term(exp, coeff).expect("arity matches");
        }
        numerator = numerator.mul(&factor).expect("arity matches");
        offset += m;
    }
    debug_assert_eq!(offset + l, arity);
    let mut f = numerator.shifted(&vec![-1; arity]).expect("arity matches");
    for y in offset..arity {
        let mut exp = vec![0i32; arity];
        exp[y] = 1;
        f.add_term(exp, ExactInt::one()).expect("arity matches");
    }
    f
}

/// Constant terms of `f^0, f^1, .., f^order` by repeated sparse multiplication.
///
/// After `p` factors a monomial `x^e` can still reach `x^0` within the
/// remaining `r = order - p` factors only if `e_v + r*min_v <= 0 <= e_v + r*max_v`
/// for every variable, with `min_v, max_v` the exponent range of `f`. Other
/// monomials are dropped; this does not change any constant term up to `order`.
pub fn constant_terms(f: &LaurentPolynomial, order: usize) -> Vec<ExactInt> {
    let mut out = Vec::with_capacity(order + 1);
    out.push(ExactInt::one());
    let Some(bounds) = f.exponent_bounds() else {
        out.resize(order + 1, ExactInt::zero());
        return out;
    };
    let mut power = LaurentPolynomial::one(f.arity());
    for p in 1..=order {
        let remaining = (order - p) as i64;
        let reachable = |e: &[i32]| {
            e.iter().zip(&bounds).all(|(&x, &(lo, hi))| {
                let x = x as i64;
                x + remaining * lo as i64 <= 0 && 0 <= x + remaining * hi as i64
            })
        };
        power = power.mul_filtered(f, reachable).expect("arity matches");
        out.push(power.constant_coefficient());
    }
    out
}

/// Coefficient of `x^0` in `f^n`; 1 for `n = 0`.
pub fn constant_term(f: &LaurentPolynomial, n: usize) -> ExactInt {
    constant_terms(f, n).pop().expect("at least one entry")
}

/// `sum_{i <= order} phi_f(i) t^i`.
pub fn phi_series(f: &LaurentPolynomial, order: usize) -> PowerSeries {
    PowerSeries {
        coefficients: constant_terms(f, order),
        alpha: None,
    }
}

/// The closed form of Givental's I-series,
/// `sum_d (d i(X))! prod_t (d d_t)! / (d!)^{N+k+1} t^{d i(X)}`, truncated at `t^order`.
pub fn i_series(ci: &CompleteIntersection, order: usize) -> PowerSeries {
    let index = ci.index() as usize;
    let mut coefficients = vec![ExactInt::zero(); order + 1];
    let exponent = ci.ambient_vars() as u32;
    for d in 0..=(order / index) {
        let du = d as u64;
        let mut numer = factorial(du * index as u64);
        for &dt in ci.degrees() {
            numer *= factorial(du * dt as u64);
        }
        let denom = factorial(du).pow(exponent);
        coefficients[d * index] = numer
            .checked_exact_div(&denom)
            .expect("I-series coefficients are integers");
    }
    let alpha = if index == 1 {
        ci.degrees()
            .iter()
            .fold(ExactInt::one(), |acc, &d| acc * factorial(d as u64))
    } else {
        ExactInt::zero()
    };
    PowerSeries {
        coefficients,
        alpha: Some(alpha),
    }
}

/// Outcome of comparing the constant term series of `f_X` with the I-series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodReport {
    #[serde(rename = "match")]
    pub matches: bool,
    pub first_mismatch: Option<usize>,
    pub order: usize,
    pub phi: PowerSeries,
    pub i_series: PowerSeries,
}

/// Exact coefficient-by-coefficient comparison up to `t^order`.
pub fn verify_period(ci: &CompleteIntersection, order: usize) -> PeriodReport {
    let phi = phi_series(&build_fx(ci), order);
    let i_series = i_series(ci, order);
    let first_mismatch = phi
        .coefficients
        .iter()
        .zip(&i_series.coefficients)
        .position(|(a, b)| a != b);
    PeriodReport {
        matches: first_mismatch.is_none(),
        first_mismatch,
        order,
        phi,
        i_series,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::binomial;
    use proptest::prelude::*;

    fn ci(n: u32, degs: &[u32]) -> CompleteIntersection {
        CompleteIntersection::new(n, degs.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<ExactInt> {
        v.iter().map(|&x| ExactInt::from(x)).collect()
    }

    #[test]
    fn cubic_surface_polynomial() {
        let f = build_fx(&ci(2, &[3]));
        assert_eq!(f.arity(), 2);
        assert_eq!(f.term_count(), 10);
        assert_eq!(f.coefficient(&[0, 0]), 6);
        assert_eq!(f.coefficient(&[-1, -1]), 1);
        assert_eq!(f.coefficient(&[2, -1]), 1);
        assert_eq!(f.coefficient(&[1, -1]), 3);
    }

    #[test]
    fn quadric_threefold_polynomial() {
        // (x+1)^2/(x y1 y2) + y1 + y2
        let f = build_fx(&ci(3, &[2]));
        let expected = LaurentPolynomial::from_terms(
            3,
            [
                (vec![1, -1, -1], 1),
                (vec![0, -1, -1], 2),
                (vec![-1, -1, -1], 1),
                (vec![0, 1, 0], 1),
                (vec![0, 0, 1], 1),
            ]
            .into_iter()
            .map(|(e, c)| (e, ExactInt::from(c))),
        )
        .unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn arity_and_term_count() {
        for c in crate::jacobian_ring::fano_sweep(2, 6, 3, 5) {
            let f = build_fx(&c);
            assert_eq!(f.arity(), c.dim() as usize);
            let first: ExactInt = c.degrees().iter().fold(ExactInt::one(), |acc, &d| {
                acc * binomial(2 * d as i64 - 1, d as i64).unwrap()
            });
            assert_eq!(
                ExactInt::from(f.term_count()),
                first + ExactInt::from(c.l()),
                "{c}"
            );
        }
    }

    #[test]
    fn constant_term_examples() {
        let surface = build_fx(&ci(2, &[3]));
        assert_eq!(constant_term(&surface, 0), 1);
        assert_eq!(constant_term(&surface, 1), 6);
        assert_eq!(constant_term(&build_fx(&ci(3, &[3])), 2), 12);
    }

    #[test]
    fn zero_polynomial_series() {
        let z = LaurentPolynomial::zero(2);
        assert_eq!(phi_series(&z, 3).coefficients, ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn phi_series_examples() {
        let surface = build_fx(&ci(2, &[3]));
        assert_eq!(phi_series(&surface, 0).coefficients, ints(&[1]));
        assert_eq!(
            phi_series(&surface, 3).coefficients,
            ints(&[1, 6, 90, 1680])
        );
        let threefold = build_fx(&ci(3, &[3]));
        assert_eq!(
            phi_series(&threefold, 4).coefficients,
            ints(&[1, 0, 12, 0, 540])
        );
        assert_eq!(phi_series(&threefold, 4).truncation_order(), 4);
    }

    #[test]
    fn i_series_examples() {
        assert_eq!(i_series(&ci(3, &[3]), 2).coefficients, ints(&[1, 0, 12]));
        assert_eq!(i_series(&ci(2, &[3]), 2).coefficients, ints(&[1, 6, 90]));
        assert_eq!(
            i_series(&ci(4, &[2, 2]), 9).coefficients,
            ints(&[1, 0, 0, 24, 0, 0, 3240, 0, 0, 672000])
        );
        assert_eq!(i_series(&ci(5, &[2]), 0).coefficients, ints(&[1]));
    }

    #[test]
    fn alpha_metadata() {
        assert_eq!(i_series(&ci(2, &[3]), 1).alpha, Some(ExactInt::from(6)));
        assert_eq!(i_series(&ci(3, &[2, 3]), 1).alpha, Some(ExactInt::from(12)));
        assert_eq!(i_series(&ci(3, &[3]), 1).alpha, Some(ExactInt::zero()));
        assert_eq!(phi_series(&build_fx(&ci(3, &[3])), 1).alpha, None);
    }

    #[test]
    fn period_examples() {
        assert!(verify_period(&ci(2, &[3]), 4).matches);
        assert!(verify_period(&ci(3, &[3]), 6).matches);
        let quadric = verify_period(&ci(2, &[2]), 4);
        assert!(quadric.matches);
        assert_eq!(quadric.phi.coefficients, ints(&[1, 0, 4, 0, 36]));
        assert_eq!(
            verify_period(&ci(3, &[4]), 3).phi.coefficients,
            ints(&[1, 24, 2520, 369600])
        );
    }

    #[test]
    fn mismatch_is_reported_not_repaired() {
        let c = ci(2, &[3]);
        let mut f = build_fx(&c);
        f.add_term(vec![0, 0], ExactInt::one()).unwrap();
        let phi = phi_series(&f, 3);
        let reference = i_series(&c, 3);
        let first = phi
            .coefficients
            .iter()
            .zip(&reference.coefficients)
            .position(|(a, b)| a != b);
        assert_eq!(first, Some(1));
    }

    #[test]
    fn pruning_does_not_change_constant_terms() {
        let f = build_fx(&ci(3, &[2, 2]));
        let pruned = constant_terms(&f, 6);
        let full: Vec<ExactInt> = (0..=6).map(|n| f.pow(n).constant_coefficient()).collect();
        assert_eq!(pruned, full);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        proptest::collection::vec((proptest::collection::vec(-2i32..=2, 2), -3i64..=3), 1..6)
            .prop_map(|ts| {
                LaurentPolynomial::from_terms(
                    2,
                    ts.into_iter().map(|(e, c)| (e, ExactInt::from(c))),
                )
                .unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn constant_term_of_product_of_powers(f in arb_poly(), m in 0u32..4, n in 0u32..4) {
            let via_product = f.pow(m).mul(&f.pow(n)).unwrap().constant_coefficient();
            prop_assert_eq!(constant_term(&f, (m + n) as usize), via_product);
        }
    }
}
