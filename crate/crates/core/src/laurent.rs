//! Sparse multivariate Laurent polynomials over exact integers.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::ExactInt;

pub type Exponent = Vec<i32>;

/// A finite sum of `c * x^e` with integer (possibly negative) exponents.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentPolynomial {
    arity: usize,
    terms: BTreeMap<Exponent, ExactInt>,
}

impl LaurentPolynomial {
    pub fn zero(arity: usize) -> Self {
        LaurentPolynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        let mut p = Self::zero(arity);
        p.terms.insert(vec![0; arity], ExactInt::one());
        p
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, ExactInt)>,
    {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    /// Adds `coeff * x^exp`, dropping the entry if it cancels.
    pub fn add_term(&mut self, exp: Exponent, coeff: ExactInt) -> Result<()> {
        if exp.len() != self.arity {
            return Err(Error::ArityMismatch {
                arity: self.arity,
                got: exp.len(),
            });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        accumulate(&mut self.terms, exp, coeff);
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &ExactInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[i32]) -> ExactInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn constant_coefficient(&self) -> ExactInt {
        self.coefficient(&vec![0; self.arity])
    }

    /// Per-variable `(min, max)` exponents over the support; `None` for zero.
    pub fn exponent_bounds(&self) -> Option<Vec<(i32, i32)>> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut bounds: Vec<(i32, i32)> = first.iter().map(|&e| (e, e)).collect();
        for exp in it {
            for (b, &e) in bounds.iter_mut().zip(exp) {
                b.0 = b.0.min(e);
                b.1 = b.1.max(e);
            }
        }
        Some(bounds)
    }

    /// Multiplies every monomial by `x^shift`.
    pub fn shifted(&self, shift: &[i32]) -> Result<Self> {
        if shift.len() != self.arity {
            return Err(Error::ArityMismatch {
                arity: self.arity,
                got: shift.len(),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Ok(LaurentPolynomial {
            arity: self.arity,
            terms,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            accumulate(&mut out.terms, e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_filtered(other, |_| true)
    }

    /// Product restricted to the monomials accepted by `keep`. Kept
    /// coefficients are exact.
    pub fn mul_filtered<F>(&self, other: &Self, keep: F) -> Result<Self>
    where
        F: Fn(&[i32]) -> bool,
    {
        self.check_arity(other)?;
        let mut acc: HashMap<Exponent, ExactInt> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if !keep(&e) {
                    continue;
                }
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPolynomial {
            arity: self.arity,
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.arity);
        for _ in 0..n {
            out = out.mul(self).expect("same arity");
        }
        out
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                arity: self.arity,
                got: other.arity,
            });
        }
        Ok(())
    }
}

fn accumulate(terms: &mut BTreeMap<Exponent, ExactInt>, exp: Exponent, coeff: ExactInt) {
    match terms.entry(exp) {
        Entry::Vacant(slot) => {
            if !coeff.is_zero() {
                slot.insert(coeff);
            }
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += coeff;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (exp, coeff)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}")?;
            for (v, &e) in exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", v + 1)?,
                    _ => write!(f, "*x{}^{}", v + 1, e)?,
                }
            }
        }
        Ok(())
    }
}
