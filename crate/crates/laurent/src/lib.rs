//! Exact Laurent polynomials in one variable with `i64` coefficients.
//!
//! All coefficient arithmetic in the workspace is done in `ℤ[q, q⁻¹]`:
//! Hecke-algebra structure constants live in powers of `(q − q⁻¹)`,
//! Hall–Littlewood coefficients in powers of `q⁻²`, Poincaré polynomials
//! in nonnegative powers.  The representation is a sparse exponent → coefficient
//! map with no explicit zeros, so equality is structural.

use std::collections::BTreeMap;
use std::fmt;

/// A Laurent polynomial `Σ c_k · q^k` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c · q^k`.
    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// `q^k`.
    pub fn q_power(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    /// The Gaussian integer `[k] = 1 + q + … + q^{k−1}` for `k ≥ 1`, `[0] = 0`.
    pub fn gauss_bracket(k: i64) -> Self {
        let mut terms = BTreeMap::new();
        for e in 0..k {
            terms.insert(e, 1);
        }
        LaurentPoly { terms }
    }

    /// `q − q⁻¹`.
    pub fn q_minus_qinv() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(1, 1);
        terms.insert(-1, -1);
        LaurentPoly { terms }
    }

    /// `1 − q⁻²`.
    pub fn one_minus_qm2() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(0, 1);
        terms.insert(-2, -1);
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Sorted `(exponent, coefficient)` pairs, ascending exponent.
    pub fn pairs(&self) -> Vec<(i64, i64)> {
        self.terms.iter().map(|(&e, &c)| (e, c)).collect()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, &k)| (e, k * c)).collect() }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitute `q ↦ q^k` (multiplies every exponent by `k`).
    pub fn subst_power(&self, k: i64) -> Self {
        assert!(k != 0, "exponent substitution must be by a nonzero power");
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e * k, c)).collect() }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Exact division: returns `Some(f)` with `self = f · d` when the division
    /// leaves no remainder, `None` otherwise.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (&dlead_e, &dlead_c) = d.terms.iter().next_back().expect("nonzero divisor");
        // In an exact division the quotient's lowest exponent is
        // min(self) − min(d); dropping below that proves inexactness.
        let floor = match self.min_exp() {
            Some(m) => m - d.min_exp().expect("nonzero divisor"),
            None => return Some(Self::zero()),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&re, &rc)) = rem.terms.iter().next_back() {
            if rc % dlead_c != 0 {
                return None;
            }
            let qe = re - dlead_e;
            if qe < floor {
                return None;
            }
            let qc = rc / dlead_c;
            quot.add_term(qe, qc);
            rem = rem.sub(&d.shift(qe).scale(qc));
            if let Some(new_max) = rem.max_exp() {
                if new_max >= re {
                    return None;
                }
            }
        }
        Some(quot)
    }

    /// Evaluate at `q = 1` (the sum of the coefficients).
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Treat the polynomial as a polynomial in `u = q⁻²` and evaluate at `u`.
    /// Requires every exponent to be even and ≤ 0; returns `None` otherwise.
    pub fn eval_qm2(&self, u: i64) -> Option<i64> {
        let mut total = 0i64;
        for (&e, &c) in &self.terms {
            if e > 0 || e % 2 != 0 {
                return None;
            }
            let k = (-e / 2) as u32;
            total += c * u.checked_pow(k)?;
        }
        Some(total)
    }

    /// True when every exponent is even and ≤ 0, i.e. the polynomial lies in `ℤ[q⁻²]`.
    pub fn is_poly_in_qm2(&self) -> bool {
        self.terms.keys().all(|&e| e <= 0 && e % 2 == 0)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.terms.iter().rev() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                1 if a == 1 => write!(f, "q")?,
                1 => write!(f, "{a}q")?,
                _ if a == 1 => write!(f, "q^{e}")?,
                _ => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}
