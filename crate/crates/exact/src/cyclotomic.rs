//! Elements of the cyclotomic field `Q(zeta_N)`.
//!
//! An element is a coefficient vector in the power basis
//! `1, zeta, ..., zeta^(phi(N)-1)`, kept reduced modulo the cyclotomic
//! polynomial `Phi_N`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::rational::Rational;

/// Coefficients (constant term first) of `Phi_n`, which is monic.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = divide_monic(&num, &phi_d);
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut q = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

/// Euler's totient, the degree of `Phi_n`.
pub fn euler_phi(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        Cyclotomic { order, coeffs: vec![Rational::ZERO; euler_phi(order)] }
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    /// `zeta_N^k` for any integer `k`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![Rational::ZERO; e + 1];
        poly[e] = Rational::ONE;
        Self::from_poly(order, poly)
    }

    /// Reduces an arbitrary polynomial in `zeta` modulo `Phi_N`.
    pub fn from_poly(order: u32, mut poly: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        if poly.len() > deg {
            for k in (deg..poly.len()).rev() {
                let c = std::mem::take(&mut poly[k]);
                if c.is_zero() {
                    continue;
                }
                // zeta^k = -sum_{j<deg} phi_j zeta^(k-deg+j)
                for (j, pj) in phi.iter().enumerate().take(deg) {
                    if *pj != 0 {
                        let t = &c * &Rational::from_int(*pj);
                        poly[k - deg + j] = &poly[k - deg + j] - &t;
                    }
                }
            }
            poly.truncate(deg);
        }
        poly.resize(deg, Rational::ZERO);
        Cyclotomic { order, coeffs: poly }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// The value as a rational when it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(Rational::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or(Rational::ZERO))
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.order, o.order, "mixed cyclotomic orders");
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.order, o.order, "mixed cyclotomic orders");
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|a| a * r).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.order, o.order, "mixed cyclotomic orders");
        let n = self.coeffs.len();
        let mut prod = vec![Rational::ZERO; 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = &prod[i + j] + &(a * b);
                }
            }
        }
        Self::from_poly(self.order, prod)
    }

    /// Inverse by solving `self * y = 1` with the multiplication matrix.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.coeffs.len();
        // Column j of m is self * zeta^j; augmented with e_0.
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::ZERO; n + 1]; n];
        for j in 0..n {
            let col = self.mul(&Self::zeta_pow(self.order, j as i64));
            for (i, row) in rows.iter_mut().enumerate() {
                row[j] = col.coeffs[i].clone();
            }
        }
        rows[0][n] = Rational::ONE;
        for c in 0..n {
            let p = (c..n).find(|&r| !rows[r][c].is_zero())?;
            rows.swap(c, p);
            let inv = rows[c][c].inv().unwrap();
            for v in rows[c].iter_mut() {
                *v = &*v * &inv;
            }
            for r in 0..n {
                if r != c && !rows[r][c].is_zero() {
                    let f = rows[r][c].clone();
                    for k in c..=n {
                        let t = &f * &rows[c][k];
                        rows[r][k] = &rows[r][k] - &t;
                    }
                }
            }
        }
        Some(Cyclotomic { order: self.order, coeffs: rows.into_iter().map(|r| r[n].clone()).collect() })
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z{}", self.order)?,
                _ => write!(f, "({c})*z{}^{k}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(24), 8);
        assert_eq!(euler_phi(23), 22);
    }

    #[test]
    fn zeta_has_exact_order() {
        for n in 1..=24u32 {
            let z = Cyclotomic::zeta_pow(n, 1);
            let mut acc = Cyclotomic::from_rational(n, Rational::ONE);
            for k in 1..=n {
                acc = acc.mul(&z);
                let is_one = acc.as_rational() == Some(Rational::ONE);
                assert_eq!(is_one, k == n, "order {n}, power {k}");
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let n = 12;
        let x = Cyclotomic::from_poly(n, vec![Rational::from_int(2), Rational::new(-1, 3), Rational::ONE]);
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y).as_rational(), Some(Rational::ONE));
    }
}
