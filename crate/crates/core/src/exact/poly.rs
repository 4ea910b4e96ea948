use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. The leading coefficient is nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

fn binomial_row(m: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..m {
        let next = &row[k] * BigInt::from(m - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `x`
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// Expands `sum_k w_k x^k (1-x)^(n-k)` with `n = weights.len() - 1`.
    pub fn from_weights<T: Clone + Into<BigInt>>(weights: &[T]) -> Self {
        if weights.is_empty() {
            return Self::zero();
        }
        let n = weights.len() - 1;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (k, w) in weights.iter().enumerate() {
            let w: BigInt = w.clone().into();
            if w.is_zero() {
                continue;
            }
            for (j, c) in binomial_row(n - k).into_iter().enumerate() {
                let term = &w * c;
                if j % 2 == 0 {
                    coeffs[k + j] += term;
                } else {
                    coeffs[k + j] -= term;
                }
            }
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    /// Sign of the value at `x`, computed on integers after clearing the
    /// denominator.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        let (p, q) = (x.numer(), x.denom());
        let mut q_pow = BigInt::one();
        let mut acc = self.coeffs[d].clone();
        for c in self.coeffs[..d].iter().rev() {
            q_pow *= q;
            acc = acc * p + c * &q_pow;
        }
        acc.sign_ordering()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Pseudo-remainder `lc(divisor)^e * self mod divisor` together with the
    /// sign of the multiplier `lc(divisor)^e`.
    pub fn pseudo_rem(&self, divisor: &Self) -> (Self, Ordering) {
        let db = divisor.degree().expect("division by the zero polynomial");
        let lb = divisor.leading().unwrap().clone();
        let mut r = self.clone();
        let mut negative = false;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let mut next = r.scale(&lb).coeffs;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                next[dr - db + i] -= &lr * c;
            }
            r = Self::new(next);
            negative ^= lb.is_negative();
        }
        let sign = if negative { Ordering::Less } else { Ordering::Greater };
        (r, sign)
    }

    /// Exact quotient `self / divisor` when it exists in `Z[x]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let db = divisor.degree()?;
        let lb = divisor.leading().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() < db + 1 {
            return self.is_zero().then(Self::zero);
        }
        let mut q = vec![BigInt::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let lead = &r[k + db];
            if lead.is_zero() {
                continue;
            }
            let (quot, rem) = lead.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                r[k + i] -= &quot * c;
            }
            q[k] = quot;
        }
        r.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Whether `self` divides `other` over the rationals.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.pseudo_rem(self).0.is_zero()
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).0.primitive();
            a = b;
            b = r;
        }
        a
    }

    /// `self / gcd(self, self')`, primitive. Same roots, all simple.
    pub fn square_free(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive()
            .div_exact(&g)
            .expect("gcd divides its argument")
            .primitive()
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPolynomial::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            match (show_coeff, k) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}x")?,
                (false, 1) => write!(f, "x")?,
                (true, _) => write!(f, "{mag}x^{k}")?,
                (false, _) => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn from_weights_examples() {
        assert_eq!(IntPolynomial::from_weights(&[1, 0]), IntPolynomial::from_i64(&[1, -1]));
        let p = IntPolynomial::from_weights(&[1, 4, 3]);
        assert_eq!(p, IntPolynomial::from_i64(&[1, 2]));
        // evaluation cross-check against the unexpanded sum
        for x in [r(0, 1), r(1, 2), r(1, 1), r(2, 7)] {
            let one_minus = int(1) - &x;
            let direct = &one_minus * &one_minus + int(4) * &x * &one_minus + int(3) * &x * &x;
            assert_eq!(p.eval(&x), direct);
        }
    }

    #[test]
    fn binomial_weights_give_constant() {
        // weights c*C(n,k) sum to c for every x; plain constant weights do not
        let n = 5;
        let c = 7;
        let w: Vec<i64> = binomial_row(n).iter().map(|b| c * i64::try_from(b).unwrap()).collect();
        let p = IntPolynomial::from_weights(&w);
        for x in [r(0, 1), r(1, 3), r(5, 8), r(1, 1)] {
            assert_eq!(p.eval(&x), int(c));
        }
        let flat = IntPolynomial::from_weights(&[c; 6]);
        assert_eq!(flat.eval(&r(0, 1)), int(c));
        assert_eq!(flat.eval(&r(1, 1)), int(c));
        assert_ne!(flat.eval(&r(1, 2)), int(c));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(IntPolynomial::from_i64(&[1, -1]).eval(&r(1, 3)), r(2, 3));
        let quintic = IntPolynomial::from_i64(&[-15, -21, 3, 23, 15, 3]);
        assert_eq!(quintic.eval(&r(0, 1)), int(-15));
        assert_eq!(quintic.eval(&r(1, 1)), int(8));
        assert_eq!(IntPolynomial::zero().eval(&r(3, 4)), int(0));
        assert_eq!(quintic.sign_at(&r(0, 1)), Ordering::Less);
        assert_eq!(quintic.sign_at(&r(1, 1)), Ordering::Greater);
        assert_eq!(quintic.sign_at(&r(-1, 3)), quintic.eval(&r(-1, 3)).cmp(&int(0)));
    }

    #[test]
    fn gcd_and_square_free() {
        // (x - 1)^2 (2x - 1) and (x - 1)(x + 3)
        let a = &(&IntPolynomial::from_i64(&[-1, 1]) * &IntPolynomial::from_i64(&[-1, 1]))
            * &IntPolynomial::from_i64(&[-1, 2]);
        let b = &IntPolynomial::from_i64(&[-1, 1]) * &IntPolynomial::from_i64(&[3, 1]);
        assert_eq!(a.gcd(&b), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(
            a.square_free(),
            (&IntPolynomial::from_i64(&[-1, 1]) * &IntPolynomial::from_i64(&[-1, 2])).primitive()
        );
        assert!(IntPolynomial::from_i64(&[-1, 2]).divides(&a));
        assert!(!IntPolynomial::from_i64(&[1, 2]).divides(&a));
        assert_eq!(a.div_exact(&b), None);
    }

    #[test]
    fn display() {
        let q = IntPolynomial::from_i64(&[-15, -21, 3, 23, 15, 3]);
        assert_eq!(q.to_string(), "3x^5 + 15x^4 + 23x^3 + 3x^2 - 21x - 15");
        assert_eq!(IntPolynomial::from_i64(&[0, -1]).to_string(), "-x");
    }
}
