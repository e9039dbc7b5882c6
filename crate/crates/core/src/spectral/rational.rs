//! Exact rational linear algebra and univariate polynomial tools.
//!
//! The case analyses certified here come down to signs of determinants
//! and locations of polynomial roots, evaluated at rational arguments
//! whose floating-point images would be too close to zero to trust.
//! Everything in this module is exact: determinant signs by fraction-free
//! Bareiss elimination after clearing denominators, characteristic
//! polynomials by Faddeev–LeVerrier, and root isolation by Sturm chains
//! with rational bisection.

use num::integer::lcm;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Shorthand constructor for small rationals.
pub fn rat(numerator: i64, denominator: i64) -> Rat {
    BigRational::new(numerator.into(), denominator.into())
}

/// Dense square matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Vec<Rat>>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> RatMatrix {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        RatMatrix { n, entries: rows }
    }

    pub fn identity(n: usize) -> RatMatrix {
        RatMatrix::from_rows(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i][j]
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_f64().expect("rational fits in f64"))
                    .collect()
            })
            .collect()
    }

    /// xI − self, the matrix whose determinant is the characteristic
    /// polynomial evaluated at x.
    pub fn xid_minus(&self, x: &Rat) -> RatMatrix {
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        if i == j {
                            x - &self.entries[i][j]
                        } else {
                            -self.entries[i][j].clone()
                        }
                    })
                    .collect()
            })
            .collect();
        RatMatrix::from_rows(rows)
    }

    fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, other.n);
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        (0..self.n)
                            .map(|k| &self.entries[i][k] * &other.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        RatMatrix::from_rows(rows)
    }

    fn trace(&self) -> Rat {
        (0..self.n).map(|i| self.entries[i][i].clone()).sum()
    }

    /// Exact sign of the determinant: −1, 0, or +1.
    ///
    /// Denominators are cleared row by row (positive multipliers, so the
    /// sign is unchanged) and the integer matrix is reduced by Bareiss
    /// fraction-free elimination, which keeps intermediate values as
    /// genuine minors rather than letting them explode.
    pub fn det_sign(&self) -> i32 {
        if self.n == 0 {
            return 1;
        }
        let mut m: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| {
                let scale = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| lcm(acc, x.denom().clone()));
                row.iter()
                    .map(|x| x.numer() * (&scale / x.denom()))
                    .collect()
            })
            .collect();

        let n = self.n;
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division is exact");
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let pivot = &m[n - 1][n - 1];
        if pivot.is_zero() {
            0
        } else if pivot.is_positive() {
            sign
        } else {
            -sign
        }
    }

    /// Characteristic polynomial det(xI − self), exactly, by the
    /// Faddeev–LeVerrier recurrence.
    pub fn charpoly(&self) -> Poly {
        let n = self.n;
        let mut coeffs = vec![Rat::one()];
        let mut m = RatMatrix::identity(n);
        for k in 1..=n {
            let am = self.mul(&m);
            let c = -am.trace() / Rat::from_integer(k.into());
            m = am;
            for i in 0..n {
                m.entries[i][i] += &c;
            }
            coeffs.push(c);
        }
        Poly::new(coeffs)
    }
}

/// Exact sign of det(xI − q) at a rational point x.
pub fn charpoly_sign(q: &RatMatrix, x: &Rat) -> i32 {
    q.xid_minus(x).det_sign()
}

/// Univariate polynomial over the rationals, coefficients stored from the
/// leading term down (`coeffs[0]` multiplies x^degree).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Builds a polynomial, trimming leading zeros. The zero polynomial
    /// is represented by a single zero coefficient.
    pub fn new(coeffs: Vec<Rat>) -> Poly {
        let first = coeffs.iter().position(|c| !c.is_zero());
        match first {
            Some(i) => Poly {
                coeffs: coeffs[i..].to_vec(),
            },
            None => Poly {
                coeffs: vec![Rat::zero()],
            },
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.degree() == 0 {
            return Poly::new(vec![Rat::zero()]);
        }
        let d = self.degree();
        Poly::new(
            self.coeffs[..d]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(((d - i) as i64).into()))
                .collect(),
        )
    }

    /// Divides by (x − r). Returns the quotient and the remainder, which
    /// equals self(r).
    pub fn divide_by_linear(&self, r: &Rat) -> (Poly, Rat) {
        let mut quotient = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut acc = Rat::zero();
        for c in &self.coeffs {
            acc = acc * r + c;
            quotient.push(acc.clone());
        }
        let remainder = quotient.pop().unwrap_or_else(Rat::zero);
        if quotient.is_empty() {
            quotient.push(Rat::zero());
        }
        (Poly::new(quotient), remainder)
    }

    /// Polynomial remainder self mod divisor.
    fn rem(&self, divisor: &Poly) -> Poly {
        assert!(!divisor.is_zero());
        if divisor.degree() == 0 {
            return Poly::new(vec![Rat::zero()]);
        }
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let factor = rem[0].clone() / &divisor.coeffs[0];
            for i in 1..=dd {
                let sub = &factor * &divisor.coeffs[i];
                rem[i] -= sub;
            }
            rem.remove(0);
        }
        Poly::new(rem)
    }

    /// Exact quotient self / divisor; panics in debug builds if the
    /// division leaves a remainder.
    fn exact_div(&self, divisor: &Poly) -> Poly {
        assert!(!divisor.is_zero());
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        let mut out = Vec::new();
        while rem.len() > dd {
            let factor = rem[0].clone() / &divisor.coeffs[0];
            for i in 1..=dd {
                let sub = &factor * &divisor.coeffs[i];
                rem[i] -= sub;
            }
            out.push(factor);
            rem.remove(0);
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()), "division must be exact");
        Poly::new(out)
    }

    /// Monic gcd with another polynomial.
    fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.coeffs[0].clone();
        Poly::new(a.coeffs.iter().map(|c| c / &lead).collect())
    }

    /// The radical: same roots, all simple. Repeated eigenvalues would
    /// otherwise break Sturm root counting.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.exact_div(&g)
    }

    /// Sturm chain of the squarefree part.
    pub fn sturm_chain(&self) -> Vec<Poly> {
        let p0 = self.squarefree_part();
        let mut chain = vec![p0.clone(), p0.derivative()];
        loop {
            let last = &chain[chain.len() - 1];
            if last.is_zero() || last.degree() == 0 {
                break;
            }
            let r = chain[chain.len() - 2].rem(last);
            if r.is_zero() {
                break;
            }
            let neg = Poly::new(r.coeffs.iter().map(|c| -c).collect());
            chain.push(neg);
        }
        chain
    }

    /// Number of distinct real roots in the open interval (a, ∞).
    pub fn count_roots_above(&self, a: &Rat) -> usize {
        let chain = self.sturm_chain();
        let at_a = variations(chain.iter().map(|p| sign_of(&p.eval(a))));
        let at_inf = variations(chain.iter().map(|p| sign_of(&p.coeffs[0])));
        at_a - at_inf
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    pub fn count_roots_in(&self, a: &Rat, b: &Rat) -> usize {
        let chain = self.sturm_chain();
        let at_a = variations(chain.iter().map(|p| sign_of(&p.eval(a))));
        let at_b = variations(chain.iter().map(|p| sign_of(&p.eval(b))));
        at_a - at_b
    }

    /// Upper bound on the absolute value of every root (Cauchy bound).
    pub fn root_bound(&self) -> Rat {
        let lead = self.coeffs[0].abs();
        let max = self.coeffs[1..]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rat::zero);
        max + Rat::one()
    }

    /// Largest real root, isolated by Sturm counts and narrowed by
    /// rational bisection to within `tol`. None if there is no real root.
    pub fn largest_real_root(&self, tol: &Rat) -> Option<Rat> {
        let bound = self.root_bound();
        let mut lo = -bound.clone();
        let mut hi = bound;
        if self.count_roots_above(&lo) == 0 {
            // Only possible when every real root is ≤ −bound, i.e. none.
            return None;
        }
        let two = rat(2, 1);
        while &hi - &lo > *tol {
            let mid = (&hi + &lo) / &two;
            if self.count_roots_above(&mid) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some((&hi + &lo) / &two)
    }
}

fn sign_of(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign variations in a sequence, zeros skipped.
fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}
