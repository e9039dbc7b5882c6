//! The refined cut-edge threshold ρ(d, n) and its companion ρ′(d, n):
//! second-largest eigenvalues of two fixed 4x4 quotient matrices,
//! extracted exactly from rational characteristic polynomials. Also the
//! exact sign checks over the case analysis behind the threshold.

use super::BoundsError;
use crate::spectral::{charpoly_sign, rat, Poly, Rat, RatMatrix};
use num::{ToPrimitive, Zero};
use std::fmt;

fn invalid(what: &'static str, reason: impl Into<String>) -> BoundsError {
    BoundsError::InvalidParameters {
        what,
        reason: reason.into(),
    }
}

/// Quotient matrix of the one-cut-edge configuration: a heavy pair, the
/// two endpoints of the cut edge, and the n-4 remaining vertices.
pub fn theorem42_q(d: u32, n: usize) -> RatMatrix {
    assert!(n >= 5, "theorem42_q needs n >= 5, got {n}");
    let d = i64::from(d);
    let rest = n as i64 - 4;
    RatMatrix::from_rows(vec![
        vec![rat(d + 1, 2), rat(d - 1, 2), rat(0, 1), rat(0, 1)],
        vec![rat(d - 1, 1), rat(0, 1), rat(1, 1), rat(0, 1)],
        vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(d - 1, 1)],
        vec![
            rat(0, 1),
            rat(0, 1),
            rat(d - 1, rest),
            rat(d, 1) - rat(d - 1, rest),
        ],
    ])
}

/// Quotient matrix of the variant configuration in which the side of the
/// cut edge is a 4-vertex block rather than a heavy pair.
pub fn theorem42_q_prime(d: u32, n: usize) -> RatMatrix {
    assert!(n >= 7, "theorem42_q_prime needs n >= 7, got {n}");
    let d = i64::from(d);
    let rest = n as i64 - 6;
    RatMatrix::from_rows(vec![
        vec![
            rat(d, 1) - rat(d - 1, 4),
            rat(d - 1, 4),
            rat(0, 1),
            rat(0, 1),
        ],
        vec![rat(d - 1, 1), rat(0, 1), rat(1, 1), rat(0, 1)],
        vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(d - 1, 1)],
        vec![
            rat(0, 1),
            rat(0, 1),
            rat(d - 1, rest),
            rat(d, 1) - rat(d - 1, rest),
        ],
    ])
}

/// Position of the domain preconditions shared by `rho` and `rho_prime`.
fn check_rho_params(what: &'static str, d: u32, n: usize, min_n: usize) -> Result<(), BoundsError> {
    if d < 3 || d % 2 == 0 {
        return Err(invalid(
            what,
            format!("d must be odd and at least 3, got {d}"),
        ));
    }
    if n < min_n || n % 2 == 1 {
        return Err(invalid(
            what,
            format!("n must be even and at least {min_n}, got {n}"),
        ));
    }
    Ok(())
}

/// The characteristic polynomial of `q` with the known eigenvalue `d`
/// divided out exactly; the remaining cubic carries the other three
/// eigenvalues.
fn residual_cubic(q: &RatMatrix, d: u32) -> Poly {
    let (cubic, remainder) = q.charpoly().divide_by_linear(&rat(i64::from(d), 1));
    assert!(
        remainder.is_zero(),
        "d must be an exact eigenvalue of the quotient matrix"
    );
    cubic
}

const ROOT_TOL_NUM: i64 = 1;
const ROOT_TOL_DEN: i64 = 1_000_000_000_000;

fn largest_cubic_root(cubic: &Poly) -> f64 {
    let tol = rat(ROOT_TOL_NUM, ROOT_TOL_DEN);
    let root = cubic
        .largest_real_root(&tol)
        .expect("a cubic always has a real root");
    root.to_f64().expect("bisection midpoint fits in f64")
}

/// ρ(d, n): second-largest eigenvalue of the one-cut-edge quotient
/// matrix, for odd d >= 3 and even n >= 6.
pub fn rho(d: u32, n: usize) -> Result<f64, BoundsError> {
    check_rho_params("rho", d, n, 6)?;
    Ok(largest_cubic_root(&residual_cubic(&theorem42_q(d, n), d)))
}

/// ρ′(d, n): second-largest eigenvalue of the variant quotient matrix,
/// for odd d >= 3 and even n >= 10.
pub fn rho_prime(d: u32, n: usize) -> Result<f64, BoundsError> {
    check_rho_params("rho_prime", d, n, 10)?;
    Ok(largest_cubic_root(&residual_cubic(
        &theorem42_q_prime(d, n),
        d,
    )))
}

/// Exact comparison ρ(d, n) > x, decided by a Sturm root count on the
/// residual cubic: the largest root exceeds x iff any root does.
pub fn rho_exceeds(d: u32, n: usize, x: &Rat) -> Result<bool, BoundsError> {
    check_rho_params("rho", d, n, 6)?;
    let cubic = residual_cubic(&theorem42_q(d, n), d);
    Ok(cubic.count_roots_above(x) >= 1)
}

/// λ2 of the three-block quotient in the configuration where both sides
/// of the cut edge keep at least s1, s2 >= 7 vertices:
/// d − 1/(s1+1) − 1/(s2+1).
pub fn case3_quotient_lambda2(d: u32, s1: usize, s2: usize) -> f64 {
    assert!(s1 >= 1 && s2 >= 1);
    f64::from(d) - 1.0 / (s1 as f64 + 1.0) - 1.0 / (s2 as f64 + 1.0)
}

/// The exact sign checks that close the case analysis. Each case fixes a
/// comparison point x and asserts signs of det(xI − Q) and/or
/// det(xI − Q′) over a stated (d, n) domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseId {
    C2a,
    C2b,
    C2c,
    C2d,
    C3a,
    C3b,
}

impl CaseId {
    pub const ALL: [CaseId; 6] = [
        CaseId::C2a,
        CaseId::C2b,
        CaseId::C2c,
        CaseId::C2d,
        CaseId::C3a,
        CaseId::C3b,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::C2a => "c2a",
            CaseId::C2b => "c2b",
            CaseId::C2c => "c2c",
            CaseId::C2d => "c2d",
            CaseId::C3a => "c3a",
            CaseId::C3b => "c3b",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for CaseId {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<CaseId, BoundsError> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| BoundsError::UnknownCase(s.to_string()))
    }
}

/// Outcome of one case check: the individual sign conditions the case
/// requires, each decided exactly over the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseOutcome {
    /// det(xI − Q′) > 0, when the case involves Q′.
    pub q_prime_det_positive: Option<bool>,
    /// det(xI − Q) < 0, when the case requires x below λ2(Q).
    pub q_det_negative: Option<bool>,
    /// det(xI − Q) > 0, when the case requires x above λ2(Q).
    pub q_det_positive: Option<bool>,
}

impl CaseOutcome {
    /// Conjunction of all sign conditions the case states.
    pub fn holds(&self) -> bool {
        self.q_prime_det_positive.unwrap_or(true)
            && self.q_det_negative.unwrap_or(true)
            && self.q_det_positive.unwrap_or(true)
    }
}

fn case_domain(case: CaseId, d: u32, n: usize) -> Result<(), BoundsError> {
    let (fixed_d, min_n) = match case {
        CaseId::C2a => (Some(3), 10),
        CaseId::C2b => (Some(5), 10),
        CaseId::C2c => (Some(7), 10),
        CaseId::C2d => (None, 10),
        CaseId::C3a | CaseId::C3b => (None, 14),
    };
    if let Some(want) = fixed_d {
        if d != want {
            return Err(invalid(
                "check_case",
                format!("case {case} fixes d = {want}, got {d}"),
            ));
        }
    }
    if d < 3 {
        return Err(invalid(
            "check_case",
            format!("d must be at least 3, got {d}"),
        ));
    }
    if n < min_n {
        return Err(invalid(
            "check_case",
            format!("case {case} needs n >= {min_n}, got {n}"),
        ));
    }
    Ok(())
}

/// The comparison point of each case as an exact rational.
fn case_point(case: CaseId, d: u32, n: usize) -> Rat {
    let df = i64::from(d);
    let nf = n as i64;
    match case {
        CaseId::C2a => rat(1689, 600),
        CaseId::C2b => rat(47, 10),
        CaseId::C2c => rat(333, 50),
        CaseId::C2d => rat(df, 1) - rat(1, 5) - rat(1, nf - 5),
        CaseId::C3a => rat(df, 1) - rat(1, 3) - rat(1, nf - 3),
        CaseId::C3b => rat(df, 1) - rat(1, 7) - rat(1, nf - 7),
    }
}

/// Evaluate the sign conditions of one case at concrete (d, n).
pub fn check_case_outcome(case: CaseId, d: u32, n: usize) -> Result<CaseOutcome, BoundsError> {
    case_domain(case, d, n)?;
    let x = case_point(case, d, n);
    let q_sign = || charpoly_sign(&theorem42_q(d, n), &x);
    let q_prime_sign = || charpoly_sign(&theorem42_q_prime(d, n), &x);
    let outcome = match case {
        CaseId::C2a | CaseId::C2b | CaseId::C2c | CaseId::C2d => CaseOutcome {
            q_prime_det_positive: Some(q_prime_sign() > 0),
            q_det_negative: Some(q_sign() < 0),
            q_det_positive: None,
        },
        CaseId::C3a => CaseOutcome {
            q_prime_det_positive: None,
            q_det_negative: None,
            q_det_positive: Some(q_sign() > 0),
        },
        CaseId::C3b => CaseOutcome {
            q_prime_det_positive: None,
            q_det_negative: Some(q_sign() < 0),
            q_det_positive: None,
        },
    };
    Ok(outcome)
}

/// Whether every sign condition of the case holds at (d, n).
pub fn check_case(case: CaseId, d: u32, n: usize) -> Result<bool, BoundsError> {
    Ok(check_case_outcome(case, d, n)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::extremal_6vertex;
    use crate::spectral::{lambda2, quotient_matrix, Partition};

    #[test]
    fn q_matches_the_quotient_of_the_extremal_graph() {
        for d in [3u32, 5, 9, 21] {
            let g = extremal_6vertex(d).unwrap();
            let p = Partition::new(vec![vec![0, 1], vec![2], vec![3], vec![4, 5]], 6).unwrap();
            let q = quotient_matrix(&g, &p).unwrap();
            let built = theorem42_q(d, 6);
            for i in 0..4 {
                for j in 0..4 {
                    assert_eq!(q.entry(i, j), built.entry(i, j), "entry ({i},{j}) at d={d}");
                }
            }
        }
    }

    #[test]
    fn rho_closed_form_at_order_6() {
        for d in (3..=21).step_by(2) {
            let r = rho(d, 6).unwrap();
            let df = f64::from(d);
            let closed = (df - 1.0 + (9.0 * df * df - 10.0 * df + 17.0).sqrt()) / 4.0;
            assert!(
                (r - closed).abs() < 1e-9,
                "rho({d},6) = {r}, closed form {closed}"
            );
        }
    }

    #[test]
    fn rho_matches_extremal_graph_lambda2() {
        for d in (3..=11).step_by(2) {
            let g = extremal_6vertex(d).unwrap();
            let l2 = lambda2(&g).unwrap();
            let r = rho(d, 6).unwrap();
            assert!((r - l2).abs() < 1e-8, "rho({d},6)={r} vs lambda2={l2}");
        }
    }

    #[test]
    fn rho_matches_float_eigenvalues_of_symmetrized_quotient() {
        // Q is similar to a symmetric matrix via the block sizes
        // (2, 1, 1, n-4); its eigenvalues must match the exact route.
        for (d, n) in [(3u32, 8usize), (5, 10), (7, 20), (9, 50), (21, 100)] {
            let q = theorem42_q(d, n).to_f64();
            let sizes = [2.0, 1.0, 1.0, (n - 4) as f64];
            let mut sym = vec![vec![0.0; 4]; 4];
            for i in 0..4 {
                for j in 0..4 {
                    sym[i][j] = q[i][j] * (sizes[i] / sizes[j]).sqrt();
                }
            }
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let avg = 0.5 * (sym[i][j] + sym[j][i]);
                    sym[i][j] = avg;
                    sym[j][i] = avg;
                }
            }
            let spec = crate::spectral::eigenvalues_symmetric(&sym).unwrap();
            assert!((spec.nth_largest(1) - f64::from(d)).abs() < 1e-9);
            let r = rho(d, n).unwrap();
            assert!(
                (spec.nth_largest(2) - r).abs() < 1e-8,
                "rho({d},{n}) disagrees with float eigenvalue"
            );
        }
    }

    #[test]
    fn rho_rejects_bad_parameters() {
        assert!(rho(4, 10).is_err());
        assert!(rho(3, 7).is_err());
        assert!(rho(3, 4).is_err());
        assert!(rho_prime(3, 8).is_err());
        assert!(rho_prime(3, 10).is_ok());
    }

    #[test]
    fn rho_prime_matches_float_eigenvalues() {
        // Q' is similar to a symmetric matrix via block sizes
        // (4, 1, 1, n-6); cross-check the exact route against it.
        for (d, n) in [(3u32, 10usize), (5, 12), (7, 30), (9, 100)] {
            let q = theorem42_q_prime(d, n).to_f64();
            let sizes = [4.0, 1.0, 1.0, (n - 6) as f64];
            let mut sym = vec![vec![0.0; 4]; 4];
            for i in 0..4 {
                for j in 0..4 {
                    sym[i][j] = q[i][j] * (sizes[i] / sizes[j]).sqrt();
                }
            }
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let avg = 0.5 * (sym[i][j] + sym[j][i]);
                    sym[i][j] = avg;
                    sym[j][i] = avg;
                }
            }
            let spec = crate::spectral::eigenvalues_symmetric(&sym).unwrap();
            let rp = rho_prime(d, n).unwrap();
            assert!((spec.nth_largest(1) - f64::from(d)).abs() < 1e-9);
            assert!(
                (spec.nth_largest(2) - rp).abs() < 1e-8,
                "rho_prime({d},{n}) disagrees with float eigenvalue"
            );
            assert!(rp < f64::from(d));
        }
    }

    #[test]
    fn rho_exceeds_agrees_with_float_comparison() {
        for (d, n) in [(3u32, 6usize), (3, 20), (5, 14), (9, 40)] {
            let r = rho(d, n).unwrap();
            let below = rat((r * 1000.0).floor() as i64 - 1, 1000);
            let above = rat((r * 1000.0).ceil() as i64 + 1, 1000);
            assert!(rho_exceeds(d, n, &below).unwrap());
            assert!(!rho_exceeds(d, n, &above).unwrap());
        }
    }

    #[test]
    fn case3_quotient_formula() {
        assert!((case3_quotient_lambda2(3, 7, 7) - (3.0 - 0.25)).abs() < 1e-12);
        assert!((case3_quotient_lambda2(5, 7, 12) - (5.0 - 0.125 - 1.0 / 13.0)).abs() < 1e-12);
    }

    #[test]
    fn case_c2a_boundaries() {
        // d = 3, x = 1689/600: the Q' sign flips between n = 12 and
        // n = 13, the Q sign holds from the start of the domain.
        for n in 10..=30 {
            let o = check_case_outcome(CaseId::C2a, 3, n).unwrap();
            assert_eq!(o.q_prime_det_positive, Some(n >= 13), "Q' at n={n}");
            assert_eq!(o.q_det_negative, Some(true), "Q at n={n}");
            assert_eq!(check_case(CaseId::C2a, 3, n).unwrap(), n >= 13);
        }
        assert!(check_case(CaseId::C2a, 5, 20).is_err());
        assert!(check_case(CaseId::C2a, 3, 9).is_err());
    }

    #[test]
    fn case_c2b_and_c2c_upper_windows() {
        for n in 10..=40 {
            let b = check_case_outcome(CaseId::C2b, 5, n).unwrap();
            assert_eq!(b.q_prime_det_positive, Some(true), "c2b Q' at n={n}");
            assert_eq!(b.q_det_negative, Some(n <= 17), "c2b Q at n={n}");
            let c = check_case_outcome(CaseId::C2c, 7, n).unwrap();
            assert_eq!(c.q_prime_det_positive, Some(true), "c2c Q' at n={n}");
            assert_eq!(c.q_det_negative, Some(n <= 15), "c2c Q at n={n}");
        }
    }

    #[test]
    fn case_c2d_degree_dependent_onsets() {
        let onset = |d: u32| -> Option<usize> {
            (10..=60).find(|&n| check_case(CaseId::C2d, d, n).unwrap())
        };
        assert_eq!(onset(3), None);
        assert_eq!(onset(4), Some(21));
        assert_eq!(onset(5), Some(14));
        assert_eq!(onset(6), Some(12));
        assert_eq!(onset(7), Some(11));
        for d in 8..=15 {
            assert_eq!(onset(d), Some(10), "d = {d}");
        }
        // Once on, the condition stays on through the sampled domain.
        for d in 4..=10 {
            if let Some(start) = onset(d) {
                for n in start..=60 {
                    assert!(check_case(CaseId::C2d, d, n).unwrap(), "d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn case_c3a_always_holds() {
        for d in 3..=12 {
            for n in 14..=40 {
                assert!(check_case(CaseId::C3a, d, n).unwrap(), "d={d} n={n}");
            }
        }
        assert!(check_case(CaseId::C3a, 3, 13).is_err());
    }

    #[test]
    fn case_c3b_boundaries() {
        for n in 14..=40 {
            assert_eq!(check_case(CaseId::C3b, 3, n).unwrap(), n >= 19, "d=3 n={n}");
        }
        for d in 4..=12 {
            for n in 14..=40 {
                assert!(check_case(CaseId::C3b, d, n).unwrap(), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn case_id_round_trip() {
        for c in CaseId::ALL {
            assert_eq!(c.as_str().parse::<CaseId>().unwrap(), c);
        }
        assert!("c9z".parse::<CaseId>().is_err());
    }

    #[test]
    fn rho_monotone_decreasing_in_n() {
        // Larger right-hand blocks pull the subdominant eigenvalue up:
        // rho increases with n toward d.
        for d in [3u32, 7, 15] {
            let mut prev = rho(d, 6).unwrap();
            for n in (8..=60).step_by(2) {
                let r = rho(d, n).unwrap();
                assert!(r > prev - 1e-12, "rho({d},{n}) dropped: {r} < {prev}");
                assert!(r < f64::from(d));
                prev = r;
            }
        }
    }

    #[test]
    fn residual_cubic_checks() {
        // The remainder assert in residual_cubic is exercised through
        // rho; here confirm the cubic evaluates to zero at rho within
        // bisection tolerance, via exact Sturm localization.
        let cubic = residual_cubic(&theorem42_q(3, 10), 3);
        assert_eq!(cubic.degree(), 3);
        let r = rho(3, 10).unwrap();
        let lo = rat(((r - 1e-6) * 1e9) as i64, 1_000_000_000);
        let hi = rat(((r + 1e-6) * 1e9) as i64, 1_000_000_000);
        assert_eq!(cubic.count_roots_in(&lo, &hi), 1);
    }
}
