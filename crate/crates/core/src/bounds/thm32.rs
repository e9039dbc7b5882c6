//! Closed forms behind the cut-vertex threshold (8n−25)/(9n−25)·d: the
//! second-largest eigenvalue of the three-block quotient around a cut
//! vertex, its minimizing edge split, and the value at the optimum.

use super::BoundsError;

fn invalid(reason: impl Into<String>) -> BoundsError {
    BoundsError::InvalidParameters {
        what: "thm32 quotient",
        reason: reason.into(),
    }
}

fn check_params(d: u32, n: usize, s1: usize) -> Result<(), BoundsError> {
    if d < 3 {
        return Err(invalid(format!("d must be at least 3, got {d}")));
    }
    if n < 5 {
        return Err(invalid(format!("n must be at least 5, got {n}")));
    }
    if s1 < 2 || s1 > n - 3 {
        return Err(invalid(format!("s1 must satisfy 2 <= s1 <= n-3, got {s1}")));
    }
    Ok(())
}

/// λ2 of the quotient over {one side of the cut vertex, the cut vertex,
/// the other side}, where the cut vertex sends m2 edges to the second
/// side (and d − m2 to the first) and the first side has s1 vertices:
///
/// λ2 = (A + sqrt(A² + 4B)) / 2 with
/// A = d − m1/s1 − m2/s2,  B = m1²/s1 + m2²/s2 − m1·m2/(s1·s2),
/// m1 = d − m2, s2 = n − 1 − s1.
pub fn thm32_quotient_lambda2(d: u32, n: usize, s1: usize, m2: f64) -> Result<f64, BoundsError> {
    check_params(d, n, s1)?;
    let df = f64::from(d);
    if !(m2 > 0.0 && 2.0 * m2 <= df) {
        return Err(invalid(format!("m2 must satisfy 0 < m2 <= d/2, got {m2}")));
    }
    let s1 = s1 as f64;
    let s2 = (n - 1) as f64 - s1;
    let m1 = df - m2;
    let a = df - m1 / s1 - m2 / s2;
    let b = m1 * m1 / s1 + m2 * m2 / s2 - m1 * m2 / (s1 * s2);
    Ok(0.5 * (a + (a * a + 4.0 * b).sqrt()))
}

/// The (relaxed, real-valued) m2 minimizing the quotient λ2 for fixed
/// d, n, s1: m2* = d(s2 + 2·s1·s2) / (n − 1 + 4·s1·s2).
pub fn optimal_m2(d: u32, n: usize, s1: usize) -> Result<f64, BoundsError> {
    check_params(d, n, s1)?;
    let df = f64::from(d);
    let s1f = s1 as f64;
    let s2 = (n - 1) as f64 - s1f;
    Ok(df * (s2 + 2.0 * s1f * s2) / ((n - 1) as f64 + 4.0 * s1f * s2))
}

/// The quotient λ2 evaluated at the optimal m2, in closed form:
/// d − d·n / (n − 1 + 4·s1·s2).
pub fn lambda2_at_optimal_m2(d: u32, n: usize, s1: usize) -> Result<f64, BoundsError> {
    check_params(d, n, s1)?;
    let df = f64::from(d);
    let s1f = s1 as f64;
    let s2 = (n - 1) as f64 - s1f;
    Ok(df - df * n as f64 / ((n - 1) as f64 + 4.0 * s1f * s2))
}
