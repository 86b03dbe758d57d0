use super::VerifyError;

fn check(x: f64, r: f64, p: f64, p_max: f64, m: u32) -> Result<(), VerifyError> {
    if !(0.0..1.0).contains(&x) || !(0.0..1.0).contains(&r) {
        return Err(VerifyError::Domain(format!("x = {x}, r = {r} must lie in [0, 1)")));
    }
    if !(p > 0.0 && p <= p_max) {
        return Err(VerifyError::Domain(format!("p = {p} is outside (0, {p_max}]")));
    }
    if m == 0 {
        return Err(VerifyError::Domain("m must be positive".into()));
    }
    Ok(())
}

fn moebius_growth(x: f64, rm: f64) -> f64 {
    (rm + x) / (1.0 + x * rm)
}

/// `Q(x) = 1 − ((r^m+x)/(1+x r^m))^p − p (1−r^m)/(1+r^m) (1−x)`, `p ∈ (0, 1]`.
pub fn lemma_q(x: f64, r: f64, p: f64, m: u32) -> Result<f64, VerifyError> {
    check(x, r, p, 1.0, m)?;
    let rm = r.powi(m as i32);
    Ok(1.0 - moebius_growth(x, rm).powf(p) - p * (1.0 - rm) / (1.0 + rm) * (1.0 - x))
}

/// `P(x) = 1 − ((r^m+x)/(1+x r^m))^p − (p/2) (1−r^m)/(1+r^m) (1−x²)`, `p ∈ (0, 2]`.
pub fn lemma_p(x: f64, r: f64, p: f64, m: u32) -> Result<f64, VerifyError> {
    check(x, r, p, 2.0, m)?;
    let rm = r.powi(m as i32);
    Ok(1.0 - moebius_growth(x, rm).powf(p) - 0.5 * p * (1.0 - rm) / (1.0 + rm) * (1.0 - x * x))
}

/// Right-hand side of the derivative bound for `|f| ≤ 1`:
/// `(1+|z|)^{k−1} (1−|z|²)^{−k} (1−|f(z)|²)`.
pub fn ruscheweyh_bound(z_abs: f64, f_abs: f64, k: usize) -> f64 {
    (1.0 - f_abs * f_abs) / ((1.0 + z_abs) * (1.0 - z_abs).powi(k as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_vanishes_at_the_right_end() {
        for &(r, p, m) in &[(0.3, 0.5, 1), (0.8, 1.0, 3), (0.0, 0.2, 2)] {
            let q = lemma_q(1.0 - 1e-12, r, p, m).unwrap();
            assert!(q.abs() < 1e-10, "{q}");
        }
    }

    #[test]
    fn p_is_identically_zero_at_r0_p2_m1() {
        for i in 0..100 {
            let x = i as f64 / 100.0;
            assert!(lemma_p(x, 0.0, 2.0, 1).unwrap().abs() < 1e-15);
        }
    }

    #[test]
    fn q_example_value() {
        // direct arithmetic: r^m = 0.25, (0.55/1.075)^0.7, 0.7·0.6·0.7
        let direct = 1.0 - (0.55f64 / 1.075).powf(0.7) - 0.7 * (0.75 / 1.25) * 0.7;
        let q = lemma_q(0.3, 0.5, 0.7, 2).unwrap();
        assert!((q - direct).abs() < 1e-15);
        assert!(q >= 0.0);
    }

    #[test]
    fn domain_errors() {
        assert!(lemma_q(1.0, 0.5, 0.5, 1).is_err());
        assert!(lemma_q(0.5, -0.1, 0.5, 1).is_err());
        assert!(lemma_q(0.5, 0.5, 1.5, 1).is_err());
        assert!(lemma_p(0.5, 0.5, 1.5, 1).is_ok());
        assert!(lemma_p(0.5, 0.5, 2.5, 1).is_err());
        assert!(lemma_p(0.5, 0.5, 1.0, 0).is_err());
    }

    #[test]
    fn ruscheweyh_at_origin_is_wiener() {
        assert_eq!(ruscheweyh_bound(0.0, 0.6, 3), 1.0 - 0.36);
    }
}
