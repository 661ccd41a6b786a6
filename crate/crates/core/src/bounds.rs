//! Closed-form lower bounds on the number of vertices two longest paths of a
//! `k`-connected graph share.

use crate::error::{Error, Result};

/// `⌈a / b⌉` for `b > 0`, exact for negative `a`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    let q = a.div_euclid(b);
    if a.rem_euclid(b) == 0 {
        q
    } else {
        q + 1
    }
}

/// The conjectured bound: `k`.
pub fn bound_hippchen(k: usize) -> i64 {
    k as i64
}

/// `min{k, ⌈(8k − n − 4) / 3⌉}`. May be negative; callers treat values
/// `≤ 0` as vacuous.
pub fn bound_main(k: usize, n: usize) -> i64 {
    let (k, n) = (k as i64, n as i64);
    k.min(ceil_div(8 * k - n - 4, 3))
}

/// `⌈(8k − n + 2) / 5⌉`.
pub fn bound_gutierrez(k: usize, n: usize) -> i64 {
    let (k, n) = (k as i64, n as i64);
    ceil_div(8 * k - n + 2, 5)
}

/// `min{4k − ℓ − 3, k}` for longest-path length `ℓ`; defined for `k ≥ 3`.
pub fn bound_submain(k: usize, length: usize) -> Result<i64> {
    if k < 3 {
        return Err(Error::precondition(format!("bound needs k >= 3, got {k}")));
    }
    let (k, l) = (k as i64, length as i64);
    Ok((4 * k - l - 3).min(k))
}

/// `1 / (∛256 + 3)^{3/5}`.
pub fn chen_constant() -> f64 {
    1.0 / (256f64.cbrt() + 3.0).powf(0.6)
}

/// `c · k^{3/5}` with `c` from [`chen_constant`].
pub fn bound_chen(k: usize) -> f64 {
    chen_constant() * (k as f64).powf(0.6)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_div_signs() {
        assert_eq!(ceil_div(-2, 3), 0);
        assert_eq!(ceil_div(-6, 3), -2);
        assert_eq!(ceil_div(-7, 3), -2);
        assert_eq!(ceil_div(14, 3), 5);
        assert_eq!(ceil_div(0, 5), 0);
        assert_eq!(ceil_div(1, 5), 1);
    }

    #[test]
    fn formula_examples() {
        assert_eq!(bound_hippchen(5), 5);
        assert_eq!(bound_hippchen(0), 0);
        assert_eq!(bound_main(5, 23), 5);
        assert_eq!(bound_main(4, 34), -2);
        assert_eq!(bound_main(5, 22), 5);
        assert_eq!(bound_gutierrez(4, 14), 4);
        assert_eq!(bound_gutierrez(5, 42), 0);
        assert_eq!(bound_gutierrez(5, 17), 5);
        assert_eq!(bound_submain(3, 7).unwrap(), 2);
        assert_eq!(bound_submain(5, 12).unwrap(), 5);
        assert_eq!(bound_submain(3, 10).unwrap(), -1);
        assert!(bound_submain(2, 3).is_err());
    }

    #[test]
    fn chen_values() {
        assert!((bound_chen(1) - 0.2615).abs() < 1e-3);
        assert_eq!(bound_chen(0), 0.0);
        assert!((bound_chen(32) - 8.0 * chen_constant()).abs() < 1e-12);
    }
}
