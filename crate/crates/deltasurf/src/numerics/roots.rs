//! Bracketing root finders for the transcendental equations of the lab.

/// Bisection on `[lo, hi]` assuming `f(lo)` and `f(hi)` have opposite signs.
/// Returns the midpoint once the bracket shrinks below `rel_tol * |root|`
/// (with an absolute floor) or after `max_iter` halvings.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, mut lo: f64, mut hi: f64, rel_tol: f64) -> f64 {
    let mut flo = f(lo);
    debug_assert!(flo * f(hi) <= 0.0, "bisect: no sign change in bracket");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if flo * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
        if hi - lo <= rel_tol * mid.abs().max(1e-300) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Expand `[lo, hi]` geometrically to the right until `f` changes sign,
/// then bisect. Returns `None` if no sign change appears within `grow_cap`
/// doublings.
pub fn bisect_expanding<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    mut hi: f64,
    rel_tol: f64,
    grow_cap: usize,
) -> Option<f64> {
    let flo = f(lo);
    let mut fhi = f(hi);
    let mut grows = 0;
    while flo * fhi > 0.0 {
        if grows >= grow_cap {
            return None;
        }
        hi *= 2.0;
        fhi = f(hi);
        grows += 1;
    }
    Some(bisect(f, lo, hi, rel_tol))
}

/// One secant step from `(a, fa)`, `(b, fb)`; used to polish bisection output.
pub fn secant_polish<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    if (fb - fa).abs() < 1e-300 {
        return 0.5 * (a + b);
    }
    b - fb * (b - a) / (fb - fa)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14);
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn expanding_bracket_reaches_far_root() {
        let r = bisect_expanding(|x| x - 300.0, 0.0, 1.0, 1e-14, 12).unwrap();
        assert!((r - 300.0).abs() < 1e-9);
    }

    #[test]
    fn expanding_gives_up() {
        assert!(bisect_expanding(|x| x + 1.0, 0.0, 1.0, 1e-12, 4).is_none());
    }
}
