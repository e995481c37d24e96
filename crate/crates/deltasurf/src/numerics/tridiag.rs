//! Eigenvalues of symmetric tridiagonal matrices by Sturm-sequence bisection.
//!
//! Used for the 1D finite-difference operators (radial sectors, transverse
//! oracle grids) and for Golub-Welsch quadrature nodes. Only eigenvalues are
//! produced; the lab never needs tridiagonal eigenvectors.

/// Number of eigenvalues of `T - x I` that are `< 0`, where `T` has diagonal
/// `d` and subdiagonal `e` (`e[i]` couples rows `i` and `i+1`).
fn count_below(d: &[f64], e: &[f64], x: f64) -> usize {
    let n = d.len();
    let mut count = 0usize;
    let mut q = d[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let ei = e[i - 1];
        let denom = if q.abs() < 1e-300 {
            // standard safeguard against exact zero pivots
            1e-300_f64.copysign(if q == 0.0 { 1.0 } else { q })
        } else {
            q
        };
        q = (d[i] - x) - ei * ei / denom;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
fn gershgorin(d: &[f64], e: &[f64]) -> (f64, f64) {
    let n = d.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { e[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { e[i].abs() } else { 0.0 };
        lo = lo.min(d[i] - left - right);
        hi = hi.max(d[i] + left + right);
    }
    (lo, hi)
}

/// The `k` smallest eigenvalues (ascending) of the symmetric tridiagonal
/// matrix with diagonal `d`, subdiagonal `e`.
pub fn lowest_eigenvalues(d: &[f64], e: &[f64], k: usize) -> Vec<f64> {
    let k = k.min(d.len());
    let (glo, ghi) = gershgorin(d, e);
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        // binary search for the j-th eigenvalue: smallest x with count(x) > j
        let mut lo = glo;
        let mut hi = ghi;
        for _ in 0..120 {
            let mid = 0.5 * (lo + hi);
            if count_below(d, e, mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-15 * mid.abs().max(1.0) {
                break;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirichlet_laplacian_eigenvalues() {
        // -u'' on (0,1), h = 1/(n+1): exact (2/h^2) (1 - cos(k pi h))
        let n = 200;
        let h = 1.0 / (n as f64 + 1.0);
        let d = vec![2.0 / (h * h); n];
        let e = vec![-1.0 / (h * h); n - 1];
        let vals = lowest_eigenvalues(&d, &e, 3);
        for (k, v) in vals.iter().enumerate() {
            let kk = (k + 1) as f64;
            let exact = 2.0 / (h * h) * (1.0 - (kk * std::f64::consts::PI * h).cos());
            assert!((v - exact).abs() < 1e-8 * exact, "k={k} {v} vs {exact}");
        }
    }

    #[test]
    fn handles_2x2() {
        let vals = lowest_eigenvalues(&[1.0, 3.0], &[1.0], 2);
        // eigenvalues 2 +- sqrt(2)
        assert!((vals[0] - (2.0 - 2f64.sqrt())).abs() < 1e-12);
        assert!((vals[1] - (2.0 + 2f64.sqrt())).abs() < 1e-12);
    }
}
