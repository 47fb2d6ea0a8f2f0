use super::Polynomial;
use crate::scalar::Real;
use crate::tol;
use num_complex::Complex;

impl<F: Real> Polynomial<Complex<F>> {
    /// `max_{|z| = r} |p(z)|`.
    ///
    /// Dense sampling at `N_SAMPLES` equispaced angles, then golden-section
    /// refinement around each of the largest local maxima.
    pub fn norm_sup_circle(&self, r: F) -> F {
        self.norm_sup_circle_with(r, tol::N_SAMPLES)
    }

    pub fn norm_sup_circle_with(&self, r: F, n_samples: usize) -> F {
        if self.is_constant() {
            return self.norm_coeff();
        }
        let n = n_samples.max(8);
        let step = F::TAU() / F::lit(n as f64);
        let at = |theta: F| self.eval(&Complex::from_polar(r, theta)).norm();
        let values: Vec<F> = (0..n).map(|k| at(step * F::lit(k as f64))).collect();

        let mut peaks: Vec<usize> = (0..n)
            .filter(|&k| {
                let prev = values[(k + n - 1) % n];
                let next = values[(k + 1) % n];
                values[k] >= prev && values[k] >= next
            })
            .collect();
        peaks.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap_or(std::cmp::Ordering::Equal));
        peaks.truncate(4);

        let mut best = values.iter().copied().fold(F::zero(), F::max);
        for k in peaks {
            let centre = step * F::lit(k as f64);
            best = best.max(golden_max(&at, centre - step, centre + step, 60));
        }
        best
    }
}

/// Golden-section search for the maximum of a unimodular `f` on `[lo, hi]`.
fn golden_max<F: Real>(f: &impl Fn(F) -> F, mut lo: F, mut hi: F, iters: usize) -> F {
    let g = (F::lit(5.0).sqrt() - F::one()) / F::lit(2.0);
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
    }
    f1.max(f2)
}
