//! Nelder–Mead minimization in two variables.

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    /// Stop once the spread of function values over the simplex is below this.
    pub f_tol: f64,
    /// ... and the simplex diameter is below this.
    pub x_tol: f64,
    pub max_iter: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct SimplexResult {
    pub x: [f64; 2],
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

pub fn minimize<F: FnMut([f64; 2]) -> f64>(mut f: F, start: [f64; 2], step: [f64; 2], opts: &SimplexOptions) -> SimplexResult {
    let mut pts = [start, [start[0] + step[0], start[1]], [start[0], start[1] + step[1]]];
    let mut vals = [f(pts[0]), f(pts[1]), f(pts[2])];
    let mut iterations = 0;
    let mut converged = false;

    while iterations < opts.max_iter {
        // Order best → worst.
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
        pts = idx.map(|i| pts[i]);
        vals = idx.map(|i| vals[i]);

        let spread = vals[2] - vals[0];
        let diameter = pts[1..]
            .iter()
            .map(|p| (p[0] - pts[0][0]).hypot(p[1] - pts[0][1]))
            .fold(0.0, f64::max);
        if spread <= opts.f_tol && diameter <= opts.x_tol {
            converged = true;
            break;
        }
        iterations += 1;

        let centroid = [0.5 * (pts[0][0] + pts[1][0]), 0.5 * (pts[0][1] + pts[1][1])];
        let along = |t: f64| [centroid[0] + t * (pts[2][0] - centroid[0]), centroid[1] + t * (pts[2][1] - centroid[1])];

        let xr = along(-1.0);
        let fr = f(xr);
        if fr < vals[0] {
            let xe = along(-2.0);
            let fe = f(xe);
            if fe < fr {
                pts[2] = xe;
                vals[2] = fe;
            } else {
                pts[2] = xr;
                vals[2] = fr;
            }
            continue;
        }
        if fr < vals[1] {
            pts[2] = xr;
            vals[2] = fr;
            continue;
        }
        // Contraction, outside if the reflection improved on the worst point.
        let (xc, fc) = if fr < vals[2] {
            let xc = along(-0.5);
            (xc, f(xc))
        } else {
            let xc = along(0.5);
            (xc, f(xc))
        };
        if fc < vals[2].min(fr) {
            pts[2] = xc;
            vals[2] = fc;
            continue;
        }
        // Shrink toward the best point.
        for k in 1..3 {
            pts[k] = [0.5 * (pts[0][0] + pts[k][0]), 0.5 * (pts[0][1] + pts[k][1])];
            vals[k] = f(pts[k]);
        }
    }

    let best = (0..3).min_by(|&a, &b| vals[a].total_cmp(&vals[b])).unwrap_or(0);
    SimplexResult { x: pts[best], value: vals[best], iterations, converged }
}

#[cfg(test)]
mod tests {
    use super::*;

    const OPTS: SimplexOptions = SimplexOptions { f_tol: 1e-12, x_tol: 1e-7, max_iter: 500 };

    #[test]
    fn quadratic_bowl() {
        let r = minimize(|p| (p[0] - 1.0).powi(2) + 3.0 * (p[1] + 0.5).powi(2), [0.0, 0.0], [0.1, 0.1], &OPTS);
        assert!(r.converged);
        assert!((r.x[0] - 1.0).abs() < 1e-5 && (r.x[1] + 0.5).abs() < 1e-5);
    }

    #[test]
    fn rosenbrock() {
        let r = minimize(
            |p| (1.0 - p[0]).powi(2) + 100.0 * (p[1] - p[0] * p[0]).powi(2),
            [-1.2, 1.0],
            [0.1, 0.1],
            &SimplexOptions { max_iter: 2000, ..OPTS },
        );
        assert!(r.converged);
        assert!((r.x[0] - 1.0).abs() < 1e-4 && (r.x[1] - 1.0).abs() < 1e-4);
    }

    #[test]
    fn flat_function_converges() {
        let r = minimize(|_| 0.25, [0.3, 0.3], [0.05, 0.1], &SimplexOptions { f_tol: 1e-9, x_tol: 1e-5, max_iter: 500 });
        assert!(r.converged);
        assert_eq!(r.value, 0.25);
    }

    #[test]
    fn iteration_cap_reports_nonconvergence() {
        let r = minimize(|p| p[0] * p[0] + p[1] * p[1], [5.0, 5.0], [0.1, 0.1], &SimplexOptions { max_iter: 3, ..OPTS });
        assert!(!r.converged);
        assert_eq!(r.iterations, 3);
    }
}
