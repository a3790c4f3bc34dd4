//! One-dimensional restrictions of piecewise-linear functions along rays.
//!
//! For a tropical rational `f` and a direction `theta`, the slice
//! `t -> f(t*theta)` is a one-variable piecewise-linear function. Every
//! monomial restricts to an affine function of `t` with slope
//! `<m, theta>` and intercept `c`, so the slice is the difference of two
//! upper envelopes of finite line families. [`ray_slice`] computes those
//! envelopes exactly (sort by slope, convex-hull sweep), merges the
//! breakpoints, and records the slope jumps; negative jumps are poles of the
//! slice, positive jumps are roots.
//!
//! [`blackbox_slice`] recovers the same structure for a function available
//! only through point evaluation (e.g. a pointwise Casorati determinant):
//! it samples a uniform grid, marks nodes where adjacent cell secants
//! disagree, recursively re-grids the suspicious windows down to a terminal
//! width, and intersects flanking secant lines to localize each breakpoint.
//! It is exact (to the configured width) when breakpoints are separated by
//! more than one initial grid cell and jumps exceed the noise floor of the
//! evaluations.

use crate::poly::{PlfunError, TropicalRational};

/// A slope discontinuity of a one-dimensional slice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Breakpoint {
    /// Position along the ray, in `(-R, R)`.
    pub t: f64,
    /// Right slope minus left slope; negative at poles, positive at roots.
    pub jump: f64,
}

/// A one-dimensional restriction `t -> f(t*theta)` on `(-R, R)`.
///
/// Invariants: breakpoints are strictly increasing with nonzero jumps;
/// `slopes` has one entry more than `breakpoints` (the leftmost segment
/// first); `slopes[i+1] - slopes[i]` equals `breakpoints[i].jump`.
#[derive(Debug, Clone, PartialEq)]
pub struct RaySlice {
    /// Direction vector of the ray (unit length for sphere averages).
    pub direction: Vec<f64>,
    /// Half-width of the scanned interval.
    pub radius: f64,
    /// Value of the slice at `t = 0`, which equals `f(0)` for every ray.
    pub value_at_0: f64,
    /// Per-segment slopes, left to right.
    pub slopes: Vec<f64>,
    /// Slope discontinuities, sorted by position.
    pub breakpoints: Vec<Breakpoint>,
}

impl RaySlice {
    /// Value of the piecewise-linear slice at `t`, reconstructed from
    /// `value_at_0` and the slope segments.
    pub fn value_at(&self, t: f64) -> f64 {
        let (lo, hi) = if t < 0.0 { (t, 0.0) } else { (0.0, t) };
        let mut acc = 0.0;
        let mut prev = -self.radius;
        for (i, &slope) in self.slopes.iter().enumerate() {
            let next = self.breakpoints.get(i).map_or(self.radius, |bp| bp.t);
            let a = prev.max(lo);
            let b = next.min(hi);
            if b > a {
                acc += slope * (b - a);
            }
            prev = next;
        }
        if t < 0.0 {
            self.value_at_0 - acc
        } else {
            self.value_at_0 + acc
        }
    }

    /// Breakpoints with negative jump (poles of the slice).
    pub fn poles(&self) -> impl Iterator<Item = &Breakpoint> {
        self.breakpoints.iter().filter(|bp| bp.jump < 0.0)
    }

    /// Breakpoints with positive jump (roots of the slice).
    pub fn roots(&self) -> impl Iterator<Item = &Breakpoint> {
        self.breakpoints.iter().filter(|bp| bp.jump > 0.0)
    }
}

/// Upper envelope of a finite family of lines `(slope, intercept)`.
///
/// Returns the hull lines ordered by slope together with the knots between
/// consecutive hull lines; `hull[i]` is active on `(knots[i-1], knots[i])`.
pub(crate) fn upper_envelope(lines: &[(f64, f64)]) -> (Vec<(f64, f64)>, Vec<f64>) {
    let mut sorted = lines.to_vec();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let mut dedup: Vec<(f64, f64)> = Vec::with_capacity(sorted.len());
    for l in sorted {
        if let Some(last) = dedup.last_mut() {
            if last.0 == l.0 {
                // Equal slopes: only the larger intercept can win.
                *last = l;
                continue;
            }
        }
        dedup.push(l);
    }

    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(dedup.len());
    let mut knots: Vec<f64> = Vec::new();
    for l in dedup {
        while let Some(&top) = hull.last() {
            // Intersection of the candidate with the current top line.
            let x = (top.1 - l.1) / (l.0 - top.0);
            match knots.last() {
                Some(&k) if x <= k => {
                    hull.pop();
                    knots.pop();
                }
                _ => {
                    knots.push(x);
                    break;
                }
            }
        }
        hull.push(l);
    }
    (hull, knots)
}

/// Slope of the envelope `(hull, knots)` at position `t` (away from knots).
fn envelope_slope_at(hull: &[(f64, f64)], knots: &[f64], t: f64) -> f64 {
    let idx = knots.partition_point(|&k| k < t);
    hull[idx].0
}

/// Exact slice of a tropical rational along the ray `t -> t*theta`.
///
/// Breakpoints are the merged envelope knots of numerator and denominator
/// inside `(-radius, radius)`; jumps with absolute value at most `tol` are
/// discarded as numerical noise (coincident numerator/denominator corners
/// cancel). Positions assume `theta` has unit length when the slice feeds
/// sphere averages, but any nonzero direction is accepted.
///
/// # Panics
///
/// Panics when `radius <= 0`, `theta` is zero or has the wrong length, or
/// `tol < 0`.
pub fn ray_slice(f: &TropicalRational, theta: &[f64], radius: f64, tol: f64) -> RaySlice {
    assert!(radius > 0.0 && radius.is_finite(), "radius must be positive");
    assert!(tol >= 0.0, "tolerance must be nonnegative");
    assert_eq!(theta.len(), f.dim(), "direction has wrong dimension");
    assert!(
        theta.iter().any(|&v| v != 0.0) && theta.iter().all(|v| v.is_finite()),
        "direction must be nonzero and finite"
    );

    let restrict = |poly: &crate::poly::TropicalPolynomial| -> Vec<(f64, f64)> {
        poly.terms()
            .iter()
            .map(|m| {
                let slope: f64 = m.expo.iter().zip(theta).map(|(e, th)| e * th).sum();
                (slope, m.coeff.value())
            })
            .collect()
    };
    let (num_hull, num_knots) = upper_envelope(&restrict(f.num()));
    let (den_hull, den_knots) = upper_envelope(&restrict(f.den()));

    let mut events: Vec<f64> = num_knots
        .iter()
        .chain(den_knots.iter())
        .copied()
        .filter(|&t| t > -radius && t < radius)
        .collect();
    events.sort_by(f64::total_cmp);
    events.dedup();

    let slice_slope = |t: f64| -> f64 {
        envelope_slope_at(&num_hull, &num_knots, t) - envelope_slope_at(&den_hull, &den_knots, t)
    };

    // Segment slopes are sampled at midpoints between consecutive events,
    // which stay clear of every knot.
    let mut slopes = Vec::with_capacity(events.len() + 1);
    let mut breakpoints = Vec::with_capacity(events.len());
    let first_probe = 0.5 * (-radius + events.first().copied().unwrap_or(radius));
    slopes.push(slice_slope(first_probe));
    for (i, &t) in events.iter().enumerate() {
        let next = events.get(i + 1).copied().unwrap_or(radius);
        let probe = 0.5 * (t + next);
        let s = slice_slope(probe);
        let jump = s - slopes.last().copied().unwrap();
        if jump.abs() > tol {
            breakpoints.push(Breakpoint { t, jump });
            slopes.push(s);
        }
    }

    let origin = vec![0.0; f.dim()];
    RaySlice {
        direction: theta.to_vec(),
        radius,
        value_at_0: f.value(&origin),
        slopes,
        breakpoints,
    }
}

/// Tuning knobs for [`blackbox_slice`].
#[derive(Debug, Clone)]
pub struct BlackboxConfig {
    /// Adjacent-cell secant disagreement that marks a grid node suspicious.
    pub slope_tol: f64,
    /// Reported jumps below this magnitude are discarded; keep it above the
    /// evaluation noise floor divided by `min_width`.
    pub jump_tol: f64,
    /// Terminal window width; breakpoints closer than this merge.
    pub min_width: f64,
    /// Cell count of the top-level uniform grid.
    pub initial_cells: usize,
    /// Evaluation budget; exceeding it aborts with `BudgetExceeded`.
    pub max_evals: usize,
}

impl Default for BlackboxConfig {
    fn default() -> Self {
        BlackboxConfig {
            slope_tol: 1e-6,
            jump_tol: 1e-5,
            min_width: 1e-6,
            initial_cells: 4096,
            max_evals: 1_000_000,
        }
    }
}

struct Sampler<'a, G: FnMut(f64) -> f64> {
    g: &'a mut G,
    evals: usize,
    max_evals: usize,
}

impl<G: FnMut(f64) -> f64> Sampler<'_, G> {
    fn at(&mut self, t: f64) -> Result<f64, PlfunError> {
        if self.evals >= self.max_evals {
            return Err(PlfunError::BudgetExceeded {
                max_evals: self.max_evals,
            });
        }
        self.evals += 1;
        Ok((self.g)(t))
    }
}

/// Samples a uniform grid on `[a, b]`, marks interior nodes whose adjacent
/// cell secants disagree, and recurses into the suspicious windows until
/// they shrink to the terminal width. Terminal windows land in `cells` in
/// left-to-right order.
fn grid_scan<G: FnMut(f64) -> f64>(
    s: &mut Sampler<'_, G>,
    a: f64,
    b: f64,
    ncells: usize,
    cfg: &BlackboxConfig,
    cells: &mut Vec<(f64, f64)>,
) -> Result<(), PlfunError> {
    if b - a <= cfg.min_width {
        cells.push((a, b));
        return Ok(());
    }
    let n = ncells.max(4);
    let h = (b - a) / n as f64;
    let mut ys = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let x = if i == n { b } else { a + i as f64 * h };
        ys.push(s.at(x)?);
    }
    let slope = |i: usize| (ys[i + 1] - ys[i]) / h;

    // Runs of consecutive suspicious nodes become one window spanning the
    // cells on both sides of the run.
    let mut i = 1;
    while i < n {
        if (slope(i) - slope(i - 1)).abs() <= cfg.slope_tol {
            i += 1;
            continue;
        }
        let start = i;
        while i < n && (slope(i) - slope(i - 1)).abs() > cfg.slope_tol {
            i += 1;
        }
        // Suspicious nodes start..i-1; a node's kink lies in one of its two
        // adjacent cells, so the window spans cells start-1 .. i-1.
        let w_lo = a + (start - 1) as f64 * h;
        let w_hi = (a + i as f64 * h).min(b);
        if w_hi - w_lo >= 0.999 * (b - a) {
            // Every interior node is suspicious, so the window failed to
            // shrink; bisect to keep the recursion depth bounded.
            let mid = 0.5 * (a + b);
            grid_scan(s, a, mid, (n / 2).max(4), cfg, cells)?;
            grid_scan(s, mid, b, (n / 2).max(4), cfg, cells)?;
        } else {
            grid_scan(s, w_lo, w_hi, 4, cfg, cells)?;
        }
    }
    Ok(())
}

/// Breakpoint recovery for a black-box piecewise-linear function on
/// `[lo, hi]`.
///
/// The result is shaped like a symbolic [`ray_slice`] with direction `[1]`
/// and radius `max(|lo|, |hi|)`; breakpoints are searched only inside
/// `(lo, hi)`. Each cluster of terminal windows produces one breakpoint at
/// the intersection of the flanking secant lines, so two true breakpoints
/// closer than one initial grid cell may merge into one with the combined
/// jump.
///
/// # Panics
///
/// Panics unless `lo <= 0 <= hi` and `lo < hi`.
pub fn blackbox_slice<G: FnMut(f64) -> f64>(
    mut g: G,
    lo: f64,
    hi: f64,
    cfg: &BlackboxConfig,
) -> Result<RaySlice, PlfunError> {
    assert!(lo < hi, "interval must be nondegenerate");
    assert!(lo <= 0.0 && 0.0 <= hi, "interval must contain 0");

    let mut s = Sampler {
        g: &mut g,
        evals: 0,
        max_evals: cfg.max_evals,
    };
    let value_at_0 = s.at(0.0)?;
    let mut cells = Vec::new();
    grid_scan(&mut s, lo, hi, cfg.initial_cells, cfg, &mut cells)?;

    // Merge terminal windows separated by less than one terminal width.
    let mut clusters: Vec<(f64, f64)> = Vec::new();
    for (a, b) in cells {
        match clusters.last_mut() {
            Some(last) if a - last.1 <= cfg.min_width => last.1 = last.1.max(b),
            _ => clusters.push((a, b)),
        }
    }

    let radius = lo.abs().max(hi.abs());
    if clusters.is_empty() {
        let (flo, fhi) = (s.at(lo)?, s.at(hi)?);
        return Ok(RaySlice {
            direction: vec![1.0],
            radius,
            value_at_0,
            slopes: vec![(fhi - flo) / (hi - lo)],
            breakpoints: Vec::new(),
        });
    }

    // One secant line per clean stretch between clusters, sampled one
    // terminal width inside the stretch.
    let w = cfg.min_width;
    let mut stretches = Vec::with_capacity(clusters.len() + 1);
    let mut start = lo;
    for &(a, b) in &clusters {
        stretches.push((start, a));
        start = b;
    }
    stretches.push((start, hi));
    let mut lines = Vec::with_capacity(stretches.len());
    for (k, &(from, to)) in stretches.iter().enumerate() {
        let mut p = if k == 0 { from } else { from + w };
        let mut q = if k == stretches.len() - 1 { to } else { to - w };
        if q - p < 0.25 * w {
            // Degenerate stretch between near-touching clusters.
            let mid = 0.5 * (from + to);
            p = mid - 0.125 * w;
            q = mid + 0.125 * w;
        }
        let (fp, fq) = (s.at(p)?, s.at(q)?);
        let m = (fq - fp) / (q - p);
        lines.push((m, fp - m * p));
    }

    let mut slopes = vec![lines[0].0];
    let mut breakpoints: Vec<Breakpoint> = Vec::with_capacity(clusters.len());
    for (i, &(a, b)) in clusters.iter().enumerate() {
        let (sl, il) = lines[i];
        let (sr, ir) = lines[i + 1];
        let jump = sr - slopes.last().copied().unwrap();
        if jump.abs() <= cfg.jump_tol {
            continue;
        }
        let t = if (sr - sl).abs() > 1e3 * f64::EPSILON {
            ((il - ir) / (sr - sl)).clamp(a - w, b + w)
        } else {
            0.5 * (a + b)
        };
        breakpoints.push(Breakpoint { t, jump });
        slopes.push(sr);
    }

    Ok(RaySlice {
        direction: vec![1.0],
        radius,
        value_at_0,
        slopes,
        breakpoints,
    })
}
