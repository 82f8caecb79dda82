use super::sampled::uniform_grid;
use super::FuncError;
use crate::exprlang::{affine_pattern, Expr};

/// Result of sampled Lipschitz estimation.
///
/// `lower` is a certified lower bound for the true Lipschitz constant: it is
/// the largest divided difference actually observed, with the witness pair
/// attached. `upper_estimate` repeats the same number flagged as a heuristic
/// — sampling cannot certify a global upper bound. Only for syntactically
/// affine expressions are the two equal and certified.
#[derive(Debug, Clone)]
pub struct LipschitzEstimate {
    pub lower: f64,
    pub upper_estimate: f64,
    pub certified: bool,
    pub witness: (f64, f64),
}

/// Max and min adjacent divided differences of `f` on a uniform `n`-grid
/// over `window`, with their witness pairs.
///
/// The max is monotone non-decreasing under nested refinement (a coarse
/// cell's slope is a weighted mean of its subdivisions), which makes it a
/// safe certified lower bound for `Lip(f)`. The min plays the same role for
/// expansion constants: an observed divided difference at or below a
/// threshold certifies a hypothesis violation.
pub fn divided_difference_range(
    f: &Expr,
    window: (f64, f64),
    n: usize,
) -> Result<DividedDifferenceRange, FuncError> {
    if n < 2 {
        return Err(FuncError::BadSampleCount(n));
    }
    if !(window.0 < window.1) {
        return Err(FuncError::BadWindow { lo: window.0, hi: window.1 });
    }
    let grid = uniform_grid(window.0, window.1, n);
    let mut prev_x = grid[0];
    let mut prev_v = f.eval(prev_x)?;
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut min_witness = (prev_x, prev_x);
    let mut max_witness = (prev_x, prev_x);
    for &x in &grid[1..] {
        let v = f.eval(x)?;
        let dd = (v - prev_v) / (x - prev_x);
        let a = dd.abs();
        if a > max {
            max = a;
            max_witness = (prev_x, x);
        }
        if a < min {
            min = a;
            min_witness = (prev_x, x);
        }
        prev_x = x;
        prev_v = v;
    }
    Ok(DividedDifferenceRange { min, max, min_witness, max_witness })
}

#[derive(Debug, Clone, Copy)]
pub struct DividedDifferenceRange {
    pub min: f64,
    pub max: f64,
    pub min_witness: (f64, f64),
    pub max_witness: (f64, f64),
}

/// Sampled Lipschitz bounds of `f` on `window` from `n` uniform nodes.
///
/// Affine expressions short-circuit to the exact absolute slope, certified.
pub fn lipschitz_bounds(
    f: &Expr,
    window: (f64, f64),
    n: usize,
) -> Result<LipschitzEstimate, FuncError> {
    if let Some((s, _)) = affine_pattern(f) {
        return Ok(LipschitzEstimate {
            lower: s.abs(),
            upper_estimate: s.abs(),
            certified: true,
            witness: window,
        });
    }
    let dd = divided_difference_range(f, window, n)?;
    Ok(LipschitzEstimate {
        lower: dd.max,
        upper_estimate: dd.max,
        certified: false,
        witness: dd.max_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exprlang::parse;

    #[test]
    fn affine_is_exact_and_certified() {
        let est = lipschitz_bounds(&parse("2*x").unwrap(), (-7.0, 3.0), 10).unwrap();
        assert_eq!(est.lower, 2.0);
        assert!(est.certified);
        let est = lipschitz_bounds(&parse("x/2 - 1").unwrap(), (0.0, 1.0), 10).unwrap();
        assert_eq!(est.lower, 0.5);
    }

    #[test]
    fn sine_approaches_one() {
        let pi = std::f64::consts::PI;
        let est = lipschitz_bounds(&parse("sin(x)").unwrap(), (-pi, pi), 10_000).unwrap();
        assert!(est.lower >= 0.999 && est.lower <= 1.0, "lower = {}", est.lower);
        assert!(!est.certified);
    }

    #[test]
    fn shifted_sine_approaches_two() {
        let pi = std::f64::consts::PI;
        let est = lipschitz_bounds(&parse("x + sin(x)").unwrap(), (-pi, pi), 10_000).unwrap();
        assert!(est.lower >= 1.99 && est.lower <= 2.0, "lower = {}", est.lower);
    }

    #[test]
    fn lower_bound_monotone_under_nested_refinement() {
        let f = parse("x^3 - atan(2*x)").unwrap();
        let w = (-2.0, 2.0);
        let mut prev = 0.0;
        for k in 0..8 {
            let n = 9 * (1 << k) - (1 << k) + 1; // 9, 17, 33, ... nested uniform grids
            let est = lipschitz_bounds(&f, w, n).unwrap();
            assert!(
                est.lower >= prev - 1e-12,
                "refinement decreased the bound: {} -> {}",
                prev,
                est.lower
            );
            prev = est.lower;
        }
    }

    #[test]
    fn min_divided_difference_detects_weak_expansion() {
        let dd = divided_difference_range(&parse("x").unwrap(), (-5.0, 5.0), 100).unwrap();
        assert!(dd.min <= 1.0 + 1e-15 && dd.min >= 1.0 - 1e-15);
    }
}
