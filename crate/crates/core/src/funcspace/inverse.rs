use super::sampled::SampledFunction;
use super::FuncError;
use crate::exprlang::{affine_pattern, Expr};

/// A monotone forward function that can be inverted numerically.
#[derive(Debug, Clone)]
pub enum MonotoneHandle {
    Expr(Expr),
    Sampled(SampledFunction),
}

impl MonotoneHandle {
    fn eval(&self, x: f64) -> Result<f64, FuncError> {
        match self {
            MonotoneHandle::Expr(e) => Ok(e.eval(x)?),
            MonotoneHandle::Sampled(s) => Ok(s.eval(x)),
        }
    }
}

/// Numeric inverse of a strictly monotone function.
///
/// Affine expressions are inverted in closed form (exact to one unit
/// roundoff). Everything else is bracketed by geometric expansion (factor 2)
/// from a centre point, then bisected until the residual satisfies
/// `|forward(x) - y| <= tol * max(1, |y|)`.
///
/// Monotonicity is the caller's declaration; it is sampled-checked on the
/// bracket actually used, and a detected violation is an error rather than a
/// wrong answer.
#[derive(Debug, Clone)]
pub struct NumericInverse {
    forward: MonotoneHandle,
    affine: Option<(f64, f64)>,
    bracket: Option<(f64, f64)>,
    tol: f64,
}

/// Expansion hard stop: brackets beyond this magnitude mean the target value
/// is never attained (the forward map is not surjective onto it).
const MAX_BRACKET: f64 = (1u64 << 60) as f64;

impl NumericInverse {
    pub fn new(forward: &Expr) -> Self {
        NumericInverse {
            affine: affine_pattern(forward),
            forward: MonotoneHandle::Expr(forward.clone()),
            bracket: None,
            tol: 1e-12,
        }
    }

    pub fn for_sampled(forward: &SampledFunction) -> Self {
        NumericInverse {
            affine: None,
            forward: MonotoneHandle::Sampled(forward.clone()),
            bracket: None,
            tol: 1e-12,
        }
    }

    /// Restricts the search to a known enclosing interval.
    pub fn with_bracket(mut self, lo: f64, hi: f64) -> Self {
        self.bracket = Some((lo.min(hi), lo.max(hi)));
        self
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    /// True when the closed-form affine path will be used.
    pub fn is_affine(&self) -> bool {
        self.affine.map(|(s, _)| s != 0.0).unwrap_or(false)
    }

    /// Preimage of `y`, searching outward from 0.
    pub fn invert(&self, y: f64) -> Result<f64, FuncError> {
        self.invert_near(y, 0.0)
    }

    /// Preimage of `y`, expanding the bracket around `guess` first. The
    /// guess is where a linear-growth model predicts the preimage; a good
    /// guess keeps the bracket small.
    pub fn invert_near(&self, y: f64, guess: f64) -> Result<f64, FuncError> {
        if let Some((s, b)) = self.affine {
            if s != 0.0 {
                return Ok((y - b) / s);
            }
        }
        let (lo, hi) = match self.bracket {
            Some(b) => b,
            None => self.expand_bracket(y, guess)?,
        };
        self.check_monotone(lo, hi)?;
        self.bisect(lo, hi, y)
    }

    fn expand_bracket(&self, y: f64, guess: f64) -> Result<(f64, f64), FuncError> {
        let centre = if guess.is_finite() { guess } else { 0.0 };
        let mut r = 1.0;
        loop {
            let (lo, hi) = (centre - r, centre + r);
            let flo = self.forward.eval(lo)?;
            let fhi = self.forward.eval(hi)?;
            if (flo <= y && y <= fhi) || (fhi <= y && y <= flo) {
                return Ok((lo, hi));
            }
            r *= 2.0;
            if r > MAX_BRACKET || centre.abs() + r > MAX_BRACKET {
                return Err(FuncError::NotSurjective { y });
            }
        }
    }

    fn check_monotone(&self, lo: f64, hi: f64) -> Result<(), FuncError> {
        const SAMPLES: usize = 64;
        let mut prev_x = lo;
        let mut prev_v = self.forward.eval(lo)?;
        let end_v = self.forward.eval(hi)?;
        let increasing = end_v >= prev_v;
        for i in 1..=SAMPLES {
            let x = lo + (hi - lo) * i as f64 / SAMPLES as f64;
            let v = self.forward.eval(x)?;
            let ok = if increasing { v >= prev_v } else { v <= prev_v };
            if !ok {
                return Err(FuncError::MonotonicityViolated { x1: prev_x, x2: x });
            }
            prev_x = x;
            prev_v = v;
        }
        Ok(())
    }

    fn bisect(&self, mut lo: f64, mut hi: f64, y: f64) -> Result<f64, FuncError> {
        let tol = self.tol * 1.0f64.max(y.abs());
        let flo = self.forward.eval(lo)?;
        let fhi = self.forward.eval(hi)?;
        let increasing = fhi >= flo;
        let mut best = 0.5 * (lo + hi);
        let mut best_res = f64::INFINITY;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break; // interval exhausted at float resolution
            }
            let fmid = self.forward.eval(mid)?;
            let res = (fmid - y).abs();
            if res < best_res {
                best_res = res;
                best = mid;
            }
            if res <= tol {
                return Ok(mid);
            }
            let go_right = if increasing { fmid < y } else { fmid > y };
            if go_right {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        // endpoints may already satisfy the tolerance (e.g. exact hits)
        for x in [lo, hi] {
            let res = (self.forward.eval(x)? - y).abs();
            if res < best_res {
                best_res = res;
                best = x;
            }
        }
        if best_res <= tol {
            Ok(best)
        } else {
            Err(FuncError::ToleranceNotMet { y, residual: best_res })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exprlang::parse;
    use crate::funcspace::Tail;

    #[test]
    fn affine_closed_form() {
        let inv = NumericInverse::new(&parse("2*x").unwrap());
        assert!(inv.is_affine());
        assert_eq!(inv.invert(6.0).unwrap(), 3.0);
        let inv = NumericInverse::new(&parse("x + 0.5").unwrap());
        assert_eq!(inv.invert(0.0).unwrap(), -0.5);
    }

    #[test]
    fn cube_root_by_bisection() {
        let inv = NumericInverse::new(&parse("x^3").unwrap()).with_bracket(-2.0, 2.0);
        let x = inv.invert(8.0).unwrap();
        assert!((x - 2.0).abs() <= 1e-9, "x = {x}");
        let x = inv.invert(0.729).unwrap();
        assert!((x - 0.9).abs() <= 1e-9, "x = {x}");
    }

    #[test]
    fn bounded_forward_is_not_surjective() {
        let inv = NumericInverse::new(&parse("atan(x)").unwrap());
        assert!(matches!(inv.invert(2.0), Err(FuncError::NotSurjective { .. })));
    }

    #[test]
    fn monotonicity_violation_detected() {
        let inv = NumericInverse::new(&parse("sin(x)").unwrap()).with_bracket(-6.0, 6.0);
        assert!(matches!(inv.invert(0.5), Err(FuncError::MonotonicityViolated { .. })));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let fwd = parse("x^3 + x").unwrap();
        let inv = NumericInverse::new(&fwd);
        let mut state: u64 = 12345;
        for _ in 0..100 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let u = (state >> 11) as f64 / (1u64 << 53) as f64;
            let x = -5.0 + 10.0 * u;
            let y = fwd.eval(x).unwrap();
            let back = inv.invert(y).unwrap();
            // residual tolerance implies |back - x| <= 2 tol / min slope, slope >= 1
            assert!(
                (fwd.eval(back).unwrap() - y).abs() <= 2.0 * 1e-12 * 1.0f64.max(y.abs()),
                "x={x}"
            );
        }
    }

    #[test]
    fn guessed_expansion_finds_far_preimages() {
        let fwd = parse("2*x + sin(x)").unwrap();
        // defeat the affine fast path? 2*x + sin(x) is not affine, good.
        let inv = NumericInverse::new(&fwd);
        let y = 2000.0;
        let x = inv.invert_near(y, y / 2.0).unwrap();
        assert!((fwd.eval(x).unwrap() - y).abs() <= 1e-12 * y.abs() * 2.0);
    }

    #[test]
    fn sampled_forward_inverts_inside_range() {
        let s = SampledFunction::sample(0.0, 2.0, 65, Tail::Constant, |x| {
            Ok::<_, FuncError>(x * x)
        })
        .unwrap();
        let inv = NumericInverse::for_sampled(&s).with_bracket(0.0, 2.0);
        let x = inv.invert(2.25).unwrap();
        assert!((s.eval(x) - 2.25).abs() <= 1e-10);
    }
}
