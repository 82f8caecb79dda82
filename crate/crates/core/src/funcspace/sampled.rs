use super::FuncError;

/// Extension policy outside the sampled window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tail {
    /// Hold the endpoint values.
    Constant,
    /// Continue from the endpoints with the given slope.
    Linear { slope: f64 },
}

/// A real function represented by values on a strictly increasing node grid,
/// evaluated by linear interpolation inside the window and by the tail
/// policy outside.
///
/// With a constant tail the function is bounded by `max |v_i|`; with a
/// linear tail of slope `kappa` the deviation `eval(x) - kappa*x` is bounded
/// over all of R.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    nodes: Vec<f64>,
    values: Vec<f64>,
    tail: Tail,
}

impl SampledFunction {
    pub fn new(nodes: Vec<f64>, values: Vec<f64>, tail: Tail) -> Result<Self, FuncError> {
        if nodes.len() < 2 {
            return Err(FuncError::TooFewNodes(nodes.len()));
        }
        if nodes.len() != values.len() {
            return Err(FuncError::LengthMismatch { nodes: nodes.len(), values: values.len() });
        }
        for i in 0..nodes.len() {
            if !nodes[i].is_finite() || (i > 0 && nodes[i] <= nodes[i - 1]) {
                return Err(FuncError::NodesNotIncreasing { index: i, value: nodes[i] });
            }
            if !values[i].is_finite() {
                return Err(FuncError::NonFiniteSample { x: nodes[i], value: values[i] });
            }
        }
        Ok(SampledFunction { nodes, values, tail })
    }

    /// Uniform grid of `n` nodes over `[lo, hi]` filled from `f`.
    ///
    /// Node `i` is computed as `(lo*(n-1-i) + hi*i)/(n-1)`, which hits both
    /// endpoints exactly and the centre of a symmetric window exactly.
    pub fn sample<E>(
        lo: f64,
        hi: f64,
        n: usize,
        tail: Tail,
        mut f: impl FnMut(f64) -> Result<f64, E>,
    ) -> Result<Self, FuncError>
    where
        FuncError: From<E>,
    {
        if !(lo < hi) {
            return Err(FuncError::BadWindow { lo, hi });
        }
        if n < 2 {
            return Err(FuncError::BadSampleCount(n));
        }
        let nodes = uniform_grid(lo, hi, n);
        let mut values = Vec::with_capacity(n);
        for &x in &nodes {
            values.push(f(x)?);
        }
        SampledFunction::new(nodes, values, tail)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn window(&self) -> (f64, f64) {
        (self.nodes[0], *self.nodes.last().unwrap())
    }

    /// Replaces the tail policy, keeping nodes and values.
    pub fn with_tail(mut self, tail: Tail) -> Self {
        self.tail = tail;
        self
    }

    /// Evaluates by linear interpolation inside the window, tail policy
    /// outside. Total on finite inputs.
    pub fn eval(&self, x: f64) -> f64 {
        let first = self.nodes[0];
        let last = *self.nodes.last().unwrap();
        if x <= first {
            return match self.tail {
                Tail::Constant => self.values[0],
                Tail::Linear { slope } => self.values[0] + slope * (x - first),
            };
        }
        if x >= last {
            let vn = *self.values.last().unwrap();
            return match self.tail {
                Tail::Constant => vn,
                Tail::Linear { slope } => vn + slope * (x - last),
            };
        }
        // first index with node > x; x is strictly inside the window here
        let idx = self.nodes.partition_point(|&n| n <= x);
        let i = idx - 1;
        let (x0, x1) = (self.nodes[i], self.nodes[i + 1]);
        let (v0, v1) = (self.values[i], self.values[i + 1]);
        v0 + (x - x0) * (v1 - v0) / (x1 - x0)
    }

    /// Largest absolute segment slope; equals the Lipschitz constant of the
    /// interpolant inside the window.
    pub fn max_segment_slope(&self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..self.nodes.len() - 1 {
            let s = (self.values[i + 1] - self.values[i]) / (self.nodes[i + 1] - self.nodes[i]);
            m = m.max(s.abs());
        }
        m
    }

    /// Max over nodes of `|v_i|`; for a constant tail this is the sup norm.
    pub fn max_abs_value(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Max over nodes of `|v_i - slope*x_i|`, the bounded deviation from the
    /// reference line of a linear-tail representation.
    pub fn max_deviation_from_line(&self, slope: f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.values)
            .fold(0.0f64, |m, (&x, &v)| m.max((v - slope * x).abs()))
    }

    /// Restricts to `[a, b]` (which must intersect the window), producing a
    /// new sampled function whose first and last nodes are exactly `a`, `b`.
    pub fn restrict(&self, a: f64, b: f64) -> Result<SampledFunction, FuncError> {
        if !(a < b) {
            return Err(FuncError::BadWindow { lo: a, hi: b });
        }
        let mut nodes = vec![a];
        let mut values = vec![self.eval(a)];
        for (&x, &v) in self.nodes.iter().zip(&self.values) {
            if x > a && x < b {
                nodes.push(x);
                values.push(v);
            }
        }
        nodes.push(b);
        values.push(self.eval(b));
        SampledFunction::new(nodes, values, Tail::Constant)
    }
}

/// Uniform grid hitting both endpoints and the centre of symmetric windows
/// exactly.
pub(crate) fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let m = (n - 1) as f64;
    (0..n).map(|i| (lo * (m - i as f64) + hi * i as f64) / m).collect()
}

/// Sup distance `max |F - G|` over a probe grid refining both node sets plus
/// any extra probes.
///
/// For two piecewise-linear functions the sup over R is attained at a node
/// of the union grid, except in the tails: constant tails contribute the
/// endpoint difference (covered by the endpoint nodes), linear tails with
/// equal slopes contribute a constant difference (likewise covered), and
/// linear tails with different slopes make the distance infinite.
pub fn sup_distance(f: &SampledFunction, g: &SampledFunction, extra_probes: &[f64]) -> f64 {
    match (f.tail(), g.tail()) {
        (Tail::Linear { slope: a }, Tail::Linear { slope: b }) if a != b => {
            return f64::INFINITY;
        }
        (Tail::Constant, Tail::Linear { .. }) | (Tail::Linear { .. }, Tail::Constant) => {
            return f64::INFINITY;
        }
        _ => {}
    }
    let mut m: f64 = 0.0;
    for &x in f.nodes().iter().chain(g.nodes()).chain(extra_probes) {
        m = m.max((f.eval(x) - g.eval(x)).abs());
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_point() -> SampledFunction {
        SampledFunction::new(vec![0.0, 1.0], vec![0.0, 2.0], Tail::Constant).unwrap()
    }

    #[test]
    fn interpolates_linearly() {
        assert_eq!(two_point().eval(0.5), 1.0);
    }

    #[test]
    fn constant_tail_holds_endpoint() {
        assert_eq!(two_point().eval(5.0), 2.0);
        assert_eq!(two_point().eval(-3.0), 0.0);
    }

    #[test]
    fn linear_tail_extends_with_slope() {
        let f =
            SampledFunction::new(vec![0.0, 1.0], vec![0.0, 2.0], Tail::Linear { slope: 2.0 })
                .unwrap();
        assert_eq!(f.eval(3.0), 6.0);
        assert_eq!(f.eval(-1.0), -2.0);
    }

    #[test]
    fn eval_is_continuous_at_nodes() {
        let f = SampledFunction::new(
            vec![-1.0, 0.0, 2.0],
            vec![3.0, -1.0, 0.5],
            Tail::Constant,
        )
        .unwrap();
        for (i, &x) in f.nodes().iter().enumerate() {
            assert_eq!(f.eval(x), f.values()[i]);
            let eps = 1e-9;
            assert!((f.eval(x - eps) - f.values()[i]).abs() < 1e-8);
            assert!((f.eval(x + eps) - f.values()[i]).abs() < 1e-8);
        }
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(SampledFunction::new(vec![0.0], vec![1.0], Tail::Constant).is_err());
        assert!(SampledFunction::new(vec![0.0, 0.0], vec![1.0, 1.0], Tail::Constant).is_err());
        assert!(
            SampledFunction::new(vec![0.0, 1.0], vec![1.0, f64::NAN], Tail::Constant).is_err()
        );
    }

    #[test]
    fn sup_distance_identity_and_constants() {
        let f = two_point();
        assert_eq!(sup_distance(&f, &f, &[]), 0.0);
        let zero =
            SampledFunction::new(vec![0.0, 1.0], vec![0.0, 0.0], Tail::Constant).unwrap();
        let one = SampledFunction::new(vec![0.0, 1.0], vec![1.0, 1.0], Tail::Constant).unwrap();
        assert_eq!(sup_distance(&zero, &one, &[]), 1.0);
    }

    #[test]
    fn sup_distance_dense_sine() {
        // F(x) = x vs G(x) = x + sin x on a dense grid: distance ~ max |sin|
        let pi = std::f64::consts::PI;
        let f = SampledFunction::sample(-pi, pi, 2001, Tail::Constant, |x| {
            Ok::<_, FuncError>(x)
        })
        .unwrap();
        let g = SampledFunction::sample(-pi, pi, 2001, Tail::Constant, |x| {
            Ok::<_, FuncError>(x + x.sin())
        })
        .unwrap();
        let d = sup_distance(&f, &g, &[]);
        // independent oracle: max of |sin| over the same dense grid
        let oracle = f
            .nodes()
            .iter()
            .fold(0.0f64, |m, &x| m.max(x.sin().abs()));
        assert!((d - oracle).abs() <= 1e-12);
        assert!((d - 1.0).abs() <= 1e-3);
    }

    #[test]
    fn sup_distance_is_symmetric_and_triangular() {
        let mk = |vals: Vec<f64>| {
            SampledFunction::new(vec![0.0, 0.5, 1.0], vals, Tail::Constant).unwrap()
        };
        let fs = [
            mk(vec![0.0, 1.0, -1.0]),
            mk(vec![2.0, 2.0, 2.0]),
            mk(vec![-0.5, 0.25, 0.75]),
        ];
        for a in &fs {
            for b in &fs {
                assert_eq!(sup_distance(a, b, &[]), sup_distance(b, a, &[]));
                for c in &fs {
                    assert!(
                        sup_distance(a, c, &[])
                            <= sup_distance(a, b, &[]) + sup_distance(b, c, &[]) + 1e-15
                    );
                }
            }
        }
    }

    #[test]
    fn mismatched_linear_tails_are_infinitely_far() {
        let f = SampledFunction::new(vec![0.0, 1.0], vec![0.0, 1.0], Tail::Linear { slope: 1.0 })
            .unwrap();
        let g = SampledFunction::new(vec![0.0, 1.0], vec![0.0, 1.0], Tail::Linear { slope: 2.0 })
            .unwrap();
        assert!(sup_distance(&f, &g, &[]).is_infinite());
    }

    #[test]
    fn restrict_pins_interval_endpoints() {
        let f = SampledFunction::sample(-2.0, 2.0, 41, Tail::Constant, |x| {
            Ok::<_, FuncError>(x * x)
        })
        .unwrap();
        let r = f.restrict(-1.0, 1.0).unwrap();
        assert_eq!(r.window(), (-1.0, 1.0));
        assert_eq!(r.eval(-1.0), f.eval(-1.0));
        assert_eq!(r.eval(0.35), f.eval(0.35));
    }

    #[test]
    fn uniform_grid_hits_centre_of_symmetric_window() {
        let g = uniform_grid(-20.0, 20.0, 4001);
        assert_eq!(g[2000], 0.0);
        assert_eq!(g[0], -20.0);
        assert_eq!(g[4000], 20.0);
    }
}
