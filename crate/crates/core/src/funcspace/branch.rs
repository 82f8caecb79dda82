use super::FuncError;

/// Monotonicity direction of a branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// A continuous piecewise-linear curve on a closed interval, represented by
/// dense node/value arrays. Not necessarily monotone.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    nodes: Vec<f64>,
    values: Vec<f64>,
}

impl Segment {
    pub fn new(nodes: Vec<f64>, values: Vec<f64>) -> Result<Self, FuncError> {
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
        Ok(Segment { nodes, values })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.nodes[0], *self.nodes.last().unwrap())
    }

    pub fn first_value(&self) -> f64 {
        self.values[0]
    }

    pub fn last_value(&self) -> f64 {
        *self.values.last().unwrap()
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Pins an endpoint value exactly (used after an endpoint-identity check
    /// so branch chains stay continuous to the bit).
    pub(crate) fn pin_first_value(&mut self, v: f64) {
        self.values[0] = v;
    }

    pub(crate) fn pin_last_value(&mut self, v: f64) {
        *self.values.last_mut().unwrap() = v;
    }

    /// Linear interpolation; arguments outside the domain (numeric dust from
    /// upstream roundoff) are clamped to the nearest endpoint.
    pub fn eval(&self, x: f64) -> f64 {
        if x <= self.nodes[0] {
            return self.values[0];
        }
        if x >= *self.nodes.last().unwrap() {
            return *self.values.last().unwrap();
        }
        let idx = self.nodes.partition_point(|&n| n <= x);
        let i = idx - 1;
        let (x0, x1) = (self.nodes[i], self.nodes[i + 1]);
        let (v0, v1) = (self.values[i], self.values[i + 1]);
        v0 + (x - x0) * (v1 - v0) / (x1 - x0)
    }
}

/// A strictly monotone continuous map between two closed intervals with an
/// exact piecewise-linear inverse.
///
/// The inverse is found by bisecting the node array for the bracketing
/// segment and solving the linear segment equation, which is exact for the
/// piecewise-linear representation.
#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    seg: Segment,
    direction: Direction,
}

impl Branch {
    /// Validates strict monotonicity of the values and detects direction.
    pub fn new(nodes: Vec<f64>, values: Vec<f64>) -> Result<Self, FuncError> {
        let seg = Segment::new(nodes, values)?;
        let values = seg.values();
        if values.len() < 2 || values[1] == values[0] {
            return Err(FuncError::NotMonotone { index: 1 });
        }
        let increasing = values[1] > values[0];
        for i in 1..values.len() {
            let ok = if increasing { values[i] > values[i - 1] } else { values[i] < values[i - 1] };
            if !ok {
                return Err(FuncError::NotMonotone { index: i });
            }
        }
        let direction = if increasing { Direction::Increasing } else { Direction::Decreasing };
        Ok(Branch { seg, direction })
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn segment(&self) -> &Segment {
        &self.seg
    }

    pub fn nodes(&self) -> &[f64] {
        self.seg.nodes()
    }

    pub fn values(&self) -> &[f64] {
        self.seg.values()
    }

    pub fn domain(&self) -> (f64, f64) {
        self.seg.domain()
    }

    /// Codomain as an ordered interval `(min, max)`.
    pub fn codomain(&self) -> (f64, f64) {
        let (a, b) = (self.seg.first_value(), self.seg.last_value());
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.seg.eval(x)
    }

    pub(crate) fn segment_mut(&mut self) -> &mut Segment {
        &mut self.seg
    }

    /// Preimage of `y`; `y` outside the codomain (numeric dust) is clamped.
    pub fn invert(&self, y: f64) -> f64 {
        let values = self.seg.values();
        let nodes = self.seg.nodes();
        let n = values.len();
        // locate the bracketing segment by bisection on the monotone values
        let (mut lo, mut hi) = (0usize, n - 1);
        let increasing = self.direction == Direction::Increasing;
        let below = |i: usize| if increasing { values[i] <= y } else { values[i] >= y };
        if below(0) == below(n - 1) {
            // y is outside or at the far end of the codomain: clamp
            let at_start =
                if increasing { y <= values[0] } else { y >= values[0] };
            return if at_start { nodes[0] } else { nodes[n - 1] };
        }
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if below(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let (v0, v1) = (values[lo], values[hi]);
        if y == v0 {
            return nodes[lo];
        }
        if y == v1 {
            return nodes[hi];
        }
        nodes[lo] + (y - v0) * (nodes[hi] - nodes[lo]) / (v1 - v0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn affine_branch() -> Branch {
        // x -> (x+1)/4 on [-1, 0], dense grid
        let n = 129;
        let nodes: Vec<f64> = (0..n).map(|i| -1.0 + i as f64 / (n - 1) as f64).collect();
        let values: Vec<f64> = nodes.iter().map(|&x| (x + 1.0) / 4.0).collect();
        Branch::new(nodes, values).unwrap()
    }

    #[test]
    fn detects_direction_and_codomain() {
        let b = affine_branch();
        assert_eq!(b.direction(), Direction::Increasing);
        let (c, d) = b.codomain();
        assert_eq!((c, d), (0.0, 0.25));
    }

    #[test]
    fn inverse_is_exact_on_piecewise_linear() {
        let b = affine_branch();
        for k in 0..=100 {
            let x = -1.0 + k as f64 / 100.0;
            let y = b.eval(x);
            let back = b.invert(y);
            assert!((back - x).abs() <= 1e-15, "x={x}, back={back}");
        }
        // exact node hits return the node
        assert_eq!(b.invert(0.0), -1.0);
        assert_eq!(b.invert(0.25), 0.0);
    }

    #[test]
    fn decreasing_branch_inverts() {
        let nodes = vec![0.0, 1.0, 2.0];
        let values = vec![4.0, 1.0, 0.0];
        let b = Branch::new(nodes, values).unwrap();
        assert_eq!(b.direction(), Direction::Decreasing);
        assert!((b.invert(2.5) - 0.5).abs() < 1e-15);
        assert_eq!(b.invert(0.0), 2.0);
    }

    #[test]
    fn rejects_non_monotone_values() {
        let err = Branch::new(vec![0.0, 1.0, 2.0], vec![0.0, 1.0, 1.0]).unwrap_err();
        assert!(matches!(err, FuncError::NotMonotone { index: 2 }));
    }

    #[test]
    fn segment_clamps_numeric_dust() {
        let s = Segment::new(vec![0.0, 1.0], vec![2.0, 3.0]).unwrap();
        assert_eq!(s.eval(-1e-12), 2.0);
        assert_eq!(s.eval(1.0 + 1e-12), 3.0);
    }
}
