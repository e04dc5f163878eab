use rug::float::Constant;
use rug::Float;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, exact for polynomials of
/// degree `2 * order - 1`.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    pub nodes: Vec<Float>,
    pub weights: Vec<Float>,
}

impl GaussLegendre {
    pub fn new(order: usize, prec: u32) -> Self {
        assert!(order >= 1, "quadrature order must be positive");
        let work = prec + 32;
        let tol = Float::with_val(work, Float::i_exp(1, -(prec as i32) - 8));
        let pi = Float::with_val(work, Constant::Pi);
        let mut nodes = vec![Float::new(prec); order];
        let mut weights = vec![Float::new(prec); order];
        let half = order.div_ceil(2);
        for i in 0..half {
            // Tricomi's initial guess for the i-th largest root.
            let guess = (Float::with_val(work, &pi * (i as f64 + 0.75)) / (order as f64 + 0.5)).cos();
            let mut x = guess;
            let mut dp = Float::new(work);
            for _ in 0..200 {
                let (p, d) = legendre_with_derivative(order, &x);
                let dx = Float::with_val(work, &p / &d);
                x -= &dx;
                dp = d;
                if dx.abs() <= tol {
                    let (_, d) = legendre_with_derivative(order, &x);
                    dp = d;
                    break;
                }
            }
            let one_minus = Float::with_val(work, 1u32 - Float::with_val(work, &x * &x));
            let w = Float::with_val(work, 2u32 / (one_minus * Float::with_val(work, &dp * &dp)));
            let (lo, hi) = (i, order - 1 - i);
            nodes[hi] = Float::with_val(prec, &x);
            nodes[lo] = Float::with_val(prec, -&x);
            weights[hi] = Float::with_val(prec, &w);
            weights[lo] = Float::with_val(prec, &w);
        }
        if order % 2 == 1 {
            nodes[order / 2] = Float::new(prec);
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Nodes and weights mapped to `[0, 1]`.
    pub fn unit_interval(&self) -> (Vec<Float>, Vec<Float>) {
        let nodes = self
            .nodes
            .iter()
            .map(|x| Float::with_val(x.prec(), x + 1u32) / 2u32)
            .collect();
        let weights = self
            .weights
            .iter()
            .map(|w| Float::with_val(w.prec(), w / 2u32))
            .collect();
        (nodes, weights)
    }
}

fn legendre_with_derivative(order: usize, x: &Float) -> (Float, Float) {
    let prec = x.prec();
    let mut p0 = Float::with_val(prec, 1);
    let mut p1 = x.clone();
    for k in 2..=order {
        let k = k as u32;
        // k P_k = (2k-1) x P_{k-1} - (k-1) P_{k-2}
        let mut next = Float::with_val(prec, x * &p1);
        next *= 2 * k - 1;
        next -= Float::with_val(prec, &p0 * (k - 1));
        next /= k;
        p0 = std::mem::replace(&mut p1, next);
    }
    let (p, pm1) = if order == 0 {
        (Float::with_val(prec, 1), Float::new(prec))
    } else {
        (p1, p0)
    };
    // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
    let num = Float::with_val(prec, x * &p - &pm1) * order as u32;
    let den = Float::with_val(prec, x * x) - 1u32;
    (p, num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    #[test]
    fn weights_sum_to_two_and_rule_is_exact() {
        for order in [1usize, 2, 5, 16, 33] {
            let rule = GaussLegendre::new(order, 256);
            let total: Float = rule.weights.iter().fold(Float::new(256), |acc, w| acc + w);
            assert!(Float::with_val(256, total - 2u32).abs() < Float::with_val(256, 1e-70));
            // ∫ x^(2order-2) over [-1,1] = 2 / (2order-1)
            let deg = (2 * order - 2) as u32;
            let mut s = Float::new(256);
            for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                s += Float::with_val(256, x.pow(deg)) * w;
            }
            let exact = Float::with_val(256, 2u32) / (2 * order as u32 - 1);
            assert!(Float::with_val(256, s - exact).abs() < Float::with_val(256, 1e-70));
        }
    }
}
