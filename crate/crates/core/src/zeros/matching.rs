/// Minimum-cost perfect matching on a square cost matrix (Hungarian method
/// with potentials). Returns `assign[i]` = column matched to row `i`.
pub fn min_cost_assignment(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    if n == 0 {
        return Vec::new();
    }
    // 1-based arrays; column 0 is a sentinel.
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0; n];
    for j in 1..=n {
        assign[p[j] - 1] = j - 1;
    }
    assign
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_recovered() {
        let xs: [f64; 4] = [0.0, 1.0, 5.0, 2.5];
        let ys: [f64; 4] = [2.5 + 1e-9, 5.0, 0.0, 1.0 - 1e-9];
        let cost: Vec<Vec<f64>> = xs.iter().map(|x| ys.iter().map(|y| (x - y).abs()).collect()).collect();
        assert_eq!(min_cost_assignment(&cost), vec![2, 3, 1, 0]);
    }

    #[test]
    fn beats_greedy() {
        let cost = vec![vec![1.0, 2.0], vec![1.0, 10.0]];
        assert_eq!(min_cost_assignment(&cost), vec![1, 0]);
    }
}
