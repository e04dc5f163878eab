use rug::Float;

use crate::error::{Error, Result};
use crate::numerics::Complex;

/// Solve `A x = b` for Hermitian positive definite `A` via Cholesky
/// (`A = L L^H`). Fails with `SingularGram` at the first non-positive pivot.
pub fn hermitian_solve(a: &[Vec<Complex>], b: &[Complex]) -> Result<Vec<Complex>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length mismatch");
    if n == 0 {
        return Ok(Vec::new());
    }
    let prec = a[0][0].prec();
    let mut l: Vec<Vec<Complex>> = vec![Vec::new(); n];
    let mut diag: Vec<Float> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(i + 1);
        for j in 0..i {
            // L[i][j] = (A[i][j] - Σ_k L[i][k] conj(L[j][k])) / L[j][j]
            let mut s = a[i][j].clone();
            for k in 0..j {
                s.sub_mul(&row[k], &l[j][k].conj());
            }
            row.push(s.unscale(&diag[j]));
        }
        let mut d = a[i][i].re.clone();
        for entry in &row {
            d -= entry.norm_sqr();
        }
        if d <= 0 || !d.is_finite() {
            return Err(Error::SingularGram { pivot: i, size: n });
        }
        let d = d.sqrt();
        row.push(Complex::from_real(d.clone()));
        diag.push(d);
        l[i] = row;
    }
    // forward: L y = b
    let mut y: Vec<Complex> = Vec::with_capacity(n);
    for i in 0..n {
        let mut s = b[i].with_prec(prec);
        for k in 0..i {
            s.sub_mul(&l[i][k], &y[k]);
        }
        y.push(s.unscale(&diag[i]));
    }
    // backward: L^H x = y
    let mut x = vec![Complex::zero(prec); n];
    for i in (0..n).rev() {
        let mut s = y[i].clone();
        for k in i + 1..n {
            s.sub_mul(&l[k][i].conj(), &x[k]);
        }
        x[i] = s.unscale(&diag[i]);
    }
    Ok(x)
}
