//! Eigenvalues of complex upper Hessenberg matrices by single-shift QR.

use rug::Float;

use crate::error::{Error, Result};
use crate::numerics::{Complex, PrecisionContext};

/// Eigenvalues of the square upper Hessenberg matrix `h` (row-major).
///
/// Deflation happens on negligible subdiagonal entries and on exactly zero
/// trailing columns, so exactly nilpotent sections return exact zeros.
pub fn hessenberg_section_eigen(h: &[Vec<Complex>], ctx: &PrecisionContext) -> Result<Vec<Complex>> {
    let n = h.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let bits = ctx.bits();
    for (i, row) in h.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotHessenberg(format!("row {i} has length {} != {n}", row.len())));
        }
        if let Some(j) = (0..i.saturating_sub(1)).find(|&j| !row[j].is_zero()) {
            return Err(Error::NotHessenberg(format!("nonzero entry at ({i}, {j})")));
        }
    }
    let mut a: Vec<Vec<Complex>> = h
        .iter()
        .map(|row| row.iter().map(|c| c.with_prec(bits)).collect())
        .collect();

    let eps = Float::with_val(bits, Float::i_exp(1, -(bits as i32) + 2));
    let mut frob = Float::new(bits);
    for row in &a {
        for c in row {
            frob += c.norm_sqr();
        }
    }
    let frob = frob.sqrt();
    let floor = Float::with_val(bits, &eps * &frob);

    let mut eig = vec![Complex::zero(bits); n];
    let mut hi = n as isize - 1;
    let mut since_deflation = 0usize;
    let mut total = 0usize;
    let cap = ctx.max_sweeps().max(30) * n;

    while hi >= 0 {
        let h_idx = hi as usize;
        if h_idx == 0 {
            eig[0] = a[0][0].clone();
            break;
        }
        let mut lo = 0usize;
        for k in (1..=h_idx).rev() {
            let sub = a[k][k - 1].abs();
            let mut scale = Float::with_val(bits, a[k][k].abs() + a[k - 1][k - 1].abs());
            scale *= &eps;
            if sub <= scale || sub <= floor {
                a[k][k - 1] = Complex::zero(bits);
                lo = k;
                break;
            }
        }
        if lo == h_idx {
            eig[h_idx] = a[h_idx][h_idx].clone();
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        if (lo..=h_idx).all(|i| a[i][h_idx].is_zero()) {
            eig[h_idx] = Complex::zero(bits);
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        if h_idx - lo == 1 {
            let (l1, l2) = eig2(&a[lo][lo], &a[lo][h_idx], &a[h_idx][lo], &a[h_idx][h_idx]);
            eig[lo] = l1;
            eig[h_idx] = l2;
            hi -= 2;
            since_deflation = 0;
            continue;
        }

        total += 1;
        since_deflation += 1;
        if total > cap {
            return Err(Error::NonConvergence {
                iterations: total,
                worst: a[h_idx][h_idx - 1].abs().to_f64(),
            });
        }
        let shift = if since_deflation % 11 == 10 {
            // exceptional shift
            let mut s = a[h_idx][h_idx].clone();
            let bump = Float::with_val(bits, a[h_idx][h_idx - 1].abs() * 0.75);
            s.re += &bump;
            s
        } else {
            wilkinson(
                &a[h_idx - 1][h_idx - 1],
                &a[h_idx - 1][h_idx],
                &a[h_idx][h_idx - 1],
                &a[h_idx][h_idx],
            )
        };
        qr_step(&mut a, lo, h_idx, &shift);
    }
    Ok(eig)
}

fn eig2(a: &Complex, b: &Complex, c: &Complex, d: &Complex) -> (Complex, Complex) {
    let bits = a.prec();
    let half = Float::with_val(bits, 0.5);
    let mean = (a + d).scale(&half);
    let hd = (a - d).scale(&half);
    let disc = (&(&hd * &hd) + &(b * c)).sqrt();
    (&mean + &disc, &mean - &disc)
}

/// Eigenvalue of the trailing 2×2 block closest to its last diagonal entry.
fn wilkinson(a: &Complex, b: &Complex, c: &Complex, d: &Complex) -> Complex {
    let (l1, l2) = eig2(a, b, c, d);
    if (&l1 - d).abs() <= (&l2 - d).abs() {
        l1
    } else {
        l2
    }
}

fn qr_step(a: &mut [Vec<Complex>], lo: usize, hi: usize, shift: &Complex) {
    let bits = shift.prec();
    for k in lo..=hi {
        a[k][k] -= shift;
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let x = a[k][k].clone();
        let y = a[k + 1][k].clone();
        let r = Float::with_val(bits, x.norm_sqr() + y.norm_sqr()).sqrt();
        let (c, s) = if r.is_zero() {
            (Complex::one(bits), Complex::zero(bits))
        } else {
            (x.unscale(&r), y.unscale(&r))
        };
        let (cc, sc) = (c.conj(), s.conj());
        for j in k..=hi {
            let u = a[k][j].clone();
            let v = a[k + 1][j].clone();
            let mut top = &cc * &u;
            top.add_mul(&sc, &v);
            let mut bottom = &c * &v;
            bottom.sub_mul(&s, &u);
            a[k][j] = top;
            a[k + 1][j] = bottom;
        }
        a[k + 1][k] = Complex::zero(bits);
        rotations.push((c, s));
    }
    for (offset, (c, s)) in rotations.iter().enumerate() {
        let k = lo + offset;
        let sc = s.conj();
        let cc = c.conj();
        for i in lo..=(k + 1).min(hi) {
            let u = a[i][k].clone();
            let v = a[i][k + 1].clone();
            let mut left = &u * c;
            left.add_mul(&v, s);
            let mut right = &v * &cc;
            right.sub_mul(&u, &sc);
            a[i][k] = left;
            a[i][k + 1] = right;
        }
    }
    for k in lo..=hi {
        a[k][k] += shift;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(212).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex {
        Complex::from_f64(212, re, im)
    }

    #[test]
    fn one_by_one() {
        let e = hessenberg_section_eigen(&[vec![c(0.3, -2.0)]], &ctx()).unwrap();
        assert_eq!(e, vec![c(0.3, -2.0)]);
    }

    #[test]
    fn nilpotent_sections_give_exact_zeros() {
        let s = Float::with_val(212, 0.5).sqrt();
        let h = vec![vec![c(0.0, 0.0), c(0.0, 0.0)], vec![Complex::from_real(s), c(0.0, 0.0)]];
        let e = hessenberg_section_eigen(&h, &ctx()).unwrap();
        assert!(e.iter().all(Complex::is_zero));

        let n = 12;
        let mut shift = vec![vec![c(0.0, 0.0); n]; n];
        for k in 1..n {
            shift[k][k - 1] = c(1.0, 0.0);
        }
        let e = hessenberg_section_eigen(&shift, &ctx()).unwrap();
        assert_eq!(e.len(), n);
        assert!(e.iter().all(Complex::is_zero));
    }

    #[test]
    fn companion_matrix_of_cubic() {
        // (z-1)(z-2)(z+3) = z^3 - 7z + 6, companion in Hessenberg form.
        let h = vec![
            vec![c(0.0, 0.0), c(0.0, 0.0), c(-6.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0), c(7.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        ];
        let mut e: Vec<f64> = hessenberg_section_eigen(&h, &ctx())
            .unwrap()
            .iter()
            .map(|z| {
                assert!(z.im.to_f64().abs() < 1e-50);
                z.re.to_f64()
            })
            .collect();
        e.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in e.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((got - want).abs() < 1e-50);
        }
    }

    #[test]
    fn rejects_non_hessenberg() {
        let h = vec![
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        ];
        assert!(matches!(
            hessenberg_section_eigen(&h, &ctx()),
            Err(Error::NotHessenberg(_))
        ));
    }
}
