//! Raw matrix kernels shared by forward and backward passes.
//!
//! Output rows are independent, so row-level parallelism leaves every
//! floating-point reduction in its sequential order and results are
//! bit-identical for any thread count.

use crate::parallel;

/// Work threshold below which the sequential path is always used.
const PAR_FLOP_CUTOFF: usize = 1 << 15;

/// C = A(m x k) * B(k x n).
pub fn matmul_nn(a: &[f64], b: &[f64], m: usize, k: usize, n: usize) -> Vec<f64> {
    let mut c = vec![0.0; m * n];
    if m * k * n >= PAR_FLOP_CUTOFF {
        parallel::for_each_chunk_mut(&mut c, n, |i, row| {
            matmul_nn_row(a, b, k, n, i, row);
        });
    } else {
        for i in 0..m {
            matmul_nn_row(a, b, k, n, i, &mut c[i * n..(i + 1) * n]);
        }
    }
    c
}

#[inline]
fn matmul_nn_row(a: &[f64], b: &[f64], k: usize, n: usize, i: usize, row: &mut [f64]) {
    for p in 0..k {
        let aip = a[i * k + p];
        if aip == 0.0 {
            continue;
        }
        let brow = &b[p * n..p * n + n];
        for (cj, bj) in row.iter_mut().zip(brow) {
            *cj += aip * bj;
        }
    }
}

/// C = A(m x n) * B(k x n)^T, giving an (m x k) result.
pub fn matmul_nt(a: &[f64], b: &[f64], m: usize, n: usize, k: usize) -> Vec<f64> {
    let mut c = vec![0.0; m * k];
    if m * n * k >= PAR_FLOP_CUTOFF {
        parallel::for_each_chunk_mut(&mut c, k, |i, row| {
            matmul_nt_row(a, b, n, k, i, row);
        });
    } else {
        for i in 0..m {
            matmul_nt_row(a, b, n, k, i, &mut c[i * k..(i + 1) * k]);
        }
    }
    c
}

#[inline]
fn matmul_nt_row(a: &[f64], b: &[f64], n: usize, k: usize, i: usize, row: &mut [f64]) {
    let arow = &a[i * n..i * n + n];
    for (p, cp) in row.iter_mut().enumerate() {
        let brow = &b[p * n..p * n + n];
        let mut s = 0.0;
        for (x, y) in arow.iter().zip(brow) {
            s += x * y;
        }
        *cp = s;
    }
}

/// C = A(m x k)^T * B(m x n), giving a (k x n) result.
pub fn matmul_tn(a: &[f64], b: &[f64], m: usize, k: usize, n: usize) -> Vec<f64> {
    let mut c = vec![0.0; k * n];
    if m * k * n >= PAR_FLOP_CUTOFF {
        parallel::for_each_chunk_mut(&mut c, n, |p, row| {
            matmul_tn_row(a, b, m, k, n, p, row);
        });
    } else {
        for p in 0..k {
            matmul_tn_row(a, b, m, k, n, p, &mut c[p * n..(p + 1) * n]);
        }
    }
    c
}

#[inline]
fn matmul_tn_row(a: &[f64], b: &[f64], m: usize, k: usize, n: usize, p: usize, row: &mut [f64]) {
    for i in 0..m {
        let aip = a[i * k + p];
        if aip == 0.0 {
            continue;
        }
        let brow = &b[i * n..i * n + n];
        for (cj, bj) in row.iter_mut().zip(brow) {
            *cj += aip * bj;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(a: &[f64], b: &[f64], m: usize, k: usize, n: usize) -> Vec<f64> {
        let mut c = vec![0.0; m * n];
        for i in 0..m {
            for j in 0..n {
                for p in 0..k {
                    c[i * n + j] += a[i * k + p] * b[p * n + j];
                }
            }
        }
        c
    }

    fn transpose(a: &[f64], m: usize, n: usize) -> Vec<f64> {
        let mut t = vec![0.0; m * n];
        for i in 0..m {
            for j in 0..n {
                t[j * m + i] = a[i * n + j];
            }
        }
        t
    }

    #[test]
    fn kernels_agree_with_naive() {
        let mut rng = crate::rng::Rng::new(5);
        for &(m, k, n) in &[(1, 1, 1), (3, 4, 5), (17, 9, 13), (64, 64, 64)] {
            let a: Vec<f64> = (0..m * k).map(|_| rng.normal()).collect();
            let b: Vec<f64> = (0..k * n).map(|_| rng.normal()).collect();
            let c = naive(&a, &b, m, k, n);
            assert_eq!(matmul_nn(&a, &b, m, k, n), c);

            // A * B^T via the nt kernel
            let bt = transpose(&b, k, n);
            let c_nt = matmul_nt(&a, &bt, m, k, n);
            assert_eq!(c_nt, c);

            // A^T * B via the tn kernel
            let at = transpose(&a, m, k);
            let c_tn = matmul_tn(&at, &b, k, m, n);
            for (x, y) in c_tn.iter().zip(&c) {
                assert!((x - y).abs() < 1e-12);
            }
        }
    }
}
