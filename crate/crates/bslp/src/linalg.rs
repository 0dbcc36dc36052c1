//! Dense matrix exponential via Padé approximation with scaling and squaring.
//!
//! Algorithm from Higham, "The Scaling and Squaring Method for the Matrix
//! Exponential Revisited": diagonal Padé approximants of orders 3/5/7/9
//! for small norms, order 13 with scaling and squaring otherwise.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// exp(A) for a square matrix.
pub fn expm(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    if a.nrows() != a.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "expm needs a square matrix, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let (u, v, squarings) = compute_uv(a);

    // Pade approximant is (V+U) / (V-U).
    let numer = &v + &u;
    let denom = &v - &u;
    let lu = denom.lu();
    let mut result = lu
        .solve(&numer)
        .ok_or_else(|| Error::numerical("Pade denominator is singular".to_string()))?;

    for _ in 0..squarings {
        result = &result * &result;
    }
    Ok(result)
}

fn one_norm(a: &DMatrix<f64>) -> f64 {
    let mut norm: f64 = 0.0;
    for j in 0..a.ncols() {
        let s: f64 = a.column(j).iter().map(|v| v.abs()).sum();
        norm = norm.max(s);
    }
    norm
}

fn compute_uv(a: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>, u32) {
    let norm = one_norm(a);
    if norm < 1.495_585_217_958_292e-2 {
        let (u, v) = pade3(a);
        (u, v, 0)
    } else if norm < 2.539_398_330_063_23e-1 {
        let (u, v) = pade5(a);
        (u, v, 0)
    } else if norm < 9.504_178_996_162_932e-1 {
        let (u, v) = pade7(a);
        (u, v, 0)
    } else if norm < 2.097_847_961_257_068 {
        let (u, v) = pade9(a);
        (u, v, 0)
    } else {
        const MAX_NORM: f64 = 5.371_920_351_148_152;
        let squarings = ((norm / MAX_NORM).log2().ceil() as i32).max(0) as u32;
        let scaled = a.map(|v| v * 2f64.powi(-(squarings as i32)));
        let (u, v) = pade13(&scaled);
        (u, v, squarings)
    }
}

fn pade3(a: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    const B: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
    let id = DMatrix::identity(a.nrows(), a.ncols());
    let a2 = a * a;
    let u = a * (&a2 * B[3] + &id * B[1]);
    let v = a2 * B[2] + id * B[0];
    (u, v)
}

fn pade5(a: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    const B: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
    let id = DMatrix::identity(a.nrows(), a.ncols());
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let u = a * (&a4 * B[5] + &a2 * B[3] + &id * B[1]);
    let v = a4 * B[4] + a2 * B[2] + id * B[0];
    (u, v)
}

fn pade7(a: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    const B: [f64; 8] = [
        17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0,
    ];
    let id = DMatrix::identity(a.nrows(), a.ncols());
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let u = a * (&a6 * B[7] + &a4 * B[5] + &a2 * B[3] + &id * B[1]);
    let v = a6 * B[6] + a4 * B[4] + a2 * B[2] + id * B[0];
    (u, v)
}

fn pade9(a: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    const B: [f64; 10] = [
        17643225600.0,
        8821612800.0,
        2075673600.0,
        302702400.0,
        30270240.0,
        2162160.0,
        110880.0,
        3960.0,
        90.0,
        1.0,
    ];
    let id = DMatrix::identity(a.nrows(), a.ncols());
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let a8 = &a6 * &a2;
    let u = a * (&a8 * B[9] + &a6 * B[7] + &a4 * B[5] + &a2 * B[3] + &id * B[1]);
    let v = a8 * B[8] + a6 * B[6] + a4 * B[4] + a2 * B[2] + id * B[0];
    (u, v)
}

fn pade13(a: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    let id = DMatrix::identity(a.nrows(), a.ncols());
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;

    let w = &a6 * B[13] + &a4 * B[11] + &a2 * B[9];
    let u = a * (&a6 * &w + &a6 * B[7] + &a4 * B[5] + &a2 * B[3] + &id * B[1]);

    let w2 = &a6 * B[12] + &a4 * B[10] + &a2 * B[8];
    let v = &a6 * w2 + a6 * B[6] + a4 * B[4] + a2 * B[2] + id * B[0];
    (u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn identity_for_zero_matrix() {
        let a = DMatrix::zeros(4, 4);
        let e = expm(&a).unwrap();
        assert_relative_eq!(e, DMatrix::identity(4, 4), epsilon = 1e-15);
    }

    #[test]
    fn diagonal_matrix() {
        let a = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, -2.0, 0.5]));
        let e = expm(&a).unwrap();
        assert_relative_eq!(e[(0, 0)], 1f64.exp(), epsilon = 1e-14);
        assert_relative_eq!(e[(1, 1)], (-2f64).exp(), epsilon = 1e-14);
        assert_relative_eq!(e[(2, 2)], 0.5f64.exp(), epsilon = 1e-14);
        assert!(e[(0, 1)].abs() < 1e-15);
    }

    #[test]
    fn nilpotent_2x2() {
        // exp([[0, x], [0, 0]]) = [[1, x], [0, 1]]
        let a = DMatrix::from_row_slice(2, 2, &[0.0, 3.25, 0.0, 0.0]);
        let e = expm(&a).unwrap();
        assert_relative_eq!(e[(0, 1)], 3.25, epsilon = 1e-14);
        assert_relative_eq!(e[(0, 0)], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn large_norm_uses_squaring() {
        // exp of a 1x1 is just the scalar exponential.
        let a = DMatrix::from_element(1, 1, 42.0);
        let e = expm(&a).unwrap();
        assert_relative_eq!(e[(0, 0)], 42f64.exp(), max_relative = 1e-13);
    }
}
