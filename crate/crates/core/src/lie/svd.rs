//! Singular values of a short, wide matrix by one-sided Jacobi rotations.

use crate::scalar::Real;

const MAX_SWEEPS: usize = 80;

/// Singular values of the matrix whose rows are `rows`, in descending order.
///
/// Rows are rotated pairwise until mutually orthogonal; their final norms
/// are the singular values. Accurate to roughly `ε·σ₁`, which is what a
/// relative rank threshold needs.
pub fn singular_values<T: Real>(rows: &[Vec<T>]) -> Vec<T> {
    let mut v: Vec<Vec<T>> = rows.to_vec();
    let n = v.len();
    let tol = T::epsilon() * T::lit(rows.first().map_or(1, |r| r.len()) as f64).sqrt();
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (head, tail) = v.split_at_mut(q);
                let (a, b) = (&mut head[p], &mut tail[0]);
                let alpha = dot(a, a);
                let beta = dot(b, b);
                let gamma = dot(a, b);
                if alpha == T::zero() || beta == T::zero() || gamma.abs() <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (T::two() * gamma);
                let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                for (x, y) in a.iter_mut().zip(b.iter_mut()) {
                    let (xa, yb) = (*x, *y);
                    *x = c * xa - s * yb;
                    *y = s * xa + c * yb;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<T> = v.iter().map(|r| dot(r, r).sqrt()).collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    sv
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_matrix() {
        let rows = vec![vec![3.0, 0.0, 0.0], vec![0.0, -5.0, 0.0]];
        assert_eq!(singular_values(&rows), vec![5.0, 3.0]);
    }

    #[test]
    fn two_by_two() {
        // [[1,1],[0,1]] has singular values φ and 1/φ
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let sv = singular_values(&[vec![1.0, 1.0], vec![0.0, 1.0]]);
        assert!((sv[0] - phi).abs() < 1e-15);
        assert!((sv[1] - 1.0 / phi).abs() < 1e-15);
    }

    #[test]
    fn dependent_rows() {
        let rows = vec![
            vec![1.0, 2.0, 3.0, 4.0],
            vec![2.0, 4.0, 6.0, 8.0],
            vec![0.0, 1.0, 0.0, 1.0],
            vec![1.0, 3.0, 3.0, 5.0],
        ];
        let sv = singular_values(&rows);
        assert!(sv[1] > 0.1);
        assert!(sv[2] < 1e-14 * sv[0]);
        assert!(sv[3] < 1e-14 * sv[0]);
    }

    #[test]
    fn frobenius_norm_is_preserved() {
        let rows: Vec<Vec<f64>> = (0..6)
            .map(|i| (0..10).map(|j| ((i * 7 + j * 3) % 11) as f64 - 5.0).collect())
            .collect();
        let fro: f64 = rows.iter().flatten().map(|x| x * x).sum();
        let sv = singular_values(&rows);
        let sum: f64 = sv.iter().map(|s| s * s).sum();
        assert!((fro - sum).abs() < 1e-12 * fro);
    }
}
