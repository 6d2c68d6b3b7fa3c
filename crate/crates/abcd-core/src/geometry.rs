//! Small vector helpers shared by the landscape and the optimizers.

use rand::Rng;
use rand_distr::StandardNormal;

pub fn euclidean_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

pub fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Uniformly random direction on the unit sphere.
pub fn sample_unit_vector<R: Rng + ?Sized>(rng: &mut R, dims: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dims).map(|_| rng.sample(StandardNormal)).collect();
        let n = norm(&v);
        if n > 1e-9 {
            return v.into_iter().map(|x| x / n).collect();
        }
    }
}

/// Uniform draw from the closed ball of the given radius around `center`.
pub fn sample_in_ball<R: Rng + ?Sized>(center: &[f64], radius: f64, rng: &mut R) -> Vec<f64> {
    let dims = center.len();
    let dir = sample_unit_vector(rng, dims);
    let u: f64 = rng.random();
    let r = radius * u.powf(1.0 / dims as f64);
    center.iter().zip(&dir).map(|(c, d)| c + r * d).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream_rng, STREAM_ALGORITHM};

    #[test]
    fn distance_matches_hand_value() {
        assert_eq!(euclidean_distance(&[0.0, 0.0], &[3.0, 4.0]), 5.0);
        assert_eq!(euclidean_distance(&[1.0], &[1.0]), 0.0);
    }

    #[test]
    fn unit_vectors_have_unit_norm() {
        let mut rng = stream_rng(7, STREAM_ALGORITHM);
        for dims in [1, 2, 5, 10] {
            let v = sample_unit_vector(&mut rng, dims);
            assert!((norm(&v) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn ball_draws_stay_inside() {
        let mut rng = stream_rng(8, STREAM_ALGORITHM);
        let center = vec![10.0, -3.0, 0.5];
        for _ in 0..1000 {
            let p = sample_in_ball(&center, 2.5, &mut rng);
            assert!(euclidean_distance(&p, &center) <= 2.5 + 1e-12);
        }
    }
}
