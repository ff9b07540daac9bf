//! Growth-rate fit for benchmark node counts.

use crate::error::ParamError;

/// Least-squares slope of `log₂(nodes)` against `n`.
///
/// Needs at least three distinct values of `n` and positive node counts.
pub fn bench_fit(points: &[(usize, u64)]) -> Result<f64, ParamError> {
    let mut sizes: Vec<usize> = points.iter().map(|p| p.0).collect();
    sizes.sort_unstable();
    sizes.dedup();
    if sizes.len() < 3 {
        return Err(ParamError::TooFewPoints(sizes.len()));
    }
    if points.iter().any(|p| p.1 == 0) {
        return Err(ParamError::NonPositiveNodes);
    }
    let k = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0 as f64).collect();
    let ys: Vec<f64> = points.iter().map(|p| (p.1 as f64).log2()).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_exponential() {
        let c = 3.0f64;
        let pts: Vec<(usize, u64)> = [10usize, 20, 30]
            .iter()
            .map(|&n| (n, (c * 2f64.powf(0.424 * n as f64) * 1e6).round() as u64))
            .collect();
        assert!((bench_fit(&pts).unwrap() - 0.424).abs() < 1e-6);
    }

    #[test]
    fn constant_counts() {
        assert_eq!(bench_fit(&[(1, 5), (2, 5), (3, 5)]).unwrap(), 0.0);
    }

    #[test]
    fn rejections() {
        assert_eq!(
            bench_fit(&[(1, 5), (2, 5)]),
            Err(ParamError::TooFewPoints(2))
        );
        assert_eq!(
            bench_fit(&[(1, 5), (1, 6), (2, 5)]),
            Err(ParamError::TooFewPoints(2))
        );
        assert_eq!(
            bench_fit(&[(1, 5), (2, 0), (3, 5)]),
            Err(ParamError::NonPositiveNodes)
        );
    }
}
