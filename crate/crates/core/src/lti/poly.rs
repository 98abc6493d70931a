//! Real-coefficient polynomials in ascending degree order.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::LtiError;

/// Relative trim tolerance: trailing coefficients with magnitude below
/// `COEFF_TRIM_REL * max|coeff|` are dropped. Prevents spurious degree
/// inflation after near-cancelling subtractions such as `D - gamma*N`.
pub const COEFF_TRIM_REL: f64 = 1e-12;

/// Absolute clustering radius used when grouping roots into multiplicities.
pub const ROOT_CLUSTER_RADIUS: f64 = 1e-7;

/// Real-coefficient polynomial. `coeffs[k]` multiplies `s^k`; the
/// representation is trimmed so the leading coefficient is nonzero, except
/// for the zero polynomial which is stored as `[0.0]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Build a polynomial from ascending-order coefficients, trimming
    /// near-zero trailing terms.
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut coeffs = coeffs;
        let max_abs = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if max_abs == 0.0 {
            return Self { coeffs: vec![0.0] };
        }
        let tol = COEFF_TRIM_REL * max_abs;
        while coeffs.len() > 1 && coeffs.last().map(|c| c.abs() <= tol) == Some(true) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    /// Monic polynomial with the given roots. The root set must be closed
    /// under conjugation; tiny imaginary residue from pairing is discarded.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut acc = vec![Complex64::new(1.0, 0.0)];
        for r in roots {
            let mut next = vec![Complex64::new(0.0, 0.0); acc.len() + 1];
            for (k, c) in acc.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            acc = next;
        }
        Self::new(acc.into_iter().map(|c| c.re).collect())
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 0.0
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().expect("polynomial is nonempty")
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, s: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * s + c;
        }
        acc
    }

    pub fn eval_real(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        if self.degree() == 0 {
            return Polynomial::new(vec![0.0]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, factor: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0.0; n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            out[k] += c;
        }
        Polynomial::new(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// All `deg` roots with multiplicity, via companion-matrix
    /// eigendecomposition. Conjugate symmetry is enforced by pairing
    /// eigenvalues across the real axis and averaging each pair.
    pub fn roots(&self) -> Result<Vec<Complex64>, LtiError> {
        let n = self.degree();
        if n == 0 {
            return Err(LtiError::NoRoots);
        }
        let lead = self.leading();
        // Companion matrix of the monic polynomial: subdiagonal ones,
        // last column -a_0..-a_{n-1}.
        let mut companion = DMatrix::<f64>::zeros(n, n);
        for k in 0..n - 1 {
            companion[(k + 1, k)] = 1.0;
        }
        for k in 0..n {
            companion[(k, n - 1)] = -self.coeffs[k] / lead;
        }
        let eigs = companion.complex_eigenvalues();
        let roots: Vec<Complex64> = eigs.iter().copied().collect();
        Ok(pair_conjugates(roots))
    }
}

/// Enforce closure under conjugation on a root set of a real polynomial.
/// Roots whose imaginary part cannot be matched with a conjugate partner
/// within the pairing tolerance are flattened onto the real axis.
fn pair_conjugates(mut roots: Vec<Complex64>) -> Vec<Complex64> {
    let scale = roots.iter().fold(1.0f64, |m, r| m.max(r.norm()));
    let tol = 1e-6 * scale;
    let mut out = Vec::with_capacity(roots.len());
    while let Some(r) = roots.pop() {
        if r.im.abs() <= tol {
            out.push(Complex64::new(r.re, 0.0));
            continue;
        }
        // Find the best conjugate partner.
        let mut best: Option<(usize, f64)> = None;
        for (k, cand) in roots.iter().enumerate() {
            let d = (cand - r.conj()).norm();
            if best.map(|(_, bd)| d < bd).unwrap_or(true) {
                best = Some((k, d));
            }
        }
        match best {
            Some((k, d)) if d <= tol => {
                let partner = roots.swap_remove(k);
                let re = 0.5 * (r.re + partner.re);
                let im = 0.5 * (r.im.abs() + partner.im.abs());
                out.push(Complex64::new(re, im.copysign(r.im)));
                out.push(Complex64::new(re, -im.copysign(r.im)));
            }
            _ => out.push(Complex64::new(r.re, 0.0)),
        }
    }
    out.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).expect("finite roots"));
    out
}

/// Cluster a root list into `(centroid, multiplicity)` groups using the
/// absolute radius [`ROOT_CLUSTER_RADIUS`].
pub(crate) fn cluster_roots(roots: &[Complex64]) -> Vec<(Complex64, usize)> {
    let mut remaining: Vec<Complex64> = roots.to_vec();
    let mut clusters = Vec::new();
    while let Some(seed) = remaining.pop() {
        let mut members = vec![seed];
        let mut k = 0;
        while k < remaining.len() {
            if (remaining[k] - seed).norm() <= ROOT_CLUSTER_RADIUS {
                members.push(remaining.swap_remove(k));
            } else {
                k += 1;
            }
        }
        let centroid = members.iter().sum::<Complex64>() / members.len() as f64;
        clusters.push((centroid, members.len()));
    }
    clusters.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .expect("finite roots")
    });
    clusters
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn trim_drops_trailing_noise() {
        let p = Polynomial::new(vec![1.0, 2.0, 1e-15]);
        assert_eq!(p.coeffs(), &[1.0, 2.0]);
        assert_eq!(p.degree(), 1);
    }

    #[test]
    fn zero_polynomial() {
        let p = Polynomial::new(vec![0.0, 0.0]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), 0);
    }

    #[test]
    fn linear_root() {
        // s + 1
        let p = Polynomial::new(vec![1.0, 1.0]);
        let roots = p.roots().unwrap();
        assert_eq!(roots.len(), 1);
        assert_abs_diff_eq!(roots[0].re, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(roots[0].im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn pure_imaginary_pair() {
        // s^2 + 1
        let p = Polynomial::new(vec![1.0, 0.0, 1.0]);
        let mut roots = p.roots().unwrap();
        roots.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert_abs_diff_eq!(roots[0].im, -1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(roots[1].im, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(roots[0].re, 0.0, epsilon = 1e-12);
        // Exact conjugates after pairing.
        assert_eq!(roots[0].re, roots[1].re);
        assert_eq!(roots[0].im, -roots[1].im);
    }

    #[test]
    fn factored_cubic() {
        // (s+1)(s+2)(s+3) expanded by hand: s^3 + 6 s^2 + 11 s + 6.
        let p = Polynomial::new(vec![6.0, 11.0, 6.0, 1.0]);
        let mut roots = p.roots().unwrap();
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        let expected = [-3.0, -2.0, -1.0];
        for (r, e) in roots.iter().zip(expected) {
            assert_abs_diff_eq!(r.re, e, epsilon = 1e-9);
            assert_abs_diff_eq!(r.im, 0.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn degree_zero_has_no_roots() {
        let p = Polynomial::new(vec![3.0]);
        assert!(matches!(p.roots(), Err(LtiError::NoRoots)));
    }

    #[test]
    fn derivative_of_quadratic() {
        // d/ds (s^2 + 3s + 2) = 2s + 3
        let p = Polynomial::new(vec![2.0, 3.0, 1.0]);
        assert_eq!(p.derivative().coeffs(), &[3.0, 2.0]);
    }

    #[test]
    fn cluster_counts_multiplicity() {
        let roots = vec![
            Complex64::new(-1.0, 0.0),
            Complex64::new(-1.0 + 1e-9, 0.0),
            Complex64::new(2.0, 0.0),
        ];
        let clusters = cluster_roots(&roots);
        assert_eq!(clusters.len(), 2);
        assert_eq!(clusters[0].1, 2);
        assert_eq!(clusters[1].1, 1);
    }

    proptest! {
        /// Root/coefficient round trip for random stable polynomials of
        /// degree <= 6: rebuilding from the computed roots reproduces the
        /// monic coefficients within 1e-8 relative error.
        #[test]
        fn root_coefficient_round_trip(
            seeds in proptest::collection::vec((-5.0f64..-0.2, 0.0f64..3.0), 1..=3)
        ) {
            let mut roots = Vec::new();
            for (re, im) in seeds {
                if im < 0.3 {
                    roots.push(Complex64::new(re, 0.0));
                } else {
                    roots.push(Complex64::new(re, im));
                    roots.push(Complex64::new(re, -im));
                }
            }
            let p = Polynomial::from_roots(&roots);
            let computed = p.roots().unwrap();
            let rebuilt = Polynomial::from_roots(&computed);
            let scale = p.coeffs().iter().fold(0.0f64, |m, c| m.max(c.abs()));
            for (a, b) in p.coeffs().iter().zip(rebuilt.coeffs()) {
                prop_assert!((a - b).abs() <= 1e-8 * scale, "{a} vs {b}");
            }
        }

        /// Horner evaluation commutes with conjugation for real coefficients.
        #[test]
        fn conjugate_symmetry(
            coeffs in proptest::collection::vec(-3.0f64..3.0, 1..6),
            re in -2.0f64..2.0,
            im in -2.0f64..2.0,
        ) {
            let p = Polynomial::new(coeffs);
            let s = Complex64::new(re, im);
            let a = p.eval(s.conj());
            let b = p.eval(s).conj();
            prop_assert!((a - b).norm() < 1e-9 * (1.0 + b.norm()));
        }
    }
}
