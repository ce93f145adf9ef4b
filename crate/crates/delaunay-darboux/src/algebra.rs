//! Quaternion and 3-vector arithmetic.
//!
//! Quaternions are stored as a pair of complex numbers, q = z0 + j z1,
//! with the twist rule j z = conj(z) j. This makes the section formulas
//! (which are naturally split into a C and a jC part) direct to transcribe,
//! at the price of a slightly unusual component layout: in terms of the
//! basis {1, i, j, k},
//!
//! ```text
//! q = Re(z0) + Im(z0) i + Re(z1) j - Im(z1) k.
//! ```
//!
//! 3-space is the imaginary quaternions, x i + y j + z k.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol::EPS_INV;

pub type Complex = Complex64;

/// Quaternion q = z0 + j z1 with z0, z1 complex and j z = conj(z) j.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Quaternion {
    pub z0: Complex,
    pub z1: Complex,
}

/// Point or tangent vector of R^3, identified with the imaginary
/// quaternion x i + y j + z k.
#[derive(Copy, Clone, Debug, Default, PartialEq)]
pub struct Vector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new_re(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new_re(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new_re(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new_re(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new_re(0.0, 0.0, 0.0, 1.0);

    pub const fn new(z0: Complex, z1: Complex) -> Self {
        Quaternion { z0, z1 }
    }

    /// From real coefficients w + x i + y j + z k.
    pub const fn new_re(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion {
            z0: Complex::new(w, x),
            z1: Complex::new(y, -z),
        }
    }

    /// Embeds a complex number as w + x i.
    pub const fn from_complex(z: Complex) -> Self {
        Quaternion {
            z0: z,
            z1: Complex::new(0.0, 0.0),
        }
    }

    pub fn re(self) -> f64 {
        self.z0.re
    }

    /// The imaginary part as a 3-vector.
    pub fn imag(self) -> Vector3 {
        Vector3 {
            x: self.z0.im,
            y: self.z1.re,
            z: -self.z1.im,
        }
    }

    pub fn conj(self) -> Self {
        Quaternion {
            z0: self.z0.conj(),
            z1: -self.z1,
        }
    }

    pub fn norm_sqr(self) -> f64 {
        self.z0.norm_sqr() + self.z1.norm_sqr()
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// q^{-1} = conj(q) / |q|^2.
    pub fn inverse(self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2.sqrt() <= EPS_INV {
            return Err(Error::NearZeroQuaternion { norm: n2.sqrt() });
        }
        Ok(self.conj() * (1.0 / n2))
    }

    /// Right multiplication by a complex scalar (acts on both components).
    pub fn mul_complex(self, z: Complex) -> Self {
        Quaternion {
            z0: self.z0 * z,
            z1: self.z1 * z,
        }
    }

    /// Left multiplication by a complex scalar; the j-part picks up the
    /// conjugate through the twist rule.
    pub fn complex_mul(z: Complex, q: Quaternion) -> Self {
        Quaternion {
            z0: z * q.z0,
            z1: z.conj() * q.z1,
        }
    }
}

impl std::ops::Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            z0: self.z0 + rhs.z0,
            z1: self.z1 + rhs.z1,
        }
    }
}

impl std::ops::Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            z0: self.z0 - rhs.z0,
            z1: self.z1 - rhs.z1,
        }
    }
}

impl std::ops::Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion {
            z0: -self.z0,
            z1: -self.z1,
        }
    }
}

impl std::ops::Mul for Quaternion {
    type Output = Quaternion;
    /// (a0 + j a1)(b0 + j b1) = (a0 b0 - conj(a1) b1) + j (conj(a0) b1 + a1 b0).
    fn mul(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            z0: self.z0 * rhs.z0 - self.z1.conj() * rhs.z1,
            z1: self.z0.conj() * rhs.z1 + self.z1 * rhs.z0,
        }
    }
}

impl std::ops::Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion {
            z0: self.z0 * s,
            z1: self.z1 * s,
        }
    }
}

impl From<Vector3> for Quaternion {
    fn from(v: Vector3) -> Quaternion {
        Quaternion::new_re(0.0, v.x, v.y, v.z)
    }
}

impl Vector3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vector3 { x, y, z }
    }

    pub fn dot(self, other: Vector3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vector3) -> Vector3 {
        Vector3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm_sqr(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalized(self) -> Vector3 {
        self * (1.0 / self.norm())
    }

    pub fn distance(self, other: Vector3) -> f64 {
        (self - other).norm()
    }
}

impl std::ops::Add for Vector3 {
    type Output = Vector3;
    fn add(self, rhs: Vector3) -> Vector3 {
        Vector3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl std::ops::Sub for Vector3 {
    type Output = Vector3;
    fn sub(self, rhs: Vector3) -> Vector3 {
        Vector3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl std::ops::Neg for Vector3 {
    type Output = Vector3;
    fn neg(self) -> Vector3 {
        Vector3::new(-self.x, -self.y, -self.z)
    }
}

impl std::ops::Mul<f64> for Vector3 {
    type Output = Vector3;
    fn mul(self, s: f64) -> Vector3 {
        Vector3::new(self.x * s, self.y * s, self.z * s)
    }
}

/// Inner and cross product read off the quaternion product of imaginary
/// quaternions: a b = -<a, b> + a x b.
pub fn dot_cross(a: Vector3, b: Vector3) -> (f64, Vector3) {
    let prod = Quaternion::from(a) * Quaternion::from(b);
    (-prod.re(), prod.imag())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn rng() -> rand_chacha::ChaCha8Rng {
        rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed)
    }

    fn random_quat(rng: &mut impl Rng) -> Quaternion {
        Quaternion::new_re(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        )
    }

    #[test]
    fn multiplication_table() {
        assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::K, Quaternion::I);
        assert_eq!(Quaternion::K * Quaternion::I, Quaternion::J);
        assert_eq!(Quaternion::J * Quaternion::I, -Quaternion::K);
        assert_eq!(Quaternion::I * Quaternion::I, -Quaternion::ONE);
        assert_eq!(Quaternion::J * Quaternion::J, -Quaternion::ONE);
        assert_eq!(Quaternion::K * Quaternion::K, -Quaternion::ONE);
    }

    #[test]
    fn twist_rule() {
        // j (2 + 3i) = (2 - 3i) j
        let z = Complex::new(2.0, 3.0);
        let lhs = Quaternion::J * Quaternion::from_complex(z);
        let rhs = Quaternion::from_complex(z.conj()) * Quaternion::J;
        assert!((lhs - rhs).norm() < 1e-15);
    }

    #[test]
    fn inverse_of_unit() {
        let inv = Quaternion::I.inverse().unwrap();
        assert!((inv - (-Quaternion::I)).norm() < 1e-15);
    }

    #[test]
    fn inverse_identity_case() {
        let q = Quaternion::new(Complex::new(1.0, 2.0), Complex::new(3.0, 4.0));
        let prod = q * q.inverse().unwrap();
        assert!((prod - Quaternion::ONE).norm() < 1e-13);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(
            Quaternion::ZERO.inverse(),
            Err(Error::NearZeroQuaternion { .. })
        ));
    }

    #[test]
    fn inverse_property_random() {
        let mut rng = rng();
        for _ in 0..200 {
            let q = random_quat(&mut rng);
            if q.norm() < 1e-3 {
                continue;
            }
            let prod = q * q.inverse().unwrap();
            assert!((prod - Quaternion::ONE).norm() < 1e-13);
        }
    }

    #[test]
    fn dot_cross_basis() {
        let i = Vector3::new(1.0, 0.0, 0.0);
        let j = Vector3::new(0.0, 1.0, 0.0);
        let (d, c) = dot_cross(i, i);
        assert!((d - 1.0).abs() < 1e-15 && c.norm() < 1e-15);
        let (d, c) = dot_cross(i, j);
        assert!(d.abs() < 1e-15);
        assert!((c - Vector3::new(0.0, 0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn dot_cross_against_coordinate_formulas() {
        let mut rng = rng();
        for _ in 0..500 {
            let a = Vector3::new(
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
            );
            let b = Vector3::new(
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
            );
            let (d, c) = dot_cross(a, b);
            assert!((d - a.dot(b)).abs() < 1e-14 * (1.0 + d.abs()));
            assert!((c - a.cross(b)).norm() < 1e-14 * (1.0 + c.norm()));
        }
    }

    #[test]
    fn unit_imaginary_squares_to_minus_one() {
        let mut rng = rng();
        for _ in 0..200 {
            let v = Vector3::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            );
            if v.norm() < 1e-3 {
                continue;
            }
            let n = Quaternion::from(v.normalized());
            assert!((n * n + Quaternion::ONE).norm() < 1e-13);
        }
    }

    #[test]
    fn complex_scalars_commute_through_j_conjugation() {
        let mut rng = rng();
        for _ in 0..1000 {
            let q = random_quat(&mut rng);
            let z = Complex::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let w = Complex::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            // (z q) w = z (q w): left and right complex actions commute.
            let lhs = Quaternion::complex_mul(z, q).mul_complex(w);
            let rhs = Quaternion::complex_mul(z, q.mul_complex(w));
            assert!((lhs - rhs).norm() < 1e-13);
            // and both agree with the full quaternion products
            let full = Quaternion::from_complex(z) * q * Quaternion::from_complex(w);
            assert!((lhs - full).norm() < 1e-13);
        }
    }

    #[test]
    fn vector_roundtrip() {
        let v = Vector3::new(0.3, -1.7, 2.2);
        assert_eq!(Quaternion::from(v).imag(), v);
        assert_eq!(Quaternion::from(v).re(), 0.0);
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(
            a in proptest::array::uniform8(-3.0..3.0f64),
        ) {
            let p = Quaternion::new_re(a[0], a[1], a[2], a[3]);
            let q = Quaternion::new_re(a[4], a[5], a[6], a[7]);
            let lhs = (p * q).norm();
            let rhs = p.norm() * q.norm();
            prop_assert!((lhs - rhs).abs() <= 1e-13 * (1.0 + rhs));
        }

        #[test]
        fn multiplication_is_associative(
            a in proptest::array::uniform12(-2.0..2.0f64),
        ) {
            let p = Quaternion::new_re(a[0], a[1], a[2], a[3]);
            let q = Quaternion::new_re(a[4], a[5], a[6], a[7]);
            let r = Quaternion::new_re(a[8], a[9], a[10], a[11]);
            let lhs = (p * q) * r;
            let rhs = p * (q * r);
            prop_assert!((lhs - rhs).norm() <= 1e-12);
        }

        #[test]
        fn conjugation_antihomomorphism(
            a in proptest::array::uniform8(-3.0..3.0f64),
        ) {
            let p = Quaternion::new_re(a[0], a[1], a[2], a[3]);
            let q = Quaternion::new_re(a[4], a[5], a[6], a[7]);
            prop_assert!(((p * q).conj() - q.conj() * p.conj()).norm() <= 1e-12);
        }
    }
}
