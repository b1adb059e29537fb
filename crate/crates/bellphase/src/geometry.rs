//! Measurement axes, angular-momentum vectors, and seeded sampling on the
//! angular-momentum sphere.
//!
//! All measurement axes lie in the zy plane of a right-handed frame with z up,
//! so a single angle from the z axis identifies an axis. Random sampling goes
//! through [`RngStream`], a `(seed, stream)` pair backed by ChaCha8: the same
//! pair always replays the same sequence, and distinct stream indices give
//! independent sequences, which is what lets estimators split work across
//! parallel substreams without losing reproducibility.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// A measurement axis in the zy plane, identified by its angle from the z
/// axis in radians. Angles are normalized to `[0, 2π)` on construction.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    theta: f64,
}

impl Axis {
    /// Axis at angle `theta` (radians) from z, measured within the zy plane.
    ///
    /// # Panics
    /// Panics if `theta` is not finite.
    pub fn new(theta: f64) -> Self {
        assert!(theta.is_finite(), "axis angle must be finite");
        Self {
            theta: theta.rem_euclid(TAU),
        }
    }

    pub fn theta(self) -> f64 {
        self.theta
    }

    /// Unsigned angle between two axes, reduced to `[0, π]`.
    pub fn angle_between(self, other: Axis) -> f64 {
        let d = (other.theta - self.theta).abs();
        if d > PI {
            TAU - d
        } else {
            d
        }
    }

    /// Unit vector along the axis: `(0, sin θ, cos θ)`.
    pub fn direction(self) -> MomentumVector {
        MomentumVector::new(0.0, self.theta.sin(), self.theta.cos())
    }
}

/// A three-component angular momentum in units of the gauge η.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentumVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl MomentumVector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn magnitude(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dot(self, other: MomentumVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: MomentumVector) -> MomentumVector {
        MomentumVector::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn scaled(self, factor: f64) -> MomentumVector {
        MomentumVector::new(self.x * factor, self.y * factor, self.z * factor)
    }

    /// Projection of the vector on the axis, `v · â`, in units of η.
    pub fn project(self, axis: Axis) -> f64 {
        self.dot(axis.direction())
    }
}

impl std::ops::Neg for MomentumVector {
    type Output = MomentumVector;

    fn neg(self) -> MomentumVector {
        MomentumVector::new(-self.x, -self.y, -self.z)
    }
}

impl std::ops::Add for MomentumVector {
    type Output = MomentumVector;

    fn add(self, other: MomentumVector) -> MomentumVector {
        MomentumVector::new(self.x + other.x, self.y + other.y, self.z + other.z)
    }
}

/// A reproducible random stream identified by a `(seed, stream)` pair.
///
/// Streams are ChaCha8 generators using the 64-bit stream counter of the
/// cipher, so any two distinct indices yield statistically independent
/// sequences and the same pair always replays bit-identical draws.
///
/// Estimators derive substream `i` of stream `s` as `s · 2³² + i`. Root
/// stream indices below 2³² therefore never collide with each other's
/// substream families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RngStream {
    seed: u64,
    stream: u64,
}

impl RngStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        Self { seed, stream }
    }

    pub fn seed(self) -> u64 {
        self.seed
    }

    pub fn stream(self) -> u64 {
        self.stream
    }

    /// Instantiates the generator for this stream.
    pub fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }

    /// The `i`-th substream of this stream (same seed, derived stream index).
    pub fn substream(self, index: u32) -> RngStream {
        RngStream {
            seed: self.seed,
            stream: self.stream.wrapping_shl(32).wrapping_add(u64::from(index)),
        }
    }
}

/// Draws a vector uniformly distributed on the sphere of radius `magnitude`.
///
/// The polar cosine is uniform on `[-1, 1)` and the azimuth uniform on
/// `[0, 2π)`; the draw order (cosine first) is fixed so sequences are stable.
pub fn sample_uniform_sphere<R: Rng + ?Sized>(rng: &mut R, magnitude: f64) -> MomentumVector {
    debug_assert!(magnitude > 0.0, "sphere radius must be positive");
    let cos_polar = 2.0 * rng.gen::<f64>() - 1.0;
    let azimuth = TAU * rng.gen::<f64>();
    let sin_polar = (1.0 - cos_polar * cos_polar).max(0.0).sqrt();
    MomentumVector::new(
        magnitude * sin_polar * azimuth.cos(),
        magnitude * sin_polar * azimuth.sin(),
        magnitude * cos_polar,
    )
}

/// Builds a vector of length `magnitude` at the given polar cosine about
/// `axis`, with the given azimuth about that axis.
///
/// The azimuthal frame is `ê₁ = x̂`, `ê₂ = â × x̂`; `x̂` is orthogonal to every
/// axis in the zy plane, so the frame is well defined for all axes.
pub fn vector_about_axis(
    axis: Axis,
    cos_polar: f64,
    azimuth: f64,
    magnitude: f64,
) -> MomentumVector {
    let a = axis.direction();
    let e1 = MomentumVector::new(1.0, 0.0, 0.0);
    let e2 = a.cross(e1);
    let sin_polar = (1.0 - cos_polar * cos_polar).max(0.0).sqrt();
    let (sin_az, cos_az) = azimuth.sin_cos();
    a.scaled(magnitude * cos_polar)
        + e1.scaled(magnitude * sin_polar * cos_az)
        + e2.scaled(magnitude * sin_polar * sin_az)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} != {b} (tol {tol})");
    }

    #[test]
    fn axis_directions() {
        let z = Axis::new(0.0).direction();
        assert_close(z.x, 0.0, 0.0);
        assert_close(z.y, 0.0, 1e-15);
        assert_close(z.z, 1.0, 1e-15);

        let y = Axis::new(FRAC_PI_2).direction();
        assert_close(y.y, 1.0, 1e-15);
        assert_close(y.z, 0.0, 1e-15);

        let mid = Axis::new(PI / 4.0).direction();
        let s = 0.5_f64.sqrt();
        assert_close(mid.y, s, 1e-15);
        assert_close(mid.z, s, 1e-15);
    }

    #[test]
    fn axis_normalization_and_angle() {
        let a = Axis::new(-PI / 2.0);
        assert_close(a.theta(), 3.0 * PI / 2.0, 1e-15);
        let b = Axis::new(TAU + 0.25);
        assert_close(b.theta(), 0.25, 1e-12);

        assert_close(Axis::new(0.0).angle_between(Axis::new(PI)), PI, 0.0);
        // 7π/4 apart reduces to π/4.
        assert_close(
            Axis::new(0.0).angle_between(Axis::new(7.0 * PI / 4.0)),
            PI / 4.0,
            1e-15,
        );
        assert_close(Axis::new(1.0).angle_between(Axis::new(1.0)), 0.0, 0.0);
    }

    #[test]
    fn projection_of_aligned_and_orthogonal_vectors() {
        let j = 2.5;
        let v = MomentumVector::new(0.0, 0.0, j);
        assert_close(v.project(Axis::new(0.0)), j, 1e-15);
        assert_close(v.project(Axis::new(FRAC_PI_2)), 0.0, 1e-15);

        // A vector lying along the axis projects to its full magnitude.
        let t = PI / 3.0;
        let w = MomentumVector::new(0.0, j * t.sin(), j * t.cos());
        assert_close(w.project(Axis::new(t)), j, 1e-14);
    }

    #[test]
    fn projection_is_linear() {
        let a = Axis::new(0.7);
        let u = MomentumVector::new(0.3, -1.2, 0.8);
        let v = MomentumVector::new(-0.5, 0.4, 2.0);
        let lhs = (u.scaled(2.0) + v.scaled(-3.0)).project(a);
        let rhs = 2.0 * u.project(a) - 3.0 * v.project(a);
        assert_close(lhs, rhs, 1e-12);
    }

    #[test]
    fn uniform_sphere_magnitude_and_determinism() {
        let mut rng = RngStream::new(42, 0).rng();
        for _ in 0..100 {
            let v = sample_uniform_sphere(&mut rng, 3.0);
            assert_close(v.magnitude(), 3.0, 1e-12);
        }

        // Identical (seed, stream) must replay the identical first draw.
        let first = sample_uniform_sphere(&mut RngStream::new(42, 0).rng(), 1.0);
        let again = sample_uniform_sphere(&mut RngStream::new(42, 0).rng(), 1.0);
        assert_eq!(first, again);

        // A different stream index diverges.
        let other = sample_uniform_sphere(&mut RngStream::new(42, 1).rng(), 1.0);
        assert_ne!(first, other);
    }

    #[test]
    fn substream_derivation_is_stable() {
        let root = RngStream::new(7, 3);
        assert_eq!(root.substream(0).stream(), 3 << 32);
        assert_eq!(root.substream(5).stream(), (3 << 32) + 5);
        assert_eq!(root.substream(5).seed(), 7);
    }

    #[test]
    fn vector_about_axis_matches_polar_spec() {
        let axis = Axis::new(0.9);
        let v = vector_about_axis(axis, 0.25, 1.3, 2.0);
        assert_close(v.magnitude(), 2.0, 1e-12);
        assert_close(v.project(axis), 0.5, 1e-12);
    }
}
