//! Shared value types: foods, probability triples, sphere points and the
//! extended complex plane.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for algebraic identities (normalization, unit norm).
pub const IDENTITY_TOL: f64 = 1e-12;

/// Tolerance for quantities obtained by solving a linear system.
pub const SOLVE_TOL: f64 = 1e-10;

/// One of the three foods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FoodIndex(u8);

impl FoodIndex {
    pub const ALL: [FoodIndex; 3] = [FoodIndex(0), FoodIndex(1), FoodIndex(2)];

    pub fn new(value: u8) -> Result<Self> {
        if value > 2 {
            return Err(Error::OutOfRange {
                name: "food index",
                value: value as f64,
            });
        }
        Ok(FoodIndex(value))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The food `offset` steps after this one, cyclically.
    pub fn cycled(self, offset: u8) -> Self {
        FoodIndex((self.0 + offset) % 3)
    }
}

impl fmt::Display for FoodIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which player a response strategy belongs to. Cat 1 cuts (moves first and
/// last), Cat 2 chooses in between.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Owner {
    Cat1,
    Cat2,
}

fn check_triple(name: &'static str, t: [f64; 3]) -> Result<()> {
    for v in t {
        if !(v >= 0.0) || !v.is_finite() {
            return Err(Error::OutOfRange { name, value: v });
        }
    }
    let sum: f64 = t.iter().sum();
    if (sum - 1.0).abs() > IDENTITY_TOL {
        return Err(Error::NotNormalized { name, sum });
    }
    Ok(())
}

/// First-move frequencies `(P0, P1, P2)` of Cat 1: a point of the 2-simplex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplexPoint([f64; 3]);

impl SimplexPoint {
    pub fn new(p: [f64; 3]) -> Result<Self> {
        check_triple("simplex point", p)?;
        Ok(SimplexPoint(p))
    }

    pub fn centroid() -> Self {
        SimplexPoint([1.0 / 3.0; 3])
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn get(&self, food: FoodIndex) -> f64 {
        self.0[food.index()]
    }

    pub fn max_component(&self) -> f64 {
        self.0.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    /// All components strictly positive.
    pub fn is_interior(&self) -> bool {
        self.0.iter().all(|&v| v > 0.0)
    }
}

/// Realized long-run diet frequencies of one player (ω for Cat 2, λ for
/// Cat 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyTriple([f64; 3]);

impl FrequencyTriple {
    pub fn new(f: [f64; 3]) -> Result<Self> {
        check_triple("frequency triple", f)?;
        Ok(FrequencyTriple(f))
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn get(&self, food: FoodIndex) -> f64 {
        self.0[food.index()]
    }

    /// Largest componentwise distance from the balanced diet (1/3, 1/3, 1/3).
    pub fn balance_residual(&self) -> f64 {
        self.0
            .iter()
            .map(|v| (v - 1.0 / 3.0).abs())
            .fold(0.0, f64::max)
    }
}

/// A unit vector `(x1, x2, x3)` parameterizing a one-qubit pure strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint([f64; 3]);

impl SpherePoint {
    pub fn new(x: [f64; 3]) -> Result<Self> {
        let norm2: f64 = x.iter().map(|v| v * v).sum();
        if !norm2.is_finite() || (norm2 - 1.0).abs() > IDENTITY_TOL {
            return Err(Error::NotUnit { norm: norm2.sqrt() });
        }
        Ok(SpherePoint(x))
    }

    /// Rescales an arbitrary nonzero vector onto the sphere.
    pub fn normalized(x: [f64; 3]) -> Result<Self> {
        let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::NotUnit { norm });
        }
        Ok(SpherePoint([x[0] / norm, x[1] / norm, x[2] / norm]))
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }
}

/// A point of the extended complex plane (the projective line), used as the
/// inhomogeneous coordinate of a one-qubit strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtendedComplex {
    pub fn finite(re: f64, im: f64) -> Self {
        ExtendedComplex::Finite(Complex64::new(re, im))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedComplex::Infinity)
    }
}

impl From<Complex64> for ExtendedComplex {
    fn from(z: Complex64) -> Self {
        ExtendedComplex::Finite(z)
    }
}
