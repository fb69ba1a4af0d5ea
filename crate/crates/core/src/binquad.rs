//! The binary quadratic form `u² + v² + Θuv` over GF(2^n).
//!
//! The form is reducible exactly when `D(1/Θ²) = 0`, where `D` is the
//! absolute trace. [`BinaryQuadraticForm::factor`] produces the linear
//! factors constructively; [`BinaryQuadraticForm::brute_force_factor`] is an
//! independent `O(q)` search used to cross-check the criterion.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2n::{FieldElement, FieldSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryQuadraticForm {
    theta: FieldElement,
}

/// `u² + v² + Θuv = (u + a·v)(u + b·v)`, with `a` the smaller bit value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearFactorPair {
    pub a: FieldElement,
    pub b: FieldElement,
}

impl LinearFactorPair {
    fn canonical(x: FieldElement, y: FieldElement) -> Self {
        debug_assert_ne!(x, y, "equal factors force theta = 0");
        if x.bits() <= y.bits() {
            LinearFactorPair { a: x, b: y }
        } else {
            LinearFactorPair { a: y, b: x }
        }
    }

    /// True when `(u + a·v)(u + b·v)` expands to `u² + v² + Θuv`.
    pub fn expands_to(&self, theta: FieldElement) -> bool {
        self.a + self.b == theta && (self.a * self.b).is_one()
    }
}

impl Serialize for LinearFactorPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.a.to_string(), self.b.to_string()).serialize(s)
    }
}

impl BinaryQuadraticForm {
    pub fn new(theta: FieldElement) -> Result<Self> {
        if theta.is_zero() {
            return Err(Error::ZeroTheta);
        }
        Ok(BinaryQuadraticForm { theta })
    }

    pub fn theta(&self) -> FieldElement {
        self.theta
    }

    pub fn field(&self) -> FieldSpec {
        self.theta.field()
    }

    /// `1/Θ²`, the argument of the trace criterion.
    pub fn criterion_argument(&self) -> FieldElement {
        self.theta.square().inv().expect("theta is nonzero")
    }

    /// Irreducible over GF(2^n) iff `D(1/Θ²) = 1`.
    pub fn is_irreducible(&self) -> bool {
        self.criterion_argument().trace_bit() == 1
    }

    /// Splits the form via `a = Θs`, `b = Θ(s + 1)` where `s² + s = 1/Θ²`.
    pub fn factor(&self) -> Option<LinearFactorPair> {
        let s = self.criterion_argument().solve_artin_schreier()?;
        let one = self.field().one();
        let pair = LinearFactorPair::canonical(self.theta * s, self.theta * (s + one));
        debug_assert!(pair.expands_to(self.theta));
        Some(pair)
    }

    /// Scans every nonzero `a` for `a + 1/a = Θ`.
    pub fn brute_force_factor(&self) -> Option<LinearFactorPair> {
        self.field()
            .nonzero_elements()
            .map(|a| (a, a.inv().expect("nonzero")))
            .find(|&(a, b)| a + b == self.theta)
            .map(|(a, b)| LinearFactorPair::canonical(a, b))
    }
}
