//! Pencils of conics `λC₁ + μC₂`.
//!
//! The central object is [`AlphaBetaPencil`], spanned by
//! `C₁ = x² + y² + αxy` and `C₂ = x² + z² + βxz` with `αβ ≠ 0`, `α ≠ β`.
//! When `D(1/α²) = D(1/β²) = 1` both base conics are conjugate imaginary
//! line pairs; the third degenerate member
//!
//! ```text
//! C₃ = (α² + β²)x² + β²y² + α²z² + αβ²xy + α²βxz
//! ```
//!
//! sits at parameter `(β² : α²)` and is then always a real line pair, since
//! `D(1/γ²) = D(1/α²) + D(1/β²) = 0` with `γ = αβ/(α + β)`. The
//! [`verify`] submodule checks this exhaustively or by sampling.

pub mod verify;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2n::{FieldElement, FieldSpec};
use crate::pg2::{self, ClassificationRecord, Conic, ProjectiveTransform};

pub use verify::{verify_note, PairRow, VerificationReport, VerifyMode, VerifyOptions};

/// A point `(λ : μ)` of the projective line, normalized to `(1 : μ)` or
/// `(0 : 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PencilParameter {
    lambda: FieldElement,
    mu: FieldElement,
}

impl PencilParameter {
    pub fn new(lambda: FieldElement, mu: FieldElement) -> Result<Self> {
        if lambda.field() != mu.field() {
            return Err(Error::FieldMismatch);
        }
        if lambda.is_zero() {
            if mu.is_zero() {
                return Err(Error::ZeroParameter);
            }
            let f = lambda.field();
            return Ok(PencilParameter {
                lambda: f.zero(),
                mu: f.one(),
            });
        }
        let s = lambda.inv().expect("nonzero");
        Ok(PencilParameter {
            lambda: lambda.field().one(),
            mu: mu * s,
        })
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    pub fn mu(&self) -> FieldElement {
        self.mu
    }

    /// All `q + 1` parameters: `(1:0), (1:1), …, (1:q-1), (0:1)`.
    pub fn all(field: &FieldSpec) -> Vec<PencilParameter> {
        let one = field.one();
        field
            .elements()
            .map(|mu| PencilParameter { lambda: one, mu })
            .chain(std::iter::once(PencilParameter {
                lambda: field.zero(),
                mu: one,
            }))
            .collect()
    }
}

impl fmt::Display for PencilParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lambda, self.mu)
    }
}

impl Serialize for PencilParameter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The pencil spanned by two non-proportional conics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PencilOfConics {
    c1: Conic,
    c2: Conic,
}

impl PencilOfConics {
    pub fn new(c1: Conic, c2: Conic) -> Result<Self> {
        if c1.field() != c2.field() {
            return Err(Error::FieldMismatch);
        }
        if c1.proportionality(&c2).is_some() {
            return Err(Error::ProportionalConics);
        }
        Ok(PencilOfConics { c1, c2 })
    }

    pub fn c1(&self) -> Conic {
        self.c1
    }

    pub fn c2(&self) -> Conic {
        self.c2
    }

    pub fn field(&self) -> FieldSpec {
        self.c1.field()
    }

    /// `λ·C₁ + μ·C₂` for arbitrary, not necessarily normalized, `(λ, μ)`.
    pub fn combination(&self, lambda: FieldElement, mu: FieldElement) -> Result<Conic> {
        if lambda.is_zero() && mu.is_zero() {
            return Err(Error::ZeroParameter);
        }
        let (a, b) = (self.c1.coeffs(), self.c2.coeffs());
        let mut out = [self.field().zero(); 6];
        for i in 0..6 {
            out[i] = lambda.checked_mul(&a[i])? + mu.checked_mul(&b[i])?;
        }
        Conic::new(out)
    }

    pub fn member(&self, p: &PencilParameter) -> Conic {
        self.combination(p.lambda, p.mu)
            .expect("non-proportional base conics span only nonzero members")
    }

    /// Every member with its classification, in parameter order.
    pub fn scan(&self) -> Vec<(PencilParameter, Conic, ClassificationRecord)> {
        PencilParameter::all(&self.field())
            .into_iter()
            .map(|p| {
                let c = self.member(&p);
                (p, c, pg2::classify(&c))
            })
            .collect()
    }

    /// Members whose verdict is not `Nondegenerate`, in parameter order.
    pub fn degenerate_members(&self) -> Vec<(PencilParameter, ClassificationRecord)> {
        self.scan()
            .into_iter()
            .filter(|(_, _, r)| r.verdict.is_degenerate())
            .map(|(p, _, r)| (p, r))
            .collect()
    }
}

fn check_alpha_beta(alpha: FieldElement, beta: FieldElement) -> Result<()> {
    if alpha.field() != beta.field() {
        return Err(Error::FieldMismatch);
    }
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::ZeroPencilParameter);
    }
    if alpha == beta {
        return Err(Error::EqualPencilParameters);
    }
    Ok(())
}

/// `D(1/α²) = 1`, i.e. `x² + y² + αxy` is irreducible.
pub fn is_admissible_parameter(alpha: FieldElement) -> bool {
    !alpha.is_zero() && alpha.square().inv().expect("nonzero").trace_bit() == 1
}

/// `C₁ = x² + y² + αxy`.
pub fn c1(alpha: FieldElement) -> Conic {
    let f = alpha.field();
    let (o, l) = (f.zero(), f.one());
    Conic::new([l, l, o, alpha, o, o]).expect("x² term is nonzero")
}

/// `C₂ = x² + z² + βxz`.
pub fn c2(beta: FieldElement) -> Conic {
    let f = beta.field();
    let (o, l) = (f.zero(), f.one());
    Conic::new([l, o, l, o, beta, o]).expect("x² term is nonzero")
}

/// `C₃ = (α² + β²)x² + β²y² + α²z² + αβ²xy + α²βxz`.
pub fn c3(alpha: FieldElement, beta: FieldElement) -> Result<Conic> {
    check_alpha_beta(alpha, beta)?;
    let (a2, b2) = (alpha.square(), beta.square());
    let o = alpha.field().zero();
    Conic::new([a2 + b2, b2, a2, alpha * b2, a2 * beta, o])
}

/// The normalized parameter `(β² : α²)` of `C₃`.
pub fn c3_parameter(alpha: FieldElement, beta: FieldElement) -> Result<PencilParameter> {
    check_alpha_beta(alpha, beta)?;
    PencilParameter::new(beta.square(), alpha.square())
}

/// `γ = αβ / (α + β)`.
pub fn gamma(alpha: FieldElement, beta: FieldElement) -> Result<FieldElement> {
    check_alpha_beta(alpha, beta)?;
    Ok(alpha * beta * (alpha + beta).inv().expect("alpha ≠ beta"))
}

/// The change of coordinates `x' = x`, `y' = (βy + αz)/(α + β)`,
/// `z' = (αy + βz)/(α + β)`.
pub fn canonical_transform(alpha: FieldElement, beta: FieldElement) -> Result<ProjectiveTransform> {
    check_alpha_beta(alpha, beta)?;
    let f = alpha.field();
    let (o, l) = (f.zero(), f.one());
    let s = (alpha + beta).inv().expect("alpha ≠ beta");
    let (b, a) = (beta * s, alpha * s);
    ProjectiveTransform::new([[l, o, o], [o, b, a], [o, a, b]])
}

/// `C₃ / (α + β)²` written in the primed coordinates of
/// [`canonical_transform`]; equals `x'² + y'² + γx'y'`.
pub fn canonical_form(alpha: FieldElement, beta: FieldElement) -> Result<Conic> {
    let scaled = c3(alpha, beta)?.scale((alpha + beta).square().inv().expect("alpha ≠ beta"))?;
    pg2::change_coordinates(&scaled, &canonical_transform(alpha, beta)?)
}

/// Checks the field identity `1/γ² = 1/α² + 1/β²`.
pub fn gamma_identity_check(alpha: FieldElement, beta: FieldElement) -> Result<bool> {
    let g = gamma(alpha, beta)?;
    let lhs = g.square().inv().expect("gamma is nonzero");
    let rhs = alpha.square().inv().expect("nonzero") + beta.square().inv().expect("nonzero");
    Ok(lhs == rhs)
}

/// Nonzero `α` with `D(1/α²) = 1`, ascending.
pub fn admissible_parameters(field: &FieldSpec) -> Vec<FieldElement> {
    field
        .nonzero_elements()
        .filter(|&a| is_admissible_parameter(a))
        .collect()
}

/// Ordered pairs `(α, β)`, `α ≠ β`, both admissible, ascending by
/// `(α, β)` bit values.
pub fn admissible_pairs(field: &FieldSpec) -> Vec<(FieldElement, FieldElement)> {
    let alphas = admissible_parameters(field);
    alphas
        .iter()
        .flat_map(|&a| {
            alphas
                .iter()
                .filter(move |&&b| b != a)
                .map(move |&b| (a, b))
        })
        .collect()
}

/// The pencil `λ(x² + y² + αxy) + μ(x² + z² + βxz)`.
///
/// Construction only enforces `αβ ≠ 0` and `α ≠ β`; the trace condition
/// on the base conics is reported by [`AlphaBetaPencil::is_admissible`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlphaBetaPencil {
    alpha: FieldElement,
    beta: FieldElement,
}

impl AlphaBetaPencil {
    pub fn new(alpha: FieldElement, beta: FieldElement) -> Result<Self> {
        check_alpha_beta(alpha, beta)?;
        Ok(AlphaBetaPencil { alpha, beta })
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn beta(&self) -> FieldElement {
        self.beta
    }

    pub fn field(&self) -> FieldSpec {
        self.alpha.field()
    }

    pub fn is_admissible(&self) -> bool {
        is_admissible_parameter(self.alpha) && is_admissible_parameter(self.beta)
    }

    pub fn pencil(&self) -> PencilOfConics {
        PencilOfConics::new(self.c1(), self.c2()).expect("C₁ has a y² term, C₂ does not")
    }

    pub fn c1(&self) -> Conic {
        c1(self.alpha)
    }

    pub fn c2(&self) -> Conic {
        c2(self.beta)
    }

    pub fn c3(&self) -> Conic {
        c3(self.alpha, self.beta).expect("validated")
    }

    pub fn c3_parameter(&self) -> PencilParameter {
        c3_parameter(self.alpha, self.beta).expect("validated")
    }

    pub fn gamma(&self) -> FieldElement {
        gamma(self.alpha, self.beta).expect("validated")
    }

    pub fn canonical_transform(&self) -> ProjectiveTransform {
        canonical_transform(self.alpha, self.beta).expect("validated")
    }

    pub fn canonical_form(&self) -> Conic {
        canonical_form(self.alpha, self.beta).expect("validated")
    }

    /// `D(1/γ²)`.
    pub fn gamma_trace(&self) -> u8 {
        self.gamma()
            .square()
            .inv()
            .expect("gamma is nonzero")
            .trace_bit()
    }

    pub fn swapped(&self) -> Self {
        AlphaBetaPencil {
            alpha: self.beta,
            beta: self.alpha,
        }
    }
}
