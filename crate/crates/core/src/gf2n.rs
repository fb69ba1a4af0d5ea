//! Arithmetic in GF(2^n), 1 ≤ n ≤ 24, in polynomial basis.
//!
//! An element is a bit vector whose bit `i` is the coefficient of `x^i`.
//! Every element carries the [`FieldSpec`] it belongs to; combining elements
//! of different fields is an error (checked operations) or a panic (the
//! operator overloads).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 24;

/// Low-weight irreducible moduli, indexed by degree. Entry `n - 1` is the
/// modulus for GF(2^n). Each entry is re-checked when a field is built.
const DEFAULT_MODULI: [u32; MAX_DEGREE as usize] = [
    0x3,       // x + 1
    0x7,       // x^2 + x + 1
    0xb,       // x^3 + x + 1
    0x13,      // x^4 + x + 1
    0x25,      // x^5 + x^2 + 1
    0x43,      // x^6 + x + 1
    0x83,      // x^7 + x + 1
    0x11b,     // x^8 + x^4 + x^3 + x + 1
    0x211,     // x^9 + x^4 + 1
    0x409,     // x^10 + x^3 + 1
    0x805,     // x^11 + x^2 + 1
    0x1009,    // x^12 + x^3 + 1
    0x201b,    // x^13 + x^4 + x^3 + x + 1
    0x4021,    // x^14 + x^5 + 1
    0x8003,    // x^15 + x + 1
    0x1002b,   // x^16 + x^5 + x^3 + x + 1
    0x20009,   // x^17 + x^3 + 1
    0x40081,   // x^18 + x^7 + 1
    0x80027,   // x^19 + x^5 + x^2 + x + 1
    0x100009,  // x^20 + x^3 + 1
    0x200005,  // x^21 + x^2 + 1
    0x400003,  // x^22 + x + 1
    0x800021,  // x^23 + x^5 + 1
    0x100001b, // x^24 + x^4 + x^3 + x + 1
];

/// The built-in modulus for degree `n`, if `n` is in range.
pub fn default_modulus(n: u32) -> Option<u64> {
    (1..=MAX_DEGREE)
        .contains(&n)
        .then(|| u64::from(DEFAULT_MODULI[n as usize - 1]))
}

/// Degree of a nonzero binary polynomial.
fn degree(p: u64) -> u32 {
    debug_assert!(p != 0);
    63 - p.leading_zeros()
}

/// Carry-less product of two binary polynomials of degree < 32.
#[inline]
fn clmul(a: u64, mut b: u64) -> u64 {
    let mut acc = 0;
    while b != 0 {
        let i = b.trailing_zeros();
        acc ^= a << i;
        b &= b - 1;
    }
    acc
}

/// Remainder of `p` modulo `m`.
#[inline]
fn poly_rem(mut p: u64, m: u64) -> u64 {
    let dm = degree(m);
    while p != 0 && degree(p) >= dm {
        p ^= m << (degree(p) - dm);
    }
    p
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or irreducibility test over GF(2): a polynomial `f` of degree `d`
/// is irreducible iff `gcd(f, x^(2^k) - x mod f) = 1` for every `k ≤ d/2`.
pub fn is_irreducible_poly(f: u64) -> bool {
    if f < 2 {
        return false;
    }
    let d = degree(f);
    if d == 1 {
        return true;
    }
    let mut h = 0b10u64;
    for _ in 1..=d / 2 {
        h = poly_rem(clmul(h, h), f);
        if poly_gcd(f, h ^ 0b10) != 1 {
            return false;
        }
    }
    true
}

/// Parses a hexadecimal value with an optional `0x` prefix.
pub fn parse_hex(s: &str) -> Result<u64> {
    let t = s.trim();
    let digits = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    if digits.is_empty() {
        return Err(Error::InvalidHex(s.to_string()));
    }
    u64::from_str_radix(digits, 16).map_err(|_| Error::InvalidHex(s.to_string()))
}

/// A binary field GF(2^n) fixed by an irreducible modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    n: u32,
    modulus: u32,
}

impl FieldSpec {
    /// Builds GF(2^n). Without an explicit modulus the built-in table
    /// entry is used. The modulus is always checked for degree and
    /// irreducibility.
    pub fn new(n: u32, modulus: Option<u64>) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&n) {
            return Err(Error::DegreeOutOfRange(n));
        }
        let modulus = match modulus {
            Some(m) => m,
            None => default_modulus(n).expect("degree checked above"),
        };
        let found = if modulus == 0 { 0 } else { degree(modulus) };
        if modulus == 0 || found != n {
            return Err(Error::DegreeMismatch {
                modulus,
                expected: n,
                found,
            });
        }
        if !is_irreducible_poly(modulus) {
            return Err(Error::ReducibleModulus(modulus));
        }
        Ok(FieldSpec {
            n,
            modulus: modulus as u32,
        })
    }

    /// GF(2^n) with the default modulus.
    pub fn with_degree(n: u32) -> Result<Self> {
        Self::new(n, None)
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        u64::from(self.modulus)
    }

    /// Number of elements, `q = 2^n`.
    pub fn order(&self) -> u64 {
        1u64 << self.n
    }

    pub fn element(&self, bits: u64) -> Result<FieldElement> {
        if bits >= self.order() {
            return Err(Error::ElementOutOfRange { bits, n: self.n });
        }
        Ok(FieldElement {
            bits: bits as u32,
            field: *self,
        })
    }

    /// Parses a lowercase (or uppercase) hex element, `0x` prefix optional.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        self.element(parse_hex(s)?)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            bits: 0,
            field: *self,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            bits: 1,
            field: *self,
        }
    }

    #[inline]
    fn wrap(&self, bits: u32) -> FieldElement {
        FieldElement { bits, field: *self }
    }

    /// All `q` elements in ascending bit order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = FieldElement> + Clone {
        let field = *self;
        (0..self.order() as u32).map(move |b| field.wrap(b))
    }

    /// The `q - 1` nonzero elements in ascending bit order.
    pub fn nonzero_elements(&self) -> impl ExactSizeIterator<Item = FieldElement> + Clone {
        let field = *self;
        (1..self.order() as u32).map(move |b| field.wrap(b))
    }

    #[inline]
    fn mul_bits(&self, a: u32, b: u32) -> u32 {
        let mut p = clmul(u64::from(a), u64::from(b));
        let m = u64::from(self.modulus);
        let n = self.n;
        while p >> n != 0 {
            let d = degree(p);
            p ^= m << (d - n);
        }
        p as u32
    }

    pub fn artin_schreier_solver(&self) -> ArtinSchreierSolver {
        ArtinSchreierSolver::new(*self)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod 0x{:x}", self.n, self.modulus)
    }
}

/// An element of a [`FieldSpec`]. Displays as lowercase hex without prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    bits: u32,
    field: FieldSpec,
}

impl FieldElement {
    pub fn bits(&self) -> u64 {
        u64::from(self.bits)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Characteristic-2 addition: exclusive-or of the representations.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.bits ^ other.bits))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.mul_bits(self.bits, other.bits)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(*self * other.inv()?)
    }

    pub fn square(&self) -> Self {
        self.field.wrap(self.field.mul_bits(self.bits, self.bits))
    }

    /// Unique square root, `a^(2^(n-1))`.
    pub fn sqrt(&self) -> Self {
        let mut r = *self;
        for _ in 1..self.field.n {
            r = r.square();
        }
        r
    }

    /// Square-and-multiply exponentiation; `a^0 = 1` including `a = 0`.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = *self;
        let mut acc = self.field.one();
        while k != 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base.square();
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `a^(2^n - 2)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(self.field.order() - 2))
    }

    /// Absolute trace `w + w^2 + w^4 + ... + w^(2^(n-1))`, always 0 or 1.
    pub fn trace(&self) -> Self {
        let mut t = *self;
        let mut acc = self.bits;
        for _ in 1..self.field.n {
            t = t.square();
            acc ^= t.bits;
        }
        debug_assert!(acc <= 1, "trace left the prime field");
        self.field.wrap(acc)
    }

    /// The trace as a bit.
    pub fn trace_bit(&self) -> u8 {
        self.trace().bits as u8
    }

    /// A root `t` of `t^2 + t = self`, or `None` when the trace is 1. The
    /// other root is `t + 1`.
    pub fn solve_artin_schreier(&self) -> Option<Self> {
        self.field.artin_schreier_solver().solve(self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.bits)
    }
}

impl fmt::LowerHex for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.bits, f)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("field mismatch in addition")
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;

    /// Subtraction coincides with addition in characteristic 2.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Self) -> Self {
        self + rhs
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> Self {
        self
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs)
            .expect("field mismatch in multiplication")
    }
}

#[derive(Debug, Clone)]
enum Method {
    HalfTrace,
    /// Echelon basis of the image of `t ↦ t² + t`, as `(image, preimage)`
    /// pairs indexed by the image's leading bit.
    Elimination(Vec<Option<(u32, u32)>>),
}

/// Solver for `t^2 + t = c` over a fixed field.
///
/// Odd degrees use the half-trace `Σ c^(4^i)`, i = 0..=(n-1)/2. Even
/// degrees row-reduce the GF(2)-linear map `t ↦ t^2 + t`.
#[derive(Debug, Clone)]
pub struct ArtinSchreierSolver {
    field: FieldSpec,
    method: Method,
}

impl ArtinSchreierSolver {
    pub fn new(field: FieldSpec) -> Self {
        if field.n % 2 == 1 {
            Self::half_trace(field).expect("odd degree")
        } else {
            Self::elimination(field)
        }
    }

    /// Half-trace solver; `None` for even `n`, where the formula is invalid.
    pub fn half_trace(field: FieldSpec) -> Option<Self> {
        (field.n % 2 == 1).then_some(ArtinSchreierSolver {
            field,
            method: Method::HalfTrace,
        })
    }

    /// Linear-algebra solver, valid for every `n`.
    pub fn elimination(field: FieldSpec) -> Self {
        let n = field.n as usize;
        let mut pivots: Vec<Option<(u32, u32)>> = vec![None; n];
        for i in 0..n {
            let basis = 1u32 << i;
            let mut image = field.mul_bits(basis, basis) ^ basis;
            let mut pre = basis;
            while image != 0 {
                let lead = (31 - image.leading_zeros()) as usize;
                match pivots[lead] {
                    Some((pi, pp)) => {
                        image ^= pi;
                        pre ^= pp;
                    }
                    None => {
                        pivots[lead] = Some((image, pre));
                        break;
                    }
                }
            }
        }
        ArtinSchreierSolver {
            field,
            method: Method::Elimination(pivots),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn solve(&self, c: &FieldElement) -> Option<FieldElement> {
        assert_eq!(
            c.field, self.field,
            "field mismatch in Artin-Schreier solve"
        );
        let t = match &self.method {
            Method::HalfTrace => {
                let mut acc = c.bits;
                let mut p = *c;
                for _ in 0..(self.field.n - 1) / 2 {
                    p = p.square().square();
                    acc ^= p.bits;
                }
                self.field.wrap(acc)
            }
            Method::Elimination(pivots) => {
                let mut rest = c.bits;
                let mut t = 0;
                while rest != 0 {
                    let lead = (31 - rest.leading_zeros()) as usize;
                    let (pi, pp) = pivots[lead]?;
                    rest ^= pi;
                    t ^= pp;
                }
                self.field.wrap(t)
            }
        };
        // The half-trace returns a value for every input; only trace-0
        // inputs are actually solved by it.
        (t.square() + t == *c).then_some(t)
    }
}
