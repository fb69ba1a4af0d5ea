//! Points, lines and conics of the projective plane PG(2, 2^n).
//!
//! Points and lines are stored normalized: the leftmost nonzero coordinate
//! (in the order x, y, z) is 1. A conic is the ternary form
//! `a_xx·x² + a_yy·y² + a_zz·z² + a_xy·xy + a_xz·xz + a_yz·yz`.
//!
//! In characteristic 2 the formal partials of a conic do not involve the
//! squared terms, so the partials system always has the point
//! `(a_yz : a_xz : a_xy)` as a solution whenever some cross term is nonzero.
//! That point is the nucleus of a nondegenerate conic and the vertex of a
//! line pair; [`classify`] is built around it.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2n::{FieldElement, FieldSpec};

fn same_field(xs: &[FieldElement]) -> Result<FieldSpec> {
    let field = xs[0].field();
    if xs.iter().all(|x| x.field() == field) {
        Ok(field)
    } else {
        Err(Error::FieldMismatch)
    }
}

/// Scales a triple so its leftmost nonzero entry is 1.
fn normalize(v: [FieldElement; 3]) -> Option<[FieldElement; 3]> {
    let lead = v.iter().find(|c| !c.is_zero())?;
    let s = lead.inv().expect("nonzero");
    Some(v.map(|c| c * s))
}

/// Position of a normalized triple in [`points`] order.
fn triple_index(v: &[FieldElement; 3]) -> u64 {
    let q = v[0].field().order();
    if v[0].is_one() {
        v[1].bits() * q + v[2].bits()
    } else if v[1].is_one() {
        q * q + v[2].bits()
    } else {
        q * q + q
    }
}

fn cross(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> [FieldElement; 3] {
    [
        a[1] * b[2] + a[2] * b[1],
        a[2] * b[0] + a[0] * b[2],
        a[0] * b[1] + a[1] * b[0],
    ]
}

fn dot(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> FieldElement {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn fmt_triple(v: &[FieldElement; 3], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}:{}:{}", v[0], v[1], v[2])
}

fn parse_triple(field: &FieldSpec, s: &str) -> Result<[FieldElement; 3]> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            found: parts.len(),
        });
    }
    Ok([
        field.parse_element(parts[0])?,
        field.parse_element(parts[1])?,
        field.parse_element(parts[2])?,
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProjectivePoint([FieldElement; 3]);

impl ProjectivePoint {
    pub fn new(x: FieldElement, y: FieldElement, z: FieldElement) -> Result<Self> {
        Self::from_coords([x, y, z])
    }

    pub fn from_coords(v: [FieldElement; 3]) -> Result<Self> {
        same_field(&v)?;
        normalize(v).map(ProjectivePoint).ok_or(Error::ZeroPoint)
    }

    pub fn from_bits(field: &FieldSpec, v: [u64; 3]) -> Result<Self> {
        Self::from_coords([
            field.element(v[0])?,
            field.element(v[1])?,
            field.element(v[2])?,
        ])
    }

    /// Parses `x:y:z` in hex.
    pub fn parse(field: &FieldSpec, s: &str) -> Result<Self> {
        Self::from_coords(parse_triple(field, s)?)
    }

    pub fn coords(&self) -> [FieldElement; 3] {
        self.0
    }

    pub fn field(&self) -> FieldSpec {
        self.0[0].field()
    }

    /// Index of this point in [`points`].
    pub fn index(&self) -> u64 {
        triple_index(&self.0)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_triple(&self.0, f)
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The line `l·x + m·y + n·z = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LineForm([FieldElement; 3]);

impl LineForm {
    pub fn new(l: FieldElement, m: FieldElement, n: FieldElement) -> Result<Self> {
        Self::from_coeffs([l, m, n])
    }

    pub fn from_coeffs(v: [FieldElement; 3]) -> Result<Self> {
        same_field(&v)?;
        normalize(v).map(LineForm).ok_or(Error::ZeroLine)
    }

    pub fn from_bits(field: &FieldSpec, v: [u64; 3]) -> Result<Self> {
        Self::from_coeffs([
            field.element(v[0])?,
            field.element(v[1])?,
            field.element(v[2])?,
        ])
    }

    pub fn parse(field: &FieldSpec, s: &str) -> Result<Self> {
        Self::from_coeffs(parse_triple(field, s)?)
    }

    /// The line joining two distinct points.
    pub fn through(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<Self> {
        Self::from_coeffs(cross(&p.0, &q.0))
    }

    pub fn coeffs(&self) -> [FieldElement; 3] {
        self.0
    }

    pub fn field(&self) -> FieldSpec {
        self.0[0].field()
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        dot(&self.0, &p.0).is_zero()
    }

    pub fn index(&self) -> u64 {
        triple_index(&self.0)
    }

    /// The `q + 1` points of the line, in ascending [`ProjectivePoint::index`].
    pub fn points(&self) -> Vec<ProjectivePoint> {
        let field = self.field();
        let lead = self
            .0
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero line");
        let others: Vec<usize> = (0..3).filter(|&i| i != lead).collect();
        // Kernel basis: e_j + c_j·e_lead for the two non-leading positions.
        let basis = |j: usize| {
            let mut v = [field.zero(); 3];
            v[j] = field.one();
            v[lead] = self.0[j];
            v
        };
        let a = basis(others[0]);
        let b = basis(others[1]);
        let mut pts: Vec<ProjectivePoint> = field
            .elements()
            .map(|t| [a[0] + t * b[0], a[1] + t * b[1], a[2] + t * b[2]])
            .chain(std::iter::once(b))
            .map(|v| ProjectivePoint::from_coords(v).expect("independent basis"))
            .collect();
        pts.sort_by_key(ProjectivePoint::index);
        pts
    }

    /// Product of two linear forms as a quadratic form.
    fn product(&self, other: &LineForm) -> [FieldElement; 6] {
        linear_product(&self.0, &other.0)
    }
}

impl fmt::Display for LineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_triple(&self.0, f)
    }
}

impl Serialize for LineForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Coefficients (xx, yy, zz, xy, xz, yz) of the product of two linear forms.
fn linear_product(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> [FieldElement; 6] {
    [
        a[0] * b[0],
        a[1] * b[1],
        a[2] * b[2],
        a[0] * b[1] + a[1] * b[0],
        a[0] * b[2] + a[2] * b[0],
        a[1] * b[2] + a[2] * b[1],
    ]
}

/// All `q² + q + 1` points: `(1:y:z)` for all `y, z`, then `(0:1:z)`, then
/// `(0:0:1)`.
pub fn points(field: &FieldSpec) -> impl Iterator<Item = ProjectivePoint> {
    let f = *field;
    let (zero, one) = (f.zero(), f.one());
    let affine = f
        .elements()
        .flat_map(move |y| f.elements().map(move |z| ProjectivePoint([one, y, z])));
    let at_infinity = f.elements().map(move |z| ProjectivePoint([zero, one, z]));
    affine
        .chain(at_infinity)
        .chain(std::iter::once(ProjectivePoint([zero, zero, one])))
}

pub fn enumerate_points(field: &FieldSpec) -> Vec<ProjectivePoint> {
    points(field).collect()
}

/// Number of points of PG(2, q).
pub fn plane_size(field: &FieldSpec) -> u64 {
    let q = field.order();
    q * q + q + 1
}

/// A nonzero ternary quadratic form, coefficients in the order
/// `a_xx, a_yy, a_zz, a_xy, a_xz, a_yz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Conic([FieldElement; 6]);

impl Conic {
    pub fn new(coeffs: [FieldElement; 6]) -> Result<Self> {
        same_field(&coeffs)?;
        if coeffs.iter().all(FieldElement::is_zero) {
            return Err(Error::ZeroConic);
        }
        Ok(Conic(coeffs))
    }

    pub fn from_bits(field: &FieldSpec, c: [u64; 6]) -> Result<Self> {
        let mut coeffs = [field.zero(); 6];
        for (dst, &b) in coeffs.iter_mut().zip(c.iter()) {
            *dst = field.element(b)?;
        }
        Self::new(coeffs)
    }

    /// Parses six comma-separated hex coefficients.
    pub fn parse(field: &FieldSpec, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 6 {
            return Err(Error::WrongArity {
                expected: 6,
                found: parts.len(),
            });
        }
        let mut coeffs = [field.zero(); 6];
        for (dst, p) in coeffs.iter_mut().zip(parts) {
            *dst = field.parse_element(p)?;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> [FieldElement; 6] {
        self.0
    }

    pub fn bits(&self) -> [u64; 6] {
        self.0.map(|c| c.bits())
    }

    pub fn field(&self) -> FieldSpec {
        self.0[0].field()
    }

    pub fn evaluate(&self, p: &ProjectivePoint) -> FieldElement {
        self.evaluate_coords(&p.0)
    }

    fn evaluate_coords(&self, v: &[FieldElement; 3]) -> FieldElement {
        let [xx, yy, zz, xy, xz, yz] = self.0;
        let [x, y, z] = *v;
        // x(xx·x + xy·y + xz·z) + y(yy·y + yz·z) + zz·z²
        x * (xx * x + xy * y + xz * z) + y * (yy * y + yz * z) + zz * z * z
    }

    pub fn has_cross_terms(&self) -> bool {
        !(self.0[3].is_zero() && self.0[4].is_zero() && self.0[5].is_zero())
    }

    /// The unique solution `(a_yz : a_xz : a_xy)` of the partials system, or
    /// `None` when all cross terms vanish and every point solves it.
    pub fn nucleus(&self) -> Option<ProjectivePoint> {
        let [_, _, _, xy, xz, yz] = self.0;
        ProjectivePoint::from_coords([yz, xz, xy]).ok()
    }

    /// Formal partial derivatives `(∂x, ∂y, ∂z)` at a point.
    pub fn partials(&self, p: &ProjectivePoint) -> [FieldElement; 3] {
        let [_, _, _, xy, xz, yz] = self.0;
        let [x, y, z] = p.0;
        [xy * y + xz * z, xy * x + yz * z, xz * x + yz * y]
    }

    /// Multiplies every coefficient by a nonzero scalar.
    pub fn scale(&self, s: FieldElement) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::ZeroConic);
        }
        same_field(&[self.0[0], s])?;
        Ok(Conic(self.0.map(|c| c * s)))
    }

    /// `Some(s)` when `other = s · self`.
    pub fn proportionality(&self, other: &Conic) -> Option<FieldElement> {
        proportionality(&self.0, &other.0)
    }

    /// Points with `evaluate = 0`, by full enumeration of the plane.
    pub fn point_set(&self) -> Vec<ProjectivePoint> {
        points(&self.field())
            .filter(|p| self.evaluate(p).is_zero())
            .collect()
    }

    /// Number of points on the conic, by full enumeration of the plane.
    pub fn point_count(&self) -> u64 {
        points(&self.field())
            .filter(|p| self.evaluate(p).is_zero())
            .count() as u64
    }

    /// Points of the conic where all three partials vanish.
    pub fn singular_points(&self) -> Vec<ProjectivePoint> {
        match self.nucleus() {
            Some(n) => {
                debug_assert!(self.partials(&n).iter().all(FieldElement::is_zero));
                if self.evaluate(&n).is_zero() {
                    vec![n]
                } else {
                    Vec::new()
                }
            }
            None => self.point_set(),
        }
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = self.0;
        write!(f, "{a},{b},{c},{d},{e},{g}")
    }
}

impl Serialize for Conic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn proportionality(a: &[FieldElement; 6], b: &[FieldElement; 6]) -> Option<FieldElement> {
    let k = a.iter().position(|c| !c.is_zero())?;
    let s = b[k] * a[k].inv().expect("nonzero");
    (!s.is_zero() && a.iter().zip(b).all(|(&x, &y)| x * s == y)).then_some(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VerdictKind {
    Nondegenerate,
    RealLinePair,
    RepeatedLine,
    ImaginaryLinePair,
}

impl VerdictKind {
    pub const ALL: [VerdictKind; 4] = [
        VerdictKind::Nondegenerate,
        VerdictKind::RealLinePair,
        VerdictKind::RepeatedLine,
        VerdictKind::ImaginaryLinePair,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            VerdictKind::Nondegenerate => "Nondegenerate",
            VerdictKind::RealLinePair => "RealLinePair",
            VerdictKind::RepeatedLine => "RepeatedLine",
            VerdictKind::ImaginaryLinePair => "ImaginaryLinePair",
        }
    }

    /// Expected number of points of PG(2, q) on a conic of this kind.
    pub fn expected_point_count(&self, q: u64) -> u64 {
        match self {
            VerdictKind::Nondegenerate | VerdictKind::RepeatedLine => q + 1,
            VerdictKind::RealLinePair => 2 * q + 1,
            VerdictKind::ImaginaryLinePair => 1,
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Nondegenerate,
    /// Two distinct lines over the base field, in ascending index order.
    RealLinePair(LineForm, LineForm),
    RepeatedLine(LineForm),
    /// Lines defined only over GF(q²); the plane sees just their vertex.
    ImaginaryLinePair(ProjectivePoint),
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::Nondegenerate => VerdictKind::Nondegenerate,
            Verdict::RealLinePair(..) => VerdictKind::RealLinePair,
            Verdict::RepeatedLine(_) => VerdictKind::RepeatedLine,
            Verdict::ImaginaryLinePair(_) => VerdictKind::ImaginaryLinePair,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        !matches!(self, Verdict::Nondegenerate)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassificationRecord {
    pub verdict: Verdict,
    pub point_count: u64,
}

impl ClassificationRecord {
    pub fn kind(&self) -> VerdictKind {
        self.verdict.kind()
    }

    pub fn lines(&self) -> Vec<LineForm> {
        match self.verdict {
            Verdict::RealLinePair(a, b) => vec![a, b],
            Verdict::RepeatedLine(l) => vec![l],
            _ => Vec::new(),
        }
    }

    pub fn vertex(&self) -> Option<ProjectivePoint> {
        match self.verdict {
            Verdict::ImaginaryLinePair(v) => Some(v),
            _ => None,
        }
    }
}

impl Serialize for ClassificationRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            verdict: VerdictKind,
            point_count: u64,
            #[serde(skip_serializing_if = "Vec::is_empty")]
            lines: Vec<LineForm>,
            #[serde(skip_serializing_if = "Option::is_none")]
            vertex: Option<ProjectivePoint>,
        }
        Repr {
            verdict: self.kind(),
            point_count: self.point_count,
            lines: self.lines(),
            vertex: self.vertex(),
        }
        .serialize(s)
    }
}

/// Classifies a conic as nondegenerate, a real line pair, a repeated line,
/// or a conjugate imaginary line pair.
///
/// Runs in `O(q)`: with `N` the nucleus and `L` a line missing `N`, the
/// conic restricted to the line `N ∨ P` (for `P` on `L`) reduces to
/// `s²·Q(N) + t²·Q(P)` because the polar form vanishes at `N`. The point
/// count follows from how many `P` on `L` lie on the conic.
pub fn classify(conic: &Conic) -> ClassificationRecord {
    let field = conic.field();
    let q = field.order();
    let Some(nucleus) = conic.nucleus() else {
        // No cross terms: the form is (√a·x + √b·y + √c·z)².
        let [xx, yy, zz, ..] = conic.coeffs();
        let line = LineForm::from_coeffs([xx.sqrt(), yy.sqrt(), zz.sqrt()])
            .expect("nonzero conic has a nonzero square coefficient");
        return ClassificationRecord {
            verdict: Verdict::RepeatedLine(line),
            point_count: q + 1,
        };
    };

    if !conic.evaluate(&nucleus).is_zero() {
        // Every line through the nucleus is tangent and meets the conic once.
        return ClassificationRecord {
            verdict: Verdict::Nondegenerate,
            point_count: q + 1,
        };
    }

    let lead = nucleus
        .0
        .iter()
        .position(|c| !c.is_zero())
        .expect("normalized");
    let mut coord_line = [field.zero(); 3];
    coord_line[lead] = field.one();
    let transversal = LineForm(coord_line);
    let hits: Vec<ProjectivePoint> = transversal
        .points()
        .into_iter()
        .filter(|p| conic.evaluate(p).is_zero())
        .collect();

    match hits.as_slice() {
        [] => ClassificationRecord {
            verdict: Verdict::ImaginaryLinePair(nucleus),
            point_count: 1,
        },
        [p1, p2] => {
            let mut a = LineForm::through(&nucleus, p1).expect("distinct points");
            let mut b = LineForm::through(&nucleus, p2).expect("distinct points");
            if b.index() < a.index() {
                std::mem::swap(&mut a, &mut b);
            }
            assert!(
                proportionality(&a.product(&b), &conic.0).is_some(),
                "line pair {a} · {b} does not reproduce conic {conic}"
            );
            ClassificationRecord {
                verdict: Verdict::RealLinePair(a, b),
                point_count: 2 * q + 1,
            }
        }
        // The polar form is nondegenerate on any line missing its radical,
        // so a singular conic meets such a line in 0 or 2 points.
        other => unreachable!("line pair meets a transversal in {} points", other.len()),
    }
}

/// An invertible 3×3 matrix acting on column vectors `(x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProjectiveTransform([[FieldElement; 3]; 3]);

impl ProjectiveTransform {
    pub fn new(rows: [[FieldElement; 3]; 3]) -> Result<Self> {
        same_field(&rows.concat())?;
        let t = ProjectiveTransform(rows);
        if t.determinant().is_zero() {
            return Err(Error::SingularTransform);
        }
        Ok(t)
    }

    pub fn identity(field: &FieldSpec) -> Self {
        let (o, l) = (field.zero(), field.one());
        ProjectiveTransform([[l, o, o], [o, l, o], [o, o, l]])
    }

    pub fn rows(&self) -> [[FieldElement; 3]; 3] {
        self.0
    }

    pub fn field(&self) -> FieldSpec {
        self.0[0][0].field()
    }

    pub fn determinant(&self) -> FieldElement {
        dot(&self.0[0], &cross(&self.0[1], &self.0[2]))
    }

    pub fn inverse(&self) -> Self {
        // Columns of the inverse are cross products of row pairs; signs
        // vanish in characteristic 2.
        let [r0, r1, r2] = self.0;
        let cols = [cross(&r1, &r2), cross(&r2, &r0), cross(&r0, &r1)];
        let d = self
            .determinant()
            .inv()
            .expect("invertible by construction");
        let mut m = [[self.field().zero(); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = cols[j][i] * d;
            }
        }
        ProjectiveTransform(m)
    }

    pub fn compose(&self, other: &Self) -> Self {
        let mut m = [[self.field().zero(); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..3).fold(self.field().zero(), |acc, k| {
                    acc + self.0[i][k] * other.0[k][j]
                });
            }
        }
        ProjectiveTransform(m)
    }

    pub fn apply(&self, p: &ProjectivePoint) -> ProjectivePoint {
        let v = self.0.map(|row| dot(&row, &p.0));
        ProjectivePoint::from_coords(v).expect("invertible map sends points to points")
    }
}

/// The conic `v ↦ Q(T·v)`: substitutes `(x, y, z) ← T(x, y, z)`.
pub fn apply_transform(conic: &Conic, t: &ProjectiveTransform) -> Result<Conic> {
    same_field(&[conic.0[0], t.0[0][0]])?;
    let field = conic.field();
    let [x, y, z] = t.0;
    let terms = [
        linear_product(&x, &x),
        linear_product(&y, &y),
        linear_product(&z, &z),
        linear_product(&x, &y),
        linear_product(&x, &z),
        linear_product(&y, &z),
    ];
    let mut out = [field.zero(); 6];
    for (c, term) in conic.0.iter().zip(terms.iter()) {
        for (o, &t) in out.iter_mut().zip(term.iter()) {
            *o = *o + *c * t;
        }
    }
    Conic::new(out)
}

/// Expresses the conic in the coordinates `v' = T·v`, i.e. `v' ↦ Q(T⁻¹·v')`.
pub fn change_coordinates(conic: &Conic, t: &ProjectiveTransform) -> Result<Conic> {
    apply_transform(conic, &t.inverse())
}
