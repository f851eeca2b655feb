//! The four parametrized plane curves as binary-form triples `(X : Y : Z)`,
//! plus the geometric toolkit used to analyze them: projection from a point,
//! multiplicity via degree drop, ramification profiles, differential-rank
//! checks, Hessian flex location, and line intersections.

use crate::gf::{Fe, FieldCtx, FieldError};
use crate::linalg;
use crate::polyrat::{BinForm, P1Point, Poly, PolyError, RatMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum CurveError {
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("polynomial error: {0}")]
    Poly(#[from] PolyError),
    #[error("{0} takes no gamma parameter")]
    GammaUnused(CurveLabel),
    #[error("{0} requires a gamma parameter")]
    GammaRequired(CurveLabel),
    #[error("gamma must lie in the degree-one subfield F_q")]
    GammaNotInSubfield,
    #[error("gamma must satisfy gamma ∈ F_q \\ {{0, ±1}}")]
    GammaForbiddenC3,
    #[error("gamma must satisfy gamma ∈ F_q \\ {{±1}} and gamma^((q-1)/2) = 1")]
    GammaForbiddenC4,
    #[error("degree q+1 > 6 violated: q = {0} is too small for this curve")]
    DegreeTooSmallC4(u64),
    #[error("projective point must have a nonzero coordinate")]
    ZeroPoint,
    #[error("the three forms must share one degree")]
    MixedDegrees,
    #[error("the three forms share a nonconstant common factor")]
    CommonFactor,
    #[error("point is not on the curve (projection degree does not drop)")]
    NotOnCurve,
    #[error("Hessian determinant vanishes identically in both charts")]
    DegenerateHessian,
    #[error("the parametrized curve lies inside the given line")]
    LineContainsCurve,
}

// ---------------------------------------------------------------------------
// Points of P^2
// ---------------------------------------------------------------------------

/// A point of the projective plane in canonical scaling (first nonzero
/// coordinate is 1), so equality is entry-wise.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct P2Point {
    pub x: Fe,
    pub y: Fe,
    pub z: Fe,
}

impl P2Point {
    pub fn new(ctx: &FieldCtx, x: Fe, y: Fe, z: Fe) -> Result<P2Point, CurveError> {
        ctx.check(x)?;
        ctx.check(y)?;
        ctx.check(z)?;
        let lead = [x, y, z].into_iter().find(|e| !e.is_zero());
        let Some(lead) = lead else {
            return Err(CurveError::ZeroPoint);
        };
        let s = ctx.inv(lead).expect("nonzero");
        Ok(P2Point {
            x: ctx.mul(x, s),
            y: ctx.mul(y, s),
            z: ctx.mul(z, s),
        })
    }

    /// All points of `P^2` over the degree-`ext` intermediate field, in a
    /// fixed order: `(0:0:1)`, then `(0:1:z)`, then `(1:y:z)`.
    pub fn all(ctx: &FieldCtx, ext: u32) -> Result<Vec<P2Point>, CurveError> {
        let elems = ctx.intermediate_elements(ext)?;
        let mut out = Vec::new();
        out.push(P2Point { x: ctx.zero(), y: ctx.zero(), z: ctx.one() });
        for &z in &elems {
            out.push(P2Point { x: ctx.zero(), y: ctx.one(), z });
        }
        for &y in &elems {
            for &z in &elems {
                out.push(P2Point { x: ctx.one(), y, z });
            }
        }
        Ok(out)
    }

    pub fn display(&self, ctx: &FieldCtx) -> String {
        format!(
            "({}:{}:{})",
            ctx.display(self.x),
            ctx.display(self.y),
            ctx.display(self.z)
        )
    }
}

// ---------------------------------------------------------------------------
// The curves
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CurveLabel {
    C1,
    C2,
    C3,
    C4,
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CurveLabel::C1 => "c1",
            CurveLabel::C2 => "c2",
            CurveLabel::C3 => "c3",
            CurveLabel::C4 => "c4",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for CurveLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<CurveLabel, String> {
        match s {
            "c1" | "C1" => Ok(CurveLabel::C1),
            "c2" | "C2" => Ok(CurveLabel::C2),
            "c3" | "C3" => Ok(CurveLabel::C3),
            "c4" | "C4" => Ok(CurveLabel::C4),
            other => Err(format!("unknown curve label {other:?} (expected c1..c4)")),
        }
    }
}

/// A parametrized plane curve: a map `P^1 -> P^2` given by three coprime
/// binary forms of one common degree.
#[derive(Clone, Debug)]
pub struct CurveMap {
    ctx: FieldCtx,
    label: Option<CurveLabel>,
    gamma: Option<Fe>,
    forms: [BinForm; 3],
}

impl CurveMap {
    /// One of the four standard families. Degree is `q` for c1/c2 and `q+1`
    /// for c3/c4; c3 and c4 take the parameter `gamma` from `F_q`, under the
    /// constraints stated in their theorems.
    pub fn family(
        label: CurveLabel,
        ctx: &FieldCtx,
        gamma: Option<Fe>,
    ) -> Result<CurveMap, CurveError> {
        let q = ctx.q();
        let one = ctx.one();
        let hm = ((q - 1) / 2) as usize; // (q-1)/2
        let hp = ((q + 1) / 2) as usize; // (q+1)/2
        let d = q as usize;

        let gamma = match label {
            CurveLabel::C1 | CurveLabel::C2 => {
                if gamma.is_some() {
                    return Err(CurveError::GammaUnused(label));
                }
                None
            }
            CurveLabel::C3 | CurveLabel::C4 => {
                let Some(g) = gamma else {
                    return Err(CurveError::GammaRequired(label));
                };
                ctx.check(g)?;
                if !ctx.in_subfield(g) {
                    return Err(CurveError::GammaNotInSubfield);
                }
                let minus_one = ctx.neg(one);
                match label {
                    CurveLabel::C3 => {
                        if g.is_zero() || g == one || g == minus_one {
                            return Err(CurveError::GammaForbiddenC3);
                        }
                    }
                    CurveLabel::C4 => {
                        if q + 1 <= 6 {
                            return Err(CurveError::DegreeTooSmallC4(q));
                        }
                        if g.is_zero()
                            || g == one
                            || g == minus_one
                            || !ctx.is_square_in_subfield(g)?
                        {
                            return Err(CurveError::GammaForbiddenC4);
                        }
                    }
                    _ => unreachable!(),
                }
                Some(g)
            }
        };

        let forms = match label {
            CurveLabel::C1 => [
                // s^{(q+1)/2} t^{(q-1)/2}
                BinForm::monomial(ctx, d, hp, one),
                // (s - t) t^{q-1}
                BinForm::linear(ctx, one, ctx.neg(one)).mul(&BinForm::monomial(
                    ctx,
                    d - 1,
                    0,
                    one,
                )),
                // s^q - s t^{q-1}
                BinForm::monomial(ctx, d, d, one).sub(&BinForm::monomial(ctx, d, 1, one))?,
            ],
            CurveLabel::C2 => [
                BinForm::monomial(ctx, d, hp, one),
                // (s - t)^{(q+1)/2} t^{(q-1)/2}
                BinForm::linear_pow(ctx, one, ctx.neg(one), hp).mul(&BinForm::monomial(
                    ctx,
                    hm,
                    0,
                    one,
                )),
                BinForm::monomial(ctx, d, d, one).sub(&BinForm::monomial(ctx, d, 1, one))?,
            ],
            CurveLabel::C3 => {
                let g = gamma.expect("checked above");
                [
                    // s^{(q+1)/2} t^{(q+1)/2}
                    BinForm::monomial(ctx, d + 1, hp, one),
                    // (s + t)^{q+1}
                    BinForm::linear_pow(ctx, one, one, d + 1),
                    // s^{q+1} + gamma t^{q+1}
                    BinForm::monomial(ctx, d + 1, d + 1, one)
                        .add(&BinForm::monomial(ctx, d + 1, 0, g))?,
                ]
            }
            CurveLabel::C4 => {
                let g = gamma.expect("checked above");
                [
                    BinForm::monomial(ctx, d + 1, hp, one),
                    // (s + t)^{(q+1)/2} (s + gamma t)^{(q+1)/2}
                    BinForm::linear_pow(ctx, one, one, hp)
                        .mul(&BinForm::linear_pow(ctx, one, g, hp)),
                    // s^{q+1} - gamma t^{q+1}
                    BinForm::monomial(ctx, d + 1, d + 1, one)
                        .sub(&BinForm::monomial(ctx, d + 1, 0, g))?,
                ]
            }
        };

        let map = CurveMap::from_forms(forms)?;
        Ok(CurveMap { label: Some(label), gamma, ..map })
    }

    /// Wrap an arbitrary coprime triple of equal-degree forms.
    pub fn from_forms(forms: [BinForm; 3]) -> Result<CurveMap, CurveError> {
        let ctx = forms[0].ctx().clone();
        let d = forms[0].degree();
        if forms.iter().any(|f| f.degree() != d) {
            return Err(CurveError::MixedDegrees);
        }
        if forms.iter().all(|f| f.is_zero()) {
            return Err(CurveError::ZeroPoint);
        }
        // gcd of the three forms must be constant.
        let nonzero: Vec<&BinForm> = forms.iter().filter(|f| !f.is_zero()).collect();
        let mut g = nonzero[0].clone();
        for f in &nonzero[1..] {
            g = g.gcd(f)?;
        }
        if g.degree() > 0 {
            return Err(CurveError::CommonFactor);
        }
        Ok(CurveMap { ctx, label: None, gamma: None, forms })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn label(&self) -> Option<CurveLabel> {
        self.label
    }

    pub fn gamma(&self) -> Option<Fe> {
        self.gamma
    }

    pub fn degree(&self) -> usize {
        self.forms[0].degree()
    }

    pub fn forms(&self) -> &[BinForm; 3] {
        &self.forms
    }

    pub fn evaluate(&self, p: &P1Point) -> Result<P2Point, CurveError> {
        P2Point::new(
            &self.ctx,
            self.forms[0].eval(p),
            self.forms[1].eval(p),
            self.forms[2].eval(p),
        )
    }

    /// All rational source points mapping to `r`, over the degree-`ext`
    /// intermediate field.
    pub fn preimages(&self, r: &P2Point, ext: u32) -> Result<Vec<P1Point>, CurveError> {
        let mut out = Vec::new();
        for p in P1Point::all(&self.ctx, ext)? {
            if self.evaluate(&p)? == *r {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Projection from `r`: pick the echelon basis `L1, L2` of the linear
    /// forms vanishing at `r` and return the reduced pair `(L1∘φ : L2∘φ)`.
    /// For coordinate points this is coordinate dropping.
    pub fn project(&self, r: &P2Point) -> Result<RatMap, CurveError> {
        let row = vec![r.x, r.y, r.z];
        let basis = linalg::nullspace(&self.ctx, &[row], 3);
        debug_assert_eq!(basis.len(), 2);
        let combine = |l: &[Fe]| -> BinForm {
            let mut acc = BinForm::zero(&self.ctx, self.degree());
            for (c, f) in l.iter().zip(&self.forms) {
                acc = acc.add(&f.scale(*c)).expect("equal degrees");
            }
            acc
        };
        let f = combine(&basis[0]);
        let g = combine(&basis[1]);
        Ok(RatMap::new(f, g)?.reduce())
    }

    /// Multiplicity of the curve at `r`, computed as the degree drop of the
    /// projection from `r`. The drop is exact over the algebraic closure
    /// (the cancelled factor's roots are precisely the parameters of `r`),
    /// so a zero drop means `r` is not on the curve.
    pub fn multiplicity_at(&self, r: &P2Point) -> Result<u32, CurveError> {
        let drop = self.degree() - self.project(r)?.degree();
        if drop == 0 {
            return Err(CurveError::NotOnCurve);
        }
        Ok(drop as u32)
    }

    /// True when `r` lies on the curve over the algebraic closure.
    pub fn contains(&self, r: &P2Point) -> Result<bool, CurveError> {
        Ok(self.project(r)?.degree() < self.degree())
    }

    /// True when the parametrization has degree one onto its image: some
    /// image point has projection degree exactly `d - 1`, confirmed by a
    /// singleton rational fiber through that point.
    pub fn is_birational(&self) -> Result<bool, CurveError> {
        let m = self.ctx.m();
        for p in P1Point::all(&self.ctx, m)? {
            let r = self.evaluate(&p)?;
            if self.project(&r)?.degree() == self.degree() - 1 {
                let fiber = self.preimages(&r, m)?;
                if fiber.len() == 1 {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// True iff the differential of the parametrization is injective at
    /// every point: in each affine chart, the three 2x2 minors of the matrix
    /// `(φ; dφ)` have constant gcd (no common root in any extension).
    pub fn diff_rank_check(&self) -> Result<bool, CurveError> {
        for chart in 0..2 {
            let polys: Vec<Poly> = self
                .forms
                .iter()
                .map(|f| if chart == 0 { f.dehom_t() } else { f.dehom_s() })
                .collect();
            let derivs: Vec<Poly> = polys.iter().map(|p| p.derivative()).collect();
            let minor = |i: usize, j: usize| -> Poly {
                polys[i].mul(&derivs[j]).sub(&polys[j].mul(&derivs[i]))
            };
            let minors = [minor(0, 1), minor(0, 2), minor(1, 2)];
            if minors.iter().all(|m| m.is_zero()) {
                return Ok(false);
            }
            let mut g: Option<Poly> = None;
            for m in &minors {
                if m.is_zero() {
                    continue;
                }
                g = Some(match g {
                    None => m.clone(),
                    Some(prev) => prev.gcd(m)?,
                });
            }
            let g = g.expect("not all zero");
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Flexes located by the parametric Hessian: in the chart `t = 1` the
    /// determinant of `(φ; φ'; φ'')` as a polynomial in `s`, and again in the
    /// chart `s = 1` to cover `(1:0)`. Returns deduplicated source points
    /// with their images, over the degree-`ext` intermediate field.
    pub fn hessian_flexes(
        &self,
        ext: u32,
    ) -> Result<Vec<(P1Point, P2Point)>, CurveError> {
        let mut sources: Vec<P1Point> = Vec::new();
        let mut degenerate = 0;
        for chart in 0..2 {
            let row0: Vec<Poly> = self
                .forms
                .iter()
                .map(|f| if chart == 0 { f.dehom_t() } else { f.dehom_s() })
                .collect();
            let row1: Vec<Poly> = row0.iter().map(|p| p.derivative()).collect();
            let row2: Vec<Poly> = row1.iter().map(|p| p.derivative()).collect();
            let det = det3(&row0, &row1, &row2);
            if det.is_zero() {
                degenerate += 1;
                continue;
            }
            for (root, _) in det.roots_in(ext)? {
                let p = if chart == 0 {
                    P1Point::affine(&self.ctx, root)
                } else {
                    P1Point::new(&self.ctx, self.ctx.one(), root).expect("nonzero")
                };
                if !sources.contains(&p) {
                    sources.push(p);
                }
            }
        }
        if degenerate == 2 {
            return Err(CurveError::DegenerateHessian);
        }
        sources.sort();
        sources
            .into_iter()
            .map(|p| Ok((p, self.evaluate(&p)?)))
            .collect()
    }

    /// Intersection of the curve with the line `l0 X + l1 Y + l2 Z = 0`:
    /// source points and multiplicities, i.e. the roots of the degree-`d`
    /// form `L∘φ` over the degree-`ext` intermediate field.
    pub fn line_meet(
        &self,
        l: &[Fe; 3],
        ext: u32,
    ) -> Result<Vec<(P1Point, u32)>, CurveError> {
        let mut acc = BinForm::zero(&self.ctx, self.degree());
        for (c, f) in l.iter().zip(&self.forms) {
            acc = acc.add(&f.scale(*c)).expect("equal degrees");
        }
        if acc.is_zero() {
            return Err(CurveError::LineContainsCurve);
        }
        Ok(acc.roots(ext)?)
    }
}

fn det3(r0: &[Poly], r1: &[Poly], r2: &[Poly]) -> Poly {
    let m2 = |a: &Poly, b: &Poly, c: &Poly, d: &Poly| a.mul(d).sub(&b.mul(c));
    r0[0]
        .mul(&m2(&r1[1], &r1[2], &r2[1], &r2[2]))
        .sub(&r0[1].mul(&m2(&r1[0], &r1[2], &r2[0], &r2[2])))
        .add(&r0[2].mul(&m2(&r1[0], &r1[1], &r2[0], &r2[1])))
}

/// All points of `P^1` over the degree-`ext` intermediate field where the
/// reduced map ramifies (vanishing order at least 2), with their indices.
pub fn ramification_profile(
    f: &RatMap,
    ext: u32,
) -> Result<Vec<(P1Point, u32)>, CurveError> {
    let mut out = Vec::new();
    for p in P1Point::all(f.ctx(), ext)? {
        let e = f.vanishing_order(&p)?;
        if e >= 2 {
            out.push((p, e));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FieldCtx {
        FieldCtx::new(5, 1, 1).unwrap()
    }

    fn curve(label: CurveLabel, ctx: &FieldCtx, gamma: Option<i64>) -> CurveMap {
        CurveMap::family(label, ctx, gamma.map(|g| ctx.from_int(g))).unwrap()
    }

    #[test]
    fn c1_forms_at_q5() {
        let ctx = f5();
        let c = curve(CurveLabel::C1, &ctx, None);
        assert_eq!(c.degree(), 5);
        let one = ctx.one();
        // X = s^3 t^2
        assert_eq!(c.forms()[0], BinForm::monomial(&ctx, 5, 3, one));
        // Y = (s - t) t^4 = s t^4 - t^5
        let y = BinForm::monomial(&ctx, 5, 1, one)
            .sub(&BinForm::monomial(&ctx, 5, 0, one))
            .unwrap();
        assert_eq!(c.forms()[1], y);
        // Z = s^5 - s t^4
        let z = BinForm::monomial(&ctx, 5, 5, one)
            .sub(&BinForm::monomial(&ctx, 5, 1, one))
            .unwrap();
        assert_eq!(c.forms()[2], z);
    }

    #[test]
    fn gamma_constraints() {
        let ctx = f5();
        let err = CurveMap::family(CurveLabel::C3, &ctx, Some(ctx.one())).unwrap_err();
        assert_eq!(err, CurveError::GammaForbiddenC3);
        let err = CurveMap::family(CurveLabel::C3, &ctx, None).unwrap_err();
        assert_eq!(err, CurveError::GammaRequired(CurveLabel::C3));
        let err = CurveMap::family(CurveLabel::C1, &ctx, Some(ctx.one())).unwrap_err();
        assert_eq!(err, CurveError::GammaUnused(CurveLabel::C1));
        // q = 5 is too small for c4 (degree q+1 > 6 required).
        let err =
            CurveMap::family(CurveLabel::C4, &ctx, Some(ctx.from_int(4))).unwrap_err();
        assert_eq!(err, CurveError::DegreeTooSmallC4(5));
        // 3 is a non-square in F_7.
        let ctx7 = FieldCtx::new(7, 1, 1).unwrap();
        let err =
            CurveMap::family(CurveLabel::C4, &ctx7, Some(ctx7.from_int(3))).unwrap_err();
        assert_eq!(err, CurveError::GammaForbiddenC4);
        // 2 is a square in F_7.
        assert!(CurveMap::family(CurveLabel::C4, &ctx7, Some(ctx7.from_int(2))).is_ok());
    }

    #[test]
    fn c1_special_values() {
        let ctx = f5();
        let c = curve(CurveLabel::C1, &ctx, None);
        let p1 = P2Point::new(&ctx, ctx.zero(), ctx.one(), ctx.zero()).unwrap();
        let p2 = P2Point::new(&ctx, ctx.one(), ctx.zero(), ctx.zero()).unwrap();
        let q = P2Point::new(&ctx, ctx.zero(), ctx.zero(), ctx.one()).unwrap();
        assert_eq!(c.evaluate(&P1Point::affine(&ctx, ctx.zero())).unwrap(), p1);
        assert_eq!(c.evaluate(&P1Point::infinity(&ctx)).unwrap(), q);
        assert_eq!(c.evaluate(&P1Point::affine(&ctx, ctx.one())).unwrap(), p2);
        // φ₁(1:-1) = (1:2:0)
        let img = c
            .evaluate(&P1Point::new(&ctx, ctx.one(), ctx.from_int(-1)).unwrap())
            .unwrap();
        assert_eq!(
            img,
            P2Point::new(&ctx, ctx.one(), ctx.from_int(2), ctx.zero()).unwrap()
        );
    }

    #[test]
    fn projection_from_coordinate_points() {
        let ctx = f5();
        let c = curve(CurveLabel::C1, &ctx, None);
        let one = ctx.one();
        // From (0:1:0): (X : Z), reduced to (s^2 t^2 : s^4 - t^4), degree 4.
        let p1 = P2Point::new(&ctx, ctx.zero(), one, ctx.zero()).unwrap();
        let proj = c.project(&p1).unwrap();
        assert_eq!(proj.degree(), 4);
        let expect = RatMap::new(
            BinForm::monomial(&ctx, 4, 2, one),
            BinForm::monomial(&ctx, 4, 4, one)
                .sub(&BinForm::monomial(&ctx, 4, 0, one))
                .unwrap(),
        )
        .unwrap();
        assert!(proj.eq_proj(&expect));
        // From (0:0:1): (X : Y), reduced to (s^3 : (s-t) t^2), degree 3.
        let q = P2Point::new(&ctx, ctx.zero(), ctx.zero(), one).unwrap();
        let projq = c.project(&q).unwrap();
        assert_eq!(projq.degree(), 3);
        // From (1:0:0): degree 4.
        let p2 = P2Point::new(&ctx, one, ctx.zero(), ctx.zero()).unwrap();
        assert_eq!(c.project(&p2).unwrap().degree(), 4);
    }

    #[test]
    fn c2_projection_from_q() {
        let ctx = f5();
        let c = curve(CurveLabel::C2, &ctx, None);
        let one = ctx.one();
        let q = P2Point::new(&ctx, ctx.zero(), ctx.zero(), one).unwrap();
        let proj = c.project(&q).unwrap();
        assert_eq!(proj.degree(), 3);
        let expect = RatMap::new(
            BinForm::monomial(&ctx, 3, 3, one),
            BinForm::linear_pow(&ctx, one, ctx.neg(one), 3),
        )
        .unwrap();
        assert!(proj.eq_proj(&expect));
    }

    #[test]
    fn multiplicities() {
        let ctx = f5();
        let c = curve(CurveLabel::C1, &ctx, None);
        let q = P2Point::new(&ctx, ctx.zero(), ctx.zero(), ctx.one()).unwrap();
        assert_eq!(c.multiplicity_at(&q).unwrap(), 2); // (q-1)/2
        let p1 = P2Point::new(&ctx, ctx.zero(), ctx.one(), ctx.zero()).unwrap();
        assert_eq!(c.multiplicity_at(&p1).unwrap(), 1); // smooth
        // A generic off-curve point.
        let off = P2Point::new(&ctx, ctx.one(), ctx.one(), ctx.from_int(3)).unwrap();
        if !c.contains(&off).unwrap() {
            assert_eq!(c.multiplicity_at(&off).unwrap_err(), CurveError::NotOnCurve);
        }
        let c2 = curve(CurveLabel::C2, &ctx, None);
        assert_eq!(c2.multiplicity_at(&q).unwrap(), 2);
    }

    #[test]
    fn degree_drop_partition() {
        // For every point of P^2(F_5): on the curve iff the projection
        // degree drops, and drop + projection degree = curve degree.
        let ctx = f5();
        let c = curve(CurveLabel::C1, &ctx, None);
        let mut on_curve = 0;
        for r in P2Point::all(&ctx, 1).unwrap() {
            let deg = c.project(&r).unwrap().degree();
            assert!(deg <= c.degree());
            if deg < c.degree() {
                on_curve += 1;
                assert_eq!(
                    c.multiplicity_at(&r).unwrap() as usize + deg,
                    c.degree()
                );
            }
        }
        // Every F_5-rational image point is among them.
        for p in P1Point::all(&ctx, 1).unwrap() {
            assert!(c.contains(&c.evaluate(&p).unwrap()).unwrap());
        }
        assert!(on_curve >= 2);
    }

    #[test]
    fn birationality() {
        let ctx = f5();
        assert!(curve(CurveLabel::C1, &ctx, None).is_birational().unwrap());
        assert!(curve(CurveLabel::C2, &ctx, None).is_birational().unwrap());
        assert!(curve(CurveLabel::C3, &ctx, Some(2)).is_birational().unwrap());
        // The 2:1 degenerate map (s^4 : s^2 t^2 : t^4).
        let one = ctx.one();
        let sq = CurveMap::from_forms([
            BinForm::monomial(&ctx, 4, 4, one),
            BinForm::monomial(&ctx, 4, 2, one),
            BinForm::monomial(&ctx, 4, 0, one),
        ])
        .unwrap();
        assert!(!sq.is_birational().unwrap());
        assert!(!sq.diff_rank_check().unwrap());
    }

    #[test]
    fn ramification_of_c1_projection_from_q() {
        let ctx = FieldCtx::new(5, 1, 2).unwrap();
        let c = curve(CurveLabel::C1, &ctx, None);
        let q = P2Point::new(&ctx, ctx.zero(), ctx.zero(), ctx.one()).unwrap();
        let proj = c.project(&q).unwrap();
        let prof = ramification_profile(&proj, 2).unwrap();
        let mut expected = vec![
            (P1Point::affine(&ctx, ctx.zero()), 3),
            (P1Point::infinity(&ctx), 2),
            (P1Point::new(&ctx, ctx.one(), ctx.from_int(-1)).unwrap(), 2),
        ];
        expected.sort();
        let mut got = prof;
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn ramification_of_c2_projection_from_q() {
        let ctx = FieldCtx::new(5, 1, 2).unwrap();
        let c = curve(CurveLabel::C2, &ctx, None);
        let q = P2Point::new(&ctx, ctx.zero(), ctx.zero(), ctx.one()).unwrap();
        let proj = c.project(&q).unwrap();
        let mut prof = ramification_profile(&proj, 2).unwrap();
        prof.sort();
        let mut expected = vec![
            (P1Point::affine(&ctx, ctx.zero()), 3),
            (P1Point::affine(&ctx, ctx.one()), 3),
        ];
        expected.sort();
        assert_eq!(prof, expected);
    }

    #[test]
    fn identity_map_has_no_ramification() {
        let ctx = f5();
        let id = RatMap::identity(&ctx);
        assert!(ramification_profile(&id, 1).unwrap().is_empty());
    }

    #[test]
    fn diff_rank_for_c3() {
        let ctx = f5();
        assert!(curve(CurveLabel::C3, &ctx, Some(2)).diff_rank_check().unwrap());
        let ctx7 = FieldCtx::new(7, 1, 1).unwrap();
        assert!(curve(CurveLabel::C3, &ctx7, Some(3)).diff_rank_check().unwrap());
    }

    #[test]
    fn hessian_flexes_of_c3() {
        let ctx = f5();
        for (gamma, expect_affine) in [(2i64, vec![0i64, 4, 2]), (3, vec![0, 4, 3])] {
            let c = curve(CurveLabel::C3, &ctx, Some(gamma));
            let flexes = c.hessian_flexes(1).unwrap();
            let mut expected: Vec<P1Point> = expect_affine
                .iter()
                .map(|&v| P1Point::affine(&ctx, ctx.from_int(v)))
                .collect();
            expected.push(P1Point::infinity(&ctx));
            expected.sort();
            let sources: Vec<P1Point> = flexes.iter().map(|(p, _)| *p).collect();
            assert_eq!(sources, expected);
        }
        let ctx7 = FieldCtx::new(7, 1, 1).unwrap();
        let c = curve(CurveLabel::C3, &ctx7, Some(3));
        let sources: Vec<P1Point> =
            c.hessian_flexes(1).unwrap().iter().map(|(p, _)| *p).collect();
        let mut expected: Vec<P1Point> = [0i64, 6, 3]
            .iter()
            .map(|&v| P1Point::affine(&ctx7, ctx7.from_int(v)))
            .collect();
        expected.push(P1Point::infinity(&ctx7));
        expected.sort();
        assert_eq!(sources, expected);
    }

    #[test]
    fn line_meets() {
        let ctx = f5();
        let c = curve(CurveLabel::C1, &ctx, None);
        // The line X = 0 meets C_1 at the sources (0:1) (mult 3) and (1:0)
        // (mult 2) only.
        let meet = c.line_meet(&[ctx.one(), ctx.zero(), ctx.zero()], 1).unwrap();
        let mut meet = meet;
        meet.sort();
        let mut expected = vec![
            (P1Point::affine(&ctx, ctx.zero()), 3),
            (P1Point::infinity(&ctx), 2),
        ];
        expected.sort();
        assert_eq!(meet, expected);
        // Multiplicities over F_25 sum to deg for lines through two rational
        // curve points.
        let a = c.evaluate(&P1Point::affine(&ctx, ctx.from_int(2))).unwrap();
        let b = c.evaluate(&P1Point::affine(&ctx, ctx.from_int(3))).unwrap();
        let line = line_through(&ctx, &a, &b);
        let ctx2 = FieldCtx::new(5, 1, 2).unwrap();
        let c2 = curve(CurveLabel::C1, &ctx2, None);
        let line2 = [
            ctx2.embed_subfield(line[0]).unwrap(),
            ctx2.embed_subfield(line[1]).unwrap(),
            ctx2.embed_subfield(line[2]).unwrap(),
        ];
        let total: u32 = c2.line_meet(&line2, 2).unwrap().iter().map(|(_, e)| e).sum();
        assert_eq!(total as usize, c2.degree());
    }

    fn line_through(ctx: &FieldCtx, a: &P2Point, b: &P2Point) -> [Fe; 3] {
        // cross product of the coordinate vectors
        [
            ctx.sub(ctx.mul(a.y, b.z), ctx.mul(a.z, b.y)),
            ctx.sub(ctx.mul(a.z, b.x), ctx.mul(a.x, b.z)),
            ctx.sub(ctx.mul(a.x, b.y), ctx.mul(a.y, b.x)),
        ]
    }

    #[test]
    fn p2_point_count() {
        let ctx = f5();
        assert_eq!(P2Point::all(&ctx, 1).unwrap().len(), 31); // 5^2 + 5 + 1
    }
}
