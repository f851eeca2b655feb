//! Univariate polynomials, homogeneous binary forms, and rational maps
//! `P^1 -> P^1` represented as reduced pairs of binary forms.
//!
//! Rational functions are kept as pairs of forms rather than as
//! numerator/denominator univariates so that points at infinity need no
//! special casing: `(1:0)` is an ordinary point of every scan.

use crate::gf::{Fe, FieldCtx, FieldError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PolyError {
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero inputs is undefined")]
    BothZero,
    #[error("binary forms have mismatched degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("rational map must be reduced first")]
    NotReduced,
    #[error("homogeneous point must have a nonzero coordinate")]
    ZeroPoint,
    #[error("map degree {0} too small for this operation")]
    DegreeTooSmall(usize),
}

// ---------------------------------------------------------------------------
// Points of P^1
// ---------------------------------------------------------------------------

/// A point of the projective line, stored in canonical scaling: the first
/// nonzero coordinate is 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct P1Point {
    pub x: Fe,
    pub y: Fe,
}

impl P1Point {
    pub fn new(ctx: &FieldCtx, x: Fe, y: Fe) -> Result<P1Point, PolyError> {
        ctx.check(x)?;
        ctx.check(y)?;
        if !x.is_zero() {
            let s = ctx.inv(x)?;
            Ok(P1Point { x: ctx.one(), y: ctx.mul(y, s) })
        } else if !y.is_zero() {
            Ok(P1Point { x: ctx.zero(), y: ctx.one() })
        } else {
            Err(PolyError::ZeroPoint)
        }
    }

    /// The affine point `(x : 1)`.
    pub fn affine(ctx: &FieldCtx, x: Fe) -> P1Point {
        P1Point::new(ctx, x, ctx.one()).expect("affine point is nonzero")
    }

    /// The point at infinity `(1 : 0)`.
    pub fn infinity(ctx: &FieldCtx) -> P1Point {
        P1Point { x: ctx.one(), y: ctx.zero() }
    }

    /// `x/y` when the point is affine.
    pub fn affine_value(&self, ctx: &FieldCtx) -> Option<Fe> {
        if self.y.is_zero() {
            None
        } else {
            Some(ctx.div(self.x, self.y).expect("y nonzero"))
        }
    }

    /// All points of `P^1` over the elements of `F_{q^e}` inside the context,
    /// in a fixed order: `(0:1)` first, then `(1:y)` by ascending `y`.
    pub fn all(ctx: &FieldCtx, ext: u32) -> Result<Vec<P1Point>, PolyError> {
        let elems = ctx.intermediate_elements(ext)?;
        let mut out = Vec::with_capacity(elems.len() + 1);
        out.push(P1Point { x: ctx.zero(), y: ctx.one() });
        for y in elems {
            out.push(P1Point { x: ctx.one(), y });
        }
        Ok(out)
    }

    pub fn display(&self, ctx: &FieldCtx) -> String {
        format!("({}:{})", ctx.display(self.x), ctx.display(self.y))
    }
}

// ---------------------------------------------------------------------------
// Univariate polynomials
// ---------------------------------------------------------------------------

/// Dense univariate polynomial; the zero polynomial has an empty coefficient
/// vector, otherwise the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    ctx: FieldCtx,
    c: Vec<Fe>,
}

impl Poly {
    pub fn from_coeffs(ctx: &FieldCtx, coeffs: Vec<Fe>) -> Poly {
        let mut p = Poly { ctx: ctx.clone(), c: coeffs };
        p.trim();
        p
    }

    pub fn zero(ctx: &FieldCtx) -> Poly {
        Poly { ctx: ctx.clone(), c: Vec::new() }
    }

    pub fn constant(ctx: &FieldCtx, a: Fe) -> Poly {
        Poly::from_coeffs(ctx, vec![a])
    }

    pub fn one(ctx: &FieldCtx) -> Poly {
        Poly::constant(ctx, ctx.one())
    }

    /// The monomial `a x^k`.
    pub fn monomial(ctx: &FieldCtx, a: Fe, k: usize) -> Poly {
        let mut c = vec![ctx.zero(); k + 1];
        c[k] = a;
        Poly::from_coeffs(ctx, c)
    }

    pub fn x(ctx: &FieldCtx) -> Poly {
        Poly::monomial(ctx, ctx.one(), 1)
    }

    fn trim(&mut self) {
        while self.c.last().map_or(false, |c| c.is_zero()) {
            self.c.pop();
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Fe {
        self.c.get(k).copied().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.c
    }

    pub fn leading(&self) -> Option<Fe> {
        self.c.last().copied()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.ctx.add(self.coeff(i), other.coeff(i)));
        }
        Poly::from_coeffs(&self.ctx, out)
    }

    pub fn neg(&self) -> Poly {
        Poly::from_coeffs(
            &self.ctx,
            self.c.iter().map(|&a| self.ctx.neg(a)).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut out = vec![self.ctx.zero(); self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                out[i + j] = self.ctx.add(out[i + j], self.ctx.mul(a, b));
            }
        }
        Poly::from_coeffs(&self.ctx, out)
    }

    pub fn scale(&self, a: Fe) -> Poly {
        Poly::from_coeffs(
            &self.ctx,
            self.c.iter().map(|&c| self.ctx.mul(c, a)).collect(),
        )
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut out = Poly::one(&self.ctx);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, x: Fe) -> Fe {
        let mut acc = self.ctx.zero();
        for &c in self.c.iter().rev() {
            acc = self.ctx.add(self.ctx.mul(acc, x), c);
        }
        acc
    }

    /// `self(other(x))`, by Horner on the coefficients.
    pub fn compose(&self, other: &Poly) -> Poly {
        let mut acc = Poly::zero(&self.ctx);
        for &c in self.c.iter().rev() {
            acc = acc.mul(other).add(&Poly::constant(&self.ctx, c));
        }
        acc
    }

    /// Term-wise derivative; exponents reduce mod p, so `d/dx x^p = 0`.
    pub fn derivative(&self) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero(&self.ctx);
        }
        let mut out = Vec::with_capacity(self.c.len() - 1);
        for (i, &a) in self.c.iter().enumerate().skip(1) {
            out.push(self.ctx.mul(a, self.ctx.from_int(i as i64)));
        }
        Poly::from_coeffs(&self.ctx, out)
    }

    /// Quotient and remainder; `other` must be nonzero.
    pub fn divrem(&self, other: &Poly) -> Result<(Poly, Poly), PolyError> {
        if other.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let d = other.degree().unwrap();
        let linv = self.ctx.inv(other.leading().unwrap())?;
        let mut rem = self.c.clone();
        let mut quot = vec![self.ctx.zero(); self.c.len().saturating_sub(d)];
        while rem.len() > d {
            let lead = *rem.last().unwrap();
            let k = rem.len() - 1 - d;
            if !lead.is_zero() {
                let f = self.ctx.mul(lead, linv);
                quot[k] = f;
                for i in 0..=d {
                    let s = self.ctx.mul(f, other.coeff(i));
                    rem[k + i] = self.ctx.sub(rem[k + i], s);
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((
            Poly::from_coeffs(&self.ctx, quot),
            Poly::from_coeffs(&self.ctx, rem),
        ))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        let linv = self.ctx.inv(a.leading().unwrap())?;
        Ok(a.scale(linv))
    }

    /// Roots in `F_{q^ext}` with multiplicities, by exhaustive evaluation and
    /// repeated exact division. Valuation-based multiplicity detects wild
    /// behaviour that derivative tests would miss in characteristic p.
    pub fn roots_in(&self, ext: u32) -> Result<Vec<(Fe, u32)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        for r in self.ctx.intermediate_elements(ext)? {
            if !self.eval(r).is_zero() {
                continue;
            }
            let lin = Poly::from_coeffs(&self.ctx, vec![self.ctx.neg(r), self.ctx.one()]);
            let mut mult = 0u32;
            let mut cur = self.clone();
            loop {
                let (q, rem) = cur.divrem(&lin)?;
                if rem.is_zero() {
                    mult += 1;
                    cur = q;
                } else {
                    break;
                }
            }
            out.push((r, mult));
        }
        Ok(out)
    }

    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| match i {
                0 => self.ctx.display(c),
                1 => format!("{}*{var}", self.ctx.display(c)),
                _ => format!("{}*{var}^{i}", self.ctx.display(c)),
            })
            .collect();
        terms.join(" + ")
    }
}

// ---------------------------------------------------------------------------
// Homogeneous binary forms
// ---------------------------------------------------------------------------

/// A homogeneous binary form of formal degree `deg` in `(s, t)`; `c[i]` is the
/// coefficient of `s^i t^(deg-i)`. The zero form is allowed (all zero).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinForm {
    ctx: FieldCtx,
    deg: usize,
    c: Vec<Fe>,
}

impl BinForm {
    pub fn from_coeffs(ctx: &FieldCtx, deg: usize, coeffs: Vec<Fe>) -> BinForm {
        assert_eq!(coeffs.len(), deg + 1);
        BinForm { ctx: ctx.clone(), deg, c: coeffs }
    }

    pub fn zero(ctx: &FieldCtx, deg: usize) -> BinForm {
        BinForm { ctx: ctx.clone(), deg, c: vec![ctx.zero(); deg + 1] }
    }

    /// `a * s^i t^(deg-i)`.
    pub fn monomial(ctx: &FieldCtx, deg: usize, i: usize, a: Fe) -> BinForm {
        let mut f = BinForm::zero(ctx, deg);
        f.c[i] = a;
        f
    }

    /// The linear form `a s + b t`.
    pub fn linear(ctx: &FieldCtx, a: Fe, b: Fe) -> BinForm {
        BinForm::from_coeffs(ctx, 1, vec![b, a])
    }

    /// `(a s + b t)^e`.
    pub fn linear_pow(ctx: &FieldCtx, a: Fe, b: Fe, e: usize) -> BinForm {
        let mut out = BinForm::from_coeffs(ctx, 0, vec![ctx.one()]);
        let lin = BinForm::linear(ctx, a, b);
        for _ in 0..e {
            out = out.mul(&lin);
        }
        out
    }

    /// The linear form vanishing exactly at `p`: `y_p s - x_p t`.
    pub fn vanishing_line(ctx: &FieldCtx, p: &P1Point) -> BinForm {
        BinForm::linear(ctx, p.y, ctx.neg(p.x))
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.c[i]
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &BinForm) -> Result<BinForm, PolyError> {
        if self.deg != other.deg {
            return Err(PolyError::DegreeMismatch(self.deg, other.deg));
        }
        Ok(BinForm {
            ctx: self.ctx.clone(),
            deg: self.deg,
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(&a, &b)| self.ctx.add(a, b))
                .collect(),
        })
    }

    pub fn neg(&self) -> BinForm {
        BinForm {
            ctx: self.ctx.clone(),
            deg: self.deg,
            c: self.c.iter().map(|&a| self.ctx.neg(a)).collect(),
        }
    }

    pub fn sub(&self, other: &BinForm) -> Result<BinForm, PolyError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, a: Fe) -> BinForm {
        BinForm {
            ctx: self.ctx.clone(),
            deg: self.deg,
            c: self.c.iter().map(|&c| self.ctx.mul(c, a)).collect(),
        }
    }

    pub fn mul(&self, other: &BinForm) -> BinForm {
        let deg = self.deg + other.deg;
        let mut out = vec![self.ctx.zero(); deg + 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                out[i + j] = self.ctx.add(out[i + j], self.ctx.mul(a, b));
            }
        }
        BinForm { ctx: self.ctx.clone(), deg, c: out }
    }

    /// `Σ c_i x^i y^(deg-i)` at `p = (x : y)`.
    pub fn eval(&self, p: &P1Point) -> Fe {
        let mut acc = self.ctx.zero();
        let mut xpow = self.ctx.one();
        let mut xs = Vec::with_capacity(self.deg + 1);
        for _ in 0..=self.deg {
            xs.push(xpow);
            xpow = self.ctx.mul(xpow, p.x);
        }
        let mut ypow = self.ctx.one();
        for i in (0..=self.deg).rev() {
            acc = self.ctx.add(acc, self.ctx.mul(self.c[i], self.ctx.mul(xs[i], ypow)));
            ypow = self.ctx.mul(ypow, p.y);
        }
        acc
    }

    /// Multiplicity of `s` (the point `(0:1)`) dividing the form.
    pub fn s_valuation(&self) -> usize {
        self.c.iter().position(|c| !c.is_zero()).unwrap_or(self.deg + 1)
    }

    /// Multiplicity of `t` (the point `(1:0)`) dividing the form.
    pub fn t_valuation(&self) -> usize {
        match self.c.iter().rposition(|c| !c.is_zero()) {
            Some(top) => self.deg - top,
            None => self.deg + 1,
        }
    }

    /// Dehomogenization `F(x, 1)`.
    pub fn dehom_t(&self) -> Poly {
        Poly::from_coeffs(&self.ctx, self.c.clone())
    }

    /// Dehomogenization `F(1, x)`.
    pub fn dehom_s(&self) -> Poly {
        Poly::from_coeffs(&self.ctx, self.c.iter().rev().copied().collect())
    }

    /// Homogenize a univariate polynomial to the given degree (t-padding).
    pub fn homogenize(p: &Poly, deg: usize) -> BinForm {
        let ctx = p.ctx().clone();
        let mut c = vec![ctx.zero(); deg + 1];
        for (i, &a) in p.coeffs().iter().enumerate() {
            c[i] = a;
        }
        BinForm { ctx, deg, c }
    }

    /// Exact division by the linear form vanishing at `p`; `None` when `p` is
    /// not a root.
    pub fn divide_vanishing_line(&self, p: &P1Point) -> Option<BinForm> {
        if self.deg == 0 {
            return None;
        }
        let lin = BinForm::vanishing_line(&self.ctx, p);
        // Synthetic division: lin = b s + a t with b = p.y, a = -p.x.
        let b = lin.c[1];
        let a = lin.c[0];
        let mut out = vec![self.ctx.zero(); self.deg];
        if !b.is_zero() {
            // Divide treating s as the main variable (coefficients from top).
            let binv = self.ctx.inv(b).ok()?;
            let mut carry = self.ctx.zero();
            for i in (0..self.deg).rev() {
                let cur = self.ctx.sub(self.c[i + 1], carry);
                let qc = self.ctx.mul(cur, binv);
                out[i] = qc;
                carry = self.ctx.mul(qc, a);
            }
            // Remainder check: constant term.
            if self.ctx.sub(self.c[0], carry) != self.ctx.zero() {
                return None;
            }
        } else {
            // b == 0 means p = (1:0), so lin = a t with a = -x_p. Then
            // F = (a t) G forces the top s-coefficient to vanish and
            // g_i = c_i / a.
            let ainv = self.ctx.inv(a).ok()?;
            if !self.c[self.deg].is_zero() {
                return None;
            }
            for i in 0..self.deg {
                out[i] = self.ctx.mul(self.c[i], ainv);
            }
        }
        let cand = BinForm { ctx: self.ctx.clone(), deg: self.deg - 1, c: out };
        if cand.mul(&lin) == *self {
            Some(cand)
        } else {
            None
        }
    }

    /// Vanishing order of the form at a point (0 when not a root).
    pub fn order_at(&self, p: &P1Point) -> u32 {
        let mut mult = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.divide_vanishing_line(p) {
            mult += 1;
            cur = next;
        }
        mult
    }

    /// Monic (leading s-coefficient 1) gcd of two binary forms, via the two
    /// dehomogenizations with s/t power bookkeeping.
    pub fn gcd(&self, other: &BinForm) -> Result<BinForm, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        if self.is_zero() {
            return Ok(other.monic());
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        let t_val = self.t_valuation().min(other.t_valuation());
        let f = self.dehom_t();
        let g = other.dehom_t();
        let core = f.gcd(&g)?;
        let core_deg = core.degree().unwrap();
        let mut out = BinForm::homogenize(&core, core_deg);
        for _ in 0..t_val {
            out = out.mul(&BinForm::monomial(&self.ctx, 1, 0, self.ctx.one()));
        }
        Ok(out.monic())
    }

    /// Scale so the highest nonzero coefficient is 1.
    pub fn monic(&self) -> BinForm {
        match self.c.iter().rposition(|c| !c.is_zero()) {
            Some(top) => {
                let inv = self.ctx.inv(self.c[top]).expect("nonzero");
                self.scale(inv)
            }
            None => self.clone(),
        }
    }

    /// Exact division (panics on inexact division; internal use after gcd).
    /// Dehomogenizing at a fixed formal degree is a bijection, so univariate
    /// division decides the homogeneous one.
    pub fn div_exact(&self, d: &BinForm) -> BinForm {
        let (q, r) = self
            .dehom_t()
            .divrem(&d.dehom_t())
            .expect("divisor nonzero");
        assert!(r.is_zero(), "inexact binary-form division");
        let qdeg = self.deg - d.deg;
        assert!(q.degree().map_or(true, |dq| dq <= qdeg));
        BinForm::homogenize(&q, qdeg)
    }

    /// Roots over `F_{q^ext}` with multiplicities, as points of `P^1`.
    pub fn roots(&self, ext: u32) -> Result<Vec<(P1Point, u32)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        let t_val = self.t_valuation();
        if t_val > 0 {
            out.push((P1Point::infinity(&self.ctx), t_val as u32));
        }
        let f = self.dehom_t();
        if !f.is_zero() {
            for (r, m) in f.roots_in(ext)? {
                out.push((P1Point::affine(&self.ctx, r), m));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Substitute a linear change of coordinates: `(s, t) -> (u0 s + u1 t,
    /// v0 s + v1 t)`.
    pub fn substitute_linear(&self, u: (Fe, Fe), v: (Fe, Fe)) -> BinForm {
        let us = BinForm::linear(&self.ctx, u.0, u.1);
        let vs = BinForm::linear(&self.ctx, v.0, v.1);
        let mut upow = vec![BinForm::from_coeffs(&self.ctx, 0, vec![self.ctx.one()])];
        for i in 1..=self.deg {
            upow.push(upow[i - 1].mul(&us));
        }
        let mut vpow = vec![BinForm::from_coeffs(&self.ctx, 0, vec![self.ctx.one()])];
        for i in 1..=self.deg {
            vpow.push(vpow[i - 1].mul(&vs));
        }
        let mut out = BinForm::zero(&self.ctx, self.deg);
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = upow[i].mul(&vpow[self.deg - i]).scale(a);
            out = out.add(&term).expect("degrees agree");
        }
        out
    }

    /// Partial derivative with respect to `s`.
    pub fn derivative_s(&self) -> BinForm {
        if self.deg == 0 {
            return BinForm::zero(&self.ctx, 0);
        }
        let mut c = vec![self.ctx.zero(); self.deg];
        for i in 1..=self.deg {
            c[i - 1] = self.ctx.mul(self.c[i], self.ctx.from_int(i as i64));
        }
        BinForm { ctx: self.ctx.clone(), deg: self.deg - 1, c }
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let d = self.deg;
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| {
                let coeff = self.ctx.display(c);
                let spart = match i {
                    0 => String::new(),
                    1 => "*s".into(),
                    _ => format!("*s^{i}"),
                };
                let tpart = match d - i {
                    0 => String::new(),
                    1 => "*t".into(),
                    k => format!("*t^{k}"),
                };
                format!("{coeff}{spart}{tpart}")
            })
            .collect();
        terms.join(" + ")
    }
}

// ---------------------------------------------------------------------------
// Rational maps P^1 -> P^1
// ---------------------------------------------------------------------------

/// A rational map `P^1 -> P^1` given by a pair of binary forms of equal
/// degree. After [`reduce`](RatMap::reduce) the pair is coprime and scaled so
/// the first nonzero coefficient (of `f`, then `g`) is 1; reduced maps compare
/// structurally.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMap {
    f: BinForm,
    g: BinForm,
    reduced: bool,
}

impl RatMap {
    pub fn new(f: BinForm, g: BinForm) -> Result<RatMap, PolyError> {
        if f.degree() != g.degree() {
            return Err(PolyError::DegreeMismatch(f.degree(), g.degree()));
        }
        if f.is_zero() && g.is_zero() {
            return Err(PolyError::BothZero);
        }
        Ok(RatMap { f, g, reduced: false })
    }

    /// The identity map `(s : t)`.
    pub fn identity(ctx: &FieldCtx) -> RatMap {
        let f = BinForm::monomial(ctx, 1, 1, ctx.one());
        let g = BinForm::monomial(ctx, 1, 0, ctx.one());
        RatMap { f, g, reduced: true }
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.f.ctx()
    }

    pub fn numerator(&self) -> &BinForm {
        &self.f
    }

    pub fn denominator(&self) -> &BinForm {
        &self.g
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn degree(&self) -> usize {
        self.f.degree()
    }

    /// Divide out the gcd and canonically rescale. Idempotent; the resulting
    /// degree is the degree of the induced map.
    pub fn reduce(&self) -> RatMap {
        if self.reduced {
            return self.clone();
        }
        let ctx = self.f.ctx().clone();
        let (mut f, mut g) = (self.f.clone(), self.g.clone());
        if !f.is_zero() && !g.is_zero() {
            let d = f.gcd(&g).expect("not both zero");
            if d.degree() > 0 {
                f = f.div_exact(&d);
                g = g.div_exact(&d);
            }
        } else if f.is_zero() {
            // Constant map (0 : 1).
            let d = g.degree();
            f = BinForm::zero(&ctx, 0);
            let _ = d;
            g = BinForm::from_coeffs(&ctx, 0, vec![ctx.one()]);
        } else {
            f = BinForm::from_coeffs(&ctx, 0, vec![ctx.one()]);
            g = BinForm::zero(&ctx, 0);
        }
        // Canonical scaling.
        let lead = f
            .coeffs()
            .iter()
            .chain(g.coeffs())
            .find(|c| !c.is_zero())
            .copied()
            .expect("not both zero");
        let inv = ctx.inv(lead).expect("nonzero");
        RatMap { f: f.scale(inv), g: g.scale(inv), reduced: true }
    }

    /// Apply the (reduced) map to a point.
    pub fn apply(&self, p: &P1Point) -> Result<P1Point, PolyError> {
        let m = if self.reduced { self.clone() } else { self.reduce() };
        let x = m.f.eval(p);
        let y = m.g.eval(p);
        P1Point::new(self.ctx(), x, y)
    }

    /// Projective equality of reduced pairs (up to one global scalar, which
    /// canonical scaling removes).
    pub fn eq_proj(&self, other: &RatMap) -> bool {
        self.reduce() == other.reduce()
    }

    /// Ramification index of the induced map at `p`: the multiplicity of `p`
    /// as a root of the fiber form through its image. The map must be
    /// reduced.
    pub fn vanishing_order(&self, p: &P1Point) -> Result<u32, PolyError> {
        if !self.reduced {
            return Err(PolyError::NotReduced);
        }
        let ctx = self.ctx();
        let fv = self.f.eval(p);
        let gv = self.g.eval(p);
        // K = g(p)·F - f(p)·G vanishes on the whole fiber through the image.
        let k = self.f.scale(gv).sub(&self.g.scale(fv))?;
        if k.is_zero() {
            return Err(PolyError::DegreeTooSmall(self.degree()));
        }
        let _ = ctx;
        Ok(k.order_at(p))
    }

    /// The fiber over a value point: all rational points mapping to `v`, with
    /// multiplicities.
    pub fn fiber(&self, v: &P1Point, ext: u32) -> Result<Vec<(P1Point, u32)>, PolyError> {
        if !self.reduced {
            return Err(PolyError::NotReduced);
        }
        let k = self.f.scale(v.y).sub(&self.g.scale(v.x))?;
        if k.is_zero() {
            return Err(PolyError::DegreeTooSmall(self.degree()));
        }
        k.roots(ext)
    }

    /// Pullback along a projective change of source coordinates given by the
    /// row-convention matrix `[a, b, c, d]`: `(s, t) -> (a s + c t, b s + d t)`.
    /// Returns the reduced composite.
    pub fn substitute_matrix(&self, mat: &[Fe; 4]) -> Result<RatMap, PolyError> {
        let [a, b, c, d] = *mat;
        let f = self.f.substitute_linear((a, c), (b, d));
        let g = self.g.substitute_linear((a, c), (b, d));
        Ok(RatMap::new(f, g)?.reduce())
    }

    pub fn display(&self) -> String {
        format!("({} : {})", self.f.display(), self.g.display())
    }
}
