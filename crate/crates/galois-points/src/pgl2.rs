//! Elements and finite subgroups of `PGL(2, F_{q^m})` acting on the
//! projective line, and deck-group computation for rational self-maps of
//! `P^1`.
//!
//! The action convention is fixed throughout: a matrix `A = [a b; c d]` acts
//! on row vectors, `(s, t) -> (s, t) A = (a s + c t, b s + d t)`.

use crate::gf::{Fe, FieldCtx, FieldError};
use crate::linalg;
use crate::polyrat::{BinForm, P1Point, PolyError, RatMap};
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GroupError {
    #[error("matrix is singular")]
    Singular,
    #[error("subgroup closure exceeded the cap of {0}")]
    CapExceeded(usize),
    #[error("no totally split fiber over this extension; raise the search extension")]
    NoSplitFiber,
    #[error("deck computation needs a map of degree at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("polynomial error: {0}")]
    Poly(#[from] PolyError),
}

/// An element of `PGL(2)`: a 2x2 matrix up to scalar, stored in canonical
/// form (first nonzero entry is 1) so equality is entry-wise.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mobius {
    mat: [Fe; 4], // [a, b, c, d] row-major
}

impl Mobius {
    pub fn new(ctx: &FieldCtx, mat: [Fe; 4]) -> Result<Mobius, GroupError> {
        for &e in &mat {
            ctx.check(e)?;
        }
        let [a, b, c, d] = mat;
        let det = ctx.sub(ctx.mul(a, d), ctx.mul(b, c));
        if det.is_zero() {
            return Err(GroupError::Singular);
        }
        Ok(Mobius::canonical(ctx, mat))
    }

    fn canonical(ctx: &FieldCtx, mat: [Fe; 4]) -> Mobius {
        let lead = mat.iter().find(|e| !e.is_zero()).copied().expect("nonzero matrix");
        let inv = ctx.inv(lead).expect("nonzero");
        Mobius {
            mat: [
                ctx.mul(mat[0], inv),
                ctx.mul(mat[1], inv),
                ctx.mul(mat[2], inv),
                ctx.mul(mat[3], inv),
            ],
        }
    }

    pub fn identity(ctx: &FieldCtx) -> Mobius {
        Mobius { mat: [ctx.one(), ctx.zero(), ctx.zero(), ctx.one()] }
    }

    pub fn matrix(&self) -> &[Fe; 4] {
        &self.mat
    }

    pub fn is_identity(&self, ctx: &FieldCtx) -> bool {
        *self == Mobius::identity(ctx)
    }

    /// `self ∘ other`: apply `other` first. Under the row-vector convention
    /// the matrix of the composite is `A_other · A_self`.
    pub fn compose(&self, ctx: &FieldCtx, other: &Mobius) -> Mobius {
        let [a1, b1, c1, d1] = other.mat;
        let [a2, b2, c2, d2] = self.mat;
        let mat = [
            ctx.add(ctx.mul(a1, a2), ctx.mul(b1, c2)),
            ctx.add(ctx.mul(a1, b2), ctx.mul(b1, d2)),
            ctx.add(ctx.mul(c1, a2), ctx.mul(d1, c2)),
            ctx.add(ctx.mul(c1, b2), ctx.mul(d1, d2)),
        ];
        Mobius::canonical(ctx, mat)
    }

    pub fn inverse(&self, ctx: &FieldCtx) -> Mobius {
        let [a, b, c, d] = self.mat;
        Mobius::canonical(ctx, [d, ctx.neg(b), ctx.neg(c), a])
    }

    /// `(s, t) -> (s, t) A`.
    pub fn act(&self, ctx: &FieldCtx, p: &P1Point) -> P1Point {
        let [a, b, c, d] = self.mat;
        let x = ctx.add(ctx.mul(p.x, a), ctx.mul(p.y, c));
        let y = ctx.add(ctx.mul(p.x, b), ctx.mul(p.y, d));
        P1Point::new(ctx, x, y).expect("invertible matrix maps points to points")
    }

    /// Least `k >= 1` with `self^k = 1` in `PGL(2)`.
    pub fn order(&self, ctx: &FieldCtx) -> usize {
        let id = Mobius::identity(ctx);
        let mut acc = *self;
        let mut k = 1;
        while acc != id {
            acc = acc.compose(ctx, self);
            k += 1;
        }
        k
    }

    /// Rational fixed points in `P^1(F_{q^m})`. The identity fixes every
    /// point; any other element has at most two (an empty result means the
    /// fixed points live in a proper extension).
    pub fn fixed_points(&self, ctx: &FieldCtx) -> Result<Vec<P1Point>, GroupError> {
        if self.is_identity(ctx) {
            return Ok(P1Point::all(ctx, ctx.m())?);
        }
        let [a, b, c, d] = self.mat;
        // (s:t) is fixed iff b s^2 + (d - a) s t - c t^2 = 0.
        let form = BinForm::from_coeffs(ctx, 2, vec![ctx.neg(c), ctx.sub(d, a), b]);
        if form.is_zero() {
            return Ok(Vec::new());
        }
        let roots = form.roots(ctx.m())?;
        Ok(roots.into_iter().map(|(p, _)| p).collect())
    }

    /// Pull a rational map back along this transformation (substitute the
    /// action into the source coordinates).
    pub fn pullback(&self, m: &RatMap) -> Result<RatMap, GroupError> {
        Ok(m.substitute_matrix(&self.mat)?)
    }

    /// The unique transformation sending three distinct source points to
    /// three distinct target points, when it exists and is invertible.
    pub fn through(
        ctx: &FieldCtx,
        src: &[P1Point; 3],
        dst: &[P1Point; 3],
    ) -> Option<Mobius> {
        // Each correspondence P -> Q gives one linear condition on (a,b,c,d):
        // cross((s,t)A, Q) = 0.
        let rows: Vec<Vec<Fe>> = src
            .iter()
            .zip(dst.iter())
            .map(|(p, q)| {
                vec![
                    ctx.mul(p.x, q.y),
                    ctx.neg(ctx.mul(p.x, q.x)),
                    ctx.mul(p.y, q.y),
                    ctx.neg(ctx.mul(p.y, q.x)),
                ]
            })
            .collect();
        let basis = linalg::nullspace(ctx, &rows, 4);
        if basis.len() != 1 {
            return None;
        }
        let v = &basis[0];
        Mobius::new(ctx, [v[0], v[1], v[2], v[3]]).ok()
    }

    pub fn display(&self, ctx: &FieldCtx) -> String {
        let [a, b, c, d] = self.mat;
        format!(
            "[{} {}; {} {}]",
            ctx.display(a),
            ctx.display(b),
            ctx.display(c),
            ctx.display(d)
        )
    }
}

/// Structural type of a finite subgroup of `PGL(2)`.
///
/// `Dihedral(n)` is the dihedral group *of order* `n`; by this convention the
/// Klein four group is `Dihedral(4)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupTag {
    Cyclic(usize),
    Dihedral(usize),
    Other,
}

impl std::fmt::Display for GroupTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupTag::Cyclic(n) => write!(f, "cyclic-{n}"),
            GroupTag::Dihedral(n) => write!(f, "dihedral-{n}"),
            GroupTag::Other => write!(f, "other"),
        }
    }
}

/// A finite subgroup of `PGL(2, F_{q^m})` as an explicit, sorted element set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    ctx: FieldCtx,
    elems: Vec<Mobius>,
}

impl Subgroup {
    pub fn trivial(ctx: &FieldCtx) -> Subgroup {
        Subgroup { ctx: ctx.clone(), elems: vec![Mobius::identity(ctx)] }
    }

    /// Breadth-first closure of a generator set; errors when the generated
    /// group would exceed `cap`.
    pub fn closure(
        ctx: &FieldCtx,
        generators: &[Mobius],
        cap: usize,
    ) -> Result<Subgroup, GroupError> {
        let mut seen: HashSet<Mobius> = HashSet::new();
        seen.insert(Mobius::identity(ctx));
        let mut frontier: Vec<Mobius> = vec![Mobius::identity(ctx)];
        while let Some(g) = frontier.pop() {
            for gen in generators {
                let next = gen.compose(ctx, &g);
                if seen.insert(next) {
                    if seen.len() > cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    frontier.push(next);
                }
            }
        }
        let mut elems: Vec<Mobius> = seen.into_iter().collect();
        elems.sort();
        Ok(Subgroup { ctx: ctx.clone(), elems })
    }

    /// Wrap an element list that is already known to be a group (sorted and
    /// verified closed under composition).
    pub fn from_elements(ctx: &FieldCtx, mut elems: Vec<Mobius>) -> Subgroup {
        elems.sort();
        elems.dedup();
        debug_assert!(elems.binary_search(&Mobius::identity(ctx)).is_ok());
        let g = Subgroup { ctx: ctx.clone(), elems };
        debug_assert!(g.is_closed());
        g
    }

    fn is_closed(&self) -> bool {
        self.elems.iter().all(|a| {
            self.elems
                .iter()
                .all(|b| self.contains(&a.compose(&self.ctx, b)))
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[Mobius] {
        &self.elems
    }

    pub fn contains(&self, g: &Mobius) -> bool {
        self.elems.binary_search(g).is_ok()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elems: Vec<Mobius> = self
            .elems
            .iter()
            .filter(|g| other.contains(g))
            .copied()
            .collect();
        Subgroup { ctx: self.ctx.clone(), elems }
    }

    pub fn set_equal(&self, other: &Subgroup) -> bool {
        self.elems == other.elems
    }

    /// Recognize cyclic and dihedral groups. Dihedral of order `n` means: `n`
    /// even, a cyclic subgroup of order `n/2`, and an outside involution
    /// conjugating each element of it to its inverse. The Klein four group
    /// counts as dihedral of order 4.
    pub fn structure(&self) -> GroupTag {
        let n = self.order();
        let ctx = &self.ctx;
        let orders: Vec<usize> = self.elems.iter().map(|g| g.order(ctx)).collect();
        if orders.iter().any(|&o| o == n) {
            return GroupTag::Cyclic(n);
        }
        if n % 2 != 0 {
            return GroupTag::Other;
        }
        let half = n / 2;
        // Candidate rotation subgroups.
        let mut candidates: Vec<Subgroup> = Vec::new();
        if half == 2 {
            for (g, &o) in self.elems.iter().zip(&orders) {
                if o == 2 {
                    candidates.push(
                        Subgroup::closure(ctx, &[*g], 2).expect("order-2 closure fits"),
                    );
                }
            }
        } else {
            for (g, &o) in self.elems.iter().zip(&orders) {
                if o == half {
                    candidates.push(
                        Subgroup::closure(ctx, &[*g], half).expect("cyclic closure fits"),
                    );
                }
            }
        }
        candidates.dedup_by(|a, b| a.set_equal(b));
        for c in &candidates {
            for (b, &o) in self.elems.iter().zip(&orders) {
                if o != 2 || c.contains(b) {
                    continue;
                }
                let flips_all = c.elems.iter().all(|a| {
                    let conj = b.compose(ctx, &a.compose(ctx, b));
                    conj == a.inverse(ctx)
                });
                if flips_all {
                    return GroupTag::Dihedral(n);
                }
            }
        }
        GroupTag::Other
    }

    /// Multiset of images of `p` under the elements (optionally without the
    /// identity), sorted.
    pub fn orbit_multiset(&self, p: &P1Point, exclude_identity: bool) -> Vec<P1Point> {
        let id = Mobius::identity(&self.ctx);
        let mut out: Vec<P1Point> = self
            .elems
            .iter()
            .filter(|g| !(exclude_identity && **g == id))
            .map(|g| g.act(&self.ctx, p))
            .collect();
        out.sort();
        out
    }

    /// Number of elements fixing `p`.
    pub fn stabilizer_order(&self, p: &P1Point) -> usize {
        self.elems.iter().filter(|g| g.act(&self.ctx, p) == *p).count()
    }

    pub fn conjugate_by(&self, g: &Mobius) -> Subgroup {
        let ctx = &self.ctx;
        let ginv = g.inverse(ctx);
        let mut elems: Vec<Mobius> = self
            .elems
            .iter()
            .map(|a| ginv.compose(ctx, &a.compose(ctx, g)))
            .collect();
        elems.sort();
        Subgroup { ctx: ctx.clone(), elems }
    }

    /// Search the given ambient elements for a `g` with `g^{-1} self g ==
    /// other`.
    pub fn find_conjugator(&self, other: &Subgroup, ambient: &[Mobius]) -> Option<Mobius> {
        if self.order() != other.order() {
            return None;
        }
        ambient
            .iter()
            .find(|g| self.conjugate_by(g).set_equal(other))
            .copied()
    }
}

/// All elements of `PGL(2)` over the degree-`ext` intermediate field, in a
/// deterministic order.
pub fn enumerate_pgl2(ctx: &FieldCtx, ext: u32) -> Result<Vec<Mobius>, GroupError> {
    let elems = ctx.intermediate_elements(ext)?;
    let mut out = Vec::new();
    for &a in &elems {
        for &b in &elems {
            for &c in &elems {
                for &d in &elems {
                    let det = ctx.sub(ctx.mul(a, d), ctx.mul(b, c));
                    if det.is_zero() {
                        continue;
                    }
                    let g = Mobius::canonical(ctx, [a, b, c, d]);
                    if g.mat == [a, b, c, d] {
                        out.push(g);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Compute the group of all `σ ∈ PGL(2, F_{q^m})` with `f ∘ σ = f`, for a
/// reduced map `f` of degree `d ≥ 2`.
///
/// Strategy: find a value whose fiber consists of `d` distinct rational
/// points; a deck transformation permutes that fiber, and a Möbius map is
/// determined by the images of three points, so at most `d(d-1)(d-2)`
/// candidates need symbolic verification. The result is independent of the
/// verification order.
pub fn deck_group(f: &RatMap, cap: usize) -> Result<Subgroup, GroupError> {
    let d = f.degree();
    if d < 2 || !f.is_reduced() {
        return Err(GroupError::DegreeTooSmall(d));
    }
    let ctx = f.ctx().clone();
    let m = ctx.m();
    let points = P1Point::all(&ctx, m)?;
    // Bucket all rational points by image. A value with exactly d rational
    // preimages is totally split: the fiber degrees sum to d over the
    // closure, so d rational points force d simple points.
    let mut buckets: HashMap<P1Point, Vec<P1Point>> = HashMap::new();
    for p in &points {
        buckets.entry(f.apply(p)?).or_default().push(*p);
    }
    let mut split_fibers = Vec::new();
    for v in &points {
        if let Some(bucket) = buckets.get(v) {
            if bucket.len() == d {
                split_fibers.push(bucket.clone());
                if split_fibers.len() >= 2 || d >= 3 {
                    break;
                }
            }
        }
    }
    if split_fibers.is_empty() || (d == 2 && split_fibers.len() < 2) {
        return Err(GroupError::NoSplitFiber);
    }

    let mut found: Vec<Mobius> = Vec::new();
    let verify = |g: &Mobius| -> Result<bool, GroupError> {
        Ok(g.pullback(f)?.eq_proj(f))
    };

    if d >= 3 {
        let fiber = &split_fibers[0];
        let base = [fiber[0], fiber[1], fiber[2]];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let dst = [fiber[i], fiber[j], fiber[k]];
                    if let Some(g) = Mobius::through(&ctx, &base, &dst) {
                        if verify(&g)? {
                            found.push(g);
                        }
                    }
                }
            }
        }
    } else {
        // Degree 2: a nontrivial deck element swaps both points of every
        // fiber; pin it down with two fibers.
        found.push(Mobius::identity(&ctx));
        let (f1, f2) = (&split_fibers[0], &split_fibers[1]);
        let base = [f1[0], f1[1], f2[0]];
        for &target in &[f2[0], f2[1]] {
            let dst = [f1[1], f1[0], target];
            if let Some(g) = Mobius::through(&ctx, &base, &dst) {
                if verify(&g)? {
                    found.push(g);
                }
            }
        }
    }

    found.sort();
    found.dedup();
    if found.len() > cap {
        return Err(GroupError::CapExceeded(cap));
    }
    Ok(Subgroup::from_elements(&ctx, found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use crate::polyrat::BinForm;

    fn f5() -> FieldCtx {
        FieldCtx::new(5, 1, 1).unwrap()
    }

    /// The two standard generators at primitive α: a scaling of order
    /// (q-1)/2 and the involution x -> α/x.
    fn dihedral_gens(ctx: &FieldCtx) -> (Mobius, Mobius) {
        let alpha = ctx.primitive_subfield_element();
        let a2 = ctx.mul(alpha, alpha);
        let sigma = Mobius::new(ctx, [ctx.one(), ctx.zero(), ctx.zero(), a2]).unwrap();
        let tau = Mobius::new(ctx, [ctx.zero(), ctx.one(), alpha, ctx.zero()]).unwrap();
        (sigma, tau)
    }

    fn eta(ctx: &FieldCtx) -> Mobius {
        let alpha = ctx.primitive_subfield_element();
        Mobius::new(
            ctx,
            [ctx.one(), ctx.zero(), ctx.sub(alpha, ctx.one()), alpha],
        )
        .unwrap()
    }

    #[test]
    fn singular_matrix_rejected() {
        let ctx = f5();
        let err = Mobius::new(&ctx, [ctx.one(), ctx.one(), ctx.one(), ctx.one()]);
        assert_eq!(err.unwrap_err(), GroupError::Singular);
    }

    #[test]
    fn eta_fixed_points_and_order() {
        let ctx = f5();
        let e = eta(&ctx);
        let fixed = e.fixed_points(&ctx).unwrap();
        let one = P1Point::affine(&ctx, ctx.one());
        let inf = P1Point::infinity(&ctx);
        assert_eq!(fixed.len(), 2);
        assert!(fixed.contains(&one) && fixed.contains(&inf));
        assert_eq!(e.order(&ctx), 4);
    }

    #[test]
    fn tau_action_example() {
        let ctx = f5();
        let (_, tau) = dihedral_gens(&ctx);
        let p = P1Point::affine(&ctx, ctx.one());
        let img = tau.act(&ctx, &p);
        assert_eq!(img, P1Point::affine(&ctx, ctx.from_int(2)));
        assert_eq!(tau.order(&ctx), 2);
    }

    #[test]
    fn identity_fixes_everything() {
        let ctx = f5();
        let id = Mobius::identity(&ctx);
        assert_eq!(id.fixed_points(&ctx).unwrap().len(), 6);
        assert_eq!(id.order(&ctx), 1);
    }

    #[test]
    fn closure_orders_and_structure() {
        let ctx = f5();
        let (sigma, tau) = dihedral_gens(&ctx);
        let h = Subgroup::closure(&ctx, &[sigma, tau], 64).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(h.structure(), GroupTag::Dihedral(4));

        let c = Subgroup::closure(&ctx, &[eta(&ctx)], 64).unwrap();
        assert_eq!(c.order(), 4);
        assert_eq!(c.structure(), GroupTag::Cyclic(4));

        let t = Subgroup::closure(&ctx, &[Mobius::identity(&ctx)], 4).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.structure(), GroupTag::Cyclic(1));
    }

    #[test]
    fn dihedral_structure_sweep() {
        for (p, n) in [(5u64, 1u32), (7, 1), (3, 2), (13, 1)] {
            let ctx = FieldCtx::new(p, n, 1).unwrap();
            let q = ctx.q() as usize;
            let (sigma, tau) = dihedral_gens(&ctx);
            let h = Subgroup::closure(&ctx, &[sigma, tau], 4 * q).unwrap();
            assert_eq!(h.order(), q - 1);
            assert_eq!(h.structure(), GroupTag::Dihedral(q - 1));
            assert_eq!(eta(&ctx).order(&ctx), q - 1);
        }
    }

    #[test]
    fn order_equals_cyclic_closure_order() {
        let ctx = f5();
        for g in enumerate_pgl2(&ctx, 1).unwrap() {
            let o = g.order(&ctx);
            let c = Subgroup::closure(&ctx, &[g], 256).unwrap();
            assert_eq!(o, c.order());
        }
    }

    #[test]
    fn closure_cap_enforced() {
        let ctx = f5();
        let (sigma, tau) = dihedral_gens(&ctx);
        assert_eq!(
            Subgroup::closure(&ctx, &[sigma, tau], 2).unwrap_err(),
            GroupError::CapExceeded(2)
        );
    }

    #[test]
    fn orbit_multisets_match_hand_computation() {
        let ctx = f5();
        let (sigma, tau) = dihedral_gens(&ctx);
        let h = Subgroup::closure(&ctx, &[sigma, tau], 64).unwrap();
        let one = P1Point::affine(&ctx, ctx.one());
        let orbit = h.orbit_multiset(&one, true);
        let expected: Vec<P1Point> = [2i64, 3, 4]
            .iter()
            .map(|&v| P1Point::affine(&ctx, ctx.from_int(v)))
            .collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(orbit, expected);

        let c = Subgroup::closure(&ctx, &[eta(&ctx)], 64).unwrap();
        let zero = P1Point::affine(&ctx, ctx.zero());
        let orbit0 = c.orbit_multiset(&zero, true);
        assert_eq!(orbit0, expected);

        let t = Subgroup::trivial(&ctx);
        assert!(t.orbit_multiset(&one, true).is_empty());
    }

    #[test]
    fn orbit_invariance_under_group_elements() {
        let ctx = f5();
        let (sigma, tau) = dihedral_gens(&ctx);
        let h = Subgroup::closure(&ctx, &[sigma, tau], 64).unwrap();
        for p in P1Point::all(&ctx, 1).unwrap() {
            let orbit = h.orbit_multiset(&p, false);
            for rho in h.elements() {
                let mut moved: Vec<P1Point> =
                    orbit.iter().map(|q| rho.act(&ctx, q)).collect();
                moved.sort();
                assert_eq!(moved, orbit);
            }
        }
    }

    #[test]
    fn pgl2_f5_has_120_elements() {
        let ctx = f5();
        assert_eq!(enumerate_pgl2(&ctx, 1).unwrap().len(), 120);
    }

    #[test]
    fn deck_group_of_invariant_quotient() {
        // f = (s^2 t^2 : s^4 - t^4) over F_25 is the quotient by the order-4
        // group generated by the scaling and the reflection.
        let ctx = FieldCtx::new(5, 1, 2).unwrap();
        let one = ctx.one();
        let f = BinForm::monomial(&ctx, 4, 2, one);
        let g = BinForm::monomial(&ctx, 4, 4, one)
            .sub(&BinForm::monomial(&ctx, 4, 0, one))
            .unwrap();
        let m = RatMap::new(f, g).unwrap().reduce();
        let deck = deck_group(&m, 64).unwrap();
        assert_eq!(deck.order(), 4);
        let (sigma, tau) = dihedral_gens(&ctx);
        let h = Subgroup::closure(&ctx, &[sigma, tau], 64).unwrap();
        assert!(deck.set_equal(&h));
    }

    #[test]
    fn mobius_through_roundtrip() {
        let ctx = f5();
        for g in enumerate_pgl2(&ctx, 1).unwrap().iter().take(40) {
            let pts = [
                P1Point::affine(&ctx, ctx.zero()),
                P1Point::affine(&ctx, ctx.one()),
                P1Point::infinity(&ctx),
            ];
            let dst = [
                g.act(&ctx, &pts[0]),
                g.act(&ctx, &pts[1]),
                g.act(&ctx, &pts[2]),
            ];
            let rec = Mobius::through(&ctx, &pts, &dst).unwrap();
            assert_eq!(rec, *g);
        }
    }
}
