//! Exact verification of Galois points on four families of plane rational
//! curves over small finite fields of odd characteristic.
//!
//! A point `P` of the projective plane is a *Galois point* for a plane curve
//! `C` when the projection from `P` induces a Galois extension of function
//! fields. For a rational curve given by a parametrization
//! `φ: P^1 → P^2`, the projection composed with `φ` is a rational self-map of
//! the line, and the Galois condition becomes a concrete, finite question
//! about its deck transformations inside `PGL(2)`. This crate makes every
//! step of that story computable and checkable:
//!
//! - [`gf`]: finite field towers `F_p ⊂ F_q ⊂ F_{q^m}` with exact arithmetic
//!   and canonical subfield embeddings;
//! - [`polyrat`]: polynomials, binary forms, and reduced rational maps on the
//!   projective line;
//! - [`pgl2`]: Möbius transformations, explicit finite subgroups, and deck
//!   group computation for a rational self-map;
//! - [`curve`]: the four curve families, projections from a point,
//!   multiplicities, ramification, differential and Hessian checks;
//! - [`galois`]: Galois-point verdicts, per-theorem verification reports,
//!   enumeration over rational candidate points, and a searcher for pairs of
//!   subgroups sharing the characteristic two-Galois-point configuration;
//! - [`report`]: stable, serializable claim-by-claim verification output.
//!
//! Everything is deterministic: no randomness is used outside of test
//! sampling, and all scans are in a fixed order.
//!
//! ```
//! use galois_points::curve::{CurveLabel, P2Point};
//! use galois_points::galois::{is_galois_point, CurveSpec, Decision, DEFAULT_LADDER};
//! use galois_points::gf::FieldCtx;
//!
//! let spec = CurveSpec { label: CurveLabel::C1, p: 5, n: 1, gamma: None };
//! let ctx = FieldCtx::new(5, 1, 1).unwrap();
//! let p = P2Point::new(&ctx, ctx.zero(), ctx.one(), ctx.zero()).unwrap();
//! let verdict = is_galois_point(&spec, 1, &p, &DEFAULT_LADDER).unwrap();
//! assert_eq!(verdict.decision, Decision::Galois);
//! assert_eq!(verdict.group_tag.unwrap().to_string(), "dihedral-4");
//! ```

pub mod curve;
pub mod galois;
pub mod gf;
pub mod linalg;
pub mod pgl2;
pub mod polyrat;
pub mod report;

/// Keeps the code snippets in the book compiled and asserted alongside the
/// unit tests.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(fields, "../../../book/src/fields.md");
    chapter!(maps, "../../../book/src/maps.md");
    chapter!(groups, "../../../book/src/groups.md");
    chapter!(curves, "../../../book/src/curves.md");
    chapter!(verification, "../../../book/src/verification.md");
    chapter!(pairs, "../../../book/src/pairs.md");
}
