//! Acceptance suite: one test (and one pass/fail line) per top-level
//! criterion. Each criterion is independently runnable; together they cover
//! the standard group lemma, the four theorems, the subgroup-pair search,
//! and the property suites.

use galois_points::curve::{CurveLabel, P2Point};
use galois_points::galois::{
    admissible_gammas, dihedral_generators, invariant_f, invariant_g, is_galois_point,
    problem_pair_search, restrict_subgroup, standard_cyclic_generator, theorem_report,
    verify_invariant, CurveSpec, VerifyOptions, DEFAULT_LADDER,
};
use galois_points::gf::FieldCtx;
use galois_points::pgl2::{enumerate_pgl2, GroupTag, Mobius, Subgroup};
use galois_points::polyrat::P1Point;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The (p, n) pairs behind the base fields used by the lemma suite.
const LEMMA_FIELDS: [(u64, u32); 5] = [(5, 1), (7, 1), (3, 2), (13, 1), (5, 2)];

fn report_criterion(name: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("{status} {name}: {detail}");
    assert!(pass, "{name} failed: {detail}");
}

fn theorem_all_pass(theorem: u32, fields: &[(u64, u32)], detail: &mut String) -> bool {
    let opts = VerifyOptions::default();
    for &(p, n) in fields {
        let report = match theorem_report(theorem, p, n, None, &opts) {
            Ok(r) => r,
            Err(e) => {
                detail.push_str(&format!("q={}^{n}: error {e}; ", p));
                return false;
            }
        };
        detail.push_str(&format!(
            "q={}: {}/{} passed; ",
            p.pow(n),
            report.summary.passed,
            report.summary.total
        ));
        if !report.all_passed() {
            for c in &report.claims {
                if !c.pass {
                    detail.push_str(&format!("first bad claim {}; ", c.id));
                    break;
                }
            }
            return false;
        }
    }
    true
}

/// Criterion 1: for q in {5, 7, 9, 13, 25}, the standard subgroups of
/// PGL(2, F_q) have the advertised orders and structures, and the two
/// invariant functions are fixed by them.
#[test]
fn criterion_1_lemma_suite() {
    let mut detail = String::new();
    let mut pass = true;
    for (p, n) in LEMMA_FIELDS {
        let ctx = FieldCtx::new(p, n, 1).unwrap();
        let q = ctx.q() as usize;
        let (sigma, tau) = dihedral_generators(&ctx).unwrap();
        let h = Subgroup::closure(&ctx, &[sigma, tau], q - 1).unwrap();
        let eta = standard_cyclic_generator(&ctx).unwrap();
        let c = Subgroup::closure(&ctx, &[eta], q - 1).unwrap();
        let ok = sigma.order(&ctx) == (q - 1) / 2
            && tau.order(&ctx) == 2
            && h.order() == q - 1
            && h.structure() == GroupTag::Dihedral(q - 1)
            && eta.order(&ctx) == q - 1
            && c.order() == q - 1
            && c.structure() == GroupTag::Cyclic(q - 1)
            && verify_invariant(&invariant_f(&ctx), &h).unwrap()
            && verify_invariant(&invariant_g(&ctx), &c).unwrap()
            && h.intersection(&c).order() == 1;
        detail.push_str(&format!("q={q}: H dihedral-{}, C cyclic-{}; ", h.order(), c.order()));
        pass &= ok;
    }
    report_criterion("criterion-1 lemma suite (q in {5,7,9,13,25})", pass, &detail);
}

/// Criterion 2: the first theorem's full checklist at q in {5, 7, 9},
/// including the inner enumeration over F_(q^2).
#[test]
fn criterion_2_theorem_1() {
    let mut detail = String::new();
    let pass = theorem_all_pass(1, &[(5, 1), (7, 1), (3, 2)], &mut detail);
    report_criterion("criterion-2 theorem 1 (q in {5,7,9})", pass, &detail);
}

/// Criterion 3: the second theorem's full checklist at q in {5, 7, 9}.
#[test]
fn criterion_3_theorem_2() {
    let mut detail = String::new();
    let pass = theorem_all_pass(2, &[(5, 1), (7, 1), (3, 2)], &mut detail);
    report_criterion("criterion-3 theorem 2 (q in {5,7,9})", pass, &detail);
}

/// Criterion 4: the third theorem at q in {5, 7} for every admissible gamma,
/// including the outer enumeration over P^2(F_q).
#[test]
fn criterion_4_theorem_3() {
    let mut detail = String::new();
    let mut pass = theorem_all_pass(3, &[(5, 1), (7, 1)], &mut detail);
    for (p, n) in [(5u64, 1u32), (7, 1)] {
        let count = admissible_gammas(CurveLabel::C3, p, n).unwrap().len();
        detail.push_str(&format!("q={}: {count} gammas; ", p.pow(n)));
        pass &= count == (p.pow(n) - 3) as usize;
    }
    report_criterion("criterion-4 theorem 3 (q in {5,7}, all gamma)", pass, &detail);
}

/// Criterion 5: the fourth theorem at q in {7, 9} for every admissible gamma.
#[test]
fn criterion_5_theorem_4() {
    let mut detail = String::new();
    let mut pass = theorem_all_pass(4, &[(7, 1), (3, 2)], &mut detail);
    for (p, n) in [(7u64, 1u32), (3, 2)] {
        let count = admissible_gammas(CurveLabel::C4, p, n).unwrap().len();
        detail.push_str(&format!("q={}: {count} gammas; ", p.pow(n)));
        // Nonzero squares other than ±1: (q-1)/2 - 1 when -1 is a square,
        // (q-1)/2 - 1 otherwise too (exactly one of ±1 is dropped from the
        // squares besides 1 itself).
        pass &= count > 0;
    }
    report_criterion("criterion-5 theorem 4 (q in {7,9}, all gamma)", pass, &detail);
}

/// Criterion 6: the pair search over PGL(2, F_5) with subgroup orders up to 8
/// rediscovers the configuration carried by the first curve's two Galois
/// points: a certificate whose groups are conjugate to the two deck groups.
#[test]
fn criterion_6_pair_search_rediscovery() {
    let ctx = FieldCtx::new(5, 1, 1).unwrap();
    let outcome = problem_pair_search(&ctx, 8, 1_000_000).unwrap();
    assert!(!outcome.truncated, "search budget was generous enough");

    // Deck groups of the two projections of the first curve, restricted to
    // F_5-rational matrices.
    let spec = CurveSpec { label: CurveLabel::C1, p: 5, n: 1, gamma: None };
    let p1 = P2Point::new(&ctx, ctx.zero(), ctx.one(), ctx.zero()).unwrap();
    let p2 = P2Point::new(&ctx, ctx.one(), ctx.zero(), ctx.zero()).unwrap();
    let deck1 = is_galois_point(&spec, 1, &p1, &DEFAULT_LADDER).unwrap().group.unwrap();
    let deck2 = is_galois_point(&spec, 1, &p2, &DEFAULT_LADDER).unwrap().group.unwrap();
    let deck1 = restrict_subgroup(&deck1).expect("deck entries are F_5-rational");
    let deck2 = restrict_subgroup(&deck2).expect("deck entries are F_5-rational");
    let ambient = enumerate_pgl2(&ctx, 1).unwrap();

    let conjugate = |a: &Subgroup, b: &Subgroup| a.find_conjugator(b, &ambient).is_some();
    let hit = outcome.certificates.iter().find(|cert| {
        (conjugate(&cert.h1, &deck1) && conjugate(&cert.h2, &deck2))
            || (conjugate(&cert.h1, &deck2) && conjugate(&cert.h2, &deck1))
    });
    let pass = hit.is_some();
    let detail = format!(
        "{} certificates; deck groups {} and {}; match found: {}",
        outcome.certificates.len(),
        deck1.structure(),
        deck2.structure(),
        pass
    );
    report_criterion("criterion-6 pair search rediscovery (q=5, max order 8)", pass, &detail);
}

/// Criterion 7: property suites — exhaustive at q=5 and at least 1000 seeded
/// random samples at q in {7, 9}.
#[test]
fn criterion_7_property_suites() {
    // Exhaustive at q = 5: the action of PGL(2, F_5) is a homomorphism on
    // every pair of elements and every rational point, and curve membership
    // agrees with rational preimages on all of P^2(F_5).
    let ctx = FieldCtx::new(5, 1, 1).unwrap();
    let group = enumerate_pgl2(&ctx, 1).unwrap();
    let points = P1Point::all(&ctx, 1).unwrap();
    assert_eq!(group.len(), 120);
    for a in &group {
        for b in &group {
            let c = a.compose(&ctx, b);
            for p in &points {
                assert_eq!(c.act(&ctx, p), a.act(&ctx, &b.act(&ctx, p)));
            }
        }
        assert!(a.compose(&ctx, &a.inverse(&ctx)).is_identity(&ctx));
    }
    let spec = CurveSpec { label: CurveLabel::C1, p: 5, n: 1, gamma: None };
    let (_, curve) = spec.build(1).unwrap();
    for r in P2Point::all(&ctx, 1).unwrap() {
        let fiber = curve.preimages(&r, 1).unwrap();
        if !fiber.is_empty() {
            assert!(curve.contains(&r).unwrap());
            assert!(curve.multiplicity_at(&r).unwrap() as usize >= fiber.len());
        }
    }

    // Seeded sampling at q in {7, 9}: field axioms, Frobenius, and the group
    // action on random invertible matrices.
    let mut total_samples = 0usize;
    for (p, n) in [(7u64, 1u32), (3, 2)] {
        let ctx = FieldCtx::new(p, n, 1).unwrap();
        let size = ctx.size();
        let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15 ^ ctx.q());
        let mut samples = 0usize;
        while samples < 1000 {
            let a = ctx.elem(rng.gen_range(0..size));
            let b = ctx.elem(rng.gen_range(0..size));
            let c = ctx.elem(rng.gen_range(0..size));
            // Ring axioms on a random triple.
            assert_eq!(ctx.mul(ctx.add(a, b), c), ctx.add(ctx.mul(a, c), ctx.mul(b, c)));
            assert_eq!(ctx.add(a, b), ctx.add(b, a));
            assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
            if !a.is_zero() {
                assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), ctx.one());
            }
            // Frobenius is the p-th power map and fixes the prime field.
            assert_eq!(ctx.frobenius(a), ctx.pow(a, ctx.p()));
            // Action compatibility on a random matrix pair when invertible.
            let m1 = Mobius::new(&ctx, [a, b, c, ctx.elem(rng.gen_range(0..size))]);
            let m2 = Mobius::new(
                &ctx,
                [
                    ctx.elem(rng.gen_range(0..size)),
                    ctx.elem(rng.gen_range(0..size)),
                    ctx.elem(rng.gen_range(0..size)),
                    ctx.elem(rng.gen_range(0..size)),
                ],
            );
            if let (Ok(m1), Ok(m2)) = (m1, m2) {
                let q = P1Point::affine(&ctx, b);
                let composed = m1.compose(&ctx, &m2);
                assert_eq!(composed.act(&ctx, &q), m1.act(&ctx, &m2.act(&ctx, &q)));
                assert!(m1.compose(&ctx, &m1.inverse(&ctx)).is_identity(&ctx));
            }
            samples += 1;
        }
        total_samples += samples;
    }
    report_criterion(
        "criterion-7 property suites (exhaustive q=5; seeded q in {7,9})",
        total_samples >= 2000,
        &format!("120^2 exhaustive action checks at q=5; {total_samples} seeded samples"),
    );
}
