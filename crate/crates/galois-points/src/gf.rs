//! Exact arithmetic in the tower `F_p ⊂ F_q ⊂ F_{q^m}` of finite fields of
//! odd characteristic.
//!
//! A [`FieldCtx`] fixes the whole tower at once: the characteristic `p`, the
//! base field `F_q` with `q = p^n`, and a working extension `F_{q^m}`.
//! Internally all elements live in a single extension `F_p[x]/(modulus)` of
//! degree `n·m`, with a fixed embedding of the base field. The modulus is the
//! lexicographically first monic irreducible polynomial of the right degree,
//! so independently constructed contexts with the same parameters agree
//! element-by-element.
//!
//! Elements are indices: the coefficient vector `(c_0, ..., c_{d-1})` over
//! `F_p` is packed as the integer `Σ c_i p^i`. Multiplication goes through
//! discrete log/exp tables built once per context, which keeps desk-scale
//! scans cheap.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Hard cap on `|F_{q^m}|`; the log/exp tables are dense vectors.
pub const MAX_FIELD_SIZE: u64 = 1 << 24;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum FieldError {
    #[error("p = {0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 unsupported")]
    CharacteristicTwo,
    #[error("q = {0} < 5; the base field must have at least 5 elements")]
    FieldTooSmall(u64),
    #[error("field size {0} exceeds the supported bound {MAX_FIELD_SIZE}")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element belongs to a different field context")]
    ContextMismatch,
    #[error("quadratic character test requires a nonzero element of F_q")]
    BadSquareArgument,
    #[error("degree {sub} is not a subfield degree of {big}")]
    NotASubfield { sub: u32, big: u32 },
}

/// An element of `F_{q^m}`, tagged with its context so accidental mixing of
/// fields is caught at run time.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe {
    tag: u32,
    idx: u64,
}

impl Fe {
    /// Packed index of the element: `Σ c_i p^i` for the coefficient vector.
    pub fn index(self) -> u64 {
        self.idx
    }

    pub fn is_zero(self) -> bool {
        self.idx == 0
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe({})", self.idx)
    }
}

struct CtxInner {
    p: u64,
    n: u32,
    m: u32,
    deg: u32,
    q: u64,
    size: u64,
    tag: u32,
    /// Monic irreducible of degree `deg` over `F_p`, little-endian.
    modulus: Vec<u64>,
    /// Canonical degree-`n` irreducible defining `F_q` over `F_p`.
    subfield_modulus: Vec<u64>,
    /// exp[i] = index of g^i, for a fixed primitive element g of the big field.
    exp: Vec<u64>,
    /// log[idx] for idx > 0.
    log: Vec<u64>,
    /// Embedding table: canonical `F_q` index -> index in this field.
    embed_q: Vec<u64>,
    /// Inverse of `embed_q`.
    restrict_q: HashMap<u64, u64>,
}

/// The field tower. Cheap to clone (shared immutable data) and safe to share
/// across threads.
#[derive(Clone)]
pub struct FieldCtx(Arc<CtxInner>);

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FieldCtx(p={}, n={}, m={}, size={})",
            self.0.p, self.0.n, self.0.m, self.0.size
        )
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.0.tag == other.0.tag
    }
}
impl Eq for FieldCtx {}

fn ctx_tag(p: u64, n: u32, m: u32) -> u32 {
    // Deterministic and injective for desk-scale parameters.
    (p as u32)
        .wrapping_mul(0x0100_0193)
        .wrapping_add(n.wrapping_mul(0x0001_0001))
        .wrapping_add(m.wrapping_mul(0x61c8_8647))
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn factorize(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= x {
        if x % d == 0 {
            out.push(d);
            while x % d == 0 {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

// ---------------------------------------------------------------------------
// Raw polynomial arithmetic over F_p (little-endian digit vectors), used only
// during context construction.
// ---------------------------------------------------------------------------

fn ptrim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    ptrim(&mut out);
    out
}

fn pinv_scalar(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a nonzero.
    let mut r = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

/// Remainder of `a` modulo monic `mo`.
fn prem(a: &[u64], mo: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    ptrim(&mut r);
    let d = mo.len() - 1;
    while r.len() > d {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - d;
        if lead != 0 {
            for i in 0..=d {
                let sub = lead * mo[i] % p;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
        ptrim(&mut r);
    }
    r
}

fn pmulmod(a: &[u64], b: &[u64], mo: &[u64], p: u64) -> Vec<u64> {
    prem(&pmul(a, b, p), mo, p)
}

fn ppowmod(base: &[u64], mut e: u64, mo: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = prem(base, mo, p);
    while e > 0 {
        if e & 1 == 1 {
            result = pmulmod(&result, &b, mo, p);
        }
        b = pmulmod(&b, &b, mo, p);
        e >>= 1;
    }
    result
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    ptrim(&mut a);
    ptrim(&mut b);
    while !b.is_empty() {
        // Make b monic for the remainder step.
        let lead = *b.last().unwrap();
        let linv = pinv_scalar(lead, p);
        let bm: Vec<u64> = b.iter().map(|&c| c * linv % p).collect();
        let r = prem(&a, &bm, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let linv = pinv_scalar(lead, p);
        a.iter().map(|&c| c * linv % p).collect()
    } else {
        a
    }
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = (f.len() - 1) as u32;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // x^(p^d) == x mod f
    let mut xp = x.clone();
    for _ in 0..d {
        xp = ppowmod(&xp, p, f, p);
    }
    let mut diff = xp.clone();
    // diff -= x
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    ptrim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    // gcd(x^(p^(d/r)) - x, f) == 1 for every prime r | d
    for r in factorize(d as u64) {
        let k = d as u64 / r;
        let mut xk = x.clone();
        for _ in 0..k {
            xk = ppowmod(&xk, p, f, p);
        }
        let mut diff = xk;
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        ptrim(&mut diff);
        let g = pgcd(&diff, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically first monic irreducible of degree `d` over `F_p`, in the
/// packed-index coefficient ordering.
fn first_irreducible(p: u64, d: u32) -> Vec<u64> {
    let count = p.pow(d);
    for idx in 0..count {
        let mut f = Vec::with_capacity(d as usize + 1);
        let mut rest = idx;
        for _ in 0..d {
            f.push(rest % p);
            rest /= p;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

// ---------------------------------------------------------------------------

impl CtxInner {
    fn decode(&self, mut idx: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.deg as usize);
        for _ in 0..self.deg {
            out.push(idx % self.p);
            idx /= self.p;
        }
        out
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        let mut out = 0u64;
        for &d in digits.iter().rev() {
            out = out * self.p + d;
        }
        out
    }

    fn add_idx(&self, mut a: u64, mut b: u64) -> u64 {
        let mut out = 0u64;
        let mut mult = 1u64;
        for _ in 0..self.deg {
            out += (a % self.p + b % self.p) % self.p * mult;
            a /= self.p;
            b /= self.p;
            mult *= self.p;
        }
        out
    }

    fn neg_idx(&self, mut a: u64) -> u64 {
        let mut out = 0u64;
        let mut mult = 1u64;
        for _ in 0..self.deg {
            let d = a % self.p;
            out += if d == 0 { 0 } else { self.p - d } * mult;
            a /= self.p;
            mult *= self.p;
        }
        out
    }

    fn mul_idx(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let ord = self.size - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % ord) as usize]
    }

    fn inv_idx(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        let ord = self.size - 1;
        self.exp[((ord - self.log[a as usize]) % ord) as usize]
    }

    fn pow_idx(&self, a: u64, e: u64) -> u64 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let ord = self.size - 1 ;
        let l = (self.log[a as usize] as u128 * e as u128 % ord as u128) as u64;
        self.exp[l as usize]
    }
}

impl FieldCtx {
    /// Build the tower `F_p ⊂ F_{p^n} ⊂ F_{(p^n)^m}`.
    pub fn new(p: u64, n: u32, m: u32) -> Result<FieldCtx, FieldError> {
        if p == 2 {
            return Err(FieldError::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 || m == 0 {
            return Err(FieldError::FieldTooSmall(0));
        }
        let deg = n * m;
        let size = (0..deg).try_fold(1u64, |acc, _| {
            acc.checked_mul(p).filter(|&s| s <= MAX_FIELD_SIZE)
        });
        let size = match size {
            Some(s) => s,
            None => return Err(FieldError::FieldTooLarge(u64::MAX)),
        };
        let q = p.pow(n);
        if q < 5 {
            return Err(FieldError::FieldTooSmall(q));
        }

        let modulus = first_irreducible(p, deg);
        let subfield_modulus = first_irreducible(p, n);
        let tag = ctx_tag(p, n, m);

        let mut inner = CtxInner {
            p,
            n,
            m,
            deg,
            q,
            size,
            tag,
            modulus,
            subfield_modulus,
            exp: Vec::new(),
            log: Vec::new(),
            embed_q: Vec::new(),
            restrict_q: HashMap::new(),
        };

        // Find the smallest multiplicative generator of the big field.
        let ord = size - 1;
        let fac = factorize(ord);
        let mut gen_digits = Vec::new();
        'outer: for idx in 2..size {
            let digits = inner.decode(idx);
            for &ell in &fac {
                let pw = ppowmod(&digits, ord / ell, &inner.modulus, p);
                if pw == vec![1u64] {
                    continue 'outer;
                }
            }
            gen_digits = digits;
            break;
        }
        debug_assert!(!gen_digits.is_empty());

        let mut exp = Vec::with_capacity(ord as usize);
        let mut log = vec![0u64; size as usize];
        let mut cur = vec![1u64];
        for i in 0..ord {
            let idx = inner.encode(&{
                let mut c = cur.clone();
                c.resize(deg as usize, 0);
                c
            });
            exp.push(idx);
            log[idx as usize] = i;
            cur = pmulmod(&cur, &gen_digits, &inner.modulus, p);
        }
        inner.exp = exp;
        inner.log = log;

        // Embed the canonical F_q into this field: map the generator of the
        // canonical representation F_p[y]/(subfield_modulus) to the
        // lexicographically least root of subfield_modulus here.
        let root = if n == deg {
            // The modulus is the subfield modulus itself; x is a root and no
            // smaller index can be (a root generates the whole field).
            inner.encode(&{
                let mut c = vec![0u64, 1];
                c.resize(deg as usize, 0);
                c
            })
        } else {
            let mut found = 0u64;
            for idx in 0..size {
                // Horner evaluation of subfield_modulus at idx.
                let mut acc = 0u64;
                for &c in inner.subfield_modulus.iter().rev() {
                    acc = inner.add_idx(inner.mul_idx(acc, idx), c);
                }
                if acc == 0 {
                    found = idx;
                    break;
                }
            }
            found
        };

        let mut embed_q = Vec::with_capacity(q as usize);
        let mut restrict_q = HashMap::with_capacity(q as usize);
        for small in 0..q {
            let mut rest = small;
            let mut digits = Vec::with_capacity(n as usize);
            for _ in 0..n {
                digits.push(rest % p);
                rest /= p;
            }
            let mut acc = 0u64;
            for &c in digits.iter().rev() {
                acc = inner.add_idx(inner.mul_idx(acc, root), c);
            }
            embed_q.push(acc);
            restrict_q.insert(acc, small);
        }
        inner.embed_q = embed_q;
        inner.restrict_q = restrict_q;

        Ok(FieldCtx(Arc::new(inner)))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn n(&self) -> u32 {
        self.0.n
    }
    pub fn m(&self) -> u32 {
        self.0.m
    }
    /// `q = p^n`, the size of the base field.
    pub fn q(&self) -> u64 {
        self.0.q
    }
    /// Total number of elements, `q^m`.
    pub fn size(&self) -> u64 {
        self.0.size
    }
    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.0.deg
    }
    pub fn tag(&self) -> u32 {
        self.0.tag
    }
    /// The defining modulus over `F_p`, little-endian coefficients.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }
    /// The canonical modulus defining `F_q` over `F_p`.
    pub fn subfield_modulus(&self) -> &[u64] {
        &self.0.subfield_modulus
    }

    pub fn check(&self, x: Fe) -> Result<(), FieldError> {
        if x.tag == self.0.tag {
            Ok(())
        } else {
            Err(FieldError::ContextMismatch)
        }
    }

    fn owns(&self, x: Fe) -> bool {
        x.tag == self.0.tag
    }

    pub fn zero(&self) -> Fe {
        Fe { tag: self.0.tag, idx: 0 }
    }
    pub fn one(&self) -> Fe {
        Fe { tag: self.0.tag, idx: 1 }
    }

    /// Element with the given packed coefficient index.
    pub fn elem(&self, idx: u64) -> Fe {
        assert!(idx < self.0.size, "element index out of range");
        Fe { tag: self.0.tag, idx }
    }

    /// Image of an integer under the ring map `Z -> F_p ⊂ F_{q^m}`.
    pub fn from_int(&self, i: i64) -> Fe {
        let p = self.0.p as i64;
        let r = ((i % p) + p) % p;
        Fe { tag: self.0.tag, idx: r as u64 }
    }

    pub fn coeffs(&self, x: Fe) -> Vec<u64> {
        assert!(self.owns(x));
        self.0.decode(x.idx)
    }

    pub fn from_coeffs(&self, c: &[u64]) -> Fe {
        assert!(c.len() <= self.0.deg as usize);
        let mut digits: Vec<u64> = c.iter().map(|&x| x % self.0.p).collect();
        digits.resize(self.0.deg as usize, 0);
        Fe { tag: self.0.tag, idx: self.0.encode(&digits) }
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        assert!(self.owns(a) && self.owns(b), "field context mismatch");
        Fe { tag: self.0.tag, idx: self.0.add_idx(a.idx, b.idx) }
    }

    pub fn neg(&self, a: Fe) -> Fe {
        assert!(self.owns(a), "field context mismatch");
        Fe { tag: self.0.tag, idx: self.0.neg_idx(a.idx) }
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        assert!(self.owns(a) && self.owns(b), "field context mismatch");
        Fe { tag: self.0.tag, idx: self.0.mul_idx(a.idx, b.idx) }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, FieldError> {
        self.check(a)?;
        if a.idx == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Fe { tag: self.0.tag, idx: self.0.inv_idx(a.idx) })
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe, FieldError> {
        self.check(a)?;
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply via the discrete-log table.
    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        assert!(self.owns(a), "field context mismatch");
        Fe { tag: self.0.tag, idx: self.0.pow_idx(a.idx, e) }
    }

    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.0.p)
    }

    /// Order of `a` in the multiplicative group.
    pub fn multiplicative_order(&self, a: Fe) -> Result<u64, FieldError> {
        self.check(a)?;
        if a.idx == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let ord = self.0.size - 1;
        let l = self.0.log[a.idx as usize];
        Ok(ord / gcd_u64(ord, l))
    }

    /// All `q^m` elements in ascending index order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        let tag = self.0.tag;
        (0..self.0.size).map(move |idx| Fe { tag, idx })
    }

    /// The `q` elements of the embedded base field, in the order of their
    /// canonical `F_q` representation.
    pub fn subfield_elements(&self) -> Vec<Fe> {
        let tag = self.0.tag;
        self.0.embed_q.iter().map(|&idx| Fe { tag, idx }).collect()
    }

    /// Elements of the intermediate field `F_{q^e}` (requires `e | m`).
    pub fn intermediate_elements(&self, e: u32) -> Result<Vec<Fe>, FieldError> {
        if self.0.m % e != 0 {
            return Err(FieldError::NotASubfield { sub: self.0.n * e, big: self.0.deg });
        }
        let qe = self.0.q.pow(e);
        Ok(self
            .elements()
            .filter(|&x| self.pow(x, qe) == x)
            .collect())
    }

    /// True iff `x` lies in the embedded base field `F_q`.
    pub fn in_subfield(&self, x: Fe) -> bool {
        assert!(self.owns(x));
        self.pow(x, self.0.q) == x
    }

    /// Map an element of the canonical `F_q` context (`m = 1`) into this field.
    pub fn embed_subfield(&self, x_small: Fe) -> Result<Fe, FieldError> {
        if x_small.tag != ctx_tag(self.0.p, self.0.n, 1) {
            return Err(FieldError::ContextMismatch);
        }
        Ok(Fe { tag: self.0.tag, idx: self.0.embed_q[x_small.idx as usize] })
    }

    /// Inverse of [`embed_subfield`](Self::embed_subfield); `None` when `x` is
    /// outside the embedded `F_q`.
    pub fn restrict_subfield(&self, x: Fe) -> Option<Fe> {
        assert!(self.owns(x));
        let small_tag = ctx_tag(self.0.p, self.0.n, 1);
        self.0
            .restrict_q
            .get(&x.idx)
            .map(|&idx| Fe { tag: small_tag, idx })
    }

    /// The canonical `F_q` context (same `p`, `n`, with `m = 1`).
    pub fn subfield_ctx(&self) -> FieldCtx {
        FieldCtx::new(self.0.p, self.0.n, 1).expect("valid parameters")
    }

    /// Embedding table from a smaller context into this one: `table[i]` is the
    /// index here of the image of the element with index `i` in `sub`. The
    /// image of the generator of `sub` is the lexicographically least root of
    /// `sub`'s modulus in this field, so the map is deterministic.
    pub fn embedding_from(&self, sub: &FieldCtx) -> Result<Vec<u64>, FieldError> {
        if sub.0.p != self.0.p || self.0.deg % sub.0.deg != 0 {
            return Err(FieldError::NotASubfield { sub: sub.0.deg, big: self.0.deg });
        }
        let inner = &self.0;
        let mut root = None;
        for idx in 0..inner.size {
            let mut acc = 0u64;
            for &c in sub.0.modulus.iter().rev() {
                acc = inner.add_idx(inner.mul_idx(acc, idx), c);
            }
            if acc == 0 {
                root = Some(idx);
                break;
            }
        }
        let root = root.expect("subfield modulus splits in the big field");
        let mut table = Vec::with_capacity(sub.0.size as usize);
        for small in 0..sub.0.size {
            let digits = sub.0.decode(small);
            let mut acc = 0u64;
            for &c in digits.iter().rev() {
                acc = inner.add_idx(inner.mul_idx(acc, root), c);
            }
            table.push(acc);
        }
        Ok(table)
    }

    /// Embed a single element of a smaller context. Recomputes the embedding
    /// table; use [`embedding_from`](Self::embedding_from) for bulk transfers.
    pub fn embed_from(&self, sub: &FieldCtx, x: Fe) -> Result<Fe, FieldError> {
        sub.check(x)?;
        let table = self.embedding_from(sub)?;
        Ok(Fe { tag: self.0.tag, idx: table[x.idx as usize] })
    }

    /// Restrict an element to a smaller context, if it lies in the image of
    /// the canonical embedding.
    pub fn restrict_to(&self, sub: &FieldCtx, x: Fe) -> Result<Option<Fe>, FieldError> {
        self.check(x)?;
        let table = self.embedding_from(sub)?;
        Ok(table
            .iter()
            .position(|&idx| idx == x.idx)
            .map(|i| Fe { tag: sub.0.tag, idx: i as u64 }))
    }

    /// The deterministic primitive element of `F_q`: the first element in the
    /// canonical enumeration that generates the multiplicative group of the
    /// base field, returned embedded in this field.
    pub fn primitive_subfield_element(&self) -> Fe {
        let tag = self.0.tag;
        for small in 2..self.0.q {
            let x = Fe { tag, idx: self.0.embed_q[small as usize] };
            if self.multiplicative_order(x) == Ok(self.0.q - 1) {
                return x;
            }
        }
        unreachable!("F_q always has a primitive element")
    }

    /// Euler's criterion on the base field: `x^{(q-1)/2} = 1`.
    pub fn is_square_in_subfield(&self, x: Fe) -> Result<bool, FieldError> {
        self.check(x)?;
        if x.idx == 0 || !self.in_subfield(x) {
            return Err(FieldError::BadSquareArgument);
        }
        Ok(self.pow(x, (self.0.q - 1) / 2) == self.one())
    }

    /// Render an element for reports: a bare integer in the prime field,
    /// otherwise the coefficient vector over `F_p`.
    pub fn display(&self, x: Fe) -> String {
        assert!(self.owns(x));
        if self.0.deg == 1 {
            format!("{}", x.idx)
        } else {
            let c = self.coeffs(x);
            format!(
                "[{}]",
                c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            )
        }
    }
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldCtx::new(2, 1, 1).unwrap_err(), FieldError::CharacteristicTwo);
        assert_eq!(FieldCtx::new(9, 1, 1).unwrap_err(), FieldError::NotPrime(9));
        assert_eq!(FieldCtx::new(3, 1, 1).unwrap_err(), FieldError::FieldTooSmall(3));
        assert!(FieldCtx::new(5, 1, 1).is_ok());
    }

    #[test]
    fn f25_modulus_has_no_root_in_f5() {
        let ctx = FieldCtx::new(5, 1, 2).unwrap();
        let m = ctx.modulus();
        assert_eq!(m.len(), 3);
        for a in 0..5u64 {
            let v = (m[0] + m[1] * a + m[2] * a * a) % 5;
            assert_ne!(v, 0, "modulus must be irreducible over F_5");
        }
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = FieldCtx::new(5, 1, 1).unwrap();
        let two = f5.from_int(2);
        let four = f5.from_int(4);
        assert_eq!(f5.add(two, four), f5.one());
        assert_eq!(f5.pow(two, 4), f5.one());
        assert_eq!(f5.inv(two).unwrap(), f5.from_int(3));
        assert_eq!(f5.inv(f5.zero()).unwrap_err(), FieldError::DivisionByZero);
    }

    #[test]
    fn context_mixing_is_rejected() {
        let f5 = FieldCtx::new(5, 1, 1).unwrap();
        let f7 = FieldCtx::new(7, 1, 1).unwrap();
        assert_eq!(f5.check(f7.one()).unwrap_err(), FieldError::ContextMismatch);
    }

    /// Brute-force multiplicative order, independent of the log tables.
    fn naive_order(ctx: &FieldCtx, x: Fe) -> u64 {
        let mut acc = x;
        let mut k = 1;
        while acc != ctx.one() {
            acc = ctx.mul(acc, x);
            k += 1;
        }
        k
    }

    #[test]
    fn primitive_elements_match_brute_force() {
        let f5 = FieldCtx::new(5, 1, 1).unwrap();
        let a5 = f5.primitive_subfield_element();
        assert_eq!(a5.index(), 2);
        assert_eq!(naive_order(&f5, a5), 4);

        let f7 = FieldCtx::new(7, 1, 1).unwrap();
        let a7 = f7.primitive_subfield_element();
        assert_eq!(a7.index(), 3);
        assert_eq!(naive_order(&f7, a7), 6);

        let f9 = FieldCtx::new(3, 2, 1).unwrap();
        let a9 = f9.primitive_subfield_element();
        assert_eq!(naive_order(&f9, a9), 8);
    }

    #[test]
    fn square_tests_match_exhaustive_squares() {
        for (p, n) in [(5u64, 1u32), (7, 1), (3, 2)] {
            let ctx = FieldCtx::new(p, n, 1).unwrap();
            let squares: std::collections::HashSet<Fe> = ctx
                .elements()
                .filter(|x| !x.is_zero())
                .map(|x| ctx.mul(x, x))
                .collect();
            for x in ctx.elements().filter(|x| !x.is_zero()) {
                assert_eq!(ctx.is_square_in_subfield(x).unwrap(), squares.contains(&x));
            }
        }
        let f5 = FieldCtx::new(5, 1, 1).unwrap();
        assert!(f5.is_square_in_subfield(f5.from_int(4)).unwrap());
        assert!(!f5.is_square_in_subfield(f5.from_int(3)).unwrap());
        assert_eq!(
            f5.is_square_in_subfield(f5.zero()).unwrap_err(),
            FieldError::BadSquareArgument
        );
        let f7 = FieldCtx::new(7, 1, 1).unwrap();
        assert!(f7.is_square_in_subfield(f7.from_int(2)).unwrap());
    }

    #[test]
    fn enumeration_and_frobenius_fixed_points() {
        let f25 = FieldCtx::new(5, 1, 2).unwrap();
        assert_eq!(f25.elements().count(), 25);
        let fixed = f25.elements().filter(|&x| f25.pow(x, 5) == x).count();
        assert_eq!(fixed, 5, "Frobenius fixes exactly the prime field");

        let f49 = FieldCtx::new(7, 1, 2).unwrap();
        assert_eq!(f49.elements().count(), 49);
    }

    #[test]
    fn subfield_embedding_is_a_field_homomorphism() {
        let big = FieldCtx::new(5, 1, 2).unwrap();
        let small = big.subfield_ctx();
        for a in small.elements() {
            for b in small.elements() {
                let ea = big.embed_subfield(a).unwrap();
                let eb = big.embed_subfield(b).unwrap();
                assert_eq!(
                    big.embed_subfield(small.add(a, b)).unwrap(),
                    big.add(ea, eb)
                );
                assert_eq!(
                    big.embed_subfield(small.mul(a, b)).unwrap(),
                    big.mul(ea, eb)
                );
            }
        }
        // Round trip.
        for a in small.elements() {
            let e = big.embed_subfield(a).unwrap();
            assert_eq!(big.restrict_subfield(e), Some(a));
        }
    }

    #[test]
    fn unit_group_order() {
        for (p, n, m) in [(5u64, 1u32, 2u32), (3, 2, 1), (7, 1, 1)] {
            let ctx = FieldCtx::new(p, n, m).unwrap();
            for x in ctx.elements().filter(|x| !x.is_zero()) {
                assert_eq!(ctx.pow(x, ctx.size() - 1), ctx.one());
            }
        }
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative() {
        let ctx = FieldCtx::new(3, 2, 2).unwrap();
        for a in ctx.elements().step_by(7) {
            for b in ctx.elements().step_by(5) {
                assert_eq!(
                    ctx.frobenius(ctx.add(a, b)),
                    ctx.add(ctx.frobenius(a), ctx.frobenius(b))
                );
                assert_eq!(
                    ctx.frobenius(ctx.mul(a, b)),
                    ctx.mul(ctx.frobenius(a), ctx.frobenius(b))
                );
            }
        }
    }

    #[test]
    fn intermediate_field_sizes() {
        let ctx = FieldCtx::new(5, 1, 2).unwrap();
        assert_eq!(ctx.intermediate_elements(1).unwrap().len(), 5);
        assert_eq!(ctx.intermediate_elements(2).unwrap().len(), 25);
    }
}
