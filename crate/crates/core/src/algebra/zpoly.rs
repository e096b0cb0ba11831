//! Integer bivariate polynomial arithmetic used by fraction reduction.
//!
//! A polynomial in q and t over Z is stored dense: the outer vector is
//! indexed by the t-degree and each row is a polynomial in q (index =
//! q-degree, no trailing zeros; no trailing zero rows). Gcds run the
//! primitive polynomial remainder sequence, treating the input as a
//! polynomial in t with coefficients in Z[q] and stripping the content
//! after every pseudo-remainder, so every gcd bottoms out in integer
//! gcds. Exact division is long division in t that insists each
//! coefficient step divide exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Univariate integer polynomial in q; index is the q-degree.
pub type Zq = Vec<BigInt>;
/// Bivariate integer polynomial; outer index is the t-degree.
pub type Zpq = Vec<Zq>;

fn uni_trim(f: &mut Zq) {
    while f.last().map(|c| c.is_zero()).unwrap_or(false) {
        f.pop();
    }
}

pub fn uni_is_zero(f: &Zq) -> bool {
    f.iter().all(|c| c.is_zero())
}

fn uni_deg(f: &Zq) -> usize {
    debug_assert!(!f.is_empty());
    f.len() - 1
}

fn uni_mul(a: &Zq, b: &Zq) -> Zq {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    uni_trim(&mut out);
    out
}

fn uni_sub_shifted_mul(r: &mut Zq, c: &BigInt, shift: usize, b: &Zq) {
    // r -= c * q^shift * b
    if r.len() < shift + b.len() {
        r.resize(shift + b.len(), BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        r[shift + i] -= c * y;
    }
    uni_trim(r);
}

/// Gcd of all coefficients; non-negative, zero only for the zero polynomial.
pub fn uni_content(f: &Zq) -> BigInt {
    let mut g = BigInt::zero();
    for c in f {
        if !c.is_zero() {
            g = g.gcd(c);
        }
    }
    g
}

/// Split into (content, primitive part); the primitive part has positive
/// leading coefficient, so the content carries the sign.
pub fn uni_primitive(f: &Zq) -> (BigInt, Zq) {
    if uni_is_zero(f) {
        return (BigInt::zero(), Vec::new());
    }
    let mut c = uni_content(f);
    if f.last().unwrap().is_negative() {
        c = -c;
    }
    let prim = f.iter().map(|x| x / &c).collect();
    (c, prim)
}

/// Pseudo-remainder of a by b, up to a scalar multiple; callers strip
/// content immediately afterwards so the exact scalar does not matter.
fn uni_prem(a: &Zq, b: &Zq) -> Zq {
    let db = uni_deg(b);
    let lc_b = b[db].clone();
    let mut r = a.clone();
    while !r.is_empty() && uni_deg(&r) >= db {
        let dr = uni_deg(&r);
        let lc_r = r[dr].clone();
        for x in r.iter_mut() {
            *x *= &lc_b;
        }
        uni_sub_shifted_mul(&mut r, &lc_r, dr - db, b);
    }
    r
}

/// Gcd in Z[q] by the primitive Euclidean algorithm; result has positive
/// leading coefficient.
pub fn uni_gcd(a: &Zq, b: &Zq) -> Zq {
    if uni_is_zero(a) {
        let (c, p) = uni_primitive(b);
        return p.iter().map(|x| x * c.abs()).collect();
    }
    if uni_is_zero(b) {
        let (c, p) = uni_primitive(a);
        return p.iter().map(|x| x * c.abs()).collect();
    }
    let (ca, mut pa) = uni_primitive(a);
    let (cb, mut pb) = uni_primitive(b);
    let c = ca.gcd(&cb);
    if uni_deg(&pa) < uni_deg(&pb) {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !uni_is_zero(&pb) {
        let r = uni_prem(&pa, &pb);
        pa = pb;
        pb = uni_primitive(&r).1;
    }
    pa.iter().map(|x| x * &c).collect()
}

/// Exact quotient a / b in Z[q]; panics if the division is not exact,
/// which signals an internal invariant failure.
pub fn uni_div_exact(a: &Zq, b: &Zq) -> Zq {
    assert!(!uni_is_zero(b), "division by zero polynomial");
    if uni_is_zero(a) {
        return Vec::new();
    }
    let da = uni_deg(a);
    let db = uni_deg(b);
    assert!(da >= db, "inexact polynomial division: degree too low");
    let mut q = vec![BigInt::zero(); da - db + 1];
    let mut r = a.clone();
    while !r.is_empty() && uni_deg(&r) >= db {
        let dr = uni_deg(&r);
        let (quot, rem) = r[dr].div_rem(&b[db]);
        assert!(rem.is_zero(), "inexact polynomial division: leading coefficient");
        uni_sub_shifted_mul(&mut r, &quot, dr - db, b);
        q[dr - db] = quot;
    }
    assert!(r.is_empty(), "inexact polynomial division: nonzero remainder");
    q
}

pub fn bi_trim(f: &mut Zpq) {
    for row in f.iter_mut() {
        uni_trim(row);
    }
    while f.last().map(|row| row.is_empty()).unwrap_or(false) {
        f.pop();
    }
}

pub fn bi_is_zero(f: &Zpq) -> bool {
    f.iter().all(uni_is_zero)
}

fn bi_deg_t(f: &Zpq) -> usize {
    debug_assert!(!f.is_empty());
    f.len() - 1
}

#[cfg(test)]
pub fn bi_mul(a: &Zpq, b: &Zpq) -> Zpq {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out: Zpq = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let prod = uni_mul(x, y);
            if prod.is_empty() {
                continue;
            }
            if out[i + j].len() < prod.len() {
                out[i + j].resize(prod.len(), BigInt::zero());
            }
            for (k, c) in prod.into_iter().enumerate() {
                out[i + j][k] += c;
            }
        }
    }
    bi_trim(&mut out);
    out
}

/// Content with respect to t: the gcd in Z[q] of all rows.
pub fn bi_content_t(f: &Zpq) -> Zq {
    let mut g: Zq = Vec::new();
    for row in f {
        if !uni_is_zero(row) {
            g = uni_gcd(&g, row);
        }
    }
    g
}

/// Split into (t-content, t-primitive part).
fn bi_primitive_t(f: &Zpq) -> (Zq, Zpq) {
    if bi_is_zero(f) {
        return (Vec::new(), Vec::new());
    }
    let c = bi_content_t(f);
    let prim = f
        .iter()
        .map(|row| {
            if uni_is_zero(row) {
                Vec::new()
            } else {
                uni_div_exact(row, &c)
            }
        })
        .collect();
    (c, prim)
}

/// Pseudo-remainder in t with coefficients in Z[q], up to a scalar
/// polynomial multiple; callers strip the t-content immediately after.
fn bi_prem_t(a: &Zpq, b: &Zpq) -> Zpq {
    let db = bi_deg_t(b);
    let lc_b = b[db].clone();
    let mut r = a.clone();
    bi_trim(&mut r);
    while !r.is_empty() && bi_deg_t(&r) >= db {
        let dr = bi_deg_t(&r);
        let lc_r = r[dr].clone();
        for row in r.iter_mut() {
            *row = uni_mul(row, &lc_b);
        }
        for i in 0..=db {
            let sub = uni_mul(&lc_r, &b[i]);
            let row = &mut r[dr - db + i];
            if row.len() < sub.len() {
                row.resize(sub.len(), BigInt::zero());
            }
            for (k, c) in sub.into_iter().enumerate() {
                row[k] -= c;
            }
        }
        bi_trim(&mut r);
    }
    r
}

/// Gcd in Z[q,t] via the primitive remainder sequence in t. The result
/// is normalized so its top coefficient (highest t, then highest q) is
/// positive.
pub fn bi_gcd(a: &Zpq, b: &Zpq) -> Zpq {
    fn normalize_sign(mut f: Zpq) -> Zpq {
        bi_trim(&mut f);
        if let Some(row) = f.last() {
            if row.last().map(|c| c.is_negative()).unwrap_or(false) {
                for row in f.iter_mut() {
                    for c in row.iter_mut() {
                        *c = -c.clone();
                    }
                }
            }
        }
        f
    }
    if bi_is_zero(a) {
        return normalize_sign(b.clone());
    }
    if bi_is_zero(b) {
        return normalize_sign(a.clone());
    }
    let (ca, mut pa) = bi_primitive_t(a);
    let (cb, mut pb) = bi_primitive_t(b);
    let c = uni_gcd(&ca, &cb);
    if bi_deg_t(&pa) < bi_deg_t(&pb) {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !bi_is_zero(&pb) {
        let r = bi_prem_t(&pa, &pb);
        pa = pb;
        pb = bi_primitive_t(&r).1;
    }
    let scaled = pa.iter().map(|row| uni_mul(row, &c)).collect();
    normalize_sign(scaled)
}

/// Exact quotient a / b in Z[q,t]; panics if the division is not exact.
pub fn bi_div_exact(a: &Zpq, b: &Zpq) -> Zpq {
    assert!(!bi_is_zero(b), "division by zero polynomial");
    let mut r = a.clone();
    bi_trim(&mut r);
    if r.is_empty() {
        return Vec::new();
    }
    let da = bi_deg_t(&r);
    let db = bi_deg_t(b);
    assert!(da >= db, "inexact polynomial division: t-degree too low");
    let mut q: Zpq = vec![Vec::new(); da - db + 1];
    while !r.is_empty() && bi_deg_t(&r) >= db {
        let dr = bi_deg_t(&r);
        let qc = uni_div_exact(&r[dr], &b[db]);
        for i in 0..=db {
            let sub = uni_mul(&qc, &b[i]);
            let row = &mut r[dr - db + i];
            if row.len() < sub.len() {
                row.resize(sub.len(), BigInt::zero());
            }
            for (k, c) in sub.into_iter().enumerate() {
                row[k] -= c;
            }
        }
        bi_trim(&mut r);
        q[dr - db] = qc;
    }
    assert!(r.is_empty(), "inexact polynomial division: nonzero remainder");
    q
}
