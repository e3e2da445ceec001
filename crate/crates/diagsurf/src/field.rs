//! Finite fields `F_{p^m}` with deterministic construction.
//!
//! The modulus for `(p, m)` is the lexicographically smallest monic
//! degree-`m` polynomial over `F_p` (coefficient vector compared from the
//! constant term upward) that is irreducible and has `x` primitive, so the
//! primitive element is always `alpha = x` and two constructions of the
//! same `(p, m)` are bit-identical. Elements are encoded as integer codes
//! `c0 + c1*p + c2*p^2 + ...` of their coefficient vectors; multiplication
//! runs on log/antilog tables.

use crate::error::{Error, Result};

/// Default bound on the field size `p^m` (log tables are materialized).
pub const DEFAULT_MAX_FIELD: u64 = 1 << 20;

/// Element codes are `u32`; the size bound can never be raised past this.
const HARD_MAX_FIELD: u64 = 1 << 31;

/// A field element, identified by its canonical integer code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn from_code(code: u32) -> FieldElement {
        FieldElement(code)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The defining data of a field: characteristic, degree and modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    /// Characteristic (prime).
    pub p: u64,
    /// Extension degree over the prime field.
    pub m: u32,
    /// Monic modulus, coefficients from the constant term upward
    /// (`modulus[m] == 1`).
    pub modulus: Vec<u64>,
}

/// A concrete field `F_{p^m}` with its log/antilog tables.
///
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    spec: FieldSpec,
    q: u64,
    /// `antilog[j]` = code of `alpha^j`, `j` in `[0, q-1)`.
    antilog: Vec<u32>,
    /// `log[code]` = discrete log base `alpha`; `log[0]` is a sentinel.
    log: Vec<u32>,
}

/// The group `U_n` of n-th roots of unity, `n = (q-1)/d`, which is exactly
/// the set of nonzero d-th powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroupData {
    pub d: u64,
    pub n: u64,
    /// Members in ascending code order.
    pub members: Vec<FieldElement>,
    mask: Vec<bool>,
}

impl UnitGroupData {
    pub fn is_member(&self, x: FieldElement) -> bool {
        self.mask[x.code() as usize]
    }
}

/// Builds the canonical `F_{p^m}` under the default size bound.
pub fn build_field(p: u64, m: u32) -> Result<FieldCtx> {
    build_field_bounded(p, m, DEFAULT_MAX_FIELD)
}

/// Builds the canonical `F_{p^m}` under an explicit size bound.
pub fn build_field_bounded(p: u64, m: u32, max_size: u64) -> Result<FieldCtx> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m < 1 {
        return Err(Error::BadParams("extension degree must be >= 1".into()));
    }
    let bound = max_size.min(HARD_MAX_FIELD);
    let q = checked_pow(p, m).filter(|&q| q <= bound).ok_or_else(|| {
        Error::SizeExceeded {
            what: "field size p^m",
            requested: (p as u128).pow(m),
            bound: bound as u128,
        }
    })?;

    // Scan monic candidates in lexicographic coefficient order (constant
    // term most significant). A zero constant term makes x a zero divisor,
    // so those candidates are skipped outright.
    let mprimes = prime_factors(m as u64);
    let qprimes = prime_factors(q - 1);
    for idx in 0..q {
        let mut coeffs = decode_big_endian(idx, p, m);
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1); // monic
        if !is_irreducible(&coeffs, p, m, &mprimes) {
            continue;
        }
        if !x_is_primitive(&coeffs, p, q, &qprimes) {
            continue;
        }
        return Ok(build_tables(FieldSpec { p, m, modulus: coeffs }, q));
    }
    unreachable!("a primitive polynomial exists for every (p, m)");
}

impl FieldCtx {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.m
    }

    /// Field size `q = p^m`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// The fixed primitive element (always the residue of `x`).
    pub fn alpha(&self) -> FieldElement {
        FieldElement(self.antilog[if self.q == 2 { 0 } else { 1 }])
    }

    pub fn element(&self, code: u64) -> Result<FieldElement> {
        if code < self.q {
            Ok(FieldElement(code as u32))
        } else {
            Err(Error::BadParams(format!(
                "element code {code} out of range for field of size {}",
                self.q
            )))
        }
    }

    /// All elements in ascending code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u32).map(FieldElement)
    }

    /// Discrete log base `alpha`; `None` for zero.
    pub fn log(&self, x: FieldElement) -> Option<u64> {
        if x.is_zero() {
            None
        } else {
            Some(self.log[x.code() as usize] as u64)
        }
    }

    /// `alpha^j` (exponent taken mod `q-1`).
    pub fn alpha_pow(&self, j: u64) -> FieldElement {
        FieldElement(self.antilog[(j % (self.q - 1)) as usize])
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if self.spec.p == 2 {
            return FieldElement(x.0 ^ y.0);
        }
        let p = self.spec.p;
        let (mut a, mut b) = (x.0 as u64, y.0 as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        while a != 0 || b != 0 {
            let mut digit = a % p + b % p;
            if digit >= p {
                digit -= p;
            }
            out += digit * place;
            a /= p;
            b /= p;
            place *= p;
        }
        FieldElement(out as u32)
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        if self.spec.p == 2 {
            return x;
        }
        let p = self.spec.p;
        let mut a = x.0 as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        while a != 0 {
            let digit = a % p;
            if digit != 0 {
                out += (p - digit) * place;
            }
            a /= p;
            place *= p;
        }
        FieldElement(out as u32)
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.is_zero() || y.is_zero() {
            return FieldElement::ZERO;
        }
        let g = self.q - 1;
        let e = (self.log[x.0 as usize] as u64 + self.log[y.0 as usize] as u64) % g;
        FieldElement(self.antilog[e as usize])
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::ZeroToNonpositive);
        }
        let g = self.q - 1;
        let e = (g - self.log[x.0 as usize] as u64) % g;
        Ok(FieldElement(self.antilog[e as usize]))
    }

    /// `x^e` via the log tables. `0^e = 0` for positive `e`; `x^0 = 1` for
    /// nonzero `x`; zero to a non-positive power is an error.
    pub fn pow(&self, x: FieldElement, e: i64) -> Result<FieldElement> {
        if x.is_zero() {
            return if e > 0 {
                Ok(FieldElement::ZERO)
            } else {
                Err(Error::ZeroToNonpositive)
            };
        }
        let g = (self.q - 1) as i128;
        let e = ((self.log[x.0 as usize] as i128 * e as i128) % g + g) % g;
        Ok(FieldElement(self.antilog[e as usize]))
    }

    /// The n-th roots of unity for `n = (q-1)/d`, as exact membership data.
    pub fn unit_group(&self, d: u64) -> Result<UnitGroupData> {
        let g = self.q - 1;
        if d == 0 || g % d != 0 {
            return Err(Error::NotADivisor { d, group_order: g });
        }
        let n = g / d;
        let mut members: Vec<FieldElement> = (0..n)
            .map(|j| FieldElement(self.antilog[(j * d % g) as usize]))
            .collect();
        members.sort_unstable();
        let mut mask = vec![false; self.q as usize];
        for m in &members {
            mask[m.code() as usize] = true;
        }
        Ok(UnitGroupData { d, n, members, mask })
    }

    /// All solutions of `x^d = a`, in ascending code order: `{0}` for
    /// `a = 0`, exactly `d` roots when `a` is in `U_n`, none otherwise.
    pub fn dth_roots(&self, a: FieldElement, d: u64) -> Result<Vec<FieldElement>> {
        let g = self.q - 1;
        if d == 0 || g % d != 0 {
            return Err(Error::NotADivisor { d, group_order: g });
        }
        if a.is_zero() {
            return Ok(vec![FieldElement::ZERO]);
        }
        let n = g / d;
        let l = self.log[a.0 as usize] as u64;
        if l % d != 0 {
            return Ok(Vec::new());
        }
        let base = l / d;
        let mut roots: Vec<FieldElement> = (0..d)
            .map(|step| FieldElement(self.antilog[((base + step * n) % g) as usize]))
            .collect();
        roots.sort_unstable();
        Ok(roots)
    }

    /// Checks that `U_n` is closed under negation (true whenever the field
    /// is `F_{p^{2rk}}` with `d | p^r + 1`).
    pub fn neg_in_un_check(&self, d: u64) -> Result<bool> {
        let ug = self.unit_group(d)?;
        Ok(ug.members.iter().all(|&m| ug.is_member(self.neg(m))))
    }
}

// ---------------------------------------------------------------------------
// Modulus search: polynomial arithmetic over F_p
// ---------------------------------------------------------------------------

fn decode_big_endian(idx: u64, p: u64, m: u32) -> Vec<u64> {
    // digits (c0 .. c_{m-1}) with c0 most significant, so ascending idx
    // walks candidates in lexicographic order from the constant term up.
    let mut digits = vec![0u64; m as usize];
    let mut rest = idx;
    for i in (0..m as usize).rev() {
        digits[i] = rest % p;
        rest /= p;
    }
    digits
}

fn poly_trim(a: &mut Vec<u64>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
}

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    // f monic of degree m
    let m = f.len() - 1;
    let mut r = a.to_vec();
    while r.len() > m {
        let lead = *r.last().unwrap();
        let deg = r.len() - 1;
        if lead != 0 {
            for i in 0..=m {
                let idx = deg - m + i;
                let sub = lead * f[i] % p;
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        r.pop();
    }
    poly_trim(&mut r);
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(&prod, f, p)
}

/// `x^e mod f` by square and multiply.
fn poly_x_powmod(e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let x = poly_rem(&[0, 1], f, p);
    let mut result = vec![1u64];
    let mut base = x;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &base, f, p);
        }
        base = poly_mulmod(&base, &base, f, p);
        e >>= 1;
    }
    result
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        // make b monic before reducing
        let lead_inv = mod_inverse(*b.last().unwrap(), p);
        let monic: Vec<u64> = b.iter().map(|&c| c * lead_inv % p).collect();
        let r = if a.len() >= monic.len() {
            poly_rem(&a, &monic, p)
        } else {
            a.clone()
        };
        a = b;
        b = r;
    }
    a
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let ai = a.get(i).copied().unwrap_or(0);
        let bi = b.get(i).copied().unwrap_or(0);
        *slot = (ai + p - bi) % p;
    }
    poly_trim(&mut out);
    out
}

fn is_one(a: &[u64]) -> bool {
    a.len() == 1 && a[0] == 1
}

/// Degree-m irreducibility: `x^{p^m} = x (mod f)` and, for each prime
/// `l | m`, `gcd(x^{p^{m/l}} - x, f)` is constant.
fn is_irreducible(f: &[u64], p: u64, m: u32, mprimes: &[u64]) -> bool {
    if m == 1 {
        return true;
    }
    let x = poly_rem(&[0, 1], f, p);
    let full = match checked_pow(p, m) {
        Some(q) => poly_x_powmod(q, f, p),
        None => return false,
    };
    if full != x {
        return false;
    }
    for &l in mprimes {
        let sub = m as u64 / l;
        let partial = poly_x_powmod(p.pow(sub as u32), f, p);
        let diff = poly_sub(&partial, &x, p);
        let g = poly_gcd(&diff, f, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// True when the residue of `x` generates the full multiplicative group.
fn x_is_primitive(f: &[u64], p: u64, q: u64, qprimes: &[u64]) -> bool {
    if q == 2 {
        // trivial group; x = 1 after reduction by x + 1
        return true;
    }
    if !is_one(&poly_x_powmod(q - 1, f, p)) {
        return false;
    }
    for &l in qprimes {
        if is_one(&poly_x_powmod((q - 1) / l, f, p)) {
            return false;
        }
    }
    true
}

fn build_tables(spec: FieldSpec, q: u64) -> FieldCtx {
    let m = spec.m as usize;
    let p = spec.p;
    let mut antilog = vec![0u32; (q - 1) as usize];
    let mut log = vec![u32::MAX; q as usize];
    let mut cur = vec![0u64; m];
    cur[0] = 1; // x^0
    for j in 0..(q - 1) as usize {
        let code = encode(&cur, p);
        antilog[j] = code;
        log[code as usize] = j as u32;
        mul_by_x(&mut cur, &spec.modulus, p);
    }
    debug_assert_eq!(encode(&cur, p), 1, "alpha must have order q-1");
    FieldCtx { spec, q, antilog, log }
}

fn encode(coeffs: &[u64], p: u64) -> u32 {
    let mut out = 0u64;
    for &c in coeffs.iter().rev() {
        out = out * p + c;
    }
    out as u32
}

fn mul_by_x(cur: &mut [u64], modulus: &[u64], p: u64) {
    let m = cur.len();
    let top = cur[m - 1];
    for i in (1..m).rev() {
        cur[i] = cur[i - 1];
    }
    cur[0] = 0;
    if top != 0 {
        for i in 0..m {
            let sub = top * modulus[i] % p;
            cur[i] = (cur[i] + p - sub) % p;
        }
    }
}

// ---------------------------------------------------------------------------
// Small integer helpers
// ---------------------------------------------------------------------------

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3u64;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut out = 1u64;
    for _ in 0..exp {
        out = out.checked_mul(base)?;
    }
    Some(out)
}

/// Distinct prime factors by trial division.
fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p prime and a nonzero mod p
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_has_the_unique_irreducible_quadratic() {
        let f4 = build_field(2, 2).unwrap();
        assert_eq!(f4.q(), 4);
        assert_eq!(f4.spec().modulus, vec![1, 1, 1]); // x^2 + x + 1
        assert_eq!(f4.alpha().code(), 2); // alpha = x
    }

    #[test]
    fn f3_uses_canonical_primitive_root() {
        let f3 = build_field(3, 1).unwrap();
        // x + 1 is lex-smallest, so alpha = -1 = 2, the primitive root of F_3
        assert_eq!(f3.spec().modulus, vec![1, 1]);
        assert_eq!(f3.alpha().code(), 2);
    }

    #[test]
    fn composite_characteristic_rejected() {
        assert_eq!(build_field(4, 1), Err(Error::NotPrime(4)));
    }

    #[test]
    fn size_bound_enforced() {
        let err = build_field_bounded(2, 21, 1 << 20).unwrap_err();
        assert!(matches!(err, Error::SizeExceeded { .. }));
    }

    #[test]
    fn pow_examples() {
        let f4 = build_field(2, 2).unwrap();
        assert_eq!(f4.pow(f4.alpha(), 3).unwrap(), FieldElement::ONE);
        assert_eq!(f4.pow(FieldElement::ZERO, 3).unwrap(), FieldElement::ZERO);
        assert_eq!(
            f4.pow(FieldElement::ZERO, 0),
            Err(Error::ZeroToNonpositive)
        );
        let f9 = build_field(3, 2).unwrap();
        assert_eq!(f9.pow(f9.alpha(), 8).unwrap(), FieldElement::ONE);
        // negative exponents invert
        let x = f9.alpha_pow(3);
        let y = f9.pow(x, -1).unwrap();
        assert_eq!(f9.mul(x, y), FieldElement::ONE);
    }

    #[test]
    fn unit_group_examples() {
        let f4 = build_field(2, 2).unwrap();
        let u1 = f4.unit_group(3).unwrap();
        assert_eq!(u1.n, 1);
        assert_eq!(u1.members, vec![FieldElement::ONE]);

        // U_2 in F_9 is {1, -1}; brute-force the 4th powers to confirm
        let f9 = build_field(3, 2).unwrap();
        let u2 = f9.unit_group(4).unwrap();
        assert_eq!(u2.n, 2);
        let mut fourth_powers: Vec<FieldElement> = f9
            .elements()
            .filter(|x| !x.is_zero())
            .map(|x| f9.pow(x, 4).unwrap())
            .collect();
        fourth_powers.sort_unstable();
        fourth_powers.dedup();
        assert_eq!(u2.members, fourth_powers);
        assert!(u2.is_member(f9.neg(FieldElement::ONE)));

        // U_3 in F_16 is the cube roots of unity; compare with 5th powers
        let f16 = build_field(2, 4).unwrap();
        let u3 = f16.unit_group(5).unwrap();
        assert_eq!(u3.n, 3);
        let mut fifth: Vec<FieldElement> = f16
            .elements()
            .filter(|x| !x.is_zero())
            .map(|x| f16.pow(x, 5).unwrap())
            .collect();
        fifth.sort_unstable();
        fifth.dedup();
        assert_eq!(u3.members, fifth);
        for w in &u3.members {
            assert_eq!(f16.pow(*w, 3).unwrap(), FieldElement::ONE);
        }

        assert_eq!(
            f4.unit_group(2),
            Err(Error::NotADivisor { d: 2, group_order: 3 })
        );
    }

    #[test]
    fn dth_roots_examples() {
        let f4 = build_field(2, 2).unwrap();
        // every nonzero cube in F_4 is 1
        let roots = f4.dth_roots(FieldElement::ONE, 3).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(|&x| !x.is_zero()));
        assert_eq!(f4.dth_roots(FieldElement::ZERO, 3).unwrap(), vec![FieldElement::ZERO]);

        let f9 = build_field(3, 2).unwrap();
        assert!(f9.dth_roots(f9.alpha(), 4).unwrap().is_empty());
    }

    #[test]
    fn dth_root_counts_partition_the_field() {
        for (p, m, d) in [(2u64, 2u32, 3u64), (3, 2, 2), (3, 2, 4), (2, 4, 5), (2, 4, 3)] {
            let ctx = build_field(p, m).unwrap();
            let mut total = 0usize;
            for a in ctx.elements() {
                let c = ctx.dth_roots(a, d).unwrap().len();
                assert!(c == 0 || c == 1 || c == d as usize);
                total += c;
            }
            assert_eq!(total as u64, ctx.q());
        }
    }

    #[test]
    fn unit_group_agrees_with_brute_force_powers() {
        for (p, m, d) in [(2u64, 2u32, 3u64), (3, 2, 4), (2, 4, 5), (5, 2, 6), (2, 6, 9)] {
            let ctx = build_field(p, m).unwrap();
            let ug = ctx.unit_group(d).unwrap();
            let mut brute: Vec<FieldElement> = ctx
                .elements()
                .filter(|x| !x.is_zero())
                .map(|x| ctx.pow(x, d as i64).unwrap())
                .collect();
            brute.sort_unstable();
            brute.dedup();
            assert_eq!(ug.members, brute);
            assert_eq!(ug.members.len() as u64, ug.n);
        }
    }

    #[test]
    fn neg_in_un_in_the_hermitian_setting() {
        // (p, m = 2rk, d | p^r + 1)
        assert!(build_field(2, 2).unwrap().neg_in_un_check(3).unwrap());
        assert!(build_field(3, 2).unwrap().neg_in_un_check(4).unwrap());
        assert!(build_field(3, 4).unwrap().neg_in_un_check(4).unwrap());
    }

    #[test]
    fn log_tables_are_bijective_and_homomorphic() {
        for (p, m) in [(2u64, 4u32), (3, 2), (5, 2), (7, 1), (2, 1)] {
            let ctx = build_field(p, m).unwrap();
            let g = ctx.q() - 1;
            let mut seen = vec![false; ctx.q() as usize];
            for x in ctx.elements().filter(|x| !x.is_zero()) {
                let l = ctx.log(x).unwrap();
                assert_eq!(ctx.alpha_pow(l), x);
                assert!(!seen[x.code() as usize]);
                seen[x.code() as usize] = true;
                for y in ctx.elements().filter(|y| !y.is_zero()) {
                    let lhs = ctx.log(ctx.mul(x, y)).unwrap();
                    assert_eq!(lhs, (ctx.log(x).unwrap() + ctx.log(y).unwrap()) % g);
                }
            }
        }
    }

    #[test]
    fn construction_is_deterministic() {
        for (p, m) in [(2u64, 4u32), (3, 4), (5, 2)] {
            let a = build_field(p, m).unwrap();
            let b = build_field(p, m).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn addition_matches_polynomial_arithmetic() {
        let f9 = build_field(3, 2).unwrap();
        // (1 + x) + (2 + x) = 2x -> code 6
        let a = f9.element(4).unwrap(); // 1 + x
        let b = f9.element(5).unwrap(); // 2 + x
        assert_eq!(f9.add(a, b).code(), 6);
        // additive inverse
        for x in f9.elements() {
            assert_eq!(f9.add(x, f9.neg(x)), FieldElement::ZERO);
        }
        // distributivity spot check across the whole field
        for x in f9.elements() {
            for y in f9.elements() {
                for z in [f9.alpha(), f9.element(7).unwrap()] {
                    let lhs = f9.mul(z, f9.add(x, y));
                    let rhs = f9.add(f9.mul(z, x), f9.mul(z, y));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
