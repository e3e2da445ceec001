//! Independent brute-force oracles for diagonal-equation counts.
//!
//! Nothing here knows the closed forms: [`naive_count`] walks tuples,
//! [`value_profile`] folds the single-variable profile by additive
//! convolution, and [`projective_scan`] tests every normalized point.
//! These adjudicate every formula in [`crate::counts`] and [`crate::zeta`].

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::points::{pi_point_count, PointMatrix, ProjectivePoints, Provenance, DEFAULT_MAX_SCAN};

/// Default bound on `q^s`, the tuple count enumerated by [`naive_count`].
pub const DEFAULT_MAX_NAIVE: u128 = 1 << 26;

/// Default bound on the field size for the convolution profile.
pub const DEFAULT_MAX_PROFILE: u64 = 4096;

/// Per-class solution counts, available when the per-element counts are
/// constant on `U_n` and on its nonzero complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCounts {
    /// Count for right-hand side 0.
    pub zero: u128,
    /// Common count for right-hand sides in `U_n`.
    pub on_un: u128,
    /// Common count off `U_n`; `None` when the complement is empty (d = 1).
    pub off_un: Option<u128>,
}

/// Exact solution counts of `x_1^d + ... + x_s^d = a` for every `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueProfile {
    pub q: u64,
    pub d: u64,
    pub s: u32,
    pub n: u64,
    /// `counts[code]` = number of solutions with right-hand side `code`.
    pub counts: Vec<u128>,
    /// Class summary; `None` if the counts are not class-constant (never
    /// happens for `d | p^r + 1`, the setting of every caller in this crate).
    pub classes: Option<ClassCounts>,
}

/// Single-variable profile folded `s - 1` times by additive convolution.
pub fn value_profile(ctx: &FieldCtx, d: u64, s: u32) -> Result<ValueProfile> {
    value_profile_bounded(ctx, d, s, DEFAULT_MAX_PROFILE)
}

pub fn value_profile_bounded(ctx: &FieldCtx, d: u64, s: u32, max_q: u64) -> Result<ValueProfile> {
    let q = ctx.q();
    if q > max_q {
        return Err(Error::SizeExceeded {
            what: "field size for convolution profile",
            requested: q as u128,
            bound: max_q as u128,
        });
    }
    if s < 1 {
        return Err(Error::BadParams("profile needs s >= 1".into()));
    }
    let ug = ctx.unit_group(d)?; // also validates d | q - 1

    // c1[a] = |{x : x^d = a}| = d on U_n, 1 at 0, else 0
    let mut single = vec![0u128; q as usize];
    single[0] = 1;
    for member in &ug.members {
        single[member.code() as usize] = d as u128;
    }

    // sparse support of the single-variable profile
    let support: Vec<FieldElement> = std::iter::once(FieldElement::ZERO)
        .chain(ug.members.iter().copied())
        .collect();

    let mut counts = single.clone();
    for _ in 1..s {
        let mut next = vec![0u128; q as usize];
        for &u in &support {
            let cu = single[u.code() as usize];
            for w in ctx.elements() {
                let cw = counts[w.code() as usize];
                if cw != 0 {
                    next[ctx.add(u, w).code() as usize] += cu * cw;
                }
            }
        }
        counts = next;
    }

    let zero = counts[0];
    let on_un = counts[ug.members[0].code() as usize];
    let un_constant = ug
        .members
        .iter()
        .all(|m| counts[m.code() as usize] == on_un);
    let mut off_un = None;
    let mut off_constant = true;
    for x in ctx.elements().skip(1) {
        if ug.is_member(x) {
            continue;
        }
        let c = counts[x.code() as usize];
        match off_un {
            None => off_un = Some(c),
            Some(v) if v != c => {
                off_constant = false;
                break;
            }
            _ => {}
        }
    }
    let classes = (un_constant && off_constant).then_some(ClassCounts { zero, on_un, off_un });

    Ok(ValueProfile { q, d, s, n: ug.n, counts, classes })
}

/// Literal tuple enumeration; the ultimate oracle.
pub fn naive_count(ctx: &FieldCtx, d: u64, s: u32, b: FieldElement) -> Result<u128> {
    naive_count_bounded(ctx, d, s, b, DEFAULT_MAX_NAIVE)
}

pub fn naive_count_bounded(
    ctx: &FieldCtx,
    d: u64,
    s: u32,
    b: FieldElement,
    max_tuples: u128,
) -> Result<u128> {
    if s < 1 {
        return Err(Error::BadParams("naive count needs s >= 1".into()));
    }
    let work = (ctx.q() as u128).checked_pow(s).unwrap_or(u128::MAX);
    if work > max_tuples {
        return Err(Error::SizeExceeded {
            what: "naive enumeration q^s",
            requested: work,
            bound: max_tuples,
        });
    }
    let dpow: Vec<FieldElement> = ctx
        .elements()
        .map(|x| ctx.pow(x, d as i64).expect("positive exponent"))
        .collect();
    // how many x have x^d equal to a given value; lets the innermost
    // variable be resolved by lookup instead of a loop
    let mut last_level = vec![0u128; ctx.q() as usize];
    for &v in &dpow {
        last_level[v.code() as usize] += 1;
    }
    fn walk(
        ctx: &FieldCtx,
        dpow: &[FieldElement],
        last_level: &[u128],
        remaining: u32,
        acc: FieldElement,
        b: FieldElement,
    ) -> u128 {
        if remaining == 1 {
            return last_level[ctx.sub(b, acc).code() as usize];
        }
        ctx.elements()
            .map(|x| {
                walk(
                    ctx,
                    dpow,
                    last_level,
                    remaining - 1,
                    ctx.add(acc, dpow[x.code() as usize]),
                    b,
                )
            })
            .sum()
    }
    Ok(walk(ctx, &dpow, &last_level, s, FieldElement::ZERO, b))
}

/// All normalized points of `P^s` with `x_0^d + ... + x_s^d = 0`, in
/// canonical scan order.
pub fn projective_scan(ctx: &FieldCtx, d: u64, s: u32) -> Result<PointMatrix> {
    projective_scan_bounded(ctx, d, s, DEFAULT_MAX_SCAN)
}

pub fn projective_scan_bounded(
    ctx: &FieldCtx,
    d: u64,
    s: u32,
    max_points: u64,
) -> Result<PointMatrix> {
    let size = pi_point_count(ctx.q(), s).unwrap_or(u128::MAX);
    if size > max_points as u128 {
        return Err(Error::SizeExceeded {
            what: "projective scan size",
            requested: size,
            bound: max_points as u128,
        });
    }
    let dpow: Vec<FieldElement> = ctx
        .elements()
        .map(|x| ctx.pow(x, d as i64).expect("positive exponent"))
        .collect();
    let points: Vec<Vec<FieldElement>> = ProjectivePoints::new(ctx, s)
        .filter(|pt| {
            let mut acc = FieldElement::ZERO;
            for x in pt {
                acc = ctx.add(acc, dpow[x.code() as usize]);
            }
            acc.is_zero()
        })
        .collect();
    Ok(PointMatrix {
        p: ctx.p(),
        m: ctx.degree(),
        dim: s,
        provenance: Provenance::Direct,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;

    #[test]
    fn profile_f4_cubes() {
        let f4 = build_field(2, 2).unwrap();
        let one_var = value_profile(&f4, 3, 1).unwrap();
        assert_eq!(one_var.counts, vec![1, 3, 0, 0]);

        let two_var = value_profile(&f4, 3, 2).unwrap();
        assert_eq!(two_var.counts[0], 10);
        assert_eq!(two_var.counts[1], 6);
        assert_eq!(two_var.counts[2], 0);
        assert_eq!(two_var.counts[3], 0);
        let classes = two_var.classes.unwrap();
        assert_eq!(classes.zero, 10);
        assert_eq!(classes.on_un, 6);
        assert_eq!(classes.off_un, Some(0));
    }

    #[test]
    fn profile_f9_squares() {
        let f9 = build_field(3, 2).unwrap();
        let profile = value_profile(&f9, 2, 2).unwrap();
        let classes = profile.classes.unwrap();
        assert_eq!(classes.zero, 17);
        assert_eq!(classes.on_un, 8);
        assert_eq!(classes.off_un, Some(8));
    }

    #[test]
    fn naive_count_examples() {
        let f4 = build_field(2, 2).unwrap();
        assert_eq!(naive_count(&f4, 3, 2, FieldElement::ZERO).unwrap(), 10);
        assert_eq!(naive_count(&f4, 3, 3, FieldElement::ZERO).unwrap(), 28);
        let f9 = build_field(3, 2).unwrap();
        assert_eq!(naive_count(&f9, 4, 2, FieldElement::ZERO).unwrap(), 33);
    }

    #[test]
    fn profile_equals_naive_everywhere() {
        for (p, m, d, smax) in [(2u64, 2u32, 3u64, 4u32), (3, 2, 2, 3), (3, 2, 4, 3), (2, 4, 5, 2)] {
            let ctx = build_field(p, m).unwrap();
            for s in 1..=smax {
                let profile = value_profile(&ctx, d, s).unwrap();
                for b in ctx.elements() {
                    assert_eq!(
                        profile.counts[b.code() as usize],
                        naive_count(&ctx, d, s, b).unwrap(),
                        "q={} d={} s={} b={}",
                        ctx.q(),
                        d,
                        s,
                        b
                    );
                }
            }
        }
    }

    #[test]
    fn profile_mass_is_q_to_the_s() {
        let f16 = build_field(2, 4).unwrap();
        for (d, s) in [(5u64, 3u32), (3, 2), (15, 2)] {
            let profile = value_profile(&f16, d, s).unwrap();
            let total: u128 = profile.counts.iter().sum();
            assert_eq!(total, (16u128).pow(s));
        }
    }

    #[test]
    fn scan_examples() {
        let f4 = build_field(2, 2).unwrap();
        assert_eq!(projective_scan(&f4, 3, 1).unwrap().len(), 3);
        assert_eq!(projective_scan(&f4, 3, 2).unwrap().len(), 9);
        let f9 = build_field(3, 2).unwrap();
        assert_eq!(projective_scan(&f9, 4, 2).unwrap().len(), 28);
    }

    #[test]
    fn scan_links_to_affine_zero_count() {
        // |scan(d, s)| * (q - 1) + 1 = #affine zeros with s + 1 variables
        for (p, m, d, s) in [(2u64, 2u32, 3u64, 2u32), (3, 2, 4, 1), (3, 2, 2, 2), (2, 4, 5, 1)] {
            let ctx = build_field(p, m).unwrap();
            let scan = projective_scan(&ctx, d, s).unwrap();
            let profile = value_profile(&ctx, d, s + 1).unwrap();
            assert_eq!(
                scan.len() as u128 * (ctx.q() as u128 - 1) + 1,
                profile.counts[0]
            );
        }
    }

    #[test]
    fn scan_is_in_canonical_order_and_normalized() {
        let f4 = build_field(2, 2).unwrap();
        let scan = projective_scan(&f4, 3, 2).unwrap();
        assert!(scan.is_normalized());
        // canonical order is a subsequence of the all-points enumeration
        let all: Vec<Vec<u32>> = ProjectivePoints::new(&f4, 2)
            .map(|pt| pt.iter().map(|x| x.code()).collect())
            .collect();
        let mut cursor = 0usize;
        for pt in &scan.points {
            let codes: Vec<u32> = pt.iter().map(|x| x.code()).collect();
            cursor = all[cursor..]
                .iter()
                .position(|row| *row == codes)
                .map(|off| cursor + off + 1)
                .expect("scan order must follow the canonical enumeration");
        }
    }

    #[test]
    fn bounds_are_reported() {
        let f9 = build_field(3, 2).unwrap();
        assert!(matches!(
            naive_count_bounded(&f9, 2, 4, FieldElement::ZERO, 100),
            Err(Error::SizeExceeded { .. })
        ));
        assert!(matches!(
            value_profile_bounded(&f9, 2, 2, 8),
            Err(Error::SizeExceeded { .. })
        ));
        assert!(matches!(
            projective_scan_bounded(&f9, 2, 3, 16),
            Err(Error::SizeExceeded { .. })
        ));
    }
}
