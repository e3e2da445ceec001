//! Normalized projective points in a fixed, documented total order.
//!
//! A representative of a point of `P^s` has its first nonzero coordinate
//! equal to 1. The canonical enumeration walks the pivot position from
//! coordinate 0 upward and, within a pivot, the free trailing coordinates
//! in ascending lexicographic code order (leftmost coordinate most
//! significant). Every point-set construction in the crate shares this
//! order, so set equality reduces to sorted-sequence equality.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// Default bound on the number of projective points a scan may visit.
pub const DEFAULT_MAX_SCAN: u64 = 1 << 22;

/// Number of points of `P^s(F_q)` as `u128`, `None` on overflow.
pub fn pi_point_count(q: u64, s: u32) -> Option<u128> {
    let mut total = 0u128;
    let mut term = 1u128;
    for _ in 0..=s {
        total = total.checked_add(term)?;
        term = term.checked_mul(q as u128)?;
    }
    Some(total)
}

/// Iterator over the canonical representatives of `P^s(F_q)`.
pub struct ProjectivePoints<'a> {
    ctx: &'a FieldCtx,
    dim: usize,
    pivot: usize,
    free: Vec<u32>,
    done: bool,
}

impl<'a> ProjectivePoints<'a> {
    pub fn new(ctx: &'a FieldCtx, dim: u32) -> Self {
        ProjectivePoints {
            ctx,
            dim: dim as usize,
            pivot: 0,
            free: vec![0; dim as usize],
            done: false,
        }
    }
}

impl<'a> Iterator for ProjectivePoints<'a> {
    type Item = Vec<FieldElement>;

    fn next(&mut self) -> Option<Vec<FieldElement>> {
        if self.done {
            return None;
        }
        let mut point = Vec::with_capacity(self.dim + 1);
        point.resize(self.pivot, FieldElement::ZERO);
        point.push(FieldElement::ONE);
        point.extend(self.free.iter().map(|&c| FieldElement::from_code(c)));

        // advance the odometer; rightmost free coordinate moves fastest
        let q = self.ctx.q() as u32;
        let mut i = self.free.len();
        loop {
            if i == 0 {
                self.pivot += 1;
                if self.pivot > self.dim {
                    self.done = true;
                } else {
                    self.free = vec![0; self.dim - self.pivot];
                }
                break;
            }
            i -= 1;
            self.free[i] += 1;
            if self.free[i] < q {
                break;
            }
            self.free[i] = 0;
        }
        Some(point)
    }
}

/// How a point matrix was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Direct,
    Recursive,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Direct => "direct",
            Provenance::Recursive => "recursive",
        }
    }
}

/// An ordered list of normalized projective points over a named field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointMatrix {
    pub p: u64,
    pub m: u32,
    /// Projective dimension `s`; each point has `s + 1` coordinates.
    pub dim: u32,
    pub provenance: Provenance,
    pub points: Vec<Vec<FieldElement>>,
}

impl PointMatrix {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Point tuples as code vectors, sorted; order-insensitive comparisons
    /// between constructions reduce to equality of these.
    pub fn sorted_codes(&self) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = self
            .points
            .iter()
            .map(|pt| pt.iter().map(|x| x.code()).collect())
            .collect();
        rows.sort_unstable();
        rows
    }

    pub fn is_normalized(&self) -> bool {
        self.points.iter().all(|pt| {
            pt.iter()
                .find(|x| !x.is_zero())
                .is_some_and(|x| *x == FieldElement::ONE)
        })
    }

    /// CSV export: header comments carry the field parameters, one row per
    /// point, coordinates as canonical element codes. Byte-exact across
    /// platforms.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(
            "# point matrix; coordinates are canonical element codes (code = c0 + c1*p + c2*p^2 + ... of the coefficient vector)\n",
        );
        out.push_str(&format!("# p={}, m={}", self.p, self.m));
        if self.m % 2 == 0 {
            out.push_str(&format!(", r={}", self.m / 2));
        }
        out.push_str(&format!(
            ", s={}, points={}, provenance={}\n",
            self.dim,
            self.points.len(),
            self.provenance.as_str()
        ));
        for i in 0..=self.dim {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("x{i}"));
        }
        out.push('\n');
        for pt in &self.points {
            for (i, x) in pt.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&x.code().to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Materializes all of `P^s` in canonical order.
pub fn all_points(ctx: &FieldCtx, dim: u32) -> Result<PointMatrix> {
    all_points_bounded(ctx, dim, DEFAULT_MAX_SCAN)
}

pub fn all_points_bounded(ctx: &FieldCtx, dim: u32, max_points: u64) -> Result<PointMatrix> {
    let size = pi_point_count(ctx.q(), dim).unwrap_or(u128::MAX);
    if size > max_points as u128 {
        return Err(Error::SizeExceeded {
            what: "projective space size",
            requested: size,
            bound: max_points as u128,
        });
    }
    Ok(PointMatrix {
        p: ctx.p(),
        m: ctx.degree(),
        dim,
        provenance: Provenance::Direct,
        points: ProjectivePoints::new(ctx, dim).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;

    #[test]
    fn projective_line_over_f4() {
        let f4 = build_field(2, 2).unwrap();
        let pts: Vec<Vec<u32>> = ProjectivePoints::new(&f4, 1)
            .map(|pt| pt.iter().map(|x| x.code()).collect())
            .collect();
        assert_eq!(
            pts,
            vec![vec![1, 0], vec![1, 1], vec![1, 2], vec![1, 3], vec![0, 1]]
        );
    }

    #[test]
    fn point_counts_match_pi() {
        let f9 = build_field(3, 2).unwrap();
        for s in 0..=3 {
            let n = ProjectivePoints::new(&f9, s).count() as u128;
            assert_eq!(n, pi_point_count(9, s).unwrap());
        }
        assert_eq!(pi_point_count(4, 2), Some(21));
        assert_eq!(pi_point_count(4, 3), Some(85));
        assert_eq!(pi_point_count(9, 1), Some(10));
    }

    #[test]
    fn all_points_are_normalized_and_distinct() {
        let f4 = build_field(2, 2).unwrap();
        let mat = all_points(&f4, 2).unwrap();
        assert_eq!(mat.len(), 21);
        assert!(mat.is_normalized());
        let sorted = mat.sorted_codes();
        let mut dedup = sorted.clone();
        dedup.dedup();
        assert_eq!(sorted, dedup);
    }

    #[test]
    fn scan_bound_enforced() {
        let f9 = build_field(3, 2).unwrap();
        assert!(matches!(
            all_points_bounded(&f9, 3, 100),
            Err(Error::SizeExceeded { .. })
        ));
    }

    #[test]
    fn csv_round_structure() {
        let f4 = build_field(2, 2).unwrap();
        let mat = all_points(&f4, 1).unwrap();
        let csv = mat.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2 + 1 + 5);
        assert_eq!(lines[2], "x0,x1");
        assert_eq!(lines[3], "1,0");
        assert_eq!(lines[7], "0,1");
        assert!(lines[1].contains("p=2, m=2, r=1, s=1, points=5, provenance=direct"));
    }
}
