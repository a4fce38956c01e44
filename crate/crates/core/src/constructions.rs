//! Generators for the named extremal families.

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bounds::binom;
use crate::error::{Error, Result};
use crate::family::{check_ground, k_subsets, SetFamily, SubsetMask};

/// A named construction with its parameters.
///
/// JSON form: `{"name": "katona", "n": 5, "u": 2}`; balls carry
/// `"center": [1, 3]` and optionally `"axis"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Construction {
    /// `K(n, u)`: `|K| <= d` for `u = 2d`, `|K \ {1}| <= d` for `u = 2d + 1`.
    Katona { n: usize, u: usize },
    /// `K*(n, u)`: `K(n, u)` with one member outside it traded for a blocking set.
    KatonaStar { n: usize, u: usize },
    /// `K_x(n, 2d+1) = {K : |K \ {x}| <= d}`.
    KatonaX { n: usize, u: usize, x: usize },
    /// `S(n, k, t)`: all k-sets containing `[t]`.
    FullStar { n: usize, k: usize, t: usize },
    HiltonMilner { n: usize, k: usize },
    /// k-sets meeting `[3]` in at least two points.
    Triangle { n: usize, k: usize },
    /// `B(n, 2d) = {B : |B \ [2]| <= d - 1}`.
    BFamily { n: usize, d: usize },
    /// `{D : |D \ [4]| <= d - 2}`, 2d-union.
    DEven { n: usize, d: usize },
    /// `{D : |D \ [6]| <= r - 3}`, 2r-union.
    #[serde(rename = "d_2r")]
    D2r { n: usize, r: usize },
    /// `{F : |F \ [5]| <= r - 2}`, (2r+1)-union.
    #[serde(rename = "d_odd5")]
    DOdd5 { n: usize, r: usize },
    /// `G(n, 2d+1) = {G : |G ∩ [4, n]| <= d - 1}`.
    GFamily { n: usize, d: usize },
    /// `K_A(n, u) = {K △ A : K ∈ K(n, u)}`; for odd `u` the special element
    /// of `K(n, u)` is `axis` (default 1).
    Ball {
        n: usize,
        u: usize,
        center: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        axis: Option<usize>,
    },
    /// `L(n, k, m)`: the first `m` k-sets in lexicographic order.
    LexSegment { n: usize, k: usize, m: u64 },
}

fn bad(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

impl Construction {
    pub fn n(&self) -> usize {
        use Construction::*;
        match *self {
            Katona { n, .. }
            | KatonaStar { n, .. }
            | KatonaX { n, .. }
            | FullStar { n, .. }
            | HiltonMilner { n, .. }
            | Triangle { n, .. }
            | BFamily { n, .. }
            | DEven { n, .. }
            | D2r { n, .. }
            | DOdd5 { n, .. }
            | GFamily { n, .. }
            | Ball { n, .. }
            | LexSegment { n, .. } => n,
        }
    }

    pub fn build(&self) -> Result<SetFamily> {
        construct(self)
    }
}

/// Materializes a construction.
pub fn construct(recipe: &Construction) -> Result<SetFamily> {
    use Construction::*;
    let n = recipe.n();
    check_ground(n)?;
    match *recipe {
        Katona { n, u } => {
            check_u(n, u)?;
            Ok(katona(n, u, 1))
        }
        KatonaStar { n, u } => {
            check_u(n, u)?;
            Ok(katona_star(n, u))
        }
        KatonaX { n, u, x } => {
            check_u(n, u)?;
            if u % 2 == 0 {
                return Err(bad(format!("katona_x needs odd u, got {u}")));
            }
            if !(1..=n).contains(&x) {
                return Err(Error::ElementOutOfRange { element: x as i64, n });
            }
            Ok(katona(n, u, x))
        }
        FullStar { n, k, t } => {
            if !(n > k && k >= t && t > 0) {
                return Err(bad(format!("full_star needs n > k >= t > 0, got n={n}, k={k}, t={t}")));
            }
            let core = SubsetMask::full(t);
            let rest = SubsetMask::interval(t + 1, n);
            Ok(SetFamily::from_masks_unchecked(
                n,
                subsets_of(rest, k - t).map(|s| s.union(core)).collect(),
            ))
        }
        HiltonMilner { n, k } => {
            if !(k >= 1 && n > 2 * k) {
                return Err(bad(format!("hilton_milner needs n > 2k >= 2, got n={n}, k={k}")));
            }
            let block = SubsetMask::interval(2, k + 1);
            let mut members: Vec<SubsetMask> = subsets_of(SubsetMask::interval(2, n), k - 1)
                .map(|s| s.with(1))
                .filter(|h| !h.intersection(block).is_empty())
                .collect();
            members.push(block);
            Ok(SetFamily::from_masks_unchecked(n, members))
        }
        Triangle { n, k } => {
            if !(k >= 2 && n > 2 * k) {
                return Err(bad(format!("triangle needs n > 2k >= 4, got n={n}, k={k}")));
            }
            let head = SubsetMask::full(3);
            let tail = SubsetMask::interval(4, n);
            let members = (2..=k.min(3))
                .flat_map(|h| {
                    subsets_of(head, h).flat_map(move |a| subsets_of(tail, k - h).map(move |b| a.union(b)))
                })
                .collect();
            Ok(SetFamily::from_masks_unchecked(n, members))
        }
        BFamily { n, d } => {
            if !(d >= 1 && n >= 2) {
                return Err(bad(format!("b_family needs d >= 1, n >= 2, got n={n}, d={d}")));
            }
            Ok(bounded_tail(n, SubsetMask::full(2), d - 1))
        }
        DEven { n, d } => {
            if !(d >= 2 && n >= 4) {
                return Err(bad(format!("d_even needs d >= 2, n >= 4, got n={n}, d={d}")));
            }
            Ok(bounded_tail(n, SubsetMask::full(4), d - 2))
        }
        D2r { n, r } => {
            if !(r >= 3 && n >= 6) {
                return Err(bad(format!("d_2r needs r >= 3, n >= 6, got n={n}, r={r}")));
            }
            Ok(bounded_tail(n, SubsetMask::full(6), r - 3))
        }
        DOdd5 { n, r } => {
            if !(r >= 2 && n >= 5) {
                return Err(bad(format!("d_odd5 needs r >= 2, n >= 5, got n={n}, r={r}")));
            }
            Ok(bounded_tail(n, SubsetMask::full(5), r - 2))
        }
        GFamily { n, d } => {
            if !(d >= 1 && n >= 3) {
                return Err(bad(format!("g_family needs d >= 1, n >= 3, got n={n}, d={d}")));
            }
            Ok(bounded_tail(n, SubsetMask::full(3), d - 1))
        }
        Ball { n, u, ref center, axis } => {
            check_u(n, u)?;
            let center: Vec<i64> = center.iter().map(|&x| x as i64).collect();
            let a = SubsetMask::try_from_elements(n, &center)?;
            let axis = axis.unwrap_or(1);
            if !(1..=n).contains(&axis) {
                return Err(Error::ElementOutOfRange { element: axis as i64, n });
            }
            Ok(ball(n, u, a, axis))
        }
        LexSegment { n, k, m } => {
            if k > n {
                return Err(bad(format!("lex_segment needs k <= n, got n={n}, k={k}")));
            }
            if BigInt::from(m) > binom(n as i64, k as i64) {
                return Err(bad(format!("lex_segment needs m <= C({n},{k}), got m={m}")));
            }
            let members = (1..=n)
                .combinations(k)
                .take(m as usize)
                .map(SubsetMask::from_elements)
                .collect();
            Ok(SetFamily::from_masks_unchecked(n, members))
        }
    }
}

fn check_u(n: usize, u: usize) -> Result<()> {
    if 0 < u && u < n {
        Ok(())
    } else {
        Err(bad(format!("need 0 < u < n, got n={n}, u={u}")))
    }
}

/// Subsets of `region` with exactly `size` elements.
pub(crate) fn subsets_of(region: SubsetMask, size: usize) -> impl Iterator<Item = SubsetMask> {
    let positions: Vec<usize> = region.elements().collect();
    k_subsets(positions.len(), size).map(move |pick| {
        SubsetMask::from_bits(pick.elements().fold(0u64, |acc, i| acc | 1 << (positions[i - 1] - 1)))
    })
}

/// `{X ∪ Y : X ⊆ core, Y ⊆ [n] \ core, |Y| <= max_tail}`.
fn bounded_tail(n: usize, core: SubsetMask, max_tail: usize) -> SetFamily {
    let core = core.intersection(SubsetMask::full(n));
    let rest = SubsetMask::full(n).difference(core);
    let heads: Vec<SubsetMask> = (0..=core.cardinality()).flat_map(|s| subsets_of(core, s)).collect();
    let members = (0..=max_tail.min(rest.cardinality()))
        .flat_map(|s| subsets_of(rest, s))
        .flat_map(|tail| heads.iter().map(move |h| h.union(tail)))
        .collect();
    SetFamily::from_masks_unchecked(n, members)
}

/// `K(n, u)` with special element `x` when `u` is odd.
pub(crate) fn katona(n: usize, u: usize, x: usize) -> SetFamily {
    let d = u / 2;
    if u.is_multiple_of(2) {
        bounded_tail(n, SubsetMask::EMPTY, d)
    } else {
        bounded_tail(n, SubsetMask::EMPTY.with(x), d)
    }
}

fn katona_star(n: usize, u: usize) -> SetFamily {
    let d = u / 2;
    let base = katona(n, u, 1);
    if u.is_multiple_of(2) {
        // drop d-sets missing [d+1], add [d+1]
        let block = SubsetMask::full(d + 1);
        let mut members: Vec<SubsetMask> = base
            .iter()
            .copied()
            .filter(|h| !(h.cardinality() == d && h.intersection(block).is_empty()))
            .collect();
        members.push(block);
        SetFamily::from_masks_unchecked(n, members)
    } else {
        // drop (d+1)-sets through 1 missing [2, d+2], add [2, d+2]
        let block = SubsetMask::interval(2, d + 2);
        let mut members: Vec<SubsetMask> = base
            .iter()
            .copied()
            .filter(|h| !(h.cardinality() == d + 1 && h.contains(1) && h.intersection(block).is_empty()))
            .collect();
        members.push(block);
        SetFamily::from_masks_unchecked(n, members)
    }
}

pub(crate) fn ball(n: usize, u: usize, center: SubsetMask, axis: usize) -> SetFamily {
    katona(n, u, axis).map(|k| k.symmetric_difference(center))
}

/// Membership test for `K_A(n, u)` without materializing it.
#[cfg(test)]
pub(crate) fn in_ball(set: SubsetMask, u: usize, center: SubsetMask, axis: usize) -> bool {
    let diff = set.symmetric_difference(center);
    if u.is_multiple_of(2) {
        diff.cardinality() <= u / 2
    } else {
        diff.without(axis).cardinality() <= u / 2
    }
}

/// 0-based position of `set` among the k-subsets of `[n]` in lexicographic order.
pub fn lex_rank(n: usize, k: usize, set: SubsetMask) -> Result<BigInt> {
    if set.cardinality() != k {
        return Err(Error::SizeMismatch { left: set.cardinality(), right: k });
    }
    if !set.fits(n) {
        let element = set.max_element().unwrap_or(0) as i64;
        return Err(Error::ElementOutOfRange { element, n });
    }
    let mut rank = BigInt::from(0);
    let mut prev = 0;
    for (i, s) in set.elements().enumerate() {
        // k-sets agreeing on the first i elements whose (i+1)-th element is smaller
        for v in prev + 1..s {
            rank += binom((n - v) as i64, (k - i - 1) as i64);
        }
        prev = s;
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{hm_bound, katona_bound};

    fn fam(n: usize, sets: &[&[i64]]) -> SetFamily {
        SetFamily::from_sets(n, sets).unwrap()
    }

    #[test]
    fn katona_sizes() {
        let k = construct(&Construction::Katona { n: 5, u: 2 }).unwrap();
        assert_eq!(k.len(), 6);
        assert!(k.iter().all(|m| m.cardinality() <= 1));
        assert_eq!(construct(&Construction::Katona { n: 5, u: 3 }).unwrap().len(), 10);
        for n in 2..=12 {
            for u in 1..n {
                let f = construct(&Construction::Katona { n, u }).unwrap();
                assert_eq!(BigInt::from(f.len()), katona_bound(n as i64, u as i64).unwrap());
                assert!(f.is_u_union(u));
                assert!(f.is_complex());
            }
        }
        assert!(construct(&Construction::Katona { n: 5, u: 5 }).is_err());
    }

    #[test]
    fn b_family_overflow_layer() {
        let b = construct(&Construction::BFamily { n: 6, d: 2 }).unwrap();
        let over = b.at_least(3);
        assert_eq!(over.len(), 4);
        let pair = SubsetMask::full(2);
        assert!(over.iter().all(|m| m.cardinality() == 3 && pair.is_subset_of(*m)));
        assert!(b.is_u_union(4));
    }

    #[test]
    fn lex_segments() {
        let l = construct(&Construction::LexSegment { n: 4, k: 2, m: 3 }).unwrap();
        assert_eq!(l, fam(4, &[&[1, 2], &[1, 3], &[1, 4]]));
        assert!(construct(&Construction::LexSegment { n: 4, k: 2, m: 7 }).is_err());
        let s = |e: &[usize]| SubsetMask::from_elements(e.iter().copied());
        assert_eq!(lex_rank(4, 2, s(&[1, 2])).unwrap(), BigInt::from(0));
        assert_eq!(lex_rank(4, 2, s(&[3, 4])).unwrap(), BigInt::from(5));
        assert!(lex_rank(4, 2, s(&[3])).is_err());
        // (1,7) precedes (2,3)
        assert!(lex_rank(8, 2, s(&[1, 7])).unwrap() < lex_rank(8, 2, s(&[2, 3])).unwrap());
    }

    #[test]
    fn lex_rank_matches_enumeration() {
        for n in 0..=8 {
            for k in 0..=n {
                for (pos, c) in (1..=n).combinations(k).enumerate() {
                    let m = SubsetMask::from_elements(c);
                    assert_eq!(lex_rank(n, k, m).unwrap(), BigInt::from(pos));
                }
            }
        }
    }

    #[test]
    fn ball_membership_matches() {
        for (n, u) in [(5, 2), (5, 3), (6, 4), (6, 3)] {
            let center = SubsetMask::from_elements([2, 5]);
            for axis in 1..=n {
                let b = ball(n, u, center, axis);
                let all = SetFamily::power_set(n).unwrap();
                for &s in all.iter() {
                    assert_eq!(b.contains(s), in_ball(s, u, center, axis), "{n} {u} {axis}");
                }
            }
        }
    }

    #[test]
    fn small_ball() {
        let b = construct(&Construction::Ball { n: 3, u: 2, center: vec![1], axis: None }).unwrap();
        assert_eq!(b, fam(3, &[&[], &[1], &[1, 2], &[1, 3]]));
        assert_eq!(b.diameter(), 2);
    }

    #[test]
    fn star_and_nontrivial() {
        let s = construct(&Construction::FullStar { n: 6, k: 3, t: 2 }).unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.is_t_intersecting(2));
        for n in 3..=12 {
            for k in 1..=(n - 1) / 2 {
                let h = construct(&Construction::HiltonMilner { n, k }).unwrap();
                assert_eq!(BigInt::from(h.len()), hm_bound(n as i64, k as i64).unwrap(), "n={n} k={k}");
                assert!(h.is_t_intersecting(1));
                assert!(h.iter().all(|m| m.cardinality() == k));
                if k >= 2 {
                    let common = h.iter().fold(SubsetMask::full(n), |acc, m| acc.intersection(*m));
                    assert!(common.is_empty());
                    let t = construct(&Construction::Triangle { n, k }).unwrap();
                    assert!(t.is_t_intersecting(1));
                    let common = t.iter().fold(SubsetMask::full(n), |acc, m| acc.intersection(*m));
                    assert!(common.is_empty());
                }
            }
        }
        assert!(construct(&Construction::Triangle { n: 5, k: 1 }).is_err());
        assert!(construct(&Construction::FullStar { n: 4, k: 4, t: 1 }).is_err());
    }

    #[test]
    fn katona_star_differs_by_one() {
        for n in 3..=10 {
            for u in 1..n {
                let k = construct(&Construction::Katona { n, u }).unwrap();
                let ks = construct(&Construction::KatonaStar { n, u }).unwrap();
                assert_eq!(ks.difference(&k).unwrap().len(), 1, "n={n} u={u}");
                assert!(ks.is_u_union(u), "n={n} u={u}");
            }
        }
    }

    #[test]
    fn json_form() {
        let c: Construction = serde_json::from_str(r#"{"name":"d_2r","n":8,"r":3}"#).unwrap();
        assert_eq!(c, Construction::D2r { n: 8, r: 3 });
        let b = Construction::Ball { n: 4, u: 2, center: vec![2], axis: None };
        assert_eq!(
            serde_json::to_string(&b).unwrap(),
            r#"{"name":"ball","n":4,"u":2,"center":[2]}"#
        );
    }
}
