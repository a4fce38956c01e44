//! Subsets of `[n]` as machine words, and canonical families of them.
//!
//! Elements are 1-based on every public surface; bit `i - 1` of a
//! [`SubsetMask`] holds element `i`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ground set accepted by algebraic operations.
pub const ALGEBRA_CAP: usize = 63;
/// Largest ground set accepted by search entry points.
pub const SEARCH_CAP: usize = 24;

/// A subset of `[n]` stored as a bitmask.
///
/// Ordering is by cardinality first, then colexicographic (which for
/// bitmasks is plain numeric order of the bits).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `[n] = {1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n >= 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    /// The interval `[lo, hi]`, empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        if lo > hi || hi == 0 {
            return SubsetMask::EMPTY;
        }
        let lo = lo.max(1);
        SubsetMask(Self::full(hi).0 & !Self::full(lo - 1).0)
    }

    /// Builds a mask from 1-based elements. Panics on elements outside `1..=64`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut bits = 0u64;
        for x in elements {
            assert!((1..=64).contains(&x), "element {x} out of range");
            bits |= 1 << (x - 1);
        }
        SubsetMask(bits)
    }

    /// Like [`from_elements`](Self::from_elements) but checks every element against `[n]`.
    pub fn try_from_elements(n: usize, elements: &[i64]) -> Result<Self> {
        let mut bits = 0u64;
        for &x in elements {
            if x < 1 || x as usize > n {
                return Err(Error::ElementOutOfRange { element: x, n });
            }
            bits |= 1 << (x - 1);
        }
        Ok(SubsetMask(bits))
    }

    #[inline]
    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        (1..=64).contains(&x) && self.0 >> (x - 1) & 1 == 1
    }

    #[inline]
    pub fn with(self, x: usize) -> Self {
        SubsetMask(self.0 | 1 << (x - 1))
    }

    #[inline]
    pub fn without(self, x: usize) -> Self {
        SubsetMask(self.0 & !(1 << (x - 1)))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: Self) -> Self {
        SubsetMask(self.0 ^ other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// True when no element exceeds `n`.
    #[inline]
    pub fn fits(self, n: usize) -> bool {
        n >= 64 || self.0 >> n == 0
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order, 1-based.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// `|self ∩ [m]|`.
    #[inline]
    pub fn prefix_count(self, m: usize) -> usize {
        (self.0 & Self::full(m.min(64)).0).count_ones() as usize
    }

    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(n: usize, s: &str) -> Result<Self> {
        let s = s.trim_start_matches("0x");
        let bits = u64::from_str_radix(s, 16)
            .map_err(|e| Error::Parse(format!("bad hex mask {s:?}: {e}")))?;
        let mask = SubsetMask(bits);
        if !mask.fits(n) {
            let element = mask.max_element().unwrap_or(0) as i64;
            return Err(Error::ElementOutOfRange { element, n });
        }
        Ok(mask)
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cardinality()
            .cmp(&other.cardinality())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

/// All `k`-subsets of `[n]` in colex order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    let next = if k > n || n > 64 {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(SubsetMask::full(k).0)
    };
    KSubsets {
        limit: SubsetMask::full(n).0,
        next,
    }
}

pub struct KSubsets {
    limit: u64,
    next: Option<u64>,
}

impl Iterator for KSubsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.checked_add(c);
            match r {
                Some(r) if r != 0 => {
                    let nxt = (((r ^ cur) >> 2) / c) | r;
                    (nxt & !self.limit == 0).then_some(nxt)
                }
                _ => None,
            }
        };
        Some(SubsetMask(cur))
    }
}

/// A family of subsets of `[n]`, kept sorted by (cardinality, colex) and deduplicated.
///
/// Two families with the same ground set and members always have identical
/// encodings, so derived equality and ordering are canonical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "crate::io::FamilyJson", into = "crate::io::FamilyJson")]
pub struct SetFamily {
    n: usize,
    members: Vec<SubsetMask>,
}

impl SetFamily {
    /// Canonical family from arbitrary masks. Duplicates collapse.
    pub fn new<I: IntoIterator<Item = SubsetMask>>(n: usize, members: I) -> Result<Self> {
        check_ground(n)?;
        let mut members: Vec<SubsetMask> = members.into_iter().collect();
        for m in &members {
            if !m.fits(n) {
                let element = m.max_element().unwrap_or(0) as i64;
                return Err(Error::ElementOutOfRange { element, n });
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(SetFamily { n, members })
    }

    /// Skips validation; callers guarantee members fit in `[n]`.
    pub(crate) fn from_masks_unchecked(n: usize, mut members: Vec<SubsetMask>) -> Self {
        debug_assert!(members.iter().all(|m| m.fits(n)));
        members.sort_unstable();
        members.dedup();
        SetFamily { n, members }
    }

    /// `family_from_sets`: 1-based element lists to a canonical family.
    pub fn from_sets<S: AsRef<[i64]>>(n: usize, sets: &[S]) -> Result<Self> {
        check_ground(n)?;
        let masks = sets
            .iter()
            .map(|s| SubsetMask::try_from_elements(n, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_masks_unchecked(n, masks))
    }

    pub fn empty(n: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(SetFamily { n, members: Vec::new() })
    }

    /// All subsets of `[n]`.
    pub fn power_set(n: usize) -> Result<Self> {
        if n > SEARCH_CAP {
            return Err(Error::GroundSetTooLarge { n, cap: SEARCH_CAP });
        }
        Ok(Self::from_masks_unchecked(
            n,
            (0..1u64 << n).map(SubsetMask::from_bits).collect(),
        ))
    }

    /// `([n] choose k)`.
    pub fn k_sets(n: usize, k: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(SetFamily {
            n,
            members: k_subsets(n, k).collect(),
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SubsetMask> {
        self.members.iter()
    }

    pub fn contains(&self, set: SubsetMask) -> bool {
        self.members.binary_search(&set).is_ok()
    }

    /// Members as sorted 1-based element lists.
    pub fn to_sets(&self) -> Vec<Vec<usize>> {
        self.members.iter().map(|m| m.elements().collect()).collect()
    }

    /// Same members, regarded as a family over a different ground set.
    pub fn with_ground(&self, n: usize) -> Result<Self> {
        Self::new(n, self.members.iter().copied())
    }

    pub fn filter<P: FnMut(SubsetMask) -> bool>(&self, mut keep: P) -> Self {
        SetFamily {
            n: self.n,
            members: self.members.iter().copied().filter(|&m| keep(m)).collect(),
        }
    }

    pub fn map<M: FnMut(SubsetMask) -> SubsetMask>(&self, f: M) -> Self {
        Self::from_masks_unchecked(self.n, self.members.iter().copied().map(f).collect())
    }

    /// `self \ other` as families (members of `self` not in `other`).
    pub fn difference(&self, other: &SetFamily) -> Result<Self> {
        same_ground(self, other)?;
        Ok(self.filter(|m| !other.contains(m)))
    }

    pub fn union(&self, other: &SetFamily) -> Result<Self> {
        same_ground(self, other)?;
        Ok(Self::from_masks_unchecked(
            self.n,
            self.members.iter().chain(other.members.iter()).copied().collect(),
        ))
    }

    pub fn intersection(&self, other: &SetFamily) -> Result<Self> {
        same_ground(self, other)?;
        Ok(self.filter(|m| other.contains(m)))
    }

    /// Every pair of members (a member with itself included) meets in at least `t` points.
    pub fn is_t_intersecting(&self, t: usize) -> bool {
        let m = &self.members;
        m.iter().all(|a| a.cardinality() >= t)
            && m.iter().enumerate().all(|(i, a)| {
                m[i + 1..]
                    .iter()
                    .all(|b| a.intersection(*b).cardinality() >= t)
            })
    }

    /// Every pair of members (a member with itself included) has union of size at most `u`.
    pub fn is_u_union(&self, u: usize) -> bool {
        let m = &self.members;
        m.iter().enumerate().all(|(i, a)| {
            a.cardinality() <= u && m[i + 1..].iter().all(|b| a.union(*b).cardinality() <= u)
        })
    }

    /// `{[n] \ F : F ∈ self}`.
    pub fn complement(&self) -> Self {
        let full = SubsetMask::full(self.n);
        self.map(|m| full.difference(m))
    }

    /// `F^(ℓ)`.
    pub fn layer(&self, size: usize) -> Self {
        self.filter(|m| m.cardinality() == size)
    }

    /// `F^(≥ℓ)`.
    pub fn at_least(&self, size: usize) -> Self {
        // members are sorted by size, so this is a suffix
        let start = self.members.partition_point(|m| m.cardinality() < size);
        SetFamily {
            n: self.n,
            members: self.members[start..].to_vec(),
        }
    }

    /// Number of members in each layer, indexed by size `0..=n`.
    pub fn layer_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.n + 1];
        for m in &self.members {
            profile[m.cardinality()] += 1;
        }
        profile
    }

    /// Smallest complex containing every member. Output size is exponential in
    /// the largest member.
    pub fn down_closure(&self) -> Self {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut stack: Vec<u64> = self.members.iter().map(|m| m.bits()).collect();
        while let Some(s) = stack.pop() {
            if !seen.insert(s) {
                continue;
            }
            let mut rest = s;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                rest ^= low;
                let sub = s ^ low;
                if !seen.contains(&sub) {
                    stack.push(sub);
                }
            }
        }
        Self::from_masks_unchecked(self.n, seen.into_iter().map(SubsetMask).collect())
    }

    /// Closed under taking subsets.
    pub fn is_complex(&self) -> bool {
        self.members.iter().all(|m| {
            m.elements().all(|x| self.contains(m.without(x)))
        })
    }

    /// The common size of all members; `None` for the empty family.
    pub fn uniform_size(&self) -> Result<Option<usize>> {
        let Some(first) = self.members.first() else {
            return Ok(None);
        };
        let k = first.cardinality();
        if self.members.iter().all(|m| m.cardinality() == k) {
            Ok(Some(k))
        } else {
            Err(Error::NonUniform)
        }
    }

    /// `∂^(ℓ)F`: every `ℓ`-set contained in some member of a uniform family.
    pub fn shadow(&self, size: usize) -> Result<Self> {
        let Some(k) = self.uniform_size()? else {
            return Ok(SetFamily { n: self.n, members: Vec::new() });
        };
        if size >= k {
            return Err(Error::param(format!(
                "shadow level {size} must be below the member size {k}"
            )));
        }
        let mut out: HashSet<u64> = HashSet::new();
        for m in &self.members {
            let elems: Vec<usize> = m.elements().collect();
            for pick in k_subsets(k, size) {
                let mut bits = 0u64;
                for pos in pick.elements() {
                    bits |= 1 << (elems[pos - 1] - 1);
                }
                out.insert(bits);
            }
        }
        Ok(Self::from_masks_unchecked(
            self.n,
            out.into_iter().map(SubsetMask).collect(),
        ))
    }

    /// `δ(F) = max |A △ B|`; zero for fewer than two members.
    pub fn diameter(&self) -> usize {
        let m = &self.members;
        let mut best = 0;
        for (i, a) in m.iter().enumerate() {
            for b in &m[i + 1..] {
                best = best.max(a.symmetric_difference(*b).cardinality());
            }
        }
        best
    }

    /// `max |A ∪ B|` over pairs, a member with itself included.
    pub fn max_union(&self) -> usize {
        let m = &self.members;
        let mut best = 0;
        for (i, a) in m.iter().enumerate() {
            for b in &m[i..] {
                best = best.max(a.union(*b).cardinality());
            }
        }
        best
    }

    /// `F(x̄)`: members avoiding `x`.
    pub fn avoid(&self, x: usize) -> Result<Self> {
        self.check_element(x)?;
        Ok(self.filter(|m| !m.contains(x)))
    }

    /// `F(P, Q) = {F \ Q : F ∈ F, F ∩ Q = P}`, kept inside the same ground set.
    pub fn trace(&self, p: SubsetMask, q: SubsetMask) -> Result<Self> {
        if !q.fits(self.n) {
            let element = q.max_element().unwrap_or(0) as i64;
            return Err(Error::ElementOutOfRange { element, n: self.n });
        }
        if !p.is_subset_of(q) {
            return Err(Error::param(format!("{p} is not contained in {q}")));
        }
        let members = self
            .members
            .iter()
            .filter(|m| m.intersection(q) == p)
            .map(|m| m.difference(q))
            .collect();
        Ok(Self::from_masks_unchecked(self.n, members))
    }

    /// Number of members shared with `other`.
    pub fn common_count(&self, other: &SetFamily) -> usize {
        self.members.iter().filter(|m| other.contains(**m)).count()
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<()> {
        if x == 0 || x > self.n {
            Err(Error::ElementOutOfRange { element: x as i64, n: self.n })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily(n={}, ", self.n)?;
        f.debug_list().entries(self.members.iter()).finish()?;
        f.write_str(")")
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a SubsetMask;
    type IntoIter = std::slice::Iter<'a, SubsetMask>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Every `A ∈ a`, `B ∈ b` meet in at least `t` points. Vacuous if either is empty.
pub fn is_cross_t_intersecting(a: &SetFamily, b: &SetFamily, t: usize) -> Result<bool> {
    same_ground(a, b)?;
    Ok(a.iter()
        .all(|x| b.iter().all(|y| x.intersection(*y).cardinality() >= t)))
}

pub(crate) fn check_ground(n: usize) -> Result<()> {
    if n > ALGEBRA_CAP {
        Err(Error::GroundSetTooLarge { n, cap: ALGEBRA_CAP })
    } else {
        Ok(())
    }
}

pub(crate) fn same_ground(a: &SetFamily, b: &SetFamily) -> Result<()> {
    if a.n != b.n {
        Err(Error::GroundSetMismatch { left: a.n, right: b.n })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, sets: &[&[i64]]) -> SetFamily {
        SetFamily::from_sets(n, sets).unwrap()
    }

    #[test]
    fn dedups_and_orders() {
        let f = fam(3, &[&[1, 2], &[2, 1]]);
        assert_eq!(f.to_sets(), vec![vec![1, 2]]);
        assert!(fam(3, &[]).is_empty());
        let g = fam(5, &[&[1, 2], &[2], &[1]]);
        assert_eq!(g.to_sets(), vec![vec![1], vec![2], vec![1, 2]]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            SetFamily::from_sets(3, &[[1, 4]]),
            Err(Error::ElementOutOfRange { element: 4, n: 3 })
        );
        assert!(matches!(
            SetFamily::from_sets(3, &[[0]]),
            Err(Error::ElementOutOfRange { .. })
        ));
        assert!(matches!(
            SetFamily::empty(64),
            Err(Error::GroundSetTooLarge { .. })
        ));
    }

    #[test]
    fn k_subsets_are_colex() {
        let all: Vec<_> = k_subsets(4, 2).map(|m| m.bits()).collect();
        assert_eq!(all, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(63, 62).count(), 63);
        assert_eq!(k_subsets(64, 64).count(), 1);
    }

    #[test]
    fn intersecting_conventions() {
        let tri = fam(5, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(tri.is_t_intersecting(1));
        assert!(!tri.is_t_intersecting(2));
        assert!(SetFamily::empty(4).unwrap().is_t_intersecting(3));
        // a lone member must meet itself in t points
        assert!(!fam(4, &[&[1]]).is_t_intersecting(2));
        assert!(fam(4, &[&[1, 2]]).is_t_intersecting(2));
    }

    #[test]
    fn union_conventions() {
        assert!(!fam(5, &[&[1, 2, 3], &[3, 4, 5]]).is_u_union(4));
        assert!(fam(1, &[&[]]).is_u_union(0));
        assert!(!fam(3, &[&[1, 2, 3]]).is_u_union(2));
    }

    #[test]
    fn cross_intersecting() {
        let a = fam(3, &[&[1]]);
        let b = fam(3, &[&[2]]);
        assert!(!is_cross_t_intersecting(&a, &b, 1).unwrap());
        let e = SetFamily::empty(3).unwrap();
        assert!(is_cross_t_intersecting(&e, &b, 5).unwrap());
        assert!(is_cross_t_intersecting(&a, &SetFamily::empty(4).unwrap(), 1).is_err());
    }

    #[test]
    fn complement_and_layers() {
        assert_eq!(fam(3, &[&[1]]).complement(), fam(3, &[&[2, 3]]));
        let f = fam(4, &[&[], &[1, 2], &[2, 3, 4]]);
        assert_eq!(f.complement().complement(), f);
        assert_eq!(f.layer(0), fam(4, &[&[]]));
        assert!(fam(4, &[&[1]]).layer(0).is_empty());
        assert_eq!(f.at_least(2).len(), 2);
        assert_eq!(f.layer_profile(), vec![1, 0, 1, 1, 0]);
    }

    #[test]
    fn closure() {
        let f = fam(3, &[&[1, 2]]);
        let c = f.down_closure();
        assert_eq!(c, fam(3, &[&[], &[1], &[2], &[1, 2]]));
        assert_eq!(c.down_closure(), c);
        assert!(c.is_complex());
        assert!(!f.is_complex());
        assert!(SetFamily::empty(3).unwrap().is_complex());
    }

    #[test]
    fn shadows() {
        let f = fam(3, &[&[1, 2], &[1, 3]]);
        assert_eq!(f.shadow(1).unwrap(), SetFamily::k_sets(3, 1).unwrap());
        let one = fam(6, &[&[1, 3, 4, 6]]);
        assert_eq!(one.shadow(2).unwrap().len(), 6);
        assert_eq!(one.shadow(0).unwrap(), fam(6, &[&[]]));
        assert_eq!(fam(3, &[&[1], &[1, 2]]).shadow(0), Err(Error::NonUniform));
        assert!(f.shadow(2).is_err());
    }

    #[test]
    fn diameter_basics() {
        assert_eq!(fam(3, &[&[], &[1, 2, 3]]).diameter(), 3);
        assert_eq!(fam(3, &[&[1]]).diameter(), 0);
        assert_eq!(SetFamily::empty(3).unwrap().diameter(), 0);
    }

    #[test]
    fn avoid_and_trace() {
        let tri = fam(5, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(tri.avoid(1).unwrap(), fam(5, &[&[2, 3]]));
        assert!(tri.avoid(6).is_err());
        let f = fam(4, &[&[1, 2, 3], &[1, 3, 4]]);
        let p = SubsetMask::from_elements([1]);
        let q = SubsetMask::from_elements([1, 2]);
        assert_eq!(f.trace(p, q).unwrap(), fam(4, &[&[3, 4]]));
        assert!(f.trace(q, p).is_err());
        // F(P) shorthand
        assert_eq!(f.trace(q, q).unwrap(), fam(4, &[&[3]]));
    }

    #[test]
    fn mask_helpers() {
        let m = SubsetMask::from_elements([2, 5, 7]);
        assert_eq!(m.elements().collect::<Vec<_>>(), vec![2, 5, 7]);
        assert_eq!(m.min_element(), Some(2));
        assert_eq!(m.max_element(), Some(7));
        assert_eq!(m.prefix_count(5), 2);
        assert_eq!(SubsetMask::interval(2, 4), SubsetMask::from_elements([2, 3, 4]));
        assert_eq!(SubsetMask::interval(3, 2), SubsetMask::EMPTY);
        assert_eq!(SubsetMask::from_hex(8, &m.to_hex()).unwrap(), m);
        assert!(SubsetMask::from_hex(6, &m.to_hex()).is_err());
        assert_eq!(m.to_string(), "{2,5,7}");
    }
}
