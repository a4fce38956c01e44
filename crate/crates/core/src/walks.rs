//! Sets as monotone lattice paths, and counting paths that touch a diagonal.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bounds::binom;
use crate::error::{Error, Result};
use crate::family::{k_subsets, SetFamily, SubsetMask};

/// Grid points `(x, y)` visited by the walk of a set, origin first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkTrace {
    pub points: Vec<(usize, usize)>,
}

impl WalkTrace {
    pub fn endpoint(&self) -> (usize, usize) {
        *self.points.last().expect("walk has an origin")
    }

    pub fn hits(&self, t: i64) -> bool {
        self.points.iter().any(|&(x, y)| y as i64 - x as i64 == t)
    }
}

/// Step `i` goes up when `i ∈ r`, right otherwise.
pub fn walk_of_set(r: SubsetMask, n: usize) -> Result<WalkTrace> {
    if !r.fits(n) {
        let element = r.max_element().unwrap_or(0) as i64;
        return Err(Error::ElementOutOfRange { element, n });
    }
    let mut points = Vec::with_capacity(n + 1);
    let (mut x, mut y) = (0, 0);
    points.push((x, y));
    for i in 1..=n {
        if r.contains(i) {
            y += 1;
        } else {
            x += 1;
        }
        points.push((x, y));
    }
    Ok(WalkTrace { points })
}

/// Whether the walk of `r` on `[n]` meets `y = x + t`. Origin and endpoint count.
pub fn hits_line(r: SubsetMask, n: usize, t: i64) -> bool {
    if t == 0 {
        return true;
    }
    let mut diff = 0i64;
    for i in 1..=n {
        diff += if r.contains(i) { 1 } else { -1 };
        if diff == t {
            return true;
        }
    }
    false
}

/// Every member's walk meets `y = x + t`.
pub fn family_walks_hit(family: &SetFamily, t: i64) -> bool {
    family.iter().all(|&m| hits_line(m, family.n(), t))
}

/// Number of monotone walks from `(a, b)` to `(n-k, k)` touching `y = x + t`,
/// by reflection: `C(n-a-b, k-a-t)`.
///
/// Both ends must lie on or below the line and `a + t <= k`.
pub fn reflection_count(n: i64, k: i64, t: i64, a: i64, b: i64) -> Result<BigInt> {
    check_reflection(n, k, t, a, b)?;
    Ok(binom(n - a - b, k - a - t))
}

pub(crate) fn reflection_valid(n: i64, k: i64, t: i64, a: i64, b: i64) -> bool {
    check_reflection(n, k, t, a, b).is_ok()
}

fn check_reflection(n: i64, k: i64, t: i64, a: i64, b: i64) -> Result<()> {
    let fail = |why: &str| {
        Err(Error::Hypothesis(format!(
            "reflection count (n={n}, k={k}, t={t}, a={a}, b={b}): {why}"
        )))
    };
    if n < 0 || k < 0 || k > n || a < 0 || b < 0 {
        return fail("need 0 <= k <= n and a, b >= 0");
    }
    if a > n - k || b > k {
        return fail("start must not lie beyond the endpoint");
    }
    if b > a + t {
        return fail("start lies above the line");
    }
    if k > n - k + t {
        return fail("endpoint lies above the line");
    }
    if a + t > k {
        return fail("need a + t <= k");
    }
    Ok(())
}

/// Counts the walks of [`reflection_count`] one by one.
pub fn brute_hit_count(n: i64, k: i64, t: i64, a: i64, b: i64) -> Result<BigInt> {
    let steps = n - a - b;
    let ups = k - b;
    if steps > 24 {
        return Err(Error::CapExceeded(format!("{steps} steps exceed the 24-step enumeration cap")));
    }
    if steps < 0 || ups < 0 || ups > steps {
        return Ok(BigInt::from(0));
    }
    let start = b - a;
    let count = k_subsets(steps as usize, ups as usize)
        .filter(|path| {
            if start == t {
                return true;
            }
            let mut diff = start;
            for i in 1..=steps as usize {
                diff += if path.contains(i) { 1 } else { -1 };
                if diff == t {
                    return true;
                }
            }
            false
        })
        .count();
    Ok(BigInt::from(count))
}

/// Some `i >= 0` has `|f ∩ [t+2i]| >= t+i`.
pub fn prefix_majority(f: SubsetMask, t: usize) -> bool {
    (0..=f.cardinality()).any(|i| f.prefix_count(t + 2 * i) >= t + i)
}

/// Some `s >= t` has `|f ∩ [s]| + |g ∩ [s]| >= s + t`.
pub fn cross_prefix_majority(f: SubsetMask, g: SubsetMask, t: usize) -> bool {
    (t..=64).any(|s| f.prefix_count(s) + g.prefix_count(s) >= s + t)
}
