use itertools::Itertools;
use num_bigint::BigInt;

use crate::bounds::BoundReport;
use crate::error::{Error, Result};
use crate::family::{SetFamily, SubsetMask};

/// Largest `C(n, a) + C(n, b)` enumerated by [`verify_hilton`].
pub const HILTON_CAP: usize = 22;

fn lex_sets(n: usize, k: usize) -> Vec<SubsetMask> {
    (1..=n).combinations(k).map(SubsetMask::from_elements).collect()
}

fn cross_intersecting(a: &[SubsetMask], b: &[SubsetMask]) -> bool {
    a.iter().all(|x| b.iter().all(|y| !x.intersection(*y).is_empty()))
}

/// Checks that replacing every cross-intersecting pair `(A, B)` of an
/// a-uniform and a b-uniform family by the lexicographic segments of the
/// same sizes keeps them cross-intersecting. Every pair is enumerated.
///
/// The report's `value` is the number of cross-intersecting pairs examined.
pub fn verify_hilton(n: usize, a: usize, b: usize) -> Result<BoundReport> {
    if a == 0 || b == 0 || n <= a + b {
        return Err(Error::param(format!("need n > a + b and a, b >= 1, got n={n}, a={a}, b={b}")));
    }
    let sa = lex_sets(n, a);
    let sb = lex_sets(n, b);
    if sa.len() + sb.len() > HILTON_CAP {
        return Err(Error::CapExceeded(format!(
            "C({n},{a}) + C({n},{b}) = {} exceeds {HILTON_CAP}",
            sa.len() + sb.len()
        )));
    }
    // ok[i][j]: first i a-sets and first j b-sets are cross-intersecting.
    let ok: Vec<Vec<bool>> = (0..=sa.len())
        .map(|i| (0..=sb.len()).map(|j| cross_intersecting(&sa[..i], &sb[..j])).collect())
        .collect();
    // meets[i]: bitmask of the b-sets meeting a-set i
    let meets: Vec<u32> = sa
        .iter()
        .map(|x| {
            sb.iter()
                .enumerate()
                .filter(|(_, y)| !x.intersection(**y).is_empty())
                .fold(0u32, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    let all_b: u32 = if sb.len() == 32 { u32::MAX } else { (1u32 << sb.len()) - 1 };

    let mut pairs: u64 = 0;
    let mut counterexample = None;
    'outer: for amask in 0u32..1 << sa.len() {
        let compat = (0..sa.len())
            .filter(|i| amask >> i & 1 == 1)
            .fold(all_b, |acc, i| acc & meets[i]);
        let na = amask.count_ones() as usize;
        // every submask of `compat`, the empty one included
        let mut bmask = compat;
        loop {
            pairs += 1;
            if !ok[na][bmask.count_ones() as usize] {
                let pick = |mask: u32, sets: &[SubsetMask]| {
                    SetFamily::new(n, (0..sets.len()).filter(|i| mask >> i & 1 == 1).map(|i| sets[i]))
                };
                counterexample = Some((pick(amask, &sa)?, pick(bmask, &sb)?));
                break 'outer;
            }
            if bmask == 0 {
                break;
            }
            bmask = (bmask - 1) & compat;
        }
    }
    let holds = counterexample.is_none();
    let mut report = BoundReport::new(
        "hilton",
        &[("n", n as i64), ("a", a as i64), ("b", b as i64)],
        "cross-intersecting (A, B) implies (L(n,a,|A|), L(n,b,|B|)) cross-intersecting",
    )
    .with_value(BigInt::from(pairs));
    report.holds = Some(holds);
    report.counterexample = Some(counterexample);
    Ok(report)
}
