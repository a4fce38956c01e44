//! Closed-form bounds and identities, evaluated in exact arithmetic.
//!
//! Binomials follow the convention `C(n, k) = 0` outside `0 <= k <= n`, so
//! sums with negative lower indices evaluate cleanly.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{is_cross_t_intersecting, SetFamily};

/// Exact binomial coefficient; zero when `k < 0`, `k > n` or `n < 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Result of a bound evaluation or an inequality check.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub value: Option<BigInt>,
    pub holds: Option<bool>,
    pub lhs: Option<BigRational>,
    pub rhs: Option<BigRational>,
    pub in_proved_regime: Option<bool>,
    pub formula: String,
    /// Present for exhaustive verifications: `Some(None)` when nothing failed.
    pub counterexample: Option<Option<(SetFamily, SetFamily)>>,
}

impl BoundReport {
    pub(crate) fn new(name: &str, params: &[(&str, i64)], formula: &str) -> Self {
        BoundReport {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            value: None,
            holds: None,
            lhs: None,
            rhs: None,
            in_proved_regime: None,
            formula: formula.to_string(),
            counterexample: None,
        }
    }

    pub(crate) fn with_value(mut self, v: BigInt) -> Self {
        self.value = Some(v);
        self
    }

    pub(crate) fn with_regime(mut self, r: bool) -> Self {
        self.in_proved_regime = Some(r);
        self
    }

    pub(crate) fn comparing(mut self, lhs: BigRational, rhs: BigRational, holds: bool) -> Self {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self.holds = Some(holds);
        self
    }

    /// The value, panicking if this report is an inequality check.
    pub fn value(&self) -> &BigInt {
        self.value.as_ref().expect("report carries no value")
    }
}

fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("name", &self.name)?;
        let params: BTreeMap<&str, String> = self
            .params
            .iter()
            .map(|(k, v)| (k.as_str(), v.to_string()))
            .collect();
        m.serialize_entry("params", &params)?;
        if let Some(v) = &self.value {
            m.serialize_entry("value", &v.to_string())?;
        }
        if let Some(h) = self.holds {
            m.serialize_entry("holds", &h)?;
        }
        if let Some(l) = &self.lhs {
            m.serialize_entry("lhs", &rational_string(l))?;
        }
        if let Some(r) = &self.rhs {
            m.serialize_entry("rhs", &rational_string(r))?;
        }
        if let Some(r) = self.in_proved_regime {
            m.serialize_entry("in_proved_regime", &r)?;
        }
        m.serialize_entry("formula", &self.formula)?;
        if let Some(slot) = &self.counterexample {
            m.serialize_entry("counterexample", &slot.as_ref().map(|(a, b)| [a, b]))?;
        }
        m.end()
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// Maximum size of a u-union family on `[n]`.
pub fn katona_bound(n: i64, u: i64) -> Result<BigInt> {
    require(0 < u && u < n, || format!("need 0 < u < n, got n={n}, u={u}"))?;
    let d = u / 2;
    Ok(if u % 2 == 0 {
        (0..=d).map(|i| binom(n, i)).sum()
    } else {
        BigInt::from(2) * (0..=d).map(|i| binom(n - 1, i)).sum::<BigInt>()
    })
}

/// `C(n - t, k - t)`, the t-intersecting k-uniform maximum for large n.
pub fn ekr_bound(n: i64, k: i64, t: i64) -> Result<BigInt> {
    require(n > k && k >= t && t > 0, || {
        format!("need n > k >= t > 0, got n={n}, k={k}, t={t}")
    })?;
    Ok(binom(n - t, k - t))
}

/// Maximum size of a non-trivial intersecting k-uniform family.
pub fn hm_bound(n: i64, k: i64) -> Result<BigInt> {
    require(k >= 1 && n > 2 * k, || format!("need n > 2k >= 2, got n={n}, k={k}"))?;
    Ok(binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1)
}

/// Largest overflow of a u-union family: `C(n-2, d-1)` for `u = 2d`,
/// `2 C(n-3, d-1)` for `u = 2d + 1`.
pub fn overflow_bound(n: i64, u: i64) -> Result<BoundReport> {
    require(u >= 2 && n > u, || format!("need 2 <= u < n, got n={n}, u={u}"))?;
    let d = u / 2;
    let params = [("n", n), ("u", u), ("d", d)];
    Ok(if u % 2 == 0 {
        BoundReport::new("overflow_bound", &params, "C(n-2, d-1), proved for n >= 6d")
            .with_value(binom(n - 2, d - 1))
            .with_regime(n >= 6 * d)
    } else {
        BoundReport::new("overflow_bound", &params, "2 C(n-3, d-1), proved for n > 36(d+1)")
            .with_value(BigInt::from(2) * binom(n - 3, d - 1))
            .with_regime(n > 36 * (d + 1))
    })
}

/// Upper-layer bound: `|F^(>=r)| <= C(n, r)` for `u = 2r`,
/// `|F^(>=r+1)| <= C(n-1, r)` for `u = 2r + 1`.
pub fn upper_layer_bound(n: i64, u: i64) -> Result<BoundReport> {
    require(0 < u && u < n, || format!("need 0 < u < n, got n={n}, u={u}"))?;
    let r = u / 2;
    let params = [("n", n), ("u", u), ("r", r)];
    Ok(if u % 2 == 0 {
        // n >= 3.5 r + 1, compared exactly
        let regime = ratio(n, 1) >= ratio(7 * r, 2) + BigRational::one();
        BoundReport::new("upper_layer_bound", &params, "|F^(>=r)| <= C(n, r), proved for n >= 3.5r + 1")
            .with_value(binom(n, r))
            .with_regime(regime)
    } else {
        BoundReport::new("upper_layer_bound", &params, "|F^(>=r+1)| <= C(n-1, r), proved for n > 4r")
            .with_value(binom(n - 1, r))
            .with_regime(n > 4 * r)
    })
}

/// `C(n-3, k-2)`, the diversity of intersecting k-uniform families for `n > 36k`.
pub fn diversity_formula(n: i64, k: i64) -> Result<BoundReport> {
    require(k >= 1 && n > 2 * k, || format!("need n > 2k >= 2, got n={n}, k={k}"))?;
    Ok(
        BoundReport::new("diversity_formula", &[("n", n), ("k", k)], "C(n-3, k-2), proved for n > 36k")
            .with_value(binom(n - 3, k - 2))
            .with_regime(n > 36 * k),
    )
}

/// `|F^(t+l)| <= C(n, l)` for t-intersecting F.
pub fn universal_layer_bound(n: i64, l: i64) -> BigInt {
    binom(n, l)
}

/// The sharpened layer bound `C(n-1, l)`, valid for `l <= (n-t-1)/2`.
pub fn improved_layer_bound(n: i64, t: i64, l: i64) -> Result<BoundReport> {
    require(n >= 1 && t >= 1 && l >= 0, || {
        format!("need n >= 1, t >= 1, l >= 0, got n={n}, t={t}, l={l}")
    })?;
    Ok(BoundReport::new(
        "improved_layer_bound",
        &[("n", n), ("t", t), ("l", l)],
        "|F^(t+l)| <= C(n-1, l) for l <= (n-t-1)/2",
    )
    .with_value(binom(n - 1, l))
    .with_regime(2 * l < n - t))
}

/// Initial k-uniform family missing `(1, ..., p, p+2, p+4, ..., 2k-p)`: at most `C(n, k-p-1)` members.
pub fn walk_gap_bound(n: i64, k: i64, p: i64) -> Result<BigInt> {
    require(0 <= p && p < k, || format!("need 0 <= p <= k-1, got k={k}, p={p}"))?;
    Ok(binom(n, k - p - 1))
}

/// Initial k-uniform family missing `(p, p+2, ..., p+2k-2)`:
/// at most `C(n, k) - C(n-p+2, k) + C(n-p+2, k-1)` members.
pub fn walk_skip_bound(n: i64, k: i64, p: i64) -> Result<BigInt> {
    require(2 <= p && p < k, || format!("need 2 <= p <= k-1, got k={k}, p={p}"))?;
    Ok(binom(n, k) - binom(n - p + 2, k) + binom(n - p + 2, k - 1))
}

/// Compares `C(n-a, r) / C(n, r-b)` with
/// `((n-r+b-a+1)/(n-a+1))^a ((n-r+b-a)/r)^b`.
///
/// `in_proved_regime` reports `n - r + b - a >= r`. Under that condition the
/// second product is minimized at its first factor and the inequality always
/// holds; outside it the comparison can fail (e.g. `(6, 3, 3, 2)`).
pub fn key_ratio_holds(n: i64, r: i64, a: i64, b: i64) -> Result<BoundReport> {
    require(a > 0 && b > 0 && n >= r + a && n > r && r > b, || {
        format!("need positive n >= r+a, n > r > b, got n={n}, r={r}, a={a}, b={b}")
    })?;
    let lhs = ratio(binom(n - a, r), binom(n, r - b));
    let first = ratio(n - r + b - a + 1, n - a + 1);
    let second = ratio(n - r + b - a, r);
    let rhs = pow(&first, a) * pow(&second, b);
    let holds = lhs >= rhs;
    Ok(BoundReport::new(
        "key_ratio",
        &[("n", n), ("r", r), ("a", a), ("b", b)],
        "C(n-a,r)/C(n,r-b) >= ((n-r+b-a+1)/(n-a+1))^a ((n-r+b-a)/r)^b",
    )
    .comparing(lhs, rhs, holds)
    .with_regime(n - r + b - a >= r))
}

fn pow(q: &BigRational, e: i64) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * q)
}

/// Overflow of `{D : |D \ [4]| <= d-2}` over `K(n, 2d)`: `5 C(n-4, d-2) + C(n-4, d-3)`.
pub fn d_even_overflow(n: i64, d: i64) -> Result<BigInt> {
    require(d >= 2 && n >= 4, || format!("need d >= 2, n >= 4, got n={n}, d={d}"))?;
    Ok(BigInt::from(5) * binom(n - 4, d - 2) + binom(n - 4, d - 3))
}

/// `d_even_overflow(n, d) - C(n-2, d-1)`.
pub fn d_even_gap(n: i64, d: i64) -> Result<BigInt> {
    Ok(d_even_overflow(n, d)? - binom(n - 2, d - 1))
}

/// `(4d - 1 - n)/(d - 1) · C(n-4, d-2)`, which equals [`d_even_gap`].
pub fn d_even_gap_closed_form(n: i64, d: i64) -> Result<BigRational> {
    require(d >= 2 && n >= 4, || format!("need d >= 2, n >= 4, got n={n}, d={d}"))?;
    Ok(ratio(4 * d - 1 - n, d - 1) * BigRational::from_integer(binom(n - 4, d - 2)))
}

/// Layer sizes `|D^(r)|, ..., |D^(r+3)|` of `D = {D : |D \ [6]| <= r-3}`.
pub fn d2r_layer_counts(n: i64, r: i64) -> Result<[BigInt; 4]> {
    require(r >= 3 && n >= 6, || format!("need r >= 3, n >= 6, got n={n}, r={r}"))?;
    let a = |i: i64| binom(n - 6, r - i);
    let c = |x: i64| BigInt::from(x);
    Ok([
        c(20) * a(3) + c(15) * a(4) + c(6) * a(5) + a(6),
        c(15) * a(3) + c(6) * a(4) + a(5),
        c(6) * a(3) + a(4),
        a(3),
    ])
}

/// `|D^(>=r)| - C(n, r)` from the layer counts.
pub fn d2r_gap(n: i64, r: i64) -> Result<BigInt> {
    let layers = d2r_layer_counts(n, r)?;
    Ok(layers.iter().sum::<BigInt>() - binom(n, r))
}

/// The same gap after cancelling the common terms against the expansion
/// of `C(n, r)` over `[6]`: `22a3 + 7a4 + a5 - a0 - 6a1 - 15a2`, `a_i = C(n-6, r-i)`.
pub fn d2r_gap_reduced(n: i64, r: i64) -> Result<BigInt> {
    require(r >= 3 && n >= 6, || format!("need r >= 3, n >= 6, got n={n}, r={r}"))?;
    let a = |i: i64| binom(n - 6, r - i);
    let c = |x: i64| BigInt::from(x);
    Ok(c(22) * a(3) + c(7) * a(4) + a(5) - a(0) - c(6) * a(1) - c(15) * a(2))
}

/// Sign of `1 + 7c + 22c^2 - 15c^3 - 6c^4 - c^5`, the limit form of the gap at `n = (1+c) r`.
pub fn crossover_quintic(c: &BigRational) -> Result<Ordering> {
    if !c.is_positive() {
        return Err(Error::param("c must be positive"));
    }
    let coeffs = [1, 7, 22, -15, -6, -1];
    let value = coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, &k| acc * c + ratio(k, 1));
    Ok(value.cmp(&BigRational::zero()))
}

/// `|F^(>=r+1)|` for `F = {F : |F \ [5]| <= r-2}`: `16 C(n-5, r-2) + 6 C(n-5, r-3) + C(n-5, r-4)`.
pub fn d_odd5_upper_count(n: i64, r: i64) -> Result<BigInt> {
    require(r >= 2 && n >= 5, || format!("need r >= 2, n >= 5, got n={n}, r={r}"))?;
    let a = |i: i64| binom(n - 5, r - i);
    Ok(BigInt::from(16) * a(2) + BigInt::from(6) * a(3) + a(4))
}

/// `d_odd5_upper_count(n, r) - C(n-1, r)`.
pub fn d_odd5_gap(n: i64, r: i64) -> Result<BigInt> {
    Ok(d_odd5_upper_count(n, r)? - binom(n - 1, r))
}

/// `|A|/C(n,a) + |B|/C(n,b) <= 1` for cross-intersecting uniform `A`, `B` with `a + b <= n`.
pub fn sperner_cross_check(a: &SetFamily, b: &SetFamily) -> Result<BoundReport> {
    let n = a.n() as i64;
    let sa = a.uniform_size()?;
    let sb = b.uniform_size()?;
    if !is_cross_t_intersecting(a, b, 1)? {
        return Err(Error::Hypothesis("families are not cross-intersecting".into()));
    }
    if let (Some(x), Some(y)) = (sa, sb) {
        if x + y > a.n() {
            return Err(Error::Hypothesis(format!(
                "member sizes {x} + {y} exceed n = {n}; every such pair meets"
            )));
        }
    }
    let term = |len: usize, size: Option<usize>| match size {
        Some(k) => ratio(len as i64, binom(n, k as i64)),
        None => BigRational::zero(),
    };
    let lhs = term(a.len(), sa) + term(b.len(), sb);
    let rhs = BigRational::one();
    let holds = lhs <= rhs;
    Ok(BoundReport::new(
        "sperner_cross",
        &[
            ("n", n),
            ("a", sa.map_or(-1, |x| x as i64)),
            ("b", sb.map_or(-1, |x| x as i64)),
        ],
        "|A|/C(n,a) + |B|/C(n,b) <= 1",
    )
    .comparing(lhs, rhs, holds))
}

/// `|∂^(l)F| / C(n,l) >= |F| / C(n,k)` for k-uniform `F`, `l < k`.
pub fn shadow_bound_check(f: &SetFamily, level: usize) -> Result<BoundReport> {
    let n = f.n() as i64;
    let k = f
        .uniform_size()?
        .ok_or_else(|| Error::param("shadow check needs a nonempty family"))?;
    let shadow = f.shadow(level)?;
    let lhs = ratio(shadow.len() as i64, binom(n, level as i64));
    let rhs = ratio(f.len() as i64, binom(n, k as i64));
    let holds = lhs >= rhs;
    Ok(BoundReport::new(
        "shadow_bound",
        &[("n", n), ("k", k as i64), ("l", level as i64)],
        "|shadow_l F|/C(n,l) >= |F|/C(n,k)",
    )
    .comparing(lhs, rhs, holds))
}
