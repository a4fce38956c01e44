//! Fixed-grid and sampled verification suites for the structural facts:
//! shifting invariants, down-shift facts, reflection counting, Hilton
//! compression, the Sperner-type inequalities and small Katona/Kleitman cases.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{binom, katona_bound, shadow_bound_check, sperner_cross_check};
use crate::constructions::{ball, construct, Construction};
use crate::error::{Error, Result};
use crate::family::{is_cross_t_intersecting, k_subsets, SetFamily, SubsetMask};
use crate::search::{
    diametral_overflow, maximize, verify_hilton, Objective, SearchOptions,
};
use crate::transforms::{down_shift, is_initial, make_initial, shift_ij};
use crate::walks::{
    brute_hit_count, cross_prefix_majority, family_walks_hit, prefix_majority, reflection_count,
    reflection_valid,
};

const KEPT_VIOLATIONS: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct BatteryReport {
    pub suite: String,
    pub grid: String,
    #[serde(with = "crate::io::decimal")]
    pub checks: u64,
    #[serde(with = "crate::io::decimal")]
    pub violation_count: u64,
    /// The first few violations, described.
    pub violations: Vec<String>,
}

impl BatteryReport {
    fn new(suite: &str, grid: String) -> Self {
        BatteryReport { suite: suite.into(), grid, checks: 0, violation_count: 0, violations: Vec::new() }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violation_count += 1;
            if self.violations.len() < KEPT_VIOLATIONS {
                self.violations.push(describe());
            }
        }
    }

    fn absorb(&mut self, other: BatteryReport) {
        self.checks += other.checks;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < KEPT_VIOLATIONS {
                self.violations.push(v);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Hilton,
    Facts,
    Sperner,
    Reflection,
    KatonaSmall,
}

impl Suite {
    pub fn parse(name: &str) -> Result<Suite> {
        match name {
            "hilton" => Ok(Suite::Hilton),
            "facts" => Ok(Suite::Facts),
            "sperner" => Ok(Suite::Sperner),
            "reflection" => Ok(Suite::Reflection),
            "katona-small" | "katona_small" => Ok(Suite::KatonaSmall),
            _ => Err(Error::param(format!("unknown suite {name:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BatteryConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_n: usize,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig { seed: 1, samples: 2000, max_n: 6 }
    }
}

pub fn run_suite(suite: Suite, cfg: &BatteryConfig) -> Result<BatteryReport> {
    match suite {
        Suite::Hilton => hilton_grid(),
        Suite::Facts => {
            let mut r = shifting_battery(cfg.samples, cfg.seed);
            let down = down_shift_battery(cfg.samples / 10 + 1, cfg.seed)?;
            r.grid = format!("{}; {}", r.grid, down.grid);
            r.absorb(down);
            r.suite = "facts".into();
            Ok(r)
        }
        Suite::Sperner => Ok(sperner_battery(cfg.samples, cfg.seed)),
        Suite::Reflection => reflection_grid(cfg.max_n.max(1)),
        Suite::KatonaSmall => katona_small(cfg.max_n),
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each subset of `[n]` independently with probability `density`.
pub fn random_family<R: Rng>(rng: &mut R, n: usize, density: f64) -> SetFamily {
    let members = (0..1u64 << n)
        .map(SubsetMask::from_bits)
        .filter(|_| rng.gen_bool(density))
        .collect();
    SetFamily::from_masks_unchecked(n, members)
}

/// Random subsets of `[n]` added in shuffled order while `accept` allows,
/// stopping at `limit` members.
pub fn random_greedy<R: Rng>(
    rng: &mut R,
    n: usize,
    limit: usize,
    mut accept: impl FnMut(&[SubsetMask], SubsetMask) -> bool,
) -> SetFamily {
    let mut pool: Vec<SubsetMask> = (0..1u64 << n).map(SubsetMask::from_bits).collect();
    pool.shuffle(rng);
    let mut members = Vec::new();
    for m in pool {
        if members.len() >= limit {
            break;
        }
        if accept(&members, m) {
            members.push(m);
        }
    }
    SetFamily::from_masks_unchecked(n, members)
}

pub fn random_t_intersecting<R: Rng>(rng: &mut R, n: usize, t: usize, limit: usize) -> SetFamily {
    random_greedy(rng, n, limit, |fam, m| {
        m.cardinality() >= t && fam.iter().all(|f| f.intersection(m).cardinality() >= t)
    })
}

pub fn random_u_union<R: Rng>(rng: &mut R, n: usize, u: usize, limit: usize) -> SetFamily {
    random_greedy(rng, n, limit, |fam, m| {
        m.cardinality() <= u && fam.iter().all(|f| f.union(m).cardinality() <= u)
    })
}

/// Random cross t-intersecting pair built by alternating greedy insertion.
pub fn random_cross_pair<R: Rng>(rng: &mut R, n: usize, t: usize, limit: usize) -> (SetFamily, SetFamily) {
    let mut pool: Vec<SubsetMask> = (0..1u64 << n).map(SubsetMask::from_bits).collect();
    pool.shuffle(rng);
    let (mut a, mut b): (Vec<SubsetMask>, Vec<SubsetMask>) = (Vec::new(), Vec::new());
    for (i, m) in pool.into_iter().enumerate() {
        let (mine, other) = if i % 2 == 0 { (&mut a, &b) } else { (&mut b, &a) };
        if mine.len() < limit && other.iter().all(|o| o.intersection(m).cardinality() >= t) {
            mine.push(m);
        }
    }
    (SetFamily::from_masks_unchecked(n, a), SetFamily::from_masks_unchecked(n, b))
}

/// Down-closure of a few random sets of size at most `max_size`.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize, max_size: usize, generators: usize) -> SetFamily {
    let tops: Vec<SubsetMask> = (0..generators)
        .map(|_| {
            let mut m = SubsetMask::EMPTY;
            let size = rng.gen_range(0..=max_size.min(n));
            let mut elems: Vec<usize> = (1..=n).collect();
            elems.shuffle(rng);
            for &x in &elems[..size] {
                m = m.with(x);
            }
            m
        })
        .collect();
    SetFamily::from_masks_unchecked(n, tops).down_closure()
}

/// Applies the same `S_ij` sweeps to both families until both are fixed.
pub fn make_initial_pair(a: &SetFamily, b: &SetFamily) -> Result<(SetFamily, SetFamily)> {
    let n = a.n();
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        let mut changed = false;
        for i in 1..n {
            for j in i + 1..=n {
                let (sa, sb) = (shift_ij(&a, i, j)?, shift_ij(&b, i, j)?);
                if sa != a || sb != b {
                    changed = true;
                    a = sa;
                    b = sb;
                }
            }
        }
        if !changed {
            return Ok((a, b));
        }
    }
}

/// Layer sizes `s1 <= s2` of a u-union family are cross `(s1 + s2 - u)`-intersecting.
pub fn layer_cross_facts(f: &SetFamily, u: usize) -> bool {
    let profile = f.layer_profile();
    let sizes: Vec<usize> = (0..profile.len()).filter(|&s| profile[s] > 0).collect();
    sizes.iter().enumerate().all(|(p, &s1)| {
        sizes[p..].iter().all(|&s2| {
            let t = s1 as i64 + s2 as i64 - u as i64;
            if t <= 0 {
                return true;
            }
            let (l1, l2) = (f.layer(s1), f.layer(s2));
            if s1 == s2 {
                l1.is_t_intersecting(t as usize)
            } else {
                is_cross_t_intersecting(&l1, &l2, t as usize).unwrap_or(false)
            }
        })
    })
}

/// Shifting invariants, walk facts, layer facts and duality on random families.
pub fn shifting_battery(samples: usize, seed: u64) -> BatteryReport {
    let mut r = BatteryReport::new("shifting", format!("{samples} random families, 2 <= n <= 8, seed {seed}"));
    let mut rng = rng(seed);
    for sample in 0..samples {
        let n = rng.gen_range(2..=8);
        let t = rng.gen_range(1..n);
        let u = rng.gen_range(1..n);
        let limit = rng.gen_range(1..=40);
        let f = match sample % 4 {
            0 => {
                let density = rng.gen_range(0.02..0.5);
                random_family(&mut rng, n, density)
            }
            1 => random_t_intersecting(&mut rng, n, t, limit),
            2 => random_u_union(&mut rng, n, u, limit),
            _ => random_cross_pair(&mut rng, n, t, limit).0,
        };
        let tag = || format!("sample {sample}: {}", f.to_json_string());

        // one random i <- j shift
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let s = shift_ij(&f, i, j).expect("valid shift");
        r.check(s.layer_profile() == f.layer_profile(), || format!("S_{i}{j} changed layers, {}", tag()));
        let t_int = f.is_t_intersecting(t);
        r.check(!t_int || s.is_t_intersecting(t), || format!("S_{i}{j} broke {t}-intersecting, {}", tag()));
        let u_un = f.is_u_union(u);
        r.check(!u_un || s.is_u_union(u), || format!("S_{i}{j} broke {u}-union, {}", tag()));

        let (g, h) = random_cross_pair(&mut rng, n, t, limit);
        let (sg, sh) = (shift_ij(&g, i, j).expect("valid"), shift_ij(&h, i, j).expect("valid"));
        r.check(is_cross_t_intersecting(&sg, &sh, t).unwrap_or(false), || {
            format!("S_{i}{j} broke cross {t}-intersecting on {} / {}", g.to_json_string(), h.to_json_string())
        });

        // initial fixpoint
        let (fi, log) = make_initial(&f);
        r.check(is_initial(&fi), || format!("make_initial output not initial, {}", tag()));
        r.check(log.replay(&f).ok().as_ref() == Some(&fi), || format!("shift log does not replay, {}", tag()));
        r.check(fi.layer_profile() == f.layer_profile(), || format!("make_initial changed layers, {}", tag()));

        // walks and layer bounds for t-intersecting families
        if t_int {
            r.check(fi.is_t_intersecting(t), || format!("initial image lost {t}-intersecting, {}", tag()));
            r.check(family_walks_hit(&fi, t as i64), || format!("walk misses y = x + {t}, {}", tag()));
            r.check(fi.iter().all(|&m| prefix_majority(m, t)), || format!("prefix majority fails, {}", tag()));
            let profile = f.layer_profile();
            r.check(
                (0..=n - t).all(|l| BigInt::from(profile[t + l]) <= binom(n as i64, l as i64)),
                || format!("layer exceeds C(n, l), {}", tag()),
            );
        }
        if is_cross_t_intersecting(&g, &h, t).unwrap_or(false) {
            let (gi, hi) = make_initial_pair(&g, &h).expect("valid shifts");
            r.check(
                gi.iter().all(|&x| hi.iter().all(|&y| cross_prefix_majority(x, y, t))),
                || format!("cross prefix majority fails on {} / {}", g.to_json_string(), h.to_json_string()),
            );
        }

        // layer facts of u-union families
        if u_un {
            r.check(layer_cross_facts(&f, u), || format!("layer facts fail for u = {u}, {}", tag()));
        }

        // duality
        let c = f.complement();
        for tt in 1..n {
            r.check(f.is_t_intersecting(tt) == c.is_u_union(n - tt), || {
                format!("duality fails at t = {tt}, {}", tag())
            });
        }
    }
    r
}

/// `|D_i(F) ∩ D_i(G)| >= |F ∩ G|`.
pub fn down_shift_meets(f: &SetFamily, g: &SetFamily, i: usize) -> bool {
    let (df, dg) = (down_shift(f, i).expect("valid"), down_shift(g, i).expect("valid"));
    df.common_count(&dg) >= f.common_count(g)
}

/// Overflow of `f` against `K(n, u)` (even `u`) or the best `K_x(n, u)` (odd `u`).
pub fn overflow_of(f: &SetFamily, u: usize) -> BigInt {
    let d = u / 2;
    if u.is_multiple_of(2) {
        return BigInt::from(f.at_least(d + 1).len());
    }
    (1..=f.n())
        .map(|x| f.iter().filter(|m| m.without(x).cardinality() > d).count())
        .min()
        .map(BigInt::from)
        .unwrap_or_default()
}

/// Down-shift facts: meeting counts never drop, balls shift to balls, and
/// overflow equals diametral overflow on complexes.
pub fn down_shift_battery(complex_samples: usize, seed: u64) -> Result<BatteryReport> {
    let mut r = BatteryReport::new(
        "down-shift",
        format!(
            "meets: all family pairs n <= 3, restricted universes n = 4, sampled n <= 8; \
             balls: n <= 6, u <= 4; overflow vs diametral overflow: {complex_samples} complexes n <= 8"
        ),
    );
    let mut rng = rng(seed ^ 0x5eed);

    for n in 1..=3 {
        let fams: Vec<SetFamily> = (0..1u64 << (1 << n))
            .map(|code| {
                SetFamily::from_masks_unchecked(
                    n,
                    (0..1u64 << n).filter(|s| code >> s & 1 == 1).map(SubsetMask::from_bits).collect(),
                )
            })
            .collect();
        for f in &fams {
            for g in &fams {
                for i in 1..=n {
                    r.check(down_shift_meets(f, g, i), || {
                        format!("D_{i} meets fails: {} / {}", f.to_json_string(), g.to_json_string())
                    });
                }
            }
        }
    }
    for _ in 0..4 {
        let mut all: Vec<SubsetMask> = (0..16).map(SubsetMask::from_bits).collect();
        all.shuffle(&mut rng);
        let universe = &all[..8];
        let fams: Vec<SetFamily> = (0..256u32)
            .map(|code| {
                SetFamily::from_masks_unchecked(
                    4,
                    (0..8).filter(|s| code >> s & 1 == 1).map(|s| universe[s]).collect(),
                )
            })
            .collect();
        for f in &fams {
            for g in fams.iter().step_by(3) {
                for i in 1..=4 {
                    r.check(down_shift_meets(f, g, i), || {
                        format!("D_{i} meets fails: {} / {}", f.to_json_string(), g.to_json_string())
                    });
                }
            }
        }
    }
    for _ in 0..complex_samples {
        let n = rng.gen_range(5..=8);
        let (df, dg) = (rng.gen_range(0.05..0.5), rng.gen_range(0.05..0.5));
        let f = random_family(&mut rng, n, df);
        let g = random_family(&mut rng, n, dg);
        let i = rng.gen_range(1..=n);
        r.check(down_shift_meets(&f, &g, i), || {
            format!("D_{i} meets fails: {} / {}", f.to_json_string(), g.to_json_string())
        });
    }

    for n in 2..=6 {
        for u in 1..=4.min(n - 1) {
            for bits in 0..1u64 << n {
                let a = SubsetMask::from_bits(bits);
                let k = ball(n, u, a, 1);
                for i in 1..=n {
                    let shifted = down_shift(&k, i)?;
                    let expect = ball(n, u, a.without(i), 1);
                    r.check(shifted == expect, || format!("D_{i}(K_{a}({n},{u})) is not K_{}", a.without(i)));
                }
            }
        }
    }

    for sample in 0..complex_samples {
        let n = rng.gen_range(3..=8);
        let gens = rng.gen_range(1..=5);
        let f = random_complex(&mut rng, n, n, gens);
        let u = rng.gen_range(1..n);
        let kappa = diametral_overflow(&f, u)?.value;
        let sigma = overflow_of(&f, u);
        r.check(kappa == sigma, || {
            format!("complex sample {sample}, u = {u}: overflow {sigma} != diametral overflow {kappa}, {}", f.to_json_string())
        });
    }
    Ok(r)
}

/// Reflection counts against walk enumeration on every valid cell with
/// `n <= max_n`, `|t| <= 4`, `a, b <= 3`.
pub fn reflection_grid(max_n: usize) -> Result<BatteryReport> {
    let mut r = BatteryReport::new("reflection", format!("n <= {max_n}, 0 <= k <= n, -4 <= t <= 4, 0 <= a, b <= 3"));
    for n in 0..=max_n as i64 {
        for k in 0..=n {
            for t in -4..=4 {
                for a in 0..=3 {
                    for b in 0..=3 {
                        if !reflection_valid(n, k, t, a, b) {
                            continue;
                        }
                        let formula = reflection_count(n, k, t, a, b)?;
                        let brute = brute_hit_count(n, k, t, a, b)?;
                        r.check(formula == brute, || {
                            format!("(n,k,t,a,b) = ({n},{k},{t},{a},{b}): formula {formula}, enumeration {brute}")
                        });
                    }
                }
            }
        }
    }
    Ok(r)
}

/// Every `(n, a, b)` with `n > a + b` within the enumeration cap.
pub fn hilton_grid() -> Result<BatteryReport> {
    let mut r = BatteryReport::new("hilton", "n > a + b, C(n,a) + C(n,b) <= 22".into());
    for n in 3..=22usize {
        for a in 1..n {
            for b in 1..n - a {
                let size = binom(n as i64, a as i64) + binom(n as i64, b as i64);
                if size > BigInt::from(22) {
                    continue;
                }
                let rep = verify_hilton(n, a, b)?;
                r.check(rep.holds == Some(true), || format!("({n},{a},{b}): {:?}", rep.counterexample));
            }
        }
    }
    Ok(r)
}

/// Cross-sum and shadow inequalities on random instances.
pub fn sperner_battery(samples: usize, seed: u64) -> BatteryReport {
    let mut r = BatteryReport::new("sperner", format!("{samples} cross pairs and {samples} shadows, n <= 8, seed {seed}"));
    let mut rng = rng(seed ^ 0xc0ffee);
    let mut done = 0;
    while done < samples {
        let n = rng.gen_range(2..=8);
        let a = rng.gen_range(1..n);
        let b = rng.gen_range(1..=n - a);
        let limit = rng.gen_range(1..=30);
        let mut pool: Vec<(bool, SubsetMask)> = k_subsets(n, a)
            .map(|m| (true, m))
            .chain(k_subsets(n, b).map(|m| (false, m)))
            .collect();
        pool.shuffle(&mut rng);
        let (mut fa, mut fb) = (Vec::new(), Vec::new());
        for (side, m) in pool {
            let (mine, other) = if side { (&mut fa, &fb) } else { (&mut fb, &fa) };
            if mine.len() < limit && other.iter().all(|o: &SubsetMask| !o.intersection(m).is_empty()) {
                mine.push(m);
            }
        }
        let fa = SetFamily::from_masks_unchecked(n, fa);
        let fb = SetFamily::from_masks_unchecked(n, fb);
        match sperner_cross_check(&fa, &fb) {
            Ok(rep) => r.check(rep.holds == Some(true), || {
                format!("cross sum fails: {} / {}", fa.to_json_string(), fb.to_json_string())
            }),
            Err(e) => r.check(false, || format!("cross sum errored: {e}")),
        }
        done += 1;
    }
    for _ in 0..samples {
        let n = rng.gen_range(2..=8);
        let k = rng.gen_range(1..=n);
        let level = rng.gen_range(0..k);
        let pool: Vec<SubsetMask> = k_subsets(n, k).collect();
        let density = rng.gen_range(0.05..1.0);
        let mut members: Vec<SubsetMask> = pool.into_iter().filter(|_| rng.gen_bool(density)).collect();
        if members.is_empty() {
            members.push(SubsetMask::full(k));
        }
        let f = SetFamily::from_masks_unchecked(n, members);
        match shadow_bound_check(&f, level) {
            Ok(rep) => r.check(rep.holds == Some(true), || format!("shadow fails at level {level}: {}", f.to_json_string())),
            Err(e) => r.check(false, || format!("shadow errored: {e}")),
        }
    }
    r
}

/// Searches for the largest u-union and diameter-u families for `2 <= u < n <= max_n`
/// and compares with the Katona families.
pub fn katona_small(max_n: usize) -> Result<BatteryReport> {
    let mut r = BatteryReport::new("katona-small", format!("2 <= u < n <= {max_n}"));
    let opts = SearchOptions::default();
    for n in 3..=max_n {
        for u in 2..n {
            let bound = katona_bound(n as i64, u as i64)?;
            let k = construct(&Construction::Katona { n, u })?;
            let c = maximize(&Objective::MaxUnionSize { n, u }, &opts)?;
            let mut msg = String::new();
            let _ = write!(msg, "max_union_size({n},{u}) = {} vs bound {bound}", c.optimum);
            r.check(c.optimum == bound && c.proven_optimal, || msg.clone());
            if u + 2 <= n {
                r.check(c.maximizers == 1 && c.witness == k, || {
                    format!("({n},{u}): {} maximizers, witness {}", c.maximizers, c.witness.to_json_string())
                });
            } else {
                r.check(c.maximizers > 1, || format!("({n},{u}): expected several maximizers"));
            }
            let dm = maximize(&Objective::MaxDiameterSize { n, u }, &opts)?;
            r.check(dm.optimum == BigInt::from(k.len()), || {
                format!("max_diameter_size({n},{u}) = {} vs |K| = {}", dm.optimum, k.len())
            });
        }
    }
    Ok(r)
}
