//! Exact maximizers for the extremal quantities, with re-checkable certificates.
//!
//! Shift-invariant objectives are searched over initial complexes only; the
//! others fall back to exhaustive maximal-clique enumeration.

mod clique;
mod hilton;
mod initial;
mod objective;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicI64, Ordering};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{SetFamily, SubsetMask, SEARCH_CAP};

pub use hilton::verify_hilton;
pub use objective::Objective;

/// WLOG reduction a certificate relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reduction {
    None,
    InitialComplex,
    DownshiftComplex,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub time_limit: Option<Duration>,
    pub worker_count: usize,
    /// `None` picks the objective's default class.
    pub restrict_to_initial_complexes: Option<bool>,
    /// Walk filters and branch bounds. Turning this off only costs time.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            time_limit: None,
            worker_count: 1,
            restrict_to_initial_complexes: None,
            prune: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCertificate {
    pub objective: String,
    #[serde(with = "crate::io::decimal_map")]
    pub params: BTreeMap<String, i64>,
    #[serde(with = "crate::io::decimal")]
    pub optimum: BigInt,
    pub witness: SetFamily,
    pub proven_optimal: bool,
    pub reduction: Reduction,
    #[serde(with = "crate::io::decimal")]
    pub nodes: u64,
    #[serde(with = "crate::io::decimal")]
    pub elapsed_ms: u64,
    /// Maximal families attaining the optimum within the searched class.
    #[serde(with = "crate::io::decimal", default)]
    pub maximizers: u64,
}

impl SearchCertificate {
    pub fn objective(&self) -> Result<Objective> {
        Objective::from_parts(&self.objective, &self.params)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Pairwise constraint between members.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Metric {
    Union(usize),
    SymDiff(usize),
}

impl Metric {
    #[inline]
    pub(crate) fn compatible(self, a: SubsetMask, b: SubsetMask) -> bool {
        match self {
            Metric::Union(u) => a.union(b).cardinality() <= u,
            Metric::SymDiff(u) => a.symmetric_difference(b).cardinality() <= u,
        }
    }
}

/// Objective value of a family given by its members.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Value {
    Count,
    OddOverflow { d: usize },
    Diversity,
    Kappa { u: usize },
}

impl Value {
    pub(crate) fn additive(self) -> bool {
        matches!(self, Value::Count)
    }

    pub(crate) fn eval(self, n: usize, members: &[SubsetMask]) -> i64 {
        match self {
            Value::Count => members.len() as i64,
            Value::OddOverflow { d } => {
                let upper = members.iter().filter(|m| m.cardinality() >= d + 2).count();
                let ring: Vec<SubsetMask> =
                    members.iter().copied().filter(|m| m.cardinality() == d + 1).collect();
                (upper + ring.len() - max_degree(n, &ring)) as i64
            }
            Value::Diversity => (members.len() - max_degree(n, members)) as i64,
            Value::Kappa { u } => kappa(n, u, members).0 as i64,
        }
    }
}

/// Largest number of members through a single element of `[n]`.
fn max_degree(n: usize, members: &[SubsetMask]) -> usize {
    degrees(n, members).into_iter().max().unwrap_or(0)
}

fn degrees(n: usize, members: &[SubsetMask]) -> Vec<usize> {
    let mut deg = vec![0; n + 1];
    for m in members {
        for x in m.elements() {
            deg[x] += 1;
        }
    }
    deg[1..].to_vec()
}

/// `(value, center, axis)` minimizing the number of members outside a
/// (double) ball; smallest center, then smallest axis, on ties.
fn kappa(n: usize, u: usize, members: &[SubsetMask]) -> (usize, SubsetMask, Option<usize>) {
    let d = u / 2;
    let mut best = (usize::MAX, SubsetMask::EMPTY, None);
    let mut ring_deg = vec![0usize; n + 1];
    for bits in 0..1u64 << n {
        let a = SubsetMask::from_bits(bits);
        let value = if u.is_multiple_of(2) {
            let out = members
                .iter()
                .filter(|m| m.symmetric_difference(a).cardinality() > d)
                .count();
            (out, None)
        } else {
            ring_deg.iter_mut().for_each(|c| *c = 0);
            let mut far = 0;
            let mut ring = 0;
            for m in members {
                let diff = m.symmetric_difference(a);
                match diff.cardinality() {
                    c if c > d + 1 => far += 1,
                    c if c == d + 1 => {
                        ring += 1;
                        for x in diff.elements() {
                            ring_deg[x] += 1;
                        }
                    }
                    _ => {}
                }
            }
            let mut axis = 1;
            for x in 2..=n {
                if ring_deg[x] > ring_deg[axis] {
                    axis = x;
                }
            }
            (far + ring - ring_deg[axis], Some(axis))
        };
        if value.0 < best.0 {
            best = (value.0, a, value.1);
        }
    }
    best
}

/// `σ_2d(F) = |F^(≥d+1)|`.
pub fn overflow_even_of(family: &SetFamily, d: usize) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::param("overflow needs d >= 1"));
    }
    Ok(BigInt::from(family.at_least(d + 1).len()))
}

/// `σ_2d+1(F) = min_x |F \ K_x(n, 2d+1)|` and the smallest minimizing `x`.
pub fn overflow_odd_of(family: &SetFamily, d: usize) -> Result<(BigInt, usize)> {
    if d == 0 {
        return Err(Error::param("overflow needs d >= 1"));
    }
    if family.n() == 0 {
        return Err(Error::param("odd overflow needs a nonempty ground set"));
    }
    let (value, x) = (1..=family.n())
        .map(|x| {
            let outside = family.iter().filter(|m| m.without(x).cardinality() > d).count();
            (outside, x)
        })
        .min()
        .expect("ground set is nonempty");
    Ok((BigInt::from(value), x))
}

/// Result of [`diametral_overflow`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiametralOverflow {
    #[serde(with = "crate::io::decimal")]
    pub value: BigInt,
    pub center: SubsetMask,
    /// Special element of the double ball, odd `u` only.
    pub axis: Option<usize>,
}

/// Cap on `n` for [`diametral_overflow`], which tries every center.
pub const KAPPA_CAP: usize = 20;

/// `κ_u(F)`: fewest members outside a ball `K_A(n, u)` over all centers `A`.
/// For odd `u` the special element of the double ball is minimized over too.
pub fn diametral_overflow(family: &SetFamily, u: usize) -> Result<DiametralOverflow> {
    if family.n() > KAPPA_CAP {
        return Err(Error::GroundSetTooLarge { n: family.n(), cap: KAPPA_CAP });
    }
    if u == 0 {
        return Err(Error::param("diametral overflow needs u >= 1"));
    }
    let n = family.n();
    if n == 0 {
        return Ok(DiametralOverflow { value: BigInt::from(0), center: SubsetMask::EMPTY, axis: None });
    }
    let (value, center, axis) = kappa(n, u, family.members());
    Ok(DiametralOverflow { value: BigInt::from(value), center, axis })
}

/// Shared state of one search run.
pub(crate) struct Shared {
    pub best: AtomicI64,
    pub stop: AtomicBool,
    deadline: Option<Instant>,
}

impl Shared {
    fn new(deadline: Option<Instant>) -> Self {
        Shared {
            best: AtomicI64::new(-1),
            stop: AtomicBool::new(false),
            deadline,
        }
    }

    /// Called once per node; polls the clock every 1024 nodes.
    #[inline]
    pub(crate) fn tick(&self, local_nodes: &mut u64) -> bool {
        *local_nodes += 1;
        if *local_nodes & 1023 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.stop.store(true, Ordering::Relaxed);
                }
            }
        }
        self.stop.load(Ordering::Relaxed)
    }

    pub(crate) fn threshold(&self, local: i64) -> i64 {
        local.max(self.best.load(Ordering::Relaxed))
    }
}

/// Best value seen by one worker and the maximal families attaining it.
#[derive(Debug, Clone, Default)]
pub(crate) struct Outcome {
    pub value: i64,
    pub count: u64,
    pub witness: Option<Vec<SubsetMask>>,
    pub nodes: u64,
}

impl Outcome {
    pub(crate) fn empty() -> Self {
        Outcome { value: -1, ..Default::default() }
    }

    pub(crate) fn offer(&mut self, shared: &Shared, value: i64, members: &[SubsetMask]) {
        if value > self.value {
            let mut w = members.to_vec();
            w.sort();
            self.value = value;
            self.count = 1;
            self.witness = Some(w);
            shared.best.fetch_max(value, Ordering::Relaxed);
        } else if value == self.value {
            self.count += 1;
            let mut w = members.to_vec();
            w.sort();
            if self.witness.as_ref().is_none_or(|cur| w < *cur) {
                self.witness = Some(w);
            }
        }
    }

    pub(crate) fn merge(mut self, other: Outcome) -> Outcome {
        let nodes = self.nodes + other.nodes;
        match self.value.cmp(&other.value) {
            std::cmp::Ordering::Less => self = other,
            std::cmp::Ordering::Equal => {
                self.count += other.count;
                if let Some(w) = other.witness {
                    if self.witness.as_ref().is_none_or(|cur| w < *cur) {
                        self.witness = Some(w);
                    }
                }
            }
            std::cmp::Ordering::Greater => {}
        }
        self.nodes = nodes;
        self
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .stack_size(64 << 20)
        .build()
        .map_err(|e| Error::CapExceeded(format!("cannot start worker pool: {e}")))
}

/// Runs the exact maximizer for `objective`.
///
/// Returns a best-so-far certificate with `proven_optimal = false` when the
/// time limit expires.
pub fn maximize(objective: &Objective, options: &SearchOptions) -> Result<SearchCertificate> {
    objective.validate()?;
    let n = objective.n();
    if n > SEARCH_CAP {
        return Err(Error::GroundSetTooLarge { n, cap: SEARCH_CAP });
    }
    let restricted = options
        .restrict_to_initial_complexes
        .unwrap_or_else(|| objective.is_shift_invariant());
    let started = Instant::now();
    let shared = Shared::new(options.time_limit.map(|t| started + t));
    let workers = options.worker_count.max(1);
    let pool = pool(workers)?;
    let value = objective.value_kind();

    let outcome = if restricted {
        let problem = initial::Problem {
            n,
            metric: objective.metric(),
            value,
            sizes: objective.restricted_sizes(),
            walk_filter_u: objective.union_limit(),
            prune: options.prune,
        };
        let tables = initial::Tables::build(&problem)?;
        pool.install(|| initial::run(&problem, &tables, &shared, workers))
    } else {
        let graph = clique::Graph::build(n, objective.unrestricted_sizes(), objective.metric())?;
        pool.install(|| clique::run(&graph, value, n, options.prune, &shared))
    };

    let timed_out = shared.stop.load(Ordering::Relaxed);
    let (optimum, members, count) = match outcome.witness {
        Some(w) => (outcome.value, w, outcome.count),
        None => (value.eval(n, &[]), Vec::new(), 0),
    };
    let mut witness = SetFamily::new(n, members)?;
    if restricted && !matches!(objective, Objective::Diversity { .. }) {
        witness = witness.down_closure();
    }
    let reduction = match (restricted, objective) {
        (false, _) => Reduction::None,
        (true, Objective::MaxDiameterSize { .. }) => Reduction::DownshiftComplex,
        (true, _) => Reduction::InitialComplex,
    };
    Ok(SearchCertificate {
        objective: objective.name().to_string(),
        params: objective.params(),
        optimum: BigInt::from(optimum),
        witness,
        proven_optimal: !timed_out && (!restricted || objective.is_shift_invariant()),
        reduction,
        nodes: outcome.nodes,
        elapsed_ms: started.elapsed().as_millis() as u64,
        maximizers: count,
    })
}

/// Objective value of `family`, or `None` if it violates the objective's constraint.
pub fn evaluate(objective: &Objective, family: &SetFamily) -> Option<BigInt> {
    if family.n() != objective.n() {
        return None;
    }
    use Objective::*;
    match *objective {
        MaxUnionSize { u, .. } => family.is_u_union(u).then(|| BigInt::from(family.len())),
        MaxDiameterSize { u, .. } => (family.diameter() <= u).then(|| BigInt::from(family.len())),
        OverflowEven { d, .. } => {
            if family.is_u_union(2 * d) {
                overflow_even_of(family, d).ok()
            } else {
                None
            }
        }
        OverflowOdd { d, .. } => {
            if family.is_u_union(2 * d + 1) {
                overflow_odd_of(family, d).ok().map(|(v, _)| v)
            } else {
                None
            }
        }
        UpperLayers { u, .. } => family
            .is_u_union(u)
            .then(|| BigInt::from(family.at_least(u.div_ceil(2)).len())),
        Diversity { n, k } => {
            let sized = match family.uniform_size() {
                Ok(None) => true,
                Ok(Some(s)) => s == k,
                Err(_) => false,
            };
            if !sized || !family.is_t_intersecting(1) {
                return None;
            }
            (1..=n)
                .map(|x| family.avoid(x).map(|f| f.len()).unwrap_or(0))
                .min()
                .map(BigInt::from)
        }
        DiametralOverflow { u, .. } => {
            if family.diameter() <= u {
                diametral_overflow(family, u).ok().map(|r| r.value)
            } else {
                None
            }
        }
    }
}

/// Re-evaluates feasibility and value of the witness from scratch.
pub fn recheck(cert: &SearchCertificate) -> bool {
    match cert.objective() {
        Ok(obj) => obj.validate().is_ok() && evaluate(&obj, &cert.witness).as_ref() == Some(&cert.optimum),
        Err(_) => false,
    }
}

/// Certificate for a known family: a lower bound on the optimum, not a proof.
pub fn certify_lower_bound(objective: &Objective, witness: &SetFamily) -> Result<SearchCertificate> {
    objective.validate()?;
    let started = Instant::now();
    let optimum = evaluate(objective, witness).ok_or_else(|| {
        Error::Hypothesis(format!("witness violates the constraint of {}", objective.name()))
    })?;
    Ok(SearchCertificate {
        objective: objective.name().to_string(),
        params: objective.params(),
        optimum,
        witness: witness.clone(),
        proven_optimal: false,
        reduction: Reduction::None,
        nodes: 0,
        elapsed_ms: started.elapsed().as_millis() as u64,
        maximizers: 0,
    })
}
