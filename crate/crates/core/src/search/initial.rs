//! Depth-first search over initial complexes.
//!
//! Candidates are visited in `(size, bits)` order and each is included or
//! excluded. A candidate may only be included when its elementary `≺`
//! predecessors (and, for complexes, the set minus its least element) are
//! already in. Excluding a set kills everything above it, which is tracked
//! with reference counts so that branch bounds see the live candidates only.

use std::collections::HashMap;
use std::ops::RangeInclusive;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::bounds::{binom, walk_gap_bound, walk_skip_bound};
use crate::error::{Error, Result};
use crate::family::{k_subsets, SubsetMask};
use crate::transforms::elementary_predecessors;
use crate::walks::hits_line;

use super::{Metric, Outcome, Shared, Value};

const CANDIDATE_CAP: usize = 1 << 16;

pub(crate) struct Problem {
    pub n: usize,
    pub metric: Metric,
    pub value: Value,
    pub sizes: RangeInclusive<usize>,
    /// Layer `s` of a u-union family is `(2s - u)`-intersecting.
    pub walk_filter_u: usize,
    pub prune: bool,
}

pub(crate) struct Tables {
    cands: Vec<SubsetMask>,
    layer: Vec<usize>,
    preds: Vec<Vec<u32>>,
    succs: Vec<Vec<u32>>,
    base_cap: Vec<i64>,
    /// Per layer: a set whose absence caps the layer, and the cap.
    gap_caps: Vec<Vec<(u32, i64)>>,
    layer_len: Vec<i64>,
}

fn to_cap(v: num_bigint::BigInt) -> i64 {
    v.to_i64().unwrap_or(i64::MAX)
}

impl Tables {
    pub(crate) fn build(p: &Problem) -> Result<Tables> {
        let n = p.n;
        let u = p.walk_filter_u as i64;
        let lo = *p.sizes.start();
        let mut raw: Vec<SubsetMask> = Vec::new();
        for s in p.sizes.clone() {
            let t = 2 * s as i64 - u;
            for m in k_subsets(n, s) {
                if p.prune && t >= 1 && !hits_line(m, n, t) {
                    continue;
                }
                raw.push(m);
                if raw.len() > CANDIDATE_CAP {
                    return Err(Error::CapExceeded(format!(
                        "more than {CANDIDATE_CAP} candidate sets; lower n"
                    )));
                }
            }
        }

        // Drop candidates whose required predecessors are missing, then reindex.
        let mut index: HashMap<u64, u32> = HashMap::with_capacity(raw.len());
        let mut cands = Vec::with_capacity(raw.len());
        let mut preds = Vec::with_capacity(raw.len());
        for m in raw {
            let mut need: Vec<SubsetMask> = elementary_predecessors(m).collect();
            let s = m.cardinality();
            if s > lo {
                if let Some(x) = m.min_element() {
                    need.push(m.without(x));
                }
            }
            let found: Option<Vec<u32>> = need.iter().map(|q| index.get(&q.bits()).copied()).collect();
            if let Some(found) = found {
                index.insert(m.bits(), cands.len() as u32);
                cands.push(m);
                preds.push(found);
            }
        }
        let mut succs = vec![Vec::new(); cands.len()];
        for (i, ps) in preds.iter().enumerate() {
            for &q in ps {
                succs[q as usize].push(i as u32);
            }
        }
        let layers = p.sizes.clone().count();
        let layer: Vec<usize> = cands.iter().map(|m| m.cardinality() - lo).collect();
        let mut layer_len = vec![0i64; layers];
        for &l in &layer {
            layer_len[l] += 1;
        }

        let mut base_cap = vec![i64::MAX; layers];
        let mut gap_caps = vec![Vec::new(); layers];
        if p.prune {
            for s in p.sizes.clone() {
                let l = s - lo;
                let (ni, si) = (n as i64, s as i64);
                let t = 2 * si - u;
                if t >= 1 {
                    // t-intersecting layer: |F^(t+l)| <= C(n, l)
                    base_cap[l] = base_cap[l].min(to_cap(binom(ni, si - t)));
                }
                let mut blockers: Vec<(SubsetMask, i64)> = Vec::new();
                for q in 0..si {
                    let top = 2 * si - q;
                    if top <= ni {
                        let set = SubsetMask::full(q as usize)
                            .union(SubsetMask::from_elements((1..=si - q).map(|j| (q + 2 * j) as usize)));
                        blockers.push((set, to_cap(walk_gap_bound(ni, si, q)?)));
                    }
                }
                for q in 2..si {
                    if q + 2 * si - 2 <= ni {
                        let set = SubsetMask::from_elements((0..si).map(|j| (q + 2 * j) as usize));
                        blockers.push((set, to_cap(walk_skip_bound(ni, si, q)?)));
                    }
                }
                for (set, cap) in blockers {
                    match index.get(&set.bits()) {
                        Some(&g) => gap_caps[l].push((g, cap)),
                        None => base_cap[l] = base_cap[l].min(cap),
                    }
                }
            }
        }
        Ok(Tables { cands, layer, preds, succs, base_cap, gap_caps, layer_len })
    }

    pub(crate) fn len(&self) -> usize {
        self.cands.len()
    }
}

struct State<'a> {
    p: &'a Problem,
    t: &'a Tables,
    shared: &'a Shared,
    dead: Vec<u32>,
    included: Vec<bool>,
    inc: Vec<i64>,
    alive: Vec<i64>,
    trail: Vec<u32>,
    members: Vec<SubsetMask>,
    work: Vec<u32>,
    scratch: Vec<SubsetMask>,
    out: Outcome,
}

impl<'a> State<'a> {
    fn new(p: &'a Problem, t: &'a Tables, shared: &'a Shared) -> Self {
        State {
            p,
            t,
            shared,
            dead: vec![0; t.len()],
            included: vec![false; t.len()],
            inc: vec![0; t.layer_len.len()],
            alive: t.layer_len.clone(),
            trail: Vec::new(),
            members: Vec::new(),
            work: Vec::new(),
            scratch: Vec::new(),
            out: Outcome::empty(),
        }
    }

    fn bump(&mut self, j: usize) {
        self.dead[j] += 1;
        self.trail.push(j as u32);
        if self.dead[j] == 1 {
            self.alive[self.t.layer[j]] -= 1;
            self.work.push(j as u32);
        }
    }

    /// Everything above a dead or excluded set dies with it.
    fn propagate(&mut self) {
        let t = self.t;
        while let Some(x) = self.work.pop() {
            for &s in &t.succs[x as usize] {
                self.bump(s as usize);
            }
        }
    }

    fn decide(&mut self, idx: usize, include: bool) -> usize {
        let l = self.t.layer[idx];
        self.alive[l] -= 1;
        let mark = self.trail.len();
        let c = self.t.cands[idx];
        if include {
            self.included[idx] = true;
            self.inc[l] += 1;
            self.members.push(c);
            for j in idx + 1..self.t.len() {
                if !self.p.metric.compatible(c, self.t.cands[j]) {
                    self.bump(j);
                }
            }
        } else {
            self.work.push(idx as u32);
        }
        self.propagate();
        mark
    }

    fn revert(&mut self, idx: usize, include: bool, mark: usize) {
        while self.trail.len() > mark {
            let j = self.trail.pop().expect("trail above mark") as usize;
            self.dead[j] -= 1;
            if self.dead[j] == 0 {
                self.alive[self.t.layer[j]] += 1;
            }
        }
        if include {
            self.included[idx] = false;
            self.inc[self.t.layer[idx]] -= 1;
            self.members.pop();
        }
        self.alive[self.t.layer[idx]] += 1;
    }

    fn skip_dead(&self, mut idx: usize) -> usize {
        while idx < self.t.len() && self.dead[idx] > 0 {
            idx += 1;
        }
        idx
    }

    fn is_out(&self, g: usize, idx: usize) -> bool {
        self.dead[g] > 0 || (g < idx && !self.included[g])
    }

    /// Upper bound on the value of any completion of the current state.
    fn bound(&mut self, idx: usize) -> i64 {
        if self.p.value.additive() {
            let mut total = 0;
            for l in 0..self.inc.len() {
                let mut cap = self.t.base_cap[l];
                for &(g, c) in &self.t.gap_caps[l] {
                    if self.is_out(g as usize, idx) {
                        cap = cap.min(c);
                    }
                }
                total += cap.min(self.inc[l] + self.alive[l]);
            }
            total
        } else {
            self.scratch.clear();
            self.scratch.extend_from_slice(&self.members);
            for j in idx..self.t.len() {
                if self.dead[j] == 0 {
                    self.scratch.push(self.t.cands[j]);
                }
            }
            self.p.value.eval(self.p.n, &self.scratch)
        }
    }

    fn is_maximal(&self) -> bool {
        (0..self.t.len()).all(|j| {
            self.included[j]
                || !self.t.preds[j].iter().all(|&q| self.included[q as usize])
                || !self.members.iter().all(|&m| self.p.metric.compatible(m, self.t.cands[j]))
        })
    }

    fn leaf(&mut self) {
        let value = self.p.value.eval(self.p.n, &self.members);
        if value < self.shared.threshold(self.out.value) {
            return;
        }
        if !self.p.value.additive() && !self.is_maximal() {
            return;
        }
        let members = std::mem::take(&mut self.members);
        self.out.offer(self.shared, value, &members);
        self.members = members;
    }

    fn dfs(&mut self, idx: usize) {
        let idx = self.skip_dead(idx);
        if self.shared.tick(&mut self.out.nodes) {
            return;
        }
        if idx == self.t.len() {
            self.leaf();
            return;
        }
        if self.p.prune && self.bound(idx) < self.shared.threshold(self.out.value) {
            return;
        }
        for include in [true, false] {
            let mark = self.decide(idx, include);
            self.dfs(idx + 1);
            self.revert(idx, include, mark);
        }
    }

    fn frontier(&mut self, idx: usize, depth: usize, path: &mut Vec<bool>, acc: &mut Vec<Vec<bool>>) {
        let idx = self.skip_dead(idx);
        if depth == 0 || idx == self.t.len() {
            acc.push(path.clone());
            return;
        }
        for include in [true, false] {
            let mark = self.decide(idx, include);
            path.push(include);
            self.frontier(idx + 1, depth - 1, path, acc);
            path.pop();
            self.revert(idx, include, mark);
        }
    }

    fn replay(&mut self, path: &[bool]) -> usize {
        let mut idx = 0;
        for &include in path {
            idx = self.skip_dead(idx);
            self.decide(idx, include);
            idx += 1;
        }
        idx
    }
}

pub(crate) fn run(p: &Problem, t: &Tables, shared: &Shared, workers: usize) -> Outcome {
    let paths = if workers > 1 {
        let depth = (workers * 16).next_power_of_two().trailing_zeros() as usize;
        let mut acc = Vec::new();
        State::new(p, t, shared).frontier(0, depth, &mut Vec::new(), &mut acc);
        acc
    } else {
        vec![Vec::new()]
    };
    paths
        .par_iter()
        .map(|path| {
            let mut s = State::new(p, t, shared);
            let idx = s.replay(path);
            s.dfs(idx);
            s.out
        })
        .reduce(Outcome::empty, Outcome::merge)
}
