//! Exhaustive search over arbitrary families: Bron–Kerbosch enumeration of
//! maximal cliques in the compatibility graph, with pivoting.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::{k_subsets, SubsetMask};

use super::{Metric, Outcome, Shared, Value};

pub(crate) const VERTEX_CAP: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
struct Bits([u64; 4]);

impl Bits {
    fn set(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }
    fn clear(&mut self, i: usize) {
        self.0[i >> 6] &= !(1 << (i & 63));
    }
    fn and(self, o: Bits) -> Bits {
        Bits(std::array::from_fn(|k| self.0[k] & o.0[k]))
    }
    fn and_not(self, o: Bits) -> Bits {
        Bits(std::array::from_fn(|k| self.0[k] & !o.0[k]))
    }
    fn or(self, o: Bits) -> Bits {
        Bits(std::array::from_fn(|k| self.0[k] | o.0[k]))
    }
    fn count(self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_empty(self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn iter(self) -> impl Iterator<Item = usize> {
        (0..4).flat_map(move |k| {
            let mut w = self.0[k];
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let i = w.trailing_zeros() as usize;
                    w &= w - 1;
                    k * 64 + i
                })
            })
        })
    }
}

pub(crate) struct Graph {
    verts: Vec<SubsetMask>,
    adj: Vec<Bits>,
}

impl Graph {
    pub(crate) fn build(n: usize, sizes: RangeInclusive<usize>, metric: Metric) -> Result<Graph> {
        let verts: Vec<SubsetMask> = sizes
            .flat_map(|s| k_subsets(n, s))
            .filter(|&m| fits_alone(m, metric))
            .collect();
        if verts.len() > VERTEX_CAP {
            return Err(Error::CapExceeded(format!(
                "{} candidate sets exceed the exhaustive-search cap of {VERTEX_CAP}",
                verts.len()
            )));
        }
        let mut adj = vec![Bits::default(); verts.len()];
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if metric.compatible(verts[i], verts[j]) {
                    adj[i].set(j);
                    adj[j].set(i);
                }
            }
        }
        Ok(Graph { verts, adj })
    }
}

/// A u-union family only holds sets of size at most `u`.
fn fits_alone(m: SubsetMask, metric: Metric) -> bool {
    match metric {
        Metric::Union(u) => m.cardinality() <= u,
        Metric::SymDiff(_) => true,
    }
}

struct Search<'a> {
    g: &'a Graph,
    value: Value,
    n: usize,
    prune: bool,
    shared: &'a Shared,
    r: Vec<usize>,
    scratch: Vec<SubsetMask>,
    members: Vec<SubsetMask>,
    out: Outcome,
}

impl Search<'_> {
    fn bound(&mut self, p: Bits) -> i64 {
        if self.value.additive() {
            (self.r.len() + p.count()) as i64
        } else {
            self.scratch.clear();
            let verts = &self.g.verts;
            self.scratch.extend(self.r.iter().map(|&i| verts[i]));
            self.scratch.extend(p.iter().map(|i| verts[i]));
            self.value.eval(self.n, &self.scratch)
        }
    }

    fn pivot(&self, p: Bits, x: Bits) -> Option<usize> {
        p.or(x).iter().max_by_key(|&v| (p.and(self.g.adj[v]).count(), std::cmp::Reverse(v)))
    }

    fn expand(&mut self, mut p: Bits, mut x: Bits) {
        if self.shared.tick(&mut self.out.nodes) {
            return;
        }
        if p.is_empty() {
            if x.is_empty() {
                self.members.clear();
                self.members.extend(self.r.iter().map(|&i| self.g.verts[i]));
                let value = self.value.eval(self.n, &self.members);
                if value >= self.shared.threshold(self.out.value) {
                    let members = std::mem::take(&mut self.members);
                    self.out.offer(self.shared, value, &members);
                    self.members = members;
                }
            }
            return;
        }
        if self.prune && self.bound(p) < self.shared.threshold(self.out.value) {
            return;
        }
        let pivot = self.pivot(p, x).expect("p is nonempty");
        for v in p.and_not(self.g.adj[pivot]).iter().collect::<Vec<_>>() {
            self.r.push(v);
            self.expand(p.and(self.g.adj[v]), x.and(self.g.adj[v]));
            self.r.pop();
            p.clear(v);
            x.set(v);
        }
    }
}

pub(crate) fn run(g: &Graph, value: Value, n: usize, prune: bool, shared: &Shared) -> Outcome {
    let mut all = Bits::default();
    for i in 0..g.verts.len() {
        all.set(i);
    }
    let fresh = || Search {
        g,
        value,
        n,
        prune,
        shared,
        r: Vec::new(),
        scratch: Vec::new(),
        members: Vec::new(),
        out: Outcome::empty(),
    };
    if g.verts.is_empty() {
        let mut s = fresh();
        s.expand(all, Bits::default());
        return s.out;
    }
    // Split the root's branches across workers.
    let root = fresh();
    let pivot = root.pivot(all, Bits::default()).expect("graph is nonempty");
    let branches: Vec<usize> = all.and_not(g.adj[pivot]).iter().collect();
    branches
        .par_iter()
        .enumerate()
        .map(|(pos, &v)| {
            let mut before = Bits::default();
            for &w in &branches[..pos] {
                before.set(w);
            }
            let p = all.and_not(before).and(g.adj[v]);
            let x = before.and(g.adj[v]);
            let mut s = fresh();
            s.r.push(v);
            s.expand(p, x);
            s.out
        })
        .reduce(Outcome::empty, Outcome::merge)
}
