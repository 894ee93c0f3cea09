use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use super::structure::{mu_gcd, validate_multinet, MultinetStructure};
use crate::arrgeo::{Arrangement, Lattice};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationOptions {
    pub k: usize,
    pub reduced_only: bool,
    pub max_mu: u32,
    /// When set, every subarrangement with at most this many lines is
    /// searched as a support; otherwise only the whole arrangement.
    pub max_support: Option<usize>,
    #[serde(skip)]
    pub time_budget: Option<Duration>,
}

impl EnumerationOptions {
    pub fn new(k: usize) -> Self {
        EnumerationOptions {
            k,
            reduced_only: false,
            max_mu: 4,
            max_support: None,
            time_budget: None,
        }
    }

    pub fn reduced(k: usize) -> Self {
        EnumerationOptions {
            reduced_only: true,
            ..Self::new(k)
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("multinet search supports k = 3 or 4, got {0}")]
    UnsupportedK(usize),
    #[error("search budget exceeded after {} multinets; results are incomplete", partial.len())]
    BudgetExceeded { partial: Vec<MultinetStructure> },
}

/// All multinets with `opts.k` classes within the declared bounds,
/// deduplicated up to class relabeling. Multiplicity functions are
/// normalized to gcd 1 (a common multiple of μ gives the same resonance
/// component and no new pencil).
pub fn enumerate_multinets(
    arr: &Arrangement,
    lattice: &Lattice,
    opts: &EnumerationOptions,
) -> Result<Vec<MultinetStructure>, EnumerationError> {
    if !(3..=4).contains(&opts.k) {
        return Err(EnumerationError::UnsupportedK(opts.k));
    }
    let d = arr.d();
    let deadline = opts.time_budget.map(|b| Instant::now() + b);
    let mut found = Vec::new();
    let supports: Vec<Vec<usize>> = match opts.max_support {
        None => vec![(0..d).collect()],
        Some(max) => subsets_up_to(d, max.min(d), opts.k + 1),
    };
    for support in supports {
        let mut search = Search::new(arr, lattice, &support, opts, deadline);
        let complete = search.run();
        found.extend(search.results);
        if !complete {
            found.sort();
            found.dedup();
            return Err(EnumerationError::BudgetExceeded { partial: found });
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

fn subsets_up_to(d: usize, max: usize, min: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << d) {
        let n = mask.count_ones() as usize;
        if n < min || n > max {
            continue;
        }
        out.push((0..d).filter(|i| mask >> i & 1 == 1).collect());
    }
    out.sort_by(|a: &Vec<usize>, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    out
}

struct Search<'a> {
    arr: &'a Arrangement,
    lattice: &'a Lattice,
    support: &'a [usize],
    k: usize,
    max_mu: u32,
    reduced_only: bool,
    deadline: Option<Instant>,
    nodes: u64,
    // Incidence restricted to the support, lines as support positions.
    points: Vec<Vec<usize>>,
    // Points containing the line at each support position.
    points_of: Vec<Vec<usize>>,
    assigned_at_point: Vec<usize>,
    // weight[point * k + class]
    weight: Vec<u32>,
    class_of: Vec<usize>,
    mu: Vec<u32>,
    used_classes: usize,
    results: Vec<MultinetStructure>,
}

impl<'a> Search<'a> {
    fn new(
        arr: &'a Arrangement,
        lattice: &'a Lattice,
        support: &'a [usize],
        opts: &EnumerationOptions,
        deadline: Option<Instant>,
    ) -> Self {
        let pos = |l: usize| support.binary_search(&l).unwrap();
        let points: Vec<Vec<usize>> = lattice
            .restricted_incidence(support)
            .into_iter()
            .map(|inc| inc.into_iter().map(pos).collect())
            .collect();
        let mut points_of = vec![Vec::new(); support.len()];
        for (x, inc) in points.iter().enumerate() {
            for &p in inc {
                points_of[p].push(x);
            }
        }
        let k = opts.k;
        Search {
            arr,
            lattice,
            support,
            k,
            max_mu: if opts.reduced_only { 1 } else { opts.max_mu.max(1) },
            reduced_only: opts.reduced_only,
            deadline,
            nodes: 0,
            assigned_at_point: vec![0; points.len()],
            weight: vec![0; points.len() * k],
            points,
            points_of,
            class_of: vec![usize::MAX; support.len()],
            mu: vec![0; support.len()],
            used_classes: 0,
            results: Vec::new(),
        }
    }

    /// Returns false if the deadline passed before the search finished.
    fn run(&mut self) -> bool {
        if self.support.len() < self.k {
            return true;
        }
        self.descend(0)
    }

    fn out_of_time(&mut self) -> bool {
        self.nodes += 1;
        if !self.nodes.is_multiple_of(4096) {
            return false;
        }
        self.deadline.is_some_and(|d| Instant::now() > d)
    }

    fn descend(&mut self, pos: usize) -> bool {
        if self.out_of_time() {
            return false;
        }
        if pos == self.support.len() {
            self.leaf();
            return true;
        }
        // Each unused class still needs at least one of the remaining lines.
        let remaining = self.support.len() - pos;
        if self.k - self.used_classes > remaining {
            return true;
        }
        let class_limit = (self.used_classes + 1).min(self.k);
        for class in 0..class_limit {
            for m in 1..=self.max_mu {
                let opened = class == self.used_classes;
                self.assign(pos, class, m);
                if opened {
                    self.used_classes += 1;
                }
                let ok = self.points_consistent(pos);
                let finished = !ok || self.descend(pos + 1);
                if opened {
                    self.used_classes -= 1;
                }
                self.unassign(pos, class, m);
                if !finished {
                    return false;
                }
            }
        }
        true
    }

    fn assign(&mut self, pos: usize, class: usize, m: u32) {
        self.class_of[pos] = class;
        self.mu[pos] = m;
        for &x in &self.points_of[pos] {
            self.assigned_at_point[x] += 1;
            self.weight[x * self.k + class] += m;
        }
    }

    fn unassign(&mut self, pos: usize, class: usize, m: u32) {
        for &x in &self.points_of[pos] {
            self.assigned_at_point[x] -= 1;
            self.weight[x * self.k + class] -= m;
        }
        self.class_of[pos] = usize::MAX;
        self.mu[pos] = 0;
    }

    /// Necessary conditions at every point through the line just assigned.
    fn points_consistent(&self, pos: usize) -> bool {
        self.points_of[pos].iter().all(|&x| {
            let w = &self.weight[x * self.k..(x + 1) * self.k];
            let present = w.iter().filter(|&&v| v > 0).count();
            if present < 2 {
                return true;
            }
            let remaining = self.points[x].len() - self.assigned_at_point[x];
            if remaining == 0 {
                return present == self.k && w.iter().all(|&v| v == w[0]);
            }
            let missing = self.k - present;
            let top = *w.iter().max().unwrap();
            let deficit: u32 = w.iter().map(|&v| top - v).sum();
            missing <= remaining && deficit <= remaining as u32 * self.max_mu
        })
    }

    fn leaf(&mut self) {
        if self.used_classes != self.k {
            return;
        }
        let mut classes = vec![Vec::new(); self.k];
        for (p, &c) in self.class_of.iter().enumerate() {
            classes[c].push(self.support[p]);
        }
        if self.reduced_only {
            let n = classes[0].len();
            if classes.iter().any(|c| c.len() != n) {
                return;
            }
        }
        let mu: Vec<(usize, u32)> = self
            .support
            .iter()
            .zip(&self.mu)
            .map(|(&l, &m)| (l, m))
            .collect();
        if let Ok(mn) = validate_multinet(self.arr, self.lattice, &classes, &mu) {
            if mu_gcd(&mn) == 1 {
                self.results.push(mn);
            }
        }
    }
}
