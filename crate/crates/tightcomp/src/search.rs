//! Backtracking over finite assignments with functional propagation.
//!
//! A problem is a set of variables, each with a finite domain, and a set of
//! edges `(source, target, table)`: once `source` holds value `v`, `target`
//! is forced to `table[v]`. Equivariance of maps between actions, the
//! cone/cocone conditions and the gap conditions all have this shape, so a
//! single engine serves every enumeration in the crate.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub(crate) const NONE: u32 = u32::MAX;

/// Default bound on the number of candidate states a search may visit.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// How enumerations are scheduled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    /// Splits the first branching variable across the rayon pool. Falls back
    /// to sequential when the crate is built without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub node_cap: usize,
    pub exec: Execution,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { node_cap: DEFAULT_NODE_CAP, exec: Execution::default() }
    }
}

impl Limits {
    pub fn with_cap(node_cap: usize) -> Self {
        Limits { node_cap, ..Limits::default() }
    }

    pub fn sequential(self) -> Self {
        Limits { exec: Execution::Sequential, ..self }
    }
}

pub(crate) struct Problem {
    pub domains: Vec<Vec<u32>>,
    pub edges: Vec<Vec<(u32, u32)>>,
    pub tables: Vec<Vec<u32>>,
    /// Variables sharing a group must take pairwise distinct values.
    pub distinct: Option<Vec<u32>>,
}

impl Problem {
    pub fn new(domains: Vec<Vec<u32>>) -> Self {
        let n = domains.len();
        Problem { domains, edges: vec![Vec::new(); n], tables: Vec::new(), distinct: None }
    }

    pub fn add_table(&mut self, table: Vec<u32>) -> u32 {
        self.tables.push(table);
        (self.tables.len() - 1) as u32
    }

    pub fn add_edge(&mut self, src: usize, dst: usize, table: u32) {
        self.edges[src].push((dst as u32, table));
    }

    pub fn solve_all(&self, limits: Limits) -> Result<Vec<Vec<u32>>> {
        let mut out = self.run(limits, None)?;
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn solve_first(&self, limits: Limits) -> Result<Option<Vec<u32>>> {
        let mut out = self.run(limits.sequential(), Some(1))?;
        Ok(out.pop())
    }

    fn run(&self, limits: Limits, max: Option<usize>) -> Result<Vec<Vec<u32>>> {
        let counter = AtomicUsize::new(0);
        let mut root = State::new(self);
        if self.domains.iter().any(|d| d.is_empty()) {
            return Ok(Vec::new());
        }
        if self.domains.is_empty() {
            return Ok(vec![Vec::new()]);
        }
        #[cfg(feature = "parallel")]
        {
            let first = 0usize;
            if limits.exec == Execution::Parallel && max.is_none() && self.domains[first].len() > 1 {
                use rayon::prelude::*;
                let parts: Vec<Result<Vec<Vec<u32>>>> = self.domains[first]
                    .par_iter()
                    .map(|&v| {
                        let mut st = State::new(self);
                        let mut out = Vec::new();
                        bump(&counter, limits.node_cap)?;
                        if st.assign(self, first, v) {
                            st.dfs(self, &counter, limits.node_cap, &mut out, None)?;
                        }
                        Ok(out)
                    })
                    .collect();
                let mut out = Vec::new();
                for p in parts {
                    out.extend(p?);
                }
                return Ok(out);
            }
        }
        let mut out = Vec::new();
        root.dfs(self, &counter, limits.node_cap, &mut out, max)?;
        Ok(out)
    }
}

fn bump(counter: &AtomicUsize, cap: usize) -> Result<()> {
    if counter.fetch_add(1, Ordering::Relaxed) >= cap {
        return Err(Error::SizeLimit(cap));
    }
    Ok(())
}

struct State {
    value: Vec<u32>,
    trail: Vec<u32>,
    member: Vec<Vec<bool>>,
    used: Vec<Vec<bool>>,
    queue: Vec<u32>,
}

impl State {
    fn new(p: &Problem) -> Self {
        let member = p
            .domains
            .iter()
            .map(|d| {
                let m = d.iter().copied().max().map_or(0, |m| m as usize + 1);
                let mut bits = vec![false; m];
                for &v in d {
                    bits[v as usize] = true;
                }
                bits
            })
            .collect();
        let used = match &p.distinct {
            None => Vec::new(),
            Some(groups) => {
                let ng = groups.iter().copied().max().map_or(0, |g| g as usize + 1);
                let mut width = vec![0usize; ng];
                for (var, &g) in groups.iter().enumerate() {
                    let m = p.domains[var].iter().copied().max().map_or(0, |m| m as usize + 1);
                    width[g as usize] = width[g as usize].max(m);
                }
                width.into_iter().map(|w| vec![false; w]).collect()
            }
        };
        State { value: vec![NONE; p.domains.len()], trail: Vec::new(), member, used, queue: Vec::new() }
    }

    fn set(&mut self, p: &Problem, var: usize, v: u32) -> bool {
        if (v as usize) >= self.member[var].len() || !self.member[var][v as usize] {
            return false;
        }
        if let Some(groups) = &p.distinct {
            let g = groups[var] as usize;
            if self.used[g][v as usize] {
                return false;
            }
            self.used[g][v as usize] = true;
        }
        self.value[var] = v;
        self.trail.push(var as u32);
        self.queue.push(var as u32);
        true
    }

    fn undo_to(&mut self, p: &Problem, mark: usize) {
        while self.trail.len() > mark {
            let var = self.trail.pop().unwrap() as usize;
            if let Some(groups) = &p.distinct {
                let g = groups[var] as usize;
                self.used[g][self.value[var] as usize] = false;
            }
            self.value[var] = NONE;
        }
    }

    /// Assigns and propagates; on conflict the state is left unchanged.
    fn assign(&mut self, p: &Problem, var: usize, v: u32) -> bool {
        let mark = self.trail.len();
        self.queue.clear();
        if !self.set(p, var, v) {
            self.undo_to(p, mark);
            return false;
        }
        while let Some(x) = self.queue.pop() {
            let val = self.value[x as usize];
            for &(t, tab) in &p.edges[x as usize] {
                let nv = p.tables[tab as usize][val as usize];
                if nv == NONE {
                    self.queue.clear();
                    self.undo_to(p, mark);
                    return false;
                }
                let cur = self.value[t as usize];
                if cur == NONE {
                    if !self.set(p, t as usize, nv) {
                        self.queue.clear();
                        self.undo_to(p, mark);
                        return false;
                    }
                } else if cur != nv {
                    self.queue.clear();
                    self.undo_to(p, mark);
                    return false;
                }
            }
        }
        true
    }

    fn dfs(
        &mut self,
        p: &Problem,
        counter: &AtomicUsize,
        cap: usize,
        out: &mut Vec<Vec<u32>>,
        max: Option<usize>,
    ) -> Result<()> {
        let Some(var) = self.value.iter().position(|&v| v == NONE) else {
            out.push(self.value.clone());
            return Ok(());
        };
        for &v in &p.domains[var] {
            if max.is_some_and(|m| out.len() >= m) {
                return Ok(());
            }
            bump(counter, cap)?;
            let mark = self.trail.len();
            if self.assign(p, var, v) {
                self.dfs(p, counter, cap, out, max)?;
                self.undo_to(p, mark);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unconstrained_product() {
        let p = Problem::new(vec![vec![0, 1], vec![0, 1, 2]]);
        assert_eq!(p.solve_all(Limits::default()).unwrap().len(), 6);
    }

    #[test]
    fn forced_values_propagate() {
        let mut p = Problem::new(vec![vec![0, 1, 2], vec![0, 1, 2]]);
        let t = p.add_table(vec![1, 2, NONE]);
        p.add_edge(0, 1, t);
        let sols = p.solve_all(Limits::default()).unwrap();
        assert_eq!(sols, vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn distinct_groups() {
        let mut p = Problem::new(vec![vec![0, 1, 2]; 3]);
        p.distinct = Some(vec![0, 0, 0]);
        assert_eq!(p.solve_all(Limits::default()).unwrap().len(), 6);
        assert!(p.solve_first(Limits::default()).unwrap().is_some());
    }

    #[test]
    fn cap_is_enforced() {
        let p = Problem::new(vec![vec![0, 1, 2, 3]; 8]);
        assert_eq!(p.solve_all(Limits::with_cap(100)), Err(Error::SizeLimit(100)));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let mut p = Problem::new(vec![vec![0, 1, 2]; 4]);
        let t = p.add_table(vec![0, 2, 1]);
        p.add_edge(1, 3, t);
        let a = p.solve_all(Limits::default().sequential()).unwrap();
        let b = p.solve_all(Limits { exec: Execution::Parallel, ..Limits::default() }).unwrap();
        assert_eq!(a, b);
    }
}
