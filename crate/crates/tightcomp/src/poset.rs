//! Finite posets, closures, and the Dedekind-MacNeille completion.

use std::collections::{HashMap, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::fincat::FinCategory;

#[derive(Clone, PartialEq, Eq)]
pub struct FinPoset {
    elements: Vec<String>,
    /// `up[x]` holds every `y` with `x ≤ y`.
    up: Vec<FixedBitSet>,
    /// `down[x]` holds every `y` with `y ≤ x`.
    down: Vec<FixedBitSet>,
}

impl fmt::Debug for FinPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinPoset{:?}", self.elements)?;
        let rel: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|x| self.up[x].ones().filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        write!(f, "{rel:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DownSet(pub FixedBitSet);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpSet(pub FixedBitSet);

/// A pair `(L, U)` with `U = ub(L)` and `L = lb(U)`.
#[derive(Clone, Debug, Eq)]
pub struct PosetCut {
    pub lower: DownSet,
    pub upper: UpSet,
}

impl PartialEq for PosetCut {
    fn eq(&self, other: &Self) -> bool {
        self.lower == other.lower
    }
}

impl std::hash::Hash for PosetCut {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.lower.hash(state);
    }
}

impl PosetCut {
    pub fn leq(&self, other: &PosetCut) -> bool {
        self.lower.0.is_subset(&other.lower.0)
    }

    fn key(&self) -> (usize, Vec<usize>) {
        (self.lower.0.count_ones(..), self.lower.0.ones().collect())
    }
}

/// Cuts in a linear extension of inclusion, and the embedding of each element.
#[derive(Clone, Debug)]
pub struct DmCompletion {
    pub cuts: Vec<PosetCut>,
    pub embedding: Vec<usize>,
}

impl DmCompletion {
    /// The cuts as a poset under inclusion of lower sets, named by index.
    pub fn as_poset(&self) -> FinPoset {
        let n = self.cuts.len();
        let names = (0..n).map(|i| format!("c{i}")).collect();
        let mut rel = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.cuts[i].leq(&self.cuts[j]) {
                    rel.push((i, j));
                }
            }
        }
        FinPoset::new(names, &rel).expect("inclusion is a partial order")
    }
}

impl FinPoset {
    /// Builds the reflexive-transitive closure of `relations` and checks antisymmetry.
    pub fn new(elements: Vec<String>, relations: &[(usize, usize)]) -> Result<FinPoset> {
        let n = elements.len();
        let mut seen = HashSet::new();
        for e in &elements {
            if !seen.insert(e) {
                return Err(Error::DuplicateId(e.clone()));
            }
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            row.insert(x);
        }
        for &(x, y) in relations {
            if x >= n || y >= n {
                return Err(Error::UnknownElement(format!("{}", x.max(y))));
            }
            up[x].insert(y);
        }
        // Warshall.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for x in 0..n {
            for y in up[x].ones() {
                if y != x && up[y].contains(x) {
                    return Err(Error::TypeMismatch(format!(
                        "relation is not antisymmetric on {} and {}",
                        elements[x], elements[y]
                    )));
                }
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            for y in up[x].ones() {
                down[y].insert(x);
            }
        }
        Ok(FinPoset { elements, up, down })
    }

    pub fn from_names(elements: Vec<String>, leq: &[(String, String)]) -> Result<FinPoset> {
        let idx: HashMap<&str, usize> = elements.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let find = |s: &str| idx.get(s).copied().ok_or_else(|| Error::UnknownElement(s.to_string()));
        let rel = leq.iter().map(|(a, b)| Ok((find(a)?, find(b)?))).collect::<Result<Vec<_>>>()?;
        FinPoset::new(elements.clone(), &rel)
    }

    pub fn chain(n: usize) -> FinPoset {
        let rel: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        FinPoset::new((0..n).map(|i| format!("x{i}")).collect(), &rel).unwrap()
    }

    pub fn antichain(n: usize) -> FinPoset {
        FinPoset::new((0..n).map(|i| format!("x{i}")).collect(), &[]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, x: usize) -> &str {
        &self.elements[x]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// Strict order pairs `x < y`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|x| self.up[x].ones().filter(move |&y| y != x).map(move |y| (x, y))).collect()
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    fn subset(&self, s: &[usize]) -> Result<FixedBitSet> {
        let mut b = self.empty_set();
        for &x in s {
            if x >= self.len() {
                return Err(Error::UnknownElement(x.to_string()));
            }
            b.insert(x);
        }
        Ok(b)
    }

    pub fn lower_closure(&self, s: &[usize]) -> Result<DownSet> {
        let b = self.subset(s)?;
        Ok(self.lower_closure_set(&b))
    }

    pub fn upper_closure(&self, s: &[usize]) -> Result<UpSet> {
        let b = self.subset(s)?;
        Ok(self.upper_closure_set(&b))
    }

    pub fn lower_closure_set(&self, s: &FixedBitSet) -> DownSet {
        let mut out = self.empty_set();
        for x in s.ones() {
            out.union_with(&self.down[x]);
        }
        DownSet(out)
    }

    pub fn upper_closure_set(&self, s: &FixedBitSet) -> UpSet {
        let mut out = self.empty_set();
        for x in s.ones() {
            out.union_with(&self.up[x]);
        }
        UpSet(out)
    }

    /// `{x | s ≤ x for all s ∈ l}`.
    pub fn upper_bounds(&self, l: &FixedBitSet) -> UpSet {
        let mut out = self.full_set();
        for s in l.ones() {
            out.intersect_with(&self.up[s]);
        }
        UpSet(out)
    }

    /// `{x | x ≤ u for all u ∈ u}`.
    pub fn lower_bounds(&self, u: &FixedBitSet) -> DownSet {
        let mut out = self.full_set();
        for s in u.ones() {
            out.intersect_with(&self.down[s]);
        }
        DownSet(out)
    }

    /// Least upper bound of two elements, when it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let mut ub = self.up[x].clone();
        ub.intersect_with(&self.up[y]);
        ub.ones().find(|&z| ub.is_subset(&self.up[z]))
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let mut lb = self.down[x].clone();
        lb.intersect_with(&self.down[y]);
        lb.ones().find(|&z| lb.is_subset(&self.down[z]))
    }

    /// Nonempty, with a least element and all binary joins.
    pub fn is_complete_lattice(&self) -> bool {
        let n = self.len();
        n > 0 && (0..n).any(|b| self.up[b].count_ones(..) == n) && (0..n).all(|x| (0..n).all(|y| self.join(x, y).is_some()))
    }

    pub fn cut_of_lower(&self, lower: &FixedBitSet) -> PosetCut {
        let upper = self.upper_bounds(lower);
        let lower = self.lower_bounds(&upper.0);
        PosetCut { lower, upper }
    }

    /// `⋈x = (↓x, ↑x)`.
    pub fn principal_cut(&self, x: usize) -> PosetCut {
        PosetCut { lower: DownSet(self.down[x].clone()), upper: UpSet(self.up[x].clone()) }
    }

    /// All cuts, as the closure of the whole poset under intersection with
    /// principal down-sets.
    pub fn dm_completion(&self) -> DmCompletion {
        let mut lowers: HashSet<FixedBitSet> = HashSet::new();
        let mut frontier = vec![self.full_set()];
        lowers.insert(self.full_set());
        while let Some(l) = frontier.pop() {
            for x in 0..self.len() {
                let mut m = l.clone();
                m.intersect_with(&self.down[x]);
                if lowers.insert(m.clone()) {
                    frontier.push(m);
                }
            }
        }
        let mut cuts: Vec<PosetCut> = lowers
            .into_iter()
            .map(|l| {
                let upper = self.upper_bounds(&l);
                PosetCut { lower: DownSet(l), upper }
            })
            .collect();
        cuts.sort_by_key(|c| c.key());
        let pos: HashMap<Vec<usize>, usize> =
            cuts.iter().enumerate().map(|(i, c)| (c.lower.0.ones().collect(), i)).collect();
        let embedding = (0..self.len()).map(|x| pos[&self.down[x].ones().collect::<Vec<_>>()]).collect();
        DmCompletion { cuts, embedding }
    }

    /// Join in the cut order: `U = ⋂ uppers`, `L = lb(U)`.
    pub fn cut_join(&self, cuts: &[PosetCut]) -> PosetCut {
        let mut u = self.full_set();
        for c in cuts {
            u.intersect_with(&c.upper.0);
        }
        let lower = self.lower_bounds(&u);
        let upper = self.upper_bounds(&lower.0);
        PosetCut { lower, upper }
    }

    /// Meet in the cut order: `L = ⋂ lowers`, `U = ub(L)`.
    pub fn cut_meet(&self, cuts: &[PosetCut]) -> PosetCut {
        let mut l = self.full_set();
        for c in cuts {
            l.intersect_with(&c.lower.0);
        }
        self.cut_of_lower(&l)
    }

    /// All cuts by scanning the powerset; refuses posets larger than `cap`.
    pub fn oracle_dm(&self, cap: usize) -> Result<Vec<PosetCut>> {
        let n = self.len();
        if n > cap || n >= usize::BITS as usize {
            return Err(Error::SizeLimit(cap));
        }
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let mut l = self.empty_set();
            for x in 0..n {
                if mask >> x & 1 == 1 {
                    l.insert(x);
                }
            }
            let u = self.upper_bounds(&l);
            if self.lower_bounds(&u.0).0 == l {
                out.push(PosetCut { lower: DownSet(l), upper: u });
            }
        }
        out.sort_by_key(|c| c.key());
        Ok(out)
    }

    /// Thin category with one morphism `x<=y` for each `x ≤ y`; identities come first.
    pub fn thin_category(&self) -> FinCategory {
        let n = self.len();
        let mut mors: Vec<(String, usize, usize)> =
            (0..n).map(|x| (crate::fincat::identity_name(&self.elements[x]), x, x)).collect();
        let mut index: HashMap<(usize, usize), usize> = (0..n).map(|x| ((x, x), x)).collect();
        for (x, y) in self.relations() {
            index.insert((x, y), mors.len());
            mors.push((format!("{}<={}", self.elements[x], self.elements[y]), x, y));
        }
        let ends: Vec<(usize, usize)> = mors.iter().map(|m| (m.1, m.2)).collect();
        FinCategory::assemble(self.elements.clone(), mors, (0..n).collect(), |f, g| {
            index.get(&(ends[f].0, ends[g].1)).copied()
        })
        .expect("thin category of a poset")
    }
}

/// An order isomorphism `p → q`, found by backtracking, if one exists.
pub fn order_isomorphism(p: &FinPoset, q: &FinPoset) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() {
        return None;
    }
    let sig = |r: &FinPoset, x: usize| (r.up[x].count_ones(..), r.down[x].count_ones(..));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        p: &FinPoset,
        q: &FinPoset,
        k: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sig: &dyn Fn(&FinPoset, usize) -> (usize, usize),
    ) -> bool {
        if k == p.len() {
            return true;
        }
        for y in 0..q.len() {
            if used[y] || sig(p, k) != sig(q, y) {
                continue;
            }
            let ok = (0..k).all(|i| p.leq(i, k) == q.leq(map[i], y) && p.leq(k, i) == q.leq(y, map[i]));
            if ok {
                map[k] = y;
                used[y] = true;
                if go(p, q, k + 1, map, used, sig) {
                    return true;
                }
                used[y] = false;
            }
        }
        false
    }
    go(p, q, 0, &mut map, &mut used, &sig).then_some(map)
}

/// All posets on `n` points up to isomorphism. Every poset has a linear
/// extension, so it suffices to scan relations compatible with index order.
pub fn enumerate_posets(n: usize) -> Vec<FinPoset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let perms = {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        permute(0, &mut cur, &mut out);
        out
    };
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let rel: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
        let p = FinPoset::new(names.clone(), &rel).expect("index-compatible relations are antisymmetric");
        if p.relations().len() != rel.len() {
            continue; // not transitively closed; its closure is reached by another mask
        }
        let code = perms
            .iter()
            .map(|perm| {
                let mut m = vec![false; n * n];
                for &(x, y) in &rel {
                    m[perm[x] * n + perm[y]] = true;
                }
                m
            })
            .min()
            .unwrap_or_default();
        if seen.insert(code) {
            out.push(p);
        }
    }
    out
}

fn permute(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(k + 1, cur, out);
        cur.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closures_on_a_chain() {
        let p = FinPoset::chain(3);
        assert_eq!(p.lower_closure(&[1]).unwrap().0.ones().collect::<Vec<_>>(), vec![0, 1]);
        assert!(p.lower_closure(&[]).unwrap().0.is_clear());
        assert!(matches!(p.lower_closure(&[7]), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn antichain_completion() {
        let p = FinPoset::antichain(2);
        let dm = p.dm_completion();
        assert_eq!(dm.cuts.len(), 4);
        let j = p.cut_join(&[p.principal_cut(0), p.principal_cut(1)]);
        assert_eq!(j.lower.0.count_ones(..), 2);
        assert_eq!(p.upper_bounds(&p.lower_closure(&[0]).unwrap().0).0.ones().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn empty_poset_has_one_cut() {
        let p = FinPoset::antichain(0);
        assert_eq!(p.dm_completion().cuts.len(), 1);
        assert_eq!(p.oracle_dm(10).unwrap().len(), 1);
    }

    #[test]
    fn crown_completion() {
        // ∅, {a}, {b}, {a,b}, {a,b,c}, {a,b,d} and everything.
        let p = FinPoset::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[(0, 2), (0, 3), (1, 2), (1, 3)],
        )
        .unwrap();
        assert_eq!(p.oracle_dm(8).unwrap().len(), 7);
        assert_eq!(p.dm_completion().cuts, p.oracle_dm(8).unwrap());
    }

    #[test]
    fn oracle_cap() {
        assert_eq!(FinPoset::chain(5).oracle_dm(4), Err(Error::SizeLimit(4)));
    }

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| enumerate_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16]);
    }

    #[test]
    fn cycle_is_rejected() {
        assert!(FinPoset::new(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn thin_category_of_chain() {
        let c = FinPoset::chain(3).thin_category();
        assert_eq!(c.num_morphisms(), 6);
        assert_eq!(c.composable_triples(), 15);
    }

    #[test]
    fn chain_completion_is_chain() {
        let p = FinPoset::chain(2);
        let dm = p.dm_completion();
        assert_eq!(dm.cuts.len(), 2);
        assert!(order_isomorphism(&dm.as_poset(), &p).is_some());
    }
}
