#![allow(dead_code)]

use tightcomp::action::{Action, Variance};
use tightcomp::fincat::{Mor, Obj};
use tightcomp::poset::FinPoset;

/// Every tuple in `domains[0] × domains[1] × …`, or `None` past `cap`.
pub fn product<T: Copy>(domains: &[Vec<T>], cap: usize) -> Option<Vec<Vec<T>>> {
    let total = domains.iter().try_fold(1usize, |acc, d| acc.checked_mul(d.len()))?;
    if total > cap {
        return None;
    }
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0; domains.len()];
    if domains.iter().any(|d| d.is_empty()) {
        return Some(out);
    }
    loop {
        out.push(idx.iter().enumerate().map(|(k, &i)| domains[k][i]).collect());
        let mut k = domains.len();
        loop {
            if k == 0 {
                return Some(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < domains[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Cocones (left) or cones (right) at `c` by filtering all candidate families.
pub fn brute_families(a: &Action, c: Obj) -> Option<Vec<Vec<Mor>>> {
    let cat = a.category();
    let domains: Vec<Vec<Mor>> = (0..a.total())
        .map(|e| {
            let (x, _) = a.unflat(e);
            match a.variance() {
                Variance::Left => cat.hom(x, c).to_vec(),
                Variance::Right => cat.hom(c, x).to_vec(),
            }
        })
        .collect();
    let all = product(&domains, 2_000_000)?;
    Some(
        all.into_iter()
            .filter(|m| {
                (0..cat.num_morphisms()).all(|f| {
                    let (d, k) = (cat.dom(f), cat.cod(f));
                    match a.variance() {
                        Variance::Left => (0..a.size(k)).all(|i| m[a.flat(d, a.act(f, i))] == cat.comp(f, m[a.flat(k, i)])),
                        Variance::Right => (0..a.size(d)).all(|i| m[a.flat(k, a.act(f, i))] == cat.comp(m[a.flat(d, i)], f)),
                    }
                })
            })
            .collect(),
    )
}

/// Fiber sizes of `ΛA` or `ΡB`.
pub fn brute_kan_sizes(a: &Action) -> Option<Vec<usize>> {
    (0..a.category().num_objects()).map(|c| brute_families(a, c).map(|v| v.len())).collect()
}

/// Explicit `ΛA` / `ΡB` as families per object, with the induced action.
pub struct BruteKan {
    pub fibers: Vec<Vec<Vec<Mor>>>,
    pub variance: Variance,
}

pub fn brute_kan(a: &Action) -> Option<BruteKan> {
    let fibers = (0..a.category().num_objects()).map(|c| brute_families(a, c)).collect::<Option<Vec<_>>>()?;
    Some(BruteKan { fibers, variance: a.variance().flip() })
}

impl BruteKan {
    /// Image of family `i` at `src` under `f`.
    pub fn act(&self, a: &Action, f: Mor, src: Obj, i: usize) -> usize {
        let cat = a.category();
        let moved: Vec<Mor> = self.fibers[src][i]
            .iter()
            .map(|&m| match self.variance {
                Variance::Right => cat.comp(m, f),
                Variance::Left => cat.comp(f, m),
            })
            .collect();
        let tgt = match self.variance {
            Variance::Right => cat.cod(f),
            Variance::Left => cat.dom(f),
        };
        self.fibers[tgt].iter().position(|v| *v == moved).expect("closed")
    }
}

/// Number of equivariant maps `a → k` for an explicit Kan action `k` over `base`.
pub fn brute_maps_into_kan(a: &Action, k: &BruteKan, base: &Action) -> Option<usize> {
    let cat = a.category();
    let domains: Vec<Vec<usize>> = (0..a.total()).map(|e| (0..k.fibers[a.unflat(e).0].len()).collect()).collect();
    let all = product(&domains, 2_000_000)?;
    Some(
        all.iter()
            .filter(|h| {
                (0..cat.num_morphisms()).all(|f| {
                    let (src, tgt) = (a.src_obj(f), a.tgt_obj(f));
                    (0..a.size(src)).all(|i| h[a.flat(tgt, a.act(f, i))] == k.act(base, f, src, h[a.flat(src, i)]))
                })
            })
            .count(),
    )
}

/// Number of gaps: bilinear tables `φ(s, u) ∈ hom(x_s, y_u)`, filled row by
/// row from the cones under `B` at each `x`.
pub fn brute_gap_count(a: &Action, b: &Action) -> Option<usize> {
    let rb = brute_kan(b)?;
    brute_maps_into_kan(a, &rb, b)
}

/// Cuts of `p` by scanning all subsets.
pub fn brute_dm(p: &FinPoset) -> Vec<Vec<bool>> {
    let n = p.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let l: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let ub: Vec<usize> = (0..n).filter(|&u| (0..n).all(|x| !l[x] || p.leq(x, u))).collect();
        let closed: Vec<bool> = (0..n).map(|x| ub.iter().all(|&u| p.leq(x, u))).collect();
        if closed == l {
            out.push(l);
        }
    }
    out
}

/// Whether two finite posets given by `≤` matrices are isomorphic, by permutation search.
pub fn brute_order_iso(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    fn go(k: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
        let n = a.len();
        if k == n {
            return true;
        }
        for t in 0..n {
            if used[t] {
                continue;
            }
            if (0..k).all(|j| a[k][j] == b[t][perm[j]] && a[j][k] == b[perm[j]][t]) && a[k][k] == b[t][t] {
                used[t] = true;
                perm.push(t);
                if go(k + 1, perm, used, a, b) {
                    return true;
                }
                perm.pop();
                used[t] = false;
            }
        }
        false
    }
    go(0, &mut Vec::new(), &mut vec![false; n], a, b)
}

pub fn leq_matrix(p: &FinPoset) -> Vec<Vec<bool>> {
    (0..p.len()).map(|x| (0..p.len()).map(|y| p.leq(x, y)).collect()).collect()
}

/// Inclusion order on a family of subsets.
pub fn inclusion_matrix(sets: &[Vec<bool>]) -> Vec<Vec<bool>> {
    sets.iter().map(|s| sets.iter().map(|t| s.iter().zip(t).all(|(&x, &y)| !x || y)).collect()).collect()
}
