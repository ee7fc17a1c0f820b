//! The acceptance suite: eleven criteria over generated corpora, plus golden
//! files that pin the output of the subcommands.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tightcomp::action::{
    diagram_colimit, enumerate_actions, equivariant_maps, find_isomorphism, loose_colimit, yoneda_left, yoneda_right,
    EquivariantMap, Variance,
};
use tightcomp::cuts::{
    absolute_to_simple, check_absolute_cut, check_full_cut, check_simple_cut, cut_coalgebra_of, cut_homs,
    enumerate_cuts, full_to_simple, simple_to_absolute, simple_to_full, CutCoalgebra,
};
use tightcomp::fincat::{comprehensive_factorization, Cat, Functor};
use tightcomp::groups::{
    group_lan, kleisli_compose, monoid_lan, z4_demo, FinMonoid, GAction, KleisliMorphism,
};
use tightcomp::isbell::{check_triangle, gap_from_lower, gap_from_upper, gap_transpose, gaps_enumerate, lan, ran};
use tightcomp::poset::{enumerate_posets, order_isomorphism, DmCompletion, FinPoset};
use tightcomp::tight::{
    certify_tight_colimit, check_tight_diagram, embed_object, fixed_cocones, enumerate_tight_diagrams, representable_generation_check,
    tight_colimit, tight_colimit_via_split, tight_preservation_check, LeftTightDiagram,
};
use tightcomp::{samples, Error, Limits, Result};

use crate::cli::Cli;
use clap::Parser;

pub const DEFAULT_SEED: u64 = 0x7167_6874;
pub const DEFAULT_RANDOM_POSETS: usize = 200;

/// Wall-clock budget per criterion in milliseconds, where one is set.
pub const BUDGETS_MS: [Option<u128>; 11] = [
    Some(30_000),
    Some(30_000),
    None,
    Some(120_000),
    Some(60_000),
    None,
    Some(120_000),
    Some(120_000),
    None,
    Some(60_000),
    None,
];

pub const NAMES: [&str; 11] = [
    "completion matches subset oracle",
    "completion is idempotent",
    "embedding keeps binary meets and joins",
    "isbell adjunction counts and identities",
    "z4 closed forms",
    "kan extensions of representables",
    "cut round trips",
    "tight colimits",
    "comprehensive factorization colimits",
    "group and generic extensions agree",
    "embedding is full and faithful and preserves tight colimits",
];

#[derive(Clone, Debug)]
pub struct CorpusConfig {
    pub seed: u64,
    pub random_posets: usize,
    pub corpus: Option<PathBuf>,
    pub only: Vec<usize>,
    pub golden_only: bool,
    pub bless: bool,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig { seed: DEFAULT_SEED, random_posets: DEFAULT_RANDOM_POSETS, corpus: None, only: Vec::new(), golden_only: false, bless: false }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub verdict: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub budget_ms: Option<u128>,
}

impl CriterionResult {
    pub fn within_budget(&self) -> bool {
        self.budget_ms.map_or(true, |b| self.elapsed_ms <= b)
    }

    pub fn pass(&self) -> bool {
        self.verdict && self.within_budget()
    }

    pub fn line(&self) -> String {
        let budget = match self.budget_ms {
            Some(b) => format!(" / {b} ms"),
            None => String::new(),
        };
        let status = if self.pass() { "PASS" } else { "FAIL" };
        let over = if self.within_budget() { "" } else { " over budget" };
        format!("criterion {:>2} {status} ({} ms{budget}{over}) {}: {}", self.id, self.elapsed_ms, self.name, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct GoldenResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Summary {
    pub criteria: Vec<CriterionResult>,
    pub golden: Vec<GoldenResult>,
}

impl Summary {
    pub fn pass(&self) -> bool {
        self.criteria.iter().all(CriterionResult::pass) && self.golden.iter().all(|g| g.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": "corpus_verify",
            "criteria": self.criteria.iter().map(|c| json!({
                "id": c.id,
                "name": c.name,
                "pass": c.pass(),
                "detail": c.detail,
                "elapsed_ms": c.elapsed_ms as u64,
                "budget_ms": c.budget_ms.map(|b| b as u64),
            })).collect::<Vec<_>>(),
            "golden": self.golden.iter().map(|g| json!({"name": g.name, "pass": g.pass, "detail": g.detail})).collect::<Vec<_>>(),
        })
    }
}

pub fn bundled_corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn verify(cfg: &CorpusConfig, limits: Limits) -> Summary {
    let mut s = Summary::default();
    for id in 1..=11 {
        if !cfg.golden_only && (cfg.only.is_empty() || cfg.only.contains(&id)) {
            let r = run_criterion(id, cfg, limits);
            eprintln!("{}", r.line());
            s.criteria.push(r);
        }
    }
    if cfg.only.is_empty() {
        let dir = cfg.corpus.clone().unwrap_or_else(bundled_corpus);
        s.golden = golden(&dir, cfg.bless, limits);
        for g in &s.golden {
            eprintln!("golden {} {}: {}", if g.pass { "PASS" } else { "FAIL" }, g.name, g.detail);
        }
    }
    s
}

pub fn run_criterion(id: usize, cfg: &CorpusConfig, l: Limits) -> CriterionResult {
    let start = Instant::now();
    let out = match id {
        1 => c1_oracle(cfg),
        2 => c2_idempotence(cfg),
        3 => c3_embedding(cfg),
        4 => c4_isbell(l),
        5 => c5_z4(l),
        6 => c6_yoneda(l),
        7 => c7_cuts(l),
        8 => c8_tight(l),
        9 => c9_factorization(l),
        10 => c10_groups(cfg, l),
        11 => c11_embedding(l),
        _ => Err(Error::UnknownReference(format!("criterion {id}"))),
    };
    let (verdict, detail) = match out {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("{}: {e}", e.kind())),
    };
    CriterionResult {
        id,
        name: NAMES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"),
        verdict,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
        budget_ms: BUDGETS_MS.get(id.wrapping_sub(1)).copied().flatten(),
    }
}

/// `Ok(Ok(summary))` on success, `Ok(Err(first counterexample))` on a failed check.
type Outcome = Result<std::result::Result<String, String>>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Ok(Err(format!($($arg)*)));
        }
    };
}

/// A random poset: each pair `i < j` is related with probability 1/3 before closure.
pub fn random_poset(rng: &mut ChaCha8Rng, max: usize) -> FinPoset {
    let n = rng.gen_range(1..=max);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_ratio(1, 3) {
                rel.push((perm[i], perm[j]));
            }
        }
    }
    FinPoset::new((0..n).map(|i| format!("p{i}")).collect(), &rel).expect("index order is acyclic")
}

/// Every poset with at most four elements up to isomorphism, then random ones with at most seven.
pub fn poset_corpus(cfg: &CorpusConfig) -> Vec<FinPoset> {
    let mut out: Vec<FinPoset> = (1..=4).flat_map(enumerate_posets).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    out.extend((0..cfg.random_posets).map(|_| random_poset(&mut rng, 7)));
    out
}

fn oracle_poset(p: &FinPoset) -> Result<FinPoset> {
    Ok(DmCompletion { cuts: p.oracle_dm(16)?, embedding: Vec::new() }.as_poset())
}

fn c1_oracle(cfg: &CorpusConfig) -> Outcome {
    let corpus = poset_corpus(cfg);
    for (i, p) in corpus.iter().enumerate() {
        let dm = p.dm_completion().as_poset();
        let oracle = oracle_poset(p)?;
        ensure!(order_isomorphism(&dm, &oracle).is_some(), "poset #{i} with {} elements", p.len());
    }
    Ok(Ok(format!("{} posets", corpus.len())))
}

fn c2_idempotence(cfg: &CorpusConfig) -> Outcome {
    let corpus = poset_corpus(cfg);
    for (i, p) in corpus.iter().enumerate() {
        let once = p.dm_completion().as_poset();
        let twice = once.dm_completion().as_poset();
        ensure!(order_isomorphism(&once, &twice).is_some(), "poset #{i}");
    }
    Ok(Ok(format!("{} posets", corpus.len())))
}

fn c3_embedding(cfg: &CorpusConfig) -> Outcome {
    let corpus = poset_corpus(cfg);
    let mut checked = 0;
    for (i, p) in corpus.iter().enumerate() {
        let dm = p.dm_completion();
        let principal = |x: usize| &dm.cuts[dm.embedding[x]];
        for x in 0..p.len() {
            for y in 0..p.len() {
                if let Some(j) = p.join(x, y) {
                    ensure!(p.cut_join(&[principal(x).clone(), principal(y).clone()]) == *principal(j), "join in poset #{i}");
                    checked += 1;
                }
                if let Some(m) = p.meet(x, y) {
                    ensure!(p.cut_meet(&[principal(x).clone(), principal(y).clone()]) == *principal(m), "meet in poset #{i}");
                    checked += 1;
                }
            }
        }
    }
    Ok(Ok(format!("{checked} meets and joins over {} posets", corpus.len())))
}

fn c4_isbell(l: Limits) -> Outcome {
    let (mut pairs, mut actions) = (0, 0);
    for (name, c) in samples::small_categories() {
        let lefts = enumerate_actions(&c, Variance::Left, 3, l)?;
        let rights = enumerate_actions(&c, Variance::Right, 3, l)?;
        actions += lefts.len() + rights.len();
        for a in &lefts {
            let la = &lan(a, l)?;
            let r = check_triangle(a, l)?;
            ensure!(r.pass(), "{name}: left triangle {r}");
            for b in &rights {
                let rb = ran(b, l)?;
                let gaps = gaps_enumerate(a, b, l)?;
                let lower = equivariant_maps(a, &rb.action, l)?.len();
                let upper = equivariant_maps(b, &la.action, l)?.len();
                ensure!(gaps.len() == lower && lower == upper, "{name}: counts {} {lower} {upper}", gaps.len());
                for g in &gaps {
                    let (lo, up) = gap_transpose(g, &rb, la);
                    ensure!(gap_from_lower(a, &rb, &lo).phi == g.phi, "{name}: lower transpose round trip");
                    ensure!(gap_from_upper(b, la, &up).phi == g.phi, "{name}: upper transpose round trip");
                }
                pairs += 1;
            }
        }
        for b in &rights {
            let r = check_triangle(b, l)?;
            ensure!(r.pass(), "{name}: right triangle {r}");
        }
    }
    Ok(Ok(format!("{actions} actions, {pairs} pairs")))
}

fn c5_z4(l: Limits) -> Outcome {
    let d = z4_demo(l)?;
    for r in &d.free_rows {
        ensure!(r.lan_size == r.expected_size && r.lan_orbits == r.expected_orbits, "{} orbits: {} elements in {} orbits", r.orbits, r.lan_size, r.lan_orbits);
    }
    ensure!(d.non_free_lan_empty, "a non-free action has a nonempty extension");
    ensure!(d.non_free_square_terminal, "a non-free action has a non-terminal square");
    ensure!(d.pass(), "left and right actions do not correspond");
    Ok(Ok(format!("{} non-free actions", d.non_free_checked)))
}

/// The small categories, the thin categories of the lattices, and ℤ₄.
pub fn category_corpus() -> Vec<(String, Cat)> {
    let mut out: Vec<(String, Cat)> = samples::small_categories().into_iter().map(|(n, c)| (n.to_string(), c)).collect();
    out.extend(samples::lattices().into_iter().map(|(n, p)| (n.to_string(), Arc::new(p.thin_category()))));
    out.push(("z4".into(), samples::cyclic(4)));
    out
}

fn c6_yoneda(l: Limits) -> Outcome {
    let mut n = 0;
    for (name, c) in category_corpus() {
        for x in 0..c.num_objects() {
            let nabla = yoneda_left(&c, x)?;
            let delta = yoneda_right(&c, x)?;
            ensure!(find_isomorphism(&lan(&nabla, l)?.action, &delta, l)?.is_some(), "{name}: left at {}", c.object_name(x));
            ensure!(find_isomorphism(&ran(&delta, l)?.action, &nabla, l)?.is_some(), "{name}: right at {}", c.object_name(x));
            n += 1;
        }
    }
    Ok(Ok(format!("{n} objects")))
}

/// Lattices with fibers capped at one, and ℤ₄ with fibers capped at four.
fn cut_corpus() -> Vec<(String, Cat, usize)> {
    let mut out: Vec<(String, Cat, usize)> =
        samples::lattices().into_iter().map(|(n, p)| (n.to_string(), Arc::new(p.thin_category()) as Cat, 1)).collect();
    out.push(("z4".into(), samples::cyclic(4), 4));
    out
}

fn c7_cuts(l: Limits) -> Outcome {
    let mut n = 0;
    for (name, c, cap) in cut_corpus() {
        for abs in enumerate_cuts(&c, cap, l)? {
            let s = absolute_to_simple(&abs, l)?;
            ensure!(check_simple_cut(&s, l)?.pass(), "{name}: simple cut fails its check");
            ensure!(simple_to_absolute(&s, l)? == abs, "{name}: absolute round trip");
            let f = simple_to_full(&s, l)?;
            ensure!(full_to_simple(&f) == s, "{name}: full round trip");
            let fc = check_full_cut(&f, l)?;
            ensure!(fc.report.pass(), "{name}: full cut {}", fc.report);
            ensure!(fc.eq71 == fc.eq72, "{name}: coherence pairs disagree");
            ensure!(check_absolute_cut(&abs, l)?.pass(), "{name}: absolute cut fails its check");
            n += 1;
        }
    }
    Ok(Ok(format!("{n} cuts")))
}

fn c8_tight(l: Limits) -> Outcome {
    // (a) representables.
    let mut reps = 0;
    for (name, c) in category_corpus() {
        for x in 0..c.num_objects() {
            let d = LeftTightDiagram::representable(&c, x, l)?;
            let t = tight_colimit(&d, l)?;
            ensure!(t.as_ref().is_some_and(|t| t.0 == x), "{name}: representable at {}", c.object_name(x));
            ensure!(certify_tight_colimit(&d, t.as_ref().unwrap(), l)?, "{name}: certificate");
            reps += 1;
        }
    }
    // (b) lattices.
    let mut lattice_diagrams = 0;
    for (name, p) in samples::lattices() {
        let c: Cat = Arc::new(p.thin_category());
        for d in enumerate_tight_diagrams(&c, 1, l)? {
            let t = tight_colimit(&d, l)?;
            ensure!(t.is_some(), "{name}: missing tight colimit");
            ensure!(Some(tight_colimit_via_split(&d, l)?) == t, "{name}: split path disagrees");
            lattice_diagrams += 1;
        }
    }
    // (c) two free orbits over ℤ₄.
    let g = FinMonoid::cyclic(4);
    let z4 = samples::cyclic(4);
    let free2 = GAction::free(&g, Variance::Left, 2).to_action(&z4)?;
    let phi = EquivariantMap::identity(&lan(&free2, l)?.action);
    let d = LeftTightDiagram { diagram: free2, phi };
    // The identity does not split on eight points, so the diagram is searched unchecked.
    ensure!(matches!(check_tight_diagram(&d, l), Err(Error::SplitMismatch(_))), "z4: identity on two free orbits splits");
    ensure!(fixed_cocones(&d, 0, l)?.len() == 16, "z4: expected 16 fixed cocones");
    ensure!(tight_colimit(&d, l)?.is_none(), "z4: two free orbits have a tight colimit");
    // (d) cuts are generated by representables.
    let mut cuts = 0;
    for (name, c, cap) in cut_corpus() {
        let all = enumerate_cuts(&c, cap, l)?;
        let tests: Vec<CutCoalgebra> = all.iter().map(cut_coalgebra_of).collect();
        for cut in &all {
            let r = representable_generation_check(cut, &tests, l)?;
            ensure!(r.pass(), "{name}: {r}");
            cuts += 1;
        }
    }
    Ok(Ok(format!("{reps} representables, {lattice_diagrams} lattice diagrams, {cuts} cuts")))
}

/// Monotone maps `shape → target`, as functors between thin categories.
fn monotone_functors(shape: &FinPoset, target: &FinPoset, sc: &Cat, tc: &Cat) -> Vec<Functor> {
    let (n, m) = (shape.len(), target.len());
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    'outer: loop {
        let monotone =
            (0..n).all(|x| (0..n).all(|y| !shape.leq(x, y) || target.leq(f[x], f[y])));
        if monotone {
            let mor_map = (0..sc.num_morphisms()).map(|u| tc.hom(f[sc.dom(u)], f[sc.cod(u)])[0]).collect();
            out.push(Functor { source: sc.clone(), target: tc.clone(), obj_map: f.clone(), mor_map });
        }
        for slot in f.iter_mut() {
            *slot += 1;
            if *slot < m {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    out
}

fn least_upper_bound(p: &FinPoset, xs: &[usize]) -> Option<usize> {
    (0..p.len()).find(|&u| xs.iter().all(|&x| p.leq(x, u)) && (0..p.len()).all(|v| !xs.iter().all(|&x| p.leq(x, v)) || p.leq(u, v)))
}

fn c9_factorization(l: Limits) -> Outcome {
    let mut n = 0;
    let shapes: Vec<FinPoset> = (1..=4).flat_map(enumerate_posets).collect();
    for (name, lat) in samples::lattices() {
        let tc: Cat = Arc::new(lat.thin_category());
        for s in &shapes {
            let sc: Cat = Arc::new(s.thin_category());
            for d in monotone_functors(s, &lat, &sc, &tc) {
                let direct = diagram_colimit(&d, l)?.map(|t| t.0);
                let (left, _) = comprehensive_factorization(&d);
                let via = loose_colimit(&left, l)?.map(|t| t.0);
                let join = least_upper_bound(&lat, &d.obj_map);
                ensure!(direct == via && via == join, "{name}: image {:?}: {direct:?} {via:?} {join:?}", d.obj_map);
                n += 1;
            }
        }
    }
    Ok(Ok(format!("{n} diagrams")))
}

/// Every left action of a cyclic group with at most `max` points, as disjoint unions of coset actions.
pub fn cyclic_group_actions(g: &FinMonoid, max: usize) -> Vec<GAction> {
    let n = g.len();
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(orbs) = stack.pop() {
        let size: usize = orbs.iter().sum();
        if size > 0 {
            let mut act = vec![vec![0; size]; n];
            let mut base = 0;
            for &d in &orbs {
                for (a, row) in act.iter_mut().enumerate() {
                    for x in 0..d {
                        row[base + x] = base + (x + a) % d;
                    }
                }
                base += d;
            }
            out.push(GAction::new(g.clone(), Variance::Left, size, act).expect("coset action"));
        }
        for &d in &divisors {
            if size + d <= max && orbs.last().is_none_or(|&last| d >= last) {
                let mut next = orbs.clone();
                next.push(d);
                stack.push(next);
            }
        }
    }
    out
}

/// Groups of order at most six.
pub fn small_groups() -> Vec<FinMonoid> {
    let mut out: Vec<FinMonoid> = (1..=6).map(FinMonoid::cyclic).collect();
    let klein = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    out.push(FinMonoid::new(["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect(), 0, klein).expect("klein group"));
    out.push(FinMonoid::symmetric3());
    out
}

/// Kleisli composite through `G × -` spelled out on pairs: `μ ∘ T(m2) ∘ m1`.
fn compose_via_monad(g: &FinMonoid, m1: &KleisliMorphism, m2: &KleisliMorphism) -> KleisliMorphism {
    let pairs: Vec<(usize, usize)> = (0..m1.source)
        .map(|x| {
            let (a, y) = (m1.alpha[x], m1.f[x]);
            let (b, z) = (m2.alpha[y], m2.f[y]);
            (g.op(a, b), z)
        })
        .collect();
    KleisliMorphism {
        source: m1.source,
        target: m2.target,
        f: pairs.iter().map(|p| p.1).collect(),
        alpha: pairs.iter().map(|p| p.0).collect(),
    }
}

fn random_kleisli(rng: &mut ChaCha8Rng, g: &FinMonoid, n: usize, m: usize) -> KleisliMorphism {
    KleisliMorphism {
        source: n,
        target: m,
        f: (0..n).map(|_| rng.gen_range(0..m)).collect(),
        alpha: (0..n).map(|_| rng.gen_range(0..g.len())).collect(),
    }
}

pub const KLEISLI_TRIPLES: usize = 1000;

fn c10_groups(cfg: &CorpusConfig, l: Limits) -> Outcome {
    let mut actions = 0;
    for n in 2..=4 {
        let g = FinMonoid::cyclic(n);
        let cat = g.category("*")?;
        for x in cyclic_group_actions(&g, 8) {
            let a = x.to_action(&cat)?;
            let ours = group_lan(&x)?.to_action(&cat)?;
            ensure!(find_isomorphism(&ours, &lan(&a, l)?.action, l)?.is_some(), "z{n}: {} points", x.size);
            let (_, ml) = monoid_lan(&x, l)?;
            ensure!(find_isomorphism(&ml.to_action(&cat)?, &ours, l)?.is_some(), "z{n}: monoid path, {} points", x.size);
            actions += 1;
        }
    }
    let groups = small_groups();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6b6c);
    for t in 0..KLEISLI_TRIPLES {
        let g = &groups[rng.gen_range(0..groups.len())];
        let dims: Vec<usize> = (0..4).map(|_| rng.gen_range(1..=4)).collect();
        let m1 = random_kleisli(&mut rng, g, dims[0], dims[1]);
        let m2 = random_kleisli(&mut rng, g, dims[1], dims[2]);
        let m3 = random_kleisli(&mut rng, g, dims[2], dims[3]);
        let m12 = kleisli_compose(g, &m1, &m2)?;
        ensure!(m12 == compose_via_monad(g, &m1, &m2), "triple {t}: composite differs from the monad path");
        let left = kleisli_compose(g, &m12, &m3)?;
        let right = kleisli_compose(g, &m1, &kleisli_compose(g, &m2, &m3)?)?;
        ensure!(left == right, "triple {t}: associativity");
        ensure!(kleisli_compose(g, &KleisliMorphism::identity(g, dims[0]), &m1)? == m1, "triple {t}: left unit");
        ensure!(kleisli_compose(g, &m1, &KleisliMorphism::identity(g, dims[1]))? == m1, "triple {t}: right unit");
    }
    Ok(Ok(format!("{actions} actions, {KLEISLI_TRIPLES} triples")))
}

fn c11_embedding(l: Limits) -> Outcome {
    let mut pairs = 0;
    for (name, c) in category_corpus() {
        let cuts: Vec<_> = (0..c.num_objects()).map(|x| embed_object(&c, x, l)).collect::<Result<_>>()?;
        for x in 0..c.num_objects() {
            for y in 0..c.num_objects() {
                let homs = cut_homs(&cuts[x], &cuts[y], l)?.len();
                ensure!(homs == c.hom(x, y).len(), "{name}: {} homs from {} to {}", homs, c.object_name(x), c.object_name(y));
                pairs += 1;
            }
        }
    }
    // Lattices, and completions of every poset with at most three elements.
    let mut lats: Vec<(String, FinPoset)> = samples::lattices().into_iter().map(|(n, p)| (n.to_string(), p)).collect();
    for n in 1..=3 {
        for (i, p) in enumerate_posets(n).into_iter().enumerate() {
            lats.push((format!("dm(poset {n}.{i})"), p.dm_completion().as_poset()));
        }
    }
    let mut diagrams = 0;
    for (name, p) in lats {
        let c: Cat = Arc::new(p.thin_category());
        let tests: Vec<CutCoalgebra> = enumerate_cuts(&c, 1, l)?.iter().map(cut_coalgebra_of).collect();
        for d in enumerate_tight_diagrams(&c, 1, l)? {
            let r = tight_preservation_check(&c, &d, &tests, l)?;
            ensure!(r.pass(), "{name}: {r}");
            diagrams += 1;
        }
    }
    Ok(Ok(format!("{pairs} hom counts, {diagrams} preserved colimits")))
}

/// Runs every case of `manifest.json` and compares with the stored output.
pub fn golden(dir: &Path, bless: bool, limits: Limits) -> Vec<GoldenResult> {
    let fail = |name: &str, detail: String| vec![GoldenResult { name: name.to_string(), pass: false, detail }];
    let manifest = dir.join("manifest.json");
    let text = match std::fs::read_to_string(&manifest) {
        Ok(t) => t,
        Err(e) => return fail("manifest", format!("{}: {e}", manifest.display())),
    };
    let doc: Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return fail("manifest", e.to_string()),
    };
    let cases = doc.get("cases").and_then(Value::as_array).cloned().unwrap_or_default();
    cases.iter().map(|case| golden_case(dir, case, bless, limits)).collect()
}

fn golden_case(dir: &Path, case: &Value, bless: bool, limits: Limits) -> GoldenResult {
    let name = case.get("name").and_then(Value::as_str).unwrap_or("?").to_string();
    let result = |pass: bool, detail: String| GoldenResult { name: name.clone(), pass, detail };
    let args: Vec<String> = case
        .get("args")
        .and_then(Value::as_array)
        .map(|a| a.iter().filter_map(Value::as_str).map(str::to_string).collect())
        .unwrap_or_default();
    let files: Vec<String> = args
        .iter()
        .map(|a| if a.ends_with(".json") || a.contains(".json#") { dir.join(a).to_string_lossy().into_owned() } else { a.clone() })
        .collect();
    let cli = match Cli::try_parse_from(std::iter::once("tightcomp".to_string()).chain(files)) {
        Ok(c) => c,
        Err(e) => return result(false, format!("bad arguments: {e}")),
    };
    let out = crate::commands::run(&cli.command(), limits);
    let want_exit = case.get("exit").and_then(Value::as_i64).unwrap_or(0) as i32;
    let expected_path = dir.join(case.get("expect").and_then(Value::as_str).unwrap_or(""));
    if bless {
        let text = serde_json::to_string_pretty(&out.value).unwrap_or_default() + "\n";
        return match std::fs::write(&expected_path, text) {
            Ok(()) => result(out.code == want_exit, format!("wrote {}", expected_path.display())),
            Err(e) => result(false, e.to_string()),
        };
    }
    if out.code != want_exit {
        return result(false, format!("exit {} instead of {want_exit}", out.code));
    }
    let expected: Value = match std::fs::read_to_string(&expected_path).map_err(|e| e.to_string()).and_then(|t| serde_json::from_str(&t).map_err(|e| e.to_string())) {
        Ok(v) => v,
        Err(e) => return result(false, format!("expected output unreadable: {e}")),
    };
    if expected == out.value {
        result(true, format!("exit {want_exit}"))
    } else {
        result(false, first_difference(&expected, &out.value, String::new()))
    }
}

fn first_difference(a: &Value, b: &Value, at: String) -> String {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            for k in x.keys().chain(y.keys()) {
                match (x.get(k), y.get(k)) {
                    (Some(u), Some(v)) if u != v => return first_difference(u, v, format!("{at}/{k}")),
                    (Some(_), None) | (None, Some(_)) => return format!("key {at}/{k} present on one side only"),
                    _ => {}
                }
            }
            format!("at {at}")
        }
        (Value::Array(x), Value::Array(y)) if x.len() == y.len() => {
            for (i, (u, v)) in x.iter().zip(y).enumerate() {
                if u != v {
                    return first_difference(u, v, format!("{at}/{i}"));
                }
            }
            format!("at {at}")
        }
        _ => format!("at {at}: expected {a}, got {b}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotone_maps_of_a_chain_into_a_chain() {
        // Monotone maps 2 → 3 are the pairs i ≤ j.
        let (s, t) = (FinPoset::chain(2), FinPoset::chain(3));
        let (sc, tc): (Cat, Cat) = (Arc::new(s.thin_category()), Arc::new(t.thin_category()));
        assert_eq!(monotone_functors(&s, &t, &sc, &tc).len(), 6);
    }

    #[test]
    fn cyclic_actions_count() {
        // Z4-sets with at most four points, up to iso: 1 + 2 + 2 + 4 by size.
        assert_eq!(cyclic_group_actions(&FinMonoid::cyclic(4), 4).len(), 9);
    }

    #[test]
    fn lub_in_diamond() {
        let d = samples::diamond();
        assert_eq!(least_upper_bound(&d, &[1, 2]), Some(3));
        assert_eq!(least_upper_bound(&d, &[]), Some(0));
    }
}
