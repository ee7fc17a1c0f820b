use tightcomp::Limits;
use tightcomp_cli::corpus::{poset_corpus, run_criterion, CorpusConfig};

#[test]
fn seed_changes_the_sample_but_not_the_verdict() {
    let a = CorpusConfig { seed: 1, ..CorpusConfig::default() };
    let b = CorpusConfig { seed: 2, ..CorpusConfig::default() };
    let (pa, pb) = (poset_corpus(&a), poset_corpus(&b));
    assert_eq!(pa.len(), pb.len());
    assert!(pa.iter().zip(&pb).any(|(x, y)| x.relations() != y.relations() || x.len() != y.len()));
    for id in 1..=3 {
        let (ra, rb) = (run_criterion(id, &a, Limits::default()), run_criterion(id, &b, Limits::default()));
        assert!(ra.pass() && rb.pass(), "{} / {}", ra.line(), rb.line());
    }
}

#[test]
fn same_seed_same_sample() {
    let cfg = CorpusConfig::default();
    let (a, b) = (poset_corpus(&cfg), poset_corpus(&cfg));
    assert!(a.iter().zip(&b).all(|(x, y)| x.relations() == y.relations()));
}

#[test]
fn unknown_criterion_fails() {
    assert!(!run_criterion(12, &CorpusConfig::default(), Limits::default()).pass());
}
