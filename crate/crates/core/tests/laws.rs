use std::collections::{BTreeSet, VecDeque};

use instar::{phi_eval, BlockBijection, Letter, Partition, Word};
use proptest::prelude::*;

/// Composition computed from scratch: breadth-first search over the stacked
/// diagram, then read off which outer points share a component.
fn oracle_compose(
    a: &BlockBijection,
    b: &BlockBijection,
) -> BTreeSet<(BTreeSet<usize>, BTreeSet<usize>)> {
    let n = a.degree();
    // vertices: 0..n top of a, n..2n middle, 2n..3n bottom of b
    let mut adj = vec![Vec::new(); 3 * n];
    let mut link = |blocks: Vec<instar::Block>, off_top: usize, off_bot: usize| {
        for blk in blocks {
            let pts: Vec<usize> = blk
                .top
                .iter()
                .map(|&t| off_top + t - 1)
                .chain(blk.bottom.iter().map(|&t| off_bot + t - 1))
                .collect();
            for w in pts.windows(2) {
                adj[w[0]].push(w[1]);
                adj[w[1]].push(w[0]);
            }
        }
    };
    link(a.block_list(), 0, n);
    link(b.block_list(), n, 2 * n);
    let mut comp = vec![usize::MAX; 3 * n];
    for s in 0..3 * n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = s;
                    q.push_back(w);
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    let roots: BTreeSet<usize> = (0..n).chain(2 * n..3 * n).map(|v| comp[v]).collect();
    for r in roots {
        let top = (0..n).filter(|&v| comp[v] == r).map(|v| v + 1).collect();
        let bot = (2 * n..3 * n)
            .filter(|&v| comp[v] == r)
            .map(|v| v - 2 * n + 1)
            .collect();
        out.insert((top, bot));
    }
    out
}

fn block_set(a: &BlockBijection) -> BTreeSet<(BTreeSet<usize>, BTreeSet<usize>)> {
    a.block_list()
        .into_iter()
        .map(|b| (b.top.into_iter().collect(), b.bottom.into_iter().collect()))
        .collect()
}

/// Random labels on the 2n points, repaired so every block meets both rows.
fn repair(n: usize, mut labels: Vec<usize>) -> BlockBijection {
    let target = labels[0];
    labels[n] = target;
    let rows = |labels: &[usize], l: usize| {
        let top = labels[..n].contains(&l);
        let bot = labels[n..].contains(&l);
        (top, bot)
    };
    for i in 0..2 * n {
        let (t, b) = rows(&labels, labels[i]);
        if !(t && b) {
            labels[i] = target;
        }
    }
    BlockBijection::from_diagram(n, Partition::from_labels(&labels)).unwrap()
}

fn element(n: usize) -> impl Strategy<Value = BlockBijection> {
    prop::collection::vec(0..2 * n, 2 * n).prop_map(move |l| repair(n, l))
}

fn partition(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..n, n).prop_map(|l| Partition::from_labels(&l))
}

fn permutation(n: usize) -> impl Strategy<Value = BlockBijection> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|p| BlockBijection::from_permutation(&p).unwrap())
}

fn uniform(n: usize) -> impl Strategy<Value = BlockBijection> {
    (partition(n), permutation(n))
        .prop_map(|(p, g)| BlockBijection::idempotent(&p).compose(&g).unwrap())
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    let letters: Vec<Letter> = std::iter::once(Letter::X)
        .chain((1..n).map(Letter::S))
        .collect();
    prop::collection::vec(prop::sample::select(letters), 0..=max_len).prop_map(Word)
}

fn triple(n: usize) -> impl Strategy<Value = (BlockBijection, BlockBijection, BlockBijection)> {
    (element(n), element(n), element(n))
}

proptest! {
    #[test]
    fn composition_matches_oracle((a, b, _) in (3usize..=6).prop_flat_map(triple)) {
        prop_assert_eq!(block_set(&a.compose(&b).unwrap()), oracle_compose(&a, &b));
    }

    #[test]
    fn composition_is_associative((a, b, c) in (1usize..=6).prop_flat_map(triple)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_laws((a, b, _) in (1usize..=6).prop_flat_map(triple)) {
        let ai = a.inverse();
        prop_assert_eq!(ai.inverse(), a.clone());
        prop_assert_eq!(a.compose(&ai).unwrap().compose(&a).unwrap(), a.clone());
        prop_assert_eq!(ai.compose(&a).unwrap().compose(&ai).unwrap(), ai.clone());
        prop_assert_eq!(
            a.compose(&b).unwrap().inverse(),
            b.inverse().compose(&ai).unwrap()
        );
        let e = a.compose(&ai).unwrap();
        prop_assert!(e.is_idempotent());
        prop_assert_eq!(e, BlockBijection::idempotent(&a.domain()));
    }

    #[test]
    fn idempotents_commute_and_join((p, q) in (1usize..=7).prop_flat_map(|n| (partition(n), partition(n)))) {
        let (e, f) = (BlockBijection::idempotent(&p), BlockBijection::idempotent(&q));
        let ef = e.compose(&f).unwrap();
        prop_assert_eq!(&ef, &f.compose(&e).unwrap());
        prop_assert_eq!(ef, BlockBijection::idempotent(&p.join(&q).unwrap()));
    }

    #[test]
    fn join_laws((p, q, r) in (1usize..=8).prop_flat_map(|n| (partition(n), partition(n), partition(n)))) {
        let pq = p.join(&q).unwrap();
        prop_assert_eq!(&pq, &q.join(&p).unwrap());
        prop_assert_eq!(p.join(&p).unwrap(), p.clone());
        prop_assert_eq!(pq.join(&r).unwrap(), p.join(&q.join(&r).unwrap()).unwrap());
        prop_assert!(p.refines(&pq) && q.refines(&pq));
        prop_assert!(Partition::discrete(p.size()).refines(&p));
        prop_assert!(p.refines(&Partition::full(p.size())));
    }

    #[test]
    fn uniform_elements_are_closed((a, b) in (1usize..=6).prop_flat_map(|n| (uniform(n), uniform(n)))) {
        prop_assert!(a.is_uniform() && b.is_uniform());
        prop_assert!(a.compose(&b).unwrap().is_uniform());
        prop_assert!(a.inverse().is_uniform());
    }

    #[test]
    fn literal_round_trip(a in (1usize..=7).prop_flat_map(element)) {
        let text = a.to_string();
        prop_assert_eq!(BlockBijection::parse(a.degree(), &text).unwrap(), a.clone());
        let p = a.domain();
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn reversed_word_is_inverse((n, w) in (3usize..=5).prop_flat_map(|n| (Just(n), word(n, 10)))) {
        let img = phi_eval(&w, n).unwrap();
        prop_assert_eq!(phi_eval(&w.rev(), n).unwrap(), img.inverse());
        let sym = w.concat(&w.rev());
        let s = phi_eval(&sym, n).unwrap();
        prop_assert_eq!(s.compose(&s).unwrap().compose(&s).unwrap(), s);
    }

    #[test]
    fn word_text_round_trip((_, w) in (3usize..=5).prop_flat_map(|n| (Just(n), word(n, 10)))) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn collapse_is_multiplicative((a, b) in (3usize..=6).prop_flat_map(|n| (element(n), element(n)))) {
        let n = a.degree();
        let eps = BlockBijection::epsilon(n).unwrap();
        let local = |x: &BlockBijection| eps.compose(x).unwrap().compose(&eps).unwrap();
        let (a, b) = (local(&a), local(&b));
        prop_assert!(a.in_local_submonoid());
        prop_assert_eq!(
            a.compose(&b).unwrap().upsilon().unwrap(),
            a.upsilon().unwrap().compose(&b.upsilon().unwrap()).unwrap()
        );
    }
}
