#![allow(dead_code)]

pub mod checks;

use nanoword::homotopy::applicable_moves;
use nanoword::{AlphabetSpec, EtaleWord, Letter, Nanoword, Setting};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `{a, b}` with `τ(a) = b`, diagonal S.
pub fn ab_free() -> Setting {
    Setting::new(AlphabetSpec::new(&["a", "b"], &[("a", "b")], &[], None).unwrap())
}

/// `{a, b}`, both fixed, diagonal S.
pub fn ab_fixed() -> Setting {
    Setting::new(AlphabetSpec::new(&["a", "b"], &[], &["a", "b"], None).unwrap())
}

/// Two free orbits `{a, A}`, `{b, B}`.
pub fn two_free() -> Setting {
    Setting::new(AlphabetSpec::new(&["a", "A", "b", "B"], &[("a", "A"), ("b", "B")], &[], None).unwrap())
}

/// Two free orbits `{a, a'}`, `{b, b'}`: `a` and `b` independent in π.
pub fn primed() -> Setting {
    Setting::new(AlphabetSpec::new(&["a", "a'", "b", "b'"], &[("a", "a'"), ("b", "b'")], &[], None).unwrap())
}

/// One free orbit `{a, A}` and one fixed letter `c`.
pub fn mixed() -> Setting {
    Setting::new(AlphabetSpec::new(&["a", "A", "c"], &[("a", "A")], &["c"], None).unwrap())
}

pub fn plain(s: &Setting, w: &str) -> Nanoword {
    EtaleWord::plain(w, &s.spec).unwrap().desingularize()
}

pub fn pattern(p: &str, proj: &[(char, usize)]) -> Nanoword {
    Nanoword::from_pattern(p, proj).unwrap()
}

/// A uniformly shuffled Gauss word of `rank` letters with random projections.
pub fn random_nanoword(r: &mut Rng8, spec: &AlphabetSpec, rank: usize) -> Nanoword {
    let letters: Vec<Letter> =
        (0..rank).map(|i| Letter { name: format!("X{i}"), proj: r.gen_range(0..spec.len()) }).collect();
    let mut word: Vec<usize> = (0..rank).flat_map(|i| [i, i]).collect();
    word.shuffle(r);
    Nanoword::new(letters, word).unwrap()
}

/// Every nanoword with at most `max_rank` letters, up to isomorphism.
pub fn all_nanowords(spec: &AlphabetSpec, max_rank: usize) -> Vec<Nanoword> {
    let mut out = vec![Nanoword::empty()];
    for rank in 1..=max_rank {
        for w in gauss_words(rank) {
            let total = spec.len().pow(rank as u32);
            for mut code in 0..total {
                let letters: Vec<Letter> = (0..rank)
                    .map(|i| {
                        let p = code % spec.len();
                        code /= spec.len();
                        Letter { name: format!("X{i}"), proj: p }
                    })
                    .collect();
                out.push(Nanoword::new(letters, w.clone()).unwrap());
            }
        }
    }
    out
}

/// Gauss words on `0..rank` whose letters first appear in increasing order.
fn gauss_words(rank: usize) -> Vec<Vec<usize>> {
    fn go(rank: usize, cur: &mut Vec<usize>, count: &mut Vec<u8>, next: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == 2 * rank {
            out.push(cur.clone());
            return;
        }
        for l in 0..next.min(rank) {
            if count[l] == 1 {
                count[l] = 2;
                cur.push(l);
                go(rank, cur, count, next, out);
                cur.pop();
                count[l] = 1;
            }
        }
        if next < rank {
            count[next] = 1;
            cur.push(next);
            go(rank, cur, count, next + 1, out);
            cur.pop();
            count[next] = 0;
        }
    }
    let mut out = Vec::new();
    go(rank, &mut Vec::new(), &mut vec![0; rank], 0, &mut out);
    out
}

/// Apply `steps` random applicable moves starting from `n`, calling `check`
/// with the word before and after each one. Returns the number of moves applied.
pub fn random_walk(
    r: &mut Rng8,
    spec: &AlphabetSpec,
    start: &Nanoword,
    steps: usize,
    max_len: usize,
    mut check: impl FnMut(&Nanoword, &Nanoword),
) -> usize {
    let mut cur = start.clone();
    let mut done = 0;
    for _ in 0..steps {
        let moves = applicable_moves(&cur, spec, max_len, false);
        let Some(m) = moves.choose(r) else { break };
        let next = m.apply(&cur, spec).expect("applicable move applies");
        check(&cur, &next);
        cur = next;
        done += 1;
    }
    done
}

/// Number of move applications in a batch of random walks, checking `check`
/// on every step. Walks start from random words of rank ≤ 3.
pub fn invariance_sweep(
    seed: u64,
    spec: &AlphabetSpec,
    total: usize,
    mut check: impl FnMut(&Nanoword, &Nanoword) -> bool,
) -> (usize, usize) {
    let mut r = rng(seed);
    let (mut moves, mut bad) = (0, 0);
    while moves < total {
        let rank = r.gen_range(0..=3);
        let start = random_nanoword(&mut r, spec, rank);
        moves += random_walk(&mut r, spec, &start, 10.min(total - moves), 8, |a, b| {
            if !check(a, b) {
                bad += 1;
            }
        });
    }
    (moves, bad)
}
