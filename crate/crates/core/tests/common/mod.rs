//! Independent oracles and corpora shared by the integration tests.

#![allow(dead_code)]

use lfnet::bounds::{DistanceSequence, SequenceEntry};
use lfnet::{gen, BigIntMatrix, Network, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// All-pairs hop distances by Floyd–Warshall; `None` when unreachable.
pub fn floyd_warshall(net: &Network) -> Vec<Vec<Option<usize>>> {
    let n = net.node_count();
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for &(u, v) in net.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Rank by Gauss–Jordan elimination over exact rationals.
pub fn rational_rank(m: &BigIntMatrix) -> usize {
    let mut rows: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| BigRational::from_integer(v.clone())).collect())
        .collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for v in rows[rank].iter_mut() {
            *v = &*v / &pivot;
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[rank].clone();
                for (v, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rows.iter().filter(|r| r.iter().any(|v| !v.is_zero())).count()
}

/// Longest admissible sequence by plain enumeration of ordered selections
/// with every coordinate choice, checking the rule on each prefix.
pub fn enumerate_max_sequence(vectors: &[Vec<usize>], m: usize) -> usize {
    fn go(vectors: &[Vec<usize>], m: usize, used: &mut Vec<bool>, seq: &mut Vec<SequenceEntry>) -> usize {
        let mut best = seq.len();
        for i in 0..vectors.len() {
            if used[i] {
                continue;
            }
            for k in 0..m {
                seq.push(SequenceEntry::new(vectors[i].clone(), k));
                if DistanceSequence::new(seq.clone()).check_rule() {
                    used[i] = true;
                    best = best.max(go(vectors, m, used, seq));
                    used[i] = false;
                }
                seq.pop();
            }
        }
        best
    }
    go(vectors, m, &mut vec![false; vectors.len()], &mut Vec::new())
}

/// Every set partition of `0..n`, as restricted-growth labelings.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn go(i: usize, n: usize, labels: &mut Vec<usize>, max: usize, out: &mut Vec<Partition>) {
        if i == n {
            out.push(Partition::from_labels(labels));
            return;
        }
        for l in 0..=max + 1 {
            labels.push(l);
            go(i + 1, n, labels, max.max(l), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut labels = vec![0];
    go(1, n, &mut labels, 0, &mut out);
    out
}

/// Direct check of the EEP definition from the adjacency matrix.
pub fn eep_by_definition(net: &Network, p: &Partition) -> bool {
    let a = net.adjacency();
    for (ci, cell) in p.cells().iter().enumerate() {
        for (cj, other) in p.cells().iter().enumerate() {
            if ci == cj {
                continue;
            }
            let count = |u: usize| other.iter().filter(|&&v| a[(u, v)] == BigInt::from(1)).count();
            let first = count(cell[0]);
            if cell.iter().any(|&u| count(u) != first) {
                return false;
            }
        }
    }
    true
}

/// Connected random graph with `n` nodes and `m` leaders, drawn from `seed`.
pub fn random_net(seed: u64, max_n: usize, max_m: usize) -> Network {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m.min(n));
    let p = rng.gen_range(0.2..0.8);
    gen::random_connected(n, p, m, &mut rng).expect("connected sample")
}

/// Random vector set: up to `max_len` vectors of dimension `m`, entries in `0..=max_coord`.
pub fn random_vectors(seed: u64, max_len: usize, max_m: usize, max_coord: usize) -> (Vec<Vec<usize>>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(1..=max_m);
    let len = rng.gen_range(1..=max_len);
    let vectors = (0..len)
        .map(|_| (0..m).map(|_| rng.gen_range(0..=max_coord)).collect())
        .collect();
    (vectors, m)
}
