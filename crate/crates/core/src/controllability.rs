//! Input matrix, Kalman controllability matrix, and the zero pattern of
//! `(-L)^r b_k`.

use std::fmt;

use log::warn;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bounds::DistanceSequence;
use crate::error::{Error, Result};
use crate::graph::Network;
use crate::linalg::BigIntMatrix;

/// Networks larger than this still work, but Γ construction and its rank
/// get slow (n² columns of entries with O(n) bits each).
pub const SIZE_WARNING_THRESHOLD: usize = 64;

/// The n×m leader selection matrix B: column k is the unit vector at
/// `leaders[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputMatrix(BigIntMatrix);

impl InputMatrix {
    pub fn matrix(&self) -> &BigIntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> BigIntMatrix {
        self.0
    }
}

pub fn input_matrix(net: &Network) -> InputMatrix {
    let mut b = BigIntMatrix::zeros(net.node_count(), net.leader_count());
    for (k, &leader) in net.leaders().iter().enumerate() {
        b[(leader, k)] = BigInt::one();
    }
    InputMatrix(b)
}

/// `[B, (-L)B, ..., (-L)^{n-1}B]` together with its exact rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControllabilityMatrix {
    matrix: BigIntMatrix,
    rank: usize,
}

impl ControllabilityMatrix {
    pub fn matrix(&self) -> &BigIntMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Block `r`, i.e. `(-L)^r B`.
    pub fn block(&self, r: usize, m: usize) -> BigIntMatrix {
        let cols: Vec<_> = (r * m..(r + 1) * m).map(|j| self.matrix.column(j)).collect();
        BigIntMatrix::from_columns(self.matrix.rows(), &cols).expect("block columns share a length")
    }
}

/// The blocks `(-L)^r B` for `r` in `0..count`, each obtained from the
/// previous block by one multiplication with `-L`.
pub fn krylov_blocks(net: &Network, count: usize) -> Vec<BigIntMatrix> {
    let neg_l = net.laplacian().neg();
    let mut blocks = Vec::with_capacity(count);
    let mut current = input_matrix(net).into_matrix();
    for r in 0..count {
        if r > 0 {
            current = neg_l.mul(&current).expect("n×n times n×m");
        }
        blocks.push(current.clone());
    }
    blocks
}

pub fn controllability_matrix(net: &Network) -> ControllabilityMatrix {
    let n = net.node_count();
    if n > SIZE_WARNING_THRESHOLD {
        warn!("building a controllability matrix for n = {n}; expect slow exact rank");
    }
    let matrix = BigIntMatrix::hcat(&krylov_blocks(net, n)).expect("blocks share a row count");
    let rank = matrix.rank();
    ControllabilityMatrix { matrix, rank }
}

/// One mismatch between `(-L)^r b_k` and the pattern predicted from
/// distances and shortest-path counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop1Violation {
    pub node: usize,
    pub leader_index: usize,
    pub power: usize,
    pub expected: BigInt,
    pub actual: BigInt,
}

impl fmt::Display for Prop1Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "node {} leader #{} power {}: expected {}, got {}",
            self.node, self.leader_index, self.power, self.expected, self.actual
        )
    }
}

/// Checks, for every node `i`, leader index `k` and `r <= d_ik`, that
/// `[(-L)^r b_k]_i` is zero below the distance and equals the number of
/// shortest walks `[A^d]_{i,leader}` at the distance, and that this count is
/// positive. Returns every mismatch found.
pub fn check_prop1(net: &Network) -> Result<Vec<Prop1Violation>> {
    net.require_connected()?;
    let dist = net.bfs_distances()?;
    let n = net.node_count();
    let max_d = (0..net.leader_count())
        .map(|k| dist.eccentricity(k))
        .max()
        .unwrap_or(0);
    let blocks = krylov_blocks(net, max_d + 1);
    let a = net.adjacency();
    let mut a_powers = vec![BigIntMatrix::identity(n)];
    for r in 1..=max_d {
        let next = a_powers[r - 1].mul(&a).expect("square");
        a_powers.push(next);
    }

    let mut violations = Vec::new();
    for i in 0..n {
        for (k, &leader) in net.leaders().iter().enumerate() {
            let d = dist.get(i, k);
            for (r, block) in blocks.iter().enumerate().take(d + 1) {
                let actual = &block[(i, k)];
                let expected = if r < d {
                    BigInt::zero()
                } else {
                    a_powers[d][(i, leader)].clone()
                };
                if *actual != expected || (r == d && expected <= BigInt::zero()) {
                    violations.push(Prop1Violation {
                        node: i,
                        leader_index: k,
                        power: r,
                        expected,
                        actual: actual.clone(),
                    });
                }
            }
        }
    }
    Ok(violations)
}

/// Columns `(-L)^{r_p} b_{k_p}` with `r_p = [d^p]_{k_p}`, one per sequence entry.
///
/// The sequence must satisfy the ordering rule and every vector must be the
/// distance vector of some node of `net`.
pub fn witness_submatrix(net: &Network, seq: &DistanceSequence) -> Result<BigIntMatrix> {
    net.require_connected()?;
    let dist = net.bfs_distances()?;
    let m = net.leader_count();
    for (p, entry) in seq.entries().iter().enumerate() {
        if entry.vector.len() != m || entry.k >= m {
            return Err(Error::InvalidSequence(format!(
                "entry {p} does not match {m} leaders"
            )));
        }
        if !dist.rows().contains(&entry.vector) {
            return Err(Error::InvalidSequence(format!(
                "entry {p} is not the distance vector of any node"
            )));
        }
    }
    if !seq.check_rule() {
        return Err(Error::InvalidSequence("ordering rule violated".into()));
    }

    let neg_l = net.laplacian().neg();
    let b = input_matrix(net).into_matrix();
    let max_power = seq.entries().iter().map(|e| e.vector[e.k]).max().unwrap_or(0);
    let mut powers = Vec::with_capacity(max_power + 1);
    let mut current = b;
    for r in 0..=max_power {
        if r > 0 {
            current = neg_l.mul(&current)?;
        }
        powers.push(current.clone());
    }
    let columns: Vec<_> = seq
        .entries()
        .iter()
        .map(|e| powers[e.vector[e.k]].column(e.k))
        .collect();
    BigIntMatrix::from_columns(net.node_count(), &columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::SequenceEntry;

    fn net(n: usize, edges: &[(usize, usize)], leaders: &[usize]) -> Network {
        Network::new(n, edges, leaders).unwrap()
    }

    fn m(rows: &[&[i64]]) -> BigIntMatrix {
        BigIntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn input_matrix_follows_leader_order() {
        assert_eq!(input_matrix(&net(3, &[], &[0])).matrix(), &m(&[&[1], &[0], &[0]]));
        assert_eq!(
            input_matrix(&net(3, &[], &[2, 0])).matrix(),
            &m(&[&[0, 1], &[0, 0], &[1, 0]])
        );
        assert_eq!(input_matrix(&net(1, &[], &[0])).matrix(), &m(&[&[1]]));
    }

    #[test]
    fn controllability_small_cases() {
        let p2 = controllability_matrix(&net(2, &[(0, 1)], &[0]));
        assert_eq!(p2.matrix(), &m(&[&[1, -1], &[0, 1]]));
        assert_eq!(p2.rank(), 2);
        let k3 = controllability_matrix(&net(3, &[(0, 1), (0, 2), (1, 2)], &[0]));
        assert_eq!(k3.rank(), 2);
        let p3 = controllability_matrix(&net(3, &[(0, 1), (1, 2)], &[0]));
        assert_eq!(p3.rank(), 3);
        assert_eq!(p3.block(2, 1), m(&[&[2], &[-3], &[1]]));
    }

    #[test]
    fn prop1_examples() {
        let p3 = net(3, &[(0, 1), (1, 2)], &[0]);
        assert!(check_prop1(&p3).unwrap().is_empty());
        let blocks = krylov_blocks(&p3, 3);
        assert_eq!(blocks[2][(2, 0)], BigInt::from(1));
        assert_eq!(blocks[0][(0, 0)], BigInt::from(1));

        let c4 = net(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], &[0]);
        assert!(check_prop1(&c4).unwrap().is_empty());
        assert_eq!(krylov_blocks(&c4, 2)[1][(2, 0)], BigInt::zero());
        // two shortest paths from node 2 to node 0
        assert_eq!(krylov_blocks(&c4, 3)[2][(2, 0)], BigInt::from(2));

        let split = net(3, &[(0, 1)], &[0]);
        assert_eq!(check_prop1(&split), Err(Error::Disconnected));
    }

    #[test]
    fn witness_columns() {
        let p3 = net(3, &[(0, 1), (1, 2)], &[0]);
        let seq = DistanceSequence::new(vec![
            SequenceEntry::new(vec![0], 0),
            SequenceEntry::new(vec![1], 0),
            SequenceEntry::new(vec![2], 0),
        ]);
        let w = witness_submatrix(&p3, &seq).unwrap();
        assert_eq!(w.cols(), 3);
        assert_eq!(w.rank(), 3);

        let empty = witness_submatrix(&p3, &DistanceSequence::default()).unwrap();
        assert_eq!((empty.rows(), empty.cols(), empty.rank()), (3, 0, 0));

        let p2 = net(2, &[(0, 1)], &[0]);
        let w = witness_submatrix(&p2, &DistanceSequence::new(vec![SequenceEntry::new(vec![0], 0)])).unwrap();
        assert_eq!(w, m(&[&[1], &[0]]));
    }

    #[test]
    fn witness_rejects_bad_sequences() {
        let p3 = net(3, &[(0, 1), (1, 2)], &[0]);
        let backwards = DistanceSequence::new(vec![
            SequenceEntry::new(vec![1], 0),
            SequenceEntry::new(vec![0], 0),
        ]);
        assert!(matches!(witness_submatrix(&p3, &backwards), Err(Error::InvalidSequence(_))));
        let foreign = DistanceSequence::new(vec![SequenceEntry::new(vec![7], 0)]);
        assert!(matches!(witness_submatrix(&p3, &foreign), Err(Error::InvalidSequence(_))));
    }
}
