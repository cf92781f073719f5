//! Undirected leader-follower networks.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::BigIntMatrix;

/// Unvalidated network description, as it appears on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawNetwork {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub leaders: Vec<usize>,
}

/// A simple undirected graph on nodes `0..n` with an ordered list of leaders.
///
/// The leader order fixes the column order of the input matrix. Edges are
/// stored with the smaller endpoint first and sorted, so two networks with
/// the same edge set serialize identically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawNetwork", into = "RawNetwork")]
pub struct Network {
    n: usize,
    edges: Vec<(usize, usize)>,
    leaders: Vec<usize>,
    neighbors: Vec<Vec<usize>>,
    connected: bool,
}

impl Network {
    /// Validates a raw description and canonicalizes its edge list.
    ///
    /// Disconnected graphs are accepted here; every bound and partition
    /// operation rejects them later.
    pub fn new(n: usize, edges: &[(usize, usize)], leaders: &[usize]) -> Result<Self> {
        let mut canon = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for node in [u, v] {
                if node >= n {
                    return Err(Error::NodeOutOfRange { node, n });
                }
            }
            let e = (u.min(v), u.max(v));
            if !canon.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        if leaders.is_empty() {
            return Err(Error::EmptyLeaderSet);
        }
        let mut seen = vec![false; n];
        for &leader in leaders {
            if leader >= n {
                return Err(Error::LeaderOutOfRange { leader, n });
            }
            if std::mem::replace(&mut seen[leader], true) {
                return Err(Error::DuplicateLeader(leader));
            }
        }

        let edges: Vec<_> = canon.into_iter().collect();
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        let connected = reachable_from(&neighbors, 0).iter().all(|&r| r);
        Ok(Self {
            n,
            edges,
            leaders: leaders.to_vec(),
            neighbors,
            connected,
        })
    }

    pub fn from_raw(raw: &RawNetwork) -> Result<Self> {
        let edges: Vec<_> = raw.edges.iter().map(|&[u, v]| (u, v)).collect();
        Self::new(raw.n, &edges, &raw.leaders)
    }

    pub fn to_raw(&self) -> RawNetwork {
        RawNetwork {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            leaders: self.leaders.clone(),
        }
    }

    /// Same graph with a different leader list.
    pub fn with_leaders(&self, leaders: &[usize]) -> Result<Self> {
        Self::new(self.n, &self.edges, leaders)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn leader_count(&self) -> usize {
        self.leaders.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn leaders(&self) -> &[usize] {
        &self.leaders
    }

    pub fn is_leader(&self, node: usize) -> bool {
        self.leaders.contains(&node)
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.neighbors[node]
    }

    pub fn degree_of(&self, node: usize) -> usize {
        self.neighbors[node].len()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether a traversal from node 0 reaches every node. The empty and
    /// single-node graphs count as connected.
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// 0/1 adjacency matrix.
    pub fn adjacency(&self) -> BigIntMatrix {
        let mut a = BigIntMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a[(u, v)] = BigInt::from(1);
            a[(v, u)] = BigInt::from(1);
        }
        a
    }

    /// Diagonal degree matrix.
    pub fn degree(&self) -> BigIntMatrix {
        let mut d = BigIntMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            d[(i, i)] = BigInt::from(self.degree_of(i));
        }
        d
    }

    /// Graph Laplacian, degree minus adjacency.
    pub fn laplacian(&self) -> BigIntMatrix {
        self.degree()
            .sub(&self.adjacency())
            .expect("degree and adjacency share a shape")
    }

    /// Hop distances from every node to every leader, one BFS per leader.
    pub fn bfs_distances(&self) -> Result<DistanceMatrix> {
        let m = self.leaders.len();
        let mut dist = vec![vec![0usize; m]; self.n];
        for (k, &leader) in self.leaders.iter().enumerate() {
            let column = bfs(&self.neighbors, leader);
            for (i, d) in column.into_iter().enumerate() {
                dist[i][k] = d.ok_or(Error::Disconnected)?;
            }
        }
        Ok(DistanceMatrix { rows: dist, m })
    }
}

impl TryFrom<RawNetwork> for Network {
    type Error = Error;

    fn try_from(raw: RawNetwork) -> Result<Self> {
        Self::from_raw(&raw)
    }
}

impl From<Network> for RawNetwork {
    fn from(net: Network) -> Self {
        net.to_raw()
    }
}

fn reachable_from(neighbors: &[Vec<usize>], start: usize) -> Vec<bool> {
    if neighbors.is_empty() {
        return Vec::new();
    }
    bfs(neighbors, start).into_iter().map(|d| d.is_some()).collect()
}

fn bfs(neighbors: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; neighbors.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u].map(|d| d + 1);
        for &v in &neighbors[u] {
            if dist[v].is_none() {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Hop distance from each node (rows) to each leader (columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    rows: Vec<Vec<usize>>,
    m: usize,
}

impl DistanceMatrix {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch(
                "distance rows have differing lengths".into(),
            ));
        }
        Ok(Self { rows, m })
    }

    pub fn node_count(&self) -> usize {
        self.rows.len()
    }

    pub fn leader_count(&self) -> usize {
        self.m
    }

    pub fn get(&self, node: usize, leader_index: usize) -> usize {
        self.rows[node][leader_index]
    }

    /// The distance vector of `node`.
    pub fn vector(&self, node: usize) -> &[usize] {
        &self.rows[node]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Largest distance from leader `leader_index` to any node.
    pub fn eccentricity(&self, leader_index: usize) -> usize {
        self.rows.iter().map(|r| r[leader_index]).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize, leaders: &[usize]) -> Network {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Network::new(n, &edges, leaders).unwrap()
    }

    fn complete(n: usize) -> Network {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Network::new(n, &edges, &[0]).unwrap()
    }

    fn m(rows: &[&[i64]]) -> BigIntMatrix {
        BigIntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn validate_accepts_and_rejects() {
        assert!(Network::new(2, &[(0, 1)], &[0]).is_ok());
        assert_eq!(Network::new(3, &[(0, 0)], &[0]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Network::new(3, &[(0, 1), (1, 0)], &[0]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Network::new(3, &[(0, 1)], &[3]),
            Err(Error::LeaderOutOfRange { leader: 3, n: 3 })
        );
        assert_eq!(Network::new(3, &[(0, 1)], &[1, 1]), Err(Error::DuplicateLeader(1)));
        assert_eq!(Network::new(3, &[(0, 1)], &[]), Err(Error::EmptyLeaderSet));
        assert_eq!(
            Network::new(3, &[(0, 5)], &[0]),
            Err(Error::NodeOutOfRange { node: 5, n: 3 })
        );
        let p6 = path(6, &[0, 5]);
        assert!(p6.is_connected());
        assert_eq!(p6.leaders(), &[0, 5]);
    }

    #[test]
    fn edges_are_canonical() {
        let net = Network::new(4, &[(3, 2), (1, 0), (2, 0)], &[0]).unwrap();
        assert_eq!(net.edges(), &[(0, 1), (0, 2), (2, 3)]);
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(path(2, &[0]).adjacency(), m(&[&[0, 1], &[1, 0]]));
        assert_eq!(complete(3).adjacency(), m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]));
        let star = Network::new(4, &[(0, 1), (0, 2), (0, 3)], &[0]).unwrap();
        let a = star.adjacency();
        assert_eq!(a.row(0), m(&[&[0, 1, 1, 1]]).row(0));
        for i in 1..4 {
            assert_eq!(a.row(i), m(&[&[1, 0, 0, 0]]).row(0));
        }
    }

    #[test]
    fn degree_examples() {
        assert_eq!(path(2, &[0]).degree(), m(&[&[1, 0], &[0, 1]]));
        assert_eq!(path(3, &[0]).degree(), m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]));
        let k4 = complete(4).degree();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(k4[(i, j)], BigInt::from(if i == j { 3 } else { 0 }));
            }
        }
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(path(2, &[0]).laplacian(), m(&[&[1, -1], &[-1, 1]]));
        assert_eq!(
            complete(3).laplacian(),
            m(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]])
        );
    }

    #[test]
    fn bfs_examples() {
        let d = path(3, &[0]).bfs_distances().unwrap();
        assert_eq!(d.rows(), &[vec![0], vec![1], vec![2]]);
        let d = path(4, &[0, 3]).bfs_distances().unwrap();
        assert_eq!(d.rows(), &[vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]);
        assert_eq!(d.eccentricity(1), 3);
        let split = Network::new(4, &[(0, 1), (2, 3)], &[0]).unwrap();
        assert_eq!(split.bfs_distances(), Err(Error::Disconnected));
    }

    #[test]
    fn connectivity_examples() {
        assert!(path(5, &[0]).is_connected());
        assert!(Network::new(1, &[], &[0]).unwrap().is_connected());
        assert!(!Network::new(2, &[], &[0]).unwrap().is_connected());
    }

    #[test]
    fn serde_round_trip_is_canonical() {
        let net = Network::new(3, &[(2, 1), (1, 0)], &[2]).unwrap();
        let json = serde_json::to_string(&net).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[0,1],[1,2]],"leaders":[2]}"#);
        let back: Network = serde_json::from_str(&json).unwrap();
        assert_eq!(back, net);
        assert!(serde_json::from_str::<Network>(r#"{"n":2,"edges":[[0,0]],"leaders":[0]}"#).is_err());
    }
}
