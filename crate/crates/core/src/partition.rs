//! Node partitions: external equitable partitions and distance partitions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Network;

/// Disjoint non-empty cells covering nodes `0..n`.
///
/// Cells are kept sorted internally and ordered by their smallest member,
/// which is also the serialized form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Partition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl Partition {
    pub fn new(mut cells: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = cells.iter().map(Vec::len).sum();
        let mut cell_of = vec![usize::MAX; n];
        for cell in &mut cells {
            if cell.is_empty() {
                return Err(Error::InvalidPartition("empty cell".into()));
            }
            cell.sort_unstable();
        }
        cells.sort_unstable_by_key(|c| c[0]);
        for (idx, cell) in cells.iter().enumerate() {
            for &v in cell {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("node {v} out of range")));
                }
                if cell_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("node {v} in two cells")));
                }
                cell_of[v] = idx;
            }
        }
        Ok(Self { cells, cell_of })
    }

    /// Groups nodes by label; nodes with equal labels share a cell.
    pub fn from_labels<L: Ord>(labels: &[L]) -> Self {
        let mut groups: BTreeMap<&L, Vec<usize>> = BTreeMap::new();
        for (v, label) in labels.iter().enumerate() {
            groups.entry(label).or_default().push(v);
        }
        Self::new(groups.into_values().collect()).expect("labels cover every node once")
    }

    pub fn singletons(n: usize) -> Self {
        Self::new((0..n).map(|v| vec![v]).collect()).expect("singletons are valid")
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn node_count(&self) -> usize {
        self.cell_of.len()
    }

    pub fn cell_of(&self, node: usize) -> usize {
        self.cell_of[node]
    }

    /// Pairs of distinct nodes that share a cell.
    pub fn same_cell_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().flat_map(|cell| {
            cell.iter()
                .enumerate()
                .flat_map(move |(i, &u)| cell[i + 1..].iter().map(move |&v| (u, v)))
        })
    }

    pub fn is_leader_invariant(&self, net: &Network) -> bool {
        net.leaders().iter().all(|&l| self.cells[self.cell_of[l]].len() == 1)
    }
}

impl TryFrom<Vec<Vec<usize>>> for Partition {
    type Error = Error;

    fn try_from(cells: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(cells)
    }
}

impl From<Partition> for Vec<Vec<usize>> {
    fn from(p: Partition) -> Self {
        p.cells
    }
}

/// Neighbor count of `node` into every cell other than its own, indexed by cell.
fn external_signature(net: &Network, cell_of: &[usize], cell_count: usize, node: usize) -> Vec<usize> {
    let mut counts = vec![0; cell_count];
    for &v in net.neighbors(node) {
        counts[cell_of[v]] += 1;
    }
    counts[cell_of[node]] = 0;
    counts
}

/// Whether every node of each cell has the same number of neighbors in
/// every other cell.
pub fn is_eep(net: &Network, p: &Partition) -> Result<bool> {
    if p.node_count() != net.node_count() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} nodes, network has {}",
            p.node_count(),
            net.node_count()
        )));
    }
    Ok(p.cells.iter().all(|cell| {
        let first = external_signature(net, &p.cell_of, p.len(), cell[0]);
        cell[1..]
            .iter()
            .all(|&v| external_signature(net, &p.cell_of, p.len(), v) == first)
    }))
}

/// Signature refinement from an initial labeling until no cell splits.
///
/// `order` permutes the cell numbering used between rounds; the fixed point
/// does not depend on it.
fn refine(net: &Network, mut labels: Vec<usize>, order: &dyn Fn(usize) -> Vec<usize>) -> (Partition, usize) {
    let mut rounds = 0;
    loop {
        rounds += 1;
        let current = Partition::from_labels(&labels);
        let perm = order(current.len());
        let cell_of: Vec<usize> = current.cell_of.iter().map(|&c| perm[c]).collect();
        let keyed: Vec<(usize, Vec<usize>)> = (0..net.node_count())
            .map(|v| (cell_of[v], external_signature(net, &cell_of, current.len(), v)))
            .collect();
        let next = Partition::from_labels(&keyed);
        if next.len() == current.len() {
            return (next, rounds);
        }
        labels = next.cell_of.clone();
    }
}

fn leader_invariant_start(net: &Network) -> Vec<usize> {
    let mut labels = vec![0; net.node_count()];
    for (k, &leader) in net.leaders().iter().enumerate() {
        labels[leader] = k + 1;
    }
    labels
}

/// The coarsest external equitable partition in which every leader is a
/// singleton.
///
/// Starts from the leaders as singletons plus one follower cell, then
/// splits cells by external neighbor-count signatures until stable. Each
/// round either adds a cell or stops, so at most `n` rounds run.
pub fn maximal_leader_invariant_eep(net: &Network) -> Partition {
    refine(net, leader_invariant_start(net), &|len| (0..len).collect()).0
}

/// Same fixed point as [`maximal_leader_invariant_eep`], but renumbers the
/// cells with `perm_for(cell_count)` before each signature pass. Also
/// returns the number of signature passes, the last of which splits nothing.
pub fn maximal_leader_invariant_eep_with_order(
    net: &Network,
    perm_for: &dyn Fn(usize) -> Vec<usize>,
) -> (Partition, usize) {
    refine(net, leader_invariant_start(net), perm_for)
}

/// Cells of nodes at equal distance from leader `leader_index`.
pub fn distance_partition(net: &Network, leader_index: usize) -> Result<Partition> {
    net.require_connected()?;
    if leader_index >= net.leader_count() {
        return Err(Error::InvalidParams(format!(
            "leader index {leader_index} with {} leaders",
            net.leader_count()
        )));
    }
    let dist = net.bfs_distances()?;
    let labels: Vec<usize> = (0..net.node_count()).map(|i| dist.get(i, leader_index)).collect();
    Ok(Partition::from_labels(&labels))
}

/// Number of cells of the maximal leader-invariant EEP.
pub fn upper_bound(net: &Network) -> Result<usize> {
    net.require_connected()?;
    Ok(maximal_leader_invariant_eep(net).len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net(n: usize, edges: &[(usize, usize)], leaders: &[usize]) -> Network {
        Network::new(n, edges, leaders).unwrap()
    }

    fn path(n: usize) -> Network {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        net(n, &edges, &[0])
    }

    fn cycle(n: usize) -> Network {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        net(n, &edges, &[0])
    }

    fn complete(n: usize) -> Network {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        net(n, &edges, &[0])
    }

    fn star4() -> Network {
        net(4, &[(0, 1), (0, 2), (0, 3)], &[0])
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![vec![0, 1], vec![1]]).is_err());
        assert!(Partition::new(vec![vec![0], vec![]]).is_err());
        assert!(Partition::new(vec![vec![0, 3]]).is_err());
        let p = Partition::new(vec![vec![2, 1], vec![0]]).unwrap();
        assert_eq!(p.cells(), &[vec![0], vec![1, 2]]);
        assert_eq!(p.same_cell_pairs().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn eep_examples() {
        let p3 = path(3);
        assert!(is_eep(&p3, &Partition::singletons(3)).unwrap());
        let petals = Partition::new(vec![vec![0], vec![1, 2, 3]]).unwrap();
        assert!(is_eep(&star4(), &petals).unwrap());
        let bad = Partition::new(vec![vec![0], vec![1, 2]]).unwrap();
        assert!(!is_eep(&p3, &bad).unwrap());
        assert!(matches!(is_eep(&p3, &Partition::singletons(2)), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn eep_ignores_edges_inside_a_cell() {
        // Triangle 1-2-3 plus pendant 4 on node 3; all hang from leader 0.
        let g = net(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3), (3, 4)], &[0]);
        let p = Partition::new(vec![vec![0], vec![1, 2], vec![3], vec![4]]).unwrap();
        assert!(is_eep(&g, &p).unwrap());
    }

    #[test]
    fn maximal_eep_examples() {
        assert_eq!(maximal_leader_invariant_eep(&star4()).cells(), &[vec![0], vec![1, 2, 3]]);
        assert_eq!(maximal_leader_invariant_eep(&path(3)), Partition::singletons(3));
        assert_eq!(maximal_leader_invariant_eep(&net(1, &[], &[0])).len(), 1);
        let k3 = maximal_leader_invariant_eep(&complete(3));
        assert_eq!(k3.cells(), &[vec![0], vec![1, 2]]);
    }

    #[test]
    fn center_leader_on_path_pairs_mirror_nodes() {
        let g = path(5).with_leaders(&[2]).unwrap();
        let p = maximal_leader_invariant_eep(&g);
        assert_eq!(p.cells(), &[vec![0, 4], vec![1, 3], vec![2]]);
    }

    #[test]
    fn distance_partition_examples() {
        assert_eq!(distance_partition(&path(4), 0).unwrap().len(), 4);
        assert_eq!(distance_partition(&complete(5), 0).unwrap().len(), 2);
        assert_eq!(distance_partition(&cycle(6), 0).unwrap().len(), 4);
        let split = net(3, &[(0, 1)], &[0]);
        assert_eq!(distance_partition(&split, 0), Err(Error::Disconnected));
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(upper_bound(&star4()).unwrap(), 2);
        for n in 1..8 {
            assert_eq!(upper_bound(&path(n)).unwrap(), n);
        }
        assert_eq!(upper_bound(&complete(3)).unwrap(), 2);
        assert_eq!(upper_bound(&net(2, &[], &[0])), Err(Error::Disconnected));
    }

    #[test]
    fn every_node_a_leader() {
        let g = complete(3).with_leaders(&[0, 1, 2]).unwrap();
        assert_eq!(maximal_leader_invariant_eep(&g), Partition::singletons(3));
    }

    #[test]
    fn serializes_as_sorted_cells() {
        let p = Partition::new(vec![vec![3, 1], vec![2, 0]]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[0,2],[1,3]]");
    }
}
