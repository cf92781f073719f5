//! Distance-vector sequences and the lower bound they give on the rank of
//! the controllability matrix.
//!
//! A sequence `d^1, ..., d^L` of distance vectors is admissible when every
//! entry `d^p` has a coordinate `k_p` that is strictly smaller than the same
//! coordinate of every later entry. The longest admissible sequence over a
//! network's distance vectors bounds `rank(Γ)` from below; the number of
//! cells of the maximal leader-invariant EEP bounds it from above.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::controllability::controllability_matrix;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Network};
use crate::partition::{maximal_leader_invariant_eep, Partition};

/// Default size limit for [`brute_force_max_sequence`].
pub const BRUTE_FORCE_CAP: usize = 10;

/// One sequence element: a distance vector and the coordinate that every
/// later element must strictly exceed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SequenceEntry {
    pub vector: Vec<usize>,
    pub k: usize,
}

impl SequenceEntry {
    pub fn new(vector: Vec<usize>, k: usize) -> Self {
        Self { vector, k }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DistanceSequence {
    entries: Vec<SequenceEntry>,
}

impl DistanceSequence {
    pub fn new(entries: Vec<SequenceEntry>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[SequenceEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True iff `[d^q]_{k_p} > [d^p]_{k_p}` for all `p < q`.
    pub fn check_rule(&self) -> bool {
        self.entries.iter().enumerate().all(|(p, e)| {
            e.k < e.vector.len()
                && self.entries[p + 1..]
                    .iter()
                    .all(|later| later.vector.get(e.k).is_some_and(|&v| v > e.vector[e.k]))
        })
    }
}

/// Renders entries as `(0*, 3) (3, 0*) ...`, starring the chosen coordinate.
impl fmt::Display for DistanceSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, e) in self.entries.iter().enumerate() {
            if p > 0 {
                f.write_str(" ")?;
            }
            f.write_str("(")?;
            for (j, v) in e.vector.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
                if j == e.k {
                    f.write_str("*")?;
                }
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Sorted, duplicate-free set of distance vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CandidateSet(Vec<Vec<usize>>);

impl CandidateSet {
    pub fn new(mut vectors: Vec<Vec<usize>>) -> Self {
        vectors.sort_unstable();
        vectors.dedup();
        Self(vectors)
    }

    pub fn vectors(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn column_min(&self, col: usize) -> Option<usize> {
        self.0.iter().map(|v| v[col]).min()
    }

    /// Lexicographically smallest vector attaining the minimum of `col`.
    pub fn min_vector(&self, col: usize) -> Option<&Vec<usize>> {
        let min = self.column_min(col)?;
        self.0.iter().find(|v| v[col] == min)
    }

    /// The set left after dropping every vector attaining the minimum of `col`.
    pub fn without_column_min(&self, col: usize) -> Self {
        let Some(min) = self.column_min(col) else {
            return Self::default();
        };
        Self(self.0.iter().filter(|v| v[col] != min).cloned().collect())
    }
}

/// The set of distinct rows of a distance matrix.
pub fn distance_vector_set(dm: &DistanceMatrix) -> CandidateSet {
    CandidateSet::new(dm.rows().to_vec())
}

/// Longest admissible sequence length and one sequence attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxSequence {
    pub length: usize,
    pub witness: DistanceSequence,
}

fn check_dimensions(vectors: &[Vec<usize>], m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::DimensionMismatch("leader count must be positive".into()));
    }
    match vectors.iter().find(|v| v.len() != m) {
        Some(v) => Err(Error::DimensionMismatch(format!(
            "vector of length {} with {m} leaders",
            v.len()
        ))),
        None => Ok(()),
    }
}

/// How [`algorithm_one_with`] stores each level of candidate sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frontier {
    /// Equal candidate sets within a level are merged.
    Dedup,
    /// Every child of every set is kept, as in the unpruned search tree.
    Tree,
}

struct LevelNode {
    set: CandidateSet,
    parent: usize,
    column: usize,
}

/// Maximum admissible sequence length by level-wise expansion.
///
/// Level 1 holds the full set. Each set on a level has `m` children, one per
/// coordinate `j`, obtained by dropping every vector attaining the minimum of
/// coordinate `j`; empty children are discarded. The length is the number of
/// non-empty levels. Restricting each step to a column minimum loses nothing,
/// because a longest sequence always picks a minimum of its chosen
/// coordinate over the remaining candidates.
pub fn algorithm_one(vectors: &[Vec<usize>], m: usize) -> Result<MaxSequence> {
    algorithm_one_with(vectors, m, Frontier::Dedup)
}

pub fn algorithm_one_with(vectors: &[Vec<usize>], m: usize, frontier: Frontier) -> Result<MaxSequence> {
    check_dimensions(vectors, m)?;
    let start = CandidateSet::new(vectors.to_vec());
    if start.is_empty() {
        return Ok(MaxSequence {
            length: 0,
            witness: DistanceSequence::default(),
        });
    }

    let mut levels: Vec<Vec<LevelNode>> = vec![vec![LevelNode {
        set: start,
        parent: usize::MAX,
        column: usize::MAX,
    }]];
    loop {
        let current = levels.last().expect("at least one level");
        let mut next: Vec<LevelNode> = Vec::new();
        let mut seen: HashMap<CandidateSet, usize> = HashMap::new();
        for (i, node) in current.iter().enumerate() {
            for j in 0..m {
                let child = node.set.without_column_min(j);
                if child.is_empty() {
                    continue;
                }
                if frontier == Frontier::Dedup {
                    if seen.contains_key(&child) {
                        continue;
                    }
                    seen.insert(child.clone(), next.len());
                }
                next.push(LevelNode {
                    set: child,
                    parent: i,
                    column: j,
                });
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }

    // Walk parent pointers back from the first set of the deepest level.
    let length = levels.len();
    let mut entries = Vec::with_capacity(length);
    let mut idx = 0;
    let mut column = 0;
    for level in levels.iter().rev() {
        let node = &level[idx];
        let vector = node.set.min_vector(column).expect("level sets are non-empty");
        entries.push(SequenceEntry::new(vector.clone(), column));
        idx = node.parent;
        column = node.column;
    }
    entries.reverse();
    Ok(MaxSequence {
        length,
        witness: DistanceSequence::new(entries),
    })
}

/// Exhaustive search over every admissible sequence, memoized on the set of
/// remaining candidates.
///
/// From a remaining set `C`, any vector `v` in `C` with any coordinate `k`
/// may come next; afterwards only vectors whose coordinate `k` exceeds
/// `v[k]` stay eligible. Every admissible sequence is a path of such moves.
pub struct ExhaustiveSearch {
    vectors: Vec<Vec<usize>>,
    m: usize,
    best: HashMap<u64, usize>,
}

/// One move of the exhaustive search: append `vectors[index]` with coordinate `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub index: usize,
    pub k: usize,
}

impl ExhaustiveSearch {
    pub fn new(vectors: &[Vec<usize>], m: usize, cap: usize) -> Result<Self> {
        check_dimensions(vectors, m)?;
        let set = CandidateSet::new(vectors.to_vec());
        if set.len() > cap.min(63) {
            return Err(Error::TooLarge { size: set.len(), cap });
        }
        let mut search = Self {
            vectors: set.0,
            m,
            best: HashMap::new(),
        };
        search.solve(search.full_mask());
        Ok(search)
    }

    pub fn vectors(&self) -> &[Vec<usize>] {
        &self.vectors
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.vectors.len()) - 1
    }

    /// Remaining set after appending `mv` in state `mask`.
    pub fn apply(&self, mask: u64, mv: Move) -> u64 {
        let pivot = self.vectors[mv.index][mv.k];
        let mut out = mask;
        for (u, vec) in self.vectors.iter().enumerate() {
            if vec[mv.k] <= pivot {
                out &= !(1u64 << u);
            }
        }
        out
    }

    pub fn moves(&self, mask: u64) -> impl Iterator<Item = Move> + '_ {
        let m = self.m;
        (0..self.vectors.len())
            .filter(move |&i| mask & (1u64 << i) != 0)
            .flat_map(move |index| (0..m).map(move |k| Move { index, k }))
    }

    fn solve(&mut self, mask: u64) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&b) = self.best.get(&mask) {
            return b;
        }
        let moves: Vec<Move> = self.moves(mask).collect();
        let mut best = 0;
        for mv in moves {
            let next = self.apply(mask, mv);
            best = best.max(1 + self.solve(next));
        }
        self.best.insert(mask, best);
        best
    }

    /// Longest admissible sequence starting from state `mask`.
    pub fn best_from(&self, mask: u64) -> usize {
        if mask == 0 {
            0
        } else {
            self.best[&mask]
        }
    }

    pub fn max_length(&self) -> usize {
        self.best_from(self.full_mask())
    }

    /// Moves from `mask` that still lead to a longest sequence.
    pub fn optimal_moves(&self, mask: u64) -> Vec<Move> {
        let target = self.best_from(mask);
        self.moves(mask)
            .filter(|&mv| 1 + self.best_from(self.apply(mask, mv)) == target)
            .collect()
    }

    /// One longest sequence, taking the first optimal move at each step.
    pub fn witness(&self) -> DistanceSequence {
        let mut mask = self.full_mask();
        let mut entries = Vec::new();
        while mask != 0 {
            let mv = self.optimal_moves(mask)[0];
            entries.push(SequenceEntry::new(self.vectors[mv.index].clone(), mv.k));
            mask = self.apply(mask, mv);
        }
        DistanceSequence::new(entries)
    }

    /// Checks that on every longest sequence, each chosen coordinate value
    /// is the minimum of that coordinate over the candidates still
    /// remaining. Returns the number of optimal moves inspected, or the first
    /// `(mask, move)` that breaks the condition.
    pub fn check_greedy_minimum(&self) -> std::result::Result<usize, (u64, Move)> {
        let mut stack = vec![self.full_mask()];
        let mut visited = std::collections::HashSet::new();
        let mut inspected = 0;
        while let Some(mask) = stack.pop() {
            if mask == 0 || !visited.insert(mask) {
                continue;
            }
            for mv in self.optimal_moves(mask) {
                inspected += 1;
                let min = self
                    .vectors
                    .iter()
                    .enumerate()
                    .filter(|(u, _)| mask & (1u64 << u) != 0)
                    .map(|(_, v)| v[mv.k])
                    .min()
                    .expect("non-empty state");
                if self.vectors[mv.index][mv.k] != min {
                    return Err((mask, mv));
                }
                stack.push(self.apply(mask, mv));
            }
        }
        Ok(inspected)
    }
}

/// Longest admissible sequence by exhaustive search; limited to
/// [`BRUTE_FORCE_CAP`] distinct vectors.
pub fn brute_force_max_sequence(vectors: &[Vec<usize>], m: usize) -> Result<MaxSequence> {
    brute_force_with_cap(vectors, m, BRUTE_FORCE_CAP)
}

pub fn brute_force_with_cap(vectors: &[Vec<usize>], m: usize, cap: usize) -> Result<MaxSequence> {
    let search = ExhaustiveSearch::new(vectors, m, cap)?;
    Ok(MaxSequence {
        length: search.max_length(),
        witness: search.witness(),
    })
}

/// Lower bound on `rank(Γ)`: the longest admissible sequence over the
/// network's distance vectors.
pub fn lower_bound(net: &Network) -> Result<MaxSequence> {
    net.require_connected()?;
    let dist = net.bfs_distances()?;
    let set = distance_vector_set(&dist);
    algorithm_one(set.vectors(), net.leader_count())
}

/// Lower bound, exact rank, and upper bound for one network, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub lower: usize,
    pub rank: usize,
    pub upper: usize,
    pub witness_sequence: DistanceSequence,
    pub eep_cells: Partition,
}

impl BoundsReport {
    pub fn is_tight(&self) -> bool {
        self.lower == self.upper
    }
}

pub fn bounds_report(net: &Network) -> Result<BoundsReport> {
    net.require_connected()?;
    let lower = lower_bound(net)?;
    let rank = controllability_matrix(net).rank();
    let eep = maximal_leader_invariant_eep(net);
    let upper = eep.len();
    if !(lower.length <= rank && rank <= upper) {
        return Err(Error::SandwichViolation {
            lower: lower.length,
            rank,
            upper,
        });
    }
    Ok(BoundsReport {
        lower: lower.length,
        rank,
        upper,
        witness_sequence: lower.witness,
        eep_cells: eep,
    })
}
