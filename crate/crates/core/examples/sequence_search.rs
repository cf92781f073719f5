//! Longest admissible distance-vector sequence on a hand-made set of
//! two-leader vectors, by level search and by exhaustive search.
//!
//!     cargo run --example sequence_search

use lfnet::bounds::{
    algorithm_one, algorithm_one_with, brute_force_max_sequence, CandidateSet, DistanceSequence, Frontier,
    SequenceEntry,
};

fn main() -> lfnet::Result<()> {
    let set = vec![vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 1], vec![2, 2], vec![3, 0]];

    let manual = DistanceSequence::new(vec![
        SequenceEntry::new(vec![0, 3], 0),
        SequenceEntry::new(vec![3, 0], 1),
        SequenceEntry::new(vec![2, 1], 1),
        SequenceEntry::new(vec![1, 2], 0),
        SequenceEntry::new(vec![2, 2], 0),
    ]);
    println!("hand-built sequence {manual}: admissible = {}", manual.check_rule());

    // Show the candidate sets level by level.
    let mut level = vec![CandidateSet::new(set.clone())];
    let mut depth = 1;
    while !level.is_empty() {
        let rendered: Vec<String> = level.iter().map(|c| format!("{:?}", c.vectors())).collect();
        println!("level {depth}: {} set(s)  {}", level.len(), rendered.join("  "));
        let mut next: Vec<CandidateSet> = level
            .iter()
            .flat_map(|c| (0..2).map(move |j| c.without_column_min(j)))
            .filter(|c| !c.is_empty())
            .collect();
        next.sort();
        next.dedup();
        level = next;
        depth += 1;
    }

    let levels = algorithm_one(&set, 2)?;
    let tree = algorithm_one_with(&set, 2, Frontier::Tree)?;
    let brute = brute_force_max_sequence(&set, 2)?;
    println!("level search:      {} via {}", levels.length, levels.witness);
    println!("unpruned tree:     {}", tree.length);
    println!("exhaustive search: {} via {}", brute.length, brute.witness);
    Ok(())
}
