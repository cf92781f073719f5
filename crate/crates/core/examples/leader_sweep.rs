//! Bounds for every single- and two-leader placement on one graph.
//!
//!     cargo run --release --example leader_sweep

use lfnet::{bounds_report, gen};

fn main() -> lfnet::Result<()> {
    let base = gen::grid(3, 3, &[0])?;
    println!("3x3 grid");
    println!("leaders   lower rank upper");
    let n = base.node_count();
    let mut placements: Vec<Vec<usize>> = (0..n).map(|a| vec![a]).collect();
    for a in 0..n {
        for b in a + 1..n {
            placements.push(vec![a, b]);
        }
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for leaders in placements {
        let net = base.with_leaders(&leaders)?;
        let r = bounds_report(&net)?;
        println!("{:<9} {:>5} {:>4} {:>5}", format!("{leaders:?}"), r.lower, r.rank, r.upper);
        if best.as_ref().is_none_or(|(rank, _)| r.rank > *rank) {
            best = Some((r.rank, leaders));
        }
    }
    if let Some((rank, leaders)) = best {
        println!("first placement reaching rank {rank}: {leaders:?}");
    }
    Ok(())
}
