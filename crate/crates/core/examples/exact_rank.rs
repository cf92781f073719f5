//! Exact controllability rank on a graph large enough that Laplacian powers
//! overflow 64-bit integers.
//!
//!     cargo run --release --example exact_rank

use std::time::Instant;

use lfnet::controllability::{controllability_matrix, input_matrix};
use lfnet::gen;

fn main() -> lfnet::Result<()> {
    let small = gen::path(3, &[0])?;
    let gamma = controllability_matrix(&small);
    println!("P3, leader 0\nB =\n{}Γ =\n{}rank {}\n", input_matrix(&small).matrix(), gamma.matrix(), gamma.rank());

    for (rows, cols, leaders) in [(4, 4, vec![0]), (4, 4, vec![0, 5]), (5, 5, vec![0, 24]), (6, 6, vec![0, 7, 35])] {
        let net = gen::grid(rows, cols, &leaders)?;
        let start = Instant::now();
        let gamma = controllability_matrix(&net);
        println!(
            "{rows}x{cols} grid, leaders {leaders:?}: rank {} of {}, largest entry {} bits, {:?}",
            gamma.rank(),
            net.node_count(),
            gamma.matrix().max_bits(),
            start.elapsed()
        );
    }
    Ok(())
}
