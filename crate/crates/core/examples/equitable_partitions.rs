//! Maximal leader-invariant external equitable partitions and distance
//! partitions.
//!
//!     cargo run --example equitable_partitions

use lfnet::gen;
use lfnet::partition::{distance_partition, is_eep, maximal_leader_invariant_eep};
use lfnet::{Network, Partition};

fn show(name: &str, net: &Network) -> lfnet::Result<()> {
    let eep = maximal_leader_invariant_eep(net);
    println!("{name}: leaders {:?}", net.leaders());
    println!("  maximal EEP ({} cells): {:?}", eep.len(), eep.cells());
    for k in 0..net.leader_count() {
        let dp = distance_partition(net, k)?;
        println!("  distances from leader {}: {:?}", net.leaders()[k], dp.cells());
    }
    Ok(())
}

fn main() -> lfnet::Result<()> {
    show("star S6", &gen::star(6, &[0])?)?;
    show("cycle C6", &gen::cycle(6, &[0])?)?;
    show("path P7, middle leader", &gen::path(7, &[3])?)?;
    show("3x3 grid, center leader", &gen::grid(3, 3, &[4])?)?;
    show("3x3 grid, two corners", &gen::grid(3, 3, &[0, 8])?)?;

    // Equitability only counts neighbors in other cells.
    let p3 = gen::path(3, &[0])?;
    let coarse = Partition::new(vec![vec![0], vec![1, 2]])?;
    println!("P3 with cells {{0}} {{1,2}} equitable: {}", is_eep(&p3, &coarse)?);
    Ok(())
}
