//! Integrate x' = -Lx + Bu and watch nodes that share an equitable cell
//! converge, whatever the leader input.
//!
//!     cargo run --release --example consensus_simulation > trajectory.csv

use lfnet::partition::maximal_leader_invariant_eep;
use lfnet::sim::{check_theorem1, simulate, InputSchedule};
use lfnet::gen;

fn main() -> lfnet::Result<()> {
    let net = gen::path(5, &[2])?;
    let eep = maximal_leader_invariant_eep(&net);
    eprintln!("cells {:?}", eep.cells());

    let sched = InputSchedule::new(vec![(0.0, vec![1.0]), (3.0, vec![-2.0]), (6.0, vec![0.5])])?;
    let x0 = [1.0, -0.5, 0.0, 0.3, -1.0];
    let traj = simulate(&net, &x0, &sched, 20.0, 0.01)?;
    let x = traj.final_state();
    eprintln!("final |x0 - x4| = {:.3e}, |x1 - x3| = {:.3e}", (x[0] - x[4]).abs(), (x[1] - x[3]).abs());

    for t_end in [1.0, 5.0, 10.0, 20.0] {
        let r = check_theorem1(&net, 5, t_end, 0.01, 42)?;
        eprintln!("t = {t_end:>4}: worst same-cell gap {r:.3e}");
    }
    print!("{}", traj.to_csv());
    Ok(())
}
