//! Lower bound, exact rank, and upper bound for a few small networks,
//! including one where the distance bound is strictly below the rank.
//!
//!     cargo run --example bounds_report

use lfnet::cli::render_report_text;
use lfnet::{bounds_report, gen, Network};

fn main() -> lfnet::Result<()> {
    let cases = [
        ("path P6, leader at one end", gen::path(6, &[0])?),
        ("star S5, leader at the center", gen::star(5, &[0])?),
        ("complete K4, one leader", gen::complete(4, &[0])?),
        ("path P5, leader in the middle", gen::path(5, &[2])?),
        ("3x3 grid, two corner leaders", gen::grid(3, 3, &[0, 8])?),
        (
            "path 2-0-5-4-3-1, leaders 0 and 4",
            Network::new(6, &[(0, 2), (0, 5), (1, 3), (3, 4), (4, 5)], &[0, 4])?,
        ),
    ];
    for (name, net) in cases {
        let report = bounds_report(&net)?;
        println!("== {name}");
        print!("{}", render_report_text(&net, &report));
        if report.lower < report.rank {
            println!("   distance bound is {} below the rank", report.rank - report.lower);
        }
        if report.rank == net.node_count() {
            println!("   completely controllable");
        }
        println!();
    }
    Ok(())
}
