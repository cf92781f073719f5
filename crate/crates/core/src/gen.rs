//! Graph families for experiments and tests.
//!
//! Random graphs use [`ChaCha8Rng`](rand_chacha::ChaCha8Rng) when seeded
//! via [`random_seeded`], so a seed reproduces the same graph on every
//! platform.

use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Network;

/// Attempts made by [`random_connected`] before giving up.
pub const MAX_CONNECTIVITY_RETRIES: usize = 1000;

fn require_nodes(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParams("need at least one node".into()))
    } else {
        Ok(())
    }
}

pub fn path(n: usize, leaders: &[usize]) -> Result<Network> {
    require_nodes(n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Network::new(n, &edges, leaders)
}

pub fn cycle(n: usize, leaders: &[usize]) -> Result<Network> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Network::new(n, &edges, leaders)
}

/// Star with center 0 and petals `1..n`.
pub fn star(n: usize, leaders: &[usize]) -> Result<Network> {
    require_nodes(n)?;
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Network::new(n, &edges, leaders)
}

pub fn complete(n: usize, leaders: &[usize]) -> Result<Network> {
    require_nodes(n)?;
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Network::new(n, &edges, leaders)
}

/// `rows × cols` grid; node `r * cols + c` sits at row `r`, column `c`.
pub fn grid(rows: usize, cols: usize, leaders: &[usize]) -> Result<Network> {
    require_nodes(rows * cols)?;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Network::new(rows * cols, &edges, leaders)
}

/// Erdős–Rényi graph with edge probability `p`, resampled until connected,
/// with `leader_count` distinct leaders drawn uniformly.
pub fn random_connected<R: Rng>(n: usize, p: f64, leader_count: usize, rng: &mut R) -> Result<Network> {
    require_nodes(n)?;
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParams(format!("edge probability must be in (0, 1], got {p}")));
    }
    if leader_count == 0 || leader_count > n {
        return Err(Error::InvalidParams(format!(
            "leader count must be in 1..={n}, got {leader_count}"
        )));
    }
    for _ in 0..MAX_CONNECTIVITY_RETRIES {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let candidate = Network::new(n, &edges, &[0])?;
        if candidate.is_connected() {
            let leaders = sample(rng, n, leader_count).into_vec();
            return candidate.with_leaders(&leaders);
        }
    }
    Err(Error::ConnectivityRetriesExceeded(MAX_CONNECTIVITY_RETRIES))
}

pub fn random_seeded(n: usize, p: f64, leader_count: usize, seed: u64) -> Result<Network> {
    random_connected(n, p, leader_count, &mut ChaCha8Rng::seed_from_u64(seed))
}
