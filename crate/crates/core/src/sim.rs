//! Numerical integration of the controlled consensus dynamics
//! `x' = -L x + B u`.

use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Network;
use crate::partition::maximal_leader_invariant_eep;

/// Piecewise-constant leader inputs: segment `i` applies `values` from
/// `start` until the next segment's start. No segments means zero input.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct InputSchedule {
    segments: Vec<(f64, Vec<f64>)>,
}

impl InputSchedule {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(segments: Vec<(f64, Vec<f64>)>) -> Result<Self> {
        if let Some((start, _)) = segments.first() {
            if *start != 0.0 {
                return Err(Error::InvalidSchedule(format!("first segment starts at {start}, not 0")));
            }
        }
        if let Some(w) = segments.windows(2).find(|w| w[1].0.partial_cmp(&w[0].0) != Some(std::cmp::Ordering::Greater)) {
            return Err(Error::InvalidSchedule(format!(
                "breakpoint {} does not follow {}",
                w[1].0, w[0].0
            )));
        }
        if let Some(w) = segments.windows(2).find(|w| w[0].1.len() != w[1].1.len()) {
            return Err(Error::InvalidSchedule(format!(
                "segment at {} has {} inputs, previous has {}",
                w[1].0,
                w[1].1.len(),
                w[0].1.len()
            )));
        }
        Ok(Self { segments })
    }

    /// Parses lines of `t u_1 ... u_m`, whitespace or comma separated.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut segments = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let values: Vec<f64> = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<f64>()
                        .map_err(|_| Error::Parse(format!("schedule line {}: bad number {t:?}", lineno + 1)))
                })
                .collect::<Result<_>>()?;
            let (start, u) = values
                .split_first()
                .ok_or_else(|| Error::Parse(format!("schedule line {}: empty", lineno + 1)))?;
            segments.push((*start, u.to_vec()));
        }
        Self::new(segments)
    }

    pub fn segments(&self) -> &[(f64, Vec<f64>)] {
        &self.segments
    }

    /// Input vector in effect at time `t`; `None` under zero input.
    pub fn at(&self, t: f64) -> Option<&[f64]> {
        let idx = self.segments.partition_point(|(start, _)| *start <= t);
        idx.checked_sub(1).map(|i| self.segments[i].1.as_slice())
    }

    /// Random schedule with 1 to 5 segments starting before `t_end`, each
    /// input drawn uniformly from `[-bound, bound]`.
    pub fn random<R: Rng>(m: usize, t_end: f64, bound: f64, rng: &mut R) -> Self {
        let count = rng.gen_range(1..=5);
        let mut starts: Vec<f64> = vec![0.0];
        for _ in 1..count {
            starts.push(rng.gen_range(0.0..t_end.max(f64::MIN_POSITIVE)));
        }
        starts.sort_by(f64::total_cmp);
        starts.dedup();
        let segments = starts
            .into_iter()
            .map(|s| (s, (0..m).map(|_| rng.gen_range(-bound..=bound)).collect()))
            .collect();
        Self::new(segments).expect("sorted distinct breakpoints from zero")
    }
}

/// Sampled states; row `i` is the state at `times[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
}

impl Trajectory {
    pub fn final_state(&self) -> &[f64] {
        self.states.last().expect("trajectory holds the initial state")
    }

    /// CSV with header `t,x0,...,x{n-1}` and one row per sample.
    pub fn to_csv(&self) -> String {
        let n = self.states.first().map_or(0, Vec::len);
        let mut out = String::from("t");
        for i in 0..n {
            let _ = write!(out, ",x{i}");
        }
        out.push('\n');
        for (t, x) in self.times.iter().zip(&self.states) {
            let _ = write!(out, "{t}");
            for v in x {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }
}

/// Largest step accepted for a network: `2 / (2 * maxdeg)`, since the
/// Laplacian spectrum lies in `[0, 2 * maxdeg]`.
pub fn max_stable_step(net: &Network) -> f64 {
    match net.max_degree() {
        0 => f64::INFINITY,
        d => 1.0 / d as f64,
    }
}

fn derivative(net: &Network, x: &[f64], u: Option<&[f64]>, out: &mut [f64]) {
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = net.neighbors(i).iter().map(|&j| x[j] - x[i]).sum();
    }
    if let Some(u) = u {
        for (&leader, &value) in net.leaders().iter().zip(u) {
            out[leader] += value;
        }
    }
}

/// Fixed-step classical RK4 from `x0` over `[0, t_end]`; the last step is
/// shortened to land on `t_end`. Inputs are sampled at each stage time.
pub fn simulate(net: &Network, x0: &[f64], sched: &InputSchedule, t_end: f64, dt: f64) -> Result<Trajectory> {
    let n = net.node_count();
    if x0.len() != n {
        return Err(Error::InvalidParams(format!("x0 has {} entries, network has {n} nodes", x0.len())));
    }
    if dt.is_nan() || dt <= 0.0 || t_end.is_nan() || t_end < 0.0 || !t_end.is_finite() {
        return Err(Error::InvalidParams(format!("need dt > 0 and finite t_end >= 0, got dt={dt}, t_end={t_end}")));
    }
    if let Some((_, u)) = sched.segments().first() {
        if u.len() != net.leader_count() {
            return Err(Error::InvalidSchedule(format!(
                "{} inputs for {} leaders",
                u.len(),
                net.leader_count()
            )));
        }
    }
    let limit = max_stable_step(net);
    if dt >= limit {
        return Err(Error::UnstableStep { dt, limit });
    }

    let steps = (t_end / dt - 1e-9).ceil().max(0.0) as usize;
    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    let mut x = x0.to_vec();
    let mut t = 0.0;
    times.push(t);
    states.push(x.clone());

    let (mut k1, mut k2, mut k3, mut k4) = (vec![0.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n]);
    let mut tmp = vec![0.0; n];
    for step in 0..steps {
        let h = if step + 1 == steps { t_end - t } else { dt };
        derivative(net, &x, sched.at(t), &mut k1);
        for i in 0..n {
            tmp[i] = x[i] + 0.5 * h * k1[i];
        }
        derivative(net, &tmp, sched.at(t + 0.5 * h), &mut k2);
        for i in 0..n {
            tmp[i] = x[i] + 0.5 * h * k2[i];
        }
        derivative(net, &tmp, sched.at(t + 0.5 * h), &mut k3);
        for i in 0..n {
            tmp[i] = x[i] + h * k3[i];
        }
        derivative(net, &tmp, sched.at(t + h), &mut k4);
        for i in 0..n {
            x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        t = if step + 1 == steps { t_end } else { t + h };
        times.push(t);
        states.push(x.clone());
    }
    Ok(Trajectory { times, states })
}

/// Largest `|x_k - x_l|` at the end of the trajectory over node pairs that
/// share a cell of the maximal leader-invariant EEP, across `trials` runs with
/// random initial states in `[-1, 1]` and random inputs in `[-1, 1]`.
pub fn check_theorem1(net: &Network, trials: usize, t_end: f64, dt: f64, seed: u64) -> Result<f64> {
    net.require_connected()?;
    let eep = maximal_leader_invariant_eep(net);
    let pairs: Vec<_> = eep.same_cell_pairs().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let x0: Vec<f64> = (0..net.node_count()).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let sched = InputSchedule::random(net.leader_count(), t_end, 1.0, &mut rng);
        let traj = simulate(net, &x0, &sched, t_end, dt)?;
        let x = traj.final_state();
        for &(k, l) in &pairs {
            worst = worst.max((x[k] - x[l]).abs());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net(n: usize, edges: &[(usize, usize)], leaders: &[usize]) -> Network {
        Network::new(n, edges, leaders).unwrap()
    }

    #[test]
    fn equal_states_stay_put() {
        let g = net(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], &[1]);
        let traj = simulate(&g, &[0.7; 4], &InputSchedule::zero(), 2.0, 0.01).unwrap();
        for x in &traj.states {
            for v in x {
                assert!((v - 0.7).abs() < 1e-15);
            }
        }
        assert_eq!(traj.times.len(), traj.states.len());
        assert_eq!(*traj.times.last().unwrap(), 2.0);
    }

    #[test]
    fn p2_meets_at_the_mean() {
        let g = net(2, &[(0, 1)], &[0]);
        let traj = simulate(&g, &[1.0, 0.0], &InputSchedule::zero(), 20.0, 0.01).unwrap();
        // x0 - x1 decays like exp(-2t)
        let x = traj.final_state();
        assert!((x[0] - 0.5).abs() < 1e-12 && (x[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn rk4_matches_closed_form_on_p2() {
        let g = net(2, &[(0, 1)], &[0]);
        let traj = simulate(&g, &[1.0, 0.0], &InputSchedule::zero(), 1.0, 0.01).unwrap();
        let expected = 0.5 + 0.5 * (-2.0f64).exp();
        assert!((traj.final_state()[0] - expected).abs() < 1e-9);
    }

    #[test]
    fn zero_input_preserves_the_sum() {
        let g = net(5, &[(0, 1), (1, 2), (1, 3), (3, 4), (2, 4)], &[0]);
        let x0 = [0.3, -1.0, 0.25, 0.9, -0.1];
        let traj = simulate(&g, &x0, &InputSchedule::zero(), 5.0, 0.01).unwrap();
        let s0: f64 = x0.iter().sum();
        for x in &traj.states {
            assert!((x.iter().sum::<f64>() - s0).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_large_steps() {
        let g = net(3, &[(0, 1), (1, 2)], &[0]);
        assert_eq!(
            simulate(&g, &[0.0; 3], &InputSchedule::zero(), 1.0, 0.5),
            Err(Error::UnstableStep { dt: 0.5, limit: 0.5 })
        );
        assert!(matches!(
            simulate(&g, &[0.0; 3], &InputSchedule::zero(), 1.0, 0.0),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            simulate(&g, &[0.0; 2], &InputSchedule::zero(), 1.0, 0.1),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn schedule_lookup_and_validation() {
        let s = InputSchedule::new(vec![(0.0, vec![1.0]), (2.0, vec![-1.0])]).unwrap();
        assert_eq!(s.at(0.0), Some(&[1.0][..]));
        assert_eq!(s.at(1.999), Some(&[1.0][..]));
        assert_eq!(s.at(2.0), Some(&[-1.0][..]));
        assert!(InputSchedule::new(vec![(1.0, vec![1.0])]).is_err());
        assert!(InputSchedule::new(vec![(0.0, vec![1.0]), (0.0, vec![2.0])]).is_err());
        let parsed = InputSchedule::parse("# t u\n0 1.5\n\n3,0\n").unwrap();
        assert_eq!(parsed.segments(), &[(0.0, vec![1.5]), (3.0, vec![0.0])]);
        assert!(InputSchedule::parse("0 x").is_err());
    }

    #[test]
    fn constant_input_drives_the_leader() {
        let g = net(1, &[], &[0]);
        let s = InputSchedule::new(vec![(0.0, vec![2.0])]).unwrap();
        let traj = simulate(&g, &[0.0], &s, 3.0, 0.1).unwrap();
        assert!((traj.final_state()[0] - 6.0).abs() < 1e-12);
    }

    #[test]
    fn csv_layout() {
        let g = net(2, &[(0, 1)], &[0]);
        let traj = simulate(&g, &[1.0, 0.0], &InputSchedule::zero(), 0.1, 0.1).unwrap();
        let csv = traj.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t,x0,x1"));
        assert_eq!(lines.next(), Some("0,1,0"));
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn star_petals_converge_under_input() {
        let g = net(4, &[(0, 1), (0, 2), (0, 3)], &[0]);
        assert!(check_theorem1(&g, 3, 30.0, 0.01, 1).unwrap() < 1e-6);
        let k3 = net(3, &[(0, 1), (0, 2), (1, 2)], &[0]);
        assert!(check_theorem1(&k3, 3, 30.0, 0.01, 2).unwrap() < 1e-6);
        let p3 = net(3, &[(0, 1), (1, 2)], &[0]);
        assert_eq!(check_theorem1(&p3, 2, 1.0, 0.01, 3).unwrap(), 0.0);
    }
}
