//! Seeded simple-random-walk engine with exact long-range jumps.
//!
//! Monte Carlo estimators in this crate spend most of their time moving a
//! walker through regions where individual visits are irrelevant (far from
//! every tallied or painted set). Two exact accelerations cover that regime:
//!
//! - **Cube jumps**: the exit position of a walk started at the center of the
//!   `ℓ∞` ball of radius `r` has a fixed distribution; it is computed once per
//!   `(d, r)` by absorbing mass propagation on octahedral-symmetry orbits and
//!   then sampled in O(1). All intermediate sites stay strictly inside the
//!   cube, so a jump is distribution-exact whenever the cube avoids every set
//!   whose visits matter.
//! - **Slab jumps**: the first time one fixed coordinate moves by `±r`. The
//!   coordinate's own step count is drawn from the exact 1D absorption-time
//!   law; the number of interleaved steps of the other coordinates is
//!   negative-binomial (the coordinate clock is an iid uniform pick), and
//!   their displacements are binomial. Intermediate sites keep the chosen
//!   coordinate strictly inside the slab, so the jump is exact whenever the
//!   avoided set lies outside the slab.
//!
//! Both tables fold a residual tail mass below `1e-15` into the final bin;
//! this is the only deviation from the exact law and is recorded in
//! [`TAIL_TOLERANCE`].

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;
use rand_distr::{Distribution, Gamma, Poisson, Uniform};

use crate::lattice::MAX_DIM;

/// Residual probability mass folded into the last bin of each jump table.
pub const TAIL_TOLERANCE: f64 = 1e-15;

/// Cube-jump radii with precomputed exit tables.
pub const CUBE_RADII: [i64; 4] = [2, 4, 8, 16];
/// Slab-jump radii with precomputed absorption-time tables.
pub const SLAB_RADII: [i64; 5] = [4, 8, 16, 32, 64];

// ---------------------------------------------------------------------------
// Octahedral orbits
// ---------------------------------------------------------------------------

/// Canonical representative of the signed-permutation orbit of `v`:
/// absolute values sorted in decreasing order.
fn canonicalize(v: &[i64], out: &mut [i64; MAX_DIM]) {
    let d = v.len();
    for i in 0..d {
        out[i] = v[i].abs();
    }
    out[..d].sort_unstable_by(|a, b| b.cmp(a));
}

fn pack_key(canon: &[i64; MAX_DIM], d: usize) -> u64 {
    let mut key = 0u64;
    for i in 0..d {
        debug_assert!(canon[i] >= 0 && canon[i] < 256);
        key |= (canon[i] as u64) << (8 * i);
    }
    key
}

/// Orbit size of a canonical (sorted, nonnegative) tuple under signed
/// coordinate permutations: `2^{#nonzero} * d! / prod(multiplicities!)`.
fn orbit_size(canon: &[i64], d: usize) -> u64 {
    let nonzero = canon[..d].iter().filter(|&&c| c != 0).count() as u32;
    let mut size = 1u64 << nonzero;
    let mut fact = 1u64;
    for k in 2..=d as u64 {
        fact *= k;
    }
    size *= fact;
    let mut i = 0;
    while i < d {
        let mut j = i;
        while j < d && canon[j] == canon[i] {
            j += 1;
        }
        let mut mult_fact = 1u64;
        for k in 2..=(j - i) as u64 {
            mult_fact *= k;
        }
        size /= mult_fact;
        i = j;
    }
    size
}

/// Applies a uniformly random signed permutation to a canonical tuple.
/// Because the acting group is sampled uniformly, the image is uniform on
/// the orbit regardless of stabilizers.
fn random_orbit_member<R: Rng + ?Sized>(canon: &[i64], d: usize, rng: &mut R, out: &mut [i64]) {
    let mut perm = [0usize; MAX_DIM];
    for (i, p) in perm.iter_mut().enumerate().take(d) {
        *p = i;
    }
    // Fisher-Yates.
    for i in (1..d).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    for i in 0..d {
        let sign = if rng.random_bool(0.5) { 1 } else { -1 };
        out[i] = sign * canon[perm[i]];
    }
}

// ---------------------------------------------------------------------------
// Cube jumps
// ---------------------------------------------------------------------------

/// Exit law of simple random walk from the center of `[-r, r]^d`, reduced to
/// octahedral orbits of the boundary.
pub struct CubeJumpTable {
    pub dim: usize,
    pub radius: i64,
    boundary_reps: Vec<[i64; MAX_DIM]>,
    cumulative: Vec<f64>,
}

impl CubeJumpTable {
    fn build(dim: usize, radius: i64) -> CubeJumpTable {
        assert!((2..=MAX_DIM).contains(&dim));
        assert!(radius >= 1);
        // Enumerate orbit representatives: non-increasing tuples over 0..=r.
        let mut reps: Vec<[i64; MAX_DIM]> = Vec::new();
        let mut index: HashMap<u64, u32> = HashMap::new();
        let mut tuple = [0i64; MAX_DIM];
        enumerate_nonincreasing(dim, 0, radius, &mut tuple, &mut |t| {
            let id = reps.len() as u32;
            index.insert(pack_key(t, dim), id);
            reps.push(*t);
        });
        let n = reps.len();
        let interior: Vec<bool> = reps.iter().map(|t| t[0] < radius).collect();
        // Per-orbit neighbor ids of the representative site.
        let mut neighbors: Vec<[u32; 2 * MAX_DIM]> = vec![[u32::MAX; 2 * MAX_DIM]; n];
        let mut canon = [0i64; MAX_DIM];
        for (oi, rep) in reps.iter().enumerate() {
            let mut site = *rep;
            for axis in 0..dim {
                for (si, delta) in [(0usize, 1i64), (1usize, -1i64)] {
                    site[axis] += delta;
                    if site[..dim].iter().map(|c| c.abs()).max().unwrap() <= radius {
                        canonicalize(&site[..dim], &mut canon);
                        neighbors[oi][2 * axis + si] = index[&pack_key(&canon, dim)];
                    }
                    site[axis] -= delta;
                }
            }
        }
        let sizes: Vec<f64> = reps.iter().map(|t| orbit_size(t, dim) as f64).collect();

        // Mass propagation: mu[o] is the mass carried by EACH site of orbit o.
        let start = index[&pack_key(&[0i64; MAX_DIM], dim)] as usize;
        let mut mu = vec![0f64; n];
        let mut mu_next = vec![0f64; n];
        let mut absorbed = vec![0f64; n];
        mu[start] = 1.0;
        let inv = 1.0 / (2 * dim) as f64;
        loop {
            for o in 0..n {
                let mut inflow = 0.0;
                for &nb in &neighbors[o][..2 * dim] {
                    if nb != u32::MAX {
                        let nb = nb as usize;
                        if interior[nb] {
                            inflow += mu[nb];
                        }
                    }
                }
                let inflow = inflow * inv;
                if interior[o] {
                    mu_next[o] = inflow;
                } else {
                    absorbed[o] += inflow;
                    mu_next[o] = 0.0;
                }
            }
            std::mem::swap(&mut mu, &mut mu_next);
            let alive: f64 = (0..n)
                .filter(|&o| interior[o])
                .map(|o| mu[o] * sizes[o])
                .sum();
            if alive < TAIL_TOLERANCE {
                break;
            }
        }

        // Exit distribution over boundary orbits, tail renormalized.
        let mut boundary_reps = Vec::new();
        let mut weights = Vec::new();
        for o in 0..n {
            if !interior[o] && absorbed[o] > 0.0 {
                boundary_reps.push(reps[o]);
                weights.push(absorbed[o] * sizes[o]);
            }
        }
        let total: f64 = weights.iter().sum();
        debug_assert!((total - 1.0).abs() < 1e-12);
        let mut cumulative = Vec::with_capacity(weights.len());
        let mut acc = 0.0;
        for w in &weights {
            acc += w / total;
            cumulative.push(acc);
        }
        if let Some(last) = cumulative.last_mut() {
            *last = 1.0;
        }
        CubeJumpTable {
            dim,
            radius,
            boundary_reps,
            cumulative,
        }
    }

    /// Samples an exit displacement (relative to the cube center).
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut [i64]) {
        let u: f64 = rng.random();
        let k = self.cumulative.partition_point(|&c| c < u);
        let k = k.min(self.boundary_reps.len() - 1);
        random_orbit_member(&self.boundary_reps[k][..self.dim], self.dim, rng, out);
    }
}

fn enumerate_nonincreasing(
    dim: usize,
    pos: usize,
    max: i64,
    tuple: &mut [i64; MAX_DIM],
    f: &mut impl FnMut(&[i64; MAX_DIM]),
) {
    if pos == dim {
        f(tuple);
        return;
    }
    for v in (0..=max).rev() {
        tuple[pos] = v;
        enumerate_nonincreasing(dim, pos + 1, v, tuple, f);
    }
}

// ---------------------------------------------------------------------------
// Slab jumps
// ---------------------------------------------------------------------------

/// Absorption-time law of the 1D simple random walk started at the center of
/// `[-r, r]`, together with the clock machinery to embed it in `d` dimensions.
pub struct SlabJumpTable {
    pub radius: i64,
    /// `cdf[k] = P[tau <= r + 2k]`; the final entry is exactly 1.
    cdf: Vec<f64>,
}

impl SlabJumpTable {
    fn build(radius: i64) -> SlabJumpTable {
        assert!(radius >= 2);
        let r = radius as usize;
        // alive[x + r - 1] = probability of being at x, |x| <= r-1, unabsorbed.
        let width = 2 * r - 1;
        let mut alive = vec![0f64; width];
        let mut next = vec![0f64; width];
        alive[r - 1] = 1.0;
        let mut cdf = Vec::new();
        let mut absorbed_total = 0.0;
        let mut step = 0usize;
        while absorbed_total < 1.0 - TAIL_TOLERANCE && step <= 200 * r * r + 1000 {
            step += 1;
            let absorbed_now = 0.5 * (alive[0] + alive[width - 1]);
            for x in 0..width {
                let left = if x > 0 { alive[x - 1] } else { 0.0 };
                let right = if x + 1 < width { alive[x + 1] } else { 0.0 };
                next[x] = 0.5 * (left + right);
            }
            std::mem::swap(&mut alive, &mut next);
            absorbed_total += absorbed_now;
            if step >= r && (step - r) % 2 == 0 {
                cdf.push(absorbed_total);
            }
        }
        if let Some(last) = cdf.last_mut() {
            *last = 1.0;
        }
        SlabJumpTable { radius, cdf }
    }

    /// Number of own-coordinate steps until absorption: `tau = r + 2k`.
    pub fn sample_tau<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        let u: f64 = rng.random();
        let k = self.cdf.partition_point(|&c| c < u);
        let k = k.min(self.cdf.len() - 1) as u64;
        self.radius as u64 + 2 * k
    }

    /// Mean of the tabulated absorption time (exactly `r^2` for the true law).
    pub fn mean_tau(&self) -> f64 {
        let mut mean = 0.0;
        let mut prev = 0.0;
        for (k, &c) in self.cdf.iter().enumerate() {
            mean += (c - prev) * (self.radius as f64 + 2.0 * k as f64);
            prev = c;
        }
        mean
    }
}

/// Outcome of a slab jump applied to one coordinate.
pub struct SlabOutcome {
    /// Signed displacement of the slab coordinate (`±r`).
    pub own: i64,
    /// Displacements of the remaining coordinates, in order.
    pub others: [i64; MAX_DIM],
    /// Total number of global lattice steps consumed.
    pub global_steps: u64,
}

/// Executes a slab jump in dimension `dim`: coordinate `tau` law from the
/// table, negative-binomial interleaving clock, multinomial allocation and
/// binomial displacements for the remaining coordinates.
pub fn slab_jump<R: Rng + ?Sized>(table: &SlabJumpTable, dim: usize, rng: &mut R) -> SlabOutcome {
    let n1 = table.sample_tau(rng);
    let side = if rng.random_bool(0.5) { 1 } else { -1 };
    // Global steps: the n1-th pick of this coordinate among iid uniform picks
    // of d coordinates; failures ~ NegBinomial(n1, 1/d) via Gamma-Poisson.
    let failures = if dim == 1 {
        0
    } else {
        let gamma = Gamma::new(n1 as f64, (dim - 1) as f64).expect("gamma params");
        let lambda: f64 = gamma.sample(rng);
        if lambda <= 0.0 {
            0
        } else {
            Poisson::new(lambda).expect("poisson params").sample(rng) as u64
        }
    };
    // Allocate the failures among the other dim-1 coordinates and displace
    // each by a fair-coin walk.
    let mut others = [0i64; MAX_DIM];
    let mut remaining = failures;
    let mut coords_left = dim - 1;
    for slot in others.iter_mut().take(dim - 1) {
        let n_j = if coords_left == 1 {
            remaining
        } else {
            rand_distr::Binomial::new(remaining, 1.0 / coords_left as f64)
                .expect("binomial params")
                .sample(rng)
        };
        remaining -= n_j;
        coords_left -= 1;
        if n_j > 0 {
            let heads = rand_distr::Binomial::new(n_j, 0.5)
                .expect("binomial params")
                .sample(rng);
            *slot = 2 * heads as i64 - n_j as i64;
        }
    }
    SlabOutcome {
        own: side * table.radius,
        others,
        global_steps: n1 + failures,
    }
}

// ---------------------------------------------------------------------------
// Registry and the JumpKit facade
// ---------------------------------------------------------------------------

fn cube_registry() -> &'static Mutex<HashMap<(usize, i64), Arc<CubeJumpTable>>> {
    static REG: OnceLock<Mutex<HashMap<(usize, i64), Arc<CubeJumpTable>>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

fn slab_registry() -> &'static Mutex<HashMap<i64, Arc<SlabJumpTable>>> {
    static REG: OnceLock<Mutex<HashMap<i64, Arc<SlabJumpTable>>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn cube_table(dim: usize, radius: i64) -> Arc<CubeJumpTable> {
    let mut reg = cube_registry().lock().unwrap();
    reg.entry((dim, radius))
        .or_insert_with(|| Arc::new(CubeJumpTable::build(dim, radius)))
        .clone()
}

pub fn slab_table(radius: i64) -> Arc<SlabJumpTable> {
    let mut reg = slab_registry().lock().unwrap();
    reg.entry(radius)
        .or_insert_with(|| Arc::new(SlabJumpTable::build(radius)))
        .clone()
}

/// Per-dimension bundle of jump tables plus the fine-step primitive.
pub struct JumpKit {
    pub dim: usize,
    cubes: Vec<Arc<CubeJumpTable>>,
    slabs: Vec<Arc<SlabJumpTable>>,
}

impl JumpKit {
    pub fn new(dim: usize) -> JumpKit {
        assert!((2..=MAX_DIM).contains(&dim));
        JumpKit {
            dim,
            cubes: CUBE_RADII.iter().map(|&r| cube_table(dim, r)).collect(),
            slabs: SLAB_RADII.iter().map(|&r| slab_table(r)).collect(),
        }
    }

    /// One simple-random-walk step.
    #[inline]
    pub fn fine_step<R: Rng + ?Sized>(&self, rng: &mut R, pos: &mut [i64]) {
        let dir = rng.random_range(0..2 * self.dim as u32);
        let axis = (dir >> 1) as usize;
        pos[axis] += ((dir & 1) as i64) * 2 - 1;
    }

    /// Largest tabulated cube radius `<= allowed`, or 0 if none.
    pub fn cube_radius_for(&self, allowed: i64) -> i64 {
        let mut best = 0;
        for t in &self.cubes {
            if t.radius <= allowed {
                best = t.radius;
            }
        }
        best
    }

    /// Cube jump of the given tabulated radius, applied in place.
    pub fn cube_jump<R: Rng + ?Sized>(&self, rng: &mut R, pos: &mut [i64], radius: i64) {
        let t = self
            .cubes
            .iter()
            .find(|t| t.radius == radius)
            .expect("untabulated cube radius");
        let mut delta = [0i64; MAX_DIM];
        t.sample(rng, &mut delta[..self.dim]);
        for (p, d) in pos.iter_mut().zip(delta.iter()) {
            *p += d;
        }
    }

    /// Largest tabulated slab radius `<= allowed`, or 0 if none.
    pub fn slab_radius_for(&self, allowed: i64) -> i64 {
        let mut best = 0;
        for t in &self.slabs {
            if t.radius <= allowed {
                best = t.radius;
            }
        }
        best
    }

    /// Slab jump on `coord` of the given tabulated radius, applied in place.
    pub fn slab_jump<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        pos: &mut [i64],
        coord: usize,
        radius: i64,
    ) {
        let t = self
            .slabs
            .iter()
            .find(|t| t.radius == radius)
            .expect("untabulated slab radius");
        let out = slab_jump(t, self.dim, rng);
        pos[coord] += out.own;
        let mut oi = 0;
        for axis in 0..self.dim {
            if axis == coord {
                continue;
            }
            pos[axis] += out.others[oi];
            oi += 1;
        }
    }
}

/// Draws a uniformly random site of the sphere `S(0, radius)` in `Z^dim`.
///
/// Sites are classified by the first coordinate index attaining `|c| = R`;
/// class weights are exact in `u128`.
pub fn uniform_sphere_site<R: Rng + ?Sized>(
    dim: usize,
    radius: i64,
    rng: &mut R,
    out: &mut [i64],
) {
    assert!(radius >= 1);
    assert!(radius < 1 << 20, "uniform_sphere_site radius guard");
    let r = radius as u128;
    let mut class_w = [0u128; MAX_DIM];
    let mut total = 0u128;
    for (i, w) in class_w.iter_mut().enumerate().take(dim) {
        *w = (2 * r - 1).pow(i as u32) * (2 * r + 1).pow((dim - 1 - i) as u32);
        total += 2 * *w;
    }
    let mut pick = rng.random_range(0..total);
    let mut pinned = 0usize;
    let mut sign = 1i64;
    for (i, &w) in class_w.iter().enumerate().take(dim) {
        if pick < w {
            pinned = i;
            sign = 1;
            break;
        }
        pick -= w;
        if pick < w {
            pinned = i;
            sign = -1;
            break;
        }
        pick -= w;
    }
    let inner = Uniform::new_inclusive(-(radius - 1), radius - 1).unwrap();
    let full = Uniform::new_inclusive(-radius, radius).unwrap();
    for (i, o) in out.iter_mut().enumerate().take(dim) {
        *o = if i == pinned {
            sign * radius
        } else if i < pinned {
            inner.sample(rng)
        } else {
            full.sample(rng)
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn orbit_sizes_sum_to_cube() {
        for d in 2..=4usize {
            let r = 3i64;
            let mut total = 0u64;
            let mut tuple = [0i64; MAX_DIM];
            enumerate_nonincreasing(d, 0, r, &mut tuple, &mut |t| {
                total += orbit_size(t, d);
            });
            assert_eq!(total as u128, (2 * r as u128 + 1).pow(d as u32));
        }
    }

    #[test]
    fn cube_exit_probabilities_sum_to_one_on_boundary() {
        for d in [2usize, 3, 4] {
            let t = CubeJumpTable::build(d, 4);
            assert!((t.cumulative.last().unwrap() - 1.0).abs() < 1e-12);
            for rep in &t.boundary_reps {
                assert_eq!(rep[0], 4, "exit reps lie on the boundary");
            }
        }
    }

    #[test]
    fn cube_exit_law_matches_step_simulation() {
        // Oracle: direct stepwise simulation of the exit position.
        let d = 3usize;
        let r = 4i64;
        let t = CubeJumpTable::build(d, r);
        let n = 200_000usize;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut canon = [0i64; MAX_DIM];

        let mut table_counts: HashMap<u64, f64> = HashMap::new();
        let mut out = [0i64; MAX_DIM];
        for _ in 0..n {
            t.sample(&mut rng, &mut out[..d]);
            canonicalize(&out[..d], &mut canon);
            *table_counts.entry(pack_key(&canon, d)).or_default() += 1.0;
        }

        let mut sim_counts: HashMap<u64, f64> = HashMap::new();
        for _ in 0..n {
            let mut pos = [0i64; MAX_DIM];
            loop {
                let dir = rng.random_range(0..2 * d as u32);
                let axis = (dir >> 1) as usize;
                pos[axis] += ((dir & 1) as i64) * 2 - 1;
                if pos[..d].iter().map(|c| c.abs()).max().unwrap() == r {
                    break;
                }
            }
            canonicalize(&pos[..d], &mut canon);
            *sim_counts.entry(pack_key(&canon, d)).or_default() += 1.0;
        }

        let keys: std::collections::HashSet<u64> = table_counts
            .keys()
            .chain(sim_counts.keys())
            .cloned()
            .collect();
        let mut tv = 0.0;
        for k in keys {
            let a = table_counts.get(&k).copied().unwrap_or(0.0) / n as f64;
            let b = sim_counts.get(&k).copied().unwrap_or(0.0) / n as f64;
            tv += 0.5 * (a - b).abs();
        }
        assert!(tv < 0.02, "orbit-level TV {tv} too large");
    }

    #[test]
    fn slab_mean_absorption_time_is_r_squared() {
        // E[tau] = r^2 exactly for the centered 1D walk.
        for r in [4i64, 8, 16, 32] {
            let t = SlabJumpTable::build(r);
            let mean = t.mean_tau();
            assert!(
                (mean - (r * r) as f64).abs() < 1e-6 * (r * r) as f64 + 1e-6,
                "r={r}: mean {mean}"
            );
        }
    }

    #[test]
    fn slab_jump_matches_step_simulation() {
        // Oracle: full stepwise simulation until coordinate 0 moves by +-r.
        let d = 3usize;
        let r = 4i64;
        let table = SlabJumpTable::build(r);
        let n = 200_000usize;
        let mut rng = ChaCha8Rng::seed_from_u64(23);

        let mut jump_marginal: HashMap<(i64, i64), f64> = HashMap::new();
        let mut jump_steps = 0f64;
        for _ in 0..n {
            let o = slab_jump(&table, d, &mut rng);
            *jump_marginal.entry((o.own, o.others[0])).or_default() += 1.0;
            jump_steps += o.global_steps as f64;
        }

        let mut sim_marginal: HashMap<(i64, i64), f64> = HashMap::new();
        let mut sim_steps = 0f64;
        for _ in 0..n {
            let mut pos = [0i64; 3];
            let mut steps = 0u64;
            loop {
                let dir = rng.random_range(0..6u32);
                let axis = (dir >> 1) as usize;
                pos[axis] += ((dir & 1) as i64) * 2 - 1;
                steps += 1;
                if pos[0].abs() == r {
                    break;
                }
            }
            *sim_marginal.entry((pos[0], pos[1])).or_default() += 1.0;
            sim_steps += steps as f64;
        }

        // Mean global steps: E = d * r^2.
        let expected = (d as i64 * r * r) as f64;
        assert!((jump_steps / n as f64 - expected).abs() < 0.03 * expected);
        assert!((sim_steps / n as f64 - expected).abs() < 0.03 * expected);

        // TV over the (own, first-other) joint.
        let keys: std::collections::HashSet<(i64, i64)> = jump_marginal
            .keys()
            .chain(sim_marginal.keys())
            .cloned()
            .collect();
        let mut tv = 0.0;
        for k in keys {
            let a = jump_marginal.get(&k).copied().unwrap_or(0.0) / n as f64;
            let b = sim_marginal.get(&k).copied().unwrap_or(0.0) / n as f64;
            tv += 0.5 * (a - b).abs();
        }
        assert!(tv < 0.02, "joint TV {tv} too large");
    }

    #[test]
    fn uniform_sphere_sampler_is_uniform() {
        let d = 3usize;
        let r = 3i64;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut counts: HashMap<Vec<i64>, u64> = HashMap::new();
        let n = 400_000usize;
        let mut out = [0i64; MAX_DIM];
        for _ in 0..n {
            uniform_sphere_site(d, r, &mut rng, &mut out);
            assert_eq!(out[..d].iter().map(|c| c.abs()).max().unwrap(), r);
            *counts.entry(out[..d].to_vec()).or_default() += 1;
        }
        let cells = crate::lattice::sphere_size(d, r) as f64;
        assert_eq!(counts.len() as f64, cells);
        let expect = n as f64 / cells;
        // Chi-square against uniformity, loose 6-sigma band.
        let chi2: f64 = counts
            .values()
            .map(|&c| (c as f64 - expect).powi(2) / expect)
            .sum();
        let dof = cells - 1.0;
        assert!(chi2 < dof + 6.0 * (2.0 * dof).sqrt(), "chi2={chi2} dof={dof}");
    }

    #[test]
    fn jumpkit_radius_selection() {
        let kit = JumpKit::new(3);
        assert_eq!(kit.cube_radius_for(1), 0);
        assert_eq!(kit.cube_radius_for(2), 2);
        assert_eq!(kit.cube_radius_for(15), 8);
        assert_eq!(kit.cube_radius_for(1000), 16);
        assert_eq!(kit.slab_radius_for(3), 0);
        assert_eq!(kit.slab_radius_for(200), 64);
    }
}
