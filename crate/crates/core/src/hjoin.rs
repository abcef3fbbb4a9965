//! Randić spectra of H-joins of regular graphs, and the caterpillar case.
//!
//! For `G = H[G_1, …, G_k]` with `G_j` a `d_j`-regular graph on `n_j`
//! vertices, let `N_j = Σ_{i ∈ N_H(j)} n_i`. The Randić spectrum of `G` is
//! the spectrum of the `k × k` matrix `Γ_k`,
//!
//! ```text
//! Γ_k[j][j] = d_j / (N_j + d_j)
//! Γ_k[i][j] = √(n_i n_j) / √((N_i + d_i)(N_j + d_j))   if ij ∈ E(H), else 0
//! ```
//!
//! together with `λ / (N_j + d_j)` for every adjacency eigenvalue `λ` of
//! `G_j` other than one copy of `d_j`.
//!
//! A caterpillar `T(p_1, …, p_r)` is the H-join of `K_1, …, K_1,
//! K̄_{p_1}, …, K̄_{p_r}` over the host `T(1, …, 1)`. All slots are
//! 0-regular, so `Γ_2r = Ω A_H Ω = [[A, B], [B, 0]]` with `A = Ω₁ A_{P_r} Ω₁`
//! and `B = Ω₁ Ω₂`, and a Schur-complement argument turns
//! `det(λI − Γ_2r)` into the `r × r` pencil `det(λ²I − λA − B²)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::eigen::{symmetric_eigenvalues, Spectrum};
use crate::error::{Error, Result};
use crate::graph::{build_caterpillar, CaterpillarSpec, Graph};
use crate::math;
use crate::matrix::{Matrix, SymmetricMatrix};

/// One regular component of an H-join.
#[derive(Debug, Clone, PartialEq)]
pub struct Slot {
    order: usize,
    regularity: usize,
    /// Adjacency spectrum of the component with one copy of `regularity` removed.
    residual_spectrum: Vec<f64>,
}

impl Slot {
    /// `residual_spectrum` must hold `order − 1` values. The caller vouches
    /// for regularity; only the degree range is checked here.
    pub fn new(order: usize, regularity: usize, residual_spectrum: Vec<f64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidSlot { slot: 0, reason: "order must be at least 1" });
        }
        if regularity >= order {
            return Err(Error::InvalidSlot { slot: 0, reason: "regularity must be below the order" });
        }
        if residual_spectrum.len() != order - 1 {
            return Err(Error::DimensionMismatch { expected: order - 1, found: residual_spectrum.len() });
        }
        Ok(Self { order, regularity, residual_spectrum })
    }

    pub fn singleton() -> Self {
        Self::coclique(1)
    }

    /// Edgeless graph `K̄_m`.
    pub fn coclique(order: usize) -> Self {
        assert!(order >= 1, "coclique slot needs at least one vertex");
        Self { order, regularity: 0, residual_spectrum: vec![0.0; order - 1] }
    }

    /// `K_m`: `(m−1)`-regular, remaining eigenvalues all `−1`.
    pub fn complete(order: usize) -> Self {
        assert!(order >= 1, "complete slot needs at least one vertex");
        Self { order, regularity: order - 1, residual_spectrum: vec![-1.0; order - 1] }
    }

    /// `C_m`: 2-regular with eigenvalues `2cos(2πk/m)`, `k = 1..m`.
    pub fn cycle(order: usize) -> Result<Self> {
        if order < 3 {
            return Err(Error::InvalidSlot { slot: 0, reason: "cycles need at least 3 vertices" });
        }
        let step = 2.0 * core::f64::consts::PI / order as f64;
        let residual = (1..order).map(|k| 2.0 * math::cos(k as f64 * step)).collect();
        Ok(Self { order, regularity: 2, residual_spectrum: residual })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn regularity(&self) -> usize {
        self.regularity
    }

    pub fn residual_spectrum(&self) -> &[f64] {
        &self.residual_spectrum
    }
}

/// Host graph plus one regular slot per host vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct HJoinInstance {
    host: Graph,
    slots: Vec<Slot>,
    neighbor_orders: Vec<usize>,
}

impl HJoinInstance {
    pub fn new(host: Graph, slots: Vec<Slot>) -> Result<Self> {
        if slots.len() != host.order() {
            return Err(Error::DimensionMismatch { expected: host.order(), found: slots.len() });
        }
        let neighbor_orders: Vec<usize> = (0..host.order())
            .map(|j| host.neighbors(j).iter().map(|&i| slots[i].order).sum())
            .collect();
        for (j, (slot, &big_n)) in slots.iter().zip(&neighbor_orders).enumerate() {
            if big_n + slot.regularity == 0 {
                return Err(Error::IsolatedSlot { slot: j });
            }
        }
        Ok(Self { host, slots, neighbor_orders })
    }

    /// `T(p_1, …, p_r)` as `T(1, …, 1)[K_1, …, K_1, K̄_{p_1}, …, K̄_{p_r}]`.
    pub fn caterpillar(spec: &CaterpillarSpec) -> Self {
        let r = spec.spine_len();
        let host = build_caterpillar(&CaterpillarSpec::new(vec![1; r]).expect("r >= 2"));
        let mut slots: Vec<Slot> = (0..r).map(|_| Slot::singleton()).collect();
        slots.extend(spec.leaves().iter().map(|&p| Slot::coclique(p)));
        Self::new(host, slots).expect("caterpillar slots are never isolated")
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// `N_j`, the total order of the slots adjacent to `j` in the host.
    pub fn neighbor_orders(&self) -> &[usize] {
        &self.neighbor_orders
    }

    /// Order of the joined graph, `Σ n_j`.
    pub fn order(&self) -> usize {
        self.slots.iter().map(Slot::order).sum()
    }

    fn scale(&self, j: usize) -> f64 {
        (self.neighbor_orders[j] + self.slots[j].regularity) as f64
    }
}

/// The quotient matrix `Γ_k`.
pub fn build_gamma_k(inst: &HJoinInstance) -> SymmetricMatrix {
    let k = inst.host.order();
    let mut gamma = SymmetricMatrix::zeros(k);
    for j in 0..k {
        gamma.set(j, j, inst.slots[j].regularity as f64 / inst.scale(j));
    }
    for &(i, j) in inst.host.edges() {
        let num = (inst.slots[i].order * inst.slots[j].order) as f64;
        let rho = math::sqrt(num) / math::sqrt(inst.scale(i) * inst.scale(j));
        gamma.set(i, j, rho);
    }
    gamma
}

/// Randić spectrum of the H-join: `σ(Γ_k)` plus the scaled slot spectra.
pub fn hjoin_randic_spectrum(inst: &HJoinInstance) -> Result<Spectrum> {
    let gamma = symmetric_eigenvalues(&build_gamma_k(inst))?;
    let mut values = gamma.into_values();
    for (j, slot) in inst.slots.iter().enumerate() {
        let scale = inst.scale(j);
        values.extend(slot.residual_spectrum.iter().map(|&l| l / scale));
    }
    Ok(Spectrum::from_values(values))
}

/// Blocks of `Γ_2r = [[A, B], [B, 0]]` for a caterpillar.
#[derive(Debug, Clone, PartialEq)]
pub struct CaterpillarBlocks {
    /// `Ω₁ A_{P_r} Ω₁`, tridiagonal with zero diagonal.
    pub a: SymmetricMatrix,
    /// Diagonal of `B = Ω₁ Ω₂`.
    pub b: Vec<f64>,
    pub gamma: SymmetricMatrix,
    /// Diagonal of `Ω₁`, entries `1/√N_i` with `N_i` the degree of spine vertex `i`.
    pub omega1: Vec<f64>,
    /// Diagonal of `Ω₂`, entries `√(p_i / N_{r+i}) = √p_i`.
    pub omega2: Vec<f64>,
}

impl CaterpillarBlocks {
    pub fn spine_len(&self) -> usize {
        self.b.len()
    }

    /// The `r × r` matrix `λ²I − λA − B²`.
    pub fn pencil(&self, lambda: f64) -> Matrix {
        let r = self.spine_len();
        Matrix::from_fn(r, r, |i, j| {
            let mut x = -lambda * self.a.get(i, j);
            if i == j {
                x += lambda * lambda - self.b[i] * self.b[i];
            }
            x
        })
    }

    pub fn pencil_det(&self, lambda: f64) -> f64 {
        self.pencil(lambda).determinant().expect("pencil is square")
    }

    /// Characteristic polynomial `det(λI − Γ_2r)` evaluated directly.
    pub fn characteristic(&self, lambda: f64) -> f64 {
        let k = self.gamma.dim();
        let m = Matrix::from_fn(k, k, |i, j| {
            let d = if i == j { lambda } else { 0.0 };
            d - self.gamma.get(i, j)
        });
        m.determinant().expect("square")
    }
}

pub fn caterpillar_blocks(spec: &CaterpillarSpec) -> CaterpillarBlocks {
    let r = spec.spine_len();
    // Spine slot i sees its path neighbours (order 1 each) and its p_i
    // leaves; leaf slot r+i sees only spine vertex i.
    let omega1: Vec<f64> = (0..r).map(|i| 1.0 / math::sqrt(spec.spine_degree(i) as f64)).collect();
    let omega2: Vec<f64> = spec.leaves().iter().map(|&p| math::sqrt(p as f64)).collect();

    let mut a = SymmetricMatrix::zeros(r);
    for i in 1..r {
        a.set(i - 1, i, omega1[i - 1] * omega1[i]);
    }
    let b: Vec<f64> = omega1.iter().zip(&omega2).map(|(x, y)| x * y).collect();

    let mut gamma = SymmetricMatrix::zeros(2 * r);
    for (i, &bi) in b.iter().enumerate() {
        for j in 0..=i {
            gamma.set(i, j, a.get(i, j));
        }
        gamma.set(i, r + i, bi);
    }
    CaterpillarBlocks { a, b, gamma, omega1, omega2 }
}

/// `σ(Γ_2r)` together with `Σ (p_i − 1)` zeros.
pub fn caterpillar_randic_spectrum(spec: &CaterpillarSpec) -> Result<Spectrum> {
    let blocks = caterpillar_blocks(spec);
    let mut values = symmetric_eigenvalues(&blocks.gamma)?.into_values();
    values.extend(core::iter::repeat_n(0.0, spec.extra_zero_multiplicity()));
    Ok(Spectrum::from_values(values))
}

/// `det(λ²I_r − λA − B²)`.
pub fn pencil_det(spec: &CaterpillarSpec, lambda: f64) -> f64 {
    caterpillar_blocks(spec).pencil_det(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::randic_spectrum;
    use crate::graph::h_join;

    fn spec(p: &[usize]) -> CaterpillarSpec {
        CaterpillarSpec::new(p.to_vec()).unwrap()
    }

    #[test]
    fn k2_of_singletons() {
        let inst = HJoinInstance::new(Graph::complete(2), vec![Slot::singleton(), Slot::singleton()]).unwrap();
        let gamma = build_gamma_k(&inst);
        assert_eq!(gamma.to_rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        let s = hjoin_randic_spectrum(&inst).unwrap();
        assert_eq!(s.values(), &[1.0, -1.0]);
    }

    #[test]
    fn k2_of_singleton_and_coclique_is_star() {
        let inst = HJoinInstance::new(Graph::complete(2), vec![Slot::singleton(), Slot::coclique(3)]).unwrap();
        let gamma = build_gamma_k(&inst);
        assert!((gamma.get(0, 1) - 1.0).abs() < 1e-15);
        assert_eq!(gamma.get(0, 0), 0.0);
        let s = hjoin_randic_spectrum(&inst).unwrap();
        let oracle = randic_spectrum(&Graph::star(3)).unwrap();
        assert!(s.max_abs_diff(&oracle).unwrap() < 1e-9);
        // all-coclique slots: Σ(n_j − 1) zeros from the slot term
        assert_eq!(s.multiplicity_of(0.0), 2);
    }

    #[test]
    fn isolated_slot_rejected() {
        let host = Graph::from_edges(3, [(0, 1)]).unwrap();
        let slots = vec![Slot::singleton(), Slot::singleton(), Slot::coclique(2)];
        assert_eq!(HJoinInstance::new(host, slots), Err(Error::IsolatedSlot { slot: 2 }));
    }

    #[test]
    fn slot_validation() {
        assert!(Slot::new(3, 3, vec![0.0, 0.0]).is_err());
        assert!(Slot::new(3, 1, vec![0.0]).is_err());
        assert!(Slot::new(0, 0, vec![]).is_err());
        assert!(Slot::cycle(2).is_err());
    }

    #[test]
    fn regular_slots_match_oracle() {
        // P_3[K_3, C_5, K_2]: exercises the d_j > 0 diagonal of Γ_k.
        let host = Graph::path(3);
        let slots = vec![Slot::complete(3), Slot::cycle(5).unwrap(), Slot::complete(2)];
        let parts = vec![Graph::complete(3), Graph::cycle(5).unwrap(), Graph::complete(2)];
        let inst = HJoinInstance::new(host.clone(), slots).unwrap();
        let joined = h_join(&host, &parts).unwrap();
        let reduced = hjoin_randic_spectrum(&inst).unwrap();
        let oracle = randic_spectrum(&joined).unwrap();
        assert_eq!(reduced.len(), inst.order());
        assert!(reduced.max_abs_diff(&oracle).unwrap() < 1e-9);
    }

    #[test]
    fn caterpillar_instance_reproduces_gamma() {
        for p in [&[1, 1][..], &[2, 3], &[5, 6, 5], &[1, 4, 2, 7]] {
            let s = spec(p);
            let inst = HJoinInstance::caterpillar(&s);
            let blocks = caterpillar_blocks(&s);
            let general = build_gamma_k(&inst);
            let k = general.dim();
            for i in 0..k {
                for j in 0..k {
                    assert!((general.get(i, j) - blocks.gamma.get(i, j)).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn double_star_blocks() {
        let (n, p) = (9usize, 3usize);
        let blocks = caterpillar_blocks(&spec(&[p, n - p - 2]));
        let off = 1.0 / math::sqrt(((p + 1) * (n - p - 1)) as f64);
        assert!((blocks.a.get(0, 1) - off).abs() < 1e-15);
        assert!((blocks.b[0] - math::sqrt(p as f64 / (p + 1) as f64)).abs() < 1e-15);
        assert!((blocks.b[1] - math::sqrt((n - p - 2) as f64 / (n - p - 1) as f64)).abs() < 1e-15);
    }

    #[test]
    fn three_spine_blocks() {
        let (n, p, q) = (19usize, 5usize, 5usize);
        let m = n - p - q - 3;
        let blocks = caterpillar_blocks(&spec(&[p, m, q]));
        let mid = (n - p - q - 1) as f64;
        assert!((blocks.a.get(0, 1) - 1.0 / math::sqrt((p + 1) as f64 * mid)).abs() < 1e-15);
        assert!((blocks.a.get(1, 2) - 1.0 / math::sqrt((q + 1) as f64 * mid)).abs() < 1e-15);
        assert_eq!(blocks.a.get(0, 2), 0.0);
        assert!((blocks.b[1] - math::sqrt(m as f64 / mid)).abs() < 1e-15);
        assert!((blocks.b[2] - math::sqrt(q as f64 / (q + 1) as f64)).abs() < 1e-15);
    }

    #[test]
    fn smallest_three_spine_caterpillar() {
        let s = spec(&[1, 1, 1]);
        let blocks = caterpillar_blocks(&s);
        let expected_b = [1.0 / math::sqrt(2.0), 1.0 / math::sqrt(3.0), 1.0 / math::sqrt(2.0)];
        for (x, e) in blocks.b.iter().zip(expected_b) {
            assert!((x - e).abs() < 1e-15);
        }
        let reduced = caterpillar_randic_spectrum(&s).unwrap();
        let oracle = randic_spectrum(&build_caterpillar(&s)).unwrap();
        assert!(reduced.max_abs_diff(&oracle).unwrap() < 1e-9);
    }

    #[test]
    fn zero_block_sizes() {
        let s = spec(&[1, 1]);
        assert_eq!(s.extra_zero_multiplicity(), 0);
        assert_eq!(caterpillar_randic_spectrum(&s).unwrap().len(), 4);
        let s = spec(&[2, 3]);
        let spec_values = caterpillar_randic_spectrum(&s).unwrap();
        assert_eq!(s.extra_zero_multiplicity(), 3);
        assert_eq!(spec_values.len(), 7);
    }

    #[test]
    fn pencil_vanishes_at_one_and_at_spectrum() {
        for p in [&[2, 3][..], &[5, 6, 5], &[1, 2, 3, 4]] {
            let s = spec(p);
            let blocks = caterpillar_blocks(&s);
            assert!(blocks.pencil_det(1.0).abs() < 1e-9);
            for &l in symmetric_eigenvalues(&blocks.gamma).unwrap().values() {
                assert!(blocks.pencil_det(l).abs() < 1e-8, "{s} at {l}");
            }
        }
    }

    #[test]
    fn pencil_at_zero_for_double_star() {
        let d = pencil_det(&spec(&[2, 3]), 0.0);
        assert!((d - 0.5).abs() < 1e-15);
    }
}
