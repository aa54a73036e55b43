//! Adjacency spectra of pair graphs.
//!
//! Eigenvalues come from the dense solver in [`crate::eigen`] and are
//! clustered into `(value, multiplicity)` pairs. Clustering works on the
//! eigenvalues divided by `max(1, k)` (`k` the maximum degree): a new cluster
//! starts whenever the scaled gap to the previous eigenvalue exceeds `10τ`.

use serde::Serialize;

use crate::eigen::{symmetric_eigen, symmetric_eigenvalues, EigenDecomposition};
use crate::error::{Error, Result};
use crate::graph::PairGraph;
use crate::group::{Elem, GeneratingSet, Subgroup};
use crate::structure::{components_bfs, connecting_subgroup, covered_outer_vertices, is_bipartite};

pub const DEFAULT_TOLERANCE: f64 = 1e-8;
/// Largest vertex count handed to the dense solver.
pub const DENSE_CAP: usize = 3000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Cluster {
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    clusters: Vec<Cluster>,
    tolerance: f64,
    scale: f64,
}

impl Spectrum {
    /// Clusters `eigenvalues` (any order) at tolerance `tau` relative to
    /// `scale`, which is clamped below at 1.
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, scale: f64, tau: f64) -> Self {
        eigenvalues.sort_by(|x, y| y.total_cmp(x));
        let scale = scale.max(1.0);
        let mut clusters = Vec::new();
        let mut start = 0;
        for i in 1..=eigenvalues.len() {
            let split = i == eigenvalues.len()
                || (eigenvalues[i - 1] - eigenvalues[i]) / scale > 10.0 * tau;
            if split {
                let members = &eigenvalues[start..i];
                let value = members.iter().sum::<f64>() / members.len() as f64;
                clusters.push(Cluster { value, multiplicity: members.len() });
                start = i;
            }
        }
        Spectrum { eigenvalues, clusters, tolerance: tau, scale }
    }

    /// Eigenvalues, descending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Clusters in descending order of value.
    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn max(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn min(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    /// Absolute tolerance used when matching a value against a cluster.
    pub fn match_tolerance(&self) -> f64 {
        10.0 * self.tolerance * self.scale
    }

    /// The cluster containing `value`, if any.
    pub fn cluster_of(&self, value: f64) -> Option<&Cluster> {
        let tol = self.match_tolerance();
        self.clusters.iter().find(|c| (c.value - value).abs() <= tol)
    }

    /// Multiplicity of `value` (0 when it is not an eigenvalue).
    pub fn multiplicity(&self, value: f64) -> usize {
        self.cluster_of(value).map_or(0, |c| c.multiplicity)
    }

    pub fn zero_multiplicity(&self) -> usize {
        self.multiplicity(0.0)
    }

    /// Whether the cluster multiset is invariant under `λ ↦ -λ`.
    pub fn is_symmetric_under_negation(&self) -> bool {
        let tol = self.match_tolerance();
        let n = self.clusters.len();
        (0..n).all(|i| {
            let (a, b) = (self.clusters[i], self.clusters[n - 1 - i]);
            (a.value + b.value).abs() <= tol && a.multiplicity == b.multiplicity
        })
    }
}

fn dense_adjacency(pg: &PairGraph) -> Result<Vec<f64>> {
    let n = pg.vertex_count();
    if n > DENSE_CAP {
        return Err(Error::SizeCap { what: "vertices for the dense eigensolver", size: n, cap: DENSE_CAP });
    }
    Ok(pg.adjacency().to_dense())
}

pub fn compute_spectrum(pg: &PairGraph) -> Result<Spectrum> {
    compute_spectrum_with_tolerance(pg, DEFAULT_TOLERANCE)
}

pub fn compute_spectrum_with_tolerance(pg: &PairGraph, tau: f64) -> Result<Spectrum> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tau}")));
    }
    let a = dense_adjacency(pg)?;
    let values = symmetric_eigenvalues(&a, pg.vertex_count())?;
    Ok(Spectrum::from_eigenvalues(values, pg.max_degree() as f64, tau))
}

/// Eigenvalues together with unit eigenvectors, descending.
pub fn eigenpairs(pg: &PairGraph) -> Result<EigenDecomposition> {
    let a = dense_adjacency(pg)?;
    symmetric_eigen(&a, pg.vertex_count())
}

/// Largest `‖A v - λ v‖∞` over all computed eigenpairs.
pub fn max_residual(pg: &PairGraph, eig: &EigenDecomposition) -> f64 {
    let mut worst: f64 = 0.0;
    for (lambda, v) in eig.values.iter().zip(&eig.vectors) {
        for x in pg.group().elements() {
            let av: f64 = pg.neighbors(x).iter().map(|&y| v[y as usize]).sum();
            worst = worst.max((av - lambda * v[x as usize]).abs());
        }
    }
    worst
}

/// `μ± = (|S_H| ± √(|S_H|² + 4 Σ|S_i|²)) / 2` with the eigenfunction that is
/// `μ±` on `H` and `|S_i|` on the `i`-th nontrivial coset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrivialEigenvalues {
    pub mu_plus: f64,
    /// Absent when `S_O = ∅`: the candidate eigenfunction vanishes.
    pub mu_minus: Option<f64>,
    pub inner_size: usize,
    pub outer_counts: Vec<usize>,
}

impl TrivialEigenvalues {
    /// `Σ |S_i|²`.
    pub fn outer_square_sum(&self) -> usize {
        self.outer_counts.iter().map(|c| c * c).sum()
    }

    /// The eigenfunction for `mu` as a vector over the vertices of `G`.
    pub fn eigenfunction(&self, h: &Subgroup, mu: f64) -> Vec<f64> {
        h.parent()
            .elements()
            .map(|x| match h.coset_of(x) {
                0 => mu,
                i => self.outer_counts[i - 1] as f64,
            })
            .collect()
    }
}

pub fn trivial_eigenvalues(gen: &GeneratingSet) -> Result<TrivialEigenvalues> {
    if gen.is_empty() {
        return Err(Error::Precondition("trivial eigenvalues need S ≠ ∅".into()));
    }
    let inner_size = gen.inner().len();
    let outer_counts = gen.outer_coset_counts().to_vec();
    let sq: usize = outer_counts.iter().map(|c| c * c).sum();
    let a = inner_size as f64;
    let root = (a * a + 4.0 * sq as f64).sqrt();
    Ok(TrivialEigenvalues {
        mu_plus: (a + root) / 2.0,
        mu_minus: (!gen.outer().is_empty()).then(|| (a - root) / 2.0),
        inner_size,
        outer_counts,
    })
}

/// Multiplicity of the top eigenvalue `μ⁺`: `[H : ⟨H ∩ (S_H ∪ S_O S_O^-1)⟩]`.
pub fn largest_eigenvalue_multiplicity(h: &Subgroup, gen: &GeneratingSet) -> Result<usize> {
    if gen.outer().is_empty() {
        return Err(Error::Precondition("largest eigenvalue multiplicity needs S_O ≠ ∅".into()));
    }
    Ok(h.order() / connecting_subgroup(h, gen).order())
}

/// `|G| - |H| - min(|∪_{s ∈ S_O} H s|, |H|)`, floored at 0.
pub fn zero_multiplicity_lower_bound(h: &Subgroup, gen: &GeneratingSet) -> usize {
    let outer = h.parent().order() - h.order();
    outer.saturating_sub(covered_outer_vertices(h, gen).min(h.order()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RamanujanReport {
    pub ramanujan: bool,
    pub k: usize,
    pub bipartite: bool,
    /// Largest `|μ|` over eigenvalues other than the trivial `±k`.
    pub worst_nontrivial: f64,
    /// `2√(k-1)`.
    pub bound: f64,
    /// `bound - worst_nontrivial`; negative when the test fails.
    pub margin: f64,
}

pub fn is_ramanujan(pg: &PairGraph) -> Result<RamanujanReport> {
    is_ramanujan_with_tolerance(pg, DEFAULT_TOLERANCE)
}

pub fn is_ramanujan_with_tolerance(pg: &PairGraph, tau: f64) -> Result<RamanujanReport> {
    let regularity = pg.regularity();
    let k = regularity.degree.ok_or(Error::NotRegular)?;
    if components_bfs(pg).count != 1 {
        return Err(Error::NotConnected);
    }
    let spectrum = compute_spectrum_with_tolerance(pg, tau)?;
    Ok(ramanujan_from_spectrum(&spectrum, k, is_bipartite(pg)))
}

/// Ramanujan verdict for a connected `k`-regular graph with the given spectrum.
pub fn ramanujan_from_spectrum(spectrum: &Spectrum, k: usize, bipartite: bool) -> RamanujanReport {
    let ev = spectrum.eigenvalues();
    // The largest eigenvalue is k; for bipartite graphs the smallest is -k.
    let end = if bipartite && ev.len() > 1 { ev.len() - 1 } else { ev.len() };
    let worst_nontrivial = ev
        .get(1..end)
        .unwrap_or(&[])
        .iter()
        .fold(0.0f64, |w, x| w.max(x.abs()));
    let bound = 2.0 * (k.saturating_sub(1) as f64).sqrt();
    let slack = spectrum.tolerance() * spectrum.scale();
    RamanujanReport {
        ramanujan: worst_nontrivial <= bound + slack,
        k,
        bipartite,
        worst_nontrivial,
        bound,
        margin: bound - worst_nontrivial,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetryReport {
    /// `|H|`.
    pub n: usize,
    pub k: usize,
    /// Largest position-wise gap between the interior sorted spectra.
    pub max_interior_gap: f64,
    /// Extremes of the two spectra: `(max1, min1, max2, min2)`.
    pub extremes: (f64, f64, f64, f64),
    pub agrees: bool,
}

/// Compares the sorted spectra of `G(G,H,S1)` and `G(G,H,S2)` for
/// complementary `S1, S2` in `G - H` with `[G:H] = 2`. Interior positions
/// must agree and the extremes must be `±k` and `±(n-k)`.
pub fn verify_spectral_symmetry(
    h: &Subgroup,
    s1: &[Elem],
    s2: &[Elem],
    tau: f64,
) -> Result<SymmetryReport> {
    if h.index() != 2 {
        return Err(Error::Precondition(format!("spectral symmetry needs [G:H] = 2, got {}", h.index())));
    }
    let g1 = PairGraph::build(h, s1)?;
    let g2 = PairGraph::build(h, s2)?;
    let (a, b) = (g1.generating_set(), g2.generating_set());
    if !a.inner().is_empty() || !b.inner().is_empty() {
        return Err(Error::Precondition("S1 and S2 must lie in G - H".into()));
    }
    let n = h.order();
    let k = a.len();
    if k == 0 || b.is_empty() {
        return Err(Error::Precondition("S1 and S2 must both be nonempty".into()));
    }
    if a.elements().iter().any(|&x| b.contains(x)) || k + b.len() != n {
        return Err(Error::Precondition("S1 and S2 must partition G - H".into()));
    }
    let sp1 = compute_spectrum_with_tolerance(&g1, tau)?;
    let sp2 = compute_spectrum_with_tolerance(&g2, tau)?;
    let (e1, e2) = (sp1.eigenvalues(), sp2.eigenvalues());
    let last = e1.len() - 1;
    let max_interior_gap = (1..last).fold(0.0f64, |m, i| m.max((e1[i] - e2[i]).abs()));
    let extremes = (e1[0], e1[last], e2[0], e2[last]);
    let tol = 10.0 * tau * n as f64;
    let extremes_ok = (extremes.0 - k as f64).abs() <= tol
        && (extremes.1 + k as f64).abs() <= tol
        && (extremes.2 - (n - k) as f64).abs() <= tol
        && (extremes.3 + (n - k) as f64).abs() <= tol;
    Ok(SymmetryReport {
        n,
        k,
        max_interior_gap,
        extremes,
        agrees: extremes_ok && max_interior_gap <= tol,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub n: usize,
    pub size: usize,
    /// `n + 2 - 2√n`.
    pub bound: f64,
    pub satisfied: bool,
}

/// `n + 2 - 2√n`.
pub fn size_bound(n: usize) -> f64 {
    n as f64 + 2.0 - 2.0 * (n as f64).sqrt()
}

/// Size test `|S| ≥ n + 2 - 2√n` for `[G:H] = 2`, `S ⊆ G - H`, `n = |H|`.
pub fn ramanujan_bound_check(h: &Subgroup, gen: &GeneratingSet) -> Result<BoundCheck> {
    if h.index() != 2 {
        return Err(Error::Precondition(format!("bound check needs [G:H] = 2, got {}", h.index())));
    }
    if !gen.inner().is_empty() {
        return Err(Error::Precondition("bound check needs S ⊆ G - H".into()));
    }
    let n = h.order();
    let bound = size_bound(n);
    Ok(BoundCheck { n, size: gen.len(), bound, satisfied: gen.len() as f64 >= bound })
}
