//! DOT, JSON and CSV renderings of graphs and reports.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::graph::{CosetDegree, PairGraph, RegularityReport};
use crate::group::Elem;
use crate::spectral::{
    compute_spectrum_with_tolerance, largest_eigenvalue_multiplicity, ramanujan_bound_check,
    ramanujan_from_spectrum, trivial_eigenvalues, zero_multiplicity_lower_bound, BoundCheck, Cluster,
    RamanujanReport, Spectrum, TrivialEigenvalues,
};
use crate::structure::{
    component_count_formula, components_bfs, is_bipartite, is_connected, sign_homomorphism_exists,
    ComponentFormula, ConnectivityReport,
};

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT graph; `H`-vertices are drawn as boxes.
pub fn to_dot(pg: &PairGraph) -> String {
    let g = pg.group();
    let h = pg.subgroup();
    let mut out = String::from("graph pair_graph {\n  node [shape=ellipse];\n");
    for v in g.elements() {
        let shape = if h.contains(v) { ", shape=box" } else { "" };
        out.push_str(&format!("  {v} [label=\"{}\"{shape}];\n", dot_escape(g.label(v))));
    }
    for (u, v) in pg.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// `{"n", "edges", "coset_of", "degrees"}` plus element labels.
pub fn graph_json(pg: &PairGraph) -> Value {
    let g = pg.group();
    let h = pg.subgroup();
    let edges: Vec<[Elem; 2]> = pg.edges().into_iter().map(|(u, v)| [u, v]).collect();
    let coset_of: Vec<usize> = g.elements().map(|x| h.coset_of(x)).collect();
    json!({
        "n": pg.vertex_count(),
        "edges": edges,
        "coset_of": coset_of,
        "degrees": pg.degrees(),
        "labels": g.labels(),
        "subgroup": h.elements(),
        "S": pg.generating_set().elements(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeEntry {
    pub coset: usize,
    pub degree: usize,
    pub size: usize,
}

impl From<CosetDegree> for DegreeEntry {
    fn from(c: CosetDegree) -> Self {
        DegreeEntry { coset: c.coset, degree: c.degree, size: c.size }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FormulaTerms {
    pub subgroup_index: usize,
    pub outer_vertices: usize,
    pub covered_outer: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub proper_subgroup: Option<Vec<Elem>>,
    pub uncovered_cosets: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Regularity {
    pub regular: bool,
    pub degree: Option<usize>,
    pub predicted: bool,
    pub reason: String,
}

/// Structure report; the first five fields are the stable core.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub components: usize,
    pub formula_components: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub isolated: Vec<Elem>,
    pub group: String,
    pub order: usize,
    pub subgroup_order: usize,
    pub index: usize,
    pub set_size: usize,
    pub degree_profile: Vec<DegreeEntry>,
    pub formula_terms: FormulaTerms,
    pub connectivity_witness: Witness,
    pub regularity: Regularity,
    pub sign_homomorphism: bool,
    pub identity_component: Vec<Elem>,
}

pub fn analyze(pg: &PairGraph) -> AnalysisReport {
    let h = pg.subgroup();
    let gen = pg.generating_set();
    let bfs = components_bfs(pg);
    let ComponentFormula { subgroup_index, outer_vertices, covered_outer, count } = component_count_formula(h, gen);
    let ConnectivityReport { connected, proper_subgroup, uncovered_cosets } = is_connected(h, gen);
    let RegularityReport { regular, degree, predicted, reason } = pg.regularity();
    AnalysisReport {
        components: bfs.count,
        formula_components: count,
        connected,
        bipartite: is_bipartite(pg),
        isolated: pg.isolated_vertices(),
        group: pg.group().name().to_string(),
        order: pg.vertex_count(),
        subgroup_order: h.order(),
        index: h.index(),
        set_size: gen.len(),
        degree_profile: pg.degree_profile().into_iter().map(DegreeEntry::from).collect(),
        formula_terms: FormulaTerms { subgroup_index, outer_vertices, covered_outer },
        connectivity_witness: Witness { proper_subgroup, uncovered_cosets },
        regularity: Regularity { regular, degree, predicted, reason },
        sign_homomorphism: sign_homomorphism_exists(pg.group(), gen.elements()),
        identity_component: bfs.identity_component,
    }
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "group {} (order {}), |H| = {}, [G:H] = {}, |S| = {}\n",
            self.group, self.order, self.subgroup_order, self.index, self.set_size
        );
        s.push_str("degree profile (coset: degree x size):");
        for d in &self.degree_profile {
            s.push_str(&format!(" {}:{}x{}", d.coset, d.degree, d.size));
        }
        s.push('\n');
        let t = &self.formula_terms;
        s.push_str(&format!(
            "components: {} (bfs), {} (formula {} + {} - {})\n",
            self.components, self.formula_components, t.subgroup_index, t.outer_vertices, t.covered_outer
        ));
        s.push_str(&format!("connected: {}", self.connected));
        if let Some(u) = &self.connectivity_witness.proper_subgroup {
            s.push_str(&format!("; U is proper: {u:?}"));
        }
        if !self.connectivity_witness.uncovered_cosets.is_empty() {
            s.push_str(&format!("; uncovered cosets: {:?}", self.connectivity_witness.uncovered_cosets));
        }
        s.push('\n');
        s.push_str(&format!("bipartite: {} (sign homomorphism: {})\n", self.bipartite, self.sign_homomorphism));
        let r = &self.regularity;
        s.push_str(&format!(
            "regular: {}{} ({})\n",
            r.regular,
            r.degree.map(|k| format!(", k = {k}")).unwrap_or_default(),
            r.reason
        ));
        s.push_str(&format!("isolated vertices: {}\n", self.isolated.len()));
        s
    }
}

/// One row per cluster: `value,multiplicity`.
pub fn spectrum_csv(spectrum: &Spectrum) -> String {
    let mut out = String::from("value,multiplicity\n");
    for Cluster { value, multiplicity } in spectrum.clusters() {
        out.push_str(&format!("{value:.12},{multiplicity}\n"));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    pub n: usize,
    pub tolerance: f64,
    pub clusters: Vec<Cluster>,
    pub trivial: Option<TrivialEigenvalues>,
    /// Multiplicity predicted for `μ⁺` (needs `S_O ≠ ∅`).
    pub predicted_top_multiplicity: Option<usize>,
    pub zero_multiplicity: usize,
    pub zero_multiplicity_bound: usize,
    pub bound_check: Option<BoundCheck>,
    pub ramanujan: Option<RamanujanReport>,
}

pub fn spectral_report(pg: &PairGraph, tau: f64) -> Result<SpectralReport> {
    let h = pg.subgroup();
    let gen = pg.generating_set();
    let spectrum = compute_spectrum_with_tolerance(pg, tau)?;
    let regular = pg.regularity().degree;
    let connected = components_bfs(pg).count == 1;
    let ramanujan = match regular {
        Some(k) if connected => Some(ramanujan_from_spectrum(&spectrum, k, is_bipartite(pg))),
        _ => None,
    };
    Ok(SpectralReport {
        n: pg.vertex_count(),
        tolerance: tau,
        clusters: spectrum.clusters().to_vec(),
        trivial: trivial_eigenvalues(gen).ok(),
        predicted_top_multiplicity: largest_eigenvalue_multiplicity(h, gen).ok(),
        zero_multiplicity: spectrum.zero_multiplicity(),
        zero_multiplicity_bound: zero_multiplicity_lower_bound(h, gen),
        bound_check: ramanujan_bound_check(h, gen).ok(),
        ramanujan,
    })
}

impl SpectralReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("spectrum of {} vertices (tolerance {:e}):\n", self.n, self.tolerance);
        for c in &self.clusters {
            s.push_str(&format!("  {:>16.10}  x{}\n", c.value, c.multiplicity));
        }
        if let Some(t) = &self.trivial {
            s.push_str(&format!("trivial eigenvalues: mu+ = {:.10}", t.mu_plus));
            if let Some(m) = t.mu_minus {
                s.push_str(&format!(", mu- = {m:.10}"));
            }
            s.push('\n');
        }
        if let Some(m) = self.predicted_top_multiplicity {
            s.push_str(&format!("predicted multiplicity of mu+: {m}\n"));
        }
        s.push_str(&format!(
            "zero multiplicity: {} (lower bound {})\n",
            self.zero_multiplicity, self.zero_multiplicity_bound
        ));
        if let Some(b) = &self.bound_check {
            s.push_str(&format!(
                "size bound n + 2 - 2 sqrt(n) = {:.4} for n = {}: |S| = {} {}\n",
                b.bound,
                b.n,
                b.size,
                if b.satisfied { "meets it" } else { "is below it" }
            ));
        }
        if let Some(r) = &self.ramanujan {
            s.push_str(&ramanujan_text(r));
        }
        s
    }
}

pub fn ramanujan_text(r: &RamanujanReport) -> String {
    format!(
        "ramanujan: {} (k = {}, worst nontrivial |mu| = {:.10}, bound 2 sqrt(k-1) = {:.10}, margin {:.6})\n",
        r.ramanujan, r.k, r.worst_nontrivial, r.bound, r.margin
    )
}
