//! Seeded search for Ramanujan pair graphs with `[G:H] = 2`, `S ⊆ G - H`.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::actions::{find_isomorphism, orbit_under, Automorphism};
use crate::error::{Error, Result};
use crate::graph::PairGraph;
use crate::group::{Elem, GeneratingSet, Subgroup};
use crate::spectral::{self, compute_spectrum_with_tolerance, ramanujan_from_spectrum, BoundCheck};
use crate::structure::{is_bipartite, is_connected};

/// Exhaustive mode refuses more candidates than this.
pub const EXHAUSTIVE_CAP: u128 = 1_000_000;
/// Per-trial seed stride.
pub const SEED_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub k: usize,
    pub mode: SearchMode,
    /// Number of random trials; ignored in exhaustive mode.
    pub trials: usize,
    pub seed: u64,
    /// Compute the spectrum of connected candidates.
    pub certify: bool,
    pub tolerance: f64,
}

impl SearchConfig {
    pub fn random(k: usize, trials: usize, seed: u64) -> Self {
        SearchConfig { k, mode: SearchMode::Random, trials, seed, certify: true, tolerance: spectral::DEFAULT_TOLERANCE }
    }

    pub fn exhaustive(k: usize) -> Self {
        SearchConfig { k, mode: SearchMode::Exhaustive, trials: 0, seed: 0, certify: true, tolerance: spectral::DEFAULT_TOLERANCE }
    }
}

/// One candidate set and its verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialResult {
    pub trial: usize,
    #[serde(rename = "S")]
    pub set: Vec<Elem>,
    pub connected: bool,
    /// `false` for disconnected candidates; `None` when not certified.
    pub ramanujan: Option<bool>,
    pub worst_nontrivial: Option<f64>,
    /// `2√(k-1)`.
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub results: Vec<TrialResult>,
    pub connected: usize,
    pub certified: usize,
    pub size_bound: BoundCheck,
    /// Trials that are connected, meet the size bound and still fail the
    /// Ramanujan test. Must stay empty.
    pub bound_violations: Vec<usize>,
}

impl SearchOutcome {
    /// One JSON object per trial, newline terminated.
    pub fn to_jsonl(&self) -> String {
        self.results
            .iter()
            .map(|r| serde_json::to_string(r).expect("trial results serialize") + "\n")
            .collect()
    }
}

/// `C(n, k)` saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// All `k`-subsets of `items` in lexicographic order of positions.
pub fn k_subsets(items: &[Elem], k: usize) -> Vec<Vec<Elem>> {
    let n = items.len();
    if k > n {
        return Vec::new();
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The candidate set of random trial `trial`: a seeded shuffle of `G - H`
/// truncated to `k` elements, sorted.
pub fn random_candidate(outer: &[Elem], k: usize, seed: u64, trial: usize) -> Vec<Elem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add((trial as u64).wrapping_mul(SEED_STRIDE)));
    let mut pool = outer.to_vec();
    pool.shuffle(&mut rng);
    let mut set = pool[..k].to_vec();
    set.sort_unstable();
    set
}

fn check_regime(h: &Subgroup, k: usize) -> Result<Vec<Elem>> {
    if h.index() != 2 {
        return Err(Error::Precondition(format!("search needs [G:H] = 2, got {}", h.index())));
    }
    let outer = h.complement();
    if k == 0 || k > outer.len() {
        return Err(Error::InvalidParameter(format!("k must lie in 1..={}, got {k}", outer.len())));
    }
    Ok(outer)
}

/// Runs every candidate of `config`. Trials run in parallel; results come
/// back in trial order, so the outcome depends only on the config.
pub fn search_ramanujan(h: &Subgroup, config: &SearchConfig) -> Result<SearchOutcome> {
    let outer = check_regime(h, config.k)?;
    let candidates: Vec<Vec<Elem>> = match config.mode {
        SearchMode::Exhaustive => {
            let count = binomial(outer.len(), config.k);
            if count > EXHAUSTIVE_CAP {
                return Err(Error::SizeCap {
                    what: "exhaustive candidate count",
                    size: usize::try_from(count).unwrap_or(usize::MAX),
                    cap: EXHAUSTIVE_CAP as usize,
                });
            }
            k_subsets(&outer, config.k)
        }
        SearchMode::Random => (0..config.trials)
            .map(|i| random_candidate(&outer, config.k, config.seed, i))
            .collect(),
    };
    let n = h.order();
    let sb = spectral::size_bound(n);
    let size_bound = BoundCheck { n, size: config.k, bound: sb, satisfied: config.k as f64 >= sb };
    let bound = 2.0 * ((config.k - 1) as f64).sqrt();

    let results: Vec<TrialResult> = candidates
        .into_par_iter()
        .enumerate()
        .map(|(trial, set)| evaluate(h, trial, set, bound, config))
        .collect::<Result<_>>()?;

    let connected = results.iter().filter(|r| r.connected).count();
    let certified = results.iter().filter(|r| r.ramanujan == Some(true)).count();
    let bound_violations = if size_bound.satisfied {
        results.iter().filter(|r| r.connected && r.ramanujan == Some(false)).map(|r| r.trial).collect()
    } else {
        Vec::new()
    };
    Ok(SearchOutcome { results, connected, certified, size_bound, bound_violations })
}

fn evaluate(h: &Subgroup, trial: usize, set: Vec<Elem>, bound: f64, config: &SearchConfig) -> Result<TrialResult> {
    let gen = GeneratingSet::new(h, &set)?;
    let connected = is_connected(h, &gen).connected;
    let (ramanujan, worst_nontrivial) = if !connected {
        (Some(false), None)
    } else if config.certify {
        let pg = PairGraph::from_generating_set(h, gen);
        let spectrum = compute_spectrum_with_tolerance(&pg, config.tolerance)?;
        let report = ramanujan_from_spectrum(&spectrum, config.k, is_bipartite(&pg));
        (Some(report.ramanujan), Some(report.worst_nontrivial))
    } else {
        (None, None)
    };
    Ok(TrialResult { trial, set, connected, ramanujan, worst_nontrivial, bound })
}

/// Class counts for `k`-subsets and `(n-k)`-subsets of `G - H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub k: usize,
    pub complement_k: usize,
    /// Number of subsets of each size.
    pub subsets: (usize, usize),
    /// Orbits under right translations and `H`-preserving automorphisms.
    pub orbits: (usize, usize),
    /// Distinct sorted spectra, rounded to 1e-6.
    pub spectral_classes: (usize, usize),
    /// Graph isomorphism classes; only computed for `|G| ≤ 24`.
    pub isomorphism_classes: Option<(usize, usize)>,
}

/// Largest subset family the class experiment will enumerate.
pub const CLASS_SUBSET_CAP: u128 = 20_000;
const EXACT_ISOMORPHISM_ORDER: usize = 24;

/// Counts equivalence classes of `k`-regular and `(n-k)`-regular pair
/// graphs for `[G:H] = 2`. Nothing is asserted about the two counts.
pub fn compare_classes(h: &Subgroup, k: usize, autos: &[Automorphism]) -> Result<ClassCounts> {
    let outer = check_regime(h, k)?;
    let n = outer.len();
    if k == n {
        return Err(Error::InvalidParameter("k must be smaller than |G - H|".into()));
    }
    let a = class_stats(h, &outer, k, autos)?;
    let b = class_stats(h, &outer, n - k, autos)?;
    Ok(ClassCounts {
        k,
        complement_k: n - k,
        subsets: (a.0, b.0),
        orbits: (a.1, b.1),
        spectral_classes: (a.2, b.2),
        isomorphism_classes: a.3.zip(b.3),
    })
}

type Stats = (usize, usize, usize, Option<usize>);

fn class_stats(h: &Subgroup, outer: &[Elem], k: usize, autos: &[Automorphism]) -> Result<Stats> {
    let count = binomial(outer.len(), k);
    if count > CLASS_SUBSET_CAP {
        return Err(Error::SizeCap {
            what: "subsets for the class experiment",
            size: usize::try_from(count).unwrap_or(usize::MAX),
            cap: CLASS_SUBSET_CAP as usize,
        });
    }
    let subsets = k_subsets(outer, k);
    let mut reps = Vec::new();
    let mut done = std::collections::HashSet::new();
    for s in &subsets {
        if done.contains(s) {
            continue;
        }
        for member in orbit_under(h, s, autos)? {
            done.insert(member);
        }
        reps.push(s.clone());
    }
    // Spectral key -> isomorphism-class representatives with that spectrum.
    let mut by_spectrum: BTreeMap<Vec<i64>, Vec<PairGraph>> = BTreeMap::new();
    let exact = h.parent().order() <= EXACT_ISOMORPHISM_ORDER;
    let mut iso_classes = 0;
    for rep in &reps {
        let pg = PairGraph::build(h, rep)?;
        let spectrum = spectral::compute_spectrum(&pg)?;
        let key: Vec<i64> = spectrum.eigenvalues().iter().map(|x| (x * 1e6).round() as i64).collect();
        let bucket = by_spectrum.entry(key).or_default();
        if exact {
            let mut known = false;
            for other in bucket.iter() {
                if find_isomorphism(&pg, other)?.is_some() {
                    known = true;
                    break;
                }
            }
            if !known {
                iso_classes += 1;
                bucket.push(pg);
            }
        } else if bucket.is_empty() {
            bucket.push(pg);
        }
    }
    Ok((subsets.len(), reps.len(), by_spectrum.len(), exact.then_some(iso_classes)))
}
