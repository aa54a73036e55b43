//! Turning command-line flags or a job file into a validated `(G, H, S)`.

use std::path::{Path, PathBuf};

use clap::Args;
use pairgraph_core::descriptor::{parse_element_list, SetDescriptor, SubgroupDescriptor};
use pairgraph_core::{Error as CoreError, GroupDescriptor, PairGraph, Subgroup};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Group and subgroup flags shared by every command that needs a pair `H ≤ G`.
#[derive(Debug, Clone, Args)]
pub struct SubjectArgs {
    /// Group: `cyclic:12`, `dihedral:5`, `symmetric:4`, `alternating:4`, `gl2:3`,
    /// `sl2:5`, `field_additive:7,2`, `product:cyclic:2*symmetric:3`, or JSON
    #[arg(long)]
    pub group: Option<String>,
    /// Subgroup by elements (`0,3,6,9`), builtin name (`evens`, `sl2_in_gl2`,
    /// `alternating_in_symmetric`, `klein_in_a4`, `whole`, `trivial`) or JSON
    #[arg(long, conflicts_with = "subgroup_gen")]
    pub subgroup: Option<String>,
    /// Subgroup generated by the listed elements
    #[arg(long)]
    pub subgroup_gen: Option<String>,
}

impl SubjectArgs {
    pub fn descriptors(&self) -> CliResult<(GroupDescriptor, SubgroupDescriptor)> {
        let group = self
            .group
            .as_deref()
            .ok_or_else(|| CliError::Usage("missing --group".into()))?
            .parse::<GroupDescriptor>()
            .map_err(CliError::field("--group"))?;
        let subgroup = match (&self.subgroup, &self.subgroup_gen) {
            (Some(text), _) => text.parse().map_err(CliError::field("--subgroup"))?,
            (None, Some(text)) => SubgroupDescriptor::Generators { generators: parse_element_list(text) },
            (None, None) => return Err(CliError::Usage("missing --subgroup or --subgroup-gen".into())),
        };
        Ok((group, subgroup))
    }

    pub fn subgroup(&self) -> CliResult<Subgroup> {
        let (group, subgroup) = self.descriptors()?;
        resolve_subgroup(&group, &subgroup)
    }
}

fn resolve_subgroup(group: &GroupDescriptor, subgroup: &SubgroupDescriptor) -> CliResult<Subgroup> {
    let g = group.build().map_err(CliError::field("group"))?;
    subgroup.resolve(&g).map_err(CliError::field("subgroup"))
}

#[derive(Debug, Clone, Args)]
pub struct InstanceArgs {
    #[command(flatten)]
    pub subject: SubjectArgs,
    /// Generating set as an element list; an empty string gives S = ∅
    #[arg(long, conflicts_with_all = ["set_norm_preimage", "set_random"])]
    pub set: Option<String>,
    /// S = {x : N(x) ∈ values} for an additive field group, e.g. `5,6`
    #[arg(long, conflicts_with = "set_random")]
    pub set_norm_preimage: Option<String>,
    /// S = k random elements of G - H (needs --seed)
    #[arg(long, value_name = "K", requires = "seed")]
    pub set_random: Option<usize>,
    /// Seed for random choices
    #[arg(long)]
    pub seed: Option<u64>,
    /// Read group, subgroup, set and tolerance from a JSON job file
    #[arg(long, conflicts_with_all = ["group", "subgroup", "subgroup_gen", "set", "set_norm_preimage", "set_random"])]
    pub job: Option<PathBuf>,
}

/// A full job description, as read from `--job` or assembled from flags.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JobSpec {
    pub group: GroupDescriptor,
    pub subgroup: SubgroupDescriptor,
    pub set: SetDescriptor,
    #[serde(default)]
    pub tolerance: Option<f64>,
}

impl InstanceArgs {
    pub fn job_spec(&self) -> CliResult<JobSpec> {
        if let Some(path) = &self.job {
            return read_job(path);
        }
        let (group, subgroup) = self.subject.descriptors()?;
        let set = if let Some(text) = &self.set {
            SetDescriptor::Elements(parse_element_list(text))
        } else if let Some(text) = &self.set_norm_preimage {
            let values = text
                .split(',')
                .map(|v| v.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Field {
                    field: "--set-norm-preimage",
                    source: CoreError::Parse(format!("{text:?}: {e}")),
                })?;
            SetDescriptor::NormPreimage(values)
        } else if let Some(size) = self.set_random {
            let seed = self.seed.ok_or_else(|| CliError::Usage("--set-random needs --seed".into()))?;
            SetDescriptor::Random { size, seed }
        } else {
            return Err(CliError::Usage("missing --set, --set-norm-preimage or --set-random".into()));
        };
        Ok(JobSpec { group, subgroup, set, tolerance: None })
    }
}

fn read_job(path: &Path) -> CliResult<JobSpec> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|e| CliError::Field { field: "--job", source: CoreError::Parse(e.to_string()) })
}

impl JobSpec {
    /// Builds the pair graph, warning on stderr when `S` is empty.
    pub fn build(&self) -> CliResult<PairGraph> {
        let h = resolve_subgroup(&self.group, &self.subgroup)?;
        let set = self.set.resolve(&h).map_err(CliError::field("set"))?;
        let pg = PairGraph::build(&h, &set).map_err(CliError::field("set"))?;
        if set.is_empty() {
            eprintln!("warning: the generating set is empty; the graph has no edges");
        }
        Ok(pg)
    }
}
