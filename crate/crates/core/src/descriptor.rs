//! Serializable descriptions of groups, subgroups and generating sets, plus
//! the compact text forms accepted on the command line.
//!
//! Groups: `{"kind": "gl2", "params": [3]}` or the shorthand `gl2:3`.
//! Products take two nested descriptors, `{"kind": "product", "params":
//! [{"kind": "cyclic", "params": [2]}, "symmetric:3"]}`, or `product:cyclic:2*symmetric:3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GroupRef, Subgroup};
use crate::search::random_candidate;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub kind: String,
    #[serde(default)]
    pub params: Vec<Value>,
}

impl GroupDescriptor {
    pub fn new(kind: &str, params: &[u64]) -> Self {
        GroupDescriptor { kind: kind.to_string(), params: params.iter().map(|&p| Value::from(p)).collect() }
    }

    fn int_params(&self, count: usize) -> Result<Vec<u64>> {
        if self.params.len() != count {
            return Err(Error::Parse(format!(
                "group kind {:?} takes {count} parameter(s), got {}",
                self.kind,
                self.params.len()
            )));
        }
        self.params
            .iter()
            .map(|v| {
                v.as_u64()
                    .ok_or_else(|| Error::Parse(format!("group parameter {v} is not a non-negative integer")))
            })
            .collect()
    }

    pub fn build(&self) -> Result<GroupRef> {
        let small = |x: u64| {
            usize::try_from(x).map_err(|_| Error::InvalidParameter(format!("parameter {x} is too large")))
        };
        let prime = |x: u64| u32::try_from(x).map_err(|_| Error::NotPrime(x));
        match self.kind.as_str() {
            "cyclic" => FiniteGroup::cyclic(small(self.int_params(1)?[0])?),
            "dihedral" => FiniteGroup::dihedral(small(self.int_params(1)?[0])?),
            "symmetric" => FiniteGroup::symmetric(small(self.int_params(1)?[0])?),
            "alternating" => FiniteGroup::alternating(small(self.int_params(1)?[0])?),
            "gl2" => FiniteGroup::gl2(prime(self.int_params(1)?[0])?),
            "sl2" => FiniteGroup::sl2(prime(self.int_params(1)?[0])?),
            "field_additive" => {
                let p = self.int_params(2)?;
                let k = u32::try_from(p[1]).map_err(|_| Error::InvalidParameter("field degree too large".into()))?;
                FiniteGroup::field_additive(prime(p[0])?, k)
            }
            "product" => {
                if self.params.len() != 2 {
                    return Err(Error::Parse("product takes exactly two group descriptors".into()));
                }
                let factor = |v: &Value| -> Result<GroupRef> {
                    let d: GroupDescriptor = match v {
                        Value::String(s) => s.parse()?,
                        other => serde_json::from_value(other.clone())
                            .map_err(|e| Error::Parse(format!("bad product factor: {e}")))?,
                    };
                    d.build()
                };
                FiniteGroup::direct_product(&factor(&self.params[0])?, &factor(&self.params[1])?)
            }
            other => Err(Error::Parse(format!(
                "unknown group kind {other:?} (expected cyclic, dihedral, symmetric, alternating, gl2, sl2, field_additive or product)"
            ))),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    /// JSON, or `kind:p1,p2`; products as `product:A*B`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('{') {
            return serde_json::from_str(text).map_err(|e| Error::Parse(format!("group descriptor: {e}")));
        }
        let (kind, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("group {text:?} should look like kind:params, e.g. cyclic:12")))?;
        if kind == "product" {
            let (a, b) = rest
                .split_once('*')
                .ok_or_else(|| Error::Parse("product shorthand is product:A*B".into()))?;
            return Ok(GroupDescriptor {
                kind: kind.to_string(),
                params: vec![Value::from(a.trim()), Value::from(b.trim())],
            });
        }
        let params = rest
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map(Value::from)
                    .map_err(|_| Error::Parse(format!("group parameter {p:?} is not an integer")))
            })
            .collect::<Result<_>>()?;
        Ok(GroupDescriptor { kind: kind.to_string(), params })
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

/// An element given by index or by label (`"(1,2)"`, `"[[1,1],[0,1]]"`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(u64),
    Label(String),
}

impl ElementRef {
    pub fn resolve(&self, g: &FiniteGroup) -> Result<Elem> {
        match self {
            ElementRef::Index(i) => g.check_element(usize::try_from(*i).unwrap_or(usize::MAX)),
            ElementRef::Label(s) => g.parse_element(s),
        }
    }
}

pub fn resolve_elements(g: &FiniteGroup, refs: &[ElementRef]) -> Result<Vec<Elem>> {
    refs.iter().map(|r| r.resolve(g)).collect()
}

/// Splits on commas that are not nested inside `()` or `[]`.
pub fn split_top_level(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    let last = cur.trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last.to_string());
    }
    out.retain(|s| !s.is_empty());
    out
}

/// Parses a comma-separated element list into element references.
pub fn parse_element_list(text: &str) -> Vec<ElementRef> {
    split_top_level(text)
        .into_iter()
        .map(|t| t.parse::<u64>().map(ElementRef::Index).unwrap_or(ElementRef::Label(t)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubgroupDescriptor {
    Elements { elements: Vec<ElementRef> },
    Generators { generators: Vec<ElementRef> },
    /// `sl2_in_gl2`, `alternating_in_symmetric`, `evens`, `klein_in_a4`,
    /// plus `whole` and `trivial`.
    Builtin { builtin: String },
}

impl SubgroupDescriptor {
    pub fn resolve(&self, g: &GroupRef) -> Result<Subgroup> {
        match self {
            SubgroupDescriptor::Elements { elements } => Subgroup::from_elements(g, &resolve_elements(g, elements)?),
            SubgroupDescriptor::Generators { generators } => Subgroup::generated(g, &resolve_elements(g, generators)?),
            SubgroupDescriptor::Builtin { builtin } => match builtin.as_str() {
                "whole" => Ok(Subgroup::whole(g)),
                "trivial" => Subgroup::from_elements(g, &[g.identity()]),
                name => Subgroup::builtin(g, name),
            },
        }
    }
}

impl FromStr for SubgroupDescriptor {
    type Err = Error;

    /// JSON, a builtin name, or an element list.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('{') {
            return serde_json::from_str(text).map_err(|e| Error::Parse(format!("subgroup descriptor: {e}")));
        }
        if !text.is_empty() && text.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') && text.parse::<u64>().is_err() {
            return Ok(SubgroupDescriptor::Builtin { builtin: text.to_string() });
        }
        Ok(SubgroupDescriptor::Elements { elements: parse_element_list(text) })
    }
}

/// How the generating set `S` is chosen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetDescriptor {
    Elements(Vec<ElementRef>),
    /// `{x : N(x) ∈ values}` in an additive field group.
    NormPreimage(Vec<u32>),
    /// `size` elements of `G - H`, drawn by a seeded shuffle.
    Random { size: usize, seed: u64 },
}

impl SetDescriptor {
    pub fn resolve(&self, h: &Subgroup) -> Result<Vec<Elem>> {
        let g = h.parent();
        match self {
            SetDescriptor::Elements(refs) => resolve_elements(g, refs),
            SetDescriptor::NormPreimage(values) => {
                let field = g.field().ok_or_else(|| {
                    Error::InvalidParameter(format!("norm preimage needs an additive field group, got {}", g.name()))
                })?;
                field.norm_preimage(values)
            }
            SetDescriptor::Random { size, seed } => {
                let outer = h.complement();
                if *size > outer.len() {
                    return Err(Error::InvalidParameter(format!(
                        "random set size {size} exceeds |G - H| = {}",
                        outer.len()
                    )));
                }
                Ok(random_candidate(&outer, *size, *seed, 0))
            }
        }
    }
}
