//! Base-order signatures and classification of link collections.
//!
//! The signature of a link ranks all labelled exponents of one side jointly
//! across components (rank 1 = largest value, equal values share a rank)
//! and keeps, per component, the cyclic tuple of ranks.  Links with equal
//! signatures have the same number of distinct exponents on each side, so
//! they share the distinct-count lower bound; that bound is the class
//! invariant.  The maximal-set bound depends on actual values, not ranks,
//! and is reported per member.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::bounds::{best_lower_bound, lower_bound_distinct, VolumeBound};
use crate::codeword::{exponent_sets, parse_link, ModularLink, ParseError};

/// Per-component rank tuples for both exponent families.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseOrderSignature {
    pub l_tuples: Vec<Vec<usize>>,
    pub r_tuples: Vec<Vec<usize>>,
}

impl fmt::Display for BaseOrderSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |tuples: &[Vec<usize>]| {
            tuples
                .iter()
                .map(|t| {
                    let inner = t
                        .iter()
                        .map(|r| r.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    format!("({inner})")
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(
            f,
            "L:{} R:{}",
            render(&self.l_tuples),
            render(&self.r_tuples)
        )
    }
}

/// Rotate a tuple to its lexicographically least cyclic rotation.
fn least_rotation(tuple: &[usize]) -> Vec<usize> {
    let n = tuple.len();
    let mut best: Vec<usize> = tuple.to_vec();
    let mut cur = tuple.to_vec();
    for _ in 1..n {
        cur.rotate_left(1);
        if cur < best {
            best.clone_from(&cur);
        }
    }
    best
}

fn rank_map(values: impl Iterator<Item = u64>) -> BTreeMap<u64, usize> {
    let distinct: std::collections::BTreeSet<u64> = values.collect();
    // Rank 1 is the largest value.
    distinct
        .into_iter()
        .rev()
        .enumerate()
        .map(|(i, v)| (v, i + 1))
        .collect()
}

/// Joint descending ranks of the labelled exponents, one tuple per
/// component, each tuple in its least cyclic rotation, tuples sorted.
pub fn base_order(link: &ModularLink) -> BaseOrderSignature {
    let l_ranks = rank_map(link.components().iter().flat_map(|w| w.l_exponents()));
    let r_ranks = rank_map(link.components().iter().flat_map(|w| w.r_exponents()));
    let mut l_tuples: Vec<Vec<usize>> = link
        .components()
        .iter()
        .map(|w| least_rotation(&w.l_exponents().map(|v| l_ranks[&v]).collect::<Vec<_>>()))
        .collect();
    let mut r_tuples: Vec<Vec<usize>> = link
        .components()
        .iter()
        .map(|w| least_rotation(&w.r_exponents().map(|v| r_ranks[&v]).collect::<Vec<_>>()))
        .collect();
    l_tuples.sort();
    r_tuples.sort();
    BaseOrderSignature { l_tuples, r_tuples }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("BoundMismatch: links {first} and {second} share a base order but disagree on the shared bound ({a} vs {b})")]
    BoundMismatch {
        first: usize,
        second: usize,
        a: String,
        b: String,
    },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: ParseError },
}

/// One class of the partition: links sharing a base-order signature.
#[derive(Clone, Debug)]
pub struct LinkClass {
    pub signature: BaseOrderSignature,
    /// Indices into the input collection, in first-occurrence order.
    pub members: Vec<usize>,
    /// The distinct-count lower bound, equal across the class.
    pub shared_lower: VolumeBound,
    /// The best general lower bound of each member, in `members` order.
    pub member_best_lower: Vec<VolumeBound>,
}

/// Group links by base-order signature.  The shared distinct-count bound is
/// recomputed for every member; a disagreement inside a class would
/// contradict the classification and surfaces as `BoundMismatch`.
pub fn partition_by_base_order(links: &[ModularLink]) -> Result<Vec<LinkClass>, ClassifyError> {
    let mut classes: Vec<LinkClass> = Vec::new();
    let mut index: BTreeMap<BaseOrderSignature, usize> = BTreeMap::new();
    for (i, link) in links.iter().enumerate() {
        let signature = base_order(link);
        let (a, b) = exponent_sets(link);
        let cor = lower_bound_distinct(a.len(), b.len());
        let best = best_lower_bound(link);
        match index.get(&signature) {
            Some(&ci) => {
                let class = &mut classes[ci];
                if class.shared_lower.coefficient != cor.coefficient {
                    return Err(ClassifyError::BoundMismatch {
                        first: class.members[0],
                        second: i,
                        a: class.shared_lower.coefficient_string(),
                        b: cor.coefficient_string(),
                    });
                }
                class.members.push(i);
                class.member_best_lower.push(best);
            }
            None => {
                index.insert(signature.clone(), classes.len());
                classes.push(LinkClass {
                    signature,
                    members: vec![i],
                    shared_lower: cor,
                    member_best_lower: vec![best],
                });
            }
        }
    }
    Ok(classes)
}

/// Parse a link-list file: UTF-8, one link per line, components separated
/// by commas, blank lines and `#` comments ignored.
pub fn parse_link_file(text: &str) -> Result<Vec<ModularLink>, ClassifyError> {
    let mut links = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let link = parse_link(line).map_err(|source| ClassifyError::Parse {
            line: i + 1,
            source,
        })?;
        links.push(link);
    }
    Ok(links)
}
