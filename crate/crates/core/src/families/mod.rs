//! The five group families behind one trait, looked up by name.

use std::sync::OnceLock;

use crate::closed_form::ClosedFormSpectrum;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{GroupSpec, StructuralDecomposition};
use crate::joined_union::JoinedUnionPlan;

mod cyclic;
mod dihedral;
mod elemab;
mod pq;
mod quaternion;

pub use cyclic::CyclicFamily;
pub use dihedral::DihedralFamily;
pub use elemab::ElementaryAbelianFamily;
pub use pq::NonabelianPqFamily;
pub use quaternion::QuaternionFamily;

/// Everything family-specific: parameters, group law, structural plan and
/// closed form. Element `0` must be the identity.
pub trait PowerGraphFamily: Send + Sync {
    /// Registry key, also the prefix of the `family:params` syntax.
    fn name(&self) -> &'static str;

    /// Parameter names in the order they are written.
    fn parameter_names(&self) -> &'static [&'static str];

    /// Builds a spec from parsed integer parameters without validating it.
    fn spec_from_values(&self, values: &[usize]) -> Result<GroupSpec>;

    fn validate(&self, spec: &GroupSpec) -> Result<()>;

    /// Group law on element indices `0..spec.order()`.
    fn multiply(&self, spec: &GroupSpec, a: usize, b: usize) -> usize;

    fn element_label(&self, spec: &GroupSpec, x: usize) -> String;

    /// The joined-union decomposition used for the closed form.
    fn decomposition(&self, spec: &GroupSpec) -> Result<StructuralDecomposition>;

    /// Every plan that should compose to the power graph.
    fn verification_decompositions(&self, spec: &GroupSpec) -> Result<Vec<StructuralDecomposition>> {
        Ok(vec![self.decomposition(spec)?])
    }

    fn closed_form(&self, spec: &GroupSpec, alpha: f64) -> Result<ClosedFormSpectrum>;

    /// Comma-separated integers, e.g. `3,7`.
    fn parse_params(&self, params: &str) -> Result<GroupSpec> {
        let values = params
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSpec(format!("{}: bad parameter {v:?}", self.name())))
            })
            .collect::<Result<Vec<_>>>()?;
        self.spec_from_values(&values)
    }
}

/// Name-indexed set of families, in registration order.
pub struct Registry {
    families: Vec<Box<dyn PowerGraphFamily>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry { families: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut r = Registry::empty();
        r.register(Box::new(CyclicFamily));
        r.register(Box::new(DihedralFamily));
        r.register(Box::new(QuaternionFamily));
        r.register(Box::new(ElementaryAbelianFamily));
        r.register(Box::new(NonabelianPqFamily));
        r
    }

    /// Adds a family, replacing any previous one with the same name.
    pub fn register(&mut self, family: Box<dyn PowerGraphFamily>) {
        self.families.retain(|f| f.name() != family.name());
        self.families.push(family);
    }

    pub fn get(&self, name: &str) -> Option<&dyn PowerGraphFamily> {
        self.families.iter().find(|f| f.name() == name).map(|f| f.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.families.iter().map(|f| f.name()).collect()
    }
}

/// The process-wide registry of built-in families.
pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(Registry::builtin)
}

pub(crate) fn family_of(spec: &GroupSpec) -> &'static dyn PowerGraphFamily {
    registry().get(spec.family_name()).expect("every GroupSpec variant has a built-in family")
}

/// Expands a parameter grid such as `2,1..4;3,1..3` into integer tuples.
/// Groups are separated by `;`, fields by `,`, and `a..b` is inclusive.
pub fn expand_param_grid(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for group in text.split(';').map(str::trim).filter(|g| !g.is_empty()) {
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for field in group.split(',') {
            let values = expand_field(field.trim())?;
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    values.iter().map(move |&v| {
                        let mut t = t.clone();
                        t.push(v);
                        t
                    })
                })
                .collect();
        }
        out.extend(tuples);
    }
    if out.is_empty() {
        return Err(Error::InvalidSpec(format!("empty parameter grid {text:?}")));
    }
    Ok(out)
}

fn expand_field(field: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidSpec(format!("bad parameter range {field:?}"));
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let values: Vec<usize> = match field.split_once("..") {
        Some((lo, hi)) => (parse(lo)?..=parse(hi.trim_start_matches('='))?).collect(),
        None => vec![parse(field)?],
    };
    if values.is_empty() {
        return Err(bad());
    }
    Ok(values)
}

pub(crate) fn expect_arity(family: &str, values: &[usize], n: usize) -> Result<()> {
    if values.len() == n {
        Ok(())
    } else {
        Err(Error::InvalidSpec(format!("{family} takes {n} parameter(s), got {}", values.len())))
    }
}

/// `K₁[K_n]`: the whole group as one complete block.
pub(crate) fn single_clique_decomposition(n: usize) -> StructuralDecomposition {
    let plan = JoinedUnionPlan::new(Graph::complete(1), vec![Graph::complete(n)])
        .expect("a single complete block is a valid plan");
    StructuralDecomposition::new(plan, vec![(0..n).collect()])
}

/// Partitions `0..size` into the cyclic subgroups generated by each element
/// of `candidates`, minus the identity, ordered by smallest member.
pub(crate) fn cyclic_subgroup_blocks(
    candidates: impl IntoIterator<Item = usize>,
    mul: impl Fn(usize, usize) -> usize,
    size: usize,
) -> Vec<Vec<usize>> {
    let mut seen = vec![false; size];
    let mut blocks = Vec::new();
    for x in candidates {
        if x == 0 || seen[x] {
            continue;
        }
        let mut block = Vec::new();
        let mut y = x;
        while y != 0 {
            seen[y] = true;
            block.push(y);
            y = mul(y, x);
        }
        block.sort_unstable();
        blocks.push(block);
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lookup() {
        let r = registry();
        assert_eq!(r.names(), vec!["cyclic", "dihedral", "quaternion", "elemab", "pq"]);
        assert_eq!(r.get("quaternion").unwrap().parameter_names(), &["n"]);
        assert!(r.get("symmetric").is_none());
    }

    #[test]
    fn register_replaces_by_name() {
        let mut r = Registry::builtin();
        r.register(Box::new(CyclicFamily));
        assert_eq!(r.names().len(), 5);
        assert_eq!(r.names().last(), Some(&"cyclic"));
    }

    #[test]
    fn grid_expansion() {
        assert_eq!(expand_param_grid("3..5").unwrap(), vec![vec![3], vec![4], vec![5]]);
        assert_eq!(expand_param_grid("2,1..2;5,1").unwrap(), vec![vec![2, 1], vec![2, 2], vec![5, 1]]);
        assert_eq!(expand_param_grid("3..=4").unwrap(), vec![vec![3], vec![4]]);
        assert!(expand_param_grid("5..3").is_err());
        assert!(expand_param_grid("").is_err());
        assert!(expand_param_grid("a..b").is_err());
    }

    #[test]
    fn subgroup_blocks_of_klein_group() {
        let blocks = cyclic_subgroup_blocks(0..4, |a, b| a ^ b, 4);
        assert_eq!(blocks, vec![vec![1], vec![2], vec![3]]);
    }
}
