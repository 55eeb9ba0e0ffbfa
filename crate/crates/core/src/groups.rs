//! Finite-group arithmetic and the two independent constructions of a power
//! graph: directly from cyclic-subgroup membership, and from a joined-union
//! plan assembled out of element orders.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{family_of, registry};
use crate::graph::Graph;
use crate::joined_union::JoinedUnionPlan;

/// Euler's totient.
pub fn euler_phi(n: usize) -> usize {
    assert!(n >= 1, "euler_phi is defined for n >= 1");
    let mut result = n;
    for (p, _) in factorize(n) {
        result = result / p * (p - 1);
    }
    result
}

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// `Some((p, m))` when `n = p^m` with `m >= 1`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    match factorize(n).as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

/// All positive divisors, ascending.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Divisors `d` with `1 < d < n`, ascending.
pub fn proper_divisors(n: usize) -> Vec<usize> {
    (2..n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Multiplicative order of `u` modulo `m`, or `None` if `gcd(u, m) != 1`.
pub fn multiplicative_order(u: usize, m: usize) -> Option<usize> {
    if m < 2 || gcd(u % m, m) != 1 {
        return None;
    }
    let mut x = u % m;
    let mut k = 1;
    while x != 1 {
        x = x * u % m;
        k += 1;
    }
    Some(k)
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Proper divisors of `n` joined by divisibility.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorGraph {
    pub divisors: Vec<usize>,
    pub graph: Graph,
    pub connected: bool,
}

impl DivisorGraph {
    pub fn distance(&self, i: usize, j: usize) -> u32 {
        if i == j {
            0
        } else if self.graph.has_edge(i, j) {
            1
        } else {
            2
        }
    }
}

pub fn divisor_graph(n: usize) -> DivisorGraph {
    let divisors = proper_divisors(n);
    let mut edges = Vec::new();
    for i in 0..divisors.len() {
        for j in i + 1..divisors.len() {
            if divisors[j].is_multiple_of(divisors[i]) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::new(divisors.len(), edges).expect("indices are in range");
    let connected = graph.is_connected();
    DivisorGraph { divisors, graph, connected }
}

/// A member of one of the five supported group families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// `ℤ_n`.
    Cyclic { n: usize },
    /// `D_{2n}`, order `2n`.
    Dihedral { n: usize },
    /// `Q_{4n}`, order `4n`.
    Quaternion { n: usize },
    /// `(ℤ_p)^k`.
    ElementaryAbelian { p: usize, k: u32 },
    /// `ℤ_q ⋊ ℤ_p` with the generator of `ℤ_p` acting as multiplication by `unit`.
    NonabelianPq { p: usize, q: usize, unit: usize },
}

impl GroupSpec {
    /// Registry key of the family.
    pub fn family_name(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic { .. } => "cyclic",
            GroupSpec::Dihedral { .. } => "dihedral",
            GroupSpec::Quaternion { .. } => "quaternion",
            GroupSpec::ElementaryAbelian { .. } => "elemab",
            GroupSpec::NonabelianPq { .. } => "pq",
        }
    }

    /// `ℤ_q ⋊ ℤ_p` with the smallest unit of order `p` modulo `q`.
    pub fn nonabelian_pq(p: usize, q: usize) -> Result<Self> {
        let unit = smallest_unit_of_order(p, q)
            .ok_or_else(|| Error::InvalidSpec(format!("no unit of order {p} modulo {q}")))?;
        let spec = GroupSpec::NonabelianPq { p, q, unit };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        family_of(self).validate(self)
    }

    pub fn order(&self) -> usize {
        match *self {
            GroupSpec::Cyclic { n } => n,
            GroupSpec::Dihedral { n } => 2 * n,
            GroupSpec::Quaternion { n } => 4 * n,
            GroupSpec::ElementaryAbelian { p, k } => p.pow(k),
            GroupSpec::NonabelianPq { p, q, .. } => p * q,
        }
    }
}

pub(crate) fn smallest_unit_of_order(p: usize, q: usize) -> Option<usize> {
    (2..q).find(|&u| multiplicative_order(u, q) == Some(p))
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupSpec::Cyclic { n } | GroupSpec::Dihedral { n } | GroupSpec::Quaternion { n } => {
                write!(f, "{}:{n}", self.family_name())
            }
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "elemab:{p},{k}"),
            GroupSpec::NonabelianPq { p, q, unit } => {
                if smallest_unit_of_order(p, q) == Some(unit) {
                    write!(f, "pq:{p},{q}")
                } else {
                    write!(f, "pq:{p},{q},{unit}")
                }
            }
        }
    }
}

/// Parses `family:params`, e.g. `cyclic:12`, `elemab:3,2`, `pq:3,7`.
impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) =
            s.trim().split_once(':').ok_or_else(|| Error::InvalidSpec(format!("expected family:params, got {s:?}")))?;
        let family = registry().get(name.trim()).ok_or_else(|| Error::UnknownFamily(name.trim().to_string()))?;
        let spec = family.parse_params(params.trim())?;
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Element orders and cyclic subgroups, indexed by element encoding.
/// Element `0` is the identity in every family.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElements {
    pub size: usize,
    pub order_of: Vec<usize>,
    /// `power_closure[x]` lists `⟨x⟩` in ascending element order.
    pub power_closure: Vec<Vec<usize>>,
}

impl GroupElements {
    /// Enumerates `⟨x⟩` for each element by repeated multiplication.
    pub fn from_multiplication(size: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let mut order_of = Vec::with_capacity(size);
        let mut power_closure = Vec::with_capacity(size);
        for x in 0..size {
            let mut powers = vec![x];
            let mut y = x;
            while y != 0 {
                y = mul(y, x);
                powers.push(y);
            }
            order_of.push(powers.len());
            powers.sort_unstable();
            power_closure.push(powers);
        }
        GroupElements { size, order_of, power_closure }
    }

    pub fn contains_power(&self, x: usize, y: usize) -> bool {
        self.power_closure[x].binary_search(&y).is_ok()
    }
}

/// `u ∼ v` iff one lies in the cyclic subgroup generated by the other.
pub fn cayley_power_graph(spec: &GroupSpec) -> Result<(Graph, GroupElements)> {
    spec.validate()?;
    let family = family_of(spec);
    let elems = GroupElements::from_multiplication(spec.order(), |a, b| family.multiply(spec, a, b));
    let mut edges = Vec::new();
    for u in 0..elems.size {
        for v in u + 1..elems.size {
            if elems.contains_power(u, v) || elems.contains_power(v, u) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(elems.size, edges).expect("element indices are in range");
    Ok((g, elems))
}

/// A joined-union plan together with the group elements placed in each block.
#[derive(Debug, Clone, PartialEq)]
pub struct StructuralDecomposition {
    pub plan: JoinedUnionPlan,
    /// Element indices per block, in component vertex order.
    pub blocks: Vec<Vec<usize>>,
    /// Partition of block indices whose union blocks form the reduced
    /// equitable partition used for the closed-form quotient. Blocks that
    /// are interchangeable share a group.
    pub quotient_groups: Vec<Vec<usize>>,
}

impl StructuralDecomposition {
    pub fn new(plan: JoinedUnionPlan, blocks: Vec<Vec<usize>>) -> Self {
        let quotient_groups = (0..blocks.len()).map(|i| vec![i]).collect();
        StructuralDecomposition { plan, blocks, quotient_groups }
    }

    pub fn with_quotient_groups(mut self, groups: Vec<Vec<usize>>) -> Self {
        self.quotient_groups = groups;
        self
    }
}

/// The family's joined-union decomposition of the power graph.
pub fn structural_power_graph(spec: &GroupSpec) -> Result<StructuralDecomposition> {
    spec.validate()?;
    family_of(spec).decomposition(spec)
}

/// Outcome of checking a structural decomposition against the power graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsomorphismReport {
    pub spec: GroupSpec,
    pub isomorphic: bool,
    pub plans_checked: usize,
    pub first_mismatch: Option<String>,
}

/// Maps every element to its slot in the plan and compares adjacency pair by
/// pair with the power graph built from subgroup membership. Families whose
/// power graph is complete are checked against the one-block plan `K₁[K_n]`,
/// plus any divisor plan the family also supports.
pub fn verify_decomposition(spec: &GroupSpec) -> Result<IsomorphismReport> {
    let (power_graph, _) = cayley_power_graph(spec)?;
    let family = family_of(spec);
    let decomps = family.verification_decompositions(spec)?;
    let mut first_mismatch = None;
    for d in &decomps {
        if let Err(msg) = check_bijection(&power_graph, d, |x| family.element_label(spec, x)) {
            first_mismatch = Some(msg);
            break;
        }
    }
    Ok(IsomorphismReport {
        spec: *spec,
        isomorphic: first_mismatch.is_none(),
        plans_checked: decomps.len(),
        first_mismatch,
    })
}

fn check_bijection(
    power_graph: &Graph,
    d: &StructuralDecomposition,
    label: impl Fn(usize) -> String,
) -> std::result::Result<(), String> {
    let n = power_graph.vertex_count();
    if d.plan.order() != n {
        return Err(format!("plan has {} vertices, group has {n} elements", d.plan.order()));
    }
    if d.blocks.len() != d.plan.block_count() {
        return Err("element assignment does not cover every block".into());
    }
    let offsets = d.plan.block_offsets();
    let mut slot = vec![usize::MAX; n];
    for (b, elems) in d.blocks.iter().enumerate() {
        if elems.len() != offsets[b + 1] - offsets[b] {
            return Err(format!("block {b} holds {} elements, expected {}", elems.len(), offsets[b + 1] - offsets[b]));
        }
        for (j, &x) in elems.iter().enumerate() {
            if x >= n || slot[x] != usize::MAX {
                return Err(format!("element {x} is assigned twice or out of range"));
            }
            slot[x] = offsets[b] + j;
        }
    }
    let composed = d.plan.compose();
    for x in 0..n {
        for y in x + 1..n {
            let in_group = power_graph.has_edge(x, y);
            let in_plan = composed.has_edge(slot[x], slot[y]);
            if in_group != in_plan {
                return Err(format!(
                    "{} and {}: power graph says {}, plan says {}",
                    label(x),
                    label(y),
                    adjacency_word(in_group),
                    adjacency_word(in_plan)
                ));
            }
        }
    }
    Ok(())
}

fn adjacency_word(adjacent: bool) -> &'static str {
    if adjacent {
        "adjacent"
    } else {
        "not adjacent"
    }
}
