//! Sandpile groups of connected multigraphs.
//!
//! The group is `⊕ C_d` over the invariant factors `d` of the reduced
//! Laplacian, dropping the unit factors. Its order is the number of spanning
//! trees.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};
use crate::linalg::{determinant, smith_normal_form};
use crate::{Int, IntMatrix, SmithForm};

/// Largest edge count (parallel edges counted separately) accepted by
/// [`spanning_tree_count_bruteforce`].
pub const BRUTE_FORCE_EDGE_LIMIT: u64 = 20;

/// Canonical form of a finite abelian group: invariant factors `>= 2` with
/// each dividing the next.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupStructure {
    invariant_factors: Vec<Int>,
    order: Int,
}

impl GroupStructure {
    pub fn trivial() -> Self {
        GroupStructure {
            invariant_factors: Vec::new(),
            order: Int::one(),
        }
    }

    /// Validates a factor list given in canonical order.
    pub fn from_factors(factors: Vec<Int>) -> Result<Self> {
        let two = Int::from(2);
        if factors.iter().any(|f| *f < two) {
            return Err(Error::InvalidSpec("invariant factors must be at least 2".into()));
        }
        if factors.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) {
            return Err(Error::InvalidSpec(
                "invariant factors must form a divisibility chain".into(),
            ));
        }
        let order = factors.iter().product();
        Ok(GroupStructure {
            invariant_factors: factors,
            order,
        })
    }

    /// Drops unit factors from a Smith diagonal. A zero factor means the
    /// group is infinite, which only happens for disconnected graphs.
    pub fn from_smith(form: &SmithForm) -> Result<Self> {
        if form.diag().iter().any(Zero::is_zero) {
            return Err(Error::Disconnected);
        }
        let factors = form.diag().iter().filter(|d| !d.is_one()).cloned().collect();
        Self::from_factors(factors)
    }

    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    pub fn order(&self) -> &Int {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }
}

/// `C_4 x C_4`, or `trivial` for the one-element group.
impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("trivial");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("C_{d}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// Sandpile group, dropping the highest-numbered vertex.
pub fn sandpile_group(g: &Multigraph) -> Result<GroupStructure> {
    sandpile_group_dropping(g, g.vertex_count())
}

/// Sandpile group computed from the reduced Laplacian without `drop`.
pub fn sandpile_group_dropping(g: &Multigraph, drop: impl Into<VertexId>) -> Result<GroupStructure> {
    let drop = drop.into();
    if drop.index() == 0 || drop.index() > g.vertex_count() {
        return Err(Error::OutOfRange {
            vertex: drop.index(),
            count: g.vertex_count(),
        });
    }
    if g.vertex_count() == 1 {
        return Ok(GroupStructure::trivial());
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let reduced: IntMatrix = g.reduced_laplacian(drop)?;
    GroupStructure::from_smith(&smith_normal_form(&reduced))
}

/// Number of spanning trees, as `|det|` of the reduced Laplacian.
pub fn group_order(g: &Multigraph) -> Result<Int> {
    if g.vertex_count() == 1 {
        return Ok(Int::one());
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let reduced: IntMatrix = g.reduced_laplacian(g.vertex_count())?;
    Ok(determinant(&reduced)?.abs())
}

pub fn groups_isomorphic(a: &GroupStructure, b: &GroupStructure) -> bool {
    a.invariant_factors == b.invariant_factors
}

/// Counts spanning trees by trying every `(n - 1)`-subset of edge instances.
/// Parallel edges are distinct instances. Disconnected graphs give 0.
pub fn spanning_tree_count_bruteforce(g: &Multigraph) -> Result<Int> {
    let total = g.total_multiplicity();
    if total > BRUTE_FORCE_EDGE_LIMIT {
        return Err(Error::TooLarge {
            total,
            limit: BRUTE_FORCE_EDGE_LIMIT,
        });
    }
    let instances: Vec<(usize, usize)> = g
        .edges()
        .flat_map(|(u, v, m)| std::iter::repeat_n((u - 1, v - 1), m as usize))
        .collect();
    let n = g.vertex_count();
    let k = n - 1;
    let e = instances.len();
    if k > e {
        return Ok(Int::zero());
    }
    if k == 0 {
        return Ok(Int::one());
    }

    let mut count: u64 = 0;
    // Gosper's hack: every e-bit mask with exactly k bits set, in order.
    let mut mask: u64 = (1 << k) - 1;
    while mask < (1 << e) {
        if is_forest(n, &instances, mask) {
            count += 1;
        }
        let lowest = mask & mask.wrapping_neg();
        let ripple = mask + lowest;
        mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
    }
    Ok(Int::from(count))
}

/// `n - 1` acyclic edges on `n` vertices always form a spanning tree.
fn is_forest(n: usize, instances: &[(usize, usize)], mask: u64) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, &(u, v)) in instances.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
    }
    true
}
