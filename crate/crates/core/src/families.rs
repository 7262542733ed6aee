//! Graph families built by gluing graphs onto cycles.
//!
//! [`build_h`] attaches two graphs `F` and `G` to consecutive vertex pairs of
//! a cycle `T`, with `F`'s position selected by an index `i`. The sandpile
//! group of the result is the same for every `i`.
//!
//! [`build_ch_member`] builds a chain of cycles of lengths `a_1, ..., a_n`,
//! each new cycle glued along an edge of the previous one. Every member of a
//! class has the same sandpile group, a cyclic group whose order is
//! [`crate::formulas::f_recursive`] of the lengths. [`build_ch_canonical`]
//! is the member in which all cycles meet in one hub vertex.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Parameters of the cycle-attachment construction.
///
/// Vertices of the result are numbered `F: 1..=r`, `T: r+1..=r+n` in cycle
/// order, `G: r+n+1..=r+n+s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSpec {
    /// `F` with `r` vertices, or `None` for `r = 0`.
    pub f_graph: Option<Multigraph>,
    /// `G` with `s` vertices, or `None` for `s = 0`.
    pub g_graph: Option<Multigraph>,
    /// Length `n >= 3` of the cycle `T`.
    pub cycle_len: usize,
    /// Edges from each vertex of `F` to `T` vertex `r+i` (or `r+n` when `i = 0`).
    pub f1: Vec<u64>,
    /// Edges from each vertex of `F` to `T` vertex `r+i+1`.
    pub f2: Vec<u64>,
    /// Edges from each vertex of `G` to `T` vertex `r+n-1`.
    pub g1: Vec<u64>,
    /// Edges from each vertex of `G` to `T` vertex `r+n`.
    pub g2: Vec<u64>,
    /// Attachment index `0 <= i <= n-2`.
    pub attach: usize,
}

impl HSpec {
    pub fn f_size(&self) -> usize {
        self.f_graph.as_ref().map_or(0, Multigraph::vertex_count)
    }

    pub fn g_size(&self) -> usize {
        self.g_graph.as_ref().map_or(0, Multigraph::vertex_count)
    }

    /// Same spec with a different attachment index.
    pub fn with_attach(&self, attach: usize) -> HSpec {
        HSpec { attach, ..self.clone() }
    }

    pub fn validate(&self) -> Result<()> {
        let (r, s, n) = (self.f_size(), self.g_size(), self.cycle_len);
        if n < 3 {
            return Err(invalid(format!("cycle length must be at least 3, got {n}")));
        }
        if self.attach > n - 2 {
            return Err(invalid(format!(
                "attachment index {} outside 0..={}",
                self.attach,
                n - 2
            )));
        }
        for (name, v, want) in [
            ("f1", &self.f1, r),
            ("f2", &self.f2, r),
            ("g1", &self.g1, s),
            ("g2", &self.g2, s),
        ] {
            if v.len() != want {
                return Err(invalid(format!("{name} has length {}, expected {want}", v.len())));
            }
        }
        Ok(())
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidSpec(msg)
}

/// Builds `H_i`. Fails if the spec is malformed or the result is
/// disconnected.
pub fn build_h(spec: &HSpec) -> Result<Multigraph> {
    spec.validate()?;
    let (r, s, n, i) = (spec.f_size(), spec.g_size(), spec.cycle_len, spec.attach);
    let mut h = Multigraph::new(r + n + s)?;

    if let Some(f) = &spec.f_graph {
        for (u, v, m) in f.edges() {
            h.insert_edges(u, v, m)?;
        }
    }
    for k in 1..n {
        h.insert_edges(r + k, r + k + 1, 1)?;
    }
    h.insert_edges(r + n, r + 1, 1)?;
    if let Some(g) = &spec.g_graph {
        for (u, v, m) in g.edges() {
            h.insert_edges(r + n + u, r + n + v, m)?;
        }
    }

    let f1_target = if i == 0 { r + n } else { r + i };
    let f2_target = r + i + 1;
    for v in 1..=r {
        h.insert_edges(v, f1_target, spec.f1[v - 1])?;
        h.insert_edges(v, f2_target, spec.f2[v - 1])?;
    }
    for v in 1..=s {
        h.insert_edges(r + n + v, r + n - 1, spec.g1[v - 1])?;
        h.insert_edges(r + n + v, r + n, spec.g2[v - 1])?;
    }

    if !h.is_connected() {
        return Err(invalid("resulting graph is disconnected".into()));
    }
    Ok(h)
}

/// A member of the cycle-chain class `CH_n(a_1, ..., a_n)`.
///
/// `plan[j]` (1-based) picks the consecutive pair of the current boundary
/// list that cycle `j + 2` is glued across. The boundary list of a cycle of
/// length `a` always has `a` entries, so `plan[j]` must lie in
/// `1..=a[j] - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChSpec {
    pub a: Vec<u64>,
    pub plan: Vec<usize>,
}

impl ChSpec {
    pub fn new(a: Vec<u64>, plan: Vec<usize>) -> Result<Self> {
        let spec = ChSpec { a, plan };
        spec.validate()?;
        Ok(spec)
    }

    /// The plan that glues every cycle next to the first vertex of the
    /// first cycle, which reproduces the hub graph of [`build_ch_canonical`].
    pub fn canonical(a: Vec<u64>) -> Result<Self> {
        let plan = vec![1; a.len().saturating_sub(1)];
        Self::new(a, plan)
    }

    pub fn validate(&self) -> Result<()> {
        validate_lengths(&self.a)?;
        if self.plan.len() != self.a.len() - 1 {
            return Err(invalid(format!(
                "plan has {} entries, expected {}",
                self.plan.len(),
                self.a.len() - 1
            )));
        }
        for (j, (&p, &prev)) in self.plan.iter().zip(&self.a).enumerate() {
            if p < 1 || p as u64 >= prev {
                return Err(invalid(format!(
                    "plan entry {} is {p}, must be in 1..={}",
                    j + 1,
                    prev - 1
                )));
            }
        }
        Ok(())
    }

    /// `sum(a) - 2(n - 1)`.
    pub fn vertex_count(&self) -> usize {
        chain_vertex_count(&self.a)
    }
}

fn validate_lengths(a: &[u64]) -> Result<()> {
    if a.is_empty() {
        return Err(invalid("at least one cycle length is required".into()));
    }
    if let Some(bad) = a.iter().find(|&&x| x < 2) {
        return Err(invalid(format!("cycle lengths must be at least 2, got {bad}")));
    }
    Ok(())
}

fn chain_vertex_count(a: &[u64]) -> usize {
    let total: u64 = a.iter().sum();
    (total - 2 * (a.len() as u64 - 1)) as usize
}

/// Builds a class member by the gluing recursion. New vertices are numbered
/// in creation order.
pub fn build_ch_member(spec: &ChSpec) -> Result<Multigraph> {
    spec.validate()?;
    let mut g = Multigraph::new(spec.vertex_count())?;

    let first = spec.a[0] as usize;
    let mut boundary: Vec<usize> = (1..=first).collect();
    for v in 1..first {
        g.insert_edges(v, v + 1, 1)?;
    }
    g.insert_edges(first, 1, 1)?;
    let mut next = first + 1;

    for (&len, &p) in spec.a[1..].iter().zip(&spec.plan) {
        let (left, right) = (boundary[p - 1], boundary[p]);
        if len == 2 {
            g.insert_edges(left, right, 1)?;
            boundary = vec![left, right];
            continue;
        }
        let chain: Vec<usize> = (next..next + len as usize - 2).collect();
        next += chain.len();
        let mut prev = left;
        for &v in &chain {
            g.insert_edges(prev, v, 1)?;
            prev = v;
        }
        g.insert_edges(prev, right, 1)?;
        boundary = std::iter::once(left)
            .chain(chain)
            .chain(std::iter::once(right))
            .collect();
    }
    Ok(g)
}

/// The hub representative `Ch_n(a)`.
///
/// With `k = sum(a) - 2(n - 1) - 1`, vertex `k + 1` is the hub and `1..=k`
/// run along the outer path. Cycle `j` covers the outer vertices
/// `s_j..=s_{j+1}` where `s_1 = 1` and `s_{j+1} = s_j + a_j - 2`, closed
/// through the hub; neighbouring cycles share the spoke to `s_{j+1}`. A
/// cycle of length 2 is a doubled spoke.
pub fn build_ch_canonical(a: &[u64]) -> Result<Multigraph> {
    validate_lengths(a)?;
    let outer = chain_vertex_count(a) - 1;
    let hub = outer + 1;
    let mut g = Multigraph::new(hub)?;
    for v in 1..outer {
        g.insert_edges(v, v + 1, 1)?;
    }
    let mut spoke = 1usize;
    g.insert_edges(hub, spoke, 1)?;
    for &len in a {
        spoke += len as usize - 2;
        g.insert_edges(hub, spoke, 1)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sandpile::sandpile_group;
    use crate::Int;

    fn triangle() -> Multigraph {
        Multigraph::cycle(3).unwrap()
    }

    fn fig4_spec(attach: usize) -> HSpec {
        HSpec {
            f_graph: Some(triangle()),
            g_graph: Some(Multigraph::path(2).unwrap()),
            cycle_len: 6,
            f1: vec![1, 0, 0],
            f2: vec![0, 0, 2],
            g1: vec![1, 1],
            g2: vec![1, 1],
            attach,
        }
    }

    fn edge_set(g: &Multigraph) -> Vec<(usize, usize, u64)> {
        g.edges().collect()
    }

    #[test]
    fn h1_matches_drawing() {
        let h1 = build_h(&fig4_spec(1)).unwrap();
        assert_eq!(h1.vertex_count(), 11);
        assert_eq!(h1.total_multiplicity(), 17);
        assert!(h1.is_connected());
        assert_eq!(
            edge_set(&h1),
            vec![
                (1, 2, 1),
                (1, 3, 1),
                (1, 4, 1),
                (2, 3, 1),
                (3, 5, 2),
                (4, 5, 1),
                (4, 9, 1),
                (5, 6, 1),
                (6, 7, 1),
                (7, 8, 1),
                (8, 9, 1),
                (8, 10, 1),
                (8, 11, 1),
                (9, 10, 1),
                (9, 11, 1),
                (10, 11, 1),
            ]
        );
    }

    #[test]
    fn h2_moves_f_one_step() {
        let h2 = build_h(&fig4_spec(2)).unwrap();
        assert_eq!(h2.vertex_count(), 11);
        assert_eq!(h2.total_multiplicity(), 17);
        assert_eq!(h2.multiplicity(1, 5).unwrap(), 1);
        assert_eq!(h2.multiplicity(3, 6).unwrap(), 2);
        assert_eq!(h2.multiplicity(1, 4).unwrap(), 0);
        assert_eq!(
            sandpile_group(&h2).unwrap(),
            sandpile_group(&build_h(&fig4_spec(1)).unwrap()).unwrap()
        );
    }

    #[test]
    fn h0_wraps_to_last_cycle_vertex() {
        let h0 = build_h(&fig4_spec(0)).unwrap();
        assert_eq!(h0.multiplicity(1, 9).unwrap(), 1);
        assert_eq!(h0.multiplicity(3, 4).unwrap(), 2);
    }

    #[test]
    fn empty_attachments_give_plain_cycle() {
        for i in 0..=3 {
            let spec = HSpec {
                f_graph: None,
                g_graph: None,
                cycle_len: 5,
                f1: vec![],
                f2: vec![],
                g1: vec![],
                g2: vec![],
                attach: i,
            };
            assert_eq!(build_h(&spec).unwrap(), Multigraph::cycle(5).unwrap());
        }
    }

    #[test]
    fn h_spec_errors() {
        let mut spec = fig4_spec(5);
        assert!(matches!(build_h(&spec), Err(Error::InvalidSpec(_))));
        spec.attach = 1;
        spec.cycle_len = 2;
        assert!(matches!(build_h(&spec), Err(Error::InvalidSpec(_))));
        let mut spec = fig4_spec(1);
        spec.g1.pop();
        assert!(matches!(build_h(&spec), Err(Error::InvalidSpec(_))));
        let mut spec = fig4_spec(1);
        spec.f1 = vec![0, 0, 0];
        spec.f2 = vec![0, 0, 0];
        let err = build_h(&spec).unwrap_err();
        assert!(err.to_string().contains("disconnected"));
    }

    #[test]
    fn h_edge_count_identity() {
        let spec = fig4_spec(3);
        let h = build_h(&spec).unwrap();
        let attached: u64 = [&spec.f1, &spec.f2, &spec.g1, &spec.g2]
            .iter()
            .flat_map(|v| v.iter())
            .sum();
        assert_eq!(h.total_multiplicity(), 3 + 1 + 6 + attached);
    }

    #[test]
    fn ch_member_fixtures() {
        let c5 = build_ch_member(&ChSpec::new(vec![5], vec![]).unwrap()).unwrap();
        assert_eq!(c5, Multigraph::cycle(5).unwrap());

        let twice = build_ch_member(&ChSpec::new(vec![2, 2], vec![1]).unwrap()).unwrap();
        assert_eq!(twice.vertex_count(), 2);
        assert_eq!(twice.multiplicity(1, 2).unwrap(), 3);

        for plan in [vec![1, 3, 2], vec![1, 2, 2], vec![1, 2, 1]] {
            let g = build_ch_member(&ChSpec::new(vec![3, 6, 4, 6], plan).unwrap()).unwrap();
            assert_eq!(g.vertex_count(), 13);
            assert_eq!(g.total_multiplicity(), 16);
            assert_eq!(*sandpile_group(&g).unwrap().order(), Int::from(373));
        }
    }

    #[test]
    fn first_drawn_member_has_expected_edges() {
        // Triangle 1-2-3, then a hexagon on {1,2}, a square on {5,6}, a
        // hexagon on {8,9}.
        let g = build_ch_member(&ChSpec::new(vec![3, 6, 4, 6], vec![1, 3, 2]).unwrap()).unwrap();
        for (u, v) in [
            (1, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (2, 7),
            (5, 8),
            (8, 9),
            (6, 9),
            (8, 10),
            (13, 9),
        ] {
            assert_eq!(g.multiplicity(u, v).unwrap(), 1, "edge {u}-{v}");
        }
    }

    #[test]
    fn ch_spec_errors() {
        assert!(ChSpec::new(vec![], vec![]).is_err());
        assert!(ChSpec::new(vec![1], vec![]).is_err());
        assert!(ChSpec::new(vec![3, 4], vec![]).is_err());
        assert!(ChSpec::new(vec![3, 4], vec![3]).is_err());
        assert!(ChSpec::new(vec![3, 4], vec![0]).is_err());
        assert!(ChSpec::new(vec![2, 4], vec![1]).is_ok());
        assert!(build_ch_canonical(&[]).is_err());
        assert!(build_ch_canonical(&[4, 1]).is_err());
    }

    #[test]
    fn canonical_matches_hub_drawing() {
        let g = build_ch_canonical(&[3, 6, 4, 6]).unwrap();
        assert_eq!(g.vertex_count(), 13);
        let mut expected: Vec<(usize, usize, u64)> = (1..12).map(|v| (v, v + 1, 1)).collect();
        expected.extend([1, 2, 6, 8, 12].map(|v| (v, 13, 1)));
        expected.sort();
        assert_eq!(edge_set(&g), expected);
        assert_eq!(g.degree(13).unwrap(), 5);
    }

    #[test]
    fn canonical_small_cases() {
        assert_eq!(build_ch_canonical(&[5]).unwrap(), Multigraph::cycle(5).unwrap());
        let two = build_ch_canonical(&[2]).unwrap();
        assert_eq!(two.multiplicity(1, 2).unwrap(), 2);
        let three = build_ch_canonical(&[2, 2]).unwrap();
        assert_eq!(three.multiplicity(1, 2).unwrap(), 3);
    }

    fn degree_sequence(g: &Multigraph) -> Vec<u64> {
        let mut d: Vec<u64> = (1..=g.vertex_count()).map(|v| g.degree(v).unwrap()).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn canonical_plan_reproduces_hub_graph() {
        for a in [vec![3, 6, 4, 6], vec![2, 5, 2, 3], vec![4], vec![5, 2]] {
            let member = build_ch_member(&ChSpec::canonical(a.clone()).unwrap()).unwrap();
            let hub = build_ch_canonical(&a).unwrap();
            assert_eq!(member.vertex_count(), hub.vertex_count());
            assert_eq!(member.total_multiplicity(), hub.total_multiplicity());
            assert_eq!(degree_sequence(&member), degree_sequence(&hub), "{a:?}");
            assert_eq!(sandpile_group(&member).unwrap(), sandpile_group(&hub).unwrap());
        }
    }
}
