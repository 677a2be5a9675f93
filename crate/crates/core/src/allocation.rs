//! Index-level allocation maps between disc assignments.
//!
//! An allocation map sends every index of a source assignment to an index of
//! a target assignment such that
//!
//! * (A1) each source entry is contained in the entry it is sent to,
//! * (A2) the discs sent to the target complement have radius sum at least
//!   the drop in outer radius, `Σ_{G(f)} r ≥ r(Δ) - r(E)`,
//! * (A3) each target disc is paid for by its preimage,
//!   `Σ_{f⁻¹(E)} r ≥ r(E)`.
//!
//! Sums count indices, so repeated discs contribute with multiplicity.

use std::collections::BTreeMap;
use std::fmt;

use crate::cheese::DiscAssignment;
use crate::engine::StepRecord;
use crate::error::{Error, Result};
use crate::geometry::{containment_slack, GeneralizedDisc};

/// Tolerance applied to every axiom slack.
pub const AXIOM_EPS: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct AllocationMap {
    source: DiscAssignment,
    target: DiscAssignment,
    mapping: BTreeMap<usize, usize>,
}

impl AllocationMap {
    /// `mapping` must be total on the source indices and land in the target
    /// indices.
    pub fn new(
        source: DiscAssignment,
        target: DiscAssignment,
        mapping: BTreeMap<usize, usize>,
    ) -> Result<Self> {
        for i in source.indices() {
            match mapping.get(&i) {
                None => {
                    return Err(Error::InvalidAllocation(format!(
                        "source index {i} is not mapped"
                    )))
                }
                Some(&j) if !target.contains_index(j) => {
                    return Err(Error::InvalidAllocation(format!(
                        "index {i} maps to {j}, which is not a target index"
                    )))
                }
                Some(_) => {}
            }
        }
        if let Some(extra) = mapping.keys().find(|&&i| !source.contains_index(i)) {
            return Err(Error::InvalidAllocation(format!(
                "mapping has index {extra} outside the source"
            )));
        }
        Ok(AllocationMap {
            source,
            target,
            mapping,
        })
    }

    pub fn identity(d: &DiscAssignment) -> Self {
        AllocationMap {
            source: d.clone(),
            target: d.clone(),
            mapping: d.indices().map(|i| (i, i)).collect(),
        }
    }

    pub fn source(&self) -> &DiscAssignment {
        &self.source
    }

    pub fn target(&self) -> &DiscAssignment {
        &self.target
    }

    pub fn mapping(&self) -> &BTreeMap<usize, usize> {
        &self.mapping
    }

    pub fn image(&self, i: usize) -> Option<usize> {
        self.mapping.get(&i).copied()
    }

    /// `G(f)`: source disc indices sent to the target complement.
    pub fn sent_to_complement(&self) -> Vec<usize> {
        self.mapping
            .iter()
            .filter(|&(&i, &j)| i != 0 && j == 0)
            .map(|(&i, _)| i)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub a1: bool,
    /// Containment slack per source index; negative means `U ⊄ f(U)`, and
    /// `-inf` marks a kind mismatch.
    pub a1_slacks: BTreeMap<usize, f64>,
    pub a2: bool,
    pub a2_slack: f64,
    pub a3: bool,
    /// Slack per target disc index.
    pub a3_slacks: BTreeMap<usize, f64>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.a1 && self.a2 && self.a3
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "ok" } else { "FAILED" };
        let min = |m: &BTreeMap<usize, f64>| m.values().copied().fold(f64::INFINITY, f64::min);
        writeln!(f, "A1 {} (min slack {:e})", mark(self.a1), min(&self.a1_slacks))?;
        writeln!(f, "A2 {} (slack {:e})", mark(self.a2), self.a2_slack)?;
        write!(f, "A3 {} (min slack {:e})", mark(self.a3), min(&self.a3_slacks))
    }
}

pub fn verify_allocation(a: &AllocationMap) -> AxiomReport {
    let a1_slacks: BTreeMap<usize, f64> = a
        .source
        .entries()
        .map(|(i, u)| {
            let image = a.target.get(a.mapping[&i]).expect("validated on construction");
            (i, inclusion_slack(&image, &u))
        })
        .collect();

    let radius = |i: usize| a.source.discs()[&i].radius();
    let g_sum: f64 = a.sent_to_complement().into_iter().map(radius).sum();
    let a2_slack = g_sum - (a.source.outer().radius() - a.target.outer().radius());

    let mut preimage_sums: BTreeMap<usize, f64> =
        a.target.discs().keys().map(|&j| (j, 0.0)).collect();
    for (&i, &j) in &a.mapping {
        // Index 0 has no finite radius; A1 already rules out 0 -> disc.
        if i != 0 && j != 0 {
            *preimage_sums.get_mut(&j).expect("validated on construction") += radius(i);
        }
    }
    let a3_slacks: BTreeMap<usize, f64> = preimage_sums
        .into_iter()
        .map(|(j, sum)| (j, sum - a.target.discs()[&j].radius()))
        .collect();

    AxiomReport {
        a1: a1_slacks.values().all(|&s| s >= -AXIOM_EPS),
        a1_slacks,
        a2: a2_slack >= -AXIOM_EPS,
        a2_slack,
        a3: a3_slacks.values().all(|&s| s >= -AXIOM_EPS),
        a3_slacks,
    }
}

/// Margin of `inner ⊆ outer`. An open disc lies in the complement of a closed
/// disc iff the two are disjoint; a complement never fits in an open disc.
fn inclusion_slack(outer: &GeneralizedDisc, inner: &GeneralizedDisc) -> f64 {
    match (outer, inner) {
        (GeneralizedDisc::ComplementOfClosed(c), GeneralizedDisc::Open(d)) => {
            c.center().distance(d.center()) - (c.radius() + d.radius())
        }
        (GeneralizedDisc::Open(_), GeneralizedDisc::ComplementOfClosed(_)) => f64::NEG_INFINITY,
        _ => containment_slack(outer, inner).expect("same kinds"),
    }
}

/// The map induced by one step: `m ↦ n`, every other index fixed.
pub fn step_allocation(before: &DiscAssignment, rec: &StepRecord) -> Result<AllocationMap> {
    let after = rec.apply(before)?;
    let m = rec.removed_index;
    let mapping = before
        .indices()
        .map(|i| (i, if i == m { rec.pair.n } else { i }))
        .collect();
    AllocationMap::new(before.clone(), after, mapping)
}

/// `outer ∘ inner`.
pub fn compose_allocations(outer: &AllocationMap, inner: &AllocationMap) -> Result<AllocationMap> {
    if inner.target != outer.source {
        return Err(Error::CompositionMismatch);
    }
    let mapping = inner
        .mapping
        .iter()
        .map(|(&i, j)| (i, outer.mapping[j]))
        .collect();
    Ok(AllocationMap {
        source: inner.source.clone(),
        target: outer.target.clone(),
        mapping,
    })
}

/// Compose the step maps of a whole trace, starting from `initial`.
pub fn trace_allocation(initial: &DiscAssignment, trace: &[StepRecord]) -> Result<AllocationMap> {
    let mut total = AllocationMap::identity(initial);
    let mut current = initial.clone();
    for rec in trace {
        let step = step_allocation(&current, rec)?;
        current = step.target.clone();
        total = compose_allocations(&step, &total)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{classicalise, step_f};
    use crate::geometry::{ClosedDisc, OpenDisc};

    fn h(outer: (f64, f64, f64), discs: &[(f64, f64, f64)]) -> DiscAssignment {
        DiscAssignment::new(
            ClosedDisc::at(outer.0, outer.1, outer.2).unwrap(),
            discs
                .iter()
                .enumerate()
                .map(|(k, &(x, y, r))| (k + 1, OpenDisc::at(x, y, r).unwrap())),
        )
        .unwrap()
    }

    fn pairs(a: &AllocationMap) -> Vec<(usize, usize)> {
        a.mapping().iter().map(|(&i, &j)| (i, j)).collect()
    }

    #[test]
    fn identity_has_zero_slack() {
        let c = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0), (2.2, 0.0, 0.1)]);
        let r = verify_allocation(&AllocationMap::identity(&c));
        assert!(r.holds());
        assert_eq!(r.a2_slack, 0.0);
        assert!(r.a3_slacks.values().all(|&s| s == 0.0));
        assert!(r.a1_slacks.values().all(|&s| s == 0.0));
    }

    #[test]
    fn merge_step_map() {
        let a = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0), (1.5, 0.0, 1.0)]);
        let rec = step_f(&a).unwrap().1.unwrap();
        let map = step_allocation(&a, &rec).unwrap();
        assert_eq!(pairs(&map), vec![(0, 0), (1, 1), (2, 1)]);
        let r = verify_allocation(&map);
        assert!(r.holds(), "{r}");
        assert!(map.sent_to_complement().is_empty());
        assert_eq!(r.a2_slack, 0.0);
        // Preimage radius sum 2 against the merged radius 1.75.
        assert_eq!(r.a3_slacks[&1], 0.25);
    }

    #[test]
    fn shrink_step_map() {
        let b = h((0.0, 0.0, 2.0), &[(1.2, 0.0, 0.5), (1.8, 0.0, 0.3)]);
        let rec = step_f(&b).unwrap().1.unwrap();
        let map = step_allocation(&b, &rec).unwrap();
        assert_eq!(pairs(&map), vec![(0, 0), (1, 1), (2, 0)]);
        assert_eq!(map.sent_to_complement(), vec![2]);
        let r = verify_allocation(&map);
        assert!(r.holds(), "{r}");
        // 0.3 >= 2 - 1.75.
        assert!((r.a2_slack - 0.05).abs() < 1e-12);
    }

    #[test]
    fn two_merge_chain_composes() {
        let chain = h((0.0, 0.0, 5.0), &[(0.0, 0.0, 1.0), (1.5, 0.0, 1.0), (3.0, 0.0, 1.0)]);
        let run = classicalise(&chain, None).unwrap();
        let total = trace_allocation(&chain, &run.trace).unwrap();
        assert_eq!(pairs(&total), vec![(0, 0), (1, 1), (2, 1), (3, 1)]);
        assert_eq!(total.target(), &run.final_assignment);
        assert!(verify_allocation(&total).holds());
    }

    // Shrink (0,1): r' = (5 + 4.5 - 1)/2 = 4.25, c' = 4.5 - 5.25 = -0.75.
    // Then (2,3) merge: d = 0.5, rho = 0.75, c = -2 + 0.25 = -1.75.
    #[test]
    fn shrink_then_merge_routes_to_complement() {
        let four = h(
            (0.0, 0.0, 5.0),
            &[(4.5, 0.0, 1.0), (-2.0, 0.0, 0.5), (-1.5, 0.0, 0.5), (0.0, 3.0, 0.3)],
        );
        let run = classicalise(&four, None).unwrap();
        let steps: Vec<_> = run.trace.iter().map(|r| (r.pair.n, r.pair.m)).collect();
        assert_eq!(steps, vec![(0, 1), (2, 3)]);
        let outer = run.final_assignment.outer();
        assert!((outer.radius() - 4.25).abs() < 1e-12);
        assert!((outer.center().x + 0.75).abs() < 1e-12);

        let total = trace_allocation(&four, &run.trace).unwrap();
        assert_eq!(pairs(&total), vec![(0, 0), (1, 0), (2, 2), (3, 2), (4, 4)]);
        let r = verify_allocation(&total);
        assert!(r.holds(), "{r}");
        // G = {1}: 1 >= 5 - 4.25.
        assert!((r.a2_slack - 0.25).abs() < 1e-12);
    }

    #[test]
    fn identity_composition() {
        let c = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0)]);
        let id = AllocationMap::identity(&c);
        assert_eq!(compose_allocations(&id, &id).unwrap(), id);
    }

    #[test]
    fn composition_requires_matching_middle() {
        let a = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0)]);
        let b = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.5)]);
        assert!(matches!(
            compose_allocations(&AllocationMap::identity(&a), &AllocationMap::identity(&b)),
            Err(Error::CompositionMismatch)
        ));
    }

    #[test]
    fn axiom_failures_are_reported() {
        let a = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0), (1.0, 0.0, 0.5)]);
        // Sending disc 1 into disc 2 violates A1; disc 2's preimage radius
        // sum 1.5 still pays for it.
        let mapping = BTreeMap::from([(0, 0), (1, 2), (2, 2)]);
        let r = verify_allocation(&AllocationMap::new(a.clone(), a.clone(), mapping).unwrap());
        assert!(!r.a1);
        assert!(r.a1_slacks[&1] < 0.0);
        // Disc 1 has an empty preimage, so A3 fails for it.
        assert!(!r.a3);
        // Sending the complement to a disc is a kind mismatch.
        let mapping = BTreeMap::from([(0, 1), (1, 1), (2, 2)]);
        let r = verify_allocation(&AllocationMap::new(a.clone(), a.clone(), mapping).unwrap());
        assert_eq!(r.a1_slacks[&0], f64::NEG_INFINITY);
    }

    #[test]
    fn constructor_checks_totality() {
        let a = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0)]);
        let partial = BTreeMap::from([(0, 0)]);
        assert!(AllocationMap::new(a.clone(), a.clone(), partial).is_err());
        let dangling = BTreeMap::from([(0, 0), (1, 9)]);
        assert!(AllocationMap::new(a.clone(), a.clone(), dangling).is_err());
    }

    #[test]
    fn step_allocation_rejects_foreign_record() {
        let a = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0), (1.5, 0.0, 1.0)]);
        let rec = step_f(&a).unwrap().1.unwrap();
        let other = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0)]);
        assert!(step_allocation(&other, &rec).is_err());
    }
}
