//! The merge-or-shrink operator on disc assignments and its iteration to a
//! classical fixpoint.
//!
//! One step looks at the lexicographically least pair `(n, m)` of distinct
//! indices whose closures meet. Index `m` is removed, and entry `n` grows to
//! swallow `d(m)`: two open discs are merged into their smallest enclosing
//! disc, and when `n = 0` the outer closed disc is shrunk to avoid `d(m)`.
//! Every step removes an index, so a run on `|S| = k + 1` indices reaches a
//! classical assignment after at most `k` steps.

use crate::cheese::DiscAssignment;
use crate::error::{Error, Result};
use crate::geometry::{avoid_disc, closures_intersect, merge_open_discs, GeneralizedDisc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CollisionPair {
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// Two open discs replaced by their enclosing disc (`n != 0`).
    Merge,
    /// Outer disc shrunk away from an open disc (`n == 0`).
    Shrink,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StepRecord {
    pub pair: CollisionPair,
    pub case_tag: CaseTag,
    pub removed_index: usize,
    pub before_n: GeneralizedDisc,
    pub before_m: GeneralizedDisc,
    pub after_n: GeneralizedDisc,
    pub delta_before: f64,
    pub delta_after: f64,
}

impl StepRecord {
    /// Rebuild the successor assignment from `before` and the raw record,
    /// without consulting the collision predicate or the constructions.
    pub fn apply(&self, before: &DiscAssignment) -> Result<DiscAssignment> {
        let CollisionPair { n, m } = self.pair;
        if n >= m || m != self.removed_index {
            return Err(Error::RecordMismatch(format!(
                "pair ({n}, {m}) with removed index {}",
                self.removed_index
            )));
        }
        if before.get(n) != Some(self.before_n) {
            return Err(Error::RecordMismatch(format!("entry {n} differs from before_n")));
        }
        if before.get(m) != Some(self.before_m) {
            return Err(Error::RecordMismatch(format!("entry {m} differs from before_m")));
        }
        let mut after = before.clone();
        after.remove_disc(m);
        match (n, self.after_n) {
            (0, GeneralizedDisc::ComplementOfClosed(c)) => after.set_outer(c),
            (n, GeneralizedDisc::Open(d)) if n != 0 => after.set_disc(n, d),
            _ => {
                return Err(Error::RecordMismatch(format!(
                    "after_n has the wrong kind for index {n}"
                )))
            }
        }
        Ok(after)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalisationResult {
    pub final_assignment: DiscAssignment,
    pub trace: Vec<StepRecord>,
    pub steps: usize,
    pub stabilised: bool,
}

/// Lexicographically least pair of distinct indices with meeting closures,
/// or `None` when the assignment is classical. Always `n < m`.
pub fn min_collision(d: &DiscAssignment) -> Option<CollisionPair> {
    let entries: Vec<(usize, GeneralizedDisc)> = d.entries().collect();
    for (k, (n, a)) in entries.iter().enumerate() {
        for (m, b) in &entries[k + 1..] {
            if closures_intersect(a, b).expect("an assignment has a single complement") {
                return Some(CollisionPair { n: *n, m: *m });
            }
        }
    }
    None
}

/// One application of the operator. Classical inputs come back unchanged with
/// no record.
pub fn step_f(d: &DiscAssignment) -> Result<(DiscAssignment, Option<StepRecord>)> {
    let delta_before = d.delta().delta;
    if delta_before <= 0.0 {
        return Err(Error::SlackNotPositive {
            delta: delta_before,
        });
    }
    let Some(pair) = min_collision(d) else {
        return Ok((d.clone(), None));
    };
    let CollisionPair { n, m } = pair;
    let before_n = d.get(n).expect("n is in S");
    let before_m = d.get(m).expect("m is in S");
    let absorbed = *before_m.as_open().expect("m > 0 holds an open disc");

    let mut next = d.clone();
    next.remove_disc(m);
    let (case_tag, after_n) = match before_n {
        GeneralizedDisc::Open(disc) => {
            let merged = merge_open_discs(&disc, &absorbed)?;
            next.set_disc(n, merged);
            (CaseTag::Merge, GeneralizedDisc::Open(merged))
        }
        GeneralizedDisc::ComplementOfClosed(outer) => {
            let shrunk = avoid_disc(&outer, &absorbed)?;
            next.set_outer(shrunk);
            (CaseTag::Shrink, GeneralizedDisc::ComplementOfClosed(shrunk))
        }
    };
    let record = StepRecord {
        pair,
        case_tag,
        removed_index: m,
        before_n,
        before_m,
        after_n,
        delta_before,
        delta_after: next.delta().delta,
    };
    Ok((next, Some(record)))
}

/// Iterate [`step_f`] until the assignment is classical.
///
/// With `budget = None` the budget is `|S|`, which always suffices; running
/// out then is reported as [`Error::BudgetExhausted`]. An explicit budget that
/// runs out yields a result with `stabilised == false`.
pub fn classicalise(d: &DiscAssignment, budget: Option<usize>) -> Result<ClassicalisationResult> {
    let delta = d.delta().delta;
    if delta <= 0.0 {
        return Err(Error::SlackNotPositive { delta });
    }
    let limit = budget.unwrap_or(d.len());
    let mut current = d.clone();
    let mut trace = Vec::new();
    loop {
        if min_collision(&current).is_none() {
            return Ok(ClassicalisationResult {
                final_assignment: current,
                steps: trace.len(),
                trace,
                stabilised: true,
            });
        }
        if trace.len() >= limit {
            if budget.is_none() {
                return Err(Error::BudgetExhausted { steps: trace.len() });
            }
            return Ok(ClassicalisationResult {
                final_assignment: current,
                steps: trace.len(),
                trace,
                stabilised: false,
            });
        }
        let (next, record) = step_f(&current)?;
        trace.push(record.expect("non-classical input produces a record"));
        current = next;
    }
}

/// The stabilised flag agrees with classicality of the final assignment.
pub fn stabilised_iff_classical(r: &ClassicalisationResult) -> bool {
    r.stabilised == r.final_assignment.is_classical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{ClosedDisc, OpenDisc};

    fn open(x: f64, y: f64, r: f64) -> OpenDisc {
        OpenDisc::at(x, y, r).unwrap()
    }

    fn h(outer: (f64, f64, f64), discs: &[(f64, f64, f64)]) -> DiscAssignment {
        DiscAssignment::new(
            ClosedDisc::at(outer.0, outer.1, outer.2).unwrap(),
            discs.iter().enumerate().map(|(k, &(x, y, r))| (k + 1, open(x, y, r))),
        )
        .unwrap()
    }

    /// Enumerates every ordered pair (i, j), i != j, and takes the least.
    fn brute_min_collision(d: &DiscAssignment) -> Option<CollisionPair> {
        let entries: Vec<_> = d.entries().collect();
        let mut hits = Vec::new();
        for (i, a) in &entries {
            for (j, b) in &entries {
                if i != j && closures_intersect(a, b).unwrap() {
                    hits.push((*i, *j));
                }
            }
        }
        hits.into_iter().min().map(|(n, m)| CollisionPair { n, m })
    }

    #[test]
    fn min_collision_examples() {
        let a = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0), (1.5, 0.0, 1.0)]);
        assert_eq!(min_collision(&a), Some(CollisionPair { n: 1, m: 2 }));
        assert_eq!(min_collision(&a), brute_min_collision(&a));

        let b = h((0.0, 0.0, 2.0), &[(1.2, 0.0, 0.5), (1.8, 0.0, 0.3)]);
        assert_eq!(min_collision(&b), Some(CollisionPair { n: 0, m: 2 }));
        assert_eq!(min_collision(&b), brute_min_collision(&b));

        let classical = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0), (2.2, 0.0, 0.1)]);
        assert_eq!(min_collision(&classical), None);
    }

    #[test]
    fn merge_step_example() {
        let a = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0), (1.5, 0.0, 1.0)]);
        let (next, rec) = step_f(&a).unwrap();
        let rec = rec.unwrap();
        assert_eq!(next.indices().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(next.get(1), Some(GeneralizedDisc::Open(open(0.75, 0.0, 1.75))));
        assert_eq!(rec.case_tag, CaseTag::Merge);
        assert_eq!(rec.removed_index, 2);
        assert_eq!(rec.delta_before, 1.0);
        // Gain (1 + 1 - 1.5) / 2.
        assert_eq!(rec.delta_after, 1.25);
        assert_eq!(rec.apply(&a).unwrap(), next);
    }

    #[test]
    fn shrink_step_example() {
        let b = h((0.0, 0.0, 2.0), &[(1.2, 0.0, 0.5), (1.8, 0.0, 0.3)]);
        let (next, rec) = step_f(&b).unwrap();
        let rec = rec.unwrap();
        assert_eq!(rec.case_tag, CaseTag::Shrink);
        assert_eq!(next.indices().collect::<Vec<_>>(), vec![0, 1]);
        let outer = next.outer();
        // r' = (2 + 1.8 - 0.3) / 2, centre (1.8, 0) + (0.3 + 1.75)(-1, 0).
        assert!((outer.radius() - 1.75).abs() < 1e-12);
        assert!((outer.center().x + 0.25).abs() < 1e-12);
        assert_eq!(outer.center().y, 0.0);
        assert!(rec.delta_after >= rec.delta_before);
    }

    #[test]
    fn classical_input_is_a_fixed_point() {
        let c = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0), (2.2, 0.0, 0.1)]);
        let (next, rec) = step_f(&c).unwrap();
        assert!(rec.is_none());
        assert_eq!(next, c);
        let run = classicalise(&c, None).unwrap();
        assert_eq!(run.steps, 0);
        assert!(run.stabilised);
    }

    #[test]
    fn fh_gate() {
        let bad = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0); 5]);
        assert!(matches!(step_f(&bad), Err(Error::SlackNotPositive { .. })));
        assert!(matches!(classicalise(&bad, None), Err(Error::SlackNotPositive { .. })));
    }

    #[test]
    fn duplicate_discs_collapse() {
        let dup = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 0.1); 5]);
        let run = classicalise(&dup, None).unwrap();
        assert!(run.stabilised);
        assert_eq!(run.steps, 4);
        assert!(run.trace.iter().all(|r| r.case_tag == CaseTag::Merge && r.pair.n == 1));
        assert_eq!(run.final_assignment.indices().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(run.final_assignment.get(1), Some(GeneralizedDisc::Open(open(0.0, 0.0, 0.1))));
        assert!((run.final_assignment.delta().delta - 2.9).abs() < 1e-12);
    }

    // With outer radius 4 the third disc is internally tangent to the outer
    // circle at (4, 0), so the least colliding pair is (0, 3) and the run
    // consists of three shrinks:
    //   (0,3): r' = (4 + 3 - 1)/2 = 3,       c' = 3 - 4    = -1
    //   (0,2): r' = (3 + 2.5 - 1)/2 = 2.25,  c' = 1.5 - 3.25 = -1.75
    //   (0,1): r' = (2.25 + 1.75 - 1)/2 = 1.5, c' = 0 - 2.5 = -2.5
    #[test]
    fn three_disc_chain_tangent_to_outer() {
        let chain = h((0.0, 0.0, 4.0), &[(0.0, 0.0, 1.0), (1.5, 0.0, 1.0), (3.0, 0.0, 1.0)]);
        let run = classicalise(&chain, None).unwrap();
        assert!(run.stabilised);
        let pairs: Vec<_> = run.trace.iter().map(|r| (r.pair.n, r.pair.m)).collect();
        assert_eq!(pairs, vec![(0, 3), (0, 2), (0, 1)]);
        let outer = run.final_assignment.outer();
        assert!((outer.radius() - 1.5).abs() < 1e-12);
        assert!((outer.center().x + 2.5).abs() < 1e-12);
        assert_eq!(run.final_assignment.len(), 1);
        let deltas: Vec<_> = run.trace.iter().map(|r| r.delta_after).collect();
        for (got, want) in deltas.iter().zip([1.0, 1.25, 1.5]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    // Outer radius 5 keeps the chain clear of the boundary:
    //   (1,2): d = 1.5,  rho = 1.75, c = 0.75
    //   (1,3): d = 2.25, rho = (1.75 + 1 + 2.25)/2 = 2.5, c = 0.75 + 0.75 = 1.5
    #[test]
    fn three_disc_chain_merges_twice() {
        let chain = h((0.0, 0.0, 5.0), &[(0.0, 0.0, 1.0), (1.5, 0.0, 1.0), (3.0, 0.0, 1.0)]);
        let run = classicalise(&chain, None).unwrap();
        assert!(run.stabilised);
        assert_eq!(run.steps, 2);
        let pairs: Vec<_> = run.trace.iter().map(|r| (r.pair.n, r.pair.m)).collect();
        assert_eq!(pairs, vec![(1, 2), (1, 3)]);
        assert_eq!(run.final_assignment.get(1), Some(GeneralizedDisc::Open(open(1.5, 0.0, 2.5))));
        assert_eq!(run.final_assignment.delta().delta, 2.5);
    }

    #[test]
    fn explicit_budget_truncates() {
        let chain = h((0.0, 0.0, 5.0), &[(0.0, 0.0, 1.0), (1.5, 0.0, 1.0), (3.0, 0.0, 1.0)]);
        let run = classicalise(&chain, Some(0)).unwrap();
        assert!(!run.stabilised);
        assert_eq!(run.steps, 0);
        assert_eq!(run.final_assignment, chain);
        assert!(stabilised_iff_classical(&run));

        let run = classicalise(&chain, Some(1)).unwrap();
        assert!(!run.stabilised);
        assert_eq!(run.steps, 1);
    }

    #[test]
    fn stabilised_iff_classical_rejects_tampered_flag() {
        let c = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0)]);
        let mut run = classicalise(&c, None).unwrap();
        assert!(stabilised_iff_classical(&run));
        run.stabilised = false;
        assert!(!stabilised_iff_classical(&run));
    }

    #[test]
    fn apply_rejects_inconsistent_records() {
        let a = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0), (1.5, 0.0, 1.0)]);
        let (_, rec) = step_f(&a).unwrap();
        let rec = rec.unwrap();
        let other = h((0.0, 0.0, 3.0), &[(0.0, 0.0, 1.0), (1.4, 0.0, 1.0)]);
        assert!(matches!(rec.apply(&other), Err(Error::RecordMismatch(_))));
        let mut swapped = rec.clone();
        swapped.after_n = GeneralizedDisc::ComplementOfClosed(*a.outer());
        assert!(swapped.apply(&a).is_err());
    }
}
