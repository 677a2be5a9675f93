use proptest::prelude::*;
use swiss_cheese::geometry::containment_slack;
use swiss_cheese::{
    classicalise, closures_intersect, point_in, sample_containment, step_f, verify_step,
    ClosedDisc, DiscAssignment, GeneralizedDisc, OpenDisc, Point,
};

const EPS: f64 = 1e-9;

/// Raw disc triples plus indices of discs to duplicate.
fn raw_cheese() -> impl Strategy<Value = (f64, Vec<(f64, f64, f64)>, Vec<usize>)> {
    (
        0.5..5.0f64,
        prop::collection::vec((-1.2..1.2f64, -1.2..1.2f64, 0.05..1.0f64), 0..12),
        prop::collection::vec(any::<prop::sample::Index>(), 0..3),
    )
        .prop_map(|(outer_r, discs, dups)| {
            let picks = if discs.is_empty() {
                vec![]
            } else {
                dups.iter().map(|ix| ix.index(discs.len())).collect()
            };
            (outer_r, discs, picks)
        })
}

/// An assignment with positive slack: centres scaled to
/// the outer radius and radii scaled to use at most 90% of it.
fn fh_assignment() -> impl Strategy<Value = DiscAssignment> {
    (raw_cheese(), 0.1..0.9f64).prop_map(|((outer_r, raw, dups), budget)| {
        let mut discs: Vec<(f64, f64, f64)> = raw
            .iter()
            .map(|&(x, y, r)| (x * outer_r, y * outer_r, r))
            .collect();
        for i in dups {
            discs.push(discs[i]);
        }
        let sum: f64 = discs.iter().map(|d| d.2).sum();
        let scale = if sum > 0.0 { budget * outer_r / sum } else { 1.0 };
        DiscAssignment::new(
            ClosedDisc::at(0.0, 0.0, outer_r).unwrap(),
            discs
                .iter()
                .enumerate()
                .map(|(k, &(x, y, r))| (k + 1, OpenDisc::at(x, y, r * scale).unwrap())),
        )
        .unwrap()
    })
}

fn plain_assignment() -> impl Strategy<Value = DiscAssignment> {
    raw_cheese().prop_map(|(outer_r, raw, dups)| {
        let mut discs = raw;
        for i in dups {
            discs.push(discs[i]);
        }
        DiscAssignment::new(
            ClosedDisc::at(0.0, 0.0, outer_r).unwrap(),
            discs
                .iter()
                .enumerate()
                .map(|(k, &(x, y, r))| (k + 1, OpenDisc::at(x, y, r).unwrap())),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn set_delta_dominates_indexed_delta(d in plain_assignment()) {
        let indexed = d.delta().delta;
        let set = d.to_cheese().set_delta().delta;
        prop_assert!(set >= indexed - EPS);
        // Equality holds exactly when no disc repeats.
        prop_assert_eq!((set - indexed).abs() <= EPS, d.is_injective());
    }

    #[test]
    fn membership_matches_enumeration(d in plain_assignment(), x in -6.0..6.0f64, y in -6.0..6.0f64) {
        let z = Point::new(x, y).unwrap();
        let brute = !d.entries().any(|(_, g)| point_in(&g, z));
        prop_assert_eq!(d.in_cheese_set(z), brute);
    }

    #[test]
    fn classical_injective_cheese_is_classical(d in plain_assignment()) {
        if d.is_classical() && d.is_injective() {
            prop_assert!(d.to_cheese().is_classical());
        }
    }

    #[test]
    fn classicalisation_invariants(d in fh_assignment()) {
        let n = d.len() - 1;
        let run = classicalise(&d, None).unwrap();
        prop_assert!(run.stabilised);
        prop_assert!(run.steps <= n);
        prop_assert_eq!(run.steps, run.trace.len());
        prop_assert!(run.final_assignment.is_classical());
        prop_assert!(run.final_assignment.delta().delta >= d.delta().delta - EPS);

        let mut current = d.clone();
        for rec in &run.trace {
            let next = rec.apply(&current).unwrap();
            prop_assert!(rec.delta_after >= rec.delta_before - EPS);
            prop_assert_eq!(next.len() + 1, current.len());
            prop_assert!(next.get(0).unwrap().is_complement());
            for (i, after) in next.entries() {
                let before = current.get(i).unwrap();
                prop_assert!(containment_slack(&after, &before).unwrap() >= -EPS, "index {} shrank", i);
            }
            let report = verify_step(&current, &next, rec);
            prop_assert!(report.passed(), "{}", report);
            current = next;
        }
        prop_assert_eq!(&current, &run.final_assignment);
        let report = sample_containment(&run.final_assignment, &d, 10_000, 7);
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn classicalisation_is_deterministic(d in fh_assignment()) {
        prop_assert_eq!(classicalise(&d, None).unwrap(), classicalise(&d.clone(), None).unwrap());
    }

    #[test]
    fn single_step_collapses_least_pair(d in fh_assignment()) {
        let (next, rec) = step_f(&d).unwrap();
        match rec {
            None => prop_assert!(d.is_classical() && next == d),
            Some(rec) => {
                // No pair before (n, m) collides.
                let entries: Vec<(usize, GeneralizedDisc)> = d.entries().collect();
                for (a, &(i, gi)) in entries.iter().enumerate() {
                    for &(j, gj) in &entries[a + 1..] {
                        if (i, j) < (rec.pair.n, rec.pair.m) {
                            prop_assert!(!closures_intersect(&gi, &gj).unwrap());
                        }
                    }
                }
                prop_assert!(!next.contains_index(rec.pair.m));
            }
        }
    }
}

