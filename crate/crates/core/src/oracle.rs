//! Certificate checking for classicalisation runs.
//!
//! Everything here is recomputed from raw coordinates with its own distance
//! and membership formulas (squared distances, explicit sums) and a tolerance
//! of [`ORACLE_EPS`]. The engine's constructions are never called; a trace is
//! replayed by copying the recorded discs into place.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cheese::DiscAssignment;
use crate::engine::{CaseTag, ClassicalisationResult, StepRecord};
use crate::geometry::GeneralizedDisc;

pub const ORACLE_EPS: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub check: &'static str,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub checks_run: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn has_failure(&self, check: &str) -> bool {
        self.failures.iter().any(|f| f.check == check)
    }

    fn check(&mut self, check: &'static str, ok: bool, witness: impl FnOnce() -> String) {
        self.checks_run += 1;
        if !ok {
            self.failures.push(Failure {
                check,
                witness: witness(),
            });
        }
    }

    fn absorb(&mut self, other: VerificationReport) {
        self.checks_run += other.checks_run;
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "passed: {}", self.passed())?;
        writeln!(f, "checks_run: {}", self.checks_run)?;
        write!(f, "failures: {}", self.failures.len())?;
        for failure in &self.failures {
            write!(f, "\n  - check: {}\n    witness: {}", failure.check, failure.witness)?;
        }
        Ok(())
    }
}

fn dist(ax: f64, ay: f64, bx: f64, by: f64) -> f64 {
    ((ax - bx) * (ax - bx) + (ay - by) * (ay - by)).sqrt()
}

fn parts(g: &GeneralizedDisc) -> (f64, f64, f64) {
    let c = g.center();
    (c.x, c.y, g.radius())
}

fn in_x(d: &DiscAssignment, x: f64, y: f64) -> bool {
    let outer = d.outer();
    let (ox, oy) = (outer.center().x, outer.center().y);
    let r = outer.radius();
    if (x - ox) * (x - ox) + (y - oy) * (y - oy) > r * r {
        return false;
    }
    d.discs().values().all(|disc| {
        let c = disc.center();
        (x - c.x) * (x - c.x) + (y - c.y) * (y - c.y) >= disc.radius() * disc.radius()
    })
}

/// Signed gap between the closures; negative or zero means they meet.
fn closure_gap(a: &GeneralizedDisc, b: &GeneralizedDisc) -> f64 {
    let (ax, ay, ar) = parts(a);
    let (bx, by, br) = parts(b);
    let d = dist(ax, ay, bx, by);
    match (a.is_complement(), b.is_complement()) {
        (false, false) => d - (ar + br),
        (false, true) => br - (d + ar),
        (true, false) => ar - (d + br),
        (true, true) => f64::NEG_INFINITY,
    }
}

/// Margin of `inner ⊆ outer`, or `None` for a mixed pair of kinds.
fn inclusion_margin(outer: &GeneralizedDisc, inner: &GeneralizedDisc) -> Option<f64> {
    let (ox, oy, or) = parts(outer);
    let (ix, iy, ir) = parts(inner);
    let d = dist(ox, oy, ix, iy);
    match (outer.is_complement(), inner.is_complement()) {
        (false, false) => Some(or - (d + ir)),
        (true, true) => Some(ir - (d + or)),
        _ => None,
    }
}

fn radius_sum(d: &DiscAssignment) -> f64 {
    let mut sum = 0.0;
    for disc in d.discs().values() {
        sum += disc.radius();
    }
    sum
}

fn slack(d: &DiscAssignment) -> f64 {
    d.outer().radius() - radius_sum(d)
}

/// Sample `n_points` uniformly from the bounding box of `inner`'s outer disc
/// and check that every sample in `X_inner` also lies in `X_outer`.
pub fn sample_containment(
    inner: &DiscAssignment,
    outer_assignment: &DiscAssignment,
    n_points: usize,
    seed: u64,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let o = inner.outer();
    let (cx, cy, r) = (o.center().x, o.center().y, o.radius());
    for _ in 0..n_points {
        let x = rng.random_range(cx - r..=cx + r);
        let y = rng.random_range(cy - r..=cy + r);
        if in_x(inner, x, y) {
            report.check("set-containment", in_x(outer_assignment, x, y), || {
                format!("point ({x:?}, {y:?}) is in the inner set but not the outer one")
            });
        }
    }
    report
}

/// Check one step against its record: the pair is a genuine least collision,
/// the index set loses exactly `m`, the slack stays positive and does not
/// drop, every surviving entry grows, and entry `n` swallows `d(m)`.
pub fn verify_step(
    before: &DiscAssignment,
    after: &DiscAssignment,
    rec: &StepRecord,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    let (n, m) = (rec.pair.n, rec.pair.m);

    let (Some(cur_n), Some(cur_m)) = (before.get(n), before.get(m)) else {
        report.check("record-consistency", false, || {
            format!("pair ({n}, {m}) is not in the index set of the input")
        });
        return report;
    };
    report.check("record-consistency", n < m && rec.removed_index == m, || {
        format!("pair ({n}, {m}) with removed index {}", rec.removed_index)
    });
    report.check(
        "record-consistency",
        cur_n == rec.before_n && cur_m == rec.before_m,
        || format!("recorded entries {} / {} differ from input {cur_n} / {cur_m}", rec.before_n, rec.before_m),
    );
    report.check("record-consistency", after.get(n) == Some(rec.after_n), || {
        format!("recorded after_n {} differs from output {:?}", rec.after_n, after.get(n))
    });
    let tag_ok = matches!(
        (n, rec.case_tag),
        (0, CaseTag::Shrink) | (1.., CaseTag::Merge)
    );
    report.check("case-tag", tag_ok, || format!("{:?} recorded for n = {n}", rec.case_tag));

    let gap = closure_gap(&cur_n, &cur_m);
    report.check("collision", gap <= ORACLE_EPS, || {
        format!("closures of {cur_n} and {cur_m} are {gap:e} apart")
    });
    let entries: Vec<(usize, GeneralizedDisc)> = before.entries().collect();
    for (k, (i, a)) in entries.iter().enumerate() {
        for (j, b) in &entries[k + 1..] {
            if (*i, *j) >= (n, m) {
                continue;
            }
            let gap = closure_gap(a, b);
            report.check("lex-min", gap > -ORACLE_EPS, || {
                format!("earlier pair ({i}, {j}) collides with overlap {:e}", -gap)
            });
        }
    }

    let mut expected: BTreeSet<usize> = before.indices().collect();
    expected.remove(&m);
    let got: BTreeSet<usize> = after.indices().collect();
    report.check("index-set", got == expected, || {
        format!("expected indices {expected:?}, got {got:?}")
    });

    let (delta_before, delta_after) = (slack(before), slack(after));
    report.check("fh-preserved", delta_after > 0.0, || {
        format!("delta after the step is {delta_after:?}")
    });
    report.check("delta-monotone", delta_after >= delta_before - ORACLE_EPS, || {
        format!("recomputed delta fell from {delta_before:?} to {delta_after:?}")
    });
    report.check(
        "delta-monotone",
        rec.delta_after >= rec.delta_before - ORACLE_EPS,
        || format!("recorded delta fell from {:?} to {:?}", rec.delta_before, rec.delta_after),
    );
    report.check(
        "delta-record",
        (rec.delta_before - delta_before).abs() <= ORACLE_EPS
            && (rec.delta_after - delta_after).abs() <= ORACLE_EPS,
        || {
            format!(
                "recorded deltas ({:?}, {:?}) vs recomputed ({delta_before:?}, {delta_after:?})",
                rec.delta_before, rec.delta_after
            )
        },
    );

    for (i, grown) in after.entries() {
        let Some(old) = before.get(i) else { continue };
        let margin = inclusion_margin(&grown, &old);
        report.check(
            "pointwise-containment",
            margin.is_some_and(|s| s >= -ORACLE_EPS),
            || format!("index {i}: {old} not inside {grown} (margin {margin:?})"),
        );
    }

    if let Some(target) = after.get(n) {
        let (tx, ty, tr) = parts(&target);
        let (mx, my, mr) = parts(&cur_m);
        let d = dist(tx, ty, mx, my);
        let margin = match (target.is_complement(), cur_m.is_complement()) {
            // Open disc inside an open disc.
            (false, false) => Some(tr - (d + mr)),
            // Open disc inside the complement of a closed disc: disjointness.
            (true, false) => Some(d - (mr + tr)),
            _ => None,
        };
        report.check(
            "absorption",
            margin.is_some_and(|s| s >= -ORACLE_EPS),
            || format!("removed entry {m} = {cur_m} not inside {target} (margin {margin:?})"),
        );
    }
    report
}

/// The successor obtained by dropping `m` and writing the recorded `after_n`.
fn replay(before: &DiscAssignment, rec: &StepRecord) -> Option<DiscAssignment> {
    let (n, m) = (rec.pair.n, rec.pair.m);
    if before.get(n) != Some(rec.before_n) || before.get(m) != Some(rec.before_m) {
        return None;
    }
    let entries = before
        .entries()
        .filter(|&(i, _)| i != m)
        .map(|(i, g)| (i, if i == n { rec.after_n } else { g }));
    DiscAssignment::from_entries(entries).ok()
}

/// Replay the trace from `initial` and check every step, then the end-to-end
/// claims: classical when stabilised, slack not decreased, `X_final ⊆ X_initial`.
pub fn verify_run(
    r: &ClassicalisationResult,
    initial: &DiscAssignment,
    n_points: usize,
    seed: u64,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    let mut current = initial.clone();
    let mut replayed = true;
    for (k, rec) in r.trace.iter().enumerate() {
        match replay(&current, rec) {
            Some(next) => {
                report.absorb(verify_step(&current, &next, rec));
                current = next;
            }
            None => {
                report.check("trace-replay-mismatch", false, || {
                    format!(
                        "record {k} (pair ({}, {})) does not match the replayed assignment",
                        rec.pair.n, rec.pair.m
                    )
                });
                replayed = false;
                break;
            }
        }
    }
    if replayed {
        report.check("trace-replay-mismatch", current == r.final_assignment, || {
            let got: Vec<usize> = current.indices().collect();
            let want: Vec<usize> = r.final_assignment.indices().collect();
            format!("replay ends at indices {got:?}, result claims {want:?}")
        });
    }
    report.check("step-count", r.steps == r.trace.len(), || {
        format!("steps = {} but trace has {} records", r.steps, r.trace.len())
    });

    let classical = r.final_assignment.is_classical();
    if r.stabilised {
        report.check("final-classical", classical, || {
            "run claims stabilisation but the final assignment is not classical".into()
        });
    }
    report.check("stabilised-iff-classical", r.stabilised == classical, || {
        format!("stabilised = {}, classical = {classical}", r.stabilised)
    });

    let (d0, d1) = (slack(initial), slack(&r.final_assignment));
    report.check("delta-final", d1 >= d0 - ORACLE_EPS, || {
        format!("delta fell from {d0:?} to {d1:?} over the run")
    });
    report.absorb(sample_containment(&r.final_assignment, initial, n_points, seed));
    report
}
