//! Swiss cheeses and disc assignment functions.
//!
//! A [`SwissCheese`] is an outer closed disc with a finite list of open discs
//! removed from it. A [`DiscAssignment`] presents the same data indexed by a
//! finite set `S ⊆ ℕ₀` with `0 ∈ S`: index 0 holds the complement of the outer
//! disc and every other index holds an open disc. Indices need not be
//! contiguous, and two indices may carry the same disc.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geometry::{closures_intersect, point_in, ClosedDisc, GeneralizedDisc, OpenDisc, Point};

/// Outer radius minus the radii of the removed discs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeltaReport {
    pub outer_radius: f64,
    pub disc_radius_sum: f64,
    pub delta: f64,
}

impl DeltaReport {
    fn new(outer_radius: f64, radii: impl IntoIterator<Item = f64>) -> Self {
        let disc_radius_sum: f64 = radii.into_iter().sum();
        DeltaReport {
            outer_radius,
            disc_radius_sum,
            delta: outer_radius - disc_radius_sum,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SwissCheese {
    pub outer: ClosedDisc,
    pub discs: Vec<OpenDisc>,
}

impl SwissCheese {
    pub fn new(outer: ClosedDisc, discs: Vec<OpenDisc>) -> Self {
        SwissCheese { outer, discs }
    }

    pub fn delta(&self) -> DeltaReport {
        DeltaReport::new(self.outer.radius(), self.discs.iter().map(OpenDisc::radius))
    }

    /// Slack of the cheese read as a pair (Δ, 𝒟) with 𝒟 a set: repeated discs
    /// are counted once.
    pub fn set_delta(&self) -> DeltaReport {
        DeltaReport::new(
            self.outer.radius(),
            self.distinct_discs().iter().map(OpenDisc::radius),
        )
    }

    /// Whether the closures of the (distinct) discs meet neither each other nor
    /// the complement of the interior of the outer disc.
    pub fn is_classical(&self) -> bool {
        let discs = self.distinct_discs();
        let complement = GeneralizedDisc::ComplementOfClosed(self.outer);
        for (i, d) in discs.iter().enumerate() {
            let g = GeneralizedDisc::Open(*d);
            if closures_intersect(&g, &complement).expect("open vs complement") {
                return false;
            }
            for e in &discs[i + 1..] {
                if closures_intersect(&g, &GeneralizedDisc::Open(*e)).expect("open vs open") {
                    return false;
                }
            }
        }
        true
    }

    /// Membership in `Δ \ ⋃𝒟`.
    pub fn contains_point(&self, z: Point) -> bool {
        z.distance(self.outer.center()) <= self.outer.radius()
            && self
                .discs
                .iter()
                .all(|d| !point_in(&GeneralizedDisc::Open(*d), z))
    }

    fn distinct_discs(&self) -> Vec<OpenDisc> {
        let mut out: Vec<OpenDisc> = Vec::with_capacity(self.discs.len());
        for d in &self.discs {
            if !out.contains(d) {
                out.push(*d);
            }
        }
        out
    }

    /// Equality up to `eps` on every coordinate and radius, treating the disc
    /// lists as multisets matched by maximum bipartite matching.
    pub fn approx_eq(&self, other: &SwissCheese, eps: f64) -> bool {
        let close = |a: Point, ra: f64, b: Point, rb: f64| {
            (a.x - b.x).abs() <= eps && (a.y - b.y).abs() <= eps && (ra - rb).abs() <= eps
        };
        if !close(
            self.outer.center(),
            self.outer.radius(),
            other.outer.center(),
            other.outer.radius(),
        ) || self.discs.len() != other.discs.len()
        {
            return false;
        }
        let adjacency: Vec<Vec<usize>> = self
            .discs
            .iter()
            .map(|a| {
                other
                    .discs
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| close(a.center(), a.radius(), b.center(), b.radius()))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        perfect_matching_exists(&adjacency, other.discs.len())
    }
}

/// Kuhn's augmenting-path matching on a bipartite graph given as adjacency
/// lists from the left side.
fn perfect_matching_exists(adjacency: &[Vec<usize>], right: usize) -> bool {
    fn augment(
        u: usize,
        adjacency: &[Vec<usize>],
        seen: &mut [bool],
        matched: &mut [Option<usize>],
    ) -> bool {
        for &v in &adjacency[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if matched[v].is_none_or(|w| augment(w, adjacency, seen, matched)) {
                matched[v] = Some(u);
                return true;
            }
        }
        false
    }
    let mut matched = vec![None; right];
    (0..adjacency.len()).all(|u| augment(u, adjacency, &mut vec![false; right], &mut matched))
}

/// A disc assignment function `d: S -> 𝒪` on a finite index set.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscAssignment {
    outer: ClosedDisc,
    discs: BTreeMap<usize, OpenDisc>,
}

impl DiscAssignment {
    /// Index 0 maps to the complement of `outer`; `discs` supplies the other
    /// indices, which must be non-zero and distinct.
    pub fn new(
        outer: ClosedDisc,
        discs: impl IntoIterator<Item = (usize, OpenDisc)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, d) in discs {
            if i == 0 {
                return Err(Error::InvalidAssignment(
                    "index 0 is reserved for the complement".into(),
                ));
            }
            if map.insert(i, d).is_some() {
                return Err(Error::InvalidAssignment(format!("index {i} assigned twice")));
            }
        }
        Ok(DiscAssignment { outer, discs: map })
    }

    /// Build from raw `(index, generalized disc)` entries, checking the shape
    /// constraints: exactly one complement, at index 0.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, GeneralizedDisc)>) -> Result<Self> {
        let mut outer = None;
        let mut discs = Vec::new();
        for (i, g) in entries {
            match (i, g) {
                (0, GeneralizedDisc::ComplementOfClosed(c)) => {
                    if outer.replace(c).is_some() {
                        return Err(Error::InvalidAssignment("index 0 assigned twice".into()));
                    }
                }
                (0, GeneralizedDisc::Open(_)) => {
                    return Err(Error::InvalidAssignment(
                        "index 0 must map to the complement of a closed disc".into(),
                    ))
                }
                (i, GeneralizedDisc::Open(d)) => discs.push((i, d)),
                (i, GeneralizedDisc::ComplementOfClosed(_)) => {
                    return Err(Error::InvalidAssignment(format!(
                        "index {i} maps to a complement; only index 0 may"
                    )))
                }
            }
        }
        let outer =
            outer.ok_or_else(|| Error::InvalidAssignment("index 0 is missing".into()))?;
        DiscAssignment::new(outer, discs)
    }

    /// The injective assignment sending list position `k` to index `k + 1`.
    pub fn from_cheese(cheese: &SwissCheese) -> Self {
        DiscAssignment {
            outer: cheese.outer,
            discs: cheese
                .discs
                .iter()
                .enumerate()
                .map(|(k, d)| (k + 1, *d))
                .collect(),
        }
    }

    /// `D_d`: the outer disc and the images in increasing index order.
    /// Repeated discs stay repeated in the list.
    pub fn to_cheese(&self) -> SwissCheese {
        SwissCheese {
            outer: self.outer,
            discs: self.discs.values().copied().collect(),
        }
    }

    /// The closed disc whose complement is `d(0)`.
    pub fn outer(&self) -> &ClosedDisc {
        &self.outer
    }

    pub fn discs(&self) -> &BTreeMap<usize, OpenDisc> {
        &self.discs
    }

    pub fn get(&self, index: usize) -> Option<GeneralizedDisc> {
        if index == 0 {
            Some(GeneralizedDisc::ComplementOfClosed(self.outer))
        } else {
            self.discs.get(&index).map(|d| GeneralizedDisc::Open(*d))
        }
    }

    pub fn contains_index(&self, index: usize) -> bool {
        index == 0 || self.discs.contains_key(&index)
    }

    /// The index set `S` in increasing order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(0).chain(self.discs.keys().copied())
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, GeneralizedDisc)> + '_ {
        std::iter::once((0, GeneralizedDisc::ComplementOfClosed(self.outer)))
            .chain(self.discs.iter().map(|(&i, d)| (i, GeneralizedDisc::Open(*d))))
    }

    /// `|S|`, including index 0.
    pub fn len(&self) -> usize {
        self.discs.len() + 1
    }

    /// Always false: index 0 is always present.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// `δ_d`, counting repeated discs with multiplicity.
    pub fn delta(&self) -> DeltaReport {
        DeltaReport::new(self.outer.radius(), self.discs.values().map(OpenDisc::radius))
    }

    pub fn has_fh_condition(&self) -> bool {
        self.delta().delta > 0.0
    }

    /// No two distinct indices carry discs with intersecting closures.
    pub fn is_classical(&self) -> bool {
        let entries: Vec<_> = self.entries().collect();
        entries.iter().enumerate().all(|(k, (_, a))| {
            entries[k + 1..].iter().all(|(_, b)| {
                !closures_intersect(a, b).expect("an assignment has a single complement")
            })
        })
    }

    pub fn is_injective(&self) -> bool {
        let discs: Vec<_> = self.discs.values().collect();
        discs
            .iter()
            .enumerate()
            .all(|(k, a)| discs[k + 1..].iter().all(|b| a != b))
    }

    /// Membership of `z` in `X_d`, i.e. `z` lies in no `d(i)`.
    pub fn in_cheese_set(&self, z: Point) -> bool {
        self.entries().all(|(_, g)| !point_in(&g, z))
    }

    pub(crate) fn set_outer(&mut self, outer: ClosedDisc) {
        self.outer = outer;
    }

    pub(crate) fn set_disc(&mut self, index: usize, disc: OpenDisc) {
        debug_assert!(index != 0);
        self.discs.insert(index, disc);
    }

    pub(crate) fn remove_disc(&mut self, index: usize) -> Option<OpenDisc> {
        self.discs.remove(&index)
    }
}
