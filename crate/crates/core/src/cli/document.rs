//! JSON documents for cheeses and classicalisation traces.
//!
//! Disc lists are in index order 1..n; index 0 is the implicit `outer` field.
//! Assignments whose indices are not `1..=n` carry an explicit `indices` list.
//! Numbers are written in the shortest form that parses back to the same
//! binary64 value.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cheese::{DiscAssignment, SwissCheese};
use crate::engine::{CaseTag, ClassicalisationResult, CollisionPair, StepRecord};
use crate::error::{Error, Result};
use crate::geometry::{ClosedDisc, GeneralizedDisc, OpenDisc, Point};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscDoc {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

impl DiscDoc {
    fn open(d: &OpenDisc) -> Self {
        DiscDoc {
            cx: d.center().x,
            cy: d.center().y,
            r: d.radius(),
        }
    }

    fn closed(d: &ClosedDisc) -> Self {
        DiscDoc {
            cx: d.center().x,
            cy: d.center().y,
            r: d.radius(),
        }
    }

    fn to_open(self) -> Result<OpenDisc> {
        OpenDisc::new(Point::new(self.cx, self.cy)?, self.r)
    }

    fn to_closed(self) -> Result<ClosedDisc> {
        ClosedDisc::new(Point::new(self.cx, self.cy)?, self.r)
    }
}

/// Parameters a generated cheese was drawn with.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorParams {
    pub seed: u64,
    pub discs: usize,
    pub delta_min: f64,
    pub outer_r: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheeseDocument {
    pub outer: DiscDoc,
    pub discs: Vec<DiscDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indices: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<GeneratorParams>,
}

impl CheeseDocument {
    pub fn from_cheese(c: &SwissCheese) -> Self {
        CheeseDocument {
            outer: DiscDoc::closed(&c.outer),
            discs: c.discs.iter().map(DiscDoc::open).collect(),
            indices: None,
            metadata: None,
        }
    }

    pub fn from_assignment(d: &DiscAssignment) -> Self {
        let keys: Vec<usize> = d.discs().keys().copied().collect();
        let contiguous = keys.iter().enumerate().all(|(k, &i)| i == k + 1);
        CheeseDocument {
            outer: DiscDoc::closed(d.outer()),
            discs: d.discs().values().map(DiscDoc::open).collect(),
            indices: (!contiguous).then_some(keys),
            metadata: None,
        }
    }

    pub fn to_cheese(&self) -> Result<SwissCheese> {
        Ok(SwissCheese::new(
            self.outer.to_closed()?,
            self.discs
                .iter()
                .map(|d| d.to_open())
                .collect::<Result<_>>()?,
        ))
    }

    pub fn to_assignment(&self) -> Result<DiscAssignment> {
        let indices: Vec<usize> = match &self.indices {
            Some(ix) if ix.len() != self.discs.len() => {
                return Err(Error::InvalidAssignment(format!(
                    "{} indices for {} discs",
                    ix.len(),
                    self.discs.len()
                )))
            }
            Some(ix) => ix.clone(),
            None => (1..=self.discs.len()).collect(),
        };
        let discs = indices
            .into_iter()
            .zip(&self.discs)
            .map(|(i, d)| Ok((i, d.to_open()?)))
            .collect::<Result<Vec<_>>>()?;
        DiscAssignment::new(self.outer.to_closed()?, discs)
    }

    pub fn delta(&self) -> f64 {
        self.outer.r - self.discs.iter().map(|d| d.r).sum::<f64>()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiscKind {
    Open,
    Complement,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneralizedDiscDoc {
    pub kind: DiscKind,
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

impl GeneralizedDiscDoc {
    fn new(g: &GeneralizedDisc) -> Self {
        let kind = if g.is_complement() {
            DiscKind::Complement
        } else {
            DiscKind::Open
        };
        GeneralizedDiscDoc {
            kind,
            cx: g.center().x,
            cy: g.center().y,
            r: g.radius(),
        }
    }

    fn to_disc(self) -> Result<GeneralizedDisc> {
        let c = Point::new(self.cx, self.cy)?;
        Ok(match self.kind {
            DiscKind::Open => GeneralizedDisc::Open(OpenDisc::new(c, self.r)?),
            DiscKind::Complement => GeneralizedDisc::ComplementOfClosed(ClosedDisc::new(c, self.r)?),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseDoc {
    Merge,
    Shrink,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepDoc {
    pub n: usize,
    pub m: usize,
    pub case: CaseDoc,
    pub removed_index: usize,
    pub before_n: GeneralizedDiscDoc,
    pub before_m: GeneralizedDiscDoc,
    pub after_n: GeneralizedDiscDoc,
    pub delta_before: f64,
    pub delta_after: f64,
}

impl StepDoc {
    pub fn from_record(rec: &StepRecord) -> Self {
        StepDoc {
            n: rec.pair.n,
            m: rec.pair.m,
            case: match rec.case_tag {
                CaseTag::Merge => CaseDoc::Merge,
                CaseTag::Shrink => CaseDoc::Shrink,
            },
            removed_index: rec.removed_index,
            before_n: GeneralizedDiscDoc::new(&rec.before_n),
            before_m: GeneralizedDiscDoc::new(&rec.before_m),
            after_n: GeneralizedDiscDoc::new(&rec.after_n),
            delta_before: rec.delta_before,
            delta_after: rec.delta_after,
        }
    }

    pub fn to_record(&self) -> Result<StepRecord> {
        Ok(StepRecord {
            pair: CollisionPair {
                n: self.n,
                m: self.m,
            },
            case_tag: match self.case {
                CaseDoc::Merge => CaseTag::Merge,
                CaseDoc::Shrink => CaseTag::Shrink,
            },
            removed_index: self.removed_index,
            before_n: self.before_n.to_disc()?,
            before_m: self.before_m.to_disc()?,
            after_n: self.after_n.to_disc()?,
            delta_before: self.delta_before,
            delta_after: self.delta_after,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Deltas {
    pub initial: f64,
    #[serde(rename = "final")]
    pub final_: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub initial: CheeseDocument,
    pub steps: Vec<StepDoc>,
    #[serde(rename = "final")]
    pub final_: CheeseDocument,
    pub deltas: Deltas,
    pub stabilised: bool,
}

impl TraceDocument {
    pub fn from_run(initial: &DiscAssignment, run: &ClassicalisationResult) -> Self {
        TraceDocument {
            initial: CheeseDocument::from_assignment(initial),
            steps: run.trace.iter().map(StepDoc::from_record).collect(),
            final_: CheeseDocument::from_assignment(&run.final_assignment),
            deltas: Deltas {
                initial: initial.delta().delta,
                final_: run.final_assignment.delta().delta,
            },
            stabilised: run.stabilised,
        }
    }

    /// The initial assignment and the run exactly as recorded; nothing is
    /// recomputed.
    pub fn to_run(&self) -> Result<(DiscAssignment, ClassicalisationResult)> {
        let initial = self.initial.to_assignment()?;
        let trace = self
            .steps
            .iter()
            .map(StepDoc::to_record)
            .collect::<Result<Vec<_>>>()?;
        let run = ClassicalisationResult {
            final_assignment: self.final_.to_assignment()?,
            steps: trace.len(),
            trace,
            stabilised: self.stabilised,
        };
        Ok((initial, run))
    }

    /// Cheeses before the first step and after each step, replayed from the
    /// records.
    pub fn frames(&self) -> Result<Vec<SwissCheese>> {
        let (initial, run) = self.to_run()?;
        let mut current = initial;
        let mut frames = vec![current.to_cheese()];
        for rec in &run.trace {
            current = rec.apply(&current)?;
            frames.push(current.to_cheese());
        }
        Ok(frames)
    }
}

/// Either document kind, as accepted by `render`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Document {
    Trace(TraceDocument),
    Cheese(CheeseDocument),
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents contain only finite numbers");
    s.push('\n');
    s
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| Error::Parse {
        path: path.to_owned(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}
