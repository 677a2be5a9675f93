//! Seeded random cheeses with positive slack.
//!
//! The outer disc is centred at the origin. Each disc is independently a
//! stress disc with probability [`STRESS_PROBABILITY`], split evenly between
//!
//! * a duplicate of an earlier disc (same centre and radius),
//! * a disc externally tangent to an earlier disc (up to rounding),
//! * a disc straddling the outer boundary, from internally tangent to
//!   externally tangent;
//!
//! the first disc, having no predecessor, is always of the boundary type when
//! stressed. Other discs get centres rejection-sampled uniformly in the outer
//! disc. Radii are drawn as weights in `[0.2, 1]` and scaled so that their sum
//! is a uniform fraction in `[0.5, 0.95]` of `outer_r - delta_min`, which keeps
//! `δ > delta_min` with room to spare.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::document::{CheeseDocument, DiscDoc, GeneratorParams};
use crate::error::{Error, Result};

pub const STRESS_PROBABILITY: f64 = 0.2;

#[derive(Clone, Copy)]
enum Placement {
    Free,
    Duplicate(usize),
    Tangent(usize),
    Boundary,
}

pub fn generate(params: &GeneratorParams) -> Result<CheeseDocument> {
    let GeneratorParams {
        seed,
        discs: n,
        delta_min,
        outer_r,
    } = *params;
    if !(outer_r.is_finite() && outer_r > 0.0) {
        return Err(Error::Generator(format!("outer radius {outer_r} must be positive")));
    }
    if !(delta_min.is_finite() && delta_min > 0.0) {
        return Err(Error::Generator(format!("delta_min {delta_min} must be positive")));
    }
    if delta_min >= outer_r {
        return Err(Error::Generator(format!(
            "delta_min {delta_min} must be below the outer radius {outer_r}"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let placements: Vec<Placement> = (0..n)
        .map(|i| {
            if !rng.random_bool(STRESS_PROBABILITY) {
                return Placement::Free;
            }
            if i == 0 {
                return Placement::Boundary;
            }
            match rng.random_range(0..3) {
                0 => Placement::Duplicate(rng.random_range(0..i)),
                1 => Placement::Tangent(rng.random_range(0..i)),
                _ => Placement::Boundary,
            }
        })
        .collect();

    let mut weights: Vec<f64> = Vec::with_capacity(n);
    for p in &placements {
        let w = match *p {
            Placement::Duplicate(j) => weights[j],
            _ => rng.random_range(0.2..=1.0),
        };
        weights.push(w);
    }
    let total: f64 = weights.iter().sum();
    let target = (outer_r - delta_min) * rng.random_range(0.5..=0.95);
    let scale = if n == 0 { 0.0 } else { target / total };

    let mut discs: Vec<DiscDoc> = Vec::with_capacity(n);
    for (p, w) in placements.iter().zip(&weights) {
        let r = scale * w;
        let disc = match *p {
            Placement::Free => loop {
                let x = rng.random_range(-outer_r..=outer_r);
                let y = rng.random_range(-outer_r..=outer_r);
                if x * x + y * y <= outer_r * outer_r {
                    break DiscDoc { cx: x, cy: y, r };
                }
            },
            Placement::Duplicate(j) => discs[j],
            Placement::Tangent(j) => {
                let base = discs[j];
                let theta = rng.random_range(0.0..std::f64::consts::TAU);
                let d = base.r + r;
                DiscDoc {
                    cx: base.cx + d * theta.cos(),
                    cy: base.cy + d * theta.sin(),
                    r,
                }
            }
            Placement::Boundary => {
                let theta = rng.random_range(0.0..std::f64::consts::TAU);
                let rho = outer_r + r * rng.random_range(-1.0..=1.0);
                DiscDoc {
                    cx: rho * theta.cos(),
                    cy: rho * theta.sin(),
                    r,
                }
            }
        };
        discs.push(disc);
    }

    let doc = CheeseDocument {
        outer: DiscDoc {
            cx: 0.0,
            cy: 0.0,
            r: outer_r,
        },
        discs,
        indices: None,
        metadata: Some(*params),
    };
    debug_assert!(doc.delta() > delta_min);
    Ok(doc)
}
