//! Limits of nested disc chains.
//!
//! The union of an increasing nested chain of open discs with bounded radii is
//! an open disc whose radius is the supremum of the radii; dually the
//! intersection of a decreasing chain of closed discs with radii bounded away
//! from zero is a closed disc of radius equal to the infimum.
//!
//! Finite chains are resolved exactly (the last term). Chains given by a
//! generator `k -> disc` (with `k = 1, 2, ...`) are evaluated until the radius
//! increment drops below `tolerance` or `max_terms` is reached, and the limit
//! is then estimated by polynomial extrapolation in `1/k` through the last term
//! and two earlier dyadic terms. The estimate is discarded in favour of the last evaluated term
//! whenever it would break nesting with that term.

use super::{ClosedDisc, OpenDisc, Point};
use crate::error::{Error, Result};

/// Relative slack for the nestedness check between consecutive terms.
const NEST_EPS: f64 = 1e-9;

/// Ratio of successive dyadic radius increments above which an increasing
/// chain is treated as unbounded.
const DIVERGENCE_RATIO: f64 = 0.75;

pub enum Chain<'a, D> {
    Finite(&'a [D]),
    /// Term `k` of the chain, `k >= 1`.
    Generated(&'a dyn Fn(usize) -> Result<D>),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChainLimitOptions {
    pub tolerance: f64,
    pub max_terms: usize,
}

impl Default for ChainLimitOptions {
    fn default() -> Self {
        ChainLimitOptions {
            tolerance: 1e-6,
            max_terms: 1_000_000,
        }
    }
}

pub fn limit_of_nested_open_chain(
    chain: Chain<'_, OpenDisc>,
    options: ChainLimitOptions,
) -> Result<OpenDisc> {
    limit(chain, options)
}

pub fn limit_of_nested_closed_chain(
    chain: Chain<'_, ClosedDisc>,
    options: ChainLimitOptions,
) -> Result<ClosedDisc> {
    limit(chain, options)
}

#[derive(Clone, Copy, PartialEq)]
enum Direction {
    Increasing,
    Decreasing,
}

trait ChainTerm: Copy {
    const DIRECTION: Direction;
    fn center(&self) -> Point;
    fn radius(&self) -> f64;
    fn build(center: Point, radius: f64) -> Result<Self>;
}

impl ChainTerm for OpenDisc {
    const DIRECTION: Direction = Direction::Increasing;
    fn center(&self) -> Point {
        self.center
    }
    fn radius(&self) -> f64 {
        self.radius
    }
    fn build(center: Point, radius: f64) -> Result<Self> {
        OpenDisc::new(center, radius)
    }
}

impl ChainTerm for ClosedDisc {
    const DIRECTION: Direction = Direction::Decreasing;
    fn center(&self) -> Point {
        self.center
    }
    fn radius(&self) -> f64 {
        self.radius
    }
    fn build(center: Point, radius: f64) -> Result<Self> {
        ClosedDisc::new(center, radius)
    }
}

/// Margin by which `small ⊆ big`, for discs given as centre and radius.
fn nesting_slack<D: ChainTerm>(big: &D, small: &D) -> f64 {
    big.radius() - (big.center().distance(small.center()) + small.radius())
}

fn nested<D: ChainTerm>(prev: &D, next: &D) -> bool {
    let (big, small) = match D::DIRECTION {
        Direction::Increasing => (next, prev),
        Direction::Decreasing => (prev, next),
    };
    nesting_slack(big, small) >= -NEST_EPS * big.radius().max(1.0)
}

fn limit<D: ChainTerm>(chain: Chain<'_, D>, options: ChainLimitOptions) -> Result<D> {
    match chain {
        Chain::Finite(terms) => {
            let last = terms.last().ok_or(Error::EmptyChain)?;
            for (i, pair) in terms.windows(2).enumerate() {
                if !nested(&pair[0], &pair[1]) {
                    return Err(Error::ChainNotNested { index: i + 1 });
                }
            }
            Ok(*last)
        }
        Chain::Generated(term) => generated_limit(term, options),
    }
}

fn generated_limit<D: ChainTerm>(
    term: &dyn Fn(usize) -> Result<D>,
    options: ChainLimitOptions,
) -> Result<D> {
    if options.max_terms == 0 {
        return Err(Error::EmptyChain);
    }
    let mut last = term(1)?;
    // Terms at k = 1, 2, 4, 8, ...
    let mut dyadic = vec![(1usize, last)];
    let mut k = 1;
    let mut converged = false;
    while k < options.max_terms {
        k += 1;
        let next = term(k)?;
        if !nested(&last, &next) {
            return Err(Error::ChainNotNested { index: k });
        }
        let increment = (next.radius() - last.radius()).abs();
        last = next;
        if k.is_power_of_two() {
            dyadic.push((k, next));
        }
        if increment < options.tolerance {
            converged = true;
            break;
        }
    }

    if D::DIRECTION == Direction::Increasing && !converged && dyadic.len() >= 3 {
        let n = dyadic.len();
        let (r0, r1, r2) = (
            dyadic[n - 3].1.radius(),
            dyadic[n - 2].1.radius(),
            dyadic[n - 1].1.radius(),
        );
        let (earlier, latest) = (r1 - r0, r2 - r1);
        if latest > options.tolerance && latest > DIVERGENCE_RATIO * earlier {
            return Err(Error::ChainUnbounded { terms: k });
        }
    }

    if k < 4 {
        return check_inf(last, options);
    }
    // Nodes k, then the largest dyadic indices at or below half the previous.
    let mut nodes = vec![(k, last)];
    for &(j, d) in dyadic.iter().rev() {
        if nodes.len() == 3 {
            break;
        }
        if 2 * j <= nodes[nodes.len() - 1].0 {
            nodes.push((j, d));
        }
    }
    // Lagrange weights for interpolation in h = 1/k evaluated at h = 0.
    let weights: Vec<f64> = nodes
        .iter()
        .map(|&(i, _)| {
            nodes
                .iter()
                .filter(|&&(m, _)| m != i)
                .map(|&(m, _)| i as f64 / (i as f64 - m as f64))
                .product()
        })
        .collect();
    let extrapolate = |f: &dyn Fn(&D) -> f64| -> f64 {
        nodes.iter().zip(&weights).map(|((_, d), w)| w * f(d)).sum()
    };
    let center = Point {
        x: extrapolate(&|d| d.center().x),
        y: extrapolate(&|d| d.center().y),
    };
    let radius = extrapolate(&|d| d.radius());

    if D::DIRECTION == Direction::Decreasing && radius <= options.tolerance {
        return Err(Error::ChainInfNotPositive { estimate: radius });
    }
    let estimate = match D::build(center, radius) {
        Ok(d) => d,
        Err(_) => return check_inf(last, options),
    };
    let keeps_nesting = match D::DIRECTION {
        Direction::Increasing => estimate.radius() >= last.radius() && nested(&last, &estimate),
        Direction::Decreasing => estimate.radius() <= last.radius() && nested(&last, &estimate),
    };
    check_inf(if keeps_nesting { estimate } else { last }, options)
}

fn check_inf<D: ChainTerm>(d: D, options: ChainLimitOptions) -> Result<D> {
    if D::DIRECTION == Direction::Decreasing && d.radius() <= options.tolerance {
        return Err(Error::ChainInfNotPositive {
            estimate: d.radius(),
        });
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn open(x: f64, r: f64) -> OpenDisc {
        OpenDisc::at(x, 0.0, r).unwrap()
    }

    fn closed(x: f64, r: f64) -> ClosedDisc {
        ClosedDisc::at(x, 0.0, r).unwrap()
    }

    fn near(d: (Point, f64), want: (f64, f64, f64), tol: f64) -> bool {
        (d.0.x - want.0).abs() <= tol && (d.0.y - want.1).abs() <= tol && (d.1 - want.2).abs() <= tol
    }

    #[test]
    fn finite_chains_return_last_term() {
        let opens = [open(0.0, 1.0), open(0.0, 1.5), open(0.0, 2.0)];
        let l = limit_of_nested_open_chain(Chain::Finite(&opens), Default::default()).unwrap();
        assert_eq!(l, opens[2]);
        let closeds = [closed(0.0, 2.0), closed(0.5, 1.0)];
        let l = limit_of_nested_closed_chain(Chain::Finite(&closeds), Default::default()).unwrap();
        assert_eq!(l, closeds[1]);
    }

    #[test]
    fn finite_chain_errors() {
        let none: [OpenDisc; 0] = [];
        assert!(matches!(
            limit_of_nested_open_chain(Chain::Finite(&none), Default::default()),
            Err(Error::EmptyChain)
        ));
        let broken = [open(0.0, 1.0), open(3.0, 1.5)];
        assert!(matches!(
            limit_of_nested_open_chain(Chain::Finite(&broken), Default::default()),
            Err(Error::ChainNotNested { index: 1 })
        ));
        let growing = [closed(0.0, 1.0), closed(0.0, 2.0)];
        assert!(limit_of_nested_closed_chain(Chain::Finite(&growing), Default::default()).is_err());
    }

    #[test]
    fn generated_open_chains() {
        let e = |k: usize| {
            let k = k as f64;
            OpenDisc::at(1.0 - 1.0 / k, 0.0, 2.0 - 1.0 / k)
        };
        let l = limit_of_nested_open_chain(Chain::Generated(&e), Default::default()).unwrap();
        assert!(near((l.center(), l.radius()), (1.0, 0.0, 2.0), 1e-6), "{l:?}");
        for k in [1usize, 2, 10, 1000, 100_000] {
            let ek = e(k).unwrap();
            assert!(l.center().distance(ek.center()) + ek.radius() <= l.radius() + 1e-9);
        }

        let g = |k: usize| OpenDisc::at(0.0, 0.0, 1.0 - 1.0 / (k as f64 + 1.0));
        let l = limit_of_nested_open_chain(Chain::Generated(&g), Default::default()).unwrap();
        assert!(near((l.center(), l.radius()), (0.0, 0.0, 1.0), 1e-6), "{l:?}");
    }

    #[test]
    fn generated_closed_chains() {
        let f = |k: usize| ClosedDisc::at(0.0, 0.0, 1.0 + 1.0 / k as f64);
        let l = limit_of_nested_closed_chain(Chain::Generated(&f), Default::default()).unwrap();
        assert!(near((l.center(), l.radius()), (0.0, 0.0, 1.0), 1e-6), "{l:?}");

        let f = |k: usize| {
            let k = k as f64;
            ClosedDisc::at(1.0 / k, 0.0, 1.0 + 2.0 / k)
        };
        let l = limit_of_nested_closed_chain(Chain::Generated(&f), Default::default()).unwrap();
        assert!(near((l.center(), l.radius()), (0.0, 0.0, 1.0), 1e-6), "{l:?}");
        for k in [1usize, 3, 50, 10_000] {
            let fk = f(k).unwrap();
            assert!(fk.center().distance(l.center()) + l.radius() <= fk.radius() + 1e-9);
        }
    }

    #[test]
    fn generated_chain_errors() {
        let unbounded = |k: usize| OpenDisc::at(0.0, 0.0, k as f64);
        let opts = ChainLimitOptions {
            tolerance: 1e-6,
            max_terms: 10_000,
        };
        assert!(matches!(
            limit_of_nested_open_chain(Chain::Generated(&unbounded), opts),
            Err(Error::ChainUnbounded { .. })
        ));

        let vanishing = |k: usize| ClosedDisc::at(0.0, 0.0, 1.0 / k as f64);
        assert!(matches!(
            limit_of_nested_closed_chain(Chain::Generated(&vanishing), opts),
            Err(Error::ChainInfNotPositive { .. })
        ));

        let wandering = |k: usize| OpenDisc::at(k as f64, 0.0, 1.0);
        assert!(matches!(
            limit_of_nested_open_chain(Chain::Generated(&wandering), opts),
            Err(Error::ChainNotNested { index: 2 })
        ));
    }
}
