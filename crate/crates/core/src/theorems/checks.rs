//! Spectral comparisons used along the way: the ordering around `G*`, the
//! lower bounds on the radii of `G′`, and the orderings between join
//! families with different part vectors.

use std::str::FromStr;

use serde::Serialize;

use super::{eta_hypothesis_bound, Tolerances};
use crate::error::{Error, Result};
use crate::graph::{connected_extremal, extremal_gprime, family, g_star, ExtremalParams};
use crate::spectral::{spectral_radius, MatrixKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Holds,
    Violated,
    /// The check's own hypotheses fail; nothing was asserted.
    Inapplicable,
}

impl CheckOutcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckOutcome::Holds
        } else {
            CheckOutcome::Violated
        }
    }

    pub fn holds(self) -> bool {
        self == CheckOutcome::Holds
    }
}

/// Outcome of a comparison with both sides when they were evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Comparison {
    pub outcome: CheckOutcome,
    pub left: Option<f64>,
    pub right: Option<f64>,
}

impl Comparison {
    fn inapplicable() -> Self {
        Comparison {
            outcome: CheckOutcome::Inapplicable,
            left: None,
            right: None,
        }
    }
}

/// Distance radii of `K_{k+1} ∨ (K_{n-b-k-2} ∪ (b+1)K_1)`, `G*` and
/// `K_{k+2} ∨ (K_{n-2b-k-3} ∪ (2b+1)K_1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GstarOrdering {
    pub lower: f64,
    pub gstar: f64,
    pub upper: f64,
    pub holds: bool,
}

/// Checks `μ1(lower) < μ1(G*) < μ1(upper)` with the strict margin.
pub fn gstar_ordering_check(
    n: usize,
    b: usize,
    k: usize,
    tol: &Tolerances,
) -> Result<GstarOrdering> {
    let gstar = spectral_radius(&g_star(n, b, k)?, MatrixKind::Distance)?;
    let lower = spectral_radius(&connected_extremal(n, b, k)?, MatrixKind::Distance)?;
    let upper = spectral_radius(
        &extremal_gprime(&ExtremalParams::new(n, b, k, k + 2))?,
        MatrixKind::Distance,
    )?;
    Ok(GstarOrdering {
        lower,
        gstar,
        upper,
        holds: tol.strictly_greater(gstar, lower) && tol.strictly_greater(upper, gstar),
    })
}

/// `μ1(G′) >= n - bδ + bk - 2`, the radius of its big clique together with
/// the join clique as a principal submatrix.
pub fn interlacing_bound_check(p: &ExtremalParams, tol: &Tolerances) -> Result<Comparison> {
    let g = extremal_gprime(p)?;
    let mu = spectral_radius(&g, MatrixKind::Distance)?;
    let bound = p.n as f64 - (p.b * p.delta) as f64 + (p.b * p.k) as f64 - 2.0;
    Ok(Comparison {
        outcome: CheckOutcome::from_bool(tol.at_least(mu, bound)),
        left: Some(mu),
        right: Some(bound),
    })
}

/// `η1(G′) > 2n + 4bδ - 4bk + 1`, gated on `n >= 2(b²+2b)δ² + 2δ + 2b²k²`.
pub fn eta_lower_bound_check(p: &ExtremalParams, tol: &Tolerances) -> Result<Comparison> {
    let g = extremal_gprime(p)?;
    if (p.n as u64) < eta_hypothesis_bound(p.b, p.k, p.delta) {
        return Ok(Comparison::inapplicable());
    }
    let eta = spectral_radius(&g, MatrixKind::DistanceSignlessLaplacian)?;
    let bound = (2 * p.n + 4 * p.b * p.delta) as f64 - (4 * p.b * p.k) as f64 + 1.0;
    Ok(Comparison {
        outcome: CheckOutcome::from_bool(tol.strictly_greater(eta, bound)),
        left: Some(eta),
        right: Some(bound),
    })
}

/// Orderings between `K_s ∨ (K_{n_1} ∪ … ∪ K_{n_t})` and the family with the
/// same `s` and `t` whose parts are as unbalanced as allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyOrdering {
    /// Distance radius strictly exceeds that of `K_s ∨ (K_{n-s-p(t-1)} ∪ (t-1)K_p)`
    /// when `n_t >= p` and `n_1 < n-s-p(t-1)`.
    DistanceAboveUnbalanced,
    /// Distance signless Laplacian radius is at least that of
    /// `K_s ∨ (K_{n-s-t+1} ∪ (t-1)K_1)`, with equality only for that graph.
    SignlessAboveSingletons,
    /// As above against `K_s ∨ (K_{n-s-p(t-1)} ∪ (t-1)K_p)`, when `n_1 >= 5p`
    /// and `t >= s+1`.
    SignlessAboveUnbalanced,
}

impl FamilyOrdering {
    pub const ALL: [FamilyOrdering; 3] = [
        FamilyOrdering::DistanceAboveUnbalanced,
        FamilyOrdering::SignlessAboveSingletons,
        FamilyOrdering::SignlessAboveUnbalanced,
    ];

    /// External identifier accepted by `FromStr`.
    pub fn code(self) -> &'static str {
        match self {
            FamilyOrdering::DistanceAboveUnbalanced => "2.8",
            FamilyOrdering::SignlessAboveSingletons => "2.9",
            FamilyOrdering::SignlessAboveUnbalanced => "2.10",
        }
    }

    fn kind(self) -> MatrixKind {
        match self {
            FamilyOrdering::DistanceAboveUnbalanced => MatrixKind::Distance,
            _ => MatrixKind::DistanceSignlessLaplacian,
        }
    }

    /// Whether the sorted part vector meets the comparison's hypotheses.
    fn admits(self, s: usize, parts: &[usize], p: usize) -> bool {
        let t = parts.len();
        let total: usize = parts.iter().sum();
        let (n1, nt) = (parts[0], parts[t - 1]);
        match self {
            FamilyOrdering::DistanceAboveUnbalanced => {
                p >= 1 && nt >= p && n1 + p * (t - 1) < total
            }
            FamilyOrdering::SignlessAboveSingletons => true,
            FamilyOrdering::SignlessAboveUnbalanced => p >= 1 && nt >= p && n1 >= 5 * p && t > s,
        }
    }
}

impl FromStr for FamilyOrdering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyOrdering::ALL
            .into_iter()
            .find(|l| l.code() == s.trim())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown ordering comparison {s}")))
    }
}

/// Evaluates one ordering on `K_s ∨ (K_{parts[0]} ∪ …)`. Parts are sorted
/// into non-increasing order first; `p` is ignored by the singleton variant.
/// Unmet hypotheses give [`CheckOutcome::Inapplicable`].
pub fn family_ordering_check(
    ordering: FamilyOrdering,
    s: usize,
    parts: &[usize],
    p: usize,
    tol: &Tolerances,
) -> Result<Comparison> {
    let mut parts = parts.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    if s == 0 || parts.is_empty() || parts.contains(&0) || !ordering.admits(s, &parts, p) {
        return Ok(Comparison::inapplicable());
    }
    let p = if ordering == FamilyOrdering::SignlessAboveSingletons {
        1
    } else {
        p
    };
    let t = parts.len();
    let total: usize = parts.iter().sum();
    let mut target = vec![p; t];
    target[0] = total - p * (t - 1);

    let kind = ordering.kind();
    let left = spectral_radius(&family(s, &parts)?, kind)?;
    let right = spectral_radius(&family(s, &target)?, kind)?;
    let ok = match ordering {
        FamilyOrdering::DistanceAboveUnbalanced => tol.strictly_greater(left, right),
        _ if parts == target => tol.approx_eq(left, right),
        _ => tol.strictly_greater(left, right),
    };
    Ok(Comparison {
        outcome: CheckOutcome::from_bool(ok),
        left: Some(left),
        right: Some(right),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn gstar_ordering() {
        assert!(gstar_ordering_check(19, 1, 1, &tol()).unwrap().holds);
        assert!(gstar_ordering_check(25, 3, 1, &tol()).unwrap().holds);
        assert!(gstar_ordering_check(5, 1, 1, &tol()).is_err());
    }

    #[test]
    fn gprime_radius_bounds() {
        for (n, d, bound) in [(19, 3, 15.0), (31, 2, 28.0), (47, 3, 43.0)] {
            let c = interlacing_bound_check(&ExtremalParams::new(n, 1, 1, d), &tol()).unwrap();
            assert!(c.outcome.holds());
            assert_eq!(c.right, Some(bound));
        }
    }

    #[test]
    fn eta_bound_and_gate() {
        let c = eta_lower_bound_check(&ExtremalParams::new(31, 1, 1, 2), &tol()).unwrap();
        assert_eq!(c.right, Some(67.0));
        assert!(c.outcome.holds(), "{c:?}");
        // the order gate for δ = 3 is 62, so the first admissible odd order is 63
        let c = eta_lower_bound_check(&ExtremalParams::new(63, 1, 1, 3), &tol()).unwrap();
        assert_eq!(c.right, Some(135.0));
        assert!(c.outcome.holds(), "{c:?}");
        for (n, d) in [(29, 2), (61, 3)] {
            let c = eta_lower_bound_check(&ExtremalParams::new(n, 1, 1, d), &tol()).unwrap();
            assert_eq!(c.outcome, CheckOutcome::Inapplicable);
        }
    }

    #[test]
    fn part_orderings() {
        let c = family_ordering_check(
            FamilyOrdering::DistanceAboveUnbalanced,
            2,
            &[3, 3, 1],
            1,
            &tol(),
        )
        .unwrap();
        assert!(c.outcome.holds(), "{c:?}");
        let c = family_ordering_check(
            FamilyOrdering::SignlessAboveSingletons,
            2,
            &[3, 3, 1],
            1,
            &tol(),
        )
        .unwrap();
        assert!(c.outcome.holds());
        let c = family_ordering_check(
            FamilyOrdering::SignlessAboveSingletons,
            2,
            &[1, 5, 1],
            1,
            &tol(),
        )
        .unwrap();
        assert!(c.outcome.holds());
        assert_eq!(c.left, c.right);
    }

    #[test]
    fn unmet_hypotheses_are_inapplicable() {
        // already as unbalanced as possible
        let c = family_ordering_check(
            FamilyOrdering::DistanceAboveUnbalanced,
            2,
            &[5, 1, 1],
            1,
            &tol(),
        )
        .unwrap();
        assert_eq!(c.outcome, CheckOutcome::Inapplicable);
        // largest part below 5p
        let c = family_ordering_check(
            FamilyOrdering::SignlessAboveUnbalanced,
            1,
            &[4, 2],
            1,
            &tol(),
        )
        .unwrap();
        assert_eq!(c.outcome, CheckOutcome::Inapplicable);
        let c = family_ordering_check(
            FamilyOrdering::SignlessAboveUnbalanced,
            1,
            &[6, 2],
            1,
            &tol(),
        )
        .unwrap();
        assert!(c.outcome.holds());
    }

    #[test]
    fn codes_parse() {
        for l in FamilyOrdering::ALL {
            assert_eq!(l.code().parse::<FamilyOrdering>().unwrap(), l);
        }
        assert!("2.7".parse::<FamilyOrdering>().is_err());
    }
}
