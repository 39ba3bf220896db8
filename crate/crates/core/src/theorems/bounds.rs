//! Lower bounds on the order `n`, evaluated in exact rational arithmetic so
//! that fractional coefficients never misclassify a boundary case.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use super::TheoremId;
use crate::error::{param_err, Result};

type Q = Ratio<i64>;

/// An exact order bound `n₀`; a graph passes the gate iff `n >= n₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderBound(Q);

impl OrderBound {
    pub fn exact(&self) -> Ratio<i64> {
        self.0
    }

    pub fn value(&self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }

    pub fn admits(&self, n: usize) -> bool {
        Q::from_integer(n as i64) >= self.0
    }

    /// Smallest integer order accepted.
    pub fn min_order(&self) -> i64 {
        self.0.ceil().to_integer()
    }
}

impl Serialize for OrderBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

fn q(x: i64) -> Q {
    Q::from_integer(x)
}

fn frac(p: i64, r: i64) -> Q {
    Q::new(p, r)
}

/// Bound as printed, without the parameter side conditions.
pub(super) fn raw_order_bound(id: TheoremId, b: usize, k: usize, delta: usize) -> OrderBound {
    let (b, k, d) = (b as i64, k as i64, delta as i64);
    let bound = match id {
        TheoremId::EdgeCount => {
            let first = frac(
                b * b * k * k - 2 * b * b * k * d - 4 * b * b * k - b * k
                    + b * b * d * d
                    + 4 * b * b * d
                    + 7 * b * d
                    + b * b
                    + 8 * b
                    + 1,
                6 * b,
            );
            let second = q((b + 5) * d - (b + 4) * k - b + 1) + frac(5, b);
            first.max(second)
        }
        TheoremId::AdjacencyRadius => q(b * d * d - b * k).max(q((2 * b + 3) * d - b * k + 1)),
        TheoremId::SignlessRadius => (q(2 * b) + frac(43, 10)) * q(d) - q(2 * b * k) + frac(11, 10),
        TheoremId::DistanceRadiusConnected => frac(b * b + 2 * b * k + 5 * b + 2 * k + 4, b),
        TheoremId::DistanceRadius => {
            let first = q(2 * b * b + 3 * b + 11) * q(d)
                - (q(2 * b * b) + frac(5 * b, 2) + frac(3, 2)) * q(k)
                + frac(3 * b, 2)
                + q(2)
                + frac(3, 2 * b);
            let second = frac(2 * b * b * d * d * d, 3) + frac(4 * b * b * k * d * d, 3);
            first.max(second)
        }
        TheoremId::DistanceSignlessRadius => {
            let first = q((2 * b * b + 4 * b) * d * d + 2 * d + 2 * b * b * k * k);
            let second = frac(6 * b * b * d * d * d, 5) + frac(8 * b * b * k * d * d, 5);
            first.max(second)
        }
    };
    OrderBound(bound)
}

/// Order bound of the given condition. The distance signless Laplacian
/// condition is only stated for `b >= k`.
pub fn order_bound(id: TheoremId, b: usize, k: usize, delta: usize) -> Result<OrderBound> {
    if b == 0 || k == 0 {
        return param_err(format!("b = {b} and k = {k} must be positive integers"));
    }
    if id == TheoremId::DistanceSignlessRadius && b < k {
        return param_err(format!(
            "this condition requires b >= k, got b = {b}, k = {k}"
        ));
    }
    Ok(raw_order_bound(id, b, k, delta))
}

/// `2(b²+2b)δ² + 2δ + 2b²k²`, the order needed by the lower bound on the
/// distance signless Laplacian radius of `G′`.
pub fn eta_hypothesis_bound(b: usize, k: usize, delta: usize) -> u64 {
    let (b, k, d) = (b as u64, k as u64, delta as u64);
    2 * (b * b + 2 * b) * d * d + 2 * d + 2 * b * b * k * k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bound(id: &str, b: usize, k: usize, d: usize) -> Ratio<i64> {
        order_bound(id.parse().unwrap(), b, k, d).unwrap().exact()
    }

    #[test]
    fn printed_examples() {
        assert_eq!(bound("1.1", 1, 1, 3), Ratio::from_integer(18));
        assert_eq!(bound("1.2", 1, 1, 3), Ratio::from_integer(15));
        assert_eq!(bound("1.3", 1, 1, 3), Ratio::from_integer(18));
        assert_eq!(bound("1.5", 1, 1, 3), Ratio::from_integer(47));
    }

    #[test]
    fn fractional_bounds_stay_exact() {
        // (2·3 + 4.3)·2 - 2·3·1 + 1.1 = 15.7
        let b = order_bound(TheoremId::SignlessRadius, 3, 1, 2).unwrap();
        assert_eq!(b.exact(), Ratio::new(157, 10));
        assert!(!b.admits(15));
        assert!(b.admits(16));
        assert_eq!(b.min_order(), 16);
        // (9 + 6 + 15 + 2 + 4)/3 = 12
        assert_eq!(bound("1.4", 3, 1, 0), Ratio::from_integer(12));
    }

    #[test]
    fn side_conditions() {
        assert!(order_bound(TheoremId::DistanceSignlessRadius, 1, 3, 5).is_err());
        assert_eq!(bound("1.6", 1, 1, 2), Ratio::from_integer(30));
        assert_eq!(eta_hypothesis_bound(1, 1, 2), 30);
        assert!(order_bound(TheoremId::EdgeCount, 0, 1, 2).is_err());
    }

    #[test]
    fn serialises_as_exact_string() {
        let b = order_bound(TheoremId::SignlessRadius, 3, 1, 2).unwrap();
        assert_eq!(serde_json::to_string(&b).unwrap(), "\"157/10\"");
    }
}
