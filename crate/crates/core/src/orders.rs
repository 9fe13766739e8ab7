//! Monomial orders on exponent vectors.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A total order on exponent vectors of a fixed length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum MonomialOrder {
    /// `a > b` iff the first nonzero coordinate of `a - b` is positive.
    Lex,
    /// `a > b` iff the last nonzero coordinate of `a - b` is positive.
    InvLex,
    /// Reverse of `Lex`.
    NegLex,
    /// Total degree, ties broken by `Lex`.
    DegLex,
    /// Total degree; on ties `a > b` iff the last nonzero coordinate of `a - b` is negative.
    #[default]
    DegRevLex,
    /// As `DegRevLex` with the degree weighted per variable.
    WDegRevLex(Vec<u32>),
}

fn first_nonzero_diff(a: &[u32], b: &[u32]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.cmp(y))
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal)
}

fn last_nonzero_diff(a: &[u32], b: &[u32]) -> Ordering {
    a.iter()
        .zip(b)
        .rev()
        .map(|(x, y)| x.cmp(y))
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal)
}

fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&x| x as u64).sum()
}

impl MonomialOrder {
    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::InvLex => "invlex",
            MonomialOrder::NegLex => "neglex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::WDegRevLex(_) => "wdegrevlex",
        }
    }

    /// The six kinds, with `weights` used for the weighted one.
    pub fn all_kinds(weights: Vec<u32>) -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Lex,
            MonomialOrder::InvLex,
            MonomialOrder::NegLex,
            MonomialOrder::DegLex,
            MonomialOrder::DegRevLex,
            MonomialOrder::WDegRevLex(weights),
        ]
    }

    /// Checked comparison.
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        if let MonomialOrder::WDegRevLex(w) = self {
            if w.len() != a.len() {
                return Err(Error::LengthMismatch {
                    left: w.len(),
                    right: a.len(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison for vectors already known to have matching lengths.
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => first_nonzero_diff(a, b),
            MonomialOrder::InvLex => last_nonzero_diff(a, b),
            MonomialOrder::NegLex => first_nonzero_diff(b, a),
            MonomialOrder::DegLex => degree(a)
                .cmp(&degree(b))
                .then_with(|| first_nonzero_diff(a, b)),
            MonomialOrder::DegRevLex => degree(a)
                .cmp(&degree(b))
                .then_with(|| last_nonzero_diff(b, a)),
            MonomialOrder::WDegRevLex(w) => {
                let wd = |v: &[u32]| -> u64 {
                    v.iter().zip(w).map(|(&x, &c)| x as u64 * c as u64).sum()
                };
                wd(a).cmp(&wd(b)).then_with(|| last_nonzero_diff(b, a))
            }
        }
    }

    /// The minimum of a nonempty set.
    pub fn min_of<'a>(&self, set: impl IntoIterator<Item = &'a [u32]>) -> Result<Vec<u32>> {
        let mut best: Option<&[u32]> = None;
        for v in set {
            best = match best {
                None => Some(v),
                Some(b) => {
                    if self.compare(v, b)? == Ordering::Less {
                        Some(v)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best.map(<[u32]>::to_vec).ok_or(Error::EmptySet)
    }

    /// Sorts ascending.
    pub fn sort(&self, v: &mut [Vec<u32>]) {
        v.sort_by(|a, b| self.cmp(a, b));
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::WDegRevLex(w) => {
                let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                write!(f, "wdegrevlex:{}", parts.join(","))
            }
            other => write!(f, "{}", other.name()),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = match s.split_once(':') {
            Some((k, r)) => (k, Some(r)),
            None => (s, None),
        };
        let order = match (kind.to_ascii_lowercase().as_str(), rest) {
            ("lex", None) => MonomialOrder::Lex,
            ("invlex", None) => MonomialOrder::InvLex,
            ("neglex", None) => MonomialOrder::NegLex,
            ("deglex", None) => MonomialOrder::DegLex,
            ("degrevlex", None) => MonomialOrder::DegRevLex,
            ("wdegrevlex", Some(ws)) => {
                let w = ws
                    .split(',')
                    .map(|t| t.trim().parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::InvalidOrder(s.to_string()))?;
                if w.is_empty() || w.contains(&0) {
                    return Err(Error::InvalidOrder(s.to_string()));
                }
                MonomialOrder::WDegRevLex(w)
            }
            _ => return Err(Error::InvalidOrder(s.to_string())),
        };
        Ok(order)
    }
}

impl From<MonomialOrder> for String {
    fn from(o: MonomialOrder) -> String {
        o.to_string()
    }
}

impl TryFrom<String> for MonomialOrder {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn neglex_prefers_lex_larger() {
        assert_eq!(
            MonomialOrder::NegLex
                .compare(&[1, 1, 1], &[0, 2, 0])
                .unwrap(),
            Ordering::Less
        );
        assert_eq!(
            MonomialOrder::NegLex
                .min_of([&[1u32, 1, 1][..], &[0, 2, 0][..]])
                .unwrap(),
            vec![1, 1, 1]
        );
    }

    #[test]
    fn degree_orders() {
        assert_eq!(
            MonomialOrder::DegRevLex
                .compare(&[2, 0, 0], &[1, 1, 1])
                .unwrap(),
            Ordering::Less
        );
        // equal degree: last nonzero of a-b negative means a greater
        assert_eq!(
            MonomialOrder::DegRevLex.cmp(&[1, 1, 0], &[1, 0, 1]),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::DegLex.cmp(&[1, 0, 1], &[0, 2, 0]),
            Ordering::Greater
        );
        let w = MonomialOrder::WDegRevLex(vec![1, 2, 1]);
        assert_eq!(w.cmp(&[2, 0, 0], &[0, 1, 0]), Ordering::Greater);
        assert_eq!(w.cmp(&[0, 1, 0], &[1, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn invlex_reads_from_the_right() {
        assert_eq!(
            MonomialOrder::InvLex.cmp(&[5, 0, 0], &[0, 0, 1]),
            Ordering::Less
        );
        assert_eq!(
            MonomialOrder::InvLex.cmp(&[0, 1, 1], &[9, 0, 1]),
            Ordering::Greater
        );
    }

    #[test]
    fn errors() {
        assert!(MonomialOrder::Lex.compare(&[1], &[1, 2]).is_err());
        assert!(MonomialOrder::WDegRevLex(vec![1])
            .compare(&[1, 2], &[1, 2])
            .is_err());
        assert!(matches!(
            MonomialOrder::Lex.min_of(std::iter::empty()),
            Err(Error::EmptySet)
        ));
        assert!("wdegrevlex".parse::<MonomialOrder>().is_err());
        assert!("foo".parse::<MonomialOrder>().is_err());
        assert!("lex:1".parse::<MonomialOrder>().is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "lex",
            "invlex",
            "neglex",
            "deglex",
            "degrevlex",
            "wdegrevlex:1,2,3",
        ] {
            let o: MonomialOrder = s.parse().unwrap();
            assert_eq!(o.to_string(), s);
        }
    }

    fn orders() -> Vec<MonomialOrder> {
        MonomialOrder::all_kinds(vec![1, 3, 2, 1])
    }

    proptest! {
        #[test]
        fn total_antisymmetric_transitive(
            a in prop::collection::vec(0u32..4, 4),
            b in prop::collection::vec(0u32..4, 4),
            c in prop::collection::vec(0u32..4, 4),
        ) {
            for o in orders() {
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                if ab != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
                }
            }
        }

        #[test]
        fn translation_invariant(
            a in prop::collection::vec(0u32..4, 4),
            b in prop::collection::vec(0u32..4, 4),
            c in prop::collection::vec(0u32..4, 4),
        ) {
            let ac: Vec<u32> = a.iter().zip(&c).map(|(x, y)| x + y).collect();
            let bc: Vec<u32> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
            for o in orders() {
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&ac, &bc));
            }
        }

        #[test]
        fn neglex_reverses_lex(
            a in prop::collection::vec(0u32..4, 5),
            b in prop::collection::vec(0u32..4, 5),
        ) {
            prop_assert_eq!(MonomialOrder::NegLex.cmp(&a, &b), MonomialOrder::Lex.cmp(&b, &a));
        }
    }
}
