use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::kset::{k_subsets, KSet, PartialRelation};
use crate::error::{Error, Result};

/// Default bound on `n` for the exhaustive linear-extension check.
pub const DEFAULT_VALIDATION_BOUND: u32 = 12;

/// Total orders on equal-size sets that extend the componentwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    /// `S < T` iff `min(S Δ T) ∈ S`.
    Lex,
    /// `S < T` iff `max(S Δ T) ∈ T`.
    RevLex,
    /// Element sum first, ties broken lexicographically.
    SumLex,
    /// Triples `abc` by `a + c`, then `2a + b`, then `a`. Only for k = 3.
    CTriple,
}

impl TermOrder {
    pub const ALL: [TermOrder; 4] = [
        TermOrder::Lex,
        TermOrder::RevLex,
        TermOrder::SumLex,
        TermOrder::CTriple,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::RevLex => "revlex",
            TermOrder::SumLex => "sumlex",
            TermOrder::CTriple => "ctriple",
        }
    }

    pub fn applies_to(self, k: usize) -> bool {
        match self {
            TermOrder::CTriple => k == 3,
            _ => k >= 1,
        }
    }

    pub fn check_applicable(self, k: usize) -> Result<()> {
        if self.applies_to(k) {
            Ok(())
        } else {
            Err(Error::OrderNotApplicable {
                order: self.name(),
                k,
            })
        }
    }

    pub fn compare(self, s: KSet, t: KSet) -> Result<Ordering> {
        if s.k() != t.k() {
            return Err(Error::SizeMismatch {
                left: s.k(),
                right: t.k(),
            });
        }
        self.check_applicable(s.k())?;
        Ok(self.cmp_unchecked(s, t))
    }

    /// Comparison without the size/applicability checks.
    #[inline]
    pub(crate) fn cmp_unchecked(self, s: KSet, t: KSet) -> Ordering {
        match self {
            TermOrder::Lex => s.cmp(&t),
            TermOrder::RevLex => {
                let d = s.mask() ^ t.mask();
                if d == 0 {
                    Ordering::Equal
                } else {
                    let top = 1u64 << (63 - d.leading_zeros());
                    if t.mask() & top != 0 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    }
                }
            }
            TermOrder::SumLex => s.sum().cmp(&t.sum()).then_with(|| s.cmp(&t)),
            TermOrder::CTriple => ctriple_key(s).cmp(&ctriple_key(t)),
        }
    }

    /// All k-subsets of `[n]`, ascending in this order.
    pub fn sorted_ksets(self, n: u32, k: usize) -> Result<Vec<KSet>> {
        self.check_applicable(k)?;
        let mut all: Vec<KSet> = k_subsets(n, k).collect();
        all.sort_by(|a, b| self.cmp_unchecked(*a, *b));
        Ok(all)
    }

    /// Exhaustively checks that the order extends the componentwise partial
    /// order on k-subsets of `[n]`. Refuses `n` above `bound`.
    pub fn validate(self, n: u32, k: usize, bound: u32) -> Result<bool> {
        if n > bound {
            return Err(Error::BoundExceeded {
                what: "n",
                value: n as usize,
                bound: bound as usize,
            });
        }
        self.check_applicable(k)?;
        let all: Vec<KSet> = k_subsets(n, k).collect();
        for &s in &all {
            for &t in &all {
                if s.partial_compare(t)? == PartialRelation::LessOrEqual
                    && self.cmp_unchecked(s, t) != Ordering::Less
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn ctriple_key(s: KSet) -> (u32, u32, u32) {
    let mut it = s.iter();
    let a = it.next().unwrap_or(0);
    let b = it.next().unwrap_or(0);
    let c = it.next().unwrap_or(0);
    (a + c, 2 * a + b, a)
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lex" => Ok(TermOrder::Lex),
            "revlex" => Ok(TermOrder::RevLex),
            "sumlex" => Ok(TermOrder::SumLex),
            "ctriple" => Ok(TermOrder::CTriple),
            other => Err(Error::InvalidArgument(format!("unknown term order `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ks(v: &[u32]) -> KSet {
        KSet::from_sorted(v).unwrap()
    }

    #[test]
    fn lex_and_revlex_examples() {
        let (s, t) = (ks(&[1, 4]), ks(&[2, 3]));
        assert_eq!(TermOrder::Lex.compare(s, t).unwrap(), Ordering::Less);
        assert_eq!(TermOrder::RevLex.compare(s, t).unwrap(), Ordering::Greater);
    }

    /// The <_c order read off a brute-force sort of all triples of [5] by the
    /// three defining keys computed directly from the sorted elements.
    #[test]
    fn ctriple_against_enumeration() {
        let mut triples = Vec::new();
        for a in 1..=5u32 {
            for b in a + 1..=5 {
                for c in b + 1..=5 {
                    triples.push((a, b, c));
                }
            }
        }
        triples.sort_by_key(|&(a, b, c)| (a + c, 2 * a + b, a));
        let pos = |x: (u32, u32, u32)| triples.iter().position(|&y| y == x).unwrap();
        // 125: a+c = 6; 134: a+c = 5, so 134 comes first.
        assert!(pos((1, 3, 4)) < pos((1, 2, 5)));
        assert_eq!(
            TermOrder::CTriple.compare(ks(&[1, 2, 5]), ks(&[1, 3, 4])).unwrap(),
            Ordering::Greater
        );
        let sorted = TermOrder::CTriple.sorted_ksets(5, 3).unwrap();
        let got: Vec<_> = sorted
            .iter()
            .map(|s| {
                let e = s.elements();
                (e[0], e[1], e[2])
            })
            .collect();
        assert_eq!(got, triples);
    }

    #[test]
    fn sumlex_ties_broken_by_smaller_first_element() {
        assert_eq!(
            TermOrder::SumLex.compare(ks(&[1, 4]), ks(&[2, 3])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            TermOrder::SumLex.compare(ks(&[2, 4]), ks(&[1, 6])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn applicability_and_size_errors() {
        assert!(matches!(
            TermOrder::CTriple.compare(ks(&[1, 2]), ks(&[1, 3])),
            Err(Error::OrderNotApplicable { .. })
        ));
        assert!(matches!(
            TermOrder::Lex.compare(ks(&[1, 2]), ks(&[1, 2, 3])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn validation_examples() {
        assert!(TermOrder::Lex.validate(6, 2, 12).unwrap());
        assert!(TermOrder::SumLex.validate(8, 2, 12).unwrap());
        assert!(TermOrder::CTriple.validate(8, 3, 12).unwrap());
        assert!(matches!(
            TermOrder::Lex.validate(13, 2, 12),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn parse_round_trip() {
        for o in TermOrder::ALL {
            assert_eq!(o.name().parse::<TermOrder>().unwrap(), o);
        }
        assert!("deglex".parse::<TermOrder>().is_err());
    }
}
