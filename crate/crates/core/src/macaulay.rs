//! Macaulay representations `c = C(k_m, m) + ... + C(k_J, J)` and the shift
//! `c^<m> = C(k_m + 1, m + 1) + ... + C(k_J + 1, J + 1)` that bounds one-degree
//! growth of the Hilbert function of a quotient ring.

use std::fmt;

use crate::numeric::binomial;

/// One summand `C(top, bottom)` of a Macaulay representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MacaulayTerm {
    pub top: u64,
    pub bottom: usize,
}

impl MacaulayTerm {
    pub fn value(&self) -> u64 {
        binomial(self.top as i64, self.bottom as i64)
    }
}

/// The `m`-th Macaulay representation of a nonnegative integer.
///
/// Terms are ordered by strictly decreasing `bottom`, starting at `m`, with
/// strictly decreasing `top` and `top >= bottom > 0`. Zero has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MacaulayRep {
    degree: usize,
    terms: Vec<MacaulayTerm>,
}

impl MacaulayRep {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[MacaulayTerm] {
        &self.terms
    }

    /// The represented integer.
    pub fn value(&self) -> u64 {
        self.terms.iter().map(MacaulayTerm::value).sum()
    }

    /// Lowest index `J`, or `None` for the empty representation of zero.
    pub fn lowest(&self) -> Option<usize> {
        self.terms.last().map(|t| t.bottom)
    }

    /// `sum C(k_j + d, j + d)`: the `d`-fold iterated shift evaluated term-wise.
    pub fn iterated_shift_closed(&self, d: usize) -> u64 {
        self.terms
            .iter()
            .map(|t| binomial((t.top + d as u64) as i64, (t.bottom + d) as i64))
            .sum()
    }

    /// The representation with every term shifted by `d`; it is the
    /// `(m + d)`-th Macaulay representation of the shifted value.
    pub fn shifted(&self, d: usize) -> MacaulayRep {
        MacaulayRep {
            degree: self.degree + d,
            terms: self
                .terms
                .iter()
                .map(|t| MacaulayTerm {
                    top: t.top + d as u64,
                    bottom: t.bottom + d,
                })
                .collect(),
        }
    }

    /// Checks the ordering constraints and that the terms start at the declared degree.
    pub fn is_well_formed(&self) -> bool {
        let Some(first) = self.terms.first() else {
            return true;
        };
        if first.bottom != self.degree {
            return false;
        }
        let steps_ok = self
            .terms
            .windows(2)
            .all(|w| w[1].bottom + 1 == w[0].bottom && w[1].top < w[0].top);
        let last = self.terms.last().unwrap();
        steps_ok && last.bottom > 0 && last.top >= last.bottom as u64
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("C({},{})", t.top, t.bottom))
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Greedy `m`-th Macaulay representation of `c`: take the largest `k_m` with
/// `C(k_m, m) <= c`, then recurse on the remainder at `m - 1`.
pub fn macaulay_rep(c: u64, m: usize) -> MacaulayRep {
    assert!(m >= 1, "Macaulay representation needs m >= 1");
    let mut terms = Vec::new();
    let mut rest = c;
    let mut j = m;
    while rest > 0 {
        debug_assert!(j >= 1);
        // C(j, j) = 1 <= rest, so a valid top always exists.
        let mut k = j as u64;
        let mut val = 1u64; // C(k, j)
        loop {
            // C(k + 1, j) = C(k, j) * (k + 1) / (k + 1 - j)
            let next = (val as u128 * (k as u128 + 1) / (k as u128 + 1 - j as u128)) as u64;
            if next > rest {
                break;
            }
            k += 1;
            val = next;
        }
        terms.push(MacaulayTerm { top: k, bottom: j });
        rest -= val;
        j -= 1;
    }
    MacaulayRep { degree: m, terms }
}

/// `c^<m>`; `0^<m> = 0`.
pub fn macaulay_shift(c: u64, m: usize) -> u64 {
    macaulay_rep(c, m).iterated_shift_closed(1)
}

/// `[[c^<m>]^<m+1> ...]^<m+d-1>`, applied one step at a time.
pub fn iterated_shift(c: u64, m: usize, d: usize) -> u64 {
    (0..d).fold(c, |acc, step| macaulay_shift(acc, m + step))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(rep: &MacaulayRep) -> Vec<(u64, usize)> {
        rep.terms().iter().map(|t| (t.top, t.bottom)).collect()
    }

    #[test]
    fn rep_examples() {
        assert_eq!(pairs(&macaulay_rep(6, 3)), vec![(4, 3), (2, 2), (1, 1)]);
        assert_eq!(pairs(&macaulay_rep(1, 4)), vec![(4, 4)]);
        assert_eq!(pairs(&macaulay_rep(10, 3)), vec![(5, 3)]);
        assert!(macaulay_rep(0, 3).terms().is_empty());
        assert_eq!(macaulay_rep(6, 3).to_string(), "C(4,3)+C(2,2)+C(1,1)");
    }

    #[test]
    fn shift_examples() {
        assert_eq!(macaulay_shift(6, 3), 7);
        assert_eq!(macaulay_shift(1, 5), 1);
        assert_eq!(macaulay_shift(3, 1), 6);
        assert_eq!(macaulay_shift(0, 4), 0);
    }

    #[test]
    fn iterated_examples() {
        assert_eq!(macaulay_shift(3, 2), 4);
        assert_eq!(macaulay_shift(4, 3), 5);
        assert_eq!(iterated_shift(3, 2, 2), 5);
        assert_eq!(macaulay_rep(3, 2).iterated_shift_closed(2), 5);
        assert_eq!(iterated_shift(1, 3, 7), 1);
        assert_eq!(iterated_shift(9, 2, 0), 9);
        // n = 2: D_3 - D_1 = 4 - 2
        assert_eq!(iterated_shift(2, 2, 1), 2);
    }

    #[test]
    fn shifted_rep_is_next_rep() {
        for c in 0..=300u64 {
            for m in 1..=5 {
                let rep = macaulay_rep(c, m);
                let s = rep.shifted(1);
                assert!(s.is_well_formed());
                assert_eq!(s, macaulay_rep(s.value(), m + 1));
            }
        }
    }
}
