//! Signature and rank inequalities for forms with `r * |z|^(2d)` a squared norm,
//! and a one-shot auditor that evaluates all of them on a concrete form.

use crate::error::{Error, Result};
use crate::hermitian::{BihomForm, SignatureReport};
use crate::macaulay::{iterated_shift, macaulay_rep};
use crate::numeric::{dim_forms, Rational};
use crate::polyring::{monomials_of_degree, MultiIndex};
use num_bigint::BigInt;

fn ratio(num: i128, den: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `(D_{m+d} - [[H^<m>]^<m+1> ...]^<m+d-1>) / D_d` with `H = D_m - R`.
///
/// The iterated shift is computed step by step and through the closed form
/// `sum C(k_j + d, j + d)`; the two must agree.
pub fn theorem_lower_bound(n: usize, m: usize, d: usize, rank: u64) -> Result<Rational> {
    let dm = dim_forms(n, m);
    if rank > dm {
        return Err(Error::RankTooLarge { rank, max: dm });
    }
    let h = dm - rank;
    let stepwise = iterated_shift(h, m, d);
    let closed = macaulay_rep(h, m).iterated_shift_closed(d);
    if stepwise != closed {
        return Err(Error::Inconsistent(format!(
            "iterated shift of {h} from degree {m}: stepwise {stepwise}, closed form {closed}"
        )));
    }
    Ok(ratio(
        dim_forms(n, m + d) as i128 - stepwise as i128,
        dim_forms(n, d),
    ))
}

/// `N <= (P - 1)(D_d - 1)`.
pub fn corollary1_holds(positive: u64, negative: u64, n: usize, d: usize) -> bool {
    let rhs = (positive as i128 - 1) * (dim_forms(n, d) as i128 - 1);
    negative as i128 <= rhs
}

/// `D_{m+d} / D_d`, the lower bound on `P` for full-rank forms.
pub fn corollary2_bound(n: usize, m: usize, d: usize) -> Rational {
    ratio(dim_forms(n, m + d) as i128, dim_forms(n, d))
}

/// Where an admissible rank of `r * |z|^(2d)` falls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankWitness {
    /// `nP - P(P-1)/2 <= rho <= nP` for this `P < n`.
    Interval {
        p: u64,
        low: u64,
        high: u64,
    },
    /// `rho >= n(n+1)/2`.
    Tail {
        low: u64,
    },
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankAdmissibility {
    pub admissible: bool,
    pub witness: RankWitness,
}

/// The intervals `[nP - P(P-1)/2, nP]` for `1 <= P < n`, in increasing order of `P`.
pub fn rank_intervals(n: u64) -> Vec<(u64, u64, u64)> {
    (1..n)
        .map(|p| (p, n * p - p * (p - 1) / 2, n * p))
        .collect()
}

/// Necessary condition on the rank `rho` of `r * |z|^(2d)` when `r` is a squared norm.
pub fn admissible_ranks(n: usize, rho: u64) -> RankAdmissibility {
    assert!(n >= 2, "rank admissibility is stated for n >= 2");
    let n = n as u64;
    if rho > 0 {
        for (p, low, high) in rank_intervals(n) {
            if (low..=high).contains(&rho) {
                return RankAdmissibility {
                    admissible: true,
                    witness: RankWitness::Interval { p, low, high },
                };
            }
        }
        let tail = n * (n + 1) / 2;
        if rho >= tail {
            return RankAdmissibility {
                admissible: true,
                witness: RankWitness::Tail { low: tail },
            };
        }
    }
    RankAdmissibility {
        admissible: false,
        witness: RankWitness::None,
    }
}

/// `P^2 + P >= 2n`, necessary for signature `(P, 1)` with `r |z|^2` a squared norm.
pub fn prop42_holds(positive: u64, n: usize) -> bool {
    positive * positive + positive >= 2 * n as u64
}

/// Every verdict for one form `r` and exponent `d`.
///
/// When `product_is_squared_norm` holds, every present verdict is proved to
/// be true; [`AuditReport::violations`] lists the ones that are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub signature: SignatureReport,
    /// Signature of `r * |z|^(2d)`; its rank is `rho`.
    pub product_signature: SignatureReport,
    pub product_is_squared_norm: bool,
    /// `H_{V_{f+g}}(m + d)`.
    pub hilbert_fg_at_m_plus_d: u64,
    pub theorem_bound: Rational,
    /// `P >= theorem_bound`.
    pub theorem_ok: bool,
    /// `H_{V_{f+g}}(m + d) <= D_d * P`.
    pub hilbert_upper_ok: bool,
    pub corollary1_ok: bool,
    /// Present iff `R = D_m`.
    pub corollary2_bound: Option<Rational>,
    pub corollary2_ok: Option<bool>,
    /// Present iff `r` itself is a nonzero squared norm and `n >= 2`.
    pub rank_admissible: Option<bool>,
    /// Present iff `r * |z|^(2(d-1))` has exactly one negative square.
    pub prop42_ok: Option<bool>,
    /// Present iff the product is a squared norm.
    pub lemma_containment_ok: Option<bool>,
}

impl AuditReport {
    /// Names of false verdicts under a satisfied hypothesis ("theorem violations").
    pub fn violations(&self) -> Vec<&'static str> {
        if !self.product_is_squared_norm {
            return Vec::new();
        }
        let checks = [
            ("theorem_bound", Some(self.theorem_ok)),
            ("hilbert_upper_bound", Some(self.hilbert_upper_ok)),
            ("corollary1", Some(self.corollary1_ok)),
            ("corollary2", self.corollary2_ok),
            ("rank_admissible", self.rank_admissible),
            ("prop42", self.prop42_ok),
            ("lemma_containment", self.lemma_containment_ok),
        ];
        checks
            .into_iter()
            .filter(|(_, v)| *v == Some(false))
            .map(|(name, _)| name)
            .collect()
    }
}

pub fn audit(r: &BihomForm, d: usize) -> Result<AuditReport> {
    if d == 0 {
        return Err(Error::Precondition("audit needs d >= 1".into()));
    }
    let (n, m) = (r.arity(), r.bidegree());
    let signature = r.inertia();
    let product = r.mul_norm_power(d);
    let product_signature = product.inertia();
    let product_is_squared_norm = product_signature.negative == 0;
    let hilbert = r.hilbert_of_decomposition(m + d);
    let p = signature.positive as u64;
    let neg = signature.negative as u64;
    let rank = signature.rank as u64;

    let theorem_bound = theorem_lower_bound(n, m, d, rank)?;
    let theorem_ok = Rational::from_integer(p.into()) >= theorem_bound;
    let hilbert_upper_ok = hilbert <= dim_forms(n, d) * p;
    // With P = 0 the hypothesis forces r = 0, so the inequality is vacuous.
    let corollary1_ok = if p == 0 {
        neg == 0
    } else {
        corollary1_holds(p, neg, n, d)
    };
    let (corollary2_bound, corollary2_ok) = if rank == dim_forms(n, m) {
        let b = corollary2_bound(n, m, d);
        let ok = Rational::from_integer(p.into()) >= b;
        (Some(b), Some(ok))
    } else {
        (None, None)
    };
    let rank_admissible = (neg == 0 && rank > 0 && n >= 2)
        .then(|| admissible_ranks(n, product_signature.rank as u64).admissible);
    let reduced = if d == 1 {
        signature
    } else {
        r.mul_norm_power(d - 1).inertia()
    };
    let prop42_ok = (reduced.negative == 1).then(|| prop42_holds(reduced.positive as u64, n));
    let lemma_containment_ok = if product_is_squared_norm {
        Some(r.verify_lemma_containment(d)?)
    } else {
        None
    };

    Ok(AuditReport {
        n,
        m,
        d,
        signature,
        product_signature,
        product_is_squared_norm,
        hilbert_fg_at_m_plus_d: hilbert,
        theorem_bound,
        theorem_ok,
        hilbert_upper_ok,
        corollary1_ok,
        corollary2_bound,
        corollary2_ok,
        rank_admissible,
        prop42_ok,
        lemma_containment_ok,
    })
}

/// Whether the products `b + a` over `b` in `collection` and `|a| = d` are pairwise distinct.
pub fn shifted_products_distinct(collection: &[MultiIndex], d: usize) -> bool {
    let Some(first) = collection.first() else {
        return true;
    };
    let shifts = monomials_of_degree(first.arity(), d);
    let mut seen = std::collections::HashSet::new();
    collection
        .iter()
        .all(|b| shifts.iter().all(|a| seen.insert(b.add(a))))
}

/// The monomials `x^(m - j(d+1)) y^(j(d+1))`, `0 <= j <= k`, with `m = k(d + 1)`.
pub fn two_variable_family(d: usize, k: usize) -> Vec<MultiIndex> {
    let m = k * (d + 1);
    (0..=k)
        .map(|j| {
            let e = (j * (d + 1)) as u32;
            MultiIndex::new(vec![m as u32 - e, e])
        })
        .collect()
}

/// Exhaustive search for `D_{m+d} / D_d` degree-`m` monomials whose shifts by all
/// degree-`d` monomials are pairwise distinct. Returns the lex-first one found and
/// the number of subsets visited.
pub fn find_distinct_collection(n: usize, m: usize, d: usize) -> (Option<Vec<MultiIndex>>, u64) {
    let total = dim_forms(n, m + d);
    let per = dim_forms(n, d);
    if !total.is_multiple_of(per) {
        return (None, 0);
    }
    let size = (total / per) as usize;
    let pool = monomials_of_degree(n, m);
    let shifts = monomials_of_degree(n, d);
    let mut chosen: Vec<usize> = Vec::with_capacity(size);
    let mut visited = 0u64;
    let found = search(&pool, &shifts, size, 0, &mut chosen, &mut visited);
    (
        found.then(|| chosen.iter().map(|&i| pool[i].clone()).collect()),
        visited,
    )
}

fn search(
    pool: &[MultiIndex],
    shifts: &[MultiIndex],
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    visited: &mut u64,
) -> bool {
    if chosen.len() == size {
        *visited += 1;
        let picked: Vec<MultiIndex> = chosen.iter().map(|&i| pool[i].clone()).collect();
        return shifted_products_distinct_with(&picked, shifts);
    }
    let remaining = size - chosen.len();
    for i in start..pool.len() {
        if pool.len() - i < remaining {
            break;
        }
        chosen.push(i);
        if search(pool, shifts, size, i + 1, chosen, visited) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn shifted_products_distinct_with(collection: &[MultiIndex], shifts: &[MultiIndex]) -> bool {
    let mut seen = std::collections::HashSet::new();
    collection
        .iter()
        .all(|b| shifts.iter().all(|a| seen.insert(b.add(a))))
}

impl RankWitness {
    pub fn describe(&self) -> String {
        match self {
            RankWitness::Interval { p, low, high } => format!("P={p} interval [{low},{high}]"),
            RankWitness::Tail { low } => format!("tail rho >= {low}"),
            RankWitness::None => "none".to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::epsilon_family;
    use crate::numeric::{binomial, rational, GaussianRational};
    use crate::polyring::{hilbert_ideal, GradedIdeal, HomogPoly};

    fn mi(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    #[test]
    fn theorem_bound_examples() {
        assert_eq!(theorem_lower_bound(2, 2, 1, 3).unwrap(), rational(2, 1));
        assert_eq!(theorem_lower_bound(2, 2, 1, 2).unwrap(), rational(3, 2));
        assert_eq!(theorem_lower_bound(2, 2, 1, 0).unwrap(), rational(0, 1));
        assert_eq!(
            theorem_lower_bound(2, 2, 1, 4),
            Err(Error::RankTooLarge { rank: 4, max: 3 })
        );
    }

    #[test]
    fn corollary_examples() {
        assert!(corollary1_holds(2, 1, 2, 5));
        assert!(!corollary1_holds(1, 1, 2, 1));
        assert!(corollary1_holds(2, 0, 3, 2));
        assert_eq!(corollary2_bound(2, 2, 1), rational(2, 1));
        assert_eq!(corollary2_bound(2, 3, 2), rational(2, 1));
        assert_eq!(corollary2_bound(3, 1, 1), rational(2, 1));
    }

    #[test]
    fn corollary2_two_variables_matches_ratio() {
        for m in 1..=6usize {
            for d in 1..=6usize {
                let b = corollary2_bound(2, m, d);
                assert_eq!(b, rational((m + d + 1) as i64, (d + 1) as i64));
                // P / R >= (m + d + 1) / ((d + 1)(m + 1)) with R = D_m = m + 1
                let per_rank = rational((m + d + 1) as i64, ((d + 1) * (m + 1)) as i64);
                assert_eq!(b, per_rank * rational((m + 1) as i64, 1));
            }
        }
    }

    #[test]
    fn admissible_rank_examples() {
        assert!(!admissible_ranks(3, 4).admissible);
        assert!(!admissible_ranks(3, 1).admissible);
        assert!(!admissible_ranks(3, 2).admissible);
        assert_eq!(
            admissible_ranks(3, 3).witness,
            RankWitness::Interval {
                p: 1,
                low: 3,
                high: 3
            }
        );
        assert_eq!(
            admissible_ranks(3, 5).witness,
            RankWitness::Interval {
                p: 2,
                low: 5,
                high: 6
            }
        );
        assert_eq!(admissible_ranks(3, 7).witness, RankWitness::Tail { low: 6 });
        assert!(!admissible_ranks(3, 0).admissible);
    }

    #[test]
    fn smallest_ranks_are_n_then_2n_minus_1() {
        for n in 2..=8usize {
            let ok: Vec<u64> = (1..=2 * n as u64)
                .filter(|&rho| admissible_ranks(n, rho).admissible)
                .collect();
            assert_eq!(ok[0], n as u64);
            if n >= 3 {
                assert_eq!(&ok[1..3], &[2 * n as u64 - 1, 2 * n as u64]);
            }
        }
    }

    #[test]
    fn prop42_examples() {
        assert!(prop42_holds(2, 3));
        assert!(!prop42_holds(1, 3));
        for n in 1..=20usize {
            assert!(prop42_holds(n as u64, n));
        }
    }

    #[test]
    fn audit_epsilon_half() {
        let r = epsilon_family(&rational(1, 2));
        let a = audit(&r, 5).unwrap();
        assert!(a.product_is_squared_norm);
        assert_eq!(
            (a.signature.positive, a.signature.negative, a.signature.rank),
            (2, 1, 3)
        );
        assert!(a.theorem_ok && a.hilbert_upper_ok && a.corollary1_ok);
        assert_eq!(a.corollary2_ok, Some(true));
        assert_eq!(a.lemma_containment_ok, Some(true));
        assert_eq!(a.rank_admissible, None);
        assert!(a.violations().is_empty());

        let b = audit(&r, 4).unwrap();
        assert!(!b.product_is_squared_norm);
        assert_eq!(b.lemma_containment_ok, None);
        assert!(b.violations().is_empty());
    }

    #[test]
    fn audit_sum_of_two_squares() {
        let f = [
            HomogPoly::monomial(mi(&[2, 0])),
            HomogPoly::monomial(mi(&[0, 2])),
        ];
        let r = BihomForm::sum_of_squares(2, 2, &f).unwrap();
        let a = audit(&r, 1).unwrap();
        assert!(a.product_is_squared_norm);
        assert_eq!(a.product_signature.rank, 4);
        let ideal = GradedIdeal::new(2, f.to_vec()).unwrap();
        assert_eq!(hilbert_ideal(&ideal, 3), 4);
        assert_eq!(a.hilbert_fg_at_m_plus_d, 4);
        assert_eq!(a.rank_admissible, Some(true));
        assert!(a.violations().is_empty());
    }

    #[test]
    fn audit_zero_form_is_vacuous() {
        let a = audit(&BihomForm::zero(3, 2), 1).unwrap();
        assert!(a.product_is_squared_norm);
        assert!(a.violations().is_empty());
        assert!(audit(&BihomForm::zero(3, 2), 0).is_err());
    }

    #[test]
    fn audit_prop42_presence() {
        // eps = 1: signature (2, 1) and r |z|^2 is already a squared norm.
        let a = audit(&epsilon_family(&rational(1, 1)), 1).unwrap();
        assert!(a.product_is_squared_norm);
        assert_eq!(a.prop42_ok, Some(true));
        assert!(a.violations().is_empty());

        // |z1|^2 - 1/4 |z2|^2 has signature (1, 1); 1 + 1 < 4 but the hypothesis fails.
        let g = GaussianRational::from_int;
        let r = BihomForm::from_terms(
            2,
            1,
            [
                (mi(&[1, 0]), mi(&[1, 0]), g(1)),
                (mi(&[0, 1]), mi(&[0, 1]), GaussianRational::ratio(-1, 4)),
            ],
        )
        .unwrap();
        let a = audit(&r, 1).unwrap();
        assert!(!a.product_is_squared_norm);
        assert_eq!(a.prop42_ok, Some(false));
        assert!(a.violations().is_empty());

        // For d > 1 the check runs on r |z|^(2(d-1)).
        let a = audit(&epsilon_family(&rational(1, 2)), 5).unwrap();
        let reduced = epsilon_family(&rational(1, 2)).mul_norm_power(4).inertia();
        assert_eq!(reduced.negative, 1);
        assert_eq!(a.prop42_ok, Some(true));
    }

    #[test]
    fn two_variable_family_is_distinct() {
        for d in 1..=3 {
            for k in 0..=3 {
                let fam = two_variable_family(d, k);
                assert_eq!(fam.len() * (d + 1), dim_forms(2, k * (d + 1) + d) as usize);
                assert!(shifted_products_distinct(&fam, d));
            }
        }
    }

    #[test]
    fn no_distinct_collection_in_three_variables() {
        for m in [1, 3] {
            let (found, visited) = find_distinct_collection(3, m, 1);
            assert!(found.is_none());
            assert_eq!(
                visited,
                binomial(dim_forms(3, m) as i64, (dim_forms(3, m + 1) / 3) as i64)
            );
        }
        let (found, _) = find_distinct_collection(2, 2, 1);
        assert!(found.is_some());
    }
}
