//! The graded ring `S = C[z_1, ..., z_n]` at desk scale.
//!
//! Graded components of homogeneous ideals are computed one degree at a time
//! as exact reduced row-echelon forms over lex-ordered monomial columns
//! (`z_1 > z_2 > ... > z_n`). Column 0 is always the lex-largest monomial, so
//! the pivot of each echelon row is its lex-leading monomial.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::macaulay::macaulay_shift;
use crate::numeric::{dim_forms, GaussianRational};

/// Exponent vector of a monomial in `n` variables.
///
/// `Ord` is lexicographic on the exponents, which is the lex monomial order
/// with `z_1 > ... > z_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The exponent vector of `z_{i+1}`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self(e)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponents of the product monomial.
    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.arity(), other.arity());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when `other` divides `self`.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if self.arity() != other.arity() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.arity() == other.arity() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Position in [`monomials_of_degree`] for this arity and degree.
    pub fn lex_rank(&self) -> usize {
        let n = self.arity();
        let mut rest = self.degree();
        let mut rank = 0u64;
        for (i, &a) in self.0.iter().enumerate() {
            let vars_after = n - i - 1;
            if vars_after == 0 {
                break;
            }
            // Monomials agreeing so far but with a larger exponent here.
            for b in (a as usize + 1)..=rest {
                rank += dim_forms(vars_after, rest - b);
            }
            rest -= a as usize;
        }
        rank as usize
    }

    /// Renders as `z1^2*z3` (or `1` for the empty monomial) with the given variable letter.
    pub fn render(&self, var: char) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("{var}{}", i + 1)
                } else {
                    format!("{var}{}^{e}", i + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All degree-`k` multi-indices in `n` variables, in strictly descending lex order.
pub fn monomials_of_degree(n: usize, k: usize) -> Vec<MultiIndex> {
    assert!(n >= 1, "need at least one variable");
    let mut out = Vec::with_capacity(dim_forms(n, k) as usize);
    let mut current = vec![0u32; n];
    fill_monomials(&mut current, 0, k, &mut out);
    out
}

fn fill_monomials(current: &mut Vec<u32>, pos: usize, rest: usize, out: &mut Vec<MultiIndex>) {
    if pos + 1 == current.len() {
        current[pos] = rest as u32;
        out.push(MultiIndex(current.clone()));
        return;
    }
    for e in (0..=rest).rev() {
        current[pos] = e as u32;
        fill_monomials(current, pos + 1, rest - e, out);
    }
    current[pos] = 0;
}

/// Homogeneous polynomial with Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogPoly {
    n: usize,
    degree: usize,
    terms: BTreeMap<MultiIndex, GaussianRational>,
}

impl HomogPoly {
    pub fn zero(n: usize, degree: usize) -> Self {
        Self {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(alpha: MultiIndex) -> Self {
        let mut p = Self::zero(alpha.arity(), alpha.degree());
        p.terms.insert(alpha, GaussianRational::one());
        p
    }

    /// Accumulates `(monomial, coefficient)` pairs, dropping zero sums.
    pub fn from_terms<I>(n: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, GaussianRational)>,
    {
        let mut p = Self::zero(n, degree);
        for (alpha, c) in terms {
            p.add_term(alpha, &c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, alpha: MultiIndex, c: &GaussianRational) -> Result<()> {
        if alpha.arity() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: alpha.arity(),
            });
        }
        if alpha.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: alpha.degree(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(alpha).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> GaussianRational {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn mul_monomial(&self, mu: &MultiIndex) -> HomogPoly {
        HomogPoly {
            n: self.n,
            degree: self.degree + mu.degree(),
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.add(mu), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &GaussianRational) -> HomogPoly {
        if k.is_zero() {
            return HomogPoly::zero(self.n, self.degree);
        }
        HomogPoly {
            n: self.n,
            degree: self.degree,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), c * k)).collect(),
        }
    }

    /// Polynomial with conjugated coefficients.
    pub fn conj_coeffs(&self) -> HomogPoly {
        HomogPoly {
            n: self.n,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c.conj()))
                .collect(),
        }
    }

    /// Evaluates at a point with Gaussian-rational coordinates.
    pub fn evaluate(&self, z: &[GaussianRational]) -> Result<GaussianRational> {
        if z.len() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: z.len(),
            });
        }
        let mut acc = GaussianRational::zero();
        for (alpha, c) in &self.terms {
            let mut t = c.clone();
            for (zi, &e) in z.iter().zip(alpha.exponents()) {
                for _ in 0..e {
                    t = &t * zi;
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Sparse coefficient row over the lex-ranked monomial columns.
    fn to_row(&self) -> Row {
        let mut row: Row = self
            .terms
            .iter()
            .map(|(a, c)| (a.lex_rank(), c.clone()))
            .collect();
        row.sort_by_key(|(c, _)| *c);
        row
    }

    /// Renders with `z` atoms, e.g. `z1^2 - 3/2*z1*z2`.
    pub fn render(&self) -> String {
        render_sum(
            self.terms
                .iter()
                .rev()
                .map(|(a, c)| (a.render('z'), c.clone())),
        )
    }
}

/// Joins `coefficient * monomial` terms into text the CLI grammar accepts.
pub(crate) fn render_sum<I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, GaussianRational)>,
{
    let mut out = String::new();
    for (mono, c) in terms {
        let zero = num_traits::zero();
        let negative = if c.re.is_zero() {
            c.im < zero
        } else {
            c.is_real() && c.re < zero
        };
        let (sign, mag) = if negative { ("-", -&c) } else { ("+", c) };
        let body = if mono == "1" {
            mag.to_string()
        } else if mag.is_one() {
            mono
        } else {
            format!("{mag}*{mono}")
        };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push(' ');
            out.push_str(sign);
            out.push(' ');
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

type Row = Vec<(usize, GaussianRational)>;

/// `a - f * b` on sorted sparse rows, skipping the first `skip` entries of `a`
/// which are left untouched.
fn sub_scaled(a: &Row, skip: usize, f: &GaussianRational, b: &Row) -> Row {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend(a[..skip].iter().cloned());
    let (mut i, mut j) = (skip, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -&(f * &b[j].1)));
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            v -= &(f * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced row-echelon basis of a degree-`k` subspace of polynomials.
///
/// Every row is monic at its pivot and zero at every other row's pivot
/// column, so the echelon form of a subspace is unique.
#[derive(Clone, Debug)]
pub struct Echelon {
    n: usize,
    degree: usize,
    cols: usize,
    rows: Vec<Row>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(n: usize, degree: usize) -> Self {
        let cols = dim_forms(n, degree) as usize;
        Self {
            n,
            degree,
            cols,
            rows: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    fn reduce(&self, mut v: Row) -> Row {
        let mut i = 0;
        while i < v.len() {
            match self.pivot_row[v[i].0] {
                Some(r) => {
                    let f = v[i].1.clone();
                    v = sub_scaled(&v, i, &f, &self.rows[r]);
                }
                None => i += 1,
            }
        }
        v
    }

    fn insert_row(&mut self, v: Row) -> bool {
        if self.is_full() {
            return false;
        }
        let mut v = self.reduce(v);
        if v.is_empty() {
            return false;
        }
        let lead = v[0].1.clone();
        if !lead.is_one() {
            let inv = lead.inv();
            for (_, c) in v.iter_mut() {
                *c = &*c * &inv;
            }
        }
        let p = v[0].0;
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&p, |(c, _)| *c) {
                let f = row[pos].1.clone();
                *row = sub_scaled(row, 0, &f, &v);
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(v);
        true
    }

    /// Adds a polynomial of this degree to the span; returns whether the rank grew.
    pub fn insert(&mut self, p: &HomogPoly) -> Result<bool> {
        self.check(p)?;
        Ok(self.insert_row(p.to_row()))
    }

    /// Whether `p` already lies in the span.
    pub fn contains(&self, p: &HomogPoly) -> Result<bool> {
        self.check(p)?;
        Ok(self.is_full() || self.reduce(p.to_row()).is_empty())
    }

    fn check(&self, p: &HomogPoly) -> Result<()> {
        if p.arity() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: p.arity(),
            });
        }
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(())
    }

    /// Pivot columns in increasing order (lex-decreasing leading monomials).
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        p.sort_unstable();
        p
    }

    /// The basis rows as polynomials, ordered by pivot.
    pub fn basis(&self) -> Vec<HomogPoly> {
        let cols = monomials_of_degree(self.n, self.degree);
        let mut rows: Vec<&Row> = self.rows.iter().collect();
        rows.sort_by_key(|r| r[0].0);
        rows.into_iter()
            .map(|r| HomogPoly {
                n: self.n,
                degree: self.degree,
                terms: r
                    .iter()
                    .map(|(c, v)| (cols[*c].clone(), v.clone()))
                    .collect(),
            })
            .collect()
    }

    /// Lex-leading monomials of the echelon rows.
    pub fn leading_monomials(&self) -> BTreeSet<MultiIndex> {
        let cols = monomials_of_degree(self.n, self.degree);
        self.rows.iter().map(|r| cols[r[0].0].clone()).collect()
    }

    /// Echelon form of `S_1 * self` in degree `k + 1`, i.e. the span of `z_i * b` over basis rows `b`.
    pub fn lift(&self) -> Echelon {
        let next_cols = monomials_of_degree(self.n, self.degree + 1);
        let cols = monomials_of_degree(self.n, self.degree);
        let mut out = Echelon::new(self.n, self.degree + 1);
        let table: Vec<Vec<usize>> = (0..self.n)
            .map(|i| {
                let u = MultiIndex::unit(self.n, i);
                cols.iter().map(|a| a.add(&u).lex_rank()).collect()
            })
            .collect();
        debug_assert!(table.iter().flatten().all(|&c| c < next_cols.len()));
        let mut rows: Vec<&Row> = self.rows.iter().collect();
        rows.sort_by_key(|r| r[0].0);
        // Multiplication by z_i is order preserving, so each shifted row stays sorted.
        for t in &table {
            for r in &rows {
                if out.is_full() {
                    return out;
                }
                let shifted: Row = r.iter().map(|(c, v)| (t[*c], v.clone())).collect();
                out.insert_row(shifted);
            }
        }
        out
    }
}

/// Homogeneous ideal given by generators of possibly different degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    n: usize,
    generators: Vec<HomogPoly>,
}

impl GradedIdeal {
    pub fn new(n: usize, generators: Vec<HomogPoly>) -> Result<Self> {
        assert!(n >= 1, "need at least one variable");
        for g in &generators {
            if g.arity() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: g.arity(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
        }
        Ok(Self { n, generators })
    }

    pub fn monomial(n: usize, monomials: Vec<MultiIndex>) -> Result<Self> {
        Self::new(n, monomials.into_iter().map(HomogPoly::monomial).collect())
    }

    /// The monomial ideal generated by the first `count` degree-`s` monomials in lex order.
    pub fn lex_segment(n: usize, s: usize, count: usize) -> Self {
        let gens = monomials_of_degree(n, s)
            .into_iter()
            .take(count)
            .map(HomogPoly::monomial)
            .collect();
        Self {
            n,
            generators: gens,
        }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[HomogPoly] {
        &self.generators
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(HomogPoly::is_monomial)
    }

    pub fn max_generator_degree(&self) -> Option<usize> {
        self.generators.iter().map(HomogPoly::degree).max()
    }

    /// Echelon forms of the components in degrees `0..=max_k`, each built
    /// from the previous one as `S_1 * I_k + (generators of degree k + 1)`.
    pub fn components(&self, max_k: usize) -> Vec<Echelon> {
        let mut out: Vec<Echelon> = Vec::with_capacity(max_k + 1);
        for k in 0..=max_k {
            let mut e = match out.last() {
                Some(prev) => prev.lift(),
                None => Echelon::new(self.n, 0),
            };
            for g in self.generators.iter().filter(|g| g.degree() == k) {
                if e.is_full() {
                    break;
                }
                e.insert_row(g.to_row());
            }
            out.push(e);
        }
        out
    }

    /// Hilbert values `H_I(k)` for `k = 0..=max_k`.
    pub fn hilbert_values(&self, max_k: usize) -> Vec<u64> {
        if self.is_monomial() {
            return (0..=max_k)
                .map(|k| monomial_component(self, k).len() as u64)
                .collect();
        }
        self.components(max_k)
            .iter()
            .map(|e| e.rank() as u64)
            .collect()
    }
}

/// Degree-`k` monomials divisible by some generator of a monomial ideal.
fn monomial_component(ideal: &GradedIdeal, k: usize) -> Vec<usize> {
    let leads: Vec<&MultiIndex> = ideal
        .generators
        .iter()
        .filter(|g| g.degree() <= k)
        .map(|g| g.terms.keys().next().unwrap())
        .collect();
    monomials_of_degree(ideal.n, k)
        .iter()
        .enumerate()
        .filter(|(_, a)| leads.iter().any(|g| g.divides(a)))
        .map(|(i, _)| i)
        .collect()
}

/// Reduced echelon basis of `I_k`, spanned by `mu * g` over generators `g`
/// with `deg g <= k` and monomials `mu` of degree `k - deg g`.
pub fn component_basis(ideal: &GradedIdeal, k: usize) -> Echelon {
    let mut e = Echelon::new(ideal.n, k);
    if ideal.is_monomial() {
        for c in monomial_component(ideal, k) {
            e.insert_row(vec![(c, GaussianRational::one())]);
        }
        return e;
    }
    for g in ideal.generators.iter().filter(|g| g.degree() <= k) {
        for mu in monomials_of_degree(ideal.n, k - g.degree()) {
            if e.is_full() {
                return e;
            }
            e.insert_row(g.mul_monomial(&mu).to_row());
        }
    }
    e
}

/// `H_I(k) = dim I_k`.
pub fn hilbert_ideal(ideal: &GradedIdeal, k: usize) -> u64 {
    if ideal.is_monomial() {
        return monomial_component(ideal, k).len() as u64;
    }
    component_basis(ideal, k).rank() as u64
}

/// `H_{S/I}(k) = D_k - H_I(k)`.
pub fn hilbert_quotient(ideal: &GradedIdeal, k: usize) -> u64 {
    dim_forms(ideal.n, k) - hilbert_ideal(ideal, k)
}

/// Degree-`k` part of the lex initial ideal: the leading monomials of the echelon basis of `I_k`.
pub fn initial_component(ideal: &GradedIdeal, k: usize) -> BTreeSet<MultiIndex> {
    component_basis(ideal, k).leading_monomials()
}

/// Whether `set` is exactly the first `|set|` degree-`k` monomials in lex order.
pub fn is_lex_segment(set: &BTreeSet<MultiIndex>, n: usize, k: usize) -> Result<bool> {
    for a in set {
        if a.arity() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: a.arity(),
            });
        }
        if a.degree() != k {
            return Err(Error::DegreeMismatch {
                expected: k,
                found: a.degree(),
            });
        }
    }
    Ok(set.iter().all(|a| a.lex_rank() < set.len()))
}

/// Whether `B_k` is a subspace of `A_k`.
pub fn spans_contain(a: &GradedIdeal, b: &GradedIdeal, k: usize) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::ArityMismatch {
            expected: a.n,
            found: b.n,
        });
    }
    let mut ea = component_basis(a, k);
    let rank = ea.rank();
    for p in component_basis(b, k).basis() {
        ea.insert(&p)?;
        if ea.rank() != rank {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One step of the growth bound `H_{S/I}(k+1) <= H_{S/I}(k)^<k>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthCheck {
    pub degree: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
    pub equality: bool,
}

impl GrowthCheck {
    fn from_quotients(degree: usize, at_k: u64, at_next: u64) -> Self {
        let rhs = macaulay_shift(at_k, degree);
        Self {
            degree,
            lhs: at_next,
            rhs,
            holds: at_next <= rhs,
            equality: at_next == rhs,
        }
    }
}

pub fn verify_macaulay_growth(ideal: &GradedIdeal, k: usize) -> GrowthCheck {
    assert!(k >= 1, "growth is checked from degree 1 on");
    GrowthCheck::from_quotients(
        k,
        hilbert_quotient(ideal, k),
        hilbert_quotient(ideal, k + 1),
    )
}

/// Growth checks for every `k` in `from..=to`, sharing one incremental component computation.
pub fn growth_range(ideal: &GradedIdeal, from: usize, to: usize) -> Vec<GrowthCheck> {
    assert!(from >= 1, "growth is checked from degree 1 on");
    let h = ideal.hilbert_values(to + 1);
    let q: Vec<u64> = h
        .iter()
        .enumerate()
        .map(|(k, v)| dim_forms(ideal.n, k) - v)
        .collect();
    (from..=to)
        .map(|k| GrowthCheck::from_quotients(k, q[k], q[k + 1]))
        .collect()
}

/// Persistence of equality in the growth bound over a finite window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GotzmannCheck {
    /// Equality at the step `s -> s + 1`.
    pub triggered: bool,
    /// Equality at every step `k -> k + 1` for `s <= k <= s + window`.
    pub persists: bool,
    pub steps: Vec<GrowthCheck>,
}

pub fn verify_gotzmann(ideal: &GradedIdeal, s: usize, window: usize) -> Result<GotzmannCheck> {
    if let Some(deg) = ideal.max_generator_degree() {
        if deg > s {
            return Err(Error::GeneratorDegree {
                degree: deg,
                bound: s,
            });
        }
    }
    let steps = growth_range(ideal, s, s + window);
    Ok(GotzmannCheck {
        triggered: steps[0].equality,
        persists: steps.iter().all(|c| c.equality),
        steps,
    })
}
