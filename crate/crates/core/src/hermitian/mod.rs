//! Bihomogeneous real polynomials as Hermitian coefficient matrices.
//!
//! `r(z, conj z) = sum c_ab z^a conj(z)^b` over `|a| = |b| = m` is stored as the
//! matrix `(c_ab)` with rows and columns indexed by [`monomials_of_degree`].
//! Realness of `r` is exactly the Hermitian symmetry of that matrix.

mod inertia;

use num_traits::{One, Signed, Zero};

pub use inertia::{Diagonalization, HermitianMatrix, Inertia};

use crate::error::{Error, Result};
use crate::numeric::{multinomial, GaussianRational, Rational};
use crate::polyring::{
    hilbert_ideal, monomials_of_degree, render_sum, spans_contain, GradedIdeal, HomogPoly,
    MultiIndex,
};

/// Signature pair `(P, N)` and rank `R = P + N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignatureReport {
    pub positive: usize,
    pub negative: usize,
    pub rank: usize,
}

impl From<Inertia> for SignatureReport {
    fn from(i: Inertia) -> Self {
        Self {
            positive: i.positive,
            negative: i.negative,
            rank: i.positive + i.negative,
        }
    }
}

/// One square `weight * |form|^2` of a holomorphic decomposition.
///
/// A positive weight stands for the component `sqrt(weight) * form` of `f`,
/// a negative one for a component of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedForm {
    pub weight: Rational,
    pub form: HomogPoly,
}

/// The forms of a decomposition split by the sign of their weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpans {
    pub f_gens: Vec<HomogPoly>,
    pub g_gens: Vec<HomogPoly>,
}

/// Real bihomogeneous polynomial of bidegree `(m, m)` in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BihomForm {
    n: usize,
    m: usize,
    matrix: HermitianMatrix,
}

impl BihomForm {
    pub fn zero(n: usize, m: usize) -> Self {
        let side = monomials_of_degree(n, m).len();
        Self {
            n,
            m,
            matrix: HermitianMatrix::zero(side),
        }
    }

    /// Accumulates `(a, b, c_ab)` entries and requires the total to be Hermitian.
    pub fn from_terms<I>(n: usize, m: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, MultiIndex, GaussianRational)>,
    {
        let basis = monomials_of_degree(n, m);
        let side = basis.len();
        let mut raw = vec![GaussianRational::zero(); side * side];
        for (a, b, c) in entries {
            for x in [&a, &b] {
                if x.arity() != n {
                    return Err(Error::ArityMismatch {
                        expected: n,
                        found: x.arity(),
                    });
                }
                if x.degree() != m {
                    return Err(Error::DegreeMismatch {
                        expected: m,
                        found: x.degree(),
                    });
                }
            }
            raw[a.lex_rank() * side + b.lex_rank()] += &c;
        }
        let matrix =
            HermitianMatrix::from_entries(side, raw).map_err(|(i, j)| Error::NonHermitian {
                alpha: basis[i].clone(),
                beta: basis[j].clone(),
            })?;
        Ok(Self { n, m, matrix })
    }

    pub fn from_matrix(n: usize, m: usize, matrix: HermitianMatrix) -> Result<Self> {
        let side = monomials_of_degree(n, m).len();
        if matrix.side() != side {
            return Err(Error::DegreeMismatch {
                expected: side,
                found: matrix.side(),
            });
        }
        Ok(Self { n, m, matrix })
    }

    /// `|f|^2` for a holomorphic form `f`: the rank-one matrix `f_a conj(f_b)`.
    pub fn abs2(f: &HomogPoly) -> Self {
        let mut out = Self::zero(f.arity(), f.degree());
        let side = out.matrix.side();
        let terms: Vec<(usize, &GaussianRational)> =
            f.terms().map(|(a, c)| (a.lex_rank(), c)).collect();
        let mut entries = vec![GaussianRational::zero(); side * side];
        for (i, ci) in &terms {
            for (j, cj) in &terms {
                entries[i * side + j] = *ci * &cj.conj();
            }
        }
        out.matrix = HermitianMatrix::from_entries_unchecked(side, entries);
        out
    }

    /// `sum_j |f_j|^2`.
    pub fn sum_of_squares(n: usize, m: usize, forms: &[HomogPoly]) -> Result<Self> {
        let mut acc = Self::zero(n, m);
        for f in forms {
            if f.arity() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: f.arity(),
                });
            }
            if f.degree() != m {
                return Err(Error::DegreeMismatch {
                    expected: m,
                    found: f.degree(),
                });
            }
            acc = acc.add(&Self::abs2(f))?;
        }
        Ok(acc)
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn bidegree(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn basis(&self) -> Vec<MultiIndex> {
        monomials_of_degree(self.n, self.m)
    }

    pub fn entry(&self, a: &MultiIndex, b: &MultiIndex) -> GaussianRational {
        self.matrix.get(a.lex_rank(), b.lex_rank()).clone()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Nonzero entries `(a, b, c_ab)` in row-major order.
    pub fn entries(&self) -> Vec<(MultiIndex, MultiIndex, GaussianRational)> {
        let basis = self.basis();
        let side = basis.len();
        let mut out = Vec::new();
        for i in 0..side {
            for j in 0..side {
                let c = self.matrix.get(i, j);
                if !c.is_zero() {
                    out.push((basis[i].clone(), basis[j].clone(), c.clone()));
                }
            }
        }
        out
    }

    fn same_shape(&self, other: &BihomForm) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        if self.m != other.m {
            return Err(Error::DegreeMismatch {
                expected: self.m,
                found: other.m,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &BihomForm) -> Result<BihomForm> {
        self.same_shape(other)?;
        let side = self.matrix.side();
        let entries = (0..side * side)
            .map(|x| self.matrix.get(x / side, x % side) + other.matrix.get(x / side, x % side))
            .collect();
        Ok(BihomForm {
            n: self.n,
            m: self.m,
            matrix: HermitianMatrix::from_entries_unchecked(side, entries),
        })
    }

    pub fn scale(&self, k: &Rational) -> BihomForm {
        let side = self.matrix.side();
        let entries = (0..side * side)
            .map(|x| self.matrix.get(x / side, x % side).scale(k))
            .collect();
        BihomForm {
            n: self.n,
            m: self.m,
            matrix: HermitianMatrix::from_entries_unchecked(side, entries),
        }
    }

    /// `r(z, conj z)` at a Gaussian-rational point.
    pub fn evaluate(&self, z: &[GaussianRational]) -> Result<Rational> {
        if z.len() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: z.len(),
            });
        }
        let powers: Vec<GaussianRational> = self
            .basis()
            .iter()
            .map(|a| HomogPoly::monomial(a.clone()).evaluate(z))
            .collect::<Result<_>>()?;
        let mut acc = GaussianRational::zero();
        for (i, pi) in powers.iter().enumerate() {
            for (j, pj) in powers.iter().enumerate() {
                let c = self.matrix.get(i, j);
                if !c.is_zero() {
                    acc += &(&(c * pi) * &pj.conj());
                }
            }
        }
        if !acc.is_real() {
            return Err(Error::Inconsistent(format!(
                "real polynomial evaluated to non-real value {acc}"
            )));
        }
        Ok(acc.re)
    }

    /// Product of two forms; bidegrees add.
    pub fn mul(&self, other: &BihomForm) -> Result<BihomForm> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let m = self.m + other.m;
        let basis = monomials_of_degree(self.n, m);
        let side = basis.len();
        let mut entries = vec![GaussianRational::zero(); side * side];
        let lhs = self.entries();
        let rhs = other.entries();
        for (a, b, c) in &lhs {
            for (a2, b2, c2) in &rhs {
                let i = a.add(a2).lex_rank();
                let j = b.add(b2).lex_rank();
                entries[i * side + j].add_mul(c, c2);
            }
        }
        Ok(BihomForm {
            n: self.n,
            m,
            matrix: HermitianMatrix::from_entries_unchecked(side, entries),
        })
    }

    /// `r * |z|^(2d)`, using `|z|^(2d) = sum_{|mu| = d} multinomial(d, mu) |z^mu|^2`.
    pub fn mul_norm_power(&self, d: usize) -> BihomForm {
        if d == 0 {
            return self.clone();
        }
        let m = self.m + d;
        let side = monomials_of_degree(self.n, m).len();
        let mus: Vec<(MultiIndex, Rational)> = monomials_of_degree(self.n, d)
            .into_iter()
            .map(|mu| {
                let w = multinomial(d, &mu).expect("degree matches by construction");
                (mu, Rational::from_integer(w.into()))
            })
            .collect();
        let mut entries = vec![GaussianRational::zero(); side * side];
        for (a, b, c) in self.entries() {
            for (mu, w) in &mus {
                let i = a.add(mu).lex_rank();
                let j = b.add(mu).lex_rank();
                entries[i * side + j] += &c.scale(w);
            }
        }
        BihomForm {
            n: self.n,
            m,
            matrix: HermitianMatrix::from_entries_unchecked(side, entries),
        }
    }

    pub fn inertia(&self) -> SignatureReport {
        self.matrix.congruence_inertia().into()
    }

    /// Inertia by both exact routes, failing if they disagree.
    pub fn inertia_verified(&self) -> Result<SignatureReport> {
        Ok(self.matrix.verified_inertia()?.into())
    }

    /// Holomorphic decomposition `r = sum_i d_i |l_i|^2` with rational weights.
    pub fn decompose(&self) -> Vec<WeightedForm> {
        let diag = self.matrix.diagonalize();
        let basis = self.basis();
        diag.weights
            .into_iter()
            .zip(diag.rows)
            .map(|(weight, row)| {
                // The row pairs with conj(z^b); conjugating gives a holomorphic form.
                let form = HomogPoly::from_terms(
                    self.n,
                    self.m,
                    basis
                        .iter()
                        .cloned()
                        .zip(row.iter().map(GaussianRational::conj)),
                )
                .expect("basis matches arity and degree");
                WeightedForm { weight, form }
            })
            .collect()
    }

    /// `N = 0`, i.e. `r = |h|^2` for a holomorphic polynomial map `h`.
    pub fn is_squared_norm(&self) -> bool {
        self.matrix.is_psd()
    }

    /// Least `d <= d_max` with `r * |z|^(2d)` a squared norm.
    pub fn minimal_d(&self, d_max: usize) -> Option<usize> {
        let mut product = self.clone();
        for d in 0..=d_max {
            if product.is_squared_norm() {
                return Some(d);
            }
            if d < d_max {
                product = product.mul_norm_power(1);
            }
        }
        None
    }

    pub fn generator_spans(&self) -> GeneratorSpans {
        let (pos, neg): (Vec<WeightedForm>, Vec<WeightedForm>) = self
            .decompose()
            .into_iter()
            .partition(|w| w.weight.is_positive());
        GeneratorSpans {
            f_gens: pos.into_iter().map(|w| w.form).collect(),
            g_gens: neg.into_iter().map(|w| w.form).collect(),
        }
    }

    /// Ideals generated by the positive and by all components of the decomposition.
    pub fn decomposition_ideals(&self) -> (GradedIdeal, GradedIdeal) {
        let spans = self.generator_spans();
        let f = GradedIdeal::new(self.n, spans.f_gens.clone())
            .expect("decomposition forms are nonzero");
        let mut all = spans.f_gens;
        all.extend(spans.g_gens);
        let fg = GradedIdeal::new(self.n, all).expect("decomposition forms are nonzero");
        (f, fg)
    }

    /// Checks that `(V_g)_{m+d}` lies in `(V_f)_{m+d}` when `r |z|^(2d)` is a squared norm.
    pub fn verify_lemma_containment(&self, d: usize) -> Result<bool> {
        if !self.mul_norm_power(d).is_squared_norm() {
            return Err(Error::Precondition(format!(
                "r * |z|^{} is not a squared norm",
                2 * d
            )));
        }
        let spans = self.generator_spans();
        let f = GradedIdeal::new(self.n, spans.f_gens).expect("decomposition forms are nonzero");
        let g = GradedIdeal::new(self.n, spans.g_gens).expect("decomposition forms are nonzero");
        spans_contain(&f, &g, self.m + d)
    }

    /// `H_{V_{f+g}}(k)` for the ideal spanned by the whole decomposition.
    pub fn hilbert_of_decomposition(&self, k: usize) -> u64 {
        hilbert_ideal(&self.decomposition_ideals().1, k)
    }

    /// Canonical text, one `c * z^a * w^b` term per nonzero entry (`w` is `conj z`).
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        render_sum(self.entries().into_iter().map(|(a, b, c)| {
            let za = a.render('z');
            let wb = b.render('w');
            let mono = match (za.as_str(), wb.as_str()) {
                ("1", "1") => "1".to_string(),
                ("1", _) => wb,
                (_, "1") => za,
                _ => format!("{za}*{wb}"),
            };
            (mono, c)
        }))
    }
}

/// The one-parameter family `(|z1|^2 - |z2|^2)^2 + eps |z1 z2|^2`.
pub fn epsilon_family(eps: &Rational) -> BihomForm {
    let mi = |e: [u32; 2]| MultiIndex::new(e.to_vec());
    let one = GaussianRational::one();
    let middle = GaussianRational::real(eps - Rational::from_integer(2.into()));
    BihomForm::from_terms(
        2,
        2,
        [
            (mi([2, 0]), mi([2, 0]), one.clone()),
            (mi([1, 1]), mi([1, 1]), middle),
            (mi([0, 2]), mi([0, 2]), one),
        ],
    )
    .expect("diagonal entries are Hermitian")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational;

    fn mi(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    fn g(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }

    fn diag_form(n: usize, m: usize, vals: &[(&[u32], GaussianRational)]) -> BihomForm {
        BihomForm::from_terms(n, m, vals.iter().map(|(e, c)| (mi(e), mi(e), c.clone()))).unwrap()
    }

    fn norm1(n: usize) -> BihomForm {
        let terms: Vec<_> = (0..n)
            .map(|i| (MultiIndex::unit(n, i), MultiIndex::unit(n, i), g(1)))
            .collect();
        BihomForm::from_terms(n, 1, terms).unwrap()
    }

    fn diff1() -> BihomForm {
        diag_form(2, 1, &[(&[1, 0], g(1)), (&[0, 1], g(-1))])
    }

    fn diagonal(r: &BihomForm) -> Vec<GaussianRational> {
        r.basis().iter().map(|a| r.entry(a, a)).collect()
    }

    #[test]
    fn from_terms_examples() {
        let r = diag_form(2, 2, &[(&[2, 0], g(1))]);
        assert_eq!(r.entries(), vec![(mi(&[2, 0]), mi(&[2, 0]), g(1))]);

        let err = BihomForm::from_terms(2, 2, [(mi(&[2, 0]), mi(&[0, 2]), g(1))]).unwrap_err();
        assert_eq!(
            err,
            Error::NonHermitian {
                alpha: mi(&[2, 0]),
                beta: mi(&[0, 2])
            }
        );

        let ok = BihomForm::from_terms(
            2,
            2,
            [
                (mi(&[2, 0]), mi(&[0, 2]), g(1)),
                (mi(&[0, 2]), mi(&[2, 0]), g(1)),
            ],
        )
        .unwrap();
        let s = ok.inertia();
        assert_eq!((s.positive, s.negative), (1, 1));

        assert!(matches!(
            BihomForm::from_terms(2, 2, [(mi(&[1, 0]), mi(&[1, 0]), g(1))]),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn evaluate_examples() {
        let i = GaussianRational::i();
        assert_eq!(norm1(2).evaluate(&[g(1), i]).unwrap(), rational(2, 1));
        let eps = rational(3, 7);
        let r = epsilon_family(&eps);
        assert_eq!(r.evaluate(&[g(1), g(1)]).unwrap(), eps);
        assert_eq!(diff1().evaluate(&[g(0), g(1)]).unwrap(), rational(-1, 1));
        assert!(r.evaluate(&[g(1)]).is_err());
    }

    #[test]
    fn mul_examples() {
        let sq = diff1().mul(&diff1()).unwrap();
        assert!(sq.matrix().is_diagonal());
        assert_eq!(diagonal(&sq), vec![g(1), g(-2), g(1)]);

        let zero = BihomForm::zero(2, 1);
        assert!(diff1().mul(&zero).unwrap().is_zero());

        let a = diag_form(2, 1, &[(&[1, 0], g(1))]);
        let b = diag_form(2, 1, &[(&[0, 1], g(1))]);
        assert_eq!(
            a.mul(&b).unwrap().entries(),
            vec![(mi(&[1, 1]), mi(&[1, 1]), g(1))]
        );
        assert!(a.mul(&norm1(3)).is_err());
    }

    #[test]
    fn mul_norm_power_examples() {
        let a = diag_form(2, 1, &[(&[1, 0], g(1))]);
        let p = a.mul_norm_power(1);
        assert_eq!(
            p.entries(),
            vec![
                (mi(&[2, 0]), mi(&[2, 0]), g(1)),
                (mi(&[1, 1]), mi(&[1, 1]), g(1))
            ]
        );
        let r0 = diff1().mul(&diff1()).unwrap().mul_norm_power(1);
        assert!(r0.matrix().is_diagonal());
        assert_eq!(diagonal(&r0), vec![g(1), g(-1), g(-1), g(1)]);
        let r = epsilon_family(&rational(1, 2));
        assert_eq!(r.mul_norm_power(0), r);
        // Same as multiplying by |z|^2 explicitly.
        assert_eq!(r.mul_norm_power(1), r.mul(&norm1(2)).unwrap());
        assert_eq!(
            r.mul_norm_power(3),
            r.mul(&norm1(2))
                .unwrap()
                .mul(&norm1(2))
                .unwrap()
                .mul(&norm1(2))
                .unwrap()
        );
    }

    #[test]
    fn inertia_examples() {
        let s = epsilon_family(&rational(1, 2)).inertia();
        assert_eq!((s.positive, s.negative, s.rank), (2, 1, 3));
        let s = epsilon_family(&rational(2, 1)).inertia();
        assert_eq!((s.positive, s.negative, s.rank), (2, 0, 2));
        let s = BihomForm::zero(2, 2).inertia();
        assert_eq!((s.positive, s.negative, s.rank), (0, 0, 0));
        assert_eq!(
            epsilon_family(&rational(1, 2)).inertia_verified().unwrap(),
            epsilon_family(&rational(1, 2)).inertia()
        );
    }

    #[test]
    fn decompose_examples() {
        let d = epsilon_family(&rational(1, 2)).decompose();
        let got: Vec<(Rational, HomogPoly)> = d.into_iter().map(|w| (w.weight, w.form)).collect();
        assert_eq!(
            got,
            vec![
                (rational(1, 1), HomogPoly::monomial(mi(&[2, 0]))),
                (rational(-3, 2), HomogPoly::monomial(mi(&[1, 1]))),
                (rational(1, 1), HomogPoly::monomial(mi(&[0, 2]))),
            ]
        );

        let all_ones = BihomForm::from_terms(
            2,
            1,
            [
                (mi(&[1, 0]), mi(&[1, 0]), g(1)),
                (mi(&[1, 0]), mi(&[0, 1]), g(1)),
                (mi(&[0, 1]), mi(&[1, 0]), g(1)),
                (mi(&[0, 1]), mi(&[0, 1]), g(1)),
            ],
        )
        .unwrap();
        let d = all_ones.decompose();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].weight, rational(1, 1));
        let sum = HomogPoly::from_terms(2, 1, [(mi(&[1, 0]), g(1)), (mi(&[0, 1]), g(1))]).unwrap();
        assert_eq!(d[0].form, sum);

        assert!(BihomForm::zero(2, 2).decompose().is_empty());
    }

    #[test]
    fn decompose_complex_form() {
        // | z1 + i z2 |^2 - 2 |z1|^2
        let i = GaussianRational::i();
        let f =
            HomogPoly::from_terms(2, 1, [(mi(&[1, 0]), g(1)), (mi(&[0, 1]), i.clone())]).unwrap();
        let r = BihomForm::abs2(&f)
            .add(&diag_form(2, 1, &[(&[1, 0], g(-2))]))
            .unwrap();
        let d = r.decompose();
        let pts = [
            [g(1), g(2)],
            [i.clone(), g(-3)],
            [&g(1) + &i, GaussianRational::ratio(1, 2)],
        ];
        for z in pts {
            let mut acc = Rational::zero();
            for w in &d {
                acc += w.form.evaluate(&z).unwrap().norm_sqr() * &w.weight;
            }
            assert_eq!(acc, r.evaluate(&z).unwrap());
        }
    }

    #[test]
    fn squared_norm_examples() {
        assert!(norm1(2).is_squared_norm());
        assert!(!diff1().is_squared_norm());
        assert!(epsilon_family(&rational(1, 2))
            .mul_norm_power(5)
            .is_squared_norm());
        assert!(!epsilon_family(&rational(1, 2))
            .mul_norm_power(4)
            .is_squared_norm());
    }

    #[test]
    fn minimal_d_examples() {
        assert_eq!(epsilon_family(&rational(1, 2)).minimal_d(10), Some(5));
        assert_eq!(norm1(2).minimal_d(64), Some(0));
        assert_eq!(diff1().minimal_d(8), None);
        assert_eq!(BihomForm::zero(2, 3).minimal_d(0), Some(0));
        assert_eq!(epsilon_family(&rational(1, 2)).minimal_d(4), None);
    }

    #[test]
    fn generator_span_examples() {
        let s = epsilon_family(&rational(1, 2)).generator_spans();
        assert_eq!(
            s.f_gens,
            vec![
                HomogPoly::monomial(mi(&[2, 0])),
                HomogPoly::monomial(mi(&[0, 2]))
            ]
        );
        assert_eq!(s.g_gens, vec![HomogPoly::monomial(mi(&[1, 1]))]);
        assert!(norm1(3).generator_spans().g_gens.is_empty());
        let z = BihomForm::zero(2, 2).generator_spans();
        assert!(z.f_gens.is_empty() && z.g_gens.is_empty());
    }

    #[test]
    fn lemma_containment_examples() {
        let r = epsilon_family(&rational(1, 2));
        assert!(r.verify_lemma_containment(5).unwrap());
        assert!(matches!(
            r.verify_lemma_containment(4),
            Err(Error::Precondition(_))
        ));
        let f = HomogPoly::from_terms(2, 2, [(mi(&[2, 0]), g(1)), (mi(&[1, 1]), g(3))]).unwrap();
        let sq = BihomForm::abs2(&f);
        for d in 1..=3 {
            assert!(sq.verify_lemma_containment(d).unwrap());
        }
    }

    #[test]
    fn render_is_stable_text() {
        let r = epsilon_family(&rational(1, 2));
        assert_eq!(r.render(), "z1^2*w1^2 - 3/2*z1*z2*w1*w2 + z2^2*w2^2");
        assert_eq!(BihomForm::zero(2, 1).render(), "0");
    }
}
