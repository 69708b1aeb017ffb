//! Seedable generators for the randomized checks: forms, PSD sums of squares,
//! Hermitian matrices and ideals with small integer coefficients.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::hermitian::{BihomForm, HermitianMatrix};
use crate::numeric::GaussianRational;
use crate::polyring::{monomials_of_degree, GradedIdeal, HomogPoly, MultiIndex};

fn small_nonzero<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

/// Nonzero degree-`m` form with up to `max_terms` terms and coefficients in `[-bound, bound]`.
pub fn random_form<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    max_terms: usize,
    bound: i64,
) -> HomogPoly {
    let pool = monomials_of_degree(n, m);
    let count = rng.gen_range(1..=max_terms.min(pool.len()).max(1));
    let terms = pool.choose_multiple(rng, count).map(|a| {
        (
            a.clone(),
            GaussianRational::from_int(small_nonzero(rng, bound)),
        )
    });
    HomogPoly::from_terms(n, m, terms).expect("terms have the declared degree")
}

/// `r = sum_{j=1}^{P} |f_j|^2` with `1 <= P <= p_max` random degree-`m` forms.
pub fn random_psd_form<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    p_max: usize,
) -> (BihomForm, Vec<HomogPoly>) {
    let p = rng.gen_range(1..=p_max);
    let side = monomials_of_degree(n, m).len();
    let forms: Vec<HomogPoly> = (0..p).map(|_| random_form(rng, n, m, side, 3)).collect();
    let r = BihomForm::sum_of_squares(n, m, &forms).expect("forms share arity and degree");
    (r, forms)
}

/// Random Hermitian matrix with entries in `[-bound, bound]` (`+ i[-bound, bound]` when `complex`).
///
/// With `rank = Some(k)` it is `B* D B` for a random `k x side` integer `B` and
/// random signs in `D`, so its rank is at most `k`.
pub fn random_hermitian<R: Rng>(
    rng: &mut R,
    side: usize,
    bound: i64,
    complex: bool,
    rank: Option<usize>,
) -> HermitianMatrix {
    let entry = |rng: &mut R| {
        let re = GaussianRational::from_int(rng.gen_range(-bound..=bound));
        if complex {
            &re + &(&GaussianRational::i()
                * &GaussianRational::from_int(rng.gen_range(-bound..=bound)))
        } else {
            re
        }
    };
    let entries = match rank {
        None => {
            let mut e = vec![GaussianRational::default(); side * side];
            for i in 0..side {
                e[i * side + i] = GaussianRational::from_int(rng.gen_range(-bound..=bound));
                for j in i + 1..side {
                    let v = entry(rng);
                    e[j * side + i] = v.conj();
                    e[i * side + j] = v;
                }
            }
            e
        }
        Some(k) => {
            let b: Vec<GaussianRational> = (0..k * side).map(|_| entry(rng)).collect();
            let signs: Vec<GaussianRational> = (0..k)
                .map(|_| GaussianRational::from_int(if rng.gen_bool(0.5) { 1 } else { -1 }))
                .collect();
            let mut e = vec![GaussianRational::default(); side * side];
            for i in 0..side {
                for j in 0..side {
                    let mut acc = GaussianRational::default();
                    for l in 0..k {
                        let t = &b[l * side + i].conj() * &signs[l];
                        acc.add_mul(&t, &b[l * side + j]);
                    }
                    e[i * side + j] = acc;
                }
            }
            e
        }
    };
    HermitianMatrix::from_entries(side, entries).expect("constructed Hermitian")
}

/// General real bihomogeneous form: a random Hermitian coefficient matrix.
pub fn random_bihom_form<R: Rng>(rng: &mut R, n: usize, m: usize, complex: bool) -> BihomForm {
    let side = monomials_of_degree(n, m).len();
    let matrix = random_hermitian(rng, side, 3, complex, None);
    BihomForm::from_matrix(n, m, matrix).expect("side matches D_m")
}

/// Monomial ideal with `1..=max_gens` generators of degree `1..=max_deg`.
pub fn random_monomial_ideal<R: Rng>(
    rng: &mut R,
    n: usize,
    max_deg: usize,
    max_gens: usize,
) -> GradedIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<MultiIndex> = (0..count)
        .map(|_| {
            let deg = rng.gen_range(1..=max_deg);
            monomials_of_degree(n, deg).choose(rng).unwrap().clone()
        })
        .collect();
    GradedIdeal::monomial(n, gens).expect("monomials are nonzero")
}

/// Ideal with `1..=max_gens` random non-monomial-in-general generators.
pub fn random_dense_ideal<R: Rng>(
    rng: &mut R,
    n: usize,
    max_deg: usize,
    max_gens: usize,
    max_terms: usize,
) -> GradedIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| {
            let deg = rng.gen_range(1..=max_deg);
            random_form(rng, n, deg, max_terms, 3)
        })
        .collect();
    GradedIdeal::new(n, gens).expect("random forms are nonzero")
}
