//! Exact inertia of Hermitian matrices over the Gaussian rationals.
//!
//! Two independent routes: congruence diagonalization `T* A T = diag(...)`,
//! and sign variations of the characteristic polynomial computed by the
//! Faddeev-LeVerrier trace recursion.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{GaussianRational, Rational};

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Square Hermitian matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMatrix {
    side: usize,
    entries: Vec<GaussianRational>,
}

/// Result of congruence diagonalization: `x* A x = sum_i weights[i] * |<rows[i], x>|^2`
/// where `<u, x> = sum_j u_j x_j`.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub weights: Vec<Rational>,
    pub rows: Vec<Vec<GaussianRational>>,
}

impl HermitianMatrix {
    pub fn zero(side: usize) -> Self {
        Self {
            side,
            entries: vec![GaussianRational::zero(); side * side],
        }
    }

    /// Builds from row-major entries, rejecting non-Hermitian input with the first offending `(i, j)`.
    pub fn from_entries(
        side: usize,
        entries: Vec<GaussianRational>,
    ) -> std::result::Result<Self, (usize, usize)> {
        assert_eq!(entries.len(), side * side, "entry count must be side^2");
        let m = Self { side, entries };
        match m.first_asymmetry() {
            Some(ij) => Err(ij),
            None => Ok(m),
        }
    }

    pub fn from_rows(
        rows: Vec<Vec<GaussianRational>>,
    ) -> std::result::Result<Self, (usize, usize)> {
        let side = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == side),
            "matrix must be square"
        );
        Self::from_entries(side, rows.into_iter().flatten().collect())
    }

    pub(crate) fn from_entries_unchecked(side: usize, entries: Vec<GaussianRational>) -> Self {
        debug_assert_eq!(entries.len(), side * side);
        Self { side, entries }
    }

    fn first_asymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..self.side {
            for j in i..self.side {
                if self.get(i, j) != &self.get(j, i).conj() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_hermitian(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.side + j]
    }

    #[cfg(test)]
    pub(crate) fn get_mut(&mut self, i: usize, j: usize) -> &mut GaussianRational {
        &mut self.entries[i * self.side + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.side).all(|i| (0..self.side).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// `T* A T` for a square `T` given row-major.
    pub fn congruent(&self, t: &[GaussianRational]) -> HermitianMatrix {
        let s = self.side;
        assert_eq!(t.len(), s * s);
        let mut at = vec![GaussianRational::zero(); s * s];
        for i in 0..s {
            for k in 0..s {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..s {
                    at[i * s + j].add_mul(a, &t[k * s + j]);
                }
            }
        }
        let mut out = vec![GaussianRational::zero(); s * s];
        for i in 0..s {
            for k in 0..s {
                let c = t[k * s + i].conj();
                if c.is_zero() {
                    continue;
                }
                for j in 0..s {
                    out[i * s + j].add_mul(&c, &at[k * s + j]);
                }
            }
        }
        HermitianMatrix::from_entries_unchecked(s, out)
    }

    /// Symmetric elimination. With `track`, also records the linear forms; with
    /// `stop_on_negative`, returns as soon as a negative square is certain.
    fn eliminate(&self, track: bool, stop_on_negative: bool) -> (Diagonalization, bool) {
        let s = self.side;
        let mut a = self.entries.clone();
        let at = |i: usize, j: usize| i * s + j;
        let mut active: Vec<usize> = (0..s).collect();
        let mut coords: Vec<Vec<GaussianRational>> = if track {
            (0..s)
                .map(|i| {
                    let mut row = vec![GaussianRational::zero(); s];
                    row[i] = GaussianRational::one();
                    row
                })
                .collect()
        } else {
            Vec::new()
        };
        let mut out = Diagonalization {
            weights: Vec::new(),
            rows: Vec::new(),
        };

        while !active.is_empty() {
            let k = match active.iter().copied().find(|&k| !a[at(k, k)].is_zero()) {
                Some(k) => k,
                None => {
                    let pair = active.iter().enumerate().find_map(|(p, &i)| {
                        active[p + 1..]
                            .iter()
                            .find(|&&j| !a[at(i, j)].is_zero())
                            .map(|&j| (i, j))
                    });
                    let Some((i, j)) = pair else { break };
                    if stop_on_negative {
                        // A zero diagonal with a nonzero off-diagonal entry is indefinite.
                        return (out, true);
                    }
                    // New basis vector e_i + t e_j gives diagonal 2 Re(t a_ij) != 0.
                    let t = if a[at(i, j)].re.is_zero() {
                        GaussianRational::i()
                    } else {
                        GaussianRational::one()
                    };
                    let tc = t.conj();
                    for &c in &active {
                        let v = &tc * &a[at(j, c)];
                        a[at(i, c)] += &v;
                    }
                    for &r in &active {
                        let v = &a[at(r, j)] * &t;
                        a[at(r, i)] += &v;
                    }
                    if track {
                        let yi = coords[i].clone();
                        for (dst, src) in coords[j].iter_mut().zip(&yi) {
                            if !src.is_zero() {
                                *dst -= &(&t * src);
                            }
                        }
                    }
                    i
                }
            };
            let d = a[at(k, k)].re.clone();
            debug_assert!(a[at(k, k)].im.is_zero());
            let negative = d.is_negative();
            active.retain(|&x| x != k);
            let dinv = d.recip();
            let factors: Vec<(usize, GaussianRational)> = active
                .iter()
                .filter(|&&c| !a[at(k, c)].is_zero())
                .map(|&c| (c, a[at(k, c)].scale(&dinv)))
                .collect();
            if track {
                let mut row = coords[k].clone();
                for (c, f) in &factors {
                    for (dst, src) in row.iter_mut().zip(&coords[*c]) {
                        if !src.is_zero() {
                            dst.add_mul(f, src);
                        }
                    }
                }
                out.rows.push(row);
            }
            out.weights.push(d);
            if negative && stop_on_negative {
                return (out, true);
            }
            // Schur complement: a_rc -= a_rk * a_kc / d = conj(f_r) * d * f_c.
            for (r, fr) in &factors {
                let left = fr.conj().scale(&a[at(k, k)].re);
                for (c, fc) in &factors {
                    let v = &left * fc;
                    a[at(*r, *c)] -= &v;
                }
            }
        }
        (out, false)
    }

    /// Diagonalizes by congruence, returning weights and the linear forms.
    pub fn diagonalize(&self) -> Diagonalization {
        self.eliminate(true, false).0
    }

    pub fn congruence_inertia(&self) -> Inertia {
        let (diag, _) = self.eliminate(false, false);
        let positive = diag.weights.iter().filter(|w| w.is_positive()).count();
        let negative = diag.weights.len() - positive;
        Inertia {
            positive,
            negative,
            zero: self.side - diag.weights.len(),
        }
    }

    /// Positive semidefiniteness, stopping at the first negative square.
    pub fn is_psd(&self) -> bool {
        !self.eliminate(false, true).1
    }

    /// Coefficients `c_0, ..., c_side` of `det(x I - A)`, lowest degree first.
    ///
    /// The recursion runs on `L A` over the Gaussian integers, `L` the lcm of
    /// all denominators, where every division by `k` is exact.
    pub fn charpoly(&self) -> Result<Vec<Rational>> {
        let s = self.side;
        let mut scale = BigInt::one();
        for e in &self.entries {
            scale = scale.lcm(e.re.denom()).lcm(e.im.denom());
        }
        let lift = |r: &Rational| r.numer() * (&scale / r.denom());
        let re: Vec<BigInt> = self.entries.iter().map(|e| lift(&e.re)).collect();
        let im: Vec<BigInt> = self.entries.iter().map(|e| lift(&e.im)).collect();

        // M_k = A M_{k-1} + c_{s-k+1} I,  c_{s-k} = -tr(A M_k) / k
        let mut coeffs = vec![(BigInt::zero(), BigInt::zero()); s + 1];
        coeffs[s].0 = BigInt::one();
        let mut m_re = vec![BigInt::zero(); s * s];
        let mut m_im = vec![BigInt::zero(); s * s];
        for k in 1..=s {
            let mut n_re = vec![BigInt::zero(); s * s];
            let mut n_im = vec![BigInt::zero(); s * s];
            for i in 0..s {
                for l in 0..s {
                    let (ar, ai) = (&re[i * s + l], &im[i * s + l]);
                    if ar.is_zero() && ai.is_zero() {
                        continue;
                    }
                    for j in 0..s {
                        let (br, bi) = (&m_re[l * s + j], &m_im[l * s + j]);
                        n_re[i * s + j] += ar * br - ai * bi;
                        n_im[i * s + j] += ar * bi + ai * br;
                    }
                }
                n_re[i * s + i] += &coeffs[s - k + 1].0;
                n_im[i * s + i] += &coeffs[s - k + 1].1;
            }
            let (mut tr, mut ti) = (BigInt::zero(), BigInt::zero());
            for i in 0..s {
                for l in 0..s {
                    let (ar, ai) = (&re[i * s + l], &im[i * s + l]);
                    let (br, bi) = (&n_re[l * s + i], &n_im[l * s + i]);
                    tr += ar * br - ai * bi;
                    ti += ar * bi + ai * br;
                }
            }
            let k_big = BigInt::from(k);
            let (qr, rr) = tr.div_rem(&k_big);
            let (qi, ri) = ti.div_rem(&k_big);
            if !rr.is_zero() || !ri.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "trace recursion: step {k} does not divide exactly"
                )));
            }
            coeffs[s - k] = (-qr, -qi);
            m_re = n_re;
            m_im = n_im;
        }
        let mut power = BigInt::one();
        let mut out = vec![Rational::zero(); s + 1];
        for j in (0..=s).rev() {
            let (c_re, c_im) = &coeffs[j];
            if !c_im.is_zero() {
                return Err(Error::Inconsistent(
                    "characteristic polynomial of a Hermitian matrix has a non-real coefficient"
                        .into(),
                ));
            }
            // det(x I - L A) has c_j L^(s-j) in degree j
            out[j] = Rational::new(c_re.clone(), power.clone());
            power *= &scale;
        }
        Ok(out)
    }

    /// Inertia from sign variations of the characteristic polynomial; exact
    /// because a Hermitian matrix has only real eigenvalues.
    pub fn charpoly_inertia(&self) -> Result<Inertia> {
        let p = self.charpoly()?;
        let zero = p.iter().take_while(|c| c.is_zero()).count();
        let rest = &p[zero..];
        let variations = |alternate: bool| {
            let signs: Vec<bool> = rest
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| c.is_positive() ^ (alternate && i % 2 == 1))
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let inertia = Inertia {
            positive: variations(false),
            negative: variations(true),
            zero,
        };
        if inertia.positive + inertia.negative + inertia.zero != self.side {
            return Err(Error::Inconsistent(format!(
                "sign variations {inertia:?} do not account for all {} eigenvalues",
                self.side
            )));
        }
        Ok(inertia)
    }

    /// Runs both inertia routes concurrently and requires them to agree.
    pub fn verified_inertia(&self) -> Result<Inertia> {
        let (a, b) = std::thread::scope(|scope| {
            let cong = scope.spawn(|| self.congruence_inertia());
            let poly = self.charpoly_inertia();
            (cong.join().expect("congruence inertia panicked"), poly)
        });
        let b = b?;
        if a != b {
            return Err(Error::Inconsistent(format!(
                "congruence inertia {a:?} disagrees with characteristic polynomial inertia {b:?}"
            )));
        }
        Ok(a)
    }
}
