//! Exact big-integer evaluation of the certificate polynomials attached to
//! graceful labelings: squared-entry Vandermonde determinants summed over all
//! relabelings, the center-sums identity tying that sum to the count of
//! gracefully labeled conjugates, Eisenstein-norm certificates, and the
//! graceful-expansion data of a graceful relabeling.
//!
//! No floating point enters any verified path; differences are taken with
//! unit spacing and zero offset, which loses nothing for zero/nonzero
//! certificate checks because induced labels are translation invariant.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::endograph::EndoFunction;
use crate::labeling::{self, LabelExtrema};
use crate::monoid::{for_each_permutation, LexRank, Permutation};
use crate::{BigValue, Error, Result};

/// Label-difference vector `d[i] = s f g^(t) s^{-1}(i) - i` indexed by the
/// rank of the relabeling and the composition exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationPoint {
    pub d: Vec<i64>,
    pub sigma_rank: LexRank,
    pub t: u8,
}

fn require_tree(f: &EndoFunction) -> Result<()> {
    if f.is_tree_function() {
        Ok(())
    } else {
        Err(Error::NotATreeFunction)
    }
}

/// Evaluation point for the pair `(f, g)` at relabeling `sigma`; `t = 0`
/// evaluates `f` itself, `t = 1` evaluates the composition `f . g`.
pub fn evaluation_points(
    f: &EndoFunction,
    g: &EndoFunction,
    sigma: &Permutation,
    t: u8,
) -> Result<EvaluationPoint> {
    assert!(t <= 1, "t selects between f and f.g");
    require_tree(f)?;
    require_tree(g)?;
    if f.n() != g.n() {
        return Err(Error::DimensionMismatch {
            left: f.n(),
            right: g.n(),
        });
    }
    let composed = if t == 1 { f.compose(g)? } else { f.clone() };
    Ok(EvaluationPoint {
        d: composed.label_differences(sigma)?,
        sigma_rank: sigma.lex_rank(),
        t,
    })
}

/// Determinant of the matrix with entries `d[i]^(2j)`, computed exactly via
/// the closed form `prod_{i<j} (d[j]^2 - d[i]^2)`; zero iff two entries share
/// an absolute value.
pub fn vander_det(d: &[i64]) -> BigValue {
    let squares: Vec<BigInt> = d.iter().map(|&x| BigInt::from(x) * x).collect();
    let mut det = BigInt::one();
    for j in 1..squares.len() {
        for i in 0..j {
            det *= &squares[j] - &squares[i];
            if det.is_zero() {
                return det;
            }
        }
    }
    det
}

/// `sum_{sigma in S_n} vander_det(d_sigma)^2` with
/// `d_sigma(i) = sigma f g^(t) sigma^{-1}(i) - i`. Nonnegative; zero iff no
/// relabeling of the evaluated function has all distinct absolute
/// differences.
pub fn f_sum(f: &EndoFunction, g: &EndoFunction, t: u8) -> Result<BigValue> {
    assert!(t <= 1, "t selects between f and f.g");
    require_tree(f)?;
    require_tree(g)?;
    if f.n() != g.n() {
        return Err(Error::DimensionMismatch {
            left: f.n(),
            right: g.n(),
        });
    }
    let n = f.n();
    if n > 6 {
        return Err(Error::TooLarge {
            n,
            max: 6,
            what: "certificate sum over all relabelings",
        });
    }
    let composed = if t == 1 { f.compose(g)? } else { f.clone() };
    let mut total = BigInt::zero();
    let mut d = vec![0i64; n];
    for_each_permutation(n, |image| {
        for i in 0..n {
            d[usize::from(image[i])] = i64::from(image[composed.apply(i)]) - i64::from(image[i]);
        }
        let det = vander_det(&d);
        total += &det * &det;
    });
    Ok(total)
}

fn serialize_decimal<S: Serializer>(
    v: &BigValue,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&v.to_string())
}

/// Two-sided evaluation of the center-sums identity
/// `F = |GrL| * |Aut| * prod_{i<j} (j^2 - i^2)^2`,
/// with the two sides computed along independent code paths.
#[derive(Debug, Clone, Serialize)]
pub struct CenterSumsReport {
    pub n: usize,
    pub f: EndoFunction,
    pub g: EndoFunction,
    pub t: u8,
    #[serde(rename = "F", serialize_with = "serialize_decimal")]
    pub f_value: BigValue,
    pub grl: u64,
    pub aut: u64,
    #[serde(serialize_with = "serialize_decimal")]
    pub rhs: BigValue,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// The squared Vandermonde product of the full graceful label set,
/// `prod_{0 <= i < j < n} (j^2 - i^2)^2`.
pub fn graceful_vander_product_sq(n: usize) -> BigValue {
    let base: Vec<i64> = (0..n as i64).collect();
    let det = vander_det(&base);
    &det * &det
}

/// Checks the center-sums identity for `(f, g, t)`; the left side sums exact
/// determinants over all relabelings, the right side counts gracefully
/// labeled conjugates and automorphisms by brute force.
pub fn center_sums_check(f: &EndoFunction, g: &EndoFunction, t: u8) -> Result<CenterSumsReport> {
    let f_value = f_sum(f, g, t)?;
    let composed = if t == 1 { f.compose(g)? } else { f.clone() };
    let grl = labeling::enumerate_grl(&composed)?.count() as u64;
    let aut = labeling::automorphisms(&composed)?.order() as u64;
    let rhs = BigInt::from(grl) * BigInt::from(aut) * graceful_vander_product_sq(f.n());
    Ok(CenterSumsReport {
        n: f.n(),
        f: f.clone(),
        g: g.clone(),
        t,
        matches: f_value == rhs,
        f_value,
        grl,
        aut,
        rhs,
    })
}

/// Exhaustive check that composition cannot increase the best distinct-label
/// count: `max_sigma |labels(f g)| <= max_sigma |labels(f)|`.
#[derive(Debug, Clone, Serialize)]
pub struct CompositionCheck {
    pub f_extrema: LabelExtrema,
    pub fg_extrema: LabelExtrema,
    pub holds: bool,
}

pub fn composition_lemma_check(f: &EndoFunction, g: &EndoFunction) -> Result<CompositionCheck> {
    require_tree(f)?;
    require_tree(g)?;
    let fg = f.compose(g)?;
    let f_extrema = labeling::distinct_label_extrema(f)?;
    let fg_extrema = labeling::distinct_label_extrema(&fg)?;
    Ok(CompositionCheck {
        f_extrema,
        fg_extrema,
        holds: fg_extrema.max <= f_extrema.max,
    })
}

/// The data of a graceful relabeling of `f`: the absolute-difference
/// permutation `gamma`, the sign of each difference, and the relabeling
/// itself. `f` is reconstructed pointwise from these.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GracefulExpansion {
    pub gamma: Permutation,
    /// `sign[j]` is the sign of `s f s^{-1}(j) - j`; zero exactly at the
    /// image of the fixed point.
    pub sign: Vec<i8>,
    pub sigma_gamma: Permutation,
}

impl GracefulExpansion {
    pub fn n(&self) -> usize {
        self.gamma.n()
    }
}

/// Extracts the expansion of a graceful relabeling: with
/// `h = sigma f sigma^{-1}`, the map `gamma(j) = |h(j) - j|` is a
/// permutation and `h(j) = j + sign(j) * gamma(j)`.
pub fn extract_expansion(f: &EndoFunction, sigma: &Permutation) -> Result<GracefulExpansion> {
    if !labeling::is_graceful(f, sigma)? {
        return Err(Error::NotGraceful);
    }
    let h = sigma.conjugate(f)?;
    let n = f.n();
    let mut gamma = vec![0u8; n];
    let mut sign = vec![0i8; n];
    for j in 0..n {
        let diff = h.apply(j) as i64 - j as i64;
        gamma[j] = diff.unsigned_abs() as u8;
        sign[j] = diff.signum() as i8;
    }
    Ok(GracefulExpansion {
        gamma: Permutation::from_image(gamma).expect("graceful labels are distinct"),
        sign,
        sigma_gamma: sigma.clone(),
    })
}

/// Verifies the reconstruction identity
/// `f(i) = s^{-1} phi^t( phi^t(s(i)) + (-1)^t sign(s(i)) gamma(s(i)) )`
/// pointwise for both `t = 0` and `t = 1`, where `phi = (n-1) - id`.
pub fn verify_expansion(expansion: &GracefulExpansion, f: &EndoFunction) -> bool {
    let n = expansion.n();
    if f.n() != n || expansion.sign.len() != n {
        return false;
    }
    let sigma = &expansion.sigma_gamma;
    let sigma_inv = sigma.inverse();
    let phi = |x: i64| (n as i64 - 1) - x;
    for t in 0..2u8 {
        for i in 0..n {
            let j = sigma.apply(i) as i64;
            let inner = if t == 0 { j } else { phi(j) };
            let step = i64::from(expansion.sign[sigma.apply(i)])
                * expansion.gamma.apply(sigma.apply(i)) as i64;
            let signed = if t == 0 { step } else { -step };
            let mut value = inner + signed;
            if t == 1 {
                if !(0..n as i64).contains(&value) {
                    return false;
                }
                value = phi(value);
            }
            if !(0..n as i64).contains(&value) {
                return false;
            }
            if sigma_inv.apply(value as usize) != f.apply(i) {
                return false;
            }
        }
    }
    true
}

/// Exact squared modulus `|a + b w + c w^2|^2` for the primitive cube root of
/// unity `w = (sqrt(-3) - 1)/2`, eliminated analytically:
/// `a^2 + b^2 + c^2 - ab - bc - ca`. Nonnegative; zero iff `a = b = c`.
pub fn eisenstein_norm_sq(a: i64, b: i64, c: i64) -> i64 {
    let (a, b, c) = (i128::from(a), i128::from(b), i128::from(c));
    let norm = a * a + b * b + c * c - a * b - b * c - c * a;
    i64::try_from(norm).expect("norm fits in 64 bits for supported inputs")
}

fn ell_bound(n: usize) -> usize {
    (n - 1).div_ceil(2)
}

/// Validates `1 <= ell < ceil((n-1)/2)`; the range is empty for `n <= 3`.
pub fn validate_ell(n: usize, ell: usize) -> Result<()> {
    let bound = ell_bound(n);
    if ell >= 1 && ell < bound {
        Ok(())
    } else {
        Err(Error::EllOutOfRange { ell, bound })
    }
}

/// The banded certificate for `f` at width `ell`: a sum over all relabelings
/// of three nonnegative factors, per relabeling with differences `d`:
///
/// * `prod_{s, n-ell <= m < n} (d(s)^2 - m^2)^2` — kills any relabeling that
///   realizes a label in the top band;
/// * `prod_{i<j, ell+1 <= k < n-ell} |d(j)^2 w^0 + d(i)^2 w^1 + k^2 w^2|^2` —
///   kills any pair of equal labels matching a middle-band value;
/// * `prod_{u<v<w} |d(w)^2 w^0 + d(v)^2 w^1 + d(u)^2 w^2|^2` — kills any
///   label value realized three times.
pub fn strong_certificate(f: &EndoFunction, ell: usize) -> Result<BigValue> {
    require_tree(f)?;
    let n = f.n();
    validate_ell(n, ell)?;
    let mut total = BigInt::zero();
    let mut d = vec![0i64; n];
    for_each_permutation(n, |image| {
        for i in 0..n {
            d[usize::from(image[i])] = i64::from(image[f.apply(i)]) - i64::from(image[i]);
        }
        total += strong_certificate_term(&d, n, ell);
    });
    Ok(total)
}

fn strong_certificate_term(d: &[i64], n: usize, ell: usize) -> BigValue {
    let squares: Vec<i64> = d.iter().map(|&x| x * x).collect();
    let mut term = BigInt::one();
    for &ds in &squares {
        for m in (n - ell) as i64..n as i64 {
            let factor = ds - m * m;
            if factor == 0 {
                return BigInt::zero();
            }
            term *= factor * factor;
        }
    }
    for j in 1..n {
        for i in 0..j {
            for k in (ell + 1) as i64..(n - ell) as i64 {
                let factor = eisenstein_norm_sq(squares[j], squares[i], k * k);
                if factor == 0 {
                    return BigInt::zero();
                }
                term *= factor;
            }
        }
    }
    for w in 2..n {
        for v in 1..w {
            for u in 0..v {
                let factor = eisenstein_norm_sq(squares[w], squares[v], squares[u]);
                if factor == 0 {
                    return BigInt::zero();
                }
                term *= factor;
            }
        }
    }
    term
}

/// Implication check for the banded certificates: if the certificate of `f`
/// vanishes then the certificate of `f . g` must vanish too.
#[derive(Debug, Clone, Serialize)]
pub struct StrongCompositionCheck {
    #[serde(serialize_with = "serialize_decimal")]
    pub certificate_f: BigValue,
    #[serde(serialize_with = "serialize_decimal")]
    pub certificate_fg: BigValue,
    pub premise_zero: bool,
    pub conclusion_zero: bool,
    pub holds: bool,
}

pub fn strong_composition_check(
    f: &EndoFunction,
    g: &EndoFunction,
    ell: usize,
) -> Result<StrongCompositionCheck> {
    require_tree(f)?;
    require_tree(g)?;
    let n = f.n();
    if n > 6 {
        return Err(Error::TooLarge {
            n,
            max: 6,
            what: "strong composition check",
        });
    }
    let certificate_f = strong_certificate(f, ell)?;
    let certificate_fg = strong_certificate(&f.compose(g)?, ell)?;
    let premise_zero = certificate_f.is_zero();
    let conclusion_zero = certificate_fg.is_zero();
    Ok(StrongCompositionCheck {
        certificate_f,
        certificate_fg,
        premise_zero,
        conclusion_zero,
        holds: !premise_zero || conclusion_zero,
    })
}
