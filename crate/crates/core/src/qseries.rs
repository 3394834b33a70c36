//! Truncated q-series with exact integer coefficients and the multiple-sum
//! generating functions built from them.

use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{CmppError, Result};

/// Polynomial in `q` truncated after degree `order` (coefficients of degree
/// `0..=order` are stored, everything above is discarded).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
    order: usize,
}

impl QPolynomial {
    pub fn zero(order: usize) -> Self {
        QPolynomial {
            coeffs: vec![BigInt::zero(); order + 1],
            order,
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, BigInt::one(), order)
    }

    /// `c q^degree`, or zero if the degree lies beyond the truncation.
    pub fn monomial(degree: usize, c: BigInt, order: usize) -> Self {
        let mut p = Self::zero(order);
        if degree <= order {
            p.coeffs[degree] = c;
        }
        p
    }

    /// Builds from low-to-high coefficients, dropping anything above `order`.
    pub fn from_coeffs<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero(order);
        for (d, c) in coeffs.into_iter().enumerate().take(order + 1) {
            p.coeffs[d] = c.into();
        }
        p
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, degree: usize) -> &BigInt {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        self.coeffs
            .get(degree)
            .unwrap_or_else(|| ZERO.get_or_init(BigInt::zero))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Highest degree with a non-zero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Re-truncates to a new order, padding with zeros when growing.
    pub fn retruncate(&self, order: usize) -> Self {
        let mut p = Self::zero(order);
        for (d, c) in self.coeffs.iter().enumerate().take(order + 1) {
            p.coeffs[d] = c.clone();
        }
        p
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(CmppError::Usage(format!(
                "truncation orders differ: {} vs {}",
                self.order, other.order
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(QPolynomial {
            coeffs,
            order: self.order,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(QPolynomial {
            coeffs,
            order: self.order,
        })
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_order(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        poly_mul_truncated(self, other)
    }

    /// Multiplies by `q^shift` in place.
    pub fn shift_up(&mut self, shift: usize) {
        if shift == 0 {
            return;
        }
        let n = self.coeffs.len();
        for d in (0..n).rev() {
            self.coeffs[d] = if d >= shift {
                std::mem::take(&mut self.coeffs[d - shift])
            } else {
                BigInt::zero()
            };
        }
    }

    /// Multiplies in place by `1 / (1 - q^step)`.
    pub fn divide_by_one_minus_q_pow(&mut self, step: usize) {
        assert!(step > 0, "step must be positive");
        for d in step..self.coeffs.len() {
            let prev = self.coeffs[d - step].clone();
            self.coeffs[d] += prev;
        }
    }

    /// Multiplies in place by `1 - q^step`.
    pub fn mul_one_minus_q_pow(&mut self, step: usize) {
        for d in (step..self.coeffs.len()).rev() {
            let prev = self.coeffs[d - step].clone();
            self.coeffs[d] -= prev;
        }
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (d, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (_, true) => write!(f, "q^{d}")?,
                (_, false) => write!(f, "{abs}q^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

pub fn poly_mul_truncated(a: &QPolynomial, b: &QPolynomial) -> Result<QPolynomial> {
    a.check_order(b)?;
    let order = a.order;
    let mut out = QPolynomial::zero(order);
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate().take(order + 1 - i) {
            if !y.is_zero() {
                out.coeffs[i + j] += x * y;
            }
        }
    }
    Ok(out)
}

/// Inverse of a series with constant term 1, up to the truncation order.
pub fn poly_inverse_unit(a: &QPolynomial) -> Result<QPolynomial> {
    if !a.coeffs[0].is_one() {
        return Err(CmppError::Domain(format!(
            "constant term must be 1, got {}",
            a.coeffs[0]
        )));
    }
    let order = a.order;
    let mut inv = QPolynomial::zero(order);
    inv.coeffs[0] = BigInt::one();
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for k in 1..=n {
            if !a.coeffs[k].is_zero() {
                acc += &a.coeffs[k] * &inv.coeffs[n - k];
            }
        }
        inv.coeffs[n] = -acc;
    }
    Ok(inv)
}

/// `(q^b; q^b)_count = (1 - q^b)(1 - q^{2b})...(1 - q^{count*b})`.
pub fn pochhammer(base_exponent: usize, count: usize, order: usize) -> QPolynomial {
    let mut p = QPolynomial::one(order);
    for j in 1..=count {
        p.mul_one_minus_q_pow(base_exponent * j);
    }
    p
}

fn full_pochhammer(count: usize) -> Vec<BigInt> {
    let deg = count * (count + 1) / 2;
    let mut p = vec![BigInt::zero(); deg + 1];
    p[0] = BigInt::one();
    let mut cur = 0;
    for j in 1..=count {
        cur += j;
        for d in (j..=cur).rev() {
            let prev = p[d - j].clone();
            p[d] -= prev;
        }
    }
    p
}

fn full_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Gaussian polynomial `[a over b]`, zero when `b < 0` or `b > a`.
///
/// Computed as an exact quotient of untruncated products; a non-zero remainder
/// is reported as an invariant violation.
pub fn gaussian_binomial(a: i64, b: i64, order: usize) -> Result<QPolynomial> {
    if b < 0 || a < 0 || b > a {
        return Ok(QPolynomial::zero(order));
    }
    let (a, b) = (a as usize, b as usize);
    let num = full_pochhammer(a);
    let den = full_mul(&full_pochhammer(b), &full_pochhammer(a - b));
    let lead = den.last().cloned().unwrap_or_else(BigInt::one);
    let qlen = num.len() - den.len() + 1;
    let mut rem = num;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let top = &rem[k + den.len() - 1];
        if (top % &lead) != BigInt::zero() {
            return Err(CmppError::Invariant(format!(
                "non-exact division computing [{a} over {b}]"
            )));
        }
        let c = top / &lead;
        for (y, e) in den.iter().enumerate() {
            rem[k + y] -= &c * e;
        }
        quot[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(CmppError::Invariant(format!(
            "non-zero remainder computing [{a} over {b}]"
        )));
    }
    Ok(QPolynomial::from_coeffs(quot, order))
}

/// Height profile `(n_1, ..., n_l)` with tail sums `N_s = n_s + ... + n_l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HeightProfile {
    n: Vec<usize>,
}

impl HeightProfile {
    pub fn new(n: Vec<usize>) -> Self {
        HeightProfile { n }
    }

    pub fn zero(ell: usize) -> Self {
        HeightProfile { n: vec![0; ell] }
    }

    pub fn ell(&self) -> usize {
        self.n.len()
    }

    pub fn n_vec(&self) -> &[usize] {
        &self.n
    }

    /// `n_s` with `s` counted from 1.
    pub fn n(&self, s: usize) -> usize {
        self.n[s - 1]
    }

    pub fn big_n(&self) -> Vec<usize> {
        let mut out = vec![0; self.n.len()];
        let mut acc = 0;
        for s in (0..self.n.len()).rev() {
            acc += self.n[s];
            out[s] = acc;
        }
        out
    }

    pub fn total_parts(&self) -> usize {
        self.n.iter().sum()
    }

    /// `sum_s N_s^2`.
    pub fn quadratic(&self) -> usize {
        self.big_n().iter().map(|x| x * x).sum()
    }

    /// Every profile of length `ell` whose part count is at most `max_total`.
    pub fn all_up_to(ell: usize, max_total: usize) -> Vec<HeightProfile> {
        fn rec(ell: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<HeightProfile>) {
            if cur.len() == ell {
                out.push(HeightProfile::new(cur.clone()));
                return;
            }
            for v in 0..=left {
                cur.push(v);
                rec(ell, left - v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(ell, max_total, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for HeightProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.n.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Linear-form families of the diagram variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinearFamily {
    Main,
    Star,
    StarStar,
}

/// Every generating-function family built here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesFamily {
    Main,
    Star,
    StarStar,
    Ag,
    Bressoud,
}

impl SeriesFamily {
    pub fn name(self) -> &'static str {
        match self {
            SeriesFamily::Main => "main",
            SeriesFamily::Star => "star",
            SeriesFamily::StarStar => "starstar",
            SeriesFamily::Ag => "ag",
            SeriesFamily::Bressoud => "bressoud",
        }
    }

    fn linear_family(self) -> Option<LinearFamily> {
        match self {
            SeriesFamily::Main => Some(LinearFamily::Main),
            SeriesFamily::Star => Some(LinearFamily::Star),
            SeriesFamily::StarStar => Some(LinearFamily::StarStar),
            _ => None,
        }
    }

    fn doubled_last(self) -> bool {
        matches!(
            self,
            SeriesFamily::Star | SeriesFamily::StarStar | SeriesFamily::Bressoud
        )
    }
}

fn check_index(ell: usize, i: usize) -> Result<()> {
    if ell == 0 {
        return Err(CmppError::Domain("ell must be positive".into()));
    }
    if i > ell {
        return Err(CmppError::OutOfRange(format!("i = {i} not in 0..={ell}")));
    }
    Ok(())
}

/// `p(i) = 2i + 1` when `2i <= l`, else `2(l - i) + 2`.
pub fn position_index(ell: usize, i: usize) -> Result<usize> {
    check_index(ell, i)?;
    Ok(if 2 * i <= ell {
        2 * i + 1
    } else {
        2 * (ell - i) + 2
    })
}

/// `N_from + ... + N_l` with 1-based `from`; empty when `from > l`.
fn tail_sum(big_n: &[usize], from: usize) -> usize {
    big_n.iter().skip(from.saturating_sub(1)).sum()
}

/// Linear part of the base-partition weight.
///
/// Main: `N_p + ... + N_l` with `p = p(i)`. Star shifts the start to `p - 1`
/// on the high family (`2i > l`); star-star adds `N_1` at `i = 0` and shifts
/// the start to `p - 1` for the remaining low-family indices.
pub fn linear_form(family: LinearFamily, ell: usize, i: usize, big_n: &[usize]) -> Result<usize> {
    let p = position_index(ell, i)?;
    if big_n.len() != ell {
        return Err(CmppError::Usage(format!(
            "expected {ell} tail sums, got {}",
            big_n.len()
        )));
    }
    let low = 2 * i <= ell;
    Ok(match family {
        LinearFamily::Main => tail_sum(big_n, p),
        LinearFamily::Star if !low => tail_sum(big_n, p - 1),
        LinearFamily::Star => tail_sum(big_n, p),
        LinearFamily::StarStar if low && i == 0 => tail_sum(big_n, p) + big_n[0],
        LinearFamily::StarStar if low => tail_sum(big_n, p - 1),
        LinearFamily::StarStar => tail_sum(big_n, p),
    })
}

/// Linear form `N_a + ... + N_l` of the frequency-condition families.
pub fn ag_linear_form(ell: usize, a: usize, big_n: &[usize]) -> Result<usize> {
    if a == 0 || a > ell + 1 {
        return Err(CmppError::OutOfRange(format!("a = {a} not in 1..={}", ell + 1)));
    }
    Ok(tail_sum(big_n, a))
}

/// Truncated series in `z` and `q`; `z_coefficients[j]` is the coefficient of `z^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    z_coefficients: Vec<QPolynomial>,
    q_order: usize,
}

/// One non-zero coefficient, serialized with the value as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesEntry {
    pub z: usize,
    pub q: usize,
    pub c: String,
}

impl BivariateSeries {
    pub fn zero(q_order: usize, z_order: usize) -> Self {
        BivariateSeries {
            z_coefficients: vec![QPolynomial::zero(q_order); z_order + 1],
            q_order,
        }
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn z_order(&self) -> usize {
        self.z_coefficients.len() - 1
    }

    pub fn z_coefficient(&self, j: usize) -> Option<&QPolynomial> {
        self.z_coefficients.get(j)
    }

    /// Coefficient of `z^j q^n`; zero outside the truncation.
    pub fn coeff(&self, j: usize, n: usize) -> BigInt {
        self.z_coefficients
            .get(j)
            .map(|p| p.coeff(n).clone())
            .unwrap_or_default()
    }

    /// Adds `poly * z^j`; ignored when `j` exceeds the z truncation.
    pub fn add_term(&mut self, j: usize, poly: &QPolynomial) -> Result<()> {
        match self.z_coefficients.get_mut(j) {
            Some(slot) => slot.add_assign(poly),
            None => Ok(()),
        }
    }

    /// Specialization `z = 1`, as a polynomial in `q`.
    pub fn at_z_one(&self) -> QPolynomial {
        let mut acc = QPolynomial::zero(self.q_order);
        for p in &self.z_coefficients {
            acc.add_assign(p).expect("orders agree by construction");
        }
        acc
    }

    pub fn is_nonnegative(&self) -> bool {
        self.z_coefficients
            .iter()
            .all(|p| p.coeffs().iter().all(|c| !c.is_negative()))
    }

    /// Non-zero coefficients ordered by `(z, q)`.
    pub fn entries(&self) -> Vec<SeriesEntry> {
        let mut out = Vec::new();
        for (j, p) in self.z_coefficients.iter().enumerate() {
            for (n, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push(SeriesEntry {
                        z: j,
                        q: n,
                        c: c.to_string(),
                    });
                }
            }
        }
        out
    }

    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["z_degree", "q_degree", "coefficient"])?;
        for e in self.entries() {
            w.write_record([e.z.to_string(), e.q.to_string(), e.c])?;
        }
        w.flush()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.entries()).expect("entries serialize")
    }
}

/// Exponent and z-power of one summand; the denominator shape is fixed per call.
struct Summand {
    exponent: usize,
    z_power: usize,
}

/// Sums `q^exponent z^power / denominators` over all index tuples, pruning on
/// `sum N_s^2 > q_order` and on the z-power exceeding `z_order`.
fn multi_sum<F>(
    ell: usize,
    q_order: usize,
    z_order: usize,
    doubled_last: bool,
    summand: F,
) -> Result<BivariateSeries>
where
    F: Fn(&HeightProfile) -> Option<Summand>,
{
    let mut series = BivariateSeries::zero(q_order, z_order);
    let mut n = vec![0usize; ell];
    // s runs from l down to 1 so that N_s is known when n_s is chosen.
    #[allow(clippy::too_many_arguments)]
    fn rec<F: Fn(&HeightProfile) -> Option<Summand>>(
        s: usize,
        tail: usize,
        quad: usize,
        n: &mut Vec<usize>,
        q_order: usize,
        z_order: usize,
        doubled_last: bool,
        summand: &F,
        series: &mut BivariateSeries,
    ) -> Result<()> {
        if s == 0 {
            let profile = HeightProfile::new(n.clone());
            let Some(t) = summand(&profile) else {
                return Ok(());
            };
            if t.exponent > q_order || t.z_power > z_order {
                return Ok(());
            }
            let mut poly = QPolynomial::monomial(t.exponent, BigInt::one(), q_order);
            let ell = n.len();
            for (idx, &ns) in n.iter().enumerate() {
                let base = if doubled_last && idx + 1 == ell { 2 } else { 1 };
                for j in 1..=ns {
                    poly.divide_by_one_minus_q_pow(base * j);
                }
            }
            return series.add_term(t.z_power, &poly);
        }
        let mut v = 0;
        loop {
            let big = tail + v;
            let q2 = quad + big * big;
            if q2 > q_order || big > z_order {
                break;
            }
            n[s - 1] = v;
            rec(
                s - 1,
                big,
                q2,
                n,
                q_order,
                z_order,
                doubled_last,
                summand,
                series,
            )?;
            v += 1;
        }
        n[s - 1] = 0;
        Ok(())
    }
    rec(
        ell,
        0,
        0,
        &mut n,
        q_order,
        z_order,
        doubled_last,
        &summand,
        &mut series,
    )?;
    Ok(series)
}

/// Series of one family, truncated at `q^q_order` and `z^z_order`.
///
/// `index` is `i` for the diagram families and `a` for `Ag`/`Bressoud`.
pub fn series_for_family(
    family: SeriesFamily,
    ell: usize,
    index: usize,
    q_order: usize,
    z_order: usize,
) -> Result<BivariateSeries> {
    series_with_offset(family, ell, index, q_order, z_order, 0)
}

/// As [`series_for_family`] with `offset` added to the linear form of every
/// non-empty summand. A non-zero offset gives a deliberately wrong series.
pub fn series_with_offset(
    family: SeriesFamily,
    ell: usize,
    index: usize,
    q_order: usize,
    z_order: usize,
    offset: i64,
) -> Result<BivariateSeries> {
    match family.linear_family() {
        Some(_) => check_index(ell, index)?,
        None => {
            if ell == 0 {
                return Err(CmppError::Domain("ell must be positive".into()));
            }
            ag_linear_form(ell, index, &vec![0; ell])?;
        }
    }
    multi_sum(ell, q_order, z_order, family.doubled_last(), |profile| {
        let big_n = profile.big_n();
        let lin = match family.linear_family() {
            Some(lf) => linear_form(lf, ell, index, &big_n).ok()?,
            None => ag_linear_form(ell, index, &big_n).ok()?,
        };
        let mut exponent = (profile.quadratic() + lin) as i64;
        if profile.total_parts() > 0 {
            exponent += offset;
        }
        let z_power = match family.linear_family() {
            Some(_) => big_n.first().copied().unwrap_or(0),
            None => big_n.iter().sum(),
        };
        (exponent >= 0).then_some(Summand {
            exponent: exponent as usize,
            z_power,
        })
    })
}

/// Bounded polynomial `P_0(z; M)`: the `i = 0` main summand with each
/// `1/(q;q)_{n_s}` replaced by the Gaussian factor
/// `[M - 2(n_1 + 2n_2 + ... + s n_s) - 2(n_{s+1} + ... + n_l) over n_s]`.
pub fn bounded_p0_series(ell: usize, bound: usize, q_order: usize, z_order: usize) -> Result<BivariateSeries> {
    if ell == 0 {
        return Err(CmppError::Domain("ell must be positive".into()));
    }
    let mut series = BivariateSeries::zero(q_order, z_order);
    let max_parts = z_order.min((q_order as f64).sqrt() as usize + 1);
    for profile in HeightProfile::all_up_to(ell, max_parts) {
        let big_n = profile.big_n();
        let z_power = big_n[0];
        let exponent = profile.quadratic() + big_n.iter().sum::<usize>();
        if exponent > q_order || z_power > z_order {
            continue;
        }
        let n = profile.n_vec();
        let mut poly = QPolynomial::monomial(exponent, BigInt::one(), q_order);
        for s in 1..=ell {
            let weighted: usize = (1..=s).map(|t| 2 * t * n[t - 1]).sum();
            let rest: usize = (s + 1..=ell).map(|t| 2 * n[t - 1]).sum();
            let top = bound as i64 - weighted as i64 - rest as i64;
            poly = poly.mul(&gaussian_binomial(top, n[s - 1] as i64, q_order)?)?;
        }
        series.add_term(z_power, &poly)?;
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64], order: usize) -> QPolynomial {
        QPolynomial::from_coeffs(c.iter().copied(), order)
    }

    #[test]
    fn difference_of_squares() {
        let a = poly(&[1, -1], 5);
        let b = poly(&[1, 1], 5);
        assert_eq!(poly_mul_truncated(&a, &b).unwrap(), poly(&[1, 0, -1], 5));
        assert_eq!(poly_mul_truncated(&b, &b).unwrap(), poly(&[1, 2, 1], 5));
        assert_eq!(poly_mul_truncated(&a, &QPolynomial::one(5)).unwrap(), a);
    }

    #[test]
    fn mismatched_orders_rejected() {
        let err = poly_mul_truncated(&QPolynomial::one(3), &QPolynomial::one(4));
        assert!(matches!(err, Err(CmppError::Usage(_))));
    }

    #[test]
    fn inverse_examples() {
        let geo = poly_inverse_unit(&poly(&[1, -1], 6)).unwrap();
        assert_eq!(geo, poly(&[1; 7], 6));
        assert_eq!(poly_inverse_unit(&QPolynomial::one(4)).unwrap(), QPolynomial::one(4));
        let inv = poly_inverse_unit(&pochhammer(1, 2, 8)).unwrap();
        assert_eq!(inv.coeff(4), &BigInt::from(3));
        assert!(matches!(
            poly_inverse_unit(&poly(&[2, 1], 3)),
            Err(CmppError::Domain(_))
        ));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(1, 2, 6), poly(&[1, -1, -1, 1], 6));
        assert_eq!(pochhammer(1, 0, 6), QPolynomial::one(6));
        assert_eq!(pochhammer(2, 1, 6), poly(&[1, 0, -1], 6));
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial(2, 1, 10).unwrap(), poly(&[1, 1], 10));
        assert_eq!(gaussian_binomial(4, 2, 10).unwrap(), poly(&[1, 1, 2, 1, 1], 10));
        assert!(gaussian_binomial(0, 1, 10).unwrap().is_zero());
        assert!(gaussian_binomial(3, -1, 10).unwrap().is_zero());
        assert_eq!(gaussian_binomial(5, 0, 10).unwrap(), QPolynomial::one(10));
    }

    #[test]
    fn position_index_examples() {
        assert_eq!(position_index(3, 2).unwrap(), 4);
        assert_eq!(position_index(3, 0).unwrap(), 1);
        assert_eq!(position_index(1, 1).unwrap(), 2);
        assert!(position_index(2, 3).is_err());
        for ell in 1..8 {
            let mut ps: Vec<_> = (0..=ell).map(|i| position_index(ell, i).unwrap()).collect();
            ps.sort();
            assert_eq!(ps, (1..=ell + 1).collect::<Vec<_>>());
        }
    }

    #[test]
    fn linear_form_examples() {
        let n = [6, 4, 2];
        assert_eq!(linear_form(LinearFamily::Main, 3, 2, &n).unwrap(), 0);
        assert_eq!(linear_form(LinearFamily::Main, 3, 0, &n).unwrap(), 12);
        assert_eq!(linear_form(LinearFamily::StarStar, 3, 0, &n).unwrap(), 18);
        assert_eq!(linear_form(LinearFamily::Star, 3, 3, &n).unwrap(), 12);
        assert_eq!(linear_form(LinearFamily::Star, 3, 2, &n).unwrap(), 2);
        assert_eq!(linear_form(LinearFamily::StarStar, 3, 1, &n).unwrap(), 6);
    }

    #[test]
    fn main_series_examples() {
        let s = series_for_family(SeriesFamily::Main, 1, 1, 6, 3).unwrap();
        assert_eq!(s.coeff(1, 1), BigInt::from(1));
        assert_eq!(s.coeff(2, 4), BigInt::from(1));
        assert_eq!(s.coeff(0, 0), BigInt::from(1));
        let big = series_for_family(SeriesFamily::Main, 3, 2, 60, 8).unwrap();
        assert!(big.coeff(6, 56) >= BigInt::from(1));
        for fam in [
            SeriesFamily::Main,
            SeriesFamily::Star,
            SeriesFamily::StarStar,
            SeriesFamily::Ag,
            SeriesFamily::Bressoud,
        ] {
            let s = series_for_family(fam, 2, 1, 12, 4).unwrap();
            assert_eq!(s.coeff(0, 0), BigInt::from(1));
            assert!(s.is_nonnegative());
        }
    }

    #[test]
    fn rogers_ramanujan_first_terms() {
        // prod 1/((1-q^{5n+1})(1-q^{5n+4})) = 1 + q + q^2 + q^3 + 2q^4 + 2q^5 + 3q^6 + ...
        let s = series_for_family(SeriesFamily::Main, 1, 1, 10, 10).unwrap();
        let want = [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6];
        let got = s.at_z_one();
        for (n, w) in want.iter().enumerate() {
            assert_eq!(got.coeff(n), &BigInt::from(*w), "n = {n}");
        }
    }

    #[test]
    fn bounded_examples() {
        let s = bounded_p0_series(1, 5, 10, 2).unwrap();
        let z1 = s.z_coefficient(1).unwrap();
        assert_eq!(z1, &poly(&[0, 0, 1, 1, 1], 10));
        for ell in 1..=3 {
            let s = bounded_p0_series(ell, 0, 10, 4).unwrap();
            assert_eq!(s.entries().len(), 1);
            assert_eq!(s.coeff(0, 0), BigInt::from(1));
        }
        let big = bounded_p0_series(1, 12, 10, 3).unwrap();
        let unbounded = series_for_family(SeriesFamily::Main, 1, 0, 10, 3).unwrap();
        assert_eq!(big, unbounded);
    }

    #[test]
    fn serialization() {
        let s = series_for_family(SeriesFamily::Main, 1, 1, 4, 2).unwrap();
        let json = s.to_json();
        assert_eq!(json[0], serde_json::json!({"z": 0, "q": 0, "c": "1"}));
        let mut buf = Vec::new();
        s.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("z_degree,q_degree,coefficient\n0,0,1\n1,1,1\n"));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[1, -2, 0, 1], 3).to_string(), "1 - 2q + q^3 + O(q^4)");
    }
}
