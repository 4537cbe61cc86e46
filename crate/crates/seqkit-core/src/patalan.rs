//! Catalan, Patalan, and super Patalan constructions.
//!
//! The Patalan numbers of order p have generating function A(x) where
//! x A(x) is the reversion of f(x) = (1 - (1-px)^p) / p^2. Three
//! convolutional recurrences compute them: the shifted recurrence on (a_n)
//! directly, the zero-constant-term recurrence on c_n = a_(n-1), and the
//! p-th-power recurrence on d_n = c_n - [n=0]/p, which reverts the binomial
//! g(x) = (1 - (-px)^p) / p^2. The super Patalan numbers Q(p, q) appear as
//! the lower left quadrant of the recursive matrix
//! D(1/(1-p^2 x)^(q/p), -x/(1-p^2 x)).

use num::traits::{One, Zero};

use crate::convrec::{
    shifted_recurrence_terms, solve_reversion_recurrence, solve_reversion_recurrence_zero,
    PolynomialReversionProblem,
};
use crate::error::{Error, Result};
use crate::rational::{binomial_int, rat, ratio, Rat};
use crate::riordan::{dual_riordan, recursive_matrix_window, riordan_build, IndexedMatrix};
use crate::series::{binomial_series, x_over_one_minus, PowerSeries};

/// The forward polynomials of the order-p Patalan construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatalanForward {
    /// f(x) = (1 - (1-px)^p) / p^2, the polynomial whose reversion is x A(x).
    pub f_poly: Vec<Rat>,
    /// g(x) = (1 - (-px)^p) / p^2 = 1/p^2 - (-1)^p p^(p-2) x^p.
    pub g_poly: Vec<Rat>,
}

fn check_p(p: u32) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("p must be >= 2, got {p}")));
    }
    Ok(())
}

/// Expands both forward polynomials and cross-checks the two expressions
/// for f against each other.
pub fn patalan_forward(p: u32) -> Result<PatalanForward> {
    check_p(p)?;
    let pr = rat(p as i64);
    let p_sq = &pr * &pr;
    // direct expansion of (1 - (1-px)^p) / p^2
    let mut f_poly = vec![Rat::zero(); p as usize + 1];
    for k in 0..=p as usize {
        // [x^k] (1-px)^p = binom(p,k) (-p)^k
        let term = binomial_int(p as u64, k as u64) * (-&pr).pow(k as i32);
        f_poly[k] = -term / &p_sq;
    }
    f_poly[0] = Rat::zero(); // the constant terms cancel exactly
    // closed form f_k = -binom(p,k) p^(k-2) (-1)^k
    for (k, c) in f_poly.iter().enumerate().skip(1) {
        let closed = -binomial_int(p as u64, k as u64)
            * pr.pow(k as i32 - 2)
            * rat(-1).pow(k as i32);
        assert_eq!(c, &closed, "forward polynomial mismatch at k={k}");
    }
    let mut g_poly = vec![Rat::zero(); p as usize + 1];
    g_poly[0] = p_sq.recip();
    g_poly[p as usize] = -((-&pr).pow(p as i32)) / &p_sq;
    Ok(PatalanForward { f_poly, g_poly })
}

/// Patalan numbers (a_n) of order p by the shifted recurrence
/// a_n = sum_{k>1} (-1)^k binom(p,k) p^(k-2) conv(a, n-k+1, k), a_0 = 1.
pub fn patalan_sequence(p: u32, n_max: usize) -> Result<Vec<Rat>> {
    let fwd = patalan_forward(p)?;
    let mut a = vec![Rat::one()];
    for n in 1..=n_max {
        let next = shifted_recurrence_terms(&a, &fwd.f_poly, n);
        a.push(next);
    }
    Ok(a)
}

/// The shifted sequence (c_n) with c_0 = 0, c_1 = 1, by the
/// zero-constant-term recurrence on the reversion of f.
pub fn patalan_c_recurrence(p: u32, n_max: usize) -> Result<Vec<Rat>> {
    let fwd = patalan_forward(p)?;
    solve_reversion_recurrence_zero(&fwd.f_poly, n_max)
}

/// The sequence (d_n) with d_0 = -1/p, by the p-th-power recurrence
/// d_n = (-1)^p p^(p-2) trunc(d, n, p): the reversion of g seeded at the
/// root -1/p.
pub fn patalan_pth_power_recurrence(p: u32, n_max: usize) -> Result<Vec<Rat>> {
    let fwd = patalan_forward(p)?;
    let prob = PolynomialReversionProblem {
        poly: fwd.g_poly,
        root: ratio(-1, p as i64),
        order: n_max,
    };
    solve_reversion_recurrence(&prob)
}

fn check_pq(p: u32, q: u32) -> Result<()> {
    check_p(p)?;
    if q == 0 || q >= p {
        return Err(Error::InvalidParameter(format!(
            "q must satisfy 0 < q < p, got q={q}, p={p}"
        )));
    }
    Ok(())
}

/// The (g, f) pair of the super Patalan recursive matrix:
/// g = 1/(1 - p^2 x)^(q/p), f = -x/(1 - p^2 x).
pub fn super_patalan_pair(p: u32, q: u32, order: usize) -> Result<(PowerSeries, PowerSeries)> {
    check_pq(p, q)?;
    let p_sq = rat((p * p) as i64);
    let g = binomial_series(&ratio(-(q as i64), p as i64), &(-&p_sq), order);
    let f = x_over_one_minus(&rat(-1), &p_sq, order);
    Ok((g, f))
}

/// Super Patalan matrix Q(p, q): the lower left quadrant of the recursive
/// matrix, Q(i, j) = D(i, -j) for 0 <= i, j <= n_max.
pub fn super_patalan_matrix(p: u32, q: u32, n_max: usize) -> Result<IndexedMatrix> {
    let (g, f) = super_patalan_pair(p, q, 2 * n_max + 1)?;
    let w = recursive_matrix_window(&g, &f, n_max)?;
    let mut entries = vec![vec![Rat::zero(); n_max + 1]; n_max + 1];
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = w.entry(i as i64, -(j as i64)).clone();
        }
    }
    Ok(IndexedMatrix {
        row_offset: 0,
        col_offset: 0,
        entries,
    })
}

/// Checks the duality theorem for the super Patalan pair: the dual of
/// R(1/(1-p^2 x)^(q/p), f) must equal R(1/(1-p^2 x)^((p-q)/p), f).
pub fn super_patalan_dual_check(p: u32, q: u32, n_max: usize) -> Result<bool> {
    let (g, f) = super_patalan_pair(p, q, n_max + 1)?;
    let h = binomial_series(
        &ratio(-((p - q) as i64), p as i64),
        &rat(-((p * p) as i64)),
        n_max,
    );
    let dual = dual_riordan(&g, &f)?;
    let expect = riordan_build(&h, &f.truncated(n_max), n_max)?;
    Ok(dual.entries() == expect.entries())
}

/// Closed-form super Catalan numbers S(m, n) = (2m)! (2n)! / (m! n! (m+n)!),
/// the (p, q) = (2, 1) oracle.
pub fn super_catalan_closed_form(m: u64, n: u64) -> Rat {
    fn fact(n: u64) -> Rat {
        let mut acc = Rat::one();
        for i in 2..=n {
            acc *= rat(i as i64);
        }
        acc
    }
    fact(2 * m) * fact(2 * n) / (fact(m) * fact(n) * fact(m + n))
}
