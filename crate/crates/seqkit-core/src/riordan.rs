//! Riordan arrays, the Riordan group law, A-sequences, doubly infinite
//! recursive matrices, the anti-transpose, and dual Riordan arrays.
//!
//! A Riordan array R(g, f) has entries [x^n] (g f^k) for n, k >= 0 with
//! g(0) != 0, f(0) = 0, f'(0) != 0. A recursive matrix D(g, f) extends the
//! entries to all integers n, k using Laurent powers f^k for k < 0.

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::{laurent_int_pow, LaurentSeries};
use crate::rational::Rat;
use crate::series::PowerSeries;

fn check_riordan_pair(g: &PowerSeries, f: &PowerSeries) -> Result<()> {
    if g.coeff(0).is_zero()
        || f.order() < 1
        || !f.coeff(0).is_zero()
        || f.coeff(1).is_zero()
    {
        return Err(Error::RiordanDomain);
    }
    Ok(())
}

/// Lower-triangular Riordan array realized to a finite order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanArray {
    g: PowerSeries,
    f: PowerSeries,
    entries: Vec<Vec<Rat>>,
}

impl RiordanArray {
    pub fn g(&self) -> &PowerSeries {
        &self.g
    }

    pub fn f(&self) -> &PowerSeries {
        &self.f
    }

    /// Largest realized row/column index.
    pub fn order(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entry(&self, n: usize, k: usize) -> &Rat {
        &self.entries[n][k]
    }

    pub fn entries(&self) -> &[Vec<Rat>] {
        &self.entries
    }

    /// Column k as a coefficient vector (rows 0..=order).
    pub fn column(&self, k: usize) -> Vec<Rat> {
        self.entries.iter().map(|row| row[k].clone()).collect()
    }

    /// Riordan group law: R(g1, f1) R(g2, f2) = R(g1 (g2 o f1), f2 o f1).
    /// The entry table of the product equals the matrix product of the
    /// entry tables.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let g = self.g.mul(&other.g.compose(&self.f)?)?;
        let f = other.f.compose(&self.f)?;
        riordan_build(&g, &f, self.order())
    }
}

/// Realizes R(g, f) to order n_max. g and f must carry at least that order.
pub fn riordan_build(g: &PowerSeries, f: &PowerSeries, n_max: usize) -> Result<RiordanArray> {
    check_riordan_pair(g, f)?;
    if g.order() < n_max || f.order() < n_max {
        return Err(Error::InsufficientOrder {
            have: g.order().min(f.order()),
            need: n_max,
        });
    }
    let g = g.truncated(n_max);
    let f = f.truncated(n_max);
    let mut entries = vec![vec![Rat::zero(); n_max + 1]; n_max + 1];
    let mut col = g.clone();
    for k in 0..=n_max {
        for n in 0..=n_max {
            entries[n][k] = col.coeff(n).clone();
        }
        if k < n_max {
            col = col.mul(&f)?;
        }
    }
    Ok(RiordanArray { g, f, entries })
}

/// A-sequence of a Riordan array: the unique (a_j) with
/// d_{n+1,k+1} = sum_j a_j d_{n,k+j}, computed as the coefficients of
/// x / fbar(x) where fbar is the reversion of f.
pub fn a_sequence(r: &RiordanArray, m: usize) -> Result<Vec<Rat>> {
    let f = r.f().truncated(m + 1);
    let fbar = f.revert()?;
    // x / fbar = 1 / (fbar / x); fbar has valuation 1 so fbar/x is a unit.
    let unit = fbar.shift_down()?;
    let a = unit.inverse()?;
    Ok(a.coeffs()[..=m].to_vec())
}

/// Checks the A-sequence recurrence d_{n+1,k+1} = sum_j a_j d_{n,k+j} on
/// every realized entry, truncating the sum where triangularity forces the
/// remaining entries to vanish (j <= n - k). Pairs needing A-sequence terms
/// beyond the given ones (n - k >= a.len()) are outside the realized window
/// and are skipped.
pub fn a_sequence_recurrence_check(r: &RiordanArray, a: &[Rat]) -> bool {
    let n_max = r.order();
    for n in 0..n_max {
        for k in n.saturating_sub(a.len() - 1)..=n {
            let mut acc = Rat::zero();
            for (j, a_j) in a.iter().enumerate() {
                if k + j > n {
                    break;
                }
                if !a_j.is_zero() {
                    acc += a_j * r.entry(n, k + j);
                }
            }
            if &acc != r.entry(n + 1, k + 1) {
                return false;
            }
        }
    }
    true
}

/// INV transform: coefficient sequence of 1/f(x).
pub fn inv_transform(f: &[Rat]) -> Result<Vec<Rat>> {
    if f.is_empty() || f[0].is_zero() {
        return Err(Error::NotInvertible);
    }
    let inv = PowerSeries::new(f.to_vec()).inverse()?;
    Ok(inv.coeffs().to_vec())
}

/// REV transform: with F(x) = sum f_n x^(n+1) and H = revert(F),
/// returns (h_n) where H(x) = sum h_n x^(n+1).
pub fn rev_transform(f: &[Rat]) -> Result<Vec<Rat>> {
    if f.is_empty() || f[0].is_zero() {
        return Err(Error::NoReversion);
    }
    let big_f = PowerSeries::new(f.to_vec()).shift_up();
    let h = big_f.revert()?;
    Ok(h.coeffs()[1..].to_vec())
}

/// A-sequence of R(1, x f(x)) by the composed transform INV(REV((f_n))).
pub fn a_seq_via_inv_rev(f: &[Rat], m: usize) -> Result<Vec<Rat>> {
    let mut padded = f.to_vec();
    if padded.len() < m + 1 {
        padded.resize(m + 1, Rat::zero());
    }
    let mut a = inv_transform(&rev_transform(&padded)?)?;
    a.truncate(m + 1);
    Ok(a)
}

/// Finite square window of a matrix indexed over a block of Z x Z.
/// Row i of `entries` holds the matrix row with index row_offset + i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedMatrix {
    pub row_offset: i64,
    pub col_offset: i64,
    pub entries: Vec<Vec<Rat>>,
}

impl IndexedMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn get(&self, n: i64, k: i64) -> &Rat {
        &self.entries[(n - self.row_offset) as usize][(k - self.col_offset) as usize]
    }
}

/// Anti-transpose: result(i, j) = input(-j, -i). Applying it twice gives
/// back the input.
pub fn anti_transpose(m: &IndexedMatrix) -> IndexedMatrix {
    let rows = m.rows() as i64;
    let cols = m.cols() as i64;
    let row_offset = -(m.col_offset + cols - 1);
    let col_offset = -(m.row_offset + rows - 1);
    let mut entries = vec![vec![Rat::zero(); rows as usize]; cols as usize];
    for i in 0..cols {
        for j in 0..rows {
            entries[i as usize][j as usize] =
                m.get(-(col_offset + j), -(row_offset + i)).clone();
        }
    }
    IndexedMatrix {
        row_offset,
        col_offset,
        entries,
    }
}

/// Realized window of the doubly infinite recursive matrix D(g, f):
/// D(n, k) = [x^n] (g f^k) for -halfwidth <= n, k <= halfwidth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursiveMatrixWindow {
    g: PowerSeries,
    f: PowerSeries,
    halfwidth: usize,
    entries: Vec<Vec<Rat>>,
}

impl RecursiveMatrixWindow {
    pub fn g(&self) -> &PowerSeries {
        &self.g
    }

    pub fn f(&self) -> &PowerSeries {
        &self.f
    }

    pub fn halfwidth(&self) -> usize {
        self.halfwidth
    }

    pub fn entry(&self, n: i64, k: i64) -> &Rat {
        let h = self.halfwidth as i64;
        assert!(n.abs() <= h && k.abs() <= h, "index outside window");
        &self.entries[(n + h) as usize][(k + h) as usize]
    }

    pub fn to_matrix(&self) -> IndexedMatrix {
        IndexedMatrix {
            row_offset: -(self.halfwidth as i64),
            col_offset: -(self.halfwidth as i64),
            entries: self.entries.clone(),
        }
    }
}

/// Builds the window of D(g, f) with |n|, |k| <= halfwidth. The columns are
/// the Laurent series g f^k; g and f must carry order >= 2*halfwidth + 1 so
/// every window coefficient is exact.
pub fn recursive_matrix_window(
    g: &PowerSeries,
    f: &PowerSeries,
    halfwidth: usize,
) -> Result<RecursiveMatrixWindow> {
    check_riordan_pair(g, f)?;
    let need = 2 * halfwidth + 1;
    if g.order() < need || f.order() < need {
        return Err(Error::InsufficientOrder {
            have: g.order().min(f.order()),
            need,
        });
    }
    let g = g.truncated(need);
    let f = f.truncated(need);
    let h = halfwidth as i64;
    let g_laurent = LaurentSeries::from_power_series(&g);
    let size = 2 * halfwidth + 1;
    let mut entries = vec![vec![Rat::zero(); size]; size];
    for k in -h..=h {
        let col = g_laurent.mul(&laurent_int_pow(&f, k)?);
        debug_assert!(col.order() >= h);
        for n in -h..=h {
            entries[(n + h) as usize][(k + h) as usize] = col.coeff(n);
        }
    }
    Ok(RecursiveMatrixWindow {
        g,
        f,
        halfwidth,
        entries,
    })
}

/// Dual Riordan array by the reversion formula:
/// R*(g, f) = R(fhat * (g o fbar), fbar) with fbar = revert(f) and
/// fhat = x fbar' / fbar.
///
/// fhat involves the derivative of fbar, so it is exact only to one order
/// below the inputs: the result is realized to order min(g, f) - 1.
pub fn dual_riordan(g: &PowerSeries, f: &PowerSeries) -> Result<RiordanArray> {
    check_riordan_pair(g, f)?;
    let n = g.order().min(f.order());
    if n < 2 {
        return Err(Error::InsufficientOrder { have: n, need: 2 });
    }
    let n_out = n - 1;
    let g = g.truncated(n);
    let f = f.truncated(n);
    let fbar = f.revert()?;
    // fhat = x fbar' / fbar = fbar' / (fbar / x): both factors are unit or
    // plain power series, so no division by a valuation-1 series occurs.
    let unit = fbar.shift_down()?; // fbar / x, order n-1
    let fhat = fbar.derivative().mul(&unit.inverse()?)?; // order n-1
    let dual_g = fhat.mul(&g.compose(&fbar)?.truncated(n_out))?;
    riordan_build(&dual_g, &fbar.truncated(n_out), n_out)
}

/// Dual Riordan array read directly off the recursive matrix:
/// R*(i, j) = D(-j, -i) for 0 <= i, j <= n_max.
pub fn dual_via_window(
    g: &PowerSeries,
    f: &PowerSeries,
    n_max: usize,
) -> Result<IndexedMatrix> {
    let w = recursive_matrix_window(g, f, n_max)?;
    let mut entries = vec![vec![Rat::zero(); n_max + 1]; n_max + 1];
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = w.entry(-(j as i64), -(i as i64)).clone();
        }
    }
    Ok(IndexedMatrix {
        row_offset: 0,
        col_offset: 0,
        entries,
    })
}
