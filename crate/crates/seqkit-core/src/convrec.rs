//! Convolution-power tables and the reversion-to-recurrence engine.
//!
//! conv(n, k) is the coefficient [x^n] A(x)^k of the k-th power of the
//! generating function of a sequence. trunc(n, k) is the same quantity with
//! the "diagonal" contribution k a_0^(k-1) a_n removed, which is what turns
//! the reversion identity B(A(x)) = x into a usable recurrence: trunc(n, k)
//! only involves a_0 .. a_(n-1), so a_n can be solved for.

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rat};

fn coeff_at(a: &[Rat], i: usize) -> Rat {
    a.get(i).cloned().unwrap_or_else(Rat::zero)
}

/// Table of conv(n, k) = [x^n] A(x)^k for 0 <= n <= n_max, 0 <= k <= k_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvPowerTable {
    base: Vec<Rat>,
    n_max: usize,
    k_max: usize,
    // table[k][n]; row 0 is the k = 0 power (the series 1).
    table: Vec<Vec<Rat>>,
}

impl ConvPowerTable {
    pub fn get(&self, n: usize, k: usize) -> &Rat {
        &self.table[k][n]
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }
}

/// Fills conv(n, k) by the convolution recurrence
/// conv(n, k) = sum_{j=0}^{n} a_{n-j} conv(j, k-1), with conv(n, 1) = a_n.
pub fn conv_power_table(a: &[Rat], n_max: usize, k_max: usize) -> Result<ConvPowerTable> {
    if a.len() < n_max + 1 {
        return Err(Error::InsufficientTerms {
            have: a.len(),
            need: n_max + 1,
        });
    }
    if k_max < 1 {
        return Err(Error::InvalidParameter("k_max must be >= 1".into()));
    }
    let mut table: Vec<Vec<Rat>> = Vec::with_capacity(k_max + 1);
    let mut row0 = vec![Rat::zero(); n_max + 1];
    row0[0] = Rat::one();
    table.push(row0);
    table.push(a[..=n_max].to_vec());
    for k in 2..=k_max {
        let prev = &table[k - 1];
        let mut row = vec![Rat::zero(); n_max + 1];
        for (n, slot) in row.iter_mut().enumerate() {
            let mut acc = Rat::zero();
            for j in 0..=n {
                if !prev[j].is_zero() {
                    acc += &a[n - j] * &prev[j];
                }
            }
            *slot = acc;
        }
        table.push(row);
    }
    Ok(ConvPowerTable {
        base: a[..=n_max].to_vec(),
        n_max,
        k_max,
        table,
    })
}

/// Exponential-time reference: sums a_{i_1} ... a_{i_k} over every
/// composition (i_1, ..., i_k) of n into k nonnegative parts. Terms with an
/// index past the end of the base sequence count as zero.
pub fn conv_power_oracle(a: &[Rat], n: usize, k: usize) -> Rat {
    assert!(k >= 1);
    fn go(a: &[Rat], parts_left: usize, remaining: usize, acc: &Rat, total: &mut Rat) {
        if acc.is_zero() {
            return;
        }
        if parts_left == 1 {
            *total += acc * coeff_at(a, remaining);
            return;
        }
        for i in 0..=remaining {
            let next = acc * coeff_at(a, i);
            go(a, parts_left - 1, remaining - i, &next, total);
        }
    }
    let mut total = Rat::zero();
    go(a, k, n, &Rat::one(), &mut total);
    total
}

/// Table of trunc(n, k): trunc(n, 1) = 0 and
/// trunc(n, k) = sum_{j=1}^{n-1} a_{n-j} conv(j, k-1) + a_0 trunc(n, k-1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncPowerTable {
    base: Vec<Rat>,
    n_max: usize,
    k_max: usize,
    table: Vec<Vec<Rat>>,
}

impl TruncPowerTable {
    /// trunc(n, k) for 0 <= n <= n_max, 1 <= k <= k_max.
    pub fn get(&self, n: usize, k: usize) -> &Rat {
        assert!(k >= 1);
        &self.table[k - 1][n]
    }
}

pub fn trunc_power_table(a: &[Rat], n_max: usize, k_max: usize) -> Result<TruncPowerTable> {
    let conv = conv_power_table(a, n_max, k_max.max(1))?;
    let mut table: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n_max + 1]];
    for k in 2..=k_max {
        let mut row = vec![Rat::zero(); n_max + 1];
        // The n = 0 instance of the fill recurrence degenerates (its proof
        // splits off the j = 0 and j = n terms, which coincide); seed it
        // from the identity conv = trunc + k a_0^(k-1) a_n instead. No
        // recurrence consumer ever reads the n = 0 row.
        row[0] = (Rat::one() - rat(k as i64)) * a[0].clone().pow(k as i32);
        for (n, slot) in row.iter_mut().enumerate().skip(1) {
            let mut acc = &a[0] * &table[k - 2][n];
            for j in 1..n {
                let c = conv.get(j, k - 1);
                if !c.is_zero() {
                    acc += &a[n - j] * c;
                }
            }
            *slot = acc;
        }
        table.push(row);
    }
    Ok(TruncPowerTable {
        base: a[..=n_max].to_vec(),
        n_max,
        k_max: k_max.max(1),
        table,
    })
}

/// Polynomial evaluation at a rational point.
pub fn poly_eval(b: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in b.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Coefficients of the derivative polynomial.
pub fn poly_derivative(b: &[Rat]) -> Vec<Rat> {
    b.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * rat(k as i64))
        .collect()
}

/// Reversion problem for a polynomial B: find the series A with
/// B(A(x)) = x, A(0) = root.
#[derive(Clone, Debug)]
pub struct PolynomialReversionProblem {
    pub poly: Vec<Rat>,
    pub root: Rat,
    pub order: usize,
}

/// Solves B(A(x)) = x for the coefficients of A, given a rational root of B.
///
/// a_0 = root, a_1 = 1/B'(root), and a_n = -a_1 sum_k b_k trunc(a, n, k):
/// for each n the whole trunc column is computed from a_0 .. a_(n-1) before
/// a_n. Root selection for polynomials with several rational roots is the
/// caller's responsibility.
pub fn solve_reversion_recurrence(prob: &PolynomialReversionProblem) -> Result<Vec<Rat>> {
    let b = &prob.poly;
    if !poly_eval(b, &prob.root).is_zero() {
        return Err(Error::NotARoot);
    }
    let b_prime = poly_eval(&poly_derivative(b), &prob.root);
    if b_prime.is_zero() {
        return Err(Error::SingularDerivative);
    }
    let deg = b.len() - 1;
    let a1 = b_prime.recip();
    let mut a = vec![prob.root.clone(), a1.clone()];
    for n in 2..=prob.order {
        // conv powers of the known prefix a_0 .. a_(n-1); only indices
        // j <= n-1 are consulted below.
        let mut prefix = a.clone();
        prefix.resize(n + 1, Rat::zero());
        let conv = conv_power_table(&prefix, n - 1, deg.max(1))?;
        let mut trunc_col = vec![Rat::zero(); deg + 1]; // trunc(n, k), k = 0 unused
        for k in 2..=deg {
            let mut acc = &a[0] * &trunc_col[k - 1];
            for j in 1..n {
                let c = conv.get(j, k - 1);
                if !c.is_zero() {
                    acc += &a[n - j] * c;
                }
            }
            trunc_col[k] = acc;
        }
        let mut sum = Rat::zero();
        for k in 1..=deg {
            if !b[k].is_zero() {
                sum += &b[k] * &trunc_col[k];
            }
        }
        a.push(-&a1 * sum);
    }
    a.truncate(prob.order + 1);
    Ok(a)
}

/// The zero-constant-term specialization: b_0 = 0, a_0 = 0, a_1 = 1/b_1 and
/// a_n = -a_1 sum_{k>1} b_k conv(a, n, k). With a_0 = 0 the conv terms for
/// k > 1 only involve a_0 .. a_(n-1).
pub fn solve_reversion_recurrence_zero(b: &[Rat], n_max: usize) -> Result<Vec<Rat>> {
    if b.len() < 2 || !b[0].is_zero() {
        return Err(Error::NoReversion);
    }
    if b[1].is_zero() {
        return Err(Error::SingularDerivative);
    }
    let deg = b.len() - 1;
    let a1 = b[1].recip();
    let mut a = vec![Rat::zero(), a1.clone()];
    for n in 2..=n_max {
        let mut prefix = a.clone();
        prefix.resize(n + 1, Rat::zero());
        let conv = conv_power_table(&prefix, n, deg.max(2))?;
        let mut sum = Rat::zero();
        for k in 2..=deg {
            if !b[k].is_zero() {
                sum += &b[k] * conv.get(n, k);
            }
        }
        a.push(-&a1 * sum);
    }
    a.truncate(n_max + 1);
    Ok(a)
}

/// Right-hand side of the shifted recurrence
/// a_n = -a_0 sum_{k>1} b_k conv(a, n-k+1, k), where b is the coefficient
/// list of the reversion of x A(x). conv terms with negative index are
/// zero. The a_0 factor comes from c_1 = a_0 in the derivation via the
/// shifted sequence c_n = a_(n-1).
pub fn shifted_recurrence_terms(a: &[Rat], b: &[Rat], n: usize) -> Rat {
    let deg = b.len().saturating_sub(1);
    if deg < 2 || n == 0 {
        return Rat::zero();
    }
    let conv = conv_power_table(a, (a.len() - 1).min(n), deg)
        .expect("prefix length suffices by construction");
    let mut sum = Rat::zero();
    for (k, b_k) in b.iter().enumerate().skip(2) {
        if b_k.is_zero() {
            continue;
        }
        if n + 1 < k {
            continue; // negative index, conv term is 0
        }
        let m = n + 1 - k;
        if m <= conv.n_max() {
            sum += b_k * conv.get(m, k);
        }
    }
    -(&a[0] * sum)
}
