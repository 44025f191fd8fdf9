use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::CoeffVector;
use crate::tree::Tree;

/// Determinant by Bareiss elimination; every division is exact.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det(xI - L)` as signed integer coefficients, index `j` holding the
/// coefficient of `x^j`.
///
/// The determinant is evaluated at `x = 0, 1, ..., n` and the polynomial
/// recovered in the falling-factorial basis, whose coefficients
/// `Δ^k f(0) / k!` are integers for any integer polynomial.
pub fn laplacian_characteristic_polynomial(t: &Tree) -> Vec<BigInt> {
    let n = t.n();
    let values: Vec<BigInt> = (0..=n)
        .map(|x| {
            let mut m = vec![vec![BigInt::zero(); n]; n];
            for (v, row) in m.iter_mut().enumerate() {
                row[v] = BigInt::from(x as i64 - t.degree(v) as i64);
                for &w in t.neighbors(v) {
                    row[w] = BigInt::one();
                }
            }
            bareiss_det(m)
        })
        .collect();

    let mut diffs = values;
    let mut newton = Vec::with_capacity(n + 1);
    let mut factorial = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            factorial *= BigInt::from(k);
        }
        let (q, r) = diffs[0].div_rem(&factorial);
        assert!(r.is_zero(), "falling-factorial coefficient is not integral");
        newton.push(q);
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }

    let mut poly = vec![BigInt::zero(); n + 1];
    let mut falling = vec![BigInt::one()];
    for (k, a) in newton.iter().enumerate() {
        for (j, f) in falling.iter().enumerate() {
            poly[j] += a * f;
        }
        // falling *= (x - k)
        let mut next = vec![BigInt::zero(); falling.len() + 1];
        for (j, f) in falling.iter().enumerate() {
            next[j + 1] += f;
            next[j] -= f * BigInt::from(k);
        }
        falling = next;
    }
    poly
}

/// Coefficient vector from the characteristic polynomial, with the
/// alternating signs stripped.
pub fn coeffs_via_charpoly(t: &Tree) -> CoeffVector {
    let n = t.n();
    let poly = laplacian_characteristic_polynomial(t);
    let c = (0..=n)
        .map(|k| {
            let coef = &poly[n - k];
            let expected = if k % 2 == 0 { Sign::Plus } else { Sign::Minus };
            assert!(
                coef.is_zero() || coef.sign() == expected,
                "sign pattern broken at k = {k}: {coef}"
            );
            coef.abs().to_biguint().unwrap_or_else(BigUint::zero)
        })
        .collect();
    CoeffVector::new(c)
}
