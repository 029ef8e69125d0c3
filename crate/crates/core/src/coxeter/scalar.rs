//! Exact scalars in the ring `Z[τ]`, `τ² = τ + 1`, and fraction-free rank.
//!
//! Every finite Coxeter group except the general dihedral ones has a
//! reflection representation whose Cartan entries lie in `Z[τ]`: the
//! crystallographic types only use the integer part, `H3`/`H4` need
//! `τ = 2cos(π/5)`. Roots expressed in the simple-root basis therefore have
//! coordinates in this ring, and rank computations never leave it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b·τ` with integer `a`, `b`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub a: i128,
    pub b: i128,
}

impl Scalar {
    pub const ZERO: Scalar = Scalar { a: 0, b: 0 };
    pub const ONE: Scalar = Scalar { a: 1, b: 0 };
    pub const TAU: Scalar = Scalar { a: 0, b: 1 };

    pub const fn int(a: i128) -> Self {
        Scalar { a, b: 0 }
    }

    pub const fn new(a: i128, b: i128) -> Self {
        Scalar { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Galois conjugate `τ ↦ 1 − τ`.
    pub fn conj(self) -> Self {
        Scalar::new(self.a + self.b, -self.b)
    }

    /// Field norm `x · conj(x) = a² + ab − b²`, always an integer.
    pub fn norm(self) -> i128 {
        self.a * self.a + self.a * self.b - self.b * self.b
    }

    /// Sign of the real number `a + bτ`.
    pub fn signum(self) -> Ordering {
        // a + bτ = (x + b√5)/2 with x = 2a + b
        let x = 2 * self.a + self.b;
        let b = self.b;
        match (x.cmp(&0), b.cmp(&0)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            (sx, _) => {
                // opposite signs: the larger magnitude wins
                match (x * x).cmp(&(5 * b * b)) {
                    Ordering::Greater => sx,
                    Ordering::Less => sx.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_nonnegative(self) -> bool {
        self.signum() != Ordering::Less
    }

    /// Exact division; `None` if `rhs` is zero or does not divide `self`.
    pub fn checked_div(self, rhs: Scalar) -> Option<Scalar> {
        let n = rhs.norm();
        if n == 0 {
            return None;
        }
        let num = self * rhs.conj();
        if num.a % n != 0 || num.b % n != 0 {
            return None;
        }
        Some(Scalar::new(num.a / n, num.b / n))
    }

    pub fn to_f64(self) -> f64 {
        let tau = (1.0 + 5f64.sqrt()) / 2.0;
        self.a as f64 + self.b as f64 * tau
    }
}

impl From<i128> for Scalar {
    fn from(a: i128) -> Self {
        Scalar::int(a)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.a, -self.b)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        // (a + bτ)(c + dτ) = ac + bd + (ad + bc + bd)τ
        let bd = self.b * rhs.b;
        Scalar::new(self.a * rhs.a + bd, self.a * rhs.b + self.b * rhs.a + bd)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}τ"),
            (a, b) if b < 0 => write!(f, "{a}-{}τ", -b),
            (a, b) => write!(f, "{a}+{b}τ"),
        }
    }
}

/// Rank of a matrix given as rows, by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so the division by the
/// previous pivot is exact in `Z[τ]`.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    let mut prev = Scalar::ONE;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, below) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c];
        for row in below {
            let lead = row[c];
            for (x, &y) in row[c + 1..].iter_mut().zip(&pivot_row[c + 1..]) {
                *x = (pivot * *x - lead * y)
                    .checked_div(prev)
                    .expect("Bareiss division must be exact");
            }
            row[c] = Scalar::ZERO;
        }
        prev = pivot;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn float_rank(rows: &[Vec<Scalar>]) -> usize {
        let mut m: Vec<Vec<f64>> = rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_f64()).collect())
            .collect();
        let nrows = m.len();
        let ncols = if nrows == 0 { 0 } else { m[0].len() };
        let mut r = 0;
        for c in 0..ncols {
            if r == nrows {
                break;
            }
            let (p, best) = (r..nrows)
                .map(|i| (i, m[i][c].abs()))
                .fold((r, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best < 1e-9 {
                continue;
            }
            m.swap(r, p);
            let (top, below) = m.split_at_mut(r + 1);
            for row in below {
                let f = row[c] / top[r][c];
                for (x, &y) in row[c..].iter_mut().zip(&top[r][c..]) {
                    *x -= f * y;
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn tau_squared_is_tau_plus_one() {
        assert_eq!(Scalar::TAU * Scalar::TAU, Scalar::TAU + Scalar::ONE);
    }

    #[test]
    fn signum_matches_float() {
        for a in -20..=20 {
            for b in -20..=20 {
                let s = Scalar::new(a, b);
                let f = s.to_f64();
                let expected = if s.is_zero() {
                    Ordering::Equal
                } else if f > 0.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
                assert_eq!(s.signum(), expected, "{s}");
            }
        }
    }

    #[test]
    fn tau_is_a_unit() {
        let inv = Scalar::ONE.checked_div(Scalar::TAU).unwrap();
        assert_eq!(inv, Scalar::new(-1, 1));
        assert_eq!(Scalar::ONE.checked_div(Scalar::int(2)), None);
    }

    #[test]
    fn rank_small_cases() {
        assert_eq!(rank(&[]), 0);
        let z = vec![vec![Scalar::ZERO; 3]; 2];
        assert_eq!(rank(&z), 0);
        let a2 = vec![
            vec![Scalar::int(1), Scalar::int(0)],
            vec![Scalar::int(0), Scalar::int(1)],
            vec![Scalar::int(1), Scalar::int(1)],
        ];
        assert_eq!(rank(&a2), 2);
        // column skipped in the middle
        let m = vec![
            vec![Scalar::int(1), Scalar::int(2), Scalar::int(3)],
            vec![Scalar::int(2), Scalar::int(4), Scalar::int(7)],
        ];
        assert_eq!(rank(&m), 2);
        // τ-dependent: (1, τ) and (τ, τ+1) are proportional
        let m = vec![
            vec![Scalar::ONE, Scalar::TAU],
            vec![Scalar::TAU, Scalar::TAU + Scalar::ONE],
        ];
        assert_eq!(rank(&m), 1);
    }

    proptest! {
        #[test]
        fn mul_div_roundtrip(a in -50i128..50, b in -50i128..50, c in -50i128..50, d in -50i128..50) {
            let x = Scalar::new(a, b);
            let y = Scalar::new(c, d);
            prop_assume!(!y.is_zero());
            prop_assert_eq!((x * y).checked_div(y), Some(x));
        }

        #[test]
        fn rank_agrees_with_float_elimination(
            entries in proptest::collection::vec((-3i128..=3, -2i128..=2), 12),
            nrows in 1usize..=4,
        ) {
            let rows: Vec<Vec<Scalar>> = entries
                .chunks(3)
                .take(nrows)
                .map(|c| c.iter().map(|&(a, b)| Scalar::new(a, b)).collect())
                .collect();
            prop_assert_eq!(rank(&rows), float_rank(&rows));
        }
    }
}
