use std::fmt;
use std::str::FromStr;

use super::scalar::Scalar;
use crate::error::Error;

/// Cartan-Killing family of a finite irreducible Coxeter group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    A,
    B,
    D,
    E,
    F,
    G,
    H,
    I2,
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "A" => Kind::A,
            "B" | "C" => Kind::B,
            "D" => Kind::D,
            "E" => Kind::E,
            "F" => Kind::F,
            "G" => Kind::G,
            "H" => Kind::H,
            "I" | "I2" => Kind::I2,
            other => return Err(Error::InvalidDatum(format!("unknown type `{other}`"))),
        })
    }
}

/// Validated description of a finite Coxeter system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterDatum {
    kind: Kind,
    rank: usize,
    m: Option<u32>,
}

impl CoxeterDatum {
    pub fn new(kind: Kind, rank: usize, m: Option<u32>) -> Result<Self, Error> {
        let bad = |msg: String| Err(Error::InvalidDatum(msg));
        match kind {
            Kind::A if rank >= 1 => {}
            Kind::B if rank >= 2 => {}
            Kind::D if rank >= 4 => {}
            Kind::E if (6..=8).contains(&rank) => {}
            Kind::F if rank == 4 => {}
            Kind::G if rank == 2 => {}
            Kind::H if rank == 3 || rank == 4 => {}
            Kind::I2 => {
                return match m {
                    Some(m) if m >= 3 && (rank == 2 || rank == 0) => Ok(CoxeterDatum {
                        kind,
                        rank: 2,
                        m: Some(m),
                    }),
                    Some(m) if m < 3 => bad(format!("I2 needs m >= 3, got {m}")),
                    None => bad("I2 needs a dihedral order m".into()),
                    _ => bad(format!("I2 has rank 2, got {rank}")),
                };
            }
            _ => return bad(format!("no finite Coxeter group of type {kind:?}{rank}")),
        }
        if m.is_some() {
            return bad("dihedral order m is only meaningful for I2".into());
        }
        Ok(CoxeterDatum {
            kind,
            rank,
            m: None,
        })
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Kind::A, rank, None).expect("valid A datum")
    }

    pub fn b(rank: usize) -> Self {
        Self::new(Kind::B, rank, None).expect("valid B datum")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(Kind::D, rank, None).expect("valid D datum")
    }

    pub fn dihedral(m: u32) -> Self {
        Self::new(Kind::I2, 2, Some(m)).expect("valid I2 datum")
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dihedral_order(&self) -> Option<u32> {
        self.m
    }

    /// Nodes joined by an edge of the Coxeter diagram together with the
    /// label `m(s, s')`; unlisted pairs commute.
    fn diagram_edges(&self) -> Vec<(usize, usize, u32)> {
        let n = self.rank;
        let chain = |k: usize| {
            (0..k.saturating_sub(1))
                .map(|i| (i, i + 1, 3))
                .collect::<Vec<_>>()
        };
        match self.kind {
            Kind::A => chain(n),
            Kind::B => {
                let mut e = chain(n);
                e.last_mut().unwrap().2 = 4;
                e
            }
            Kind::D => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1, 3));
                e
            }
            // Bourbaki labelling: 1-3-4-5-..., 2 attached to 4
            Kind::E => {
                let mut e = vec![(0, 2, 3), (1, 3, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1, 3)));
                e
            }
            Kind::F => vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
            Kind::G => vec![(0, 1, 6)],
            Kind::H => {
                let mut e = chain(n);
                e[0].2 = 5;
                e
            }
            Kind::I2 => vec![(0, 1, self.m.unwrap())],
        }
    }

    /// Coxeter matrix `m(s, s')` (1 on the diagonal, 2 for commuting pairs).
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.rank;
        let mut m = vec![vec![2; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (i, j, label) in self.diagram_edges() {
            m[i][j] = label;
            m[j][i] = label;
        }
        m
    }

    /// Generalised Cartan matrix over `Z[τ]`, or `None` for `I2(m)` (which is
    /// handled without coordinates).
    ///
    /// Entry `[i][j]` is the coefficient in `s_i(α_j) = α_j − c[i][j]·α_i`.
    pub fn cartan_matrix(&self) -> Option<Vec<Vec<Scalar>>> {
        if self.kind == Kind::I2 {
            return None;
        }
        let n = self.rank;
        let mut c = vec![vec![Scalar::ZERO; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = Scalar::int(2);
        }
        for (i, j, label) in self.diagram_edges() {
            let (cij, cji) = match label {
                3 => (Scalar::int(-1), Scalar::int(-1)),
                4 => (Scalar::int(-1), Scalar::int(-2)),
                6 => (Scalar::int(-1), Scalar::int(-3)),
                5 => (-Scalar::TAU, -Scalar::TAU),
                _ => unreachable!("label {label} only occurs in I2"),
            };
            c[i][j] = cij;
            c[j][i] = cji;
        }
        Some(c)
    }

    /// Group order from the classification; `None` if it overflows `u64`.
    pub fn predicted_order(&self) -> Option<u64> {
        let fact = |k: u64| (1..=k).try_fold(1u64, |acc, x| acc.checked_mul(x));
        let n = self.rank as u64;
        match self.kind {
            Kind::A => fact(n + 1),
            Kind::B => fact(n)?.checked_mul(1u64.checked_shl(n as u32)?),
            Kind::D => fact(n)?.checked_mul(1u64.checked_shl(n as u32 - 1)?),
            Kind::E => Some(match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Kind::F => Some(1152),
            Kind::G => Some(12),
            Kind::H => Some(if n == 3 { 120 } else { 14_400 }),
            Kind::I2 => Some(2 * self.m.unwrap() as u64),
        }
    }
}

impl fmt::Display for CoxeterDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::I2 => write!(f, "I2({})", self.m.unwrap()),
            k => write!(f, "{k:?}{}", self.rank),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_infinite_or_malformed() {
        assert!(CoxeterDatum::new(Kind::A, 0, None).is_err());
        assert!(CoxeterDatum::new(Kind::D, 3, None).is_err());
        assert!(CoxeterDatum::new(Kind::E, 9, None).is_err());
        assert!(CoxeterDatum::new(Kind::H, 5, None).is_err());
        assert!(CoxeterDatum::new(Kind::I2, 2, None).is_err());
        assert!(CoxeterDatum::new(Kind::I2, 2, Some(2)).is_err());
        assert!(CoxeterDatum::new(Kind::A, 3, Some(4)).is_err());
        assert!("Q".parse::<Kind>().is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(CoxeterDatum::a(3).predicted_order(), Some(24));
        assert_eq!(CoxeterDatum::b(3).predicted_order(), Some(48));
        assert_eq!(CoxeterDatum::d(4).predicted_order(), Some(192));
        assert_eq!(CoxeterDatum::dihedral(5).predicted_order(), Some(10));
    }

    #[test]
    fn coxeter_matrix_of_h3() {
        let h3 = CoxeterDatum::new(Kind::H, 3, None).unwrap();
        assert_eq!(
            h3.coxeter_matrix(),
            vec![vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]]
        );
        assert_eq!(h3.to_string(), "H3");
        assert_eq!(CoxeterDatum::dihedral(7).to_string(), "I2(7)");
    }
}
