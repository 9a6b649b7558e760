use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::complex::ChainComplex;
use super::field::{is_prime, rank_mod_p};
use super::snf::{smith_normal_form, SmithForm};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integers,
    Rationals,
    /// `GF(p)`
    Prime(u32),
}

impl Coefficients {
    pub fn is_field(self) -> bool {
        !matches!(self, Coefficients::Integers)
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => f.write_str("Z"),
            Coefficients::Rationals => f.write_str("Q"),
            Coefficients::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Coefficients {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "Z" => Ok(Coefficients::Integers),
            "Q" => Ok(Coefficients::Rationals),
            _ => s
                .strip_prefix('F')
                .and_then(|p| p.parse::<u32>().ok())
                .filter(|&p| is_prime(p))
                .map(Coefficients::Prime)
                .ok_or_else(|| format!("unknown coefficients `{s}` (expected Z, Q or Fp)")),
        }
    }
}

/// `H_m` as a Betti number plus torsion invariant factors (empty over a
/// field).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub degree: usize,
    pub coefficients: Coefficients,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    /// Equality of the groups, ignoring the degree label.
    pub fn same_group(&self, other: &HomologyGroup) -> bool {
        self.coefficients == other.coefficients && self.betti == other.betti && self.torsion == other.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// The group alone, e.g. `Z^2 + Z/2`.
    pub fn group_string(&self) -> String {
        let mut parts = Vec::new();
        let ring = self.coefficients.to_string();
        match self.betti {
            0 => {}
            1 => parts.push(ring),
            b => parts.push(format!("{ring}^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// `m;coeff;b;t1,t2,...`
    pub fn machine_line(&self) -> String {
        let t: Vec<String> = self.torsion.iter().map(ToString::to_string).collect();
        format!("{};{};{};{}", self.degree, self.coefficients, self.betti, t.join(","))
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{} = {}", self.degree, self.group_string())
    }
}

enum Rank {
    Integral(SmithForm),
    Field(usize),
}

impl Rank {
    fn rank(&self) -> usize {
        match self {
            Rank::Integral(s) => s.rank(),
            Rank::Field(r) => *r,
        }
    }
}

fn boundary_rank(c: &ChainComplex, k: usize, coeff: Coefficients) -> Rank {
    let d = c.boundary(k);
    match coeff {
        // Rational rank is the number of nonzero invariant factors.
        Coefficients::Integers | Coefficients::Rationals => Rank::Integral(smith_normal_form(d)),
        Coefficients::Prime(p) => Rank::Field(rank_mod_p(d, p)),
    }
}

/// `H_m(C; coeff)`. Needs `∂_{m+1}`, so `m + 1 <= max_degree`.
pub fn homology(c: &ChainComplex, m: usize, coeff: Coefficients) -> Result<HomologyGroup> {
    homology_range(c, m, coeff).map(|mut v| v.pop().expect("nonempty range"))
}

/// `H_0, ..., H_{m_max}`, factoring each boundary once.
pub fn homology_range(c: &ChainComplex, m_max: usize, coeff: Coefficients) -> Result<Vec<HomologyGroup>> {
    if m_max + 1 > c.max_degree() {
        return Err(Error::DegreeOutOfRange { degree: m_max, max: c.max_degree().saturating_sub(1) });
    }
    let ranks: Vec<Rank> = (0..=m_max + 1).map(|k| boundary_rank(c, k, coeff)).collect();
    Ok((0..=m_max)
        .map(|m| {
            let betti = c.dim(m) - ranks[m].rank() - ranks[m + 1].rank();
            let torsion = match (&ranks[m + 1], coeff) {
                (Rank::Integral(s), Coefficients::Integers) => s.torsion(),
                _ => Vec::new(),
            };
            HomologyGroup { degree: m, coefficients: coeff, betti, torsion }
        })
        .collect())
}
