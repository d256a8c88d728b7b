//! Young diagrams in the French convention.
//!
//! Row `i` (1-based) occupies `y ∈ [i-1, i]` and column `j` occupies
//! `x ∈ [j-1, j]`; the contents of a point `(x, y)` is `x - y`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A partition: weakly decreasing positive rows. The empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidPartition(format!("{rows:?} has a zero row")));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{rows:?} is not weakly decreasing")));
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row `i` (0-based), zero past the end.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(0);
        Partition {
            rows: (0..width)
                .map(|j| self.rows.iter().take_while(|&&r| r > j).count())
                .collect(),
        }
    }

    /// Hook length of the cell in row `i`, column `j` (both 0-based).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.rows[i] - j - 1;
        let leg = self.rows[i + 1..].iter().take_while(|&&r| r > j).count();
        arm + leg + 1
    }

    /// The dilation `sλ`: every box becomes an `s × s` grid.
    pub fn dilate(&self, s: usize) -> Partition {
        assert!(s >= 1, "dilation factor must be positive");
        Partition {
            rows: self.rows.iter().flat_map(|&r| std::iter::repeat_n(s * r, s)).collect(),
        }
    }

    /// Shifted Frobenius coordinates; empty lists for the empty diagram.
    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let half = rational::ratio(1, 2);
        let diag = (0..self.len()).take_while(|&i| self.rows[i] > i).count();
        let arm = (0..diag)
            .map(|i| rational::int((self.rows[i] - i - 1) as i64) + &half)
            .collect();
        let leg = (0..diag)
            .map(|i| rational::int((conj.rows[i] - i - 1) as i64) + &half)
            .collect();
        FrobeniusCoords { arm, leg }
    }

    /// Unit squares of the diagram: row `i` contributes `[j-1, j] × [i-1, i]`.
    pub fn box_regions(&self) -> Vec<UnitBox> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| {
                (0..r).map(move |j| UnitBox {
                    x0: j as i64,
                    y0: i as i64,
                })
            })
            .collect()
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { rows: cur.clone() });
                return;
            }
            for part in (1..=rem.min(max)).rev() {
                cur.push(part);
                go(rem - part, part, cur, out);
                cur.pop();
            }
        }
        go(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions with at most `n` boxes, smallest first.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// Comma-separated rows, e.g. `4,3,1`; the empty partition prints as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", rows.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let rows = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad row {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

/// The unit square `[x0, x0+1] × [y0, y0+1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnitBox {
    pub x0: i64,
    pub y0: i64,
}

impl UnitBox {
    /// Contents `x - y` at the lower-left corner.
    pub fn corner_contents(&self) -> i64 {
        self.x0 - self.y0
    }
}

/// Shifted Frobenius coordinates `A_i = a_i + 1/2`, `B_i = b_i + 1/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub arm: Vec<Rational>,
    pub leg: Vec<Rational>,
}

impl FrobeniusCoords {
    /// `Σ (A_i + B_i)`, which equals the number of boxes.
    pub fn total(&self) -> Rational {
        self.arm.iter().chain(&self.leg).fold(Rational::zero(), |a, b| a + b)
    }
}

/// A multirectangular diagram `p × q`: `p_i` rows of length `q_i` for each `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiRect {
    p: Vec<Rational>,
    q: Vec<Rational>,
}

impl MultiRect {
    pub fn new(p: Vec<Rational>, q: Vec<Rational>) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::InvalidMultiRect(format!(
                "p has {} entries, q has {}",
                p.len(),
                q.len()
            )));
        }
        if p.iter().chain(&q).any(Signed::is_negative) {
            return Err(Error::InvalidMultiRect("entries must be nonnegative".into()));
        }
        if q.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidMultiRect("q must be weakly decreasing".into()));
        }
        Ok(MultiRect { p, q })
    }

    pub fn from_integers(p: &[i64], q: &[i64]) -> Result<Self> {
        Self::new(
            p.iter().map(|&x| rational::int(x)).collect(),
            q.iter().map(|&x| rational::int(x)).collect(),
        )
    }

    /// Parses the comma-separated `--p` and `--q` lists; entries may be `a/b`.
    pub fn parse(p: &str, q: &str) -> Result<Self> {
        let list = |s: &str| -> Result<Vec<Rational>> {
            if s.trim().is_empty() {
                return Ok(Vec::new());
            }
            s.split(',').map(rational::parse).collect()
        };
        Self::new(list(p)?, list(q)?)
    }

    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    pub fn q(&self) -> &[Rational] {
        &self.q
    }

    pub fn rectangles(&self) -> usize {
        self.p.len()
    }

    /// `(q_1^{p_1}, q_2^{p_2}, ...)` with zero rows dropped.
    pub fn to_partition(&self) -> Result<Partition> {
        let natural = |x: &Rational| -> Result<usize> {
            if x.is_integer() {
                x.numer().try_into().map_err(|_| Error::NotConcretePartition)
            } else {
                Err(Error::NotConcretePartition)
            }
        };
        let mut rows = Vec::new();
        for (p, q) in self.p.iter().zip(&self.q) {
            let (p, q) = (natural(p)?, natural(q)?);
            if q > 0 {
                rows.extend(std::iter::repeat_n(q, p));
            }
        }
        Ok(Partition { rows })
    }

    /// `Σ p_i q_i`.
    pub fn area(&self) -> Rational {
        self.p.iter().zip(&self.q).fold(Rational::zero(), |a, (p, q)| a + p * q)
    }

    pub fn scale(&self, s: &Rational) -> MultiRect {
        MultiRect {
            p: self.p.iter().map(|x| x * s).collect(),
            q: self.q.iter().map(|x| x * s).collect(),
        }
    }
}

impl From<&Partition> for MultiRect {
    /// One unit-height rectangle per row.
    fn from(lambda: &Partition) -> Self {
        MultiRect {
            p: vec![Rational::one(); lambda.len()],
            q: lambda.rows.iter().map(|&r| rational::int(r as i64)).collect(),
        }
    }
}
