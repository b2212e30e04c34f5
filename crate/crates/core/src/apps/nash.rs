//! Nash equilibria of bimatrix games by support enumeration.
//!
//! `A, B` are `m×n`; the row player mixes `x ∈ S^m`, the column player
//! `y ∈ S^n`, with payoffs `xᵀAy` and `xᵀBy`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rdiv;
use crate::error::{Error, Result};
use crate::foundations::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "crate::formats::GameJson", into = "crate::formats::GameJson")]
pub struct BimatrixGame {
    a: Vec<Vec<Rational>>,
    b: Vec<Vec<Rational>>,
}

impl BimatrixGame {
    pub fn new(a: Vec<Vec<Rational>>, b: Vec<Vec<Rational>>) -> Result<Self> {
        let m = a.len();
        let n = a.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::Shape("payoff matrices must be nonempty".into()));
        }
        let rect = |x: &Vec<Vec<Rational>>| x.len() == m && x.iter().all(|r| r.len() == n);
        if !rect(&a) || !rect(&b) {
            return Err(Error::Shape(format!("A and B must both be {m}x{n}")));
        }
        Ok(BimatrixGame { a, b })
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.a[0].len()
    }

    pub fn a(&self) -> &[Vec<Rational>] {
        &self.a
    }

    pub fn b(&self) -> &[Vec<Rational>] {
        &self.b
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrategyPair {
    #[serde(with = "crate::formats::rational_vec")]
    x: Vec<Rational>,
    #[serde(with = "crate::formats::rational_vec")]
    y: Vec<Rational>,
}

fn check_mixed(v: &[Rational], who: &str) -> Result<()> {
    if v.is_empty() || v.iter().any(Signed::is_negative) {
        return Err(Error::Precondition(format!(
            "{who} strategy must be nonempty and nonnegative"
        )));
    }
    if v.iter().sum::<Rational>() != Rational::one() {
        return Err(Error::Precondition(format!("{who} strategy must sum to 1")));
    }
    Ok(())
}

impl StrategyPair {
    pub fn new(x: Vec<Rational>, y: Vec<Rational>) -> Result<Self> {
        check_mixed(&x, "row")?;
        check_mixed(&y, "column")?;
        Ok(StrategyPair { x, y })
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn y(&self) -> &[Rational] {
        &self.y
    }
}

/// The game `A = (1 −1; −1 a)`, `B = (−1 1; 1 −1)` and its unique equilibrium
/// `x = (1/2, 1/2)`, `y = ((1+a)/(3+a), 2/(3+a))`.
pub fn nash_2x2_family(a: &Rational) -> Result<(BimatrixGame, StrategyPair)> {
    if a.is_negative() || a > &Rational::one() {
        return Err(Error::range("family parameter", format!("{a} is outside [0,1]")));
    }
    let int = |v: i64| Rational::from_integer(BigInt::from(v));
    let game = BimatrixGame::new(
        vec![vec![int(1), int(-1)], vec![int(-1), a.clone()]],
        vec![vec![int(-1), int(1)], vec![int(1), int(-1)]],
    )?;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let d = int(3) + a;
    let y1 = (int(1) + a) / &d;
    let y2 = int(2) / &d;
    Ok((game, StrategyPair::new(vec![half.clone(), half], vec![y1, y2])?))
}

/// Inverts the family: `a = 2y₁/(1 − y₁) − 1`.
pub fn nash_family_parameter(y1: &Rational) -> Rational {
    Rational::from_integer(BigInt::from(2)) * y1 / (Rational::one() - y1) - Rational::one()
}

fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn vec_mat(v: &[Rational], m: &[Vec<Rational>]) -> Vec<Rational> {
    (0..m[0].len())
        .map(|j| v.iter().zip(m).map(|(x, row)| x * &row[j]).sum())
        .collect()
}

fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Exact check that no pure deviation pays: `xᵀAy ≥ (Ay)_i` and `xᵀBy ≥ (xᵀB)_j`.
pub fn nash_verify(g: &BimatrixGame, s: &StrategyPair) -> Result<bool> {
    if s.x.len() != g.rows() || s.y.len() != g.cols() {
        return Err(Error::Shape(format!(
            "strategies of lengths {}, {} do not fit a {}x{} game",
            s.x.len(),
            s.y.len(),
            g.rows(),
            g.cols()
        )));
    }
    let ay = mat_vec(&g.a, &s.y);
    let xb = vec_mat(&s.x, &g.b);
    let row_value = dot(&s.x, &ay);
    let col_value = dot(&xb, &s.y);
    Ok(ay.iter().all(|v| &row_value >= v) && xb.iter().all(|v| &col_value >= v))
}

/// A basis vector of the kernel of `m` when the kernel is one-dimensional.
fn kernel_line(mut m: Vec<Vec<Rational>>, cols: usize) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rational::one() / &m[row][col];
        for v in m[row].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let factor = other[col].clone();
                for (x, p) in other.iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if cols - pivots.len() != 1 {
        return None;
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut v = vec![Rational::zero(); cols];
    v[free] = Rational::one();
    for (r, &p) in pivots.iter().enumerate() {
        v[p] = -m[r][free].clone();
    }
    Some(v)
}

/// Mixed strategy on `support` making the opponent indifferent over `against`:
/// the kernel of `[M_{against,support} | −1]`, normalized to sum one.
fn indifference(
    payoff: impl Fn(usize, usize) -> Rational,
    against: &[usize],
    support: &[usize],
) -> Option<Vec<Rational>> {
    let cols = support.len() + 1;
    let m: Vec<Vec<Rational>> = against
        .iter()
        .map(|&i| {
            support
                .iter()
                .map(|&j| payoff(i, j))
                .chain([-Rational::one()])
                .collect()
        })
        .collect();
    let mut v = kernel_line(m, cols)?;
    v.pop();
    let total: Rational = v.iter().sum();
    if total.is_zero() {
        return None;
    }
    if total.is_negative() {
        v.iter_mut().for_each(|x| *x = -x.clone());
    }
    if v.iter().any(Signed::is_negative) {
        return None;
    }
    normalize(&v)
}

/// `v / Σv` with robust division as the only division: scaling by a power of
/// two brings the sum into `[0,1]`, and each entry is at most the sum.
fn normalize(v: &[Rational]) -> Option<Vec<Rational>> {
    let mut total: Rational = v.iter().sum();
    let mut scale = Rational::one();
    let two = Rational::from_integer(BigInt::from(2));
    while total > Rational::one() {
        total /= &two;
        scale /= &two;
    }
    v.iter().map(|x| rdiv(&(x * &scale), &total).ok()).collect()
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

fn embed(len: usize, support: &[usize], values: Vec<Rational>) -> Vec<Rational> {
    let mut full = vec![Rational::zero(); len];
    for (&i, v) in support.iter().zip(values) {
        full[i] = v;
    }
    full
}

/// First verified equilibrium over supports ordered by total size, then
/// lexicographically; `None` if every support fails.
pub fn nash_solve(g: &BimatrixGame) -> Option<StrategyPair> {
    let (m, n) = (g.rows(), g.cols());
    for total in 2..=m + n {
        for rs in 1..=m.min(total - 1) {
            let cs = total - rs;
            if cs == 0 || cs > n {
                continue;
            }
            for rows in subsets(m, rs) {
                for cols in subsets(n, cs) {
                    let Some(y) = indifference(|i, j| g.a[i][j].clone(), &rows, &cols) else {
                        continue;
                    };
                    let Some(x) = indifference(|j, i| g.b[i][j].clone(), &cols, &rows) else {
                        continue;
                    };
                    let Ok(s) = StrategyPair::new(embed(m, &rows, x), embed(n, &cols, y)) else {
                        continue;
                    };
                    if nash_verify(g, &s).unwrap_or(false) {
                        return Some(s);
                    }
                }
            }
        }
    }
    None
}
