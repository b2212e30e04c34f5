//! Piecewise-linear functions on `[0,1]` with rational breakpoints.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::foundations::Rational;
use crate::sets::ClosedInterval;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "crate::formats::PwlJson", into = "crate::formats::PwlJson")]
pub struct PwlFunction {
    breakpoints: Vec<(Rational, Rational)>,
}

impl PwlFunction {
    pub fn new(breakpoints: Vec<(Rational, Rational)>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::Shape(
                "a piecewise-linear function needs at least two breakpoints".into(),
            ));
        }
        if !breakpoints[0].0.is_zero() || !breakpoints[breakpoints.len() - 1].0.is_one() {
            return Err(Error::Shape("breakpoints must start at 0 and end at 1".into()));
        }
        if breakpoints.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::Shape("breakpoints must be strictly increasing".into()));
        }
        Ok(PwlFunction { breakpoints })
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.breakpoints
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        if t.is_negative() || t > &Rational::one() {
            return Err(Error::range("argument", format!("{t} is outside [0,1]")));
        }
        Ok(self.eval_unchecked(t))
    }

    pub(crate) fn eval_unchecked(&self, t: &Rational) -> Rational {
        let i = self
            .breakpoints
            .partition_point(|(s, _)| s <= t)
            .clamp(1, self.breakpoints.len() - 1);
        let (t0, v0) = &self.breakpoints[i - 1];
        let (t1, v1) = &self.breakpoints[i];
        v0 + (v1 - v0) * (t - t0) / (t1 - t0)
    }

    /// Whether `f(0)` and `f(1)` have strictly opposite signs.
    pub fn has_sign_change(&self) -> bool {
        let a = &self.breakpoints[0].1;
        let b = &self.breakpoints[self.breakpoints.len() - 1].1;
        (a.is_negative() && b.is_positive()) || (a.is_positive() && b.is_negative())
    }

    /// The zero set as disjoint closed intervals in increasing order; points
    /// are degenerate intervals.
    pub fn zero_set(&self) -> Vec<ClosedInterval> {
        let mut parts: Vec<ClosedInterval> = Vec::new();
        for w in self.breakpoints.windows(2) {
            let ((t0, v0), (t1, v1)) = (&w[0], &w[1]);
            let piece = if v0.is_zero() && v1.is_zero() {
                Some(ClosedInterval {
                    lo: t0.clone(),
                    hi: t1.clone(),
                })
            } else if v0.is_zero() {
                Some(ClosedInterval::point(t0.clone()))
            } else if v1.is_zero() {
                Some(ClosedInterval::point(t1.clone()))
            } else if v0.signum() != v1.signum() {
                Some(ClosedInterval::point(t0 - v0 * (t1 - t0) / (v1 - v0)))
            } else {
                None
            };
            if let Some(p) = piece {
                match parts.last_mut() {
                    Some(last) if last.hi >= p.lo => last.hi = last.hi.clone().max(p.hi),
                    _ => parts.push(p),
                }
            }
        }
        parts
    }

    /// Whether `f` vanishes somewhere on `c`.
    pub fn has_zero_in(&self, c: &ClosedInterval) -> bool {
        self.zero_set().iter().any(|z| z.intersects(c))
    }

    pub fn distance_to_zero_set(&self, x: &Rational) -> Option<Rational> {
        self.zero_set().iter().map(|z| z.distance_to(x)).min()
    }
}

pub fn pwl_eval(f: &PwlFunction, t: &Rational) -> Result<Rational> {
    f.eval(t)
}

pub fn pwl_zero_set(f: &PwlFunction) -> Vec<ClosedInterval> {
    f.zero_set()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::foundations::rat;
    use proptest::prelude::*;

    type Point = ((i64, i64), (i64, i64));

    pub(crate) fn pwl(points: &[Point]) -> PwlFunction {
        PwlFunction::new(points.iter().map(|&((a, b), (c, d))| (rat(a, b), rat(c, d))).collect()).unwrap()
    }

    pub(crate) fn line() -> PwlFunction {
        pwl(&[((0, 1), (-1, 1)), ((1, 1), (2, 1))])
    }

    pub(crate) fn plateau() -> PwlFunction {
        pwl(&[((0, 1), (-1, 1)), ((2, 5), (0, 1)), ((3, 5), (0, 1)), ((1, 1), (1, 1))])
    }

    #[test]
    fn pwl_examples() {
        assert_eq!(line().eval(&rat(1, 3)).unwrap(), rat(0, 1));
        assert_eq!(line().zero_set(), vec![ClosedInterval::point(rat(1, 3))]);
        assert_eq!(
            plateau().zero_set(),
            vec![ClosedInterval::new(rat(2, 5), rat(3, 5)).unwrap()]
        );
        assert_eq!(plateau().eval(&rat(9, 10)).unwrap(), rat(3, 4));
        assert!(line().has_sign_change() && plateau().has_sign_change());
        assert!(line().eval(&rat(3, 2)).is_err());
        assert!(PwlFunction::new(vec![(rat(0, 1), rat(1, 1))]).is_err());
        assert!(PwlFunction::new(vec![(rat(0, 1), rat(1, 1)), (rat(1, 2), rat(1, 1))]).is_err());
        assert!(PwlFunction::new(vec![
            (rat(0, 1), rat(1, 1)),
            (rat(0, 1), rat(1, 1)),
            (rat(1, 1), rat(1, 1))
        ])
        .is_err());
    }

    #[test]
    fn touching_zero_pieces_merge() {
        let f = pwl(&[
            ((0, 1), (1, 1)),
            ((1, 4), (0, 1)),
            ((1, 2), (0, 1)),
            ((3, 4), (0, 1)),
            ((1, 1), (-1, 1)),
        ]);
        assert_eq!(f.zero_set(), vec![ClosedInterval::new(rat(1, 4), rat(3, 4)).unwrap()]);
        let g = pwl(&[((0, 1), (1, 1)), ((1, 2), (0, 1)), ((1, 1), (1, 1))]);
        assert_eq!(g.zero_set(), vec![ClosedInterval::point(rat(1, 2))]);
    }

    proptest! {
        #[test]
        fn zero_set_points_evaluate_to_zero(vals in proptest::collection::vec(-3i64..=3, 2..7)) {
            let n = vals.len() as i64 - 1;
            let f = PwlFunction::new(vals.iter().enumerate().map(|(i, &v)| (rat(i as i64, n), rat(v, 1))).collect()).unwrap();
            for z in f.zero_set() {
                prop_assert!(f.eval(&z.lo).unwrap().is_zero());
                prop_assert!(f.eval(&z.hi).unwrap().is_zero());
                prop_assert!(f.eval(&z.midpoint()).unwrap().is_zero());
            }
            // between consecutive components the sign is constant and nonzero
            for i in 0..=4 * n {
                let t = rat(i, 4 * n);
                let v = f.eval(&t).unwrap();
                prop_assert_eq!(v.is_zero(), f.zero_set().iter().any(|z| z.contains(&t)));
            }
        }
    }
}
