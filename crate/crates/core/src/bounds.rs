//! Exact evaluation of the counting bounds and the base comparison.
//!
//! Bounds are kept as `coefficient * base^(p/q)` with big-integer
//! coefficient and base. Inequalities between roots are decided on
//! integer powers only; floats are for display.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::constructions::decimal;
use crate::cycle_enum::BigCount;
use crate::error::{Error, Result};

pub fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

fn pow(b: &BigUint, e: usize) -> BigUint {
    b.pow(u32::try_from(e).expect("exponent fits in u32"))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `coefficient * base^(num/den)`, with the exponent in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerExpr {
    #[serde(serialize_with = "decimal")]
    pub coefficient: BigUint,
    #[serde(serialize_with = "decimal")]
    pub base: BigUint,
    pub num: i64,
    pub den: u64,
}

impl PowerExpr {
    fn new(coefficient: BigUint, base: BigUint, num: i64, den: u64) -> Self {
        let g = gcd(num.unsigned_abs(), den).max(1);
        PowerExpr {
            coefficient,
            base,
            num: num / g as i64,
            den: den / g,
        }
    }

    /// The exact value, when the exponent is a nonnegative integer.
    pub fn exact(&self) -> Option<BigUint> {
        if self.den != 1 || self.num < 0 {
            return None;
        }
        Some(&self.coefficient * pow(&self.base, self.num as usize))
    }

    pub fn to_f64(&self) -> f64 {
        let ln = ln_big(&self.coefficient) + ln_big(&self.base) * self.num as f64 / self.den as f64;
        ln.exp()
    }
}

impl fmt::Display for PowerExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(v) => write!(f, "{v}"),
            None => write!(
                f,
                "{} * {}^({}/{})",
                self.coefficient, self.base, self.num, self.den
            ),
        }
    }
}

fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("finite").ln();
    }
    let shift = bits - 900;
    (x >> shift).to_f64().expect("finite").ln() + shift as f64 * std::f64::consts::LN_2
}

/// `(r-1)^2 ((r-2)!)^(n/(r+1))`.
pub fn haythorpe_bound(n: usize, r: usize) -> Result<PowerExpr> {
    if r < 3 || n < 1 {
        return Err(Error::Precondition(format!(
            "need r >= 3 and n >= 1, got r={r} n={n}"
        )));
    }
    let c = BigUint::from((r - 1) * (r - 1));
    Ok(PowerExpr::new(
        c,
        factorial(r - 2),
        n as i64,
        (r + 1) as u64,
    ))
}

/// `2 ((r-1)!)^(r-2) ((r-2)!)^((n - r^2 - r + 4)/(r+1))`.
pub fn goedgebeur_bound(n: usize, r: usize) -> Result<PowerExpr> {
    if r < 5 {
        return Err(Error::Precondition(format!("need r >= 5, got {r}")));
    }
    let c = BigUint::from(2u32) * pow(&factorial(r - 1), r - 2);
    let num = n as i64 - (r * r + r) as i64 + 4;
    Ok(PowerExpr::new(c, factorial(r - 2), num, (r + 1) as u64))
}

/// Old radicand `(r-2)!` and new radicand `(2r-8)((r-4)!)^2 (r-1)!`.
pub fn radicands(r: usize) -> (BigUint, BigUint) {
    let f = factorial(r - 4);
    let new = BigUint::from(2 * r - 8) * &f * &f * factorial(r - 1);
    (factorial(r - 2), new)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundRow {
    pub r: usize,
    /// `(r-2)!`, under a root of index `r + 1`.
    #[serde(serialize_with = "decimal")]
    pub old_radicand: BigCount,
    pub old_index: usize,
    /// `(2r-8)((r-4)!)^2 (r-1)!`, under a root of index `3r + 1`.
    #[serde(serialize_with = "decimal")]
    pub new_radicand: BigCount,
    pub new_index: usize,
    pub old_base: f64,
    pub new_base: f64,
}

pub fn comparison_table(r_min: usize, r_max: usize) -> Result<Vec<BoundRow>> {
    if r_min < 5 {
        return Err(Error::Precondition(format!("need r_min >= 5, got {r_min}")));
    }
    Ok((r_min..=r_max)
        .map(|r| {
            let (old, new) = radicands(r);
            BoundRow {
                r,
                old_base: nth_root_f64(&old, r + 1),
                new_base: nth_root_f64(&new, 3 * r + 1),
                old_radicand: old,
                old_index: r + 1,
                new_radicand: new,
                new_index: 3 * r + 1,
            }
        })
        .collect())
}

pub fn nth_root_f64(x: &BigUint, k: usize) -> f64 {
    (ln_big(x) / k as f64).exp()
}

/// Checks `|approx - x^(1/k)| < 10^-digits` using the integer root of
/// `x * 10^(k digits)`.
pub fn root_within(x: &BigUint, k: usize, approx: f64, digits: u32) -> bool {
    let scale = BigUint::from(10u32).pow(digits + 3);
    let shifted = x * pow(&scale, k);
    let floor = shifted.nth_root(u32::try_from(k).expect("index fits in u32"));
    // approx scaled to the same grid; 1000 grid units = 10^-digits.
    let Some(a) = BigUint::parse_bytes(
        format!("{:.0}", approx * 10f64.powi(digits as i32 + 3)).as_bytes(),
        10,
    ) else {
        return false;
    };
    let diff = if a > floor { &a - &floor } else { &floor - &a };
    diff < BigUint::from(1000u32)
}

/// `(2r-8)^(r+1) ((r-4)!)^(2r+2) (r-1)^(r+1) ((r-2)!)^(r+1) < ((r-2)!)^(3r+1)`,
/// the new base being smaller than the old one, in exact arithmetic.
pub fn verify_base_inequality(r: usize) -> Result<bool> {
    if r < 5 {
        return Err(Error::Precondition(format!("need r >= 5, got {r}")));
    }
    let f2 = factorial(r - 2);
    let lhs = pow(&BigUint::from(2 * r - 8), r + 1)
        * pow(&factorial(r - 4), 2 * r + 2)
        * pow(&BigUint::from(r - 1), r + 1)
        * pow(&f2, r + 1);
    Ok(lhs < pow(&f2, 3 * r + 1))
}

/// `c1 c2 c3^(k-1)`; `k = 0` is treated as `k = 1`.
pub fn predicted_chain_count(c1: &BigCount, c2: &BigCount, c3: &BigCount, k: usize) -> BigCount {
    c1 * c2 * pow(c3, k.saturating_sub(1))
}

pub fn render_table_text(rows: &[BoundRow]) -> String {
    let mut out = format!(
        "{:>3}  {:>24}  {:>10}  {:>24}  {:>10}\n",
        "r", "old radicand", "old base", "new radicand", "new base"
    );
    for row in rows {
        out += &format!(
            "{:>3}  {:>24}  {:>10.3}  {:>24}  {:>10.3}\n",
            row.r,
            format!("({})^(1/{})", row.old_radicand, row.old_index),
            row.old_base,
            format!("({})^(1/{})", row.new_radicand, row.new_index),
            row.new_base
        );
    }
    out
}

pub fn render_table_csv(rows: &[BoundRow]) -> String {
    let mut out =
        String::from("r,old_radicand,old_index,old_base,new_radicand,new_index,new_base\n");
    for row in rows {
        out += &format!(
            "{},{},{},{:.12},{},{},{:.12}\n",
            row.r,
            row.old_radicand,
            row.old_index,
            row.old_base,
            row.new_radicand,
            row.new_index,
            row.new_base
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn haythorpe_values() {
        assert_eq!(haythorpe_bound(6, 5).unwrap().exact(), Some(big(96)));
        assert_eq!(haythorpe_bound(12, 5).unwrap().exact(), Some(big(576)));
        assert_eq!(haythorpe_bound(7, 6).unwrap().exact(), Some(big(600)));
        let frac = haythorpe_bound(8, 5).unwrap();
        assert_eq!((frac.num, frac.den), (4, 3));
        assert!(frac.exact().is_none());
        assert!((frac.to_f64() - 16.0 * 6f64.powf(4.0 / 3.0)).abs() < 1e-9);
    }

    #[test]
    fn goedgebeur_values() {
        assert_eq!(goedgebeur_bound(26, 5).unwrap().exact(), Some(big(27648)));
        assert_eq!(
            goedgebeur_bound(32, 5).unwrap().exact(),
            Some(big(27648 * 6))
        );
        assert_eq!(
            goedgebeur_bound(38, 6).unwrap().exact(),
            Some(big(2 * 120u64.pow(4)))
        );
        assert!(goedgebeur_bound(20, 4).is_err());
    }

    #[test]
    fn table_rows() {
        let rows = comparison_table(5, 8).unwrap();
        let got: Vec<(String, String)> = rows
            .iter()
            .map(|r| (format!("{:.3}", r.old_base), format!("{:.3}", r.new_base)))
            .collect();
        let want = [
            ("1.348", "1.274"),
            ("1.575", "1.489"),
            ("1.819", "1.722"),
            ("2.077", "1.971"),
        ];
        for (g, w) in got.iter().zip(want) {
            assert_eq!((g.0.as_str(), g.1.as_str()), w);
        }
        assert_eq!(rows[0].new_radicand, big(48));
        assert_eq!(rows[2].old_radicand, big(120));
        for row in &rows {
            assert!(root_within(
                &row.old_radicand,
                row.old_index,
                row.old_base,
                9
            ));
            assert!(root_within(
                &row.new_radicand,
                row.new_index,
                row.new_base,
                9
            ));
        }
        assert!(!root_within(&big(48), 16, 1.2745, 9));
    }

    #[test]
    fn inequality_holds() {
        for r in 5..=64 {
            assert!(verify_base_inequality(r).unwrap(), "r={r}");
        }
        assert!(verify_base_inequality(4).is_err());
    }

    #[test]
    fn chain_counts() {
        let c2 = big(7);
        assert_eq!(predicted_chain_count(&big(24), &c2, &big(48), 1), big(168));
        assert_eq!(predicted_chain_count(&big(1), &big(1), &big(1), 10), big(1));
        assert_eq!(
            predicted_chain_count(&big(24), &c2, &big(48), 3),
            big(24 * 7 * 2304)
        );
    }
}
