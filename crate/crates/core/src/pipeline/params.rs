use alloc::format;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use crate::{Caps, Error};

/// A non-negative rational `num / den`, used for thresholds that must be
/// compared exactly against integer degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

const fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Ratio {
    pub const fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        let g = if g == 0 { 1 } else { g };
        Ratio { num: num / g, den: den / g }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Strictly between 0 and 1.
    pub fn is_proper_fraction(&self) -> bool {
        self.num > 0 && self.num < self.den
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Accepts `a/b` or a decimal such as `0.25`.
impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Domain(format!("not a rational number: {s:?}"));
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let num: u64 = a.trim().parse().map_err(|_| bad())?;
            let den: u64 = b.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            return Ok(Ratio::new(num, den));
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 12 || (int.is_empty() && frac.is_empty()) {
            return Err(bad());
        }
        let digits = |t: &str| t.is_empty() || t.bytes().all(|b| b.is_ascii_digit());
        if !digits(int) || !digits(frac) {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let whole: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let part: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let num = whole.checked_mul(den).and_then(|w| w.checked_add(part)).ok_or_else(bad)?;
        Ok(Ratio::new(num, den))
    }
}

impl serde::Serialize for Ratio {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// How Step 1 decides when a class has few enough internal edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step1Threshold {
    /// `biex(n', H)` at the order `n'` of the graph outside `X`. Above the
    /// enumeration cap the `fallback` is used if given, otherwise the
    /// best lower bound found by the extremal search.
    ExactBiex { fallback: Option<usize> },
    Supplied(usize),
}

#[derive(Clone, Debug)]
pub struct PipelineParams {
    pub beta: Ratio,
    pub gamma: Ratio,
    pub step1_threshold: Step1Threshold,
    /// Search nodes Step 1 may expand in total.
    pub step1_budget: u64,
    /// Search nodes Step 2 may expand in total; stands in for the
    /// supersaturation constant.
    pub step2_budget: u64,
    /// Node budget for computing the exact Step 1 threshold.
    pub biex_budget: u64,
    /// Seed of the initial balanced partitions.
    pub seed: u64,
    /// Independent local-search starts; the largest cut wins.
    pub restarts: usize,
    pub caps: Caps,
}

impl Default for PipelineParams {
    fn default() -> Self {
        PipelineParams {
            beta: Ratio::new(1, 4),
            gamma: Ratio::new(1, 20),
            step1_threshold: Step1Threshold::ExactBiex { fallback: None },
            step1_budget: 10_000_000,
            step2_budget: 10_000_000,
            biex_budget: crate::extremal::DEFAULT_BUDGET,
            seed: 0,
            restarts: 8,
            caps: Caps::default(),
        }
    }
}

impl PipelineParams {
    pub fn validate(&self) -> Result<(), Error> {
        if !self.beta.is_proper_fraction() || !self.gamma.is_proper_fraction() {
            return Err(Error::Domain(format!(
                "beta and gamma must lie strictly between 0 and 1 (got {} and {})",
                self.beta, self.gamma
            )));
        }
        if self.restarts == 0 {
            return Err(Error::Domain(String::from("at least one partition restart is needed")));
        }
        Ok(())
    }
}

/// `1 / (100 e(H)^4)`.
pub fn asymptotic_beta(e_h: usize) -> f64 {
    1.0 / (100.0 * (e_h as f64).powi_core(4))
}

/// `beta^12 / (1000 e(H)^4)` with `beta` from [`asymptotic_beta`].
pub fn asymptotic_gamma(e_h: usize) -> f64 {
    asymptotic_beta(e_h).powi_core(12) / (1000.0 * (e_h as f64).powi_core(4))
}

trait PowiCore {
    fn powi_core(self, k: u32) -> f64;
}

impl PowiCore for f64 {
    fn powi_core(self, k: u32) -> f64 {
        (0..k).fold(1.0, |acc, _| acc * self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_and_fractions() {
        assert_eq!("0.25".parse::<Ratio>().unwrap(), Ratio::new(1, 4));
        assert_eq!("1/3".parse::<Ratio>().unwrap(), Ratio::new(1, 3));
        assert_eq!("2/6".parse::<Ratio>().unwrap(), Ratio::new(1, 3));
        assert_eq!(".5".parse::<Ratio>().unwrap(), Ratio::new(1, 2));
        assert!("abc".parse::<Ratio>().is_err());
        assert!("1/0".parse::<Ratio>().is_err());
        assert!("-0.1".parse::<Ratio>().is_err());
    }

    #[test]
    fn asymptotic_constants() {
        assert!((asymptotic_beta(3) - 1.0 / 8100.0).abs() < 1e-18);
        assert!(asymptotic_gamma(3) > 0.0 && asymptotic_gamma(3) < 1e-40);
    }
}
