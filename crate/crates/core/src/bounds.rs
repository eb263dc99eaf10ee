//! Closed-form bounds on `n(r|χ)`, the least order of an `r`-regular graph
//! with chromatic number `χ`.
//!
//! With `r = a(χ-1) + b`, `0 <= b < χ-1`:
//!
//! * lower: `⌈rχ/(χ-1)⌉`, raised to the next even number when `r` is odd;
//! * upper: `aχ(b+1)` from `T(aχ, χ) □ K_{b+1}`, and
//!   `min{2⌊rχ/(χ-1)⌋, aχ(b+1)}` using two joined Turán graphs.

use serde::Serialize;

use crate::constructions::decompose;
use crate::error::{Error, Result};

/// `2 <= χ <= r + 1`, plus the trivial pair `(0, 1)`.
pub fn feasible(r: usize, chi: usize) -> bool {
    (r == 0 && chi == 1) || (2..=r + 1).contains(&chi)
}

fn check(r: usize, chi: usize) -> Result<()> {
    if feasible(r, chi) {
        Ok(())
    } else {
        Err(Error::Infeasible { r, chi })
    }
}

/// `⌈rχ/(χ-1)⌉` without the parity adjustment.
pub fn lower_bound_raw(r: usize, chi: usize) -> Result<usize> {
    check(r, chi)?;
    if chi == 1 {
        return Ok(1);
    }
    Ok((r * chi).div_ceil(chi - 1))
}

pub fn lower_bound(r: usize, chi: usize) -> Result<usize> {
    let raw = lower_bound_raw(r, chi)?;
    Ok(if r % 2 == 1 && raw % 2 == 1 {
        raw + 1
    } else {
        raw
    })
}

pub fn upper_bound_thm2(r: usize, chi: usize) -> Result<usize> {
    check(r, chi)?;
    if chi == 1 {
        return Ok(1);
    }
    let (a, b) = decompose(r, chi)?;
    Ok(a * chi * (b + 1))
}

pub fn upper_bound_thm3(r: usize, chi: usize) -> Result<usize> {
    let thm2 = upper_bound_thm2(r, chi)?;
    if chi == 1 {
        return Ok(1);
    }
    Ok(thm2.min(2 * (r * chi / (chi - 1))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub r: usize,
    pub chi: usize,
    pub lower: usize,
    pub lower_raw: usize,
    pub upper_thm2: usize,
    pub upper_thm3: usize,
    pub a: usize,
    pub b: usize,
}

pub fn bounds_report(r: usize, chi: usize) -> Result<BoundsReport> {
    let (a, b) = if chi == 1 { (0, 0) } else { decompose(r, chi)? };
    Ok(BoundsReport {
        r,
        chi,
        lower: lower_bound(r, chi)?,
        lower_raw: lower_bound_raw(r, chi)?,
        upper_thm2: upper_bound_thm2(r, chi)?,
        upper_thm3: upper_bound_thm3(r, chi)?,
        a,
        b,
    })
}
