//! Classical executable model of the restoring division schedule; the ground
//! truth every circuit-level test compares against.
//!
//! The model runs the same n-bit register arithmetic as the synthesized
//! circuit: each of the n iterations shifts one dividend bit into an n-bit
//! window, subtracts the divisor modulo `2^n`, and decides the quotient bit
//! from the top bit of the difference. A set top bit means the subtraction
//! underflowed, so the divisor is added back and the quotient bit is 0. The
//! sign-of-difference test is only meaningful while the window value stays
//! below `2^(n-1)` after every restore, which bounds the divisor: the
//! verified valid domain is `1 <= divisor <= 2^(n-1)` with any n-bit
//! dividend. Outside it the modular algorithm is still well defined but no
//! longer computes integer division (dividend 0 with divisor `2^(n-1)+1`
//! already yields a nonzero quotient).

use crate::error::{Error, Result};

/// Per-iteration register snapshot of [`restoring_divide_trace`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterationSnapshot {
    /// 1-based iteration index.
    pub iteration: usize,
    /// Window value after the shift, before the trial subtraction.
    pub window_before: u64,
    /// Window value right after the modular subtraction.
    pub window_after_subtract: u64,
    /// Top bit of the difference; set means the subtraction underflowed.
    pub sign_bit: bool,
    /// Whether the divisor was added back.
    pub restore_fired: bool,
    /// The emitted quotient bit (the complement of the sign bit).
    pub quotient_bit: bool,
    /// Window value handed to the next iteration.
    pub window_after: u64,
}

/// Full execution record of one division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionTrace {
    pub n: usize,
    pub dividend: u64,
    pub divisor: u64,
    pub snapshots: Vec<IterationSnapshot>,
    pub quotient: u64,
    pub remainder: u64,
}

/// Divisors for which the n-bit sign test is sound.
pub fn divisor_domain(n: usize) -> std::ops::RangeInclusive<u64> {
    1..=1u64 << (n - 1)
}

fn check_operands(dividend: u64, divisor: u64, n: usize) -> Result<()> {
    if n == 0 || n > 63 {
        return Err(Error::BadWidth);
    }
    if divisor == 0 {
        return Err(Error::DivisionByZero);
    }
    let limit = 1u64 << n;
    if dividend >= limit || divisor >= limit {
        return Err(Error::DomainViolation(format!(
            "operands must fit in {n} bits (dividend {dividend}, divisor {divisor})"
        )));
    }
    Ok(())
}

fn check_domain(dividend: u64, divisor: u64, n: usize) -> Result<()> {
    check_operands(dividend, divisor, n)?;
    if !divisor_domain(n).contains(&divisor) {
        return Err(Error::DomainViolation(format!(
            "divisor {divisor} outside the verified domain 1..={} for n={n}",
            1u64 << (n - 1)
        )));
    }
    Ok(())
}

fn run_schedule(dividend: u64, divisor: u64, n: usize) -> DivisionTrace {
    let mask = (1u64 << n) - 1;
    let sign_mask = 1u64 << (n - 1);
    let mut remainder = 0u64;
    let mut quotient = 0u64;
    let mut snapshots = Vec::with_capacity(n);
    for iteration in 1..=n {
        let incoming = dividend >> (n - iteration) & 1;
        let window_before = (remainder << 1 | incoming) & mask;
        let window_after_subtract = window_before.wrapping_sub(divisor) & mask;
        let sign_bit = window_after_subtract & sign_mask != 0;
        let (window_after, quotient_bit) = if sign_bit {
            ((window_after_subtract + divisor) & mask, false)
        } else {
            (window_after_subtract, true)
        };
        quotient |= u64::from(quotient_bit) << (n - iteration);
        remainder = window_after;
        snapshots.push(IterationSnapshot {
            iteration,
            window_before,
            window_after_subtract,
            sign_bit,
            restore_fired: sign_bit,
            quotient_bit,
            window_after,
        });
    }
    DivisionTrace {
        n,
        dividend,
        divisor,
        snapshots,
        quotient,
        remainder,
    }
}

/// Restoring division on the verified domain; returns (quotient, remainder).
pub fn restoring_divide(dividend: u64, divisor: u64, n: usize) -> Result<(u64, u64)> {
    let trace = restoring_divide_trace(dividend, divisor, n)?;
    Ok((trace.quotient, trace.remainder))
}

/// Like [`restoring_divide`] but returns the per-iteration snapshots.
pub fn restoring_divide_trace(dividend: u64, divisor: u64, n: usize) -> Result<DivisionTrace> {
    check_domain(dividend, divisor, n)?;
    Ok(run_schedule(dividend, divisor, n))
}

/// Runs the modular schedule for any nonzero n-bit divisor, including
/// divisors outside the verified domain. Out-of-domain results describe the
/// schedule itself, not integer division.
pub fn restoring_divide_trace_unchecked(
    dividend: u64,
    divisor: u64,
    n: usize,
) -> Result<DivisionTrace> {
    check_operands(dividend, divisor, n)?;
    Ok(run_schedule(dividend, divisor, n))
}
