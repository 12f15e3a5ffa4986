//! Register bookkeeping for the divider.
//!
//! A divider over `n`-qubit operands uses `3n` physical qubits split into
//! three registers:
//!
//! * `q_bits` — the dividend register (consumed during synthesis),
//! * `d_bits` — the divisor register (preserved),
//! * `r_bits` — the remainder register, the `n` ancillae that must start
//!   in `|0>`.
//!
//! All registers are least-significant-bit first: index 0 of a list is bit 0
//! of the value it encodes. After synthesis completes, `quotient_bits` and
//! `remainder_bits` name the physical qubits holding the outputs; the
//! quotient ends up on the original `r_bits` and the remainder on the
//! original `q_bits`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterLayout {
    q_bits: Vec<usize>,
    r_bits: Vec<usize>,
    d_bits: Vec<usize>,
    quotient_bits: Vec<usize>,
    remainder_bits: Vec<usize>,
}

impl RegisterLayout {
    /// Builds a layout from three disjoint `n`-qubit registers.
    pub fn new(q_bits: Vec<usize>, r_bits: Vec<usize>, d_bits: Vec<usize>) -> Result<Self> {
        let n = q_bits.len();
        if n == 0 {
            return Err(Error::BadWidth);
        }
        for reg in [&r_bits, &d_bits] {
            if reg.len() != n {
                return Err(Error::RegisterLength {
                    expected: n,
                    got: reg.len(),
                });
            }
        }
        let mut seen = std::collections::HashSet::new();
        for &q in q_bits.iter().chain(&r_bits).chain(&d_bits) {
            if !seen.insert(q) {
                return Err(Error::OverlappingRegisters(q));
            }
        }
        Ok(RegisterLayout {
            q_bits,
            r_bits,
            d_bits,
            quotient_bits: Vec::new(),
            remainder_bits: Vec::new(),
        })
    }

    /// The layout used by the divider builder: dividend on qubits `0..n`,
    /// divisor on `n..2n`, remainder ancillae on `2n..3n`.
    pub fn standard(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadWidth);
        }
        RegisterLayout::new(
            (0..n).collect(),
            (2 * n..3 * n).collect(),
            (n..2 * n).collect(),
        )
    }

    /// Operand width in qubits.
    pub fn n(&self) -> usize {
        self.q_bits.len()
    }

    /// One past the largest physical index in use.
    pub fn physical_width(&self) -> usize {
        self.q_bits
            .iter()
            .chain(&self.r_bits)
            .chain(&self.d_bits)
            .max()
            .map_or(0, |&q| q + 1)
    }

    pub fn q_bits(&self) -> &[usize] {
        &self.q_bits
    }

    pub fn r_bits(&self) -> &[usize] {
        &self.r_bits
    }

    pub fn d_bits(&self) -> &[usize] {
        &self.d_bits
    }

    /// Physical qubits of the quotient, LSB first. Filled in as iterations
    /// retire their spare qubits; complete only after the last iteration.
    pub fn quotient_bits(&self) -> &[usize] {
        &self.quotient_bits
    }

    /// Physical qubits of the remainder, LSB first. Tracks the current
    /// combined window during synthesis.
    pub fn remainder_bits(&self) -> &[usize] {
        &self.remainder_bits
    }

    /// Number of iterations already recorded in this layout.
    pub(crate) fn iterations_done(&self) -> usize {
        self.quotient_bits.len()
    }

    pub(crate) fn set_outputs(&mut self, quotient_bits: Vec<usize>, remainder_bits: Vec<usize>) {
        self.quotient_bits = quotient_bits;
        self.remainder_bits = remainder_bits;
    }
}
