//! Two simulators: a permutation simulator for classical-reversible circuits
//! (cost linear in gate count, any width) and a dense state-vector simulator
//! for small widths, used to certify Clifford+T lowering.

use num_complex::Complex64;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::{Gate, GateKind};

/// Default qubit cap for the dense state-vector path.
pub const DEFAULT_WIDTH_LIMIT: usize = 14;

/// Qubit cap for full unitary extraction.
pub const UNITARY_WIDTH_LIMIT: usize = 6;

/// A computational basis state, stored as a packed bit vector so that wide
/// circuits (a 32-qubit-operand divider spans 96 qubits) simulate cheaply.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisState {
    width: usize,
    blocks: Vec<u64>,
}

impl BasisState {
    pub fn zeros(width: usize) -> BasisState {
        BasisState {
            width,
            blocks: vec![0; width.div_ceil(64)],
        }
    }

    /// Basis state number `index` over `width <= 64` qubits, bit `i` of the
    /// index mapping to qubit `i`.
    pub fn from_index(width: usize, index: u64) -> BasisState {
        assert!(width <= 64, "index form only covers widths up to 64");
        debug_assert!(width == 64 || index < (1u64 << width));
        let mut s = BasisState::zeros(width);
        if !s.blocks.is_empty() {
            s.blocks[0] = index;
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, qubit: usize) -> bool {
        debug_assert!(qubit < self.width);
        self.blocks[qubit / 64] >> (qubit % 64) & 1 == 1
    }

    pub fn set(&mut self, qubit: usize, value: bool) {
        debug_assert!(qubit < self.width);
        let mask = 1u64 << (qubit % 64);
        if value {
            self.blocks[qubit / 64] |= mask;
        } else {
            self.blocks[qubit / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, qubit: usize) {
        debug_assert!(qubit < self.width);
        self.blocks[qubit / 64] ^= 1u64 << (qubit % 64);
    }

    /// Reads the qubits listed in `bits` (LSB first) as an integer.
    pub fn register_value(&self, bits: &[usize]) -> u64 {
        assert!(bits.len() <= 64);
        bits.iter()
            .enumerate()
            .fold(0, |acc, (i, &q)| acc | (u64::from(self.get(q)) << i))
    }

    /// Writes `value` into the qubits listed in `bits` (LSB first).
    pub fn set_register(&mut self, bits: &[usize], value: u64) {
        assert!(bits.len() <= 64);
        for (i, &q) in bits.iter().enumerate() {
            self.set(q, value >> i & 1 == 1);
        }
    }

    /// The basis index, for widths that fit in a `u64`.
    pub fn to_index(&self) -> u64 {
        assert!(self.width <= 64);
        self.blocks.first().copied().unwrap_or(0)
    }
}

fn check_width(circuit: &Circuit, input: &BasisState) -> Result<()> {
    if circuit.width() != input.width() {
        return Err(Error::WidthMismatch(circuit.width(), input.width()));
    }
    Ok(())
}

fn apply_permutation_gate(state: &mut BasisState, gate: &Gate) -> Result<()> {
    let ops = gate.operands();
    match gate.kind() {
        GateKind::X => state.flip(ops[0]),
        GateKind::Cnot => {
            if state.get(ops[0]) {
                state.flip(ops[1]);
            }
        }
        GateKind::Toffoli => {
            if state.get(ops[0]) && state.get(ops[1]) {
                state.flip(ops[2]);
            }
        }
        GateKind::Peres => {
            // (a, b, c) -> (a, a xor b, c xor ab); the AND reads b before it
            // is overwritten.
            if state.get(ops[0]) && state.get(ops[1]) {
                state.flip(ops[2]);
            }
            if state.get(ops[0]) {
                state.flip(ops[1]);
            }
        }
        kind => return Err(Error::NonPermutationGate(kind)),
    }
    Ok(())
}

/// Runs a permutation-gate circuit on a basis state.
///
/// Fails with `NonPermutationGate` on the first `H`/`T`/`S`-family gate; such
/// circuits need [`run_statevector`].
pub fn run_basis(circuit: &Circuit, input: &BasisState) -> Result<BasisState> {
    check_width(circuit, input)?;
    let mut state = input.clone();
    for gate in circuit.gates() {
        apply_permutation_gate(&mut state, gate)?;
    }
    Ok(state)
}

/// Dense amplitude vector over `2^width` basis states, basis index
/// `sum_i bit_i * 2^i` with qubit 0 least significant.
#[derive(Debug, Clone)]
pub struct StateVector {
    width: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, basis_index: usize) -> Complex64 {
        self.amplitudes[basis_index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Basis index with the largest probability, with that probability.
    pub fn dominant_basis_state(&self) -> (u64, f64) {
        let (idx, amp) = self
            .amplitudes
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm_sqr().total_cmp(&b.1.norm_sqr()))
            .expect("non-empty amplitude vector");
        (idx as u64, amp.norm_sqr())
    }
}

fn apply_statevector_gate(amps: &mut [Complex64], gate: &Gate) {
    const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;
    let ops = gate.operands();
    match gate.kind() {
        GateKind::X => permute_flip(amps, ops[0], &[]),
        GateKind::Cnot => permute_flip(amps, ops[1], &[ops[0]]),
        GateKind::Toffoli => permute_flip(amps, ops[2], &[ops[0], ops[1]]),
        GateKind::Peres => {
            permute_flip(amps, ops[2], &[ops[0], ops[1]]);
            permute_flip(amps, ops[1], &[ops[0]]);
        }
        GateKind::H => {
            let bit = 1usize << ops[0];
            for idx in 0..amps.len() {
                if idx & bit == 0 {
                    let (a, b) = (amps[idx], amps[idx | bit]);
                    amps[idx] = (a + b) * FRAC_1_SQRT_2;
                    amps[idx | bit] = (a - b) * FRAC_1_SQRT_2;
                }
            }
        }
        GateKind::T => phase_on_one(
            amps,
            ops[0],
            Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4),
        ),
        GateKind::Tdg => phase_on_one(
            amps,
            ops[0],
            Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_4),
        ),
        GateKind::S => phase_on_one(amps, ops[0], Complex64::new(0.0, 1.0)),
        GateKind::Sdg => phase_on_one(amps, ops[0], Complex64::new(0.0, -1.0)),
    }
}

/// Swaps amplitude pairs across `target` wherever all `controls` are set.
fn permute_flip(amps: &mut [Complex64], target: usize, controls: &[usize]) {
    let tbit = 1usize << target;
    let cmask: usize = controls.iter().map(|&c| 1usize << c).sum();
    for idx in 0..amps.len() {
        if idx & tbit == 0 && idx & cmask == cmask {
            amps.swap(idx, idx | tbit);
        }
    }
}

fn phase_on_one(amps: &mut [Complex64], qubit: usize, phase: Complex64) {
    let bit = 1usize << qubit;
    for (idx, amp) in amps.iter_mut().enumerate() {
        if idx & bit != 0 {
            *amp *= phase;
        }
    }
}

/// Runs any circuit on a basis-state input, returning the full state vector.
/// Guarded at [`DEFAULT_WIDTH_LIMIT`] qubits; use
/// [`run_statevector_with_limit`] to override.
pub fn run_statevector(circuit: &Circuit, input: &BasisState) -> Result<StateVector> {
    run_statevector_with_limit(circuit, input, DEFAULT_WIDTH_LIMIT)
}

pub fn run_statevector_with_limit(
    circuit: &Circuit,
    input: &BasisState,
    limit: usize,
) -> Result<StateVector> {
    check_width(circuit, input)?;
    if circuit.width() > limit {
        return Err(Error::WidthLimitExceeded {
            width: circuit.width(),
            limit,
        });
    }
    let dim = 1usize << circuit.width();
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    amps[input.to_index() as usize] = Complex64::new(1.0, 0.0);
    for gate in circuit.gates() {
        apply_statevector_gate(&mut amps, gate);
    }
    Ok(StateVector {
        width: circuit.width(),
        amplitudes: amps,
    })
}

/// Full `2^w x 2^w` unitary, assembled column by column; `matrix[r][c]`
/// is the amplitude `<r|U|c>`. Capped at [`UNITARY_WIDTH_LIMIT`] qubits.
pub fn unitary_of(circuit: &Circuit) -> Result<Vec<Vec<Complex64>>> {
    if circuit.width() > UNITARY_WIDTH_LIMIT {
        return Err(Error::WidthLimitExceeded {
            width: circuit.width(),
            limit: UNITARY_WIDTH_LIMIT,
        });
    }
    let dim = 1usize << circuit.width();
    let mut columns = Vec::with_capacity(dim);
    for col in 0..dim {
        let input = BasisState::from_index(circuit.width(), col as u64);
        columns.push(run_statevector_with_limit(
            circuit,
            &input,
            UNITARY_WIDTH_LIMIT,
        )?);
    }
    Ok((0..dim)
        .map(|row| columns.iter().map(|sv| sv.amplitude(row)).collect())
        .collect())
}

/// True iff the two circuits' unitaries agree entrywise within `tolerance`.
/// No global-phase normalization is applied.
pub fn check_equivalence(c1: &Circuit, c2: &Circuit, tolerance: f64) -> Result<bool> {
    if c1.width() != c2.width() {
        return Err(Error::WidthMismatch(c1.width(), c2.width()));
    }
    let (u1, u2) = (unitary_of(c1)?, unitary_of(c2)?);
    let max_diff = u1
        .iter()
        .flatten()
        .zip(u2.iter().flatten())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0f64, f64::max);
    Ok(max_diff <= tolerance)
}
