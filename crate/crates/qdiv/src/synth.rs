//! Synthesis of the arithmetic blocks and the full restoring divider.
//!
//! The building blocks are an in-place ripple-carry adder with no ancilla
//! and no carry-out qubit, the subtractor wrapping it in complements, and a
//! conditional adder derived from the adder by putting an extra control on
//! its sum-writing CNOTs. One divider iteration chains subtract, sign
//! extraction, conditional restore and a quotient-bit complement over a
//! sliding n-qubit window; the full divider repeats that n times.
//!
//! # The adder netlist
//!
//! `build_adder` emits a fixed carry-ripple network that stores carries
//! temporarily in the `a` register. Writing `c_i` for the carry into bit `i`,
//! the phases are:
//!
//! 1. `b_i ^= a_i` for `i = 1..n`,
//! 2. a descending CNOT chain `a_{i+1} ^= a_i` for `i = n-2..1`,
//! 3. an ascending Toffoli ladder leaving `a_{i+1} = a_{i+1} ^ c_{i+1}`,
//! 4. per bit, high to low: the sum-writing CNOT `b_i ^= a_i`, then a
//!    Toffoli undoing the carry in `a_i`,
//! 5. and 6. mirrors of phases 2 and 1, restoring `a` and finishing `b`.
//!
//! Phases 1-3 and the non-CNOT half of phase 4 together with phases 5-6 are
//! an exact compute/uncompute pair: with the n sum-writing CNOTs deleted the
//! whole netlist is the identity. That is what makes the conditional adder a
//! pure substitution: controlling only those n gates gives add-or-identity
//! while every carry gate runs (and undoes itself) regardless of the
//! control. Toffoli-or-Peres count is `2n-2` for the adder and subtractor
//! and `3n-2` for the conditional adder.
//!
//! # Window bookkeeping
//!
//! Iteration `i` (1-based) of the divider operates on the combined window
//! `[Q[n-i], ..., Q[n-1], R[0], ..., R[n-1-i]]` (LSB first) and uses
//! `R[n-i]` as its spare zero qubit; advancing the window by one dividend
//! qubit per iteration realizes the left shift with no data movement. The
//! spare receives the sign of the trial subtraction, steers the restore,
//! and retires as quotient bit `n-i`. After n iterations the quotient sits
//! on the original remainder register and the remainder on the original
//! dividend register.

use crate::circuit::{Circuit, Level};
use crate::error::{Error, Result};
use crate::gate::Gate;
use crate::layout::RegisterLayout;

/// A synthesized divider: the logical circuit plus the register map that
/// says where inputs go in and where the outputs come out.
#[derive(Debug, Clone)]
pub struct DividerInstance {
    n: usize,
    circuit: Circuit,
    layout: RegisterLayout,
}

impl DividerInstance {
    /// Operand width in qubits.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    /// Qubits that must be initialized to `|0>`.
    pub fn ancilla_count(&self) -> usize {
        self.layout.r_bits().len()
    }
}

fn validate_registers(n: usize, a_bits: &[usize], b_bits: &[usize]) -> Result<()> {
    if n == 0 {
        return Err(Error::BadWidth);
    }
    for reg in [a_bits, b_bits] {
        if reg.len() != n {
            return Err(Error::RegisterLength {
                expected: n,
                got: reg.len(),
            });
        }
    }
    let mut seen = std::collections::HashSet::new();
    for &q in a_bits.iter().chain(b_bits) {
        if !seen.insert(q) {
            return Err(Error::OverlappingRegisters(q));
        }
    }
    Ok(())
}

fn width_for(bits: &[&[usize]]) -> usize {
    bits.iter()
        .flat_map(|reg| reg.iter())
        .max()
        .map_or(0, |&q| q + 1)
}

/// Emits the frozen adder netlist into `circuit`. With `ctrl` set, the n
/// sum-writing CNOTs become Toffolis controlled on it; nothing else changes.
fn emit_adder(
    circuit: &mut Circuit,
    a_bits: &[usize],
    b_bits: &[usize],
    ctrl: Option<usize>,
) -> Result<()> {
    let n = a_bits.len();
    let a = |i: usize| a_bits[i];
    let b = |i: usize| b_bits[i];

    for i in 1..n {
        circuit.append(Gate::cnot(a(i), b(i)))?;
    }
    for i in (1..n.saturating_sub(1)).rev() {
        circuit.append(Gate::cnot(a(i), a(i + 1)))?;
    }
    for i in 0..n.saturating_sub(1) {
        circuit.append(Gate::toffoli(a(i), b(i), a(i + 1)))?;
    }
    for i in (0..n).rev() {
        match ctrl {
            None => circuit.append(Gate::cnot(a(i), b(i)))?,
            Some(c) => circuit.append(Gate::toffoli(c, a(i), b(i)))?,
        }
        if i > 0 {
            circuit.append(Gate::toffoli(a(i - 1), b(i - 1), a(i)))?;
        }
    }
    for i in 1..n.saturating_sub(1) {
        circuit.append(Gate::cnot(a(i), a(i + 1)))?;
    }
    for i in 1..n {
        circuit.append(Gate::cnot(a(i), b(i)))?;
    }
    Ok(())
}

/// In-place modular adder `|a, b> -> |a, (a+b) mod 2^n>`.
///
/// Uses no ancilla and no carry-out qubit; exactly `2n-2` Toffoli gates plus
/// CNOTs. The width of the returned circuit is one past the largest operand
/// index.
pub fn build_adder(n: usize, a_bits: &[usize], b_bits: &[usize]) -> Result<Circuit> {
    validate_registers(n, a_bits, b_bits)?;
    let mut circuit = Circuit::new(width_for(&[a_bits, b_bits]), Level::Logical);
    emit_adder(&mut circuit, a_bits, b_bits, None)?;
    Ok(circuit)
}

/// In-place modular subtractor `|a, b> -> |a, (b-a) mod 2^n>`, realized as
/// `b - a = NOT(NOT(b) + a)`: X on every `b` qubit, the adder, X again.
pub fn build_subtractor(n: usize, a_bits: &[usize], b_bits: &[usize]) -> Result<Circuit> {
    validate_registers(n, a_bits, b_bits)?;
    let mut circuit = Circuit::new(width_for(&[a_bits, b_bits]), Level::Logical);
    for &q in b_bits {
        circuit.append(Gate::x(q))?;
    }
    emit_adder(&mut circuit, a_bits, b_bits, None)?;
    for &q in b_bits {
        circuit.append(Gate::x(q))?;
    }
    Ok(circuit)
}

/// Conditional adder: `|B> -> |(B+A) mod 2^n>` when `ctrl` is set, identity
/// when clear; `A` and `ctrl` come out unchanged either way.
///
/// Built from the adder netlist by replacing exactly its n sum-writing CNOTs
/// with Toffolis controlled on `ctrl`; the carry chain stays uncontrolled.
/// Toffoli count is `3n-2`.
pub fn build_conditional_adder(
    n: usize,
    ctrl: usize,
    a_bits: &[usize],
    b_bits: &[usize],
) -> Result<Circuit> {
    validate_registers(n, a_bits, b_bits)?;
    if a_bits.contains(&ctrl) || b_bits.contains(&ctrl) {
        return Err(Error::CtrlOverlap(ctrl));
    }
    let mut circuit = Circuit::new(width_for(&[a_bits, b_bits, &[ctrl]]), Level::Logical);
    emit_adder(&mut circuit, a_bits, b_bits, Some(ctrl))?;
    Ok(circuit)
}

/// The combined subtraction window of a 1-based iteration: the dividend
/// qubits consumed so far (lowest last) followed by the low remainder
/// qubits.
fn iteration_window(layout: &RegisterLayout, iteration: usize) -> Vec<usize> {
    let n = layout.n();
    let mut window: Vec<usize> = layout.q_bits()[n - iteration..].to_vec();
    window.extend_from_slice(&layout.r_bits()[..n - iteration]);
    window
}

/// One restoring-division iteration over the layout's current window.
///
/// Emits, in order: the subtractor taking the divisor out of the window, a
/// CNOT copying the window's sign bit onto the iteration's spare zero qubit,
/// the conditional adder restoring the divisor when the sign fired, and an X
/// turning the spare into the quotient bit. Returns the circuit fragment
/// (full divider width) and the layout advanced by one dividend qubit.
pub fn build_divider_iteration(
    n: usize,
    layout: &RegisterLayout,
    iteration: usize,
) -> Result<(Circuit, RegisterLayout)> {
    if n == 0 {
        return Err(Error::BadWidth);
    }
    if layout.n() != n {
        return Err(Error::RegisterLength {
            expected: n,
            got: layout.n(),
        });
    }
    if iteration == 0 || iteration > n {
        return Err(Error::LayoutExhausted(iteration));
    }
    if layout.iterations_done() != iteration - 1 {
        return Err(Error::BadLayout(format!(
            "iteration {} expects {} retired quotient bits, layout has {}",
            iteration,
            iteration - 1,
            layout.iterations_done()
        )));
    }

    let window = iteration_window(layout, iteration);
    let spare = layout.r_bits()[n - iteration];
    let mut fragment = Circuit::new(layout.physical_width(), Level::Logical);

    // Trial subtraction: window -= divisor (mod 2^n).
    let sub = build_subtractor(n, layout.d_bits(), &window)?;
    fragment.extend(sub.gates().iter().cloned())?;
    // The spare was the previous window's top bit and is zero for in-domain
    // inputs, so this copies out the sign of the difference.
    fragment.append(Gate::cnot(window[n - 1], spare))?;
    // Restore the divisor where the subtraction went negative.
    let restore = build_conditional_adder(n, spare, layout.d_bits(), &window)?;
    fragment.extend(restore.gates().iter().cloned())?;
    // Quotient bit = NOT sign.
    fragment.append(Gate::x(spare))?;

    let mut advanced = layout.clone();
    advanced.set_outputs(layout.r_bits()[n - iteration..].to_vec(), window);
    Ok((fragment, advanced))
}

/// Synthesizes the full n-iteration restoring divider over `3n` qubits.
///
/// Inputs: dividend on the layout's `q_bits`, divisor on `d_bits`, the
/// `r_bits` ancillae in `|0>`. Outputs: quotient on the retired spare qubits
/// (the original `r_bits`, LSB first), remainder on the final window (the
/// original `q_bits`), divisor unchanged.
pub fn build_divider(n: usize) -> Result<DividerInstance> {
    let mut layout = RegisterLayout::standard(n)?;
    let mut circuit = Circuit::new(3 * n, Level::Logical);
    for iteration in 1..=n {
        let (fragment, advanced) = build_divider_iteration(n, &layout, iteration)?;
        circuit.extend(fragment.gates().iter().cloned())?;
        layout = advanced;
    }
    Ok(DividerInstance { n, circuit, layout })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Level;
    use crate::gate::GateKind;
    use crate::lowering::lower;
    use crate::refmodel;
    use crate::sim::{run_basis, BasisState};
    use proptest::prelude::*;

    fn toffoli_like(c: &Circuit) -> usize {
        c.count_kind(GateKind::Toffoli) + c.count_kind(GateKind::Peres)
    }

    fn t_count(c: &Circuit) -> usize {
        let low = lower(c, Level::CliffordT).unwrap();
        low.count_kind(GateKind::T) + low.count_kind(GateKind::Tdg)
    }

    /// Runs an adder-shaped circuit and reads back both registers.
    fn run_two_register(
        circuit: &Circuit,
        a_bits: &[usize],
        b_bits: &[usize],
        a: u64,
        b: u64,
    ) -> (u64, u64) {
        let mut state = BasisState::zeros(circuit.width());
        state.set_register(a_bits, a);
        state.set_register(b_bits, b);
        let out = run_basis(circuit, &state).unwrap();
        (out.register_value(a_bits), out.register_value(b_bits))
    }

    #[test]
    fn adder_n1_is_a_single_cnot() {
        let c = build_adder(1, &[0], &[1]).unwrap();
        assert_eq!(c.gates(), &[Gate::cnot(0, 1)]);
        assert_eq!(toffoli_like(&c), 0);
    }

    #[test]
    fn adder_exhaustive_small_widths() {
        for n in 1..=5usize {
            let a_bits: Vec<usize> = (0..n).collect();
            let b_bits: Vec<usize> = (n..2 * n).collect();
            let c = build_adder(n, &a_bits, &b_bits).unwrap();
            assert_eq!(toffoli_like(&c), 2 * n - 2);
            for a in 0..1u64 << n {
                for b in 0..1u64 << n {
                    let (ra, rb) = run_two_register(&c, &a_bits, &b_bits, a, b);
                    assert_eq!(ra, a, "a must be preserved");
                    assert_eq!(rb, (a + b) & ((1 << n) - 1), "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn adder_spot_example() {
        let a_bits = [0, 1, 2];
        let b_bits = [3, 4, 5];
        let c = build_adder(3, &a_bits, &b_bits).unwrap();
        let (ra, rb) = run_two_register(&c, &a_bits, &b_bits, 5, 6);
        assert_eq!((ra, rb), (5, 3), "(5+6) mod 8 = 3");
    }

    #[test]
    fn adder_t_count_formula() {
        let a_bits: Vec<usize> = (0..4).collect();
        let b_bits: Vec<usize> = (4..8).collect();
        let c = build_adder(4, &a_bits, &b_bits).unwrap();
        assert_eq!(t_count(&c), 14 * 4 - 14);
    }

    #[test]
    fn adder_rejects_bad_registers() {
        assert_eq!(build_adder(0, &[], &[]).unwrap_err(), Error::BadWidth);
        assert_eq!(
            build_adder(2, &[0, 1], &[1, 2]).unwrap_err(),
            Error::OverlappingRegisters(1)
        );
        assert_eq!(
            build_adder(2, &[0], &[1, 2]).unwrap_err(),
            Error::RegisterLength {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn subtractor_exhaustive_small_widths() {
        for n in 1..=5usize {
            let a_bits: Vec<usize> = (0..n).collect();
            let b_bits: Vec<usize> = (n..2 * n).collect();
            let c = build_subtractor(n, &a_bits, &b_bits).unwrap();
            assert_eq!(toffoli_like(&c), 2 * n - 2);
            let mask = (1u64 << n) - 1;
            for a in 0..=mask {
                for b in 0..=mask {
                    let (ra, rb) = run_two_register(&c, &a_bits, &b_bits, a, b);
                    assert_eq!(ra, a);
                    assert_eq!(rb, b.wrapping_sub(a) & mask, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn subtractor_spot_examples() {
        let a_bits = [0, 1, 2];
        let b_bits = [3, 4, 5];
        let c = build_subtractor(3, &a_bits, &b_bits).unwrap();
        assert_eq!(run_two_register(&c, &a_bits, &b_bits, 3, 1), (3, 6));

        let a_bits: Vec<usize> = (0..4).collect();
        let b_bits: Vec<usize> = (4..8).collect();
        let c = build_subtractor(4, &a_bits, &b_bits).unwrap();
        assert_eq!(run_two_register(&c, &a_bits, &b_bits, 3, 5), (3, 2));
    }

    #[test]
    fn subtractor_t_count_formula() {
        let a_bits: Vec<usize> = (0..5).collect();
        let b_bits: Vec<usize> = (5..10).collect();
        let c = build_subtractor(5, &a_bits, &b_bits).unwrap();
        assert_eq!(t_count(&c), 14 * 5 - 14);
    }

    #[test]
    fn subtractor_wraps_adder_in_complements() {
        let a_bits = [0, 1];
        let b_bits = [2, 3];
        let sub = build_subtractor(2, &a_bits, &b_bits).unwrap();
        let add = build_adder(2, &a_bits, &b_bits).unwrap();
        assert_eq!(sub.len(), add.len() + 4);
        assert_eq!(sub.gates()[0], Gate::x(2));
        assert_eq!(sub.gates()[1], Gate::x(3));
        assert_eq!(&sub.gates()[2..2 + add.len()], add.gates());
        assert_eq!(sub.gates()[sub.len() - 1], Gate::x(3));
    }

    #[test]
    fn conditional_adder_n1_is_a_single_toffoli() {
        let c = build_conditional_adder(1, 2, &[0], &[1]).unwrap();
        assert_eq!(c.gates(), &[Gate::toffoli(2, 0, 1)]);
        assert_eq!(t_count(&c), 7, "21*1 - 14 = 7");
    }

    #[test]
    fn conditional_adder_exhaustive() {
        for n in 1..=4usize {
            let ctrl = 2 * n;
            let a_bits: Vec<usize> = (0..n).collect();
            let b_bits: Vec<usize> = (n..2 * n).collect();
            let c = build_conditional_adder(n, ctrl, &a_bits, &b_bits).unwrap();
            assert_eq!(toffoli_like(&c), 3 * n - 2);
            let mask = (1u64 << n) - 1;
            for ctrl_in in 0..=1u64 {
                for a in 0..=mask {
                    for b in 0..=mask {
                        let mut state = BasisState::zeros(c.width());
                        state.set_register(&a_bits, a);
                        state.set_register(&b_bits, b);
                        state.set(ctrl, ctrl_in == 1);
                        let out = run_basis(&c, &state).unwrap();
                        let expected_b = if ctrl_in == 1 { (a + b) & mask } else { b };
                        assert_eq!(out.register_value(&b_bits), expected_b);
                        assert_eq!(out.register_value(&a_bits), a, "A restored");
                        assert_eq!(u64::from(out.get(ctrl)), ctrl_in, "ctrl restored");
                    }
                }
            }
        }
    }

    #[test]
    fn conditional_adder_ctrl0_spot() {
        let a_bits: Vec<usize> = (0..4).collect();
        let b_bits: Vec<usize> = (4..8).collect();
        let c = build_conditional_adder(4, 8, &a_bits, &b_bits).unwrap();
        let mut state = BasisState::zeros(9);
        state.set_register(&a_bits, 9);
        state.set_register(&b_bits, 9);
        let out = run_basis(&c, &state).unwrap();
        assert_eq!(out.register_value(&b_bits), 9, "ctrl low: B passes through");
        // ctrl high: (9 + 9) mod 16 = 2.
        state.set(8, true);
        let out = run_basis(&c, &state).unwrap();
        assert_eq!(out.register_value(&b_bits), 2);
    }

    #[test]
    fn conditional_adder_is_a_sum_gate_substitution() {
        for n in 1..=6usize {
            let a_bits: Vec<usize> = (0..n).collect();
            let b_bits: Vec<usize> = (n..2 * n).collect();
            let ctrl = 2 * n;
            let add = build_adder(n, &a_bits, &b_bits).unwrap();
            let cond = build_conditional_adder(n, ctrl, &a_bits, &b_bits).unwrap();
            assert_eq!(add.len(), cond.len());
            let mut replaced = 0;
            for (g_add, g_cond) in add.gates().iter().zip(cond.gates()) {
                if g_add == g_cond {
                    continue;
                }
                replaced += 1;
                assert_eq!(g_add.kind(), GateKind::Cnot);
                assert_eq!(g_cond.kind(), GateKind::Toffoli);
                assert_eq!(g_cond.operands()[0], ctrl);
                assert_eq!(&g_cond.operands()[1..], g_add.operands());
            }
            assert_eq!(replaced, n, "exactly the n sum-writing CNOTs change");
        }
    }

    #[test]
    fn conditional_adder_rejects_ctrl_overlap() {
        assert_eq!(
            build_conditional_adder(2, 1, &[0, 1], &[2, 3]).unwrap_err(),
            Error::CtrlOverlap(1)
        );
    }

    proptest! {
        /// The adder works on any disjoint register assignment, not just the
        /// contiguous one used by the divider.
        #[test]
        fn adder_on_shuffled_registers(seed in 0u64..1000) {
            use rand::prelude::*;
            use rand_chacha::ChaCha8Rng;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(1..=4usize);
            let mut qubits: Vec<usize> = (0..2 * n + 3).collect();
            qubits.shuffle(&mut rng);
            let a_bits: Vec<usize> = qubits[..n].to_vec();
            let b_bits: Vec<usize> = qubits[n..2 * n].to_vec();
            let c = build_adder(n, &a_bits, &b_bits).unwrap();
            let mask = (1u64 << n) - 1;
            let a = rng.gen_range(0..=mask);
            let b = rng.gen_range(0..=mask);
            let (ra, rb) = run_two_register(&c, &a_bits, &b_bits, a, b);
            prop_assert_eq!(ra, a);
            prop_assert_eq!(rb, (a + b) & mask);
        }
    }

    #[test]
    fn iteration_window_and_spare_schedule() {
        let layout = RegisterLayout::standard(3).unwrap();
        // q = [0,1,2], d = [3,4,5], r = [6,7,8]
        assert_eq!(iteration_window(&layout, 1), vec![2, 6, 7]);
        assert_eq!(iteration_window(&layout, 2), vec![1, 2, 6]);
        assert_eq!(iteration_window(&layout, 3), vec![0, 1, 2]);
    }

    #[test]
    fn divider_iteration_matches_reference_trace() {
        // n=3, dividend 5, divisor 2: the first window is bit Q[2] alone,
        // value 1; 1 - 2 underflows, the restore fires and the quotient bit
        // is 0 with the window back at 1.
        let n = 3;
        let layout = RegisterLayout::standard(n).unwrap();
        let (fragment, advanced) = build_divider_iteration(n, &layout, 1).unwrap();

        let mut state = BasisState::zeros(9);
        state.set_register(layout.q_bits(), 5);
        state.set_register(layout.d_bits(), 2);
        let window = iteration_window(&layout, 1);
        assert_eq!(state.register_value(&window), 1);

        let out = run_basis(&fragment, &state).unwrap();
        let trace = refmodel::restoring_divide_trace(5, 2, n).unwrap();
        let snap = &trace.snapshots[0];
        assert_eq!(snap.window_before, 1);
        assert_eq!(snap.window_after_subtract, 7);
        assert!(snap.sign_bit);
        assert!(snap.restore_fired);
        assert!(!snap.quotient_bit);
        assert_eq!(snap.window_after, 1);

        assert_eq!(out.register_value(&window), snap.window_after);
        let spare = layout.r_bits()[n - 1];
        assert_eq!(out.get(spare), snap.quotient_bit);
        assert_eq!(advanced.quotient_bits(), &[spare]);
        assert_eq!(advanced.remainder_bits(), window.as_slice());
    }

    #[test]
    fn zero_dividend_restores_every_iteration() {
        for n in 2..=5usize {
            let layout = RegisterLayout::standard(n).unwrap();
            for divisor in 1..=(1u64 << (n - 1)) {
                let (fragment, _) = build_divider_iteration(n, &layout, 1).unwrap();
                let mut state = BasisState::zeros(3 * n);
                state.set_register(layout.d_bits(), divisor);
                let out = run_basis(&fragment, &state).unwrap();
                let window = iteration_window(&layout, 1);
                assert_eq!(out.register_value(&window), 0, "window restored to 0");
                assert!(!out.get(layout.r_bits()[n - 1]), "quotient bit 0");
            }
        }
    }

    #[test]
    fn iteration_errors() {
        let layout = RegisterLayout::standard(3).unwrap();
        assert_eq!(
            build_divider_iteration(3, &layout, 4).unwrap_err(),
            Error::LayoutExhausted(4)
        );
        assert_eq!(
            build_divider_iteration(3, &layout, 0).unwrap_err(),
            Error::LayoutExhausted(0)
        );
        // Skipping an iteration leaves the layout inconsistent.
        assert!(matches!(
            build_divider_iteration(3, &layout, 2).unwrap_err(),
            Error::BadLayout(_)
        ));
    }

    #[test]
    fn divider_iterations_follow_the_reference_trace() {
        // Step through the fragments one at a time and compare the window
        // and retired quotient bits against the classical schedule after
        // each iteration.
        let n = 4;
        for (dividend, divisor) in [(13u64, 3u64), (15, 8), (0, 1), (9, 2), (6, 6)] {
            let trace = refmodel::restoring_divide_trace(dividend, divisor, n).unwrap();
            let mut layout = RegisterLayout::standard(n).unwrap();
            let mut state = BasisState::zeros(3 * n);
            state.set_register(layout.q_bits(), dividend);
            state.set_register(layout.d_bits(), divisor);

            for iteration in 1..=n {
                let (fragment, advanced) = build_divider_iteration(n, &layout, iteration).unwrap();
                state = run_basis(&fragment, &state).unwrap();
                let snap = &trace.snapshots[iteration - 1];
                assert_eq!(
                    state.register_value(advanced.remainder_bits()),
                    snap.window_after,
                    "window after iteration {iteration} of {dividend}/{divisor}"
                );
                let expected_bits = trace.quotient >> (n - iteration);
                assert_eq!(
                    state.register_value(advanced.quotient_bits()),
                    expected_bits,
                    "quotient bits after iteration {iteration} of {dividend}/{divisor}"
                );
                layout = advanced;
            }
            assert_eq!(state.register_value(layout.quotient_bits()), trace.quotient);
            assert_eq!(
                state.register_value(layout.remainder_bits()),
                trace.remainder
            );
            assert_eq!(state.register_value(layout.d_bits()), divisor);
        }
    }

    #[test]
    fn per_iteration_toffoli_budget() {
        let n = 6;
        let layout = RegisterLayout::standard(n).unwrap();
        let (fragment, _) = build_divider_iteration(n, &layout, 1).unwrap();
        assert_eq!(toffoli_like(&fragment), 5 * n - 4);
        assert_eq!(t_count(&fragment), 35 * n - 28);
    }

    /// Decodes a divider output state into (quotient, remainder, divisor).
    fn decode(instance: &DividerInstance, out: &BasisState) -> (u64, u64, u64) {
        let layout = instance.layout();
        (
            out.register_value(layout.quotient_bits()),
            out.register_value(layout.remainder_bits()),
            out.register_value(layout.d_bits()),
        )
    }

    fn run_divider(instance: &DividerInstance, dividend: u64, divisor: u64) -> (u64, u64, u64) {
        let layout = instance.layout();
        let mut state = BasisState::zeros(instance.circuit().width());
        state.set_register(layout.q_bits(), dividend);
        state.set_register(layout.d_bits(), divisor);
        let out = run_basis(instance.circuit(), &state).unwrap();
        decode(instance, &out)
    }

    #[test]
    fn divider_shape_and_outputs() {
        let instance = build_divider(4).unwrap();
        assert_eq!(instance.circuit().width(), 12);
        assert_eq!(instance.ancilla_count(), 4);
        assert_eq!(instance.layout().quotient_bits(), &[8, 9, 10, 11]);
        assert_eq!(instance.layout().remainder_bits(), &[0, 1, 2, 3]);

        assert_eq!(run_divider(&instance, 13, 3), (4, 1, 3));
    }

    #[test]
    fn divider_by_one_is_identity() {
        let instance = build_divider(3).unwrap();
        for x in 0..8u64 {
            assert_eq!(run_divider(&instance, x, 1), (x, 0, 1));
        }
    }

    #[test]
    fn divider_total_counts() {
        for n in [1usize, 2, 3, 5] {
            let instance = build_divider(n).unwrap();
            assert_eq!(toffoli_like(instance.circuit()), n * (5 * n - 4));
            assert_eq!(t_count(instance.circuit()), 35 * n * n - 28 * n);
        }
    }

    #[test]
    fn divider_n1_edge_case() {
        let instance = build_divider(1).unwrap();
        assert_eq!(t_count(instance.circuit()), 7);
        assert_eq!(run_divider(&instance, 0, 1), (0, 0, 1));
        assert_eq!(run_divider(&instance, 1, 1), (1, 0, 1));
    }

    #[test]
    fn divider_rejects_zero_width() {
        assert_eq!(build_divider(0).unwrap_err(), Error::BadWidth);
    }

    #[test]
    fn divider_agrees_with_oracle_exhaustively() {
        for n in [3usize, 4] {
            let instance = build_divider(n).unwrap();
            for dividend in 0..1u64 << n {
                for divisor in refmodel::divisor_domain(n) {
                    let (q, r, d) = run_divider(&instance, dividend, divisor);
                    let (eq, er) = refmodel::restoring_divide(dividend, divisor, n).unwrap();
                    assert_eq!(
                        (q, r, d),
                        (eq, er, divisor),
                        "n={n} dividend={dividend} divisor={divisor}"
                    );
                    assert_eq!((eq, er), (dividend / divisor, dividend % divisor));
                }
            }
        }
    }

    #[test]
    fn divider_is_injective_for_n2() {
        let instance = build_divider(2).unwrap();
        let mut seen = [false; 64];
        for input in 0..64u64 {
            let out = run_basis(instance.circuit(), &BasisState::from_index(6, input)).unwrap();
            let idx = out.to_index() as usize;
            assert!(!seen[idx], "two inputs map to {idx}");
            seen[idx] = true;
        }
    }

    #[test]
    fn divider_injective_on_random_inputs_n8() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let instance = build_divider(8).unwrap();
        let width = instance.circuit().width();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut inputs = std::collections::HashSet::new();
        while inputs.len() < 100_000 {
            inputs.insert(rng.gen_range(0..1u64 << width));
        }
        let mut outputs = std::collections::HashSet::new();
        for &input in &inputs {
            let out = run_basis(instance.circuit(), &BasisState::from_index(width, input)).unwrap();
            assert!(
                outputs.insert(out.to_index()),
                "collision from input {input}"
            );
        }
    }
}
