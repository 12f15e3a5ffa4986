//! Gate-by-gate lowering between abstraction levels.
//!
//! Two rewrites drive everything: `Peres -> {Toffoli, Cnot}` and the frozen
//! 15-gate Clifford+T network for `Toffoli`. The Toffoli network is exact
//! (no global-phase discrepancy) and spends 7 T gates; counts in the
//! resource module assume exactly this cost, so the sequence must never be
//! swapped for an optimized variant behind its back.

use crate::circuit::{Circuit, Level};
use crate::error::{Error, Result};
use crate::gate::{Gate, GateKind};

/// Expands a Peres gate into a Toffoli followed by a CNOT on its first two
/// operands: `(a, b, c) -> (a, a xor b, c xor ab)`.
pub fn decompose_peres(gate: &Gate) -> Result<Vec<Gate>> {
    if gate.kind() != GateKind::Peres {
        return Err(Error::WrongKind {
            expected: GateKind::Peres,
            got: gate.kind(),
        });
    }
    let (a, b, c) = (gate.operands()[0], gate.operands()[1], gate.operands()[2]);
    Ok(vec![Gate::toffoli(a, b, c), Gate::cnot(a, b)])
}

/// Expands a Toffoli gate into the frozen 15-gate Clifford+T sequence:
/// 2 H, 7 T/T-dagger and 6 CNOT gates, equal to the Toffoli unitary exactly.
pub fn decompose_toffoli(gate: &Gate) -> Result<Vec<Gate>> {
    if gate.kind() != GateKind::Toffoli {
        return Err(Error::WrongKind {
            expected: GateKind::Toffoli,
            got: gate.kind(),
        });
    }
    let (c1, c2, t) = (gate.operands()[0], gate.operands()[1], gate.operands()[2]);
    Ok(vec![
        Gate::h(t),
        Gate::cnot(c2, t),
        Gate::tdg(t),
        Gate::cnot(c1, t),
        Gate::t(t),
        Gate::cnot(c2, t),
        Gate::tdg(t),
        Gate::cnot(c1, t),
        Gate::t(c2),
        Gate::t(t),
        Gate::cnot(c1, c2),
        Gate::h(t),
        Gate::t(c1),
        Gate::tdg(c2),
        Gate::cnot(c1, c2),
    ])
}

/// Lowers a circuit to `target`, substituting each gate in place; the
/// relative order of untouched gates is preserved. Raising the level is an
/// error, lowering to the current level is the identity.
pub fn lower(circuit: &Circuit, target: Level) -> Result<Circuit> {
    if target.rank() > circuit.level().rank() {
        return Err(Error::InvalidDirection {
            from: circuit.level(),
            to: target,
        });
    }
    let mut out = Circuit::new(circuit.width(), target);
    for gate in circuit.gates() {
        lower_gate(&mut out, gate, target)?;
    }
    Ok(out)
}

fn lower_gate(out: &mut Circuit, gate: &Gate, target: Level) -> Result<()> {
    match gate.kind() {
        GateKind::Peres if !target.permits(GateKind::Peres) => {
            for sub in decompose_peres(gate)? {
                lower_gate(out, &sub, target)?;
            }
            Ok(())
        }
        GateKind::Toffoli if !target.permits(GateKind::Toffoli) => {
            out.extend(decompose_toffoli(gate)?)
        }
        _ => out.append(gate.clone()),
    }
}
