//! Gate alphabet shared by every synthesis and simulation pass.

use crate::error::{Error, Result};

/// Every gate kind the toolchain understands.
///
/// `X`, `Cnot`, `Toffoli` and `Peres` are classical-reversible (permutation)
/// gates used during synthesis; `H`, `T`, `Tdg`, `S`, `Sdg` together with `X`
/// and `Cnot` form the Clifford+T target set of the lowering pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    X,
    Cnot,
    Toffoli,
    Peres,
    H,
    T,
    Tdg,
    S,
    Sdg,
}

impl GateKind {
    pub const ALL: [GateKind; 9] = [
        GateKind::X,
        GateKind::Cnot,
        GateKind::Toffoli,
        GateKind::Peres,
        GateKind::H,
        GateKind::T,
        GateKind::Tdg,
        GateKind::S,
        GateKind::Sdg,
    ];

    /// Number of qubit operands the kind takes.
    pub fn arity(self) -> usize {
        match self {
            GateKind::X
            | GateKind::H
            | GateKind::T
            | GateKind::Tdg
            | GateKind::S
            | GateKind::Sdg => 1,
            GateKind::Cnot => 2,
            GateKind::Toffoli | GateKind::Peres => 3,
        }
    }

    /// True for gates that map computational basis states to basis states.
    pub fn is_permutation(self) -> bool {
        matches!(
            self,
            GateKind::X | GateKind::Cnot | GateKind::Toffoli | GateKind::Peres
        )
    }

    /// OpenQASM 2.0 mnemonic, or `None` for gates QASM cannot express.
    pub fn qasm_name(self) -> Option<&'static str> {
        match self {
            GateKind::X => Some("x"),
            GateKind::Cnot => Some("cx"),
            GateKind::Toffoli => Some("ccx"),
            GateKind::Peres => None,
            GateKind::H => Some("h"),
            GateKind::T => Some("t"),
            GateKind::Tdg => Some("tdg"),
            GateKind::S => Some("s"),
            GateKind::Sdg => Some("sdg"),
        }
    }

    /// Stable lowercase label used for histogram keys.
    pub fn label(self) -> &'static str {
        match self {
            GateKind::X => "x",
            GateKind::Cnot => "cnot",
            GateKind::Toffoli => "toffoli",
            GateKind::Peres => "peres",
            GateKind::H => "h",
            GateKind::T => "t",
            GateKind::Tdg => "tdg",
            GateKind::S => "s",
            GateKind::Sdg => "sdg",
        }
    }
}

/// A single gate: a kind plus its ordered qubit operands.
///
/// Operand order is controls first, target last. For `Peres` the operands
/// are `(a, b, c)` with action `(a, b, c) -> (a, a xor b, c xor ab)`.
///
/// Construction validates arity and operand distinctness, so a `Gate` value
/// is always well formed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gate {
    kind: GateKind,
    operands: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, operands: Vec<usize>) -> Result<Gate> {
        if operands.len() != kind.arity() {
            return Err(Error::OperandCount {
                kind,
                expected: kind.arity(),
                got: operands.len(),
            });
        }
        for (i, &q) in operands.iter().enumerate() {
            if operands[..i].contains(&q) {
                return Err(Error::DuplicateOperand(operands.clone()));
            }
        }
        Ok(Gate { kind, operands })
    }

    pub fn x(q: usize) -> Gate {
        Gate::new(GateKind::X, vec![q]).expect("single operand")
    }

    pub fn h(q: usize) -> Gate {
        Gate::new(GateKind::H, vec![q]).expect("single operand")
    }

    pub fn t(q: usize) -> Gate {
        Gate::new(GateKind::T, vec![q]).expect("single operand")
    }

    pub fn tdg(q: usize) -> Gate {
        Gate::new(GateKind::Tdg, vec![q]).expect("single operand")
    }

    pub fn s(q: usize) -> Gate {
        Gate::new(GateKind::S, vec![q]).expect("single operand")
    }

    pub fn sdg(q: usize) -> Gate {
        Gate::new(GateKind::Sdg, vec![q]).expect("single operand")
    }

    /// Panics if `control == target`.
    pub fn cnot(control: usize, target: usize) -> Gate {
        Gate::new(GateKind::Cnot, vec![control, target]).expect("distinct operands")
    }

    /// Panics if the operands are not pairwise distinct.
    pub fn toffoli(c1: usize, c2: usize, target: usize) -> Gate {
        Gate::new(GateKind::Toffoli, vec![c1, c2, target]).expect("distinct operands")
    }

    /// Panics if the operands are not pairwise distinct.
    pub fn peres(a: usize, b: usize, c: usize) -> Gate {
        Gate::new(GateKind::Peres, vec![a, b, c]).expect("distinct operands")
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn operands(&self) -> &[usize] {
        &self.operands
    }

    pub fn max_operand(&self) -> usize {
        *self.operands.iter().max().expect("arity >= 1")
    }
}
