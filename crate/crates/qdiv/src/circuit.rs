//! Circuit container and OpenQASM 2.0 serialization.

use std::fmt;

use crate::error::{Error, Result};
use crate::gate::{Gate, GateKind};

/// Abstraction level of a circuit, ordered from most to least abstract.
///
/// Lowering walks `Logical -> ToffoliCnot -> CliffordT`. Each step shrinks the
/// permitted alphabet: `ToffoliCnot` forbids `Peres`, `CliffordT` forbids
/// `Peres` and `Toffoli`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    Logical,
    ToffoliCnot,
    CliffordT,
}

impl Level {
    pub fn permits(self, kind: GateKind) -> bool {
        match self {
            Level::Logical => true,
            Level::ToffoliCnot => kind != GateKind::Peres,
            Level::CliffordT => !matches!(kind, GateKind::Peres | GateKind::Toffoli),
        }
    }

    /// Position in the lowering order; larger is more abstract.
    pub(crate) fn rank(self) -> u8 {
        match self {
            Level::Logical => 2,
            Level::ToffoliCnot => 1,
            Level::CliffordT => 0,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Logical => write!(f, "logical"),
            Level::ToffoliCnot => write!(f, "toffoli"),
            Level::CliffordT => write!(f, "cliffordt"),
        }
    }
}

/// An ordered gate list over a fixed number of qubits.
///
/// Gates can only be appended, never edited in place, and every append is
/// validated against the width and level, so any reachable `Circuit` value
/// satisfies the operand and alphabet invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    width: usize,
    level: Level,
    gates: Vec<Gate>,
}

impl Circuit {
    /// Empty circuit of the given width and level.
    pub fn new(width: usize, level: Level) -> Circuit {
        Circuit {
            width,
            level,
            gates: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn count_kind(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind() == kind).count()
    }

    /// Appends a gate, checking operand bounds and the level alphabet.
    pub fn append(&mut self, gate: Gate) -> Result<()> {
        if !self.level.permits(gate.kind()) {
            return Err(Error::LevelViolation {
                kind: gate.kind(),
                level: self.level,
            });
        }
        if let Some(&q) = gate.operands().iter().find(|&&q| q >= self.width) {
            return Err(Error::OperandOutOfRange {
                operand: q,
                width: self.width,
            });
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend<I: IntoIterator<Item = Gate>>(&mut self, gates: I) -> Result<()> {
        for gate in gates {
            self.append(gate)?;
        }
        Ok(())
    }

    /// Serializes to OpenQASM 2.0.
    ///
    /// The output is deterministic byte for byte: a fixed header, one `qreg`
    /// declaration and one line per gate, LF line endings. `Peres` has no
    /// QASM primitive, so any circuit containing one is rejected.
    pub fn export_qasm(&self) -> Result<String> {
        if let Some(gate) = self.gates.iter().find(|g| g.kind().qasm_name().is_none()) {
            return Err(Error::UnexportableGate(gate.kind()));
        }
        let mut out = String::new();
        out.push_str("OPENQASM 2.0;\n");
        out.push_str("include \"qelib1.inc\";\n");
        out.push_str(&format!("qreg q[{}];\n", self.width));
        for gate in &self.gates {
            let name = gate.kind().qasm_name().expect("checked above");
            out.push_str(name);
            out.push(' ');
            for (i, q) in gate.operands().iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&format!("q[{}]", q));
            }
            out.push_str(";\n");
        }
        Ok(out)
    }
}
