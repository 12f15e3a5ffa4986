use crate::circuit::Level;
use crate::gate::GateKind;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{kind:?} takes {expected} operand(s), got {got}")]
    OperandCount {
        kind: GateKind,
        expected: usize,
        got: usize,
    },
    #[error("gate operands must be distinct, got {0:?}")]
    DuplicateOperand(Vec<usize>),
    #[error("operand {operand} out of range for circuit width {width}")]
    OperandOutOfRange { operand: usize, width: usize },
    #[error("{kind:?} is not permitted in a {level:?} circuit")]
    LevelViolation { kind: GateKind, level: Level },
    #[error("{0:?} has no OpenQASM 2.0 primitive")]
    UnexportableGate(GateKind),
    #[error("expected a {expected:?} gate, got {got:?}")]
    WrongKind { expected: GateKind, got: GateKind },
    #[error("cannot raise a {from:?} circuit to {to:?}")]
    InvalidDirection { from: Level, to: Level },
    #[error("operand width must be at least 1")]
    BadWidth,
    #[error("register expects {expected} qubits, got {got}")]
    RegisterLength { expected: usize, got: usize },
    #[error("qubit {0} appears in more than one register")]
    OverlappingRegisters(usize),
    #[error("control qubit {0} overlaps an operand register")]
    CtrlOverlap(usize),
    #[error("no spare zero qubit available for iteration {0}")]
    LayoutExhausted(usize),
    #[error("invalid register layout: {0}")]
    BadLayout(String),
    #[error("{0:?} has no basis-state action; use the state-vector simulator")]
    NonPermutationGate(GateKind),
    #[error("width {width} exceeds the simulator limit of {limit} qubits")]
    WidthLimitExceeded { width: usize, limit: usize },
    #[error("circuit widths differ: {0} vs {1}")]
    WidthMismatch(usize, usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain violation: {0}")]
    DomainViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
