//! Toy stack machine used as the enumeration substrate for the search.
//!
//! Eight opcodes, deterministic single stepping, exact step counts. Every
//! byte string is a runnable program: an out-of-range opcode, a missing
//! immediate, a jump outside the program, stack underflow, or running off
//! the end all halt the machine with the invalid-output marker instead of
//! faulting.

/// Opcode byte values. Bytes above [`OP_NOP`] are invalid opcodes.
pub const OP_PUSH: u8 = 0;
pub const OP_DUP: u8 = 1;
pub const OP_DROP: u8 = 2;
pub const OP_ADD: u8 = 3;
pub const OP_JZ: u8 = 4;
pub const OP_EMIT: u8 = 5;
pub const OP_HALT: u8 = 6;
pub const OP_NOP: u8 = 7;

/// A program: an arbitrary byte string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Program {
    code: Vec<u8>,
}

impl Program {
    pub fn new(code: Vec<u8>) -> Self {
        Program { code }
    }

    pub fn bytes(&self) -> &[u8] {
        &self.code
    }

    pub fn len(&self) -> usize {
        self.code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }
}

/// Straight-line program that emits `data` on the output buffer and halts
/// with valid status. Runs in `2 * data.len() + 1` steps.
pub fn emit_program(data: &[u8]) -> Program {
    let mut code = Vec::with_capacity(data.len() * 3 + 1);
    for &b in data {
        code.push(OP_PUSH);
        code.push(b);
        code.push(OP_EMIT);
    }
    code.push(OP_HALT);
    Program::new(code)
}

/// Two-instruction infinite loop; never halts.
pub fn looping_program() -> Program {
    Program::new(vec![OP_PUSH, 0, OP_JZ, 0])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VmStatus {
    Running,
    Halted { valid: bool },
}

/// Machine state. `steps` increments by exactly one per [`VmState::step`].
#[derive(Debug, Clone)]
pub struct VmState {
    program: Program,
    counter: usize,
    stack: Vec<u64>,
    out: Vec<u8>,
    status: VmStatus,
    steps: u64,
}

impl VmState {
    pub fn new(program: Program) -> Self {
        VmState {
            program,
            counter: 0,
            stack: Vec::new(),
            out: Vec::new(),
            status: VmStatus::Running,
            steps: 0,
        }
    }

    pub fn status(&self) -> VmStatus {
        self.status
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn output(&self) -> &[u8] {
        &self.out
    }

    fn halt(&mut self, valid: bool) {
        self.status = VmStatus::Halted { valid };
    }

    /// Execute one instruction. Halted states are absorbing: stepping a
    /// halted machine changes nothing, not even the step count.
    pub fn step(&mut self) {
        if self.status != VmStatus::Running {
            return;
        }
        self.steps += 1;
        let code = self.program.bytes();
        let Some(&op) = code.get(self.counter) else {
            self.halt(false);
            return;
        };
        match op {
            OP_PUSH => match code.get(self.counter + 1) {
                Some(&imm) => {
                    self.stack.push(imm as u64);
                    self.counter += 2;
                }
                None => self.halt(false),
            },
            OP_DUP => match self.stack.last().copied() {
                Some(v) => {
                    self.stack.push(v);
                    self.counter += 1;
                }
                None => self.halt(false),
            },
            OP_DROP => match self.stack.pop() {
                Some(_) => self.counter += 1,
                None => self.halt(false),
            },
            OP_ADD => {
                if self.stack.len() < 2 {
                    self.halt(false);
                } else {
                    let b = self.stack.pop().unwrap();
                    let a = self.stack.pop().unwrap();
                    self.stack.push(a.saturating_add(b));
                    self.counter += 1;
                }
            }
            OP_JZ => match (code.get(self.counter + 1).copied(), self.stack.pop()) {
                (Some(target), Some(v)) => {
                    if v == 0 {
                        let target = target as usize;
                        if target <= code.len() {
                            self.counter = target;
                        } else {
                            self.halt(false);
                        }
                    } else {
                        self.counter += 2;
                    }
                }
                _ => self.halt(false),
            },
            OP_EMIT => match self.stack.pop() {
                Some(v) => {
                    self.out.push((v & 0xff) as u8);
                    self.counter += 1;
                }
                None => self.halt(false),
            },
            OP_HALT => self.halt(true),
            OP_NOP => self.counter += 1,
            _ => self.halt(false),
        }
    }

    /// Run until halt or until `max_steps` further steps were taken.
    pub fn run(&mut self, max_steps: u64) {
        for _ in 0..max_steps {
            if self.status != VmStatus::Running {
                return;
            }
            self.step();
        }
    }
}
