"""A four-register counter machine that emits listings under step budgets.

Instruction set (registers R0..R3, constants >= 0, absolute addresses):

    LOADI r c   r := c
    ADDI r c    r := r + c
    SUBI r c    r := max(r - c, 0)
    JMP a       goto a
    JZ r a      if r == 0 goto a
    OUT r       emit r
    HALT

Every executed instruction costs one step. Running past the last
instruction halts the machine. Emitting 0 or an already-emitted value is a
no-op, which keeps the produced listing injective and inside N.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidProgram
from .listing import Listing

NUM_REGISTERS = 4

# mnemonic -> operand kinds ("r" register, "c" constant, "a" address)
OPCODES = {
    "LOADI": ("r", "c"),
    "ADDI": ("r", "c"),
    "SUBI": ("r", "c"),
    "JMP": ("a",),
    "JZ": ("r", "a"),
    "OUT": ("r",),
    "HALT": (),
}


@dataclass(frozen=True)
class Instruction:
    op: str
    args: tuple[int, ...] = ()

    def __str__(self):
        parts = [self.op]
        for kind, arg in zip(OPCODES[self.op], self.args):
            parts.append(f"R{arg}" if kind == "r" else str(arg))
        return " ".join(parts)


@dataclass(frozen=True)
class EnumProgram:
    name: str
    instructions: tuple[Instruction, ...]

    def __post_init__(self):
        object.__setattr__(self, "instructions", tuple(self.instructions))
        validate(self)

    def to_text(self) -> str:
        return "".join(f"{ins}\n" for ins in self.instructions)


@dataclass(frozen=True)
class EnumRun:
    program: str
    step_budget: int
    output_cap: int
    listing: Listing
    steps_used: int
    halted: bool

    def to_json(self) -> dict:
        return {
            "program": self.program,
            "step_budget": self.step_budget,
            "output_cap": self.output_cap,
            "listing": list(self.listing.values),
            "steps_used": self.steps_used,
            "halted": self.halted,
        }


def validate(p: EnumProgram) -> None:
    size = len(p.instructions)
    for addr, ins in enumerate(p.instructions):
        kinds = OPCODES.get(ins.op)
        if kinds is None:
            raise InvalidProgram(addr, f"unknown opcode {ins.op!r}", p.name)
        if len(ins.args) != len(kinds):
            raise InvalidProgram(
                addr, f"{ins.op} takes {len(kinds)} operand(s), got {len(ins.args)}", p.name
            )
        for kind, arg in zip(kinds, ins.args):
            if kind == "r" and not 0 <= arg < NUM_REGISTERS:
                raise InvalidProgram(addr, f"register R{arg} outside R0..R3", p.name)
            if kind == "c" and arg < 0:
                raise InvalidProgram(addr, f"negative constant {arg}", p.name)
            if kind == "a" and not 0 <= arg < size:
                raise InvalidProgram(addr, f"jump target {arg} outside 0..{size - 1}", p.name)


def _operand(token, kind, addr, source):
    t = token.upper()
    if kind == "r":
        if not (t.startswith("R") and t[1:].isdigit()):
            raise InvalidProgram(addr, f"expected a register, got {token!r}", source)
        return int(t[1:])
    try:
        return int(t, 10)
    except ValueError:
        raise InvalidProgram(addr, f"expected an integer, got {token!r}", source) from None


def parse_program(text: str, name: str = "program") -> EnumProgram:
    instructions = []
    for raw in text.splitlines():
        line = raw.split(";", 1)[0].strip()
        if not line:
            continue
        addr = len(instructions)
        op, *tokens = line.replace(",", " ").split()
        op = op.upper()
        kinds = OPCODES.get(op)
        if kinds is None:
            raise InvalidProgram(addr, f"unknown opcode {op!r}", name)
        if len(tokens) != len(kinds):
            raise InvalidProgram(
                addr, f"{op} takes {len(kinds)} operand(s), got {len(tokens)}", name
            )
        args = tuple(_operand(tok, k, addr, name) for tok, k in zip(tokens, kinds))
        instructions.append(Instruction(op, args))
    return EnumProgram(name, tuple(instructions))


def program(name: str, *lines: str) -> EnumProgram:
    """Build a program from instruction strings, e.g. ``program("evens", "LOADI R0 2", ...)``."""
    return parse_program("\n".join(lines), name)


@dataclass
class Machine:
    prog: EnumProgram
    pc: int = 0
    regs: list[int] = field(default_factory=lambda: [0] * NUM_REGISTERS)
    halted: bool = False

    def __post_init__(self):
        if not self.prog.instructions:
            self.halted = True

    def step(self):
        """Execute one instruction; return the register value if it was an OUT."""
        code = self.prog.instructions
        if self.pc >= len(code):
            self.halted = True
            return None
        ins = code[self.pc]
        op, args = ins.op, ins.args
        self.pc += 1
        regs = self.regs
        if op == "LOADI":
            regs[args[0]] = args[1]
        elif op == "ADDI":
            regs[args[0]] += args[1]
        elif op == "SUBI":
            regs[args[0]] = max(regs[args[0]] - args[1], 0)
        elif op == "JMP":
            self.pc = args[0]
        elif op == "JZ":
            if regs[args[0]] == 0:
                self.pc = args[1]
        elif op == "OUT":
            return regs[args[0]]
        elif op == "HALT":
            self.halted = True
        if self.pc >= len(code):
            self.halted = True
        return None


def _check_budgets(step_budget, output_cap):
    if step_budget < 0 or output_cap < 0:
        raise ValueError("step_budget and output_cap must be >= 0")


def run_budgeted(p: EnumProgram, step_budget: int, output_cap: int) -> EnumRun:
    return dovetail_union([p], 1, step_budget, output_cap)


def dovetail_union(
    programs: Sequence[EnumProgram], slice: int, step_budget: int, output_cap: int
) -> EnumRun:
    """Round-robin ``slice`` steps per live program per turn, one shared budget.

    Emissions merge into one listing with global de-duplication; programs that
    halt drop out of the rotation. ``step_budget`` and ``output_cap`` bound
    the whole run, not each member.
    """
    if slice < 1:
        raise ValueError("slice must be >= 1")
    if not programs:
        raise ValueError("at least one program is required")
    _check_budgets(step_budget, output_cap)
    for p in programs:
        validate(p)
    machines = [Machine(p) for p in programs]
    emitted = []
    seen = set()
    steps = 0

    def done():
        return steps >= step_budget or len(emitted) >= output_cap

    while not done():
        live = [mc for mc in machines if not mc.halted]
        if not live:
            break
        for mc in live:
            for _ in range(slice):
                if done() or mc.halted:
                    break
                v = mc.step()
                steps += 1
                if v is not None and v >= 1 and v not in seen:
                    seen.add(v)
                    emitted.append(v)
            if done():
                break
    name = "+".join(p.name for p in programs)
    return EnumRun(
        program=name,
        step_budget=step_budget,
        output_cap=output_cap,
        listing=Listing(tuple(emitted), name),
        steps_used=steps,
        halted=all(mc.halted for mc in machines),
    )
