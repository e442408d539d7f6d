"""RV32I instruction-word decoder.

Table-driven mnemonic lookup from opcode, funct3, and funct7 (plus the
imm12 split between ecall and ebreak). Anything outside the RV32I base
set, including compressed or malformed words, decodes to "unknown".
"""

# canonical ISA-listing order, also used for report ordering
MNEMONICS = (
    "lui", "auipc",
    "jal", "jalr",
    "beq", "bne", "blt", "bge", "bltu", "bgeu",
    "lb", "lh", "lw", "lbu", "lhu",
    "sb", "sh", "sw",
    "addi", "slti", "sltiu", "xori", "ori", "andi",
    "slli", "srli", "srai",
    "add", "sub", "sll", "slt", "sltu", "xor", "srl", "sra", "or", "and",
    "fence",
    "ecall", "ebreak",
)

_BRANCH = {0b000: "beq", 0b001: "bne", 0b100: "blt", 0b101: "bge", 0b110: "bltu", 0b111: "bgeu"}
_LOAD = {0b000: "lb", 0b001: "lh", 0b010: "lw", 0b100: "lbu", 0b101: "lhu"}
_STORE = {0b000: "sb", 0b001: "sh", 0b010: "sw"}
_OP_IMM = {0b000: "addi", 0b010: "slti", 0b011: "sltiu", 0b100: "xori", 0b110: "ori", 0b111: "andi"}
_OP = {
    (0b0000000, 0b000): "add",
    (0b0100000, 0b000): "sub",
    (0b0000000, 0b001): "sll",
    (0b0000000, 0b010): "slt",
    (0b0000000, 0b011): "sltu",
    (0b0000000, 0b100): "xor",
    (0b0000000, 0b101): "srl",
    (0b0100000, 0b101): "sra",
    (0b0000000, 0b110): "or",
    (0b0000000, 0b111): "and",
}


def decode(word: int) -> str:
    word &= 0xFFFFFFFF
    opcode = word & 0x7F
    funct3 = (word >> 12) & 0x7
    if opcode == 0x37:
        return "lui"
    if opcode == 0x17:
        return "auipc"
    if opcode == 0x6F:
        return "jal"
    if opcode == 0x67:
        return "jalr" if funct3 == 0 else "unknown"
    if opcode == 0x63:
        return _BRANCH.get(funct3, "unknown")
    if opcode == 0x03:
        return _LOAD.get(funct3, "unknown")
    if opcode == 0x23:
        return _STORE.get(funct3, "unknown")
    if opcode == 0x13:
        if funct3 == 0b001:
            return "slli" if (word >> 25) == 0 else "unknown"
        if funct3 == 0b101:
            funct7 = word >> 25
            if funct7 == 0b0000000:
                return "srli"
            if funct7 == 0b0100000:
                return "srai"
            return "unknown"
        return _OP_IMM[funct3]
    if opcode == 0x33:
        return _OP.get((word >> 25, funct3), "unknown")
    if opcode == 0x0F:
        return "fence" if funct3 == 0 else "unknown"
    if opcode == 0x73:
        if funct3 == 0 and (word >> 7) & 0x1FFF == 0:
            imm12 = word >> 20
            if imm12 == 0:
                return "ecall"
            if imm12 == 1:
                return "ebreak"
        return "unknown"
    return "unknown"
