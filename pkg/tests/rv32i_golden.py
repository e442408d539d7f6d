"""Frozen decoder corpus: one hand-assembled word per mnemonic.

Encoded by a separate scratch assembler working straight from the
R/I/S/B/U/J field layouts, anchored against well-known encodings
(0x00000013 = NOP, 0x00000033 = add x0,x0,x0, 0x00000073 = ecall,
0x00100073 = ebreak, 0x0000006F = jal x0,0, 0x0FF0000F = fence), and
frozen here. Do not regenerate from the code under test.
"""

GOLDEN = [
    ("lui", 0xABCDE2B7),  # lui x5, 0xabcde
    ("auipc", 0x001F4517),  # auipc x10, 0x1f4
    ("jal", 0x100000EF),  # jal x1, 256
    ("jalr", 0xFFC18067),  # jalr x0, -4(x3)
    ("beq", 0x00208863),  # beq x1, x2, 16
    ("bne", 0xFE4198E3),  # bne x3, x4, -16
    ("blt", 0x0262C063),  # blt x5, x6, 32
    ("bge", 0xFE83D0E3),  # bge x7, x8, -32
    ("bltu", 0x04A4E063),  # bltu x9, x10, 64
    ("bgeu", 0xFCC5F0E3),  # bgeu x11, x12, -64
    ("lb", 0x00410083),  # lb x1, 4(x2)
    ("lh", 0xFF821183),  # lh x3, -8(x4)
    ("lw", 0x00C32283),  # lw x5, 12(x6)
    ("lbu", 0x01044383),  # lbu x7, 16(x8)
    ("lhu", 0xFEC55483),  # lhu x9, -20(x10)
    ("sb", 0x00110223),  # sb x1, 4(x2)
    ("sh", 0xFE321C23),  # sh x3, -8(x4)
    ("sw", 0x00532623),  # sw x5, 12(x6)
    ("addi", 0x06410093),  # addi x1, x2, 100
    ("slti", 0xFCE22193),  # slti x3, x4, -50
    ("sltiu", 0x0C833293),  # sltiu x5, x6, 200
    ("xori", 0x05544393),  # xori x7, x8, 0x55
    ("ori", 0x0AA56493),  # ori x9, x10, 0xaa
    ("andi", 0x07F67593),  # andi x11, x12, 0x7f
    ("slli", 0x00511093),  # slli x1, x2, 5
    ("srli", 0x00A25193),  # srli x3, x4, 10
    ("srai", 0x40F35293),  # srai x5, x6, 15
    ("add", 0x003100B3),  # add x1, x2, x3
    ("sub", 0x40628233),  # sub x4, x5, x6
    ("sll", 0x009413B3),  # sll x7, x8, x9
    ("slt", 0x00C5A533),  # slt x10, x11, x12
    ("sltu", 0x00F736B3),  # sltu x13, x14, x15
    ("xor", 0x0128C833),  # xor x16, x17, x18
    ("srl", 0x015A59B3),  # srl x19, x20, x21
    ("sra", 0x418BDB33),  # sra x22, x23, x24
    ("or", 0x01BD6CB3),  # or x25, x26, x27
    ("and", 0x01EEFE33),  # and x28, x29, x30
    ("fence", 0x0FF0000F),  # fence iorw, iorw
    ("ecall", 0x00000073),  # ecall
    ("ebreak", 0x00100073),  # ebreak
]

# words that look plausible but sit just outside the base set
NON_INSTRUCTIONS = [
    0x00000000,  # all zeros
    0xFFFFFFFF,  # all ones
    0x00001073,  # csrrw (Zicsr, not base)
    0x0000100F,  # fence.i (Zifencei, not base)
    0x30200073,  # mret (privileged)
    0x02008033,  # mul (M extension)
    0x80009013,  # slli shape with a high funct7 bit
    0x20005013,  # srli/srai shape with funct7 0b0010000
    0x00003023,  # store funct3=3: no such store
    0x00006003,  # load funct3=6: no such load
    0x00002063,  # branch funct3=2: no such branch
    0x00001067,  # jalr funct3=1: not jalr
    0x00200073,  # system imm12=2: neither ecall nor ebreak
    0x000000F3,  # ecall shape but rd=1
    0x00108073,  # ebreak shape but rs1=1
    0x0000007B,  # unused major opcode 0x7b
]
