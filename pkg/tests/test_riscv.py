import random

from rv32i_golden import GOLDEN, NON_INSTRUCTIONS
from wawk.riscv import MNEMONICS, decode


class TestGoldenCorpus:
    def test_every_mnemonic_decodes(self):
        for mnemonic, word in GOLDEN:
            assert decode(word) == mnemonic, f"0x{word:08X}"

    def test_corpus_covers_full_instruction_set(self):
        assert sorted(m for m, _ in GOLDEN) == sorted(MNEMONICS)
        assert len(MNEMONICS) == 40

    def test_non_instructions_decode_unknown(self):
        for word in NON_INSTRUCTIONS:
            assert decode(word) == "unknown", f"0x{word:08X}"


class TestEdgeCases:
    def test_canonical_nop(self):
        assert decode(0x00000013) == "addi"

    def test_system_words_require_zero_fields(self):
        assert decode(0x00000073) == "ecall"
        assert decode(0x00100073) == "ebreak"
        # nonzero rd, rs1, or out-of-set imm12 all reject
        assert decode(0x000000F3) == "unknown"
        assert decode(0x00108073) == "unknown"
        assert decode(0x00200073) == "unknown"

    def test_shift_funct7_is_checked(self):
        assert decode(0x00511093) == "slli"
        assert decode(0x40515093) == "srai"
        assert decode(0x00515093) == "srli"
        assert decode(0x80515093) == "unknown"

    def test_words_wider_than_32_bits_are_masked(self):
        assert decode(0x1_00000013) == "addi"
        assert decode((1 << 40) | 0x00000073) == "ecall"

    def test_results_are_total(self):
        rng = random.Random(20240817)
        allowed = set(MNEMONICS) | {"unknown"}
        for _ in range(5000):
            assert decode(rng.getrandbits(32)) in allowed
