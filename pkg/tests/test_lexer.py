import pytest

from wawk.errors import IllegalCharacterError, UnterminatedStringError
from wawk.lexer import tokenize


def kinds(source):
    return [t.kind for t in tokenize(source)]


def texts(source):
    return [t.text for t in tokenize(source)]


class TestBasics:
    def test_comment_only_is_empty(self):
        assert tokenize("// comment") == []

    def test_whitespace_only_is_empty(self):
        assert tokenize(" \t\n  \n") == []

    def test_statement_head_tokens(self):
        toks = tokenize("clk, fire: { start = INDEX; }")
        assert [(t.kind, t.text) for t in toks] == [
            ("IDENT", "clk"), (",", ","), ("IDENT", "fire"), (":", ":"),
            ("{", "{"), ("IDENT", "start"), ("=", "="), ("INDEX", "INDEX"),
            (";", ";"), ("}", "}"),
        ]
        assert len(toks) == 10

    def test_comments_run_to_end_of_line(self):
        assert texts("a // b c d\ne") == ["a", "e"]

    def test_dotted_name_is_one_token(self):
        toks = tokenize("TOP.servant_sim.dut.cpu.clk")
        assert len(toks) == 1
        assert toks[0].kind == "IDENT"
        assert toks[0].text == "TOP.servant_sim.dut.cpu.clk"

    def test_int_literal(self):
        tok = tokenize("042")[0]
        assert tok.kind == "INT"
        assert tok.value == 42

    def test_two_char_operators(self):
        assert kinds("== != <= >= && ||") == ["==", "!=", "<=", ">=", "&&", "||"]

    def test_one_char_operators(self):
        assert kinds("+-*/<>!@=:,;{}()[]") == list("+-*/<>!@=:,;{}()[]")

    def test_positions(self):
        a, b = tokenize("ab\n  cd")
        assert (a.line, a.col) == (1, 1)
        assert (b.line, b.col) == (2, 3)


class TestKeywords:
    def test_keywords_get_their_own_kind(self):
        assert kinds("BEGIN END if else INDEX") == ["BEGIN", "END", "if", "else", "INDEX"]

    def test_keywords_are_case_sensitive(self):
        assert kinds("begin End index") == ["IDENT", "IDENT", "IDENT"]

    def test_reserved_words(self):
        for word in ("when", "groups", "reval", "step", "load", "map", "mapa", "function"):
            toks = tokenize(word)
            assert toks[0].kind == "RESERVED", word

    def test_hyphenated_reserved_words_join(self):
        for word in ("in-group", "in-groups", "resolve-group"):
            toks = tokenize(word)
            assert [(t.kind, t.text) for t in toks] == [("RESERVED", word)]

    def test_hyphen_join_backtracks(self):
        # "in-dex" is not reserved: "in" minus "dex"
        toks = tokenize("in-dex")
        assert [(t.kind, t.text) for t in toks] == [
            ("IDENT", "in"), ("-", "-"), ("IDENT", "dex"),
        ]

    def test_subtraction_of_identifiers_unaffected(self):
        assert kinds("a-b") == ["IDENT", "-", "IDENT"]


class TestStrings:
    def test_plain(self):
        tok = tokenize('"hello"')[0]
        assert tok.kind == "STRING"
        assert tok.value == "hello"

    def test_escapes(self):
        assert tokenize(r'"a\nb\tc\\d\"e"')[0].value == 'a\nb\tc\\d"e'

    def test_unterminated(self):
        with pytest.raises(UnterminatedStringError):
            tokenize('"abc')

    def test_newline_inside_string(self):
        with pytest.raises(UnterminatedStringError):
            tokenize('"abc\ndef"')

    def test_unknown_escape(self):
        with pytest.raises(IllegalCharacterError):
            tokenize(r'"a\qb"')


class TestErrors:
    def test_illegal_character(self):
        with pytest.raises(IllegalCharacterError) as exc:
            tokenize("a ~ b")
        assert exc.value.line == 1
        assert exc.value.col == 3

    def test_single_ampersand(self):
        with pytest.raises(IllegalCharacterError):
            tokenize("a & b")

    def test_single_pipe(self):
        with pytest.raises(IllegalCharacterError):
            tokenize("a | b")
