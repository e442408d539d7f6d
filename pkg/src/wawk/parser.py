"""Recursive-descent parser for analysis scripts.

Script grammar, roughly:

    program    := statement*
    statement  := trigger ':' block
    trigger    := 'BEGIN' | 'END' | expr (',' expr)*
    block      := '{' stmt* '}'
    stmt       := 'if' '(' expr ')' body ('else' body)?
                | IDENT '=' expr ';'
                | expr ';'
                | ';'
    body       := block | stmt

Precedence, loosest first: '||', '&&', comparisons, '+ -', '* /', unary
'! -', postfix ('@' offset, subscript, call). The '@' offset takes an
optionally signed integer literal and its left side must be a plain
(possibly dotted) name. Assignment is a statement, not an expression,
and its target is a plain undotted name.
"""

from . import ast
from .errors import ReservedKeywordError, UnexpectedTokenError
from .lexer import Token, tokenize

_CMP_OPS = ("==", "!=", "<", "<=", ">", ">=")


class _Parser:
    def __init__(self, tokens: list[Token]):
        if tokens:
            last = tokens[-1]
            eof = Token("EOF", "", last.line, last.col + len(last.text))
        else:
            eof = Token("EOF", "", 1, 1)
        self.tokens = tokens + [eof]
        self.pos = 0

    # --- token plumbing ---

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def check(self, kind: str) -> bool:
        return self.peek().kind == kind

    def accept(self, kind: str) -> Token | None:
        if self.check(kind):
            return self.advance()
        return None

    def expect(self, kind: str, context: str) -> Token:
        tok = self.peek()
        if tok.kind == kind:
            return self.advance()
        self.fail(f"expected {kind!r} {context}", tok)

    def fail(self, message: str, tok: Token):
        if tok.kind == "RESERVED":
            raise ReservedKeywordError(
                f"{tok.text!r} is reserved and not supported here", tok.line, tok.col
            )
        shown = tok.text if tok.kind != "EOF" else "end of input"
        raise UnexpectedTokenError(f"{message}, found {shown!r}", tok.line, tok.col)

    # --- grammar ---

    def program(self) -> ast.Program:
        statements = []
        while not self.check("EOF"):
            statements.append(self.statement())
        return ast.Program(tuple(statements))

    def statement(self) -> ast.Statement:
        tok = self.peek()
        if self.accept("BEGIN"):
            trigger = ast.Begin()
        elif self.accept("END"):
            trigger = ast.End()
        else:
            exprs = [self.expr()]
            while self.accept(","):
                exprs.append(self.expr())
            trigger = ast.Conditions(tuple(exprs))
        self.expect(":", "after statement trigger")
        body = self.block()
        return ast.Statement(trigger, body, line=tok.line)

    def block(self) -> tuple:
        self.expect("{", "to open an action block")
        stmts = []
        while not self.check("}"):
            if self.check("EOF"):
                self.fail("expected '}' to close an action block", self.peek())
            stmt = self.stmt()
            if stmt is not None:
                stmts.append(stmt)
        self.advance()
        return tuple(stmts)

    def stmt(self):
        if self.accept(";"):
            return None  # empty statement
        if self.accept("if"):
            return self.if_stmt()
        if self.check("IDENT") and self.tokens[self.pos + 1].kind == "=":
            name_tok = self.advance()
            if "." in name_tok.text:
                self.fail("cannot assign to a hierarchical signal name", name_tok)
            self.advance()  # '='
            value = self.expr()
            self.expect(";", "after assignment")
            return ast.Assign(name_tok.text, value)
        if self.check("INDEX") and self.tokens[self.pos + 1].kind == "=":
            self.fail("cannot assign to INDEX", self.peek())
        expr = self.expr()
        self.expect(";", "after expression statement")
        return ast.ExprStmt(expr)

    def if_stmt(self) -> ast.If:
        self.expect("(", "after 'if'")
        cond = self.expr()
        self.expect(")", "after if condition")
        then = self.body()
        orelse: tuple = ()
        if self.accept("else"):
            orelse = self.body()
        return ast.If(cond, then, orelse)

    def body(self) -> tuple:
        """A brace block, or a single statement treated as one."""
        if self.check("{"):
            return self.block()
        stmt = self.stmt()
        return (stmt,) if stmt is not None else ()

    # --- expressions, loosest binding first ---

    def expr(self):
        return self.or_expr()

    def or_expr(self):
        node = self.and_expr()
        while self.accept("||"):
            node = ast.Binary("||", node, self.and_expr())
        return node

    def and_expr(self):
        node = self.cmp_expr()
        while self.accept("&&"):
            node = ast.Binary("&&", node, self.cmp_expr())
        return node

    def cmp_expr(self):
        node = self.add_expr()
        while self.peek().kind in _CMP_OPS:
            op = self.advance().kind
            node = ast.Binary(op, node, self.add_expr())
        return node

    def add_expr(self):
        node = self.mul_expr()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            node = ast.Binary(op, node, self.mul_expr())
        return node

    def mul_expr(self):
        node = self.unary()
        while self.peek().kind in ("*", "/"):
            op = self.advance().kind
            node = ast.Binary(op, node, self.unary())
        return node

    def unary(self):
        if self.peek().kind in ("!", "-"):
            op = self.advance().kind
            return ast.Unary(op, self.unary())
        return self.postfix()

    def postfix(self):
        node = self.primary()
        while True:
            if self.accept("@"):
                node = self.offset_ref(node)
            elif self.check("["):
                self.advance()
                index = self.expr()
                self.expect("]", "after subscript")
                node = ast.Subscript(node, index)
            elif self.check("("):
                if not isinstance(node, ast.Ident):
                    self.fail("only a named function can be called", self.peek())
                self.advance()
                args = []
                if not self.check(")"):
                    args.append(self.expr())
                    while self.accept(","):
                        args.append(self.expr())
                self.expect(")", "after call arguments")
                node = ast.Call(node.name, tuple(args))
            else:
                return node

    def offset_ref(self, node) -> ast.OffsetRef:
        if not isinstance(node, ast.Ident):
            self.fail("left side of '@' must be a signal name", self.peek())
        sign = 1
        if self.accept("-"):
            sign = -1
        elif self.accept("+"):
            pass
        tok = self.expect("INT", "as '@' offset")
        return ast.OffsetRef(node, sign * tok.value)

    def primary(self):
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return ast.IntLit(tok.value)
        if tok.kind == "STRING":
            self.advance()
            return ast.StrLit(tok.value)
        if tok.kind == "IDENT":
            self.advance()
            return ast.Ident(tok.text)
        if tok.kind == "INDEX":
            self.advance()
            return ast.CurrentIndex()
        if tok.kind == "[":
            self.advance()
            items = []
            if not self.check("]"):
                items.append(self.expr())
                while self.accept(","):
                    items.append(self.expr())
            self.expect("]", "after list literal")
            return ast.ListLit(tuple(items))
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")", "after parenthesized expression")
            return node
        self.fail("expected an expression", tok)


def parse_program(tokens: list[Token]) -> ast.Program:
    return _Parser(tokens).program()


def parse_source(source: str) -> ast.Program:
    return parse_program(tokenize(source))
