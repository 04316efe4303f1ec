"""Java front end: primitive-type parameter sites and the test inputs bound to them.

Parsing is done with tree-sitter. Front ends are looked up by file suffix in
``FRONT_ENDS`` so other grammars can be added beside :class:`JavaFrontEnd`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Iterator

import tree_sitter_java
from tree_sitter import Language, Node, Parser

_JAVA = Language(tree_sitter_java.language())

OPERATORS = ("|", "&", "^", "~", "<<", ">>", ">>>", "%", "+", "-", "*", "/")
_OPERATOR_SET = frozenset(OPERATORS)

_CLASS_NODES = {"class_declaration", "interface_declaration", "enum_declaration", "record_declaration"}
_CALLABLE_NODES = {"method_declaration", "constructor_declaration"}
_COMMENT_NODES = {"line_comment", "block_comment"}
_NUMBER_LITERALS = {
    "decimal_integer_literal",
    "hex_integer_literal",
    "octal_integer_literal",
    "binary_integer_literal",
    "decimal_floating_point_literal",
    "hex_floating_point_literal",
}


class Kind(str, Enum):
    CODE_UNDER_TEST = "CODE_UNDER_TEST"
    TEST = "TEST"


class DeclaredType(str, Enum):
    STRING = "STRING"
    BYTE = "BYTE"
    SHORT = "SHORT"
    INT = "INT"
    LONG = "LONG"
    FLOAT = "FLOAT"
    DOUBLE = "DOUBLE"

    @property
    def group(self) -> str:
        return "STRING" if self is DeclaredType.STRING else "NUMBER"


class Origin(str, Enum):
    DIRECT_LITERAL = "DIRECT_LITERAL"
    LOCAL_VAR_LITERAL = "LOCAL_VAR_LITERAL"
    FINAL_STATIC_FIELD = "FINAL_STATIC_FIELD"


_TYPE_NAMES = {
    "String": DeclaredType.STRING,
    "java.lang.String": DeclaredType.STRING,
    "byte": DeclaredType.BYTE,
    "short": DeclaredType.SHORT,
    "int": DeclaredType.INT,
    "long": DeclaredType.LONG,
    "float": DeclaredType.FLOAT,
    "double": DeclaredType.DOUBLE,
}


class JavaParseError(ValueError):
    def __init__(self, path: str, line: int, column: int, detail: str = "syntax error"):
        super().__init__(f"{path}:{line}:{column}: {detail}")
        self.path, self.line, self.column = path, line, column


@dataclass(frozen=True)
class SourceUnit:
    path: str
    text: str
    kind: Kind = Kind.CODE_UNDER_TEST

    @classmethod
    def from_path(cls, path: str | Path, kind: Kind = Kind.CODE_UNDER_TEST) -> "SourceUnit":
        return cls(str(path), Path(path).read_text(encoding="utf-8"), kind)


@dataclass(frozen=True)
class ParameterSite:
    class_id: str
    method_sig: str
    param_name: str
    param_index: int
    declared_type: DeclaredType
    method_source: str
    operators: tuple[str, ...] = ()

    @property
    def key(self) -> tuple[str, str, int]:
        return (self.class_id, self.method_sig, self.param_index)

    @property
    def method_name(self) -> str:
        return self.method_sig.split("(", 1)[0]

    @property
    def param_types(self) -> list[str]:
        inner = self.method_sig[self.method_sig.index("(") + 1:-1]
        return _split_types(inner)

    @property
    def group(self) -> str:
        return self.declared_type.group

    def to_dict(self) -> dict[str, Any]:
        return {
            "class_id": self.class_id,
            "method_sig": self.method_sig,
            "param_name": self.param_name,
            "param_index": self.param_index,
            "declared_type": self.declared_type.value,
            "method_source": self.method_source,
            "operators": list(self.operators),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "ParameterSite":
        return cls(
            class_id=d["class_id"],
            method_sig=d["method_sig"],
            param_name=d["param_name"],
            param_index=int(d["param_index"]),
            declared_type=DeclaredType(d["declared_type"]),
            method_source=d["method_source"],
            operators=tuple(d.get("operators", ())),
        )


@dataclass(frozen=True)
class BoundInput:
    site: ParameterSite
    literal_text: str
    value_kind: str  # STRING or NUMBER
    origin: Origin
    test_id: str
    value: str = ""  # decoded string value; equals literal_text for numbers
    span: tuple[int, int] = (0, 0)  # byte offsets of the literal in the test source
    call_span: tuple[int, int] = field(default=(0, 0), compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "site": self.site.to_dict(),
            "literal_text": self.literal_text,
            "value": self.value,
            "value_kind": self.value_kind,
            "origin": self.origin.value,
            "test_id": self.test_id,
            "span": list(self.span),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "BoundInput":
        return cls(
            site=ParameterSite.from_dict(d["site"]),
            literal_text=d["literal_text"],
            value_kind=d["value_kind"],
            origin=Origin(d["origin"]),
            test_id=d["test_id"],
            value=d.get("value", ""),
            span=tuple(d.get("span", (0, 0))),  # type: ignore[arg-type]
        )


def _split_types(inner: str) -> list[str]:
    if not inner.strip():
        return []
    out, depth, cur = [], 0, []
    for ch in inner:
        if ch == "<":
            depth += 1
        elif ch == ">":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur).strip())
    return out


def _text(node: Node) -> str:
    return node.text.decode("utf-8")


def _first_error(node: Node) -> Node | None:
    if node.type == "ERROR" or node.is_missing:
        return node
    if not node.has_error:
        return None
    for child in node.children:
        found = _first_error(child)
        if found is not None:
            return found
    return node


_ESCAPES = {"b": "\b", "t": "\t", "n": "\n", "f": "\f", "r": "\r", "s": " ", '"': '"', "'": "'", "\\": "\\"}
_ESCAPE_RE = re.compile(r"\\(u+[0-9a-fA-F]{4}|[0-3]?[0-7]{1,2}|[btnfrs\"'\\]|\n)")


def decode_java_string(literal: str) -> str:
    """Value of a Java string literal or text block, given its source text."""
    if literal.startswith('"""'):
        body = literal[3:-3]
        body = body.split("\n", 1)[1] if "\n" in body else body
        lines = body.split("\n")
        indents = [len(l) - len(l.lstrip()) for l in lines if l.strip()]
        if lines and not lines[-1].strip():
            indents.append(len(lines[-1]))
        cut = min(indents) if indents else 0
        body = "\n".join(l[cut:].rstrip() for l in lines)
    else:
        body = literal[1:-1]

    def repl(m: re.Match[str]) -> str:
        esc = m.group(1)
        if esc == "\n":
            return ""
        if esc[0] == "u":
            return chr(int(esc.lstrip("u"), 16))
        if esc[0].isdigit():
            return chr(int(esc, 8))
        return _ESCAPES[esc]

    return _ESCAPE_RE.sub(repl, body)


def _strip_wrappers(node: Node) -> Node:
    while node.type in ("parenthesized_expression", "cast_expression"):
        inner = node.child_by_field_name("value") if node.type == "cast_expression" else node.named_children[0]
        if inner is None:
            break
        node = inner
    return node


def _collect_operators(body: Node | None, name: str) -> tuple[str, ...]:
    if body is None:
        return ()
    found: set[str] = set()

    def is_param(n: Node | None) -> bool:
        if n is None:
            return False
        n = _strip_wrappers(n)
        return n.type == "identifier" and _text(n) == name

    stack = [body]
    while stack:
        n = stack.pop()
        t = n.type
        if t == "binary_expression":
            op = _text(n.child_by_field_name("operator"))
            if op in _OPERATOR_SET and (is_param(n.child_by_field_name("left"))
                                        or is_param(n.child_by_field_name("right"))):
                found.add(op)
        elif t == "unary_expression":
            op = _text(n.child_by_field_name("operator"))
            if op in ("~", "-") and is_param(n.child_by_field_name("operand")):
                found.add(op)
        elif t == "assignment_expression":
            op = _text(n.child_by_field_name("operator"))[:-1]
            if op in _OPERATOR_SET and (is_param(n.child_by_field_name("left"))
                                        or is_param(n.child_by_field_name("right"))):
                found.add(op)
        stack.extend(n.children)
    return tuple(op for op in OPERATORS if op in found)


def _leading_comment_start(node: Node) -> int:
    start = node.start_byte
    line = node.start_point[0]
    prev = node.prev_sibling
    while prev is not None and prev.type in _COMMENT_NODES and prev.end_point[0] >= line - 1:
        start = prev.start_byte
        line = prev.start_point[0]
        prev = prev.prev_sibling
    return start


@dataclass
class _Callable:
    class_id: str
    simple_class: str
    name: str
    is_ctor: bool
    param_types: list[str]
    sites: dict[int, ParameterSite]


class JavaFrontEnd:
    suffixes = (".java",)

    def __init__(self) -> None:
        self._parser = Parser(_JAVA)

    def parse(self, unit: SourceUnit) -> Node:
        tree = self._parser.parse(unit.text.encode("utf-8"))
        err = _first_error(tree.root_node)
        if err is not None:
            line, col = err.start_point
            detail = "missing " + err.type if err.is_missing else "syntax error"
            raise JavaParseError(unit.path, line + 1, col + 1, detail)
        return tree.root_node

    # -- declarations -------------------------------------------------

    def _classes(self, root: Node) -> Iterator[tuple[str, Node]]:
        package = ""
        for child in root.named_children:
            if child.type == "package_declaration":
                for c in child.named_children:
                    if c.type in ("scoped_identifier", "identifier"):
                        package = _text(c)

        def walk(node: Node, prefix: str) -> Iterator[tuple[str, Node]]:
            for child in node.named_children:
                if child.type in _CLASS_NODES:
                    name = _text(child.child_by_field_name("name"))
                    cid = f"{prefix}.{name}" if prefix else name
                    yield cid, child
                    body = child.child_by_field_name("body")
                    if body is not None:
                        yield from walk(body, cid)
                        for sub in body.named_children:
                            if sub.type == "enum_body_declarations":
                                yield from walk(sub, cid)

        yield from walk(root, package)

    @staticmethod
    def _members(class_node: Node) -> Iterator[Node]:
        body = class_node.child_by_field_name("body")
        if body is None:
            return
        for child in body.named_children:
            if child.type in _CALLABLE_NODES:
                yield child
            elif child.type == "enum_body_declarations":
                yield from (c for c in child.named_children if c.type in _CALLABLE_NODES)

    def _signature(self, member: Node) -> tuple[str, list[tuple[Node, str | None]]]:
        name = _text(member.child_by_field_name("name"))
        params = member.child_by_field_name("parameters")
        entries: list[tuple[Node, str | None]] = []
        types = []
        for p in params.named_children if params is not None else []:
            if p.type == "formal_parameter":
                tnode = p.child_by_field_name("type")
                tname = " ".join(_text(tnode).split())
                dims = p.child_by_field_name("dimensions")
                if dims is not None:
                    tname += _text(dims).replace(" ", "")
                types.append(tname)
                entries.append((p, tname))
            elif p.type == "spread_parameter":
                tnode = next(c for c in p.named_children if c.type not in ("modifiers",))
                types.append(" ".join(_text(tnode).split()) + "...")
                entries.append((p, None))
            elif p.type == "receiver_parameter":
                continue
        return f"{name}({', '.join(types)})", entries

    def extract_parameters(self, unit: SourceUnit) -> list[ParameterSite]:
        if not unit.text.strip():
            return []
        root = self.parse(unit)
        src = unit.text.encode("utf-8")
        sites: list[ParameterSite] = []
        for class_id, cls in self._classes(root):
            for member in self._members(cls):
                sig, entries = self._signature(member)
                method_source = src[_leading_comment_start(member):member.end_byte].decode("utf-8")
                body = member.child_by_field_name("body")
                for index, (pnode, tname) in enumerate(entries):
                    declared = _TYPE_NAMES.get(tname) if tname else None
                    if declared is None:
                        continue
                    pname = _text(pnode.child_by_field_name("name"))
                    ops = _collect_operators(body, pname) if declared is not DeclaredType.STRING else ()
                    sites.append(ParameterSite(class_id, sig, pname, index, declared, method_source, ops))
        return sites

    # -- test inputs --------------------------------------------------

    @staticmethod
    def _literal(node: Node) -> Node | None:
        """The node itself when it is an admitted string/number literal (incl. signed numbers)."""
        if node.type == "string_literal" or node.type in _NUMBER_LITERALS:
            return node
        if node.type == "unary_expression":
            op = _text(node.child_by_field_name("operator"))
            operand = node.child_by_field_name("operand")
            if op in ("-", "+") and operand is not None and operand.type in _NUMBER_LITERALS:
                return node
        return None

    @staticmethod
    def _literal_kind(node: Node) -> str:
        return "STRING" if node.type == "string_literal" else "NUMBER"

    @staticmethod
    def _compatible(arg: Node, tname: str) -> bool:
        t = arg.type
        if t == "string_literal":
            return tname in ("String", "java.lang.String", "Object", "CharSequence")
        if t in _NUMBER_LITERALS or (t == "unary_expression" and JavaFrontEnd._literal(arg) is not None):
            return tname in ("byte", "short", "int", "long", "float", "double", "char", "Object", "Number",
                             "Integer", "Long", "Short", "Byte", "Float", "Double")
        if t == "character_literal":
            return tname in ("char", "int", "long", "float", "double", "Character", "Object")
        if t in ("true", "false"):
            return tname in ("boolean", "Boolean", "Object")
        if t == "null_literal":
            return tname not in _TYPE_NAMES or tname in ("String", "java.lang.String")
        return True

    def extract_test_inputs(self, test: SourceUnit, sites: list[ParameterSite]) -> list[BoundInput]:
        if not test.text.strip() or not sites:
            return []
        root = self.parse(test)
        callables: dict[tuple[str, str], _Callable] = {}
        for s in sites:
            c = callables.get((s.class_id, s.method_sig))
            if c is None:
                simple = s.class_id.rsplit(".", 1)[-1]
                c = _Callable(s.class_id, simple, s.method_name, s.method_name == simple, s.param_types, {})
                callables[(s.class_id, s.method_sig)] = c
            c.sites[s.param_index] = s
        by_name: dict[tuple[str, int, bool], list[_Callable]] = {}
        for c in callables.values():
            by_name.setdefault((c.name, len(c.param_types), c.is_ctor), []).append(c)

        out: list[BoundInput] = []
        for class_id, cls in self._classes(root):
            test_class = class_id.rsplit(".", 1)[-1]
            statics = self._static_finals(cls)
            for member in self._members(cls):
                body = member.child_by_field_name("body")
                if body is None:
                    continue
                test_id = f"{test_class}.{_text(member.child_by_field_name('name'))}"
                locals_ = self._literal_locals(body)
                for call in self._calls(body):
                    out.extend(self._bind(call, by_name, locals_, statics, test_id))
        return out

    @staticmethod
    def _static_finals(cls: Node) -> dict[str, Node]:
        out: dict[str, Node] = {}
        body = cls.child_by_field_name("body")
        for child in body.named_children if body is not None else []:
            if child.type != "field_declaration":
                continue
            mods = next((c for c in child.named_children if c.type == "modifiers"), None)
            words = set(_text(mods).split()) if mods is not None else set()
            if not {"static", "final"} <= words:
                continue
            for decl in child.children_by_field_name("declarator"):
                value = decl.child_by_field_name("value")
                if value is not None and JavaFrontEnd._literal(value) is not None:
                    out[_text(decl.child_by_field_name("name"))] = value
        return out

    @staticmethod
    def _literal_locals(body: Node) -> list[tuple[int, str, Node]]:
        found = []
        stack = [body]
        while stack:
            n = stack.pop()
            if n.type == "local_variable_declaration":
                for decl in n.children_by_field_name("declarator"):
                    value = decl.child_by_field_name("value")
                    if value is not None and JavaFrontEnd._literal(value) is not None:
                        found.append((decl.start_byte, _text(decl.child_by_field_name("name")), value))
            if n.type in ("class_body", "lambda_expression"):
                continue
            stack.extend(n.children)
        return sorted(found, key=lambda x: x[0])

    @staticmethod
    def _calls(body: Node) -> list[Node]:
        found = []
        stack = [body]
        while stack:
            n = stack.pop()
            if n.type in ("object_creation_expression", "method_invocation"):
                found.append(n)
            stack.extend(n.children)
        return sorted(found, key=lambda n: n.start_byte)

    def _bind(self, call: Node, by_name, locals_, statics, test_id: str) -> list[BoundInput]:
        args_node = call.child_by_field_name("arguments")
        if args_node is None:
            return []
        args = [a for a in args_node.named_children if a.type not in _COMMENT_NODES]
        if call.type == "object_creation_expression":
            tnode = call.child_by_field_name("type")
            name = re.sub(r"<.*>", "", _text(tnode)).split(".")[-1].strip()
            is_ctor = True
        else:
            name = _text(call.child_by_field_name("name"))
            is_ctor = False
        candidates = by_name.get((name, len(args), is_ctor), [])
        candidates = [c for c in candidates if all(self._compatible(a, t) for a, t in zip(args, c.param_types))]
        if not candidates:
            return []
        target = candidates[0]
        bound = []
        for index, arg in enumerate(args):
            site = target.sites.get(index)
            if site is None:
                continue
            origin = Origin.DIRECT_LITERAL
            lit = self._literal(arg)
            if lit is None and arg.type == "identifier":
                ident = _text(arg)
                prior = [v for pos, n, v in locals_ if n == ident and pos < arg.start_byte]
                if prior:
                    lit, origin = prior[-1], Origin.LOCAL_VAR_LITERAL
                elif ident in statics:
                    lit, origin = statics[ident], Origin.FINAL_STATIC_FIELD
            if lit is None:
                continue
            kind = self._literal_kind(lit)
            if kind != site.group:
                continue
            text = _text(lit)
            value = decode_java_string(text) if kind == "STRING" else text
            bound.append(BoundInput(site, text, kind, origin, test_id, value,
                                    (lit.start_byte, lit.end_byte), (call.start_byte, call.end_byte)))
        return bound


FRONT_ENDS: dict[str, JavaFrontEnd] = {".java": JavaFrontEnd()}


def front_end_for(unit: SourceUnit) -> JavaFrontEnd:
    suffix = Path(unit.path).suffix or ".java"
    try:
        return FRONT_ENDS[suffix]
    except KeyError:
        raise ValueError(f"no front end for {suffix!r} files") from None


def extract_parameters(unit: SourceUnit) -> list[ParameterSite]:
    """One site per String/byte/short/int/long/float/double parameter, in source order."""
    return front_end_for(unit).extract_parameters(unit)


def extract_test_inputs(test: SourceUnit, sites: list[ParameterSite]) -> list[BoundInput]:
    """Literal arguments passed to the sites' methods, directly or through a literal
    local variable or a ``static final`` field of the test class."""
    return front_end_for(test).extract_test_inputs(test, sites)


def iter_java_files(paths: list[str | Path]) -> Iterator[Path]:
    for p in paths:
        p = Path(p)
        if p.is_dir():
            yield from sorted(q for q in p.rglob("*.java") if q.is_file())
        else:
            yield p
