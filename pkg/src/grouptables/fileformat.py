"""Canonical text formats for groups and maps.

Group file: line 1 is `group <n>`; line 2 holds the n element labels
(identity first); the next n lines are the table rows of zero-based roster
indices.  Structured elements print as parenthesized tuples, e.g. `(0 1)`,
so label tokenization is paren-aware.  parse(print(g)) round-trips exactly.

Map file: one `x -> y` line per pair, with the same label syntax.
"""
from __future__ import annotations

from .core import validate_group
from .errors import DomainError
from .gmaps import GroupMap


def format_element(x):
    if isinstance(x, tuple):
        return "(" + " ".join(format_element(c) for c in x) + ")"
    if isinstance(x, int):
        return str(x)
    s = str(x)
    if not s or any(ch in s for ch in "() \t\n"):
        raise DomainError(f"unprintable symbol label: {x!r}")
    return s


def _tokenize(text):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            out.append(ch)
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()":
                j += 1
            out.append(text[i:j])
            i = j
    return out


def _parse_one(tokens, k):
    if k >= len(tokens):
        raise DomainError("unexpected end of element text")
    t = tokens[k]
    if t == "(":
        parts = []
        k += 1
        while k < len(tokens) and tokens[k] != ")":
            part, k = _parse_one(tokens, k)
            parts.append(part)
        if k >= len(tokens):
            raise DomainError("unbalanced parenthesis in element text")
        return tuple(parts), k + 1
    if t == ")":
        raise DomainError("unexpected ')' in element text")
    if t.lstrip("-").isdigit():
        return int(t), k + 1
    return t, k + 1


def parse_elements(text):
    """All elements in a whitespace-separated, paren-aware label string."""
    tokens = _tokenize(text)
    out = []
    k = 0
    while k < len(tokens):
        x, k = _parse_one(tokens, k)
        out.append(x)
    return out


def parse_element(text):
    out = parse_elements(text)
    if len(out) != 1:
        raise DomainError(f"expected one element label, got {len(out)}")
    return out[0]


def print_group(g):
    lines = [f"group {g.order}"]
    lines.append(" ".join(format_element(x) for x in g.roster))
    for row in g.table:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_group(text):
    """Parse a group file into (roster, table) without validating axioms."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DomainError("empty group file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "group" or not head[1].isdigit():
        raise DomainError(f"bad header line: {lines[0]!r}")
    n = int(head[1])
    if len(lines) != n + 2:
        raise DomainError(f"expected {n + 2} lines, got {len(lines)}")
    roster = parse_elements(lines[1])
    if len(roster) != n:
        raise DomainError(f"expected {n} labels, got {len(roster)}")
    table = []
    for ln in lines[2:]:
        row = ln.split()
        if len(row) != n or not all(v.isdigit() for v in row):
            raise DomainError(f"bad table row: {ln!r}")
        table.append(tuple(int(v) for v in row))
    return tuple(roster), tuple(table)


def load_group(text):
    """Parse and validate a group file."""
    roster, table = parse_group(text)
    return validate_group(roster, table)


def print_map(m):
    return "".join(
        f"{format_element(k)} -> {format_element(v)}\n" for k, v in m.pairs
    )


def parse_map(text):
    pairs = []
    for ln in text.splitlines():
        if not ln.strip():
            continue
        if "->" not in ln:
            raise DomainError(f"bad map line: {ln!r}")
        left, right = ln.split("->", 1)
        pairs.append((parse_element(left), parse_element(right)))
    return GroupMap(tuple(pairs))
