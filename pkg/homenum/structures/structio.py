"""
Instance files: parse and serialize structures, plus the `src:dst` line
format for (partial) homomorphisms.

    vocab
    rel E 2
    structure K3
    elem a b c
    tuple E a b
    end

`#` starts a comment. Errors carry the 1-based line number.
"""
from typing import Dict, List, Set, Tuple, Union

from enforce_typing import enforce_types

from homenum.structures.assignment import PartialAssignment
from homenum.structures.structure import Structure
from homenum.structures.vocabulary import Vocabulary, valid_element_id
from homenum.util.errors import ParseError
from homenum.util.strutil import decode_utf8, read_utf8_file


@enforce_types
def parse_structure(text: Union[str, bytes]) -> Structure:
    """
    @description
      Parse one structure in the instance format.

    @arguments
      text -- file contents, str or utf-8 bytes

    @return
      A -- Structure, universe and tables in file order

    @notes
      Raises ParseError(lineno, msg) on any syntax or invariant violation.
    """
    text = decode_utf8(text)

    # pylint: disable=too-many-branches,too-many-statements
    state = "start"  # start -> vocab -> body -> done
    symbols: List[Tuple[str, int]] = []
    arities: Dict[str, int] = {}
    name = ""
    universe: List[str] = []
    elems: Set[str] = set()
    tables: Dict[str, List[Tuple[str, ...]]] = {}
    seen: Dict[str, Set[Tuple[str, ...]]] = {}
    lineno = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kw, args = toks[0], toks[1:]

        if state == "done":
            raise ParseError(lineno, f"unexpected '{kw}' after 'end'")

        if kw == "vocab":
            if state != "start" or args:
                raise ParseError(lineno, "'vocab' must be the first line, alone")
            state = "vocab"

        elif kw == "rel":
            if state != "vocab":
                raise ParseError(lineno, "'rel' outside the vocab section")
            if len(args) != 2:
                raise ParseError(lineno, "expected 'rel <name> <arity>'")
            rel, arity_s = args
            if not valid_element_id(rel):
                raise ParseError(lineno, f"bad relation name '{rel}'")
            if rel in arities:
                raise ParseError(lineno, f"duplicate relation symbol '{rel}'")
            try:
                arity = int(arity_s)
            except ValueError as e:
                raise ParseError(lineno, f"arity '{arity_s}' is not an int") from e
            if arity < 1:
                raise ParseError(lineno, f"arity of {rel} must be >= 1")
            symbols.append((rel, arity))
            arities[rel] = arity
            tables[rel], seen[rel] = [], set()

        elif kw == "structure":
            if state != "vocab":
                raise ParseError(lineno, "'structure' must follow the vocab section")
            if len(args) != 1:
                raise ParseError(lineno, "expected 'structure <name>'")
            name = args[0]
            state = "body"

        elif kw == "elem":
            if state != "body":
                raise ParseError(lineno, "'elem' outside a structure")
            if not args:
                raise ParseError(lineno, "'elem' needs at least one id")
            for elem in args:
                if not valid_element_id(elem):
                    raise ParseError(lineno, f"bad element id '{elem}'")
                if elem in elems:
                    raise ParseError(lineno, f"duplicate element '{elem}'")
                elems.add(elem)
                universe.append(elem)

        elif kw == "tuple":
            if state != "body":
                raise ParseError(lineno, "'tuple' outside a structure")
            if not args:
                raise ParseError(lineno, "expected 'tuple <rel> <id>...'")
            rel, ids = args[0], tuple(args[1:])
            if rel not in arities:
                raise ParseError(lineno, f"unknown relation symbol '{rel}'")
            if len(ids) != arities[rel]:
                raise ParseError(
                    lineno,
                    f"arity mismatch: {rel} has arity {arities[rel]}, got {len(ids)} ids",
                )
            for elem in ids:
                if elem not in elems:
                    raise ParseError(lineno, f"unknown element '{elem}'")
            if ids in seen[rel]:
                raise ParseError(lineno, f"duplicate tuple {rel} {' '.join(ids)}")
            seen[rel].add(ids)
            tables[rel].append(ids)

        elif kw == "end":
            if state != "body" or args:
                raise ParseError(lineno, "'end' without a structure")
            state = "done"

        else:
            raise ParseError(lineno, f"unknown keyword '{kw}'")

    if state != "done":
        raise ParseError(lineno, "missing 'end'")

    return Structure(Vocabulary(symbols), universe, tables, name)


@enforce_types
def serialize_structure(A: Structure) -> str:
    """Canonical text: one elem line, tuples grouped by symbol in vocab order"""
    lines = ["vocab"]
    lines += [f"rel {rel} {arity}" for rel, arity in A.vocabulary.symbols]
    lines += [f"structure {A.name}"]
    if A.universe:
        lines += ["elem " + " ".join(A.universe)]
    lines += [f"tuple {rel} {' '.join(tup)}" for rel, tup in A.tuples()]
    lines += ["end"]
    return "\n".join(lines) + "\n"


@enforce_types
def read_structure_file(path: str) -> Structure:
    return parse_structure(read_utf8_file(path))


@enforce_types
def write_structure_file(path: str, A: Structure):
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_structure(A))


@enforce_types
def format_assignment(f: PartialAssignment, order: Union[list, tuple]) -> str:
    """One output line: `src:dst` pairs in `order`. The bit-exact solution format."""
    return f.as_line(order)


@enforce_types
def parse_assignment(tokens: list, lineno: int = 0) -> PartialAssignment:
    """Inverse of format_assignment, from already-split tokens"""
    values: Dict[str, str] = {}
    for tok in tokens:
        parts = tok.split(":")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError(lineno, f"expected <src>:<dst>, got '{tok}'")
        src, dst = parts
        if src in values:
            raise ParseError(lineno, f"'{src}' mapped twice")
        values[src] = dst
    return PartialAssignment(values)
