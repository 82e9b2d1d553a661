"""
Endomorphism-sequence files.

    width 1
    level 0 v0 v1 v2
    level 1 v0 v1
    map 1 v0:v0 v1:v1 v2:v0

`level i` and `map i` lines may repeat to continue a long line. A missing
`level 0` means the whole universe. `#` starts a comment.
"""
from typing import Dict, List, Optional, Union

from enforce_typing import enforce_types

from homenum.endoseq.endo_sequence import EndoSequence
from homenum.structures.assignment import PartialAssignment
from homenum.structures.structio import parse_assignment
from homenum.structures.structure import Structure
from homenum.util.errors import InvalidSequenceError, ParseError
from homenum.util.strutil import decode_utf8, read_utf8_file


def parse_sequence(
    text: Union[str, bytes], A: Structure, k: Optional[int] = None
) -> EndoSequence:
    """
    @description
      Parse a sequence file against structure A.

    @arguments
      text -- file contents
      A -- the structure the sequence is for
      k -- width; overrides the file's `width` line when given

    @return
      seq -- EndoSequence, not yet validated (see validate_sequence)
    """
    # pylint: disable=too-many-branches
    text = decode_utf8(text)
    file_k: Optional[int] = None
    levels: Dict[int, List[str]] = {}
    maps: Dict[int, Dict[str, str]] = {}
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kw = toks[0]
        if kw == "width":
            if len(toks) != 2 or not toks[1].isdigit():
                raise ParseError(lineno, "expected 'width <k>'")
            file_k = int(toks[1])
            continue
        if kw not in ["level", "map"]:
            raise ParseError(lineno, f"unknown keyword '{kw}'")
        if len(toks) < 2 or not toks[1].isdigit():
            raise ParseError(lineno, f"expected '{kw} <i> ...'")
        i = int(toks[1])
        if kw == "level":
            for elem in toks[2:]:
                if elem not in A.index:
                    raise ParseError(lineno, f"unknown element '{elem}'")
            levels.setdefault(i, []).extend(toks[2:])
        else:
            if i < 1:
                raise ParseError(lineno, "maps are numbered from 1")
            pairs = parse_assignment(toks[2:], lineno)
            into = maps.setdefault(i, {})
            for src, dst in pairs.items():
                if src in into:
                    raise ParseError(lineno, f"map {i}: '{src}' mapped twice")
                into[src] = dst

    levels.setdefault(0, list(A.universe))
    n = max(list(levels) + list(maps))
    for i in range(n + 1):
        if i not in levels:
            raise ParseError(lineno, f"missing 'level {i}'")
    for i in range(1, n + 1):
        if i not in maps:
            raise ParseError(lineno, f"missing 'map {i}'")

    width = k if k is not None else file_k
    if width is None:
        raise ParseError(lineno, "no 'width' line and no width given")
    try:
        return EndoSequence(
            A,
            [tuple(levels[i]) for i in range(n + 1)],
            [PartialAssignment(maps[i]) for i in range(1, n + 1)],
            width,
        )
    except InvalidSequenceError as e:
        raise ParseError(lineno, str(e)) from e


@enforce_types
def serialize_sequence(seq: EndoSequence) -> str:
    order = seq.ordering
    lines = [f"width {seq.width}"]
    for i, level in enumerate(seq.levels):
        lines.append(" ".join([f"level {i}"] + list(level)))
    for i in range(1, seq.n + 1):
        lines.append(f"map {i} " + seq.phi(i).as_line(order))
    return "\n".join(lines) + "\n"


def read_sequence_file(path: str, A: Structure, k: Optional[int] = None) -> EndoSequence:
    return parse_sequence(read_utf8_file(path), A, k)
