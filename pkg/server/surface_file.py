#!/usr/bin/env python3
"""
Reader for line-oriented surface spec files.

    # Corollary torus
    surface S
    type torus
    construction double_of_ribbon k=1
    cover_pi1 triangle(2,3,7)
    h2_cert rank=1 source="H2(T(2,3,7)) = Z"

    surface SU
    connected_sum S
    summand unknotted_rp2 e=-2

Each `surface` line opens a block; later lines refine the open block.
"""
import logging
import re
import shlex
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from fpgroup import Presentation, free_product_all, parse_presentation, triangle_presentation
from obstruct import (
    ConnectedSum, DoubleOfRibbon, H2Certificate, IndecomposabilityCertificate,
    SurfaceSpec, SurfaceType, TwoKnot, Unknotted, pretzel_band_surface,
)

logger = logging.getLogger(__name__)


class SurfaceFileError(ValueError):
    """A spec file line that cannot be read; `line` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class _Block:
    name: str
    line: int
    surface_type: Optional[SurfaceType] = None
    construction: Optional[str] = None
    construction_args: Dict[str, int] = field(default_factory=dict)
    cover_pi1: Optional[Presentation] = None
    h2_cert: Optional[H2Certificate] = None
    indecomposable: Optional[IndecomposabilityCertificate] = None
    summands: List[int] = field(default_factory=list)
    sum_of: List[str] = field(default_factory=list)


@dataclass(frozen=True)
class SurfaceEntry:
    name: str
    spec: SurfaceSpec
    indecomposable: Optional[IndecomposabilityCertificate] = None


@dataclass(frozen=True)
class SurfaceFile:
    entries: Tuple[SurfaceEntry, ...]

    def names(self) -> List[str]:
        return [e.name for e in self.entries]

    def __getitem__(self, name: str) -> SurfaceEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(name)


_KEY_INT_RE = re.compile(r"([a-z]+)=(-?\d+)")
_TRIANGLE_RE = re.compile(r"triangle\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


def _key_ints(tokens: List[str], line: int) -> Dict[str, int]:
    values = {}
    for token in tokens:
        m = _KEY_INT_RE.fullmatch(token)
        if not m:
            raise SurfaceFileError(f"Expected key=<integer>, got {token!r}", line)
        values[m.group(1)] = int(m.group(2))
    return values


def _key_strings(tokens: List[str], line: int) -> Dict[str, str]:
    values = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep:
            raise SurfaceFileError(f"Expected key=value, got {token!r}", line)
        values[key] = value
    return values


def _split_top_level(text: str) -> List[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch in "(<":
            depth += 1
        elif ch in ")>":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    parts.append("".join(current).strip())
    return [p for p in parts if p]


def parse_group(text: str, line: int) -> Presentation:
    """A presentation, `triangle(p,q,r)` or `free_product(g1, g2, ...)`."""
    text = text.strip()
    try:
        m = _TRIANGLE_RE.fullmatch(text)
        if m:
            return triangle_presentation(*(int(v) for v in m.groups()))
        if text.startswith("free_product(") and text.endswith(")"):
            return free_product_all([parse_group(p, line) for p in _split_top_level(text[len("free_product("):-1])])
        return parse_presentation(text)
    except SurfaceFileError:
        raise
    except ValueError as e:
        raise SurfaceFileError(str(e), line) from e


def _parse_type(tokens: List[str], line: int) -> SurfaceType:
    if tokens == ["torus"]:
        return SurfaceType.torus()
    if tokens == ["klein"]:
        return SurfaceType.klein_bottle()
    if tokens == ["sphere"]:
        return SurfaceType.sphere()
    if len(tokens) == 2 and tokens[0] in ("orientable", "nonorientable"):
        values = _key_ints(tokens[1:], line)
        try:
            if tokens[0] == "orientable" and "g" in values:
                return SurfaceType(True, values["g"])
            if tokens[0] == "nonorientable" and "c" in values:
                return SurfaceType(False, crosscaps=values["c"])
        except ValueError as e:
            raise SurfaceFileError(str(e), line) from e
    raise SurfaceFileError(f"Unknown surface type {' '.join(tokens)!r}", line)


def _read_blocks(text: str) -> List[_Block]:
    blocks: List[_Block] = []
    for number, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        keyword, _, rest = stripped.partition(" ")
        rest = rest.strip()
        if keyword == "surface":
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", rest):
                raise SurfaceFileError(f"Invalid surface name {rest!r}", number)
            if any(b.name == rest for b in blocks):
                raise SurfaceFileError(f"Surface {rest!r} defined twice", number)
            blocks.append(_Block(rest, number))
            continue
        if not blocks:
            raise SurfaceFileError(f"{keyword!r} before any surface line", number)
        block = blocks[-1]
        if keyword == "cover_pi1":
            block.cover_pi1 = parse_group(rest, number)
            continue
        try:
            tokens = shlex.split(rest)
        except ValueError as e:
            raise SurfaceFileError(str(e), number) from e
        if keyword == "type":
            block.surface_type = _parse_type(tokens, number)
        elif keyword == "construction":
            if not tokens or tokens[0] not in ("double_of_ribbon", "two_knot", "unknotted", "pretzel_band"):
                raise SurfaceFileError(f"Unknown construction {rest!r}", number)
            if block.sum_of:
                raise SurfaceFileError("A connected_sum block cannot also have a construction", number)
            block.construction = tokens[0]
            block.construction_args = _key_ints(tokens[1:], number)
        elif keyword == "h2_cert":
            values = _key_strings(tokens, number)
            if "rank" not in values or not values["rank"].isdigit():
                raise SurfaceFileError("h2_cert needs rank=<n>", number)
            block.h2_cert = H2Certificate.literature(int(values["rank"]), values.get("source", "unspecified"))
        elif keyword == "indecomposable":
            values = _key_strings(tokens, number)
            block.indecomposable = IndecomposabilityCertificate(
                values.get("group", "cover group"), values.get("source", "unspecified")
            )
        elif keyword == "summand":
            if len(tokens) != 2 or tokens[0] != "unknotted_rp2":
                raise SurfaceFileError("Expected `summand unknotted_rp2 e=<±2>`", number)
            values = _key_ints(tokens[1:], number)
            if "e" not in values:
                raise SurfaceFileError("summand unknotted_rp2 needs e=<±2>", number)
            block.summands.append(values["e"])
        elif keyword == "connected_sum":
            if not tokens:
                raise SurfaceFileError("connected_sum needs at least one surface name", number)
            if block.construction is not None:
                raise SurfaceFileError("A block with a construction cannot also be a connected_sum", number)
            block.sum_of.extend(tokens)
        else:
            raise SurfaceFileError(f"Unknown keyword {keyword!r}", number)
    return blocks


def _require(args: Dict[str, int], key: str, block: _Block) -> int:
    if key not in args:
        raise SurfaceFileError(f"{block.construction} needs {key}=<n>", block.line)
    return args[key]


def _build(block: _Block, built: Dict[str, SurfaceEntry]) -> SurfaceEntry:
    args = block.construction_args
    if block.sum_of:
        missing = [n for n in block.sum_of if n not in built]
        if missing:
            raise SurfaceFileError(f"connected_sum refers to undefined {missing}", block.line)
        base: SurfaceSpec = ConnectedSum(tuple(built[n].spec for n in block.sum_of))
    elif block.construction == "double_of_ribbon":
        if block.surface_type is None or block.cover_pi1 is None:
            raise SurfaceFileError("double_of_ribbon needs a type and a cover_pi1", block.line)
        base = DoubleOfRibbon(block.surface_type, _require(args, "k", block), block.cover_pi1,
                              block.h2_cert, name=block.name)
    elif block.construction == "pretzel_band":
        base = pretzel_band_surface(_require(args, "n", block))
        if block.surface_type is not None and block.surface_type != base.surface_type:
            raise SurfaceFileError(f"pretzel_band gives a {base.surface_type}, not a {block.surface_type}",
                                   block.line)
    elif block.construction == "two_knot":
        base = TwoKnot(block.name)
    elif block.construction == "unknotted":
        if block.surface_type is None:
            raise SurfaceFileError("unknotted needs a type", block.line)
        base = Unknotted(block.surface_type, args.get("e", 0))
    else:
        raise SurfaceFileError(f"Surface {block.name!r} has no construction", block.line)
    if block.summands:
        base = ConnectedSum((base,) + tuple(Unknotted.rp2(e) for e in block.summands))
    indecomposable = block.indecomposable
    if indecomposable is None and block.sum_of and len(block.sum_of) == 1:
        indecomposable = built[block.sum_of[0]].indecomposable
    return SurfaceEntry(block.name, base, indecomposable)


def parse_surface_file(text: str) -> SurfaceFile:
    built: Dict[str, SurfaceEntry] = {}
    for block in _read_blocks(text):
        try:
            built[block.name] = _build(block, built)
        except SurfaceFileError:
            raise
        except ValueError as e:
            raise SurfaceFileError(str(e), block.line) from e
    if not built:
        raise SurfaceFileError("No surface defined", 1)
    logger.info(f"📄 Read {len(built)} surface(s): {', '.join(built)}")
    return SurfaceFile(tuple(built.values()))


def load_surface_file(path: Path) -> SurfaceFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SurfaceFileError(f"Cannot read {path}: {e.strerror}", 0) from e
    return parse_surface_file(text)
