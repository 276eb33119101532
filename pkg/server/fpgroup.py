#!/usr/bin/env python3
"""
Finitely presented group calculus.

Words are tuples of nonzero integers: letter +i is the i-th generator
(1-based), -i its inverse. Presentations keep their relators freely and
cyclically reduced. On top of that sit abelianization through the Smith
normal form, free products, finite permutation quotients, HLT coset
enumeration and Reidemeister-Schreier rewriting.
"""
import logging
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from exactlinalg import IntMatrix, smith_normal_form

logger = logging.getLogger(__name__)

DEFAULT_MAX_COSETS = 100_000
DEFAULT_MAX_QUOTIENT_ORDER = 100_000

Permutation = Tuple[int, ...]


class PresentationSyntaxError(ValueError):
    """Malformed presentation or word text; `position` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownGeneratorError(ValueError):
    """A word refers to a generator the presentation does not have."""


class QuotientArityError(ValueError):
    """Permutation images do not match the presentation's generators."""


class QuotientOverflowError(RuntimeError):
    """Closure enumeration of a permutation group exceeded its bound."""

    def __init__(self, max_order: int):
        super().__init__(f"permutation group has more than {max_order} elements")
        self.max_order = max_order


class CosetOverflowError(RuntimeError):
    """Coset enumeration did not close within the bound (not a proof of infinite index)."""

    def __init__(self, max_cosets: int):
        super().__init__(f"coset enumeration defined more than {max_cosets} cosets")
        self.max_cosets = max_cosets


class CosetTableError(RuntimeError):
    """A coset table violates one of its closure invariants."""


# --- Words -------------------------------------------------------------------

def free_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def cyclic_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    w = free_reduce(letters)
    start, end = 0, len(w)
    while end - start > 1 and w[start] == -w[end - 1]:
        start += 1
        end -= 1
    return w[start:end]


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the empty word is the identity."""
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(x == 0 for x in self.letters):
            raise ValueError("Letter 0 is not a generator")
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    @classmethod
    def generator(cls, index: int) -> "Word":
        """The word for the generator with 0-based position `index`."""
        return cls((index + 1,))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))

    def __pow__(self, exponent: int) -> "Word":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Word(self.letters * exponent)

    def max_generator(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    def exponent_sum(self, index: int) -> int:
        """Exponent sum of the generator with 0-based position `index`."""
        g = index + 1
        return sum(1 if x == g else -1 for x in self.letters if abs(x) == g)

    def syllables(self) -> List[Tuple[int, int]]:
        """Maximal runs as (0-based generator, signed exponent)."""
        runs: List[Tuple[int, int]] = []
        for x in self.letters:
            g, e = abs(x) - 1, (1 if x > 0 else -1)
            if runs and runs[-1][0] == g and (runs[-1][1] > 0) == (e > 0):
                runs[-1] = (g, runs[-1][1] + e)
            else:
                runs.append((g, e))
        return runs

    def format(self, names: Sequence[str]) -> str:
        parts = []
        for g, e in self.syllables():
            parts.append(names[g] if e == 1 else f"{names[g]}^{e}")
        return "*".join(parts) if parts else "1"


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a^-1 b^-1 a b."""
    return a.inverse() * b.inverse() * a * b


# --- Presentations -----------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    """A finite presentation: generator names plus cyclically reduced relators."""
    generator_names: Tuple[str, ...]
    relators: Tuple[Word, ...] = ()

    def __post_init__(self):
        names = tuple(self.generator_names)
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate generator names in {names}")
        for name in names:
            if not _NAME_RE.fullmatch(name):
                raise ValueError(f"Invalid generator name {name!r}")
        reduced = []
        for relator in self.relators:
            if relator.max_generator() > len(names):
                raise UnknownGeneratorError(
                    f"Relator uses generator {relator.max_generator()} but only {len(names)} exist"
                )
            letters = cyclic_reduce(relator.letters)
            if letters:
                reduced.append(Word(letters))
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "relators", tuple(reduced))

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    @property
    def relator_count(self) -> int:
        return len(self.relators)

    def generator(self, name: str) -> Word:
        try:
            return Word.generator(self.generator_names.index(name))
        except ValueError:
            raise UnknownGeneratorError(f"Unknown generator {name!r}") from None

    def format(self) -> str:
        names = ", ".join(self.generator_names)
        rels = ", ".join(r.format(self.generator_names) for r in self.relators)
        return f"<{names} | {rels}>"

    def __str__(self) -> str:
        return self.format()


# --- Parsing -----------------------------------------------------------------

_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")
_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[a-zA-Z][a-zA-Z0-9_]*)|(?P<int>-?\d+)|(?P<op>[<>|,*^()]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise PresentationSyntaxError(f"Unexpected character {text[pos:].lstrip()[0]!r}",
                                          len(text) - len(text[pos:].lstrip()))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the token stream of a presentation or word."""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.names: Dict[str, int] = {}

    def peek(self) -> Tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, value: Optional[str] = None, kind: Optional[str] = None) -> Tuple[str, str, int]:
        tok = self.peek()
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            expected = repr(value) if value is not None else kind
            found = repr(tok[1]) if tok[0] != "end" else "end of input"
            raise PresentationSyntaxError(f"Expected {expected}, found {found}", tok[2])
        self.i += 1
        return tok

    def at(self, value: str) -> bool:
        return self.peek()[1] == value and self.peek()[0] == "op"

    def presentation(self) -> Presentation:
        self.take("<")
        generator_names: List[str] = []
        if not self.at("|"):
            while True:
                _, name, pos = self.take(kind="name")
                if name in self.names:
                    raise PresentationSyntaxError(f"Duplicate generator {name!r}", pos)
                self.names[name] = len(generator_names)
                generator_names.append(name)
                if not self.at(","):
                    break
                self.take(",")
        self.take("|")
        relators: List[Word] = []
        if not self.at(">"):
            while True:
                relators.append(self.word())
                if not self.at(","):
                    break
                self.take(",")
        self.take(">")
        self.take(kind="end")
        return Presentation(tuple(generator_names), tuple(relators))

    def word(self) -> Word:
        result = self.factor()
        while self.at("*"):
            self.take("*")
            result = result * self.factor()
        return result

    def factor(self) -> Word:
        tok = self.peek()
        if tok[0] == "name":
            self.take()
            if tok[1] not in self.names:
                raise PresentationSyntaxError(f"Unknown generator {tok[1]!r}", tok[2])
            base = Word.generator(self.names[tok[1]])
        elif tok[0] == "int" and tok[1] == "1":
            self.take()
            base = Word.identity()
        elif self.at("("):
            self.take("(")
            base = self.word()
            self.take(")")
        else:
            found = repr(tok[1]) if tok[0] != "end" else "end of input"
            raise PresentationSyntaxError(f"Expected a generator or '(', found {found}", tok[2])
        if self.at("^"):
            self.take("^")
            _, value, pos = self.take(kind="int")
            exponent = int(value)
            if exponent == 0:
                raise PresentationSyntaxError("Exponent must be nonzero", pos)
            base = base ** exponent
        return base


def parse_presentation(text: str) -> Presentation:
    """Parse `<x, y | x^2, (x*y)^3>` into a reduced presentation."""
    return _Parser(text).presentation()


def parse_word(text: str, generator_names: Sequence[str]) -> Word:
    """Parse a single word such as `x^-1*(y*x)^2` over the given generators."""
    parser = _Parser(text)
    parser.names = {name: i for i, name in enumerate(generator_names)}
    word = parser.word()
    parser.take(kind="end")
    return word


def parse_words(text: str, generator_names: Sequence[str]) -> List[Word]:
    """Comma-separated words; blank text is the empty list."""
    if not text.strip():
        return []
    parser = _Parser(text)
    parser.names = {name: i for i, name in enumerate(generator_names)}
    words = [parser.word()]
    while parser.at(","):
        parser.take(",")
        words.append(parser.word())
    parser.take(kind="end")
    return words


# --- Abelian invariants ------------------------------------------------------

@dataclass(frozen=True)
class AbelianInvariants:
    """Z^betti ⊕ Z/t1 ⊕ ... with t1 | t2 | ..."""
    betti: int
    torsion: Tuple[int, ...] = ()

    @property
    def order(self) -> Optional[int]:
        """Group order, or None when infinite."""
        if self.betti > 0:
            return None
        return reduce(lambda x, y: x * y, self.torsion, 1)

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion]
        if self.betti:
            parts.insert(0, "Z" if self.betti == 1 else f"Z^{self.betti}")
        return " + ".join(parts) if parts else "0"


def relator_matrix(presentation: Presentation) -> IntMatrix:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    n = presentation.generator_count
    return IntMatrix.from_rows(
        [[r.exponent_sum(g) for g in range(n)] for r in presentation.relators], cols=n
    )


def abelianization(presentation: Presentation) -> AbelianInvariants:
    snf = smith_normal_form(relator_matrix(presentation))
    return AbelianInvariants(presentation.generator_count - snf.rank, snf.torsion)


def deficiency(presentation: Presentation) -> int:
    return presentation.generator_count - presentation.relator_count


def b2_upper_bound(presentation: Presentation) -> int:
    """b2 of the presentation 2-complex, which bounds b2 of the group from above."""
    betti = abelianization(presentation).betti
    return max(0, presentation.relator_count - presentation.generator_count + betti)


# --- Constructions -----------------------------------------------------------

def free_product(first: Presentation, second: Presentation) -> Presentation:
    """
    Disjoint union of generators and relators. Names of the second factor that
    clash get the first free suffix _2, _3, ...
    """
    used = set(first.generator_names) | set(second.generator_names)
    taken = set(first.generator_names)
    renamed = []
    for name in second.generator_names:
        new = name
        if new in taken:
            k = 2
            while f"{name}_{k}" in used or f"{name}_{k}" in taken:
                k += 1
            new = f"{name}_{k}"
        taken.add(new)
        renamed.append(new)
    shift = first.generator_count
    moved = [Word(tuple(x + shift if x > 0 else x - shift for x in r)) for r in second.relators]
    return Presentation(first.generator_names + tuple(renamed), first.relators + tuple(moved))


def free_product_all(presentations: Sequence[Presentation]) -> Presentation:
    if not presentations:
        return Presentation(())
    return reduce(free_product, presentations)


def quotient_by(presentation: Presentation, extra: Sequence[Word]) -> Presentation:
    for word in extra:
        if word.max_generator() > presentation.generator_count:
            raise UnknownGeneratorError(
                f"Word uses generator {word.max_generator()} but only {presentation.generator_count} exist"
            )
    return Presentation(presentation.generator_names, presentation.relators + tuple(extra))


def eliminate_generator(presentation: Presentation, index: int) -> Presentation:
    """
    Tietze move removing a generator that is trivial in the group: every
    occurrence is deleted from every relator and the generator is dropped.
    The caller is responsible for the generator being a relator (or a
    consequence of the relators).
    """
    if not 0 <= index < presentation.generator_count:
        raise UnknownGeneratorError(f"No generator at position {index}")
    g = index + 1
    if Word.generator(index) not in presentation.relators:
        logger.warning(f"⚠️ Eliminating {presentation.generator_names[index]!r}, which is not itself a relator")

    def relabel(x: int) -> int:
        if abs(x) < g:
            return x
        return x - 1 if x > 0 else x + 1

    relators = [Word(tuple(relabel(x) for x in r if abs(x) != g)) for r in presentation.relators]
    names = presentation.generator_names[:index] + presentation.generator_names[index + 1:]
    return Presentation(names, tuple(relators))


def triangle_presentation(p: int, q: int, r: int) -> Presentation:
    """<x, y, z | x^p, y^q, z^r, x*y*z>."""
    for value in (p, q, r):
        if value < 2:
            raise ValueError(f"Triangle group parameters must be >= 2, got ({p}, {q}, {r})")
    x, y, z = Word((1,)), Word((2,)), Word((3,))
    return Presentation(("x", "y", "z"), (x ** p, y ** q, z ** r, x * y * z))


def von_dyck_presentation(p: int, q: int, r: int) -> Presentation:
    """The two-generator form <x, y | x^p, y^q, (x*y)^r> of the triangle group."""
    for value in (p, q, r):
        if value < 2:
            raise ValueError(f"Triangle group parameters must be >= 2, got ({p}, {q}, {r})")
    x, y = Word((1,)), Word((2,))
    return Presentation(("x", "y"), (x ** p, y ** q, (x * y) ** r))


# --- Finite permutation quotients --------------------------------------------
# Permutations act on the right: (p*q)[i] = q[p[i]], points are 0..n-1.

def compose(p: Permutation, q: Permutation) -> Permutation:
    return tuple(q[i] for i in p)


def invert(p: Permutation) -> Permutation:
    inverse = [0] * len(p)
    for i, j in enumerate(p):
        inverse[j] = i
    return tuple(inverse)


@dataclass(frozen=True)
class FiniteQuotient:
    """One permutation of {0..n-1} per generator."""
    images: Tuple[Permutation, ...]

    def __post_init__(self):
        images = tuple(tuple(p) for p in self.images)
        degrees = {len(p) for p in images}
        if len(degrees) > 1:
            raise QuotientArityError(f"Images act on different point sets: degrees {sorted(degrees)}")
        for p in images:
            if sorted(p) != list(range(len(p))):
                raise QuotientArityError(f"{p} is not a permutation of 0..{len(p) - 1}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images[0]) if self.images else 1

    def identity(self) -> Permutation:
        return tuple(range(self.degree))

    def evaluate(self, word: Word) -> Permutation:
        result = self.identity()
        inverses = [invert(p) for p in self.images]
        for x in word:
            result = compose(result, self.images[x - 1] if x > 0 else inverses[-x - 1])
        return result


@dataclass(frozen=True)
class HomomorphismCheck:
    accepted: bool
    witness: Optional[Word] = None


def check_homomorphism(presentation: Presentation, quotient: FiniteQuotient) -> HomomorphismCheck:
    """Accept iff every relator maps to the identity; otherwise name the first that does not."""
    if len(quotient.images) != presentation.generator_count:
        raise QuotientArityError(
            f"{len(quotient.images)} images for {presentation.generator_count} generators"
        )
    identity = quotient.identity()
    for relator in presentation.relators:
        if quotient.evaluate(relator) != identity:
            return HomomorphismCheck(False, relator)
    return HomomorphismCheck(True)


def enumerate_quotient(quotient: FiniteQuotient, max_order: int = DEFAULT_MAX_QUOTIENT_ORDER) -> List[Permutation]:
    """Elements of the generated group in breadth-first order from the identity."""
    identity = quotient.identity()
    elements = [identity]
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for image in quotient.images:
            h = compose(g, image)
            if h not in seen:
                if len(elements) >= max_order:
                    raise QuotientOverflowError(max_order)
                seen.add(h)
                elements.append(h)
                queue.append(h)
    return elements


def quotient_group_order(quotient: FiniteQuotient, max_order: int = DEFAULT_MAX_QUOTIENT_ORDER) -> int:
    return len(enumerate_quotient(quotient, max_order))


# --- Coset tables ------------------------------------------------------------

@dataclass(frozen=True)
class CosetTable:
    """
    Closed coset table: table[c][g] is coset c right-multiplied by generator g.
    Coset 0 is the subgroup itself.
    """
    presentation: Presentation
    subgroup_generators: Tuple[Word, ...]
    table: Tuple[Tuple[int, ...], ...]

    @property
    def index(self) -> int:
        return len(self.table)

    @cached_property
    def inverse_table(self) -> Tuple[Tuple[int, ...], ...]:
        inverse = [[-1] * self.presentation.generator_count for _ in self.table]
        for c, row in enumerate(self.table):
            for g, d in enumerate(row):
                inverse[d][g] = c
        return tuple(tuple(r) for r in inverse)

    def act(self, coset: int, word: Word) -> int:
        for x in word:
            coset = self.table[coset][x - 1] if x > 0 else self.inverse_table[coset][-x - 1]
        return coset

    def validate(self) -> None:
        """Raise CosetTableError unless the table is closed and consistent."""
        n = self.index
        if n == 0:
            raise CosetTableError("Coset table has no cosets")
        for g in range(self.presentation.generator_count):
            column = [row[g] for row in self.table]
            if sorted(column) != list(range(n)):
                raise CosetTableError(
                    f"Generator {self.presentation.generator_names[g]!r} does not permute the cosets"
                )
        for relator in self.presentation.relators:
            for c in range(n):
                if self.act(c, relator) != c:
                    name = relator.format(self.presentation.generator_names)
                    raise CosetTableError(f"Relator {name} moves coset {c}")
        for word in self.subgroup_generators:
            if self.act(0, word) != 0:
                name = word.format(self.presentation.generator_names)
                raise CosetTableError(f"Subgroup generator {name} does not fix coset 0")


def coset_table_from_quotient(presentation: Presentation, quotient: FiniteQuotient,
                              max_order: int = DEFAULT_MAX_QUOTIENT_ORDER) -> CosetTable:
    """Coset table of the kernel: cosets are the image-group elements under right multiplication."""
    check = check_homomorphism(presentation, quotient)
    if not check.accepted:
        raise ValueError(
            f"Not a homomorphism: relator {check.witness.format(presentation.generator_names)} "
            "is not sent to the identity"
        )
    elements = enumerate_quotient(quotient, max_order)
    position = {g: i for i, g in enumerate(elements)}
    table = tuple(tuple(position[compose(g, image)] for image in quotient.images) for g in elements)
    result = CosetTable(presentation, (), table)
    result.validate()
    logger.info(f"✅ Regular coset table built: index {result.index}")
    return result


class _CosetEnumerator:
    """
    HLT coset enumeration. Columns 2g and 2g+1 hold generator g and its
    inverse; coincidences are merged with a union-find forest that always
    keeps the smaller coset number as the representative.
    """

    def __init__(self, presentation: Presentation, subgroup: Sequence[Word], max_cosets: int):
        self.presentation = presentation
        self.subgroup = [Word(cyclic_reduce(w.letters)) for w in subgroup]
        self.max_cosets = max_cosets
        self.width = 2 * presentation.generator_count
        self.table: List[List[Optional[int]]] = [[None] * self.width]
        self.parent: List[int] = [0]
        self.relators = [[self._column(x) for x in r] for r in presentation.relators]

    @staticmethod
    def _column(letter: int) -> int:
        return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1

    def _live(self, coset: int) -> bool:
        return self.parent[coset] == coset

    def _rep(self, coset: int) -> int:
        root = coset
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[coset] != root:
            self.parent[coset], coset = root, self.parent[coset]
        return root

    def _define(self, coset: int, column: int) -> None:
        if len(self.table) >= self.max_cosets:
            raise CosetOverflowError(self.max_cosets)
        new = len(self.table)
        self.table.append([None] * self.width)
        self.parent.append(new)
        self.table[coset][column] = new
        self.table[new][column ^ 1] = coset

    def _scan_and_fill(self, coset: int, word: Sequence[int]) -> None:
        table = self.table
        f, b = coset, coset
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self._coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self._coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            self._define(f, word[i])

    def _merge(self, a: int, b: int, queue: deque) -> None:
        a, b = self._rep(a), self._rep(b)
        if a != b:
            low, high = min(a, b), max(a, b)
            self.parent[high] = low
            queue.append(high)

    def _coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: deque = deque()
        self._merge(a, b, queue)
        while queue:
            dead = queue.popleft()
            for column in range(self.width):
                target = table[dead][column]
                if target is None:
                    continue
                table[target][column ^ 1] = None
                mu, nu = self._rep(dead), self._rep(target)
                if table[mu][column] is not None:
                    self._merge(nu, table[mu][column], queue)
                elif table[nu][column ^ 1] is not None:
                    self._merge(mu, table[nu][column ^ 1], queue)
                else:
                    table[mu][column] = nu
                    table[nu][column ^ 1] = mu

    def run(self) -> CosetTable:
        for word in self.subgroup:
            self._scan_and_fill(0, [self._column(x) for x in word])
        coset = 0
        while coset < len(self.table):
            for relator in self.relators:
                if not self._live(coset):
                    break
                self._scan_and_fill(coset, relator)
            if self._live(coset):
                for column in range(self.width):
                    if self.table[coset][column] is None:
                        self._define(coset, column)
            coset += 1
        return self._compact()

    def _compact(self) -> CosetTable:
        live = [c for c in range(len(self.table)) if self._live(c)]
        number = {c: i for i, c in enumerate(live)}
        rows = []
        for c in live:
            row = []
            for g in range(self.presentation.generator_count):
                target = self.table[c][2 * g]
                if target is None:
                    raise CosetTableError(f"Coset {c} has no image under generator {g}")
                row.append(number[self._rep(target)])
            rows.append(tuple(row))
        logger.debug(f"🔢 HLT defined {len(self.table)} cosets, {len(live)} live")
        return CosetTable(self.presentation, tuple(self.subgroup), tuple(rows))


def todd_coxeter(presentation: Presentation, subgroup: Sequence[Word] = (),
                 max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """
    Enumerate the cosets of the subgroup generated by `subgroup`.
    Raises CosetOverflowError when more than `max_cosets` cosets get defined.
    """
    for word in subgroup:
        if word.max_generator() > presentation.generator_count:
            raise UnknownGeneratorError(f"Subgroup word uses generator {word.max_generator()}")
    table = _CosetEnumerator(presentation, subgroup, max_cosets).run()
    table.validate()
    logger.info(f"✅ Coset enumeration closed at index {table.index}")
    return table


# --- Reidemeister-Schreier ---------------------------------------------------

@dataclass(frozen=True)
class SchreierTransversal:
    """Breadth-first spanning tree of the Schreier graph and the edges off it."""
    tree_edges: frozenset
    generator_of_edge: Dict[Tuple[int, int], int] = field(hash=False)


def schreier_transversal(table: CosetTable) -> SchreierTransversal:
    """Tree edges are (coset, generator) pairs of the forward table."""
    n, k = table.index, table.presentation.generator_count
    seen = [False] * n
    seen[0] = True
    tree = set()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for g in range(k):
            d = table.table[c][g]
            if not seen[d]:
                seen[d] = True
                tree.add((c, g))
                queue.append(d)
            d = table.inverse_table[c][g]
            if not seen[d]:
                seen[d] = True
                tree.add((d, g))
                queue.append(d)
    if not all(seen):
        raise CosetTableError("Schreier graph is not connected")
    numbering = {}
    for c in range(n):
        for g in range(k):
            if (c, g) not in tree:
                numbering[(c, g)] = len(numbering)
    return SchreierTransversal(frozenset(tree), numbering)


def reidemeister_schreier(presentation: Presentation, table: CosetTable) -> Presentation:
    """
    Presentation of the subgroup on the Schreier generators (one per edge off
    the spanning tree), with every relator rewritten from every coset.
    """
    table.validate()
    transversal = schreier_transversal(table)
    edges = transversal.generator_of_edge
    names = [""] * len(edges)
    for (c, g), s in edges.items():
        names[s] = f"{presentation.generator_names[g]}_{c}"
    relators = []
    for relator in presentation.relators:
        for start in range(table.index):
            letters = []
            c = start
            for x in relator:
                if x > 0:
                    s = edges.get((c, x - 1))
                    if s is not None:
                        letters.append(s + 1)
                    c = table.table[c][x - 1]
                else:
                    c = table.inverse_table[c][-x - 1]
                    s = edges.get((c, -x - 1))
                    if s is not None:
                        letters.append(-(s + 1))
            if c != start:
                raise CosetTableError(f"Relator does not close at coset {start}")
            relators.append(Word(tuple(letters)))
    result = Presentation(tuple(names), tuple(relators))
    logger.info(
        f"🔁 Reidemeister-Schreier: index {table.index}, "
        f"{result.generator_count} generators, {result.relator_count} relators"
    )
    return result
