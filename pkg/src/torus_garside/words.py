"""Positive words, relations and homogeneous monoid presentations.

A word is a plain tuple of 1-based generator indices; the empty tuple is the
unit.  Presentations carry a weight per generator (the length function) and
a variant tag recording how they were produced.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

Word = tuple[int, ...]

EMPTY: Word = ()


class Variant(enum.Enum):
    RAW = "raw"
    PRACTICAL = "practical"
    LEFT_COMPLEMENTED = "left-complemented"
    RIGHT_ORIENTED = "right-oriented"
    OPPOSITE = "opposite"
    DIHEDRAL_EVEN = "dihedral-even"
    CLASSICAL = "classical"


# Variants whose relation lists must be complemented (right-oriented ones at
# the end of the words, the others at the start).
COMPLEMENTED = frozenset(
    {
        Variant.RAW,
        Variant.PRACTICAL,
        Variant.LEFT_COMPLEMENTED,
        Variant.RIGHT_ORIENTED,
        Variant.DIHEDRAL_EVEN,
        Variant.CLASSICAL,
    }
)


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    def reversed(self) -> "Relation":
        return Relation(self.lhs[::-1], self.rhs[::-1])

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} = {format_word(self.rhs)}"


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relations: tuple[Relation, ...]
    weights: tuple[int, ...]
    variant: Variant
    names: tuple[str, ...] = ()
    # Variant before reversal; only set on OPPOSITE presentations.
    source_variant: Variant | None = None
    label: str = ""

    def __post_init__(self):
        if self.generator_count < 1:
            raise ValueError("a presentation needs at least one generator")
        if len(self.weights) != self.generator_count:
            raise ValueError("one weight per generator is required")
        if any(w <= 0 for w in self.weights):
            raise ValueError("generator weights must be positive")
        if not self.names:
            object.__setattr__(
                self, "names", tuple(f"r{i}" for i in range(1, self.generator_count + 1))
            )
        elif len(self.names) != self.generator_count:
            raise ValueError("one name per generator is required")

    @property
    def generators(self) -> range:
        return range(1, self.generator_count + 1)

    def weight(self, letter: int) -> int:
        if not 1 <= letter <= self.generator_count:
            raise IndexError(f"generator index {letter} out of range 1..{self.generator_count}")
        return self.weights[letter - 1]

    def length(self, w: Sequence[int]) -> int:
        return lambda_length(self, w)

    def format(self, w: Sequence[int]) -> str:
        return format_word(w, self.names)

    def parse(self, text: str) -> Word:
        return parse_word(text, self.names)

    def to_dict(self) -> dict:
        return {
            "generators": self.generator_count,
            "lambda": list(self.weights),
            "relations": [[list(r.lhs), list(r.rhs)] for r in self.relations],
            "variant": self.variant.value,
            "names": list(self.names),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "Presentation":
        n = int(data["generators"])
        return cls(
            generator_count=n,
            relations=tuple(Relation(tuple(l), tuple(r)) for l, r in data["relations"]),
            weights=tuple(int(x) for x in data["lambda"]),
            variant=Variant(data.get("variant", Variant.CLASSICAL.value)),
            names=tuple(data.get("names", ())),
        )

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        return cls.from_dict(json.loads(text))


def lambda_length(p: Presentation, w: Sequence[int]) -> int:
    """Additive length of ``w`` under the presentation's generator weights."""
    return sum(p.weight(x) for x in w)


def validate_presentation(p: Presentation) -> list[str]:
    """Return a list of human-readable violations; empty when ``p`` is sound."""
    problems: list[str] = []
    seen_pairs: dict[frozenset, int] = {}
    for k, rel in enumerate(p.relations):
        if not rel.lhs or not rel.rhs:
            problems.append(f"relation {k}: empty side")
            continue
        bad = [x for x in rel.lhs + rel.rhs if not 1 <= x <= p.generator_count]
        if bad:
            problems.append(f"relation {k}: generator index out of range {bad}")
            continue
        if lambda_length(p, rel.lhs) != lambda_length(p, rel.rhs):
            problems.append(
                f"relation {k}: inhomogeneous "
                f"({lambda_length(p, rel.lhs)} vs {lambda_length(p, rel.rhs)})"
            )
        if p.variant in COMPLEMENTED:
            # right-oriented relations are complemented at their last letters
            end = -1 if p.variant is Variant.RIGHT_ORIENTED else 0
            s, t = rel.lhs[end], rel.rhs[end]
            if s == t:
                problems.append(f"relation {k}: both sides share their leading letter")
                continue
            key = frozenset((s, t))
            if key in seen_pairs:
                problems.append(
                    f"relation {k}: duplicate complement pair with relation {seen_pairs[key]}"
                )
            else:
                seen_pairs[key] = k
    return problems


def opposite_presentation(p: Presentation) -> Presentation:
    """Reverse every relation letterwise; applying it twice gives ``p`` back."""
    if p.variant is Variant.OPPOSITE:
        variant, source = p.source_variant or Variant.CLASSICAL, None
    else:
        variant, source = Variant.OPPOSITE, p.variant
    return replace(
        p,
        relations=tuple(r.reversed() for r in p.relations),
        variant=variant,
        source_variant=source,
    )


# --------------------------------------------------------------------------
# word syntax

_TOKEN = re.compile(r"^([A-Za-z]+\d*)(?:\^(-?\d+))?$")


def parse_tokens(text: str) -> list[tuple[str, int]]:
    """Split ``"r1 r3^2, t1^-1"`` into ``[("r1", 1), ("r3", 2), ("t1", -1)]``."""
    out = []
    for tok in text.replace(",", " ").split():
        if tok in ("1", "e", "eps"):
            continue
        match = _TOKEN.match(tok)
        if match is None:
            raise ValueError(f"cannot parse token {tok!r}")
        exp = int(match.group(2)) if match.group(2) is not None else 1
        if exp == 0:
            raise ValueError(f"exponent 0 is not allowed in {tok!r}; omit the letter")
        out.append((match.group(1), exp))
    return out


def parse_word(text: str, names: Sequence[str] | None = None) -> Word:
    """Parse a positive word; names default to ``r1, r2, ...``."""
    letters: list[int] = []
    for name, exp in parse_tokens(text):
        if exp < 0:
            raise ValueError(f"negative exponent in positive word: {name}^{exp}")
        letters.extend([_lookup(name, names)] * exp)
    return tuple(letters)


def _lookup(name: str, names: Sequence[str] | None) -> int:
    if names:
        try:
            return list(names).index(name) + 1
        except ValueError:
            pass
    match = re.match(r"^[A-Za-z]+(\d+)$", name)
    if match and not names:
        return int(match.group(1))
    raise ValueError(f"unknown generator {name!r}")


def format_word(w: Iterable[int], names: Sequence[str] | None = None) -> str:
    """Render with caret exponents for runs: ``(1, 3, 3)`` -> ``"r1 r3^2"``."""
    w = list(w)
    if not w:
        return "1"
    parts = []
    k = 0
    while k < len(w):
        x = w[k]
        run = 1
        while k + run < len(w) and w[k + run] == x:
            run += 1
        name = names[x - 1] if names else f"r{x}"
        parts.append(name if run == 1 else f"{name}^{run}")
        k += run
    return " ".join(parts)


def power(w: Sequence[int], k: int) -> Word:
    if k < 0:
        raise ValueError("negative power of a positive word")
    return tuple(w) * k


def cat(*words: Sequence[int]) -> Word:
    out: list[int] = []
    for w in words:
        out.extend(w)
    return tuple(out)


def make_presentation(
    n: int,
    relations: Iterable[tuple[Sequence[int], Sequence[int]]],
    weights: Sequence[int],
    variant: Variant,
    names: Sequence[str] = (),
    label: str = "",
) -> Presentation:
    return Presentation(
        generator_count=n,
        relations=tuple(Relation(tuple(l), tuple(r)) for l, r in relations),
        weights=tuple(weights),
        variant=variant,
        names=tuple(names),
        label=label,
    )
