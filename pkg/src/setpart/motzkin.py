"""
Labeled Motzkin paths encoding set partitions step for step.

Element i of a canonical partition becomes step i of the path:

- non-singleton opener  -> NE step, label 1
- singleton             -> E step, starred, label 1
- non-singleton closer  -> SE step, label gamma_i
- passant               -> E step (no star), label gamma_i

Heights stay non-negative and return to 0; an SE or plain E step leaving
height h carries a label in [1, h].  Under this encoding the height
before step i equals l_i, so decoding is the profile rebuild.  The
number of valid paths of length n is the n-th Bell number.

``reflect`` mirrors a path left to right: NE and SE swap, E steps keep
their label and star at the mirrored position, and each output SE step
(sitting where an input NE step was) takes the label of the SE step
matched to that NE step by level: scanning NE steps left to right, an
NE step leaving height h is paired with the leftmost unpaired SE step
leaving height h+1.  Up- and down-crossings of every level balance, so
the pairing always exists.  Decoding the reflection of the encoding of
p gives exactly ``bijections.phi(p)``.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .core import Kind, SetPartition, rebuild_from_profile, trace_profile

NE, SE, E = "NE", "SE", "E"
_KINDS = (NE, SE, E)


class PathError(ValueError):
    """An invalid labeled Motzkin path; mentions the offending step."""


@dataclass(frozen=True)
class Step:
    kind: str
    label: int
    starred: bool = False

    def text(self) -> str:
        star = "*" if self.starred else ""
        return f"{self.kind}({self.label}{star})"


@dataclass(frozen=True)
class LabeledMotzkinPath:
    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        h = 0
        for idx, step in enumerate(self.steps, start=1):
            if step.kind not in _KINDS:
                raise PathError(f"step {idx}: unknown kind {step.kind!r}")
            if step.starred and step.kind != E:
                raise PathError(f"step {idx}: only E steps may be starred")
            if step.kind == NE:
                if step.label != 1:
                    raise PathError(f"step {idx}: NE steps carry label 1")
                h += 1
            elif step.kind == E and step.starred:
                if step.label != 1:
                    raise PathError(f"step {idx}: starred E steps carry label 1")
            else:
                # SE or plain E leaving height h
                if not 1 <= step.label <= h:
                    raise PathError(
                        f"step {idx}: label {step.label} outside [1, {h}]"
                    )
                if step.kind == SE:
                    h -= 1
        if h != 0:
            raise PathError(f"path ends at height {h}, not 0")

    @property
    def n(self) -> int:
        return len(self.steps)

    def heights(self) -> tuple[int, ...]:
        """Height before each step (prepended start height 0 excluded)."""
        out = []
        h = 0
        for step in self.steps:
            out.append(h)
            if step.kind == NE:
                h += 1
            elif step.kind == SE:
                h -= 1
        return tuple(out)

    def text(self) -> str:
        return " ".join(step.text() for step in self.steps)

    def __str__(self) -> str:
        return self.text()

    def to_json_dict(self) -> dict:
        return {
            "steps": [
                {"kind": s.kind, "label": s.label, "starred": s.starred}
                for s in self.steps
            ]
        }

    @classmethod
    def from_json_dict(cls, data) -> "LabeledMotzkinPath":
        steps = []
        for item in data.get("steps", []):
            steps.append(
                Step(
                    kind=item["kind"],
                    label=int(item["label"]),
                    starred=bool(item.get("starred", False)),
                )
            )
        return cls(tuple(steps))

    _STEP = re.compile(r"^(NE|SE|E)\((\d+)(\*?)\)$")

    @classmethod
    def parse(cls, text: str) -> "LabeledMotzkinPath":
        """Parse the compact text form, e.g. ``NE(1) E(1*) SE(1)``."""
        stripped = text.strip()
        if not stripped:
            return cls(())
        if stripped.startswith("{"):
            return cls.from_json_dict(json.loads(stripped))
        steps = []
        for token in stripped.split():
            m = cls._STEP.match(token)
            if m is None:
                raise PathError(f"cannot parse step {token!r}")
            steps.append(Step(m.group(1), int(m.group(2)), m.group(3) == "*"))
        return cls(tuple(steps))


def encode(p: SetPartition) -> LabeledMotzkinPath:
    """The labeled path of a canonical partition."""
    profile = trace_profile(p)
    steps = []
    for kind, g in zip(profile.kinds, profile.gamma):
        if kind is Kind.OPENER:
            steps.append(Step(NE, 1))
        elif kind is Kind.SINGLETON:
            steps.append(Step(E, 1, starred=True))
        elif kind is Kind.CLOSER:
            steps.append(Step(SE, g))
        else:
            steps.append(Step(E, g))
    return LabeledMotzkinPath(tuple(steps))


def decode(path: LabeledMotzkinPath) -> SetPartition:
    """The partition whose encoding is ``path`` (profile rebuild)."""
    heights = path.heights()
    kinds, gammas = [], []
    for step, h in zip(path.steps, heights):
        if step.kind == NE:
            kinds.append(Kind.OPENER)
            gammas.append(h + 1)
        elif step.kind == SE:
            kinds.append(Kind.CLOSER)
            gammas.append(step.label)
        elif step.starred:
            kinds.append(Kind.SINGLETON)
            gammas.append(h + 1)
        else:
            kinds.append(Kind.PASSANT)
            gammas.append(step.label)
    return rebuild_from_profile(kinds, gammas)


def reflect(path: LabeledMotzkinPath) -> LabeledMotzkinPath:
    """Mirror the path in a vertical axis.

    NE and SE swap kinds; E steps keep label and star at the mirrored
    position.  Each output SE step inherits the label of the input SE
    step matched by level to the NE step it replaces: scanning NE steps
    left to right, an NE step leaving height h is paired with the
    leftmost unpaired SE step leaving height h + 1.  The pairing always
    exists and keeps every transferred label inside the mirrored step's
    allowed range.
    """
    heights = path.heights()
    se_at: dict[int, deque[int]] = {}
    for idx, step in enumerate(path.steps):
        if step.kind == SE:
            se_at.setdefault(heights[idx], deque()).append(idx)
    label_for: dict[int, int] = {}
    for idx, step in enumerate(path.steps):
        if step.kind != NE:
            continue
        pool = se_at.get(heights[idx] + 1)
        if not pool:
            raise PathError(
                "step %d: no matching SE step at height %d"
                % (idx + 1, heights[idx] + 1)
            )
        label_for[idx] = path.steps[pool.popleft()].label
    out: list[Step] = []
    for idx in range(len(path.steps) - 1, -1, -1):
        step = path.steps[idx]
        if step.kind == NE:
            out.append(Step(SE, label_for[idx]))
        elif step.kind == SE:
            out.append(Step(NE, 1))
        else:
            out.append(step)
    return LabeledMotzkinPath(tuple(out))


def phi_via_paths(p: SetPartition) -> SetPartition:
    """decode(reflect(encode(p))): the path route to the involution."""
    return decode(reflect(encode(p)))


def enumerate_paths(n: int) -> Iterator[LabeledMotzkinPath]:
    """All valid labeled paths of length n (count: Bell number)."""
    if n < 0:
        raise PathError("path length must be non-negative")
    steps: list[Step] = []

    def rec(i: int, h: int) -> Iterator[LabeledMotzkinPath]:
        if i == n:
            if h == 0:
                yield LabeledMotzkinPath(tuple(steps))
            return
        rem = n - i - 1  # steps after this one
        if h >= 1:
            for g in range(1, h + 1):
                steps.append(Step(SE, g))
                yield from rec(i + 1, h - 1)
                steps.pop()
            if h <= rem:
                for g in range(1, h + 1):
                    steps.append(Step(E, g))
                    yield from rec(i + 1, h)
                    steps.pop()
        if h <= rem:
            steps.append(Step(E, 1, starred=True))
            yield from rec(i + 1, h)
            steps.pop()
        if h + 1 <= rem:
            steps.append(Step(NE, 1))
            yield from rec(i + 1, h + 1)
            steps.pop()

    yield from rec(0, 0)


def ascii_art(path: LabeledMotzkinPath) -> str:
    """A terminal picture: one column per step, labels in the last row."""
    if not path.steps:
        return "(empty path)"
    heights = path.heights()
    top = max(
        h + (1 if s.kind == NE else 0) for s, h in zip(path.steps, heights)
    )
    labels = [s.text()[s.text().index("(") :].strip("()") for s in path.steps]
    width = max(2, max(len(lbl) for lbl in labels) + 1)
    rows = []
    for level in range(top, 0, -1):
        row = []
        for step, h in zip(path.steps, heights):
            if step.kind == NE and h + 1 == level:
                row.append("/".ljust(width))
            elif step.kind == SE and h == level:
                row.append("\\".ljust(width))
            elif step.kind == E and h == level:
                row.append("-".ljust(width))
            else:
                row.append(" " * width)
        rows.append("".join(row).rstrip())
    base = []
    for step, h in zip(path.steps, heights):
        base.append(("-" if step.kind == E and h == 0 else " ").ljust(width))
    rows.append("".join(base).rstrip())
    rows.append("".join(lbl.ljust(width) for lbl in labels).rstrip())
    return "\n".join(row for row in rows if row)
