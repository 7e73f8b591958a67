"""Case file loading and validation.

A case file is a JSON document describing one group: the conjugacy
classes relevant to the investigated unit orders, exact character
values on those classes, Brauer tree lines, and the list of target
orders.  All numbers are integers; floating point literals are
rejected at parse time.

The loader validates the document exhaustively and reports every
problem found, not only the first one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .criterion import BrauerLineCase
from .multiplicities import CharacterData, ClassInfo, is_prime, prime_pair

CASE_FORMAT = "pgq-case"
CASE_VERSION = 1

COMPONENTS = ("zeta_p", "zeta_q")
MODES = ("exclude", "survey")


class CaseError(ValueError):
    """A case file failed to load.  ``problems`` lists every violation."""

    def __init__(self, path, problems):
        self.path = str(path)
        self.problems = tuple(problems)
        body = "\n".join("  - " + p for p in self.problems)
        super().__init__(f"invalid case file {self.path}:\n{body}")


def _reject_float(text):
    raise ValueError(
        f"non-integer number {text!r}: case files carry exact integers only"
    )


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class TargetSpec:
    """One unit order to investigate, with its configuration."""

    unit_order: int
    constraints: tuple
    line_id: str = None
    criterion_component: str = None
    mode: str = "exclude"
    expected_candidates: tuple = None
    expected_count: int = None


@dataclass(frozen=True)
class CaseFile:
    """A validated case: group data plus the targets to run."""

    group_name: str
    provenance: str
    classes: tuple
    characters: tuple
    brauer_lines: dict
    targets: tuple

    def class_by_id(self, cid):
        for c in self.classes:
            if c.id == cid:
                return c
        raise KeyError(f"no class {cid!r} in case {self.group_name}")

    def character_by_id(self, chid):
        for ch in self.characters:
            if ch.id == chid:
                return ch
        raise KeyError(f"no character {chid!r} in case {self.group_name}")

    def target_for_order(self, order):
        for t in self.targets:
            if t.unit_order == order:
                return t
        raise KeyError(f"no target of order {order} in case {self.group_name}")

    def support_classes(self, order):
        """Non-identity classes whose element order divides ``order``."""
        return tuple(
            c for c in self.classes
            if c.element_order != 1 and order % c.element_order == 0
        )

    def classes_of_order(self, n):
        return tuple(c for c in self.classes if c.element_order == n)


def load_case(path):
    """Load and validate a case file.

    Raises CaseError carrying an exhaustive list of problems when the
    document is malformed; returns a CaseFile otherwise.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CaseError(path, [f"cannot read file: {exc}"]) from exc
    if not text.strip():
        raise CaseError(path, ["file is empty"])
    try:
        doc = json.loads(text, parse_float=_reject_float,
                         parse_constant=_reject_float)
    except ValueError as exc:
        raise CaseError(path, [f"parse error: {exc}"]) from exc

    problems = []
    case = _build(doc, problems)
    if problems:
        raise CaseError(path, problems)
    return case


def _build(doc, problems):
    if not isinstance(doc, dict):
        problems.append("top level must be an object")
        return None
    fmt = doc.get("format")
    if fmt != CASE_FORMAT:
        problems.append(f"format: expected {CASE_FORMAT!r}, got {fmt!r}")
    version = doc.get("version")
    if version != CASE_VERSION:
        problems.append(f"version: expected {CASE_VERSION}, got {version!r}")

    group = doc.get("group")
    if not isinstance(group, str) or not group:
        problems.append("group: required non-empty string")
        group = "<unnamed>"
    provenance = doc.get("provenance")
    if not isinstance(provenance, str) or not provenance.strip():
        problems.append("provenance: required non-empty string")
        provenance = ""

    classes = _build_classes(doc.get("classes"), problems)
    characters = _build_characters(doc.get("characters"), classes, problems)
    lines = _build_lines(doc.get("brauer_lines"), characters, problems)
    targets = _build_targets(doc.get("targets"), classes, characters,
                             lines, problems)

    known = {"format", "version", "group", "provenance", "classes",
             "characters", "brauer_lines", "targets"}
    for key in doc:
        if key not in known:
            problems.append(f"unknown top-level field {key!r}")

    if problems:
        return None
    return CaseFile(group_name=group, provenance=provenance, classes=classes,
                    characters=characters, brauer_lines=lines, targets=targets)


def _build_classes(raw, problems):
    if not isinstance(raw, list) or not raw:
        problems.append("classes: required non-empty list")
        return ()
    out = []
    seen = set()
    for i, entry in enumerate(raw):
        where = f"classes[{i}]"
        if not isinstance(entry, dict):
            problems.append(f"{where}: must be an object")
            continue
        cid = entry.get("id")
        order = entry.get("order")
        if not isinstance(cid, str) or not cid:
            problems.append(f"{where}: id must be a non-empty string")
            continue
        if cid in seen:
            problems.append(f"{where}: duplicate class id {cid!r}")
            continue
        if not _is_int(order) or order < 1:
            problems.append(f"{where} ({cid}): order must be a positive integer")
            continue
        for key in entry:
            if key not in ("id", "order"):
                problems.append(f"{where} ({cid}): unknown field {key!r}")
        seen.add(cid)
        out.append(ClassInfo(cid, order))
    return tuple(out)


def _build_characters(raw, classes, problems):
    if not isinstance(raw, list) or not raw:
        problems.append("characters: required non-empty list")
        return ()
    class_order = {c.id: c.element_order for c in classes}
    out = []
    seen = set()
    for i, entry in enumerate(raw):
        where = f"characters[{i}]"
        if not isinstance(entry, dict):
            problems.append(f"{where}: must be an object")
            continue
        chid = entry.get("id")
        if not isinstance(chid, str) or not chid:
            problems.append(f"{where}: id must be a non-empty string")
            continue
        where = f"characters[{i}] ({chid})"
        if chid in seen:
            problems.append(f"{where}: duplicate character id")
            continue
        seen.add(chid)

        degree = entry.get("degree")
        if not _is_int(degree) or degree < 1:
            problems.append(f"{where}: degree must be a positive integer")
            continue
        kind = entry.get("kind", "ordinary")
        characteristic = entry.get("characteristic")
        if kind not in ("ordinary", "brauer"):
            problems.append(f"{where}: kind must be 'ordinary' or 'brauer'")
            continue
        if kind == "brauer":
            if not _is_int(characteristic) or not is_prime(characteristic):
                problems.append(f"{where}: brauer character needs a prime "
                                f"characteristic, got {characteristic!r}")
                continue
        elif characteristic is not None:
            problems.append(f"{where}: ordinary character must not set a "
                            f"characteristic")
            continue

        values = entry.get("values")
        if not isinstance(values, dict) or not values:
            problems.append(f"{where}: values must be a non-empty object")
            continue
        ok = True
        for cid, v in values.items():
            if cid not in class_order:
                problems.append(f"{where}: value on undeclared class {cid!r}")
                ok = False
                continue
            if not _is_int(v):
                problems.append(f"{where}: value on {cid} must be an integer")
                ok = False
                continue
            if class_order[cid] == 1 and v != degree:
                problems.append(f"{where}: identity class {cid} value {v} "
                                f"does not match degree {degree}")
                ok = False
            if kind == "brauer" and class_order[cid] % characteristic == 0:
                problems.append(f"{where}: brauer character in characteristic "
                                f"{characteristic} has no value on class {cid} "
                                f"of order {class_order[cid]}")
                ok = False
        prov = entry.get("provenance")
        if not isinstance(prov, str) or not prov.strip():
            problems.append(f"{where}: provenance must be a non-empty string "
                            f"naming the source of every value")
            ok = False
        for key in entry:
            if key not in ("id", "degree", "kind", "characteristic",
                           "values", "provenance"):
                problems.append(f"{where}: unknown field {key!r}")
        if not ok:
            continue
        try:
            out.append(CharacterData(chid, degree,
                                     {k: int(v) for k, v in values.items()},
                                     kind=kind, characteristic=characteristic))
        except ValueError as exc:
            problems.append(f"{where}: {exc}")
    return tuple(out)


def _build_lines(raw, characters, problems):
    if raw is None:
        return {}
    if not isinstance(raw, list):
        problems.append("brauer_lines: must be a list")
        return {}
    char_ids = {ch.id for ch in characters}
    out = {}
    for i, entry in enumerate(raw):
        where = f"brauer_lines[{i}]"
        if not isinstance(entry, dict):
            problems.append(f"{where}: must be an object")
            continue
        lid = entry.get("id")
        if not isinstance(lid, str) or not lid:
            problems.append(f"{where}: id must be a non-empty string")
            continue
        where = f"brauer_lines[{i}] ({lid})"
        if lid in out:
            problems.append(f"{where}: duplicate line id")
            continue
        p = entry.get("p")
        members = entry.get("characters")
        unramified = entry.get("unramified")
        xi_label = entry.get("xi_label", "1")
        ok = True
        if not _is_int(p):
            problems.append(f"{where}: p must be an integer")
            ok = False
        if not isinstance(members, list) or not members:
            problems.append(f"{where}: characters must be a non-empty list")
            ok = False
        else:
            for chid in members:
                if chid not in char_ids:
                    problems.append(f"{where}: undeclared character {chid!r}")
                    ok = False
        if not isinstance(unramified, bool):
            problems.append(f"{where}: unramified must be true or false")
            ok = False
        if not isinstance(xi_label, str):
            problems.append(f"{where}: xi_label must be a string")
            ok = False
        for key in entry:
            if key not in ("id", "p", "characters", "unramified", "xi_label",
                           "provenance"):
                problems.append(f"{where}: unknown field {key!r}")
        prov = entry.get("provenance")
        if prov is not None and not isinstance(prov, str):
            problems.append(f"{where}: provenance must be a string")
            ok = False
        if not ok:
            continue
        try:
            out[lid] = BrauerLineCase(p, tuple(members), unramified,
                                      xi_label=xi_label)
        except ValueError as exc:
            problems.append(f"{where}: {exc}")
    return out


def _factor_order(order):
    """(p, None) for prime order, (p, q) with p < q for order pq."""
    if is_prime(order):
        return order, None
    return prime_pair(order)


def _build_targets(raw, classes, characters, lines, problems):
    if not isinstance(raw, list) or not raw:
        problems.append("targets: required non-empty list")
        return ()
    chars_by_id = {ch.id: ch for ch in characters}
    out = []
    seen_orders = set()
    for i, entry in enumerate(raw):
        where = f"targets[{i}]"
        if not isinstance(entry, dict):
            problems.append(f"{where}: must be an object")
            continue
        order = entry.get("order")
        if not _is_int(order) or order < 2:
            problems.append(f"{where}: order must be an integer >= 2")
            continue
        where = f"targets[{i}] (order {order})"
        if order in seen_orders:
            problems.append(f"{where}: duplicate target order")
            continue
        seen_orders.add(order)
        ok = True
        try:
            p, q = _factor_order(order)
        except ValueError:
            problems.append(f"{where}: order must be a prime or a product "
                            f"of two distinct primes")
            p = q = None
            ok = False
        constraints = entry.get("constraints")
        if (not isinstance(constraints, list) or not constraints
                or not all(isinstance(c, str) for c in constraints)):
            problems.append(f"{where}: constraints must be a non-empty list "
                            f"of character ids")
            constraints = []
            ok = False
        elif len(set(constraints)) != len(constraints):
            problems.append(f"{where}: duplicate constraint character")
            ok = False

        mode = entry.get("mode", "exclude")
        if mode not in MODES:
            problems.append(f"{where}: mode must be one of {MODES}")
            ok = False

        line_id = entry.get("line")
        component = entry.get("criterion_component")
        if line_id is not None:
            if not isinstance(line_id, str) or line_id not in lines:
                problems.append(f"{where}: undeclared line {line_id!r}")
                ok = False
                line_id = None
            elif p is None:
                pass
            elif q is None:
                problems.append(f"{where}: a criterion line applies only to "
                                f"targets of composite order")
                ok = False
            elif lines[line_id].p not in (p, q):
                problems.append(f"{where}: line {line_id!r} has prime "
                                f"{lines[line_id].p}, which does not divide "
                                f"order {order}")
                ok = False
            elif mode == "survey":
                problems.append(f"{where}: survey targets must not configure "
                                f"a criterion line")
                ok = False
        if component is not None:
            if component not in COMPONENTS:
                problems.append(f"{where}: criterion_component must be one "
                                f"of {COMPONENTS}")
                ok = False
            elif line_id is None:
                problems.append(f"{where}: criterion_component requires a "
                                f"line")
                ok = False

        # every character the target touches must cover its support classes
        support = [c for c in classes
                   if c.element_order != 1 and order % c.element_order == 0]
        needed_ids = list(constraints)
        if line_id is not None:
            needed_ids += [chid for chid in lines[line_id].line
                           if chid not in needed_ids]
        for chid in needed_ids:
            ch = chars_by_id.get(chid)
            if ch is None:
                problems.append(f"{where}: undeclared character {chid!r}")
                ok = False
                continue
            if ch.kind == "brauer" and order % ch.characteristic == 0:
                problems.append(f"{where}: character {chid} has "
                                f"characteristic {ch.characteristic} dividing "
                                f"the target order")
                ok = False
                continue
            for c in support:
                if c.id not in ch.values:
                    problems.append(f"{where}: character {chid} lacks a "
                                    f"value on class {c.id}")
                    ok = False

        expected = entry.get("expected_candidates")
        expected_tuples = None
        if expected is not None and p is not None:
            expected_tuples = _check_expected(expected, where, order, p, q,
                                              classes, problems)
            if expected_tuples is None:
                ok = False
        expected_count = entry.get("expected_count")
        if expected_count is not None:
            if not _is_int(expected_count) or expected_count < 0:
                problems.append(f"{where}: expected_count must be a "
                                f"non-negative integer")
                ok = False
            elif (expected_tuples is not None
                  and len(expected_tuples) != expected_count):
                problems.append(f"{where}: expected_count {expected_count} "
                                f"disagrees with {len(expected_tuples)} "
                                f"expected_candidates")
                ok = False

        for key in entry:
            if key not in ("order", "constraints", "mode", "line",
                           "criterion_component", "expected_candidates",
                           "expected_count"):
                problems.append(f"{where}: unknown field {key!r}")

        if not ok:
            continue
        out.append(TargetSpec(
            unit_order=order,
            constraints=tuple(constraints),
            line_id=line_id,
            criterion_component=component,
            mode=mode,
            expected_candidates=expected_tuples,
            expected_count=expected_count,
        ))
    return tuple(out)


def _check_expected(expected, where, order, p, q, classes, problems):
    """Validate pinned candidate tuples; returns them or None.

    Tuples follow the flat layout used throughout: for order pq, the
    partial augmentations of u^q on the order-p classes followed by
    those of u on all support classes; for prime order, just the
    support block.  Each block must sum to 1.
    """
    if not isinstance(expected, list):
        problems.append(f"{where}: expected_candidates must be a list")
        return None
    support = [c for c in classes
               if c.element_order != 1 and order % c.element_order == 0]
    if q is None:
        first_len = 0
    else:
        first_len = sum(1 for c in classes if c.element_order == p)
    total = first_len + len(support)
    ok = True
    out = []
    for j, item in enumerate(expected):
        spot = f"{where}.expected_candidates[{j}]"
        if not isinstance(item, list) or not all(_is_int(v) for v in item):
            problems.append(f"{spot}: must be a list of integers")
            ok = False
            continue
        if len(item) != total:
            problems.append(f"{spot}: has {len(item)} entries, expected "
                            f"{total} ({first_len} power block + "
                            f"{len(support)} support block)")
            ok = False
            continue
        head, tail = item[:first_len], item[first_len:]
        if first_len and sum(head) != 1:
            problems.append(f"{spot}: power block sums to {sum(head)}, "
                            f"partial augmentations must sum to 1")
            ok = False
        if sum(tail) != 1:
            problems.append(f"{spot}: support block sums to {sum(tail)}, "
                            f"partial augmentations must sum to 1")
            ok = False
        out.append(tuple(item))
    if not ok:
        return None
    return tuple(out)
