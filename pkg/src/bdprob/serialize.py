"""JSON formats for models, monomial tables and pair lists.

Rationals are always strings (``"3/10"``, ``"1"``) so that generic JSON
tooling never turns them into floats.
"""

from __future__ import annotations

import json
from typing import Any

from .assignment import MonomialTable
from .formula import Formula, parse
from .model import ProbModel, State, canonicalize
from .rational import format_rational
from .semantics import BDState

__all__ = [
    "FormatError",
    "model_from_json",
    "model_to_json",
    "table_from_json",
    "table_to_json",
    "pairs_from_json",
    "dumps",
]


class FormatError(ValueError):
    """A file does not follow the expected JSON layout."""


def dumps(obj: Any) -> str:
    """Two-space JSON with each list item or mapping entry of depth two on one line."""
    lines = ["{"]
    items = list(obj.items())
    for n, (key, value) in enumerate(items):
        comma = "," if n < len(items) - 1 else ""
        head = f"  {_compact(key)}: "
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(head + "[")
            lines.extend(
                f"    {_compact(v)}" + ("," if i < len(value) - 1 else "") for i, v in enumerate(value)
            )
            lines.append("  ]" + comma)
        elif isinstance(value, dict) and value:
            lines.append(head + "{")
            entries = list(value.items())
            lines.extend(
                f"    {_compact(k)}: {_compact(v)}" + ("," if i < len(entries) - 1 else "")
                for i, (k, v) in enumerate(entries)
            )
            lines.append("  }" + comma)
        else:
            lines.append(head + _compact(value) + comma)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _compact(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


def _load(text: str | bytes | dict) -> dict:
    if isinstance(text, dict):
        return text
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise FormatError("top level must be an object")
    return obj


def _atoms(obj: dict) -> list[str]:
    atoms = obj.get("atoms")
    if not isinstance(atoms, list) or not all(isinstance(a, str) for a in atoms):
        raise FormatError('"atoms" must be a list of strings')
    return atoms


def _rational_text(value, where: str) -> str:
    if not isinstance(value, str):
        raise FormatError(f"{where}: rationals must be strings like \"3/10\"")
    return value


def model_from_json(text) -> ProbModel:
    """Read a model file. Masses are not validated here; see :meth:`ProbModel.check`."""
    obj = _load(text)
    atoms = _atoms(obj)
    raw = obj.get("states")
    if not isinstance(raw, list):
        raise FormatError('"states" must be a list')
    states = []
    for n, st in enumerate(raw):
        if not isinstance(st, dict) or not {"pos", "neg", "mass"} <= st.keys():
            raise FormatError(f"state {n} needs pos, neg and mass")
        pos, neg = st["pos"], st["neg"]
        if not all(isinstance(x, list) and all(isinstance(a, str) for a in x) for x in (pos, neg)):
            raise FormatError(f"state {n}: pos and neg must be lists of atoms")
        label = st.get("id", f"s{n}")
        try:
            mass = _rational_text(st["mass"], f"state {n}")
            states.append(State(label, frozenset(pos), frozenset(neg), mass))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"state {n}: {exc}") from None
    return ProbModel(tuple(atoms), tuple(states))


def model_to_json(m: ProbModel, full: bool = False) -> str:
    """Canonical form: states by literal-set index, mass-0 states dropped unless ``full``."""
    canon = canonicalize(m)
    states = []
    for i, st in enumerate(canon.states):
        if st.mass == 0 and not full:
            continue
        lits = BDState.from_index(i, canon.atoms).literals
        states.append({
            "pos": sorted(l.atom for l in lits if not l.negated),
            "neg": sorted(l.atom for l in lits if l.negated),
            "mass": format_rational(st.mass),
        })
    return dumps({"atoms": list(canon.atoms), "states": states})


def table_from_json(text) -> MonomialTable:
    obj = _load(text)
    atoms = _atoms(obj)
    raw = obj.get("monomials")
    if not isinstance(raw, dict):
        raise FormatError('"monomials" must be an object')
    try:
        values = {k: _rational_text(v, f"monomial {k}") for k, v in raw.items()}
        return MonomialTable(tuple(atoms), values)
    except (TypeError, ZeroDivisionError) as exc:
        raise FormatError(str(exc)) from None


def table_to_json(t: MonomialTable) -> str:
    return dumps({
        "atoms": list(t.atoms),
        "monomials": {k: format_rational(v) for k, v in t.keyed().items()},
    })


def pairs_from_json(text) -> list[tuple[Formula, Formula]]:
    """Read ``{"pairs": [["p & q", "p"], ...]}``."""
    obj = _load(text)
    raw = obj.get("pairs")
    if not isinstance(raw, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(s, str) for s in p) for p in raw
    ):
        raise FormatError('"pairs" must be a list of [formula, formula] string pairs')
    return [(parse(a), parse(b)) for a, b in raw]
