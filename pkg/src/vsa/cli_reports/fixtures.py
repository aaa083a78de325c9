"""
This module resolves the built-in fixtures and JSON specification files named on the command line
into algebras, Hopf algebras and actions.
"""

import json
import re
from pathlib import Path
from typing import Callable, Dict, List, Mapping, Union

from vsa.errors import StructureError
from vsa.hopf import (
    ActionSpec,
    HopfSpec,
    action_from_json,
    cyclic_group,
    direct_product,
    function_algebra,
    group_algebra,
    matrix_action,
    permutation_action,
    pullback_action,
    sigma_action,
    sweedler_hopf,
    symmetric_group,
    trivial_action,
    trivial_hopf,
)
from vsa.lie_superalgebra import LieSuperalgebraSpec
from vsa.scalars_linear import Parity, parse_scalar
from vsa.state_spaces import (
    AffineAlgebra,
    FreeDifferentialAlgebra,
    TensorAlgebra,
    VertexAlgebra,
    affine_osp12,
    affine_sl2,
    free_differential,
    heisenberg,
    heisenberg_double_algebra,
    neveu_schwarz,
    odd_pair,
    superspace,
)

ALGEBRA_FIXTURES = {
    "heisenberg-k<level>": "Rank-one Heisenberg algebra at the given level, e.g. heisenberg-k1",
    "abelian-odd-pair": "Affine algebra of the odd abelian pair (free fermions), level 1",
    "heisenberg-double-(p|q)": "Heisenberg double of a (p|q)-dimensional superspace, level 1",
    "affine-sl2-k<level>": "Affine sl2 at the given level",
    "affine-osp12-k<level>": "Affine osp(1|2) at the given level",
    "ns-<c>": "Neveu-Schwarz vertex superalgebra of central charge c, e.g. ns-1/2",
    "freediff-(p|q)": "Free commutative differential superalgebra on p even and q odd generators",
    "tensor-<left>+<right>": "Tensor product of two fixtures, e.g. tensor-heisenberg-k1+ns-1/2",
    "<file>.json": "An algebra specification file",
}

HOPF_FIXTURES: Dict[str, Callable[[], HopfSpec]] = {
    "hopf-trivial": trivial_hopf,
    "hopf-z2": lambda: group_algebra(cyclic_group(2)),
    "hopf-z3": lambda: group_algebra(cyclic_group(3)),
    "hopf-z2z2": lambda: group_algebra(direct_product(cyclic_group(2, "a"), cyclic_group(2, "b"))),
    "hopf-s3": lambda: group_algebra(symmetric_group(3)),
    "hopf-fun-z3": lambda: function_algebra(cyclic_group(3)),
    "hopf-sweedler": sweedler_hopf,
}


def _swap(cutoff: object) -> ActionSpec:
    return permutation_action(HOPF_FIXTURES["hopf-z2"](), free_differential(2, 0), cutoff, {"1": (0, 1), "g": (1, 0)})


def _sweedler_x_nonzero(cutoff: object) -> ActionSpec:
    # basis 1, e(-1).1, f(-1).1; not a representation, x acts nonzero on f(-1).1
    matrices = {
        "1": {0: [[1]], 1: [[1, 0], [0, 1]]},
        "g": {0: [[1]], 1: [[-1, 0], [0, 1]]},
        "x": {0: [[0]], 1: [[0, 0], [0, 1]]},
        "gx": {0: [[0]], 1: [[0, 0], [0, 1]]},
    }
    return matrix_action(sweedler_hopf(), free_differential(1, 1), 1, matrices, name="sweedler-x-nonzero")


ACTION_FIXTURES: Dict[str, Callable[[object], ActionSpec]] = {
    "sigma-ns": lambda cutoff: sigma_action(neveu_schwarz("1/2"), cutoff),
    "trivial-z2-heisenberg": lambda cutoff: trivial_action(HOPF_FIXTURES["hopf-z2"](), heisenberg(), cutoff),
    "swap-freediff": _swap,
    "s3-freediff": lambda cutoff: permutation_action(HOPF_FIXTURES["hopf-s3"](), free_differential(3, 0), cutoff),
    "z2z2-through-z2": lambda cutoff: pullback_action(
        _swap(cutoff), HOPF_FIXTURES["hopf-z2z2"](), {"1": "1", "b": "1", "a": "g", "ab": "g"}, name="z2z2-through-z2"
    ),
    "sweedler-trivial": lambda cutoff: trivial_action(sweedler_hopf(), free_differential(1, 1), cutoff),
    "sweedler-x-nonzero": _sweedler_x_nonzero,
}

ACTION_CUTOFFS = {
    "sigma-ns": "4",
    "trivial-z2-heisenberg": "2",
    "swap-freediff": "3",
    "s3-freediff": "3",
    "z2z2-through-z2": "2",
    "sweedler-trivial": "1",
    "sweedler-x-nonzero": "1",
}


def _read_json(path: Union[str, Path]) -> Mapping:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as error:
        raise StructureError(f"Cannot read {path}: {error}") from error
    except json.JSONDecodeError as error:
        raise StructureError(f"Malformed JSON in {path}: {error}") from error


def algebra_from_json(payload: Mapping) -> VertexAlgebra:
    """
    Builds an algebra from {"builtin": name}, {"kind": "affine", "lie": {...}, "level": "k"},
    {"kind": "ns", "c": "p/q"}, {"kind": "freediff", "generators": [[id, parity, degree], ...]}
    or {"kind": "tensor", "left": {...}, "right": {...}}.

    Error
    ------
    StructureError
        The payload names no known kind or misses a field.
    """
    try:
        if "builtin" in payload:
            return load_algebra(payload["builtin"])
        kind = payload["kind"]
        if kind == "affine":
            return AffineAlgebra(LieSuperalgebraSpec.from_json(payload["lie"]), payload.get("level", 1))
        if kind == "ns":
            return neveu_schwarz(payload["c"])
        if kind == "freediff":
            return FreeDifferentialAlgebra([tuple(entry) for entry in payload["generators"]], name=payload.get("name"))
        if kind == "tensor":
            return TensorAlgebra(algebra_from_json(payload["left"]), algebra_from_json(payload["right"]))
    except (KeyError, TypeError) as error:
        raise StructureError(f"Malformed algebra JSON: {error}") from error
    raise StructureError(f"Unknown algebra kind {payload.get('kind')!r}")


def load_algebra(name: str) -> VertexAlgebra:
    """
    Resolves a fixture name or a JSON file into an algebra.

    Examples
    --------
    >>> load_algebra("freediff-(1|1)").name
    'freediff-(1|1)'
    >>> [row.dim for row in load_algebra("heisenberg-k1").graded_dimension(4)]
    [1, 1, 2, 3, 5]

    """
    name = name.strip()
    if name.endswith(".json"):
        return algebra_from_json(_read_json(name))
    if name.startswith("tensor-") and "+" in name:
        left, right = name[len("tensor-") :].split("+", 1)
        return TensorAlgebra(load_algebra(left), load_algebra(right))
    match = re.fullmatch(r"heisenberg-k(-?[0-9/]+)", name)
    if match:
        return heisenberg(match.group(1))
    if name == "abelian-odd-pair":
        return odd_pair()
    match = re.fullmatch(r"heisenberg-double-\((\d+)\|(\d+)\)", name)
    if match:
        return heisenberg_double_algebra(superspace(int(match.group(1)), int(match.group(2))))
    match = re.fullmatch(r"affine-(sl2|osp12)-k(-?[0-9/]+)", name)
    if match:
        build = affine_sl2 if match.group(1) == "sl2" else affine_osp12
        return build(match.group(2))
    match = re.fullmatch(r"ns-(-?[0-9/]+)", name)
    if match:
        return neveu_schwarz(parse_scalar(match.group(1)))
    match = re.fullmatch(r"freediff-\((\d+)\|(\d+)\)", name)
    if match:
        return free_differential(int(match.group(1)), int(match.group(2)))
    raise StructureError(f"Unknown algebra fixture {name!r}; see `vsa fixtures list`")


def load_hopf(name: str) -> HopfSpec:
    """Resolves a Hopf fixture name or a HopfSpec JSON file."""
    if name.endswith(".json"):
        return HopfSpec.from_json(_read_json(name))
    if name not in HOPF_FIXTURES:
        raise StructureError(f"Unknown Hopf fixture {name!r}; see `vsa fixtures list`")
    return HOPF_FIXTURES[name]()


def load_action(name: str, cutoff: object = None) -> ActionSpec:
    """
    Resolves an action fixture, at its documented cutoff unless one is given, or an action JSON
    file {"hopf": name, "algebra": name, "cutoff": "p/q", "automorphisms" | "matrices": {...}}.
    """
    if name.endswith(".json"):
        payload = dict(_read_json(name))
        try:
            algebra, hopf = load_algebra(payload["algebra"]), load_hopf(payload["hopf"])
        except KeyError as error:
            raise StructureError(f"Action JSON needs 'algebra' and 'hopf': {error}") from error
        if cutoff is not None:
            payload["cutoff"] = cutoff
        return action_from_json(payload, algebra, hopf)
    if name not in ACTION_FIXTURES:
        raise StructureError(f"Unknown action fixture {name!r}; see `vsa fixtures list`")
    return ACTION_FIXTURES[name](ACTION_CUTOFFS[name] if cutoff is None else cutoff)


def parse_h(text: str) -> List[tuple]:
    """
    Reads the superspace 𝔥 for pbw-certify from JSON text or a file: [[id, parity, degree], ...].
    """
    try:
        payload = _read_json(text) if text.endswith(".json") else json.loads(text)
        return [(str(entry[0]), Parity.parse(entry[1]), entry[2] if len(entry) > 2 else 1) for entry in payload]
    except json.JSONDecodeError as error:
        raise StructureError(f"Malformed 𝔥 JSON: {error}") from error
    except (IndexError, TypeError) as error:
        raise StructureError(f"𝔥 entries must read [id, parity, degree]: {error}") from error


def fixture_listing() -> dict:
    return {
        "algebras": dict(ALGEBRA_FIXTURES),
        "hopf": sorted(HOPF_FIXTURES),
        "actions": {name: {"cutoff": ACTION_CUTOFFS[name]} for name in sorted(ACTION_FIXTURES)},
    }
