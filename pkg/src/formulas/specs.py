"""
Family Specs

Compact strings naming a graph family member:

    path:7                      P_7
    cmp:3,2,1                   K_{3,2,1}
    corona:(path:3)x(complete:2)
    box:(star:2)x(star:2)
    Kn_box_Km:4,4   Kn_box_K3:5   star_box_star:2,1   G_box_K2:(cycle:5)
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from graphs.families import FamilyKind, complete, family, star
from graphs.graph import Graph
from graphs.operations import cartesian_product, corona_product


class FamilySpecError(ValueError):
    """A family-spec string or parameter list is malformed"""


class SpecKind(Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    EMPTY = "empty"
    STAR = "star"
    COMPLETE_BIPARTITE = "complete_bipartite"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    HYPERCUBE = "hypercube"
    HAMMING = "hamming"
    CORONA = "corona"
    BOX = "box"
    G_BOX_K2 = "G_box_K2"
    KN_BOX_KM = "Kn_box_Km"
    KN_BOX_K3 = "Kn_box_K3"
    STAR_BOX_STAR = "star_box_star"


ALIASES = {
    "cmp": SpecKind.COMPLETE_MULTIPARTITE,
    "bip": SpecKind.COMPLETE_BIPARTITE,
    "cube": SpecKind.HYPERCUBE,
}
SHORT_NAMES = {SpecKind.COMPLETE_MULTIPARTITE: "cmp"}

# (number of integer params or None for "one or more", number of sub-specs)
ARITY = {
    SpecKind.PATH: (1, 0),
    SpecKind.CYCLE: (1, 0),
    SpecKind.COMPLETE: (1, 0),
    SpecKind.EMPTY: (1, 0),
    SpecKind.STAR: (1, 0),
    SpecKind.COMPLETE_BIPARTITE: (2, 0),
    SpecKind.COMPLETE_MULTIPARTITE: (None, 0),
    SpecKind.HYPERCUBE: (1, 0),
    SpecKind.HAMMING: (2, 0),
    SpecKind.CORONA: (0, 2),
    SpecKind.BOX: (0, 2),
    SpecKind.G_BOX_K2: (0, 1),
    SpecKind.KN_BOX_KM: (2, 0),
    SpecKind.KN_BOX_K3: (1, 0),
    SpecKind.STAR_BOX_STAR: (2, 0),
}


@dataclass(frozen=True)
class FamilySpec:
    kind: SpecKind
    params: Tuple[int, ...] = ()
    factors: Tuple["FamilySpec", ...] = ()

    def __post_init__(self):
        count, sub = ARITY[self.kind]
        if len(self.factors) != sub:
            raise FamilySpecError(f"{self.kind.value} takes {sub} sub-spec(s), got {len(self.factors)}")
        if count is None:
            if not self.params:
                raise FamilySpecError(f"{self.kind.value} needs at least one parameter")
        elif len(self.params) != count:
            raise FamilySpecError(f"{self.kind.value} takes {count} parameter(s), got {len(self.params)}")

    def to_string(self) -> str:
        name = SHORT_NAMES.get(self.kind, self.kind.value)
        if self.factors:
            return f"{name}:" + "x".join(f"({factor.to_string()})" for factor in self.factors)
        return f"{name}:" + ",".join(str(p) for p in self.params)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "params": list(self.params),
            "factors": [factor.to_dict() for factor in self.factors],
        }

    def __str__(self) -> str:
        return self.to_string()


def _resolve_kind(name: str) -> SpecKind:
    key = name.strip().lower()
    if key in ALIASES:
        return ALIASES[key]
    for kind in SpecKind:
        if kind.value.lower() == key:
            return kind
    raise FamilySpecError(f"unknown family '{name}'")


def _split_groups(text: str) -> List[str]:
    """'(a)x(b)' -> ['a', 'b'], honouring nested parentheses"""
    groups: List[str] = []
    i = 0
    while i < len(text):
        if text[i] != "(":
            raise FamilySpecError(f"expected '(' at position {i} in '{text}'")
        depth, j = 0, i
        while j < len(text):
            if text[j] == "(":
                depth += 1
            elif text[j] == ")":
                depth -= 1
                if depth == 0:
                    break
            j += 1
        if depth != 0:
            raise FamilySpecError(f"unbalanced parentheses in '{text}'")
        groups.append(text[i + 1:j])
        i = j + 1
        if i < len(text):
            if text[i] not in "xX":
                raise FamilySpecError(f"expected 'x' between factors in '{text}'")
            i += 1
            if i == len(text):
                raise FamilySpecError(f"missing factor after 'x' in '{text}'")
    return groups


def parse_family_spec(text: str) -> FamilySpec:
    """
    Parse a compact family string

    Raises:
        FamilySpecError: on unknown names, bad parameters or bad nesting
    """
    text = text.strip()
    if ":" not in text:
        raise FamilySpecError(f"family spec '{text}' must look like name:params")
    name, rest = text.split(":", 1)
    kind = _resolve_kind(name)
    rest = rest.replace(" ", "")
    if ARITY[kind][1]:
        factors = tuple(parse_family_spec(group) for group in _split_groups(rest))
        return FamilySpec(kind, (), factors)
    try:
        params = tuple(int(p) for p in rest.split(",")) if rest else ()
    except ValueError:
        raise FamilySpecError(f"parameters of '{text}' must be integers")
    return FamilySpec(kind, params)


def construct(spec: FamilySpec) -> Graph:
    """
    The graph a spec names

    Raises:
        GraphInputError: if a parameter is below the family minimum
    """
    kind = spec.kind
    if kind is SpecKind.CORONA:
        return corona_product(construct(spec.factors[0]), construct(spec.factors[1]))
    if kind is SpecKind.BOX:
        return cartesian_product(construct(spec.factors[0]), construct(spec.factors[1]))
    if kind is SpecKind.G_BOX_K2:
        return cartesian_product(construct(spec.factors[0]), complete(2))
    if kind is SpecKind.KN_BOX_KM:
        return cartesian_product(complete(spec.params[0]), complete(spec.params[1]))
    if kind is SpecKind.KN_BOX_K3:
        return cartesian_product(complete(spec.params[0]), complete(3))
    if kind is SpecKind.STAR_BOX_STAR:
        return cartesian_product(star(spec.params[0]), star(spec.params[1]))
    return family(FamilyKind(kind.value), spec.params)
