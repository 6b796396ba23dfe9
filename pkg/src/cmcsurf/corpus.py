"""Built-in fixture polynomials with expected analysis facts.

The test suite verifies every expected fact; the CLI exposes the entries
by name.  Expected mean curvature constants follow the package sign
convention (sphere written as r^2 - |x|^2 has H = +1/r).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .parser import VarConvention, parse


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    text: str
    dim: int
    vars_mode: str
    expected: dict = field(default_factory=dict)

    @property
    def convention(self) -> VarConvention:
        return VarConvention(self.vars_mode, self.dim)

    def polynomial(self):
        return parse(self.text, self.convention)


CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry(
        name="unit-sphere-3d",
        text="1 - x^2 - y^2 - z^2",
        dim=3,
        vars_mode="named",
        expected=dict(
            quadric_kind="sphere",
            radius_sq=Fraction(1),
            cmc_verdict="CMC_certified",
            c=Fraction(1),
            regularity="regular",
            leading_form="negative_semidefinite",
            compact=True,
        ),
    ),
    CorpusEntry(
        name="unit-sphere-4d",
        text="1 - x1^2 - x2^2 - x3^2 - x4^2",
        dim=4,
        vars_mode="indexed",
        expected=dict(
            quadric_kind="sphere",
            radius_sq=Fraction(1),
            cmc_verdict="CMC_certified",
            c=Fraction(1),
            regularity="regular",
            leading_form="negative_semidefinite",
            compact=True,
        ),
    ),
    CorpusEntry(
        name="sphere-radius-2",
        text="4 - x^2 - y^2 - z^2",
        dim=3,
        vars_mode="named",
        expected=dict(
            quadric_kind="sphere",
            radius_sq=Fraction(4),
            cmc_verdict="CMC_certified",
            c=Fraction(1, 2),
            regularity="regular",
            leading_form="negative_semidefinite",
            compact=True,
        ),
    ),
    CorpusEntry(
        name="cylinder-s1xr1",
        text="1 - x^2 - y^2",
        dim=3,
        vars_mode="named",
        expected=dict(
            quadric_kind="round_cylinder",
            k=1,
            radius_sq=Fraction(1),
            cmc_verdict="CMC_certified",
            c=Fraction(1, 2),
            regularity="regular",
            leading_form="negative_semidefinite",
            compact=False,
        ),
    ),
    CorpusEntry(
        name="cylinder-s1xr2",
        text="1 - x1^2 - x2^2",
        dim=4,
        vars_mode="indexed",
        expected=dict(
            quadric_kind="round_cylinder",
            k=1,
            radius_sq=Fraction(1),
            cmc_verdict="CMC_certified",
            c=Fraction(1, 3),
            regularity="regular",
            leading_form="negative_semidefinite",
            compact=False,
        ),
    ),
    CorpusEntry(
        name="cylinder-s2xr1",
        text="1 - x1^2 - x2^2 - x3^2",
        dim=4,
        vars_mode="indexed",
        expected=dict(
            quadric_kind="round_cylinder",
            k=2,
            radius_sq=Fraction(1),
            cmc_verdict="CMC_certified",
            c=Fraction(2, 3),
            regularity="regular",
            leading_form="negative_semidefinite",
            compact=False,
        ),
    ),
    CorpusEntry(
        name="hyperplane",
        text="z",
        dim=3,
        vars_mode="named",
        expected=dict(
            quadric_kind="hyperplane",
            cmc_verdict="Minimal",
            c=Fraction(0),
            regularity="regular",
            leading_form="indefinite",
            compact=False,
        ),
    ),
    CorpusEntry(
        name="paraboloid",
        text="z - x^2 - y^2",
        dim=3,
        vars_mode="named",
        expected=dict(
            quadric_kind="other",
            cmc_verdict="NotCMC",
            regularity="regular",
            leading_form="negative_semidefinite",
            compact=False,
        ),
    ),
    CorpusEntry(
        name="cone",
        text="x^2 + y^2 - z^2",
        dim=3,
        vars_mode="named",
        expected=dict(
            quadric_kind="other",
            cmc_verdict="NotCMC",
            regularity="singular",
            leading_form="indefinite",
            compact=False,
        ),
    ),
    CorpusEntry(
        name="saddle",
        text="x^2 - y^2 - 1",
        dim=3,
        vars_mode="named",
        expected=dict(
            quadric_kind="other",
            cmc_verdict="NotCMC",
            regularity="regular",
            leading_form="indefinite",
            compact=False,
        ),
    ),
    CorpusEntry(
        name="two-spheres",
        text="(x^2 + y^2 + z^2 - 1)*((x - 3)^2 + y^2 + z^2 - 1)",
        dim=3,
        vars_mode="named",
        expected=dict(
            quadric_kind=None,
            cmc_verdict="CMC_certified",
            c=Fraction(-1),
            regularity="regular",
            leading_form="positive_semidefinite",
            compact=True,
        ),
    ),
    CorpusEntry(
        name="empty",
        text="x^2 + 1",
        dim=3,
        vars_mode="named",
        expected=dict(
            quadric_kind="empty_variety",
            cmc_verdict="Inconclusive",
            regularity="empty_variety",
            leading_form="positive_semidefinite",
            compact=False,
        ),
    ),
)


def get_entry(name: str) -> CorpusEntry:
    for entry in CORPUS:
        if entry.name == name:
            return entry
    raise KeyError(f"no corpus entry named {name!r}")
