"""Registry of cuspidal labels.

A cuspidal label stands for an abstract supercuspidal representation ``rho`` of
``GL_r(D)``.  Each label records how far one lattice step moves the exponent
(in units of ``nu``), which label is its contragredient, and whether the label
itself carries a symplectic period.
"""

from __future__ import annotations

import os
import sys
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover - exercised only on 3.10
    import tomli as tomllib

__all__ = [
    "ConfigError",
    "CuspidalLabel",
    "DimClass",
    "Registry",
    "SpStatus",
    "default_registry",
    "delta_exponents",
    "load_registry",
    "SUPPORT_ENV_VAR",
]

SUPPORT_ENV_VAR = "SEGPERIOD_SUPPORT"


class ConfigError(ValueError):
    """Raised for inconsistent label specifications or registry files."""


class DimClass(str, Enum):
    CHARACTER = "character"
    HIGHER = "higher"


class SpStatus(str, Enum):
    DISTINGUISHED = "distinguished"
    NOT_DISTINGUISHED = "not_distinguished"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CuspidalLabel:
    """A supercuspidal building block of ``GL_r(D)``."""

    id: str
    group_size: int
    step: int
    dual_id: str
    sp_status: SpStatus
    dim_class: DimClass | None = None

    @property
    def is_character(self) -> bool:
        return self.group_size == 1 and self.dim_class is DimClass.CHARACTER

    @property
    def is_higher(self) -> bool:
        return self.group_size == 1 and self.dim_class is DimClass.HIGHER

    @property
    def is_self_dual(self) -> bool:
        return self.dual_id == self.id

    def kind(self) -> tuple[int, DimClass | None, int]:
        """Data that label renaming must preserve."""
        return (self.group_size, self.dim_class, self.step)


def delta_exponents(r: int, s: int) -> tuple[int, int]:
    """Exponents of ``|det|_D`` in the modulus character of ``P_{r,s}``.

    The modulus character restricted to the Levi ``GL_r x GL_s`` is
    ``|det g1|^s |det g2|^(-r)``.
    """
    if r < 1 or s < 1:
        raise ValueError(f"block sizes must be positive, got ({r}, {s})")
    return (s, -r)


def _coerce_status(value: Any, label_id: str) -> SpStatus | None:
    if value is None:
        return None
    try:
        return SpStatus(str(value))
    except ValueError:
        raise ConfigError(f"label {label_id!r}: unknown sp_status {value!r}") from None


def _coerce_class(value: Any, label_id: str) -> DimClass | None:
    if value is None:
        return None
    try:
        return DimClass(str(value))
    except ValueError:
        raise ConfigError(f"label {label_id!r}: unknown class {value!r}") from None


def _build_label(
    label_id: str,
    group: int,
    dim_class: DimClass | None,
    step: int | None,
    sp_status: SpStatus | None,
    dual_id: str | None,
    even_cuspidal_flag: bool,
) -> CuspidalLabel:
    """Fill defaults and enforce the per-size invariants."""
    if not label_id or not isinstance(label_id, str):
        raise ConfigError("label id must be a non-empty string")
    if not isinstance(group, int) or group < 1:
        raise ConfigError(f"label {label_id!r}: group must be a positive integer")
    if step is not None and (not isinstance(step, int) or step < 1):
        raise ConfigError(f"label {label_id!r}: step must be a positive integer")

    def fixed(expected_step: int, expected_status: SpStatus) -> tuple[int, SpStatus]:
        if step is not None and step != expected_step:
            raise ConfigError(
                f"label {label_id!r}: step {step} inconsistent with its class "
                f"(expected {expected_step})"
            )
        if sp_status is not None and sp_status is not expected_status:
            raise ConfigError(
                f"label {label_id!r}: sp_status {sp_status.value} inconsistent "
                f"with its class (expected {expected_status.value})"
            )
        return expected_step, expected_status

    if group == 1:
        if dim_class is None:
            raise ConfigError(f"label {label_id!r}: class is required when group = 1")
        if dim_class is DimClass.CHARACTER:
            s, st = fixed(2, SpStatus.DISTINGUISHED)
        else:
            s, st = fixed(1, SpStatus.NOT_DISTINGUISHED)
    else:
        if dim_class is not None:
            raise ConfigError(f"label {label_id!r}: class only applies when group = 1")
        if group == 2:
            if even_cuspidal_flag:
                s, st = fixed(1, SpStatus.NOT_DISTINGUISHED)
            else:
                s, st = fixed(1, SpStatus.UNKNOWN)
        elif group == 4 and even_cuspidal_flag:
            s, st = step or 1, SpStatus.NOT_DISTINGUISHED
            if sp_status is not None and sp_status is not st:
                raise ConfigError(
                    f"label {label_id!r}: even-size cuspidal labels are not distinguished"
                )
        elif group == 4:
            s, st = step or 1, SpStatus.UNKNOWN
            if sp_status is not None and sp_status is not st:
                raise ConfigError(
                    f"label {label_id!r}: status of an even-size cuspidal label is "
                    "unknown when the even-cuspidal flag is off"
                )
        else:
            s, st = step or 1, sp_status or SpStatus.UNKNOWN
    return CuspidalLabel(
        id=label_id,
        group_size=group,
        step=s,
        dual_id=dual_id or label_id,
        sp_status=st,
        dim_class=dim_class,
    )


class Registry(Mapping[str, CuspidalLabel]):
    """Immutable id -> label mapping with a symmetric dual map."""

    def __init__(self, labels: Iterable[CuspidalLabel] = (), *, even_cuspidal_flag: bool = True):
        self.even_cuspidal_flag = even_cuspidal_flag
        self._labels: dict[str, CuspidalLabel] = {}
        for label in labels:
            if label.id in self._labels:
                raise ConfigError(f"duplicate label id {label.id!r}")
            self._labels[label.id] = label
        self._check_duals()

    @classmethod
    def from_specs(
        cls, specs: Iterable[Mapping[str, Any]], *, even_cuspidal_flag: bool = True
    ) -> Registry:
        """Build a registry from plain dictionaries (file or API input).

        Recognized keys: ``id``, ``group`` (alias ``r``), ``class``, ``step``,
        ``dual``, ``sp_status``.  A ``dual`` link is installed on both ends.
        """
        built: dict[str, CuspidalLabel] = {}
        duals: dict[str, str] = {}
        for spec in specs:
            unknown = set(spec) - {"id", "group", "r", "class", "step", "dual", "sp_status"}
            label_id = spec.get("id")
            if unknown:
                raise ConfigError(f"label {label_id!r}: unknown fields {sorted(unknown)}")
            if label_id in built:
                raise ConfigError(f"duplicate label id {label_id!r}")
            group = spec.get("group", spec.get("r", 1))
            label = _build_label(
                label_id,
                group,
                _coerce_class(spec.get("class"), label_id),
                spec.get("step"),
                _coerce_status(spec.get("sp_status"), label_id),
                None,
                even_cuspidal_flag,
            )
            built[label_id] = label
            if spec.get("dual") is not None:
                duals[label_id] = str(spec["dual"])
        for a, b in duals.items():
            if b not in built:
                raise ConfigError(f"label {a!r}: dual {b!r} is not registered")
            if duals.get(b, a) != a:
                raise ConfigError(f"labels {a!r} and {b!r} disagree on their dual link")
        for a, b in list(duals.items()):
            duals.setdefault(b, a)
        labels = [
            CuspidalLabel(
                id=lab.id,
                group_size=lab.group_size,
                step=lab.step,
                dual_id=duals.get(lab.id, lab.id),
                sp_status=lab.sp_status,
                dim_class=lab.dim_class,
            )
            for lab in built.values()
        ]
        return cls(labels, even_cuspidal_flag=even_cuspidal_flag)

    def register(self, spec: Mapping[str, Any]) -> tuple[Registry, CuspidalLabel]:
        """Return an extended registry together with the new label.

        A dual named in ``spec`` must already be registered; its own dual link
        is redirected to the new label.
        """
        specs = [self._as_spec(lab) for lab in self._labels.values()]
        spec = dict(spec)
        dual = spec.get("dual")
        if dual is not None:
            if dual not in self._labels:
                raise ConfigError(f"label {spec.get('id')!r}: dual {dual!r} is not registered")
            other = self._labels[dual]
            if not other.is_self_dual:
                raise ConfigError(f"label {dual!r} already has dual {other.dual_id!r}")
            for s in specs:
                if s["id"] == dual:
                    s["dual"] = spec["id"]
        new = Registry.from_specs([*specs, spec], even_cuspidal_flag=self.even_cuspidal_flag)
        return new, new[spec["id"]]

    @staticmethod
    def _as_spec(label: CuspidalLabel) -> dict[str, Any]:
        spec: dict[str, Any] = {
            "id": label.id,
            "group": label.group_size,
            "step": label.step,
            "sp_status": label.sp_status.value,
        }
        if label.dim_class is not None:
            spec["class"] = label.dim_class.value
        if not label.is_self_dual:
            spec["dual"] = label.dual_id
        return spec

    def _check_duals(self) -> None:
        for label in self._labels.values():
            other = self._labels.get(label.dual_id)
            if other is None:
                raise ConfigError(f"label {label.id!r}: dual {label.dual_id!r} is not registered")
            if other.dual_id != label.id:
                raise ConfigError(f"dual map is not an involution at {label.id!r}")
            if other.kind() != label.kind() or other.sp_status is not label.sp_status:
                raise ConfigError(
                    f"labels {label.id!r} and {other.id!r} are dual but differ in "
                    "size, class, step or status"
                )

    def dual(self, label: CuspidalLabel) -> CuspidalLabel:
        return self._labels[label.dual_id]

    def __getitem__(self, key: str) -> CuspidalLabel:
        return self._labels[key]

    def __iter__(self) -> Iterator[str]:
        return iter(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __repr__(self) -> str:
        return f"Registry({sorted(self._labels)})"


_DEFAULT_SPECS: tuple[dict[str, Any], ...] = (
    {"id": "chi", "group": 1, "class": "character"},
    {"id": "mu", "group": 1, "class": "higher"},
    {"id": "rho2", "group": 2},
    {"id": "rho3", "group": 3},
)


def default_registry(*, even_cuspidal_flag: bool = True) -> Registry:
    """Labels ``chi``, ``mu``, ``rho2`` and ``rho3`` (status unknown)."""
    return Registry.from_specs(_DEFAULT_SPECS, even_cuspidal_flag=even_cuspidal_flag)


def parse_registry_text(text: str) -> Registry:
    """Parse a TOML registry.

    Either ``[[label]]`` array entries or one top-level table per label (the
    table name is the default id).  An optional top-level boolean
    ``even_cuspidal_flag`` toggles the even-size cuspidal convention.
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"malformed registry file: {exc}") from None
    flag = data.pop("even_cuspidal_flag", True)
    if not isinstance(flag, bool):
        raise ConfigError("even_cuspidal_flag must be a boolean")
    specs: list[dict[str, Any]] = []
    for key, value in data.items():
        if key == "label" and isinstance(value, list):
            specs.extend(dict(v) for v in value)
        elif isinstance(value, dict):
            spec = dict(value)
            spec.setdefault("id", key)
            specs.append(spec)
        else:
            raise ConfigError(f"unexpected top-level key {key!r} in registry file")
    if not specs:
        raise ConfigError("registry file declares no labels")
    return Registry.from_specs(specs, even_cuspidal_flag=flag)


def load_registry(path: str | os.PathLike[str] | None = None) -> Registry:
    """Load a registry from ``path``, the environment fallback, or the default."""
    if path is None:
        path = os.environ.get(SUPPORT_ENV_VAR) or None
    if path is None:
        return default_registry()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read registry file {str(path)!r}: {exc.strerror}") from None
    return parse_registry_text(text)
